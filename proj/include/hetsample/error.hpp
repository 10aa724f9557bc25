/*
 * Copyright (c) 2026, The hetsample Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hetsample {

// All library failures derive from Error. The CLI maps the subclasses onto
// exit codes (I/O and parse failures 1, configuration 2, data mismatch 3).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input line, unknown type label, endpoint types that do not fit
// the declared edge type. Carries the 1-based line number when known.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Edge endpoint that names an undeclared node.
class ReferenceError : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

class DuplicateError : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

// Unknown node id, type id or label at query time.
class LookupError : public Error {
 public:
  using Error::Error;
};

// Invalid numeric parameter (ratio out of range, infeasible edge count, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Invalid or incomplete importance/run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Quantity undefined for the given input (empty sample, edgeless graph).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two inputs that were expected to agree (original vs sample) do not.
class MismatchError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace hetsample
