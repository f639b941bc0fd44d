// Copyright 2026 The bme Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BME_ERROR_H_
#define BME_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bme {

// Base of every error the library throws. The C API maps each subclass to a
// distinct status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument (vertex index, family parameter, range) failed.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// The requested edit or construction would leave the class of simple graphs,
// or the input graph does not have the required structure.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A documented size limit was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Numerical routine did not reach the requested accuracy within its budget.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, double partial_estimate)
      : Error(what), partial_estimate_(partial_estimate) {}
  double partial_estimate() const { return partial_estimate_; }

 private:
  double partial_estimate_;
};

}  // namespace bme

#endif  // BME_ERROR_H_
