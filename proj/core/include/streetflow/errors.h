// Copyright 2025 The streetflow Authors
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

#ifndef STREETFLOW_ERRORS_H_
#define STREETFLOW_ERRORS_H_

#include <stdexcept>
#include <string>

namespace streetflow {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Mixing elements of Q(sqrt(d)) and Q(sqrt(d')) with d != d'.
class FieldMismatchError : public Error {
 public:
  explicit FieldMismatchError(const std::string& what) : Error(what) {}
};

// An exact tie that a generic foliation cannot produce (a candidate measure
// hit 0 or m, two comparison points coincide, an orbit landed on a cut).
class NonGenericityError : public Error {
 public:
  explicit NonGenericityError(const std::string& what) : Error(what) {}
};

// The broken isometry was evaluated at one of its finitely many cut points.
class CutPointError : public NonGenericityError {
 public:
  CutPointError(const std::string& what, long step)
      : NonGenericityError(what), step_(step) {}
  long step() const { return step_; }

 private:
  long step_;
};

// Malformed input: a precondition or data invariant does not hold.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// A configured depth or size bound was exceeded.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(what) {}
};

// A structural property the theory guarantees failed to hold; always a bug.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace streetflow

#endif  // STREETFLOW_ERRORS_H_
