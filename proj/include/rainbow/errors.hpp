// Copyright 2026 The rainbowflip Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Three input points are collinear, or a coordinate is out of range.
class GeneralPositionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A flip was requested that is not an arc of the flip graph.
class IllegalFlip : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters for which no construction is known. Carries a reason so
// callers can distinguish parity obstructions from plain gaps.
class Unsupported : public std::invalid_argument {
 public:
  enum class Reason { kOutOfRange, kParity };

  Unsupported(Reason reason, const std::string& what)
      : std::invalid_argument(what), reason_(reason) {}

  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

// A search stopped on its node or time budget without a verdict.
class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Unsupported ParityRefusal(const std::string& what) {
  return Unsupported(Unsupported::Reason::kParity, what);
}

inline Unsupported OutOfRange(const std::string& what) {
  return Unsupported(Unsupported::Reason::kOutOfRange, what);
}

}  // namespace rainbow
