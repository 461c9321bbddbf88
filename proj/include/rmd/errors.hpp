// Copyright 2026 The rmd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RMD_ERRORS_HPP_
#define RMD_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rmd {

// Bad parameters supplied by the caller (dimension mismatch, n < 2, beta <= 0).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A run-time contract was broken while an algorithm was executing, e.g. a
// loss oracle emitted a vector exceeding its declared bound.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An object was used in a state that does not permit the call (incomplete
// trace, nonadaptive state stepped past its horizon).
class InvalidState : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// File could not be opened or parsed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rmd

#endif  // RMD_ERRORS_HPP_
