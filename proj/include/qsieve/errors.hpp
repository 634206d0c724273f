// Copyright 2026 The qsieve Authors.
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

#ifndef QSIEVE_ERRORS_HPP_
#define QSIEVE_ERRORS_HPP_

#include <stdexcept>

namespace qsieve {

// Thrown when a request exceeds a configured size cap (enumeration ground
// size, cyclotomic order).  Caps exist so a typo cannot start a
// multi-gigabyte enumeration; callers may raise them explicitly.
class size_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qsieve

#endif  // QSIEVE_ERRORS_HPP_
