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

#ifndef QSIEVE_ROTATION_HPP_
#define QSIEVE_ROTATION_HPP_

#include "qsieve/configuration.hpp"
#include "qsieve/matching.hpp"
#include "qsieve/triangulation.hpp"

namespace qsieve {

// Cyclic shift i -> i + s on the respective ground set (1-based, wrapping),
// any integer s including negatives.  Results are re-canonicalized, so
// rotating preserves canonical form; rotation is a bijection on each family
// and preserves the noncrossing property (cyclic rotation maps cyclically
// interleaved pairs to cyclically interleaved pairs).

// Ground set {1, ..., m}; the empty ground set maps to itself.
Configuration rotate_configuration(const Configuration& c, int s);

// Ground set {1, ..., 2n}.
Matching rotate_matching(const Matching& m, int s);

// Polygon vertices {1, ..., gon}.
Triangulation rotate_triangulation(const Triangulation& t, int s);

}  // namespace qsieve

#endif  // QSIEVE_ROTATION_HPP_
