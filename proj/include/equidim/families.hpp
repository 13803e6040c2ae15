// Copyright 2026 The equidim Authors
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

#ifndef EQUIDIM_FAMILIES_HPP_
#define EQUIDIM_FAMILIES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "equidim/graph.hpp"

namespace equidim {

enum class Family {
  kEmpty,                 // N_n: n isolated vertices
  kPath,                  // P_n: 0-1-...-(n-1)
  kCycle,                 // C_n: path plus (n-1, 0); n >= 3
  kWheel,                 // W_n: hub 0, rim cycle 1..n-1; n >= 4
  kComplete,              // K_n
  kCompleteBipartite,     // K_{r,s}: parts 0..r-1 and r..r+s-1; 1 <= r <= s
  kCompleteMultipartite,  // K_{n_1..n_p}: consecutive blocks; p >= 3
  kBistar,                // K_2(r,s): centres 0,1; leaves of 0 are 2..r+1,
                          // leaves of 1 follow; 1 <= r <= s
  kHypercube,             // Q_n: vertex = n-bit string, flip one bit
  kFish,                  // 6-vertex graph with Ĝ = {4-5, 4-6}
  kChordedPath,           // P_7 plus chord 3-5
  kNonlinear,             // 8-vertex triangle with pendants, slope change
  kK5CoronaN1,            // K_5 with one pendant per vertex
  kForwardExample,        // 6-vertex forward-pair illustration
  kC3CoronaP2,            // C_3 ⊙ P_2, 9 vertices
};

// A named family plus its integer parameters.
struct FamilySpec {
  Family family;
  std::vector<int> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Canonical CLI name ("path", "bipartite", "fish", ...).
std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
// Every family, in enum order.
std::vector<Family> all_families();

// Short human form such as "K_{2,3}" or "fish".
std::string describe(const FamilySpec& spec);

// Throws PreconditionError when the parameters are invalid for the family.
void validate(const FamilySpec& spec);

// The canonical graph. Hard-coded example graphs keep the 1-based figure
// numbering as vertex labels.
Graph generate(const FamilySpec& spec);

}  // namespace equidim

#endif  // EQUIDIM_FAMILIES_HPP_
