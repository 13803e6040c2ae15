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

#ifndef EQUIDIM_BUDGET_HPP_
#define EQUIDIM_BUDGET_HPP_

#include <algorithm>
#include <cstdint>
#include <string_view>

namespace equidim {

// Hard caps. Exact searches refuse larger instances instead of running
// unbounded.
inline constexpr int kMaxExactOrder = 28;  // cover / structured search
inline constexpr int kMaxScanOrder = 20;   // plain subset scans (ξ, ξ_t)
inline constexpr std::uint64_t kMaxCoversVisited = std::uint64_t{1} << 24;

// Per-call instance caps. Callers may only lower the defaults.
struct Budget {
  int exact_order = kMaxExactOrder;
  int scan_order = kMaxScanOrder;
  std::uint64_t max_covers = kMaxCoversVisited;

  // Caps every order limit at `n`; never raises one above its hard cap.
  static Budget capped(int n) {
    Budget b;
    b.exact_order = std::min(b.exact_order, n);
    b.scan_order = std::min(b.scan_order, n);
    return b;
  }
};

// Throws BudgetExceeded when `order` is above `limit`.
void require_order(int order, int limit, std::string_view what);

}  // namespace equidim

#endif  // EQUIDIM_BUDGET_HPP_
