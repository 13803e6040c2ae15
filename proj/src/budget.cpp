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

#include "equidim/budget.hpp"

#include <string>

#include "equidim/errors.hpp"

namespace equidim {

void require_order(int order, int limit, std::string_view what) {
  if (order > limit) {
    throw BudgetExceeded("exact search out of budget: " + std::string(what) +
                         " on order " + std::to_string(order) +
                         " exceeds cap " + std::to_string(limit));
  }
}

}  // namespace equidim
