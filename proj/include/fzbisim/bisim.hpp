/*
 * Copyright 2026 the fzbisim authors
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

#include <map>
#include <string>

#include "fzbisim/engine.hpp"
#include "fzbisim/graph.hpp"
#include "fzbisim/relation.hpp"

namespace fzb {

struct BisimResult {
  /// Greatest fuzzy bisimulation; rows are vertices of the first graph,
  /// columns of the second, original names.
  FuzzyRelation relation;
  /// The partition computed on the disjoint union (prefixed ids), kept
  /// for inspection.
  Block partition;
  std::map<std::string, std::string> rename1;  // original id -> union id
  std::map<std::string, std::string> rename2;
};

/// Computes the greatest fuzzy bisimulation between two graphs by
/// partitioning their disjoint union and restricting the induced
/// equivalence to pairs across the two sides.  O(m log l log n + n^2).
/// Throws std::invalid_argument when either graph is empty.
BisimResult greatest_bisimulation(const FuzzyGraph& g1, const FuzzyGraph& g2,
                                  const EngineOptions& options = {});

}  // namespace fzb
