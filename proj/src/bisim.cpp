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
#include "fzbisim/bisim.hpp"

#include <stdexcept>
#include <utility>

namespace fzb {

BisimResult greatest_bisimulation(const FuzzyGraph& g1, const FuzzyGraph& g2,
                                  const EngineOptions& options) {
  if (g1.vertices().empty() || g2.vertices().empty()) {
    throw std::invalid_argument("greatest_bisimulation: empty graph");
  }
  DisjointUnion du = disjoint_union(g1, g2);
  BisimResult result{FuzzyRelation(g1.vertices(), g2.vertices()),
                     compute_fuzzy_partition(du.graph, options),
                     std::move(du.rename1), std::move(du.rename2)};
  FuzzyRelation on_union = partition_to_relation(result.partition);
  for (const std::string& x : g1.vertices()) {
    const std::string& ux = result.rename1.at(x);
    for (const std::string& y : g2.vertices()) {
      Degree d = on_union.at(ux, result.rename2.at(y));
      if (!d.is_zero()) result.relation.set(x, y, d);
    }
  }
  return result;
}

}  // namespace fzb
