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

#include <string>

#include "fzbisim/graph.hpp"
#include "fzbisim/relation.hpp"

namespace fzb {

/// Outcome of checking the three bisimulation conditions for a concrete
/// relation.  When a condition fails, the report carries the witnessing
/// pair, the involved symbol, the target vertex of the edge condition,
/// and the slack (how far the inequality is exceeded).
struct BisimCheckReport {
  enum class Condition { none, vertex_label, forth, back };

  bool holds = true;
  Condition condition = Condition::none;
  std::string x, xp;   // witness pair (x from g1, x' from g2)
  std::string symbol;  // vertex label p or edge label r
  std::string y;       // edge origin side target (forth: y in g1, back: y' in g2)
  Degree slack;        // amount by which the bound is exceeded

  std::string describe() const;
};

/// Checks whether z is a fuzzy bisimulation between g1 and g2 under
/// Goedel semantics:
///  (1) z(x,x') never exceeds the biresiduum of any label membership,
///  (2) every edge x -r-> y is matched by some y' with
///      min(z(x,x'), E(x,r,y)) <= min(E'(x',r,y'), z(y,y')),
///  (3) the symmetric back condition.
/// The relation's domains must equal the vertex sets of g1 and g2.
BisimCheckReport check_bisimulation(const FuzzyGraph& g1, const FuzzyGraph& g2,
                                    const FuzzyRelation& z);

enum class SweepOrder { forward, backward };

/// Reference implementation of the greatest fuzzy bisimulation: starts
/// from the vertex-label bound and repeatedly lowers entries until the
/// edge conditions hold.  Exponential care is not needed; the intent is
/// a small, obviously correct oracle.  The result is independent of the
/// sweep order.  When sweeps is non-null it receives the number of full
/// passes performed.
FuzzyRelation greatest_bisim_fixpoint(const FuzzyGraph& g1,
                                      const FuzzyGraph& g2,
                                      SweepOrder order = SweepOrder::forward,
                                      int* sweeps = nullptr);

/// greatest_bisim_fixpoint of a graph with itself.
FuzzyRelation greatest_autobisim_fixpoint(
    const FuzzyGraph& g, SweepOrder order = SweepOrder::forward);

}  // namespace fzb
