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
#include <set>
#include <string>
#include <vector>

#include "fzbisim/block.hpp"
#include "fzbisim/graph.hpp"
#include "fzbisim/relation.hpp"

// Fixtures shared between the unit tests and the acceptance suite.
namespace fzbtest {

inline fzb::Degree deg(std::string_view s) {
  return fzb::Degree::parse(s).value();
}

// Three-vertex graph: one source with two successors of close labels.
inline fzb::FuzzyGraph pair_g1() {
  return fzb::parse_graph(
      "vertex a p:1\n"
      "vertex b p:0.7\n"
      "vertex c p:0.8\n"
      "edge a r b 0.6\n"
      "edge a r c 1\n");
}

// Mirror of pair_g1 with the edge weights swapped between successors.
inline fzb::FuzzyGraph pair_g2() {
  return fzb::parse_graph(
      "vertex d p:1\n"
      "vertex e p:0.7\n"
      "vertex f p:0.8\n"
      "edge d r e 1\n"
      "edge d r f 0.8\n");
}

// The two pair graphs as one six-vertex graph with the names kept.
inline fzb::FuzzyGraph six_vertex_graph() {
  return fzb::parse_graph(
      "vertex a p:1\n"
      "vertex b p:0.7\n"
      "vertex c p:0.8\n"
      "vertex d p:1\n"
      "vertex e p:0.7\n"
      "vertex f p:0.8\n"
      "edge a r b 0.6\n"
      "edge a r c 1\n"
      "edge d r e 1\n"
      "edge d r f 0.8\n");
}

inline constexpr const char* kSixVertexPartition =
    "{{{a}_1,{d}_1}_0.7,{{b,e}_1,{c,f}_1}_0.7}_0";

// The refinement trace the engine produces for six_vertex_graph().
inline constexpr const char* kSixVertexTrace =
    "d=0 refine1a\n"
    "d=0 split {a,b,c,d,e,f} -> {a,d} | {b,c,e,f}\n"
    "d=0 refine2 X={a,d}\n"
    "d=0.6 refine1b events=1\n"
    "d=0.7 refine1b events=2\n"
    "d=0.7 split {b,c,e,f} -> {b,e} | {c,f}\n"
    "d=0.7 refine2 X={c,f}\n"
    "d=0.7 split {a,d} -> {a} | {d}\n"
    "d=0.7 refine2 X={a}\n"
    "d=0.8 refine1b events=3\n";

// Seven-element reference tree {{{a,b}_1,{c}_1}_0.3,{{d}_1,{e,f}_1}_0.4,{g}_1}_0.
inline fzb::Block seven_block() {
  return fzb::Block::fuzzy(
      fzb::Degree::zero(),
      {fzb::Block::fuzzy(deg("0.3"), {fzb::Block::crisp({"a", "b"}),
                                      fzb::Block::crisp({"c"})}),
       fzb::Block::fuzzy(deg("0.4"), {fzb::Block::crisp({"d"}),
                                      fzb::Block::crisp({"e", "f"})}),
       fzb::Block::crisp({"g"})});
}

// The fuzzy equivalence relation matching seven_block().
inline fzb::FuzzyRelation seven_relation() {
  std::vector<std::string> domain{"a", "b", "c", "d", "e", "f", "g"};
  fzb::FuzzyRelation f = fzb::FuzzyRelation::square(domain);
  for (const std::string& v : domain) f.set(v, v, fzb::Degree::one());
  auto both = [&](const char* x, const char* y, const char* d) {
    f.set(x, y, deg(d));
    f.set(y, x, deg(d));
  };
  both("a", "b", "1");
  both("a", "c", "0.3");
  both("b", "c", "0.3");
  both("d", "e", "0.4");
  both("d", "f", "0.4");
  both("e", "f", "1");
  return f;
}

// Coarsest classic bisimulation partition of a graph whose degrees are
// all 1: plain signature refinement iterated to a fixpoint.  Slow and
// simple on purpose; used to validate the two-valued degenerate case.
inline fzb::CrispPartition crisp_bisim_partition(const fzb::FuzzyGraph& g) {
  std::map<std::string, std::string> cls;
  for (const std::string& v : g.vertices()) {
    std::string k;
    for (const auto& [p, d] : g.labels(v)) {
      k += p;
      k += ',';
    }
    cls[v] = k;
  }
  for (;;) {
    std::map<std::string, std::string> sig;
    for (const std::string& v : g.vertices()) sig[v] = cls.at(v) + "|";
    for (const std::string& v : g.vertices()) {
      std::set<std::string> moves;
      for (const fzb::FuzzyEdge& e : g.edges()) {
        if (e.origin == v) moves.insert(e.label + ">" + cls.at(e.dest));
      }
      for (const std::string& m : moves) {
        sig[v] += m;
        sig[v] += ';';
      }
    }
    std::map<std::string, std::string> renumber;
    for (const auto& [v, k] : sig) {
      renumber.emplace(k, std::to_string(renumber.size()));
    }
    std::set<std::string> before, after;
    for (const auto& [v, k] : cls) before.insert(k);
    for (const auto& [v, k] : sig) cls[v] = renumber.at(k);
    for (const auto& [v, k] : cls) after.insert(k);
    if (after.size() == before.size()) break;
  }
  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& [v, k] : cls) groups[k].push_back(v);
  fzb::CrispPartition p;
  for (auto& [k, vs] : groups) p.push_back(vs);
  return fzb::canonicalize_partition(std::move(p));
}

}  // namespace fzbtest
