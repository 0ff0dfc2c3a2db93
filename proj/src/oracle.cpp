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
#include "fzbisim/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fzb {

namespace {

void require_domains(const FuzzyGraph& g1, const FuzzyGraph& g2,
                     const FuzzyRelation& z) {
  if (z.rows() != g1.vertices() || z.cols() != g2.vertices()) {
    throw std::invalid_argument(
        "relation domains do not match the graph vertex sets");
  }
}

// Edges grouped by origin, for one graph.
std::map<std::string, std::vector<const FuzzyEdge*>> edges_by_origin(
    const FuzzyGraph& g) {
  std::map<std::string, std::vector<const FuzzyEdge*>> by_origin;
  for (const FuzzyEdge& e : g.edges()) by_origin[e.origin].push_back(&e);
  return by_origin;
}

}  // namespace

std::string BisimCheckReport::describe() const {
  switch (condition) {
    case Condition::none:
      return "bisimulation conditions hold";
    case Condition::vertex_label:
      return "label condition violated at (" + x + "," + xp + ") for '" +
             symbol + "' (slack " + slack.str() + ")";
    case Condition::forth:
      return "forth condition violated at (" + x + "," + xp + ") for edge " +
             x + " -" + symbol + "-> " + y + " (slack " + slack.str() + ")";
    case Condition::back:
      return "back condition violated at (" + x + "," + xp + ") for edge " +
             xp + " -" + symbol + "-> " + y + " (slack " + slack.str() + ")";
  }
  return "";
}

BisimCheckReport check_bisimulation(const FuzzyGraph& g1, const FuzzyGraph& g2,
                                    const FuzzyRelation& z) {
  require_domains(g1, g2, z);
  BisimCheckReport report;

  std::set<std::string> sigma_v = g1.sigma_v();
  sigma_v.insert(g2.sigma_v().begin(), g2.sigma_v().end());

  for (const std::string& x : g1.vertices()) {
    for (const std::string& xp : g2.vertices()) {
      Degree zd = z.at(x, xp);
      if (zd.is_zero()) continue;
      for (const std::string& p : sigma_v) {
        Degree bound = biresiduum(g1.label_degree(x, p), g2.label_degree(xp, p));
        if (zd > bound) {
          report.holds = false;
          report.condition = BisimCheckReport::Condition::vertex_label;
          report.x = x;
          report.xp = xp;
          report.symbol = p;
          report.slack = Degree::from_units(zd.units() - bound.units());
          return report;
        }
      }
    }
  }

  auto out1 = edges_by_origin(g1);
  auto out2 = edges_by_origin(g2);

  // Forth: for every edge x -r-> y there must be y' with
  // min(z, E) <= min(E', z(y,y')).
  auto check_edges = [&](bool forth) -> bool {
    const auto& lhs_out = forth ? out1 : out2;
    const auto& rhs_out = forth ? out2 : out1;
    for (const std::string& x : g1.vertices()) {
      for (const std::string& xp : g2.vertices()) {
        Degree zd = z.at(x, xp);
        if (zd.is_zero()) continue;
        const std::string& lhs = forth ? x : xp;
        const std::string& rhs = forth ? xp : x;
        auto it = lhs_out.find(lhs);
        if (it == lhs_out.end()) continue;
        for (const FuzzyEdge* e : it->second) {
          Degree need = min(zd, e->degree);
          Degree best = Degree::zero();
          auto jt = rhs_out.find(rhs);
          if (jt != rhs_out.end()) {
            for (const FuzzyEdge* e2 : jt->second) {
              if (e2->label != e->label) continue;
              Degree zy = forth ? z.at(e->dest, e2->dest)
                                : z.at(e2->dest, e->dest);
              best = max(best, min(e2->degree, zy));
              if (best >= need) break;
            }
          }
          if (best < need) {
            report.holds = false;
            report.condition = forth ? BisimCheckReport::Condition::forth
                                     : BisimCheckReport::Condition::back;
            report.x = x;
            report.xp = xp;
            report.symbol = e->label;
            report.y = e->dest;
            report.slack = Degree::from_units(need.units() - best.units());
            return false;
          }
        }
      }
    }
    return true;
  };

  if (!check_edges(true)) return report;
  if (!check_edges(false)) return report;
  return report;
}

namespace {

// One in-place lowering sweep of the edge conditions; returns true when
// some entry changed.  The operator keeps the relation above the greatest
// bisimulation, so iterating to a fixpoint from the label bound yields
// exactly the greatest fuzzy bisimulation.
bool lower_once(
    const FuzzyGraph& g1, const FuzzyGraph& g2,
    const std::map<std::string, std::vector<const FuzzyEdge*>>& out1,
    const std::map<std::string, std::vector<const FuzzyEdge*>>& out2,
    FuzzyRelation& z, SweepOrder order) {
  bool changed = false;

  auto bound_for = [&](const std::string& x, const std::string& xp,
                       Degree zd) -> Degree {
    Degree bound = zd;
    // Forth direction.
    auto it = out1.find(x);
    if (it != out1.end()) {
      for (const FuzzyEdge* e : it->second) {
        Degree best = Degree::zero();
        auto jt = out2.find(xp);
        if (jt != out2.end()) {
          for (const FuzzyEdge* e2 : jt->second) {
            if (e2->label != e->label) continue;
            best = max(best, min(e2->degree, z.at(e->dest, e2->dest)));
          }
        }
        // Largest c with min(c, E) <= best: anything when E <= best,
        // otherwise best itself.
        if (e->degree > best) bound = min(bound, best);
      }
    }
    // Back direction.
    auto jt = out2.find(xp);
    if (jt != out2.end()) {
      for (const FuzzyEdge* e2 : jt->second) {
        Degree best = Degree::zero();
        if (it != out1.end()) {
          for (const FuzzyEdge* e : it->second) {
            if (e->label != e2->label) continue;
            best = max(best, min(e->degree, z.at(e->dest, e2->dest)));
          }
        }
        if (e2->degree > best) bound = min(bound, best);
      }
    }
    return bound;
  };

  auto visit = [&](const std::string& x, const std::string& xp) {
    Degree zd = z.at(x, xp);
    if (zd.is_zero()) return;
    Degree lowered = bound_for(x, xp, zd);
    if (lowered < zd) {
      z.set(x, xp, lowered);
      changed = true;
    }
  };

  const auto& rows = g1.vertices();
  const auto& cols = g2.vertices();
  if (order == SweepOrder::forward) {
    for (const auto& x : rows)
      for (const auto& xp : cols) visit(x, xp);
  } else {
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
      for (auto jt = cols.rbegin(); jt != cols.rend(); ++jt) visit(*it, *jt);
  }
  return changed;
}

}  // namespace

FuzzyRelation greatest_bisim_fixpoint(const FuzzyGraph& g1,
                                      const FuzzyGraph& g2, SweepOrder order,
                                      int* sweeps) {
  if (g1.vertices().empty() || g2.vertices().empty()) {
    throw std::invalid_argument("greatest_bisim_fixpoint: empty vertex set");
  }
  std::set<std::string> sigma_v = g1.sigma_v();
  sigma_v.insert(g2.sigma_v().begin(), g2.sigma_v().end());

  FuzzyRelation z(g1.vertices(), g2.vertices());
  for (const std::string& x : g1.vertices()) {
    for (const std::string& xp : g2.vertices()) {
      Degree bound = Degree::one();
      for (const std::string& p : sigma_v) {
        bound = min(bound,
                    biresiduum(g1.label_degree(x, p), g2.label_degree(xp, p)));
        if (bound.is_zero()) break;
      }
      z.set(x, xp, bound);
    }
  }

  auto out1 = edges_by_origin(g1);
  auto out2 = edges_by_origin(g2);

  // Every sweep lowers at least one entry until the fixpoint, and each
  // entry can only take values from {0, 1} and the degree tables, so the
  // sweep count is bounded by n1*n2*levels.  The +2 margin covers the
  // final no-change pass.
  std::set<Degree> levels;
  for (Degree d : degree_table(g1)) levels.insert(d);
  for (Degree d : degree_table(g2)) levels.insert(d);
  levels.insert(Degree::one());
  const long long max_sweeps =
      static_cast<long long>(g1.vertices().size()) *
          static_cast<long long>(g2.vertices().size()) *
          static_cast<long long>(levels.size()) +
      2;
  int count = 0;
  while (lower_once(g1, g2, out1, out2, z, order)) {
    if (++count > max_sweeps) {
      throw std::logic_error(
          "greatest_bisim_fixpoint failed to converge (internal error)");
    }
  }
  if (sweeps) *sweeps = count + 1;
  return z;
}

FuzzyRelation greatest_autobisim_fixpoint(const FuzzyGraph& g,
                                          SweepOrder order) {
  return greatest_bisim_fixpoint(g, g, order);
}

}  // namespace fzb
