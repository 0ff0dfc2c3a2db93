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
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "fzbisim/degree.hpp"

namespace fzb {

/// Error raised while reading a textual document (graph or relation).
/// Carries the 1-based line number of the offending input line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

struct FuzzyEdge {
  std::string origin;
  std::string label;
  std::string dest;
  Degree degree;

  friend bool operator==(const FuzzyEdge&, const FuzzyEdge&) = default;
  friend auto operator<=>(const FuzzyEdge& a, const FuzzyEdge& b) {
    return std::tie(a.origin, a.label, a.dest, a.degree) <=>
           std::tie(b.origin, b.label, b.dest, b.degree);
  }
};

/// A finite fuzzy labeled graph.  Vertices carry fuzzy sets of label
/// symbols, edges carry a label symbol and a fuzzy degree.  Degrees of
/// present labels and edges are always in (0, 1]; a degree of zero means
/// absence and is never stored.
///
/// Instances are canonical: the vertex sequence is sorted, edges are
/// sorted by (origin, label, dest), and the signatures always contain at
/// least every symbol that occurs in the graph.
class FuzzyGraph {
 public:
  using LabelMap = std::map<std::string, Degree>;

  FuzzyGraph() = default;

  /// Validates and canonicalizes.  Throws std::invalid_argument on
  /// malformed ids, duplicate vertices or edge triples, zero degrees, or
  /// edges with undeclared endpoints.  The signatures are extended with
  /// every used symbol.
  static FuzzyGraph make(std::vector<std::string> vertices,
                         std::map<std::string, LabelMap> vertex_labels,
                         std::vector<FuzzyEdge> edges,
                         std::set<std::string> sigma_v = {},
                         std::set<std::string> sigma_e = {});

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<FuzzyEdge>& edges() const { return edges_; }
  const std::set<std::string>& sigma_v() const { return sigma_v_; }
  const std::set<std::string>& sigma_e() const { return sigma_e_; }

  bool has_vertex(const std::string& id) const {
    return vertex_labels_.count(id) != 0;
  }

  /// Label membership degree L(v)(p); zero when absent.
  Degree label_degree(const std::string& vertex, const std::string& p) const;

  /// All labels of one vertex, sorted by symbol.
  const LabelMap& labels(const std::string& vertex) const;

  friend bool operator==(const FuzzyGraph&, const FuzzyGraph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::map<std::string, LabelMap> vertex_labels_;
  std::vector<FuzzyEdge> edges_;
  std::set<std::string> sigma_v_;
  std::set<std::string> sigma_e_;
};

/// Reads the line-oriented textual form:
///
///   # comment
///   sigma_v p q
///   sigma_e r
///   vertex <id> [<p>:<d> ...]
///   edge <origin> <r> <dest> <d>
///
/// Blank lines are ignored.  Every malformed construct is reported as a
/// ParseError with its line number: unparseable lines, duplicate vertex
/// ids, duplicate labels on one vertex, duplicate edge triples, degrees
/// outside (0, 1] or with more than nine fractional digits, and edges
/// whose endpoints are not declared anywhere in the file.
FuzzyGraph parse_graph(std::string_view text);

/// Canonical text: vertex lines sorted by id (labels sorted by symbol),
/// then edge lines sorted by (origin, label, dest).  sigma_v / sigma_e
/// header lines are emitted only when the signature holds symbols that no
/// vertex or edge uses.  parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const FuzzyGraph& g);

struct DisjointUnion {
  FuzzyGraph graph;
  std::map<std::string, std::string> rename1;  // original id -> union id
  std::map<std::string, std::string> rename2;
};

/// Disjoint union of two graphs over the united signatures.  Vertex ids
/// are disambiguated by prefixing ("1:", "2:"); the rename maps give the
/// prefixed id of every original vertex.
DisjointUnion disjoint_union(const FuzzyGraph& g1, const FuzzyGraph& g2);

/// All distinct degrees that occur in the graph (vertex labels and
/// edges), sorted ascending, with 0 prepended.  The result never repeats
/// a value and always starts with 0.
std::vector<Degree> degree_table(const FuzzyGraph& g);

}  // namespace fzb
