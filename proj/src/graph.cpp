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
#include "fzbisim/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fzb {

namespace {

bool valid_symbol(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() &&
           std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

Degree parse_positive_degree(const std::string& text, int line) {
  auto d = Degree::parse(text);
  if (!d) {
    throw ParseError(line, "bad degree '" + text +
                               "' (decimal in (0,1] with at most nine "
                               "fractional digits expected)");
  }
  if (d->is_zero()) {
    throw ParseError(line, "degree out of range (0,1]: '" + text + "'");
  }
  return *d;
}

}  // namespace

FuzzyGraph FuzzyGraph::make(std::vector<std::string> vertices,
                            std::map<std::string, LabelMap> vertex_labels,
                            std::vector<FuzzyEdge> edges,
                            std::set<std::string> sigma_v,
                            std::set<std::string> sigma_e) {
  FuzzyGraph g;
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string& id = vertices[i];
    if (!valid_symbol(id)) {
      throw std::invalid_argument("invalid vertex id '" + id + "'");
    }
    if (i > 0 && vertices[i - 1] == id) {
      throw std::invalid_argument("duplicate vertex id '" + id + "'");
    }
  }
  std::set<std::string> vertex_set(vertices.begin(), vertices.end());
  for (auto& [v, labels] : vertex_labels) {
    if (!vertex_set.count(v)) {
      throw std::invalid_argument("labels for undeclared vertex '" + v + "'");
    }
    for (auto& [p, d] : labels) {
      if (!valid_symbol(p)) {
        throw std::invalid_argument("invalid label symbol '" + p + "'");
      }
      if (d.is_zero()) {
        throw std::invalid_argument("zero-degree label '" + p +
                                    "' on vertex '" + v + "'");
      }
      sigma_v.insert(p);
    }
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const FuzzyEdge& e = edges[i];
    if (!valid_symbol(e.label)) {
      throw std::invalid_argument("invalid edge label '" + e.label + "'");
    }
    if (!vertex_set.count(e.origin) || !vertex_set.count(e.dest)) {
      throw std::invalid_argument("edge endpoint not declared: " + e.origin +
                                  " " + e.label + " " + e.dest);
    }
    if (e.degree.is_zero()) {
      throw std::invalid_argument("zero-degree edge: " + e.origin + " " +
                                  e.label + " " + e.dest);
    }
    if (i > 0 && edges[i - 1].origin == e.origin &&
        edges[i - 1].label == e.label && edges[i - 1].dest == e.dest) {
      throw std::invalid_argument("duplicate edge triple: " + e.origin + " " +
                                  e.label + " " + e.dest);
    }
    sigma_e.insert(e.label);
  }
  for (const std::string& p : sigma_v) {
    if (!valid_symbol(p)) {
      throw std::invalid_argument("invalid label symbol '" + p + "'");
    }
  }
  for (const std::string& r : sigma_e) {
    if (!valid_symbol(r)) {
      throw std::invalid_argument("invalid edge label '" + r + "'");
    }
  }
  // Every vertex owns an entry so labels() can return a reference.
  for (const std::string& v : vertices) vertex_labels.try_emplace(v);

  g.vertices_ = std::move(vertices);
  g.vertex_labels_ = std::move(vertex_labels);
  g.edges_ = std::move(edges);
  g.sigma_v_ = std::move(sigma_v);
  g.sigma_e_ = std::move(sigma_e);
  return g;
}

Degree FuzzyGraph::label_degree(const std::string& vertex,
                                const std::string& p) const {
  auto it = vertex_labels_.find(vertex);
  if (it == vertex_labels_.end()) return Degree::zero();
  auto jt = it->second.find(p);
  return jt == it->second.end() ? Degree::zero() : jt->second;
}

const FuzzyGraph::LabelMap& FuzzyGraph::labels(
    const std::string& vertex) const {
  auto it = vertex_labels_.find(vertex);
  if (it == vertex_labels_.end()) {
    throw std::invalid_argument("unknown vertex '" + vertex + "'");
  }
  return it->second;
}

FuzzyGraph parse_graph(std::string_view text) {
  std::vector<std::string> vertices;
  std::map<std::string, FuzzyGraph::LabelMap> vertex_labels;
  std::vector<FuzzyEdge> edges;
  std::vector<int> edge_lines;
  std::set<std::string> sigma_v, sigma_e;
  std::set<std::string> seen_vertices;
  std::set<std::tuple<std::string, std::string, std::string>> seen_edges;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = (eol == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<std::string> tok = split_tokens(line);
    if (tok.empty() || tok[0][0] == '#') continue;

    if (tok[0] == "vertex") {
      if (tok.size() < 2) throw ParseError(line_no, "vertex line without id");
      const std::string& id = tok[1];
      if (!valid_symbol(id)) {
        throw ParseError(line_no, "invalid vertex id '" + id + "'");
      }
      if (!seen_vertices.insert(id).second) {
        throw ParseError(line_no, "duplicate vertex id '" + id + "'");
      }
      vertices.push_back(id);
      FuzzyGraph::LabelMap& labels = vertex_labels[id];
      for (std::size_t i = 2; i < tok.size(); ++i) {
        std::size_t colon = tok[i].find_last_of(':');
        if (colon == std::string::npos || colon == 0 ||
            colon + 1 == tok[i].size()) {
          throw ParseError(line_no, "bad label token '" + tok[i] +
                                        "' (<symbol>:<degree> expected)");
        }
        std::string symbol = tok[i].substr(0, colon);
        Degree d = parse_positive_degree(tok[i].substr(colon + 1), line_no);
        if (!labels.emplace(symbol, d).second) {
          throw ParseError(line_no, "duplicate label '" + symbol +
                                        "' on vertex '" + id + "'");
        }
      }
    } else if (tok[0] == "edge") {
      if (tok.size() != 5) {
        throw ParseError(line_no,
                         "edge line needs <origin> <label> <dest> <degree>");
      }
      Degree d = parse_positive_degree(tok[4], line_no);
      if (!seen_edges.emplace(tok[1], tok[2], tok[3]).second) {
        throw ParseError(line_no, "duplicate edge triple: " + tok[1] + " " +
                                      tok[2] + " " + tok[3]);
      }
      edges.push_back(FuzzyEdge{tok[1], tok[2], tok[3], d});
      edge_lines.push_back(line_no);
    } else if (tok[0] == "sigma_v") {
      for (std::size_t i = 1; i < tok.size(); ++i) sigma_v.insert(tok[i]);
    } else if (tok[0] == "sigma_e") {
      for (std::size_t i = 1; i < tok.size(); ++i) sigma_e.insert(tok[i]);
    } else {
      throw ParseError(line_no, "unrecognized line '" + tok[0] + " ...'");
    }
  }

  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!seen_vertices.count(edges[i].origin)) {
      throw ParseError(edge_lines[i],
                       "edge references undeclared vertex '" +
                           edges[i].origin + "'");
    }
    if (!seen_vertices.count(edges[i].dest)) {
      throw ParseError(edge_lines[i], "edge references undeclared vertex '" +
                                          edges[i].dest + "'");
    }
  }

  return FuzzyGraph::make(std::move(vertices), std::move(vertex_labels),
                          std::move(edges), std::move(sigma_v),
                          std::move(sigma_e));
}

std::string serialize_graph(const FuzzyGraph& g) {
  std::set<std::string> used_v, used_e;
  for (const std::string& v : g.vertices()) {
    for (const auto& [p, d] : g.labels(v)) used_v.insert(p);
  }
  for (const FuzzyEdge& e : g.edges()) used_e.insert(e.label);

  std::ostringstream out;
  if (g.sigma_v() != used_v) {
    out << "sigma_v";
    for (const std::string& p : g.sigma_v()) out << ' ' << p;
    out << '\n';
  }
  if (g.sigma_e() != used_e) {
    out << "sigma_e";
    for (const std::string& r : g.sigma_e()) out << ' ' << r;
    out << '\n';
  }
  for (const std::string& v : g.vertices()) {
    out << "vertex " << v;
    for (const auto& [p, d] : g.labels(v)) out << ' ' << p << ':' << d.str();
    out << '\n';
  }
  for (const FuzzyEdge& e : g.edges()) {
    out << "edge " << e.origin << ' ' << e.label << ' ' << e.dest << ' '
        << e.degree.str() << '\n';
  }
  return out.str();
}

DisjointUnion disjoint_union(const FuzzyGraph& g1, const FuzzyGraph& g2) {
  DisjointUnion result;
  std::vector<std::string> vertices;
  std::map<std::string, FuzzyGraph::LabelMap> labels;
  std::vector<FuzzyEdge> edges;

  auto add = [&](const FuzzyGraph& g, const std::string& prefix,
                 std::map<std::string, std::string>& rename) {
    for (const std::string& v : g.vertices()) {
      std::string id = prefix + v;
      rename[v] = id;
      vertices.push_back(id);
      labels[id] = g.labels(v);
    }
    for (const FuzzyEdge& e : g.edges()) {
      edges.push_back(
          FuzzyEdge{prefix + e.origin, e.label, prefix + e.dest, e.degree});
    }
  };
  add(g1, "1:", result.rename1);
  add(g2, "2:", result.rename2);

  std::set<std::string> sigma_v = g1.sigma_v();
  sigma_v.insert(g2.sigma_v().begin(), g2.sigma_v().end());
  std::set<std::string> sigma_e = g1.sigma_e();
  sigma_e.insert(g2.sigma_e().begin(), g2.sigma_e().end());

  result.graph =
      FuzzyGraph::make(std::move(vertices), std::move(labels),
                       std::move(edges), std::move(sigma_v), std::move(sigma_e));
  return result;
}

std::vector<Degree> degree_table(const FuzzyGraph& g) {
  std::set<Degree> degrees;
  for (const std::string& v : g.vertices()) {
    for (const auto& [p, d] : g.labels(v)) degrees.insert(d);
  }
  for (const FuzzyEdge& e : g.edges()) degrees.insert(e.degree);
  std::vector<Degree> table;
  table.push_back(Degree::zero());
  table.insert(table.end(), degrees.begin(), degrees.end());
  return table;
}

}  // namespace fzb
