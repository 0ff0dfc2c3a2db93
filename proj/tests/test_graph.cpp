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
#include <set>
#include <string>
#include <vector>

#include "common.hpp"
#include "doctest.h"
#include "fzbisim/graph.hpp"

using namespace fzb;
using fzbtest::deg;

namespace {

// Returns the line number a parse is expected to fail on.
int fail_line(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

std::string fail_message(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parsing a document and serializing it round trips") {
  FuzzyGraph g = fzbtest::six_vertex_graph();
  CHECK(g.vertices() ==
        std::vector<std::string>{"a", "b", "c", "d", "e", "f"});
  CHECK(g.edges().size() == 4);
  CHECK(g.sigma_v() == std::set<std::string>{"p"});
  CHECK(g.sigma_e() == std::set<std::string>{"r"});
  CHECK(g.label_degree("a", "p") == Degree::one());
  CHECK(g.label_degree("b", "p") == deg("0.7"));
  CHECK(g.label_degree("a", "q").is_zero());
  CHECK(g.label_degree("zz", "p").is_zero());
  CHECK(g.has_vertex("a"));
  CHECK_FALSE(g.has_vertex("zz"));
  CHECK(parse_graph(serialize_graph(g)) == g);
}

TEST_CASE("comments, blank lines and CRLF endings are accepted") {
  FuzzyGraph g = parse_graph(
      "# a comment\r\n"
      "\r\n"
      "vertex a p:1\r\n"
      "vertex b\r\n"
      "edge a r b 0.5\r\n");
  CHECK(g.vertices() == std::vector<std::string>{"a", "b"});
  CHECK(g.edges().size() == 1);
  CHECK(g.edges()[0].degree == deg("0.5"));
  // A document without a trailing newline parses the same way.
  CHECK(parse_graph("vertex a p:1\nvertex b\nedge a r b 0.5") == g);
}

TEST_CASE("edges may appear before their endpoints are declared") {
  FuzzyGraph g = parse_graph("edge a r b 0.5\nvertex a\nvertex b\n");
  CHECK(g.edges().size() == 1);
}

TEST_CASE("vertices and edges are kept in canonical sorted order") {
  FuzzyGraph g = parse_graph(
      "vertex z\nvertex a\n"
      "edge z r a 0.5\nedge a r z 0.5\nedge a q z 0.5\n");
  CHECK(g.vertices() == std::vector<std::string>{"a", "z"});
  CHECK(g.edges()[0].label == "q");
  CHECK(g.edges()[1].label == "r");
  CHECK(g.edges()[2].origin == "z");
}

TEST_CASE("parse errors carry the offending line number") {
  CHECK(fail_line("vertex a\nvertex a\n") == 2);
  CHECK(fail_message("vertex a\nvertex a\n") ==
        std::string("line 2: duplicate vertex id 'a'"));
  CHECK(fail_line("vertex a\nedge a r b 0.5\n") == 2);
  CHECK(fail_message("vertex a\nedge a r b 0.5\n") ==
        std::string("line 2: edge references undeclared vertex 'b'"));
  CHECK(fail_line("vertex a p:0\n") == 1);
  CHECK(fail_line("vertex a p:1 p:0.5\n") == 1);
  CHECK(fail_message("vertex a p:1 p:0.5\n") ==
        std::string("line 1: duplicate label 'p' on vertex 'a'"));
  CHECK(fail_line("vertex a\nvertex b\nedge a r b\n") == 3);
  CHECK(fail_line("vertex a p:1.2\n") == 1);
  CHECK(fail_line("vertex a\n\nfoo bar\n") == 3);
  CHECK(fail_message("foo bar\n") ==
        std::string("line 1: unrecognized line 'foo ...'"));
  CHECK(fail_line("vertex\n") == 1);
  CHECK(fail_line("vertex a pq\n") == 1);  // label token without a colon
  CHECK(fail_line("vertex a\nvertex b\nedge a r b 0.5\nedge a r b 0.7\n") == 4);
  CHECK(fail_line("vertex a\nedge a r a 0\n") == 2);  // zero degree edge
}

TEST_CASE("make rejects structurally bad graphs") {
  CHECK_THROWS_AS(FuzzyGraph::make({"a", "a"}, {}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FuzzyGraph::make({"has space"}, {}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FuzzyGraph::make({""}, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(
      FuzzyGraph::make({"a"}, {}, {FuzzyEdge{"a", "r", "b", deg("0.5")}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      FuzzyGraph::make({"a"}, {{"b", {{"p", deg("0.5")}}}}, {}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      FuzzyGraph::make({"a"}, {{"a", {{"p", Degree::zero()}}}}, {}),
      std::invalid_argument);
  CHECK_THROWS_AS(FuzzyGraph::make({"a"}, {}, {}, {"bad sym"}, {}),
                  std::invalid_argument);
}

TEST_CASE("signature lines are emitted only when they carry information") {
  FuzzyGraph g = parse_graph("sigma_v p q\nsigma_e r\nvertex a p:1\n");
  CHECK(g.sigma_v() == std::set<std::string>{"p", "q"});
  CHECK(g.sigma_e() == std::set<std::string>{"r"});
  std::string text = serialize_graph(g);
  CHECK(text.find("sigma_v p q\n") != std::string::npos);
  CHECK(text.find("sigma_e r\n") != std::string::npos);
  CHECK(parse_graph(text) == g);

  // When the signature equals the used symbols it stays implicit.
  std::string plain = serialize_graph(fzbtest::six_vertex_graph());
  CHECK(plain.find("sigma_v") == std::string::npos);
  CHECK(plain.find("sigma_e") == std::string::npos);
}

TEST_CASE("the disjoint union renames apart and unites signatures") {
  DisjointUnion du = disjoint_union(fzbtest::pair_g1(), fzbtest::pair_g2());
  CHECK(du.graph.vertices() == std::vector<std::string>{"1:a", "1:b", "1:c",
                                                        "2:d", "2:e", "2:f"});
  CHECK(du.rename1.at("a") == "1:a");
  CHECK(du.rename2.at("f") == "2:f");
  CHECK(du.graph.edges().size() == 4);
  CHECK(du.graph.label_degree("2:e", "p") == deg("0.7"));
  bool found = false;
  for (const FuzzyEdge& e : du.graph.edges()) {
    if (e.origin == "1:a" && e.label == "r" && e.dest == "1:b") {
      CHECK(e.degree == deg("0.6"));
      found = true;
    }
  }
  CHECK(found);
  CHECK(du.graph.sigma_v() == std::set<std::string>{"p"});

  // Signatures are united even when only one side uses a symbol.
  FuzzyGraph h = parse_graph("sigma_v q\nvertex x\n");
  DisjointUnion du2 = disjoint_union(fzbtest::pair_g1(), h);
  CHECK(du2.graph.sigma_v() == std::set<std::string>{"p", "q"});
}

TEST_CASE("the degree table starts at zero and lists distinct degrees") {
  std::vector<Degree> table = degree_table(fzbtest::six_vertex_graph());
  std::vector<Degree> expect{Degree::zero(), deg("0.6"), deg("0.7"),
                             deg("0.8"), Degree::one()};
  CHECK(table == expect);
  CHECK(degree_table(parse_graph("vertex a\n")) ==
        std::vector<Degree>{Degree::zero()});
}
