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
#include <string>
#include <vector>

#include "common.hpp"
#include "doctest.h"
#include "fzbisim/relation.hpp"

using namespace fzb;
using fzbtest::deg;

TEST_CASE("entries are stored sparsely and zero assignment erases") {
  FuzzyRelation f({"a", "b"}, {"x", "y"});
  CHECK(f.rows() == std::vector<std::string>{"a", "b"});
  CHECK(f.cols() == std::vector<std::string>{"x", "y"});
  CHECK_FALSE(f.square_domain());
  CHECK(f.nonzero_count() == 0);
  CHECK(f.at("a", "x").is_zero());
  f.set("a", "x", deg("0.5"));
  CHECK(f.at("a", "x") == deg("0.5"));
  CHECK(f.nonzero_count() == 1);
  f.set("a", "x", Degree::zero());
  CHECK(f.nonzero_count() == 0);
  CHECK_THROWS_AS(f.at("zz", "x"), std::invalid_argument);
  CHECK_THROWS_AS(f.set("a", "zz", deg("0.5")), std::invalid_argument);
  CHECK_THROWS_AS(FuzzyRelation({"a", "a"}, {"x"}), std::invalid_argument);
}

TEST_CASE("nonzero entries come out sorted by row then column") {
  FuzzyRelation f = fzbtest::seven_relation();
  auto entries = f.nonzero_entries();
  CHECK(entries.size() == f.nonzero_count());
  for (std::size_t i = 1; i < entries.size(); ++i) {
    bool ordered = entries[i - 1].row < entries[i].row ||
                   (entries[i - 1].row == entries[i].row &&
                    entries[i - 1].col < entries[i].col);
    CHECK(ordered);
  }
  // 7 diagonal + 2*6 symmetric off-diagonal pairs.
  CHECK(f.nonzero_count() == 19);
}

TEST_CASE("tsv form lists sorted triples and parses back") {
  FuzzyRelation f({"a", "b"}, {"x", "y"});
  f.set("b", "x", deg("0.25"));
  f.set("a", "y", Degree::one());
  CHECK(f.tsv() == "a\ty\t1\nb\tx\t0.25\n");
  FuzzyRelation g =
      FuzzyRelation::parse_tsv({"a", "b"}, {"x", "y"}, f.tsv());
  CHECK(g == f);
  FuzzyRelation seven = fzbtest::seven_relation();
  CHECK(FuzzyRelation::parse_tsv(seven.rows(), seven.cols(), seven.tsv()) ==
        seven);
}

TEST_CASE("matrix form carries a header line and dense rows") {
  FuzzyRelation f({"a", "b"}, {"x", "y"});
  f.set("b", "x", deg("0.25"));
  CHECK(f.matrix() ==
        "\tx\ty\n"
        "a\t0\t0\n"
        "b\t0.25\t0\n");
}

TEST_CASE("tsv parsing rejects malformed documents") {
  auto parse = [](std::string_view text) {
    return FuzzyRelation::parse_tsv({"a", "b"}, {"x", "y"}, text);
  };
  CHECK_NOTHROW(parse(""));
  CHECK_NOTHROW(parse("# comment\na\tx\t0.5\n"));
  CHECK_THROWS_AS(parse("a\tx\n"), ParseError);
  CHECK_THROWS_AS(parse("a\tx\t0.5\tmore\n"), ParseError);
  CHECK_THROWS_AS(parse("zz\tx\t0.5\n"), ParseError);
  CHECK_THROWS_AS(parse("a\tzz\t0.5\n"), ParseError);
  CHECK_THROWS_AS(parse("a\tx\t1.5\n"), ParseError);
  CHECK_THROWS_AS(parse("a\tx\t0\n"), ParseError);
  CHECK_THROWS_AS(parse("a\tx\t0.5\na\tx\t0.5\n"), ParseError);
  try {
    parse("a\tx\t0.5\nbad line\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("the equivalence check pinpoints failures") {
  CHECK(is_fuzzy_equivalence(fzbtest::seven_relation()).ok);

  FuzzyRelation f = fzbtest::seven_relation();
  f.set("a", "a", deg("0.9"));
  EquivalenceReport r = is_fuzzy_equivalence(f);
  CHECK_FALSE(r.ok);
  CHECK(r.failure == EquivalenceReport::Failure::not_reflexive);
  CHECK(r.x == "a");
  CHECK(r.describe().find("not reflexive") != std::string::npos);

  f = fzbtest::seven_relation();
  f.set("a", "b", deg("0.9"));
  r = is_fuzzy_equivalence(f);
  CHECK_FALSE(r.ok);
  CHECK(r.failure == EquivalenceReport::Failure::not_symmetric);

  // a~b at 1 and b~c at 0.3 force a~c to at least 0.3.
  f = fzbtest::seven_relation();
  f.set("a", "c", deg("0.1"));
  f.set("c", "a", deg("0.1"));
  r = is_fuzzy_equivalence(f);
  CHECK_FALSE(r.ok);
  CHECK(r.failure == EquivalenceReport::Failure::not_transitive);

  FuzzyRelation rect({"a"}, {"x"});
  CHECK_THROWS_AS(is_fuzzy_equivalence(rect), std::invalid_argument);
}

TEST_CASE("a block tree and its relation are two views of one object") {
  CHECK(partition_to_relation(fzbtest::seven_block()) ==
        fzbtest::seven_relation());
  CHECK(relation_to_partition(fzbtest::seven_relation()) ==
        fzbtest::seven_block());

  // Nested three-level tree.
  Block b = Block::parse("{{{a}_1,{b}_1}_0.6,{c}_1}_0.2");
  FuzzyRelation f = partition_to_relation(b);
  CHECK(f.at("a", "b") == deg("0.6"));
  CHECK(f.at("a", "c") == deg("0.2"));
  CHECK(f.at("b", "c") == deg("0.2"));
  CHECK(f.at("c", "c") == Degree::one());
  CHECK(relation_to_partition(f) == b);

  // A single crisp class round trips to a crisp root.
  Block all = Block::crisp({"x", "y"});
  CHECK(relation_to_partition(partition_to_relation(all)) == all);
}

TEST_CASE("relation_to_partition rejects non-equivalences") {
  FuzzyRelation f = fzbtest::seven_relation();
  f.set("a", "b", deg("0.9"));
  CHECK_THROWS_AS(relation_to_partition(f), std::invalid_argument);
  FuzzyRelation rect({"a"}, {"x"});
  CHECK_THROWS_AS(relation_to_partition(rect), std::invalid_argument);
}
