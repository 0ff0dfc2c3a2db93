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
#include "fzbisim/block.hpp"
#include "json.hpp"

using namespace fzb;
using fzbtest::deg;

TEST_CASE("factories canonicalize element and subblock order") {
  Block c = Block::crisp({"b", "a"});
  CHECK(c.kind() == BlockKind::crisp);
  CHECK(c.is_leaf());
  CHECK(c.elements() == std::vector<std::string>{"a", "b"});
  CHECK(c.degree() == Degree::one());
  CHECK(c.str() == "{a,b}_1");

  Block s = Block::simple({"a"});
  CHECK(s.kind() == BlockKind::simple);
  CHECK(s.str() == "{a}");
  CHECK_THROWS_AS(s.degree(), std::invalid_argument);

  Block f = Block::fuzzy(Degree::zero(),
                         {Block::crisp({"d"}), Block::crisp({"a", "z"})});
  CHECK(f.str() == "{{a,z}_1,{d}_1}_0");
  CHECK(f.min_element() == "a");
  CHECK(f.all_elements() == std::vector<std::string>{"a", "d", "z"});
  CHECK_THROWS_AS(f.elements(), std::invalid_argument);
}

TEST_CASE("factories reject malformed blocks") {
  CHECK_THROWS_AS(Block::crisp({}), std::invalid_argument);
  CHECK_THROWS_AS(Block::crisp({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(Block::fuzzy(Degree::one(), {Block::crisp({"a"}),
                                               Block::crisp({"b"})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Block::fuzzy(deg("0.5"), {Block::crisp({"a"})}),
                  std::invalid_argument);
  // A fuzzy subblock must sit strictly above its parent degree.
  Block inner = Block::fuzzy(deg("0.5"),
                             {Block::crisp({"a"}), Block::crisp({"b"})});
  CHECK_THROWS_AS(Block::fuzzy(deg("0.5"), {inner, Block::crisp({"c"})}),
                  std::invalid_argument);
  CHECK_NOTHROW(Block::fuzzy(deg("0.4"), {inner, Block::crisp({"c"})}));
  // Overlapping element sets are rejected.
  CHECK_THROWS_AS(Block::fuzzy(Degree::zero(), {Block::crisp({"a", "b"}),
                                                Block::crisp({"b"})}),
                  std::invalid_argument);
}

TEST_CASE("the seven-element tree prints in brace notation") {
  CHECK(fzbtest::seven_block().str() ==
        "{{{a,b}_1,{c}_1}_0.3,{{d}_1,{e,f}_1}_0.4,{g}_1}_0");
}

TEST_CASE("brace notation parses back to an equal tree") {
  Block b = fzbtest::seven_block();
  CHECK(Block::parse(b.str()) == b);
  CHECK(blocks_equal(Block::parse(b.str()), b));
  CHECK(Block::parse("{a}_1") == Block::crisp({"a"}));
  CHECK(Block::parse("{b,a}_1") == Block::crisp({"a", "b"}));
  Block nested = Block::parse("{{x}_1,{{y}_1,{z}_1}_0.9}_0.1");
  CHECK(nested.degree() == deg("0.1"));
  CHECK(nested.subblocks().size() == 2);
}

TEST_CASE("brace notation rejects malformed input") {
  CHECK_THROWS_AS(Block::parse(""), ParseError);
  CHECK_THROWS_AS(Block::parse("{"), ParseError);
  CHECK_THROWS_AS(Block::parse("{a"), ParseError);
  CHECK_THROWS_AS(Block::parse("{a}"), ParseError);
  CHECK_THROWS_AS(Block::parse("{a}_2"), ParseError);
  CHECK_THROWS_AS(Block::parse("{a}_0.5"), ParseError);
  CHECK_THROWS_AS(Block::parse("{}_1"), ParseError);
  CHECK_THROWS_AS(Block::parse("{a,b}_1 "), ParseError);
  CHECK_THROWS_AS(Block::parse("{{a}_1,{b}_1}_1"), ParseError);
  // Structure errors surface from the factories.
  CHECK_THROWS_AS(Block::parse("{{a}_1}_0"), std::invalid_argument);
  CHECK_THROWS_AS(Block::parse("{{a}_1,{a}_1}_0"), std::invalid_argument);
}

TEST_CASE("cut partitions of the seven-element tree") {
  Block b = fzbtest::seven_block();
  CrispPartition leaves{{"a", "b"}, {"c"}, {"d"}, {"e", "f"}, {"g"}};
  CHECK(leaf_partition(b) == leaves);
  CHECK(d_cut_partition(b, Degree::zero()) ==
        CrispPartition{{"a", "b", "c"}, {"d", "e", "f"}, {"g"}});
  CHECK(d_cut_partition(b, deg("0.3")) ==
        CrispPartition{{"a", "b"}, {"c"}, {"d", "e", "f"}, {"g"}});
  // Between two tree degrees the cut is constant.
  CHECK(d_cut_partition(b, deg("0.35")) == d_cut_partition(b, deg("0.3")));
  CHECK(d_cut_partition(b, deg("0.4")) == leaves);
  CHECK(d_cut_partition(b, deg("0.99")) == leaves);
}

TEST_CASE("coarseness of cut partitions") {
  Block b = fzbtest::seven_block();
  Block whole = Block::crisp({"a", "b", "c", "d", "e", "f", "g"});
  CHECK(is_coarser(b, b));
  CHECK(is_coarser(whole, b));
  CHECK_FALSE(is_coarser(b, whole));
  CHECK_THROWS_AS(is_coarser(b, Block::crisp({"a"})), std::invalid_argument);

  CrispPartition coarse{{"a", "b"}, {"c"}};
  CrispPartition fine{{"a"}, {"b"}, {"c"}};
  CHECK(is_coarser(coarse, fine));
  CHECK_FALSE(is_coarser(fine, coarse));
  CHECK(is_coarser(coarse, coarse));
}

TEST_CASE("json form exposes the tree structure") {
  nlohmann::json j = nlohmann::json::parse(fzbtest::seven_block().json());
  CHECK(j["kind"] == "fuzzy");
  CHECK(j["degree"] == "0");
  REQUIRE(j["subblocks"].size() == 3);
  CHECK(j["subblocks"][0]["kind"] == "fuzzy");
  CHECK(j["subblocks"][0]["degree"] == "0.3");
  CHECK(j["subblocks"][0]["subblocks"][0]["elements"] ==
        nlohmann::json::array({"a", "b"}));
  CHECK(j["subblocks"][2]["kind"] == "crisp");
  CHECK(j["subblocks"][2]["elements"] == nlohmann::json::array({"g"}));

  nlohmann::json leaf = nlohmann::json::parse(Block::simple({"x"}).json());
  CHECK(leaf["kind"] == "simple");
  CHECK_FALSE(leaf.contains("degree"));
}
