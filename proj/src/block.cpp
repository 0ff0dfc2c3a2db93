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
#include "fzbisim/block.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fzbisim/graph.hpp"
#include "json.hpp"

namespace fzb {

namespace {

void require(bool cond, const char* message) {
  if (!cond) throw std::invalid_argument(message);
}

}  // namespace

Block Block::crisp(std::vector<std::string> elements) {
  require(!elements.empty(), "leaf block must hold at least one element");
  std::sort(elements.begin(), elements.end());
  require(std::adjacent_find(elements.begin(), elements.end()) ==
              elements.end(),
          "leaf block holds a duplicate element");
  Block b;
  b.kind_ = BlockKind::crisp;
  b.elements_ = std::move(elements);
  return b;
}

Block Block::simple(std::vector<std::string> elements) {
  Block b = crisp(std::move(elements));
  b.kind_ = BlockKind::simple;
  return b;
}

Block Block::fuzzy(Degree degree, std::vector<Block> subblocks) {
  require(degree < Degree::one(), "fuzzy block degree must lie in [0,1)");
  require(subblocks.size() > 1, "fuzzy block needs more than one subblock");
  std::set<std::string> seen;
  for (const Block& sub : subblocks) {
    if (sub.kind() == BlockKind::fuzzy) {
      require(sub.degree() > degree,
              "fuzzy subblock degree must exceed the parent degree");
    }
    for (const std::string& e : sub.all_elements()) {
      require(seen.insert(e).second, "subblock element sets must be disjoint");
    }
  }
  std::sort(subblocks.begin(), subblocks.end(),
            [](const Block& a, const Block& b) {
              return a.min_element() < b.min_element();
            });
  Block b;
  b.kind_ = BlockKind::fuzzy;
  b.degree_ = degree;
  b.subblocks_ = std::move(subblocks);
  return b;
}

Degree Block::degree() const {
  if (kind_ == BlockKind::fuzzy) return degree_;
  if (kind_ == BlockKind::crisp) return Degree::one();
  throw std::invalid_argument("simple block has no degree");
}

const std::vector<std::string>& Block::elements() const {
  if (kind_ == BlockKind::fuzzy) {
    throw std::invalid_argument("fuzzy block has no direct elements");
  }
  return elements_;
}

const std::vector<Block>& Block::subblocks() const {
  if (kind_ != BlockKind::fuzzy) {
    throw std::invalid_argument("leaf block has no subblocks");
  }
  return subblocks_;
}

std::vector<std::string> Block::all_elements() const {
  if (is_leaf()) return elements_;
  std::vector<std::string> all;
  for (const Block& sub : subblocks_) {
    std::vector<std::string> part = sub.all_elements();
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

const std::string& Block::min_element() const {
  if (is_leaf()) return elements_.front();
  // Canonical subblock order puts the least element in the first child.
  return subblocks_.front().min_element();
}

bool blocks_equal(const Block& a, const Block& b) { return a == b; }

std::string Block::str() const {
  std::ostringstream out;
  out << '{';
  if (is_leaf()) {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (i) out << ',';
      out << elements_[i];
    }
  } else {
    for (std::size_t i = 0; i < subblocks_.size(); ++i) {
      if (i) out << ',';
      out << subblocks_[i].str();
    }
  }
  out << '}';
  if (kind_ == BlockKind::crisp) out << "_1";
  if (kind_ == BlockKind::fuzzy) out << '_' << degree_.str();
  return out.str();
}

namespace {

nlohmann::ordered_json block_json(const Block& b) {
  nlohmann::ordered_json j;
  switch (b.kind()) {
    case BlockKind::crisp:
      j["kind"] = "crisp";
      break;
    case BlockKind::simple:
      j["kind"] = "simple";
      break;
    case BlockKind::fuzzy:
      j["kind"] = "fuzzy";
      break;
  }
  if (b.kind() != BlockKind::simple) j["degree"] = b.degree().str();
  if (b.is_leaf()) {
    j["elements"] = b.elements();
  } else {
    nlohmann::ordered_json subs = nlohmann::ordered_json::array();
    for (const Block& sub : b.subblocks()) subs.push_back(block_json(sub));
    j["subblocks"] = std::move(subs);
  }
  return j;
}

// Recursive-descent parser for the brace notation.
struct BlockParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(1, message + " at offset " + std::to_string(pos));
  }

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  std::string symbol() {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ',' && text[pos] != '{' &&
           text[pos] != '}' && text[pos] != '_') {
      ++pos;
    }
    if (pos == start) fail("expected a symbol");
    return std::string(text.substr(start, pos - start));
  }

  Degree suffix_degree() {
    expect('_');
    std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(
                                     text[pos])) ||
                                 text[pos] == '.')) {
      ++pos;
    }
    auto d = Degree::parse(text.substr(start, pos - start));
    if (!d) fail("bad degree suffix");
    return *d;
  }

  Block block() {
    expect('{');
    if (peek() == '{') {
      std::vector<Block> subs;
      subs.push_back(block());
      while (peek() == ',') {
        ++pos;
        subs.push_back(block());
      }
      expect('}');
      Degree d = suffix_degree();
      if (d.is_one()) fail("fuzzy block degree must lie in [0,1)");
      return Block::fuzzy(d, std::move(subs));
    }
    std::vector<std::string> elems;
    elems.push_back(symbol());
    while (peek() == ',') {
      ++pos;
      elems.push_back(symbol());
    }
    expect('}');
    Degree d = suffix_degree();
    if (!d.is_one()) fail("leaf block needs degree suffix 1");
    return Block::crisp(std::move(elems));
  }
};

}  // namespace

std::string Block::json() const { return block_json(*this).dump(2); }

Block Block::parse(std::string_view text) {
  BlockParser parser{text};
  Block b = parser.block();
  if (parser.pos != text.size()) parser.fail("trailing input");
  return b;
}

CrispPartition canonicalize_partition(CrispPartition p) {
  for (auto& component : p) std::sort(component.begin(), component.end());
  std::sort(p.begin(), p.end());
  return p;
}

CrispPartition leaf_partition(const Block& b) {
  CrispPartition p;
  if (b.is_leaf()) {
    p.push_back(b.elements());
  } else {
    for (const Block& sub : b.subblocks()) {
      CrispPartition part = leaf_partition(sub);
      p.insert(p.end(), part.begin(), part.end());
    }
  }
  return canonicalize_partition(std::move(p));
}

CrispPartition d_cut_partition(const Block& b, Degree d) {
  CrispPartition p;
  if (b.is_leaf() || b.degree() > d) {
    p.push_back(b.all_elements());
  } else {
    for (const Block& sub : b.subblocks()) {
      CrispPartition part = d_cut_partition(sub, d);
      p.insert(p.end(), part.begin(), part.end());
    }
  }
  return canonicalize_partition(std::move(p));
}

bool is_coarser(const CrispPartition& p, const CrispPartition& q) {
  std::map<std::string, std::size_t> where;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (const std::string& e : p[i]) where[e] = i;
  }
  for (const auto& component : q) {
    auto it = where.find(component.front());
    if (it == where.end()) return false;
    for (const std::string& e : component) {
      auto jt = where.find(e);
      if (jt == where.end() || jt->second != it->second) return false;
    }
  }
  return true;
}

bool is_coarser(const Block& b1, const Block& b2) {
  if (b1.all_elements() != b2.all_elements()) {
    throw std::invalid_argument(
        "is_coarser: blocks cover different element sets");
  }
  // Both cut partitions are piecewise constant in d; they can only change
  // at a degree that appears in one of the trees, so checking at 0 and at
  // every tree degree below 1 covers all thresholds.
  std::set<Degree> thresholds;
  thresholds.insert(Degree::zero());
  auto collect = [&](const Block& b, auto&& self) -> void {
    if (b.kind() == BlockKind::fuzzy) {
      thresholds.insert(b.degree());
      for (const Block& sub : b.subblocks()) self(sub, self);
    }
  };
  collect(b1, collect);
  collect(b2, collect);
  for (Degree d : thresholds) {
    if (d >= Degree::one()) continue;
    if (!is_coarser(d_cut_partition(b1, d), d_cut_partition(b2, d))) {
      return false;
    }
  }
  return true;
}

}  // namespace fzb
