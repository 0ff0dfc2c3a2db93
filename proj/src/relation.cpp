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
#include "fzbisim/relation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fzbisim/graph.hpp"

namespace fzb {

namespace {

constexpr std::uint64_t pack(std::size_t row, std::size_t col) {
  return (static_cast<std::uint64_t>(row) << 32) |
         static_cast<std::uint64_t>(col);
}

std::map<std::string, std::size_t> index_of(
    const std::vector<std::string>& ids) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!index.emplace(ids[i], i).second) {
      throw std::invalid_argument("duplicate id in relation domain: " +
                                  ids[i]);
    }
  }
  return index;
}

}  // namespace

FuzzyRelation::FuzzyRelation(std::vector<std::string> rows,
                             std::vector<std::string> cols) {
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  rows_ = std::move(rows);
  cols_ = std::move(cols);
  row_index_ = index_of(rows_);
  col_index_ = index_of(cols_);
}

FuzzyRelation FuzzyRelation::square(std::vector<std::string> domain) {
  FuzzyRelation f(domain, domain);
  return f;
}

std::size_t FuzzyRelation::row_index(const std::string& id) const {
  auto it = row_index_.find(id);
  if (it == row_index_.end()) {
    throw std::invalid_argument("unknown row id '" + id + "'");
  }
  return it->second;
}

std::size_t FuzzyRelation::col_index(const std::string& id) const {
  auto it = col_index_.find(id);
  if (it == col_index_.end()) {
    throw std::invalid_argument("unknown column id '" + id + "'");
  }
  return it->second;
}

Degree FuzzyRelation::at(std::size_t row, std::size_t col) const {
  auto it = entries_.find(pack(row, col));
  return it == entries_.end() ? Degree::zero() : it->second;
}

Degree FuzzyRelation::at(const std::string& row, const std::string& col) const {
  return at(row_index(row), col_index(col));
}

void FuzzyRelation::set(std::size_t row, std::size_t col, Degree d) {
  if (row >= rows_.size() || col >= cols_.size()) {
    throw std::invalid_argument("relation index out of range");
  }
  if (d.is_zero()) {
    entries_.erase(pack(row, col));
  } else {
    entries_[pack(row, col)] = d;
  }
}

void FuzzyRelation::set(const std::string& row, const std::string& col,
                        Degree d) {
  set(row_index(row), col_index(col), d);
}

std::vector<FuzzyRelation::Entry> FuzzyRelation::nonzero_entries() const {
  std::vector<Entry> entries;
  entries.reserve(entries_.size());
  for (const auto& [key, d] : entries_) {
    entries.push_back(Entry{static_cast<std::size_t>(key >> 32),
                            static_cast<std::size_t>(key & 0xffffffffu), d});
  }
  return entries;
}

std::string FuzzyRelation::tsv() const {
  std::ostringstream out;
  for (const Entry& e : nonzero_entries()) {
    out << rows_[e.row] << '\t' << cols_[e.col] << '\t' << e.degree.str()
        << '\n';
  }
  return out.str();
}

std::string FuzzyRelation::matrix() const {
  std::ostringstream out;
  for (const std::string& c : cols_) out << '\t' << c;
  out << '\n';
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    out << rows_[i];
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      out << '\t' << at(i, j).str();
    }
    out << '\n';
  }
  return out.str();
}

FuzzyRelation FuzzyRelation::parse_tsv(std::vector<std::string> rows,
                                       std::vector<std::string> cols,
                                       std::string_view text) {
  FuzzyRelation f(std::move(rows), std::move(cols));
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
    if (line.empty() || line[0] == '#') continue;

    std::size_t tab1 = line.find('\t');
    std::size_t tab2 =
        tab1 == std::string_view::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string_view::npos ||
        line.find('\t', tab2 + 1) != std::string_view::npos) {
      throw ParseError(line_no, "expected <row>\\t<col>\\t<degree>");
    }
    std::string row(line.substr(0, tab1));
    std::string col(line.substr(tab1 + 1, tab2 - tab1 - 1));
    std::string deg(line.substr(tab2 + 1));

    std::size_t i, j;
    try {
      i = f.row_index(row);
      j = f.col_index(col);
    } catch (const std::invalid_argument& err) {
      throw ParseError(line_no, err.what());
    }
    auto d = Degree::parse(deg);
    if (!d) throw ParseError(line_no, "bad degree '" + deg + "'");
    if (d->is_zero()) {
      throw ParseError(line_no, "explicit zero entry (omit absent pairs)");
    }
    if (!f.at(i, j).is_zero()) {
      throw ParseError(line_no, "duplicate pair " + row + ", " + col);
    }
    f.set(i, j, *d);
  }
  return f;
}

std::string EquivalenceReport::describe() const {
  switch (failure) {
    case Failure::none:
      return "fuzzy equivalence";
    case Failure::not_reflexive:
      return "not reflexive: degree of (" + x + "," + x + ") is below 1";
    case Failure::not_symmetric:
      return "not symmetric at (" + x + "," + y + ")";
    case Failure::not_transitive:
      return "not min-transitive at (" + x + "," + y + "," + z + ")";
  }
  return "";
}

EquivalenceReport is_fuzzy_equivalence(const FuzzyRelation& f) {
  EquivalenceReport report;
  if (!f.square_domain()) {
    throw std::invalid_argument(
        "is_fuzzy_equivalence requires a square relation");
  }
  const auto& ids = f.rows();
  const std::size_t n = ids.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!f.at(i, i).is_one()) {
      report.ok = false;
      report.failure = EquivalenceReport::Failure::not_reflexive;
      report.x = ids[i];
      return report;
    }
  }
  auto entries = f.nonzero_entries();
  for (const auto& e : entries) {
    if (f.at(e.col, e.row) != e.degree) {
      report.ok = false;
      report.failure = EquivalenceReport::Failure::not_symmetric;
      report.x = ids[e.row];
      report.y = ids[e.col];
      return report;
    }
  }
  // Group the entries by row for the composition scan.
  std::vector<std::vector<FuzzyRelation::Entry>> by_row(n);
  for (const auto& e : entries) by_row[e.row].push_back(e);
  for (const auto& e : entries) {
    for (const auto& e2 : by_row[e.col]) {
      Degree lower = min(e.degree, e2.degree);
      if (f.at(e.row, e2.col) < lower) {
        report.ok = false;
        report.failure = EquivalenceReport::Failure::not_transitive;
        report.x = ids[e.row];
        report.y = ids[e.col];
        report.z = ids[e2.col];
        return report;
      }
    }
  }
  return report;
}

namespace {

void fill_relation(const Block& b, FuzzyRelation& f) {
  if (b.is_leaf()) {
    for (const std::string& x : b.elements()) {
      for (const std::string& y : b.elements()) {
        f.set(x, y, Degree::one());
      }
    }
    return;
  }
  for (const Block& sub : b.subblocks()) fill_relation(sub, f);
  Degree d = b.degree();
  if (d.is_zero()) return;  // absent pairs already mean zero
  const auto& subs = b.subblocks();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    std::vector<std::string> left = subs[i].all_elements();
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      std::vector<std::string> right = subs[j].all_elements();
      for (const std::string& x : left) {
        for (const std::string& y : right) {
          f.set(x, y, d);
          f.set(y, x, d);
        }
      }
    }
  }
}

Block tree_of(const FuzzyRelation& f, const std::vector<std::size_t>& members) {
  const auto& ids = f.rows();
  Degree lowest = Degree::one();
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      lowest = min(lowest, f.at(members[a], members[b]));
    }
  }
  if (lowest.is_one()) {
    std::vector<std::string> elems;
    for (std::size_t i : members) elems.push_back(ids[i]);
    return Block::crisp(std::move(elems));
  }
  // Split into the equivalence classes of "related above lowest" and
  // recurse; transitivity makes the classes well defined.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> placed(members.size(), false);
  for (std::size_t a = 0; a < members.size(); ++a) {
    if (placed[a]) continue;
    std::vector<std::size_t> cls{members[a]};
    placed[a] = true;
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (!placed[b] && f.at(members[a], members[b]) > lowest) {
        cls.push_back(members[b]);
        placed[b] = true;
      }
    }
    classes.push_back(std::move(cls));
  }
  std::vector<Block> subs;
  subs.reserve(classes.size());
  for (const auto& cls : classes) subs.push_back(tree_of(f, cls));
  return Block::fuzzy(lowest, std::move(subs));
}

}  // namespace

FuzzyRelation partition_to_relation(const Block& b) {
  FuzzyRelation f = FuzzyRelation::square(b.all_elements());
  fill_relation(b, f);
  return f;
}

Block relation_to_partition(const FuzzyRelation& f) {
  EquivalenceReport report = is_fuzzy_equivalence(f);
  if (!report.ok) {
    throw std::invalid_argument("relation_to_partition: " + report.describe());
  }
  std::vector<std::size_t> all(f.rows().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (all.empty()) {
    throw std::invalid_argument("relation_to_partition: empty domain");
  }
  return tree_of(f, all);
}

}  // namespace fzb
