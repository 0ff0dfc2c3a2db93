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

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fzbisim/block.hpp"
#include "fzbisim/degree.hpp"

namespace fzb {

/// A fuzzy relation between two finite vertex domains, stored sparsely:
/// only nonzero entries are kept.  Domains are canonical (sorted).
class FuzzyRelation {
 public:
  FuzzyRelation() = default;
  FuzzyRelation(std::vector<std::string> rows, std::vector<std::string> cols);

  static FuzzyRelation square(std::vector<std::string> domain);

  const std::vector<std::string>& rows() const { return rows_; }
  const std::vector<std::string>& cols() const { return cols_; }
  bool square_domain() const { return rows_ == cols_; }

  std::size_t row_index(const std::string& id) const;
  std::size_t col_index(const std::string& id) const;

  Degree at(std::size_t row, std::size_t col) const;
  Degree at(const std::string& row, const std::string& col) const;

  /// Stores a value; zero erases the entry.
  void set(std::size_t row, std::size_t col, Degree d);
  void set(const std::string& row, const std::string& col, Degree d);

  std::size_t nonzero_count() const { return entries_.size(); }

  struct Entry {
    std::size_t row;
    std::size_t col;
    Degree degree;
  };
  /// All nonzero entries sorted by (row, col).
  std::vector<Entry> nonzero_entries() const;

  /// Sorted "row<TAB>col<TAB>degree" lines, nonzero entries only.
  std::string tsv() const;

  /// Dense matrix: a header line of column ids, then one line per row
  /// with the row id and the degree of every cell.
  std::string matrix() const;

  /// Reads triples over the given domains.  Throws ParseError (with line
  /// numbers) on malformed lines, unknown vertices, explicit zero
  /// degrees, or duplicate pairs.
  static FuzzyRelation parse_tsv(std::vector<std::string> rows,
                                 std::vector<std::string> cols,
                                 std::string_view text);

  friend bool operator==(const FuzzyRelation&, const FuzzyRelation&) = default;

 private:
  std::vector<std::string> rows_, cols_;
  std::map<std::string, std::size_t> row_index_, col_index_;
  // Key packs (row << 32 | col); only nonzero degrees are stored.
  std::map<std::uint64_t, Degree> entries_;
};

struct EquivalenceReport {
  enum class Failure { none, not_reflexive, not_symmetric, not_transitive };

  bool ok = true;
  Failure failure = Failure::none;
  std::string x, y, z;  // witnesses; z only for transitivity

  std::string describe() const;
};

/// Checks that a square relation is a fuzzy equivalence: reflexive
/// (f(x,x) = 1), symmetric, and min-transitive.  On failure the report
/// names a witnessing pair or triple.
EquivalenceReport is_fuzzy_equivalence(const FuzzyRelation& f);

/// The fuzzy equivalence represented by a partition tree: the degree of
/// (x, y) is 1 inside one crisp leaf, else the degree of the least
/// common fuzzy ancestor block.  Cost O(n^2) in the element count.
FuzzyRelation partition_to_relation(const Block& b);

/// Inverse of partition_to_relation for fuzzy equivalences: builds the
/// unique canonical tree whose relation equals f.  Throws
/// std::invalid_argument (with a witness) when f is not a fuzzy
/// equivalence.
Block relation_to_partition(const FuzzyRelation& f);

}  // namespace fzb
