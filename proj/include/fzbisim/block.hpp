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

#include <string>
#include <string_view>
#include <vector>

#include "fzbisim/degree.hpp"

namespace fzb {

enum class BlockKind { crisp, simple, fuzzy };

/// One node of a fuzzy-partition representation tree, as an immutable
/// canonical value.
///
/// A crisp or simple block is a leaf holding a nonempty set of vertex
/// ids.  A fuzzy block holds a degree in [0, 1) and more than one
/// subblock whose element sets are disjoint; every fuzzy subblock has a
/// strictly larger degree than its parent.  Crisp leaves count as degree
/// 1, simple leaves have no degree (they only appear in intermediate
/// states of the refinement engine).
///
/// Canonical form: leaf elements are sorted, subblocks are ordered by
/// their minimal element.  Since construction canonicalizes, structural
/// equality is set equality.
///
/// The textual form is the brace notation with degree suffixes, e.g.
/// "{{{a,b}_1,{c}_1}_0.3,{g}_1}_0"; simple leaves print without suffix.
class Block {
 public:
  static Block crisp(std::vector<std::string> elements);
  static Block simple(std::vector<std::string> elements);
  static Block fuzzy(Degree degree, std::vector<Block> subblocks);

  BlockKind kind() const { return kind_; }
  bool is_leaf() const { return kind_ != BlockKind::fuzzy; }

  /// Degree of the block: the stored degree for fuzzy blocks, 1 for
  /// crisp leaves.  Simple leaves have no degree; asking for it throws.
  Degree degree() const;

  /// Leaf elements (valid only for leaves).
  const std::vector<std::string>& elements() const;

  /// Child blocks (valid only for fuzzy blocks).
  const std::vector<Block>& subblocks() const;

  /// Union of all leaf elements below this block, sorted.
  std::vector<std::string> all_elements() const;

  /// Least vertex id contained anywhere below this block.
  const std::string& min_element() const;

  friend bool operator==(const Block&, const Block&) = default;

  std::string str() const;

  /// JSON document form (kind/degree/elements/subblocks), degrees as
  /// canonical decimal strings.
  std::string json() const;

  /// Parses the brace notation (crisp and fuzzy blocks only).  Throws
  /// ParseError on malformed input.
  static Block parse(std::string_view text);

 private:
  Block() = default;

  BlockKind kind_ = BlockKind::crisp;
  Degree degree_;                    // fuzzy only
  std::vector<std::string> elements_;  // leaves only
  std::vector<Block> subblocks_;       // fuzzy only
};

/// A crisp partition as a canonical value: components sorted by first
/// element, elements sorted within each component.
using CrispPartition = std::vector<std::vector<std::string>>;

CrispPartition canonicalize_partition(CrispPartition p);

/// The partition formed by the leaves of the tree.
CrispPartition leaf_partition(const Block& b);

/// The d-cut: a crisp or simple block, or a fuzzy block with degree > d,
/// collapses into a single component; otherwise the cuts of the
/// subblocks are united.
CrispPartition d_cut_partition(const Block& b, Degree d);

/// Order-insensitive tree equality (equivalent to == on canonical
/// values).
bool blocks_equal(const Block& a, const Block& b);

/// True when every d-cut of b1 is coarser than (refined by) the d-cut of
/// b2, for every d in [0, 1).  Throws std::invalid_argument when the two
/// trees do not cover the same element set.
bool is_coarser(const Block& b1, const Block& b2);

/// True when every component of q is contained in a component of p.
bool is_coarser(const CrispPartition& p, const CrispPartition& q);

}  // namespace fzb
