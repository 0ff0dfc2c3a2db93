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
#include <vector>

#include "fzbisim/graph.hpp"

namespace fzb {

/// Parameters for the deterministic random-graph generator.
struct GenSpec {
  std::uint32_t n = 1;         // vertex count
  std::uint64_t m = 0;         // edge count; must fit n^2 * labels_e
  std::uint32_t labels_v = 1;  // vertex label symbols p0, p1, ...
  std::uint32_t labels_e = 1;  // edge label symbols r0, r1, ...
  /// Explicit degree pool; every value in (0, 1].  When empty,
  /// degree_count evenly spaced values i/degree_count are used instead.
  std::vector<Degree> degrees;
  std::uint32_t degree_count = 2;
  std::uint64_t seed = 0;
};

/// i/count for i = 1..count; always ends with 1.
std::vector<Degree> even_degree_pool(std::uint32_t count);

/// Generates a graph with exactly spec.n vertices and spec.m distinct
/// edges.  Output is a pure function of the spec: the same spec yields a
/// byte-identical serialization on every platform.  Vertex labels are
/// included with probability 1/2 each; degrees are drawn uniformly from
/// the pool.  Throws std::invalid_argument on an infeasible spec.
FuzzyGraph generate(const GenSpec& spec);

}  // namespace fzb
