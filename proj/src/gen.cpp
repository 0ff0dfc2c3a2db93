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
#include "fzbisim/gen.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

namespace fzb {

namespace {

// std::uniform_int_distribution is implementation-defined; this keeps
// the draw sequence identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t k) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % k;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % k;
}

std::string padded_id(char prefix, std::uint32_t index, std::size_t width) {
  std::string digits = std::to_string(index);
  std::string id(1, prefix);
  id.append(width - digits.size(), '0');
  id += digits;
  return id;
}

}  // namespace

std::vector<Degree> even_degree_pool(std::uint32_t count) {
  if (count == 0) {
    throw std::invalid_argument("degree pool must not be empty");
  }
  std::vector<Degree> pool;
  pool.reserve(count);
  for (std::uint32_t i = 1; i <= count; ++i) {
    pool.push_back(Degree::from_units(static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(Degree::kScale) * i / count)));
  }
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

FuzzyGraph generate(const GenSpec& spec) {
  if (spec.n == 0) {
    throw std::invalid_argument("generate: need at least one vertex");
  }
  const std::uint64_t capacity = static_cast<std::uint64_t>(spec.n) * spec.n *
                                 std::max<std::uint32_t>(spec.labels_e, 1);
  if (spec.m > 0 && spec.labels_e == 0) {
    throw std::invalid_argument("generate: edges need an edge label symbol");
  }
  if (spec.m > capacity) {
    throw std::invalid_argument("generate: more edges than distinct triples");
  }

  std::vector<Degree> pool =
      spec.degrees.empty() ? even_degree_pool(spec.degree_count) : spec.degrees;
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  for (Degree d : pool) {
    if (d.is_zero()) {
      throw std::invalid_argument("generate: zero degree in the pool");
    }
  }

  const std::size_t width = std::to_string(spec.n - 1).size();
  std::vector<std::string> vertices;
  vertices.reserve(spec.n);
  for (std::uint32_t i = 0; i < spec.n; ++i) {
    vertices.push_back(padded_id('v', i, width));
  }
  std::set<std::string> sigma_v, sigma_e;
  std::vector<std::string> vlabels, elabels;
  for (std::uint32_t j = 0; j < spec.labels_v; ++j) {
    vlabels.push_back("p" + std::to_string(j));
    sigma_v.insert(vlabels.back());
  }
  for (std::uint32_t j = 0; j < spec.labels_e; ++j) {
    elabels.push_back("r" + std::to_string(j));
    sigma_e.insert(elabels.back());
  }

  std::mt19937_64 rng(spec.seed);
  auto draw_degree = [&] { return pool[uniform_below(rng, pool.size())]; };

  std::map<std::string, FuzzyGraph::LabelMap> labels;
  for (std::uint32_t i = 0; i < spec.n; ++i) {
    FuzzyGraph::LabelMap& map = labels[vertices[i]];
    for (std::uint32_t j = 0; j < spec.labels_v; ++j) {
      if (uniform_below(rng, 2) == 1) map[vlabels[j]] = draw_degree();
    }
  }

  using Triple = std::array<std::uint32_t, 3>;  // origin, label, dest
  std::set<Triple> used;
  std::vector<FuzzyEdge> edges;
  edges.reserve(spec.m);
  for (std::uint64_t k = 0; k < spec.m; ++k) {
    Triple t{};
    bool fresh = false;
    for (int attempt = 0; attempt < 32 && !fresh; ++attempt) {
      t = {static_cast<std::uint32_t>(uniform_below(rng, spec.n)),
           static_cast<std::uint32_t>(uniform_below(rng, spec.labels_e)),
           static_cast<std::uint32_t>(uniform_below(rng, spec.n))};
      fresh = used.insert(t).second;
    }
    if (!fresh) {
      // Dense spec: walk the triple space from the last collision to the
      // next free slot.  Feasibility guarantees one exists.
      do {
        if (++t[2] == spec.n) {
          t[2] = 0;
          if (++t[1] == spec.labels_e) {
            t[1] = 0;
            if (++t[0] == spec.n) t[0] = 0;
          }
        }
      } while (used.count(t));
      used.insert(t);
    }
    edges.push_back(
        {vertices[t[0]], elabels[t[1]], vertices[t[2]], draw_degree()});
  }

  return FuzzyGraph::make(std::move(vertices), std::move(labels),
                          std::move(edges), std::move(sigma_v),
                          std::move(sigma_e));
}

}  // namespace fzb
