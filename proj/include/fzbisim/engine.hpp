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
#include <deque>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "fzbisim/block.hpp"
#include "fzbisim/graph.hpp"

namespace fzb {

/// Raised when an internal invariant of the refinement engine is
/// violated; indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct EngineOptions {
  /// Run expensive structural self-checks after every refinement step.
  /// Meant for tests and debugging; slows large runs down considerably.
  bool check_invariants = false;
  /// Track per-vertex participation counters for the splitter phase.
  bool instrument = false;
  /// When set, a line-oriented refinement trace is written here.
  std::ostream* trace = nullptr;
};

struct EngineStats {
  std::uint64_t refine2_calls = 0;
  std::uint64_t splits = 0;
  /// Largest number of splitter calls any single vertex took part in
  /// (only tracked with EngineOptions::instrument).
  std::uint32_t max_refine2_participation = 0;
};

/// Computes the fuzzy partition corresponding to the greatest fuzzy
/// auto-bisimulation of the graph, as a canonical tree with crisp
/// leaves.  Runs in O((m log l + n) log n) where l is the number of
/// distinct degrees.  Throws std::invalid_argument on an empty vertex
/// set.
Block compute_fuzzy_partition(const FuzzyGraph& g,
                              const EngineOptions& options = {},
                              EngineStats* stats = nullptr);

struct StabilityReport {
  bool ok = true;
  bool edge_condition = false;  // false: vertex label condition
  std::string x, xp;            // vertices in one cut component that differ
  std::string symbol;           // p or r
  std::vector<std::string> component;  // the target component Y (edges)

  std::string describe() const;
};

/// Test oracle: checks that the d-cut of b is stable with respect to the
/// crisp partition q, i.e. vertices sharing a cut component agree on
/// "label degree above d" for every symbol and on "maximal edge degree
/// into Y above d" for every edge label and every component Y of q.
/// O(|q| * (n + m)); intended for validation, not for production runs.
StabilityReport is_d_cut_stable(const FuzzyGraph& g, const Block& b, Degree d,
                                const CrispPartition& q);

namespace engine {

using LabelId = std::uint32_t;
using Units = std::uint32_t;  // degree in 1e-9 units

/// Doubly linked intrusive list over member pointers.  O(1) splice of a
/// known element; the list never owns its nodes.
template <class T, T* T::*Next, T* T::*Prev>
struct IList {
  T* head = nullptr;
  T* tail = nullptr;
  std::size_t n = 0;

  bool empty() const { return n == 0; }

  void push_back(T* node) {
    node->*Next = nullptr;
    node->*Prev = tail;
    if (tail) {
      tail->*Next = node;
    } else {
      head = node;
    }
    tail = node;
    ++n;
  }

  void erase(T* node) {
    T* prev = node->*Prev;
    T* next = node->*Next;
    if (prev) {
      prev->*Next = next;
    } else {
      head = next;
    }
    if (next) {
      next->*Prev = prev;
    } else {
      tail = prev;
    }
    node->*Next = nullptr;
    node->*Prev = nullptr;
    --n;
  }

  void clear() {
    head = tail = nullptr;
    n = 0;
  }
};

struct Vertex;
struct MBlock;
struct PComponent;
struct PCEdge;

struct Edge {
  LabelId label = 0;
  std::uint32_t origin = 0;
  std::uint32_t dest = 0;
  Units degree = 0;
  /// Aggregate connection of the origin vertex to the component that
  /// currently contains the destination.
  PCEdge* pc_edge = nullptr;
};

struct Vertex {
  std::uint32_t index = 0;
  Vertex* next = nullptr;  // element / departing list links
  Vertex* prev = nullptr;
  MBlock* block = nullptr;  // leaf that currently holds this vertex
  bool processed = false;
  /// Sorted label memberships (label id, degree).
  std::vector<std::pair<LabelId, Units>> labels;

  // Scratch sets used while building split keys; cleared after each
  // refinement step.  Duplicates are allowed here and removed when the
  // key string is built.
  std::vector<LabelId> label2;
  std::vector<std::pair<LabelId, std::uint64_t>> label3;  // (r, pc serial)
  std::vector<LabelId> label4;
  std::vector<LabelId> label5;

  std::uint32_t refine2_count = 0;  // instrumentation only
};

using VertexList = IList<Vertex, &Vertex::next, &Vertex::prev>;

/// Insertion-ordered map from split key to the vertices that move there.
/// Iteration order is the order in which keys first appeared, which
/// keeps block creation deterministic.
struct KeyedLists {
  std::vector<std::pair<std::string, VertexList>> groups;
  std::unordered_map<std::string, std::size_t> index;

  VertexList& at(const std::string& key) {
    auto [it, fresh] = index.emplace(key, groups.size());
    if (fresh) groups.emplace_back(key, VertexList{});
    return groups[it->second].second;
  }
  bool empty() const { return groups.empty(); }
  std::size_t size() const { return groups.size(); }
  void clear() {
    groups.clear();
    index.clear();
  }
};

/// Mutable tree node: either a fuzzy inner block or a leaf (simple, or
/// crisp after the final conversion).  A leaf additionally lives in the
/// block list of one partition component.
struct MBlock {
  bool fuzzy = false;
  bool crisp = false;
  Units degree = 0;  // fuzzy only
  MBlock* parent = nullptr;

  MBlock* next = nullptr;  // sibling links inside parent->subblocks
  MBlock* prev = nullptr;
  IList<MBlock, &MBlock::next, &MBlock::prev> subblocks;  // fuzzy only

  VertexList elements;  // leaf only
  PComponent* pc = nullptr;
  MBlock* next2 = nullptr;  // links inside pc->sc_blocks
  MBlock* prev2 = nullptr;

  KeyedLists departing1;  // groups leaving during refine_1a / refine_1b
  KeyedLists departing2;  // groups leaving during refine_2
};

using BlockList = IList<MBlock, &MBlock::next, &MBlock::prev>;
using SCBlockList = IList<MBlock, &MBlock::next2, &MBlock::prev2>;

struct PPartition;

/// One component of the current partition: a set of leaf blocks whose
/// union forms the component.  Components with more than one block are
/// compound and queue up for splitting.
struct PComponent {
  SCBlockList sc_blocks;
  std::uint64_t serial = 0;  // stable identity used inside split keys
  PPartition* owner = nullptr;
  bool in_compound_list = false;
  PComponent* next = nullptr;
  PComponent* prev = nullptr;

  bool compound() const { return sc_blocks.n > 1; }

  /// The smaller of the first two blocks (the first on a tie).
  MBlock* smaller_block() const {
    MBlock* first = sc_blocks.head;
    MBlock* second = first->next2;
    return first->elements.n <= second->elements.n ? first : second;
  }

  void add_block(MBlock* b);
  void remove_block(MBlock* b);
};

using PCList = IList<PComponent, &PComponent::next, &PComponent::prev>;

struct PPartition {
  PCList compound;
  PCList simple;
};

/// Degree-keyed edge counters for one (vertex, component) connection.
/// counter[r] maps each degree to the number of edges with that label
/// and degree; the maximal key is the current sup of E(x, r, Y).
struct PCEdge {
  std::map<LabelId, std::map<Units, std::uint32_t>> counter;
  PCEdge* departing = nullptr;
  PCEdge* source = nullptr;

  void push_key(LabelId r, Units d) { ++counter[r][d]; }

  void pop_key(LabelId r, Units d) {
    auto it = counter.find(r);
    if (it == counter.end()) throw InternalError("pop_key: no such label");
    auto jt = it->second.find(d);
    if (jt == it->second.end()) throw InternalError("pop_key: no such degree");
    if (--jt->second == 0) it->second.erase(jt);
    if (it->second.empty()) counter.erase(it);
  }

  Units max_key(LabelId r) const {
    auto it = counter.find(r);
    if (it == counter.end() || it->second.empty()) return 0;
    return it->second.rbegin()->first;
  }
};

/// Either a vertex label membership or an edge, scheduled by degree.
struct LabelDegreeEvent {
  Units degree = 0;
  bool about_vertex = false;
  std::uint32_t vertex = 0;  // vertex events
  LabelId vlabel = 0;
  std::uint32_t edge = 0;  // edge events
};

struct State {
  std::vector<std::string> vertex_ids;  // sorted; index is the engine id
  std::vector<std::string> vlabel_names;
  std::vector<std::string> elabel_names;

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  // Incoming edges in CSR form: edge indices grouped by destination.
  std::vector<std::uint32_t> coming;
  std::vector<std::uint32_t> coming_off;  // size n + 1

  std::vector<LabelDegreeEvent> events;  // sorted by degree, stable
  std::size_t events_idx = 0;
  std::vector<Units> all_degrees;  // 0 prepended, ascending

  PPartition partition;
  MBlock* root = nullptr;

  std::deque<MBlock> block_arena;
  std::deque<PComponent> pc_arena;
  std::deque<PCEdge> pce_arena;
  std::uint64_t next_serial = 0;

  EngineOptions options;
  EngineStats stats;

  const std::string& id_of(const Vertex& v) const {
    return vertex_ids[v.index];
  }
};

/// Builds the initial state: one simple block holding every vertex, one
/// partition component, one PCEdge per vertex with outgoing edges, and
/// the degree-sorted event sequence.
State initialize(const FuzzyGraph& g, EngineOptions options = {});

/// Level 0 split: groups vertices by their present label symbols and
/// edge labels.
void refine_1a(State& s);

/// Level d > 0 split: consumes all events of degree d and regroups the
/// touched vertices by their "exactly d" label and component keys.
void refine_1b(State& s, Units d);

/// Splitter step: carves x out of its component and refines every
/// predecessor block by connection to x versus the remainder.
void refine_2(State& s, Units d, MBlock* x);

// The four phases of refine_2, callable separately by tests.
void compute_pcomponent_edges(State& s,
                              const std::vector<std::uint32_t>& vertices_x);
void compute_subblocks(State& s, Units d,
                       const std::vector<std::uint32_t>& vertices_x);
void do_splitting(State& s, Units d, MBlock* x,
                  const std::vector<std::uint32_t>& vertices_x);
void clear_auxiliary_info(State& s,
                          const std::vector<std::uint32_t>& vertices_x);

/// Main loop over the degree table plus the final conversion of the
/// remaining simple leaves to crisp ones.
Block run(State& s);

/// Snapshot of the current tree as an immutable canonical Block without
/// changing the state; intermediate leaves come out as simple blocks.
Block snapshot(State& s);

/// Final conversion: marks every remaining leaf crisp and snapshots.
Block freeze(State& s);

/// Validates every structural invariant of the current state; throws
/// InternalError naming the first violation.  d is the level just
/// processed.
void check_state_invariants(State& s, Units d);

/// Test helper: the leaf currently holding the vertex with this id.
MBlock* leaf_of(State& s, const std::string& vertex_id);

}  // namespace engine

}  // namespace fzb
