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
#include "fzbisim/engine.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace fzb {

namespace engine {

namespace {

void put_u32(std::string& s, std::uint32_t x) {
  for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

void put_u64(std::string& s, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) s.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Key for refine_1a / refine_1b: the label symbols in label2 plus the
// (edge label, component) pairs in label3, canonicalized.
std::string make_key1(Vertex& v) {
  sort_unique(v.label2);
  sort_unique(v.label3);
  std::string key;
  key.reserve(1 + 4 * v.label2.size() + 12 * v.label3.size());
  put_u32(key, static_cast<std::uint32_t>(v.label2.size()));
  for (LabelId p : v.label2) put_u32(key, p);
  for (const auto& [r, serial] : v.label3) {
    put_u32(key, r);
    put_u64(key, serial);
  }
  return key;
}

// Key for refine_2: per edge label connecting above d to the carved-out
// block (label5), whether the remainder connection also stays above d
// (label4).  Labels whose edges into the carved-out block all sit at or
// below d carry no information: block mates agree on the profile of the
// united component, so their remainder connection is unchanged whether
// or not a low edge into the split-off part exists.
std::string make_key2(Vertex& v) {
  sort_unique(v.label4);
  sort_unique(v.label5);
  std::string key;
  key.reserve(1 + 5 * v.label5.size());
  put_u32(key, static_cast<std::uint32_t>(v.label5.size()));
  for (LabelId r : v.label5) {
    put_u32(key, r);
    key.push_back(
        std::binary_search(v.label4.begin(), v.label4.end(), r) ? 1 : 0);
  }
  return key;
}

MBlock* new_leaf(State& s, MBlock* parent, const VertexList& members,
                 PComponent* pc) {
  s.block_arena.emplace_back();
  MBlock* b = &s.block_arena.back();
  b->elements = members;
  for (Vertex* v = b->elements.head; v; v = v->next) v->block = b;
  b->parent = parent;
  if (parent) parent->subblocks.push_back(b);
  if (pc) pc->add_block(b);
  return b;
}

MBlock* new_fuzzy(State& s, MBlock* parent, Units degree) {
  s.block_arena.emplace_back();
  MBlock* b = &s.block_arena.back();
  b->fuzzy = true;
  b->degree = degree;
  b->parent = parent;
  if (parent) parent->subblocks.push_back(b);
  return b;
}

PComponent* new_pcomponent(State& s) {
  s.pc_arena.emplace_back();
  PComponent* pc = &s.pc_arena.back();
  pc->serial = s.next_serial++;
  pc->owner = &s.partition;
  s.partition.simple.push_back(pc);
  pc->in_compound_list = false;
  return pc;
}

PCEdge* new_pcedge(State& s) {
  s.pce_arena.emplace_back();
  return &s.pce_arena.back();
}

std::string degree_str(Units d) { return Degree::from_units(d).str(); }

// --- trace helpers ------------------------------------------------------

constexpr std::size_t kTraceSetCap = 32;

void trace_set(std::ostream& out, std::vector<std::string> ids) {
  if (ids.size() > kTraceSetCap) {
    out << "{#" << ids.size() << '}';
    return;
  }
  std::sort(ids.begin(), ids.end());
  out << '{';
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out << ',';
    out << ids[i];
  }
  out << '}';
}

std::vector<std::string> list_ids(const State& s, const VertexList& list) {
  std::vector<std::string> ids;
  ids.reserve(list.n);
  for (Vertex* v = list.head; v; v = v->next) ids.push_back(s.id_of(*v));
  return ids;
}

// Emits "d=<d> split {parent} -> {g1} | {g2} ..."; groups in creation
// order, the remainder (when present) last.
void trace_split(State& s, Units d, const KeyedLists& groups,
                 const VertexList& remainder) {
  if (!s.options.trace) return;
  std::ostream& out = *s.options.trace;
  std::vector<std::string> parent;
  std::vector<std::vector<std::string>> parts;
  for (const auto& [key, list] : groups.groups) {
    parts.push_back(list_ids(s, list));
    parent.insert(parent.end(), parts.back().begin(), parts.back().end());
  }
  if (!remainder.empty()) {
    parts.push_back(list_ids(s, remainder));
    parent.insert(parent.end(), parts.back().begin(), parts.back().end());
  }
  out << "d=" << degree_str(d) << " split ";
  trace_set(out, std::move(parent));
  out << " ->";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out << (i ? " | " : " ");
    trace_set(out, std::move(parts[i]));
  }
  out << '\n';
}

// --- iteration over the edges coming into a vertex set -------------------

template <class Fn>
void for_coming_edges(State& s, const std::vector<std::uint32_t>& vertices_x,
                      Fn&& fn) {
  for (std::uint32_t xi : vertices_x) {
    for (std::uint32_t k = s.coming_off[xi]; k < s.coming_off[xi + 1]; ++k) {
      fn(s.edges[s.coming[k]]);
    }
  }
}

}  // namespace

void PComponent::add_block(MBlock* b) {
  sc_blocks.push_back(b);
  b->pc = this;
  if (sc_blocks.n == 2) {
    owner->simple.erase(this);
    owner->compound.push_back(this);
    in_compound_list = true;
  }
}

void PComponent::remove_block(MBlock* b) {
  sc_blocks.erase(b);
  if (sc_blocks.n == 1 && in_compound_list) {
    owner->compound.erase(this);
    owner->simple.push_back(this);
    in_compound_list = false;
  }
}

State initialize(const FuzzyGraph& g, EngineOptions options) {
  if (g.vertices().empty()) {
    throw std::invalid_argument("compute_fuzzy_partition: empty vertex set");
  }
  State s;
  s.options = options;
  s.vertex_ids = g.vertices();

  auto vertex_index = [&](const std::string& id) -> std::uint32_t {
    auto it = std::lower_bound(s.vertex_ids.begin(), s.vertex_ids.end(), id);
    return static_cast<std::uint32_t>(it - s.vertex_ids.begin());
  };

  std::set<std::string> vlabels, elabels;
  for (const std::string& v : g.vertices()) {
    for (const auto& [p, d] : g.labels(v)) vlabels.insert(p);
  }
  for (const FuzzyEdge& e : g.edges()) elabels.insert(e.label);
  s.vlabel_names.assign(vlabels.begin(), vlabels.end());
  s.elabel_names.assign(elabels.begin(), elabels.end());
  auto vlabel_id = [&](const std::string& p) -> LabelId {
    return static_cast<LabelId>(
        std::lower_bound(s.vlabel_names.begin(), s.vlabel_names.end(), p) -
        s.vlabel_names.begin());
  };
  auto elabel_id = [&](const std::string& r) -> LabelId {
    return static_cast<LabelId>(
        std::lower_bound(s.elabel_names.begin(), s.elabel_names.end(), r) -
        s.elabel_names.begin());
  };

  const std::size_t n = s.vertex_ids.size();
  s.vertices.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    s.vertices[i].index = i;
    for (const auto& [p, d] : g.labels(s.vertex_ids[i])) {
      s.vertices[i].labels.emplace_back(vlabel_id(p), d.units());
    }
  }

  s.edges.reserve(g.edges().size());
  for (const FuzzyEdge& e : g.edges()) {
    Edge edge;
    edge.label = elabel_id(e.label);
    edge.origin = vertex_index(e.origin);
    edge.dest = vertex_index(e.dest);
    edge.degree = e.degree.units();
    s.edges.push_back(edge);
  }
  const std::size_t m = s.edges.size();

  s.coming_off.assign(n + 1, 0);
  for (const Edge& e : s.edges) ++s.coming_off[e.dest + 1];
  for (std::size_t i = 0; i < n; ++i) s.coming_off[i + 1] += s.coming_off[i];
  s.coming.resize(m);
  {
    std::vector<std::uint32_t> cursor(s.coming_off.begin(),
                                      s.coming_off.end() - 1);
    for (std::uint32_t idx = 0; idx < m; ++idx) {
      s.coming[cursor[s.edges[idx].dest]++] = idx;
    }
  }

  // Event sequence: stable sort keeps label events before edge events of
  // the same degree and both in construction order.
  for (std::uint32_t i = 0; i < n; ++i) {
    for (const auto& [p, d] : s.vertices[i].labels) {
      LabelDegreeEvent ev;
      ev.degree = d;
      ev.about_vertex = true;
      ev.vertex = i;
      ev.vlabel = p;
      s.events.push_back(ev);
    }
  }
  for (std::uint32_t idx = 0; idx < m; ++idx) {
    LabelDegreeEvent ev;
    ev.degree = s.edges[idx].degree;
    ev.edge = idx;
    s.events.push_back(ev);
  }
  std::stable_sort(
      s.events.begin(), s.events.end(),
      [](const LabelDegreeEvent& a, const LabelDegreeEvent& b) {
        return a.degree < b.degree;
      });

  s.all_degrees.push_back(0);
  for (const LabelDegreeEvent& ev : s.events) {
    if (s.all_degrees.back() != ev.degree) s.all_degrees.push_back(ev.degree);
  }

  // One simple block holding everything, in one partition component.
  PComponent* pc0 = new_pcomponent(s);
  s.block_arena.emplace_back();
  MBlock* b = &s.block_arena.back();
  for (Vertex& v : s.vertices) {
    b->elements.push_back(&v);
    v.block = b;
  }
  pc0->add_block(b);
  s.root = b;

  // One PCEdge per vertex with outgoing edges; edges are sorted by
  // origin, so the groups are contiguous.
  std::size_t begin = 0;
  while (begin < m) {
    std::size_t end = begin;
    PCEdge* pce = new_pcedge(s);
    while (end < m && s.edges[end].origin == s.edges[begin].origin) {
      pce->push_key(s.edges[end].label, s.edges[end].degree);
      s.edges[end].pc_edge = pce;
      ++end;
    }
    begin = end;
  }
  return s;
}

void refine_1a(State& s) {
  if (s.options.trace) *s.options.trace << "d=0 refine1a\n";
  MBlock* b = s.root;

  // Level 0 looks at presence only, so every event contributes.
  for (const LabelDegreeEvent& ev : s.events) {
    if (ev.about_vertex) {
      s.vertices[ev.vertex].label2.push_back(ev.vlabel);
    } else {
      const Edge& e = s.edges[ev.edge];
      s.vertices[e.origin].label3.emplace_back(e.label, b->pc->serial);
    }
  }
  for (Vertex& v : s.vertices) {
    b->elements.erase(&v);
    b->departing1.at(make_key1(v)).push_back(&v);
  }

  if (b->departing1.size() == 1) {
    b->elements = b->departing1.groups[0].second;
  } else {
    trace_split(s, 0, b->departing1, b->elements);
    PComponent* pc = b->pc;
    pc->remove_block(b);
    MBlock* b2 = new_fuzzy(s, nullptr, 0);
    for (auto& [key, list] : b->departing1.groups) {
      new_leaf(s, b2, list, pc);
    }
    s.root = b2;
    ++s.stats.splits;
  }
  b->departing1.clear();
  for (Vertex& v : s.vertices) {
    v.label2.clear();
    v.label3.clear();
  }
}

void refine_1b(State& s, Units d) {
  std::vector<Vertex*> to_process;

  std::size_t consumed = 0;
  while (s.events_idx < s.events.size() &&
         s.events[s.events_idx].degree == d) {
    const LabelDegreeEvent& ev = s.events[s.events_idx++];
    ++consumed;
    if (ev.about_vertex) {
      Vertex& x = s.vertices[ev.vertex];
      x.label2.push_back(ev.vlabel);
      if (!x.processed) {
        to_process.push_back(&x);
        x.processed = true;
      }
    } else {
      Edge& e = s.edges[ev.edge];
      // Only relevant when the edge carries the current sup of
      // E(x, r, Y): then the sup is exactly d and x must regroup.
      if (e.pc_edge->max_key(e.label) == d) {
        Vertex& x = s.vertices[e.origin];
        PComponent* pc = s.vertices[e.dest].block->pc;
        x.label3.emplace_back(e.label, pc->serial);
        if (!x.processed) {
          to_process.push_back(&x);
          x.processed = true;
        }
      }
    }
  }
  if (s.options.trace) {
    *s.options.trace << "d=" << degree_str(d) << " refine1b events="
                     << consumed << '\n';
  }

  for (Vertex* x : to_process) {
    MBlock* bx = x->block;
    bx->elements.erase(x);
    bx->departing1.at(make_key1(*x)).push_back(x);
  }

  for (Vertex* x : to_process) {
    MBlock* bx = x->block;
    if (bx->departing1.empty()) continue;  // this block is already done
    if (bx->departing1.size() == 1 && bx->elements.empty()) {
      bx->elements = bx->departing1.groups[0].second;
    } else {
      trace_split(s, d, bx->departing1, bx->elements);
      PComponent* pc = bx->pc;
      MBlock* bp = bx->parent;
      if (bp && bp->degree >= d) {
        throw InternalError("refine_1b: parent degree not below the level");
      }
      if (bp) bp->subblocks.erase(bx);
      MBlock* bx2 = new_fuzzy(s, bp, d);
      if (s.root == bx) s.root = bx2;
      for (auto& [key, list] : bx->departing1.groups) {
        new_leaf(s, bx2, list, pc);
      }
      if (!bx->elements.empty()) {
        bx2->subblocks.push_back(bx);
        bx->parent = bx2;
      } else {
        pc->remove_block(bx);
      }
      ++s.stats.splits;
    }
    bx->departing1.clear();
  }

  for (Vertex* x : to_process) {
    x->label2.clear();
    x->label3.clear();
    x->processed = false;
  }
}

void compute_pcomponent_edges(State& s,
                              const std::vector<std::uint32_t>& vertices_x) {
  for_coming_edges(s, vertices_x, [&](Edge& e) {
    PCEdge* pce = e.pc_edge;
    if (!pce->departing) {
      pce->departing = new_pcedge(s);
      pce->departing->source = pce;
    }
    pce->departing->push_key(e.label, e.degree);
    pce->pop_key(e.label, e.degree);
  });
}

void compute_subblocks(State& s, Units d,
                       const std::vector<std::uint32_t>& vertices_x) {
  for_coming_edges(s, vertices_x, [&](Edge& e) {
    Vertex& v = s.vertices[e.origin];
    PCEdge* pce = e.pc_edge;
    PCEdge* dpce = pce->departing;
    if (pce->max_key(e.label) > d) v.label4.push_back(e.label);
    if (dpce->max_key(e.label) > d) v.label5.push_back(e.label);
  });
  for_coming_edges(s, vertices_x, [&](Edge& e) {
    Vertex& v = s.vertices[e.origin];
    // A predecessor has to leave its block only when its connection to
    // the carved-out part still matters above d; predecessors whose
    // edges into it all sit at or below d keep the same "above d"
    // signature as untouched block mates and must stay with them.
    if (!v.processed && !v.label5.empty()) {
      MBlock* bv = v.block;
      bv->elements.erase(&v);
      bv->departing2.at(make_key2(v)).push_back(&v);
      v.processed = true;
    }
  });
}

void do_splitting(State& s, Units d, MBlock* x,
                  const std::vector<std::uint32_t>& vertices_x) {
  PComponent* y = x->pc;
  y->remove_block(x);
  PComponent* pcn = new_pcomponent(s);
  pcn->add_block(x);

  for_coming_edges(s, vertices_x, [&](Edge& e) {
    e.pc_edge = e.pc_edge->departing;
    Vertex& v = s.vertices[e.origin];
    MBlock* bv = v.block;
    if (bv->departing2.empty()) return;
    if (bv->departing2.size() == 1 && bv->elements.empty()) {
      bv->elements = bv->departing2.groups[0].second;
      bv->departing2.clear();
      return;
    }
    trace_split(s, d, bv->departing2, bv->elements);
    PComponent* pc = bv->pc;
    MBlock* bp = bv->parent;
    if (bp && bp->degree > d) {
      throw InternalError("do_splitting: parent degree above the level");
    }
    if (!bp || bp->degree < d) {
      if (bp) bp->subblocks.erase(bv);
      MBlock* bv2 = new_fuzzy(s, bp, d);
      if (s.root == bv) s.root = bv2;
      for (auto& [key, list] : bv->departing2.groups) {
        new_leaf(s, bv2, list, pc);
      }
      if (!bv->elements.empty()) {
        bv2->subblocks.push_back(bv);
        bv->parent = bv2;
      } else {
        pc->remove_block(bv);
      }
    } else {
      // The parent was created at this level: graft the new blocks as
      // additional siblings instead of nesting equal degrees.
      for (auto& [key, list] : bv->departing2.groups) {
        new_leaf(s, bp, list, pc);
      }
      if (bv->elements.empty()) {
        bp->subblocks.erase(bv);
        pc->remove_block(bv);
      }
    }
    ++s.stats.splits;
    bv->departing2.clear();
  });
}

void clear_auxiliary_info(State& s,
                          const std::vector<std::uint32_t>& vertices_x) {
  for_coming_edges(s, vertices_x, [&](Edge& e) {
    Vertex& v = s.vertices[e.origin];
    v.label4.clear();
    v.label5.clear();
    v.processed = false;
    PCEdge* pce = e.pc_edge;
    if (pce->source) {
      pce->source->departing = nullptr;
      pce->source = nullptr;
    }
  });
}

void refine_2(State& s, Units d, MBlock* x) {
  std::vector<std::uint32_t> vertices_x;  // copy: x may be split below
  vertices_x.reserve(x->elements.n);
  for (Vertex* v = x->elements.head; v; v = v->next) {
    vertices_x.push_back(v->index);
  }
  ++s.stats.refine2_calls;
  if (s.options.instrument) {
    for (std::uint32_t xi : vertices_x) {
      std::uint32_t c = ++s.vertices[xi].refine2_count;
      if (c > s.stats.max_refine2_participation) {
        s.stats.max_refine2_participation = c;
      }
    }
  }
  if (s.options.trace) {
    std::ostream& out = *s.options.trace;
    out << "d=" << degree_str(d) << " refine2 X=";
    trace_set(out, list_ids(s, x->elements));
    out << '\n';
  }
  compute_pcomponent_edges(s, vertices_x);
  compute_subblocks(s, d, vertices_x);
  do_splitting(s, d, x, vertices_x);
  clear_auxiliary_info(s, vertices_x);
}

namespace {

Block snapshot_block(State& s, MBlock* b) {
  if (!b->fuzzy) {
    std::vector<std::string> elems;
    elems.reserve(b->elements.n);
    for (Vertex* v = b->elements.head; v; v = v->next) {
      elems.push_back(s.id_of(*v));
    }
    return b->crisp ? Block::crisp(std::move(elems))
                    : Block::simple(std::move(elems));
  }
  std::vector<Block> subs;
  subs.reserve(b->subblocks.n);
  for (MBlock* sub = b->subblocks.head; sub; sub = sub->next) {
    subs.push_back(snapshot_block(s, sub));
  }
  return Block::fuzzy(Degree::from_units(b->degree), std::move(subs));
}

void mark_crisp(MBlock* b) {
  if (!b->fuzzy) {
    b->crisp = true;
    return;
  }
  for (MBlock* sub = b->subblocks.head; sub; sub = sub->next) mark_crisp(sub);
}

}  // namespace

Block snapshot(State& s) { return snapshot_block(s, s.root); }

Block freeze(State& s) {
  if (!s.partition.compound.empty()) {
    throw InternalError("freeze: a compound component is left over");
  }
  mark_crisp(s.root);
  return snapshot(s);
}

Block run(State& s) {
  const std::size_t k = s.all_degrees.size() - 1;
  for (std::size_t i = 0; i < k; ++i) {
    Units d = s.all_degrees[i];
    if (i == 0) {
      refine_1a(s);
    } else {
      refine_1b(s, d);
    }
    while (!s.partition.compound.empty()) {
      PComponent* y = s.partition.compound.head;
      refine_2(s, d, y->smaller_block());
    }
    if (s.options.check_invariants) check_state_invariants(s, d);
  }
  return freeze(s);
}

MBlock* leaf_of(State& s, const std::string& vertex_id) {
  auto it =
      std::lower_bound(s.vertex_ids.begin(), s.vertex_ids.end(), vertex_id);
  if (it == s.vertex_ids.end() || *it != vertex_id) {
    throw std::invalid_argument("unknown vertex '" + vertex_id + "'");
  }
  return s.vertices[static_cast<std::size_t>(it - s.vertex_ids.begin())].block;
}

namespace {

void fail(const std::string& what) { throw InternalError(what); }

void check_tree(MBlock* b, Units level, std::size_t& leaf_count,
                std::size_t& vertex_count) {
  if (b->fuzzy) {
    if (b->degree > level) fail("invariant: block degree above current level");
    if (b->subblocks.n < 2) fail("invariant: fuzzy block with <2 subblocks");
    std::size_t count = 0;
    for (MBlock* sub = b->subblocks.head; sub; sub = sub->next) {
      ++count;
      if (sub->parent != b) fail("invariant: broken parent pointer");
      if (sub->fuzzy && sub->degree <= b->degree) {
        fail("invariant: child degree not above parent degree");
      }
      check_tree(sub, level, leaf_count, vertex_count);
    }
    if (count != b->subblocks.n) fail("invariant: sibling count mismatch");
    if (!b->elements.empty()) fail("invariant: fuzzy block holds elements");
  } else {
    ++leaf_count;
    if (b->elements.empty()) fail("invariant: empty leaf");
    std::size_t count = 0;
    for (Vertex* v = b->elements.head; v; v = v->next) {
      ++count;
      if (v->block != b) fail("invariant: vertex block pointer astray");
    }
    if (count != b->elements.n) fail("invariant: element count mismatch");
    vertex_count += count;
    if (!b->pc) fail("invariant: leaf without component");
    if (!b->departing1.empty() || !b->departing2.empty()) {
      fail("invariant: departing groups left behind");
    }
  }
}

}  // namespace

void check_state_invariants(State& s, Units d) {
  std::size_t leaf_count = 0, vertex_count = 0;
  check_tree(s.root, d, leaf_count, vertex_count);
  if (vertex_count != s.vertices.size()) {
    fail("invariant: vertices lost or duplicated in the tree");
  }

  // Partition components cover the leaves exactly once.
  std::size_t pc_leaves = 0;
  auto check_list = [&](PCList& list, bool compound_list) {
    std::size_t count = 0;
    for (PComponent* pc = list.head; pc; pc = pc->next) {
      ++count;
      if (pc->in_compound_list != compound_list) {
        fail("invariant: component in the wrong list");
      }
      if (pc->sc_blocks.n > 0 && pc->compound() != compound_list) {
        fail("invariant: compound flag does not match block count");
      }
      std::size_t blocks = 0;
      for (MBlock* b = pc->sc_blocks.head; b; b = b->next2) {
        ++blocks;
        if (b->pc != pc) fail("invariant: leaf component pointer astray");
        if (b->fuzzy) fail("invariant: fuzzy block inside a component");
      }
      if (blocks != pc->sc_blocks.n) fail("invariant: component count wrong");
      pc_leaves += blocks;
    }
    if (count != list.n) fail("invariant: component list count wrong");
  };
  check_list(s.partition.compound, true);
  check_list(s.partition.simple, false);
  if (pc_leaves != leaf_count) {
    fail("invariant: components do not cover the leaves");
  }

  // Counter conservation: edges from one origin into one component share
  // one PCEdge whose counters hold exactly those (label, degree) pairs.
  std::map<std::pair<std::uint32_t, const PComponent*>, PCEdge*> seen;
  std::map<PCEdge*, std::map<LabelId, std::map<Units, std::uint32_t>>> expect;
  for (Edge& e : s.edges) {
    if (!e.pc_edge) fail("invariant: edge without PCEdge");
    if (e.pc_edge->departing || e.pc_edge->source) {
      fail("invariant: departing PCEdge link left behind");
    }
    const PComponent* pc = s.vertices[e.dest].block->pc;
    auto key = std::make_pair(e.origin, pc);
    auto [it, fresh] = seen.emplace(key, e.pc_edge);
    if (!fresh && it->second != e.pc_edge) {
      fail("invariant: connection split across PCEdges");
    }
    ++expect[e.pc_edge][e.label][e.degree];
  }
  for (auto& [pce, counters] : expect) {
    if (pce->counter != counters) fail("invariant: counter conservation");
  }
  // No two connections may share a PCEdge either.
  std::set<PCEdge*> uniq;
  for (auto& [key, pce] : seen) {
    if (!uniq.insert(pce).second) {
      fail("invariant: PCEdge shared between connections");
    }
  }
}

}  // namespace engine

Block compute_fuzzy_partition(const FuzzyGraph& g, const EngineOptions& options,
                              EngineStats* stats) {
  engine::State s = engine::initialize(g, options);
  Block result = engine::run(s);
  if (stats) *stats = s.stats;
  return result;
}

std::string StabilityReport::describe() const {
  if (ok) return "stable";
  std::string what = edge_condition ? "edge sup condition" : "label condition";
  std::string result = what + " differs inside a cut component: " + x +
                       " vs " + xp + " on '" + symbol + "'";
  if (edge_condition) {
    result += " toward {";
    for (std::size_t i = 0; i < component.size(); ++i) {
      if (i) result += ',';
      result += component[i];
    }
    result += '}';
  }
  return result;
}

StabilityReport is_d_cut_stable(const FuzzyGraph& g, const Block& b, Degree d,
                                const CrispPartition& q) {
  StabilityReport report;
  CrispPartition cut = d_cut_partition(b, d);

  std::map<std::string, std::size_t> vertex_at;
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    vertex_at[g.vertices()[i]] = i;
  }
  const std::size_t n = g.vertices().size();

  // Label signature: the set of label symbols with degree above d.
  std::vector<std::vector<std::string>> label_sig(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [p, deg] : g.labels(g.vertices()[i])) {
      if (deg > d) label_sig[i].push_back(p);
    }
  }
  for (const auto& comp : cut) {
    const std::size_t first = vertex_at.at(comp.front());
    for (const std::string& id : comp) {
      const std::size_t vi = vertex_at.at(id);
      if (label_sig[vi] != label_sig[first]) {
        report.ok = false;
        report.edge_condition = false;
        report.x = comp.front();
        report.xp = id;
        // Name one differing symbol.
        std::vector<std::string> diff;
        std::set_symmetric_difference(
            label_sig[first].begin(), label_sig[first].end(),
            label_sig[vi].begin(), label_sig[vi].end(),
            std::back_inserter(diff));
        report.symbol = diff.empty() ? "" : diff.front();
        return report;
      }
    }
  }

  // Edge signature per target component Y of q: the set of edge labels r
  // with sup E(x, r, Y) above d.
  for (const auto& target : q) {
    std::set<std::string> members(target.begin(), target.end());
    std::vector<std::vector<std::string>> sig(n);
    for (const FuzzyEdge& e : g.edges()) {
      if (e.degree > d && members.count(e.dest)) {
        sig[vertex_at.at(e.origin)].push_back(e.label);
      }
    }
    for (auto& labels : sig) {
      std::sort(labels.begin(), labels.end());
      labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    }
    for (const auto& comp : cut) {
      const std::size_t first = vertex_at.at(comp.front());
      for (const std::string& id : comp) {
        const std::size_t vi = vertex_at.at(id);
        if (sig[vi] != sig[first]) {
          report.ok = false;
          report.edge_condition = true;
          report.x = comp.front();
          report.xp = id;
          report.component = target;
          std::vector<std::string> diff;
          std::set_symmetric_difference(sig[first].begin(), sig[first].end(),
                                        sig[vi].begin(), sig[vi].end(),
                                        std::back_inserter(diff));
          report.symbol = diff.empty() ? "" : diff.front();
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace fzb
