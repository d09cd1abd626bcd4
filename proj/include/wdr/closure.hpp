#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "wdr/arcs.hpp"
#include "wdr/digraph.hpp"
#include "wdr/scheme.hpp"

namespace wdr {

struct ClosedSubset {
  LabelSet labels;

  bool contains(const TwoWayLabel& l) const { return labels.count(l) != 0; }
  friend bool operator==(const ClosedSubset&, const ClosedSubset&) = default;
};

// Least F containing seed and (0,0) with Gamma_{i*} Gamma_j inside F for all
// i, j in F. Worklist: each newly added label is multiplied against every
// member once, on both sides.
inline ClosedSubset closure(const SchemeTensor& t, const LabelSet& seed) {
  ClosedSubset f;
  std::deque<TwoWayLabel> pending;
  auto add = [&](const TwoWayLabel& l) {
    if (!t.contains(l)) throw error("label " + to_string(l) + " is not a relation of the scheme");
    if (f.labels.insert(l).second) pending.push_back(l);
  };
  add(TwoWayLabel{0, 0});
  for (const auto& l : seed) add(l);
  while (!pending.empty()) {
    const TwoWayLabel a = pending.front();
    pending.pop_front();
    const std::vector<TwoWayLabel> members(f.labels.begin(), f.labels.end());
    for (const auto& b : members) {
      for (const auto& h : relation_product(t, {a.converse()}, {b})) add(h);
      for (const auto& h : relation_product(t, {b.converse()}, {a})) add(h);
    }
  }
  return f;
}

inline bool is_closed(const SchemeTensor& t, const LabelSet& f) {
  if (!f.count(TwoWayLabel{0, 0})) return false;
  for (const auto& i : f)
    for (const auto& j : f)
      for (const auto& h : relation_product(t, {i.converse()}, {j}))
        if (!f.count(h)) return false;
  return true;
}

// Blocks F(x), ordered by their least vertex; each block is sorted.
struct ClassPartition {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<int> block_of;  // vertex -> block index
};

inline ClassPartition class_partition(int order, const LabelSet& f, const RelationPartition& partition) {
  std::vector<std::vector<Vertex>> cls(order);
  for (const auto& label : f) {
    auto it = partition.find(label);
    if (it == partition.end()) continue;
    for (auto [x, y] : it->second) cls[x].push_back(y);
  }
  ClassPartition out;
  out.block_of.assign(order, -1);
  for (Vertex x = 0; x < order; ++x) {
    auto& c = cls[x];
    std::sort(c.begin(), c.end());
    if (!std::binary_search(c.begin(), c.end(), x)) throw error("class F(x) misses x; F lacks (0,0)");
    if (out.block_of[x] >= 0) {
      if (c != out.blocks[out.block_of[x]]) throw error("classes do not partition the vertex set");
      continue;
    }
    for (Vertex y : c)
      if (out.block_of[y] >= 0) throw error("classes do not partition the vertex set");
    const int idx = static_cast<int>(out.blocks.size());
    for (Vertex y : c) out.block_of[y] = idx;
    out.blocks.push_back(c);
  }
  for (const auto& b : out.blocks)
    if (b.size() != out.blocks.front().size()) throw error("classes have unequal sizes");
  return out;
}

inline ClassPartition class_partition(const Digraph& g, const ClosedSubset& f) {
  return class_partition(g.order(), f.labels, relation_partition(g));
}

struct Quotient {
  Digraph digraph;
  ClassPartition classes;
};

// Arc between distinct blocks whenever some arc of g crosses them; arcs inside
// a block are dropped.
inline Quotient quotient(const Digraph& g, const ClosedSubset& f) {
  auto cp = class_partition(g, f);
  std::set<Arc> arcs;
  for (auto [u, v] : g.arcs()) {
    int a = cp.block_of[u], b = cp.block_of[v];
    if (a != b) arcs.emplace(a, b);
  }
  const int m = static_cast<int>(cp.blocks.size());
  return Quotient{Digraph(m, {arcs.begin(), arcs.end()}), std::move(cp)};
}

struct Subdigraph {
  Digraph digraph;
  std::vector<Vertex> vertices;  // local index -> vertex of the host digraph
};

inline ClosedSubset arc_closure(const SchemeTensor& t, const TSet& types) {
  LabelSet seed;
  for (int q : types) seed.insert(arc_label(q));
  return closure(t, seed);
}

// Delta_I(x): the block F_I(x), with the arcs of types (1, q-1), q in I.
inline Subdigraph delta_subdigraph(const Digraph& g, const SchemeTensor& t, const TSet& types, Vertex x) {
  if (x < 0 || x >= g.order()) throw error("base vertex out of range");
  const auto f = arc_closure(t, types);
  const auto& d = distance_matrix(g);
  std::vector<Vertex> members;
  for (Vertex y = 0; y < g.order(); ++y)
    if (f.contains(TwoWayLabel{d(x, y), d(y, x)})) members.push_back(y);
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
  std::vector<Arc> arcs;
  for (Vertex y : members)
    for (Vertex z : g.out_neighbors(y))
      if (local[z] >= 0 && types.count(d(z, y) + 1)) arcs.emplace_back(local[y], local[z]);
  return Subdigraph{Digraph(static_cast<int>(members.size()), arcs), std::move(members)};
}

}  // namespace wdr
