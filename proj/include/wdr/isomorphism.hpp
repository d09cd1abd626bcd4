#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wdr/cayley.hpp"
#include "wdr/digraph.hpp"

namespace wdr {

inline constexpr int kDefaultIsoLimit = 64;

// WDR_ISO_LIMIT overrides the default order limit.
inline int iso_order_limit() {
  if (const char* env = std::getenv("WDR_ISO_LIMIT")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return kDefaultIsoLimit;
}

// Lexicographically least relabeled adjacency matrix over the explored leaves
// of the search tree. `labeling[i]` is the vertex placed at position i.
struct CanonicalForm {
  int order = 0;
  std::vector<std::uint64_t> bits;
  std::vector<Vertex> labeling;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.order == b.order && a.bits == b.bits;
  }
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.order <=> b.order; c != 0) return c;
    return a.bits <=> b.bits;
  }
};

namespace detail {

using Coloring = std::vector<int>;  // vertex -> cell index; cells ordered

inline int cell_count(const Coloring& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1; }

// Renumbers by rank of key, keeping ties together. Keys must order first by the
// old color so cells only ever split in place.
template <typename Key>
Coloring rank_colors(const std::vector<Key>& keys) {
  const int n = static_cast<int>(keys.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  Coloring out(n, 0);
  int color = 0;
  for (int k = 0; k < n; ++k) {
    if (k > 0 && keys[idx[k - 1]] < keys[idx[k]]) ++color;
    out[idx[k]] = color;
  }
  return out;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Digraph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    Coloring start = refine(initial_coloring());
    std::vector<Vertex> prefix;
    search(start, prefix);
    return CanonicalForm{n_, best_cert_, best_lab_};
  }

 private:
  static constexpr int kNoJump = -1;

  // Out-degree, in-degree and the multiset of two-way distances to all
  // vertices (kUnreachable where no path exists).
  Coloring initial_coloring() const {
    const auto& d = g_.raw_distances();
    std::vector<std::vector<int>> keys(n_);
    for (int v = 0; v < n_; ++v) {
      std::vector<std::pair<int, int>> tw;
      tw.reserve(n_);
      for (int w = 0; w < n_; ++w) tw.emplace_back(d(v, w), d(w, v));
      std::sort(tw.begin(), tw.end());
      auto& k = keys[v];
      k.push_back(static_cast<int>(g_.out_neighbors(v).size()));
      k.push_back(static_cast<int>(g_.in_neighbors(v).size()));
      for (auto [a, b] : tw) {
        k.push_back(a);
        k.push_back(b);
      }
    }
    return rank_colors(keys);
  }

  // Colour refinement on out- and in-neighbour colour multisets until stable.
  Coloring refine(Coloring c) const {
    int cells = cell_count(c);
    std::vector<std::vector<int>> keys(n_);
    while (cells < n_) {
      for (int v = 0; v < n_; ++v) {
        auto& k = keys[v];
        k.clear();
        k.push_back(c[v]);
        const auto mark = k.size();
        for (Vertex w : g_.out_neighbors(v)) k.push_back(c[w]);
        std::sort(k.begin() + mark, k.end());
        k.push_back(-1);
        const auto mark2 = k.size();
        for (Vertex w : g_.in_neighbors(v)) k.push_back(c[w]);
        std::sort(k.begin() + mark2, k.end());
      }
      Coloring next = rank_colors(keys);
      int next_cells = cell_count(next);
      c = std::move(next);
      if (next_cells == cells) break;
      cells = next_cells;
    }
    return c;
  }

  // v becomes a singleton placed first within its former cell.
  Coloring individualize(const Coloring& c, Vertex v) const {
    std::vector<int> keys(n_);
    for (int u = 0; u < n_; ++u) keys[u] = 2 * c[u] + (u != v && c[u] == c[v] ? 1 : 0);
    return refine(rank_colors(keys));
  }

  std::vector<std::uint64_t> certificate(const std::vector<Vertex>& lab) const {
    const std::size_t total = static_cast<std::size_t>(n_) * n_;
    std::vector<std::uint64_t> bits((total + 63) / 64, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (g_.has_arc(lab[i], lab[j])) {
          std::size_t k = static_cast<std::size_t>(i) * n_ + j;
          bits[k / 64] |= std::uint64_t{1} << (63 - k % 64);
        }
    return bits;
  }

  void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    std::vector<Vertex> perm(n_);
    for (int i = 0; i < n_; ++i) perm[from[i]] = to[i];
    for (int v = 0; v < n_; ++v)
      if (perm[v] != v) {
        automorphisms_.push_back(std::move(perm));
        return;
      }
  }

  // Union-find orbits of the found automorphisms that fix `prefix` pointwise.
  std::vector<int> stabilizer_orbits(const std::vector<Vertex>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& perm : automorphisms_) {
      if (!std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return perm[p] == p; })) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(perm[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  int leaf(const Coloring& c, const std::vector<Vertex>& prefix) {
    std::vector<Vertex> lab(n_);
    for (int v = 0; v < n_; ++v) lab[c[v]] = v;
    auto cert = certificate(lab);
    if (first_lab_.empty()) {
      first_lab_ = best_lab_ = lab;
      first_cert_ = best_cert_ = cert;
      first_path_ = prefix;
      return kNoJump;
    }
    if (cert == first_cert_) {
      record_automorphism(first_lab_, lab);
      // The subtree below the first divergence from the first path is an
      // automorphic image of one already searched.
      std::size_t d = 0;
      while (d < prefix.size() && d < first_path_.size() && prefix[d] == first_path_[d]) ++d;
      return static_cast<int>(d);
    }
    if (cert == best_cert_) {
      record_automorphism(best_lab_, lab);
    } else if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = std::move(lab);
    }
    return kNoJump;
  }

  int search(const Coloring& c, std::vector<Vertex>& prefix) {
    if (cell_count(c) == n_) return leaf(c, prefix);
    const int depth = static_cast<int>(prefix.size());

    std::vector<int> size(n_, 0);
    for (int v = 0; v < n_; ++v) ++size[c[v]];
    int target = 0;
    while (size[target] < 2) ++target;
    std::vector<Vertex> cell;
    for (int v = 0; v < n_; ++v)
      if (c[v] == target) cell.push_back(v);

    std::vector<Vertex> explored;
    for (Vertex v : cell) {
      if (!explored.empty()) {
        auto orbit = stabilizer_orbits(prefix);
        if (std::any_of(explored.begin(), explored.end(), [&](Vertex w) { return orbit[w] == orbit[v]; })) continue;
      }
      prefix.push_back(v);
      int jump = search(individualize(c, v), prefix);
      prefix.pop_back();
      explored.push_back(v);
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  const Digraph& g_;
  int n_;
  std::vector<Vertex> first_lab_, best_lab_, first_path_;
  std::vector<std::uint64_t> first_cert_, best_cert_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Digraph& g, int limit = iso_order_limit()) {
  if (g.order() > limit)
    throw error("order " + std::to_string(g.order()) + " exceeds canonical form limit " + std::to_string(limit));
  return detail::CanonicalSearch(g).run();
}

// An isomorphism g1 -> g2 as a vertex map, if one exists.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Digraph& g1, const Digraph& g2,
                                                           int limit = iso_order_limit()) {
  if (g1.order() != g2.order() || g1.arc_count() != g2.arc_count()) return std::nullopt;
  auto c1 = canonical_form(g1, limit), c2 = canonical_form(g2, limit);
  if (c1 != c2) return std::nullopt;
  std::vector<Vertex> map(g1.order());
  for (int i = 0; i < g1.order(); ++i) map[c1.labeling[i]] = c2.labeling[i];
  return map;
}

inline bool are_isomorphic(const Digraph& g1, const Digraph& g2, int limit = iso_order_limit()) {
  return find_isomorphism(g1, g2, limit).has_value();
}

namespace detail {

inline std::optional<int> family_parameter(Family f, int n) {
  auto divide = [n](int d, int offset, int min) -> std::optional<int> {
    if (n % d != 0) return std::nullopt;
    int k = n / d + offset;
    return k >= min ? std::optional<int>(k) : std::nullopt;
  };
  switch (f) {
    case Family::I: return divide(1, 0, 2);
    case Family::II: return divide(2, 0, 2);
    case Family::III: return divide(2, 1, 3);
    case Family::IV:
    case Family::V: return divide(4, 1, 3);
    case Family::VI: return divide(8, 1, 3);
  }
  return std::nullopt;
}

}  // namespace detail

// First variant I..VI whose member of matching order is isomorphic to g.
inline std::optional<FamilyId> identify_family(const Digraph& g, int limit = iso_order_limit()) {
  for (Family f : kAllFamilies) {
    auto param = detail::family_parameter(f, g.order());
    if (!param) continue;
    FamilyId id{f, *param};
    Digraph candidate = build_family(id);
    if (candidate.arc_count() != g.arc_count()) continue;
    if (are_isomorphic(g, candidate, limit)) return id;
  }
  return std::nullopt;
}

}  // namespace wdr
