#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wdr {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two-way distance (d(x,y), d(y,x)). Also names a relation of the attached scheme.
struct TwoWayLabel {
  int forward = 0;
  int backward = 0;

  constexpr TwoWayLabel converse() const noexcept { return {backward, forward}; }
  constexpr bool is_identity() const noexcept { return forward == 0 && backward == 0; }

  friend constexpr auto operator<=>(const TwoWayLabel&, const TwoWayLabel&) = default;
};

inline std::string to_string(const TwoWayLabel& l) {
  return "(" + std::to_string(l.forward) + "," + std::to_string(l.backward) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const TwoWayLabel& l) { return os << to_string(l); }

// Row-major n x n matrix.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(std::size_t n, T fill) : n_(n), data_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using DistanceMatrix = SquareMatrix<int>;
using TwoWayMatrix = SquareMatrix<TwoWayLabel>;

inline constexpr int kUnreachable = -1;

// Finite simple digraph on vertices 0..n-1, immutable after construction.
// One-way distances are computed on first request and shared between copies.
class Digraph {
 public:
  Digraph(int order, const std::vector<Arc>& arcs) : n_(order) {
    if (order <= 0) throw error("digraph order must be positive");
    adj_.assign(static_cast<std::size_t>(order) * order, 0);
    out_.resize(order);
    in_.resize(order);
    for (auto [u, v] : arcs) {
      if (u < 0 || v < 0 || u >= order || v >= order)
        throw error("arc (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
      if (u == v) throw error("loop at vertex " + std::to_string(u) + " rejected");
      auto& cell = adj_[static_cast<std::size_t>(u) * n_ + v];
      if (cell) continue;
      cell = 1;
      ++arc_count_;
    }
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (has_arc(u, v)) {
          out_[u].push_back(v);
          in_[v].push_back(u);
        }
    cache_ = std::make_shared<Cache>();
  }

  int order() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arc_count_; }

  bool has_arc(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  const std::vector<Vertex>& out_neighbors(Vertex u) const { return out_[u]; }
  const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[v]; }

  // Arcs in lexicographic order.
  std::vector<Arc> arcs() const {
    std::vector<Arc> result;
    result.reserve(arc_count_);
    for (int u = 0; u < n_; ++u)
      for (Vertex v : out_[u]) result.emplace_back(u, v);
    return result;
  }

  // BFS distances with kUnreachable for missing paths. Cached.
  const DistanceMatrix& raw_distances() const {
    std::call_once(cache_->once, [this] { cache_->dist = compute_distances(); });
    return cache_->dist;
  }

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  struct Cache {
    std::once_flag once;
    DistanceMatrix dist;
  };

  DistanceMatrix compute_distances() const {
    DistanceMatrix d(n_, kUnreachable);
    std::vector<Vertex> queue(n_);
    for (int s = 0; s < n_; ++s) {
      std::size_t head = 0, tail = 0;
      queue[tail++] = s;
      d(s, s) = 0;
      while (head < tail) {
        Vertex u = queue[head++];
        for (Vertex v : out_[u]) {
          if (d(s, v) != kUnreachable) continue;
          d(s, v) = d(s, u) + 1;
          queue[tail++] = v;
        }
      }
    }
    return d;
  }

  int n_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::shared_ptr<Cache> cache_;
};

inline Digraph from_arc_list(int order, const std::vector<Arc>& arcs) { return Digraph(order, arcs); }

namespace detail {

inline std::vector<bool> reach_from_zero(const Digraph& g, bool reverse) {
  std::vector<bool> seen(g.order(), false);
  std::deque<Vertex> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : reverse ? g.in_neighbors(u) : g.out_neighbors(u)) {
      if (seen[v]) continue;
      seen[v] = true;
      queue.push_back(v);
    }
  }
  return seen;
}

}  // namespace detail

// Forward and reverse reachability sweeps from vertex 0.
inline bool is_strongly_connected(const Digraph& g) {
  auto all = [](const std::vector<bool>& s) { return std::all_of(s.begin(), s.end(), [](bool b) { return b; }); };
  return all(detail::reach_from_zero(g, false)) && all(detail::reach_from_zero(g, true));
}

inline const DistanceMatrix& distance_matrix(const Digraph& g) {
  const auto& d = g.raw_distances();
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (d(x, y) == kUnreachable)
        throw error("vertex " + std::to_string(y) + " unreachable from " + std::to_string(x) +
                    "; digraph is not strongly connected");
  return d;
}

// The matrix lives in the digraph's cache.
const DistanceMatrix& distance_matrix(Digraph&&) = delete;

inline TwoWayMatrix two_way_matrix(const Digraph& g) {
  const auto& d = distance_matrix(g);
  TwoWayMatrix m(g.order(), TwoWayLabel{});
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) m(x, y) = TwoWayLabel{d(x, y), d(y, x)};
  return m;
}

inline std::set<TwoWayLabel> label_set(const Digraph& g) {
  auto m = two_way_matrix(g);
  std::set<TwoWayLabel> labels;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) labels.insert(m(x, y));
  return labels;
}

}  // namespace wdr
