#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "wdr/digraph.hpp"

namespace wdr {

// Labels in sorted order together with the label index of every ordered pair.
struct LabelIndex {
  std::vector<TwoWayLabel> labels;
  SquareMatrix<int> of;  // of(x, y) = position of two-way label of (x, y) in `labels`
};

inline LabelIndex index_labels(const Digraph& g) {
  auto tw = two_way_matrix(g);
  auto set = label_set(g);
  LabelIndex li{{set.begin(), set.end()}, SquareMatrix<int>(g.order(), 0)};
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      li.of(x, y) = static_cast<int>(std::lower_bound(li.labels.begin(), li.labels.end(), tw(x, y)) - li.labels.begin());
  return li;
}

using RelationPartition = std::map<TwoWayLabel, std::vector<Arc>>;

// Groups all n^2 ordered pairs by two-way label; each class lists its pairs in
// lexicographic order.
inline RelationPartition relation_partition(const Digraph& g) {
  auto tw = two_way_matrix(g);
  RelationPartition classes;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) classes[tw(x, y)].emplace_back(x, y);
  return classes;
}

// Intersection numbers p^h_{i,j} of a weakly distance-regular digraph, indexed
// by positions in the sorted label list.
class SchemeTensor {
 public:
  SchemeTensor(std::vector<TwoWayLabel> labels, std::vector<int> p, std::vector<int> k)
      : labels_(std::move(labels)), p_(std::move(p)), k_(std::move(k)) {
    const auto r = labels_.size();
    if (p_.size() != r * r * r || k_.size() != r) throw error("scheme tensor dimensions mismatch");
    if (!std::is_sorted(labels_.begin(), labels_.end())) throw error("scheme tensor labels must be sorted");
    converse_.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
      auto c = index_of(labels_[i].converse());
      if (!c) throw error("label set not closed under conversion");
      converse_[i] = *c;
    }
  }

  std::size_t rank() const noexcept { return labels_.size(); }
  const std::vector<TwoWayLabel>& labels() const noexcept { return labels_; }
  const TwoWayLabel& label(std::size_t i) const { return labels_[i]; }

  std::optional<std::size_t> index_of(const TwoWayLabel& l) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || *it != l) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }
  bool contains(const TwoWayLabel& l) const { return index_of(l).has_value(); }

  std::size_t converse(std::size_t i) const { return converse_[i]; }

  int p(std::size_t h, std::size_t i, std::size_t j) const { return p_[(h * rank() + i) * rank() + j]; }
  int k(std::size_t i) const { return k_[i]; }

  // Zero when any label is absent from the scheme.
  int p(const TwoWayLabel& h, const TwoWayLabel& i, const TwoWayLabel& j) const {
    auto a = index_of(h), b = index_of(i), c = index_of(j);
    return a && b && c ? p(*a, *b, *c) : 0;
  }
  int valency(const TwoWayLabel& i) const {
    auto a = index_of(i);
    return a ? k(*a) : 0;
  }

  friend bool operator==(const SchemeTensor&, const SchemeTensor&) = default;

 private:
  std::vector<TwoWayLabel> labels_;
  std::vector<int> p_;
  std::vector<int> k_;
  std::vector<std::size_t> converse_;
};

// Counterexample to weak distance-regularity: both pairs carry label h, but
// the number of z with label(x,z) = i and label(z,y) = j differs.
struct WdrFailure {
  TwoWayLabel h;
  TwoWayLabel i;
  TwoWayLabel j;
  Arc first_pair;
  Arc second_pair;
  int first_count = 0;
  int second_count = 0;
};

using WdrResult = std::variant<SchemeTensor, WdrFailure>;

inline bool is_wdr(const WdrResult& r) { return std::holds_alternative<SchemeTensor>(r); }

// Number of z with label(x,z) = i and label(z,y) = j; independent recount used
// to validate failure witnesses.
inline int count_intermediates(const Digraph& g, Arc pair, const TwoWayLabel& i, const TwoWayLabel& j) {
  const auto& d = distance_matrix(g);
  int count = 0;
  for (int z = 0; z < g.order(); ++z) {
    TwoWayLabel a{d(pair.first, z), d(z, pair.first)};
    TwoWayLabel b{d(z, pair.second), d(pair.second, z)};
    if (a == i && b == j) ++count;
  }
  return count;
}

// Every identity violation of a tensor as a readable line; empty when sound.
inline std::vector<std::string> identity_violations(const SchemeTensor& t) {
  std::vector<std::string> out;
  const auto r = t.rank();
  auto name = [&](std::size_t a) { return to_string(t.label(a)); };
  auto id = t.index_of(TwoWayLabel{0, 0});
  if (!id) {
    out.push_back("identity label (0,0) missing");
    return out;
  }
  if (t.k(*id) != 1) out.push_back("k[(0,0)] = " + std::to_string(t.k(*id)));
  for (std::size_t h = 0; h < r; ++h)
    for (std::size_t i = 0; i < r; ++i) {
      int sum = 0;
      for (std::size_t j = 0; j < r; ++j) sum += t.p(h, i, j);
      if (sum != t.k(i)) out.push_back("row sum p[" + name(h) + "][" + name(i) + "][*] = " + std::to_string(sum));
    }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      int expect = j == t.converse(i) ? t.k(i) : 0;
      if (t.p(*id, i, j) != expect) out.push_back("identity row p[(0,0)][" + name(i) + "][" + name(j) + "]");
    }
  for (std::size_t h = 0; h < r; ++h)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (t.p(t.converse(h), t.converse(j), t.converse(i)) != t.p(h, i, j))
          out.push_back("transpose p[" + name(h) + "][" + name(i) + "][" + name(j) + "]");
  return out;
}

// Process-wide tally of tensors whose identities were asserted at construction.
struct IdentityTally {
  std::atomic<std::size_t> checked{0};
  std::atomic<std::size_t> violations{0};
};

inline IdentityTally& identity_tally() {
  static IdentityTally tally;
  return tally;
}

// One O(n^3) pass. The count vector of the first pair seen with each label is
// the representative; the first pair that disagrees yields the witness, using
// the least (i, j) where the two vectors differ.
inline WdrResult check_weakly_distance_regular(const Digraph& g) {
  const auto li = index_labels(g);
  const int n = g.order();
  const std::size_t r = li.labels.size();
  const std::size_t rr = r * r;

  std::vector<int> rep(r * rr, 0);
  std::vector<Arc> rep_pair(r, Arc{-1, -1});
  std::vector<int> counts(rr, 0);
  std::vector<std::size_t> touched;
  touched.reserve(n);

  auto recount = [&](Arc pair) {
    std::vector<int> c(rr, 0);
    for (int z = 0; z < n; ++z) ++c[li.of(pair.first, z) * r + li.of(z, pair.second)];
    return c;
  };

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const std::size_t h = li.of(x, y);
      touched.clear();
      for (int z = 0; z < n; ++z) {
        const std::size_t slot = li.of(x, z) * r + li.of(z, y);
        if (counts[slot]++ == 0) touched.push_back(slot);
      }
      int* row = &rep[h * rr];
      if (rep_pair[h].first < 0) {
        rep_pair[h] = {x, y};
        for (auto s : touched) row[s] = counts[s];
      } else {
        // Both vectors sum to n, so agreement on the touched slots is full agreement.
        bool same = std::all_of(touched.begin(), touched.end(), [&](std::size_t s) { return row[s] == counts[s]; });
        if (!same) {
          auto first = recount(rep_pair[h]);
          auto second = recount({x, y});
          std::size_t s = 0;
          while (first[s] == second[s]) ++s;
          return WdrFailure{li.labels[h], li.labels[s / r], li.labels[s % r], rep_pair[h], {x, y}, first[s], second[s]};
        }
      }
      for (auto s : touched) counts[s] = 0;
    }
  }

  std::vector<int> k(r, 0);
  for (int y = 0; y < n; ++y) ++k[li.of(0, y)];
  SchemeTensor t(li.labels, std::move(rep), std::move(k));

  auto& tally = identity_tally();
  ++tally.checked;
  if (auto bad = identity_violations(t); !bad.empty()) {
    tally.violations += bad.size();
    throw error("scheme identity violated: " + bad.front());
  }
  return t;
}

inline bool is_commutative(const SchemeTensor& t) {
  for (std::size_t h = 0; h < t.rank(); ++h)
    for (std::size_t i = 0; i < t.rank(); ++i)
      for (std::size_t j = i + 1; j < t.rank(); ++j)
        if (t.p(h, i, j) != t.p(h, j, i)) return false;
  return true;
}

// Regular attached scheme: p^h_{i,i} and p^h_{i,i*} each lie in {0, k_i}.
inline bool is_thick(const SchemeTensor& t) {
  for (std::size_t i = 0; i < t.rank(); ++i) {
    const int ki = t.k(i);
    for (std::size_t h = 0; h < t.rank(); ++h) {
      int a = t.p(h, i, i), b = t.p(h, i, t.converse(i));
      if ((a != 0 && a != ki) || (b != 0 && b != ki)) return false;
    }
  }
  return true;
}

inline int max_intersection_number(const SchemeTensor& t) {
  int best = 0;
  for (std::size_t h = 0; h < t.rank(); ++h)
    for (std::size_t i = 0; i < t.rank(); ++i)
      for (std::size_t j = 0; j < t.rank(); ++j) best = std::max(best, t.p(h, i, j));
  return best;
}

inline bool is_thin(const SchemeTensor& t) { return max_intersection_number(t) <= 1; }
inline bool is_quasi_thin(const SchemeTensor& t) { return max_intersection_number(t) == 2; }

using LabelSet = std::set<TwoWayLabel>;

// EF: labels h with sum over i in E, j in F of p^h_{i,j} nonzero.
inline LabelSet relation_product(const SchemeTensor& t, const LabelSet& e, const LabelSet& f) {
  auto indices = [&](const LabelSet& s) {
    std::vector<std::size_t> out;
    for (const auto& l : s) {
      auto i = t.index_of(l);
      if (!i) throw error("label " + to_string(l) + " is not a relation of the scheme");
      out.push_back(*i);
    }
    return out;
  };
  const auto ei = indices(e), fi = indices(f);
  LabelSet result;
  for (std::size_t h = 0; h < t.rank(); ++h) {
    bool hit = false;
    for (auto i : ei) {
      for (auto j : fi)
        if (t.p(h, i, j) != 0) {
          hit = true;
          break;
        }
      if (hit) break;
    }
    if (hit) result.insert(t.label(h));
  }
  return result;
}

// Valency lines first, then every nonzero p[h][i][j] in sorted order.
inline void dump_tensor(std::ostream& os, const SchemeTensor& t) {
  for (std::size_t i = 0; i < t.rank(); ++i) os << "k[" << t.label(i) << "] = " << t.k(i) << '\n';
  for (std::size_t h = 0; h < t.rank(); ++h)
    for (std::size_t i = 0; i < t.rank(); ++i)
      for (std::size_t j = 0; j < t.rank(); ++j)
        if (int v = t.p(h, i, j); v != 0)
          os << "p[" << t.label(h) << "][" << t.label(i) << "][" << t.label(j) << "] = " << v << '\n';
}

inline std::string dump_tensor(const SchemeTensor& t) {
  std::ostringstream os;
  dump_tensor(os, t);
  return os.str();
}

}  // namespace wdr
