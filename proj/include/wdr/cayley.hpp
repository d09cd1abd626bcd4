#pragma once

#include <boost/integer/common_factor.hpp>
#include <boost/rational.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wdr/digraph.hpp"

namespace wdr {

// Cayley digraph data over Z_n x Z_m (m = 1 for cyclic groups).
struct CayleySpec {
  int n = 1;
  int m = 1;
  std::vector<std::pair<int, int>> connection;

  std::string to_string() const {
    std::string s = "Z" + std::to_string(n) + (m > 1 ? "xZ" + std::to_string(m) : "") + " {";
    for (std::size_t i = 0; i < connection.size(); ++i) {
      if (i) s += ',';
      s += m > 1 ? "(" + std::to_string(connection[i].first) + "," + std::to_string(connection[i].second) + ")"
                 : std::to_string(connection[i].first);
    }
    return s + "}";
  }
};

// Vertex (a, b) is a*m + b; arc x -> x + s for s in the connection set.
inline Digraph cayley(const CayleySpec& spec) {
  if (spec.n <= 0 || spec.m <= 0) throw error("group orders must be positive");
  std::set<std::pair<int, int>> conn;
  for (auto [a, b] : spec.connection) {
    if (a < 0 || a >= spec.n || b < 0 || b >= spec.m) throw error("connection element out of range in " + spec.to_string());
    if (a == 0 && b == 0) throw error("identity in connection set of " + spec.to_string());
    conn.emplace(a, b);
  }
  std::vector<Arc> arcs;
  for (int a = 0; a < spec.n; ++a)
    for (int b = 0; b < spec.m; ++b)
      for (auto [s, t] : conn)
        arcs.emplace_back(a * spec.m + b, ((a + s) % spec.n) * spec.m + (b + t) % spec.m);
  Digraph g(spec.n * spec.m, arcs);
  if (!is_strongly_connected(g)) throw error(spec.to_string() + " is not strongly connected");
  return g;
}

// Gamma[K2-bar]: vertex (v, t) is 2v + t; (u, s) -> (v, t) iff u -> v.
inline Digraph lex_coclique2(const Digraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count() * 4);
  for (auto [u, v] : g.arcs())
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t) arcs.emplace_back(2 * u + s, 2 * v + t);
  return Digraph(2 * g.order(), arcs);
}

using Rational = boost::rational<long long>;

struct AlphaBeta {
  int alpha = 0;
  Rational beta;
};

namespace detail {

inline Rational pow2(int e) { return e >= 0 ? Rational(1LL << e) : Rational(1, 1LL << -e); }

inline long long floor_of(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline long long as_integer(const Rational& r, const char* what) {
  if (r.denominator() != 1) throw error(std::string(what) + " is not integral: " + std::to_string(r.numerator()) + "/" +
                                        std::to_string(r.denominator()));
  return r.numerator();
}

inline int mod(long long a, long long m) { return static_cast<int>(((a % m) + m) % m); }

}  // namespace detail

// alpha = 2(2/g - floor(2/g)) - 1, beta = 2^alpha * alpha * (1 - q) / g, g = gcd(q-1, 4).
inline AlphaBeta alpha_beta(int q) {
  if (q < 3) throw error("alpha_beta requires q >= 3");
  const long long g = boost::integer::gcd<long long>(q - 1, 4);
  const Rational two_over_g(2, g);
  const Rational alpha_r = 2 * (two_over_g - detail::floor_of(two_over_g)) - 1;
  const int alpha = static_cast<int>(detail::as_integer(alpha_r, "alpha"));
  const Rational beta = detail::pow2(alpha) * alpha * (1 - q) / g;
  return {alpha, beta};
}

enum class Family { I = 1, II, III, IV, V, VI };

inline constexpr Family kAllFamilies[] = {Family::I, Family::II, Family::III, Family::IV, Family::V, Family::VI};

inline std::string to_string(Family f) {
  static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi"};
  return names[static_cast<int>(f) - 1];
}

inline std::optional<Family> parse_family(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Family f : kAllFamilies)
    if (to_string(f) == s) return f;
  return std::nullopt;
}

// Parameter is p for I/II and q for III-VI.
struct FamilyId {
  Family variant = Family::I;
  int parameter = 2;

  int min_parameter() const { return variant == Family::I || variant == Family::II ? 2 : 3; }
  std::string to_string() const { return wdr::to_string(variant) + "(" + std::to_string(parameter) + ")"; }
  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

// Group and connection set of family V at q.
inline CayleySpec family_v_spec(int q) {
  const auto [alpha, beta] = alpha_beta(q);
  const long long n = detail::as_integer(detail::pow2(alpha + 1) * (q - 1), "group order");
  const long long m = detail::as_integer(detail::pow2(1 - alpha), "group order");
  const Rational a1 = detail::pow2(alpha) + beta;
  const Rational a2 = detail::pow2(alpha) - beta;
  const Rational a3 = detail::pow2(alpha + 1);
  CayleySpec spec{static_cast<int>(n), static_cast<int>(m), {}};
  spec.connection = {
      {detail::mod(detail::as_integer(a1, "2^alpha + beta"), n), detail::mod(1, m)},
      {detail::mod(detail::as_integer(a2, "2^alpha - beta"), n), detail::mod(alpha, m)},
      {detail::mod(detail::as_integer(a3, "2^(alpha+1)"), n), detail::mod(alpha + 1, m)},
  };
  if (n * m != 4LL * (q - 1)) throw error("family V order mismatch");
  return spec;
}

inline Digraph build_family(const FamilyId& f) {
  if (f.parameter < f.min_parameter())
    throw error("family " + wdr::to_string(f.variant) + " needs parameter >= " + std::to_string(f.min_parameter()));
  const int k = f.parameter;
  switch (f.variant) {
    case Family::I: return cayley({k, 1, {{1, 0}}});
    case Family::II: return lex_coclique2(cayley({k, 1, {{1, 0}}}));
    case Family::III: return cayley({2 * k - 2, 1, {{1, 0}, {2, 0}}});
    case Family::IV: return lex_coclique2(cayley({2 * k - 2, 1, {{1, 0}, {2, 0}}}));
    case Family::V: return cayley(family_v_spec(k));
    case Family::VI: return lex_coclique2(cayley(family_v_spec(k)));
  }
  throw error("unknown family");
}

}  // namespace wdr
