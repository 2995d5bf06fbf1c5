#ifndef SGC_CATALOG_HPP
#define SGC_CATALOG_HPP

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "graphprod.hpp"
#include "monoids.hpp"
#include "oracles.hpp"
#include "thompson.hpp"
#include "words.hpp"

namespace sgc {

// ---------------------------------------------------------------------------
// Z[i sqrt 3]

/// m + n i sqrt(3)
struct QuadElem {
  std::int64_t m = 0;
  std::int64_t n = 0;

  friend QuadElem operator*(QuadElem a, QuadElem b) { return {a.m * b.m - 3 * a.n * b.n, a.m * b.n + a.n * b.m}; }
  friend QuadElem operator+(QuadElem a, QuadElem b) { return {a.m + b.m, a.n + b.n}; }
  friend QuadElem operator-(QuadElem a, QuadElem b) { return {a.m - b.m, a.n - b.n}; }
  std::int64_t norm() const { return m * m + 3 * n * n; }
  bool is_zero() const { return m == 0 && n == 0; }
  bool operator==(const QuadElem&) const = default;

  std::string to_string() const {
    if (n == 0) return std::to_string(m);
    std::string im = (n == 1 ? "" : n == -1 ? "-" : std::to_string(n)) + "i3";
    if (m == 0) return im;
    return std::to_string(m) + (n > 0 ? "+" : "") + im;
  }
};

/// A full-rank sublattice of Z^2 in Hermite normal form: rows (a, b), (0, d)
/// with a, d > 0 and 0 <= b < d.
struct Lattice2 {
  std::int64_t a = 1, b = 0, d = 1;

  static Lattice2 span(std::vector<std::array<std::int64_t, 2>> v) {
    // column-0 gcd elimination
    std::int64_t a = 0, b = 0;
    std::vector<std::int64_t> second;
    for (auto& r : v) {
      while (r[0] != 0) {
        if (a == 0) {
          a = r[0];
          b = r[1];
          r = {0, 0};
          break;
        }
        std::int64_t q = r[0] / a;
        r[0] -= q * a;
        r[1] -= q * b;
        if (r[0] != 0) {
          std::swap(a, r[0]);
          std::swap(b, r[1]);
        }
      }
      if (r[1] != 0) second.push_back(r[1]);
    }
    std::int64_t d = 0;
    for (auto s : second) d = std::gcd(d, s);
    if (a == 0 || d == 0) throw Error("lattice is not of full rank");
    if (a < 0) {
      a = -a;
      b = -b;
    }
    d = d < 0 ? -d : d;
    b = ((b % d) + d) % d;
    return {a, b, d};
  }

  bool contains(std::int64_t x, std::int64_t y) const {
    if (x % a != 0) return false;
    return (y - (x / a) * b) % d == 0;
  }
  bool contains(QuadElem e) const { return contains(e.m, e.n); }
  bool subset_of(const Lattice2& o) const { return o.contains(a, b) && o.contains(0, d); }
  std::int64_t index() const { return a * d; }
  bool operator==(const Lattice2&) const = default;
};

/// c^-1 (g_1 R + ... + g_k R) = { r in R : c r in the ideal }; c = 1 by default.
struct QuadIdeal {
  std::vector<QuadElem> gens;
  QuadElem shift{1, 0};

  Lattice2 base_lattice() const {
    std::vector<std::array<std::int64_t, 2>> v;
    for (auto g : gens) {
      v.push_back({g.m, g.n});
      auto t = g * QuadElem{0, 1};
      v.push_back({t.m, t.n});
    }
    return Lattice2::span(std::move(v));
  }
};

inline bool qr_ideal_membership(QuadElem x, const QuadIdeal& I) {
  bool nonzero = false;
  for (auto g : I.gens) nonzero = nonzero || !g.is_zero();
  if (!nonzero || I.shift.is_zero()) throw Error("zero ideal");
  return I.base_lattice().contains(I.shift * x);
}

/// The lattice of c^-1 I. It contains B Z^2 with B = N(c) [Z^2 : I], so its
/// members in [0, B)^2 together with B e1, B e2 span it.
inline Lattice2 qr_ideal_lattice(const QuadIdeal& I) {
  if (I.shift == QuadElem{1, 0}) return I.base_lattice();
  std::int64_t B = I.shift.norm() * I.base_lattice().index();
  std::vector<std::array<std::int64_t, 2>> v{{B, 0}, {0, B}};
  for (std::int64_t m = 0; m < B; ++m)
    for (std::int64_t n = 0; n < B; ++n)
      if (qr_ideal_membership({m, n}, I)) v.push_back({m, n});
  return Lattice2::span(std::move(v));
}

// ---------------------------------------------------------------------------
// Registry

/// A recorded fact with the label of the statement it comes from.
struct Annotation {
  std::string key;
  std::string fact;
  std::string anchor;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::shared_ptr<const MonoidBackend> backend;  ///< null for the ring entries
  std::optional<Presentation> presentation;
  std::string ambient;  ///< group oracle spec, empty when none is bound
  bool complete = false;
  bool abelian = false;
  bool principal = false;  ///< nonempty constructible ideals are all principal
  bool trivial_units = true;
  std::string units = "trivial";
  std::vector<Annotation> annotations;

  const Annotation* find(std::string_view key) const {
    for (const auto& a : annotations)
      if (a.key == key) return &a;
    return nullptr;
  }
};

namespace detail {

inline std::vector<std::int64_t> parse_int_list(std::string_view s, const std::string& what) {
  std::string t(s);
  std::replace(t.begin(), t.end(), ',', ' ');
  std::vector<std::int64_t> out;
  for (const auto& part : split_ws(t)) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size()) throw Error("malformed " + what + " '" + t + "'");
    out.push_back(v);
  }
  return out;
}

inline std::string int_list(const std::vector<std::int64_t>& v) {
  std::vector<std::string> p;
  for (auto x : v) p.push_back(std::to_string(x));
  return join(p, ",");
}

inline CatalogEntry graph_entry(std::string name, std::string description, GraphSpec g, std::string ambient) {
  CatalogEntry e;
  e.name = name;
  e.description = std::move(description);
  if (g.all_nat()) e.presentation = raam_presentation(g);
  e.backend = std::make_shared<GraphProductMonoid>(std::move(g), name);
  e.ambient = std::move(ambient);
  e.complete = true;
  return e;
}

inline Presentation bs_presentation(std::int64_t k, std::int64_t l) {
  if (k < 1 || l < 1) throw Error("Baumslag-Solitar monoid needs k, l >= 1");
  MonoidWord lhs{0}, rhs;
  for (std::int64_t i = 0; i < k; ++i) lhs.letters.push_back(1);
  for (std::int64_t i = 0; i < l; ++i) rhs.letters.push_back(1);
  rhs.letters.push_back(0);
  return Presentation({"a", "b"}, {{lhs, rhs}}, true);
}

}  // namespace detail

inline std::vector<std::string> catalog_names() {
  return {"nat",      "nat2",        "free2",    "freeprod:k", "numerical:F", "raam:<graph file>",
          "braid:n",  "bs:k,l",      "thompson", "thompson-op", "axb-Z",      "quad-ring-ax-b", "pres:<presentation file>"};
}

inline CatalogEntry catalog_instance(std::string_view name) {
  std::string n(trim(name));
  if (n.starts_with("numerical ")) n = "numerical:" + std::string(trim(std::string_view(n).substr(10)));

  if (n == "nat") {
    auto e = detail::graph_entry(n, "the natural numbers N inside Z", GraphSpec::discrete(1), "free:1");
    e.abelian = e.principal = true;
    e.annotations = {
        {"principal", "totally ordered: every constructible ideal is k+N", "ex:totalorder"},
        {"independence", "satisfies independence", "pPCAPqP"},
        {"left-reversible", "cancellative abelian, hence left and right reversible", "char-leftrev"},
        {"toeplitz", "Toeplitz inside Z", "J=pP->J_PinG=gP"},
        {"k-theory", "single summand K_*(C*(P*)) with P* trivial", "THM:K"}};
    return e;
  }
  if (n == "nat2") {
    auto e = detail::graph_entry(n, "N^2 inside Z^2 (two vertices, one edge)", GraphSpec::complete(2), "free-abelian:2");
    e.abelian = e.principal = true;
    e.annotations = {
        {"principal", "right-angled Artin monoid: constructible ideals are pP or empty", "ss:GraphProducts"},
        {"independence", "satisfies independence", "ind_GraphProducts"},
        {"left-reversible", "cancellative abelian, hence left and right reversible", "char-leftrev"},
        {"toeplitz", "Toeplitz inside Z^2", "Toeplitz_GraphProducts"},
        {"k-theory", "single summand K_*(C*(P*)) with P* trivial", "THM:K"}};
    return e;
  }
  if (n == "free2" || n.starts_with("freeprod:")) {
    std::size_t k = n == "free2" ? 2 : detail::parse_count(std::string_view(n).substr(9), "factor count");
    auto e = detail::graph_entry(n, "free product of " + std::to_string(k) + " copies of N inside the free group",
                                 GraphSpec::discrete(k), "free:" + std::to_string(k));
    e.principal = true;
    e.annotations = {
        {"principal", "constructible ideals are pP or empty", "pPCAPqP"},
        {"independence", "satisfies independence", "ind_GraphProducts"},
        {"not-left-reversible", "aP and bP are disjoint", "bdP_pi"},
        {"toeplitz", "Toeplitz inside the free group", "Toeplitz_GraphProducts"},
        {"k-theory", "single summand K_*(C*(P*)) with P* trivial", "THM:K"}};
    if (k == 2) {
      e.annotations.push_back({"not-toeplitz:metabelian:2", "not Toeplitz inside F2/F2''", "sec:Toeplitz"});
      e.annotations.push_back({"not-toeplitz:thompson", "not Toeplitz inside Thompson's group F via a -> x0, b -> x1",
                               "sec:Toeplitz"});
    }
    return e;
  }
  if (n.starts_with("numerical:")) {
    auto gaps = detail::parse_int_list(std::string_view(n).substr(10), "gap list");
    NumericalSemigroup s(gaps);
    auto e = detail::graph_entry("numerical:" + detail::int_list(s.gaps()),
                                 "the numerical semigroup N \\ {" + detail::int_list(s.gaps()) + "} inside Z",
                                 GraphSpec({"a"}, {}, {s}), "free:1");
    e.abelian = true;
    e.principal = s.is_nat();
    e.complete = false;
    e.annotations = {{"left-reversible", "cancellative abelian, hence left and right reversible", "char-leftrev"}};
    if (!s.is_nat())
      e.annotations.push_back({"not-independent", "does not satisfy independence", "Def:ind"});
    return e;
  }
  if (n.starts_with("raam:")) {
    std::string path = n.substr(5);
    auto g = GraphSpec::parse(detail::read_file(path));
    bool nat = g.all_nat();
    auto e = detail::graph_entry(n, "graph product read from " + path, std::move(g), "graph-product:" + path);
    e.principal = nat;
    e.annotations = {{"independence", "graph products of independent vertex monoids are independent", "ind_GraphProducts"},
                     {"toeplitz", "graph products of Toeplitz embeddings are Toeplitz", "Toeplitz_GraphProducts"}};
    if (nat) e.annotations.push_back({"principal", "right-angled Artin monoid: constructible ideals are pP or empty", "ss:GraphProducts"});
    return e;
  }
  if (n.starts_with("braid:")) {
    auto k = detail::parse_count(std::string_view(n).substr(6), "strand count");
    CatalogEntry e;
    e.name = n;
    e.description = "positive braid monoid on " + std::to_string(k) + " strands";
    e.presentation = braid_presentation(k);
    e.backend = std::make_shared<PresentedMonoid>(*e.presentation, n);
    e.ambient = n;
    e.complete = e.principal = true;
    e.abelian = k == 2;
    e.annotations = {{"complete", "Artin monoid presentations are complete for reversing", "ex:presentations"},
                     {"principal", "quasi-lattice ordered: constructible ideals are pP or empty", "pPCAPqP"},
                     {"independence", "satisfies independence", "pPCAPqP"},
                     {"k-theory", "single summand K_*(C*(P*)) with P* trivial", "THM:K"}};
    return e;
  }
  if (n.starts_with("bs:")) {
    auto kl = detail::parse_int_list(std::string_view(n).substr(3), "exponent pair");
    if (kl.size() != 2) throw Error("bs needs two exponents k,l");
    CatalogEntry e;
    e.name = n;
    e.description = "Baumslag-Solitar monoid <a,b | a b^k = b^l a>^+";
    e.presentation = detail::bs_presentation(kl[0], kl[1]);
    e.backend = std::make_shared<PresentedMonoid>(*e.presentation, n);
    e.complete = e.principal = true;
    e.annotations = {{"complete", "Baumslag-Solitar presentations with k, l >= 1 are complete for reversing", "int-principal"},
                     {"principal", "constructible ideals are pP or empty", "int-principal"},
                     {"toeplitz", "Toeplitz inside the Baumslag-Solitar group", "J=pP->J_PinG=gP"},
                     {"k-theory", "single summand K_*(C*(P*)) with P* trivial", "THM:K"}};
    return e;
  }
  if (n == "thompson") {
    CatalogEntry e;
    e.name = n;
    e.description = "Thompson monoid F^+ (generators x0..x4 in balls and presentations)";
    e.presentation = thompson_presentation(5);
    e.backend = std::make_shared<ThompsonMonoid>(5);
    e.ambient = "thompson";
    e.complete = e.principal = true;
    e.annotations = {{"left-reversible", "left reversible but not right reversible", "ex:presentations"},
                     {"principal", "constructible ideals are pP or empty", "THM:K"},
                     {"k-theory", "single summand K_*(C*(P*)) with P* trivial", "THM:K"},
                     {"truncation", "presentation truncated to x0..x4; reversing completeness holds for the truncation",
                      "ex:presentations"}};
    return e;
  }
  if (n == "thompson-op") {
    CatalogEntry e;
    e.name = n;
    e.description = "opposite of the Thompson monoid (generators x0..x4)";
    e.presentation = thompson_presentation(5).opposite();
    e.backend = std::make_shared<PresentedMonoid>(*e.presentation, n);
    e.ambient = "opposite:thompson";
    e.complete = true;
    e.annotations = {{"g0", "the G0 criterion applies to the opposite Thompson monoid", "THM_sgp-rep->G0=trivial"},
                     {"truncation", "presentation truncated to x0..x4", "ex:presentations"}};
    return e;
  }
  if (n == "axb-Z") {
    CatalogEntry e;
    e.name = n;
    e.description = "ax+b semigroup Z x Z^x over the rational integers";
    e.trivial_units = false;
    e.units = "Z x| {+-1}";
    e.annotations = {{"independence", "ax+b semigroups over Dedekind domains satisfy independence", "independence:R<->ax+b"},
                     {"class-number", "Cl(Q) is trivial", "THM:K"},
                     {"k-theory", "one summand per ideal class, stabilizer a x| R^*", "THM:K"}};
    return e;
  }
  if (n == "quad-ring-ax-b") {
    CatalogEntry e;
    e.name = n;
    e.description = "ax+b semigroup over R = Z[i sqrt 3] (not integrally closed)";
    e.trivial_units = false;
    e.units = "R x| {+-1}";
    e.annotations = {{"not-independent", "2 Rbar = 2R u (1+i3)R u (-1+i3)R with strict parts", "Krull-independence"},
                     {"lift", "independence for R^x and for R x| R^x are equivalent", "independence:R<->ax+b"}};
    return e;
  }
  if (n.starts_with("pres:")) {
    std::string path = n.substr(5);
    CatalogEntry e;
    e.name = n;
    e.description = "monoid presented in " + path;
    e.presentation = Presentation::parse(detail::read_file(path));
    e.backend = std::make_shared<PresentedMonoid>(*e.presentation, n);
    e.complete = e.presentation->complete();
    return e;
  }
  throw Error("unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace sgc

#endif  // SGC_CATALOG_HPP
