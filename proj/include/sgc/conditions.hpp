#ifndef SGC_CONDITIONS_HPP
#define SGC_CONDITIONS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "catalog.hpp"
#include "core.hpp"
#include "graphprod.hpp"
#include "ideals.hpp"
#include "monoids.hpp"
#include "oracles.hpp"
#include "thompson.hpp"
#include "words.hpp"

namespace sgc {

using Json = nlohmann::ordered_json;

enum class Status { Proved, Witness, Violated, NoViolationUpToBound, Unknown };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::Proved:
      return "Proved";
    case Status::Witness:
      return "Witness";
    case Status::Violated:
      return "Violated";
    case Status::NoViolationUpToBound:
      return "NoViolationUpToBound";
    case Status::Unknown:
      return "Unknown";
  }
  return "?";
}

inline Status parse_status(std::string_view s) {
  for (auto t : {Status::Proved, Status::Witness, Status::Violated, Status::NoViolationUpToBound, Status::Unknown})
    if (to_string(t) == s) return t;
  throw Error("unknown status '" + std::string(s) + "'");
}

struct CheckOptions {
  std::size_t depth = 3;
  std::size_t L = 0;  ///< 0: each check picks its own default
  long long budget = 2000;
  std::size_t family_size = 3;
  std::size_t max_families = 5000;
};

struct CheckVerdict {
  std::string condition;
  std::string semigroup;
  std::string ambient;
  Status status = Status::Unknown;
  Json certificate = Json::object();
  Json bounds = Json::object();
  std::vector<std::string> citations;
  std::string note;

  Json to_json() const {
    Json j;
    j["condition"] = condition;
    j["semigroup"] = semigroup;
    j["ambient"] = ambient;
    j["status"] = std::string(to_string(status));
    j["certificate"] = certificate;
    j["bounds"] = bounds;
    j["citations"] = citations;
    j["note"] = note;
    return j;
  }
  static CheckVerdict from_json(const Json& j) {
    CheckVerdict v;
    v.condition = j.at("condition").get<std::string>();
    v.semigroup = j.at("semigroup").get<std::string>();
    v.ambient = j.value("ambient", "");
    v.status = parse_status(j.at("status").get<std::string>());
    v.certificate = j.value("certificate", Json::object());
    v.bounds = j.value("bounds", Json::object());
    v.citations = j.value("citations", std::vector<std::string>{});
    v.note = j.value("note", "");
    return v;
  }
};

namespace detail {

inline std::size_t pick_L(const CheckOptions& o, std::size_t fallback) { return o.L ? o.L : fallback; }

inline Json bounds_json(const CheckOptions& o, std::size_t L) {
  return Json{{"depth", o.depth}, {"L", L}, {"budget", o.budget}, {"family_size", o.family_size}};
}

inline CheckOptions options_from(const Json& b) {
  CheckOptions o;
  o.depth = b.value("depth", o.depth);
  o.L = b.value("L", o.L);
  o.budget = b.value("budget", o.budget);
  o.family_size = b.value("family_size", o.family_size);
  return o;
}

inline const MonoidBackend& backend_of(const CatalogEntry& e) {
  if (!e.backend) throw Error(e.name + " has no monoid backend");
  return *e.backend;
}

inline GPWord gp_of(const GroupWord& w) {
  GPWord r;
  for (auto l : w.letters) r.syllables.push_back({l.gen, l.sign});
  return r;
}

inline GPWord gp_reversed(const GPWord& w, const GraphSpec& g) {
  GPWord r;
  r.syllables.assign(w.syllables.rbegin(), w.syllables.rend());
  return normal_form(r, g);
}

/// The group a semigroup is tested in. `natural` means P is exactly the
/// positive cone the oracle decides.
struct Ambient {
  std::string spec;
  std::unique_ptr<GroupOracle> oracle;
  bool natural = false;
  const GraphSpec* graph = nullptr;
};

inline Ambient bind_ambient(const CatalogEntry& e, std::string_view spec) {
  Ambient a;
  a.spec = spec.empty() ? e.ambient : std::string(spec);
  if (a.spec.empty()) return a;
  a.natural = a.spec == e.ambient;
  if (a.natural && e.backend) a.graph = e.backend->graph();
  // the natural graph-product ambient comes from the backend, not a file
  if (a.graph && a.spec.starts_with("graph-product:"))
    a.oracle = std::make_unique<GraphProductOracle>(*a.graph, a.spec.substr(14));
  else
    a.oracle = make_oracle(a.spec);
  return a;
}

/// w in P? Outside the natural ambient only a negative answer is trusted.
inline Tri in_P(const Ambient& a, const GroupWord& w) {
  if (a.graph) return tri_of(gp_is_positive(normal_form(gp_of(w), *a.graph), *a.graph));
  if (!a.oracle) return Tri::Unknown;
  Tri t = a.oracle->is_positive(w);
  if (a.natural) return t;
  return t == Tri::No ? Tri::No : Tri::Unknown;
}

inline bool group_eq(const Ambient& a, const GroupWord& u, const GroupWord& v) {
  if (a.graph) return normal_form(gp_of(u), *a.graph) == normal_form(gp_of(v), *a.graph);
  return a.oracle->eq(u, v);
}

inline std::string format_group(const Ambient& a, const GroupWord& w) {
  return a.oracle ? a.oracle->format(free_reduce(w)) : "?";
}

inline GroupWord parse_group(const Ambient& a, std::string_view text) {
  if (!a.oracle) throw Error("no ambient group bound");
  return a.oracle->parse(text);
}

inline std::size_t max_letter(const MonoidWord& w) {
  std::size_t m = 0;
  for (auto l : w.letters) m = std::max<std::size_t>(m, l);
  return m;
}

/// xP cap yP = empty (left) or Px cap Py = empty (right).
inline Tri principal_disjoint(const CatalogEntry& e, const Elem& x, const Elem& y, bool right, long long budget) {
  const auto& m = backend_of(e);
  if (e.abelian) return Tri::No;
  if (const auto* g = m.graph()) {
    auto a = GraphProductMonoid::decode(x), b = GraphProductMonoid::decode(y);
    if (right) {
      a = gp_reversed(a, *g);
      b = gp_reversed(b, *g);
    }
    return tri_of(gp_ideal_intersect(gp_standard_form(a, {}, *g), gp_standard_form(b, {}, *g), *g).empty);
  }
  MonoidWord u = m.group_word(x).positive_word(), v = m.group_word(y).positive_word();
  Presentation pres;
  if (e.name == "thompson") {
    pres = thompson_presentation(std::max(max_letter(u), max_letter(v)) + u.size() + v.size() + 3);
  } else if (e.presentation && e.presentation->complete()) {
    pres = *e.presentation;
  } else {
    return Tri::Unknown;
  }
  if (right) {
    pres = pres.opposite();
    u = u.reversed();
    v = v.reversed();
  }
  auto r = reverse_word(GroupWord(u).inverse() * GroupWord(v), pres, budget);
  if (r.kind == Reversal::Kind::Fraction) return Tri::No;
  if (r.kind == Reversal::Kind::Stuck) return Tri::Yes;
  return Tri::Unknown;
}

/// pP cap X = empty?
inline Tri ideal_disjoint(const CatalogEntry& e, const Elem& p, const RightIdeal& X, long long budget) {
  const auto& m = backend_of(e);
  switch (X.shape) {
    case RightIdeal::Shape::Empty:
      return Tri::Yes;
    case RightIdeal::Shape::Full:
      return Tri::No;
    case RightIdeal::Shape::Principal:
      return principal_disjoint(e, p, X.generator, false, budget);
    case RightIdeal::Shape::Standard: {
      const auto& g = *m.graph();
      return tri_of(gp_ideal_intersect(gp_standard_form(GraphProductMonoid::decode(p), {}, g), X.standard, g).empty);
    }
    case RightIdeal::Shape::Hull:
      return Tri::Unknown;
  }
  return Tri::Unknown;
}

struct PairScan {
  std::optional<std::pair<Elem, Elem>> disjoint;
  std::size_t scanned = 0;
  std::size_t unresolved = 0;
};

/// Pairs of distinct elements with total generator length at most L, shortest first.
inline PairScan scan_pairs(const CatalogEntry& e, bool right, std::size_t L, long long budget) {
  const auto& m = backend_of(e);
  PairScan out;
  if (L < 2) return out;
  auto sph = m.spheres(L - 1);
  for (std::size_t total = 2; total <= L; ++total)
    for (std::size_t lx = 1; lx <= total / 2; ++lx) {
      std::size_t ly = total - lx;
      for (std::size_t i = 0; i < sph[lx].size(); ++i)
        for (std::size_t j = lx == ly ? i + 1 : 0; j < sph[ly].size(); ++j) {
          ++out.scanned;
          Tri t = principal_disjoint(e, sph[lx][i], sph[ly][j], right, budget);
          if (t == Tri::Yes) {
            out.disjoint = {sph[lx][i], sph[ly][j]};
            return out;
          }
          if (t == Tri::Unknown) ++out.unresolved;
        }
    }
  return out;
}

inline const std::string& principal_anchor(const CatalogEntry& e) {
  static const std::string fallback = "pPCAPqP";
  const auto* a = e.find("principal");
  return a ? a->anchor : fallback;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Independence

namespace detail {

/// (k+P) cap (l+P) with k < l in S, the first one that is not principal.
inline std::optional<std::pair<std::int64_t, std::int64_t>> nonprincipal_pair(const NumericalSemigroup& s) {
  std::int64_t top = s.conductor() + 2 * (s.generators().empty() ? 1 : s.generators().back()) + 2;
  for (std::int64_t l = 1; l <= top; ++l) {
    if (!s.contains(l)) continue;
    for (std::int64_t k = 1; k < l; ++k) {
      if (!s.contains(k)) continue;
      auto X = NatIdeal::principal(s, k).intersect(NatIdeal::principal(s, l));
      if (!X.is_empty() && !X.principal_generator(s)) return std::pair{k, l};
    }
  }
  return std::nullopt;
}

/// Smallest uncovered member first until the union is X.
inline std::vector<std::int64_t> greedy_cover(const NatIdeal& X, const NumericalSemigroup& s) {
  std::vector<std::int64_t> parts;
  NatIdeal covered = NatIdeal::empty();
  for (std::int64_t t = X.min(); !(covered == X); ++t) {
    if (t > X.threshold() + s.conductor() + 1) throw InvariantError("principal cover did not close");
    if (X.contains(t) && !covered.contains(t)) {
      parts.push_back(t);
      covered = covered.unite(NatIdeal::principal(s, t));
    }
  }
  return parts;
}

inline Elem vertex_elem(VertexId v, std::int64_t k) {
  GPWord w;
  if (k != 0) w.syllables.push_back({v, k});
  return GraphProductMonoid::encode(w);
}

inline GPIdeal vertex_ideal(VertexId v, const NatIdeal& X, const GraphSpec& g) {
  return gp_standard_form(GPWord{}, {{v, X}}, g);
}

/// The factor at v of an ideal of the form e (v: X_v) P.
inline std::optional<NatIdeal> vertex_factor(const GPIdeal& X, VertexId v, const GraphSpec& g) {
  if (X.empty) return NatIdeal::empty();
  if (!X.p.empty()) return std::nullopt;
  if (X.factors.empty()) return NatIdeal::full(g.cone(v));
  if (X.factors.size() != 1 || X.factors.begin()->first != v) return std::nullopt;
  return X.factors.begin()->second;
}

inline Status verify_vertex_cover(const CatalogEntry& e, const Json& c, std::size_t L, long long budget) {
  const auto& m = backend_of(e);
  const auto* g = m.graph();
  if (!g) return Status::Unknown;
  VertexId v = g->id(c.at("vertex").get<std::string>());
  auto X = parse_ideal(c.at("X").get<std::string>(), m);
  if (!(evaluate_chain(parse_hull(c.at("X_chain").get<std::string>(), m), m, budget) == X)) return Status::Unknown;
  if (X.shape != RightIdeal::Shape::Standard) return Status::Unknown;
  auto Xv = vertex_factor(X.standard, v, *g);
  if (!Xv) return Status::Unknown;
  std::vector<RightIdeal> parts;
  NatIdeal uni = NatIdeal::empty();
  for (const auto& t : c.at("parts")) {
    auto Y = parse_ideal(t.get<std::string>(), m);
    if (Y.shape != RightIdeal::Shape::Standard) return Status::Unknown;
    if (gp_ideal_compare(Y.standard, X.standard, *g) != Comparison::XinY) return Status::Unknown;
    auto Yv = vertex_factor(Y.standard, v, *g);
    if (!Yv) return Status::Unknown;
    uni = uni.unite(*Yv);
    parts.push_back(std::move(Y));
  }
  if (parts.size() < 2 || !(uni == *Xv)) return Status::Unknown;
  for (const auto& x : m.ball(L)) {
    bool in_union = false;
    for (const auto& Y : parts) in_union = in_union || ideal_membership(x, Y, m, budget) == Tri::Yes;
    if (in_union != (ideal_membership(x, X, m, budget) == Tri::Yes)) return Status::Unknown;
  }
  return Status::Violated;
}

/// Nonzero lattice points with |m|, |n| <= range, in a fixed order.
inline std::vector<QuadElem> quad_box(std::int64_t range) {
  std::vector<QuadElem> out;
  for (std::int64_t m = -range; m <= range; ++m)
    for (std::int64_t n = -range; n <= range; ++n)
      if (m != 0 || n != 0) out.push_back({m, n});
  return out;
}

inline Json lattice_json(const Lattice2& l) { return Json::array({l.a, l.b, l.d}); }

inline QuadIdeal quad_rbar2() { return QuadIdeal{{QuadElem{1, 1}}, QuadElem{2, 0}}; }

inline std::vector<std::pair<std::string, QuadElem>> quad_parts() {
  return {{"2R", {2, 0}}, {"(1+i3)R", {1, 1}}, {"(-1+i3)R", {-1, 1}}};
}

inline Json ring_certificate(std::int64_t range) {
  Json c;
  c["kind"] = "ring-cover";
  c["ring"] = "R = Z[i sqrt 3], elements m + n i3 as (m,n)";
  c["X"] = "2Rbar = 2^-1 (1+i3)R";
  auto X = qr_ideal_lattice(quad_rbar2());
  c["X_lattice"] = lattice_json(X);
  c["exhaustive_range"] = range;
  Json parts = Json::array();
  for (const auto& [name, gen] : quad_parts()) {
    QuadIdeal I{{gen}};
    auto lat = I.base_lattice();
    std::optional<QuadElem> witness;
    for (auto x : quad_box(3))
      if (X.contains(x) && !lat.contains(x)) {
        if (!witness || x.norm() < witness->norm()) witness = x;
      }
    parts.push_back(Json{{"ideal", name}, {"generator", gen.to_string()}, {"lattice", lattice_json(lat)},
                         {"strict_witness", witness ? witness->to_string() : ""}});
  }
  c["parts"] = parts;
  Json reps = Json::array();
  for (std::int64_t i = 0; i < 2; ++i)
    for (std::int64_t j = 0; j < 2; ++j) {
      QuadElem r{i * X.a, i * X.b + j * X.d};
      reps.push_back(r.to_string());
    }
  c["coset_reps"] = reps;
  return c;
}

inline Status verify_ring_cover(const Json& c) {
  std::int64_t range = c.at("exhaustive_range").get<std::int64_t>();
  auto Xi = quad_rbar2();
  auto X = qr_ideal_lattice(Xi);
  if (lattice_json(X) != c.at("X_lattice")) return Status::Unknown;
  // 2 Rbar is {m = n mod 2}; checked pointwise against the ideal definition.
  for (auto x : quad_box(range)) {
    bool in = qr_ideal_membership(x, Xi);
    if (in != X.contains(x) || in != ((x.m - x.n) % 2 == 0)) return Status::Unknown;
    bool covered = false;
    for (const auto& [name, gen] : quad_parts()) covered = covered || qr_ideal_membership(x, QuadIdeal{{gen}});
    if (covered != in) return Status::Unknown;
  }
  // exact cover: every part contains 2X, so the four cosets of X / 2X decide it
  Lattice2 twoX = Lattice2::span({{2 * X.a, 2 * X.b}, {0, 2 * X.d}});
  const auto& parts = c.at("parts");
  if (parts.size() != 3) return Status::Unknown;
  std::vector<Lattice2> lats;
  for (std::size_t i = 0; i < 3; ++i) {
    auto gen = quad_parts()[i].second;
    auto lat = QuadIdeal{{gen}}.base_lattice();
    if (lattice_json(lat) != parts[i].at("lattice")) return Status::Unknown;
    if (!lat.subset_of(X) || !twoX.subset_of(lat)) return Status::Unknown;
    bool strict = false;
    for (auto x : quad_box(3))
      if (x.to_string() == parts[i].at("strict_witness").get<std::string>()) strict = X.contains(x) && !lat.contains(x);
    if (!strict) return Status::Unknown;
    lats.push_back(lat);
  }
  for (std::int64_t i = 0; i < 2; ++i)
    for (std::int64_t j = 0; j < 2; ++j) {
      std::int64_t m = i * X.a, n = i * X.b + j * X.d;
      if (std::none_of(lats.begin(), lats.end(), [&](const Lattice2& l) { return l.contains(m, n); }))
        return Status::Unknown;
    }
  return Status::Violated;
}

/// X = union of principal parts on the ball, each part strictly smaller on the ball.
inline Status verify_ball_cover(const CatalogEntry& e, const Json& c, long long budget) {
  const auto& m = backend_of(e);
  auto X = evaluate_chain(parse_hull(c.at("X_chain").get<std::string>(), m), m, budget);
  std::size_t L = c.at("ball").get<std::size_t>();
  std::vector<Elem> parts;
  for (const auto& t : c.at("parts")) parts.push_back(m.parse(t.get<std::string>()));
  if (parts.size() < 2) return Status::Unknown;
  std::vector<bool> strict(parts.size(), false);
  for (const auto& x : m.ball(L)) {
    Tri in = ideal_membership(x, X, m, budget);
    if (in == Tri::Unknown) return Status::Unknown;
    bool in_union = false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      Tri t = m.left_divide(parts[i], x, budget).status;
      if (t == Tri::Unknown) return Status::Unknown;
      if (t == Tri::Yes) in_union = true;
      if (t == Tri::No && in == Tri::Yes) strict[i] = true;
    }
    if (in_union != (in == Tri::Yes)) return Status::Unknown;
  }
  if (std::find(strict.begin(), strict.end(), false) != strict.end()) return Status::Unknown;
  return Status::Violated;
}

inline Status verify_independence(const CatalogEntry& e, const Json& c, const CheckOptions& o) {
  auto kind = c.at("kind").get<std::string>();
  if (kind == "vertex-cover") return verify_vertex_cover(e, c, c.at("ball").get<std::size_t>(), o.budget);
  if (kind == "ring-cover") return verify_ring_cover(c);
  if (kind == "ball-cover") return verify_ball_cover(e, c, o.budget);
  return Status::Unknown;
}

}  // namespace detail

inline CheckVerdict check_independence(const CatalogEntry& e, const CheckOptions& o = {}) {
  CheckVerdict v;
  v.condition = "independence";
  v.semigroup = e.name;
  std::size_t L = detail::pick_L(o, 2 * o.depth + 2);
  v.bounds = detail::bounds_json(o, L);
  v.citations = {"Def:ind"};

  if (e.name == "quad-ring-ax-b") {
    v.certificate = detail::ring_certificate(30);
    v.status = detail::verify_ring_cover(v.certificate);
    v.citations.push_back("Krull-independence");
    v.citations.push_back("independence:R<->ax+b");
    v.note = "2Rbar = 2R u (1+i3)R u (-1+i3)R in R^x, each part strict";
    return v;
  }
  if (e.name == "axb-Z") {
    v.status = Status::Proved;
    v.certificate = Json{{"kind", "criterion"}, {"reason", "Z is a Dedekind domain, so Z x| Z^x satisfies independence"}};
    v.citations.push_back("independence:R<->ax+b");
    return v;
  }
  const auto& m = detail::backend_of(e);

  if (const auto* g = m.graph()) {
    Json vertices = Json::array();
    bool all_proved = true;
    for (VertexId u = 0; u < g->size(); ++u) {
      const auto& s = g->cone(u);
      if (s.is_nat()) {
        vertices.push_back(Json{{"vertex", g->name(u)}, {"status", "Proved"}, {"reason", "N: every constructible ideal is k+N"}});
        continue;
      }
      all_proved = false;
      auto kl = detail::nonprincipal_pair(s);
      if (!kl) {
        vertices.push_back(Json{{"vertex", g->name(u)}, {"status", "NoViolationUpToBound"}});
        continue;
      }
      auto [k, l] = *kl;
      auto X = NatIdeal::principal(s, k).intersect(NatIdeal::principal(s, l));
      Json c;
      c["kind"] = "vertex-cover";
      c["vertex"] = g->name(u);
      c["X"] = format_ideal(RightIdeal::of_standard(detail::vertex_ideal(u, X, *g)), m);
      c["X_as"] = "(" + std::to_string(k) + "+P) cap (" + std::to_string(l) + "+P)";
      HullElement chain{{Move{Move::Kind::Mult, detail::vertex_elem(u, k)}, Move{Move::Kind::Divide, detail::vertex_elem(u, k)},
                         Move{Move::Kind::Mult, detail::vertex_elem(u, l)}}};
      c["X_chain"] = format_hull(chain, m);
      Json parts = Json::array();
      for (auto t : detail::greedy_cover(X, s))
        parts.push_back(format_ideal(RightIdeal::of_standard(detail::vertex_ideal(u, NatIdeal::principal(s, t), *g)), m));
      c["parts"] = parts;
      c["ball"] = L;
      c["lifted"] = g->size() > 1;
      v.certificate = c;
      v.status = detail::verify_vertex_cover(e, c, L, o.budget);
      if (v.status != Status::Violated) throw InvariantError("independence certificate failed to verify");
      if (g->size() > 1) v.citations.push_back("ind_GraphProducts");
      v.note = c["X"].get<std::string>() + " = union of strictly smaller principal ideals";
      return v;
    }
    if (all_proved) {
      v.status = Status::Proved;
      v.certificate = Json{{"kind", "criterion"},
                           {"reason", "graph product whose vertex monoids satisfy independence"},
                           {"vertices", vertices}};
      v.citations.push_back("pPCAPqP");
      v.citations.push_back("ind_GraphProducts");
      return v;
    }
    v.status = Status::NoViolationUpToBound;
    v.certificate = Json{{"kind", "scan"}, {"vertices", vertices}};
    return v;
  }

  EnumerationOptions eo;
  eo.depth = o.depth;
  eo.sample_length = L;
  eo.budget = o.budget;
  auto en = enumerate_ideals(m, eo);
  bool all_principal = true;
  for (const auto& X : en.ideals) {
    auto sh = X.ideal.shape;
    if (sh == RightIdeal::Shape::Empty || sh == RightIdeal::Shape::Full || sh == RightIdeal::Shape::Principal) continue;
    if (X.principal_up_to_L) continue;
    all_principal = false;
    // cover X on the ball by principal ideals of its minimal members
    std::vector<Elem> members;
    for (std::size_t i = 0; i < en.sample.size(); ++i)
      if (X.bits[i] == Tri::Yes) members.push_back(en.sample[i]);
    std::vector<Elem> parts;
    for (const auto& x : members) {
      bool covered = false;
      for (const auto& p : parts) covered = covered || m.left_divide(p, x, o.budget).status == Tri::Yes;
      if (!covered) parts.push_back(x);
    }
    if (parts.size() < 2) continue;
    Json c;
    c["kind"] = "ball-cover";
    c["X"] = X.id;
    c["X_chain"] = format_hull(X.chain, m);
    Json pj = Json::array();
    for (const auto& p : parts) pj.push_back(m.format(p));
    c["parts"] = pj;
    c["ball"] = L;
    if (detail::verify_ball_cover(e, c, o.budget) == Status::Violated) {
      v.status = Status::Violated;
      v.certificate = c;
      v.note = "cover verified on the ball of length " + std::to_string(L);
      return v;
    }
  }
  if (all_principal && e.principal && !en.partial) {
    v.status = Status::Proved;
    v.certificate = Json{{"kind", "criterion"},
                         {"reason", "nonempty constructible ideals are principal"},
                         {"enumerated", en.ideals.size()}};
    v.citations.push_back("pPCAPqP");
    if (detail::principal_anchor(e) != "pPCAPqP") v.citations.push_back(detail::principal_anchor(e));
    return v;
  }
  v.status = Status::NoViolationUpToBound;
  v.certificate = Json{{"kind", "scan"}, {"enumerated", en.ideals.size()}, {"unresolved", en.unresolved.size()}};
  return v;
}

// ---------------------------------------------------------------------------
// Toeplitz

struct ToeplitzQuery {
  std::optional<Elem> p, q;
  std::optional<GroupWord> g;
  std::optional<Elem> second;  ///< a member of P cap gP other than p to argue with
};

namespace detail {

/// Domain and values of s against x -> g x on the ball.
inline Status verify_translation(const CatalogEntry& e, const Ambient& a, const HullElement& s, const GroupWord& g,
                                 std::size_t L, long long budget) {
  const auto& m = backend_of(e);
  if (!group_eq(a, hull_sigma(s, m), g)) return Status::Unknown;
  for (const auto& x : m.ball(L)) {
    GroupWord gx = g * m.group_word(x);
    Tri dom = in_P(a, gx);
    auto h = apply_hull(s, x, m, budget);
    if (dom == Tri::Unknown || h.status == Tri::Unknown) return Status::Unknown;
    if ((dom == Tri::Yes) != (h.status == Tri::Yes)) return Status::Unknown;
    if (h.status == Tri::Yes && !group_eq(a, m.group_word(h.value), gx)) return Status::Unknown;
  }
  return Status::Witness;
}

/// g_P = (g_1)_P ... (g_r)_P over the syllables, each local piece a^-1 b with b - a = k.
inline HullElement graph_product_translation(const GPWord& g, const GraphSpec& graph) {
  HullElement s;
  for (const auto& syl : g.syllables) {
    const auto& cone = graph.cone(syl.vertex);
    std::int64_t a = 0;
    while (!(cone.contains(a) && cone.contains(a + syl.value))) ++a;
    std::int64_t b = a + syl.value;
    if (a != 0) s.chain.push_back({Move::Kind::Divide, vertex_elem(syl.vertex, a)});
    if (b != 0) s.chain.push_back({Move::Kind::Mult, vertex_elem(syl.vertex, b)});
  }
  return s;
}

inline std::vector<Elem> common_prefixes(const MonoidBackend& m, const Elem& x, const Elem& y, std::size_t L,
                                         long long budget) {
  std::vector<Elem> out;
  for (const auto& z : m.ball(L))
    if (m.left_divide(z, x, budget).status == Tri::Yes && m.left_divide(z, y, budget).status == Tri::Yes)
      out.push_back(z);
  return out;
}

inline Status verify_prefix_refutation(const CatalogEntry& e, const Ambient& a, const Json& c, long long budget) {
  const auto& m = backend_of(e);
  if (!e.principal) return Status::Unknown;
  Elem p = m.parse(c.at("p").get<std::string>()), q = m.parse(c.at("q").get<std::string>());
  Elem y2 = m.parse(c.at("y2").get<std::string>()), r = m.parse(c.at("r").get<std::string>());
  GroupWord g = m.group_word(p) * m.group_word(q).inverse();
  if (y2 == p || !group_eq(a, g * m.group_word(r), m.group_word(y2))) return Status::Unknown;
  std::size_t L = c.at("prefix_ball").get<std::size_t>();
  auto zs = common_prefixes(m, p, y2, L, budget);
  Json listed = Json::array();
  for (const auto& z : zs) listed.push_back(m.format(z));
  if (listed != c.at("common_prefixes")) return Status::Unknown;
  for (const auto& z : zs)
    if (in_P(a, g.inverse() * m.group_word(z)) != Tri::No) return Status::Unknown;
  return Status::Violated;
}

inline Status verify_toeplitz(const CatalogEntry& e, const Ambient& a, const Json& c, long long budget) {
  auto kind = c.at("kind").get<std::string>();
  if (kind == "hull-witness")
    return verify_translation(e, a, parse_hull(c.at("s").get<std::string>(), backend_of(e)),
                              parse_group(a, c.at("g").get<std::string>()), c.at("ball").get<std::size_t>(), budget);
  if (kind == "prefix-refutation") return verify_prefix_refutation(e, a, c, budget);
  return Status::Unknown;
}

}  // namespace detail

inline CheckVerdict check_toeplitz(const CatalogEntry& e, std::string_view ambient, const ToeplitzQuery& in,
                                   const CheckOptions& o = {}) {
  const auto& m = detail::backend_of(e);
  auto a = detail::bind_ambient(e, ambient);
  CheckVerdict v;
  v.condition = "toeplitz";
  v.semigroup = e.name;
  v.ambient = a.spec;
  v.citations = {"sec:Toeplitz", "equi-from_T"};
  if (!a.oracle) {
    v.note = "no ambient group";
    return v;
  }
  GroupWord g;
  if (in.p && in.q)
    g = m.group_word(*in.p) * m.group_word(*in.q).inverse();
  else if (in.g)
    g = *in.g;
  else
    throw Error("toeplitz needs g or a pair p, q");
  std::size_t plen = in.p ? m.group_word(*in.p).size() : 0, qlen = in.q ? m.group_word(*in.q).size() : 0;
  std::size_t L = detail::pick_L(o, a.natural ? 2 * o.depth + 2 : std::max(plen, qlen) + 1);
  v.bounds = detail::bounds_json(o, L);

  auto witness = [&](const HullElement& s, bool exact) {
    Json c{{"kind", "hull-witness"}, {"g", detail::format_group(a, g)}, {"s", format_hull(s, m)}, {"ball", L}, {"exact", exact}};
    if (detail::verify_toeplitz(e, a, c, o.budget) != Status::Witness) return false;
    v.status = Status::Witness;
    v.certificate = c;
    return true;
  };

  if (a.graph) {
    auto s = detail::graph_product_translation(normal_form(detail::gp_of(g), *a.graph), *a.graph);
    if (!witness(s, true)) throw InvariantError("graph product translation failed to verify");
    v.citations.insert(v.citations.end(), {"factor", "local-Toeplitz", "Toeplitz_GraphProducts"});
    return v;
  }
  if (a.natural) {
    if (in.p && in.q) {
      Elem p = *in.p, q = *in.q;
      for (bool again = true; again;) {
        again = false;
        for (std::size_t i = 0; i < m.rank() && !again; ++i) {
          auto dp = m.right_divide(p, m.generator(i), o.budget), dq = m.right_divide(q, m.generator(i), o.budget);
          if (dp.status == Tri::Yes && dq.status == Tri::Yes) {
            p = dp.quotient;
            q = dq.quotient;
            again = true;
          }
        }
      }
      HullElement s;
      if (!m.is_identity(p)) s.chain.push_back({Move::Kind::Mult, p});
      if (!m.is_identity(q)) s.chain.push_back({Move::Kind::Divide, q});
      if (witness(s, false)) {
        v.citations.push_back("J=pP->J_PinG=gP");
        v.note = "domain checked on the ball of length " + std::to_string(L);
        return v;
      }
    }
    v.note = "no hull witness found";
    return v;
  }
  if (!(in.p && in.q) || !e.principal) {
    v.note = "refutation needs p, q and principal constructible ideals";
    return v;
  }
  // P cap gP = zP would force z to divide p and every other member y2.
  std::unordered_map<std::string, Elem> by_nf;
  for (const auto& b : m.ball(L)) by_nf.emplace(a.oracle->normal_form(m.group_word(b)), b);
  GroupWord ginv = g.inverse();
  auto lookup = [&](const Elem& y2) -> std::optional<Elem> {
    auto it = by_nf.find(a.oracle->normal_form(ginv * m.group_word(y2)));
    if (it == by_nf.end()) return std::nullopt;
    return it->second;
  };
  std::optional<std::pair<Elem, Elem>> found;
  if (in.second) {
    if (auto r = lookup(*in.second)) found = {*in.second, *r};
  } else {
    // fewest common prefixes with p, first in ball order
    std::size_t best = 0;
    for (const auto& y2 : m.ball(L)) {
      if (y2 == *in.p) continue;
      auto r = lookup(y2);
      if (!r) continue;
      std::size_t n = detail::common_prefixes(m, *in.p, y2, plen, o.budget).size();
      if (!found || n < best) {
        found = {y2, *r};
        best = n;
      }
      if (best == 1) break;
    }
  }
  const auto& [y2, r] = *found;
  Json c;
  c["kind"] = "prefix-refutation";
  c["p"] = m.format(*in.p);
  c["q"] = m.format(*in.q);
  c["g"] = detail::format_group(a, g);
  c["y2"] = m.format(y2);
  c["r"] = m.format(r);
  c["prefix_ball"] = plen;
  auto zs = detail::common_prefixes(m, *in.p, y2, plen, o.budget);
  Json listed = Json::array(), refuted = Json::array();
  for (const auto& z : zs) {
    listed.push_back(m.format(z));
    GroupWord w = ginv * m.group_word(z);
    refuted.push_back(Json{{"z", m.format(z)}, {"q p^-1 z", a.oracle->normal_form(w)}, {"in_P", std::string(to_string(detail::in_P(a, w)))}});
  }
  c["common_prefixes"] = listed;
  c["refutations"] = refuted;
  v.certificate = c;
  v.status = detail::verify_prefix_refutation(e, a, c, o.budget) == Status::Violated ? Status::Violated : Status::Unknown;
  v.citations.push_back("J=pP->J_PinG=gP");
  v.citations.push_back(detail::principal_anchor(e));
  v.note = v.status == Status::Violated ? "y2 = g r with r in P; every common prefix z of p and y2 has q p^-1 z outside P"
                                        : "some common prefix could not be refuted";
  return v;
}

// ---------------------------------------------------------------------------
// Quasi-lattice order

namespace detail {

struct QuasiScan {
  Status status = Status::Unknown;
  std::vector<Elem> minimal;
  std::size_t members = 0;
};

inline QuasiScan scan_quasi_lattice(const CatalogEntry& e, const Ambient& a, const GroupWord& g, std::size_t L,
                                    long long budget) {
  const auto& m = backend_of(e);
  QuasiScan out;
  auto ball = m.ball(L);
  std::vector<Elem> S;
  std::vector<bool> inS(ball.size(), false);
  GroupWord ginv = g.inverse();
  for (std::size_t i = 0; i < ball.size(); ++i) {
    Tri t = in_P(a, ginv * m.group_word(ball[i]));
    if (t == Tri::Unknown) return out;
    if (t == Tri::Yes) {
      S.push_back(ball[i]);
      inS[i] = true;
    }
  }
  out.members = S.size();
  if (S.empty()) {
    out.status = Status::Witness;
    return out;
  }
  for (const auto& x : S) {
    bool minimal = true;
    for (const auto& y : S) {
      if (y == x) continue;
      Tri t = m.left_divide(y, x, budget).status;
      if (t == Tri::Unknown) return out;
      if (t == Tri::Yes) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.minimal.push_back(x);
  }
  if (out.minimal.size() > 1) {
    out.status = Status::Violated;
    return out;
  }
  const Elem& p = out.minimal.front();
  for (std::size_t i = 0; i < ball.size(); ++i) {
    Tri t = m.left_divide(p, ball[i], budget).status;
    if (t == Tri::Unknown) return out;
    if ((t == Tri::Yes) != inS[i]) return out;
  }
  out.status = Status::Witness;
  return out;
}

}  // namespace detail

inline CheckVerdict check_quasi_lattice(const CatalogEntry& e, std::string_view ambient, const GroupWord& g,
                                        const CheckOptions& o = {}) {
  const auto& m = detail::backend_of(e);
  auto a = detail::bind_ambient(e, ambient);
  CheckVerdict v;
  v.condition = "quasi-lattice";
  v.semigroup = e.name;
  v.ambient = a.spec;
  std::size_t L = detail::pick_L(o, 2 * o.depth + 2);
  v.bounds = detail::bounds_json(o, L);
  v.citations = {"THM_sgp-rep->G0=trivial"};
  if (!a.oracle || !a.natural) {
    v.note = "quasi-lattice order is checked in the natural ambient group only";
    return v;
  }
  auto s = detail::scan_quasi_lattice(e, a, g, L, o.budget);
  v.status = s.status;
  Json c{{"g", detail::format_group(a, g)}, {"ball", L}, {"members", s.members}};
  if (s.status == Status::Witness) c["p"] = s.minimal.empty() ? Json(nullptr) : Json(m.format(s.minimal.front()));
  Json mins = Json::array();
  for (const auto& x : s.minimal) mins.push_back(m.format(x));
  c["minimal"] = mins;
  c["trivial_units"] = e.trivial_units;
  v.certificate = c;
  if (s.status == Status::Witness)
    v.note = s.minimal.empty() ? "gP cap P is empty on the ball" : "gP cap P = pP on the ball";
  return v;
}

// ---------------------------------------------------------------------------
// Reversibility and the pure infiniteness criterion

namespace detail {

inline Status verify_disjoint_pair(const CatalogEntry& e, const Json& c, long long budget) {
  const auto& m = backend_of(e);
  const auto& pr = c.at("pair");
  bool right = c.value("side", "left") == "right";
  return principal_disjoint(e, m.parse(pr.at(0).get<std::string>()), m.parse(pr.at(1).get<std::string>()), right, budget) ==
                 Tri::Yes
             ? Status::Violated
             : Status::Unknown;
}

}  // namespace detail

inline CheckVerdict check_reversibility(const CatalogEntry& e, std::string_view side, const CheckOptions& o = {}) {
  if (side != "left" && side != "right") throw Error("side must be left or right");
  const auto& m = detail::backend_of(e);
  CheckVerdict v;
  v.condition = std::string(side) + "-reversibility";
  v.semigroup = e.name;
  std::size_t L = detail::pick_L(o, 2 * o.depth);
  v.bounds = detail::bounds_json(o, L);
  v.citations = {"char-leftrev"};
  if (e.abelian) {
    v.status = Status::Proved;
    v.certificate = Json{{"kind", "criterion"}, {"reason", "cancellative abelian"}};
    return v;
  }
  auto scan = detail::scan_pairs(e, side == "right", L, o.budget);
  if (scan.disjoint) {
    Json c{{"kind", "disjoint-pair"}, {"side", side}, {"pair", Json::array({m.format(scan.disjoint->first), m.format(scan.disjoint->second)})}};
    v.status = detail::verify_disjoint_pair(e, c, o.budget);
    v.certificate = c;
    v.note = side == "left" ? "pP cap qP is empty" : "Pp cap Pq is empty";
    return v;
  }
  v.status = scan.unresolved ? Status::Unknown : Status::NoViolationUpToBound;
  v.certificate = Json{{"kind", "scan"}, {"side", side}, {"pairs", scan.scanned}, {"unresolved", scan.unresolved}};
  return v;
}

inline CheckVerdict check_pure_infiniteness(const CatalogEntry& e, const CheckOptions& o = {}) {
  const auto& m = detail::backend_of(e);
  CheckVerdict v;
  v.condition = "pure-infinite";
  v.semigroup = e.name;
  std::size_t L = detail::pick_L(o, 2 * o.depth);
  v.bounds = detail::bounds_json(o, L);
  v.citations = {"bdP_pi"};
  auto scan = detail::scan_pairs(e, false, L, o.budget);
  if (scan.disjoint) {
    Json c{{"kind", "disjoint-pair"}, {"side", "left"}, {"pair", Json::array({m.format(scan.disjoint->first), m.format(scan.disjoint->second)})}};
    v.status = detail::verify_disjoint_pair(e, c, o.budget) == Status::Violated ? Status::Witness : Status::Unknown;
    v.certificate = c;
    v.note = "pP cap qP is empty, so the boundary quotient is purely infinite";
    return v;
  }
  v.status = scan.unresolved ? Status::Unknown : Status::NoViolationUpToBound;
  v.certificate = Json{{"kind", "scan"}, {"pairs", scan.scanned}, {"unresolved", scan.unresolved}};
  v.note = "no disjoint pair up to the bound";
  return v;
}

// ---------------------------------------------------------------------------
// Omega = boundary

namespace detail {

inline std::optional<Elem> some_member(const RightIdeal& X, const MonoidBackend& m, std::size_t L, long long budget) {
  for (const auto& x : m.ball(L))
    if (ideal_membership(x, X, m, budget) == Tri::Yes) return x;
  return std::nullopt;
}

inline std::vector<RightIdeal> family_of(const CatalogEntry& e, const Json& fam, long long budget) {
  const auto& m = backend_of(e);
  std::vector<RightIdeal> out;
  for (const auto& f : fam) {
    auto X = evaluate_chain(parse_hull(f.at("chain").get<std::string>(), m), m, budget);
    if (format_ideal(X, m) != f.at("ideal").get<std::string>()) throw Error("family member does not match its chain");
    out.push_back(std::move(X));
  }
  return out;
}

/// Proper: the identity is outside, the recorded member inside.
inline bool proper_family(const CatalogEntry& e, const std::vector<RightIdeal>& xs, const Json& fam, long long budget) {
  const auto& m = backend_of(e);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (ideal_membership(m.identity(), xs[i], m, budget) != Tri::No) return false;
    if (ideal_membership(m.parse(fam[i].at("member").get<std::string>()), xs[i], m, budget) != Tri::Yes) return false;
  }
  return true;
}

inline Status verify_saturated_family(const CatalogEntry& e, const Json& c, long long budget) {
  const auto& m = backend_of(e);
  auto xs = family_of(e, c.at("family"), budget);
  if (!proper_family(e, xs, c.at("family"), budget)) return Status::Unknown;
  const auto& sat = c.at("saturation");
  if (sat.size() != m.rank()) return Status::Unknown;
  for (std::size_t i = 0; i < m.rank(); ++i) {
    if (sat[i].at("generator").get<std::string>() != m.format(m.generator(i))) return Status::Unknown;
    auto k = sat[i].at("member_of").get<std::size_t>();
    if (k >= xs.size() || ideal_membership(m.generator(i), xs[k], m, budget) != Tri::Yes) return Status::Unknown;
  }
  return Status::Violated;
}

inline Status verify_family_witnesses(const CatalogEntry& e, const Json& c, long long budget) {
  const auto& m = backend_of(e);
  for (const auto& f : c.at("families")) {
    auto xs = family_of(e, f.at("family"), budget);
    if (!proper_family(e, xs, f.at("family"), budget)) return Status::Unknown;
    Elem p = m.parse(f.at("p").get<std::string>());
    for (const auto& X : xs)
      if (ideal_disjoint(e, p, X, budget) != Tri::Yes) return Status::Unknown;
  }
  return Status::Witness;
}

}  // namespace detail

inline CheckVerdict check_omega_equals_boundary(const CatalogEntry& e, const CheckOptions& o = {}) {
  const auto& m = detail::backend_of(e);
  CheckVerdict v;
  v.condition = "boundary-eq";
  v.semigroup = e.name;
  std::size_t L = detail::pick_L(o, 2 * o.depth + 2);
  v.bounds = detail::bounds_json(o, L);
  v.citations = {"Omega=bd"};
  EnumerationOptions eo;
  eo.depth = o.depth;
  eo.sample_length = L;
  eo.budget = o.budget;
  auto en = enumerate_ideals(m, eo);
  std::vector<std::size_t> proper;
  std::vector<Elem> member(en.ideals.size());
  for (std::size_t i = 0; i < en.ideals.size(); ++i) {
    auto sh = en.ideals[i].ideal.shape;
    if (sh == RightIdeal::Shape::Empty || sh == RightIdeal::Shape::Full) continue;
    if (ideal_membership(m.identity(), en.ideals[i].ideal, m, o.budget) != Tri::No) continue;
    auto x = detail::some_member(en.ideals[i].ideal, m, L, o.budget);
    if (!x) continue;
    member[i] = *x;
    proper.push_back(i);
  }
  auto family_json = [&](const std::vector<std::size_t>& fam) {
    Json j = Json::array();
    for (auto i : fam)
      j.push_back(Json{{"ideal", en.ideals[i].id}, {"chain", format_hull(en.ideals[i].chain, m)}, {"member", m.format(member[i])}});
    return j;
  };
  auto ball = m.ball(L);
  Json witnessed = Json::array();
  std::size_t families = 0, undetermined = 0;
  bool truncated = false;
  std::vector<std::size_t> fam;
  // combinations of proper ideals in enumeration order, smallest families first
  std::function<bool(std::size_t, std::size_t)> walk = [&](std::size_t start, std::size_t size) -> bool {
    if (fam.size() == size) {
      if (++families > o.max_families) {
        truncated = true;
        return true;
      }
      Json sat = Json::array();
      bool saturated = true;
      for (std::size_t gi = 0; gi < m.rank() && saturated; ++gi) {
        std::optional<std::size_t> hit;
        for (std::size_t k = 0; k < fam.size() && !hit; ++k)
          if (ideal_membership(m.generator(gi), en.ideals[fam[k]].ideal, m, o.budget) == Tri::Yes) hit = k;
        if (!hit) saturated = false;
        else sat.push_back(Json{{"generator", m.format(m.generator(gi))}, {"member_of", *hit}});
      }
      if (saturated) {
        Json c{{"kind", "saturated-family"}, {"family", family_json(fam)}, {"saturation", sat}};
        v.status = detail::verify_saturated_family(e, c, o.budget);
        v.certificate = c;
        v.note = "every p != e lies in a generator cone contained in some X_i, and e meets all of them";
        return true;
      }
      for (const auto& p : ball) {
        bool ok = true;
        for (auto i : fam) {
          if (detail::ideal_disjoint(e, p, en.ideals[i].ideal, o.budget) != Tri::Yes) {
            ok = false;
            break;
          }
        }
        if (ok) {
          witnessed.push_back(Json{{"family", family_json(fam)}, {"p", m.format(p)}});
          return false;
        }
      }
      ++undetermined;
      return false;
    }
    for (std::size_t j = start; j < proper.size(); ++j) {
      fam.push_back(proper[j]);
      bool stop = walk(j + 1, size);
      fam.pop_back();
      if (stop) return true;
    }
    return false;
  };
  for (std::size_t size = 1; size <= o.family_size; ++size)
    if (walk(0, size)) break;
  if (v.status == Status::Violated) return v;
  Json c{{"kind", "family-witnesses"}, {"families", witnessed}, {"undetermined", undetermined}, {"truncated", truncated},
         {"proper_ideals", proper.size()}};
  v.certificate = c;
  if (undetermined == 0 && !truncated && !witnessed.empty()) {
    v.status = detail::verify_family_witnesses(e, c, o.budget);
    v.note = "every scanned family has p with pP disjoint from all members";
  } else {
    v.status = Status::NoViolationUpToBound;
  }
  return v;
}

// ---------------------------------------------------------------------------
// G0 hypotheses

namespace detail {

/// Presentation whose relation heads decide the hypothesis for the first
/// `limit` generators. Thompson windows need one more generator so that
/// x_n x_k = x_k x_{n+1} is present for every n < limit.
inline std::pair<Presentation, std::size_t> head_window(const CatalogEntry& e) {
  std::size_t n = e.presentation->rank();
  if (e.name == "thompson") return {thompson_presentation(n + 1), n};
  if (e.name == "thompson-op") return {thompson_presentation(n + 1).opposite(), n};
  return {*e.presentation, n};
}

/// For each u some v != u heads no relation together with u.
inline std::optional<std::pair<std::size_t, std::vector<std::size_t>>> shared_heads(const Presentation& pres,
                                                                                      std::size_t limit, Json* partners) {
  std::size_t n = pres.rank();
  std::vector<std::vector<bool>> shared(n, std::vector<bool>(n, false));
  for (const auto& r : pres.relations()) {
    shared[r.lhs[0]][r.rhs[0]] = true;
    shared[r.rhs[0]][r.lhs[0]] = true;
  }
  for (std::size_t u = 0; u < limit; ++u) {
    std::optional<std::size_t> free;
    std::vector<std::size_t> blocked;
    for (std::size_t w = 0; w < limit; ++w) {
      if (w == u) continue;
      if (!shared[u][w]) {
        free = w;
        break;
      }
      blocked.push_back(w);
    }
    if (!free) return std::pair{u, blocked};
    if (partners) partners->push_back(Json{{"u", pres.name(static_cast<GeneratorId>(u))}, {"v", pres.name(static_cast<GeneratorId>(*free))}});
  }
  return std::nullopt;
}

inline Status verify_g0(const CatalogEntry& e, const Json& c) {
  if (!e.presentation || !e.presentation->complete()) return Status::Unknown;
  auto [pres, limit] = head_window(e);
  auto bad = shared_heads(pres, limit, nullptr);
  if (!bad) return Status::Unknown;
  Json blocked = Json::array();
  for (auto w : bad->second) blocked.push_back(pres.name(static_cast<GeneratorId>(w)));
  if (c.at("u").get<std::string>() != pres.name(static_cast<GeneratorId>(bad->first)) || c.at("shared") != blocked)
    return Status::Unknown;
  return Status::Violated;
}

}  // namespace detail

inline CheckVerdict check_g0(const CatalogEntry& e, std::string_view ambient, const CheckOptions& o = {}) {
  CheckVerdict v;
  v.condition = "g0";
  v.semigroup = e.name;
  std::size_t L = detail::pick_L(o, 4);
  v.bounds = detail::bounds_json(o, L);
  v.citations = {"THM_sgp-rep->G0=trivial"};
  if (!e.presentation || !e.presentation->complete()) {
    v.note = "needs a presentation that is complete for reversing";
    return v;
  }
  auto [pres, limit] = detail::head_window(e);
  Json partners = Json::array();
  if (auto bad = detail::shared_heads(pres, limit, &partners)) {
    Json blocked = Json::array();
    for (auto w : bad->second) blocked.push_back(pres.name(static_cast<GeneratorId>(w)));
    Json c{{"kind", "shared-heads"}, {"hypothesis", "for every u some v != u shares no relation head with u"},
           {"u", pres.name(static_cast<GeneratorId>(bad->first))}, {"shared", blocked}};
    v.status = detail::verify_g0(e, c);
    v.certificate = c;
    v.note = "every other generator heads a relation together with u";
    return v;
  }
  Json checks = Json::array();
  auto a = detail::bind_ambient(e, ambient);
  if (e.backend && a.oracle && a.natural) {
    const auto& m = *e.backend;
    for (std::size_t s = 0; s < m.rank(); ++s)
      for (std::size_t t = 0; t < m.rank(); ++t) {
        if (s == t) continue;
        GroupWord g = m.group_word(m.generator(s)) * m.group_word(m.generator(t)).inverse();
        auto q = detail::scan_quasi_lattice(e, a, g, L, o.budget);
        if (q.status != Status::Witness) {
          v.status = q.status == Status::Violated ? Status::Violated : Status::Unknown;
          v.certificate = Json{{"kind", "quasi-lattice-spot-check"}, {"g", detail::format_group(a, g)}, {"ball", L}};
          v.note = "quasi-lattice spot check did not confirm";
          return v;
        }
        checks.push_back(Json{{"g", detail::format_group(a, g)},
                              {"p", q.minimal.empty() ? Json(nullptr) : Json(m.format(q.minimal.front()))}});
      }
  } else if (!e.principal) {
    v.note = "no ambient group for quasi-lattice spot checks";
    return v;
  }
  v.status = Status::Proved;
  v.certificate = Json{{"kind", "criterion"}, {"partners", partners}, {"spot_checks", checks},
                       {"quasi_lattice", checks.empty() ? "catalog annotation" : "spot checks on the ball"}};
  v.note = "G0 = {e}, so the boundary quotient is simple";
  return v;
}

// ---------------------------------------------------------------------------
// Replay

/// Re-derives the status from the certificate alone (Violated, Witness) or
/// by rerunning the check with the recorded bounds.
inline Status replay(const CheckVerdict& v, const CatalogEntry& e) {
  auto o = detail::options_from(v.bounds);
  const auto& c = v.certificate;
  bool certified = v.status == Status::Violated || v.status == Status::Witness;
  if (v.condition == "independence") {
    if (certified) return detail::verify_independence(e, c, o);
    return check_independence(e, o).status;
  }
  if (v.condition == "toeplitz") {
    auto a = detail::bind_ambient(e, v.ambient);
    if (certified) return detail::verify_toeplitz(e, a, c, o.budget);
    return Status::Unknown;
  }
  if (v.condition == "quasi-lattice") {
    auto a = detail::bind_ambient(e, v.ambient);
    return check_quasi_lattice(e, v.ambient, detail::parse_group(a, c.at("g").get<std::string>()), o).status;
  }
  if (v.condition == "left-reversibility" || v.condition == "right-reversibility") {
    if (v.status == Status::Violated) return detail::verify_disjoint_pair(e, c, o.budget);
    return check_reversibility(e, v.condition.substr(0, v.condition.find('-')), o).status;
  }
  if (v.condition == "pure-infinite") {
    if (v.status == Status::Witness)
      return detail::verify_disjoint_pair(e, c, o.budget) == Status::Violated ? Status::Witness : Status::Unknown;
    return check_pure_infiniteness(e, o).status;
  }
  if (v.condition == "boundary-eq") {
    if (v.status == Status::Violated) return detail::verify_saturated_family(e, c, o.budget);
    if (v.status == Status::Witness) return detail::verify_family_witnesses(e, c, o.budget);
    return check_omega_equals_boundary(e, o).status;
  }
  if (v.condition == "g0") {
    if (v.status == Status::Violated && c.value("kind", "") == "shared-heads") return detail::verify_g0(e, c);
    return check_g0(e, v.ambient, o).status;
  }
  throw Error("unknown condition '" + v.condition + "'");
}

inline Status replay(const CheckVerdict& v) { return replay(v, catalog_instance(v.semigroup)); }

}  // namespace sgc

#endif  // SGC_CONDITIONS_HPP
