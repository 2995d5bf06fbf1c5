#ifndef SGC_TESTING_PROPERTIES_HPP
#define SGC_TESTING_PROPERTIES_HPP

// Randomized and exhaustive property checks shared by the unit tests, the
// acceptance binary and `sgc selftest`. A property throws PropertyFailure.

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "../catalog.hpp"
#include "../conditions.hpp"
#include "../graphprod.hpp"
#include "../ideals.hpp"
#include "../ktheory.hpp"
#include "../oracles.hpp"
#include "../semilattice.hpp"
#include "../thompson.hpp"
#include "../words.hpp"
#include "oracles.hpp"

namespace sgc::testing {

struct PropertyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void expect(bool ok, const std::string& what) {
  if (!ok) throw PropertyFailure(what);
}

using Rng = std::mt19937_64;

struct Property {
  std::string module;
  std::string name;
  std::function<void(Rng&)> run;
};

struct PropertyOutcome {
  std::string module;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// ---------------------------------------------------------------------------
// generators

namespace gen {

inline GroupWord group_word(Rng& rng, std::size_t rank, std::size_t max_len) {
  GroupWord w;
  std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i)
    w.letters.push_back({static_cast<GeneratorId>(rng() % rank), static_cast<std::int8_t>(rng() % 2 ? 1 : -1)});
  return w;
}

inline GroupWord positive(Rng& rng, std::size_t rank, std::size_t max_len) {
  GroupWord w;
  std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i) w.letters.push_back({static_cast<GeneratorId>(rng() % rank), 1});
  return w;
}

inline GPWord gp_word(Rng& rng, const GraphSpec& g, std::size_t max_len, int max_abs = 2) {
  GPWord w;
  std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i) {
    std::int64_t v = static_cast<std::int64_t>(rng() % (2 * max_abs)) - max_abs;
    if (v >= 0) ++v;
    w.syllables.push_back({static_cast<VertexId>(rng() % g.size()), v});
  }
  return w;
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[rng() % v.size()];
}

inline std::vector<GraphSpec> small_graphs() {
  return {GraphSpec::complete(2), GraphSpec::discrete(2), GraphSpec::path(3), GraphSpec::complete(3),
          GraphSpec::discrete(3)};
}

/// Two or three vertices, some carrying N \ {1}.
inline std::vector<GraphSpec> ideal_graphs() {
  NumericalSemigroup nat, s({1});
  return {GraphSpec::complete(2), GraphSpec::discrete(2), GraphSpec::path(3),
          GraphSpec({"a", "b"}, {{0, 1}}, {s, nat}), GraphSpec({"a", "b", "c"}, {{0, 1}}, {nat, s, nat})};
}

inline Presentation braid3() { return braid_presentation(3); }
inline Presentation nat2() { return Presentation::parse("generators: a b\na b = b a\ncomplete: true\n"); }

}  // namespace gen

// ---------------------------------------------------------------------------
// words

namespace props {

inline void equal_witness_replays(Rng& rng) {
  auto b = gen::braid3();
  auto words = all_words(2, 5);
  for (int i = 0; i < 1000; ++i) {
    const auto& u = gen::pick(rng, words);
    MonoidWord v = gen::pick(rng, words);
    if (rng() % 2) {
      auto cls = congruence_class(u, b, 1000);
      v = gen::pick(rng, cls);
    }
    auto r = decide_equal_rr(u, v, b, 20000);
    expect(r.status != EqualityStatus::BudgetExhausted, "budget exhausted on " + b.format(u) + " vs " + b.format(v));
    expect((r.status == EqualityStatus::Equal) == reference::closure_equal(u, v, b),
           "rewriting and closure disagree on " + b.format(u) + " vs " + b.format(v));
    if (r.status == EqualityStatus::Equal)
      expect(replay_rr_path(u, v, r.path, b), "witness path does not replay for " + b.format(u) + " vs " + b.format(v));
  }
}

inline void free_monoid_literal(Rng&) {
  auto free2 = Presentation::parse("generators: a b\ncomplete: true\n");
  auto words = all_words(2, 6);
  for (const auto& u : words)
    for (const auto& v : words) {
      if (u.size() + v.size() > 12) continue;
      bool eq = decide_equal_rr(u, v, free2, 1000).status == EqualityStatus::Equal;
      expect(eq == (u == v), "free monoid: " + free2.format(u) + " vs " + free2.format(v));
    }
}

inline void left_divide_sound(Rng&) {
  auto b = gen::braid3();
  auto words = all_words(2, 4);
  for (const auto& p : words)
    for (const auto& x : words) {
      auto r = left_divide(p, x, b, 5000);
      if (r.found())
        expect(decide_equal_rr(p * r.quotient, x, b, 20000).status == EqualityStatus::Equal,
               "quotient of " + b.format(x) + " by " + b.format(p) + " is wrong");
    }
}

inline void relation_steps_preserve_length(Rng& rng) {
  for (auto pres : {gen::braid3(), gen::nat2(), thompson_presentation(6)}) {
    auto words = all_words(pres.rank(), 4);
    int checked = 0;
    while (checked < 1000) {
      GroupWord w = GroupWord(gen::pick(rng, words)).inverse() * GroupWord(gen::pick(rng, words));
      for (int step = 0; step < 6 && checked < 1000; ++step) {
        auto moves = rr_moves(w, pres);
        if (moves.empty()) break;
        const auto& m = gen::pick(rng, moves);
        long before = 0, after = 0;
        for (auto l : w.letters) before += l.sign;
        for (auto l : m.result.letters) after += l.sign;
        expect(before == after, "signed length changed by a step");
        w = m.result;
        ++checked;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// graphprod

inline void normal_form_idempotent(Rng& rng) {
  auto graphs = gen::small_graphs();
  for (int i = 0; i < 10000; ++i) {
    const auto& g = graphs[i % graphs.size()];
    auto n = normal_form(gen::gp_word(rng, g, 8), g);
    expect(is_reduced(n, g), "normal form not reduced: " + format_gp(n, g));
    expect(normal_form(n, g) == n, "normal form not idempotent: " + format_gp(n, g));
  }
}

inline void shuffle_invariance(Rng& rng) {
  auto graphs = gen::small_graphs();
  for (int i = 0; i < 3000; ++i) {
    const auto& g = graphs[i % graphs.size()];
    auto w = normal_form(gen::gp_word(rng, g, 8), g);
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (!g.adjacent(w.syllables[k].vertex, w.syllables[k + 1].vertex)) continue;
      GPWord s = w;
      std::swap(s.syllables[k], s.syllables[k + 1]);
      expect(normal_form(s, g) == w, "shuffle changes the normal form of " + format_gp(w, g));
      auto a = initial_final_data(w, g), b = initial_final_data(s, g);
      expect(a.initial_vertices == b.initial_vertices && a.initial_syllables == b.initial_syllables,
             "shuffle changes initial data of " + format_gp(w, g));
    }
  }
}

inline void initial_syllable_law(Rng&) {
  for (const auto& g : {GraphSpec::path(3), GraphSpec::complete(3), GraphSpec::discrete(3)}) {
    for (const auto& mw : all_words(3, 5)) {
      auto x = gp_from_word(mw, g);
      auto dx = initial_final_data(x, g);
      for (VertexId w = 0; w < 3; ++w)
        for (std::int64_t e : {1, 2}) {
          auto dgx = initial_final_data(gp_multiply(GPWord{{w, e}}, x, g), g);
          expect(dgx.initial_value(w) == e + dx.initial_value(w), "S_w^i(gx) != g S_w^i(x) at " + format_gp(x, g));
        }
    }
  }
}

inline void rewriting_agreement(Rng&) {
  for (const auto& g : {GraphSpec::complete(2), GraphSpec::discrete(2), GraphSpec::path(3)}) {
    auto pres = raam_presentation(g);
    auto words = all_words(g.size(), 5);
    for (const auto& u : words)
      for (const auto& v : words) {
        if (u.size() != v.size()) continue;
        bool gp = gp_from_word(u, g) == gp_from_word(v, g);
        bool rr = decide_equal_rr(u, v, pres, 100000).status == EqualityStatus::Equal;
        expect(gp == rr, "normal forms and rewriting disagree on " + pres.format(u) + " vs " + pres.format(v));
      }
  }
}

inline void multiply_associative(Rng& rng) {
  auto graphs = gen::small_graphs();
  for (int i = 0; i < 1000; ++i) {
    const auto& g = graphs[i % graphs.size()];
    auto a = normal_form(gen::gp_word(rng, g, 5), g);
    auto b = normal_form(gen::gp_word(rng, g, 5), g);
    auto c = normal_form(gen::gp_word(rng, g, 5), g);
    expect(gp_multiply(gp_multiply(a, b, g), c, g) == gp_multiply(a, gp_multiply(b, c, g), g),
           "multiplication not associative");
  }
}

// ---------------------------------------------------------------------------
// oracles

inline void fox_product_rule(Rng& rng) {
  for (int i = 0; i < 1000; ++i) {
    auto u = gen::group_word(rng, 2, 10), v = gen::group_word(rng, 2, 10);
    auto fu = fox_image(u), fv = fox_image(v), fuv = fox_image(u * v);
    auto [m, n] = fu.abelianization;
    expect(fuv.da == fu.da + fv.da.shifted(m, n) && fuv.db == fu.db + fv.db.shifted(m, n), "Fox product rule");
  }
}

inline void fox_inverse_rule(Rng& rng) {
  for (int i = 0; i < 1000; ++i) {
    auto w = gen::group_word(rng, 2, 12);
    auto f = fox_image(w), g = fox_image(w.inverse());
    auto [m, n] = f.abelianization;
    expect(g.da == -f.da.shifted(-m, -n) && g.db == -f.db.shifted(-m, -n), "Fox inverse rule");
  }
}

inline void metabelian_refines_free(Rng& rng) {
  FreeGroupOracle f(2);
  for (int i = 0; i < 1000; ++i) {
    auto u = gen::group_word(rng, 2, 8);
    GroupWord v = u;
    std::size_t pos = rng() % (v.size() + 1);
    Letter l{static_cast<GeneratorId>(rng() % 2), 1};
    v.letters.insert(v.letters.begin() + static_cast<std::ptrdiff_t>(pos), {l, l.inverse()});
    expect(f.eq(u, v) && metabelian_eq(u, v), "free equality not refined");
    auto w = gen::group_word(rng, 2, 8);
    expect(metabelian_eq(u, w) == reference::MagnusMatrix::of(u * w.inverse()).is_identity(),
           "Fox criterion and Magnus matrices disagree");
  }
}

inline void thompson_normal_forms(Rng& rng) {
  ThompsonOracle t;
  for (int i = 0; i < 1000; ++i) {
    auto u = gen::group_word(rng, 5, 8), v = gen::group_word(rng, 5, 8), w = gen::group_word(rng, 5, 4);
    auto nu = thompson_normal_form(u);
    expect(thompson_normal_form(nu.to_word()) == nu, "normal form not idempotent");
    expect(thompson_normal_form(gen::positive(rng, 5, 8)).is_positive(), "positive word left the monoid");
    bool e = t.eq(u, v);
    expect(t.eq(u * w, v * w) == e && t.eq(w * u, w * v) == e, "equality is not a congruence");
  }
}

inline void positivity_closed(Rng& rng) {
  std::vector<std::unique_ptr<GroupOracle>> oracles;
  std::vector<std::size_t> ranks{2, 3, 2, 4, 2, 3};
  oracles.push_back(make_oracle("free:2"));
  oracles.push_back(make_oracle("free-abelian:3"));
  oracles.push_back(make_oracle("metabelian:2"));
  oracles.push_back(make_oracle("thompson"));
  oracles.push_back(make_oracle("braid:3"));
  oracles.push_back(std::make_unique<GraphProductOracle>(GraphSpec::path(3)));
  for (std::size_t k = 0; k < oracles.size(); ++k) {
    const auto& o = *oracles[k];
    for (int i = 0; i < 400; ++i) {
      auto u = gen::group_word(rng, ranks[k], 5), v = gen::group_word(rng, ranks[k], 5);
      if (rng() % 2) u = gen::positive(rng, ranks[k], 5);
      if (rng() % 2) v = gen::positive(rng, ranks[k], 5);
      if (o.is_positive(u) == Tri::Yes && o.is_positive(v) == Tri::Yes)
        expect(o.is_positive(u * v) == Tri::Yes, o.name() + ": product of positives not positive");
    }
  }
}

// ---------------------------------------------------------------------------
// ideals

struct IdealBackend {
  std::shared_ptr<const MonoidBackend> m;
  Enumeration en;
};

inline std::vector<IdealBackend> ideal_backends() {
  std::vector<IdealBackend> out;
  EnumerationOptions eo;
  eo.depth = 2;
  for (const char* n : {"free2", "nat2", "numerical:1", "braid:3"}) {
    auto e = catalog_instance(n);
    out.push_back({e.backend, enumerate_ideals(*e.backend, eo)});
  }
  auto g = std::make_shared<GraphProductMonoid>(gen::ideal_graphs().back(), "mixed3");
  out.push_back({g, enumerate_ideals(*g, eo)});
  return out;
}

inline void right_ideal_law(Rng& rng) {
  auto bs = ideal_backends();
  int yes = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto& b = bs[i % bs.size()];
    auto ball = b.m->ball(3);
    const auto& X = gen::pick(rng, b.en.ideals).ideal;
    const auto& x = gen::pick(rng, ball);
    const auto& r = gen::pick(rng, ball);
    if (ideal_membership(x, X, *b.m, 2000) != Tri::Yes) continue;
    ++yes;
    expect(ideal_membership(b.m->multiply(x, r), X, *b.m, 2000) == Tri::Yes,
           b.m->name() + ": " + format_ideal(X, *b.m) + " contains " + b.m->format(x) + " but not its multiple");
  }
  expect(yes > 100, "too few members sampled");
}

inline void hull_functional_law(Rng& rng) {
  auto bs = ideal_backends();
  int defined = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto& b = bs[i % bs.size()];
    auto small = b.m->ball(2);
    auto ball = b.m->ball(3);
    HullElement s;
    std::size_t len = 1 + rng() % 3;
    for (std::size_t k = 0; k < len; ++k)
      s.chain.push_back({rng() % 2 ? Move::Kind::Mult : Move::Kind::Divide, gen::pick(rng, small)});
    const auto& x = gen::pick(rng, ball);
    const auto& r = gen::pick(rng, ball);
    auto sx = apply_hull(s, x, *b.m, 2000);
    if (sx.status != Tri::Yes) continue;
    ++defined;
    auto sxr = apply_hull(s, b.m->multiply(x, r), *b.m, 2000);
    expect(sxr.status == Tri::Yes && sxr.value == b.m->multiply(sx.value, r),
           b.m->name() + ": s(xr) != s(x)r for s = " + format_hull(s, *b.m));
  }
  expect(defined > 100, "too few defined samples");
}

inline Comparison bits_compare(const std::vector<bool>& x, const std::vector<bool>& y) {
  bool xy = true, yx = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] && !y[i]) xy = false;
    if (y[i] && !x[i]) yx = false;
  }
  return xy && yx ? Comparison::Equal : xy ? Comparison::XinY : yx ? Comparison::YinX : Comparison::Incomparable;
}

inline GPIdeal as_gp(const RightIdeal& X) {
  using S = RightIdeal::Shape;
  if (X.shape == S::Empty) return detail::gp_empty();
  if (X.shape == S::Full) return gp_full();
  if (X.shape != S::Standard) throw PropertyFailure("graph product ideal outside standard form");
  return X.standard;
}

inline void compare_matches_bits(Rng&) {
  for (const auto& g : gen::ideal_graphs()) {
    GraphProductMonoid m(g, "g");
    EnumerationOptions eo;
    eo.depth = 3;
    auto en = enumerate_ideals(m, eo);
    auto ball = m.ball(6);
    std::vector<GPIdeal> xs;
    std::vector<std::vector<bool>> bits;
    for (const auto& X : en.ideals) {
      xs.push_back(as_gp(X.ideal));
      std::vector<bool> b;
      for (const auto& x : ball) b.push_back(gp_ideal_contains(xs.back(), GraphProductMonoid::decode(x), g));
      bits.push_back(std::move(b));
    }
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < xs.size(); ++j)
        expect(gp_ideal_compare(xs[i], xs[j], g) == bits_compare(bits[i], bits[j]),
               "compare disagrees with bits on " + format_gp_ideal(xs[i], g) + " vs " + format_gp_ideal(xs[j], g) +
                   " over " + g.serialize());
  }
}

inline void standard_form_closure(Rng&) {
  for (const auto& g : gen::ideal_graphs()) {
    GraphProductMonoid m(g, "g");
    EnumerationOptions eo;
    eo.depth = 3;
    for (const auto& X : enumerate_ideals(m, eo).ideals) {
      auto x = as_gp(X.ideal);
      auto text = format_gp_ideal(x, g);
      expect(parse_gp_ideal(text, g) == x, "standard form does not round trip: " + text);
      if (!x.empty) expect(gp_standard_form(x.p, x.factors, g) == x, "standard form not canonical: " + text);
    }
  }
}

/// Vertex ideals built by chains inside the vertex monoid agree with the chain evaluated in the graph product.
inline void vertex_chain_law(Rng& rng) {
  auto graphs = gen::ideal_graphs();
  for (int i = 0; i < 300; ++i) {
    const auto& g = graphs[3 + i % 2];
    GraphProductMonoid m(g, "g");
    VertexId v = static_cast<VertexId>(rng() % g.size());
    const auto& s = g.cone(v);
    HullElement chain;
    NatIdeal X = NatIdeal::full(s);
    std::size_t len = 1 + rng() % 4;
    std::vector<Move> moves;
    for (std::size_t k = 0; k < len; ++k) {
      std::int64_t c = gen::pick(rng, s.generators()) + static_cast<std::int64_t>(rng() % 2);
      if (!s.contains(c)) c = s.generators().front();
      moves.push_back({rng() % 2 ? Move::Kind::Mult : Move::Kind::Divide, detail::vertex_elem(v, c)});
    }
    // the last move acts first
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
      std::int64_t c = GraphProductMonoid::decode(it->operand).syllables.front().value;
      X = it->kind == Move::Kind::Mult ? X.shifted(c) : X.preimage(s, c);
    }
    chain.chain = moves;
    auto Y = as_gp(evaluate_chain(chain, m, 2000));
    auto expected = X.is_empty() ? detail::gp_empty() : detail::vertex_ideal(v, X, g);
    expect(gp_ideal_compare(Y, expected, g) == Comparison::Equal,
           "vertex chain " + format_hull(chain, m) + " gives " + format_gp_ideal(Y, g) + ", vertex arithmetic " +
               format_gp_ideal(expected, g));
  }
}

// ---------------------------------------------------------------------------
// conditions

struct VerdictCase {
  std::string label;
  std::function<CheckVerdict()> run;
};

inline std::vector<VerdictCase> verdict_cases() {
  auto E = [](const char* n) { return catalog_instance(n); };
  auto G = [](const CatalogEntry& e, const char* amb, const char* text) {
    return detail::parse_group(detail::bind_ambient(e, amb), text);
  };
  CheckOptions o;
  std::vector<VerdictCase> c;
  c.push_back({"independence numerical:1", [=] { return check_independence(E("numerical:1"), o); }});
  c.push_back({"independence quad-ring-ax-b", [=] { return check_independence(E("quad-ring-ax-b"), o); }});
  c.push_back({"independence free2", [=] { return check_independence(E("free2"), o); }});
  c.push_back({"toeplitz free2 in metabelian:2", [=] {
                 auto e = E("free2");
                 ToeplitzQuery q;
                 q.p = e.backend->parse("a.b.b.a.b.a.b.a.b");
                 q.q = e.backend->parse("a.b.b.a.b.a.b.b.a");
                 return check_toeplitz(e, "metabelian:2", q, o);
               }});
  c.push_back({"toeplitz free2 in free:2", [=] {
                 auto e = E("free2");
                 ToeplitzQuery q;
                 q.g = G(e, "", "a.b^-1");
                 return check_toeplitz(e, "", q, o);
               }});
  c.push_back({"toeplitz numerical:1", [=] {
                 auto e = E("numerical:1");
                 ToeplitzQuery q;
                 q.g = G(e, "", "a");
                 return check_toeplitz(e, "", q, o);
               }});
  c.push_back({"quasi-lattice nat2", [=] {
                 auto e = E("nat2");
                 return check_quasi_lattice(e, "", G(e, "", "a.b^-1"), o);
               }});
  c.push_back({"left-reversibility free2", [=] { return check_reversibility(E("free2"), "left", o); }});
  c.push_back({"right-reversibility thompson", [=] {
                 CheckOptions r = o;
                 r.L = 4;
                 return check_reversibility(E("thompson"), "right", r);
               }});
  c.push_back({"pure-infinite free2", [=] { return check_pure_infiniteness(E("free2"), o); }});
  c.push_back({"boundary-eq free2", [=] { return check_omega_equals_boundary(E("free2"), o); }});
  c.push_back({"boundary-eq nat", [=] { return check_omega_equals_boundary(E("nat"), o); }});
  c.push_back({"g0 nat2", [=] { return check_g0(E("nat2"), "", o); }});
  c.push_back({"g0 free2", [=] { return check_g0(E("free2"), "", o); }});
  return c;
}

inline void certificates_replay(Rng&) {
  for (const auto& c : verdict_cases()) {
    auto v = c.run();
    expect(v.status != Status::Unknown, c.label + ": unknown verdict");
    expect(replay(v) == v.status, c.label + ": replay gives " + std::string(to_string(replay(v))));
  }
}

inline CatalogEntry graph_catalog_entry(const GraphSpec& g, const std::string& name) {
  return detail::graph_entry(name, "property graph", g, "graph-product:" + name);
}

/// An ideal equal to the union of the enumerated ideals strictly below it, compared on the ball.
inline bool bits_cover_exists(const MonoidBackend& m, std::size_t depth, std::size_t L) {
  EnumerationOptions eo;
  eo.depth = depth;
  auto en = enumerate_ideals(m, eo);
  auto ball = m.ball(L);
  std::vector<std::vector<bool>> bits;
  for (const auto& X : en.ideals) {
    std::vector<bool> b;
    for (auto t : membership_vector(X.ideal, ball, m, 2000)) b.push_back(t == Tri::Yes);
    bits.push_back(std::move(b));
  }
  for (std::size_t i = 0; i < bits.size(); ++i) {
    std::vector<bool> uni(ball.size(), false);
    bool any = false;
    for (std::size_t j = 0; j < bits.size(); ++j) {
      if (bits_compare(bits[j], bits[i]) != Comparison::XinY) continue;
      if (std::find(bits[j].begin(), bits[j].end(), true) == bits[j].end()) continue;
      any = true;
      for (std::size_t k = 0; k < uni.size(); ++k) uni[k] = uni[k] || bits[j][k];
    }
    if (any && uni == bits[i]) return true;
  }
  return false;
}

inline void independence_is_vertexwise(Rng&) {
  NumericalSemigroup nat, s({1}), t({1, 3});
  std::vector<std::pair<std::string, std::vector<std::pair<VertexId, VertexId>>>> shapes{
      {"path", {{0, 1}, {1, 2}}}, {"triangle", {{0, 1}, {1, 2}, {0, 2}}}, {"discrete", {}}};
  std::vector<std::vector<NumericalSemigroup>> cones{{nat, nat, nat}, {s, nat, nat}, {nat, nat, t}};
  CheckOptions o;
  for (const auto& [shape, edges] : shapes)
    for (const auto& c : cones) {
      GraphSpec g({"a", "b", "c"}, edges, c);
      auto e = graph_catalog_entry(g, shape);
      auto verdict = check_independence(e, o);
      bool vertices_ok = true;
      for (VertexId v = 0; v < 3; ++v) {
        auto single = graph_catalog_entry(GraphSpec({"a"}, {}, {c[v]}), "vertex");
        vertices_ok = vertices_ok && check_independence(single, o).status != Status::Violated;
      }
      expect((verdict.status != Status::Violated) == vertices_ok, shape + ": verdict is not the vertex conjunction");
      expect(bits_cover_exists(*e.backend, 3, 6) == !vertices_ok, shape + ": direct enumeration disagrees");
      if (verdict.status == Status::Violated) expect(replay(verdict, e) == Status::Violated, shape + ": certificate");
    }
}

inline void toeplitz_composite(Rng& rng) {
  auto graphs = gen::ideal_graphs();
  CheckOptions o;
  for (int i = 0; i < 60; ++i) {
    const auto& g = graphs[i % graphs.size()];
    auto e = graph_catalog_entry(g, "composite");
    auto w = normal_form(gen::gp_word(rng, g, 4, 3), g);
    GroupWord gw;
    for (const auto& syl : w.syllables)
      for (std::int64_t k = 0; k < (syl.value < 0 ? -syl.value : syl.value); ++k)
        gw.letters.push_back({syl.vertex, static_cast<std::int8_t>(syl.value < 0 ? -1 : 1)});
    ToeplitzQuery q;
    q.g = gw;
    auto v = check_toeplitz(e, "", q, o);
    expect(v.status == Status::Witness, "no Toeplitz witness for " + format_gp(w, g));
    expect(replay(v, e) == Status::Witness, "composite witness does not verify for " + format_gp(w, g));
  }
}

inline void verdicts_monotone(Rng&) {
  struct Case {
    std::string label;
    std::function<CheckVerdict(const CheckOptions&)> run;
  };
  std::vector<Case> cs{
      {"independence numerical:1", [](const CheckOptions& o) { return check_independence(catalog_instance("numerical:1"), o); }},
      {"independence braid:3", [](const CheckOptions& o) { return check_independence(catalog_instance("braid:3"), o); }},
      {"left-reversibility free2", [](const CheckOptions& o) { return check_reversibility(catalog_instance("free2"), "left", o); }},
      {"pure-infinite free2", [](const CheckOptions& o) { return check_pure_infiniteness(catalog_instance("free2"), o); }},
      {"boundary-eq freeprod:3", [](const CheckOptions& o) { return check_omega_equals_boundary(catalog_instance("freeprod:3"), o); }},
      {"boundary-eq nat", [](const CheckOptions& o) { return check_omega_equals_boundary(catalog_instance("nat"), o); }}};
  for (const auto& c : cs) {
    std::optional<Status> seen;
    for (auto [depth, L] : {std::pair<std::size_t, std::size_t>{2, 4}, {2, 6}, {3, 6}}) {
      CheckOptions o;
      o.depth = depth;
      o.L = L;
      o.family_size = 2;
      auto s = c.run(o).status;
      if (s != Status::Violated && s != Status::Witness) continue;
      expect(!seen || *seen == s, c.label + ": verdict flips with the bounds");
      seen = s;
    }
  }
}

// ---------------------------------------------------------------------------
// semilattice

inline std::vector<std::pair<std::string, FiniteSemilattice>> truncations() {
  std::vector<std::pair<std::string, FiniteSemilattice>> out;
  for (auto [n, d] : std::vector<std::pair<const char*, std::size_t>>{
           {"free2", 1}, {"free2", 2}, {"nat", 2}, {"numerical:1", 2}, {"nat2", 2}, {"braid:3", 2}, {"freeprod:3", 1}})
    out.emplace_back(std::string(n) + " depth " + std::to_string(d), truncated_semilattice(*catalog_instance(n).backend, d));
  return out;
}

inline void characters_are_filters(Rng&) {
  for (const auto& [label, E] : truncations()) {
    auto chars = enumerate_characters(E);
    for (const auto& c : chars) {
      bool any = false;
      for (std::size_t x = 0; x < E.size(); ++x) {
        if (!c(x)) continue;
        any = true;
        expect(!(E.zero && *E.zero == x), label + ": character takes 1 at zero");
        for (std::size_t y = 0; y < E.size(); ++y) {
          expect(!E.leq(x, y) || c(y), label + ": not upward closed");
          expect(!c(y) || c(E.meet[x][y]), label + ": not meet closed");
        }
      }
      expect(any, label + ": empty character");
    }
    expect(chars.size() == reference::count_filters_bruteforce(E.meet, E.zero), label + ": count differs from brute force");
  }
}

inline void chimax_on_truncations(Rng&) {
  for (const auto& [label, E] : truncations()) expect(chimax_failures(E).empty(), label + ": chimax=0 fails");
}

inline void boundary_inside_omega(Rng&) {
  for (const auto& [label, E] : truncations()) {
    auto omega = omega_subspace(E);
    for (const auto& c : max_and_boundary(E).boundary)
      expect(std::find(omega.begin(), omega.end(), c) != omega.end(), label + ": boundary character outside Omega");
  }
}

// ---------------------------------------------------------------------------
// ktheory

inline void clique_count_matches(Rng& rng) {
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 1 + rng() % 5;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::pair<std::size_t, std::size_t>> plain;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (rng() % 2) {
          edges.push_back({u, v});
          plain.push_back({u, v});
        }
    GraphSpec g(detail::default_vertex_names(n), edges);
    std::vector<VertexKData> data(n);
    std::vector<std::size_t> sizes(n);
    for (std::size_t v = 0; v < n; ++v) {
      sizes[v] = rng() % 4;
      for (std::size_t k = 0; k < sizes[v]; ++k) {
        data[v].orbit_reps.push_back("X" + std::to_string(k));
        data[v].stabilizers.push_back("G" + std::to_string(k));
      }
    }
    auto d = graph_product_k_index(g, data);
    expect(d.summands.size() == reference::clique_index_bruteforce(n, plain, sizes), "summand count on " + g.serialize());
    expect(graph_product_k_index(g, data).serialize() == d.serialize(), "descriptor not deterministic");
  }
}

// ---------------------------------------------------------------------------
// catalog

inline void quad_norm_multiplicative(Rng& rng) {
  for (int i = 0; i < 1000; ++i) {
    auto r = [&] { return static_cast<std::int64_t>(rng() % 2001) - 1000; };
    QuadElem a{r(), r()}, b{r(), r()};
    expect((a * b).norm() == a.norm() * b.norm(), "norm of " + a.to_string() + " * " + b.to_string());
  }
}

/// Rbar = R u aR u a^2R with a = (1 + i3)/2, scaled by 2: 2Rbar = 2R u (1+i3)R u (-1+i3)R.
inline void rbar_trichotomy(Rng&) {
  QuadIdeal twoR{{{2, 0}}}, alpha{{{1, 1}}}, alpha2{{{-1, 1}}};
  for (auto x : detail::quad_box(30)) {
    bool in_rbar = (x.m - x.n) % 2 == 0;
    bool covered = qr_ideal_membership(x, twoR) || qr_ideal_membership(x, alpha) || qr_ideal_membership(x, alpha2);
    expect(in_rbar == covered, "trichotomy fails at " + x.to_string());
  }
  QuadElem two_alpha{1, 1}, two_alpha2{-1, 1}, two{2, 0};
  expect(!qr_ideal_membership(two_alpha, twoR) && !qr_ideal_membership(two_alpha, alpha2), "2a is not strict");
  expect(!qr_ideal_membership(two_alpha2, twoR) && !qr_ideal_membership(two_alpha2, alpha), "2a^2 is not strict");
  expect(!qr_ideal_membership(two, alpha) && !qr_ideal_membership(two, alpha2), "2 is not strict");
}

/// Re-verifies every annotation that a check can decide at desk scale.
inline void annotations_hold(Rng&) {
  CheckOptions o;
  o.depth = 2;
  for (const char* n : {"nat", "nat2", "free2", "numerical:1", "braid:3", "thompson", "thompson-op", "axb-Z",
                        "quad-ring-ax-b", "bs:1,2"}) {
    auto e = catalog_instance(n);
    for (const auto& a : e.annotations) {
      std::string what = std::string(n) + " [" + a.key + "]";
      if (a.key == "independence") {
        expect(check_independence(e, o).status == Status::Proved, what);
      } else if (a.key == "not-independent") {
        expect(check_independence(e, o).status == Status::Violated, what);
      } else if (a.key == "left-reversible") {
        CheckOptions r = o;
        r.L = 4;
        expect(check_reversibility(e, "left", r).status != Status::Violated, what);
      } else if (a.key == "not-left-reversible") {
        expect(check_reversibility(e, "left", o).status == Status::Violated, what);
      } else if (a.key == "toeplitz" && !e.ambient.empty()) {
        ToeplitzQuery q;
        GroupWord g{{0, 1}};
        if (e.backend->rank() > 1) g = GroupWord{{0, 1}, {1, -1}};
        q.g = g;
        expect(check_toeplitz(e, "", q, o).status == Status::Witness, what);
      } else if (a.key.starts_with("not-toeplitz:")) {
        ToeplitzQuery q;
        auto amb = a.key.substr(13);
        q.p = e.backend->parse(amb == "thompson" ? "a^3" : "a.b.b.a.b.a.b.a.b");
        q.q = e.backend->parse(amb == "thompson" ? "a^4.b" : "a.b.b.a.b.a.b.b.a");
        expect(check_toeplitz(e, amb, q, o).status == Status::Violated, what);
      } else if (a.key == "g0") {
        expect(check_g0(e, "", o).status == Status::Proved, what);
      } else if (a.key == "principal") {
        detail::require_principal_ideals(e, 2);
      } else if (a.key == "k-theory") {
        expect(principal_case_descriptor(e).summands.size() == 1, what);
      } else if (a.key == "complete") {
        expect(e.presentation && e.presentation->complete(), what);
      } else if (a.key == "class-number") {
        expect(principal_case_descriptor(e).summands.size() == 1, what);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// structured output

inline void verdict_json_round_trip(Rng&) {
  for (const auto& c : verdict_cases()) {
    auto v = c.run();
    auto text = v.to_json().dump();
    auto back = CheckVerdict::from_json(Json::parse(text));
    expect(back.to_json().dump() == text, c.label + ": JSON does not round trip");
  }
}

inline void verdicts_deterministic(Rng&) {
  for (const auto& c : verdict_cases())
    expect(c.run().to_json().dump() == c.run().to_json().dump(), c.label + ": output differs between runs");
}

}  // namespace props

inline std::vector<Property> property_suite() {
  using namespace props;
  return {
      {"words", "equal-witness-replays", equal_witness_replays},
      {"words", "free-monoid-literal-equality", free_monoid_literal},
      {"words", "left-divide-sound", left_divide_sound},
      {"words", "relation-steps-preserve-length", relation_steps_preserve_length},
      {"graphprod", "normal-form-idempotent-and-reduced", normal_form_idempotent},
      {"graphprod", "shuffle-invariance", shuffle_invariance},
      {"graphprod", "initial-syllable-of-product", initial_syllable_law},
      {"graphprod", "agrees-with-rewriting", rewriting_agreement},
      {"graphprod", "multiply-associative", multiply_associative},
      {"oracles", "fox-product-rule", fox_product_rule},
      {"oracles", "fox-inverse-rule", fox_inverse_rule},
      {"oracles", "metabelian-refines-free", metabelian_refines_free},
      {"oracles", "thompson-normal-forms", thompson_normal_forms},
      {"oracles", "positivity-closed-under-products", positivity_closed},
      {"ideals", "right-ideal-law", right_ideal_law},
      {"ideals", "hull-functional-law", hull_functional_law},
      {"ideals", "compare-matches-bits", compare_matches_bits},
      {"ideals", "standard-form-closure", standard_form_closure},
      {"ideals", "vertex-chain-law", vertex_chain_law},
      {"conditions", "certificates-replay", certificates_replay},
      {"conditions", "independence-is-vertexwise", independence_is_vertexwise},
      {"conditions", "toeplitz-composite-verifies", toeplitz_composite},
      {"conditions", "verdicts-monotone-in-bounds", verdicts_monotone},
      {"semilattice", "characters-are-filters", characters_are_filters},
      {"semilattice", "chimax-on-truncations", chimax_on_truncations},
      {"semilattice", "boundary-inside-omega", boundary_inside_omega},
      {"ktheory", "clique-count-matches", clique_count_matches},
      {"catalog", "quad-norm-multiplicative", quad_norm_multiplicative},
      {"catalog", "rbar-trichotomy", rbar_trichotomy},
      {"catalog", "annotations-hold", annotations_hold},
      {"cli", "verdict-json-round-trip", verdict_json_round_trip},
      {"cli", "verdicts-deterministic", verdicts_deterministic},
  };
}

inline PropertyOutcome run_property(const Property& p, std::uint64_t seed = kDefaultSeed) {
  PropertyOutcome out{p.module, p.name, false, "", 0};
  std::seed_seq seq(p.name.begin(), p.name.end());
  std::vector<std::uint64_t> mix(1);
  seq.generate(mix.begin(), mix.end());
  Rng rng(seed ^ mix[0]);
  auto start = std::chrono::steady_clock::now();
  try {
    p.run(rng);
    out.passed = true;
  } catch (const std::exception& ex) {
    out.detail = ex.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace sgc::testing

#endif  // SGC_TESTING_PROPERTIES_HPP
