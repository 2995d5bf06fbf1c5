#ifndef SGC_IDEALS_HPP
#define SGC_IDEALS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "core.hpp"
#include "graphprod.hpp"
#include "monoids.hpp"
#include "numerical.hpp"

namespace sgc {

// ---------------------------------------------------------------------------
// Left inverse hull elements

struct Move {
  enum class Kind { Mult, Divide } kind = Kind::Mult;
  Elem operand;
  bool operator==(const Move&) const = default;
};

/// q_n^-1 p_n ... q_1^-1 p_1 stored in written order; the last move acts first.
struct HullElement {
  std::vector<Move> chain;

  static HullElement mult(Elem p) { return {{Move{Move::Kind::Mult, std::move(p)}}}; }
  static HullElement divide(Elem q) { return {{Move{Move::Kind::Divide, std::move(q)}}}; }

  bool empty() const noexcept { return chain.empty(); }
  std::size_t size() const noexcept { return chain.size(); }

  HullElement inverse() const {
    HullElement r;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
      r.chain.push_back({it->kind == Move::Kind::Mult ? Move::Kind::Divide : Move::Kind::Mult, it->operand});
    return r;
  }
  /// this o other
  HullElement compose(const HullElement& other) const {
    HullElement r = *this;
    r.chain.insert(r.chain.end(), other.chain.begin(), other.chain.end());
    return r;
  }
  bool all_mult() const {
    return std::all_of(chain.begin(), chain.end(), [](const Move& m) { return m.kind == Move::Kind::Mult; });
  }
  bool operator==(const HullElement&) const = default;
};

inline std::string format_hull(const HullElement& s, const MonoidBackend& m) {
  if (s.empty()) return "id";
  std::vector<std::string> parts;
  for (const auto& mv : s.chain) parts.push_back((mv.kind == Move::Kind::Mult ? "mul:" : "div:") + m.format(mv.operand));
  return join(parts, " ");
}

inline HullElement parse_hull(std::string_view text, const MonoidBackend& m) {
  HullElement s;
  for (const auto& tok : split_ws(text)) {
    if (tok == "id") continue;
    if (tok.starts_with("mul:"))
      s.chain.push_back({Move::Kind::Mult, m.parse(tok.substr(4))});
    else if (tok.starts_with("div:"))
      s.chain.push_back({Move::Kind::Divide, m.parse(tok.substr(4))});
    else
      throw Error("malformed hull move '" + tok + "'");
  }
  return s;
}

/// sigma(s): the group element the partial bijection is a restriction of.
inline GroupWord hull_sigma(const HullElement& s, const MonoidBackend& m) {
  GroupWord g;
  for (const auto& mv : s.chain) {
    auto w = m.group_word(mv.operand);
    g = g * (mv.kind == Move::Kind::Mult ? w : w.inverse());
  }
  return free_reduce(g);
}

struct HullResult {
  Tri status = Tri::Unknown;  ///< Yes: defined, No: undefined
  Elem value;
};

inline HullResult apply_hull(const HullElement& s, const Elem& x, const MonoidBackend& m, long long budget) {
  if (budget <= 0) throw Error("budget must be positive");
  Elem cur = x;
  for (auto it = s.chain.rbegin(); it != s.chain.rend(); ++it) {
    if (it->kind == Move::Kind::Mult) {
      cur = m.multiply(it->operand, cur);
      continue;
    }
    auto d = m.left_divide(it->operand, cur, budget);
    if (d.status != Tri::Yes) return {d.status, {}};
    cur = std::move(d.quotient);
  }
  return {Tri::Yes, std::move(cur)};
}

// ---------------------------------------------------------------------------
// Graph product ideals p (prod_{w in W} X_w) P

struct GPIdeal {
  bool empty = false;
  GPWord p;
  std::map<VertexId, NatIdeal> factors;

  bool is_full() const { return !empty && p.empty() && factors.empty(); }
  bool operator==(const GPIdeal&) const = default;
};

namespace detail {

inline bool is_clique(const std::map<VertexId, NatIdeal>& f, const GraphSpec& g) {
  for (auto a = f.begin(); a != f.end(); ++a)
    for (auto b = std::next(a); b != f.end(); ++b)
      if (!g.adjacent(a->first, b->first)) return false;
  return true;
}

inline NatIdeal shift_into(const NatIdeal& x, std::int64_t c, const NumericalSemigroup& s) {
  return NatIdeal::from_predicate([&](std::int64_t n) { return s.contains(n) && x.contains(n - c); },
                                  x.threshold() + c + s.conductor());
}

inline GPIdeal gp_empty() {
  GPIdeal x;
  x.empty = true;
  return x;
}

}  // namespace detail

inline GPIdeal gp_full() { return {}; }

/// Standard form: proper nonempty factors on a clique W, and every final
/// vertex v of p has some w in W \ {v} not adjacent to v.
inline GPIdeal gp_standard_form(GPWord p, std::map<VertexId, NatIdeal> factors, const GraphSpec& g) {
  p = normal_form(p, g);
  if (!gp_is_positive(p, g)) throw Error("ideal prefix " + format_gp(p, g) + " is not in the monoid");
  for (auto it = factors.begin(); it != factors.end();) {
    if (it->second.is_empty()) return detail::gp_empty();
    if (it->second.is_full(g.cone(it->first)))
      it = factors.erase(it);
    else
      ++it;
  }
  if (!detail::is_clique(factors, g)) return detail::gp_empty();
  for (bool peeled = true; peeled && !p.empty();) {
    peeled = false;
    auto d = initial_final_data(p, g);
    for (auto v : d.final_vertices) {
      bool blocked = false;
      for (const auto& [w, xw] : factors) blocked = blocked || (w != v && !g.adjacent(v, w));
      if (blocked) continue;
      std::int64_t c = d.final_value(v);
      auto base = factors.count(v) ? factors.at(v) : NatIdeal::full(g.cone(v));
      factors[v] = detail::shift_into(base, c, g.cone(v));
      p = drop_syllable(p, v, false, g);
      peeled = true;
      break;
    }
  }
  GPIdeal r;
  r.p = std::move(p);
  r.factors = std::move(factors);
  return r;
}

inline bool gp_ideal_contains(const GPIdeal& X, const GPWord& x, const GraphSpec& g) {
  if (X.empty) return false;
  auto r = gp_multiply(gp_inverse(X.p, g), x, g);
  if (!gp_is_positive(r, g)) return false;
  if (X.factors.empty()) return true;
  auto d = initial_final_data(r, g);
  for (const auto& [w, xw] : X.factors)
    if (!xw.contains(d.initial_value(w))) return false;
  return true;
}

/// qX
inline GPIdeal gp_ideal_image(const GPWord& q, const GPIdeal& X, const GraphSpec& g) {
  if (X.empty) return X;
  return gp_standard_form(gp_multiply(q, X.p, g), X.factors, g);
}

/// s^-1 X for a positive syllable s.
inline GPIdeal gp_ideal_preimage_syllable(const Syllable& s, const GPIdeal& X, const GraphSpec& g) {
  if (X.empty) return X;
  if (X.p.empty()) {
    for (const auto& [w, xw] : X.factors)
      if (w != s.vertex && !g.adjacent(w, s.vertex)) return detail::gp_empty();
    auto f = X.factors;
    if (auto it = f.find(s.vertex); it != f.end()) it->second = it->second.preimage(g.cone(s.vertex), s.value);
    return gp_standard_form({}, std::move(f), g);
  }
  auto d = initial_final_data(X.p, g);
  if (d.is_initial(s.vertex)) {
    auto r = gp_multiply(GPWord{{s.vertex, -s.value}}, X.p, g);
    if (!gp_is_positive(r, g)) return detail::gp_empty();
    return gp_standard_form(r, X.factors, g);
  }
  bool commutes = std::all_of(X.p.syllables.begin(), X.p.syllables.end(), [&](const Syllable& t) {
    return t.vertex != s.vertex && g.adjacent(t.vertex, s.vertex);
  });
  if (!commutes) return detail::gp_empty();
  GPIdeal base;
  base.factors = X.factors;
  return gp_ideal_image(X.p, gp_ideal_preimage_syllable(s, base, g), g);
}

/// q^-1 X
inline GPIdeal gp_ideal_preimage(const GPWord& q, const GPIdeal& X, const GraphSpec& g) {
  GPIdeal r = X;
  for (const auto& s : normal_form(q, g).syllables) r = gp_ideal_preimage_syllable(s, r, g);
  return r;
}

inline GPIdeal gp_ideal_intersect(const GPIdeal& X, const GPIdeal& Y, const GraphSpec& g) {
  if (X.empty || Y.empty) return detail::gp_empty();
  if (!X.p.empty()) {
    GPIdeal base;
    base.factors = X.factors;
    return gp_ideal_image(X.p, gp_ideal_intersect(base, gp_ideal_preimage(X.p, Y, g), g), g);
  }
  if (!Y.p.empty()) return gp_ideal_intersect(Y, X, g);
  auto f = X.factors;
  for (const auto& [w, yw] : Y.factors) {
    auto it = f.find(w);
    if (it == f.end())
      f.emplace(w, yw);
    else
      it->second = it->second.intersect(yw);
  }
  return gp_standard_form({}, std::move(f), g);
}

/// Xs is contained in X (both in standard form). A nontrivial prefix is moved
/// across as a preimage: p A is inside X iff A is inside p^-1 X.
inline bool gp_ideal_subset(const GPIdeal& Xs, const GPIdeal& X, const GraphSpec& g) {
  if (Xs.empty || X.is_full()) return true;
  if (X.empty || Xs.is_full()) return false;
  if (!Xs.p.empty()) {
    GPIdeal base;
    base.factors = Xs.factors;
    return gp_ideal_subset(base, gp_ideal_preimage(Xs.p, X, g), g);
  }
  if (!X.p.empty()) return false;
  for (const auto& [w, xw] : X.factors) {
    auto it = Xs.factors.find(w);
    if (it == Xs.factors.end() || !it->second.subset_of(xw)) return false;
  }
  return true;
}

enum class Comparison { Equal, XinY, YinX, Incomparable };

inline std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::Equal:
      return "equal";
    case Comparison::XinY:
      return "x-in-y";
    case Comparison::YinX:
      return "y-in-x";
    default:
      return "incomparable";
  }
}

inline Comparison gp_ideal_compare(const GPIdeal& X, const GPIdeal& Y, const GraphSpec& g) {
  bool xy = gp_ideal_subset(X, Y, g), yx = gp_ideal_subset(Y, X, g);
  if (xy && yx) return Comparison::Equal;
  if (xy) return Comparison::XinY;
  if (yx) return Comparison::YinX;
  return Comparison::Incomparable;
}

/// Single generator q with X = qP, if any.
inline std::optional<GPWord> gp_principal_generator(const GPIdeal& X, const GraphSpec& g) {
  if (X.empty) return std::nullopt;
  GPWord q = X.p;
  for (const auto& [w, xw] : X.factors) {
    auto k = xw.principal_generator(g.cone(w));
    if (!k) return std::nullopt;
    q = gp_multiply(q, GPWord{{w, *k}}, g);
  }
  return q;
}

inline std::string format_gp_ideal(const GPIdeal& X, const GraphSpec& g) {
  if (X.empty) return "empty";
  if (g.size() == 1) {
    if (!X.p.empty()) throw InvariantError("one-vertex ideal with nontrivial prefix");
    return X.factors.empty() ? "P" : X.factors.begin()->second.format(g.cone(0));
  }
  if (X.is_full()) return "P";
  if (auto q = gp_principal_generator(X, g)) return format_gp(*q, g) + "*P";
  std::vector<std::string> parts;
  for (const auto& [w, xw] : X.factors) parts.push_back(g.name(w) + ":" + xw.format(g.cone(w)));
  return "std[" + format_gp(X.p, g) + "; " + join(parts, ", ") + "]";
}

inline GPIdeal parse_gp_ideal(std::string_view text, const GraphSpec& g) {
  text = trim(text);
  if (text == "empty") return detail::gp_empty();
  if (text == "P") return gp_full();
  if (g.size() == 1) return gp_standard_form({}, {{0, NatIdeal::parse(g.cone(0), text)}}, g);
  if (text.size() > 2 && text.substr(text.size() - 2) == "*P") {
    auto q = normal_form(parse_gp(text.substr(0, text.size() - 2), g), g);
    if (!gp_is_positive(q, g)) throw Error("principal generator is not in the monoid");
    return gp_ideal_image(q, gp_full(), g);
  }
  if (!text.starts_with("std[") || !text.ends_with("]")) throw Error("malformed ideal '" + std::string(text) + "'");
  auto body = text.substr(4, text.size() - 5);
  auto semi = body.find(';');
  if (semi == std::string_view::npos) throw Error("malformed ideal '" + std::string(text) + "'");
  GPWord p = parse_gp(body.substr(0, semi), g);
  std::map<VertexId, NatIdeal> f;
  auto rest = body.substr(semi + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    auto colon = rest.find(':', pos);
    if (colon == std::string_view::npos) break;
    auto v = g.id(trim(rest.substr(pos, colon - pos)));
    // the factor ends at the next ", " outside braces
    std::size_t end = colon + 1;
    int depth = 0;
    while (end < rest.size() && !(depth == 0 && rest[end] == ',' && end + 1 < rest.size() && rest[end + 1] == ' ')) {
      if (rest[end] == '{') ++depth;
      if (rest[end] == '}') --depth;
      ++end;
    }
    if (!f.emplace(v, NatIdeal::parse(g.cone(v), rest.substr(colon + 1, end - colon - 1))).second)
      throw Error("repeated vertex in ideal '" + std::string(text) + "'");
    pos = end + 2;
  }
  return gp_standard_form(p, std::move(f), g);
}

// ---------------------------------------------------------------------------
// Constructible right ideals

struct RightIdeal {
  enum class Shape { Empty, Full, Principal, Hull, Standard } shape = Shape::Full;
  Elem generator;      ///< Principal
  HullElement hull;    ///< Hull: the ideal is hull(P)
  GPIdeal standard;    ///< Standard

  static RightIdeal empty() { return {Shape::Empty, {}, {}, {}}; }
  static RightIdeal full() { return {}; }
  static RightIdeal principal(Elem p) {
    if (p.empty()) return full();
    return {Shape::Principal, std::move(p), {}, {}};
  }
  static RightIdeal of_hull(HullElement s) { return {Shape::Hull, {}, std::move(s), {}}; }
  static RightIdeal of_standard(GPIdeal x) {
    if (x.empty) return empty();
    if (x.is_full()) return full();
    return {Shape::Standard, {}, {}, std::move(x)};
  }
  bool operator==(const RightIdeal&) const = default;
};

/// Chain whose image of P is X (Empty has none).
inline std::optional<HullElement> as_hull(const RightIdeal& X) {
  switch (X.shape) {
    case RightIdeal::Shape::Full:
      return HullElement{};
    case RightIdeal::Shape::Principal:
      return HullElement::mult(X.generator);
    case RightIdeal::Shape::Hull:
      return X.hull;
    default:
      return std::nullopt;
  }
}

inline Tri ideal_membership(const Elem& x, const RightIdeal& X, const MonoidBackend& m, long long budget) {
  switch (X.shape) {
    case RightIdeal::Shape::Empty:
      return Tri::No;
    case RightIdeal::Shape::Full:
      return Tri::Yes;
    case RightIdeal::Shape::Principal:
      return m.left_divide(X.generator, x, budget).status;
    case RightIdeal::Shape::Hull:
      return apply_hull(X.hull.inverse(), x, m, budget).status;
    case RightIdeal::Shape::Standard:
      if (!m.graph()) throw InvariantError("standard ideal on a non graph product backend");
      return tri_of(gp_ideal_contains(X.standard, GraphProductMonoid::decode(x), *m.graph()));
  }
  return Tri::Unknown;
}

inline std::string format_ideal(const RightIdeal& X, const MonoidBackend& m) {
  switch (X.shape) {
    case RightIdeal::Shape::Empty:
      return "empty";
    case RightIdeal::Shape::Full:
      return "P";
    case RightIdeal::Shape::Principal:
      return m.format(X.generator) + "*P";
    case RightIdeal::Shape::Hull:
      return "hull[" + format_hull(X.hull, m) + "]";
    case RightIdeal::Shape::Standard:
      return format_gp_ideal(X.standard, *m.graph());
  }
  return "";
}

inline RightIdeal parse_ideal(std::string_view text, const MonoidBackend& m) {
  text = trim(text);
  if (m.graph()) return RightIdeal::of_standard(parse_gp_ideal(text, *m.graph()));
  if (text == "empty") return RightIdeal::empty();
  if (text == "P") return RightIdeal::full();
  if (text.starts_with("hull[") && text.ends_with("]")) return RightIdeal::of_hull(parse_hull(text.substr(5, text.size() - 6), m));
  if (text.size() > 2 && text.ends_with("*P")) return RightIdeal::principal(m.parse(text.substr(0, text.size() - 2)));
  throw Error("malformed ideal '" + std::string(text) + "'");
}

/// Element-wise images under the hull generators.
inline RightIdeal ideal_image(const Elem& q, const RightIdeal& X, const MonoidBackend& m) {
  switch (X.shape) {
    case RightIdeal::Shape::Empty:
      return X;
    case RightIdeal::Shape::Full:
      return m.graph() ? RightIdeal::of_standard(gp_ideal_image(GraphProductMonoid::decode(q), gp_full(), *m.graph()))
                       : RightIdeal::principal(q);
    case RightIdeal::Shape::Principal:
      return RightIdeal::principal(m.multiply(q, X.generator));
    case RightIdeal::Shape::Hull:
      return RightIdeal::of_hull(HullElement::mult(q).compose(X.hull));
    case RightIdeal::Shape::Standard:
      return RightIdeal::of_standard(gp_ideal_image(GraphProductMonoid::decode(q), X.standard, *m.graph()));
  }
  return X;
}

inline RightIdeal ideal_preimage(const Elem& q, const RightIdeal& X, const MonoidBackend& m, long long budget) {
  switch (X.shape) {
    case RightIdeal::Shape::Empty:
    case RightIdeal::Shape::Full:
      return X;
    case RightIdeal::Shape::Principal: {
      auto d = m.left_divide(q, X.generator, budget);
      if (d.status == Tri::Yes) return RightIdeal::principal(d.quotient);
      return RightIdeal::of_hull(HullElement::divide(q).compose(HullElement::mult(X.generator)));
    }
    case RightIdeal::Shape::Hull: {
      auto s = X.hull;
      if (!s.empty() && s.chain.front().kind == Move::Kind::Mult && s.chain.front().operand == q) {
        s.chain.erase(s.chain.begin());
        if (s.empty()) return RightIdeal::full();
        if (s.all_mult()) {
          Elem p = m.identity();
          for (const auto& mv : s.chain) p = m.multiply(p, mv.operand);
          return RightIdeal::principal(p);
        }
        return RightIdeal::of_hull(std::move(s));
      }
      return RightIdeal::of_hull(HullElement::divide(q).compose(s));
    }
    case RightIdeal::Shape::Standard:
      return RightIdeal::of_standard(gp_ideal_preimage(GraphProductMonoid::decode(q), X.standard, *m.graph()));
  }
  return X;
}

/// X cap Y; symbolic for hull ideals: s s^-1 t (P) = s(P) cap t(P).
inline RightIdeal ideal_intersect(const RightIdeal& X, const RightIdeal& Y, const MonoidBackend& m) {
  using S = RightIdeal::Shape;
  if (X.shape == S::Empty || Y.shape == S::Empty) return RightIdeal::empty();
  if (X.shape == S::Full) return Y;
  if (Y.shape == S::Full) return X;
  if (X.shape == S::Standard && Y.shape == S::Standard)
    return RightIdeal::of_standard(gp_ideal_intersect(X.standard, Y.standard, *m.graph()));
  if (X == Y) return X;
  auto s = *as_hull(X), t = *as_hull(Y);
  return RightIdeal::of_hull(s.compose(s.inverse()).compose(t));
}

/// Evaluates a chain on P with exact ideal arithmetic (graph products) or symbolically.
inline RightIdeal evaluate_chain(const HullElement& s, const MonoidBackend& m, long long budget) {
  RightIdeal X = RightIdeal::full();
  for (auto it = s.chain.rbegin(); it != s.chain.rend(); ++it)
    X = it->kind == Move::Kind::Mult ? ideal_image(it->operand, X, m) : ideal_preimage(it->operand, X, m, budget);
  return X;
}

/// Membership pattern of X on a list of sample elements.
inline std::vector<Tri> membership_vector(const RightIdeal& X, const std::vector<Elem>& sample, const MonoidBackend& m,
                                          long long budget) {
  std::vector<Tri> out;
  out.reserve(sample.size());
  for (const auto& x : sample) out.push_back(ideal_membership(x, X, m, budget));
  return out;
}

// ---------------------------------------------------------------------------
// Bounded enumeration of J_P

struct EnumeratedIdeal {
  RightIdeal ideal;
  HullElement chain;  ///< ideal = chain(P)
  std::string id;
  std::vector<Tri> bits;  ///< membership on the sample ball (generic backends)
  std::optional<Elem> principal_up_to_L;
};

struct UnresolvedPair {
  std::size_t kept;  ///< index of the enumerated ideal with the same bits
  HullElement chain;
};

struct Enumeration {
  std::vector<EnumeratedIdeal> ideals;
  std::vector<UnresolvedPair> unresolved;
  std::vector<Elem> sample;  ///< the ball used for bit-vectors (generic backends)
  std::size_t depth = 0;
  std::size_t sample_length = 0;
  bool exact = false;
  bool partial = false;

  std::optional<std::size_t> find(const std::string& id) const {
    for (std::size_t i = 0; i < ideals.size(); ++i)
      if (ideals[i].id == id) return i;
    return std::nullopt;
  }
};

struct EnumerationOptions {
  std::size_t depth = 3;
  std::size_t sample_length = 0;  ///< 0: 2 depth + 2
  long long budget = 2000;
  std::size_t max_ideals = 5000;
};

inline Enumeration enumerate_ideals(const MonoidBackend& m, const EnumerationOptions& opt) {
  if (opt.depth < 1) throw Error("depth must be at least 1");
  Enumeration out;
  out.depth = opt.depth;
  out.exact = m.graph() != nullptr;
  out.sample_length = opt.sample_length ? opt.sample_length : 2 * opt.depth + 2;
  if (!out.exact) out.sample = m.ball(out.sample_length);

  std::unordered_map<std::string, std::size_t> by_id;
  std::map<std::vector<Tri>, std::size_t> by_bits;
  std::map<std::vector<Tri>, Elem> principal_bits;
  if (!out.exact)
    for (const auto& p : out.sample)
      principal_bits.emplace(membership_vector(RightIdeal::principal(p), out.sample, m, opt.budget), p);

  auto admit = [&](RightIdeal X, HullElement chain) -> bool {
    std::string id = format_ideal(X, m);
    if (by_id.count(id)) return false;
    EnumeratedIdeal e{std::move(X), std::move(chain), id, {}, std::nullopt};
    if (!out.exact) {
      e.bits = membership_vector(e.ideal, out.sample, m, opt.budget);
      if (auto it = by_bits.find(e.bits); it != by_bits.end()) {
        out.unresolved.push_back({it->second, e.chain});
        return false;
      }
      if (auto it = principal_bits.find(e.bits); it != principal_bits.end()) e.principal_up_to_L = it->second;
      by_bits.emplace(e.bits, out.ideals.size());
    }
    by_id.emplace(id, out.ideals.size());
    out.ideals.push_back(std::move(e));
    return true;
  };

  admit(RightIdeal::full(), {});
  std::vector<std::size_t> frontier{0};
  for (std::size_t level = 0; level < opt.depth && !frontier.empty(); ++level) {
    std::vector<std::size_t> next;
    for (auto i : frontier) {
      if (out.ideals[i].ideal.shape == RightIdeal::Shape::Empty) continue;
      for (std::size_t gi = 0; gi < m.rank(); ++gi) {
        auto gen = m.generator(gi);
        for (auto kind : {Move::Kind::Mult, Move::Kind::Divide}) {
          if (out.ideals.size() >= opt.max_ideals) {
            out.partial = true;
            break;
          }
          const auto& src = out.ideals[i];
          RightIdeal X = kind == Move::Kind::Mult ? ideal_image(gen, src.ideal, m)
                                                   : ideal_preimage(gen, src.ideal, m, opt.budget);
          HullElement chain{{Move{kind, gen}}};
          chain = chain.compose(src.chain);
          if (admit(std::move(X), std::move(chain))) next.push_back(out.ideals.size() - 1);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace sgc

#endif  // SGC_IDEALS_HPP
