#ifndef SGC_MONOIDS_HPP
#define SGC_MONOIDS_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <deque>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "core.hpp"
#include "graphprod.hpp"
#include "thompson.hpp"
#include "words.hpp"

namespace sgc {

/// Backend-specific encoding of a monoid element; equal elements have equal encodings.
using Elem = std::vector<std::int64_t>;

struct ElemHash {
  std::size_t operator()(const Elem& e) const noexcept {
    std::size_t h = e.size();
    for (auto x : e) hash_combine(h, static_cast<std::size_t>(x));
    return h;
  }
};

/// Result of a division q^-1 x (or x q^-1).
struct Division {
  Tri status = Tri::Unknown;
  Elem quotient;
};

/// A finitely generated left cancellative monoid P inside a group.
class MonoidBackend {
 public:
  virtual ~MonoidBackend() = default;

  virtual std::string name() const = 0;
  virtual std::size_t rank() const = 0;
  virtual std::string generator_name(std::size_t i) const = 0;
  virtual Elem identity() const = 0;
  virtual Elem generator(std::size_t i) const = 0;
  virtual Elem multiply(const Elem& a, const Elem& b) const = 0;
  /// q^-1 x, defined iff x lies in qP.
  virtual Division left_divide(const Elem& q, const Elem& x, long long budget) const = 0;
  /// x q^-1, defined iff x lies in Pq.
  virtual Division right_divide(const Elem& x, const Elem& q, long long budget) const = 0;
  virtual std::string format(const Elem& x) const = 0;
  virtual Elem parse(std::string_view text) const = 0;
  /// Word in the letters of the natural ambient group (letter i = generator i
  /// for presented monoids, vertex i for graph products).
  virtual GroupWord group_word(const Elem& x) const = 0;
  /// Division is two-valued.
  virtual bool exact() const = 0;
  virtual const GraphSpec* graph() const { return nullptr; }

  bool is_identity(const Elem& x) const { return x == identity(); }

  Elem from_word(const MonoidWord& w) const {
    Elem x = identity();
    for (auto l : w.letters) {
      if (l >= rank()) throw Error("generator index out of range");
      x = multiply(x, generator(l));
    }
    return x;
  }

  /// Elements of generator length exactly 0, 1, ..., L; breadth first.
  std::vector<std::vector<Elem>> spheres(std::size_t L) const {
    std::vector<std::vector<Elem>> out{{identity()}};
    std::unordered_set<Elem, ElemHash> seen{identity()};
    for (std::size_t len = 0; len < L; ++len) {
      std::vector<Elem> next;
      for (const auto& x : out.back())
        for (std::size_t g = 0; g < rank(); ++g) {
          Elem y = multiply(x, generator(g));
          if (seen.insert(y).second) next.push_back(std::move(y));
        }
      out.push_back(std::move(next));
    }
    return out;
  }

  /// Elements that are products of at most L generators, breadth first.
  std::vector<Elem> ball(std::size_t L) const {
    std::vector<Elem> out;
    for (auto& s : spheres(L)) out.insert(out.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
    return out;
  }
};

/// Graph product of numerical semigroups inside the graph product of copies of Z.
/// Covers N, N^k, free products and numerical semigroups (one vertex).
class GraphProductMonoid : public MonoidBackend {
 public:
  explicit GraphProductMonoid(GraphSpec g, std::string label = "") : graph_(std::move(g)), label_(std::move(label)) {
    for (VertexId v = 0; v < graph_.size(); ++v)
      for (auto c : graph_.cone(v).generators()) gens_.push_back({v, c});
  }

  std::string name() const override { return label_.empty() ? "graph-product" : label_; }
  std::size_t rank() const override { return gens_.size(); }
  std::string generator_name(std::size_t i) const override { return format(generator(i)); }
  Elem identity() const override { return {}; }
  Elem generator(std::size_t i) const override { return encode(GPWord{gens_.at(i)}); }
  Elem multiply(const Elem& a, const Elem& b) const override {
    return encode(gp_multiply(decode(a), decode(b), graph_));
  }
  Division left_divide(const Elem& q, const Elem& x, long long) const override {
    auto r = gp_multiply(gp_inverse(decode(q), graph_), decode(x), graph_);
    if (!gp_is_positive(r, graph_)) return {Tri::No, {}};
    return {Tri::Yes, encode(r)};
  }
  Division right_divide(const Elem& x, const Elem& q, long long) const override {
    auto r = gp_multiply(decode(x), gp_inverse(decode(q), graph_), graph_);
    if (!gp_is_positive(r, graph_)) return {Tri::No, {}};
    return {Tri::Yes, encode(r)};
  }
  std::string format(const Elem& x) const override {
    auto w = decode(x);
    if (additive()) return w.empty() ? "0" : std::to_string(w.syllables[0].value);
    return format_gp(w, graph_);
  }
  Elem parse(std::string_view text) const override {
    text = trim(text);
    GPWord w;
    if (additive()) {
      std::int64_t n = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
      if (ec != std::errc() || ptr != text.data() + text.size()) throw Error("malformed element '" + std::string(text) + "'");
      if (n != 0) w.syllables.push_back({0, n});
    } else {
      w = normal_form(parse_gp(text, graph_), graph_);
    }
    if (!gp_is_positive(w, graph_)) throw Error("'" + std::string(text) + "' is not in the monoid");
    return encode(w);
  }
  GroupWord group_word(const Elem& x) const override {
    GroupWord r;
    for (const auto& s : decode(x).syllables)
      for (std::int64_t k = 0; k < (s.value < 0 ? -s.value : s.value); ++k)
        r.letters.push_back({s.vertex, static_cast<std::int8_t>(s.value < 0 ? -1 : 1)});
    return r;
  }
  bool exact() const override { return true; }
  const GraphSpec* graph() const override { return &graph_; }

  /// One-vertex graph products print elements as integers.
  bool additive() const { return graph_.size() == 1; }

  static Elem encode(const GPWord& w) {
    Elem e;
    e.reserve(2 * w.size());
    for (const auto& s : w.syllables) {
      e.push_back(s.vertex);
      e.push_back(s.value);
    }
    return e;
  }
  static GPWord decode(const Elem& e) {
    if (e.size() % 2 != 0) throw InvariantError("malformed graph product element");
    GPWord w;
    for (std::size_t i = 0; i < e.size(); i += 2) w.syllables.push_back({static_cast<VertexId>(e[i]), e[i + 1]});
    return w;
  }

 private:
  GraphSpec graph_;
  std::string label_;
  std::vector<Syllable> gens_;
};

/// <S | R>^+ with elements stored as the shortlex least word of their class.
class PresentedMonoid : public MonoidBackend {
 public:
  PresentedMonoid(Presentation pres, std::string label, long long budget = 20000, std::size_t class_limit = 20000)
      : pres_(std::move(pres)), op_(pres_.opposite()), label_(std::move(label)), budget_(budget), limit_(class_limit) {}

  std::string name() const override { return label_; }
  std::size_t rank() const override { return pres_.rank(); }
  std::string generator_name(std::size_t i) const override { return pres_.name(static_cast<GeneratorId>(i)); }
  Elem identity() const override { return {}; }
  Elem generator(std::size_t i) const override { return {static_cast<std::int64_t>(i)}; }
  Elem multiply(const Elem& a, const Elem& b) const override {
    Elem w = a;
    w.insert(w.end(), b.begin(), b.end());
    return canonical(w);
  }
  Division left_divide(const Elem& q, const Elem& x, long long budget) const override {
    return divide(pres_, word(q), word(x), budget, false);
  }
  Division right_divide(const Elem& x, const Elem& q, long long budget) const override {
    return divide(op_, word(q).reversed(), word(x).reversed(), budget, true);
  }
  std::string format(const Elem& x) const override { return pres_.format(word(x)); }
  Elem parse(std::string_view text) const override { return canonical(elem(pres_.parse_word(text))); }
  GroupWord group_word(const Elem& x) const override { return GroupWord(word(x)); }
  bool exact() const override { return pres_.complete(); }

  const Presentation& presentation() const noexcept { return pres_; }
  long long budget() const noexcept { return budget_; }

  static MonoidWord word(const Elem& e) {
    MonoidWord w;
    for (auto x : e) w.letters.push_back(static_cast<GeneratorId>(x));
    return w;
  }
  static Elem elem(const MonoidWord& w) { return Elem(w.letters.begin(), w.letters.end()); }

 private:
  Elem canonical(const Elem& e) const {
    if (pres_.relations().empty()) return e;
    try {
      return elem(congruence_class(word(e), pres_, limit_).front());
    } catch (const BudgetError&) {
      throw BudgetError("congruence class of " + format(e) + " exceeds " + std::to_string(limit_) + " words");
    }
  }
  Division divide(const Presentation& p, const MonoidWord& q, const MonoidWord& x, long long budget, bool flip) const {
    budget = budget > 0 ? budget : budget_;
    if (p.complete()) {
      // complete: q <= x iff q^-1 x reverses to a positive word
      auto rev = reverse_word(GroupWord(q).inverse() * GroupWord(x), p, budget);
      if (rev.kind == Reversal::Kind::Stuck) return {Tri::No, {}};
      if (rev.kind == Reversal::Kind::Fraction) {
        if (!rev.denominator.empty()) return {Tri::No, {}};
        return {Tri::Yes, canonical(elem(flip ? rev.numerator.reversed() : rev.numerator))};
      }
    }
    auto r = sgc::left_divide(q, x, p, budget);
    if (r.found()) return {Tri::Yes, canonical(elem(flip ? r.quotient.reversed() : r.quotient))};
    if (r.exhausted_search && p.complete()) return {Tri::No, {}};
    return {Tri::Unknown, {}};
  }

  Presentation pres_;
  Presentation op_;
  std::string label_;
  long long budget_;
  std::size_t limit_;
};

/// The Thompson monoid F^+ via normal forms in F; balls use x0 .. x_{n-1}.
class ThompsonMonoid : public MonoidBackend {
 public:
  explicit ThompsonMonoid(std::size_t ball_generators = 5) : n_(ball_generators) {}

  std::string name() const override { return "thompson"; }
  std::size_t rank() const override { return n_; }
  std::string generator_name(std::size_t i) const override { return "x" + std::to_string(i); }
  Elem identity() const override { return {}; }
  Elem generator(std::size_t i) const override { return {static_cast<std::int64_t>(i)}; }
  Elem multiply(const Elem& a, const Elem& b) const override { return positive_part(nf(to_word(a) * to_word(b))); }
  Division left_divide(const Elem& q, const Elem& x, long long) const override {
    auto f = nf(to_word(q).inverse() * to_word(x));
    if (!f.is_positive()) return {Tri::No, {}};
    return {Tri::Yes, positive_part(f)};
  }
  Division right_divide(const Elem& x, const Elem& q, long long) const override {
    auto f = nf(to_word(x) * to_word(q).inverse());
    if (!f.is_positive()) return {Tri::No, {}};
    return {Tri::Yes, positive_part(f)};
  }
  std::string format(const Elem& x) const override {
    if (x.empty()) return "e";
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < x.size();) {
      std::size_t j = i;
      while (j < x.size() && x[j] == x[i]) ++j;
      parts.push_back("x" + std::to_string(x[i]) + (j - i > 1 ? "^" + std::to_string(j - i) : ""));
      i = j;
    }
    return join(parts, ".");
  }
  Elem parse(std::string_view text) const override {
    GroupWord w;
    for (const auto& tok : detail::word_tokens(text)) {
      if (tok == "e") continue;
      auto sp = detail::split_power(tok);
      if (!sp || sp->first.size() < 2 || sp->first[0] != 'x') throw Error("malformed Thompson letter '" + tok + "'");
      std::uint32_t i = 0;
      auto digits = sp->first.substr(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), i);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) throw Error("malformed Thompson letter '" + tok + "'");
      for (long k = 0; k < (sp->second < 0 ? -sp->second : sp->second); ++k)
        w.letters.push_back({i, static_cast<std::int8_t>(sp->second < 0 ? -1 : 1)});
    }
    auto f = nf(w);
    if (!f.is_positive()) throw Error("'" + std::string(text) + "' is not in the Thompson monoid");
    return positive_part(f);
  }
  GroupWord group_word(const Elem& x) const override { return to_word(x); }
  bool exact() const override { return true; }

 private:
  static ThompsonNF nf(const GroupWord& w) { return thompson_normal_form(w); }
  static GroupWord to_word(const Elem& x) {
    GroupWord w;
    for (auto i : x) w.letters.push_back({static_cast<GeneratorId>(i), 1});
    return w;
  }
  static Elem positive_part(const ThompsonNF& f) { return Elem(f.positive.begin(), f.positive.end()); }

  std::size_t n_;
};

}  // namespace sgc

#endif  // SGC_MONOIDS_HPP
