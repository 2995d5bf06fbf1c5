#ifndef SGC_ORACLES_HPP
#define SGC_ORACLES_HPP

#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "graphprod.hpp"
#include "metabelian.hpp"
#include "thompson.hpp"
#include "words.hpp"

namespace sgc {

/// Decision interface for an ambient group G with a distinguished submonoid P.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;

  virtual std::string name() const = 0;
  virtual std::string letter_name(GeneratorId g) const = 0;
  virtual std::optional<GeneratorId> letter_id(std::string_view name) const = 0;

  /// A string that is equal for two words iff they are equal in G.
  virtual std::string normal_form(const GroupWord& w) const = 0;
  virtual bool eq(const GroupWord& u, const GroupWord& v) const { return normal_form(u) == normal_form(v); }
  virtual Tri is_positive(const GroupWord& w) const = 0;
  /// Length of w as an element of P when positivity is decided exactly and
  /// every generator has length one; nullopt otherwise.
  virtual std::optional<std::size_t> positive_length(const GroupWord&) const { return std::nullopt; }
  /// A positive word representing w, when the oracle can produce one.
  virtual std::optional<MonoidWord> positive_word(const GroupWord&) const { return std::nullopt; }

  bool is_trivial(const GroupWord& w) const { return eq(w, GroupWord{}); }

  GroupWord parse(std::string_view text) const {
    GroupWord w;
    for (const auto& tok : detail::word_tokens(text)) {
      if ((tok == "e" || tok == "1") && !letter_id(tok)) continue;
      auto sp = detail::split_power(tok);
      if (!sp) throw Error("malformed letter '" + tok + "'");
      auto g = letter_id(sp->first);
      if (!g) throw Error("unknown letter '" + std::string(sp->first) + "' for group " + name());
      long k = sp->second;
      for (long i = 0; i < (k < 0 ? -k : k); ++i) w.letters.push_back({*g, static_cast<std::int8_t>(k < 0 ? -1 : 1)});
    }
    return w;
  }

  std::string format(const GroupWord& w) const {
    if (w.empty()) return "e";
    std::vector<std::string> parts;
    for (auto l : w.letters) parts.push_back(letter_name(l.gen) + (l.sign < 0 ? "^-1" : ""));
    return join(parts, ".");
  }
};

namespace detail {

inline std::string alpha_name(GeneratorId g, std::size_t rank) {
  if (rank <= 26) return std::string(1, static_cast<char>('a' + g));
  return "g" + std::to_string(g);
}

inline std::optional<GeneratorId> alpha_id(std::string_view s, std::size_t rank) {
  for (GeneratorId g = 0; g < rank; ++g)
    if (alpha_name(g, rank) == s) return g;
  return std::nullopt;
}

inline void check_rank(const GroupWord& w, std::size_t rank, const std::string& who) {
  for (auto l : w.letters)
    if (l.gen >= rank) throw Error("letter out of range for " + who);
}

}  // namespace detail

class FreeGroupOracle : public GroupOracle {
 public:
  explicit FreeGroupOracle(std::size_t rank) : rank_(rank) {}
  std::string name() const override { return "free:" + std::to_string(rank_); }
  std::string letter_name(GeneratorId g) const override { return detail::alpha_name(g, rank_); }
  std::optional<GeneratorId> letter_id(std::string_view s) const override { return detail::alpha_id(s, rank_); }
  std::string normal_form(const GroupWord& w) const override {
    detail::check_rank(w, rank_, name());
    return format(free_reduce(w));
  }
  Tri is_positive(const GroupWord& w) const override {
    detail::check_rank(w, rank_, name());
    return tri_of(free_reduce(w).all_positive());
  }
  std::optional<std::size_t> positive_length(const GroupWord& w) const override {
    auto r = free_reduce(w);
    if (!r.all_positive()) return std::nullopt;
    return r.size();
  }
  std::optional<MonoidWord> positive_word(const GroupWord& w) const override {
    auto r = free_reduce(w);
    if (!r.all_positive()) return std::nullopt;
    return r.positive_word();
  }

 private:
  std::size_t rank_;
};

class FreeAbelianOracle : public GroupOracle {
 public:
  explicit FreeAbelianOracle(std::size_t rank) : rank_(rank) {}
  std::string name() const override { return "free-abelian:" + std::to_string(rank_); }
  std::string letter_name(GeneratorId g) const override { return detail::alpha_name(g, rank_); }
  std::optional<GeneratorId> letter_id(std::string_view s) const override { return detail::alpha_id(s, rank_); }

  std::vector<std::int64_t> exponents(const GroupWord& w) const {
    detail::check_rank(w, rank_, name());
    std::vector<std::int64_t> e(rank_, 0);
    for (auto l : w.letters) e[l.gen] += l.sign;
    return e;
  }
  std::string normal_form(const GroupWord& w) const override {
    auto e = exponents(w);
    std::vector<std::string> parts;
    for (auto x : e) parts.push_back(std::to_string(x));
    return "(" + join(parts, ",") + ")";
  }
  Tri is_positive(const GroupWord& w) const override {
    auto e = exponents(w);
    return tri_of(std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x >= 0; }));
  }
  std::optional<std::size_t> positive_length(const GroupWord& w) const override {
    auto pw = positive_word(w);
    if (!pw) return std::nullopt;
    return pw->size();
  }
  std::optional<MonoidWord> positive_word(const GroupWord& w) const override {
    auto e = exponents(w);
    MonoidWord m;
    for (GeneratorId g = 0; g < rank_; ++g) {
      if (e[g] < 0) return std::nullopt;
      for (std::int64_t k = 0; k < e[g]; ++k) m.letters.push_back(g);
    }
    return m;
  }

 private:
  std::size_t rank_;
};

/// The free metabelian group F2/F2'' decided through Fox derivatives; P is
/// the image of the free monoid on a, b.
class MetabelianOracle : public GroupOracle {
 public:
  std::string name() const override { return "metabelian:2"; }
  std::string letter_name(GeneratorId g) const override { return detail::alpha_name(g, 2); }
  std::optional<GeneratorId> letter_id(std::string_view s) const override { return detail::alpha_id(s, 2); }
  std::string normal_form(const GroupWord& w) const override { return fox_image(w).to_string(); }
  bool eq(const GroupWord& u, const GroupWord& v) const override { return metabelian_eq(u, v); }
  Tri is_positive(const GroupWord& w) const override { return tri_of(positive_word(w).has_value()); }
  std::optional<std::size_t> positive_length(const GroupWord& w) const override {
    auto p = positive_word(w);
    if (!p) return std::nullopt;
    return p->size();
  }
  std::optional<MonoidWord> positive_word(const GroupWord& w) const override {
    return metabelian_positive_word(fox_image(w));
  }
};

/// Thompson's group F on x0, x1, ...; P is the Thompson monoid.
class ThompsonOracle : public GroupOracle {
 public:
  std::string name() const override { return "thompson"; }
  std::string letter_name(GeneratorId g) const override { return "x" + std::to_string(g); }
  std::optional<GeneratorId> letter_id(std::string_view s) const override {
    if (s.size() < 2 || s[0] != 'x') return std::nullopt;
    GeneratorId g = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), g);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return g;
  }
  std::string normal_form(const GroupWord& w) const override { return thompson_normal_form(w).to_string(); }
  Tri is_positive(const GroupWord& w) const override { return tri_of(thompson_normal_form(w).is_positive()); }
  std::optional<std::size_t> positive_length(const GroupWord& w) const override {
    auto f = thompson_normal_form(w);
    if (!f.is_positive()) return std::nullopt;
    return f.positive.size();
  }
  std::optional<MonoidWord> positive_word(const GroupWord& w) const override {
    auto f = thompson_normal_form(w);
    if (!f.is_positive()) return std::nullopt;
    return MonoidWord(std::vector<GeneratorId>(f.positive.begin(), f.positive.end()));
  }
};

/// Graph product of copies of Z; letter v is the generator 1 of vertex v.
class GraphProductOracle : public GroupOracle {
 public:
  explicit GraphProductOracle(GraphSpec g, std::string label = "") : graph_(std::move(g)), label_(std::move(label)) {}
  std::string name() const override { return "graph-product:" + (label_.empty() ? std::string("inline") : label_); }
  std::string letter_name(GeneratorId g) const override { return graph_.name(g); }
  std::optional<GeneratorId> letter_id(std::string_view s) const override { return graph_.find(s); }
  const GraphSpec& graph() const noexcept { return graph_; }

  GPWord element(const GroupWord& w) const {
    GPWord r;
    for (auto l : w.letters) {
      if (l.gen >= graph_.size()) throw Error("letter out of range for " + name());
      r.syllables.push_back({l.gen, l.sign});
    }
    return normal_form_gp(r);
  }
  GPWord normal_form_gp(const GPWord& w) const { return sgc::normal_form(w, graph_); }
  std::string normal_form(const GroupWord& w) const override { return format_gp(element(w), graph_); }
  Tri is_positive(const GroupWord& w) const override { return tri_of(gp_is_positive(element(w), graph_)); }
  std::optional<std::size_t> positive_length(const GroupWord& w) const override {
    if (!graph_.all_nat()) return std::nullopt;
    auto x = element(w);
    if (!gp_is_positive(x, graph_)) return std::nullopt;
    return gp_length(x, graph_);
  }
  std::optional<MonoidWord> positive_word(const GroupWord& w) const override {
    if (!graph_.all_nat()) return std::nullopt;
    auto x = element(w);
    if (!gp_is_positive(x, graph_)) return std::nullopt;
    MonoidWord m;
    for (const auto& s : x.syllables)
      for (std::int64_t k = 0; k < s.value; ++k) m.letters.push_back(s.vertex);
    return m;
  }

 private:
  GraphSpec graph_;
  std::string label_;
};

/// The standard presentation of the positive braid monoid on n strands.
inline Presentation braid_presentation(std::size_t n) {
  if (n < 2) throw Error("braid monoid needs at least 2 strands");
  std::vector<std::string> gens;
  for (std::size_t i = 1; i < n; ++i) gens.push_back("s" + std::to_string(i));
  std::vector<Relation> rel;
  for (GeneratorId i = 0; i < n - 1; ++i)
    for (GeneratorId j = i + 1; j < n - 1; ++j) {
      if (j == i + 1)
        rel.push_back({MonoidWord{i, j, i}, MonoidWord{j, i, j}});
      else
        rel.push_back({MonoidWord{i, j}, MonoidWord{j, i}});
    }
  return Presentation(std::move(gens), std::move(rel), true);
}

/// Group of right fractions N D^-1 of a complete presentation whose
/// reversing always terminates (Garside monoids such as braid monoids).
/// Elements are compared through the fraction with no common right divisor.
class FractionGroupOracle : public GroupOracle {
 public:
  FractionGroupOracle(Presentation pres, std::string label, long long budget = 100000)
      : pres_(std::move(pres)), label_(std::move(label)), budget_(budget) {}
  std::string name() const override { return label_; }
  std::string letter_name(GeneratorId g) const override { return pres_.name(g); }
  std::optional<GeneratorId> letter_id(std::string_view s) const override { return pres_.find(s); }
  const Presentation& presentation() const noexcept { return pres_; }

  std::pair<MonoidWord, MonoidWord> reduced_fraction(const GroupWord& w) const {
    auto r = reverse_word(w, pres_, budget_);
    if (r.kind != Reversal::Kind::Fraction) throw BudgetError("reversing did not produce a fraction in " + label_);
    MonoidWord n = canonical(r.numerator), d = canonical(r.denominator);
    bool changed = true;
    while (changed && !d.empty() && !n.empty()) {
      changed = false;
      for (GeneratorId s = 0; s < pres_.rank() && !changed; ++s) {
        auto nq = strip_right(n, s);
        if (!nq) continue;
        auto dq = strip_right(d, s);
        if (!dq) continue;
        n = canonical(*nq);
        d = canonical(*dq);
        changed = true;
      }
    }
    return {n, d};
  }
  std::string normal_form(const GroupWord& w) const override {
    auto [n, d] = reduced_fraction(w);
    return pres_.format(n) + " / " + pres_.format(d);
  }
  Tri is_positive(const GroupWord& w) const override { return tri_of(reduced_fraction(w).second.empty()); }
  std::optional<std::size_t> positive_length(const GroupWord& w) const override {
    if (!pres_.length_preserving()) return std::nullopt;
    auto [n, d] = reduced_fraction(w);
    if (!d.empty()) return std::nullopt;
    return n.size();
  }
  std::optional<MonoidWord> positive_word(const GroupWord& w) const override {
    auto [n, d] = reduced_fraction(w);
    if (!d.empty()) return std::nullopt;
    return n;
  }

 private:
  MonoidWord canonical(const MonoidWord& w) const { return congruence_class(w, pres_, 200000).front(); }
  std::optional<MonoidWord> strip_right(const MonoidWord& w, GeneratorId s) const {
    for (const auto& v : congruence_class(w, pres_, 200000))
      if (!v.empty() && v.letters.back() == s) return v.sub(0, v.size() - 1);
    return std::nullopt;
  }

  Presentation pres_;
  std::string label_;
  long long budget_;
};

/// G^op: a word l1..ln of G^op is the element ln..l1 of G.
class OppositeOracle : public GroupOracle {
 public:
  explicit OppositeOracle(std::unique_ptr<GroupOracle> base) : base_(std::move(base)) {}
  std::string name() const override { return "opposite:" + base_->name(); }
  std::string letter_name(GeneratorId g) const override { return base_->letter_name(g); }
  std::optional<GeneratorId> letter_id(std::string_view s) const override { return base_->letter_id(s); }
  std::string normal_form(const GroupWord& w) const override { return base_->normal_form(flip(w)); }
  bool eq(const GroupWord& u, const GroupWord& v) const override { return base_->eq(flip(u), flip(v)); }
  Tri is_positive(const GroupWord& w) const override { return base_->is_positive(flip(w)); }
  std::optional<std::size_t> positive_length(const GroupWord& w) const override { return base_->positive_length(flip(w)); }
  std::optional<MonoidWord> positive_word(const GroupWord& w) const override {
    auto p = base_->positive_word(flip(w));
    if (!p) return std::nullopt;
    return p->reversed();
  }

 private:
  static GroupWord flip(const GroupWord& w) {
    GroupWord r = w;
    std::reverse(r.letters.begin(), r.letters.end());
    return r;
  }
  std::unique_ptr<GroupOracle> base_;
};

namespace detail {
inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::size_t parse_count(std::string_view s, const std::string& what) {
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || ptr != s.data() + s.size() || n == 0) throw Error("malformed " + what + " '" + std::string(s) + "'");
  return n;
}
}  // namespace detail

/// Registry: free:k, free-abelian:k, metabelian:2, thompson, braid:n,
/// graph-product:<graph file>, opposite:<spec>.
inline std::unique_ptr<GroupOracle> make_oracle(std::string_view spec) {
  if (spec.starts_with("opposite:")) return std::make_unique<OppositeOracle>(make_oracle(spec.substr(9)));
  if (spec.starts_with("free:")) return std::make_unique<FreeGroupOracle>(detail::parse_count(spec.substr(5), "rank"));
  if (spec.starts_with("free-abelian:"))
    return std::make_unique<FreeAbelianOracle>(detail::parse_count(spec.substr(13), "rank"));
  if (spec == "metabelian:2") return std::make_unique<MetabelianOracle>();
  if (spec == "thompson") return std::make_unique<ThompsonOracle>();
  if (spec.starts_with("braid:")) {
    auto n = detail::parse_count(spec.substr(6), "strand count");
    return std::make_unique<FractionGroupOracle>(braid_presentation(n), std::string(spec));
  }
  if (spec.starts_with("graph-product:")) {
    std::string path(spec.substr(14));
    return std::make_unique<GraphProductOracle>(GraphSpec::parse(detail::read_file(path)), path);
  }
  throw Error("unknown group oracle '" + std::string(spec) + "'");
}

}  // namespace sgc

#endif  // SGC_ORACLES_HPP
