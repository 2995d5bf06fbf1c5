#ifndef SGC_SEMILATTICE_HPP
#define SGC_SEMILATTICE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "core.hpp"
#include "ideals.hpp"
#include "monoids.hpp"

namespace sgc {

/// A finite meet semilattice given by its table, with an optional zero and
/// the union relations X = X_1 u ... u X_n known among its elements.
struct FiniteSemilattice {
  struct Cover {
    std::size_t whole = 0;
    std::vector<std::size_t> parts;
    bool exact = true;  ///< false: union only checked on a sample
  };

  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> meet;
  std::optional<std::size_t> zero;
  std::vector<Cover> covers;
  std::size_t depth = 0;  ///< truncation depth it came from, 0 if hand made

  std::size_t size() const noexcept { return elements.size(); }
  bool leq(std::size_t x, std::size_t y) const { return meet[x][y] == x; }

  /// Throws unless meet is a commutative idempotent associative table and zero absorbs.
  void validate() const {
    std::size_t n = size();
    if (meet.size() != n) throw Error("meet table has the wrong number of rows");
    for (const auto& row : meet)
      if (row.size() != n) throw Error("meet table row has the wrong length");
    for (std::size_t x = 0; x < n; ++x) {
      if (meet[x][x] != x) throw Error("meet is not idempotent at " + elements[x]);
      for (std::size_t y = 0; y < n; ++y) {
        if (meet[x][y] >= n) throw Error("meet table entry out of range");
        if (meet[x][y] != meet[y][x]) throw Error("meet is not commutative");
        for (std::size_t z = 0; z < n; ++z)
          if (meet[meet[x][y]][z] != meet[x][meet[y][z]]) throw Error("meet is not associative");
      }
    }
    if (zero)
      for (std::size_t x = 0; x < n; ++x)
        if (meet[*zero][x] != *zero) throw Error("zero does not absorb");
    for (const auto& c : covers) {
      if (c.whole >= n) throw Error("cover refers to a missing element");
      for (auto p : c.parts)
        if (p >= n || !leq(p, c.whole)) throw Error("cover part is not below the whole");
    }
  }

  nlohmann::ordered_json dump() const {
    nlohmann::ordered_json j;
    j["elements"] = elements;
    j["zero"] = zero ? nlohmann::ordered_json(*zero) : nlohmann::ordered_json(nullptr);
    j["meet"] = meet;
    auto cs = nlohmann::ordered_json::array();
    for (const auto& c : covers) cs.push_back({{"whole", c.whole}, {"parts", c.parts}, {"exact", c.exact}});
    j["covers"] = cs;
    j["depth"] = depth;
    return j;
  }

  static FiniteSemilattice parse(const nlohmann::ordered_json& j) {
    FiniteSemilattice e;
    e.elements = j.at("elements").get<std::vector<std::string>>();
    if (!j.at("zero").is_null()) e.zero = j.at("zero").get<std::size_t>();
    e.meet = j.at("meet").get<std::vector<std::vector<std::size_t>>>();
    for (const auto& c : j.value("covers", nlohmann::ordered_json::array()))
      e.covers.push_back({c.at("whole").get<std::size_t>(), c.at("parts").get<std::vector<std::size_t>>(), c.value("exact", true)});
    e.depth = j.value("depth", std::size_t{0});
    e.validate();
    return e;
  }
};

/// A filter: the elements the character sends to 1, as a membership mask.
struct Character {
  std::vector<bool> filter;

  bool operator()(std::size_t e) const { return filter[e]; }
  bool operator==(const Character&) const = default;
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < filter.size(); ++i)
      if (filter[i]) out.push_back(i);
    return out;
  }
  bool subset_of(const Character& o) const {
    for (std::size_t i = 0; i < filter.size(); ++i)
      if (filter[i] && !o.filter[i]) return false;
    return true;
  }
};

/// Nonempty, upward closed, meet closed, zero-free.
inline bool is_filter(const FiniteSemilattice& E, const std::vector<bool>& f) {
  bool any = false;
  for (std::size_t x = 0; x < E.size(); ++x) {
    if (!f[x]) continue;
    any = true;
    if (E.zero && x == *E.zero) return false;
    for (std::size_t y = 0; y < E.size(); ++y) {
      if (E.leq(x, y) && !f[y]) return false;
      if (f[y] && !f[E.meet[x][y]]) return false;
    }
  }
  return any;
}

/// A finite filter is the upset of the meet of its members, so the
/// characters are the upsets of the nonzero elements, in element order.
inline std::vector<Character> enumerate_characters(const FiniteSemilattice& E, std::size_t bound = 20) {
  if (E.size() > bound) throw Error("semilattice has " + std::to_string(E.size()) + " elements, bound is " + std::to_string(bound));
  std::vector<Character> out;
  for (std::size_t m = 0; m < E.size(); ++m) {
    if (E.zero && m == *E.zero) continue;
    Character c{std::vector<bool>(E.size(), false)};
    for (std::size_t y = 0; y < E.size(); ++y) c.filter[y] = E.leq(m, y);
    if (!is_filter(E, c.filter)) throw InvariantError("upset of " + E.elements[m] + " is not a filter");
    out.push_back(std::move(c));
  }
  return out;
}

struct MaxAndBoundary {
  std::vector<Character> max;
  std::vector<Character> boundary;
  std::string caveat;
};

/// On a finite truncation the topology is discrete, so the boundary is the set of maximal characters.
inline MaxAndBoundary max_and_boundary(const FiniteSemilattice& E, std::size_t bound = 20) {
  auto all = enumerate_characters(E, bound);
  MaxAndBoundary out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < all.size() && maximal; ++j)
      if (j != i && all[i].subset_of(all[j]) && !(all[i] == all[j])) maximal = false;
    if (maximal) out.max.push_back(all[i]);
  }
  out.boundary = out.max;
  out.caveat = "finite truncation: closure of the maximal characters is taken in the discrete topology";
  return out;
}

/// Characters respecting every recorded cover.
inline std::vector<Character> omega_subspace(const FiniteSemilattice& E, std::size_t bound = 20) {
  std::vector<Character> out;
  for (auto& c : enumerate_characters(E, bound)) {
    bool ok = true;
    for (const auto& cov : E.covers) {
      if (!c(cov.whole)) continue;
      if (std::none_of(cov.parts.begin(), cov.parts.end(), [&](std::size_t p) { return c(p); })) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(std::move(c));
  }
  return out;
}

struct ChiMaxFailure {
  std::size_t character;  ///< index into the maximal characters
  std::size_t element;
};

/// For maximal chi and chi(e) = 0 some f has chi(f) = 1 and ef = 0. Empty result: saturated.
inline std::vector<ChiMaxFailure> chimax_failures(const FiniteSemilattice& E, std::size_t bound = 20) {
  auto mb = max_and_boundary(E, bound);
  std::vector<ChiMaxFailure> out;
  for (std::size_t i = 0; i < mb.max.size(); ++i)
    for (std::size_t e = 0; e < E.size(); ++e) {
      if (mb.max[i](e)) continue;
      bool found = false;
      for (std::size_t f = 0; f < E.size() && !found; ++f)
        found = mb.max[i](f) && E.zero && E.meet[e][f] == *E.zero;
      if (!found) out.push_back({i, e});
    }
  return out;
}

namespace detail {

inline std::optional<NatIdeal> single_factor(const GPIdeal& X, VertexId v, const GraphSpec& g) {
  if (X.empty) return NatIdeal::empty();
  if (!X.p.empty()) return std::nullopt;
  if (X.factors.empty()) return NatIdeal::full(g.cone(v));
  if (X.factors.size() != 1 || X.factors.begin()->first != v) return std::nullopt;
  return X.factors.begin()->second;
}

/// Whether the parts cover x; the flag says the check was exact.
inline std::pair<bool, bool> is_cover(std::size_t x, const std::vector<std::size_t>& parts,
                                      const std::vector<std::vector<bool>>& bits,
                                      const std::vector<std::optional<GPIdeal>>& exact, const GraphSpec* g) {
  if (g && exact[x] && !exact[x]->empty && exact[x]->p.empty() && !exact[x]->factors.empty()) {
    VertexId v = exact[x]->factors.begin()->first;
    if (auto whole = single_factor(*exact[x], v, *g)) {
      NatIdeal uni = NatIdeal::empty();
      bool fits = true;
      for (auto p : parts) {
        auto f = exact[p] ? single_factor(*exact[p], v, *g) : std::nullopt;
        if (!f) {
          fits = false;
          break;
        }
        uni = uni.unite(*f);
      }
      if (fits) return {uni == *whole, true};
    }
  }
  for (std::size_t i = 0; i < bits[x].size(); ++i) {
    bool any = false;
    for (auto p : parts) any = any || bits[p][i];
    if (any != bits[x][i]) return {false, false};
  }
  return {true, false};
}

/// Two-part covers, and the cover by all maximal elements below when no pair covers.
inline void discover_covers(FiniteSemilattice& E, const std::vector<std::vector<bool>>& bits,
                            const std::vector<std::optional<GPIdeal>>& exact, const GraphSpec* g) {
  for (std::size_t x = 0; x < E.size(); ++x) {
    if (E.zero && x == *E.zero) continue;
    std::vector<std::size_t> below;
    for (std::size_t y = 0; y < E.size(); ++y)
      if (y != x && E.leq(y, x) && !(E.zero && y == *E.zero)) below.push_back(y);
    bool paired = false;
    for (std::size_t i = 0; i < below.size(); ++i)
      for (std::size_t j = i + 1; j < below.size(); ++j) {
        std::vector<std::size_t> parts{below[i], below[j]};
        if (E.leq(parts[0], parts[1]) || E.leq(parts[1], parts[0])) continue;
        auto [ok, ex] = is_cover(x, parts, bits, exact, g);
        if (ok) {
          E.covers.push_back({x, parts, ex});
          paired = true;
        }
      }
    if (paired) continue;
    std::vector<std::size_t> parts;
    for (auto y : below) {
      bool maximal = true;
      for (auto z : below)
        if (z != y && E.leq(y, z)) maximal = false;
      if (maximal) parts.push_back(y);
    }
    if (parts.size() < 2) continue;
    auto [ok, ex] = is_cover(x, parts, bits, exact, g);
    if (ok) E.covers.push_back({x, parts, ex});
  }
}

}  // namespace detail

/// The semilattice spanned by the constructible ideals of depth at most
/// `depth`, closed under intersection. Exact on graph products; elsewhere
/// ideals are identified by their membership on the ball of length L.
inline FiniteSemilattice truncated_semilattice(const MonoidBackend& m, std::size_t depth, std::size_t L = 0,
                                               long long budget = 2000, std::size_t max_elements = 200) {
  EnumerationOptions eo;
  eo.depth = depth;
  eo.sample_length = L;
  eo.budget = budget;
  auto en = enumerate_ideals(m, eo);
  const GraphSpec* g = m.graph();
  auto sample = g ? m.ball(en.sample_length) : en.sample;

  FiniteSemilattice E;
  E.depth = depth;
  std::vector<std::vector<bool>> bits;
  std::vector<std::optional<GPIdeal>> exact;
  std::vector<RightIdeal> ideals;
  std::map<std::string, std::size_t> index;

  auto to_bits = [&](const RightIdeal& X) {
    std::vector<bool> b;
    for (auto t : membership_vector(X, sample, m, budget)) b.push_back(t == Tri::Yes);
    return b;
  };
  auto add = [&](const std::string& key, const std::string& label, std::vector<bool> b, std::optional<GPIdeal> x,
                 RightIdeal X) -> std::size_t {
    if (auto it = index.find(key); it != index.end()) return it->second;
    if (E.elements.size() >= max_elements) throw Error("semilattice truncation exceeds " + std::to_string(max_elements) + " elements");
    index.emplace(key, E.elements.size());
    E.elements.push_back(label);
    bits.push_back(std::move(b));
    exact.push_back(std::move(x));
    ideals.push_back(std::move(X));
    return E.elements.size() - 1;
  };
  auto key_of = [&](const std::string& id, const std::vector<bool>& b) {
    if (g) return id;
    std::string k;
    for (bool v : b) k.push_back(v ? '1' : '0');
    return k;
  };

  for (const auto& X : en.ideals) {
    auto b = to_bits(X.ideal);
    std::optional<GPIdeal> x;
    if (g) x = X.ideal.shape == RightIdeal::Shape::Standard ? X.ideal.standard
               : X.ideal.shape == RightIdeal::Shape::Empty  ? detail::gp_empty()
                                                             : gp_full();
    add(key_of(X.id, b), X.id, b, x, X.ideal);
  }
  // close under intersection
  for (bool grew = true; grew;) {
    grew = false;
    std::size_t n = E.elements.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        std::vector<bool> b(bits[i].size());
        for (std::size_t k = 0; k < b.size(); ++k) b[k] = bits[i][k] && bits[j][k];
        std::optional<GPIdeal> x;
        std::string label;
        RightIdeal X = ideal_intersect(ideals[i], ideals[j], m);
        if (g) {
          x = gp_ideal_intersect(*exact[i], *exact[j], *g);
          label = format_gp_ideal(*x, *g);
        } else {
          label = std::find(b.begin(), b.end(), true) == b.end() ? "empty" : E.elements[i] + " cap " + E.elements[j];
        }
        std::size_t before = E.elements.size();
        add(key_of(label, b), label, b, x, X);
        grew = grew || E.elements.size() > before;
      }
  }
  std::size_t n = E.elements.size();
  E.meet.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (g) {
        E.meet[i][j] = index.at(format_gp_ideal(gp_ideal_intersect(*exact[i], *exact[j], *g), *g));
      } else {
        std::vector<bool> b(bits[i].size());
        for (std::size_t k = 0; k < b.size(); ++k) b[k] = bits[i][k] && bits[j][k];
        E.meet[i][j] = index.at(key_of("", b));
      }
    }
  for (std::size_t i = 0; i < n; ++i) {
    bool is_zero = g ? exact[i]->empty : std::find(bits[i].begin(), bits[i].end(), true) == bits[i].end();
    if (is_zero) E.zero = i;
  }
  detail::discover_covers(E, bits, exact, g);
  E.validate();
  return E;
}

}  // namespace sgc

#endif  // SGC_SEMILATTICE_HPP
