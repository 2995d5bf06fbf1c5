#ifndef SGC_GRAPHPROD_HPP
#define SGC_GRAPHPROD_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core.hpp"
#include "numerical.hpp"
#include "words.hpp"

namespace sgc {

using VertexId = std::uint32_t;

/// A finite simple graph whose vertices carry the group Z with a numerical
/// semigroup as positive cone.
class GraphSpec {
 public:
  GraphSpec() = default;
  GraphSpec(std::vector<std::string> names, const std::vector<std::pair<VertexId, VertexId>>& edges,
            std::vector<NumericalSemigroup> cones = {})
      : names_(std::move(names)), adj_(names_.size(), std::vector<bool>(names_.size(), false)), cones_(std::move(cones)) {
    if (cones_.empty()) cones_.assign(names_.size(), NumericalSemigroup{});
    if (cones_.size() != names_.size()) throw Error("one vertex monoid per vertex required");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!detail::valid_name(names_[i])) throw Error("invalid vertex name '" + names_[i] + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j]) throw Error("duplicate vertex '" + names_[i] + "'");
    }
    for (auto [u, v] : edges) {
      if (u >= names_.size() || v >= names_.size()) throw Error("edge endpoint out of range");
      if (u == v) throw Error("loop at vertex '" + names_[u] + "'");
      adj_[u][v] = adj_[v][u] = true;
    }
  }

  static GraphSpec discrete(std::size_t n);
  static GraphSpec complete(std::size_t n);
  static GraphSpec path(std::size_t n);
  static GraphSpec parse(std::string_view text);
  std::string serialize() const;

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<VertexId> find(std::string_view n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return static_cast<VertexId>(i);
    return std::nullopt;
  }
  VertexId id(std::string_view n) const {
    auto v = find(n);
    if (!v) throw Error("unknown vertex '" + std::string(n) + "'");
    return *v;
  }
  bool adjacent(VertexId u, VertexId v) const { return adj_[u][v]; }
  const NumericalSemigroup& cone(VertexId v) const { return cones_.at(v); }
  bool all_nat() const {
    return std::all_of(cones_.begin(), cones_.end(), [](const auto& c) { return c.is_nat(); });
  }
  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId u = 0; u < size(); ++u)
      for (VertexId v = u + 1; v < size(); ++v)
        if (adj_[u][v]) out.emplace_back(u, v);
    return out;
  }
  bool operator==(const GraphSpec& o) const {
    return names_ == o.names_ && adj_ == o.adj_ && cones_ == o.cones_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> adj_;
  std::vector<NumericalSemigroup> cones_;
};

namespace detail {

inline std::vector<std::string> default_vertex_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "v" + std::to_string(i));
  return out;
}

inline NumericalSemigroup parse_vertex_oracle(std::string_view spec) {
  if (!spec.starts_with("oracle:")) throw Error("vertex binding must read 'oracle:<name>'");
  spec.remove_prefix(7);
  if (spec == "nat" || spec == "int") return NumericalSemigroup{};
  if (spec.starts_with("numerical:")) {
    spec.remove_prefix(10);
    std::vector<std::int64_t> gaps;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
      auto comma = spec.find(',', pos);
      auto part = trim(spec.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
      std::int64_t g = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), g);
      if (ec != std::errc() || ptr != part.data() + part.size()) throw Error("malformed gap list");
      gaps.push_back(g);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return NumericalSemigroup(std::move(gaps));
  }
  throw Error("unsupported vertex oracle '" + std::string(spec) + "'");
}

}  // namespace detail

inline GraphSpec GraphSpec::discrete(std::size_t n) { return GraphSpec(detail::default_vertex_names(n), {}); }

inline GraphSpec GraphSpec::complete(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return GraphSpec(detail::default_vertex_names(n), e);
}

inline GraphSpec GraphSpec::path(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return GraphSpec(detail::default_vertex_names(n), e);
}

inline GraphSpec GraphSpec::parse(std::string_view text) {
  std::optional<std::vector<std::string>> names;
  std::vector<std::pair<std::string, std::string>> edge_names;
  std::vector<std::pair<std::string, NumericalSemigroup>> bindings;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string_view line = raw;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    std::string_view body = trim(line);
    if (body.empty()) continue;
    std::size_t col = static_cast<std::size_t>(body.data() - raw.data()) + 1;
    try {
      if (body.starts_with("vertices:")) {
        if (names) throw ParseError(line_no, col, "duplicate vertices line");
        names = split_ws(body.substr(9));
      } else if (body.starts_with("edges:")) {
        for (auto& tok : split_ws(body.substr(6))) {
          auto dash = tok.find('-');
          if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
            throw ParseError(line_no, col, "malformed edge '" + tok + "'");
          if (tok.substr(0, dash) == tok.substr(dash + 1)) throw ParseError(line_no, col, "loop edge '" + tok + "'");
          edge_names.emplace_back(tok.substr(0, dash), tok.substr(dash + 1));
        }
      } else if (body.starts_with("vertex ")) {
        auto eq = body.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, col, "expected 'vertex u = oracle:<name>'");
        bindings.emplace_back(std::string(trim(body.substr(7, eq - 7))),
                              detail::parse_vertex_oracle(trim(body.substr(eq + 1))));
      } else {
        throw ParseError(line_no, col, "unrecognised line");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line_no, col, e.what());
    }
  }
  if (!names) throw ParseError(1, 1, "missing vertices line");
  std::vector<NumericalSemigroup> cones(names->size());
  auto lookup = [&](const std::string& n) {
    for (std::size_t i = 0; i < names->size(); ++i)
      if ((*names)[i] == n) return static_cast<VertexId>(i);
    throw Error("unknown vertex '" + n + "'");
  };
  for (auto& [n, c] : bindings) cones[lookup(n)] = c;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (auto& [a, b] : edge_names) edges.emplace_back(lookup(a), lookup(b));
  return GraphSpec(std::move(*names), edges, std::move(cones));
}

inline std::string GraphSpec::serialize() const {
  std::string out = "vertices:";
  for (const auto& n : names_) out += " " + n;
  out += "\nedges:";
  for (auto [u, v] : edges()) out += " " + names_[u] + "-" + names_[v];
  out += "\n";
  for (VertexId v = 0; v < size(); ++v)
    if (!cones_[v].is_nat()) out += "vertex " + names_[v] + " = oracle:" + cones_[v].name() + "\n";
  return out;
}

struct Syllable {
  VertexId vertex = 0;
  std::int64_t value = 0;  ///< exponent in the vertex copy of Z; never 0
  auto operator<=>(const Syllable&) const = default;
  bool operator==(const Syllable&) const = default;
};

/// A syllable word; in normal form it is reduced and in canonical shuffle order.
struct GPWord {
  std::vector<Syllable> syllables;

  GPWord() = default;
  GPWord(std::initializer_list<Syllable> s) : syllables(s) {}
  explicit GPWord(std::vector<Syllable> s) : syllables(std::move(s)) {}

  bool empty() const noexcept { return syllables.empty(); }
  std::size_t size() const noexcept { return syllables.size(); }
  GPWord inverse() const {
    GPWord r;
    for (auto it = syllables.rbegin(); it != syllables.rend(); ++it) r.syllables.push_back({it->vertex, -it->value});
    return r;
  }
  friend GPWord operator*(const GPWord& a, const GPWord& b) {
    GPWord r = a;
    r.syllables.insert(r.syllables.end(), b.syllables.begin(), b.syllables.end());
    return r;
  }
  auto operator<=>(const GPWord&) const = default;
  bool operator==(const GPWord&) const = default;
};

struct GPWordHash {
  std::size_t operator()(const GPWord& w) const noexcept {
    std::size_t h = w.size();
    for (const auto& s : w.syllables) {
      hash_combine(h, s.vertex);
      hash_combine(h, static_cast<std::size_t>(s.value));
    }
    return h;
  }
};

namespace detail {
inline void check_syllables(const GPWord& w) {
  for (const auto& s : w.syllables)
    if (s.value == 0) throw Error("syllable with identity element");
}
}  // namespace detail

/// True iff any two syllables at the same vertex are separated by a syllable
/// at a vertex not adjacent to theirs.
inline bool is_reduced(const GPWord& w, const GraphSpec& g) {
  detail::check_syllables(w);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      VertexId v = w.syllables[i].vertex;
      if (w.syllables[j].vertex != v) continue;
      bool separated = false;
      for (std::size_t k = i + 1; k < j && !separated; ++k) separated = !g.adjacent(v, w.syllables[k].vertex);
      if (!separated) return false;
    }
  return true;
}

/// Amalgamates until reduced, then emits the least available initial vertex first.
inline GPWord normal_form(const GPWord& w, const GraphSpec& g) {
  detail::check_syllables(w);
  std::vector<Syllable> s = w.syllables;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < s.size() && !changed; ++i) {
      VertexId v = s[i].vertex;
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (s[j].vertex == v) {
          s[i].value += s[j].value;
          s.erase(s.begin() + static_cast<std::ptrdiff_t>(j));
          if (s[i].value == 0) s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        if (!g.adjacent(v, s[j].vertex)) break;
      }
    }
  }
  GPWord out;
  std::vector<bool> used(s.size(), false);
  for (std::size_t emitted = 0; emitted < s.size(); ++emitted) {
    std::size_t best = s.size();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (used[i]) continue;
      bool initial = true;
      for (std::size_t k = 0; k < i && initial; ++k) initial = used[k] || g.adjacent(s[k].vertex, s[i].vertex);
      if (initial && (best == s.size() || s[i].vertex < s[best].vertex)) best = i;
    }
    used[best] = true;
    out.syllables.push_back(s[best]);
  }
  return out;
}

struct InitialFinalData {
  std::vector<VertexId> initial_vertices;
  std::map<VertexId, Syllable> initial_syllables;
  std::vector<VertexId> final_vertices;
  std::map<VertexId, Syllable> final_syllables;

  bool is_initial(VertexId v) const { return initial_syllables.count(v) > 0; }
  bool is_final(VertexId v) const { return final_syllables.count(v) > 0; }
  std::int64_t initial_value(VertexId v) const {
    auto it = initial_syllables.find(v);
    return it == initial_syllables.end() ? 0 : it->second.value;
  }
  std::int64_t final_value(VertexId v) const {
    auto it = final_syllables.find(v);
    return it == final_syllables.end() ? 0 : it->second.value;
  }
};

inline InitialFinalData initial_final_data(const GPWord& w, const GraphSpec& g) {
  if (!is_reduced(w, g)) throw Error("initial/final data requires a reduced word");
  InitialFinalData d;
  for (std::size_t i = 0; i < w.size(); ++i) {
    VertexId v = w.syllables[i].vertex;
    bool initial = true, fin = true;
    for (std::size_t k = 0; k < i && initial; ++k) initial = g.adjacent(w.syllables[k].vertex, v);
    for (std::size_t k = i + 1; k < w.size() && fin; ++k) fin = g.adjacent(w.syllables[k].vertex, v);
    if (initial && !d.initial_syllables.emplace(v, w.syllables[i]).second)
      throw InvariantError("two initial syllables at one vertex");
    if (fin && !d.final_syllables.emplace(v, w.syllables[i]).second)
      throw InvariantError("two final syllables at one vertex");
  }
  for (auto& [v, s] : d.initial_syllables) d.initial_vertices.push_back(v);
  for (auto& [v, s] : d.final_syllables) d.final_vertices.push_back(v);
  for (auto u : d.initial_vertices)
    for (auto v : d.initial_vertices)
      if (u != v && !g.adjacent(u, v)) throw InvariantError("initial vertices not pairwise adjacent");
  return d;
}

/// Removes the syllable at vertex v that is initial (front=true) or final.
inline GPWord drop_syllable(const GPWord& w, VertexId v, bool front, const GraphSpec& g) {
  GPWord r = w;
  if (front) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r.syllables[i].vertex == v) {
        r.syllables.erase(r.syllables.begin() + static_cast<std::ptrdiff_t>(i));
        return r;
      }
      if (!g.adjacent(r.syllables[i].vertex, v)) break;
    }
  } else {
    for (std::size_t i = r.size(); i-- > 0;) {
      if (r.syllables[i].vertex == v) {
        r.syllables.erase(r.syllables.begin() + static_cast<std::ptrdiff_t>(i));
        return r;
      }
      if (!g.adjacent(r.syllables[i].vertex, v)) break;
    }
  }
  throw InvariantError("vertex is not initial/final");
}

/// Product of two normal forms: merge final syllables of g with initial
/// syllables of h at common vertices, concatenate, renormalise.
inline GPWord gp_multiply(const GPWord& a, const GPWord& b, const GraphSpec& g) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  auto da = initial_final_data(a, g);
  auto db = initial_final_data(b, g);
  GPWord x = a, y = b, z;
  for (auto v : da.final_vertices) {
    if (!db.is_initial(v)) continue;
    std::int64_t merged = da.final_value(v) + db.initial_value(v);
    x = drop_syllable(x, v, false, g);
    y = drop_syllable(y, v, true, g);
    if (merged != 0) z.syllables.push_back({v, merged});
  }
  return normal_form(x * z * y, g);
}

inline GPWord gp_inverse(const GPWord& a, const GraphSpec& g) { return normal_form(a.inverse(), g); }

/// Every syllable lies in its vertex cone.
inline bool gp_is_positive(const GPWord& w, const GraphSpec& g) {
  return std::all_of(w.syllables.begin(), w.syllables.end(),
                     [&](const Syllable& s) { return s.value > 0 && g.cone(s.vertex).contains(s.value); });
}

/// Monoid length: sum of minimal generator counts per syllable.
inline std::size_t gp_length(const GPWord& w, const GraphSpec& g) {
  std::size_t n = 0;
  for (const auto& s : w.syllables) n += g.cone(s.vertex).length(s.value);
  return n;
}

inline std::string format_gp(const GPWord& w, const GraphSpec& g) {
  if (w.empty()) return "e";
  std::vector<std::string> parts;
  for (const auto& s : w.syllables)
    parts.push_back(s.value == 1 ? g.name(s.vertex) : g.name(s.vertex) + "^" + std::to_string(s.value));
  return join(parts, ".");
}

/// Parses "a^2.b.a^-1" (also accepts repeated letters); result is not normalised.
inline GPWord parse_gp(std::string_view text, const GraphSpec& g) {
  GPWord w;
  for (const auto& tok : detail::word_tokens(text)) {
    if (tok == "e" && !g.find("e")) continue;
    auto sp = detail::split_power(tok);
    if (!sp) throw Error("malformed syllable '" + tok + "'");
    if (sp->second == 0) continue;
    w.syllables.push_back({g.id(sp->first), sp->second});
  }
  return w;
}

/// The right-angled Artin monoid presentation of a graph with N vertices.
inline Presentation raam_presentation(const GraphSpec& g) {
  std::vector<Relation> rel;
  for (auto [u, v] : g.edges()) rel.push_back({MonoidWord{u, v}, MonoidWord{v, u}});
  return Presentation(g.names(), std::move(rel), true);
}

/// The group element of a positive word over the vertex letters.
inline GPWord gp_from_word(const MonoidWord& w, const GraphSpec& g) {
  GPWord r;
  for (auto l : w.letters) r.syllables.push_back({l, 1});
  return normal_form(r, g);
}

}  // namespace sgc

#endif  // SGC_GRAPHPROD_HPP
