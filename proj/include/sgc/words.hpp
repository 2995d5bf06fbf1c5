#ifndef SGC_WORDS_HPP
#define SGC_WORDS_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "core.hpp"

namespace sgc {

using GeneratorId = std::uint32_t;

/// A positive word; the empty word is the identity.
struct MonoidWord {
  std::vector<GeneratorId> letters;

  MonoidWord() = default;
  MonoidWord(std::initializer_list<GeneratorId> l) : letters(l) {}
  explicit MonoidWord(std::vector<GeneratorId> l) : letters(std::move(l)) {}

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  GeneratorId operator[](std::size_t i) const { return letters[i]; }

  MonoidWord sub(std::size_t pos, std::size_t len = std::string::npos) const {
    len = std::min(len, letters.size() - pos);
    return MonoidWord(std::vector<GeneratorId>(letters.begin() + pos, letters.begin() + pos + len));
  }
  bool starts_with(const MonoidWord& p) const {
    return p.size() <= size() && std::equal(p.letters.begin(), p.letters.end(), letters.begin());
  }
  bool ends_with(const MonoidWord& p) const {
    return p.size() <= size() && std::equal(p.letters.rbegin(), p.letters.rend(), letters.rbegin());
  }
  MonoidWord reversed() const { return MonoidWord(std::vector<GeneratorId>(letters.rbegin(), letters.rend())); }

  friend MonoidWord operator*(const MonoidWord& a, const MonoidWord& b) {
    MonoidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
  }
  auto operator<=>(const MonoidWord&) const = default;
  bool operator==(const MonoidWord&) const = default;
};

/// Length first, then lexicographic.
inline bool shortlex_less(const MonoidWord& a, const MonoidWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters < b.letters;
}

struct Letter {
  GeneratorId gen = 0;
  std::int8_t sign = 1;
  Letter inverse() const { return Letter{gen, static_cast<std::int8_t>(-sign)}; }
  auto operator<=>(const Letter&) const = default;
  bool operator==(const Letter&) const = default;
};

struct GroupWord {
  std::vector<Letter> letters;

  GroupWord() = default;
  GroupWord(std::initializer_list<Letter> l) : letters(l) {}
  explicit GroupWord(std::vector<Letter> l) : letters(std::move(l)) {}
  explicit GroupWord(const MonoidWord& w) {
    letters.reserve(w.size());
    for (auto g : w.letters) letters.push_back({g, 1});
  }

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }

  GroupWord inverse() const {
    GroupWord r;
    r.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(it->inverse());
    return r;
  }
  bool all_positive() const {
    return std::all_of(letters.begin(), letters.end(), [](Letter l) { return l.sign > 0; });
  }
  /// Only valid when all_positive().
  MonoidWord positive_word() const {
    MonoidWord m;
    for (auto l : letters) m.letters.push_back(l.gen);
    return m;
  }

  friend GroupWord operator*(const GroupWord& a, const GroupWord& b) {
    GroupWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
  }
  auto operator<=>(const GroupWord&) const = default;
  bool operator==(const GroupWord&) const = default;
};

/// p q^{-1} as a group word.
inline GroupWord fraction(const MonoidWord& p, const MonoidWord& q) { return GroupWord(p) * GroupWord(q).inverse(); }

inline GroupWord free_reduce(const GroupWord& w) {
  GroupWord r;
  r.letters.reserve(w.size());
  for (auto l : w.letters) {
    if (!r.letters.empty() && r.letters.back().gen == l.gen && r.letters.back().sign == -l.sign)
      r.letters.pop_back();
    else
      r.letters.push_back(l);
  }
  return r;
}

struct MonoidWordHash {
  std::size_t operator()(const MonoidWord& w) const noexcept {
    std::size_t h = w.size();
    for (auto g : w.letters) hash_combine(h, g);
    return h;
  }
};

struct GroupWordHash {
  std::size_t operator()(const GroupWord& w) const noexcept {
    std::size_t h = w.size();
    for (auto l : w.letters) hash_combine(h, (static_cast<std::size_t>(l.gen) << 1) | (l.sign > 0 ? 1U : 0U));
    return h;
  }
};

struct Relation {
  MonoidWord lhs;
  MonoidWord rhs;
  bool operator==(const Relation&) const = default;
};

namespace detail {

inline bool is_name_char(char c, bool first) {
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') return true;
  return !first && c >= '0' && c <= '9';
}

inline bool valid_name(std::string_view s) {
  if (s.empty() || !is_name_char(s[0], true)) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) { return is_name_char(c, false); });
}

/// Splits "g^k" or "g^-k"; k defaults to 1.
inline std::optional<std::pair<std::string_view, long>> split_power(std::string_view tok) {
  auto caret = tok.find('^');
  if (caret == std::string_view::npos) return std::make_pair(tok, 1L);
  std::string_view name = tok.substr(0, caret);
  std::string_view exp = tok.substr(caret + 1);
  long k = 0;
  auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), k);
  if (ec != std::errc() || ptr != exp.data() + exp.size()) return std::nullopt;
  return std::make_pair(name, k);
}

inline std::vector<std::string> word_tokens(std::string_view s) {
  std::string t(s);
  std::replace(t.begin(), t.end(), '.', ' ');
  std::replace(t.begin(), t.end(), '*', ' ');
  return split_ws(t);
}

}  // namespace detail

/// A finite monoid presentation <generators | relations>^+ with a completeness flag.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generators, std::vector<Relation> relations, bool complete)
      : generators_(std::move(generators)), relations_(std::move(relations)), complete_(complete) {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (!detail::valid_name(generators_[i])) throw Error("invalid generator name '" + generators_[i] + "'");
      if (!index_.emplace(generators_[i], static_cast<GeneratorId>(i)).second)
        throw Error("duplicate generator '" + generators_[i] + "'");
    }
    for (const auto& r : relations_) {
      if (r.lhs.empty() || r.rhs.empty()) throw Error("empty relation side");
      for (const auto* w : {&r.lhs, &r.rhs})
        for (auto g : w->letters)
          if (g >= generators_.size()) throw Error("relation uses undeclared generator");
    }
  }

  static Presentation parse(std::string_view text);

  std::string serialize() const {
    std::string out = "generators:";
    for (const auto& g : generators_) out += " " + g;
    out += "\n";
    for (const auto& r : relations_) out += format(r.lhs, " ") + " = " + format(r.rhs, " ") + "\n";
    out += std::string("complete: ") + (complete_ ? "true" : "false") + "\n";
    return out;
  }

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  bool complete() const noexcept { return complete_; }
  std::size_t rank() const noexcept { return generators_.size(); }

  std::optional<GeneratorId> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  GeneratorId id(std::string_view name) const {
    auto g = find(name);
    if (!g) throw Error("unknown generator '" + std::string(name) + "'");
    return *g;
  }
  const std::string& name(GeneratorId g) const { return generators_.at(g); }

  /// Accepts generator names separated by whitespace or '.', with optional ^k.
  MonoidWord parse_word(std::string_view s) const {
    GroupWord w = parse_group_word(s);
    if (!w.all_positive()) throw Error("negative exponent in monoid word '" + std::string(s) + "'");
    return w.positive_word();
  }

  GroupWord parse_group_word(std::string_view s) const {
    GroupWord w;
    for (const auto& tok : detail::word_tokens(s)) {
      if ((tok == "e" || tok == "1") && !find(tok)) continue;
      auto sp = detail::split_power(tok);
      if (!sp) throw Error("malformed exponent in '" + tok + "'");
      GeneratorId g = id(sp->first);
      long k = sp->second;
      for (long i = 0; i < (k < 0 ? -k : k); ++i) w.letters.push_back({g, static_cast<std::int8_t>(k < 0 ? -1 : 1)});
    }
    return w;
  }

  std::string format(const MonoidWord& w, std::string_view sep = ".") const {
    if (w.empty()) return "e";
    std::vector<std::string> parts;
    for (auto g : w.letters) parts.push_back(name(g));
    return join(parts, sep);
  }

  std::string format(const GroupWord& w, std::string_view sep = ".") const {
    if (w.empty()) return "e";
    std::vector<std::string> parts;
    for (auto l : w.letters) parts.push_back(l.sign > 0 ? name(l.gen) : name(l.gen) + "^-1");
    return join(parts, sep);
  }

  /// The presentation of the opposite monoid (all words reversed).
  Presentation opposite() const {
    std::vector<Relation> rel;
    for (const auto& r : relations_) rel.push_back({r.lhs.reversed(), r.rhs.reversed()});
    return Presentation(generators_, std::move(rel), complete_);
  }

  bool length_preserving() const {
    return std::all_of(relations_.begin(), relations_.end(),
                       [](const Relation& r) { return r.lhs.size() == r.rhs.size(); });
  }

  bool operator==(const Presentation& o) const {
    return generators_ == o.generators_ && relations_ == o.relations_ && complete_ == o.complete_;
  }

 private:
  std::vector<std::string> generators_;
  std::vector<Relation> relations_;
  bool complete_ = false;
  std::map<std::string, GeneratorId, std::less<>> index_;
};

inline Presentation Presentation::parse(std::string_view text) {
  std::optional<std::vector<std::string>> gens;
  std::vector<std::pair<std::size_t, std::string>> rel_lines;
  std::optional<bool> complete;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::map<std::string, GeneratorId, std::less<>> index;
  std::vector<Relation> relations;

  auto column_of = [](std::string_view line, std::string_view part) {
    return static_cast<std::size_t>(part.data() - line.data()) + 1;
  };

  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::string_view body = trim(line);
    if (body.empty()) continue;

    if (body.starts_with("generators:")) {
      if (gens) throw ParseError(line_no, column_of(raw, body), "duplicate generators line");
      gens.emplace();
      std::string_view rest = body.substr(11);
      for (auto& tok : split_ws(rest)) {
        if (!detail::valid_name(tok)) throw ParseError(line_no, column_of(raw, rest), "invalid generator name '" + tok + "'");
        if (!index.emplace(tok, static_cast<GeneratorId>(gens->size())).second)
          throw ParseError(line_no, column_of(raw, rest), "duplicate generator '" + tok + "'");
        gens->push_back(tok);
      }
      continue;
    }
    if (body.starts_with("complete:")) {
      auto v = trim(body.substr(9));
      if (v == "true")
        complete = true;
      else if (v == "false")
        complete = false;
      else
        throw ParseError(line_no, column_of(raw, v), "expected true or false");
      continue;
    }
    auto eq = body.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, column_of(raw, body), "expected 'w = w'' relation");
    if (!gens) throw ParseError(line_no, column_of(raw, body), "relation before generators line");
    if (body.find('=', eq + 1) != std::string_view::npos)
      throw ParseError(line_no, column_of(raw, body) + eq + 1, "more than one '=' in relation");
    Relation r;
    for (int side = 0; side < 2; ++side) {
      std::string_view part = side == 0 ? body.substr(0, eq) : body.substr(eq + 1);
      MonoidWord& w = side == 0 ? r.lhs : r.rhs;
      std::size_t offset = column_of(raw, part);
      for (auto& tok : detail::word_tokens(part)) {
        auto sp = detail::split_power(tok);
        std::size_t col = offset + part.find(tok);
        if (!sp || sp->second < 0) throw ParseError(line_no, col, "malformed letter '" + tok + "'");
        auto it = index.find(sp->first);
        if (it == index.end()) throw ParseError(line_no, col, "undeclared generator '" + std::string(sp->first) + "'");
        for (long i = 0; i < sp->second; ++i) w.letters.push_back(it->second);
      }
      if (w.empty()) throw ParseError(line_no, offset, "empty relation side");
    }
    relations.push_back(std::move(r));
  }
  if (!gens) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing generators line");
  return Presentation(std::move(*gens), std::move(relations), complete.value_or(false));
}

// ---------------------------------------------------------------------------
// The reversing relation: delete s^-1 s, or replace s_i^-1 s_j by u v^-1
// whenever s_i u = s_j v is an orientation of a relation.

struct RrStep {
  std::size_t position = 0;  ///< index of the negative letter
  int relation = -1;         ///< -1 for a deletion
  bool flipped = false;      ///< true when the relation is used as rhs = lhs
  bool operator==(const RrStep&) const = default;
};

struct RrMove {
  RrStep step;
  GroupWord result;
};

namespace detail {

inline GroupWord splice(const GroupWord& w, std::size_t pos, const MonoidWord& u, const MonoidWord& v) {
  GroupWord r;
  r.letters.reserve(w.size() + u.size() + v.size());
  r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.begin() + pos);
  for (std::size_t i = 1; i < u.size(); ++i) r.letters.push_back({u[i], 1});
  for (std::size_t i = v.size(); i-- > 1;) r.letters.push_back({v[i], -1});
  r.letters.insert(r.letters.end(), w.letters.begin() + pos + 2, w.letters.end());
  return r;
}

}  // namespace detail

inline std::vector<RrMove> rr_moves(const GroupWord& w, const Presentation& pres) {
  std::vector<RrMove> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    Letter a = w.letters[i], b = w.letters[i + 1];
    if (a.sign > 0 || b.sign < 0) continue;
    if (a.gen == b.gen) {
      GroupWord r;
      r.letters.reserve(w.size() - 2);
      r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.begin() + i);
      r.letters.insert(r.letters.end(), w.letters.begin() + i + 2, w.letters.end());
      out.push_back({{i, -1, false}, std::move(r)});
    }
    const auto& rels = pres.relations();
    for (std::size_t k = 0; k < rels.size(); ++k) {
      for (bool flip : {false, true}) {
        const MonoidWord& left = flip ? rels[k].rhs : rels[k].lhs;
        const MonoidWord& right = flip ? rels[k].lhs : rels[k].rhs;
        if (left[0] == a.gen && right[0] == b.gen)
          out.push_back({{i, static_cast<int>(k), flip}, detail::splice(w, i, left, right)});
      }
    }
  }
  return out;
}

/// Every word reachable by exactly one reversing step, positional order then relation order.
inline std::vector<GroupWord> rr_successors(const GroupWord& w, const Presentation& pres) {
  std::vector<GroupWord> out;
  std::unordered_set<GroupWord, GroupWordHash> seen;
  for (auto& m : rr_moves(w, pres))
    if (seen.insert(m.result).second) out.push_back(std::move(m.result));
  return out;
}

/// Applies a single recorded step, or returns nullopt if it does not match.
inline std::optional<GroupWord> apply_rr_step(const GroupWord& w, const RrStep& s, const Presentation& pres) {
  for (auto& m : rr_moves(w, pres))
    if (m.step == s) return m.result;
  return std::nullopt;
}

enum class EqualityStatus { Equal, NotEqualWithinBudget, BudgetExhausted };

inline std::string_view to_string(EqualityStatus s) {
  switch (s) {
    case EqualityStatus::Equal:
      return "Equal";
    case EqualityStatus::NotEqualWithinBudget:
      return "NotEqualWithinBudget";
    default:
      return "BudgetExhausted";
  }
}

struct EqualityResult {
  EqualityStatus status = EqualityStatus::BudgetExhausted;
  std::vector<RrStep> path;  ///< steps from u^-1 v down to the empty word
  std::size_t expanded = 0;
  bool exhausted_search = false;  ///< the whole reachable set was explored
};

namespace detail {

/// Breadth-first search over reversing steps until `goal` holds.
template <class Goal>
std::pair<std::optional<GroupWord>, EqualityResult> rr_search(const GroupWord& start, const Presentation& pres,
                                                              long long budget, Goal goal) {
  if (budget <= 0) throw Error("budget must be positive");
  struct Node {
    GroupWord word;
    std::size_t parent;
    RrStep step;
  };
  std::vector<Node> nodes;
  std::unordered_map<GroupWord, std::size_t, GroupWordHash> seen;
  nodes.push_back({start, 0, {}});
  seen.emplace(start, 0);
  EqualityResult res;
  auto trace = [&](std::size_t idx) {
    std::vector<RrStep> path;
    while (idx != 0) {
      path.push_back(nodes[idx].step);
      idx = nodes[idx].parent;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };
  if (goal(start)) {
    res.status = EqualityStatus::Equal;
    return {start, res};
  }
  std::size_t head = 0;
  while (head < nodes.size()) {
    if (static_cast<long long>(res.expanded) >= budget) {
      res.status = EqualityStatus::BudgetExhausted;
      return {std::nullopt, res};
    }
    std::size_t cur = head++;
    ++res.expanded;
    GroupWord w = nodes[cur].word;
    for (auto& m : rr_moves(w, pres)) {
      if (seen.count(m.result)) continue;
      seen.emplace(m.result, nodes.size());
      nodes.push_back({m.result, cur, m.step});
      if (goal(nodes.back().word)) {
        res.status = EqualityStatus::Equal;
        res.path = trace(nodes.size() - 1);
        return {nodes.back().word, res};
      }
    }
  }
  res.status = EqualityStatus::NotEqualWithinBudget;
  res.exhausted_search = true;
  return {std::nullopt, res};
}

}  // namespace detail

/// Decides u = v in P by searching for a reversing path from u^-1 v to the empty word.
inline EqualityResult decide_equal_rr(const MonoidWord& u, const MonoidWord& v, const Presentation& pres,
                                      long long budget) {
  GroupWord start = GroupWord(u).inverse() * GroupWord(v);
  auto [found, res] = detail::rr_search(start, pres, budget, [](const GroupWord& w) { return w.empty(); });
  if (res.status == EqualityStatus::NotEqualWithinBudget && !pres.complete())
    res.status = EqualityStatus::BudgetExhausted;
  return res;
}

/// Replays a witness path; true iff it is a valid sequence of steps ending in the empty word.
inline bool replay_rr_path(const MonoidWord& u, const MonoidWord& v, const std::vector<RrStep>& path,
                           const Presentation& pres) {
  GroupWord w = GroupWord(u).inverse() * GroupWord(v);
  for (const auto& s : path) {
    auto next = apply_rr_step(w, s, pres);
    if (!next) return false;
    w = std::move(*next);
  }
  return w.empty();
}

enum class DivideStatus { Quotient, NoQuotientWithinBudget };

struct DivideResult {
  DivideStatus status = DivideStatus::NoQuotientWithinBudget;
  MonoidWord quotient;
  bool exhausted_search = false;
  bool found() const noexcept { return status == DivideStatus::Quotient; }
};

/// Searches r with p r = x: breadth-first reversing from p^-1 x until a positive word shows up.
inline DivideResult left_divide(const MonoidWord& p, const MonoidWord& x, const Presentation& pres,
                                long long budget) {
  GroupWord start = GroupWord(p).inverse() * GroupWord(x);
  auto [found, res] = detail::rr_search(start, pres, budget, [](const GroupWord& w) { return w.all_positive(); });
  DivideResult out;
  out.exhausted_search = res.exhausted_search;
  if (found) {
    out.status = DivideStatus::Quotient;
    out.quotient = found->positive_word();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Deterministic reversing: always the leftmost pattern, first matching relation.

struct Reversal {
  enum class Kind { Fraction, Stuck, Budget } kind = Kind::Budget;
  MonoidWord numerator;    ///< w = numerator * denominator^-1 when kind == Fraction
  MonoidWord denominator;
  std::size_t steps = 0;
};

inline Reversal reverse_word(GroupWord w, const Presentation& pres, long long budget) {
  Reversal out;
  const auto& rels = pres.relations();
  while (true) {
    std::size_t i = 0;
    while (i + 1 < w.size() && !(w.letters[i].sign < 0 && w.letters[i + 1].sign > 0)) ++i;
    if (i + 1 >= w.size()) break;
    if (static_cast<long long>(out.steps) >= budget) {
      out.kind = Reversal::Kind::Budget;
      return out;
    }
    ++out.steps;
    Letter a = w.letters[i], b = w.letters[i + 1];
    if (a.gen == b.gen) {
      w.letters.erase(w.letters.begin() + i, w.letters.begin() + i + 2);
      continue;
    }
    bool applied = false;
    for (std::size_t k = 0; k < rels.size() && !applied; ++k) {
      for (bool flip : {false, true}) {
        const MonoidWord& left = flip ? rels[k].rhs : rels[k].lhs;
        const MonoidWord& right = flip ? rels[k].lhs : rels[k].rhs;
        if (left[0] == a.gen && right[0] == b.gen) {
          w = detail::splice(w, i, left, right);
          applied = true;
          break;
        }
      }
    }
    if (!applied) {
      out.kind = Reversal::Kind::Stuck;
      return out;
    }
  }
  out.kind = Reversal::Kind::Fraction;
  std::size_t k = 0;
  while (k < w.size() && w.letters[k].sign > 0) out.numerator.letters.push_back(w.letters[k++].gen);
  for (std::size_t j = w.size(); j-- > k;) out.denominator.letters.push_back(w.letters[j].gen);
  return out;
}

// ---------------------------------------------------------------------------
// Congruence closure: all positive words equal to w by applying relations in
// either direction anywhere. Finite for length-preserving presentations.

inline std::vector<MonoidWord> congruence_class(const MonoidWord& w, const Presentation& pres, std::size_t limit) {
  std::vector<MonoidWord> order{w};
  std::unordered_set<MonoidWord, MonoidWordHash> seen{w};
  for (std::size_t head = 0; head < order.size(); ++head) {
    MonoidWord cur = order[head];
    for (const auto& r : pres.relations()) {
      for (bool flip : {false, true}) {
        const MonoidWord& from = flip ? r.rhs : r.lhs;
        const MonoidWord& to = flip ? r.lhs : r.rhs;
        if (from.size() > cur.size()) continue;
        for (std::size_t i = 0; i + from.size() <= cur.size(); ++i) {
          if (!std::equal(from.letters.begin(), from.letters.end(), cur.letters.begin() + i)) continue;
          MonoidWord next;
          next.letters.reserve(cur.size() - from.size() + to.size());
          next.letters.insert(next.letters.end(), cur.letters.begin(), cur.letters.begin() + i);
          next.letters.insert(next.letters.end(), to.letters.begin(), to.letters.end());
          next.letters.insert(next.letters.end(), cur.letters.begin() + i + from.size(), cur.letters.end());
          if (seen.insert(next).second) {
            if (seen.size() > limit) throw BudgetError("congruence class exceeds " + std::to_string(limit) + " words");
            order.push_back(std::move(next));
          }
        }
      }
    }
  }
  std::sort(order.begin(), order.end(), shortlex_less);
  return order;
}

/// All words over `rank` letters with length at most `max_len`, shortlex order.
inline std::vector<MonoidWord> all_words(std::size_t rank, std::size_t max_len) {
  std::vector<MonoidWord> out{MonoidWord{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (GeneratorId g = 0; g < rank; ++g) {
        MonoidWord w = out[i];
        w.letters.push_back(g);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

}  // namespace sgc

#endif  // SGC_WORDS_HPP
