#ifndef SGC_THOMPSON_HPP
#define SGC_THOMPSON_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "core.hpp"
#include "words.hpp"

namespace sgc {

/// Normal form x_{i1}..x_{ir} x_{js}^-1..x_{j1}^-1 of an element of
/// Thompson's group F, with i1 <= .. <= ir and j1 <= .. <= js; whenever x_i
/// and x_i^-1 both occur, x_{i+1} or x_{i+1}^-1 occurs too.
struct ThompsonNF {
  std::vector<std::uint32_t> positive;
  std::vector<std::uint32_t> negative;

  bool is_positive() const noexcept { return negative.empty(); }
  bool is_identity() const noexcept { return positive.empty() && negative.empty(); }

  GroupWord to_word() const {
    GroupWord w;
    for (auto i : positive) w.letters.push_back({i, 1});
    for (auto it = negative.rbegin(); it != negative.rend(); ++it) w.letters.push_back({*it, -1});
    return w;
  }

  std::string to_string() const {
    if (is_identity()) return "e";
    std::vector<std::string> parts;
    for (auto i : positive) parts.push_back("x" + std::to_string(i));
    for (auto it = negative.rbegin(); it != negative.rend(); ++it) parts.push_back("x" + std::to_string(*it) + "^-1");
    return join(parts, ".");
  }

  auto operator<=>(const ThompsonNF&) const = default;
  bool operator==(const ThompsonNF&) const = default;
};

namespace detail {

/// (P, N) -> (P, N) * x_m^-1, keeping N sorted.
inline void thompson_times_inverse(ThompsonNF& f, std::uint32_t m) {
  std::size_t k = 0;
  while (k < f.negative.size() && f.negative[k] < m) {
    ++m;
    ++k;
  }
  f.negative.insert(f.negative.begin() + static_cast<std::ptrdiff_t>(k), m);
}

/// (P, N) -> (P, N) * x_m: push x_m left through N^-1 = x_{js}^-1 .. x_{j1}^-1.
inline void thompson_times(ThompsonNF& f, std::uint32_t m) {
  for (std::size_t k = 0; k < f.negative.size(); ++k) {
    std::uint32_t j = f.negative[k];
    if (j == m) {
      f.negative.erase(f.negative.begin() + static_cast<std::ptrdiff_t>(k));
      return;
    }
    if (j < m) {
      ++m;
    } else {
      for (std::size_t r = k; r < f.negative.size(); ++r) ++f.negative[r];
      break;
    }
  }
  std::size_t k = f.positive.size();
  while (k > 0 && f.positive[k - 1] > m) {
    ++f.positive[k - 1];
    --k;
  }
  f.positive.insert(f.positive.begin() + static_cast<std::ptrdiff_t>(k), m);
}

inline bool contains_index(const std::vector<std::uint32_t>& v, std::uint32_t i) {
  return std::binary_search(v.begin(), v.end(), i);
}

/// Cancels x_i ... x_i^-1 pairs that violate the uniqueness condition.
inline void thompson_reduce(ThompsonNF& f) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = f.positive.size(); a-- > 0 && !changed;) {
      std::uint32_t i = f.positive[a];
      if (!contains_index(f.negative, i)) continue;
      if (contains_index(f.positive, i + 1) || contains_index(f.negative, i + 1)) continue;
      auto pa = std::find(f.positive.begin(), f.positive.end(), i);
      f.positive.erase(pa);
      auto na = std::find(f.negative.begin(), f.negative.end(), i);
      f.negative.erase(na);
      for (auto& x : f.positive)
        if (x > i) --x;
      for (auto& x : f.negative)
        if (x > i) --x;
      changed = true;
    }
  }
}

}  // namespace detail

inline ThompsonNF thompson_normal_form(const GroupWord& w) {
  ThompsonNF f;
  for (auto l : w.letters) {
    if (l.sign > 0)
      detail::thompson_times(f, l.gen);
    else
      detail::thompson_times_inverse(f, l.gen);
  }
  detail::thompson_reduce(f);
  if (!std::is_sorted(f.positive.begin(), f.positive.end()) || !std::is_sorted(f.negative.begin(), f.negative.end()))
    throw InvariantError("Thompson seminormal form lost its ordering");
  return f;
}

/// The presentation of the Thompson monoid truncated to generators x0..x_{n-1}:
/// x_j x_k = x_k x_{j+1} for k < j and j + 1 <= n - 1.
inline Presentation thompson_presentation(std::size_t n) {
  std::vector<std::string> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back("x" + std::to_string(i));
  std::vector<Relation> rel;
  for (GeneratorId j = 1; j + 1 < n; ++j)
    for (GeneratorId k = 0; k < j; ++k) rel.push_back({MonoidWord{j, k}, MonoidWord{k, j + 1}});
  return Presentation(std::move(gens), std::move(rel), true);
}

}  // namespace sgc

#endif  // SGC_THOMPSON_HPP
