#ifndef SGC_NUMERICAL_HPP
#define SGC_NUMERICAL_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace sgc {

/// A numerical semigroup: N minus a finite gap set, closed under addition.
class NumericalSemigroup {
 public:
  NumericalSemigroup() = default;
  explicit NumericalSemigroup(std::vector<std::int64_t> gaps) : gaps_(std::move(gaps)) {
    std::sort(gaps_.begin(), gaps_.end());
    gaps_.erase(std::unique(gaps_.begin(), gaps_.end()), gaps_.end());
    for (auto g : gaps_)
      if (g <= 0) throw Error("gaps of a numerical semigroup must be positive");
    conductor_ = gaps_.empty() ? 0 : gaps_.back() + 1;
    for (std::int64_t a = 1; a < conductor_; ++a)
      for (std::int64_t b = a; a + b < conductor_; ++b)
        if (contains(a) && contains(b) && !contains(a + b))
          throw Error("gap set is not the complement of a submonoid: " + std::to_string(a) + "+" +
                      std::to_string(b) + " is a gap");
    generators_.clear();
    std::int64_t mult = 1;
    while (!contains(mult)) ++mult;
    for (std::int64_t n = 1; n < conductor_ + mult + 1; ++n) {
      if (!contains(n)) continue;
      bool decomposable = false;
      for (std::int64_t a = 1; a <= n / 2 && !decomposable; ++a) decomposable = contains(a) && contains(n - a);
      if (!decomposable) generators_.push_back(n);
    }
  }

  bool contains(std::int64_t n) const {
    return n >= 0 && (n >= conductor_ || !std::binary_search(gaps_.begin(), gaps_.end(), n));
  }
  std::int64_t conductor() const noexcept { return conductor_; }
  const std::vector<std::int64_t>& gaps() const noexcept { return gaps_; }
  const std::vector<std::int64_t>& generators() const noexcept { return generators_; }
  bool is_nat() const noexcept { return gaps_.empty(); }

  /// Minimal number of generators summing to n (n must be in the semigroup).
  std::size_t length(std::int64_t n) const {
    if (n == 0) return 0;
    std::vector<std::size_t> best(static_cast<std::size_t>(n + 1), SIZE_MAX);
    best[0] = 0;
    for (std::int64_t k = 1; k <= n; ++k)
      for (auto g : generators_)
        if (g <= k && best[k - g] != SIZE_MAX) best[k] = std::min(best[k], best[k - g] + 1);
    return best[n];
  }

  /// "nat" or "numerical:1,3".
  std::string name() const {
    if (gaps_.empty()) return "nat";
    std::vector<std::string> parts;
    for (auto g : gaps_) parts.push_back(std::to_string(g));
    return "numerical:" + join(parts, ",");
  }

  bool operator==(const NumericalSemigroup& o) const { return gaps_ == o.gaps_; }

 private:
  std::vector<std::int64_t> gaps_;
  std::int64_t conductor_ = 0;
  std::vector<std::int64_t> generators_{1};
};

/// A right ideal of a numerical semigroup: finitely many members below a
/// threshold t, and everything from t on.
class NatIdeal {
 public:
  static NatIdeal empty() {
    NatIdeal x;
    x.empty_ = true;
    return x;
  }
  static NatIdeal full(const NumericalSemigroup& s) { return principal(s, 0); }
  static NatIdeal principal(const NumericalSemigroup& s, std::int64_t k) {
    return from_predicate([&](std::int64_t n) { return s.contains(n - k); }, k + s.conductor());
  }

  /// pred must hold for every n >= upper.
  template <class Pred>
  static NatIdeal from_predicate(Pred pred, std::int64_t upper) {
    NatIdeal x;
    x.empty_ = false;
    std::int64_t t = std::max<std::int64_t>(upper, 0);
    while (t > 0 && pred(t - 1)) --t;
    x.threshold_ = t;
    for (std::int64_t n = 0; n < t; ++n)
      if (pred(n)) x.members_.push_back(n);
    return x;
  }

  bool is_empty() const noexcept { return empty_; }
  std::int64_t threshold() const noexcept { return threshold_; }
  const std::vector<std::int64_t>& members_below() const noexcept { return members_; }

  bool contains(std::int64_t n) const {
    if (empty_ || n < 0) return false;
    return n >= threshold_ || std::binary_search(members_.begin(), members_.end(), n);
  }
  std::int64_t min() const { return members_.empty() ? threshold_ : members_.front(); }

  NatIdeal shifted(std::int64_t k) const {
    if (empty_) return *this;
    NatIdeal x = *this;
    for (auto& m : x.members_) m += k;
    x.threshold_ += k;
    if (k < 0) throw InvariantError("negative shift of ideal");
    return x;
  }

  /// {y in S : k + y in X}
  NatIdeal preimage(const NumericalSemigroup& s, std::int64_t k) const {
    if (empty_) return *this;
    return from_predicate([&](std::int64_t y) { return s.contains(y) && contains(k + y); },
                          std::max(threshold_ - k, s.conductor()));
  }

  NatIdeal intersect(const NatIdeal& o) const {
    if (empty_ || o.empty_) return empty();
    return from_predicate([&](std::int64_t n) { return contains(n) && o.contains(n); },
                          std::max(threshold_, o.threshold_));
  }
  NatIdeal unite(const NatIdeal& o) const {
    if (empty_) return o;
    if (o.empty_) return *this;
    return from_predicate([&](std::int64_t n) { return contains(n) || o.contains(n); },
                          std::min(threshold_, o.threshold_));
  }

  bool subset_of(const NatIdeal& o) const {
    if (empty_) return true;
    if (o.empty_) return false;
    std::int64_t top = std::max(threshold_, o.threshold_);
    for (std::int64_t n = 0; n <= top; ++n)
      if (contains(n) && !o.contains(n)) return false;
    return true;
  }

  bool is_full(const NumericalSemigroup& s) const { return !empty_ && contains(0) && s.contains(0); }

  /// The generator k when X = k + S.
  std::optional<std::int64_t> principal_generator(const NumericalSemigroup& s) const {
    if (empty_) return std::nullopt;
    std::int64_t k = min();
    if (*this == principal(s, k)) return k;
    return std::nullopt;
  }

  std::string format(const NumericalSemigroup& s) const {
    if (empty_) return "empty";
    if (auto k = principal_generator(s)) return *k == 0 ? "P" : std::to_string(*k) + "+P";
    if (members_.empty()) return std::to_string(threshold_) + "+N";
    std::vector<std::string> parts;
    for (auto m : members_) parts.push_back(std::to_string(m));
    parts.push_back(std::to_string(threshold_) + "+");
    return "{" + join(parts, ",") + "}";
  }

  /// Inverse of format().
  static NatIdeal parse(const NumericalSemigroup& s, std::string_view text) {
    text = trim(text);
    if (text == "empty") return empty();
    if (text == "P") return full(s);
    auto to_int = [&](std::string_view t) {
      t = trim(t);
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc() || ptr != t.data() + t.size() || v < 0)
        throw Error("malformed vertex ideal '" + std::string(text) + "'");
      return v;
    };
    if (text.size() > 2 && text.substr(text.size() - 2) == "+P") return principal(s, to_int(text.substr(0, text.size() - 2)));
    if (text.size() > 2 && text.substr(text.size() - 2) == "+N") {
      auto t = to_int(text.substr(0, text.size() - 2));
      if (t < s.conductor()) throw Error("vertex ideal leaves the semigroup");
      return from_predicate([&](std::int64_t n) { return n >= t; }, t);
    }
    if (text.size() < 3 || text.front() != '{' || text.back() != '}' || text[text.size() - 2] != '+')
      throw Error("malformed vertex ideal '" + std::string(text) + "'");
    std::string_view body = text.substr(1, text.size() - 3);
    std::vector<std::int64_t> nums;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      auto comma = body.find(',', pos);
      nums.push_back(to_int(body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    std::int64_t t = nums.back();
    nums.pop_back();
    auto x = from_predicate(
        [&](std::int64_t n) { return n >= t || std::find(nums.begin(), nums.end(), n) != nums.end(); }, t);
    for (std::int64_t n = 0; n <= x.threshold_; ++n)
      if (x.contains(n) && !s.contains(n)) throw Error("vertex ideal leaves the semigroup");
    return x;
  }

  auto operator<=>(const NatIdeal&) const = default;
  bool operator==(const NatIdeal&) const = default;

 private:
  bool empty_ = true;
  std::int64_t threshold_ = 0;
  std::vector<std::int64_t> members_;
};

}  // namespace sgc

#endif  // SGC_NUMERICAL_HPP
