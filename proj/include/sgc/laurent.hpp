#ifndef SGC_LAURENT_HPP
#define SGC_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace sgc {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse Laurent polynomial in x, y with big integer coefficients; zero
/// coefficients are never stored.
class LaurentPoly2 {
 public:
  using Exponent = std::pair<std::int64_t, std::int64_t>;

  LaurentPoly2() = default;
  static LaurentPoly2 monomial(std::int64_t i, std::int64_t j, const BigInt& c = 1) {
    LaurentPoly2 p;
    p.add_term(i, j, c);
    return p;
  }

  void add_term(std::int64_t i, std::int64_t j, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Exponent, BigInt>& terms() const noexcept { return terms_; }
  BigInt coefficient(std::int64_t i, std::int64_t j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Multiplication by x^i y^j.
  LaurentPoly2 shifted(std::int64_t i, std::int64_t j) const {
    LaurentPoly2 r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.first + i, e.second + j}, c);
    return r;
  }

  LaurentPoly2& operator+=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
  }
  LaurentPoly2& operator-=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
  }
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  LaurentPoly2 operator-() const {
    LaurentPoly2 r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
  }
  bool operator==(const LaurentPoly2&) const = default;

  /// Terms in increasing exponent order, e.g. "1 - y", "-1 + x", "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      const auto& [e, c] = *it;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      std::string mono;
      auto var = [&](const char* name, std::int64_t k) {
        if (k == 0) return;
        if (!mono.empty()) mono += "*";
        mono += name;
        if (k != 1) mono += "^" + std::to_string(k);
      };
      var("x", e.first);
      var("y", e.second);
      if (mono.empty())
        out += mag.str();
      else
        out += (mag == 1 ? "" : mag.str() + "*") + mono;
      first = false;
    }
    return out;
  }

 private:
  std::map<Exponent, BigInt> terms_;
};

}  // namespace sgc

#endif  // SGC_LAURENT_HPP
