#ifndef SGC_METABELIAN_HPP
#define SGC_METABELIAN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "laurent.hpp"
#include "words.hpp"

namespace sgc {

/// Image of a word over {a, b} in Z^2 and in the Fox derivatives projected
/// to Z[Z^2]; together they determine the element of F2/F2''.
struct FoxImage {
  std::pair<std::int64_t, std::int64_t> abelianization{0, 0};
  LaurentPoly2 da;
  LaurentPoly2 db;

  bool trivial() const { return abelianization == std::pair<std::int64_t, std::int64_t>{0, 0} && da.is_zero() && db.is_zero(); }
  bool operator==(const FoxImage&) const = default;
  std::string to_string() const {
    return "(" + std::to_string(abelianization.first) + "," + std::to_string(abelianization.second) + ") d/da=" +
           da.to_string() + " d/db=" + db.to_string();
  }
};

/// Letters must be 0 (a) or 1 (b).
inline FoxImage fox_image(const GroupWord& w) {
  FoxImage f;
  auto& [m, n] = f.abelianization;
  for (auto l : w.letters) {
    if (l.gen > 1) throw Error("Fox image is defined on words over {a, b} only");
    LaurentPoly2& d = l.gen == 0 ? f.da : f.db;
    std::int64_t& e = l.gen == 0 ? m : n;
    if (l.sign > 0) {
      d.add_term(m, n, 1);
      ++e;
    } else {
      --e;
      d.add_term(m, n, -1);
    }
  }
  return f;
}

inline bool metabelian_eq(const GroupWord& u, const GroupWord& v) { return fox_image(u * v.inverse()).trivial(); }

/// The unique positive word with this image, if there is one: a positive
/// word is a monotone lattice path whose a-steps (b-steps) start exactly at
/// the monomials of da (db), each with coefficient 1.
inline std::optional<MonoidWord> metabelian_positive_word(const FoxImage& f) {
  auto [m, n] = f.abelianization;
  if (m < 0 || n < 0) return std::nullopt;
  if (f.da.terms().size() != static_cast<std::size_t>(m) || f.db.terms().size() != static_cast<std::size_t>(n))
    return std::nullopt;
  MonoidWord w;
  std::int64_t i = 0, j = 0;
  while (i < m || j < n) {
    if (f.da.coefficient(i, j) == 1) {
      w.letters.push_back(0);
      ++i;
    } else if (f.db.coefficient(i, j) == 1) {
      w.letters.push_back(1);
      ++j;
    } else {
      return std::nullopt;
    }
  }
  if (!(fox_image(GroupWord(w)) == f)) return std::nullopt;
  return w;
}

}  // namespace sgc

#endif  // SGC_METABELIAN_HPP
