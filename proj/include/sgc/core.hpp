#ifndef SGC_CORE_HPP
#define SGC_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sgc {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text; carries a 1-based line/column position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A search ran out of its node budget where no partial answer makes sense.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// A supposedly impossible state was reached (a library bug, not bad input).
class InvariantError : public Error {
 public:
  using Error::Error;
};

enum class Tri : std::uint8_t { No, Yes, Unknown };

inline std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::No:
      return "no";
    case Tri::Yes:
      return "yes";
    default:
      return "unknown";
  }
}

inline Tri tri_and(Tri a, Tri b) {
  if (a == Tri::No || b == Tri::No) return Tri::No;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::Yes;
}

inline Tri tri_of(bool b) { return b ? Tri::Yes : Tri::No; }

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

template <class Range>
std::string join(const Range& r, std::string_view sep) {
  std::string out;
  bool first = true;
  for (const auto& s : r) {
    if (!first) out += sep;
    out += s;
    first = false;
  }
  return out;
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace sgc

#endif  // SGC_CORE_HPP
