#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>

#include "sgc/catalog.hpp"
#include "sgc/ideals.hpp"

using namespace sgc;

namespace {

// Ideals of N \ {1} and its relatives as explicit sets below a cutoff.
constexpr std::int64_t kCut = 80;
using IntSet = std::set<std::int64_t>;

IntSet members(const NumericalSemigroup& s) {
  IntSet out;
  for (std::int64_t n = 0; n < kCut; ++n)
    if (s.contains(n)) out.insert(n);
  return out;
}

IntSet image(std::int64_t k, const IntSet& X) {
  IntSet out;
  for (auto n : X)
    if (n + k < kCut) out.insert(n + k);
  return out;
}

IntSet preimage(std::int64_t k, const IntSet& X, const IntSet& P) {
  IntSet out;
  for (auto n : P)
    if (n + k < kCut && X.count(n + k)) out.insert(n);
  return out;
}

bool same_below(const NatIdeal& X, const IntSet& Y, std::int64_t upto) {
  for (std::int64_t n = 0; n < upto; ++n)
    if (X.contains(n) != (Y.count(n) > 0)) return false;
  return true;
}

// Free monoid on a, b as strings, truncated at length 10.
using WordSet = std::set<std::string>;
constexpr std::size_t kWordCut = 10;

WordSet all_strings(std::size_t n) {
  WordSet out{""};
  std::vector<std::string> layer{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& w : layer)
      for (char c : {'a', 'b'}) next.push_back(w + c);
    out.insert(next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

WordSet chain_on_strings(const HullElement& s, const MonoidBackend& m) {
  WordSet X = all_strings(kWordCut);
  for (auto it = s.chain.rbegin(); it != s.chain.rend(); ++it) {
    std::string g = m.format(it->operand);
    WordSet Y;
    if (it->kind == Move::Kind::Mult) {
      for (const auto& x : X)
        if (x.size() + g.size() <= kWordCut) Y.insert(g + x);
    } else {
      for (const auto& x : X)
        if (x.starts_with(g)) Y.insert(x.substr(g.size()));
    }
    X = std::move(Y);
  }
  return X;
}

std::string letters_of(const Elem& x, const MonoidBackend& m) {
  std::string s;
  for (const auto& l : m.group_word(x).letters) s += static_cast<char>('a' + l.gen);
  return s;
}

}  // namespace

TEST(NatIdeal, OperationsMatchSets) {
  std::mt19937_64 rng(7);
  for (auto gaps : std::vector<std::vector<std::int64_t>>{{}, {1}, {1, 2, 4, 7}, {1, 2}}) {
    NumericalSemigroup s(gaps);
    auto P = members(s);
    for (int trial = 0; trial < 200; ++trial) {
      NatIdeal X = NatIdeal::full(s);
      IntSet Y = P;
      for (int step = 0; step < 4; ++step) {
        std::int64_t k = s.generators()[rng() % s.generators().size()];
        if (rng() % 2) {
          X = X.shifted(k);
          Y = image(k, Y);
        } else {
          X = X.preimage(s, k);
          Y = preimage(k, Y, P);
        }
        ASSERT_TRUE(same_below(X, Y, kCut - 20)) << s.name() << " trial " << trial;
      }
    }
  }
}

TEST(NatIdeal, UnionAndIntersection) {
  NumericalSemigroup s({1});
  auto a = NatIdeal::principal(s, 2), b = NatIdeal::principal(s, 3);
  auto meet = a.intersect(b);
  EXPECT_EQ(meet.min(), 5);
  EXPECT_TRUE(meet.contains(6));
  EXPECT_FALSE(NatIdeal::principal(s, 5).contains(6));
  EXPECT_EQ(NatIdeal::principal(s, 5).unite(NatIdeal::principal(s, 6)), meet);
  EXPECT_TRUE(NatIdeal::empty().is_empty());
}

TEST(Hull, ParseFormatRoundTrip) {
  auto e = catalog_instance("free2");
  const auto& m = *e.backend;
  auto s = parse_hull("div:b mul:a.b mul:a", m);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(format_hull(s, m), "div:b mul:a.b mul:a");
  EXPECT_EQ(format_hull(HullElement{}, m), "id");
  EXPECT_EQ(s.inverse().inverse(), s);
  EXPECT_THROW(parse_hull("mul:a bogus", m), Error);
}

TEST(Hull, LastMoveActsFirst) {
  auto e = catalog_instance("free2");
  const auto& m = *e.backend;
  auto s = parse_hull("div:a mul:b", m);
  EXPECT_EQ(apply_hull(s, m.parse("a"), m, 100).status, Tri::No);
  auto t = parse_hull("mul:b div:a", m);
  auto r = apply_hull(t, m.parse("a.a"), m, 100);
  ASSERT_EQ(r.status, Tri::Yes);
  EXPECT_EQ(m.format(r.value), "b.a");
}

TEST(Enumeration, NumericalChainsMatchSets) {
  auto e = catalog_instance("numerical:1");
  const auto& m = *e.backend;
  NumericalSemigroup s({1});
  auto P = members(s);
  EnumerationOptions eo;
  eo.depth = 3;
  auto en = enumerate_ideals(m, eo);
  std::set<IntSet> seen;
  for (const auto& X : en.ideals) {
    IntSet Y = P;
    for (auto it = X.chain.chain.rbegin(); it != X.chain.chain.rend(); ++it) {
      std::int64_t k = std::stoll(m.format(it->operand));
      Y = it->kind == Move::Kind::Mult ? image(k, Y) : preimage(k, Y, P);
    }
    for (const auto& x : m.ball(8)) {
      std::int64_t n = std::stoll(m.format(x));
      EXPECT_EQ(ideal_membership(x, X.ideal, m, 2000) == Tri::Yes, Y.count(n) > 0) << X.id << " at " << n;
    }
    IntSet low;
    for (auto n : Y)
      if (n < 40) low.insert(n);
    EXPECT_TRUE(seen.insert(low).second) << "duplicate " << X.id;
  }
}

TEST(Enumeration, FreeChainsMatchStrings) {
  auto e = catalog_instance("free2");
  const auto& m = *e.backend;
  EnumerationOptions eo;
  eo.depth = 3;
  auto en = enumerate_ideals(m, eo);
  auto ball = m.ball(6);
  for (const auto& X : en.ideals) {
    auto Y = chain_on_strings(X.chain, m);
    for (const auto& x : ball)
      EXPECT_EQ(ideal_membership(x, X.ideal, m, 2000) == Tri::Yes, Y.count(letters_of(x, m)) > 0)
          << X.id << " at " << m.format(x);
  }
}

TEST(Enumeration, FrozenCounts) {
  // derived from the set and string oracles above at depth 2
  std::vector<std::pair<std::string, std::size_t>> expected{
      {"nat", 3}, {"free2", 8}, {"nat2", 6}, {"numerical:1", 8}, {"braid:3", 7}};
  EnumerationOptions eo;
  eo.depth = 2;
  for (const auto& [name, n] : expected) {
    auto e = catalog_instance(name);
    EXPECT_EQ(enumerate_ideals(*e.backend, eo).ideals.size(), n) << name;
  }
}

TEST(Enumeration, FreeCountMatchesStringOracle) {
  auto e = catalog_instance("free2");
  const auto& m = *e.backend;
  for (std::size_t depth : {1u, 2u, 3u}) {
    // every chain of generator moves up to the depth, deduplicated on words of length <= 6
    std::set<WordSet> distinct;
    std::vector<HullElement> frontier{HullElement{}};
    for (std::size_t d = 0; d <= depth; ++d) {
      std::vector<HullElement> next;
      for (const auto& s : frontier) {
        WordSet low;
        for (const auto& w : chain_on_strings(s, m))
          if (w.size() <= 6) low.insert(w);
        distinct.insert(low);
        if (d == depth) continue;
        for (std::size_t g = 0; g < 2; ++g)
          for (auto k : {Move::Kind::Mult, Move::Kind::Divide}) {
            HullElement t;
            t.chain.push_back({k, m.generator(g)});
            t.chain.insert(t.chain.end(), s.chain.begin(), s.chain.end());
            next.push_back(t);
          }
      }
      frontier = std::move(next);
    }
    EnumerationOptions eo;
    eo.depth = depth;
    EXPECT_EQ(enumerate_ideals(m, eo).ideals.size(), distinct.size()) << "depth " << depth;
  }
}

TEST(Enumeration, GraphProductIdsAreStandardForms) {
  auto g = GraphSpec::path(3);
  GraphProductMonoid m(g, "path");
  EnumerationOptions eo;
  eo.depth = 2;
  auto en = enumerate_ideals(m, eo);
  EXPECT_TRUE(en.exact);
  EXPECT_EQ(en.ideals.size(), 12u);
  for (const auto& X : en.ideals) {
    ASSERT_EQ(X.ideal.shape == RightIdeal::Shape::Standard || X.ideal.shape == RightIdeal::Shape::Empty ||
                  X.ideal.shape == RightIdeal::Shape::Full,
              true);
    if (X.ideal.shape == RightIdeal::Shape::Standard)
      EXPECT_EQ(parse_gp_ideal(format_gp_ideal(X.ideal.standard, g), g), X.ideal.standard);
  }
}

TEST(Enumeration, BraidUnresolvedAreReported) {
  auto e = catalog_instance("braid:3");
  EnumerationOptions eo;
  eo.depth = 2;
  auto en = enumerate_ideals(*e.backend, eo);
  EXPECT_FALSE(en.exact);
  EXPECT_EQ(en.unresolved.size(), 2u);
  for (const auto& X : en.ideals) EXPECT_TRUE(X.principal_up_to_L.has_value()) << X.id;
}

TEST(GPIdeal, IntersectionOfVertexIdeals) {
  auto g = GraphSpec::complete(2);
  auto a = parse_gp_ideal("a*P", g), b = parse_gp_ideal("b*P", g);
  auto ab = gp_ideal_intersect(a, b, g);
  EXPECT_EQ(format_gp_ideal(ab, g), "a.b*P");
  EXPECT_EQ(gp_ideal_compare(ab, a, g), Comparison::XinY);
  EXPECT_EQ(gp_ideal_compare(a, b, g), Comparison::Incomparable);
  auto d = GraphSpec::discrete(2);
  EXPECT_TRUE(gp_ideal_intersect(parse_gp_ideal("a*P", d), parse_gp_ideal("b*P", d), d).empty);
}
