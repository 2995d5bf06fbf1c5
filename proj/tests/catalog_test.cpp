#include <gtest/gtest.h>

#include <random>

#include "sgc/catalog.hpp"

using namespace sgc;

namespace {

const std::string kSamples = SGC_SAMPLES_DIR;

// x in gR by dividing through the conjugate of g
bool divides(QuadElem g, QuadElem x) {
  std::int64_t N = g.norm();
  return (x.m * g.m + 3 * x.n * g.n) % N == 0 && (x.n * g.m - x.m * g.n) % N == 0;
}

}  // namespace

TEST(Catalog, EveryFamilyInstantiates) {
  for (const char* name : {"nat", "nat2", "free2", "freeprod:3", "numerical:1", "numerical:1,2,4", "braid:3", "braid:4",
                           "bs:1,2", "thompson", "thompson-op", "axb-Z", "quad-ring-ax-b"}) {
    auto e = catalog_instance(name);
    EXPECT_EQ(e.name, name);
    EXPECT_FALSE(e.description.empty()) << name;
    for (const auto& a : e.annotations) EXPECT_FALSE(a.anchor.empty()) << name << " " << a.key;
  }
}

TEST(Catalog, FileSources) {
  auto p = catalog_instance("pres:" + kSamples + "/braid3.pres");
  ASSERT_TRUE(p.backend);
  EXPECT_EQ(p.backend->rank(), 2u);
  auto g = catalog_instance("raam:" + kSamples + "/path3.graph");
  ASSERT_TRUE(g.backend && g.backend->graph());
  EXPECT_EQ(g.backend->graph()->size(), 3u);
  EXPECT_TRUE(g.principal);
  auto n = catalog_instance("raam:" + kSamples + "/numerical_edge.graph");
  EXPECT_FALSE(n.principal);
  EXPECT_THROW(catalog_instance("raam:" + kSamples + "/missing.graph"), Error);
}

TEST(Catalog, UnknownAndMalformedNames) {
  EXPECT_THROW(catalog_instance("nosuch"), Error);
  EXPECT_THROW(catalog_instance("bs:1"), Error);
  EXPECT_THROW(catalog_instance("numerical:2"), Error);
}

TEST(Catalog, NamesListEveryFamily) {
  auto names = catalog_names();
  for (const char* n : {"nat", "free2", "braid:n", "thompson", "axb-Z", "quad-ring-ax-b"})
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
}

TEST(Catalog, BaumslagSolitarRelation) {
  auto e = catalog_instance("bs:1,2");
  ASSERT_TRUE(e.presentation);
  ASSERT_EQ(e.presentation->relations().size(), 1u);
  const auto& r = e.presentation->relations()[0];
  EXPECT_EQ(r.lhs.size(), 2u);
  EXPECT_EQ(r.rhs.size(), 3u);
  const auto& m = *e.backend;
  EXPECT_EQ(m.parse("a.b"), m.parse("b^2.a"));
  EXPECT_NE(m.parse("a.b"), m.parse("b.a"));
}

TEST(Catalog, UnitsOfTheRingEntries) {
  EXPECT_EQ(catalog_instance("axb-Z").units, "Z x| {+-1}");
  EXPECT_FALSE(catalog_instance("quad-ring-ax-b").trivial_units);
  EXPECT_TRUE(catalog_instance("free2").trivial_units);
}

TEST(QuadRing, NormIsMultiplicative) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    QuadElem a{static_cast<std::int64_t>(rng() % 41) - 20, static_cast<std::int64_t>(rng() % 41) - 20};
    QuadElem b{static_cast<std::int64_t>(rng() % 41) - 20, static_cast<std::int64_t>(rng() % 41) - 20};
    EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
  }
}

TEST(QuadRing, PrincipalMembershipMatchesDivision) {
  for (QuadElem g : {QuadElem{2, 0}, QuadElem{1, 1}, QuadElem{-1, 1}, QuadElem{3, 1}, QuadElem{0, 2}}) {
    QuadIdeal I{{g}};
    for (std::int64_t m = -12; m <= 12; ++m)
      for (std::int64_t n = -12; n <= 12; ++n)
        EXPECT_EQ(qr_ideal_membership({m, n}, I), divides(g, {m, n})) << g.to_string() << " at " << m << "," << n;
  }
}

TEST(QuadRing, RbarTwoIsTheParityLattice) {
  QuadIdeal X{{QuadElem{1, 1}}, QuadElem{2, 0}};
  auto lat = qr_ideal_lattice(X);
  EXPECT_EQ(lat.index(), 2);
  for (std::int64_t m = -10; m <= 10; ++m)
    for (std::int64_t n = -10; n <= 10; ++n) {
      bool parity = (m - n) % 2 == 0;
      EXPECT_EQ(lat.contains(m, n), parity);
      EXPECT_EQ(qr_ideal_membership({m, n}, X), parity);
    }
  EXPECT_THROW(qr_ideal_membership({1, 0}, QuadIdeal{{QuadElem{0, 0}}}), Error);
}

TEST(QuadRing, Formatting) {
  EXPECT_EQ((QuadElem{1, 1}).to_string(), "1+i3");
  EXPECT_EQ((QuadElem{-1, 1}).to_string(), "-1+i3");
  EXPECT_EQ((QuadElem{0, -2}).to_string(), "-2i3");
  EXPECT_EQ((QuadElem{2, 0}).to_string(), "2");
}

TEST(Lattice2, HermiteNormalForm) {
  auto l = Lattice2::span({{2, 0}, {1, 1}});
  EXPECT_EQ(l.index(), 2);
  EXPECT_TRUE(l.contains(1, 1));
  EXPECT_FALSE(l.contains(1, 0));
  EXPECT_TRUE(Lattice2::span({{4, 0}, {0, 4}}).subset_of(l));
  EXPECT_EQ(Lattice2::span({{1, 1}, {2, 0}}), l);
}
