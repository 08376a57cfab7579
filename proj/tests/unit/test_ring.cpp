#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "oracle.hpp"
#include "zdrlab/catalog.hpp"
#include "zdrlab/errors.hpp"
#include "zdrlab/ring.hpp"

namespace zdrlab {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

TEST(RingSpecParse, ParsesEveryFamily) {
  EXPECT_EQ(parse_ring_spec("Zn:12").family, RingFamily::kZn);
  EXPECT_EQ(parse_ring_spec("Zn:12").n, 12u);
  EXPECT_EQ(parse_ring_spec("Zni:5").family, RingFamily::kZnGauss);
  EXPECT_EQ(parse_ring_spec("GF:9").family, RingFamily::kGF);
  EXPECT_EQ(parse_ring_spec("GF:9").n, 9u);
  EXPECT_EQ(parse_ring_spec("cat:cvA1").catalog_id, "cvA1");

  RingSpec p = parse_ring_spec("prod:(Zn:2,prod:(GF:4,Zni:3))");
  ASSERT_EQ(p.family, RingFamily::kProduct);
  ASSERT_EQ(p.factors.size(), 2u);
  EXPECT_EQ(p.factors[1].family, RingFamily::kProduct);
  EXPECT_EQ(spec_order(p), 2u * 4u * 9u);
}

TEST(RingSpecParse, CanonicalPrinterRoundTrips) {
  for (const char* text : {"Zn:12", "Zni:21", "GF:8", "prod:(Zn:2,GF:9)", "cat:Z4r.r2+r+1", "cat:Zpr.r2:5",
                           "prod:(prod:(Zn:2,Zn:2),Zn:3)"}) {
    EXPECT_EQ(to_string(parse_ring_spec(text)), text);
  }
  EXPECT_THROW(parse_ring_spec("prod:( Zn:2,GF:4)"), SpecParseError);
}

TEST(RingSpecParse, ReportsErrorPositions) {
  try {
    parse_ring_spec("Zn:x");
    FAIL() << "expected SpecParseError";
  } catch (const SpecParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(parse_ring_spec("Foo:3"), SpecParseError);
  EXPECT_THROW(parse_ring_spec("prod:(Zn:2"), SpecParseError);
  EXPECT_THROW(parse_ring_spec("Zn:4 extra"), SpecParseError);
  EXPECT_THROW(parse_ring_spec(""), SpecParseError);
}

TEST(RingSpecParse, RejectsInvalidParameters) {
  EXPECT_THROW(parse_ring_spec("Zn:1"), InvalidSpecError);
  EXPECT_THROW(parse_ring_spec("Zn:0"), InvalidSpecError);
  try {
    parse_ring_spec("GF:6");
    FAIL() << "expected InvalidSpecError";
  } catch (const InvalidSpecError& e) {
    EXPECT_THAT(e.what(), HasSubstr("not a prime power"));
  }
  EXPECT_THROW(parse_ring_spec("cat:no-such-ring"), InvalidSpecError);
  EXPECT_THROW(parse_ring_spec("cat:Zpr.r2:6"), InvalidSpecError);
}

TEST(BuildRing, EnforcesOrderCap) {
  BuildOptions small;
  small.max_order = 100;
  EXPECT_THROW(build_ring("Zn:101", small), OrderCapExceeded);
  EXPECT_NO_THROW(build_ring("Zn:100", small));
  EXPECT_THROW(build_ring("prod:(Zn:64,Zn:128)"), OrderCapExceeded);
  EXPECT_EQ(build_ring("Zni:49").order(), 2401u);
}

TEST(BuildRing, IntegersModNMatchModularArithmetic) {
  for (std::uint64_t n = 2; n <= 40; ++n) {
    FiniteRing r = build_ring(RingSpec::zn(n));
    ASSERT_EQ(r.order(), n);
    for (Element a = 0; a < n; ++a) {
      ASSERT_EQ(r.label(a), std::to_string(a));
      for (Element b = 0; b < n; ++b) {
        ASSERT_EQ(r.add(a, b), (a + b) % n);
        ASSERT_EQ(r.mul(a, b), (a * b) % n);
      }
    }
  }
}

TEST(BuildRing, GaussianIntegersMatchOracleArithmetic) {
  for (int n : {2, 3, 4, 5, 6, 9, 10}) {
    FiniteRing r = build_ring(RingSpec::gaussian(n));
    auto elems = oracle::gaussian_elements(n);
    ASSERT_EQ(r.order(), elems.size());
    for (auto x : elems) {
      auto ex = r.find(oracle::glabel(x));
      ASSERT_TRUE(ex) << oracle::glabel(x);
      for (auto y : elems) {
        auto ey = r.find(oracle::glabel(y));
        ASSERT_EQ(r.label(r.mul(*ex, *ey)), oracle::glabel(oracle::gmul(x, y, n)));
      }
    }
  }
}

TEST(BuildRing, GaloisFieldsAreFields) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 25u, 27u, 49u, 121u}) {
    FiniteRing r = build_ring(RingSpec::gf(q));
    EXPECT_EQ(r.order(), q);
    EXPECT_FALSE(check_ring_axioms(r).has_value()) << q;
    RingProps props = ring_properties(r);
    EXPECT_TRUE(props.is_field) << q;
    EXPECT_EQ(props.units.size(), q - 1);
    EXPECT_TRUE(zero_divisors(r).empty());
  }
}

TEST(BuildRing, FieldModulusIsIrreducibleOutsideTheTable) {
  // GF(11^2) uses the fallback search.
  auto m = field_modulus(11, 2);
  ASSERT_EQ(m.size(), 3u);
  for (std::uint32_t x = 0; x < 11; ++x) EXPECT_NE((m[0] + m[1] * x + m[2] * x * x) % 11, 0u) << x;
}

TEST(BuildRing, ProductRingsPairCoordinates) {
  FiniteRing r = build_ring("prod:(Zn:2,Zn:3)");
  EXPECT_EQ(r.order(), 6u);
  EXPECT_EQ(r.label(r.one()), "(1,1)");
  auto a = *r.find("(1,0)"), b = *r.find("(0,2)");
  EXPECT_EQ(r.label(r.mul(a, b)), "(0,0)");
  EXPECT_EQ(r.label(r.add(a, b)), "(1,2)");
  EXPECT_FALSE(check_ring_axioms(r).has_value());
}

TEST(Catalog, EveryBuiltinEntryIsACommutativeRing) {
  for (const auto& e : Catalog::builtin().entries()) {
    EXPECT_FALSE(check_structure_constants(e.algebra).has_value()) << e.id;
    FiniteRing r = build_ring(RingSpec::catalog(e.id));
    EXPECT_FALSE(check_ring_axioms(r).has_value()) << e.id;
    EXPECT_EQ(r.order(), e.algebra.order()) << e.id;
  }
}

TEST(Catalog, SynthesizesZprEntries) {
  FiniteRing r = build_ring("cat:Zpr.r2:5");
  EXPECT_EQ(r.order(), 25u);
  auto props = ring_properties(r);
  EXPECT_TRUE(props.is_local);
  EXPECT_EQ(zero_divisors(r).size(), 4u);
}

TEST(Catalog, RejectsBrokenStructureConstants) {
  Catalog cat;
  AlgebraBuilder broken({"r"}, {2, 2});
  broken.set("r", "r", {{"", 1}, {"r", 1}});  // r^2 = 1 + r: a field, fine
  cat.add({"ok", "Z2[r]/(r^2+r+1)", broken.build(), false});

  StructureConstants bad;
  bad.basis_labels = {"", "r"};
  bad.moduli = {4, 3};  // 3 does not divide 4
  bad.products = {{1, 0}, {0, 1}, {0, 1}, {0, 0}};
  cat.add({"bad", "not a ring", bad, false});

  BuildOptions opts;
  opts.catalog = &cat;
  EXPECT_TRUE(ring_properties(build_ring("cat:ok", opts)).is_field);
  EXPECT_THROW(build_ring("cat:bad", opts), CatalogValidationError);
}

TEST(Catalog, DetectsNonAssociativeTables) {
  StructureConstants sc;
  sc.basis_labels = {"", "a", "b"};
  sc.moduli = {2, 2, 2};
  // a a = b, a b = 1, b b = 0: (a a) b = 0 but a (a b) = a.
  sc.products = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                 {0, 1, 0}, {0, 0, 1}, {1, 0, 0},
                 {0, 0, 1}, {1, 0, 0}, {0, 0, 0}};
  auto problem = check_structure_constants(sc);
  ASSERT_TRUE(problem.has_value());
  EXPECT_THAT(*problem, HasSubstr("associ"));
}

TEST(ZeroDivisors, MatchOracleForIntegersModN) {
  for (int n = 2; n <= 60; ++n) {
    FiniteRing r = build_ring(RingSpec::zn(n));
    std::vector<Element> expected;
    for (int x : oracle::zn_zero_divisor_graph(n).vertices) expected.push_back(static_cast<Element>(x));
    EXPECT_EQ(zero_divisors(r).members, expected) << n;
  }
}

TEST(ZeroDivisors, AnnihilatorAndNilpotency) {
  FiniteRing r = build_ring("Zn:12");
  EXPECT_THAT(annihilator(r, 4), ElementsAre(0, 3, 6, 9));
  EXPECT_EQ(nilpotency_index(r, 6), 2u);
  EXPECT_FALSE(nilpotency_index(r, 4).has_value());
  FiniteRing z8 = build_ring("Zn:8");
  EXPECT_EQ(nilpotency_index(z8, 2), 3u);
}

TEST(RingProperties, ClassifiesStandardExamples) {
  auto p = ring_properties(build_ring("Zn:9"));
  EXPECT_TRUE(p.is_local);
  EXPECT_FALSE(p.is_reduced);
  EXPECT_FALSE(p.is_integral_domain);

  p = ring_properties(build_ring("Zn:6"));
  EXPECT_FALSE(p.is_local);
  EXPECT_TRUE(p.is_reduced);

  p = ring_properties(build_ring("Zni:3"));
  EXPECT_TRUE(p.is_field);

  p = ring_properties(build_ring("Zni:5"));
  EXPECT_FALSE(p.is_integral_domain);
  EXPECT_TRUE(p.is_reduced);

  p = ring_properties(build_ring("cat:F4r.r2"));
  EXPECT_TRUE(p.is_local);
  EXPECT_EQ(p.nilpotents.size(), 4u);
}

TEST(NumberTheory, PrimesAndPrimePowers) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  auto pp = as_prime_power(125);
  ASSERT_TRUE(pp);
  EXPECT_EQ(pp->prime, 5u);
  EXPECT_EQ(pp->exponent, 3u);
  EXPECT_FALSE(as_prime_power(12).has_value());
}

}  // namespace
}  // namespace zdrlab
