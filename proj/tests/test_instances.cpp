#include <doctest.h>

#include <algorithm>

#include "idealord/instances.hpp"

using namespace idealord;

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<std::uint64_t>{1});
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(30).size() == 8);
  CHECK(divisors(60).size() == 12);
  CHECK(divisors(97) == std::vector<std::uint64_t>{1, 97});
  CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("divisor semigroup table values") {
  DivisorSemigroup d12 = build_divisor_semigroup(12);
  auto mul_of = [&](std::uint64_t a, std::uint64_t b) {
    auto pos = [&](std::uint64_t v) {
      return std::find(d12.divisor_list.begin(), d12.divisor_list.end(), v) -
             d12.divisor_list.begin();
    };
    return d12.divisor_list[d12.table.mul(pos(a), pos(b))];
  };
  CHECK(mul_of(4, 6) == 12);  // gcd(24, 12)
  CHECK(mul_of(2, 3) == 6);
  CHECK(mul_of(1, 6) == 6);   // 1 is the identity
  CHECK(mul_of(12, 4) == 12); // 12 is absorbing

  DivisorSemigroup d9 = build_divisor_semigroup(9);
  CHECK(d9.divisor_list == std::vector<std::uint64_t>{1, 3, 9});
  CHECK(d9.divisor_list[d9.table.mul(1, 1)] == 9);  // 3*3 = gcd(9,9) = 9

  // identity and absorbing element in every D(n)
  for (std::uint64_t n : {2, 8, 30, 100}) {
    DivisorSemigroup d = build_divisor_semigroup(n);
    const std::size_t k = d.table.size();
    for (std::size_t i = 0; i < k; ++i) {
      CHECK(d.table.mul(0, i) == i);
      CHECK(d.table.mul(i, 0) == i);
      CHECK(d.table.mul(k - 1, i) == k - 1);
      CHECK(d.table.leq(0, i));
      CHECK(d.table.leq(i, k - 1));
    }
  }
}

TEST_CASE("ideal semigroup of Z_n") {
  FiniteOrderedSemigroup s = build_ideal_semigroup_zn(12);
  CHECK(s.size() == 6);
  CHECK(s.label(0) == "1");
  CHECK(s.label(5) == "12");
  CHECK(s.describe() == "I(Z_12)");
  CHECK(validate(s).passed);
  CHECK_THROWS_AS(build_ideal_semigroup_zn(1), std::invalid_argument);
}

TEST_CASE("I(Z_n) ~ D(n)") {
  for (std::uint64_t n : {2, 6, 12, 30, 60, 97, 128}) {
    CheckReport rep = verify_zn_divisor_iso(n);
    CHECK(rep.passed);
    CHECK(rep.witness.contains("bijection"));
    CHECK(rep.witness["bijection"].size() == divisors(n).size());
  }
}

TEST_CASE("I(Z) ~ naturals under divisibility, sampled") {
  CHECK(verify_z_naturals_iso(2000, 42).passed);
  CHECK(verify_z_naturals_iso(500, 7).passed);
  CHECK_THROWS_AS(verify_z_naturals_iso(0, 42), std::invalid_argument);
}

TEST_CASE("polynomial classes modulo units") {
  PolyClassOps ops(3);
  RingElement f = make_poly(ops.spec, {2, 2});       // 2x+2
  CHECK(ops.class_of(f) == make_poly(ops.spec, {1, 1}));
  CHECK(ops.class_of(zero(ops.spec)) == zero(ops.spec));
  CHECK(ops.class_mul(make_poly(ops.spec, {0, 2}), make_poly(ops.spec, {2})) ==
        make_poly(ops.spec, {0, 1}));
  // 2x^2+x+2 = 2(x+1)^2 over F_3
  CHECK(ops.class_divides(make_poly(ops.spec, {1, 1}), make_poly(ops.spec, {2, 1, 2})));
  CHECK_FALSE(ops.class_divides(make_poly(ops.spec, {0, 1}), make_poly(ops.spec, {1, 1})));
  CHECK_THROWS_AS(ops.class_of(make_integer(3)), SpecMismatchError);
}

TEST_CASE("I(F_p[x]) matches the unit-class quotient, sampled") {
  for (std::uint64_t p : {2, 3, 5}) CHECK(verify_poly_class_iso(p, 1000, 42).passed);
}

TEST_CASE("triangular matrix counterexample") {
  for (std::uint64_t p : {2, 3, 5}) {
    CheckReport rep = run_counterexample(p);
    CHECK(rep.passed);
    CHECK(rep.witness["I1*I2"].size() == p);
    CHECK(rep.witness["closure(E11*E22)"].size() == 1);
    CHECK(rep.witness["I1*I2"] == rep.witness["closure(E12)"]);
  }
  CHECK_THROWS_AS(run_counterexample(4), std::invalid_argument);
  CHECK_THROWS_AS(run_counterexample(7), std::invalid_argument);
}

TEST_CASE("sampled laws hold for the infinite families") {
  CHECK(verify_sampled_laws(RingSpec::integers(), 2000, 42).passed);
  for (std::uint64_t p : {2, 3, 5}) CHECK(verify_sampled_laws(RingSpec::poly(p), 1000, 42).passed);
}

TEST_CASE("sampling is deterministic and respects the spec") {
  SplitMix64 a(9), b(9);
  RingSpec z = RingSpec::integers();
  RingSpec f5x = RingSpec::poly(5);
  for (int i = 0; i < 100; ++i) {
    CHECK(sample_element(z, a) == sample_element(z, b));
    RingElement f = sample_element(f5x, a, 4);
    CHECK(sample_element(f5x, b, 4) == f);
    const auto& c = std::get<PolyCoeffs>(f.value);
    CHECK(c.size() <= 5);
    if (!c.empty()) CHECK(c.back() != 0);
  }
  CHECK_THROWS_AS(sample_element(RingSpec::triangular(2), a), UnsupportedFamilyError);
}
