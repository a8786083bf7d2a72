#include <doctest.h>

#include <algorithm>

#include "idealord/instances.hpp"
#include "idealord/ordered_semigroup.hpp"

using namespace idealord;

namespace {

// {z, a}: everything multiplies to z, z below a.
FiniteOrderedSemigroup null_semigroup() {
  return FiniteOrderedSemigroup({"z", "a"}, {0, 0, 0, 0}, {1, 1, 0, 1});
}

// two-element chain with constant multiplication onto the bottom element
FiniteOrderedSemigroup constant_chain() {
  return FiniteOrderedSemigroup({"b", "t"}, {0, 0, 0, 0}, {1, 1, 0, 1});
}

std::vector<std::size_t> idx(std::initializer_list<std::size_t> v) { return v; }

}  // namespace

TEST_CASE("constructor rejects malformed tables") {
  CHECK_THROWS_AS(FiniteOrderedSemigroup({}, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteOrderedSemigroup({"a"}, {0, 0}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteOrderedSemigroup({"a", "b"}, {0, 1, 2, 0}, {1, 0, 0, 1}),
                  std::invalid_argument);  // mul entry out of range
}

TEST_CASE("validate passes on the built instances") {
  for (std::uint64_t n : {2, 6, 12, 30, 60}) {
    CHECK(validate(build_ideal_semigroup_zn(n)).passed);
    CHECK(validate(build_divisor_semigroup(n).table).passed);
  }
  CHECK(validate(null_semigroup()).passed);
}

TEST_CASE("validate reports the least counterexample per axiom") {
  // break associativity in D(8): force 2*2 = 1 so (2*2)*4 != 2*(2*4)
  // divisors of 8 are 1,2,4,8 at indices 0..3
  FiniteOrderedSemigroup good = build_divisor_semigroup(8).table;
  auto j = good.to_json();

  auto corrupt = [&](const char* table, int r, int c, int v) {
    auto jj = j;
    jj[table][r][c] = v;
    return FiniteOrderedSemigroup::from_json(jj);
  };

  CheckReport assoc = validate(corrupt("mul", 1, 1, 0));
  CHECK_FALSE(assoc.passed);
  REQUIRE(assoc.counterexample.contains("associativity"));
  // least violating triple: (1,1,1) -> labels all "2"
  CHECK(assoc.counterexample["associativity"]["i"] == "2");

  CheckReport refl = validate(corrupt("leq", 2, 2, 0));
  CHECK_FALSE(refl.passed);
  CHECK(refl.counterexample["order"]["axiom"] == "reflexive");
  CHECK(refl.counterexample["order"]["i"] == "4");

  CheckReport anti = validate(corrupt("leq", 2, 1, 1));  // 4 <= 2 added
  CHECK_FALSE(anti.passed);
  CHECK(anti.counterexample["order"]["axiom"] == "antisymmetric");

  CheckReport trans = validate(corrupt("leq", 0, 3, 0));  // drop 1 <= 8
  CHECK_FALSE(trans.passed);
  CHECK(trans.counterexample["order"]["axiom"] == "transitive");

  CheckReport compat = validate(corrupt("mul", 3, 3, 0));  // 8*8 = 1
  CHECK_FALSE(compat.passed);
  // 4 <= 8 but 4*8 = 8 is not <= 8*8 = 1
  CHECK(compat.counterexample.contains("compatibility"));
}

TEST_CASE("serial and parallel validation agree") {
  auto agree = [](const FiniteOrderedSemigroup& s) {
    CheckReport a = validate(s, Exec::Parallel);
    CheckReport b = validate_serial(s);
    CHECK(a.passed == b.passed);
    CHECK(a.counterexample == b.counterexample);
  };
  agree(build_divisor_semigroup(360).table);
  agree(build_ideal_semigroup_zn(64));

  // also on broken tables, where the least-counterexample choice matters
  auto j = build_divisor_semigroup(36).table.to_json();
  j["mul"][3][4] = 0;
  j["leq"][2][2] = 0;
  j["leq"][0][5] = 0;
  agree(FiniteOrderedSemigroup::from_json(j));
}

TEST_CASE("downward_closure") {
  // D(12): divisors 1,2,3,4,6,12 at indices 0..5
  FiniteOrderedSemigroup s = build_divisor_semigroup(12).table;
  CHECK(downward_closure(s, idx({3})) == idx({0, 1, 3}));      // (4] = {1,2,4}
  CHECK(downward_closure(s, idx({4})) == idx({0, 1, 2, 4}));   // (6] = {1,2,3,6}
  CHECK(downward_closure(s, idx({5})) == idx({0, 1, 2, 3, 4, 5}));
  CHECK(downward_closure(s, idx({})).empty());
  CHECK_THROWS_AS(downward_closure(s, idx({9})), std::out_of_range);

  // extensive, monotone and idempotent
  for (std::size_t a = 0; a < s.size(); ++a) {
    auto c = downward_closure(s, idx({a}));
    CHECK(std::find(c.begin(), c.end(), a) != c.end());
    CHECK(downward_closure(s, c) == c);
    for (std::size_t b = 0; b < s.size(); ++b)
      if (s.leq(a, b)) {
        auto cb = downward_closure(s, idx({b}));
        CHECK(std::includes(cb.begin(), cb.end(), c.begin(), c.end()));
      }
  }
}

TEST_CASE("principal ordered ideals") {
  // commutative instance: left = right = two-sided
  FiniteOrderedSemigroup s = build_ideal_semigroup_zn(12);
  for (std::size_t a = 0; a < s.size(); ++a) {
    PrincipalIdeals pi = principal_ordered_ideals(s, a);
    CHECK(pi.left == pi.right);
    CHECK(pi.left == pi.two_sided);
    CHECK(std::find(pi.left.begin(), pi.left.end(), a) != pi.left.end());
  }
  // S<4> reaches <0>, whose downset is everything: L(<4>) = S
  PrincipalIdeals p4 = principal_ordered_ideals(s, 3);
  CHECK(p4.left == idx({0, 1, 2, 3, 4, 5}));

  // constant chain: L(t) = ({t} u {b})] = everything, L(b) = {b}
  FiniteOrderedSemigroup c = constant_chain();
  CHECK(principal_ordered_ideals(c, 1).left == idx({0, 1}));
  CHECK(principal_ordered_ideals(c, 0).left == idx({0}));
}

TEST_CASE("Green's relations on I(Z_n) are universal") {
  for (std::uint64_t n : {12, 30, 60}) {
    FiniteOrderedSemigroup s = build_ideal_semigroup_zn(n);
    GreensStructure g = greens_relations(s);
    const std::size_t k = s.size();
    // one class each, of size tau(n)
    CHECK(class_count(g.L) == 1);
    CHECK(class_count(g.R) == 1);
    CHECK(class_count(g.J) == 1);
    CHECK(class_count(g.H) == 1);
    CHECK(class_count(g.D) == 1);
    CHECK(k == divisors(n).size());
    // cross-oracle: the regular characterization of L agrees
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        CHECK(greens_L_alt(s, a, b) == (g.L[a] == g.L[b]));
  }
}

TEST_CASE("Green's relations on the null semigroup") {
  FiniteOrderedSemigroup s = null_semigroup();
  GreensStructure g = greens_relations(s);
  // L(z) = {z}, L(a) = {z, a}: two classes
  CHECK(class_count(g.L) == 2);
  CHECK(g.L[0] != g.L[1]);
  CHECK(ordered_regular_set(s) == idx({0}));  // a <= aza = z fails
}

TEST_CASE("classify I(Z_n): all six properties hold") {
  for (std::uint64_t n : {2, 6, 12, 30, 60}) {
    Classification c = classify(build_ideal_semigroup_zn(n));
    CHECK(c.intra_regular);
    CHECK(c.completely_regular);
    CHECK(c.group_like);
    CHECK(c.clifford);
    CHECK(c.inverse_ordered);
    CHECK(c.all_ordered_idempotent);
    CHECK(c.all());
    CHECK(c.ordered_idempotents.size() == divisors(n).size());
    // <1> at index 0 is an ordered inverse of everything
    for (const auto& inv : c.ordered_inverses)
      CHECK(std::find(inv.begin(), inv.end(), std::size_t{0}) != inv.end());
  }
}

TEST_CASE("classify the null semigroup: not regular") {
  Classification c = classify(null_semigroup());
  CHECK_FALSE(c.all_ordered_idempotent);
  CHECK_FALSE(c.completely_regular);
  CHECK(c.details.contains("all_ordered_idempotent"));
  CHECK(c.details["all_ordered_idempotent"]["counterexample"] == "a");
}

TEST_CASE("find_isomorphism") {
  // I(Z_n) ~ D(n) with the identity index map available
  for (std::uint64_t n : {12, 30, 36}) {
    auto m = find_isomorphism(build_ideal_semigroup_zn(n), build_divisor_semigroup(n).table);
    REQUIRE(m.has_value());
    FiniteOrderedSemigroup s = build_ideal_semigroup_zn(n);
    FiniteOrderedSemigroup t = build_divisor_semigroup(n).table;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j) {
        CHECK(t.mul((*m)[i], (*m)[j]) == (*m)[s.mul(i, j)]);
        CHECK(s.leq(i, j) == t.leq((*m)[i], (*m)[j]));
      }
  }
  // same size, different order structure: 6 = 2*3 vs 8 = 2^3
  CHECK_FALSE(find_isomorphism(build_divisor_semigroup(6).table,
                               build_divisor_semigroup(8).table).has_value());
  // different sizes
  CHECK_FALSE(find_isomorphism(build_divisor_semigroup(6).table,
                               build_divisor_semigroup(12).table).has_value());
}

TEST_CASE("json round trip") {
  FiniteOrderedSemigroup s = build_divisor_semigroup(12).table;
  FiniteOrderedSemigroup r = FiniteOrderedSemigroup::from_json(s.to_json());
  CHECK(r.size() == s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(r.label(i) == s.label(i));
    for (std::size_t j = 0; j < s.size(); ++j) {
      CHECK(r.mul(i, j) == s.mul(i, j));
      CHECK(r.leq(i, j) == s.leq(i, j));
    }
  }

  auto bad = s.to_json();
  bad["mul"][0].push_back(0);
  CHECK_THROWS_AS(FiniteOrderedSemigroup::from_json(bad), std::invalid_argument);
  CHECK_THROWS_AS(FiniteOrderedSemigroup::from_json(json{{"labels", {"a"}}}),
                  std::invalid_argument);
}
