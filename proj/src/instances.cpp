#include "idealord/instances.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace idealord {

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

FiniteOrderedSemigroup build_ideal_semigroup_zn(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  std::vector<Ideal> ideals = ideal_universe_zn(n);
  std::vector<std::uint64_t> divs = divisors(n);
  const std::size_t k = ideals.size();

  std::vector<std::string> labels;
  for (auto d : divs) labels.push_back(std::to_string(d));

  std::vector<std::uint32_t> mul(k * k);
  std::vector<std::uint8_t> leq(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Ideal prod = ideal_mul(ideals[i], ideals[j]);
      auto it = std::find(ideals.begin(), ideals.end(), prod);
      mul[i * k + j] = static_cast<std::uint32_t>(it - ideals.begin());
      leq[i * k + j] = ideal_leq(ideals[i], ideals[j]) ? 1 : 0;
    }
  FiniteOrderedSemigroup s(std::move(labels), std::move(mul), std::move(leq));
  s.set_name("I(Z_" + std::to_string(n) + ")");
  return s;
}

DivisorSemigroup build_divisor_semigroup(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  std::vector<std::uint64_t> divs = divisors(n);
  const std::size_t k = divs.size();

  std::vector<std::string> labels;
  for (auto d : divs) labels.push_back(std::to_string(d));

  std::vector<std::uint32_t> mul(k * k);
  std::vector<std::uint8_t> leq(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t prod = std::gcd(divs[i] * divs[j], n);
      auto it = std::find(divs.begin(), divs.end(), prod);
      if (it == divs.end()) throw std::logic_error("D(n) not closed; divisor enumeration broken");
      mul[i * k + j] = static_cast<std::uint32_t>(it - divs.begin());
      leq[i * k + j] = divs[j] % divs[i] == 0 ? 1 : 0;
    }
  FiniteOrderedSemigroup table(std::move(labels), std::move(mul), std::move(leq));
  table.set_name("D(" + std::to_string(n) + ")");
  return {n, std::move(divs), std::move(table)};
}

CheckReport verify_zn_divisor_iso(std::uint64_t n) {
  CheckReport rep;
  rep.check = "zn_divisor_iso";
  rep.instance = "I(Z_" + std::to_string(n) + ") ~ D(" + std::to_string(n) + ")";

  FiniteOrderedSemigroup zn = build_ideal_semigroup_zn(n);
  DivisorSemigroup dn = build_divisor_semigroup(n);
  const std::size_t k = zn.size();

  if (k != dn.table.size()) {
    rep.fail({{"reason", "size mismatch"}});
    return rep;
  }
  // Both are listed in the same divisor order, so <d> -> d is the identity
  // on indices; the tables must agree entrywise.
  for (std::size_t i = 0; i < k && rep.passed; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (zn.mul(i, j) != dn.table.mul(i, j)) {
        rep.fail({{"law", "phi(<d1><d2>) == phi(<d1>)*phi(<d2>)"},
                  {"d1", zn.label(i)},
                  {"d2", zn.label(j)}});
        break;
      }
      if (zn.leq(i, j) != dn.table.leq(i, j)) {
        rep.fail({{"law", "<d1> <= <d2> iff d1 | d2"}, {"d1", zn.label(i)}, {"d2", zn.label(j)}});
        break;
      }
    }

  // literal table identity d1 * d2 = gcd(d1 d2, n)
  for (std::size_t i = 0; i < k && rep.passed; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t expect = std::gcd(dn.divisor_list[i] * dn.divisor_list[j], n);
      if (dn.divisor_list[dn.table.mul(i, j)] != expect) {
        rep.fail({{"law", "d1*d2 == gcd(d1 d2, n)"}, {"d1", dn.divisor_list[i]}, {"d2", dn.divisor_list[j]}});
        break;
      }
    }

  if (rep.passed) {
    auto found = find_isomorphism(zn, dn.table);
    if (!found) {
      rep.fail({{"reason", "backtracking search found no isomorphism"}});
    } else {
      json map = json::array();
      for (std::size_t i = 0; i < k; ++i)
        map.push_back(json{{"from", zn.label(i)}, {"to", dn.table.label((*found)[i])}});
      rep.witness = {{"bijection", std::move(map)}};
    }
  }
  return rep;
}

RingElement sample_element(const RingSpec& spec, SplitMix64& rng, std::size_t degree_cap) {
  switch (spec.family) {
    case Family::Integer: {
      // log-uniform magnitude in [0, 10^6], signed
      std::uint64_t digits = rng.below(7);  // 10^0 .. 10^6
      std::uint64_t bound = 1;
      for (std::uint64_t i = 0; i < digits; ++i) bound *= 10;
      Int v(rng.below(bound * 10));
      if (rng.below(2)) v = -v;
      return make_integer(v);
    }
    case Family::Poly: {
      std::size_t deg = rng.below(degree_cap + 1);
      PolyCoeffs c(deg + 1);
      for (auto& v : c) v = rng.below(spec.mod);
      if (c.back() == 0) c.back() = 1 + rng.below(spec.mod - 1);
      if (rng.below(8) == 0) return zero(spec);  // keep zero in the mix
      return make_poly(spec, std::move(c));
    }
    case Family::Modular:
      return RingElement{spec, rng.below(spec.mod)};
    default:
      throw UnsupportedFamilyError("sampling supports Z, Z_n and F_p[x]");
  }
}

CheckReport verify_z_naturals_iso(std::size_t sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw std::invalid_argument("need at least one sample");
  CheckReport rep;
  rep.check = "z_naturals_iso";
  rep.instance = "I(Z) ~ (N0, ., |), seed " + std::to_string(seed);

  RingSpec spec = RingSpec::integers();
  SplitMix64 rng(seed);

  auto nat_of = [](const Ideal& A) { return abs(std::get<Int>(A.gen.value)); };

  for (std::size_t i = 0; i < sample_count; ++i) {
    RingElement x = sample_element(spec, rng);
    RingElement y = sample_element(spec, rng);
    Ideal A = Ideal::of(x), B = Ideal::of(y);

    // n and -n generate the same ideal
    if (!(Ideal::of(ring_neg(x)) == A)) {
      rep.fail({{"law", "<n> == <-n>"}, {"n", x.describe()}});
      return rep;
    }
    // phi respects products
    if (nat_of(ideal_mul(A, B)) != nat_of(A) * nat_of(B)) {
      rep.fail({{"law", "phi(AB) == phi(A)phi(B)"}, {"a", x.describe()}, {"b", y.describe()}});
      return rep;
    }
    // divisibility both ways
    Int na = nat_of(A), nb = nat_of(B);
    bool nat_div = nb == 0 || (na != 0 && nb % na == 0);
    if (ideal_leq(A, B) != nat_div) {
      rep.fail({{"law", "A <= B iff phi(A) | phi(B)"}, {"a", x.describe()}, {"b", y.describe()}});
      return rep;
    }
  }

  // fixed edge pairs: (0, k) and (-6, 6)
  Ideal zero_ideal = Ideal::of(zero(spec));
  Ideal six = Ideal::of(make_integer(6));
  if (!ideal_leq(six, zero_ideal)) rep.fail({{"law", "<k> <= <0>"}});
  if (!(Ideal::of(make_integer(-6)) == six)) rep.fail({{"law", "<-6> == <6>"}});
  return rep;
}

PolyClassOps::PolyClassOps(std::uint64_t prime) : p(prime), spec(RingSpec::poly(prime)) {}

RingElement PolyClassOps::class_of(const RingElement& f) const {
  if (!(f.spec == spec)) throw SpecMismatchError("polynomial over wrong field");
  return canonical_generator(f);
}

RingElement PolyClassOps::class_mul(const RingElement& f, const RingElement& g) const {
  return class_of(ring_mul(class_of(f), class_of(g)));
}

bool PolyClassOps::class_divides(const RingElement& f, const RingElement& g) const {
  return divides(class_of(f), class_of(g));
}

CheckReport verify_poly_class_iso(std::uint64_t p, std::size_t sample_count, std::uint64_t seed,
                                  std::size_t degree_cap) {
  CheckReport rep;
  rep.check = "poly_class_iso";
  rep.instance = "I(F_" + std::to_string(p) + "[x]) ~ F_" + std::to_string(p) +
                 "[x]/~, seed " + std::to_string(seed);

  PolyClassOps ops(p);
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < sample_count; ++i) {
    RingElement f = sample_element(ops.spec, rng, degree_cap);
    RingElement g = sample_element(ops.spec, rng, degree_cap);
    Ideal A = Ideal::of(f), B = Ideal::of(g);

    // unit multiples collapse: [uf] = [f]
    std::uint64_t u = 1 + rng.below(p - 1);
    RingElement uf = ring_mul(f, make_poly(ops.spec, {u}));
    if (!(ops.class_of(uf) == ops.class_of(f))) {
      rep.fail({{"law", "[uf] == [f]"}, {"f", f.describe()}, {"u", u}});
      return rep;
    }
    // psi(<f><g>) = [f][g]
    if (!(ideal_mul(A, B).gen == ops.class_mul(f, g))) {
      rep.fail({{"law", "psi(<f><g>) == [f][g]"}, {"f", f.describe()}, {"g", g.describe()}});
      return rep;
    }
    // [f] | [g] iff f | g iff <f> <= <g>
    bool ring_div = divides(f, g);
    if (ops.class_divides(f, g) != ring_div || ideal_leq(A, B) != ring_div) {
      rep.fail({{"law", "[f] | [g] iff f | g"}, {"f", f.describe()}, {"g", g.describe()}});
      return rep;
    }
  }
  return rep;
}

CheckReport run_counterexample(std::uint64_t p) {
  if (!is_prime(p) || p > 5) throw std::invalid_argument("counterexample runs with prime p <= 5");
  CheckReport rep;
  rep.check = "matrix_counterexample";
  rep.instance = "UT2(F_" + std::to_string(p) + ")";

  RingSpec spec = RingSpec::triangular(p);
  TriMat e11{1, 0, 0}, e22{0, 0, 1}, e12{0, 1, 0};

  TriSet i1 = two_sided_ideal_closure(spec, e11);
  TriSet i2 = two_sided_ideal_closure(spec, e22);
  TriSet product = set_ideal_product(spec, i1, i2);
  TriSet closure_e12 = two_sided_ideal_closure(spec, e12);

  // E11 * E22 = 0, so the ideal generated by the element product is {0}.
  RingElement prod_elem = ring_mul(RingElement{spec, e11}, RingElement{spec, e22});
  TriSet closure_prod = two_sided_ideal_closure(spec, std::get<TriMat>(prod_elem.value));

  auto set_json = [&](const TriSet& s) {
    json arr = json::array();
    for (const auto& m : s) arr.push_back({m.a, m.b, m.c});
    return arr;
  };
  rep.witness = {{"I1*I2", set_json(product)},
                 {"closure(E12)", set_json(closure_e12)},
                 {"closure(E11*E22)", set_json(closure_prod)}};

  if (product != closure_e12) rep.fail({{"reason", "I1*I2 != closure(E12)"}});
  if (closure_prod.size() != 1 || !closure_prod.count(TriMat{}))
    rep.fail({{"reason", "closure(E11 E22) != {0}"}});
  if (product == closure_prod) rep.fail({{"reason", "counterexample collapsed"}});
  if (product.size() != p) rep.fail({{"reason", "|I1*I2| != p"}, {"size", product.size()}});
  return rep;
}

CheckReport verify_sampled_laws(const RingSpec& spec, std::size_t sample_count, std::uint64_t seed,
                                std::size_t degree_cap) {
  CheckReport rep;
  rep.check = "sampled_laws";
  rep.instance = spec.describe() + ", seed " + std::to_string(seed);

  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < sample_count; ++i) {
    RingElement x = sample_element(spec, rng, degree_cap);
    RingElement y = sample_element(spec, rng, degree_cap);
    RingElement z = sample_element(spec, rng, degree_cap);

    auto ce = [&](const char* law) {
      return json{{"law", law}, {"x", x.describe()}, {"y", y.describe()}, {"z", z.describe()}};
    };

    if (!(ring_mul(ring_mul(x, y), z) == ring_mul(x, ring_mul(y, z)))) {
      rep.fail(ce("(xy)z == x(yz)"));
      return rep;
    }
    if (!(ring_mul(x, y) == ring_mul(y, x))) {
      rep.fail(ce("xy == yx"));
      return rep;
    }
    if (!(ring_add(ring_add(x, y), z) == ring_add(x, ring_add(y, z)))) {
      rep.fail(ce("(x+y)+z == x+(y+z)"));
      return rep;
    }
    if (!(ring_mul(x, ring_add(y, z)) == ring_add(ring_mul(x, y), ring_mul(x, z)))) {
      rep.fail(ce("x(y+z) == xy+xz"));
      return rep;
    }

    Ideal A = Ideal::of(x), B = Ideal::of(y), C = Ideal::of(z);
    if (!(ideal_mul(ideal_mul(A, B), C) == ideal_mul(A, ideal_mul(B, C)))) {
      rep.fail(ce("(AB)C == A(BC)"));
      return rep;
    }
    if (!(ideal_mul(A, B) == ideal_mul(B, A))) {
      rep.fail(ce("AB == BA"));
      return rep;
    }
    if (ideal_leq(A, B) &&
        !(ideal_leq(ideal_mul(A, C), ideal_mul(B, C)) && ideal_leq(ideal_mul(C, A), ideal_mul(C, B)))) {
      rep.fail(ce("A <= B implies AC <= BC and CA <= CB"));
      return rep;
    }
    // ordered regularity with witness <1>
    ordered_regularity_witness(A);
    if (!is_ordered_idempotent(A)) {
      rep.fail(ce("A <= A^2"));
      return rep;
    }
    // duality of <= and set inclusion
    if (ideal_subset(A, B) != ideal_leq(B, A)) {
      rep.fail(ce("A subset B iff B <= A"));
      return rep;
    }
  }
  return rep;
}

}  // namespace idealord
