#ifndef IDEALORD_INSTANCES_HPP
#define IDEALORD_INSTANCES_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "idealord/ideals.hpp"
#include "idealord/ordered_semigroup.hpp"
#include "idealord/report.hpp"
#include "idealord/rng.hpp"

namespace idealord {

std::vector<std::uint64_t> divisors(std::uint64_t n);

// I(Z_n) as a finite ordered semigroup; one element per positive divisor,
// labelled by the divisor (n itself generates the zero ideal).
FiniteOrderedSemigroup build_ideal_semigroup_zn(std::uint64_t n);

// (D(n), *, |) with d1 * d2 = gcd(d1 d2, n).
struct DivisorSemigroup {
  std::uint64_t n;
  std::vector<std::uint64_t> divisor_list;
  FiniteOrderedSemigroup table;
};
DivisorSemigroup build_divisor_semigroup(std::uint64_t n);

// The explicit map <d> -> d is a mul- and order-preserving bijection;
// cross-checked against the backtracking isomorphism search.
CheckReport verify_zn_divisor_iso(std::uint64_t n);

// Sampled verification of <m><k> = <mk>, divisibility both ways and the
// collapse of n and -n onto one ideal, i.e. the map <n> -> n onto (N0, ., |).
CheckReport verify_z_naturals_iso(std::size_t sample_count, std::uint64_t seed);

// Operations on F_p[x] modulo unit scalars: canonical (monic/zero)
// representatives of the classes of ~.
struct PolyClassOps {
  std::uint64_t p;
  RingSpec spec;

  explicit PolyClassOps(std::uint64_t prime);
  RingElement class_of(const RingElement& f) const;
  RingElement class_mul(const RingElement& f, const RingElement& g) const;
  bool class_divides(const RingElement& f, const RingElement& g) const;
};

// Sampled verification that class arithmetic mirrors ideal arithmetic in
// I(F_p[x]) through <f> -> [f].
CheckReport verify_poly_class_iso(std::uint64_t p, std::size_t sample_count, std::uint64_t seed,
                                  std::size_t degree_cap = 8);

// The noncommutative 2x2 upper-triangular counterexample:
// closure(E11) * closure(E22) = closure(E12) != closure(E11 E22) = {0}.
CheckReport run_counterexample(std::uint64_t p);

// Sampled ring and ordered-semigroup laws for the infinite families
// (Z and F_p[x]): ring associativity/commutativity/distributivity plus
// ideal associativity, commutativity, compatibility, ordered regularity.
CheckReport verify_sampled_laws(const RingSpec& spec, std::size_t sample_count, std::uint64_t seed,
                                std::size_t degree_cap = 8);

// Deterministic random element of Z (log-uniform magnitude) or F_p[x]
// (uniform degree up to cap).
RingElement sample_element(const RingSpec& spec, SplitMix64& rng, std::size_t degree_cap = 8);

}  // namespace idealord

#endif
