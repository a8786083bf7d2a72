#ifndef IDEALORD_IDEALS_HPP
#define IDEALORD_IDEALS_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "idealord/report.hpp"
#include "idealord/rings.hpp"
#include "idealord/rng.hpp"

namespace idealord {

// Principal ideal <a> of a commutative ring, stored by its canonical
// generator. Equality of ideals is equality of canonical generators.
struct Ideal {
  RingSpec spec;
  RingElement gen;

  static Ideal of(const RingElement& a) {
    if (!a.spec.commutative()) throw UnsupportedFamilyError("ideals are tracked for commutative rings only");
    return {a.spec, canonical_generator(a)};
  }

  bool is_zero_ideal() const { return gen.is_zero(); }
  bool is_unit_ideal() const { return gen.is_one(); }
  std::string describe() const { return "<" + gen.describe() + ">"; }
  friend bool operator==(const Ideal&, const Ideal&) = default;
};

nlohmann::ordered_json to_json(const Ideal& A);

// <a><b> = <ab>
Ideal ideal_mul(const Ideal& A, const Ideal& B);

// The semigroup order: A <= B iff a | b in R.
bool ideal_leq(const Ideal& A, const Ideal& B);

// Set inclusion: A subset of B iff b | a. Dual of ideal_leq.
bool ideal_subset(const Ideal& A, const Ideal& B);

// Always X = <1>; the guarantee A <= AXA is re-checked before returning.
Ideal ordered_regularity_witness(const Ideal& A);

bool is_ordered_idempotent(const Ideal& A);

// Some x with a = axa, or nothing. Exhaustive in Z_n, closed form in
// Z (a in {0, +-1}) and F_p[x] (zero or unit).
std::optional<RingElement> von_neumann_regular(const RingElement& a);

// Exact regularity search over a pool of candidate ideals. `exhaustive`
// records whether the pool was the whole of I(R), so "no witness" can be
// reported as proven absent rather than merely not found.
struct RegularitySearch {
  std::optional<Ideal> witness;
  bool exhaustive = false;
};
RegularitySearch semigroup_regular_exact(const Ideal& A, std::span<const Ideal> universe,
                                         bool universe_is_complete);

// Ring isomorphism given by closed-form element maps.
struct RingIso {
  std::string name;
  RingSpec source;
  RingSpec target;
  std::function<RingElement(const RingElement&)> forward;
  std::function<RingElement(const RingElement&)> backward;

  static RingIso identity(const RingSpec& spec);
  // F_p[x] automorphism x -> alpha x + beta, alpha != 0 mod p.
  static RingIso poly_affine(std::uint64_t p, std::uint64_t alpha, std::uint64_t beta);
};

// psi(<a>) = <phi(a)>
Ideal induced_iso_apply(const RingIso& phi, const Ideal& A);

// Checks that psi is bijective (on the universe / samples), multiplicative
// and order-preserving in both directions.
CheckReport verify_induced_iso(const RingIso& phi, std::span<const RingElement> samples);

// Verifies the four inverse-transversal conditions for S0 = {<1>} over a
// complete finite universe of ideals.
CheckReport check_inverse_transversal(std::span<const Ideal> universe);

// All ideals of Z_n, one per positive divisor of n, sorted by divisor.
std::vector<Ideal> ideal_universe_zn(std::uint64_t n);

}  // namespace idealord

#endif
