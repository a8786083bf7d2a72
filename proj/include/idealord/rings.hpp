#ifndef IDEALORD_RINGS_HPP
#define IDEALORD_RINGS_HPP

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace idealord {

using Int = boost::multiprecision::cpp_int;

// Thrown when an operation receives elements of different rings.
struct SpecMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when an operation is not defined for the ring family it got
// (e.g. divisibility in the noncommutative triangular ring).
struct UnsupportedFamilyError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Family { Integer, Modular, Poly, Triangular };

std::string family_name(Family f);
bool is_prime(std::uint64_t p);

// Tagged ring family: Z, Z_n, F_p[x], or 2x2 upper triangular matrices
// over F_p. `mod` holds n (Modular) or p (Poly/Triangular), 0 for Z.
struct RingSpec {
  Family family = Family::Integer;
  std::uint64_t mod = 0;

  static RingSpec integers() { return {Family::Integer, 0}; }
  static RingSpec modular(std::uint64_t n);
  static RingSpec poly(std::uint64_t p);
  static RingSpec triangular(std::uint64_t p);

  bool commutative() const { return family != Family::Triangular; }
  bool finite() const { return family == Family::Modular || family == Family::Triangular; }

  std::string describe() const;
  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

// Matrix (a b; 0 c) over F_p, entries reduced mod p.
struct TriMat {
  std::uint64_t a = 0, b = 0, c = 0;
  friend auto operator<=>(const TriMat&, const TriMat&) = default;
};

// Polynomials are coefficient vectors low-to-high with no trailing zeros;
// the empty vector is the zero polynomial.
using PolyCoeffs = std::vector<std::uint64_t>;

struct RingElement {
  RingSpec spec;
  std::variant<Int, std::uint64_t, PolyCoeffs, TriMat> value;

  bool is_zero() const;
  bool is_one() const;
  std::string describe() const;
  friend bool operator==(const RingElement&, const RingElement&) = default;
};

// Normalizing constructors.
RingElement make_integer(const Int& v);
RingElement make_residue(const RingSpec& spec, const Int& v);
RingElement make_poly(const RingSpec& spec, PolyCoeffs coeffs);
RingElement make_tri(const RingSpec& spec, std::uint64_t a, std::uint64_t b, std::uint64_t c);
RingElement zero(const RingSpec& spec);
RingElement one(const RingSpec& spec);

RingElement ring_add(const RingElement& x, const RingElement& y);
RingElement ring_neg(const RingElement& x);
RingElement ring_mul(const RingElement& x, const RingElement& y);

// b = ra for some r. Conventions: a | 0 always; 0 | b iff b = 0.
// Commutative families only.
bool divides(const RingElement& a, const RingElement& b);

// Representative of the associate class: |a| in Z, gcd(a,n) in Z_n
// (with n stored as residue 0), monic scalar multiple in F_p[x].
RingElement canonical_generator(const RingElement& a);

// Z and F_p[x] only; nonnegative resp. monic, gcd(0,0) = 0.
RingElement euclidean_gcd(const RingElement& a, const RingElement& b);

// Finite triangular ring helpers for the noncommutativity counterexample.
using TriSet = std::set<TriMat>;
std::vector<TriMat> all_tri_elements(const RingSpec& spec);
TriSet two_sided_ideal_closure(const RingSpec& spec, const TriMat& x);
TriSet set_ideal_product(const RingSpec& spec, const TriSet& lhs, const TriSet& rhs);

nlohmann::ordered_json to_json(const RingSpec& spec);
nlohmann::ordered_json to_json(const RingElement& x);

// Low-level F_p[x] arithmetic shared with `instances`.
namespace polyops {
PolyCoeffs trim(PolyCoeffs c);
PolyCoeffs add(const PolyCoeffs& f, const PolyCoeffs& g, std::uint64_t p);
PolyCoeffs mul(const PolyCoeffs& f, const PolyCoeffs& g, std::uint64_t p);
// quotient/remainder by a nonzero divisor
std::pair<PolyCoeffs, PolyCoeffs> divmod(const PolyCoeffs& f, const PolyCoeffs& g, std::uint64_t p);
PolyCoeffs monic(const PolyCoeffs& f, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
std::string format(const PolyCoeffs& f);
}  // namespace polyops

}  // namespace idealord

#endif
