#ifndef IDEALORD_CERTIFY_HPP
#define IDEALORD_CERTIFY_HPP

#include <chrono>
#include <cstdint>

#include "idealord/report.hpp"

namespace idealord {

// Remove every elapsed_ms field; what is left must be byte-identical across
// runs with the same seed.
json strip_timing(json j);

// Wall-clock wrapper.
template <typename F>
CheckReport timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  CheckReport r = f();
  auto t1 = std::chrono::steady_clock::now();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

// Per-n verification of the ordered-semigroup theorems on I(Z_n):
// table validation, Green universality, the six-property classification,
// the inverse transversal, the von Neumann correspondence, and the D(n)
// isomorphism.
ReportBundle certify_zn(std::uint64_t n);

// Per-n verification of the categorical structure: subobject axioms,
// functor laws, and (for n <= hom_oracle_cap) the hom-set oracle.
ReportBundle certify_category(std::uint64_t n, std::uint64_t hom_oracle_cap = 24);

// Everything at once: all n <= n_max (fanned out across threads, output
// ordered by n), sampled infinite instances, the induced-isomorphism
// theorem on F_3[x], and the matrix counterexample.
ReportBundle certify_all(std::uint64_t n_max, std::size_t samples, std::uint64_t seed);

}  // namespace idealord

#endif
