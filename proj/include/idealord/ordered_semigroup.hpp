#ifndef IDEALORD_ORDERED_SEMIGROUP_HPP
#define IDEALORD_ORDERED_SEMIGROUP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "idealord/report.hpp"

namespace idealord {

// Execution policy for the exhaustive kernels. Parallel uses OpenMP with a
// deterministic least-counterexample reduction, so both policies produce
// identical reports.
enum class Exec { Serial, Parallel };

// Multiplication table plus order relation over indexed elements.
class FiniteOrderedSemigroup {
 public:
  FiniteOrderedSemigroup(std::vector<std::string> labels, std::vector<std::uint32_t> mul,
                         std::vector<std::uint8_t> leq);

  static FiniteOrderedSemigroup from_json(const json& j);
  json to_json() const;

  std::size_t size() const { return k_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::uint32_t mul(std::size_t i, std::size_t j) const { return mul_[i * k_ + j]; }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * k_ + j] != 0; }
  std::string describe() const { return name_.empty() ? "S(k=" + std::to_string(k_) + ")" : name_; }
  void set_name(std::string name) { name_ = std::move(name); }

 private:
  std::size_t k_;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint8_t> leq_;
  std::string name_;
};

// Exhaustive check of associativity, partial-order axioms and two-sided
// compatibility. Reports the lexicographically first violation.
CheckReport validate(const FiniteOrderedSemigroup& s, Exec exec = Exec::Parallel);

// Serial reference used to cross-check the parallel kernels.
CheckReport validate_serial(const FiniteOrderedSemigroup& s);

// (A] = {x | x <= a for some a in A}. Returns sorted indices.
std::vector<std::size_t> downward_closure(const FiniteOrderedSemigroup& s,
                                          std::span<const std::size_t> subset);

// L(a) = (a u Sa], R(a) = (a u aS], I(a) = (a u Sa u aS u SaS]
struct PrincipalIdeals {
  std::vector<std::size_t> left, right, two_sided;
};
PrincipalIdeals principal_ordered_ideals(const FiniteOrderedSemigroup& s, std::size_t a);

// Partitions as class-id vectors: elements i, j are related iff ids match.
struct GreensStructure {
  std::vector<std::size_t> L, R, J, H, D;
};
GreensStructure greens_relations(const FiniteOrderedSemigroup& s);

std::size_t class_count(std::span<const std::size_t> ids);

// a L b via the regular-semigroup characterization: exist x, y with
// a <= xb and b <= ya. Cross-oracle for greens_relations on regular S.
bool greens_L_alt(const FiniteOrderedSemigroup& s, std::size_t a, std::size_t b);

// Reg<=(S): all a with a <= axa for some x.
std::vector<std::size_t> ordered_regular_set(const FiniteOrderedSemigroup& s);

struct Classification {
  bool intra_regular = false;
  bool completely_regular = false;
  bool group_like = false;
  bool clifford = false;
  bool inverse_ordered = false;
  bool all_ordered_idempotent = false;

  std::vector<std::size_t> ordered_idempotents;        // E<=(S)
  std::vector<std::vector<std::size_t>> ordered_inverses;  // V<=(a) per element
  json details;  // witnesses / counterexamples per property

  bool all() const {
    return intra_regular && completely_regular && group_like && clifford && inverse_ordered &&
           all_ordered_idempotent;
  }
};
Classification classify(const FiniteOrderedSemigroup& s);

// Backtracking search for a bijection preserving mul and leq both ways.
std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteOrderedSemigroup& s,
                                                         const FiniteOrderedSemigroup& t);

}  // namespace idealord

#endif
