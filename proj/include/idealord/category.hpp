#ifndef IDEALORD_CATEGORY_HPP
#define IDEALORD_CATEGORY_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "idealord/ideals.hpp"
#include "idealord/report.hpp"

namespace idealord {

// Construction of f(ra) = rcb would not be a function: some r annihilates
// the domain generator but not the proposed image.
struct IllDefinedMorphismError : std::invalid_argument {
  RingElement violating_r;
  IllDefinedMorphismError(std::string what, RingElement r)
      : std::invalid_argument(std::move(what)), violating_r(std::move(r)) {}
};

struct CompositionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedEnumerationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// R-linear map <a> -> <b>, stored by the image of the domain generator.
// Equal iff (dom, cod, image) agree; distinct scalars c with the same cb
// denote the same map.
struct LinearMorphism {
  Ideal dom;
  Ideal cod;
  RingElement image;  // f(a), an element of cod

  bool is_inclusion() const { return image == dom.gen; }
  std::string describe() const;
  friend bool operator==(const LinearMorphism&, const LinearMorphism&) = default;
};

LinearMorphism make_morphism(const Ideal& A, const Ideal& B, const RingElement& c);
LinearMorphism identity_morphism(const Ideal& A);

// j_(A,B): requires A subset of B; acts as the identity on elements.
LinearMorphism inclusion(const Ideal& A, const Ideal& B);

// Apply f to an element x of dom (x = ra for some r).
RingElement apply_morphism(const LinearMorphism& f, const RingElement& x);

// All distinct morphisms A -> B; finite (modular) specs only.
std::vector<LinearMorphism> hom_set(const Ideal& A, const Ideal& B);

// Diagrammatic composition: fg goes dom f -> cod g.
LinearMorphism compose(const LinearMorphism& f, const LinearMorphism& g);

// Right-cancellability probed over every morphism into dom(f) from the
// given universe, cross-checked against element-level injectivity.
bool is_monomorphism(const LinearMorphism& f, std::span<const Ideal> probe_universe);

// The three category-with-subobjects axioms for the inclusion subcategory,
// over a complete finite universe of ideals.
CheckReport check_subobject_axioms(std::span<const Ideal> universe);

// Arrow of the preorder category C: exists iff A <= B (a | b).
struct PreorderArrow {
  Ideal dom;
  Ideal cod;
  friend bool operator==(const PreorderArrow&, const PreorderArrow&) = default;
};
std::optional<PreorderArrow> preorder_arrow(const Ideal& A, const Ideal& B);

// Contravariant functor arrow map: the arrow A -> B goes to the inclusion
// of B into A.
LinearMorphism functor_image(const PreorderArrow& arrow);

// Identity preservation and contravariant composition over all objects and
// composable arrow pairs; also injectivity on arrows and the <= / subset
// duality bridge.
CheckReport verify_functor_laws(std::span<const Ideal> universe);

// Cross-check of hom_set against a brute-force enumeration of all additive,
// R-homogeneous functions <a> -> <b> over Z_n.
CheckReport verify_hom_oracle(std::uint64_t n);

// DOT renderings with stable node ordering.
std::string dot_preorder_category(std::span<const Ideal> universe);
std::string dot_inclusion_diagram(std::span<const Ideal> universe);

}  // namespace idealord

#endif
