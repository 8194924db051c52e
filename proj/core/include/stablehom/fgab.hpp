#pragma once

// Finitely generated abelian groups given by cokernel presentations,
// morphisms between them, and the homological operations used by the
// Kunneth formula: homology of a composable pair, tensor product, Tor.

#include <string>
#include <vector>

#include "stablehom/exact_linear.hpp"

namespace stablehom {

/// Z^n modulo the column span of a relation matrix, with its invariant
/// factor normal form cached. Equality compares normal forms, i.e. it is
/// isomorphism, never equality of presentations.
class FgAbGroup {
 public:
  FgAbGroup();
  FgAbGroup(std::size_t generators, IntMatrix relations);

  static FgAbGroup free(std::size_t rank);
  /// Z/order, or Z when order is 0.
  static FgAbGroup cyclic(const Integer& order);
  static FgAbGroup from_invariants(std::size_t free_rank, const std::vector<Integer>& torsion);

  std::size_t generators() const noexcept { return generators_; }
  const IntMatrix& relations() const noexcept { return relations_; }

  std::size_t free_rank() const noexcept { return free_rank_; }
  /// d1 | d2 | ..., each >= 2.
  const std::vector<Integer>& invariant_factors() const noexcept { return invariant_factors_; }
  bool is_trivial() const noexcept { return free_rank_ == 0 && invariant_factors_.empty(); }
  bool is_free() const noexcept { return invariant_factors_.empty(); }

  /// True when every column of `vectors` is zero in the group.
  bool annihilates(const IntMatrix& vectors) const;
  bool same_presentation(const FgAbGroup& other) const;

  /// Diagonal presentation on free_rank + #torsion generators.
  FgAbGroup normal_form() const;

  /// e.g. "Z^2 + Z/2 + Z/4", or "0".
  std::string to_string() const;

  bool operator==(const FgAbGroup& other) const {
    return free_rank_ == other.free_rank_ && invariant_factors_ == other.invariant_factors_;
  }

 private:
  std::size_t generators_ = 0;
  IntMatrix relations_;
  std::size_t free_rank_ = 0;
  std::vector<Integer> invariant_factors_;
};

/// A homomorphism given by its action on generators. Construction checks
/// that source relations land in the target relation lattice.
class GroupMorphism {
 public:
  GroupMorphism(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

  static GroupMorphism zero(const FgAbGroup& source, const FgAbGroup& target);
  static GroupMorphism identity(const FgAbGroup& group);

  const FgAbGroup& source() const noexcept { return source_; }
  const FgAbGroup& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  bool is_zero() const;
  /// (*this) after `first`.
  GroupMorphism after(const GroupMorphism& first) const;

 private:
  FgAbGroup source_;
  FgAbGroup target_;
  IntMatrix matrix_;
};

/// A group of the form span(sub) / span(killed) inside some ambient Z^n,
/// carried with a minimal presentation and the ambient vectors its
/// generators stand for. `killed` must lie in the lattice spanned by `sub`.
class Subquotient {
 public:
  Subquotient(const IntMatrix& sub, const IntMatrix& killed);

  const FgAbGroup& group() const noexcept { return group_; }
  /// Ambient representatives of the generators (n x generators).
  const IntMatrix& representatives() const noexcept { return representatives_; }
  std::size_t ambient_dimension() const noexcept { return sub_basis_.rows(); }

  /// Coordinates of ambient vectors that lie in span(sub).
  IntMatrix coordinates(const IntMatrix& ambient_vectors) const;
  /// Matrix of the map induced by an ambient endomorphism preserving both
  /// span(sub) and span(killed).
  IntMatrix induced(const IntMatrix& ambient_map) const;

 private:
  IntMatrix sub_basis_;
  LatticeSolver sub_solver_;
  IntMatrix to_generators_;
  IntMatrix representatives_;
  FgAbGroup group_;
};

/// ker(outgoing) / im(incoming) at the middle group.
///
/// Cycles are computed as the saturated kernel of [outgoing | target
/// relations] projected onto the middle coordinates; this lattice already
/// contains the middle relations. Boundaries together with the middle
/// relations are then expressed inside the cycle lattice by exact integer
/// solving against a basis of it, which gives the relation matrix of the
/// homology group on that basis.
FgAbGroup homology_at(const GroupMorphism& incoming, const GroupMorphism& outgoing);
Subquotient homology_presentation(const GroupMorphism& incoming, const GroupMorphism& outgoing);

/// Kernel of f as a subgroup of its source.
Subquotient kernel_presentation(const GroupMorphism& f);

FgAbGroup tensor(const FgAbGroup& g, const FgAbGroup& h);
/// Tensor presentation in ambient coordinates Z^(n*m), index i*m + j.
Subquotient tensor_presentation(const FgAbGroup& g, const FgAbGroup& h);

FgAbGroup tor(const FgAbGroup& g, const FgAbGroup& h);

/// Tor(g, h) computed from the injective resolution 0 -> Z^p -> Z^n -> g -> 0
/// given by `relation_basis`; it is the kernel of (relation_basis (x) 1) on
/// h^p, in ambient coordinates Z^(p*m), index i*m + j.
struct TorPresentation {
  IntMatrix relation_basis;
  Subquotient kernel;
};
TorPresentation tor_presentation(const FgAbGroup& g, const FgAbGroup& h);

FgAbGroup direct_sum(const std::vector<FgAbGroup>& groups);

}  // namespace stablehom
