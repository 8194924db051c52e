#pragma once

// Stationary inductive systems (G, h), standing for colim(G -h-> G -h-> ...).
// Dimension groups and the homology groups of the engine live here; they
// are generally not finitely generated (Z[1/2] is (Z, x2)), so every
// comparison goes through the invariants tuple.

#include <map>
#include <string>
#include <vector>

#include "stablehom/fgab.hpp"
#include "stablehom/graph.hpp"

namespace stablehom {

class StationarySystem {
 public:
  /// The trivial system.
  StationarySystem();
  /// Throws IllDefinedMorphism when `endo` is not a self-map of `stage`, and
  /// NotEquivariant when `normalized` is claimed but endo is not injective.
  StationarySystem(FgAbGroup stage, IntMatrix endo, bool normalized = false);

  /// (Z, x factor).
  static StationarySystem multiplication(const Integer& factor);
  /// (stage, identity): the limit is the stage itself.
  static StationarySystem constant(const FgAbGroup& stage);

  const FgAbGroup& stage() const noexcept { return stage_; }
  const IntMatrix& endo() const noexcept { return endo_; }
  bool normalized() const noexcept { return normalized_; }
  GroupMorphism endo_morphism() const { return GroupMorphism(stage_, stage_, endo_); }

 private:
  FgAbGroup stage_;
  IntMatrix endo_;
  bool normalized_ = false;
};

struct StationaryInvariants {
  std::size_t rank = 0;
  std::vector<Integer> invariant_factors;
  /// |det| of endo on the free quotient of the normalized stage (1 when rank is 0).
  Integer endo_det_abs = 1;
  /// coker(I - endo).
  FgAbGroup bowen_franks;

  bool operator==(const StationaryInvariants& other) const = default;
  bool trivial() const { return rank == 0 && invariant_factors.empty(); }
  std::string to_string() const;
};

/// (Z^V, A^T) for the vertex adjacency matrix A. Throws NotEssential.
StationarySystem krieger_dimension_group(const Graph& graph);

/// Quotient of the stage by the stable kernel of the endo; the endo is
/// injective on the result and the limit is unchanged.
StationarySystem eventual_normalize(const StationarySystem& system);

/// True when the endo has trivial kernel on the stage.
bool endo_injective(const StationarySystem& system);

StationaryInvariants invariants(const StationarySystem& system);

StationarySystem limit_tensor(const StationarySystem& a, const StationarySystem& b);
StationarySystem limit_tor(const StationarySystem& a, const StationarySystem& b);
StationarySystem limit_direct_sum(const std::vector<StationarySystem>& systems);

/// Homologically graded complex of stationary systems; differentials[k]
/// maps terms[k] to terms[k - 1]. Missing terms are trivial.
struct StationaryComplex {
  std::map<int, StationarySystem> terms;
  std::map<int, IntMatrix> differentials;

  const StationarySystem& term(int degree) const;
  std::pair<int, int> degree_range() const;
};

/// Per-degree homology, each normalized. Throws NotEquivariant when a
/// differential does not commute with the endos and CompositionNotZero when
/// d^2 != 0.
std::map<int, StationarySystem> limit_homology(const StationaryComplex& complex);

}  // namespace stablehom
