#pragma once

// The reduced double complex of fiber-power dimension-group stages and its
// total homology.
//
// Cell (L, M) is the free group on the SignBasis of shape (L+1) x (M+1)
// with the fiber-power adjacency as stage endomorphism. The row
// differential (L, M) -> (L-1, M) is the alternating sum of covariant row
// deletions, the column differential (L, M) -> (L, M+1) the alternating sum
// of contravariant column insertions. On total degree k = L - M the
// differential is d_row + (-1)^L d_col.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stablehom/stationary.hpp"
#include "stablehom/symbolic.hpp"

namespace stablehom {

using CellIndex = std::pair<std::size_t, std::size_t>;  // (L, M)

struct Cell {
  SignBasis basis;
  IntMatrix endo;
};

struct GuardrailCheck {
  std::string identity;
  std::size_t l = 0;
  std::size_t m = 0;
  bool passed = true;
};

struct DoubleComplex {
  FiberedPresentation presentation;
  std::string digest;
  std::size_t row_bound = 0;
  std::size_t column_bound = 0;
  std::map<CellIndex, Cell> cells;
  /// Keyed by source cell; maps (L, M) to (L-1, M).
  std::map<CellIndex, IntMatrix> row_differentials;
  /// Keyed by source cell; maps (L, M) to (L, M+1).
  std::map<CellIndex, IntMatrix> column_differentials;
  std::vector<GuardrailCheck> guardrail_log;

  /// Empty cell outside the bounds.
  const Cell& cell(std::size_t l, std::size_t m) const;
};

/// Thread count from STABLEHOM_THREADS, else the hardware concurrency.
unsigned default_thread_count();

/// Builds every cell within the pigeonhole bounds, in parallel over cells,
/// then checks d_row^2 = 0, d_col^2 = 0, commutation of d_row with d_col and
/// equivariance of both differentials. Throws GuardrailFailure on the first
/// violated identity, including an invalid presentation. The result does
/// not depend on `threads`.
DoubleComplex build(const FiberedPresentation& p, unsigned threads = 0);

struct Provenance {
  /// "presentation", "kunneth", "toral", ...
  std::string source;
  /// SHA-256 of the canonical serialization of the input.
  std::string digest;
  std::size_t row_bound = 0;
  std::size_t column_bound = 0;
  std::vector<GuardrailCheck> guardrail_log;
};

struct HomologyReport {
  /// Every degree in the reported range is present; zero groups included.
  std::map<int, StationarySystem> systems;
  std::map<int, StationaryInvariants> invariants;
  Provenance provenance;

  /// Trivial invariants outside the reported range.
  StationaryInvariants at(int degree) const;
  /// Degrees with nontrivial homology.
  std::vector<int> support() const;
};

/// Report with invariants computed from the given systems.
HomologyReport make_report(std::map<int, StationarySystem> systems, Provenance provenance);

HomologyReport total_homology(const DoubleComplex& dc);

/// total_homology(build(p, threads)).
HomologyReport homology(const FiberedPresentation& p, unsigned threads = 0);

/// Totalized stage complex of `dc` (before taking homology).
StationaryComplex totalize(const DoubleComplex& dc);

std::string presentation_digest(const FiberedPresentation& p);
std::string sha256_hex(const std::string& data);

}  // namespace stablehom
