#pragma once

// Consumers of homology reports: the Kunneth formula, products of
// presentations, the closed form for hyperbolic toral automorphisms, and
// rational K-theory rank reports read off the E2 page.

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "stablehom/putnam_complex.hpp"

namespace stablehom {

/// Degree k gets the sum of limit tensors over a + b = k and of limit Tor
/// terms over a + b = k - 1.
HomologyReport kunneth(const HomologyReport& h1, const HomologyReport& h2);

/// Product graph with componentwise incidence and product classes. Vertex
/// (v1, v2) has index v1 * |V2| + v2 and id "(v1,v2)"; edges likewise.
/// Throws PresentationInvalid when either factor is invalid.
FiberedPresentation product_presentation(const FiberedPresentation& p1, const FiberedPresentation& p2);

/// Number of eigenvalues of modulus > 1, with multiplicity. Throws
/// NotHyperbolic when some eigenvalue has modulus exactly 1.
std::size_t expanding_eigenvalue_count(const IntMatrix& a);

/// Degree k gets Z^C(m, n - k) with identity endo, where m is the size of a
/// and n its expanding eigenvalue count. Throws DomainMismatch for a
/// non-square input, NotUnimodular unless |det a| = 1 and NotHyperbolic.
HomologyReport toral_homology(const IntMatrix& a);

enum class SpectralMode { stably_disconnected, unstably_disconnected };

std::string to_string(SpectralMode mode);
/// Accepts "stable-disconnected" / "unstable-disconnected" (and the
/// "stably-" / "unstably-" spellings).
SpectralMode parse_spectral_mode(const std::string& text);

struct SpectralRankReport {
  SpectralMode mode = SpectralMode::stably_disconnected;
  /// (p, q mod 2) -> rank; odd-q rows are zero.
  std::map<std::pair<int, int>, std::size_t> e2_ranks;
  /// Certified when the homology support spans at most three consecutive
  /// degrees; otherwise k0_rank and k1_rank are upper bounds.
  bool certified = true;
  std::size_t k0_rank = 0;
  std::size_t k1_rank = 0;

  bool operator==(const SpectralRankReport&) const = default;
};

/// Throws InfiniteRank when a report carries a rank marked as unbounded.
SpectralRankReport k_rank_report(const HomologyReport& h, SpectralMode mode);

/// Rank value reserved to mark an unbounded rank in hand-written reports.
inline constexpr std::size_t unbounded_rank = static_cast<std::size_t>(-1);

}  // namespace stablehom
