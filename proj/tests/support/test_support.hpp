#pragma once

// Fixture loading and random generators shared by the unit, property and
// acceptance suites.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "stablehom/exact_linear.hpp"
#include "stablehom/graph.hpp"
#include "stablehom/symbolic.hpp"

namespace stablehom::testing {

std::string fixture_path(const std::string& name);
FiberedPresentation load_fixture(const std::string& name);

/// Every vertex has an incoming and an outgoing edge.
Graph random_essential_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges);

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi);

/// A valid presentation built as the fiber product G1 x_H G2 of a random
/// out-covering G1 -> H and a random in-covering G2 -> H of a random
/// essential graph H. The y-classes are the fibers of the projection to G2,
/// the z-classes the fibers of the projection to G1, so the quotient system
/// is H itself. `base` receives H.
struct FiberProduct {
  FiberedPresentation presentation;
  Graph base;
};
FiberProduct random_fiber_product(std::mt19937_64& rng, std::size_t max_base_vertices = 3,
                                  std::size_t max_base_edges = 5, std::size_t max_fiber = 2);

/// Same presentation with vertices and edges reordered and renamed.
FiberedPresentation relabel(const FiberedPresentation& p, std::mt19937_64& rng);

}  // namespace stablehom::testing
