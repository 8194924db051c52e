#pragma once

// Graph presentations of s/u-bijective pairs and their fiber powers.
//
// A FiberedPresentation is a base graph with two partitions on vertices
// and edges. Arrays of shape (L+1) x (M+1) of base vertices (or edges)
// whose entries share a y-class down each column and a z-class along each
// row present the fiber power Sigma_{L,M}. S_{L+1} permutes rows and
// S_{M+1} permutes columns.
//
// Validity (checked by validate_presentation) is local and combinatorial:
//   * edge classes are compatible with vertex classes at both endpoints;
//   * y-covering: every vertex has exactly one outgoing edge in each
//     y-edge-class leaving its y-vertex-class;
//   * z-covering: every vertex has exactly one incoming edge in each
//     z-edge-class entering its z-vertex-class;
//   * grid: a y-class and a z-class share at most one vertex (edge);
//   * rectangle: a ~z b ~y c implies a ~y d ~z c for some d.
// Together these make row deletion out-edge bijective (so it acts
// covariantly on dimension-group stages) and column deletion in-edge
// bijective (so its pullback acts contravariantly).

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stablehom/fgab.hpp"
#include "stablehom/graph.hpp"

namespace stablehom {

class Partition {
 public:
  Partition() = default;
  static Partition singletons(std::size_t n);
  /// Throws DomainMismatch unless `classes` partitions {0, ..., n-1} exactly.
  static Partition from_classes(const std::vector<std::vector<std::size_t>>& classes, std::size_t n);

  std::size_t element_count() const noexcept { return class_of_.size(); }
  std::size_t class_count() const noexcept { return members_.size(); }
  std::size_t class_of(std::size_t element) const { return class_of_.at(element); }
  const std::vector<std::size_t>& members(std::size_t cls) const { return members_.at(cls); }
  bool same(std::size_t a, std::size_t b) const { return class_of_.at(a) == class_of_.at(b); }
  std::size_t largest_class_size() const;
  bool is_discrete() const { return class_count() == element_count(); }

 private:
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> members_;
};

struct FiberedPresentation {
  Graph base;
  Partition y_vertex;
  Partition y_edge;
  Partition z_vertex;
  Partition z_edge;

  /// Singleton partitions: the shift of finite type itself.
  static FiberedPresentation sft(Graph graph);
  bool is_sft() const;

  /// Largest L (resp. M) with a possibly nonzero reduced group.
  std::size_t row_bound() const;
  std::size_t column_bound() const;
};

struct Violation {
  std::string rule;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const noexcept { return violations.empty(); }
};

ValidationReport validate_presentation(const FiberedPresentation& p);

/// Shape of a fiber-power array: L + 1 rows, M + 1 columns.
struct ArrayShape {
  std::size_t l = 0;
  std::size_t m = 0;
  std::size_t rows() const noexcept { return l + 1; }
  std::size_t cols() const noexcept { return m + 1; }
  std::size_t size() const noexcept { return rows() * cols(); }
  bool operator==(const ArrayShape&) const = default;
};

/// Row-major entries (base vertex or edge indices).
using Array = std::vector<std::size_t>;

Array delete_row(const Array& a, ArrayShape shape, std::size_t row);
Array delete_column(const Array& a, ArrayShape shape, std::size_t col);
/// Entry (i, j) of the result is a(row_perm[i], col_perm[j]).
Array permute_array(const Array& a, ArrayShape shape, const std::vector<std::size_t>& row_perm,
                    const std::vector<std::size_t>& col_perm);
bool has_repeated_rows(const Array& a, ArrayShape shape);
bool has_repeated_columns(const Array& a, ArrayShape shape);

struct EdgeArray {
  Array entries;
  std::size_t source = 0;  // index into FiberPowerGraph::vertices
  std::size_t target = 0;
};

struct FiberPowerGraph {
  ArrayShape shape;
  std::vector<Array> vertices;  // lexicographic order
  std::vector<EdgeArray> edges;

  std::optional<std::size_t> vertex_index(const Array& a) const;
  /// The fiber power as a plain graph; ids render arrays as "(a,b;c,d)".
  Graph as_graph(const Graph& base) const;
};

/// Throws PresentationInvalid when validation fails.
FiberPowerGraph fiber_power_graph(const FiberedPresentation& p, std::size_t l, std::size_t m);
/// Same enumeration without validating first.
FiberPowerGraph enumerate_fiber_power(const FiberedPresentation& p, std::size_t l, std::size_t m);

/// Generators of the reduced group at one cell: one representative per free
/// S_{L+1} x S_{M+1} orbit of vertex arrays with pairwise distinct rows and
/// pairwise distinct columns. The representative is the lexicographically
/// least array of its orbit and carries sign +1; any other array of the
/// orbit is (r, c) applied to it and stands for sgn(r) sgn(c) times it.
class SignBasis {
 public:
  SignBasis() = default;
  SignBasis(ArrayShape shape, std::vector<Array> representatives);

  struct Located {
    std::size_t index;
    int sign;
  };
  /// Index and sign of the orbit of `a`, or nullopt when `a` has a repeated
  /// row or column (it is zero in the reduced group) or is not enumerated.
  std::optional<Located> locate(const Array& a) const;

  ArrayShape shape() const noexcept { return shape_; }
  std::size_t size() const noexcept { return representatives_.size(); }
  bool empty() const noexcept { return representatives_.empty(); }
  const std::vector<Array>& representatives() const noexcept { return representatives_; }

 private:
  ArrayShape shape_;
  std::vector<Array> representatives_;
  std::map<Array, std::size_t> index_;
};

/// Canonical representative of the orbit of `a` and the sign relating them,
/// or nullopt when `a` has a repeated row or column.
std::optional<std::pair<Array, int>> canonical_orbit_representative(const Array& a, ArrayShape shape);

SignBasis sign_basis(const FiberPowerGraph& g);
SignBasis sign_basis(const FiberedPresentation& p, std::size_t l, std::size_t m);

/// Stage endomorphism on the reduced group: each representative goes to the
/// signed sum of the orbits of its successors in the fiber-power graph.
IntMatrix reduced_endo(const FiberedPresentation& p, const SignBasis& basis);

/// Covariant row deletion on representatives, (L, M) -> (L-1, M). Only the
/// alternating sum over rows is a map of reduced groups; a single summand
/// depends on the choice of representatives.
IntMatrix reduced_face_row(const SignBasis& from, const SignBasis& to, std::size_t row);
/// Contravariant column map (L, M) -> (L, M+1) on representatives: a target
/// representative picks up the source orbit of its `col`-th deletion. As for
/// rows, only the alternating sum is canonical.
IntMatrix reduced_coface_column(const SignBasis& from, const SignBasis& to, std::size_t col);

/// The `row`-th face on the sign-isotypic part: each source representative
/// is replaced by its full signed orbit before the row is deleted. This is
/// well defined on its own and equals (-1)^row times the alternating sum of
/// reduced_face_row.
IntMatrix symmetrized_face_row(const SignBasis& from, const SignBasis& to, std::size_t row);
/// The `col`-th column insertion on sign coinvariants: a source
/// representative goes to the signed sum, over the free target orbits, of
/// the arrays whose `col`-th deletion is that representative. Equals
/// (-1)^col times the alternating sum of reduced_coface_column.
IntMatrix symmetrized_coface_column(const SignBasis& from, const SignBasis& to, std::size_t col);

/// Single face maps between reduced stages (the symmetrized forms above),
/// checked for commutation with the stage endomorphisms. Throw
/// PresentationInvalid, DomainMismatch for an index out of range, or
/// NotEquivariant.
GroupMorphism face_row_covariant(const FiberedPresentation& p, std::size_t l, std::size_t m,
                                 std::size_t row);
GroupMorphism face_column_contravariant(const FiberedPresentation& p, std::size_t l, std::size_t m,
                                        std::size_t col);

/// Unreduced counterparts on the free groups of all vertex arrays.
IntMatrix stage_endo(const FiberPowerGraph& g);
IntMatrix stage_face_row(const FiberPowerGraph& from, const FiberPowerGraph& to, std::size_t row);
IntMatrix stage_coface_column(const FiberPowerGraph& from, const FiberPowerGraph& to, std::size_t col);

std::string array_to_string(const Array& a, ArrayShape shape, const std::vector<std::string>& names);

}  // namespace stablehom
