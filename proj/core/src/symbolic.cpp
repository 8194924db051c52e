#include "stablehom/symbolic.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <utility>

#include "stablehom/errors.hpp"

namespace stablehom {

Partition Partition::singletons(std::size_t n) {
  Partition p;
  p.class_of_.resize(n);
  p.members_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.class_of_[i] = i;
    p.members_[i] = {i};
  }
  return p;
}

Partition Partition::from_classes(const std::vector<std::vector<std::size_t>>& classes, std::size_t n) {
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(n, unassigned);
  std::vector<std::vector<std::size_t>> members;
  for (const auto& cls : classes) {
    if (cls.empty()) throw DomainMismatch("Partition: empty class");
    std::vector<std::size_t> sorted = cls;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t e : sorted) {
      if (e >= n) throw DomainMismatch("Partition: element out of range");
      if (owner[e] != unassigned) throw DomainMismatch("Partition: element in two classes");
      owner[e] = 0;
    }
    members.push_back(std::move(sorted));
  }
  for (std::size_t e = 0; e < n; ++e) {
    if (owner[e] == unassigned) throw DomainMismatch("Partition: element in no class");
  }
  std::sort(members.begin(), members.end());
  Partition p;
  p.class_of_.resize(n);
  for (std::size_t c = 0; c < members.size(); ++c)
    for (std::size_t e : members[c]) p.class_of_[e] = c;
  p.members_ = std::move(members);
  return p;
}

std::size_t Partition::largest_class_size() const {
  std::size_t best = 0;
  for (const auto& m : members_) best = std::max(best, m.size());
  return best;
}

FiberedPresentation FiberedPresentation::sft(Graph graph) {
  const std::size_t v = graph.vertex_count();
  const std::size_t e = graph.edge_count();
  return FiberedPresentation{std::move(graph), Partition::singletons(v), Partition::singletons(e),
                             Partition::singletons(v), Partition::singletons(e)};
}

bool FiberedPresentation::is_sft() const {
  return y_vertex.is_discrete() && y_edge.is_discrete() && z_vertex.is_discrete() && z_edge.is_discrete();
}

std::size_t FiberedPresentation::row_bound() const {
  const std::size_t s = y_vertex.largest_class_size();
  return s == 0 ? 0 : s - 1;
}

std::size_t FiberedPresentation::column_bound() const {
  const std::size_t s = z_vertex.largest_class_size();
  return s == 0 ? 0 : s - 1;
}

namespace {

const std::string& vertex_name(const FiberedPresentation& p, std::size_t v) { return p.base.vertex_ids()[v]; }
const std::string& edge_name(const FiberedPresentation& p, std::size_t e) { return p.base.edges()[e].id; }

void check_compatibility(const FiberedPresentation& p, const Partition& vertices, const Partition& edges,
                         const std::string& side, std::vector<Violation>& out) {
  const auto& es = p.base.edges();
  for (std::size_t c = 0; c < edges.class_count(); ++c) {
    const auto& cls = edges.members(c);
    const std::size_t first = cls.front();
    for (std::size_t e : cls) {
      if (!vertices.same(es[e].source, es[first].source)) {
        out.push_back({side + "-edge-source-compatibility",
                       "edges '" + edge_name(p, first) + "' and '" + edge_name(p, e) +
                           "' share a " + side + "-class but their sources do not"});
      }
      if (!vertices.same(es[e].target, es[first].target)) {
        out.push_back({side + "-edge-target-compatibility",
                       "edges '" + edge_name(p, first) + "' and '" + edge_name(p, e) +
                           "' share a " + side + "-class but their targets do not"});
      }
    }
  }
}

// For each edge class C and each vertex v in the vertex class at the chosen
// end of C, exactly one edge of C must have v at that end.
void check_covering(const FiberedPresentation& p, const Partition& vertices, const Partition& edges,
                    bool outgoing, const std::string& rule, std::vector<Violation>& out) {
  const auto& es = p.base.edges();
  auto end_of = [&](std::size_t e) { return outgoing ? es[e].source : es[e].target; };
  for (std::size_t c = 0; c < edges.class_count(); ++c) {
    const auto& cls = edges.members(c);
    const std::size_t vc = vertices.class_of(end_of(cls.front()));
    for (std::size_t v : vertices.members(vc)) {
      std::size_t count = 0;
      for (std::size_t e : cls)
        if (end_of(e) == v) ++count;
      if (count != 1) {
        out.push_back({rule, "vertex '" + vertex_name(p, v) + "' has " + std::to_string(count) + " " +
                                 (outgoing ? "outgoing" : "incoming") + " edges in the class of '" +
                                 edge_name(p, cls.front()) + "'"});
      }
    }
  }
}

void check_grid(const Partition& y, const Partition& z, const std::string& rule,
                const std::function<std::string(std::size_t)>& name, std::vector<Violation>& out) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  for (std::size_t e = 0; e < y.element_count(); ++e) {
    auto [it, fresh] = seen.emplace(std::make_pair(y.class_of(e), z.class_of(e)), e);
    if (!fresh) {
      out.push_back({rule, "'" + name(it->second) + "' and '" + name(e) +
                               "' share both a y-class and a z-class"});
    }
  }
}

// The bipartite graph joining a y-class to each z-class it meets must be a
// disjoint union of complete bipartite graphs.
void check_rectangle(const Partition& y, const Partition& z, const std::string& rule,
                     const std::function<std::string(std::size_t)>& name, std::vector<Violation>& out) {
  const std::size_t ny = y.class_count();
  const std::size_t nz = z.class_count();
  std::vector<std::vector<bool>> meets(ny, std::vector<bool>(nz, false));
  for (std::size_t e = 0; e < y.element_count(); ++e) meets[y.class_of(e)][z.class_of(e)] = true;
  std::vector<std::size_t> parent(ny + nz);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    return parent[a] == a ? a : parent[a] = find(parent[a]);
  };
  for (std::size_t a = 0; a < ny; ++a)
    for (std::size_t b = 0; b < nz; ++b)
      if (meets[a][b]) parent[find(a)] = find(ny + b);
  for (std::size_t a = 0; a < ny; ++a) {
    for (std::size_t b = 0; b < nz; ++b) {
      if (!meets[a][b] && find(a) == find(ny + b)) {
        out.push_back({rule, "the y-class of '" + name(y.members(a).front()) + "' and the z-class of '" +
                                 name(z.members(b).front()) +
                                 "' are linked through other classes but do not meet"});
      }
    }
  }
}

}  // namespace

ValidationReport validate_presentation(const FiberedPresentation& p) {
  ValidationReport report;
  auto& out = report.violations;
  const std::size_t nv = p.base.vertex_count();
  const std::size_t ne = p.base.edge_count();
  const std::pair<const Partition*, std::string> vertex_parts[] = {{&p.y_vertex, "y_vertex_classes"},
                                                                   {&p.z_vertex, "z_vertex_classes"}};
  const std::pair<const Partition*, std::string> edge_parts[] = {{&p.y_edge, "y_edge_classes"},
                                                                 {&p.z_edge, "z_edge_classes"}};
  bool sized = true;
  for (const auto& [part, label] : vertex_parts) {
    if (part->element_count() != nv) {
      out.push_back({"partition-size", label + " does not partition the vertices"});
      sized = false;
    }
  }
  for (const auto& [part, label] : edge_parts) {
    if (part->element_count() != ne) {
      out.push_back({"partition-size", label + " does not partition the edges"});
      sized = false;
    }
  }
  if (!sized) return report;

  check_compatibility(p, p.y_vertex, p.y_edge, "y", out);
  check_compatibility(p, p.z_vertex, p.z_edge, "z", out);
  // Covering only makes sense once the classes line up with endpoints.
  if (out.empty()) {
    check_covering(p, p.y_vertex, p.y_edge, true, "y-out-covering", out);
    check_covering(p, p.z_vertex, p.z_edge, false, "z-in-covering", out);
  }
  auto vname = [&](std::size_t v) { return vertex_name(p, v); };
  auto ename = [&](std::size_t e) { return edge_name(p, e); };
  check_grid(p.y_vertex, p.z_vertex, "vertex-grid", vname, out);
  check_grid(p.y_edge, p.z_edge, "edge-grid", ename, out);
  check_rectangle(p.y_vertex, p.z_vertex, "vertex-rectangle", vname, out);
  check_rectangle(p.y_edge, p.z_edge, "edge-rectangle", ename, out);
  return report;
}

Array delete_row(const Array& a, ArrayShape shape, std::size_t row) {
  Array out;
  out.reserve(a.size() - shape.cols());
  for (std::size_t i = 0; i < shape.rows(); ++i) {
    if (i == row) continue;
    for (std::size_t j = 0; j < shape.cols(); ++j) out.push_back(a[i * shape.cols() + j]);
  }
  return out;
}

Array delete_column(const Array& a, ArrayShape shape, std::size_t col) {
  Array out;
  out.reserve(a.size() - shape.rows());
  for (std::size_t i = 0; i < shape.rows(); ++i)
    for (std::size_t j = 0; j < shape.cols(); ++j)
      if (j != col) out.push_back(a[i * shape.cols() + j]);
  return out;
}

Array permute_array(const Array& a, ArrayShape shape, const std::vector<std::size_t>& row_perm,
                    const std::vector<std::size_t>& col_perm) {
  Array out(a.size());
  for (std::size_t i = 0; i < shape.rows(); ++i)
    for (std::size_t j = 0; j < shape.cols(); ++j)
      out[i * shape.cols() + j] = a[row_perm[i] * shape.cols() + col_perm[j]];
  return out;
}

bool has_repeated_rows(const Array& a, ArrayShape shape) {
  const std::size_t c = shape.cols();
  for (std::size_t i = 0; i < shape.rows(); ++i)
    for (std::size_t k = i + 1; k < shape.rows(); ++k)
      if (std::equal(a.begin() + i * c, a.begin() + (i + 1) * c, a.begin() + k * c)) return true;
  return false;
}

bool has_repeated_columns(const Array& a, ArrayShape shape) {
  const std::size_t c = shape.cols();
  for (std::size_t j = 0; j < c; ++j) {
    for (std::size_t k = j + 1; k < c; ++k) {
      bool equal = true;
      for (std::size_t i = 0; i < shape.rows() && equal; ++i) equal = a[i * c + j] == a[i * c + k];
      if (equal) return true;
    }
  }
  return false;
}

namespace {

// Backtracking over cells in row-major order. `candidates(i, j, partial)`
// lists admissible entries for cell (i, j) in increasing order, so results
// come out lexicographically sorted.
template <typename Candidates, typename Emit>
void enumerate_arrays(ArrayShape shape, Array& partial, std::size_t cell, const Candidates& candidates,
                      const Emit& emit) {
  if (cell == shape.size()) {
    emit(partial);
    return;
  }
  const std::size_t i = cell / shape.cols();
  const std::size_t j = cell % shape.cols();
  for (std::size_t x : candidates(i, j, partial)) {
    partial[cell] = x;
    enumerate_arrays(shape, partial, cell + 1, candidates, emit);
  }
}

// Entries sharing a column lie in one y-class; entries sharing a row lie in
// one z-class. Checking against the first entry of the row and column is
// enough because classes are transitive.
std::vector<std::size_t> admissible(const Partition& y, const Partition& z, std::size_t universe,
                                    ArrayShape shape, std::size_t i, std::size_t j, const Array& partial) {
  const std::size_t c = shape.cols();
  std::vector<std::size_t> out;
  if (i == 0 && j == 0) {
    out.resize(universe);
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  if (i == 0) return z.members(z.class_of(partial[0]));
  if (j == 0) return y.members(y.class_of(partial[0]));
  for (std::size_t x : y.members(y.class_of(partial[j])))
    if (z.same(x, partial[i * c])) out.push_back(x);
  return out;
}

std::vector<Array> vertex_arrays(const FiberedPresentation& p, ArrayShape shape) {
  std::vector<Array> out;
  Array partial(shape.size());
  const std::size_t n = p.base.vertex_count();
  if (n == 0) return out;
  auto candidates = [&](std::size_t i, std::size_t j, const Array& a) {
    return admissible(p.y_vertex, p.z_vertex, n, shape, i, j, a);
  };
  enumerate_arrays(shape, partial, 0, candidates, [&](const Array& a) { out.push_back(a); });
  return out;
}

std::vector<std::vector<std::size_t>> out_edges(const Graph& g) {
  std::vector<std::vector<std::size_t>> out(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) out[g.edges()[e].source].push_back(e);
  return out;
}

// Every edge array leaving the vertex array `v`; `emit(edges, targets)`.
template <typename Emit>
void edge_arrays_from(const FiberedPresentation& p, const std::vector<std::vector<std::size_t>>& outs,
                      ArrayShape shape, const Array& v, const Emit& emit) {
  const std::size_t c = shape.cols();
  auto candidates = [&](std::size_t i, std::size_t j, const Array& a) {
    std::vector<std::size_t> res;
    for (std::size_t e : outs[v[i * c + j]]) {
      if (j > 0 && !p.z_edge.same(e, a[i * c])) continue;
      if (i > 0 && !p.y_edge.same(e, a[j])) continue;
      res.push_back(e);
    }
    return res;
  };
  Array partial(shape.size());
  enumerate_arrays(shape, partial, 0, candidates, [&](const Array& edges) {
    Array targets(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) targets[k] = p.base.edges()[edges[k]].target;
    emit(edges, targets);
  });
}

int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

void require_valid(const FiberedPresentation& p, const std::string& where) {
  const ValidationReport report = validate_presentation(p);
  if (!report.valid()) {
    const Violation& v = report.violations.front();
    throw PresentationInvalid(where + ": " + v.rule + ": " + v.detail);
  }
}

}  // namespace

std::optional<std::size_t> FiberPowerGraph::vertex_index(const Array& a) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), a);
  if (it == vertices.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::string array_to_string(const Array& a, ArrayShape shape, const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < shape.rows(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < shape.cols(); ++j) {
      if (j) out += ',';
      out += names.at(a[i * shape.cols() + j]);
    }
  }
  return out + ")";
}

Graph FiberPowerGraph::as_graph(const Graph& base) const {
  if (shape.size() == 1) {
    // (0, 0) is the base graph itself.
    std::vector<std::string> ids;
    std::vector<GraphEdge> es;
    for (const auto& v : vertices) ids.push_back(base.vertex_ids()[v[0]]);
    for (const auto& e : edges) es.push_back({base.edges()[e.entries[0]].id, e.source, e.target});
    return Graph(std::move(ids), std::move(es));
  }
  std::vector<std::string> edge_names;
  for (const auto& e : base.edges()) edge_names.push_back(e.id);
  std::vector<std::string> ids;
  for (const auto& v : vertices) ids.push_back(array_to_string(v, shape, base.vertex_ids()));
  std::vector<GraphEdge> es;
  for (const auto& e : edges) es.push_back({array_to_string(e.entries, shape, edge_names), e.source, e.target});
  return Graph(std::move(ids), std::move(es));
}

FiberPowerGraph enumerate_fiber_power(const FiberedPresentation& p, std::size_t l, std::size_t m) {
  FiberPowerGraph g;
  g.shape = ArrayShape{l, m};
  g.vertices = vertex_arrays(p, g.shape);
  const auto outs = out_edges(p.base);
  for (std::size_t s = 0; s < g.vertices.size(); ++s) {
    edge_arrays_from(p, outs, g.shape, g.vertices[s], [&](const Array& edges, const Array& targets) {
      auto t = g.vertex_index(targets);
      if (!t) throw PresentationInvalid("fiber_power_graph: edge array lands outside the vertex arrays");
      g.edges.push_back(EdgeArray{edges, s, *t});
    });
  }
  return g;
}

FiberPowerGraph fiber_power_graph(const FiberedPresentation& p, std::size_t l, std::size_t m) {
  require_valid(p, "fiber_power_graph");
  return enumerate_fiber_power(p, l, m);
}

std::optional<std::pair<Array, int>> canonical_orbit_representative(const Array& a, ArrayShape shape) {
  if (has_repeated_rows(a, shape) || has_repeated_columns(a, shape)) return std::nullopt;
  const std::size_t r = shape.rows();
  const std::size_t c = shape.cols();
  std::vector<std::size_t> col_perm(c);
  std::iota(col_perm.begin(), col_perm.end(), 0);
  std::vector<std::size_t> identity_rows(r);
  std::iota(identity_rows.begin(), identity_rows.end(), 0);
  const std::vector<std::size_t> identity_cols = col_perm;
  std::optional<std::pair<Array, int>> best;
  do {
    const Array b = permute_array(a, shape, identity_rows, col_perm);
    std::vector<std::size_t> row_perm = identity_rows;
    std::sort(row_perm.begin(), row_perm.end(), [&](std::size_t x, std::size_t y) {
      return std::lexicographical_compare(b.begin() + x * c, b.begin() + (x + 1) * c, b.begin() + y * c,
                                          b.begin() + (y + 1) * c);
    });
    Array candidate = permute_array(b, shape, row_perm, identity_cols);
    if (!best || candidate < best->first) {
      best = std::make_pair(std::move(candidate), permutation_sign(col_perm) * permutation_sign(row_perm));
    }
  } while (std::next_permutation(col_perm.begin(), col_perm.end()));
  return best;
}

SignBasis::SignBasis(ArrayShape shape, std::vector<Array> representatives)
    : shape_(shape), representatives_(std::move(representatives)) {
  std::sort(representatives_.begin(), representatives_.end());
  for (std::size_t i = 0; i < representatives_.size(); ++i) index_.emplace(representatives_[i], i);
}

std::optional<SignBasis::Located> SignBasis::locate(const Array& a) const {
  if (a.size() != shape_.size()) throw DomainMismatch("SignBasis::locate: array has the wrong shape");
  auto canonical = canonical_orbit_representative(a, shape_);
  if (!canonical) return std::nullopt;
  auto it = index_.find(canonical->first);
  if (it == index_.end()) return std::nullopt;
  return Located{it->second, canonical->second};
}

namespace {

SignBasis basis_from_arrays(const std::vector<Array>& arrays, ArrayShape shape) {
  std::vector<Array> reps;
  for (const auto& a : arrays) {
    auto canonical = canonical_orbit_representative(a, shape);
    if (canonical && canonical->first == a) reps.push_back(a);
  }
  return SignBasis(shape, std::move(reps));
}

}  // namespace

SignBasis sign_basis(const FiberPowerGraph& g) { return basis_from_arrays(g.vertices, g.shape); }

SignBasis sign_basis(const FiberedPresentation& p, std::size_t l, std::size_t m) {
  const ArrayShape shape{l, m};
  return basis_from_arrays(vertex_arrays(p, shape), shape);
}

IntMatrix reduced_endo(const FiberedPresentation& p, const SignBasis& basis) {
  const std::size_t n = basis.size();
  IntMatrix out(n, n);
  const auto outs = out_edges(p.base);
  for (std::size_t s = 0; s < n; ++s) {
    edge_arrays_from(p, outs, basis.shape(), basis.representatives()[s],
                     [&](const Array&, const Array& targets) {
                       if (auto loc = basis.locate(targets)) out(loc->index, s) += loc->sign;
                     });
  }
  return out;
}

IntMatrix reduced_face_row(const SignBasis& from, const SignBasis& to, std::size_t row) {
  IntMatrix out(to.size(), from.size());
  for (std::size_t s = 0; s < from.size(); ++s) {
    if (auto loc = to.locate(delete_row(from.representatives()[s], from.shape(), row)))
      out(loc->index, s) += loc->sign;
  }
  return out;
}

IntMatrix reduced_coface_column(const SignBasis& from, const SignBasis& to, std::size_t col) {
  IntMatrix out(to.size(), from.size());
  for (std::size_t t = 0; t < to.size(); ++t) {
    if (auto loc = from.locate(delete_column(to.representatives()[t], to.shape(), col)))
      out(t, loc->index) += loc->sign;
  }
  return out;
}

namespace {

// Calls f(element, sign) for every element of the row x column orbit of a.
template <typename F>
void for_each_orbit_element(const Array& a, ArrayShape shape, F&& f) {
  std::vector<std::size_t> rows(shape.rows()), cols(shape.cols());
  std::iota(rows.begin(), rows.end(), 0);
  do {
    std::iota(cols.begin(), cols.end(), 0);
    do {
      f(permute_array(a, shape, rows, cols), permutation_sign(rows) * permutation_sign(cols));
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(rows.begin(), rows.end()));
}

// Index of `a` when it is literally one of the representatives.
std::optional<std::size_t> representative_index(const SignBasis& basis, const Array& a) {
  auto loc = basis.locate(a);
  if (!loc || basis.representatives()[loc->index] != a) return std::nullopt;
  return loc->index;
}

}  // namespace

IntMatrix symmetrized_face_row(const SignBasis& from, const SignBasis& to, std::size_t row) {
  IntMatrix out(to.size(), from.size());
  for (std::size_t s = 0; s < from.size(); ++s) {
    for_each_orbit_element(from.representatives()[s], from.shape(), [&](const Array& a, int sign) {
      if (auto t = representative_index(to, delete_row(a, from.shape(), row))) out(*t, s) += sign;
    });
  }
  return out;
}

IntMatrix symmetrized_coface_column(const SignBasis& from, const SignBasis& to, std::size_t col) {
  IntMatrix out(to.size(), from.size());
  for (std::size_t t = 0; t < to.size(); ++t) {
    for_each_orbit_element(to.representatives()[t], to.shape(), [&](const Array& a, int sign) {
      if (auto s = representative_index(from, delete_column(a, to.shape(), col))) out(t, *s) += sign;
    });
  }
  return out;
}

namespace {

GroupMorphism checked_face(const FiberedPresentation& p, const SignBasis& from, const SignBasis& to,
                           IntMatrix matrix, const std::string& name) {
  const IntMatrix lhs = matrix * reduced_endo(p, from);
  const IntMatrix rhs = reduced_endo(p, to) * matrix;
  if (lhs != rhs) throw NotEquivariant(name + ": face map does not commute with the stage endomorphisms");
  return GroupMorphism(FgAbGroup::free(from.size()), FgAbGroup::free(to.size()), std::move(matrix));
}

}  // namespace

GroupMorphism face_row_covariant(const FiberedPresentation& p, std::size_t l, std::size_t m, std::size_t row) {
  require_valid(p, "face_row_covariant");
  if (l == 0 || row > l) throw DomainMismatch("face_row_covariant: row index out of range");
  const SignBasis from = sign_basis(p, l, m);
  const SignBasis to = sign_basis(p, l - 1, m);
  return checked_face(p, from, to, symmetrized_face_row(from, to, row), "face_row_covariant");
}

GroupMorphism face_column_contravariant(const FiberedPresentation& p, std::size_t l, std::size_t m,
                                        std::size_t col) {
  require_valid(p, "face_column_contravariant");
  if (col > m + 1) throw DomainMismatch("face_column_contravariant: column index out of range");
  const SignBasis from = sign_basis(p, l, m);
  const SignBasis to = sign_basis(p, l, m + 1);
  return checked_face(p, from, to, symmetrized_coface_column(from, to, col), "face_column_contravariant");
}

IntMatrix stage_endo(const FiberPowerGraph& g) {
  IntMatrix out(g.vertices.size(), g.vertices.size());
  for (const auto& e : g.edges) out(e.target, e.source) += 1;
  return out;
}

IntMatrix stage_face_row(const FiberPowerGraph& from, const FiberPowerGraph& to, std::size_t row) {
  IntMatrix out(to.vertices.size(), from.vertices.size());
  for (std::size_t s = 0; s < from.vertices.size(); ++s) {
    auto t = to.vertex_index(delete_row(from.vertices[s], from.shape, row));
    if (!t) throw DomainMismatch("stage_face_row: deleted array is not a vertex of the target");
    out(*t, s) += 1;
  }
  return out;
}

IntMatrix stage_coface_column(const FiberPowerGraph& from, const FiberPowerGraph& to, std::size_t col) {
  IntMatrix out(to.vertices.size(), from.vertices.size());
  for (std::size_t t = 0; t < to.vertices.size(); ++t) {
    auto s = from.vertex_index(delete_column(to.vertices[t], to.shape, col));
    if (!s) throw DomainMismatch("stage_coface_column: deleted array is not a vertex of the source");
    out(t, *s) += 1;
  }
  return out;
}

}  // namespace stablehom
