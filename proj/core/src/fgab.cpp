#include "stablehom/fgab.hpp"

#include <utility>

#include "stablehom/errors.hpp"

namespace stablehom {

FgAbGroup::FgAbGroup() : relations_(0, 0) {}

FgAbGroup::FgAbGroup(std::size_t generators, IntMatrix relations)
    : generators_(generators), relations_(std::move(relations)) {
  if (relations_.rows() != generators_) {
    if (relations_.rows() == 0 && relations_.cols() == 0) {
      relations_ = IntMatrix(generators_, 0);
    } else {
      throw DomainMismatch("FgAbGroup: relation matrix has " + std::to_string(relations_.rows()) +
                           " rows for " + std::to_string(generators_) + " generators");
    }
  }
  const SmithForm snf = smith_normal_form(relations_);
  free_rank_ = generators_ - snf.rank;
  for (std::size_t i = 0; i < snf.rank; ++i) {
    if (snf.d(i, i) != 1) invariant_factors_.push_back(snf.d(i, i));
  }
}

FgAbGroup FgAbGroup::free(std::size_t rank) { return FgAbGroup(rank, IntMatrix(rank, 0)); }

FgAbGroup FgAbGroup::cyclic(const Integer& order) {
  if (order == 0) return free(1);
  return FgAbGroup(1, IntMatrix(1, 1, {abs(order)}));
}

FgAbGroup FgAbGroup::from_invariants(std::size_t free_rank, const std::vector<Integer>& torsion) {
  const std::size_t n = free_rank + torsion.size();
  IntMatrix rel(n, torsion.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) rel(free_rank + i, i) = torsion[i];
  return FgAbGroup(n, std::move(rel));
}

bool FgAbGroup::annihilates(const IntMatrix& vectors) const {
  if (vectors.rows() != generators_) throw DomainMismatch("FgAbGroup::annihilates: wrong vector length");
  if (vectors.is_zero()) return true;
  return solve_integer(relations_, vectors).has_value();
}

bool FgAbGroup::same_presentation(const FgAbGroup& other) const {
  if (generators_ != other.generators_) return false;
  if (relations_ == other.relations_) return true;
  // Equal relation lattices are as good as equal matrices.
  return annihilates(other.relations_) && other.annihilates(relations_);
}

FgAbGroup FgAbGroup::normal_form() const { return from_invariants(free_rank_, invariant_factors_); }

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (free_rank_ > 0) out = free_rank_ == 1 ? "Z" : "Z^" + std::to_string(free_rank_);
  for (const auto& d : invariant_factors_) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  return out;
}

GroupMorphism::GroupMorphism(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.generators() || matrix_.cols() != source_.generators()) {
    if (matrix_.rows() == 0 && matrix_.cols() == 0) {
      matrix_ = IntMatrix(target_.generators(), source_.generators());
    } else {
      throw DomainMismatch("GroupMorphism: matrix is " + std::to_string(matrix_.rows()) + "x" +
                           std::to_string(matrix_.cols()) + ", expected " +
                           std::to_string(target_.generators()) + "x" +
                           std::to_string(source_.generators()));
    }
  }
  if (!target_.annihilates(matrix_ * source_.relations())) {
    throw IllDefinedMorphism("GroupMorphism: source relations do not map into target relations");
  }
}

GroupMorphism GroupMorphism::zero(const FgAbGroup& source, const FgAbGroup& target) {
  return GroupMorphism(source, target, IntMatrix(target.generators(), source.generators()));
}

GroupMorphism GroupMorphism::identity(const FgAbGroup& group) {
  return GroupMorphism(group, group, IntMatrix::identity(group.generators()));
}

bool GroupMorphism::is_zero() const { return target_.annihilates(matrix_); }

GroupMorphism GroupMorphism::after(const GroupMorphism& first) const {
  if (!first.target().same_presentation(source_)) {
    throw DomainMismatch("GroupMorphism::after: target of first map is not this source");
  }
  return GroupMorphism(first.source(), target_, matrix_ * first.matrix());
}

Subquotient::Subquotient(const IntMatrix& sub, const IntMatrix& killed)
    : sub_basis_(lattice_basis(sub)), sub_solver_(sub_basis_) {
  const std::size_t k = sub_basis_.cols();
  IntMatrix relations_on_basis(k, 0);
  if (killed.cols() > 0) {
    auto solved = sub_solver_.solve(killed);
    if (!solved) throw DomainMismatch("Subquotient: killed lattice is not inside the sub lattice");
    relations_on_basis = std::move(*solved);
  }
  const SmithForm snf = smith_normal_form(relations_on_basis);
  std::vector<std::size_t> kept;
  std::vector<Integer> orders;  // 0 marks a free generator
  for (std::size_t i = 0; i < k; ++i) {
    const Integer d = i < snf.rank ? snf.d(i, i) : Integer(0);
    if (d == 1) continue;
    kept.push_back(i);
    orders.push_back(d);
  }
  to_generators_ = IntMatrix(kept.size(), k);
  representatives_ = IntMatrix(sub_basis_.rows(), kept.size());
  const IntMatrix ambient = sub_basis_ * snf.u_inverse;
  std::size_t torsion_count = 0;
  for (const auto& d : orders)
    if (d != 0) ++torsion_count;
  IntMatrix rel(kept.size(), torsion_count);
  std::size_t t = 0;
  for (std::size_t g = 0; g < kept.size(); ++g) {
    for (std::size_t c = 0; c < k; ++c) to_generators_(g, c) = snf.u(kept[g], c);
    for (std::size_t r = 0; r < sub_basis_.rows(); ++r) representatives_(r, g) = ambient(r, kept[g]);
    if (orders[g] != 0) rel(g, t++) = orders[g];
  }
  group_ = FgAbGroup(kept.size(), std::move(rel));
}

IntMatrix Subquotient::coordinates(const IntMatrix& ambient_vectors) const {
  if (ambient_vectors.cols() == 0) return IntMatrix(group_.generators(), 0);
  auto solved = sub_solver_.solve(ambient_vectors);
  if (!solved) throw DomainMismatch("Subquotient::coordinates: vector outside the sub lattice");
  return to_generators_ * *solved;
}

IntMatrix Subquotient::induced(const IntMatrix& ambient_map) const {
  return coordinates(ambient_map * representatives_);
}

namespace {

IntMatrix preimage_kernel(const IntMatrix& map, const IntMatrix& target_relations) {
  const IntMatrix k = kernel_basis(hstack(map, target_relations));
  return k.rows_range(0, map.cols());
}

}  // namespace

Subquotient homology_presentation(const GroupMorphism& incoming, const GroupMorphism& outgoing) {
  if (!incoming.target().same_presentation(outgoing.source())) {
    throw DomainMismatch("homology_at: incoming target differs from outgoing source");
  }
  if (!outgoing.target().annihilates(outgoing.matrix() * incoming.matrix())) {
    throw CompositionNotZero("homology_at: outgoing after incoming is not zero");
  }
  const IntMatrix cycles = preimage_kernel(outgoing.matrix(), outgoing.target().relations());
  const IntMatrix killed = hstack(incoming.matrix(), outgoing.source().relations());
  return Subquotient(cycles, killed);
}

FgAbGroup homology_at(const GroupMorphism& incoming, const GroupMorphism& outgoing) {
  return homology_presentation(incoming, outgoing).group();
}

Subquotient kernel_presentation(const GroupMorphism& f) {
  return Subquotient(preimage_kernel(f.matrix(), f.target().relations()), f.source().relations());
}

Subquotient tensor_presentation(const FgAbGroup& g, const FgAbGroup& h) {
  const std::size_t n = g.generators();
  const std::size_t m = h.generators();
  const IntMatrix rel = hstack(kronecker(g.relations(), IntMatrix::identity(m)),
                               kronecker(IntMatrix::identity(n), h.relations()));
  return Subquotient(IntMatrix::identity(n * m), rel);
}

FgAbGroup tensor(const FgAbGroup& g, const FgAbGroup& h) {
  return tensor_presentation(g.normal_form(), h.normal_form()).group();
}

TorPresentation tor_presentation(const FgAbGroup& g, const FgAbGroup& h) {
  const std::size_t n = g.generators();
  const std::size_t m = h.generators();
  IntMatrix basis = lattice_basis(g.relations());
  const std::size_t p = basis.cols();
  const IntMatrix map = kronecker(basis, IntMatrix::identity(m));
  const IntMatrix cycles = preimage_kernel(map, kronecker(IntMatrix::identity(n), h.relations()));
  const IntMatrix killed = kronecker(IntMatrix::identity(p), h.relations());
  return TorPresentation{std::move(basis), Subquotient(cycles, killed)};
}

FgAbGroup tor(const FgAbGroup& g, const FgAbGroup& h) {
  return tor_presentation(g.normal_form(), h.normal_form()).kernel.group();
}

FgAbGroup direct_sum(const std::vector<FgAbGroup>& groups) {
  std::size_t n = 0;
  IntMatrix rel(0, 0);
  for (const auto& g : groups) {
    n += g.generators();
    rel = block_diagonal(rel, g.relations());
  }
  return FgAbGroup(n, std::move(rel));
}

}  // namespace stablehom
