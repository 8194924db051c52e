#include "stablehom/stationary.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "stablehom/errors.hpp"

namespace stablehom {

namespace {

IntMatrix preimage_kernel(const IntMatrix& map, const IntMatrix& target_relations) {
  return kernel_basis(hstack(map, target_relations)).rows_range(0, map.cols());
}

// Matrix of `endo` on the free quotient of Z^n / relations.
IntMatrix free_quotient_block(const IntMatrix& relations, const IntMatrix& endo) {
  const SmithForm snf = smith_normal_form(relations);
  const IntMatrix conjugated = snf.u * endo * snf.u_inverse;
  const std::size_t n = endo.rows();
  const std::size_t free = n - snf.rank;
  IntMatrix block(free, free);
  for (std::size_t i = 0; i < free; ++i)
    for (std::size_t j = 0; j < free; ++j) block(i, j) = conjugated(snf.rank + i, snf.rank + j);
  return block;
}

}  // namespace

StationarySystem::StationarySystem() : stage_(), endo_(0, 0), normalized_(true) {}

StationarySystem::StationarySystem(FgAbGroup stage, IntMatrix endo, bool normalized)
    : stage_(std::move(stage)), endo_(std::move(endo)), normalized_(normalized) {
  if (endo_.rows() != stage_.generators() || endo_.cols() != stage_.generators()) {
    if (endo_.rows() == 0 && endo_.cols() == 0 && stage_.generators() == 0) return;
    throw DomainMismatch("StationarySystem: endo shape does not match the stage");
  }
  // Throws IllDefinedMorphism when the relations are not preserved.
  (void)GroupMorphism(stage_, stage_, endo_);
  if (normalized_ && !endo_injective(*this)) {
    throw NotEquivariant("StationarySystem: normalized flag set but endo is not injective");
  }
}

StationarySystem StationarySystem::multiplication(const Integer& factor) {
  return StationarySystem(FgAbGroup::free(1), IntMatrix(1, 1, {factor}));
}

StationarySystem StationarySystem::constant(const FgAbGroup& stage) {
  return StationarySystem(stage, IntMatrix::identity(stage.generators()), true);
}

std::string StationaryInvariants::to_string() const {
  std::ostringstream os;
  os << "rank " << rank;
  os << ", torsion [";
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) os << ", ";
    os << invariant_factors[i].get_str();
  }
  os << "], |det| " << endo_det_abs.get_str() << ", Bowen-Franks " << bowen_franks.to_string();
  return os.str();
}

StationarySystem krieger_dimension_group(const Graph& graph) {
  if (auto v = graph.first_inessential_vertex()) {
    const std::string& id = graph.vertex_ids()[*v];
    throw NotEssential(id, "krieger_dimension_group: vertex '" + id +
                               "' lacks an incoming or an outgoing edge");
  }
  return StationarySystem(FgAbGroup::free(graph.vertex_count()), graph.adjacency().transpose());
}

bool endo_injective(const StationarySystem& system) {
  const auto& rel = system.stage().relations();
  const IntMatrix kernel = preimage_kernel(system.endo(), rel);
  return system.stage().annihilates(kernel);
}

StationarySystem eventual_normalize(const StationarySystem& system) {
  if (system.normalized()) return system;
  const std::size_t n = system.stage().generators();
  const IntMatrix& endo = system.endo();
  // Grow the killed lattice by the kernel of endo modulo it until endo is
  // injective on the quotient. Each round shrinks the quotient strictly, so
  // this terminates.
  IntMatrix killed = system.stage().relations();
  for (;;) {
    const IntMatrix kernel = preimage_kernel(endo, killed);
    const FgAbGroup current(n, killed);
    if (current.annihilates(kernel)) break;
    killed = hstack(killed, kernel);
  }
  const Subquotient quotient(IntMatrix::identity(n), killed);
  return StationarySystem(quotient.group(), quotient.induced(endo), true);
}

StationaryInvariants invariants(const StationarySystem& system) {
  const StationarySystem normalized = eventual_normalize(system);
  const FgAbGroup& stage = normalized.stage();
  StationaryInvariants out;
  out.rank = stage.free_rank();
  out.invariant_factors = stage.invariant_factors();
  out.endo_det_abs = abs(determinant(free_quotient_block(stage.relations(), normalized.endo())));
  const std::size_t n = stage.generators();
  out.bowen_franks =
      FgAbGroup(n, hstack(stage.relations(), IntMatrix::identity(n) - normalized.endo())).normal_form();
  return out;
}

StationarySystem limit_tensor(const StationarySystem& a, const StationarySystem& b) {
  const Subquotient sq = tensor_presentation(a.stage(), b.stage());
  return eventual_normalize(StationarySystem(sq.group(), sq.induced(kronecker(a.endo(), b.endo()))));
}

StationarySystem limit_tor(const StationarySystem& a, const StationarySystem& b) {
  const TorPresentation tp = tor_presentation(a.stage(), b.stage());
  // Lift a's endo to the relation module: basis * lift = endo * basis. The
  // basis has independent columns, so the lift is unique.
  IntMatrix lift(tp.relation_basis.cols(), tp.relation_basis.cols());
  if (tp.relation_basis.cols() > 0) {
    auto solved = solve_integer(tp.relation_basis, a.endo() * tp.relation_basis);
    if (!solved) throw IllDefinedMorphism("limit_tor: endo does not preserve the relation lattice");
    lift = std::move(*solved);
  }
  const IntMatrix ambient = kronecker(lift, b.endo());
  return eventual_normalize(StationarySystem(tp.kernel.group(), tp.kernel.induced(ambient)));
}

StationarySystem limit_direct_sum(const std::vector<StationarySystem>& systems) {
  std::vector<FgAbGroup> stages;
  IntMatrix endo(0, 0);
  bool all_normalized = true;
  for (const auto& s : systems) {
    stages.push_back(s.stage());
    endo = block_diagonal(endo, s.endo());
    all_normalized = all_normalized && s.normalized();
  }
  return StationarySystem(direct_sum(stages), std::move(endo), all_normalized);
}

const StationarySystem& StationaryComplex::term(int degree) const {
  static const StationarySystem trivial;
  auto it = terms.find(degree);
  return it == terms.end() ? trivial : it->second;
}

std::pair<int, int> StationaryComplex::degree_range() const {
  if (terms.empty()) return {0, -1};
  return {terms.begin()->first, terms.rbegin()->first};
}

namespace {

GroupMorphism differential(const StationaryComplex& complex, int degree) {
  const StationarySystem& source = complex.term(degree);
  const StationarySystem& target = complex.term(degree - 1);
  auto it = complex.differentials.find(degree);
  if (it == complex.differentials.end()) return GroupMorphism::zero(source.stage(), target.stage());
  return GroupMorphism(source.stage(), target.stage(), it->second);
}

}  // namespace

std::map<int, StationarySystem> limit_homology(const StationaryComplex& complex) {
  std::map<int, StationarySystem> out;
  const auto [low, high] = complex.degree_range();
  for (const auto& [degree, matrix] : complex.differentials) {
    const GroupMorphism d = differential(complex, degree);
    const IntMatrix commutator = d.matrix() * complex.term(degree).endo() -
                                 complex.term(degree - 1).endo() * d.matrix();
    if (!d.target().annihilates(commutator)) {
      throw NotEquivariant("limit_homology: differential from degree " + std::to_string(degree) +
                           " does not commute with the endomorphisms");
    }
  }
  for (int k = low; k <= high; ++k) {
    const Subquotient h = homology_presentation(differential(complex, k + 1), differential(complex, k));
    out.emplace(k, eventual_normalize(
                       StationarySystem(h.group(), h.induced(complex.term(k).endo()))));
  }
  return out;
}

}  // namespace stablehom
