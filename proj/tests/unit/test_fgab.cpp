#include <gtest/gtest.h>

#include <random>
#include <set>

#include "stablehom/errors.hpp"
#include "stablehom/fgab.hpp"
#include "test_support.hpp"

using namespace stablehom;

namespace {

FgAbGroup z() { return FgAbGroup::free(1); }
FgAbGroup zmod(long n) { return FgAbGroup::cyclic(n); }

// Z/n1 + ... + Z/nk as a diagonal presentation.
FgAbGroup finite(const std::vector<long>& orders) {
  IntMatrix rel(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) rel(i, i) = orders[i];
  return FgAbGroup(orders.size(), rel);
}

// Number of elements killed by k in the finite abelian group given by
// invariant factors; a complete isomorphism invariant as k ranges.
long count_killed_by(const FgAbGroup& g, long k) {
  long out = 1;
  for (const auto& d : g.invariant_factors()) out *= std::gcd(static_cast<long>(d.get_si()), k);
  return out;
}

using Element = std::vector<long>;

std::vector<Element> all_elements(const std::vector<long>& orders) {
  std::vector<Element> out{{}};
  for (long n : orders) {
    std::vector<Element> next;
    for (const auto& e : out)
      for (long x = 0; x < n; ++x) {
        Element f = e;
        f.push_back(x);
        next.push_back(std::move(f));
      }
    out = std::move(next);
  }
  return out;
}

Element apply(const IntMatrix& m, const Element& x, const std::vector<long>& target_orders) {
  Element out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    long acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j).get_si() * x[j];
    out[i] = ((acc % target_orders[i]) + target_orders[i]) % target_orders[i];
  }
  return out;
}

}  // namespace

TEST(FgAbGroup, NormalForm) {
  const FgAbGroup g(2, IntMatrix::from_rows({{2, 4}, {6, 8}}));
  EXPECT_EQ(g.free_rank(), 0u);
  EXPECT_EQ(g.invariant_factors(), (std::vector<Integer>{2, 4}));
  EXPECT_EQ(g.to_string(), "Z/2 + Z/4");
  EXPECT_EQ(FgAbGroup::free(2).to_string(), "Z^2");
  EXPECT_EQ(FgAbGroup().to_string(), "0");
  EXPECT_TRUE(FgAbGroup(1, IntMatrix::from_rows({{1}})).is_trivial());
  EXPECT_EQ(zmod(0), z());
  EXPECT_THROW(FgAbGroup(2, IntMatrix(3, 1)), DomainMismatch);
}

TEST(FgAbGroup, NormalFormIsIdempotent) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
    const std::size_t r = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
    const FgAbGroup g(n, stablehom::testing::random_matrix(rng, n, r, -6, 6));
    const FgAbGroup nf = g.normal_form();
    ASSERT_EQ(nf, g);
    ASSERT_TRUE(nf.normal_form().same_presentation(nf));
  }
}

TEST(GroupMorphism, WellDefinednessIsChecked) {
  EXPECT_NO_THROW(GroupMorphism(zmod(4), zmod(2), IntMatrix::from_rows({{1}})));
  EXPECT_THROW(GroupMorphism(zmod(2), zmod(4), IntMatrix::from_rows({{1}})), IllDefinedMorphism);
  EXPECT_NO_THROW(GroupMorphism(zmod(2), zmod(4), IntMatrix::from_rows({{2}})));
  EXPECT_THROW(GroupMorphism(z(), z(), IntMatrix(2, 1)), DomainMismatch);
}

TEST(HomologyAt, TimesTwoCokernel) {
  // 0 -> Z -(x2)-> Z -> 0, homology at the right node.
  const GroupMorphism doubling(z(), z(), IntMatrix::from_rows({{2}}));
  const GroupMorphism out = GroupMorphism::zero(z(), FgAbGroup());
  EXPECT_EQ(homology_at(doubling, out), zmod(2));
}

TEST(HomologyAt, ZeroDifferentialsGiveTheGroup) {
  const FgAbGroup g = direct_sum({z(), zmod(6)});
  EXPECT_EQ(homology_at(GroupMorphism::zero(g, g), GroupMorphism::zero(g, g)), g);
}

TEST(HomologyAt, ExactSequenceIsZero) {
  const GroupMorphism id = GroupMorphism::identity(z());
  EXPECT_TRUE(homology_at(id, GroupMorphism::zero(z(), FgAbGroup())).is_trivial());
}

TEST(HomologyAt, Errors) {
  const GroupMorphism id = GroupMorphism::identity(z());
  EXPECT_THROW(homology_at(id, id), CompositionNotZero);
  EXPECT_THROW(homology_at(id, GroupMorphism::zero(zmod(2), z())), DomainMismatch);
}

TEST(HomologyAt, PropertyBruteForceOverFiniteGroups) {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<long> order(2, 6);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long> c1(std::uniform_int_distribution<std::size_t>(1, 3)(rng));
    std::vector<long> c0(std::uniform_int_distribution<std::size_t>(1, 2)(rng));
    for (auto& n : c1) n = order(rng);
    for (auto& n : c0) n = order(rng);
    // d1: C1 -> C0 well defined when n_j * d(i, j) = 0 mod m_i.
    IntMatrix d1(c0.size(), c1.size());
    for (std::size_t i = 0; i < c0.size(); ++i)
      for (std::size_t j = 0; j < c1.size(); ++j) {
        const long step = c0[i] / std::gcd(c0[i], c1[j]);
        d1(i, j) = step * std::uniform_int_distribution<long>(0, 5)(rng);
      }
    const auto elems = all_elements(c1);
    std::vector<Element> kernel;
    for (const auto& x : elems) {
      const Element y = apply(d1, x, c0);
      if (std::all_of(y.begin(), y.end(), [](long v) { return v == 0; })) kernel.push_back(x);
    }
    // d2: Z^k -> C1 with columns drawn from the kernel, so d1 d2 = 0.
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    IntMatrix d2(c1.size(), k);
    for (std::size_t col = 0; col < k; ++col) {
      const Element& x = kernel[std::uniform_int_distribution<std::size_t>(0, kernel.size() - 1)(rng)];
      for (std::size_t i = 0; i < c1.size(); ++i) d2(i, col) = x[i];
    }
    std::set<Element> image;
    for (const auto& coeffs : all_elements(std::vector<long>(k, 12))) {
      Element y(c1.size(), 0);
      for (std::size_t i = 0; i < c1.size(); ++i) {
        long acc = 0;
        for (std::size_t col = 0; col < k; ++col) acc += d2(i, col).get_si() * coeffs[col];
        y[i] = ((acc % c1[i]) + c1[i]) % c1[i];
      }
      image.insert(y);
    }
    const FgAbGroup g1 = finite(c1);
    const FgAbGroup g0 = finite(c0);
    const FgAbGroup h = homology_at(GroupMorphism(FgAbGroup::free(k), g1, d2), GroupMorphism(g1, g0, d1));
    ASSERT_EQ(h.free_rank(), 0u);
    for (long m = 1; m <= 12; ++m) {
      long killed = 0;
      for (const auto& x : kernel) {
        Element mx = x;
        for (std::size_t i = 0; i < mx.size(); ++i) mx[i] = (mx[i] * m) % c1[i];
        if (image.count(mx)) ++killed;
      }
      ASSERT_EQ(killed / static_cast<long>(image.size()), count_killed_by(h, m)) << "m=" << m;
    }
  }
}

TEST(Tensor, Examples) {
  EXPECT_EQ(tensor(direct_sum({z(), zmod(4)}), zmod(6)), direct_sum({zmod(6), zmod(2)}));
  const FgAbGroup g = direct_sum({z(), zmod(3), zmod(9)});
  EXPECT_EQ(tensor(g, z()), g);
  EXPECT_TRUE(tensor(zmod(2), zmod(3)).is_trivial());
}

TEST(Tor, Examples) {
  EXPECT_EQ(tor(zmod(2), zmod(2)), zmod(2));
  EXPECT_TRUE(tor(FgAbGroup::free(3), direct_sum({zmod(5), z()})).is_trivial());
  EXPECT_EQ(tor(zmod(4), zmod(6)), zmod(2));
}

TEST(TensorTor, PropertySymmetricAndBilinear) {
  std::mt19937_64 rng(31);
  auto random_group = [&] {
    const std::size_t free = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    std::vector<FgAbGroup> parts(free, z());
    const std::size_t tors = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    for (std::size_t i = 0; i < tors; ++i) parts.push_back(zmod(std::uniform_int_distribution<long>(2, 12)(rng)));
    return direct_sum(parts);
  };
  for (int trial = 0; trial < 60; ++trial) {
    const FgAbGroup g = random_group();
    const FgAbGroup h = random_group();
    ASSERT_EQ(tensor(g, h), tensor(h, g));
    ASSERT_EQ(tor(g, h), tor(h, g));
    // Oracle: bilinearity over the cyclic summands.
    std::size_t free = g.free_rank() * h.free_rank();
    std::vector<FgAbGroup> tparts(free, z());
    std::vector<FgAbGroup> torparts;
    for (const auto& a : g.invariant_factors()) {
      for (std::size_t i = 0; i < h.free_rank(); ++i) tparts.push_back(FgAbGroup::cyclic(a));
      for (const auto& b : h.invariant_factors()) {
        tparts.push_back(FgAbGroup::cyclic(gcd(a, b)));
        torparts.push_back(FgAbGroup::cyclic(gcd(a, b)));
      }
    }
    for (const auto& b : h.invariant_factors())
      for (std::size_t i = 0; i < g.free_rank(); ++i) tparts.push_back(FgAbGroup::cyclic(b));
    ASSERT_EQ(tensor(g, h), direct_sum(tparts)) << g.to_string() << " (x) " << h.to_string();
    ASSERT_EQ(tor(g, h), direct_sum(torparts)) << g.to_string() << " Tor " << h.to_string();
  }
}

TEST(DirectSum, Examples) {
  EXPECT_EQ(direct_sum({zmod(2), zmod(3)}), zmod(6));
  EXPECT_TRUE(direct_sum({}).is_trivial());
  const FgAbGroup g = direct_sum({z(), zmod(4)});
  EXPECT_EQ(direct_sum({g, FgAbGroup()}), g);
}

TEST(Subquotient, CoordinatesAndInducedMaps) {
  // span(e0, 2 e1) / span(4 e1) inside Z^2 is Z + Z/2.
  const Subquotient sq(IntMatrix::from_rows({{1, 0}, {0, 2}}), IntMatrix::from_rows({{0}, {4}}));
  EXPECT_EQ(sq.group(), direct_sum({z(), zmod(2)}));
  EXPECT_THROW(sq.coordinates(IntMatrix::from_rows({{0}, {1}})), DomainMismatch);
  EXPECT_THROW(Subquotient(IntMatrix::from_rows({{2}}), IntMatrix::from_rows({{1}})), DomainMismatch);
  const IntMatrix induced = sq.induced(IntMatrix::from_rows({{1, 0}, {0, 3}}));
  EXPECT_EQ(induced.rows(), sq.group().generators());
}
