#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "stablehom/errors.hpp"
#include "stablehom/symbolic.hpp"
#include "test_support.hpp"

using namespace stablehom;
namespace st = stablehom::testing;

namespace {

Graph two_loops() { return Graph::from_ids({"v"}, {{"e1", "v", "v"}, {"e2", "v", "v"}}); }

// Two loops glued into one z-edge class; not valid, but enumerable.
FiberedPresentation two_loops_one_z_class() {
  FiberedPresentation p = FiberedPresentation::sft(two_loops());
  p.z_edge = Partition::from_classes({{0, 1}}, 2);
  return p;
}

bool has_rule(const ValidationReport& r, const std::string& rule) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

int parity_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

}  // namespace

TEST(Partition, Basics) {
  const Partition p = Partition::from_classes({{2, 0}, {1}}, 3);
  EXPECT_EQ(p.class_count(), 2u);
  EXPECT_TRUE(p.same(0, 2));
  EXPECT_FALSE(p.same(0, 1));
  EXPECT_EQ(p.largest_class_size(), 2u);
  EXPECT_FALSE(p.is_discrete());
  EXPECT_TRUE(Partition::singletons(4).is_discrete());
  EXPECT_THROW(Partition::from_classes({{0}, {0, 1}}, 2), DomainMismatch);
  EXPECT_THROW(Partition::from_classes({{0}}, 2), DomainMismatch);
}

TEST(Validate, SingletonPartitionsAreValid) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial)
    ASSERT_TRUE(validate_presentation(FiberedPresentation::sft(st::random_essential_graph(rng, 5, 9))).valid());
}

TEST(Validate, IncompatibleEdgeClassIsReported) {
  const ValidationReport r = validate_presentation(st::load_fixture("invalid_crossing.json"));
  EXPECT_FALSE(r.valid());
  EXPECT_TRUE(has_rule(r, "y-edge-source-compatibility"));
}

TEST(Validate, TwoLoopsInOneZClassFailLocalCovering) {
  // Both loops enter the single vertex from the same source class, so the
  // incoming edges cannot be told apart class to class.
  const ValidationReport r = validate_presentation(two_loops_one_z_class());
  EXPECT_FALSE(r.valid());
  EXPECT_TRUE(has_rule(r, "z-in-covering"));
}

TEST(Validate, DoubleCoversAndRandomFiberProductsAreValid) {
  EXPECT_TRUE(validate_presentation(st::load_fixture("double_cover_z.json")).valid());
  EXPECT_TRUE(validate_presentation(st::load_fixture("double_cover_y.json")).valid());
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial)
    ASSERT_TRUE(validate_presentation(st::random_fiber_product(rng).presentation).valid());
}

TEST(FiberPower, ZeroShapeIsTheBase) {
  const FiberedPresentation p = st::load_fixture("golden_mean.json");
  const FiberPowerGraph g = fiber_power_graph(p, 0, 0);
  EXPECT_EQ(g.vertices.size(), 2u);
  EXPECT_EQ(g.edges.size(), 3u);
  EXPECT_EQ(g.as_graph(p.base).adjacency(), p.base.adjacency());
}

TEST(FiberPower, SingletonPartitionsGiveConstantArrays) {
  const FiberedPresentation p = st::load_fixture("golden_mean.json");
  for (auto [l, m] : {std::pair{1, 0}, std::pair{0, 2}, std::pair{1, 1}}) {
    const FiberPowerGraph g = fiber_power_graph(p, l, m);
    EXPECT_EQ(g.vertices.size(), 2u);
    EXPECT_EQ(g.edges.size(), 3u);
    for (const auto& v : g.vertices) EXPECT_EQ(std::count(v.begin(), v.end(), v[0]), static_cast<long>(v.size()));
  }
}

TEST(FiberPower, TwoLoopColumnPair) {
  const FiberedPresentation p = two_loops_one_z_class();
  EXPECT_THROW(fiber_power_graph(p, 0, 1), PresentationInvalid);
  const FiberPowerGraph g = enumerate_fiber_power(p, 0, 1);
  EXPECT_EQ(g.vertices.size(), 1u);
  ASSERT_EQ(g.edges.size(), 4u);
  std::vector<Array> entries;
  for (const auto& e : g.edges) entries.push_back(e.entries);
  std::sort(entries.begin(), entries.end());
  EXPECT_EQ(entries, (std::vector<Array>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST(FiberPower, GroupActsByAutomorphisms) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const FiberedPresentation p = st::random_fiber_product(rng).presentation;
    const std::size_t l = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    const FiberPowerGraph g = fiber_power_graph(p, l, m);
    const auto rp = random_permutation(l + 1, rng);
    const auto cp = random_permutation(m + 1, rng);
    std::map<std::tuple<std::size_t, std::size_t, Array>, int> edge_count;
    for (const auto& e : g.edges) ++edge_count[{e.source, e.target, e.entries}];
    for (const auto& e : g.edges) {
      const auto s = g.vertex_index(permute_array(g.vertices[e.source], g.shape, rp, cp));
      const auto t = g.vertex_index(permute_array(g.vertices[e.target], g.shape, rp, cp));
      ASSERT_TRUE(s && t);
      const auto key = std::make_tuple(*s, *t, permute_array(e.entries, g.shape, rp, cp));
      ASSERT_TRUE(edge_count.count(key)) << "image of an edge is not an edge";
    }
  }
}

TEST(SignBasis, Examples) {
  const FiberedPresentation sft = st::load_fixture("golden_mean.json");
  EXPECT_TRUE(sign_basis(sft, 0, 1).empty());
  EXPECT_TRUE(sign_basis(sft, 1, 0).empty());
  EXPECT_EQ(sign_basis(sft, 0, 0).size(), 2u);

  const FiberedPresentation dc = st::load_fixture("double_cover_z.json");
  const SignBasis b = sign_basis(dc, 0, 1);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b.representatives()[0], (Array{0, 1}));
  EXPECT_EQ(b.locate({0, 1})->sign, 1);
  EXPECT_EQ(b.locate({1, 0})->sign, -1);
  EXPECT_FALSE(b.locate({0, 0}).has_value());
  EXPECT_TRUE(sign_basis(dc, 0, 2).empty());
}

TEST(SignBasis, CanonicalRepresentativeSign) {
  // Oracle: sign of an arbitrary orbit element relative to the lex-least one.
  std::mt19937_64 rng(7);
  const ArrayShape shape{2, 2};
  for (int trial = 0; trial < 200; ++trial) {
    Array a(shape.size());
    for (auto& x : a) x = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
    const auto canon = canonical_orbit_representative(a, shape);
    if (has_repeated_rows(a, shape) || has_repeated_columns(a, shape)) {
      ASSERT_FALSE(canon.has_value());
      continue;
    }
    ASSERT_TRUE(canon.has_value());
    Array least = a;
    int least_sign = 1;
    std::vector<std::size_t> rp(3), cp(3);
    std::iota(rp.begin(), rp.end(), 0);
    do {
      std::iota(cp.begin(), cp.end(), 0);
      do {
        const Array b = permute_array(a, shape, rp, cp);
        if (b < least) {
          least = b;
          least_sign = parity_sign(rp) * parity_sign(cp);
        }
      } while (std::next_permutation(cp.begin(), cp.end()));
    } while (std::next_permutation(rp.begin(), rp.end()));
    ASSERT_EQ(canon->first, least);
    ASSERT_EQ(canon->second, least_sign);
  }
}

TEST(SignBasis, PigeonholeBounds) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const FiberedPresentation p = st::random_fiber_product(rng).presentation;
    const std::size_t ly = p.y_vertex.largest_class_size();
    const std::size_t mz = p.z_vertex.largest_class_size();
    ASSERT_TRUE(sign_basis(p, ly, 0).empty());
    ASSERT_TRUE(sign_basis(p, 0, mz).empty());
    ASSERT_EQ(p.row_bound(), ly - 1);
    ASSERT_EQ(p.column_bound(), mz - 1);
  }
}

TEST(FaceMaps, DoubleCoverColumnInsertion) {
  const FiberedPresentation dc = st::load_fixture("double_cover_z.json");
  // The orbit of (a,b) is (a,b) with sign +1 and (b,a) with sign -1.
  EXPECT_EQ(face_column_contravariant(dc, 0, 0, 0).matrix(), IntMatrix::from_rows({{-1, 1}}));
  EXPECT_EQ(face_column_contravariant(dc, 0, 0, 1).matrix(), IntMatrix::from_rows({{1, -1}}));
  // On representatives alone the summands are not canonical, but their
  // alternating sum is the same map.
  const SignBasis from = sign_basis(dc, 0, 0), to = sign_basis(dc, 0, 1);
  EXPECT_EQ(reduced_coface_column(from, to, 0), IntMatrix::from_rows({{0, 1}}));
  EXPECT_EQ(reduced_coface_column(from, to, 0) - reduced_coface_column(from, to, 1), IntMatrix::from_rows({{-1, 1}}));
  EXPECT_THROW(face_column_contravariant(dc, 0, 0, 2), DomainMismatch);
}

TEST(FaceMaps, SymmetrizedFacesAreSignedAlternatingSums) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const FiberedPresentation p = st::random_fiber_product(rng).presentation;
    for (std::size_t l = 1; l <= p.row_bound(); ++l) {
      const SignBasis from = sign_basis(p, l, 0), to = sign_basis(p, l - 1, 0);
      IntMatrix alt(to.size(), from.size());
      for (std::size_t r = 0; r <= l; ++r) alt += r % 2 == 0 ? reduced_face_row(from, to, r) : -reduced_face_row(from, to, r);
      for (std::size_t r = 0; r <= l; ++r)
        ASSERT_EQ(face_row_covariant(p, l, 0, r).matrix(), r % 2 == 0 ? alt : -alt);
    }
    for (std::size_t m = 0; m < p.column_bound(); ++m) {
      const SignBasis from = sign_basis(p, 0, m), to = sign_basis(p, 0, m + 1);
      IntMatrix alt(to.size(), from.size());
      for (std::size_t c = 0; c <= m + 1; ++c)
        alt += c % 2 == 0 ? reduced_coface_column(from, to, c) : -reduced_coface_column(from, to, c);
      for (std::size_t c = 0; c <= m + 1; ++c)
        ASSERT_EQ(face_column_contravariant(p, 0, m, c).matrix(), c % 2 == 0 ? alt : -alt);
    }
  }
}

TEST(FaceMaps, SingletonPartitionsGiveIdentity) {
  const FiberedPresentation sft = st::load_fixture("golden_mean.json");
  const SignBasis b = sign_basis(sft, 0, 0);
  EXPECT_EQ(reduced_endo(sft, b), sft.base.adjacency().transpose());
  EXPECT_EQ(face_column_contravariant(sft, 0, 0, 0).matrix().rows(), 0u);
  EXPECT_THROW(face_row_covariant(st::load_fixture("invalid_crossing.json"), 1, 0, 0), PresentationInvalid);
}

TEST(FaceMaps, ReducedMapsCommuteWithEndo) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const FiberedPresentation p = st::random_fiber_product(rng).presentation;
    for (std::size_t l = 1; l <= p.row_bound(); ++l)
      for (std::size_t r = 0; r <= l; ++r) ASSERT_NO_THROW(face_row_covariant(p, l, 0, r));
    for (std::size_t m = 0; m < p.column_bound(); ++m)
      for (std::size_t c = 0; c <= m + 1; ++c) ASSERT_NO_THROW(face_column_contravariant(p, 0, m, c));
  }
}

TEST(FaceMaps, SimplicialIdentitiesOnStages) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 25; ++trial) {
    const FiberedPresentation p = st::random_fiber_product(rng).presentation;
    auto g = [&](std::size_t l, std::size_t m) { return fiber_power_graph(p, l, m); };
    // Rows: d_i d_j = d_{j-1} d_i for i < j, from L = 2 down to 0.
    const auto g2 = g(2, 0), g1 = g(1, 0), g0 = g(0, 0);
    for (std::size_t j = 1; j <= 2; ++j)
      for (std::size_t i = 0; i < j; ++i)
        ASSERT_EQ(stage_face_row(g1, g0, i) * stage_face_row(g2, g1, j),
                  stage_face_row(g1, g0, j - 1) * stage_face_row(g2, g1, i));
    // Columns: dual identities for insertions, from M = 0 up to 2.
    const auto h0 = g(0, 0), h1 = g(0, 1), h2 = g(0, 2);
    for (std::size_t j = 1; j <= 2; ++j)
      for (std::size_t i = 0; i < j; ++i)
        ASSERT_EQ(stage_coface_column(h1, h2, j) * stage_coface_column(h0, h1, i),
                  stage_coface_column(h1, h2, i) * stage_coface_column(h0, h1, j - 1));
    // Row faces commute with column insertions.
    const auto g11 = g(1, 1), g01 = g(0, 1);
    for (std::size_t r = 0; r <= 1; ++r)
      for (std::size_t c = 0; c <= 1; ++c)
        ASSERT_EQ(stage_coface_column(g0, g01, c) * stage_face_row(g1, g0, r),
                  stage_face_row(g11, g01, r) * stage_coface_column(g1, g11, c));
    // Faces commute with the unreduced endos.
    ASSERT_EQ(stage_face_row(g1, g0, 0) * stage_endo(g1), stage_endo(g0) * stage_face_row(g1, g0, 0));
    ASSERT_EQ(stage_coface_column(h0, h1, 1) * stage_endo(h0), stage_endo(h1) * stage_coface_column(h0, h1, 1));
  }
}

TEST(Arrays, Helpers) {
  const ArrayShape shape{1, 2};
  const Array a{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(delete_row(a, shape, 0), (Array{3, 4, 5}));
  EXPECT_EQ(delete_column(a, shape, 1), (Array{0, 2, 3, 5}));
  EXPECT_EQ(permute_array(a, shape, {1, 0}, {0, 1, 2}), (Array{3, 4, 5, 0, 1, 2}));
  EXPECT_FALSE(has_repeated_rows(a, shape));
  EXPECT_TRUE(has_repeated_columns(Array{0, 0, 1, 2, 2, 3}, shape));
  EXPECT_EQ(array_to_string(Array{0, 1}, ArrayShape{0, 1}, {"a", "b"}), "(a,b)");
}
