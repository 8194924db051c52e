#include "stablehom/analysis.hpp"

#include <algorithm>
#include <vector>

#include "stablehom/errors.hpp"
#include "stablehom/polynomial.hpp"

namespace stablehom {

namespace {

std::pair<int, int> degree_span(const HomologyReport& h) {
  if (h.systems.empty()) return {0, -1};
  return {h.systems.begin()->first, h.systems.rbegin()->first};
}

Integer binomial(std::size_t n, std::size_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

HomologyReport kunneth(const HomologyReport& h1, const HomologyReport& h2) {
  std::map<int, std::vector<StationarySystem>> parts;
  for (const auto& [a, sa] : h1.systems) {
    for (const auto& [b, sb] : h2.systems) {
      parts[a + b].push_back(limit_tensor(sa, sb));
      parts[a + b + 1].push_back(limit_tor(sa, sb));
    }
  }
  std::map<int, StationarySystem> systems;
  const auto [lo1, hi1] = degree_span(h1);
  const auto [lo2, hi2] = degree_span(h2);
  if (lo1 <= hi1 && lo2 <= hi2) {
    for (int k = lo1 + lo2; k <= hi1 + hi2 + 1; ++k) {
      systems.emplace(k, eventual_normalize(limit_direct_sum(parts[k])));
    }
  }
  Provenance prov;
  prov.source = "kunneth";
  prov.digest = sha256_hex(h1.provenance.digest + "\n" + h2.provenance.digest);
  prov.row_bound = h1.provenance.row_bound + h2.provenance.row_bound;
  prov.column_bound = h1.provenance.column_bound + h2.provenance.column_bound;
  return make_report(std::move(systems), std::move(prov));
}

FiberedPresentation product_presentation(const FiberedPresentation& p1, const FiberedPresentation& p2) {
  for (const auto* p : {&p1, &p2}) {
    const ValidationReport r = validate_presentation(*p);
    if (!r.valid()) {
      throw PresentationInvalid("product_presentation: factor is invalid: " + r.violations.front().rule + ": " +
                                r.violations.front().detail);
    }
  }
  const Graph& g1 = p1.base;
  const Graph& g2 = p2.base;
  const std::size_t n2 = g2.vertex_count();
  std::vector<std::string> ids;
  for (const auto& a : g1.vertex_ids())
    for (const auto& b : g2.vertex_ids()) ids.push_back("(" + a + "," + b + ")");
  std::vector<GraphEdge> edges;
  for (const auto& a : g1.edges()) {
    for (const auto& b : g2.edges()) {
      edges.push_back({"(" + a.id + "," + b.id + ")", a.source * n2 + b.source, a.target * n2 + b.target});
    }
  }
  auto product = [](const Partition& x, const Partition& y) {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t cx = 0; cx < x.class_count(); ++cx) {
      for (std::size_t cy = 0; cy < y.class_count(); ++cy) {
        std::vector<std::size_t> cls;
        for (std::size_t a : x.members(cx))
          for (std::size_t b : y.members(cy)) cls.push_back(a * y.element_count() + b);
        classes.push_back(std::move(cls));
      }
    }
    return Partition::from_classes(classes, x.element_count() * y.element_count());
  };
  return FiberedPresentation{Graph(std::move(ids), std::move(edges)), product(p1.y_vertex, p2.y_vertex),
                             product(p1.y_edge, p2.y_edge), product(p1.z_vertex, p2.z_vertex),
                             product(p1.z_edge, p2.z_edge)};
}

std::size_t expanding_eigenvalue_count(const IntMatrix& a) {
  if (!a.square()) throw DomainMismatch("expanding_eigenvalue_count: matrix is not square");
  const Polynomial p = characteristic_polynomial(a);
  const std::size_t m = a.rows();
  if (m == 0) return 0;
  // Roots shared with the reciprocal polynomial come in pairs lambda, 1/lambda,
  // which is where any unit-modulus root would hide.
  const Polynomial g = gcd(p, p.reciprocal());
  if (g.evaluate(1) == 0 || g.evaluate(-1) == 0) {
    throw NotHyperbolic("matrix has eigenvalue 1 or -1");
  }
  const std::size_t dg = static_cast<std::size_t>(std::max(g.degree(), 0));
  if (dg > 0) {
    // g is palindromic of even degree 2h: g(x) = x^h q(x + 1/x), and g has a
    // root on the unit circle exactly when q has a real root in [-2, 2].
    const std::size_t h = dg / 2;
    Polynomial q = Polynomial::monomial(g.coefficient(h), 0);
    Polynomial prev = Polynomial::from_integers({2});
    Polynomial cur = Polynomial::from_integers({0, 1});
    const Polynomial t = cur;
    for (std::size_t j = 1; j <= h; ++j) {
      q = q + cur.scaled(g.coefficient(h + j));
      Polynomial next = t * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    if (q.evaluate(-2) == 0 || sturm_count(q, Rational(-2), Rational(2)) > 0) {
      throw NotHyperbolic("matrix has an eigenvalue on the unit circle");
    }
  }
  const Polynomial rest = Polynomial::divide(p, g).first;
  const std::size_t rest_degree = static_cast<std::size_t>(std::max(rest.degree(), 0));
  const std::size_t inside = roots_inside_unit_disc(rest);
  return (rest_degree - inside) + dg / 2;
}

HomologyReport toral_homology(const IntMatrix& a) {
  if (!a.square()) throw DomainMismatch("toral_homology: matrix is not square");
  if (abs(determinant(a)) != 1) throw NotUnimodular("toral_homology: |det| is not 1");
  const std::size_t m = a.rows();
  const std::size_t n = expanding_eigenvalue_count(a);
  std::map<int, StationarySystem> systems;
  for (std::size_t j = 0; j <= m; ++j) {
    // Degree k = n - j carries C(m, j).
    const Integer r = binomial(m, j);
    systems.emplace(static_cast<int>(n) - static_cast<int>(j),
                     StationarySystem::constant(FgAbGroup::free(r.get_ui())));
  }
  Provenance prov;
  prov.source = "toral";
  prov.digest = sha256_hex(a.to_string());
  return make_report(std::move(systems), std::move(prov));
}

std::string to_string(SpectralMode mode) {
  return mode == SpectralMode::stably_disconnected ? "stable-disconnected" : "unstable-disconnected";
}

SpectralMode parse_spectral_mode(const std::string& text) {
  if (text == "stable-disconnected" || text == "stably-disconnected") return SpectralMode::stably_disconnected;
  if (text == "unstable-disconnected" || text == "unstably-disconnected")
    return SpectralMode::unstably_disconnected;
  throw DomainMismatch("unknown mode '" + text + "'");
}

SpectralRankReport k_rank_report(const HomologyReport& h, SpectralMode mode) {
  SpectralRankReport out;
  out.mode = mode;
  std::vector<int> support;
  for (const auto& [p, inv] : h.invariants) {
    if (inv.rank == unbounded_rank) {
      throw InfiniteRank("k_rank_report: degree " + std::to_string(p) + " has unbounded rank");
    }
    out.e2_ranks[{p, 0}] = inv.rank;
    out.e2_ranks[{p, 1}] = 0;
    if (!inv.trivial()) support.push_back(p);
    if (p % 2 == 0)
      out.k0_rank += inv.rank;
    else
      out.k1_rank += inv.rank;
  }
  out.certified = support.empty() || support.back() - support.front() + 1 <= 3;
  return out;
}

}  // namespace stablehom
