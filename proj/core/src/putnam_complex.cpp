#include "stablehom/putnam_complex.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdlib>
#include <future>
#include <sstream>
#include <thread>

#include "stablehom/errors.hpp"

namespace stablehom {

const Cell& DoubleComplex::cell(std::size_t l, std::size_t m) const {
  static const Cell empty{SignBasis(), IntMatrix(0, 0)};
  auto it = cells.find({l, m});
  return it == cells.end() ? empty : it->second;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("STABLEHOM_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::string presentation_digest(const FiberedPresentation& p) {
  std::ostringstream os;
  os << "vertices";
  for (const auto& v : p.base.vertex_ids()) os << ' ' << v.size() << ':' << v;
  os << "\nedges";
  for (const auto& e : p.base.edges()) {
    os << ' ' << e.id.size() << ':' << e.id << ' ' << e.source << ' ' << e.target;
  }
  const std::pair<const Partition*, const char*> parts[] = {
      {&p.y_vertex, "y_vertex"}, {&p.y_edge, "y_edge"}, {&p.z_vertex, "z_vertex"}, {&p.z_edge, "z_edge"}};
  for (const auto& [part, label] : parts) {
    os << '\n' << label;
    for (std::size_t c = 0; c < part->class_count(); ++c) {
      os << " [";
      for (std::size_t e : part->members(c)) os << ' ' << e;
      os << " ]";
    }
  }
  return sha256_hex(os.str());
}

namespace {

IntMatrix alternating_row_differential(const SignBasis& from, const SignBasis& to) {
  IntMatrix d(to.size(), from.size());
  for (std::size_t row = 0; row <= from.shape().l; ++row) {
    const IntMatrix face = reduced_face_row(from, to, row);
    d += row % 2 == 0 ? face : -face;
  }
  return d;
}

IntMatrix alternating_column_differential(const SignBasis& from, const SignBasis& to) {
  IntMatrix d(to.size(), from.size());
  for (std::size_t col = 0; col <= to.shape().m; ++col) {
    const IntMatrix face = reduced_coface_column(from, to, col);
    d += col % 2 == 0 ? face : -face;
  }
  return d;
}

void guard(DoubleComplex& dc, const std::string& identity, CellIndex at, bool ok) {
  dc.guardrail_log.push_back({identity, at.first, at.second, ok});
  if (!ok) {
    throw GuardrailFailure(identity, static_cast<int>(at.first), static_cast<int>(at.second),
                           "guardrail '" + identity + "' failed at cell (" + std::to_string(at.first) + ", " +
                               std::to_string(at.second) + ")");
  }
}

}  // namespace

DoubleComplex build(const FiberedPresentation& p, unsigned threads) {
  const ValidationReport report = validate_presentation(p);
  if (!report.valid()) {
    const Violation& v = report.violations.front();
    throw GuardrailFailure("presentation-valid", 0, 0,
                           "presentation rejected before homology: " + v.rule + ": " + v.detail);
  }
  if (threads == 0) threads = default_thread_count();

  DoubleComplex dc;
  dc.presentation = p;
  dc.digest = presentation_digest(p);
  dc.row_bound = p.row_bound();
  dc.column_bound = p.column_bound();

  std::vector<CellIndex> keys;
  for (std::size_t l = 0; l <= dc.row_bound; ++l)
    for (std::size_t m = 0; m <= dc.column_bound; ++m) keys.emplace_back(l, m);

  // Worker w handles keys w, w + threads, ...; each result lands in its own
  // slot so the outcome is independent of scheduling.
  std::vector<Cell> built(keys.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < keys.size(); i += stride) {
      SignBasis basis = sign_basis(p, keys[i].first, keys[i].second);
      IntMatrix endo = reduced_endo(p, basis);
      built[i] = Cell{std::move(basis), std::move(endo)};
    }
  };
  const std::size_t workers = std::min<std::size_t>(threads, keys.size());
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) jobs.push_back(std::async(std::launch::async, work, w, workers));
    for (auto& j : jobs) j.get();
  }
  for (std::size_t i = 0; i < keys.size(); ++i) dc.cells.emplace(keys[i], std::move(built[i]));

  for (const auto& [key, cell] : dc.cells) {
    const auto [l, m] = key;
    if (l > 0) dc.row_differentials.emplace(key, alternating_row_differential(cell.basis, dc.cell(l - 1, m).basis));
    if (m < dc.column_bound)
      dc.column_differentials.emplace(key, alternating_column_differential(cell.basis, dc.cell(l, m + 1).basis));
  }

  for (const auto& [key, cell] : dc.cells) {
    const auto [l, m] = key;
    if (auto it = dc.row_differentials.find(key); it != dc.row_differentials.end()) {
      const IntMatrix& d = it->second;
      guard(dc, "row-equivariance", key, d * cell.endo == dc.cell(l - 1, m).endo * d);
      if (l >= 2) guard(dc, "row-square-zero", key, (dc.row_differentials.at({l - 1, m}) * d).is_zero());
    }
    if (auto it = dc.column_differentials.find(key); it != dc.column_differentials.end()) {
      const IntMatrix& d = it->second;
      guard(dc, "column-equivariance", key, d * cell.endo == dc.cell(l, m + 1).endo * d);
      if (m + 2 <= dc.column_bound)
        guard(dc, "column-square-zero", key, (dc.column_differentials.at({l, m + 1}) * d).is_zero());
      if (l >= 1) {
        // With the (-1)^L twist the total differential squares to zero
        // exactly when the untwisted differentials commute.
        const IntMatrix row_then_col = dc.column_differentials.at({l - 1, m}) * dc.row_differentials.at(key);
        const IntMatrix col_then_row = dc.row_differentials.at({l, m + 1}) * d;
        guard(dc, "anticommutation", key, row_then_col == col_then_row);
      }
    }
  }
  return dc;
}

StationaryInvariants HomologyReport::at(int degree) const {
  auto it = invariants.find(degree);
  return it == invariants.end() ? stablehom::invariants(StationarySystem()) : it->second;
}

std::vector<int> HomologyReport::support() const {
  std::vector<int> out;
  for (const auto& [k, inv] : invariants)
    if (!inv.trivial()) out.push_back(k);
  return out;
}

HomologyReport make_report(std::map<int, StationarySystem> systems, Provenance provenance) {
  HomologyReport r;
  for (const auto& [k, s] : systems) r.invariants.emplace(k, invariants(s));
  r.systems = std::move(systems);
  r.provenance = std::move(provenance);
  return r;
}

StationaryComplex totalize(const DoubleComplex& dc) {
  StationaryComplex out;
  const int low = -static_cast<int>(dc.column_bound);
  const int high = static_cast<int>(dc.row_bound);
  // Within a degree, cells are stacked in increasing L.
  std::map<CellIndex, std::size_t> offset;
  std::map<int, std::size_t> size;
  for (const auto& [key, cell] : dc.cells) {
    const int k = static_cast<int>(key.first) - static_cast<int>(key.second);
    offset[key] = size[k];
    size[k] += cell.basis.size();
  }
  for (int k = low; k <= high; ++k) {
    const std::size_t n = size[k];
    IntMatrix endo(n, n);
    for (const auto& [key, cell] : dc.cells) {
      if (static_cast<int>(key.first) - static_cast<int>(key.second) != k) continue;
      const std::size_t o = offset[key];
      for (std::size_t i = 0; i < cell.basis.size(); ++i)
        for (std::size_t j = 0; j < cell.basis.size(); ++j) endo(o + i, o + j) = cell.endo(i, j);
    }
    out.terms.emplace(k, StationarySystem(FgAbGroup::free(n), std::move(endo)));
  }
  for (int k = low + 1; k <= high; ++k) out.differentials.emplace(k, IntMatrix(size[k - 1], size[k]));
  for (const auto& [key, d] : dc.row_differentials) {
    const int k = static_cast<int>(key.first) - static_cast<int>(key.second);
    IntMatrix& total = out.differentials.at(k);
    const std::size_t ro = offset.at({key.first - 1, key.second});
    const std::size_t co = offset.at(key);
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j) total(ro + i, co + j) += d(i, j);
  }
  for (const auto& [key, d] : dc.column_differentials) {
    const int k = static_cast<int>(key.first) - static_cast<int>(key.second);
    IntMatrix& total = out.differentials.at(k);
    const std::size_t ro = offset.at({key.first, key.second + 1});
    const std::size_t co = offset.at(key);
    const bool negate = key.first % 2 == 1;
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j) total(ro + i, co + j) += negate ? Integer(-d(i, j)) : d(i, j);
  }
  return out;
}

HomologyReport total_homology(const DoubleComplex& dc) {
  Provenance prov;
  prov.source = "presentation";
  prov.digest = dc.digest;
  prov.row_bound = dc.row_bound;
  prov.column_bound = dc.column_bound;
  prov.guardrail_log = dc.guardrail_log;
  return make_report(limit_homology(totalize(dc)), std::move(prov));
}

HomologyReport homology(const FiberedPresentation& p, unsigned threads) {
  return total_homology(build(p, threads));
}

}  // namespace stablehom
