#pragma once

// JSON input documents and machine-readable reports.
//
// Matrices are objects {"rows", "cols", "entries"} with row-major entries
// written as decimal strings, so no consumer ever rounds an integer.

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "stablehom/analysis.hpp"
#include "stablehom/putnam_complex.hpp"
#include "stablehom/stationary.hpp"
#include "stablehom/symbolic.hpp"

namespace stablehom::cli {

inline constexpr int schema_version = 1;

/// Malformed or schema-violating input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputDocument {
  FiberedPresentation presentation;
  std::optional<SpectralMode> mode;
};

InputDocument parse_input(const nlohmann::json& doc);
InputDocument load_input(const std::string& path);
nlohmann::json input_to_json(const InputDocument& doc);

/// "2,1;1,1" -> 2x2 matrix.
IntMatrix parse_matrix_literal(const std::string& text);

nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json group_to_json(const FgAbGroup& g);
nlohmann::json invariants_to_json(const StationaryInvariants& inv);
StationaryInvariants invariants_from_json(const nlohmann::json& j);

nlohmann::json validation_to_json(const ValidationReport& r);

nlohmann::json report_to_json(const HomologyReport& r);
HomologyReport report_from_json(const nlohmann::json& j);

nlohmann::json spectral_to_json(const SpectralRankReport& r);
SpectralRankReport spectral_from_json(const nlohmann::json& j);

}  // namespace stablehom::cli
