#include "stablehom_cli/commands.hpp"

#include <iomanip>
#include <set>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "stablehom/errors.hpp"
#include "stablehom_cli/io.hpp"

namespace stablehom::cli {

using nlohmann::json;

namespace {

std::string torsion_text(const std::vector<Integer>& torsion) {
  if (torsion.empty()) return "-";
  std::string out;
  for (const auto& d : torsion) {
    if (!out.empty()) out += ",";
    out += d.get_str();
  }
  return out;
}

void print_report_table(const HomologyReport& r, std::ostream& out) {
  out << std::left << std::setw(8) << "degree" << std::setw(16) << "group" << std::setw(6) << "rank"
      << std::setw(10) << "torsion" << std::setw(8) << "|det|"
      << "bowen-franks\n";
  for (const auto& [k, s] : r.systems) {
    const StationaryInvariants inv = r.at(k);
    out << std::left << std::setw(8) << k << std::setw(16) << s.stage().to_string() << std::setw(6) << inv.rank
        << std::setw(10) << torsion_text(inv.invariant_factors) << std::setw(8) << inv.endo_det_abs.get_str()
        << inv.bowen_franks.to_string() << "\n";
  }
  if (!r.provenance.digest.empty()) out << "digest " << r.provenance.digest << "\n";
}

void print_json(const json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

// Prints the violation list and reports whether the presentation is valid.
bool check_valid(const FiberedPresentation& p, std::ostream& err) {
  const ValidationReport r = validate_presentation(p);
  if (r.valid()) return true;
  err << "presentation invalid: " << r.violations.size() << " violation(s)\n";
  for (const auto& v : r.violations) err << "  [" << v.rule << "] " << v.detail << "\n";
  return false;
}

struct Options {
  bool json = false;
  unsigned threads = 0;
  std::vector<std::string> inputs;
  std::string matrix;
  std::string mode;
  bool cross_check = false;
};

int cmd_validate(const Options& o, std::ostream& out) {
  const InputDocument doc = load_input(o.inputs.at(0));
  const ValidationReport r = validate_presentation(doc.presentation);
  if (o.json) {
    print_json(validation_to_json(r), out);
  } else if (r.valid()) {
    out << "valid\n";
  } else {
    out << "invalid: " << r.violations.size() << " violation(s)\n";
    for (const auto& v : r.violations) out << "  [" << v.rule << "] " << v.detail << "\n";
  }
  return r.valid() ? exit_ok : exit_validation;
}

int cmd_dimension_group(const Options& o, std::ostream& out) {
  const InputDocument doc = load_input(o.inputs.at(0));
  const StationarySystem d = krieger_dimension_group(doc.presentation.base);
  const StationaryInvariants inv = invariants(d);
  if (o.json) {
    print_json({{"schema_version", schema_version},
                {"kind", "dimension-group"},
                {"digest", presentation_digest(doc.presentation)},
                {"stage", {{"generators", d.stage().generators()}, {"relations", matrix_to_json(d.stage().relations())}}},
                {"endo", matrix_to_json(d.endo())},
                {"invariants", invariants_to_json(inv)}},
               out);
  } else {
    out << "stage " << d.stage().to_string() << "\n";
    out << "endo " << d.endo().to_string() << "\n";
    out << inv.to_string() << "\n";
  }
  return exit_ok;
}

int cmd_homology(const Options& o, std::ostream& out, std::ostream& err) {
  const InputDocument doc = load_input(o.inputs.at(0));
  if (!check_valid(doc.presentation, err)) return exit_validation;
  const HomologyReport r = homology(doc.presentation, o.threads);
  if (o.json)
    print_json(report_to_json(r), out);
  else
    print_report_table(r, out);
  return exit_ok;
}

int cmd_kunneth(const Options& o, std::ostream& out, std::ostream& err) {
  const InputDocument a = load_input(o.inputs.at(0));
  const InputDocument b = load_input(o.inputs.at(1));
  if (!check_valid(a.presentation, err) || !check_valid(b.presentation, err)) return exit_validation;
  const HomologyReport predicted = kunneth(homology(a.presentation, o.threads), homology(b.presentation, o.threads));
  json result = report_to_json(predicted);
  bool agree = true;
  if (o.cross_check) {
    const HomologyReport direct = homology(product_presentation(a.presentation, b.presentation), o.threads);
    json mismatches = json::array();
    std::set<int> degrees;
    for (const auto& [k, inv] : predicted.invariants) degrees.insert(k);
    for (const auto& [k, inv] : direct.invariants) degrees.insert(k);
    for (int k : degrees) {
      if (!(predicted.at(k) == direct.at(k))) {
        agree = false;
        mismatches.push_back({{"degree", k},
                              {"kunneth", invariants_to_json(predicted.at(k))},
                              {"product", invariants_to_json(direct.at(k))}});
      }
    }
    result["cross_check"] = {{"agree", agree}, {"mismatches", mismatches}};
  }
  if (o.json) {
    print_json(result, out);
  } else {
    print_report_table(predicted, out);
    if (o.cross_check) out << "cross-check " << (agree ? "agrees" : "DISAGREES") << " with the product presentation\n";
  }
  if (!agree) {
    err << "kunneth prediction differs from the product presentation\n";
    return exit_guardrail;
  }
  return exit_ok;
}

int cmd_toral(const Options& o, std::ostream& out) {
  const IntMatrix a = parse_matrix_literal(o.matrix);
  const HomologyReport r = toral_homology(a);
  if (o.json) {
    print_json(report_to_json(r), out);
  } else {
    for (const auto& [k, s] : r.systems) out << "k=" << k << ": " << s.stage().to_string() << "\n";
  }
  return exit_ok;
}

int cmd_k_ranks(const Options& o, std::ostream& out, std::ostream& err) {
  const InputDocument doc = load_input(o.inputs.at(0));
  if (!check_valid(doc.presentation, err)) return exit_validation;
  SpectralMode mode = doc.mode.value_or(SpectralMode::stably_disconnected);
  if (!o.mode.empty()) {
    try {
      mode = parse_spectral_mode(o.mode);
    } catch (const DomainMismatch& e) {
      throw ParseError(e.what());
    }
  }
  const SpectralRankReport r = k_rank_report(homology(doc.presentation, o.threads), mode);
  if (o.json) {
    print_json(spectral_to_json(r), out);
  } else {
    out << "mode " << to_string(r.mode) << "\n";
    out << "collapse " << (r.certified ? "certified" : "bounds-only") << "\n";
    out << "k0_rank " << r.k0_rank << (r.certified ? "" : " (upper bound)") << "\n";
    out << "k1_rank " << r.k1_rank << (r.certified ? "" : " (upper bound)") << "\n";
  }
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable homology of Smale spaces presented by graphs"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit machine-readable JSON");
  app.add_option("--threads", o.threads, "Worker threads (default: STABLEHOM_THREADS or hardware)");

  auto* validate = app.add_subcommand("validate", "Check a presentation and list violations");
  validate->add_option("input", o.inputs, "Input JSON")->required()->expected(1);
  auto* dim = app.add_subcommand("dimension-group", "Krieger dimension group of the base graph");
  dim->add_option("input", o.inputs, "Input JSON")->required()->expected(1);
  auto* hom = app.add_subcommand("homology", "Stable homology report");
  hom->add_option("input", o.inputs, "Input JSON")->required()->expected(1);
  auto* kun = app.add_subcommand("kunneth", "Product homology predicted by the Kunneth formula");
  kun->add_option("inputs", o.inputs, "Two input JSON files")->required()->expected(2);
  kun->add_flag("--cross-check", o.cross_check, "Compare with the homology of the product presentation");
  auto* toral = app.add_subcommand("toral", "Homology of a hyperbolic toral automorphism");
  toral->add_option("--matrix", o.matrix, "Rows separated by ';', entries by ','")->required();
  auto* kr = app.add_subcommand("k-ranks", "Rational K-theory ranks from the E2 page");
  kr->add_option("input", o.inputs, "Input JSON")->required()->expected(1);
  kr->add_option("--mode", o.mode, "stable-disconnected or unstable-disconnected");
  for (auto* sub : {validate, dim, hom, kun, toral, kr}) {
    sub->add_flag("--json", o.json, "Emit machine-readable JSON");
    sub->add_option("--threads", o.threads, "Worker threads");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return exit_parse;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (dim->parsed()) return cmd_dimension_group(o, out);
    if (hom->parsed()) return cmd_homology(o, out, err);
    if (kun->parsed()) return cmd_kunneth(o, out, err);
    if (toral->parsed()) return cmd_toral(o, out);
    if (kr->parsed()) return cmd_k_ranks(o, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_parse;
  } catch (const PresentationInvalid& e) {
    err << "validation failure: " << e.what() << "\n";
    return exit_validation;
  } catch (const GuardrailFailure& e) {
    err << "guardrail failure: identity " << e.identity() << " at cell (" << e.row_degree() << ", "
        << e.column_degree() << "): " << e.what() << "\n";
    return exit_guardrail;
  } catch (const NotEquivariant& e) {
    err << "guardrail failure: " << e.what() << "\n";
    return exit_guardrail;
  } catch (const CompositionNotZero& e) {
    err << "guardrail failure: " << e.what() << "\n";
    return exit_guardrail;
  } catch (const NotEssential& e) {
    err << "precondition violated: " << e.what() << "\n";
    return exit_precondition;
  } catch (const NotUnimodular& e) {
    err << "precondition violated: " << e.what() << "\n";
    return exit_precondition;
  } catch (const NotHyperbolic& e) {
    err << "precondition violated: " << e.what() << "\n";
    return exit_precondition;
  } catch (const DomainMismatch& e) {
    err << "precondition violated: " << e.what() << "\n";
    return exit_precondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_internal;
}

}  // namespace stablehom::cli
