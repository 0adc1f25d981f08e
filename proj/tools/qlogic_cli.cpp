// qlogic command line: truth-evaluation reports, lattice export,
// admissibility checks, and the built-in EPR demonstration.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qlogic/qlogic.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitParse = 3;

qlogic::Mode parse_mode(const std::string& text) {
  if (text == "pasted") return qlogic::Mode::Pasted;
  if (text == "unpasted") return qlogic::Mode::Unpasted;
  throw qlogic::ParseError("mode must be pasted|unpasted");
}

int run_eval(const std::string& path, const std::string& mode_flag) {
  const qlogic::Scenario sc = qlogic::load_scenario(path);
  const qlogic::Mode mode = mode_flag.empty() ? sc.mode : parse_mode(mode_flag);
  std::cout << qlogic::format_report(qlogic::evaluate_scenario(sc, mode));
  return kExitOk;
}

int run_lattice(const std::string& path, const std::string& context_name, bool pasted) {
  const qlogic::Scenario sc = qlogic::load_scenario(path);
  if (pasted) {
    const qlogic::PastedLattice lattice = qlogic::PastedLattice::build(sc.build_collection());
    std::cout << qlogic::lattice_dot(lattice.elements(), sc, "pasted");
    return kExitOk;
  }
  const qlogic::Context* ctx = sc.find_context(context_name);
  if (!ctx) throw qlogic::ValidationError("unknown context '" + context_name + "'");
  const qlogic::BlockLattice block = qlogic::BlockLattice::build(*ctx);
  std::cout << qlogic::lattice_dot(block.elements(), sc, context_name);
  return kExitOk;
}

int run_admissible(const std::string& scenario_path, const std::string& assignment_path) {
  const qlogic::Scenario sc = qlogic::load_scenario(scenario_path);
  const std::map<std::string, int> assignment = qlogic::load_assignment(assignment_path);
  for (const qlogic::Context& ctx : sc.contexts) {
    const qlogic::Admissibility adm = qlogic::check_admissibility(ctx, assignment);
    std::cout << "context " << ctx.label() << ": "
              << (adm.admissible ? "Admissible"
                                 : "Violation(" + std::to_string(adm.sum) + ")")
              << "\n";
  }
  return kExitOk;
}

int run_epr_demo(const std::string& mode_flag, const std::string& axes_flag) {
  const qlogic::Mode mode = mode_flag.empty() ? qlogic::Mode::Unpasted : parse_mode(mode_flag);
  const auto comma = axes_flag.find(',');
  if (comma == std::string::npos)
    throw qlogic::ParseError("--axes expects two comma-separated axis names, e.g. z,x");
  const qlogic::SpinAxis axis_a = qlogic::SpinAxis::named(axes_flag.substr(0, comma));
  const qlogic::SpinAxis axis_b = qlogic::SpinAxis::named(axes_flag.substr(comma + 1));
  const qlogic::EprScenario scenario = qlogic::build_epr(axis_a, axis_b);
  const qlogic::DerivationReport report = qlogic::derive_chain(scenario, mode);

  std::cout << "EPR derivation (mode: " << (mode == qlogic::Mode::Pasted ? "pasted" : "unpasted")
            << ", axes: " << axis_a.label << "," << axis_b.label << ")\n";
  for (std::size_t i = 0; i < report.steps.size(); ++i) {
    const qlogic::DerivationStep& s = report.steps[i];
    std::cout << "step " << i + 1 << " [" << s.tag << "] " << s.label << ": "
              << qlogic::truth_text(s.value);
    if (!s.commentary.empty()) std::cout << "  (" << s.commentary << ")";
    std::cout << "\n";
  }
  if (report.contradiction) {
    std::cout << "CONTRADICTION [Eq-23/Eq-24]: admissibility violated on";
    for (const std::string& ctx : report.violating_contexts) std::cout << " " << ctx;
    std::cout << "\n";
  }
  std::cout << report.conclusion << "\n";
  std::cout << "T1 = "
            << qlogic::format_population(
                   qlogic::truth_population(scenario, qlogic::ProductState::Z1, mode))
            << "\n";
  std::cout << "T2 = "
            << qlogic::format_population(
                   qlogic::truth_population(scenario, qlogic::ProductState::Z2, mode))
            << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qlogic: exact subspace logic, block lattices, and truth valuations"};
  app.require_subcommand(1);

  std::string eval_path, eval_mode;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a scenario file");
  eval->add_option("scenario", eval_path, "scenario file")->required();
  eval->add_option("--mode", eval_mode, "pasted|unpasted (overrides the file)");

  std::string lat_path, lat_context;
  bool lat_pasted = false;
  std::string lat_format = "dot";
  CLI::App* lattice = app.add_subcommand("lattice", "export a block or pasted lattice as DOT");
  lattice->add_option("scenario", lat_path, "scenario file")->required();
  lattice->add_option("--context", lat_context, "context name");
  lattice->add_flag("--pasted", lat_pasted, "paste the whole collection");
  lattice->add_option("--format", lat_format, "output format (dot)");

  std::string adm_scenario, adm_assignment;
  CLI::App* admissible = app.add_subcommand("admissible", "check a 0/1 assignment per context");
  admissible->add_option("scenario", adm_scenario, "scenario file")->required();
  admissible->add_option("assignment", adm_assignment, "assignment file")->required();

  std::string demo_mode, demo_axes = "z,x";
  CLI::App* demo = app.add_subcommand("epr-demo", "replay the EPR derivation chain");
  demo->add_option("--mode", demo_mode, "pasted|unpasted (default unpasted)");
  demo->add_option("--axes", demo_axes, "two axis names, e.g. z,x");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) return run_eval(eval_path, eval_mode);
    if (*lattice) {
      if (lat_format != "dot") throw qlogic::ParseError("unsupported --format '" + lat_format + "'");
      if (!lat_pasted && lat_context.empty())
        throw qlogic::ValidationError("lattice: pass --context NAME or --pasted");
      return run_lattice(lat_path, lat_context, lat_pasted);
    }
    if (*admissible) return run_admissible(adm_scenario, adm_assignment);
    if (*demo) return run_epr_demo(demo_mode, demo_axes);
  } catch (const qlogic::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
