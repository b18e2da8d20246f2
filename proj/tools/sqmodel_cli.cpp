#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sqmodel/analyze.hpp"
#include "sqmodel/canned_shapes.hpp"
#include "sqmodel/diagram.hpp"
#include "sqmodel/presentation.hpp"
#include "sqmodel/random_graph.hpp"
#include "sqmodel/sweep.hpp"

namespace {

int run_sample(const std::string& model, std::uint64_t n, const std::string& d,
               std::uint64_t seed, const std::string& out) {
  const sqm::Presentation p =
      sqm::sample_presentation(n, sqm::Density::parse(d), sqm::model_from_string(model), seed);
  if (out.empty()) {
    sqm::write_presentation(std::cout, p);
  } else {
    sqm::save_presentation(out, p);
    std::cout << "wrote " << p.relators.size() << " relators to " << out << "\n";
  }
  return 0;
}

int run_analyze(const std::string& in, const std::string& format) {
  const sqm::Presentation p = sqm::load_presentation(in);
  try {
    const sqm::AnalysisReport report = sqm::analyze(p);
    std::cout << (format == "json" ? sqm::report_json(report) : sqm::report_text(report));
    if (format == "json") std::cout << "\n";
  } catch (const sqm::CrossCheckError& err) {
    const std::string bundle = "crosscheck-violation-" + std::to_string(p.seed) + ".presentation";
    sqm::save_presentation(bundle, err.presentation);
    std::cerr << "cross-check violation: " << err.what() << "\n"
              << "reproduction bundle written to " << bundle << " (seed " << p.seed << ")\n";
    return 2;
  }
  return 0;
}

int run_sweep_cmd(const std::string& config_path, const std::string& out) {
  const sqm::SweepConfig cfg = sqm::load_sweep_config(config_path);
  const std::vector<sqm::SweepRow> rows = sqm::run_sweep(cfg);
  if (out.empty()) {
    sqm::write_csv(std::cout, rows);
  } else {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot open '" + out + "' for writing");
    sqm::write_csv(os, rows);
  }
  return 0;
}

int run_graphsim(const std::string& mode, int n, double delta, int trials, std::uint64_t seed) {
  const sqm::GraphProperty property = mode == "connectivity" ? sqm::GraphProperty::Connected
                                                             : sqm::GraphProperty::OddCycle;
  const double rate = sqm::estimate_threshold(n, delta, trials, property, seed);
  std::cout << "n,delta,trials,rate\n";
  std::cout << n << ',' << delta << ',' << trials << ',' << rate << "\n";
  return 0;
}

int run_diagram(const std::string& check, const std::string& fulfill,
                const std::string& presentation, std::size_t max_results,
                const std::string& bound, std::uint64_t n, const std::string& d) {
  if (!check.empty()) {
    const sqm::AbstractDiagram diagram = sqm::load_diagram(check);
    const std::vector<std::string> defects = sqm::validate(diagram);
    if (defects.empty()) {
      const sqm::DiagramStats s = sqm::diagram_stats(diagram);
      std::cout << "ok faces=" << s.faces << " boundary=" << s.boundary_length
                << " fixed=" << s.fixed_edges << " reduced=" << (sqm::is_reduced(diagram) ? "yes" : "no")
                << " parity_defects=" << sqm::parity_defects(diagram).size() << "\n";
      return 0;
    }
    for (const auto& defect : defects) std::cout << "defect: " << defect << "\n";
    return 1;
  }
  if (!fulfill.empty()) {
    const sqm::AbstractDiagram diagram = sqm::load_diagram(fulfill);
    const sqm::Presentation p = sqm::load_presentation(presentation);
    const auto results = sqm::find_fulfillments(diagram, p.relators, max_results);
    std::cout << "fulfillments: " << results.size()
              << (results.size() == max_results ? " (limit reached)" : "") << "\n";
    for (const auto& f : results) {
      for (const auto& [cls, relator] : f.by_class)
        std::cout << "  class " << cls << " <- " << relator << "\n";
      std::cout << "\n";
    }
    return 0;
  }
  if (!bound.empty()) {
    const sqm::AbstractDiagram diagram = sqm::load_diagram(bound);
    const sqm::DiagramStats s = sqm::diagram_stats(diagram);
    const sqm::Density density = sqm::Density::parse(d);
    const double e = sqm::bound_exponent(s, density, s.relator_len);
    const auto positive = sqm::fulfillment_bound(s, n, density, sqm::ModelKind::PositiveSquare);
    const auto square = sqm::fulfillment_bound(s, n, density, sqm::ModelKind::Square);
    std::cout << "exponent=" << e << (positive.vacuous ? " (vacuous)" : "") << "\n";
    std::cout << "positive_bound=" << positive.probability << "\n";
    std::cout << "square_bound=" << square.probability << "\n";
    return 0;
  }
  std::cerr << "diagram: one of --check, --fulfill, --bound is required\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random groups in the square model: sampling, certificates, sweeps"};
  app.require_subcommand(1);

  // sample
  auto* sample = app.add_subcommand("sample", "sample a presentation and write it out");
  std::string model = "positive", d_text = "0.5", out_path;
  std::uint64_t n = 4, seed = 0;
  sample->add_option("--model", model, "positive|square")->check(CLI::IsMember({"positive", "square"}));
  sample->add_option("--n", n, "generator count")->required();
  sample->add_option("--d", d_text, "density in (0,1)")->required();
  sample->add_option("--seed", seed, "64-bit seed");
  sample->add_option("--out", out_path, "output file (default stdout)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "run all detectors on a presentation file");
  std::string in_path, format = "text";
  analyze->add_option("--in", in_path, "presentation file")->required();
  analyze->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over an (n,d) grid");
  std::string config_path, csv_path;
  sweep->add_option("--config", config_path, "sweep config file")->required();
  sweep->add_option("--out", csv_path, "CSV output file (default stdout)");

  // graphsim
  auto* graphsim = app.add_subcommand("graphsim", "random graph threshold estimation");
  std::string mode = "connectivity";
  int gn = 100, trials = 100;
  double delta = 0.5;
  std::uint64_t gseed = 0;
  graphsim->add_option("--mode", mode, "connectivity|oddcycle")
      ->check(CLI::IsMember({"connectivity", "oddcycle"}));
  graphsim->add_option("--n", gn, "vertex count")->required();
  graphsim->add_option("--delta", delta, "exponent: p = n^(delta-1)")->required();
  graphsim->add_option("--trials", trials, "number of trials")->required();
  graphsim->add_option("--seed", gseed, "64-bit seed");

  // diagram
  auto* diagram = app.add_subcommand("diagram", "abstract diagram utilities");
  std::string check_path, fulfill_path, pres_path, bound_path, diag_d = "0.25";
  std::size_t max_results = 10;
  std::uint64_t diag_n = 4;
  diagram->add_option("--check", check_path, "validate a diagram file");
  diagram->add_option("--fulfill", fulfill_path, "search fulfillments of a diagram file");
  diagram->add_option("--presentation", pres_path, "presentation supplying the relators");
  diagram->add_option("--max", max_results, "maximum number of fulfillments to report");
  diagram->add_option("--bound", bound_path, "report the fulfillment probability bound");
  diagram->add_option("--n", diag_n, "generator count for the bound");
  diagram->add_option("--d", diag_d, "density for the bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sample->parsed()) return run_sample(model, n, d_text, seed, out_path);
    if (analyze->parsed()) return run_analyze(in_path, format);
    if (sweep->parsed()) return run_sweep_cmd(config_path, csv_path);
    if (graphsim->parsed()) return run_graphsim(mode, gn, delta, trials, gseed);
    if (diagram->parsed())
      return run_diagram(check_path, fulfill_path, pres_path, max_results, bound_path, diag_n,
                         diag_d);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
