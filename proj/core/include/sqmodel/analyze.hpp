#pragma once

#include <stdexcept>
#include <string>

#include "sqmodel/abelianization.hpp"
#include "sqmodel/freeness.hpp"
#include "sqmodel/presentation.hpp"
#include "sqmodel/square_complex.hpp"
#include "sqmodel/word_pair_graph.hpp"

namespace sqm {

// Raised when a certificate contradicts the abelianization oracle; the CLI
// turns this into exit code 2 plus a reproduction bundle on disk.
class CrossCheckError : public std::runtime_error {
 public:
  CrossCheckError(std::string message, Presentation p)
      : std::runtime_error(std::move(message)), presentation(std::move(p)) {}

  Presentation presentation;
};

struct AnalysisReport {
  std::uint64_t n = 0;
  ModelKind model = ModelKind::PositiveSquare;
  std::size_t relator_count = 0;
  std::size_t positive_count = 0;

  TrivialityVerdict trivial;
  FreenessResult free;
  HypergraphStats hyper;
  std::vector<int> occurring_once;
  AbelianInvariants abelian;
};

// Runs every detector plus the abelianization oracle and enforces the
// cross-checks: a trivial certificate must abelianize to Z4 (positive model)
// or Z4/Z2 (square model); a freeness certificate must abelianize to Z^rank
// with rank = n - |relators|.
AnalysisReport analyze(const Presentation& p);

std::string report_text(const AnalysisReport& r);
std::string report_json(const AnalysisReport& r);

}  // namespace sqm
