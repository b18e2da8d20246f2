#include "sqmodel/analyze.hpp"

#include <sstream>

#include "json.hpp"

namespace sqm {

namespace {

void enforce_cross_checks(const Presentation& p, const AnalysisReport& r) {
  if (r.trivial.status == TrivialityStatus::Certified) {
    const auto& ab = r.abelian;
    const bool z4 = ab.free_rank == 0 && ab.torsion.size() == 1 && ab.torsion[0] == 4;
    const bool z2 = ab.free_rank == 0 && ab.torsion.size() == 1 && ab.torsion[0] == 2;
    const bool ok = p.model == ModelKind::PositiveSquare ? z4 : (z4 || z2);
    if (!ok)
      throw CrossCheckError(
          "trivial certificate contradicts abelianization " + ab.to_string(), p);
  }
  if (r.free.certified()) {
    const auto& cert = *r.free.certificate;
    if (!certified_rank_identity(cert, p))
      throw CrossCheckError("freeness certificate rank " + std::to_string(cert.rank) +
                                " violates rank identity n - |R|",
                            p);
    if (!r.abelian.torsion_free() || r.abelian.free_rank != cert.rank)
      throw CrossCheckError("freeness certificate rank " + std::to_string(cert.rank) +
                                " contradicts abelianization " + r.abelian.to_string(),
                            p);
  }
}

}  // namespace

AnalysisReport analyze(const Presentation& p) {
  AnalysisReport r;
  r.n = p.n;
  r.model = p.model;
  r.relator_count = p.relators.size();
  r.positive_count = positive_subset(p).size();
  r.trivial = detect_trivial(p);
  r.free = detect_free(p);
  r.hyper = hypergraph_stats(p);
  r.occurring_once = generators_occurring_once(p);
  r.abelian = abelian_invariants(p);
  enforce_cross_checks(p, r);
  return r;
}

std::string report_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "model: " << to_string(r.model) << "\n";
  os << "n: " << r.n << "\n";
  os << "relators: " << r.relator_count << " (positive: " << r.positive_count << ")\n";
  if (r.trivial.status == TrivialityStatus::Certified) {
    os << "trivial: certified tree=" << r.trivial.spanning_tree.size()
       << " odd-walk=" << r.trivial.odd_walk.size() - 1 << "\n";
  } else {
    os << "trivial: unknown\n";
  }
  if (r.free.certified()) {
    os << "free: certified rank=" << r.free.certificate->rank << "\n";
  } else {
    const auto& w = *r.free.witness;
    os << "free: not-certified witness="
       << (w.check.failure == EmbeddedTreeCheck::Failure::Cycle
               ? "cycle"
               : "two-cell " + std::to_string(w.check.two_cell))
       << " component=" << w.component_id << "\n";
  }
  os << "hypergraphs: components=" << r.hyper.components << " trees=" << r.hyper.trees
     << " embedded=" << r.hyper.embedded_trees << " leaves=" << r.hyper.leaves << "\n";
  os << "abelianization: " << r.abelian.to_string() << "\n";
  return os.str();
}

std::string report_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["model"] = to_string(r.model);
  j["n"] = r.n;
  j["relators"] = r.relator_count;
  j["positive_relators"] = r.positive_count;
  j["trivial"]["status"] =
      r.trivial.status == TrivialityStatus::Certified ? "certified" : "unknown";
  if (r.trivial.status == TrivialityStatus::Certified) {
    j["trivial"]["spanning_tree_edges"] = r.trivial.spanning_tree.size();
    j["trivial"]["odd_walk_length"] = r.trivial.odd_walk.size() - 1;
  }
  j["free"]["status"] = r.free.certified() ? "certified" : "not-certified";
  if (r.free.certified()) {
    j["free"]["rank"] = r.free.certificate->rank;
    j["free"]["removals"] = r.free.certificate->removals.size();
    j["free"]["leftover_loops"] = r.free.certificate->leftover_loops;
  } else {
    j["free"]["witness_component"] = r.free.witness->component_id;
    j["free"]["witness_kind"] =
        r.free.witness->check.failure == EmbeddedTreeCheck::Failure::Cycle ? "cycle"
                                                                           : "shared-two-cell";
  }
  j["hypergraphs"] = {{"components", r.hyper.components},
                      {"trees", r.hyper.trees},
                      {"embedded_trees", r.hyper.embedded_trees},
                      {"leaves", r.hyper.leaves}};
  j["generators_occurring_once"] = r.occurring_once;
  j["abelianization"]["free_rank"] = r.abelian.free_rank;
  std::vector<std::string> torsion;
  for (const auto& t : r.abelian.torsion) torsion.push_back(t.get_str());
  j["abelianization"]["torsion"] = torsion;
  j["abelianization"]["display"] = r.abelian.to_string();
  return j.dump(2);
}

}  // namespace sqm
