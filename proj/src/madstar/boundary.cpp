#include "madstar/boundary.hpp"

#include <algorithm>

#include "madstar/density.hpp"

namespace madstar {

BoundaryReport boundary_search(int k, int n_max, std::span<const NamedGraph> corpus, const FiiOptions& options) {
  BoundaryReport report;
  report.k = k;
  report.n_max = n_max;
  std::vector<const NamedGraph*> sorted;
  for (const auto& item : corpus) sorted.push_back(&item);
  std::stable_sort(sorted.begin(), sorted.end(), [](const NamedGraph* a, const NamedGraph* b) { return a->id < b->id; });
  FiiOptions opts = options;
  opts.k = k;
  for (const NamedGraph* item : sorted) {
    const Graph& g = item->graph;
    if (g.n() == 0 || (n_max > 0 && g.n() > n_max)) {
      ++report.skipped;
      continue;
    }
    BoundaryEntry e{item->id, g.n(), g.m(), mad(g).value, find_fii(g, opts).status};
    switch (e.status) {
      case SearchStatus::Found:
        ++report.feasible;
        if (!report.max_feasible_mad || e.mad > *report.max_feasible_mad) report.max_feasible_mad = e.mad;
        break;
      case SearchStatus::Infeasible:
        ++report.infeasible;
        if (!report.min_infeasible_mad || e.mad < *report.min_infeasible_mad) {
          report.min_infeasible_mad = e.mad;
          report.witness_id = e.id;
        }
        break;
      case SearchStatus::Unknown: ++report.unknown; break;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace madstar
