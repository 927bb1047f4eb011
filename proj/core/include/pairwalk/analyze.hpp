#pragma once

#include <string>
#include <vector>

#include "pairwalk/report.hpp"

namespace pairwalk {

/// Fixed states, periodic s-pair states with minimum periods, and the
/// transfer pairs found by the search, for one graph and one Hamiltonian.
ReportDocument analyze_graph(const Graph& x, const AnalysisConfig& config,
                             const std::string& name = "");

/// One census record: periodic / transfer counts per Hamiltonian.
Json census_record(const Graph& x, const AnalysisConfig& config, const std::string& graph6);

struct CensusResult {
  std::vector<std::string> lines;     // one JSON line per parsed graph, input order
  std::vector<std::string> warnings;  // malformed input lines
};

/// Census over graph6 lines with a worker pool; output order equals input
/// order regardless of the thread count.
CensusResult run_census(const std::vector<std::string>& graph6_lines,
                        const AnalysisConfig& config);

}  // namespace pairwalk

namespace pairwalk::corpus {

/// All connected graphs on up to six vertices, as graph6 lines.
const std::vector<std::string>& connected_graphs_n_le_6();
/// All connected graphs on exactly seven vertices.
const std::vector<std::string>& connected_graphs_n_7();

}  // namespace pairwalk::corpus
