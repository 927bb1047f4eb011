#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "pairwalk/graph.hpp"
#include "pairwalk/transfer.hpp"

namespace pairwalk {

using Json = nlohmann::ordered_json;

/// Everything a single analysis run needs: Hamiltonian choice, tolerance
/// bundle, s values, scan horizon, worker count.
struct AnalysisConfig {
  HamiltonianKind hamiltonian = HamiltonianKind::Adjacency;
  Tolerances tol = Tolerances::from_env();
  std::vector<double> s_list{1.0, -1.0};
  bool solved_s = true;
  double t_max = -1.0;  // < 0: derived from the support gap estimate
  int cap = 64;
  int threads = 1;
};

struct FixedStateRecord {
  int a = 0, b = 0;
  double s = 1.0;
  double eigenvalue = 0;
};

struct PeriodicRecord {
  int a = 0, b = 0;
  double s = 1.0;
  TransferReport report;
};

struct ReportDocument {
  int schema_version = 1;
  std::string graph_name;
  int n = 0, m = 0;
  bool weighted = false;
  std::string hamiltonian;
  std::vector<FixedStateRecord> fixed;
  std::vector<PeriodicRecord> periodic;
  std::vector<PstHit> pst;
  std::vector<std::string> diagnostics;
  double elapsed_ms = 0;
};

Json to_json(const TransferReport& rep);
TransferReport transfer_report_from_json(const Json& j);

Json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const Json& j);

std::string render_text(const ReportDocument& doc);

}  // namespace pairwalk
