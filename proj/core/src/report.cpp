#include "pairwalk/report.hpp"

#include <sstream>

namespace pairwalk {

namespace {

std::string certification_str(Certification c) {
  return c == Certification::Exact ? "exact" : "numeric_only";
}

Certification certification_from(const std::string& s) {
  return s == "exact" ? Certification::Exact : Certification::NumericOnly;
}

Verdict verdict_from(const std::string& s) {
  if (s == "fixed") return Verdict::Fixed;
  if (s == "periodic") return Verdict::Periodic;
  if (s == "pst") return Verdict::PST;
  if (s == "strongly_cospectral_only") return Verdict::StronglyCospectralOnly;
  return Verdict::None;
}

}  // namespace

Json to_json(const TransferReport& rep) {
  Json j;
  j["verdict"] = to_string(rep.verdict);
  j["certification"] = certification_str(rep.certification);
  j["time"] = rep.time;
  if (rep.symbolic_time)
    j["time_symbolic"] = {{"num", rep.symbolic_time->num},
                          {"den", rep.symbolic_time->den},
                          {"delta", rep.symbolic_time->delta},
                          {"text", rep.symbolic_time->str()}};
  j["phase"] = {rep.phase.real(), rep.phase.imag()};
  if (rep.sign_partition) {
    j["sign_partition"] = {{"plus", rep.sign_partition->plus},
                           {"minus", rep.sign_partition->minus}};
  }
  j["oracle_fidelity"] = rep.oracle_fidelity;
  if (rep.verdict == Verdict::Fixed) j["eigenvalue"] = rep.eigenvalue;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

TransferReport transfer_report_from_json(const Json& j) {
  TransferReport rep;
  rep.verdict = verdict_from(j.at("verdict").get<std::string>());
  rep.certification = certification_from(j.at("certification").get<std::string>());
  rep.time = j.at("time").get<double>();
  rep.phase = {j.at("phase")[0].get<double>(), j.at("phase")[1].get<double>()};
  if (j.contains("sign_partition")) {
    SignPartition sp;
    sp.plus = j["sign_partition"]["plus"].get<std::vector<double>>();
    sp.minus = j["sign_partition"]["minus"].get<std::vector<double>>();
    rep.sign_partition = sp;
  }
  rep.oracle_fidelity = j.at("oracle_fidelity").get<double>();
  if (j.contains("eigenvalue")) rep.eigenvalue = j["eigenvalue"].get<double>();
  if (j.contains("note")) rep.note = j["note"].get<std::string>();
  if (j.contains("time_symbolic")) {
    const Json& sym = j["time_symbolic"];
    rep.symbolic_time = SymbolicTime{sym.at("num").get<long long>(),
                                     sym.at("den").get<long long>(),
                                     sym.at("delta").get<long long>()};
  }
  return rep;
}

Json to_json(const ReportDocument& doc) {
  Json j;
  j["schema_version"] = doc.schema_version;
  j["graph"] = {{"name", doc.graph_name}, {"n", doc.n}, {"m", doc.m}, {"weighted", doc.weighted}};
  j["hamiltonian"] = doc.hamiltonian;
  j["fixed"] = Json::array();
  for (const auto& f : doc.fixed)
    j["fixed"].push_back({{"a", f.a}, {"b", f.b}, {"s", f.s}, {"eigenvalue", f.eigenvalue}});
  j["periodic"] = Json::array();
  for (const auto& p : doc.periodic) {
    Json e = {{"a", p.a}, {"b", p.b}, {"s", p.s}};
    e["report"] = to_json(p.report);
    j["periodic"].push_back(e);
  }
  j["pst"] = Json::array();
  for (const auto& h : doc.pst) {
    Json e = {{"source", {h.source.a, h.source.b}},
              {"target", {h.target.a, h.target.b}},
              {"s", h.source.s}};
    e["report"] = to_json(h.report);
    j["pst"].push_back(e);
  }
  j["diagnostics"] = doc.diagnostics;
  j["elapsed_ms"] = doc.elapsed_ms;
  return j;
}

ReportDocument report_from_json(const Json& j) {
  ReportDocument doc;
  doc.schema_version = j.at("schema_version").get<int>();
  doc.graph_name = j.at("graph").at("name").get<std::string>();
  doc.n = j.at("graph").at("n").get<int>();
  doc.m = j.at("graph").at("m").get<int>();
  doc.weighted = j.at("graph").at("weighted").get<bool>();
  doc.hamiltonian = j.at("hamiltonian").get<std::string>();
  for (const auto& f : j.at("fixed"))
    doc.fixed.push_back({f.at("a").get<int>(), f.at("b").get<int>(), f.at("s").get<double>(),
                         f.at("eigenvalue").get<double>()});
  for (const auto& p : j.at("periodic")) {
    PeriodicRecord rec;
    rec.a = p.at("a").get<int>();
    rec.b = p.at("b").get<int>();
    rec.s = p.at("s").get<double>();
    rec.report = transfer_report_from_json(p.at("report"));
    doc.periodic.push_back(rec);
  }
  for (const auto& h : j.at("pst")) {
    PstHit hit;
    hit.source = SPairState(h.at("source")[0].get<int>(), h.at("source")[1].get<int>(),
                            h.at("s").get<double>());
    hit.target = SPairState(h.at("target")[0].get<int>(), h.at("target")[1].get<int>(),
                            h.at("s").get<double>());
    hit.report = transfer_report_from_json(h.at("report"));
    doc.pst.push_back(hit);
  }
  doc.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
  doc.elapsed_ms = j.at("elapsed_ms").get<double>();
  return doc;
}

std::string render_text(const ReportDocument& doc) {
  std::ostringstream out;
  out.precision(12);
  out << "graph " << (doc.graph_name.empty() ? "<input>" : doc.graph_name) << ": n=" << doc.n
      << " m=" << doc.m << (doc.weighted ? " (weighted)" : "") << ", hamiltonian "
      << doc.hamiltonian << "\n";
  out << "fixed states (" << doc.fixed.size() << "):\n";
  for (const auto& f : doc.fixed)
    out << "  e" << f.a << (f.s >= 0 ? "+" : "") << f.s << "*e" << f.b
        << "  eigenvalue " << f.eigenvalue << "\n";
  out << "periodic s-pair states (" << doc.periodic.size() << "):\n";
  for (const auto& p : doc.periodic) {
    out << "  e" << p.a << (p.s >= 0 ? "+" : "") << p.s << "*e" << p.b << "  min period "
        << p.report.time;
    if (p.report.symbolic_time) out << " = " << p.report.symbolic_time->str();
    out << (p.report.certification == Certification::Exact ? "" : "  [numeric-only]") << "\n";
  }
  out << "perfect state transfer pairs (" << doc.pst.size() << "):\n";
  for (const auto& h : doc.pst) {
    out << "  (e" << h.source.a << (h.source.s >= 0 ? "+" : "") << h.source.s << "*e"
        << h.source.b << ") -> (e" << h.target.a << (h.target.s >= 0 ? "+" : "") << h.target.s
        << "*e" << h.target.b << ")  time " << h.report.time;
    if (h.report.symbolic_time) out << " = " << h.report.symbolic_time->str();
    out << "  fidelity " << h.report.oracle_fidelity
        << (h.report.certification == Certification::Exact ? "" : "  [numeric-only]") << "\n";
  }
  for (const auto& d : doc.diagnostics) out << "diagnostic: " << d << "\n";
  return out.str();
}

}  // namespace pairwalk
