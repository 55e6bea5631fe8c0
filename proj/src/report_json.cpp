#include "beliefdyn/report_json.hpp"

namespace beliefdyn {

namespace {

json one_based(const std::vector<int>& ids) {
  json arr = json::array();
  for (int id : ids) arr.push_back(id + 1);
  return arr;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) arr.push_back(v(k));
  return arr;
}

json partition_to_json(const TopicPartition& partition) {
  json blocks = json::array();
  for (int j = 0; j < partition.count(); ++j) {
    json b;
    b["index"] = j + 1;
    b["topics"] = one_based(partition.blocks[static_cast<size_t>(j)]);
    b["closed"] = static_cast<bool>(partition.closed[static_cast<size_t>(j)]);
    b["external_dependencies"] = one_based(partition.ext_dep_sets[static_cast<size_t>(j)]);
    blocks.push_back(b);
  }
  return blocks;
}

}  // namespace

json prediction_to_json(const PredictionReport& report, const std::string& name) {
  json doc;
  doc["scenario"] = name;
  doc["blocks"] = partition_to_json(report.partition);
  json topics = json::array();
  for (size_t p = 0; p < report.topics.size(); ++p) {
    const TopicVerdict& v = report.topics[p];
    json t;
    t["topic"] = p + 1;
    t["block"] = report.partition.block_of[p] + 1;
    t["verdict"] = verdict_name(v.kind);
    if (v.alpha.has_value()) t["alpha"] = *v.alpha;
    t["rule"] = v.rule;
    if (!v.note.empty()) t["note"] = v.note;
    topics.push_back(t);
  }
  doc["topics"] = topics;
  json kappa = json::object();
  for (const auto& [j, value] : report.kappa_values) {
    kappa[std::to_string(j + 1)] = value;
  }
  doc["kappa_by_block"] = kappa;
  json phi = json::object();
  for (const auto& [j, values] : report.phi_values) {
    json arr = json::array();
    for (double value : values) arr.push_back(value);
    phi[std::to_string(j + 1)] = arr;
  }
  doc["phi_by_block"] = phi;
  return doc;
}

json verification_to_json(const VerificationReport& report, const std::string& name) {
  json doc;
  doc["scenario"] = name;
  doc["agreement"] = report.agreement;
  doc["prediction"] = prediction_to_json(report.prediction, name);
  json topics = json::array();
  for (const TopicComparison& c : report.topics) {
    json t;
    t["topic"] = c.topic + 1;
    t["predicted"] = verdict_name(c.predicted);
    t["oracle_limit"] = vector_to_json(c.oracle_limit);
    t["simulated_limit"] = vector_to_json(c.simulated_limit);
    t["simulated_spread"] = c.simulated_spread;
    t["simulated_mean"] = c.simulated_mean;
    t["oracle_vs_simulation"] = c.oracle_vs_simulation;
    t["category_match"] = c.category_match;
    topics.push_back(t);
  }
  doc["topics"] = topics;
  json certs = json::object();
  for (const auto& [j, cert] : report.open_block_certificates) {
    json c;
    c["radius"] = cert.radius;
    c["abs_bound"] = cert.abs_bound;
    certs[std::to_string(j + 1)] = c;
  }
  doc["open_block_certificates"] = certs;
  doc["fixed_point_residual"] = report.fixed_point_residual;
  doc["simulation_steps"] = report.simulation_steps;
  return doc;
}

}  // namespace beliefdyn
