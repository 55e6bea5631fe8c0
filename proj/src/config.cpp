#include "beliefdyn/config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "beliefdyn/errors.hpp"
#include "beliefdyn/generator.hpp"
#include "beliefdyn/rng.hpp"

namespace beliefdyn {

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& msg) {
  throw ParseError("config " + origin + ": " + msg);
}

void check_keys(const json& obj, const std::string& origin, const std::string& where,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool ok = false;
    for (const char* a : allowed) {
      if (key == a) {
        ok = true;
        break;
      }
    }
    if (!ok) fail(origin, "unknown field \"" + where + key + "\"");
  }
}

double as_number(const json& j, const std::string& origin, const std::string& field) {
  if (!j.is_number()) fail(origin, "field \"" + field + "\" must be a number");
  return j.get<double>();
}

Eigen::MatrixXd parse_matrix(const json& j, const std::string& origin,
                             const std::string& field) {
  if (!j.is_array() || j.empty()) {
    fail(origin, "field \"" + field + "\" must be a nonempty array of rows");
  }
  const size_t rows = j.size();
  const size_t cols = j.front().is_array() ? j.front().size() : 0;
  Eigen::MatrixXd M(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols) {
      std::ostringstream os;
      os << "field \"" << field << "\" row " << r + 1 << " must be an array of length "
         << cols;
      fail(origin, os.str());
    }
    for (size_t c = 0; c < cols; ++c) {
      std::ostringstream os;
      os << field << "[" << r + 1 << "][" << c + 1 << "]";
      M(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          as_number(row[c], origin, os.str());
    }
  }
  return M;
}

Eigen::VectorXd parse_vector(const json& j, const std::string& origin,
                             const std::string& field) {
  if (!j.is_array()) fail(origin, "field \"" + field + "\" must be an array");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (size_t k = 0; k < j.size(); ++k) {
    std::ostringstream os;
    os << field << "[" << k + 1 << "]";
    v(static_cast<Eigen::Index>(k)) = as_number(j[k], origin, os.str());
  }
  return v;
}

Tolerances parse_tolerances(const json& j, const std::string& origin) {
  Tolerances t;
  if (j.is_null()) return t;
  if (!j.is_object()) fail(origin, "field \"tolerances\" must be an object");
  check_keys(j, origin, "tolerances.",
             {"sim_tol", "max_steps", "consensus_tol", "agreement_tol", "alpha_tol"});
  if (j.contains("sim_tol")) t.sim_tol = as_number(j["sim_tol"], origin, "tolerances.sim_tol");
  if (j.contains("max_steps")) {
    t.max_steps = static_cast<long>(as_number(j["max_steps"], origin, "tolerances.max_steps"));
  }
  if (j.contains("consensus_tol")) {
    t.consensus_tol = as_number(j["consensus_tol"], origin, "tolerances.consensus_tol");
  }
  if (j.contains("agreement_tol")) {
    t.agreement_tol = as_number(j["agreement_tol"], origin, "tolerances.agreement_tol");
  }
  if (j.contains("alpha_tol")) {
    t.alpha_tol = as_number(j["alpha_tol"], origin, "tolerances.alpha_tol");
  }
  return t;
}

GeneratorSpec parse_generator(const json& j, const std::string& origin) {
  if (!j.is_object()) fail(origin, "field \"generator\" must be an object");
  check_keys(j, origin, "generator.",
             {"n", "m", "pattern", "pattern_density", "competition", "sign_flip_prob",
              "seed"});
  GeneratorSpec spec;
  for (const char* req : {"n", "m", "seed"}) {
    if (!j.contains(req)) {
      fail(origin, std::string("generator spec is missing required field \"") + req + "\"");
    }
  }
  if (!j["n"].is_number_integer() || !j["m"].is_number_integer()) {
    fail(origin, "generator fields \"n\" and \"m\" must be integers");
  }
  spec.n = j["n"].get<int>();
  spec.m = j["m"].get<int>();
  if (spec.n < 1 || spec.m < 1) fail(origin, "generator needs n >= 1 and m >= 1");
  if (!j["seed"].is_number_integer()) {
    fail(origin, "generator field \"seed\" must be an integer");
  }
  spec.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("pattern_density")) {
    spec.pattern_density = as_number(j["pattern_density"], origin, "generator.pattern_density");
  }
  if (j.contains("sign_flip_prob")) {
    spec.sign_flip_prob = as_number(j["sign_flip_prob"], origin, "generator.sign_flip_prob");
  }
  if (j.contains("competition")) {
    if (!j["competition"].is_boolean()) {
      fail(origin, "generator field \"competition\" must be a boolean");
    }
    spec.competition = j["competition"].get<bool>();
  }
  if (j.contains("pattern")) {
    const Eigen::MatrixXd P = parse_matrix(j["pattern"], origin, "generator.pattern");
    if (P.rows() != spec.m || P.cols() != spec.m) {
      fail(origin, "generator pattern must be m x m");
    }
    BoolMatrix bp(spec.m, spec.m);
    for (int r = 0; r < spec.m; ++r) {
      for (int c = 0; c < spec.m; ++c) bp(r, c) = P(r, c) != 0.0;
    }
    spec.pattern = bp;
  }
  return spec;
}

json generator_to_json(const GeneratorSpec& spec) {
  json g;
  g["n"] = spec.n;
  g["m"] = spec.m;
  if (spec.pattern.has_value()) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < spec.pattern->rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < spec.pattern->cols(); ++c) {
        row.push_back((*spec.pattern)(r, c) ? 1 : 0);
      }
      rows.push_back(row);
    }
    g["pattern"] = rows;
  }
  g["pattern_density"] = spec.pattern_density;
  g["competition"] = spec.competition;
  g["sign_flip_prob"] = spec.sign_flip_prob;
  g["seed"] = spec.seed;
  return g;
}

json matrix_to_json(const Eigen::MatrixXd& M) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < M.cols(); ++c) row.push_back(M(r, c));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

ScenarioConfig parse_config(const json& doc, const std::string& origin) {
  if (!doc.is_object()) fail(origin, "top level must be an object");
  check_keys(doc, origin, "",
             {"name", "description", "W", "logic", "x0", "tolerances", "output_dir",
              "generator", "generated_from"});

  if (doc.contains("generator")) {
    for (const char* banned : {"W", "logic", "x0"}) {
      if (doc.contains(banned)) {
        fail(origin, std::string("\"generator\" cannot be combined with \"") + banned + "\"");
      }
    }
    ScenarioConfig cfg = generate_scenario(parse_generator(doc["generator"], origin));
    if (doc.contains("name")) cfg.name = doc["name"].get<std::string>();
    if (doc.contains("description")) cfg.description = doc["description"].get<std::string>();
    if (doc.contains("tolerances")) cfg.tols = parse_tolerances(doc["tolerances"], origin);
    if (doc.contains("output_dir")) cfg.output_dir = doc["output_dir"].get<std::string>();
    return cfg;
  }

  ScenarioConfig cfg;
  cfg.name = doc.contains("name") ? doc["name"].get<std::string>() : origin;
  if (doc.contains("description")) cfg.description = doc["description"].get<std::string>();
  if (doc.contains("output_dir")) cfg.output_dir = doc["output_dir"].get<std::string>();
  cfg.tols = parse_tolerances(doc.contains("tolerances") ? doc["tolerances"] : json(), origin);
  if (doc.contains("generated_from")) {
    cfg.generated_from = parse_generator(doc["generated_from"], origin);
  }

  for (const char* req : {"W", "logic", "x0"}) {
    if (!doc.contains(req)) {
      fail(origin, std::string("missing required field \"") + req + "\"");
    }
  }

  try {
    cfg.net = validate_influence(parse_matrix(doc["W"], origin, "W"), &cfg.warnings);
  } catch (const ValidationError& e) {
    throw ConfigValidationError("config " + origin + ": field \"W\": " + e.what());
  }

  if (!doc["logic"].is_array() || doc["logic"].empty()) {
    fail(origin, "field \"logic\" must be a nonempty array of matrices");
  }
  if (static_cast<Eigen::Index>(doc["logic"].size()) != cfg.net.W.rows()) {
    std::ostringstream os;
    os << "field \"logic\" has " << doc["logic"].size() << " matrices but \"W\" has "
       << cfg.net.W.rows() << " rows";
    fail(origin, os.str());
  }
  std::vector<LogicMatrix> mats;
  for (size_t i = 0; i < doc["logic"].size(); ++i) {
    std::ostringstream fieldname;
    fieldname << "logic[" << i + 1 << "]";
    try {
      mats.push_back(validate_logic(parse_matrix(doc["logic"][i], origin, fieldname.str()),
                                    &cfg.warnings));
    } catch (const ValidationError& e) {
      throw ConfigValidationError("config " + origin + ": field \"" + fieldname.str() +
                                  "\": " + e.what());
    }
  }
  try {
    cfg.profile = validate_profile(std::move(mats));
  } catch (const ValidationError& e) {
    throw ConfigValidationError("config " + origin + ": field \"logic\": " + e.what());
  }

  const Eigen::Index nm = cfg.net.W.rows() * cfg.profile.matrices.front().C.rows();
  const json& x0j = doc["x0"];
  if (x0j.is_object()) {
    check_keys(x0j, origin, "x0.", {"seed"});
    if (!x0j.contains("seed") || !x0j["seed"].is_number_integer()) {
      fail(origin, "field \"x0\" object form needs an integer \"seed\"");
    }
    Rng rng(x0j["seed"].get<std::uint64_t>());
    cfg.x0.resize(nm);
    for (Eigen::Index k = 0; k < nm; ++k) cfg.x0(k) = rng.uniform(-1.0, 1.0);
  } else {
    cfg.x0 = parse_vector(x0j, origin, "x0");
    if (cfg.x0.size() != nm) {
      std::ostringstream os;
      os << "field \"x0\" has " << cfg.x0.size() << " entries, expected n*m = " << nm;
      fail(origin, os.str());
    }
    for (Eigen::Index k = 0; k < nm; ++k) {
      if (std::abs(cfg.x0(k)) > 1.0) {
        std::ostringstream os;
        os << "config " << origin << ": field \"x0\" entry " << k + 1 << " is outside"
           << " [-1, 1]: " << cfg.x0(k);
        throw ConfigValidationError(os.str());
      }
    }
  }
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("config " + path + ": " + e.what());
  }
  return parse_config(doc, std::filesystem::path(path).stem().string());
}

json config_to_json(const ScenarioConfig& cfg) {
  json doc;
  doc["name"] = cfg.name;
  if (!cfg.description.empty()) doc["description"] = cfg.description;
  doc["W"] = matrix_to_json(cfg.net.W);
  json logic = json::array();
  for (const auto& mat : cfg.profile.matrices) logic.push_back(matrix_to_json(mat.C));
  doc["logic"] = logic;
  json x0 = json::array();
  for (Eigen::Index k = 0; k < cfg.x0.size(); ++k) x0.push_back(cfg.x0(k));
  doc["x0"] = x0;
  json t;
  t["sim_tol"] = cfg.tols.sim_tol;
  t["max_steps"] = cfg.tols.max_steps;
  t["consensus_tol"] = cfg.tols.consensus_tol;
  t["agreement_tol"] = cfg.tols.agreement_tol;
  t["alpha_tol"] = cfg.tols.alpha_tol;
  doc["tolerances"] = t;
  if (!cfg.output_dir.empty()) doc["output_dir"] = cfg.output_dir;
  if (cfg.generated_from.has_value()) {
    doc["generated_from"] = generator_to_json(*cfg.generated_from);
  }
  return doc;
}

void save_config(const ScenarioConfig& cfg, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write " + tmp);
    out << config_to_json(cfg).dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace beliefdyn
