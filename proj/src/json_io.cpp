#include "isocompat/json_io.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

namespace isocompat {

namespace {

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw InputError(what + ": missing field '" + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key, const std::string& what) {
  const Json& v = field(j, key, what);
  if (!v.is_number_integer()) throw InputError(what + ": field '" + std::string(key) + "' must be an integer");
  return v.get<int>();
}

Flavor flavor_from(const Json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + ": flavor must be \"SO\" or \"O\"");
  const auto s = j.get<std::string>();
  if (s == "SO") return Flavor::SO;
  if (s == "O") return Flavor::O;
  throw InputError(what + ": unknown flavor '" + s + "'");
}

Json family_to_json(const Family& family) {
  return std::visit(
      [](const auto& f) -> Json {
        using T = std::decay_t<decltype(f)>;
        Json j;
        if constexpr (std::is_same_v<T, BlockOrthogonal>) {
          j["type"] = "block_orthogonal";
          j["blocks"] = Json::array();
          for (const auto& b : f.blocks) j["blocks"].push_back({{"size", b.size}, {"flavor", b.flavor == Flavor::SO ? "SO" : "O"}});
        } else if constexpr (std::is_same_v<T, TranslationLattice>) {
          j["type"] = "translation_lattice";
          j["generators"] = Json::array();
          for (const auto& g : f.generators) j["generators"].push_back(to_json(g));
        } else if constexpr (std::is_same_v<T, UnitaryTorus>) {
          j["type"] = "unitary_torus";
          j["n"] = f.n;
          j["special"] = f.special;
        } else if constexpr (std::is_same_v<T, FiniteSet>) {
          j["type"] = "finite_set";
          j["elements"] = Json::array();
          for (const auto& e : f.elements) j["elements"].push_back(to_json(e));
        } else {
          j["type"] = "product";
          j["factors"] = Json::array();
          for (const auto& s : f.factors) j["factors"].push_back(to_json(s));
        }
        return j;
      },
      family);
}

GroupSpec family_from_json(const Json& j) {
  const std::string what = "group family";
  const Json& type = field(j, "type", what);
  if (!type.is_string()) throw InputError(what + ": 'type' must be a string");
  const auto t = type.get<std::string>();
  if (t == "block_orthogonal") {
    std::vector<Block> blocks;
    const Json& arr = field(j, "blocks", what);
    if (!arr.is_array() || arr.empty()) throw InputError(what + ": 'blocks' must be a nonempty array");
    for (const auto& b : arr) {
      Block blk;
      blk.size = int_field(b, "size", "block");
      blk.flavor = b.contains("flavor") ? flavor_from(b.at("flavor"), "block") : Flavor::SO;
      blocks.push_back(blk);
    }
    return block_orthogonal(std::move(blocks));
  }
  if (t == "translation_lattice") {
    std::vector<Vec> gens;
    const Json& arr = field(j, "generators", what);
    if (!arr.is_array() || arr.empty()) throw InputError(what + ": 'generators' must be a nonempty array");
    for (const auto& g : arr) gens.push_back(vec_from_json(g, "lattice generator"));
    return translation_lattice(std::move(gens));
  }
  if (t == "unitary_torus") {
    const bool special = j.contains("special") ? j.at("special").get<bool>() : true;
    return unitary_torus(int_field(j, "n", what), special);
  }
  if (t == "finite_set") {
    std::vector<EuclideanIsometry> elems;
    const Json& arr = field(j, "elements", what);
    if (!arr.is_array() || arr.empty()) throw InputError(what + ": 'elements' must be a nonempty array");
    for (const auto& e : arr) elems.push_back(isometry_from_json(e));
    return finite_set(std::move(elems));
  }
  if (t == "product") {
    std::vector<GroupSpec> factors;
    const Json& arr = field(j, "factors", what);
    if (!arr.is_array() || arr.empty()) throw InputError(what + ": 'factors' must be a nonempty array");
    for (const auto& f : arr) factors.push_back(group_spec_from_json(f));
    return product(std::move(factors));
  }
  throw InputError(what + ": unknown type '" + t + "'");
}

Json notes_json(const std::vector<std::string>& notes) {
  Json a = Json::array();
  for (const auto& n : notes) a.push_back(n);
  return a;
}

}  // namespace

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Json to_json(const Mat& m) {
  Json a = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) a.push_back(to_json(Vec(m.row(r).transpose())));
  return a;
}

Vec vec_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected an array of numbers");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw InputError(what + ": expected an array of numbers");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

Mat mat_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw InputError(what + ": expected a nonempty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Mat m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    const Vec row = vec_from_json(j[r], what);
    if (static_cast<std::size_t>(row.size()) != cols) throw InputError(what + ": ragged matrix rows");
    m.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  return m;
}

Json to_json(const EuclideanIsometry& g) {
  Json j;
  j["matrix"] = to_json(g.matrix());
  j["translation"] = to_json(g.translation_part());
  return j;
}

EuclideanIsometry isometry_from_json(const Json& j) {
  const std::string what = "isometry";
  const Mat a = mat_from_json(field(j, "matrix", what), what + ".matrix");
  if (a.rows() != a.cols()) throw InputError(what + ": matrix must be square");
  Vec v = Vec::Zero(a.rows());
  if (j.contains("translation") && !j.at("translation").is_null()) v = vec_from_json(j.at("translation"), what + ".translation");
  if (v.size() != a.rows()) throw InputError(what + ": translation length does not match the matrix");
  try {
    return EuclideanIsometry(a, v);
  } catch (const std::invalid_argument& e) {
    throw InputError(what + ": " + e.what());
  }
}

Json to_json(const GroupSpec& spec) {
  Json j;
  j["dimension"] = spec.dimension;
  j["family"] = family_to_json(spec.family);
  if (spec.twist) {
    Json t;
    t["tau"] = to_json(spec.twist->tau);
    t["character_value_on_tau"] = spec.twist->character_value_on_tau;
    t["claimed_nontrivial"] = spec.twist->claimed_nontrivial;
    t["label"] = spec.twist->label;
    j["twist"] = t;
  } else {
    j["twist"] = nullptr;
  }
  return j;
}

GroupSpec group_spec_from_json(const Json& j) {
  const std::string what = "group spec";
  GroupSpec spec;
  try {
    spec = family_from_json(field(j, "family", what));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(what + ": " + e.what());
  }
  if (j.contains("dimension")) {
    const int n = int_field(j, "dimension", what);
    if (n != spec.dimension) {
      throw InputError(what + ": dimension " + std::to_string(n) + " does not match the family (" +
                       std::to_string(spec.dimension) + ")");
    }
  }
  if (j.contains("twist") && !j.at("twist").is_null()) {
    const Json& t = j.at("twist");
    const EuclideanIsometry tau = isometry_from_json(field(t, "tau", "twist"));
    if (t.contains("character_value_on_tau") && t.at("character_value_on_tau") != -1) {
      throw InputError("twist: character_value_on_tau must be -1");
    }
    const bool claimed = t.contains("claimed_nontrivial") && t.at("claimed_nontrivial").get<bool>();
    const std::string label = t.contains("label") ? t.at("label").get<std::string>() : std::string();
    try {
      spec = with_twist(std::move(spec), tau, claimed, label);
    } catch (const std::exception& e) {
      throw InputError("twist: " + std::string(e.what()));
    }
  }
  return spec;
}

Json to_json(const MetricPoint& p) {
  Json j;
  j["space"] = to_string(p.kind());
  if (p.kind() == SpaceKind::Spd) {
    j["coordinates"] = to_json(p.as_spd().matrix());
  } else {
    j["coordinates"] = to_json(p.coords());
  }
  return j;
}

Json to_json(const PackingReport& r) {
  Json j;
  j["base_point"] = to_json(r.base_point);
  j["radius"] = r.radius;
  j["sample_count"] = r.sample_count;
  j["m_hat"] = r.m_hat;
  j["separation_verified"] = r.separation_verified;
  j["selected_representatives"] = Json::array();
  for (const auto& p : r.selected_representatives) j["selected_representatives"].push_back(to_json(p));
  if (!r.growth_curve.empty()) {
    j["growth_curve"] = Json::array();
    for (const auto& g : r.growth_curve) j["growth_curve"].push_back({{"norm", g.norm}, {"m_hat", g.m_hat}});
  } else {
    j["growth_curve"] = nullptr;
  }
  j["verdict"] = r.verdict ? Json(to_string(*r.verdict)) : Json(nullptr);
  j["notes"] = notes_json(r.notes);
  return j;
}

Json to_json(const TwistReport& r) {
  Json j;
  j["tau_involutive"] = r.tau_involutive;
  j["tau_outside"] = r.tau_outside;
  j["normalizes"] = r.normalizes;
  j["character_homomorphism"] = r.character_homomorphism;
  j["all_pass"] = r.all_pass();
  j["involution_defect"] = r.involution_defect;
  j["normalizer_checks"] = r.normalizer_checks;
  j["normalizer_failures"] = r.normalizer_failures;
  j["homomorphism_checks"] = r.homomorphism_checks;
  j["homomorphism_failures"] = r.homomorphism_failures;
  return j;
}

Json to_json(const TrivialityReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  if (r.witness) {
    const auto& w = r.points.at(*r.witness);
    j["witness"] = {{"index", *r.witness}, {"x", to_json(w.x)}, {"delta", w.gap.refined}};
  } else {
    j["witness"] = nullptr;
  }
  j["exact_invariant_check"] = r.exact_invariant_check ? Json(*r.exact_invariant_check) : Json(nullptr);
  j["coincidence_tolerance"] = r.coincidence_tolerance;
  j["gap_threshold"] = r.gap_threshold;
  j["samples"] = r.samples;
  j["tested_points"] = Json::array();
  for (const auto& p : r.points) {
    Json e;
    e["x"] = to_json(p.x);
    e["tau_x"] = to_json(p.tau_x);
    e["delta_haar_only"] = p.gap.sampled;
    e["delta"] = p.gap.refined;
    e["exact_coincident"] = p.exact_coincident ? Json(*p.exact_coincident) : Json(nullptr);
    j["tested_points"].push_back(e);
  }
  j["twist_verification"] = to_json(r.twist);
  j["discrepancy_with_claim"] = r.discrepancy;
  j["notes"] = notes_json(r.notes);
  return j;
}

Json to_json(const FixedSubspace& r) {
  Json j;
  j["dimension"] = r.dimension;
  j["basis"] = Json::array();
  for (const auto& b : r.basis) j["basis"].push_back(to_json(b));
  return j;
}

Json to_json(const RauchSweepReport& r) {
  Json j;
  j["n"] = r.n;
  j["pairs"] = r.pairs;
  j["max_norm"] = r.max_norm;
  j["tolerance"] = r.tolerance;
  j["violations"] = r.violations;
  j["holds"] = r.violations == 0;
  j["min_slack"] = r.min_slack;
  j["max_ratio"] = r.max_ratio;
  j["max_sheet_defect"] = r.max_sheet_defect;
  j["max_exp_length_error"] = r.max_exp_length_error;
  return j;
}

Json to_json(const CommutantResult& r) {
  Json j;
  j["n"] = r.n;
  j["trace_free"] = r.trace_free;
  j["samples"] = r.samples;
  j["dimension"] = r.dimension;
  j["basis"] = Json::array();
  for (const auto& b : r.basis) j["basis"].push_back(to_json(b));
  Json sv = Json::array();
  for (double s : r.singular_values) sv.push_back(s);
  j["singular_values"] = sv;
  return j;
}

Json to_json(const SlTwistReport& r) {
  Json j;
  j["n"] = r.n;
  j["samples"] = r.samples;
  j["tau_involutive"] = r.tau_involutive;
  j["tau_outside"] = r.tau_outside;
  j["conjugation_closed"] = r.conjugation_closed;
  j["conjugation_failures"] = r.conjugation_failures;
  j["tau_j_anticommutation_defect"] = r.tau_j_relation;
  j["all_pass"] = r.all_pass();
  j["notes"] = Json::array({"tau is checked against the SU(n) image inside SO(2n)"});
  return j;
}

Json to_json(const pde::SolveReport& r) {
  Json j;
  j["status"] = pde::to_string(r.status);
  j["energy"] = r.energy;
  j["residual"] = r.residual;
  j["symmetry_defect"] = r.symmetry_defect;
  j["lq1_norm"] = r.lq1_norm;
  j["nonzero"] = r.nonzero;
  j["comparison_energy"] = r.comparison_energy ? Json(*r.comparison_energy) : Json(nullptr);
  j["iterations"] = r.iterations;
  j["nehari_defect"] = r.nehari_defect;
  j["scaling_identity_max_error"] = r.scaling_identity_max_error;
  j["energy_monotone"] = r.energy_monotone;
  if (!r.energy_history.empty()) {
    Json h = Json::array();
    for (double e : r.energy_history) h.push_back(e);
    j["energy_history"] = h;
  }
  j["notes"] = notes_json(r.notes);
  return j;
}

Json to_json(const pde::CounterexampleReport& r) {
  Json j;
  j["p"] = r.p;
  j["cells_per_unit"] = r.cells_per_unit;
  j["z_extent"] = r.z_extent;
  j["analytic_mass"] = r.analytic_mass;
  j["quadrature_relative_error"] = r.quadrature_relative_error;
  j["max_relative_deviation"] = r.max_relative_deviation;
  j["pairings_vanish_when_disjoint"] = r.pairings_vanish_when_disjoint;
  j["shifts"] = Json::array();
  for (const auto& s : r.shifts) {
    j["shifts"].push_back({{"shift", s.shift},
                           {"mass", s.mass},
                           {"relative_deviation", s.relative_deviation},
                           {"pairing", s.pairing},
                           {"disjoint_support", s.disjoint_support}});
  }
  return j;
}

Json make_report(const std::string& kind, const Json& config, const Json& result, bool timestamp) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  j["config"] = config;
  if (timestamp) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["generated_at"] = buf;
  }
  j["result"] = result;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace isocompat
