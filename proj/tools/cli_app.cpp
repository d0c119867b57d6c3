#include "cli_app.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "isocompat/errors.hpp"
#include "isocompat/json_io.hpp"

namespace isocompat::cli {

namespace {

using pde::ReducedDomain;
using pde::SymmetryClass;

struct Common {
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  bool no_timestamp = false;
  unsigned threads = 1;
};

/// Effective configuration: defaults, then the --config file, then explicit flags.
class Settings {
 public:
  explicit Settings(Json defaults) : cfg_(std::move(defaults)) {}

  void merge_file(const std::string& path) {
    if (path.empty()) return;
    const Json file = read_json_file(path);
    if (!file.is_object()) throw InputError("config '" + path + "' must be a JSON object");
    for (const auto& [key, value] : file.items()) {
      if (!cfg_.contains(key)) throw InputError("config '" + path + "': unknown key '" + key + "'");
      cfg_[key] = value;
    }
  }

  template <class T>
  void flag(const char* key, const std::optional<T>& value) {
    if (value) cfg_[key] = *value;
  }

  Json& json() { return cfg_; }
  const Json& json() const { return cfg_; }

  double real(const char* key, double lo, double hi, bool open_lo = false) const {
    const Json& v = at(key);
    if (!v.is_number()) throw InputError(std::string(key) + " must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x) || x > hi || x < lo || (open_lo && x == lo)) {
      throw InputError(std::string(key) + " = " + v.dump() + " out of range " + (open_lo ? "(" : "[") +
                       Json(lo).dump() + ", " + Json(hi).dump() + "]");
    }
    return x;
  }

  long long integer(const char* key, long long lo, long long hi) const {
    const Json& v = at(key);
    if (!v.is_number_integer()) throw InputError(std::string(key) + " must be an integer");
    const long long x = v.get<long long>();
    if (x < lo || x > hi) {
      throw InputError(std::string(key) + " = " + v.dump() + " out of range [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
    }
    return x;
  }

  std::uint64_t seed() const {
    const Json& v = at("seed");
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
      throw InputError("seed must be a nonnegative integer");
    }
    return v.get<std::uint64_t>();
  }

  bool boolean(const char* key) const {
    const Json& v = at(key);
    if (!v.is_boolean()) throw InputError(std::string(key) + " must be a boolean");
    return v.get<bool>();
  }

  std::string choice(const char* key, std::initializer_list<const char*> allowed) const {
    const Json& v = at(key);
    if (v.is_string()) {
      for (const char* a : allowed) {
        if (v.get<std::string>() == a) return a;
      }
    }
    std::string list;
    for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
    throw InputError(std::string(key) + " must be one of: " + list);
  }

  const Json& at(const char* key) const {
    if (!cfg_.contains(key)) throw InputError(std::string("missing config key '") + key + "'");
    return cfg_.at(key);
  }

 private:
  Json cfg_;
};

Vec parse_vector(const std::string& text, const std::string& what) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(what + ": cannot parse '" + item + "' as a number");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Eigen::Map<const Vec>(values.data(), static_cast<Eigen::Index>(values.size()));
}

/// "group" may be a path to a spec file or an inline spec; the echo holds the parsed spec.
GroupSpec load_group(Settings& s) {
  Json& g = s.json()["group"];
  if (g.is_null()) throw InputError("a group spec is required (--group or config key 'group')");
  const Json doc = g.is_string() ? read_json_file(g.get<std::string>()) : g;
  GroupSpec spec = group_spec_from_json(doc);
  g = to_json(spec);
  return spec;
}

std::vector<double> number_list(const Settings& s, const char* key) {
  const Json& v = s.at(key);
  if (!v.is_array()) throw InputError(std::string(key) + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number() || !std::isfinite(x.get<double>())) throw InputError(std::string(key) + " must contain numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

ScanOrder scan_order(const Settings& s) {
  return s.choice("scan_order", {"anchor_distance", "sample_order"}) == "anchor_distance" ? ScanOrder::AnchorDistance
                                                                                        : ScanOrder::SampleOrder;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
  if (!f) throw std::runtime_error("write failed for '" + path + "'");
}

constexpr long long kMaxSamples = 10'000'000;

// ---- compat ----------------------------------------------------------------

Json run_probe(Settings& s, const Common& c, const std::string& csv_path) {
  const GroupSpec spec = load_group(s);
  const int n = spec.dimension;
  Vec dir;
  if (s.at("direction").is_null()) {
    dir = Vec::Ones(n);
  } else {
    dir = vec_from_json(s.at("direction"), "direction");
  }
  require_dims(n, static_cast<int>(dir.size()), "direction");
  if (!(dir.norm() > 0.0)) throw InputError("direction must be nonzero");
  dir /= dir.norm();
  s.json()["direction"] = to_json(dir);
  const double radius = s.real("radius", 0.0, 1e12, true);
  const std::vector<double> norms = number_list(s, "norms");
  if (norms.size() < 3) throw InputError("norms needs at least 3 entries");
  for (std::size_t i = 0; i < norms.size(); ++i) {
    if (norms[i] < 0.0 || (i > 0 && !(norms[i] > norms[i - 1]))) throw InputError("norms must be nonnegative and strictly increasing");
  }
  const auto samples = static_cast<std::size_t>(s.integer("samples", 1, kMaxSamples));
  ProbeOptions opt;
  opt.growth_factor = s.real("growth_factor", 1.0, 1e6);
  opt.incompatible_cap = static_cast<std::size_t>(s.integer("incompatible_cap", 1, kMaxSamples));
  opt.packing.order = scan_order(s);
  opt.packing.threads = c.threads;
  const PackingReport r = compatibility_probe(spec, dir, radius, norms, samples, s.seed(), opt);
  if (!csv_path.empty()) {
    std::string csv = "norm,m_hat\n";
    for (const auto& g : r.growth_curve) csv += Json(g.norm).dump() + "," + std::to_string(g.m_hat) + "\n";
    write_text(csv_path, csv);
  }
  return to_json(r);
}

Json run_estimate(Settings& s, const Common& c) {
  const GroupSpec spec = load_group(s);
  if (s.at("point").is_null()) throw InputError("point is required");
  const Vec y = vec_from_json(s.at("point"), "point");
  require_dims(spec.dimension, static_cast<int>(y.size()), "point");
  const double radius = s.real("radius", 0.0, 1e12, true);
  const auto samples = static_cast<std::size_t>(s.integer("samples", 1, kMaxSamples));
  PackingOptions opt;
  opt.order = scan_order(s);
  opt.threads = c.threads;
  return to_json(estimate_m(spec, MetricPoint::euclidean(y), radius, samples, s.seed(), opt));
}

Json run_triviality(Settings& s, const Common& c) {
  const GroupSpec spec = load_group(s);
  Json& tau_cfg = s.json()["tau"];
  EuclideanIsometry tau = EuclideanIsometry::identity(spec.dimension);
  if (!tau_cfg.is_null()) {
    tau = isometry_from_json(tau_cfg.is_string() ? read_json_file(tau_cfg.get<std::string>()) : tau_cfg);
    tau_cfg = to_json(tau);
  } else if (spec.twist) {
    tau = spec.twist->tau;
    tau_cfg = to_json(tau);
  } else {
    throw InputError("tau is required (--tau, config key 'tau', or a twist in the group spec)");
  }
  TrivialityOptions opt;
  const Json& pts = s.at("points");
  if (!pts.is_array()) throw InputError("points must be an array of vectors");
  for (const auto& p : pts) {
    opt.explicit_points.push_back(vec_from_json(p, "points"));
    require_dims(spec.dimension, static_cast<int>(opt.explicit_points.back().size()), "points");
  }
  opt.test_points = static_cast<std::size_t>(s.integer("test_points", 0, 100000));
  if (opt.explicit_points.empty() && opt.test_points == 0) throw InputError("no points to test");
  opt.samples = static_cast<std::size_t>(s.integer("samples", 1, kMaxSamples));
  opt.seed = s.seed();
  opt.coincidence_tolerance = s.real("coincidence_tolerance", 0.0, 1e6, true);
  opt.gap_threshold = s.real("gap_threshold", 0.0, 1e6, true);
  if (opt.gap_threshold < opt.coincidence_tolerance) throw InputError("gap_threshold must be >= coincidence_tolerance");
  if (s.at("claimed_nontrivial").is_null()) {
    opt.claimed_nontrivial = spec.twist && spec.twist->claimed_nontrivial;
    s.json()["claimed_nontrivial"] = opt.claimed_nontrivial;
  } else {
    opt.claimed_nontrivial = s.boolean("claimed_nontrivial");
  }
  opt.threads = c.threads;
  return to_json(orbit_coincidence(spec.base(), tau, opt));
}

Json run_twist(Settings& s) {
  const GroupSpec spec = load_group(s);
  if (!spec.twist) throw InputError("group spec has no twist");
  const auto samples = static_cast<std::size_t>(s.integer("samples", 1, kMaxSamples));
  return to_json(verify_twist(spec, s.seed(), samples));
}

Json run_fixed_space(Settings& s) {
  const GroupSpec spec = load_group(s);
  const auto samples = static_cast<std::size_t>(s.integer("samples", 0, 100000));
  return to_json(fixed_subspace(spec, s.seed(), samples, s.real("cutoff", 0.0, 1.0, true)));
}

// ---- curved ----------------------------------------------------------------

Json run_rauch(Settings& s, const Common& c) {
  const int n = static_cast<int>(s.integer("n", 1, 64));
  const auto pairs = static_cast<std::size_t>(s.integer("pairs", 1, kMaxSamples));
  const double max_norm = s.real("max_norm", 0.0, 20.0);
  const double tol = s.real("tolerance", 0.0, 1.0);
  return to_json(rauch_sweep(n, pairs, s.seed(), max_norm, tol, c.threads));
}

Json run_spd_fixed(Settings& s) {
  const int n = static_cast<int>(s.integer("n", 2, 16));
  const auto samples = static_cast<std::size_t>(s.integer("samples", 1, 10000));
  return to_json(commutant_fixed_dim(n, samples, s.seed(), s.boolean("trace_free"), s.real("cutoff", 0.0, 1.0, true)));
}

Json run_spd_twist(Settings& s) {
  const int n = static_cast<int>(s.integer("n", 1, 32));
  const auto samples = static_cast<std::size_t>(s.integer("samples", 1, 100000));
  return to_json(sl_twist_check(n, samples, s.seed()));
}

Json run_boost(Settings& s) {
  const double step = s.real("step", 0.0, 700.0, true);
  const auto count = static_cast<std::size_t>(s.integer("count", 1, 100000));
  const int n = static_cast<int>(s.integer("n", 1, 64));
  return to_json(boost_orbit_demo(step, count, n));
}

// ---- solve -----------------------------------------------------------------

std::string field_csv(const pde::ReducedFunction& u) {
  const ReducedDomain& d = u.domain();
  const Vec full = u.expand();
  std::string out;
  switch (d.reduction()) {
    case pde::Reduction::BlockRadial4: out = "r1,r2,value\n"; break;
    case pde::Reduction::Cylinder3: out = "r,z,value\n"; break;
    case pde::Reduction::Radial: out = "r,value\n"; break;
  }
  for (int i = 0; i < d.size0(); ++i) {
    for (int j = 0; j < d.size1(); ++j) {
      out += Json(d.coord0(i)).dump() + ",";
      if (d.axes() == 2) out += Json(d.coord1(j)).dump() + ",";
      out += Json(full(static_cast<Eigen::Index>(d.index(i, j)))).dump() + "\n";
    }
  }
  return out;
}

pde::SolveOptions solve_options(const Settings& s) {
  pde::SolveOptions o;
  o.tol = s.real("tol", 0.0, 1.0, true);
  o.max_iter = static_cast<int>(s.integer("max_iter", 0, 100'000'000));
  o.seed = s.seed();
  return o;
}

Json run_scalar_field(Settings& s, const std::string& field_path) {
  const std::string reduction = s.choice("reduction", {"block_radial4", "cylinder3"});
  const std::string symmetry = s.choice("symmetry", {"none", "antisymmetric_swap"});
  const int cells = static_cast<int>(s.integer("cells", 2, 4096));
  const double radius = s.real("radius", 0.0, 1e6, true);
  pde::ProblemSpec p;
  p.b0 = s.real("b0", 0.0, 1e6, true);
  if (s.at("q").is_null()) s.json()["q"] = reduction == "block_radial4" ? 2.5 : 3.0;
  p.q = s.real("q", 1.0, 1e6, true);
  const SymmetryClass cls = symmetry == "none" ? SymmetryClass::None : SymmetryClass::AntisymmetricSwap;
  const ReducedDomain domain = reduction == "block_radial4"
                                   ? ReducedDomain::block_radial4(cells, radius)
                                   : ReducedDomain::cylinder3(cells, radius, s.real("period", 0.0, 1e6, true));
  p.validate(domain.ambient_dim());
  const pde::SolveOptions opt = solve_options(s);
  pde::SolveResult res = pde::nehari_ground_state(domain, cls, p, opt);
  if (s.boolean("compare_radial")) {
    if (reduction == "block_radial4") {
      const pde::SolveResult base = pde::radial_baseline(p, 4, radius, cells, opt);
      res.report.comparison_energy = base.report.energy;
      res.report.notes.push_back("comparison: radial ground state in R^4, same truncation and cell count, status " +
                                 pde::to_string(base.report.status));
    } else {
      res.report.notes.push_back("comparison: none for the cylinder quotient (per-period energy)");
    }
  }
  if (reduction == "cylinder3") {
    res.report.notes.push_back("x3-periodic problem solved on the quotient cylinder; energy is per period");
  }
  if (!field_path.empty()) write_text(field_path, field_csv(res.solution));
  return to_json(res.report);
}

Json run_radial(Settings& s, const std::string& field_path) {
  const int n = static_cast<int>(s.integer("n", 3, 4));
  pde::ProblemSpec p;
  p.b0 = s.real("b0", 0.0, 1e6, true);
  p.q = s.real("q", 1.0, 1e6, true);
  p.validate(n);
  const pde::SolveResult res = pde::radial_baseline(p, n, s.real("radius", 0.0, 1e6, true),
                                                    static_cast<int>(s.integer("cells", 2, 1 << 20)), solve_options(s));
  if (!field_path.empty()) write_text(field_path, field_csv(res.solution));
  return to_json(res.report);
}

Json run_counterexample(Settings& s) {
  pde::CounterexampleOptions o;
  o.p = s.real("p", 2.0, 6.0, true);
  if (o.p >= 6.0) throw InputError("p must be < 6");
  o.shifts.clear();
  const Json& shifts = s.at("shifts");
  if (!shifts.is_array() || shifts.empty()) throw InputError("shifts must be a nonempty array of integers");
  for (const auto& v : shifts) {
    if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 10000) {
      throw InputError("shifts must be integers in [1, 10000]");
    }
    o.shifts.push_back(v.get<int>());
  }
  o.cells_per_unit = static_cast<int>(s.integer("cells_per_unit", 2, 1024));
  if (!s.at("z_extent").is_null()) o.z_extent = static_cast<int>(s.integer("z_extent", 1, 20000));
  return to_json(pde::counterexample_sequence(o));
}

struct Command {
  CLI::App* app = nullptr;
  std::string kind;
  Json defaults;
  std::function<void(Settings&)> apply_flags;
  std::function<Json(Settings&)> run;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isometric group actions: packing compatibility, twists, curved models, reduced PDE", "isocompat"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config_path, "JSON config file (keys as in the report's config echo)");
    sub->add_option("--out", common.out_path, "Report path (default: stdout)");
    sub->add_option("--seed", common.seed, "Seed");
    sub->add_flag("--no-timestamp", common.no_timestamp, "Omit generated_at from the report");
    sub->add_option("--threads", common.threads, "Worker threads (results do not depend on it)")->check(CLI::Range(1u, 256u));
  };

  std::vector<Command> commands;
  Command* selected = nullptr;
  auto register_command = [&](CLI::App* sub, std::string kind, Json defaults) -> Command& {
    add_common(sub);
    sub->callback([&commands, sub, &selected] {
      for (auto& c : commands) {
        if (c.app == sub) selected = &c;
      }
    });
    commands.push_back(Command{sub, std::move(kind), std::move(defaults), {}, {}});
    return commands.back();
  };
  commands.reserve(16);

  // compat
  CLI::App* compat = app.add_subcommand("compat", "Packing estimates, compatibility probes, twists, orbit coincidence");
  compat->require_subcommand(1);

  std::optional<std::string> group_path, tau_path, direction, point_text, csv_path, field_path;
  std::optional<double> radius, step, tol, p_exp, max_norm;
  std::optional<long long> samples, n_opt, pairs, count, cells, test_points, max_iter, cells_per_unit;
  std::vector<double> norms;
  std::vector<std::string> points;
  std::vector<int> shifts;
  bool with_trace = false;

  {
    CLI::App* sub = compat->add_subcommand("probe", "m_hat growth along a ray and a compatibility verdict");
    sub->add_option("--group", group_path, "Group spec JSON");
    sub->add_option("--direction", direction, "Ray direction, comma separated (normalized)");
    sub->add_option("--radius", radius, "Ball radius r");
    sub->add_option("--norms", norms, "Base point norms, comma separated")->delimiter(',');
    sub->add_option("--samples", samples, "Orbit samples per base point");
    sub->add_option("--csv", csv_path, "Growth curve CSV (norm,m_hat)");
    Command& c = register_command(sub, "compat.probe",
                                  {{"group", nullptr}, {"direction", nullptr}, {"radius", 1.0}, {"norms", {10.0, 20.0, 40.0}},
                                   {"samples", 20000}, {"seed", 0}, {"growth_factor", 2.0}, {"incompatible_cap", 2},
                                   {"scan_order", "anchor_distance"}});
    c.apply_flags = [&](Settings& s) {
      s.flag("group", group_path);
      if (direction) s.json()["direction"] = to_json(parse_vector(*direction, "--direction"));
      s.flag("radius", radius);
      if (!norms.empty()) s.json()["norms"] = norms;
      s.flag("samples", samples);
    };
    c.run = [&](Settings& s) { return run_probe(s, common, csv_path.value_or("")); };
  }
  {
    CLI::App* sub = compat->add_subcommand("estimate", "m_hat at one base point");
    sub->add_option("--group", group_path, "Group spec JSON");
    sub->add_option("--point", point_text, "Base point, comma separated");
    sub->add_option("--radius", radius, "Ball radius r");
    sub->add_option("--samples", samples, "Orbit samples");
    Command& c = register_command(sub, "compat.estimate",
                                  {{"group", nullptr}, {"point", nullptr}, {"radius", 1.0}, {"samples", 20000}, {"seed", 0},
                                   {"scan_order", "anchor_distance"}});
    c.apply_flags = [&](Settings& s) {
      s.flag("group", group_path);
      if (point_text) s.json()["point"] = to_json(parse_vector(*point_text, "--point"));
      s.flag("radius", radius);
      s.flag("samples", samples);
    };
    c.run = [&](Settings& s) { return run_estimate(s, common); };
  }
  {
    CLI::App* sub = compat->add_subcommand("triviality", "Orbit-coincidence test tau x in H(x)");
    sub->add_option("--group", group_path, "Group spec JSON (its twist supplies tau if --tau is absent)");
    sub->add_option("--tau", tau_path, "Isometry JSON for tau");
    sub->add_option("--point", points, "Explicit test point, comma separated (repeatable)");
    sub->add_option("--test-points", test_points, "Seeded random test points");
    sub->add_option("--samples", samples, "Haar samples per point");
    Command& c = register_command(sub, "compat.triviality",
                                  {{"group", nullptr}, {"tau", nullptr}, {"points", Json::array()}, {"test_points", 5},
                                   {"samples", 5000}, {"seed", 0}, {"coincidence_tolerance", 1e-6},
                                   {"gap_threshold", 1e-2}, {"claimed_nontrivial", nullptr}});
    c.apply_flags = [&](Settings& s) {
      s.flag("group", group_path);
      s.flag("tau", tau_path);
      if (!points.empty()) {
        Json arr = Json::array();
        for (const auto& p : points) arr.push_back(to_json(parse_vector(p, "--point")));
        s.json()["points"] = arr;
      }
      s.flag("test_points", test_points);
      s.flag("samples", samples);
    };
    c.run = [&](Settings& s) { return run_triviality(s, common); };
  }
  {
    CLI::App* sub = compat->add_subcommand("twist", "Verify an index-2 twist (involution, outside, normalizes, character)");
    sub->add_option("--group", group_path, "Group spec JSON with a twist");
    sub->add_option("--samples", samples, "Seeded samples");
    Command& c = register_command(sub, "compat.twist", {{"group", nullptr}, {"samples", 100}, {"seed", 0}});
    c.apply_flags = [&](Settings& s) {
      s.flag("group", group_path);
      s.flag("samples", samples);
    };
    c.run = [&](Settings& s) { return run_twist(s); };
  }
  {
    CLI::App* sub = compat->add_subcommand("fixed-space", "Common fixed subspace of the linear action");
    sub->add_option("--group", group_path, "Group spec JSON");
    sub->add_option("--samples", samples, "Haar samples added to the generators");
    Command& c = register_command(sub, "compat.fixed_space", {{"group", nullptr}, {"samples", 50}, {"seed", 0}, {"cutoff", 1e-9}});
    c.apply_flags = [&](Settings& s) {
      s.flag("group", group_path);
      s.flag("samples", samples);
    };
    c.run = [&](Settings& s) { return run_fixed_space(s); };
  }

  // curved
  CLI::App* curved = app.add_subcommand("curved", "Hyperboloid and SPD models");
  curved->require_subcommand(1);
  {
    CLI::App* sub = curved->add_subcommand("rauch-sweep", "|v - w| <= d(exp v, exp w) on random tangent pairs");
    sub->add_option("--n", n_opt, "Dimension of H^n");
    sub->add_option("--pairs", pairs, "Number of pairs");
    sub->add_option("--max-norm", max_norm, "Upper bound on |v|, |w|");
    Command& c = register_command(sub, "curved.rauch_sweep",
                                  {{"n", 2}, {"pairs", 10000}, {"seed", 0}, {"max_norm", 5.0}, {"tolerance", 1e-9}});
    c.apply_flags = [&](Settings& s) {
      s.flag("n", n_opt);
      s.flag("pairs", pairs);
      s.flag("max_norm", max_norm);
    };
    c.run = [&](Settings& s) { return run_rauch(s, common); };
  }
  CLI::App* spd = curved->add_subcommand("spd", "SL(2n,R)/SO(2n) checks against the SU(n) image");
  spd->require_subcommand(1);
  {
    CLI::App* sub = spd->add_subcommand("fixed-dim", "Dimension of the SU(n)-fixed symmetric (traceless) matrices");
    sub->add_option("--n", n_opt, "n (matrices are 2n x 2n)");
    sub->add_option("--samples", samples, "Haar samples");
    sub->add_flag("--with-trace", with_trace, "Drop the trace-zero constraint");
    Command& c = register_command(sub, "curved.spd.fixed_dim",
                                  {{"n", 2}, {"samples", 10}, {"seed", 0}, {"trace_free", true}, {"cutoff", 1e-8}});
    c.apply_flags = [&](Settings& s) {
      s.flag("n", n_opt);
      s.flag("samples", samples);
      if (with_trace) s.json()["trace_free"] = false;
    };
    c.run = [&](Settings& s) { return run_spd_fixed(s); };
  }
  {
    CLI::App* sub = spd->add_subcommand("twist-check", "tau = diag(I, -I) against the SU(n) image");
    sub->add_option("--n", n_opt, "n");
    sub->add_option("--samples", samples, "Haar samples");
    Command& c = register_command(sub, "curved.spd.twist_check", {{"n", 2}, {"samples", 50}, {"seed", 0}});
    c.apply_flags = [&](Settings& s) {
      s.flag("n", n_opt);
      s.flag("samples", samples);
    };
    c.run = [&](Settings& s) { return run_spd_twist(s); };
  }
  {
    CLI::App* sub = curved->add_subcommand("boost-demo", "Packing of a boost-lattice orbit in H^n");
    sub->add_option("--step", step, "Boost rapidity t");
    sub->add_option("--count", count, "Orbit points");
    sub->add_option("--n", n_opt, "Dimension of H^n");
    Command& c = register_command(sub, "curved.boost_demo", {{"step", 1.0}, {"count", 50}, {"n", 2}});
    c.apply_flags = [&](Settings& s) {
      s.flag("step", step);
      s.flag("count", count);
      s.flag("n", n_opt);
    };
    c.run = [&](Settings& s) { return run_boost(s); };
  }

  // solve
  CLI::App* solve = app.add_subcommand("solve", "Ground states of -Lap u + b0 u = |u|^(q-1) u in reduced coordinates");
  solve->require_subcommand(1);
  {
    CLI::App* sub = solve->add_subcommand("scalar-field", "Nehari ground state in a symmetry class");
    sub->add_option("--cells", cells, "Cells per axis");
    sub->add_option("--radius", radius, "Truncation radius R");
    sub->add_option("--tol", tol, "Residual tolerance");
    sub->add_option("--max-iter", max_iter, "Iteration cap");
    sub->add_option("--field", field_path, "Solution CSV");
    Command& c = register_command(sub, "solve.scalar_field",
                                  {{"reduction", "block_radial4"}, {"symmetry", "antisymmetric_swap"}, {"b0", 1.0},
                                   {"q", nullptr}, {"radius", 12.0}, {"period", 1.0}, {"cells", 96}, {"tol", 1e-6},
                                   {"max_iter", 50000}, {"seed", 0}, {"compare_radial", true}});
    c.apply_flags = [&](Settings& s) {
      s.flag("cells", cells);
      s.flag("radius", radius);
      s.flag("tol", tol);
      s.flag("max_iter", max_iter);
    };
    c.run = [&](Settings& s) { return run_scalar_field(s, field_path.value_or("")); };
  }
  {
    CLI::App* sub = solve->add_subcommand("radial", "Radial ground state in R^n");
    sub->add_option("--n", n_opt, "Ambient dimension (3 or 4)");
    sub->add_option("--cells", cells, "Cells");
    sub->add_option("--radius", radius, "Truncation radius R");
    sub->add_option("--tol", tol, "Residual tolerance");
    sub->add_option("--max-iter", max_iter, "Iteration cap");
    sub->add_option("--field", field_path, "Solution CSV");
    Command& c = register_command(sub, "solve.radial",
                                  {{"n", 4}, {"b0", 1.0}, {"q", 2.5}, {"radius", 12.0}, {"cells", 96}, {"tol", 1e-6},
                                   {"max_iter", 50000}, {"seed", 0}});
    c.apply_flags = [&](Settings& s) {
      s.flag("n", n_opt);
      s.flag("cells", cells);
      s.flag("radius", radius);
      s.flag("tol", tol);
      s.flag("max_iter", max_iter);
    };
    c.run = [&](Settings& s) { return run_radial(s, field_path.value_or("")); };
  }

  {
    CLI::App* sub = app.add_subcommand("counterexample", "Odd translates in x3: constant L^p mass, vanishing H^1 pairing");
    sub->add_option("--p", p_exp, "Exponent in (2, 6)");
    sub->add_option("--shifts", shifts, "Shifts, comma separated")->delimiter(',');
    sub->add_option("--cells-per-unit", cells_per_unit, "Grid cells per unit length");
    Command& c = register_command(sub, "counterexample",
                                  {{"p", 4.0}, {"shifts", {1, 2, 3, 4, 5, 6, 7, 8}}, {"cells_per_unit", 32}, {"z_extent", nullptr}});
    c.apply_flags = [&](Settings& s) {
      s.flag("p", p_exp);
      if (!shifts.empty()) s.json()["shifts"] = shifts;
      s.flag("cells_per_unit", cells_per_unit);
    };
    c.run = [&](Settings& s) { return run_counterexample(s); };
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << (selected ? selected->app->help() : app.help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInput;
  }
  if (!selected) {
    err << "error: no analysis selected\n\n" << app.help();
    return kExitInput;
  }

  try {
    Settings settings(selected->defaults);
    settings.merge_file(common.config_path);
    selected->apply_flags(settings);
    if (common.seed) settings.json()["seed"] = *common.seed;
    const Json result = selected->run(settings);
    const Json report = make_report(selected->kind, settings.json(), result, !common.no_timestamp);
    if (common.out_path.empty()) {
      out << report.dump(2) << '\n';
    } else {
      write_json_file(common.out_path, report);
    }
    return kExitOk;
  } catch (const InvariantError& e) {
    err << "invariant error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::runtime_error& e) {
    err << "io error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace isocompat::cli
