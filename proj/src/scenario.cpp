#include "susyprop/scenario.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "susyprop/checks.hpp"
#include "susyprop/detail/parallel.hpp"
#include "susyprop/oracle.hpp"

namespace susyprop {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

KernelMethod parse_method(const std::string& name) {
  if (name == "theorem") return KernelMethod::TheoremQuad;
  if (name == "closed") return KernelMethod::ClosedForm;
  if (name == "spectral") return KernelMethod::SpectralSum;
  if (name == "cn") return KernelMethod::OracleCN;
  throw ConfigError("unknown method '" + name + "' (expected theorem/closed/spectral/cn)");
}

std::vector<double> parse_axis(const json& j, const std::string& field) {
  if (j.is_array()) return j.get<std::vector<double>>();
  if (j.is_object() && j.contains("min") && j.contains("max") && j.contains("n")) {
    const double lo = j.at("min").get<double>();
    const double hi = j.at("max").get<double>();
    const int n = j.at("n").get<int>();
    if (n < 1 || (n > 1 && !(lo < hi)))
      throw ConfigError("lattice." + field + ": need min < max and n >= 1");
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    return v;
  }
  throw ConfigError("lattice." + field + " must be an array or {min,max,n}");
}

void validate(const ScenarioConfig& cfg) {
  if (cfg.example != "oscillator" && cfg.example != "soliton")
    throw ConfigError("example must be 'oscillator' or 'soliton'");
  if (cfg.example == "oscillator" && cfg.C.imag() == 0.0)
    throw ConfigError("parameters: Im C must be nonzero");
  if (cfg.example == "soliton") {
    if (!(cfg.a > 0.0)) throw ConfigError("parameters: a must be > 0");
    if (cfg.b == 0.0 || std::abs(std::abs(cfg.b) - cfg.a) < 1e-12)
      throw ConfigError("parameters: b must be nonzero with |b| != a");
    for (KernelMethod m : cfg.methods)
      if (m == KernelMethod::SpectralSum)
        throw ConfigError("the spectral method needs a discrete base spectrum "
                          "(oscillator example only)");
  }
  if (cfg.grid_n < 3 || !(cfg.grid_x_min < cfg.grid_x_max))
    throw ConfigError("grid: need x_min < x_max and n >= 3");
  if (cfg.evo_n < 3 || !(cfg.evo_x_min < cfg.evo_x_max))
    throw ConfigError("evolution: need x_min < x_max and n >= 3");
  if (!(cfg.evo_dt > 0.0) || !(cfg.evo_t > 0.0))
    throw ConfigError("evolution: dt and t must be positive");
  if (cfg.spectral_terms < 1) throw ConfigError("spectral_terms must be >= 1");
  if (cfg.packet.kind != "gaussian" && cfg.packet.kind != "bound_state")
    throw ConfigError("packet.kind must be 'gaussian' or 'bound_state'");
  if (cfg.packet.kind == "gaussian") {
    const double h = (cfg.evo_x_max - cfg.evo_x_min) / (cfg.evo_n - 1);
    if (cfg.packet.width < 4.0 * h)
      throw ConfigError("packet.width below 4 grid spacings cannot be resolved");
  }
}

}  // namespace

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError("config parse error in '" + path + "': " + e.what());
  }

  ScenarioConfig cfg;
  try {
    if (j.contains("example")) cfg.example = j.at("example").get<std::string>();
    if (j.contains("parameters")) {
      const json& p = j.at("parameters");
      if (p.contains("C_re") || p.contains("C_im"))
        cfg.C = Complex(p.value("C_re", 0.0), p.value("C_im", 0.0));
      cfg.a = p.value("a", cfg.a);
      cfg.b = p.value("b", cfg.b);
    }
    if (j.contains("grid")) {
      const json& g = j.at("grid");
      cfg.grid_x_min = g.value("x_min", cfg.grid_x_min);
      cfg.grid_x_max = g.value("x_max", cfg.grid_x_max);
      cfg.grid_n = g.value("n", cfg.grid_n);
    }
    if (j.contains("lattice")) {
      const json& l = j.at("lattice");
      if (l.contains("x")) cfg.xs = parse_axis(l.at("x"), "x");
      if (l.contains("y")) cfg.ys = parse_axis(l.at("y"), "y");
      if (l.contains("t")) cfg.ts = parse_axis(l.at("t"), "t");
    }
    if (j.contains("methods")) {
      cfg.methods.clear();
      for (const auto& m : j.at("methods"))
        cfg.methods.push_back(parse_method(m.get<std::string>()));
    }
    cfg.spectral_terms = j.value("spectral_terms", cfg.spectral_terms);
    if (j.contains("quadrature")) {
      const json& q = j.at("quadrature");
      cfg.quad.truncation_radius = q.value("truncation_radius", cfg.quad.truncation_radius);
      cfg.quad.abs_tol = q.value("abs_tol", cfg.quad.abs_tol);
      cfg.quad.rel_tol = q.value("rel_tol", cfg.quad.rel_tol);
      cfg.quad.max_subdivisions = q.value("max_subdivisions", cfg.quad.max_subdivisions);
    }
    if (j.contains("evolution")) {
      const json& e = j.at("evolution");
      cfg.evo_x_min = e.value("x_min", cfg.evo_x_min);
      cfg.evo_x_max = e.value("x_max", cfg.evo_x_max);
      cfg.evo_n = e.value("n", cfg.evo_n);
      cfg.evo_dt = e.value("dt", cfg.evo_dt);
      cfg.evo_t = e.value("t", cfg.evo_t);
      cfg.boundary_cap = e.value("boundary_cap", cfg.boundary_cap);
      if (e.contains("packet")) {
        const json& p = e.at("packet");
        cfg.packet.kind = p.value("kind", cfg.packet.kind);
        cfg.packet.center = p.value("center", cfg.packet.center);
        cfg.packet.width = p.value("width", cfg.packet.width);
        cfg.packet.momentum = p.value("momentum", cfg.packet.momentum);
      }
    }
    if (j.contains("verify")) {
      const json& v = j.at("verify");
      cfg.verify_filter = v.value("filter", cfg.verify_filter);
      if (v.contains("tolerance_overrides"))
        for (const auto& [key, val] : v.at("tolerance_overrides").items())
          cfg.tolerance_overrides[key] = val.get<double>();
    }
    cfg.threads = j.value("threads", cfg.threads);
    cfg.seed = j.value("seed", cfg.seed);
  } catch (const json::exception& e) {
    throw ConfigError("config field error in '" + path + "': " + e.what());
  }

  char digest[20];
  std::snprintf(digest, sizeof digest, "%016llx",
                static_cast<unsigned long long>(fnv1a(text)));
  cfg.config_digest = digest;
  validate(cfg);
  return cfg;
}

PartnerModel partner_from(const ScenarioConfig& cfg) {
  validate(cfg);
  return cfg.example == "oscillator" ? make_oscillator_partner(cfg.C)
                                     : make_soliton_partner(cfg.a, cfg.b);
}

std::string potential_csv(const ScenarioConfig& cfg) {
  const PartnerModel pm = partner_from(cfg);
  const Grid1D grid(cfg.grid_x_min, cfg.grid_x_max, cfg.grid_n);
  std::string out = "x,re_v,im_v\n";
  for (int j = 0; j < grid.size(); ++j) {
    const Complex v = pm.potential(grid.point(j));
    out += fmt(grid.point(j)) + "," + fmt(v.real()) + "," + fmt(v.imag()) + "\n";
  }
  return out;
}

std::string propagator_csv(const ScenarioConfig& cfg) {
  const PartnerModel pm = partner_from(cfg);

  std::vector<double> xs = cfg.xs, ys = cfg.ys, ts = cfg.ts;
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  std::sort(ts.begin(), ts.end());
  std::vector<KernelMethod> methods = cfg.methods;
  std::sort(methods.begin(), methods.end(), [](KernelMethod l, KernelMethod r) {
    return std::string(kernel_method_name(l)) < kernel_method_name(r);
  });

  struct Row {
    double x, y, t;
    KernelMethod method;
    Complex k{0.0, 0.0};
    double err = 0.0;
    std::string flag = "ok";
  };
  std::vector<Row> rows;
  for (double x : xs)
    for (double y : ys)
      for (double t : ts)
        for (KernelMethod m : methods) rows.push_back({x, y, t, m});

  detail::parallel_for(static_cast<int>(rows.size()), cfg.threads, [&](int i) {
    Row& r = rows[i];
    try {
      KernelEval eval;
      switch (r.method) {
        case KernelMethod::TheoremQuad:
          eval = theorem_kernel(pm, r.x, r.y, r.t, cfg.quad);
          break;
        case KernelMethod::ClosedForm:
          eval = closed_kernel(pm, r.x, r.y, r.t, cfg.quad);
          break;
        case KernelMethod::SpectralSum:
          eval = spectral_kernel(pm, cfg.spectral_terms, r.x, r.y, r.t);
          break;
        case KernelMethod::OracleCN:
          throw Error("the cn method applies to `evolve`, not pointwise kernels");
      }
      r.k = eval.value;
      r.err = eval.err_estimate;
    } catch (const SingularTimeError&) {
      r.flag = "singular_time";
    } catch (const RangeError&) {
      r.flag = "range";
    } catch (const QuadratureError&) {
      r.flag = "quadrature";
    } catch (const NearZeroError&) {
      r.flag = "near_zero";
    } catch (const Error&) {
      r.flag = "error";
    }
  });

  std::string out = "x,y,t,method,re_k,im_k,err_est,flag\n";
  for (const Row& r : rows) {
    out += fmt(r.x) + "," + fmt(r.y) + "," + fmt(r.t) + "," +
           kernel_method_name(r.method) + "," + fmt(r.k.real()) + "," +
           fmt(r.k.imag()) + "," + fmt(r.err) + "," + r.flag + "\n";
  }
  return out;
}

EvolveOutput build_evolve(const ScenarioConfig& cfg) {
  const PartnerModel pm = partner_from(cfg);
  const Grid1D grid(cfg.evo_x_min, cfg.evo_x_max, cfg.evo_n);

  std::vector<Complex> phi0(grid.size());
  for (int j = 0; j < grid.size(); ++j) {
    const double x = grid.point(j);
    if (cfg.packet.kind == "bound_state") {
      phi0[j] = pm.bound(x);
    } else {
      const double xs = x - cfg.packet.center;
      phi0[j] = std::pow(M_PI * cfg.packet.width * cfg.packet.width, -0.25) *
                std::exp(Complex(-0.5 * xs * xs / (cfg.packet.width * cfg.packet.width),
                                 cfg.packet.momentum * xs));
    }
  }

  std::vector<std::pair<std::string, std::vector<Complex>>> snapshots;
  for (KernelMethod m : cfg.methods) {
    if (m == KernelMethod::OracleCN) continue;  // appended below
    snapshots.emplace_back(kernel_method_name(m),
                           propagate_state(m, pm, grid, phi0, cfg.evo_t, cfg.quad,
                                           cfg.spectral_terms, cfg.threads));
  }
  {
    std::vector<Complex> v(grid.size());
    for (int j = 0; j < grid.size(); ++j) v[j] = pm.potential(grid.point(j));
    const EvolutionConfig ecfg =
        make_evolution_config(grid, cfg.evo_t, cfg.evo_dt, cfg.boundary_cap);
    snapshots.emplace_back(kernel_method_name(KernelMethod::OracleCN),
                           cn_evolve(v, phi0, ecfg));
  }
  std::sort(snapshots.begin(), snapshots.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });

  std::string csv = "t,x,re_phi,im_phi,method\n";
  for (const auto& [name, phi] : snapshots)
    for (int j = 0; j < grid.size(); ++j)
      csv += fmt(cfg.evo_t) + "," + fmt(grid.point(j)) + "," + fmt(phi[j].real()) +
             "," + fmt(phi[j].imag()) + "," + name + "\n";

  json summary;
  summary["t"] = cfg.evo_t;
  summary["grid"] = {{"x_min", cfg.evo_x_min}, {"x_max", cfg.evo_x_max}, {"n", cfg.evo_n}};
  summary["pairwise_l2_rel"] = json::array();
  for (std::size_t i = 0; i < snapshots.size(); ++i)
    for (std::size_t k = i + 1; k < snapshots.size(); ++k) {
      double num = 0.0, den = 0.0;
      for (int j = 0; j < grid.size(); ++j) {
        num += std::norm(snapshots[i].second[j] - snapshots[k].second[j]);
        den += std::max(std::norm(snapshots[i].second[j]), std::norm(snapshots[k].second[j]));
      }
      summary["pairwise_l2_rel"].push_back({{"a", snapshots[i].first},
                                            {"b", snapshots[k].first},
                                            {"value", std::sqrt(num / den)}});
    }
  return {csv, summary.dump(2) + "\n"};
}

std::string verify_report_json(const ScenarioConfig& cfg, const std::string& filter,
                               bool& all_pass) {
  CheckOptions opts;
  opts.threads = cfg.threads;
  opts.seed = cfg.seed;
  opts.tolerance_overrides = cfg.tolerance_overrides;
  const std::string effective = filter.empty() ? cfg.verify_filter : filter;
  const std::vector<CheckResult> results = run_checks(effective, opts);

  all_pass = true;
  json checks = json::array();
  for (const CheckResult& r : results) {
    all_pass = all_pass && r.pass;
    checks.push_back({{"name", r.name},
                      {"metric", r.metric},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass},
                      {"seconds", r.seconds}});
  }
  json report;
  report["version"] = kVersion;
  report["config_digest"] = cfg.config_digest;
  report["seed"] = cfg.seed;
  report["filter"] = effective;
  report["all_pass"] = all_pass;
  report["checks"] = checks;
  return report.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open output file '" + path + "'");
  out << contents;
  if (!out) throw Error("failed writing output file '" + path + "'");
}

int cmd_potential(const ScenarioConfig& cfg, const std::string& out_path) {
  const std::string csv = potential_csv(cfg);
  write_file(out_path, csv);
  return 0;
}

int cmd_propagator(const ScenarioConfig& cfg, const std::string& out_path) {
  const std::string csv = propagator_csv(cfg);
  write_file(out_path, csv);
  return 0;
}

int cmd_evolve(const ScenarioConfig& cfg, const std::string& out_path) {
  const EvolveOutput out = build_evolve(cfg);
  write_file(out_path, out.csv);
  write_file(out_path + ".summary.json", out.summary_json);
  std::fputs(out.summary_json.c_str(), stdout);
  return 0;
}

int cmd_verify(const ScenarioConfig& cfg, const std::string& filter,
               const std::string& out_path) {
  bool all_pass = false;
  const std::string report = verify_report_json(cfg, filter, all_pass);
  if (!out_path.empty()) write_file(out_path, report);
  std::fputs(report.c_str(), stdout);
  return all_pass ? 0 : 1;
}

}  // namespace susyprop
