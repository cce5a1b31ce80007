#include "qlm/commands.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <numbers>

#include "qlm/criteria.hpp"
#include "qlm/errors.hpp"
#include "qlm/horizons.hpp"
#include "qlm/imcf_hulls.hpp"
#include "qlm/numerics.hpp"
#include "qlm/quasimass.hpp"

#ifndef QLM_VERSION
#define QLM_VERSION "0.0.0"
#endif

namespace qlm {

const char* tool_version() { return QLM_VERSION; }

const char* to_string(Command c) {
  switch (c) {
    case Command::masses: return "masses";
    case Command::horizons: return "horizons";
    case Command::imcf: return "imcf";
    case Command::momega: return "momega";
    case Command::criteria: return "criteria";
    case Command::sweep: return "sweep";
  }
  return "unknown";
}

Command command_from_string(const std::string& name) {
  for (Command c : {Command::masses, Command::horizons, Command::imcf,
                    Command::momega, Command::criteria, Command::sweep})
    if (name == to_string(c)) return c;
  throw ValidationError("command: unknown command '" + name + "'");
}

namespace {

// Single-row table built column by column.
class Summary {
 public:
  explicit Summary(std::string name) { table_.name = std::move(name); table_.rows.emplace_back(); }
  Summary& add(std::string column, Cell value) {
    table_.columns.push_back(std::move(column));
    table_.rows.front().push_back(std::move(value));
    return *this;
  }
  Table take() { return std::move(table_); }

 private:
  Table table_;
};

double metric_mass(const RunConfig& cfg) { return cfg.metric.m; }

double required(const std::optional<Radius>& r, const RunConfig& cfg,
                const char* key) {
  if (!r) throw ValidationError(std::string(key) + ": required");
  return r->resolve(metric_mass(cfg));
}

AlphaParams alpha_params(const RunConfig& cfg) {
  AlphaParams p;
  p.C = cfg.alpha.C;
  p.iota = cfg.alpha.iota;
  p.curvature.base_grid = cfg.numeric.curvature_grid;
  p.curvature.convention = cfg.numeric.k_convention;
  p.distance_tol = cfg.numeric.quadrature_tol;
  return p;
}

MOmegaOptions momega_options(const RunConfig& cfg) {
  MOmegaOptions o;
  o.pairs = cfg.momega.pairs;
  o.r_lo_factor = cfg.momega.r_lo_factor;
  o.refine_pairs = cfg.momega.refine_pairs;
  o.hull.grid = cfg.numeric.hull_grid;
  return o;
}

const char* convention_name(CurvatureConvention c) {
  return c == CurvatureConvention::bound ? "bound" : "sqrt_bound";
}

void add_provenance(Summary& s, const MOmegaResult& r, const RunConfig& cfg) {
  s.add("C", r.C)
      .add("iota", r.iota ? *r.iota : std::nan(""))
      .add("iota_mode", std::string(r.iota ? "fixed" : "auto"))
      .add("k_convention", std::string(convention_name(r.convention)))
      .add("pairs", static_cast<long long>(r.options.pairs))
      .add("r_lo_factor", r.options.r_lo_factor)
      .add("refine_pairs", static_cast<long long>(r.options.refine_pairs))
      .add("hull_grid", static_cast<long long>(r.options.hull.grid))
      .add("curvature_grid", static_cast<long long>(cfg.numeric.curvature_grid))
      .add("hull_check", std::string("radial"));
}

Document run_masses(const RunConfig& cfg, const RadialMetric& metric) {
  std::vector<double> radii;
  const double m = metric_mass(cfg);
  if (cfg.masses.range) {
    const auto& rg = *cfg.masses.range;
    const double lo = rg.lo.resolve(m), hi = rg.hi.resolve(m);
    radii = rg.log_spacing ? numerics::log_grid(lo, hi, rg.n)
                           : numerics::linear_grid(lo, hi, rg.n);
  } else {
    for (const auto& r : cfg.masses.radii) radii.push_back(r.resolve(m));
  }
  if (radii.empty()) throw ValidationError("masses: radii or range required");
  Table t{"masses", {"r", "u", "H", "area", "areal_radius", "m_H", "m_BY"}, {}};
  for (double r : radii) {
    if (!metric.contains(r))
      throw OutOfDomain("masses: r = " + std::to_string(r) + " outside the domain");
    const auto g = sphere_geometry(metric, r);
    t.rows.push_back({r, metric.eval(r).u, g.mean_curvature, g.area, g.areal_radius,
                      hawking_mass(metric, r), brown_york_radial(metric, r)});
  }
  return {Command::masses, {std::move(t)}};
}

Document run_horizons(const RunConfig& cfg, const RadialMetric& metric) {
  HorizonSearchOptions opt;
  opt.grid = cfg.numeric.horizon_grid;
  opt.root_rel_tol = cfg.numeric.root_tol;
  auto [lo, hi] = metric.search_interval();
  if (cfg.horizons.r_lo) lo = cfg.horizons.r_lo->resolve(metric_mass(cfg));
  if (cfg.horizons.r_hi) hi = cfg.horizons.r_hi->resolve(metric_mass(cfg));
  const auto search = find_horizons(metric, lo, hi, opt);

  Summary s("summary");
  s.add("r_lo", search.r_lo)
      .add("r_hi", search.r_hi)
      .add("count", static_cast<long long>(search.horizons.size()))
      .add("grazing", static_cast<long long>(search.grazing.size()))
      .add("min_H", search.min_mean_curvature);
  double outer_r = std::nan(""), deficit = std::nan(""), adm = std::nan("");
  if (!search.horizons.empty()) {
    outer_r = search.horizons.back().r;
    const auto rep = penrose_report(metric);
    deficit = rep.deficit;
    adm = rep.adm_mass;
  }
  s.add("outermost_r", outer_r).add("adm_mass", adm).add("penrose_deficit", deficit);

  Table t{"horizons",
          {"r", "areal_radius", "area", "kind", "outermost", "outer_minimizing"},
          {}};
  for (const auto& h : search.horizons)
    t.rows.push_back({h.r, h.areal_radius, h.area, std::string(to_string(h.kind)),
                      h.outermost, h.outer_minimizing});
  return {Command::horizons, {s.take(), std::move(t)}};
}

Document run_imcf(const RunConfig& cfg, const RadialMetric& metric) {
  const double a = required(cfg.imcf.r_start, cfg, "imcf.r_start");
  const double b = required(cfg.imcf.r_end, cfg, "imcf.r_end");
  const auto trace = imcf_trace(metric, a, b, cfg.imcf.samples);
  const double slope = geroch_report(trace);
  const auto& first = trace.samples.front();
  double worst = 0.0;
  Table t{"trace", {"t", "r", "areal_radius", "area", "m_H", "area_law_residual"}, {}};
  for (const auto& x : trace.samples) {
    const double residual = x.area / (first.area * std::exp(x.t)) - 1.0;
    worst = std::max(worst, std::abs(residual));
    t.rows.push_back({x.t, x.r, x.areal_radius, x.area, x.hawking, residual});
  }
  Summary s("summary");
  s.add("r_start", a)
      .add("r_end", b)
      .add("samples", static_cast<long long>(trace.samples.size()))
      .add("t_end", trace.samples.back().t)
      .add("geroch_min_slope", slope)
      .add("max_area_law_residual", worst);
  return {Command::imcf, {s.take(), std::move(t)}};
}

Document run_momega(const RunConfig& cfg, const RadialMetric& metric) {
  const double r_out = required(cfg.momega.r_out, cfg, "momega.r_out");
  const auto res = m_omega(metric, r_out, alpha_params(cfg), momega_options(cfg));
  Summary s("summary");
  s.add("r_out", r_out)
      .add("m_omega", res.value)
      .add("r1", res.best.r1)
      .add("r2", res.best.r2)
      .add("alpha", res.best.alpha)
      .add("m_region", res.best.region_mass)
      .add("s", res.best_s)
      .add("pairs_evaluated", static_cast<long long>(res.pairs_evaluated));
  add_provenance(s, res, cfg);
  Document doc{Command::momega, {s.take()}};
  if (cfg.momega.table) {
    Table t{"pairs", {"r1", "r2", "alpha", "m_region", "product"}, {}};
    for (const auto& p : res.table)
      t.rows.push_back({p.r1, p.r2, p.alpha, p.region_mass, p.product});
    doc.tables.push_back(std::move(t));
  }
  return doc;
}

Document run_criteria(const RunConfig& cfg, const RadialMetric& metric) {
  const double r_out = required(cfg.criteria.r_out, cfg, "criteria.r_out");
  CriteriaOptions opt;
  opt.momega = momega_options(cfg);
  opt.require_mean_convex = cfg.criteria.require_mean_convex;
  const auto rep = evaluate_criteria(metric, r_out, alpha_params(cfg), opt);
  const auto truth = find_horizons(metric);

  Summary s("summary");
  s.add("r_out", rep.r_out)
      .add("boundary_H", rep.boundary_mean_curvature)
      .add("boundary_mean_convex", rep.boundary_mean_convex)
      .add("areal_radius", rep.areal_radius)
      .add("m_by", rep.m_by_boundary)
      .add("m_omega", rep.m_omega_est)
      .add("two_R", rep.two_R)
      .add("intrinsic_diameter", rep.intrinsic_diameter)
      .add("two_diam", rep.two_diam);
  const char* tags[] = {"a", "b", "c"};
  for (std::size_t i = 0; i < rep.verdicts.size(); ++i) {
    s.add(std::string("verdict_") + tags[i], rep.verdicts[i].satisfied)
        .add(std::string("margin_") + tags[i], rep.verdicts[i].margin);
  }
  s.add("horizons_found", static_cast<long long>(truth.horizons.size()));
  if (cfg.criteria.round_sphere_s) {
    const double rs = cfg.criteria.round_sphere_s->resolve(metric_mass(cfg));
    const auto rsc = round_sphere_criterion(metric, rs, r_out);
    s.add("round_s", rs)
        .add("round_margin", rsc.margin)
        .add("round_predicts_horizon", rsc.predicts_horizon)
        .add("isoperimetry_assumed", rsc.isoperimetry_assumed);
  }
  s.add("r1", rep.momega.best.r1)
      .add("r2", rep.momega.best.r2)
      .add("alpha", rep.momega.best.alpha)
      .add("m_region", rep.momega.best.region_mass);
  add_provenance(s, rep.momega, cfg);

  Table v{"verdicts", {"criterion", "satisfied", "m_omega", "compared", "margin"}, {}};
  for (const auto& x : rep.verdicts)
    v.rows.push_back({x.name, x.satisfied, x.lhs, x.rhs, x.margin});
  return {Command::criteria, {s.take(), std::move(v)}};
}

Document run_single(const RunConfig& cfg, Command command) {
  const auto metric = build_metric(cfg.metric);
  switch (command) {
    case Command::masses: return run_masses(cfg, metric);
    case Command::horizons: return run_horizons(cfg, metric);
    case Command::imcf: return run_imcf(cfg, metric);
    case Command::momega: return run_momega(cfg, metric);
    case Command::criteria: return run_criteria(cfg, metric);
    case Command::sweep: break;
  }
  throw ValidationError("command: sweep cannot be nested");
}

Document run_sweep(const RunConfig& cfg) {
  if (!cfg.sweep) throw ValidationError("sweep: section required");
  const auto& sw = *cfg.sweep;
  const Command inner = command_from_string(sw.command);
  Table out;
  out.name = "sweep";
  for (double value : sw.values) {
    const auto doc = run_single(with_parameter(cfg, sw.parameter, value), inner);
    const Table& first = doc.tables.front();
    if (out.columns.empty()) {
      out.columns.push_back(to_string(sw.parameter));
      out.columns.insert(out.columns.end(), first.columns.begin(), first.columns.end());
    }
    for (const auto& row : first.rows) {
      std::vector<Cell> r{value};
      r.insert(r.end(), row.begin(), row.end());
      out.rows.push_back(std::move(r));
    }
  }
  return {Command::sweep, {std::move(out)}};
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return format_double(v);
        else if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return v;
      },
      c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return v;
        } else {
          return v;
        }
      },
      c);
}

}  // namespace

Document run_command(const RunConfig& config, Command command) {
  if (command == Command::sweep) return run_sweep(config);
  return run_single(config, command);
}

std::string render(const Document& doc, const RunConfig& config, Format format) {
  if (format == Format::csv) {
    std::string out = "# qlmass " + std::string(tool_version()) + " command=" +
                      to_string(doc.command) + " config_hash=" +
                      hash_hex(config.hash) + "\n";
    bool first = true;
    for (const auto& t : doc.tables) {
      if (!first) out += "\n";
      first = false;
      out += "# table: " + t.name + "\n";
      for (std::size_t i = 0; i < t.columns.size(); ++i)
        out += (i ? "," : "") + t.columns[i];
      out += "\n";
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
          out += (i ? "," : "") + csv_cell(row[i]);
        out += "\n";
      }
    }
    return out;
  }
  nlohmann::ordered_json j;
  j["tool"] = "qlmass";
  j["version"] = tool_version();
  j["config_hash"] = hash_hex(config.hash);
  j["command"] = to_string(doc.command);
  auto& tables = j["tables"] = nlohmann::ordered_json::object();
  for (const auto& t : doc.tables) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = json_cell(row[i]);
      rows.push_back(std::move(obj));
    }
    tables[t.name] = std::move(rows);
  }
  return j.dump(2) + "\n";
}

}  // namespace qlm
