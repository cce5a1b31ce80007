#include "qlm/config.hpp"

#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <json.hpp>
#include <set>

#include "qlm/errors.hpp"
#include "qlm/profiles.hpp"

namespace qlm {

using nlohmann::json;

const char* to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::flat: return "flat";
    case MetricKind::schwarzschild: return "schwarzschild";
    case MetricKind::g1: return "g1";
    case MetricKind::g2: return "g2";
  }
  return "unknown";
}

const char* to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::m: return "m";
    case SweepParameter::rho0: return "rho0";
    case SweepParameter::rho1: return "rho1";
    case SweepParameter::C: return "C";
    case SweepParameter::iota: return "iota";
  }
  return "unknown";
}

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& what) {
  throw ValidationError(key + ": " + what);
}

// A JSON object plus its dotted path. Every key must be consumed through
// one of the accessors; finish() rejects whatever is left.
class Section {
 public:
  Section(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) fail(label(), "expected an object");
  }

  std::string key(const std::string& k) const {
    return path_.empty() ? k : path_ + "." + k;
  }
  bool has(const std::string& k) const { return obj_.contains(k); }

  const json* get(const std::string& k) {
    seen_.insert(k);
    auto it = obj_.find(k);
    return it == obj_.end() ? nullptr : &*it;
  }

  double number(const std::string& k, double fallback) {
    const json* v = get(k);
    if (!v) return fallback;
    if (!v->is_number()) fail(key(k), "expected a number");
    const double x = v->get<double>();
    if (!std::isfinite(x)) fail(key(k), "must be finite");
    return x;
  }

  double positive(const std::string& k, double fallback) {
    const double x = number(k, fallback);
    if (!(x > 0.0)) fail(key(k), "must be > 0");
    return x;
  }

  int integer(const std::string& k, int fallback, int min_value) {
    const json* v = get(k);
    if (!v) return fallback;
    if (!v->is_number_integer()) fail(key(k), "expected an integer");
    const auto x = v->get<long long>();
    if (x < min_value || x > 1'000'000'000)
      fail(key(k), "must be an integer >= " + std::to_string(min_value));
    return static_cast<int>(x);
  }

  bool boolean(const std::string& k, bool fallback) {
    const json* v = get(k);
    if (!v) return fallback;
    if (!v->is_boolean()) fail(key(k), "expected true or false");
    return v->get<bool>();
  }

  std::string string(const std::string& k, const std::string& fallback,
                     std::initializer_list<const char*> allowed) {
    const json* v = get(k);
    if (!v) return fallback;
    if (!v->is_string()) fail(key(k), "expected a string");
    const auto s = v->get<std::string>();
    std::string options;
    for (const char* a : allowed) {
      if (s == a) return s;
      options += options.empty() ? a : std::string(", ") + a;
    }
    fail(key(k), "must be one of " + options);
  }

  std::optional<Section> child(const std::string& k) {
    const json* v = get(k);
    if (!v) return std::nullopt;
    return Section(*v, key(k));
  }

  // Accepts `k`, `k_times_m` or `k_over_m`; see Radius.
  std::optional<Radius> radius(const std::string& k) {
    const std::string times = k + "_times_m", over = k + "_over_m";
    const int given = has(k) + has(times) + has(over);
    if (given > 1) fail(key(k), "give only one of " + k + ", " + times + ", " + over);
    if (has(k)) return Radius{positive(k, 0.0), Radius::Scale::absolute};
    if (has(times)) return Radius{positive(times, 0.0), Radius::Scale::times_m};
    if (has(over)) return Radius{positive(over, 0.0), Radius::Scale::over_m};
    return std::nullopt;
  }

  void finish() const {
    for (auto it = obj_.begin(); it != obj_.end(); ++it)
      if (!seen_.count(it.key())) fail(key(it.key()), "unknown key");
  }

  const std::string& label() const { return path_; }

 private:
  const json& obj_;
  std::string path_;
  std::set<std::string> seen_;
};

MetricConfig parse_metric(Section s) {
  MetricConfig m;
  const auto kind = s.string("kind", "", {"flat", "schwarzschild", "g1", "g2"});
  if (kind.empty()) fail(s.key("kind"), "required");
  if (kind == "flat") {
    m.kind = MetricKind::flat;
  } else if (kind == "schwarzschild") {
    m.kind = MetricKind::schwarzschild;
    m.m = s.number("m", 1.0);
  } else if (kind == "g1") {
    m.kind = MetricKind::g1;
    m.m = s.number("m", 0.05);
    m.bridge = bridge_kind_from_string(s.string("bridge", "quintic", {"quintic", "cubic"}).c_str());
  } else {
    m.kind = MetricKind::g2;
    m.m = s.number("m", 1.0);
    m.rho0 = s.number("rho0", 2.0 * m.m);
    m.rho1 = s.number("rho1", 4.0 * m.m);
    m.bridge = bridge_kind_from_string(s.string("bridge", "quintic", {"quintic", "cubic"}).c_str());
  }
  s.finish();
  validate_metric(m, s.label());
  return m;
}

RadiusRange parse_range(Section s) {
  RadiusRange r;
  auto lo = s.radius("lo");
  auto hi = s.radius("hi");
  if (!lo) fail(s.key("lo"), "required");
  if (!hi) fail(s.key("hi"), "required");
  if (lo->scale != hi->scale)
    fail(s.key("hi"), "lo and hi must use the same form");
  if (!(lo->value < hi->value)) fail(s.key("hi"), "must exceed lo");
  r.lo = *lo;
  r.hi = *hi;
  r.n = s.integer("n", 50, 2);
  r.log_spacing = s.string("spacing", "log", {"log", "linear"}) == "log";
  s.finish();
  return r;
}

std::vector<Radius> parse_radius_list(const json& v, const std::string& key,
                                      Radius::Scale scale) {
  if (!v.is_array() || v.empty()) fail(key, "expected a non-empty array");
  std::vector<Radius> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string k = key + "[" + std::to_string(i) + "]";
    if (!v[i].is_number()) fail(k, "expected a number");
    const double x = v[i].get<double>();
    if (!(x > 0.0) || !std::isfinite(x)) fail(k, "must be > 0");
    out.push_back({x, scale});
  }
  return out;
}

void check_over_m(const std::optional<Radius>& r, const MetricConfig& metric,
                  const std::string& key) {
  if (r && r->scaled() && !(metric.m > 0.0))
    fail(key, "mass-scaled radii need a metric with m > 0");
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

void validate_metric(const MetricConfig& m, const std::string& where) {
  const auto key = [&](const char* k) {
    return where.empty() ? std::string(k) : where + "." + k;
  };
  switch (m.kind) {
    case MetricKind::flat:
      return;
    case MetricKind::schwarzschild:
      if (!(m.m > 0.0)) fail(key("m"), "must be > 0");
      return;
    case MetricKind::g1:
      if (!(m.m > 0.0)) fail(key("m"), "must be > 0");
      break;
    case MetricKind::g2:
      if (!(m.m > 0.0)) fail(key("m"), "must be > 0");
      if (!(m.rho0 > m.m)) fail(key("rho0"), "must be > m");
      if (!(m.rho1 > m.rho0)) fail(key("rho1"), "must be > rho0");
      break;
  }
  try {
    build_metric(m);
  } catch (const Error& e) {
    fail(where.empty() ? "metric" : where, std::string("not admissible: ") + e.what());
  }
}

RadialMetric build_metric(const MetricConfig& m) {
  switch (m.kind) {
    case MetricKind::flat:
      return build_flat();
    case MetricKind::schwarzschild:
      return build_schwarzschild(m.m);
    case MetricKind::g1:
      return build_g1({m.m, m.bridge});
    case MetricKind::g2:
      return build_g2({m.m, m.rho0, m.rho1, m.bridge});
  }
  throw InvalidParams("unknown metric kind");
}

RunConfig with_parameter(const RunConfig& config, SweepParameter p, double v) {
  RunConfig out = config;
  switch (p) {
    case SweepParameter::m: out.metric.m = v; break;
    case SweepParameter::rho0: out.metric.rho0 = v; break;
    case SweepParameter::rho1: out.metric.rho1 = v; break;
    case SweepParameter::C: out.alpha.C = v; break;
    case SweepParameter::iota: out.alpha.iota = v; break;
  }
  return out;
}

std::string hash_hex(std::uint64_t hash) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed config: ") + e.what());
  }
  Section root(doc, "");
  RunConfig cfg;

  auto metric = root.child("metric");
  if (!metric) fail("metric", "required");
  cfg.metric = parse_metric(*metric);
  const auto& M = cfg.metric;

  if (auto s = root.child("numeric")) {
    cfg.numeric.quadrature_tol = s->positive("quadrature_tol", cfg.numeric.quadrature_tol);
    cfg.numeric.root_tol = s->positive("root_tol", cfg.numeric.root_tol);
    cfg.numeric.horizon_grid = s->integer("horizon_grid", cfg.numeric.horizon_grid, 16);
    cfg.numeric.hull_grid = s->integer("hull_grid", cfg.numeric.hull_grid, 16);
    cfg.numeric.curvature_grid = s->integer("curvature_grid", cfg.numeric.curvature_grid, 16);
    cfg.numeric.k_convention =
        s->string("k_convention", "sqrt_bound", {"sqrt_bound", "bound"}) == "bound"
            ? CurvatureConvention::bound
            : CurvatureConvention::sqrt_bound;
    s->finish();
  }

  if (auto s = root.child("alpha")) {
    cfg.alpha.C = s->positive("C", cfg.alpha.C);
    if (const json* iota = s->get("iota")) {
      if (iota->is_string()) {
        if (iota->get<std::string>() != "auto") fail(s->key("iota"), "must be a number or \"auto\"");
      } else {
        cfg.alpha.iota = s->positive("iota", 1.0);
      }
    }
    s->finish();
  }

  if (auto s = root.child("masses")) {
    const char* forms[] = {"radii", "radii_times_m", "radii_over_m"};
    const Radius::Scale scales[] = {Radius::Scale::absolute, Radius::Scale::times_m,
                                    Radius::Scale::over_m};
    bool listed = false;
    for (int i = 0; i < 3; ++i) {
      if (!s->has(forms[i])) continue;
      if (listed) fail(s->key(forms[i]), "give only one radius list");
      listed = true;
      cfg.masses.radii = parse_radius_list(*s->get(forms[i]), s->key(forms[i]), scales[i]);
      if (i > 0 && !(M.m > 0.0)) fail(s->key(forms[i]), "needs a metric with m > 0");
    }
    if (auto r = s->child("range")) {
      if (listed) fail(r->label(), "give either a radius list or a range");
      cfg.masses.range = parse_range(*r);
      check_over_m(cfg.masses.range->lo, M, r->key("lo"));
    }
    s->finish();
  }

  if (auto s = root.child("horizons")) {
    cfg.horizons.r_lo = s->radius("r_lo");
    cfg.horizons.r_hi = s->radius("r_hi");
    check_over_m(cfg.horizons.r_lo, M, s->key("r_lo"));
    check_over_m(cfg.horizons.r_hi, M, s->key("r_hi"));
    s->finish();
  }

  if (auto s = root.child("imcf")) {
    cfg.imcf.r_start = s->radius("r_start");
    cfg.imcf.r_end = s->radius("r_end");
    cfg.imcf.samples = s->integer("samples", cfg.imcf.samples, 3);
    check_over_m(cfg.imcf.r_start, M, s->key("r_start"));
    check_over_m(cfg.imcf.r_end, M, s->key("r_end"));
    s->finish();
  }

  if (auto s = root.child("momega")) {
    cfg.momega.r_out = s->radius("r_out");
    cfg.momega.pairs = s->integer("pairs", cfg.momega.pairs, 2);
    cfg.momega.r_lo_factor = s->positive("r_lo_factor", cfg.momega.r_lo_factor);
    if (!(cfg.momega.r_lo_factor < 1.0)) fail(s->key("r_lo_factor"), "must be < 1");
    cfg.momega.refine_pairs = s->integer("refine_pairs", cfg.momega.refine_pairs, 0);
    cfg.momega.table = s->boolean("table", false);
    check_over_m(cfg.momega.r_out, M, s->key("r_out"));
    s->finish();
  }

  if (auto s = root.child("criteria")) {
    cfg.criteria.r_out = s->radius("r_out");
    cfg.criteria.require_mean_convex = s->boolean("require_mean_convex", true);
    cfg.criteria.round_sphere_s = s->radius("round_sphere_s");
    check_over_m(cfg.criteria.r_out, M, s->key("r_out"));
    check_over_m(cfg.criteria.round_sphere_s, M, s->key("round_sphere_s"));
    s->finish();
  }

  if (auto s = root.child("sweep")) {
    SweepConfig sw;
    sw.command = s->string("command", "", {"masses", "horizons", "imcf", "momega", "criteria"});
    if (sw.command.empty()) fail(s->key("command"), "required");
    const auto p = s->string("parameter", "m", {"m", "rho0", "rho1", "C", "iota"});
    sw.parameter = p == "m" ? SweepParameter::m
                 : p == "rho0" ? SweepParameter::rho0
                 : p == "rho1" ? SweepParameter::rho1
                 : p == "C" ? SweepParameter::C
                            : SweepParameter::iota;
    const bool list = s->has("values");
    if (list) {
      const json* v = s->get("values");
      if (!v->is_array() || v->empty()) fail(s->key("values"), "expected a non-empty array");
      for (std::size_t i = 0; i < v->size(); ++i) {
        if (!(*v)[i].is_number()) fail(s->key("values") + "[" + std::to_string(i) + "]", "expected a number");
        sw.values.push_back((*v)[i].get<double>());
      }
    }
    if (auto r = s->child("range")) {
      if (list) fail(r->label(), "give either values or a range");
      const double lo = r->number("lo", 0.0), hi = r->number("hi", 0.0);
      const int n = r->integer("n", 10, 1);
      const bool log = r->string("spacing", "linear", {"log", "linear"}) == "log";
      r->finish();
      if (n > 1 && !(lo < hi)) fail(r->key("hi"), "must exceed lo");
      if (log && !(lo > 0.0)) fail(r->key("lo"), "must be > 0 for log spacing");
      for (int i = 0; i < n; ++i) {
        const double f = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
        sw.values.push_back(log ? lo * std::pow(hi / lo, f) : lo + f * (hi - lo));
      }
    }
    if (sw.values.empty()) fail(s->key("values"), "required (or range)");
    s->finish();
    const bool metric_param = sw.parameter == SweepParameter::m ||
                              sw.parameter == SweepParameter::rho0 ||
                              sw.parameter == SweepParameter::rho1;
    if (sw.parameter == SweepParameter::rho0 || sw.parameter == SweepParameter::rho1)
      if (M.kind != MetricKind::g2) fail(s->key("parameter"), "rho0/rho1 sweeps need a g2 metric");
    if (sw.parameter == SweepParameter::m && M.kind == MetricKind::flat)
      fail(s->key("parameter"), "the flat metric has no mass parameter");
    for (std::size_t i = 0; i < sw.values.size(); ++i) {
      const std::string k = s->key("values") + "[" + std::to_string(i) + "]";
      const RunConfig trial = with_parameter(cfg, sw.parameter, sw.values[i]);
      if (metric_param) {
        try {
          validate_metric(trial.metric, "metric");
        } catch (const ValidationError& e) {
          fail(k, e.what());
        }
      } else if (!(sw.values[i] > 0.0) || !std::isfinite(sw.values[i])) {
        fail(k, "must be > 0");
      }
    }
    cfg.sweep = std::move(sw);
  }

  root.finish();
  cfg.hash = fnv1a(doc.dump());
  return cfg;
}

}  // namespace qlm
