#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>

#include "json.hpp"

#include "pentamod/area.hpp"
#include "pentamod/cli/commands.hpp"
#include "pentamod/curves.hpp"
#include "pentamod/error.hpp"
#include "pentamod/membership.hpp"
#include "pentamod/pentagon.hpp"
#include "pentamod/reduction.hpp"
#include "pentamod/regions.hpp"
#include "pentamod/sampling.hpp"

namespace pentamod::cli {

namespace {

using nlohmann::json;

struct Sampled {
  double theta;
  ChartId chart;
  UnitVec point;
  Complex z;
};

std::optional<ReductionKind> reduction_named(const std::string& which) {
  if (which == "a=b") return ReductionKind::AB;
  if (which == "a=c") return ReductionKind::AC;
  if (which == "b=c") return ReductionKind::BC;
  return std::nullopt;
}

double uniform_at(double lo, double hi, int k, int samples) {
  return samples <= 1 ? lo : lo + (hi - lo) * k / (samples - 1);
}

std::vector<Sampled> sample_gamma(const std::string& which, int n, ChartId chart, int samples) {
  std::vector<Sampled> out;
  if (chart == ChartId::M) {
    const MCurve mc = which == "gammaA" ? MCurve::A : which == "gammaB" ? MCurve::B : MCurve::C;
    const auto [lo, hi] = m_chart_range(mc);
    for (int k = 0; k < samples; ++k) {
      const CurveSample s = gamma_m_chart(mc, n, uniform_at(lo, hi, k, samples));
      out.push_back({s.theta, ChartId::M, s.xi, s.z.z});
    }
    return out;
  }
  CurveKind kind = CurveKind::GammaA;
  if (which == "gammaB") kind = CurveKind::GammaB;
  if (which == "gammaC") kind = chart == ChartId::A ? CurveKind::GammaC_A : CurveKind::GammaC_B;
  const CurveSpec spec = curve_spec(kind, n);
  for (int k = 0; k < samples; ++k) {
    const CurveSample s = gamma_point(spec, uniform_at(spec.theta_min, spec.theta_max, k, samples));
    out.push_back({s.theta, spec.chart, s.xi, s.z.z});
  }
  return out;
}

std::vector<Sampled> sample_reduction(ReductionKind kind, int n, int samples) {
  std::vector<Sampled> out;
  if (kind == ReductionKind::AB && reduction_circle(n).line) {
    const double theta = 1.25 * kPi;
    const double r_max = reduction_point(kind, n, theta).sample.r;
    for (int k = 1; k <= samples; ++k) {
      const double r = r_max * k / samples;
      const Complex z = std::polar(r, theta);
      out.push_back({theta, ChartId::M, to_sphere(z, ChartId::M, n), z});
    }
    return out;
  }
  auto [lo, hi] = reduction_theta_range(kind, n);
  if (kind == ReductionKind::AB) {
    lo += 1e-9;
    hi -= 1e-9;
  }
  for (int k = 0; k < samples; ++k) {
    try {
      const CurveSample s = reduction_point(kind, n, uniform_at(lo, hi, k, samples)).sample;
      out.push_back({s.theta, ChartId::M, s.xi, s.z.z});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoRootInDisk) throw;
    }
  }
  return out;
}

json point_json(const UnitVec& p) { return json::array({p.xi1(), p.xi2(), p.xi3()}); }

std::string format12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  const std::optional<Complex> z = parse_complex(opts.point);
  if (!z) {
    err << "error: cannot parse complex number '" << opts.point << "'\n";
    return kUsage;
  }
  UnitVec p;
  try {
    p = to_sphere(*z, opts.chart, opts.n);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const bool analytic = analytic_in_moduli(opts.n, p);
  bool oracle = false;
  json violations = json::array();
  std::string construction_error;
  try {
    const SimplicityReport rep = is_simple(anchor_pentagon(opts.n, p));
    oracle = rep.simple;
    for (const Violation& v : rep.violations) {
      violations.push_back({{"edges", {to_string(v.first), to_string(v.second)}},
                            {"kind", to_string(v.kind)},
                            {"witness", point_json(v.witness)}});
    }
  } catch (const Error& e) {
    construction_error = std::string(to_string(e.code()));
  }

  const RegionClass rc = region_of(opts.n, p);
  json doc = {{"schema", 1},
              {"solid", opts.n},
              {"chart", std::string(1, to_char(opts.chart))},
              {"point", {{"re", z->real()}, {"im", z->imag()}}},
              {"xi", point_json(p)},
              {"in_moduli_analytic", analytic},
              {"in_moduli_oracle", oracle},
              {"agree", analytic == oracle},
              {"region", rc.region ? json(*rc.region) : json(nullptr)},
              {"adjacent_regions", rc.adjacent},
              {"simplicity_violations", violations}};
  if (!construction_error.empty()) doc["construction_error"] = construction_error;
  out << doc.dump(2) << '\n';
  return analytic == oracle ? kOk : kDisagreement;
}

std::optional<std::vector<CurveRow>> curve_rows(const std::string& which, int n, ChartId chart,
                                                int samples) {
  std::vector<Sampled> pts;
  if (which == "gammaA" || which == "gammaB" || which == "gammaC") {
    pts = sample_gamma(which, n, chart, samples);
  } else if (const auto kind = reduction_named(which)) {
    pts = sample_reduction(*kind, n, samples);
  } else {
    return std::nullopt;
  }

  const ChartFrame& f = chart_frame(n, chart);
  std::vector<CurveRow> rows;
  rows.reserve(pts.size());
  for (const Sampled& s : pts) {
    const Complex z = s.chart == chart ? s.z : to_chart(s.point, chart, n).z;
    CurveRow row;
    row.theta = s.chart == chart ? s.theta : std::arg(z);
    row.r = std::abs(z);
    row.x = z.real();
    row.y = z.imag();
    row.xi1 = dot(s.point.vec(), f.e1);
    row.xi2 = dot(s.point.vec(), f.e2);
    row.xi3 = dot(s.point.vec(), f.e3);
    rows.push_back(row);
  }
  return rows;
}

int cmd_curve(const CurveOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.samples < 1) {
    err << "error: --samples must be at least 1\n";
    return kUsage;
  }
  const auto rows = curve_rows(opts.which, opts.n, opts.chart, opts.samples);
  if (!rows) {
    err << "error: unknown curve '" << opts.which
        << "' (expected gammaA, gammaB, gammaC, a=b, a=c or b=c)\n";
    return kUsage;
  }
  if (opts.json) {
    json arr = json::array();
    for (const CurveRow& r : *rows) {
      arr.push_back({{"theta", r.theta}, {"r", r.r}, {"x", r.x}, {"y", r.y},
                     {"xi1", r.xi1}, {"xi2", r.xi2}, {"xi3", r.xi3}});
    }
    const json doc = {{"schema", 1},
                      {"curve", opts.which},
                      {"solid", opts.n},
                      {"chart", std::string(1, to_char(opts.chart))},
                      {"rows", arr}};
    out << doc.dump(2) << '\n';
    return kOk;
  }
  out << "theta,r,x,y,xi1,xi2,xi3\n";
  for (const CurveRow& r : *rows) {
    out << format12(r.theta) << ',' << format12(r.r) << ',' << format12(r.x) << ','
        << format12(r.y) << ',' << format12(r.xi1) << ',' << format12(r.xi2) << ','
        << format12(r.xi3) << '\n';
  }
  return kOk;
}

int cmd_area(const AreaOptions& opts, std::ostream& out, std::ostream& err) {
  const AreaReport r = part_areas(opts.n);
  json residuals = json::object();
  for (AreaPart part : kAreaParts) {
    residuals[std::string(to_string(part))] =
        part_area_elliptic(part, opts.n) - part_area_quadrature(part, opts.n);
  }
  json doc = {{"schema", 1},
              {"solid", opts.n},
              {"parts",
               {{"A1", r.A1}, {"A2", r.A2}, {"A3", r.A3}, {"A7", r.A7},
                {"A4", r.A4}, {"A5", r.A5}, {"A8", r.A8}, {"A13", r.A13}}},
              {"total", r.total},
              {"total_over_pi", r.total / kPi},
              {"fraction_of_sphere", r.fraction_of_sphere},
              {"consistency_A2A4A8", consistency_A2A4A8(opts.n)},
              {"elliptic_minus_quadrature", residuals}};
  if (opts.mc_samples) {
    try {
      const MonteCarloEstimate mc =
          monte_carlo_area(opts.n, *opts.mc_samples, opts.mc_seed, opts.threads);
      doc["monte_carlo"] = {{"samples", mc.samples},
                            {"seed", opts.mc_seed},
                            {"hits", mc.hits},
                            {"estimate", mc.estimate},
                            {"std_error", mc.std_error},
                            {"within_3_sigma", std::abs(mc.estimate - r.total) <= 3.0 * mc.std_error}};
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    }
  }
  out << doc.dump(2) << '\n';
  return kOk;
}

VerifyResult run_verify(const VerifyOptions& opts) {
  solid_constants(opts.n);
  VerifyResult result;
  std::mutex mu;
  std::atomic<std::uint64_t> compared{0};
  std::atomic<std::uint64_t> skipped{0};
  for_each_sphere_sample(opts.samples, opts.seed, opts.threads,
                         [&](std::uint64_t index, const UnitVec& p) {
                           if (distance_to_boundary_loci(opts.n, p) <= opts.band) {
                             ++skipped;
                             return;
                           }
                           ++compared;
                           const bool a = analytic_in_moduli(opts.n, p);
                           const bool o = oracle_in_moduli(opts.n, p);
                           if (a != o) {
                             std::lock_guard<std::mutex> lock(mu);
                             result.disagreements.push_back({index, p, a, o});
                           }
                         });
  std::sort(result.disagreements.begin(), result.disagreements.end(),
            [](const Disagreement& l, const Disagreement& r) { return l.index < r.index; });
  result.compared = compared.load();
  result.skipped = skipped.load();
  return result;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.samples < 1 || !(opts.band >= 0.0)) {
    err << "error: --samples must be at least 1 and --band non-negative\n";
    return kUsage;
  }
  const auto start = std::chrono::steady_clock::now();
  const VerifyResult res = run_verify(opts);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json list = json::array();
  for (const Disagreement& d : res.disagreements) {
    list.push_back({{"index", d.index},
                    {"xi", point_json(d.point)},
                    {"analytic", d.analytic},
                    {"oracle", d.oracle}});
  }
  const json doc = {{"schema", 1},
                    {"solid", opts.n},
                    {"samples", opts.samples},
                    {"seed", opts.seed},
                    {"band", opts.band},
                    {"compared", res.compared},
                    {"skipped", res.skipped},
                    {"agree", res.disagreements.empty()},
                    {"disagreements", list},
                    {"elapsed", elapsed}};
  out << doc.dump(2) << '\n';
  return res.disagreements.empty() ? kOk : kVerifyFailure;
}

}  // namespace pentamod::cli
