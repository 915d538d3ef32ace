// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>
#include <string>

#include "pentamod/area.hpp"
#include "pentamod/cli/commands.hpp"
#include "pentamod/curves.hpp"
#include "pentamod/error.hpp"
#include "pentamod/membership.hpp"
#include "pentamod/pentagon.hpp"
#include "pentamod/reduction.hpp"
#include "pentamod/sampling.hpp"

using namespace pentamod;

namespace {

constexpr int kFamilies[] = {3, 4, 5};

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Detail {
 public:
  template <class... Args>
  void add(const char* f, Args... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    if (!text_.empty()) text_ += "; ";
    text_ += buf;
  }
  const std::string& str() const { return text_; }

 private:
  std::string text_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome constants() {
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r5 = std::sqrt(5.0);
  const double table[3][6] = {
      {1 / r2, (r3 - 1) / r2, (r3 - 1) / r2, 1 / (4 * r2), 1 / (4 * r2), 1 / (2 * r2)},
      {(r3 - 1) / r2, r3 - r2, r2 - 1, 1 / (2 * r2), 0.5, 1 / r2},
      {0.25 * (std::sqrt(30 + 6 * r5) - r5 - 3), 0.5 * (std::sqrt(15.0) - r5 + r3 - 3),
       0.5 * (std::sqrt(10 + 2 * r5) - r5 - 1), (r5 + 3) / 8, (r5 + 2) / 4, (r5 + 3) / 4},
  };
  double worst = 0.0, worst_tan = 0.0;
  for (int n : kFamilies) {
    const SolidConstants& c = solid_constants(n);
    const double got[6] = {c.d_AB, c.d_AM, c.d_BM, c.lambda_A, c.lambda_B, c.lambda_C};
    for (int i = 0; i < 6; ++i) worst = std::max(worst, std::abs(got[i] - table[n - 3][i]));
    worst_tan = std::max(worst_tan, std::abs(tan_equation_residual(c)));
  }
  Detail d;
  d.add("max table error %.2e, max tan-equation residual %.2e", worst, worst_tan);
  return {worst < 1e-12 && worst_tan < 1e-12, d.str()};
}

Outcome areas() {
  const auto t0 = std::chrono::steady_clock::now();
  const double expected[] = {0.8600517493, 0.4602931496, 0.1954959087};
  bool pass = true;
  Detail d;
  double worst_part = 0.0;
  for (int n : kFamilies) {
    const AreaReport r = part_areas(n);
    const double err = std::abs(r.total / kPi - expected[n - 3]);
    const double cons = consistency_A2A4A8(n);
    for (AreaPart p : kAreaParts) {
      worst_part = std::max(worst_part,
                            std::abs(part_area_elliptic(p, n) - part_area_quadrature(p, n)));
    }
    pass = pass && err < 1e-8 && cons < 1e-9;
    d.add("n=%d total %.10f pi (|diff| %.1e), A2+A4+A8 residual %.1e", n, r.total / kPi, err,
          cons);
  }
  const double elapsed = seconds_since(t0);
  d.add("elliptic vs quadrature %.1e, %.2f s", worst_part, elapsed);
  return {pass && worst_part < 1e-9 && elapsed < 5.0, d.str()};
}

Outcome oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  Detail d;
  for (int n : kFamilies) {
    cli::VerifyOptions o;
    o.n = n;
    o.samples = 20000;
    o.seed = 7;
    o.band = 1e-6;
    const cli::VerifyResult r = cli::run_verify(o);
    pass = pass && r.disagreements.empty();
    d.add("n=%d %llu compared, %zu disagreements", n,
          static_cast<unsigned long long>(r.compared), r.disagreements.size());
  }
  const double elapsed = seconds_since(t0);
  d.add("%.2f s", elapsed);
  return {pass && elapsed < 60.0, d.str()};
}

Outcome curve_consistency() {
  constexpr int kSamples = 256;
  double rep = 0.0, transport = 0.0, mirror = 0.0, endpoint = 0.0;
  for (int n : kFamilies) {
    const MobiusMap a2m = mobius_M_to_A(n).inverse();
    const MobiusMap b2m = mobius_M_to_B(n).inverse();
    const KeyPoints& k = key_points(n);
    for (CurveKind kind :
         {CurveKind::GammaA, CurveKind::GammaB, CurveKind::GammaC_A, CurveKind::GammaC_B}) {
      const CurveSpec spec = curve_spec(kind, n);
      const MCurve mc = kind == CurveKind::GammaA   ? MCurve::A
                        : kind == CurveKind::GammaB ? MCurve::B
                                                    : MCurve::C;
      for (int i = 0; i < kSamples; ++i) {
        const double t = spec.theta_min + (spec.theta_max - spec.theta_min) * i / (kSamples - 1);
        const CurveSample s = gamma_point(spec, t);
        rep = std::max({rep, std::abs(polar_residual(spec, t, s.r)),
                        std::abs(cartesian_residual(spec, s.z.z)),
                        std::abs(complex_residual(spec, s.z.z)),
                        std::abs(gamma_residual(spec, s.xi))});
        const ExtComplex zm = (spec.chart == ChartId::A ? a2m : b2m).apply(s.z.z);
        if (!zm.infinite) {
          transport = std::max(transport, std::abs(m_chart_cartesian_residual(mc, n, zm.z)));
        }
        if (kind == CurveKind::GammaC_B) {
          const Complex mirrored(-s.z.z.real(), s.z.z.imag());
          mirror = std::max(mirror, std::abs(cartesian_residual(curve_spec(CurveKind::GammaC_A, n),
                                                                mirrored)));
        }
      }
    }
    auto end_error = [&](CurveKind kind, const UnitVec& lo, const UnitVec& hi) {
      const CurveSpec spec = curve_spec(kind, n);
      endpoint = std::max({endpoint, angular_distance(gamma_point(spec, spec.theta_min).xi, lo),
                           angular_distance(gamma_point(spec, spec.theta_max).xi, hi)});
    };
    end_error(CurveKind::GammaA, k.B_prime, k.A);
    end_error(CurveKind::GammaB, k.B, k.A_prime);
    end_error(CurveKind::GammaC_A, k.A, k.B);
    end_error(CurveKind::GammaC_B, k.A, k.B);
    // C sits inside the third curve, at its midpoint vertex in either chart
    endpoint = std::max(
        {endpoint,
         angular_distance(gamma_point(curve_spec(CurveKind::GammaC_A, n), -kPi / 3).xi, k.C),
         angular_distance(gamma_point(curve_spec(CurveKind::GammaC_B, n), -kPi + kPi / n).xi,
                          k.C)});
  }
  Detail d;
  d.add("representations %.1e, M-chart transports %.1e, mirror %.1e, endpoints %.1e", rep,
        transport, mirror, endpoint);
  return {rep < 1e-9 && transport < 1e-9 && mirror < 1e-10 && endpoint < 1e-9, d.str()};
}

double edge_gap(ReductionKind kind, const Pentagon& p) {
  const double a = angular_distance(p.V, p.A);
  const double b = angular_distance(p.V, p.B);
  const double c = angular_distance(p.W, p.C) + angular_distance(p.C, p.E);
  switch (kind) {
    case ReductionKind::AB: return a - b;
    case ReductionKind::AC: return a - c;
    case ReductionKind::BC: return b - c;
  }
  return 0.0;
}

Outcome reduction_loci() {
  constexpr int kSamples = 256;
  double residual = 0.0, length = 0.0;
  int on_locus_inside = 0;
  bool tangency = true;
  Detail d;
  for (int n : kFamilies) {
    for (ReductionKind kind : {ReductionKind::AB, ReductionKind::AC, ReductionKind::BC}) {
      std::vector<UnitVec> pts;
      if (kind == ReductionKind::AB && reduction_circle(n).line) {
        for (int i = 1; i < kSamples; ++i) {
          pts.push_back(to_sphere(std::polar(1.0 * i / kSamples, 1.25 * kPi), ChartId::M, n));
        }
      } else {
        const auto [lo, hi] = reduction_theta_range(kind, n);
        for (int i = 1; i < kSamples; ++i) {
          try {
            pts.push_back(reduction_point(kind, n, lo + (hi - lo) * i / kSamples).sample.xi);
          } catch (const Error& e) {
            if (e.code() != ErrorCode::NoRootInDisk) throw;
          }
        }
      }
      for (const UnitVec& p : pts) {
        residual = std::max(residual, std::abs(reduction_residual(kind, n, p)));
        if (analytic_in_moduli(n, p)) {
          length = std::max(length, std::abs(edge_gap(kind, anchor_pentagon(n, p))));
          ++on_locus_inside;
        }
      }
    }
    const TangencyReport t = check_bc_below_gammaA(n);
    tangency = tangency && t.tangent_and_below();
    d.add("n=%d b=c vs gammaA: min |gap| %.1e at %.4f pi, min signed gap %.2e", n, t.min_abs_gap,
          t.tangency_theta / kPi, t.min_gap);
  }
  Detail head;
  head.add("locus residual %.1e, length equality %.1e over %d inside anchors", residual, length,
           on_locus_inside);
  return {residual < 1e-10 && length < 1e-9 && on_locus_inside > 0 && tangency,
          head.str() + "; " + d.str()};
}

Outcome monte_carlo() {
  bool pass = true;
  Detail d;
  for (int n : kFamilies) {
    const MonteCarloEstimate est = monte_carlo_area(n, 1000000, 42);
    const MonteCarloEstimate serial = monte_carlo_area(n, 1000000, 42, 1);
    const double z = (est.estimate - part_areas(n).total) / est.std_error;
    const bool same = est.estimate == serial.estimate && est.hits == serial.hits;
    pass = pass && std::abs(z) <= 3.0 && same;
    d.add("n=%d z=%+.2f%s", n, z, same ? "" : " (thread-dependent)");
  }
  return {pass, d.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<Complex, Complex> path_ends(const std::string& svg, const std::string& id) {
  const std::regex re("id=\"" + id + "\" d=\"M([-0-9.e]+) ([-0-9.e]+).* L([-0-9.e]+) ([-0-9.e]+)\"");
  std::smatch m;
  if (!std::regex_search(svg, m, re)) return {Complex(NAN, NAN), Complex(NAN, NAN)};
  return {Complex(std::stod(m[1].str()), std::stod(m[2].str())),
          Complex(std::stod(m[3].str()), std::stod(m[4].str()))};
}

double end_error(std::pair<Complex, Complex> e, Complex p, Complex q) {
  const double fwd = std::max(std::abs(e.first - p), std::abs(e.second - q));
  const double bwd = std::max(std::abs(e.first - q), std::abs(e.second - p));
  const double best = std::min(fwd, bwd);
  return std::isnan(best) ? INFINITY : best;
}

Outcome rendering() {
  bool identical = true;
  double worst = 0.0;
  Detail d;
  for (int n : kFamilies) {
    cli::RenderOptions o;
    o.n = n;
    const std::string svg = cli::render_svg(o);
    const std::string golden =
        read_file(std::string(PENTAMOD_GOLDEN_DIR) + "/render_n" + std::to_string(n) + ".svg");
    const bool same = svg == golden && svg == cli::render_svg(o);
    identical = identical && same;
    const KeyPoints& k = key_points(n);
    auto at = [n](const UnitVec& p) { return to_chart(p, ChartId::M, n).z; };
    worst = std::max({worst, end_error(path_ends(svg, "gammaA"), at(k.B_prime), at(k.A)),
                      end_error(path_ends(svg, "gammaB"), at(k.B), at(k.A_prime)),
                      end_error(path_ends(svg, "gammaC"), at(k.A), at(k.B))});
    d.add("n=%d %s", n, same ? "byte-identical" : "differs from golden");
  }
  d.add("max endpoint error %.1e", worst);
  return {identical && worst < 1e-6, d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"constants", constants},
      {"areas", areas},
      {"oracle equivalence", oracle_equivalence},
      {"curve consistency", curve_consistency},
      {"reduction loci", reduction_loci},
      {"monte carlo", monte_carlo},
      {"rendering", rendering},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
