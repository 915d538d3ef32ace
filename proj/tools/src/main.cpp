#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pentamod/cli/commands.hpp"
#include "pentamod/error.hpp"

namespace cli = pentamod::cli;

namespace {

void add_solid(CLI::App* cmd, int& n) {
  cmd->add_option("--solid", n, "Platonic family: 3, 4 or 5")
      ->check(CLI::IsMember({3, 4, 5}))
      ->default_val(3);
}

void add_chart(CLI::App* cmd, std::string& chart) {
  cmd->add_option("--chart", chart, "Stereographic chart: A, B or M")
      ->check(CLI::IsMember({"A", "B", "M"}))
      ->default_val("M");
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moduli of pentagonal subdivision tilings of the sphere"};
  app.require_subcommand(1);

  int n = 3;
  std::string chart = "M";
  std::string format;

  cli::CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Test one anchor point with both predicates");
  add_solid(check_cmd, n);
  add_chart(check_cmd, chart);
  add_format(check_cmd, format);
  check_cmd->add_option("--point", check.point, "Anchor as x+yi or r@thetadeg")->required();

  cli::CurveOptions curve;
  auto* curve_cmd = app.add_subcommand("curve", "Sample a boundary or reduction curve");
  curve_cmd->add_option("which", curve.which, "gammaA, gammaB, gammaC, a=b, a=c or b=c")
      ->required();
  add_solid(curve_cmd, n);
  add_chart(curve_cmd, chart);
  add_format(curve_cmd, format);
  curve_cmd->add_option("--samples", curve.samples, "Number of rows")->default_val(256);

  cli::AreaOptions area;
  std::vector<std::uint64_t> mc;
  auto* area_cmd = app.add_subcommand("area", "Moduli area parts and total");
  add_solid(area_cmd, n);
  add_format(area_cmd, format);
  area_cmd->add_option("--mc", mc, "Monte Carlo cross-check: SAMPLES SEED")->expected(2);
  area_cmd->add_option("--threads", area.threads, "Worker threads (0 = all cores)");

  cli::RenderOptions render;
  std::string out_path;
  std::string include = "moduli-boundary";
  std::string anchor;
  auto* render_cmd = app.add_subcommand("render", "Write an SVG picture of the moduli");
  add_solid(render_cmd, n);
  add_chart(render_cmd, chart);
  render_cmd->add_option("--out", out_path, "Output file ('-' for stdout)");
  render_cmd->add_option("--width", render.width_px, "Width and height in pixels")
      ->default_val(800);
  render_cmd->add_option("--samples", render.samples_per_curve, "Samples per curve")
      ->default_val(256);
  render_cmd->add_option("--include", include,
                         "Comma-separated layers: moduli-boundary, region-arcs, "
                         "reduction-curves, core-triangles, face-subdivision");
  render_cmd->add_option("--anchor", anchor, "Face-subdivision anchor in the render chart");

  cli::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Compare analytic and oracle membership");
  add_solid(verify_cmd, n);
  add_format(verify_cmd, format);
  verify_cmd->add_option("--samples", verify.samples, "Uniform sphere samples")
      ->default_val(20000);
  verify_cmd->add_option("--seed", verify.seed, "Random seed")->default_val(7);
  verify_cmd->add_option("--band", verify.band, "Boundary exclusion band in radians")
      ->default_val(1e-6);
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  const pentamod::ChartId chart_id = *cli::parse_chart(chart);
  auto json_only = [&format](const char* name) {
    if (format == "csv") {
      std::cerr << "error: " << name << " only writes json\n";
      return false;
    }
    return true;
  };

  try {
    if (*check_cmd) {
      if (!json_only("check")) return cli::kUsage;
      check.n = n;
      check.chart = chart_id;
      return cli::cmd_check(check, std::cout, std::cerr);
    }
    if (*curve_cmd) {
      curve.n = n;
      curve.chart = chart_id;
      curve.json = format == "json";
      return cli::cmd_curve(curve, std::cout, std::cerr);
    }
    if (*area_cmd) {
      if (!json_only("area")) return cli::kUsage;
      area.n = n;
      if (mc.size() == 2) {
        area.mc_samples = mc[0];
        area.mc_seed = mc[1];
      }
      return cli::cmd_area(area, std::cout, std::cerr);
    }
    if (*render_cmd) {
      render.n = n;
      render.chart = chart_id;
      if (!cli::apply_includes(include, render)) {
        std::cerr << "error: bad --include list '" << include << "'\n";
        return cli::kUsage;
      }
      if (!anchor.empty()) {
        render.anchor = cli::parse_complex(anchor);
        if (!render.anchor) {
          std::cerr << "error: cannot parse anchor '" << anchor << "'\n";
          return cli::kUsage;
        }
      }
      return cli::cmd_render(render, out_path, std::cout, std::cerr);
    }
    if (*verify_cmd) {
      if (!json_only("verify")) return cli::kUsage;
      verify.n = n;
      return cli::cmd_verify(verify, std::cout, std::cerr);
    }
  } catch (const pentamod::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsage;
  }
  return cli::kUsage;
}
