#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pentamod/projection.hpp"

namespace pentamod::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDisagreement = 3,
  kIoFailure = 4,
  kVerifyFailure = 5,
};

/// Accepts "x+yi" style cartesian input ("0", "-0.17-0.17i", "2i", "1e-3-i")
/// and polar input "r@thetadeg". Returns nullopt on malformed text.
std::optional<Complex> parse_complex(const std::string& text);

std::optional<ChartId> parse_chart(const std::string& text);

struct CheckOptions {
  int n = 3;
  ChartId chart = ChartId::M;
  std::string point;
};

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err);

struct CurveOptions {
  std::string which;
  int n = 3;
  ChartId chart = ChartId::M;
  int samples = 256;
  bool json = false;
};

struct CurveRow {
  double theta = 0.0;
  double r = 0.0;
  double x = 0.0;
  double y = 0.0;
  double xi1 = 0.0;
  double xi2 = 0.0;
  double xi3 = 0.0;
};

/// Rows of `which` in the requested chart, with sphere coordinates in that
/// chart's frame. nullopt for an unknown curve name.
std::optional<std::vector<CurveRow>> curve_rows(const std::string& which, int n, ChartId chart,
                                                int samples);

int cmd_curve(const CurveOptions& opts, std::ostream& out, std::ostream& err);

struct AreaOptions {
  int n = 3;
  std::optional<std::uint64_t> mc_samples;
  std::uint64_t mc_seed = 0;
  unsigned threads = 0;
};

int cmd_area(const AreaOptions& opts, std::ostream& out, std::ostream& err);

struct RenderOptions {
  int n = 3;
  ChartId chart = ChartId::M;
  int width_px = 800;
  int samples_per_curve = 256;
  bool moduli_boundary = true;
  bool region_arcs = false;
  bool reduction_curves = false;
  bool core_triangles = false;
  bool face_subdivision = false;
  /// Anchor for face-subdivision, in the render chart.
  std::optional<Complex> anchor;
};

/// Parses a comma-separated include list into `opts`. Returns false on an
/// unknown item.
bool apply_includes(const std::string& list, RenderOptions& opts);

/// Throws Error{InvalidArgument} when the options violate their bounds.
std::string render_svg(const RenderOptions& opts);

int cmd_render(const RenderOptions& opts, const std::string& out_path, std::ostream& out,
               std::ostream& err);

struct VerifyOptions {
  int n = 3;
  std::uint64_t samples = 20000;
  std::uint64_t seed = 7;
  double band = 1e-6;
  unsigned threads = 0;
};

struct Disagreement {
  std::uint64_t index = 0;
  UnitVec point;
  bool analytic = false;
  bool oracle = false;
};

struct VerifyResult {
  std::uint64_t compared = 0;
  std::uint64_t skipped = 0;
  std::vector<Disagreement> disagreements;
};

VerifyResult run_verify(const VerifyOptions& opts);

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace pentamod::cli
