#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pentamod/cli/commands.hpp"
#include "pentamod/error.hpp"
#include "pentamod/membership.hpp"
#include "pentamod/pentagon.hpp"
#include "pentamod/reduction.hpp"

namespace pentamod::cli {

namespace {

/// Points farther out than this are dropped; the view only spans |x|, |y| <= 1.1.
constexpr double kClipRadius = 4.0;

using Polyline = std::vector<Complex>;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::optional<Complex> project(const UnitVec& p, ChartId chart, int n) {
  const ChartFrame& f = chart_frame(n, chart);
  const double w = dot(p.vec(), f.e3);
  if (1.0 - w < 1e-9) return std::nullopt;
  const Complex z{dot(p.vec(), f.e1) / (1.0 - w), dot(p.vec(), f.e2) / (1.0 - w)};
  if (std::abs(z) > kClipRadius) return std::nullopt;
  return z;
}

/// Splits the projected samples wherever a point falls outside the clip disk.
std::vector<Polyline> project_all(const std::vector<UnitVec>& pts, ChartId chart, int n) {
  std::vector<Polyline> out;
  Polyline cur;
  for (const UnitVec& p : pts) {
    if (auto z = project(p, chart, n)) {
      cur.push_back(*z);
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (cur.size() > 1) out.push_back(std::move(cur));
  return out;
}

std::vector<UnitVec> arc_points(const UnitVec& u, const UnitVec& v, int segments) {
  const GreatArc arc = minor_arc(u, v);
  std::vector<UnitVec> pts;
  for (int k = 0; k <= segments; ++k) {
    pts.push_back(k == 0 ? u : k == segments ? v : arc.at(arc.length() * k / segments));
  }
  return pts;
}

std::vector<UnitVec> great_circle_points(const Vec3& e1, const Vec3& e2, int segments) {
  std::vector<UnitVec> pts;
  for (int k = 0; k <= segments; ++k) {
    const double t = 2.0 * kPi * k / segments;
    pts.emplace_back(e1 * std::cos(t) + e2 * std::sin(t));
  }
  return pts;
}

std::string path_data(const std::vector<Polyline>& lines, bool closed = false) {
  std::string d;
  for (const Polyline& line : lines) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (!d.empty()) d += ' ';
      d += i == 0 ? "M" : "L";
      d += fmt(line[i].real()) + ' ' + fmt(line[i].imag());
    }
    if (closed) d += " Z";
  }
  return d;
}

void emit_path(std::ostringstream& os, const std::string& id, const std::string& d) {
  os << "    <path id=\"" << id << "\" d=\"" << d << "\"/>\n";
}

std::vector<Polyline> curve_polyline(const std::string& which, const RenderOptions& o) {
  const auto rows = curve_rows(which, o.n, o.chart, o.samples_per_curve);
  Polyline line;
  for (const CurveRow& r : *rows) line.emplace_back(r.x, r.y);
  return {line};
}

std::vector<Polyline> arc_polyline(const UnitVec& u, const UnitVec& v, const RenderOptions& o) {
  return project_all(arc_points(u, v, o.samples_per_curve / 4), o.chart, o.n);
}

/// Keeps the runs of samples that lie in the moduli.
std::vector<Polyline> clip_to_moduli(const std::vector<UnitVec>& pts, const RenderOptions& o) {
  std::vector<Polyline> out;
  std::vector<UnitVec> run;
  auto flush = [&]() {
    if (run.size() > 1) {
      for (Polyline& line : project_all(run, o.chart, o.n)) out.push_back(std::move(line));
    }
    run.clear();
  };
  for (const UnitVec& p : pts) {
    if (analytic_in_moduli(o.n, p)) {
      run.push_back(p);
    } else {
      flush();
    }
  }
  flush();
  return out;
}

UnitVec default_anchor(int n) {
  if (n == 3) {
    const double scale = solid_constants(3).d_AB;
    return to_sphere(std::polar(0.595 * scale, 36.8 * kPi / 180.0), ChartId::A, 3);
  }
  const KeyPoints& k = key_points(n);
  return UnitVec(k.A.vec() + k.B.vec() + k.M.vec());
}

}  // namespace

bool apply_includes(const std::string& list, RenderOptions& opts) {
  opts.moduli_boundary = false;
  std::stringstream ss(list);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    any = true;
    if (item == "moduli-boundary") {
      opts.moduli_boundary = true;
    } else if (item == "region-arcs") {
      opts.region_arcs = true;
    } else if (item == "reduction-curves") {
      opts.reduction_curves = true;
    } else if (item == "core-triangles") {
      opts.core_triangles = true;
    } else if (item == "face-subdivision") {
      opts.face_subdivision = true;
    } else {
      return false;
    }
  }
  return any;
}

std::string render_svg(const RenderOptions& o) {
  if (o.width_px < 64 || o.samples_per_curve < 16) {
    throw Error(ErrorCode::InvalidArgument, "width must be >= 64 and samples per curve >= 16");
  }
  const KeyPoints& k = key_points(o.n);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << o.width_px << "\" height=\""
     << o.width_px << "\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n"
     << "  <g transform=\"scale(1,-1)\" fill=\"none\" stroke-linecap=\"round\" "
        "stroke-linejoin=\"round\">\n"
     << "  <circle id=\"equator\" cx=\"0\" cy=\"0\" r=\"1\" stroke=\"#dddddd\" "
        "stroke-width=\"0.003\"/>\n";

  if (o.region_arcs) {
    os << "  <g id=\"region-arcs\" stroke=\"#c8c8c8\" stroke-width=\"0.003\">\n";
    const int circle_segments = 8 * o.samples_per_curve;
    for (ChartId center : {ChartId::A, ChartId::B}) {
      const ChartFrame& f = chart_frame(o.n, center);
      const int count = center == ChartId::A ? 3 : o.n;
      for (int i = 0; i < count; ++i) {
        const double ray = kPi * i / count;
        const Vec3 dir = f.e1 * std::cos(ray) + f.e2 * std::sin(ray);
        const std::string id =
            std::string("circle-") + to_char(center) + std::to_string(i);
        emit_path(os, id, path_data(project_all(great_circle_points(f.e3, dir, circle_segments),
                                                o.chart, o.n)));
      }
    }
    os << "  </g>\n";
  }

  if (o.core_triangles) {
    os << "  <g id=\"core-triangles\" stroke=\"#808080\" stroke-width=\"0.004\">\n";
    const std::pair<const char*, std::pair<UnitVec, UnitVec>> edges[] = {
        {"AB", {k.A, k.B}},   {"BM", {k.B, k.M}},   {"MA", {k.M, k.A}},
        {"AC", {k.A, k.C}},   {"CB", {k.C, k.B}},   {"ABp", {k.A, k.B_prime}},
        {"BpM", {k.B_prime, k.M}}, {"BAp", {k.B, k.A_prime}}, {"ApM", {k.A_prime, k.M}},
    };
    for (const auto& [id, e] : edges) {
      emit_path(os, std::string("edge-") + id, path_data(arc_polyline(e.first, e.second, o)));
    }
    os << "  </g>\n";
  }

  if (o.moduli_boundary) {
    os << "  <g id=\"moduli-boundary\" stroke=\"#000000\" stroke-width=\"0.006\">\n";
    for (const char* which : {"gammaA", "gammaB", "gammaC"}) {
      emit_path(os, which, path_data(curve_polyline(which, o)));
    }
    emit_path(os, "arc-BpM", path_data(arc_polyline(k.B_prime, k.M, o)));
    emit_path(os, "arc-MAp", path_data(arc_polyline(k.M, k.A_prime, o)));
    os << "  </g>\n";
  }

  if (o.reduction_curves) {
    os << "  <g id=\"reduction-curves\" stroke=\"#1f5fbf\" stroke-width=\"0.004\">\n";
    for (const char* which : {"a=b", "a=c", "b=c"}) {
      const std::string id = std::string("reduction-") + which[0] + which[2];
      const int dense = 4 * o.samples_per_curve;
      std::vector<UnitVec> pts;
      if (std::string(which) == "a=b" && reduction_circle(o.n).line) {
        const UnitVec ends[] = {to_sphere(std::polar(1.0, 1.25 * kPi), ChartId::M, o.n),
                                to_sphere(std::polar(1.0, 0.25 * kPi), ChartId::M, o.n)};
        pts = arc_points(ends[0], k.M, dense / 2);
        const std::vector<UnitVec> second = arc_points(k.M, ends[1], dense / 2);
        pts.insert(pts.end(), second.begin() + 1, second.end());
      } else {
        const auto rows = curve_rows(which, o.n, ChartId::M, dense);
        for (const CurveRow& r : *rows) {
          pts.push_back(to_sphere(Complex{r.x, r.y}, ChartId::M, o.n));
        }
      }
      const std::vector<Polyline> lines = clip_to_moduli(pts, o);
      emit_path(os, id, path_data(lines));
    }
    os << "  </g>\n";
  }

  if (o.face_subdivision) {
    const UnitVec anchor =
        o.anchor ? to_sphere(*o.anchor, o.chart, o.n) : default_anchor(o.n);
    os << "  <g id=\"face-subdivision\" stroke=\"#b22222\" stroke-width=\"0.005\">\n";
    const std::array<Pentagon, 3> faces = face_pentagons(o.n, anchor);
    for (std::size_t i = 0; i < faces.size(); ++i) {
      std::vector<UnitVec> pts;
      for (const auto& e : faces[i].edges) {
        if (!e) continue;
        const std::vector<UnitVec> seg = arc_points(e->u(), e->v(), o.samples_per_curve / 8);
        pts.insert(pts.end(), pts.empty() ? seg.begin() : seg.begin() + 1, seg.end());
      }
      emit_path(os, "pentagon-" + std::to_string(i), path_data(project_all(pts, o.chart, o.n), true));
    }
    os << "  </g>\n";
  }

  os << "  </g>\n</svg>\n";
  return os.str();
}

int cmd_render(const RenderOptions& opts, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
  std::string svg;
  try {
    svg = render_svg(opts);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (out_path.empty() || out_path == "-") {
    out << svg;
    return kOk;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << out_path << "' for writing\n";
    return kIoFailure;
  }
  file << svg;
  file.flush();
  if (!file) {
    err << "error: write to '" << out_path << "' failed\n";
    return kIoFailure;
  }
  return kOk;
}

}  // namespace pentamod::cli
