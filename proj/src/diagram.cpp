#include "tracts/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "tracts/errors.hpp"

namespace tracts {

namespace {

const Dir* dir_of_entry(const Scalar& c) {
  if (const PhVal* p = std::get_if<PhVal>(&c.payload)) return &p->d;
  if (const TPhVal* p = std::get_if<TPhVal>(&c.payload)) return &p->d;
  return nullptr;
}

// fixed two decimals; near-zero clamped so -0.00 never appears
std::string fmt2(double v) {
  if (std::abs(v) < 0.005) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

constexpr double kCell = 220.0;
constexpr double kRadius = 70.0;
constexpr double kCenterY = 120.0;
constexpr double kHeight = 240.0;

void render_circle(std::string& out, const DiagramCircle& circle, double cx) {
  out += "  <g>\n";
  out += "    <circle cx=\"" + fmt2(cx) + "\" cy=\"" + fmt2(kCenterY) + "\" r=\"" +
         fmt2(kRadius) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (const DiagramPoint& p : circle.points) {
    double dx = p.dir.x.convert_to<double>();
    double dy = p.dir.y.convert_to<double>();
    double len = std::hypot(dx, dy);
    double ux = dx / len, uy = dy / len;
    double px = cx + kRadius * ux;
    double py = kCenterY - kRadius * uy;
    out += "    <circle cx=\"" + fmt2(px) + "\" cy=\"" + fmt2(py) + "\" r=\"3\" fill=\"black\"/>\n";
    double tx = cx + (kRadius + 12.0) * ux;
    double ty = kCenterY - (kRadius + 12.0) * uy + 4.0;
    const char* anchor = ux > 0.1 ? "start" : ux < -0.1 ? "end" : "middle";
    out += "    <text x=\"" + fmt2(tx) + "\" y=\"" + fmt2(ty) + "\" font-size=\"12\" " +
           "font-family=\"sans-serif\" text-anchor=\"" + anchor + "\">";
    for (size_t i = 0; i < p.labels.size(); ++i) {
      if (i == 0)
        out += p.labels[i];
      else
        out += "<tspan x=\"" + fmt2(tx) + "\" dy=\"12\">" + p.labels[i] + "</tspan>";
    }
    out += "</text>\n";
  }
  out += "  </g>\n";
}

}  // namespace

PhaseDiagram build_phase_diagram(const std::vector<FVector>& vectors) {
  PhaseDiagram d;
  for (const FVector& x : vectors) {
    if (!(x.tract.kind == TractKind::Phase || x.tract.kind == TractKind::TropPhase))
      throw UnsupportedTractError("phase diagrams need direction-valued entries, got tract '" +
                                  tract_name(x.tract) + "'");
    DiagramCircle circle;
    for (size_t i = 0; i < x.ground.size(); ++i) {
      const Scalar& c = x.entries[i];
      if (c.is_zero()) continue;
      const Dir& dir = *dir_of_entry(c);
      auto it = std::find_if(circle.points.begin(), circle.points.end(),
                             [&](const DiagramPoint& p) { return p.dir == dir; });
      if (it == circle.points.end())
        circle.points.push_back({dir, {x.ground.labels[i]}});
      else
        it->labels.push_back(x.ground.labels[i]);
    }
    std::sort(circle.points.begin(), circle.points.end(),
              [](const DiagramPoint& a, const DiagramPoint& b) {
                return angular_less(a.dir, b.dir);
              });
    d.circles.push_back(std::move(circle));
  }
  return d;
}

std::string render_svg(const PhaseDiagram& d) {
  double width = d.circles.empty() ? 40.0 : kCell * static_cast<double>(d.circles.size());
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
                    fmt2(width) + "\" height=\"" + fmt2(kHeight) + "\" viewBox=\"0 0 " +
                    fmt2(width) + " " + fmt2(kHeight) + "\">\n";
  for (size_t i = 0; i < d.circles.size(); ++i)
    render_circle(out, d.circles[i], kCell * static_cast<double>(i) + kCell / 2.0);
  out += "</svg>\n";
  return out;
}

void emit_phase_diagram(const std::vector<FVector>& vectors, const std::string& path) {
  std::string svg = render_svg(build_phase_diagram(vectors));
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot open '" + path + "' for writing");
  f << svg;
  if (!f) throw ValidationError("failed writing '" + path + "'");
}

}  // namespace tracts
