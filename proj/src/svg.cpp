#include "rauzy/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>

namespace rauzy {

namespace {

constexpr std::array<const char*, 12> kPalette = {
    "#e6194b", "#ffe119", "#3cb44b", "#f58231", "#4363d8", "#911eb4",
    "#46f0f0", "#f032e6", "#bcf60c", "#008080", "#9a6324", "#800000",
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

// K_c → SVG user space (y axis points down).
struct Frame {
  double scale = 1;
  Vec2 lo, hi;
  double width = 0, height = 0;
  double px(double x) const { return (x - lo.x) * scale; }
  double py(double y) const { return (hi.y - y) * scale; }
};

Frame fit(Box box, const SvgCanvas& canvas) {
  if (!(box.lo.x <= box.hi.x)) box = {{0, 0}, {1, 1}};
  const double span = std::max({box.hi.x - box.lo.x, box.hi.y - box.lo.y, 1e-9});
  const double pad = canvas.margin * span;
  Frame f;
  f.lo = {box.lo.x - pad, box.lo.y - pad};
  f.hi = {box.hi.x + pad, box.hi.y + pad};
  f.scale = canvas.width / (f.hi.x - f.lo.x);
  f.width = canvas.width;
  f.height = (f.hi.y - f.lo.y) * f.scale;
  return f;
}

std::string header(const Frame& f) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(f.width) + "\" height=\"" + num(f.height) +
         "\" viewBox=\"0 0 " + num(f.width) + " " + num(f.height) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::size_t type_index(const std::vector<WedgeType>& order, WedgeType t) {
  const auto it = std::find(order.begin(), order.end(), t);
  return static_cast<std::size_t>(it - order.begin());
}

}  // namespace

std::string palette_colour(std::size_t index) { return index < kPalette.size() ? kPalette[index] : "#808080"; }

std::string faces_svg(const std::vector<FacePolygon>& faces, const SvgCanvas& canvas) {
  std::vector<Polygon> polys;
  polys.reserve(faces.size());
  Box box;
  for (const auto& fp : faces) {
    Polygon p = fp.corners();
    for (auto& v : p) v += canvas.shift;
    box.extend(bounding_box(p));
    polys.push_back(std::move(p));
  }
  const Frame f = fit(box, canvas);
  std::string out = header(f);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    out += "<polygon points=\"";
    for (std::size_t j = 0; j < polys[i].size(); ++j) {
      if (j) out += ' ';
      out += num(f.px(polys[i][j].x)) + "," + num(f.py(polys[i][j].y));
    }
    out += "\" fill=\"" + palette_colour(type_index(canvas.order, faces[i].face.type)) + "\" stroke=\"black\" stroke-width=\"" +
           num(canvas.stroke) + "\"/>\n";
  }
  return out + "</svg>\n";
}

std::string clouds_svg(const std::vector<std::vector<Vec2>>& groups, double dot, const SvgCanvas& canvas) {
  Box box;
  for (const auto& g : groups)
    for (Vec2 p : g) box.extend(p + canvas.shift);
  const Frame f = fit(box, canvas);
  const std::string side = num(std::max(dot * f.scale, 0.5));
  std::string out = header(f);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    out += "<g fill=\"" + palette_colour(i) + "\">\n";
    for (Vec2 p : groups[i]) {
      p += canvas.shift;
      out += "<rect x=\"" + num(f.px(p.x)) + "\" y=\"" + num(f.py(p.y)) + "\" width=\"" + side + "\" height=\"" + side + "\"/>\n";
    }
    out += "</g>\n";
  }
  return out + "</svg>\n";
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

}  // namespace rauzy
