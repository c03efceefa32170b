#include "reachavoid/svg.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace reachavoid {

SvgView SvgView::fit(const Scenario& scenario, double width_px) {
  SvgView v;
  const auto& poly = scenario.domain.polygon();
  v.lo = v.hi = poly.front();
  for (const Point& p : poly) {
    v.lo = {std::min(v.lo.x, p.x), std::min(v.lo.y, p.y)};
    v.hi = {std::max(v.hi.x, p.x), std::max(v.hi.y, p.y)};
  }
  v.scale = width_px / std::max(v.hi.x - v.lo.x, 1e-9);
  return v;
}

Point SvgView::to_px(Point p) const {
  return {margin + (p.x - lo.x) * scale, margin + (hi.y - p.y) * scale};
}

double SvgView::width() const { return 2 * margin + (hi.x - lo.x) * scale; }
double SvgView::height() const { return 2 * margin + (hi.y - lo.y) * scale; }

std::vector<std::vector<Point>> sample_piece(const CurvePiece& piece, const GameDomain& domain,
                                             int samples) {
  std::vector<std::vector<Point>> runs;
  std::vector<Point> run;
  samples = std::max(samples, 2);
  for (int i = 0; i < samples; ++i) {
    const double x = i == samples - 1
                         ? piece.x_hi
                         : std::min(piece.x_hi, piece.x_lo + (piece.x_hi - piece.x_lo) * i / (samples - 1));
    const Point p{x, piece.y(x)};
    if (domain.contains(p, Side::Play)) {
      run.push_back(p);
    } else if (!run.empty()) {
      runs.push_back(std::move(run));
      run.clear();
    }
  }
  if (!run.empty()) runs.push_back(std::move(run));
  return runs;
}

namespace {

std::string polygon_points(const SvgView& v, const std::vector<Point>& pts) {
  std::string s;
  for (const Point& p : pts) {
    const Point q = v.to_px(p);
    s += fmt::format("{:.2f},{:.2f} ", q.x, q.y);
  }
  if (!s.empty()) s.pop_back();
  return s;
}

constexpr const char* kBarrierColors[] = {"#1b1b1b", "#7b3294", "#e66101", "#0571b0",
                                          "#008837", "#ca0020", "#5e3c99"};

}  // namespace

std::string render_svg(const Scenario& scenario, const SvgLayers& layers) {
  const SvgView v = SvgView::fit(scenario);
  std::string out = fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" "
      "viewBox=\"0 0 {:.2f} {:.2f}\">\n",
      v.width(), v.height(), v.width(), v.height());
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out += fmt::format("<polygon id=\"target-region\" points=\"{}\" fill=\"#dfe9f5\" stroke=\"none\"/>\n",
                     polygon_points(v, scenario.domain.target_polygon()));

  if (layers.grid) {
    const RegionGrid& g = *layers.grid;
    const double cw = (g.hi.x - g.lo.x) / g.resolution * v.scale;
    const double ch = (g.hi.y - g.lo.y) / g.resolution * v.scale;
    out += "<g id=\"regions\" stroke=\"none\" fill-opacity=\"0.45\">\n";
    for (int iy = 0; iy < g.resolution; ++iy) {
      for (int ix = 0; ix < g.resolution; ++ix) {
        const CellLabel lab = g.at(ix, iy);
        if (lab == CellLabel::OUTSIDE) continue;
        const char* color = lab == CellLabel::PWR   ? "#4daf4a"
                            : lab == CellLabel::EWR ? "#e41a1c"
                                                    : "#ffff33";
        const Point c = v.to_px(g.center(ix, iy));
        out += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"{}\"/>\n",
                           c.x - cw / 2, c.y - ch / 2, cw, ch, color);
      }
    }
    out += "</g>\n";
  }

  out += fmt::format("<polygon id=\"domain\" points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n",
                     polygon_points(v, scenario.domain.polygon()));
  const Point m = v.to_px({0, 0});
  const Point n = v.to_px({scenario.target_length(), 0});
  out += fmt::format("<line id=\"target-line\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#2166ac\" stroke-width=\"3\"/>\n",
                     m.x, m.y, n.x, n.y);

  for (std::size_t b = 0; b < layers.barriers.size(); ++b) {
    const char* color = kBarrierColors[b % std::size(kBarrierColors)];
    out += fmt::format("<g class=\"barrier\" stroke=\"{}\" stroke-width=\"1.5\" fill=\"none\">\n", color);
    for (const CurvePiece& piece : layers.barriers[b].pieces) {
      for (const auto& run : sample_piece(piece, scenario.domain)) {
        if (run.size() < 2) continue;
        out += fmt::format("<polyline data-kind=\"{}\" points=\"{}\"/>\n", to_string(piece.kind),
                           polygon_points(v, run));
      }
    }
    out += "</g>\n";
  }

  if (layers.assignment) {
    out += "<g id=\"matching\" stroke=\"#333333\" stroke-width=\"1\" stroke-dasharray=\"4 3\">\n";
    auto link = [&](int p, int e) {
      const Point a = v.to_px(scenario.pursuers[p]);
      const Point c = v.to_px(scenario.evaders[e]);
      out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", a.x, a.y, c.x, c.y);
    };
    for (const auto& p : layers.assignment->pairs_one) link(p[0], p[1]);
    for (const auto& p : layers.assignment->pairs_two) {
      link(p[0], p[2]);
      link(p[1], p[2]);
    }
    out += "</g>\n";
  }

  out += "<g id=\"players\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (std::size_t i = 0; i < scenario.pursuers.size(); ++i) {
    const Point q = v.to_px(scenario.pursuers[i]);
    out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"4\" fill=\"#0000cc\"/><text x=\"{:.2f}\" y=\"{:.2f}\">P{}</text>\n",
                       q.x, q.y, q.x + 5, q.y - 5, i + 1);
  }
  for (std::size_t i = 0; i < scenario.evaders.size(); ++i) {
    const Point q = v.to_px(scenario.evaders[i]);
    out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"4\" fill=\"#cc0000\"/><text x=\"{:.2f}\" y=\"{:.2f}\">E{}</text>\n",
                       q.x, q.y, q.x + 5, q.y - 5, i + 1);
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace reachavoid
