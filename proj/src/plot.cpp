#include "subord/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <vector>

#include "subord/errors.hpp"
#include "subord/generators.hpp"
#include "subord/regions.hpp"
#include "subord/series.hpp"

namespace subord {

namespace {

constexpr double kSize = 800.0;
constexpr double kPad = 40.0;

using Curve = std::vector<std::optional<Complex>>;

struct Layer {
  std::string label;
  std::string color;
  std::string dash;
  Curve points;
};

std::string fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  std::string s = buf;
  if (s == "-0.00" || s == "-0.0" || s == "-0") s.erase(0, 1);
  return s;
}

Curve sample_curve(std::size_t n, double clip, auto&& f) {
  Curve c;
  c.reserve(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const double t = -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(j) /
                                             static_cast<double>(n);
    try {
      const Complex w = f(t);
      if (std::isfinite(w.real()) && std::isfinite(w.imag()) && std::abs(w) <= clip) {
        c.emplace_back(w);
      } else {
        c.emplace_back(std::nullopt);
      }
    } catch (const Error&) {
      c.emplace_back(std::nullopt);
    }
  }
  return c;
}

Curve region_curve(const TargetRegion& region, std::size_t n, double clip) {
  return sample_curve(n, clip, [&](double t) {
    return target_eval(region, DiskPoint::polar(1.0, t));
  });
}

}  // namespace

std::string render_svg(LemmaId id, const LemmaParams& params, const PlotOptions& opts) {
  const TargetRegion conclusion = conclusion_region(id, params);
  const TargetRegion premise = premise_region(id, params);
  std::vector<Layer> layers;
  layers.push_back({"conclusion q(D): " + conclusion.describe(), "#1f4e9c", "",
                    region_curve(conclusion, opts.samples, opts.clip)});
  layers.push_back({"premise Phi(D): " + premise.describe(), "#b03a2e", "6,4",
                    region_curve(premise, opts.samples, opts.clip)});
  layers.push_back({"h(e^it)", "#1e8449", "",
                    sample_curve(opts.samples, opts.clip, [&](double t) {
                      return premise_h_eval(id, params, DiskPoint::polar(1.0, t));
                    })});
  try {
    const auto sol =
        solve_premise_adaptive(id, params, make_schwarz(Monomial{1}), opts.p_radius);
    layers.push_back({"p(" + fixed(opts.p_radius, 3) + " e^it), w(z) = z", "#7d3c98", "2,3",
                      sample_curve(opts.samples, opts.clip, [&](double t) {
                        return eval(sol.solution.p, std::polar(opts.p_radius, t));
                      })});
  } catch (const Error&) {
    // no premise-exact solution for these parameters; the curve is omitted
  }

  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  bool any = false;
  for (const auto& l : layers) {
    for (const auto& p : l.points) {
      if (!p) continue;
      if (!any) {
        xmin = xmax = p->real();
        ymin = ymax = p->imag();
        any = true;
      }
      xmin = std::min(xmin, p->real());
      xmax = std::max(xmax, p->real());
      ymin = std::min(ymin, p->imag());
      ymax = std::max(ymax, p->imag());
    }
  }
  xmin = std::min(xmin, 0.0);
  xmax = std::max(xmax, 0.0);
  ymin = std::min(ymin, 0.0);
  ymax = std::max(ymax, 0.0);
  const double cx = 0.5 * (xmin + xmax);
  const double cy = 0.5 * (ymin + ymax);
  const double half = 0.54 * std::max({xmax - xmin, ymax - ymin, 1.0});
  const double scale = (kSize - 2.0 * kPad) / (2.0 * half);
  const auto sx = [&](double x) { return kPad + (x - (cx - half)) * scale; };
  const auto sy = [&](double y) { return kSize - kPad - (y - (cy - half)) * scale; };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
       "viewBox=\"0 0 800 800\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s += "<title>" + std::string(short_name(id)) + " regions, beta = " + fixed(params.beta, 6) +
       "</title>\n";
  s += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";

  // axes with unit ticks
  s += "<g stroke=\"#888\" stroke-width=\"1\">\n";
  s += "<line x1=\"" + fixed(kPad) + "\" y1=\"" + fixed(sy(0.0)) + "\" x2=\"" +
       fixed(kSize - kPad) + "\" y2=\"" + fixed(sy(0.0)) + "\"/>\n";
  s += "<line x1=\"" + fixed(sx(0.0)) + "\" y1=\"" + fixed(kPad) + "\" x2=\"" + fixed(sx(0.0)) +
       "\" y2=\"" + fixed(kSize - kPad) + "\"/>\n";
  s += "</g>\n<g fill=\"#555\">\n";
  for (int i = static_cast<int>(std::ceil(cx - half)); i <= static_cast<int>(std::floor(cx + half));
       ++i) {
    s += "<text x=\"" + fixed(sx(i)) + "\" y=\"" + fixed(sy(0.0) + 14.0) +
         "\" text-anchor=\"middle\">" + std::to_string(i) + "</text>\n";
  }
  for (int i = static_cast<int>(std::ceil(cy - half)); i <= static_cast<int>(std::floor(cy + half));
       ++i) {
    if (i == 0) continue;
    s += "<text x=\"" + fixed(sx(0.0) - 6.0) + "\" y=\"" + fixed(sy(i) + 4.0) +
         "\" text-anchor=\"end\">" + std::to_string(i) + "i</text>\n";
  }
  s += "<text x=\"" + fixed(kSize - kPad) + "\" y=\"" + fixed(sy(0.0) - 6.0) +
       "\" text-anchor=\"end\">Re</text>\n";
  s += "<text x=\"" + fixed(sx(0.0) + 6.0) + "\" y=\"" + fixed(kPad + 10.0) + "\">Im</text>\n";
  s += "</g>\n";

  const double jump = 0.25 * 2.0 * half;
  for (const auto& l : layers) {
    s += "<g fill=\"none\" stroke=\"" + l.color + "\" stroke-width=\"1.5\"";
    if (!l.dash.empty()) s += " stroke-dasharray=\"" + l.dash + "\"";
    s += ">\n";
    std::string pts;
    std::optional<Complex> prev;
    const auto flush = [&] {
      if (pts.find(' ') != std::string::npos) s += "<polyline points=\"" + pts + "\"/>\n";
      pts.clear();
    };
    for (const auto& p : l.points) {
      if (!p || (prev && std::abs(*p - *prev) > jump)) flush();
      if (p) {
        if (!pts.empty()) pts += ' ';
        pts += fixed(sx(p->real())) + "," + fixed(sy(p->imag()));
      }
      prev = p;
    }
    flush();
    s += "</g>\n";
  }

  s += "<g>\n<rect x=\"50\" y=\"50\" width=\"330\" height=\"" +
       fixed(12.0 + 18.0 * static_cast<double>(layers.size()), 0) +
       "\" fill=\"white\" stroke=\"#ccc\"/>\n";
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const double y = 66.0 + 18.0 * static_cast<double>(i);
    s += "<line x1=\"58\" y1=\"" + fixed(y - 4.0) + "\" x2=\"86\" y2=\"" + fixed(y - 4.0) +
         "\" stroke=\"" + layers[i].color + "\" stroke-width=\"2\"";
    if (!layers[i].dash.empty()) s += " stroke-dasharray=\"" + layers[i].dash + "\"";
    s += "/>\n<text x=\"94\" y=\"" + fixed(y) + "\">" + layers[i].label + "</text>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace subord
