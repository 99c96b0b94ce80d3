#pragma once

// SVG figure for one lemma: conclusion and premise region boundaries, the
// premise map h(e^{it}) and the premise-exact p(r e^{it}) for w(z) = z.

#include <string>

#include "subord/catalog.hpp"

namespace subord {

struct PlotOptions {
  std::size_t samples = 1024;
  double p_radius = 0.999;
  double clip = 8.0;  // points with |w| beyond this are dropped
};

/// 800x800 SVG document; identical inputs give identical bytes.
std::string render_svg(LemmaId id, const LemmaParams& params, const PlotOptions& opts = {});

}  // namespace subord
