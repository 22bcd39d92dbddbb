#pragma once

#include "fuchsian/construct.hpp"

namespace fuchsian {

struct RenderSpec {
  Rational xmin = 0;
  Rational xmax = 1;
  int width = 800;
  int height = 400;
  bool labels = true;

  /// Viewport covering the whole polygon with one unit of margin.
  static RenderSpec fit(const GroupBlueprint& b);
};

/// Upper half-plane picture: one solid arc or vertical ray per polygon edge,
/// one dashed arc per hyperbolic axis, a marker per rotation center.
/// Byte-deterministic for a fixed blueprint and spec.
std::string render_svg(const GroupBlueprint& b, const RenderSpec& spec);

}  // namespace fuchsian
