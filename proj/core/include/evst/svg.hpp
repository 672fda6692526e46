#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "evst/types.hpp"

namespace evst {

/// Minimal hand-rolled SVG emitter: rects, lines, polylines, text.
class SvgWriter {
 public:
  SvgWriter(std::ostream& os, int width, int height);
  void rect(Real x, Real y, Real w, Real h, const std::string& fill);
  void line(Real x1, Real y1, Real x2, Real y2, const std::string& stroke, Real width);
  void polyline(const std::vector<std::array<Real, 2>>& pts, const std::string& stroke,
                Real width);
  void text(Real x, Real y, const std::string& s);
  void finish();

 private:
  std::ostream& os_;
  bool finished_{false};
};

}  // namespace evst
