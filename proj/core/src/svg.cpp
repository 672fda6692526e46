#include "evst/svg.hpp"

#include <ostream>

namespace evst {

SvgWriter::SvgWriter(std::ostream& os, int width, int height) : os_(os) {
  os_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void SvgWriter::rect(Real x, Real y, Real w, Real h, const std::string& fill) {
  os_ << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h
      << "\" fill=\"" << fill << "\"/>\n";
}

void SvgWriter::line(Real x1, Real y1, Real x2, Real y2, const std::string& stroke,
                     Real width) {
  os_ << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
      << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\"/>\n";
}

void SvgWriter::polyline(const std::vector<std::array<Real, 2>>& pts, const std::string& stroke,
                         Real width) {
  if (pts.empty()) return;
  os_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << width
      << "\" points=\"";
  for (const auto& p : pts) os_ << p[0] << ',' << p[1] << ' ';
  os_ << "\"/>\n";
}

void SvgWriter::text(Real x, Real y, const std::string& s) {
  os_ << "<text x=\"" << x << "\" y=\"" << y << "\" font-family=\"sans-serif\" font-size=\"12\">"
      << s << "</text>\n";
}

void SvgWriter::finish() {
  if (!finished_) {
    os_ << "</svg>\n";
    finished_ = true;
  }
}

}  // namespace evst
