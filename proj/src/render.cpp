#include "mig/render.hpp"

#include "mig/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace mig {

RenderFormat render_format_from_string(const std::string &s) {
  if (s == "ascii")
    return RenderFormat::Ascii;
  if (s == "svg")
    return RenderFormat::Svg;
  throw Error(ErrorKind::InvalidArgument, "render format must be ascii or svg, got '" + s + "'");
}

namespace {

struct Bar {
  std::string label;
  Interval iv;
};

std::map<int, std::vector<Bar>> lanes(const IntervalFamily &f) {
  std::map<int, std::vector<Bar>> out;
  for (const auto &m : f.members)
    for (const auto &p : m.parts)
      out[p.track].push_back({m.label, p});
  return out;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::string escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else if (c == '&')
      out += "&amp;";
    else
      out += c;
  }
  return out;
}

} // namespace

std::string render_family(const IntervalFamily &f, RenderFormat format, int density) {
  const auto report = validate_family(f);
  if (!report.ok())
    throw Error(ErrorKind::InvalidFamily, report.summary());
  if (density <= 0)
    density = format == RenderFormat::Ascii ? 4 : 24;

  Rational origin = 0, extent = 0;
  bool first = true;
  std::size_t label_width = 0;
  for (const auto &m : f.members) {
    label_width = std::max(label_width, m.label.size());
    for (const auto &p : m.parts) {
      origin = first ? p.lo : min(origin, p.lo);
      extent = first ? p.hi : max(extent, p.hi);
      first = false;
    }
  }
  const auto by_track = lanes(f);
  std::ostringstream os;

  if (format == RenderFormat::Ascii) {
    os << "# family kind=" << to_string(f.kind) << " t=" << f.t << " members=" << f.members.size()
       << " parts=" << f.part_count() << "\n";
    os << "# scale: " << density << " characters per unit, origin " << origin << "\n";
    auto column = [&](const Rational &x) {
      return static_cast<std::size_t>(std::floor(((x - origin) * Rational(density)).to_double()));
    };
    for (const auto &[track, bars] : by_track) {
      os << "track " << track << "\n";
      for (const auto &b : bars) {
        const std::size_t lo = column(b.iv.lo), hi = std::max(column(b.iv.hi), lo + 1);
        os << b.label << std::string(label_width - b.label.size(), ' ') << " |" << std::string(lo, ' ')
           << std::string(hi - lo, '=') << " (" << b.iv.lo << ", " << b.iv.hi << ")\n";
      }
    }
    return os.str();
  }

  const double margin = 8.0 * static_cast<double>(label_width) + 16.0, bar_h = 12.0, pitch = 16.0;
  std::size_t rows = 0;
  for (const auto &[track, bars] : by_track)
    rows += bars.size() + 1;
  const double width = margin + ((extent - origin) * Rational(density)).to_double() + 16.0;
  const double height = pitch * static_cast<double>(rows) + 32.0;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
     << "\" font-family=\"monospace\" font-size=\"10\">\n";
  os << "<desc>family kind=" << to_string(f.kind) << " t=" << f.t << " members=" << f.members.size()
     << " parts=" << f.part_count() << " density=" << density << "px/unit origin=" << origin << "</desc>\n";
  double y = 16.0;
  for (const auto &[track, bars] : by_track) {
    os << "<g class=\"lane\" data-track=\"" << track << "\">\n";
    os << "<text x=\"4\" y=\"" << fmt(y + 10) << "\">track " << track << "</text>\n";
    y += pitch;
    for (const auto &b : bars) {
      const double x0 = margin + ((b.iv.lo - origin) * Rational(density)).to_double();
      const double w = (b.iv.length() * Rational(density)).to_double();
      os << "<rect class=\"bar\" x=\"" << fmt(x0) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(w)
         << "\" height=\"" << fmt(bar_h) << "\" fill=\"#9ecae1\" stroke=\"#3182bd\"><title>" << escape(b.label)
         << " (" << b.iv.lo << ", " << b.iv.hi << ")</title></rect>\n";
      os << "<text x=\"4\" y=\"" << fmt(y + 10) << "\">" << escape(b.label) << "</text>\n";
      y += pitch;
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

} // namespace mig
