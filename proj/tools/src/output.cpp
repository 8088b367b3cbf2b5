#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "config.hpp"

namespace ftwave::cli {
namespace {

void dump(const nlohmann::json& v, int depth, std::string& out) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  switch (v.type()) {
    case nlohmann::json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + nlohmann::json(key).dump() + ": ";
        dump(value, depth + 1, out);
      }
      out += "\n" + close + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump(v[i], depth + 1, out);
      }
      out += "\n" + close + "]";
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double d = v.get<double>();
      out += std::isfinite(d) ? format_double(d) : "null";
      return;
    }
    default:
      out += v.dump();
  }
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string dump_json(const nlohmann::json& doc) {
  std::string out;
  dump(doc, 0, out);
  out += "\n";
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw CliError(kIo, "cannot create directory " + path.parent_path().string());
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.close();
  if (!out) throw CliError(kIo, "cannot write " + path.string());
}

std::string render_svg(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<Series>& series) {
  constexpr double width = 640.0;
  constexpr double height = 420.0;
  constexpr double left = 70.0;
  constexpr double right = 20.0;
  constexpr double top = 40.0;
  constexpr double bottom = 50.0;
  double x0 = std::numeric_limits<double>::infinity();
  double x1 = -x0;
  double y0 = x0;
  double y1 = -x0;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  if (!(x1 > x0)) {
    x0 = std::isfinite(x0) ? x0 - 1.0 : 0.0;
    x1 = x0 + 2.0;
  }
  if (!(y1 > y0)) {
    y0 = std::isfinite(y0) ? y0 - 1.0 : 0.0;
    y1 = y0 + 2.0;
  }
  const auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * (width - left - right); };
  const auto py = [&](double y) { return height - bottom - (y - y0) / (y1 - y0) * (height - top - bottom); };

  std::ostringstream svg;
  char buf[128];
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\" viewBox=\"0 0 640 420\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"420\" style=\"fill:#ffffff\"/>\n";
  svg << "<text x=\"320\" y=\"24\" style=\"font:14px sans-serif;text-anchor:middle\">"
      << escape_xml(title) << "</text>\n";
  std::snprintf(buf, sizeof buf, "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" ",
                left, top, width - left - right, height - top - bottom);
  svg << buf << "style=\"fill:none;stroke:#444444;stroke-width:1\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4.0;
    const double yv = y0 + (y1 - y0) * i / 4.0;
    std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\" ", px(xv), height - bottom + 16.0);
    svg << buf << "style=\"font:10px sans-serif;text-anchor:middle\">" << format_double(xv).substr(0, 8)
        << "</text>\n";
    std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\" ", left - 6.0, py(yv) + 3.0);
    svg << buf << "style=\"font:10px sans-serif;text-anchor:end\">" << format_double(yv).substr(0, 8)
        << "</text>\n";
  }
  svg << "<text x=\"" << (left + width - right) / 2.0 << "\" y=\"" << height - 12.0
      << "\" style=\"font:12px sans-serif;text-anchor:middle\">" << escape_xml(x_label) << "</text>\n";
  svg << "<text x=\"16\" y=\"" << (top + height - bottom) / 2.0
      << "\" style=\"font:12px sans-serif;text-anchor:middle\" transform=\"rotate(-90 16 "
      << (top + height - bottom) / 2.0 << ")\">" << escape_xml(y_label) << "</text>\n";
  int legend = 0;
  for (const auto& s : series) {
    if (s.points.empty()) continue;
    svg << "<polyline style=\"fill:none;stroke:" << s.color << ";stroke-width:1.5\" points=\"";
    for (const auto& [x, y] : s.points) {
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(x), py(y));
      svg << buf;
    }
    svg << "\"/>\n";
    std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\" ", width - right - 8.0,
                  top + 16.0 + 14.0 * legend++);
    svg << buf << "style=\"font:11px sans-serif;text-anchor:end;fill:" << s.color << "\">"
        << escape_xml(s.label) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace ftwave::cli
