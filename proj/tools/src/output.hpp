#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace ftwave::cli {

/// 17 significant digits.
std::string format_double(double v);

/// Sorted keys, two-space indent, doubles through format_double.
std::string dump_json(const nlohmann::json& doc);

/// Writes a file, creating parent directories; throws CliError(kIo).
void write_text(const std::filesystem::path& path, const std::string& content);

struct Series {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> points;
};

/// Self-contained line plot.
std::string render_svg(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<Series>& series);

}  // namespace ftwave::cli
