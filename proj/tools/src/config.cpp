#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ftwave::cli {
namespace {

double number(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number()) throw CliError(kConfig, "config key '" + key + "' must be a number");
  return v.get<double>();
}

void apply_key(RunConfig& c, const std::string& key, const nlohmann::json& v) {
  if (key == "sigma") {
    c.params.sigma = number(v, key);
  } else if (key == "tau") {
    c.params.tau = number(v, key);
  } else if (key == "alpha") {
    c.params.alpha = number(v, key);
  } else if (key == "mu") {
    c.mu = number(v, key);
  } else if (key == "omega-min") {
    c.omega_min = number(v, key);
  } else if (key == "omega-max") {
    c.omega_max = number(v, key);
  } else if (key == "omega-step") {
    c.omega_step = number(v, key);
  } else if (key == "out") {
    if (!v.is_string()) throw CliError(kConfig, "config key 'out' must be a string");
    c.out_dir = v.get<std::string>();
  } else if (key == "format") {
    if (v.is_string()) {
      c.formats = parse_formats(v.get<std::string>());
    } else if (v.is_array()) {
      std::string joined;
      for (const auto& f : v) {
        if (!f.is_string()) throw CliError(kConfig, "config key 'format' holds a non-string");
        joined += (joined.empty() ? "" : ",") + f.get<std::string>();
      }
      c.formats = parse_formats(joined);
    } else {
      throw CliError(kConfig, "config key 'format' must be a string or an array");
    }
  } else if (key == "verify") {
    if (!v.is_boolean()) throw CliError(kConfig, "config key 'verify' must be a boolean");
    c.verify = v.get<bool>();
  } else if (key == "suite") {
    if (!v.is_string()) throw CliError(kConfig, "config key 'suite' must be a string");
    c.suite = v.get<std::string>();
  } else if (key == "grid.half-extent") {
    c.grid_half_extent = number(v, key);
  } else if (key == "grid.points") {
    if (!v.is_number_integer()) throw CliError(kConfig, "config key 'grid.points' must be an integer");
    c.grid_points = v.get<int>();
  } else if (key == "grid" && v.is_object()) {
    for (const auto& [sub, value] : v.items()) apply_key(c, "grid." + sub, value);
  } else {
    throw CliError(kConfig, "unknown config key '" + key + "'");
  }
}

}  // namespace

bool RunConfig::wants(const std::string& format) const {
  return std::find(formats.begin(), formats.end(), format) != formats.end();
}

std::vector<std::string> parse_formats(const std::string& list) {
  std::vector<std::string> out;
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item != "csv" && item != "json" && item != "svg") {
      throw CliError(kConfig, "unknown format '" + item + "' (expected csv, json, svg)");
    }
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  if (out.empty()) throw CliError(kConfig, "empty format list");
  return out;
}

void apply_json(RunConfig& config, const nlohmann::json& doc) {
  if (!doc.is_object()) throw CliError(kConfig, "config document must be a JSON object");
  for (const auto& [key, value] : doc.items()) apply_key(config, key, value);
}

nlohmann::json read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CliError(kConfig, "cannot read config file " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw CliError(kConfig, "config file " + path.string() + ": " + e.what());
  }
}

}  // namespace ftwave::cli
