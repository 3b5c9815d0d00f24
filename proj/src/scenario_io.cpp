#include "hexfluid/scenario_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "hexfluid/errors.hpp"

namespace hexfluid {

namespace {

struct PresetRow {
  const char* name;
  double tilt_deg, phi3_deg, theta3_deg, isd_m, height_m;
};

// phiTilt / phi3dB / theta3dB / ISD / h per built-in scenario.
constexpr PresetRow kPresets[] = {
    {"scenario1", 30.0, 10.0, 10.0, 500.0, 50.0},
    {"scenario2", 30.0, 10.0, 20.0, 750.0, 30.0},
    {"scenario3", 20.0, 10.0, 10.0, 750.0, 30.0},
    {"scenario4", 20.0, 10.0, 40.0, 750.0, 50.0},
    {"scenario5", 40.0, 30.0, 20.0, 750.0, 30.0},
    {"scenario6", 40.0, 10.0, 20.0, 200.0, 50.0},
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(const std::string& origin, std::size_t line_no,
                             const std::string& what) {
  std::ostringstream msg;
  msg << origin << ":" << line_no << ": " << what;
  throw ParseError(msg.str());
}

double to_double(const std::string& value, const std::string& key, const std::string& origin,
                 std::size_t line_no) {
  double out = 0.0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end || !std::isfinite(out))
    parse_fail(origin, line_no, "invalid number for '" + key + "': '" + value + "'");
  return out;
}

std::int64_t to_count(const std::string& value, const std::string& key, const std::string& origin,
                      std::size_t line_no) {
  const double v = to_double(value, key, origin, line_no);
  if (v < 0.0 || v > 9.0e18 || std::floor(v) != v)
    parse_fail(origin, line_no, "'" + key + "' must be a nonnegative integer, got '" + value + "'");
  return static_cast<std::int64_t>(v);
}

std::uint64_t to_u64(const std::string& value, const std::string& key, const std::string& origin,
                     std::size_t line_no) {
  std::uint64_t out = 0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end)
    parse_fail(origin, line_no, "'" + key + "' must be an unsigned integer, got '" + value + "'");
  return out;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const PresetRow& row : kPresets) names.emplace_back(row.name);
  return names;
}

bool is_preset(const std::string& name) {
  for (const PresetRow& row : kPresets)
    if (name == row.name) return true;
  return false;
}

Scenario preset_scenario(const std::string& name) {
  for (const PresetRow& row : kPresets) {
    if (name != row.name) continue;
    Scenario s;
    s.name = row.name;
    s.ant.am_db = 21.0;
    s.ant.theta3db = deg2rad(row.theta3_deg);
    s.ant.phi3db = deg2rad(row.phi3_deg);
    s.ant.phi_tilt = deg2rad(row.tilt_deg);
    s.ant.height_m = row.height_m;
    s.isd = row.isd_m;
    return s;
  }
  throw ValidationError("unknown preset '" + name + "'");
}

Scenario parse_scenario_text(const std::string& text, const std::string& origin) {
  struct Entry {
    std::string value;
    std::size_t line;
  };
  static const char* kKnownKeys[] = {
      "name",    "theta3dB",      "phi3dB",        "phiTilt", "Am",
      "height",  "isd",           "rings",         "samples", "seed",
      "mapResolution", "azimuthOffset", "txPower", "pathConstant",
      "pathExponent",  "noise",   "bandwidth",     "g0",
  };
  std::map<std::string, Entry> entries;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) parse_fail(origin, line_no, "expected 'key = value'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty()) parse_fail(origin, line_no, "expected 'key = value'");
    bool known = false;
    for (const char* k : kKnownKeys) known = known || key == k;
    if (!known) parse_fail(origin, line_no, "unknown key '" + key + "'");
    if (entries.count(key)) parse_fail(origin, line_no, "duplicate key '" + key + "'");
    entries.emplace(key, Entry{value, line_no});
  }

  Scenario s;
  s.name = std::filesystem::path(origin).stem().string();
  if (s.name.empty()) s.name = "scenario";
  s.ant.am_db = 21.0;
  bool has_noise = false;
  for (const auto& [key, entry] : entries) {
    const std::string& v = entry.value;
    const std::size_t ln = entry.line;
    if (key == "name") {
      s.name = v;
    } else if (key == "theta3dB") {
      s.ant.theta3db = deg2rad(to_double(v, key, origin, ln));
    } else if (key == "phi3dB") {
      s.ant.phi3db = deg2rad(to_double(v, key, origin, ln));
    } else if (key == "phiTilt") {
      s.ant.phi_tilt = deg2rad(to_double(v, key, origin, ln));
    } else if (key == "Am") {
      s.ant.am_db = to_double(v, key, origin, ln);
    } else if (key == "height") {
      s.ant.height_m = to_double(v, key, origin, ln);
    } else if (key == "isd") {
      s.isd = to_double(v, key, origin, ln);
    } else if (key == "rings") {
      s.rings = static_cast<int>(to_count(v, key, origin, ln));
    } else if (key == "samples") {
      s.samples = to_count(v, key, origin, ln);
    } else if (key == "seed") {
      s.seed = to_u64(v, key, origin, ln);
    } else if (key == "mapResolution") {
      s.map_resolution = to_double(v, key, origin, ln);
    } else if (key == "azimuthOffset") {
      s.azimuth_offset = deg2rad(to_double(v, key, origin, ln));
    } else if (key == "txPower") {
      s.radio.tx_power_w = to_double(v, key, origin, ln);
    } else if (key == "pathConstant") {
      s.radio.path_constant = to_double(v, key, origin, ln);
    } else if (key == "pathExponent") {
      s.radio.path_exponent = to_double(v, key, origin, ln);
    } else if (key == "noise") {
      s.radio.noise_w = to_double(v, key, origin, ln);
      has_noise = true;
    } else if (key == "bandwidth") {
      s.radio.bandwidth_hz = to_double(v, key, origin, ln);
    } else {  // g0
      s.radio.g0 = to_double(v, key, origin, ln);
      s.g0_is_override = true;
    }
  }
  if (!has_noise) s.radio.noise_w = thermal_noise_w(s.radio.bandwidth_hz);

  for (const char* required : {"theta3dB", "phi3dB", "phiTilt", "isd", "height"})
    if (!entries.count(required))
      throw ValidationError(origin + ": missing required key '" + std::string(required) + "'");

  validate_scenario(s);
  return s;
}

Scenario load_scenario(const std::string& path_or_preset) {
  if (is_preset(path_or_preset)) {
    Scenario s = preset_scenario(path_or_preset);
    validate_scenario(s);
    return s;
  }
  std::ifstream in(path_or_preset, std::ios::binary);
  if (!in) throw ParseError("cannot open scenario file '" + path_or_preset + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str(), path_or_preset);
}

void validate_scenario(const Scenario& s) {
  const auto fail = [](const std::string& what) { throw ValidationError(what); };
  if (!(s.ant.theta3db > 0.0)) fail("theta3dB must be > 0");
  if (!(s.ant.phi3db > 0.0)) fail("phi3dB must be > 0");
  if (!(s.ant.am_db > 0.0)) fail("Am must be > 0");
  if (!(s.ant.height_m > 0.0)) fail("height must be > 0");
  if (!(s.isd > 0.0)) fail("isd must be > 0");
  if (s.rings < 0) fail("rings must be >= 0");
  if (s.samples < 1) fail("samples must be >= 1");
  if (s.map_resolution < 0.0) fail("mapResolution must be > 0");
  if (!(s.radio.tx_power_w > 0.0)) fail("txPower must be > 0");
  if (!(s.radio.path_constant > 0.0)) fail("pathConstant must be > 0");
  if (!(s.radio.path_exponent > 2.0)) fail("pathExponent must be > 2");
  if (!(s.radio.noise_w >= 0.0)) fail("noise must be >= 0");
  if (!(s.radio.bandwidth_hz > 0.0)) fail("bandwidth must be > 0");
  if (s.g0_is_override && !(s.radio.g0 >= 1.0)) fail("g0 must be >= 1");
}

std::vector<std::string> scenario_warnings(const Scenario& s) {
  std::vector<std::string> warnings;
  if (!s.ant.valid_3d()) {
    std::ostringstream msg;
    msg << "phiTilt (" << rad2deg(s.ant.phi_tilt) << " deg) is below phi3dB ("
        << rad2deg(s.ant.phi3db)
        << " deg); the closed-form vertical approximation degrades in this regime";
    warnings.push_back(msg.str());
  }
  return warnings;
}

nlohmann::ordered_json scenario_to_json(const Scenario& s) {
  nlohmann::ordered_json j;
  j["name"] = s.name;
  j["theta3dB"] = rad2deg(s.ant.theta3db);
  j["phi3dB"] = rad2deg(s.ant.phi3db);
  j["phiTilt"] = rad2deg(s.ant.phi_tilt);
  j["Am"] = s.ant.am_db;
  j["height"] = s.ant.height_m;
  j["isd"] = s.isd;
  j["rings"] = s.rings;
  j["samples"] = s.samples;
  j["seed"] = s.seed;
  j["mapResolution"] = s.map_resolution;
  j["azimuthOffset"] = rad2deg(s.azimuth_offset);
  j["txPower"] = s.radio.tx_power_w;
  j["pathConstant"] = s.radio.path_constant;
  j["pathExponent"] = s.radio.path_exponent;
  j["noise"] = s.radio.noise_w;
  j["bandwidth"] = s.radio.bandwidth_hz;
  j["g0"] = s.radio.g0;
  j["g0Source"] = s.g0_is_override ? "override" : "computed";
  return j;
}

}  // namespace hexfluid
