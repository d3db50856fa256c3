// Copyright 2026 The mathprint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mathprint/catalog.hpp"
#include "mathprint/io.hpp"
#include "mathprint/validate.hpp"

namespace mathprint::cli {

enum Exit : int { kOk = 0, kInputError = 1, kValidationWarning = 2 };

enum class Format { StlAscii, StlBinary, Obj, Scad };

inline std::optional<Format> parse_format(const std::string& s) {
  if (s == "stl-ascii") return Format::StlAscii;
  if (s == "stl-binary") return Format::StlBinary;
  if (s == "obj") return Format::Obj;
  if (s == "scad") return Format::Scad;
  return std::nullopt;
}

inline const char* format_name(Format f) {
  switch (f) {
    case Format::StlAscii: return "stl-ascii";
    case Format::StlBinary: return "stl-binary";
    case Format::Obj: return "obj";
    case Format::Scad: return "scad";
  }
  return "?";
}

/// Settings from an explicit --config file.
struct CliConfig {
  std::optional<int> resolution;  // applied to scenes with a resolution parameter
  double weld_tol = kDefaultWeldTolerance;
  std::optional<Format> format;
  ParamOverrides params;
};

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

/// key=value lines; '#' starts a comment. Keys: resolution, weld_tol,
/// format, param.<name>.
inline CliConfig parse_config(const std::string& text, const std::string& label) {
  CliConfig c;
  std::istringstream in(text);
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto where = label + ":" + std::to_string(n) + ": ";
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError(where + "expected key=value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "resolution") {
      int v = 0;
      const auto r = std::from_chars(value.data(), value.data() + value.size(), v);
      if (r.ec != std::errc() || r.ptr != value.data() + value.size() || v < 2)
        throw InputError(where + "resolution must be an integer >= 2");
      c.resolution = v;
    } else if (key == "weld_tol") {
      double v = 0;
      const auto r = std::from_chars(value.data(), value.data() + value.size(), v);
      if (r.ec != std::errc() || r.ptr != value.data() + value.size() || !(v > 0) ||
          !std::isfinite(v))
        throw InputError(where + "weld_tol must be a positive number");
      c.weld_tol = v;
    } else if (key == "format") {
      c.format = parse_format(value);
      if (!c.format)
        throw InputError(where + "format must be stl-ascii, stl-binary, obj or scad");
    } else if (key.rfind("param.", 0) == 0 && key.size() > 6) {
      c.params[key.substr(6)] = value;
    } else {
      throw InputError(where + "unknown key '" + key + "'");
    }
  }
  return c;
}

inline CliConfig load_config(const std::string& path) {
  if (path.empty()) return {};
  return parse_config(io::read_file(path), path);
}

/// Config text that reproduces a scene's defaults.
inline std::string defaults_config(const SceneSpec& s) {
  std::string out = "# " + s.name + ": " + s.description + "\nformat = stl-binary\n";
  for (const auto& p : s.params) out += "param." + p.name + " = " + p.default_value + "\n";
  return out;
}

/// Output format: explicit choice, else the extension (.stl is binary
/// unless `ascii`).
inline Format output_format(const std::string& path, std::optional<Format> chosen, bool ascii) {
  if (chosen) return *chosen;
  std::string ext = std::filesystem::path(path).extension().string();
  for (auto& ch : ext) ch = char(std::tolower(static_cast<unsigned char>(ch)));
  if (ext == ".stl") return ascii ? Format::StlAscii : Format::StlBinary;
  if (ext == ".obj") return Format::Obj;
  if (ext == ".scad") return Format::Scad;
  throw InputError("cannot infer output format from '" + path +
                   "'; use .stl, .obj or .scad (or --format)");
}

inline std::string encode(const IndexedMesh& m, Format f, const std::string& solid_name) {
  switch (f) {
    case Format::StlAscii: return io::write_stl_ascii(m, solid_name);
    case Format::StlBinary: return io::write_stl_binary(m);
    case Format::Obj: return io::write_obj(m);
    case Format::Scad: return io::write_scad(m);
  }
  return {};
}

inline std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

inline nlohmann::ordered_json report_json(const MeshReport& r) {
  nlohmann::ordered_json j;
  j["vertices"] = r.vertices;
  j["faces"] = r.faces;
  j["welded_vertices"] = r.welded_vertices;
  j["edges"] = r.edges;
  j["boundary_edges"] = r.boundary_edges;
  j["non_manifold_edges"] = r.non_manifold_edges;
  j["degenerate_faces"] = r.degenerate_faces;
  j["components"] = r.components;
  j["orientation_consistent"] = r.orientation_consistent;
  j["watertight"] = r.watertight;
  j["euler_characteristic"] =
      r.euler_characteristic ? nlohmann::ordered_json(*r.euler_characteristic) : nullptr;
  j["surface_area"] = r.surface_area;
  j["signed_volume"] = r.signed_volume ? nlohmann::ordered_json(*r.signed_volume) : nullptr;
  j["total_curvature"] =
      r.total_curvature ? nlohmann::ordered_json(*r.total_curvature) : nullptr;
  return j;
}

/// One "key: value" line per report field.
inline std::vector<std::pair<std::string, std::string>> report_lines(const MeshReport& r) {
  auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
  auto opt = [](const auto& o) { return o ? num(double(*o)) : std::string("n/a"); };
  return {{"vertices", std::to_string(r.vertices)},
          {"faces", std::to_string(r.faces)},
          {"welded_vertices", std::to_string(r.welded_vertices)},
          {"edges", std::to_string(r.edges)},
          {"boundary_edges", std::to_string(r.boundary_edges)},
          {"non_manifold_edges", std::to_string(r.non_manifold_edges)},
          {"degenerate_faces", std::to_string(r.degenerate_faces)},
          {"components", std::to_string(r.components)},
          {"orientation_consistent", yes(r.orientation_consistent)},
          {"watertight", yes(r.watertight)},
          {"euler_characteristic", opt(r.euler_characteristic)},
          {"surface_area", num(r.surface_area)},
          {"signed_volume", opt(r.signed_volume)},
          {"total_curvature", opt(r.total_curvature)}};
}

inline void print_report(std::ostream& out, const MeshReport& r) {
  for (const auto& [k, v] : report_lines(r)) out << k << ": " << v << "\n";
}

/// Fields that differ, as "key: before -> after".
inline void print_report_diff(std::ostream& out, const MeshReport& a, const MeshReport& b) {
  const auto la = report_lines(a), lb = report_lines(b);
  for (std::size_t i = 0; i < la.size(); ++i)
    out << la[i].first << ": " << la[i].second
        << (la[i].second == lb[i].second ? "" : " -> " + lb[i].second) << "\n";
}

inline nlohmann::ordered_json repair_json(const RepairResult& r) {
  nlohmann::ordered_json j;
  j["merged_vertices"] = r.merged_vertices;
  j["dropped_degenerate"] = r.dropped_degenerate;
  j["dropped_duplicate"] = r.dropped_duplicate;
  j["flipped_faces"] = r.flipped_faces;
  j["non_orientable_components"] = r.non_orientable_components;
  j["holes_filled"] = r.holes_filled;
  j["holes_left"] = r.holes_left;
  j["open_boundary_edges"] = r.open_boundary_edges;
  j["reversed_components"] = r.reversed_components;
  j["log"] = r.log;
  return j;
}

inline bool is_valid_solid(const MeshReport& r) {
  return r.watertight && r.orientation_consistent;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
};

/// Repairs, writes and reports a generated or converted mesh. Returns the
/// exit code: 2 when the written mesh is not a valid solid.
inline int finish(Context& c, nlohmann::ordered_json j, const IndexedMesh& before,
                  const RepairResult& fixed, const std::string& path, Format f,
                  const std::string& solid_name, double weld_tol) {
  io::write_file_atomic(path, encode(fixed.mesh, f, solid_name));
  const MeshReport rb = analyze(before, weld_tol), ra = analyze(fixed.mesh, weld_tol);
  const bool ok = is_valid_solid(ra) && fixed.non_orientable_components == 0;
  if (c.json) {
    j["output"] = path;
    j["format"] = format_name(f);
    j["before"] = report_json(rb);
    j["repair"] = repair_json(fixed);
    j["report"] = report_json(ra);
    j["status"] = ok ? "ok" : "warning";
    c.out << j.dump(2) << "\n";
  } else {
    c.out << "wrote " << path << " (" << format_name(f) << ")\n";
    for (const auto& line : fixed.log) c.out << "repair: " << line << "\n";
    print_report_diff(c.out, rb, ra);
  }
  if (!ok) c.err << "warning: " << path << " is not a watertight, consistently oriented solid\n";
  return ok ? kOk : kValidationWarning;
}

inline int cmd_list(Context& c) {
  const auto scenes = list_scenes();
  if (c.json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& s : scenes) {
      nlohmann::ordered_json js;
      js["name"] = s.name;
      js["description"] = s.description;
      js["closed"] = s.closed;
      js["params"] = nlohmann::ordered_json::array();
      for (const auto& p : s.params) {
        nlohmann::ordered_json jp;
        jp["name"] = p.name;
        jp["type"] = p.type == ParamType::Real      ? "real"
                     : p.type == ParamType::Integer ? "integer"
                                                    : "text";
        jp["default"] = p.default_value;
        if (p.type != ParamType::Text) {
          jp["min"] = p.min;
          jp["max"] = p.max;
        }
        jp["help"] = p.help;
        js["params"].push_back(jp);
      }
      arr.push_back(js);
    }
    c.out << arr.dump(2) << "\n";
    return kOk;
  }
  for (const auto& s : scenes) {
    c.out << s.name;
    for (const auto& p : s.params) c.out << " " << p.name << "=" << p.default_value;
    c.out << "  # " << s.description << "\n";
  }
  return kOk;
}

struct GenArgs {
  std::string scene, output, format, config;
  std::vector<std::string> params;
};

inline int cmd_gen(Context& c, const GenArgs& a) {
  const CliConfig cfg = load_config(a.config);
  const SceneSpec& spec = scene_spec(a.scene);
  ParamOverrides overrides;
  if (cfg.resolution && spec.find("resolution"))
    overrides["resolution"] = std::to_string(*cfg.resolution);
  for (const auto& [k, v] : cfg.params) overrides[k] = v;
  for (const auto& kv : a.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw InputError("--param expects key=value, got '" + kv + "'");
    overrides[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  std::optional<Format> chosen = cfg.format;
  if (!a.format.empty()) chosen = parse_format(a.format);
  const Format f = output_format(a.output, chosen, false);

  const IndexedMesh mesh = build_scene(a.scene, overrides);
  const RepairResult fixed = repair(mesh, {cfg.weld_tol});
  nlohmann::ordered_json j;
  j["scene"] = a.scene;
  nlohmann::ordered_json jp = nlohmann::ordered_json::object();
  for (const auto& [k, v] : overrides) jp[k] = v;
  j["params"] = jp;
  if (!c.json) c.out << "scene: " << a.scene << "\n";
  return finish(c, j, mesh, fixed, a.output, f, a.scene, cfg.weld_tol);
}

struct FileArgs {
  std::string input, output, config;
  bool ascii = false;
};

inline std::string solid_name_for(const std::string& path) {
  const auto stem = std::filesystem::path(path).stem().string();
  return stem.empty() ? "mathprint" : stem;
}

inline int cmd_convert(Context& c, const FileArgs& a) {
  const CliConfig cfg = load_config(a.config);
  const Format f = output_format(a.output, std::nullopt, a.ascii);
  const IndexedMesh m = io::read_stl(io::read_file(a.input), cfg.weld_tol);
  io::write_file_atomic(a.output, encode(m, f, solid_name_for(a.output)));
  if (c.json) {
    nlohmann::ordered_json j;
    j["input"] = a.input;
    j["output"] = a.output;
    j["format"] = format_name(f);
    j["vertices"] = m.vertices.size();
    j["faces"] = m.faces.size();
    c.out << j.dump(2) << "\n";
  } else {
    c.out << "wrote " << a.output << " (" << format_name(f) << ", " << m.vertices.size()
          << " vertices, " << m.faces.size() << " faces)\n";
  }
  return kOk;
}

inline int cmd_check(Context& c, const FileArgs& a) {
  const CliConfig cfg = load_config(a.config);
  const IndexedMesh m = io::read_stl(io::read_file(a.input), cfg.weld_tol);
  const MeshReport r = analyze(m, cfg.weld_tol);
  if (c.json) {
    auto j = report_json(r);
    j["status"] = is_valid_solid(r) ? "ok" : "warning";
    c.out << j.dump(2) << "\n";
  } else {
    c.out << "file: " << a.input << "\n";
    print_report(c.out, r);
  }
  return is_valid_solid(r) ? kOk : kValidationWarning;
}

inline int cmd_repair(Context& c, const FileArgs& a) {
  const CliConfig cfg = load_config(a.config);
  const Format f = output_format(a.output, std::nullopt, a.ascii);
  const IndexedMesh m = io::read_stl(io::read_file(a.input), cfg.weld_tol);
  nlohmann::ordered_json j;
  j["input"] = a.input;
  return finish(c, j, m, repair(m, {cfg.weld_tol}), a.output, f, solid_name_for(a.output),
                cfg.weld_tol);
}

struct HeightArgs {
  FileArgs files;
  PgmOptions pgm;
};

inline int cmd_heightfield(Context& c, const HeightArgs& a) {
  const CliConfig cfg = load_config(a.files.config);
  const Format f = output_format(a.files.output, cfg.format, a.files.ascii);
  const IndexedMesh m = heightfield_to_mesh(io::read_pgm(io::read_file(a.files.input), a.pgm));
  nlohmann::ordered_json j;
  j["input"] = a.files.input;
  return finish(c, j, m, repair(m, {cfg.weld_tol}), a.files.output, f,
                solid_name_for(a.files.output), cfg.weld_tol);
}

/// Runs one command. `args` excludes the program name. Returns the exit
/// code: 0 success, 1 input or usage error, 2 validation warning.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generate, convert, check and repair printable meshes.", "mathprint"};
  app.require_subcommand(1);
  Context c{out, err};

  auto* list = app.add_subcommand("list", "List scenes with their default parameters");
  list->add_flag("--json", c.json, "Machine-readable output");

  GenArgs g;
  auto* gen = app.add_subcommand("gen", "Build a scene, repair it and write it");
  gen->add_option("scene", g.scene, "Scene name (see list)")->required();
  gen->add_option("-o,--output", g.output, "Output path")->required();
  gen->add_option("--format", g.format, "stl-ascii, stl-binary, obj or scad (default: from extension)")
      ->check(CLI::IsMember({"stl-ascii", "stl-binary", "obj", "scad"}));
  gen->add_option("--param", g.params, "Scene parameter key=value (repeatable)");
  gen->add_option("--config", g.config, "key=value config file");
  gen->add_flag("--json", c.json, "Machine-readable report");

  std::string defaults_scene;
  auto* defaults = app.add_subcommand("defaults", "Print a config file holding a scene's defaults");
  defaults->add_option("scene", defaults_scene, "Scene name")->required();

  FileArgs conv, chk, rep;
  auto file_cmd = [&](const char* name, const char* help, FileArgs& fa, bool has_output) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("input", fa.input, "Input STL")->required();
    if (has_output) {
      s->add_option("output", fa.output, "Output path (.stl, .obj or .scad)")->required();
      s->add_flag("--ascii", fa.ascii, "Write ASCII STL for .stl outputs");
    }
    s->add_option("--config", fa.config, "key=value config file");
    s->add_flag("--json", c.json, "Machine-readable report");
    return s;
  };
  auto* convert = file_cmd("convert", "Convert an STL to another format", conv, true);
  auto* check = file_cmd("check", "Report mesh validity; exit 2 unless a valid solid", chk, false);
  auto* rep_cmd = file_cmd("repair", "Weld, clean, orient and close a mesh", rep, true);

  HeightArgs h;
  auto* height = app.add_subcommand("heightfield", "Turn a PGM image into a terrain solid");
  height->add_option("input", h.files.input, "Input PGM (P2 or P5)")->required();
  height->add_option("output", h.files.output, "Output path")->required();
  height->add_option("--pitch", h.pgm.pitch, "Grid spacing")->check(CLI::PositiveNumber);
  height->add_option("--z-scale", h.pgm.z_scale, "Height per unit of sample/maxval")
      ->check(CLI::PositiveNumber);
  height->add_option("--base", h.pgm.base, "Height of the flat bottom");
  height->add_flag("--ascii", h.files.ascii, "Write ASCII STL for .stl outputs");
  height->add_option("--config", h.files.config, "key=value config file");
  height->add_flag("--json", c.json, "Machine-readable report");

  std::vector<std::string> argv_store{"mathprint"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*list) return cmd_list(c);
    if (*gen) return cmd_gen(c, g);
    if (*defaults) {
      out << defaults_config(scene_spec(defaults_scene));
      return kOk;
    }
    if (*convert) return cmd_convert(c, conv);
    if (*check) return cmd_check(c, chk);
    if (*rep_cmd) return cmd_repair(c, rep);
    if (*height) return cmd_heightfield(c, h);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace mathprint::cli
