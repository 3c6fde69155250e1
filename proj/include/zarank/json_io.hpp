#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "zarank/certificates.hpp"
#include "zarank/geom.hpp"

namespace zarank::io {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Instances: {"class": "<tag>", "u": [<object>...], "v": [<object>...]},
// objects as {"kind": "hseg", "x": [lo,hi], "y": y} and friends; all numbers
// are integers. Factor files carry optional "u_ids"/"v_ids".
// ---------------------------------------------------------------------------

inline json object_to_json(const geom_object& o) {
  json j;
  j["kind"] = kind_name(o);
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, point1>) {
          j["x"] = v.x;
        } else if constexpr (std::is_same_v<T, right_ray>) {
          j["x_start"] = v.x_start;
        } else if constexpr (std::is_same_v<T, interval>) {
          j["x"] = {v.lo, v.hi};
        } else if constexpr (std::is_same_v<T, point2>) {
          j["x"] = v.x;
          j["y"] = v.y;
        } else if constexpr (std::is_same_v<T, up_ray>) {
          j["x"] = v.x;
          j["y_start"] = v.y_start;
        } else if constexpr (std::is_same_v<T, hsegment>) {
          j["x"] = {v.x_lo, v.x_hi};
          j["y"] = v.y;
        } else if constexpr (std::is_same_v<T, vsegment>) {
          j["x"] = v.x;
          j["y"] = {v.y_lo, v.y_hi};
        } else if constexpr (std::is_same_v<T, bottomless_rect>) {
          j["x"] = {v.x_lo, v.x_hi};
          j["y_top"] = v.y_top;
        } else {
          j["x"] = {v.x_lo, v.x_hi};
          j["y"] = {v.y_lo, v.y_hi};
        }
      },
      o);
  return j;
}

namespace detail_ {

inline coord get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw std::runtime_error(std::string("object missing integer field '") + key + "'");
  return j[key].get<coord>();
}

inline std::pair<coord, coord> get_span(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != 2 ||
      !j[key][0].is_number_integer() || !j[key][1].is_number_integer())
    throw std::runtime_error(std::string("object field '") + key +
                             "' must be a two-integer array");
  return {j[key][0].get<coord>(), j[key][1].get<coord>()};
}

}  // namespace detail_

inline geom_object object_from_json(const json& j) {
  if (!j.contains("kind") || !j["kind"].is_string())
    throw std::runtime_error("object missing string field 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  using namespace detail_;
  if (kind == "point") return point1{get_int(j, "x")};
  if (kind == "rray") return right_ray{get_int(j, "x_start")};
  if (kind == "interval") {
    auto [lo, hi] = get_span(j, "x");
    return interval{lo, hi};
  }
  if (kind == "point2") return point2{get_int(j, "x"), get_int(j, "y")};
  if (kind == "uray") return up_ray{get_int(j, "x"), get_int(j, "y_start")};
  if (kind == "hseg") {
    auto [lo, hi] = get_span(j, "x");
    return hsegment{lo, hi, get_int(j, "y")};
  }
  if (kind == "vseg") {
    auto [lo, hi] = get_span(j, "y");
    return vsegment{get_int(j, "x"), lo, hi};
  }
  if (kind == "brect") {
    auto [lo, hi] = get_span(j, "x");
    return bottomless_rect{lo, hi, get_int(j, "y_top")};
  }
  if (kind == "rect") {
    auto [xlo, xhi] = get_span(j, "x");
    auto [ylo, yhi] = get_span(j, "y");
    return rect_obj{xlo, xhi, ylo, yhi};
  }
  throw std::runtime_error("unknown object kind: " + kind);
}

struct parsed_instance {
  representation rep;
  std::optional<std::vector<int>> u_ids;
  std::optional<std::vector<int>> v_ids;
};

inline json instance_to_json(const representation& rep,
                             const std::vector<int>* u_ids = nullptr,
                             const std::vector<int>* v_ids = nullptr) {
  json j;
  j["class"] = to_string(rep.cls);
  j["u"] = json::array();
  for (const auto& o : rep.u_objects) j["u"].push_back(object_to_json(o));
  j["v"] = json::array();
  for (const auto& o : rep.v_objects) j["v"].push_back(object_to_json(o));
  if (u_ids) j["u_ids"] = *u_ids;
  if (v_ids) j["v_ids"] = *v_ids;
  return j;
}

inline parsed_instance instance_from_json(const json& j) {
  if (!j.contains("class") || !j["class"].is_string())
    throw std::runtime_error("instance missing string field 'class'");
  parsed_instance out;
  out.rep.cls = parse_rep_class(j["class"].get<std::string>());
  for (const char* side : {"u", "v"}) {
    if (!j.contains(side) || !j[side].is_array())
      throw std::runtime_error(std::string("instance missing array field '") + side + "'");
    auto& objs = side[0] == 'u' ? out.rep.u_objects : out.rep.v_objects;
    for (const auto& jo : j[side]) objs.push_back(object_from_json(jo));
  }
  if (j.contains("u_ids")) out.u_ids = j["u_ids"].get<std::vector<int>>();
  if (j.contains("v_ids")) out.v_ids = j["v_ids"].get<std::vector<int>>();
  return out;
}

// ---------------------------------------------------------------------------
// Certificates: {"kind": "within_bound"|"biclique", "bound": int,
// "steps": [[vertex, degree]...], "tally": {...}, "witness": {"u":..,"v":..},
// "extraction_stage": 1|2|3|null}
// ---------------------------------------------------------------------------

inline json certificate_to_json(const certificate& c) {
  json j;
  if (c.is_within_bound()) {
    const auto& wb = c.bound();
    j["kind"] = "within_bound";
    j["bound"] = wb.bound_value;
    if (wb.elimination) {
      j["steps"] = json::array();
      for (const auto& s : wb.elimination->steps) j["steps"].push_back({s.vertex, s.degree});
      j["claimed_degeneracy"] = wb.elimination->claimed_degeneracy;
    }
    if (wb.tally) {
      j["tally"] = json{{"bulky", wb.tally->bulky_edges}, {"thin", wb.tally->thin_edges}};
    }
  } else {
    const auto& w = c.witness();
    j["kind"] = "biclique";
    j["witness"] = json{{"u", w.u_vertices}, {"v", w.v_vertices}};
  }
  j["extraction_stage"] = c.extraction_stage ? json(*c.extraction_stage) : json(nullptr);
  return j;
}

inline certificate certificate_from_json(const json& j) {
  certificate c;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "within_bound") {
    within_bound_certificate wb;
    wb.bound_value = j.at("bound").get<long long>();
    if (j.contains("steps")) {
      elimination_certificate ec;
      for (const auto& s : j["steps"])
        ec.steps.push_back({s[0].get<int>(), s[1].get<int>()});
      ec.claimed_degeneracy = j.value("claimed_degeneracy", 0);
      wb.elimination = std::move(ec);
    }
    if (j.contains("tally"))
      wb.tally = chain3_tally{j["tally"].at("bulky").get<long long>(),
                              j["tally"].at("thin").get<long long>()};
    c.value = std::move(wb);
  } else if (kind == "biclique") {
    biclique_witness w;
    w.u_vertices = j.at("witness").at("u").get<std::vector<int>>();
    w.v_vertices = j.at("witness").at("v").get<std::vector<int>>();
    c.value = std::move(w);
  } else {
    throw std::runtime_error("unknown certificate kind: " + kind);
  }
  if (j.contains("extraction_stage") && !j["extraction_stage"].is_null())
    c.extraction_stage = j["extraction_stage"].get<int>();
  return c;
}

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes via a temporary then renames, so readers never observe a partial
// file.
inline void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

inline parsed_instance read_instance(const std::string& path) {
  return instance_from_json(json::parse(read_file(path)));
}

inline void write_instance(const std::string& path, const representation& rep,
                           const std::vector<int>* u_ids = nullptr,
                           const std::vector<int>* v_ids = nullptr) {
  write_file_atomic(path, instance_to_json(rep, u_ids, v_ids).dump(2) + "\n");
}

inline void write_certificate(const std::string& path, const certificate& c) {
  write_file_atomic(path, certificate_to_json(c).dump(2) + "\n");
}

}  // namespace zarank::io
