#include "polychora/formats.hpp"

#include "polychora/errors.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace polychora {

using nlohmann::json;
using nlohmann::ordered_json;

json quaternionToJson(const UnitQuaternion& q) { return json::array({q.w(), q.x(), q.y(), q.z()}); }

UnitQuaternion quaternionFromJson(const json& j) {
  if (!j.is_array() || j.size() != 4) throw FormatError("quaternion must be an array [w, x, y, z]");
  double c[4];
  for (int k = 0; k < 4; ++k) {
    if (!j[k].is_number()) throw FormatError("quaternion components must be numbers");
    c[k] = j[k].get<double>();
    if (!std::isfinite(c[k])) throw FormatError("quaternion components must be finite");
  }
  const double n = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]);
  if (!(n >= kMinIngestNorm && n <= kMaxIngestNorm))
    throw FormatError("quaternion norm " + std::to_string(n) + " outside [0.5, 2]");
  return {c[0], c[1], c[2], c[3]};
}

json polytopeToJson(const Polychoron& p) {
  json vertices = json::array();
  for (const Vec4& v : p.vertices) vertices.push_back({v.w, v.x, v.y, v.z});
  json edges = json::array();
  for (auto [a, b] : p.edges) edges.push_back({a, b});
  json centers = json::array();
  for (const auto& c : p.cellCenters) centers.push_back(quaternionToJson(c));
  json out;
  out["name"] = p.name;
  out["vertices"] = std::move(vertices);
  out["edges"] = std::move(edges);
  out["faces"] = p.faces;
  out["cells"] = p.cells;
  out["cellCenters"] = std::move(centers);
  return out;
}

json meshToJson(const ProjectedMesh& mesh, std::span<const ColorRGB> colors) {
  if (colors.size() != mesh.triangles.size()) throw InvalidArgument("one color per triangle required");
  json vertices = json::array();
  for (const Point3& v : mesh.vertices3) vertices.push_back({v.x, v.y, v.z});
  json triangles = json::array();
  for (const auto& t : mesh.triangles) triangles.push_back({t[0], t[1], t[2]});
  json cols = json::array();
  for (const auto& c : colors) cols.push_back({c.r, c.g, c.b});
  json out;
  out["vertices3"] = std::move(vertices);
  out["triangles"] = std::move(triangles);
  out["cellIds"] = mesh.cellIds;
  out["colors"] = std::move(cols);
  return out;
}

namespace {

std::string materialName(const std::array<std::uint8_t, 3>& rgb) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "c%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

void writeObj(std::ostream& obj, std::ostream& mtl, const std::string& mtlFileName,
              const ProjectedMesh& mesh, std::span<const ColorRGB> colors) {
  if (colors.size() != mesh.triangles.size()) throw InvalidArgument("one color per triangle required");

  std::map<std::string, std::array<std::uint8_t, 3>> materials;
  for (const auto& c : colors) {
    const auto rgb = to8bit(c);
    materials.emplace(materialName(rgb), rgb);
  }
  for (const auto& [name, rgb] : materials)
    mtl << "newmtl " << name << "\nKd " << number(rgb[0] / 255.0) << ' ' << number(rgb[1] / 255.0) << ' '
        << number(rgb[2] / 255.0) << "\n\n";

  obj << "mtllib " << mtlFileName << '\n';
  for (const Point3& v : mesh.vertices3) obj << "v " << number(v.x) << ' ' << number(v.y) << ' ' << number(v.z) << '\n';

  int group = -1;
  std::string material;
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    if (mesh.cellIds[t] != group) {
      group = mesh.cellIds[t];
      obj << "g cell_" << group << '\n';
      material.clear();
    }
    const std::string m = materialName(to8bit(colors[t]));
    if (m != material) {
      material = m;
      obj << "usemtl " << m << '\n';
    }
    const auto& tri = mesh.triangles[t];
    obj << "f " << tri[0] + 1 << ' ' << tri[1] + 1 << ' ' << tri[2] + 1 << '\n';
  }
}

void writeEventLog(std::ostream& out, std::span<const EatEvent> events) {
  for (const auto& e : events) {
    ordered_json line;
    line["t"] = e.t;
    line["cell"] = e.cell;
    line["pos"] = ordered_json::array({e.position.w(), e.position.x(), e.position.y(), e.position.z()});
    out << line.dump() << '\n';
  }
}

std::string eventLogToString(std::span<const EatEvent> events) {
  std::ostringstream os;
  writeEventLog(os, events);
  return os.str();
}

namespace {

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

std::vector<EatEvent> readEventLog(std::istream& in) {
  std::vector<EatEvent> out;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (blank(line)) continue;
    try {
      const json j = json::parse(line);
      EatEvent e;
      e.t = j.at("t").get<double>();
      e.cell = j.at("cell").get<int>();
      e.position = quaternionFromJson(j.at("pos"));
      out.push_back(e);
    } catch (const json::exception& ex) {
      throw FormatError(ex.what(), lineNo);
    } catch (const FormatError& ex) {
      throw FormatError(ex.what(), lineNo);
    }
  }
  return out;
}

void writeTrajectory(std::ostream& out, std::span<const TrajectorySample> samples) {
  for (const auto& s : samples) {
    ordered_json line;
    line["t"] = s.t;
    line["q"] = ordered_json::array({s.q.w(), s.q.x(), s.q.y(), s.q.z()});
    out << line.dump() << '\n';
  }
}

std::vector<TrajectorySample> readTrajectory(std::istream& in) {
  std::vector<TrajectorySample> out;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (blank(line)) continue;
    TrajectorySample s;
    try {
      const json j = json::parse(line);
      if (!j.is_object()) throw FormatError("expected an object {\"t\": ..., \"q\": [...]}");
      const json& t = j.at("t");
      if (!t.is_number()) throw FormatError("\"t\" must be a number");
      s.t = t.get<double>();
      s.q = quaternionFromJson(j.at("q"));
    } catch (const json::exception& ex) {
      throw FormatError(ex.what(), lineNo);
    } catch (const FormatError& ex) {
      throw FormatError(ex.what(), lineNo);
    }
    if (!std::isfinite(s.t)) throw FormatError("time is not finite", lineNo);
    if (!out.empty() && s.t < out.back().t) throw FormatError("time decreases", lineNo);
    out.push_back(s);
  }
  if (out.empty()) throw FormatError("trajectory has no samples");
  return out;
}

}  // namespace polychora
