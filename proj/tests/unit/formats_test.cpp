#include "polychora/errors.hpp"
#include "polychora/formats.hpp"
#include "polychora/game.hpp"
#include "polychora/hopf_color.hpp"
#include "polychora/trajectory.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cstring>
#include <numbers>
#include <set>
#include <sstream>

namespace polychora {
namespace {

using nlohmann::json;

TEST(QuaternionJson, RoundTripIsExact) {
  for (int n = 0; n < 200; ++n) {
    const UnitQuaternion q = testing::randomUnit();
    const json j = json::parse(quaternionToJson(q).dump());
    EXPECT_EQ(quaternionFromJson(j), q);
  }
  EXPECT_EQ(quaternionToJson(UnitQuaternion(0, 1, 0, 0)).dump(), "[0.0,1.0,0.0,0.0]");
}

TEST(QuaternionJson, IngestNormWindow) {
  EXPECT_EQ(quaternionFromJson(json::array({2, 0, 0, 0})), UnitQuaternion::identity());
  EXPECT_NO_THROW(quaternionFromJson(json::array({0.5, 0, 0, 0})));
  EXPECT_THROW(quaternionFromJson(json::array({0, 0, 0, 0})), FormatError);
  EXPECT_THROW(quaternionFromJson(json::array({0.49, 0, 0, 0})), FormatError);
  EXPECT_THROW(quaternionFromJson(json::array({2.01, 0, 0, 0})), FormatError);
}

TEST(QuaternionJson, RejectsMalformed) {
  EXPECT_THROW(quaternionFromJson(json::array({1, 0, 0})), FormatError);
  EXPECT_THROW(quaternionFromJson(json::array({1, 0, 0, 0, 0})), FormatError);
  EXPECT_THROW(quaternionFromJson(json::array({"1", 0, 0, 0})), FormatError);
  EXPECT_THROW(quaternionFromJson(json::object({{"w", 1}})), FormatError);
  EXPECT_THROW(quaternionFromJson(json(1.0)), FormatError);
}

TEST(PolytopeJson, CarriesCombinatorics) {
  const Polychoron& p = catalog(PolytopeKind::Cell24);
  const json j = polytopeToJson(p);
  EXPECT_EQ(j.at("name"), "24-cell");
  EXPECT_EQ(j.at("vertices").size(), 24u);
  EXPECT_EQ(j.at("edges").size(), 96u);
  EXPECT_EQ(j.at("faces").size(), 96u);
  EXPECT_EQ(j.at("cells").size(), 24u);
  EXPECT_EQ(j.at("cellCenters").size(), 24u);
  EXPECT_EQ(j.at("cells")[0].get<std::vector<int>>(), p.cells[0]);
  EXPECT_EQ(j.at("vertices")[3][2].get<double>(), p.vertices[3].y);
}

ProjectedMesh sampleMesh() {
  return projectMesh(tessellate(catalog(PolytopeKind::Cell5), 0), UnitQuaternion::identity(), {});
}

TEST(MeshJson, Schema) {
  const ProjectedMesh m = sampleMesh();
  const auto colors = colorMesh(m);
  const json j = meshToJson(m, colors);
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j.at("triangles").size(), 60u);
  EXPECT_EQ(j.at("cellIds").size(), 60u);
  EXPECT_EQ(j.at("colors").size(), 60u);
  EXPECT_EQ(j.at("vertices3").size(), m.vertices3.size());
  EXPECT_EQ(j.at("vertices3")[0].size(), 3u);
  for (const auto& c : j.at("colors"))
    for (const auto& v : c) {
      EXPECT_GE(v.get<double>(), 0.0);
      EXPECT_LE(v.get<double>(), 1.0);
    }
  const std::vector<ColorRGB> tooFew(3);
  EXPECT_THROW(meshToJson(m, tooFew), InvalidArgument);
}

TEST(Obj, GroupsAndMaterials) {
  const ProjectedMesh m = sampleMesh();
  const auto colors = colorMesh(m);
  std::ostringstream obj, mtl;
  writeObj(obj, mtl, "mesh.mtl", m, colors);
  std::istringstream in(obj.str());
  std::string line;
  std::size_t v = 0, f = 0, g = 0;
  std::getline(in, line);
  EXPECT_EQ(line, "mtllib mesh.mtl");
  while (std::getline(in, line)) {
    if (line.rfind("v ", 0) == 0) ++v;
    if (line.rfind("f ", 0) == 0) ++f;
    if (line.rfind("g cell_", 0) == 0) ++g;
  }
  EXPECT_EQ(v, m.vertices3.size());
  EXPECT_EQ(f, 60u);
  EXPECT_EQ(g, 5u);
  // every referenced material is defined
  std::istringstream objIn(obj.str()), mtlIn(mtl.str());
  std::set<std::string> used, defined;
  while (std::getline(objIn, line))
    if (line.rfind("usemtl ", 0) == 0) used.insert(line.substr(7));
  while (std::getline(mtlIn, line))
    if (line.rfind("newmtl ", 0) == 0) defined.insert(line.substr(7));
  EXPECT_FALSE(used.empty());
  EXPECT_EQ(used, defined);
}

TEST(EventLog, RoundTripIsBitExact) {
  Game g({PolytopeKind::Cell24});
  for (const auto& s : spinTrajectory({0.1, 0.7, -0.3}, 4 * std::numbers::pi, 0.01)) g.step(s.q, s.t);
  const auto& log = g.state().eventLog;
  ASSERT_GT(log.size(), 2u);
  const std::string text = eventLogToString(log);
  std::istringstream in(text);
  const auto back = readEventLog(in);
  ASSERT_EQ(back.size(), log.size());
  for (std::size_t k = 0; k < log.size(); ++k) {
    EXPECT_EQ(std::memcmp(&back[k].t, &log[k].t, sizeof(double)), 0);
    EXPECT_EQ(back[k].cell, log[k].cell);
    EXPECT_EQ(back[k].position, log[k].position);
  }
  EXPECT_EQ(eventLogToString(back), text);
}

TEST(EventLog, LineFormat) {
  const std::vector<EatEvent> events{{0.5, 3, UnitQuaternion::identity()}};
  EXPECT_EQ(eventLogToString(events), "{\"t\":0.5,\"cell\":3,\"pos\":[1.0,0.0,0.0,0.0]}\n");
}

TEST(EventLog, ReportsBadLine) {
  std::istringstream in("{\"t\":0.5,\"cell\":3,\"pos\":[1,0,0,0]}\n{\"t\":1}\n");
  try {
    readEventLog(in);
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Trajectory, RoundTrip) {
  const auto samples = spinTrajectory({1, 2, 3}, 1.0, 0.1);
  std::ostringstream out;
  writeTrajectory(out, samples);
  std::istringstream in(out.str());
  const auto back = readTrajectory(in);
  ASSERT_EQ(back.size(), samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k) {
    EXPECT_EQ(back[k].t, samples[k].t);
    EXPECT_EQ(back[k].q, samples[k].q);
  }
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "{\"t\":0.0,\"q\":[1.0,0.0,0.0,0.0]}");
}

TEST(Trajectory, SkipsBlankLinesAndAcceptsUnnormalized) {
  std::istringstream in("\n{\"t\":0,\"q\":[2,0,0,0]}\n   \n{\"t\":0.1,\"q\":[0,1.5,0,0]}\n");
  const auto s = readTrajectory(in);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].q, UnitQuaternion::identity());
  EXPECT_EQ(s[1].q, UnitQuaternion(0, 1, 0, 0));
}

std::size_t failingLine(const std::string& text) {
  std::istringstream in(text);
  try {
    readTrajectory(in);
  } catch (const FormatError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

TEST(Trajectory, ErrorsCarryLineNumbers) {
  const std::string good = "{\"t\":0,\"q\":[1,0,0,0]}\n";
  EXPECT_EQ(failingLine(good + "{\"t\":0.1,\"q\":[1,0,"), 2u);
  EXPECT_EQ(failingLine(good + "{\"t\":0.1}\n"), 2u);
  EXPECT_EQ(failingLine(good + good + "{\"t\":0.1,\"q\":[0,0,0,0]}\n"), 3u);
  EXPECT_EQ(failingLine(good + "{\"t\":\"x\",\"q\":[1,0,0,0]}\n"), 2u);
  EXPECT_EQ(failingLine(good + "[1,2]\n"), 2u);
  EXPECT_EQ(failingLine("{\"t\":1,\"q\":[1,0,0,0]}\n{\"t\":0.5,\"q\":[1,0,0,0]}\n"), 2u);
  EXPECT_EQ(failingLine(""), 0u);
  EXPECT_EQ(failingLine(good), static_cast<std::size_t>(-1));
}

}  // namespace
}  // namespace polychora
