#include "cli.hpp"

#include "../service/http.hpp"
#include "../service/service.hpp"

#include "polychora/errors.hpp"
#include "polychora/formats.hpp"
#include "polychora/game.hpp"
#include "polychora/hopf_color.hpp"
#include "polychora/projection.hpp"

#include <CLI11.hpp>
#include <httplib.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

namespace polychora::cli {

namespace {

constexpr double kSpinStep = 0.01;
constexpr Vec3 kSpinAxis{0, 0, 1};

struct IoFailure : Error {
  using Error::Error;
};

struct Options {
  std::string polytope;
  std::string positional;
  std::string format = "json";
  std::optional<int> subdiv;
  std::string transform = "1,0,0,0";
  std::string trajectory = "nn-tour";
  std::string out;
  std::optional<double> eatRadius;
  long long timeLimitMs = kDefaultHamiltonianTimeLimit.count();
  int port = service::defaultPort();
  std::string host = "127.0.0.1";
};

UnitQuaternion parseTransform(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
      throw InvalidArgument("--transform expects w,x,y,z");
    parts.push_back(v);
  }
  if (parts.size() != 4) throw InvalidArgument("--transform expects four components w,x,y,z");
  try {
    return quaternionFromJson(nlohmann::json(parts));
  } catch (const FormatError& e) {
    throw InvalidArgument(std::string("--transform: ") + e.what());
  }
}

std::ofstream openOutput(const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoFailure("cannot open '" + path + "' for writing");
  return f;
}

void finish(std::ofstream& f, const std::string& path) {
  f.flush();
  if (!f) throw IoFailure("failed writing '" + path + "'");
}

PolytopeKind selectedPolytope(const Options& o) {
  const std::string& name = o.polytope.empty() ? o.positional : o.polytope;
  if (name.empty()) throw InvalidArgument("a polytope is required (--polytope NAME)");
  return parsePolytope(name);
}

double radiusFor(const Options& o, PolytopeKind kind) { return o.eatRadius.value_or(defaultEatRadius(kind)); }

int cmdInfo(const Options& o, std::ostream& out) {
  const PolytopeKind kind = selectedPolytope(o);
  const Polychoron& p = catalog(kind);
  const DualGraph g = dualAdjacency(p);
  const double r = defaultEatRadius(kind);
  out << "polytope: " << p.name << '\n'
      << "vertices: " << p.vertices.size() << '\n'
      << "edges: " << p.edges.size() << '\n'
      << "faces: " << p.faces.size() << '\n'
      << "cells: " << p.cells.size() << '\n'
      << "face vertices: " << p.faces.front().size() << '\n'
      << "cell faces: " << p.cells.front().size() << '\n'
      << "dual degree: " << g.degree(0) << '\n'
      << std::setprecision(12) << "default eat radius: " << r << " rad (pi/" << std::setprecision(6)
      << std::numbers::pi / r << ")\n"
      << "default subdivision: " << defaultSubdivision(kind) << '\n';
  return kOk;
}

int cmdExport(const Options& o, std::ostream& out) {
  const PolytopeKind kind = selectedPolytope(o);
  const UnitQuaternion q = parseTransform(o.transform);
  const int level = o.subdiv.value_or(defaultSubdivision(kind));
  if (o.format != "json" && o.format != "obj" && o.format != "polytope")
    throw InvalidArgument("--format must be json, obj or polytope");
  if (o.out.empty()) throw InvalidArgument("--out is required");

  if (o.format == "polytope") {
    auto f = openOutput(o.out);
    f << polytopeToJson(catalog(kind)).dump() << '\n';
    finish(f, o.out);
    out << "wrote " << o.out << '\n';
    return kOk;
  }

  const ProjectedMesh mesh = projectMesh(tessellate(catalog(kind), level), q, {});
  const auto colors = colorMesh(mesh);
  if (o.format == "json") {
    auto f = openOutput(o.out);
    f << meshToJson(mesh, colors).dump() << '\n';
    finish(f, o.out);
  } else {
    std::filesystem::path mtlPath(o.out);
    mtlPath.replace_extension(".mtl");
    auto obj = openOutput(o.out);
    auto mtl = openOutput(mtlPath.string());
    writeObj(obj, mtl, mtlPath.filename().string(), mesh, colors);
    finish(obj, o.out);
    finish(mtl, mtlPath.string());
  }
  out << "wrote " << o.out << " (" << mesh.triangles.size() << " triangles, level " << level << ")\n";
  return kOk;
}

int cmdSimulate(const Options& o, std::ostream& out) {
  const PolytopeKind kind = selectedPolytope(o);
  const double radius = radiusFor(o, kind);
  GameConfig config{kind};
  config.eatRadius = o.eatRadius;
  Game game(config);  // validates the radius before any planning

  const auto started = std::chrono::steady_clock::now();
  std::string planner;
  const auto samples = makeTrajectory(o.trajectory, kind, radius, std::chrono::milliseconds(o.timeLimitMs), &planner);
  for (const auto& s : samples) game.step(s.q, s.t);
  const double wallMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

  if (!o.out.empty()) {
    auto f = openOutput(o.out);
    writeEventLog(f, game.state().eventLog);
    finish(f, o.out);
  }
  out << "polytope: " << game.polytope().name << '\n'
      << "trajectory: " << planner << " (" << samples.size() << " samples)\n"
      << "events: " << game.eatenCount() << '\n'
      << std::setprecision(12) << "coverage: " << game.coverage() << '\n'
      << "won: " << (game.won() ? "true" : "false") << '\n'
      << "final distance from start: "
      << geodesicDistance(game.player(), game.state().config.startOrientation) << '\n'
      << std::setprecision(4) << "wall time ms: " << wallMs << '\n';
  return kOk;
}

int cmdPlan(const Options& o, std::ostream& out) {
  const PolytopeKind kind = selectedPolytope(o);
  if (o.out.empty()) throw InvalidArgument("--out is required");
  const double radius = radiusFor(o, kind);
  if (!(radius > 0 && radius < std::numbers::pi / 2)) throw ConfigError("eat radius outside (0, pi/2)");
  std::string planner;
  const auto samples = makeTrajectory(o.trajectory, kind, radius, std::chrono::milliseconds(o.timeLimitMs), &planner);
  auto f = openOutput(o.out);
  writeTrajectory(f, samples);
  finish(f, o.out);
  out << "wrote " << o.out << ": " << planner << ", " << samples.size() << " samples\n";
  return kOk;
}

int cmdServe(const Options& o, std::ostream& out) {
  service::GameService svc;
  httplib::Server server;
  // small step requests at frame rate; don't let Nagle batch them
  server.set_tcp_nodelay(true);
  service::mountRoutes(server, svc);
  if (!server.bind_to_port(o.host, o.port)) throw IoFailure("cannot bind " + o.host + ":" + std::to_string(o.port));
  out << "listening on http://" << o.host << ':' << o.port << std::endl;
  server.listen_after_bind();
  return kOk;
}

}  // namespace

std::vector<TrajectorySample> makeTrajectory(const std::string& source, PolytopeKind kind, double eatRadius,
                                             std::chrono::milliseconds timeLimit, std::string* plannerUsed) {
  const auto note = [&](const std::string& s) {
    if (plannerUsed) *plannerUsed = s;
  };
  const Polychoron& p = catalog(kind);
  const UnitQuaternion start;
  const double maxStep = eatRadius / 2;
  if (source == "spin360" || source == "spin720") {
    note(source);
    return spinTrajectory(kSpinAxis, (source == "spin360" ? 2 : 4) * std::numbers::pi, kSpinStep);
  }
  if (source == "nn-tour") {
    note("nn-tour");
    return tourTrajectory(p, nnTour(p, start), start, maxStep);
  }
  if (source == "hamiltonian") {
    const DualGraph g = dualAdjacency(p);
    if (auto path = hamiltonianPath(g, timeLimit)) {
      note("hamiltonian");
      return tourTrajectory(p, *path, start, maxStep);
    }
    note("nn-tour (hamiltonian search timed out)");
    return tourTrajectory(p, nnTour(p, start), start, maxStep);
  }
  std::ifstream f(source, std::ios::binary);
  if (!f) throw IoFailure("cannot read trajectory '" + source + "'");
  note(source);
  return readTrajectory(f);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regular polychora on S^3: geometry export, game simulation and a local game service"};
  app.name(args.empty() ? "polychora" : std::filesystem::path(args[0]).filename().string());
  app.require_subcommand(1);
  Options o;

  const auto addPolytope = [&](CLI::App* sub) {
    sub->add_option("--polytope", o.polytope, "5-cell, 8-cell, 16-cell, 24-cell, 120-cell or 600-cell");
    sub->add_option("name", o.positional, "Polytope name, as an alternative to --polytope");
  };
  const auto addRadius = [&](CLI::App* sub) {
    sub->add_option("--eat-radius", o.eatRadius, "Eat radius in radians (default: per polytope)");
  };
  const auto addPlanner = [&](CLI::App* sub, const char* what) {
    sub->add_option("--trajectory", o.trajectory, what)->capture_default_str();
    sub->add_option("--time-limit-ms", o.timeLimitMs, "Hamiltonian search time box")->capture_default_str();
  };

  auto* info = app.add_subcommand("info", "Print element counts, dual degree and default eat radius");
  addPolytope(info);

  auto* exp = app.add_subcommand("export", "Write a projected, colored mesh");
  addPolytope(exp);
  exp->add_option("--format", o.format, "json, obj or polytope")->capture_default_str();
  exp->add_option("--subdiv", o.subdiv, "Subdivision level 0-6 (default: per polytope)");
  exp->add_option("--transform", o.transform, "Player orientation w,x,y,z")->capture_default_str();
  exp->add_option("--out", o.out, "Output file")->required();

  auto* sim = app.add_subcommand("simulate", "Play a quaternion stream and write the event log");
  addPolytope(sim);
  addPlanner(sim, "nn-tour, hamiltonian, spin360, spin720 or a trajectory file");
  addRadius(sim);
  sim->add_option("--out", o.out, "Event log output (JSON Lines)");

  auto* plan = app.add_subcommand("plan", "Write a planned trajectory file");
  addPolytope(plan);
  addPlanner(plan, "nn-tour, hamiltonian, spin360 or spin720");
  addRadius(plan);
  plan->add_option("--out", o.out, "Trajectory output (JSON Lines)")->required();

  auto* srv = app.add_subcommand("serve", "Run the local HTTP game service");
  srv->add_option("--port", o.port, "Port (default from POLYCHORA_PORT or 8080)")->capture_default_str();
  srv->add_option("--host", o.host, "Bind address")->capture_default_str();

  // CLI11 consumes vectors back to front
  std::vector<std::string> rest;
  for (std::size_t k = args.size(); k > 1; --k) rest.push_back(args[k - 1]);
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*info) return cmdInfo(o, out);
    if (*exp) return cmdExport(o, out);
    if (*sim) return cmdSimulate(o, out);
    if (*plan) return cmdPlan(o, out);
    if (*srv) return cmdServe(o, out);
  } catch (const UnknownPolytope& e) {
    err << "error: " << e.what() << '\n';
    return kUnknownPolytope;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const FormatError& e) {
    err << "error: malformed trajectory: " << e.what() << '\n';
    return kBadTrajectory;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace polychora::cli
