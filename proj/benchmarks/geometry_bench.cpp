#include "polychora/hopf_color.hpp"
#include "polychora/polytope.hpp"
#include "polychora/projection.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace polychora;

PolytopeKind kindArg(const benchmark::State& state) { return allPolytopes()[static_cast<std::size_t>(state.range(0))]; }

void BM_Build(benchmark::State& state) {
  const PolytopeKind kind = kindArg(state);
  for (auto _ : state) benchmark::DoNotOptimize(build(kind));
  state.SetLabel(std::string(polytopeName(kind)));
}
BENCHMARK(BM_Build)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_Validate(benchmark::State& state) {
  const Polychoron& p = catalog(kindArg(state));
  for (auto _ : state) benchmark::DoNotOptimize(validate(p));
  state.SetLabel(p.name);
}
BENCHMARK(BM_Validate)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_Tessellate(benchmark::State& state) {
  const Polychoron& p = catalog(kindArg(state));
  const int level = defaultSubdivision(kindArg(state));
  for (auto _ : state) benchmark::DoNotOptimize(tessellate(p, level));
  state.SetLabel(p.name + " level " + std::to_string(level));
}
BENCHMARK(BM_Tessellate)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

// one rendered frame: move the scene, project and color
void BM_ProjectAndColor(benchmark::State& state) {
  const PolytopeKind kind = kindArg(state);
  const TessellatedMesh mesh = tessellate(catalog(kind), defaultSubdivision(kind));
  const UnitQuaternion q = fromAxisAngle({0.3, 0.5, 0.8}, 1.1);
  for (auto _ : state) {
    const ProjectedMesh m = projectMesh(mesh, q, {});
    benchmark::DoNotOptimize(colorMesh(m));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(mesh.triangles.size()));
  state.SetLabel(std::string(polytopeName(kind)));
}
BENCHMARK(BM_ProjectAndColor)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

}  // namespace
