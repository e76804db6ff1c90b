#include "polychora/trajectory.hpp"

#include "polychora/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace polychora {

std::vector<TrajectorySample> spinTrajectory(const Vec3& axis, double totalAngle, double stepAngle) {
  if (!(stepAngle > 0.0 && stepAngle <= kMaxSpinStep))
    throw BadStep("spin step must lie in (0, 0.1] radians");
  if (!(totalAngle >= 0.0) || !std::isfinite(totalAngle)) throw BadStep("spin angle must be finite and nonnegative");
  const AxisAngle base(axis, 0.0);
  double ratio = totalAngle / stepAngle;
  // absorb rounding so that e.g. 2pi / (2pi / 100) gives 100 steps, not 101
  if (std::abs(ratio - std::round(ratio)) < 1e-9) ratio = std::round(ratio);
  const auto steps = static_cast<long long>(std::ceil(ratio));
  std::vector<TrajectorySample> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  for (long long k = 0; k <= steps; ++k) {
    const double angle = k == steps ? totalAngle : static_cast<double>(k) * stepAngle;
    out.push_back({static_cast<double>(k) / kSampleRate, fromAxisAngle(AxisAngle(base.axis(), angle))});
  }
  return out;
}

std::vector<int> nnTour(const Polychoron& p, const UnitQuaternion& start) {
  const auto& centers = p.cellCenters;
  std::vector<char> used(centers.size(), 0);
  std::vector<int> order;
  order.reserve(centers.size());
  UnitQuaternion cur = start;
  for (std::size_t n = 0; n < centers.size(); ++n) {
    int best = -1;
    double bestDist = 0;
    for (int c = 0; c < static_cast<int>(centers.size()); ++c) {
      if (used[c]) continue;
      const double d = geodesicDistance(cur, centers[c]);
      if (best < 0 || d < bestDist - 1e-12) {
        best = c;
        bestDist = d;
      }
    }
    used[best] = 1;
    order.push_back(best);
    cur = centers[best];
  }
  return order;
}

namespace {

class PathSearch {
 public:
  PathSearch(const DualGraph& g, std::chrono::steady_clock::time_point deadline)
      : g_(g), deadline_(deadline), visited_(g.nodeCount, 0), free_(g.nodeCount, 0), rank_(g.nodeCount) {}

  bool timedOut() const { return timedOut_; }
  bool exhausted() const { return exhausted_; }

  /// One attempt from `start`, giving up after `budget` visited nodes.
  /// `rank` breaks ties between equally constrained neighbors.
  std::optional<std::vector<int>> from(int start, std::span<const int> rank, long long budget) {
    std::fill(visited_.begin(), visited_.end(), 0);
    for (int v = 0; v < g_.nodeCount; ++v) free_[v] = g_.degree(v);
    std::copy(rank.begin(), rank.end(), rank_.begin());
    path_.clear();
    budget_ = budget;
    exhausted_ = false;
    if (visit(start)) return path_;
    return std::nullopt;
  }

 private:
  bool visit(int v) {
    if (--budget_ < 0) {
      exhausted_ = true;
      return false;
    }
    if (std::chrono::steady_clock::now() > deadline_) {
      timedOut_ = true;
      return false;
    }
    visited_[v] = 1;
    path_.push_back(v);
    for (int u : g_.adjacency[v]) --free_[u];
    if (static_cast<int>(path_.size()) == g_.nodeCount) return true;

    std::vector<int> next;
    for (int u : g_.adjacency[v])
      if (!visited_[u]) next.push_back(u);
    std::stable_sort(next.begin(), next.end(), [&](int a, int b) {
      if (free_[a] != free_[b]) return free_[a] < free_[b];
      return rank_[a] < rank_[b];
    });

    // an unvisited neighbor with no other way out can only be the last node
    const int remaining = g_.nodeCount - static_cast<int>(path_.size());
    const auto stranded = std::count_if(next.begin(), next.end(), [&](int u) { return free_[u] == 0; });
    const bool hopeless = stranded > 1 || (stranded == 1 && remaining > 1) || !restStaysConnected(v);

    if (!hopeless)
      for (int u : next) {
        if (visit(u)) return true;
        if (timedOut_ || exhausted_) break;
      }

    for (int u : g_.adjacency[v]) ++free_[u];
    path_.pop_back();
    visited_[v] = 0;
    return false;
  }

  // Every unvisited node must be reachable from v through unvisited nodes,
  // and at most one of them (the path's far end) may have a single way in.
  bool restStaysConnected(int v) {
    seen_.assign(g_.nodeCount, 0);
    queue_.clear();
    for (int u : g_.adjacency[v])
      if (!visited_[u] && !seen_[u]) {
        seen_[u] = 1;
        queue_.push_back(u);
      }
    int deadEnds = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int u = queue_[head];
      if (free_[u] <= 1 && std::find(g_.adjacency[v].begin(), g_.adjacency[v].end(), u) == g_.adjacency[v].end())
        ++deadEnds;
      for (int w : g_.adjacency[u])
        if (!visited_[w] && !seen_[w]) {
          seen_[w] = 1;
          queue_.push_back(w);
        }
    }
    const auto unvisited = static_cast<std::size_t>(g_.nodeCount) - path_.size();
    return queue_.size() == unvisited && deadEnds <= 1;
  }

  const DualGraph& g_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<char> visited_;
  std::vector<int> free_;
  std::vector<int> rank_;
  std::vector<int> path_;
  std::vector<char> seen_;
  std::vector<int> queue_;
  long long budget_ = 0;
  bool timedOut_ = false;
  bool exhausted_ = false;
};

}  // namespace

std::optional<std::vector<int>> hamiltonianPath(const DualGraph& g, std::chrono::milliseconds timeLimit,
                                                std::optional<int> startNode) {
  if (g.nodeCount == 0) return std::vector<int>{};
  if (startNode && (*startNode < 0 || *startNode >= g.nodeCount))
    throw InvalidArgument("start node out of range");
  PathSearch search(g, std::chrono::steady_clock::now() + timeLimit);

  // Backtracking times are heavy-tailed, so each attempt is cut off after a
  // node budget. Without a fixed start, attempts cycle through start nodes;
  // with one, later attempts perturb the tie-breaking order instead. The
  // budget doubles after every full cycle; the generator is seeded, so the
  // result is reproducible for a given time limit.
  const int starts = startNode ? 1 : g.nodeCount;
  std::vector<int> rank(g.nodeCount);
  std::iota(rank.begin(), rank.end(), 0);
  std::mt19937_64 rng(0x5eed);
  long long budget = 256LL * g.nodeCount;
  bool cutOff = false;
  for (long long attempt = 0;; ++attempt) {
    const int start = startNode ? *startNode : static_cast<int>(attempt % starts);
    if (startNode && attempt > 0)
      for (int k = 0; k < g.nodeCount / 8 + 1; ++k) std::swap(rank[rng() % g.nodeCount], rank[rng() % g.nodeCount]);
    if (auto path = search.from(start, rank, budget)) return path;
    if (search.timedOut()) return std::nullopt;
    cutOff = cutOff || search.exhausted();
    if ((attempt + 1) % starts == 0) {
      // nothing was cut off: every start was searched to completion
      if (!cutOff) return std::nullopt;
      cutOff = false;
      budget *= 2;
    }
  }
}

std::vector<TrajectorySample> interpolate(std::span<const UnitQuaternion> waypoints, double maxStep) {
  if (!(maxStep > 0.0) || !std::isfinite(maxStep)) throw InvalidArgument("maxStep must be positive");
  std::vector<TrajectorySample> out;
  if (waypoints.empty()) return out;
  const auto push = [&](const UnitQuaternion& q) {
    out.push_back({static_cast<double>(out.size()) / kSampleRate, q});
  };
  push(waypoints[0]);
  UnitQuaternion prev = waypoints[0];
  for (std::size_t k = 1; k < waypoints.size(); ++k) {
    const UnitQuaternion& next = waypoints[k];
    const double d = geodesicDistance(prev, next);
    if (d < 1e-12) continue;
    if (d >= std::numbers::pi - kAntipodalTolerance)
      throw AntipodalPair("consecutive waypoints " + std::to_string(k - 1) + " and " + std::to_string(k) +
                          " are antipodal");
    const auto n = static_cast<long long>(std::ceil(d / maxStep));
    for (long long j = 1; j < n; ++j) push(slerp(prev, next, static_cast<double>(j) / static_cast<double>(n)));
    push(next);
    prev = next;
  }
  return out;
}

std::vector<UnitQuaternion> insertViaPoints(std::span<const UnitQuaternion> waypoints) {
  std::vector<UnitQuaternion> out;
  for (std::size_t k = 0; k < waypoints.size(); ++k) {
    if (k > 0 && geodesicDistance(out.back(), waypoints[k]) >= std::numbers::pi - kAntipodalTolerance) {
      const Vec4 a = out.back().vec();
      constexpr std::array<Vec4, 4> basis{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
      const Vec4 e = *std::min_element(basis.begin(), basis.end(), [&](const Vec4& u, const Vec4& v) {
        return std::abs(dot(u, a)) < std::abs(dot(v, a));
      });
      out.emplace_back(e - a * dot(e, a));
    }
    out.push_back(waypoints[k]);
  }
  return out;
}

std::vector<TrajectorySample> tourTrajectory(const Polychoron& p, std::span<const int> order,
                                             const UnitQuaternion& start, double maxStep) {
  std::vector<UnitQuaternion> waypoints{start};
  for (int c : order) waypoints.push_back(p.cellCenters.at(c));
  return interpolate(insertViaPoints(waypoints), maxStep);
}

}  // namespace polychora
