#include "affbraid/loop_tracer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affbraid/center_quotient.hpp"
#include "affbraid/errors.hpp"
#include "affbraid/garside.hpp"

namespace affbraid {

namespace {

// Signal: the current projection direction is degenerate for this data,
// try the next one.  Never escapes trace().
struct RetryDirection {};

double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

double min_pairwise_distance(const Configuration& c, int* first = nullptr,
                             int* second = nullptr) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < c.size(); ++i) {
    for (int j = i + 1; j < c.size(); ++j) {
      const double d = distance(c.points[std::size_t(i)],
                                c.points[std::size_t(j)]);
      if (d < best) {
        best = d;
        if (first) *first = i + 1;
        if (second) *second = j + 1;
      }
    }
  }
  return best;
}

// Smallest singular value of the centered coordinate matrix: zero exactly
// when the points are collinear (or fewer than three).
double collinearity_margin(const Configuration& c) {
  const int k = c.size();
  if (k == 0) return 0.0;
  double mx = 0.0, my = 0.0;
  for (const Point& p : c.points) {
    mx += p.x;
    my += p.y;
  }
  mx /= k;
  my /= k;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const Point& p : c.points) {
    const double dx = p.x - mx, dy = p.y - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  const double trace_half = (sxx + syy) / 2.0;
  const double det = sxx * syy - sxy * sxy;
  const double disc = std::sqrt(std::max(0.0, trace_half * trace_half - det));
  const double lambda_min = std::max(0.0, trace_half - disc);
  return std::sqrt(lambda_min);
}

double closure_residual_of(const LoopTrajectory& loop) {
  double worst = 0.0;
  const Configuration& first = loop.frames.front();
  const Configuration& last = loop.frames.back();
  for (int i = 0; i < first.size(); ++i) {
    worst = std::max(worst, distance(first.points[std::size_t(i)],
                                     last.points[std::size_t(i)]));
  }
  return worst;
}

// nullopt when the trajectory is structurally unusable; the message says why
std::optional<std::string> structural_problem(const LoopTrajectory& loop) {
  if (loop.frames.size() < 2) {
    return "a loop needs at least 2 frames, got " +
           std::to_string(loop.frames.size());
  }
  const int k = loop.point_count();
  if (k < 2) return "a loop needs at least 2 points, got " + std::to_string(k);
  for (std::size_t t = 0; t < loop.frames.size(); ++t) {
    if (loop.frames[t].size() != k) {
      return "frame " + std::to_string(t) + " has " +
             std::to_string(loop.frames[t].size()) + " points, expected " +
             std::to_string(k);
    }
  }
  return std::nullopt;
}

std::vector<double> project(const Configuration& c, double ux, double uy) {
  std::vector<double> out(std::size_t(c.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = c.points[i].x * ux + c.points[i].y * uy;
  }
  return out;
}

// 0-based point indices sorted by projection; an exact tie means the
// direction is not generic here.
std::vector<int> projection_order(const std::vector<double>& proj) {
  std::vector<int> order(proj.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&proj](int a, int b) {
    return proj[std::size_t(a)] < proj[std::size_t(b)];
  });
  for (std::size_t m = 1; m < order.size(); ++m) {
    if (proj[std::size_t(order[m - 1])] == proj[std::size_t(order[m])]) {
      throw RetryDirection{};
    }
  }
  return order;
}

Configuration interpolate(const Configuration& a, const Configuration& b,
                          double t) {
  Configuration mid;
  mid.points.resize(a.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    mid.points[i].x = a.points[i].x + (b.points[i].x - a.points[i].x) * t;
    mid.points[i].y = a.points[i].y + (b.points[i].y - a.points[i].y) * t;
  }
  return mid;
}

// True when the two orders differ by swapping adjacent positions m, m+1.
bool single_adjacent_swap(const std::vector<int>& before,
                          const std::vector<int>& after, std::size_t* at) {
  std::vector<std::size_t> diff;
  for (std::size_t m = 0; m < before.size(); ++m) {
    if (before[m] != after[m]) diff.push_back(m);
  }
  if (diff.size() != 2 || diff[1] != diff[0] + 1) return false;
  if (before[diff[0]] != after[diff[1]] || before[diff[1]] != after[diff[0]]) {
    return false;
  }
  *at = diff[0];
  return true;
}

struct SegmentTracer {
  double ux, uy;
  const TraceOptions& options;
  std::size_t frame_index;
  std::vector<int> letters;

  // Emits the crossings between two interpolation endpoints in time order.
  // Between endpoints every pairwise projection gap is linear in time, so
  // equal orders mean no crossing and a single swap means exactly one; all
  // denser traffic is split at the midpoint until it separates.
  void run(const Configuration& c0, const Configuration& c1,
           const std::vector<double>& p0, const std::vector<double>& p1,
           const std::vector<int>& o0, const std::vector<int>& o1, int depth) {
    if (o0 == o1) return;
    std::size_t m = 0;
    if (single_adjacent_swap(o0, o1, &m)) {
      emit_crossing(c0, c1, p0, p1, o0[m], o0[m + 1], m);
      return;
    }
    if (depth >= options.max_subdivision_depth) {
      throw TraceError(
          "sampling too coarse between frames " + std::to_string(frame_index) +
          " and " + std::to_string(frame_index + 1) +
          ": simultaneous crossings survive " +
          std::to_string(options.max_subdivision_depth) + " subdivisions");
    }
    const Configuration mid = interpolate(c0, c1, 0.5);
    const std::vector<double> pm = project(mid, ux, uy);
    const std::vector<int> om = projection_order(pm);
    run(c0, mid, p0, pm, o0, om, depth + 1);
    run(mid, c1, pm, p1, om, o1, depth + 1);
  }

  void emit_crossing(const Configuration& c0, const Configuration& c1,
                     const std::vector<double>& p0,
                     const std::vector<double>& p1, int a, int b,
                     std::size_t position) {
    const double d0 = p0[std::size_t(a)] - p0[std::size_t(b)];
    const double d1 = p1[std::size_t(a)] - p1[std::size_t(b)];
    const double t = d0 / (d0 - d1);
    const Point pa{c0.points[std::size_t(a)].x +
                       (c1.points[std::size_t(a)].x -
                        c0.points[std::size_t(a)].x) * t,
                   c0.points[std::size_t(a)].y +
                       (c1.points[std::size_t(a)].y -
                        c0.points[std::size_t(a)].y) * t};
    const Point pb{c0.points[std::size_t(b)].x +
                       (c1.points[std::size_t(b)].x -
                        c0.points[std::size_t(b)].x) * t,
                   c0.points[std::size_t(b)].y +
                       (c1.points[std::size_t(b)].y -
                        c0.points[std::size_t(b)].y) * t};
    const double rx = pb.x - pa.x;
    const double ry = pb.y - pa.y;
    if (std::hypot(rx, ry) < options.tolerances.eps_sep) {
      throw TraceError("points " + std::to_string(a + 1) + " and " +
                       std::to_string(b + 1) +
                       " collide between frames " +
                       std::to_string(frame_index) + " and " +
                       std::to_string(frame_index + 1));
    }
    const double vx = (c1.points[std::size_t(b)].x -
                       c0.points[std::size_t(b)].x) -
                      (c1.points[std::size_t(a)].x -
                       c0.points[std::size_t(a)].x);
    const double vy = (c1.points[std::size_t(b)].y -
                       c0.points[std::size_t(b)].y) -
                      (c1.points[std::size_t(a)].y -
                       c0.points[std::size_t(a)].y);
    const double cross = rx * vy - ry * vx;
    if (cross == 0.0) throw RetryDirection{};
    const int letter = static_cast<int>(position) + 1;
    letters.push_back(cross > 0.0 ? letter : -letter);
  }
};

BraidWord trace_along(const LoopTrajectory& loop, double angle,
                      const TraceOptions& options) {
  const double ux = std::cos(angle), uy = std::sin(angle);
  const std::size_t segments = loop.frames.size() - 1;
  SegmentTracer tracer{ux, uy, options, 0, {}};

  std::vector<double> p0 = project(loop.frames[0], ux, uy);
  std::vector<int> o0 = projection_order(p0);
  for (std::size_t t = 0; t < segments; ++t) {
    std::vector<double> p1 = project(loop.frames[t + 1], ux, uy);
    std::vector<int> o1 = projection_order(p1);
    tracer.frame_index = t;
    tracer.run(loop.frames[t], loop.frames[t + 1], p0, p1, o0, o1, 0);
    p0 = std::move(p1);
    o0 = std::move(o1);
  }

  BraidWord word(loop.point_count(), tracer.letters);
  // a closed loop of labeled points must come back with the identity
  // permutation; anything else means a crossing was misread
  if (!is_pure(word)) throw RetryDirection{};
  return word;
}

}  // namespace

ValidationReport validate(const LoopTrajectory& loop,
                          const Tolerances& tolerances) {
  ValidationReport report;
  if (const auto problem = structural_problem(loop)) {
    report.problems.push_back(*problem);
    report.verdict = LoopVerdict::Invalid;
    return report;
  }

  bool separated = true;
  bool spanning = true;
  for (std::size_t t = 0; t < loop.frames.size(); ++t) {
    FrameReport fr;
    int a = 0, b = 0;
    fr.separation_margin = min_pairwise_distance(loop.frames[t], &a, &b);
    fr.collinearity_margin = collinearity_margin(loop.frames[t]);
    if (fr.separation_margin <= tolerances.eps_sep) {
      separated = false;
      report.problems.push_back("frame " + std::to_string(t) + ": points " +
                                std::to_string(a) + " and " +
                                std::to_string(b) + " are only " +
                                std::to_string(fr.separation_margin) +
                                " apart");
    }
    if (fr.collinearity_margin <= tolerances.eps_rank) spanning = false;
    report.frames.push_back(fr);
  }

  report.closure_residual = closure_residual_of(loop);
  if (report.closure_residual > tolerances.eps_close) {
    report.problems.push_back(
        "loop is not closed: first and last frames differ by " +
        std::to_string(report.closure_residual));
    report.verdict = LoopVerdict::Invalid;
    return report;
  }
  if (!separated) {
    report.verdict = LoopVerdict::Invalid;
  } else if (spanning) {
    report.verdict = LoopVerdict::AffineSpanning;
  } else {
    report.verdict = LoopVerdict::DistinctOnly;
    report.problems.push_back(
        "some frame is collinear: the loop moves through point "
        "configurations that do not span the plane");
  }
  return report;
}

BraidWord trace(const LoopTrajectory& loop, const TraceOptions& options) {
  if (const auto problem = structural_problem(loop)) {
    throw TraceError(*problem);
  }
  for (std::size_t t = 0; t < loop.frames.size(); ++t) {
    int a = 0, b = 0;
    const double sep = min_pairwise_distance(loop.frames[t], &a, &b);
    if (sep <= options.tolerances.eps_sep) {
      throw TraceError("frame " + std::to_string(t) + ": points " +
                       std::to_string(a) + " and " + std::to_string(b) +
                       " coincide (distance " + std::to_string(sep) + ")");
    }
  }
  if (closure_residual_of(loop) > options.tolerances.eps_close) {
    throw TraceError("loop is not closed: first and last frames differ by " +
                     std::to_string(closure_residual_of(loop)));
  }

  // an irrational slice of a turn: successive retries never repeat a
  // direction modulo pi
  const double increment = 1e-3 * std::numbers::pi *
                           (std::numbers::phi - 1.0);
  for (int attempt = 0; attempt <= options.max_direction_retries; ++attempt) {
    try {
      return trace_along(loop, options.direction + attempt * increment,
                         options);
    } catch (const RetryDirection&) {
      continue;
    }
  }
  throw TraceError("no generic projection direction found after " +
                   std::to_string(options.max_direction_retries) +
                   " retries");
}

LoopTrajectory rotation_loop(int k, int samples) {
  if (k < 3) {
    throw InputError("rotation loops need at least 3 points, got " +
                     std::to_string(k));
  }
  if (samples < 8 * k) {
    throw InputError("rotation loops need at least " + std::to_string(8 * k) +
                     " samples for " + std::to_string(k) + " points, got " +
                     std::to_string(samples));
  }
  Configuration base;
  base.points.resize(std::size_t(k));
  for (int i = 0; i < k; ++i) {
    const double radius = 1.0 + 0.35 * i;
    const double angle = 2.0 * std::numbers::pi * i / k + 0.25 * i / k;
    base.points[std::size_t(i)] = {radius * std::cos(angle),
                                   radius * std::sin(angle)};
  }
  LoopTrajectory loop;
  loop.frames.reserve(std::size_t(samples) + 1);
  for (int t = 0; t < samples; ++t) {
    const double theta = 2.0 * std::numbers::pi * t / samples;
    const double c = std::cos(theta), s = std::sin(theta);
    Configuration frame;
    frame.points.resize(std::size_t(k));
    for (int i = 0; i < k; ++i) {
      const Point& p = base.points[std::size_t(i)];
      frame.points[std::size_t(i)] = {c * p.x - s * p.y, s * p.x + c * p.y};
    }
    loop.frames.push_back(std::move(frame));
  }
  loop.frames.push_back(loop.frames.front());
  return loop;
}

bool loops_homotopic(const LoopTrajectory& a, const LoopTrajectory& b,
                     const TraceOptions& options) {
  if (a.point_count() != b.point_count()) {
    throw InputError("point count mismatch: " +
                     std::to_string(a.point_count()) + " vs " +
                     std::to_string(b.point_count()));
  }
  return cosets_equal(make_class(trace(a, options)),
                      make_class(trace(b, options)));
}

}  // namespace affbraid
