#pragma once

#include <string>
#include <vector>

#include "affbraid/braid_word.hpp"

namespace affbraid {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// One time sample: the positions of the k labeled points.
struct Configuration {
  std::vector<Point> points;

  int size() const { return static_cast<int>(points.size()); }
};

/// Numerical slack for the geometric checks.  All three are strictly
/// positive lengths in plane units.
struct Tolerances {
  double eps_sep = 1e-9;    // minimal allowed pairwise distance
  double eps_rank = 1e-9;   // minimal allowed affine-span singular value
  double eps_close = 1e-9;  // maximal allowed first/last frame mismatch
};

/// A sampled closed motion of k labeled points.  Consecutive frames are
/// interpolated linearly; the final frame must match the first one.
struct LoopTrajectory {
  std::vector<Configuration> frames;

  int point_count() const {
    return frames.empty() ? 0 : frames.front().size();
  }
};

struct TraceOptions {
  Tolerances tolerances;
  /// Projection direction in radians; crossings are read along this axis.
  double direction = 0.0;
  /// Binary time subdivision limit for separating simultaneous crossings.
  int max_subdivision_depth = 32;
  /// How many deterministically rotated directions to try when the chosen
  /// one is degenerate for the data.
  int max_direction_retries = 16;
};

/// How much of the configuration-space structure a loop actually has:
/// affinely spanning frames, merely distinct points, or broken input.
enum class LoopVerdict { AffineSpanning, DistinctOnly, Invalid };

struct FrameReport {
  double separation_margin = 0.0;   // min pairwise distance
  double collinearity_margin = 0.0; // smallest centered singular value
};

struct ValidationReport {
  std::vector<FrameReport> frames;
  double closure_residual = 0.0;
  LoopVerdict verdict = LoopVerdict::Invalid;
  std::vector<std::string> problems;
};

/// Reports per-frame margins, the closure residual, and the overall verdict.
/// Never throws on bad geometry; the verdict carries the news.
ValidationReport validate(const LoopTrajectory& loop,
                          const Tolerances& tolerances = {});

/// Reads the braid of a closed loop: projections along the chosen direction
/// are tracked between frames, each exchange of adjacent projected order
/// emits one signed crossing.  The sign is positive when the exchanging
/// pair turns counterclockwise.  The result is pure.
BraidWord trace(const LoopTrajectory& loop, const TraceOptions& options = {});

/// Rigid counterclockwise rotation of a fixed generic base configuration by
/// one full turn, sampled uniformly.  The loop that generates the center.
LoopTrajectory rotation_loop(int k, int samples);

/// Whether two loops of configurations can be deformed into one another:
/// their braids must agree modulo the full twist.
bool loops_homotopic(const LoopTrajectory& a, const LoopTrajectory& b,
                     const TraceOptions& options = {});

}  // namespace affbraid
