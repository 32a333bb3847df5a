#pragma once

#include <optional>
#include <string>

#include "affbraid/braid_word.hpp"
#include "affbraid/center_quotient.hpp"
#include "affbraid/free_group.hpp"
#include "affbraid/garside.hpp"
#include "affbraid/loop_tracer.hpp"

namespace affbraid {

/// Emits "B<k>: l1 l2 ...", signed integers; just "B<k>:" for the identity.
std::string format_braid_word(const BraidWord& word);

/// Accepts signed integers ("1 -3 2") or symbolic letters ("s1 s3^-1 s2"),
/// optionally preceded by a "B<k>:" header that fixes the strand count.
/// Without a header the count falls back to default_strands, or, when that
/// is zero, to the smallest count the letters allow.
BraidWord parse_braid_word(const std::string& text, int default_strands = 0);

/// Emits "D^p | f1 | f2 | ..." with each factor as its permutation image
/// sequence, e.g. "D^1 | 2 1 3"; a bare power when there are no factors.
std::string format_normal_form(const GarsideNormalForm& nf);

/// Parses the format above.  The strand count is read off the factors;
/// a factor-free power needs fallback_strands.
GarsideNormalForm parse_normal_form(const std::string& text,
                                    int fallback_strands = 0);

/// Free words render as bare signed integers, "1 -4 7"; empty for identity.
std::string format_free_word(const FreeWord& word);
FreeWord parse_free_word(const std::string& text);

/// Tolerance fields a file chose to pin; absent fields defer to the caller.
struct ToleranceOverrides {
  std::optional<double> eps_sep;
  std::optional<double> eps_rank;
  std::optional<double> eps_close;

  bool any() const {
    return eps_sep.has_value() || eps_rank.has_value() ||
           eps_close.has_value();
  }
  Tolerances applied_to(Tolerances base) const {
    if (eps_sep) base.eps_sep = *eps_sep;
    if (eps_rank) base.eps_rank = *eps_rank;
    if (eps_close) base.eps_close = *eps_close;
    return base;
  }
};

/// A trajectory plus whatever tolerance overrides the file carried.
struct TrajectoryFile {
  LoopTrajectory loop;
  ToleranceOverrides tolerances;
};

/// CSV with header "t,x1,y1,...,xk,yk", one frame per row, t strictly
/// increasing.  Emitted t values are the frame indices.
std::string format_trajectory_csv(const LoopTrajectory& loop);
TrajectoryFile parse_trajectory_csv(const std::string& text);

/// Structured form: an object with "k", "frames" (array of arrays of [x, y]
/// pairs) and an optional "tolerances" object with eps_sep, eps_rank,
/// eps_close members.
std::string format_trajectory_json(const LoopTrajectory& loop);
TrajectoryFile parse_trajectory_json(const std::string& text);

/// Reads either trajectory format, deciding by the first meaningful byte.
TrajectoryFile parse_trajectory(const std::string& text);

/// "generators:" line with A_i_j tokens, then one "relator:" line per
/// relator as signed generator positions; the last relator kills the twist.
std::string format_presentation_text(const Presentation& p);
/// Same content as a JSON object with strands, generators, relators and
/// center_relator_index members.
std::string format_presentation_json(const Presentation& p);

}  // namespace affbraid
