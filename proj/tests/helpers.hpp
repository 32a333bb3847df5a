#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "affbraid/braid_word.hpp"
#include "affbraid/loop_tracer.hpp"

// Deterministic pseudo-random inputs for property tests.  Every test seeds
// its own engine so runs are reproducible.
namespace testgen {

inline std::vector<int> random_letters(int strands, int length,
                                       std::mt19937& rng) {
  std::uniform_int_distribution<int> idx(1, strands - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i)
    letters.push_back(sign(rng) ? idx(rng) : -idx(rng));
  return letters;
}

inline affbraid::BraidWord random_word(int strands, int length,
                                       std::mt19937& rng) {
  return affbraid::BraidWord(strands, random_letters(strands, length, rng));
}

// A random pure braid: product of band generators and their inverses.
inline affbraid::BraidWord random_pure_word(int strands, int bands,
                                            std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(1, strands);
  std::uniform_int_distribution<int> sign(0, 1);
  affbraid::BraidWord w = affbraid::BraidWord::identity(strands);
  for (int n = 0; n < bands; ++n) {
    int i = pick(rng), j = pick(rng);
    while (i == j) j = pick(rng);
    if (i > j) std::swap(i, j);
    affbraid::BraidWord g = affbraid::band_generator(i, j, strands);
    w = compose(w, sign(rng) ? g : inverse(g));
  }
  return w;
}

// A smooth closed loop: each point wobbles trigonometrically around its own
// spot on a wide circle.  Integer frequencies close the loop exactly; the
// wobble amplitude is small enough against the circle radius that points
// can never meet.
inline affbraid::LoopTrajectory trig_loop(int k, int samples,
                                          std::mt19937& rng) {
  constexpr double tau = 2.0 * std::numbers::pi;
  struct Wave {
    double ax, fx, px, ay, fy, py;
  };
  std::uniform_real_distribution<double> phase(0.0, tau);
  std::uniform_real_distribution<double> amplitude(0.4, 1.2);
  std::uniform_int_distribution<int> frequency(1, 3);
  std::vector<Wave> waves(static_cast<std::size_t>(k));
  for (Wave& w : waves) {
    w = {amplitude(rng), double(frequency(rng)), phase(rng),
         amplitude(rng), double(frequency(rng)), phase(rng)};
  }
  affbraid::LoopTrajectory loop;
  loop.frames.reserve(static_cast<std::size_t>(samples) + 1);
  for (int t = 0; t < samples; ++t) {
    const double s = double(t) / samples;
    affbraid::Configuration frame;
    frame.points.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      const Wave& w = waves[static_cast<std::size_t>(i)];
      const double cx = 4.0 * std::cos(tau * i / k);
      const double cy = 4.0 * std::sin(tau * i / k);
      frame.points[static_cast<std::size_t>(i)] = {
          cx + w.ax * std::cos(tau * w.fx * s + w.px),
          cy + w.ay * std::cos(tau * w.fy * s + w.py)};
    }
    loop.frames.push_back(std::move(frame));
  }
  loop.frames.push_back(loop.frames.front());
  return loop;
}

// The same frame repeated: the do-nothing loop at that configuration.
inline affbraid::LoopTrajectory stationary_loop(
    const affbraid::Configuration& base, int samples) {
  affbraid::LoopTrajectory loop;
  loop.frames.assign(static_cast<std::size_t>(samples) + 1, base);
  return loop;
}

}  // namespace testgen
