#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "polcovar/pattern.hpp"
#include "polcovar/polynomial.hpp"

namespace polcovar {

/// Largest pattern the engine accepts. The overlay sum costs
/// k1! * k2! * (min(k1, k2) + 1) mask operations, and the slot-pair bitmasks
/// are sized for at most 2 * kMaxPatternVertices slots.
inline constexpr int kMaxPatternVertices = 8;

struct EngineOptions {
  /// 0 means one worker per hardware thread.
  unsigned workers = 0;
  /// Sum over distinct placed-edge masks weighted by multiplicity instead of
  /// over every permutation. Multiplicities are |Aut(H)|, so the result is
  /// identical; the loop shrinks by |Aut(H1)| * |Aut(H2)|.
  bool prune_automorphisms = false;
  /// Configurable ceiling on pattern size, at most kMaxPatternVertices.
  int max_vertices = kMaxPatternVertices;
};

/// Raised when a pattern exceeds EngineOptions::max_vertices.
class PatternTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two placed copies of the patterns sharing `shared` slots.
///
/// The slot universe has k1 + k2 - shared slots. Copy A puts its vertex u on
/// slot slots_a[u] (slots 0..k1-1). Copy B's vertex u goes to slot
/// t = slots_b[u] if t < shared, otherwise to k1 + (t - shared); so B occupies
/// the shared slots 0..shared-1 plus its private slots k1...
struct OverlayConfiguration {
  int shared = 0;
  std::span<const int> slots_a;
  std::span<const int> slots_b;
};

/// Number of distinct slot pairs covered by the edges of both copies.
int overlay_edge_count(const Pattern& a, const Pattern& b, const OverlayConfiguration& cfg);

/// histogram[i][m] = number of permutation pairs (P, Q) with overlap i whose
/// overlay has m edges.
using OverlayHistograms = std::vector<std::vector<std::uint64_t>>;

OverlayHistograms overlay_histograms(const Pattern& a, const Pattern& b,
                                     const EngineOptions& options = {});

/// E[c_H] = n^(k falling) / |Aut(H)| * 2^-l.
Polynomial mean_polynomial(const Pattern& pattern);

/// E[c_A * c_B] as an exact polynomial in n.
Polynomial second_moment_polynomial(const Pattern& a, const Pattern& b,
                                    const EngineOptions& options = {});

struct MomentReport {
  Pattern pattern_a;
  Pattern pattern_b;
  Polynomial mean_a;
  Polynomial mean_b;
  Polynomial second_moment;
  /// second_moment - mean_a * mean_b; the variance when both patterns agree.
  Polynomial covariance;
  std::uint64_t aut_a = 1;
  std::uint64_t aut_b = 1;
};

MomentReport covariance_report(const Pattern& a, const Pattern& b, const EngineOptions& options = {});
MomentReport variance_report(const Pattern& pattern, const EngineOptions& options = {});

}  // namespace polcovar
