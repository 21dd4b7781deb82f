#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "polcovar/moments.hpp"
#include "polcovar/pattern.hpp"
#include "polcovar/rational.hpp"

namespace polcovar {

/// A labeled graph on n nodes stored as one bit per node pair.
///
/// Pair (u, v) with u < v has bit index u*n - u(u+1)/2 + (v - u - 1), i.e.
/// the row-major upper triangle.
class LabeledGraph {
 public:
  static constexpr int kMaxNodes = 11;  // C(11, 2) = 55 bits

  LabeledGraph(int node_count, std::uint64_t edge_mask);

  static int pair_index(int node_count, int u, int v);
  static int pair_count(int node_count) { return node_count * (node_count - 1) / 2; }

  int node_count() const { return n_; }
  std::uint64_t edge_mask() const { return mask_; }
  bool has_edge(int u, int v) const;
  LabeledGraph with_edge(int u, int v) const;

 private:
  int n_;
  std::uint64_t mask_;
};

/// Thrown when exhaustive enumeration is requested beyond the configured cap.
class OracleCapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OracleOptions {
  /// Largest n enumerated. Default 6 (2^15 graphs); may be raised to 7.
  int max_nodes = 6;
  unsigned workers = 0;
};

inline constexpr int kOracleHardCap = 7;

/// Non-induced copies of `pattern` in `graph`: injective vertex maps sending
/// every pattern edge onto a graph edge, divided by |Aut(H)|.
std::uint64_t count_subgraphs(const LabeledGraph& graph, const Pattern& pattern);

struct OracleResult {
  int n = 0;
  Rational mean_a;
  Rational mean_b;
  Rational second_moment;
  Rational covariance;
};

/// Moments of (c_A, c_B) over all 2^C(n,2) equally likely graphs on n nodes.
OracleResult exact_moments(const Pattern& a, const Pattern& b, int n, const OracleOptions& options = {});

struct VerificationRow {
  int n = 0;
  Rational engine_mean_a;
  Rational oracle_mean_a;
  Rational engine_mean_b;
  Rational oracle_mean_b;
  Rational engine_covariance;
  Rational oracle_covariance;

  bool mean_matches() const { return engine_mean_a == oracle_mean_a && engine_mean_b == oracle_mean_b; }
  bool covariance_matches() const { return engine_covariance == oracle_covariance; }
  bool matches() const { return mean_matches() && covariance_matches(); }
};

struct VerificationReport {
  std::vector<VerificationRow> rows;

  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }
};

/// Evaluates the engine's polynomials at each n and compares them with the
/// exhaustive moments. All n are checked against the cap before any work.
VerificationReport verify(const Pattern& a, const Pattern& b, std::span<const int> n_values,
                          const EngineOptions& engine = {}, const OracleOptions& oracle = {});

}  // namespace polcovar
