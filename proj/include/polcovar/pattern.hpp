#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polcovar {

/// Why a pattern was rejected. Each validation rule has its own kind so
/// callers (and the CLI) can tell them apart.
enum class PatternErrorKind {
  kEmptyInput,
  kNotSquare,
  kInvalidEntry,
  kAsymmetric,
  kNonzeroDiagonal,
  kSelfLoop,
  kIndexOutOfRange,
  kMalformedLine,
  kUnknownBuiltin,
  kInvalidPermutation,
};

std::string_view to_string(PatternErrorKind kind);

class PatternError : public std::invalid_argument {
 public:
  PatternError(PatternErrorKind kind, const std::string& message);
  PatternErrorKind kind() const { return kind_; }

 private:
  PatternErrorKind kind_;
};

using Edge = std::pair<int, int>;

/// A small simple undirected graph H whose appearances are counted.
///
/// Vertices are 0..k-1 (0-based everywhere, including the text formats).
/// Edges are stored normalized (first < second), sorted and deduplicated.
/// Isolated vertices and disconnected patterns are allowed.
class Pattern {
 public:
  /// Throws PatternError on self-loops or out-of-range endpoints; duplicate
  /// and reversed edges are merged.
  Pattern(int vertex_count, std::span<const Edge> edges);
  Pattern(int vertex_count, std::initializer_list<Edge> edges)
      : Pattern(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const { return k_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  int degree(int v) const;

  /// Rows of "0"/"1" tokens separated by single spaces.
  std::string to_adjacency_matrix() const;
  /// First line k, then one "u v" line per edge.
  std::string to_edge_list() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  int k_;
  std::vector<Edge> edges_;
};

/// k lines of k whitespace-separated 0/1 tokens; symmetric with zero diagonal.
Pattern parse_adjacency_matrix(std::string_view text);

/// First nonblank line is k; every further nonblank line is "u v".
Pattern parse_edge_list(std::string_view text);

/// Picks the format from the first nonblank line: a single token followed by
/// more lines, or a single token other than 0/1, means edge list; anything
/// else is read as an adjacency matrix.
Pattern parse_pattern(std::string_view text);

/// node, edge, wedge, triangle, square, k4, or clique:K, cycle:K (K >= 3),
/// path:K (K vertices), star:K (K leaves) with K >= 1.
Pattern builtin_pattern(std::string_view name);

/// Names accepted by builtin_pattern, parameterized forms shown as "clique:K".
std::vector<std::string> builtin_names();

/// Maps every edge {u, v} to {perm[u], perm[v]}.
Pattern relabel(const Pattern& pattern, std::span<const int> perm);

}  // namespace polcovar
