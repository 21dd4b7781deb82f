#pragma once

#include <cstdint>
#include <vector>

#include "polcovar/pattern.hpp"

namespace polcovar {

using Permutation = std::vector<int>;

enum class AutomorphismSearch {
  /// Extends partial vertex maps one vertex at a time, pruning on degree and
  /// on adjacency to the already-mapped vertices.
  kBacktracking,
  /// Tests every one of the k! permutations.
  kExhaustive,
};

/// All automorphisms of the pattern, in lexicographic order (identity first).
std::vector<Permutation> automorphisms(const Pattern& pattern,
                                       AutomorphismSearch search = AutomorphismSearch::kBacktracking);

/// |Aut(H)|.
std::uint64_t automorphism_count(const Pattern& pattern,
                                 AutomorphismSearch search = AutomorphismSearch::kBacktracking);

bool is_automorphism(const Pattern& pattern, const Permutation& perm);

}  // namespace polcovar
