#include "polcovar/symmetry.hpp"

#include <algorithm>
#include <numeric>

namespace polcovar {
namespace {

class Backtracker {
 public:
  explicit Backtracker(const Pattern& pattern)
      : pattern_(pattern),
        k_(pattern.vertex_count()),
        image_(static_cast<std::size_t>(k_)),
        used_(static_cast<std::size_t>(k_)),
        degree_(static_cast<std::size_t>(k_)) {
    for (int v = 0; v < k_; ++v) degree_[static_cast<std::size_t>(v)] = pattern.degree(v);
  }

  std::vector<Permutation> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  void extend(int v) {
    if (v == k_) {
      found_.push_back(image_);
      return;
    }
    for (int w = 0; w < k_; ++w) {
      if (used_[static_cast<std::size_t>(w)] ||
          degree_[static_cast<std::size_t>(w)] != degree_[static_cast<std::size_t>(v)]) {
        continue;
      }
      bool consistent = true;
      for (int u = 0; u < v && consistent; ++u) {
        consistent = pattern_.has_edge(u, v) ==
                     pattern_.has_edge(image_[static_cast<std::size_t>(u)], w);
      }
      if (!consistent) continue;
      image_[static_cast<std::size_t>(v)] = w;
      used_[static_cast<std::size_t>(w)] = true;
      extend(v + 1);
      used_[static_cast<std::size_t>(w)] = false;
    }
  }

  const Pattern& pattern_;
  int k_;
  Permutation image_;
  std::vector<bool> used_;
  std::vector<int> degree_;
  std::vector<Permutation> found_;
};

}  // namespace

bool is_automorphism(const Pattern& pattern, const Permutation& perm) {
  if (static_cast<int>(perm.size()) != pattern.vertex_count()) return false;
  // Edge counts match, so mapping every edge onto an edge is enough.
  return std::all_of(pattern.edges().begin(), pattern.edges().end(), [&](const Edge& e) {
    return pattern.has_edge(perm[static_cast<std::size_t>(e.first)],
                            perm[static_cast<std::size_t>(e.second)]);
  });
}

std::vector<Permutation> automorphisms(const Pattern& pattern, AutomorphismSearch search) {
  if (search == AutomorphismSearch::kBacktracking) return Backtracker(pattern).run();

  std::vector<Permutation> found;
  Permutation perm(static_cast<std::size_t>(pattern.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (is_automorphism(pattern, perm)) found.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

std::uint64_t automorphism_count(const Pattern& pattern, AutomorphismSearch search) {
  return automorphisms(pattern, search).size();
}

}  // namespace polcovar
