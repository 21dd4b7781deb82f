#include "polcovar/moments.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <thread>

#include "polcovar/symmetry.hpp"

namespace polcovar {
namespace {

// Bit index of the unordered slot pair {a, b}; independent of universe size.
constexpr int slot_pair_bit(int a, int b) {
  if (a > b) std::swap(a, b);
  return b * (b - 1) / 2 + a;
}

static_assert(slot_pair_bit(2 * kMaxPatternVertices - 2, 2 * kMaxPatternVertices - 1) < 128);

template <int Words>
struct SlotMask {
  std::array<std::uint64_t, Words> words{};

  void set(int bit) { words[static_cast<std::size_t>(bit / 64)] |= std::uint64_t{1} << (bit % 64); }

  friend bool operator==(const SlotMask&, const SlotMask&) = default;
  friend auto operator<=>(const SlotMask&, const SlotMask&) = default;
};

template <int Words>
inline int union_popcount(const SlotMask<Words>& a, const SlotMask<Words>& b) {
  int total = 0;
  for (int w = 0; w < Words; ++w) total += std::popcount(a.words[w] | b.words[w]);
  return total;
}

// A placed-edge mask and the number of permutations producing it.
template <int Words>
struct WeightedMask {
  SlotMask<Words> mask;
  std::uint64_t weight;
};

int copy_b_slot(int t, int shared, int k1) { return t < shared ? t : k1 + (t - shared); }

template <int Words>
SlotMask<Words> place_edges(const Pattern& pattern, const std::vector<int>& perm, int shared,
                            int k1, bool copy_b) {
  SlotMask<Words> mask;
  for (auto [u, v] : pattern.edges()) {
    int su = perm[static_cast<std::size_t>(u)];
    int sv = perm[static_cast<std::size_t>(v)];
    if (copy_b) {
      su = copy_b_slot(su, shared, k1);
      sv = copy_b_slot(sv, shared, k1);
    }
    mask.set(slot_pair_bit(su, sv));
  }
  return mask;
}

// One mask per permutation of 0..k-1, in lexicographic permutation order, or
// the distinct masks with multiplicities when pruning.
template <int Words>
std::vector<WeightedMask<Words>> placed_masks(const Pattern& pattern, int shared, int k1,
                                              bool copy_b, bool prune) {
  std::vector<int> perm(static_cast<std::size_t>(pattern.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<WeightedMask<Words>> out;
  std::map<SlotMask<Words>, std::uint64_t> distinct;
  do {
    auto mask = place_edges<Words>(pattern, perm, shared, k1, copy_b);
    if (prune) {
      ++distinct[mask];
    } else {
      out.push_back({mask, 1});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (prune) {
    for (const auto& [mask, weight] : distinct) out.push_back({mask, weight});
  }
  return out;
}

unsigned resolve_workers(unsigned requested, std::size_t rows) {
  unsigned w = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(w, rows)));
}

template <int Words>
OverlayHistograms compute_histograms(const Pattern& a, const Pattern& b, const EngineOptions& opt) {
  const int k1 = a.vertex_count();
  const int k2 = b.vertex_count();
  const int max_shared = std::min(k1, k2);
  const std::size_t bins = static_cast<std::size_t>(a.edge_count() + b.edge_count() + 1);
  const bool prune = opt.prune_automorphisms;

  // Copy A's slots do not depend on the overlap size.
  const auto masks_a = placed_masks<Words>(a, 0, k1, false, prune);
  std::vector<std::vector<WeightedMask<Words>>> masks_b;
  for (int i = 0; i <= max_shared; ++i) masks_b.push_back(placed_masks<Words>(b, i, k1, true, prune));

  const unsigned workers = resolve_workers(opt.workers, masks_a.size());
  std::vector<OverlayHistograms> partial(
      workers, OverlayHistograms(static_cast<std::size_t>(max_shared + 1),
                                 std::vector<std::uint64_t>(bins)));

  auto run = [&](unsigned worker) {
    const std::size_t begin = masks_a.size() * worker / workers;
    const std::size_t end = masks_a.size() * (worker + 1) / workers;
    auto& hist = partial[worker];
    for (int i = 0; i <= max_shared; ++i) {
      auto& h = hist[static_cast<std::size_t>(i)];
      const auto& row_b = masks_b[static_cast<std::size_t>(i)];
      for (std::size_t r = begin; r < end; ++r) {
        const auto& ma = masks_a[r];
        if (prune) {
          for (const auto& mb : row_b) {
            h[static_cast<std::size_t>(union_popcount(ma.mask, mb.mask))] += ma.weight * mb.weight;
          }
        } else {
          for (const auto& mb : row_b) ++h[static_cast<std::size_t>(union_popcount(ma.mask, mb.mask))];
        }
      }
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }

  OverlayHistograms total = std::move(partial[0]);
  for (unsigned w = 1; w < workers; ++w) {
    for (std::size_t i = 0; i < total.size(); ++i)
      for (std::size_t m = 0; m < bins; ++m) total[i][m] += partial[w][i][m];
  }
  return total;
}

void check_size(const Pattern& p, const EngineOptions& opt) {
  if (opt.max_vertices < 1 || opt.max_vertices > kMaxPatternVertices) {
    throw std::invalid_argument("max_vertices must be in 1.." + std::to_string(kMaxPatternVertices));
  }
  const int k = p.vertex_count();
  if (k > opt.max_vertices) {
    throw PatternTooLarge("pattern has " + std::to_string(k) + " vertices; the limit is " +
                          std::to_string(opt.max_vertices) + " because the overlay sum costs k1! * k2! * (k+1) = " +
                          (factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(k)) * (k + 1)).str() +
                          " evaluations at this size");
  }
}

std::vector<bool> check_bijection(std::span<const int> perm, int size, const char* what) {
  std::vector<bool> seen(static_cast<std::size_t>(size));
  if (static_cast<int>(perm.size()) != size) {
    throw std::invalid_argument(std::string(what) + " has the wrong length");
  }
  for (int p : perm) {
    if (p < 0 || p >= size || seen[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument(std::string(what) + " is not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  return seen;
}

}  // namespace

int overlay_edge_count(const Pattern& a, const Pattern& b, const OverlayConfiguration& cfg) {
  const int k1 = a.vertex_count();
  const int k2 = b.vertex_count();
  if (cfg.shared < 0 || cfg.shared > std::min(k1, k2)) {
    throw std::invalid_argument("overlap size out of range");
  }
  check_bijection(cfg.slots_a, k1, "slot map of copy A");
  check_bijection(cfg.slots_b, k2, "slot map of copy B");

  std::vector<Edge> placed;
  for (auto [u, v] : a.edges()) {
    int su = cfg.slots_a[static_cast<std::size_t>(u)];
    int sv = cfg.slots_a[static_cast<std::size_t>(v)];
    placed.emplace_back(std::min(su, sv), std::max(su, sv));
  }
  for (auto [u, v] : b.edges()) {
    int su = copy_b_slot(cfg.slots_b[static_cast<std::size_t>(u)], cfg.shared, k1);
    int sv = copy_b_slot(cfg.slots_b[static_cast<std::size_t>(v)], cfg.shared, k1);
    placed.emplace_back(std::min(su, sv), std::max(su, sv));
  }
  std::sort(placed.begin(), placed.end());
  return static_cast<int>(std::unique(placed.begin(), placed.end()) - placed.begin());
}

OverlayHistograms overlay_histograms(const Pattern& a, const Pattern& b, const EngineOptions& options) {
  check_size(a, options);
  check_size(b, options);
  const int slots = a.vertex_count() + b.vertex_count();
  if (slot_pair_bit(slots - 2, slots - 1) < 64) return compute_histograms<1>(a, b, options);
  return compute_histograms<2>(a, b, options);
}

Polynomial mean_polynomial(const Pattern& pattern) {
  EngineOptions defaults;
  check_size(pattern, defaults);
  Rational scale = Rational(BigInt(1), BigInt(automorphism_count(pattern))) *
                   inverse_power_of_two(static_cast<unsigned>(pattern.edge_count()));
  return Polynomial::falling_factorial(static_cast<unsigned>(pattern.vertex_count())).scaled(scale);
}

Polynomial second_moment_polynomial(const Pattern& a, const Pattern& b, const EngineOptions& options) {
  const auto hist = overlay_histograms(a, b, options);
  const auto k1 = static_cast<unsigned>(a.vertex_count());
  const auto k2 = static_cast<unsigned>(b.vertex_count());

  Polynomial sum;
  for (unsigned i = 0; i < hist.size(); ++i) {
    Rational weight;
    for (unsigned m = 0; m < hist[i].size(); ++m) {
      if (hist[i][m] != 0) weight += Rational(BigInt(hist[i][m])) * inverse_power_of_two(m);
    }
    weight /= Rational(factorial(i) * factorial(k1 - i) * factorial(k2 - i));
    sum += Polynomial::falling_factorial(k1 + k2 - i).scaled(weight);
  }
  BigInt aut = BigInt(automorphism_count(a)) * BigInt(automorphism_count(b));
  return sum.scaled(Rational(BigInt(1), aut));
}

MomentReport covariance_report(const Pattern& a, const Pattern& b, const EngineOptions& options) {
  MomentReport r{a, b, mean_polynomial(a), mean_polynomial(b),
                 second_moment_polynomial(a, b, options), {},
                 automorphism_count(a), automorphism_count(b)};
  r.covariance = r.second_moment - r.mean_a * r.mean_b;
  return r;
}

MomentReport variance_report(const Pattern& pattern, const EngineOptions& options) {
  return covariance_report(pattern, pattern, options);
}

}  // namespace polcovar
