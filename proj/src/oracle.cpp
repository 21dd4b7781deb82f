#include "polcovar/oracle.hpp"

#include <algorithm>
#include <thread>

namespace polcovar {
namespace {

// Adjacency as one neighbour bitmask per node.
using AdjacencyRows = std::vector<std::uint32_t>;

AdjacencyRows rows_of(const LabeledGraph& g) {
  AdjacencyRows rows(static_cast<std::size_t>(g.node_count()));
  for (int u = 0; u < g.node_count(); ++u)
    for (int v = u + 1; v < g.node_count(); ++v)
      if (g.has_edge(u, v)) {
        rows[static_cast<std::size_t>(u)] |= 1u << v;
        rows[static_cast<std::size_t>(v)] |= 1u << u;
      }
  return rows;
}

AdjacencyRows rows_of(const Pattern& p) {
  AdjacencyRows rows(static_cast<std::size_t>(p.vertex_count()));
  for (auto [u, v] : p.edges()) {
    rows[static_cast<std::size_t>(u)] |= 1u << v;
    rows[static_cast<std::size_t>(v)] |= 1u << u;
  }
  return rows;
}

// Counts injective maps pattern -> target under which every pattern edge lands
// on a target edge. Plain backtracking in vertex order.
class EmbeddingCounter {
 public:
  explicit EmbeddingCounter(const Pattern& pattern) : k_(pattern.vertex_count()) {
    // Earlier neighbours of each vertex: the constraints checked when it is placed.
    earlier_.resize(static_cast<std::size_t>(k_));
    for (auto [u, v] : pattern.edges()) earlier_[static_cast<std::size_t>(v)].push_back(u);
    image_.resize(static_cast<std::size_t>(k_));
  }

  std::uint64_t count(const AdjacencyRows& target) {
    target_ = &target;
    if (static_cast<int>(target.size()) < k_) return 0;
    return extend(0, 0);
  }

 private:
  std::uint64_t extend(int v, std::uint32_t used) {
    if (v == k_) return 1;
    std::uint64_t total = 0;
    const int n = static_cast<int>(target_->size());
    for (int w = 0; w < n; ++w) {
      if (used & (1u << w)) continue;
      bool ok = true;
      for (int u : earlier_[static_cast<std::size_t>(v)]) {
        if (!((*target_)[static_cast<std::size_t>(image_[static_cast<std::size_t>(u)])] & (1u << w))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image_[static_cast<std::size_t>(v)] = w;
      total += extend(v + 1, used | (1u << w));
    }
    return total;
  }

  int k_;
  std::vector<std::vector<int>> earlier_;
  std::vector<int> image_;
  const AdjacencyRows* target_ = nullptr;
};

// |Aut(H)| as the number of edge-preserving bijections H -> H.
std::uint64_t self_embeddings(const Pattern& pattern) {
  return EmbeddingCounter(pattern).count(rows_of(pattern));
}

std::uint64_t exact_divide(std::uint64_t maps, std::uint64_t aut) {
  if (maps % aut != 0) {
    throw std::logic_error("injective map count " + std::to_string(maps) +
                           " is not a multiple of |Aut(H)| = " + std::to_string(aut));
  }
  return maps / aut;
}

std::string graph_count_text(int n) {
  const int pairs = LabeledGraph::pair_count(n);
  BigInt count = 1;
  count <<= pairs;
  return "2^" + std::to_string(pairs) + " = " + count.str() + " graphs";
}

void check_cap(int n, const OracleOptions& options) {
  if (options.max_nodes < 0 || options.max_nodes > kOracleHardCap) {
    throw std::invalid_argument("oracle cap must be in 0.." + std::to_string(kOracleHardCap));
  }
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n > options.max_nodes) {
    throw OracleCapExceeded("n = " + std::to_string(n) + " exceeds the exhaustive cap: it needs " +
                            graph_count_text(n) + "; the cap is n = " +
                            std::to_string(options.max_nodes) + " (" +
                            graph_count_text(options.max_nodes) + ")");
  }
}

struct Sums {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t ab = 0;
};

}  // namespace

LabeledGraph::LabeledGraph(int node_count, std::uint64_t edge_mask) : n_(node_count), mask_(edge_mask) {
  if (n_ < 0 || n_ > kMaxNodes) {
    throw std::invalid_argument("labeled graphs support 0.." + std::to_string(kMaxNodes) + " nodes");
  }
  const int pairs = pair_count(n_);
  if (pairs < 64 && (mask_ >> pairs) != 0) throw std::invalid_argument("edge mask has bits past C(n,2)");
}

int LabeledGraph::pair_index(int node_count, int u, int v) {
  if (u > v) std::swap(u, v);
  return u * node_count - u * (u + 1) / 2 + (v - u - 1);
}

bool LabeledGraph::has_edge(int u, int v) const {
  if (u == v) return false;
  return (mask_ >> pair_index(n_, u, v)) & 1u;
}

LabeledGraph LabeledGraph::with_edge(int u, int v) const {
  if (u == v) throw std::invalid_argument("self-loop");
  return LabeledGraph(n_, mask_ | (std::uint64_t{1} << pair_index(n_, u, v)));
}

std::uint64_t count_subgraphs(const LabeledGraph& graph, const Pattern& pattern) {
  const auto maps = EmbeddingCounter(pattern).count(rows_of(graph));
  return exact_divide(maps, self_embeddings(pattern));
}

OracleResult exact_moments(const Pattern& a, const Pattern& b, int n, const OracleOptions& options) {
  check_cap(n, options);
  const int pairs = LabeledGraph::pair_count(n);
  const std::uint64_t graphs = std::uint64_t{1} << pairs;
  const std::uint64_t aut_a = self_embeddings(a);
  const std::uint64_t aut_b = self_embeddings(b);

  unsigned workers = options.workers != 0 ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, graphs));
  std::vector<Sums> partial(workers);

  auto run = [&](unsigned worker) {
    EmbeddingCounter counter_a(a);
    EmbeddingCounter counter_b(b);
    Sums s;
    const std::uint64_t begin = graphs * worker / workers;
    const std::uint64_t end = graphs * (worker + 1) / workers;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      const auto rows = rows_of(LabeledGraph(n, mask));
      const auto ca = exact_divide(counter_a.count(rows), aut_a);
      const auto cb = exact_divide(counter_b.count(rows), aut_b);
      s.a += ca;
      s.b += cb;
      s.ab += ca * cb;
    }
    partial[worker] = s;
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }

  Sums total;
  for (const auto& s : partial) {
    total.a += s.a;
    total.b += s.b;
    total.ab += s.ab;
  }
  const Rational denom{BigInt(graphs)};
  OracleResult r;
  r.n = n;
  r.mean_a = Rational(BigInt(total.a)) / denom;
  r.mean_b = Rational(BigInt(total.b)) / denom;
  r.second_moment = Rational(BigInt(total.ab)) / denom;
  r.covariance = r.second_moment - r.mean_a * r.mean_b;
  return r;
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const VerificationRow& r) { return !r.matches(); }));
}

VerificationReport verify(const Pattern& a, const Pattern& b, std::span<const int> n_values,
                          const EngineOptions& engine, const OracleOptions& oracle) {
  for (int n : n_values) check_cap(n, oracle);
  const auto report = covariance_report(a, b, engine);
  VerificationReport out;
  for (int n : n_values) {
    const auto truth = exact_moments(a, b, n, oracle);
    const Rational at(static_cast<std::int64_t>(n));
    out.rows.push_back({n, report.mean_a.evaluate(at), truth.mean_a, report.mean_b.evaluate(at),
                        truth.mean_b, report.covariance.evaluate(at), truth.covariance});
  }
  return out;
}

}  // namespace polcovar
