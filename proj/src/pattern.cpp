#include "polcovar/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace polcovar {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

// Nonblank lines, each already split into tokens.
std::vector<std::vector<std::string_view>> tokenized_lines(std::string_view text) {
  std::vector<std::vector<std::string_view>> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto tokens = split_tokens(text.substr(start, end - start));
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    start = end + 1;
  }
  return lines;
}

bool parse_int(std::string_view token, int& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

int parse_parameter(std::string_view name, std::string_view param, int minimum) {
  int value = 0;
  if (!parse_int(param, value) || value < minimum) {
    throw PatternError(PatternErrorKind::kUnknownBuiltin,
                       "builtin '" + std::string(name) + "' needs an integer parameter >= " +
                           std::to_string(minimum));
  }
  return value;
}

Pattern clique(int k) {
  std::vector<Edge> edges;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  return Pattern(k, edges);
}

Pattern cycle(int k) {
  std::vector<Edge> edges;
  for (int v = 0; v < k; ++v) edges.emplace_back(v, (v + 1) % k);
  return Pattern(k, edges);
}

Pattern path(int k) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
  return Pattern(k, edges);
}

Pattern star(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Pattern(leaves + 1, edges);
}

}  // namespace

std::string_view to_string(PatternErrorKind kind) {
  switch (kind) {
    case PatternErrorKind::kEmptyInput: return "empty input";
    case PatternErrorKind::kNotSquare: return "matrix not square";
    case PatternErrorKind::kInvalidEntry: return "entry not 0/1";
    case PatternErrorKind::kAsymmetric: return "matrix not symmetric";
    case PatternErrorKind::kNonzeroDiagonal: return "nonzero diagonal";
    case PatternErrorKind::kSelfLoop: return "self-loop";
    case PatternErrorKind::kIndexOutOfRange: return "vertex index out of range";
    case PatternErrorKind::kMalformedLine: return "malformed line";
    case PatternErrorKind::kUnknownBuiltin: return "unknown builtin";
    case PatternErrorKind::kInvalidPermutation: return "invalid permutation";
  }
  return "pattern error";
}

PatternError::PatternError(PatternErrorKind kind, const std::string& message)
    : std::invalid_argument(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

Pattern::Pattern(int vertex_count, std::span<const Edge> edges) : k_(vertex_count) {
  if (k_ < 1) throw PatternError(PatternErrorKind::kEmptyInput, "a pattern needs at least one vertex");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= k_ || v >= k_) {
      throw PatternError(PatternErrorKind::kIndexOutOfRange,
                         "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") with k = " + std::to_string(k_));
    }
    if (u == v) throw PatternError(PatternErrorKind::kSelfLoop, "vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Pattern::has_edge(int u, int v) const {
  Edge e{std::min(u, v), std::max(u, v)};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Pattern::degree(int v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) {
    return e.first == v || e.second == v;
  }));
}

std::string Pattern::to_adjacency_matrix() const {
  std::ostringstream out;
  for (int u = 0; u < k_; ++u) {
    for (int v = 0; v < k_; ++v) {
      if (v > 0) out << ' ';
      out << (has_edge(u, v) ? '1' : '0');
    }
    out << '\n';
  }
  return out.str();
}

std::string Pattern::to_edge_list() const {
  std::ostringstream out;
  out << k_ << '\n';
  for (auto [u, v] : edges_) out << u << ' ' << v << '\n';
  return out.str();
}

Pattern parse_adjacency_matrix(std::string_view text) {
  auto lines = tokenized_lines(text);
  if (lines.empty()) throw PatternError(PatternErrorKind::kEmptyInput, "no matrix rows");
  const auto k = lines.size();
  std::vector<std::vector<int>> m(k, std::vector<int>(k));
  for (std::size_t r = 0; r < k; ++r) {
    if (lines[r].size() != k) {
      throw PatternError(PatternErrorKind::kNotSquare,
                         "row " + std::to_string(r) + " has " + std::to_string(lines[r].size()) +
                             " entries, expected " + std::to_string(k));
    }
    for (std::size_t c = 0; c < k; ++c) {
      auto tok = lines[r][c];
      if (tok != "0" && tok != "1") {
        throw PatternError(PatternErrorKind::kInvalidEntry,
                           "entry (" + std::to_string(r) + ", " + std::to_string(c) + ") is '" +
                               std::string(tok) + "'");
      }
      m[r][c] = tok == "1";
    }
  }
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < k; ++r) {
    if (m[r][r] != 0) {
      throw PatternError(PatternErrorKind::kNonzeroDiagonal, "entry (" + std::to_string(r) + ", " +
                                                                 std::to_string(r) + ") is 1");
    }
    for (std::size_t c = r + 1; c < k; ++c) {
      if (m[r][c] != m[c][r]) {
        throw PatternError(PatternErrorKind::kAsymmetric, "entries (" + std::to_string(r) + ", " +
                                                              std::to_string(c) + ") and (" +
                                                              std::to_string(c) + ", " +
                                                              std::to_string(r) + ") differ");
      }
      if (m[r][c]) edges.emplace_back(static_cast<int>(r), static_cast<int>(c));
    }
  }
  return Pattern(static_cast<int>(k), edges);
}

Pattern parse_edge_list(std::string_view text) {
  auto lines = tokenized_lines(text);
  if (lines.empty()) throw PatternError(PatternErrorKind::kEmptyInput, "no vertex count line");
  int k = 0;
  if (lines[0].size() != 1 || !parse_int(lines[0][0], k) || k < 1) {
    throw PatternError(PatternErrorKind::kMalformedLine,
                       "first line must be a positive vertex count");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    int u = 0;
    int v = 0;
    if (lines[i].size() != 2 || !parse_int(lines[i][0], u) || !parse_int(lines[i][1], v)) {
      throw PatternError(PatternErrorKind::kMalformedLine,
                         "edge line " + std::to_string(i) + " must be two integers 'u v'");
    }
    edges.emplace_back(u, v);
  }
  return Pattern(k, edges);
}

Pattern parse_pattern(std::string_view text) {
  auto lines = tokenized_lines(text);
  if (lines.empty()) throw PatternError(PatternErrorKind::kEmptyInput, "no pattern given");
  bool single_token = lines[0].size() == 1;
  bool matrix_token = lines[0][0] == "0" || lines[0][0] == "1";
  if (single_token && (lines.size() > 1 || !matrix_token)) return parse_edge_list(text);
  return parse_adjacency_matrix(text);
}

Pattern builtin_pattern(std::string_view name) {
  if (name == "node") return clique(1);
  if (name == "edge") return clique(2);
  if (name == "wedge") return path(3);
  if (name == "triangle") return clique(3);
  if (name == "square") return cycle(4);
  if (name == "k4") return clique(4);

  auto colon = name.find(':');
  if (colon != std::string_view::npos) {
    auto family = name.substr(0, colon);
    auto param = name.substr(colon + 1);
    if (family == "clique") return clique(parse_parameter(name, param, 1));
    if (family == "cycle") return cycle(parse_parameter(name, param, 3));
    if (family == "path") return path(parse_parameter(name, param, 1));
    if (family == "star") return star(parse_parameter(name, param, 1));
  }
  throw PatternError(PatternErrorKind::kUnknownBuiltin, "'" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
  return {"node", "edge", "wedge", "triangle", "square", "k4",
          "clique:K", "cycle:K", "path:K", "star:K"};
}

Pattern relabel(const Pattern& pattern, std::span<const int> perm) {
  const int k = pattern.vertex_count();
  std::vector<bool> seen(static_cast<std::size_t>(k));
  bool ok = static_cast<int>(perm.size()) == k;
  for (std::size_t i = 0; ok && i < perm.size(); ++i) {
    int p = perm[i];
    ok = p >= 0 && p < k && !seen[static_cast<std::size_t>(p)];
    if (ok) seen[static_cast<std::size_t>(p)] = true;
  }
  if (!ok) {
    throw PatternError(PatternErrorKind::kInvalidPermutation,
                       "not a bijection on 0.." + std::to_string(k - 1));
  }
  std::vector<Edge> edges;
  for (auto [u, v] : pattern.edges()) edges.emplace_back(perm[u], perm[v]);
  return Pattern(k, edges);
}

}  // namespace polcovar
