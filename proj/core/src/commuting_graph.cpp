#include "comgraph/commuting_graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "comgraph/errors.hpp"
#include "comgraph/parallel.hpp"

namespace comgraph {

namespace {

// Reusable per-worker BFS state over packed bitsets.
struct BfsScratch {
  explicit BfsScratch(std::size_t words) : visited(words), next(words) {}

  std::vector<std::uint64_t> visited;
  std::vector<std::uint64_t> next;
  std::vector<std::uint32_t> frontier;
  std::vector<std::uint32_t> following;
};

struct Eccentricity {
  std::uint32_t value = 0;
  std::uint32_t farthest = 0;  // smallest vertex at maximal distance
  std::uint32_t reached = 0;
};

// Level-synchronous BFS: next = OR of frontier rows, minus visited.
template <typename OnLevel>
void bfs(const CommutingGraph& graph, std::uint32_t source, BfsScratch& s, OnLevel&& on_level) {
  const std::size_t words = graph.words_per_row();
  std::fill(s.visited.begin(), s.visited.end(), 0);
  s.visited[source >> 6] |= std::uint64_t{1} << (source & 63u);
  s.frontier.assign(1, source);
  std::uint32_t level = 0;
  on_level(level, std::span<const std::uint32_t>(s.frontier));
  while (!s.frontier.empty()) {
    std::fill(s.next.begin(), s.next.end(), 0);
    for (const std::uint32_t v : s.frontier) {
      const auto row = graph.row(v);
      for (std::size_t w = 0; w < words; ++w) s.next[w] |= row[w];
    }
    s.following.clear();
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t fresh = s.next[w] & ~s.visited[w];
      s.visited[w] |= fresh;
      while (fresh) {
        s.following.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(fresh)));
        fresh &= fresh - 1;
      }
    }
    s.frontier.swap(s.following);
    if (!s.frontier.empty()) on_level(++level, std::span<const std::uint32_t>(s.frontier));
  }
}

Eccentricity eccentricity(const CommutingGraph& graph, std::uint32_t source, BfsScratch& s) {
  Eccentricity e;
  bfs(graph, source, s, [&](std::uint32_t level, std::span<const std::uint32_t> frontier) {
    e.value = level;
    e.farthest = frontier.front();  // frontier is produced in increasing vertex order
    e.reached += static_cast<std::uint32_t>(frontier.size());
  });
  return e;
}

// Walks back from target to the source along strictly decreasing levels,
// preferring the smallest neighbor at each step.
std::vector<std::uint32_t> trace_path(const CommutingGraph& graph, const std::vector<std::uint32_t>& levels,
                                      std::uint32_t target) {
  std::vector<std::uint32_t> path{target};
  std::uint32_t current = target;
  while (levels[current] != 0) {
    const auto row = graph.row(current);
    std::uint32_t step = kNoVertex;
    for (std::size_t w = 0; w < row.size() && step == kNoVertex; ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        const auto v = static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        if (levels[v] + 1 == levels[current]) {
          step = v;
          break;
        }
      }
    }
    if (step == kNoVertex) throw std::logic_error("broken BFS level structure");
    path.push_back(step);
    current = step;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::string quoted(const std::string& label) {
  std::string out = "\"";
  for (const char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string_view to_string(GraphMode mode) { return mode == GraphMode::full ? "full" : "transversal"; }

CommutingGraph CommutingGraph::build(GroupPtr group, GraphMode mode, unsigned threads) {
  const FiniteGroup& g = *group;
  if (g.is_abelian()) throw EmptyGraph("commuting graph of an abelian group has no vertices");

  CommutingGraph graph;
  graph.group_ = std::move(group);
  graph.mode_ = mode;
  graph.vertex_index_.assign(g.order(), kNoVertex);
  const auto& center = g.center();

  if (mode == GraphMode::full) {
    for (ElementId x = 0; x < g.order(); ++x) {
      if (!g.is_central(x)) graph.vertices_.push_back(x);
    }
    for (std::uint32_t v = 0; v < graph.vertices_.size(); ++v) graph.vertex_index_[graph.vertices_[v]] = v;
  } else {
    std::vector<std::uint32_t> coset_of(g.order(), kNoVertex);
    std::vector<ElementId> representatives;
    for (ElementId x = 0; x < g.order(); ++x) {
      if (g.is_central(x) || coset_of[x] != kNoVertex) continue;
      const auto coset = static_cast<std::uint32_t>(representatives.size());
      ElementId best = x;
      for (const ElementId z : center) {
        const ElementId member = g.multiply(x, z);
        coset_of[member] = coset;
        if (g.encoding(member) < g.encoding(best)) best = member;
      }
      representatives.push_back(best);
    }
    graph.vertices_ = representatives;
    std::sort(graph.vertices_.begin(), graph.vertices_.end());
    std::vector<std::uint32_t> vertex_of_coset(representatives.size());
    for (std::uint32_t v = 0; v < graph.vertices_.size(); ++v) {
      const ElementId rep = graph.vertices_[v];
      vertex_of_coset[coset_of[rep]] = v;
    }
    for (ElementId x = 0; x < g.order(); ++x) {
      if (coset_of[x] != kNoVertex) graph.vertex_index_[x] = vertex_of_coset[coset_of[x]];
    }
    // A single non-central coset would make the group abelian.
    if (graph.vertices_.size() < 2) throw std::logic_error("transversal graph with fewer than two vertices");
  }

  const std::size_t n = graph.vertices_.size();
  graph.words_ = (n + 63) / 64;
  graph.adjacency_.assign(n * graph.words_, 0);

  // Upper triangle: each worker owns whole rows.
  parallel_for(n, threads, [&](std::size_t i, unsigned) {
    const ElementId a = graph.vertices_[i];
    std::uint64_t* row = graph.adjacency_.data() + i * graph.words_;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.commute(a, graph.vertices_[j])) row[j >> 6] |= std::uint64_t{1} << (j & 63u);
    }
  });

  std::uint64_t directed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t* row = graph.adjacency_.data() + i * graph.words_;
    for (std::size_t w = (i + 1) >> 6; w < graph.words_; ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        const std::size_t j = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (j <= i) continue;
        graph.adjacency_[j * graph.words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63u);
        ++directed;
      }
    }
  }
  graph.edge_count_ = directed;
  return graph;
}

std::optional<std::uint32_t> CommutingGraph::vertex_of(ElementId element) const {
  if (element >= vertex_index_.size()) throw std::out_of_range("element id outside the group");
  const std::uint32_t v = vertex_index_[element];
  if (v == kNoVertex) return std::nullopt;
  return v;
}

std::uint32_t CommutingGraph::degree(std::uint32_t v) const {
  std::uint32_t total = 0;
  for (const std::uint64_t w : row(v)) total += static_cast<std::uint32_t>(std::popcount(w));
  return total;
}

std::vector<std::uint32_t> bfs_levels(const CommutingGraph& graph, std::uint32_t source) {
  std::vector<std::uint32_t> levels(graph.vertex_count(), kUnreached);
  BfsScratch scratch(graph.words_per_row());
  bfs(graph, source, scratch, [&](std::uint32_t level, std::span<const std::uint32_t> frontier) {
    for (const std::uint32_t v : frontier) levels[v] = level;
  });
  return levels;
}

PathResult distance(const CommutingGraph& graph, ElementId u, ElementId v) {
  const auto su = graph.vertex_of(u);
  const auto sv = graph.vertex_of(v);
  if (!su) throw CentralVertex(graph.group().format(u) + " is central");
  if (!sv) throw CentralVertex(graph.group().format(v) + " is central");
  PathResult result;
  if (*su == *sv) {
    result.length = 0;
    result.path = {u};
    return result;
  }
  const auto levels = bfs_levels(graph, *su);
  if (levels[*sv] == kUnreached) return result;
  result.length = levels[*sv];
  for (const std::uint32_t vertex : trace_path(graph, levels, *sv)) result.path.push_back(graph.vertices()[vertex]);
  result.path.front() = u;
  result.path.back() = v;
  return result;
}

std::vector<std::vector<ElementId>> components(const CommutingGraph& graph) {
  std::vector<std::vector<ElementId>> out;
  std::vector<bool> seen(graph.vertex_count(), false);
  BfsScratch scratch(graph.words_per_row());
  for (std::uint32_t start = 0; start < graph.vertex_count(); ++start) {
    if (seen[start]) continue;
    std::vector<ElementId> members;
    bfs(graph, start, scratch, [&](std::uint32_t, std::span<const std::uint32_t> frontier) {
      for (const std::uint32_t v : frontier) {
        seen[v] = true;
        members.push_back(graph.vertices()[v]);
      }
    });
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

DiameterReport diameter(const CommutingGraph& graph, unsigned threads) {
  const auto started = std::chrono::steady_clock::now();
  DiameterReport report;
  report.vertex_count = graph.vertex_count();
  report.edge_count = graph.edge_count();
  if (graph.vertex_count() == 0) throw EmptyGraph("diameter of an empty graph");

  const auto parts = components(graph);
  report.component_count = parts.size();
  report.connected = parts.size() == 1;

  if (!report.connected) {
    report.witness_pair = {parts[0].front(), parts[1].front()};
  } else {
    const std::size_t n = graph.vertex_count();
    std::vector<Eccentricity> ecc(n);
    const unsigned workers = resolve_threads(threads);
    std::vector<BfsScratch> scratch;
    scratch.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) scratch.emplace_back(graph.words_per_row());
    parallel_for(n, workers, [&](std::size_t source, unsigned worker) {
      ecc[source] = eccentricity(graph, static_cast<std::uint32_t>(source), scratch[worker]);
    });

    std::uint32_t best_source = 0;
    for (std::uint32_t s = 1; s < n; ++s) {
      if (ecc[s].value > ecc[best_source].value) best_source = s;
    }
    const std::uint32_t target = ecc[best_source].farthest;
    report.diameter = ecc[best_source].value;
    report.witness_pair = {graph.vertices()[best_source], graph.vertices()[target]};
    const auto levels = bfs_levels(graph, best_source);
    for (const std::uint32_t v : trace_path(graph, levels, target)) report.witness_path.push_back(graph.vertices()[v]);
  }
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  return report;
}

std::string diameter_to_string(const std::optional<std::uint32_t>& diameter) {
  return diameter ? std::to_string(*diameter) : std::string("infinity");
}

std::string export_dot(const CommutingGraph& graph) {
  const FiniteGroup& g = graph.group();
  std::ostringstream out;
  out << "graph commuting {\n";
  for (const ElementId v : graph.vertices()) out << "  " << quoted(g.format(v)) << ";\n";
  for (std::uint32_t i = 0; i < graph.vertex_count(); ++i) {
    for (std::uint32_t j = i + 1; j < graph.vertex_count(); ++j) {
      if (graph.adjacent(i, j)) {
        out << "  " << quoted(g.format(graph.vertices()[i])) << " -- " << quoted(g.format(graph.vertices()[j]))
            << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const CommutingGraph& graph) {
  const FiniteGroup& g = graph.group();
  nlohmann::json doc;
  doc["mode"] = std::string(to_string(graph.mode()));
  doc["group_order"] = g.order();
  doc["center_order"] = g.center().size();
  doc["vertex_count"] = graph.vertex_count();
  doc["edge_count"] = graph.edge_count();
  auto& vertices = doc["vertices"] = nlohmann::json::array();
  auto& labels = doc["labels"] = nlohmann::json::array();
  for (const ElementId v : graph.vertices()) {
    vertices.push_back(v);
    labels.push_back(g.format(v));
  }
  auto& edges = doc["edges"] = nlohmann::json::array();
  for (std::uint32_t i = 0; i < graph.vertex_count(); ++i) {
    for (std::uint32_t j = i + 1; j < graph.vertex_count(); ++j) {
      if (graph.adjacent(i, j)) edges.push_back({i, j});
    }
  }
  return doc.dump() + "\n";
}

}  // namespace comgraph
