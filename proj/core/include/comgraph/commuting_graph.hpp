#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "comgraph/finite_group.hpp"

namespace comgraph {

enum class GraphMode { full, transversal };

std::string_view to_string(GraphMode mode);

/// Graph on the non-central elements of a group, adjacent iff distinct and
/// commuting. In transversal mode each Z(G)-coset collapses to its
/// encoding-minimal member. Adjacency is one packed bitset row per vertex.
class CommutingGraph {
 public:
  /// Throws EmptyGraph for abelian groups.
  static CommutingGraph build(GroupPtr group, GraphMode mode, unsigned threads = 0);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  GraphMode mode() const { return mode_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::uint64_t edge_count() const { return edge_count_; }
  /// Element ids of the vertices, increasing.
  std::span<const ElementId> vertices() const { return vertices_; }
  /// Vertex containing the element (its coset in transversal mode); nullopt if central.
  std::optional<std::uint32_t> vertex_of(ElementId element) const;

  std::size_t words_per_row() const { return words_; }
  std::span<const std::uint64_t> row(std::uint32_t v) const {
    return {adjacency_.data() + std::size_t{v} * words_, words_};
  }
  bool adjacent(std::uint32_t u, std::uint32_t v) const {
    return (adjacency_[std::size_t{u} * words_ + (v >> 6)] >> (v & 63u)) & 1u;
  }
  std::uint32_t degree(std::uint32_t v) const;

 private:
  CommutingGraph() = default;

  GroupPtr group_;
  GraphMode mode_ = GraphMode::transversal;
  std::vector<ElementId> vertices_;
  std::vector<std::uint32_t> vertex_index_;  // element id -> vertex, kNoVertex if central
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adjacency_;
  std::uint64_t edge_count_ = 0;
};

inline constexpr std::uint32_t kNoVertex = ~std::uint32_t{0};
inline constexpr std::uint32_t kUnreached = ~std::uint32_t{0};

/// Shortest path between the vertices holding two elements. length is nullopt
/// when they lie in different components. The path lists element ids; its
/// endpoints are the query elements and interior entries are vertex
/// representatives. Same-vertex queries give length 0 and path {u}.
struct PathResult {
  std::optional<std::uint32_t> length;
  std::vector<ElementId> path;
};

/// Throws CentralVertex if u or v is central.
PathResult distance(const CommutingGraph& graph, ElementId u, ElementId v);

/// Breadth-first levels from a vertex; kUnreached marks other components.
std::vector<std::uint32_t> bfs_levels(const CommutingGraph& graph, std::uint32_t source);

/// Connected components as sorted element-id lists, ordered by smallest member.
std::vector<std::vector<ElementId>> components(const CommutingGraph& graph);

struct DiameterReport {
  bool connected = false;
  /// nullopt encodes an infinite diameter (disconnected graph).
  std::optional<std::uint32_t> diameter;
  /// Lexicographically smallest pair attaining the diameter, or the smallest
  /// members of the first two components when disconnected.
  std::pair<ElementId, ElementId> witness_pair{0, 0};
  /// Empty when disconnected.
  std::vector<ElementId> witness_path;
  std::size_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  std::size_t component_count = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Exact diameter by breadth-first search from every vertex.
DiameterReport diameter(const CommutingGraph& graph, unsigned threads = 0);

std::string diameter_to_string(const std::optional<std::uint32_t>& diameter);

/// Graphviz DOT with quoted element labels; vertices in id order, edges lexicographic.
std::string export_dot(const CommutingGraph& graph);
/// {"vertices", "labels", "edges", "mode", "group_order", "center_order", "vertex_count", "edge_count"}.
std::string export_json(const CommutingGraph& graph);

}  // namespace comgraph
