#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chainsaw {

using Vertex = std::uint32_t;

enum class Role : std::uint8_t { Chain, Blade };

std::string_view to_string(Role r);

// Raised when generator parameters violate a >= b >= 1, n >= 1.
class InvalidParams : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Labeled simple graph with optional self-loops and per-vertex role tags.
///
/// Values are immutable once built. Adjacency lists are sorted and
/// duplicate-free; a self-loop lives only in the loop flags, never in the
/// vertex's own adjacency list.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Edges {v, v} become loops,
    /// repeated edges collapse. Throws std::out_of_range on a bad index
    /// and std::invalid_argument if roles.size() != order.
    static Graph from_edges(std::size_t order,
                            std::span<const std::pair<Vertex, Vertex>> edges,
                            std::vector<Role> roles);

    /// Same, with every vertex tagged Chain.
    static Graph from_edges(std::size_t order,
                            std::span<const std::pair<Vertex, Vertex>> edges);

    std::size_t order() const { return adjacency_.size(); }

    /// Number of non-loop edges.
    std::size_t size() const { return edge_count_; }

    std::size_t loop_count() const;

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    bool has_loop(Vertex v) const { return loops_.at(v); }
    Role role(Vertex v) const { return roles_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    bool adjacent(Vertex u, Vertex v) const;

    /// Non-loop edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Looped vertices in increasing order.
    std::vector<Vertex> loops() const;

    const std::vector<Role>& roles() const { return roles_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<bool> loops_;
    std::vector<Role> roles_;
    std::size_t edge_count_ = 0;
};

/// Subgraph induced by deleting `removed`; survivors keep their relative
/// order and are renumbered 0..order-1.
Graph delete_vertices(const Graph& g, std::span<const Vertex> removed);

/// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

struct ChainsawParams {
    std::uint64_t n = 1;
    std::uint64_t a = 1;
    std::uint64_t b = 1;

    friend auto operator<=>(const ChainsawParams&, const ChainsawParams&) = default;
};

/// Throws InvalidParams unless n >= 1 and a >= b >= 1.
void validate(const ChainsawParams& p);

Graph make_path(std::size_t n);

/// n = 1 is a looped vertex, n = 2 a single edge. Rejects n = 0.
Graph make_cycle(std::size_t n);

/// C(n, a, b). Chain vertices are 0..n-1; blade v occupies
/// n + v*(a-1) .. n + (v+1)*(a-1) - 1. Chain vertex v is joined to the
/// a-b lowest-indexed blade vertices of blade (v+1) mod n.
Graph make_chainsaw(const ChainsawParams& p);

/// P(n, a, b): C(n+1, a, b) with chain vertex 0 removed.
Graph make_broken_chainsaw(const ChainsawParams& p);

}  // namespace chainsaw
