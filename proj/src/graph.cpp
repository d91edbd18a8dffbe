#include "chainsaw/graph.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace chainsaw {

std::string_view to_string(Role r)
{
    return r == Role::Chain ? "chain" : "blade";
}

Graph Graph::from_edges(std::size_t order,
                        std::span<const std::pair<Vertex, Vertex>> edges,
                        std::vector<Role> roles)
{
    if (roles.size() != order)
        throw std::invalid_argument("role count does not match vertex count");

    Graph g;
    g.adjacency_.resize(order);
    g.loops_.assign(order, false);
    g.roles_ = std::move(roles);

    for (auto [u, v] : edges) {
        if (u >= order || v >= order)
            throw std::out_of_range("edge endpoint " + std::to_string(std::max(u, v)) +
                                    " outside 0.." + std::to_string(order));
        if (u == v) {
            g.loops_[u] = true;
            continue;
        }
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }

    for (auto& nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.edge_count_ += nbrs.size();
    }
    g.edge_count_ /= 2;
    return g;
}

Graph Graph::from_edges(std::size_t order,
                        std::span<const std::pair<Vertex, Vertex>> edges)
{
    return from_edges(order, edges, std::vector<Role>(order, Role::Chain));
}

std::size_t Graph::loop_count() const
{
    return static_cast<std::size_t>(std::count(loops_.begin(), loops_.end(), true));
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    if (u == v)
        return has_loop(u);
    const auto& nbrs = adjacency_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::vector<Vertex> Graph::loops() const
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < order(); ++v)
        if (loops_[v])
            out.push_back(v);
    return out;
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> removed)
{
    constexpr Vertex gone = ~Vertex{0};
    std::vector<Vertex> relabel(g.order(), 0);
    for (Vertex v : removed)
        relabel.at(v) = gone;

    std::vector<Role> roles;
    Vertex next = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (relabel[v] == gone)
            continue;
        relabel[v] = next++;
        roles.push_back(g.role(v));
    }

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [u, v] : g.edges())
        if (relabel[u] != gone && relabel[v] != gone)
            edges.emplace_back(relabel[u], relabel[v]);
    for (Vertex v : g.loops())
        if (relabel[v] != gone)
            edges.emplace_back(relabel[v], relabel[v]);

    return Graph::from_edges(next, edges, std::move(roles));
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    const auto shift = static_cast<Vertex>(a.order());
    auto edges = a.edges();
    for (Vertex v : a.loops())
        edges.emplace_back(v, v);
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + shift, v + shift);
    for (Vertex v : b.loops())
        edges.emplace_back(v + shift, v + shift);

    auto roles = a.roles();
    roles.insert(roles.end(), b.roles().begin(), b.roles().end());
    return Graph::from_edges(a.order() + b.order(), edges, std::move(roles));
}

void validate(const ChainsawParams& p)
{
    if (p.n < 1 || p.a < 1 || p.b < 1)
        throw InvalidParams("chainsaw parameters must satisfy n >= 1, a >= 1, b >= 1");
    if (p.a < p.b)
        throw InvalidParams("chainsaw parameters must satisfy a >= b (got a=" +
                            std::to_string(p.a) + ", b=" + std::to_string(p.b) + ")");
}

Graph make_path(std::size_t n)
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph make_cycle(std::size_t n)
{
    if (n == 0)
        throw InvalidParams("a cycle needs at least one vertex");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < n; ++i)
        edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    // n = 1 gives (0, 0), a loop; n = 2 gives (0,1) twice, collapsed.
    return Graph::from_edges(n, edges);
}

Graph make_chainsaw(const ChainsawParams& p)
{
    validate(p);
    const std::uint64_t n = p.n;
    const std::uint64_t per_blade = p.a - 1;
    const std::uint64_t order = n * p.a;

    auto blade_vertex = [&](std::uint64_t blade, std::uint64_t k) {
        return static_cast<Vertex>(n + blade * per_blade + k);
    };

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::uint64_t v = 0; v < n; ++v)
        edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));

    for (std::uint64_t v = 0; v < n; ++v) {
        // K_a on the chain vertex and its blade.
        for (std::uint64_t i = 0; i < per_blade; ++i) {
            edges.emplace_back(static_cast<Vertex>(v), blade_vertex(v, i));
            for (std::uint64_t j = i + 1; j < per_blade; ++j)
                edges.emplace_back(blade_vertex(v, i), blade_vertex(v, j));
        }
        const std::uint64_t next = (v + 1) % n;
        for (std::uint64_t k = 0; k < p.a - p.b; ++k)
            edges.emplace_back(static_cast<Vertex>(v), blade_vertex(next, k));
    }

    std::vector<Role> roles(order, Role::Blade);
    std::fill_n(roles.begin(), n, Role::Chain);
    return Graph::from_edges(order, edges, std::move(roles));
}

Graph make_broken_chainsaw(const ChainsawParams& p)
{
    validate(p);
    const Vertex zero = 0;
    Graph g = delete_vertices(make_chainsaw({p.n + 1, p.a, p.b}), std::span(&zero, 1));
    assert(g.order() == (p.n + 1) * p.a - 1);
    return g;
}

}  // namespace chainsaw
