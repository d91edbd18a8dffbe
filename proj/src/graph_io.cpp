#include "chainsaw/graph_io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace chainsaw {

namespace {

std::vector<std::pair<Vertex, Vertex>> edges_with_loops(const Graph& g)
{
    auto all = g.edges();
    for (Vertex v : g.loops())
        all.emplace_back(v, v);
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

std::optional<GraphFormat> parse_graph_format(std::string_view name)
{
    if (name == "edge-list")
        return GraphFormat::EdgeList;
    if (name == "dimacs")
        return GraphFormat::Dimacs;
    if (name == "json")
        return GraphFormat::Json;
    return std::nullopt;
}

std::string export_graph(const Graph& g, GraphFormat format)
{
    std::ostringstream out;
    switch (format) {
    case GraphFormat::EdgeList:
        for (auto [u, v] : edges_with_loops(g))
            out << u << ' ' << v << '\n';
        break;
    case GraphFormat::Dimacs: {
        auto all = edges_with_loops(g);
        out << "p edge " << g.order() << ' ' << all.size() << '\n';
        for (auto [u, v] : all)
            out << "e " << u + 1 << ' ' << v + 1 << '\n';
        break;
    }
    case GraphFormat::Json: {
        nlohmann::json j;
        j["order"] = g.order();
        j["edges"] = nlohmann::json::array();
        for (auto [u, v] : g.edges())
            j["edges"].push_back({u, v});
        j["loops"] = g.loops();
        j["roles"] = nlohmann::json::array();
        for (Role r : g.roles())
            j["roles"].push_back(to_string(r));
        out << j.dump() << '\n';
        break;
    }
    }
    return out.str();
}

Graph import_graph_json(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        const auto order = j.at("order").get<std::size_t>();

        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("edge entries must be [u, v] pairs");
            edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
        }
        for (const auto& v : j.value("loops", nlohmann::json::array()))
            edges.emplace_back(v.get<Vertex>(), v.get<Vertex>());

        std::vector<Role> roles;
        if (j.contains("roles")) {
            for (const auto& r : j.at("roles")) {
                const auto name = r.get<std::string>();
                if (name == "chain")
                    roles.push_back(Role::Chain);
                else if (name == "blade")
                    roles.push_back(Role::Blade);
                else
                    throw std::invalid_argument("unknown role '" + name + "'");
            }
        } else {
            roles.assign(order, Role::Chain);
        }
        return Graph::from_edges(order, edges, std::move(roles));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed graph json: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw std::invalid_argument(std::string("malformed graph json: ") + e.what());
    }
}

}  // namespace chainsaw
