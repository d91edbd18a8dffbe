#include <doctest.h>

#include <algorithm>
#include <set>

#include "chainsaw/graph.hpp"
#include "chainsaw/graph_io.hpp"

using namespace chainsaw;

namespace {

std::vector<std::size_t> degrees(const Graph& g)
{
    std::vector<std::size_t> d;
    for (Vertex v = 0; v < g.order(); ++v)
        d.push_back(g.degree(v));
    return d;
}

void check_well_formed(const Graph& g)
{
    for (Vertex v = 0; v < g.order(); ++v) {
        auto nbrs = g.neighbors(v);
        CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
        CHECK(std::adjacent_find(nbrs.begin(), nbrs.end()) == nbrs.end());
        CHECK(std::find(nbrs.begin(), nbrs.end(), v) == nbrs.end());
        for (Vertex u : nbrs) {
            REQUIRE(u < g.order());
            CHECK(g.adjacent(u, v));
        }
    }
}

std::size_t chainsaw_edges(std::uint64_t n, std::uint64_t a, std::uint64_t b)
{
    return n * (a * (a - 1) / 2 + 1 + (a - b));
}

}  // namespace

TEST_CASE("make_path")
{
    CHECK(make_path(0).order() == 0);
    CHECK(make_path(0).size() == 0);
    CHECK(make_path(1).order() == 1);
    CHECK(make_path(1).size() == 0);

    const auto p4 = make_path(4);
    CHECK(p4.order() == 4);
    CHECK(p4.size() == 3);
    CHECK(degrees(p4) == std::vector<std::size_t>{1, 2, 2, 1});
    CHECK(p4.loops().empty());
    CHECK(std::all_of(p4.roles().begin(), p4.roles().end(), [](Role r) { return r == Role::Chain; }));
}

TEST_CASE("make_cycle conventions")
{
    const auto c1 = make_cycle(1);
    CHECK(c1.order() == 1);
    CHECK(c1.loops() == std::vector<Vertex>{0});
    CHECK(c1.size() == 0);
    CHECK(c1.neighbors(0).empty());

    const auto c2 = make_cycle(2);
    CHECK(c2.order() == 2);
    CHECK(c2.size() == 1);
    CHECK(c2.loops().empty());

    const auto c5 = make_cycle(5);
    CHECK(c5.size() == 5);
    CHECK(degrees(c5) == std::vector<std::size_t>(5, 2));

    CHECK_THROWS_AS(make_cycle(0), InvalidParams);
}

TEST_CASE("make_chainsaw small cases")
{
    const auto c111 = make_chainsaw({1, 1, 1});
    CHECK(c111 == make_cycle(1));

    // u0=0, u1=1, w0=2, w1=3
    const auto c221 = make_chainsaw({2, 2, 1});
    CHECK(c221.order() == 4);
    using E = std::pair<Vertex, Vertex>;
    CHECK(c221.edges() == std::vector<E>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(c221.role(0) == Role::Chain);
    CHECK(c221.role(1) == Role::Chain);
    CHECK(c221.role(2) == Role::Blade);
    CHECK(c221.role(3) == Role::Blade);
}

TEST_CASE("make_chainsaw C(6,5,3)")
{
    const auto g = make_chainsaw({6, 5, 3});
    CHECK(g.order() == 30);
    CHECK(g.size() == chainsaw_edges(6, 5, 3));
    // 2 on the cycle, 4 in its own blade, a-b = 2 into the next blade.
    // The incoming extra edges land on blade vertices, not on the chain vertex.
    for (Vertex v = 0; v < 6; ++v)
        CHECK(g.degree(v) == 8);

    // Blade 1 holds vertices 10..13; its two lowest receive chain vertex 0.
    CHECK(g.adjacent(0, 10));
    CHECK(g.adjacent(0, 11));
    CHECK_FALSE(g.adjacent(0, 12));
    CHECK(g.degree(10) == 5);
    CHECK(g.degree(12) == 4);
}

TEST_CASE("make_chainsaw n = 1 absorbs extra edges")
{
    const auto g = make_chainsaw({1, 4, 2});
    CHECK(g.order() == 4);
    CHECK(g.loops() == std::vector<Vertex>{0});
    CHECK(g.size() == 6);  // K_4 only
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(make_chainsaw({1, 2, 3}), InvalidParams);
    CHECK_THROWS_AS(make_chainsaw({0, 2, 1}), InvalidParams);
    CHECK_THROWS_AS(make_chainsaw({2, 2, 0}), InvalidParams);
    CHECK_THROWS_AS(make_broken_chainsaw({3, 1, 2}), InvalidParams);
    CHECK_THROWS_WITH(make_chainsaw({1, 2, 3}), doctest::Contains("a >= b"));
}

TEST_CASE("make_broken_chainsaw small cases")
{
    CHECK(make_broken_chainsaw({1, 1, 1}) == make_path(1));
    CHECK(make_broken_chainsaw({3, 1, 1}) == make_path(3));

    // w0 = 1, u1 = 0, w1 = 2
    const auto g = make_broken_chainsaw({1, 2, 1});
    CHECK(g.order() == 3);
    using E = std::pair<Vertex, Vertex>;
    CHECK(g.edges() == std::vector<E>{{0, 1}, {0, 2}});
    CHECK(g.role(0) == Role::Chain);
    CHECK(g.role(1) == Role::Blade);
}

TEST_CASE("generator invariants over a parameter grid")
{
    for (std::uint64_t n = 1; n <= 7; ++n) {
        CHECK(make_chainsaw({n, 1, 1}) == make_cycle(n));
        CHECK(make_broken_chainsaw({n, 1, 1}) == make_path(n));
        for (std::uint64_t a = 1; a <= 5; ++a) {
            for (std::uint64_t b = 1; b <= a; ++b) {
                CAPTURE(n);
                CAPTURE(a);
                CAPTURE(b);
                const auto c = make_chainsaw({n, a, b});
                const auto p = make_broken_chainsaw({n, a, b});
                check_well_formed(c);
                check_well_formed(p);
                CHECK(c.order() == n * a);
                CHECK(p.order() == (n + 1) * a - 1);
                if (n >= 3)
                    CHECK(c.size() == chainsaw_edges(n, a, b));

                // Blade vertices: exactly a-1 per blade, each blade a clique
                // whose members meet no other blade's members.
                const std::uint64_t per = a - 1;
                for (std::uint64_t blade = 0; blade < n; ++blade) {
                    for (std::uint64_t i = 0; i < per; ++i) {
                        const auto x = static_cast<Vertex>(n + blade * per + i);
                        CHECK(c.role(x) == Role::Blade);
                        CHECK(c.adjacent(x, static_cast<Vertex>(blade)));
                        for (Vertex y : c.neighbors(x)) {
                            if (c.role(y) != Role::Blade)
                                continue;
                            CHECK((y - n) / per == blade);
                        }
                        for (std::uint64_t j = 0; j < per; ++j)
                            if (j != i)
                                CHECK(c.adjacent(x, static_cast<Vertex>(n + blade * per + j)));
                    }
                }
                const auto chains = std::count(p.roles().begin(), p.roles().end(), Role::Chain);
                CHECK(static_cast<std::uint64_t>(chains) == n);
            }
        }
    }
}

TEST_CASE("from_edges normalizes input")
{
    using E = std::pair<Vertex, Vertex>;
    const std::vector<E> edges{{1, 0}, {0, 1}, {2, 2}, {1, 2}};
    const auto g = Graph::from_edges(3, edges);
    CHECK(g.size() == 2);
    CHECK(g.loops() == std::vector<Vertex>{2});
    CHECK(g.edges() == std::vector<E>{{0, 1}, {1, 2}});

    const std::vector<E> bad{{0, 3}};
    CHECK_THROWS_AS(Graph::from_edges(3, bad), std::out_of_range);
    CHECK_THROWS_AS(Graph::from_edges(2, edges, {Role::Chain}), std::invalid_argument);
}

TEST_CASE("delete_vertices and disjoint_union")
{
    const auto c5 = make_cycle(5);
    const Vertex zero = 0;
    CHECK(delete_vertices(c5, std::span(&zero, 1)) == make_path(4));

    const auto u = disjoint_union(make_path(2), make_cycle(1));
    CHECK(u.order() == 3);
    CHECK(u.size() == 1);
    CHECK(u.loops() == std::vector<Vertex>{2});
}

TEST_CASE("export formats")
{
    CHECK(export_graph(make_path(2), GraphFormat::EdgeList) == "0 1\n");
    CHECK(export_graph(make_cycle(1), GraphFormat::EdgeList) == "0 0\n");
    CHECK(export_graph(make_path(0), GraphFormat::EdgeList).empty());
    CHECK(export_graph(make_cycle(3), GraphFormat::Dimacs) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    CHECK(export_graph(make_cycle(1), GraphFormat::Dimacs) == "p edge 1 1\ne 1 1\n");
    CHECK(export_graph(make_broken_chainsaw({1, 2, 1}), GraphFormat::Json) ==
          "{\"edges\":[[0,1],[0,2]],\"loops\":[],\"order\":3,\"roles\":[\"chain\",\"blade\",\"blade\"]}\n");

    CHECK(parse_graph_format("dimacs") == GraphFormat::Dimacs);
    CHECK_FALSE(parse_graph_format("graph6").has_value());
}

TEST_CASE("json round trip preserves graphs")
{
    for (std::uint64_t n = 1; n <= 5; ++n)
        for (std::uint64_t a = 1; a <= 4; ++a)
            for (std::uint64_t b = 1; b <= a; ++b) {
                for (const auto& g : {make_chainsaw({n, a, b}), make_broken_chainsaw({n, a, b})}) {
                    const auto text = export_graph(g, GraphFormat::Json);
                    const auto back = import_graph_json(text);
                    CHECK(back == g);
                    CHECK(export_graph(back, GraphFormat::Json) == text);
                }
            }
}

TEST_CASE("json import rejects malformed input")
{
    CHECK_THROWS_AS(import_graph_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(import_graph_json(R"({"order":2,"edges":[[0,5]]})"), std::invalid_argument);
    CHECK_THROWS_AS(import_graph_json(R"({"order":2,"edges":[[0]]})"), std::invalid_argument);
    CHECK_THROWS_AS(import_graph_json(R"({"order":1,"edges":[],"roles":["spoke"]})"),
                    std::invalid_argument);
    CHECK(import_graph_json(R"({"order":2,"edges":[[0,1]]})") == make_path(2));
}
