// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "chainsaw/cli.hpp"
#include "chainsaw/graph.hpp"
#include "chainsaw/graph_io.hpp"
#include "chainsaw/independence.hpp"
#include "chainsaw/sequences.hpp"

using namespace chainsaw;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string tuple(std::uint64_t n, std::uint64_t a, std::uint64_t b)
{
    return "(" + std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(b) + ")";
}

constexpr std::size_t kBruteLimit = 24;

// 1. i(P_n) = U_{n+2}(1,-1), i(C_n) = V_n(1,-1) for 1 <= n <= 18, under 10 s.
Outcome path_and_cycle_counts()
{
    Outcome o;
    const auto start = Clock::now();
    for (std::uint64_t n = 1; n <= 18; ++n) {
        o.expect(count_via_elimination(make_path(n)) == lucas_U(n + 2, 1, -1),
                 "path n=" + std::to_string(n));
        o.expect(count_via_elimination(make_cycle(n)) == lucas_V(n, 1, -1),
                 "cycle n=" + std::to_string(n));
    }
    const double t = seconds_since(start);
    o.expect(t < 10.0, "took " + std::to_string(t) + " s");
    return o;
}

// 2. Chainsaw and broken chainsaw counts against V_n(a,-b) and U_{n+2}(a,-b)
//    for n <= 8, b <= a <= 4, brute force confirming up to 24 vertices; under 60 s.
Outcome chainsaw_counts()
{
    Outcome o;
    const auto start = Clock::now();
    for (std::uint64_t n = 1; n <= 8; ++n)
        for (std::uint64_t a = 1; a <= 4; ++a)
            for (std::uint64_t b = 1; b <= a; ++b) {
                const BigInt neg_b = -BigInt(static_cast<unsigned long>(b));
                const auto c = make_chainsaw({n, a, b});
                const auto p = make_broken_chainsaw({n, a, b});
                const BigInt ci = count_via_elimination(c);
                const BigInt pi = count_via_elimination(p);
                o.expect(ci == lucas_V(n, a, neg_b), "C" + tuple(n, a, b));
                o.expect(pi == lucas_U(n + 2, a, neg_b), "P" + tuple(n, a, b));
                if (c.order() <= kBruteLimit)
                    o.expect(count_brute_force(c, kBruteLimit) == ci, "brute C" + tuple(n, a, b));
                if (p.order() <= kBruteLimit)
                    o.expect(count_brute_force(p, kBruteLimit) == pi, "brute P" + tuple(n, a, b));
            }
    const double t = seconds_since(start);
    o.expect(t < 60.0, "took " + std::to_string(t) + " s");
    return o;
}

// 3. Brute-force chain strata equal the product-formula strata.
Outcome stratified_counts()
{
    Outcome o;
    for (std::uint64_t n = 1; n <= 8; ++n)
        for (std::uint64_t a = 1; a <= 4; ++a)
            for (std::uint64_t b = 1; b <= a; ++b) {
                const auto c = make_chainsaw({n, a, b});
                if (c.order() <= kBruteLimit)
                    o.expect(brute_force_strata(c, kBruteLimit) ==
                                 stratified_closed_form({n, a, b}, Family::Chainsaw),
                             "C" + tuple(n, a, b));
                const auto p = make_broken_chainsaw({n, a, b});
                if (p.order() <= kBruteLimit)
                    o.expect(brute_force_strata(p, kBruteLimit) ==
                                 stratified_closed_form({n, a, b}, Family::Broken),
                             "P" + tuple(n, a, b));
            }
    return o;
}

// 4. Independence polynomial coefficients of P_n, C_n against the binomial forms.
Outcome path_cycle_strata()
{
    Outcome o;
    for (std::uint64_t n = 1; n <= 18; ++n) {
        const auto path = independence_polynomial(make_path(n));
        const auto cycle = independence_polynomial(make_cycle(n));
        const auto sn = static_cast<std::int64_t>(n);
        for (std::int64_t t = 0; t <= sn + 1; ++t) {
            o.expect(path[t] == binomial(sn - t + 1, t),
                     "path n=" + std::to_string(n) + " t=" + std::to_string(t));
            o.expect(cycle[t] == binomial(sn - t, t) + binomial(sn - t - 1, t - 1),
                     "cycle n=" + std::to_string(n) + " t=" + std::to_string(t));
        }
    }
    return o;
}

// 5. D_n(x,y) = V_n(x,y), E_n(x,y) = U_{n+1}(x,y) for n <= 40, x,y in -3..3.
Outcome dickson_lucas()
{
    Outcome o;
    for (std::uint64_t n = 0; n <= 40; ++n)
        for (int x = -3; x <= 3; ++x)
            for (int y = -3; y <= 3; ++y) {
                const std::string at = " n=" + std::to_string(n) + " x=" + std::to_string(x) +
                                       " y=" + std::to_string(y);
                o.expect(dickson_D_sum(n, x, y) == lucas_V(n, x, y), "D" + at);
                o.expect(dickson_E_sum(n, x, y) == lucas_U(n + 1, x, y), "E" + at);
            }
    return o;
}

// 6. matrix = recurrence on the grid up to n = 200; elimination = brute force
//    on 200 seeded random graphs with at most 18 vertices.
Outcome engine_agreement()
{
    Outcome o;
    constexpr SequenceKind kinds[] = {SequenceKind::LucasU, SequenceKind::LucasV,
                                      SequenceKind::DicksonD, SequenceKind::DicksonE};
    for (auto kind : kinds)
        for (int x = -3; x <= 3; ++x)
            for (int y = -3; y <= 3; ++y)
                for (std::uint64_t n = 0; n <= 200; ++n)
                    o.expect(evaluate({kind, n, x, y, EvalMethod::Matrix}) ==
                                 evaluate({kind, n, x, y, EvalMethod::Recurrence}),
                             std::string(to_string(kind)) + " n=" + std::to_string(n));

    std::mt19937_64 rng(0xC4A1'5A3ULL);
    std::uniform_int_distribution<std::size_t> order(1, 18);
    std::uniform_real_distribution<double> density(0.05, 0.6);
    std::bernoulli_distribution edge_coin(0.5);
    for (int i = 0; i < 200; ++i) {
        const std::size_t k = order(rng);
        std::bernoulli_distribution edge(density(rng));
        std::bernoulli_distribution loop(0.05);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex u = 0; u < k; ++u) {
            if (loop(rng))
                edges.emplace_back(u, u);
            for (Vertex v = u + 1; v < k; ++v)
                if (edge(rng))
                    edges.emplace_back(u, v);
        }
        const auto g = Graph::from_edges(k, edges);
        o.expect(count_via_elimination(g) == count_brute_force(g),
                 "random graph #" + std::to_string(i));
        o.expect(independence_polynomial(g).total() == count_brute_force(g),
                 "random graph polynomial #" + std::to_string(i));
    }
    return o;
}

// 7. closed form for C(10^5, 7, 3) via V_n matrix power under 5 s; elimination
//    on C(30,3,2) under 30 s and equal to the closed form.
Outcome performance()
{
    Outcome o;
    auto start = Clock::now();
    const BigInt by_matrix =
        evaluate({SequenceKind::LucasV, 100000, 7, -3, EvalMethod::Matrix});
    const BigInt closed = closed_form_count({100000, 7, 3}, Family::Chainsaw);
    double t = seconds_since(start);
    o.expect(closed == by_matrix, "C(100000,7,3) closed form != V_n matrix");
    o.expect(t < 5.0, "C(100000,7,3) took " + std::to_string(t) + " s");

    start = Clock::now();
    const BigInt eliminated = count_via_elimination(make_chainsaw({30, 3, 2}));
    t = seconds_since(start);
    o.expect(eliminated == closed_form_count({30, 3, 2}, Family::Chainsaw),
             "C(30,3,2) elimination != closed form");
    o.expect(eliminated == lucas_V(30, 3, -2), "C(30,3,2) elimination != V_30(3,-2)");
    o.expect(t < 30.0, "C(30,3,2) elimination took " + std::to_string(t) + " s");
    return o;
}

// 8. One perturbed edge in an injected C(4,2,1) makes verify exit 1; the
//    unperturbed graph passes.
Outcome negative_control()
{
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path();
    auto j = nlohmann::json::parse(export_graph(make_chainsaw({4, 2, 1}), GraphFormat::Json));

    auto run_verify = [&](const std::string& name, const nlohmann::json& graph) {
        const auto path = dir / name;
        std::ofstream(path) << graph.dump();
        std::ostringstream out, err;
        return run_cli({"verify", "--n-max", "2", "--a-max", "2", "--inject", path.string(),
                        "--inject-family", "chainsaw", "--inject-n", "4", "--inject-a", "2",
                        "--inject-b", "1"},
                       out, err);
    };

    o.expect(run_verify("acceptance_intact.json", j) == kExitOk, "unperturbed graph failed");

    // Remove one existing edge.
    auto removed = j;
    removed["edges"].erase(removed["edges"].begin() + 3);
    o.expect(run_verify("acceptance_removed.json", removed) == kExitVerificationFailed,
             "edge removal not detected");

    // Add one absent edge between two blade vertices of different blades.
    auto added = j;
    added["edges"].push_back({4, 6});
    o.expect(!import_graph_json(j.dump()).adjacent(4, 6), "control edge already present");
    o.expect(run_verify("acceptance_added.json", added) == kExitVerificationFailed,
             "edge addition not detected");
    return o;
}

}  // namespace

int main()
{
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"1 path/cycle counts are Fibonacci/Lucas numbers (n<=18)", path_and_cycle_counts},
        {"2 chainsaw counts equal V_n(a,-b), U_(n+2)(a,-b) (n<=8, a<=4)", chainsaw_counts},
        {"3 chain strata factor as i_t * b^t * a^(...)", stratified_counts},
        {"4 path/cycle polynomial coefficients are binomial", path_cycle_strata},
        {"5 Dickson D/E equal Lucas V/U at the same arguments (n<=40)", dickson_lucas},
        {"6 matrix = recurrence (n<=200); elimination = brute (200 graphs)", engine_agreement},
        {"7 performance: C(1e5,7,3) < 5 s, elimination C(30,3,2) < 30 s", performance},
        {"8 negative control: perturbed C(4,2,1) fails verify with exit 1", negative_control},
    };

    int failures = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double t = seconds_since(start);
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name << "  [" << t << " s]";
        if (!o.pass)
            std::cout << "  -- " << o.detail;
        std::cout << '\n';
        failures += o.pass ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
              << '\n';
    return failures == 0 ? 0 : 1;
}
