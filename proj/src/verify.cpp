#include "chainsaw/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

#include "chainsaw/sequences.hpp"

namespace chainsaw {

void VerificationReport::add(std::string identity, std::map<std::string, std::string> params,
                             const BigInt& left, const BigInt& right)
{
    checks_.push_back({std::move(identity), std::move(params), to_decimal(left),
                       to_decimal(right), left == right});
}

void VerificationReport::append(std::vector<Check> checks)
{
    checks_.insert(checks_.end(), std::make_move_iterator(checks.begin()),
                   std::make_move_iterator(checks.end()));
}

std::map<std::string, IdentityTally> VerificationReport::summary() const
{
    std::map<std::string, IdentityTally> out;
    for (const auto& c : checks_) {
        auto& tally = out[c.identity];
        ++tally.checks;
        if (!c.pass)
            ++tally.failed;
    }
    return out;
}

bool VerificationReport::all_passed() const
{
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

nlohmann::json VerificationReport::to_json() const
{
    nlohmann::json j;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks_) {
        j["checks"].push_back({{"identity", c.identity},
                               {"params", c.params},
                               {"left", c.left},
                               {"right", c.right},
                               {"pass", c.pass}});
    }
    for (const auto& [identity, tally] : summary())
        j["summary"][identity] = {{"checks", std::to_string(tally.checks)},
                                  {"failed", std::to_string(tally.failed)}};
    if (!j.contains("summary"))
        j["summary"] = nlohmann::json::object();
    j["passed"] = all_passed();
    return j;
}

namespace {

using Params = std::map<std::string, std::string>;
using Task = std::function<std::vector<Check>()>;

Check make_check(std::string identity, Params params, const BigInt& left, const BigInt& right)
{
    return {std::move(identity), std::move(params), to_decimal(left), to_decimal(right),
            left == right};
}

Params tuple(const ChainsawParams& p)
{
    return {{"n", std::to_string(p.n)}, {"a", std::to_string(p.a)}, {"b", std::to_string(p.b)}};
}

Params with(Params p, const std::string& key, std::uint64_t value)
{
    p[key] = std::to_string(value);
    return p;
}

void compare_strata(std::vector<Check>& out, const std::string& identity, const Params& params,
                    const StratumTable& observed, const StratumTable& predicted)
{
    std::vector<std::uint64_t> keys;
    for (const auto& [t, _] : observed)
        keys.push_back(t);
    for (const auto& [t, _] : predicted)
        keys.push_back(t);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    auto at = [](const StratumTable& table, std::uint64_t t) {
        auto it = table.find(t);
        return it == table.end() ? BigInt(0) : it->second;
    };
    for (auto t : keys)
        out.push_back(make_check(identity, with(params, "t", t), at(observed, t), at(predicted, t)));
}

std::vector<Check> check_chainsaw(const ChainsawParams& p, std::size_t brute_cap)
{
    std::vector<Check> out;
    const auto params = tuple(p);
    const BigInt a = static_cast<unsigned long>(p.a);
    const BigInt neg_b = -BigInt(static_cast<unsigned long>(p.b));
    const Graph g = make_chainsaw(p);

    const BigInt eliminated = count_via_elimination(g);
    const BigInt closed = closed_form_count(p, Family::Chainsaw);
    const BigInt lucas = lucas_V(p.n, a, neg_b);
    const BigInt dickson = dickson_D_sum(p.n, a, neg_b);

    out.push_back(make_check("i(C(n,a,b)): elimination = closed form", params, eliminated, closed));
    out.push_back(make_check("i(C(n,a,b)) = V_n(a,-b)", params, closed, lucas));
    out.push_back(make_check("V_n(a,-b) = D_n(a,-b)", params, lucas, dickson));
    if (g.order() <= brute_cap) {
        const auto strata = brute_force_strata(g, brute_cap);
        out.push_back(make_check("i(C(n,a,b)): brute force = elimination", params, total(strata),
                                 eliminated));
        compare_strata(out, "chain strata of C(n,a,b) = i_t(C_n) b^t a^(n-2t)", params, strata,
                       stratified_closed_form(p, Family::Chainsaw));
    }
    return out;
}

std::vector<Check> check_broken(const ChainsawParams& p, std::size_t brute_cap)
{
    std::vector<Check> out;
    const auto params = tuple(p);
    const BigInt a = static_cast<unsigned long>(p.a);
    const BigInt neg_b = -BigInt(static_cast<unsigned long>(p.b));
    const Graph g = make_broken_chainsaw(p);

    const BigInt eliminated = count_via_elimination(g);
    const BigInt closed = closed_form_count(p, Family::Broken);
    const BigInt lucas = lucas_U(p.n + 2, a, neg_b);
    const BigInt dickson = dickson_E_sum(p.n + 1, a, neg_b);

    out.push_back(make_check("i(P(n,a,b)): elimination = closed form", params, eliminated, closed));
    out.push_back(make_check("i(P(n,a,b)) = U_(n+2)(a,-b)", params, closed, lucas));
    out.push_back(make_check("U_(n+2)(a,-b) = E_(n+1)(a,-b)", params, lucas, dickson));
    if (g.order() <= brute_cap) {
        const auto strata = brute_force_strata(g, brute_cap);
        out.push_back(make_check("i(P(n,a,b)): brute force = elimination", params, total(strata),
                                 eliminated));
        compare_strata(out, "chain strata of P(n,a,b) = i_t(P_n) b^t a^(n-2t+1)", params, strata,
                       stratified_closed_form(p, Family::Broken));
    }
    return out;
}

std::vector<Check> check_path_cycle(std::uint64_t n)
{
    std::vector<Check> out;
    const Params params{{"n", std::to_string(n)}};
    const BigInt one = 1;
    const BigInt minus_one = -1;

    const auto path = independence_polynomial(make_path(n));
    const auto cycle = independence_polynomial(make_cycle(n));

    out.push_back(make_check("i(P_n) = F_(n+2)", params, count_via_elimination(make_path(n)),
                             lucas_U(n + 2, one, minus_one)));
    out.push_back(make_check("i(C_n) = L_n", params, count_via_elimination(make_cycle(n)),
                             lucas_V(n, one, minus_one)));

    for (std::uint64_t t = 0; t <= std::max<std::uint64_t>(path.degree(), (n + 1) / 2); ++t)
        out.push_back(make_check("i_t(P_n) = binom(n-t+1,t)", with(params, "t", t), path[t],
                                 path_stratum(n, t)));
    for (std::uint64_t t = 0; t <= std::max<std::uint64_t>(cycle.degree(), n / 2); ++t)
        out.push_back(make_check("i_t(C_n) = n/(n-t) binom(n-t,t)", with(params, "t", t), cycle[t],
                                 2 * t <= n ? cycle_stratum(n, t) : BigInt(0)));
    return out;
}

std::vector<Check> check_sequences(std::uint64_t n_max, std::uint64_t a, std::uint64_t b)
{
    std::vector<Check> out;
    const BigInt p = static_cast<unsigned long>(a);
    const BigInt q = -BigInt(static_cast<unsigned long>(b));
    constexpr SequenceKind kinds[] = {SequenceKind::LucasU, SequenceKind::LucasV,
                                      SequenceKind::DicksonD, SequenceKind::DicksonE};

    for (std::uint64_t n = 0; n <= n_max + 2; ++n) {
        for (auto kind : kinds) {
            Params params{{"kind", std::string(to_string(kind))},
                          {"n", std::to_string(n)},
                          {"p", to_decimal(p)},
                          {"q", to_decimal(q)}};
            const BigInt by_recurrence = evaluate({kind, n, p, q, EvalMethod::Recurrence});
            out.push_back(make_check("sequence methods agree: recurrence = matrix", params,
                                     by_recurrence, evaluate({kind, n, p, q, EvalMethod::Matrix})));
            if (kind == SequenceKind::DicksonD || kind == SequenceKind::DicksonE)
                out.push_back(make_check("sequence methods agree: recurrence = summation", params,
                                         by_recurrence,
                                         evaluate({kind, n, p, q, EvalMethod::Summation})));
        }
    }
    return out;
}

std::vector<Check> check_injected(const InjectedGraph& inj, std::size_t brute_cap)
{
    std::vector<Check> out;
    auto params = tuple(inj.params);
    params["family"] = std::string(to_string(inj.family));

    const BigInt closed = closed_form_count(inj.params, inj.family);
    const BigInt eliminated = count_via_elimination(inj.graph);
    out.push_back(make_check("injected graph: elimination = closed form", params, eliminated, closed));
    if (inj.graph.order() <= brute_cap)
        out.push_back(make_check("injected graph: brute force = closed form", params,
                                 count_brute_force(inj.graph, brute_cap), closed));
    return out;
}

std::vector<std::vector<Check>> run_tasks(const std::vector<Task>& tasks, unsigned jobs)
{
    std::vector<std::vector<Check>> results(tasks.size());
    if (jobs <= 1 || tasks.size() <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            results[i] = tasks[i]();
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i]();
            } catch (...) {
                if (!failed.exchange(true))
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < std::min<std::size_t>(jobs, tasks.size()); ++k)
        pool.emplace_back(worker);
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& options)
{
    if (options.n_max < 1 || options.a_max < 1)
        throw std::invalid_argument("n_max and a_max must be at least 1");

    std::vector<Task> tasks;
    for (std::uint64_t n = 1; n <= options.n_max; ++n)
        for (std::uint64_t a = 1; a <= options.a_max; ++a)
            for (std::uint64_t b = 1; b <= a; ++b)
                tasks.push_back([p = ChainsawParams{n, a, b}, cap = options.brute_cap] {
                    return check_chainsaw(p, cap);
                });
    for (std::uint64_t n = 1; n <= options.n_max; ++n)
        for (std::uint64_t a = 1; a <= options.a_max; ++a)
            for (std::uint64_t b = 1; b <= a; ++b)
                tasks.push_back([p = ChainsawParams{n, a, b}, cap = options.brute_cap] {
                    return check_broken(p, cap);
                });
    for (std::uint64_t n = 1; n <= options.n_max; ++n)
        tasks.push_back([n] { return check_path_cycle(n); });
    for (std::uint64_t a = 1; a <= options.a_max; ++a)
        for (std::uint64_t b = 1; b <= a; ++b)
            tasks.push_back([n = options.n_max, a, b] { return check_sequences(n, a, b); });
    if (options.injected)
        tasks.push_back([&inj = *options.injected, cap = options.brute_cap] {
            return check_injected(inj, cap);
        });

    VerificationReport report;
    for (auto& chunk : run_tasks(tasks, options.jobs))
        report.append(std::move(chunk));
    return report;
}

}  // namespace chainsaw
