#include "chainsaw/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chainsaw/graph.hpp"
#include "chainsaw/graph_io.hpp"
#include "chainsaw/independence.hpp"
#include "chainsaw/sequences.hpp"
#include "chainsaw/verify.hpp"

namespace chainsaw {

namespace {

constexpr const char* kBruteCapEnv = "CHAINSAW_BRUTE_CAP";

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Instance {
    std::string family;
    std::uint64_t n = 0;
    std::optional<std::uint64_t> a;
    std::optional<std::uint64_t> b;

    ChainsawParams params() const
    {
        if (!a || !b)
            throw UsageError("--a and --b are required for family '" + family + "'");
        return {n, *a, *b};
    }

    bool is_chainsaw_family() const { return family == "chainsaw" || family == "broken"; }
};

void add_instance_options(CLI::App& cmd, Instance& inst)
{
    cmd.add_option("--family", inst.family, "path, cycle, chainsaw or broken")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "chainsaw", "broken"}));
    cmd.add_option("--n", inst.n, "chain length / vertex count")->required();
    cmd.add_option("--a", inst.a, "blade size (chainsaw, broken)");
    cmd.add_option("--b", inst.b, "a - b extra edges per chain vertex (chainsaw, broken)");
}

Graph build(const Instance& inst)
{
    if (inst.family == "path")
        return make_path(inst.n);
    if (inst.family == "cycle")
        return make_cycle(inst.n);
    if (inst.family == "chainsaw")
        return make_chainsaw(inst.params());
    return make_broken_chainsaw(inst.params());
}

BigInt closed_form(const Instance& inst)
{
    if (inst.family == "path") {
        BigInt sum = 0;
        for (std::uint64_t t = 0; 2 * t <= inst.n + 1; ++t)
            sum += path_stratum(inst.n, t);
        return sum;
    }
    if (inst.family == "cycle") {
        if (inst.n == 0)
            throw InvalidParams("a cycle needs at least one vertex");
        BigInt sum = 0;
        for (std::uint64_t t = 0; 2 * t <= inst.n; ++t)
            sum += cycle_stratum(inst.n, t);
        return sum;
    }
    return closed_form_count(inst.params(),
                             inst.family == "chainsaw" ? Family::Chainsaw : Family::Broken);
}

std::size_t default_brute_cap(std::size_t fallback)
{
    if (const char* env = std::getenv(kBruteCapEnv)) {
        try {
            return static_cast<std::size_t>(std::stoul(env));
        } catch (const std::exception&) {
            throw UsageError(std::string(kBruteCapEnv) + " must be a nonnegative integer");
        }
    }
    return fallback;
}

BigInt count_with(const std::string& method, const Instance& inst, std::size_t brute_cap)
{
    if (method == "brute")
        return count_brute_force(build(inst), brute_cap);
    if (method == "eliminate")
        return count_via_elimination(build(inst));
    return closed_form(inst);
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty())
            out.push_back(item);
    return out;
}

std::string format_seconds(double s)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << s;
    return os.str();
}

template <class F>
std::pair<BigInt, double> timed(F&& f)
{
    const auto start = std::chrono::steady_clock::now();
    BigInt value = f();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return {std::move(value), elapsed.count()};
}

struct BenchArgs {
    Instance inst;
    std::string kind;
    std::string p = "0";
    std::string q = "0";
    std::string methods;
    std::size_t brute_cap = 0;
    std::uint64_t checkpoint_every = 1000;
    std::uint64_t checkpoint_limit = 20000;
};

int bench_graph(const BenchArgs& args, std::ostream& out)
{
    const auto methods = split_list(args.methods.empty() ? "eliminate,closed-form" : args.methods);
    nlohmann::json j;
    j["instance"] = {{"family", args.inst.family}, {"n", std::to_string(args.inst.n)}};
    if (args.inst.a)
        j["instance"]["a"] = std::to_string(*args.inst.a);
    if (args.inst.b)
        j["instance"]["b"] = std::to_string(*args.inst.b);

    std::optional<BigInt> first;
    bool agree = true;
    j["results"] = nlohmann::json::array();
    for (const auto& m : methods) {
        if (m != "brute" && m != "eliminate" && m != "closed-form")
            throw UsageError("unknown count method '" + m + "'");
        auto [value, seconds] = timed([&] { return count_with(m, args.inst, args.brute_cap); });
        if (!first)
            first = value;
        agree = agree && value == *first;
        j["results"].push_back(
            {{"method", m}, {"value", to_decimal(value)}, {"seconds", format_seconds(seconds)}});
    }
    j["agree"] = agree;
    out << j.dump(2) << '\n';
    return agree ? kExitOk : kExitVerificationFailed;
}

int bench_sequence(const BenchArgs& args, std::ostream& out)
{
    const auto kind = parse_sequence_kind(args.kind);
    if (!kind)
        throw UsageError("unknown sequence kind '" + args.kind + "'");
    const BigInt p(args.p);
    const BigInt q(args.q);
    const auto methods = split_list(args.methods.empty() ? "matrix" : args.methods);

    nlohmann::json j;
    j["instance"] = {{"kind", std::string(to_string(*kind))},
                     {"n", std::to_string(args.inst.n)},
                     {"p", to_decimal(p)},
                     {"q", to_decimal(q)}};
    j["results"] = nlohmann::json::array();

    std::optional<BigInt> first;
    bool agree = true;
    for (const auto& name : methods) {
        const auto method = parse_eval_method(name);
        if (!method)
            throw UsageError("unknown evaluation method '" + name + "'");
        SequenceSpec spec{*kind, args.inst.n, p, q, *method};
        validate(spec);
        auto [value, seconds] = timed([&] { return evaluate(spec); });
        if (!first)
            first = value;
        agree = agree && value == *first;
        j["results"].push_back({{"method", name},
                                {"digits", std::to_string(to_decimal(abs(value)).size())},
                                {"value_mod_1e9", to_decimal(value % 1000000000)},
                                {"seconds", format_seconds(seconds)}});
    }

    // Walk the recurrence once and compare the matrix route at checkpoints.
    std::size_t checkpoints = 0;
    bool checkpoints_agree = true;
    if (args.checkpoint_every > 0) {
        const std::uint64_t limit = std::min(args.inst.n, args.checkpoint_limit);
        auto [w0, w1] = std::pair<BigInt, BigInt>{};
        SequenceSpec seed{*kind, 0, p, q, EvalMethod::Recurrence};
        w0 = evaluate(seed);
        seed.n = 1;
        w1 = evaluate(seed);
        for (std::uint64_t k = 1; k <= limit; ++k) {
            if (k % args.checkpoint_every == 0) {
                ++checkpoints;
                checkpoints_agree = checkpoints_agree &&
                                    evaluate({*kind, k, p, q, EvalMethod::Matrix}) == w1;
            }
            BigInt next = p * w1 - q * w0;
            w0 = std::move(w1);
            w1 = std::move(next);
        }
    }
    j["checkpoints"] = {{"count", std::to_string(checkpoints)}, {"agree", checkpoints_agree}};
    agree = agree && checkpoints_agree;
    j["agree"] = agree;
    out << j.dump(2) << '\n';
    return agree ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact independent-set counts for chainsaw graphs and their Lucas/Dickson identities",
                 "chainsaw"};
    app.require_subcommand(1);

    Instance gen_inst;
    std::string gen_format = "edge-list";
    auto* generate = app.add_subcommand("generate", "Print a generated graph");
    add_instance_options(*generate, gen_inst);
    generate->add_option("--format", gen_format, "edge-list, dimacs or json")
        ->check(CLI::IsMember({"edge-list", "dimacs", "json"}));

    Instance count_inst;
    std::string count_method = "eliminate";
    std::optional<std::size_t> count_cap;
    auto* count = app.add_subcommand("count", "Count independent sets");
    add_instance_options(*count, count_inst);
    count->add_option("--method", count_method, "brute, eliminate or closed-form")
        ->check(CLI::IsMember({"brute", "eliminate", "closed-form"}));
    count->add_option("--brute-cap", count_cap, "largest graph the brute-force oracle accepts");

    Instance poly_inst;
    auto* poly = app.add_subcommand("poly", "Print the independence polynomial coefficients");
    add_instance_options(*poly, poly_inst);

    std::string seq_kind;
    std::uint64_t seq_n = 0;
    std::string seq_p, seq_q, seq_method = "recurrence";
    auto* seq = app.add_subcommand("seq", "Evaluate a Lucas sequence or Dickson polynomial");
    seq->add_option("--kind", seq_kind, "U, V, D or E")->required();
    seq->add_option("--n", seq_n, "index")->required();
    seq->add_option("--p", seq_p, "first parameter (a or X)")->required();
    seq->add_option("--q", seq_q, "second parameter (b or Y)")->required();
    seq->add_option("--method", seq_method, "recurrence, summation or matrix");

    VerifyOptions verify_opts;
    std::optional<std::size_t> verify_cap;
    std::string inject_path, inject_family = "chainsaw";
    std::optional<std::uint64_t> inject_n, inject_a, inject_b;
    auto* verify = app.add_subcommand("verify", "Sweep a parameter grid and check every identity");
    verify->add_option("--n-max", verify_opts.n_max, "largest chain length")->capture_default_str();
    verify->add_option("--a-max", verify_opts.a_max, "largest blade size")->capture_default_str();
    verify->add_option("--brute-cap", verify_cap, "largest graph confirmed by brute force");
    verify->add_option("--jobs", verify_opts.jobs, "worker threads")->capture_default_str();
    auto* inject = verify->add_option("--inject", inject_path, "JSON graph checked against the closed form");
    verify->add_option("--inject-family", inject_family, "chainsaw or broken")
        ->check(CLI::IsMember({"chainsaw", "broken"}))
        ->needs(inject);
    verify->add_option("--inject-n", inject_n)->needs(inject);
    verify->add_option("--inject-a", inject_a)->needs(inject);
    verify->add_option("--inject-b", inject_b)->needs(inject);

    BenchArgs bench_args;
    std::optional<std::size_t> bench_cap;
    auto* bench = app.add_subcommand("bench", "Time engines on one instance and check they agree");
    auto* bench_family = bench->add_option("--family", bench_args.inst.family, "graph family")
                             ->check(CLI::IsMember({"path", "cycle", "chainsaw", "broken"}));
    auto* bench_kind = bench->add_option("--kind", bench_args.kind, "sequence kind U, V, D or E");
    bench_family->excludes(bench_kind);
    bench->add_option("--n", bench_args.inst.n)->required();
    bench->add_option("--a", bench_args.inst.a);
    bench->add_option("--b", bench_args.inst.b);
    bench->add_option("--p", bench_args.p);
    bench->add_option("--q", bench_args.q);
    bench->add_option("--methods", bench_args.methods, "comma-separated engine list");
    bench->add_option("--brute-cap", bench_cap);
    bench->add_option("--checkpoint-every", bench_args.checkpoint_every)->capture_default_str();
    bench->add_option("--checkpoint-limit", bench_args.checkpoint_limit)->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*generate) {
            const auto format = parse_graph_format(gen_format);
            out << export_graph(build(gen_inst), *format);
        } else if (*count) {
            const auto cap = count_cap ? *count_cap : default_brute_cap(kDefaultBruteCap);
            out << to_decimal(count_with(count_method, count_inst, cap)) << '\n';
        } else if (*poly) {
            const auto coefficients = independence_polynomial(build(poly_inst)).coefficients();
            out << '[';
            for (std::size_t i = 0; i < coefficients.size(); ++i)
                out << (i ? "," : "") << to_decimal(coefficients[i]);
            out << "]\n";
        } else if (*seq) {
            const auto kind = parse_sequence_kind(seq_kind);
            const auto method = parse_eval_method(seq_method);
            if (!kind)
                throw UsageError("unknown sequence kind '" + seq_kind + "'");
            if (!method)
                throw UsageError("unknown evaluation method '" + seq_method + "'");
            out << to_decimal(evaluate({*kind, seq_n, BigInt(seq_p), BigInt(seq_q), *method})) << '\n';
        } else if (*verify) {
            verify_opts.brute_cap = verify_cap ? *verify_cap : default_brute_cap(24);
            if (!inject_path.empty()) {
                if (!inject_n || !inject_a || !inject_b)
                    throw UsageError("--inject needs --inject-n, --inject-a and --inject-b");
                std::ifstream in(inject_path);
                if (!in)
                    throw UsageError("cannot read " + inject_path);
                std::stringstream text;
                text << in.rdbuf();
                ChainsawParams params{*inject_n, *inject_a, *inject_b};
                validate(params);
                verify_opts.injected = InjectedGraph{
                    import_graph_json(text.str()),
                    inject_family == "chainsaw" ? Family::Chainsaw : Family::Broken, params};
            }
            const auto report = run_verification(verify_opts);
            out << report.to_json().dump(2) << '\n';
            return report.all_passed() ? kExitOk : kExitVerificationFailed;
        } else if (*bench) {
            bench_args.brute_cap = bench_cap ? *bench_cap : default_brute_cap(kDefaultBruteCap);
            if (!bench_args.kind.empty())
                return bench_sequence(bench_args, out);
            if (bench_args.inst.family.empty())
                throw UsageError("bench needs --family or --kind");
            return bench_graph(bench_args, out);
        }
    } catch (const InvalidParams& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const OracleCapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitResourceCap;
    } catch (const ComputationAbandoned& e) {
        err << "error: " << e.what() << '\n';
        return kExitResourceCap;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace chainsaw
