#include "chainsaw/independence.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <span>
#include <string>
#include <unordered_map>

namespace chainsaw {

// ---------------------------------------------------------------------------
// IndependencePolynomial

IndependencePolynomial::IndependencePolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients))
{
    trim();
}

void IndependencePolynomial::trim()
{
    while (coefficients_.size() > 1 && coefficients_.back() == 0)
        coefficients_.pop_back();
    if (coefficients_.empty())
        coefficients_.push_back(0);
}

BigInt IndependencePolynomial::operator[](std::size_t t) const
{
    return t < coefficients_.size() ? coefficients_[t] : BigInt(0);
}

BigInt IndependencePolynomial::total() const
{
    BigInt sum = 0;
    for (const auto& c : coefficients_)
        sum += c;
    return sum;
}

IndependencePolynomial operator+(const IndependencePolynomial& l, const IndependencePolynomial& r)
{
    std::vector<BigInt> out(std::max(l.coefficients_.size(), r.coefficients_.size()), 0);
    for (std::size_t i = 0; i < l.coefficients_.size(); ++i)
        out[i] += l.coefficients_[i];
    for (std::size_t i = 0; i < r.coefficients_.size(); ++i)
        out[i] += r.coefficients_[i];
    return IndependencePolynomial(std::move(out));
}

IndependencePolynomial operator*(const IndependencePolynomial& l, const IndependencePolynomial& r)
{
    std::vector<BigInt> out(l.coefficients_.size() + r.coefficients_.size() - 1, 0);
    for (std::size_t i = 0; i < l.coefficients_.size(); ++i)
        for (std::size_t j = 0; j < r.coefficients_.size(); ++j)
            out[i + j] += l.coefficients_[i] * r.coefficients_[j];
    return IndependencePolynomial(std::move(out));
}

IndependencePolynomial IndependencePolynomial::shifted() const
{
    std::vector<BigInt> out;
    out.reserve(coefficients_.size() + 1);
    out.emplace_back(0);
    out.insert(out.end(), coefficients_.begin(), coefficients_.end());
    return IndependencePolynomial(std::move(out));
}

BigInt total(const StratumTable& table)
{
    BigInt sum = 0;
    for (const auto& [t, count] : table)
        sum += count;
    return sum;
}

std::string_view to_string(Family f)
{
    return f == Family::Chainsaw ? "chainsaw" : "broken";
}

// ---------------------------------------------------------------------------
// Brute force

namespace {

struct MaskGraph {
    std::vector<std::uint64_t> closed;  // neighbors, plus v itself when looped
    std::uint64_t chain = 0;
};

MaskGraph to_masks(const Graph& g, std::size_t cap)
{
    if (cap > kMaxBruteCap)
        throw std::invalid_argument("brute-force cap " + std::to_string(cap) +
                                    " exceeds the hard limit of " + std::to_string(kMaxBruteCap));
    if (g.order() > cap)
        throw OracleCapExceeded("oracle cap exceeded: graph has " + std::to_string(g.order()) +
                                " vertices, brute-force cap is " + std::to_string(cap));
    MaskGraph m;
    m.closed.assign(g.order(), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        for (Vertex u : g.neighbors(v))
            m.closed[v] |= std::uint64_t{1} << u;
        if (g.has_loop(v))
            m.closed[v] |= std::uint64_t{1} << v;
        if (g.role(v) == Role::Chain)
            m.chain |= std::uint64_t{1} << v;
    }
    return m;
}

// Tallies independent subsets by chain-vertex count. Each tally is bounded
// by 2^kMaxBruteCap so the per-stratum counters cannot overflow.
std::array<std::uint64_t, 65> tally_independent(const MaskGraph& m)
{
    std::array<std::uint64_t, 65> tally{};
    const std::uint64_t limit = std::uint64_t{1} << m.closed.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        bool independent = true;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
            if (m.closed[std::countr_zero(rest)] & mask) {
                independent = false;
                break;
            }
        }
        if (independent)
            ++tally[std::popcount(mask & m.chain)];
    }
    return tally;
}

}  // namespace

BigInt count_brute_force(const Graph& g, std::size_t cap)
{
    return total(brute_force_strata(g, cap));
}

StratumTable brute_force_strata(const Graph& g, std::size_t cap)
{
    const auto tally = tally_independent(to_masks(g, cap));
    StratumTable table;
    for (std::size_t t = 0; t < tally.size(); ++t)
        if (tally[t] != 0)
            table.emplace(t, BigInt(static_cast<unsigned long>(tally[t])));
    return table;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

using VertexSet = std::vector<std::uint64_t>;

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (auto w : s) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

bool contains(const VertexSet& s, Vertex v) { return (s[v >> 6] >> (v & 63)) & 1; }
void erase(VertexSet& s, Vertex v) { s[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

bool empty(const VertexSet& s)
{
    return std::all_of(s.begin(), s.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t count(const VertexSet& s)
{
    std::size_t c = 0;
    for (auto w : s)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t count_intersection(const VertexSet& a, const VertexSet& b)
{
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
}

template <class F>
void for_each_vertex(const VertexSet& s, F&& f)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::uint64_t w = s[i]; w != 0; w &= w - 1)
            f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
}

struct PolynomialAlgebra {
    using Value = IndependencePolynomial;
    static Value one() { return {}; }
    static Value clique(std::size_t k) { return Value({1, static_cast<unsigned long>(k)}); }
    static Value branch(const Value& without, const Value& with) { return without + with.shifted(); }
    static Value product(const Value& l, const Value& r) { return l * r; }
};

struct CountAlgebra {
    using Value = BigInt;
    static Value one() { return 1; }
    static Value clique(std::size_t k) { return static_cast<unsigned long>(k + 1); }
    static Value branch(const Value& without, const Value& with) { return without + with; }
    static Value product(const Value& l, const Value& r) { return l * r; }
};

template <class Algebra>
class Eliminator {
public:
    using Value = typename Algebra::Value;

    Eliminator(const Graph& g, const EliminationOptions& options)
        : words_((g.order() + 63) / 64), options_(options)
    {
        adjacency_.assign(g.order(), VertexSet(words_, 0));
        for (Vertex v = 0; v < g.order(); ++v)
            for (Vertex u : g.neighbors(v))
                adjacency_[v][u >> 6] |= std::uint64_t{1} << (u & 63);

        all_ = VertexSet(words_, 0);
        for (Vertex v = 0; v < g.order(); ++v)
            if (!g.has_loop(v))
                all_[v >> 6] |= std::uint64_t{1} << (v & 63);

        if (options_.first_pivot && *options_.first_pivot >= g.order())
            throw std::out_of_range("forced pivot " + std::to_string(*options_.first_pivot) +
                                    " is not a vertex");
    }

    Value run()
    {
        if (options_.first_pivot && contains(all_, *options_.first_pivot))
            return branch_on(all_, *options_.first_pivot);
        return solve(all_);
    }

private:
    Value solve(const VertexSet& s)
    {
        if (empty(s))
            return Algebra::one();

        VertexSet rest = s;
        VertexSet component = take_component(rest);
        if (empty(rest))
            return solve_connected(component);

        Value acc = solve_connected(component);
        while (!empty(rest)) {
            component = take_component(rest);
            acc = Algebra::product(acc, solve_connected(component));
        }
        return acc;
    }

    // Removes and returns the component of `s` holding its lowest vertex.
    VertexSet take_component(VertexSet& s) const
    {
        VertexSet comp(words_, 0);
        VertexSet frontier(words_, 0);
        for (std::size_t i = 0; i < words_; ++i) {
            if (s[i] != 0) {
                frontier[i] = s[i] & (~s[i] + 1);
                break;
            }
        }
        while (!empty(frontier)) {
            for (std::size_t i = 0; i < words_; ++i) {
                comp[i] |= frontier[i];
                s[i] &= ~frontier[i];
            }
            VertexSet next(words_, 0);
            for_each_vertex(frontier, [&](Vertex v) {
                for (std::size_t i = 0; i < words_; ++i)
                    next[i] |= adjacency_[v][i];
            });
            for (std::size_t i = 0; i < words_; ++i)
                next[i] &= s[i];
            frontier = std::move(next);
        }
        return comp;
    }

    Value solve_connected(const VertexSet& s)
    {
        const std::size_t size = count(s);
        if (size == 1)
            return Algebra::clique(1);

        if (auto it = memo_.find(s); it != memo_.end())
            return it->second;

        Vertex pivot = 0;
        std::size_t best = 0;
        std::size_t lowest = size;
        bool first = true;
        for_each_vertex(s, [&](Vertex v) {
            const std::size_t d = count_intersection(adjacency_[v], s);
            lowest = std::min(lowest, d);
            if (first || d > best) {
                pivot = v;
                best = d;
                first = false;
            }
        });

        Value result = lowest + 1 == size ? Algebra::clique(size) : branch_on(s, pivot);

        if (memo_.size() >= options_.memo_limit)
            throw ComputationAbandoned("elimination abandoned: memo exceeded " +
                                       std::to_string(options_.memo_limit) + " entries");
        memo_.emplace(s, result);
        return result;
    }

    Value branch_on(const VertexSet& s, Vertex v)
    {
        VertexSet without = s;
        erase(without, v);
        VertexSet outside_closed = without;
        for (std::size_t i = 0; i < words_; ++i)
            outside_closed[i] &= ~adjacency_[v][i];
        return Algebra::branch(solve(without), solve(outside_closed));
    }

    std::size_t words_;
    EliminationOptions options_;
    std::vector<VertexSet> adjacency_;
    VertexSet all_;
    std::unordered_map<VertexSet, Value, VertexSetHash> memo_;
};

}  // namespace

IndependencePolynomial independence_polynomial(const Graph& g, const EliminationOptions& options)
{
    return Eliminator<PolynomialAlgebra>(g, options).run();
}

BigInt count_via_elimination(const Graph& g, const EliminationOptions& options)
{
    return Eliminator<CountAlgebra>(g, options).run();
}

// ---------------------------------------------------------------------------
// Closed forms

BigInt path_stratum(std::uint64_t n, std::uint64_t t)
{
    const auto sn = static_cast<std::int64_t>(n);
    const auto st = static_cast<std::int64_t>(t);
    return binomial(sn - st + 1, st);
}

BigInt cycle_stratum(std::uint64_t n, std::uint64_t t)
{
    assert(n >= 1 && 2 * t <= n);
    const auto sn = static_cast<std::int64_t>(n);
    const auto st = static_cast<std::int64_t>(t);
    return binomial(sn - st, st) + binomial(sn - st - 1, st - 1);
}

namespace {

BigInt power(const BigInt& base, std::uint64_t e)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// term <- term * prod(up) / prod(down), merging factors into single limbs
// where the product fits. The division must be exact.
void scale_exact(BigInt& term, std::span<const std::uint64_t> up,
                 std::span<const std::uint64_t> down)
{
    auto apply = [&](std::span<const std::uint64_t> factors, auto&& op) {
        unsigned __int128 acc = 1;
        for (auto f : factors) {
            if (acc * f > ~std::uint64_t{0}) {
                op(static_cast<unsigned long>(acc));
                acc = 1;
            }
            acc *= f;
        }
        op(static_cast<unsigned long>(acc));
    };
    apply(up, [&](unsigned long f) { mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), f); });
    apply(down, [&](unsigned long f) { mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), f); });
}

}  // namespace

StratumTable stratified_closed_form(const ChainsawParams& p, Family family)
{
    validate(p);
    const BigInt a = static_cast<unsigned long>(p.a);
    const BigInt b = static_cast<unsigned long>(p.b);
    StratumTable table;
    if (family == Family::Chainsaw) {
        for (std::uint64_t t = 0; 2 * t <= p.n; ++t)
            table.emplace(t, cycle_stratum(p.n, t) * power(b, t) * power(a, p.n - 2 * t));
    } else {
        for (std::uint64_t t = 0; 2 * t <= p.n + 1; ++t)
            table.emplace(t, path_stratum(p.n, t) * power(b, t) * power(a, p.n + 1 - 2 * t));
    }
    return table;
}

BigInt closed_form_count(const ChainsawParams& p, Family family)
{
    validate(p);
    // Both families have terms c_t b^t a^(m - 2t) with m = n (chainsaw) or
    // n + 1 (broken). Successive terms differ by
    //   b (m-2t)(m-2t-1) / ((t+1) k a^2),  k = m-t-1 (chainsaw) or m-t (broken),
    // and term_t * b * (m-2t)(m-2t-1) is always divisible by (t+1) k a^2.
    const std::uint64_t m = family == Family::Chainsaw ? p.n : p.n + 1;

    BigInt term = power(BigInt(static_cast<unsigned long>(p.a)), m);
    BigInt sum = term;
    for (std::uint64_t t = 0; 2 * (t + 1) <= m; ++t) {
        const std::uint64_t k = family == Family::Chainsaw ? m - t - 1 : m - t;
        const std::uint64_t up[] = {p.b, m - 2 * t, m - 2 * t - 1};
        const std::uint64_t down[] = {t + 1, k, p.a, p.a};
        scale_exact(term, up, down);
        sum += term;
    }
    return sum;
}

}  // namespace chainsaw
