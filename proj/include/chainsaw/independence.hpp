#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "chainsaw/bigint.hpp"
#include "chainsaw/graph.hpp"

namespace chainsaw {

inline constexpr std::size_t kDefaultBruteCap = 26;
// Subsets are enumerated as 64-bit masks; past this the oracle is pointless anyway.
inline constexpr std::size_t kMaxBruteCap = 40;

class OracleCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ComputationAbandoned : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Coefficients i_0(G), i_1(G), ... with no trailing zeros.
class IndependencePolynomial {
public:
    IndependencePolynomial() : coefficients_{1} {}
    explicit IndependencePolynomial(std::vector<BigInt> coefficients);

    const std::vector<BigInt>& coefficients() const { return coefficients_; }
    std::size_t degree() const { return coefficients_.size() - 1; }

    /// i_t(G); zero past the degree.
    BigInt operator[](std::size_t t) const;

    /// i(G), the sum of all coefficients.
    BigInt total() const;

    friend IndependencePolynomial operator+(const IndependencePolynomial& l,
                                            const IndependencePolynomial& r);
    friend IndependencePolynomial operator*(const IndependencePolynomial& l,
                                            const IndependencePolynomial& r);
    /// Multiplication by x.
    IndependencePolynomial shifted() const;

    friend bool operator==(const IndependencePolynomial&, const IndependencePolynomial&) = default;

private:
    void trim();
    std::vector<BigInt> coefficients_;
};

/// t -> number of independent sets containing exactly t Chain-role vertices.
/// Only nonzero strata are stored.
using StratumTable = std::map<std::uint64_t, BigInt>;

BigInt total(const StratumTable& table);

enum class Family { Chainsaw, Broken };

std::string_view to_string(Family f);

/// Exhaustive subset enumeration; the independent reference every other
/// engine is checked against. Throws OracleCapExceeded above `cap`
/// vertices and std::invalid_argument if cap > kMaxBruteCap.
BigInt count_brute_force(const Graph& g, std::size_t cap = kDefaultBruteCap);

StratumTable brute_force_strata(const Graph& g, std::size_t cap = kDefaultBruteCap);

struct EliminationOptions {
    /// Memo entries before the computation is abandoned.
    std::size_t memo_limit = std::size_t{1} << 22;
    /// Branch on this vertex first instead of the max-degree pivot.
    std::optional<Vertex> first_pivot;
};

/// Exact polynomial via I(G) = I(G - v) + x * I(G - N[v]) with looped
/// vertices dropped up front, products over connected components, and
/// memoization keyed on the induced vertex subset. The pivot is a
/// maximum-degree vertex, lowest index on ties.
///
/// Throws ComputationAbandoned when the memo exceeds its limit.
IndependencePolynomial independence_polynomial(const Graph& g,
                                               const EliminationOptions& options = {});

/// Same recurrence carrying only the running total.
BigInt count_via_elimination(const Graph& g, const EliminationOptions& options = {});

/// i_t(P_n) = binom(n - t + 1, t).
BigInt path_stratum(std::uint64_t n, std::uint64_t t);

/// i_t(C_n) = n/(n-t) binom(n-t, t), evaluated as
/// binom(n-t, t) + binom(n-t-1, t-1). Requires n >= 1 and 2t <= n.
BigInt cycle_stratum(std::uint64_t n, std::uint64_t t);

/// Chain-vertex strata of C(n,a,b) or P(n,a,b) from the product formula:
/// chainsaw  i_t(C_n) b^t a^(n-2t),    0 <= t <= n/2
/// broken    i_t(P_n) b^t a^(n-2t+1),  0 <= t <= (n+1)/2
StratumTable stratified_closed_form(const ChainsawParams& p, Family family);

/// Sum of the strata. Terms are streamed with exact integer ratios, so
/// this stays fast for n in the hundreds of thousands.
BigInt closed_form_count(const ChainsawParams& p, Family family);

}  // namespace chainsaw
