#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "chainsaw/bigint.hpp"

namespace chainsaw {

// Second-order sequences W_k = p*W_{k-1} - q*W_{k-2}:
//   LucasU    U_0 = 0, U_1 = 1
//   LucasV    V_0 = 2, V_1 = p
//   DicksonD  D_0 = 2, D_1 = x     (same seeds and step as V)
//   DicksonE  E_0 = 1, E_1 = x     (equals U shifted by one)
// For the Dickson kinds (p, q) play the role of (X, Y).
enum class SequenceKind { LucasU, LucasV, DicksonD, DicksonE };
enum class EvalMethod { Recurrence, Summation, Matrix };

std::optional<SequenceKind> parse_sequence_kind(std::string_view name);
std::optional<EvalMethod> parse_eval_method(std::string_view name);
std::string_view to_string(SequenceKind k);
std::string_view to_string(EvalMethod m);

class InvalidSequenceSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SequenceSpec {
    SequenceKind kind = SequenceKind::LucasU;
    std::uint64_t n = 0;
    BigInt p = 0;
    BigInt q = 0;
    EvalMethod method = EvalMethod::Recurrence;
};

/// Throws InvalidSequenceSpec for summation on a Lucas kind.
void validate(const SequenceSpec& spec);

BigInt lucas_U(std::uint64_t n, const BigInt& p, const BigInt& q);
BigInt lucas_V(std::uint64_t n, const BigInt& p, const BigInt& q);

/// Explicit sum sum_t n/(n-t) binom(n-t, t) (-y)^t x^(n-2t), with the
/// rational factor taken as binom(n-t, t) + binom(n-t-1, t-1).
/// D_0 is defined as 2.
BigInt dickson_D_sum(std::uint64_t n, const BigInt& x, const BigInt& y);

/// Explicit sum sum_t binom(n-t, t) (-y)^t x^(n-2t).
BigInt dickson_E_sum(std::uint64_t n, const BigInt& x, const BigInt& y);

/// Pair (W_n, W_{n-1}) of the recurrence seeded with (w0, w1), by binary
/// powering of the companion matrix [[p, -q], [1, 0]]. For n = 0 the
/// second component is unspecified and returned as 0.
std::pair<BigInt, BigInt> recurrence_matrix_power(std::uint64_t n, const BigInt& p,
                                                  const BigInt& q, const BigInt& w0,
                                                  const BigInt& w1);

BigInt evaluate(const SequenceSpec& spec);

}  // namespace chainsaw
