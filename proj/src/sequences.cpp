#include "chainsaw/sequences.hpp"

#include <array>

namespace chainsaw {

BigInt binomial(std::int64_t n, std::int64_t k)
{
    BigInt r = 0;
    if (n < 0 || k < 0 || k > n)
        return r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::optional<SequenceKind> parse_sequence_kind(std::string_view name)
{
    if (name == "U" || name == "lucas-u")
        return SequenceKind::LucasU;
    if (name == "V" || name == "lucas-v")
        return SequenceKind::LucasV;
    if (name == "D" || name == "dickson-d")
        return SequenceKind::DicksonD;
    if (name == "E" || name == "dickson-e")
        return SequenceKind::DicksonE;
    return std::nullopt;
}

std::optional<EvalMethod> parse_eval_method(std::string_view name)
{
    if (name == "recurrence")
        return EvalMethod::Recurrence;
    if (name == "summation")
        return EvalMethod::Summation;
    if (name == "matrix")
        return EvalMethod::Matrix;
    return std::nullopt;
}

std::string_view to_string(SequenceKind k)
{
    switch (k) {
    case SequenceKind::LucasU: return "U";
    case SequenceKind::LucasV: return "V";
    case SequenceKind::DicksonD: return "D";
    case SequenceKind::DicksonE: return "E";
    }
    return "?";
}

std::string_view to_string(EvalMethod m)
{
    switch (m) {
    case EvalMethod::Recurrence: return "recurrence";
    case EvalMethod::Summation: return "summation";
    case EvalMethod::Matrix: return "matrix";
    }
    return "?";
}

void validate(const SequenceSpec& spec)
{
    const bool lucas = spec.kind == SequenceKind::LucasU || spec.kind == SequenceKind::LucasV;
    if (lucas && spec.method == EvalMethod::Summation)
        throw InvalidSequenceSpec("summation is defined only for the Dickson kinds D and E");
}

namespace {

BigInt run_recurrence(std::uint64_t n, const BigInt& p, const BigInt& q, BigInt w0, BigInt w1)
{
    if (n == 0)
        return w0;
    for (std::uint64_t k = 1; k < n; ++k) {
        BigInt next = p * w1 - q * w0;
        w0 = std::move(w1);
        w1 = std::move(next);
    }
    return w1;
}

std::pair<BigInt, BigInt> seeds(SequenceKind kind, const BigInt& p)
{
    switch (kind) {
    case SequenceKind::LucasU: return {0, 1};
    case SequenceKind::LucasV:
    case SequenceKind::DicksonD: return {2, p};
    case SequenceKind::DicksonE: return {1, p};
    }
    return {0, 0};
}

using Mat2 = std::array<BigInt, 4>;  // row-major

Mat2 multiply(const Mat2& l, const Mat2& r)
{
    return {l[0] * r[0] + l[1] * r[2], l[0] * r[1] + l[1] * r[3],
            l[2] * r[0] + l[3] * r[2], l[2] * r[1] + l[3] * r[3]};
}

}  // namespace

BigInt lucas_U(std::uint64_t n, const BigInt& p, const BigInt& q)
{
    return run_recurrence(n, p, q, 0, 1);
}

BigInt lucas_V(std::uint64_t n, const BigInt& p, const BigInt& q)
{
    return run_recurrence(n, p, q, 2, p);
}

BigInt dickson_D_sum(std::uint64_t n, const BigInt& x, const BigInt& y)
{
    if (n == 0)
        return 2;
    const BigInt neg_y = -y;
    BigInt sum = 0;
    BigInt term;
    const auto sn = static_cast<std::int64_t>(n);
    for (std::int64_t t = 0; 2 * t <= sn; ++t) {
        // n/(n-t) * binom(n-t, t): sets avoiding vertex 0 plus sets containing it.
        BigInt coef = binomial(sn - t, t) + binomial(sn - t - 1, t - 1);
        BigInt yt, xp;
        mpz_pow_ui(yt.get_mpz_t(), neg_y.get_mpz_t(), static_cast<unsigned long>(t));
        mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(sn - 2 * t));
        term = coef * yt * xp;
        sum += term;
    }
    return sum;
}

BigInt dickson_E_sum(std::uint64_t n, const BigInt& x, const BigInt& y)
{
    const BigInt neg_y = -y;
    BigInt sum = 0;
    const auto sn = static_cast<std::int64_t>(n);
    for (std::int64_t t = 0; 2 * t <= sn; ++t) {
        BigInt yt, xp;
        mpz_pow_ui(yt.get_mpz_t(), neg_y.get_mpz_t(), static_cast<unsigned long>(t));
        mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(sn - 2 * t));
        sum += binomial(sn - t, t) * yt * xp;
    }
    return sum;
}

std::pair<BigInt, BigInt> recurrence_matrix_power(std::uint64_t n, const BigInt& p,
                                                  const BigInt& q, const BigInt& w0,
                                                  const BigInt& w1)
{
    if (n == 0)
        return {w0, 0};

    Mat2 result{1, 0, 0, 1};
    Mat2 base{p, -q, 1, 0};
    for (std::uint64_t e = n - 1; e != 0; e >>= 1) {
        if (e & 1)
            result = multiply(result, base);
        if (e > 1)
            base = multiply(base, base);
    }
    // [W_n, W_{n-1}]^T = M^(n-1) [W_1, W_0]^T
    return {result[0] * w1 + result[1] * w0, result[2] * w1 + result[3] * w0};
}

BigInt evaluate(const SequenceSpec& spec)
{
    validate(spec);
    switch (spec.method) {
    case EvalMethod::Summation:
        return spec.kind == SequenceKind::DicksonD ? dickson_D_sum(spec.n, spec.p, spec.q)
                                                   : dickson_E_sum(spec.n, spec.p, spec.q);
    case EvalMethod::Recurrence: {
        auto [w0, w1] = seeds(spec.kind, spec.p);
        return run_recurrence(spec.n, spec.p, spec.q, std::move(w0), std::move(w1));
    }
    case EvalMethod::Matrix: {
        auto [w0, w1] = seeds(spec.kind, spec.p);
        return recurrence_matrix_power(spec.n, spec.p, spec.q, w0, w1).first;
    }
    }
    return 0;
}

}  // namespace chainsaw
