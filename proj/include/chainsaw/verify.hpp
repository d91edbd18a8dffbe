#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chainsaw/graph.hpp"
#include "chainsaw/independence.hpp"

namespace chainsaw {

struct Check {
    std::string identity;
    std::map<std::string, std::string> params;
    std::string left;
    std::string right;
    bool pass = false;
};

struct IdentityTally {
    std::size_t checks = 0;
    std::size_t failed = 0;
};

class VerificationReport {
public:
    void add(std::string identity, std::map<std::string, std::string> params, const BigInt& left,
             const BigInt& right);
    void append(std::vector<Check> checks);

    const std::vector<Check>& checks() const { return checks_; }
    std::map<std::string, IdentityTally> summary() const;
    bool all_passed() const;

    /// {"checks": [...], "passed": bool, "summary": {...}}, numbers as strings.
    nlohmann::json to_json() const;

private:
    std::vector<Check> checks_;
};

/// A graph handed in from outside that claims to be C(n,a,b) or P(n,a,b).
struct InjectedGraph {
    Graph graph;
    Family family = Family::Chainsaw;
    ChainsawParams params;
};

struct VerifyOptions {
    std::uint64_t n_max = 8;
    std::uint64_t a_max = 4;
    std::size_t brute_cap = 24;
    unsigned jobs = 1;
    std::optional<InjectedGraph> injected;
};

/// Sweeps 1 <= n <= n_max, 1 <= b <= a <= a_max and checks every counting
/// and sequence identity on each instance. Check order depends only on the
/// options, never on `jobs`.
VerificationReport run_verification(const VerifyOptions& options);

}  // namespace chainsaw
