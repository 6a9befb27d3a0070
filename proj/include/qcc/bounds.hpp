#pragma once

#include <qcc/constructions.hpp>
#include <qcc/interval.hpp>
#include <qcc/rate.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qcc {

/// Every constant attached to a rate r and order n, in exact arithmetic.
struct RateParams {
    RationalRate r{1, 1};
    int n = 0;
    /// floor(1/r)
    int k = 0;
    /// ceil(rn)
    int c = 0;
    /// ((k+1)/k) r - 1/k
    Rational c_r;
    /// 1 / ceil(1/c_r)
    Rational d_r;
    /// (k+1) ceil(rn) - n, always >= 1
    int l = 0;
    /// n - k ceil(rn); the join bound needs m > 0
    int m = 0;

    bool join_applicable() const { return !r.reciprocal_of_integer() && m > 0; }
};

RateParams rate_params(const RationalRate &r, int n);

/// ceil(d_r * omega) for each end of omega; the integer form of the lower bound.
ValueInterval scaled_lower_bound(const Rational &d_r, const ValueInterval &omega);

struct BoundReport {
    RateParams params;
    /// omega(n,k) from the Ramsey table.
    ValueInterval omega_nk;
    ValueInterval lower;
    ValueInterval upper_ramsey;
    std::optional<ValueInterval> upper_join;
    std::optional<ValueInterval> upper_omega_sum;
    std::optional<int> exact;
    std::optional<std::string> exact_witness_g6;
    std::optional<std::string> simple_witness_g6;
    std::optional<int> simple_witness_omega;
    std::optional<std::string> join_witness_g6;
    std::optional<int> join_witness_omega;
    std::vector<std::string> notes;
};

struct SandwichOptions {
    /// Attach the brute-force Q when n is within this enumeration limit.
    int enumeration_limit = kDefaultEnumerationLimit;
    bool with_witnesses = true;
    JoinOptions join;
};

/// Lower bound, the single-Ramsey-graph upper bound, the join bound and the
/// two-term omega sum above it, plus constructive witnesses and the exact value when
/// they are available. Missing parts are recorded in `notes`.
BoundReport sandwich(const RationalRate &r, int n, const SandwichOptions &options = {});

nlohmann::json to_json(const BoundReport &report);

enum class CheckStatus { pass, fail, skip };

std::string to_string(CheckStatus status);

/// One inequality of the verification sweep.
struct CheckRow {
    std::string section;
    std::string r;
    int n = 0;
    int k = 0;
    int c = 0;
    std::string expression;
    std::string relation;
    std::string lhs;
    std::string rhs;
    CheckStatus status = CheckStatus::pass;
};

struct VerificationReport {
    std::vector<CheckRow> rows;
    int passed = 0;
    int failed = 0;
    int skipped = 0;

    bool ok() const { return failed == 0; }
};

struct VerifyOptions {
    int enumeration_limit = kDefaultEnumerationLimit;
    /// Largest first argument used by the monotonicity, sub-additivity and
    /// scaling checks on the omega table; 0 means n_max.
    int omega_n_max = 0;
};

/// Checks, against brute-force values for every n <= n_max:
///   omega(n,k) from the table equals the exhaustive value;
///   ceil(d_r omega(n,k)) <= Q(n, ceil(rn)) <= omega(n,k);
///   Q(n, ceil(rn)) <= q(l,k) + q(m,k+1) <= omega(kl,k) + omega((k+1)m,k+1) when m > 0;
///   ceil(1/r) omega(ceil(rn),k) >= omega(n,k) when rn >= k;
///   omega(a+b,k) <= omega(a,k) + omega(b,k) and monotonicity of omega;
///   Q(n, n-k) = n - 2k + q(k) for n >= 2k+3;
///   Q(n,n) = n, Q(n,1) = 1 and Q(n,c) nondecreasing in c.
/// Rows are sorted; the report is identical for any thread count.
VerificationReport verify_bounds(const std::vector<RationalRate> &rates, int n_max,
                                   const VerifyOptions &options = {});

std::string to_csv(const VerificationReport &report);
nlohmann::json to_json(const VerificationReport &report);

} // namespace qcc
