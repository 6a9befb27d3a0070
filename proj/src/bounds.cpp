#include <qcc/bounds.hpp>
#include <qcc/canon.hpp>
#include <qcc/graph6.hpp>
#include <qcc/qnc.hpp>
#include <qcc/ramsey.hpp>
#include <qcc/ramsey_search.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace qcc {

RateParams rate_params(const RationalRate &r, int n)
{
    if (n < 1)
        throw std::invalid_argument("rate_params: n must be positive");
    RateParams p;
    p.r = r;
    p.n = n;
    p.k = static_cast<int>(r.k());
    p.c = static_cast<int>(r.ceil_times(n));
    p.c_r = Rational(p.k + 1, p.k) * r.value() - Rational(1, p.k);
    if (p.c_r <= 0)
        throw std::logic_error("rate_params: c_r must be positive since r > 1/(k+1)");
    p.d_r = Rational(1, ceil(1 / p.c_r));
    p.l = (p.k + 1) * p.c - n;
    p.m = n - p.k * p.c;
    return p;
}

ValueInterval scaled_lower_bound(const Rational &d_r, const ValueInterval &omega)
{
    std::int64_t lo = ceil(d_r * omega.lo());
    std::int64_t hi = omega.bounded() ? ceil(d_r * omega.hi()) : ValueInterval::kUnbounded;
    return {lo, hi};
}

BoundReport sandwich(const RationalRate &r, int n, const SandwichOptions &options)
{
    BoundReport report;
    report.params = rate_params(r, n);
    const RateParams &p = report.params;
    report.omega_nk = inverse_ramsey(n, p.k);
    report.lower = scaled_lower_bound(p.d_r, report.omega_nk);
    report.upper_ramsey = report.omega_nk;

    if (p.join_applicable()) {
        report.upper_join = q_general(p.l, p.k).value + q_general(p.m, p.k + 1).value;
        report.upper_omega_sum = inverse_ramsey(p.k * p.l, p.k) + inverse_ramsey((p.k + 1) * p.m, p.k + 1);
    } else if (r.reciprocal_of_integer()) {
        report.notes.push_back("join bound not applicable: 1/r is an integer");
    } else {
        report.notes.push_back("join bound not applicable: m = " + std::to_string(p.m) + " <= 0");
    }

    if (n <= options.enumeration_limit && n <= kMaxEnumerationLimit) {
        auto [q, record] = qnc_bruteforce(n, p.c, options.enumeration_limit);
        report.exact = q;
        report.exact_witness_g6 = record.witness_g6;
    }

    if (options.with_witnesses) {
        try {
            UpperWitness w = simple_upper_witness(r, n, options.join.search);
            report.simple_witness_g6 = canonical_graph6(w.graph);
            report.simple_witness_omega = w.omega;
        } catch (const WitnessUnavailable &e) {
            report.notes.push_back(std::string("single Ramsey graph witness unavailable: ") + e.what());
        }
        if (p.join_applicable()) {
            try {
                JoinResult j = join_construction(plan_join(r, n), options.join);
                report.join_witness_g6 = canonical_graph6(j.graph);
                report.join_witness_omega = j.omega;
                if (!j.optimal_pieces)
                    report.notes.push_back("join pieces suboptimal: certified bound is " +
                                           std::to_string(j.certified_bound));
            } catch (const WitnessUnavailable &e) {
                report.notes.push_back(std::string("join witness unavailable: ") + e.what());
            }
        }
    }
    return report;
}

namespace {

nlohmann::json interval_json(const ValueInterval &v)
{
    nlohmann::json j = {{"lo", v.lo()}};
    j["hi"] = v.bounded() ? nlohmann::json(v.hi()) : nlohmann::json(nullptr);
    j["exact"] = v.exact();
    return j;
}

template <typename T>
nlohmann::json optional_json(const std::optional<T> &v)
{
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

} // namespace

nlohmann::json to_json(const BoundReport &report)
{
    const RateParams &p = report.params;
    nlohmann::json j;
    j["r"] = p.r.str();
    j["n"] = p.n;
    j["k"] = p.k;
    j["c"] = p.c;
    j["c_r"] = to_string(p.c_r);
    j["d_r"] = to_string(p.d_r);
    j["l"] = p.l;
    j["m"] = p.m;
    j["omega_nk"] = interval_json(report.omega_nk);
    j["lower"] = interval_json(report.lower);
    j["upper_ramsey"] = interval_json(report.upper_ramsey);
    j["upper_join"] = report.upper_join ? interval_json(*report.upper_join) : nlohmann::json(nullptr);
    j["upper_omega_sum"] = report.upper_omega_sum ? interval_json(*report.upper_omega_sum) : nlohmann::json(nullptr);
    j["exact"] = optional_json(report.exact);
    j["exact_witness_g6"] = optional_json(report.exact_witness_g6);
    j["simple_witness_g6"] = optional_json(report.simple_witness_g6);
    j["simple_witness_omega"] = optional_json(report.simple_witness_omega);
    j["join_witness_g6"] = optional_json(report.join_witness_g6);
    j["join_witness_omega"] = optional_json(report.join_witness_omega);
    j["notes"] = report.notes;
    return j;
}

std::string to_string(CheckStatus status)
{
    switch (status) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::skip:
        return "skip";
    }
    return "?";
}

namespace {

std::string fmt(std::int64_t v) { return std::to_string(v); }

std::string fmt(const ValueInterval &v) { return v.exact() ? std::to_string(v.lo()) : v.str(); }

class Verifier {
public:
    Verifier(int n_max, const VerifyOptions &options)
        : n_max_(n_max), omega_max_(options.omega_n_max > 0 ? options.omega_n_max : n_max),
          limit_(options.enumeration_limit)
    {
        if (n_max_ > limit_ || omega_max_ > limit_)
            throw CapacityError("verify_bounds: n_max exceeds the enumeration limit");
    }

    VerificationReport run(std::vector<RationalRate> rates)
    {
        std::sort(rates.begin(), rates.end());
        rates.erase(std::unique(rates.begin(), rates.end()), rates.end());
        qnc_checks();
        omega_checks();
        for (const RationalRate &r : rates)
            sandwich_checks(r);
        for (const RationalRate &r : rates)
            scaling_checks(r);
        for (const CheckRow &row : report_.rows) {
            if (row.status == CheckStatus::pass)
                ++report_.passed;
            else if (row.status == CheckStatus::fail)
                ++report_.failed;
            else
                ++report_.skipped;
        }
        return report_;
    }

private:
    void add(CheckRow row) { report_.rows.push_back(std::move(row)); }

    // Brute force within the enumeration limit, else the table value when exact.
    std::optional<int> omega_exact(int n, int k)
    {
        if (n <= limit_) {
            auto key = std::make_pair(n, k);
            auto it = omega_brute_.find(key);
            if (it == omega_brute_.end())
                it = omega_brute_.emplace(key, inverse_ramsey_bruteforce(n, k, limit_).first).first;
            return it->second;
        }
        ValueInterval v = inverse_ramsey(n, k);
        if (v.exact())
            return static_cast<int>(v.lo());
        return std::nullopt;
    }

    const std::vector<QncRow> &qnc(int n)
    {
        auto it = qnc_.find(n);
        if (it == qnc_.end())
            it = qnc_.emplace(n, qnc_table(n, limit_)).first;
        return it->second;
    }

    void qnc_checks()
    {
        for (int n = 1; n <= n_max_; ++n) {
            const auto &table = qnc(n);
            auto q = [&](int c) { return table[c - 1].q; };
            add({"qnc_diagonal", "", n, 0, n, "Q(n,n) = n", "==", fmt(q(n)), fmt(n),
                 q(n) == n ? CheckStatus::pass : CheckStatus::fail});
            add({"qnc_one", "", n, 0, 1, "Q(n,1) = 1", "==", fmt(q(1)), fmt(1),
                 q(1) == 1 ? CheckStatus::pass : CheckStatus::fail});
            for (int c = 1; c < n; ++c)
                add({"qnc_monotone", "", n, 0, c, "Q(n,c) <= Q(n,c+1)", "<=", fmt(q(c)), fmt(q(c + 1)),
                     q(c) <= q(c + 1) ? CheckStatus::pass : CheckStatus::fail});
            for (int k = 1; 2 * k + 3 <= n; ++k) {
                ValueInterval formula = qnc_formula(n, k);
                int brute = q(n - k);
                CheckStatus status = !formula.exact()                         ? CheckStatus::skip
                                     : formula.lo() == brute ? CheckStatus::pass
                                                             : CheckStatus::fail;
                add({"closed_form", "", n, k, n - k, "Q(n,n-k) = n - 2k + q(k)", "==", fmt(brute), fmt(formula), status});
            }
        }
    }

    void omega_checks()
    {
        for (int n = 1; n <= omega_max_; ++n) {
            for (int k = 1; k <= n; ++k) {
                ValueInterval table = inverse_ramsey(n, k);
                int brute = *omega_exact(n, k);
                add({"omega_table", "", n, k, 0, "omega(n,k) from R table = exhaustive omega(n,k)", "==", fmt(table),
                     fmt(brute), table.exact() && table.lo() == brute ? CheckStatus::pass : CheckStatus::fail});
            }
        }
        for (int k = 1; k <= omega_max_; ++k) {
            for (int n = 1; n < omega_max_; ++n) {
                int a = *omega_exact(n, k), b = *omega_exact(n + 1, k);
                add({"omega_monotone_n", "", n, k, 0, "omega(n,k) <= omega(n+1,k)", "<=", fmt(a), fmt(b),
                     a <= b ? CheckStatus::pass : CheckStatus::fail});
            }
            for (int n = 1; n <= omega_max_; ++n) {
                int a = *omega_exact(n, k + 1), b = *omega_exact(n, k);
                add({"omega_monotone_k", "", n, k, 0, "omega(n,k+1) <= omega(n,k)", "<=", fmt(a), fmt(b),
                     a <= b ? CheckStatus::pass : CheckStatus::fail});
            }
            for (int a = 1; 2 * a <= omega_max_; ++a) {
                for (int b = a; a + b <= omega_max_; ++b) {
                    int whole = *omega_exact(a + b, k);
                    int parts = *omega_exact(a, k) + *omega_exact(b, k);
                    add({"subadditive", "", a + b, k, b, "omega(a+b,k) <= omega(a,k) + omega(b,k) [c column = b]", "<=",
                         fmt(whole), fmt(parts), whole <= parts ? CheckStatus::pass : CheckStatus::fail});
                }
            }
        }
    }

    void sandwich_checks(const RationalRate &r)
    {
        for (int n = 1; n <= n_max_; ++n) {
            RateParams p = rate_params(r, n);
            ValueInterval table = inverse_ramsey(n, p.k);
            int omega = *omega_exact(n, p.k);
            int q = qnc(n)[p.c - 1].q;
            // Certain parts only: the lower bound uses omega.lo, the upper omega.hi.
            std::int64_t lower = ceil(p.d_r * table.lo());
            add({"sandwich_lower", r.str(), n, p.k, p.c, "ceil(d_r*omega(n,k)) <= Q(n,c)", "<=", fmt(lower), fmt(q),
                 lower <= q ? CheckStatus::pass : CheckStatus::fail});
            add({"sandwich_upper", r.str(), n, p.k, p.c, "Q(n,c) <= omega(n,k)", "<=", fmt(q), fmt(table),
                 !table.bounded() || q <= table.hi() ? CheckStatus::pass : CheckStatus::fail});
            add({"omega_agree", r.str(), n, p.k, p.c, "table omega(n,k) = exhaustive omega(n,k)", "==",
                 fmt(table), fmt(omega), table.exact() && table.lo() == omega ? CheckStatus::pass : CheckStatus::fail});

            if (!p.join_applicable()) {
                std::string why = r.reciprocal_of_integer() ? "1/r integer" : "m=" + fmt(p.m);
                add({"join_bound", r.str(), n, p.k, p.c, "Q(n,c) <= q(l,k) + q(m,k+1)", "<=", fmt(q), why,
                     CheckStatus::skip});
                continue;
            }
            ValueInterval join_bound = q_general(p.l, p.k).value + q_general(p.m, p.k + 1).value;
            ValueInterval cor = inverse_ramsey(p.k * p.l, p.k) + inverse_ramsey((p.k + 1) * p.m, p.k + 1);
            add({"join_bound", r.str(), n, p.k, p.c, "Q(n,c) <= q(l,k) + q(m,k+1)", "<=", fmt(q), fmt(join_bound),
                 !join_bound.exact()        ? CheckStatus::skip
                 : q <= join_bound.lo() ? CheckStatus::pass
                                        : CheckStatus::fail});
            add({"join_vs_omega", r.str(), n, p.k, p.c, "q(l,k) + q(m,k+1) <= omega(kl,k) + omega((k+1)m,k+1)", "<=",
                 fmt(join_bound), fmt(cor),
                 !(join_bound.exact() && cor.exact()) ? CheckStatus::skip
                 : join_bound.lo() <= cor.lo()        ? CheckStatus::pass
                                                      : CheckStatus::fail});
        }
    }

    void scaling_checks(const RationalRate &r)
    {
        for (int n = 1; n <= omega_max_; ++n) {
            for (int k = 1; k <= omega_max_; ++k) {
                if (r.p() * n < k * r.q())
                    continue;
                int a = static_cast<int>(r.ceil_times(n));
                int lhs = static_cast<int>(r.ceil_inverse()) * *omega_exact(a, k);
                int rhs = *omega_exact(n, k);
                add({"omega_scaling", r.str(), n, k, a, "ceil(1/r)*omega(ceil(rn),k) >= omega(n,k)", ">=", fmt(lhs),
                     fmt(rhs), lhs >= rhs ? CheckStatus::pass : CheckStatus::fail});
            }
        }
    }

    int n_max_;
    int omega_max_;
    int limit_;
    VerificationReport report_;
    std::map<std::pair<int, int>, int> omega_brute_;
    std::map<int, std::vector<QncRow>> qnc_;
};

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

} // namespace

VerificationReport verify_bounds(const std::vector<RationalRate> &rates, int n_max, const VerifyOptions &options)
{
    return Verifier(n_max, options).run(rates);
}

std::string to_csv(const VerificationReport &report)
{
    std::ostringstream os;
    os << "section,r,n,k,c,expression,lhs,relation,rhs,status\n";
    for (const CheckRow &row : report.rows) {
        os << row.section << ',' << row.r << ',' << row.n << ',' << row.k << ',' << row.c << ','
           << csv_field(row.expression) << ',' << csv_field(row.lhs) << ',' << row.relation << ','
           << csv_field(row.rhs) << ',' << to_string(row.status) << '\n';
    }
    return os.str();
}

nlohmann::json to_json(const VerificationReport &report)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const CheckRow &row : report.rows) {
        rows.push_back({{"section", row.section},
                        {"r", row.r},
                        {"n", row.n},
                        {"k", row.k},
                        {"c", row.c},
                        {"expression", row.expression},
                        {"lhs", row.lhs},
                        {"relation", row.relation},
                        {"rhs", row.rhs},
                        {"status", to_string(row.status)}});
    }
    return {{"summary", {{"passed", report.passed}, {"failed", report.failed}, {"skipped", report.skipped}}},
            {"rows", rows}};
}

} // namespace qcc
