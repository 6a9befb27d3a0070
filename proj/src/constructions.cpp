#include <qcc/constructions.hpp>
#include <qcc/ramsey.hpp>
#include <qcc/solvers.hpp>

#include <functional>

namespace qcc {

Graph drop_edges_to_chromatic(const Graph &g, int target)
{
    if (target < 1 && g.order() > 0)
        throw std::invalid_argument("drop_edges_to_chromatic: target must be positive");
    int chi = chromatic_number(g);
    if (chi < target)
        throw std::domain_error("drop_edges_to_chromatic: chi(g) = " + std::to_string(chi) + " is below target " +
                                std::to_string(target));
    GraphBuilder b(g);
    for (auto [u, v] : g.edges()) {
        if (chi == target)
            break;
        b.remove_edge(u, v);
        // The previous colouring still works, so chi is now chi or chi - 1.
        if (find_colouring(b.view(), chi - 1))
            --chi;
    }
    return b.build();
}

UpperWitness simple_upper_witness(const RationalRate &r, int n, const WitnessSearchOptions &options)
{
    const int k = static_cast<int>(r.k());
    const int c = static_cast<int>(r.ceil_times(n));
    ValueInterval bound = inverse_ramsey(n, k);
    if (!bound.bounded())
        throw WitnessUnavailable("omega(" + std::to_string(n) + "," + std::to_string(k) + ") has no upper bound");
    WitnessOutcome outcome = ramsey_witness(n, k, static_cast<int>(bound.hi()), options);
    if (outcome.status != WitnessStatus::found)
        throw WitnessUnavailable("no Ramsey witness for (n=" + std::to_string(n) + ", alpha<=" + std::to_string(k) +
                                 ", omega<=" + std::to_string(bound.hi()) + "): " + outcome.detail);

    UpperWitness out;
    out.source = *outcome.graph;
    out.source_detail = outcome.detail;
    // alpha <= k forces chi >= ceil(n/k) >= ceil(rn).
    out.graph = drop_edges_to_chromatic(out.source, c);
    out.omega = clique_number(out.graph);
    out.chi = chromatic_number(out.graph);
    if (out.chi != c || out.omega > bound.hi())
        throw std::logic_error("simple_upper_witness: certification failed");
    return out;
}

JoinPlan plan_join(const RationalRate &r, int n)
{
    if (r.reciprocal_of_integer())
        throw std::domain_error("plan_join: r = " + r.str() + " is a reciprocal of an integer");
    JoinPlan plan;
    plan.r = r;
    plan.n = n;
    plan.k = static_cast<int>(r.k());
    plan.c = static_cast<int>(r.ceil_times(n));
    plan.m = n - plan.k * plan.c;
    plan.l = (plan.k + 1) * plan.c - n;
    if (plan.m <= 0)
        throw std::domain_error("plan_join: below applicability threshold (m = " + std::to_string(plan.m) +
                                " for r = " + r.str() + ", n = " + std::to_string(n) + ")");
    plan.l_parts = q_general(plan.l, plan.k);
    plan.m_parts = q_general(plan.m, plan.k + 1);
    for (int part : plan.l_parts.partition)
        plan.pieces.push_back({'L', part, plan.k * part, plan.k, inverse_ramsey(plan.k * part, plan.k)});
    for (int part : plan.m_parts.partition)
        plan.pieces.push_back(
            {'M', part, (plan.k + 1) * part, plan.k + 1, inverse_ramsey((plan.k + 1) * part, plan.k + 1)});
    return plan;
}

JoinResult join_construction(const JoinPlan &plan, const JoinOptions &options)
{
    JoinResult out;
    out.q_bound = plan.l_parts.value + plan.m_parts.value;
    std::string missing;
    for (const PieceSpec &spec : plan.pieces) {
        if (!spec.omega_target.bounded()) {
            missing += " (" + std::to_string(spec.order) + "," + std::to_string(spec.alpha_bound) + ",inf)";
            continue;
        }
        int target = static_cast<int>(spec.omega_target.hi());
        WitnessOutcome outcome = ramsey_witness(spec.order, spec.alpha_bound, target, options.search);
        bool optimal = outcome.status == WitnessStatus::found;
        if (!optimal && options.allow_suboptimal)
            outcome = ramsey_witness(spec.order, spec.alpha_bound, spec.order, options.search);
        if (outcome.status != WitnessStatus::found) {
            missing += " (" + std::to_string(spec.order) + "," + std::to_string(spec.alpha_bound) + "," +
                       std::to_string(target) + ")";
            continue;
        }
        PieceCertificate piece;
        piece.spec = spec;
        piece.graph = *outcome.graph;
        piece.omega = clique_number(piece.graph);
        piece.alpha = independence_number(piece.graph);
        piece.chi = chromatic_number(piece.graph);
        piece.optimal = piece.omega <= target;
        piece.detail = outcome.detail;
        if (piece.alpha > spec.alpha_bound || piece.chi * spec.alpha_bound < spec.order)
            throw std::logic_error("join_construction: piece certification failed");
        out.pieces.push_back(std::move(piece));
    }
    if (!missing.empty())
        throw WitnessUnavailable("join_construction: no witness for (size, alpha-bound, omega-target):" + missing);

    out.joined = Graph(0);
    out.certified_bound = 0;
    out.optimal_pieces = true;
    int chi_sum = 0;
    for (const PieceCertificate &piece : out.pieces) {
        out.joined = join(out.joined, piece.graph);
        out.certified_bound += piece.omega;
        out.optimal_pieces = out.optimal_pieces && piece.optimal;
        chi_sum += piece.chi;
    }
    out.joined_omega = clique_number(out.joined);
    out.joined_chi = chi_sum;
    if (out.joined.order() != plan.n || out.joined_omega != out.certified_bound || chi_sum < plan.c)
        throw std::logic_error("join_construction: join certification failed");

    out.graph = drop_edges_to_chromatic(out.joined, plan.c);
    out.omega = clique_number(out.graph);
    out.chi = chromatic_number(out.graph);
    if (out.chi != plan.c || out.omega > out.certified_bound)
        throw std::logic_error("join_construction: final certification failed");
    return out;
}

namespace {

// Independent sets of size `size` containing v, drawn from candidates above v.
void for_each_independent_through(const Graph &g, int v, int size, VertexSet candidates,
                                  const std::function<void(VertexSet)> &fn)
{
    std::function<void(VertexSet, VertexSet, int)> rec = [&](VertexSet chosen, VertexSet pool, int need) {
        if (need == 0) {
            fn(chosen);
            return;
        }
        while (popcount(pool) >= need) {
            int u = lowest(pool);
            pool &= ~bit(u);
            rec(chosen | bit(u), pool & ~g.neighbours(u), need - 1);
        }
    };
    rec(bit(v), candidates & ~g.neighbours(v) & ~first_n(v + 1), size - 1);
}

class MaximumPacking {
public:
    MaximumPacking(const Graph &g, int set_size) : g_(g), size_(set_size) {}

    std::vector<VertexSet> run()
    {
        search(g_.vertices());
        return best_;
    }

private:
    void search(VertexSet alive)
    {
        int have = static_cast<int>(current_.size());
        if (have > static_cast<int>(best_.size()))
            best_ = current_;
        if (have + popcount(alive) / size_ <= static_cast<int>(best_.size()))
            return;
        int v = lowest(alive);
        for_each_independent_through(g_, v, size_, alive, [&](VertexSet s) {
            current_.push_back(s);
            search(alive & ~s);
            current_.pop_back();
        });
        search(alive & ~bit(v));
    }

    const Graph &g_;
    int size_;
    std::vector<VertexSet> current_;
    std::vector<VertexSet> best_;
};

} // namespace

RemovalResult greedy_remove_independent(const Graph &g, int k, RemovalMode mode)
{
    if (k < 1)
        throw std::invalid_argument("greedy_remove_independent: k must be positive");
    RemovalResult out;
    const Graph comp = complement(g);
    if (mode == RemovalMode::maximum) {
        if (g.order() > kMaximumRemovalLimit)
            throw CapacityError("maximum-mode removal supports at most " + std::to_string(kMaximumRemovalLimit) +
                                " vertices");
        out.sets = MaximumPacking(g, k + 1).run();
    } else {
        VertexSet alive = g.vertices();
        for (;;) {
            VertexSet independent = maximum_clique_within(comp, alive);
            if (popcount(independent) < k + 1)
                break;
            VertexSet take = 0;
            for (int i = 0; i <= k; ++i)
                take |= bit(lowest(independent & ~take));
            out.sets.push_back(take);
            alive &= ~take;
        }
    }
    out.kept = g.vertices();
    for (VertexSet s : out.sets)
        out.kept &= ~s;
    out.removed = static_cast<int>(out.sets.size());
    out.remaining = induced(g, out.kept);
    return out;
}

} // namespace qcc
