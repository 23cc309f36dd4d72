#include "accnet/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <utility>

#include "accnet/io.hpp"

namespace accnet {

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int uniform_int(std::mt19937_64& rng, int n) {
    return std::min(n - 1, static_cast<int>(uniform01(rng) * n));
}

Vec index_scores(IndexId id, std::optional<double> alpha, const TransportationNetwork& net) {
    return evaluate_index(id, net, alpha).scores;
}

double pair_scale(double a, double b) {
    return std::max({std::abs(a), std::abs(b), 1.0});
}

// Premise "f_i is at most f_j", with slack so exact ties qualify in both
// orientations.
bool weakly_before(double fi, double fj) {
    return fi <= fj + 1e-12 * pair_scale(fi, fj);
}

// Decisive weak-order violation: i scores worse than j beyond rounding noise.
bool decisively_after(double fi, double fj) {
    return fi - fj > 1e-10 * pair_scale(fi, fj);
}

// Strictness violation: wrong order beyond noise, or an exact tie.
bool not_strictly_before(double fi, double fj) {
    return decisively_after(fi, fj) || fi == fj;
}

// A perturbed network is admissible when it still satisfies the triangle
// inequality; a non-metric base (override case) skips the filter, since no
// perturbation could restore what the base never had.
bool admissible(const TransportationNetwork& base, TransportationNetwork& pert) {
    if (!base.metric) {
        pert.metric = false;
        return true;
    }
    pert = tag_metric(std::move(pert));
    return pert.metric;
}

AxiomVerdict make_verdict(IndexId index, std::optional<double> alpha, Axiom axiom,
                          std::uint64_t seed) {
    AxiomVerdict v;
    v.index = index;
    v.alpha = alpha;
    v.axiom = axiom;
    v.seed = seed;
    return v;
}

void require_trial_yield(int valid, int trials, const char* who) {
    if (valid * 10 < trials)
        throw numeric_error(std::string(who) +
                            ": fewer than trials/10 admissible perturbations; the network "
                            "leaves no room for this test");
}

}  // namespace

std::string axiom_name(Axiom a) {
    switch (a) {
        case Axiom::ANO: return "ANO";
        case Axiom::IDD: return "IDD";
        case Axiom::IID: return "IID";
        case Axiom::DP: return "DP";
        case Axiom::PRD: return "PRD";
        case Axiom::HOM: return "HOM";
        case Axiom::CONS: return "CONS";
        case Axiom::AGREE: return "AGREE";
        case Axiom::FP: return "FP";
    }
    return "?";
}

std::vector<DominancePair> dominance_pairs(const TransportationNetwork& net) {
    if (net.n < 3) throw domain_error("dominance_pairs: needs at least 3 nodes");
    std::vector<DominancePair> out;
    for (int i = 0; i < net.n; ++i)
        for (int j = 0; j < net.n; ++j) {
            if (i == j) continue;
            bool weak = true, strict = false;
            for (int k = 0; k < net.n; ++k) {
                if (k == i || k == j) continue;
                if (net.d(i, k) > net.d(j, k)) weak = false;
                if (net.d(i, k) < net.d(j, k)) strict = true;
            }
            if (weak && strict) out.push_back({i, j});
        }
    return out;
}

AxiomVerdict check_ano(IndexId index, std::optional<double> alpha,
                       const TransportationNetwork& net, int trials, std::uint64_t seed) {
    AxiomVerdict v = make_verdict(index, alpha, Axiom::ANO, seed);
    v.trials = trials;
    std::mt19937_64 rng(seed);
    const Vec f = index_scores(index, alpha, net);

    for (int t = 0; t < trials; ++t) {
        Permutation sigma;
        sigma.map.resize(net.n);
        for (int i = 0; i < net.n; ++i) sigma.map[i] = i;
        for (int i = net.n - 1; i > 0; --i)
            std::swap(sigma.map[i], sigma.map[uniform_int(rng, i + 1)]);

        const TransportationNetwork pnet = permute(net, sigma);
        const Vec g = index_scores(index, alpha, pnet);
        for (int i = 0; i < net.n; ++i) {
            const double diff = std::abs(g[sigma.map[i]] - f[i]);
            if (diff > 1e-10 * pair_scale(f[i], g[sigma.map[i]])) {
                v.passed = false;
                CounterExample ce;
                ce.net = net;
                ce.op.kind = Perturbation::Kind::Permute;
                ce.op.perm = sigma.map;
                ce.node_i = i;
                ce.node_j = sigma.map[i];
                ce.before = f;
                ce.after = g;
                v.counterexample = std::move(ce);
                return v;
            }
        }
    }
    return v;
}

AxiomVerdict check_idd(IndexId index, std::optional<double> alpha,
                       const TransportationNetwork& net, int trials, std::uint64_t seed) {
    if (net.n < 4) throw domain_error("check_idd: needs at least 4 nodes");
    AxiomVerdict v = make_verdict(index, alpha, Axiom::IDD, seed);
    v.trials = trials;
    std::mt19937_64 rng(seed);
    const Vec f = index_scores(index, alpha, net);

    int valid = 0;
    for (int t = 0; t < trials; ++t) {
        // Structural collisions in the tuple draw are resampled without
        // consuming the trial; only the metric filter counts against it.
        int i, k, l;
        double m;
        int guard = 0;
        do {
            i = uniform_int(rng, net.n);
            k = uniform_int(rng, net.n);
            l = uniform_int(rng, net.n);
            m = (k != i && l != i && k != l) ? std::min(net.d(i, k), net.d(i, l)) : 0.0;
        } while (m <= 0.0 && ++guard < 1000);
        if (m <= 0.0) continue;
        // Largest symmetric interval keeping both edited distances positive.
        const double delta = (2.0 * uniform01(rng) - 1.0) * m * 0.999;
        if (std::abs(delta) < 1e-9 * m) continue;

        TransportationNetwork pert = redistribute(net, i, k, l, delta);
        if (!admissible(net, pert)) continue;
        ++valid;

        const Vec g = index_scores(index, alpha, pert);
        for (int j = 0; j < net.n; ++j) {
            if (j == i || j == k || j == l) continue;
            if (weakly_before(f[i], f[j]) && decisively_after(g[i], g[j])) {
                v.passed = false;
                CounterExample ce;
                ce.net = net;
                ce.op.kind = Perturbation::Kind::Redistribute;
                ce.op.i = i;
                ce.op.k = k;
                ce.op.l = l;
                ce.op.delta = delta;
                ce.node_i = i;
                ce.node_j = j;
                ce.before = f;
                ce.after = g;
                v.counterexample = std::move(ce);
                return v;
            }
        }
    }
    require_trial_yield(valid, trials, "check_idd");
    return v;
}

AxiomVerdict check_iid(IndexId index, std::optional<double> alpha,
                       const TransportationNetwork& net, int trials, std::uint64_t seed) {
    if (net.n < 4) throw domain_error("check_iid: needs at least 4 nodes");
    AxiomVerdict v = make_verdict(index, alpha, Axiom::IID, seed);
    v.trials = trials;
    std::mt19937_64 rng(seed);
    const Vec f = index_scores(index, alpha, net);

    int valid = 0;
    for (int t = 0; t < trials; ++t) {
        int i, j, k, l;
        double w;
        int guard = 0;
        do {
            i = uniform_int(rng, net.n);
            j = uniform_int(rng, net.n);
            k = uniform_int(rng, net.n);
            l = uniform_int(rng, net.n);
            const bool ok = i != j && k != l && k != i && k != j && l != i && l != j;
            w = ok ? net.d(k, l) : 0.0;
        } while (w <= 0.0 && ++guard < 1000);
        if (w <= 0.0) continue;
        const double factor = std::exp((2.0 * uniform01(rng) - 1.0) * 0.7);
        const double value = w * factor;
        if (std::abs(value - w) < 1e-9 * w) continue;

        TransportationNetwork pert = set_distance(net, k, l, value);
        if (!admissible(net, pert)) continue;
        ++valid;

        const Vec g = index_scores(index, alpha, pert);
        for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
            if (weakly_before(f[a], f[b]) && decisively_after(g[a], g[b])) {
                v.passed = false;
                CounterExample ce;
                ce.net = net;
                ce.op.kind = Perturbation::Kind::SetDistance;
                ce.op.k = k;
                ce.op.l = l;
                ce.op.value = value;
                ce.node_i = a;
                ce.node_j = b;
                ce.before = f;
                ce.after = g;
                v.counterexample = std::move(ce);
                return v;
            }
        }
    }
    require_trial_yield(valid, trials, "check_iid");
    return v;
}

AxiomVerdict check_prd(IndexId index, std::optional<double> alpha,
                       const TransportationNetwork& net, int trials, std::uint64_t seed) {
    if (net.n < 3) throw domain_error("check_prd: needs at least 3 nodes");
    AxiomVerdict v = make_verdict(index, alpha, Axiom::PRD, seed);
    v.trials = trials;
    std::mt19937_64 rng(seed);
    const Vec f = index_scores(index, alpha, net);

    int valid = 0;
    for (int t = 0; t < trials; ++t) {
        int i, j, k;
        double w;
        int guard = 0;
        do {
            i = uniform_int(rng, net.n);
            j = uniform_int(rng, net.n);
            k = uniform_int(rng, net.n);
            if (i != j && !weakly_before(f[i], f[j])) std::swap(i, j);
            const bool ok = i != j && k != i && k != j && weakly_before(f[i], f[j]);
            w = ok ? net.d(j, k) : 0.0;
        } while (w <= 0.0 && ++guard < 1000);
        if (w <= 0.0) continue;

        // Mix plain increases with increases that land exactly on another
        // value already present in row j: those are the edits a
        // last-distinct-value comparison can be blind to.
        double value;
        if (uniform01(rng) < 0.5) {
            value = w * (1.0 + uniform01(rng));
        } else {
            Vec targets;
            for (int m = 0; m < net.n; ++m)
                if (m != j && net.d(j, m) > w) targets.push_back(net.d(j, m));
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
            if (targets.empty())
                value = w * (1.0 + uniform01(rng));
            else
                value = targets[uniform_int(rng, static_cast<int>(targets.size()))];
        }
        if (value <= w) continue;

        TransportationNetwork pert = set_distance(net, j, k, value);
        if (!admissible(net, pert)) continue;
        ++valid;

        const Vec g = index_scores(index, alpha, pert);
        if (not_strictly_before(g[i], g[j])) {
            v.passed = false;
            CounterExample ce;
            ce.net = net;
            ce.op.kind = Perturbation::Kind::SetDistance;
            ce.op.k = j;
            ce.op.l = k;
            ce.op.value = value;
            ce.node_i = i;
            ce.node_j = j;
            ce.before = f;
            ce.after = g;
            v.counterexample = std::move(ce);
            return v;
        }
    }
    require_trial_yield(valid, trials, "check_prd");
    return v;
}

AxiomVerdict check_dp(IndexId index, std::optional<double> alpha,
                      const TransportationNetwork& net) {
    AxiomVerdict v = make_verdict(index, alpha, Axiom::DP, 0);
    const std::vector<DominancePair> pairs = dominance_pairs(net);
    v.trials = static_cast<int>(pairs.size());
    const Vec f = index_scores(index, alpha, net);
    for (const auto& p : pairs) {
        if (not_strictly_before(f[p.dominator], f[p.dominated])) {
            v.passed = false;
            CounterExample ce;
            ce.net = net;
            ce.node_i = p.dominator;
            ce.node_j = p.dominated;
            ce.before = f;
            ce.after = f;
            v.counterexample = std::move(ce);
            return v;
        }
    }
    return v;
}

std::vector<AxiomVerdict> check_prop2(const TransportationNetwork& net,
                                      const std::vector<double>& alphas) {
    std::vector<AxiomVerdict> out;
    const Vec dsum = distance_sum(net).scores;
    const double dsum_total = std::accumulate(dsum.begin(), dsum.end(), 0.0);
    const double dsum_norm = norm_inf(dsum);

    auto fail = [&](AxiomVerdict& v, double /*alpha*/, const Vec& before, const Vec& after) {
        v.passed = false;
        if (!v.counterexample) {
            CounterExample ce;
            ce.net = net;
            ce.before = before;
            ce.after = after;
            v.counterexample = std::move(ce);
        }
    };

    AxiomVerdict hom = make_verdict(IndexId::GeneralizedDistanceSum, std::nullopt, Axiom::HOM, 0);
    AxiomVerdict cons = make_verdict(IndexId::GeneralizedDistanceSum, std::nullopt, Axiom::CONS, 0);
    AxiomVerdict agree =
        make_verdict(IndexId::GeneralizedDistanceSum, std::nullopt, Axiom::AGREE, 0);
    AxiomVerdict fp = make_verdict(IndexId::GeneralizedDistanceSum, std::nullopt, Axiom::FP, 0);
    hom.trials = cons.trials = fp.trials = static_cast<int>(alphas.size());
    agree.trials = 1;

    for (double alpha : alphas) {
        const Vec x = generalized_distance_sum(net, alpha).scores;

        // CONS: the aggregate distance pool is only redistributed.
        const double total = std::accumulate(x.begin(), x.end(), 0.0);
        if (std::abs(total - dsum_total) > 1e-9 * std::abs(dsum_total)) fail(cons, alpha, dsum, x);

        // HOM: scaling every distance by beta scales every score by beta and
        // leaves the ranking untouched.
        for (double beta : {0.5, 2.0, 10.0}) {
            const Vec y = generalized_distance_sum(scale(net, beta), alpha).scores;
            bool ok = true;
            for (int i = 0; i < net.n; ++i)
                if (std::abs(y[i] - beta * x[i]) > 1e-10 * pair_scale(y[i], beta * x[i]))
                    ok = false;
            AccessibilityVector xv{x, IndexId::GeneralizedDistanceSum, alpha, !net.metric};
            AccessibilityVector yv{y, IndexId::GeneralizedDistanceSum, alpha, !net.metric};
            if (ranking(xv, 1e-9).class_of != ranking(yv, 1e-9).class_of) ok = false;
            if (!ok) fail(hom, alpha, x, y);
        }

        // FP: a flat distance-sum profile is a fixed point.
        const TransportationNetwork uni = uniform_network(std::max(net.n, 2), 1.0);
        const Vec xu = generalized_distance_sum(uni, alpha).scores;
        const Vec du = distance_sum(uni).scores;
        for (int i = 0; i < uni.n; ++i)
            if (std::abs(xu[i] - du[i]) > 1e-10 * pair_scale(xu[i], du[i])) fail(fp, alpha, du, xu);
        bool net_flat = true;
        for (double s : dsum)
            if (std::abs(s - dsum[0]) > 1e-12 * pair_scale(s, dsum[0])) net_flat = false;
        if (net_flat)
            for (int i = 0; i < net.n; ++i)
                if (std::abs(x[i] - dsum[i]) > 1e-10 * pair_scale(x[i], dsum[i]))
                    fail(fp, alpha, dsum, x);
    }

    // AGREE: x(alpha) approaches d-sigma as alpha vanishes.
    {
        const double alpha0 = 1e-6;
        const Vec x0 = generalized_distance_sum(net, alpha0).scores;
        double diff = 0.0;
        for (int i = 0; i < net.n; ++i) diff = std::max(diff, std::abs(x0[i] - dsum[i]));
        if (diff > 1e-4 * dsum_norm) fail(agree, alpha0, dsum, x0);
    }

    out.push_back(std::move(hom));
    out.push_back(std::move(cons));
    out.push_back(std::move(agree));
    out.push_back(std::move(fp));
    return out;
}

AccessibilityVector neumann_oracle(const TransportationNetwork& net, double alpha, int terms) {
    if (terms < 1) throw domain_error("neumann_oracle: need at least one term");
    const InfluenceMatrix m = influence_matrix(net);
    const double rho = spectral_radius_estimate(m.a);
    if (alpha * rho >= 0.9)
        throw numeric_error("neumann_oracle: alpha too large for reliable convergence "
                            "(alpha * spectral radius estimate >= 0.9)");
    Vec x = m.dsum;
    Vec term = m.dsum;
    for (int k = 1; k <= terms; ++k) {
        term = matvec(m.a, term);
        for (double& t : term) t *= -alpha;
        for (int i = 0; i < net.n; ++i) x[i] += term[i];
    }
    AccessibilityVector v;
    v.scores = std::move(x);
    v.index_id = IndexId::GeneralizedDistanceSum;
    v.alpha = alpha;
    v.non_metric = !net.metric;
    return v;
}

int neumann_auto_terms(const TransportationNetwork& net, double alpha, double last_term_tol) {
    const InfluenceMatrix m = influence_matrix(net);
    Vec term = m.dsum;
    for (int k = 1; k <= 100000; ++k) {
        term = matvec(m.a, term);
        for (double& t : term) t *= -alpha;
        if (norm_inf(term) < last_term_tol) return k;
    }
    throw numeric_error("neumann_auto_terms: series did not shrink below tolerance");
}

bool replay_counterexample(const AxiomVerdict& verdict, double tol) {
    if (!verdict.counterexample) return false;
    const CounterExample& ce = *verdict.counterexample;

    TransportationNetwork pert = ce.net;
    switch (ce.op.kind) {
        case Perturbation::Kind::Permute: {
            Permutation sigma;
            sigma.map = ce.op.perm;
            pert = permute(ce.net, sigma);
            break;
        }
        case Perturbation::Kind::Redistribute:
            pert = redistribute(ce.net, ce.op.i, ce.op.k, ce.op.l, ce.op.delta);
            if (ce.net.metric) pert = tag_metric(std::move(pert));
            break;
        case Perturbation::Kind::SetDistance:
            pert = set_distance(ce.net, ce.op.k, ce.op.l, ce.op.value);
            if (ce.net.metric) pert = tag_metric(std::move(pert));
            break;
        case Perturbation::Kind::None:
            break;
    }

    const Vec before = index_scores(verdict.index, verdict.alpha, ce.net);
    const Vec after = index_scores(verdict.index, verdict.alpha, pert);
    if (before.size() != ce.before.size() || after.size() != ce.after.size()) return false;
    for (size_t i = 0; i < before.size(); ++i)
        if (std::abs(before[i] - ce.before[i]) > tol * pair_scale(before[i], ce.before[i]))
            return false;
    for (size_t i = 0; i < after.size(); ++i)
        if (std::abs(after[i] - ce.after[i]) > tol * pair_scale(after[i], ce.after[i]))
            return false;
    return true;
}

nlohmann::json verdict_to_json(const AxiomVerdict& v) {
    nlohmann::json j;
    j["index"] = index_name(v.index);
    if (v.alpha) j["alpha"] = *v.alpha;
    j["axiom"] = axiom_name(v.axiom);
    j["passed"] = v.passed;
    j["trials"] = v.trials;
    j["seed"] = v.seed;
    if (v.counterexample) {
        const CounterExample& ce = *v.counterexample;
        nlohmann::json c;
        c["network"] = network_to_json(ce.net);
        nlohmann::json op;
        switch (ce.op.kind) {
            case Perturbation::Kind::Permute:
                op["kind"] = "permute";
                op["perm"] = ce.op.perm;
                break;
            case Perturbation::Kind::Redistribute:
                op["kind"] = "redistribute";
                op["i"] = ce.op.i;
                op["k"] = ce.op.k;
                op["l"] = ce.op.l;
                op["delta"] = ce.op.delta;
                break;
            case Perturbation::Kind::SetDistance:
                op["kind"] = "set-distance";
                op["k"] = ce.op.k;
                op["l"] = ce.op.l;
                op["value"] = ce.op.value;
                break;
            case Perturbation::Kind::None:
                op["kind"] = "none";
                break;
        }
        c["operation"] = op;
        c["nodes"] = {ce.node_i, ce.node_j};
        c["before"] = ce.before;
        c["after"] = ce.after;
        j["counterexample"] = c;
    }
    return j;
}

nlohmann::json verdicts_to_json(const std::vector<AxiomVerdict>& vs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : vs) arr.push_back(verdict_to_json(v));
    return arr;
}

}  // namespace accnet
