#include "accnet/indices.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "accnet/io.hpp"

namespace accnet {

std::string index_name(IndexId id) {
    switch (id) {
        case IndexId::DistanceSum: return "dsum";
        case IndexId::DistanceProduct: return "dprod";
        case IndexId::InverseDistanceSum: return "invdsum";
        case IndexId::DistanceSumNoTies: return "dsum-nt";
        case IndexId::EccentricityLex: return "ecc-lex";
        case IndexId::GeneralizedDistanceSum: return "gds";
    }
    return "?";
}

std::optional<IndexId> index_from_name(const std::string& name) {
    for (IndexId id : {IndexId::DistanceSum, IndexId::DistanceProduct, IndexId::InverseDistanceSum,
                       IndexId::DistanceSumNoTies, IndexId::EccentricityLex,
                       IndexId::GeneralizedDistanceSum})
        if (index_name(id) == name) return id;
    return std::nullopt;
}

namespace {

void require_n(const TransportationNetwork& net, int min_n, const char* op) {
    if (net.n < min_n)
        throw domain_error(std::string(op) + ": needs at least " + std::to_string(min_n) +
                           " nodes, got " + std::to_string(net.n));
}

AccessibilityVector make_vector(Vec scores, IndexId id, const TransportationNetwork& net,
                                std::optional<double> alpha = std::nullopt) {
    AccessibilityVector v;
    v.scores = std::move(scores);
    v.index_id = id;
    v.alpha = alpha;
    v.non_metric = !net.metric;
    return v;
}

Vec raw_distance_sums(const TransportationNetwork& net) {
    Vec s(net.n, 0.0);
    for (int i = 0; i < net.n; ++i)
        for (int j = 0; j < net.n; ++j) s[i] += net.d(i, j);
    return s;
}

}  // namespace

AccessibilityVector distance_sum(const TransportationNetwork& net) {
    require_n(net, 2, "distance_sum");
    return make_vector(raw_distance_sums(net), IndexId::DistanceSum, net);
}

AccessibilityVector distance_product(const TransportationNetwork& net) {
    require_n(net, 2, "distance_product");
    Vec s(net.n, 1.0);
    for (int i = 0; i < net.n; ++i)
        for (int j = 0; j < net.n; ++j)
            if (i != j) {
                if (net.d(i, j) == 0.0)
                    throw domain_error("distance_product: zero off-diagonal distance");
                s[i] *= net.d(i, j);
            }
    return make_vector(std::move(s), IndexId::DistanceProduct, net);
}

AccessibilityVector inverse_distance_sum(const TransportationNetwork& net) {
    require_n(net, 2, "inverse_distance_sum");
    Vec s = raw_distance_sums(net);
    for (double& x : s) x = -x;
    return make_vector(std::move(s), IndexId::InverseDistanceSum, net);
}

AccessibilityVector distance_sum_without_ties(const TransportationNetwork& net) {
    require_n(net, 2, "distance_sum_without_ties");
    Vec base = raw_distance_sums(net);
    // Tie-breaking gap: smallest strictly positive difference between distinct
    // distance-sum values, so the nudge can never reorder unequal nodes.
    Vec sorted = base;
    std::sort(sorted.begin(), sorted.end());
    double g = std::numeric_limits<double>::infinity();
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] > sorted[i - 1]) g = std::min(g, sorted[i] - sorted[i - 1]);
    if (std::isinf(g)) g = 1.0;  // all sums equal
    Vec s(net.n);
    for (int i = 0; i < net.n; ++i) s[i] = base[i] + static_cast<double>(i) * g / net.n;
    return make_vector(std::move(s), IndexId::DistanceSumNoTies, net);
}

int compare_distinct_keys(const Vec& a, const Vec& b) {
    const size_t m = std::min(a.size(), b.size());
    for (size_t t = 0; t < m; ++t) {
        if (a[t] < b[t]) return -1;
        if (a[t] > b[t]) return 1;
    }
    // Tied prefix: the node that has run out of distinct values is closer to
    // everything that remains, hence more accessible.
    if (a.size() < b.size()) return -1;
    if (a.size() > b.size()) return 1;
    return 0;
}

EccLexResult eccentricity_lex(const TransportationNetwork& net) {
    require_n(net, 2, "eccentricity_lex");
    EccLexResult res;
    std::vector<Vec> distinct(net.n);
    for (int i = 0; i < net.n; ++i) {
        Vec row;
        for (int j = 0; j < net.n; ++j)
            if (j != i) row.push_back(net.d(i, j));
        std::sort(row.begin(), row.end(), std::greater<>());
        res.keys.push_back(row);
        Vec d = row;
        d.erase(std::unique(d.begin(), d.end()), d.end());
        distinct[i] = std::move(d);
    }
    std::vector<int> order(net.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return compare_distinct_keys(distinct[a], distinct[b]) < 0;
    });
    res.rank.assign(net.n, 0);
    int r = 0;
    for (int pos = 0; pos < net.n; ++pos) {
        if (pos > 0 && compare_distinct_keys(distinct[order[pos - 1]], distinct[order[pos]]) < 0)
            ++r;
        res.rank[order[pos]] = r;
    }
    return res;
}

InfluenceMatrix influence_matrix(const TransportationNetwork& net) {
    require_n(net, 2, "influence_matrix");
    InfluenceMatrix m;
    m.dsum = raw_distance_sums(net);
    for (double s : m.dsum)
        if (s <= 0.0) throw domain_error("influence_matrix: zero distance sum");
    m.a = Mat(net.n);
    for (int i = 0; i < net.n; ++i) {
        double diag = 0.0;
        for (int j = 0; j < net.n; ++j)
            if (j != i) {
                m.a(i, j) = net.d(i, j) / m.dsum[i];
                diag += net.d(i, j) / m.dsum[j];
            }
        m.a(i, i) = -diag;
    }
    return m;
}

double existence_alpha_bound(const TransportationNetwork& net) {
    const InfluenceMatrix m = influence_matrix(net);
    Mat sym(net.n);
    const Mat at = m.a.transpose();
    for (int i = 0; i < net.n; ++i)
        for (int j = 0; j < net.n; ++j) sym(i, j) = 0.5 * (m.a(i, j) + at(i, j));
    const Vec ev = symmetric_eigenvalues(sym);
    const double lambda_min = ev.front();
    if (lambda_min >= 0.0) return std::numeric_limits<double>::infinity();
    return -1.0 / lambda_min;
}

AccessibilityVector generalized_distance_sum(const TransportationNetwork& net, double alpha) {
    require_n(net, 2, "generalized_distance_sum");
    if (alpha <= 0.0) throw domain_error("generalized_distance_sum: alpha must be positive");
    const InfluenceMatrix m = influence_matrix(net);
    Mat sys(net.n);
    for (int i = 0; i < net.n; ++i)
        for (int j = 0; j < net.n; ++j) sys(i, j) = (i == j ? 1.0 : 0.0) + alpha * m.a(i, j);
    Vec x;
    try {
        x = lu_solve(std::move(sys), m.dsum);
    } catch (const numeric_error& e) {
        throw numeric_error(std::string(e.what()) + " at alpha=" + format_sig(alpha, 10));
    }
    return make_vector(std::move(x), IndexId::GeneralizedDistanceSum, net, alpha);
}

AlphaDiagnostics reasonable_alpha(const TransportationNetwork& net, double tol) {
    require_n(net, 2, "reasonable_alpha");
    AlphaDiagnostics diag;
    diag.alpha_exist = existence_alpha_bound(net);
    const double right =
        std::isinf(diag.alpha_exist) ? 1e6 : 0.999 * diag.alpha_exist;

    const Vec dsum = raw_distance_sums(net);
    const double static_term =
        *std::min_element(dsum.begin(), dsum.end()) / *std::max_element(dsum.begin(), dsum.end());

    auto c_of = [&](double alpha) {
        const Vec x = generalized_distance_sum(net, alpha).scores;
        Vec sorted = x;
        std::sort(sorted.begin(), sorted.end());
        const double min2 = sorted[std::min<size_t>(1, sorted.size() - 1)];
        const double xmax = sorted.back();
        return std::min(min2 / xmax, static_term);
    };

    // Coarse scan to bracket the first sign change of h(alpha) = c(alpha) - alpha.
    constexpr int kGrid = 64;
    double lo = 0.0;               // h > 0 in the alpha -> 0 limit (c -> static term > 0)
    double hi = -1.0;
    for (int g = 1; g <= kGrid; ++g) {
        const double a = right * g / kGrid;
        const double c = c_of(a);
        diag.trace.emplace_back(a, c);
        if (c - a <= 0.0) {
            hi = a;
            break;
        }
        lo = a;
    }
    diag.bisection_iterations = 0;
    if (hi < 0.0) {
        diag.capped_by_existence = true;
        diag.alpha_hat = right;
        return diag;
    }
    diag.capped_by_existence = false;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double c = c_of(mid);
        diag.trace.emplace_back(mid, c);
        if (c - mid > 0.0)
            lo = mid;
        else
            hi = mid;
        ++diag.bisection_iterations;
    }
    diag.alpha_hat = lo > 0.0 ? lo : 0.5 * (lo + hi);
    return diag;
}

SweepTable sweep(const TransportationNetwork& net, double alpha_min, double alpha_max, int steps) {
    if (!(0.0 < alpha_min && alpha_min < alpha_max) || steps < 2)
        throw domain_error("sweep: need 0 < alpha_min < alpha_max and steps >= 2");
    if (alpha_max >= existence_alpha_bound(net))
        throw domain_error("sweep: grid reaches the existence bound");
    SweepTable table;
    for (int s = 0; s < steps; ++s) {
        SweepRow row;
        row.alpha = alpha_min + (alpha_max - alpha_min) * s / (steps - 1);
        try {
            row.scores = generalized_distance_sum(net, row.alpha);
        } catch (const numeric_error& e) {
            row.error = e.what();
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

Ranking ranking(const AccessibilityVector& v, double tie_tol) {
    const int n = static_cast<int>(v.scores.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return v.scores[a] < v.scores[b]; });
    Ranking r;
    r.class_of.assign(n, 0);
    for (int pos = 0; pos < n; ++pos) {
        bool new_class = pos == 0;
        if (pos > 0) {
            const double a = v.scores[order[pos - 1]], b = v.scores[order[pos]];
            const double scale = std::max(std::abs(a), std::abs(b));
            new_class = (b - a) > tie_tol * scale;
        }
        if (new_class) r.classes.emplace_back();
        r.classes.back().push_back(order[pos]);
        r.class_of[order[pos]] = static_cast<int>(r.classes.size()) - 1;
    }
    for (auto& cls : r.classes) std::sort(cls.begin(), cls.end());
    return r;
}

AccessibilityVector evaluate_index(IndexId id, const TransportationNetwork& net,
                                   std::optional<double> alpha) {
    if (id == IndexId::GeneralizedDistanceSum) {
        if (!alpha) throw domain_error("the generalized index requires alpha");
        return generalized_distance_sum(net, *alpha);
    }
    if (alpha) throw domain_error("alpha is only meaningful for the generalized index");
    switch (id) {
        case IndexId::DistanceSum: return distance_sum(net);
        case IndexId::DistanceProduct: return distance_product(net);
        case IndexId::InverseDistanceSum: return inverse_distance_sum(net);
        case IndexId::DistanceSumNoTies: return distance_sum_without_ties(net);
        case IndexId::EccentricityLex: {
            const EccLexResult e = eccentricity_lex(net);
            Vec s(e.rank.begin(), e.rank.end());
            AccessibilityVector v;
            v.scores = std::move(s);
            v.index_id = IndexId::EccentricityLex;
            v.non_metric = !net.metric;
            return v;
        }
        default: break;
    }
    throw domain_error("unknown index");
}

std::string sweep_to_csv(const SweepTable& table, const std::vector<std::string>& labels) {
    std::string out = "alpha,node,score\n";
    for (const auto& row : table.rows) {
        if (!row.scores) {
            out += format_sig(row.alpha, 10) + ",*,solve-failed\n";
            continue;
        }
        for (size_t i = 0; i < labels.size(); ++i)
            out += format_sig(row.alpha, 10) + "," + labels[i] + "," +
                   format_sig(row.scores->scores[i], 12) + "\n";
    }
    return out;
}

}  // namespace accnet
