#include "accnet/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace accnet {

TransportationNetwork TransportationNetwork::from_matrix(std::vector<std::string> labels,
                                                         std::vector<std::vector<double>> rows) {
    TransportationNetwork net;
    net.n = static_cast<int>(rows.size());
    if (labels.empty())
        for (int i = 0; i < net.n; ++i) labels.push_back(std::to_string(i + 1));
    if (static_cast<int>(labels.size()) != net.n)
        throw domain_error("label count does not match matrix size");
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != net.n) throw domain_error("matrix is not square");
    net.labels = std::move(labels);
    net.dist.resize(static_cast<size_t>(net.n) * net.n);
    for (int i = 0; i < net.n; ++i)
        for (int j = 0; j < net.n; ++j) net.d(i, j) = rows[i][j];
    return net;
}

bool Permutation::is_bijection() const {
    std::vector<bool> seen(map.size(), false);
    for (int x : map) {
        if (x < 0 || x >= static_cast<int>(map.size()) || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.map.resize(map.size());
    for (size_t i = 0; i < map.size(); ++i) inv.map[map[i]] = static_cast<int>(i);
    return inv;
}

double default_triangle_tol(const TransportationNetwork& net) {
    double dmax = 0.0;
    for (double x : net.dist) dmax = std::max(dmax, std::abs(x));
    return 1e-9 + 1e-12 * dmax;
}

ValidationReport validate(const TransportationNetwork& net, double tol) {
    ValidationReport rep;
    const int n = net.n;
    for (int i = 0; i < n; ++i) {
        if (net.d(i, i) != 0.0) rep.zero_diagonal = false;
        for (int j = 0; j < n; ++j) {
            if (net.d(i, j) < 0.0) rep.nonnegative = false;
            if (net.d(i, j) != net.d(j, i)) rep.symmetric = false;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                const double slack = net.d(i, j) - net.d(i, k) - net.d(k, j);
                if (slack > tol) rep.triangle_violations.push_back({i, j, k, slack});
            }
        }
    return rep;
}

TransportationNetwork tag_metric(TransportationNetwork net) {
    net.metric = validate(net, default_triangle_tol(net)).metric_ok();
    return net;
}

TransportationNetwork metric_closure(const EdgeListGraph& g) {
    const int n = static_cast<int>(g.labels.size());
    if (n < 1) throw domain_error("metric_closure: empty graph");
    const double inf = std::numeric_limits<double>::infinity();

    TransportationNetwork net;
    net.labels = g.labels;
    net.n = n;
    net.dist.assign(static_cast<size_t>(n) * n, inf);
    for (int i = 0; i < n; ++i) net.d(i, i) = 0.0;
    for (const auto& e : g.edges) {
        if (e.u == e.v) throw domain_error("metric_closure: self-loop");
        if (e.w <= 0.0) throw domain_error("metric_closure: nonpositive edge weight");
        net.d(e.u, e.v) = std::min(net.d(e.u, e.v), e.w);
        net.d(e.v, e.u) = net.d(e.u, e.v);
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (net.d(i, k) + net.d(k, j) < net.d(i, j))
                    net.d(i, j) = net.d(i, k) + net.d(k, j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::isinf(net.d(i, j)))
                throw domain_error("metric_closure: graph is disconnected (" + g.labels[i] +
                                   " unreachable from " + g.labels[j] + ")");
    net.metric = true;
    return net;
}

TransportationNetwork permute(const TransportationNetwork& net, const Permutation& sigma) {
    if (static_cast<int>(sigma.map.size()) != net.n || !sigma.is_bijection())
        throw domain_error("permute: not a bijection on the node set");
    TransportationNetwork out;
    out.n = net.n;
    out.metric = net.metric;
    out.labels.resize(net.n);
    out.dist.resize(net.dist.size());
    for (int i = 0; i < net.n; ++i) {
        out.labels[sigma.map[i]] = net.labels[i];
        for (int j = 0; j < net.n; ++j) out.d(sigma.map[i], sigma.map[j]) = net.d(i, j);
    }
    return out;
}

TransportationNetwork scale(const TransportationNetwork& net, double beta) {
    if (beta <= 0.0) throw domain_error("scale: beta must be positive");
    TransportationNetwork out = net;
    for (double& x : out.dist) x *= beta;
    return out;  // metric flag preserved: the inequality is homogeneous
}

TransportationNetwork redistribute(const TransportationNetwork& net, int i, int k, int l,
                                   double delta) {
    if (i == k || i == l || k == l) throw domain_error("redistribute: indices must be distinct");
    TransportationNetwork out = net;
    out.metric = false;  // unknown until re-validated
    out.d(i, k) += delta;
    out.d(k, i) = out.d(i, k);
    out.d(i, l) -= delta;
    out.d(l, i) = out.d(i, l);
    if (out.d(i, k) < 0.0 || out.d(i, l) < 0.0)
        throw domain_error("redistribute: resulting distance is negative");
    return out;
}

TransportationNetwork set_distance(const TransportationNetwork& net, int k, int l, double v) {
    if (k == l) throw domain_error("set_distance: diagonal entry is fixed at zero");
    if (v <= 0.0) throw domain_error("set_distance: distance must be positive");
    TransportationNetwork out = net;
    out.metric = false;  // unknown until re-validated
    out.d(k, l) = v;
    out.d(l, k) = v;
    return out;
}

namespace {

// Deterministic uniform double in [0,1) from raw generator bits, so results
// do not depend on the standard library's distribution implementation.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

TransportationNetwork random_metric_network(int n, std::uint64_t seed, RandomModel model) {
    if (n < 3) throw domain_error("random_metric_network: n must be at least 3");
    std::mt19937_64 rng(seed);

    if (model == RandomModel::EuclideanPoints) {
        std::vector<double> px(n), py(n);
        for (int i = 0; i < n; ++i) {
            px[i] = uniform01(rng);
            py[i] = uniform01(rng);
        }
        TransportationNetwork net;
        net.n = n;
        net.dist.assign(static_cast<size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) {
            net.labels.push_back(std::to_string(i + 1));
            for (int j = 0; j < n; ++j)
                net.d(i, j) = std::hypot(px[i] - px[j], py[i] - py[j]);
        }
        // Coincident points would give zero distances; nudge deterministically.
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && net.d(i, j) < 1e-6) {
                    net.d(i, j) = 1e-6;
                    net.d(j, i) = 1e-6;
                }
        net.metric = true;
        return net;
    }

    // Closure-of-random-weights: uniform weights on the complete graph,
    // then shortest paths to restore the triangle inequality.
    EdgeListGraph g;
    for (int i = 0; i < n; ++i) g.labels.push_back(std::to_string(i + 1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.edges.push_back({i, j, 0.5 + 1.5 * uniform01(rng)});
    return metric_closure(g);
}

TransportationNetwork uniform_network(int n, double c) {
    if (n < 2 || c <= 0.0) throw domain_error("uniform_network: need n >= 2 and c > 0");
    TransportationNetwork net;
    net.n = n;
    net.dist.assign(static_cast<size_t>(n) * n, c);
    for (int i = 0; i < n; ++i) {
        net.labels.push_back(std::to_string(i + 1));
        net.d(i, i) = 0.0;
    }
    net.metric = true;
    return net;
}

}  // namespace accnet
