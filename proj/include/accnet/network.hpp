#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace accnet {

// Raised when an input violates a structural precondition (bad permutation,
// negative distance, disconnected graph, degenerate size, ...).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Complete weighted network: string labels plus a symmetric nonnegative
// distance matrix with zero diagonal. `metric` records whether the triangle
// inequality held at the last validation.
struct TransportationNetwork {
    std::vector<std::string> labels;
    int n = 0;
    std::vector<double> dist;  // row-major n*n
    bool metric = false;

    double d(int i, int j) const { return dist[static_cast<size_t>(i) * n + j]; }
    double& d(int i, int j) { return dist[static_cast<size_t>(i) * n + j]; }

    static TransportationNetwork from_matrix(std::vector<std::string> labels,
                                             std::vector<std::vector<double>> rows);
};

// Possibly incomplete graph; distances of missing pairs come from shortest paths.
struct EdgeListGraph {
    struct Edge {
        int u, v;
        double w;
    };
    std::vector<std::string> labels;
    std::vector<Edge> edges;
};

struct TriangleViolation {
    int i, j, k;
    double slack;  // d(i,j) - d(i,k) - d(k,j), positive when violated
};

struct ValidationReport {
    bool symmetric = true;
    bool zero_diagonal = true;
    bool nonnegative = true;
    std::vector<TriangleViolation> triangle_violations;

    bool metric_ok() const {
        return symmetric && zero_diagonal && nonnegative && triangle_violations.empty();
    }
};

struct Permutation {
    std::vector<int> map;  // map[i] = image of node i

    bool is_bijection() const;
    Permutation inverse() const;
};

// Combined absolute + relative slack used for triangle checking when the
// caller has no better tolerance: 1e-9 + 1e-12 * (largest distance).
double default_triangle_tol(const TransportationNetwork& net);

ValidationReport validate(const TransportationNetwork& net, double tol);

// Runs validate with the default tolerance and stores the verdict in `metric`.
TransportationNetwork tag_metric(TransportationNetwork net);

// All-pairs shortest paths (Floyd-Warshall). Throws on a disconnected graph.
TransportationNetwork metric_closure(const EdgeListGraph& g);

TransportationNetwork permute(const TransportationNetwork& net, const Permutation& sigma);
TransportationNetwork scale(const TransportationNetwork& net, double beta);

// d(i,k) += delta, d(i,l) -= delta (both symmetric pairs); row i's total is
// unchanged. The result is NOT re-validated; callers must do so.
TransportationNetwork redistribute(const TransportationNetwork& net, int i, int k, int l,
                                   double delta);

// Sets the symmetric pair (k,l) to v > 0. Not re-validated.
TransportationNetwork set_distance(const TransportationNetwork& net, int k, int l, double v);

enum class RandomModel { ClosureOfRandomWeights, EuclideanPoints };

// Deterministic in (n, seed, model); the result always passes validation.
TransportationNetwork random_metric_network(int n, std::uint64_t seed,
                                            RandomModel model = RandomModel::ClosureOfRandomWeights);

// Complete network with every off-diagonal distance equal to c.
TransportationNetwork uniform_network(int n, double c);

}  // namespace accnet
