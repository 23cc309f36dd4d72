#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "accnet/linalg.hpp"
#include "accnet/network.hpp"

namespace accnet {

enum class IndexId {
    DistanceSum,          // dsum
    DistanceProduct,      // dprod
    InverseDistanceSum,   // invdsum
    DistanceSumNoTies,    // dsum-nt
    EccentricityLex,      // ecc-lex
    GeneralizedDistanceSum  // gds
};

std::string index_name(IndexId id);
std::optional<IndexId> index_from_name(const std::string& name);

// Per-node scores; smaller means more accessible.
struct AccessibilityVector {
    Vec scores;
    IndexId index_id;
    std::optional<double> alpha;  // set only for the generalized index
    bool non_metric = false;      // carried from the source network
};

struct InfluenceMatrix {
    Mat a;
    Vec dsum;
};

struct AlphaDiagnostics {
    double alpha_exist;   // +infinity when the symmetric part has no negative eigenvalue
    double alpha_hat;
    bool capped_by_existence;
    int bisection_iterations;
    std::vector<std::pair<double, double>> trace;  // sampled (alpha, c(alpha))
};

struct SweepRow {
    double alpha;
    std::optional<AccessibilityVector> scores;  // empty when the solve failed
    std::string error;
};

struct SweepTable {
    std::vector<SweepRow> rows;
};

// Ordered partition into accessibility classes (best class first); class_of
// maps each node to its class index.
struct Ranking {
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;
};

// Per-node key vectors for the lexicographic eccentricity index. `keys` holds
// each node's full off-diagonal row sorted descending (the display form);
// comparisons use the distinct values only, with an exhausted key treated as
// more accessible on a tied prefix.
struct EccLexResult {
    std::vector<Vec> keys;
    std::vector<int> rank;  // 0-based rank of each node's key; this is the score
};

int compare_distinct_keys(const Vec& a, const Vec& b);  // -1 / 0 / +1
EccLexResult eccentricity_lex(const TransportationNetwork& net);

AccessibilityVector distance_sum(const TransportationNetwork& net);
AccessibilityVector distance_product(const TransportationNetwork& net);
AccessibilityVector inverse_distance_sum(const TransportationNetwork& net);
AccessibilityVector distance_sum_without_ties(const TransportationNetwork& net);

InfluenceMatrix influence_matrix(const TransportationNetwork& net);

// -1/lambda_min of (A + A^T)/2, or +infinity when lambda_min >= 0.
double existence_alpha_bound(const TransportationNetwork& net);

AccessibilityVector generalized_distance_sum(const TransportationNetwork& net, double alpha);

AlphaDiagnostics reasonable_alpha(const TransportationNetwork& net, double tol = 1e-6);

SweepTable sweep(const TransportationNetwork& net, double alpha_min, double alpha_max, int steps);

Ranking ranking(const AccessibilityVector& v, double tie_tol);

// Dispatch by identifier; alpha is required (and only allowed) for gds.
AccessibilityVector evaluate_index(IndexId id, const TransportationNetwork& net,
                                   std::optional<double> alpha = std::nullopt);

std::string sweep_to_csv(const SweepTable& table, const std::vector<std::string>& labels);

}  // namespace accnet
