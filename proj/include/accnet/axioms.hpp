#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "accnet/indices.hpp"
#include "accnet/network.hpp"

namespace accnet {

struct DominancePair {
    int dominator;
    int dominated;

    friend bool operator==(const DominancePair&, const DominancePair&) = default;
    friend auto operator<=>(const DominancePair&, const DominancePair&) = default;
};

// Exhaustive enumeration of Def-style dominance: the dominator is weakly
// closer to every third node and strictly closer to at least one.
std::vector<DominancePair> dominance_pairs(const TransportationNetwork& net);

enum class Axiom { ANO, IDD, IID, DP, PRD, HOM, CONS, AGREE, FP };
std::string axiom_name(Axiom a);

// The perturbation that produced a counterexample, in replayable form.
struct Perturbation {
    enum class Kind { Permute, Redistribute, SetDistance, None } kind = Kind::None;
    std::vector<int> perm;       // Permute
    int i = -1, k = -1, l = -1;  // Redistribute: (i,k,l); SetDistance: (k,l)
    double delta = 0.0;          // Redistribute
    double value = 0.0;          // SetDistance
};

struct CounterExample {
    TransportationNetwork net;  // the base network the axiom was checked on
    Perturbation op;
    int node_i = -1, node_j = -1;  // offending pair (ANO: node and its image)
    Vec before, after;             // full score vectors
};

struct AxiomVerdict {
    IndexId index;
    std::optional<double> alpha;
    Axiom axiom;
    bool passed = true;
    int trials = 0;
    std::uint64_t seed = 0;
    std::optional<CounterExample> counterexample;
};

AxiomVerdict check_ano(IndexId index, std::optional<double> alpha,
                       const TransportationNetwork& net, int trials, std::uint64_t seed);
AxiomVerdict check_idd(IndexId index, std::optional<double> alpha,
                       const TransportationNetwork& net, int trials, std::uint64_t seed);
AxiomVerdict check_iid(IndexId index, std::optional<double> alpha,
                       const TransportationNetwork& net, int trials, std::uint64_t seed);
AxiomVerdict check_prd(IndexId index, std::optional<double> alpha,
                       const TransportationNetwork& net, int trials, std::uint64_t seed);
AxiomVerdict check_dp(IndexId index, std::optional<double> alpha,
                      const TransportationNetwork& net);

// HOM, CONS, AGREE and FP for the generalized index over an alpha grid.
std::vector<AxiomVerdict> check_prop2(const TransportationNetwork& net,
                                      const std::vector<double>& alphas);

// Truncated series sum_{k<=K} (-alpha)^k A^k d, the independent oracle for the
// direct solve. Requires alpha * (spectral radius estimate) < 0.9.
AccessibilityVector neumann_oracle(const TransportationNetwork& net, double alpha, int terms);

// Smallest K whose last term has infinity norm below `last_term_tol`.
int neumann_auto_terms(const TransportationNetwork& net, double alpha,
                       double last_term_tol = 1e-12);

// Re-applies a counterexample's perturbation and recomputes both score
// vectors; returns true when they match the stored ones to `tol` relative.
bool replay_counterexample(const AxiomVerdict& verdict, double tol = 1e-12);

nlohmann::json verdict_to_json(const AxiomVerdict& v);
nlohmann::json verdicts_to_json(const std::vector<AxiomVerdict>& vs);

}  // namespace accnet
