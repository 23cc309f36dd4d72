// Acceptance gate: one line per criterion, exit code = number of failed
// criteria. Criteria 2 and 10 compare against externally published listings
// that are internally inconsistent with their own drawings; those sub-checks
// are asserted as stated and the mismatches are reported, not hidden.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "accnet/axioms.hpp"
#include "accnet/fixtures.hpp"
#include "accnet/indices.hpp"

using namespace accnet;

namespace {

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& note) {
        if (!ok) {
            pass = false;
            notes.push_back(note);
        }
    }
};

TransportationNetwork fig(const std::string& name) { return fixture_by_name(name)->net; }

int label_index(const TransportationNetwork& net, const std::string& label) {
    for (int i = 0; i < net.n; ++i)
        if (net.labels[i] == label) return i;
    return -1;
}

bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1e-300});
}

struct RandomCase {
    TransportationNetwork net;
    double alpha_exist;
    double alpha_hat;
};

std::vector<RandomCase> random_suite() {
    std::vector<RandomCase> out;
    for (int i = 0; i < 200; ++i) {
        RandomCase rc{random_metric_network(4 + i % 7, 1000 + i), 0, 0};
        rc.alpha_exist = existence_alpha_bound(rc.net);
        rc.alpha_hat = reasonable_alpha(rc.net).alpha_hat;
        out.push_back(std::move(rc));
    }
    return out;
}

std::set<std::pair<int, int>> pair_set(const std::vector<DominancePair>& ps) {
    std::set<std::pair<int, int>> out;
    for (const auto& p : ps) out.insert({p.dominator, p.dominated});
    return out;
}

std::string pair_list(const TransportationNetwork& net,
                      const std::set<std::pair<int, int>>& ps) {
    std::string s;
    for (const auto& [a, b] : ps) s += net.labels[a] + ">" + net.labels[b] + " ";
    return s;
}

}  // namespace

int main() {
    std::vector<Criterion> cs;
    const std::vector<RandomCase> suite = random_suite();

    {
        Criterion c{1, "fig1 distance sums/products exact with order reversal"};
        const Vec s = distance_sum(fig("fig1")).scores;
        const Vec p = distance_product(fig("fig1")).scores;
        c.require(s == Vec{9, 10, 9, 14}, "distance sums differ from [9,10,9,14]");
        c.require(p == Vec{27, 18, 15, 90}, "distance products differ from [27,18,15,90]");
        c.require(s[0] < s[1] && p[0] > p[1], "sum/product order reversal missing");
        cs.push_back(c);
    }

    {
        Criterion c{2, "ralik distance sums match the published per-island values"};
        const TransportationNetwork net = fig("ralik");
        const Vec s = distance_sum(net).scores;
        const std::vector<std::pair<std::string, double>> published = {
            {"Kwajalein", 20}, {"Namu", 21},     {"Wotho", 25},  {"Ailinglaplap", 25},
            {"Lae", 26},       {"Rongelap", 27}, {"Ujae", 27},   {"Jaluit", 32},
            {"Namorik", 32},   {"Bikini", 34},   {"Ebon", 34}};
        for (const auto& [name, want] : published) {
            const double got = s[label_index(net, name)];
            c.require(got == want, name + ": computed " + std::to_string(int(got)) +
                                       ", published " + std::to_string(int(want)) +
                                       (name == "Ebon"
                                            ? " (transcription validated by the exact"
                                              " alpha-hat reproduction; the published 34"
                                              " is inconsistent with the drawn links)"
                                            : ""));
        }
        cs.push_back(c);
    }

    {
        Criterion c{3, "alpha-hat reproduction and the exact static term"};
        c.require(std::abs(reasonable_alpha(fig("fig2_dprime")).alpha_hat - 0.2686) <= 0.002,
                  "fig2_dprime alpha-hat outside 0.2686 +/- 0.002");
        c.require(std::abs(reasonable_alpha(fig("ralik")).alpha_hat - 0.2607) <= 0.002,
                  "ralik alpha-hat outside 0.2607 +/- 0.002");
        const Vec d = distance_sum(fig("fig2_dprime")).scores;
        const double static_term =
            *std::min_element(d.begin(), d.end()) / *std::max_element(d.begin(), d.end());
        c.require(static_term == 8.0 / 15.0, "static term is not exactly 8/15");
        cs.push_back(c);
    }

    {
        Criterion c{4, "DP boundary behavior on fig2_dprime"};
        const Vec x36 = generalized_distance_sum(fig("fig2_dprime"), 0.36).scores;
        const Vec x40 = generalized_distance_sum(fig("fig2_dprime"), 0.4).scores;
        c.require(x36[0] - x36[2] > 1e-10 * std::abs(x36[0]), "x3(0.36) not below x1(0.36)");
        c.require(x40[2] - x40[0] > 1e-10 * std::abs(x40[0]), "x3(0.4) not above x1(0.4)");
        cs.push_back(c);
    }

    {
        Criterion c{5, "symmetric pairs stay tied across the sweep"};
        for (const auto& row : sweep(fig("fig2_d"), 0.01, 0.45, 45).rows) {
            const Vec& x = row.scores->scores;
            c.require(rel_close(x[0], x[1], 1e-10) && rel_close(x[2], x[3], 1e-10),
                      "fig2_d symmetry broken at alpha " + std::to_string(row.alpha));
        }
        for (const auto& row : sweep(fig("fig2_dprime"), 0.01, 0.45, 45).rows) {
            const Vec& x = row.scores->scores;
            c.require(rel_close(x[1], x[3], 1e-10),
                      "fig2_dprime symmetry broken at alpha " + std::to_string(row.alpha));
        }
        cs.push_back(c);
    }

    {
        Criterion c{6, "property suite on 200 random metric networks"};
        int idx = 0;
        for (const RandomCase& rc : suite) {
            const std::vector<double> grid = {1e-6, 0.25 * rc.alpha_hat, 0.9 * rc.alpha_hat};
            for (const AxiomVerdict& v : check_prop2(rc.net, grid))
                c.require(v.passed, "net " + std::to_string(idx) + ": " + axiom_name(v.axiom) +
                                        " failed");
            for (double a : grid)
                c.require(check_ano(IndexId::GeneralizedDistanceSum, a, rc.net, 5,
                                    2000 + idx)
                              .passed,
                          "net " + std::to_string(idx) + ": ANO failed");
            ++idx;
        }
        cs.push_back(c);
    }

    {
        Criterion c{7, "direct solve agrees with the auto-truncated series oracle"};
        auto check_net = [&](const TransportationNetwork& net, const std::string& who) {
            const double alpha = 0.5 * existence_alpha_bound(net);
            const int terms = neumann_auto_terms(net, alpha, 1e-12);
            const Vec a = neumann_oracle(net, alpha, terms).scores;
            const Vec b = generalized_distance_sum(net, alpha).scores;
            for (size_t i = 0; i < a.size(); ++i)
                c.require(rel_close(a[i], b[i], 1e-8), who + ": oracle disagreement");
        };
        for (const std::string& name : fixture_names()) check_net(fig(name), name);
        int idx = 0;
        for (const RandomCase& rc : suite) check_net(rc.net, "net " + std::to_string(idx++));
        cs.push_back(c);
    }

    {
        Criterion c{8, "no DP violations for the generalized index below alpha-hat"};
        int idx = 0;
        for (const RandomCase& rc : suite) {
            for (int j = 0; j < 8; ++j) {
                const double alpha = rc.alpha_hat * (j + 0.5) / 8.0;
                c.require(check_dp(IndexId::GeneralizedDistanceSum, alpha, rc.net).passed,
                          "net " + std::to_string(idx) + " violates DP at alpha " +
                              std::to_string(alpha));
            }
            ++idx;
        }
        cs.push_back(c);
    }

    {
        Criterion c{9, "axiom matrix with replayable counterexamples"};
        struct Cell {
            IndexId index;
            std::optional<double> alpha;
            const char* fixture;
            Axiom axiom;
            bool expect_pass;
        };
        const double a = 0.2;  // below alpha-hat of the fig2 family
        const std::vector<Cell> table = {
            {IndexId::DistanceSum, {}, "fig1", Axiom::ANO, true},
            {IndexId::DistanceSum, {}, "fig1", Axiom::IDD, true},
            {IndexId::DistanceSum, {}, "fig1", Axiom::IID, true},
            {IndexId::DistanceSum, {}, "fig1", Axiom::DP, true},
            {IndexId::DistanceSum, {}, "fig1", Axiom::PRD, true},
            {IndexId::DistanceSumNoTies, {}, "fig1", Axiom::ANO, false},
            {IndexId::DistanceSumNoTies, {}, "fig1", Axiom::IDD, true},
            {IndexId::DistanceSumNoTies, {}, "fig1", Axiom::IID, true},
            {IndexId::DistanceSumNoTies, {}, "fig1", Axiom::DP, true},
            {IndexId::DistanceSumNoTies, {}, "fig1", Axiom::PRD, true},
            {IndexId::InverseDistanceSum, {}, "fig1", Axiom::ANO, true},
            {IndexId::InverseDistanceSum, {}, "fig1", Axiom::IDD, true},
            {IndexId::InverseDistanceSum, {}, "fig1", Axiom::IID, true},
            {IndexId::InverseDistanceSum, {}, "fig1", Axiom::DP, false},
            {IndexId::DistanceProduct, {}, "fig1", Axiom::ANO, true},
            {IndexId::DistanceProduct, {}, "fig1", Axiom::DP, true},
            {IndexId::DistanceProduct, {}, "fig1", Axiom::IID, true},
            {IndexId::DistanceProduct, {}, "fig1", Axiom::PRD, true},
            {IndexId::DistanceProduct, {}, "fig1", Axiom::IDD, false},
            {IndexId::GeneralizedDistanceSum, a, "fig2_dprime", Axiom::ANO, true},
            {IndexId::GeneralizedDistanceSum, a, "fig2_dprime", Axiom::DP, true},
            {IndexId::GeneralizedDistanceSum, a, "fig2_dprime", Axiom::IDD, false},
            {IndexId::GeneralizedDistanceSum, a, "fig2_dprime", Axiom::IID, false},
            {IndexId::EccentricityLex, {}, "fig2_d", Axiom::ANO, true},
            {IndexId::EccentricityLex, {}, "fig2_d", Axiom::DP, true},
            {IndexId::EccentricityLex, {}, "fig2_d", Axiom::PRD, false},
        };
        for (const Cell& cell : table) {
            const TransportationNetwork net = fig(cell.fixture);
            AxiomVerdict v;
            switch (cell.axiom) {
                case Axiom::ANO: v = check_ano(cell.index, cell.alpha, net, 200, 31); break;
                case Axiom::IDD: v = check_idd(cell.index, cell.alpha, net, 400, 32); break;
                case Axiom::IID: v = check_iid(cell.index, cell.alpha, net, 400, 33); break;
                case Axiom::DP: v = check_dp(cell.index, cell.alpha, net); break;
                case Axiom::PRD: v = check_prd(cell.index, cell.alpha, net, 400, 34); break;
                default: continue;
            }
            const std::string who =
                index_name(cell.index) + "/" + axiom_name(cell.axiom) + " on " + cell.fixture;
            c.require(v.passed == cell.expect_pass,
                      who + ": got " + (v.passed ? "pass" : "fail") + ", expected " +
                          (cell.expect_pass ? "pass" : "fail"));
            if (!cell.expect_pass && !v.passed)
                c.require(replay_counterexample(v), who + ": counterexample did not replay");
        }
        cs.push_back(c);
    }

    {
        Criterion c{10, "dominance listings match the published examples exactly"};
        const TransportationNetwork f6 = fig("fig6");
        const auto got6 = pair_set(dominance_pairs(f6));

        std::set<std::pair<int, int>> oracle6;
        for (int i = 0; i < f6.n; ++i)
            for (int j = 0; j < f6.n; ++j) {
                if (i == j) continue;
                bool weak = true, strict = false;
                for (int k = 0; k < f6.n; ++k) {
                    if (k == i || k == j) continue;
                    weak = weak && f6.d(i, k) <= f6.d(j, k);
                    strict = strict || f6.d(i, k) < f6.d(j, k);
                }
                if (weak && strict) oracle6.insert({i, j});
            }
        c.require(got6 == oracle6, "fig6: implementation differs from the brute-force oracle");

        std::set<std::pair<int, int>> published6;
        for (auto [a, b] : std::vector<std::pair<int, int>>{
                 {1, 3}, {1, 8}, {1, 9}, {2, 11}, {3, 9}, {5, 10}, {11, 12}})
            published6.insert({label_index(f6, std::to_string(a)),
                               label_index(f6, std::to_string(b))});
        c.require(got6 == published6,
                  "fig6: computed {" + pair_list(f6, got6) + "} vs published {" +
                      pair_list(f6, published6) +
                      "} — the published (1,3) and (2,11) are refuted by the drawn links"
                      " (e.g. d(1,6)=2 > d(3,6)=1), consistent with the documented"
                      " node-12 distance-sum discrepancy in the same figure");

        const TransportationNetwork rk = fig("ralik");
        const auto gotr = pair_set(dominance_pairs(rk));
        std::set<std::pair<int, int>> publishedr;
        for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
                 {"Wotho", "Rongelap"}, {"Wotho", "Ujae"}, {"Wotho", "Bikini"},
                 {"Rongelap", "Bikini"}, {"Lae", "Ujae"}, {"Ailinglaplap", "Ebon"},
                 {"Namorik", "Ebon"}, {"Jaluit", "Ebon"}})
            publishedr.insert({label_index(rk, a), label_index(rk, b)});
        bool subset = true;
        for (const auto& p : publishedr) subset = subset && gotr.count(p);
        c.require(subset, "ralik: a published pair is missing from the computed set");
        c.require(gotr == publishedr,
                  "ralik: computed {" + pair_list(rk, gotr) +
                      "} strictly contains the published listing {" + pair_list(rk, publishedr) +
                      "} — the prose listing omits Kwajalein's dominances over Bikini, Ujae,"
                      " Lae and Lib, all verifiable by hand from the drawn links");
        cs.push_back(c);
    }

    {
        Criterion c{11, "fig6 soft checks (alpha-hat sub-check non-blocking)"};
        const TransportationNetwork f6 = fig("fig6");
        const AlphaDiagnostics diag = reasonable_alpha(f6);
        const int n1 = label_index(f6, "1");
        const int n11 = label_index(f6, "11"), n12 = label_index(f6, "12");
        for (const auto& row : sweep(f6, 0.01, 0.999 * diag.alpha_hat, 28).rows) {
            const Vec& x = row.scores->scores;
            for (int i = 0; i < f6.n; ++i)
                if (i != n1)
                    c.require(x[n1] < x[i], "node 1 not strictly first at alpha " +
                                                std::to_string(row.alpha));
            Vec sorted = x;
            std::sort(sorted.begin(), sorted.end());
            const bool last_two = (x[n11] >= sorted[f6.n - 2] && x[n12] >= sorted[f6.n - 2]);
            c.require(last_two, "nodes 11/12 not in the last class at alpha " +
                                    std::to_string(row.alpha));
        }
        if (std::abs(diag.alpha_hat - 0.279) > 0.02)
            std::printf("  note (non-blocking): fig6 alpha-hat %.5f outside 0.279 +/- 0.02\n",
                        diag.alpha_hat);
        cs.push_back(c);
    }

    {
        Criterion c{12, "fig4 flatness under the non-metric override"};
        const TransportationNetwork f4 = fig("fig4");
        c.require(!f4.metric, "fig4 unexpectedly passes validation");
        for (double alpha : {0.1, 0.3}) {
            const AccessibilityVector x = generalized_distance_sum(f4, alpha);
            c.require(x.non_metric, "result not tagged non-metric");
            for (double xi : x.scores)
                c.require(rel_close(xi, 63.0, 1e-10),
                          "score differs from 63 at alpha " + std::to_string(alpha));
        }
        cs.push_back(c);
    }

    int failures = 0;
    for (const Criterion& c : cs) {
        std::printf("criterion %2d: %s — %s\n", c.id, c.pass ? "PASS" : "FAIL", c.title.c_str());
        size_t shown = 0;
        for (const std::string& note : c.notes) {
            if (++shown > 6) {
                std::printf("    ... %zu further mismatches\n", c.notes.size() - 6);
                break;
            }
            std::printf("    %s\n", note.c_str());
        }
        if (!c.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(cs.size()) - failures, cs.size());
    return failures;
}
