#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "qcomm/cli.hpp"
#include "qcomm/densecoding.hpp"
#include "qcomm/entropy.hpp"
#include "qcomm/qkd.hpp"
#include "qcomm/states.hpp"
#include "qcomm/teleport.hpp"

namespace qcomm {

namespace {

struct Counter {
    std::ostream& out;
    int failures = 0;

    void check(bool ok, const std::string& name) {
        out << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    }
};

std::string label_list(const std::vector<int>& labels) {
    std::string s;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(labels[i]);
    }
    return s;
}

}  // namespace

int run_reference_suite(std::ostream& out) {
    Counter c{out};

    // Subsystem entropies, canonical rows {1},{12},{13},{14},{123},{124},{134},
    // against the published two-decimal values.
    struct EntropyCase {
        const char* state;
        double expected[7];
    };
    const EntropyCase entropy_cases[] = {
        {"GHZ4", {1, 1, 1, 1, 1, 1, 1}},
        {"OMEGA", {1, 2, 2, 1, 1, 1, 1}},
        {"W4", {0.81, 1, 1, 1, 0.81, 0.81, 0.81}},
        {"S1", {0.81, 1.5, 1.22, 1.22, 0.81, 0.81, 1}},
        {"S2", {0.81, 1.5, 1.5, 1.5, 1, 1, 1}},
    };
    for (const auto& ec : entropy_cases) {
        const EntropyTable table = entropy_table(catalog_state(ec.state));
        bool ok = table.rows.size() == 7;
        for (size_t r = 0; ok && r < table.rows.size(); ++r)
            ok = std::abs(table.rows[r].entropy_bits - ec.expected[r]) <= 5e-3;
        c.check(ok, std::string("entropy table ") + ec.state);
    }

    // Exact teleportation feasibility per qubit distribution.
    struct TeleportCase {
        const char* state;
        std::vector<int> bob;
        int m;
        bool feasible;
    };
    std::vector<TeleportCase> tele;
    for (int q = 1; q <= 4; ++q) {
        tele.push_back({"GHZ4", {q}, 2, true});
        tele.push_back({"W4", {q}, 2, false});
        tele.push_back({"OMEGA", {q}, 2, true});
        tele.push_back({"S1", {q}, 2, q == 2});
        tele.push_back({"S2", {q}, 2, q != 1});
    }
    tele.push_back({"OMEGA", {3, 4}, 4, true});
    tele.push_back({"OMEGA", {1, 2}, 4, true});
    tele.push_back({"OMEGA", {2, 4}, 4, true});
    tele.push_back({"OMEGA", {1, 3}, 4, true});
    tele.push_back({"OMEGA", {2, 3}, 4, false});
    tele.push_back({"OMEGA", {1, 4}, 4, false});
    for (const auto& pair : {std::vector<int>{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})
        tele.push_back({"GHZ4", pair, 4, false});
    for (const auto& tc : tele) {
        const auto verdict =
            check_feasibility(TeleportTask::make(catalog_state(tc.state), tc.bob, tc.m));
        c.check(verdict.feasible == tc.feasible,
                std::string("teleport ") + tc.state + " bob {" + label_list(tc.bob) + "} m=" +
                    std::to_string(tc.m) + (tc.feasible ? " feasible" : " infeasible"));
    }

    // Superdense-coding capacities (size of the maximal orthogonal set).
    struct SdcCase {
        const char* state;
        std::vector<int> sender;
        int k;
    };
    std::vector<SdcCase> sdc;
    for (int q = 1; q <= 4; ++q) {
        sdc.push_back({"GHZ4", {q}, 4});
        sdc.push_back({"OMEGA", {q}, 4});
    }
    sdc.push_back({"GHZ4", {1, 2}, 8});
    sdc.push_back({"GHZ4", {1, 2, 3}, 16});
    sdc.push_back({"OMEGA", {1, 2}, 16});
    sdc.push_back({"OMEGA", {1, 3}, 16});
    sdc.push_back({"OMEGA", {1, 4}, 8});
    sdc.push_back({"W4", {1, 2}, 8});
    sdc.push_back({"S1", {2}, 4});
    sdc.push_back({"S1", {1, 2}, 8});
    sdc.push_back({"S1", {1, 3}, 4});
    sdc.push_back({"S1", {1, 4}, 4});
    sdc.push_back({"S1", {1, 3, 4}, 16});
    for (const auto& pair : {std::vector<int>{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})
        sdc.push_back({"S2", pair, 8});
    for (const auto& sc : sdc) {
        const SdcReport rep = sdc_report(catalog_state(sc.state), sc.sender);
        c.check(rep.k_orthogonal == sc.k, std::string("sdc ") + sc.state + " sender {" +
                                              label_list(sc.sender) + "} k=" +
                                              std::to_string(sc.k));
    }

    // Key-distribution suitability under the two-basis scheme.
    struct QkdCase {
        const char* state;
        bool suitable;
    };
    for (const auto& qc : std::vector<QkdCase>{
             {"GHZ4", true}, {"W4", true}, {"OMEGA", true}, {"S1", false}, {"S2", false}}) {
        const bool found = qkd_find_witness(catalog_state(qc.state)).has_value();
        c.check(found == qc.suitable,
                std::string("qkd ") + qc.state + (qc.suitable ? " suitable" : " unsuitable"));
    }

    out << (c.failures == 0 ? "all checks passed\n"
                            : std::to_string(c.failures) + " check(s) failed\n");
    return c.failures;
}

}  // namespace qcomm
