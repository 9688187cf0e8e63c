#include "qcomm/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "qcomm/densecoding.hpp"
#include "qcomm/entropy.hpp"
#include "qcomm/ket_io.hpp"
#include "qcomm/qkd.hpp"
#include "qcomm/states.hpp"
#include "qcomm/teleport.hpp"

namespace qcomm {

namespace {

using nlohmann::json;

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A state source is a catalog name, a .ket expression file, or a .json file.
Ket load_state(const std::string& source) {
    if (ends_with(source, ".ket")) return parse_ket(read_file(source));
    if (ends_with(source, ".json")) return ket_from_json_text(read_file(source));
    return catalog_state(source);
}

std::vector<int> parse_labels(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        int v;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::runtime_error("invalid qubit label '" + item + "' (expected integers like 1,3)");
        }
        if (used != item.size())
            throw std::runtime_error("invalid qubit label '" + item + "' (expected integers like 1,3)");
        out.push_back(v);
    }
    if (out.empty()) throw std::runtime_error("empty qubit label list");
    return out;
}

std::string labels_str(const std::vector<int>& labels) {
    std::string s = "{";
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(labels[i]);
    }
    return s + "}";
}

std::string fmt4(double x) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(4) << x;
    return ss.str();
}

json labels_json(const std::vector<int>& labels) { return json(labels); }

json correlation_json(const CorrelationReport& rep, const MeasBasis& ba, const MeasBasis& bb) {
    json j;
    j["joint"] = rep.joint;
    j["encoded_submatrix"] = rep.encoded_submatrix;
    j["perfectly_correlated"] = rep.perfectly_correlated;
    j["agreement_rate"] = rep.agreement_rate;
    j["encoded_mass"] = rep.encoded_mass;
    j["alice_encoding"] = ba.encoding;
    j["bob_encoding"] = bb.encoding;
    return j;
}

void print_correlation(std::ostream& out, const std::string& family,
                       const CorrelationReport& rep) {
    out << "  " << family << "/" << family << ": "
        << (rep.perfectly_correlated ? "perfectly correlated" : "not perfectly correlated")
        << ", agreement " << fmt4(rep.agreement_rate) << " (encoded mass "
        << fmt4(rep.encoded_mass) << ")\n";
}

int cmd_states(const std::string& show_name, bool json_mode, std::ostream& out) {
    if (show_name.empty()) {
        if (json_mode) {
            json arr = json::array();
            for (const auto& e : catalog_entries())
                arr.push_back({{"name", e.name},
                               {"n_qubits", e.state.n_qubits},
                               {"source", e.source}});
            out << arr.dump() << "\n";
        } else {
            for (const auto& e : catalog_entries())
                out << std::left << std::setw(8) << e.name << " " << e.state.n_qubits
                    << " qubits  " << e.source << "\n";
        }
        return 0;
    }
    const Ket state = catalog_state(show_name);
    if (json_mode) {
        out << ket_to_json_text(state) << "\n";
    } else {
        out << show_name << ": " << format_ket(state, 1e-12) << "\n";
    }
    return 0;
}

int cmd_entropy(const Ket& state, bool json_mode, std::ostream& out) {
    const EntropyTable table = entropy_table(state);
    if (json_mode) {
        json arr = json::array();
        for (const auto& row : table.rows)
            arr.push_back({{"side_a", labels_json(row.side_a)},
                           {"side_b", labels_json(row.side_b)},
                           {"entropy_bits", row.entropy_bits}});
        out << arr.dump() << "\n";
        return 0;
    }
    for (const auto& row : table.rows)
        out << "  " << std::left << std::setw(12) << labels_str(row.side_a) << " | "
            << std::setw(12) << labels_str(row.side_b) << "  " << fmt4(row.entropy_bits) << "\n";
    return 0;
}

int cmd_schmidt(const Ket& state, const std::vector<int>& side_a, bool json_mode,
                std::ostream& out) {
    const SchmidtForm form =
        schmidt_decompose(state, Bipartition::from_side_a(state.n_qubits, side_a));
    if (json_mode) {
        json j;
        j["side_a"] = labels_json(form.partition.side_a);
        j["side_b"] = labels_json(form.partition.side_b);
        j["coefficients"] = form.coefficients;
        json left = json::array(), right = json::array();
        for (const auto& k : form.left_basis) left.push_back(format_ket(k, 1e-9));
        for (const auto& k : form.right_basis) right.push_back(format_ket(k, 1e-9));
        j["left_basis"] = std::move(left);
        j["right_basis"] = std::move(right);
        out << j.dump() << "\n";
        return 0;
    }
    out << "partition " << labels_str(form.partition.side_a) << " | "
        << labels_str(form.partition.side_b) << ", rank " << form.rank() << "\n";
    for (int l = 0; l < form.rank(); ++l)
        out << "  c=" << fmt4(form.coefficients[l]) << "  left " << format_ket(form.left_basis[l], 1e-9)
            << "  right " << format_ket(form.right_basis[l], 1e-9) << "\n";
    return 0;
}

int cmd_teleport_check(const Ket& state, const std::vector<int>& bob, int m, bool json_mode,
                       bool strict, std::ostream& out) {
    const auto verdict = check_feasibility(TeleportTask::make(state, bob, m));
    const double need = std::log2(static_cast<double>(m));
    if (json_mode) {
        json j;
        j["feasible"] = verdict.feasible;
        j["structural_ok"] = verdict.structural_ok;
        j["entropy_ok"] = verdict.entropy_ok;
        j["bob_entropy_bits"] = verdict.bob_entropy_bits;
        j["required_entropy_bits"] = need;
        j["schmidt_spectrum"] = verdict.schmidt_spectrum;
        out << j.dump() << "\n";
    } else {
        out << (verdict.feasible ? "feasible" : "infeasible") << ", S="
            << fmt4(verdict.bob_entropy_bits) << ", need " << fmt4(need) << "\n";
        out << "  schmidt spectrum:";
        for (double c : verdict.schmidt_spectrum) out << " " << fmt4(c);
        out << "\n";
    }
    return (!verdict.feasible && strict) ? 1 : 0;
}

int cmd_teleport_run(const Ket& state, const std::vector<int>& bob, int m,
                     const std::optional<std::vector<double>>& alpha_values, uint64_t seed,
                     bool json_mode, std::ostream& out) {
    const TeleportTask task = TeleportTask::make(state, bob, m);
    std::vector<Complex> alpha;
    if (alpha_values) {
        const auto& v = *alpha_values;
        if (static_cast<int>(v.size()) == m) {
            for (double re : v) alpha.emplace_back(re, 0.0);
        } else if (static_cast<int>(v.size()) == 2 * m) {
            for (int k = 0; k < m; ++k) alpha.emplace_back(v[2 * k], v[2 * k + 1]);
        } else {
            throw std::runtime_error("--alpha needs m reals or 2m interleaved re,im values");
        }
    } else {
        alpha = random_coefficients(m, seed);
    }
    const TeleportOutcome res = simulate_teleportation(task, alpha);
    if (json_mode) {
        json j;
        j["active_count"] = static_cast<int>(res.per_outcome_fidelity.size());
        j["cbits_required"] = res.cbits_required;
        j["min_fidelity"] = res.min_fidelity;
        j["outcome_probabilities"] = res.outcome_probabilities;
        j["per_outcome_fidelity"] = res.per_outcome_fidelity;
        out << j.dump() << "\n";
        return 0;
    }
    const int active = static_cast<int>(res.per_outcome_fidelity.size());
    out << "outcomes: " << active << " active of " << res.outcome_probabilities.size()
        << ", cbits required " << fmt4(res.cbits_required) << "\n";
    for (int l = 0; l < active; ++l)
        out << "  outcome " << l << ": p=" << fmt4(res.outcome_probabilities[l])
            << " fidelity=" << std::fixed << std::setprecision(10)
            << res.per_outcome_fidelity[l] << "\n";
    out << "min fidelity: " << std::fixed << std::setprecision(10) << res.min_fidelity << "\n";
    return 0;
}

int cmd_sdc(const Ket& state, const std::vector<int>& sender, bool json_mode, std::ostream& out) {
    const SdcReport rep = sdc_report(state, sender);
    if (json_mode) {
        json j;
        j["sender"] = labels_json(rep.sender_qubits);
        j["k_orthogonal"] = rep.k_orthogonal;
        j["capacity_cbits"] = rep.capacity_cbits;
        j["sender_entropy_bits"] = rep.sender_entropy_bits;
        json witness = json::array();
        for (const auto& ps : rep.orthogonal_set) witness.push_back(ps.letters);
        j["witness"] = std::move(witness);
        out << j.dump() << "\n";
        return 0;
    }
    out << "sender " << labels_str(rep.sender_qubits) << ": k_orthogonal=" << rep.k_orthogonal
        << ", capacity " << fmt4(rep.capacity_cbits) << " cbits, sender entropy "
        << fmt4(rep.sender_entropy_bits) << " bits\n";
    out << "witness:";
    for (const auto& ps : rep.orthogonal_set) out << " " << ps.letters;
    out << "\n";
    return 0;
}

int cmd_qkd_check(const Ket& state, const std::optional<std::vector<int>>& alice, bool json_mode,
                  bool strict, std::ostream& out) {
    std::optional<QkdSplitCheck> chk;
    if (alice) {
        chk = qkd_check_split(state, *alice);
    } else {
        chk = qkd_find_witness(state);
        if (!chk) {
            if (json_mode) {
                out << json{{"suitable", false}}.dump() << "\n";
            } else {
                out << "unsuitable on every balanced split\n";
            }
            return strict ? 1 : 0;
        }
    }
    if (json_mode) {
        json j;
        j["alice"] = labels_json(chk->alice);
        j["bob"] = labels_json(chk->bob);
        j["computational"] = correlation_json(chk->computational, chk->comp_a, chk->comp_b);
        j["bell"] = correlation_json(chk->bell, chk->bell_a, chk->bell_b);
        j["suitable"] = chk->suitable;
        j["analytic_agreement"] = chk->analytic_agreement;
        j["analytic_sift_rate"] = chk->analytic_sift_rate;
        out << j.dump() << "\n";
    } else {
        out << "split " << labels_str(chk->alice) << " | " << labels_str(chk->bob) << "\n";
        print_correlation(out, "computational", chk->computational);
        print_correlation(out, "bell", chk->bell);
        out << "verdict: " << (chk->suitable ? "suitable" : "unsuitable") << "\n";
    }
    return (!chk->suitable && strict) ? 1 : 0;
}

int cmd_qkd_run(const Ket& state, const std::vector<int>& alice, int rounds, uint64_t seed,
                bool json_mode, std::ostream& out) {
    std::vector<int> sorted = alice;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> bob;
    for (int q = 1; q <= 4; ++q)
        if (!std::binary_search(sorted.begin(), sorted.end(), q)) bob.push_back(q);
    const QkdRun run = simulate_qkd(state, sorted, bob, rounds, seed);
    if (json_mode) {
        json j;
        j["rounds"] = run.rounds;
        j["seed"] = run.seed;
        j["sift_rate"] = run.sift_rate;
        j["agreement_rate"] = run.agreement_rate;
        j["alice_key"] = run.alice_key;
        j["bob_key"] = run.bob_key;
        out << j.dump() << "\n";
        return 0;
    }
    out << "rounds " << run.rounds << ", seed " << run.seed << "\n";
    out << "sift rate " << fmt4(run.sift_rate) << " (" << run.alice_key.size() << " bits kept)\n";
    out << "agreement " << fmt4(run.agreement_rate) << "\n";
    auto preview = [](const std::string& key) {
        return key.size() <= 64 ? key : key.substr(0, 64) + "...";
    };
    out << "alice key: " << preview(run.alice_key) << "\n";
    out << "bob key:   " << preview(run.bob_key) << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"analysis and simulation of communication protocols over small "
                 "multi-qubit entangled states"};
    app.require_subcommand(1);

    // states
    auto* states = app.add_subcommand("states", "list built-in states or show one");
    states->require_subcommand(1);
    auto* states_list = states->add_subcommand("list", "list the built-in states");
    auto* states_show = states->add_subcommand("show", "print one state as a ket expression");
    std::string show_name;
    states_show->add_option("name", show_name, "state name, e.g. GHZ4")->required();
    bool states_json = false;
    states_list->add_flag("--json", states_json, "emit JSON");
    bool show_json = false;
    states_show->add_flag("--json", show_json, "emit the JSON amplitude format");

    // entropy
    auto* entropy_cmd = app.add_subcommand("entropy", "bipartition entropy table of a state");
    std::string entropy_state;
    bool entropy_json = false;
    entropy_cmd->add_option("--state", entropy_state, "catalog name, .ket file, or .json file")
        ->required();
    entropy_cmd->add_flag("--json", entropy_json, "emit JSON");

    // schmidt
    auto* schmidt_cmd = app.add_subcommand("schmidt", "Schmidt decomposition across a cut");
    std::string schmidt_state, schmidt_side;
    bool schmidt_json = false;
    schmidt_cmd->add_option("--state", schmidt_state, "state source")->required();
    schmidt_cmd->add_option("--side-a", schmidt_side, "comma-separated labels of side A")
        ->required();
    schmidt_cmd->add_flag("--json", schmidt_json, "emit JSON");

    // teleport check|run
    auto* teleport = app.add_subcommand("teleport", "exact-teleportation feasibility and runs");
    teleport->require_subcommand(1);
    std::string tc_state, tc_bob;
    int tc_m = 2;
    bool tc_json = false, tc_strict = false;
    auto* tcheck = teleport->add_subcommand("check", "decide feasibility for a qubit split");
    tcheck->add_option("--state", tc_state, "state source")->required();
    tcheck->add_option("--bob", tc_bob, "comma-separated labels of Bob's qubits")->required();
    tcheck->add_option("--m", tc_m, "number of terms of the unknown state")->required();
    tcheck->add_flag("--json", tc_json, "emit JSON");
    tcheck->add_flag("--strict", tc_strict, "exit 1 when infeasible");

    std::string tr_state, tr_bob, tr_alpha;
    int tr_m = 2;
    uint64_t tr_seed = 1;
    bool tr_json = false;
    auto* trun = teleport->add_subcommand("run", "simulate the full protocol");
    trun->add_option("--state", tr_state, "state source")->required();
    trun->add_option("--bob", tr_bob, "comma-separated labels of Bob's qubits")->required();
    trun->add_option("--m", tr_m, "number of terms of the unknown state")->required();
    trun->add_option("--alpha", tr_alpha,
                     "input coefficients: m reals or 2m interleaved re,im values");
    trun->add_option("--seed", tr_seed, "seed for random coefficients (default 1)");
    trun->add_flag("--json", tr_json, "emit JSON");

    // sdc
    auto* sdc_cmd = app.add_subcommand("sdc", "superdense-coding capacity for a sender share");
    std::string sdc_state, sdc_sender;
    bool sdc_json = false;
    sdc_cmd->add_option("--state", sdc_state, "state source")->required();
    sdc_cmd->add_option("--sender", sdc_sender, "comma-separated labels of the sender's qubits")
        ->required();
    sdc_cmd->add_flag("--json", sdc_json, "emit JSON");

    // qkd check|run
    auto* qkd_cmd = app.add_subcommand("qkd", "key-distribution suitability and runs");
    qkd_cmd->require_subcommand(1);
    std::string qc_state, qc_alice;
    bool qc_json = false, qc_strict = false;
    auto* qcheck = qkd_cmd->add_subcommand("check", "two-basis correlation check");
    qcheck->add_option("--state", qc_state, "state source (4 qubits)")->required();
    qcheck->add_option("--alice", qc_alice,
                       "Alice's two labels; omitted: search the balanced splits");
    qcheck->add_flag("--json", qc_json, "emit JSON");
    qcheck->add_flag("--strict", qc_strict, "exit 1 when unsuitable");

    std::string qr_state, qr_alice;
    int qr_rounds = 1000;
    uint64_t qr_seed = 1;
    bool qr_json = false;
    auto* qrun = qkd_cmd->add_subcommand("run", "sift-and-compare key simulation");
    qrun->add_option("--state", qr_state, "state source (4 qubits)")->required();
    qrun->add_option("--alice", qr_alice, "Alice's two labels")->required();
    qrun->add_option("--rounds", qr_rounds, "number of rounds")->required();
    qrun->add_option("--seed", qr_seed, "RNG seed")->required();
    qrun->add_flag("--json", qr_json, "emit JSON");

    // paper-suite
    auto* suite = app.add_subcommand("paper-suite",
                                     "run the reproduction battery over the built-in states");

    std::vector<std::string> argv_store = {"qcomm"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_store.size());
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (states_list->parsed()) return cmd_states("", states_json, out);
        if (states_show->parsed()) return cmd_states(show_name, show_json, out);
        if (entropy_cmd->parsed()) return cmd_entropy(load_state(entropy_state), entropy_json, out);
        if (schmidt_cmd->parsed())
            return cmd_schmidt(load_state(schmidt_state), parse_labels(schmidt_side),
                               schmidt_json, out);
        if (tcheck->parsed())
            return cmd_teleport_check(load_state(tc_state), parse_labels(tc_bob), tc_m, tc_json,
                                      tc_strict, out);
        if (trun->parsed()) {
            std::optional<std::vector<double>> alpha;
            if (!tr_alpha.empty()) {
                std::vector<double> vals;
                std::stringstream ss(tr_alpha);
                std::string item;
                while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
                alpha = std::move(vals);
            }
            return cmd_teleport_run(load_state(tr_state), parse_labels(tr_bob), tr_m, alpha,
                                    tr_seed, tr_json, out);
        }
        if (sdc_cmd->parsed())
            return cmd_sdc(load_state(sdc_state), parse_labels(sdc_sender), sdc_json, out);
        if (qcheck->parsed()) {
            std::optional<std::vector<int>> alice;
            if (!qc_alice.empty()) alice = parse_labels(qc_alice);
            return cmd_qkd_check(load_state(qc_state), alice, qc_json, qc_strict, out);
        }
        if (qrun->parsed())
            return cmd_qkd_run(load_state(qr_state), parse_labels(qr_alice), qr_rounds, qr_seed,
                               qr_json, out);
        if (suite->parsed()) return run_reference_suite(out) == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command selected\n";
    return 2;
}

}  // namespace qcomm
