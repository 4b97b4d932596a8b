// covercount — exact counting of constructive k-covers and coherent-system
// designs, from the command line.
//
// Subcommands:
//   table            Stirling / iterated-Stirling number tables as CSV
//   count-labelings  per-weight feasible labeling counts as JSON
//   count-covers     ordered or unordered cover counts
//   coherent         coherent-system utilities (count / cuts / eval)
//   classes          equivalence classes of branching assignments as JSON
//   ell0             minimal feasible labeling weight
//
// Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
// 2 argument error, 3 resource-cap refusal, 4 internal-consistency failure.
// All big integers are rendered as decimal strings in JSON output.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "covercount/covercount.hpp"

namespace {

using json = nlohmann::ordered_json;
using covercount::Int;

unsigned default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

// ---- branching-set selection ------------------------------------------------

// "prefix", "low-weight", or "@file" with one c/e row per line.
covercount::BranchingSet parse_branching(int k, const std::string& choice) {
    if (choice == "prefix") return covercount::prefix_branching_set(k);
    if (choice == "low-weight") return covercount::low_weight_branching_set(k);
    if (!choice.empty() && choice.front() == '@') {
        const std::string path = choice.substr(1);
        std::ifstream in(path);
        if (!in)
            throw covercount::argument_error("cannot open branching file: " +
                                             path);
        std::vector<std::string> rows;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) rows.push_back(line);
        }
        return covercount::BranchingSet::from_strings(k, rows);
    }
    throw covercount::argument_error(
        "--branching must be 'prefix', 'low-weight', or '@<file>'");
}

// ---- JSON helpers -----------------------------------------------------------

json elements_of(std::uint32_t mask) {
    json arr = json::array();
    while (mask) {
        arr.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return arr;
}

std::uint32_t mask_of(const json& arr, int n, const char* what) {
    if (!arr.is_array())
        throw covercount::argument_error(std::string(what) +
                                         ": expected an array of elements");
    std::uint32_t mask = 0;
    for (const json& e : arr) {
        if (!e.is_number_integer())
            throw covercount::argument_error(std::string(what) +
                                             ": elements must be integers");
        const long long v = e.get<long long>();
        if (v < 1 || v > n)
            throw covercount::argument_error(std::string(what) +
                                             ": element outside 1..n");
        const std::uint32_t bit = std::uint32_t(1) << (v - 1);
        if (mask & bit)
            throw covercount::argument_error(std::string(what) +
                                             ": duplicate element");
        mask |= bit;
    }
    return mask;
}

json family_json(const std::vector<std::uint32_t>& sets) {
    json arr = json::array();
    for (std::uint32_t s : sets) arr.push_back(elements_of(s));
    return arr;
}

json class_record(const covercount::EquivalenceClass& cls) {
    json rec;
    rec["index"] = cls.index;
    rec["representative"] = cls.representative.to_string01();
    rec["weight"] = cls.representative.weight();
    rec["feasible"] = cls.feasible;
    json offsets = json::object();
    for (const auto& [w, group] : cls.offsets) {
        json g;
        g["representative"] = group.representative.to_string01();
        g["multiplicity"] = group.multiplicity;
        offsets[std::to_string(w)] = g;
    }
    rec["offsets"] = offsets;
    return rec;
}

void emit(const json& out) { std::cout << out.dump(2) << '\n'; }

// ---- coherent-system JSON I/O -----------------------------------------------

struct SystemInput {
    int n = 0;
    int s = 1;
    std::vector<std::uint32_t> paths;
    std::optional<std::vector<std::uint32_t>> cuts;
};

SystemInput read_system(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw covercount::argument_error("cannot open system file: " + path);
    json j = json::parse(in);
    SystemInput sys;
    if (!j.contains("n") || !j.at("n").is_number_integer())
        throw covercount::argument_error("system JSON: missing integer 'n'");
    sys.n = j.at("n").get<int>();
    if (j.contains("s")) {
        if (!j.at("s").is_number_integer())
            throw covercount::argument_error("system JSON: 's' must be an "
                                             "integer");
        sys.s = j.at("s").get<int>();
    }
    if (!j.contains("paths"))
        throw covercount::argument_error("system JSON: missing 'paths'");
    for (const json& p : j.at("paths"))
        sys.paths.push_back(mask_of(p, sys.n, "paths"));
    if (j.contains("cuts")) {
        std::vector<std::uint32_t> cuts;
        for (const json& c : j.at("cuts"))
            cuts.push_back(mask_of(c, sys.n, "cuts"));
        sys.cuts = std::move(cuts);
    }
    return sys;
}

json system_json(const covercount::CoherentSystem& sys) {
    json out;
    out["n"] = sys.n;
    out["s"] = sys.s;
    out["paths"] = family_json(sys.path_sets);
    if (sys.cut_sets) out["cuts"] = family_json(*sys.cut_sets);
    return out;
}

std::vector<int> parse_state(const std::string& text) {
    std::vector<int> z;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        int v = 0;
        bool ok = false;
        try {
            std::size_t used = 0;
            v = std::stoi(token, &used);
            ok = used == token.size();
        } catch (const std::exception&) {
        }
        if (!ok)
            throw covercount::argument_error(
                "--state: malformed component state '" + token + "'");
        z.push_back(v);
    }
    if (z.empty())
        throw covercount::argument_error("--state: expected z1,z2,...,zn");
    return z;
}

// ---- subcommand bodies --------------------------------------------------------

void run_table(const std::string& kind, int max_n) {
    const covercount::TableKind tk = (kind == "stirling")
                                         ? covercount::TableKind::stirling
                                         : covercount::TableKind::isn;
    if (max_n < 1)
        throw covercount::argument_error("table: --max-n must be >= 1");
    covercount::write_csv(
        covercount::build_table(tk, static_cast<unsigned>(max_n)), std::cout);
}

void run_count_labelings(int k, const std::string& branching,
                         std::optional<int> n, bool per_class, bool oracle,
                         unsigned threads) {
    const covercount::BranchingSet T = parse_branching(k, branching);
    const covercount::LabelingCounts counts =
        covercount::count_labelings_detailed(k, T, -1, threads);

    json out;
    out["k"] = counts.k;
    out["l0"] = counts.l0;
    json f = json::object();
    for (int l = counts.l0; l <= counts.max_ell; ++l)
        f[std::to_string(l)] = covercount::to_decimal(counts.totals.at(l));
    out["F"] = f;
    if (n) {
        out["C_ordered"] = covercount::to_decimal(
            covercount::count_ordered_covers(*n, k, T, threads));
        out["C_unordered"] = covercount::to_decimal(
            covercount::count_unordered_covers(*n, k, T, threads));
    }
    if (per_class) {
        json arr = json::array();
        for (std::size_t i = 0; i < counts.classes.size(); ++i) {
            json rec = class_record(counts.classes[i]);
            json row = json::object();
            for (int l = counts.l0; l <= counts.max_ell; ++l)
                row[std::to_string(l)] =
                    covercount::to_decimal(counts.class_rows[i].at(l));
            rec["row"] = row;
            arr.push_back(rec);
        }
        out["classes"] = arr;
    }
    if (oracle) {
        const auto reference = covercount::oracle::brute_force_labelings(k);
        for (int l = 1; l <= counts.max_ell; ++l) {
            const auto it = reference.find(l);
            const Int expected = (it == reference.end()) ? Int(0) : Int(it->second);
            if (counts.totals.at(l) != expected)
                throw covercount::consistency_error(
                    "count-labelings: pipeline disagrees with the brute-force "
                    "oracle at weight " +
                    std::to_string(l));
        }
        out["oracle"] = "match";
    }
    emit(out);
}

void run_count_covers(int n, int k, bool unordered, unsigned threads) {
    const Int count = unordered
                          ? covercount::count_unordered_covers(n, k, threads)
                          : covercount::count_ordered_covers(n, k, threads);
    std::cout << covercount::to_decimal(count) << '\n';
}

void run_coherent_count(int n, int k, unsigned threads) {
    std::cout << covercount::to_decimal(
                     covercount::count_coherent_designs(n, k, threads))
              << '\n';
}

void run_coherent_cuts(const std::string& input) {
    const SystemInput in = read_system(input);
    // Validate the paths (and any provided cuts) up front, then emit the
    // system back with freshly computed minimal cut sets.
    covercount::CoherentSystem sys(in.n, in.s, in.paths, in.cuts);
    sys.cut_sets = covercount::minimal_cut_sets(sys.path_sets, sys.n);
    emit(system_json(sys));
}

void run_coherent_eval(const std::string& input, const std::string& state) {
    const SystemInput in = read_system(input);
    const covercount::CoherentSystem sys(in.n, in.s, in.paths, in.cuts);
    const std::vector<int> z = parse_state(state);
    const int by_paths = covercount::phi_from_paths(z, sys);
    const std::vector<std::uint32_t> cuts =
        sys.cut_sets ? *sys.cut_sets
                     : covercount::minimal_cut_sets(sys.path_sets, sys.n);
    const int by_cuts = covercount::phi_from_cuts(z, cuts, sys.n);
    if (by_paths != by_cuts)
        throw covercount::consistency_error(
            "coherent eval: path and cut formulas disagree (phi_paths=" +
            std::to_string(by_paths) +
            ", phi_cuts=" + std::to_string(by_cuts) + ")");
    json out;
    out["phi_paths"] = by_paths;
    out["phi_cuts"] = by_cuts;
    emit(out);
}

void run_classes(int k, const std::string& branching) {
    const covercount::BranchingSet T = parse_branching(k, branching);
    const auto classes = covercount::partition_classes(T);

    json out;
    out["k"] = k;
    json members = json::array();
    for (const covercount::IndexVector& t : T.members)
        members.push_back(t.to_string());
    out["branching"] = members;
    out["stabilizer_permutations"] =
        covercount::stabilizer_permutations(T).size();
    out["stabilizer_complements"] =
        covercount::stabilizer_complements(T).size();
    int feasible = 0;
    for (const auto& cls : classes)
        if (cls.feasible) ++feasible;
    out["feasible_classes"] = feasible;
    json arr = json::array();
    for (const auto& cls : classes) arr.push_back(class_record(cls));
    out["classes"] = arr;
    emit(out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting for constructive k-covers of an n-set and "
                 "coherent-system designs"};
    app.require_subcommand(1);
    unsigned threads = default_threads();

    // table
    std::string table_kind;
    int table_max_n = 0;
    CLI::App* table = app.add_subcommand(
        "table", "Print a Stirling or iterated-Stirling table as CSV");
    table->add_option("--kind", table_kind, "Table kind")
        ->required()
        ->check(CLI::IsMember({"stirling", "isn"}));
    table->add_option("--max-n", table_max_n, "Largest n to tabulate")
        ->required();

    // count-labelings
    int cl_k = 0;
    int cl_n = 0;
    std::string cl_branching = "prefix";
    bool cl_per_class = false;
    bool cl_oracle = false;
    CLI::App* cl = app.add_subcommand(
        "count-labelings",
        "Count feasible labelings per weight, via equivalence classes");
    cl->add_option("--k", cl_k, "Number of sets in the cover")->required();
    cl->add_option("--branching", cl_branching,
                   "prefix | low-weight | @<file> (one c/e row per line)");
    cl->add_option("--n", cl_n,
                   "Also report ordered/unordered cover counts for this n");
    cl->add_flag("--per-class", cl_per_class,
                 "Include the per-class count rows");
    cl->add_flag("--oracle", cl_oracle,
                 "Cross-check totals against the brute-force oracle");
    cl->add_option("--threads", threads, "Worker thread bound");

    // count-covers
    int cc_n = 0, cc_k = 0;
    bool cc_unordered = false;
    CLI::App* cc = app.add_subcommand(
        "count-covers", "Count constructive k-covers of {1..n}");
    cc->add_option("--n", cc_n, "Size of the ground set")->required();
    cc->add_option("--k", cc_k, "Number of sets in the cover")->required();
    cc->add_flag("--unordered", cc_unordered,
                 "Divide out the k! orderings");
    cc->add_option("--threads", threads, "Worker thread bound");

    // coherent
    CLI::App* coherent = app.add_subcommand(
        "coherent", "Coherent multi-state system utilities");
    coherent->require_subcommand(1);

    int ch_n = 0, ch_k = 0;
    CLI::App* ch_count = coherent->add_subcommand(
        "count", "Count coherent designs with k minimal path sets");
    ch_count->add_option("--n", ch_n, "Number of components")->required();
    ch_count->add_option("--k", ch_k, "Number of minimal path sets")
        ->required();
    ch_count->add_option("--threads", threads, "Worker thread bound");

    std::string cuts_input;
    CLI::App* ch_cuts = coherent->add_subcommand(
        "cuts", "Compute the minimal cut sets of a system");
    ch_cuts->add_option("--input", cuts_input, "System JSON file")->required();

    std::string eval_input, eval_state;
    CLI::App* ch_eval = coherent->add_subcommand(
        "eval", "Evaluate the structure function by both formulas");
    ch_eval->add_option("--input", eval_input, "System JSON file")->required();
    ch_eval->add_option("--state", eval_state, "Component states z1,z2,...,zn")
        ->required();

    // classes
    int cls_k = 0;
    std::string cls_branching = "prefix";
    CLI::App* cls = app.add_subcommand(
        "classes", "Partition branching assignments into equivalence classes");
    cls->add_option("--k", cls_k, "Number of sets in the cover")->required();
    cls->add_option("--branching", cls_branching,
                    "prefix | low-weight | @<file> (one c/e row per line)");

    // ell0
    int e_k = 0;
    CLI::App* e0 = app.add_subcommand(
        "ell0", "Print the minimal weight of a feasible labeling");
    e0->add_option("--k", e_k, "Number of sets in the cover")->required();

    try {
        app.parse(argc, argv);
        if (*table) run_table(table_kind, table_max_n);
        if (*cl)
            run_count_labelings(cl_k, cl_branching,
                                cl->count("--n") > 0
                                    ? std::optional<int>(cl_n)
                                    : std::nullopt,
                                cl_per_class, cl_oracle, threads);
        if (*cc) run_count_covers(cc_n, cc_k, cc_unordered, threads);
        if (*ch_count) run_coherent_count(ch_n, ch_k, threads);
        if (*ch_cuts) run_coherent_cuts(cuts_input);
        if (*ch_eval) run_coherent_eval(eval_input, eval_state);
        if (*cls) run_classes(cls_k, cls_branching);
        if (*e0) std::cout << covercount::ell0(e_k) << '\n';
    } catch (const CLI::Success& e) {
        return app.exit(e); // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints its own diagnostic to stderr
        return 2;
    } catch (const covercount::consistency_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const covercount::resource_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const covercount::argument_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: invalid JSON input: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
