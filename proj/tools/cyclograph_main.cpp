#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "cyclograph/catalog.hpp"
#include "cyclograph/grow.hpp"
#include "cyclograph/poly.hpp"

using namespace cyclograph;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitVerification = 4;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int default_threads() {
    if (const char* env = std::getenv("CYCLOGRAPH_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void print_measure(const MahlerResult& m) {
    std::cout << std::fixed << std::setprecision(9) << m.value;
    if (m.is_exactly_one) {
        std::cout << " [exact-one: yes]\n";
    } else {
        std::cout << " ± " << std::scientific << std::setprecision(2) << m.error_bound
                  << " [exact-one: no]\n";
    }
}

bool looks_like_matrix(const std::string& text) { return text.rfind("ring:", 0) == 0; }

HermitianMatrix load_matrix(const std::string& path) { return matrix_from_text(slurp(path)); }

SearchReport run_and_report(SearchState& state, const std::string& name, int stop, int threads,
                            const std::string& out_dir, const std::string& ckpt, int ckpt_every,
                            const std::string& csv_path, bool timings) {
    if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
    const auto t0 = std::chrono::steady_clock::now();
    SearchReport report = run_search(state, stop, threads, out_dir, ckpt, ckpt_every);
    report.name = name;
    std::cout << report.to_table();
    if (timings) {
        const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "elapsed: " << std::fixed << std::setprecision(2) << dt << " s, extensions tested: "
                  << state.extensions_tested << "\n";
    }
    if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        if (!f) throw UsageError("cannot write: " + csv_path);
        f << report.to_csv();
    } else {
        std::cout << report.to_csv();
    }
    return report;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"exact cyclotomic-matrix toolkit over Z, Z[i] and Z[w]"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads = default_threads();
    app.add_option("--threads", threads, "worker threads for searches");
    bool timings = false;
    app.add_flag("--timings", timings, "print wall-clock timings");

    // measure
    auto* measure = app.add_subcommand("measure", "Mahler measure of a polynomial or matrix");
    std::string measure_input;
    std::string measure_coeffs;
    bool force_poly = false, force_matrix = false;
    measure->add_option("input", measure_input, "file ('-' for stdin)");
    measure->add_option("--coeffs", measure_coeffs, "ascending coefficients, e.g. '1 -3 1'");
    measure->add_flag("--poly", force_poly, "treat input as a polynomial");
    measure->add_flag("--matrix", force_matrix, "treat input as a matrix");

    // charpoly
    auto* charpoly_cmd = app.add_subcommand("charpoly", "characteristic polynomial of a matrix");
    std::string charpoly_input;
    charpoly_cmd->add_option("matrix", charpoly_input)->required();

    // cyclotomic
    auto* cyc = app.add_subcommand("cyclotomic", "exact cyclotomicity test");
    std::string cyc_input;
    cyc->add_option("matrix", cyc_input)->required();

    // equiv
    auto* equiv_cmd = app.add_subcommand("equiv", "equivalence of two matrices");
    std::string equiv_a, equiv_b, equiv_flavor = "full";
    equiv_cmd->add_option("a", equiv_a)->required();
    equiv_cmd->add_option("b", equiv_b)->required();
    equiv_cmd->add_option("--flavor", equiv_flavor, "strong|full");

    // canon
    auto* canon_cmd = app.add_subcommand("canon", "canonical key of a matrix");
    std::string canon_input, canon_flavor = "full";
    canon_cmd->add_option("matrix", canon_input)->required();
    canon_cmd->add_option("--flavor", canon_flavor, "strong|full");

    // catalog
    auto* cat = app.add_subcommand("catalog", "named graphs of the classification");
    auto* dump = cat->add_subcommand("dump", "print a named graph in matrix format");
    std::string dump_name;
    int dump_k = -1;
    dump->add_option("name", dump_name)->required();
    dump->add_option("k", dump_k, "family parameter");
    auto* verify = cat->add_subcommand("verify", "cyclotomicity + maximality + golden files");
    int verify_kmax = 8;
    std::int64_t verify_cap = 4;
    std::string verify_golden;
    verify->add_option("--k-max", verify_kmax, "largest family parameter to verify");
    verify->add_option("--cap", verify_cap, "column norm cap for maximality");
    verify->add_option("--golden-dir", verify_golden, "directory of golden matrix files");
    auto* seeds = cat->add_subcommand("seeds", "seed list of a registered search");
    std::string seeds_name;
    seeds->add_option("search", seeds_name)->required();

    // search / resume
    auto* search = app.add_subcommand("search", "run a registered or configured search");
    std::string search_name, search_config, search_out, search_ckpt, search_csv, search_flavor;
    std::vector<std::string> search_seeds;
    int search_stop = 0, ckpt_every = 0;
    search->add_option("name", search_name, "registered search name");
    search->add_option("--config", search_config, "search config file");
    search->add_option("--seed", search_seeds, "seed matrix file (with --config; repeatable)");
    search->add_option("--stop", search_stop, "stop at this vertex count");
    search->add_option("--out", search_out, "directory for witness matrix files");
    search->add_option("--checkpoint", search_ckpt, "checkpoint file");
    search->add_option("--checkpoint-every", ckpt_every, "rounds between checkpoints");
    search->add_option("--csv", search_csv, "write the CSV report here");
    search->add_option("--flavor", search_flavor, "override dedup flavor (strong|full)");

    auto* resume = app.add_subcommand("resume", "resume a checkpointed search");
    std::string resume_path, resume_out, resume_csv;
    int resume_stop = 0;
    resume->add_option("checkpoint", resume_path)->required();
    resume->add_option("--stop", resume_stop, "stop at this vertex count");
    resume->add_option("--out", resume_out, "directory for witness matrix files");
    resume->add_option("--csv", resume_csv, "write the CSV report here");

    // tables
    auto* tables = app.add_subcommand("tables", "reproduce the result tables at desk scale");
    int tables_which = 0, tables_stop = 0;
    tables->add_option("--which", tables_which, "1, 2 or 3 (default: all)");
    tables->add_option("--stop", tables_stop, "vertex bound override");

    // list
    app.add_subcommand("searches", "list registered searches");

    CLI11_PARSE(app, argc, argv);

    if (measure->parsed()) {
        MahlerResult m;
        if (!measure_coeffs.empty()) {
            m = mahler_measure(poly_from_text(measure_coeffs));
        } else if (measure_input.empty()) {
            throw UsageError("measure: give a file or --coeffs");
        } else {
            const std::string text = slurp(measure_input);
            if (force_matrix || (!force_poly && looks_like_matrix(text)))
                m = mahler_of_matrix(matrix_from_text(text));
            else
                m = mahler_measure(poly_from_text(text));
        }
        print_measure(m);
        return 0;
    }
    if (charpoly_cmd->parsed()) {
        std::cout << to_text(char_poly(load_matrix(charpoly_input))) << "\n";
        return 0;
    }
    if (cyc->parsed()) {
        std::cout << (is_cyclotomic_matrix(load_matrix(cyc_input)) ? "cyclotomic: yes" : "cyclotomic: no")
                  << "\n";
        return 0;
    }
    if (equiv_cmd->parsed()) {
        const bool eq =
            are_equivalent(load_matrix(equiv_a), load_matrix(equiv_b), parse_flavor(equiv_flavor));
        std::cout << (eq ? "equivalent: yes" : "equivalent: no") << "\n";
        return 0;
    }
    if (canon_cmd->parsed()) {
        std::cout << canonical_key(load_matrix(canon_input), parse_flavor(canon_flavor)).bytes << "\n";
        return 0;
    }
    if (dump->parsed()) {
        std::optional<int> k;
        if (dump_k >= 0) k = dump_k;
        std::cout << to_text(catalog::build_graph(dump_name, k));
        return 0;
    }
    if (verify->parsed()) {
        int failures = 0;
        auto report = [&](const std::string& what, bool ok) {
            std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
            if (!ok) ++failures;
        };
        for (const auto& name : catalog::sporadic_names()) {
            auto A = catalog::build_graph(name);
            report(name + " cyclotomic", is_cyclotomic_matrix(A));
            for (Ring r : catalog::maximal_rings(name))
                report(name + " maximal over " + ring_name(r), catalog::verify_maximal(as_ring(A, r), verify_cap));
            if (!verify_golden.empty()) {
                std::ifstream f(verify_golden + "/" + name + ".mat");
                std::stringstream ss;
                ss << f.rdbuf();
                report(name + " golden file", f.good() && ss.str() == to_text(A));
            }
        }
        for (const auto& fam : catalog::families()) {
            for (int k = fam.k_min; k <= verify_kmax; ++k) {
                auto A = catalog::build_graph(fam.name, k);
                if (A.size() > kMaxVertices) break;
                report(fam.name + "(k=" + std::to_string(k) + ") cyclotomic", is_cyclotomic_matrix(A));
                if (A.size() < kMaxVertices)
                    for (Ring r : catalog::maximal_rings(fam.name))
                        report(fam.name + "(k=" + std::to_string(k) + ") maximal over " + ring_name(r),
                               catalog::verify_maximal(as_ring(A, r), verify_cap));
            }
        }
        std::cout << (failures ? "catalog verification FAILED\n" : "catalog verification passed\n");
        return failures ? kExitVerification : 0;
    }
    if (seeds->parsed()) {
        for (const auto& s : catalog::list_seeds(seeds_name)) std::cout << to_text(s) << "\n";
        return 0;
    }
    if (search->parsed()) {
        if (search_name.empty() == search_config.empty())
            throw UsageError("search: give a registered name or --config, not both");
        SearchState state;
        int stop;
        std::string label;
        if (!search_name.empty()) {
            auto reg = make_registered_search(search_name);
            if (!search_flavor.empty()) reg.config.dedup_flavor = parse_flavor(search_flavor);
            state = make_state(reg);
            stop = search_stop > 0 ? search_stop : reg.default_stop;
            label = search_name;
        } else {
            auto cfg = GrowConfig::from_text(slurp(search_config));
            if (!search_flavor.empty()) cfg.dedup_flavor = parse_flavor(search_flavor);
            if (search_seeds.empty()) throw UsageError("search --config: give at least one --seed file");
            std::vector<HermitianMatrix> seed_mats;
            for (const auto& p : search_seeds) seed_mats.push_back(load_matrix(p));
            state = make_state(cfg, seed_mats);
            stop = search_stop > 0 ? search_stop : cfg.max_vertices;
            label = "configured";
        }
        run_and_report(state, label, stop, threads, search_out, search_ckpt, ckpt_every, search_csv, timings);
        return 0;
    }
    if (resume->parsed()) {
        SearchState state = read_checkpoint(resume_path);
        const int stop = resume_stop > 0 ? resume_stop : state.config.max_vertices;
        run_and_report(state, "resumed", stop, threads, resume_out, resume_path, 0, resume_csv, timings);
        return 0;
    }
    if (tables->parsed()) {
        struct Spec {
            int which;
            const char* name;
            int stop;
        };
        const std::vector<Spec> specs = {{1, "weight2-zi", 4},
                                         {2, "uncharged-trianglefree-zi", 5},
                                         {2, "uncharged-trianglefree-zw", 5},
                                         {3, "charged-trianglefree-zi", 5},
                                         {3, "charged-trianglefree-zw", 5}};
        for (const auto& s : specs) {
            if (tables_which && s.which != tables_which) continue;
            auto reg = make_registered_search(s.name);
            SearchState state = make_state(reg);
            run_and_report(state, s.name, tables_stop > 0 ? tables_stop : s.stop, threads, "", "", 0, "",
                           timings);
        }
        return 0;
    }
    if (app.get_subcommand("searches")->parsed()) {
        for (const auto& n : registered_search_names()) std::cout << n << "\n";
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const LoadError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
