// lohg: LO-colouring toolkit. Subcommands: solve, exact, verify, gen, bench,
// gf2, is, minion {enum, free, homcheck, cocolour, witness, restriction,
// selector}. Data goes to stdout (or --out), diagnostics to stderr.
// Exit codes: 0 success, 1 negative decision, 2 usage/IO error, 3 budget.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "lohg/exact.hpp"
#include "lohg/gen.hpp"
#include "lohg/gf2.hpp"
#include "lohg/hypergraph.hpp"
#include "lohg/indep_set.hpp"
#include "lohg/io.hpp"
#include "lohg/minion.hpp"
#include "lohg/rng.hpp"
#include "lohg/solver.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::uint64_t env_budget(std::uint64_t fallback) {
    const char* s = std::getenv("LOHG_BUDGET");
    if (!s) return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0' || v == 0) return fallback;
    return v;
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << '\n';
    } else {
        lohg::write_file_atomic(out_path, payload);
    }
}

double wall_ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

struct BenchRecord {
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t seed = 0;
    int colours_used = 0;
    int steps_type1 = 0;
    int steps_type2 = 0;
    double runtime_ms = 0.0;
    bool valid = false;
};

json record_json(const BenchRecord& r) {
    return json{{"n", r.n},
                {"m", r.m},
                {"seed", r.seed},
                {"colours_used", r.colours_used},
                {"steps_type1", r.steps_type1},
                {"steps_type2", r.steps_type2},
                {"runtime_ms", r.runtime_ms},
                {"valid", r.valid}};
}

std::string record_csv(const BenchRecord& r) {
    return std::to_string(r.n) + "," + std::to_string(r.m) + "," + std::to_string(r.seed) + "," +
           std::to_string(r.colours_used) + "," + std::to_string(r.steps_type1) + "," +
           std::to_string(r.steps_type2) + "," + std::to_string(r.runtime_ms) + "," +
           (r.valid ? "true" : "false");
}

double cbrt_bound(double n) {
    const double ln_n = std::log(n);
    const double lnln = std::max(ln_n > 0 ? std::log(ln_n) : 0.0, 1.0);
    return std::cbrt(n * lnln / ln_n);
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> sizes;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const std::size_t lo = std::stoull(text.substr(0, dots));
        const std::size_t hi = std::stoull(text.substr(dots + 2));
        if (lo == 0 || hi < lo) throw CLI::ValidationError("--sizes", "bad range");
        for (std::size_t s = lo; s <= hi; s *= 2) sizes.push_back(s);
        return sizes;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        sizes.push_back(std::stoull(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (sizes.empty()) throw CLI::ValidationError("--sizes", "no sizes given");
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1]) throw CLI::ValidationError("--sizes", "sizes must ascend");
    return sizes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"linearly ordered hypergraph colouring toolkit"};
    app.require_subcommand(1);
    std::uint64_t default_budget = env_budget(50'000'000ULL);

    auto* solve = app.add_subcommand("solve", "approximate LO colouring of an instance");
    std::string solve_in, solve_out;
    solve->add_option("instance", solve_in, "instance file")->required();
    solve->add_option("--out", solve_out, "colouring output path (default: <instance>.sol)");

    auto* exact = app.add_subcommand("exact", "exact LO k-colouring by backtracking");
    std::string exact_in, exact_out;
    int exact_k = 2;
    std::uint64_t exact_budget = 0;
    exact->add_option("instance", exact_in)->required();
    exact->add_option("--k", exact_k, "number of colours")->required();
    exact->add_option("--budget", exact_budget, "node budget (default LOHG_BUDGET or 5e7)");
    exact->add_option("--out", exact_out, "write the found colouring here");

    auto* verify = app.add_subcommand("verify", "check a colouring against an instance");
    std::string verify_in, verify_col;
    verify->add_option("instance", verify_in)->required();
    verify->add_option("colouring", verify_col)->required();

    auto* gen = app.add_subcommand("gen", "generate a planted LO-2-colourable instance");
    lohg::GenSpec gen_spec;
    std::string gen_out, gen_witness, gen_profile = "custom";
    long long gen_m = -1;
    gen->add_option("--n", gen_spec.n, "vertex count")->required();
    gen->add_option("--m", gen_m, "edge count (overrides --profile)");
    gen->add_option("--profile", gen_profile, "sparse | dense | custom")
        ->check(CLI::IsMember({"sparse", "dense", "custom"}));
    gen->add_option("--frac2", gen_spec.frac2, "planted colour-2 fraction (default 0.5)");
    gen->add_flag("--linear", gen_spec.linear, "enforce linearity");
    gen->add_flag("--allow-degenerate", gen_spec.allow_degenerate, "allow (a,a,t) edges");
    gen->add_option("--seed", gen_spec.seed, "64-bit seed");
    gen->add_option("--out", gen_out, "instance output path")->required();
    gen->add_option("--witness", gen_witness, "also write the planted colouring");

    auto* bench = app.add_subcommand("bench", "generate+solve+verify over a size sweep");
    std::string bench_sizes = "1024..131072", bench_out, bench_plot, bench_format = "json";
    int bench_seeds = 5, bench_jobs = 1;
    std::uint64_t bench_seed = 0;
    bench->add_option("--sizes", bench_sizes, "lo..hi (doubling) or comma list");
    bench->add_option("--seeds", bench_seeds, "instances per size");
    bench->add_option("--seed", bench_seed, "master seed");
    bench->add_option("--jobs", bench_jobs, "parallel workers");
    bench->add_option("--out", bench_out, "records file (default stdout)");
    bench->add_option("--format", bench_format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    bench->add_option("--plot", bench_plot, "write 'n mean_colours' gnuplot data here");

    auto* gf2 = app.add_subcommand("gf2", "parity system diagnostics for an instance");
    std::string gf2_in;
    gf2->add_option("instance", gf2_in)->required();

    auto* is_cmd = app.add_subcommand("is", "independent set sizes on the primal graph");
    std::string is_in;
    is_cmd->add_option("instance", is_in)->required();

    auto* minion = app.add_subcommand("minion", "polymorphism-minion laboratory");
    minion->require_subcommand(1);
    std::string minion_out;
    std::uint64_t minion_nodes = 0, minion_items = 0;
    minion->add_option("--out", minion_out, "certificate output path (default stdout)");
    minion->add_option("--budget", minion_nodes, "search/enumeration node budget");
    minion->add_option("--items", minion_items, "enumeration item budget");

    auto* m_enum = minion->add_subcommand("enum", "enumerate set polymorphisms");
    int me_r = 3, me_k = 3, me_n = 2;
    bool me_tables = false;
    m_enum->add_option("--r", me_r)->required();
    m_enum->add_option("--k", me_k)->required();
    m_enum->add_option("--n", me_n)->required();
    m_enum->add_flag("--emit-tables", me_tables, "include the tables in the certificate");

    auto* m_free = minion->add_subcommand("free", "free structure over the binary part");
    int mf_rsrc = 5, mf_k = 3, mf_rrel = 3;
    m_free->add_option("--rsrc", mf_rsrc)->required();
    m_free->add_option("--k", mf_k)->required();
    m_free->add_option("--rrel", mf_rrel)->required();

    auto* m_hom = minion->add_subcommand("homcheck", "minion homomorphism existence");
    int mh_rsrc = 5, mh_rdst = 3, mh_k = 3;
    m_hom->add_option("--rsrc", mh_rsrc)->required();
    m_hom->add_option("--rdst", mh_rdst)->required();
    m_hom->add_option("--k", mh_k)->required();

    auto* m_coc = minion->add_subcommand("cocolour", "edge co-colouring search on a clique");
    int mc_m = 5, mc_k = 3, mc_p = 2;
    m_coc->add_option("--m", mc_m)->required();
    m_coc->add_option("--k", mc_k)->required();
    m_coc->add_option("--p", mc_p)->required();

    auto* m_wit = minion->add_subcommand("witness", "verify an impossibility witness table");
    int mw_k = 3, mw_variant = 1;
    m_wit->add_option("--k", mw_k)->required();
    m_wit->add_option("--variant", mw_variant)->required();

    auto* m_res = minion->add_subcommand("restriction", "restriction minion homomorphism");
    int mr_l = 2, mr_k = 3, mr_r = 3, mr_arity = 2;
    m_res->add_option("--l", mr_l)->required();
    m_res->add_option("--k", mr_k)->required();
    m_res->add_option("--r", mr_r)->required();
    m_res->add_option("--max-arity", mr_arity)->required();

    auto* m_sel = minion->add_subcommand("selector", "selector / argmax-partition property");
    int ms_r = 5, ms_k = 3, ms_n = 3;
    m_sel->add_option("--r", ms_r)->required();
    m_sel->add_option("--k", ms_k)->required();
    m_sel->add_option("--max-n", ms_n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve) {
            lohg::Hypergraph h = lohg::load_hypergraph(solve_in);
            const auto t0 = std::chrono::steady_clock::now();
            lohg::SolveResult res;
            try {
                res = lohg::lo_colour(h);
            } catch (const lohg::PromiseViolation& e) {
                std::cerr << "promise violation: " << e.what() << "\n";
                std::cout << json{{"n", h.n},
                                  {"m", h.edge_count()},
                                  {"valid", false},
                                  {"error", "promise-violation"}}
                                 .dump()
                          << "\n";
                return kExitNegative;
            }
            const double ms = wall_ms_since(t0);
            const std::string out = solve_out.empty() ? solve_in + ".sol" : solve_out;
            lohg::write_file_atomic(out, lohg::serialize(res.colouring));
            json rec{{"n", h.n},
                     {"m", h.edge_count()},
                     {"colours_used", res.colours_used},
                     {"steps_type1", res.steps_type1},
                     {"steps_type2", res.steps_type2},
                     {"branch_counts",
                      {{"sparse", res.branch_sparse},
                       {"dense", res.branch_dense},
                       {"fallback", res.branch_fallback},
                       {"degenerate", res.branch_degenerate}}},
                     {"runtime_ms", ms},
                     {"valid", true},
                     {"colouring_file", out}};
            std::cout << rec.dump() << "\n";
            return kExitOk;
        }

        if (*exact) {
            lohg::Hypergraph h = lohg::load_hypergraph(exact_in);
            const std::uint64_t budget = exact_budget ? exact_budget : default_budget;
            lohg::ExactResult res = lohg::exact_lo_colour(h, exact_k, budget);
            const char* tag = res.status == lohg::ExactStatus::Found           ? "found"
                              : res.status == lohg::ExactStatus::Unsatisfiable ? "unsatisfiable"
                                                                               : "budget-exceeded";
            json out{{"result", tag},
                     {"k", exact_k},
                     {"stats",
                      {{"nodes", res.stats.nodes},
                       {"backtracks", res.stats.backtracks},
                       {"wall_ms", res.stats.wall_ms}}}};
            if (res.status == lohg::ExactStatus::Found && !exact_out.empty()) {
                lohg::write_file_atomic(exact_out, lohg::serialize(*res.colouring));
                out["colouring_file"] = exact_out;
            }
            std::cout << out.dump() << "\n";
            if (res.status == lohg::ExactStatus::Found) return kExitOk;
            if (res.status == lohg::ExactStatus::Unsatisfiable) return kExitNegative;
            return kExitBudget;
        }

        if (*verify) {
            lohg::Hypergraph h = lohg::load_hypergraph(verify_in);
            lohg::Colouring c = lohg::load_colouring(verify_col);
            bool ok = false;
            try {
                ok = lohg::verify_lo_colouring(h, c);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitUsage;
            }
            std::cout << json{{"valid", ok}}.dump() << "\n";
            return ok ? kExitOk : kExitNegative;
        }

        if (*gen) {
            if (gen_m >= 0) {
                gen_spec.m = static_cast<std::size_t>(gen_m);
            } else if (gen_profile == "sparse") {
                gen_spec.m = static_cast<std::size_t>(
                    std::floor(gen_spec.n * lohg::delta_threshold(gen_spec.n) / 4.0));
            } else if (gen_profile == "dense") {
                gen_spec.m = static_cast<std::size_t>(
                    std::ceil(4.0 * gen_spec.n * lohg::delta_threshold(gen_spec.n)));
                gen_spec.linear = true;
            } else {
                std::cerr << "gen: need --m or --profile sparse|dense\n";
                return kExitUsage;
            }
            lohg::PlantedInstance inst = lohg::gen_planted(gen_spec);
            lohg::write_file_atomic(gen_out, lohg::serialize(inst.h));
            if (!gen_witness.empty())
                lohg::write_file_atomic(gen_witness, lohg::serialize(inst.witness));
            std::cout << json{{"n", inst.h.n},
                              {"m", inst.h.edge_count()},
                              {"seed", gen_spec.seed},
                              {"linear", gen_spec.linear},
                              {"instance_file", gen_out}}
                             .dump()
                      << "\n";
            return kExitOk;
        }

        if (*bench) {
            const auto sizes = parse_sizes(bench_sizes);
            struct Task {
                std::size_t n;
                int idx;
            };
            std::vector<Task> tasks;
            for (std::size_t n : sizes)
                for (int i = 0; i < bench_seeds; ++i) tasks.push_back({n, i});
            std::vector<BenchRecord> records(tasks.size());
            std::vector<std::string> failures(tasks.size());

            std::atomic<std::size_t> next{0};
            auto worker = [&]() {
                while (true) {
                    const std::size_t t = next.fetch_add(1);
                    if (t >= tasks.size()) return;
                    const auto [n, idx] = tasks[t];
                    const std::uint64_t seed = lohg::child_seed(bench_seed, n, idx);
                    // linear instances with a small planted class, so the
                    // planted transversal is high-degree and the solver has
                    // to make many rounds of progress
                    lohg::GenSpec spec;
                    spec.n = static_cast<int>(n);
                    spec.m = static_cast<std::size_t>(
                        std::floor(n * lohg::delta_threshold(n) / 4.0));
                    spec.linear = true;
                    spec.frac2 = std::min(
                        0.45, std::max(8.0 * static_cast<double>(spec.m) /
                                           (static_cast<double>(n) * static_cast<double>(n)),
                                       4.0 / static_cast<double>(n)));
                    spec.seed = seed;
                    lohg::PlantedInstance inst = lohg::gen_planted(spec);
                    BenchRecord rec;
                    rec.n = n;
                    rec.m = inst.h.edge_count();
                    rec.seed = seed;
                    const auto t0 = std::chrono::steady_clock::now();
                    try {
                        lohg::SolveResult res = lohg::lo_colour(inst.h);
                        rec.runtime_ms = wall_ms_since(t0);
                        rec.colours_used = res.colours_used;
                        rec.steps_type1 = res.steps_type1;
                        rec.steps_type2 = res.steps_type2;
                        rec.valid = lohg::verify_lo_colouring(inst.h, res.colouring);
                    } catch (const lohg::PromiseViolation&) {
                        rec.valid = false;
                    }
                    if (!rec.valid)
                        failures[t] = "reproduce with: lohg gen --n " + std::to_string(n) +
                                      " --m " + std::to_string(rec.m) + " --seed " +
                                      std::to_string(seed) +
                                      " --out bad.lohg && lohg solve bad.lohg";
                    records[t] = rec;
                }
            };
            std::vector<std::thread> pool;
            const int jobs = std::max(1, bench_jobs);
            for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
            for (auto& th : pool) th.join();

            for (const auto& f : failures)
                if (!f.empty()) {
                    std::cerr << "invalid colouring produced; " << f << "\n";
                    return kExitNegative;
                }

            std::string stream;
            if (bench_format == "csv")
                stream += "n,m,seed,colours_used,steps_type1,steps_type2,runtime_ms,valid\n";
            for (const auto& rec : records)
                stream += (bench_format == "csv") ? record_csv(rec) + "\n"
                                                  : record_json(rec).dump() + "\n";
            if (bench_out.empty()) {
                std::cout << stream;
            } else {
                lohg::write_file_atomic(bench_out, stream);
            }

            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            for (const auto& rec : records) {
                const double x = std::log(static_cast<double>(rec.n));
                const double y = std::log(static_cast<double>(rec.colours_used));
                sx += x;
                sy += y;
                sxx += x * x;
                sxy += x * y;
            }
            const double np = static_cast<double>(records.size());
            const double slope = (np * sxy - sx * sy) / (np * sxx - sx * sx);
            json per_size = json::array();
            std::string plot_data = "# n mean_colours\n";
            for (std::size_t n : sizes) {
                double sum = 0;
                int cnt = 0;
                for (const auto& rec : records)
                    if (rec.n == n) {
                        sum += rec.colours_used;
                        ++cnt;
                    }
                const double mean = sum / cnt;
                per_size.push_back(json{{"n", n},
                                        {"mean_colours", mean},
                                        {"ratio_cbrt", mean / cbrt_bound(static_cast<double>(n))}});
                plot_data += std::to_string(n) + " " + std::to_string(mean) + "\n";
            }
            if (!bench_plot.empty()) lohg::write_file_atomic(bench_plot, plot_data);
            std::cout << json{{"slope_logK_logn", slope},
                              {"points", records.size()},
                              {"per_size", per_size}}
                             .dump()
                      << "\n";
            return kExitOk;
        }

        if (*gf2) {
            lohg::Hypergraph h = lohg::load_hypergraph(gf2_in);
            lohg::Gf2System sys = lohg::build_system(h);
            lohg::KernelBasis kb = lohg::kernel(sys);
            lohg::BitVec x = lohg::max_ones_approx(sys);
            std::vector<int> support;
            for (int v = 0; v < sys.n_vars; ++v)
                if (x.get(v)) support.push_back(v + 1);
            std::cout << json{{"n_vars", sys.n_vars},
                              {"rows", sys.rows.size()},
                              {"rank", kb.rank()},
                              {"kernel_dim", kb.dim()},
                              {"max_ones_weight", x.popcount()},
                              {"assignment_support", support}}
                             .dump()
                      << "\n";
            return kExitOk;
        }

        if (*is_cmd) {
            lohg::Hypergraph h = lohg::load_hypergraph(is_in);
            lohg::Graph g = lohg::primal_graph(h);
            auto greedy = lohg::greedy_is(g);
            auto ramsey = lohg::clique_removal_is(g);
            auto best = lohg::best_is(g);
            std::cout << json{{"n", g.n},
                              {"edges", g.edge_count()},
                              {"greedy", greedy.size()},
                              {"clique_removal", ramsey.size()},
                              {"best", best.size()}}
                             .dump()
                      << "\n";
            return kExitOk;
        }

        if (*minion) {
            lohg::minion::Budget budget;
            if (minion_nodes) budget.max_nodes = minion_nodes;
            if (minion_items) budget.max_items = minion_items;

            json cert;
            int rc = kExitOk;
            if (*m_enum) {
                auto res = lohg::minion::enumerate_set_polymorphisms(me_r, me_k, me_n, budget);
                cert = json{{"op", "enum"},
                            {"r", me_r},
                            {"k", me_k},
                            {"n", me_n},
                            {"status",
                             res.status == lohg::minion::Status::Done ? "done" : "budget"},
                            {"count", res.items.size()},
                            {"nodes", res.nodes}};
                if (me_tables && res.status == lohg::minion::Status::Done) {
                    json tables = json::array();
                    for (const auto& f : res.items) tables.push_back(f.table);
                    cert["tables"] = tables;
                }
                if (res.status == lohg::minion::Status::Budget) rc = kExitBudget;
            } else if (*m_free) {
                auto res = lohg::minion::free_structure_lo2(mf_rsrc, mf_k, mf_rrel, budget);
                cert = json{{"op", "free"},
                            {"r_src", mf_rsrc},
                            {"k", mf_k},
                            {"r_rel", mf_rrel},
                            {"status",
                             res.status == lohg::minion::Status::Done ? "done" : "budget"},
                            {"domain_size", res.fs.domain.size()},
                            {"relation_size", res.fs.relation.size()},
                            {"enumerated", res.enumerated}};
                if (res.status == lohg::minion::Status::Budget) rc = kExitBudget;
            } else if (*m_hom) {
                auto res = lohg::minion::check_minion_hom_lo(mh_rsrc, mh_rdst, mh_k, budget);
                const char* tag =
                    res.status == lohg::minion::MinionHomStatus::Exists      ? "exists"
                    : res.status == lohg::minion::MinionHomStatus::NotExists ? "not-exists"
                                                                             : "budget-exceeded";
                cert = json{{"op", "homcheck"},
                            {"r_src", mh_rsrc},
                            {"r_dst", mh_rdst},
                            {"k", mh_k},
                            {"status", tag},
                            {"domain_size", res.domain_size},
                            {"constraints", res.constraints},
                            {"nodes", res.nodes},
                            {"cross_checked", res.cross_checked}};
                if (res.status == lohg::minion::MinionHomStatus::Exists) cert["omega"] = res.omega;
                if (res.status == lohg::minion::MinionHomStatus::NotExists) rc = kExitNegative;
                if (res.status == lohg::minion::MinionHomStatus::Budget) rc = kExitBudget;
            } else if (*m_coc) {
                auto res = lohg::minion::co_colouring_search(mc_m, mc_k, mc_p, budget);
                const char* tag =
                    res.status == lohg::minion::CoColStatus::Found  ? "found"
                    : res.status == lohg::minion::CoColStatus::None ? "none"
                                                                    : "budget-exceeded";
                cert = json{{"op", "cocolour"}, {"m", mc_m}, {"k", mc_k}, {"p", mc_p},
                            {"status", tag},   {"nodes", res.nodes}};
                if (res.table) cert["edge_colours"] = res.table->edge_colour;
                if (res.status == lohg::minion::CoColStatus::None) rc = kExitNegative;
                if (res.status == lohg::minion::CoColStatus::Budget) rc = kExitBudget;
            } else if (*m_wit) {
                const bool ok = lohg::minion::verify_impossible_witness(mw_k, mw_variant);
                auto table = lohg::minion::impossible_witness_table(mw_k, mw_variant);
                cert = json{{"op", "witness"},
                            {"k", mw_k},
                            {"variant", mw_variant},
                            {"holds", ok},
                            {"table", table.table}};
                if (!ok) rc = kExitNegative;
            } else if (*m_res) {
                auto rep = lohg::minion::verify_restriction_hom(mr_l, mr_k, mr_r, mr_arity);
                cert = json{{"op", "restriction"},
                            {"l", mr_l},
                            {"k", mr_k},
                            {"r", mr_r},
                            {"max_arity", mr_arity},
                            {"status",
                             rep.status == lohg::minion::Status::Done ? "done" : "budget"},
                            {"holds", rep.holds},
                            {"checked_functions", rep.checked_functions},
                            {"checked_minors", rep.checked_minors}};
                if (rep.status == lohg::minion::Status::Budget)
                    rc = kExitBudget;
                else if (!rep.holds)
                    rc = kExitNegative;
            } else if (*m_sel) {
                auto rep = lohg::minion::selector_check(ms_r, ms_k, ms_n, budget);
                cert = json{{"op", "selector"},
                            {"r", ms_r},
                            {"k", ms_k},
                            {"max_n", ms_n},
                            {"status",
                             rep.status == lohg::minion::Status::Done ? "done" : "budget"},
                            {"holds", rep.holds},
                            {"checked_functions", rep.checked_functions}};
                if (rep.status == lohg::minion::Status::Budget)
                    rc = kExitBudget;
                else if (!rep.holds)
                    rc = kExitNegative;
            }
            emit(cert.dump(2) + "\n", minion_out);
            return rc;
        }
    } catch (const lohg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lohg::InfeasibleSpec& e) {
        std::cerr << "infeasible spec: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
