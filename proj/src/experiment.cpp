#include "pervade/experiment.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "pervade/burling.hpp"
#include "pervade/coloring.hpp"
#include "pervade/extraction.hpp"
#include "pervade/generators.hpp"
#include "pervade/rng.hpp"
#include "pervade/strings.hpp"

namespace pervade {

using nlohmann::json;

Graph corpus_graph(const std::string& kind, int param, double p, std::uint64_t seed) {
    if (kind == "mycielski") return mycielski_iterate(param);
    if (kind == "cycle") return cycle_graph(param);
    if (kind == "complete") return complete_graph(param);
    if (kind == "complete_bipartite") return complete_bipartite(param, param);
    if (kind == "gnp") return random_gnp(param, p, seed);
    if (kind == "connected") return random_connected(param, p, seed);
    if (kind == "burling") return burling(param).g;
    if (kind == "petersen") return petersen_graph();
    throw std::invalid_argument("unknown generator '" + kind + "'");
}

namespace {

struct Row {
    std::string instance;
    std::uint64_t seed = 0;
    int n = 0;
    long long m = 0;
    std::string omega, chi_lo, chi_hi, chi_exact, chi3_lo, chi3_hi;
    std::string verdict;
    long long wall_ms = 0;
};

std::string csv_header() {
    return "instance,seed,n,m,omega,chi_lo,chi_hi,chi_exact,chi3_lo,chi3_hi,verdict,wall_ms";
}

void write_row(std::ostringstream& out, const Row& r) {
    out << r.instance << ',' << r.seed << ',' << r.n << ',' << r.m << ',' << r.omega << ','
        << r.chi_lo << ',' << r.chi_hi << ',' << r.chi_exact << ',' << r.chi3_lo << ','
        << r.chi3_hi << ',' << r.verdict << ',' << r.wall_ms << '\n';
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void fill_chi(Row& row, const ChiResult& chi) {
    row.chi_lo = std::to_string(chi.lower);
    row.chi_hi = std::to_string(chi.upper);
    row.chi_exact = chi.exact ? "1" : "0";
}

void measure_graph(Row& row, const Graph& g, double budget_sec, int rho) {
    row.n = g.size();
    row.m = static_cast<long long>(g.edge_count());
    row.omega = std::to_string(clique_number(g));
    fill_chi(row, chromatic_number(g, Budget::seconds(budget_sec)));
    if (rho > 0) {
        ChiResult b = ball_chromatic(g, rho, Budget::seconds(budget_sec));
        row.chi3_lo = std::to_string(b.lower);
        row.chi3_hi = std::to_string(b.upper);
    }
}

} // namespace

std::string run_experiment(const std::string& plan_text) {
    json plan;
    try {
        plan = json::parse(plan_text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("bad plan: ") + e.what());
    }
    std::uint64_t seed = plan.value("seed", 0ULL);
    double budget_sec = plan.value("budget_sec", 30.0);

    std::ostringstream out;
    out << csv_header() << '\n';
    if (!plan.contains("tasks")) return out.str();

    Rng plan_rng(seed);
    int task_no = 0;
    for (const auto& task : plan["tasks"]) {
        ++task_no;
        std::string name = task.value("name", "task" + std::to_string(task_no));
        std::string kind = task.value("kind", "measure");
        Rng task_rng = plan_rng.fork(static_cast<std::uint64_t>(task_no));

        if (kind == "burling_audit") {
            int k_min = task.value("k_min", 1), k_max = task.value("k_max", 3);
            for (int k = k_min; k <= k_max; ++k) {
                Row row;
                row.instance = name + "/SP" + std::to_string(k);
                row.seed = seed;
                Stopwatch sw;
                try {
                    BurlingAudit audit = audit_burling(burling(k), Budget::seconds(budget_sec));
                    row.n = audit.n;
                    row.m = static_cast<long long>(audit.m);
                    row.omega = std::to_string(audit.omega);
                    fill_chi(row, audit.chi);
                    row.verdict = audit.triangle_free ? "triangle_free" : "has_triangle";
                } catch (const std::exception& e) {
                    row.verdict = std::string("error:") + e.what();
                }
                row.wall_ms = sw.ms();
                write_row(out, row);
            }
        } else if (kind == "strings_audit") {
            int count = task.value("count", 10);
            int curves = task.value("curves", 15);
            int segments = task.value("segments", 4);
            long long range = task.value("range", 50LL);
            for (int i = 0; i < count; ++i) {
                Row row;
                row.instance = name + "/" + std::to_string(i);
                row.seed = task_rng.next_u64();
                Stopwatch sw;
                try {
                    StringArrangement arr =
                        build_string_graph(random_polylines(curves, segments, range, row.seed));
                    ChiAudit audit = audit_40chi3(arr, Budget::seconds(budget_sec));
                    row.n = arr.graph.size();
                    row.m = static_cast<long long>(arr.graph.edge_count());
                    row.omega = std::to_string(clique_number(arr.graph));
                    fill_chi(row, audit.chi);
                    row.chi3_lo = std::to_string(audit.chi3.lower);
                    row.chi3_hi = std::to_string(audit.chi3.upper);
                    row.verdict = !audit.both_exact ? "inexact"
                                  : audit.bound_holds ? "bound_holds"
                                                      : "violated";
                } catch (const std::exception& e) {
                    row.verdict = std::string("error:") + e.what();
                }
                row.wall_ms = sw.ms();
                write_row(out, row);
            }
        } else if (kind == "theta_runs") {
            int count = task.value("count", 5);
            std::string gen = task.value("generator", "mycielski");
            int param = task.value("param", 5);
            double p = task.value("p", 0.2);
            int n = task.value("n", 2);
            int ell = task.value("ell", 1);
            int t = task.value("t", default_chain_steps(n));
            for (int i = 0; i < count; ++i) {
                Row row;
                row.instance = name + "/" + std::to_string(i);
                row.seed = task_rng.next_u64();
                Stopwatch sw;
                try {
                    Graph g = corpus_graph(gen, param, p, row.seed);
                    row.n = g.size();
                    row.m = static_cast<long long>(g.edge_count());
                    ThetaResult r = find_theta(g, n, ell, t, ChiEstimator::automatic,
                                               Budget::seconds(budget_sec), row.seed);
                    if (r.found) {
                        CheckResult v = verify_theta(r.cert, g, n, ell);
                        row.verdict = v.ok ? "certificate" : "invalid_certificate";
                    } else {
                        row.verdict = r.timed_out ? "timeout" : "no_certificate";
                    }
                } catch (const std::exception& e) {
                    row.verdict = std::string("error:") + e.what();
                }
                row.wall_ms = sw.ms();
                write_row(out, row);
            }
        } else if (kind == "measure") {
            int count = task.value("count", 1);
            std::string gen = task.value("generator", "mycielski");
            int param = task.value("param", 4);
            double p = task.value("p", 0.2);
            int rho = task.value("rho", 0);
            for (int i = 0; i < count; ++i) {
                Row row;
                row.instance = name + "/" + std::to_string(i);
                row.seed = task_rng.next_u64();
                Stopwatch sw;
                try {
                    Graph g = corpus_graph(gen, param, p, row.seed);
                    measure_graph(row, g, budget_sec, rho);
                    row.verdict = "ok";
                } catch (const std::exception& e) {
                    row.verdict = std::string("error:") + e.what();
                }
                row.wall_ms = sw.ms();
                write_row(out, row);
            }
        } else {
            Row row;
            row.instance = name;
            row.seed = seed;
            row.verdict = "error:unknown task kind '" + kind + "'";
            write_row(out, row);
        }
    }
    return out.str();
}

std::string strip_timing(const std::string& csv) {
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        auto comma = line.find_last_of(',');
        out << line.substr(0, comma + 1) << '\n';
    }
    return out.str();
}

} // namespace pervade
