#include <CLI11.hpp>

#include <iostream>

#include "pervade/burling.hpp"
#include "pervade/coloring.hpp"
#include "pervade/containment.hpp"
#include "pervade/experiment.hpp"
#include "pervade/extraction.hpp"
#include "pervade/graph_io.hpp"
#include "pervade/strings.hpp"

namespace {

using namespace pervade;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text << "\n";
    else
        write_file(out_path, text);
}

GraphFormat parse_format(const std::string& f) {
    if (f == "dimacs") return GraphFormat::dimacs;
    if (f == "json") return GraphFormat::json;
    throw CLI::ValidationError("--format must be dimacs or json");
}

Graph load_graph(const std::string& path) {
    ParsedGraph pg = load_graph_file(path);
    for (const auto& w : pg.warnings) std::cerr << "warning: " << w << "\n";
    return pg.graph;
}

std::string chi_text(const ChiResult& chi) {
    if (chi.exact) return std::to_string(chi.value());
    return "[" + std::to_string(chi.lower) + "," + std::to_string(chi.upper) + "] (inexact)";
}

std::string check_text(const CheckResult& r) {
    if (r.ok) return "Accept";
    std::string s = "Reject(" + r.clause;
    if (r.u >= 0) s += "; vertex " + std::to_string(r.u);
    if (r.v >= 0) s += "," + std::to_string(r.v);
    return s + ")";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pervade: generators, witnesses and audits for high-chromatic "
                 "triangle-free structure and string graphs"};
    app.require_subcommand(1);

    std::string out_path, format_name = "json", graph_path;
    double budget_sec = 30.0;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--out", out_path, "write the result to a file instead of stdout");
        cmd->add_option("--budget", budget_sec, "time budget in seconds");
        cmd->add_option("--seed", seed, "64-bit seed");
        if (with_format)
            cmd->add_option("--format", format_name, "graph format: dimacs or json");
    };

    // gen
    std::string gen_kind = "mycielski";
    int gen_param = 4;
    double gen_p = 0.2;
    auto* gen = app.add_subcommand("gen", "generate a corpus graph");
    gen->add_option("--kind", gen_kind,
                    "mycielski|cycle|complete|complete_bipartite|gnp|connected|burling|petersen");
    gen->add_option("--param", gen_param, "size / level parameter");
    gen->add_option("--p", gen_p, "edge probability for gnp/connected");
    add_common(gen);

    // chi / omega / chirho
    int rho = 1;
    auto* chi = app.add_subcommand("chi", "exact chromatic number (bracket on timeout)");
    chi->add_option("graph", graph_path, "graph file")->required();
    add_common(chi, false);
    auto* omega = app.add_subcommand("omega", "exact clique number");
    omega->add_option("graph", graph_path, "graph file")->required();
    add_common(omega, false);
    auto* chirho = app.add_subcommand("chirho", "max chromatic number over radius-rho balls");
    chirho->add_option("graph", graph_path, "graph file")->required();
    chirho->add_option("--rho", rho, "ball radius")->required();
    add_common(chirho, false);

    // burling
    int burling_k = 2;
    auto* burl = app.add_subcommand("burling", "emit a Burling level and its distinguished set");
    burl->add_option("--k", burling_k, "level index (1..5)")->required();
    add_common(burl);

    // find-induced
    std::string pattern_path, host_path;
    auto* fi = app.add_subcommand("find-induced", "induced-subgraph search");
    fi->add_option("--pattern", pattern_path)->required();
    fi->add_option("--host", host_path)->required();
    add_common(fi, false);

    // find-subdivision
    std::string constraint_name = "exact";
    int ell = 1, cap = 32;
    auto* fs = app.add_subcommand("find-subdivision", "induced-subdivision search");
    fs->add_option("--base", pattern_path)->required();
    fs->add_option("--host", host_path)->required();
    fs->add_option("--constraint", constraint_name, "exact|at-least|proper-at-most");
    fs->add_option("--ell", ell, "ell (or lambda for proper-at-most)");
    fs->add_option("--cap", cap, "vertex-count cap");
    add_common(fs, false);

    // restricted-check
    int lambda = 2, mu = 2, nu = 2;
    auto* rc = app.add_subcommand("restricted-check", "(lambda,mu,nu)-restriction test");
    rc->add_option("graph", graph_path)->required();
    rc->add_option("--lambda", lambda)->required();
    rc->add_option("--mu", mu)->required();
    rc->add_option("--nu", nu)->required();
    rc->add_option("--cap", cap, "vertex-count cap");
    add_common(rc, false);

    // verify-witness
    std::string witness_path;
    auto* vw = app.add_subcommand("verify-witness", "check a witness JSON file");
    vw->add_option("file", witness_path)->required();

    // theta
    int theta_n = 2, theta_t = 0;
    auto* th = app.add_subcommand("theta", "extract a K_{2,n} subdivision certificate");
    th->add_option("graph", graph_path)->required();
    th->add_option("--n", theta_n)->required();
    th->add_option("--ell", ell)->required();
    th->add_option("--t", theta_t, "layer-chain length (default 3(n+1))");
    add_common(th, false);

    // verify-theta
    std::string cert_path;
    auto* vt = app.add_subcommand("verify-theta", "check a theta certificate");
    vt->add_option("--graph", graph_path)->required();
    vt->add_option("--cert", cert_path)->required();
    vt->add_option("--n", theta_n)->required();
    vt->add_option("--ell", ell)->required();

    // strings
    auto* strings = app.add_subcommand("strings", "string-graph geometry");
    strings->require_subcommand(1);
    std::string lines_path, disc_path;
    bool jitter = false;
    auto* sb = strings->add_subcommand("build", "intersection graph of polylines");
    sb->add_option("file", lines_path)->required();
    add_common(sb);
    auto* sc = strings->add_subcommand("clip", "clip an arrangement to a disc");
    sc->add_option("file", lines_path)->required();
    sc->add_option("--disc", disc_path, "disc JSON file")->required();
    sc->add_flag("--jitter", jitter, "perturb the radius past boundary degeneracies (reported)");
    add_common(sc, false);
    auto* so = strings->add_subcommand("order", "clockwise boundary order of clipped pieces");
    so->add_option("file", lines_path)->required();
    so->add_option("--disc", disc_path)->required();
    so->add_flag("--jitter", jitter);
    add_common(so, false);
    auto* sa = strings->add_subcommand("audit", "chi <= 40 chi^3 audit");
    sa->add_option("file", lines_path)->required();
    add_common(sa, false);

    // experiment
    std::string plan_path;
    auto* ex = app.add_subcommand("experiment", "run a JSON experiment plan");
    ex->add_option("plan", plan_path)->required();
    add_common(ex, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            Graph g = corpus_graph(gen_kind, gen_param, gen_p, seed);
            emit(emit_graph(g, parse_format(format_name)), out_path);
        } else if (*chi) {
            ChiResult r = chromatic_number(load_graph(graph_path), Budget::seconds(budget_sec));
            emit("chi = " + chi_text(r), out_path);
        } else if (*omega) {
            emit("omega = " + std::to_string(clique_number(load_graph(graph_path))), out_path);
        } else if (*chirho) {
            ChiResult r = ball_chromatic(load_graph(graph_path), rho, Budget::seconds(budget_sec));
            emit("chi^" + std::to_string(rho) + " = " + chi_text(r), out_path);
        } else if (*burl) {
            const BurlingLevel& level = burling(burling_k);
            if (parse_format(format_name) == GraphFormat::json) {
                std::string g = emit_graph(level.g, GraphFormat::json);
                std::string t = "[";
                for (std::size_t i = 0; i < level.t_set.size(); ++i)
                    t += (i ? "," : "") + std::to_string(level.t_set[i]);
                t += "]";
                emit("{\"k\":" + std::to_string(level.k) + ",\"graph\":" + g + ",\"t_set\":" + t + "}",
                     out_path);
            } else {
                std::string text = emit_graph(level.g, GraphFormat::dimacs);
                text += "c t";
                for (int v : level.t_set) text += " " + std::to_string(v + 1);
                text += "\n";
                emit(text, out_path);
            }
        } else if (*fi) {
            FindResult r = find_induced(load_graph(pattern_path), load_graph(host_path),
                                        Budget::seconds(budget_sec));
            if (r.status == FindStatus::timeout) emit("Timeout", out_path);
            else if (r.status == FindStatus::not_found) emit("NotFound", out_path);
            else {
                std::string s = "Found:";
                for (int v : r.embedding.map) s += " " + std::to_string(v);
                emit(s, out_path);
            }
        } else if (*fs) {
            SubdivisionConstraint constraint =
                constraint_name == "exact"        ? SubdivisionConstraint::exactly(ell)
                : constraint_name == "at-least"   ? SubdivisionConstraint::at_least(ell)
                : constraint_name == "proper-at-most"
                    ? SubdivisionConstraint::proper_at_most(ell)
                    : throw CLI::ValidationError("bad --constraint");
            SubdivisionSearchResult r =
                find_induced_subdivision(load_graph(pattern_path), load_graph(host_path), constraint,
                                         cap, Budget::seconds(budget_sec));
            if (r.status == SubdivisionStatus::timeout) emit("Timeout", out_path);
            else if (r.status == SubdivisionStatus::not_found_within_cap)
                emit("NotFound-within-cap", out_path);
            else {
                std::string s = "Found: lengths";
                for (int len : r.model.lengths) s += " " + std::to_string(len);
                s += "; map";
                for (int v : r.embedding.map) s += " " + std::to_string(v);
                emit(s, out_path);
            }
        } else if (*rc) {
            RestrictedReport r = restricted_check(load_graph(graph_path), lambda, mu, nu, cap,
                                                  Budget::seconds(budget_sec));
            switch (r.status) {
            case RestrictedStatus::restricted_within_cap:
                emit("Restricted-within-cap", out_path);
                break;
            case RestrictedStatus::clique_witness:
                emit("Witness(clique): omega = " + std::to_string(r.omega), out_path);
                break;
            case RestrictedStatus::subdivision_witness: {
                std::string s = "Witness(subdivision): lengths";
                for (int len : r.model.lengths) s += " " + std::to_string(len);
                emit(s, out_path);
                break;
            }
            case RestrictedStatus::timeout:
                emit("Timeout", out_path);
                break;
            }
        } else if (*vw) {
            std::string dir = ".";
            auto slash = witness_path.find_last_of('/');
            if (slash != std::string::npos) dir = witness_path.substr(0, slash);
            WitnessVerdict v = verify_witness_json(read_file(witness_path), dir);
            emit(v.type + ": " + check_text(v.result), out_path);
            if (!v.result.ok) return 1;
        } else if (*th) {
            Graph g = load_graph(graph_path);
            int t = theta_t > 0 ? theta_t : default_chain_steps(theta_n);
            ThetaResult r = find_theta(g, theta_n, ell, t, ChiEstimator::automatic,
                                       Budget::seconds(budget_sec), seed);
            for (const auto& s : r.stages) std::cerr << "stage: " << s << "\n";
            if (!r.found) {
                emit(r.timed_out ? "Timeout" : "FailureReport: " +
                                                   (r.stages.empty() ? "?" : r.stages.back()),
                     out_path);
                return 1;
            }
            emit(emit_theta(r.cert), out_path);
        } else if (*vt) {
            CheckResult r = verify_theta(parse_theta(read_file(cert_path)), load_graph(graph_path),
                                         theta_n, ell);
            emit(check_text(r), out_path);
            if (!r.ok) return 1;
        } else if (*sb) {
            StringArrangement arr = build_string_graph(parse_polylines(read_file(lines_path)));
            emit(emit_graph(arr.graph, parse_format(format_name)), out_path);
        } else if (*sc || *so) {
            StringArrangement arr = build_string_graph(parse_polylines(read_file(lines_path)));
            Disc disc = parse_disc(read_file(disc_path));
            ClipResult clip;
            bool done = false;
            for (int attempt = 0; attempt <= (jitter ? 50 : 0) && !done; ++attempt) {
                try {
                    clip = clip_to_disc(arr, disc);
                    done = true;
                } catch (const DegenerateBoundary& e) {
                    if (!jitter || attempt == 50) throw;
                    disc.radius += disc.radius / 10007;
                    std::cerr << "jitter: " << e.what()
                              << "; radius perturbed to " << emit_disc(disc) << "\n";
                }
            }
            if (*sc) {
                std::string s = emit_graph(clip.graph, GraphFormat::json);
                std::string origin = "[";
                for (std::size_t i = 0; i < clip.origin.size(); ++i)
                    origin += (i ? "," : "") + std::to_string(clip.origin[i]);
                origin += "]";
                std::string v = "[";
                for (std::size_t i = 0; i < clip.boundary_pieces.size(); ++i)
                    v += (i ? "," : "") + std::to_string(clip.boundary_pieces[i]);
                v += "]";
                emit("{\"graph\":" + s + ",\"origin\":" + origin + ",\"boundary\":" + v + "}",
                     out_path);
            } else {
                std::string s;
                for (int p : boundary_order(clip)) s += (s.empty() ? "" : " ") + std::to_string(p);
                emit(s, out_path);
            }
        } else if (*sa) {
            StringArrangement arr = build_string_graph(parse_polylines(read_file(lines_path)));
            ChiAudit audit = audit_40chi3(arr, Budget::seconds(budget_sec));
            std::string s = "chi = " + chi_text(audit.chi) + "; chi^3 = " + chi_text(audit.chi3);
            if (audit.both_exact)
                s += audit.bound_holds ? "; bound holds" : "; BOUND VIOLATED";
            else
                s += "; bound not decided (inexact)";
            emit(s, out_path);
        } else if (*ex) {
            std::string csv = run_experiment(read_file(plan_path));
            emit(csv, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
