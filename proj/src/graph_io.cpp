#include "pervade/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pervade {

using nlohmann::json;

namespace {

ParsedGraph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    long long m_declared = -1;
    ParsedGraph out;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> m_declared) || kind != "edge" || n < 0)
                throw ParseError(lineno, "malformed problem line");
            continue;
        }
        if (tag == "e") {
            if (n < 0) throw ParseError(lineno, "edge before problem line");
            long long u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
            if (u < 1 || v < 1 || u > n || v > n) throw ParseError(lineno, "vertex out of range");
            if (u == v) throw ParseError(lineno, "self-loop");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        throw ParseError(lineno, "unknown line tag '" + tag + "'");
    }
    if (n < 0) throw ParseError(lineno, "missing problem line");
    out.graph = Graph(n);
    for (auto [u, v] : edges) {
        if (out.graph.adjacent(u, v))
            out.warnings.push_back("duplicate edge " + std::to_string(u + 1) + " " +
                                   std::to_string(v + 1));
        out.graph.add_edge(u, v);
    }
    return out;
}

ParsedGraph parse_graph_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(0, e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError(0, "expected {\"n\": ..., \"edges\": ...}");
    int n = j["n"].get<int>();
    if (n < 0) throw ParseError(0, "negative vertex count");
    ParsedGraph out;
    out.graph = Graph(n);
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError(0, "malformed edge");
        int u = e[0].get<int>(), v = e[1].get<int>();
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(0, "vertex out of range");
        if (u == v) throw ParseError(0, "self-loop");
        if (out.graph.adjacent(u, v))
            out.warnings.push_back("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        out.graph.add_edge(u, v);
    }
    return out;
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"n", g.size()}, {"edges", edges}};
}

json set_to_json(const VertexSet& s) {
    json a = json::array();
    for (int v : s) a.push_back(v);
    return a;
}

VertexSet set_from_json(const json& a) {
    VertexSet s;
    for (const auto& v : a) s.push_back(v.get<int>());
    return s;
}

} // namespace

ParsedGraph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::dimacs ? parse_dimacs(text) : parse_graph_json(text);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
    if (format == GraphFormat::json) return graph_to_json(g).dump();
    std::ostringstream out;
    auto edges = g.edges();
    out << "p edge " << g.size() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

GraphFormat format_from_path(const std::string& path) {
    auto dot = path.find_last_of('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "col" || ext == "dimacs") return GraphFormat::dimacs;
    return GraphFormat::json;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

ParsedGraph load_graph_file(const std::string& path) {
    return parse_graph(read_file(path), format_from_path(path));
}

void save_graph_file(const Graph& g, const std::string& path, GraphFormat format) {
    write_file(path, emit_graph(g, format));
}

// ---- polylines and discs ----

std::vector<Polyline> parse_polylines(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(0, e.what());
    }
    if (!j.is_array()) throw ParseError(0, "expected an array of polylines");
    std::vector<Polyline> out;
    for (const auto& c : j) {
        Polyline line;
        line.id = c.value("id", static_cast<int>(out.size()));
        for (const auto& p : c.at("points")) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
                !p[1].is_number_integer())
                throw ParseError(0, "points must be integer pairs");
            line.points.push_back({p[0].get<long long>(), p[1].get<long long>()});
        }
        out.push_back(std::move(line));
    }
    return out;
}

std::string emit_polylines(const std::vector<Polyline>& lines) {
    json j = json::array();
    for (const auto& line : lines) {
        json pts = json::array();
        for (const auto& p : line.points) pts.push_back(json::array({p.x, p.y}));
        j.push_back(json{{"id", line.id}, {"points", pts}});
    }
    return j.dump();
}

namespace {

Rat rational_from_json(const json& v) {
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt den(s.substr(slash + 1));
        if (den.is_zero()) throw ParseError(0, "zero denominator");
        return Rat(BigInt(s.substr(0, slash))) / Rat(den);
    }
    throw ParseError(0, "rational must be an integer or a \"p/q\" string");
}

std::string rational_to_string(const Rat& r) {
    std::ostringstream ss;
    ss << numerator(r);
    if (denominator(r) != 1) ss << "/" << denominator(r);
    return ss.str();
}

} // namespace

Disc parse_disc(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(0, e.what());
    }
    const auto& c = j.at("center");
    Disc d;
    d.cx = rational_from_json(c.at(0));
    d.cy = rational_from_json(c.at(1));
    d.radius = rational_from_json(j.at("radius"));
    if (d.radius.sign() <= 0) throw ParseError(0, "radius must be positive");
    return d;
}

std::string emit_disc(const Disc& d) {
    json j{{"center", json::array({rational_to_string(d.cx), rational_to_string(d.cy)})},
           {"radius", rational_to_string(d.radius)}};
    return j.dump();
}

// ---- theta certificates ----

std::string emit_theta(const ThetaCertificate& cert) {
    json paths = json::array();
    for (const auto& p : cert.paths) paths.push_back(set_to_json(p));
    json j{{"hub_u", cert.hub_u}, {"hub_v", cert.hub_v}, {"ell", cert.ell}, {"paths", paths}};
    return j.dump();
}

ThetaCertificate parse_theta(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(0, e.what());
    }
    ThetaCertificate cert;
    cert.hub_u = j.at("hub_u").get<int>();
    cert.hub_v = j.at("hub_v").get<int>();
    cert.ell = j.at("ell").get<int>();
    for (const auto& p : j.at("paths")) cert.paths.push_back(set_from_json(p));
    return cert;
}

// ---- witness schema ----

namespace {

json witness_frame(const std::string& type, const Graph& g) {
    return json{{"type", type}, {"graph", graph_to_json(g)}, {"sets", json::object()},
                {"params", json::object()}};
}

json levelling_to_json(const Levelling& lev) {
    json levels = json::array();
    for (const auto& l : lev.levels) levels.push_back(set_to_json(l));
    return levels;
}

Levelling levelling_from_json(const json& levels) {
    Levelling lev;
    for (const auto& l : levels) lev.levels.push_back(set_from_json(l));
    return lev;
}

json kmc_to_json(const KMulticover& mc) {
    json covers = json::array();
    for (std::size_t i = 0; i < mc.covers.size(); ++i)
        covers.push_back(json{{"index", mc.indices[i]}, {"levels", levelling_to_json(mc.covers[i])}});
    return covers;
}

KMulticover kmc_from_json(const json& covers) {
    KMulticover mc;
    for (const auto& c : covers) {
        mc.indices.push_back(c.at("index").get<int>());
        mc.covers.push_back(levelling_from_json(c.at("levels")));
    }
    return mc;
}

json cc_to_json(const CliqueCover& cc) {
    return json{{"x", set_to_json(cc.x)}, {"n", set_to_json(cc.n)}, {"w", set_to_json(cc.w)}};
}

CliqueCover cc_from_json(const json& j, int xi) {
    CliqueCover cc;
    cc.x = set_from_json(j.at("x"));
    cc.n = set_from_json(j.at("n"));
    cc.w = set_from_json(j.at("w"));
    cc.xi = xi;
    return cc;
}

} // namespace

std::string emit_levelling_witness(const Graph& g, const Levelling& lev) {
    json j = witness_frame("levelling", g);
    j["sets"]["levels"] = levelling_to_json(lev);
    return j.dump();
}

std::string emit_k_cover_witness(const Graph& g, const Levelling& lev, const VertexSet& c) {
    json j = witness_frame("k_cover", g);
    j["sets"]["levels"] = levelling_to_json(lev);
    j["sets"]["target"] = set_to_json(c);
    return j.dump();
}

std::string emit_k_multicover_witness(const Graph& g, const KMulticover& mc, const VertexSet& c,
                                      bool independent) {
    json j = witness_frame(independent ? "independent_1_multicover" : "k_multicover", g);
    j["sets"]["covers"] = kmc_to_json(mc);
    j["sets"]["target"] = set_to_json(c);
    return j.dump();
}

std::string emit_tick_witness(const Graph& g, const Tick& tick, const KMulticover& mc,
                              const VertexSet& c) {
    json j = witness_frame("tick", g);
    j["sets"]["covers"] = kmc_to_json(mc);
    j["sets"]["target"] = set_to_json(c);
    j["sets"]["head"] = tick.head;
    json paths = json::array();
    for (std::size_t i = 0; i < tick.paths.size(); ++i)
        paths.push_back(json{{"index", tick.indices[i]}, {"vertices", set_to_json(tick.paths[i])}});
    j["sets"]["paths"] = paths;
    return j.dump();
}

std::string emit_clique_cover_witness(const Graph& g, const CliqueCover& cc, const VertexSet& c) {
    json j = witness_frame("clique_cover", g);
    j["sets"] = cc_to_json(cc);
    j["sets"]["target"] = set_to_json(c);
    j["params"]["xi"] = cc.xi;
    return j.dump();
}

std::string emit_clique_multicover_witness(const Graph& g, const CliqueMulticover& mc,
                                           const VertexSet& c) {
    json j = witness_frame("clique_multicover", g);
    json covers = json::array();
    for (std::size_t i = 0; i < mc.covers.size(); ++i) {
        json one = cc_to_json(mc.covers[i]);
        one["index"] = mc.indices[i];
        covers.push_back(one);
    }
    j["sets"]["covers"] = covers;
    j["sets"]["target"] = set_to_json(c);
    j["params"]["xi"] = mc.xi;
    return j.dump();
}

WitnessVerdict verify_witness_json(const std::string& text, const std::string& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(0, e.what());
    }
    std::string type = j.at("type").get<std::string>();

    Graph g;
    const auto& gj = j.at("graph");
    if (gj.is_string()) {
        std::string path = gj.get<std::string>();
        if (!path.empty() && path[0] != '/') path = base_dir + "/" + path;
        g = load_graph_file(path).graph;
    } else {
        g = parse_graph_json(gj.dump()).graph;
    }

    const json& sets = j.at("sets");
    WitnessVerdict out;
    out.type = type;
    if (type == "levelling") {
        out.result = check_levelling(g, levelling_from_json(sets.at("levels")));
    } else if (type == "k_cover") {
        out.result = check_k_cover(g, levelling_from_json(sets.at("levels")),
                                   set_from_json(sets.at("target")));
    } else if (type == "k_multicover") {
        out.result = check_k_multicover(g, kmc_from_json(sets.at("covers")),
                                        set_from_json(sets.at("target")));
    } else if (type == "independent_1_multicover") {
        out.result = check_independent_1_multicover(g, kmc_from_json(sets.at("covers")),
                                                    set_from_json(sets.at("target")));
    } else if (type == "tick") {
        Tick tick;
        tick.head = sets.at("head").get<int>();
        for (const auto& p : sets.at("paths")) {
            tick.indices.push_back(p.at("index").get<int>());
            tick.paths.push_back(set_from_json(p.at("vertices")));
        }
        out.result = check_tick(g, tick, kmc_from_json(sets.at("covers")),
                                set_from_json(sets.at("target")));
    } else if (type == "clique_cover") {
        int xi = j.at("params").at("xi").get<int>();
        out.result = check_clique_cover(g, cc_from_json(sets, xi), set_from_json(sets.at("target")));
    } else if (type == "clique_multicover") {
        int xi = j.at("params").at("xi").get<int>();
        CliqueMulticover mc;
        mc.xi = xi;
        for (const auto& c : sets.at("covers")) {
            mc.indices.push_back(c.at("index").get<int>());
            mc.covers.push_back(cc_from_json(c, xi));
        }
        out.result = check_clique_multicover(g, mc, set_from_json(sets.at("target")));
    } else {
        throw ParseError(0, "unknown witness type '" + type + "'");
    }
    return out;
}

} // namespace pervade
