#ifndef PERVADE_GRAPH_IO_HPP
#define PERVADE_GRAPH_IO_HPP

#include <string>

#include "pervade/extraction.hpp"
#include "pervade/graph.hpp"
#include "pervade/strings.hpp"
#include "pervade/witnesses.hpp"

namespace pervade {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason), line(line) {}
    int line;
};

enum class GraphFormat { dimacs, json };

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> warnings; // e.g. tolerated duplicate edges
};

// DIMACS: "p edge n m" then "e u v" (1-indexed); JSON: {"n":., "edges":[[u,v],..]}
// (0-indexed). Duplicate edges warn; self-loops are errors.
ParsedGraph parse_graph(const std::string& text, GraphFormat format);
// canonical form: sorted unique edges
std::string emit_graph(const Graph& g, GraphFormat format);

GraphFormat format_from_path(const std::string& path); // .col/.dimacs vs .json
ParsedGraph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path, GraphFormat format);

// ---- polylines and discs ----

// [{"id": int, "points": [[x,y], ...]}, ...], integer coordinates
std::vector<Polyline> parse_polylines(const std::string& text);
std::string emit_polylines(const std::vector<Polyline>& lines);

// {"center": [x, y], "radius": r}; each entry an integer or a "p/q" string
Disc parse_disc(const std::string& text);
std::string emit_disc(const Disc& d);

// ---- theta certificates ----

std::string emit_theta(const ThetaCertificate& cert);
ThetaCertificate parse_theta(const std::string& text);

// ---- witness schema ----
// {"type": ..., "graph": <inline graph or file path>, "sets": {...}, "params": {...}}

struct WitnessVerdict {
    std::string type;
    CheckResult result;
};

// base_dir resolves relative graph-file references
WitnessVerdict verify_witness_json(const std::string& text, const std::string& base_dir = ".");

std::string emit_levelling_witness(const Graph& g, const Levelling& lev);
std::string emit_k_cover_witness(const Graph& g, const Levelling& lev, const VertexSet& c);
std::string emit_k_multicover_witness(const Graph& g, const KMulticover& mc, const VertexSet& c,
                                      bool independent = false);
std::string emit_tick_witness(const Graph& g, const Tick& tick, const KMulticover& mc,
                              const VertexSet& c);
std::string emit_clique_cover_witness(const Graph& g, const CliqueCover& cc, const VertexSet& c);
std::string emit_clique_multicover_witness(const Graph& g, const CliqueMulticover& mc,
                                           const VertexSet& c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace pervade

#endif
