#ifndef PERVADE_CONTAINMENT_HPP
#define PERVADE_CONTAINMENT_HPP

#include <optional>
#include <string>

#include "pervade/coloring.hpp"
#include "pervade/generators.hpp"
#include "pervade/graph.hpp"

namespace pervade {

// Injective map pattern -> host preserving both adjacency and non-adjacency.
struct InducedEmbedding {
    std::vector<int> map; // pattern vertex -> host vertex
};

bool verify_induced_embedding(const Graph& pattern, const Graph& host, const std::vector<int>& map);

enum class FindStatus { found, not_found, timeout };

struct FindResult {
    FindStatus status = FindStatus::not_found;
    InducedEmbedding embedding; // valid when found
};

// Backtracking search with degree and adjacency-consistency pruning.
// Complete within budget; not_found is only reported after a full search.
// Host candidates are tried in ascending index.
FindResult find_induced(const Graph& pattern, const Graph& host, Budget budget = Budget::unlimited());

bool is_isomorphic(const Graph& a, const Graph& b);

// ---- induced subdivisions ----

struct SubdivisionConstraint {
    enum class Kind { exact, at_least, proper_at_most } kind = Kind::exact;
    int ell = 1; // exact/at_least: ell; proper_at_most: lambda

    static SubdivisionConstraint exactly(int ell) { return {Kind::exact, ell}; }
    static SubdivisionConstraint at_least(int ell) { return {Kind::at_least, ell}; }
    static SubdivisionConstraint proper_at_most(int lambda) { return {Kind::proper_at_most, lambda}; }

    int min_length() const { return kind == Kind::proper_at_most ? 2 : ell + 1; }
    // 0 = unbounded (capped by total size only)
    int max_length() const { return kind == Kind::exact ? ell + 1 : kind == Kind::proper_at_most ? ell + 1 : 0; }
    bool admits(int len) const {
        if (len < min_length()) return false;
        int mx = max_length();
        return mx == 0 || len <= mx;
    }
};

enum class SubdivisionStatus { found, not_found_within_cap, timeout };

struct SubdivisionSearchResult {
    SubdivisionStatus status = SubdivisionStatus::not_found_within_cap;
    SubdivisionModel model;       // valid when found
    InducedEmbedding embedding;   // of the realized model into the host
    long long vectors_tried = 0;
};

// Enumerates admissible length vectors in nondecreasing total size (lexicographic
// within a size), realizes each model and runs find_induced. Sound; complete
// only relative to the vertex-count cap.
SubdivisionSearchResult find_induced_subdivision(const Graph& base, const Graph& host,
                                                 SubdivisionConstraint constraint, int cap,
                                                 Budget budget = Budget::unlimited());

// ---- impressions (relaxed subdivision embeddings) ----

struct Impression {
    std::vector<int> vertex_map;          // pattern vertex -> host vertex
    std::vector<std::vector<int>> paths;  // per pattern edge (sorted order), host path
};

struct ImpressionReport {
    bool ok = false;
    std::string clause; // violated clause when !ok
    int order = 0;      // max path length when ok
};

// Checks the four defining clauses literally. Paths need not be induced
// unless strict_induced is set.
ImpressionReport check_impression(const Impression& imp, const Graph& host, const Graph& pattern,
                                  bool strict_induced = false);

// ---- (lambda, mu, nu)-restriction ----

enum class RestrictedStatus { restricted_within_cap, clique_witness, subdivision_witness, timeout };

struct RestrictedReport {
    RestrictedStatus status = RestrictedStatus::restricted_within_cap;
    int omega = 0;                              // clique_witness payload
    SubdivisionModel model;                     // subdivision_witness payload
    InducedEmbedding embedding;
};

// omega(g) <= nu checked exactly, then search for an induced proper
// (<= lambda)-subdivision of K_{mu,mu} up to the vertex cap.
RestrictedReport restricted_check(const Graph& g, int lambda, int mu, int nu, int cap,
                                  Budget budget = Budget::unlimited());

// ---- anticomplete path pairs ----

enum class PathsStatus { yes, no, timeout };

// True iff there are paths P (a..b) and Q (c..d) with V(P) anticomplete to
// V(Q). Enumerates induced a-b paths; for each, connectivity of c,d is tested
// outside the closed neighbourhood of the path.
PathsStatus anticomplete_paths_exist(const Graph& g, int a, int b, int c, int d,
                                     Budget budget = Budget::unlimited());

} // namespace pervade

#endif
