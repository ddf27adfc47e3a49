#ifndef PERVADE_STRINGS_HPP
#define PERVADE_STRINGS_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "pervade/coloring.hpp"
#include "pervade/geometry.hpp"
#include "pervade/graph.hpp"

namespace pervade {

// A string: piecewise linear simple curve with integer coordinates.
struct Polyline {
    int id = 0;
    std::vector<IPoint> points;
};

struct DegenerateCurve : std::invalid_argument {
    explicit DegenerateCurve(int id, const std::string& why)
        : std::invalid_argument("curve " + std::to_string(id) + ": " + why), id(id) {}
    int id;
};

struct DegenerateBoundary : std::invalid_argument {
    explicit DegenerateBoundary(const std::string& why)
        : std::invalid_argument("degenerate disc boundary: " + why) {}
};

// Curves plus the derived intersection graph (vertex i <-> curves[i]).
// Adjacency is exact; touching endpoints count as intersection.
struct StringArrangement {
    std::vector<Polyline> curves;
    Graph graph;
};

StringArrangement build_string_graph(std::vector<Polyline> curves);

// ---- clipping to a closed disc ----

struct ClippedPiece {
    int parent = 0;                              // index into the parent arrangement
    std::vector<BoundaryPoint> boundary;         // 1..2 hits when the piece meets bd
    std::vector<std::array<double, 2>> approx;   // approximate polyline, display only
    bool meets_boundary() const { return !boundary.empty(); }
};

struct ClipResult {
    Disc disc;
    Graph graph;                      // exact intersection graph of the pieces
    std::vector<ClippedPiece> pieces; // piece i <-> graph vertex i
    std::vector<int> origin;          // piece -> parent curve index (the homomorphism)
    std::vector<int> boundary_pieces; // V: pieces meeting the boundary, ascending
};

// Components of each curve inside the closed disc. Rejects (DegenerateBoundary)
// polyline vertices on the circle, tangent segments, and curve-curve meeting
// points that land exactly on the circle.
ClipResult clip_to_disc(const StringArrangement& arr, const Disc& disc);

// Boundary-meeting pieces ordered clockwise by their first boundary hit after
// a reference point d chosen from a fixed grid of rational directions.
std::vector<int> boundary_order(const ClipResult& clip);

// ---- cross property ----

enum class CrossStatus { accept, reject, timeout };

struct CrossReport {
    CrossStatus status = CrossStatus::accept;
    std::array<int, 4> quad{0, 0, 0, 0}; // 1-based positions witnessing a rejection
};

// Reject iff some h<i<j<k admits anticomplete paths seq[h]..seq[j] and
// seq[i]..seq[k]. Vacuous accept below four vertices.
CrossReport check_cross_property(const Graph& g, const std::vector<int>& seq,
                                 Budget budget = Budget::unlimited());

// ---- chi <= 40 chi^3 audit ----

struct ChiAudit {
    ChiResult chi;
    ChiResult chi3;
    bool both_exact = false;
    bool bound_holds = false; // meaningful when both_exact
};

ChiAudit audit_40chi3(const StringArrangement& arr, Budget budget = Budget::unlimited());

// ---- disc suggestion ----

// Best-effort circle with the (union-connected) curves S1 strictly inside and
// the curves S2 disjoint from the closed disc; exactly re-verified before
// returning. nullopt when the centered-circle heuristic fails.
std::optional<Disc> suggest_disc(const StringArrangement& arr, const VertexSet& s1,
                                 const VertexSet& s2);

bool verify_disc_separation(const StringArrangement& arr, const Disc& disc, const VertexSet& s1,
                            const VertexSet& s2);

// seeded simple-polyline generator for tests and experiments
std::vector<Polyline> random_polylines(int curves, int max_segments, long long coord_range,
                                       std::uint64_t seed);

} // namespace pervade

#endif
