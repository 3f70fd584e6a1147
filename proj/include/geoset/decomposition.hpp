#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geoset/region.hpp"

namespace geoset {

// One chord cut performed during a decomposition phase: while object `phase`
// was being isolated, its boundary crossed partner `partner` at p1 and p2,
// and both objects were trimmed to opposite sides of the chord p1-p2.
struct ChordRecord {
    std::size_t phase;
    std::size_t partner;
    Point p1;
    Point p2;
};

struct DecompositionOptions {
    // Re-check the running invariants after every phase: processed objects
    // are interior-disjoint from everything, and the still-unprocessed ones
    // remain pairwise pseudodisks.
    bool verify_phases = true;
    // Keep a full copy of the family after each phase (for rendering/debug).
    bool record_snapshots = false;
};

struct DecompositionResult {
    std::vector<ConvexPolygon> tilde;  // shrunken objects, same indexing
    std::vector<ChordRecord> chords;
    std::size_t tangential_skips = 0;  // pairs that touched without interior overlap
    std::vector<std::vector<ConvexPolygon>> snapshots;  // per phase, when requested
};

// Shrinks each member of a cover-free pseudodisk family so the results are
// pairwise interior-disjoint while covering exactly the original union.
// Phase i isolates object i: every partner whose interior still meets it is
// cut along the chord between their two boundary crossings, the partner
// keeping the side away from its arc inside object i, and object i keeping
// the intersection of the complementary sides.
//
// Throws NotCoverFree (some member adds no exclusive area), NotPseudodisks
// (some pair crosses more than twice, initially or mid-run),
// DegenerateOverlap (boundaries sharing a segment), DegenerateChord (a pair
// with overlapping interiors fails to cross exactly twice).
DecompositionResult disjoint_union_decomposition(const std::vector<ConvexPolygon>& family,
                                                 const DecompositionOptions& options = {});

struct DecompositionReport {
    bool sizes_match = false;
    bool subsets = false;               // tilde_i inside original i
    bool union_area_preserved = false;  // exact union area equality
    bool pairwise_disjoint = false;     // tilde interiors pairwise disjoint
    bool cover_free_contained = false;  // exclusive region of i inside tilde_i
    std::vector<std::string> failures;

    bool pass() const {
        return sizes_match && subsets && union_area_preserved && pairwise_disjoint &&
               cover_free_contained;
    }
};

// Independent re-verification of a claimed decomposition output.
DecompositionReport verify_decomposition(const std::vector<ConvexPolygon>& family,
                                         const std::vector<ConvexPolygon>& tilde);

// A petal: one connected component of `self` minus the partner's interior.
// Intervals are the merged cyclic stretches of the core boundary (parameter
// space of the core polygon, period = vertex count) that the petal touches
// with positive length; an interval's end may exceed the period when the
// stretch wraps past parameter zero.
struct Petal {
    Region cells;
    bool active = false;  // pokes outside the partner's parent polygon
    std::vector<std::pair<Rational, Rational>> intervals;
};

struct PetalClassification {
    ConvexPolygon core;            // u0 intersected with v0
    std::vector<Point> crossings;  // transversal boundary crossings, ordered along the core
    std::vector<Petal> u_petals;   // components of u0 minus v0's interior
    std::vector<Petal> v_petals;   // components of v0 minus u0's interior
};

// Classifies the overlap pattern of two shrunken objects u0 (inside parent
// u_parent) and v0 (inside v_parent). A petal is active when it is not fully
// inside the partner's parent. Identical u0 == v0 yields zero petals and no
// crossings. Throws ConflictingCO when the active petals' boundary intervals
// alternate sides around the core (U, V, U, V), the one configuration with
// no separating edge — impossible for parents that cross at most twice, so
// it signals a violated pseudodisk precondition; InvalidParams when the
// other preconditions fail (subset relations, overlapping interiors,
// crossing boundaries).
PetalClassification classify_petals(const ConvexPolygon& u0, const ConvexPolygon& v0,
                                    const ConvexPolygon& u_parent,
                                    const ConvexPolygon& v_parent);

struct SeparatingEdge {
    Point p;
    Point q;
    HalfPlane u_side;  // closed half-plane containing u_part
    HalfPlane v_side;  // its complement, containing v_part
};

struct SeparationResult {
    ConvexPolygon u_part;
    ConvexPolygon v_part;
    SeparatingEdge edge;
};

// Splits an overlapping pair along a straight edge between two boundary
// crossings so that the parts are interior-disjoint, the edge lies on both
// parts' boundaries, whatever u0 loses was already covered by v_parent (and
// symmetrically), and — when exclusive regions are supplied — each part
// retains its object's exclusive region. Candidates are ordered pairs of
// crossings whose two arcs separate the active U intervals from the active
// V intervals; the first candidate passing all checks wins. Throws
// NoSeparator when no candidate passes, plus everything classify_petals
// throws.
SeparationResult separating_edge(const ConvexPolygon& u0, const ConvexPolygon& v0,
                                 const ConvexPolygon& u_parent, const ConvexPolygon& v_parent,
                                 const Region* u_exclusive = nullptr,
                                 const Region* v_exclusive = nullptr);

}  // namespace geoset
