#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "rootpoly/exactlin.hpp"

namespace rootpoly {

// One halfspace <normal, x> >= -offset. Used with '=' semantics in the
// equation lists that pin down lower-dimensional affine hulls.
struct Halfspace {
    QVec normal;
    Rat offset;
    bool operator==(const Halfspace&) const = default;
};

// Canonical form: normal scaled to a primitive integer vector (offsets
// rescaled along). Orientation is preserved.
Halfspace canonicalize(const Halfspace& h);

struct VPolytope {
    std::size_t ambient_dim = 0;
    std::vector<QVec> vertices; // irredundant, sorted lexicographically
};

struct HPolytope {
    std::size_t ambient_dim = 0;
    std::vector<Halfspace> inequalities;
    std::vector<Halfspace> equations; // affine hull when lower-dimensional
};

// A face, identified by the vertices it contains.
struct Face {
    std::set<std::size_t> vertices;
    std::size_t dim = 0;
    std::vector<std::size_t> children; // indices into the next-lower level
};

// Faces graded by dimension: levels[k] = faces of dimension k, for
// k = 0 .. dim-1, built by intersecting facet vertex sets.
struct FaceLattice {
    std::vector<std::vector<Face>> levels;
};

// Joint V/H description produced by hull(). Lower-dimensional hulls carry
// their affine hull explicitly: chart_origin + span(chart_basis), with
// chart_basis a saturated lattice basis so that reduced-coordinate
// determinants measure volume against the ambient lattice.
struct Polytope {
    std::size_t ambient_dim = 0;
    std::size_t dim = 0;
    VPolytope v;
    HPolytope h;
    QVec chart_origin;
    std::vector<IVec> chart_basis;
    std::vector<QVec> reduced_vertices;        // aligned with v.vertices
    std::vector<Halfspace> reduced_facets;     // full-dimensional, in chart coords
    std::vector<std::vector<std::size_t>> facet_vertices; // aligned with reduced_facets

    bool contains(const QVec& point) const;
    bool origin_interior() const;
};

// Exact convex hull of a nonempty rational point set (beneath-beyond).
Polytope hull(const std::vector<QVec>& points);

// Polar dual {y : <x,y> >= -1 for all x in p}. Requires p full-dimensional
// with the origin strictly interior.
VPolytope polar_dual(const VPolytope& p);
VPolytope polar_dual(const Polytope& p);

// All integer points, by a bounding-box scan pruned with the facet
// inequalities one axis slab at a time.
std::vector<IVec> lattice_points(const Polytope& p);
// Convenience for an H-description; runs vertex enumeration first and
// reports unbounded input as a domain error.
std::vector<IVec> lattice_points(const HPolytope& h);

struct ReflexivityCertificate {
    bool reflexive = false;
    std::vector<IVec> dual_vertices;         // when reflexive
    std::optional<QVec> fractional_vertex;   // offending dual vertex otherwise
    std::string reason;
};
// p must be a lattice polytope; false (with reason) when not
// full-dimensional, the origin is not interior, or the dual has a
// fractional vertex.
ReflexivityCertificate is_reflexive(const Polytope& p);

// True iff the only lattice points are the origin and the vertices.
// Requires a lattice polytope with the origin strictly interior.
bool is_terminal(const Polytope& p);

FaceLattice face_lattice(const Polytope& p);
std::vector<std::size_t> f_vector(const Polytope& p);

// Pulling triangulation (recursively coning the least vertex over the
// opposite facets). Simplices are vertex-index sets; no new vertices.
std::vector<std::vector<std::size_t>> pulling_triangulation(const Polytope& p);
// Same, restricted to one face of the lattice.
std::vector<std::vector<std::size_t>> pulling_triangulation(const Polytope& p,
                                                            const FaceLattice& fl,
                                                            std::size_t level,
                                                            std::size_t face_index);

// dim! * euclidean volume measured against the lattice of the affine hull.
Int normalized_volume(const Polytope& p);

struct AffineMap {
    IMat linear; // maps R^n -> R^m
    IVec shift;  // length m
};
AffineMap make_affine_map(const QMat& linear, const QVec& shift); // rejects fractions
QVec apply(const AffineMap& map, const QVec& x);

// True iff the map restricts to a bijection of vertex sets and of
// affine-hull lattices (checked through a saturated lattice basis).
bool verify_integral_equivalence(const Polytope& p1, const Polytope& p2,
                                 const AffineMap& map);

// Vertex enumeration for an H-polytope: basic feasible solutions of the
// inequality system. Detects empty and unbounded input.
struct VertexEnumeration {
    bool empty = true;
    bool bounded = true;
    std::vector<QVec> vertices;
    std::vector<QVec> rays; // nonempty only when unbounded
};
VertexEnumeration vertex_enumeration(const HPolytope& h);

} // namespace rootpoly
