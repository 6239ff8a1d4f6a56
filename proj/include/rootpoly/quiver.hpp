#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rootpoly/exactlin.hpp"

namespace rootpoly {

struct Arrow {
    std::string tail, head;
    bool operator==(const Arrow&) const = default;
};

// Directed graph on normal vertices v_1..v_n and starred vertices. Arrows
// never join two starred vertices; construction enforces this by identifying
// the endpoints of any such arrow and dropping it, and removes duplicate
// arrows. Everything that happened is kept in normalization_log.
class StarredQuiver {
  public:
    StarredQuiver(std::vector<std::string> normal_vertices,
                  std::vector<std::string> starred_vertices,
                  std::vector<Arrow> arrows);

    const std::vector<std::string>& normal_vertices() const { return normal_; }
    const std::vector<std::string>& starred_vertices() const { return starred_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<std::string>& normalization_log() const { return log_; }

    std::size_t normal_count() const { return normal_.size(); }
    std::size_t star_count() const { return starred_.size(); }

    bool is_star(const std::string& v) const;
    bool has_vertex(const std::string& v) const;
    // Index of a normal vertex in the declared order (lattice coordinate).
    std::size_t normal_index(const std::string& v) const;

  private:
    std::vector<std::string> normal_, starred_;
    std::vector<Arrow> arrows_;
    std::vector<std::string> log_;
};

struct ArrowPoint {
    std::size_t arrow;
    IVec point; // e_j - e_i, e_j, or -e_i in the normal-vertex coordinates
};

// Projection data recorded by star_replace: Root(q) in R^n maps onto
// Root(result) in R^(n-1) by dropping the chosen coordinate.
struct StarReplacement {
    StarredQuiver quiver;
    std::string replaced_vertex;
    std::size_t dropped_coordinate;
};

// Merge all starred vertices into a single star named "*". Root(Q) is
// unchanged as a point set.
StarredQuiver identify_stars(const StarredQuiver& q);

// True iff the quiver with all stars identified is strongly connected.
// When false and witness is non-null, *witness is a vertex pair with no
// oriented path from first to second.
bool is_strongly_connected(const StarredQuiver& q,
                           std::pair<std::string, std::string>* witness = nullptr);

// One lattice point per arrow; for strongly-connected quivers each is a
// vertex of the hull.
std::vector<ArrowPoint> root_vertices(const StarredQuiver& q);

// Replace one vertex of a star-free quiver by a star.
StarReplacement star_replace(const StarredQuiver& q, const std::string& v);

// Star every source and sink of an acyclic star-free quiver.
StarredQuiver from_acyclic(const StarredQuiver& q);

// Quiver on v_1..v_n plus one star whose root polytope is
// Conv({+-e_i} and {+-(e_i - e_j)}).
StarredQuiver complete_bidirected(std::size_t n);

} // namespace rootpoly
