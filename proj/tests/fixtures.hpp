#pragma once

// The worked examples that recur throughout the test suites, plus seeded
// random generators for quivers and posets.

#include <random>
#include <string>
#include <vector>

#include "rootpoly/quiver.hpp"

namespace fixtures {

using rootpoly::Arrow;
using rootpoly::StarredQuiver;

// Six normal vertices, three stars, nine arrows; the running example whose
// facet table has 18 rows and whose f-vector is (9,34,70,84,57,18).
inline StarredQuiver running_example() {
    return StarredQuiver(
        {"v1", "v2", "v3", "v4", "v5", "v6"}, {"s1", "s2", "s3"},
        {{"s1", "v1"},
         {"v1", "v2"},
         {"v2", "v3"},
         {"v3", "v4"},
         {"v4", "s2"},
         {"v1", "v5"},
         {"v2", "v6"},
         {"v5", "v6"},
         {"v6", "s3"}});
}

// The quadrilateral companion: Root = Conv{e1, -e1, e2-e1, -e2}.
inline StarredQuiver quadrilateral_example() {
    return StarredQuiver({"v1", "v2"}, {"s"},
                         {{"s", "v1"}, {"v1", "s"}, {"v1", "v2"}, {"v2", "s"}});
}

// Two-bullet segment quiver: Root = [-1, 1].
inline StarredQuiver segment_quiver() {
    return StarredQuiver({"v"}, {"s"}, {{"s", "v"}, {"v", "s"}});
}

// Rank-3 example with three bullets in a row, double arrows between
// consecutive bullets, and stars at both ends; seven arrows a0..a6.
inline StarredQuiver galkin_quiver() {
    return StarredQuiver({"v1", "v2", "v3"}, {"s1", "s2"},
                         {{"s1", "v1"},  // a0
                          {"v1", "v2"},  // a1
                          {"v2", "v1"},  // a2
                          {"v2", "v3"},  // a3
                          {"v3", "v2"},  // a4
                          {"v3", "s2"},  // a5
                          {"s2", "v3"}}); // a6
}

// The acyclic quiver on six vertices whose sinks/sources get starred.
inline StarredQuiver acyclic_six() {
    return StarredQuiver({"A", "B", "C", "D", "E", "F"}, {},
                         {{"A", "B"},
                          {"C", "A"},
                          {"C", "B"},
                          {"D", "A"},
                          {"D", "C"},
                          {"D", "E"},
                          {"E", "A"},
                          {"E", "B"},
                          {"E", "C"},
                          {"E", "F"},
                          {"F", "B"},
                          {"F", "C"}});
}

// Seeded random strongly-connected starred quivers with n normal vertices.
struct QuiverGen {
    std::mt19937_64 rng;
    explicit QuiverGen(unsigned seed) : rng(seed) {}

    StarredQuiver strongly_connected(std::size_t max_normals) {
        for (;;) {
            std::uniform_int_distribution<std::size_t> nd(1, max_normals);
            std::size_t n = nd(rng);
            std::uniform_int_distribution<std::size_t> ld(1, 2);
            std::size_t l = ld(rng);
            std::vector<std::string> normals, stars;
            for (std::size_t i = 0; i < n; ++i) normals.push_back("v" + std::to_string(i));
            for (std::size_t i = 0; i < l; ++i) stars.push_back("s" + std::to_string(i));
            std::vector<std::string> all = normals;
            all.insert(all.end(), stars.begin(), stars.end());
            std::uniform_real_distribution<double> coin(0.0, 1.0);
            double density = 0.25 + 0.5 * coin(rng);
            std::vector<Arrow> arrows;
            for (const auto& a : all)
                for (const auto& b : all) {
                    if (a == b) continue;
                    bool astar = a[0] == 's', bstar = b[0] == 's';
                    if (astar && bstar) continue;
                    if (coin(rng) < density) arrows.push_back({a, b});
                }
            if (arrows.empty()) continue;
            try {
                StarredQuiver q(normals, stars, arrows);
                if (rootpoly::is_strongly_connected(q)) return q;
            } catch (const rootpoly::DomainError&) {
                continue;
            }
        }
    }
};

} // namespace fixtures
