#include "rootpoly/polytope.hpp"

#include <algorithm>
#include <map>

namespace rootpoly {

namespace {

Int floor_rat(const Rat& q) {
    Int n = num(q), d = den(q);
    Int r = n / d;
    if (n % d != 0 && n < 0) --r;
    return r;
}

Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

// Affine dimension of a point set (-1 for the empty set).
long affine_dim(const std::vector<QVec>& pts) {
    if (pts.empty()) return -1;
    QMat diffs(pts.size() - 1, pts[0].size());
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts[0].size(); ++j)
            diffs.at(i - 1, j) = pts[i][j] - pts[0][j];
    return static_cast<long>(rank(diffs));
}

struct WorkFacet {
    IVec a;  // outward normal, primitive integer
    Rat b;   // a . y <= b on the hull
    std::vector<std::size_t> verts;
};

Rat eval(const IVec& a, const QVec& y) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * y[i];
    return s;
}

// Primitive integer normal of the hyperplane through base and base+dirs.
// Requires the kernel to be one-dimensional.
IVec hyperplane_normal(const std::vector<QVec>& dirs, std::size_t d) {
    QMat m(dirs.size(), d);
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) m.at(i, j) = dirs[i][j];
    std::vector<QVec> ker = kernel(m);
    internal_check(ker.size() == 1, "hyperplane_normal: kernel is not a line");
    return primitive(ker[0]);
}

// Beneath-beyond over exact rationals in full-dimensional coordinates.
std::vector<WorkFacet> beneath_beyond(const std::vector<QVec>& pts,
                                      const std::vector<std::size_t>& simplex,
                                      std::size_t d) {
    std::vector<WorkFacet> facets;
    // reference interior point: centroid of the starting simplex
    QVec center(d, Rat(0));
    for (std::size_t s : simplex) center = add(center, pts[s]);
    center = scale(center, Rat(1, Int(simplex.size())));

    auto facet_through = [&](const std::vector<std::size_t>& on_points) -> WorkFacet {
        std::vector<QVec> dirs;
        for (std::size_t i = 1; i < on_points.size(); ++i)
            dirs.push_back(sub(pts[on_points[i]], pts[on_points[0]]));
        IVec a = hyperplane_normal(dirs, d);
        Rat b = eval(a, pts[on_points[0]]);
        if (eval(a, center) > b) {
            for (Int& x : a) x = -x;
            b = -b;
        }
        internal_check(eval(a, center) < b, "beneath_beyond: reference point on facet");
        return WorkFacet{std::move(a), std::move(b), {}};
    };

    for (std::size_t omit = 0; omit < simplex.size(); ++omit) {
        std::vector<std::size_t> on;
        for (std::size_t k = 0; k < simplex.size(); ++k)
            if (k != omit) on.push_back(simplex[k]);
        WorkFacet f = facet_through(on);
        f.verts = on;
        facets.push_back(std::move(f));
    }

    std::vector<std::size_t> processed(simplex.begin(), simplex.end());
    std::vector<bool> done(pts.size(), false);
    for (std::size_t s : simplex) done[s] = true;

    for (std::size_t idx = 0; idx < pts.size(); ++idx) {
        if (done[idx]) continue;
        const QVec& p = pts[idx];
        std::vector<std::size_t> viol, keep;
        for (std::size_t f = 0; f < facets.size(); ++f)
            (eval(facets[f].a, p) > facets[f].b ? viol : keep).push_back(f);
        if (viol.empty()) {
            for (WorkFacet& f : facets)
                if (eval(f.a, p) == f.b) {
                    f.verts.push_back(idx);
                    std::sort(f.verts.begin(), f.verts.end());
                }
            processed.push_back(idx);
            done[idx] = true;
            continue;
        }

        std::map<std::pair<IVec, Rat>, WorkFacet> fresh;
        for (std::size_t vi : viol)
            for (std::size_t ki : keep) {
                std::vector<std::size_t> shared;
                std::set_intersection(facets[vi].verts.begin(), facets[vi].verts.end(),
                                      facets[ki].verts.begin(), facets[ki].verts.end(),
                                      std::back_inserter(shared));
                std::vector<QVec> shared_pts;
                for (std::size_t s : shared) shared_pts.push_back(pts[s]);
                if (affine_dim(shared_pts) != static_cast<long>(d) - 2) continue;
                std::vector<std::size_t> on = shared;
                on.push_back(idx);
                // hyperplane through the ridge and p
                std::vector<QVec> dirs;
                for (std::size_t s : shared) dirs.push_back(sub(pts[s], p));
                IVec a = hyperplane_normal(dirs, d);
                Rat b = eval(a, p);
                if (eval(a, center) > b) {
                    for (Int& x : a) x = -x;
                    b = -b;
                }
                internal_check(eval(a, center) < b,
                               "beneath_beyond: new facet through the reference point");
                fresh.try_emplace({a, b}, WorkFacet{a, b, {}});
            }

        std::vector<WorkFacet> next;
        for (std::size_t ki : keep) next.push_back(std::move(facets[ki]));
        for (auto& [key, f] : fresh) {
            // complete vertex set over everything processed so far
            for (std::size_t s : processed)
                if (eval(f.a, pts[s]) == f.b) f.verts.push_back(s);
            f.verts.push_back(idx);
            std::sort(f.verts.begin(), f.verts.end());
            next.push_back(std::move(f));
        }
        facets = std::move(next);
        for (WorkFacet& f : facets) {
            if (std::binary_search(f.verts.begin(), f.verts.end(), idx)) continue;
            if (eval(f.a, p) == f.b) {
                f.verts.push_back(idx);
                std::sort(f.verts.begin(), f.verts.end());
            }
        }
        processed.push_back(idx);
        done[idx] = true;
    }
    return facets;
}

} // namespace

Halfspace canonicalize(const Halfspace& h) {
    IVec n = primitive(h.normal);
    if (is_zero(n)) return {to_qvec(n), h.offset};
    // the positive rescaling factor applied to the normal also scales offset
    std::size_t j = 0;
    while (h.normal[j] == 0) ++j;
    Rat factor = Rat(n[j]) / h.normal[j];
    return {to_qvec(n), h.offset * factor};
}

bool Polytope::contains(const QVec& point) const {
    for (const Halfspace& e : h.equations)
        if (dot(e.normal, point) != -e.offset) return false;
    for (const Halfspace& f : h.inequalities)
        if (dot(f.normal, point) < -f.offset) return false;
    return true;
}

bool Polytope::origin_interior() const {
    if (dim != ambient_dim) return false;
    if (dim == 0) return false;
    for (const Halfspace& f : h.inequalities)
        if (f.offset <= 0) return false;
    return true;
}

Polytope hull(const std::vector<QVec>& input) {
    if (input.empty()) throw DomainError("hull: empty point set");
    std::size_t n = input[0].size();
    for (const QVec& p : input)
        internal_check(p.size() == n, "hull: points of mixed dimension");

    std::vector<QVec> pts = input;
    std::sort(pts.begin(), pts.end(), [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // affinely independent subset, greedily
    std::vector<std::size_t> ai{0};
    {
        QMat echelon(0, n);
        std::vector<QVec> rows;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            std::vector<QVec> trial = rows;
            trial.push_back(sub(pts[i], pts[0]));
            QMat m = QMat::from_rows(trial);
            if (rank(m) == trial.size()) {
                rows = std::move(trial);
                ai.push_back(i);
            }
        }
    }
    std::size_t d = ai.size() - 1;

    Polytope out;
    out.ambient_dim = n;
    out.dim = d;

    // chart: identity for full-dimensional hulls, saturated basis otherwise
    std::vector<QVec> reduced;
    if (d == n) {
        out.chart_origin = QVec(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i) {
            IVec e(n);
            e[i] = 1;
            out.chart_basis.push_back(std::move(e));
        }
        reduced = pts;
    } else {
        out.chart_origin = pts[0];
        std::vector<IVec> dirs;
        for (std::size_t i = 1; i < pts.size(); ++i)
            dirs.push_back(primitive(sub(pts[i], pts[0])));
        if (!dirs.empty()) {
            IMat dm = IMat::from_rows(dirs);
            out.chart_basis = saturated_row_basis(dm);
            internal_check(out.chart_basis.size() == d,
                           "hull: saturated basis has wrong size");
        }
        QMat bt(n, d); // columns are basis vectors
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t i = 0; i < n; ++i) bt.at(i, k) = Rat(out.chart_basis[k][i]);
        for (const QVec& p : pts) {
            auto y = solve_rational(bt, sub(p, pts[0]));
            internal_check(y.has_value(), "hull: point outside its affine hull");
            reduced.push_back(*y);
        }
    }

    std::vector<WorkFacet> facets;
    if (d > 0) facets = beneath_beyond(reduced, ai, d);

    // final incidence and vertex detection
    std::vector<std::vector<std::size_t>> on_planes(facets.size());
    std::vector<std::vector<std::size_t>> point_facets(pts.size());
    for (std::size_t f = 0; f < facets.size(); ++f)
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (eval(facets[f].a, reduced[i]) == facets[f].b) {
                on_planes[f].push_back(i);
                point_facets[i].push_back(f);
            }

    std::vector<std::size_t> vertex_ids;
    if (d == 0) {
        vertex_ids.push_back(0);
    } else {
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (point_facets[i].size() < d) continue;
            QMat normals(point_facets[i].size(), d);
            for (std::size_t r = 0; r < point_facets[i].size(); ++r)
                for (std::size_t c = 0; c < d; ++c)
                    normals.at(r, c) = Rat(facets[point_facets[i][r]].a[c]);
            if (rank(normals) == d) vertex_ids.push_back(i);
        }
    }

    // pts are already lex sorted, so vertex order is canonical
    std::vector<std::size_t> vertex_pos(pts.size(), SIZE_MAX);
    for (std::size_t k = 0; k < vertex_ids.size(); ++k) vertex_pos[vertex_ids[k]] = k;
    out.v.ambient_dim = n;
    for (std::size_t i : vertex_ids) {
        out.v.vertices.push_back(pts[i]);
        out.reduced_vertices.push_back(reduced[i]);
    }

    // ambient lift of each facet, then canonical joint sort
    struct Lifted {
        Halfspace ambient;
        Halfspace reduced;
        std::vector<std::size_t> verts;
    };
    std::vector<Lifted> lifted;
    QMat basis_rows(d, n);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < n; ++i) basis_rows.at(k, i) = Rat(out.chart_basis[k][i]);
    for (std::size_t f = 0; f < facets.size(); ++f) {
        QVec a_red = to_qvec(facets[f].a);
        QVec n_amb;
        if (d == n) {
            n_amb = a_red;
        } else {
            auto sol = solve_rational(basis_rows, a_red);
            internal_check(sol.has_value(), "hull: cannot lift facet normal");
            n_amb = *sol;
        }
        Rat c = facets[f].b + dot(n_amb, out.chart_origin);
        QVec inner(n);
        for (std::size_t i = 0; i < n; ++i) inner[i] = -n_amb[i];
        Halfspace amb = canonicalize({inner, c});
        Halfspace red;
        {
            QVec inner_red(d);
            for (std::size_t i = 0; i < d; ++i) inner_red[i] = -Rat(facets[f].a[i]);
            red = canonicalize({inner_red, facets[f].b});
        }
        std::vector<std::size_t> vids;
        for (std::size_t i : on_planes[f])
            if (vertex_pos[i] != SIZE_MAX) vids.push_back(vertex_pos[i]);
        std::sort(vids.begin(), vids.end());
        lifted.push_back({std::move(amb), std::move(red), std::move(vids)});
    }
    std::sort(lifted.begin(), lifted.end(), [](const Lifted& x, const Lifted& y) {
        if (x.ambient.normal != y.ambient.normal)
            return lex_less(x.ambient.normal, y.ambient.normal);
        return x.ambient.offset < y.ambient.offset;
    });
    out.h.ambient_dim = n;
    for (Lifted& l : lifted) {
        out.h.inequalities.push_back(l.ambient);
        out.reduced_facets.push_back(l.reduced);
        out.facet_vertices.push_back(l.verts);
    }

    // affine-hull equations when lower-dimensional
    if (d < n) {
        std::vector<QVec> rows;
        for (const IVec& b : out.chart_basis) rows.push_back(to_qvec(b));
        QMat bm = rows.empty() ? QMat(0, n) : QMat::from_rows(rows);
        for (const QVec& m : kernel(bm)) {
            IVec mi = primitive(m);
            Rat c = -dot(to_qvec(mi), out.chart_origin);
            out.h.equations.push_back({to_qvec(mi), c});
        }
        std::sort(out.h.equations.begin(), out.h.equations.end(),
                  [](const Halfspace& x, const Halfspace& y) {
                      if (x.normal != y.normal) return lex_less(x.normal, y.normal);
                      return x.offset < y.offset;
                  });
    }

    // cross-validation of the dual descriptions
    for (std::size_t k = 0; k < out.v.vertices.size(); ++k)
        internal_check(out.contains(out.v.vertices[k]), "hull: vertex violates H-rep");
    if (d > 0)
        for (const auto& fv : out.facet_vertices) {
            std::vector<QVec> fp;
            for (std::size_t k : fv) fp.push_back(out.v.vertices[k]);
            internal_check(affine_dim(fp) == static_cast<long>(d) - 1,
                           "hull: facet with deficient vertex set");
        }
    return out;
}

VPolytope polar_dual(const Polytope& p) {
    if (p.dim != p.ambient_dim)
        throw DomainError("polar_dual: polytope is not full-dimensional");
    if (!p.origin_interior())
        throw DomainError("polar_dual: origin is not strictly interior");
    std::vector<QVec> duals;
    for (const Halfspace& f : p.h.inequalities) {
        QVec v(p.ambient_dim);
        for (std::size_t i = 0; i < p.ambient_dim; ++i) v[i] = f.normal[i] / f.offset;
        duals.push_back(std::move(v));
    }
    std::sort(duals.begin(), duals.end(), [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    return VPolytope{p.ambient_dim, std::move(duals)};
}

VPolytope polar_dual(const VPolytope& p) { return polar_dual(hull(p.vertices)); }

std::vector<IVec> lattice_points(const Polytope& p) {
    std::size_t n = p.ambient_dim;
    if (p.v.vertices.empty()) return {};
    std::vector<Int> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat mn = p.v.vertices[0][i], mx = mn;
        for (const QVec& v : p.v.vertices) {
            mn = std::min(mn, v[i]);
            mx = std::max(mx, v[i]);
        }
        lo[i] = ceil_rat(mn);
        hi[i] = floor_rat(mx);
    }
    struct Constraint {
        QVec normal;
        Rat offset;
        bool equality;
    };
    std::vector<Constraint> cons;
    for (const Halfspace& f : p.h.inequalities) cons.push_back({f.normal, f.offset, false});
    for (const Halfspace& e : p.h.equations) cons.push_back({e.normal, e.offset, true});

    std::vector<IVec> found;
    IVec x(n);
    // prefix scan: prune a slab as soon as no completion can satisfy a
    // constraint, using per-coordinate interval bounds for the free suffix
    auto rec = [&](auto&& self, std::size_t k) -> void {
        for (const Constraint& c : cons) {
            Rat fixed = 0;
            for (std::size_t i = 0; i < k; ++i) fixed += c.normal[i] * Rat(x[i]);
            Rat max_rest = 0, min_rest = 0;
            for (std::size_t i = k; i < n; ++i) {
                if (lo[i] > hi[i]) return; // empty box
                Rat a = c.normal[i] * Rat(lo[i]), b = c.normal[i] * Rat(hi[i]);
                max_rest += std::max(a, b);
                min_rest += std::min(a, b);
            }
            if (fixed + max_rest < -c.offset) return;
            if (c.equality && fixed + min_rest > -c.offset) return;
        }
        if (k == n) {
            found.push_back(x);
            return;
        }
        for (Int v = lo[k]; v <= hi[k]; ++v) {
            x[k] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);

    std::vector<IVec> inside;
    for (const IVec& c : found) {
        QVec q = to_qvec(c);
        if (p.contains(q)) inside.push_back(c);
    }
    std::sort(inside.begin(), inside.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    return inside;
}

std::vector<IVec> lattice_points(const HPolytope& h) {
    VertexEnumeration ve = vertex_enumeration(h);
    if (!ve.bounded) throw DomainError("lattice_points: polyhedron is unbounded");
    if (ve.empty) return {};
    Polytope p = hull(ve.vertices);
    return lattice_points(p);
}

ReflexivityCertificate is_reflexive(const Polytope& p) {
    for (const QVec& v : p.v.vertices)
        if (!to_ivec(v)) throw DomainError("is_reflexive: not a lattice polytope");
    ReflexivityCertificate cert;
    if (p.dim != p.ambient_dim) {
        cert.reason = "not full-dimensional";
        return cert;
    }
    if (!p.origin_interior()) {
        cert.reason = "origin is not strictly interior";
        return cert;
    }
    for (const Halfspace& f : p.h.inequalities) {
        QVec v(p.ambient_dim);
        for (std::size_t i = 0; i < p.ambient_dim; ++i) v[i] = f.normal[i] / f.offset;
        auto iv = to_ivec(v);
        if (!iv) {
            cert.fractional_vertex = v;
            cert.reason = "polar dual has a fractional vertex";
            return cert;
        }
        cert.dual_vertices.push_back(*iv);
    }
    std::sort(cert.dual_vertices.begin(), cert.dual_vertices.end(),
              [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    cert.reflexive = true;
    return cert;
}

bool is_terminal(const Polytope& p) {
    for (const QVec& v : p.v.vertices)
        if (!to_ivec(v)) throw DomainError("is_terminal: not a lattice polytope");
    if (!p.origin_interior())
        throw DomainError("is_terminal: origin is not strictly interior");
    std::vector<IVec> pts = lattice_points(p);
    std::vector<IVec> expect;
    for (const QVec& v : p.v.vertices) expect.push_back(*to_ivec(v));
    expect.push_back(IVec(p.ambient_dim, Int(0)));
    std::sort(expect.begin(), expect.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    return pts == expect;
}

FaceLattice face_lattice(const Polytope& p) {
    FaceLattice fl;
    std::size_t d = p.dim;
    if (d == 0) return fl;
    fl.levels.resize(d);
    for (const auto& fv : p.facet_vertices)
        fl.levels[d - 1].push_back(Face{{fv.begin(), fv.end()}, d - 1, {}});

    auto vdim = [&](const std::set<std::size_t>& vs) {
        std::vector<QVec> pts;
        for (std::size_t i : vs) pts.push_back(p.reduced_vertices[i]);
        return affine_dim(pts);
    };

    for (std::size_t level = d - 1; level > 0; --level) {
        std::map<std::set<std::size_t>, std::size_t> seen;
        for (Face& f : fl.levels[level]) {
            std::set<std::size_t> childset;
            for (const auto& fv : p.facet_vertices) {
                std::set<std::size_t> inter;
                std::set_intersection(f.vertices.begin(), f.vertices.end(), fv.begin(),
                                      fv.end(), std::inserter(inter, inter.begin()));
                if (inter.empty() || inter == f.vertices) continue;
                if (vdim(inter) != static_cast<long>(level) - 1) continue;
                auto [it, fresh] = seen.try_emplace(inter, fl.levels[level - 1].size());
                if (fresh)
                    fl.levels[level - 1].push_back(
                        Face{inter, level - 1, {}});
                childset.insert(it->second);
            }
            f.children.assign(childset.begin(), childset.end());
        }
    }
    internal_check(fl.levels[0].size() == p.v.vertices.size(),
                   "face_lattice: vertex level does not match the vertex set");
    return fl;
}

std::vector<std::size_t> f_vector(const Polytope& p) {
    FaceLattice fl = face_lattice(p);
    std::vector<std::size_t> f;
    for (const auto& level : fl.levels) f.push_back(level.size());
    return f;
}

namespace {

std::vector<std::vector<std::size_t>> pull_face(const Polytope& p, const FaceLattice& fl,
                                                std::size_t level, std::size_t idx,
                                                std::map<std::pair<std::size_t, std::size_t>,
                                                         std::vector<std::vector<std::size_t>>>& memo) {
    auto key = std::make_pair(level, idx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const Face& f = fl.levels[level][idx];
    std::vector<std::vector<std::size_t>> out;
    if (f.vertices.size() == f.dim + 1) {
        out.push_back({f.vertices.begin(), f.vertices.end()});
    } else {
        std::size_t apex = *f.vertices.begin();
        for (std::size_t child : f.children) {
            const Face& c = fl.levels[level - 1][child];
            if (c.vertices.count(apex)) continue;
            for (auto s : pull_face(p, fl, level - 1, child, memo)) {
                s.push_back(apex);
                std::sort(s.begin(), s.end());
                out.push_back(std::move(s));
            }
        }
    }
    memo[key] = out;
    return out;
}

} // namespace

std::vector<std::vector<std::size_t>> pulling_triangulation(const Polytope& p,
                                                            const FaceLattice& fl,
                                                            std::size_t level,
                                                            std::size_t face_index) {
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<std::size_t>>> memo;
    return pull_face(p, fl, level, face_index, memo);
}

std::vector<std::vector<std::size_t>> pulling_triangulation(const Polytope& p) {
    if (p.dim == 0) return {{0}};
    FaceLattice fl = face_lattice(p);
    if (p.v.vertices.size() == p.dim + 1) {
        std::vector<std::size_t> all(p.v.vertices.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return {all};
    }
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<std::size_t>>> memo;
    std::vector<std::vector<std::size_t>> out;
    std::size_t apex = 0; // vertices are lex sorted; 0 is the least
    for (std::size_t f = 0; f < fl.levels[p.dim - 1].size(); ++f) {
        const Face& facet = fl.levels[p.dim - 1][f];
        if (facet.vertices.count(apex)) continue;
        for (auto s : pull_face(p, fl, p.dim - 1, f, memo)) {
            s.push_back(apex);
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
        }
    }
    return out;
}

Int normalized_volume(const Polytope& p) {
    if (p.dim == 0) return 0;
    Rat total = 0;
    for (const auto& simplex : pulling_triangulation(p)) {
        internal_check(simplex.size() == p.dim + 1, "normalized_volume: non-simplex cell");
        QMat qm(p.dim, p.dim);
        for (std::size_t i = 1; i <= p.dim; ++i)
            for (std::size_t j = 0; j < p.dim; ++j)
                qm.at(i - 1, j) = p.reduced_vertices[simplex[i]][j] -
                                  p.reduced_vertices[simplex[0]][j];
        // clear denominators row by row, take the integer determinant,
        // divide the scaling back out
        IMat im(p.dim, p.dim);
        Rat scale_back = 1;
        for (std::size_t i = 0; i < p.dim; ++i) {
            Int lcm = 1;
            for (std::size_t j = 0; j < p.dim; ++j)
                lcm = boost::multiprecision::lcm(lcm, den(qm.at(i, j)));
            for (std::size_t j = 0; j < p.dim; ++j)
                im.at(i, j) = num(qm.at(i, j)) * (lcm / den(qm.at(i, j)));
            scale_back /= Rat(lcm);
        }
        total += Rat(boost::multiprecision::abs(determinant(im))) * scale_back;
    }
    internal_check(is_integral(total), "normalized_volume: non-integral total");
    return to_int(total);
}

AffineMap make_affine_map(const QMat& linear, const QVec& shift) {
    IMat l(linear.rows, linear.cols);
    for (std::size_t i = 0; i < linear.data.size(); ++i) {
        if (!is_integral(linear.data[i]))
            throw DomainError("affine map has a fractional linear entry");
        l.data[i] = num(linear.data[i]);
    }
    auto s = to_ivec(shift);
    if (!s) throw DomainError("affine map has a fractional shift entry");
    return AffineMap{std::move(l), *s};
}

QVec apply(const AffineMap& map, const QVec& x) {
    internal_check(map.linear.cols == x.size(), "apply: dimension mismatch");
    QVec out(map.linear.rows);
    for (std::size_t i = 0; i < map.linear.rows; ++i) {
        Rat s = Rat(map.shift[i]);
        for (std::size_t j = 0; j < map.linear.cols; ++j) s += Rat(map.linear.at(i, j)) * x[j];
        out[i] = s;
    }
    return out;
}

bool verify_integral_equivalence(const Polytope& p1, const Polytope& p2,
                                 const AffineMap& map) {
    std::vector<IVec> v1, v2;
    for (const QVec& v : p1.v.vertices) {
        auto iv = to_ivec(v);
        if (!iv) throw DomainError("verify_integral_equivalence: p1 is not a lattice polytope");
        v1.push_back(*iv);
    }
    for (const QVec& v : p2.v.vertices) {
        auto iv = to_ivec(v);
        if (!iv) throw DomainError("verify_integral_equivalence: p2 is not a lattice polytope");
        v2.push_back(*iv);
    }
    if (map.linear.cols != p1.ambient_dim || map.linear.rows != p2.ambient_dim) return false;

    std::vector<IVec> mapped;
    for (const IVec& v : v1) mapped.push_back(add(mul(map.linear, v), map.shift));
    std::sort(mapped.begin(), mapped.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
    if (mapped.size() != v1.size()) return false; // not injective on vertices
    if (mapped != v2) return false;               // v2 is already sorted

    if (p1.dim != p2.dim) return false;
    if (p1.dim == 0) return true;

    // saturated lattice bases of both affine hulls
    auto lattice_basis = [](const std::vector<IVec>& verts) {
        std::vector<IVec> dirs;
        for (std::size_t i = 1; i < verts.size(); ++i) dirs.push_back(sub(verts[i], verts[0]));
        return saturated_row_basis(IMat::from_rows(dirs));
    };
    std::vector<IVec> b1 = lattice_basis(v1), b2 = lattice_basis(v2);
    if (b1.size() != p1.dim || b2.size() != p2.dim) return false;

    // express the image of each basis vector of L1 in the basis of L2
    IMat m(b1.size(), b2.size());
    for (std::size_t i = 0; i < b1.size(); ++i) {
        IVec img = mul(map.linear, b1[i]);
        auto coords = in_lattice(b2, img);
        if (!coords) return false;
        for (std::size_t j = 0; j < b2.size(); ++j) m.at(i, j) = (*coords)[j];
    }
    Int det = determinant(m);
    return det == 1 || det == -1;
}

VertexEnumeration vertex_enumeration(const HPolytope& h) {
    std::size_t n = h.ambient_dim;
    VertexEnumeration out;

    std::vector<QVec> eq_rows;
    QVec eq_rhs;
    for (const Halfspace& e : h.equations) {
        eq_rows.push_back(e.normal);
        eq_rhs.push_back(-e.offset);
    }

    // lineality check: if all constraint normals together do not span R^n,
    // the polyhedron contains a line (or is empty) and has no vertices
    {
        std::vector<QVec> all = eq_rows;
        for (const Halfspace& f : h.inequalities) all.push_back(f.normal);
        if (all.empty() || rank(QMat::from_rows(all)) < n)
            throw DomainError("vertex_enumeration: constraint normals do not span; "
                              "polyhedron has a lineality space");
    }

    auto feasible = [&](const QVec& x) {
        for (const Halfspace& e : h.equations)
            if (dot(e.normal, x) != -e.offset) return false;
        for (const Halfspace& f : h.inequalities)
            if (dot(f.normal, x) < -f.offset) return false;
        return true;
    };

    std::size_t m = h.inequalities.size();
    std::vector<QVec> vertices;

    // DFS over inequality subsets, tracking rank to prune early
    std::vector<std::size_t> chosen;
    auto current_rank = [&]() {
        std::vector<QVec> rows = eq_rows;
        for (std::size_t i : chosen) rows.push_back(h.inequalities[i].normal);
        return rows.empty() ? 0 : rank(QMat::from_rows(rows));
    };
    std::size_t base_rank = eq_rows.empty() ? 0 : rank(QMat::from_rows(eq_rows));

    auto rec = [&](auto&& self, std::size_t start, std::size_t have) -> void {
        if (have == n) {
            std::vector<QVec> rows = eq_rows;
            QVec rhs = eq_rhs;
            for (std::size_t i : chosen) {
                rows.push_back(h.inequalities[i].normal);
                rhs.push_back(-h.inequalities[i].offset);
            }
            auto sol = solve_rational(QMat::from_rows(rows), rhs);
            if (sol && feasible(*sol)) vertices.push_back(*sol);
            return;
        }
        for (std::size_t i = start; i < m; ++i) {
            if (m - i < n - have) break;
            chosen.push_back(i);
            std::size_t r = current_rank();
            if (r > have) self(self, i + 1, r);
            chosen.pop_back();
        }
    };
    rec(rec, 0, base_rank);

    std::sort(vertices.begin(), vertices.end(), [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    out.vertices = std::move(vertices);
    out.empty = out.vertices.empty();
    if (out.empty) return out;

    // recession directions: kernel directions of rank n-1 subsystems that
    // satisfy every inequality at >= 0
    std::vector<QVec> rays;
    std::vector<std::size_t> pick;
    auto ray_rec = [&](auto&& self, std::size_t start, std::size_t have) -> void {
        if (have == n - 1) {
            std::vector<QVec> rows = eq_rows;
            for (std::size_t i : pick) rows.push_back(h.inequalities[i].normal);
            QMat mker = rows.empty() ? QMat(0, n) : QMat::from_rows(rows);
            for (const QVec& k : kernel(mker)) {
                for (int sign = -1; sign <= 1; sign += 2) {
                    QVec dir = scale(k, Rat(sign));
                    bool ok = true;
                    for (const Halfspace& e : h.equations)
                        if (dot(e.normal, dir) != 0) ok = false;
                    for (const Halfspace& f : h.inequalities)
                        if (dot(f.normal, dir) < 0) ok = false;
                    if (ok && !is_zero(dir)) rays.push_back(to_qvec(primitive(dir)));
                }
            }
            return;
        }
        for (std::size_t i = start; i < m; ++i) {
            if (m - i < (n - 1) - have) break;
            pick.push_back(i);
            std::vector<QVec> rows = eq_rows;
            for (std::size_t j : pick) rows.push_back(h.inequalities[j].normal);
            std::size_t r = rank(QMat::from_rows(rows));
            if (r > have) self(self, i + 1, r);
            pick.pop_back();
        }
    };
    if (n >= 1 && base_rank <= n - 1) ray_rec(ray_rec, 0, base_rank);
    std::sort(rays.begin(), rays.end(), [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    out.rays = std::move(rays);
    out.bounded = out.rays.empty();
    return out;
}

} // namespace rootpoly
