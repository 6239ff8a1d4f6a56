#include "rootpoly/quiver.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace rootpoly {

namespace {

// Union-find over vertex names, used for star-star identification.
struct NameUnion {
    std::map<std::string, std::string> parent;
    const std::string& find(const std::string& v) {
        auto it = parent.find(v);
        if (it == parent.end() || it->second == v) {
            parent.emplace(v, v);
            return parent.find(v)->first;
        }
        std::string root = find(it->second);
        parent[v] = root;
        return parent.find(v)->second;
    }
    void unite(const std::string& a, const std::string& b) {
        std::string ra = find(a), rb = find(b);
        if (ra != rb) parent[rb] = ra;
    }
};

} // namespace

StarredQuiver::StarredQuiver(std::vector<std::string> normal_vertices,
                             std::vector<std::string> starred_vertices,
                             std::vector<Arrow> arrows)
    : normal_(std::move(normal_vertices)), starred_(std::move(starred_vertices)) {
    std::set<std::string> seen;
    for (const auto& v : normal_)
        if (!seen.insert(v).second) throw DomainError("duplicate vertex id: " + v);
    for (const auto& v : starred_)
        if (!seen.insert(v).second) throw DomainError("duplicate vertex id: " + v);

    for (const Arrow& a : arrows) {
        if (!seen.count(a.tail)) throw DomainError("arrow tail is not a vertex: " + a.tail);
        if (!seen.count(a.head)) throw DomainError("arrow head is not a vertex: " + a.head);
        if (a.tail == a.head) throw DomainError("loop arrow at " + a.tail);
    }

    // Identify the endpoints of star-star arrows and drop those arrows.
    std::set<std::string> star_set(starred_.begin(), starred_.end());
    NameUnion uf;
    bool merged_any = false;
    for (const Arrow& a : arrows)
        if (star_set.count(a.tail) && star_set.count(a.head)) {
            log_.push_back("identified starred vertices " + a.tail + " and " + a.head +
                           " joined by an arrow; arrow removed");
            uf.unite(a.tail, a.head);
            merged_any = true;
        }
    if (merged_any) {
        std::vector<std::string> kept;
        for (const auto& s : starred_)
            if (uf.find(s) == s) kept.push_back(s);
        starred_ = kept;
        star_set = std::set<std::string>(starred_.begin(), starred_.end());
    }

    std::set<std::pair<std::string, std::string>> arrow_set;
    for (Arrow a : arrows) {
        if (star_set.count(uf.find(a.tail)) && star_set.count(uf.find(a.head))) {
            if (uf.find(a.tail) == uf.find(a.head)) continue; // removed star-star arrow
        }
        a.tail = uf.find(a.tail);
        a.head = uf.find(a.head);
        if (!arrow_set.insert({a.tail, a.head}).second) {
            log_.push_back("removed duplicate arrow " + a.tail + " -> " + a.head);
            continue;
        }
        arrows_.push_back(a);
    }

    if (normal_.empty())
        throw DomainError("quiver has no normal vertices after normalization");

    // Connectivity of the underlying undirected graph.
    std::map<std::string, std::vector<std::string>> adj;
    for (const Arrow& a : arrows_) {
        adj[a.tail].push_back(a.head);
        adj[a.head].push_back(a.tail);
    }
    std::set<std::string> reached;
    std::queue<std::string> bfs;
    bfs.push(normal_[0]);
    reached.insert(normal_[0]);
    while (!bfs.empty()) {
        std::string v = bfs.front();
        bfs.pop();
        for (const auto& w : adj[v])
            if (reached.insert(w).second) bfs.push(w);
    }
    if (reached.size() != normal_.size() + starred_.size())
        throw DomainError("underlying graph of the quiver is not connected");
}

bool StarredQuiver::is_star(const std::string& v) const {
    return std::find(starred_.begin(), starred_.end(), v) != starred_.end();
}

bool StarredQuiver::has_vertex(const std::string& v) const {
    return is_star(v) ||
           std::find(normal_.begin(), normal_.end(), v) != normal_.end();
}

std::size_t StarredQuiver::normal_index(const std::string& v) const {
    auto it = std::find(normal_.begin(), normal_.end(), v);
    internal_check(it != normal_.end(), "normal_index: not a normal vertex: " + v);
    return static_cast<std::size_t>(it - normal_.begin());
}

StarredQuiver identify_stars(const StarredQuiver& q) {
    if (q.star_count() == 0) throw DomainError("identify_stars: quiver has no stars");
    if (q.star_count() == 1) return q;
    std::vector<Arrow> arrows;
    for (Arrow a : q.arrows()) {
        if (q.is_star(a.tail)) a.tail = "*";
        if (q.is_star(a.head)) a.head = "*";
        arrows.push_back(a);
    }
    return StarredQuiver(q.normal_vertices(), {"*"}, arrows);
}

bool is_strongly_connected(const StarredQuiver& q,
                           std::pair<std::string, std::string>* witness) {
    StarredQuiver merged = q.star_count() > 1 ? identify_stars(q) : q;
    std::vector<std::string> verts = merged.normal_vertices();
    for (const auto& s : merged.starred_vertices()) verts.push_back(s);
    std::map<std::string, std::vector<std::string>> fwd, bwd;
    for (const Arrow& a : merged.arrows()) {
        fwd[a.tail].push_back(a.head);
        bwd[a.head].push_back(a.tail);
    }
    auto reach = [&](const std::string& start,
                     std::map<std::string, std::vector<std::string>>& adj) {
        std::set<std::string> seen{start};
        std::queue<std::string> bfs;
        bfs.push(start);
        while (!bfs.empty()) {
            std::string v = bfs.front();
            bfs.pop();
            for (const auto& w : adj[v])
                if (seen.insert(w).second) bfs.push(w);
        }
        return seen;
    };
    std::set<std::string> down = reach(verts[0], fwd);
    for (const auto& v : verts)
        if (!down.count(v)) {
            if (witness) *witness = {verts[0], v};
            return false;
        }
    std::set<std::string> up = reach(verts[0], bwd);
    for (const auto& v : verts)
        if (!up.count(v)) {
            if (witness) *witness = {v, verts[0]};
            return false;
        }
    return true;
}

std::vector<ArrowPoint> root_vertices(const StarredQuiver& q) {
    std::size_t n = q.normal_count();
    std::vector<ArrowPoint> out;
    out.reserve(q.arrows().size());
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
        const Arrow& a = q.arrows()[k];
        IVec u(n, Int(0));
        if (!q.is_star(a.tail)) u[q.normal_index(a.tail)] -= 1;
        if (!q.is_star(a.head)) u[q.normal_index(a.head)] += 1;
        out.push_back({k, std::move(u)});
    }
    return out;
}

StarReplacement star_replace(const StarredQuiver& q, const std::string& v) {
    if (q.star_count() != 0)
        throw DomainError("star_replace: quiver already has starred vertices");
    auto normals = q.normal_vertices();
    auto it = std::find(normals.begin(), normals.end(), v);
    if (it == normals.end()) throw DomainError("star_replace: no vertex named " + v);
    std::size_t dropped = static_cast<std::size_t>(it - normals.begin());
    normals.erase(it);
    return StarReplacement{StarredQuiver(normals, {v}, q.arrows()), v, dropped};
}

StarredQuiver from_acyclic(const StarredQuiver& q) {
    if (q.star_count() != 0)
        throw DomainError("from_acyclic: input must be a plain quiver");
    // Kahn's algorithm both checks acyclicity and finds sources.
    std::map<std::string, int> indeg, outdeg;
    for (const auto& v : q.normal_vertices()) indeg[v] = outdeg[v] = 0;
    for (const Arrow& a : q.arrows()) {
        ++indeg[a.head];
        ++outdeg[a.tail];
    }
    std::queue<std::string> ready;
    std::map<std::string, int> left = indeg;
    for (const auto& [v, d] : left)
        if (d == 0) ready.push(v);
    std::size_t seen = 0;
    while (!ready.empty()) {
        std::string v = ready.front();
        ready.pop();
        ++seen;
        for (const Arrow& a : q.arrows())
            if (a.tail == v && --left[a.head] == 0) ready.push(a.head);
    }
    if (seen != q.normal_count())
        throw DomainError("from_acyclic: quiver has an oriented cycle");

    std::vector<std::string> normals, stars;
    for (const auto& v : q.normal_vertices()) {
        if (indeg[v] == 0 || outdeg[v] == 0)
            stars.push_back(v);
        else
            normals.push_back(v);
    }
    // The constructor handles stars that end up joined by an arrow; an input
    // like a single arrow collapses to a quiver with no normal vertices and
    // is rejected there.
    return StarredQuiver(normals, stars, q.arrows());
}

StarredQuiver complete_bidirected(std::size_t n) {
    if (n < 1) throw DomainError("complete_bidirected: n must be at least 1");
    std::vector<std::string> normals;
    for (std::size_t i = 1; i <= n; ++i) normals.push_back("v" + std::to_string(i));
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) arrows.push_back({normals[i], normals[j]});
    for (std::size_t i = 0; i < n; ++i) {
        arrows.push_back({"*", normals[i]});
        arrows.push_back({normals[i], "*"});
    }
    return StarredQuiver(normals, {"*"}, arrows);
}

} // namespace rootpoly
