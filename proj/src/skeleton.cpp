#include "tropcurves/skeleton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tropcurves {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

Skeleton::Skeleton(std::vector<std::string> vertex_labels, std::vector<Edge> edges,
                   std::vector<Ray> rays, int base_vertex)
    : labels_(std::move(vertex_labels)), edges_(std::move(edges)), rays_(std::move(rays)),
      base_(base_vertex) {
    const int n = vertex_count();
    if (n == 0) throw std::invalid_argument("skeleton needs at least one vertex");
    if (base_ < 0 || base_ >= n) throw std::invalid_argument("base vertex out of range");

    UnionFind uf(n);
    int merges = 0;
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.length <= 0) throw std::invalid_argument("edge length must be positive");
        if (uf.unite(e.u, e.v)) ++merges;
    }
    if (merges != n - 1) throw std::invalid_argument("skeleton graph must be connected");
    betti_ = static_cast<int>(edges_.size()) - merges;

    std::set<std::string> seen;
    for (const Ray& r : rays_) {
        if (r.base < 0 || r.base >= n) throw std::invalid_argument("ray base out of range");
        if (!seen.insert(r.puncture).second)
            throw std::invalid_argument("puncture '" + r.puncture + "' labels two rays");
    }

    incident_.assign(n, {});
    rays_at_.assign(n, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        incident_[edges_[i].u].push_back(static_cast<int>(i));
        if (edges_[i].v != edges_[i].u) incident_[edges_[i].v].push_back(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < rays_.size(); ++i)
        rays_at_[rays_[i].base].push_back(static_cast<int>(i));
}

int Skeleton::ray_of_puncture(const std::string& puncture) const {
    for (std::size_t i = 0; i < rays_.size(); ++i)
        if (rays_[i].puncture == puncture) return static_cast<int>(i);
    return -1;
}

int Skeleton::vertex_with_ray(const std::string& puncture) const {
    int r = ray_of_puncture(puncture);
    if (r < 0) throw UnknownPuncture("no ray labeled '" + puncture + "'");
    return rays_[r].base;
}

Skeleton Skeleton::subdivided(int edge, const Rat& position) const {
    if (edge < 0 || edge >= static_cast<int>(edges_.size()))
        throw std::invalid_argument("edge id out of range");
    const Edge& e = edges_[edge];
    if (position <= 0 || position >= e.length)
        throw PositionOutOfRange("subdivision position " + rat_string(position) +
                                 " not interior to edge of length " + rat_string(e.length));
    std::vector<std::string> labels = labels_;
    labels.push_back("v" + std::to_string(labels.size()));
    int w = static_cast<int>(labels.size()) - 1;
    std::vector<Edge> edges = edges_;
    edges[edge] = Edge{e.u, w, position};
    edges.push_back(Edge{w, e.v, e.length - position});
    return Skeleton(std::move(labels), std::move(edges), rays_, base_);
}

Skeleton build_p1_skeleton(const std::vector<std::pair<std::string, PuiseuxElement>>& finite_punctures,
                           bool include_infinity, const std::string& infinity_label) {
    const int m = static_cast<int>(finite_punctures.size());
    const int total = m + (include_infinity ? 1 : 0);
    if (total < 2)
        throw TooFewPunctures("need at least 2 punctures, got " + std::to_string(total));

    {
        std::set<std::string> names;
        for (const auto& [name, elt] : finite_punctures)
            if (!names.insert(name).second)
                throw std::invalid_argument("duplicate puncture label '" + name + "'");
        if (include_infinity && names.count(infinity_label))
            throw std::invalid_argument("puncture label '" + infinity_label + "' reserved for infinity");
    }

    if (m == 1) {
        // Line between the one finite puncture and infinity, one auxiliary vertex.
        std::vector<Skeleton::Ray> rays{{0, finite_punctures[0].first}, {0, infinity_label}};
        return Skeleton({"v0"}, {}, std::move(rays), 0);
    }

    std::vector<PuiseuxElement> pts;
    pts.reserve(m);
    for (const auto& [name, elt] : finite_punctures) pts.push_back(elt);
    auto vmat = pairwise_valuations(pts);

    std::vector<Rat> depths;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) depths.push_back(vmat[i][j].value());
    std::sort(depths.begin(), depths.end());
    depths.erase(std::unique(depths.begin(), depths.end()), depths.end());
    std::reverse(depths.begin(), depths.end()); // deepest first

    struct ProtoVertex {
        Rat depth;
        std::string min_puncture;
        std::vector<int> ray_punctures;                    // finite puncture indices
        std::vector<std::pair<int, Rat>> children;         // (proto vertex, its depth)
    };
    std::vector<ProtoVertex> proto;

    UnionFind uf(m);
    // Cluster roots carry the proto-vertex made when the cluster last grew.
    std::vector<int> top(m, -1);

    for (const Rat& d : depths) {
        std::set<int> dirty;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (vmat[i][j] == ExtRat(d)) {
                    int a = uf.find(i), b = uf.find(j);
                    if (a != b) {
                        dirty.insert(a);
                        dirty.insert(b);
                        uf.unite(a, b);
                        dirty.insert(uf.find(i));
                    }
                }
        // One new vertex per cluster that changed at this depth.
        std::set<int> roots;
        for (int r : dirty) roots.insert(uf.find(r));
        for (int root : roots) {
            ProtoVertex pv;
            pv.depth = d;
            std::set<int> merged_tops;
            std::string min_name;
            for (int i = 0; i < m; ++i) {
                if (uf.find(i) != root) continue;
                const std::string& nm = finite_punctures[i].first;
                if (min_name.empty() || nm < min_name) min_name = nm;
                if (top[i] >= 0)
                    merged_tops.insert(top[i]);
                else
                    pv.ray_punctures.push_back(i);
            }
            // Children created at this same depth would mean a zero-length
            // edge; clusters that merge at equal depth share one vertex, so
            // children always sit strictly deeper.
            for (int t : merged_tops) pv.children.push_back({t, proto[t].depth});
            pv.min_puncture = min_name;
            proto.push_back(std::move(pv));
            int id = static_cast<int>(proto.size()) - 1;
            for (int i = 0; i < m; ++i)
                if (uf.find(i) == root) top[i] = id;
        }
    }

    int root_proto = top[0];
    for (int i = 0; i < m; ++i)
        if (top[i] != root_proto) throw std::logic_error("dendrogram did not converge to one root");

    // Deterministic ids: by depth ascending, then smallest puncture label.
    std::vector<int> order(proto.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (proto[a].depth != proto[b].depth) return proto[a].depth < proto[b].depth;
        return proto[a].min_puncture < proto[b].min_puncture;
    });
    std::vector<int> newid(proto.size());
    for (std::size_t i = 0; i < order.size(); ++i) newid[order[i]] = static_cast<int>(i);

    std::vector<std::string> labels(proto.size());
    for (std::size_t i = 0; i < proto.size(); ++i) labels[i] = "v" + std::to_string(i);

    std::vector<Skeleton::Edge> edges;
    std::vector<Skeleton::Ray> rays;
    for (std::size_t p = 0; p < proto.size(); ++p) {
        for (const auto& [child, child_depth] : proto[p].children)
            edges.push_back({newid[p], newid[child], child_depth - proto[p].depth});
        for (int punc : proto[p].ray_punctures)
            rays.push_back({newid[p], finite_punctures[punc].first});
    }
    if (include_infinity) rays.push_back({newid[root_proto], infinity_label});

    std::sort(edges.begin(), edges.end(), [](const Skeleton::Edge& a, const Skeleton::Edge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    std::sort(rays.begin(), rays.end(), [](const Skeleton::Ray& a, const Skeleton::Ray& b) {
        return std::tie(a.base, a.puncture) < std::tie(b.base, b.puncture);
    });
    return Skeleton(std::move(labels), std::move(edges), std::move(rays), newid[root_proto]);
}

std::vector<Rat> p1_vertex_depths(const Skeleton& s, const Rat& base_depth) {
    std::vector<Rat> depth(s.vertex_count(), base_depth);
    std::vector<bool> seen(s.vertex_count(), false);
    std::vector<int> stack{s.base_vertex()};
    seen[s.base_vertex()] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : s.incident_edges(v)) {
            const auto& ed = s.edges()[e];
            int w = ed.u == v ? ed.v : ed.u;
            if (!seen[w]) {
                seen[w] = true;
                depth[w] = depth[v] + ed.length;
                stack.push_back(w);
            }
        }
    }
    return depth;
}

Skeleton build_tate_skeleton(const Rat& loop_length,
                             const std::vector<std::pair<std::string, Rat>>& punctures) {
    if (loop_length <= 0) throw std::invalid_argument("loop length must be positive");

    auto canonical = [&](Rat p) {
        // Reduce modulo loop_length into [0, loop_length).
        Rat q = p / loop_length;
        Int fl = numerator(q) / denominator(q);
        if (q < 0 && fl * denominator(q) != numerator(q)) fl -= 1;
        return Rat(p - Rat(fl) * loop_length);
    };

    std::map<Rat, std::vector<std::string>> at_position;
    for (const auto& [name, pos] : punctures) at_position[canonical(pos)].push_back(name);

    std::vector<std::string> labels;
    std::vector<Skeleton::Edge> edges;
    std::vector<Skeleton::Ray> rays;

    if (at_position.empty()) {
        labels.push_back("v0");
        edges.push_back({0, 0, loop_length});
        return Skeleton(std::move(labels), std::move(edges), {}, 0);
    }

    std::vector<Rat> positions;
    for (const auto& [pos, names] : at_position) positions.push_back(pos);
    const int k = static_cast<int>(positions.size());
    for (int i = 0; i < k; ++i) labels.push_back("v" + std::to_string(i));

    if (k == 1) {
        edges.push_back({0, 0, loop_length});
    } else {
        for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1, positions[i + 1] - positions[i]});
        edges.push_back({k - 1, 0, loop_length - positions[k - 1] + positions[0]});
    }
    int vi = 0;
    for (const auto& [pos, names] : at_position) {
        std::vector<std::string> sorted_names = names;
        std::sort(sorted_names.begin(), sorted_names.end());
        for (const auto& nm : sorted_names) rays.push_back({vi, nm});
        ++vi;
    }
    return Skeleton(std::move(labels), std::move(edges), std::move(rays), 0);
}

std::vector<Rat> tate_vertex_positions(const Skeleton& s) {
    if (!s.has_cycle()) throw std::invalid_argument("not a circle skeleton");
    std::vector<Rat> pos(s.vertex_count(), Rat(0));
    // Vertices of build_tate_skeleton lie on the cycle in stored edge order.
    Rat acc(0);
    for (std::size_t e = 0; e + 1 < s.edges().size(); ++e) {
        acc += s.edges()[e].length;
        pos[s.edges()[e].v] = acc;
    }
    return pos;
}

Rat vertex_distance(const Skeleton& s, int u, int v) {
    const int n = s.vertex_count();
    std::vector<bool> done(n, false);
    std::vector<Rat> dist(n, Rat(0));
    std::vector<bool> reached(n, false);
    dist[u] = 0;
    reached[u] = true;
    for (int iter = 0; iter < n; ++iter) {
        int best = -1;
        for (int i = 0; i < n; ++i)
            if (reached[i] && !done[i] && (best < 0 || dist[i] < dist[best])) best = i;
        if (best < 0) break;
        done[best] = true;
        for (int e : s.incident_edges(best)) {
            const auto& ed = s.edges()[e];
            int w = ed.u == best ? ed.v : ed.u;
            Rat nd = dist[best] + ed.length;
            if (!reached[w] || nd < dist[w]) {
                reached[w] = true;
                dist[w] = nd;
            }
        }
    }
    if (!reached[v]) throw std::logic_error("disconnected skeleton");
    return dist[v];
}

} // namespace tropcurves
