#include "tropcurves/potential.hpp"

#include <algorithm>

namespace tropcurves {

Int Divisor::degree() const {
    Int d = 0;
    for (const auto& [p, o] : orders) d += o;
    return d;
}

void Divisor::normalize() {
    for (auto it = orders.begin(); it != orders.end();)
        it = it->second == 0 ? orders.erase(it) : std::next(it);
}

Divisor operator+(const Divisor& a, const Divisor& b) {
    Divisor c = a;
    for (const auto& [p, o] : b.orders) c.orders[p] += o;
    c.normalize();
    return c;
}

PLFunction::PLFunction(std::shared_ptr<const Skeleton> skeleton, std::vector<Int> edge_slopes,
                       std::map<std::string, Int> ray_slopes, Rat base_value)
    : skel_(std::move(skeleton)), edge_slopes_(std::move(edge_slopes)),
      ray_slopes_(std::move(ray_slopes)), base_value_(std::move(base_value)) {
    if (edge_slopes_.size() != skel_->edges().size())
        throw std::invalid_argument("one slope per edge required");
}

Int PLFunction::slope_from(int e, int from) const {
    const auto& ed = skel_->edges()[e];
    if (ed.u == ed.v) return 0;
    if (ed.u == from) return edge_slopes_[e];
    if (ed.v == from) return -edge_slopes_[e];
    throw std::invalid_argument("vertex not an endpoint of edge");
}

Int PLFunction::ray_slope(const std::string& puncture) const {
    auto it = ray_slopes_.find(puncture);
    return it == ray_slopes_.end() ? Int(0) : it->second;
}

std::vector<Rat> PLFunction::vertex_values() const {
    const Skeleton& s = *skel_;
    std::vector<Rat> value(s.vertex_count(), base_value_);
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
                value[w] = value[v] + Rat(slope_from(e, v)) * ed.length;
                stack.push_back(w);
            }
        }
    }
    return value;
}

Rat PLFunction::evaluate(int vertex) const { return vertex_values()[vertex]; }

Int PLFunction::harmonic_defect(int vertex) const {
    Int sum = 0;
    for (int e : skel_->incident_edges(vertex)) sum += slope_from(e, vertex);
    for (int r : skel_->incident_rays(vertex)) sum += ray_slope(skel_->rays()[r].puncture);
    return sum;
}

PLFunction PLFunction::with_base_value(const Rat& value) const {
    return PLFunction(skel_, edge_slopes_, ray_slopes_, value);
}

namespace {

// Exact Gaussian elimination; the matrix is invertible for every connected
// skeleton once the base row is pinned.
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (a[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw std::logic_error("singular potential system");
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rat f = a[row][col] / a[col][col];
            for (int k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

} // namespace

PLFunction solve_slope(std::shared_ptr<const Skeleton> skeleton, const Divisor& divisor) {
    const Skeleton& s = *skeleton;
    if (divisor.degree() != 0)
        throw DegreeNonZero("divisor degree is " + int_string(divisor.degree()));
    for (const auto& [p, o] : divisor.orders)
        if (o != 0 && s.ray_of_puncture(p) < 0)
            throw UnknownPuncture("divisor point '" + p + "' is not a puncture of the skeleton");

    const int n = s.vertex_count();
    // Weighted Laplacian system: at each vertex the incoming slopes balance
    // the divisor orders of the rays based there.  One row is replaced by
    // the normalization F(base) = 0, which also discharges the single
    // linear dependency of the Laplacian.
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> b(n, Rat(0));
    for (const auto& e : s.edges()) {
        if (e.u == e.v) continue;
        Rat w = Rat(1) / e.length;
        a[e.u][e.u] += w;
        a[e.v][e.v] += w;
        a[e.u][e.v] -= w;
        a[e.v][e.u] -= w;
    }
    for (const auto& r : s.rays()) {
        auto it = divisor.orders.find(r.puncture);
        if (it != divisor.orders.end()) b[r.base] += Rat(it->second);
    }
    const int base = s.base_vertex();
    std::fill(a[base].begin(), a[base].end(), Rat(0));
    a[base][base] = 1;
    b[base] = 0;

    std::vector<Rat> value = solve_linear(std::move(a), std::move(b));

    std::vector<Int> slopes(s.edges().size(), Int(0));
    for (std::size_t e = 0; e < s.edges().size(); ++e) {
        const auto& ed = s.edges()[e];
        if (ed.u == ed.v) continue;
        Rat slope = (value[ed.v] - value[ed.u]) / ed.length;
        if (!is_integer(slope)) {
            if (s.has_cycle())
                throw NonPrincipalOnTate("divisor class is nontrivial on the loop: slope " +
                                         rat_string(slope) + " on edge " + std::to_string(e));
            throw std::logic_error("non-integral slope on a tree");
        }
        slopes[e] = to_integer(slope);
    }

    std::map<std::string, Int> ray_slopes;
    for (const auto& r : s.rays()) {
        auto it = divisor.orders.find(r.puncture);
        ray_slopes[r.puncture] = it == divisor.orders.end() ? Int(0) : it->second;
    }

    PLFunction f(skeleton, std::move(slopes), std::move(ray_slopes), Rat(0));
    for (int v = 0; v < n; ++v)
        if (f.harmonic_defect(v) != 0) throw std::logic_error("solver produced non-harmonic function");
    return f;
}

Int change_of_slope(const PLFunction& f, int vertex) { return f.harmonic_defect(vertex); }

} // namespace tropcurves
