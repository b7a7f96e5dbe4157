#include "tolrec/structure.hpp"

#include <algorithm>

#include "tolrec/error.hpp"

namespace tolrec {

namespace {

void check_index(const ComponentFamily& f, int i) {
    if (i < 0 || i >= f.size()) throw InvalidArgument("component index " + std::to_string(i) + " out of range");
}

bool strict_subset(const VertexSet& a, const VertexSet& b) { return a.size() < b.size() && is_subset(a, b); }

NPartition classify(const Graph& g, Vertex u, const VertexSet& left, const VertexSet& right) {
    NPartition p;
    for (Vertex x : g.adj(u)) {
        bool l = adjacent_to_set(g, x, left), r = adjacent_to_set(g, x, right);
        if (l && r)
            p.n12.push_back(x);
        else if (l)
            p.n1.push_back(x);
        else if (r)
            p.n2.push_back(x);
        else
            p.n0.push_back(x);
    }
    return p;
}

}  // namespace

ComponentFamily component_family(const Graph& g, Vertex u) {
    ComponentFamily f;
    f.u = u;
    f.components = components(g, set_difference(all_vertices(g), closed_neighborhood(g, u)));
    for (const auto& c : f.components) f.boundaries.push_back(set_neighborhood(g, c));
    return f;
}

std::vector<int> domination_closure(const ComponentFamily& f, int i) {
    check_index(f, i);
    std::vector<int> out;
    for (int p = 0; p < f.size(); ++p)
        if (is_subset(f.boundaries[p], f.boundaries[i])) out.push_back(p);
    return out;
}

std::vector<int> domination_closure(const Graph& g, Vertex u, int i) {
    return domination_closure(component_family(g, u), i);
}

std::vector<int> master_components(const ComponentFamily& f) {
    if (f.size() == 0) throw PreconditionFailed("G - N[u] is empty; no master component");
    std::vector<std::size_t> sz(f.size());
    std::size_t best = 0;
    for (int i = 0; i < f.size(); ++i) {
        sz[i] = domination_closure(f, i).size();
        best = std::max(best, sz[i]);
    }
    std::vector<int> out;
    for (int i = 0; i < f.size(); ++i)
        if (sz[i] == best) out.push_back(i);
    return out;
}

std::vector<int> master_components(const Graph& g, Vertex u) { return master_components(component_family(g, u)); }

std::vector<int> closure_complement(const ComponentFamily& f, int i) {
    auto d = domination_closure(f, i);
    std::vector<int> out;
    for (int p = 0; p < f.size(); ++p)
        if (!std::binary_search(d.begin(), d.end(), p)) out.push_back(p);
    return out;
}

std::vector<int> closure_complement(const Graph& g, Vertex u, int i) {
    return closure_complement(component_family(g, u), i);
}

std::vector<int> maximal_components(const ComponentFamily& f, const std::vector<int>& s) {
    for (int i : s) check_index(f, i);
    std::vector<int> out;
    for (int j : s) {
        bool dominated = false;
        for (int k : s)
            if (strict_subset(f.boundaries[j], f.boundaries[k])) dominated = true;
        if (!dominated) out.push_back(j);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> maximal_components(const Graph& g, Vertex u, const std::vector<int>& s) {
    return maximal_components(component_family(g, u), s);
}

Deltas select_deltas(const ComponentFamily& f) {
    Deltas d;
    if (f.size() == 0) return d;
    d.delta = master_components(f).front();
    auto comp = closure_complement(f, *d.delta);
    if (!comp.empty()) d.delta_star = maximal_components(f, comp).front();
    return d;
}

Deltas select_deltas(const Graph& g, Vertex u) { return select_deltas(component_family(g, u)); }

std::vector<std::pair<int, int>> all_delta_choices(const ComponentFamily& f) {
    std::vector<std::pair<int, int>> out;
    if (f.size() == 0) return out;
    for (int i : master_components(f)) {
        auto comp = closure_complement(f, i);
        if (comp.empty()) continue;
        for (int j : maximal_components(f, comp)) out.emplace_back(i, j);
    }
    return out;
}

bool has_delta_star(const Graph& g, Vertex u) { return select_deltas(g, u).delta_star.has_value(); }

NPartition n_partition(const Graph& g, Vertex u, const ComponentFamily& f, int delta, int delta_star) {
    check_index(f, delta);
    check_index(f, delta_star);
    return classify(g, u, f.components[delta], f.components[delta_star]);
}

NPartition n_partition(const Graph& g, Vertex u) {
    auto f = component_family(g, u);
    auto d = select_deltas(f);
    if (!d.delta_star)
        throw PreconditionFailed("delta* of vertex " + std::to_string(u) + " is empty; N-partition undefined");
    return n_partition(g, u, f, *d.delta, *d.delta_star);
}

RepPartition n_partition_rep(const Graph& g, const TrapezoidRep& r, Vertex u) {
    if (!verify_rep(r, g)) throw InvalidArgument("representation does not realize the graph");
    RepPartition out;
    const Trapezoid& t = r.traps.at(u);
    for (int x = 0; x < r.size(); ++x) {
        if (x == u) continue;
        if (left_of(r.traps[x], t)) out.d1.push_back(x);
        if (left_of(t, r.traps[x])) out.d2.push_back(x);
    }
    out.part = classify(g, u, out.d1, out.d2);
    return out;
}

bool is_standard_elems(const Graph& g, const std::vector<Trapezoid>& elems, Vertex u) {
    auto f = component_family(g, u);
    auto d = select_deltas(f);
    if (!d.delta_star)
        throw PreconditionFailed("delta* of vertex " + std::to_string(u) + " is empty; standardness undefined");
    auto p = n_partition(g, u, f, *d.delta, *d.delta_star);
    const Trapezoid& t = elems.at(u);
    bool master_left = left_of(elems.at(f.components[*d.delta].front()), t);
    Trapezoid lt = as_trapezoid(t.left()), rt = as_trapezoid(t.right());
    // master left:  l(T_u) << R(N0 u N2) and R(N0 u N1) << r(T_u)
    // master right: R(N0 u N2) << r(T_u) and l(T_u) << R(N0 u N1)
    for (Vertex x : set_union(p.n0, p.n2)) {
        bool ok = master_left ? left_of(lt, elems[x]) : left_of(elems[x], rt);
        if (!ok) return false;
    }
    for (Vertex x : set_union(p.n0, p.n1)) {
        bool ok = master_left ? left_of(elems[x], rt) : left_of(lt, elems[x]);
        if (!ok) return false;
    }
    return true;
}

bool is_standard_rep(const Graph& g, const TrapezoidRep& r, Vertex u) {
    if (!verify_rep(r, g)) throw InvalidArgument("representation does not realize the graph");
    return is_standard_elems(g, r.traps, u);
}

}  // namespace tolrec
