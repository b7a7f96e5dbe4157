#include "tolrec/graph.hpp"

#include <algorithm>

#include "tolrec/error.hpp"

namespace tolrec {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw InvalidArgument("negative vertex count");
    adj_.resize(n);
    mat_.assign(static_cast<std::size_t>(n) * n, 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u != v && has_edge(u, v)) throw InvalidArgument("duplicate edge");
        add_edge(u, v);
    }
}

void Graph::check(Vertex u) const {
    if (u < 0 || u >= n_)
        throw InvalidArgument("vertex id " + std::to_string(u) + " out of range (n=" + std::to_string(n_) + ")");
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return mat_[static_cast<std::size_t>(u) * n_ + v] != 0;
}

void Graph::add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) return;
    mat_[static_cast<std::size_t>(u) * n_ + v] = 1;
    mat_[static_cast<std::size_t>(v) * n_ + u] = 1;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
    if (!has_edge(u, v)) return;
    mat_[static_cast<std::size_t>(u) * n_ + v] = 0;
    mat_[static_cast<std::size_t>(v) * n_ + u] = 0;
    adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
    adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
    --m_;
}

const std::vector<Vertex>& Graph::adj(Vertex u) const {
    check(u);
    return adj_[u];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& o) const { return n_ == o.n_ && mat_ == o.mat_; }

VertexSet neighborhood(const Graph& g, Vertex u) { return g.adj(u); }

VertexSet closed_neighborhood(const Graph& g, Vertex u) {
    VertexSet s = g.adj(u);
    s.insert(std::lower_bound(s.begin(), s.end(), u), u);
    return s;
}

VertexSet set_neighborhood(const Graph& g, const VertexSet& s) {
    std::vector<char> in(g.n(), 0), out(g.n(), 0);
    for (Vertex x : s) {
        if (x < 0 || x >= g.n()) throw InvalidArgument("vertex id out of range");
        in[x] = 1;
    }
    for (Vertex x : s)
        for (Vertex y : g.adj(x))
            if (!in[y]) out[y] = 1;
    VertexSet r;
    for (Vertex v = 0; v < g.n(); ++v)
        if (out[v]) r.push_back(v);
    return r;
}

bool adjacent_to_set(const Graph& g, Vertex x, const VertexSet& s) {
    for (Vertex y : s)
        if (g.has_edge(x, y)) return true;
    return false;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& restrict) {
    std::vector<char> allowed(g.n(), 0), seen(g.n(), 0);
    for (Vertex v : restrict) {
        if (v < 0 || v >= g.n()) throw InvalidArgument("vertex id out of range");
        allowed[v] = 1;
    }
    std::vector<VertexSet> out;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (!allowed[s] || seen[s]) continue;
        VertexSet comp;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (Vertex y : g.adj(x))
                if (allowed[y] && !seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;  // scan order already sorts by smallest member
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    InducedSubgraph r;
    r.to_parent = make_set(s);
    std::vector<int> idx(g.n(), -1);
    for (std::size_t i = 0; i < r.to_parent.size(); ++i) {
        Vertex v = r.to_parent[i];
        if (v < 0 || v >= g.n()) throw InvalidArgument("vertex id out of range");
        idx[v] = static_cast<int>(i);
    }
    r.graph = Graph(static_cast<int>(r.to_parent.size()));
    for (std::size_t i = 0; i < r.to_parent.size(); ++i)
        for (Vertex y : g.adj(r.to_parent[i]))
            if (idx[y] > static_cast<int>(i)) r.graph.add_edge(static_cast<int>(i), idx[y]);
    return r;
}

Graph complement(const Graph& g) {
    Graph c(g.n());
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

bool labeled_equal(const Graph& g1, const Graph& g2, const std::vector<Vertex>& bijection) {
    if (static_cast<int>(bijection.size()) != g1.n()) throw InvalidArgument("bijection is not total on g1");
    std::vector<char> hit(g2.n(), 0);
    for (Vertex x : bijection) {
        if (x < 0 || x >= g2.n() || hit[x]) throw InvalidArgument("map is not a bijection");
        hit[x] = 1;
    }
    if (g1.n() != g2.n()) throw InvalidArgument("map is not a bijection");
    if (g1.edge_count() != g2.edge_count()) return false;
    for (auto [u, v] : g1.edges())
        if (!g2.has_edge(bijection[u], bijection[v])) return false;
    return true;
}

VertexSet all_vertices(const Graph& g) {
    VertexSet s(g.n());
    for (int i = 0; i < g.n(); ++i) s[i] = i;
    return s;
}

VertexSet make_set(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

bool is_subset(const VertexSet& a, const VertexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace tolrec
