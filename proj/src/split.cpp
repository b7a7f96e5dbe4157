#include "tolrec/split.hpp"

#include <algorithm>

#include "tolrec/error.hpp"

namespace tolrec {

namespace {

struct StepInfo {
    NPartition part;     // global ids
    VertexSet master;    // delta_u, global ids
};

// Computes the split data of u inside H[alive] without modifying H.
StepInfo analyze(const Graph& h, const VertexSet& alive, Vertex u) {
    auto sub = induced_subgraph(h, alive);
    Vertex lu = static_cast<Vertex>(std::lower_bound(alive.begin(), alive.end(), u) - alive.begin());
    auto f = component_family(sub.graph, lu);
    auto d = select_deltas(f);
    if (!d.delta_star)
        throw PreconditionFailed("cannot split vertex " + std::to_string(u) + ": delta* is empty in the current graph");
    auto p = n_partition(sub.graph, lu, f, *d.delta, *d.delta_star);
    auto up = [&](const VertexSet& s) {
        VertexSet o;
        for (Vertex x : s) o.push_back(sub.to_parent[x]);
        return make_set(o);
    };
    return {{up(p.n0), up(p.n1), up(p.n2), up(p.n12)}, up(f.components[*d.delta])};
}

void apply_split(Graph& h, Vertex u, Vertex u1, Vertex u2, const NPartition& p) {
    for (Vertex x : std::vector<Vertex>(h.adj(u))) h.remove_edge(u, x);
    for (Vertex x : set_union(p.n1, p.n12)) h.add_edge(u1, x);
    for (Vertex x : set_union(p.n2, p.n12)) h.add_edge(u2, x);
}

void check_order(const Graph& g, const std::vector<Vertex>& U) {
    std::vector<char> seen(g.n(), 0);
    for (Vertex u : U) {
        if (u < 0 || u >= g.n()) throw InvalidArgument("vertex " + std::to_string(u) + " out of range");
        if (seen[u]++) throw InvalidArgument("vertex " + std::to_string(u) + " listed twice in U");
    }
}

SplitResult finish(const Graph& h, int n, const std::vector<Vertex>& U) {
    SplitResult res;
    res.order = U;
    VertexSet keep;
    for (std::size_t i = 0; i < U.size(); ++i) {
        keep.push_back(n + 2 * static_cast<int>(i));
        keep.push_back(n + 2 * static_cast<int>(i) + 1);
        res.derivatives.emplace_back(2 * static_cast<int>(i), 2 * static_cast<int>(i) + 1);
    }
    res.graph = induced_subgraph(h, keep).graph;
    res.dropped = set_difference(all_vertices(Graph(n)), make_set(U));
    return res;
}

Rational midpoint(const Rational& x, const Rational& y) { return (x + y) / 2; }

}  // namespace

VertexSplitResult vertex_split(const Graph& g, Vertex u) {
    if (u < 0 || u >= g.n()) throw InvalidArgument("vertex " + std::to_string(u) + " out of range");
    const int n = g.n();
    auto info = analyze(g, all_vertices(g), u);
    VertexSplitResult r;
    r.old_to_new.assign(n, -1);
    for (Vertex v = 0, k = 0; v < n; ++v)
        if (v != u) r.old_to_new[v] = k++;
    r.u1 = n - 1;
    r.u2 = n;
    r.graph = Graph(n + 1);
    for (auto [x, y] : g.edges())
        if (x != u && y != u) r.graph.add_edge(r.old_to_new[x], r.old_to_new[y]);
    auto map = [&](const VertexSet& s) {
        VertexSet o;
        for (Vertex x : s) o.push_back(r.old_to_new[x]);
        return o;
    };
    r.part = {map(info.part.n0), map(info.part.n1), map(info.part.n2), map(info.part.n12)};
    for (Vertex x : set_union(r.part.n1, r.part.n12)) r.graph.add_edge(r.u1, x);
    for (Vertex x : set_union(r.part.n2, r.part.n12)) r.graph.add_edge(r.u2, x);
    return r;
}

SplitResult split_U(const Graph& g, const std::vector<Vertex>& U) {
    check_order(g, U);
    const int n = g.n(), k = static_cast<int>(U.size());
    Graph h(n + 2 * k);
    for (auto [x, y] : g.edges()) h.add_edge(x, y);
    VertexSet alive = all_vertices(g);
    for (int i = 0; i < k; ++i) {
        Vertex u = U[i], u1 = n + 2 * i, u2 = u1 + 1;
        auto info = analyze(h, alive, u);
        apply_split(h, u, u1, u2, info.part);
        alive = set_union(set_difference(alive, {u}), {u1, u2});
    }
    return finish(h, n, U);
}

PermutationRep restricted_line_rep(const TrapezoidRep& r, const std::vector<Vertex>& U) {
    PermutationRep out;
    for (Vertex u : U) {
        const auto& t = r.traps.at(u);
        out.lines.push_back(t.left());
        out.lines.push_back(t.right());
    }
    validate(out);
    return out;
}

LineCertificate split_U_line_certificate(const Graph& g, const TrapezoidRep& r, const std::vector<Vertex>& U) {
    check_order(g, U);
    if (!verify_rep(r, g)) throw InvalidArgument("representation does not realize the graph");
    const int n = g.n(), k = static_cast<int>(U.size());
    Graph h(n + 2 * k);
    for (auto [x, y] : g.edges()) h.add_edge(x, y);
    std::vector<Trapezoid> elems(r.traps);
    elems.resize(n + 2 * k);
    VertexSet alive = all_vertices(g);
    LineCertificate cert;

    for (int i = 0; i < k; ++i) {
        Vertex u = U[i], u1 = n + 2 * i, u2 = u1 + 1;
        auto info = analyze(h, alive, u);

        // Widen T_u until it touches its non-neighbors on either side.
        std::vector<Rational> tops, bots;
        for (Vertex x : alive) {
            tops.insert(tops.end(), {elems[x].a, elems[x].b});
            bots.insert(bots.end(), {elems[x].c, elems[x].d});
        }
        std::sort(tops.begin(), tops.end());
        std::sort(bots.begin(), bots.end());
        Trapezoid t = elems[u];
        std::optional<Rational> l_top, l_bot, r_top, r_bot;
        for (Vertex x : alive) {
            if (x == u) continue;
            if (left_of(elems[x], t)) {
                if (!l_top || *l_top < elems[x].b) l_top = elems[x].b;
                if (!l_bot || *l_bot < elems[x].d) l_bot = elems[x].d;
            } else if (left_of(t, elems[x])) {
                if (!r_top || elems[x].a < *r_top) r_top = elems[x].a;
                if (!r_bot || elems[x].c < *r_bot) r_bot = elems[x].c;
            }
        }
        auto after = [](const std::vector<Rational>& v, const std::optional<Rational>& lim) {
            if (!lim) return Rational(v.front() - 1);
            return midpoint(*lim, *std::upper_bound(v.begin(), v.end(), *lim));
        };
        auto before = [](const std::vector<Rational>& v, const std::optional<Rational>& lim) {
            if (!lim) return Rational(v.back() + 1);
            return midpoint(*lim, *(std::lower_bound(v.begin(), v.end(), *lim) - 1));
        };
        elems[u] = {after(tops, l_top), before(tops, r_top), after(bots, l_bot), before(bots, r_bot)};

        auto sub = induced_subgraph(h, alive);
        std::vector<Trapezoid> sub_elems;
        for (Vertex x : sub.to_parent) sub_elems.push_back(elems[x]);
        if (compare_graphs(intersection_graph(sub_elems), sub.graph).ok == false)
            throw InternalError("widening T_" + std::to_string(u) + " changed the graph");
        Vertex lu = static_cast<Vertex>(std::lower_bound(alive.begin(), alive.end(), u) - alive.begin());
        if (!is_standard_elems(sub.graph, sub_elems, lu))
            throw Error("representation is not standard w.r.t. vertex " + std::to_string(u) + " after widening");

        bool master_left = left_of(elems[info.master.front()], elems[u]);
        Trapezoid lt = as_trapezoid(elems[u].left()), rt = as_trapezoid(elems[u].right());
        elems[u1] = master_left ? lt : rt;
        elems[u2] = master_left ? rt : lt;
        cert.first_is_left.push_back(master_left);

        apply_split(h, u, u1, u2, info.part);
        alive = set_union(set_difference(alive, {u}), {u1, u2});

        auto now = induced_subgraph(h, alive);
        std::vector<Trapezoid> now_elems;
        for (Vertex x : now.to_parent) now_elems.push_back(elems[x]);
        auto v = compare_graphs(intersection_graph(now_elems), now.graph);
        if (!v.ok)
            throw Error("line replacement of vertex " + std::to_string(u) + " does not realize the split graph (pair " +
                        std::to_string(now.to_parent[v.mismatch->first]) + "," +
                        std::to_string(now.to_parent[v.mismatch->second]) + ")");
    }
    cert.split = finish(h, n, U);
    for (int i = 0; i < k; ++i) {
        for (Vertex x : {n + 2 * i, n + 2 * i + 1}) cert.lines.lines.push_back({elems[x].a, elems[x].c});
        cert.pairs.pairs.emplace_back(2 * i, 2 * i + 1);
    }
    validate(cert.lines);
    return cert;
}

}  // namespace tolrec
