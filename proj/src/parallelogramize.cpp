#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "simplex.hpp"
#include "tolrec/error.hpp"
#include "tolrec/orientation.hpp"

namespace tolrec {

namespace {

// Line ids: 2v = left of v, 2v+1 = right of v.
struct RailOrders {
    std::vector<int> top, bottom;        // line ids sorted along each rail
    std::vector<int> top_rank, bot_rank;  // inverse permutations
};

RailOrders rail_orders(const TrapezoidRep& r) {
    const int L = 2 * r.size();
    auto topc = [&](int x) -> const Rational& { return x % 2 ? r.traps[x / 2].b : r.traps[x / 2].a; };
    auto botc = [&](int x) -> const Rational& { return x % 2 ? r.traps[x / 2].d : r.traps[x / 2].c; };
    RailOrders o;
    o.top.resize(L);
    o.bottom.resize(L);
    std::iota(o.top.begin(), o.top.end(), 0);
    std::iota(o.bottom.begin(), o.bottom.end(), 0);
    std::sort(o.top.begin(), o.top.end(), [&](int x, int y) { return topc(x) < topc(y); });
    std::sort(o.bottom.begin(), o.bottom.end(), [&](int x, int y) { return botc(x) < botc(y); });
    o.top_rank.resize(L);
    o.bot_rank.resize(L);
    for (int i = 0; i < L; ++i) {
        o.top_rank[o.top[i]] = i;
        o.bot_rank[o.bottom[i]] = i;
    }
    return o;
}

bool same_orders(const TrapezoidRep& x, const TrapezoidRep& y) {
    auto a = rail_orders(x), b = rail_orders(y);
    return a.top == b.top && a.bottom == b.bottom;
}

std::optional<ParallelogramRep> finish(const TrapezoidRep& in, TrapezoidRep out, const Graph& g) {
    try {
        ParallelogramRep p(std::move(out));
        if (!same_orders(in, p.traps())) return std::nullopt;
        if (!verify_rep(p, g)) return std::nullopt;
        return p;
    } catch (const InvalidArgument&) {
        return std::nullopt;
    }
}

// Keep every top coordinate; one displacement per vertex.
std::optional<ParallelogramRep> fixed_top(const TrapezoidRep& r, const RailOrders& o, const Graph& g) {
    const int V = r.size();
    Rational slack = *min_rail_gap(r) / (4 * V);
    auto topc = [&](int x) -> const Rational& { return x % 2 ? r.traps[x / 2].b : r.traps[x / 2].a; };
    struct E {
        int from, to;
        Rational w;
    };
    std::vector<E> edges;
    for (std::size_t i = 0; i + 1 < o.bottom.size(); ++i) {
        int x = o.bottom[i], y = o.bottom[i + 1];
        if (x / 2 == y / 2) continue;
        edges.push_back({x / 2, y / 2, topc(y) - topc(x) - slack});
    }
    std::vector<Rational> delta(V, Rational(0));
    bool changed = true;
    for (int it = 0; it <= V && changed; ++it) {
        changed = false;
        for (const auto& e : edges)
            if (delta[e.from] + e.w < delta[e.to]) {
                delta[e.to] = delta[e.from] + e.w;
                changed = true;
            }
    }
    if (changed) return std::nullopt;  // negative cycle
    TrapezoidRep out;
    for (int v = 0; v < V; ++v) {
        const auto& t = r.traps[v];
        out.traps.push_back({t.a, t.b, t.a - delta[v], t.b - delta[v]});
    }
    return finish(r, std::move(out), g);
}

// Gap LP: unknown positive gaps between consecutive endpoints on each rail,
// constrained so that every vertex has equal top and bottom widths.
template <class T>
std::optional<std::vector<T>> gap_lp(const TrapezoidRep& r, const RailOrders& o) {
    const int V = r.size(), L = 2 * V, N = 2 * (L - 1);
    std::vector<std::vector<T>> A(V, std::vector<T>(N, T(0)));
    std::vector<T> b(V, T(0));
    for (int v = 0; v < V; ++v) {
        int a = o.top_rank[2 * v], bb = o.top_rank[2 * v + 1];
        int c = o.bot_rank[2 * v], d = o.bot_rank[2 * v + 1];
        for (int i = a; i < bb; ++i) A[v][i] = 1;
        for (int j = c; j < d; ++j) A[v][(L - 1) + j] = -1;
        // gaps are 1 + slack variable
        b[v] = T((d - c) - (bb - a));
    }
    return detail::phase1<T>(A, b);
}

template <class T>
void positions(const std::vector<T>& x, int L, std::vector<T>& top, std::vector<T>& bot) {
    top.assign(L, T(0));
    bot.assign(L, T(0));
    for (int i = 1; i < L; ++i) {
        top[i] = top[i - 1] + T(1) + x[i - 1];
        bot[i] = bot[i - 1] + T(1) + x[(L - 1) + i - 1];
    }
}

// Rounds the LP displacements and recovers integer tops by longest paths.
std::optional<ParallelogramRep> round_and_repair(const TrapezoidRep& r, const RailOrders& o, const Graph& g,
                                                 const std::vector<double>& x) {
    const int V = r.size(), L = 2 * V;
    std::vector<double> top, bot;
    positions(x, L, top, bot);
    for (long scale : {8L, 64L, 512L, 4096L}) {
        std::vector<std::int64_t> delta(V);
        for (int v = 0; v < V; ++v)
            delta[v] = std::llround(scale * (top[o.top_rank[2 * v]] - bot[o.bot_rank[2 * v]]));
        const std::int64_t w = scale / 2;
        struct E {
            int from, to;
            std::int64_t w;
        };
        std::vector<E> edges;
        for (int i = 0; i + 1 < L; ++i) {
            edges.push_back({o.top[i], o.top[i + 1], w});
            int p = o.bottom[i], q = o.bottom[i + 1];
            edges.push_back({p, q, w + delta[q / 2] - delta[p / 2]});
        }
        std::vector<std::int64_t> T(L, 0);
        bool changed = true;
        for (int it = 0; it <= L && changed; ++it) {
            changed = false;
            for (const auto& e : edges)
                if (T[e.from] + e.w > T[e.to]) {
                    T[e.to] = T[e.from] + e.w;
                    changed = true;
                }
        }
        if (changed) continue;  // positive cycle at this precision
        TrapezoidRep out;
        for (int v = 0; v < V; ++v) {
            Rational a(T[2 * v]), b(T[2 * v + 1]), d(delta[v]);
            out.traps.push_back({a, b, a - d, b - d});
        }
        if (auto p = finish(r, std::move(out), g)) return p;
    }
    return std::nullopt;
}

}  // namespace

ParallelogramizeResult parallelogramize(const TrapezoidRep& r) {
    validate(r);
    ParallelogramizeResult res;
    if (r.size() == 0) {
        res.rep = ParallelogramRep();
        res.route = "fixed-top";
        return res;
    }
    auto acyc = is_acyclic_trapezoid_rep(r);
    if (!acyc.acyclic) {
        res.reason = "representation is not acyclic";
        return res;
    }
    const Graph g = graph_of(r);
    const RailOrders o = rail_orders(r);
    if (auto p = fixed_top(r, o, g)) {
        res.rep = std::move(p);
        res.route = "fixed-top";
        return res;
    }
    if (auto x = gap_lp<double>(r, o)) {
        if (auto p = round_and_repair(r, o, g, *x)) {
            res.rep = std::move(p);
            res.route = "gap-lp";
            return res;
        }
    }
    // exact solve; also decides infeasibility
    auto x = gap_lp<Rational>(r, o);
    if (!x) {
        res.reason = "no parallelogram rep with the same rail orders exists";
        return res;
    }
    const int L = 2 * r.size();
    std::vector<Rational> top, bot;
    positions(*x, L, top, bot);
    TrapezoidRep out;
    for (int v = 0; v < r.size(); ++v)
        out.traps.push_back({top[o.top_rank[2 * v]], top[o.top_rank[2 * v + 1]], bot[o.bot_rank[2 * v]],
                             bot[o.bot_rank[2 * v + 1]]});
    auto p = finish(r, std::move(out), g);
    if (!p) throw InternalError("exact gap LP solution failed verification");
    res.rep = std::move(p);
    res.route = "gap-lp-exact";
    return res;
}

}  // namespace tolrec
