#include "tolrec/geometry.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "tolrec/error.hpp"

namespace tolrec {

namespace {

void check_distinct(std::vector<std::pair<Rational, int>> v, const char* rail) {
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i].first == v[i - 1].first)
            throw InvalidArgument(std::string("duplicate ") + rail + " coordinate " + to_string(v[i].first) +
                                  " (ids " + std::to_string(v[i - 1].second) + ", " +
                                  std::to_string(v[i].second) + ")");
}

std::optional<Rational> min_gap_of(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    std::optional<Rational> best;
    for (std::size_t i = 1; i < v.size(); ++i) {
        Rational d = v[i] - v[i - 1];
        if (d > 0 && (!best || d < *best)) best = d;
    }
    return best;
}

std::map<Rational, int> ranks(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    std::map<Rational, int> r;
    int k = 0;
    for (const auto& x : v)
        if (!r.count(x)) r[x] = ++k;
    return r;
}

Rational overlap(const ToleranceInterval& x, const ToleranceInterval& y) {
    Rational lo = std::max(x.l, y.l), hi = std::min(x.r, y.r);
    return hi > lo ? Rational(hi - lo) : Rational(0);
}

ParallelogramRep direct_conversion(const ToleranceRep& r) {
    TrapezoidRep out;
    for (const auto& it : r.items) out.traps.push_back({it.l + it.t, it.r, it.l, it.r - it.t});
    return ParallelogramRep(std::move(out));
}

bool conversion_ok(const ToleranceRep& r) {
    std::vector<std::pair<Rational, int>> top, bot;
    for (int i = 0; i < r.size(); ++i) {
        const auto& it = r.items[i];
        if (!(it.t < it.r - it.l)) return false;
        top.push_back({it.l + it.t, i});
        top.push_back({it.r, i});
        bot.push_back({it.l, i});
        bot.push_back({it.r - it.t, i});
    }
    try {
        check_distinct(top, "top");
        check_distinct(bot, "bottom");
    } catch (const InvalidArgument&) {
        return false;
    }
    return true;
}

// Shrinks all tolerances by eta and shifts interval i by i*s so that the
// converted endpoints become distinct. Every pair keeps at least eta of slack
// in the adjacency test and the shifts move overlaps by less than eta/4.
ToleranceRep perturb(const ToleranceRep& r) {
    const int n = r.size();
    Rational eta = r.items[0].t;
    for (const auto& it : r.items) eta = std::min(eta, it.t);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational mt = std::min(r.items[i].t, r.items[j].t);
            Rational ov = overlap(r.items[i], r.items[j]);
            if (ov < mt) eta = std::min(eta, Rational(mt - ov));
        }
    eta /= 2;
    ToleranceRep shrunk = r;
    for (auto& it : shrunk.items) it.t -= eta;
    std::vector<Rational> top, bot;
    for (const auto& it : shrunk.items) {
        top.push_back(it.l + it.t);
        top.push_back(it.r);
        bot.push_back(it.l);
        bot.push_back(it.r - it.t);
    }
    Rational s = eta / (4 * n);
    for (auto g : {min_gap_of(top), min_gap_of(bot)})
        if (g) s = std::min(s, Rational(*g / (2 * n)));
    for (int i = 0; i < n; ++i) {
        shrunk.items[i].l += s * i;
        shrunk.items[i].r += s * i;
    }
    return shrunk;
}

}  // namespace

ParallelogramRep::ParallelogramRep(TrapezoidRep r) : rep_(std::move(r)) {
    validate(rep_);
    for (int i = 0; i < rep_.size(); ++i)
        if (!is_parallelogram(rep_.traps[i]))
            throw InvalidArgument("trapezoid " + std::to_string(i) + " is not a parallelogram (a-c != b-d)");
}

bool ToleranceRep::bounded() const {
    for (const auto& it : items)
        if (it.t > it.r - it.l) return false;
    return true;
}

void validate(const PermutationRep& r) {
    std::vector<std::pair<Rational, int>> top, bot;
    for (int i = 0; i < r.size(); ++i) {
        top.push_back({r.lines[i].top, i});
        bot.push_back({r.lines[i].bottom, i});
    }
    check_distinct(top, "top");
    check_distinct(bot, "bottom");
}

void validate(const TrapezoidRep& r) {
    std::vector<std::pair<Rational, int>> top, bot;
    for (int i = 0; i < r.size(); ++i) {
        const auto& t = r.traps[i];
        if (!(t.a < t.b) || !(t.c < t.d))
            throw InvalidArgument("trapezoid " + std::to_string(i) + " violates a<b, c<d");
        top.push_back({t.a, i});
        top.push_back({t.b, i});
        bot.push_back({t.c, i});
        bot.push_back({t.d, i});
    }
    check_distinct(top, "top");
    check_distinct(bot, "bottom");
}

void validate(const ToleranceRep& r) {
    for (int i = 0; i < r.size(); ++i) {
        const auto& it = r.items[i];
        if (!(it.t > 0)) throw InvalidArgument("nonpositive tolerance at vertex " + std::to_string(i));
        if (!(it.l < it.r)) throw InvalidArgument("empty interval at vertex " + std::to_string(i));
    }
}

bool is_parallelogram(const Trapezoid& t) { return t.a - t.c == t.b - t.d; }

bool lines_cross(const Line& x, const Line& y) {
    return (x.top < y.top) != (x.bottom < y.bottom);
}

bool left_of(const Trapezoid& x, const Trapezoid& y) { return x.b < y.a && x.d < y.c; }

Trapezoid as_trapezoid(const Line& l) { return {l.top, l.top, l.bottom, l.bottom}; }

Graph graph_of_permutation_rep(const PermutationRep& r) {
    validate(r);
    Graph g(r.size());
    for (int i = 0; i < r.size(); ++i)
        for (int j = i + 1; j < r.size(); ++j)
            if (lines_cross(r.lines[i], r.lines[j])) g.add_edge(i, j);
    return g;
}

Graph intersection_graph(const std::vector<Trapezoid>& elems) {
    const int n = static_cast<int>(elems.size());
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!left_of(elems[i], elems[j]) && !left_of(elems[j], elems[i])) g.add_edge(i, j);
    return g;
}

Graph graph_of_trapezoid_rep(const TrapezoidRep& r) {
    validate(r);
    return intersection_graph(r.traps);
}

Graph graph_of_parallelogram_rep(const ParallelogramRep& r) { return graph_of_trapezoid_rep(r.traps()); }

Graph graph_of_tolerance_rep(const ToleranceRep& r) {
    validate(r);
    Graph g(r.size());
    for (int i = 0; i < r.size(); ++i)
        for (int j = i + 1; j < r.size(); ++j)
            if (overlap(r.items[i], r.items[j]) >= std::min(r.items[i].t, r.items[j].t)) g.add_edge(i, j);
    return g;
}

PermutationRep vertical_flip(const PermutationRep& r) {
    PermutationRep o = r;
    for (auto& l : o.lines) {
        l.top = -l.top;
        l.bottom = -l.bottom;
    }
    return o;
}

TrapezoidRep vertical_flip(const TrapezoidRep& r) {
    TrapezoidRep o;
    for (const auto& t : r.traps) o.traps.push_back({-t.b, -t.a, -t.d, -t.c});
    return o;
}

ParallelogramRep vertical_flip(const ParallelogramRep& r) { return ParallelogramRep(vertical_flip(r.traps())); }

PermutationRep horizontal_flip(const PermutationRep& r) {
    PermutationRep o = r;
    for (auto& l : o.lines) std::swap(l.top, l.bottom);
    return o;
}

TrapezoidRep horizontal_flip(const TrapezoidRep& r) {
    TrapezoidRep o;
    for (const auto& t : r.traps) o.traps.push_back({t.c, t.d, t.a, t.b});
    return o;
}

ParallelogramRep horizontal_flip(const ParallelogramRep& r) { return ParallelogramRep(horizontal_flip(r.traps())); }

PermutationRep block_horizontal_flip(const PermutationRep& r, const VertexSet& block) {
    if (block.empty()) return r;
    std::vector<char> in(r.size(), 0);
    for (Vertex v : block) {
        if (v < 0 || v >= r.size()) throw InvalidArgument("block id out of range");
        in[v] = 1;
    }
    Rational lo = r.lines[block[0]].top, hi = lo;
    for (Vertex v : block)
        for (const auto& x : {r.lines[v].top, r.lines[v].bottom}) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    for (int i = 0; i < r.size(); ++i) {
        if (in[i]) continue;
        for (const auto& x : {r.lines[i].top, r.lines[i].bottom})
            if (lo <= x && x <= hi)
                throw InvalidArgument("line " + std::to_string(i) + " has a coordinate inside the block's range");
    }
    PermutationRep o = r;
    for (Vertex v : block) std::swap(o.lines[v].top, o.lines[v].bottom);
    return o;
}

ParallelogramRep tolerance_to_parallelogram(const ToleranceRep& r) {
    validate(r);
    if (!r.bounded()) throw InvalidArgument("tolerance rep is not bounded");
    if (r.size() == 0) return ParallelogramRep();
    const Graph g = graph_of_tolerance_rep(r);
    ParallelogramRep out = direct_conversion(conversion_ok(r) ? r : perturb(r));
    auto v = verify_rep(out, g);
    if (!v) throw InternalError("tolerance_to_parallelogram changed the graph");
    return out;
}

ToleranceRep parallelogram_to_tolerance(const ParallelogramRep& r) {
    ToleranceRep out;
    if (r.size() == 0) return out;
    const auto& tr = r.traps().traps;
    Rational m = tr[0].c - tr[0].a;
    for (const auto& t : tr) m = std::max(m, Rational(t.c - t.a));
    m += 1;
    for (const auto& t : tr) out.items.push_back({t.c, t.b + m, t.a + m - t.c});
    if (!out.bounded()) throw InternalError("parallelogram_to_tolerance produced an unbounded rep");
    if (!verify_rep(out, graph_of(r))) throw InternalError("parallelogram_to_tolerance changed the graph");
    return out;
}

PermutationRep renormalize(const PermutationRep& r) {
    std::vector<Rational> top, bot;
    for (const auto& l : r.lines) {
        top.push_back(l.top);
        bot.push_back(l.bottom);
    }
    auto rt = ranks(top), rb = ranks(bot);
    PermutationRep o;
    for (const auto& l : r.lines) o.lines.push_back({Rational(rt[l.top]), Rational(rb[l.bottom])});
    return o;
}

TrapezoidRep renormalize(const TrapezoidRep& r) {
    std::vector<Rational> top, bot;
    for (const auto& t : r.traps) {
        top.push_back(t.a);
        top.push_back(t.b);
        bot.push_back(t.c);
        bot.push_back(t.d);
    }
    auto rt = ranks(top), rb = ranks(bot);
    TrapezoidRep o;
    for (const auto& t : r.traps)
        o.traps.push_back({Rational(rt[t.a]), Rational(rt[t.b]), Rational(rb[t.c]), Rational(rb[t.d])});
    return o;
}

std::optional<Rational> min_rail_gap(const TrapezoidRep& r) {
    std::vector<Rational> top, bot;
    for (const auto& t : r.traps) {
        top.push_back(t.a);
        top.push_back(t.b);
        bot.push_back(t.c);
        bot.push_back(t.d);
    }
    auto a = min_gap_of(top), b = min_gap_of(bot);
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

std::optional<Rational> min_rail_gap(const PermutationRep& r) {
    std::vector<Rational> top, bot;
    for (const auto& l : r.lines) {
        top.push_back(l.top);
        bot.push_back(l.bottom);
    }
    auto a = min_gap_of(top), b = min_gap_of(bot);
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

VerifyResult compare_graphs(const Graph& from_rep, const Graph& g) {
    if (from_rep.n() != g.n())
        throw InvalidArgument("id mismatch: rep has " + std::to_string(from_rep.n()) + " vertices, graph has " +
                              std::to_string(g.n()));
    VerifyResult res;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            bool a = from_rep.has_edge(u, v), b = g.has_edge(u, v);
            if (a != b) {
                res.ok = false;
                res.mismatch = Edge{u, v};
                res.edge_in_rep = a;
                return res;
            }
        }
    return res;
}

VerifyResult verify_rep(const PermutationRep& r, const Graph& g) { return compare_graphs(graph_of(r), g); }
VerifyResult verify_rep(const TrapezoidRep& r, const Graph& g) { return compare_graphs(graph_of(r), g); }
VerifyResult verify_rep(const ParallelogramRep& r, const Graph& g) { return compare_graphs(graph_of(r), g); }
VerifyResult verify_rep(const ToleranceRep& r, const Graph& g) { return compare_graphs(graph_of(r), g); }

}  // namespace tolrec
