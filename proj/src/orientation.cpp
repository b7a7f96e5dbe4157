#include "tolrec/orientation.hpp"

#include <algorithm>
#include <deque>

#include "tolrec/error.hpp"

namespace tolrec {

std::vector<int> PairSet::owners(int n) const {
    std::vector<int> own(n, -1);
    for (int k = 0; k < size(); ++k) {
        auto [x, y] = pairs[k];
        if (x < 0 || y < 0 || x >= n || y >= n) throw InvalidArgument("pair member out of range");
        if (x == y) throw InvalidArgument("pair " + std::to_string(k) + " repeats id " + std::to_string(x));
        for (int z : {x, y}) {
            if (own[z] != -1) throw InvalidArgument("id " + std::to_string(z) + " appears in two pairs");
            own[z] = k;
        }
    }
    for (int z = 0; z < n; ++z)
        if (own[z] == -1) throw InvalidArgument("id " + std::to_string(z) + " is not covered by the pairs");
    return own;
}

bool Orientation::has(Vertex x, Vertex y) const { return std::binary_search(arcs.begin(), arcs.end(), Arc{x, y}); }

Rational theta_key(const Line& l) { return l.bottom - l.top; }

Orientation transitive_orientation(const PermutationRep& r) {
    validate(r);
    Orientation o;
    for (int i = 0; i < r.size(); ++i)
        for (int j = i + 1; j < r.size(); ++j) {
            if (!lines_cross(r.lines[i], r.lines[j])) continue;
            Rational ki = theta_key(r.lines[i]), kj = theta_key(r.lines[j]);
            if (ki == kj) throw InternalError("crossing lines with equal displacement");
            if (ki < kj)
                o.arcs.emplace_back(i, j);
            else
                o.arcs.emplace_back(j, i);
        }
    std::sort(o.arcs.begin(), o.arcs.end());
    return o;
}

bool is_transitive(const Orientation& o, const Graph& g) {
    std::vector<std::vector<Vertex>> out(g.n());
    for (auto [x, y] : o.arcs) out[x].push_back(y);
    for (auto [x, y] : o.arcs)
        for (Vertex z : out[y])
            if (!o.has(x, z)) return false;
    // every edge oriented exactly once
    if (o.arcs.size() != g.edge_count()) return false;
    for (auto [x, y] : o.arcs)
        if (!g.has_edge(x, y) || o.has(y, x)) return false;
    return true;
}

MergedDigraph merge_pairs(const Orientation& phi, const PairSet& pairs, int n_ids) {
    auto own = pairs.owners(n_ids);
    MergedDigraph d;
    d.n = pairs.size();
    for (auto [x, y] : phi.arcs) {
        if (x < 0 || y < 0 || x >= n_ids || y >= n_ids) throw InvalidArgument("arc endpoint out of range");
        if (own[x] == own[y])
            d.loops.push_back(own[x]);
        else
            d.arcs.emplace_back(own[x], own[y]);
    }
    std::sort(d.arcs.begin(), d.arcs.end());
    d.arcs.erase(std::unique(d.arcs.begin(), d.arcs.end()), d.arcs.end());
    std::sort(d.loops.begin(), d.loops.end());
    d.loops.erase(std::unique(d.loops.begin(), d.loops.end()), d.loops.end());
    return d;
}

std::optional<std::vector<int>> shortest_cycle(const MergedDigraph& d) {
    if (!d.loops.empty()) return std::vector<int>{d.loops.front()};
    std::vector<std::vector<int>> out(d.n);
    for (auto [x, y] : d.arcs) out[x].push_back(y);
    std::optional<std::vector<int>> best;
    for (int s = 0; s < d.n; ++s) {
        // BFS from s; a cycle through s closes on an arc back into s.
        std::vector<int> parent(d.n, -2), dist(d.n, -1);
        std::deque<int> q{s};
        dist[s] = 0;
        parent[s] = -1;
        int close = -1;
        while (!q.empty() && close < 0) {
            int x = q.front();
            q.pop_front();
            if (best && dist[x] + 1 >= static_cast<int>(best->size())) break;
            for (int y : out[x]) {
                if (y == s) {
                    close = x;
                    break;
                }
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push_back(y);
                }
            }
        }
        if (close < 0) continue;
        std::vector<int> cyc;
        for (int x = close; x != -1; x = parent[x]) cyc.push_back(x);
        std::reverse(cyc.begin(), cyc.end());
        if (!best || cyc.size() < best->size()) best = cyc;
    }
    return best;
}

AcyclicityVerdict is_acyclic_wrt_pairs(const PermutationRep& r, const PairSet& pairs) {
    auto d = merge_pairs(transitive_orientation(r), pairs, r.size());
    AcyclicityVerdict v;
    if (auto c = shortest_cycle(d)) {
        v.acyclic = false;
        v.witness = *c;
    }
    return v;
}

LineSplit split_lines_rep(const TrapezoidRep& r) {
    validate(r);
    LineSplit s;
    for (int v = 0; v < r.size(); ++v) {
        s.lines.lines.push_back(r.traps[v].left());
        s.lines.lines.push_back(r.traps[v].right());
        s.pairs.pairs.emplace_back(2 * v, 2 * v + 1);
    }
    return s;
}

TrapezoidRep join_lines_rep(const PermutationRep& lines) {
    if (lines.size() % 2 != 0) throw InvalidArgument("odd number of lines");
    TrapezoidRep r;
    for (int v = 0; 2 * v < lines.size(); ++v) {
        const Line& l = lines.lines[2 * v];
        const Line& q = lines.lines[2 * v + 1];
        r.traps.push_back({l.top, q.top, l.bottom, q.bottom});
    }
    validate(r);
    return r;
}

AcyclicityVerdict is_acyclic_trapezoid_rep(const TrapezoidRep& r) {
    auto s = split_lines_rep(r);
    return is_acyclic_wrt_pairs(s.lines, s.pairs);
}

PermutationRep flip_blocks(const PermutationRep& r, const std::vector<VertexSet>& blocks,
                           const std::vector<int>& which) {
    PermutationRep out = r;
    for (int b : which) {
        if (b < 0 || b >= static_cast<int>(blocks.size())) throw InvalidArgument("block index out of range");
        out = block_horizontal_flip(out, blocks[b]);
    }
    return out;
}

std::optional<std::vector<int>> find_acyclic_flip(const PermutationRep& r, const PairSet& pairs,
                                                  const std::vector<VertexSet>& blocks) {
    const int nb = static_cast<int>(blocks.size());
    if (nb > 30) throw GuardExceeded("too many blocks for exhaustive flip search");
    std::vector<int> seen(r.size(), 0);
    for (const auto& b : blocks)
        for (Vertex v : b) {
            if (v < 0 || v >= r.size()) throw InvalidArgument("block id out of range");
            if (seen[v]++) throw InvalidArgument("blocks overlap at id " + std::to_string(v));
        }
    for (int v = 0; v < r.size(); ++v)
        if (!seen[v]) throw InvalidArgument("blocks do not cover id " + std::to_string(v));
    pairs.owners(r.size());
    for (unsigned long mask = 0; mask < (1ul << nb); ++mask) {
        std::vector<int> which;
        for (int b = 0; b < nb; ++b)
            if (mask >> b & 1) which.push_back(b);
        if (is_acyclic_wrt_pairs(flip_blocks(r, blocks, which), pairs).acyclic) return which;
    }
    return std::nullopt;
}

}  // namespace tolrec
