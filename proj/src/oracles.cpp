#include "tolrec/oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "tolrec/error.hpp"

namespace tolrec {

bool is_nae_satisfying(const MonotoneCnf& f, const Assignment& a) {
    if (static_cast<int>(a.size()) != f.n) throw InvalidArgument("assignment length differs from variable count");
    for (const auto& c : f.clauses) {
        bool t = a[c[0] - 1] || a[c[1] - 1] || a[c[2] - 1];
        bool fl = !a[c[0] - 1] || !a[c[1] - 1] || !a[c[2] - 1];
        if (!t || !fl) return false;
    }
    return true;
}

std::optional<Assignment> nae_sat_bruteforce(const MonotoneCnf& f, int guard) {
    if (f.n > guard) throw GuardExceeded("nae_sat_bruteforce: n=" + std::to_string(f.n) + " exceeds guard");
    std::vector<unsigned> masks;
    for (const auto& c : f.clauses) {
        unsigned m = 0;
        for (int v : c) m |= 1u << (f.n - v);  // x1 is the most significant bit
        masks.push_back(m);
    }
    for (unsigned long a = 0; a < (1ul << f.n); ++a) {
        bool ok = true;
        for (unsigned m : masks) {
            unsigned hit = static_cast<unsigned>(a) & m;
            if (hit == 0 || hit == m) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        Assignment out(f.n);
        for (int p = 1; p <= f.n; ++p) out[p - 1] = (a >> (f.n - p)) & 1;
        return out;
    }
    return std::nullopt;
}

std::vector<int> assignment_to_flips(const MonotoneCnf& f, const Assignment& a) {
    if (static_cast<int>(a.size()) != f.n) throw InvalidArgument("assignment length differs from variable count");
    std::vector<int> out;
    for (int p = 0; p < f.n; ++p)
        if (!a[p]) out.push_back(p);
    return out;
}

bool EquivalenceReport::consistent() const {
    if (sat != flip) return false;
    if (sat && (!certificate_acyclic || !parallelogram_ok)) return false;
    return true;
}

EquivalenceReport check_equivalence(const MonotoneCnf& f, int max_n, int max_k) {
    if (f.n > max_n || f.k() > max_k)
        throw GuardExceeded("check_equivalence: formula exceeds n<=" + std::to_string(max_n) +
                            ", k<=" + std::to_string(max_k));
    EquivalenceReport r;
    auto art = build_Pphi(f);
    r.assignment = nae_sat_bruteforce(f);
    r.sat = r.assignment.has_value();
    r.flip_set = find_acyclic_flip(art.rp, art.merge_pairs, art.blocks);
    r.flip = r.flip_set.has_value();
    if (r.sat) {
        auto flips = assignment_to_flips(f, *r.assignment);
        r.certificate_acyclic = is_acyclic_wrt_pairs(flip_blocks(art.rp, art.blocks, flips), art.merge_pairs).acyclic;
        auto g = build_Gphi(art);
        auto h = build_Hphi(g.graph, g.rep);
        auto flipped = flip_hphi_blocks(art, h.rep, flips);
        if (!verify_rep(flipped, h.graph)) throw InternalError("block flip of R_H changed the graph");
        auto p = parallelogramize(flipped);
        r.parallelogram_ok = p.rep.has_value() && verify_rep(*p.rep, h.graph).ok;
        r.parallelogram_route = p.rep ? p.route : p.reason;
    }
    return r;
}

namespace {

class OrientSearch {
public:
    explicit OrientSearch(const Graph& g) : g_(g), id_(static_cast<std::size_t>(g.n()) * g.n(), -1) {
        for (auto [u, v] : g.edges()) {
            id_[idx(u, v)] = id_[idx(v, u)] = static_cast<int>(ends_.size());
            ends_.push_back({u, v});
        }
    }

    std::optional<Orientation> run() {
        std::vector<signed char> dir(ends_.size(), 0);
        if (!search(dir)) return std::nullopt;
        Orientation o;
        for (std::size_t e = 0; e < ends_.size(); ++e) {
            auto [u, v] = ends_[e];
            o.arcs.push_back(dir[e] > 0 ? Arc{u, v} : Arc{v, u});
        }
        std::sort(o.arcs.begin(), o.arcs.end());
        if (!is_transitive(o, g_)) return std::nullopt;
        return o;
    }

private:
    std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * g_.n() + v; }

    // 1 if x -> y, -1 if y -> x, 0 if unset
    int arc(const std::vector<signed char>& dir, int x, int y) const {
        int e = id_[idx(x, y)];
        if (dir[e] == 0) return 0;
        bool fwd = ends_[e].first == x;
        return (dir[e] > 0) == fwd ? 1 : -1;
    }

    bool force(std::vector<signed char>& dir, std::deque<Arc>& q, int x, int y) const {
        int s = arc(dir, x, y);
        if (s == 1) return true;
        if (s == -1) return false;
        int e = id_[idx(x, y)];
        dir[e] = ends_[e].first == x ? 1 : -1;
        q.push_back({x, y});
        return true;
    }

    bool propagate(std::vector<signed char>& dir, std::deque<Arc>& q) const {
        while (!q.empty()) {
            auto [x, y] = q.front();
            q.pop_front();
            for (int z : g_.adj(x)) {
                if (z == y) continue;
                if (!g_.has_edge(y, z) && !force(dir, q, x, z)) return false;
                if (g_.has_edge(y, z) && arc(dir, z, x) == 1 && !force(dir, q, z, y)) return false;
            }
            for (int z : g_.adj(y)) {
                if (z == x) continue;
                if (!g_.has_edge(x, z) && !force(dir, q, z, y)) return false;
                if (g_.has_edge(x, z) && arc(dir, y, z) == 1 && !force(dir, q, x, z)) return false;
            }
        }
        return true;
    }

    bool search(std::vector<signed char>& dir) const {
        auto it = std::find(dir.begin(), dir.end(), 0);
        if (it == dir.end()) return true;
        int e = static_cast<int>(it - dir.begin());
        for (int choice : {1, -1}) {
            std::vector<signed char> trial = dir;
            std::deque<Arc> q;
            auto [u, v] = ends_[e];
            bool ok = choice > 0 ? force(trial, q, u, v) : force(trial, q, v, u);
            if (ok && propagate(trial, q) && search(trial)) {
                dir = std::move(trial);
                return true;
            }
        }
        return false;
    }

    const Graph& g_;
    std::vector<int> id_;
    std::vector<Edge> ends_;
};

}  // namespace

std::optional<Orientation> is_comparability(const Graph& g, int guard) {
    if (g.n() > guard) throw GuardExceeded("is_comparability: n=" + std::to_string(g.n()) + " exceeds guard");
    return OrientSearch(g).run();
}

bool is_permutation_graph(const Graph& g, int guard) {
    return is_comparability(g, guard).has_value() && is_comparability(complement(g), guard).has_value();
}

std::optional<MonotoneCnf> find_smallest_nae_unsat(int max_n, int max_k) {
    for (int k = 1; k <= max_k; ++k)
        for (int n = 3; n <= max_n; ++n) {
            if (3 * k < n) continue;
            std::vector<std::array<int, 3>> triples;
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b)
                    for (int c = b + 1; c <= n; ++c) triples.push_back({a, b, c});
            const int T = static_cast<int>(triples.size());
            if (k > T) continue;
            std::vector<unsigned> tm(T);
            for (int i = 0; i < T; ++i)
                for (int v : triples[i]) tm[i] |= 1u << (v - 1);
            const unsigned full = (1u << n) - 1;
            // assignments still NAE-satisfying the chosen prefix, as a bitset over 2^n
            std::vector<int> pick;
            std::optional<MonotoneCnf> found;
            std::function<void(int, unsigned, const std::vector<char>&)> rec =
                [&](int start, unsigned used, const std::vector<char>& alive) {
                    if (found) return;
                    if (static_cast<int>(pick.size()) == k) {
                        if (used != full) return;
                        if (std::find(alive.begin(), alive.end(), 1) != alive.end()) return;
                        MonotoneCnf f;
                        f.n = n;
                        for (int i : pick) f.clauses.push_back(triples[i]);
                        found = f;
                        return;
                    }
                    for (int i = start; i <= T - (k - static_cast<int>(pick.size())); ++i) {
                        std::vector<char> next(alive);
                        for (unsigned a = 0; a <= full; ++a) {
                            unsigned hit = a & tm[i];
                            if (hit == 0 || hit == tm[i]) next[a] = 0;
                        }
                        pick.push_back(i);
                        rec(i + 1, used | tm[i], next);
                        pick.pop_back();
                        if (found) return;
                    }
                };
            rec(0, 0, std::vector<char>(full + 1, 1));
            if (found) return found;
        }
    return std::nullopt;
}

MonotoneCnf worked_formula() {
    MonotoneCnf f;
    f.n = 4;
    f.clauses = {{1, 2, 3}, {2, 3, 4}, {1, 2, 4}};
    return f;
}

MonotoneCnf unsat_fixture() {
    // Fano plane; frozen output of find_smallest_nae_unsat(7, 7).
    MonotoneCnf f;
    f.n = 7;
    f.clauses = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
    return f;
}

Graph split_fixture_graph() {
    // u=0 u1=1 u2=2 u3=3 v1=4 v2=5 v3=6 v4=7
    return Graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {3, 5}, {2, 6}, {3, 6}, {3, 7}});
}

std::vector<std::string> split_fixture_labels() { return {"u", "u1", "u2", "u3", "v1", "v2", "v3", "v4"}; }

TrapezoidRep closure_counterexample_rep() {
    auto q = [](long p, long d) {
        Rational x{mpz_class(p), mpz_class(d)};
        x.canonicalize();
        return x;
    };
    auto iv = [](const Rational& l, const Rational& r) { return Trapezoid{l, r, l, r}; };
    TrapezoidRep r;
    r.traps = {
        iv(q(9, 2), q(6, 1)),     // u
        iv(q(1, 2), q(47, 10)),   // u1
        iv(q(11, 2), q(15, 2)),   // u2
        iv(q(5, 2), q(19, 2)),    // u3
        iv(q(0, 1), q(1, 1)),     // v1
        iv(q(2, 1), q(3, 1)),     // v2
        iv(q(7, 1), q(8, 1)),     // v3
        iv(q(9, 1), q(10, 1)),    // v4
    };
    return r;
}

}  // namespace tolrec
