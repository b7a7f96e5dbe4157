#include "tolrec/reduction.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "tolrec/error.hpp"
#include "tolrec/structure.hpp"

namespace tolrec {

MonotoneCnf parse_cnf(const std::string& text) {
    MonotoneCnf f;
    std::istringstream in(text);
    std::string line;
    int declared_n = -1, declared_k = -1, max_var = 0;
    std::vector<long> pending;
    int lineno = 0;
    auto fail = [&](const std::string& msg) { return InvalidArgument("cnf line " + std::to_string(lineno) + ": " + msg); };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c" || tok[0] == '%') continue;
        if (tok == "p") {
            std::string fmt;
            if (!(ls >> fmt >> declared_n >> declared_k) || fmt != "cnf" || declared_n < 0 || declared_k < 0)
                throw fail("malformed header");
            continue;
        }
        ls.clear();
        ls.str(line);
        while (ls >> tok) {
            long v;
            try {
                std::size_t used = 0;
                v = std::stol(tok, &used);
                if (used != tok.size()) throw fail("bad token '" + tok + "'");
            } catch (const std::logic_error&) {
                throw fail("bad token '" + tok + "'");
            }
            if (v < 0) throw fail("negated literal " + tok + " (formula must be monotone)");
            if (v > 0) {
                pending.push_back(v);
                continue;
            }
            if (pending.size() != 3)
                throw fail("clause has " + std::to_string(pending.size()) + " literals, expected 3");
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i) c[i] = static_cast<int>(pending[i]);
            std::sort(c.begin(), c.end());
            if (c[0] == c[1] || c[1] == c[2]) throw fail("repeated variable in clause");
            max_var = std::max(max_var, c[2]);
            f.clauses.push_back(c);
            pending.clear();
        }
    }
    if (!pending.empty()) throw fail("last clause is not terminated by 0");
    if (declared_n >= 0) {
        if (max_var > declared_n) throw InvalidArgument("variable exceeds declared count");
        if (declared_k >= 0 && declared_k != f.k()) throw InvalidArgument("clause count differs from header");
        f.n = declared_n;
    } else {
        f.n = max_var;
    }
    return f;
}

std::string to_dimacs(const MonotoneCnf& f) {
    std::ostringstream out;
    out << "p cnf " << f.n << ' ' << f.k() << '\n';
    for (const auto& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
    return out.str();
}

void require_all_variables(const MonotoneCnf& f) {
    std::vector<char> used(f.n + 1, 0);
    for (const auto& c : f.clauses)
        for (int v : c) {
            if (v < 1 || v > f.n) throw InvalidArgument("variable " + std::to_string(v) + " out of range");
            used[v] = 1;
        }
    for (int p = 1; p <= f.n; ++p)
        if (!used[p]) throw InvalidArgument("variable " + std::to_string(p) + " occurs in no clause");
}

ReductionArtifacts build_Pphi(const MonotoneCnf& f, std::optional<std::uint64_t> seed) {
    require_all_variables(f);
    for (const auto& c : f.clauses)
        if (!(c[0] < c[1] && c[1] < c[2])) throw InvalidArgument("clause is not sorted with distinct variables");
    ReductionArtifacts art;
    art.formula = f;
    const int k = f.k();
    // occurrences per variable, (clause, position)
    std::vector<std::vector<std::pair<int, int>>> occ(f.n + 1);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < 3; ++j) occ[f.clauses[i][j]].emplace_back(i, j);
    if (seed) {
        std::mt19937_64 rng(*seed);
        for (auto& o : occ) std::shuffle(o.begin(), o.end(), rng);
    }
    static const char* names[3][2] = {{"a", "c"}, {"e", "b"}, {"d", "f"}};
    // first line (l^1) and second line (l^2) of each (clause, position)
    std::vector<std::array<int, 3>> first(k), second(k);
    std::vector<std::pair<int, int>> connectors;
    std::vector<Edge> edges;
    int slot = 0;
    art.blocks.resize(f.n);
    for (int p = 1; p <= f.n; ++p) {
        int prev_slot = -1, prev_l1 = -1;
        int gap = 0;
        for (auto [i, j] : occ[p]) {
            const int s = 8 * slot++;
            int l1 = art.rp.size();
            art.rp.lines.push_back({Rational(s + 1), Rational(s + 6)});
            art.labels.push_back(names[j][0] + std::to_string(i + 1));
            int l2 = art.rp.size();
            art.rp.lines.push_back({Rational(s + 6), Rational(s + 1)});
            art.labels.push_back(names[j][1] + std::to_string(i + 1));
            first[i][j] = l1;
            second[i][j] = l2;
            art.blocks[p - 1].insert(art.blocks[p - 1].end(), {l1, l2});
            edges.emplace_back(l1, l2);
            if (prev_slot >= 0) {
                // two parallel connectors crossing exactly the two l^1 lines
                ++gap;
                int cu = art.rp.size();
                art.rp.lines.push_back({Rational(s + 3), Rational(prev_slot + 3)});
                art.labels.push_back("u" + std::to_string(p) + "_" + std::to_string(gap));
                int cv = art.rp.size();
                art.rp.lines.push_back({Rational(s + 5), Rational(prev_slot + 5)});
                art.labels.push_back("v" + std::to_string(p) + "_" + std::to_string(gap));
                connectors.emplace_back(cu, cv);
                art.blocks[p - 1].insert(art.blocks[p - 1].end(), {cu, cv});
                for (int c : {cu, cv}) {
                    edges.emplace_back(std::min(c, prev_l1), std::max(c, prev_l1));
                    edges.emplace_back(std::min(c, l1), std::max(c, l1));
                }
            }
            prev_slot = s;
            prev_l1 = l1;
        }
        std::sort(art.blocks[p - 1].begin(), art.blocks[p - 1].end());
        ++slot;  // spacer between blocks
    }
    for (int i = 0; i < k; ++i) {
        int a = first[i][0], c = second[i][0];
        int e = first[i][1], b = second[i][1];
        int d = first[i][2], ff = second[i][2];
        art.merge_pairs.pairs.emplace_back(a, b);
        art.merge_pairs.pairs.emplace_back(c, d);
        art.merge_pairs.pairs.emplace_back(e, ff);
    }
    for (auto pr : connectors) art.merge_pairs.pairs.push_back(pr);
    art.connector_count = 2 * static_cast<int>(connectors.size());

    art.pphi = Graph(art.rp.size(), edges);
    auto v = verify_rep(art.rp, art.pphi);
    if (!v) throw InternalError("R_P does not realize the constructed P_phi");
    art.merge_pairs.owners(art.rp.size());
    return art;
}

TrapezoidInstance build_Gphi(const ReductionArtifacts& art) {
    TrapezoidInstance out;
    for (auto [x, y] : art.merge_pairs.pairs) {
        Line l = art.rp.lines.at(x), r = art.rp.lines.at(y);
        if (r.top < l.top) std::swap(l, r);
        if (lines_cross(l, r)) throw InternalError("merge pair lines cross");
        out.rep.traps.push_back({l.top, r.top, l.bottom, r.bottom});
    }
    out.graph = graph_of(out.rep);
    return out;
}

namespace {

Trapezoid shifted(const Line& l, const Rational& lo, const Rational& hi) {
    return {l.top + lo, l.top + hi, l.bottom + lo, l.bottom + hi};
}

// Every endpoint of the rail inside [lo, hi] must belong to `own`.
void check_contiguous(const std::vector<Rational>& rail, const Rational& lo, const Rational& hi, std::size_t own) {
    auto b = std::lower_bound(rail.begin(), rail.end(), lo);
    auto e = std::upper_bound(rail.begin(), rail.end(), hi);
    if (static_cast<std::size_t>(e - b) != own) throw InternalError("foreign endpoint inside a gadget window");
}

}  // namespace

TrapezoidInstance build_Hphi(const Graph& g, const TrapezoidRep& rg) {
    if (!verify_rep(rg, g)) throw InvalidArgument("representation does not realize the graph");
    const int m = rg.size();
    TrapezoidRep out = rg;
    std::vector<Rational> eps(m);
    for (int i = 0; i < m; ++i) {
        Rational e = *min_rail_gap(out);
        eps[i] = e;
        const Line l = out.traps[i].left(), r = out.traps[i].right();
        out.traps.push_back(shifted(l, -e / 2, e / 2));
        out.traps.push_back(shifted(l, -3 * e / 4, -e / 4));
        out.traps.push_back(shifted(l, -7 * e / 8, -3 * e / 8));
        out.traps.push_back(shifted(r, -e / 2, e / 2));
        out.traps.push_back(shifted(r, e / 4, 3 * e / 4));
        out.traps.push_back(shifted(r, 3 * e / 8, 7 * e / 8));
    }
    try {
        validate(out);
    } catch (const InvalidArgument& ex) {
        throw InternalError(std::string("gadget endpoints coincide: ") + ex.what());
    }
    std::vector<Rational> top, bot;
    for (const auto& t : out.traps) {
        top.insert(top.end(), {t.a, t.b});
        bot.insert(bot.end(), {t.c, t.d});
    }
    std::sort(top.begin(), top.end());
    std::sort(bot.begin(), bot.end());
    for (int i = 0; i < m; ++i) {
        const Rational& e = eps[i];
        const auto& t = out.traps[i];
        // window around each line: its own endpoint plus 3 gadgets x 2 endpoints
        check_contiguous(top, t.a - 7 * e / 8, t.a + e / 2, 7);
        check_contiguous(bot, t.c - 7 * e / 8, t.c + e / 2, 7);
        check_contiguous(top, t.b - e / 2, t.b + 7 * e / 8, 7);
        check_contiguous(bot, t.d - e / 2, t.d + 7 * e / 8, 7);
    }
    TrapezoidInstance res;
    res.graph = graph_of(out);
    for (int i = 0; i < m; ++i)
        if (!is_standard_rep(res.graph, out, i))
            throw InternalError("R_H is not standard w.r.t. vertex " + std::to_string(i));
    res.rep = renormalize(out);
    if (!verify_rep(res.rep, res.graph)) throw InternalError("renormalize changed the graph");
    return res;
}

std::vector<VertexSet> hphi_line_blocks(const ReductionArtifacts& art, const TrapezoidRep& rh) {
    const int m = art.m();
    if (rh.size() != 7 * m) throw InvalidArgument("rep is not an H_phi rep of these artifacts");
    std::vector<int> block_of(art.rp.size(), -1);
    for (int b = 0; b < static_cast<int>(art.blocks.size()); ++b)
        for (Vertex x : art.blocks[b]) block_of[x] = b;
    std::vector<VertexSet> out(art.blocks.size());
    for (int i = 0; i < m; ++i) {
        auto [x, y] = art.merge_pairs.pairs[i];
        if (art.rp.lines[y].top < art.rp.lines[x].top) std::swap(x, y);
        int bl = block_of[x], br = block_of[y];
        out[bl].push_back(2 * i);
        out[br].push_back(2 * i + 1);
        for (int j = 0; j < 6; ++j) {
            int v = m + 6 * i + j;
            int b = j < 3 ? bl : br;
            out[b].insert(out[b].end(), {2 * v, 2 * v + 1});
        }
    }
    for (auto& s : out) std::sort(s.begin(), s.end());
    return out;
}

TrapezoidRep flip_hphi_blocks(const ReductionArtifacts& art, const TrapezoidRep& rh, const std::vector<int>& which) {
    auto s = split_lines_rep(rh);
    return join_lines_rep(flip_blocks(s.lines, hphi_line_blocks(art, rh), which));
}

std::vector<Vertex> derivative_to_line(const ReductionArtifacts& art, const std::vector<bool>& first_is_left) {
    if (static_cast<int>(first_is_left.size()) != art.m()) throw InvalidArgument("one side flag per merge pair expected");
    std::vector<Vertex> map(2 * art.m());
    for (int i = 0; i < art.m(); ++i) {
        auto [x, y] = art.merge_pairs.pairs[i];
        if (art.rp.lines[y].top < art.rp.lines[x].top) std::swap(x, y);
        map[2 * i] = first_is_left[i] ? x : y;
        map[2 * i + 1] = first_is_left[i] ? y : x;
    }
    return map;
}

}  // namespace tolrec
