#include "tolrec/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "tolrec/error.hpp"

namespace tolrec {

namespace {

long pick(std::mt19937_64& rng, long lo, long hi) {  // inclusive
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

template <class T>
const T& choose(std::mt19937_64& rng, const std::vector<T>& v) {
    return v[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(v.size()) - 1))];
}

Rational frac(long p, long q) {
    Rational x{mpz_class(p), mpz_class(q)};
    x.canonicalize();
    return x;
}

bool distinct_endpoints(const TrapezoidRep& r) {
    try {
        validate(r);
        return true;
    } catch (const InvalidArgument&) {
        return false;
    }
}

}  // namespace

ParallelogramRep random_parallelogram_rep(int n, std::uint64_t seed) {
    if (n < 1) throw InvalidArgument("n must be positive");
    std::mt19937_64 rng(seed);
    static const std::vector<long> spans{10, 30, 100, 300}, widths{3, 10, 30, 100}, shears{3, 10, 30, 100};
    static const std::vector<long> dens{1, 2, 3, 7};
    for (;;) {
        long S = choose(rng, spans), W = choose(rng, widths), D = choose(rng, shears), q = choose(rng, dens);
        TrapezoidRep r;
        for (int i = 0; i < n; ++i) {
            long a = pick(rng, 0, S - 1), w = pick(rng, 1, W), d = pick(rng, -D, D);
            r.traps.push_back({frac(a, q), frac(a + w, q), frac(a - d, q), frac(a + w - d, q)});
        }
        if (distinct_endpoints(r)) return ParallelogramRep(std::move(r));
    }
}

TrapezoidRep random_trapezoid_rep(int n, std::uint64_t seed) {
    if (n < 1) throw InvalidArgument("n must be positive");
    std::mt19937_64 rng(seed);
    static const std::vector<long> spans{10, 30, 100}, widths{3, 10, 30};
    for (;;) {
        long S = choose(rng, spans), W = choose(rng, widths);
        TrapezoidRep r;
        for (int i = 0; i < n; ++i) {
            long a = pick(rng, 0, S - 1), c = pick(rng, 0, S - 1);
            r.traps.push_back({Rational(a), Rational(a + pick(rng, 1, W)), Rational(c), Rational(c + pick(rng, 1, W))});
        }
        if (distinct_endpoints(r)) return r;
    }
}

ToleranceRep random_bounded_tolerance_rep(int n, std::uint64_t seed) {
    if (n < 1) throw InvalidArgument("n must be positive");
    std::mt19937_64 rng(seed);
    const long span = pick(rng, 5, 40);
    ToleranceRep r;
    for (int i = 0; i < n; ++i) {
        long l = pick(rng, 0, span), len = pick(rng, 1, 15);
        long t = pick(rng, 0, 3) == 0 ? len : pick(rng, 1, len);
        r.items.push_back({Rational(l), Rational(l + len), Rational(t)});
    }
    return r;
}

MonotoneCnf random_monotone_cnf(int n, int k, std::uint64_t seed) {
    if (n < 3 || k < 1 || n > 3 * k) throw InvalidArgument("need 3 <= n <= 3k");
    long total = static_cast<long>(n) * (n - 1) * (n - 2) / 6;
    if (k > total) throw InvalidArgument("more clauses than distinct triples");
    std::mt19937_64 rng(seed);
    for (;;) {
        std::set<std::array<int, 3>> seen;
        MonotoneCnf f;
        f.n = n;
        while (f.k() < k) {
            std::array<int, 3> c{};
            std::set<int> vs;
            while (vs.size() < 3) vs.insert(static_cast<int>(pick(rng, 1, n)));
            std::copy(vs.begin(), vs.end(), c.begin());
            if (seen.insert(c).second) f.clauses.push_back(c);
        }
        try {
            require_all_variables(f);
            return f;
        } catch (const InvalidArgument&) {
        }
    }
}

}  // namespace tolrec
