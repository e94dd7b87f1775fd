#ifndef GEOBURN_GENERATE_HPP
#define GEOBURN_GENERATE_HPP

/// \file
/// \brief Seeded instance and formula generators.
///
/// Randomness comes from std::mt19937_64, whose output sequence is fixed by
/// the standard; values are mapped to doubles and ranges by hand so results
/// do not depend on the standard library's distribution implementations.

#include "geoburn/core.hpp"
#include "geoburn/hardness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace geoburn {

class Rng
{
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    /// Uniform integer in [lo, hi].
    std::int64_t integer(std::int64_t lo, std::int64_t hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(eng_() % span);
    }
    bool coin(double p) { return unit() < p; }

    template <class T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(i) - 1))]);
    }

private:
    std::mt19937_64 eng_;
};

enum class GenKind
{
    UniformSquare,
    Clustered,
    Collinear,
    LsatReduction
};

inline GenKind parse_gen_kind(const std::string& s)
{
    if (s == "uniform-square")
        return GenKind::UniformSquare;
    if (s == "clustered")
        return GenKind::Clustered;
    if (s == "collinear")
        return GenKind::Collinear;
    if (s == "lsat-reduction")
        return GenKind::LsatReduction;
    throw PreconditionError("unknown generator kind '" + s + "'");
}

struct GenParams
{
    std::size_t n = 10;
    /// Side of the sampling square (or length of the segment).
    double side = 10.0;
    std::size_t clusters = 3;
    /// Cluster radius.
    double spread = 1.0;
    /// Snap coordinates to multiples of grid when positive.
    double grid = 0.0;
    /// Draw per-point rates from {1, 2, ..., max_rate} when max_rate > 1.
    int max_rate = 1;
    /// lsat-reduction: variable count of the random formula.
    int variables = 3;
};

namespace detail {

inline double snap(double v, double grid)
{
    return grid > 0.0 ? std::round(v / grid) * grid : v;
}

} // namespace detail

/// A random formula in which every literal occurs in at most one element (a
/// lone clause, or two clauses sharing one literal), so it is always valid
/// LSAT. Now and then one literal is left out entirely. Unit clauses make
/// unsatisfiable draws possible.
inline LsatFormula random_lsat(int variables, Rng& rng)
{
    if (variables < 1)
        throw PreconditionError("random_lsat needs at least one variable");
    std::vector<Literal> pool;
    for (int v = 0; v < variables; ++v) {
        pool.push_back({v, true});
        pool.push_back({v, false});
    }
    rng.shuffle(pool);
    if (pool.size() > 2 && rng.coin(0.2))
        pool.pop_back();
    auto clause_size = [&](std::size_t cap) {
        const double u = rng.unit();
        const std::size_t want = u < 0.4 ? 1 : (u < 0.75 ? 2 : 3);
        return std::min(want, cap);
    };
    LsatFormula f;
    f.variable_count = variables;
    std::size_t next = 0;
    while (next < pool.size()) {
        const std::size_t left = pool.size() - next;
        if (left >= 2 && rng.coin(0.4)) {
            // Pair sharing pool[next]; sizes a, b with a + b - 1 <= left.
            const std::size_t a = clause_size(std::min<std::size_t>(3, left));
            const std::size_t b = clause_size(std::min<std::size_t>(3, left - a + 1));
            if (a + b - 1 <= left) {
                const Literal shared = pool[next++];
                std::vector<Literal> u{shared}, w;
                for (std::size_t i = 1; i < a; ++i)
                    u.push_back(pool[next++]);
                for (std::size_t i = 1; i < b; ++i)
                    w.push_back(pool[next++]);
                w.push_back(shared);
                f.clauses.push_back(std::move(u));
                f.clauses.push_back(std::move(w));
                continue;
            }
        }
        std::vector<Literal> c;
        const std::size_t s = clause_size(std::min<std::size_t>(3, left));
        for (std::size_t i = 0; i < s; ++i)
            c.push_back(pool[next++]);
        f.clauses.push_back(std::move(c));
    }
    // Clause order is shuffled too, so pairs are not always adjacent.
    rng.shuffle(f.clauses);
    return f;
}

inline Instance generate(GenKind kind, const GenParams& p, std::uint64_t seed)
{
    Rng rng(seed);
    Instance inst;
    switch (kind) {
    case GenKind::UniformSquare:
        for (std::size_t i = 0; i < p.n; ++i)
            inst.points.push_back({detail::snap(rng.uniform(0.0, p.side), p.grid),
                                   detail::snap(rng.uniform(0.0, p.side), p.grid)});
        break;
    case GenKind::Clustered: {
        if (p.clusters == 0)
            throw PreconditionError("clustered generator needs at least one cluster");
        std::vector<Point> centers;
        for (std::size_t c = 0; c < p.clusters; ++c)
            centers.push_back({rng.uniform(0.0, p.side), rng.uniform(0.0, p.side)});
        for (std::size_t i = 0; i < p.n; ++i) {
            const Point& c = centers[i % centers.size()];
            const double r = p.spread * std::sqrt(rng.unit());
            const double a = 2.0 * std::numbers::pi * rng.unit();
            inst.points.push_back({detail::snap(c.x + r * std::cos(a), p.grid), detail::snap(c.y + r * std::sin(a), p.grid)});
        }
        break;
    }
    case GenKind::Collinear: {
        inst.dimension = 1;
        std::vector<double> xs;
        for (std::size_t i = 0; i < p.n; ++i)
            xs.push_back(detail::snap(rng.uniform(0.0, p.side), p.grid));
        std::sort(xs.begin(), xs.end());
        for (double x : xs)
            inst.points.push_back({x, 0.0});
        break;
    }
    case GenKind::LsatReduction: {
        const LsatFormula f = random_lsat(p.variables, rng);
        return build_reduction(f).instance;
    }
    }
    if (p.max_rate > 1)
        for (std::size_t i = 0; i < inst.size(); ++i)
            inst.rates.push_back(static_cast<double>(rng.integer(1, p.max_rate)));
    return inst;
}

} // namespace geoburn

#endif // GEOBURN_GENERATE_HPP
