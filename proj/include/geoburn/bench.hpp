#ifndef GEOBURN_BENCH_HPP
#define GEOBURN_BENCH_HPP

/// \file
/// \brief Ratio tables: approximation output against exact optima on small
/// random instances.

#include "geoburn/burn2d.hpp"
#include "geoburn/generate.hpp"
#include "geoburn/oracle.hpp"
#include "geoburn/ptas1d.hpp"

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace geoburn {

struct BenchRow
{
    std::size_t id = 0;
    std::string variant;
    std::size_t n = 0;
    double epsilon = 0.0;
    /// Exact optimum (burning number, or max points burned for maxburn).
    int optimum = 0;
    /// Value achieved by the algorithm (T, or points burned).
    int achieved = 0;
    double ratio = 0.0;
    double bound = 0.0;
    bool ok = true;
};

struct BenchOptions
{
    std::size_t trials = 20;
    std::uint64_t seed = 1;
    double epsilon = 0.5;
};

namespace detail {

inline int exact_or_throw(const Instance& inst, const Model& m)
{
    auto r = exact_burning_number(inst, m, static_cast<int>(inst.size()));
    if (!r)
        throw Error("oracle found no schedule within n steps");
    return r->burning_number;
}

inline BenchRow burning_row(std::size_t id, std::string variant, const Instance& inst, double eps, int opt,
                            const BurnSchedule& s, double bound)
{
    BenchRow row{id, std::move(variant), inst.size(), eps, opt, s.total_steps, 0.0, bound, true};
    row.ratio = opt > 0 ? static_cast<double>(s.total_steps) / opt : 1.0;
    row.ok = validate_schedule(inst, s).valid && s.total_steps <= bound + 1e-9;
    return row;
}

} // namespace detail

/// 1D PTAS, both models; bound on T is (1 + eps) delta* + 1.
inline std::vector<BenchRow> bench_ptas1d(const BenchOptions& o)
{
    std::vector<BenchRow> rows;
    Rng pick(o.seed);
    for (std::size_t id = 0; id < o.trials; ++id) {
        GenParams p;
        p.n = static_cast<std::size_t>(pick.integer(1, 10));
        p.side = pick.uniform(2.0, 20.0);
        p.grid = pick.coin(0.5) ? 0.5 : 0.0;
        const Instance inst = generate(GenKind::Collinear, p, o.seed * 1000003 + id);
        for (BurnModel m : {BurnModel::Point, BurnModel::Anywhere}) {
            const int opt = detail::exact_or_throw(inst, {m, 1});
            const auto res = ptas_burning_1d(inst, m, o.epsilon);
            rows.push_back(detail::burning_row(id, std::string("1d-") + to_string(m), inst, o.epsilon, opt,
                                               res.schedule, (1.0 + o.epsilon) * opt + 1.0));
        }
    }
    return rows;
}

/// Planar pipelines with the exact cover oracle; n <= 8.
inline std::vector<BenchRow> bench_burn2d(const BenchOptions& o)
{
    std::vector<BenchRow> rows;
    Rng pick(o.seed);
    Burn2dOptions bo;
    bo.epsilon = o.epsilon;
    bo.strict_oracle = true;
    for (std::size_t id = 0; id < o.trials; ++id) {
        GenParams p;
        p.n = static_cast<std::size_t>(pick.integer(1, 8));
        p.side = pick.uniform(1.0, 8.0);
        const Instance inst = generate(pick.coin(0.5) ? GenKind::UniformSquare : GenKind::Clustered, p,
                                       o.seed * 1000003 + id);
        const int any_opt = detail::exact_or_throw(inst, {BurnModel::Anywhere, 1});
        const auto any = anywhere_burning_2d(inst, bo);
        rows.push_back(detail::burning_row(id, "anywhere", inst, o.epsilon, any_opt, any.schedule,
                                           std::ceil(1.92188 * (1 + o.epsilon) * any_opt - 1e-9) + 2));
        const int pt_opt = detail::exact_or_throw(inst, {BurnModel::Point, 1});
        const auto pt = point_burning_2d(inst, bo);
        rows.push_back(detail::burning_row(id, "point", inst, o.epsilon, pt_opt, pt.schedule,
                                           std::ceil(53.0 / 27.0 * (1 + o.epsilon) * pt_opt - 1e-9) + 2));
    }
    return rows;
}

/// Non-uniform rates in {1, 2, 3}; bound (1 + h + eps) delta* + 2.
inline std::vector<BenchRow> bench_nonuniform(const BenchOptions& o)
{
    std::vector<BenchRow> rows;
    Rng pick(o.seed);
    Burn2dOptions bo;
    bo.epsilon = o.epsilon;
    bo.strict_oracle = true;
    for (std::size_t id = 0; id < o.trials; ++id) {
        GenParams p;
        p.n = static_cast<std::size_t>(pick.integer(1, 8));
        p.side = pick.uniform(1.0, 10.0);
        p.max_rate = 3;
        const Instance inst = generate(GenKind::UniformSquare, p, o.seed * 1000003 + id);
        const int k = static_cast<int>(pick.integer(1, 2));
        const int opt = detail::exact_or_throw(inst, {BurnModel::Point, k});
        const auto res = k_burning_nonuniform(inst, k, bo);
        const double h = inst.rate_ratio();
        rows.push_back(detail::burning_row(id, "k=" + std::to_string(k), inst, o.epsilon, opt, res.schedule,
                                           (1.0 + h + o.epsilon) * opt + 2.0));
    }
    return rows;
}

/// Greedy max-burn against exhaustive search; ratio = optimum / achieved,
/// bound 2.
inline std::vector<BenchRow> bench_maxburn(const BenchOptions& o)
{
    std::vector<BenchRow> rows;
    Rng pick(o.seed);
    for (std::size_t id = 0; id < o.trials; ++id) {
        GenParams p;
        p.n = static_cast<std::size_t>(pick.integer(1, 8));
        p.side = pick.uniform(1.0, 6.0);
        p.max_rate = pick.coin(0.5) ? 2 : 1;
        const Instance inst = generate(GenKind::UniformSquare, p, o.seed * 1000003 + id);
        std::vector<std::size_t> idx(inst.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        pick.shuffle(idx);
        idx.resize(static_cast<std::size_t>(pick.integer(1, std::min<std::int64_t>(4, static_cast<std::int64_t>(inst.size())))));
        const int q = static_cast<int>(pick.integer(1, 3));
        const auto exact = exact_max_burn(inst, idx, q);
        const auto greedy = max_burn_schedule(inst, idx, q);
        BenchRow row{id, "q=" + std::to_string(q), inst.size(), 0.0, static_cast<int>(exact.burned),
                     static_cast<int>(greedy.burned), 0.0, 2.0, true};
        row.ratio = greedy.burned > 0 ? static_cast<double>(exact.burned) / static_cast<double>(greedy.burned) : 1.0;
        row.ok = 2 * greedy.burned >= exact.burned &&
                 validate_schedule(sub_instance(inst, greedy.burned_points), greedy.schedule).valid;
        rows.push_back(row);
    }
    return rows;
}

inline std::vector<BenchRow> run_bench(const std::string& suite, const BenchOptions& o)
{
    if (suite == "ptas1d")
        return bench_ptas1d(o);
    if (suite == "burn2d")
        return bench_burn2d(o);
    if (suite == "nonuniform")
        return bench_nonuniform(o);
    if (suite == "maxburn")
        return bench_maxburn(o);
    throw PreconditionError("unknown bench suite '" + suite + "'");
}

/// Tab-separated table with a header line.
inline std::string format_bench(const std::vector<BenchRow>& rows)
{
    std::ostringstream os;
    os << "id\tvariant\tn\teps\toptimum\tachieved\tratio\tbound\tok\n";
    for (const BenchRow& r : rows)
        os << r.id << '\t' << r.variant << '\t' << r.n << '\t' << r.epsilon << '\t' << r.optimum << '\t'
           << r.achieved << '\t' << std::setprecision(6) << r.ratio << '\t' << r.bound << '\t'
           << (r.ok ? "yes" : "NO") << '\n';
    return os.str();
}

} // namespace geoburn

#endif // GEOBURN_BENCH_HPP
