#ifndef GEOBURN_PTAS1D_HPP
#define GEOBURN_PTAS1D_HPP

/// \file
/// \brief (1+eps)-approximation of the anywhere and point burning numbers of
/// collinear point sets.
///
/// For a guess delta the delta fire intervals (radii 0..delta-1) are sorted
/// into t groups and every interval of group j is enlarged to radius
/// j*delta/t. A dynamic program over "intervals left per group, points left
/// uncovered from the left" decides whether the enlarged intervals cover the
/// input; if not, delta is a proven lower bound. At the first feasible guess
/// the intervals are ignited largest first and the fire runs ceil(2*delta/t)
/// extra steps so that every interval reaches its enlarged size.

#include "geoburn/core.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

namespace geoburn {

struct GroupSpec
{
    int delta = 0;
    int t = 0;
    std::vector<int> group_sizes;
    std::vector<double> relaxed_radius;
    /// Steps burned after the last ignition: ceil(2*delta/t), or 0 when exact.
    int extra_steps = 0;
    /// True when every group is a single interval at its true radius.
    bool exact = false;
};

/// Interval i (i = 1..delta, true radius i-1) goes to group ceil(i*t/delta);
/// group j is relaxed to radius j*delta/t.
inline GroupSpec build_groups(int delta, int t)
{
    if (t < 1 || delta < 1)
        throw PreconditionError("build_groups needs delta >= 1 and t >= 1");
    if (t > delta)
        throw PreconditionError("group count t = " + std::to_string(t) + " exceeds delta = " + std::to_string(delta));
    GroupSpec g;
    g.delta = delta;
    g.t = t;
    g.group_sizes.assign(static_cast<std::size_t>(t), 0);
    for (long i = 1; i <= delta; ++i) {
        const long j = (i * t + delta - 1) / delta;
        ++g.group_sizes[static_cast<std::size_t>(j - 1)];
    }
    for (int j = 1; j <= t; ++j)
        g.relaxed_radius.push_back(static_cast<double>(j) * delta / t);
    g.extra_steps = (2 * delta + t - 1) / t;
    return g;
}

/// Singleton groups at the true radii 0..delta-1; used when t > delta.
inline GroupSpec exact_groups(int delta)
{
    if (delta < 1)
        throw PreconditionError("exact_groups needs delta >= 1");
    GroupSpec g;
    g.delta = delta;
    g.t = delta;
    g.group_sizes.assign(static_cast<std::size_t>(delta), 1);
    for (int j = 0; j < delta; ++j)
        g.relaxed_radius.push_back(j);
    g.exact = true;
    return g;
}

/// Intervals left per group plus the number of leftmost points still uncovered.
struct CoverState
{
    std::vector<int> remaining;
    int prefix = 0;

    friend auto operator<=>(const CoverState&, const CoverState&) = default;
};

struct Placement
{
    int group = 0;
    double center = 0.0;
    double radius = 0.0;
};

struct DpResult
{
    bool feasible = false;
    std::vector<Placement> placements;
    std::size_t states = 0;
};

namespace detail {

class CoverDp
{
public:
    CoverDp(const std::vector<double>& xs, const GroupSpec& spec, BurnModel model, double unit)
        : xs_(xs), spec_(spec), model_(model), unit_(unit)
    {
    }

    DpResult run()
    {
        CoverState start{spec_.group_sizes, static_cast<int>(xs_.size())};
        DpResult res;
        res.feasible = solve(start);
        res.states = memo_.size();
        if (res.feasible) {
            CoverState s = start;
            while (s.prefix > 0) {
                const int j = memo_.at(s);
                auto [next, center] = step(s, j);
                res.placements.push_back({j, center, spec_.relaxed_radius[static_cast<std::size_t>(j)]});
                s = std::move(next);
            }
        }
        return res;
    }

private:
    /// Number of points with coordinate < x (beyond tolerance).
    int count_left_of(double x) const
    {
        return static_cast<int>(std::lower_bound(xs_.begin(), xs_.end(), x - kTolerance) - xs_.begin());
    }

    /// Places one interval of group j against the rightmost uncovered point.
    std::pair<CoverState, double> step(const CoverState& s, int j) const
    {
        const double z = xs_[static_cast<std::size_t>(s.prefix - 1)];
        const double r = spec_.relaxed_radius[static_cast<std::size_t>(j)] * unit_;
        CoverState next = s;
        --next.remaining[static_cast<std::size_t>(j)];
        double center;
        if (model_ == BurnModel::Anywhere) {
            center = z - r;
            next.prefix = count_left_of(z - 2 * r);
        } else {
            // Leftmost input point whose interval still reaches z.
            center = xs_[static_cast<std::size_t>(count_left_of(z - r))];
            next.prefix = count_left_of(center - r);
        }
        return {std::move(next), center};
    }

    /// memo_[s] = group used first from s, or -1 when s is infeasible.
    bool solve(const CoverState& s)
    {
        if (s.prefix == 0)
            return true;
        if (auto it = memo_.find(s); it != memo_.end())
            return it->second >= 0;
        int answer = -1;
        for (int j = 0; j < static_cast<int>(s.remaining.size()) && answer < 0; ++j) {
            if (s.remaining[static_cast<std::size_t>(j)] == 0)
                continue;
            if (solve(step(s, j).first))
                answer = j;
        }
        memo_[s] = answer;
        return answer >= 0;
    }

    const std::vector<double>& xs_;
    const GroupSpec& spec_;
    BurnModel model_;
    double unit_;
    std::map<CoverState, int> memo_;
};

} // namespace detail

/// Decides whether the relaxed intervals of spec cover the sorted, distinct
/// coordinates xs; radii are multiplied by unit. Placements are reported in
/// right-to-left order.
inline DpResult dp_cover(const std::vector<double>& xs, const GroupSpec& spec, BurnModel model, double unit = 1.0)
{
    if (!std::is_sorted(xs.begin(), xs.end()) || std::adjacent_find(xs.begin(), xs.end()) != xs.end())
        throw PreconditionError("dp_cover needs sorted, distinct coordinates");
    detail::CoverDp dp(xs, spec, model, unit);
    return dp.run();
}

struct Ptas1dResult
{
    BurnSchedule schedule;
    /// Accepted guess; a lower bound on the burning number.
    int delta = 0;
    int t = 0;
    GroupSpec groups;
    std::vector<Placement> placements;
    /// Guesses proven infeasible before acceptance.
    std::vector<int> rejected;
    std::size_t states = 0;
};

inline int groups_for_epsilon(double epsilon)
{
    if (!(epsilon > 0.0))
        throw PreconditionError("epsilon must be positive");
    return static_cast<int>(std::ceil(2.0 / epsilon - 1e-12));
}

/// Guess loop over delta = 1, 2, ...; see the file comment.
inline Ptas1dResult ptas_burning_1d(const Instance& inst, BurnModel model, double epsilon)
{
    check_instance(inst);
    if (inst.dimension != 1)
        throw PreconditionError("ptas_burning_1d needs a 1D instance");
    if (!inst.uniform_rates())
        throw PreconditionError("ptas_burning_1d needs uniform rates");

    Ptas1dResult res;
    res.t = groups_for_epsilon(epsilon);
    res.schedule.model = {model, 1};
    if (inst.empty())
        return res;

    const double unit = inst.rate(0);
    std::vector<double> xs;
    for (const Point& p : inst.points)
        xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    for (int delta = 1;; ++delta) {
        GroupSpec spec = res.t > delta ? exact_groups(delta) : build_groups(delta, res.t);
        DpResult dp = dp_cover(xs, spec, model, unit);
        res.states += dp.states;
        if (!dp.feasible) {
            res.rejected.push_back(delta);
            continue;
        }
        res.delta = delta;
        res.groups = spec;
        res.placements = dp.placements;
        break;
    }

    std::vector<Placement> order = res.placements;
    std::stable_sort(order.begin(), order.end(), [](const Placement& a, const Placement& b) {
        return a.radius != b.radius ? a.radius > b.radius : a.center < b.center;
    });
    const int T = res.delta + res.groups.extra_steps;
    res.schedule.total_steps = T;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int step = static_cast<int>(i) + 1;
        if (static_cast<double>(T - step) + kTolerance < order[i].radius)
            throw Error("ptas_burning_1d: interval ignited at step " + std::to_string(step) +
                        " cannot reach its relaxed radius");
        res.schedule.sources.push_back({{order[i].center, 0.0}, step, unit});
    }
    return res;
}

} // namespace geoburn

#endif // GEOBURN_PTAS1D_HPP
