#ifndef GEOBURN_BURN2D_HPP
#define GEOBURN_BURN2D_HPP

/// \file
/// \brief Planar approximation pipelines.
///
/// Each pipeline guesses delta = 1, 2, ... and solves a covering problem for
/// the guess: a discrete disk cover (anywhere and point burning) or a disk
/// graph dominating set (non-uniform rates, k-burning). A guess is rejected
/// while the cover is too large to come from a delta-step schedule; the first
/// accepted cover is turned into a schedule. Every schedule is run through
/// validate_schedule before it is returned.

#include "geoburn/core.hpp"
#include "geoburn/cover.hpp"
#include "geoburn/oracle.hpp"

#include <cmath>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace geoburn {

/// Fraction of the cover disks ignited in the first phase of anywhere burning.
inline constexpr double kPhaseOneFraction = 0.92188;
/// Remaining fraction, each covered by five template fires.
inline constexpr double kLeftoverFraction = 0.07812;
/// Share of the second phase during which template fires are lit (1 - 0.6094).
inline constexpr double kTemplateWindow = 0.3906;

struct Burn2dOptions
{
    double epsilon = 0.5;
    /// Use the exact cover / dominating-set solver instead of local search.
    bool strict_oracle = false;
    OracleOptions oracle;
};

struct GuessRecord
{
    int delta = 0;
    std::size_t cover_size = 0;
    bool accepted = false;
    /// Left side of the stopping test: |cover| / (1 + eps).
    double scaled_size = 0.0;
    /// Right side: delta (or k*delta).
    double bound = 0.0;
};

struct GuessTrace
{
    std::vector<GuessRecord> guesses;
    /// Human-readable schedule arithmetic, one line per derived quantity.
    std::vector<std::string> arithmetic;
    /// True when the schedule constructor had to fall back to the plain
    /// "ignite every cover center" schedule (a failed covering assertion).
    bool fallback = false;

    int phase1_steps = 0;
    int phase2_steps = 0;
    int template_ignitions = 0;
    int late_disks = 0;
    int zone_ignitions = 0;
    int extra_steps = 0;
    double h = 1.0;
};

struct Burn2dResult
{
    BurnSchedule schedule;
    GuessTrace trace;
    /// Accepted guess.
    int delta = 0;
    /// Centers of the accepted cover (or dominating set), ignition order.
    std::vector<Point> cover;
};

namespace detail {

inline int ceil_int(double x)
{
    return static_cast<int>(std::ceil(x - 1e-9));
}

inline std::string fmt(double v)
{
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
}

inline std::vector<Point> sorted_centers(const std::vector<Point>& pool, const std::vector<std::size_t>& idx)
{
    std::vector<Point> out;
    for (std::size_t i : idx)
        out.push_back(pool[i]);
    std::stable_sort(out.begin(), out.end(), lex_less);
    return out;
}

inline double uniform_unit(const Instance& inst, const char* who)
{
    check_instance(inst);
    if (!inst.uniform_rates())
        throw PreconditionError(std::string(who) + " needs uniform rates");
    return inst.empty() ? 1.0 : inst.rate(0);
}

/// Runs the disk-cover guess loop and returns the accepted cover indices.
inline std::vector<std::size_t> cover_guess_loop(const Instance& inst, const std::vector<Point>& centers,
                                                 double unit, const Burn2dOptions& opt, GuessTrace& trace,
                                                 int& delta_out)
{
    for (int delta = 1;; ++delta) {
        CoverInstance ci{inst.points, centers, delta * unit};
        std::vector<std::size_t> chosen = opt.strict_oracle
                                              ? exact_disk_cover(ci.targets, ci.candidate_centers, ci.radius, opt.oracle)
                                              : disk_cover_approx(ci, opt.epsilon).chosen;
        GuessRecord rec{delta, chosen.size(), false, chosen.size() / (1.0 + opt.epsilon), static_cast<double>(delta)};
        rec.accepted = rec.scaled_size <= rec.bound + 1e-9;
        trace.guesses.push_back(rec);
        if (rec.accepted) {
            delta_out = delta;
            trace.arithmetic.push_back("accept delta = " + std::to_string(delta) + ": |U'| = " +
                                       std::to_string(chosen.size()) + ", |U'|/(1+eps) = " + fmt(rec.scaled_size) +
                                       " <= " + std::to_string(delta));
            return chosen;
        }
    }
}

inline void finish_or_fallback(const Instance& inst, Burn2dResult& res, int phase2)
{
    if (validate_schedule(inst, res.schedule).valid)
        return;
    res.trace.fallback = true;
    BurnSchedule plain{res.schedule.model, 0, {}};
    const double unit = inst.empty() ? 1.0 : inst.rate(0);
    for (std::size_t i = 0; i < res.cover.size(); ++i)
        plain.sources.push_back({res.cover[i], static_cast<int>(i) + 1, unit});
    plain.total_steps = static_cast<int>(res.cover.size()) + phase2;
    while (!validate_schedule(inst, plain).valid)
        ++plain.total_steps;
    res.trace.arithmetic.push_back("fallback: covering construction failed validation; T = " +
                                   std::to_string(plain.total_steps));
    res.schedule = std::move(plain);
}

} // namespace detail

/// Anywhere burning in the plane: the first 0.92188 fraction of the accepted
/// cover disks are ignited at their centers; after ceil(delta(1+eps)) more
/// steps those fires reach radius delta. Each leftover disk is covered by
/// five 0.6094*delta template fires lit early in that second phase.
inline Burn2dResult anywhere_burning_2d(const Instance& inst, const Burn2dOptions& opt = {})
{
    const double unit = detail::uniform_unit(inst, "anywhere_burning_2d");
    if (!(opt.epsilon > 0.0))
        throw PreconditionError("epsilon must be positive");
    Burn2dResult res;
    res.schedule.model = {BurnModel::Anywhere, 1};
    if (inst.empty())
        return res;

    const std::vector<Point> centers = candidate_centers(inst.points);
    auto& tr = res.trace;
    const auto chosen = detail::cover_guess_loop(inst, centers, unit, opt, tr, res.delta);
    res.cover = detail::sorted_centers(centers, chosen);
    const int delta = res.delta;
    const int m = static_cast<int>(res.cover.size());
    const double stretched = delta * (1.0 + opt.epsilon);

    const int phase1 = static_cast<int>((92188L * m + 99999L) / 100000L);
    const int leftover = m - phase1;
    const int phase2 = detail::ceil_int(stretched);
    const int window = detail::ceil_int(kTemplateWindow * stretched);
    tr.phase1_steps = phase1;
    tr.phase2_steps = phase2;
    tr.template_ignitions = 5 * leftover;
    tr.arithmetic.push_back("phase1 = ceil(0.92188 * " + std::to_string(m) + ") = " + std::to_string(phase1));
    tr.arithmetic.push_back("leftover = " + std::to_string(m) + " - " + std::to_string(phase1) + " = " +
                            std::to_string(leftover) + " <= 0.07812 * |U'| = " + detail::fmt(kLeftoverFraction * m));
    tr.arithmetic.push_back("phase2 = ceil(delta * (1 + eps)) = ceil(" + detail::fmt(stretched) +
                            ") = " + std::to_string(phase2));
    tr.arithmetic.push_back("template ignitions = 5 * " + std::to_string(leftover) + " = " +
                            std::to_string(5 * leftover) + " <= ceil(0.3906 * delta * (1 + eps)) = " +
                            std::to_string(window));

    const int T = phase1 + phase2;
    res.schedule.total_steps = T;
    for (int i = 0; i < phase1; ++i)
        res.schedule.sources.push_back({res.cover[static_cast<std::size_t>(i)], i + 1, unit});

    const FiveDiskTemplate tmpl = five_disk_template();
    int step = phase1;
    for (int i = phase1; i < m; ++i)
        for (const Point& c : tmpl.placed(res.cover[static_cast<std::size_t>(i)], delta * unit))
            res.schedule.sources.push_back({c, ++step, unit});
    const double reach = (T - step) * unit;
    tr.arithmetic.push_back("last template fire radius = " + detail::fmt(reach) + " >= 0.6094 * delta = " +
                            detail::fmt(kFiveDiskRadius * delta * unit));
    tr.arithmetic.push_back("T = phase1 + phase2 = " + std::to_string(T));

    if (leftover > 0 && (5 * leftover > window || reach + kTolerance < tmpl.radius * delta * unit))
        tr.arithmetic.push_back("template window exceeded");
    detail::finish_or_fallback(inst, res, phase2);
    return res;
}

/// Point burning in the plane: ignite every center of the accepted cover
/// (centers restricted to input points), then burn ceil(26 delta(1+eps)/27)
/// more steps. Fires that end below radius delta leave a thin annulus
/// (26/27..1 of delta); each of its 13 zones holding an unburned point gets
/// one extra ignition at such a point.
inline Burn2dResult point_burning_2d(const Instance& inst, const Burn2dOptions& opt = {})
{
    const double unit = detail::uniform_unit(inst, "point_burning_2d");
    if (!(opt.epsilon > 0.0))
        throw PreconditionError("epsilon must be positive");
    Burn2dResult res;
    res.schedule.model = {BurnModel::Point, 1};
    if (inst.empty())
        return res;

    auto& tr = res.trace;
    const auto chosen = detail::cover_guess_loop(inst, inst.points, unit, opt, tr, res.delta);
    res.cover = detail::sorted_centers(inst.points, chosen);
    const int delta = res.delta;
    const int m = static_cast<int>(res.cover.size());
    const double stretched = delta * (1.0 + opt.epsilon);
    const int extra = detail::ceil_int(26.0 * stretched / 27.0);
    const int window = detail::ceil_int(13.0 * stretched / 27.0);
    const int T = m + extra;
    tr.phase1_steps = m;
    tr.extra_steps = extra;
    tr.arithmetic.push_back("extra = ceil(26 * delta * (1 + eps) / 27) = ceil(" + detail::fmt(26.0 * stretched / 27.0) +
                            ") = " + std::to_string(extra));
    tr.arithmetic.push_back("T = |U'| + extra = " + std::to_string(T));

    res.schedule.total_steps = T;
    for (int i = 0; i < m; ++i)
        res.schedule.sources.push_back({res.cover[static_cast<std::size_t>(i)], i + 1, unit});
    const BurnSchedule cover_only = res.schedule;

    const AnnulusZones zones = annulus_zones();
    const double full = delta * unit;
    std::vector<std::size_t> selected;
    for (int i = 0; i < m; ++i) {
        const Point& c = res.cover[static_cast<std::size_t>(i)];
        if ((T - (i + 1)) * unit + kTolerance >= full)
            continue;
        ++tr.late_disks;
        // zone -> unburned instance points of this disk's annulus
        std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(kZoneCount));
        for (std::size_t p = 0; p < inst.size(); ++p) {
            const double d = distance(inst.points[p], c);
            if (d > full + kTolerance || is_burned(inst.points[p], cover_only))
                continue;
            Point q = (1.0 / full) * (inst.points[p] - c);
            const double r = std::hypot(q.x, q.y);
            const double clamped = std::clamp(r, kAnnulusInner, 1.0);
            q = (clamped / r) * q;
            members[static_cast<std::size_t>(zones.zone_of(q))].push_back(p);
        }
        for (const auto& zone : members) {
            if (zone.empty())
                continue;
            if (std::any_of(zone.begin(), zone.end(), [&](std::size_t p) {
                    return std::find(selected.begin(), selected.end(), p) != selected.end();
                }))
                continue;
            selected.push_back(zone.front());
        }
    }
    tr.zone_ignitions = static_cast<int>(selected.size());
    for (std::size_t z = 0; z < selected.size(); ++z) {
        const int step = m + static_cast<int>(z) + 1;
        res.schedule.sources.push_back({inst.points[selected[z]], step, inst.rate(selected[z])});
        if ((T - step) * unit + kTolerance < 13.0 * full / 27.0)
            tr.arithmetic.push_back("zone fire at step " + std::to_string(step) + " falls short of 13/27 * delta");
    }
    tr.arithmetic.push_back("late disks = " + std::to_string(tr.late_disks) + ", zone ignitions = " +
                            std::to_string(selected.size()) + " <= ceil(13 * delta * (1 + eps) / 27) = " +
                            std::to_string(window));
    tr.arithmetic.push_back("zone fires reach >= 13/27 * delta = " + detail::fmt(13.0 * full / 27.0) +
                            ", inner disk 26/27 * delta = " + detail::fmt(26.0 * full / 27.0));
    detail::finish_or_fallback(inst, res, extra);
    return res;
}

/// Point k-burning with per-point rates. For guess delta every point t gets a
/// disk of radius (delta-1)/2 * r_t; the guess is accepted once
/// k*delta >= |E|/(1+eps) for the computed dominating set E. E is ignited k
/// per step (lexicographic order), followed by ceil(h (delta-1)) steps.
inline Burn2dResult k_burning_nonuniform(const Instance& inst, int k, const Burn2dOptions& opt = {})
{
    check_instance(inst);
    if (k < 1)
        throw PreconditionError("k must be at least 1");
    if (!(opt.epsilon > 0.0))
        throw PreconditionError("epsilon must be positive");
    Burn2dResult res;
    res.schedule.model = {BurnModel::Point, k};
    auto& tr = res.trace;
    tr.h = inst.rate_ratio();
    if (inst.empty())
        return res;

    const std::size_t n = inst.size();
    std::vector<std::size_t> dom;
    for (int delta = 1;; ++delta) {
        std::vector<double> radii(n);
        for (std::size_t i = 0; i < n; ++i)
            radii[i] = 0.5 * (delta - 1) * inst.rate(i);
        dom = opt.strict_oracle ? exact_dominating_set(inst.points, radii, opt.oracle)
                                : dominating_set_approx(inst.points, radii, opt.epsilon);
        GuessRecord rec{delta, dom.size(), false, dom.size() / (1.0 + opt.epsilon), static_cast<double>(k) * delta};
        rec.accepted = rec.bound + 1e-9 >= rec.scaled_size;
        tr.guesses.push_back(rec);
        if (rec.accepted) {
            res.delta = delta;
            break;
        }
    }

    std::vector<std::size_t> order = dom;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return lex_less(inst.points[a], inst.points[b]); });
    const int delta = res.delta;
    const int ignition = static_cast<int>((order.size() + static_cast<std::size_t>(k) - 1) / static_cast<std::size_t>(k));
    const int extra = detail::ceil_int(tr.h * (delta - 1));
    const int T = ignition + extra;
    tr.phase1_steps = ignition;
    tr.extra_steps = extra;
    tr.arithmetic.push_back("accept delta = " + std::to_string(delta) + ": |E| = " + std::to_string(order.size()) +
                            ", |E|/(1+eps) = " + detail::fmt(order.size() / (1.0 + opt.epsilon)) +
                            " <= k * delta = " + std::to_string(k * delta));
    tr.arithmetic.push_back("ignition steps = ceil(|E| / k) = " + std::to_string(ignition) +
                            ", extra = ceil(h * (delta - 1)) = ceil(" + detail::fmt(tr.h * (delta - 1)) +
                            ") = " + std::to_string(extra) + ", T = " + std::to_string(T));

    res.schedule.total_steps = T;
    for (std::size_t i = 0; i < order.size(); ++i) {
        res.cover.push_back(inst.points[order[i]]);
        res.schedule.sources.push_back(
            {inst.points[order[i]], static_cast<int>(i / static_cast<std::size_t>(k)) + 1, inst.rate(order[i])});
    }

    // Each point must be dominated by a source whose fire reaches it.
    for (std::size_t p = 0; p < n; ++p) {
        bool ok = false;
        for (const BurnSource& s : res.schedule.sources) {
            const double d = distance(inst.points[p], s.center);
            auto q = std::find(inst.points.begin(), inst.points.end(), s.center) - inst.points.begin();
            const double reach = 0.5 * (delta - 1) * (inst.rate(p) + inst.rate(static_cast<std::size_t>(q)));
            if (d <= reach + kTolerance && d <= burn_radius(s, T) + kTolerance) {
                ok = true;
                break;
            }
        }
        if (!ok)
            tr.arithmetic.push_back("point " + std::to_string(p) + " is not reached by a dominating fire");
    }
    detail::finish_or_fallback(inst, res, extra);
    return res;
}

/// Point burning with per-point rates (one ignition per step).
inline Burn2dResult point_burning_nonuniform(const Instance& inst, const Burn2dOptions& opt = {})
{
    return k_burning_nonuniform(inst, 1, opt);
}

struct MaxBurnSchedule
{
    BurnSchedule schedule;
    std::size_t burned = 0;
    /// Indices of the burned points.
    std::vector<std::size_t> burned_points;
};

/// Burns as many points as possible in q rounds igniting only points of S.
/// Radius group r (0..q-1) offers, per source, the points within r * rate; the
/// greedy picks one set per group. A source chosen in several groups keeps
/// only its largest radius (the smaller disk is nested inside), and groups
/// freed that way are refilled greedily with unused sources.
inline MaxBurnSchedule max_burn_schedule(const Instance& inst, const std::vector<std::size_t>& sources, int q)
{
    check_instance(inst);
    if (q < 1)
        throw PreconditionError("q must be at least 1");
    for (std::size_t s : sources)
        if (s >= inst.size())
            throw PreconditionError("source index " + std::to_string(s) + " out of range");

    MaxBurnSchedule out;
    out.schedule = {{BurnModel::Point, 1}, q, {}};
    if (sources.empty())
        return out;

    const auto rounds = static_cast<std::size_t>(q);
    std::vector<std::vector<std::vector<std::size_t>>> groups(rounds);
    for (std::size_t r = 0; r < rounds; ++r)
        for (std::size_t s : sources) {
            std::vector<std::size_t> set;
            for (std::size_t p = 0; p < inst.size(); ++p)
                if (distance(inst.points[p], inst.points[s]) <= static_cast<double>(r) * inst.rate(s) + kTolerance)
                    set.push_back(p);
            groups[r].push_back(std::move(set));
        }
    GroupSelection sel = max_coverage_group_budget(groups);

    // Largest radius per source.
    std::vector<std::optional<std::size_t>> radius_of(sources.size());
    for (std::size_t r = 0; r < rounds; ++r)
        if (auto j = sel.choice[r]; j && (!radius_of[*j] || *radius_of[*j] < r))
            radius_of[*j] = r;
    std::vector<std::optional<std::size_t>> owner(rounds);
    for (std::size_t j = 0; j < sources.size(); ++j)
        if (radius_of[j])
            owner[*radius_of[j]] = j;

    std::set<std::size_t> burned;
    auto absorb = [&](std::size_t r, std::size_t j) { burned.insert(groups[r][j].begin(), groups[r][j].end()); };
    for (std::size_t r = 0; r < rounds; ++r)
        if (owner[r])
            absorb(r, *owner[r]);
    for (std::size_t r = rounds; r-- > 0;) {
        if (owner[r])
            continue;
        std::size_t best_gain = 0, best = 0;
        for (std::size_t j = 0; j < sources.size(); ++j) {
            if (radius_of[j])
                continue;
            std::size_t gain = 0;
            for (std::size_t p : groups[r][j])
                gain += burned.count(p) ? 0 : 1;
            if (gain > best_gain) {
                best_gain = gain;
                best = j;
            }
        }
        if (best_gain > 0) {
            owner[r] = best;
            radius_of[best] = r;
            absorb(r, best);
        }
    }

    for (std::size_t r = rounds; r-- > 0;)
        if (owner[r]) {
            const std::size_t s = sources[*owner[r]];
            out.schedule.sources.push_back({inst.points[s], q - static_cast<int>(r), inst.rate(s)});
        }
    out.burned_points.assign(burned.begin(), burned.end());
    out.burned = burned.size();
    return out;
}

/// The instance restricted to the given point indices (rates follow).
inline Instance sub_instance(const Instance& inst, const std::vector<std::size_t>& keep)
{
    Instance out;
    out.dimension = inst.dimension;
    for (std::size_t i : keep) {
        out.points.push_back(inst.points.at(i));
        if (!inst.rates.empty())
            out.rates.push_back(inst.rates[i]);
    }
    return out;
}

} // namespace geoburn

#endif // GEOBURN_BURN2D_HPP
