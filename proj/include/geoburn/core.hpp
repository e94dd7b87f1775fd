#ifndef GEOBURN_CORE_HPP
#define GEOBURN_CORE_HPP

/// \file
/// \brief Shared data model and burning-process semantics.
///
/// A source ignited at step i with spread rate r has fire radius r*(T - i)
/// once T steps have elapsed. A schedule burns an instance when every point
/// lies inside some source's final disk. Everything else in the library is
/// checked against validate_schedule().

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace geoburn {

/// Additive slack for every containment test; disk boundaries count as covered.
inline constexpr double kTolerance = 1e-9;

/// Base class of all errors raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive search exceeded its configured budget or size limit.
class CapacityError : public Error
{
public:
    using Error::Error;
};

/// A documented precondition was violated by the caller.
class PreconditionError : public Error
{
public:
    using Error::Error;
};

struct Point
{
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Lexicographic order on (x, y); used wherever the library needs a fixed order.
inline bool lex_less(const Point& a, const Point& b)
{
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, const Point& p) { return {s * p.x, s * p.y}; }

inline double distance(const Point& p, const Point& q)
{
    return std::hypot(p.x - q.x, p.y - q.y);
}

inline bool same_point(const Point& p, const Point& q, double tol = kTolerance)
{
    return distance(p, q) <= tol;
}

inline std::string to_string(const Point& p)
{
    std::ostringstream os;
    os.precision(17);
    os << '(' << p.x << ", " << p.y << ')';
    return os.str();
}

/// A finite point set with optional per-point spread rates and an optional
/// designated subset of sources.
struct Instance
{
    std::vector<Point> points;
    /// Empty means every rate is 1.
    std::vector<double> rates;
    /// Indices into points; empty means "no designated subset".
    std::vector<std::size_t> sources;
    int dimension = 2;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    double rate(std::size_t i) const { return rates.empty() ? 1.0 : rates.at(i); }

    bool uniform_rates() const
    {
        return std::all_of(rates.begin(), rates.end(), [&](double r) { return r == rates.front(); });
    }

    /// Ratio of the fastest to the slowest rate (1 for uniform instances).
    double rate_ratio() const
    {
        if (rates.empty())
            return 1.0;
        auto [lo, hi] = std::minmax_element(rates.begin(), rates.end());
        return *hi / *lo;
    }
};

/// Throws PreconditionError naming the first violated Instance invariant.
inline void check_instance(const Instance& inst)
{
    if (inst.dimension != 1 && inst.dimension != 2)
        throw PreconditionError("instance dimension must be 1 or 2");
    for (std::size_t i = 0; i < inst.points.size(); ++i) {
        const Point& p = inst.points[i];
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw PreconditionError("point " + std::to_string(i) + " has a non-finite coordinate");
        if (inst.dimension == 1 && p.y != 0.0)
            throw PreconditionError("point " + std::to_string(i) + " has y != 0 in a 1D instance");
    }
    if (!inst.rates.empty()) {
        if (inst.rates.size() != inst.points.size())
            throw PreconditionError("rate count does not match point count");
        for (std::size_t i = 0; i < inst.rates.size(); ++i)
            if (!(inst.rates[i] > 0.0) || !std::isfinite(inst.rates[i]))
                throw PreconditionError("rate of point " + std::to_string(i) + " is not a positive number");
    }
    std::vector<std::size_t> seen = inst.sources;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw PreconditionError("source indices are not distinct");
    if (!seen.empty() && seen.back() >= inst.points.size())
        throw PreconditionError("source index out of range");
}

/// Removes exactly repeated points, keeping the first occurrence.
/// Returns the number of points removed. Rates and sources follow their points.
inline std::size_t deduplicate(Instance& inst)
{
    std::vector<std::size_t> remap(inst.points.size());
    Instance out;
    out.dimension = inst.dimension;
    for (std::size_t i = 0; i < inst.points.size(); ++i) {
        auto it = std::find(out.points.begin(), out.points.end(), inst.points[i]);
        if (it != out.points.end()) {
            remap[i] = static_cast<std::size_t>(it - out.points.begin());
            continue;
        }
        remap[i] = out.points.size();
        out.points.push_back(inst.points[i]);
        if (!inst.rates.empty())
            out.rates.push_back(inst.rates[i]);
    }
    for (std::size_t s : inst.sources) {
        std::size_t t = remap.at(s);
        if (std::find(out.sources.begin(), out.sources.end(), t) == out.sources.end())
            out.sources.push_back(t);
    }
    std::size_t removed = inst.points.size() - out.points.size();
    inst = std::move(out);
    return removed;
}

enum class BurnModel
{
    Point,
    Anywhere,
};

inline const char* to_string(BurnModel m)
{
    return m == BurnModel::Point ? "point" : "anywhere";
}

struct Model
{
    BurnModel tag = BurnModel::Point;
    /// Ignitions allowed per step.
    int k = 1;

    friend bool operator==(const Model&, const Model&) = default;
};

struct BurnSource
{
    Point center;
    int ignition_step = 1;
    double rate = 1.0;

    friend bool operator==(const BurnSource&, const BurnSource&) = default;
};

struct BurnSchedule
{
    Model model;
    int total_steps = 0;
    std::vector<BurnSource> sources;

    friend bool operator==(const BurnSchedule&, const BurnSchedule&) = default;
};

/// Fire radius of s after T steps.
inline double burn_radius(const BurnSource& s, int total_steps)
{
    if (s.ignition_step > total_steps)
        throw PreconditionError("ignition step " + std::to_string(s.ignition_step) +
                                " exceeds total steps " + std::to_string(total_steps));
    return s.rate * static_cast<double>(total_steps - s.ignition_step);
}

inline bool is_burned(const Point& p, const BurnSchedule& sched)
{
    return std::any_of(sched.sources.begin(), sched.sources.end(), [&](const BurnSource& s) {
        return s.ignition_step <= sched.total_steps &&
               distance(p, s.center) <= burn_radius(s, sched.total_steps) + kTolerance;
    });
}

/// Rule identifiers reported by validate_schedule().
namespace rule {
inline constexpr const char* kStepRange = "step-range";
inline constexpr const char* kStepCapacity = "step-capacity";
inline constexpr const char* kBadRate = "bad-rate";
inline constexpr const char* kBadModel = "bad-model";
inline constexpr const char* kNotInstancePoint = "center-not-instance-point";
inline constexpr const char* kDuplicateCenter = "duplicate-center";
inline constexpr const char* kRateMismatch = "rate-mismatch";
/// Non-fatal: a point-model source was already burning when ignited.
inline constexpr const char* kIgniteBurntPoint = "ignite-burnt-point";
} // namespace rule

struct Violation
{
    std::string rule;
    std::string message;
};

struct ValidationReport
{
    bool valid = true;
    std::vector<std::size_t> unburned;
    std::vector<Violation> violations;
    /// Non-fatal findings (currently only ignite-burnt-point).
    std::vector<Violation> warnings;

    bool has_warning(const std::string& r) const
    {
        return std::any_of(warnings.begin(), warnings.end(), [&](const Violation& v) { return v.rule == r; });
    }
    bool has_violation(const std::string& r) const
    {
        return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.rule == r; });
    }
};

namespace detail {

/// For each point-model source, the instance point it sits on (distinct
/// assignment, first unmatched candidate wins), or nullopt.
inline std::vector<std::optional<std::size_t>> match_sources(const Instance& inst, const BurnSchedule& sched,
                                                             std::vector<Violation>* problems)
{
    std::vector<std::optional<std::size_t>> match(sched.sources.size());
    std::vector<bool> taken(inst.size(), false);
    for (std::size_t s = 0; s < sched.sources.size(); ++s) {
        const Point& c = sched.sources[s].center;
        bool any = false;
        for (std::size_t i = 0; i < inst.size(); ++i) {
            if (!same_point(c, inst.points[i]))
                continue;
            any = true;
            if (!taken[i]) {
                taken[i] = true;
                match[s] = i;
                break;
            }
        }
        if (problems && !match[s]) {
            if (any)
                problems->push_back({rule::kDuplicateCenter,
                                     "source " + std::to_string(s) + " at " + to_string(c) +
                                         " reuses an instance point already ignited"});
            else
                problems->push_back({rule::kNotInstancePoint,
                                     "source " + std::to_string(s) + " at " + to_string(c) +
                                         " is not an instance point"});
        }
    }
    return match;
}

} // namespace detail

/// Checks step bounds, per-step capacity, the point-model placement rules and
/// coverage. Failures are reported, never thrown.
inline ValidationReport validate_schedule(const Instance& inst, const BurnSchedule& sched)
{
    ValidationReport rep;
    const int T = sched.total_steps;
    const int k = sched.model.k;

    if (k < 1)
        rep.violations.push_back({rule::kBadModel, "k must be at least 1"});
    if (T < 0)
        rep.violations.push_back({rule::kStepRange, "total_steps is negative"});

    std::vector<int> per_step(static_cast<std::size_t>(std::max(T, 0)) + 1, 0);
    for (std::size_t s = 0; s < sched.sources.size(); ++s) {
        const BurnSource& src = sched.sources[s];
        if (src.ignition_step < 1 || src.ignition_step > T) {
            rep.violations.push_back({rule::kStepRange, "source " + std::to_string(s) + " ignites at step " +
                                                            std::to_string(src.ignition_step) + " outside 1.." +
                                                            std::to_string(T)});
            continue;
        }
        if (!(src.rate > 0.0) || !std::isfinite(src.rate))
            rep.violations.push_back({rule::kBadRate, "source " + std::to_string(s) + " has a non-positive rate"});
        ++per_step[static_cast<std::size_t>(src.ignition_step)];
    }
    for (int step = 1; step <= T; ++step)
        if (k >= 1 && per_step[static_cast<std::size_t>(step)] > k)
            rep.violations.push_back({rule::kStepCapacity, std::to_string(per_step[static_cast<std::size_t>(step)]) +
                                                               " ignitions at step " + std::to_string(step) +
                                                               " exceed k = " + std::to_string(k)});

    if (sched.model.tag == BurnModel::Point) {
        auto match = detail::match_sources(inst, sched, &rep.violations);
        for (std::size_t s = 0; s < sched.sources.size(); ++s) {
            const BurnSource& src = sched.sources[s];
            if (match[s] && std::abs(inst.rate(*match[s]) - src.rate) > kTolerance)
                rep.violations.push_back({rule::kRateMismatch, "source " + std::to_string(s) +
                                                                   " does not spread at its point's rate"});
            // Fire state just before ignition at step i: radius rate*(i - j).
            for (const BurnSource& other : sched.sources) {
                if (other.ignition_step >= src.ignition_step)
                    continue;
                double r = other.rate * static_cast<double>(src.ignition_step - other.ignition_step);
                if (distance(other.center, src.center) <= r + kTolerance) {
                    rep.warnings.push_back({rule::kIgniteBurntPoint, "source " + std::to_string(s) + " at " +
                                                                         to_string(src.center) +
                                                                         " is already burning at step " +
                                                                         std::to_string(src.ignition_step)});
                    break;
                }
            }
        }
    }

    bool steps_ok = std::none_of(rep.violations.begin(), rep.violations.end(),
                                 [](const Violation& v) { return v.rule == std::string(rule::kStepRange); });
    for (std::size_t i = 0; i < inst.size(); ++i)
        if (!steps_ok || !is_burned(inst.points[i], sched))
            rep.unburned.push_back(i);

    rep.valid = rep.unburned.empty() && rep.violations.empty();
    return rep;
}

/// Best-effort repair of ignite-burnt-point warnings: drops flagged sources
/// whose removal leaves every instance point burned. Coverage never shrinks.
inline BurnSchedule prune_burnt_ignitions(const Instance& inst, BurnSchedule sched)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < sched.sources.size(); ++s) {
            const BurnSource& src = sched.sources[s];
            bool burnt = std::any_of(sched.sources.begin(), sched.sources.end(), [&](const BurnSource& o) {
                return o.ignition_step < src.ignition_step &&
                       distance(o.center, src.center) <=
                           o.rate * static_cast<double>(src.ignition_step - o.ignition_step) + kTolerance;
            });
            if (!burnt)
                continue;
            BurnSchedule trial = sched;
            trial.sources.erase(trial.sources.begin() + static_cast<std::ptrdiff_t>(s));
            bool covered = std::all_of(inst.points.begin(), inst.points.end(),
                                       [&](const Point& p) { return is_burned(p, trial); });
            if (covered) {
                sched = std::move(trial);
                changed = true;
                break;
            }
        }
    }
    return sched;
}

/// Sources sorted by (step, center) so equal schedules compare equal.
inline BurnSchedule canonical(BurnSchedule sched)
{
    std::stable_sort(sched.sources.begin(), sched.sources.end(), [](const BurnSource& a, const BurnSource& b) {
        if (a.ignition_step != b.ignition_step)
            return a.ignition_step < b.ignition_step;
        return lex_less(a.center, b.center);
    });
    return sched;
}

} // namespace geoburn

#endif // GEOBURN_CORE_HPP
