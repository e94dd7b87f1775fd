#ifndef GEOBURN_ORACLE_HPP
#define GEOBURN_ORACLE_HPP

/// \file
/// \brief Exact exponential-time solvers for small instances.
///
/// These are the reference answers the approximation algorithms are measured
/// against. Nothing here is meant to scale.

#include "geoburn/core.hpp"
#include "geoburn/cover.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_set>
#include <vector>

namespace geoburn {

struct OracleOptions
{
    /// Search nodes allowed before CapacityError is thrown.
    std::size_t node_budget = 200'000'000;
};

struct OracleResult
{
    int burning_number = 0;
    BurnSchedule schedule;
    std::size_t explored = 0;
};

namespace detail {

struct PairHash
{
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const noexcept
    {
        return std::hash<std::uint64_t>{}(p.first * 0x9E3779B97F4A7C15ull ^ p.second);
    }
};

struct DiskOption
{
    std::uint64_t mask = 0;
    Point center;
    double rate = 1.0;
};

/// Drops options whose mask is contained in an earlier-kept one. Among equal
/// masks the first in input order survives.
inline std::vector<DiskOption> maximal_options(std::vector<DiskOption> opts)
{
    std::stable_sort(opts.begin(), opts.end(), [](const DiskOption& a, const DiskOption& b) {
        return std::popcount(a.mask) > std::popcount(b.mask);
    });
    std::vector<DiskOption> kept;
    for (const DiskOption& o : opts) {
        if (o.mask == 0)
            continue;
        bool dominated = std::any_of(kept.begin(), kept.end(),
                                     [&](const DiskOption& k) { return (o.mask & ~k.mask) == 0; });
        if (!dominated)
            kept.push_back(o);
    }
    return kept;
}

/// Can every point be covered using at most k disks per step, a disk ignited
/// at step s having radius rate*(T - s)?
class BurnSearch
{
public:
    BurnSearch(std::size_t n, int T, int k, std::vector<std::vector<DiskOption>> per_step, std::size_t budget)
        : n_(n), T_(T), k_(k), steps_(std::move(per_step)), budget_(budget), used_(static_cast<std::size_t>(T), 0)
    {
        containing_.assign(n_, std::vector<std::vector<std::uint32_t>>(static_cast<std::size_t>(T_)));
        max_pop_.assign(static_cast<std::size_t>(T_), 0);
        for (std::size_t s = 0; s < steps_.size(); ++s)
            for (std::uint32_t o = 0; o < steps_[s].size(); ++o) {
                max_pop_[s] = std::max(max_pop_[s], std::popcount(steps_[s][o].mask));
                for (std::size_t p = 0; p < n_; ++p)
                    if (steps_[s][o].mask >> p & 1u)
                        containing_[p][s].push_back(o);
            }
        bits_per_step_ = std::bit_width(static_cast<unsigned>(k_));
        memo_enabled_ = static_cast<std::size_t>(T_) * static_cast<std::size_t>(bits_per_step_) <= 64;
    }

    bool solve()
    {
        const std::uint64_t all = n_ == 64 ? ~0ull : ((1ull << n_) - 1);
        return dfs(all);
    }

    /// (step, option) pairs of the last successful solve.
    const std::vector<std::pair<int, DiskOption>>& picks() const { return picks_; }
    std::size_t explored() const { return nodes_; }

private:
    std::uint64_t usage_key() const
    {
        std::uint64_t key = 0;
        for (std::size_t s = 0; s < used_.size(); ++s)
            key |= static_cast<std::uint64_t>(used_[s]) << (s * static_cast<std::size_t>(bits_per_step_));
        return key;
    }

    bool dfs(std::uint64_t uncovered)
    {
        if (uncovered == 0)
            return true;
        if (++nodes_ > budget_)
            throw CapacityError("exact search exceeded its node budget of " + std::to_string(budget_));

        long capacity = 0;
        for (std::size_t s = 0; s < used_.size(); ++s)
            capacity += static_cast<long>(k_ - used_[s]) * max_pop_[s];
        if (capacity < std::popcount(uncovered))
            return false;

        std::pair<std::uint64_t, std::uint64_t> key{uncovered, memo_enabled_ ? usage_key() : 0};
        if (memo_enabled_ && failed_.count(key))
            return false;

        // Branch on the uncovered point with the fewest ways to be covered.
        std::size_t pick = n_;
        std::size_t fewest = SIZE_MAX;
        for (std::size_t p = 0; p < n_; ++p) {
            if (!(uncovered >> p & 1u))
                continue;
            std::size_t ways = 0;
            for (std::size_t s = 0; s < used_.size(); ++s)
                if (used_[s] < k_)
                    ways += containing_[p][s].size();
            if (ways < fewest) {
                fewest = ways;
                pick = p;
            }
        }
        if (fewest > 0) {
            for (std::size_t s = 0; s < used_.size(); ++s) {
                if (used_[s] >= k_)
                    continue;
                ++used_[s];
                for (std::uint32_t o : containing_[pick][s]) {
                    picks_.emplace_back(static_cast<int>(s) + 1, steps_[s][o]);
                    if (dfs(uncovered & ~steps_[s][o].mask))
                        return true;
                    picks_.pop_back();
                }
                --used_[s];
            }
        }
        if (memo_enabled_)
            failed_.insert(key);
        return false;
    }

    std::size_t n_;
    int T_;
    int k_;
    std::vector<std::vector<DiskOption>> steps_;
    std::size_t budget_;
    std::vector<int> used_;
    std::vector<std::vector<std::vector<std::uint32_t>>> containing_;
    std::vector<int> max_pop_;
    int bits_per_step_ = 1;
    bool memo_enabled_ = true;
    std::size_t nodes_ = 0;
    std::vector<std::pair<int, DiskOption>> picks_;
    std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, PairHash> failed_;
};

inline std::uint64_t cover_mask(const std::vector<Point>& pts, const Point& c, double radius)
{
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (distance(pts[i], c) <= radius + kTolerance)
            m |= 1ull << i;
    return m;
}

} // namespace detail

/// Smallest T such that disks of radii rate*(T-1), ..., 0 (k of each) at
/// admissible centers cover the instance, with a witnessing schedule.
/// Returns nullopt when no T <= max_steps works.
///
/// Point model: centers are the instance points, each spreading at its own
/// rate. Anywhere model: uniform rates; 2D centers are candidate_centers(),
/// 1D centers put each interval's right end on an input point.
inline std::optional<OracleResult> exact_burning_number(const Instance& inst, const Model& model, int max_steps,
                                                        const OracleOptions& opts = {})
{
    check_instance(inst);
    if (model.k < 1)
        throw PreconditionError("k must be at least 1");
    const std::size_t n = inst.size();
    if (n == 0)
        return OracleResult{0, BurnSchedule{model, 0, {}}, 0};
    if (n > 64)
        throw CapacityError("exact oracle supports at most 64 points");
    if (model.tag == BurnModel::Anywhere && !inst.uniform_rates())
        throw PreconditionError("anywhere burning requires uniform rates");

    const double unit = inst.rate(0);
    std::vector<Point> anywhere_centers;
    if (model.tag == BurnModel::Anywhere && inst.dimension == 2)
        anywhere_centers = candidate_centers(inst.points);

    std::size_t explored = 0;
    for (int T = 1; T <= max_steps; ++T) {
        std::vector<std::vector<detail::DiskOption>> per_step(static_cast<std::size_t>(T));
        for (int step = 1; step <= T; ++step) {
            std::vector<detail::DiskOption> cands;
            const double steps_left = static_cast<double>(T - step);
            if (model.tag == BurnModel::Point) {
                for (std::size_t i = 0; i < n; ++i) {
                    const double r = inst.rate(i) * steps_left;
                    cands.push_back({detail::cover_mask(inst.points, inst.points[i], r), inst.points[i], inst.rate(i)});
                }
            } else if (inst.dimension == 1) {
                const double r = unit * steps_left;
                for (const Point& p : inst.points) {
                    const Point c{p.x - r, 0.0};
                    cands.push_back({detail::cover_mask(inst.points, c, r), c, unit});
                }
            } else {
                const double r = unit * steps_left;
                for (const Point& c : anywhere_centers)
                    cands.push_back({detail::cover_mask(inst.points, c, r), c, unit});
            }
            per_step[static_cast<std::size_t>(step - 1)] = detail::maximal_options(std::move(cands));
        }

        const std::size_t left = opts.node_budget > explored ? opts.node_budget - explored : 0;
        detail::BurnSearch search(n, T, model.k, std::move(per_step), left);
        const bool ok = search.solve();
        explored += search.explored();
        if (!ok)
            continue;

        BurnSchedule sched{model, T, {}};
        auto picks = search.picks();
        std::sort(picks.begin(), picks.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [step, opt] : picks) {
            // A point-model center picked twice: the earlier disk contains the later one.
            if (model.tag == BurnModel::Point &&
                std::any_of(sched.sources.begin(), sched.sources.end(),
                            [&](const BurnSource& s) { return same_point(s.center, opt.center); }))
                continue;
            sched.sources.push_back({opt.center, step, opt.rate});
        }
        return OracleResult{T, canonical(std::move(sched)), explored};
    }
    return std::nullopt;
}

namespace detail {

class SetCoverSearch
{
public:
    SetCoverSearch(const SetSystem& sys, std::size_t budget) : sys_(sys), budget_(budget)
    {
        // Keep only inclusion-maximal sets; the first of equal sets survives.
        for (std::size_t i = 0; i < sys.sets.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < sys.sets.size() && !dominated; ++j) {
                if (i == j || !sys.sets[i].is_subset_of(sys.sets[j]))
                    continue;
                dominated = sys.sets[i] != sys.sets[j] || j < i;
            }
            if (!dominated && sys.sets[i].any())
                live_.push_back(i);
        }
        covering_.assign(sys.universe, {});
        for (std::size_t i : live_)
            for (std::size_t e = sys.sets[i].find_first(); e != Bitset::npos; e = sys.sets[i].find_next(e))
                covering_[e].push_back(i);
        for (std::size_t i : live_)
            max_size_ = std::max(max_size_, sys.sets[i].count());
    }

    std::optional<std::vector<std::size_t>> solve()
    {
        Bitset uncovered(sys_.universe);
        uncovered.set();
        for (std::size_t e = 0; e < sys_.universe; ++e)
            if (covering_[e].empty())
                return std::nullopt;
        for (std::size_t limit = 0; limit <= sys_.universe; ++limit) {
            chosen_.clear();
            if (dfs(uncovered, limit)) {
                std::sort(chosen_.begin(), chosen_.end());
                return chosen_;
            }
        }
        return std::nullopt;
    }

    std::size_t explored() const { return nodes_; }

private:
    bool dfs(const Bitset& uncovered, std::size_t limit)
    {
        if (uncovered.none())
            return true;
        if (++nodes_ > budget_)
            throw CapacityError("exact set cover exceeded its node budget of " + std::to_string(budget_));
        if (chosen_.size() >= limit || (limit - chosen_.size()) * max_size_ < uncovered.count())
            return false;
        std::size_t pick = uncovered.find_first();
        for (std::size_t e = pick; e != Bitset::npos; e = uncovered.find_next(e))
            if (covering_[e].size() < covering_[pick].size())
                pick = e;
        for (std::size_t s : covering_[pick]) {
            chosen_.push_back(s);
            if (dfs(uncovered - sys_.sets[s], limit))
                return true;
            chosen_.pop_back();
        }
        return false;
    }

    const SetSystem& sys_;
    std::size_t budget_;
    std::vector<std::size_t> live_;
    std::vector<std::vector<std::size_t>> covering_;
    std::size_t max_size_ = 0;
    std::vector<std::size_t> chosen_;
    std::size_t nodes_ = 0;
};

} // namespace detail

/// Minimum-cardinality cover by iterative deepening; among optimal covers the
/// first found when branching in set-index order is returned. Throws Error when
/// some element is uncoverable.
inline std::vector<std::size_t> exact_set_cover(const SetSystem& sys, const OracleOptions& opts = {})
{
    detail::SetCoverSearch search(sys, opts.node_budget);
    auto res = search.solve();
    if (!res) {
        Bitset all(sys.universe);
        for (const Bitset& s : sys.sets)
            all |= s;
        all.flip();
        throw Error("element " + std::to_string(all.find_first()) + " is not covered by any set");
    }
    return *res;
}

/// Exact minimum discrete disk cover. Candidates are branched on in
/// lexicographic center order; returned indices refer to the input order.
inline std::vector<std::size_t> exact_disk_cover(const std::vector<Point>& points,
                                                 const std::vector<Point>& candidate_centers, double radius,
                                                 const OracleOptions& opts = {})
{
    std::vector<std::size_t> order(candidate_centers.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lex_less(candidate_centers[a], candidate_centers[b]);
    });
    CoverInstance ci{points, {}, radius};
    for (std::size_t i : order)
        ci.candidate_centers.push_back(candidate_centers[i]);
    SetSystem sys = disk_cover_sets(ci);
    detail::require_coverable(ci, sys);
    std::vector<std::size_t> out;
    for (std::size_t i : exact_set_cover(sys, opts))
        out.push_back(order[i]);
    std::sort(out.begin(), out.end());
    return out;
}

/// Minimum dominating set of the closed-disk intersection graph.
inline std::vector<std::size_t> exact_dominating_set(const std::vector<Point>& centers,
                                                     const std::vector<double>& radii,
                                                     const OracleOptions& opts = {})
{
    SetSystem sys = disk_graph_neighbourhoods(centers, radii);
    if (sys.universe == 0)
        return {};
    return exact_set_cover(sys, opts);
}

struct MaxBurnResult
{
    std::size_t burned = 0;
    /// source_for_radius[r] = instance index of the source given radius r.
    std::vector<std::optional<std::size_t>> source_for_radius;
};

/// Largest number of points burnable in q steps igniting only points of S:
/// every injective assignment of radii 0..q-1 (scaled by the source's rate)
/// to sources is tried.
inline MaxBurnResult exact_max_burn(const Instance& inst, const std::vector<std::size_t>& sources, int q)
{
    check_instance(inst);
    if (q < 1)
        throw PreconditionError("q must be at least 1");
    if (sources.size() > 12 || q > 12)
        throw CapacityError("exact_max_burn supports at most 12 sources and 12 rounds");
    const std::size_t n = inst.size();
    const auto rounds = static_cast<std::size_t>(q);

    // disk[r][j]: points within r * rate of source j.
    std::vector<std::vector<Bitset>> disk(rounds, std::vector<Bitset>(sources.size(), Bitset(n)));
    for (std::size_t r = 0; r < rounds; ++r)
        for (std::size_t j = 0; j < sources.size(); ++j) {
            const Point& c = inst.points.at(sources[j]);
            for (std::size_t i = 0; i < n; ++i)
                if (distance(c, inst.points[i]) <= static_cast<double>(r) * inst.rate(sources[j]) + kTolerance)
                    disk[r][j].set(i);
        }

    MaxBurnResult best;
    best.source_for_radius.assign(rounds, std::nullopt);
    std::vector<std::optional<std::size_t>> pick(rounds);
    std::vector<bool> used(sources.size(), false);
    auto rec = [&](auto&& self, std::size_t r, const Bitset& acc) -> void {
        if (r == rounds) {
            if (acc.count() > best.burned) {
                best.burned = acc.count();
                for (std::size_t i = 0; i < rounds; ++i)
                    best.source_for_radius[i] = pick[i] ? std::optional(sources[*pick[i]]) : std::nullopt;
            }
            return;
        }
        pick[r] = std::nullopt;
        self(self, r + 1, acc);
        for (std::size_t j = 0; j < sources.size(); ++j) {
            if (used[j])
                continue;
            used[j] = true;
            pick[r] = j;
            self(self, r + 1, acc | disk[r][j]);
            used[j] = false;
        }
        pick[r] = std::nullopt;
    };
    rec(rec, 0, Bitset(n));
    return best;
}

} // namespace geoburn

#endif // GEOBURN_ORACLE_HPP
