#ifndef GEOBURN_COVER_HPP
#define GEOBURN_COVER_HPP

/// \file
/// \brief Covering machinery: discretized disk cover, disk-graph domination,
/// the fixed 5-disk and 13-zone covering templates, and greedy maximum
/// coverage under group budgets.

#include "geoburn/core.hpp"

#include <boost/dynamic_bitset.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

namespace geoburn {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// A set-cover instance over elements 0..universe-1.
struct SetSystem
{
    std::size_t universe = 0;
    std::vector<Bitset> sets;
};

// ---------------------------------------------------------------------------
// Candidate centers
// ---------------------------------------------------------------------------

/// Center of the circle through a, b, c; nullopt for (near-)collinear triples.
inline std::optional<Point> circumcenter(const Point& a, const Point& b, const Point& c)
{
    const double bx = b.x - a.x, by = b.y - a.y;
    const double cx = c.x - a.x, cy = c.y - a.y;
    const double d = 2.0 * (bx * cy - by * cx);
    const double scale = std::max({bx * bx + by * by, cx * cx + cy * cy, 1.0});
    if (std::abs(d) < 1e-12 * scale)
        return std::nullopt;
    const double b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
    return Point{a.x + (cy * b2 - by * c2) / d, a.y + (bx * c2 - cx * b2) / d};
}

namespace detail {

/// Sorts lexicographically and merges points closer than tol.
inline std::vector<Point> unique_points(std::vector<Point> pts, double tol = kTolerance)
{
    std::sort(pts.begin(), pts.end(), lex_less);
    std::vector<Point> out;
    for (const Point& p : pts) {
        bool dup = false;
        for (auto it = out.rbegin(); it != out.rend() && p.x - it->x <= tol; ++it)
            if (same_point(p, *it, tol)) {
                dup = true;
                break;
            }
        if (!dup)
            out.push_back(p);
    }
    return out;
}

} // namespace detail

/// The input points, all pair midpoints and all circumcenters of
/// non-collinear triples, deduplicated and in lexicographic order.
///
/// Any disk of radius r covering Q is dominated by the radius-r disk centered
/// at the minimum enclosing circle of Q, which is one of these centers.
inline std::vector<Point> candidate_centers(const std::vector<Point>& points)
{
    const std::size_t n = points.size();
    std::vector<Point> out(points);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            out.push_back(0.5 * (points[i] + points[j]));
            for (std::size_t k = j + 1; k < n; ++k)
                if (auto c = circumcenter(points[i], points[j], points[k]))
                    out.push_back(*c);
        }
    return detail::unique_points(std::move(out));
}

// ---------------------------------------------------------------------------
// Generic set cover: greedy start plus bounded swap local search
// ---------------------------------------------------------------------------

/// Greedy maximum marginal coverage, ties to the lowest set index.
/// Throws Error naming the first element no set covers.
inline std::vector<std::size_t> greedy_set_cover(const SetSystem& sys)
{
    Bitset all(sys.universe);
    for (const Bitset& s : sys.sets)
        all |= s;
    if (all.count() != sys.universe) {
        all.flip();
        throw Error("element " + std::to_string(all.find_first()) + " is not covered by any candidate");
    }
    Bitset uncovered(sys.universe);
    uncovered.set();
    std::vector<std::size_t> chosen;
    while (uncovered.any()) {
        std::size_t best = 0, best_gain = 0;
        for (std::size_t i = 0; i < sys.sets.size(); ++i) {
            std::size_t gain = (sys.sets[i] & uncovered).count();
            if (gain > best_gain) {
                best_gain = gain;
                best = i;
            }
        }
        chosen.push_back(best);
        uncovered -= sys.sets[best];
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

/// Repeatedly replaces `swap` chosen sets by `swap - 1` others (or fewer)
/// while the result stays a cover; first improvement in index order wins.
/// swap is clamped to 1..3.
inline std::vector<std::size_t> local_search_set_cover(const SetSystem& sys, std::vector<std::size_t> chosen,
                                                       int swap)
{
    swap = std::clamp(swap, 1, 3);
    const std::size_t n = sys.universe;
    std::vector<std::vector<std::size_t>> covering(n);
    for (std::size_t s = 0; s < sys.sets.size(); ++s)
        for (std::size_t e = sys.sets[s].find_first(); e != Bitset::npos; e = sys.sets[s].find_next(e))
            covering[e].push_back(s);

    auto counts = [&](const std::vector<std::size_t>& sol) {
        std::vector<int> cnt(n, 0);
        for (std::size_t s : sol)
            for (std::size_t e = sys.sets[s].find_first(); e != Bitset::npos; e = sys.sets[s].find_next(e))
                ++cnt[e];
        return cnt;
    };
    // Elements left uncovered when the listed chosen sets are dropped.
    auto orphaned = [&](const std::vector<int>& cnt, std::initializer_list<std::size_t> drop) {
        Bitset u(n);
        for (std::size_t e = 0; e < n; ++e) {
            int c = cnt[e];
            for (std::size_t s : drop)
                c -= sys.sets[s].test(e) ? 1 : 0;
            if (c == 0)
                u.set(e);
        }
        return u;
    };
    // Fewest sets (at most `budget`) covering u, or nullopt.
    auto patch = [&](const Bitset& u, int budget) -> std::optional<std::vector<std::size_t>> {
        if (u.none())
            return std::vector<std::size_t>{};
        if (budget < 1)
            return std::nullopt;
        const std::size_t e0 = u.find_first();
        for (std::size_t c1 : covering[e0])
            if (u.is_subset_of(sys.sets[c1]))
                return std::vector<std::size_t>{c1};
        if (budget < 2)
            return std::nullopt;
        for (std::size_t c1 : covering[e0]) {
            Bitset rest = u - sys.sets[c1];
            for (std::size_t c2 : covering[rest.find_first()])
                if (rest.is_subset_of(sys.sets[c2]))
                    return std::vector<std::size_t>{c1, c2};
        }
        return std::nullopt;
    };

    bool improved = true;
    while (improved) {
        improved = false;
        std::vector<int> cnt = counts(chosen);
        const std::size_t m = chosen.size();
        std::vector<std::size_t> next;
        auto rebuild = [&](std::initializer_list<std::size_t> drop, const std::vector<std::size_t>& add) {
            for (std::size_t i = 0; i < m; ++i)
                if (std::find(drop.begin(), drop.end(), i) == drop.end())
                    next.push_back(chosen[i]);
            next.insert(next.end(), add.begin(), add.end());
        };
        for (std::size_t a = 0; a < m && !improved; ++a) {
            if (auto p = patch(orphaned(cnt, {chosen[a]}), 0)) {
                rebuild({a}, *p);
                improved = true;
            }
        }
        for (std::size_t a = 0; a < m && !improved && swap >= 2; ++a)
            for (std::size_t b = a + 1; b < m && !improved; ++b)
                if (auto p = patch(orphaned(cnt, {chosen[a], chosen[b]}), 1)) {
                    rebuild({a, b}, *p);
                    improved = true;
                }
        for (std::size_t a = 0; a < m && !improved && swap >= 3; ++a)
            for (std::size_t b = a + 1; b < m && !improved; ++b)
                for (std::size_t c = b + 1; c < m && !improved; ++c)
                    if (auto p = patch(orphaned(cnt, {chosen[a], chosen[b], chosen[c]}), 2)) {
                        rebuild({a, b, c}, *p);
                        improved = true;
                    }
        if (improved) {
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            chosen = std::move(next);
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

/// Swap size for a target ratio epsilon: ceil(1/eps^2), capped at 3.
inline int swap_size_for(double epsilon)
{
    if (!(epsilon > 0.0))
        throw PreconditionError("epsilon must be positive");
    double b = std::ceil(1.0 / (epsilon * epsilon) - 1e-12);
    return static_cast<int>(std::clamp(b, 1.0, 3.0));
}

inline bool is_cover(const SetSystem& sys, const std::vector<std::size_t>& chosen)
{
    Bitset u(sys.universe);
    for (std::size_t s : chosen)
        u |= sys.sets.at(s);
    return u.count() == sys.universe;
}

// ---------------------------------------------------------------------------
// Discrete disk cover
// ---------------------------------------------------------------------------

struct CoverInstance
{
    std::vector<Point> targets;
    std::vector<Point> candidate_centers;
    double radius = 1.0;
};

struct CoverSolution
{
    /// Indices into candidate_centers, ascending.
    std::vector<std::size_t> chosen;
};

/// One set per candidate center: the targets within radius (closed disks).
inline SetSystem disk_cover_sets(const CoverInstance& ci)
{
    if (!(ci.radius >= 0.0))
        throw PreconditionError("cover radius must be non-negative");
    SetSystem sys;
    sys.universe = ci.targets.size();
    sys.sets.reserve(ci.candidate_centers.size());
    for (const Point& c : ci.candidate_centers) {
        Bitset b(sys.universe);
        for (std::size_t t = 0; t < ci.targets.size(); ++t)
            if (distance(c, ci.targets[t]) <= ci.radius + kTolerance)
                b.set(t);
        sys.sets.push_back(std::move(b));
    }
    return sys;
}

namespace detail {

inline void require_coverable(const CoverInstance& ci, const SetSystem& sys)
{
    Bitset all(sys.universe);
    for (const Bitset& s : sys.sets)
        all |= s;
    if (all.count() != sys.universe) {
        all.flip();
        std::size_t t = all.find_first();
        throw Error("target " + std::to_string(t) + " at " + to_string(ci.targets[t]) +
                    " is not within radius of any candidate center");
    }
}

} // namespace detail

/// Greedy cover refined by swap local search. Quality is verified against the
/// exact solver in the tests rather than guaranteed analytically.
inline CoverSolution disk_cover_approx(const CoverInstance& ci, double epsilon)
{
    const int swap = swap_size_for(epsilon);
    SetSystem sys = disk_cover_sets(ci);
    detail::require_coverable(ci, sys);
    return {local_search_set_cover(sys, greedy_set_cover(sys), swap)};
}

// ---------------------------------------------------------------------------
// Disk graphs
// ---------------------------------------------------------------------------

/// Closed neighbourhoods of the disk intersection graph (closed disks).
inline SetSystem disk_graph_neighbourhoods(const std::vector<Point>& centers, const std::vector<double>& radii)
{
    if (centers.size() != radii.size())
        throw PreconditionError("disk centers and radii differ in length");
    const std::size_t n = centers.size();
    SetSystem sys;
    sys.universe = n;
    sys.sets.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
        sys.sets[i].set(i);
        for (std::size_t j = i + 1; j < n; ++j)
            if (distance(centers[i], centers[j]) <= radii[i] + radii[j] + kTolerance) {
                sys.sets[i].set(j);
                sys.sets[j].set(i);
            }
    }
    return sys;
}

inline bool is_dominating(const std::vector<Point>& centers, const std::vector<double>& radii,
                          const std::vector<std::size_t>& chosen)
{
    return is_cover(disk_graph_neighbourhoods(centers, radii), chosen);
}

/// Dominating set of the disk graph by the same greedy + local search scheme
/// as disk_cover_approx.
inline std::vector<std::size_t> dominating_set_approx(const std::vector<Point>& centers,
                                                      const std::vector<double>& radii, double epsilon)
{
    const int swap = swap_size_for(epsilon);
    SetSystem sys = disk_graph_neighbourhoods(centers, radii);
    if (sys.universe == 0)
        return {};
    return local_search_set_cover(sys, greedy_set_cover(sys), swap);
}

// ---------------------------------------------------------------------------
// Five-disk covering of the unit disk
// ---------------------------------------------------------------------------

/// Radius of the five equal disks covering a unit disk.
inline constexpr double kFiveDiskRadius = 0.6094;

struct FiveDiskTemplate
{
    std::array<Point, 5> centers;
    double radius = kFiveDiskRadius;

    /// Centers mapped onto a disk of the given center and radius.
    std::array<Point, 5> placed(const Point& at, double scale) const
    {
        std::array<Point, 5> out;
        for (std::size_t i = 0; i < 5; ++i)
            out[i] = at + scale * centers[i];
        return out;
    }
};

struct TemplateCertificate
{
    bool covered = false;
    /// Largest distance from a sample point to its nearest center.
    double worst_sample = 0.0;
    /// Smallest certified slack over the leaf cells of the rigorous check.
    double min_cell_slack = 0.0;
    std::size_t cells = 0;
    std::size_t refined = 0;
};

namespace detail {

inline double nearest_center(const Point& p, const std::vector<Point>& centers)
{
    double best = std::numeric_limits<double>::infinity();
    for (const Point& c : centers)
        best = std::min(best, distance(p, c));
    return best;
}

/// Certifies that the part of the square [x0,x0+h]x[y0,y0+h] inside the unit
/// disk is covered. A cell passes when the nearest-center distance at its
/// midpoint plus its half diagonal fits in radius; otherwise it is split.
inline bool certify_cell(double x0, double y0, double h, int depth, const std::vector<Point>& centers,
                         double radius, TemplateCertificate& cert)
{
    const double nx = std::clamp(0.0, x0, x0 + h), ny = std::clamp(0.0, y0, y0 + h);
    if (nx * nx + ny * ny > 1.0)
        return true; // cell misses the unit disk
    ++cert.cells;
    const Point mid{x0 + 0.5 * h, y0 + 0.5 * h};
    const double bound = nearest_center(mid, centers) + h * std::numbers::sqrt2 * 0.5;
    if (bound <= radius) {
        cert.min_cell_slack = std::min(cert.min_cell_slack, radius - bound);
        return true;
    }
    if (depth == 0)
        return false;
    ++cert.refined;
    const double g = 0.5 * h;
    return certify_cell(x0, y0, g, depth - 1, centers, radius, cert) &&
           certify_cell(x0 + g, y0, g, depth - 1, centers, radius, cert) &&
           certify_cell(x0, y0 + g, g, depth - 1, centers, radius, cert) &&
           certify_cell(x0 + g, y0 + g, g, depth - 1, centers, radius, cert);
}

} // namespace detail

/// Checks that disks of the given radius around `centers` cover the closed
/// unit disk: a polar sample grid at spacing `resolution` (boundary included),
/// then a rigorous cell check starting from squares of side `resolution`,
/// refined adaptively up to 12 halvings.
inline TemplateCertificate certify_template(const std::vector<Point>& centers, double radius, double resolution)
{
    if (!(resolution > 0.0))
        throw PreconditionError("resolution must be positive");
    TemplateCertificate cert;
    cert.min_cell_slack = std::numeric_limits<double>::infinity();
    if (centers.empty())
        return cert;

    const auto rings = static_cast<std::size_t>(std::ceil(1.0 / resolution));
    for (std::size_t i = 0; i <= rings; ++i) {
        const double rho = std::min(1.0, static_cast<double>(i) * resolution);
        const auto spokes = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(2 * std::numbers::pi * rho / resolution)));
        for (std::size_t j = 0; j < spokes; ++j) {
            const double th = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(spokes);
            cert.worst_sample =
                std::max(cert.worst_sample, detail::nearest_center({rho * std::cos(th), rho * std::sin(th)}, centers));
        }
    }
    if (cert.worst_sample > radius + 1e-12)
        return cert;

    const auto cells = static_cast<long>(std::ceil(2.0 / resolution));
    for (long i = 0; i < cells; ++i)
        for (long j = 0; j < cells; ++j)
            if (!detail::certify_cell(-1.0 + static_cast<double>(i) * resolution,
                                      -1.0 + static_cast<double>(j) * resolution, resolution, 12, centers, radius,
                                      cert))
                return cert;
    cert.covered = true;
    return cert;
}

inline bool verify_template(const std::vector<Point>& centers, double radius, double resolution)
{
    return certify_template(centers, radius, resolution).covered;
}

/// Five centers in the unit-disk frame whose radius-0.6094 disks cover the
/// closed unit disk. Found offline by minimising the exact covering radius
/// (about 0.6093829). Certified by certify_template in the test suite.
inline FiveDiskTemplate five_disk_template()
{
    return FiveDiskTemplate{{{
                                {-0.07354170033189257, 0.628141392307494},
                                {-0.38425881908932102, -0.69287020778535124},
                                {-0.6183211378843545, 0.13307597857799044},
                                {0.72639115754303851, 0.31652737719177548},
                                {0.3905876624533236, -0.42975464996688939},
                            }},
                            kFiveDiskRadius};
}

// ---------------------------------------------------------------------------
// Thirteen-zone annulus
// ---------------------------------------------------------------------------

inline constexpr double kAnnulusInner = 26.0 / 27.0;
inline constexpr int kZoneCount = 13;
/// Any disk of this radius centered inside a zone covers the zone.
inline constexpr double kZoneCoverRadius = 13.0 / 27.0;

/// The annulus between radii 26/27 and 1, cut into 13 sectors by the rays to
/// the corners of the inscribed regular 13-gon (corner k at angle 2*pi*k/13).
struct AnnulusZones
{
    double inner_ratio = kAnnulusInner;
    int zone_count = kZoneCount;

    /// Boundary ray angle of zone k (zone k spans [angle(k), angle(k+1))).
    static double boundary_angle(int k) { return 2.0 * std::numbers::pi * k / kZoneCount; }

    /// Zone index of a point of the closed annulus, in the annulus frame.
    int zone_of(const Point& q) const
    {
        const double r = std::hypot(q.x, q.y);
        if (r < inner_ratio - kTolerance || r > 1.0 + kTolerance)
            throw PreconditionError("point " + to_string(q) + " is outside the annulus");
        double th = std::atan2(q.y, q.x);
        if (th < 0)
            th += 2 * std::numbers::pi;
        int k = static_cast<int>(std::floor(zone_count * th / (2 * std::numbers::pi)));
        return std::clamp(k, 0, zone_count - 1);
    }

    /// Inner-left, inner-right, outer-left, outer-right corners of zone k.
    std::array<Point, 4> corners(int k) const
    {
        const double a = boundary_angle(k), b = boundary_angle(k + 1);
        return {{{inner_ratio * std::cos(a), inner_ratio * std::sin(a)},
                 {inner_ratio * std::cos(b), inner_ratio * std::sin(b)},
                 {std::cos(a), std::sin(a)},
                 {std::cos(b), std::sin(b)}}};
    }

    /// Largest pairwise distance of the zone's four corners.
    double zone_diameter(int k) const
    {
        auto c = corners(k);
        double d = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                d = std::max(d, distance(c[i], c[j]));
        return d;
    }
};

inline AnnulusZones annulus_zones()
{
    return {};
}

// ---------------------------------------------------------------------------
// Maximum coverage with group budgets
// ---------------------------------------------------------------------------

struct GroupSelection
{
    /// Chosen set index per group; nullopt when the group is left unused.
    std::vector<std::optional<std::size_t>> choice;
    /// Size of the union of the chosen sets.
    std::size_t covered = 0;
};

/// Greedy for max coverage with one set per group: repeatedly take the
/// (unused group, set) pair of largest marginal gain, ties to the lowest group
/// then set index. Groups whose best gain is zero stay unused.
inline GroupSelection max_coverage_group_budget(const std::vector<std::vector<std::vector<std::size_t>>>& groups)
{
    std::size_t universe = 0;
    for (const auto& g : groups)
        for (const auto& s : g)
            for (std::size_t e : s)
                universe = std::max(universe, e + 1);

    std::vector<std::vector<Bitset>> bits(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g)
        for (const auto& s : groups[g]) {
            Bitset b(universe);
            for (std::size_t e : s)
                b.set(e);
            bits[g].push_back(std::move(b));
        }

    GroupSelection sel;
    sel.choice.assign(groups.size(), std::nullopt);
    Bitset covered(universe);
    for (std::size_t round = 0; round < groups.size(); ++round) {
        std::size_t best_gain = 0, best_g = 0, best_s = 0;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            if (sel.choice[g])
                continue;
            for (std::size_t s = 0; s < bits[g].size(); ++s) {
                std::size_t gain = (bits[g][s] - covered).count();
                if (gain > best_gain) {
                    best_gain = gain;
                    best_g = g;
                    best_s = s;
                }
            }
        }
        if (best_gain == 0)
            break;
        sel.choice[best_g] = best_s;
        covered |= bits[best_g][best_s];
    }
    sel.covered = covered.count();
    return sel;
}

} // namespace geoburn

#endif // GEOBURN_COVER_HPP
