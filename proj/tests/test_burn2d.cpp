#include "geoburn/burn2d.hpp"
#include "geoburn/oracle.hpp"

#include "brute.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace geoburn;

namespace {

Instance planar(std::initializer_list<Point> pts)
{
    Instance inst;
    inst.points = pts;
    return inst;
}

bool trace_mentions(const GuessTrace& tr, const std::string& needle)
{
    return std::any_of(tr.arithmetic.begin(), tr.arithmetic.end(),
                       [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

Burn2dOptions strict(double eps)
{
    Burn2dOptions o;
    o.epsilon = eps;
    o.strict_oracle = true;
    return o;
}

} // namespace

TEST(Anywhere2d, SinglePoint)
{
    const Instance inst = planar({{3, 4}});
    const auto r = anywhere_burning_2d(inst, {});
    EXPECT_EQ(r.delta, 1);
    EXPECT_LE(r.schedule.total_steps, 3);
    EXPECT_TRUE(validate_schedule(inst, r.schedule).valid);
    EXPECT_FALSE(r.trace.fallback);
}

TEST(Anywhere2d, ThreeCollinearPoints)
{
    const Instance inst = planar({{0, 0}, {1, 0}, {2, 0}});
    const auto r = anywhere_burning_2d(inst, strict(1.0));
    EXPECT_TRUE(validate_schedule(inst, r.schedule).valid);
    EXPECT_LE(r.schedule.total_steps, std::ceil(2 * 1.93 * 2) + 2);
}

TEST(Anywhere2d, TraceCarriesConstants)
{
    const Instance inst = planar({{0, 0}, {5, 0}, {0, 5}, {9, 9}});
    const auto r = anywhere_burning_2d(inst, {});
    for (const char* c : {"0.92188", "0.07812", "0.6094", "0.3906"})
        EXPECT_TRUE(trace_mentions(r.trace, c)) << c;
}

TEST(Anywhere2d, RejectsBadInput)
{
    Instance inst = planar({{0, 0}, {1, 1}});
    EXPECT_THROW(anywhere_burning_2d(inst, Burn2dOptions{0.0, false, {}}), PreconditionError);
    inst.rates = {1, 2};
    EXPECT_THROW(anywhere_burning_2d(inst, {}), PreconditionError);
    EXPECT_TRUE(anywhere_burning_2d(Instance{}, {}).schedule.sources.empty());
}

TEST(Anywhere2d, TemplatePhaseOnManyClusters)
{
    // Forty far-apart points make the cover large enough that the leftover
    // disks get template fires.
    Instance inst;
    for (int i = 0; i < 40; ++i)
        inst.points.push_back({100.0 * (i % 8), 100.0 * (i / 8)});
    const auto r = anywhere_burning_2d(inst, Burn2dOptions{0.01, false, {}});
    EXPECT_TRUE(validate_schedule(inst, r.schedule).valid);
    EXPECT_FALSE(r.trace.fallback);
    EXPECT_EQ(r.trace.phase1_steps, 37);
    EXPECT_EQ(r.trace.template_ignitions, 15);
}

TEST(Point2d, AllPointsClose)
{
    const Instance inst = planar({{0, 0}, {0.5, 0}, {0, 0.5}, {0.3, 0.3}});
    const auto r = point_burning_2d(inst, {});
    EXPECT_LE(r.delta, 2);
    EXPECT_TRUE(validate_schedule(inst, r.schedule).valid);
}

TEST(Point2d, TraceCarriesConstants)
{
    const Instance inst = planar({{0, 0}, {5, 0}, {0, 5}, {9, 9}});
    const auto r = point_burning_2d(inst, {});
    for (const char* c : {"26 * delta", "13 * delta", "26/27", "13/27"})
        EXPECT_TRUE(trace_mentions(r.trace, c)) << c;
}

TEST(Point2d, ZonePathIsExercised)
{
    // Clusters of two points at distance just below delta; with a tiny eps the
    // last cover fires stop short of radius delta.
    Instance inst;
    for (int i = 0; i < 30; ++i) {
        const Point c{1000.0 * i, 0};
        inst.points.push_back(c);
        inst.points.push_back(c + Point{0, 29.5});
    }
    const auto r = point_burning_2d(inst, Burn2dOptions{0.001, false, {}});
    EXPECT_TRUE(validate_schedule(inst, r.schedule).valid);
    EXPECT_FALSE(r.trace.fallback);
    EXPECT_GT(r.trace.late_disks, 0);
    EXPECT_GT(r.trace.zone_ignitions, 0);
    EXPECT_FALSE(trace_mentions(r.trace, "falls short"));
}

TEST(Burn2d, RatiosAgainstOracle)
{
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 40; ++trial) {
        Instance inst = brute::random_instance(rng, 1 + static_cast<std::size_t>(trial % 7), 8.0);
        const int any_opt = exact_burning_number(inst, {BurnModel::Anywhere, 1}, 10)->burning_number;
        const int pt_opt = exact_burning_number(inst, {BurnModel::Point, 1}, 10)->burning_number;
        const auto a = anywhere_burning_2d(inst, strict(0.5));
        const auto p = point_burning_2d(inst, strict(0.5));
        EXPECT_TRUE(validate_schedule(inst, a.schedule).valid);
        EXPECT_TRUE(validate_schedule(inst, p.schedule).valid);
        EXPECT_LE(a.delta, any_opt);
        EXPECT_LE(p.delta, pt_opt);
        EXPECT_LE(a.schedule.total_steps, std::ceil(1.92188 * 1.5 * any_opt - 1e-9) + 2);
        EXPECT_LE(p.schedule.total_steps, std::ceil(53.0 / 27.0 * 1.5 * pt_opt - 1e-9) + 2);
    }
}

TEST(Burn2d, RejectionCertificate)
{
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 30; ++trial) {
        Instance inst = brute::random_instance(rng, 3 + static_cast<std::size_t>(trial % 6), 10.0);
        const auto r = point_burning_2d(inst, strict(0.5));
        for (const GuessRecord& g : r.trace.guesses) {
            if (g.accepted)
                continue;
            const auto cover = exact_disk_cover(inst.points, inst.points, g.delta);
            EXPECT_GT(static_cast<double>(cover.size()), g.delta);
        }
        EXPECT_TRUE(r.trace.guesses.back().accepted);
    }
}

TEST(Burn2d, Deterministic)
{
    std::mt19937_64 rng(53);
    Instance inst = brute::random_instance(rng, 12, 10.0);
    const auto a = anywhere_burning_2d(inst, {});
    const auto b = anywhere_burning_2d(inst, {});
    EXPECT_EQ(a.schedule.sources, b.schedule.sources);
    EXPECT_EQ(a.trace.arithmetic, b.trace.arithmetic);
}

TEST(Nonuniform, RateRatio)
{
    Instance inst = planar({{0, 0}, {10, 0}});
    inst.rates = {1, 3};
    const auto r = point_burning_nonuniform(inst, {});
    EXPECT_DOUBLE_EQ(r.trace.h, 3.0);
    EXPECT_TRUE(validate_schedule(inst, r.schedule).valid);
}

TEST(Nonuniform, PathOfThree)
{
    const Instance inst = planar({{0, 0}, {2, 0}, {4, 0}});
    const auto r = point_burning_nonuniform(inst, strict(0.5));
    EXPECT_LE(static_cast<double>(r.cover.size()), 1.5 * r.delta + 1e-9);
    EXPECT_TRUE(validate_schedule(inst, r.schedule).valid);
}

TEST(Nonuniform, DeltaOneIgnitesEverything)
{
    const Instance inst = planar({{0, 0}, {1, 0}, {2, 0}});
    const auto r = k_burning_nonuniform(inst, 3, {});
    EXPECT_EQ(r.delta, 1);
    EXPECT_EQ(r.schedule.total_steps, 1);
    EXPECT_EQ(r.schedule.sources.size(), 3u);
    EXPECT_TRUE(validate_schedule(inst, r.schedule).valid);
}

TEST(Nonuniform, KOneMatchesPointPath)
{
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 20; ++trial) {
        Instance inst = brute::random_instance(rng, 8, 8.0, 3);
        const auto a = point_burning_nonuniform(inst, {});
        const auto b = k_burning_nonuniform(inst, 1, {});
        EXPECT_EQ(a.schedule.sources, b.schedule.sources);
        EXPECT_EQ(a.schedule.total_steps, b.schedule.total_steps);
        EXPECT_EQ(a.trace.arithmetic, b.trace.arithmetic);
    }
}

TEST(Nonuniform, KTwoHalvesIgnitionSteps)
{
    Instance inst;
    for (int i = 0; i < 7; ++i)
        inst.points.push_back({50.0 * i, 0});
    // A large eps makes both runs accept delta = 1.
    const auto one = k_burning_nonuniform(inst, 1, Burn2dOptions{6.0, false, {}});
    const auto two = k_burning_nonuniform(inst, 2, Burn2dOptions{6.0, false, {}});
    ASSERT_EQ(one.delta, 1);
    ASSERT_EQ(two.delta, 1);
    EXPECT_EQ(one.trace.phase1_steps, 7);
    EXPECT_EQ(two.trace.phase1_steps, 4);
    EXPECT_TRUE(validate_schedule(inst, two.schedule).valid);
}

TEST(Nonuniform, RatioAgainstOracle)
{
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        Instance inst = brute::random_instance(rng, 1 + static_cast<std::size_t>(trial % 7), 8.0, 3);
        const int opt = exact_burning_number(inst, {BurnModel::Point, 1}, 10)->burning_number;
        const auto r = point_burning_nonuniform(inst, strict(0.5));
        EXPECT_TRUE(validate_schedule(inst, r.schedule).valid);
        EXPECT_LE(r.schedule.total_steps, (1 + r.trace.h + 0.5) * opt + 2 + 1e-9) << "trial " << trial;
        EXPECT_FALSE(trace_mentions(r.trace, "not reached"));
    }
}

TEST(MaxBurn, OracleExample)
{
    Instance inst = planar({{0, 0}, {5, 0}, {1, 0}});
    const auto r = max_burn_schedule(inst, {0, 1}, 2);
    EXPECT_EQ(r.burned, 3u);
    EXPECT_TRUE(validate_schedule(inst, r.schedule).valid);
}

TEST(MaxBurn, EverythingWhenSourcesAreAllPoints)
{
    Instance inst = planar({{0, 0}, {1, 0}, {2, 0}, {3, 0}});
    const auto r = max_burn_schedule(inst, {0, 1, 2, 3}, 4);
    EXPECT_EQ(r.burned, 4u);
}

TEST(MaxBurn, EmptySources)
{
    Instance inst = planar({{0, 0}});
    const auto r = max_burn_schedule(inst, {}, 3);
    EXPECT_EQ(r.burned, 0u);
    EXPECT_TRUE(r.schedule.sources.empty());
    EXPECT_THROW(max_burn_schedule(inst, {4}, 1), PreconditionError);
    EXPECT_THROW(max_burn_schedule(inst, {0}, 0), PreconditionError);
}

TEST(MaxBurn, HalfOfOptimumAndConsistentCount)
{
    std::mt19937_64 rng(56);
    for (int trial = 0; trial < 80; ++trial) {
        Instance inst = brute::random_instance(rng, 3 + static_cast<std::size_t>(trial % 6), 4.0, 1 + trial % 2);
        const std::vector<std::size_t> S{0, 1, 2};
        for (int q = 1; q <= 3; ++q) {
            const auto r = max_burn_schedule(inst, S, q);
            const auto opt = brute::max_burn(inst, S, q);
            EXPECT_GE(2 * r.burned, opt);
            std::size_t counted = 0;
            for (const Point& p : inst.points)
                counted += is_burned(p, r.schedule) ? 1 : 0;
            EXPECT_EQ(counted, r.burned);
            const auto rep = validate_schedule(sub_instance(inst, r.burned_points), r.schedule);
            EXPECT_TRUE(rep.violations.empty());
        }
    }
}
