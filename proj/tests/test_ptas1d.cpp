#include "geoburn/oracle.hpp"
#include "geoburn/ptas1d.hpp"

#include "brute.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace geoburn;

namespace {

Instance line(const std::vector<double>& xs)
{
    Instance inst;
    inst.dimension = 1;
    for (double x : xs)
        inst.points.push_back({x, 0.0});
    return inst;
}

Instance random_line(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_real_distribution<double> u(0.0, 15.0);
    std::vector<double> xs;
    for (std::size_t i = 0; i < n; ++i)
        xs.push_back(std::round(4 * u(rng)) / 4);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return line(xs);
}

} // namespace

TEST(BuildGroups, EvenSplit)
{
    const GroupSpec g = build_groups(6, 3);
    EXPECT_EQ(g.group_sizes, (std::vector<int>{2, 2, 2}));
    EXPECT_EQ(g.relaxed_radius, (std::vector<double>{2, 4, 6}));
    EXPECT_EQ(g.extra_steps, 4);
}

TEST(BuildGroups, SingleGroup)
{
    const GroupSpec g = build_groups(4, 1);
    EXPECT_EQ(g.group_sizes, std::vector<int>{4});
    EXPECT_EQ(g.relaxed_radius, std::vector<double>{4});
}

TEST(BuildGroups, UnevenSplitFollowsCeilingRule)
{
    // Interval i (radius i-1) goes to group ceil(2i/5): i = 1, 2 -> 1; i = 3, 4, 5 -> 2.
    const GroupSpec g = build_groups(5, 2);
    EXPECT_EQ(g.group_sizes, (std::vector<int>{2, 3}));
    EXPECT_DOUBLE_EQ(g.relaxed_radius[0], 2.5);
    EXPECT_DOUBLE_EQ(g.relaxed_radius[1], 5.0);
}

TEST(BuildGroups, TooManyGroupsRejected)
{
    EXPECT_THROW(build_groups(2, 3), PreconditionError);
}

TEST(BuildGroups, EveryIntervalFitsItsRelaxedRadius)
{
    for (int delta = 1; delta <= 30; ++delta)
        for (int t = 1; t <= delta; ++t) {
            const GroupSpec g = build_groups(delta, t);
            int i = 1;
            for (std::size_t j = 0; j < g.group_sizes.size(); ++j)
                for (int c = 0; c < g.group_sizes[j]; ++c, ++i) {
                    EXPECT_GE(g.relaxed_radius[j] + 1e-12, i - 1) << delta << "," << t;
                    EXPECT_LE(g.relaxed_radius[j], (i - 1) + 2.0 * delta / t + 1e-12) << delta << "," << t;
                }
            EXPECT_EQ(i - 1, delta);
        }
}

TEST(DpCover, AnywhereThreePoints)
{
    // The radius-1 group alone suffices when centered at 1.
    const auto r = dp_cover({0, 1, 2}, build_groups(2, 2), BurnModel::Anywhere);
    ASSERT_TRUE(r.feasible);
    ASSERT_EQ(r.placements.size(), 1u);
    EXPECT_DOUBLE_EQ(r.placements[0].radius, 1.0);
    EXPECT_DOUBLE_EQ(r.placements[0].center, 1.0);
}

TEST(DpCover, FarPairInfeasibleAtDeltaOne)
{
    for (int t = 1; t <= 1; ++t)
        EXPECT_FALSE(dp_cover({0, 100}, build_groups(1, t), BurnModel::Anywhere).feasible);
    EXPECT_FALSE(dp_cover({0, 100}, exact_groups(1), BurnModel::Point).feasible);
}

TEST(DpCover, PointModelCentersOnInputPoints)
{
    const auto r = dp_cover({0, 1, 2}, build_groups(2, 2), BurnModel::Point);
    ASSERT_TRUE(r.feasible);
    ASSERT_EQ(r.placements.size(), 1u);
    EXPECT_DOUBLE_EQ(r.placements[0].center, 1.0);
    EXPECT_DOUBLE_EQ(r.placements[0].radius, 1.0);

    const auto wide = dp_cover({0, 1.5, 2}, build_groups(2, 2), BurnModel::Point);
    ASSERT_TRUE(wide.feasible);
    for (const Placement& p : wide.placements)
        EXPECT_TRUE(p.center == 0 || p.center == 1.5 || p.center == 2);
}

TEST(DpCover, RejectsUnsortedInput)
{
    EXPECT_THROW(dp_cover({2, 1}, build_groups(2, 1), BurnModel::Point), PreconditionError);
}

TEST(DpCover, ExactGroupsMatchOracle)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const Instance inst = random_line(rng, 1 + static_cast<std::size_t>(trial % 8));
        std::vector<double> xs;
        for (const Point& p : inst.points)
            xs.push_back(p.x);
        for (BurnModel m : {BurnModel::Point, BurnModel::Anywhere}) {
            const int opt = exact_burning_number(inst, {m, 1}, 20)->burning_number;
            for (int d = 1; d <= opt; ++d)
                EXPECT_EQ(dp_cover(xs, exact_groups(d), m).feasible, d == opt) << "trial " << trial;
        }
    }
}

TEST(DpCover, MonotoneInDelta)
{
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 40; ++trial) {
        const Instance inst = random_line(rng, 8);
        std::vector<double> xs;
        for (const Point& p : inst.points)
            xs.push_back(p.x);
        for (int t : {1, 2, 3}) {
            bool before = false;
            for (int d = t; d <= 10; ++d) {
                const bool now = dp_cover(xs, build_groups(d, t), BurnModel::Anywhere).feasible;
                EXPECT_TRUE(!before || now);
                before = now;
            }
        }
    }
}

TEST(DpCover, StateCountWithinEnvelope)
{
    std::mt19937_64 rng(33);
    const Instance inst = random_line(rng, 10);
    std::vector<double> xs;
    for (const Point& p : inst.points)
        xs.push_back(p.x);
    for (int d = 2; d <= 8; ++d)
        for (int t = 1; t <= d; ++t) {
            const auto r = dp_cover(xs, build_groups(d, t), BurnModel::Point);
            EXPECT_LE(static_cast<double>(r.states), std::pow(static_cast<double>(d) / t + 1, t) * (xs.size() + 1));
        }
}

TEST(Ptas1d, ThreePointsEpsilonOne)
{
    const auto r = ptas_burning_1d(line({0, 1, 2}), BurnModel::Anywhere, 1.0);
    EXPECT_EQ(r.t, 2);
    EXPECT_EQ(r.delta, 2);
    EXPECT_EQ(r.schedule.total_steps, 4);
    EXPECT_TRUE(validate_schedule(line({0, 1, 2}), r.schedule).valid);
}

TEST(Ptas1d, SinglePointUsesExactRadii)
{
    for (double eps : {0.25, 1.0, 3.0}) {
        const auto r = ptas_burning_1d(line({5}), BurnModel::Point, eps);
        EXPECT_EQ(r.delta, 1);
        EXPECT_LE(r.schedule.total_steps, 1 + static_cast<int>(std::ceil(2.0 / r.t)));
        EXPECT_TRUE(validate_schedule(line({5}), r.schedule).valid);
    }
}

TEST(Ptas1d, RejectsPlanarInput)
{
    Instance inst;
    inst.points = {{0, 1}};
    EXPECT_THROW(ptas_burning_1d(inst, BurnModel::Point, 1.0), PreconditionError);
}

TEST(Ptas1d, RatioAndSoundnessAgainstBruteForce)
{
    std::mt19937_64 rng(34);
    for (double eps : {2.0, 1.0, 0.5, 0.3}) {
        for (int trial = 0; trial < 40; ++trial) {
            const Instance inst = random_line(rng, 1 + static_cast<std::size_t>(trial % 9));
            std::vector<double> xs;
            for (const Point& p : inst.points)
                xs.push_back(p.x);
            const int point_opt = brute::point_burning_number(inst);
            const int any_opt = brute::anywhere_burning_number_1d(xs);
            for (auto [m, opt] : {std::pair{BurnModel::Point, point_opt}, std::pair{BurnModel::Anywhere, any_opt}}) {
                const auto r = ptas_burning_1d(inst, m, eps);
                EXPECT_TRUE(validate_schedule(inst, r.schedule).valid);
                EXPECT_LE(r.delta, opt);
                for (int d : r.rejected)
                    EXPECT_LT(d, opt);
                EXPECT_LE(r.schedule.total_steps, (1 + eps) * opt + 1 + 1e-9)
                    << "eps " << eps << " trial " << trial << " model " << to_string(m);
            }
        }
    }
}

TEST(Ptas1d, ScalesWithUniformRate)
{
    Instance inst = line({0, 2, 4, 12});
    inst.rates = {2, 2, 2, 2};
    const auto r = ptas_burning_1d(inst, BurnModel::Point, 1.0);
    EXPECT_TRUE(validate_schedule(inst, r.schedule).valid);
}
