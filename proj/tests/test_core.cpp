#include "geoburn/core.hpp"

#include "brute.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace geoburn;

namespace {

BurnSchedule point_schedule(int T, std::vector<BurnSource> src, int k = 1)
{
    return BurnSchedule{{BurnModel::Point, k}, T, std::move(src)};
}

Instance line(std::initializer_list<double> xs)
{
    Instance inst;
    inst.dimension = 1;
    for (double x : xs)
        inst.points.push_back({x, 0.0});
    return inst;
}

} // namespace

TEST(Distance, BasicValues)
{
    EXPECT_DOUBLE_EQ(distance({0, 0}, {0, 0}), 0.0);
    EXPECT_DOUBLE_EQ(distance({0, 0}, {3, 4}), 5.0);
    EXPECT_DOUBLE_EQ(distance({1, 0}, {2, 0}), 1.0);
}

TEST(BurnRadius, GrowsOnePerStep)
{
    EXPECT_DOUBLE_EQ(burn_radius({{0, 0}, 1, 1.0}, 4), 3.0);
    EXPECT_DOUBLE_EQ(burn_radius({{0, 0}, 7, 1.0}, 7), 0.0);
    EXPECT_DOUBLE_EQ(burn_radius({{0, 0}, 2, 3.0}, 5), 9.0);
}

TEST(BurnRadius, RejectsIgnitionAfterEnd)
{
    EXPECT_THROW(burn_radius({{0, 0}, 5, 1.0}, 4), PreconditionError);
}

TEST(BurnRadius, LinearInRate)
{
    for (int T = 1; T < 6; ++T)
        for (int s = 1; s <= T; ++s)
            EXPECT_DOUBLE_EQ(burn_radius({{0, 0}, s, 2.5}, T), 2.5 * burn_radius({{0, 0}, s, 1.0}, T));
}

TEST(IsBurned, BoundaryCountsAsCovered)
{
    const auto s = point_schedule(3, {{{0, 0}, 1, 1.0}});
    EXPECT_TRUE(is_burned({2, 0}, s));
    EXPECT_FALSE(is_burned({2.01, 0}, s));
    EXPECT_TRUE(is_burned({0, 0}, s));
    EXPECT_TRUE(is_burned({2 + 5e-10, 0}, s));
}

TEST(IsBurned, InvariantUnderRigidMotion)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-5, 5), ang(0, 6.283185307179586);
    for (int trial = 0; trial < 200; ++trial) {
        const double a = ang(rng), tx = u(rng), ty = u(rng);
        auto move = [&](Point p) {
            return Point{std::cos(a) * p.x - std::sin(a) * p.y + tx, std::sin(a) * p.x + std::cos(a) * p.y + ty};
        };
        BurnSchedule s = point_schedule(4, {{{u(rng), u(rng)}, 1, 1.0}, {{u(rng), u(rng)}, 3, 1.0}});
        BurnSchedule m = s;
        for (auto& src : m.sources)
            src.center = move(src.center);
        const Point p{u(rng), u(rng)};
        // Skip points within 1e-6 of a fire front, where rounding may flip the answer.
        bool near_front = false;
        for (const auto& src : s.sources)
            near_front |= std::abs(distance(p, src.center) - burn_radius(src, 4)) < 1e-6;
        if (!near_front) {
            EXPECT_EQ(is_burned(p, s), is_burned(move(p), m));
        }
    }
}

TEST(Validate, SinglePoint)
{
    Instance inst;
    inst.points = {{0, 0}};
    EXPECT_TRUE(validate_schedule(inst, point_schedule(1, {{{0, 0}, 1, 1.0}})).valid);
}

TEST(Validate, ReportsUnburnedPoints)
{
    Instance inst;
    inst.points = {{0, 0}, {5, 0}};
    const auto rep = validate_schedule(inst, point_schedule(2, {{{0, 0}, 1, 1.0}}));
    EXPECT_FALSE(rep.valid);
    EXPECT_EQ(rep.unburned, std::vector<std::size_t>{1});
}

TEST(Validate, ThreeCollinearPointsInTwoSteps)
{
    const Instance inst = line({0, 1, 2});
    EXPECT_TRUE(validate_schedule(inst, point_schedule(2, {{{1, 0}, 1, 1.0}, {{0, 0}, 2, 1.0}})).valid);
    EXPECT_EQ(brute::point_burning_number(inst), 2);
}

TEST(Validate, StepCapacity)
{
    const Instance inst = line({0, 10});
    const auto sched = point_schedule(1, {{{0, 0}, 1, 1.0}, {{10, 0}, 1, 1.0}});
    EXPECT_TRUE(validate_schedule(inst, sched).has_violation(rule::kStepCapacity));
    auto k2 = sched;
    k2.model.k = 2;
    EXPECT_TRUE(validate_schedule(inst, k2).valid);
}

TEST(Validate, StepRange)
{
    const Instance inst = line({0});
    EXPECT_TRUE(validate_schedule(inst, point_schedule(1, {{{0, 0}, 2, 1.0}})).has_violation(rule::kStepRange));
    EXPECT_TRUE(validate_schedule(inst, point_schedule(1, {{{0, 0}, 0, 1.0}})).has_violation(rule::kStepRange));
}

TEST(Validate, PointModelCenters)
{
    const Instance inst = line({0, 2});
    auto off = point_schedule(2, {{{1, 0}, 1, 1.0}});
    EXPECT_TRUE(validate_schedule(inst, off).has_violation(rule::kNotInstancePoint));
    off.model.tag = BurnModel::Anywhere;
    EXPECT_TRUE(validate_schedule(inst, off).valid);

    auto dup = point_schedule(3, {{{0, 0}, 1, 1.0}, {{0, 0}, 2, 1.0}});
    EXPECT_TRUE(validate_schedule(inst, dup).has_violation(rule::kDuplicateCenter));
}

TEST(Validate, RateMismatchAndBadRate)
{
    Instance inst = line({0, 4});
    inst.rates = {2.0, 1.0};
    EXPECT_TRUE(validate_schedule(inst, point_schedule(3, {{{0, 0}, 1, 2.0}})).valid);
    EXPECT_TRUE(validate_schedule(inst, point_schedule(3, {{{0, 0}, 1, 1.0}})).has_violation(rule::kRateMismatch));
    EXPECT_TRUE(validate_schedule(inst, point_schedule(3, {{{0, 0}, 1, -1.0}})).has_violation(rule::kBadRate));
}

TEST(Validate, IgniteBurntPointIsOnlyAWarning)
{
    const Instance inst = line({0, 1, 5});
    const auto sched = point_schedule(3, {{{0, 0}, 1, 1.0}, {{1, 0}, 2, 1.0}, {{5, 0}, 3, 1.0}});
    const auto rep = validate_schedule(inst, sched);
    EXPECT_TRUE(rep.valid);
    EXPECT_TRUE(rep.has_warning(rule::kIgniteBurntPoint));
    const auto pruned = prune_burnt_ignitions(inst, sched);
    EXPECT_EQ(pruned.sources.size(), 2u);
    const auto again = validate_schedule(inst, pruned);
    EXPECT_TRUE(again.valid);
    EXPECT_FALSE(again.has_warning(rule::kIgniteBurntPoint));
}

TEST(Validate, MonotoneInTotalSteps)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Instance inst = brute::random_instance(rng, 5, 4.0);
        BurnSchedule s = point_schedule(3, {});
        for (int i = 0; i < 3; ++i)
            s.sources.push_back({inst.points[static_cast<std::size_t>(i)], i + 1, 1.0});
        if (!validate_schedule(inst, s).valid)
            continue;
        s.total_steps += 1;
        EXPECT_TRUE(validate_schedule(inst, s).valid);
    }
}

TEST(Validate, ValidSchedulesUseEnoughSteps)
{
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> pick(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
        Instance inst = brute::random_instance(rng, 6, 3.0);
        const int k = pick(rng), T = pick(rng);
        BurnSchedule s = point_schedule(T, {}, k);
        for (std::size_t i = 0; i < inst.size(); ++i)
            if (pick(rng) == 1)
                s.sources.push_back({inst.points[i], 1 + static_cast<int>(i) % T, 1.0});
        if (validate_schedule(inst, s).valid) {
            EXPECT_GE(s.total_steps * k, static_cast<int>(s.sources.size()));
        }
    }
}

TEST(Instance, Checks)
{
    Instance inst;
    inst.points = {{0, 0}, {1, 1}};
    EXPECT_NO_THROW(check_instance(inst));
    inst.dimension = 1;
    EXPECT_THROW(check_instance(inst), PreconditionError);
    inst.dimension = 2;
    inst.rates = {1.0};
    EXPECT_THROW(check_instance(inst), PreconditionError);
    inst.rates = {1.0, 0.0};
    EXPECT_THROW(check_instance(inst), PreconditionError);
    inst.rates = {1.0, 3.0};
    EXPECT_DOUBLE_EQ(inst.rate_ratio(), 3.0);
    EXPECT_FALSE(inst.uniform_rates());
}

TEST(Instance, DeduplicateKeepsFirst)
{
    Instance inst;
    inst.points = {{0, 0}, {1, 1}, {0, 0}, {2, 2}};
    inst.rates = {1, 2, 3, 4};
    inst.sources = {2, 3};
    EXPECT_EQ(deduplicate(inst), 1u);
    ASSERT_EQ(inst.size(), 3u);
    EXPECT_EQ(inst.rates, (std::vector<double>{1, 2, 4}));
    EXPECT_EQ(inst.sources, (std::vector<std::size_t>{0, 2}));
}

TEST(Schedule, CanonicalOrder)
{
    BurnSchedule s = point_schedule(3, {{{2, 0}, 2, 1.0}, {{1, 0}, 2, 1.0}, {{5, 0}, 1, 1.0}});
    const auto c = canonical(s);
    EXPECT_EQ(c.sources[0].center, (Point{5, 0}));
    EXPECT_EQ(c.sources[1].center, (Point{1, 0}));
    EXPECT_EQ(c.sources[2].center, (Point{2, 0}));
}
