#include "geoburn/oracle.hpp"

#include "brute.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace geoburn;

namespace {

Instance line(std::initializer_list<double> xs)
{
    Instance inst;
    inst.dimension = 1;
    for (double x : xs)
        inst.points.push_back({x, 0.0});
    return inst;
}

int burning_number(const Instance& inst, BurnModel m, int k = 1)
{
    auto r = exact_burning_number(inst, {m, k}, static_cast<int>(inst.size()) + 1);
    EXPECT_TRUE(r.has_value());
    if (r) {
        EXPECT_TRUE(validate_schedule(inst, r->schedule).valid);
    }
    return r ? r->burning_number : -1;
}

} // namespace

TEST(ExactBurning, ThreeCollinearPoints)
{
    EXPECT_EQ(burning_number(line({0, 1, 2}), BurnModel::Anywhere), 2);
    EXPECT_EQ(burning_number(line({0, 1, 2}), BurnModel::Point), 2);
}

TEST(ExactBurning, SinglePoint)
{
    EXPECT_EQ(burning_number(line({3}), BurnModel::Anywhere), 1);
    EXPECT_EQ(burning_number(line({3}), BurnModel::Point), 1);
}

TEST(ExactBurning, TwoFarPointsNeedTwoSteps)
{
    EXPECT_EQ(burning_number(line({0, 4}), BurnModel::Point), 2);
}

TEST(ExactBurning, EmptyInstance)
{
    auto r = exact_burning_number(Instance{}, {BurnModel::Point, 1}, 3);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->burning_number, 0);
}

TEST(ExactBurning, NulloptBelowOptimum)
{
    EXPECT_FALSE(exact_burning_number(line({0, 10, 20}), {BurnModel::Point, 1}, 2).has_value());
}

TEST(ExactBurning, CapacityGuard)
{
    Instance big;
    for (int i = 0; i < 65; ++i)
        big.points.push_back({static_cast<double>(i), 0});
    EXPECT_THROW(exact_burning_number(big, {BurnModel::Point, 1}, 3), CapacityError);
}

TEST(ExactBurning, MatchesBruteForcePointModel)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
        Instance inst = brute::random_instance(rng, n, 5.0, trial % 3 == 0 ? 3 : 1);
        EXPECT_EQ(burning_number(inst, BurnModel::Point), brute::point_burning_number(inst)) << "trial " << trial;
    }
}

TEST(ExactBurning, MatchesBruteForceAnywhere1D)
{
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(0, 12);
    for (int trial = 0; trial < 60; ++trial) {
        Instance inst;
        inst.dimension = 1;
        std::vector<double> xs;
        for (int i = 0; i < 1 + trial % 7; ++i) {
            xs.push_back(std::round(2 * u(rng)) / 2);
            inst.points.push_back({xs.back(), 0});
        }
        deduplicate(inst);
        EXPECT_EQ(burning_number(inst, BurnModel::Anywhere), brute::anywhere_burning_number_1d(xs))
            << "trial " << trial;
    }
}

TEST(ExactBurning, AnywhereNeverWorseThanPoint)
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        Instance inst = brute::random_instance(rng, 1 + static_cast<std::size_t>(trial % 7), 6.0);
        EXPECT_LE(burning_number(inst, BurnModel::Anywhere), burning_number(inst, BurnModel::Point));
    }
}

// Only for anywhere burning: in the point model a removed point may have
// been the only good center.
TEST(ExactBurning, AddingPointsNeverHelpsAnywhere)
{
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 40; ++trial) {
        Instance inst = brute::random_instance(rng, 6, 6.0);
        Instance prefix = inst;
        prefix.points.pop_back();
        EXPECT_LE(burning_number(prefix, BurnModel::Anywhere), burning_number(inst, BurnModel::Anywhere));
    }
}

TEST(ExactBurning, KBurning)
{
    const Instance inst = line({0, 10, 20, 30});
    EXPECT_EQ(burning_number(inst, BurnModel::Point, 4), 1);
    EXPECT_EQ(burning_number(inst, BurnModel::Point, 2), 2);
}

TEST(ExactDiskCover, Examples)
{
    const std::vector<Point> pts{{0, 0}, {3, 0}};
    const std::vector<Point> centers{{0, 0}, {3, 0}, {1.5, 0}};
    const auto cover = exact_disk_cover(pts, centers, 2.0);
    ASSERT_EQ(cover.size(), 1u);
    EXPECT_EQ(centers[cover[0]], (Point{1.5, 0}));

    EXPECT_EQ(exact_disk_cover({{7, 7}}, {{7, 7}, {8, 8}}, 1.0).size(), 1u);
    EXPECT_EQ(exact_disk_cover({{0, 0}, {10, 0}}, {{0, 0}, {10, 0}}, 2.0).size(), 2u);
}

TEST(ExactDiskCover, MatchesSubsetEnumeration)
{
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 80; ++trial) {
        Instance inst = brute::random_instance(rng, 2 + static_cast<std::size_t>(trial % 7), 6.0);
        const double r = 0.5 + (trial % 4);
        const auto centers = candidate_centers(inst.points);
        if (centers.size() > 20)
            continue;
        EXPECT_EQ(exact_disk_cover(inst.points, centers, r).size(), brute::min_disk_cover(inst.points, centers, r));
        EXPECT_EQ(exact_disk_cover(inst.points, inst.points, r).size(),
                  brute::min_disk_cover(inst.points, inst.points, r));
    }
}

TEST(ExactDiskCover, UncoverableTargetThrows)
{
    EXPECT_THROW(exact_disk_cover({{0, 0}, {9, 9}}, {{0, 0}}, 1.0), Error);
}

TEST(ExactDominatingSet, Examples)
{
    EXPECT_EQ(exact_dominating_set({{0, 0}, {10, 0}}, {1, 1}).size(), 2u);
    EXPECT_EQ(exact_dominating_set({{0, 0}, {1.5, 0}}, {1, 1}).size(), 1u);
    const auto mid = exact_dominating_set({{0, 0}, {2, 0}, {4, 0}}, {1, 1, 1});
    ASSERT_EQ(mid.size(), 1u);
    EXPECT_EQ(mid[0], 1u);
}

TEST(ExactDominatingSet, MatchesSubsetEnumeration)
{
    std::mt19937_64 rng(26);
    std::uniform_real_distribution<double> rad(0.0, 1.5);
    for (int trial = 0; trial < 80; ++trial) {
        Instance inst = brute::random_instance(rng, 1 + static_cast<std::size_t>(trial % 9), 6.0);
        std::vector<double> radii;
        for (std::size_t i = 0; i < inst.size(); ++i)
            radii.push_back(rad(rng));
        EXPECT_EQ(exact_dominating_set(inst.points, radii).size(), brute::min_dominating_set(inst.points, radii));
    }
}

TEST(ExactMaxBurn, Examples)
{
    Instance one;
    one.points = {{0, 0}, {1, 0}};
    EXPECT_EQ(exact_max_burn(one, {0}, 1).burned, 1u);

    Instance three;
    three.points = {{0, 0}, {5, 0}, {1, 0}};
    EXPECT_EQ(exact_max_burn(three, {0, 1}, 2).burned, 3u);

    Instance all;
    all.points = {{0, 0}, {1, 1}, {2, 0}};
    EXPECT_EQ(exact_max_burn(all, {0, 1, 2}, 4).burned, 3u);
}

TEST(ExactMaxBurn, MatchesBruteForceAndIsMonotone)
{
    std::mt19937_64 rng(27);
    for (int trial = 0; trial < 60; ++trial) {
        Instance inst = brute::random_instance(rng, 3 + static_cast<std::size_t>(trial % 5), 4.0, 2);
        const std::vector<std::size_t> S{0, 1, 2};
        for (int q = 1; q <= 3; ++q) {
            const auto exact = exact_max_burn(inst, S, q).burned;
            EXPECT_EQ(exact, brute::max_burn(inst, S, q));
            EXPECT_LE(exact_max_burn(inst, S, q).burned, exact_max_burn(inst, S, q + 1).burned);
            EXPECT_LE(exact_max_burn(inst, {0, 1}, q).burned, exact);
        }
    }
}
