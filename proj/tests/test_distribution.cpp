#include <doctest.h>

#include <chrono>
#include <cmath>
#include <numeric>
#include <random>

#include "simpson/distribution.hpp"
#include "simpson/errors.hpp"

using namespace simpson;

namespace {

constexpr Quadruple kSeed{0.8, 0.2, 0.6, 0.4};

JointDistribution worked_example(double p_treated = 0.5) {
    return assemble_joint(build(kSeed, 3), p_treated);
}

// X independent of (A, B): every cell has P(X1) = 0.3.
JointDistribution independent(int n) {
    std::vector<double> probs(outcome_count(n));
    const double cell = 1.0 / static_cast<double>(std::size_t{1} << (n + 1));
    for (std::size_t i = 0; i < probs.size(); ++i) {
        probs[i] = (outcome_at(n, i).x ? 0.3 : 0.7) * cell;
    }
    return JointDistribution(n, probs);
}

}  // namespace

TEST_CASE("outcome layout is lexicographic in (x, a, b1..bn)") {
    CHECK(outcome_index(3, {0, 0, 0}) == 0U);
    CHECK(outcome_index(3, {0, 0, 0b001}) == 1U);
    CHECK(outcome_index(3, {0, 1, 0}) == 8U);
    CHECK(outcome_index(3, {1, 0, 0}) == 16U);
    for (std::size_t i = 0; i < outcome_count(3); ++i) {
        CHECK(outcome_index(3, outcome_at(3, i)) == i);
    }
}

TEST_CASE("JointDistribution invariants") {
    CHECK_THROWS_AS(JointDistribution(1, {0.5, 0.5}), PreconditionError);
    CHECK_THROWS_AS(JointDistribution(0, {0.5, 0.5, 0.5, -0.5}), PreconditionError);
    CHECK_THROWS_AS(JointDistribution(0, {0.3, 0.3, 0.3, 0.3}), PreconditionError);
    const JointDistribution j(0, {0.1, 0.2, 0.3, 0.4});
    CHECK(j.p_treated() == doctest::Approx(0.2 + 0.4));
    CHECK_THROWS_AS(Dataset(0, {0, 0, 0, 0}), PreconditionError);
}

TEST_CASE("assemble_joint") {
    const JointDistribution j = worked_example();
    double total = 0.0;
    for (double p : j.probs()) total += p;
    CHECK(std::abs(total - 1.0) <= 1e-12);
    CHECK(std::abs(j.p_treated() - 0.5) <= 1e-12);
    CHECK(std::abs(j[{1, 1, 0b111}] - 0.5 * 0.0014) < 0.5 * 5e-5);
    CHECK(std::abs(j[{1, 1, 0b111}] - 0.5 * 0.0013998281383115617) < 1e-15);

    const JointDistribution j3 = worked_example(0.3);
    CHECK(std::abs(conditional(j3, true, true, CellIndex{}) - 0.8) <= 1e-12);

    CHECK_THROWS_AS(assemble_joint(build(kSeed, 1), 0.0), PreconditionError);
    CHECK_THROWS_AS(assemble_joint(build(kSeed, 1), 1.0), PreconditionError);
}

TEST_CASE("assemble_joint rescales an unnormalized root") {
    const ParadoxTree tree = build({0.4, 0.1, 0.3, 0.2}, 2);
    CHECK_FALSE(root_is_normalized(tree));
    const JointDistribution j = assemble_joint(tree, 0.5);
    CHECK(std::abs(conditional(j, true, true, {}) - 0.8) <= 1e-12);
    CHECK(std::abs(conditional(j, true, false, {}) - 0.6) <= 1e-12);
    CHECK(root_is_normalized(build(kSeed, 1)));
}

TEST_CASE("conditional") {
    const JointDistribution j = worked_example();
    CHECK(std::abs(conditional(j, true, true, {}) - 0.8) <= 1e-12);
    CHECK(std::abs(conditional(j, true, false, CellIndex::parse("000")) - 0.9962) < 5e-5);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const int depth = static_cast<int>(rng() % 4);
        const CellIndex cell(depth, static_cast<std::uint32_t>(rng() % (1U << depth)));
        const bool arm = rng() % 2;
        CHECK(std::abs(conditional(j, false, arm, cell) + conditional(j, true, arm, cell) - 1.0) <=
              1e-12);
    }
    // Point mass on (x=1, a=1, b=()): the control arm is empty.
    std::vector<double> point(outcome_count(0), 0.0);
    point[outcome_index(0, {1, 1, 0})] = 1.0;
    CHECK_THROWS_AS(conditional(JointDistribution(0, point), true, false, {}),
                    ZeroProbabilityError);
}

TEST_CASE("verify_chain on an assembled tree matches verify_alternation") {
    const ParadoxTree tree = build(kSeed, 3);
    const JointDistribution j = assemble_joint(tree, 0.5);
    const ChainReport from_joint = verify_chain(j);
    const ChainReport from_tree = verify_alternation(tree);
    CHECK(from_joint.verdict);
    REQUIRE(from_joint.depths.size() == from_tree.depths.size());
    for (std::size_t m = 0; m < from_tree.depths.size(); ++m) {
        CHECK(from_joint.depths[m].direction == from_tree.depths[m].direction);
        CHECK(std::abs(from_joint.depths[m].min_margin - from_tree.depths[m].min_margin) < 1e-12);
    }
}

TEST_CASE("verify_chain agrees with brute-force conditionals under a permuted order") {
    const JointDistribution j = worked_example();
    const std::vector<int> order{2, 1, 3};
    const ChainReport report = verify_chain(j, order, 3);
    for (const auto& depth : report.depths) {
        for (const auto& c : depth.cells) {
            const auto prefix = std::span<const int>(order).first(depth.depth);
            CHECK(std::abs(c.p1 - conditional(j, true, true, c.cell, prefix)) < 1e-12);
            CHECK(std::abs(c.p0 - conditional(j, true, false, c.cell, prefix)) < 1e-12);
        }
    }
    // Only the construction order is guaranteed. Stratifying by B2 first
    // keeps the aggregate direction, so nothing flips at depth 1.
    CHECK_FALSE(report.verdict);
    CHECK(report.depths[0].direction == Direction::greater);
    CHECK(report.depths[1].direction == Direction::greater);
}

TEST_CASE("verify_chain on an independence distribution") {
    const ChainReport report = verify_chain(independent(3));
    CHECK_FALSE(report.verdict);
    for (const auto& d : report.depths) {
        CHECK(d.min_margin < 1e-15);
        CHECK_FALSE(d.direction.has_value());
    }
}

TEST_CASE("verify_chain rejects bad orders and empty cells") {
    const JointDistribution j = worked_example();
    CHECK_THROWS_AS(verify_chain(j, std::vector<int>{1, 1, 2}, 3), PreconditionError);
    CHECK_THROWS_AS(verify_chain(j, std::vector<int>{1, 4}, 2), PreconditionError);
    CHECK_THROWS_AS(verify_chain(j, std::vector<int>{1}, 2), PreconditionError);

    std::vector<double> probs(outcome_count(1), 0.0);
    probs[outcome_index(1, {1, 1, 1})] = 0.25;
    probs[outcome_index(1, {0, 1, 0})] = 0.25;
    probs[outcome_index(1, {1, 0, 1})] = 0.5;  // control arm has no b1 = 0
    try {
        (void)verify_chain(JointDistribution(1, probs));
        FAIL("expected ZeroProbabilityError");
    } catch (const ZeroProbabilityError& e) {
        CHECK(e.cell() == "(1):0");
    }
}

TEST_CASE("property: conditionals do not depend on p_treated") {
    const ParadoxTree tree = build(kSeed, 3);
    for (double p : {0.1, 0.5, 0.9}) {
        const JointDistribution j = assemble_joint(tree, p);
        for (const auto& node : tree.nodes()) {
            const auto [p1, p0] = node_conditionals(node);
            CHECK(std::abs(conditional(j, true, true, node.index) - p1) <= 1e-12);
            CHECK(std::abs(conditional(j, true, false, node.index) - p0) <= 1e-12);
        }
    }
}

TEST_CASE("property: marginalizing the deepest factor keeps shallower reports") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (int i = 0; i < 50; ++i) {
        Quadruple seed = normalize_arms({u(rng), u(rng), u(rng), u(rng)});
        if (std::abs(seed.a - seed.c) < 0.01) continue;
        const int n = 2 + static_cast<int>(rng() % 4);
        const JointDistribution j = assemble_joint(build(seed, n), 0.4);
        const ChainReport full = verify_chain(j);
        const ChainReport reduced = verify_chain(marginalize_last(j));
        REQUIRE(reduced.depths.size() == static_cast<std::size_t>(n));
        for (int m = 0; m < n; ++m) {
            CHECK(reduced.depths[m].direction == full.depths[m].direction);
            CHECK(std::abs(reduced.depths[m].min_margin - full.depths[m].min_margin) < 1e-12);
        }
    }
}

TEST_CASE("effect measures") {
    const EffectMeasures e = effect_measures(0.8, 0.6);
    CHECK(e.risk_difference == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(e.relative_risk == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(e.odds_ratio == doctest::Approx(8.0 / 3.0).epsilon(1e-14));

    const EffectMeasures same = effect_measures(0.37, 0.37);
    CHECK(same.risk_difference == 0.0);
    CHECK(same.relative_risk == 1.0);
    CHECK(same.odds_ratio == 1.0);

    const EffectMeasures kidney = effect_measures(0.83, 0.78);
    CHECK(kidney.risk_difference > 0.0);
    CHECK(kidney.relative_risk > 1.0);
    CHECK(kidney.odds_ratio > 1.0);

    CHECK_THROWS_AS(effect_measures(0.0, 0.5), PreconditionError);
    CHECK_THROWS_AS(effect_measures(0.5, 1.0), PreconditionError);
}

TEST_CASE("property: effect measures agree in sign") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int mismatches = 0;
    for (int i = 0; i < 10000; ++i) {
        double p1 = u(rng), p0 = u(rng);
        if (p1 == 0.0 || p0 == 0.0) continue;
        const EffectMeasures e = effect_measures(p1, p0);
        const auto s = [](double v) { return (v > 0) - (v < 0); };
        if (s(e.risk_difference) != s(e.relative_risk - 1.0) ||
            s(e.risk_difference) != s(e.odds_ratio - 1.0)) {
            ++mismatches;
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("empirical_joint") {
    const JointDistribution j = empirical_joint(kidney_stone_dataset());
    CHECK(conditional(j, true, true, {}) == doctest::Approx(289.0 / 350.0).epsilon(1e-14));
    CHECK(conditional(j, true, false, {}) == doctest::Approx(273.0 / 350.0).epsilon(1e-14));
    CHECK(j.p_treated() == doctest::Approx(0.5).epsilon(1e-14));

    std::vector<std::uint64_t> one(outcome_count(2), 0);
    one[outcome_index(2, {0, 1, 0b10})] = 1;
    const JointDistribution point = empirical_joint(Dataset(2, one));
    CHECK(point[{0, 1, 0b10}] == 1.0);
    CHECK(point.p_treated() == 1.0);
}

TEST_CASE("sample") {
    const JointDistribution j = worked_example();
    CHECK_THROWS_AS(sample(j, 0, 1), PreconditionError);

    const Dataset a = sample(j, 5000, 17);
    CHECK(a.total() == 5000U);
    CHECK(a == sample(j, 5000, 17));
    CHECK_FALSE(a == sample(j, 5000, 18));

    std::vector<double> point(outcome_count(2), 0.0);
    point[outcome_index(2, {1, 0, 0b01})] = 1.0;
    const Dataset p = sample(JointDistribution(2, point), 1000, 3);
    CHECK(p[{1, 0, 0b01}] == 1000U);
}

TEST_CASE("sample is pinned to the documented generator") {
    // First draws of std::mt19937_64 seeded with 2024 mapped through (u >> 11) * 2^-53.
    std::mt19937_64 engine(2024);
    const JointDistribution j = worked_example();
    std::vector<double> cumulative(j.probs().size());
    std::partial_sum(j.probs().begin(), j.probs().end(), cumulative.begin());
    std::vector<std::uint64_t> expected(j.probs().size(), 0);
    for (int i = 0; i < 200; ++i) {
        const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        std::size_t k = 0;
        while (k + 1 < cumulative.size() && !(u < cumulative[k])) ++k;
        ++expected[k];
    }
    const Dataset d = sample(j, 200, 2024);
    CHECK(std::vector<std::uint64_t>(d.counts().begin(), d.counts().end()) == expected);
}

TEST_CASE("empirical distribution converges as the sample grows") {
    const JointDistribution j = worked_example();
    double previous = 1.0;
    for (std::uint64_t n : {1000ULL, 100000ULL, 10000000ULL}) {
        const double tv = total_variation(empirical_joint(sample(j, n, 12345)), j);
        MESSAGE("N=" << n << " TV=" << tv);
        CHECK(tv < previous);
        previous = tv;
    }
}

TEST_CASE("detect: kidney stones") {
    const auto found = detect(kidney_stone_dataset(), 1);
    REQUIRE(found.size() == 1U);
    CHECK(found[0].flips);
    CHECK(found[0].factor_order == std::vector<int>{1});
    const auto& depths = found[0].report.depths;
    REQUIRE(depths.size() == 2U);
    CHECK(depths[0].direction == Direction::greater);
    CHECK(depths[1].direction == Direction::less);
    CHECK(depths[0].cells[0].p1 == doctest::Approx(289.0 / 350.0));
    CHECK(depths[1].cells[1].p1 == doctest::Approx(234.0 / 270.0));  // cell "1": small stones
    CHECK(depths[1].cells[1].p0 == doctest::Approx(81.0 / 87.0));
    CHECK(depths[1].cells[0].p1 == doctest::Approx(55.0 / 80.0));
    CHECK(depths[1].cells[0].p0 == doctest::Approx(192.0 / 263.0));
    CHECK(found[0].warnings.empty());
}

TEST_CASE("detect: constructed data flips under the construction order") {
    const JointDistribution j = assemble_joint(build(kSeed, 3), 0.5);
    const Dataset data = sample(j, 2000000, 77);
    const auto found = detect(data, 3);
    bool identity = false;
    for (const auto& d : found) {
        if (d.factor_order == std::vector<int>{1, 2, 3}) {
            identity = true;
            CHECK(d.report.verdict);
        }
    }
    CHECK(identity);
    for (std::size_t i = 1; i < found.size(); ++i) {
        CHECK(found[i - 1].factor_order < found[i].factor_order);
    }
}

TEST_CASE("detect: independent data at a fixed seed") {
    const Dataset data = sample(independent(2), 100000, 2718);
    const auto found = detect(data, 2);
    std::size_t flips = 0;
    for (const auto& d : found) flips += d.flips ? 1 : 0;
    CHECK(flips == 0U);
}

TEST_CASE("detect: empty stratum yields a warning") {
    std::vector<std::uint64_t> counts(outcome_count(1), 0);
    counts[outcome_index(1, {1, 1, 1})] = 10;
    counts[outcome_index(1, {0, 1, 1})] = 5;
    counts[outcome_index(1, {1, 1, 0})] = 3;
    counts[outcome_index(1, {1, 0, 1})] = 4;
    counts[outcome_index(1, {0, 0, 1})] = 4;  // no control observations with b1 = 0
    const auto found = detect(Dataset(1, counts), 1);
    REQUIRE(found.size() == 1U);
    CHECK_FALSE(found[0].flips);
    REQUIRE(found[0].warnings.size() == 1U);
    CHECK(found[0].warnings[0].find("empty") != std::string::npos);
    CHECK(found[0].report.depths.size() == 1U);
}

TEST_CASE("detect: factor cap") {
    std::vector<std::uint64_t> counts(outcome_count(9), 1);
    CHECK_THROWS_AS(detect(Dataset(9, counts), 2), PreconditionError);
}
