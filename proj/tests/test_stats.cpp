#include <axiobench/signals.hpp>
#include <axiobench/stats.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>
#include <vector>

using namespace axiobench;

TEST_CASE("mean of the empty sample is rejected") {
    CHECK_THROWS_AS(mean({}), std::invalid_argument);
    CHECK(mean({1.0, 1.0, 1.0}) == 1.0);
    CHECK(mean({0.0, 1.0}) == 0.5);
    CHECK(mean({0.7, 0.7, 0.7, 0.7, 0.7, 0.7, 0.7, 0.7, 0.7, 0.7,
                0.7, 0.7, 0.7, 0.7, 0.7, 0.7, 0.7, 0.7, 0.7, 0.7}) ==
          Catch::Approx(0.7));
}

TEST_CASE("signed-rank z reproduces the hand-computed values") {
    // n=5, all positive: W+ = 15, z = 7.5 / sqrt(13.75)
    const auto z5 = wilcoxon_one_sided_z({1.0, 2.0, 3.0, 4.0, 5.0});
    REQUIRE(z5.has_value());
    CHECK(*z5 == Catch::Approx(2.0225995873897262).margin(1e-12));

    // n=10, all positive: W+ = 55, z = 27.5 / sqrt(96.25)
    const auto z10 = wilcoxon_one_sided_z(
        {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0});
    REQUIRE(z10.has_value());
    CHECK(*z10 == Catch::Approx(2.8030595529069404).margin(1e-12));
}

TEST_CASE("signed-rank z is zero for perfectly symmetric samples") {
    const auto z = wilcoxon_one_sided_z({1.0, -1.0, 2.0, -2.0, 3.0, -3.0});
    REQUIRE(z.has_value());
    CHECK(*z == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("zero differences are discarded before ranking") {
    const auto with_zeros =
        wilcoxon_one_sided_z({0.0, 0.0, 1.0, 2.0, 3.0, 4.0, 5.0});
    const auto without = wilcoxon_one_sided_z({1.0, 2.0, 3.0, 4.0, 5.0});
    REQUIRE(with_zeros.has_value());
    REQUIRE(without.has_value());
    CHECK(*with_zeros == *without);
}

TEST_CASE("fewer than five nonzero differences is indeterminate") {
    CHECK_FALSE(wilcoxon_one_sided_z({1.0, 2.0, 3.0, 4.0}).has_value());
    CHECK_FALSE(wilcoxon_one_sided_z({0.0, 0.0, 0.0, 0.0, 0.0}).has_value());
    CHECK_FALSE(wilcoxon_one_sided_z({}).has_value());
    CHECK_FALSE(
        wilcoxon_one_sided_z({0.0, 0.0, 1.0, -2.0, 3.0, -4.0}).has_value());
}

TEST_CASE("signed-rank z is antisymmetric and scale-invariant") {
    Rng rng(5);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> diffs;
        const std::size_t n = 5 + rng.below(10);
        for (std::size_t i = 0; i < n; ++i) {
            const double magnitude =
                1.0 + static_cast<double>(rng.below(1u << 20)) / 1024.0;
            diffs.push_back(rng.bit() ? magnitude : -magnitude);
        }
        const auto z = wilcoxon_one_sided_z(diffs);
        REQUIRE(z.has_value());

        std::vector<double> negated, scaled;
        for (double d : diffs) {
            negated.push_back(-d);
            scaled.push_back(2.5 * d);
        }
        const auto zn = wilcoxon_one_sided_z(negated);
        const auto zs = wilcoxon_one_sided_z(scaled);
        REQUIRE(zn.has_value());
        REQUIRE(zs.has_value());
        CHECK(*zn == Catch::Approx(-*z).margin(1e-12));
        CHECK(*zs == Catch::Approx(*z).margin(1e-12));
    }
}

TEST_CASE("non-finite differences are rejected") {
    CHECK_THROWS_AS(
        wilcoxon_one_sided_z({1.0, 2.0, std::nan(""), 4.0, 5.0}),
        std::invalid_argument);
}

TEST_CASE("exact tail probabilities match the small cases") {
    CHECK(wilcoxon_exact_p({1.0, 2.0, 3.0, 4.0, 5.0}) ==
          Catch::Approx(1.0 / 32.0).margin(1e-15));
    CHECK(wilcoxon_exact_p({1.0}) == Catch::Approx(0.5).margin(1e-15));
    CHECK(wilcoxon_exact_p({1.0, 2.0, 3.0}) ==
          Catch::Approx(1.0 / 8.0).margin(1e-15));
}

TEST_CASE("exact oracle rejects unusable samples") {
    CHECK_THROWS_AS(wilcoxon_exact_p({}), std::invalid_argument);
    CHECK_THROWS_AS(wilcoxon_exact_p({0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(wilcoxon_exact_p({1.0, -1.0, 2.0}), std::invalid_argument);
    std::vector<double> big;
    for (int i = 1; i <= 15; ++i)
        big.push_back(i);
    CHECK_THROWS_AS(wilcoxon_exact_p(big), std::invalid_argument);
}

TEST_CASE("normal tail approximation tracks the exact oracle") {
    Rng rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 5 + rng.below(8);  // 5..12
        std::vector<double> diffs;
        std::set<std::uint64_t> magnitudes;
        while (diffs.size() < n) {
            const std::uint64_t m = 1 + rng.below(1u << 30);
            if (!magnitudes.insert(m).second)
                continue;  // keep magnitudes untied for the exact oracle
            const double v = static_cast<double>(m) / 1024.0;
            diffs.push_back(rng.bit() ? v : -v);
        }
        const auto z = wilcoxon_one_sided_z(diffs);
        REQUIRE(z.has_value());
        const double p_normal = normal_one_sided_p(*z);
        const double p_exact = wilcoxon_exact_p(diffs);
        CHECK(std::fabs(p_normal - p_exact) <= 0.03);
    }
}

TEST_CASE("normal tail takes textbook values") {
    CHECK(normal_one_sided_p(0.0) == Catch::Approx(0.5).margin(1e-12));
    CHECK(normal_one_sided_p(3.090) == Catch::Approx(0.001).margin(1e-4));
    CHECK(normal_one_sided_p(10.0) < 1e-20);
}

TEST_CASE("the PairedSample wrapper forwards to the raw overload") {
    PairedSample s;
    s.diffs = {1.0, 2.0, 3.0, 4.0, 5.0};
    const auto a = wilcoxon_one_sided_z(s);
    const auto b = wilcoxon_one_sided_z(s.diffs);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*a == *b);
}
