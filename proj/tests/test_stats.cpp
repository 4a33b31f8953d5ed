#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "uqkit/reference.hpp"
#include "uqkit/rng.hpp"
#include "uqkit/stats.hpp"

using namespace uqkit;

namespace {

std::vector<double> gaussian_draws(std::size_t n, std::uint64_t seed) {
    const std::uint64_t key = rng::stream_key(seed, 0);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rng::normal_pair(key, i).z1;
    return v;
}

std::vector<double> uniform_draws(std::size_t n, std::uint64_t seed) {
    const std::uint64_t key = rng::stream_key(seed, 0);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rng::uniform_pos(key, i);
    return v;
}

std::vector<double> exponential_draws(std::size_t n, std::uint64_t seed) {
    const std::uint64_t key = rng::stream_key(seed, 0);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rng::exponential(key, i);
    return v;
}

// Random window for property tests: values uniform in [-1, 1) plus an offset.
std::vector<double> random_window(std::size_t n, std::uint64_t seed, double offset = 0.0) {
    const std::uint64_t key = rng::stream_key(seed, 7);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = offset + 2.0 * rng::uniform_pos(key, i) - 1.0;
    return v;
}

void shuffle_inplace(std::vector<double>& v, std::uint64_t seed) {
    const std::uint64_t key = rng::stream_key(seed, 99);
    for (std::size_t i = v.size() - 1; i > 0; --i) {
        const std::size_t j = rng::bits_at(key, i) % (i + 1);
        std::swap(v[i], v[j]);
    }
}

double rel_diff(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

}  // namespace

TEST_CASE("mean basics") {
    CHECK(mean(std::vector<double>{1, 2, 3}) == 2.0);
    CHECK(mean(std::vector<double>{5, 5, 5, 5}) == 5.0);
    CHECK_THROWS_AS(mean(std::span<const double>{}), InvalidWindow);

    const auto g = gaussian_draws(1'000'000, 42);
    CHECK(std::abs(mean(g)) < 0.01);
}

TEST_CASE("mean is exact for constant windows even with non-dyadic values") {
    std::vector<double> v(100'000, 0.1);
    CHECK(mean(v) == 0.1);
    CHECK(sample_std(v) == 0.0);
}

TEST_CASE("sample_std basics") {
    CHECK(sample_std(std::vector<double>{1, 1, 1}) == 0.0);
    CHECK(sample_std(std::vector<double>{0, 2}) == std::sqrt(2.0));
    CHECK_THROWS_AS(sample_std(std::vector<double>{1}), InvalidWindow);

    const auto g = gaussian_draws(1'000'000, 43);
    CHECK(std::abs(sample_std(g) - 1.0) < 0.01);
}

TEST_CASE("skewness basics") {
    CHECK(skewness(std::vector<double>{-1, 0, 1}) == 0.0);
    CHECK_THROWS_AS(skewness(std::vector<double>{3, 3, 3}), DegenerateWindow);
    CHECK_THROWS_AS(skewness(std::vector<double>{1, 2}), InvalidWindow);

    CHECK(std::abs(skewness(gaussian_draws(1'000'000, 44))) < 0.01);
    CHECK(std::abs(skewness(exponential_draws(1'000'000, 45)) - 2.0) < 0.05);
}

TEST_CASE("kurtosis basics") {
    CHECK(kurtosis(std::vector<double>{-1, 1, -1, 1}) == 1.0);
    CHECK_THROWS_AS(kurtosis(std::vector<double>{2, 2, 2, 2}), DegenerateWindow);
    CHECK_THROWS_AS(kurtosis(std::vector<double>{1, 2, 3}), InvalidWindow);

    CHECK(std::abs(kurtosis(gaussian_draws(1'000'000, 46)) - 3.0) < 0.05);
    CHECK(std::abs(kurtosis(uniform_draws(1'000'000, 47)) - 1.8) < 0.05);
}

TEST_CASE("pearson correlation basics") {
    const std::vector<double> a{1, 2, 3};
    CHECK(pearson_correlation(a, std::vector<double>{2, 4, 6}) == 1.0);
    CHECK(pearson_correlation(a, std::vector<double>{-1, -2, -3}) == -1.0);
    CHECK_THROWS_AS(pearson_correlation(a, std::vector<double>{1, 2}), ShapeError);
    CHECK_THROWS_AS(pearson_correlation(a, std::vector<double>{5, 5, 5}),
                    DegenerateWindow);

    const auto x = gaussian_draws(1'000'000, 48);
    const auto y = gaussian_draws(1'000'000, 49);
    CHECK(std::abs(pearson_correlation(x, y)) < 0.005);
}

TEST_CASE("location/scale equivariance and affine invariance") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 5 + rng::bits_at(rng::stream_key(seed, 1), 0) % 200;
        const auto x = random_window(n, seed);
        const double a = (seed % 2 == 0 ? 1.0 : -1.0) * (0.5 + 0.1 * (seed % 7));
        const double b = 3.5 - 0.25 * (seed % 11);

        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i] + b;

        CHECK(rel_diff(mean(y), a * mean(x) + b) < 1e-9);
        CHECK(rel_diff(sample_std(y), std::abs(a) * sample_std(x)) < 1e-9);
        const double sign3 = a > 0 ? 1.0 : -1.0;
        CHECK(rel_diff(skewness(y), sign3 * skewness(x)) < 1e-9);
        CHECK(rel_diff(kurtosis(y), kurtosis(x)) < 1e-9);

        const auto z = random_window(n, seed + 1000);
        const double c = (seed % 3 == 0 ? -2.0 : 1.5);
        std::vector<double> zc(n);
        for (std::size_t i = 0; i < n; ++i) zc[i] = c * z[i] - 4.0;
        const double sign = (a * c) > 0 ? 1.0 : -1.0;
        CHECK(rel_diff(pearson_correlation(y, zc),
                       sign * pearson_correlation(x, z)) < 1e-9);
    }
}

TEST_CASE("permutation invariance") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto x = random_window(300, seed);
        auto shuffled = x;
        shuffle_inplace(shuffled, seed);
        CHECK(rel_diff(mean(x), mean(shuffled)) < 1e-12);
        CHECK(rel_diff(sample_std(x), sample_std(shuffled)) < 1e-12);
        CHECK(rel_diff(skewness(x), skewness(shuffled)) < 1e-12);
        CHECK(rel_diff(kurtosis(x), kurtosis(shuffled)) < 1e-12);
    }
}

TEST_CASE("moment inequality: kurtosis >= 1 + skewness^2") {
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        const auto x = random_window(4 + seed % 400, seed);
        const double g1 = skewness(x);
        CHECK(kurtosis(x) >= 1.0 + g1 * g1 - 1e-9);
    }
}

TEST_CASE("blocked kernels match the serial two-pass reference within 1e-9") {
    // Dimensionless statistics are compared on their natural O(1) scale.
    const auto diff1 = [](double a, double b) {
        return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0});
    };
    for (const std::size_t n : {5UL, 30UL, 1000UL, 20000UL, 300000UL}) {
        for (const double offset : {0.0, 50.0, 5000.0}) {
            const auto x = random_window(n, n + 17, offset);
            const auto y = random_window(n, n + 18, offset);
            const std::span<const double> xs(x), ys(y);
            CHECK(rel_diff(mean(xs), reference::mean(xs)) < 1e-9);
            CHECK(rel_diff(sample_std(xs), reference::sample_std(xs)) < 1e-9);
            CHECK(diff1(skewness(xs), reference::skewness(xs)) < 1e-9);
            CHECK(diff1(kurtosis(xs), reference::kurtosis(xs)) < 1e-9);
            CHECK(diff1(pearson_correlation(xs, ys),
                        reference::pearson_correlation(xs, ys)) < 1e-9);
        }
    }
}

TEST_CASE("results do not depend on the thread count") {
#ifdef _OPENMP
    const auto x = random_window(1'000'000, 5);
    const auto y = random_window(1'000'000, 6);
    const int saved = omp_get_max_threads();

    omp_set_num_threads(1);
    const Moments m1 = compute_moments(x);
    const CoMoments c1 = compute_comoments(x, y);
    omp_set_num_threads(std::max(2, saved));
    const Moments m2 = compute_moments(x);
    const CoMoments c2 = compute_comoments(x, y);
    omp_set_num_threads(saved);

    CHECK(m1.mean == m2.mean);
    CHECK(m1.m2 == m2.m2);
    CHECK(m1.m3 == m2.m3);
    CHECK(m1.m4 == m2.m4);
    CHECK(c1.sxy == c2.sxy);
#endif
}
