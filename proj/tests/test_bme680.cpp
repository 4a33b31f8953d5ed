#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "support/oracles.hpp"
#include "uqkit/bme680.hpp"
#include "uqkit/rng.hpp"
#include "uqkit/stats.hpp"

using namespace uqkit;

namespace {

// Same values as data/bme680_calibration_sample.txt.
Bme680Calibration sample_calibration() {
    Bme680Calibration c;
    c.k_t1 = 26105;
    c.k_t2 = 26498;
    c.k_t3 = 3;
    c.k_h1 = 749;
    c.k_h2 = 1044;
    c.k_h3 = 4;
    c.k_h4 = 45;
    c.k_h5 = 20;
    c.k_h6 = 120;
    c.k_h7 = -100;
    c.k_p1 = 36130;
    c.k_p2 = -10376;
    c.k_p3 = 88;
    c.k_p4 = 5481;
    c.k_p5 = -120;
    c.k_p6 = 30;
    c.k_p7 = 47;
    c.k_p8 = -3673;
    c.k_p9 = 3754;
    c.k_p10 = 30;
    return c;
}

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

const char* kSampleFile = "k_t1 = 26105\nk_t2 = 26498\nk_t3 = 3\n"
                          "k_h1 = 749\nk_h2 = 1044\nk_h3 = 4\nk_h4 = 45\nk_h5 = 20\n"
                          "k_h6 = 120\nk_h7 = -100\n"
                          "k_p1 = 36130\nk_p2 = -10376\nk_p3 = 88\nk_p4 = 5481\n"
                          "k_p5 = -120\nk_p6 = 30\nk_p7 = 47\nk_p8 = -3673\n"
                          "k_p9 = 3754\nk_p10 = 30\n";

}  // namespace

TEST_CASE("temperature conversion collapses to identity for cancelling constants") {
    Bme680Calibration c;
    c.k_t1 = 0;
    c.k_t2 = 5120;
    c.k_t3 = 0;
    for (const double x : {0.0, 0.5, 1.0, 12.25, 63.0})
        CHECK(compensate_temperature(c, static_cast<std::uint32_t>(x * 16384.0)) == x);
}

TEST_CASE("temperature conversion is linear when k_t3 = 0") {
    Bme680Calibration c;
    c.k_t1 = 26105;
    c.k_t2 = 26498;
    c.k_t3 = 0;
    const double y0 = compensate_temperature(c, 100'000);
    const double y1 = compensate_temperature(c, 900'000);
    const double slope = (y1 - y0) / (900'000.0 - 100'000.0);
    const double predicted = y0 + slope * (500'000.0 - 100'000.0);
    CHECK(rel_diff(compensate_temperature(c, 500'000), predicted) < 1e-12);
}

TEST_CASE("frozen golden vectors") {
    struct Golden {
        std::uint32_t t_adc, h_adc, p_adc;
        double t_out, h_out, p_out;
    };
    const std::vector<Golden> goldens{
        {524288u, 30000u, 400000u, 0x1.0d674e1a0751ap+5, 0x1.d434a77e19e25p+6,
         0x1.86647e872db48p+16},
        {409600u, 20000u, 300000u, -0x1.46b24ed524800p+1, 0x1.39455b7a484e3p+5,
         0x1.b2e739b0901f8p+16},
        {491520u, 26000u, 350000u, 0x1.7531c22fdb700p+4, 0x1.4aab61952843fp+6,
         0x1.a2e6afff96729p+16},
    };
    const auto c = sample_calibration();
    for (const auto& g : goldens) {
        const double t = compensate_temperature(c, g.t_adc);
        CHECK(rel_diff(t, g.t_out) < 1e-9);
        CHECK(rel_diff(compensate_humidity(c, g.h_adc, t), g.h_out) < 1e-9);
        CHECK(rel_diff(compensate_pressure(c, g.p_adc, t), g.p_out) < 1e-9);
    }
}

TEST_CASE("conversions match the independent transcription on a 100-point grid") {
    const auto c = sample_calibration();
    const std::uint64_t key = rng::stream_key(616, 0);
    for (std::uint64_t i = 0; i < 100; ++i) {
        const auto t_adc = static_cast<std::uint32_t>(rng::bits_at(key, 3 * i) % (1u << 20));
        const auto h_adc =
            static_cast<std::uint32_t>(rng::bits_at(key, 3 * i + 1) % (1u << 16));
        const auto p_adc =
            static_cast<std::uint32_t>(rng::bits_at(key, 3 * i + 2) % (1u << 20));
        const double t = compensate_temperature(c, t_adc);
        CHECK(rel_diff(t, oracles::bme680_t_out(c, t_adc)) < 1e-9);
        CHECK(rel_diff(compensate_humidity(c, h_adc, t),
                       oracles::bme680_h_out(c, h_adc, t)) < 1e-9);
        CHECK(rel_diff(compensate_pressure(c, p_adc, t),
                       oracles::bme680_p_out(c, p_adc, t)) < 1e-9);
    }
}

TEST_CASE("humidity coefficient structure") {
    const auto c = sample_calibration();
    CHECK(humidity_temp_coefficient(c, 0.0) == c.k_h2 / 262144.0);

    Bme680Calibration flat = c;
    flat.k_h4 = 0;
    flat.k_h5 = 0;
    CHECK(humidity_temp_coefficient(flat, -40.0) == humidity_temp_coefficient(flat, 85.0));

    for (const double t : {0.0, 25.0, 50.0})
        CHECK(rel_diff(humidity_temp_coefficient(c, t), oracles::bme680_h_c(c, t)) <
              1e-12);
}

TEST_CASE("humidity collapses to pure scaling when only k_h2 is set") {
    Bme680Calibration c;
    c.k_h2 = 1044;
    for (const std::uint32_t h_adc : {0u, 1000u, 30000u, 65535u})
        CHECK(compensate_humidity(c, h_adc, 17.0) == c.k_h2 / 262144.0 * h_adc);
}

TEST_CASE("analytic humidity derivative matches finite differences") {
    const auto c = sample_calibration();
    for (const std::uint32_t h_adc : {5000u, 26000u, 60000u}) {
        for (double t = -10.0; t <= 60.0; t += 7.0) {
            const double analytic = humidity_dtout_derivative(c, h_adc, t);
            const double fd = oracles::bme680_dh_dt_fd(c, h_adc, t, 1e-3);
            CHECK(rel_diff(analytic, fd) < 1e-6);
        }
    }
}

TEST_CASE("pressure fallback branch when the divisor coefficient is zero") {
    Bme680Calibration c = sample_calibration();
    c.k_p1 = 0;  // every term of the divisor carries k_p1
    for (const std::uint32_t p_adc : {0u, 12345u, 400000u, 1048575u})
        CHECK(compensate_pressure(c, p_adc, 25.0) == 1048576.0 - p_adc);
}

TEST_CASE("pressure chain collapses to the intermediate variable") {
    Bme680Calibration c = sample_calibration();
    c.k_p7 = 0;
    c.k_p8 = 0;
    c.k_p9 = 0;
    c.k_p10 = 0;
    const double t = 21.5;
    CHECK(rel_diff(compensate_pressure(c, 350'000, t),
                   oracles::bme680_p_out(c, 350'000, t)) < 1e-12);
}

TEST_CASE("temperature noise propagates into correlated humidity noise") {
    const auto c = sample_calibration();
    const std::uint64_t key = rng::stream_key(321, 0);
    const std::uint32_t h_adc = 26000;
    std::vector<double> t_out(20'000);
    std::vector<double> h_out(20'000);
    for (std::size_t i = 0; i < t_out.size(); ++i) {
        const double noisy_adc = 500'000.0 + 400.0 * rng::normal_pair(key, i).z1;
        t_out[i] = compensate_temperature(c, static_cast<std::uint32_t>(noisy_adc));
        h_out[i] = compensate_humidity(c, h_adc, t_out[i]);
    }
    CHECK(std::abs(pearson_correlation(t_out, h_out)) > 0.5);
}

TEST_CASE("adc range validation") {
    const auto c = sample_calibration();
    CHECK_THROWS_AS(compensate_temperature(c, 1u << 20), InvalidParams);
    CHECK_THROWS_AS(compensate_humidity(c, 1u << 16, 20.0), InvalidParams);
    CHECK_THROWS_AS(compensate_pressure(c, 1u << 20, 20.0), InvalidParams);
    RawAdc ok{1048575, 65535, 1048575};
    CHECK_NOTHROW(ok.validate());
    RawAdc bad{1048576, 0, 0};
    CHECK_THROWS_AS(bad.validate(), InvalidParams);
}

TEST_CASE("calibration file parsing") {
    std::istringstream good(kSampleFile);
    const auto c = parse_calibration(good);
    CHECK(c.k_t1 == 26105.0);
    CHECK(c.k_p10 == 30.0);

    std::istringstream dup(std::string(kSampleFile) + "k_t1 = 1\n");
    CHECK_THROWS_AS(parse_calibration(dup), ParseError);

    std::istringstream missing("k_t1 = 26105\nk_t2 = 26498\n");
    CHECK_THROWS_AS(parse_calibration(missing), ParseError);

    std::istringstream unknown(std::string(kSampleFile) + "k_x9 = 5\n");
    CHECK_THROWS_AS(parse_calibration(unknown), ParseError);

    std::istringstream garbage("k_t1 = abc\n");
    CHECK_THROWS_AS(parse_calibration(garbage), ParseError);

    // line numbers survive into the message
    std::istringstream late(std::string("# header\n\n") + "k_t1 = oops\n");
    try {
        parse_calibration(late);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}
