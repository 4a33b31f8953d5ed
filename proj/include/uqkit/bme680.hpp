#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>

#include "uqkit/errors.hpp"

namespace uqkit {

// The twenty device calibration constants, as real numbers. Values are
// supplied via a flat key-value file, never read from hardware.
struct Bme680Calibration {
    double k_t1 = 0.0, k_t2 = 0.0, k_t3 = 0.0;
    double k_h1 = 0.0, k_h2 = 0.0, k_h3 = 0.0, k_h4 = 0.0, k_h5 = 0.0, k_h6 = 0.0,
           k_h7 = 0.0;
    double k_p1 = 0.0, k_p2 = 0.0, k_p3 = 0.0, k_p4 = 0.0, k_p5 = 0.0, k_p6 = 0.0,
           k_p7 = 0.0, k_p8 = 0.0, k_p9 = 0.0, k_p10 = 0.0;
};

// Parses "key = value" lines ('#' comments allowed). All twenty keys must
// appear exactly once; anything else is a ParseError with a line number.
Bme680Calibration parse_calibration(std::istream& in);
Bme680Calibration load_calibration(const std::filesystem::path& path);

// Raw ADC words: 20-bit temperature and pressure, 16-bit humidity.
struct RawAdc {
    std::uint32_t t_adc = 0;
    std::uint32_t h_adc = 0;
    std::uint32_t p_adc = 0;

    void validate() const;
};

// degC from the raw temperature word.
double compensate_temperature(const Bme680Calibration& c, std::uint32_t t_adc);

// Temperature correction coefficient feeding the humidity conversion.
double humidity_temp_coefficient(const Bme680Calibration& c, double t_out);

// %RH from the raw humidity word and the converted temperature. The
// temperature enters both bracket terms, which is the path that carries
// temperature noise into the humidity output.
double compensate_humidity(const Bme680Calibration& c, std::uint32_t h_adc, double t_out);

// Pa from the raw pressure word and the converted temperature. When the
// divisor coefficient is exactly zero the defined fallback is 2^20 - p_adc.
double compensate_pressure(const Bme680Calibration& c, std::uint32_t p_adc, double t_out);

// Analytic d(H_Out)/d(T_Out) at fixed h_adc.
double humidity_dtout_derivative(const Bme680Calibration& c, std::uint32_t h_adc,
                                 double t_out);

}  // namespace uqkit
