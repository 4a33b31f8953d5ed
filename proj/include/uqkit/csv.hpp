#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "uqkit/errors.hpp"
#include "uqkit/pipeline.hpp"
#include "uqkit/synth.hpp"

namespace uqkit {

// Shortest round-trip decimal form; locale-independent.
std::string format_double(double v);

// Canonical paired series: header "timestamp_s,temperature_c,humidity_rh".
struct PairedCsv {
    std::vector<double> timestamp_s;
    std::vector<double> t_values;
    std::vector<double> h_values;
};

PairedCsv read_paired_csv(std::istream& in);
void write_paired_csv(std::ostream& out, const PairedSeries& s);

// Raw ADC rows: header "t_adc,h_adc,p_adc"; values must be in register range.
struct RawAdcCsv {
    std::vector<std::uint32_t> t_adc;
    std::vector<std::uint32_t> h_adc;
    std::vector<std::uint32_t> p_adc;
};

RawAdcCsv read_raw_adc_csv(std::istream& in);

void write_compensated_csv(std::ostream& out, std::span<const double> t_out,
                           std::span<const double> h_out, std::span<const double> p_out);

// Generic two-column numeric file with the given header names.
struct TwoColumns {
    std::vector<double> a;
    std::vector<double> b;
};

TwoColumns read_two_column_csv(std::istream& in, const std::string& col_a,
                               const std::string& col_b);

// Per-window report rows; optional fields are left empty.
void write_reports_csv(std::ostream& out, std::span<const UqReport> reports);

}  // namespace uqkit
