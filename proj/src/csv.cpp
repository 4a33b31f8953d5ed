#include "uqkit/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <system_error>

namespace uqkit {

namespace {

std::string_view strip_cr(std::string_view s) {
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

double parse_finite(std::string_view field, std::size_t line_no) {
    double v = 0.0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || end != field.data() + field.size())
        throw ParseError("bad numeric field '" + std::string(field) + "'", line_no);
    if (!std::isfinite(v))
        throw ParseError("non-finite value '" + std::string(field) + "'", line_no);
    return v;
}

std::uint32_t parse_uint(std::string_view field, std::uint32_t limit, std::size_t line_no) {
    std::uint32_t v = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || end != field.data() + field.size())
        throw ParseError("bad integer field '" + std::string(field) + "'", line_no);
    if (v >= limit)
        throw ParseError("value '" + std::string(field) + "' out of register range",
                         line_no);
    return v;
}

void expect_header(std::istream& in, const std::string& expected) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError("empty input, expected header '" + expected + "'", 1);
    if (std::string(strip_cr(line)) != expected)
        throw ParseError("expected header '" + expected + "', got '" + line + "'", 1);
}

}  // namespace

std::string format_double(double v) {
    std::array<char, 32> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) throw Error("number formatting failed");
    return std::string(buf.data(), end);
}

PairedCsv read_paired_csv(std::istream& in) {
    expect_header(in, "timestamp_s,temperature_c,humidity_rh");
    PairedCsv out;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = strip_cr(line);
        if (body.empty()) continue;
        const auto fields = split_fields(body);
        if (fields.size() != 3) throw ParseError("expected 3 fields", line_no);
        out.timestamp_s.push_back(parse_finite(fields[0], line_no));
        out.t_values.push_back(parse_finite(fields[1], line_no));
        out.h_values.push_back(parse_finite(fields[2], line_no));
    }
    return out;
}

void write_paired_csv(std::ostream& out, const PairedSeries& s) {
    out << "timestamp_s,temperature_c,humidity_rh\n";
    for (std::size_t i = 0; i < s.timestamp_s.size(); ++i) {
        out << format_double(s.timestamp_s[i]) << ',' << format_double(s.t_values[i]) << ','
            << format_double(s.h_values[i]) << '\n';
    }
}

RawAdcCsv read_raw_adc_csv(std::istream& in) {
    expect_header(in, "t_adc,h_adc,p_adc");
    RawAdcCsv out;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = strip_cr(line);
        if (body.empty()) continue;
        const auto fields = split_fields(body);
        if (fields.size() != 3) throw ParseError("expected 3 fields", line_no);
        out.t_adc.push_back(parse_uint(fields[0], 1u << 20, line_no));
        out.h_adc.push_back(parse_uint(fields[1], 1u << 16, line_no));
        out.p_adc.push_back(parse_uint(fields[2], 1u << 20, line_no));
    }
    return out;
}

void write_compensated_csv(std::ostream& out, std::span<const double> t_out,
                           std::span<const double> h_out, std::span<const double> p_out) {
    out << "t_out_c,h_out_rh,p_out_pa\n";
    for (std::size_t i = 0; i < t_out.size(); ++i) {
        out << format_double(t_out[i]) << ',' << format_double(h_out[i]) << ','
            << format_double(p_out[i]) << '\n';
    }
}

TwoColumns read_two_column_csv(std::istream& in, const std::string& col_a,
                               const std::string& col_b) {
    expect_header(in, col_a + "," + col_b);
    TwoColumns out;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = strip_cr(line);
        if (body.empty()) continue;
        const auto fields = split_fields(body);
        if (fields.size() != 2) throw ParseError("expected 2 fields", line_no);
        out.a.push_back(parse_finite(fields[0], line_no));
        out.b.push_back(parse_finite(fields[1], line_no));
    }
    return out;
}

void write_reports_csv(std::ostream& out, std::span<const UqReport> reports) {
    out << "window_index,mu_t,mu_h,sigma_t,sigma_h,skew_t,skew_h,kurt_t,kurt_h,"
           "gate_passed,rho,sigma_hat_h,reduction_fraction\n";
    const auto opt = [](const std::optional<double>& v) {
        return v ? format_double(*v) : std::string();
    };
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const UqReport& r = reports[i];
        out << i << ',' << format_double(r.mu_t) << ',' << format_double(r.mu_h) << ','
            << format_double(r.sigma_t) << ',' << format_double(r.sigma_h) << ','
            << opt(r.skew_t) << ',' << opt(r.skew_h) << ',' << opt(r.kurt_t) << ','
            << opt(r.kurt_h) << ',';
        if (r.gate != GateOutcome::not_evaluated)
            out << (r.gate_passed() ? "true" : "false");
        out << ',' << opt(r.rho) << ',' << format_double(r.sigma_hat_h) << ','
            << format_double(r.reduction_fraction) << '\n';
    }
}

}  // namespace uqkit
