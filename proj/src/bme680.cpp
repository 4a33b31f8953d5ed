#include "uqkit/bme680.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <string>
#include <string_view>

namespace uqkit {

namespace {

// Powers of two used as fixed scale factors in the conversion equations.
constexpr double k2p10 = 1024.0;
constexpr double k2p14 = 16384.0;
constexpr double k2p18 = 262144.0;
constexpr double k2p19 = 524288.0;
constexpr double k2p20 = 1048576.0;
constexpr double k2p21 = 2097152.0;
constexpr double k2p32 = 4294967296.0;
constexpr double k2p34 = 17179869184.0;
constexpr double k2p35 = 34359738368.0;
constexpr double k2p38 = 274877906944.0;
constexpr double k2p45 = 35184372088832.0;
constexpr double k2p48 = 281474976710656.0;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

void RawAdc::validate() const {
    if (t_adc >= 1u << 20) throw InvalidParams("t_adc exceeds 20-bit range");
    if (h_adc >= 1u << 16) throw InvalidParams("h_adc exceeds 16-bit range");
    if (p_adc >= 1u << 20) throw InvalidParams("p_adc exceeds 20-bit range");
}

Bme680Calibration parse_calibration(std::istream& in) {
    Bme680Calibration c;
    const std::array<std::pair<std::string_view, double*>, 20> fields{{
        {"k_t1", &c.k_t1},   {"k_t2", &c.k_t2}, {"k_t3", &c.k_t3}, {"k_h1", &c.k_h1},
        {"k_h2", &c.k_h2},   {"k_h3", &c.k_h3}, {"k_h4", &c.k_h4}, {"k_h5", &c.k_h5},
        {"k_h6", &c.k_h6},   {"k_h7", &c.k_h7}, {"k_p1", &c.k_p1}, {"k_p2", &c.k_p2},
        {"k_p3", &c.k_p3},   {"k_p4", &c.k_p4}, {"k_p5", &c.k_p5}, {"k_p6", &c.k_p6},
        {"k_p7", &c.k_p7},   {"k_p8", &c.k_p8}, {"k_p9", &c.k_p9}, {"k_p10", &c.k_p10},
    }};

    std::map<std::string, bool, std::less<>> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view s = trim(line);
        if (s.empty() || s.front() == '#') continue;
        const std::size_t eq = s.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("expected 'key = value'", line_no);
        const std::string_view key = trim(s.substr(0, eq));
        const std::string_view val = trim(s.substr(eq + 1));

        double* slot = nullptr;
        for (const auto& [name, ptr] : fields)
            if (key == name) slot = ptr;
        if (slot == nullptr)
            throw ParseError("unknown calibration key '" + std::string(key) + "'", line_no);
        if (seen.find(key) != seen.end())
            throw ParseError("duplicate calibration key '" + std::string(key) + "'",
                             line_no);

        double parsed = 0.0;
        const auto [end, ec] = std::from_chars(val.data(), val.data() + val.size(), parsed);
        if (ec != std::errc{} || end != val.data() + val.size() || !std::isfinite(parsed))
            throw ParseError("bad numeric value '" + std::string(val) + "'", line_no);
        *slot = parsed;
        seen.emplace(std::string(key), true);
    }

    for (const auto& [name, ptr] : fields)
        if (seen.find(name) == seen.end())
            throw ParseError("missing calibration key '" + std::string(name) + "'");
    return c;
}

Bme680Calibration load_calibration(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open calibration file " + path.string());
    return parse_calibration(in);
}

double compensate_temperature(const Bme680Calibration& c, std::uint32_t t_adc) {
    if (t_adc >= 1u << 20) throw InvalidParams("t_adc exceeds 20-bit range");
    const double x = t_adc / k2p14 - c.k_t1 / k2p10;
    return c.k_t2 / 5120.0 * x + c.k_t3 / (5120.0 * k2p10) * x * x;
}

double humidity_temp_coefficient(const Bme680Calibration& c, double t_out) {
    return c.k_h2 / k2p18 + c.k_h2 * c.k_h4 / k2p32 * t_out +
           c.k_h2 * c.k_h5 / k2p38 * t_out * t_out;
}

double compensate_humidity(const Bme680Calibration& c, std::uint32_t h_adc, double t_out) {
    if (h_adc >= 1u << 16) throw InvalidParams("h_adc exceeds 16-bit range");
    const double hc = humidity_temp_coefficient(c, t_out);
    const double base = h_adc - c.k_h1 * 16.0 + c.k_h3 / 2.0 * t_out;
    const double quad = c.k_h6 / k2p14 + c.k_h7 * t_out / k2p21;
    return hc * base + quad * hc * hc * base * base;
}

double compensate_pressure(const Bme680Calibration& c, std::uint32_t p_adc, double t_out) {
    if (p_adc >= 1u << 20) throw InvalidParams("p_adc exceeds 20-bit range");
    const double x = 2560.0 * t_out - 64000.0;
    const double pc1 =
        c.k_p6 / k2p19 * x * x + c.k_p5 * (1280.0 * t_out - 32000.0) + 65536.0 * c.k_p4;
    const double pc2 = c.k_p1 * c.k_p3 / k2p48 * x * x + c.k_p1 * c.k_p2 / k2p34 * x + c.k_p1;
    if (pc2 == 0.0) return k2p20 - p_adc;
    const double pc3 = 6250.0 / pc2 * (k2p20 - p_adc - pc1 / 4096.0);
    return c.k_p10 * pc3 * pc3 * pc3 / k2p45 + c.k_p9 * pc3 * pc3 / k2p35 +
           pc3 * (1.0 + c.k_p8 / k2p19) + 8.0 * c.k_p7;
}

double humidity_dtout_derivative(const Bme680Calibration& c, std::uint32_t h_adc,
                                 double t_out) {
    if (h_adc >= 1u << 16) throw InvalidParams("h_adc exceeds 16-bit range");
    const double hc = humidity_temp_coefficient(c, t_out);
    const double dhc = c.k_h2 * c.k_h4 / k2p32 + 2.0 * c.k_h2 * c.k_h5 / k2p38 * t_out;
    const double base = h_adc - c.k_h1 * 16.0 + c.k_h3 / 2.0 * t_out;
    const double dbase = c.k_h3 / 2.0;
    const double quad = c.k_h6 / k2p14 + c.k_h7 * t_out / k2p21;
    const double dquad = c.k_h7 / k2p21;
    return dhc * base + hc * dbase + dquad * hc * hc * base * base +
           quad * (2.0 * hc * dhc * base * base + 2.0 * hc * hc * base * dbase);
}

}  // namespace uqkit
