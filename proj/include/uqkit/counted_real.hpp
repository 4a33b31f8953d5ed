#pragma once

#include <cmath>
#include <cstdint>

namespace uqkit {

// Drop-in scalar that counts arithmetic operations flowing through it.
// Instantiate the reference:: templates with it to measure how an
// algorithm's operation count scales with input size.
struct CountedReal {
    double v = 0.0;

    static inline thread_local std::uint64_t ops = 0;
    static void reset_ops() { ops = 0; }

    CountedReal() = default;
    CountedReal(double x) : v(x) {}  // NOLINT: implicit by design of the probe

    friend CountedReal operator+(CountedReal a, CountedReal b) {
        ++ops;
        return {a.v + b.v};
    }
    friend CountedReal operator-(CountedReal a, CountedReal b) {
        ++ops;
        return {a.v - b.v};
    }
    friend CountedReal operator*(CountedReal a, CountedReal b) {
        ++ops;
        return {a.v * b.v};
    }
    friend CountedReal operator/(CountedReal a, CountedReal b) {
        ++ops;
        return {a.v / b.v};
    }
    CountedReal operator-() const { return {-v}; }

    friend bool operator<(CountedReal a, CountedReal b) { return a.v < b.v; }
    friend bool operator>(CountedReal a, CountedReal b) { return a.v > b.v; }
    friend bool operator<=(CountedReal a, CountedReal b) { return a.v <= b.v; }
    friend bool operator>=(CountedReal a, CountedReal b) { return a.v >= b.v; }
    friend bool operator==(CountedReal a, CountedReal b) { return a.v == b.v; }

    friend CountedReal sqrt(CountedReal a) {
        ++ops;
        return {std::sqrt(a.v)};
    }
    friend CountedReal pow(CountedReal a, CountedReal b) {
        ++ops;
        return {std::pow(a.v, b.v)};
    }
    friend CountedReal abs(CountedReal a) { return {std::fabs(a.v)}; }
};

}  // namespace uqkit
