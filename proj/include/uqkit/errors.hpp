#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uqkit {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Window too short or otherwise unusable for the requested statistic.
class InvalidWindow : public Error {
public:
    using Error::Error;
};

// Zero-variance window where a scale-dependent statistic is undefined.
class DegenerateWindow : public Error {
public:
    using Error::Error;
};

// Paired inputs with mismatched lengths.
class ShapeError : public Error {
public:
    using Error::Error;
};

// |rho| = 1: the joint density collapses onto a line.
class DegenerateModel : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class InvalidTime : public Error {
public:
    using Error::Error;
};

class EstimationFailed : public Error {
public:
    using Error::Error;
};

class SingularFit : public Error {
public:
    using Error::Error;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

// Malformed input file; carries the 1-based line number when known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what), line_(0) {}
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace uqkit
