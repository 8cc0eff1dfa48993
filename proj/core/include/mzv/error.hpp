#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mzv {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotInH1 : public Error {
public:
    explicit NotInH1(const std::string& what) : Error("not in h1: " + what) {}
};

class NotInH0 : public Error {
public:
    explicit NotInH0(const std::string& what) : Error("not in h0: " + what) {}
};

class NotAdmissible : public Error {
public:
    explicit NotAdmissible(const std::string& what) : Error("index not admissible: " + what) {}
};

class BadRange : public Error {
public:
    explicit BadRange(const std::string& what) : Error("parameter out of range: " + what) {}
};

class ParityMismatch : public Error {
public:
    explicit ParityMismatch(const std::string& what) : Error("parity mismatch: " + what) {}
};

class WeightMismatch : public Error {
public:
    explicit WeightMismatch(const std::string& what) : Error("weight mismatch: " + what) {}
};

class PrecisionExhausted : public Error {
public:
    explicit PrecisionExhausted(const std::string& what) : Error("precision exhausted: " + what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error("parse error at " + std::to_string(position) + ": " + what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace mzv
