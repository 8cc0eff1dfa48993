#pragma once

#include <mzv/rational.hpp>

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace mzv {

using HPReal = boost::multiprecision::mpfr_float;

// Sets the default MPFR precision (decimal digits) for values created in scope.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits10);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

unsigned working_digits(unsigned target_digits); // target + 15 guard digits

HPReal to_hp(const Rational& q);
HPReal to_hp(const Integer& z);
HPReal hp_pi();
HPReal lambda_squared(); // -4 pi^2
HPReal pi_power(int n);  // pi^n
std::string to_decimal(const HPReal& x, unsigned digits);
HPReal abs_diff(const HPReal& a, const HPReal& b);
HPReal tolerance_for(unsigned digits); // 10^{-(digits-10)}

struct HPComplex {
    HPReal re = 0;
    HPReal im = 0;

    HPComplex() = default;
    HPComplex(HPReal r) : re(std::move(r)), im(0) {} // NOLINT
    HPComplex(HPReal r, HPReal i) : re(std::move(r)), im(std::move(i)) {}

    static HPComplex polar_unit(const HPReal& theta); // e^{i theta}

    HPComplex& operator+=(const HPComplex& o);
    HPComplex& operator-=(const HPComplex& o);
    HPComplex& operator*=(const HPComplex& o);
    HPComplex& operator/=(const HPComplex& o);
    friend HPComplex operator+(HPComplex a, const HPComplex& b) { return a += b; }
    friend HPComplex operator-(HPComplex a, const HPComplex& b) { return a -= b; }
    friend HPComplex operator*(HPComplex a, const HPComplex& b) { return a *= b; }
    friend HPComplex operator/(HPComplex a, const HPComplex& b) { return a /= b; }
    HPComplex operator-() const { return {-re, -im}; }
    HPReal norm() const; // |z|
};

HPComplex pow(const HPComplex& z, unsigned n);

// Continued-fraction reconstruction; returns false if no rational with
// denominator <= bound is within tol of x.
bool reconstruct_rational(const HPReal& x, const Integer& denominator_bound, const HPReal& tol, Rational& out);

} // namespace mzv
