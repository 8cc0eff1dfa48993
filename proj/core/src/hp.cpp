#include <mzv/hp.hpp>

#include <sstream>

namespace mzv {

PrecisionGuard::PrecisionGuard(unsigned digits10) : saved_(HPReal::default_precision()) {
    HPReal::default_precision(digits10);
}

PrecisionGuard::~PrecisionGuard() { HPReal::default_precision(saved_); }

unsigned working_digits(unsigned target_digits) { return target_digits + 15; }

HPReal to_hp(const Integer& z) {
    HPReal r;
    mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

HPReal to_hp(const Rational& q) {
    HPReal r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

HPReal hp_pi() {
    HPReal r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

HPReal lambda_squared() {
    HPReal p = hp_pi();
    return -4 * p * p;
}

HPReal pi_power(int n) { return boost::multiprecision::pow(hp_pi(), n); }

std::string to_decimal(const HPReal& x, unsigned digits) {
    std::ostringstream os;
    os.precision(static_cast<std::streamsize>(digits));
    os << x;
    return os.str();
}

HPReal abs_diff(const HPReal& a, const HPReal& b) { return boost::multiprecision::abs(a - b); }

HPReal tolerance_for(unsigned digits) {
    return boost::multiprecision::pow(HPReal(10), -static_cast<int>(digits > 10 ? digits - 10 : 1));
}

HPComplex HPComplex::polar_unit(const HPReal& theta) {
    return {boost::multiprecision::cos(theta), boost::multiprecision::sin(theta)};
}

HPComplex& HPComplex::operator+=(const HPComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

HPComplex& HPComplex::operator-=(const HPComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

HPComplex& HPComplex::operator*=(const HPComplex& o) {
    HPReal r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

HPComplex& HPComplex::operator/=(const HPComplex& o) {
    HPReal d = o.re * o.re + o.im * o.im;
    HPReal r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
}

HPReal HPComplex::norm() const { return boost::multiprecision::sqrt(re * re + im * im); }

HPComplex pow(const HPComplex& z, unsigned n) {
    HPComplex r(HPReal(1)), b = z;
    while (n) {
        if (n & 1u) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

bool reconstruct_rational(const HPReal& x, const Integer& denominator_bound, const HPReal& tol, Rational& out) {
    // convergents p_k/q_k of the continued fraction of x
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    HPReal rest = x;
    for (int iter = 0; iter < 200; ++iter) {
        HPReal fl = boost::multiprecision::floor(rest);
        Integer a;
        mpfr_get_z(a.get_mpz_t(), fl.backend().data(), MPFR_RNDD);
        Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > denominator_bound) return false;
        Rational cand(p2, q2);
        cand.canonicalize();
        if (abs_diff(to_hp(cand), x) <= tol) {
            out = cand;
            return true;
        }
        HPReal frac = rest - fl;
        if (frac == 0) return false;
        rest = 1 / frac;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    return false;
}

} // namespace mzv
