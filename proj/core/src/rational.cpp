#include <mzv/error.hpp>
#include <mzv/rational.hpp>

#include <cctype>
#include <string>

namespace mzv {

Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    std::size_t i = 0;
    auto digits = [&](std::string& out) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out += text[i++];
        if (i == start) throw ParseError("expected digits", i);
    };
    std::string num, den;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        if (text[i] == '-') num += '-';
        ++i;
    }
    digits(num);
    if (i < text.size() && text[i] == '/') {
        ++i;
        digits(den);
    }
    if (i != text.size()) throw ParseError("trailing characters in rational", i);
    Rational q;
    q.get_num() = Integer(num);
    q.get_den() = den.empty() ? Integer(1) : Integer(den);
    if (q.get_den() == 0) throw ParseError("zero denominator", text.size());
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational pow(const Rational& base, long exponent) {
    Rational r(1);
    Rational b = exponent < 0 ? Rational(1) / base : base;
    unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), e);
    r.canonicalize();
    return r;
}

} // namespace mzv
