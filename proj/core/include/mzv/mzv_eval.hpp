#pragma once

#include <mzv/hp.hpp>
#include <mzv/regularization.hpp>
#include <mzv/word_sum.hpp>

#include <cstddef>

namespace mzv {

enum class MzvMethod {
    SplitHalf,  // iterated integral cut at t = 1/2, both halves are polylog series at 1/2
    SplitThird, // cut at t = 1/3: series at 1/3 and 2/3
    Direct,     // depth one only: partial sum plus Euler-Maclaurin tail
};

// All values are computed with working_digits(digits) decimal digits and keep
// that precision. Throws PrecisionExhausted when digits exceeds the configured cap.
HPReal zeta(const Index& idx, unsigned digits); // throws NotAdmissible
HPReal zeta_word(const Word& w, unsigned digits, MzvMethod method = MzvMethod::SplitHalf); // throws NotInH0
HPReal zeta_star(const Index& idx, unsigned digits); // Z(S(w))
HPReal zeta_single(int s, unsigned digits);         // zeta(s), s >= 2; zeta(0) = -1/2

HPReal z_value(const WordSum& w, unsigned digits);      // Z extended linearly, Z(1) = 1; throws NotInH0
HPReal z_star_value(const WordSum& w, unsigned digits); // Z(S(w))

// Li_{k1..kn}(c) = sum_{m1 > ... > mn >= 1} c^{m1} / (m1^k1 ... mn^kn), 0 < c < 1.
HPReal polylog(const Index& idx, const Rational& c, unsigned digits);

// Sum of zeta over admissible indices with weight k, depth n, height s.
HPReal x0_sum(int k, int n, int s, unsigned digits); // throws BadRange

ZetaSource zeta_source(unsigned digits);

void clear_mzv_cache();
std::size_t mzv_cache_size();

} // namespace mzv
