#pragma once

#include <mzv/rational.hpp>

namespace mzv {

// B_n with t/(e^t - 1) = sum B_n t^n / n!, so B_1 = -1/2. Cached, thread safe.
Rational bernoulli(unsigned n);

} // namespace mzv
