#pragma once

#include <mzv/hp.hpp>
#include <mzv/rational.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

// A closed-form value. When `coefficient` is set the value is exactly
// coefficient * pi^pi_power; on the complex routes the coefficient comes from
// rational reconstruction of a numerically summed root-of-unity expression.
struct ClosedForm {
    std::string name;
    std::optional<Rational> coefficient;
    int pi_power = 0;
    HPReal value;
    HPReal imaginary = 0;       // leftover imaginary part (complex routes only)
    bool complex_route = false;
    bool reconstructed = false; // true when the rational was recovered from digits

    std::string str(unsigned digits) const; // "q * pi^w = 1.234..." or the decimal alone
};

using Params = std::map<std::string, long>;

// Names: zeta2n, z2_n, zs2_n, z2k_n, zs2k_n, z2k_n_recursive, zs2k_n_recursive,
// z4_n, z4_n_sum, zs4_n_sum, z31_n, tmn, zs_tmn, t_2n1_n, zs_t_2n1_n, le_murakami,
// res_hoffman, res_2a, res_two_forms. Throws BadRange on missing or bad parameters.
ClosedForm closed_form(std::string_view name, const Params& params, unsigned digits);
std::vector<std::string_view> closed_form_names();

// Exact pieces reused by the catalog and the generating checks.
Rational zeta2n_coefficient(long n);            // zeta(2n) / pi^{2n}, zeta(0) = -1/2
Rational lambda_power_coefficient(long n);      // lambda^{2n} / pi^{2n} = (-4)^n
Rational beta_coefficient(long k);              // (2^{1-2k} - 1) B_{2k} / (2k)!
Rational ev2k_recursive(long k, long n, bool star); // C_n^{(k)} or C_n^{*,(k)}

} // namespace mzv
