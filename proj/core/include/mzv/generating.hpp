#pragma once

#include <mzv/closed_forms.hpp>
#include <mzv/hp.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

struct GeneratingReport {
    std::string name;
    int truncation = 0;
    unsigned digits = 0;
    bool exact = false;           // compared over Q or in h, no tolerance
    bool passed = false;
    HPReal max_deviation = 0;     // numeric comparisons only
    HPReal tolerance = 0;
    std::size_t compared = 0;     // number of coefficients compared
    std::vector<std::string> mismatches; // first few offending coefficients
};

// Names: exp_ast, k_ast_sk, kn_nk, mzv_mzsv_inverse, reflection, gen_2k,
// ohno_zagier, aomoto, le_murakami_split, g_over_f, bernoulli_corollary.
// Parameter k is used by exp_ast, k_ast_sk, kn_nk, mzv_mzsv_inverse and gen_2k.
// The default tolerance is tolerance_for(digits).
GeneratingReport generating_check(std::string_view name, const Params& params, int truncation, unsigned digits,
                                  std::optional<HPReal> tolerance = std::nullopt);
std::vector<std::string_view> generating_names();

} // namespace mzv
