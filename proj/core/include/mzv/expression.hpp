#pragma once

#include <mzv/word_sum.hpp>

#include <string_view>

namespace mzv {

// expr := ['-'] term (('+'|'-') term)* | '0'
// term := [rational '*'] atom
// atom := word | index      word := [xy]+      index := '(' int (',' int)* ')' | '()'
// rational := ['-'] int ['/' posint]
// Throws ParseError with the offending position.
WordSum parse_expression(std::string_view text);

// Same, then checks membership: Space::H1 throws NotInH1, Space::H0 throws NotInH0.
WordSum parse_expression(std::string_view text, Space required);

} // namespace mzv
