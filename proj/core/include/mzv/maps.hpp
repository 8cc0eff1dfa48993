#pragma once

#include <mzv/word_sum.hpp>

#include <string_view>
#include <vector>

namespace mzv {

WordSum sigma(const WordSum& u);     // x -> x, y -> x + y, multiplicative
WordSum sigma_inv(const WordSum& u); // x -> x, y -> -x + y
WordSum S_map(const WordSum& u);     // S(wa) = sigma(w) a
WordSum S_inv(const WordSum& u);
WordSum S_tilde(const WordSum& u);   // S~(wa) = w sigma(a)
WordSum S_tilde_inv(const WordSum& u);
WordSum tau(const WordSum& u);       // antiautomorphism swapping x and y

WordSum partial_n(int n, const WordSum& u);      // derivation, d_n(x) = x(x+y)^{n-1}y = -d_n(y)
WordSum partial_n_star(int n, const WordSum& u); // S^{-1} d_n S

WordSum ohno_sigma(int m, const WordSum& u);          // throws NotInH1
WordSum ohno_sigma_bar(int m, const WordSum& u);      // tau sigma_m tau, throws NotInH0
WordSum ohno_sigma_star(int m, const WordSum& u);     // S^{-1} sigma_m S, throws NotInH1
WordSum ohno_sigma_bar_star(int m, const WordSum& u); // S^{-1} sigma_m-bar S, throws NotInH0

// CLI names: S, Sinv, stilde, stildeinv, tau, sigma, sigmainv, dn:N, dnstar:N,
// ohno:M, ohnobar:M, ohnostar:M, ohnobarstar:M.
WordSum apply_named_map(std::string_view name, const WordSum& u); // throws ParseError
std::vector<std::string_view> map_names();

} // namespace mzv
