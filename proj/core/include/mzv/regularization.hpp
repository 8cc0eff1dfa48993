#pragma once

#include <mzv/hp.hpp>
#include <mzv/products.hpp>

#include <functional>
#include <string>
#include <vector>

namespace mzv {

// w = sum_i coefficients[i] (.) y^{(.) i} with every coefficient in h0.
struct RegDecomposition {
    std::vector<WordSum> coefficients;
    Product tag = Product::Shuffle;

    WordSum reconstruct() const;
    std::string str() const; // "w = w0 + w1 (sh) y + w2 (sh) y^2"
};

RegDecomposition reg_decompose(const WordSum& w, Product tag);  // throws NotInH1
WordSum reg(const WordSum& w, Product tag);                     // the constant term w0
// Same decomposition, solved as a dense linear system per weight.
RegDecomposition reg_decompose_by_elimination(const WordSum& w, Product tag);

const WordSum& y_power(Product tag, unsigned n); // y^{(.) n}, cached

template <class Scalar>
class TPolynomial {
public:
    TPolynomial() = default;
    explicit TPolynomial(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }

    std::size_t size() const { return c_.size(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    Scalar coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
    const std::vector<Scalar>& coefficients() const { return c_; }

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

private:
    std::vector<Scalar> c_;
};

using ZetaSource = std::function<HPReal(int)>;               // n -> zeta(n), n >= 2
using ZEvaluator = std::function<HPReal(const WordSum&)>;     // Z on h0

// rho(T^N) = sum_m N!/(N-m)! a_m T^{N-m}, A(u) = exp(sum_{n>=2} (-1)^n/n zeta(n) u^n).
TPolynomial<HPReal> rho_apply(const TPolynomial<HPReal>& p, const ZetaSource& zeta, int degree_bound);
// sum_i Z(w_i) T^i (Z* = Z o S for the star tags).
TPolynomial<HPReal> z_reg_polynomial(const WordSum& w, Product tag, const ZEvaluator& z);
std::string to_string(const TPolynomial<HPReal>& p, unsigned digits);

} // namespace mzv
