#pragma once

#include <mzv/error.hpp>
#include <mzv/hp.hpp>
#include <mzv/products.hpp>

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace mzv {

// Coefficient ring policies. `mul` is the ring product, `scale` multiplies by a
// rational, `inverse` inverts a unit.
template <class T>
struct FieldRing {
    static T zero() { return T(0); }
    static T one() { return T(1); }
    static T mul(const T& a, const T& b) { return a * b; }
    static T scale(const T& a, const Rational& q) { return a * T(to_hp(q)); }
    static T inverse(const T& a) { return T(1) / a; }
    static bool is_zero(const T& a) { return a == T(0); }
};

template <>
struct FieldRing<Rational> {
    static Rational zero() { return 0; }
    static Rational one() { return 1; }
    static Rational mul(const Rational& a, const Rational& b) { return a * b; }
    static Rational scale(const Rational& a, const Rational& q) { return a * q; }
    static Rational inverse(const Rational& a) { return 1 / a; }
    static bool is_zero(const Rational& a) { return a == 0; }
};

template <>
struct FieldRing<HPComplex> {
    static HPComplex zero() { return {}; }
    static HPComplex one() { return HPComplex(HPReal(1)); }
    static HPComplex mul(const HPComplex& a, const HPComplex& b) { return a * b; }
    static HPComplex scale(const HPComplex& a, const Rational& q) { return a * HPComplex(to_hp(q)); }
    static HPComplex inverse(const HPComplex& a) { return one() / a; }
    static bool is_zero(const HPComplex& a) { return a.re == 0 && a.im == 0; }
};

// Word sums under one of the commutative products.
template <Product P>
struct WordRing {
    static WordSum zero() { return {}; }
    static WordSum one() { return WordSum::one(); }
    static WordSum mul(const WordSum& a, const WordSum& b) { return product(P, a, b); }
    static WordSum scale(const WordSum& a, const Rational& q) { return a * q; }
    static WordSum inverse(const WordSum& a) {
        if (a.size() != 1 || !a.begin()->first.empty()) throw BadRange("only scalars are invertible in h");
        return WordSum::scalar(1 / a.begin()->second);
    }
    static bool is_zero(const WordSum& a) { return a.is_zero(); }
};

// Which monomials survive: weighted total degree <= max_degree and, when
// max_exponent is non-empty, each exponent within its bound. Both are closed
// under taking divisors, so products and exp/inverse are exact on what is kept.
struct Truncation {
    std::vector<int> weights;      // one positive weight per variable
    int max_degree = 0;
    std::vector<int> max_exponent; // optional box
};

// Truncated power series in commuting variables, stored as homogeneous
// components by weighted degree.
template <class T, class Ring = FieldRing<T>>
class PowerSeries {
public:
    using Monomial = std::vector<int>;
    using Component = std::map<Monomial, T>;

    explicit PowerSeries(Truncation tr) : tr_(std::move(tr)), comps_(tr_.max_degree + 1) {}

    static PowerSeries constant(const Truncation& tr, const T& c) {
        PowerSeries s(tr);
        s.add(Monomial(tr.weights.size(), 0), c);
        return s;
    }

    const Truncation& truncation() const { return tr_; }
    std::size_t variables() const { return tr_.weights.size(); }
    int max_degree() const { return tr_.max_degree; }

    int degree_of(const Monomial& m) const {
        int d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * tr_.weights[i];
        return d;
    }

    bool kept(const Monomial& m) const {
        if (degree_of(m) > tr_.max_degree) return false;
        if (!tr_.max_exponent.empty())
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] > tr_.max_exponent[i]) return false;
        return true;
    }

    void add(const Monomial& m, const T& c) {
        if (!kept(m) || Ring::is_zero(c)) return;
        auto& comp = comps_[degree_of(m)];
        auto it = comp.find(m);
        if (it == comp.end()) {
            comp.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (Ring::is_zero(it->second)) comp.erase(it);
        }
    }

    T coefficient(const Monomial& m) const {
        if (!kept(m)) return Ring::zero();
        const auto& comp = comps_[degree_of(m)];
        auto it = comp.find(m);
        return it == comp.end() ? Ring::zero() : it->second;
    }

    const Component& component(int d) const { return comps_.at(d); }

    PowerSeries& operator+=(const PowerSeries& o) {
        for (int d = 0; d <= tr_.max_degree; ++d)
            for (const auto& [m, c] : o.comps_[d]) add(m, c);
        return *this;
    }
    PowerSeries& operator-=(const PowerSeries& o) {
        for (int d = 0; d <= tr_.max_degree; ++d)
            for (const auto& [m, c] : o.comps_[d]) add(m, Ring::scale(c, Rational(-1)));
        return *this;
    }
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }

    PowerSeries scaled(const Rational& q) const {
        PowerSeries out(tr_);
        for (int d = 0; d <= tr_.max_degree; ++d)
            for (const auto& [m, c] : comps_[d]) out.add(m, Ring::scale(c, q));
        return out;
    }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries out(a.tr_);
        for (int d1 = 0; d1 <= a.tr_.max_degree; ++d1)
            for (int d2 = 0; d1 + d2 <= a.tr_.max_degree; ++d2) multiply_into(out, a.comps_[d1], b.comps_[d2]);
        return out;
    }

    // exp of a series with zero constant term: d F_d = sum_j j G_j F_{d-j}.
    PowerSeries exp() const {
        if (!comps_[0].empty()) throw BadRange("exp needs a zero constant term");
        PowerSeries f = constant(tr_, Ring::one());
        for (int d = 1; d <= tr_.max_degree; ++d) {
            PowerSeries acc(tr_);
            for (int j = 1; j <= d; ++j) {
                Component gj;
                for (const auto& [m, c] : comps_[j]) gj.emplace(m, Ring::scale(c, Rational(j)));
                multiply_into(acc, gj, f.comps_[d - j]);
            }
            for (const auto& [m, c] : acc.comps_[d]) f.add(m, Ring::scale(c, Rational(1, d)));
        }
        return f;
    }

    // Multiplicative inverse; the constant term must be a unit.
    PowerSeries inverse() const {
        const Monomial zero(variables(), 0);
        T c0 = coefficient(zero);
        T inv0 = Ring::inverse(c0);
        PowerSeries h = constant(tr_, inv0);
        for (int d = 1; d <= tr_.max_degree; ++d) {
            PowerSeries acc(tr_);
            for (int j = 1; j <= d; ++j) multiply_into(acc, comps_[j], h.comps_[d - j]);
            for (const auto& [m, c] : acc.comps_[d]) h.add(m, Ring::scale(Ring::mul(inv0, c), Rational(-1)));
        }
        return h;
    }

private:
    static void multiply_into(PowerSeries& out, const Component& a, const Component& b) {
        for (const auto& [ma, ca] : a)
            for (const auto& [mb, cb] : b) {
                Monomial m(ma.size());
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                if (out.kept(m)) out.add(m, Ring::mul(ca, cb));
            }
    }

    Truncation tr_;
    std::vector<Component> comps_;
};

inline Truncation univariate(int degree) { return Truncation{{1}, degree, {}}; }

} // namespace mzv
