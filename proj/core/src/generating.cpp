#include <mzv/bernoulli.hpp>
#include <mzv/error.hpp>
#include <mzv/generating.hpp>
#include <mzv/maps.hpp>
#include <mzv/mzv_eval.hpp>
#include <mzv/power_series.hpp>

#include <sstream>

namespace mzv {

namespace {

using RealSeries = PowerSeries<HPReal>;
using ComplexSeries = PowerSeries<HPComplex>;
using Mono = std::vector<int>;

constexpr std::size_t kMaxMismatches = 8;

long param(const Params& p, const char* key) {
    auto it = p.find(key);
    if (it == p.end()) throw BadRange(std::string("missing parameter ") + key);
    return it->second;
}

std::string mono_str(const Mono& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << "]";
    return os.str();
}

// Running comparison of numeric coefficients.
struct Compare {
    GeneratingReport& r;
    unsigned digits;

    void operator()(const std::string& label, const HPReal& lhs, const HPReal& rhs) {
        HPReal d = abs_diff(lhs, rhs);
        ++r.compared;
        if (d > r.max_deviation) r.max_deviation = d;
        if (d > r.tolerance && r.mismatches.size() < kMaxMismatches)
            r.mismatches.push_back(label + ": " + to_decimal(lhs, 20) + " vs " + to_decimal(rhs, 20));
    }
    void operator()(const std::string& label, const HPComplex& lhs, const HPComplex& rhs) {
        HPReal d = (lhs - rhs).norm();
        ++r.compared;
        if (d > r.max_deviation) r.max_deviation = d;
        if (d > r.tolerance && r.mismatches.size() < kMaxMismatches)
            r.mismatches.push_back(label + ": " + to_decimal(lhs.re, 20) + "+" + to_decimal(lhs.im, 20) + "i vs " +
                                   to_decimal(rhs.re, 20) + "+" + to_decimal(rhs.im, 20) + "i");
    }
};

template <class Series>
void compare_series(Compare& cmp, const std::string& tag, const Series& a, const Series& b) {
    for (int d = 0; d <= a.max_degree(); ++d) {
        std::map<Mono, bool> seen;
        for (const auto& [m, c] : a.component(d)) seen[m] = true;
        for (const auto& [m, c] : b.component(d)) seen[m] = true;
        for (const auto& [m, unused] : seen) cmp(tag + mono_str(m), a.coefficient(m), b.coefficient(m));
    }
}

HPReal zeta_repeat(int k, int n, unsigned digits, bool star) {
    Index idx(n, k);
    if (n == 0) return HPReal(1);
    return star ? zeta_star(idx, digits) : zeta(idx, digits);
}

WordSum z_power(int k, int n) {
    Word w;
    for (int i = 0; i < n; ++i) w = w + Word::z(k);
    return WordSum(w);
}

using StuffleSeries = PowerSeries<WordSum, WordRing<Product::Stuffle>>;

void compare_exact(GeneratingReport& r, const StuffleSeries& a, const StuffleSeries& b) {
    r.exact = true;
    for (int d = 0; d <= a.max_degree(); ++d) {
        Mono m{d};
        ++r.compared;
        WordSum diff = a.coefficient(m) - b.coefficient(m);
        if (!diff.is_zero() && r.mismatches.size() < kMaxMismatches)
            r.mismatches.push_back("t^" + std::to_string(d) + ": difference " + diff.str());
    }
}

void exp_ast(GeneratingReport& r, int k, int D) {
    Truncation tr = univariate(D);
    StuffleSeries g(tr), rhs(tr);
    for (int n = 1; n <= D; ++n) g.add({n}, WordSum(Word::z(n * k), Rational(-1, n)));
    for (int n = 0; n <= D; ++n) rhs.add({n}, z_power(k, n) * Rational(n % 2 ? -1 : 1));
    compare_exact(r, g.exp(), rhs);
}

void k_ast_sk(GeneratingReport& r, int k, int D) {
    Truncation tr = univariate(D);
    StuffleSeries a(tr), b(tr);
    for (int n = 0; n <= D; ++n) {
        a.add({n}, z_power(k, n) * Rational(n % 2 ? -1 : 1));
        b.add({n}, S_map(z_power(k, n)));
    }
    compare_exact(r, a * b, StuffleSeries::constant(tr, WordSum::one()));
}

void kn_nk(Compare& cmp, int k, int D, unsigned digits) {
    Truncation tr = univariate(D);
    RealSeries lhs(tr), g(tr);
    for (int n = 0; n <= D; ++n) lhs.add({n}, zeta_repeat(k, n, digits, false));
    for (int n = 1; n <= D; ++n) g.add({n}, zeta_single(n * k, digits) * (n % 2 ? 1 : -1) / n);
    compare_series(cmp, "t", lhs, g.exp());
}

void mzv_mzsv_inverse(Compare& cmp, int k, int D, unsigned digits) {
    Truncation tr = univariate(D);
    RealSeries a(tr), b(tr);
    for (int n = 0; n <= D; ++n) {
        a.add({n}, zeta_repeat(k, n, digits, false) * (n % 2 ? -1 : 1));
        b.add({n}, zeta_repeat(k, n, digits, true));
    }
    compare_series(cmp, "t", a * b, RealSeries::constant(tr, HPReal(1)));
}

void reflection(Compare& cmp, int D, unsigned digits) {
    Truncation tr = univariate(D);
    RealSeries gp(tr), gm(tr);
    for (int n = 2; n <= D; ++n) {
        HPReal z = zeta_single(n, digits) / n;
        gp.add({n}, n % 2 ? HPReal(-z) : z);
        gm.add({n}, z);
    }
    RealSeries prod = gp.exp() * gm.exp();
    RealSeries ext(tr), inv_ext(tr), star2(tr);
    for (int n = 0; 2 * n <= D; ++n) {
        // B_{2n} (2^{1-2n} - 1) lambda^{2n} / (2n)!
        ext.add({2 * n}, to_hp(beta_coefficient(n) * lambda_power_coefficient(n)) * pi_power(2 * n));
        // lambda^{2n} / (2^{2n} (2n+1)!)
        Rational q = lambda_power_coefficient(n) / (pow(Rational(4), n) * Rational(factorial(2 * n + 1)));
        inv_ext.add({2 * n}, to_hp(q) * pi_power(2 * n));
        star2.add({2 * n}, zeta_repeat(2, n, digits, true));
    }
    compare_series(cmp, "gamma s", prod, ext);
    compare_series(cmp, "inverse s", prod.inverse(), inv_ext);
    compare_series(cmp, "star s", prod, star2);
}

void gen_2k(Compare& cmp, int k, int D, unsigned digits) {
    Truncation tr = univariate(D);
    const HPReal lam2 = lambda_squared();
    ComplexSeries prod = ComplexSeries::constant(tr, HPComplex(HPReal(1)));
    for (int j = 0; j < k; ++j) {
        // (e^{s/2} - e^{-s/2}) / s at s = lambda rho^j t, only even powers of s occur
        ComplexSeries f(tr);
        for (int n = 0; 2 * n <= D; ++n) {
            HPComplex rho = HPComplex::polar_unit(hp_pi() * HPReal(2 * j * n) / HPReal(k));
            HPReal mag = boost::multiprecision::pow(lam2 / 4, n) / to_hp(Integer(factorial(2 * n + 1)));
            f.add({2 * n}, HPComplex(mag) * rho);
        }
        prod = prod * f;
    }
    ComplexSeries lhs(tr), star(tr);
    for (int n = 0; 2 * n * k <= D; ++n) {
        HPReal z = zeta_repeat(2 * k, n, digits, false);
        lhs.add({2 * n * k}, HPComplex(n % 2 ? HPReal(-z) : z));
        star.add({2 * n * k}, HPComplex(zeta_repeat(2 * k, n, digits, true)));
    }
    compare_series(cmp, "z t", lhs, prod);
    compare_series(cmp, "z* t", star, prod.inverse());
}

void ohno_zagier(Compare& cmp, int D, unsigned digits) {
    // weights u:1 v:1 t:2; the coefficient of u^i v^j t^l is X0(i+j+2l+2, j+l+1, l+1)
    Truncation big{{1, 1, 2}, D + 2, {}};
    RealSeries u(big), v(big), t(big);
    u.add({1, 0, 0}, HPReal(1));
    v.add({0, 1, 0}, HPReal(1));
    t.add({0, 0, 1}, HPReal(1));
    RealSeries s1 = u + v;
    RealSeries pprev = RealSeries::constant(big, HPReal(2)), p = s1;
    RealSeries upow = u, vpow = v, e(big);
    for (int n = 2; n <= D + 2; ++n) {
        RealSeries next = s1 * p - t * pprev;
        pprev = p;
        p = next;
        upow = upow * u;
        vpow = vpow * v;
        RealSeries term = upow + vpow - p;
        e += term.scaled(1) * RealSeries::constant(big, zeta_single(n, digits) / n);
    }
    RealSeries b = RealSeries::constant(big, HPReal(1)) - e.exp();
    for (int deg = 0; deg <= D; ++deg)
        for (int l = 0; 2 * l <= deg; ++l)
            for (int i = 0; i + 2 * l <= deg; ++i) {
                const int j = deg - 2 * l - i;
                HPReal a = 0;
                for (int r = 0; r <= std::min(i, j); ++r) a -= b.coefficient({i - r, j - r, l + 1 + r});
                const int k = i + j + 2 * l + 2, n = j + l + 1, s = l + 1;
                cmp("X0(" + std::to_string(k) + "," + std::to_string(n) + "," + std::to_string(s) + ")",
                    x0_sum(k, n, s, digits), a);
            }
}

void aomoto(Compare& cmp, int D, unsigned digits) {
    Truncation tr{{1, 1}, D, {}};
    RealSeries u(tr), v(tr), e(tr);
    u.add({1, 0}, HPReal(1));
    v.add({0, 1}, HPReal(1));
    RealSeries s = u + v, upow = u, vpow = v, spow = s;
    for (int n = 2; n <= D; ++n) {
        upow = upow * u;
        vpow = vpow * v;
        spow = spow * s;
        e += (upow + vpow - spow) * RealSeries::constant(tr, zeta_single(n, digits) / n);
    }
    RealSeries rhs = RealSeries::constant(tr, HPReal(1)) - e.exp();
    RealSeries lhs(tr);
    for (int m = 1; m < D; ++m)
        for (int n = 1; m + n <= D; ++n) {
            Index idx{m + 1};
            for (int i = 1; i < n; ++i) idx.push_back(1);
            lhs.add({m, n}, zeta(idx, digits));
        }
    compare_series(cmp, "u^m v^n", lhs, rhs);
}

void le_murakami_split(Compare& cmp, int D, unsigned digits) {
    for (int w = 2; w <= D; ++w)
        for (int s = 1; 2 * s <= w; ++s) {
            HPReal sum = 0;
            for (int n = s; n <= w - s; ++n)
                for (const Index& idx : enumerate_indices(w, n))
                    if (index_height(idx) == s) sum += (n % 2 ? -zeta(idx, digits) : zeta(idx, digits));
            HPReal expected = 0;
            if (w % 2 == 0) expected = closed_form("le_murakami", {{"k", w / 2}, {"s", s}}, digits).value;
            cmp("weight " + std::to_string(w) + " height " + std::to_string(s), sum, expected);
        }
}

void g_over_f(Compare& cmp, int D, unsigned digits) {
    Truncation tr = univariate(D);
    RealSeries f(tr), g(tr), rhs(tr);
    for (int n = 0; n <= D; ++n) {
        Rational fq = Rational(n % 2 ? -1 : 1) / Rational(factorial(2 * n + 1));
        Rational gq = Rational(n % 2 ? -2 : 2) / Rational(factorial(2 * n));
        f.add({n}, to_hp(fq) * pi_power(2 * n));
        g.add({n}, to_hp(gq) * pi_power(2 * n));
        rhs.add({n}, -4 * zeta_single(2 * n, digits));
    }
    compare_series(cmp, "t", g * f.inverse(), rhs);
}

void bernoulli_corollary(GeneratingReport& r, int D) {
    r.exact = true;
    auto fact = [](long n) { return Rational(factorial(static_cast<unsigned>(n))); };
    for (int n = 0; n <= D; ++n) {
        Rational lhs = 0;
        for (const auto& c : weak_compositions(n, 3)) {
            const long i = c[0], j = c[1], k = c[2];
            lhs += (pow(Rational(2), 1 - 2 * j) - 1) * (pow(Rational(2), 1 - 2 * k) - 1) * bernoulli(2 * j) *
                   bernoulli(2 * k) / (pow(Rational(4), i) * fact(2 * i + 1) * fact(2 * j) * fact(2 * k));
        }
        Rational rhs = beta_coefficient(n);
        ++r.compared;
        if (lhs != rhs && r.mismatches.size() < kMaxMismatches)
            r.mismatches.push_back("n=" + std::to_string(n) + ": " + to_string(lhs) + " vs " + to_string(rhs));
    }
}

} // namespace

std::vector<std::string_view> generating_names() {
    return {"exp_ast", "k_ast_sk", "kn_nk", "mzv_mzsv_inverse", "reflection", "gen_2k",
            "ohno_zagier", "aomoto", "le_murakami_split", "g_over_f", "bernoulli_corollary"};
}

GeneratingReport generating_check(std::string_view name, const Params& params, int truncation, unsigned digits,
                                  std::optional<HPReal> tolerance) {
    if (truncation < 0) throw BadRange("truncation must be non-negative");
    PrecisionGuard g(working_digits(digits));
    GeneratingReport r;
    r.name = std::string(name);
    r.truncation = truncation;
    r.digits = digits;
    r.tolerance = tolerance ? *tolerance : tolerance_for(digits);
    Compare cmp{r, digits};

    auto k_param = [&](long lo) {
        long k = param(params, "k");
        if (k < lo) throw BadRange(r.name + " needs k >= " + std::to_string(lo));
        return static_cast<int>(k);
    };

    if (name == "exp_ast") exp_ast(r, k_param(1), truncation);
    else if (name == "k_ast_sk") k_ast_sk(r, k_param(1), truncation);
    else if (name == "kn_nk") kn_nk(cmp, k_param(2), truncation, digits);
    else if (name == "mzv_mzsv_inverse") mzv_mzsv_inverse(cmp, k_param(2), truncation, digits);
    else if (name == "reflection") reflection(cmp, truncation, digits);
    else if (name == "gen_2k") gen_2k(cmp, k_param(1), truncation, digits);
    else if (name == "ohno_zagier") ohno_zagier(cmp, truncation, digits);
    else if (name == "aomoto") aomoto(cmp, truncation, digits);
    else if (name == "le_murakami_split") le_murakami_split(cmp, truncation, digits);
    else if (name == "g_over_f") g_over_f(cmp, truncation, digits);
    else if (name == "bernoulli_corollary") bernoulli_corollary(r, truncation);
    else throw BadRange("unknown generating check " + r.name);

    r.passed = r.mismatches.empty() && r.compared > 0;
    return r;
}

} // namespace mzv
