#include <mzv/bernoulli.hpp>
#include <mzv/closed_forms.hpp>
#include <mzv/config.hpp>
#include <mzv/error.hpp>
#include <mzv/word.hpp>

#include <functional>
#include <sstream>

namespace mzv {

namespace {

long need(const Params& p, const char* key) {
    auto it = p.find(key);
    if (it == p.end()) throw BadRange(std::string("missing parameter ") + key);
    return it->second;
}

long get_or(const Params& p, const char* key, long fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw BadRange(what);
}

Rational fact(long n) { return Rational(factorial(static_cast<unsigned>(n))); }
Rational binom(long n, long k) { return Rational(binomial(n, k)); }
Rational pow2(long e) { return pow(Rational(2), e); }
Rational B(long n) { return bernoulli(static_cast<unsigned>(n)); }

ClosedForm exact(std::string name, Rational q, int w) {
    ClosedForm cf;
    cf.name = std::move(name);
    q.canonicalize();
    cf.value = to_hp(q) * pi_power(w);
    cf.coefficient = std::move(q);
    cf.pi_power = w;
    return cf;
}

// Calls f on every weak composition of total into parts.
void for_each_weak(long total, long parts, const std::function<void(const std::vector<int>&)>& f) {
    for (const auto& c : weak_compositions(static_cast<int>(total), static_cast<int>(parts))) f(c);
}

// rho_m^e with rho_m = e^{pi i / m}
HPComplex rho_power(long m, long e) {
    return HPComplex::polar_unit(hp_pi() * HPReal(e) / HPReal(m));
}

// Turns a complex coefficient of pi^{2w} into a ClosedForm, reconstructing the rational.
ClosedForm from_complex(std::string name, const HPComplex& c, int w, unsigned digits) {
    ClosedForm cf;
    cf.name = std::move(name);
    cf.complex_route = true;
    cf.imaginary = c.im;
    cf.pi_power = w;
    cf.value = c.re * pi_power(w);
    Rational q;
    if (reconstruct_rational(c.re, config().denominator_bound, tolerance_for(digits), q)) {
        cf.coefficient = q;
        cf.reconstructed = true;
    }
    return cf;
}

// Sum over n_0+..+n_{k-1} = N of prod_j term(n_j) * rho_k^{sum 2 j n_j}.
HPComplex rho_sum(long k, long N, const std::function<Rational(long)>& term) {
    HPComplex acc;
    for_each_weak(N, k, [&](const std::vector<int>& ns) {
        Rational coeff = 1;
        long e = 0;
        for (long j = 0; j < k; ++j) {
            coeff *= term(ns[j]);
            e += 2 * j * ns[j];
        }
        if (coeff != 0) acc += HPComplex(to_hp(coeff)) * rho_power(k, e % (2 * k));
    });
    return acc;
}

Rational z2_term(long n) { return 1 / fact(2 * n + 1); }
Rational zs2_term(long n) { return B(2 * n) * (2 - pow(Rational(4), n)) / fact(2 * n); }

Rational tmn_coefficient(long m, long n) {
    // 2 C(m+1, 2n+1) / (2m+2)!
    return 2 * binom(m + 1, 2 * n + 1) / fact(2 * m + 2);
}

Rational zs_tmn_coefficient(long m, long n) {
    Rational sum = 0;
    for (long j = 0; 2 * j <= 2 * n; ++j)
        for (long k = 0; 2 * j + k <= 2 * n; ++k) {
            const long u = 2 * n - 2 * j - k;
            for (long i = 2 * j; i + k + u <= m; ++i)
                for (long l = 0; i + k + l + u <= m; ++l) {
                    const long v = m - i - k - l - u;
                    Rational t = binom(k + l, k) * binom(u + v, u) * binom(i + 1, 2 * j + 1) *
                                 beta_coefficient(k + l) * beta_coefficient(u + v) /
                                 (pow2(2 * i - 1) * fact(2 * i + 2));
                    sum += (k % 2 ? -t : t);
                }
        }
    return sum * lambda_power_coefficient(m);
}

} // namespace

Rational zeta2n_coefficient(long n) {
    // -lambda^{2n} B_{2n} / (2 (2n)!)
    return -lambda_power_coefficient(n) * B(2 * n) / (2 * fact(2 * n));
}

Rational lambda_power_coefficient(long n) { return pow(Rational(-4), n); }

Rational beta_coefficient(long k) { return (pow2(1 - 2 * k) - 1) * B(2 * k) / fact(2 * k); }

Rational ev2k_recursive(long k, long n, bool star) {
    std::vector<Rational> c{Rational(1)};
    for (long N = 1; N <= n; ++N) {
        Rational acc = 0;
        for (long m = 1; m <= N; ++m) {
            Rational t = binom(2 * N * k, 2 * m * k) * B(2 * m * k) * c[N - m];
            acc += (!star && m % 2) ? -t : t;
        }
        c.push_back((star ? -acc : acc) / (2 * N));
    }
    return c[n];
}

std::string ClosedForm::str(unsigned digits) const {
    std::ostringstream os;
    if (coefficient) {
        os << to_string(*coefficient);
        if (pi_power != 0) os << " * pi^" << pi_power;
        os << " = ";
    }
    os << to_decimal(value, digits);
    return os.str();
}

std::vector<std::string_view> closed_form_names() {
    return {"zeta2n", "z2_n", "zs2_n", "z2k_n", "zs2k_n", "z2k_n_recursive", "zs2k_n_recursive",
            "z4_n", "z4_n_sum", "zs4_n_sum", "z31_n", "tmn", "zs_tmn", "t_2n1_n", "zs_t_2n1_n",
            "le_murakami", "res_hoffman", "res_2a", "res_two_forms"};
}

ClosedForm closed_form(std::string_view name, const Params& p, unsigned digits) {
    PrecisionGuard g(working_digits(digits));
    const std::string nm(name);

    if (name == "zeta2n") {
        long n = need(p, "n");
        require(n >= 0, "zeta2n needs n >= 0");
        return exact(nm, zeta2n_coefficient(n), static_cast<int>(2 * n));
    }
    if (name == "z2_n") {
        long n = need(p, "n");
        require(n >= 0, "z2_n needs n >= 0");
        // (-1)^n lambda^{2n} / (4^n (2n+1)!)
        Rational q = lambda_power_coefficient(n) / (pow(Rational(4), n) * fact(2 * n + 1));
        return exact(nm, n % 2 ? -q : q, static_cast<int>(2 * n));
    }
    if (name == "zs2_n") {
        long n = need(p, "n");
        require(n >= 0, "zs2_n needs n >= 0");
        if (n == 0) return exact(nm, 1, 0);
        return exact(nm, (pow2(1 - 2 * n) - 1) * lambda_power_coefficient(n) * B(2 * n) / fact(2 * n),
                     static_cast<int>(2 * n));
    }
    if (name == "z2k_n" || name == "zs2k_n") {
        long k = need(p, "k"), n = need(p, "n");
        require(k >= 1 && n >= 0, nm + " needs k >= 1, n >= 0");
        const bool star = name == "zs2k_n";
        HPComplex c = rho_sum(k, n * k, star ? zs2_term : z2_term);
        // lambda^{2nk} / 4^{nk} = (-1)^{nk} pi^{2nk}
        bool neg = (n * k) % 2 == 1;
        if (!star && n % 2) neg = !neg;
        if (neg) c = -c;
        return from_complex(nm, c, static_cast<int>(2 * n * k), digits);
    }
    if (name == "z2k_n_recursive" || name == "zs2k_n_recursive") {
        long k = need(p, "k"), n = need(p, "n");
        require(k >= 1 && n >= 0, nm + " needs k >= 1, n >= 0");
        Rational c = ev2k_recursive(k, n, name == "zs2k_n_recursive");
        return exact(nm, c * lambda_power_coefficient(n * k) / fact(2 * n * k), static_cast<int>(2 * n * k));
    }
    if (name == "z4_n") {
        long n = need(p, "n");
        require(n >= 0, "z4_n needs n >= 0");
        // 2 lambda^{4n} / (4^n (4n+2)!)
        return exact(nm, 2 * lambda_power_coefficient(2 * n) / (pow(Rational(4), n) * fact(4 * n + 2)),
                     static_cast<int>(4 * n));
    }
    if (name == "z4_n_sum" || name == "zs4_n_sum") {
        long n = need(p, "n");
        require(n >= 0, nm + " needs n >= 0");
        Rational sum = 0;
        for (long i = 0; i <= 2 * n; ++i) {
            Rational t;
            if (name == "z4_n_sum")
                t = Rational((n + i) % 2 ? -1 : 1) / (fact(2 * i + 1) * fact(4 * n - 2 * i + 1));
            else
                t = Rational(i % 2 ? -1 : 1) * (2 - pow(Rational(4), i)) * (2 - pow(Rational(4), 2 * n - i)) *
                    B(2 * i) * B(4 * n - 2 * i) / (fact(2 * i) * fact(4 * n - 2 * i));
            sum += t;
        }
        return exact(nm, sum * lambda_power_coefficient(2 * n) / pow(Rational(4), 2 * n), static_cast<int>(4 * n));
    }
    if (name == "tmn" || name == "z31_n") {
        long m, n;
        if (name == "z31_n") {
            n = need(p, "n");
            m = 2 * n;
        } else {
            m = need(p, "m");
            n = need(p, "n");
        }
        require(n >= 0 && m >= 2 * n, nm + " needs m >= 2n >= 0");
        return exact(nm, tmn_coefficient(m, n), static_cast<int>(2 * m));
    }
    if (name == "t_2n1_n") {
        long n = need(p, "n");
        require(n >= 0, "t_2n1_n needs n >= 0");
        // -lambda^{4n+2} / (4^{2n+1} (4n+3)!)
        return exact(nm, -lambda_power_coefficient(2 * n + 1) / (pow(Rational(4), 2 * n + 1) * fact(4 * n + 3)),
                     static_cast<int>(4 * n + 2));
    }
    if (name == "zs_tmn") {
        long m = need(p, "m"), n = need(p, "n");
        require(n >= 0 && m >= 2 * n, "zs_tmn needs m >= 2n >= 0");
        return exact(nm, zs_tmn_coefficient(m, n), static_cast<int>(2 * m));
    }
    if (name == "zs_t_2n1_n") {
        long n = need(p, "n");
        require(n >= 0, "zs_t_2n1_n needs n >= 0");
        Rational sum = 0;
        for (long j = 0; j <= n; ++j) {
            Rational a = 0, b = 0;
            for (long k = 0; k <= 2 * (n - j); ++k) {
                Rational t = beta_coefficient(k) * beta_coefficient(2 * (n - j) - k);
                a += k % 2 ? -t : t;
            }
            for (long k = 1; k <= 2 * (n - j) + 1; ++k) {
                Rational t = k * beta_coefficient(k) * beta_coefficient(2 * (n - j) + 1 - k);
                b += k % 2 ? -t : t;
            }
            sum += a / (pow(Rational(4), 2 * j + 1) * fact(4 * j + 3)) - b / (pow(Rational(4), 2 * j - 1) * fact(4 * j + 2));
        }
        return exact(nm, sum * lambda_power_coefficient(2 * n + 1), static_cast<int>(4 * n + 2));
    }
    if (name == "le_murakami") {
        long k = need(p, "k"), s = need(p, "s");
        require(k >= s && s >= 1, "le_murakami needs k >= s >= 1");
        Rational sum = 0;
        for (long n = 0; n <= k - s; ++n) sum += binom(2 * k + 1, 2 * n) * (2 - pow2(2 * n)) * B(2 * n);
        return exact(nm, sum * lambda_power_coefficient(k) / (pow2(2 * k) * fact(2 * k + 1)), static_cast<int>(2 * k));
    }
    if (name == "res_hoffman") {
        long k = need(p, "k"), n = need(p, "n");
        const bool star = get_or(p, "star", 0) != 0;
        require(k >= n && n >= 1, "res_hoffman needs k >= n >= 1");
        Rational sum = 0;
        if (!star) {
            for (long j = 0; j <= k - n; ++j)
                sum += binom(k - j, n) * binom(2 * k + 1, 2 * j) * (2 - pow(Rational(4), j)) * B(2 * j);
            if (n % 2) sum = -sum;
        } else {
            for (long j = n; j <= k; ++j)
                sum += binom(j, n) * binom(2 * k + 1, 2 * j) * (2 - pow(Rational(4), j)) * B(2 * j);
        }
        return exact(nm, sum * lambda_power_coefficient(k) / (pow(Rational(4), k) * fact(2 * k + 1)),
                     static_cast<int>(2 * k));
    }
    if (name == "res_2a") {
        long m = need(p, "m"), k = need(p, "k"), n = need(p, "n");
        const bool star = get_or(p, "star", 0) != 0;
        require(m >= 1 && k >= n && n >= 1, "res_2a needs m >= 1, k >= n >= 1");
        HPComplex acc;
        const long jlo = star ? n : 0, jhi = star ? k : k - n;
        for (long j = jlo; j <= jhi; ++j) {
            Rational outer = star ? binom(j, n) : binom(k - j, n);
            if (outer == 0) continue;
            // prod_i (2-4^{n_i}) B_{2n_i} / ((2n_i)! (2l_i+1)!) rho^{2i(n_i+l_i)}:
            // the n- and l-sums factor into two rho sums.
            HPComplex a = rho_sum(m, m * j, zs2_term);
            HPComplex b = rho_sum(m, m * (k - j), z2_term);
            acc += HPComplex(to_hp(outer)) * a * b;
        }
        if (!star && n % 2) acc = -acc;
        if ((k * m) % 2) acc = -acc; // lambda^{2km} / 4^{km} = (-1)^{km} pi^{2km}
        return from_complex(nm, acc, static_cast<int>(2 * k * m), digits);
    }
    if (name == "res_two_forms") {
        long k = need(p, "k"), n = need(p, "n"), form = get_or(p, "form", 1);
        require(k >= n && n >= 1 && (form == 1 || form == 2), "res_two_forms needs k >= n >= 1, form 1 or 2");
        Rational sum = 0;
        if (form == 1) {
            for (long j = 0; j <= (n - 1) / 2; ++j)
                sum += lambda_power_coefficient(j) * binom(2 * n - 2 * j - 1, n) * zeta2n_coefficient(k - j) /
                       (pow2(2 * n - 2) * fact(2 * j + 1));
        } else {
            sum = binom(2 * n - 1, n) * zeta2n_coefficient(k) / pow2(2 * n - 2);
            for (long j = 1; j <= (n - 1) / 2; ++j)
                sum -= binom(2 * n - 2 * j - 1, n) * zeta2n_coefficient(j) * zeta2n_coefficient(k - j) /
                       (pow2(2 * n - 3) * (2 * j + 1) * B(2 * j));
        }
        return exact(nm, sum, static_cast<int>(2 * k));
    }
    throw BadRange("unknown closed form " + nm);
}

} // namespace mzv
