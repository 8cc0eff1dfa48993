#include <mzv/error.hpp>
#include <mzv/maps.hpp>
#include <mzv/regularization.hpp>

#include <map>
#include <mutex>

namespace mzv {

namespace {

bool is_star(Product p) { return p == Product::StarShuffle || p == Product::StarStuffle; }

Product unstarred(Product p) {
    if (p == Product::StarShuffle) return Product::Shuffle;
    if (p == Product::StarStuffle) return Product::Stuffle;
    return p;
}

void require_h1(const WordSum& w) {
    for (const auto& [u, c] : w)
        if (!u.in_h1()) throw NotInH1(u.str());
}

void put(std::vector<WordSum>& coeffs, std::size_t i, const WordSum& v) {
    if (coeffs.size() <= i) coeffs.resize(i + 1);
    coeffs[i] += v;
}

void trim(std::vector<WordSum>& coeffs) {
    while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
    if (coeffs.empty()) coeffs.emplace_back();
}

// For u in h0, u (.) y^{(.) n} = n! y^n u + (terms with fewer leading y's), so
// terms can be peeled off from the highest leading-y count downwards.
RegDecomposition peel(const WordSum& w, Product tag) {
    RegDecomposition d;
    d.tag = tag;
    WordSum work = w;
    std::size_t top = 0;
    for (const auto& [u, c] : work) top = std::max(top, u.leading(Letter::Y));
    for (std::size_t n = top; n >= 1; --n) {
        std::vector<std::pair<Word, Rational>> level;
        for (const auto& [u, c] : work)
            if (u.leading(Letter::Y) == n) level.emplace_back(u, c);
        if (level.empty()) continue;
        Rational inv_fact = Rational(1) / Rational(factorial(static_cast<unsigned>(n)));
        WordSum part;
        for (const auto& [u, c] : level) part.add(u.suffix_from(n), c * inv_fact);
        put(d.coefficients, n, part);
        work -= product(tag, part, y_power(tag, static_cast<unsigned>(n)));
    }
    put(d.coefficients, 0, work);
    trim(d.coefficients);
    return d;
}

} // namespace

const WordSum& y_power(Product tag, unsigned n) {
    static std::mutex mutex;
    static std::map<std::pair<int, unsigned>, WordSum> cache;
    auto key = std::make_pair(static_cast<int>(tag), n);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    WordSum v = product_power(tag, WordSum(Word{Letter::Y}), n);
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(v)).first->second;
}

WordSum RegDecomposition::reconstruct() const {
    WordSum r;
    for (std::size_t i = 0; i < coefficients.size(); ++i) r += product(tag, coefficients[i], y_power(tag, static_cast<unsigned>(i)));
    return r;
}

std::string RegDecomposition::str() const {
    std::string sym(product_symbol(tag));
    std::string out = "w = ";
    bool first = true;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (coefficients[i].is_zero() && !(i == 0 && coefficients.size() == 1)) continue;
        if (!first) out += " + ";
        first = false;
        out += "(" + coefficients[i].str() + ")";
        if (i == 1) out += " " + sym + " y";
        if (i > 1) out += " " + sym + " y^" + std::to_string(i);
    }
    return out;
}

RegDecomposition reg_decompose(const WordSum& w, Product tag) {
    require_h1(w);
    if (!is_star(tag)) return peel(w, tag);
    RegDecomposition inner = peel(S_map(w), unstarred(tag));
    RegDecomposition d;
    d.tag = tag;
    for (const auto& c : inner.coefficients) d.coefficients.push_back(S_inv(c));
    return d;
}

WordSum reg(const WordSum& w, Product tag) { return reg_decompose(w, tag).coefficients.front(); }

RegDecomposition reg_decompose_by_elimination(const WordSum& w, Product tag) {
    require_h1(w);
    std::map<std::size_t, WordSum> by_weight;
    for (const auto& [u, c] : w) by_weight[u.size()].add(u, c);
    RegDecomposition d;
    d.tag = tag;
    d.coefficients.emplace_back();
    for (const auto& [k, part] : by_weight) {
        // columns (i ascending, canonical word order), rows = h1 words of weight k
        std::vector<std::pair<std::size_t, Word>> cols;
        std::vector<WordSum> images;
        for (std::size_t i = 0; i <= k; ++i)
            for (const Word& w0 : enumerate_words(k - i, Space::H0)) {
                cols.emplace_back(i, w0);
                images.push_back(product(tag, WordSum(w0), y_power(tag, static_cast<unsigned>(i))));
            }
        std::vector<Word> rows = enumerate_words(k, Space::H1);
        std::map<Word, std::size_t> row_of;
        for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
        std::size_t nr = rows.size(), nc = cols.size();
        std::vector<std::vector<Rational>> m(nr, std::vector<Rational>(nc + 1));
        for (std::size_t j = 0; j < nc; ++j)
            for (const auto& [u, c] : images[j]) m[row_of.at(u)][j] = c;
        for (const auto& [u, c] : part) m[row_of.at(u)][nc] = c;
        // Gauss-Jordan, pivot = first nonzero entry in the column
        std::vector<std::size_t> pivot_row(nc, nr);
        std::size_t r = 0;
        for (std::size_t j = 0; j < nc && r < nr; ++j) {
            std::size_t p = r;
            while (p < nr && m[p][j] == 0) ++p;
            if (p == nr) continue;
            std::swap(m[p], m[r]);
            Rational inv = 1 / m[r][j];
            for (auto& e : m[r]) e *= inv;
            for (std::size_t q = 0; q < nr; ++q) {
                if (q == r || m[q][j] == 0) continue;
                Rational f = m[q][j];
                for (std::size_t t = j; t <= nc; ++t) m[q][t] -= f * m[r][t];
            }
            pivot_row[j] = r++;
        }
        for (std::size_t j = 0; j < nc; ++j) {
            if (pivot_row[j] == nr) continue;
            const Rational& v = m[pivot_row[j]][nc];
            if (v == 0) continue;
            auto [i, w0] = cols[j];
            put(d.coefficients, i, WordSum(w0, v));
        }
    }
    trim(d.coefficients);
    return d;
}

TPolynomial<HPReal> rho_apply(const TPolynomial<HPReal>& p, const ZetaSource& zeta, int degree_bound) {
    int N = p.degree();
    if (N < 0) return {};
    if (N > degree_bound) throw PrecisionExhausted("rho needs zeta values up to " + std::to_string(N));
    // a_m via F' = G' F with G = sum_{n>=2} (-1)^n/n zeta(n) u^n
    std::vector<HPReal> g(static_cast<std::size_t>(N) + 1, HPReal(0));
    for (int n = 2; n <= N; ++n) g[static_cast<std::size_t>(n)] = (n % 2 ? -1 : 1) * zeta(n) / n;
    std::vector<HPReal> a(static_cast<std::size_t>(N) + 1, HPReal(0));
    a[0] = 1;
    for (int m = 1; m <= N; ++m) {
        HPReal s = 0;
        for (int j = 1; j <= m; ++j) s += j * g[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(m - j)];
        a[static_cast<std::size_t>(m)] = s / m;
    }
    std::vector<HPReal> out(static_cast<std::size_t>(N) + 1, HPReal(0));
    for (int n = 0; n <= N; ++n) {
        const HPReal& c = p[static_cast<std::size_t>(n)];
        if (c == 0) continue;
        HPReal falling = 1; // n!/(n-m)!
        for (int m = 0; m <= n; ++m) {
            out[static_cast<std::size_t>(n - m)] += c * falling * a[static_cast<std::size_t>(m)];
            falling *= (n - m);
        }
    }
    return TPolynomial<HPReal>(std::move(out));
}

TPolynomial<HPReal> z_reg_polynomial(const WordSum& w, Product tag, const ZEvaluator& z) {
    RegDecomposition d = reg_decompose(w, tag);
    std::vector<HPReal> c;
    for (const auto& wi : d.coefficients) c.push_back(z(is_star(tag) ? S_map(wi) : wi));
    return TPolynomial<HPReal>(std::move(c));
}

std::string to_string(const TPolynomial<HPReal>& p, unsigned digits) {
    if (p.size() == 0) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += " + ";
        out += to_decimal(p[i], digits);
        if (i == 1) out += " T";
        if (i > 1) out += " T^" + std::to_string(i);
    }
    return out;
}

} // namespace mzv
