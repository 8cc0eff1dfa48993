#include <mzv/bernoulli.hpp>
#include <mzv/config.hpp>
#include <mzv/error.hpp>
#include <mzv/maps.hpp>
#include <mzv/mzv_eval.hpp>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

namespace mzv {

namespace {

void check_digits(unsigned digits) {
    if (digits == 0 || digits > config().digits_cap)
        throw PrecisionExhausted(std::to_string(digits) + " digits requested, cap is " +
                                 std::to_string(config().digits_cap));
}

// Powers c^m and 1/m^k for one (c, precision) pair, m = 1..terms.
class SeriesTable {
public:
    SeriesTable(const Rational& c, unsigned wd, std::size_t terms) : wd_(wd), terms_(terms) {
        PrecisionGuard g(wd_);
        cpow_.resize(terms_ + 1);
        inv_.resize(terms_ + 1);
        HPReal cc = to_hp(c);
        cpow_[0] = 1;
        for (std::size_t m = 1; m <= terms_; ++m) {
            cpow_[m] = cpow_[m - 1] * cc;
            inv_[m] = HPReal(1) / HPReal(static_cast<unsigned long>(m));
        }
    }

    std::size_t terms() const { return terms_; }
    const HPReal& cpow(std::size_t m) const { return cpow_[m]; }

    // 1/m^k for m = 0..terms (entry 0 unused)
    const std::vector<HPReal>& inverse_powers(int k) const {
        std::lock_guard lock(mu_);
        PrecisionGuard g(wd_);
        return inverse_powers_locked(k);
    }

private:
    const std::vector<HPReal>& inverse_powers_locked(int k) const {
        if (rows_.size() <= static_cast<std::size_t>(k)) rows_.resize(k + 1);
        if (!rows_[k]) {
            auto row = std::make_unique<std::vector<HPReal>>(terms_ + 1);
            if (k == 1) {
                *row = inv_;
            } else {
                const auto& prev = inverse_powers_locked(k - 1);
                for (std::size_t m = 1; m <= terms_; ++m) (*row)[m] = prev[m] * inv_[m];
            }
            rows_[k] = std::move(row);
        }
        return *rows_[k];
    }

    unsigned wd_;
    std::size_t terms_;
    std::vector<HPReal> cpow_;
    std::vector<HPReal> inv_;
    mutable std::mutex mu_;
    mutable std::vector<std::unique_ptr<std::vector<HPReal>>> rows_;
};

// Terms needed so that the tail of Li_k(c) is below 10^-wd: geometric decay
// c^m times at most (1 + ln m)^{depth-1} from the inner harmonic-type sums.
std::size_t terms_for(const Rational& c, unsigned wd, std::size_t max_depth) {
    const double ratio = -std::log2(c.get_d());
    const double bits = wd * std::log2(10.0) + 8;
    return static_cast<std::size_t>(std::ceil((bits + 3.0 * static_cast<double>(max_depth)) / ratio)) + 16;
}

// Tables are sized for depth <= 64, the longest word.
const SeriesTable& series_table(const Rational& c, unsigned wd) {
    static std::mutex mu;
    static std::map<std::pair<std::string, unsigned>, std::unique_ptr<SeriesTable>> tables;
    std::lock_guard lock(mu);
    auto key = std::make_pair(c.get_str(), wd);
    auto it = tables.find(key);
    if (it == tables.end())
        it = tables.emplace(key, std::make_unique<SeriesTable>(c, wd, terms_for(c, wd, Word::max_length))).first;
    return *it->second;
}

using CacheKey = std::tuple<unsigned, int, Word>;

struct ValueCache {
    std::shared_mutex mu;
    std::map<CacheKey, HPReal> values;

    bool find(const CacheKey& k, HPReal& out) {
        std::shared_lock lock(mu);
        auto it = values.find(k);
        if (it == values.end()) return false;
        out = it->second;
        return true;
    }
    void insert(const CacheKey& k, const HPReal& v) {
        std::unique_lock lock(mu);
        values.emplace(k, v);
    }
};

ValueCache& li_cache() {
    static ValueCache c;
    return c;
}

ValueCache& zeta_cache() {
    static ValueCache c;
    return c;
}

int c_tag(const Rational& c) {
    if (c == Rational(1, 2)) return 2;
    if (c == Rational(1, 3)) return 3;
    if (c == Rational(2, 3)) return 4;
    return -1;
}

// Nested cumulative sums: A_n(m) = m^-kn, A_i(m) = m^-ki sum_{m' < m} A_{i+1}(m').
HPReal polylog_series(const Index& idx, const SeriesTable& t) {
    const std::size_t M = t.terms();
    const std::size_t d = idx.size();
    std::vector<HPReal> cur = t.inverse_powers(idx[d - 1]);
    for (std::size_t i = d - 1; i-- > 0;) {
        const auto& inv = t.inverse_powers(idx[i]);
        HPReal running = 0;
        for (std::size_t m = 1; m <= M; ++m) {
            HPReal here = cur[m];
            cur[m] = inv[m] * running;
            running += here;
        }
    }
    HPReal sum = 0;
    for (std::size_t m = 1; m <= M; ++m) sum += t.cpow(m) * cur[m];
    return sum;
}

// Integral of the word over c > t1 > ... > tn > 0; the word lies in h1.
HPReal word_polylog(const Word& w, const Rational& c, unsigned wd) {
    if (w.empty()) return HPReal(1);
    const int tag = c_tag(c);
    CacheKey key{wd, tag, w};
    HPReal out;
    if (tag >= 0 && li_cache().find(key, out)) return out;
    PrecisionGuard g(wd);
    out = polylog_series(word_to_index(w), series_table(c, wd));
    if (tag >= 0) li_cache().insert(key, out);
    return out;
}

// zeta(w) = sum_j I_{1-c}(tau(a1..aj)) I_c(a_{j+1}..an).
HPReal split_sum(const Word& w, const Rational& c, unsigned wd) {
    PrecisionGuard g(wd);
    const Rational cbar = 1 - c;
    HPReal sum = 0;
    for (std::size_t j = 0; j <= w.size(); ++j)
        sum += word_polylog(tau_word(w.prefix(j)), cbar, wd) * word_polylog(w.suffix_from(j), c, wd);
    return sum;
}

HPReal euler_maclaurin(int s, unsigned wd) {
    PrecisionGuard g(wd);
    const unsigned long N = wd + 10;
    HPReal sum = 0;
    for (unsigned long m = 1; m < N; ++m) sum += boost::multiprecision::pow(HPReal(m), -s);
    HPReal n = HPReal(N);
    HPReal npow = boost::multiprecision::pow(n, -s); // N^-s
    sum += npow * n / (s - 1) + npow / 2;
    const HPReal eps = boost::multiprecision::pow(HPReal(10), -static_cast<int>(wd) - 5);
    HPReal rising = s;        // s (s+1) ... (s+2j-2)
    HPReal np = npow / n;     // N^{-s-2j+1}
    Integer fact = 2;         // (2j)!
    for (unsigned j = 1; j <= 4 * N; ++j) {
        HPReal term = to_hp(bernoulli(2 * j)) / to_hp(fact) * rising * np;
        sum += term;
        if (boost::multiprecision::abs(term) < eps) return sum;
        rising *= HPReal(s + 2 * static_cast<int>(j) - 1) * HPReal(s + 2 * static_cast<int>(j));
        np /= n * n;
        fact *= (2 * j + 1) * (2 * j + 2);
    }
    throw PrecisionExhausted("Euler-Maclaurin tail did not converge for zeta(" + std::to_string(s) + ")");
}

} // namespace

HPReal zeta_word(const Word& w, unsigned digits, MzvMethod method) {
    check_digits(digits);
    if (!w.in_h0()) throw NotInH0(w.str());
    const unsigned wd = working_digits(digits);
    PrecisionGuard g(wd);
    if (w.empty()) return HPReal(1);
    CacheKey key{wd, static_cast<int>(method), w};
    HPReal out;
    if (zeta_cache().find(key, out)) return out;
    switch (method) {
    case MzvMethod::SplitHalf:
        out = split_sum(w, Rational(1, 2), wd);
        break;
    case MzvMethod::SplitThird:
        out = split_sum(w, Rational(1, 3), wd);
        break;
    case MzvMethod::Direct: {
        Index idx = word_to_index(w);
        if (idx.size() != 1) throw BadRange("direct summation only handles depth one, got " + index_to_string(idx));
        out = euler_maclaurin(idx[0], wd);
        break;
    }
    }
    zeta_cache().insert(key, out);
    return out;
}

HPReal zeta(const Index& idx, unsigned digits) {
    if (!is_admissible(idx)) throw NotAdmissible(index_to_string(idx));
    return zeta_word(index_to_word(idx), digits);
}

HPReal zeta_star(const Index& idx, unsigned digits) {
    if (!is_admissible(idx)) throw NotAdmissible(index_to_string(idx));
    return z_star_value(WordSum::from_index(idx), digits);
}

HPReal zeta_single(int s, unsigned digits) {
    if (s == 0) {
        check_digits(digits);
        PrecisionGuard g(working_digits(digits));
        return HPReal(-1) / 2;
    }
    return zeta(Index{s}, digits);
}

HPReal z_value(const WordSum& w, unsigned digits) {
    check_digits(digits);
    for (const auto& [u, c] : w)
        if (!u.in_h0()) throw NotInH0(u.str());
    PrecisionGuard g(working_digits(digits));
    HPReal sum = 0;
    for (const auto& [u, c] : w) sum += to_hp(c) * zeta_word(u, digits);
    return sum;
}

HPReal z_star_value(const WordSum& w, unsigned digits) { return z_value(S_map(w), digits); }

HPReal polylog(const Index& idx, const Rational& c, unsigned digits) {
    check_digits(digits);
    if (c <= 0 || c >= 1) throw BadRange("polylog argument must lie in (0,1)");
    for (int k : idx)
        if (k < 1) throw BadRange("index entries must be positive");
    const unsigned wd = working_digits(digits);
    PrecisionGuard g(wd);
    if (idx.empty()) return HPReal(1);
    return word_polylog(index_to_word(idx), c, wd);
}

HPReal x0_sum(int k, int n, int s, unsigned digits) {
    if (!(s >= 1 && n >= s && k >= n + s))
        throw BadRange("x0_sum needs k >= n + s and n >= s >= 1");
    PrecisionGuard g(working_digits(digits));
    HPReal sum = 0;
    for (const Index& idx : enumerate_indices(k, n))
        if (index_height(idx) == s) sum += zeta(idx, digits);
    return sum;
}

ZetaSource zeta_source(unsigned digits) {
    return [digits](int n) { return zeta_single(n, digits); };
}

void clear_mzv_cache() {
    {
        std::unique_lock lock(li_cache().mu);
        li_cache().values.clear();
    }
    std::unique_lock lock(zeta_cache().mu);
    zeta_cache().values.clear();
}

std::size_t mzv_cache_size() {
    std::shared_lock lock(zeta_cache().mu);
    return zeta_cache().values.size();
}

} // namespace mzv
