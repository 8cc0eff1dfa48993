#include <mzv/catalog.hpp>
#include <mzv/closed_forms.hpp>
#include <mzv/error.hpp>
#include <mzv/maps.hpp>
#include <mzv/mzv_eval.hpp>
#include <mzv/power_series.hpp>
#include <mzv/products.hpp>
#include <mzv/regularization.hpp>

#include <atomic>
#include <cctype>
#include <chrono>
#include <future>
#include <mutex>
#include <set>
#include <sstream>

namespace mzv {

namespace {

Rational binom(long n, long k) { return Rational(binomial(n, k)); }
Rational pow2(long e) { return pow(Rational(2), e); }
Rational sign(long e) { return e % 2 ? Rational(-1) : Rational(1); }

WordSum z(int k) { return WordSum(Word::z(k)); }
WordSum zi(const Index& idx) { return WordSum::from_index(idx); }
WordSum xp(int n) { return WordSum(Word::power(Letter::X, static_cast<std::size_t>(n))); }
WordSum yp(int n) { return WordSum(Word::power(Letter::Y, static_cast<std::size_t>(n))); }
WordSum cat(const WordSum& a, const WordSum& b) { return concat(a, b); }

WordSum concat_power(const WordSum& u, int n) {
    WordSum r = WordSum::one();
    for (int i = 0; i < n; ++i) r = concat(r, u);
    return r;
}

WordSum za_power(int a, int n) { return concat_power(z(a), n); }

Index repeat(int k, int n) { return Index(static_cast<std::size_t>(n), k); }

Index join(std::initializer_list<Index> parts) {
    Index r;
    for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
    return r;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw BadRange(what);
}

// ---- task constructors ------------------------------------------------------

VerificationTask symbolic(std::string name, std::string label, TaskParams params, WordSum lhs, WordSum rhs) {
    VerificationTask t;
    t.kind = TaskKind::Symbolic;
    t.name = std::move(name);
    t.label = std::move(label);
    t.params = std::move(params);
    t.lhs = std::move(lhs);
    t.rhs = std::move(rhs);
    return t;
}

VerificationTask membership(std::string name, std::string label, TaskParams params, WordSum candidate, int weight) {
    VerificationTask t;
    t.kind = TaskKind::Membership;
    t.name = std::move(name);
    t.label = std::move(label);
    t.params = std::move(params);
    t.candidate = std::move(candidate);
    t.weight = weight;
    return t;
}

VerificationTask numeric(std::string name, std::string label, TaskParams params, NumericSide lhs, NumericSide rhs,
                         unsigned digits) {
    VerificationTask t;
    t.kind = TaskKind::Numeric;
    t.name = std::move(name);
    t.label = std::move(label);
    t.params = std::move(params);
    t.lhs_num = std::move(lhs);
    t.rhs_num = std::move(rhs);
    t.digits = digits;
    return t;
}

HPReal zv(const Index& idx, unsigned d) { return idx.empty() ? HPReal(1) : zeta(idx, d); }
HPReal zsv(const Index& idx, unsigned d) { return idx.empty() ? HPReal(1) : zeta_star(idx, d); }

// Z (or Z*) of a combination of admissible words.
NumericSide z_side(std::string text, WordSum w, bool star) {
    return {std::move(text), [w = std::move(w), star](unsigned d) { return star ? z_star_value(w, d) : z_value(w, d); }};
}

NumericSide zeta_multiple(std::string text, Rational c, int k) {
    return {std::move(text), [c = std::move(c), k](unsigned d) { return to_hp(c) * zeta_single(k, d); }};
}

std::string sum_text(const std::string& body, const WordSum& w) {
    return body + " over " + std::to_string(w.size()) + " words";
}

// Admissible words of weight k and depth n, summed.
WordSum depth_sum(int k, int n) {
    WordSum s;
    for (const auto& idx : enumerate_indices(k, n)) s += zi(idx);
    return s;
}

// x (x^{k-n-1} sh y^{n-1}) y
WordSum s_kn(int k, int n) { return cat(cat(xp(1), shuffle(xp(k - n - 1), yp(n - 1))), yp(1)); }

WordSum minus_x_plus_y() { return yp(1) - xp(1); }

TaskParams P(std::initializer_list<std::pair<const char*, long>> kv) {
    TaskParams p;
    for (const auto& [k, v] : kv) p[k] = {v};
    return p;
}

} // namespace

// ---- names and parameters ----------------------------------------------------

std::string_view task_kind_name(TaskKind k) {
    switch (k) {
    case TaskKind::Symbolic: return "symbolic";
    case TaskKind::Membership: return "member";
    case TaskKind::Numeric: return "numeric";
    }
    return "?";
}

TaskKind parse_task_kind(std::string_view s) {
    if (s == "symbolic") return TaskKind::Symbolic;
    if (s == "member" || s == "membership") return TaskKind::Membership;
    if (s == "numeric") return TaskKind::Numeric;
    throw ParseError("unknown mode '" + std::string(s) + "'", 0);
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Member: return "MEMBER";
    case Verdict::NotMember: return "NOT_MEMBER";
    }
    return "?";
}

TaskParams parse_task_params(std::string_view text) {
    TaskParams out;
    std::size_t i = 0;
    auto fail = [&](const std::string& what) { throw ParseError(what, i); };
    auto skip_ws = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    auto read_int = [&]() -> long {
        skip_ws();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            fail("expected integer");
        return std::stol(std::string(text.substr(start, i - start)));
    };
    skip_ws();
    while (i < text.size()) {
        std::size_t start = i;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
        if (i == start) fail("expected parameter name");
        std::string key(text.substr(start, i - start));
        skip_ws();
        if (i >= text.size() || text[i] != '=') fail("expected '='");
        ++i;
        skip_ws();
        std::vector<long> vals;
        if (i < text.size() && text[i] == '[') {
            ++i;
            skip_ws();
            if (i < text.size() && text[i] == ']') fail("empty list");
            for (;;) {
                vals.push_back(read_int());
                skip_ws();
                if (i < text.size() && text[i] == ',') {
                    ++i;
                    continue;
                }
                if (i < text.size() && text[i] == ']') {
                    ++i;
                    break;
                }
                fail("expected ',' or ']'");
            }
        } else {
            vals.push_back(read_int());
        }
        if (out.count(key)) fail("duplicate parameter " + key);
        out[key] = std::move(vals);
        skip_ws();
        if (i < text.size()) {
            if (text[i] != ',') fail("expected ','");
            ++i;
            skip_ws();
        }
    }
    return out;
}

std::string params_to_string(const TaskParams& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : p) {
        os << (first ? "" : ",") << k << "=";
        first = false;
        if (v.size() == 1) {
            os << v[0];
            continue;
        }
        os << "[";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << "]";
    }
    return os.str();
}

// ---- running -----------------------------------------------------------------

const RelationBasis& cached_basis(int weight, const FamilySet& families) {
    static std::mutex mu;
    static std::map<std::pair<int, FamilySet>, std::shared_future<std::shared_ptr<const RelationBasis>>> cache;
    std::shared_future<std::shared_ptr<const RelationBasis>> fut;
    std::promise<std::shared_ptr<const RelationBasis>> prom;
    bool builder = false;
    {
        std::lock_guard lock(mu);
        auto key = std::make_pair(weight, families);
        auto it = cache.find(key);
        if (it == cache.end()) {
            fut = prom.get_future().share();
            cache.emplace(key, fut);
            builder = true;
        } else {
            fut = it->second;
        }
    }
    if (builder) {
        try {
            prom.set_value(std::make_shared<const RelationBasis>(build_basis(weight, families)));
        } catch (...) {
            prom.set_exception(std::current_exception());
            std::lock_guard lock(mu);
            cache.erase(std::make_pair(weight, families));
        }
    }
    return *fut.get();
}

VerificationReport run_task(const VerificationTask& task, std::optional<HPReal> tolerance) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.name = task.name;
    r.label = task.label;
    r.params = task.params;
    r.kind = task.kind;
    switch (task.kind) {
    case TaskKind::Symbolic: {
        WordSum diff = task.lhs - task.rhs;
        r.verdict = diff.is_zero() ? Verdict::Pass : Verdict::Fail;
        r.residue_or_delta = diff.str();
        break;
    }
    case TaskKind::Membership: {
        const RelationBasis& basis = cached_basis(task.weight, task.families);
        auto cert = basis.membership(make_relation(task.weight, task.candidate));
        r.verdict = cert.member ? Verdict::Member : Verdict::NotMember;
        r.residue_or_delta = cert.member ? "0" : cert.residue.str();
        break;
    }
    case TaskKind::Numeric: {
        PrecisionGuard g(working_digits(task.digits));
        HPReal tol = tolerance ? *tolerance : tolerance_for(task.digits);
        HPReal delta = abs_diff(task.lhs_num.value(task.digits), task.rhs_num.value(task.digits));
        r.verdict = delta <= tol ? Verdict::Pass : Verdict::Fail;
        r.residue_or_delta = delta == 0 ? "0" : to_decimal(delta, 3);
        break;
    }
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<VerificationReport> run_tasks(const std::vector<VerificationTask>& tasks, unsigned threads,
                                          std::optional<HPReal> tolerance) {
    std::vector<VerificationReport> out(tasks.size());
    if (threads <= 1 || tasks.size() < 2) {
        for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = run_task(tasks[i], tolerance);
        return out;
    }
    std::vector<std::future<void>> workers;
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < threads; ++w)
        workers.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = run_task(tasks[i], tolerance);
        }));
    for (auto& f : workers) f.get();
    return out;
}

// ---- Hoffman relation ----------------------------------------------------------

std::vector<VerificationTask> hoffman_relation(const Index& idx, bool star) {
    if (!is_admissible(idx)) throw NotAdmissible("hoffman needs an admissible index, got " + index_to_string(idx));
    const std::string name = star ? "hoffman-star" : "hoffman";
    TaskParams params{{"index", std::vector<long>(idx.begin(), idx.end())}, {"star", {star ? 1 : 0}}};
    const WordSum w = zi(idx);
    const WordSum y = yp(1);
    const int n = static_cast<int>(idx.size());

    WordSum display;
    for (int i = 0; i < n; ++i) {
        Index head(idx.begin(), idx.begin() + i), tail(idx.begin() + i + 1, idx.end());
        const int ki = idx[i];
        for (int j = 0; j <= ki - 2; ++j) display += zi(join({head, {ki - j, j + 1}, tail}));
        Rational c = star ? Rational(ki - 1 + (i == n - 1 ? 1 : 0)) : Rational(1);
        display -= zi(join({head, {ki + 1}, tail})) * c;
    }

    std::vector<VerificationTask> out;
    if (!star) {
        WordSum d1 = partial_n(1, w);
        out.push_back(symbolic(name, "d1(w) = y sh w - y * w", params, d1, shuffle(y, w) - stuffle(y, w)));
        out.push_back(symbolic(name, "d1(w) = display", params, d1, display));
        out.push_back(membership(name, "Z(d1(w)) = 0", params, d1, index_weight(idx) + 1));
    } else {
        WordSum d1 = partial_n_star(1, w);
        out.push_back(
            symbolic(name, "d1*(w) = y sh* w - y ** w", params, d1, star_shuffle(y, w) - star_stuffle(y, w)));
        out.push_back(symbolic(name, "d1*(w) = display", params, d1, display));
        out.push_back(membership(name, "Z*(d1*(w)) = 0", params, S_map(d1), index_weight(idx) + 1));
    }
    return out;
}

// ---- sum formula ---------------------------------------------------------------

std::vector<VerificationTask> sum_formula(int k, int n, bool star, unsigned digits) {
    require(k > n && n >= 1, "sum formula needs k > n >= 1");
    const std::string name = star ? "sum-star" : "sum";
    TaskParams params = P({{"k", k}, {"n", n}});
    WordSum all = depth_sum(k, n);
    std::vector<VerificationTask> out;
    if (!star) {
        out.push_back(membership(name, "sum z(k) - z_k", params, all - z(k), k));
        out.push_back(numeric(name, "sum zeta = zeta(k)", params, z_side(sum_text("zeta", all), all, false),
                              zeta_multiple("zeta(" + std::to_string(k) + ")", 1, k), digits));
    } else {
        Rational c = binom(k - 1, n - 1);
        out.push_back(membership(name, "S(sum z(k)) - C(k-1,n-1) z_k", params, S_map(all) - z(k) * c, k));
        out.push_back(numeric(name, "sum zeta* = C(k-1,n-1) zeta(k)", params,
                              z_side(sum_text("zeta*", all), all, true),
                              zeta_multiple(to_string(c) + "*zeta(" + std::to_string(k) + ")", c, k), digits));
    }
    return out;
}

// ---- Guo-Xie ---------------------------------------------------------------------

Rational guo_xie_c(const Index& ks, int from, int to, int k) {
    if (to == from - 1) return 1;
    if (to == from - 2) return Rational(1 - k);
    if (from < 1 || to < from || to > static_cast<int>(ks.size())) throw BadRange("C range out of bounds");
    Rational c = 0;
    long partial = 0;
    const int len = to - from + 1;
    for (int j = 1; j <= len; ++j) {
        partial += ks[from + j - 2];
        c += pow2(partial - j);
    }
    return c + pow2(partial - len);
}

std::vector<VerificationTask> guo_xie_identity(int k, int n, GuoXieVariant v) {
    require(k > n && n >= 2, "guo-xie needs k > n >= 2");
    static const char* names[] = {"guo-xie:ast", "guo-xie:shuffle", "guo-xie:s-ast", "guo-xie:s-shuffle"};
    static const Product prods[] = {Product::Stuffle, Product::Shuffle, Product::StarStuffle, Product::StarShuffle};
    const auto vi = static_cast<int>(v);
    TaskParams params = P({{"k", k}, {"n", n}});

    WordSum lhs;
    for (int l = 1; l <= k - n; ++l)
        for (const auto& idx : enumerate_indices(k - l, n - 1)) lhs += product(prods[vi], z(l), zi(idx));

    const auto full = enumerate_indices(k, n, false);     // all k_i >= 1, depth n
    const auto shorter = enumerate_indices(k, n - 1, false); // depth n - 1
    WordSum rhs;
    auto C = [&](const Index& ks, int from, int to) { return guo_xie_c(ks, from, to, k); };
    if (v == GuoXieVariant::Ast || v == GuoXieVariant::SAst) {
        for (const auto& ks : full) {
            if (ks[0] == 1 && ks[1] >= 2) rhs += zi(ks);
            else if (ks[0] >= 2 && ks[1] == 1) rhs += zi(ks) * Rational(n - 1);
            else if (ks[0] >= 2 && ks[1] >= 2) rhs += zi(ks) * Rational(n);
        }
        Rational c = v == GuoXieVariant::Ast ? Rational(k - n) : Rational(n - k);
        rhs += depth_sum(k, n - 1) * c;
    } else {
        for (const auto& ks : full) {
            rhs += zi(ks) * (C(ks, 1, n - 1) - C(ks, 2, n - 1));
            if (ks[1] == 1) rhs -= zi(ks);
        }
        if (v == GuoXieVariant::SShuffle) {
            rhs += depth_sum(k, n - 1);
            for (const auto& ks : shorter)
                rhs -= zi(ks) * (C(ks, 1, n - 1) - C(ks, 2, n - 1) - C(ks, 1, n - 2) + C(ks, 2, n - 2));
        }
    }
    return {symbolic(names[vi], "product sum = display", params, lhs, rhs)};
}

std::vector<VerificationTask> weighted_sum(int k, int n, bool star, unsigned digits) {
    require(k > n && n >= 2, "weighted sum needs k > n >= 2");
    TaskParams params = P({{"k", k}, {"n", n}, {"star", star ? 1 : 0}});
    auto C = [&](const Index& ks, int from, int to) { return guo_xie_c(ks, from, to, k); };
    WordSum lhs;
    for (const auto& ks : enumerate_indices(k, n)) lhs += zi(ks) * (C(ks, 1, n - 1) - C(ks, 2, n - 1));
    std::vector<VerificationTask> out;
    if (!star) {
        out.push_back(numeric("weighted", "sum [C(k1..k_{n-1}) - C(k2..k_{n-1})] zeta = k zeta(k)", params,
                              z_side(sum_text("weighted zeta", lhs), lhs, false),
                              zeta_multiple(std::to_string(k) + "*zeta(" + std::to_string(k) + ")", k, k), digits));
        out.push_back(membership("weighted", "weighted sum - k z_k", params, lhs - z(k) * Rational(k), k));
    } else {
        for (const auto& ks : enumerate_indices(k, n - 1))
            lhs -= zi(ks) * (C(ks, 1, n - 1) - C(ks, 2, n - 1) - C(ks, 1, n - 2) + C(ks, 2, n - 2));
        Rational c = binom(k - 1, n - 1);
        out.push_back(numeric("weighted", "star weighted sum = C(k-1,n-1) zeta(k)", params,
                              z_side(sum_text("weighted zeta*", lhs), lhs, true),
                              zeta_multiple(to_string(c) + "*zeta(" + std::to_string(k) + ")", c, k), digits));
    }
    return out;
}

std::vector<VerificationTask> ohno_zudilin(int k, bool star, unsigned digits) {
    require(k >= 3, "ohno-zudilin needs k >= 3");
    TaskParams params = P({{"k", k}, {"star", star ? 1 : 0}});
    WordSum lhs;
    for (int i = 2; i <= k - 1; ++i) lhs += zi({i, k - i}) * pow2(i);
    Rational c = star ? pow2(k) + Rational(k - 3) : Rational(k + 1);
    std::vector<VerificationTask> out;
    out.push_back(numeric("ohno-zudilin", star ? "sum 2^i zeta*(i,k-i) = (2^k+k-3) zeta(k)" : "sum 2^i zeta(i,k-i) = (k+1) zeta(k)",
                          params, z_side(star ? "sum 2^i zeta*(i,k-i)" : "sum 2^i zeta(i,k-i)", lhs, star),
                          zeta_multiple(to_string(c) + "*zeta(" + std::to_string(k) + ")", c, k), digits));
    if (!star) out.push_back(membership("ohno-zudilin", "sum 2^i z_i z_{k-i} - (k+1) z_k", params, lhs - z(k) * c, k));
    return out;
}

// ---- restricted sums via sigma_m -------------------------------------------------

std::vector<VerificationTask> restricted_sum_eie(const std::vector<int>& a, const std::vector<int>& b, int m,
                                                 bool star) {
    require(!a.empty() && a.size() == b.size(), "eie-restricted needs a and b of the same positive length");
    require(m >= 0, "eie-restricted needs m >= 0");
    for (std::size_t i = 0; i < a.size(); ++i) require(a[i] >= 1 && b[i] >= 1, "eie-restricted needs a_i, b_i >= 1");
    const int s = static_cast<int>(a.size());
    const std::string name = star ? "eie-restricted-star" : "eie-restricted";
    TaskParams params{{"a", std::vector<long>(a.begin(), a.end())},
                      {"b", std::vector<long>(b.begin(), b.end())},
                      {"m", {m}},
                      {"star", {star ? 1 : 0}}};
    WordSum word = WordSum::one();
    int weight = m;
    for (int i = 0; i < s; ++i) {
        word = cat(cat(word, xp(a[i])), yp(b[i]));
        weight += a[i] + b[i];
    }
    const WordSum mxy = minus_x_plus_y();
    const auto eps_all = weak_compositions(m, s);
    std::vector<VerificationTask> out;

    if (!star) {
        WordSum sig, sigbar;
        for (const auto& eps : eps_all) {
            WordSum t = WordSum::one(), u = WordSum::one();
            for (int i = 0; i < s; ++i) {
                t = cat(cat(cat(t, xp(a[i])), shuffle(xp(eps[i]), yp(b[i] - 1))), yp(1));
                u = cat(cat(cat(u, xp(1)), shuffle(xp(a[i] - 1), yp(eps[i]))), yp(b[i]));
            }
            sig += t;
            sigbar += u;
        }
        WordSum lhs = ohno_sigma(m, word), lhs_bar = ohno_sigma_bar(m, word);
        out.push_back(symbolic(name, "sigma_m(w0) = display", params, lhs, sig));
        out.push_back(symbolic(name, "sigma_m-bar(w0) = display", params, lhs_bar, sigbar));
        out.push_back(membership(name, "Z((sigma_m - sigma_m-bar)(w0)) = 0", params, lhs - lhs_bar, weight));
        return out;
    }

    const WordSum w0 = S_inv(word);
    WordSum sig, sigbar;
    for (const auto& eps : eps_all) {
        // j_i in [0, b_i - 1]
        std::vector<int> j(s, 0);
        for (;;) {
            Rational c = 1;
            long e = 0;
            WordSum t = WordSum::one();
            for (int l = 0; l < s; ++l) {
                e += b[l] - j[l] - 1;
                c *= binom(eps[l] + b[l] - j[l] - 1, eps[l]);
                t = cat(cat(t, xp(a[l])), shuffle(xp(eps[l] + b[l] - j[l] - 1), yp(j[l])));
                t = cat(t, l + 1 < s ? mxy : yp(1));
            }
            sig += t * (c * sign(e));
            int p = 0;
            while (p < s && ++j[p] > b[p] - 1) j[p++] = 0;
            if (p == s) break;
        }
        // j_i in [0, eps_i]
        std::fill(j.begin(), j.end(), 0);
        for (;;) {
            Rational c = 1;
            long e = 0;
            WordSum t = WordSum::one();
            for (int l = 0; l < s; ++l) {
                e += eps[l] - j[l];
                c *= binom(a[l] + eps[l] - j[l] - 1, a[l] - 1);
                t = cat(cat(t, xp(1)), shuffle(xp(a[l] + eps[l] - j[l] - 1), yp(j[l])));
                t = l + 1 < s ? cat(t, concat_power(mxy, b[l])) : cat(cat(t, concat_power(mxy, b[l] - 1)), yp(1));
            }
            sigbar += t * (c * sign(e));
            int p = 0;
            while (p < s && ++j[p] > eps[p]) j[p++] = 0;
            if (p == s) break;
        }
    }
    WordSum lhs = ohno_sigma_star(m, w0), lhs_bar = ohno_sigma_bar_star(m, w0);
    out.push_back(symbolic(name, "sigma*_m(w0) = display", params, lhs, sig));
    out.push_back(symbolic(name, "sigma*_m-bar(w0) = display", params, lhs_bar, sigbar));
    out.push_back(
        membership(name, "Z*((sigma*_m - sigma*_m-bar)(w0)) = 0", params, S_map(lhs - lhs_bar), weight));
    return out;
}

// ---- double zeta values by parity -----------------------------------------------

namespace {

HPReal odd_products(int k, unsigned d, const std::function<Rational(int)>& coeff) {
    // sum over odd i in [2, k-2] of coeff(i) zeta(i) zeta(k-i); zero coefficients skipped
    HPReal acc = 0;
    for (int i = 3; i <= k - 2; i += 2) {
        Rational c = coeff(i);
        if (c != 0) acc += to_hp(c) * zeta_single(i, d) * zeta_single(k - i, d);
    }
    return acc;
}

} // namespace

std::vector<VerificationTask> parity_double(int k, ParityKind kind, unsigned digits, int s_param) {
    std::vector<VerificationTask> out;
    const auto ki = k;
    auto even_only = [&](const char* what) {
        if (k % 2 != 0) throw ParityMismatch(std::string(what) + " needs an even weight");
        require(k >= 4, std::string(what) + " needs k >= 4");
    };
    auto odd_only = [&](const char* what) {
        if (k % 2 == 0) throw ParityMismatch(std::string(what) + " needs an odd weight");
        require(k >= 3, std::string(what) + " needs k >= 3");
    };
    auto parity_sum = [&](const char* name, int parity, bool star, Rational c) {
        even_only(name);
        WordSum w;
        for (int i = 2; i <= k - 1; ++i)
            if (i % 2 == parity) w += zi({i, k - i});
        out.push_back(numeric(name, std::string(star ? "zeta*" : "zeta") + " parity sum = " + to_string(c) + " zeta(k)",
                              P({{"k", k}}), z_side(star ? "parity sum of zeta*" : "parity sum of zeta", w, star),
                              zeta_multiple(to_string(c) + "*zeta(" + std::to_string(k) + ")", c, k), digits));
    };

    switch (kind) {
    case ParityKind::EvenSum: parity_sum("parity:even", 0, false, Rational(3, 4)); break;
    case ParityKind::OddSum: parity_sum("parity:odd", 1, false, Rational(1, 4)); break;
    case ParityKind::StarEven: parity_sum("parity:star-even", 0, true, Rational(2 * k - 1, 4)); break;
    case ParityKind::StarOdd: parity_sum("parity:star-odd", 1, true, Rational(2 * k - 3, 4)); break;
    case ParityKind::AltSum: {
        even_only("parity:alt");
        TaskParams params = P({{"k", k}});
        WordSum alt;
        for (int i = 2; i <= k - 1; ++i) alt += zi({i, k - i}) * sign(i);
        WordSum sh, shs;
        for (int r = 1; r <= k - 1; ++r) {
            sh += (shuffle(z(r), z(k - r)) - stuffle(z(r), z(k - r))) * sign(r);
            shs += (star_shuffle(z(r), z(k - r)) - star_stuffle(z(r), z(k - r))) * sign(r);
        }
        WordSum rhs = alt * Rational(-2) + z(k);
        out.push_back(symbolic("parity:alt", "sum (-1)^r (z_r sh z_{k-r} - z_r * z_{k-r})", params, sh, rhs));
        out.push_back(symbolic("parity:alt", "sum (-1)^r (z_r sh* z_{k-r} - z_r ** z_{k-r})", params, shs, rhs));
        out.push_back(numeric("parity:alt", "sum (-1)^i zeta(i,k-i) = zeta(k)/2", params,
                              z_side("sum (-1)^i zeta(i,k-i)", alt, false),
                              zeta_multiple("1/2*zeta(" + std::to_string(k) + ")", Rational(1, 2), k), digits));
        out.push_back(numeric("parity:alt", "sum (-1)^i zeta*(i,k-i) = zeta(k)/2", params,
                              z_side("sum (-1)^i zeta*(i,k-i)", alt, true),
                              zeta_multiple("1/2*zeta(" + std::to_string(k) + ")", Rational(1, 2), k), digits));
        out.push_back(membership("parity:alt", "sum (-1)^i z_i z_{k-i} - z_k/2", params,
                                 alt - z(k) * Rational(1, 2), k));
        break;
    }
    case ParityKind::EulerDecomp: {
        const int r = k, s = s_param;
        require(r >= 1 && s >= 1, "parity:euler needs r, s >= 1");
        TaskParams params = P({{"r", r}, {"s", s}});
        WordSum rhs;
        for (int i = r; i <= r + s - 1; ++i) rhs += zi({i, r + s - i}) * binom(i - 1, r - 1);
        for (int i = s; i <= r + s - 1; ++i) rhs += zi({i, r + s - i}) * binom(i - 1, s - 1);
        out.push_back(symbolic("parity:euler", "z_r sh z_s = binomial display", params, shuffle(z(r), z(s)), rhs));
        out.push_back(symbolic("parity:euler", "z_r sh* z_s = binomial display - C(r+s,r) z_{r+s}", params,
                               star_shuffle(z(r), z(s)), rhs - z(r + s) * binom(r + s, r)));
        break;
    }
    case ParityKind::OddWeightClosed: {
        odd_only("parity:odd-weight");
        require(k >= 5, "parity:odd-weight needs r, s >= 2, so k >= 5");
        for (int r = 2; r <= k - 2; ++r) {
            const int s = k - r;
            TaskParams params = P({{"k", k}, {"r", r}});
            for (bool star : {false, true}) {
                NumericSide rhs{"closed form in single zetas", [ki, r, s, star](unsigned d) {
                                    const Rational sr = sign(r);
                                    HPReal v = to_hp((sr + 1) / 2) * zeta_single(r, d) * zeta_single(s, d);
                                    v -= to_hp(sr) * odd_products(ki, d, [&](int i) {
                                             return i >= r ? binom(i - 1, r - 1) : Rational(0);
                                         });
                                    v -= to_hp(sr) * odd_products(ki, d, [&](int i) {
                                             return i >= s ? binom(i - 1, s - 1) : Rational(0);
                                         });
                                    Rational c = (sr * binom(ki, r) + (star ? 1 : -1)) / 2;
                                    return v + to_hp(c) * zeta_single(ki, d);
                                }};
                std::string lhs_text = std::string(star ? "zeta*(" : "zeta(") + std::to_string(r) + "," +
                                       std::to_string(s) + ")";
                out.push_back(numeric("parity:odd-weight", lhs_text + " = closed form", params,
                                      z_side(lhs_text, zi({r, s}), star), rhs, digits));
            }
        }
        break;
    }
    case ParityKind::K1Closed: {
        odd_only("parity:k1");
        TaskParams params = P({{"k", k}});
        const WordSum y = yp(1);
        WordSum rhs = (shuffle(y, z(k - 1)) - stuffle(y, z(k - 1))) * Rational(2) + z(k) * Rational(k - 1);
        // the sign sits on the shuffle term only
        for (int i = 2; i <= k - 2; ++i) rhs += shuffle(z(i), z(k - i)) * sign(i) - stuffle(z(i), z(k - i));
        out.push_back(symbolic("parity:k1", "2 z_{k-1} z_1 = double shuffle display", params,
                               zi({k - 1, 1}) * Rational(2), rhs));
        for (bool star : {false, true}) {
            NumericSide closed{"closed form in single zetas", [ki, star](unsigned d) {
                                   Rational c(star ? ki + 1 : ki - 1, 2);
                                   return to_hp(c) * zeta_single(ki, d) -
                                          odd_products(ki, d, [](int) { return Rational(1); });
                               }};
            std::string lhs_text = std::string(star ? "zeta*(" : "zeta(") + std::to_string(k - 1) + ",1)";
            out.push_back(numeric("parity:k1", lhs_text + " = closed form", params,
                                  z_side(lhs_text, zi({k - 1, 1}), star), closed, digits));
        }
        break;
    }
    }
    return out;
}

// ---- sum formula lemma --------------------------------------------------------------

std::vector<VerificationTask> sigma_lemma(int k, int n) {
    require(k > n && n >= 1, "sigma-lemma needs k > n >= 1");
    TaskParams params = P({{"k", k}, {"n", n}});
    const std::string name = "sigma-lemma";
    std::vector<VerificationTask> out;
    const WordSum zz = z(k - n + 1);

    out.push_back(symbolic(name, "(sigma-bar_{n-1} - sigma_{n-1})(z_{k-n+1}) = S(k,n) - z_k", params,
                           ohno_sigma_bar(n - 1, zz) - ohno_sigma(n - 1, zz), s_kn(k, n) - z(k)));

    WordSum rhs_star = -z(k);
    for (int i = 1; i <= n; ++i) rhs_star += s_kn(k, i) * (sign(n - i) * binom(k - i - 1, n - i));
    out.push_back(symbolic(name, "(sigma*-bar_{n-1} - sigma*_{n-1})(z_{k-n+1}) = display", params,
                           ohno_sigma_bar_star(n - 1, zz) - ohno_sigma_star(n - 1, zz), rhs_star));

    if (n >= 2) {
        WordSum lhs = reg(stuffle(yp(n - 1), zz), Product::Shuffle) * sign(n - 1);
        out.push_back(symbolic(name, "(-1)^{n-1} reg_sh(y^{n-1} * z_{k-n+1}) = S(k,n) - S(k,n-1)", params, lhs,
                               s_kn(k, n) - s_kn(k, n - 1)));
    }

    WordSum sum;
    for (int m = 1; m <= n; ++m) {
        const WordSum zm = z(k - m + 1);
        sum += (ohno_sigma_bar_star(m - 1, zm) - ohno_sigma_star(m - 1, zm)) * binom(k - m - 1, n - m);
    }
    out.push_back(symbolic(name, "sum_m C(k-m-1,n-m)(sigma*-bar - sigma*)(z_{k-m+1}) = S(k,n) - C(k-1,n-1) z_k",
                           params, sum, s_kn(k, n) - z(k) * binom(k - 1, n - 1)));
    return out;
}

std::vector<VerificationTask> a_b_ast(int a, int b, int n) {
    require(a >= 1 && b >= 1 && n >= 1, "a-b-ast needs a, b, n >= 1");
    TaskParams params = P({{"a", a}, {"b", b}, {"n", n}});
    WordSum lhs, lhs_star, rhs;
    for (int m = 0; m <= n - 1; ++m) {
        lhs += stuffle(z(b + m * a), za_power(a, n - 1 - m)) * sign(m);
        lhs_star += star_stuffle(z(b + m * a), za_power(a, n - 1 - m));
        rhs += cat(cat(za_power(a, m), z(b)), za_power(a, n - 1 - m));
    }
    return {symbolic("a-b-ast", "sum (-1)^m z_{b+ma} * z_a^{n-1-m} = sum z_a^m z_b z_a^{n-1-m}", params, lhs, rhs),
            symbolic("a-b-ast", "sum z_{b+ma} ** z_a^{n-1-m} = sum z_a^m z_b z_a^{n-1-m}", params, lhs_star, rhs)};
}

// ---- restricted sums of Hoffman type ------------------------------------------------

WordSum n_kn(int a, int k, int n) {
    require(k >= n && n >= 1 && a >= 1, "N_{k,n} needs k >= n >= 1 and a >= 1");
    WordSum out;
    for (const auto& ks : compositions(k, n)) {
        Index idx(ks.begin(), ks.end());
        for (int& v : idx) v *= a;
        out += zi(idx);
    }
    return out;
}

namespace {

template <Product Pr>
using WSeries = PowerSeries<WordSum, WordRing<Pr>>;
using Mono = std::vector<int>;

// Variables (t, s); the box keeps t^i s^j with i, j <= degree.
Truncation ts_truncation(int degree) { return Truncation{{1, 1}, 2 * degree, std::vector<int>{degree, degree}}; }

template <Product Q, Product Pr>
WSeries<Q> recast(const WSeries<Pr>& s) {
    WSeries<Q> r(s.truncation());
    for (int d = 0; d <= s.max_degree(); ++d)
        for (const auto& [m, c] : s.component(d)) r.add(m, c);
    return r;
}

template <Product Pr>
WSeries<Pr> d_dt(const WSeries<Pr>& s) {
    WSeries<Pr> r(s.truncation());
    for (int d = 0; d <= s.max_degree(); ++d)
        for (const auto& [m, c] : s.component(d))
            if (m[0] > 0) r.add({m[0] - 1, m[1]}, c * Rational(m[0]));
    return r;
}

template <Product Pr>
WSeries<Pr> apply_linear(const WSeries<Pr>& s, WordSum (*f)(const WordSum&)) {
    WSeries<Pr> r(s.truncation());
    for (int d = 0; d <= s.max_degree(); ++d)
        for (const auto& [m, c] : s.component(d)) r.add(m, f(c));
    return r;
}

// s -> -s
template <Product Pr>
WSeries<Pr> flip_s(const WSeries<Pr>& s) {
    WSeries<Pr> r(s.truncation());
    for (int d = 0; d <= s.max_degree(); ++d)
        for (const auto& [m, c] : s.component(d)) r.add(m, c * sign(m[1]));
    return r;
}

// sum_j coeff(j) W_j (u s + v)^j t^j with W_j supplied per j
template <Product Pr>
WSeries<Pr> series_in_t(int degree, long u, long v, const std::function<WordSum(int)>& w) {
    WSeries<Pr> r(ts_truncation(degree));
    for (int j = 0; j <= degree; ++j) {
        WordSum wj = w(j);
        for (int i = 0; i <= j; ++i) {
            Rational c = binom(j, i) * pow(Rational(u), i) * pow(Rational(v), j - i);
            if (c != 0) r.add({j, i}, wj * c);
        }
    }
    return r;
}

template <Product Pr>
WSeries<Pr> f_series(int a, int degree) {
    WSeries<Pr> r = WSeries<Pr>::constant(ts_truncation(degree), WordSum::one());
    for (int k = 1; k <= degree; ++k)
        for (int n = 1; n <= k; ++n) r.add({k, n}, n_kn(a, k, n));
    return r;
}

template <Product A, Product B>
void compare_series(std::vector<VerificationTask>& out, const std::string& name, const std::string& label,
                    const TaskParams& params, const WSeries<A>& lhs, const WSeries<B>& rhs, int max_t) {
    for (int i = 0; i <= max_t; ++i)
        for (int j = 0; j <= max_t; ++j) {
            Mono m{i, j};
            WordSum l = lhs.coefficient(m), r = rhs.coefficient(m);
            if (l.is_zero() && r.is_zero()) continue;
            std::string coeff = "t^" + std::to_string(i) + (j ? " s^" + std::to_string(j) : "");
            out.push_back(symbolic(name, label + " [" + coeff + "]", params, std::move(l), std::move(r)));
        }
}

} // namespace

std::vector<VerificationTask> hoffman_restricted(int a, HoffmanItem item, int degree, std::optional<int> k_opt,
                                                 std::optional<int> n_opt) {
    require(a >= 1, "hoffman-restricted needs a >= 1");
    require(degree >= 1, "hoffman-restricted needs degree >= 1");
    static const char* names[] = {"hoffman-restricted:e-h-inverse", "hoffman-restricted:p-relations",
                                  "hoffman-restricted:e-ast-f",     "hoffman-restricted:e-sast-f",
                                  "hoffman-restricted:f-ast-e",     "hoffman-restricted:s-n",
                                  "hoffman-restricted:s-inv-n",     "hoffman-restricted:za-ast-n",
                                  "hoffman-restricted:za-sast-n",   "hoffman-restricted:n-via-products"};
    const std::string name = names[static_cast<int>(item)];
    TaskParams params = P({{"a", a}, {"degree", degree}});
    if (k_opt) params["k"] = {*k_opt};
    if (n_opt) params["n"] = {*n_opt};
    constexpr auto St = Product::Stuffle;
    constexpr auto SSt = Product::StarStuffle;
    const int D = degree;
    auto za = [a](int j) { return za_power(a, j); };
    auto S_za = [a](int j) { return S_map(za_power(a, j)); };
    auto Sinv_za = [a](int j) { return S_inv(za_power(a, j)); };

    // E(u s + v) t) etc.
    auto E = [&](long u, long v) { return series_in_t<St>(D, u, v, za); };
    auto H = [&](long v) { return series_in_t<St>(D, 0, v, S_za); };
    auto Hbar = [&](long v) { return series_in_t<St>(D, 0, v, Sinv_za); };
    WSeries<St> Pser(ts_truncation(D));
    for (int j = 1; j <= D + 1 && j - 1 <= D; ++j) Pser.add({j - 1, 0}, z(a * j));
    const WSeries<St> one = WSeries<St>::constant(ts_truncation(D), WordSum::one());

    std::vector<VerificationTask> out;
    auto kn_range = [&](const std::function<void(int, int)>& f) {
        for (int k = 1; k <= D; ++k) {
            if (k_opt && k != *k_opt) continue;
            for (int n = 1; n <= k; ++n) {
                if (n_opt && n != *n_opt) continue;
                f(k, n);
            }
        }
    };
    auto kn_params = [&](int k, int n) {
        TaskParams p = P({{"a", a}, {"k", k}, {"n", n}});
        return p;
    };
    if (k_opt && n_opt) require(*k_opt >= *n_opt && *n_opt >= 1, "needs k >= n >= 1");

    switch (item) {
    case HoffmanItem::EHInverse:
        compare_series(out, name, "E(-t) * H(t) = 1", params, E(0, -1) * H(1), one, D);
        compare_series(out, name, "Hbar(-t) ** E(t) = 1", params,
                       recast<SSt>(Hbar(-1)) * recast<SSt>(E(0, 1)), one, D);
        break;
    case HoffmanItem::PRelations: {
        const auto Em = E(0, -1), Ep = E(0, 1), Ht = H(1), Hm = Hbar(-1);
        const auto EmS = recast<SSt>(Em), EpS = recast<SSt>(Ep), HmS = recast<SSt>(Hm), PS = recast<SSt>(Pser);
        const int top = D - 1; // derivatives lose the top coefficient
        compare_series(out, name, "P = -H * d/dt E(-t)", params, Pser, (Ht * d_dt(Em)).scaled(Rational(-1)), top);
        compare_series(out, name, "P = E(-t) * d/dt H(t)", params, Pser, Em * d_dt(Ht), top);
        compare_series(out, name, "P = -E ** d/dt Hbar(-t)", params, PS, (EpS * d_dt(HmS)).scaled(Rational(-1)),
                       top);
        compare_series(out, name, "P = Hbar(-t) ** d/dt E(t)", params, PS, HmS * d_dt(EpS), top);
        compare_series(out, name, "d/dt E(-t) = -E(-t) * P", params, d_dt(Em), (Em * Pser).scaled(Rational(-1)),
                       top);
        compare_series(out, name, "d/dt H(t) = H(t) * P", params, d_dt(Ht), Ht * Pser, top);
        compare_series(out, name, "d/dt E(t) = E(t) ** P", params, d_dt(EpS), EpS * PS, top);
        compare_series(out, name, "d/dt Hbar(-t) = -Hbar(-t) ** P", params, d_dt(HmS),
                       (HmS * PS).scaled(Rational(-1)), top);
        break;
    }
    case HoffmanItem::EAstF:
        compare_series(out, name, "E((s-1)t) = E(-t) * F(t,s)", params, E(1, -1), E(0, -1) * f_series<St>(a, D), D);
        break;
    case HoffmanItem::ESastF:
        compare_series(out, name, "E((s+1)t) = E(t) ** F(t,s)", params, recast<SSt>(E(1, 1)),
                       recast<SSt>(E(0, 1)) * f_series<SSt>(a, D), D);
        break;
    case HoffmanItem::FAstE: {
        const auto F = f_series<St>(a, D);
        compare_series(out, name, "F(t,s) = E((s-1)t) * H(t)", params, F, E(1, -1) * H(1), D);
        compare_series(out, name, "F(t,s) = E((s+1)t) ** Hbar(-t)", params, recast<SSt>(F),
                       recast<SSt>(E(1, 1)) * recast<SSt>(Hbar(-1)), D);
        compare_series(out, name, "S(F(t,s)) * F(t,-s) = 1", params, apply_linear(F, &S_map) * flip_s(F), one, D);
        compare_series(out, name, "S^{-1}(F(t,s)) ** F(t,-s) = 1", params,
                       recast<SSt>(apply_linear(F, &S_inv)) * recast<SSt>(flip_s(F)), one, D);
        break;
    }
    case HoffmanItem::SN:
    case HoffmanItem::SInvN: {
        const bool inv = item == HoffmanItem::SInvN;
        kn_range([&](int k, int n) {
            WordSum rhs;
            for (int i = 1; i <= n; ++i) rhs += n_kn(a, k, i) * (binom(k - i, k - n) * (inv ? sign(n - i) : 1));
            WordSum lhs = inv ? S_inv(n_kn(a, k, n)) : S_map(n_kn(a, k, n));
            out.push_back(symbolic(name, inv ? "S^{-1}(N_{k,n}) = display" : "S(N_{k,n}) = display", kn_params(k, n),
                                   lhs, rhs));
        });
        for (int k = 1; k <= D; ++k) {
            if (k_opt && k != *k_opt) continue;
            WordSum total;
            for (int n = 1; n <= k; ++n) total += n_kn(a, k, n) * (inv ? sign(k + n) : 1);
            TaskParams p = P({{"a", a}, {"k", k}});
            out.push_back(inv ? symbolic(name, "sum (-1)^{k+n} N_{k,n} = S^{-1}(z_a^k)", p, total, Sinv_za(k))
                              : symbolic(name, "sum N_{k,n} = S(z_a^k)", p, total, S_za(k)));
        }
        break;
    }
    case HoffmanItem::ZaAstN:
    case HoffmanItem::ZaSastN: {
        const bool st = item == HoffmanItem::ZaSastN;
        kn_range([&](int m, int n) {
            WordSum lhs;
            for (int j = 0; j <= m - n; ++j)
                lhs += st ? star_stuffle(za(j), n_kn(a, m - j, n)) : stuffle(za(j), n_kn(a, m - j, n)) * sign(j);
            WordSum rhs = za(m) * (binom(m, n) * (st ? 1 : sign(m - n)));
            out.push_back(symbolic(name,
                                   st ? "sum z_a^j ** N_{m-j,n} = C(m,n) z_a^m"
                                      : "sum (-1)^j z_a^j * N_{m-j,n} = (-1)^{m-n} C(m,n) z_a^m",
                                   kn_params(m, n), lhs, rhs));
        });
        break;
    }
    case HoffmanItem::NViaProducts:
        kn_range([&](int k, int n) {
            WordSum r1, r2;
            for (int j = 0; j <= k - n; ++j) {
                r1 += stuffle(S_za(j), za(k - j)) * (sign(k - n - j) * binom(k - j, n));
                r2 += star_stuffle(Sinv_za(j), za(k - j)) * (sign(j) * binom(k - j, n));
            }
            out.push_back(symbolic(name, "N_{k,n} = sum (-1)^{k-n-j} C(k-j,n) S(z_a^j) * z_a^{k-j}", kn_params(k, n),
                                   n_kn(a, k, n), r1));
            out.push_back(symbolic(name, "N_{k,n} = sum (-1)^j C(k-j,n) S^{-1}(z_a^j) ** z_a^{k-j}",
                                   kn_params(k, n), n_kn(a, k, n), r2));
        });
        break;
    }
    return out;
}

// ---- T_{m,n} -----------------------------------------------------------------------

WordSum t_mn(int m, int n, int a, int b, int c) {
    require(n >= 0 && m >= 2 * n, "T_{m,n} needs m >= 2n >= 0");
    require(m < 63, "T_{m,n} needs m < 63");
    // positions of the c entries; a set of indices, so duplicates collapse
    std::set<Index> seen;
    WordSum out;
    const int cs = m - 2 * n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        if (__builtin_popcountll(mask) != cs) continue;
        Index idx;
        int ab = 0;
        for (int p = 0; p < m; ++p) idx.push_back((mask >> p) & 1u ? c : (ab++ % 2 == 0 ? a : b));
        if (seen.insert(idx).second) out += zi(idx);
    }
    return out;
}

std::vector<VerificationTask> tmn_insertion(int m, int a, int b, int c, unsigned digits) {
    require(a >= 1 && b >= 1 && a + b == 2 * c, "tmn-insertion needs a + b = 2c");
    std::vector<VerificationTask> out;
    std::map<int, WordSum> s_zc; // S(z_c^j)
    auto S_zc = [&](int j) -> const WordSum& {
        auto it = s_zc.find(j);
        if (it == s_zc.end()) it = s_zc.emplace(j, S_map(za_power(c, j))).first;
        return it->second;
    };
    for (int n = 0; 2 * n <= m; ++n) {
        TaskParams params = P({{"m", m}, {"n", n}, {"a", a}, {"b", b}, {"c", c}});
        WordSum rhs;
        // 2j + k + u = 2n, i + k + l + u + v = m, i >= 2j
        for (int j = 0; 2 * j <= 2 * n; ++j)
            for (int k = 0; 2 * j + k <= 2 * n; ++k) {
                const int u = 2 * n - 2 * j - k;
                for (int i = 2 * j; i + k + u <= m; ++i)
                    for (int l = 0; i + k + l + u <= m; ++l) {
                        const int v = m - i - k - l - u;
                        Rational coeff = sign(i + k) * binom(k + l, k) * binom(u + v, u);
                        rhs += stuffle(stuffle(t_mn(i, j, a, b, c), S_zc(k + l)), S_zc(u + v)) * coeff;
                    }
            }
        WordSum T = t_mn(m, n, a, b, c);
        out.push_back(symbolic("tmn-insertion", "S(T_{m,n}) = insertion sum", params, S_map(T), rhs));
        if (a == 3 && b == 1 && c == 2) {
            Params cp{{"m", m}, {"n", n}};
            out.push_back(numeric("tmn-insertion", "Z(T_{m,n}) = closed form", params, z_side("Z(T_{m,n})", T, false),
                                  {"tmn closed form", [cp](unsigned d) { return closed_form("tmn", cp, d).value; }},
                                  digits));
            out.push_back(numeric("tmn-insertion", "Z*(T_{m,n}) = closed form", params,
                                  z_side("Z*(T_{m,n})", T, true),
                                  {"zs_tmn closed form", [cp](unsigned d) { return closed_form("zs_tmn", cp, d).value; }},
                                  digits));
        }
    }
    return out;
}

// ---- insertion lemmas ---------------------------------------------------------------

std::vector<VerificationTask> insertion_4_2(int n, unsigned digits) {
    require(n >= 1, "insertion-4-2 needs n >= 1");
    WordSum lhs;
    for (int m = 0; m <= n - 1; ++m) lhs += zi(join({repeat(2, m), {4}, repeat(2, n - 1 - m)}));
    Rational c = Rational(2 * n * (n + 1), 3);
    NumericSide rhs{to_string(c) + "*zeta({2}^{n+1})", [c, n](unsigned d) { return to_hp(c) * zv(repeat(2, n + 1), d); }};
    return {numeric("insertion-4-2", "sum zeta({2}^m,4,{2}^{n-1-m}) = 2/3 n(n+1) zeta({2}^{n+1})", P({{"n", n}}),
                    z_side("sum zeta({2}^m,4,{2}^{n-1-m})", lhs, false), rhs, digits)};
}

std::vector<VerificationTask> two_m_times_n_2(int n, unsigned digits) {
    require(n >= 1, "2m-times-n-2 needs n >= 1");
    NumericSide lhs{"sum (-1)^m zeta(2m) zeta({2}^{n+1-m})", [n](unsigned d) {
                        HPReal acc = 0;
                        for (int m = 2; m <= n + 1; ++m) {
                            HPReal t = zeta_single(2 * m, d) * zv(repeat(2, n + 1 - m), d);
                            acc += m % 2 ? HPReal(-t) : t;
                        }
                        return acc;
                    }};
    Rational c = Rational(2 * n * (n + 1), 3);
    NumericSide rhs{to_string(c) + "*zeta({2}^{n+1})", [c, n](unsigned d) { return to_hp(c) * zv(repeat(2, n + 1), d); }};
    return {numeric("2m-times-n-2", "alternating sum = 2/3 n(n+1) zeta({2}^{n+1})", P({{"n", n}}), lhs, rhs, digits)};
}

// ---- Brown-Zagier ---------------------------------------------------------------------

Rational brown_zagier_c(int r, int m, int n, bool star) {
    const Rational q = 1 - pow2(-2 * r);
    if (!star) return 2 * sign(r) * (binom(2 * r, 2 * m + 2) - q * binom(2 * r, 2 * n + 1));
    return -2 * (binom(2 * r, 2 * m) - Rational(r == m ? 1 : 0) - q * binom(2 * r, 2 * n + 1));
}

std::vector<VerificationTask> brown_zagier_aggregate(int k, int a, int b) {
    require(k >= 0 && a >= 1 && b >= 1, "brown-zagier aggregate needs k >= 0, a, b >= 1");
    TaskParams params = P({{"k", k}, {"a", a}, {"b", b}});
    WordSum rhs;
    for (int n = 0; n <= k; ++n) rhs += cat(cat(za_power(a, n), z(b)), za_power(a, k - n));
    WordSum c_sum, c_sum_star, alt, plain;
    for (int n = 0; n <= k; ++n) {
        const int m = k - n;
        for (int r = 1; r <= m + n + 1; ++r) {
            const WordSum zr = z(b + (r - 1) * a), tail = za_power(a, m + n + 1 - r);
            c_sum += stuffle(zr, tail) * brown_zagier_c(r, m, n, false);
            c_sum_star += star_stuffle(zr, tail) * brown_zagier_c(r, m, n, true);
        }
    }
    for (int m = 0; m <= k; ++m) {
        alt += stuffle(z(b + m * a), za_power(a, k - m)) * sign(m);
        plain += star_stuffle(z(b + m * a), za_power(a, k - m));
    }
    const std::string name = "brown-zagier:aggregate";
    return {symbolic(name, "sum c^r z_{b+(r-1)a} * z_a^{k+1-r} = sum z_a^n z_b z_a^{k-n}", params, c_sum, rhs),
            symbolic(name, "sum (-1)^m z_{b+ma} * z_a^{k-m} = sum z_a^n z_b z_a^{k-n}", params, alt, rhs),
            symbolic(name, "sum c*^r z_{b+(r-1)a} ** z_a^{k+1-r} = sum z_a^n z_b z_a^{k-n}", params, c_sum_star, rhs),
            symbolic(name, "sum z_{b+ma} ** z_a^{k-m} = sum z_a^n z_b z_a^{k-n}", params, plain, rhs)};
}

std::vector<VerificationTask> brown_zagier_conjecture(int n, int m, unsigned digits) {
    require(n >= 0 && m >= 0, "brown-zagier conjecture needs n, m >= 0");
    TaskParams params = P({{"n", n}, {"m", m}});
    const Index idx = join({repeat(2, n), {3}, repeat(2, m)});
    const std::string name = "brown-zagier:conjecture";
    std::vector<VerificationTask> out;
    for (bool star : {false, true}) {
        NumericSide rhs{star ? "sum c*^r zeta(2r+1) zeta*({2}^{m+n+1-r})" : "sum c^r zeta(2r+1) zeta({2}^{m+n+1-r})",
                        [n, m, star](unsigned d) {
                            HPReal acc = 0;
                            for (int r = 1; r <= m + n + 1; ++r) {
                                Index rest = repeat(2, m + n + 1 - r);
                                acc += to_hp(brown_zagier_c(r, m, n, star)) * zeta_single(2 * r + 1, d) *
                                       (star ? zsv(rest, d) : zv(rest, d));
                            }
                            return acc;
                        }};
        out.push_back(numeric(name, star ? "zeta*({2}^n,3,{2}^m) = display" : "zeta({2}^n,3,{2}^m) = display", params,
                              z_side(index_to_string(idx), zi(idx), star), rhs, digits));
    }
    // the product side linearised by the stuffle product; experimental
    WordSum cand = zi(idx);
    for (int r = 1; r <= m + n + 1; ++r)
        cand -= stuffle(z(2 * r + 1), za_power(2, m + n + 1 - r)) * brown_zagier_c(r, m, n, false);
    out.push_back(membership(name, "z_2^n z_3 z_2^m - sum c^r z_{2r+1} * z_2^{m+n+1-r}", params, cand,
                             2 * (n + m) + 3));
    return out;
}

// ---- catalog ---------------------------------------------------------------------------

namespace {

long scalar(const TaskParams& p, const char* key) {
    auto it = p.find(key);
    if (it == p.end()) throw BadRange(std::string("missing parameter ") + key);
    if (it->second.size() != 1) throw BadRange(std::string("parameter ") + key + " must be a single integer");
    return it->second[0];
}

long scalar_or(const TaskParams& p, const char* key, long fallback) {
    return p.count(key) ? scalar(p, key) : fallback;
}

std::optional<int> optional_scalar(const TaskParams& p, const char* key) {
    if (!p.count(key)) return std::nullopt;
    return static_cast<int>(scalar(p, key));
}

std::vector<int> list(const TaskParams& p, const char* key) {
    auto it = p.find(key);
    if (it == p.end()) throw BadRange(std::string("missing parameter ") + key);
    return std::vector<int>(it->second.begin(), it->second.end());
}

int I(long v) { return static_cast<int>(v); }

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> c;
    auto add = [&](std::string name, std::string schema, std::string summary, auto build) {
        c.push_back({std::move(name), std::move(schema), std::move(summary), build});
    };
    add("hoffman", "index=[k1,...] star=0", "d1 as y sh w - y * w and its expansion; membership of Z(d1 w)",
        [](const TaskParams& p, unsigned) { return hoffman_relation(list(p, "index"), scalar_or(p, "star", 0) != 0); });
    add("sum", "k n", "sum of zeta over admissible indices of weight k, depth n equals zeta(k)",
        [](const TaskParams& p, unsigned d) { return sum_formula(I(scalar(p, "k")), I(scalar(p, "n")), false, d); });
    add("sum-star", "k n", "the same sum of zeta* equals C(k-1,n-1) zeta(k)",
        [](const TaskParams& p, unsigned d) { return sum_formula(I(scalar(p, "k")), I(scalar(p, "n")), true, d); });
    const char* gx[] = {"ast", "shuffle", "s-ast", "s-shuffle"};
    for (int v = 0; v < 4; ++v)
        add(std::string("guo-xie:") + gx[v], "k n", "weighted product sums z_l (.) z_{k1}...z_{k_{n-1}}",
            [v](const TaskParams& p, unsigned) {
                return guo_xie_identity(I(scalar(p, "k")), I(scalar(p, "n")), static_cast<GuoXieVariant>(v));
            });
    add("weighted", "k n=2 star=0", "weighted sum formula with the C weights",
        [](const TaskParams& p, unsigned d) {
            return weighted_sum(I(scalar(p, "k")), I(scalar_or(p, "n", 2)), scalar_or(p, "star", 0) != 0, d);
        });
    add("ohno-zudilin", "k star=0", "sum 2^i zeta(i,k-i) = (k+1) zeta(k) and the star form",
        [](const TaskParams& p, unsigned d) { return ohno_zudilin(I(scalar(p, "k")), scalar_or(p, "star", 0) != 0, d); });
    add("eie-restricted", "a=[..] b=[..] m star=0", "sigma_m and sigma_m-bar displays; membership of the difference",
        [](const TaskParams& p, unsigned) {
            return restricted_sum_eie(list(p, "a"), list(p, "b"), I(scalar(p, "m")), scalar_or(p, "star", 0) != 0);
        });
    const std::pair<const char*, ParityKind> parities[] = {
        {"even", ParityKind::EvenSum},       {"odd", ParityKind::OddSum},     {"alt", ParityKind::AltSum},
        {"star-even", ParityKind::StarEven}, {"star-odd", ParityKind::StarOdd}, {"euler", ParityKind::EulerDecomp},
        {"odd-weight", ParityKind::OddWeightClosed}, {"k1", ParityKind::K1Closed}};
    for (const auto& [suffix, kind] : parities) {
        const ParityKind pk = kind;
        const bool euler = pk == ParityKind::EulerDecomp;
        add(std::string("parity:") + suffix, euler ? "r s" : "k", "double zeta values by parity",
            [pk, euler](const TaskParams& p, unsigned d) {
                return euler ? parity_double(I(scalar(p, "r")), pk, d, I(scalar(p, "s")))
                             : parity_double(I(scalar(p, "k")), pk, d);
            });
    }
    add("sigma-lemma", "k n", "sigma, sigma-star, shuffle-reg and sigma-star-sum displays",
        [](const TaskParams& p, unsigned) { return sigma_lemma(I(scalar(p, "k")), I(scalar(p, "n"))); });
    add("a-b-ast", "a b n", "sum (-1)^m z_{b+ma} * z_a^{n-1-m} and its star form",
        [](const TaskParams& p, unsigned) { return a_b_ast(I(scalar(p, "a")), I(scalar(p, "b")), I(scalar(p, "n"))); });
    const char* hr[] = {"e-h-inverse", "p-relations", "e-ast-f", "e-sast-f", "f-ast-e",
                        "s-n",         "s-inv-n",     "za-ast-n", "za-sast-n", "n-via-products"};
    for (int i = 0; i < 10; ++i)
        add(std::string("hoffman-restricted:") + hr[i], "a degree=4 k? n?", "generating series of restricted sums",
            [i](const TaskParams& p, unsigned) {
                return hoffman_restricted(I(scalar(p, "a")), static_cast<HoffmanItem>(i), I(scalar_or(p, "degree", 4)),
                                          optional_scalar(p, p.count("m") ? "m" : "k"), optional_scalar(p, "n"));
            });
    add("tmn-insertion", "m a=3 b=1 c=2", "S(T_{m,n}) as a stuffle sum; closed forms of Z(T_{m,n})",
        [](const TaskParams& p, unsigned d) {
            return tmn_insertion(I(scalar(p, "m")), I(scalar_or(p, "a", 3)), I(scalar_or(p, "b", 1)),
                                 I(scalar_or(p, "c", 2)), d);
        });
    add("insertion-4-2", "n", "sum zeta({2}^m,4,{2}^{n-1-m})",
        [](const TaskParams& p, unsigned d) { return insertion_4_2(I(scalar(p, "n")), d); });
    add("2m-times-n-2", "n", "sum (-1)^m zeta(2m) zeta({2}^{n+1-m})",
        [](const TaskParams& p, unsigned d) { return two_m_times_n_2(I(scalar(p, "n")), d); });
    add("brown-zagier:aggregate", "k a=2 b=3", "aggregated coefficient identity in h1",
        [](const TaskParams& p, unsigned) {
            return brown_zagier_aggregate(I(scalar(p, "k")), I(scalar_or(p, "a", 2)), I(scalar_or(p, "b", 3)));
        });
    add("brown-zagier:conjecture", "n m", "zeta({2}^n,3,{2}^m) against the odd-zeta expansion",
        [](const TaskParams& p, unsigned d) { return brown_zagier_conjecture(I(scalar(p, "n")), I(scalar(p, "m")), d); });
    return c;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> c = make_catalog();
    return c;
}

const CatalogEntry& catalog_entry(std::string_view name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw ParseError("unknown identity '" + std::string(name) + "'", 0);
}

std::vector<VerificationTask> build_tasks(std::string_view name, const TaskParams& params, unsigned digits) {
    return catalog_entry(name).build(params, digits);
}

} // namespace mzv
