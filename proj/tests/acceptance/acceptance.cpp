// One line per acceptance criterion; exit status 0 only if all pass.
#include <mzv/catalog.hpp>
#include <mzv/closed_forms.hpp>
#include <mzv/generating.hpp>
#include <mzv/maps.hpp>
#include <mzv/mzv_eval.hpp>
#include <mzv/products.hpp>
#include <mzv/regularization.hpp>
#include <mzv/relations.hpp>

#include "random_words.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace mzv;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::size_t checks = 0;
    std::string first_failure;

    void check(bool good, const std::string& what) {
        ++checks;
        if (!good && ok) first_failure = what;
        ok = ok && good;
    }
    void absorb(const std::vector<VerificationReport>& reports) {
        for (const auto& r : reports)
            check(r.ok(), r.name + " [" + params_to_string(r.params) + "] " + r.label + ": " + r.residue_or_delta);
    }
};

WordSum z(int k) { return WordSum(Word::z(k)); }

// Runs `body` against a wall-clock budget; a body that is correct but too slow fails.
bool criterion(int id, const char* title, double budget_seconds, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_time = secs < budget_seconds;
    const bool pass = o.ok && in_time;
    std::ostringstream line;
    line << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << title << "  (" << o.checks
         << " checks, " << secs << " s, budget " << budget_seconds << " s)";
    if (!o.ok) line << "  first failure: " << o.first_failure.substr(0, 300);
    else if (!in_time) line << "  over time budget";
    std::cout << line.str() << std::endl;
    return pass;
}

std::vector<VerificationTask> only(std::vector<VerificationTask> tasks, std::initializer_list<TaskKind> kinds) {
    std::erase_if(tasks, [&](const VerificationTask& t) {
        return std::find(kinds.begin(), kinds.end(), t.kind) == kinds.end();
    });
    return tasks;
}

void append(std::vector<VerificationTask>& to, std::vector<VerificationTask> more) {
    to.insert(to.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

constexpr unsigned digits = 40;

void numeric_close(Outcome& o, const HPReal& lhs, const HPReal& rhs, const std::string& what) {
    const HPReal tol("1e-30");
    HPReal d = abs_diff(lhs, rhs);
    o.check(d < tol, what + " delta=" + to_decimal(d, 3));
}

HPReal zeta_of_sum(const WordSum& w, bool star) { return star ? z_star_value(w, digits) : z_value(w, digits); }

WordSum repeated(const Index& block, int n) {
    Index idx;
    for (int i = 0; i < n; ++i) idx.insert(idx.end(), block.begin(), block.end());
    return WordSum::from_index(idx);
}

void numeric_suite(Outcome& o) {
    PrecisionGuard g(working_digits(digits));
    const HPReal pi = hp_pi();
    numeric_close(o, zeta({2}, digits), pi * pi / 6, "zeta(2)");

    for (int n = 1; n <= 6; ++n) {
        HPReal lhs = z_value(repeated({2}, n), digits);
        numeric_close(o, lhs, pi_power(2 * n) / to_hp(factorial(2 * n + 1)), "zeta({2}^n) n=" + std::to_string(n));
        numeric_close(o, lhs, closed_form("z2_n", {{"n", n}}, digits).value, "z2_n n=" + std::to_string(n));
        HPReal star = z_star_value(repeated({2}, n), digits);
        HPReal rhs = 2 * (1 - pow(HPReal(2), 1 - 2 * n)) * zeta_single(2 * n, digits);
        numeric_close(o, star, rhs, "zeta*({2}^n) n=" + std::to_string(n));
        numeric_close(o, star, closed_form("zs2_n", {{"n", n}}, digits).value, "zs2_n n=" + std::to_string(n));
    }
    for (int n = 1; n <= 3; ++n) {
        HPReal lhs = z_value(repeated({4}, n), digits);
        numeric_close(o, lhs, pow(HPReal(2), 2 * n + 1) * pi_power(4 * n) / to_hp(factorial(4 * n + 2)),
                      "zeta({4}^n) n=" + std::to_string(n));
        numeric_close(o, lhs, closed_form("z4_n", {{"n", n}}, digits).value, "z4_n n=" + std::to_string(n));
    }
    for (int n = 1; n <= 2; ++n) {
        numeric_close(o, z_value(repeated({3, 1}, n), digits), closed_form("z31_n", {{"n", n}}, digits).value,
                      "zeta({3,1}^n) n=" + std::to_string(n));
        WordSum t = t_mn(2 * n + 1, n);
        numeric_close(o, z_value(t, digits), closed_form("t_2n1_n", {{"n", n}}, digits).value,
                      "zeta(T_{2n+1,n}) n=" + std::to_string(n));
        numeric_close(o, z_star_value(t, digits), closed_form("zs_t_2n1_n", {{"n", n}}, digits).value,
                      "zeta*(T_{2n+1,n}) n=" + std::to_string(n));
    }

    std::vector<VerificationTask> tasks;
    for (int k = 3; k <= 9; ++k) {
        append(tasks, only(ohno_zudilin(k, false, digits), {TaskKind::Numeric}));
        append(tasks, only(ohno_zudilin(k, true, digits), {TaskKind::Numeric}));
    }
    for (int k = 4; k <= 10; k += 2)
        for (ParityKind p : {ParityKind::EvenSum, ParityKind::OddSum, ParityKind::StarEven, ParityKind::StarOdd})
            append(tasks, only(parity_double(k, p, digits), {TaskKind::Numeric}));
    for (int k : {5, 7}) append(tasks, only(parity_double(k, ParityKind::OddWeightClosed, digits), {TaskKind::Numeric}));
    for (int n = 1; n <= 4; ++n) {
        append(tasks, only(insertion_4_2(n, digits), {TaskKind::Numeric}));
        append(tasks, only(two_m_times_n_2(n, digits), {TaskKind::Numeric}));
    }
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; n + m <= 3; ++m) append(tasks, only(brown_zagier_conjecture(n, m, digits), {TaskKind::Numeric}));
    const std::size_t before = o.checks;
    o.absorb(run_tasks(tasks, 1, HPReal("1e-30")));
    o.check(o.checks - before > 0, "catalog numeric tasks present");

    // Le-Murakami: signed sum over weight 2k and height s
    for (int k = 1; k <= 4; ++k)
        for (int s = 1; s <= k; ++s) {
            HPReal lhs = 0;
            for (int n = 1; n <= 2 * k; ++n)
                for (const Index& idx : enumerate_indices(2 * k, n))
                    if (std::get<2>(weight_depth_height(idx)) == s) lhs += (n % 2 ? -1 : 1) * zeta(idx, digits);
            numeric_close(o, lhs, closed_form("le_murakami", {{"k", k}, {"s", s}}, digits).value,
                          "le_murakami k=" + std::to_string(k) + " s=" + std::to_string(s));
        }

    for (int k = 1; k <= 6; ++k)
        for (int n = 1; n <= k; ++n) {
            const WordSum e = n_kn(2, k, n);
            const std::string tag = " k=" + std::to_string(k) + " n=" + std::to_string(n);
            HPReal lhs = zeta_of_sum(e, false);
            numeric_close(o, lhs, closed_form("res_hoffman", {{"k", k}, {"n", n}}, digits).value, "res_hoffman" + tag);
            numeric_close(o, zeta_of_sum(e, true), closed_form("res_hoffman", {{"k", k}, {"n", n}, {"star", 1}}, digits).value,
                          "res_hoffman star" + tag);
            for (long form : {1L, 2L})
                numeric_close(o, lhs, closed_form("res_two_forms", {{"k", k}, {"n", n}, {"form", form}}, digits).value,
                              "res_two_forms form " + std::to_string(form) + tag);
        }
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= k; ++n)
            for (long star : {0L, 1L}) {
                const std::string tag = " m=2 k=" + std::to_string(k) + " n=" + std::to_string(n) + " star=" + std::to_string(star);
                ClosedForm cf = closed_form("res_2a", {{"m", 2}, {"k", k}, {"n", n}, {"star", star}}, digits);
                o.check(cf.complex_route && cf.reconstructed && cf.coefficient.has_value(), "res_2a reconstruction" + tag);
                o.check(abs(cf.imaginary) < HPReal("1e-30"), "res_2a imaginary part" + tag);
                numeric_close(o, zeta_of_sum(n_kn(4, k, n), star != 0), cf.value, "res_2a" + tag);
            }
}

void generating_suite(Outcome& o) {
    auto run = [&](std::string_view name, Params p, int degree, std::optional<HPReal> tol = std::nullopt) {
        GeneratingReport r = generating_check(name, p, degree, digits, tol);
        std::ostringstream what;
        what << name << " degree " << degree;
        for (const auto& [k, v] : p) what << " " << k << "=" << v;
        if (!r.mismatches.empty()) what << ": " << r.mismatches.front();
        o.check(r.passed && r.compared > 0, what.str());
    };
    const HPReal loose("1e-25");
    for (long k : {2L, 3L}) {
        run("kn_nk", {{"k", k}}, 6);
        run("mzv_mzsv_inverse", {{"k", k}}, 5);
    }
    run("reflection", {}, 8);
    for (long k = 1; k <= 3; ++k) run("gen_2k", {{"k", k}}, 12, loose);
    run("ohno_zagier", {}, 8, loose);
    run("aomoto", {}, 7);
    run("g_over_f", {}, 6);
    GeneratingReport b = generating_check("bernoulli_corollary", {}, 12, digits);
    o.check(b.passed && b.exact, "bernoulli_corollary exact through 12");
}

void symbolic_suite(Outcome& o) {
    std::vector<VerificationTask> tasks;
    for (int k = 3; k <= 8; ++k)
        for (int n = 2; n < k; ++n)
            for (auto v : {GuoXieVariant::Ast, GuoXieVariant::Shuffle, GuoXieVariant::SAst, GuoXieVariant::SShuffle})
                append(tasks, guo_xie_identity(k, n, v));
    for (int k = 2; k <= 10; ++k)
        for (int n = 1; n < k; ++n) append(tasks, sigma_lemma(k, n));
    for (int k = 2; k <= 6; ++k)
        for (int n = 1; n < k; ++n)
            for (const Index& idx : enumerate_indices(k, n))
                for (bool star : {false, true}) append(tasks, hoffman_relation(idx, star));
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int n = 1; n <= 4; ++n) append(tasks, a_b_ast(a, b, n));
    // w0 = x^{a1} y^{b1} ... x^{as} y^{bs}; weight of the image is |w0| + m
    for (int s = 1; s <= 2; ++s)
        for (int m = 0; m <= 2; ++m)
            for (int len = 2 * s; len + m <= 8; ++len)
                for (const auto& parts : compositions(len, 2 * s)) {
                    std::vector<int> a, b;
                    for (int i = 0; i < s; ++i) {
                        a.push_back(parts[2 * i]);
                        b.push_back(parts[2 * i + 1]);
                    }
                    for (bool star : {false, true}) append(tasks, restricted_sum_eie(a, b, m, star));
                }
    for (int a = 1; a <= 3; ++a)
        for (HoffmanItem item : {HoffmanItem::EHInverse, HoffmanItem::PRelations, HoffmanItem::EAstF, HoffmanItem::ESastF,
                                 HoffmanItem::FAstE, HoffmanItem::SN, HoffmanItem::SInvN, HoffmanItem::ZaAstN,
                                 HoffmanItem::ZaSastN})
            append(tasks, hoffman_restricted(a, item, 5));
    for (int m = 1; m <= 5; ++m) append(tasks, only(tmn_insertion(m, 3, 1, 2, digits), {TaskKind::Symbolic}));
    for (auto [a, b] : {std::pair{2, 3}, std::pair{2, 1}, std::pair{1, 2}})
        for (int k = 1; k <= 4; ++k) append(tasks, brown_zagier_aggregate(k, a, b));
    tasks = only(std::move(tasks), {TaskKind::Symbolic});
    o.absorb(run_tasks(tasks, 1));
}

void property_suite(Outcome& o) {
    using mzv::testing::WordGen;
    const int cases = mzv::testing::property_cases;
    auto law = [&](const char* name, std::uint64_t seed, const std::function<bool(WordGen&)>& one) {
        WordGen g(seed);
        int failed = 0;
        for (int i = 0; i < cases; ++i) failed += !one(g);
        o.check(failed == 0, std::string(name) + ": " + std::to_string(failed) + " of " + std::to_string(cases) + " failed");
    };
    for (Product p : {Product::Shuffle, Product::Stuffle, Product::StarShuffle, Product::StarStuffle}) {
        const bool h1 = p == Product::Stuffle || p == Product::StarStuffle;
        law(("commutativity/associativity " + std::string(product_name(p))).c_str(), 100 + static_cast<int>(p),
            [&](WordGen& g) {
                auto pick = [&](std::size_t w) { return h1 ? g.h1_word(w) : g.word(w); };
                const int a = g.uniform(1, 3), b = g.uniform(1, 3), c = g.uniform(1, 8 - a - b);
                Word u = pick(a), v = pick(b), t = pick(c);
                WordSum uv = product(p, u, v);
                return uv == product(p, v, u) && product(p, uv, t) == product(p, u, product(p, v, t));
            });
    }
    law("S, S~, sigma inverse laws", 110, [](WordGen& g) {
        WordSum u = g.any_sum(4, 8);
        return S_inv(S_map(u)) == u && S_map(S_inv(u)) == u && S_tilde_inv(S_tilde(u)) == u &&
               S_tilde(S_tilde_inv(u)) == u && sigma_inv(sigma(u)) == u && sigma(sigma_inv(u)) == u;
    });
    law("S conjugates star-stuffle to stuffle", 111, [](WordGen& g) {
        const int a = g.uniform(1, 4);
        Word u = g.h1_word(a), v = g.h1_word(g.uniform(1, 8 - a));
        return S_map(star_stuffle(u, v)) == stuffle(S_map(u), S_map(v));
    });
    law("S conjugates star-shuffle to shuffle", 112, [](WordGen& g) {
        const int a = g.uniform(1, 4);
        Word u = g.word(a), v = g.word(g.uniform(1, 8 - a));
        return S_map(star_shuffle(u, v)) == shuffle(S_map(u), S_map(v));
    });
    law("tau is a shuffle automorphism", 113, [](WordGen& g) {
        const int a = g.uniform(1, 4);
        Word u = g.word(a), v = g.word(g.uniform(1, 8 - a));
        return tau(shuffle(u, v)) == shuffle(tau(u), tau(v));
    });
    law("Leibniz law for d_n", 114, [](WordGen& g) {
        const int n = g.uniform(1, 3), a = g.uniform(0, 4), b = g.uniform(0, std::max(0, 8 - n - a));
        Word u = g.word(a), v = g.word(b);
        return partial_n(n, u + v) == concat(partial_n(n, u), v) + concat(u, partial_n(n, v));
    });
    law("left S~-derivation law for d_n*", 115, [](WordGen& g) {
        const int n = g.uniform(1, 3), a = g.uniform(1, 4), b = g.uniform(1, std::max(1, 8 - n - a));
        Word u = g.word(a), v = g.word(b);
        return partial_n_star(n, u + v) ==
               concat(S_tilde_inv(partial_n_star(n, S_tilde(u))), v) + concat(u, partial_n_star(n, v));
    });
    law("duality is an involution", 116, [](WordGen& g) {
        Word w = g.h0_word(g.uniform(2, 8));
        return dual(dual(w)) == w && tau(tau(WordSum(w))) == WordSum(w);
    });
    PrecisionGuard guard(working_digits(30));
    const HPReal tol = pow(HPReal(10), -25);
    law("numeric stuffle consistency", 117, [&](WordGen& g) {
        const int a = g.uniform(2, 6);
        Word u = g.h0_word(a), v = g.h0_word(g.uniform(2, 8 - a));
        return abs_diff(zeta_word(u, 30) * zeta_word(v, 30), z_value(stuffle(u, v), 30)) < tol;
    });
}

} // namespace

int main() {
    bool all = true;

    all &= criterion(1, "product examples", 0.001, [](Outcome& o) {
        clear_product_cache();
        o.check(shuffle(z(2), z(2)) == concat(z(2), z(2)) * Rational(2) + concat(z(3), z(1)) * Rational(4),
                "shuffle(z2,z2) = 2 z2z2 + 4 z3z1");
        o.check(stuffle(z(2), z(2)) == concat(z(2), z(2)) * Rational(2) + z(4), "stuffle(z2,z2) = 2 z2z2 + z4");
    });

    all &= criterion(2, "Euler relation derivation", 0.010, [](Outcome& o) {
        WordSum y(Word::from_string("y"));
        o.check(reg(shuffle(y, z(2)) - stuffle(y, z(2)), Product::Shuffle) == concat(z(2), z(1)) - z(3),
                "reg_sh(y sh z2 - y * z2) = z2z1 - z3");
        auto tasks = only(sum_formula(3, 2, false, digits), {TaskKind::Membership});
        o.check(tasks.size() == 1, "one membership task for the (3,2) sum formula");
        for (const auto& r : run_tasks(tasks)) o.check(r.verdict == Verdict::Member, "sum formula (3,2) is MEMBER");
    });

    all &= criterion(3, "dimension table k = 2..10 against d_k", 300, [](Outcome& o) {
        const unsigned long long expected_d[] = {1, 1, 1, 2, 2, 3, 4, 5, 7};
        unsigned long long d[11] = {1, 0, 1};
        for (int k = 3; k <= 10; ++k) d[k] = d[k - 2] + d[k - 3];
        for (int k = 2; k <= 10; ++k) {
            const std::size_t q = quotient_dim(k, {Family::RDS_IV});
            o.check(q == expected_d[k - 2] && q == d[k] && zagier_d(k) == d[k],
                    "k=" + std::to_string(k) + " quotient " + std::to_string(q) + " d_k " + std::to_string(d[k]));
        }
    });

    all &= criterion(4, "DERIV and OHNO generators lie in RDS_IV, weights 4..7", 60, [](Outcome& o) {
        for (int k = 4; k <= 7; ++k) {
            const RelationBasis& b = cached_basis(k, {Family::RDS_IV});
            for (Family f : {Family::DERIV, Family::OHNO}) {
                auto gens = gen_family(k, f);
                o.check(!gens.empty(), std::string(family_name(f)) + " empty at weight " + std::to_string(k));
                for (const auto& g : gens) o.check(b.membership(g).member, g.provenance + " not a member");
            }
        }
    });

    all &= criterion(5, "symbolic identity suite, exact", 600, symbolic_suite);
    all &= criterion(6, "numeric suite, 40 digits, tolerance 1e-30", 600, numeric_suite);
    all &= criterion(7, "generating-function suite", 600, generating_suite);
    all &= criterion(8, "property suite, seeded, weights <= 8", 600, property_suite);

    std::cout << (all ? "all criteria passed" : "some criteria FAILED") << std::endl;
    return all ? 0 : 1;
}
