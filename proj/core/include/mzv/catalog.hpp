#pragma once

#include <mzv/hp.hpp>
#include <mzv/relations.hpp>
#include <mzv/word_sum.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

enum class TaskKind { Symbolic, Membership, Numeric };
std::string_view task_kind_name(TaskKind k); // "symbolic", "member", "numeric"
TaskKind parse_task_kind(std::string_view s); // throws ParseError

// Parameters are integer lists so that vector arguments (a=[1,2]) fit the same
// shape as scalars (k=4).
using TaskParams = std::map<std::string, std::vector<long>>;
TaskParams parse_task_params(std::string_view text); // "k=4,n=2,a=[1,1]"; throws ParseError
std::string params_to_string(const TaskParams& p);

struct NumericSide {
    std::string text;
    std::function<HPReal(unsigned)> value;
};

struct VerificationTask {
    TaskKind kind = TaskKind::Symbolic;
    std::string name;  // catalog name
    std::string label; // which display inside the entry
    TaskParams params;

    WordSum lhs, rhs; // Symbolic

    WordSum candidate; // Membership; admissible support of one weight
    int weight = 0;
    FamilySet families{Family::RDS_IV};

    NumericSide lhs_num, rhs_num; // Numeric
    unsigned digits = 0;
};

enum class Verdict { Pass, Fail, Member, NotMember };
std::string_view verdict_name(Verdict v);

struct VerificationReport {
    std::string name;
    std::string label;
    TaskParams params;
    TaskKind kind = TaskKind::Symbolic;
    Verdict verdict = Verdict::Fail;
    std::string residue_or_delta;
    double millis = 0;

    bool ok() const { return verdict == Verdict::Pass || verdict == Verdict::Member; }
};

// Numeric tasks compare against `tolerance`, default tolerance_for(task.digits).
VerificationReport run_task(const VerificationTask& task, std::optional<HPReal> tolerance = std::nullopt);
// Results come back in task order whatever the thread count.
std::vector<VerificationReport> run_tasks(const std::vector<VerificationTask>& tasks, unsigned threads = 1,
                                          std::optional<HPReal> tolerance = std::nullopt);

// Bases used for membership are built once per (weight, families).
const RelationBasis& cached_basis(int weight, const FamilySet& families);

struct CatalogEntry {
    std::string name;
    std::string schema; // parameters with defaults, e.g. "k n star=0"
    std::string summary;
    std::function<std::vector<VerificationTask>(const TaskParams&, unsigned digits)> build;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(std::string_view name); // throws ParseError
std::vector<VerificationTask> build_tasks(std::string_view name, const TaskParams& params, unsigned digits);

// Builders behind the entries.

std::vector<VerificationTask> hoffman_relation(const Index& idx, bool star); // throws NotAdmissible
std::vector<VerificationTask> sum_formula(int k, int n, bool star, unsigned digits);

enum class GuoXieVariant { Ast, Shuffle, SAst, SShuffle };
// The weight function with the edge conventions: an empty range (to = from - 1)
// is 1, a reversed range (to = from - 2) is 1 - k. Indices are 1-based.
Rational guo_xie_c(const Index& ks, int from, int to, int k);
std::vector<VerificationTask> guo_xie_identity(int k, int n, GuoXieVariant v);
std::vector<VerificationTask> weighted_sum(int k, int n, bool star, unsigned digits);
std::vector<VerificationTask> ohno_zudilin(int k, bool star, unsigned digits);

// w0 = x^{a1} y^{b1} ... x^{as} y^{bs}; star uses w0 = S^{-1}(that word).
std::vector<VerificationTask> restricted_sum_eie(const std::vector<int>& a, const std::vector<int>& b, int m, bool star);

enum class ParityKind { EvenSum, OddSum, AltSum, StarEven, StarOdd, EulerDecomp, OddWeightClosed, K1Closed };
// EulerDecomp reads r and s from (k, s); the others use k.
std::vector<VerificationTask> parity_double(int k, ParityKind kind, unsigned digits, int s = 0);

std::vector<VerificationTask> sigma_lemma(int k, int n);
std::vector<VerificationTask> a_b_ast(int a, int b, int n);

enum class HoffmanItem { EHInverse, PRelations, EAstF, ESastF, FAstE, SN, SInvN, ZaAstN, ZaSastN, NViaProducts };
// Series items compare coefficients through t^degree; the N_{k,n} items run
// over all k <= degree unless k (and n) are given.
std::vector<VerificationTask> hoffman_restricted(int a, HoffmanItem item, int degree, std::optional<int> k = {},
                                                 std::optional<int> n = {});
WordSum n_kn(int a, int k, int n); // sum of z_{a k1} ... z_{a kn} over k1 + ... + kn = k

// T_{m,n}: the sum of all index words shuffling {a,b}^n with {c}^{m-2n}.
WordSum t_mn(int m, int n, int a = 3, int b = 1, int c = 2);
std::vector<VerificationTask> tmn_insertion(int m, int a, int b, int c, unsigned digits);

std::vector<VerificationTask> insertion_4_2(int n, unsigned digits);
std::vector<VerificationTask> two_m_times_n_2(int n, unsigned digits);

Rational brown_zagier_c(int r, int m, int n, bool star);
std::vector<VerificationTask> brown_zagier_aggregate(int k, int a, int b);
std::vector<VerificationTask> brown_zagier_conjecture(int n, int m, unsigned digits);

} // namespace mzv
