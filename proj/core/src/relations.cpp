#include <mzv/config.hpp>
#include <mzv/error.hpp>
#include <mzv/maps.hpp>
#include <mzv/products.hpp>
#include <mzv/regularization.hpp>
#include <mzv/relations.hpp>

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_set>

namespace mzv {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Column of an admissible word of length k: the k-2 inner letters as bits.
std::size_t column_of(const Word& w) { return static_cast<std::size_t>(w.bits() >> 1); }

std::string normalized_key(const WordSum& v) {
    Rational lead = v.begin()->second;
    WordSum n = v * (Rational(1) / lead);
    return n.str();
}

void add_if_nonzero(std::vector<RelationVector>& out, int weight, WordSum v, std::string provenance) {
    if (!v.is_zero()) out.push_back(make_relation(weight, std::move(v), std::move(provenance)));
}

using Row = RelationBasis::Row;

// a -= f * b on sorted sparse rows
void axpy(std::vector<std::pair<std::size_t, Rational>>& a, const Rational& f,
          const std::vector<std::pair<std::size_t, Rational>>& b) {
    std::vector<std::pair<std::size_t, Rational>> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(std::move(a[i++]));
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -f * b[j].second);
            ++j;
        } else {
            Rational v = a[i].second - f * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    a = std::move(out);
}

const Rational* find_entry(const std::vector<std::pair<std::size_t, Rational>>& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
    return it != row.end() && it->first == col ? &it->second : nullptr;
}

} // namespace

std::string_view family_name(Family f) {
    switch (f) {
    case Family::FDS: return "FDS";
    case Family::RDS_IV: return "RDS_IV";
    case Family::RDS_V: return "RDS_V";
    case Family::DERIV: return "DERIV";
    case Family::OHNO: return "OHNO";
    case Family::OHNO_STAR: return "OHNO_STAR";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    std::string up(name);
    for (char& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (Family f : {Family::FDS, Family::RDS_IV, Family::RDS_V, Family::DERIV, Family::OHNO, Family::OHNO_STAR})
        if (up == family_name(f)) return f;
    throw ParseError("unknown relation family '" + std::string(name) + "'", 0);
}

FamilySet parse_families(std::string_view list) {
    FamilySet out;
    std::size_t start = 0;
    while (start <= list.size()) {
        std::size_t comma = list.find(',', start);
        std::string_view item = list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (!item.empty()) out.insert(parse_family(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw ParseError("empty family list", 0);
    return out;
}

std::string families_to_string(const FamilySet& fs) {
    std::string s;
    for (Family f : fs) {
        if (!s.empty()) s += ',';
        s += family_name(f);
    }
    return s;
}

RelationVector make_relation(int weight, WordSum entries, std::string provenance) {
    for (const auto& [w, c] : entries)
        if (static_cast<int>(w.size()) != weight || !w.in_h0() || w.empty())
            throw BadRange("relation entry " + w.str() + " is not an admissible word of weight " + std::to_string(weight));
    return {weight, std::move(entries), std::move(provenance)};
}

std::vector<RelationVector> gen_family(int k, Family family) {
    std::vector<RelationVector> out;
    if (k < 2) return out;
    auto uk = static_cast<std::size_t>(k);
    switch (family) {
    case Family::FDS:
        for (std::size_t a = 2; 2 * a <= uk; ++a)
            for (const Word& w1 : enumerate_words(a, Space::H0))
                for (const Word& w2 : enumerate_words(uk - a, Space::H0)) {
                    if (2 * a == uk && w2 < w1) continue;
                    add_if_nonzero(out, k, shuffle(w1, w2) - stuffle(w1, w2), "FDS w1=" + w1.str() + " w2=" + w2.str());
                }
        break;
    case Family::RDS_IV:
        for (std::size_t a = 1; a + 2 <= uk; ++a)
            for (const Word& w1 : enumerate_words(a, Space::H1))
                for (const Word& w0 : enumerate_words(uk - a, Space::H0))
                    add_if_nonzero(out, k, reg(shuffle(w1, w0) - stuffle(w1, w0), Product::Shuffle),
                                   "RDS_IV w1=" + w1.str() + " w0=" + w0.str());
        break;
    case Family::RDS_V:
        for (std::size_t m = 1; m + 2 <= uk; ++m) {
            Word ym = Word::power(Letter::Y, m);
            for (const Word& w0 : enumerate_words(uk - m, Space::H0))
                add_if_nonzero(out, k, reg(stuffle(ym, w0), Product::Shuffle),
                               "RDS_V m=" + std::to_string(m) + " w0=" + w0.str());
        }
        break;
    case Family::DERIV:
        for (std::size_t n = 1; n + 2 <= uk; ++n)
            for (const Word& w0 : enumerate_words(uk - n, Space::H0))
                add_if_nonzero(out, k, partial_n(static_cast<int>(n), w0),
                               "DERIV n=" + std::to_string(n) + " w0=" + w0.str());
        break;
    case Family::OHNO:
        for (std::size_t m = 1; m + 2 <= uk; ++m)
            for (const Word& w0 : enumerate_words(uk - m, Space::H0)) {
                int mi = static_cast<int>(m);
                add_if_nonzero(out, k, ohno_sigma(mi, w0) - ohno_sigma_bar(mi, w0),
                               "OHNO m=" + std::to_string(m) + " w0=" + w0.str());
            }
        break;
    case Family::OHNO_STAR:
        for (std::size_t m = 1; m + 2 <= uk; ++m)
            for (const Word& w0 : enumerate_words(uk - m, Space::H0)) {
                int mi = static_cast<int>(m);
                // Z* = Z o S, so the relation among MZVs is S applied to the star difference
                add_if_nonzero(out, k, S_map(ohno_sigma_star(mi, w0) - ohno_sigma_bar_star(mi, w0)),
                               "OHNO_STAR m=" + std::to_string(m) + " w0=" + w0.str());
            }
        break;
    }
    return out;
}

struct RelationBasis::Tracked {
    std::vector<Row> rows;
    std::vector<std::size_t> row_of_pivot;
    std::vector<std::map<std::size_t, Rational>> combos;
};

RelationBasis::Sparse RelationBasis::to_sparse(const WordSum& v) const {
    Sparse s;
    for (const auto& [w, c] : v) s.emplace(column_of(w), c);
    return s;
}

void RelationBasis::reduce(Sparse& v) const {
    std::vector<std::size_t> pivots;
    for (const auto& [c, val] : v)
        if (row_of_pivot_[c] != npos) pivots.push_back(c);
    for (std::size_t c : pivots) {
        Rational f = v[c];
        for (const auto& [col, val] : rows_[row_of_pivot_[c]].entries) {
            Rational& e = v[col];
            e -= f * val;
            if (e == 0) v.erase(col);
        }
    }
}

bool RelationBasis::insert(Sparse v) {
    reduce(v);
    if (v.empty()) return false;
    Row row;
    row.pivot = v.begin()->first;
    Rational inv = Rational(1) / v.begin()->second;
    for (auto& [c, val] : v) row.entries.emplace_back(c, val * inv);
    for (Row& other : rows_)
        if (const Rational* e = find_entry(other.entries, row.pivot)) {
            Rational f = *e;
            axpy(other.entries, f, row.entries);
        }
    row_of_pivot_[row.pivot] = rows_.size();
    rows_.push_back(std::move(row));
    return true;
}

RelationBasis build_basis(int weight, const FamilySet& families) {
    if (weight < 2) throw BadRange("weight must be >= 2");
    if (weight > config().weight_cap)
        throw BadRange("weight " + std::to_string(weight) + " exceeds the weight cap " + std::to_string(config().weight_cap));
    RelationBasis b;
    b.weight_ = weight;
    b.families_ = families;
    b.columns_ = enumerate_words(static_cast<std::size_t>(weight), Space::H0);
    b.row_of_pivot_.assign(b.columns_.size(), npos);
    std::unordered_set<std::string> seen;
    for (Family f : families)
        for (auto& g : gen_family(weight, f)) {
            ++b.raw_generators_;
            if (!seen.insert(normalized_key(g.entries)).second) continue;
            b.generators_.push_back(std::move(g));
            if (b.insert(b.to_sparse(b.generators_.back().entries))) b.pivot_generators_.push_back(b.generators_.size() - 1);
        }
    std::sort(b.rows_.begin(), b.rows_.end(), [](const Row& x, const Row& y) { return x.pivot < y.pivot; });
    for (std::size_t r = 0; r < b.rows_.size(); ++r) b.row_of_pivot_[b.rows_[r].pivot] = r;
    return b;
}

const RelationBasis::Tracked& RelationBasis::tracked() const {
    std::call_once(*tracked_once_, [this] {
        auto t = std::make_shared<Tracked>();
        t->row_of_pivot.assign(columns_.size(), npos);
        for (std::size_t g : pivot_generators_) {
            Sparse v = to_sparse(generators_[g].entries);
            std::map<std::size_t, Rational> combo{{g, Rational(1)}};
            std::vector<std::size_t> pivots;
            for (const auto& [c, val] : v)
                if (t->row_of_pivot[c] != npos) pivots.push_back(c);
            for (std::size_t c : pivots) {
                Rational f = v[c];
                std::size_t r = t->row_of_pivot[c];
                for (const auto& [col, val] : t->rows[r].entries) {
                    Rational& e = v[col];
                    e -= f * val;
                    if (e == 0) v.erase(col);
                }
                for (const auto& [id, val] : t->combos[r]) {
                    Rational& e = combo[id];
                    e -= f * val;
                    if (e == 0) combo.erase(id);
                }
            }
            Row row;
            row.pivot = v.begin()->first;
            Rational inv = Rational(1) / v.begin()->second;
            for (auto& [c, val] : v) row.entries.emplace_back(c, val * inv);
            for (auto& [id, val] : combo) val *= inv;
            for (std::size_t r = 0; r < t->rows.size(); ++r)
                if (const Rational* e = find_entry(t->rows[r].entries, row.pivot)) {
                    Rational f = *e;
                    axpy(t->rows[r].entries, f, row.entries);
                    for (const auto& [id, val] : combo) {
                        Rational& x = t->combos[r][id];
                        x -= f * val;
                        if (x == 0) t->combos[r].erase(id);
                    }
                }
            t->row_of_pivot[row.pivot] = t->rows.size();
            t->rows.push_back(std::move(row));
            t->combos.push_back(std::move(combo));
        }
        tracked_ = std::move(t);
    });
    return *tracked_;
}

WordSum RelationBasis::row_as_sum(std::size_t r) const {
    WordSum s;
    for (const auto& [c, val] : rows_[r].entries) s.add(columns_[c], val);
    return s;
}

WordSum RelationBasis::combine(const std::map<std::size_t, Rational>& combination) const {
    WordSum s;
    for (const auto& [id, c] : combination) s += generators_.at(id).entries * c;
    return s;
}

MembershipCertificate RelationBasis::membership(const RelationVector& candidate) const {
    if (candidate.weight != weight_)
        throw WeightMismatch("candidate weight " + std::to_string(candidate.weight) + " vs basis weight " + std::to_string(weight_));
    MembershipCertificate cert;
    Sparse v = to_sparse(candidate.entries);
    reduce(v);
    if (!v.empty()) {
        for (const auto& [c, val] : v) cert.residue.add(columns_[c], val);
        return cert;
    }
    cert.member = true;
    if (candidate.entries.is_zero()) return cert;
    const Tracked& t = tracked();
    Sparse u = to_sparse(candidate.entries);
    for (const auto& [c, val] : u) {
        std::size_t r = t.row_of_pivot[c];
        if (r == npos) continue; // non-pivot entries cancel once the pivots are matched
        for (const auto& [id, x] : t.combos[r]) {
            Rational& e = cert.combination[id];
            e += val * x;
            if (e == 0) cert.combination.erase(id);
        }
    }
    return cert;
}

std::size_t quotient_dim(int weight, const FamilySet& families) { return build_basis(weight, families).quotient_dim(); }

RankReport rank_report(int weight, const FamilySet& families) {
    RelationBasis b = build_basis(weight, families);
    RankReport r;
    r.weight = weight;
    r.families = families;
    r.generators = b.generators().size();
    r.rank = b.rank();
    r.quotient_dim = b.quotient_dim();
    r.d_k = zagier_d(static_cast<unsigned>(weight));
    r.match = r.quotient_dim == r.d_k;
    return r;
}

} // namespace mzv
