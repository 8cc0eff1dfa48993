#include <mzv/word_sum.hpp>

#include <algorithm>
#include <vector>

namespace mzv {

WordSum::WordSum(const Word& w) { terms_.emplace(w, Rational(1)); }

WordSum::WordSum(const Word& w, const Rational& c) { add(w, c); }

void WordSum::add(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational WordSum::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool WordSum::in_h1() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.in_h1(); });
}

bool WordSum::in_h0() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.in_h0(); });
}

std::optional<std::size_t> WordSum::homogeneous_weight() const {
    if (terms_.empty()) return std::nullopt;
    std::size_t w = terms_.begin()->first.size();
    // map order is graded, so first and last bound the weights
    if (terms_.rbegin()->first.size() != w) return std::nullopt;
    return w;
}

std::size_t WordSum::max_weight() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

WordSum& WordSum::operator+=(const WordSum& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

WordSum& WordSum::operator-=(const WordSum& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

WordSum& WordSum::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

WordSum WordSum::operator-() const {
    WordSum r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

bool serial_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() > b.bits();
}

std::string WordSum::str() const {
    if (terms_.empty()) return "0";
    std::vector<const container::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return serial_less(a->first, b->first); });
    std::string out;
    bool first = true;
    for (const auto* t : order) {
        Rational c = t->second;
        if (first) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        first = false;
        std::string word = t->first.empty() ? "()" : t->first.str();
        out += c == 1 ? word : to_string(c) + "*" + word;
    }
    return out;
}

WordSum concat(const WordSum& a, const WordSum& b) {
    WordSum r;
    for (const auto& [u, c] : a)
        for (const auto& [v, d] : b) r.add(u + v, c * d);
    return r;
}

WordSum concat(const Word& a, const WordSum& b) {
    WordSum r;
    for (const auto& [v, d] : b) r.add(a + v, d);
    return r;
}

WordSum concat(const WordSum& a, const Word& b) {
    WordSum r;
    for (const auto& [u, c] : a) r.add(u + b, c);
    return r;
}

} // namespace mzv
