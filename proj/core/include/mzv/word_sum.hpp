#pragma once

#include <mzv/rational.hpp>
#include <mzv/word.hpp>

#include <map>
#include <optional>
#include <string>

namespace mzv {

// A finitely supported Q-linear combination of words. Zero coefficients are
// never stored, so equality is coefficientwise.
class WordSum {
public:
    using container = std::map<Word, Rational>;
    using const_iterator = container::const_iterator;

    WordSum() = default;
    WordSum(const Word& w); // NOLINT: a word is a word sum
    WordSum(const Word& w, const Rational& c);

    static WordSum scalar(const Rational& c) { return WordSum(Word{}, c); }
    static WordSum one() { return scalar(1); }
    static WordSum from_index(const Index& idx) { return WordSum(index_to_word(idx)); }

    void add(const Word& w, const Rational& c);
    Rational coefficient(const Word& w) const;

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const container& terms() const { return terms_; }

    bool in_h1() const;
    bool in_h0() const;
    std::optional<std::size_t> homogeneous_weight() const;
    std::size_t max_weight() const;

    WordSum& operator+=(const WordSum& o);
    WordSum& operator-=(const WordSum& o);
    WordSum& operator*=(const Rational& c);
    WordSum operator-() const;

    friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
    friend WordSum operator-(WordSum a, const WordSum& b) { return a -= b; }
    friend WordSum operator*(WordSum a, const Rational& c) { return a *= c; }
    friend WordSum operator*(const Rational& c, WordSum a) { return a *= c; }
    friend bool operator==(const WordSum& a, const WordSum& b) { return a.terms_ == b.terms_; }

    // "c1*w1 + c2*w2"; the empty word prints as "()", the zero sum as "0".
    std::string str() const;

private:
    container terms_;
};

// Concatenation product of h extended bilinearly.
WordSum concat(const WordSum& a, const WordSum& b);
WordSum concat(const Word& a, const WordSum& b);
WordSum concat(const WordSum& a, const Word& b);

// Term order used by the serializer: by length, then by the order of the
// associated index (lexicographic with y < x on words).
bool serial_less(const Word& a, const Word& b);

} // namespace mzv
