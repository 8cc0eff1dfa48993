#include <mzv/error.hpp>
#include <mzv/expression.hpp>

#include <cctype>

namespace mzv {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    WordSum parse() {
        skip();
        if (s_.substr(i_) == "0") return {};
        WordSum out;
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++i_;
            skip();
        }
        out += term() * Rational(negate ? -1 : 1);
        for (skip(); i_ < s_.size(); skip()) {
            char op = s_[i_];
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++i_;
            skip();
            out += term() * Rational(op == '-' ? -1 : 1);
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

    char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    std::string digits() {
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ == start) fail("expected digits");
        return std::string(s_.substr(start, i_ - start));
    }

    WordSum term() {
        Rational c = 1;
        char p = peek();
        if (p == '-' || std::isdigit(static_cast<unsigned char>(p))) {
            std::string num;
            if (p == '-') {
                num = "-";
                ++i_;
            }
            num += digits();
            if (peek() == '/') {
                ++i_;
                std::size_t at = i_;
                std::string den = digits();
                if (den.find_first_not_of('0') == std::string::npos) {
                    i_ = at;
                    fail("zero denominator");
                }
                num += "/" + den;
            }
            c = parse_rational(num);
            skip();
            if (peek() != '*') fail("expected '*' after coefficient");
            ++i_;
            skip();
        }
        return WordSum(atom(), c);
    }

    Word atom() {
        char p = peek();
        if (p == 'x' || p == 'y') {
            std::size_t start = i_;
            while (peek() == 'x' || peek() == 'y') ++i_;
            if (i_ - start > Word::max_length) {
                i_ = start;
                fail("word longer than 64 letters");
            }
            return Word::from_string(s_.substr(start, i_ - start));
        }
        if (p != '(') fail("expected a word or an index");
        ++i_;
        skip();
        Index idx;
        if (peek() == ')') {
            ++i_;
            return Word{};
        }
        for (;;) {
            skip();
            std::size_t at = i_;
            std::string d = digits();
            if (d.size() > 4 || std::stoi(d) < 1) {
                i_ = at;
                fail("index entries must be positive");
            }
            idx.push_back(std::stoi(d));
            skip();
            if (peek() == ',') {
                ++i_;
                continue;
            }
            if (peek() == ')') {
                ++i_;
                break;
            }
            fail("expected ',' or ')'");
        }
        if (index_weight(idx) > static_cast<int>(Word::max_length)) fail("index weight above 64");
        return index_to_word(idx);
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

} // namespace

WordSum parse_expression(std::string_view text) { return Parser(text).parse(); }

WordSum parse_expression(std::string_view text, Space required) {
    WordSum w = parse_expression(text);
    if (required == Space::H1 && !w.in_h1()) throw NotInH1(w.str());
    if (required == Space::H0 && !w.in_h0()) throw NotInH0(w.str());
    return w;
}

} // namespace mzv
