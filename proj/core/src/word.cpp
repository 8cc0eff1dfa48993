#include <mzv/error.hpp>
#include <mzv/word.hpp>

#include <algorithm>
#include <bit>

namespace mzv {

namespace {

void check_length(std::size_t n) {
    if (n > Word::max_length) throw BadRange("word longer than 64 letters");
}

std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~0ull : ((1ull << n) - 1); }

} // namespace

Word::Word(std::initializer_list<Letter> letters) {
    check_length(letters.size());
    for (Letter a : letters) bits_ = (bits_ << 1) | static_cast<std::uint64_t>(a);
    len_ = static_cast<std::uint8_t>(letters.size());
}

Word Word::from_string(std::string_view text) {
    check_length(text.size());
    Word w;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c != 'x' && c != 'y') throw ParseError("expected letter x or y", i);
        w.bits_ = (w.bits_ << 1) | (c == 'y' ? 1u : 0u);
    }
    w.len_ = static_cast<std::uint8_t>(text.size());
    return w;
}

Word Word::power(Letter a, std::size_t n) {
    check_length(n);
    return from_bits(a == Letter::Y ? low_mask(n) : 0, n);
}

Word Word::z(int k) {
    if (k < 1) throw BadRange("z_k needs k >= 1");
    return power(Letter::X, static_cast<std::size_t>(k - 1)).append(Letter::Y);
}

Word Word::from_bits(std::uint64_t bits, std::size_t length) {
    check_length(length);
    Word w;
    w.bits_ = bits & low_mask(length);
    w.len_ = static_cast<std::uint8_t>(length);
    return w;
}

Word Word::prefix(std::size_t n) const {
    n = std::min<std::size_t>(n, len_);
    return from_bits(n == 0 ? 0 : bits_ >> (len_ - n), n);
}

Word Word::suffix_from(std::size_t pos) const {
    pos = std::min<std::size_t>(pos, len_);
    return from_bits(bits_, len_ - pos);
}

Word Word::subword(std::size_t pos, std::size_t n) const { return suffix_from(pos).prefix(n); }

Word Word::prepend(Letter a) const {
    check_length(len_ + 1u);
    Word w = *this;
    if (a == Letter::Y) w.bits_ |= (1ull << len_);
    ++w.len_;
    return w;
}

Word Word::append(Letter a) const {
    check_length(len_ + 1u);
    Word w;
    w.bits_ = (bits_ << 1) | static_cast<std::uint64_t>(a);
    w.len_ = static_cast<std::uint8_t>(len_ + 1);
    return w;
}

Word operator+(const Word& a, const Word& b) {
    check_length(a.size() + b.size());
    if (b.empty()) return a;
    return Word::from_bits((a.bits_ << b.len_) | b.bits_, a.size() + b.size());
}

std::size_t Word::count(Letter a) const {
    auto ys = static_cast<std::size_t>(std::popcount(bits_));
    return a == Letter::Y ? ys : len_ - ys;
}

std::size_t Word::leading(Letter a) const {
    std::size_t n = 0;
    while (n < len_ && (*this)[n] == a) ++n;
    return n;
}

std::string Word::str() const {
    std::string s(len_, 'x');
    for (std::size_t i = 0; i < len_; ++i) s[i] = to_char((*this)[i]);
    return s;
}

Word index_to_word(const Index& idx) {
    Word w;
    for (int k : idx) {
        if (k < 1) throw BadRange("index parts must be >= 1");
        w = w + Word::z(k);
    }
    return w;
}

Index word_to_index(const Word& w) {
    if (!w.in_h1()) throw NotInH1(w.str());
    Index idx;
    int run = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        ++run;
        if (w[i] == Letter::Y) {
            idx.push_back(run);
            run = 0;
        }
    }
    return idx;
}

int index_weight(const Index& idx) {
    int s = 0;
    for (int k : idx) s += k;
    return s;
}

int index_height(const Index& idx) {
    return static_cast<int>(std::count_if(idx.begin(), idx.end(), [](int k) { return k >= 2; }));
}

std::tuple<int, int, int> weight_depth_height(const Index& idx) {
    return {index_weight(idx), static_cast<int>(idx.size()), index_height(idx)};
}

bool is_admissible(const Index& idx) { return idx.empty() || idx.front() >= 2; }

std::string index_to_string(const Index& idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(idx[i]);
    }
    return s + ")";
}

Word tau_word(const Word& w) {
    Word r;
    for (std::size_t i = w.size(); i-- > 0;) r = r.append(swap_letter(w[i]));
    return r;
}

Word dual(const Word& w) {
    if (!w.in_h0()) throw NotInH0(w.str());
    return tau_word(w);
}

std::vector<Word> enumerate_words(std::size_t weight, Space space) {
    std::vector<Word> out;
    if (weight == 0) {
        out.emplace_back();
        return out;
    }
    if (weight > 30) throw BadRange("enumeration weight too large");
    if (space == Space::H0 && weight < 2) return out;
    std::size_t free = weight - (space == Space::H ? 0 : space == Space::H1 ? 1 : 2);
    for (std::uint64_t m = 0; m < (1ull << free); ++m) {
        std::uint64_t bits = m;
        if (space != Space::H) bits = (bits << 1) | 1u;
        out.push_back(Word::from_bits(bits, weight)); // h0: leading x is the implicit 0 bit
    }
    return out;
}

std::vector<Index> compositions(int total, int parts) {
    std::vector<Index> out;
    if (parts == 0) {
        if (total == 0) out.emplace_back();
        return out;
    }
    if (parts < 0 || total < parts) return out;
    Index cur(static_cast<std::size_t>(parts), 1);
    // enumerate by recursion on the first part
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == parts - 1) {
            cur[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int k = 1; k <= remaining - (parts - 1 - pos); ++k) {
            cur[static_cast<std::size_t>(pos)] = k;
            rec(pos + 1, remaining - k);
        }
    };
    rec(0, total);
    return out;
}

std::vector<std::vector<int>> weak_compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    for (auto& c : compositions(total + parts, parts)) {
        for (int& k : c) --k;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Index> enumerate_indices(int weight, int depth, bool admissible_only) {
    std::vector<Index> out;
    for (auto& c : compositions(weight, depth))
        if (!admissible_only || is_admissible(c)) out.push_back(std::move(c));
    std::sort(out.begin(), out.end(),
              [](const Index& a, const Index& b) { return index_to_word(a) < index_to_word(b); });
    return out;
}

unsigned long long zagier_d(unsigned k) {
    std::vector<unsigned long long> d{1, 0, 1};
    while (d.size() <= k) d.push_back(d[d.size() - 2] + d[d.size() - 3]);
    return d[k];
}

} // namespace mzv
