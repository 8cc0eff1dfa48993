#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace mzv {

enum class Letter : std::uint8_t { X = 0, Y = 1 };

inline Letter swap_letter(Letter a) { return a == Letter::X ? Letter::Y : Letter::X; }
inline char to_char(Letter a) { return a == Letter::X ? 'x' : 'y'; }

// A word of at most 64 letters packed into an integer; the first letter is the
// most significant of the low `size()` bits, so that for a fixed length the
// integer order equals the lexicographic order with x < y.
class Word {
public:
    static constexpr std::size_t max_length = 64;

    Word() = default;
    Word(std::initializer_list<Letter> letters);

    static Word from_string(std::string_view text); // throws ParseError
    static Word power(Letter a, std::size_t n);
    static Word z(int k); // x^{k-1} y
    static Word from_bits(std::uint64_t bits, std::size_t length);

    std::size_t size() const { return len_; }
    std::size_t weight() const { return len_; }
    bool empty() const { return len_ == 0; }
    std::uint64_t bits() const { return bits_; }

    Letter operator[](std::size_t i) const {
        return static_cast<Letter>((bits_ >> (len_ - 1 - i)) & 1u);
    }
    Letter front() const { return (*this)[0]; }
    Letter back() const { return static_cast<Letter>(bits_ & 1u); }

    Word prefix(std::size_t n) const;
    Word suffix_from(std::size_t pos) const; // letters [pos, size)
    Word subword(std::size_t pos, std::size_t n) const;

    Word prepend(Letter a) const;
    Word append(Letter a) const;
    friend Word operator+(const Word& a, const Word& b); // concatenation

    bool in_h1() const { return len_ == 0 || back() == Letter::Y; }
    bool in_h0() const { return len_ == 0 || (front() == Letter::X && back() == Letter::Y); }
    std::size_t count(Letter a) const;
    std::size_t leading(Letter a) const; // length of the maximal prefix a^n

    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    // Canonical order: by length, then lexicographic with x < y.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.len_ <=> b.len_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    std::uint64_t bits_ = 0;
    std::uint8_t len_ = 0;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::uint64_t h = w.bits() * 0x9E3779B97F4A7C15ull ^ (w.size() * 0xC2B2AE3D27D4EB4Full);
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

using Index = std::vector<int>;

Word index_to_word(const Index& idx);
Index word_to_index(const Word& w); // throws NotInH1
int index_weight(const Index& idx);
int index_height(const Index& idx);
std::tuple<int, int, int> weight_depth_height(const Index& idx);
bool is_admissible(const Index& idx);
std::string index_to_string(const Index& idx);

Word dual(const Word& w); // throws NotInH0
Word tau_word(const Word& w); // reverse then swap; defined on all words

enum class Space { H, H1, H0 };

std::vector<Word> enumerate_words(std::size_t weight, Space space);
// Admissible indices of weight k and depth n, in the order of their words.
std::vector<Index> enumerate_indices(int weight, int depth, bool admissible_only = true);
std::vector<Index> compositions(int total, int parts); // parts >= 1 each
std::vector<std::vector<int>> weak_compositions(int total, int parts);

unsigned long long zagier_d(unsigned k);

} // namespace mzv

template <>
struct std::hash<mzv::Word> {
    std::size_t operator()(const mzv::Word& w) const noexcept { return mzv::WordHash{}(w); }
};
