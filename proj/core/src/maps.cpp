#include <mzv/error.hpp>
#include <mzv/maps.hpp>

#include <charconv>
#include <string>

namespace mzv {

namespace {

// Image of a word under the automorphism y -> s*x + y (s = +1 or -1).
void add_sigma_word(WordSum& out, const Word& w, int s, const Rational& c) {
    std::vector<std::size_t> ys;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == Letter::Y) ys.push_back(i);
    std::uint64_t subsets = 1ull << ys.size();
    for (std::uint64_t m = 0; m < subsets; ++m) {
        std::uint64_t bits = w.bits();
        int flips = 0;
        for (std::size_t j = 0; j < ys.size(); ++j)
            if (m >> j & 1u) {
                bits &= ~(1ull << (w.size() - 1 - ys[j]));
                ++flips;
            }
        Rational coeff = (s < 0 && (flips & 1)) ? Rational(-c) : c;
        out.add(Word::from_bits(bits, w.size()), coeff);
    }
}

WordSum sigma_signed(const WordSum& u, int s) {
    WordSum r;
    for (const auto& [w, c] : u) add_sigma_word(r, w, s, c);
    return r;
}

// S-type maps apply sigma to all but the last letter (head) or only the last (tail).
WordSum S_like(const WordSum& u, int s, bool head) {
    WordSum r;
    for (const auto& [w, c] : u) {
        if (w.empty()) {
            r.add(w, c);
            continue;
        }
        Word body = w.prefix(w.size() - 1);
        Word last = w.suffix_from(w.size() - 1);
        WordSum part;
        if (head) {
            add_sigma_word(part, body, s, c);
            r += concat(part, last);
        } else {
            add_sigma_word(part, last, s, c);
            r += concat(body, part);
        }
    }
    return r;
}

void require_h1(const WordSum& u) {
    for (const auto& [w, c] : u)
        if (!w.in_h1()) throw NotInH1(w.str());
}

void require_h0(const WordSum& u) {
    for (const auto& [w, c] : u)
        if (!w.in_h0()) throw NotInH0(w.str());
}

} // namespace

WordSum sigma(const WordSum& u) { return sigma_signed(u, 1); }
WordSum sigma_inv(const WordSum& u) { return sigma_signed(u, -1); }
WordSum S_map(const WordSum& u) { return S_like(u, 1, true); }
WordSum S_inv(const WordSum& u) { return S_like(u, -1, true); }
WordSum S_tilde(const WordSum& u) { return S_like(u, 1, false); }
WordSum S_tilde_inv(const WordSum& u) { return S_like(u, -1, false); }

WordSum tau(const WordSum& u) {
    WordSum r;
    for (const auto& [w, c] : u) r.add(tau_word(w), c);
    return r;
}

WordSum partial_n(int n, const WordSum& u) {
    if (n < 1) throw BadRange("partial_n needs n >= 1");
    // x (x+y)^{n-1} y
    WordSum image;
    for (const Word& mid : enumerate_words(static_cast<std::size_t>(n - 1), Space::H))
        image.add(Word{Letter::X} + mid + Word{Letter::Y}, 1);
    WordSum r;
    for (const auto& [w, c] : u) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            Rational coeff = w[i] == Letter::X ? c : Rational(-c);
            Word left = w.prefix(i), right = w.suffix_from(i + 1);
            for (const auto& [m, d] : image) r.add(left + m + right, coeff * d);
        }
    }
    return r;
}

WordSum partial_n_star(int n, const WordSum& u) { return S_inv(partial_n(n, S_map(u))); }

WordSum ohno_sigma(int m, const WordSum& u) {
    if (m < 0) throw BadRange("sigma_m needs m >= 0");
    require_h1(u);
    WordSum r;
    for (const auto& [w, c] : u) {
        Index idx = word_to_index(w);
        if (idx.empty()) {
            if (m == 0) r.add(w, c);
            continue;
        }
        for (const auto& eps : weak_compositions(m, static_cast<int>(idx.size()))) {
            Index k = idx;
            for (std::size_t i = 0; i < k.size(); ++i) k[i] += eps[i];
            r.add(index_to_word(k), c);
        }
    }
    return r;
}

WordSum ohno_sigma_bar(int m, const WordSum& u) {
    require_h0(u);
    return tau(ohno_sigma(m, tau(u)));
}

WordSum ohno_sigma_star(int m, const WordSum& u) {
    require_h1(u);
    return S_inv(ohno_sigma(m, S_map(u)));
}

WordSum ohno_sigma_bar_star(int m, const WordSum& u) {
    require_h0(u);
    return S_inv(ohno_sigma_bar(m, S_map(u)));
}

std::vector<std::string_view> map_names() {
    return {"S", "Sinv", "stilde", "stildeinv", "tau", "sigma", "sigmainv",
            "dn:N", "dnstar:N", "ohno:M", "ohnobar:M", "ohnostar:M", "ohnobarstar:M"};
}

WordSum apply_named_map(std::string_view name, const WordSum& u) {
    if (name == "S") return S_map(u);
    if (name == "Sinv") return S_inv(u);
    if (name == "stilde") return S_tilde(u);
    if (name == "stildeinv") return S_tilde_inv(u);
    if (name == "tau") return tau(u);
    if (name == "sigma") return sigma(u);
    if (name == "sigmainv") return sigma_inv(u);
    auto colon = name.find(':');
    if (colon == std::string_view::npos) throw ParseError("unknown map '" + std::string(name) + "'", 0);
    std::string_view head = name.substr(0, colon), arg = name.substr(colon + 1);
    int n = 0;
    auto [p, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
    if (ec != std::errc{} || p != arg.data() + arg.size())
        throw ParseError("bad map parameter '" + std::string(arg) + "'", colon + 1);
    if (head == "dn") return partial_n(n, u);
    if (head == "dnstar") return partial_n_star(n, u);
    if (head == "ohno") return ohno_sigma(n, u);
    if (head == "ohnobar") return ohno_sigma_bar(n, u);
    if (head == "ohnostar") return ohno_sigma_star(n, u);
    if (head == "ohnobarstar") return ohno_sigma_bar_star(n, u);
    throw ParseError("unknown map '" + std::string(name) + "'", 0);
}

} // namespace mzv
