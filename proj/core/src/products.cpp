#include <mzv/error.hpp>
#include <mzv/products.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace mzv {

namespace {

struct PairKey {
    Word u, v;
    bool operator==(const PairKey&) const = default;
};

struct PairHash {
    std::size_t operator()(const PairKey& k) const noexcept {
        std::size_t a = WordHash{}(k.u), b = WordHash{}(k.v);
        return a ^ (b + 0x9E3779B97F4A7C15ull + (a << 6) + (a >> 2));
    }
};

using Entry = std::shared_ptr<const IntTerms>;

struct Memo {
    std::shared_mutex mutex;
    std::array<std::unordered_map<PairKey, Entry, PairHash>, 4> tables;
};

Memo& memo() {
    static Memo m;
    return m;
}

std::atomic<std::size_t> cache_limit{1u << 19};
std::atomic<std::size_t> cache_entries{0};

bool is_star(Product p) { return p == Product::StarShuffle || p == Product::StarStuffle; }
bool is_stuffle_like(Product p) { return p == Product::Stuffle || p == Product::StarStuffle; }

class Accumulator {
public:
    void add(const Word& w, std::int64_t c) {
        if (c != 0) acc_[w] += c;
    }
    void add_prefixed(const Word& head, const IntTerms& terms, std::int64_t sign = 1) {
        for (const auto& [w, c] : terms) add(head + w, sign * c);
    }
    IntTerms finish() {
        IntTerms out;
        out.reserve(acc_.size());
        for (const auto& [w, c] : acc_)
            if (c != 0) out.emplace_back(w, c);
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

private:
    std::unordered_map<Word, std::int64_t, WordHash> acc_;
};

Entry single(const Word& w) { return std::make_shared<const IntTerms>(IntTerms{{w, 1}}); }

std::size_t first_block(const Word& w) { return w.leading(Letter::X) + 1; }

Entry compute(Product p, const Word& u, const Word& v);

Entry lookup(Product p, const Word& u, const Word& v) {
    if (u.empty()) return single(v);
    if (v.empty()) return single(u);
    PairKey key = u < v ? PairKey{u, v} : PairKey{v, u}; // all four products commute
    auto& table = memo().tables[static_cast<std::size_t>(p)];
    bool use_cache = cache_limit.load(std::memory_order_relaxed) > 0;
    if (use_cache) {
        std::shared_lock lock(memo().mutex);
        if (auto it = table.find(key); it != table.end()) return it->second;
    }
    Entry e = compute(p, key.u, key.v);
    if (use_cache && cache_entries.load(std::memory_order_relaxed) < cache_limit.load(std::memory_order_relaxed)) {
        std::unique_lock lock(memo().mutex);
        if (table.emplace(key, e).second) cache_entries.fetch_add(1, std::memory_order_relaxed);
    }
    return e;
}

Entry compute(Product p, const Word& u, const Word& v) {
    Accumulator acc;
    if (!is_stuffle_like(p)) {
        Letter a = u.front(), b = v.front();
        Word ut = u.suffix_from(1), vt = v.suffix_from(1);
        acc.add_prefixed(Word{a}, *lookup(p, ut, v));
        acc.add_prefixed(Word{b}, *lookup(p, u, vt));
        if (is_star(p)) {
            // rho(x) = 0, rho(y) = x
            if (ut.empty() && a == Letter::Y) acc.add(Word{Letter::X} + v, -1);
            if (vt.empty() && b == Letter::Y) acc.add(Word{Letter::X} + u, -1);
        }
    } else {
        std::size_t k = first_block(u), l = first_block(v);
        Word ut = u.suffix_from(k), vt = v.suffix_from(l);
        acc.add_prefixed(u.prefix(k), *lookup(p, ut, v));
        acc.add_prefixed(v.prefix(l), *lookup(p, u, vt));
        acc.add_prefixed(Word::z(static_cast<int>(k + l)), *lookup(p, ut, vt), is_star(p) ? -1 : 1);
    }
    return std::make_shared<const IntTerms>(acc.finish());
}

void require_h1(const WordSum& s) {
    for (const auto& [w, c] : s)
        if (!w.in_h1()) throw NotInH1(w.str());
}

} // namespace

std::string_view product_name(Product p) {
    switch (p) {
    case Product::Shuffle: return "shuffle";
    case Product::Stuffle: return "stuffle";
    case Product::StarShuffle: return "star-shuffle";
    case Product::StarStuffle: return "star-stuffle";
    }
    return "?";
}

std::string_view product_symbol(Product p) {
    switch (p) {
    case Product::Shuffle: return "(sh)";
    case Product::Stuffle: return "(*)";
    case Product::StarShuffle: return "(sh*)";
    case Product::StarStuffle: return "(**)";
    }
    return "?";
}

Product parse_product(std::string_view name) {
    for (Product p : {Product::Shuffle, Product::Stuffle, Product::StarShuffle, Product::StarStuffle})
        if (name == product_name(p)) return p;
    throw ParseError("unknown product '" + std::string(name) + "'", 0);
}

std::shared_ptr<const IntTerms> product_words(Product p, const Word& u, const Word& v) {
    if (is_stuffle_like(p) && (!u.in_h1() || !v.in_h1())) throw NotInH1(u.in_h1() ? v.str() : u.str());
    return lookup(p, u, v);
}

WordSum product(Product p, const WordSum& u, const WordSum& v) {
    if (is_stuffle_like(p)) {
        require_h1(u);
        require_h1(v);
    }
    WordSum r;
    for (const auto& [a, c] : u)
        for (const auto& [b, d] : v) {
            Rational cd = c * d;
            Entry e = lookup(p, a, b);
            for (const auto& [w, n] : *e) r.add(w, cd * n);
        }
    return r;
}

WordSum shuffle(const WordSum& u, const WordSum& v) { return product(Product::Shuffle, u, v); }
WordSum stuffle(const WordSum& u, const WordSum& v) { return product(Product::Stuffle, u, v); }
WordSum star_shuffle(const WordSum& u, const WordSum& v) { return product(Product::StarShuffle, u, v); }
WordSum star_stuffle(const WordSum& u, const WordSum& v) { return product(Product::StarStuffle, u, v); }

WordSum product_power(Product p, const WordSum& u, unsigned n) {
    WordSum r = WordSum::one();
    for (unsigned i = 0; i < n; ++i) r = product(p, r, u);
    return r;
}

void set_product_cache_limit(std::size_t max_entries) {
    cache_limit.store(max_entries);
    if (max_entries == 0) clear_product_cache();
}

std::size_t product_cache_limit() { return cache_limit.load(); }
std::size_t product_cache_size() { return cache_entries.load(); }

void clear_product_cache() {
    std::unique_lock lock(memo().mutex);
    for (auto& t : memo().tables) t.clear();
    cache_entries.store(0);
}

} // namespace mzv
