#pragma once

#include <mzv/word_sum.hpp>

#include <cstdint>
#include <memory>
#include <string_view>
#include <utility>
#include <vector>

namespace mzv {

enum class Product { Shuffle, Stuffle, StarShuffle, StarStuffle };

std::string_view product_name(Product p);   // "shuffle", "stuffle", "star-shuffle", "star-stuffle"
std::string_view product_symbol(Product p); // "(sh)", "(*)", "(sh*)", "(**)"
Product parse_product(std::string_view name); // throws ParseError

// Integer expansion of the product of two words.
using IntTerms = std::vector<std::pair<Word, std::int64_t>>;
std::shared_ptr<const IntTerms> product_words(Product p, const Word& u, const Word& v);

WordSum shuffle(const WordSum& u, const WordSum& v);
WordSum stuffle(const WordSum& u, const WordSum& v);      // throws NotInH1
WordSum star_shuffle(const WordSum& u, const WordSum& v);
WordSum star_stuffle(const WordSum& u, const WordSum& v); // throws NotInH1
WordSum product(Product p, const WordSum& u, const WordSum& v);
WordSum product_power(Product p, const WordSum& u, unsigned n); // n-fold product, 1 for n = 0

// Memo table shared by all word-level products. A limit of 0 disables it.
void set_product_cache_limit(std::size_t max_entries);
std::size_t product_cache_limit();
std::size_t product_cache_size();
void clear_product_cache();

} // namespace mzv
