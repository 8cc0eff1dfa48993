#include <mzv/bernoulli.hpp>

#include <mutex>
#include <vector>

namespace mzv {

Rational bernoulli(unsigned n) {
    static std::mutex mu;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard lock(mu);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    while (table.size() <= n) {
        const unsigned m = static_cast<unsigned>(table.size());
        Rational acc = 0;
        for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * table[j];
        Rational b = -acc / Rational(m + 1);
        b.canonicalize();
        table.push_back(b);
    }
    return table[n];
}

} // namespace mzv
