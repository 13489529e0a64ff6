#pragma once

#include <mutex>
#include <vector>

#include "latzeta/rational.hpp"

namespace latzeta {

/**
 * Memoized Bernoulli numbers (B1 = -1/2 convention) and Euler numbers,
 * both computed by their exact defining recurrences:
 *
 *     sum_{k=0}^{n} C(n+1,k) B_k = 0          (n >= 1)
 *     sum_{k=0}^{n} C(2n,2k) E_{2k} = 0       (n >= 1), odd-index E are 0
 *
 * Values are immutable once computed; extension is serialized so the cache
 * can be shared across threads.
 */
class BernoulliCache {
public:
    Rational bernoulli(size_t n) const;
    Integer euler(size_t n) const;

private:
    void extend_bernoulli(size_t n) const;
    void extend_euler(size_t n) const;

    mutable std::mutex mu_;
    mutable std::vector<Rational> bern_;
    mutable std::vector<Integer> euler_;
};

BernoulliCache& bernoulli_cache();

Rational bernoulli_number(long n);

Integer euler_number(long n);

// B_n(x) = sum_k C(n,k) B_k x^{n-k}
Rational bernoulli_poly(long n, const Rational& x);

} // namespace latzeta
