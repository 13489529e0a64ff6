#include "latzeta/bernoulli.hpp"

namespace latzeta {

Rational BernoulliCache::bernoulli(size_t n) const {
    std::lock_guard<std::mutex> lock(mu_);
    extend_bernoulli(n);
    return bern_[n];
}

Integer BernoulliCache::euler(size_t n) const {
    std::lock_guard<std::mutex> lock(mu_);
    extend_euler(n);
    return euler_[n];
}

void BernoulliCache::extend_bernoulli(size_t n) const {
    if (bern_.empty()) bern_.push_back(Rational(1));
    for (size_t m = bern_.size(); m <= n; ++m) {
        Rational acc(0);
        for (size_t k = 0; k < m; ++k)
            acc += Rational(binomial(static_cast<long>(m) + 1, static_cast<long>(k))) * bern_[k];
        Rational b = -acc / Rational(static_cast<long>(m) + 1);
        b.canonicalize();
        bern_.push_back(b);
    }
}

void BernoulliCache::extend_euler(size_t n) const {
    if (euler_.empty()) euler_.push_back(Integer(1));
    for (size_t m = euler_.size(); m <= n; ++m) {
        if (m % 2 == 1) {
            euler_.push_back(Integer(0));
            continue;
        }
        Integer acc(0);
        for (size_t k = 0; k + 2 <= m; k += 2)
            acc += binomial(static_cast<long>(m), static_cast<long>(k)) * euler_[k];
        euler_.push_back(-acc);
    }
}

BernoulliCache& bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

Rational bernoulli_number(long n) {
    if (n < 0) throw DomainError("bernoulli_number: n must be >= 0");
    return bernoulli_cache().bernoulli(static_cast<size_t>(n));
}

Integer euler_number(long n) {
    if (n < 0) throw DomainError("euler_number: n must be >= 0");
    return bernoulli_cache().euler(static_cast<size_t>(n));
}

Rational bernoulli_poly(long n, const Rational& x) {
    if (n < 0) throw DomainError("bernoulli_poly: n must be >= 0");
    Rational acc(0);
    Rational xpow(1);
    // accumulate from k = n down so x^{n-k} builds up incrementally
    for (long k = n; k >= 0; --k) {
        acc += Rational(binomial(n, k)) * bernoulli_number(k) * xpow;
        xpow *= x;
    }
    acc.canonicalize();
    return acc;
}

} // namespace latzeta
