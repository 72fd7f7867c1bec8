#include "hardy/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>

#include "hardy/error.hpp"

namespace hardy {

namespace {

constexpr std::uint64_t kInitialSieve = 1u << 16;
constexpr std::uint64_t kMaxSieve = std::uint64_t{1} << 32;
constexpr std::uint32_t kSharedSpfLimit = 1u << 20;

const SmallestFactorTable& shared_spf() {
    static const SmallestFactorTable table(kSharedSpfLimit);
    return table;
}

} // namespace

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::empty_polynomial: return "empty-polynomial";
    case ErrorKind::index_overflow: return "index-overflow";
    case ErrorKind::term_cap: return "term-cap";
    case ErrorKind::parse: return "parse";
    }
    return "unknown";
}

std::uint64_t floor_to_u64(double x) {
    require(std::isfinite(x) && x >= 0.0, ErrorKind::domain,
            "expected a finite nonnegative bound, got " + std::to_string(x));
    require(x < 1.8e19, ErrorKind::domain, "bound exceeds 64-bit range");
    return static_cast<std::uint64_t>(std::floor(x));
}

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit), composite_(limit + 1, false) {
    require(limit <= kMaxSieve, ErrorKind::domain, "sieve limit too large");
    composite_[0] = true;
    if (limit >= 1) composite_[1] = true;
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (composite_[i]) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i) composite_[j] = true;
    }
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite_[i]) primes_.push_back(i);
}

bool PrimeSieve::is_prime(std::uint64_t n) const {
    require(n <= limit_, ErrorKind::domain, "query beyond sieve limit");
    return !composite_[n];
}

std::size_t PrimeSieve::pi(std::uint64_t x) const {
    require(x <= limit_, ErrorKind::domain, "query beyond sieve limit");
    return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), x) -
                                    primes_.begin());
}

SmallestFactorTable::SmallestFactorTable(std::uint32_t limit) : limit_(limit), spf_(limit + 1, 0) {
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] != 0) continue;
        for (std::uint64_t j = i; j <= limit; j += i)
            if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
}

Factorization SmallestFactorTable::factorize(std::uint32_t n) const {
    require(n >= 1, ErrorKind::domain, "factorize: n must be positive");
    require(n <= limit_, ErrorKind::domain, "factorize: n beyond table limit");
    Factorization f{n, {}};
    while (n > 1) {
        std::uint32_t p = spf_[n];
        std::uint32_t a = 0;
        while (n % p == 0) {
            n /= p;
            ++a;
        }
        f.factors.push_back({p, a});
    }
    return f;
}

std::shared_ptr<const PrimeSieve> shared_sieve(std::uint64_t at_least) {
    static std::mutex mu;
    static std::shared_ptr<const PrimeSieve> current;
    std::lock_guard lock(mu);
    if (!current || current->limit() < at_least) {
        std::uint64_t limit = current ? current->limit() : kInitialSieve;
        while (limit < at_least) limit *= 2;
        current = std::make_shared<const PrimeSieve>(std::min(limit, kMaxSieve));
        require(current->limit() >= at_least, ErrorKind::domain, "prime table limit exceeded");
    }
    return current;
}

std::uint64_t nth_prime(std::size_t i) {
    require(i >= 1, ErrorKind::domain, "nth_prime: index is 1-based");
    // p_i < i (log i + log log i) for i >= 6
    double li = std::log(static_cast<double>(std::max<std::size_t>(i, 6)));
    auto bound = static_cast<std::uint64_t>(static_cast<double>(std::max<std::size_t>(i, 6)) *
                                            (li + std::log(li))) + 16;
    auto sieve = shared_sieve(bound);
    return sieve->primes().at(i - 1);
}

std::size_t prime_index(std::uint64_t p) {
    auto sieve = shared_sieve(p);
    require(sieve->is_prime(p), ErrorKind::domain, "prime_index: " + std::to_string(p) + " is not prime");
    return sieve->pi(p);
}

std::vector<std::uint64_t> primes_up_to(double x) {
    require(!(x < 0.0), ErrorKind::domain, "primes_up_to: x must be nonnegative");
    std::uint64_t limit = floor_to_u64(x);
    if (limit < 2) return {};
    auto sieve = shared_sieve(limit);
    const auto& all = sieve->primes();
    return {all.begin(), std::upper_bound(all.begin(), all.end(), limit)};
}

std::size_t prime_pi(double x) {
    if (x < 2.0) return 0;
    std::uint64_t limit = floor_to_u64(x);
    return shared_sieve(limit)->pi(limit);
}

Factorization factorize(std::uint64_t n) {
    require(n >= 1, ErrorKind::domain, "factorize: n must be positive");
    if (n <= kSharedSpfLimit) return shared_spf().factorize(static_cast<std::uint32_t>(n));

    Factorization f{n, {}};
    auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n))) + 1;
    auto sieve = shared_sieve(root);
    std::uint64_t rest = n;
    for (std::uint64_t p : sieve->primes()) {
        if (p * p > rest) break;
        if (rest % p != 0) continue;
        std::uint32_t a = 0;
        while (rest % p == 0) {
            rest /= p;
            ++a;
        }
        f.factors.push_back({p, a});
    }
    if (rest > 1) f.factors.push_back({rest, 1});
    return f;
}

unsigned big_omega(std::uint64_t n) {
    unsigned total = 0;
    for (const auto& pp : factorize(n).factors) total += pp.exponent;
    return total;
}

std::uint64_t divisor_count(std::uint64_t n) {
    std::uint64_t d = 1;
    for (const auto& pp : factorize(n).factors) d *= pp.exponent + 1;
    return d;
}

std::uint64_t max_divisor_count(double x) {
    require(x >= 1.0, ErrorKind::domain, "max_divisor_count: x must be >= 1");
    std::uint64_t limit = floor_to_u64(x);
    require(limit <= (std::uint64_t{1} << 28), ErrorKind::domain, "max_divisor_count: x too large");
    std::vector<std::uint32_t> d(limit + 1, 0);
    for (std::uint64_t i = 1; i <= limit; ++i)
        for (std::uint64_t j = i; j <= limit; j += i) ++d[j];
    return *std::max_element(d.begin() + 1, d.end());
}

namespace {

void extend_smooth(std::uint64_t value, std::size_t from, std::uint64_t limit,
                   const std::vector<std::uint64_t>& primes, std::vector<std::uint64_t>& out) {
    out.push_back(value);
    for (std::size_t i = from; i < primes.size(); ++i) {
        std::uint64_t p = primes[i];
        if (value > limit / p) break;
        extend_smooth(value * p, i, limit, primes, out);
    }
}

std::uint64_t count_smooth(std::uint64_t value, std::size_t from, std::uint64_t limit,
                           const std::vector<std::uint64_t>& primes) {
    std::uint64_t count = 1;
    for (std::size_t i = from; i < primes.size(); ++i) {
        std::uint64_t p = primes[i];
        if (value > limit / p) break;
        count += count_smooth(value * p, i, limit, primes);
    }
    return count;
}

} // namespace

std::uint64_t smooth_count(double x, double y) {
    require(x >= 1.0, ErrorKind::domain, "smooth_count: x must be >= 1");
    std::uint64_t limit = floor_to_u64(x);
    return count_smooth(1, 0, limit, primes_up_to(std::min(x, std::max(y, 0.0))));
}

std::vector<std::uint64_t> smooth_numbers(double x, double y) {
    require(x >= 1.0, ErrorKind::domain, "smooth_numbers: x must be >= 1");
    std::uint64_t limit = floor_to_u64(x);
    auto primes = primes_up_to(std::min(x, std::max(y, 0.0)));
    std::vector<std::uint64_t> out;
    extend_smooth(1, 0, limit, primes, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> rough_numbers(double x, double y) {
    require(x >= 1.0, ErrorKind::domain, "rough_numbers: x must be >= 1");
    std::uint64_t limit = floor_to_u64(x);
    require(limit <= (std::uint64_t{1} << 32), ErrorKind::domain, "rough_numbers: x too large");
    std::vector<bool> excluded(limit + 1, false);
    for (std::uint64_t p : primes_up_to(std::min(x, std::max(y, 0.0))))
        for (std::uint64_t j = p; j <= limit; j += p) excluded[j] = true;
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= limit; ++n)
        if (!excluded[n]) out.push_back(n);
    return out;
}

std::uint64_t smooth_part(std::uint64_t n, double y) {
    std::uint64_t j = 1;
    for (const auto& pp : factorize(n).factors) {
        if (static_cast<double>(pp.prime) > y) continue;
        for (std::uint32_t a = 0; a < pp.exponent; ++a) j *= pp.prime;
    }
    return j;
}

double dusart_pi_lower(double t) {
    require(t >= 599.0, ErrorKind::domain,
            "dusart_pi_lower: bound only valid for t >= 599, got " + std::to_string(t));
    double lt = std::log(t);
    return t / lt * (1.0 + 1.0 / lt);
}

} // namespace hardy
