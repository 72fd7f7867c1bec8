#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace hardy {

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod p_i^{a_i} with strictly increasing primes; n == 1 has no factors.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;
};

/// Sieve of Eratosthenes over [0, limit]. Immutable once built.
class PrimeSieve {
public:
    explicit PrimeSieve(std::uint64_t limit);

    std::uint64_t limit() const noexcept { return limit_; }
    const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
    bool is_prime(std::uint64_t n) const;
    /// Number of primes <= x, for x <= limit().
    std::size_t pi(std::uint64_t x) const;

private:
    std::uint64_t limit_;
    std::vector<bool> composite_;
    std::vector<std::uint64_t> primes_;
};

/// Smallest-prime-factor table over [0, limit], for fast bulk factorization.
class SmallestFactorTable {
public:
    explicit SmallestFactorTable(std::uint32_t limit);

    std::uint32_t limit() const noexcept { return limit_; }
    std::uint32_t smallest_factor(std::uint32_t n) const { return spf_.at(n); }
    Factorization factorize(std::uint32_t n) const;

private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> spf_;
};

/// Process-wide sieve covering at least [0, at_least]. Grows on demand; the
/// returned snapshot is read-only and safe to share between threads.
std::shared_ptr<const PrimeSieve> shared_sieve(std::uint64_t at_least);

/// The i-th prime, 1-based: nth_prime(1) == 2.
std::uint64_t nth_prime(std::size_t i);
/// Position of the prime p in the ordered prime sequence, 1-based.
std::size_t prime_index(std::uint64_t p);

std::vector<std::uint64_t> primes_up_to(double x);
std::size_t prime_pi(double x);

Factorization factorize(std::uint64_t n);
unsigned big_omega(std::uint64_t n);
std::uint64_t divisor_count(std::uint64_t n);
std::uint64_t max_divisor_count(double x);

/// y-smooth integers n <= x (every prime factor <= y), ascending. 1 is always included.
std::vector<std::uint64_t> smooth_numbers(double x, double y);
/// |S(x, y)| without materializing the set.
std::uint64_t smooth_count(double x, double y);
/// y-rough integers n <= x (every prime factor > y), ascending. 1 is always included.
std::vector<std::uint64_t> rough_numbers(double x, double y);
/// The y-smooth part of n: the unique j in S(x, y) with n = j*k and k in L(x, y).
std::uint64_t smooth_part(std::uint64_t n, double y);

/// Dusart's lower bound (t / log t)(1 + 1/log t) for pi(t); valid for t >= 599.
double dusart_pi_lower(double t);

/// floor(x) as an integer for finite x >= 0.
std::uint64_t floor_to_u64(double x);

} // namespace hardy
