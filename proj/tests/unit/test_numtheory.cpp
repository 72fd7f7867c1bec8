#include <doctest.h>

#include <cmath>
#include <set>

#include "hardy/numtheory.hpp"
#include "oracles.hpp"

using namespace hardy;

namespace {

std::vector<std::pair<std::uint64_t, unsigned>> pairs(const Factorization& f) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (const auto& pp : f.factors) out.emplace_back(pp.prime, pp.exponent);
    return out;
}

} // namespace

TEST_CASE("primes_up_to") {
    CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
    CHECK(primes_up_to(1.9).empty());
    CHECK(primes_up_to(0).empty());
    CHECK(primes_up_to(100).size() == 25);
    CHECK(primes_up_to(100000) == oracle::sieve(100000));
    CHECK(prime_pi(599) == oracle::sieve(599).size());
}

TEST_CASE("nth_prime and prime_index agree with the sieve") {
    auto ps = oracle::sieve(20000);
    for (std::size_t i = 0; i < ps.size(); i += 37) {
        CHECK(nth_prime(i + 1) == ps[i]);
        CHECK(prime_index(ps[i]) == i + 1);
    }
    CHECK_THROWS_AS(nth_prime(0), Error);
    CHECK_THROWS_AS(prime_index(12), Error);
}

TEST_CASE("factorize") {
    CHECK(pairs(factorize(12)) == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {3, 1}});
    CHECK(factorize(1).factors.empty());
    CHECK(pairs(factorize(9699690)) == oracle::factor(9699690));
    CHECK(pairs(factorize(9699690)).size() == 8);
    CHECK_THROWS_AS(factorize(0), Error);

    for (std::uint64_t n : {2ULL, 97ULL, 1048575ULL, 1048576ULL, 1048577ULL, 600851475143ULL, 999999999989ULL,
                            (1ULL << 40) - 1})
        CHECK(pairs(factorize(n)) == oracle::factor(n));
    for (std::uint64_t n = 1; n <= 20000; ++n) {
        auto f = factorize(n);
        std::uint64_t prod = 1;
        std::uint64_t last = 1;
        for (const auto& pp : f.factors) {
            CHECK(pp.prime > last);
            CHECK(pp.exponent >= 1);
            last = pp.prime;
            for (unsigned e = 0; e < pp.exponent; ++e) prod *= pp.prime;
        }
        REQUIRE(prod == n);
    }
}

TEST_CASE("big_omega") {
    CHECK(big_omega(12) == 3);
    CHECK(big_omega(1) == 0);
    CHECK(big_omega(1024) == 10);
    for (std::uint64_t n = 2; n <= 100000; ++n)
        REQUIRE(big_omega(n) <= std::log(static_cast<double>(n)) / std::log(2.0) + 1e-9);
}

TEST_CASE("divisor_count") {
    CHECK(divisor_count(12) == 6);
    CHECK(divisor_count(1) == 1);
    for (std::uint64_t n = 1; n <= 10000; ++n) REQUIRE(divisor_count(n) == oracle::divisors(n));
}

TEST_CASE("max_divisor_count") {
    std::uint64_t brute = 0;
    for (std::uint64_t n = 1; n <= 100; ++n) brute = std::max(brute, oracle::divisors(n));
    CHECK(max_divisor_count(100) == brute);
    CHECK(max_divisor_count(100) == 12);
    CHECK(max_divisor_count(1) == 1);

    std::uint64_t m = 0;
    for (std::uint64_t n = 1; n <= 200; ++n) m = std::max(m, oracle::divisors(n));
    CHECK(max_divisor_count(200) == m);

    double x = 1e5;
    auto v = max_divisor_count(x);
    double l1 = std::log(x);
    CHECK(std::log(static_cast<double>(v)) <= l1 / std::log(l1) * (std::log(2.0) + 1.0));
}

TEST_CASE("smooth and rough numbers") {
    CHECK(smooth_numbers(10, 2) == std::vector<std::uint64_t>{1, 2, 4, 8});
    CHECK(smooth_numbers(20, 3) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8, 9, 12, 16, 18});
    CHECK(smooth_numbers(10, 1.5) == std::vector<std::uint64_t>{1});
    CHECK(rough_numbers(10, 2) == std::vector<std::uint64_t>{1, 3, 5, 7, 9});
    CHECK(rough_numbers(10, 10) == std::vector<std::uint64_t>{1});
    std::vector<std::uint64_t> all(37);
    for (std::uint64_t i = 0; i < all.size(); ++i) all[i] = i + 1;
    CHECK(smooth_numbers(37.5, 37.5) == all);
    CHECK(smooth_count(10, 2) == 4);

    for (double x : {1.0, 17.0, 100.0, 500.0, 1000.0}) {
        for (double y : {2.0, 3.0, 5.0, 10.0}) {
            std::vector<std::uint64_t> s;
            std::vector<std::uint64_t> l;
            for (std::uint64_t n = 1; n <= static_cast<std::uint64_t>(x); ++n) {
                if (oracle::is_smooth(n, y)) s.push_back(n);
                if (oracle::is_rough(n, y)) l.push_back(n);
            }
            REQUIRE(smooth_numbers(x, y) == s);
            REQUIRE(rough_numbers(x, y) == l);
            REQUIRE(smooth_count(x, y) == s.size());

            // (j, k) -> jk is a bijection from {jk <= x} onto 1..x.
            std::set<std::uint64_t> hit;
            std::size_t pairs_count = 0;
            for (auto j : s)
                for (auto k : l)
                    if (j * k <= x) {
                        hit.insert(j * k);
                        ++pairs_count;
                    }
            CHECK(pairs_count == static_cast<std::size_t>(x));
            CHECK(hit.size() == static_cast<std::size_t>(x));
        }
    }
}

TEST_CASE("smooth_part") {
    CHECK(smooth_part(90, 3) == 18);
    CHECK(smooth_part(1, 2) == 1);
    CHECK(smooth_part(35, 3) == 1);
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        auto j = smooth_part(n, 5);
        REQUIRE(n % j == 0);
        REQUIRE(oracle::is_smooth(j, 5));
        REQUIRE(oracle::is_rough(n / j, 5));
    }
}

TEST_CASE("dusart_pi_lower") {
    double b = dusart_pi_lower(599);
    CHECK(b == doctest::Approx(599 / std::log(599.0) * (1 + 1 / std::log(599.0))));
    CHECK(static_cast<double>(oracle::sieve(599).size()) >= b);
    CHECK(static_cast<double>(oracle::sieve(10000).size()) >= dusart_pi_lower(1e4));
    CHECK_THROWS_AS(dusart_pi_lower(500), Error);
    auto ps = oracle::sieve(100000);
    std::size_t count = 0;
    for (std::uint64_t t = 2; t <= 100000; ++t) {
        while (count < ps.size() && ps[count] <= t) ++count;
        if (t >= 599) REQUIRE(static_cast<double>(count) >= dusart_pi_lower(static_cast<double>(t)));
    }
}

TEST_CASE("sieve tables") {
    PrimeSieve s(1000);
    CHECK(s.pi(1000) == 168);
    CHECK(s.is_prime(997));
    CHECK_FALSE(s.is_prime(999));
    SmallestFactorTable t(1000);
    CHECK(t.smallest_factor(91) == 7);
    CHECK(pairs(t.factorize(360)) == oracle::factor(360));
}
