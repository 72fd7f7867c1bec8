#include "oracles.hpp"

#include <algorithm>
#include <map>

namespace oracle {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::uint64_t divisors(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) ++count;
    return count;
}

std::vector<std::uint64_t> sieve(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

bool is_smooth(std::uint64_t n, double y) {
    for (auto [p, e] : factor(n))
        if (static_cast<double>(p) > y) return false;
    return true;
}

bool is_rough(std::uint64_t n, double y) {
    for (auto [p, e] : factor(n))
        if (static_cast<double>(p) <= y) return false;
    return true;
}

namespace {

void compositions(unsigned parts, unsigned left, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
    if (cur.size() + 1 == parts) {
        cur.push_back(left);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (unsigned a = 0; a <= left; ++a) {
        cur.push_back(a);
        compositions(parts, left - a, cur, out);
        cur.pop_back();
    }
}

hardy::Integer fact(unsigned k) {
    hardy::Integer f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
}

} // namespace

Rational qn_moment(unsigned n, unsigned m) {
    std::vector<std::vector<unsigned>> all;
    std::vector<unsigned> cur;
    compositions(n, m, cur, all);
    hardy::Integer total = 0;
    for (const auto& alpha : all) {
        hardy::Integer multinomial = fact(m);
        for (unsigned a : alpha) multinomial /= fact(a);
        total += multinomial * multinomial;
    }
    hardy::Integer nm = 1;
    for (unsigned i = 0; i < m; ++i) nm *= n;
    Rational out(total, nm);
    out.canonicalize();
    return out;
}

Rational even_moment(const hardy::TrigPoly& p, unsigned r) {
    using Dense = std::vector<std::uint32_t>;
    std::uint32_t width = 0;
    for (const auto& [alpha, c] : p.terms())
        for (const auto& e : alpha.entries()) width = std::max(width, e.position + 1);
    auto dense = [width](const hardy::MultiIndex& a) {
        Dense d(width, 0);
        for (const auto& e : a.entries()) d[e.position] = e.exponent;
        return d;
    };
    std::map<Dense, std::pair<Rational, Rational>> power{{Dense(width, 0), {Rational(1), Rational(0)}}};
    for (unsigned i = 0; i < r; ++i) {
        std::map<Dense, std::pair<Rational, Rational>> next;
        for (const auto& [a, x] : power) {
            for (const auto& [alpha, c] : p.terms()) {
                Dense b = dense(alpha);
                for (std::uint32_t j = 0; j < width; ++j) b[j] += a[j];
                auto& slot = next[b];
                slot.first += x.first * c.re - x.second * c.im;
                slot.second += x.first * c.im + x.second * c.re;
            }
        }
        power = std::move(next);
    }
    Rational total = 0;
    for (const auto& [a, x] : power) total += x.first * x.first + x.second * x.second;
    for (unsigned i = 0; i < r; ++i) total *= p.scale_squared();
    return total;
}

} // namespace oracle
