#include "hardy/polyalg.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hardy/numtheory.hpp"

namespace hardy {

MultiIndex::MultiIndex(std::vector<IndexEntry> entries) {
    std::erase_if(entries, [](const IndexEntry& e) { return e.exponent == 0; });
    std::sort(entries.begin(), entries.end());
    for (std::size_t i = 1; i < entries.size(); ++i)
        require(entries[i].position != entries[i - 1].position, ErrorKind::domain,
                "multi-index repeats position " + std::to_string(entries[i].position));
    entries_ = std::move(entries);
}

MultiIndex MultiIndex::unit(std::uint32_t position, std::uint32_t exponent) {
    return MultiIndex({{position, exponent}});
}

MultiIndex MultiIndex::from_dense(std::span<const std::uint32_t> exponents) {
    MultiIndex m;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] != 0)
            m.entries_.push_back({static_cast<std::uint32_t>(i + 1), exponents[i]});
    return m;
}

std::uint64_t MultiIndex::total_degree() const noexcept {
    std::uint64_t total = 0;
    for (const auto& e : entries_) total += e.exponent;
    return total;
}

std::uint32_t MultiIndex::exponent_at(std::uint32_t position) const noexcept {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), IndexEntry{position, 0});
    return (it != entries_.end() && it->position == position) ? it->exponent : 0;
}

bool MultiIndex::componentwise_leq(const MultiIndex& gamma) const {
    return std::all_of(entries_.begin(), entries_.end(), [&](const IndexEntry& e) {
        return e.exponent <= gamma.exponent_at(e.position);
    });
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex out;
    out.entries_.reserve(a.entries_.size() + b.entries_.size());
    auto ia = a.entries_.begin();
    auto ib = b.entries_.begin();
    while (ia != a.entries_.end() || ib != b.entries_.end()) {
        if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->position < ib->position)) {
            out.entries_.push_back(*ia++);
        } else if (ia == a.entries_.end() || ib->position < ia->position) {
            out.entries_.push_back(*ib++);
        } else {
            out.entries_.push_back({ia->position, ia->exponent + ib->exponent});
            ++ia;
            ++ib;
        }
    }
    return out;
}

MultiIndex operator-(const MultiIndex& gamma, const MultiIndex& alpha) {
    require(alpha.componentwise_leq(gamma), ErrorKind::domain, "multi-index difference would be negative");
    std::vector<IndexEntry> out;
    for (const auto& e : gamma.entries_) {
        std::uint32_t rest = e.exponent - alpha.exponent_at(e.position);
        if (rest != 0) out.push_back({e.position, rest});
    }
    MultiIndex m;
    m.entries_ = std::move(out);
    return m;
}

TrigPoly trig_constant(const ExactComplex& c) { return TrigPoly::monomial(MultiIndex{}, c); }

DirichletPoly dirichlet_constant(const ExactComplex& c) { return DirichletPoly::monomial(1, c); }

TrigPoly bohr_lift(const DirichletPoly& d) {
    TrigPoly out;
    for (const auto& [n, c] : d.terms()) {
        std::vector<IndexEntry> entries;
        for (const auto& pp : factorize(n).factors)
            entries.push_back({static_cast<std::uint32_t>(prime_index(pp.prime)), pp.exponent});
        out.add_term(MultiIndex(std::move(entries)), c);
    }
    if (!out.empty()) out.set_scale_squared(d.scale_squared());
    return out;
}

namespace {

bool checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
    return !__builtin_mul_overflow(a, b, &out);
}

} // namespace

DirichletPoly bohr_unlift(const TrigPoly& p) {
    DirichletPoly out;
    for (const auto& [alpha, c] : p.terms()) {
        std::uint64_t n = 1;
        for (const auto& e : alpha.entries()) {
            require(e.position >= 1, ErrorKind::domain,
                    "position 0 (homogenizing variable) has no prime");
            std::uint64_t prime = nth_prime(e.position);
            for (std::uint32_t i = 0; i < e.exponent; ++i)
                if (!checked_mul(n, prime, n))
                    fail(ErrorKind::index_overflow, "p^alpha exceeds the 64-bit index range");
        }
        out.add_term(n, c);
    }
    if (!out.empty()) out.set_scale_squared(p.scale_squared());
    return out;
}

TrigPoly poly_mul(const TrigPoly& a, const TrigPoly& b, std::size_t term_cap) {
    TrigPoly out;
    for (const auto& [alpha, ca] : a.terms()) {
        for (const auto& [beta, cb] : b.terms()) {
            out.add_term(alpha + beta, ca * cb);
            if (out.size() > term_cap)
                fail(ErrorKind::term_cap, "product exceeds term cap of " + std::to_string(term_cap));
        }
    }
    if (!out.empty()) out.set_scale_squared(a.scale_squared() * b.scale_squared());
    return out;
}

TrigPoly poly_pow(const TrigPoly& a, unsigned k, std::size_t term_cap) {
    TrigPoly result = trig_constant(ExactComplex(1L));
    TrigPoly base = a;
    while (k != 0) {
        if (k & 1u) result = poly_mul(result, base, term_cap);
        k >>= 1;
        if (k != 0) base = poly_mul(base, base, term_cap);
    }
    return result;
}

DirichletPoly dirichlet_mul(const DirichletPoly& a, const DirichletPoly& b, std::size_t term_cap) {
    DirichletPoly out;
    for (const auto& [j, ca] : a.terms()) {
        for (const auto& [k, cb] : b.terms()) {
            std::uint64_t n = 0;
            if (!checked_mul(j, k, n))
                fail(ErrorKind::index_overflow, "Dirichlet product index exceeds 64 bits");
            out.add_term(n, ca * cb);
            if (out.size() > term_cap)
                fail(ErrorKind::term_cap, "product exceeds term cap of " + std::to_string(term_cap));
        }
    }
    if (!out.empty()) out.set_scale_squared(a.scale_squared() * b.scale_squared());
    return out;
}

std::uint64_t degree(const TrigPoly& p) {
    require(!p.empty(), ErrorKind::empty_polynomial, "degree of the zero polynomial is undefined");
    std::uint64_t d = 0;
    for (const auto& [alpha, c] : p.terms()) d = std::max(d, alpha.total_degree());
    return d;
}

bool is_homogeneous(const TrigPoly& p, std::uint64_t m) {
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [m](const auto& term) { return term.first.total_degree() == m; });
}

TrigPoly homogenize(const TrigPoly& p) {
    std::uint64_t deg = degree(p);
    require(std::none_of(p.terms().begin(), p.terms().end(),
                         [](const auto& t) { return t.first.exponent_at(0) != 0; }),
            ErrorKind::domain, "polynomial already uses the homogenizing position 0");
    TrigPoly out;
    for (const auto& [alpha, c] : p.terms()) {
        auto lift = static_cast<std::uint32_t>(deg - alpha.total_degree());
        out.add_term(alpha + MultiIndex::unit(0, lift), c);
    }
    out.set_scale_squared(p.scale_squared());
    return out;
}

std::map<std::uint64_t, DirichletPoly> decompose_smooth(const DirichletPoly& d, double y) {
    require(y >= 2.0, ErrorKind::domain, "decompose_smooth: y must be >= 2");
    std::map<std::uint64_t, DirichletPoly> blocks;
    for (const auto& [n, c] : d.terms()) {
        std::uint64_t j = smooth_part(n, y);
        auto [it, inserted] = blocks.try_emplace(j);
        if (inserted) it->second.set_scale_squared(d.scale_squared());
        it->second.add_term(n / j, c);
    }
    return blocks;
}

TrigPoly build_qn(std::uint64_t n) {
    require(n >= 1, ErrorKind::domain, "build_qn: n must be >= 1");
    require(n <= std::numeric_limits<std::uint32_t>::max(), ErrorKind::domain, "build_qn: n too large");
    TrigPoly q;
    for (std::uint64_t j = 1; j <= n; ++j)
        q.add_term(MultiIndex::unit(static_cast<std::uint32_t>(j)), ExactComplex(1L));
    q.set_scale_squared(Rational(1, n));
    return q;
}

std::uint64_t support_bound(const DirichletPoly& d) {
    return d.empty() ? 0 : d.terms().rbegin()->first;
}

} // namespace hardy
