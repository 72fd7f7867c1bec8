#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hardy/error.hpp"
#include "hardy/rational.hpp"

namespace hardy {

inline constexpr std::size_t kDefaultTermCap = 10'000'000;

struct IndexEntry {
    std::uint32_t position;
    std::uint32_t exponent;

    friend auto operator<=>(const IndexEntry&, const IndexEntry&) = default;
};

/// Finitely supported exponent vector alpha, stored as ascending (position, exponent)
/// pairs with exponent >= 1. Position 0 is reserved for the homogenizing variable;
/// positions >= 1 correspond to the primes p_1 = 2, p_2 = 3, ...
class MultiIndex {
public:
    MultiIndex() = default;
    /// Entries in any order; zero exponents are dropped, repeated positions rejected.
    explicit MultiIndex(std::vector<IndexEntry> entries);

    static MultiIndex unit(std::uint32_t position, std::uint32_t exponent = 1);
    /// exponents[i] is the exponent of position i + 1.
    static MultiIndex from_dense(std::span<const std::uint32_t> exponents);

    const std::vector<IndexEntry>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::uint64_t total_degree() const noexcept;
    std::uint32_t exponent_at(std::uint32_t position) const noexcept;

    /// Componentwise alpha <= gamma.
    bool componentwise_leq(const MultiIndex& gamma) const;
    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
    /// gamma - alpha; requires alpha <= gamma componentwise.
    friend MultiIndex operator-(const MultiIndex& gamma, const MultiIndex& alpha);

    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<IndexEntry> entries_;
};

/// Sparse coefficient map with a shared irrational scale: the value of the coefficient
/// stored under key is stored(key) * sqrt(scale_squared). The scale lets n^{-k/2}
/// normalizations (Q_n^k) stay exact. Zero coefficients are never stored.
template <class Key>
class SparseSeries {
public:
    using Terms = std::map<Key, ExactComplex>;

    SparseSeries() = default;

    static SparseSeries monomial(Key key, ExactComplex c = ExactComplex(1L)) {
        SparseSeries s;
        s.add_term(std::move(key), c);
        return s;
    }

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    const Rational& scale_squared() const noexcept { return scale_squared_; }
    void set_scale_squared(Rational s) {
        require(sgn(s) > 0, ErrorKind::domain, "scale must be positive");
        scale_squared_ = std::move(s);
    }

    /// Adds c to the stored coefficient at key, erasing it if the sum vanishes.
    void add_term(const Key& key, const ExactComplex& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ExactComplex stored(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? ExactComplex() : it->second;
    }

    /// |coefficient|^2 including the scale, exact.
    Rational modulus_squared(const Key& key) const {
        return stored(key).modulus_squared() * scale_squared_;
    }

    std::complex<double> value(const Key& key) const {
        return stored(key).to_complex() * std::sqrt(scale_squared_.get_d());
    }

    /// Sum over terms of |coefficient|^2 including the scale (Parseval), exact.
    Rational sum_modulus_squared() const {
        Rational total;
        for (const auto& [key, c] : terms_) total += c.modulus_squared();
        return total * scale_squared_;
    }

    /// Rewrites the series with scale 1 when sqrt(scale_squared) is rational.
    bool try_absorb_scale() {
        Rational root;
        if (!exact_sqrt(scale_squared_, root)) return false;
        if (root != 1)
            for (auto& [key, c] : terms_) c = c * ExactComplex(root);
        scale_squared_ = 1;
        return true;
    }

    /// Equality of represented values, independent of how the scale is split.
    friend bool operator==(const SparseSeries& a, const SparseSeries& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        if (a.scale_squared_ == b.scale_squared_) return a.terms_ == b.terms_;
        auto same = [&](const Rational& x, const Rational& y) {
            return sgn(x) == sgn(y) && x * x * a.scale_squared_ == y * y * b.scale_squared_;
        };
        for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib) {
            if (!(ia->first == ib->first)) return false;
            if (!same(ia->second.re, ib->second.re) || !same(ia->second.im, ib->second.im))
                return false;
        }
        return true;
    }

    /// Sum of two series sharing the same scale.
    friend SparseSeries operator+(const SparseSeries& a, const SparseSeries& b) {
        if (a.empty()) return b;
        if (b.empty()) return a;
        require(a.scale_squared_ == b.scale_squared_, ErrorKind::domain,
                "cannot add series with different irrational scales");
        SparseSeries out = a;
        for (const auto& [key, c] : b.terms_) out.add_term(key, c);
        return out;
    }

    friend SparseSeries operator-(const SparseSeries& a, const SparseSeries& b) {
        SparseSeries neg = b;
        for (auto& [key, c] : neg.terms_) c = ExactComplex(-c.re, -c.im);
        return a + neg;
    }

private:
    Terms terms_;
    Rational scale_squared_{1};
};

/// Trigonometric polynomial on the infinite torus: sum c_alpha z^alpha.
using TrigPoly = SparseSeries<MultiIndex>;
/// Dirichlet polynomial sum a_n n^{-s}, keyed by n >= 1.
using DirichletPoly = SparseSeries<std::uint64_t>;

TrigPoly trig_constant(const ExactComplex& c);
DirichletPoly dirichlet_constant(const ExactComplex& c);

/// a_{p^alpha} n^{-s} -> a_{p^alpha} z^alpha.
TrigPoly bohr_lift(const DirichletPoly& d);
/// z^alpha -> p^alpha; throws index_overflow when p^alpha exceeds 64 bits.
DirichletPoly bohr_unlift(const TrigPoly& p);

TrigPoly poly_mul(const TrigPoly& a, const TrigPoly& b, std::size_t term_cap = kDefaultTermCap);
TrigPoly poly_pow(const TrigPoly& a, unsigned k, std::size_t term_cap = kDefaultTermCap);
DirichletPoly dirichlet_mul(const DirichletPoly& a, const DirichletPoly& b,
                            std::size_t term_cap = kDefaultTermCap);

/// max |alpha| over stored terms; throws empty_polynomial for the zero polynomial.
std::uint64_t degree(const TrigPoly& p);
bool is_homogeneous(const TrigPoly& p, std::uint64_t m);

/// P~(z, w) = z^{deg P} P(w_1 / z, w_2 / z, ...), with z at position 0.
TrigPoly homogenize(const TrigPoly& p);

/// D = sum_j D_j j^{-s} over y-smooth j, with every D_j supported on y-rough integers.
std::map<std::uint64_t, DirichletPoly> decompose_smooth(const DirichletPoly& d, double y);

/// Q_n = n^{-1/2} (z_1 + ... + z_n), stored with unit coefficients and scale 1/n.
TrigPoly build_qn(std::uint64_t n);

/// Largest stored index; 0 for the zero polynomial.
std::uint64_t support_bound(const DirichletPoly& d);

} // namespace hardy
