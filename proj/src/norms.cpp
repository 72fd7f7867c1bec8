#include "hardy/norms.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <thread>

namespace hardy {

const char* to_string(NormMethod m) noexcept {
    return m == NormMethod::exact ? "exact" : "monte-carlo";
}

bool is_even_integer(double p) {
    return p >= 2.0 && p <= 1e6 && std::floor(p) == p && std::fmod(p, 2.0) == 0.0;
}

namespace {

void check_exponent(double p) {
    require(std::isfinite(p) && p >= 1.0, ErrorKind::domain,
            "norm exponent p must be >= 1, got " + std::to_string(p));
}

double root_of_rational(const Rational& power, double p) {
    if (sgn(power) == 0) return 0.0;
    double d = power.get_d();
    if (d > 1e-300 && d < 1e300) return p == 2.0 ? std::sqrt(d) : std::pow(d, 1.0 / p);
    return std::exp(log_rational(power) / p);
}

NormEstimate exact_estimate(Rational power, double p) {
    NormEstimate e;
    e.value = root_of_rational(power, p);
    e.p = p;
    e.method = NormMethod::exact;
    e.power = std::move(power);
    return e;
}

// ---------------------------------------------------------------------------
// Exact even moments. ||P||_{2r}^{2r} is the sum of squared moduli of the
// coefficients of R * P with R = P^{r-1}. The variables are split in two halves,
// each packed into a 128-bit mixed-radix key. The output is processed one low-half
// monomial at a time, so only the terms of R * P sharing that monomial are ever
// materialized.

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

struct U128Hash {
    std::size_t operator()(u128 k) const noexcept {
        auto mix = [](std::uint64_t z) {
            z += 0x9e3779b97f4a7c15ULL;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            return z ^ (z >> 31);
        };
        return static_cast<std::size_t>(mix(static_cast<std::uint64_t>(k) ^
                                            mix(static_cast<std::uint64_t>(k >> 64))));
    }
};

struct Packing {
    std::vector<std::uint32_t> positions;
    std::vector<u128> weights;  // relative to the half the position falls in
    std::size_t low_count = 0;
};

std::optional<Packing> make_packing(const TrigPoly& a, const TrigPoly& b) {
    std::map<std::uint32_t, std::array<std::uint64_t, 2>> max_exp;
    for (const auto& [alpha, c] : a.terms())
        for (const auto& e : alpha.entries())
            max_exp[e.position][0] = std::max<std::uint64_t>(max_exp[e.position][0], e.exponent);
    for (const auto& [alpha, c] : b.terms())
        for (const auto& e : alpha.entries())
            max_exp[e.position][1] = std::max<std::uint64_t>(max_exp[e.position][1], e.exponent);

    Packing pk;
    pk.low_count = max_exp.size() / 2;
    u128 weight = 1;
    for (const auto& [pos, m] : max_exp) {
        if (pk.positions.size() == pk.low_count) weight = 1;
        u128 radix = static_cast<u128>(m[0] + m[1] + 1);
        pk.positions.push_back(pos);
        pk.weights.push_back(weight);
        if (weight > std::numeric_limits<u128>::max() / radix) return std::nullopt;
        weight *= radix;
    }
    return pk;
}

template <class Coef>
struct PackedTerms {
    std::vector<u128> keys;
    std::vector<u128> low;
    std::vector<Coef> coef;
};

struct IntegerForm {
    std::vector<u128> keys;
    std::vector<u128> low;
    std::vector<Integer> re;
    std::vector<Integer> im;
    Integer denominator{1};
    Integer l1_sum{0};  // sum |re| + |im|
    Integer l1_max{0};  // max |re| + |im|
    bool real = true;
};

IntegerForm to_integer_form(const TrigPoly& p, const Packing& pk) {
    IntegerForm f;
    for (const auto& [alpha, c] : p.terms()) {
        mpz_lcm(f.denominator.get_mpz_t(), f.denominator.get_mpz_t(), c.re.get_den_mpz_t());
        mpz_lcm(f.denominator.get_mpz_t(), f.denominator.get_mpz_t(), c.im.get_den_mpz_t());
    }
    for (const auto& [alpha, c] : p.terms()) {
        u128 key = 0;
        u128 low = 0;
        for (const auto& e : alpha.entries()) {
            auto idx = static_cast<std::size_t>(
                std::lower_bound(pk.positions.begin(), pk.positions.end(), e.position) -
                pk.positions.begin());
            (idx < pk.low_count ? low : key) += static_cast<u128>(e.exponent) * pk.weights[idx];
        }
        f.keys.push_back(key);
        f.low.push_back(low);
        Integer re = c.re.get_num() * (f.denominator / c.re.get_den());
        Integer im = c.im.get_num() * (f.denominator / c.im.get_den());
        Integer l1 = abs(re) + abs(im);
        f.l1_sum += l1;
        if (l1 > f.l1_max) f.l1_max = l1;
        if (sgn(im) != 0) f.real = false;
        f.re.push_back(std::move(re));
        f.im.push_back(std::move(im));
    }
    return f;
}

// Coefficient kernels: accumulate a*b into acc, and add |acc|^2 into a sum.
struct RealI64 {
    using type = long long;
    static type make(const Integer& re, const Integer&) { return re.get_si(); }
    static void fma(type& acc, const type& a, const type& b) { acc += a * b; }
    static void fma2(type& acc, const type& a, const type& b) { acc += 2 * a * b; }
};

struct GaussI64 {
    using type = std::array<long long, 2>;
    static type make(const Integer& re, const Integer& im) { return {re.get_si(), im.get_si()}; }
    static void fma(type& acc, const type& a, const type& b) {
        acc[0] += a[0] * b[0] - a[1] * b[1];
        acc[1] += a[0] * b[1] + a[1] * b[0];
    }
    static void fma2(type& acc, const type& a, const type& b) {
        fma(acc, a, b);
        fma(acc, a, b);
    }
};

struct GaussBig {
    using type = std::array<Integer, 2>;
    static type make(const Integer& re, const Integer& im) { return {re, im}; }
    static void fma(type& acc, const type& a, const type& b) {
        acc[0] += a[0] * b[0] - a[1] * b[1];
        acc[1] += a[0] * b[1] + a[1] * b[0];
    }
    static void fma2(type& acc, const type& a, const type& b) {
        fma(acc, a, b);
        fma(acc, a, b);
    }
};

class SquareSum {
public:
    void add(long long v) { add_u128(static_cast<u128>(static_cast<i128>(v) * v)); }
    void add(const std::array<long long, 2>& v) {
        add(v[0]);
        add(v[1]);
    }
    void add(const std::array<Integer, 2>& v) { big_ += v[0] * v[0] + v[1] * v[1]; }

    Integer total() {
        flush();
        return big_;
    }

private:
    void add_u128(u128 v) {
        if (small_ > std::numeric_limits<u128>::max() - v) flush();
        small_ += v;
    }
    void flush() {
        Integer hi(static_cast<unsigned long>(small_ >> 64));
        hi <<= 64;
        hi += static_cast<unsigned long>(static_cast<std::uint64_t>(small_));
        big_ += hi;
        small_ = 0;
    }

    u128 small_ = 0;
    Integer big_{0};
};

// Open-addressing map from high-half keys to accumulators, cleared in time
// proportional to the number of keys touched.
template <class C>
class FlatAccumulator {
public:
    FlatAccumulator() { rehash(1024); }

    C& operator[](u128 key) {
        if (2 * (touched_.size() + 1) > slots_.size()) rehash(2 * slots_.size());
        std::size_t mask = slots_.size() - 1;
        for (std::size_t i = U128Hash{}(key) & mask;; i = (i + 1) & mask) {
            Slot& s = slots_[i];
            if (!s.used) {
                s.used = true;
                s.key = key;
                touched_.push_back(i);
                return s.value;
            }
            if (s.key == key) return s.value;
        }
    }

    std::size_t size() const noexcept { return touched_.size(); }

    template <class F>
    void drain(F&& f) {
        for (std::size_t i : touched_) {
            f(slots_[i].value);
            slots_[i] = Slot{};
        }
        touched_.clear();
    }

private:
    struct Slot {
        u128 key = 0;
        C value{};
        bool used = false;
    };

    void rehash(std::size_t capacity) {
        std::vector<Slot> old;
        old.swap(slots_);
        std::vector<std::size_t> order;
        order.swap(touched_);
        slots_.assign(capacity, Slot{});
        for (std::size_t i : order) (*this)[old[i].key] = std::move(old[i].value);
    }

    std::vector<Slot> slots_;
    std::vector<std::size_t> touched_;
};

template <class Ops>
PackedTerms<typename Ops::type> to_packed(const IntegerForm& f) {
    PackedTerms<typename Ops::type> t;
    t.keys = f.keys;
    t.low = f.low;
    for (std::size_t i = 0; i < f.re.size(); ++i) t.coef.push_back(Ops::make(f.re[i], f.im[i]));
    return t;
}

std::map<u128, std::vector<std::size_t>> group_by_low(const std::vector<u128>& low) {
    std::map<u128, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < low.size(); ++i) groups[low[i]].push_back(i);
    return groups;
}

// Sum over gamma of |sum_{alpha + beta = gamma} a_alpha b_beta|^2. When `same` is set,
// a and b are the same polynomial and each unordered pair is visited once.
template <class Ops>
Integer product_square_sum(const PackedTerms<typename Ops::type>& a,
                           const PackedTerms<typename Ops::type>& b, bool same,
                           std::size_t term_cap) {
    using C = typename Ops::type;
    auto ga = group_by_low(a.low);
    auto gb = group_by_low(b.low);
    struct Block {
        u128 slice;
        const std::vector<std::size_t>* ia;
        const std::vector<std::size_t>* ib;
        bool diagonal;
    };
    std::size_t pairs = same ? ga.size() * (ga.size() + 1) / 2 : ga.size() * gb.size();
    require(pairs <= term_cap, ErrorKind::term_cap,
            "even-norm expansion needs " + std::to_string(pairs) + " slice blocks, above the term cap of " +
                std::to_string(term_cap));
    std::vector<Block> blocks;
    blocks.reserve(pairs);
    for (const auto& [la, ia] : ga)
        for (const auto& [lb, ib] : gb) {
            if (same && la > lb) continue;
            blocks.push_back({la + lb, &ia, &ib, same && la == lb});
        }
    std::stable_sort(blocks.begin(), blocks.end(),
                     [](const Block& x, const Block& y) { return x.slice < y.slice; });

    SquareSum sum;
    FlatAccumulator<C> acc;
    for (std::size_t start = 0; start < blocks.size();) {
        std::size_t stop = start;
        while (stop < blocks.size() && blocks[stop].slice == blocks[start].slice) ++stop;
        for (std::size_t k = start; k < stop; ++k) {
            const auto& ia = *blocks[k].ia;
            const auto& ib = *blocks[k].ib;
            bool diagonal = blocks[k].diagonal;
            for (std::size_t x = 0; x < ia.size(); ++x) {
                std::size_t i = ia[x];
                std::size_t y0 = diagonal ? x : 0;
                for (std::size_t y = y0; y < ib.size(); ++y) {
                    std::size_t j = ib[y];
                    C& slot = acc[a.keys[i] + b.keys[j]];
                    if (same && !(diagonal && x == y))
                        Ops::fma2(slot, a.coef[i], b.coef[j]);
                    else
                        Ops::fma(slot, a.coef[i], b.coef[j]);
                }
                if (acc.size() > term_cap)
                    fail(ErrorKind::term_cap,
                         "even-norm expansion exceeds term cap of " + std::to_string(term_cap));
            }
        }
        start = stop;
        acc.drain([&sum](const C& v) { sum.add(v); });
    }
    return sum.total();
}

Rational product_square_sum_exact(const TrigPoly& a, const TrigPoly& b, bool same, std::size_t term_cap) {
    auto pk = make_packing(a, b);
    if (!pk) {
        TrigPoly prod = poly_mul(a, b, term_cap);
        return prod.sum_modulus_squared();
    }
    IntegerForm fa = to_integer_form(a, *pk);
    IntegerForm fb = same ? fa : to_integer_form(b, *pk);

    // Every partial sum of a coefficient of a*b is bounded by l1(a) * max l1(b).
    static const Integer kSmall = Integer(1) << 62;
    Integer bound = fa.l1_sum * fb.l1_max;
    Integer total;
    if (bound < kSmall && fa.real && fb.real) {
        auto pa = to_packed<RealI64>(fa);
        total = same ? product_square_sum<RealI64>(pa, pa, true, term_cap)
                     : product_square_sum<RealI64>(pa, to_packed<RealI64>(fb), false, term_cap);
    } else if (bound < kSmall) {
        auto pa = to_packed<GaussI64>(fa);
        total = same ? product_square_sum<GaussI64>(pa, pa, true, term_cap)
                     : product_square_sum<GaussI64>(pa, to_packed<GaussI64>(fb), false, term_cap);
    } else {
        auto pa = to_packed<GaussBig>(fa);
        total = same ? product_square_sum<GaussBig>(pa, pa, true, term_cap)
                     : product_square_sum<GaussBig>(pa, to_packed<GaussBig>(fb), false, term_cap);
    }
    Integer den = fa.denominator * fb.denominator;
    Rational out(total, den * den);
    out.canonicalize();
    return out * a.scale_squared() * b.scale_squared();
}

} // namespace

NormEstimate norm_h2_exact(const DirichletPoly& d) { return exact_estimate(d.sum_modulus_squared(), 2.0); }

Rational even_moment_exact(const TrigPoly& p, unsigned r, std::size_t term_cap) {
    require(r >= 1, ErrorKind::domain, "even moment order must be >= 1");
    if (p.empty()) return Rational(0);
    if (r == 1) return p.sum_modulus_squared();
    if (r == 2) return product_square_sum_exact(p, p, true, term_cap);
    TrigPoly rest = poly_pow(p, r - 1, term_cap);
    return product_square_sum_exact(rest, p, false, term_cap);
}

NormEstimate norm_even_exact(const TrigPoly& p, unsigned exponent, std::size_t term_cap) {
    require(exponent >= 2 && exponent % 2 == 0, ErrorKind::domain,
            "exact norm needs an even positive exponent, got " + std::to_string(exponent));
    return exact_estimate(even_moment_exact(p, exponent / 2, term_cap), exponent);
}

NormEstimate norm_even_exact(const DirichletPoly& d, unsigned exponent, std::size_t term_cap) {
    return norm_even_exact(bohr_lift(d), exponent, term_cap);
}

Rational qn_moment_exact(std::uint64_t n, unsigned m) {
    require(n >= 1, ErrorKind::domain, "qn_moment_exact: n must be >= 1");
    // Truncated power series (sum_{k <= m} x^k / (k!)^2)^n.
    std::vector<Rational> base(m + 1);
    for (unsigned k = 0; k <= m; ++k) {
        Integer f = factorial(k);
        base[k] = Rational(Integer(1), f * f);
    }
    auto mul = [m](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> out(m + 1);
        for (unsigned i = 0; i <= m; ++i) {
            if (sgn(a[i]) == 0) continue;
            for (unsigned j = 0; i + j <= m; ++j) out[i + j] += a[i] * b[j];
        }
        return out;
    };
    std::vector<Rational> result(m + 1);
    result[0] = 1;
    for (std::uint64_t e = n; e != 0; e >>= 1) {
        if (e & 1u) result = mul(result, base);
        if (e > 1) base = mul(base, base);
    }
    Integer mf = factorial(m);
    Integer npow;
    mpz_ui_pow_ui(npow.get_mpz_t(), n, m);
    Rational out = result[m] * Rational(mf * mf, npow);
    out.canonicalize();
    return out;
}

// ---------------------------------------------------------------------------
// Monte Carlo on the torus.

namespace {

struct CompiledPoly {
    std::size_t variables = 0;
    std::vector<std::uint32_t> max_exponent;  // per variable
    std::vector<std::complex<double>> coef;
    std::vector<std::uint32_t> offsets;  // term i uses factors[offsets[i] .. offsets[i+1])
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  // (variable, exponent)
    std::vector<std::size_t> table_offset;  // start of variable v in the power table
    std::size_t table_size = 0;
};

CompiledPoly compile(const TrigPoly& p) {
    CompiledPoly cp;
    std::map<std::uint32_t, std::uint32_t> var_of;
    for (const auto& [alpha, c] : p.terms())
        for (const auto& e : alpha.entries()) var_of.try_emplace(e.position, 0);
    std::uint32_t next = 0;
    for (auto& [pos, v] : var_of) v = next++;
    cp.variables = var_of.size();
    cp.max_exponent.assign(cp.variables, 0);
    double scale = std::sqrt(p.scale_squared().get_d());
    cp.offsets.push_back(0);
    for (const auto& [alpha, c] : p.terms()) {
        cp.coef.push_back(c.to_complex() * scale);
        for (const auto& e : alpha.entries()) {
            std::uint32_t v = var_of[e.position];
            cp.factors.emplace_back(v, e.exponent);
            cp.max_exponent[v] = std::max(cp.max_exponent[v], e.exponent);
        }
        cp.offsets.push_back(static_cast<std::uint32_t>(cp.factors.size()));
    }
    for (std::size_t v = 0; v < cp.variables; ++v) {
        cp.table_offset.push_back(cp.table_size);
        cp.table_size += cp.max_exponent[v] + 1;
    }
    return cp;
}

// Welford-style accumulator for two statistics with their co-moment.
struct JointAccumulator {
    std::uint64_t n = 0;
    std::array<double, 2> mean{};
    std::array<std::array<double, 2>, 2> comoment{};

    void push(const std::array<double, 2>& x) {
        ++n;
        std::array<double, 2> before{x[0] - mean[0], x[1] - mean[1]};
        for (int i = 0; i < 2; ++i) mean[i] += before[i] / static_cast<double>(n);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) comoment[i][j] += before[i] * (x[j] - mean[j]);
    }

    void merge(const JointAccumulator& o) {
        if (o.n == 0) return;
        if (n == 0) {
            *this = o;
            return;
        }
        double total = static_cast<double>(n + o.n);
        std::array<double, 2> delta{o.mean[0] - mean[0], o.mean[1] - mean[1]};
        double w = static_cast<double>(n) * static_cast<double>(o.n) / total;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) comoment[i][j] += o.comoment[i][j] + delta[i] * delta[j] * w;
        for (int i = 0; i < 2; ++i) mean[i] += delta[i] * static_cast<double>(o.n) / total;
        n += o.n;
    }
};

JointAccumulator run_shard(const CompiledPoly& cp, std::array<double, 2> exponents, std::uint64_t seed,
                           unsigned shard, std::uint64_t count) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(shard), 0x48617264u};
    std::mt19937_64 rng(seq);
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    std::vector<std::complex<double>> table(cp.table_size);
    JointAccumulator acc;
    for (std::uint64_t s = 0; s < count; ++s) {
        for (std::size_t v = 0; v < cp.variables; ++v) {
            double theta = static_cast<double>(rng() >> 11) * 0x1.0p-53 * kTwoPi;
            std::complex<double> w = std::polar(1.0, theta);
            std::complex<double>* row = table.data() + cp.table_offset[v];
            row[0] = 1.0;
            for (std::uint32_t e = 1; e <= cp.max_exponent[v]; ++e) row[e] = row[e - 1] * w;
        }
        std::complex<double> value = 0.0;
        for (std::size_t t = 0; t < cp.coef.size(); ++t) {
            std::complex<double> term = cp.coef[t];
            for (std::uint32_t f = cp.offsets[t]; f < cp.offsets[t + 1]; ++f)
                term *= table[cp.table_offset[cp.factors[f].first] + cp.factors[f].second];
            value += term;
        }
        double modulus = std::abs(value);
        acc.push({std::pow(modulus, exponents[0]), std::pow(modulus, exponents[1])});
    }
    return acc;
}

JointAccumulator sample(const TrigPoly& p, std::array<double, 2> exponents, const MonteCarloConfig& cfg) {
    require(cfg.samples > 0, ErrorKind::domain, "Monte Carlo needs at least one sample");
    require(cfg.shards > 0, ErrorKind::domain, "Monte Carlo needs at least one shard");
    CompiledPoly cp = compile(p);
    std::vector<JointAccumulator> parts(cfg.shards);
    unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, cfg.shards);
    std::atomic<unsigned> next{0};
    auto worker = [&] {
        for (unsigned s = next++; s < cfg.shards; s = next++) {
            std::uint64_t count = cfg.samples / cfg.shards + (s < cfg.samples % cfg.shards ? 1 : 0);
            parts[s] = run_shard(cp, exponents, cfg.seed, s, count);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    JointAccumulator total;
    for (const auto& part : parts) total.merge(part);
    return total;
}

double covariance(const JointAccumulator& acc, int i, int j) {
    return acc.n > 1 ? acc.comoment[i][j] / static_cast<double>(acc.n - 1) : 0.0;
}

} // namespace

JointMomentEstimate joint_moments_mc(const TrigPoly& p, std::array<double, 2> exponents,
                                     const MonteCarloConfig& cfg) {
    JointAccumulator acc = sample(p, exponents, cfg);
    JointMomentEstimate est;
    est.mean = acc.mean;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) est.covariance[i][j] = covariance(acc, i, j);
    est.samples = acc.n;
    est.seed = cfg.seed;
    return est;
}

MomentEstimate moment_mc(const TrigPoly& p, double exponent, const MonteCarloConfig& cfg) {
    JointMomentEstimate joint = joint_moments_mc(p, {exponent, exponent}, cfg);
    MomentEstimate m;
    m.mean = joint.mean[0];
    m.std_error = std::sqrt(joint.covariance[0][0] / static_cast<double>(joint.samples));
    m.samples = joint.samples;
    m.seed = joint.seed;
    return m;
}

NormEstimate norm_mc(const TrigPoly& p, double exponent, const MonteCarloConfig& cfg) {
    check_exponent(exponent);
    MomentEstimate m = moment_mc(p, exponent, cfg);
    NormEstimate e;
    e.p = exponent;
    e.method = NormMethod::monte_carlo;
    e.value = m.mean > 0.0 ? std::pow(m.mean, 1.0 / exponent) : 0.0;
    e.std_error = m.mean > 0.0 ? e.value * m.std_error / (exponent * m.mean) : 0.0;
    e.samples = m.samples;
    e.seed = m.seed;
    return e;
}

NormEstimate norm_mc(const DirichletPoly& d, double exponent, const MonteCarloConfig& cfg) {
    return norm_mc(bohr_lift(d), exponent, cfg);
}

NormEstimate norm(const TrigPoly& p, double exponent, const NormOptions& opts) {
    check_exponent(exponent);
    bool even = is_even_integer(exponent);
    switch (opts.policy) {
    case MethodPolicy::monte_carlo:
        return norm_mc(p, exponent, opts.mc);
    case MethodPolicy::exact:
        require(even, ErrorKind::domain, "exact norms need an even integer exponent");
        return norm_even_exact(p, static_cast<unsigned>(exponent), opts.term_cap);
    case MethodPolicy::automatic:
        if (even) {
            try {
                return norm_even_exact(p, static_cast<unsigned>(exponent), opts.term_cap);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::term_cap) throw;
            }
        }
        return norm_mc(p, exponent, opts.mc);
    }
    return {};
}

NormEstimate norm(const DirichletPoly& d, double exponent, const NormOptions& opts) {
    return norm(bohr_lift(d), exponent, opts);
}

double ratio_of_roots_std_error(const JointMomentEstimate& est, double a, double b) {
    if (est.samples == 0 || est.mean[0] <= 0.0 || est.mean[1] <= 0.0) return 0.0;
    double value = std::pow(est.mean[0], 1.0 / a) / std::pow(est.mean[1], 1.0 / b);
    std::array<double, 2> grad{value / (a * est.mean[0]), -value / (b * est.mean[1])};
    double var = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) var += grad[i] * grad[j] * est.covariance[i][j];
    return std::sqrt(std::max(0.0, var) / static_cast<double>(est.samples));
}

namespace {

RatioEstimate ratio_exact(const TrigPoly& poly, double q, double p, std::size_t cap) {
    RatioEstimate r;
    r.q = q;
    r.p = p;
    r.method = NormMethod::exact;
    r.q_power = even_moment_exact(poly, static_cast<unsigned>(q / 2), cap);
    r.p_power = even_moment_exact(poly, static_cast<unsigned>(p / 2), cap);
    double num = root_of_rational(*r.q_power, q);
    double den = root_of_rational(*r.p_power, p);
    r.value = std::isfinite(num) && std::isfinite(den) && num > 0.0 && den > 0.0
                  ? num / den
                  : std::exp(log_rational(*r.q_power) / q - log_rational(*r.p_power) / p);
    return r;
}

RatioEstimate ratio_mc(const TrigPoly& poly, double q, double p, const MonteCarloConfig& cfg) {
    JointMomentEstimate est = joint_moments_mc(poly, {q, p}, cfg);
    RatioEstimate r;
    r.q = q;
    r.p = p;
    r.method = NormMethod::monte_carlo;
    r.value = std::pow(est.mean[0], 1.0 / q) / std::pow(est.mean[1], 1.0 / p);
    r.std_error = ratio_of_roots_std_error(est, q, p);
    r.samples = est.samples;
    r.seed = est.seed;
    return r;
}

} // namespace

RatioEstimate ratio(const TrigPoly& poly, double q, double p, const NormOptions& opts) {
    check_exponent(p);
    check_exponent(q);
    require(p < q, ErrorKind::domain, "ratio requires p < q");
    require(!poly.empty(), ErrorKind::empty_polynomial, "ratio of the zero polynomial is undefined");
    bool even = is_even_integer(p) && is_even_integer(q);
    switch (opts.policy) {
    case MethodPolicy::monte_carlo:
        return ratio_mc(poly, q, p, opts.mc);
    case MethodPolicy::exact:
        require(even, ErrorKind::domain, "exact ratio needs even integer exponents");
        return ratio_exact(poly, q, p, opts.term_cap);
    case MethodPolicy::automatic:
        if (even) {
            try {
                return ratio_exact(poly, q, p, opts.term_cap);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::term_cap) throw;
            }
        }
        return ratio_mc(poly, q, p, opts.mc);
    }
    return {};
}

RatioEstimate ratio(const DirichletPoly& d, double q, double p, const NormOptions& opts) {
    require(!d.empty(), ErrorKind::empty_polynomial, "ratio of the zero polynomial is undefined");
    return ratio(bohr_lift(d), q, p, opts);
}

} // namespace hardy
