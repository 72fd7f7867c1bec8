#include "hardy/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "hardy/numtheory.hpp"

namespace hardy {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

void check_pq(double p, double q) {
    require(std::isfinite(p) && std::isfinite(q) && p >= 1.0 && p < q, ErrorKind::domain,
            "exponents must satisfy 1 <= p < q");
}

double log_sqrt_ratio(double p, double q) { return 0.5 * std::log(q / p); }

} // namespace

double iterated_log(double x, unsigned k) {
    double v = x;
    for (unsigned i = 0; i < k; ++i) {
        require(v > 0.0, ErrorKind::domain,
                "log_" + std::to_string(k) + " undefined at x = " + std::to_string(x));
        v = std::log(v);
    }
    return v;
}

double bayart_bound(unsigned m, double p, double q) {
    check_pq(p, q);
    return std::pow(q / p, 0.5 * m);
}

double stirling_binom_upper(unsigned m, unsigned n) {
    require(n >= 2 && m >= 1, ErrorKind::domain, "stirling_binom_upper needs n >= 2, m >= 1");
    double top = static_cast<double>(m) + n - 1;
    double nm1 = n - 1.0;
    double mm = m;
    double log_value = -0.5 * std::log(2.0 * kPi) + 0.5 * std::log(top / (nm1 * mm)) + top * std::log(top) -
                       nm1 * std::log(nm1) - mm * std::log(mm);
    return std::exp(log_value);
}

double qn_moment_lower(std::uint64_t n, unsigned m) {
    require(m >= 1 && n > static_cast<std::uint64_t>(m) + 1, ErrorKind::domain,
            "qn_moment_lower needs n > m + 1");
    double mm = m;
    return std::sqrt(2.0 * kPi * mm) * std::pow(mm / kE, mm) * std::exp(-4.0 * mm * mm / static_cast<double>(n));
}

double qn_moment_upper(double r) {
    require(r >= 1.0, ErrorKind::domain, "qn_moment_upper needs r >= 1");
    return std::sqrt(2.0 * kPi * r) * std::pow(r / kE, r) * std::exp(1.0 / (12.0 * r));
}

double qn_moment_limit(double r) {
    require(r >= 0.0, ErrorKind::domain, "qn_moment_limit needs r >= 0");
    if (std::floor(r) == r && r <= 170.0) {
        double f = 1.0;
        for (int k = 2; k <= static_cast<int>(r); ++k) f *= k;
        return f;
    }
    return std::tgamma(r + 1.0);
}

double ratio_lower_expression(std::uint64_t n, unsigned k, double p, double q) {
    check_pq(p, q);
    auto mq = static_cast<std::uint64_t>(std::floor(k * q / 2.0));
    auto mp = static_cast<std::uint64_t>(std::floor(k * p / 2.0));
    require(n > mq + 1 && mq + 1 > mp + 1 && mp + 1 > 1, ErrorKind::domain,
            "ratio_lower_expression needs n > [kq/2] + 1 > [kp/2] + 1 > 1");
    double kk = k;
    return std::pow(kk, 1.0 / (2.0 * q) - 1.0 / (2.0 * p)) * std::pow(q / p, kk / 2.0) *
           std::exp(-q * kk * kk / static_cast<double>(n));
}

double bruijn_z(double x, double y) {
    require(x > 1.0 && y >= 2.0 && y <= x, ErrorKind::domain, "bruijn_z needs 2 <= y <= x");
    double lx = std::log(x);
    double ly = std::log(y);
    return lx / ly * std::log1p(y / lx) + y / ly * std::log1p(lx / y);
}

OptimalY optimal_y(double x) {
    require(x > std::exp(kE), ErrorKind::domain, "optimal_y needs x > e^e");
    double l1 = std::log(x);
    double l2 = std::log(l1);
    double l3 = std::log(l2);
    OptimalY y{std::exp(l2 * l2 / (l2 + l3)), l1 / l2 * std::exp(l3 * l3 / (l2 + l3))};
    if (std::abs(y.value - y.alternate) > 1e-10 * std::abs(y.value))
        throw std::logic_error("optimal_y: closed forms disagree at x = " + std::to_string(x));
    return y;
}

double mho_asymptote(double x, double p, double q) {
    check_pq(p, q);
    require(x > std::exp(kE), ErrorKind::domain, "mho_asymptote needs x > e^e");
    double l1 = std::log(x);
    return std::exp(l1 / std::log(l1) * log_sqrt_ratio(p, q));
}

double asymptote_bracket_width(double x) {
    require(x > std::exp(kE), ErrorKind::domain, "bracket width needs x > e^e");
    return iterated_log(x, 3) / iterated_log(x, 2);
}

BoundReport certified_upper_bound(double x, double p, double q, std::optional<double> y,
                                  double exact_count_limit) {
    check_pq(p, q);
    require(std::isfinite(x) && x >= 2.0, ErrorKind::domain, "certified_upper_bound needs x >= 2");
    BoundReport r;
    r.x = x;
    r.p = p;
    r.q = q;
    if (y) {
        r.y_used = *y;
    } else {
        r.y_used = x > std::exp(kE) ? std::clamp(optimal_y(x).value, 2.0, x) : 2.0;
    }
    require(r.y_used >= 2.0 && r.y_used <= x, ErrorKind::domain, "certified_upper_bound needs 2 <= y <= x");

    double log_hyper = std::log(x) / std::log(r.y_used) * log_sqrt_ratio(p, q);
    r.hyper_factor = std::exp(log_hyper);
    if (x <= exact_count_limit) {
        r.smooth_count = smooth_count(x, r.y_used);
        r.total_upper = static_cast<double>(*r.smooth_count) * r.hyper_factor;
    } else {
        r.log_smooth_count = bruijn_z(x, r.y_used);
        r.total_upper = std::exp(*r.log_smooth_count + log_hyper);
        r.certified = false;
    }
    if (x > std::exp(kE)) r.asymptote = mho_asymptote(x, p, q);
    return r;
}

Rational helson_lower_squared(const DirichletPoly& d) {
    require(!d.empty(), ErrorKind::empty_polynomial, "helson_lower of the zero polynomial");
    Rational total;
    for (const auto& [n, c] : d.terms())
        total += c.modulus_squared() / Rational(Integer(static_cast<unsigned long>(divisor_count(n))));
    return total * d.scale_squared();
}

double helson_lower(const DirichletPoly& d) { return std::sqrt(helson_lower_squared(d).get_d()); }

double conjecture_bound(unsigned m, double p, double q) {
    check_pq(p, q);
    double mm = m;
    return std::pow(mm, 1.0 / (2.0 * q) - 1.0 / (2.0 * p)) * std::pow(q / p, mm / 2.0);
}

std::uint64_t kappa(const MultiIndex& gamma, unsigned m) {
    // ways[t]: number of alpha <= gamma restricted to the entries seen so far with |alpha| = t.
    std::vector<std::uint64_t> ways(m + 1, 0);
    ways[0] = 1;
    for (const auto& e : gamma.entries()) {
        std::vector<std::uint64_t> next(m + 1, 0);
        for (unsigned t = 0; t <= m; ++t) {
            if (ways[t] == 0) continue;
            for (std::uint32_t a = 0; a <= e.exponent && t + a <= m; ++a) next[t + a] += ways[t];
        }
        ways = std::move(next);
    }
    return ways[m];
}

} // namespace hardy
