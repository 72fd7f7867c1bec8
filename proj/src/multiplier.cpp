#include "hardy/multiplier.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

namespace hardy {

namespace {

std::string shortest(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace

MultiplierSeq::MultiplierSeq(Family family, double param, std::vector<double> values, std::string description)
    : family_(family), param_(param), values_(std::move(values)), description_(std::move(description)) {
    std::uint64_t limit = std::min<std::uint64_t>(kMultiplierCheckLimit, size().value_or(kMultiplierCheckLimit));
    decreasing_ = true;
    double prev = (*this)(1);
    for (std::uint64_t n = 2; n <= limit && decreasing_; ++n) {
        double cur = (*this)(n);
        decreasing_ = cur <= prev;
        prev = cur;
    }
}

MultiplierSeq MultiplierSeq::power(double sigma) {
    require(std::isfinite(sigma) && sigma >= 0.0, ErrorKind::domain, "power multiplier needs sigma >= 0");
    return MultiplierSeq(Family::power, sigma, {}, "n^-" + shortest(sigma));
}

MultiplierSeq MultiplierSeq::log_exp(double c) {
    require(std::isfinite(c) && c >= 0.0, ErrorKind::domain, "log-exp multiplier needs c >= 0");
    return MultiplierSeq(Family::log_exp, c, {}, "exp(-" + shortest(c) + " log n / log log n)");
}

MultiplierSeq MultiplierSeq::table(std::vector<double> values) {
    require(!values.empty(), ErrorKind::domain, "multiplier table is empty");
    for (double v : values)
        require(std::isfinite(v) && v >= 0.0, ErrorKind::domain, "multiplier table values must be >= 0");
    return MultiplierSeq(Family::table, 0.0, std::move(values), "table");
}

std::optional<std::uint64_t> MultiplierSeq::size() const {
    if (family_ == Family::table) return values_.size();
    return std::nullopt;
}

double MultiplierSeq::operator()(std::uint64_t n) const {
    require(n >= 1, ErrorKind::domain, "multiplier index starts at 1");
    switch (family_) {
    case Family::power:
        return std::pow(static_cast<double>(n), -param_);
    case Family::log_exp: {
        double m = static_cast<double>(std::max<std::uint64_t>(n, 16));
        double lm = std::log(m);
        return std::exp(-param_ * lm / std::log(lm));
    }
    case Family::table:
        require(n <= values_.size(), ErrorKind::domain, "multiplier index beyond the table");
        return values_[n - 1];
    }
    return 0.0;
}

std::optional<Rational> MultiplierSeq::exact(std::uint64_t n) const {
    if (family_ == Family::power && std::floor(param_) == param_ && param_ <= 64.0)
        return pow(Rational(Integer(static_cast<unsigned long>(n))), -static_cast<long>(param_));
    return std::nullopt;
}

Rational MultiplierSeq::rational(std::uint64_t n) const {
    if (auto e = exact(n)) return *e;
    return rational_from_double((*this)(n));
}

DirichletPoly apply_multiplier(const DirichletPoly& d, const MultiplierSeq& lambda) {
    DirichletPoly out;
    for (const auto& [n, c] : d.terms()) out.add_term(n, c * ExactComplex(lambda.rational(n)));
    if (!out.empty()) out.set_scale_squared(d.scale_squared());
    return out;
}

DirichletPoly partial_sum(const DirichletPoly& d, double x) {
    DirichletPoly out;
    for (const auto& [n, c] : d.terms()) {
        if (static_cast<double>(n) > x) break;
        out.add_term(n, c);
    }
    if (!out.empty()) out.set_scale_squared(d.scale_squared());
    return out;
}

double g_growth(double x, double p, double q, double eps) {
    require(std::isfinite(p) && std::isfinite(q) && p >= 1.0 && p < q, ErrorKind::domain,
            "exponents must satisfy 1 <= p < q");
    require(eps > 0.0, ErrorKind::domain, "g_growth needs eps > 0");
    require(x > std::exp(std::numbers::e), ErrorKind::domain, "g_growth needs x > e^e");
    double l1 = std::log(x);
    return std::exp(l1 / std::log(l1) * (0.5 * std::log(q / p) + eps));
}

double condition_term(const MultiplierSeq& lambda, std::uint64_t n, double p, double q, double eps) {
    require(std::isfinite(p) && std::isfinite(q) && p >= 1.0 && p < q, ErrorKind::domain,
            "exponents must satisfy 1 <= p < q");
    require(eps > 0.0, ErrorKind::domain, "condition_term needs eps > 0");
    require(n >= 3, ErrorKind::domain, "condition_term needs log log n > 0");
    double nn = static_cast<double>(n);
    double l1 = std::log(nn);
    double l2 = std::log(l1);
    return lambda(n) / (nn * l2) * std::exp(l1 / l2 * std::log(std::sqrt(q / p) + eps));
}

const char* to_string(SeriesTrend t) noexcept {
    switch (t) {
    case SeriesTrend::converging: return "converging";
    case SeriesTrend::diverging: return "diverging";
    case SeriesTrend::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

ConditionSeries condition_series(const MultiplierSeq& lambda, double p, double q, double eps,
                                 std::uint64_t N) {
    require(N >= kSeriesStart, ErrorKind::domain, "condition_series needs N >= 16");
    ConditionSeries out;
    out.rows.reserve(N - kSeriesStart + 1);
    double sum = 0.0;
    double upper = 0.0;  // (N/2, N]
    double lower = 0.0;  // (N/4, N/2]
    for (std::uint64_t n = kSeriesStart; n <= N; ++n) {
        double t = condition_term(lambda, n, p, q, eps);
        sum += t;
        out.rows.push_back({n, t, sum});
        if (n > N / 2) {
            upper += t;
        } else if (n > N / 4) {
            lower += t;
        }
    }
    if (N / 4 >= kSeriesStart && lower > 0.0) {
        out.tail_ratio = upper / lower;
        if (out.tail_ratio < 0.9) {
            out.trend = SeriesTrend::converging;
        } else if (out.tail_ratio > 1.0) {
            out.trend = SeriesTrend::diverging;
        }
    }
    return out;
}

double abel_tail_bound(double d_norm_p, const MultiplierSeq& lambda, double p, double q, double eps,
                       std::uint64_t m, std::uint64_t M) {
    require(m >= kSeriesStart && m < M, ErrorKind::domain, "abel_tail_bound needs 16 <= m < M");
    require(d_norm_p >= 0.0, ErrorKind::domain, "abel_tail_bound needs a nonnegative norm");
    double a = 0.5 * std::log(q / p) + eps;
    double tail = 0.0;
    for (std::uint64_t n = m; n < M; ++n) {
        double nn = static_cast<double>(n);
        tail += lambda(n) * g_growth(nn, p, q, eps) / (nn * std::log(std::log(nn)));
    }
    return d_norm_p * (2.0 * lambda(m) * g_growth(static_cast<double>(m), p, q, eps) + a * tail);
}

} // namespace hardy
