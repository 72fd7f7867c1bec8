#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hardy/polyalg.hpp"

namespace hardy {

/// A positive, non-increasing sequence (lambda_n)_{n >= 1}.
class MultiplierSeq {
public:
    /// lambda_n = n^{-sigma}, sigma >= 0.
    static MultiplierSeq power(double sigma);
    /// lambda_n = exp(-c log m / log log m) with m = max(n, 16), c >= 0. Clamping at 16
    /// keeps the sequence non-increasing where log log n is small or negative.
    static MultiplierSeq log_exp(double c);
    /// lambda_n = values[n - 1]; queries past the table are rejected.
    static MultiplierSeq table(std::vector<double> values);

    double operator()(std::uint64_t n) const;
    /// Exact value when the family admits one (integer sigma for the power family).
    std::optional<Rational> exact(std::uint64_t n) const;
    /// lambda_n as a rational: exact() if available, else the exact value of the double.
    Rational rational(std::uint64_t n) const;

    /// Non-increasing on n <= min(limit, table size), checked at construction.
    bool decreasing() const noexcept { return decreasing_; }
    const std::string& description() const noexcept { return description_; }
    std::optional<std::uint64_t> size() const;

private:
    enum class Family { power, log_exp, table };

    MultiplierSeq(Family family, double param, std::vector<double> values, std::string description);

    Family family_;
    double param_;
    std::vector<double> values_;
    std::string description_;
    bool decreasing_ = false;
};

inline constexpr std::uint64_t kMultiplierCheckLimit = 100'000;

/// sum lambda_n a_n n^{-s}.
DirichletPoly apply_multiplier(const DirichletPoly& d, const MultiplierSeq& lambda);
/// sum_{n <= x} a_n n^{-s}.
DirichletPoly partial_sum(const DirichletPoly& d, double x);

/// g(x) = exp((log x / log_2 x) A) with A = log sqrt(q/p) + eps; x > e^e, eps > 0, p < q.
double g_growth(double x, double p, double q, double eps);

/// lambda_n / (n log log n) (sqrt(q/p) + eps)^{log n / log log n}.
double condition_term(const MultiplierSeq& lambda, std::uint64_t n, double p, double q, double eps);

enum class SeriesTrend { converging, diverging, inconclusive };
const char* to_string(SeriesTrend t) noexcept;

struct SeriesRow {
    std::uint64_t n;
    double term;
    double partial_sum;
};

struct ConditionSeries {
    std::vector<SeriesRow> rows;  // n = 16 .. N
    double tail_ratio = 0.0;      // sum over (N/2, N] divided by sum over (N/4, N/2]
    SeriesTrend trend = SeriesTrend::inconclusive;
};

inline constexpr std::uint64_t kSeriesStart = 16;

/// Partial sums of the multiplier condition from n = 16 to N, plus a trend heuristic on
/// the last two dyadic blocks: ratio < 0.9 converging, > 1.0 diverging, else inconclusive.
ConditionSeries condition_series(const MultiplierSeq& lambda, double p, double q, double eps,
                                 std::uint64_t N);

/// ||D||_p (2 lambda_m g(m) + A sum_{n=m}^{M-1} lambda_n g(n) / (n log_2 n)), the Abel
/// summation bound for ||sum_{n=m}^{M} lambda_n a_n n^{-s}||_q. Requires 16 <= m < M.
double abel_tail_bound(double d_norm_p, const MultiplierSeq& lambda, double p, double q, double eps,
                       std::uint64_t m, std::uint64_t M);

} // namespace hardy
