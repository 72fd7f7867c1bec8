#pragma once

#include <cstdint>
#include <optional>

#include "hardy/polyalg.hpp"
#include "hardy/rational.hpp"

namespace hardy {

/// log_k x, the k-fold iterated natural logarithm. Throws domain when undefined.
double iterated_log(double x, unsigned k);

/// Hypercontractive constant (q/p)^{m/2} for m-homogeneous polynomials.
double bayart_bound(unsigned m, double p, double q);

/// Stirling-type upper bound for binom(m+n-1, m); requires n >= 2, m >= 1.
double stirling_binom_upper(unsigned m, unsigned n);

/// sqrt(2 pi m) (m/e)^m e^{-4m^2/n}, a lower bound for int |Q_n|^{2m} when n > m + 1.
double qn_moment_lower(std::uint64_t n, unsigned m);

/// sqrt(2 pi r) (r/e)^r e^{1/(12r)}, an upper bound for int |Q_n|^{2r}, r >= 1.
double qn_moment_upper(double r);

/// Gamma(r + 1), the n -> infinity limit of int |Q_n|^{2r}. Exact factorial for integer r.
double qn_moment_limit(double r);

/// k^{1/2q - 1/2p} (q/p)^{k/2} e^{-q k^2/n}. The implicit constant of the lower bound it
/// shapes is unknown, so this is a trend reference, not a certified bound.
double ratio_lower_expression(std::uint64_t n, unsigned k, double p, double q);

/// (log x / log y) log(1 + y/log x) + (y / log y) log(1 + log x / y); 2 <= y <= x.
double bruijn_z(double x, double y);

struct OptimalY {
    double value;      // exp((log_2 x)^2 / (log_2 x + log_3 x))
    double alternate;  // (log x / log_2 x) exp((log_3 x)^2 / (log_2 x + log_3 x))
};

/// The smooth-part threshold that balances |S(x,y)| against the hypercontractive factor.
/// Requires x > e^e. Both closed forms are evaluated and must agree to 10 digits.
OptimalY optimal_y(double x);

/// Main term exp((log x / log_2 x) log sqrt(q/p)) of the two-sided estimate; x > e^e.
double mho_asymptote(double x, double p, double q);
/// Relative width log_3 x / log_2 x of the unquantified correction in the exponent.
double asymptote_bracket_width(double x);

struct BoundReport {
    double x = 0.0;
    double p = 0.0;
    double q = 0.0;
    double y_used = 0.0;
    std::optional<std::uint64_t> smooth_count;  // exact |S(x, y)|
    std::optional<double> log_smooth_count;     // Bruijn Z estimate, when not counted
    double hyper_factor = 0.0;                  // exp((log x / log y) log sqrt(q/p))
    double total_upper = 0.0;
    std::optional<double> asymptote;            // only when x > e^e
    bool certified = true;                      // false when the Bruijn estimate was used
};

/// Upper bound |S(x,y)| exp((log x / log y) log sqrt(q/p)) on ||D||_q / ||D||_p, valid for
/// every Dirichlet polynomial supported on n <= x. With y unset, optimal_y(x) clamped into
/// [2, x] is used (or 2 when x <= e^e). Counts exactly up to exact_count_limit.
BoundReport certified_upper_bound(double x, double p, double q, std::optional<double> y = std::nullopt,
                                  double exact_count_limit = 1e9);

/// (sum |a_n|^2 / d(n))^{1/2}, Helson's lower bound for ||D||_{H_1}.
double helson_lower(const DirichletPoly& d);
/// sum |a_n|^2 / d(n), exact.
Rational helson_lower_squared(const DirichletPoly& d);

/// m^{1/2q - 1/2p} (q/p)^{m/2}.
double conjecture_bound(unsigned m, double p, double q);

/// kappa(gamma, m) = #{alpha : |alpha| = m, alpha <= gamma}.
std::uint64_t kappa(const MultiIndex& gamma, unsigned m);

} // namespace hardy
