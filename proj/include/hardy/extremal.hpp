#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hardy/norms.hpp"
#include "hardy/polyalg.hpp"

namespace hardy {

struct ExtremalParams {
    double x = 0.0;
    unsigned k = 0;          // [log x / (log_2 x + log_3 x)]
    std::uint64_t n = 0;     // pi(x^{1/k})
    std::uint64_t root = 0;  // largest integer t with t^k <= x
    double f = 0.0;          // (1/2q - 1/2p) log k / k - q k / n
    bool in_validity_range = false;  // x > e^{e^e} and x^{1/k} >= 599
    bool hypothesis_ok = false;      // n > [kq/2] + 1 > [kp/2] + 1 > 1
};

/// Parameters of the extremal family. Outside the asymptotic validity range the values
/// are still computed and the report is flagged. Requires x > e (iterated logs defined)
/// and k >= 1.
ExtremalParams extremal_params(double x, double p, double q);

/// Q_n^k for the parameters of x.
TrigPoly extremal_trig(const ExtremalParams& params, std::size_t term_cap = kDefaultTermCap);
/// D_x = (n^{-1/2} sum_{i <= n} p_i^{-s})^k, supported on m <= x.
DirichletPoly build_extremal(double x, std::size_t term_cap = kDefaultTermCap);

struct LowerBoundReport {
    ExtremalParams params;
    double p = 0.0;
    double q = 0.0;
    RatioEstimate ratio;
    double log_ratio_per_k = 0.0;  // log(ratio) / k
    double target = 0.0;           // exp(k (log sqrt(q/p) + f))
    std::optional<double> asymptote;
    std::optional<double> bracket_width;
    // ||Q_n^k||_q^q >= (int |Q_n|^{2m})^{kq/2m} with m = [kq/2].
    unsigned chain_m = 0;
    double chain_lhs = 0.0;
    double chain_rhs = 0.0;
    std::optional<bool> chain_exact_holds;  // set when both sides are exact rationals
    std::vector<std::string> flags;
};

/// Ratio ||D_x||_q / ||D_x||_p next to its target, asymptote and proof-chain check. The
/// exact path expands D_x; the Monte Carlo path samples Q_n and raises it to the k-th power.
LowerBoundReport lower_bound_report(double x, double p, double q, const NormOptions& opts = {});

} // namespace hardy
