#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "hardy/polyalg.hpp"
#include "hardy/rational.hpp"

namespace hardy {

enum class NormMethod { exact, monte_carlo };

const char* to_string(NormMethod m) noexcept;

struct NormEstimate {
    double value = 0.0;
    double p = 2.0;
    NormMethod method = NormMethod::exact;
    // Monte Carlo only.
    std::optional<double> std_error;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> seed;
    // Exact only: ||P||_p^p as a rational (absent for the Parseval fast path on non-rational roots).
    std::optional<Rational> power;
};

struct MonteCarloConfig {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    /// Samples are split into this many independently seeded streams. The estimate is a
    /// function of (seed, samples, shards) only, whatever the number of threads.
    unsigned shards = 8;
    unsigned threads = 0;  // 0: hardware concurrency
};

/// ||D||_{H_2} = (sum |a_n|^2)^{1/2}.
NormEstimate norm_h2_exact(const DirichletPoly& d);

/// ||P||_{2r}^{2r} = sum_gamma |[z^gamma] P^r|^2, exact.
Rational even_moment_exact(const TrigPoly& p, unsigned r, std::size_t term_cap = kDefaultTermCap);

/// p must be an even positive integer.
NormEstimate norm_even_exact(const TrigPoly& p, unsigned exponent, std::size_t term_cap = kDefaultTermCap);
NormEstimate norm_even_exact(const DirichletPoly& d, unsigned exponent,
                             std::size_t term_cap = kDefaultTermCap);

/// int_{T^n} |Q_n|^{2m} = n^{-m} sum_{|alpha| = m} (m!/alpha!)^2, via the truncated
/// generating function (sum_k x^k/(k!)^2)^n.
Rational qn_moment_exact(std::uint64_t n, unsigned m);

struct MomentEstimate {
    double mean = 0.0;       // estimate of E|P|^p
    double std_error = 0.0;  // standard error of mean
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Joint estimate of E|P|^{e0} and E|P|^{e1} from one sample stream.
struct JointMomentEstimate {
    std::array<double, 2> mean{};
    std::array<std::array<double, 2>, 2> covariance{};  // of single samples
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

MomentEstimate moment_mc(const TrigPoly& p, double exponent, const MonteCarloConfig& cfg);
JointMomentEstimate joint_moments_mc(const TrigPoly& p, std::array<double, 2> exponents,
                                     const MonteCarloConfig& cfg);

NormEstimate norm_mc(const TrigPoly& p, double exponent, const MonteCarloConfig& cfg);
NormEstimate norm_mc(const DirichletPoly& d, double exponent, const MonteCarloConfig& cfg);

enum class MethodPolicy {
    automatic,   // exact for even integer exponents within the cap, else Monte Carlo
    exact,       // exact or fail
    monte_carlo, // always Monte Carlo
};

struct NormOptions {
    MethodPolicy policy = MethodPolicy::automatic;
    MonteCarloConfig mc;
    std::size_t term_cap = kDefaultTermCap;
};

/// True when p is an even positive integer.
bool is_even_integer(double p);

NormEstimate norm(const TrigPoly& p, double exponent, const NormOptions& opts = {});
NormEstimate norm(const DirichletPoly& d, double exponent, const NormOptions& opts = {});

struct RatioEstimate {
    double value = 0.0;
    double q = 0.0;
    double p = 0.0;
    NormMethod method = NormMethod::exact;
    std::optional<double> std_error;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> seed;
    // Exact only: the two exact power moments.
    std::optional<Rational> q_power;
    std::optional<Rational> p_power;
};

/// (E X)^{1/a} / (E Y)^{1/b} with the delta-method standard error, from a joint estimate
/// of X and Y.
double ratio_of_roots_std_error(const JointMomentEstimate& est, double a, double b);

/// ||P||_q / ||P||_p for 1 <= p < q.
RatioEstimate ratio(const TrigPoly& poly, double q, double p, const NormOptions& opts = {});
RatioEstimate ratio(const DirichletPoly& d, double q, double p, const NormOptions& opts = {});

} // namespace hardy
