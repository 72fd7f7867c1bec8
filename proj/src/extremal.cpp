#include "hardy/extremal.hpp"

#include <cmath>
#include <numbers>

#include "hardy/bounds.hpp"
#include "hardy/numtheory.hpp"

namespace hardy {

namespace {

std::uint64_t integer_root_floor(double x, unsigned k) {
    auto t = static_cast<std::uint64_t>(std::floor(std::pow(x, 1.0 / k)));
    auto power = [k](std::uint64_t v) {
        long double r = 1.0L;
        for (unsigned i = 0; i < k; ++i) r *= static_cast<long double>(v);
        return r;
    };
    while (t > 0 && power(t) > static_cast<long double>(x)) --t;
    while (power(t + 1) <= static_cast<long double>(x)) ++t;
    return t;
}

} // namespace

ExtremalParams extremal_params(double x, double p, double q) {
    require(std::isfinite(p) && std::isfinite(q) && p >= 1.0 && p < q, ErrorKind::domain,
            "exponents must satisfy 1 <= p < q");
    require(std::isfinite(x) && x > std::numbers::e, ErrorKind::domain,
            "extremal_params needs x > e so that log_3 x is defined");
    double l1 = std::log(x);
    double l2 = std::log(l1);
    double l3 = std::log(l2);
    require(l2 + l3 > 0.0, ErrorKind::domain, "extremal_params: log_2 x + log_3 x must be positive");
    double kk = std::floor(l1 / (l2 + l3));
    require(kk >= 1.0, ErrorKind::domain, "extremal_params: k(x) must be at least 1");

    ExtremalParams ep;
    ep.x = x;
    ep.k = static_cast<unsigned>(kk);
    ep.root = integer_root_floor(x, ep.k);
    ep.n = prime_pi(static_cast<double>(ep.root));
    require(ep.n >= 1, ErrorKind::domain, "extremal_params: x^{1/k} < 2 leaves no primes");
    ep.f = (1.0 / (2.0 * q) - 1.0 / (2.0 * p)) * std::log(kk) / kk - q * kk / static_cast<double>(ep.n);
    ep.in_validity_range = x > std::exp(std::exp(std::numbers::e)) && std::pow(x, 1.0 / kk) >= 599.0;
    auto mq = static_cast<std::uint64_t>(std::floor(kk * q / 2.0));
    auto mp = static_cast<std::uint64_t>(std::floor(kk * p / 2.0));
    ep.hypothesis_ok = ep.n > mq + 1 && mq + 1 > mp + 1 && mp + 1 > 1;
    return ep;
}

TrigPoly extremal_trig(const ExtremalParams& params, std::size_t term_cap) {
    auto terms = binomial(params.n + params.k - 1, params.k);
    require(terms <= Integer(static_cast<unsigned long>(term_cap)), ErrorKind::term_cap,
            "Q_n^k has " + terms.get_str() + " terms, above the cap of " + std::to_string(term_cap));
    return poly_pow(build_qn(params.n), params.k, term_cap);
}

DirichletPoly build_extremal(double x, std::size_t term_cap) {
    // k and n do not depend on the exponent pair.
    return bohr_unlift(extremal_trig(extremal_params(x, 1.0, 2.0), term_cap));
}

LowerBoundReport lower_bound_report(double x, double p, double q, const NormOptions& opts) {
    LowerBoundReport rep;
    rep.params = extremal_params(x, p, q);
    rep.p = p;
    rep.q = q;
    const auto& ep = rep.params;
    double kk = ep.k;

    rep.chain_m = static_cast<unsigned>(std::floor(kk * q / 2.0));
    Rational chain_moment = qn_moment_exact(ep.n, rep.chain_m);
    double chain_exponent = kk * q / (2.0 * rep.chain_m);
    rep.chain_rhs = std::exp(log_rational(chain_moment) * chain_exponent);

    bool even = is_even_integer(p) && is_even_integer(q);
    bool done = false;
    if (opts.policy != MethodPolicy::monte_carlo && even) {
        try {
            DirichletPoly dx = bohr_unlift(extremal_trig(ep, opts.term_cap));
            NormOptions exact = opts;
            exact.policy = MethodPolicy::exact;
            rep.ratio = ratio(dx, q, p, exact);
            rep.chain_lhs = std::exp(log_rational(*rep.ratio.q_power));
            if (chain_exponent == 1.0) rep.chain_exact_holds = *rep.ratio.q_power >= chain_moment;
            done = true;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::term_cap || opts.policy == MethodPolicy::exact) throw;
        }
    } else if (opts.policy == MethodPolicy::exact) {
        fail(ErrorKind::domain, "exact extremal ratio needs even integer exponents");
    }
    if (!done) {
        // |Q_n^k|^q = |Q_n|^{kq}: sample the linear form instead of the expansion.
        JointMomentEstimate est = joint_moments_mc(build_qn(ep.n), {kk * q, kk * p}, opts.mc);
        rep.ratio.q = q;
        rep.ratio.p = p;
        rep.ratio.method = NormMethod::monte_carlo;
        rep.ratio.value = std::pow(est.mean[0], 1.0 / q) / std::pow(est.mean[1], 1.0 / p);
        rep.ratio.std_error = ratio_of_roots_std_error(est, q, p);
        rep.ratio.samples = est.samples;
        rep.ratio.seed = est.seed;
        rep.chain_lhs = est.mean[0];
    }

    rep.log_ratio_per_k = std::log(rep.ratio.value) / kk;
    rep.target = std::exp(kk * (0.5 * std::log(q / p) + ep.f));
    if (x > std::exp(std::numbers::e)) {
        rep.asymptote = mho_asymptote(x, p, q);
        rep.bracket_width = asymptote_bracket_width(x);
    }
    if (!ep.in_validity_range) rep.flags.emplace_back("outside_validity_range");
    if (!ep.hypothesis_ok) rep.flags.emplace_back("hypothesis_violated");
    if (rep.chain_exact_holds && !*rep.chain_exact_holds) rep.flags.emplace_back("chain_violated");
    return rep;
}

} // namespace hardy
