#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hardy/bounds.hpp"
#include "hardy/extremal.hpp"
#include "hardy/numtheory.hpp"
#include "oracles.hpp"

using namespace hardy;

TEST_CASE("extremal_params") {
    auto ep = extremal_params(1e7, 2, 4);
    CHECK(ep.k == 4);
    CHECK(ep.root == 56);
    CHECK(ep.n == 16);
    CHECK_FALSE(ep.in_validity_range);
    CHECK(ep.hypothesis_ok);
    CHECK(ep.f == doctest::Approx((1.0 / 8 - 1.0 / 4) * std::log(4.0) / 4 - 4.0 * 4 / 16));

    CHECK_FALSE(extremal_params(1e3, 2, 4).in_validity_range);
    CHECK(std::exp(std::exp(std::numbers::e)) == doctest::Approx(3.81e6).epsilon(1e-2));

    auto small = extremal_params(10, 2, 4);
    CHECK(small.k == 3);
    CHECK(small.n == 1);
    CHECK_FALSE(small.hypothesis_ok);

    CHECK_THROWS_AS(extremal_params(2.5, 2, 4), Error);
    CHECK_THROWS_AS(extremal_params(1e7, 4, 2), Error);

    for (double x = 1e5; x <= 1e9; x *= 1.3) {
        auto e = extremal_params(x, 2, 4);
        double l1 = std::log(x);
        double shape = e.k * std::log(l1) / l1;
        CHECK(shape >= 0.5);
        CHECK(shape <= 1.0);
        CHECK(static_cast<double>(oracle::sieve(e.root).size()) == static_cast<double>(e.n));
        CHECK(std::pow(static_cast<long double>(e.root), e.k) <= static_cast<long double>(x));
        CHECK(std::pow(static_cast<long double>(e.root + 1), e.k) > static_cast<long double>(x));
    }

    int valid = 0;
    for (double lx = 150; lx <= 690; lx += 20) {
        auto e = extremal_params(std::exp(lx), 2, 4);
        if (!e.in_validity_range) continue;
        ++valid;
        CHECK(static_cast<double>(e.k) / static_cast<double>(e.n) <= 1.0 / std::log(lx));
        CHECK(e.hypothesis_ok);
    }
    CHECK(valid > 10);
}

TEST_CASE("build_extremal") {
    for (double x : {1e4, 1e5, 1e6, 1e7}) {
        auto ep = extremal_params(x, 2, 4);
        DirichletPoly d = build_extremal(x);
        CHECK(support_bound(d) <= x);
        CHECK(d.sum_modulus_squared() == qn_moment_exact(ep.n, ep.k));
        CHECK(d.size() == binomial(ep.n + ep.k - 1, ep.k).get_ui());
    }
    DirichletPoly d7 = build_extremal(1e7);
    CHECK(d7.stored(210) == ExactComplex(24L));
    CHECK(d7.scale_squared() == Rational(1, 65536));
    CHECK(d7.value(210).real() == doctest::Approx(24.0 / 256));

    CHECK_THROWS_AS(build_extremal(1e8, 1000), Error);
    try {
        extremal_trig(extremal_params(1e8, 2, 4), 1000);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::term_cap);
    }
}

TEST_CASE("proof chain is an equality for q = 4") {
    for (auto [n, k] : {std::pair<unsigned, unsigned>{16, 4}, {25, 3}}) {
        TrigPoly qk = poly_pow(build_qn(n), k);
        CHECK(even_moment_exact(qk, 2) == qn_moment_exact(n, 2 * k));
    }
}

TEST_CASE("lower_bound_report") {
    auto r = lower_bound_report(1e7, 2, 4);
    CHECK(r.params.k == 4);
    CHECK(r.params.n == 16);
    CHECK(r.ratio.method == NormMethod::exact);
    CHECK(r.log_ratio_per_k > 0.0);
    CHECK(r.log_ratio_per_k <= std::log(std::sqrt(2.0)) + 1.0);
    CHECK(r.chain_m == 8);
    REQUIRE(r.chain_exact_holds.has_value());
    CHECK(*r.chain_exact_holds);
    CHECK(*r.ratio.q_power == qn_moment_exact(16, 8));
    CHECK(*r.ratio.p_power == qn_moment_exact(16, 4));
    CHECK(r.target == doctest::Approx(std::exp(4 * (std::log(std::sqrt(2.0)) + r.params.f))));
    CHECK(*r.asymptote == doctest::Approx(mho_asymptote(1e7, 2, 4)));
    CHECK(r.flags == std::vector<std::string>{"outside_validity_range"});

    auto tiny = lower_bound_report(10, 2, 4);
    CHECK(tiny.ratio.value == doctest::Approx(1.0));
    CHECK_FALSE(tiny.asymptote.has_value());
    CHECK(tiny.flags == std::vector<std::string>{"outside_validity_range", "hypothesis_violated"});

    NormOptions opts;
    opts.mc.samples = 50000;
    opts.mc.seed = 9;
    auto odd = lower_bound_report(1e6, 1.5, 3, opts);
    CHECK(odd.ratio.method == NormMethod::monte_carlo);
    CHECK(odd.ratio.std_error.has_value());
    CHECK(*odd.ratio.seed == 9);
    CHECK_FALSE(odd.chain_exact_holds.has_value());

    opts.policy = MethodPolicy::monte_carlo;
    opts.mc.samples = 200000;
    auto mc = lower_bound_report(1e6, 2, 4, opts);
    auto exact = lower_bound_report(1e6, 2, 4);
    CHECK(std::abs(mc.ratio.value - exact.ratio.value) <= 5 * *mc.ratio.std_error);

    opts.policy = MethodPolicy::exact;
    CHECK_THROWS_AS(lower_bound_report(1e6, 1.5, 3, opts), Error);

    // Over the cap the automatic policy falls back to sampling Q_n.
    opts.policy = MethodPolicy::automatic;
    opts.term_cap = 100;
    opts.mc.samples = 20000;
    CHECK(lower_bound_report(1e6, 2, 4, opts).ratio.method == NormMethod::monte_carlo);
}
