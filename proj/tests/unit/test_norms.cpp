#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hardy/corpus.hpp"
#include "hardy/norms.hpp"
#include "oracles.hpp"

using namespace hardy;

namespace {

DirichletPoly dir(std::uint64_t n, long c = 1) { return DirichletPoly::monomial(n, ExactComplex(c)); }

MonteCarloConfig mc(std::uint64_t samples, std::uint64_t seed) {
    MonteCarloConfig c;
    c.samples = samples;
    c.seed = seed;
    return c;
}

} // namespace

TEST_CASE("norm_h2_exact") {
    auto e = norm_h2_exact(dir(2) + dir(3));
    CHECK(e.value == doctest::Approx(std::sqrt(2.0)));
    CHECK(e.method == NormMethod::exact);
    CHECK_FALSE(e.std_error.has_value());
    CHECK(*e.power == 2);
    CHECK(norm_h2_exact(DirichletPoly{}).value == 0.0);
    for (std::uint64_t n = 1; n <= 50; ++n) CHECK(norm_h2_exact(bohr_unlift(build_qn(n))).value == 1.0);
}

TEST_CASE("norm_even_exact") {
    CHECK(*norm_even_exact(build_qn(2), 4).power == Rational(3, 2));
    CHECK(*norm_even_exact(build_qn(4), 4).power == Rational(7, 4));
    for (std::uint64_t n = 1; n <= 20; ++n) CHECK(norm_even_exact(build_qn(n), 2).value == 1.0);
    CHECK_THROWS_AS(norm_even_exact(build_qn(3), 3), Error);
    CHECK_THROWS_AS(norm_even_exact(build_qn(3), 0), Error);

    Corpus corpus(21);
    for (int i = 0; i < 30; ++i) {
        TrigPoly p = bohr_lift(corpus.dirichlet(500, 12));
        // Parseval
        CHECK(*norm_even_exact(p, 2).power == p.sum_modulus_squared());
        CHECK(even_moment_exact(p, 1) == p.sum_modulus_squared());
        for (unsigned r = 2; r <= 3; ++r) CHECK(even_moment_exact(p, r) == oracle::even_moment(p, r));
        double prev = 0.0;
        for (unsigned e = 2; e <= 8; e += 2) {
            double v = norm_even_exact(p, e).value;
            CHECK(v >= prev * (1 - 1e-12));
            prev = v;
        }
    }
    for (int i = 0; i < 10; ++i) {
        TrigPoly p = corpus.homogeneous(4, 5, 10);
        CHECK(even_moment_exact(p, 4) == oracle::even_moment(p, 4));
    }
}

TEST_CASE("even moments of large inputs take the wide paths") {
    // Coefficients near 2^40 overflow the 64-bit kernels and force the multiprecision path.
    TrigPoly p;
    Rational big(Integer(1) << 40);
    p.add_term(MultiIndex::unit(1), ExactComplex(big, Rational(3)));
    p.add_term(MultiIndex::unit(2), ExactComplex(Rational(-5), big));
    p.add_term(MultiIndex::unit(1, 2), ExactComplex(big * big, Rational(0)));
    CHECK(even_moment_exact(p, 2) == oracle::even_moment(p, 2));
    CHECK(even_moment_exact(p, 3) == oracle::even_moment(p, 3));

    TrigPoly wide;
    wide.add_term(MultiIndex::unit(1, 200), ExactComplex(Rational(1, 3)));
    wide.add_term(MultiIndex::unit(400, 1), ExactComplex(Rational(2, 7)));
    wide.add_term(MultiIndex::unit(3, 1), ExactComplex(Rational(0), Rational(5)));
    CHECK(even_moment_exact(wide, 2) == oracle::even_moment(wide, 2));
}

TEST_CASE("qn_moment_exact") {
    CHECK(qn_moment_exact(2, 1) == 1);
    CHECK(qn_moment_exact(2, 2) == Rational(3, 2));
    CHECK(qn_moment_exact(4, 2) == Rational(7, 4));
    CHECK(qn_moment_exact(5, 0) == 1);
    CHECK(qn_moment_exact(1, 7) == 1);
    CHECK_THROWS_AS(qn_moment_exact(0, 2), Error);
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned m = 0; m <= 5; ++m) CHECK(qn_moment_exact(n, m) == oracle::qn_moment(n, m));
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned m = 1; m <= 3; ++m) CHECK(qn_moment_exact(n, m) == even_moment_exact(build_qn(n), m));

    double prev = 1e9;
    for (unsigned j = 3; j <= 10; ++j) {
        double gap = std::abs(qn_moment_exact(1u << j, 3).get_d() - 6.0);
        CHECK(gap < prev);
        prev = gap;
    }
}

TEST_CASE("norm_mc") {
    TrigPoly c = trig_constant(ExactComplex(Rational(3), Rational(4)));
    auto e = norm_mc(c, 3.0, mc(1000, 1));
    CHECK(e.value == doctest::Approx(5.0));
    CHECK(*e.std_error == 0.0);
    CHECK(e.method == NormMethod::monte_carlo);
    CHECK(*e.samples == 1000);
    CHECK(*e.seed == 1);

    auto q8 = norm_mc(build_qn(8), 2.0, mc(100000, 0));
    CHECK(std::abs(q8.value - 1.0) <= 4 * *q8.std_error);
    auto q4 = norm_mc(build_qn(4), 4.0, mc(1000000, 0));
    CHECK(std::abs(q4.value - std::pow(1.75, 0.25)) <= 4 * *q4.std_error);

    CHECK_THROWS_AS(norm_mc(build_qn(2), 2.0, mc(0, 0)), Error);
    CHECK_THROWS_AS(norm_mc(build_qn(2), 0.5, mc(10, 0)), Error);

    auto a = norm_mc(build_qn(5), 3.0, mc(20000, 42));
    auto b = norm_mc(build_qn(5), 3.0, mc(20000, 42));
    CHECK(a.value == b.value);
    CHECK(*a.std_error == *b.std_error);
    auto other = norm_mc(build_qn(5), 3.0, mc(20000, 43));
    CHECK(a.value != other.value);

    MonteCarloConfig one_thread = mc(20000, 42);
    one_thread.threads = 1;
    CHECK(norm_mc(build_qn(5), 3.0, one_thread).value == a.value);
}

TEST_CASE("Monte Carlo calibration on Q_n moments") {
    for (unsigned n : {2u, 4u, 8u}) {
        for (unsigned m : {1u, 2u, 3u}) {
            double exact = qn_moment_exact(n, m).get_d();
            int hits = 0;
            for (std::uint64_t seed = 0; seed < 100; ++seed) {
                auto est = moment_mc(build_qn(n), 2.0 * m, mc(5000, seed));
                if (std::abs(est.mean - exact) <= 4 * est.std_error) ++hits;
            }
            CAPTURE(n);
            CAPTURE(m);
            CHECK(hits >= 95);
        }
    }
}

TEST_CASE("norm dispatch") {
    DirichletPoly d = dir(2) + dir(3) + dir(6, 2);
    NormOptions opts;
    opts.mc = mc(20000, 0);
    CHECK(norm(d, 4, opts).method == NormMethod::exact);
    CHECK(norm(d, 3, opts).method == NormMethod::monte_carlo);
    CHECK(norm(d, 3, opts).std_error.has_value());

    opts.policy = MethodPolicy::monte_carlo;
    CHECK(norm(d, 4, opts).method == NormMethod::monte_carlo);

    opts.policy = MethodPolicy::exact;
    CHECK_THROWS_AS(norm(d, 3, opts), Error);

    opts.policy = MethodPolicy::automatic;
    opts.term_cap = 10;
    auto fallback = norm(bohr_unlift(poly_pow(build_qn(6), 3)), 6, opts);
    CHECK(fallback.method == NormMethod::monte_carlo);
    opts.policy = MethodPolicy::exact;
    try {
        norm(bohr_unlift(poly_pow(build_qn(6), 3)), 6, opts);
        FAIL("expected cap");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::term_cap);
    }
    CHECK(is_even_integer(4));
    CHECK_FALSE(is_even_integer(3));
    CHECK_FALSE(is_even_integer(4.5));
}

TEST_CASE("ratio") {
    CHECK(ratio(dir(7, 3), 4, 2).value == doctest::Approx(1.0));
    auto r = ratio(bohr_unlift(build_qn(2)), 4, 2);
    CHECK(r.method == NormMethod::exact);
    CHECK(r.value == doctest::Approx(std::pow(1.5, 0.25)));
    CHECK_THROWS_AS(ratio(dir(2), 2, 4), Error);
    CHECK_THROWS_AS(ratio(dir(2), 4, 0.5), Error);
    try {
        ratio(DirichletPoly{}, 4, 2);
        FAIL("expected empty");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::empty_polynomial);
    }

    Corpus corpus(8);
    for (int i = 0; i < 50; ++i) CHECK(ratio(corpus.dirichlet(300, 15), 4, 2).value >= 1.0 - 1e-12);

    NormOptions opts;
    opts.mc = mc(200000, 3);
    auto mcr = ratio(bohr_unlift(build_qn(2)), 3, 1.5, opts);
    CHECK(mcr.method == NormMethod::monte_carlo);
    CHECK(mcr.value >= 1.0);
    opts.policy = MethodPolicy::monte_carlo;
    auto forced = ratio(bohr_unlift(build_qn(4)), 4, 2, opts);
    CHECK(std::abs(forced.value - std::pow(1.75, 0.25)) <= 4 * *forced.std_error);
}
