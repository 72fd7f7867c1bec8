#include <doctest.h>

#include "hardy/corpus.hpp"
#include "hardy/io.hpp"

using namespace hardy;

TEST_CASE("format_double") {
    CHECK(format_double(1.5) == "1.5");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1e8) == "1e+08");
    CHECK(format_double(123456) == "123456");
    CHECK(format_double(std::sqrt(2.0)) == "1.4142135623730951");
    CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("Dirichlet JSON") {
    DirichletPoly d = dirichlet_from_json(R"({"terms": [{"n": 6, "re": 1.0, "im": 0.0}, {"n": 2, "re": "1/3"}]})");
    CHECK(d.size() == 2);
    CHECK(d.stored(6) == ExactComplex(1L));
    CHECK(d.stored(2) == ExactComplex(Rational(1, 3)));
    CHECK(dirichlet_from_json(R"({"terms":[{"n":3,"re":0.1}]})").stored(3) == ExactComplex(Rational(1, 10)));
    CHECK(dirichlet_from_json(R"({"terms":[{"n":3,"re":0,"im":0}]})").empty());

    DirichletPoly q = bohr_unlift(build_qn(3));
    std::string text = dirichlet_to_json(q);
    CHECK(text.find("\"scale_squared\":\"1/3\"") != std::string::npos);
    CHECK(dirichlet_from_json(text) == q);

    Corpus corpus(2);
    for (int i = 0; i < 20; ++i) {
        DirichletPoly e = corpus.dirichlet(1000, 30);
        CHECK(dirichlet_from_json(dirichlet_to_json(e)) == e);
    }

    for (const char* bad : {"", "{", "[]", R"({"terms": 3})", R"({"terms":[{"n":0,"re":1}]})",
                            R"({"terms":[{"n":-2,"re":1}]})", R"({"terms":[{"n":2.5,"re":1}]})",
                            R"({"terms":[{"n":2,"re":"x"}]})", R"({"terms":[{"n":2,"re":true}]})",
                            R"({"terms":[{"n":2,"re":1},{"n":2,"re":1}]})",
                            R"({"terms":[{"n":2,"re":1}],"scale_squared":"-1"})"}) {
        CAPTURE(bad);
        try {
            dirichlet_from_json(bad);
            FAIL("expected parse error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::parse);
        }
    }
}

TEST_CASE("TrigPoly JSON") {
    TrigPoly p = trig_from_json(R"({"terms": [{"alpha": [[1,1],[2,1]], "re": 1.0}, {"alpha": [], "re": "2", "im": "-1/2"}]})");
    CHECK(p.size() == 2);
    CHECK(p.stored(MultiIndex()) == ExactComplex(Rational(2), Rational(-1, 2)));
    Corpus corpus(3);
    for (int i = 0; i < 10; ++i) {
        TrigPoly h = corpus.homogeneous(3, 5, 8);
        CHECK(trig_from_json(trig_to_json(h)) == h);
    }
    CHECK(trig_from_json(trig_to_json(poly_pow(build_qn(3), 2))) == poly_pow(build_qn(3), 2));
    CHECK_THROWS_AS(trig_from_json(R"({"terms":[{"alpha":[[1,1],[1,2]],"re":1}]})"), Error);
    CHECK_THROWS_AS(trig_from_json(R"({"terms":[{"alpha":[[1]],"re":1}]})"), Error);
}

TEST_CASE("report serialization") {
    NormEstimate exact;
    exact.value = 1.5;
    exact.p = 4;
    exact.method = NormMethod::exact;
    CHECK(to_json(exact) == R"({"value":1.5,"p":4.0,"method":"exact"})");
    NormEstimate mc = exact;
    mc.method = NormMethod::monte_carlo;
    mc.std_error = 0.25;
    mc.samples = 10;
    mc.seed = 7;
    CHECK(to_json(mc) == R"({"value":1.5,"p":4.0,"method":"monte-carlo","stderr":0.25,"samples":10,"seed":7})");
    CHECK(csv_header(mc) == "value,p,method,stderr,samples,seed");
    CHECK(csv_row(mc) == "1.5,4,monte-carlo,0.25,10,7");
    CHECK(csv_row(exact) == "1.5,4,exact,,,");

    LowerBoundReport r;
    r.params.x = 100;
    r.params.k = 2;
    r.params.n = 4;
    r.p = 2;
    r.q = 4;
    r.ratio.value = 1.25;
    r.target = 0.5;
    r.flags = {"a", "b"};
    CHECK(csv_header(r) == "x,p,q,k,n,ratio,ratio_method,stderr,target,asymptote,flags,seed");
    CHECK(csv_row(r) == "100,2,4,2,4,1.25,exact,,0.5,,a;b,");
    r.flags.clear();
    CHECK(csv_row(r).find(",none,") != std::string::npos);

    ConditionSeries s;
    s.rows = {{16, 0.5, 0.5}, {17, 0.25, 0.75}};
    CHECK(series_csv(s) == "n,term,partial_sum\n16,0.5,0.5\n17,0.25,0.75\n");
    CHECK(to_json(s).find("\"trend\":\"inconclusive\"") != std::string::npos);
}
