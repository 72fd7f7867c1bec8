#include "hardy/corpus.hpp"

namespace hardy {

ExactComplex Corpus::coefficient() {
    auto draw = [this] {
        return Rational(static_cast<long>(below(2001)) - 1000, 1000);
    };
    Rational re = draw();
    Rational im = draw();
    re.canonicalize();
    im.canonicalize();
    return {re, im};
}

TrigPoly Corpus::homogeneous(unsigned m, unsigned vars, unsigned max_terms) {
    require(vars >= 1 && max_terms >= 1, ErrorKind::domain, "corpus needs vars >= 1 and max_terms >= 1");
    TrigPoly p;
    while (p.empty()) {
        auto terms = 1 + below(max_terms);
        for (std::uint64_t t = 0; t < terms; ++t) {
            std::vector<std::uint32_t> alpha(vars, 0);
            for (unsigned i = 0; i < m; ++i) ++alpha[below(vars)];
            p.add_term(MultiIndex::from_dense(alpha), coefficient());
        }
    }
    return p;
}

DirichletPoly Corpus::dirichlet(std::uint64_t support, unsigned max_terms) {
    require(support >= 1 && max_terms >= 1, ErrorKind::domain, "corpus needs support >= 1 and max_terms >= 1");
    DirichletPoly d;
    while (d.empty()) {
        auto terms = 1 + below(max_terms);
        for (std::uint64_t t = 0; t < terms; ++t) d.add_term(1 + below(support), coefficient());
    }
    return d;
}

} // namespace hardy
