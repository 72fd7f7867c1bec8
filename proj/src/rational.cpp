#include "hardy/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "hardy/error.hpp"

namespace hardy {

Rational rational_from_double(double v) {
    require(std::isfinite(v), ErrorKind::domain, "cannot convert a non-finite value to a rational");
    Rational r;
    mpq_set_d(r.get_mpq_t(), v);
    return r;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) fail(ErrorKind::parse, "empty rational literal");
    auto dot = text.find_first_of(".eE");
    if (dot == std::string::npos) {
        Rational r;
        if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
            fail(ErrorKind::parse, "malformed rational literal '" + text + "'");
        require(sgn(r.get_den()) != 0, ErrorKind::parse, "zero denominator in '" + text + "'");
        r.canonicalize();
        return r;
    }
    // Decimal literal [sign]digits[.digits][e[sign]digits], read exactly.
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
    std::string digits;
    long scale = 0;
    bool seen_digit = false;
    for (; pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); ++pos) {
        digits += text[pos];
        seen_digit = true;
    }
    if (pos < text.size() && text[pos] == '.') {
        for (++pos; pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); ++pos) {
            digits += text[pos];
            --scale;
            seen_digit = true;
        }
    }
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        std::size_t used = 0;
        try {
            scale += std::stol(text.substr(pos), &used);
        } catch (const std::exception&) {
            fail(ErrorKind::parse, "malformed exponent in '" + text + "'");
        }
        pos += used;
    }
    if (!seen_digit || pos != text.size())
        fail(ErrorKind::parse, "malformed decimal literal '" + text + "'");
    Rational r{Integer(digits, 10)};
    r *= pow(Rational(10), scale);
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Rational pow(const Rational& base, long exponent) {
    Integer num, den;
    unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    if (exponent < 0) {
        require(sgn(num) != 0, ErrorKind::domain, "zero to a negative power");
        std::swap(num, den);
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

double log_rational(const Rational& r) {
    require(sgn(r) > 0, ErrorKind::domain, "log of a nonpositive rational");
    long num_exp = 0;
    long den_exp = 0;
    double num = mpz_get_d_2exp(&num_exp, r.get_num_mpz_t());
    double den = mpz_get_d_2exp(&den_exp, r.get_den_mpz_t());
    return std::log(num / den) + static_cast<double>(num_exp - den_exp) * std::log(2.0);
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

bool exact_sqrt(const Rational& r, Rational& root) {
    if (sgn(r) < 0) return false;
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t()))
        return false;
    Integer num, den;
    mpz_sqrt(num.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), r.get_den_mpz_t());
    root = Rational(num, den);
    root.canonicalize();
    return true;
}

} // namespace hardy
