#include "h4/rational.hpp"

#include <ostream>

namespace h4 {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpq_class v(s, 10);
            v.canonicalize();
            return Rational(v);
        }
        mpz_class num(s.substr(0, slash), 10);
        mpz_class den(s.substr(slash + 1), 10);
        if (den == 0) throw std::invalid_argument("zero denominator");
        mpq_class v(num, den);
        v.canonicalize();
        return Rational(v);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational::parse: bad rational '" + s + "'");
    }
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.raw().get_num().get_mpz_t(), b.raw().get_num().get_mpz_t());
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.raw().get_den().get_mpz_t(), b.raw().get_den().get_mpz_t());
    return Rational(mpq_class(g, l));
}

}  // namespace h4
