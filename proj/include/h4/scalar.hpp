#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "h4/polynomial.hpp"
#include "h4/rational.hpp"

namespace h4 {

enum class ScalarKind { Rational = 0, Polynomial = 1, RationalFunction = 2 };

// One level of the exact scalar tower: a rational, a polynomial in the formal
// parameter t, or a rational function. Mixed arithmetic promotes upward.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(long n) : v_(Rational(n)) {}
    Scalar(const Rational& r) : v_(r) {}
    Scalar(const Polynomial& p) : v_(p) {}
    Scalar(const RationalFunction& f) : v_(f) {}

    static Scalar t() { return Scalar(Polynomial::t()); }

    ScalarKind kind() const { return static_cast<ScalarKind>(v_.index()); }
    bool is_rational() const { return kind() == ScalarKind::Rational; }

    bool is_zero() const;
    bool is_one() const;

    const Rational& rat() const {
        if (!is_rational()) throw std::domain_error("Scalar: not a rational: " + str());
        return std::get<Rational>(v_);
    }
    const Polynomial& poly() const {
        if (kind() != ScalarKind::Polynomial)
            throw std::domain_error("Scalar: not a polynomial: " + str());
        return std::get<Polynomial>(v_);
    }

    // view at the given tower level (promoting copies)
    Polynomial as_polynomial() const;
    RationalFunction as_ratfunc() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    // deterministic order across kinds (kind first)
    friend bool operator<(const Scalar& a, const Scalar& b);

    // substitute t := x; throws PoleError at a pole
    Scalar evaluate(const Rational& x) const;

    std::string str() const;

private:
    std::variant<Rational, Polynomial, RationalFunction> v_;
};

struct PoleError : std::domain_error {
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace h4
