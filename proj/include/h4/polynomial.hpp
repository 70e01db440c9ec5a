#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "h4/rational.hpp"

namespace h4 {

// Univariate polynomial over Rational in the formal parameter t.
// Coefficients are stored lowest degree first with no trailing zeros;
// the zero polynomial has an empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c) { if (!c.is_zero()) coeffs_.push_back(c); }
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    // The monomial t.
    static Polynomial t() { return Polynomial(std::vector<Rational>{Rational(0), Rational(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Rational(0); }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
    Rational constant_term() const { return coeff(0); }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }
    Polynomial& scale(const Rational& c);

    // Euclidean division; divisor must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

    Rational evaluate(const Rational& x) const;
    Polynomial monic() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    // deterministic total order: by degree, then coefficients from the top
    friend bool operator<(const Polynomial& a, const Polynomial& b);

    std::string str() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

// monic gcd; gcd(0,0) = 0
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Quotient field element num/den with den monic and gcd(num, den) = 1;
// zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {}
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { *this = *this + o; return *this; }
    RationalFunction& operator-=(const RationalFunction& o) { *this = *this - o; return *this; }
    RationalFunction& operator*=(const RationalFunction& o) { *this = *this * o; return *this; }
    RationalFunction& operator/=(const RationalFunction& o) { *this = *this / o; return *this; }

    // nullopt when x is a pole
    std::optional<Rational> evaluate(const Rational& x) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }
    friend bool operator<(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ != b.den_) return a.den_ < b.den_;
        return a.num_ < b.num_;
    }

    std::string str() const;

private:
    void normalize();
    Polynomial num_, den_;
};

}  // namespace h4
