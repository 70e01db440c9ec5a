#include "h4/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace h4 {

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] -= o.coeffs_[d];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::scale(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("Polynomial::divmod: division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quot(a.degree() - b.degree() + 1, Rational(0));
    const Rational lead = b.leading();
    for (long d = a.degree(); d >= b.degree(); --d) {
        Rational c = rem[d] / lead;
        if (c.is_zero()) continue;
        quot[d - b.degree()] = c;
        for (long j = 0; j <= b.degree(); ++j)
            rem[d - b.degree() + j] -= c * b.coeffs_[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Polynomial r(*this);
    Rational inv = Rational(1) / leading();
    r.scale(inv);
    return r;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (long d = a.degree(); d >= 0; --d) {
        if (a.coeffs_[d] != b.coeffs_[d]) return a.coeffs_[d] < b.coeffs_[d];
    }
    return false;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long d = degree(); d >= 0; --d) {
        const Rational& c = coeffs_[d];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational abs = c.sign() < 0 ? -c : c;
        if (d == 0 || !abs.is_one()) os << abs.str();
        if (d > 0) {
            if (!abs.is_one()) os << "*";
            os << "t";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = Polynomial::divmod(x, y);
        x = y;
        y = r;
    }
    return x.monic();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Polynomial::divmod(num_, g).first;
        den_ = Polynomial::divmod(den_, g).first;
    }
    Rational lead = den_.leading();
    if (!lead.is_one()) {
        Rational inv = Rational(1) / lead;
        num_.scale(inv);
        den_.scale(inv);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::optional<Rational> RationalFunction::evaluate(const Rational& x) const {
    Rational d = den_.evaluate(x);
    if (d.is_zero()) return std::nullopt;
    return num_.evaluate(x) / d;
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace h4
