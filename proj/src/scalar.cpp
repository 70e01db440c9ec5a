#include "h4/scalar.hpp"

namespace h4 {

bool Scalar::is_zero() const {
    switch (kind()) {
        case ScalarKind::Rational: return std::get<Rational>(v_).is_zero();
        case ScalarKind::Polynomial: return std::get<Polynomial>(v_).is_zero();
        default: return std::get<RationalFunction>(v_).is_zero();
    }
}

bool Scalar::is_one() const {
    switch (kind()) {
        case ScalarKind::Rational: return std::get<Rational>(v_).is_one();
        case ScalarKind::Polynomial: {
            const auto& p = std::get<Polynomial>(v_);
            return p.degree() == 0 && p.leading().is_one();
        }
        default: {
            const auto& f = std::get<RationalFunction>(v_);
            return f.is_polynomial() && f.num().degree() == 0 && f.num().leading().is_one();
        }
    }
}

Polynomial Scalar::as_polynomial() const {
    switch (kind()) {
        case ScalarKind::Rational: return Polynomial(std::get<Rational>(v_));
        case ScalarKind::Polynomial: return std::get<Polynomial>(v_);
        default: {
            const auto& f = std::get<RationalFunction>(v_);
            if (!f.is_polynomial())
                throw std::domain_error("Scalar: rational function is not polynomial: " + str());
            Polynomial p = f.num();
            p.scale(Rational(1) / f.den().leading());
            return p;
        }
    }
}

RationalFunction Scalar::as_ratfunc() const {
    switch (kind()) {
        case ScalarKind::Rational: return RationalFunction(std::get<Rational>(v_));
        case ScalarKind::Polynomial: return RationalFunction(std::get<Polynomial>(v_));
        default: return std::get<RationalFunction>(v_);
    }
}

Scalar Scalar::operator-() const {
    switch (kind()) {
        case ScalarKind::Rational: return Scalar(-std::get<Rational>(v_));
        case ScalarKind::Polynomial: return Scalar(-std::get<Polynomial>(v_));
        default: return Scalar(-std::get<RationalFunction>(v_));
    }
}

namespace {
ScalarKind join(const Scalar& a, const Scalar& b) {
    return a.kind() >= b.kind() ? a.kind() : b.kind();
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    switch (join(a, b)) {
        case ScalarKind::Rational: return Scalar(a.rat() + b.rat());
        case ScalarKind::Polynomial: return Scalar(a.as_polynomial() + b.as_polynomial());
        default: return Scalar(a.as_ratfunc() + b.as_ratfunc());
    }
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    switch (join(a, b)) {
        case ScalarKind::Rational: return Scalar(a.rat() - b.rat());
        case ScalarKind::Polynomial: return Scalar(a.as_polynomial() - b.as_polynomial());
        default: return Scalar(a.as_ratfunc() - b.as_ratfunc());
    }
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    switch (join(a, b)) {
        case ScalarKind::Rational: return Scalar(a.rat() * b.rat());
        case ScalarKind::Polynomial: return Scalar(a.as_polynomial() * b.as_polynomial());
        default: return Scalar(a.as_ratfunc() * b.as_ratfunc());
    }
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    switch (join(a, b)) {
        case ScalarKind::Rational: return Scalar(a.rat() / b.rat());
        default: {
            // polynomial division lands in the fraction field; exact quotients
            // stay polynomial
            RationalFunction q = a.as_ratfunc() / b.as_ratfunc();
            if (join(a, b) == ScalarKind::Polynomial && q.is_polynomial()) {
                Polynomial p = q.num();
                p.scale(Rational(1) / q.den().leading());
                return Scalar(p);
            }
            return Scalar(q);
        }
    }
}

bool operator==(const Scalar& a, const Scalar& b) {
    switch (join(a, b)) {
        case ScalarKind::Rational: return a.rat() == b.rat();
        case ScalarKind::Polynomial: return a.as_polynomial() == b.as_polynomial();
        default: return a.as_ratfunc() == b.as_ratfunc();
    }
}

bool operator<(const Scalar& a, const Scalar& b) {
    switch (join(a, b)) {
        case ScalarKind::Rational: return a.rat() < b.rat();
        case ScalarKind::Polynomial: return a.as_polynomial() < b.as_polynomial();
        default: return a.as_ratfunc() < b.as_ratfunc();
    }
}

Scalar Scalar::evaluate(const Rational& x) const {
    switch (kind()) {
        case ScalarKind::Rational: return *this;
        case ScalarKind::Polynomial: return Scalar(std::get<Polynomial>(v_).evaluate(x));
        default: {
            auto r = std::get<RationalFunction>(v_).evaluate(x);
            if (!r) throw PoleError("Scalar: pole at t=" + x.str() + " in " + str());
            return Scalar(*r);
        }
    }
}

std::string Scalar::str() const {
    switch (kind()) {
        case ScalarKind::Rational: return std::get<Rational>(v_).str();
        case ScalarKind::Polynomial: return std::get<Polynomial>(v_).str();
        default: return std::get<RationalFunction>(v_).str();
    }
}

}  // namespace h4
