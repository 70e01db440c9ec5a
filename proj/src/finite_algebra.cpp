#include "h4/finite_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace h4 {

bool H4Element::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

H4Element H4Element::operator-() const {
    H4Element r;
    for (int g = 0; g < 4; ++g) r.c_[g] = -c_[g];
    return r;
}

H4Element operator+(const H4Element& a, const H4Element& b) {
    H4Element r;
    for (int g = 0; g < 4; ++g) r.c_[g] = a.c_[g] + b.c_[g];
    return r;
}

H4Element operator-(const H4Element& a, const H4Element& b) {
    H4Element r;
    for (int g = 0; g < 4; ++g) r.c_[g] = a.c_[g] - b.c_[g];
    return r;
}

H4Element operator*(const Scalar& s, const H4Element& x) {
    H4Element r;
    for (int g = 0; g < 4; ++g) r.c_[g] = s * x.c_[g];
    return r;
}

std::string H4Element::str() const {
    std::ostringstream os;
    bool first = true;
    for (Gen g : {Gen::E, Gen::F, Gen::I, Gen::J}) {
        const Scalar& c = coeff(g);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << gen_name(g);
    }
    return first ? "0" : os.str();
}

namespace {
// [a, b] on basis generators: coefficient and target, zero target encoded as nullopt
struct FiniteBracket {
    int coeff;  // -1, 0, +1
    Gen target;
};
FiniteBracket finite_bracket(Gen a, Gen b) {
    if (a == Gen::E && b == Gen::F) return {+1, Gen::I};
    if (a == Gen::F && b == Gen::E) return {-1, Gen::I};
    if (a == Gen::J && b == Gen::E) return {+1, Gen::E};
    if (a == Gen::E && b == Gen::J) return {-1, Gen::E};
    if (a == Gen::J && b == Gen::F) return {-1, Gen::F};
    if (a == Gen::F && b == Gen::J) return {+1, Gen::F};
    return {0, Gen::I};
}
}  // namespace

H4Element bracket(const H4Element& x, const H4Element& y) {
    H4Element r;
    for (int a = 0; a < 4; ++a) {
        const Scalar& ca = x.coeff(static_cast<Gen>(a));
        if (ca.is_zero()) continue;
        for (int b = 0; b < 4; ++b) {
            const Scalar& cb = y.coeff(static_cast<Gen>(b));
            if (cb.is_zero()) continue;
            auto fb = finite_bracket(static_cast<Gen>(a), static_cast<Gen>(b));
            if (fb.coeff == 0) continue;
            r.coeff(fb.target) += Scalar(Rational(fb.coeff)) * ca * cb;
        }
    }
    return r;
}

Scalar kappa(Gen x, Gen y, const BilinearParams& p) {
    if ((x == Gen::E && y == Gen::F) || (x == Gen::F && y == Gen::E)) return p.a;
    if ((x == Gen::I && y == Gen::J) || (x == Gen::J && y == Gen::I)) return p.a;
    if (x == Gen::J && y == Gen::J) return p.b;
    return Scalar(0);
}

Scalar kappa(const H4Element& x, const H4Element& y, const BilinearParams& p) {
    Scalar r(0);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const Scalar& ca = x.coeff(static_cast<Gen>(a));
            const Scalar& cb = y.coeff(static_cast<Gen>(b));
            if (ca.is_zero() || cb.is_zero()) continue;
            Scalar k = kappa(static_cast<Gen>(a), static_cast<Gen>(b), p);
            if (!k.is_zero()) r += ca * cb * k;
        }
    return r;
}

AutoStep AutoStep::rescale(const Scalar& alpha) {
    if (alpha.is_zero()) throw std::invalid_argument("rescale: alpha must be nonzero");
    return {Kind::Rescale, alpha, 0};
}

H4Element apply_automorphism(const AutoStep& step, const H4Element& x) {
    H4Element r;
    switch (step.kind) {
        case AutoStep::Kind::Conj:
            r.coeff(Gen::F) = -x.coeff(Gen::E);
            r.coeff(Gen::E) = -x.coeff(Gen::F);
            r.coeff(Gen::I) = -x.coeff(Gen::I);
            r.coeff(Gen::J) = -x.coeff(Gen::J);
            return r;
        case AutoStep::Kind::Rescale: {
            Scalar ainv = Scalar(1) / step.param;
            r.coeff(Gen::E) = ainv * x.coeff(Gen::E);
            r.coeff(Gen::F) = ainv * x.coeff(Gen::F);
            r.coeff(Gen::I) = ainv * ainv * x.coeff(Gen::I);
            r.coeff(Gen::J) = x.coeff(Gen::J);
            return r;
        }
        case AutoStep::Kind::Shift:
            r = x;
            r.coeff(Gen::I) -= step.param * x.coeff(Gen::J);
            return r;
        default:
            throw std::invalid_argument(
                "apply_automorphism: affine-shift and spectral flow act only at affine level");
    }
}

H4Element apply_automorphism(const AutomorphismSpec& spec, const H4Element& x) {
    H4Element r = x;
    for (const auto& step : spec.word) r = apply_automorphism(step, r);
    return r;
}

const char* bottom_kind_name(BottomKind k) {
    switch (k) {
        case BottomKind::HwVerma: return "hw-verma";
        case BottomKind::LwVerma: return "lw-verma";
        case BottomKind::OneDim: return "one-dim";
        case BottomKind::DenseIrr: return "dense-irr";
        case BottomKind::DensePlus: return "dense-plus";
        case BottomKind::DenseMinus: return "dense-minus";
        default: return "dense-zero";
    }
}

std::optional<BottomKind> parse_bottom_kind(const std::string& name) {
    for (BottomKind k : {BottomKind::HwVerma, BottomKind::LwVerma, BottomKind::OneDim,
                         BottomKind::DenseIrr, BottomKind::DensePlus, BottomKind::DenseMinus,
                         BottomKind::DenseZero}) {
        if (name == bottom_kind_name(k)) return k;
    }
    return std::nullopt;
}

namespace {
// h/i - j is an integer, decidable for rational data; symbolic anchors are
// never integral
bool coset_member(const Scalar& i, const Scalar& j, const Scalar& h) {
    if (i.is_zero()) return false;
    Scalar d = h / i - j;
    return d.is_rational() && d.rat().is_integer();
}
}  // namespace

FiniteWeightModule FiniteWeightModule::build(BottomKind kind, const Scalar& i, const Scalar& j,
                                             const Scalar& h) {
    FiniteWeightModule m;
    m.kind_ = kind;
    m.i_ = i;
    m.j0_ = j;
    switch (kind) {
        case BottomKind::HwVerma:
            m.h_ = i * j;
            m.reducible_ = i.is_zero();
            break;
        case BottomKind::LwVerma:
            m.h_ = i * (j - Scalar(1));
            m.reducible_ = i.is_zero();
            break;
        case BottomKind::OneDim:
            if (!i.is_zero())
                throw std::invalid_argument("one-dim module requires i = 0 (Lemma: I acts trivially)");
            m.h_ = Scalar(0);
            m.reducible_ = false;
            break;
        case BottomKind::DenseIrr:
            if (i.is_zero() && h.is_zero())
                throw std::invalid_argument("dense-irr with i = 0 requires h != 0");
            if (coset_member(i, j, h))
                throw std::invalid_argument(
                    "dense-irr requires h outside i(j+Z); got h = i(j+m) for integral m");
            m.h_ = h;
            m.reducible_ = false;
            break;
        case BottomKind::DensePlus:
        case BottomKind::DenseMinus:
            if (i.is_zero()) throw std::invalid_argument("dense-plus/minus require i != 0");
            if (!coset_member(i, j, h))
                throw std::invalid_argument("dense-plus/minus require h in i(j+Z)");
            m.h_ = h;
            m.reducible_ = true;
            break;
        case BottomKind::DenseZero:
            if (!i.is_zero() || !h.is_zero())
                throw std::invalid_argument("dense-zero requires i = 0 and h = 0");
            m.h_ = Scalar(0);
            m.reducible_ = true;
            break;
    }
    return m;
}

bool FiniteWeightModule::supports(long s) const {
    switch (kind_) {
        case BottomKind::HwVerma: return s <= 0;
        case BottomKind::LwVerma: return s >= 0;
        case BottomKind::OneDim: return s == 0;
        default: return true;
    }
}

Scalar FiniteWeightModule::e_coeff(long s) const {
    switch (kind_) {
        case BottomKind::HwVerma: return s >= 0 ? Scalar(0) : i_ * Scalar(Rational(-s));
        case BottomKind::LwVerma: return s >= 0 ? Scalar(1) : Scalar(0);
        case BottomKind::OneDim: return Scalar(0);
        case BottomKind::DensePlus: return h_ - i_ * (j0_ + Scalar(Rational(s)));
        case BottomKind::DenseZero: return s >= 0 ? Scalar(1) : Scalar(0);
        default: return Scalar(1);  // DenseIrr, DenseMinus
    }
}

Scalar FiniteWeightModule::f_coeff(long s) const {
    switch (kind_) {
        case BottomKind::HwVerma: return s <= 0 ? Scalar(1) : Scalar(0);
        case BottomKind::LwVerma: return s <= 0 ? Scalar(0) : i_ * Scalar(Rational(-s));
        case BottomKind::OneDim: return Scalar(0);
        case BottomKind::DensePlus: return Scalar(1);
        case BottomKind::DenseZero: return s <= 0 ? Scalar(1) : Scalar(0);
        default: return h_ - i_ * (j0_ + Scalar(Rational(s - 1)));  // DenseIrr, DenseMinus
    }
}

std::string FiniteWeightModule::descriptor_json() const {
    std::ostringstream os;
    os << "{\"kind\":\"" << bottom_kind_name(kind_) << "\",\"i\":\"" << i_.str() << "\",\"j\":\""
       << j0_.str() << "\",\"h\":\"" << h_.str() << "\"}";
    return os.str();
}

ITrivialReport check_I_trivial(const FiniteWeightModule& m, long window_lo, long window_hi,
                               bool treat_window_as_finite) {
    ITrivialReport rep;
    if (m.kind() != BottomKind::OneDim && !treat_window_as_finite) {
        rep.applicable = false;
        rep.detail = "module is infinite-dimensional; restrict to a window flagged as finite";
        return rep;
    }
    rep.applicable = true;
    rep.trivial = true;
    for (long s = window_lo; s <= window_hi; ++s) {
        if (!m.supports(s)) continue;
        if (!m.i().is_zero()) {
            rep.trivial = false;
            rep.detail = "I acts as " + m.i().str() + " at offset " + std::to_string(s);
            return rep;
        }
    }
    rep.detail = "I-action matrix vanishes on the window";
    return rep;
}

FiniteLabel twist_label(const AutoStep& step, const FiniteLabel& label) {
    auto [kind, i, j, h] = label;
    switch (step.kind) {
        case AutoStep::Kind::Conj:
            switch (kind) {
                case BottomKind::HwVerma: return {BottomKind::LwVerma, -i, -j, h};
                case BottomKind::LwVerma: return {BottomKind::HwVerma, -i, -j, h};
                case BottomKind::OneDim: return {kind, i, -j, h};
                case BottomKind::DenseIrr: return {kind, -i, -j, h + i};
                case BottomKind::DensePlus: return {BottomKind::DenseMinus, -i, -j - Scalar(1), h + i};
                case BottomKind::DenseMinus: return {BottomKind::DensePlus, -i, -j - Scalar(1), h + i};
                default: return {kind, i, -j, h};  // DenseZero
            }
        case AutoStep::Kind::Rescale: {
            Scalar a2 = step.param * step.param;
            switch (kind) {
                case BottomKind::OneDim:
                case BottomKind::DenseZero: return label;
                default: return {kind, a2 * i, j, a2 * h};
            }
        }
        case AutoStep::Kind::Shift: {
            const Scalar& beta = step.param;
            switch (kind) {
                case BottomKind::HwVerma:
                case BottomKind::LwVerma: return {kind, i, j + beta * i, h + beta * i * i};
                case BottomKind::OneDim:
                case BottomKind::DenseZero: return label;
                default: return {kind, i, j + beta * i, h + beta * i * i};
            }
        }
        default:
            throw std::invalid_argument("twist_label: affine-only step on a finite label");
    }
}

FiniteLabel twist_label(const AutomorphismSpec& spec, FiniteLabel label) {
    for (const auto& step : spec.word) label = twist_label(step, label);
    return label;
}

}  // namespace h4
