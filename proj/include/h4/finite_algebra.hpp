#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "h4/scalar.hpp"

namespace h4 {

// Basis generators of h4. The enumeration order F < E < J < I is also the
// tie-break order for equal mode indices in PBW words.
enum class Gen : int { F = 0, E = 1, J = 2, I = 3 };

inline int charge(Gen g) { return g == Gen::E ? 1 : (g == Gen::F ? -1 : 0); }
inline const char* gen_name(Gen g) {
    switch (g) {
        case Gen::F: return "F";
        case Gen::E: return "E";
        case Gen::J: return "J";
        default: return "I";
    }
}

// Element of h4: coefficients on {E, F, I, J}.
class H4Element {
public:
    H4Element() = default;
    static H4Element basis(Gen g) {
        H4Element x;
        x.c_[static_cast<int>(g)] = Scalar(1);
        return x;
    }

    Scalar& coeff(Gen g) { return c_[static_cast<int>(g)]; }
    const Scalar& coeff(Gen g) const { return c_[static_cast<int>(g)]; }
    bool is_zero() const;

    H4Element operator-() const;
    friend H4Element operator+(const H4Element& a, const H4Element& b);
    friend H4Element operator-(const H4Element& a, const H4Element& b);
    friend H4Element operator*(const Scalar& s, const H4Element& x);
    friend bool operator==(const H4Element& a, const H4Element& b) { return a.c_ == b.c_; }

    std::string str() const;

private:
    std::array<Scalar, 4> c_{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
};

// [E,F] = I, [J,E] = E, [J,F] = -F, I central
H4Element bracket(const H4Element& x, const H4Element& y);

// invariant symmetric bilinear forms: kappa(E,F) = kappa(I,J) = a, kappa(J,J) = b
struct BilinearParams {
    Scalar a{1};
    Scalar b{0};
};

Scalar kappa(const H4Element& x, const H4Element& y, const BilinearParams& p = {});
Scalar kappa(Gen x, Gen y, const BilinearParams& p = {});

// One step of an automorphism word. Shift comes in a finite flavour
// (J -> J - beta I) and an affine flavour (J_0 -> J_0 - beta K); the affine
// shift and spectral flow only act on labels and characters.
struct AutoStep {
    enum class Kind { Conj, Rescale, Shift, AffineShift, SpectralFlow };
    Kind kind;
    Scalar param{0};  // alpha for Rescale (nonzero), beta for shifts
    long ell = 0;     // spectral flow exponent

    static AutoStep conj() { return {Kind::Conj, Scalar(0), 0}; }
    static AutoStep rescale(const Scalar& alpha);
    static AutoStep shift(const Scalar& beta) { return {Kind::Shift, beta, 0}; }
    static AutoStep affine_shift(const Scalar& beta) { return {Kind::AffineShift, beta, 0}; }
    static AutoStep spectral_flow(long ell) { return {Kind::SpectralFlow, Scalar(0), ell}; }
};

// word of automorphism steps, applied first element first
struct AutomorphismSpec {
    std::vector<AutoStep> word;
};

// image of x under the finite-level automorphism; rejects affine-only steps
H4Element apply_automorphism(const AutomorphismSpec& spec, const H4Element& x);
H4Element apply_automorphism(const AutoStep& step, const H4Element& x);

// weight-module bottom layers used for affine induction
enum class BottomKind { HwVerma, LwVerma, OneDim, DenseIrr, DensePlus, DenseMinus, DenseZero };

const char* bottom_kind_name(BottomKind k);
std::optional<BottomKind> parse_bottom_kind(const std::string& name);

// A weight h4-module in offset-indexed form: states are indexed by an
// integer offset s with J-eigenvalue j0 + s, I acts as the constant i, and
// E, F act along offsets with the coefficients below. The normalisation is
// fixed per kind so that F(E(state_s)) = (h - i (j0+s)) state_s where h is
// the eigenvalue of Q = FE + IJ.
class FiniteWeightModule {
public:
    static FiniteWeightModule build(BottomKind kind, const Scalar& i, const Scalar& j,
                                    const Scalar& h = Scalar(0));

    BottomKind kind() const { return kind_; }
    const Scalar& i() const { return i_; }
    const Scalar& j0() const { return j0_; }
    // eigenvalue of Q = FE + IJ (derived for highest/lowest-weight kinds)
    const Scalar& q_eigen() const { return h_; }
    bool reducible() const { return reducible_; }

    bool supports(long s) const;
    Scalar e_coeff(long s) const;  // E: state_s -> state_{s+1}
    Scalar f_coeff(long s) const;  // F: state_s -> state_{s-1}
    Scalar j_eigen(long s) const { return j0_ + Scalar(Rational(s)); }

    std::string descriptor_json() const;

private:
    FiniteWeightModule() = default;
    BottomKind kind_{};
    Scalar i_, j0_, h_;
    bool reducible_ = false;
};

struct ITrivialReport {
    bool applicable = false;
    bool trivial = false;
    std::string detail;
};

// Lemma-style check that I acts as zero; only meaningful for genuinely
// finite-dimensional modules, or finite windows explicitly flagged as such.
ITrivialReport check_I_trivial(const FiniteWeightModule& m, long window_lo, long window_hi,
                               bool treat_window_as_finite = false);

// isomorphism-class label maps of the finite automorphisms
struct FiniteLabel {
    BottomKind kind;
    Scalar i, j, h;
};
FiniteLabel twist_label(const AutoStep& step, const FiniteLabel& label);
FiniteLabel twist_label(const AutomorphismSpec& spec, FiniteLabel label);

}  // namespace h4
