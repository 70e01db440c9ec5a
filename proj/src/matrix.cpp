#include "h4/matrix.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace h4 {

bool ExactMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

ExactMatrix ExactMatrix::evaluate(const Rational& x) const {
    ExactMatrix out(rows_, cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) {
            try {
                out.at(r, c) = at(r, c).evaluate(x);
            } catch (const PoleError&) {
                throw PoleError("ExactMatrix::evaluate: pole at t=" + x.str() + " in entry (" +
                                std::to_string(r) + "," + std::to_string(c) + ") = " +
                                at(r, c).str());
            }
        }
    return out;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
        throw std::invalid_argument("ExactMatrix::vstack: column mismatch");
    size_t cols = a.rows() ? a.cols() : b.cols();
    ExactMatrix out(a.rows() + b.rows(), cols);
    for (size_t r = 0; r < a.rows(); ++r)
        for (size_t c = 0; c < cols; ++c) out.at(r, c) = a.at(r, c);
    for (size_t r = 0; r < b.rows(); ++r)
        for (size_t c = 0; c < cols; ++c) out.at(a.rows() + r, c) = b.at(r, c);
    return out;
}

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
    ExactMatrix out(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); ++r)
        for (size_t k = 0; k < a.cols(); ++k) {
            const Scalar& av = a.at(r, k);
            if (av.is_zero()) continue;
            for (size_t c = 0; c < b.cols(); ++c) {
                const Scalar& bv = b.at(k, c);
                if (bv.is_zero()) continue;
                out.at(r, c) += av * bv;
            }
        }
    return out;
}

namespace {

ScalarKind matrix_kind(const ExactMatrix& m) {
    ScalarKind k = ScalarKind::Rational;
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c).kind() > k) k = m.at(r, c).kind();
    return k;
}

// Gauss-Jordan over mpq with zero-skipping; the workhorse for numeric cells.
struct RationalElim {
    size_t rows, cols;
    std::vector<mpq_class> a;
    std::vector<size_t> pivots;

    RationalElim(const ExactMatrix& m) : rows(m.rows()), cols(m.cols()), a(rows * cols) {
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c) a[r * cols + c] = m.at(r, c).rat().raw();
    }
    mpq_class& at(size_t r, size_t c) { return a[r * cols + c]; }

    void run(bool reduced) {
        mpq_t tmp;
        mpq_init(tmp);
        size_t prow = 0;
        for (size_t c = 0; c < cols && prow < rows; ++c) {
            size_t sel = prow;
            while (sel < rows && sgn(at(sel, c)) == 0) ++sel;
            if (sel == rows) continue;
            if (sel != prow)
                for (size_t j = c; j < cols; ++j) std::swap(at(sel, j), at(prow, j));
            pivots.push_back(c);
            mpq_class& p = at(prow, c);
            if (p != 1) {
                for (size_t j = c + 1; j < cols; ++j)
                    if (sgn(at(prow, j)) != 0) at(prow, j) /= p;
                p = 1;
            }
            size_t start = reduced ? 0 : prow + 1;
            for (size_t r = start; r < rows; ++r) {
                if (r == prow) continue;
                mpq_class& f = at(r, c);
                if (sgn(f) == 0) continue;
                for (size_t j = c + 1; j < cols; ++j) {
                    const mpq_class& pv = at(prow, j);
                    if (sgn(pv) == 0) continue;
                    mpq_mul(tmp, f.get_mpq_t(), pv.get_mpq_t());
                    mpq_sub(at(r, j).get_mpq_t(), at(r, j).get_mpq_t(), tmp);
                }
                f = 0;
            }
            ++prow;
        }
        mpq_clear(tmp);
    }
};

// generic field elimination over Scalar (used for rational-function matrices)
struct GenericElim {
    size_t rows, cols;
    std::vector<Scalar> a;
    std::vector<size_t> pivots;

    GenericElim(const ExactMatrix& m, bool promote) : rows(m.rows()), cols(m.cols()), a(rows * cols) {
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c) {
                const Scalar& v = m.at(r, c);
                a[r * cols + c] = promote ? Scalar(v.as_ratfunc()) : v;
            }
    }
    Scalar& at(size_t r, size_t c) { return a[r * cols + c]; }

    void run(bool reduced) {
        size_t prow = 0;
        for (size_t c = 0; c < cols && prow < rows; ++c) {
            size_t sel = prow;
            while (sel < rows && at(sel, c).is_zero()) ++sel;
            if (sel == rows) continue;
            if (sel != prow)
                for (size_t j = c; j < cols; ++j) std::swap(at(sel, j), at(prow, j));
            pivots.push_back(c);
            Scalar p = at(prow, c);
            if (!p.is_one()) {
                for (size_t j = c; j < cols; ++j)
                    if (!at(prow, j).is_zero()) at(prow, j) /= p;
            }
            size_t start = reduced ? 0 : prow + 1;
            for (size_t r = start; r < rows; ++r) {
                if (r == prow) continue;
                Scalar f = at(r, c);
                if (f.is_zero()) continue;
                for (size_t j = c; j < cols; ++j) {
                    if (at(prow, j).is_zero()) continue;
                    at(r, j) -= f * at(prow, j);
                }
            }
            ++prow;
        }
    }
};

template <typename Elim>
RrefResult finish(Elim& e) {
    RrefResult res;
    res.rank = e.pivots.size();
    res.pivots = e.pivots;
    res.echelon = ExactMatrix(e.rows, e.cols);
    for (size_t r = 0; r < e.rows; ++r)
        for (size_t c = 0; c < e.cols; ++c) res.echelon.at(r, c) = Scalar(e.at(r, c));

    std::vector<bool> is_pivot(e.cols, false);
    for (size_t c : e.pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < e.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    res.kernel = ExactMatrix(e.cols, free_cols.size());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t f = free_cols[k];
        res.kernel.at(f, k) = Scalar(1);
        for (size_t p = 0; p < e.pivots.size(); ++p)
            res.kernel.at(e.pivots[p], k) = -res.echelon.at(p, f);
    }
    return res;
}

}  // namespace

RrefResult rref(const ExactMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) {
        RrefResult res;
        res.echelon = m;
        res.kernel = ExactMatrix(m.cols(), m.cols());
        for (size_t c = 0; c < m.cols(); ++c) res.kernel.at(c, c) = Scalar(1);
        return res;
    }
    if (matrix_kind(m) == ScalarKind::Rational) {
        RationalElim e(m);
        e.run(true);
        return finish(e);
    }
    GenericElim e(m, true);
    e.run(true);
    return finish(e);
}

size_t rank(const ExactMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (matrix_kind(m) == ScalarKind::Rational) {
        RationalElim e(m);
        e.run(false);
        return e.pivots.size();
    }
    GenericElim e(m, true);
    e.run(false);
    return e.pivots.size();
}

std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m) {
    RrefResult res = rref(m);
    std::vector<std::vector<Scalar>> out;
    for (size_t k = 0; k < res.kernel.cols(); ++k) {
        std::vector<Scalar> v(m.cols());
        for (size_t c = 0; c < m.cols(); ++c) v[c] = res.kernel.at(c, k);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace h4
