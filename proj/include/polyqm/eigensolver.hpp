#pragma once

// Self-contained dense symmetric eigensolver: Householder reduction to
// tridiagonal form followed by the QL algorithm with implicit shifts.
// Derived from the classic Algol/EISPACK tred2 and tql procedures; no
// external numerics backend.  Intended for the moderate dimensions of the
// finite-difference oracles (M <= 4096).

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace polyqm {

template <typename Scalar>
using VectorX = Eigen::Vector<Scalar, Eigen::Dynamic>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

// hypot without destructive underflow/overflow (NR "pythag").
template <typename Scalar>
Scalar pythag(Scalar a, Scalar b) {
    const Scalar absa = std::abs(a), absb = std::abs(b);
    if (absa > absb) {
        const Scalar r = absb / absa;
        return absa * std::sqrt(1 + r * r);
    }
    if (absb == 0) return 0;
    const Scalar r = absa / absb;
    return absb * std::sqrt(1 + r * r);
}

}  // namespace detail

// Householder reduction of the symmetric matrix a (destroyed) to tridiagonal
// form: d receives the diagonal, e the subdiagonal in e[0..n-2] (e[n-1] = 0).
// When accumulate is true, a is replaced by the orthogonal transform Q so the
// QL stage can build eigenvectors of the original matrix.
template <typename Scalar>
void householder_tridiagonalize(MatrixX<Scalar>& a, VectorX<Scalar>& d,
                                VectorX<Scalar>& e, bool accumulate) {
    const Eigen::Index n = a.rows();
    d.resize(n);
    e.resize(n);

    for (Eigen::Index i = n - 1; i >= 1; --i) {
        const Eigen::Index l = i - 1;
        Scalar h = 0, scale = 0;
        if (l > 0) {
            for (Eigen::Index k = 0; k <= l; ++k) scale += std::abs(a(i, k));
            if (scale == 0) {
                e[i] = a(i, l);
            } else {
                for (Eigen::Index k = 0; k <= l; ++k) {
                    a(i, k) /= scale;
                    h += a(i, k) * a(i, k);
                }
                Scalar f = a(i, l);
                Scalar g = f >= 0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a(i, l) = f - g;
                f = 0;
                for (Eigen::Index j = 0; j <= l; ++j) {
                    if (accumulate) a(j, i) = a(i, j) / h;
                    g = 0;
                    for (Eigen::Index k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
                    for (Eigen::Index k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
                    e[j] = g / h;
                    f += e[j] * a(i, j);
                }
                const Scalar hh = f / (h + h);
                for (Eigen::Index j = 0; j <= l; ++j) {
                    f = a(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (Eigen::Index k = 0; k <= j; ++k)
                        a(j, k) -= f * e[k] + g * a(i, k);
                }
            }
        } else {
            e[i] = a(i, l);
        }
        d[i] = h;
    }
    d[0] = 0;
    e[0] = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (accumulate) {
            const Eigen::Index l = i - 1;
            if (d[i] != 0) {
                for (Eigen::Index j = 0; j <= l; ++j) {
                    Scalar g = 0;
                    for (Eigen::Index k = 0; k <= l; ++k) g += a(i, k) * a(k, j);
                    for (Eigen::Index k = 0; k <= l; ++k) a(k, j) -= g * a(k, i);
                }
            }
            d[i] = a(i, i);
            a(i, i) = 1;
            for (Eigen::Index j = 0; j <= l; ++j) a(j, i) = a(i, j) = 0;
        } else {
            d[i] = a(i, i);
        }
    }
    // Shift the subdiagonal down to e[0..n-2].
    for (Eigen::Index i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0;
}

// QL with implicit shifts on a symmetric tridiagonal matrix.  d holds the
// diagonal and on return the eigenvalues (unsorted); e holds the subdiagonal
// in e[0..n-2] and is destroyed.  If z is non-null its columns are rotated
// along: pass the identity (or the Householder Q) to accumulate eigenvectors.
template <typename Scalar>
void tridiagonal_ql_implicit(VectorX<Scalar>& d, VectorX<Scalar>& e,
                             MatrixX<Scalar>* z = nullptr) {
    const Eigen::Index n = d.size();
    if (n == 0) return;
    e[n - 1] = 0;

    for (Eigen::Index l = 0; l < n; ++l) {
        int iter = 0;
        Eigen::Index m;
        do {
            for (m = l; m < n - 1; ++m) {
                const Scalar dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= std::numeric_limits<Scalar>::epsilon() * dd) break;
            }
            if (m != l) {
                if (iter++ == 50)
                    throw std::runtime_error("tridiagonal QL failed to converge");
                Scalar g = (d[l + 1] - d[l]) / (2 * e[l]);
                Scalar r = detail::pythag<Scalar>(g, 1);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                Scalar s = 1, c = 1, p = 0;
                Eigen::Index i;
                for (i = m - 1; i >= l; --i) {
                    Scalar f = s * e[i];
                    const Scalar b = c * e[i];
                    e[i + 1] = r = detail::pythag(f, g);
                    if (r == 0) {
                        d[i + 1] -= p;
                        e[m] = 0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2 * c * b;
                    d[i + 1] = g + (p = s * r);
                    g = c * r - b;
                    if (z) {
                        for (Eigen::Index k = 0; k < n; ++k) {
                            f = (*z)(k, i + 1);
                            (*z)(k, i + 1) = s * (*z)(k, i) + c * f;
                            (*z)(k, i) = c * (*z)(k, i) - s * f;
                        }
                    }
                }
                if (r == 0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0;
            }
        } while (m != l);
    }
}

template <typename Scalar>
struct SymmetricEigenResult {
    VectorX<Scalar> eigenvalues;  // ascending
    MatrixX<Scalar> eigenvectors; // column k pairs with eigenvalues[k]; empty unless requested
};

// Eigenvalues on the tridiagonal (diag, sub) pair directly, ascending.
template <typename Scalar>
VectorX<Scalar> tridiagonal_eigenvalues(VectorX<Scalar> diag, VectorX<Scalar> sub) {
    if (sub.size() != diag.size() - 1 && sub.size() != diag.size())
        throw std::invalid_argument("subdiagonal must have n-1 (or n) entries");
    VectorX<Scalar> e = VectorX<Scalar>::Zero(diag.size());
    e.head(std::min(sub.size(), diag.size() - 1)) =
        sub.head(std::min(sub.size(), diag.size() - 1));
    tridiagonal_ql_implicit<Scalar>(diag, e);
    std::sort(diag.begin(), diag.end());
    return diag;
}

// Full symmetric eigensolve.  Input must be symmetric to within
// 1e-12 * max|entry|; dimension is capped at 4096 to keep the dense
// reduction tractable.
template <typename Scalar>
SymmetricEigenResult<Scalar> symmetric_eigensolve(const MatrixX<Scalar>& matrix,
                                                  bool with_vectors = false) {
    const Eigen::Index n = matrix.rows();
    if (n == 0 || matrix.cols() != n)
        throw std::invalid_argument("matrix must be square and non-empty");
    if (n > 4096) throw std::invalid_argument("dimension capped at 4096");
    const Scalar scale = matrix.cwiseAbs().maxCoeff();
    if ((matrix - matrix.transpose()).cwiseAbs().maxCoeff() > Scalar(1e-12) * scale)
        throw std::invalid_argument("matrix is not symmetric");

    MatrixX<Scalar> a = matrix;
    VectorX<Scalar> d, e;
    householder_tridiagonalize(a, d, e, with_vectors);
    tridiagonal_ql_implicit(d, e, with_vectors ? &a : nullptr);

    SymmetricEigenResult<Scalar> result;
    if (with_vectors) {
        // Sort eigenpairs ascending by straight insertion on the columns.
        std::vector<Eigen::Index> order(static_cast<size_t>(n));
        for (Eigen::Index i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
        std::sort(order.begin(), order.end(),
                  [&](Eigen::Index x, Eigen::Index y) { return d[x] < d[y]; });
        result.eigenvalues.resize(n);
        result.eigenvectors.resize(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            result.eigenvalues[i] = d[order[static_cast<size_t>(i)]];
            result.eigenvectors.col(i) = a.col(order[static_cast<size_t>(i)]);
        }
    } else {
        std::sort(d.begin(), d.end());
        result.eigenvalues = std::move(d);
    }
    return result;
}

}  // namespace polyqm
