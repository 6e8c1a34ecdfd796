#include "distlab/matrix3.hpp"

#include <algorithm>
#include <cmath>

namespace distlab {

Matrix3 Matrix3::identity() { return diagonal(1.0, 1.0, 1.0); }

Matrix3 Matrix3::diagonal(double d0, double d1, double d2) {
    Matrix3 r;
    r.m[0][0] = d0;
    r.m[1][1] = d1;
    r.m[2][2] = d2;
    return r;
}

Matrix3 Matrix3::outer(const Vec3& u, const Vec3& v) {
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] = u[i] * v[j];
    return r;
}

Matrix3 Matrix3::operator+(const Matrix3& o) const {
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
    return r;
}

Matrix3 Matrix3::operator-(const Matrix3& o) const {
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
    return r;
}

Matrix3 Matrix3::operator*(const Matrix3& o) const {
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

Matrix3 Matrix3::operator*(double c) const {
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] = c * m[i][j];
    return r;
}

Vec3 Matrix3::operator*(const Vec3& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

Matrix3 Matrix3::transposed() const {
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
}

double Matrix3::det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double Matrix3::frobenius_norm() const {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += m[i][j] * m[i][j];
    return std::sqrt(s);
}

double Matrix3::max_abs() const {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s = std::max(s, std::abs(m[i][j]));
    return s;
}

bool Matrix3::finite() const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!std::isfinite(m[i][j])) return false;
    return true;
}

Matrix3 gram(const Matrix3& M) {
    if (!M.finite()) throw DomainError("gram requires finite entries");
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += M.m[k][i] * M.m[k][j];
            r.m[i][j] = s;
            r.m[j][i] = s;
        }
    return r;
}

namespace {

// Characteristic polynomial p(x) = det(S - xI) and p'(x), Horner on the
// monic coefficients (sign-flipped so the leading term is +x^3).
struct CharPoly {
    double c2, c1, c0; // x^3 + c2 x^2 + c1 x + c0

    explicit CharPoly(const Matrix3& S) {
        c2 = -S.trace();
        c1 = (S(0, 0) * S(1, 1) - S(0, 1) * S(1, 0))
           + (S(0, 0) * S(2, 2) - S(0, 2) * S(2, 0))
           + (S(1, 1) * S(2, 2) - S(1, 2) * S(2, 1));
        c0 = -S.det();
    }

    double eval(double x) const { return ((x + c2) * x + c1) * x + c0; }
    double deriv(double x) const { return (3.0 * x + 2.0 * c2) * x + c1; }
};

// A couple of Newton steps recover full relative accuracy for roots much
// smaller than the spectral scale, where the trigonometric closed form only
// achieves absolute accuracy.
double polish_root(const CharPoly& p, double x) {
    double best = x;
    double bestAbs = std::abs(p.eval(x));
    for (int it = 0; it < 6; ++it) {
        const double d = p.deriv(x);
        if (d == 0.0) break;
        const double step = p.eval(x) / d;
        x -= step;
        const double px = std::abs(p.eval(x));
        if (px < bestAbs) {
            bestAbs = px;
            best = x;
        }
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    return best;
}

} // namespace

SortedEigenTriple eigenvalues_sym3(const Matrix3& S) {
    if (!S.finite()) throw DomainError("eigenvalues_sym3 requires finite entries");
    const double scale = std::max(1.0, S.max_abs());
    double asym = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) asym = std::max(asym, std::abs(S(i, j) - S(j, i)));
    if (asym > 1e-12 * scale)
        throw NotSymmetric("eigenvalues_sym3 requires a symmetric matrix (asymmetry above symTol)");

    double l1, l2, l3;
    const bool diag = S(0, 1) == 0.0 && S(0, 2) == 0.0 && S(1, 2) == 0.0 &&
                      S(1, 0) == 0.0 && S(2, 0) == 0.0 && S(2, 1) == 0.0;
    if (diag) {
        l1 = S(0, 0);
        l2 = S(1, 1);
        l3 = S(2, 2);
        if (l1 > l2) std::swap(l1, l2);
        if (l2 > l3) std::swap(l2, l3);
        if (l1 > l2) std::swap(l1, l2);
    } else {
        // Viete / trigonometric form for the shifted matrix B = (S - q I)/p,
        // whose eigenvalues are cos-distributed in [-1, 1].
        const double q = S.trace() / 3.0;
        double p2 = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const double v = S(i, j) - (i == j ? q : 0.0);
                p2 += v * v;
            }
        const double p = std::sqrt(p2 / 6.0);
        if (p == 0.0) {
            SortedEigenTriple t{q, q, q, true};
            return t;
        }
        Matrix3 B;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) B(i, j) = (S(i, j) - (i == j ? q : 0.0)) / p;
        double r = B.det() / 2.0;
        r = std::clamp(r, -1.0, 1.0);
        const double phi = std::acos(r) / 3.0;
        l3 = q + 2.0 * p * std::cos(phi);
        l1 = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
        l2 = 3.0 * q - l1 - l3;

        const CharPoly cp(S);
        l1 = polish_root(cp, l1);
        l2 = polish_root(cp, l2);
        l3 = polish_root(cp, l3);
        if (l1 > l2) std::swap(l1, l2);
        if (l2 > l3) std::swap(l2, l3);
        if (l1 > l2) std::swap(l1, l2);
    }

    SortedEigenTriple t{l1, l2, l3, false};
    const double gapTol = 1e-9 * std::abs(l3);
    t.degenerate = (l2 - l1) < gapTol || (l3 - l2) < gapTol;
    return t;
}

double linear_distortion(const Matrix3& M) {
    if (!M.finite()) throw DomainError("linear_distortion requires finite entries");
    const double scale = M.max_abs();
    const double d = M.det();
    if (std::abs(d) < 1e-12 * scale * scale * scale)
        throw SingularMatrix("linear_distortion requires a nonsingular matrix (|det| below singTol)");
    const SortedEigenTriple e = eigenvalues_sym3(gram(M));
    const double lo = std::max(e.l1, 0.0);
    if (lo == 0.0)
        throw SingularMatrix("linear_distortion: smallest gram eigenvalue vanished");
    return std::sqrt(e.l3 / lo);
}

std::array<double, 3> singular_values(const Matrix3& M) {
    const SortedEigenTriple e = eigenvalues_sym3(gram(M));
    return {std::sqrt(std::max(e.l1, 0.0)), std::sqrt(std::max(e.l2, 0.0)),
            std::sqrt(std::max(e.l3, 0.0))};
}

DistortionReport distortion_report(const Matrix3& M) {
    const double d = M.det();
    if (!(d > 0.0))
        throw NonPositiveJacobian("distortion_report requires det(M) > 0 (orientation-preserving)");
    const auto s = singular_values(M);
    DistortionReport r;
    r.H = s[2] / s[0];
    r.K_O = s[2] * s[2] * s[2] / d;
    r.K_I = d / (s[0] * s[0] * s[0]);
    const double nf = M.frobenius_norm() / std::sqrt(3.0);
    r.K_frob = nf * nf * nf / d;
    return r;
}

} // namespace distlab
