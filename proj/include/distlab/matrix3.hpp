#pragma once

#include <array>
#include <cmath>

#include "distlab/errors.hpp"

namespace distlab {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double c) const { return {c * x, c * y, c * z}; }
};

inline double dot(const Vec3& p, const Vec3& q) { return p.x * q.x + p.y * q.y + p.z * q.z; }
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

// Dense 3x3 real matrix, row-major.
struct Matrix3 {
    std::array<std::array<double, 3>, 3> m{};

    double& operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }

    static Matrix3 identity();
    static Matrix3 diagonal(double d0, double d1, double d2);
    static Matrix3 outer(const Vec3& u, const Vec3& v);

    Matrix3 operator+(const Matrix3& o) const;
    Matrix3 operator-(const Matrix3& o) const;
    Matrix3 operator*(const Matrix3& o) const;
    Matrix3 operator*(double c) const;
    Vec3 operator*(const Vec3& v) const;

    Matrix3 transposed() const;
    double det() const;
    double trace() const { return m[0][0] + m[1][1] + m[2][2]; }
    double frobenius_norm() const;
    double max_abs() const;
    bool finite() const;
};

inline Matrix3 operator*(double c, const Matrix3& M) { return M * c; }

// A = diag(1, a, b) with 1 < a < b, so the three singular values 1, a, b
// are distinct.
struct DiagonalMap {
    double a = 0.0;
    double b = 0.0;

    DiagonalMap(double a_, double b_) : a(a_), b(b_) {
        if (!(1.0 < a && a < b) || !std::isfinite(a) || !std::isfinite(b))
            throw DomainError("DiagonalMap requires 1 < a < b");
    }

    Matrix3 matrix() const { return Matrix3::diagonal(1.0, a, b); }
};

// Ascending eigenvalues of a symmetric matrix. `degenerate` is set when a
// pair sits closer than 1e-9 * |l3|; callers probing the window endpoints
// need to see crossings rather than an error.
struct SortedEigenTriple {
    double l1 = 0.0, l2 = 0.0, l3 = 0.0;
    bool degenerate = false;
};

// H together with the Jacobian-normalized distortions. K_frob uses
// ||M||_F / sqrt(3) so the identity map scores exactly 1.
struct DistortionReport {
    double H = 1.0;
    double K_O = 1.0;
    double K_I = 1.0;
    double K_frob = 1.0;
};

// M^T M, symmetric positive semidefinite.
Matrix3 gram(const Matrix3& M);

// Closed-form eigenvalues of a symmetric 3x3 matrix (trigonometric form of
// the real cubic, Newton-polished). Exact for diagonal input.
// Throws NotSymmetric when asymmetry exceeds 1e-12 * max(1, ||S||_max).
SortedEigenTriple eigenvalues_sym3(const Matrix3& S);

// Ratio of extreme singular values, sqrt(l3/l1) of gram(M).
// Throws SingularMatrix when |det M| < 1e-12 * ||M||_max^3.
double linear_distortion(const Matrix3& M);

// H, K_O = sigma_max^3/det, K_I = det/sigma_min^3, K_frob = (||M||_F/sqrt 3)^3/det.
// Throws NonPositiveJacobian when det(M) <= 0.
DistortionReport distortion_report(const Matrix3& M);

// Singular values of M in ascending order (via gram eigenvalues).
std::array<double, 3> singular_values(const Matrix3& M);

} // namespace distlab
