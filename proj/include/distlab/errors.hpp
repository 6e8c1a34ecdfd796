#pragma once

#include <stdexcept>
#include <string>

namespace distlab {

// Base class for all errors raised by this library. Messages name the
// violated precondition so the CLI can surface them verbatim.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input outside an operation's documented domain (bad range, bad config).
class DomainError : public Error {
public:
    using Error::Error;
};

// eigenvalues_sym3: asymmetry above symTol.
class NotSymmetric : public Error {
public:
    using Error::Error;
};

// linear_distortion: |det| below singTol.
class SingularMatrix : public Error {
public:
    using Error::Error;
};

// distortion_report: det <= 0.
class NonPositiveJacobian : public Error {
public:
    using Error::Error;
};

// a <= 1 or b <= a within the degeneracy guard; formulas divide by
// (a^2-1) and (b^2-a^2).
class DegenerateSpectrum : public Error {
public:
    using Error::Error;
};

// alpha/beta < 0: the square-root branch of the Lagrange solution is
// undefined and is reported instead of guessed.
class BranchError : public Error {
public:
    using Error::Error;
};

// case2_quadratic with enforcement: |b(r^2-1) + r^2 sin^2(theta1)| too large.
class ConstraintViolated : public Error {
public:
    using Error::Error;
};

// sawtooth_slope / laminate_jacobian: the phase coordinate sits on a kink.
class Breakpoint : public Error {
public:
    using Error::Error;
};

// eigen_branches: imaginary residue of the Cardano evaluation too large.
class ComplexLeakage : public Error {
public:
    using Error::Error;
};

// local_distortion_probe: radius reaches past the nearest breakpoint plane.
class TooCoarse : public Error {
public:
    using Error::Error;
};

} // namespace distlab
