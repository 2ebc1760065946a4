#pragma once

// Complex 2x2 algebra for junction conditions at a point defect.
//
// Conventions (hbar = m = 1):
//   Gamma      = (psi, psi') at one side of the origin
//   j          = (1/2i) Gamma^dagger Sp2 Gamma = Im(conj(psi) psi')
//   Gamma(0+)  = M Gamma(0-)
// The current is continuous for every Gamma iff M^dagger Sp2 M = Sp2.

#include <complex>

namespace pointlike {

using Complex = std::complex<double>;

inline constexpr double kSymplecticTol = 1e-12;

struct BoundaryData {
    Complex psi;
    Complex dpsi;

    double norm_sq() const { return std::norm(psi) + std::norm(dpsi); }
};

/// Plain 2x2 complex matrix, row-major entries. No invariants.
struct Matrix2 {
    Complex m11{}, m12{}, m21{}, m22{};

    static constexpr Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Matrix2 diagonal(Complex a, Complex d) { return {a, 0.0, 0.0, d}; }

    Complex det() const { return m11 * m22 - m12 * m21; }
    Complex trace() const { return m11 + m22; }
    Matrix2 adjoint() const { return {std::conj(m11), std::conj(m21), std::conj(m12), std::conj(m22)}; }
    Matrix2 transpose() const { return {m11, m21, m12, m22}; }
    Matrix2 conj() const { return {std::conj(m11), std::conj(m12), std::conj(m21), std::conj(m22)}; }

    /// Largest entry modulus.
    double max_abs() const;
    bool is_finite() const;

    Complex operator()(int row, int col) const;

    friend Matrix2 operator+(const Matrix2& a, const Matrix2& b)
    {
        return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
    }
    friend Matrix2 operator-(const Matrix2& a, const Matrix2& b)
    {
        return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
    }
    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b)
    {
        return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
                a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
    }
    friend Matrix2 operator*(Complex s, const Matrix2& a) { return {s * a.m11, s * a.m12, s * a.m21, s * a.m22}; }
    friend BoundaryData operator*(const Matrix2& a, const BoundaryData& g)
    {
        return {a.m11 * g.psi + a.m12 * g.dpsi, a.m21 * g.psi + a.m22 * g.dpsi};
    }
    friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// max-entry distance
double distance(const Matrix2& a, const Matrix2& b);

/// The standard skew form [[0,1],[-1,0]].
struct SymplecticForm {
    static constexpr Matrix2 matrix() { return {0.0, 1.0, -1.0, 0.0}; }
};

/// e^{2 pi i turns}, exact at multiples of a quarter turn.
Complex unit_phase(double turns);

/// M^dagger Sp2 M - Sp2, the defect of the current-conservation condition.
Matrix2 symplectic_defect(const Matrix2& m);

/// A 2x2 matrix known to satisfy M^dagger Sp2 M = Sp2 within the tolerance
/// it was validated with. Only obtainable through validate_symplectic.
class JunctionMatrix {
public:
    const Matrix2& matrix() const noexcept { return m_; }
    /// Residual ||M^dagger Sp2 M - Sp2||_max measured at validation.
    double residual() const noexcept { return residual_; }

    Complex operator()(int row, int col) const { return m_(row, col); }

    static JunctionMatrix identity() { return JunctionMatrix(Matrix2::identity(), 0.0); }

private:
    JunctionMatrix(const Matrix2& m, double residual) : m_(m), residual_(residual) {}
    friend JunctionMatrix validate_symplectic(const Matrix2& m, double tol);

    Matrix2 m_;
    double residual_;
};

/// Throws InvalidParameter for non-finite entries or tol <= 0, NotSymplectic
/// when the residual exceeds tol.
JunctionMatrix validate_symplectic(const Matrix2& m, double tol = kSymplecticTol);

/// Tolerance scaled to the magnitude of M; rounding in M^dagger Sp2 M grows
/// with the square of the entries.
double scaled_tolerance(const Matrix2& m, double tol = kSymplecticTol);

double current(const BoundaryData& g);

BoundaryData apply_junction(const JunctionMatrix& m, const BoundaryData& left);

}  // namespace pointlike
