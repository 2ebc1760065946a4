#include "pointlike/core.hpp"

#include "pointlike/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pointlike {

NotSymplectic::NotSymplectic(double residual, int row, int col)
    : DomainError([&] {
          std::ostringstream os;
          os.precision(17);
          os << "junction matrix is not symplectic-unitary: residual " << residual << " at entry (" << row << ","
             << col << ") of M^dagger Sp2 M";
          return os.str();
      }()),
      residual_(residual),
      row_(row),
      col_(col)
{
}

double Matrix2::max_abs() const
{
    return std::max({std::abs(m11), std::abs(m12), std::abs(m21), std::abs(m22)});
}

bool Matrix2::is_finite() const
{
    for (Complex c : {m11, m12, m21, m22}) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    }
    return true;
}

Complex Matrix2::operator()(int row, int col) const
{
    if (row == 1 && col == 1) return m11;
    if (row == 1 && col == 2) return m12;
    if (row == 2 && col == 1) return m21;
    if (row == 2 && col == 2) return m22;
    throw std::out_of_range("Matrix2 index out of range (entries are 1-based)");
}

double distance(const Matrix2& a, const Matrix2& b) { return (a - b).max_abs(); }

Complex unit_phase(double turns)
{
    double frac = turns - std::floor(turns);
    if (frac >= 1.0) frac = 0.0;
    if (frac == 0.0) return {1.0, 0.0};
    if (frac == 0.25) return {0.0, 1.0};
    if (frac == 0.5) return {-1.0, 0.0};
    if (frac == 0.75) return {0.0, -1.0};
    return std::polar(1.0, 2.0 * M_PI * frac);
}

Matrix2 symplectic_defect(const Matrix2& m)
{
    constexpr Matrix2 sp = SymplecticForm::matrix();
    return m.adjoint() * sp * m - sp;
}

JunctionMatrix validate_symplectic(const Matrix2& m, double tol)
{
    if (!(tol > 0.0) || !std::isfinite(tol)) throw InvalidParameter("symplectic tolerance must be positive and finite");
    if (!m.is_finite()) throw InvalidParameter("junction matrix has non-finite entries");

    const Matrix2 d = symplectic_defect(m);
    int worst_row = 1;
    int worst_col = 1;
    double worst = 0.0;
    for (int r = 1; r <= 2; ++r) {
        for (int c = 1; c <= 2; ++c) {
            if (std::abs(d(r, c)) > worst) {
                worst = std::abs(d(r, c));
                worst_row = r;
                worst_col = c;
            }
        }
    }
    if (worst > tol) throw NotSymplectic(worst, worst_row, worst_col);
    return JunctionMatrix(m, worst);
}

double scaled_tolerance(const Matrix2& m, double tol)
{
    const double s = std::max(1.0, m.max_abs());
    return tol * s * s;
}

double current(const BoundaryData& g) { return (std::conj(g.psi) * g.dpsi).imag(); }

BoundaryData apply_junction(const JunctionMatrix& m, const BoundaryData& left) { return m.matrix() * left; }

}  // namespace pointlike
