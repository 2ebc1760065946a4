#pragma once

// Mass-jump boundary condition and its correspondence with the delta-one
// family. The mass ratio mu = m+/m- is taken with m- = 1.
//
//   b        = 1 / sqrt(1 + mu + mu^2)
//   M_mu     = diag((1 + b)/(1 - mu b), (1 - b)/(1 + mu b))     det M_mu = mu
//   lambda   = 1 / sqrt(mu)
//   rescaled = diag(lambda^{1/2}, lambda^{3/2}) M_mu            det = 1
//
// The rescaled matrix is diag(c, 1/c) with c = (2 + X2)/(2 - X2).

#include "pointlike/core.hpp"

#include <cmath>

namespace pointlike {

/// Validated mass ratio: mu > 0, mu != 1, finite. Throws InvalidMu.
class MassRatio {
public:
    explicit MassRatio(double mu);

    double value() const noexcept { return mu_; }
    /// lambda = 1/sqrt(mu), the half-line rescaling that restores unit mass.
    double scale_factor() const { return 1.0 / std::sqrt(mu_); }

private:
    double mu_;
};

double b_of_mu(double mu);

/// Not symplectic-unitary on its own (det = mu): the current on the right is
/// weighted by 1/mu. Returned as a plain matrix for that reason.
Matrix2 massjump_junction(double mu);

/// diag(lambda^{1/2}, lambda^{3/2}) * m. Requires lambda > 0.
Matrix2 rescale_junction(const Matrix2& m, double lambda);

/// Closed-form X2(mu).
double x2_of_mu(double mu);

/// X2 read off the (1,1) entry g of the rescaled mass-jump matrix:
/// X2 = 2 (g - 1)/(g + 1).
double x2_via_rescaling(double mu);

/// Same extraction from the (2,2) entry h = (2 - X2)/(2 + X2).
double x2_via_rescaling_lower(double mu);

}  // namespace pointlike
