#pragma once

// Plane-wave scattering off a point junction.
//
//   psi_1 = e^{ikx} + A+ e^{-ikx}  (x < 0),   B+ e^{ikx}                (x > 0)
//   psi_2 = B- e^{-ikx}            (x < 0),   e^{-ikx} + A- e^{ikx}     (x > 0)
//
//   S = [[A+, B+], [B-, A-]]

#include "pointlike/core.hpp"
#include "pointlike/extensions.hpp"

#include <span>
#include <vector>

namespace pointlike {

struct ScatteringMatrix {
    Complex a_plus, b_plus, b_minus, a_minus;
    double k = 0.0;

    Matrix2 matrix() const { return {a_plus, b_plus, b_minus, a_minus}; }
};

struct ChannelProbabilities {
    double reflection = 0.0;
    double transmission = 0.0;
};

/// {0.1, 0.5, 1, 2, 5, 10}
std::vector<double> default_k_grid();

/// Solves both matching problems for Gamma(0+) = M Gamma(0-). Requires k > 0.
/// Throws SingularMatching if the 2x2 system has no unique solution.
ScatteringMatrix smatrix(const JunctionMatrix& m, double k);

/// Same matching system continued to any real k != 0; k < 0 exchanges the
/// roles of incoming and outgoing waves.
Matrix2 solve_matching(const Matrix2& m, double k);

/// Closed forms for rows I-IV. Chart and Raw families are rejected with
/// InvalidParameter.
ScatteringMatrix closed_form_smatrix(const ExtensionFamily& family, double k);

ChannelProbabilities reflection_transmission(const ScatteringMatrix& s);

/// ||S^dagger S - I||_max
double unitarity_residual(const ScatteringMatrix& s);

/// max over the grid of ||conj(S(k)) - S(-k)||_max, with S(-k) from the
/// matching system, not from a closed form.
double time_reversal_check(const JunctionMatrix& m, std::span<const double> k_grid);

/// Deviations at or below this count as time-reversal symmetric.
inline constexpr double kTimeReversalTol = 1e-12;

}  // namespace pointlike
