#pragma once

// Finite-width magnetic strip. Inside [0, w] the transverse profile obeys
//
//   chi'' = (4 alpha^2 x^2 - epsilon) chi
//
// and the y-dependent gauge phase contributes e^{2 pi i alpha}. As w -> 0 the
// composed junction tends to e^{2 pi i alpha} I.

#include "pointlike/core.hpp"

#include <optional>
#include <span>
#include <vector>

namespace pointlike {

struct StripProblem {
    double alpha = 0.0;    ///< flux in units of the flux quantum
    double epsilon = 1.0;  ///< dimensionless energy, > 0
    double width = 0.0;    ///< dimensionless strip width, > 0
};

/// Real transfer matrix mapping (chi, chi') at x = 0 to x = width.
struct TransferMatrix {
    double t11 = 1.0, t12 = 0.0, t21 = 0.0, t22 = 1.0;

    double det() const { return t11 * t22 - t12 * t21; }
    Matrix2 to_complex() const { return {t11, t12, t21, t22}; }
};

inline constexpr int kMinStripSteps = 100;
/// Largest admissible h * sqrt(max |4 alpha^2 x^2 - epsilon|) per step.
inline constexpr double kMaxPhasePerStep = 0.1;

/// Fixed-step classical RK4 over both fundamental solutions. Throws
/// ResolutionError if steps < 100 or the step guard fails, InvalidParameter
/// for non-positive width or epsilon.
TransferMatrix strip_transfer(const StripProblem& p, int steps);

/// Exact transfer matrix of chi'' = -epsilon chi over the given width.
TransferMatrix free_propagation(double epsilon, double width);

/// e^{2 pi i alpha} * strip_transfer(p).
JunctionMatrix regularized_junction(const StripProblem& p, int steps);

struct ConvergenceRow {
    double width = 0.0;
    /// ||J(w) - e^{2 pi i alpha} I||_max
    double deviation = 0.0;
    /// Row 1 of J(w) - e^{2 pi i alpha} I: the jump in psi.
    double value_deviation = 0.0;
    /// Row 2: the jump in psi'.
    double derivative_deviation = 0.0;
    /// log(d_i/d_{i-1}) / log(w_i/w_{i-1}); empty for the first row.
    std::optional<double> empirical_order;
};

/// widths must be positive and strictly descending.
std::vector<ConvergenceRow> convergence_study(double alpha, double epsilon, std::span<const double> widths, int steps);

}  // namespace pointlike
