#include "pointlike/regularization.hpp"

#include "pointlike/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace pointlike {
namespace {

void check_problem(const StripProblem& p)
{
    if (!std::isfinite(p.alpha)) throw InvalidParameter("alpha must be finite");
    if (!std::isfinite(p.epsilon) || !(p.epsilon > 0.0)) throw InvalidParameter("epsilon must be positive");
    if (!std::isfinite(p.width) || !(p.width > 0.0)) throw InvalidParameter("strip width must be positive");
}

// Columns are the two fundamental solutions; each column is (chi, chi').
using State = std::array<double, 4>;  // t11, t12, t21, t22

State derivative(const State& y, double x, double four_alpha_sq, double epsilon)
{
    const double v = four_alpha_sq * x * x - epsilon;
    return {y[2], y[3], v * y[0], v * y[1]};
}

State axpy(const State& y, double h, const State& k)
{
    return {y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2], y[3] + h * k[3]};
}

}  // namespace

TransferMatrix strip_transfer(const StripProblem& p, int steps)
{
    check_problem(p);
    if (steps < kMinStripSteps) {
        throw ResolutionError("strip integration needs at least " + std::to_string(kMinStripSteps) + " steps");
    }

    const double h = p.width / steps;
    const double four_alpha_sq = 4.0 * p.alpha * p.alpha;
    const double peak = std::max(p.epsilon, std::abs(four_alpha_sq * p.width * p.width - p.epsilon));
    if (h * std::sqrt(peak) > kMaxPhasePerStep) {
        throw ResolutionError("step too coarse: h * sqrt(max|V|) = " + std::to_string(h * std::sqrt(peak)) +
                              " exceeds " + std::to_string(kMaxPhasePerStep));
    }

    State y{1.0, 0.0, 0.0, 1.0};
    for (int n = 0; n < steps; ++n) {
        const double x = n * h;
        const State k1 = derivative(y, x, four_alpha_sq, p.epsilon);
        const State k2 = derivative(axpy(y, 0.5 * h, k1), x + 0.5 * h, four_alpha_sq, p.epsilon);
        const State k3 = derivative(axpy(y, 0.5 * h, k2), x + 0.5 * h, four_alpha_sq, p.epsilon);
        const State k4 = derivative(axpy(y, h, k3), x + h, four_alpha_sq, p.epsilon);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return {y[0], y[1], y[2], y[3]};
}

TransferMatrix free_propagation(double epsilon, double width)
{
    if (!(epsilon > 0.0)) throw InvalidParameter("epsilon must be positive");
    const double kappa = std::sqrt(epsilon);
    const double c = std::cos(kappa * width);
    const double s = std::sin(kappa * width);
    return {c, s / kappa, -kappa * s, c};
}

JunctionMatrix regularized_junction(const StripProblem& p, int steps)
{
    const TransferMatrix t = strip_transfer(p, steps);
    const Matrix2 j = unit_phase(p.alpha) * t.to_complex();
    // det T = 1 holds only to integration accuracy
    return validate_symplectic(j, scaled_tolerance(j, 1e-10));
}

std::vector<ConvergenceRow> convergence_study(double alpha, double epsilon, std::span<const double> widths, int steps)
{
    for (std::size_t i = 0; i < widths.size(); ++i) {
        if (!(widths[i] > 0.0)) throw InvalidParameter("widths must be positive");
        if (i > 0 && !(widths[i] < widths[i - 1])) throw InvalidParameter("widths must be strictly descending");
    }

    const Complex phase = unit_phase(alpha);
    const Matrix2 limit = Matrix2::diagonal(phase, phase);

    std::vector<ConvergenceRow> rows;
    rows.reserve(widths.size());
    for (double w : widths) {
        const Matrix2 d = regularized_junction({alpha, epsilon, w}, steps).matrix() - limit;
        ConvergenceRow row;
        row.width = w;
        row.deviation = d.max_abs();
        row.value_deviation = std::max(std::abs(d.m11), std::abs(d.m12));
        row.derivative_deviation = std::max(std::abs(d.m21), std::abs(d.m22));
        if (!rows.empty()) {
            const ConvergenceRow& prev = rows.back();
            row.empirical_order = std::log(row.deviation / prev.deviation) / std::log(w / prev.width);
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace pointlike
