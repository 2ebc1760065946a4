#include "pointlike/massjump.hpp"

#include "pointlike/errors.hpp"

#include <cmath>
#include <string>

namespace pointlike {
namespace {

// sqrt(mu^2 + mu + 1) without overflow for large mu.
double root_quadratic(double mu)
{
    if (mu > 1.0) return mu * std::sqrt(1.0 + 1.0 / mu + 1.0 / (mu * mu));
    return std::sqrt(mu * mu + mu + 1.0);
}

Matrix2 rescaled(double mu)
{
    const MassRatio ratio(mu);
    return rescale_junction(massjump_junction(mu), ratio.scale_factor());
}

}  // namespace

MassRatio::MassRatio(double mu) : mu_(mu)
{
    if (!std::isfinite(mu) || !(mu > 0.0)) throw InvalidMu("mass ratio mu must be positive and finite, got " + std::to_string(mu));
    if (mu == 1.0) {
        throw InvalidMu(
            "mu = 1 (no mass jump): b is then a free parameter of the extension (b = X2/2); use the delta-one family");
    }
}

double b_of_mu(double mu)
{
    const MassRatio ratio(mu);
    return 1.0 / root_quadratic(ratio.value());
}

Matrix2 massjump_junction(double mu)
{
    const double b = b_of_mu(mu);
    return Matrix2::diagonal((1.0 + b) / (1.0 - mu * b), (1.0 - b) / (1.0 + mu * b));
}

Matrix2 rescale_junction(const Matrix2& m, double lambda)
{
    if (!std::isfinite(lambda) || !(lambda > 0.0)) throw InvalidParameter("scale factor lambda must be positive");
    return Matrix2::diagonal(std::sqrt(lambda), lambda * std::sqrt(lambda)) * m;
}

double x2_of_mu(double mu)
{
    const MassRatio ratio(mu);
    const double s = root_quadratic(mu);
    const double q = std::pow(mu, 0.25);
    // mu^{5/4} - mu^{1/4} s = -q (s - mu), and s - mu = (mu + 1)/(s + mu)
    // avoids the cancellation for large mu.
    const double gap = q * ((mu + 1.0) / (s + mu));
    const double num = 1.0 + s - gap;
    const double den = 1.0 + s + gap;
    return 2.0 * num / den;
}

double x2_via_rescaling(double mu)
{
    const double g = rescaled(mu).m11.real();
    return 2.0 * (g - 1.0) / (g + 1.0);
}

double x2_via_rescaling_lower(double mu)
{
    const double h = rescaled(mu).m22.real();
    return 2.0 * (1.0 - h) / (1.0 + h);
}

}  // namespace pointlike
