#include "pointlike/scattering.hpp"

#include "pointlike/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pointlike {
namespace {

struct Vec2 {
    Complex a, b;
};

Complex cross(const Vec2& u, const Vec2& v) { return u.a * v.b - u.b * v.a; }

// Solves [u v] (p, q)^T = rhs by Cramer's rule.
std::pair<Complex, Complex> solve2(const Vec2& u, const Vec2& v, const Vec2& rhs, double scale, double k)
{
    const Complex det = cross(u, v);
    if (!(std::abs(det) > 1e-300 * scale) || !std::isfinite(std::abs(det))) {
        throw SingularMatching("matching system is singular at k = " + std::to_string(k));
    }
    return {cross(rhs, v) / det, cross(u, rhs) / det};
}

void require_positive_k(double k)
{
    if (!(k > 0.0) || !std::isfinite(k)) throw InvalidParameter("wavenumber k must be positive and finite");
}

}  // namespace

std::vector<double> default_k_grid() { return {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}; }

Matrix2 solve_matching(const Matrix2& m, double k)
{
    if (!(k != 0.0) || !std::isfinite(k)) throw InvalidParameter("matching requires finite k != 0");
    const Complex ik{0.0, k};
    const double scale = std::max(1.0, m.max_abs()) * std::max(1.0, std::abs(k));

    auto apply = [&](Complex psi, Complex dpsi) { return Vec2{m.m11 * psi + m.m12 * dpsi, m.m21 * psi + m.m22 * dpsi}; };

    // Left incidence: M (1 + A, ik(1 - A)) = B (1, ik)
    //   A M(1, -ik) - B (1, ik) = -M(1, ik)
    const Vec2 m_out = apply(1.0, -ik);
    const Vec2 m_in = apply(1.0, ik);
    const auto [a_plus, b_plus] = solve2(m_out, Vec2{-1.0, -ik}, Vec2{-m_in.a, -m_in.b}, scale, k);

    // Right incidence: M (B, -ikB) = (1 + A, -ik(1 - A))
    //   B M(1, -ik) - A (1, ik) = (1, -ik)
    const auto [b_minus, a_minus] = solve2(m_out, Vec2{-1.0, -ik}, Vec2{1.0, -ik}, scale, k);

    return {a_plus, b_plus, b_minus, a_minus};
}

ScatteringMatrix smatrix(const JunctionMatrix& m, double k)
{
    require_positive_k(k);
    const Matrix2 s = solve_matching(m.matrix(), k);
    return {s.m11, s.m12, s.m21, s.m22, k};
}

ScatteringMatrix closed_form_smatrix(const ExtensionFamily& family, double k)
{
    require_positive_k(k);
    const Complex i{0.0, 1.0};

    if (const auto* d = std::get_if<DeltaPotential>(&family)) {
        const Complex den = 2.0 * k + i * d->x1;
        const Complex r = -i * d->x1 / den;
        const Complex t = 2.0 * k / den;
        return {r, t, t, r, k};
    }
    if (const auto* d = std::get_if<DeltaPrime>(&family)) {
        const Complex den = 2.0 + i * k * d->x4;
        const Complex r = i * k * d->x4 / den;
        const Complex t = 2.0 / den;
        return {r, t, t, r, k};
    }
    if (const auto* f = std::get_if<MagneticFlux>(&family)) {
        const Complex phase = unit_phase(f->alpha);
        return {0.0, phase, std::conj(phase), 0.0, k};
    }
    if (const auto* d = std::get_if<DeltaOne>(&family)) {
        if (d->x2 == 2.0 || d->x2 == -2.0) throw InvalidParameter("delta-one requires X2 != +-2");
        // tan(theta/2) = (2 + X2)/(2 - X2), theta in (0, 2 pi)
        const double theta = 2.0 * std::atan2(2.0 + d->x2, 2.0 - d->x2);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        return {c, s, s, -c, k};
    }
    throw InvalidParameter("closed-form S-matrix exists only for the canonical families");
}

ChannelProbabilities reflection_transmission(const ScatteringMatrix& s)
{
    return {std::norm(s.a_plus), std::norm(s.b_plus)};
}

double unitarity_residual(const ScatteringMatrix& s)
{
    const Matrix2 m = s.matrix();
    return distance(m.adjoint() * m, Matrix2::identity());
}

double time_reversal_check(const JunctionMatrix& m, std::span<const double> k_grid)
{
    double worst = 0.0;
    for (double k : k_grid) {
        require_positive_k(k);
        const Matrix2 forward = solve_matching(m.matrix(), k);
        const Matrix2 backward = solve_matching(m.matrix(), -k);
        worst = std::max(worst, distance(forward.conj(), backward));
    }
    return worst;
}

}  // namespace pointlike
