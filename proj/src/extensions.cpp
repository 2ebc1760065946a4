#include "pointlike/extensions.hpp"

#include "pointlike/errors.hpp"

#include <cmath>
#include <string>

namespace pointlike {
namespace {

void require_finite(double v, const char* name)
{
    if (!std::isfinite(v)) throw InvalidParameter(std::string(name) + " must be finite");
}

JunctionMatrix lower(const Matrix2& m) { return validate_symplectic(m, scaled_tolerance(m)); }

Matrix2 chart_matrix(const Chart& c)
{
    require_finite(c.x, "chart x");
    if (!std::isfinite(c.z.real()) || !std::isfinite(c.z.imag())) throw InvalidParameter("chart z must be finite");
    if (c.z == Complex{}) throw InvalidParameter("chart z must be nonzero");
    if (std::isnan(c.y)) throw InvalidParameter("chart y must not be NaN");

    const double z2 = std::norm(c.z);
    if (std::isinf(c.y)) return {c.z, 0.0, c.z * c.x, c.z / z2};
    if (c.x == c.y) throw InvalidParameter("chart requires x != y");

    const double scale = (c.y - c.x) * z2;
    return {c.z, c.z / scale, c.z * c.x, c.z * (c.y / scale)};
}

}  // namespace

MagneticFlux MagneticFlux::from_flux(double flux)
{
    require_finite(flux, "flux");
    const double whole = std::floor(flux);
    double frac = flux - whole;
    if (frac >= 1.0) frac = 0.0;
    return {frac, static_cast<long>(whole)};
}

std::string_view to_string(ExtensionClass c)
{
    switch (c) {
        case ExtensionClass::Free: return "Free";
        case ExtensionClass::PurePotential: return "PurePotential";
        case ExtensionClass::MassJump: return "MassJump";
        case ExtensionClass::Magnetic: return "Magnetic";
        case ExtensionClass::MagneticMassJump: return "MagneticMassJump";
    }
    return "?";
}

std::string_view to_string(CanonicalFamily f)
{
    switch (f) {
        case CanonicalFamily::DeltaPotential: return "delta";
        case CanonicalFamily::DeltaPrime: return "delta-prime";
        case CanonicalFamily::MagneticFlux: return "flux";
        case CanonicalFamily::DeltaOne: return "delta-one";
    }
    return "?";
}

ExtensionFamily make_family(CanonicalFamily f, double param)
{
    switch (f) {
        case CanonicalFamily::DeltaPotential: return DeltaPotential{param};
        case CanonicalFamily::DeltaPrime: return DeltaPrime{param};
        case CanonicalFamily::MagneticFlux: return MagneticFlux::from_flux(param);
        case CanonicalFamily::DeltaOne: return DeltaOne{param};
    }
    throw InvalidParameter("unknown canonical family");
}

JunctionMatrix junction_of(const ExtensionFamily& family)
{
    struct Lowering {
        JunctionMatrix operator()(const DeltaPotential& d) const
        {
            require_finite(d.x1, "X1");
            return lower({1.0, 0.0, d.x1, 1.0});
        }
        JunctionMatrix operator()(const DeltaPrime& d) const
        {
            require_finite(d.x4, "X4");
            return lower({1.0, -d.x4, 0.0, 1.0});
        }
        JunctionMatrix operator()(const MagneticFlux& f) const
        {
            require_finite(f.alpha, "alpha");
            const Complex phase = unit_phase(f.alpha);
            return lower(Matrix2::diagonal(phase, phase));
        }
        JunctionMatrix operator()(const DeltaOne& d) const
        {
            require_finite(d.x2, "X2");
            if (d.x2 == 2.0 || d.x2 == -2.0) throw InvalidParameter("delta-one requires X2 != +-2 (decoupled half-lines)");
            const double c = d.scale();
            return lower(Matrix2::diagonal(c, (2.0 - d.x2) / (2.0 + d.x2)));
        }
        JunctionMatrix operator()(const Chart& c) const { return lower(chart_matrix(c)); }
        JunctionMatrix operator()(const Raw& r) const { return r.m; }
    };
    return std::visit(Lowering{}, family);
}

double flux_of_x3(double x3)
{
    require_finite(x3, "X3");
    // arg((2 + iX)/(2 - iX)) = 2 atan(X/2)
    double alpha = std::atan(0.5 * x3) / M_PI;
    if (alpha < 0.0) alpha += 1.0;
    if (alpha >= 1.0) alpha = 0.0;
    return alpha;
}

Matrix2 generator(CanonicalFamily f)
{
    switch (f) {
        case CanonicalFamily::DeltaPotential: return {0.0, 0.0, 1.0, 0.0};
        case CanonicalFamily::DeltaPrime: return {0.0, -1.0, 0.0, 0.0};
        case CanonicalFamily::MagneticFlux: {
            const Complex g{0.0, 2.0 * M_PI};
            return Matrix2::diagonal(g, g);
        }
        case CanonicalFamily::DeltaOne: return Matrix2::diagonal(1.0, -1.0);
    }
    throw InvalidParameter("unknown canonical family");
}

std::array<std::array<double, 4>, 4> generator_gram()
{
    std::array<std::array<double, 4>, 4> g{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const Matrix2 gi = generator(kCanonicalFamilies[i]);
            const Matrix2 gj = generator(kCanonicalFamilies[j]);
            g[i][j] = (gi * gj.adjoint()).trace().real();
        }
    }
    return g;
}

JunctionMatrix compose(const JunctionMatrix& first, const JunctionMatrix& second)
{
    return lower(first.matrix() * second.matrix());
}

}  // namespace pointlike
