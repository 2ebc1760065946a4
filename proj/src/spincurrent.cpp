#include "pointlike/spincurrent.hpp"

#include "pointlike/errors.hpp"
#include "pointlike/scattering.hpp"

#include <cmath>
#include <random>

namespace pointlike {
namespace {

// conj(a) b', the sesquilinear pairing of two boundary vectors
Complex pairing(const BoundaryData& a, const BoundaryData& b) { return std::conj(a.psi) * b.dpsi; }

// d/dx |psi|^2
double density_slope(const BoundaryData& g) { return 2.0 * pairing(g, g).real(); }

// d/dx (conj(u) d - conj(d) u)
Complex mixed_slope(const BoundaryData& u, const BoundaryData& d)
{
    return std::conj(u.dpsi) * d.psi + std::conj(u.psi) * d.dpsi - std::conj(d.dpsi) * u.psi -
           std::conj(d.psi) * u.dpsi;
}

bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

enum class Form { Identity, Phase, RealDiagonal, LowerUnipotent, UpperUnipotent, Other };

Form canonical_form(const Matrix2& m, double tol)
{
    const bool off_upper = near(m.m12, 0.0, tol);
    const bool off_lower = near(m.m21, 0.0, tol);
    const bool unit_diag = near(m.m11, 1.0, tol) && near(m.m22, 1.0, tol);

    if (off_upper && off_lower) {
        if (unit_diag) return Form::Identity;
        if (near(m.m11, m.m22, tol) && std::abs(std::abs(m.m11) - 1.0) <= tol) return Form::Phase;
        const bool real = std::abs(m.m11.imag()) <= tol && std::abs(m.m22.imag()) <= tol;
        if (real && near(m.m11 * m.m22, 1.0, tol)) return Form::RealDiagonal;
        return Form::Other;
    }
    if (off_upper && unit_diag && std::abs(m.m21.imag()) <= tol) return Form::LowerUnipotent;
    if (off_lower && unit_diag && std::abs(m.m12.imag()) <= tol) return Form::UpperUnipotent;
    return Form::Other;
}

}  // namespace

bool preserves_pairing(const JunctionMatrix& jm, double tol)
{
    const Matrix2& m = jm.matrix();
    const double t = scaled_tolerance(m, tol);
    return near(std::conj(m.m11) * m.m21, 0.0, t) && near(std::conj(m.m12) * m.m22, 0.0, t) &&
           near(std::conj(m.m12) * m.m21, 0.0, t) && near(std::conj(m.m11) * m.m22, 1.0, t);
}

bool preserves_pairing_sampled(const JunctionMatrix& m, int samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    auto draw = [&] {
        return BoundaryData{{unit(rng), unit(rng)}, {unit(rng), unit(rng)}};
    };

    const double base = scaled_tolerance(m.matrix());
    for (int n = 0; n < samples; ++n) {
        const SpinorBoundaryData s{draw(), draw()};
        for (const BoundaryData* g : {&s.up, &s.down}) {
            const BoundaryData out = apply_junction(m, *g);
            const double tol = 4.0 * base * (1.0 + g->norm_sq());
            if (!near(pairing(out, out), pairing(*g, *g), tol)) return false;
        }
        const BoundaryData up = apply_junction(m, s.up);
        const BoundaryData down = apply_junction(m, s.down);
        const double tol = 4.0 * base * (1.0 + s.up.norm_sq() + s.down.norm_sq());
        if (!near(pairing(up, down), pairing(s.up, s.down), tol)) return false;
    }
    return true;
}

SpinTermJumps spin_term_jumps(const JunctionMatrix& m, const SpinorBoundaryData& left)
{
    const BoundaryData up = apply_junction(m, left.up);
    const BoundaryData down = apply_junction(m, left.down);

    SpinTermJumps j;
    j.jump_y = (density_slope(up) - density_slope(down)) - (density_slope(left.up) - density_slope(left.down));
    j.jump_z = mixed_slope(up, down) - mixed_slope(left.up, left.down);
    return j;
}

ClassificationReport classify(const JunctionMatrix& m, std::span<const double> k_grid, std::string id)
{
    ClassificationReport r;
    r.id = std::move(id);
    r.time_reversal_deviation = time_reversal_check(m, k_grid);
    r.time_reversal_ok = r.time_reversal_deviation <= kTimeReversalTol;
    r.sesquilinear_ok = preserves_pairing(m);

    bool expect_tr = true;
    bool expect_pairing = true;
    switch (canonical_form(m.matrix(), scaled_tolerance(m.matrix()))) {
        case Form::Identity:
            r.label = ExtensionClass::Free;
            break;
        case Form::Phase:
            r.label = ExtensionClass::Magnetic;
            // a half flux quantum gives a real S-matrix
            expect_tr = r.time_reversal_ok;
            break;
        case Form::RealDiagonal:
            r.label = ExtensionClass::MagneticMassJump;
            break;
        case Form::LowerUnipotent:
            r.label = ExtensionClass::PurePotential;
            expect_pairing = false;
            break;
        case Form::UpperUnipotent:
            r.label = ExtensionClass::MassJump;
            expect_pairing = false;
            break;
        case Form::Other:
            throw UnclassifiedMatrix("junction matrix lies outside the four canonical strata");
    }
    if (r.time_reversal_ok != expect_tr || r.sesquilinear_ok != expect_pairing) {
        throw UnclassifiedMatrix("time-reversal/pairing tests disagree with the canonical form (label " +
                                 std::string(to_string(r.label)) + ")");
    }
    return r;
}

}  // namespace pointlike
