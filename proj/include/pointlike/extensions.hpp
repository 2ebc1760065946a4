#pragma once

// The four one-parameter strata of point interactions and the general
// (x, y, z) chart of the symplectic-unitary group.
//
//   I   delta        [[1, 0], [X1, 1]]
//   II  delta-prime  [[1, -X4], [0, 1]]
//   III flux         e^{2 pi i alpha} I
//   IV  delta-one    diag(c, 1/c),  c = (2 + X2) / (2 - X2)
//   chart            z [[1, 1/((y-x)|z|^2)], [x, y/((y-x)|z|^2)]]

#include "pointlike/core.hpp"

#include <array>
#include <string_view>
#include <variant>

namespace pointlike {

struct DeltaPotential {
    double x1 = 0.0;
};

struct DeltaPrime {
    double x4 = 0.0;
};

/// Flux in units of the flux quantum. `alpha` lives in [0, 1); the integer
/// part is kept in `winding`. It does not change the junction matrix.
struct MagneticFlux {
    double alpha = 0.0;
    long winding = 0;

    static MagneticFlux from_flux(double flux);
    double flux() const { return static_cast<double>(winding) + alpha; }
};

/// X2 = +-2 is excluded: the half-lines decouple there.
struct DeltaOne {
    double x2 = 0.0;

    double scale() const { return (2.0 + x2) / (2.0 - x2); }
};

/// y = +-infinity selects the limit form [[z, 0], [z x, z/|z|^2]], which is how
/// rows I, III and IV are reached from the chart.
struct Chart {
    double x = 0.0;
    double y = 0.0;
    Complex z{1.0, 0.0};
};

struct Raw {
    JunctionMatrix m;
};

using ExtensionFamily = std::variant<DeltaPotential, DeltaPrime, MagneticFlux, DeltaOne, Chart, Raw>;

enum class CanonicalFamily { DeltaPotential, DeltaPrime, MagneticFlux, DeltaOne };

inline constexpr std::array<CanonicalFamily, 4> kCanonicalFamilies = {
    CanonicalFamily::DeltaPotential, CanonicalFamily::DeltaPrime, CanonicalFamily::MagneticFlux,
    CanonicalFamily::DeltaOne};

/// Physical label of a junction. `Free` is the identity, which belongs to
/// every stratum.
enum class ExtensionClass { Free, PurePotential, MassJump, Magnetic, MagneticMassJump };

std::string_view to_string(ExtensionClass c);
std::string_view to_string(CanonicalFamily f);

/// Canonical family at the given parameter (alpha for the flux).
ExtensionFamily make_family(CanonicalFamily f, double param);

/// Throws InvalidParameter when the family invariants fail.
JunctionMatrix junction_of(const ExtensionFamily& family);

/// alpha in [0, 1) with e^{2 pi i alpha} = (2 + i X3) / (2 - i X3).
double flux_of_x3(double x3);

/// dM/dparameter at the group identity.
Matrix2 generator(CanonicalFamily f);

/// G_ij = Tr(g_i g_j^dagger) over the canonical generators, ordered I..IV.
/// Every product here has a real trace.
std::array<std::array<double, 4>, 4> generator_gram();

JunctionMatrix compose(const JunctionMatrix& first, const JunctionMatrix& second);

}  // namespace pointlike
