#pragma once

// Boundary bilinears of a two-component (Pauli) wave function. The junction
// acts identically on both spin components, and the constant vector
// potential term drops out by gauge invariance.

#include "pointlike/core.hpp"
#include "pointlike/extensions.hpp"

#include <cstdint>
#include <span>
#include <string>

namespace pointlike {

struct SpinorBoundaryData {
    BoundaryData up;
    BoundaryData down;
};

/// True iff conj(psi) psi' is preserved for every boundary vector:
///   conj(m11) m21 = conj(m12) m22 = conj(m12) m21 = 0,  conj(m11) m22 = 1.
bool preserves_pairing(const JunctionMatrix& m, double tol = kSymplecticTol);

/// The same property tested directly on `samples` random spinor boundary
/// vectors (fixed seed). Independent of the algebraic criterion.
bool preserves_pairing_sampled(const JunctionMatrix& m, int samples = 100, std::uint64_t seed = 0x5eed);

struct SpinTermJumps {
    /// jump of d/dx (|psi_up|^2 - |psi_down|^2)
    double jump_y = 0.0;
    /// jump of d/dx (conj(psi_up) psi_down - conj(psi_down) psi_up)
    Complex jump_z{};
};

SpinTermJumps spin_term_jumps(const JunctionMatrix& m, const SpinorBoundaryData& left);

struct ClassificationReport {
    std::string id;
    bool time_reversal_ok = false;
    bool sesquilinear_ok = false;
    double time_reversal_deviation = 0.0;
    ExtensionClass label = ExtensionClass::Free;
};

/// Labels a junction by canonical form, then checks that the time-reversal
/// and pairing tests agree with the label. Throws UnclassifiedMatrix when M
/// lies outside the canonical strata or the tests disagree with its form.
ClassificationReport classify(const JunctionMatrix& m, std::span<const double> k_grid, std::string id = {});

}  // namespace pointlike
