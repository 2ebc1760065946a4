#include "pointlike/errors.hpp"
#include "pointlike/extensions.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <limits>

using namespace pointlike;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Matrix2 lowered(const ExtensionFamily& f) { return junction_of(f).matrix(); }

// Central difference of the lowered family around the group identity.
Matrix2 finite_difference_generator(CanonicalFamily f, double h)
{
    const Matrix2 plus = lowered(make_family(f, h));
    const Matrix2 minus = lowered(make_family(f, -h));
    return Complex{1.0 / (2.0 * h)} * (plus - minus);
}

double frobenius(const Matrix2& m)
{
    return std::sqrt(std::norm(m.m11) + std::norm(m.m12) + std::norm(m.m21) + std::norm(m.m22));
}

}  // namespace

TEST_CASE("canonical matrices")
{
    CHECK(lowered(DeltaPotential{0.0}) == Matrix2::identity());
    CHECK(lowered(DeltaPotential{2.5}) == Matrix2{1.0, 0.0, 2.5, 1.0});
    CHECK(lowered(DeltaPrime{1.5}) == Matrix2{1.0, -1.5, 0.0, 1.0});

    const Matrix2 d1 = lowered(DeltaOne{1.0});
    CHECK(d1.m11 == Complex{3.0});
    CHECK(std::abs(d1.m22 - 1.0 / 3.0) <= 1e-16);
    CHECK(d1.m12 == Complex{});
    CHECK(d1.m21 == Complex{});

    const Matrix2 flux = lowered(MagneticFlux{0.3, 0});
    CHECK(distance(flux, Matrix2::diagonal(std::polar(1.0, 0.6 * M_PI), std::polar(1.0, 0.6 * M_PI))) <= 1e-15);
}

TEST_CASE("integer flux is invisible to the junction")
{
    for (double n : {0.0, 1.0, 2.0, -3.0, 17.0}) {
        const MagneticFlux f = MagneticFlux::from_flux(n);
        CHECK(f.alpha == 0.0);
        CHECK(f.winding == static_cast<long>(n));
        CHECK(lowered(f) == Matrix2::identity());
    }
}

TEST_CASE("from_flux splits integer and fractional parts")
{
    const MagneticFlux f = MagneticFlux::from_flux(2.25);
    CHECK(f.alpha == 0.25);
    CHECK(f.winding == 2);
    CHECK(f.flux() == 2.25);

    const MagneticFlux g = MagneticFlux::from_flux(-0.25);
    CHECK(g.alpha == 0.75);
    CHECK(g.winding == -1);
    CHECK(distance(lowered(f), lowered(MagneticFlux{0.25, 0})) == 0.0);
}

TEST_CASE("invalid parameters")
{
    CHECK_THROWS_AS(junction_of(DeltaOne{2.0}), InvalidParameter);
    CHECK_THROWS_AS(junction_of(DeltaOne{-2.0}), InvalidParameter);
    CHECK_THROWS_AS(junction_of(Chart{1.0, 1.0, 1.0}), InvalidParameter);
    CHECK_THROWS_AS(junction_of(Chart{0.0, 1.0, 0.0}), InvalidParameter);
    CHECK_THROWS_AS(junction_of(DeltaPotential{std::numeric_limits<double>::quiet_NaN()}), InvalidParameter);
    CHECK_THROWS_AS(junction_of(DeltaPrime{kInf}), InvalidParameter);
    CHECK_THROWS_AS(junction_of(Chart{kInf, 0.0, 1.0}), InvalidParameter);
}

TEST_CASE("chart reproduces the canonical rows at their stated coordinates")
{
    for (double p : {-3.0, -0.5, 0.7, 4.0}) {
        CHECK(distance(lowered(Chart{p, kInf, 1.0}), lowered(DeltaPotential{p})) <= 1e-15);
        CHECK(distance(lowered(Chart{0.0, -1.0 / p, 1.0}), lowered(DeltaPrime{p})) <= 1e-15);
        CHECK(distance(lowered(Chart{0.0, kInf, DeltaOne{p}.scale()}), lowered(DeltaOne{p})) <= 1e-14);
    }
    for (double a : {0.0, 0.1, 0.5, 0.77}) {
        CHECK(distance(lowered(Chart{0.0, kInf, unit_phase(a)}), lowered(MagneticFlux{a, 0})) <= 1e-15);
    }
    // y -> -infinity has the same limit
    CHECK(distance(lowered(Chart{2.0, -kInf, 1.0}), lowered(DeltaPotential{2.0})) == 0.0);
}

TEST_CASE("property: chart outputs are symplectic-unitary")
{
    testing::Gen gen(99);
    for (int n = 0; n < 1000; ++n) {
        double x = gen.uniform(-10.0, 10.0);
        double y = gen.uniform(-10.0, 10.0);
        if (std::abs(x - y) < 1e-3) y += 0.5;
        const Complex z = std::polar(gen.log_uniform(0.1, 10.0), gen.uniform(0.0, 2.0 * M_PI));
        const Matrix2 m = lowered(Chart{x, y, z});
        CHECK(symplectic_defect(m).max_abs() <= scaled_tolerance(m));
    }
}

TEST_CASE("property: every constructor output validates")
{
    testing::Gen gen(7);
    for (int n = 0; n < 1000; ++n) {
        const double x = gen.uniform(-50.0, 50.0);
        CHECK_NOTHROW(junction_of(DeltaPotential{x}));
        CHECK_NOTHROW(junction_of(DeltaPrime{x}));
        CHECK_NOTHROW(junction_of(MagneticFlux{gen.uniform(0.0, 1.0), 0}));
        double x2 = gen.uniform(-50.0, 50.0);
        if (std::abs(std::abs(x2) - 2.0) < 1e-6) x2 = 0.0;
        CHECK_NOTHROW(junction_of(DeltaOne{x2}));
    }
}

TEST_CASE("flux_of_x3")
{
    CHECK(flux_of_x3(0.0) == 0.0);
    CHECK(flux_of_x3(2.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(flux_of_x3(-2.0) == doctest::Approx(0.75).epsilon(1e-15));

    testing::Gen gen(3);
    for (int n = 0; n < 500; ++n) {
        const double x3 = gen.uniform(-100.0, 100.0);
        const double a = flux_of_x3(x3);
        CHECK(a >= 0.0);
        CHECK(a < 1.0);

        // time reversal X3 -> -X3 maps alpha -> 1 - alpha
        const double reversed = flux_of_x3(-x3);
        CHECK(std::abs(std::fmod(a + reversed, 1.0)) <= 1e-12);

        const Complex moebius = Complex{2.0, x3} / Complex{2.0, -x3};
        const Matrix2 m = lowered(MagneticFlux{a, 0});
        CHECK(std::abs(m.m11 - moebius) <= 1e-12);
        CHECK(std::abs(m.m22 - moebius) <= 1e-12);
    }
}

TEST_CASE("generators at the identity")
{
    CHECK(generator(CanonicalFamily::DeltaPotential) == Matrix2{0.0, 0.0, 1.0, 0.0});
    CHECK(generator(CanonicalFamily::DeltaPrime) == Matrix2{0.0, -1.0, 0.0, 0.0});
    CHECK(generator(CanonicalFamily::MagneticFlux) ==
          Matrix2::diagonal(Complex{0.0, 2.0 * M_PI}, Complex{0.0, 2.0 * M_PI}));
    CHECK(generator(CanonicalFamily::DeltaOne) == Matrix2::diagonal(1.0, -1.0));
}

TEST_CASE("generators match central finite differences")
{
    for (CanonicalFamily f : kCanonicalFamilies) {
        CAPTURE(to_string(f));
        const Matrix2 g = generator(f);
        for (double h : {1e-4, 1e-5}) {
            const Matrix2 fd = finite_difference_generator(f, h);
            CHECK(frobenius(fd - g) / frobenius(g) <= 1e-6);
        }
    }
}

TEST_CASE("generator Gram matrix is diagonal")
{
    const auto g = generator_gram();
    CHECK(g[0][0] == doctest::Approx(1.0));
    CHECK(g[1][1] == doctest::Approx(1.0));
    CHECK(g[2][2] == doctest::Approx(8.0 * M_PI * M_PI));
    CHECK(g[3][3] == doctest::Approx(2.0));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j) CHECK(std::abs(g[i][j]) <= 1e-12);
        }
    }

    // the complex traces are real: Tr(g3 g4^dagger) = 2 pi i Tr diag(1,-1) = 0
    for (CanonicalFamily a : kCanonicalFamilies) {
        for (CanonicalFamily b : kCanonicalFamilies) {
            CHECK(std::abs((generator(a) * generator(b).adjoint()).trace().imag()) <= 1e-12);
        }
    }
}

TEST_CASE("composition laws")
{
    SUBCASE("delta is additive")
    {
        const JunctionMatrix m = compose(junction_of(DeltaPotential{1.5}), junction_of(DeltaPotential{-0.5}));
        CHECK(distance(m.matrix(), lowered(DeltaPotential{1.0})) <= 1e-12);
    }
    SUBCASE("delta-prime is additive")
    {
        const JunctionMatrix m = compose(junction_of(DeltaPrime{2.0}), junction_of(DeltaPrime{0.75}));
        CHECK(distance(m.matrix(), lowered(DeltaPrime{2.75})) <= 1e-12);
    }
    SUBCASE("flux adds mod 1")
    {
        const JunctionMatrix m = compose(junction_of(MagneticFlux{0.3, 0}), junction_of(MagneticFlux{0.9, 0}));
        CHECK(distance(m.matrix(), lowered(MagneticFlux::from_flux(1.2))) <= 1e-12);
        CHECK(distance(m.matrix(), lowered(MagneticFlux{0.2, 0})) <= 1e-12);
    }
    SUBCASE("delta-one is not additive")
    {
        const JunctionMatrix m = compose(junction_of(DeltaOne{0.5}), junction_of(DeltaOne{0.5}));
        CHECK(m.matrix().m11.real() == doctest::Approx(25.0 / 9.0));
        CHECK(lowered(DeltaOne{1.0}).m11.real() == doctest::Approx(3.0));
        CHECK(distance(m.matrix(), lowered(DeltaOne{1.0})) >= 0.1);
    }
}

TEST_CASE("property: group homomorphisms over random parameters")
{
    testing::Gen gen(42);
    for (int n = 0; n < 300; ++n) {
        const double a = gen.uniform(-20.0, 20.0);
        const double b = gen.uniform(-20.0, 20.0);
        CHECK(distance(compose(junction_of(DeltaPotential{a}), junction_of(DeltaPotential{b})).matrix(),
                       lowered(DeltaPotential{a + b})) <= 1e-12);
        CHECK(distance(compose(junction_of(DeltaPrime{a}), junction_of(DeltaPrime{b})).matrix(),
                       lowered(DeltaPrime{a + b})) <= 1e-12);
        const double p = gen.uniform(0.0, 1.0);
        const double q = gen.uniform(0.0, 1.0);
        CHECK(distance(compose(junction_of(MagneticFlux{p, 0}), junction_of(MagneticFlux{q, 0})).matrix(),
                       lowered(MagneticFlux::from_flux(p + q))) <= 1e-12);
    }
}

TEST_CASE("compose of a random pair stays in the group")
{
    testing::Gen gen(8);
    for (int n = 0; n < 200; ++n) {
        const JunctionMatrix a = validate_symplectic(gen.symplectic_unitary(), 1e-11);
        const JunctionMatrix b = validate_symplectic(gen.symplectic_unitary(), 1e-11);
        CHECK_NOTHROW(compose(a, b));
    }
}
