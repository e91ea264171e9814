#include <doctest.h>

#include <cmath>
#include <numbers>

#include "maxlp/constructions.hpp"
#include "maxlp/errors.hpp"
#include "maxlp/spectral.hpp"

using namespace maxlp;

TEST_SUITE("constructions") {

TEST_CASE("lacunary values are exactly odd and vanish at dyadic phases") {
    for (int n : {1, 3, 7}) {
        CHECK(lacunary_value(0.0, n) == 0.0);
        CHECK(lacunary_value(0.5, n) == 0.0);
        CHECK(lacunary_value(0.25, n) == lacunary_value(1.25, n)); // exact periodicity
        for (double t : {0.1, 0.3141, 0.497, 3.0 / 1024.0})
            CHECK(lacunary_value(-t, n) == -lacunary_value(t, n));
    }
}

TEST_CASE("unit-interval L1 gauge against a frozen quadrature oracle") {
    // values from an independent zero-bracketing Simpson integration
    CHECK(lacunary_l1_unit_interval(1) ==
          doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-9));
    CHECK(lacunary_l1_unit_interval(2) == doctest::Approx(0.795774744310).epsilon(2e-6));
    CHECK(lacunary_l1_unit_interval(3) == doctest::Approx(1.092522024406).epsilon(2e-6));
    CHECK(lacunary_l1_unit_interval(4) == doctest::Approx(1.183990867692).epsilon(2e-6));
    // sqrt growth band, all desk-scale N
    for (int n = 2; n <= 13; ++n) {
        double v = lacunary_l1_unit_interval(n) / std::sqrt((double)n);
        CHECK(v >= 0.45);
        CHECK(v <= 0.80);
    }
}

TEST_CASE("grid samples match pointwise evaluation and Parseval") {
    TorusGrid g = make_grid(16, 16384);
    for (int n : {1, 4, 7}) {
        GridFunction s = lacunary_sum(g, n);
        for (std::size_t i = 0; i < g.size; i += 389)
            CHECK(s.samples[i].real() == lacunary_value(g.abscissa(i), n));
        // distinct on-grid frequencies are orthogonal: ||S_N||_{L2}^2 = period * N / 2
        double l2 = norm(s, Norm::l2);
        CHECK(l2 * l2 == doctest::Approx(16.0 * n / 2.0).epsilon(1e-10));
    }
}

TEST_CASE("plateau bump: support, plateau, midpoint") {
    TorusGrid g = make_grid(16, 2048);
    GridFunction psi = bump_psi(g);
    for (std::size_t i = 0; i < g.size; ++i) {
        double x = g.abscissa(i);
        double v = psi.samples[i].real();
        if (std::abs(x) <= 2.0) CHECK(v == 1.0);
        if (std::abs(x) >= 4.0) CHECK(v == 0.0);
    }
    CHECK(psi.samples[g.center() + 3 * g.size / 16].real() ==
          doctest::Approx(0.5).epsilon(1e-14)); // x = 3
    CHECK_THROWS_AS(bump_psi(make_grid(8, 256)), admissibility_error);
}

TEST_CASE("envelope product and admissibility caps") {
    TorusGrid g = make_grid(16, 16384);
    CHECK(max_admissible_terms(g) == 7);
    CHECK(max_admissible_terms(make_grid(16, 1 << 20)) == 13);
    GridFunction f = make_FN(g, 5);
    GridFunction psi = bump_psi(g);
    GridFunction s = lacunary_sum(g, 5);
    for (std::size_t i = 0; i < g.size; i += 257)
        CHECK(f.samples[i].real() ==
              doctest::Approx(psi.samples[i].real() * s.samples[i].real()).epsilon(1e-15));
    CHECK_THROWS_AS(make_FN(g, 8), admissibility_error);
    CHECK_THROWS_AS(make_FN(g, 0), admissibility_error);
}

TEST_CASE("dilation exponent ladder") {
    CHECK(dilation_exponent(1) == 0);
    CHECK(dilation_exponent(2) == 1);
    CHECK(dilation_exponent(3) == 1);
    CHECK(dilation_exponent(4) == 2);
    CHECK(dilation_exponent(7) == 2);
    CHECK(dilation_exponent(8) == 3);
    CHECK(dilation_exponent(13) == 3);
}

TEST_CASE("dilated family lives on the shrunken grid with exact values") {
    TorusGrid g = make_grid(16, 16384);
    const int n = 5; // m = 2
    GridFunction f = make_fN(g, n);
    CHECK(f.grid.period == 4.0);
    CHECK(f.grid.size == 4096);
    CHECK(f.grid.spacing() == g.spacing());
    for (std::size_t i = 0; i < f.grid.size; i += 97) {
        double u = 4.0 * f.grid.abscissa(i); // argument of the undilated envelope
        double want = phi(std::abs(u) / 2.0) * lacunary_value(u, n);
        CHECK(f.samples[i].real() == doctest::Approx(want).epsilon(1e-14));
    }
}

TEST_CASE("modulated bump keeps the envelope as its modulus") {
    TorusGrid g = make_grid(16, 1024);
    const double lambda = 5.0;
    GridFunction gl = modulated_bump(g, lambda);
    CHECK_FALSE(gl.is_real);
    GridFunction psi = bump_psi(g);
    for (std::size_t i = 0; i < g.size; i += 31) {
        CHECK(std::abs(gl.samples[i]) ==
              doctest::Approx(psi.samples[i].real()).epsilon(1e-14));
        double x = g.abscissa(i);
        cplx want = psi.samples[i].real() *
                    std::exp(cplx(0.0, 2.0 * std::numbers::pi * lambda * x));
        CHECK(std::abs(gl.samples[i] - want) <= 1e-13);
    }
    CHECK_THROWS_AS(modulated_bump(g, 17.0), admissibility_error); // cap size/(4 period) = 16
    CHECK_THROWS_AS(modulated_bump(g, 0.5), admissibility_error);
}

}
