#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "maxlp/spectral.hpp"

using namespace maxlp;

namespace {
constexpr double tau = 2.0 * std::numbers::pi;

GridFunction exponential(const TorusGrid& g, double freq) {
    return sample_complex(g, [freq](double x) {
        return std::exp(cplx(0.0, tau * freq * x));
    });
}

double sup_diff(const GridFunction& a, const GridFunction& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a.samples[i] - b.samples[i]));
    return m;
}
} // namespace

TEST_SUITE("spectral") {

TEST_CASE("cutoff plateau, support, midpoint") {
    CHECK(phi(0.0) == 1.0);
    CHECK(phi(1.0) == 1.0);
    CHECK(phi(2.0) == 0.0);
    CHECK(phi(5.0) == 0.0);
    CHECK(phi(1.5) == doctest::Approx(0.5).epsilon(1e-15));
    // monotone on the glue
    double prev = 1.0;
    for (double t = 1.0; t <= 2.0; t += 1.0 / 64.0) {
        double v = phi(t);
        CHECK(v <= prev + 1e-15);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        prev = v;
    }
}

TEST_CASE("multiplier plateau values") {
    TorusGrid g = make_grid(16, 1024);
    auto band1 = multiplier_values(g, MultKind::band, 1);
    // |xi| = 2 sits on the band-1 plateau: phi(1) - phi(2) = 1
    // bin q = xi * period
    CHECK((*band1)[32] == doctest::Approx(1.0).epsilon(1e-15));
    auto low0 = multiplier_values(g, MultKind::low, 0);
    CHECK((*low0)[0] == 1.0);
    // widened is identically 1 on the band support
    auto wide1 = multiplier_values(g, MultKind::widened, 1);
    auto q_of = [&](double xi) { return (std::size_t)(xi * g.period); };
    for (double xi = 1.0; xi <= 4.0; xi += 0.25)
        CHECK((*wide1)[q_of(xi)] >= (*band1)[q_of(xi)] - 1e-15);
}

TEST_CASE("band projection of a pure exponential is a multiplier scalar") {
    TorusGrid g = make_grid(16, 1024);
    GridFunction f = exponential(g, 3.0);
    GridFunction p = project(f, MultKind::band, 1);
    // multiplier value at xi=3: phi(1.5) - phi(3) = 0.5
    for (std::size_t i = 0; i < g.size; i += 41)
        CHECK(std::abs(p.samples[i] - 0.5 * f.samples[i]) <= 1e-12);
}

TEST_CASE("besov report of e^{2 pi i 3 x}") {
    TorusGrid g = make_grid(16, 1024);
    BesovReport r = besov_norm(exponential(g, 3.0));
    CHECK(r.low_band <= 1e-13);               // phi(3) = 0
    CHECK(r.bands.at(0).first == 1);
    CHECK(r.bands.at(0).second == doctest::Approx(0.5).epsilon(1e-12)); // phi(1.5)-phi(3)
    CHECK(r.bands.at(1).second == doctest::Approx(0.5).epsilon(1e-12)); // phi(0.75)-phi(1.5)
    for (std::size_t b = 2; b < r.bands.size(); ++b) CHECK(r.bands[b].second <= 1e-13);
    CHECK(r.besov_part == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("b_norm splits into besov and L2 parts") {
    TorusGrid g = make_grid(16, 1024);
    BNormReport r = b_norm(exponential(g, 3.0));
    CHECK(r.l2_part == doctest::Approx(4.0).epsilon(1e-12)); // sqrt(period)
    CHECK(r.total == doctest::Approx(r.besov.besov_part + r.l2_part).epsilon(1e-15));
}

TEST_CASE("idempotence: widened fixes its band") {
    TorusGrid g = make_grid(16, 4096);
    GridFunction f = sample_real(g, [](double x) {
        double v = 0.0;
        for (int k = 1; k <= 40; ++k) v += std::cos(tau * k * x / 4.0) / (1.0 + k);
        return v;
    });
    for (int j = 1; j <= g.band_limit_index(); ++j) {
        GridFunction u = project(f, MultKind::band, j);
        GridFunction v = project(u, MultKind::widened, j);
        CHECK(sup_diff(u, v) <= 1e-12);
    }
}

TEST_CASE("telescope residual vanishes at the top index") {
    TorusGrid g = make_grid(16, 4096);
    GridFunction f = sample_real(g, [](double x) {
        return std::exp(std::sin(tau * x / 16.0)) + 0.3 * std::cos(tau * 2.0 * x);
    });
    CHECK(telescope_residual(f, g.band_limit_index()) <= 1e-10);
    // truncating early must leave the dropped high bands behind
    GridFunction hi = exponential(g, 60.0);
    CHECK(telescope_residual(hi, 3) > 0.5);
}

TEST_CASE("mollifier has unit mass and unit-interval support") {
    TorusGrid g = make_grid(16, 2048);
    GridFunction rho = mollifier(g);
    long double mass = 0.0L;
    for (auto& v : rho.samples) mass += v.real();
    CHECK((double)(mass * g.spacing()) == doctest::Approx(1.0).epsilon(1e-14));
    for (std::size_t i = 0; i < g.size; ++i)
        if (std::abs(g.abscissa(i)) >= 1.0) CHECK(rho.samples[i].real() == 0.0);
    // smoothing a constant reproduces it
    auto c = sample_real(g, [](double) { return 2.0; });
    GridFunction sc = mollifier_apply(c);
    CHECK(sup_diff(sc, c) <= 1e-12);
}

TEST_CASE("spectral_derivative matches the closed form for a sine") {
    TorusGrid g = make_grid(4, 512);
    auto f = sample_real(g, [](double x) { return std::sin(tau * 2.0 * x); });
    auto want = sample_real(g, [](double x) { return tau * 2.0 * std::cos(tau * 2.0 * x); });
    CHECK(sup_diff(spectral_derivative(f), want) <= 1e-9);
}

TEST_CASE("convolve carries the quadrature weight") {
    TorusGrid g = make_grid(4, 256);
    auto box = sample_real(g, [](double x) { return (x >= -0.5 && x < 0.5) ? 1.0 : 0.0; });
    // unit-mass discrete delta at x = 0 is the convolution identity
    GridFunction delta = zeros(g);
    delta.samples[g.center()] = 1.0 / g.spacing();
    GridFunction same = convolve(delta, box);
    CHECK(sup_diff(same, box) <= 1e-10);
    // mass multiplies: l1(f * g) = l1(f) l1(g) for nonnegative factors
    GridFunction hat = convolve(box, box);
    CHECK(norm(hat, Norm::l1) ==
          doctest::Approx(norm(box, Norm::l1) * norm(box, Norm::l1)).epsilon(1e-12));
}

TEST_CASE("kernel_from_multiplier inverts to the multiplier") {
    TorusGrid g = make_grid(16, 1024);
    auto m = multiplier_values(g, MultKind::band, 2);
    GridFunction h = kernel_from_multiplier(g, *m);
    // convolving an exponential with h multiplies it by m(xi)
    GridFunction f = exponential(g, 3.0);
    GridFunction conv = convolve(f, h);
    double mval = (*m)[3 * 16]; // bin of xi=3
    for (std::size_t i = 0; i < g.size; i += 37)
        CHECK(std::abs(conv.samples[i] - mval * f.samples[i]) <= 1e-10);
}

}
