#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "maxlp/errors.hpp"
#include "maxlp/grid.hpp"

using namespace maxlp;

namespace {

GridFunction random_samples(const TorusGrid& g, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    GridFunction f = zeros(g);
    for (auto& v : f.samples) v = u(rng);
    return f;
}

} // namespace

TEST_SUITE("grid") {

TEST_CASE("make_grid validates power-of-two dims") {
    CHECK_NOTHROW(make_grid(16, 1024));
    CHECK_THROWS_AS(make_grid(12, 1024), config_error);
    CHECK_THROWS_AS(make_grid(16, 1000), config_error);
    CHECK_THROWS_AS(make_grid(1, 64), config_error);   // period >= 2
    CHECK_THROWS_AS(make_grid(16, 8), config_error);   // size >= 16
}

TEST_CASE("abscissas are centered") {
    TorusGrid g = make_grid(16, 64);
    CHECK(g.abscissa(0) == -8.0);
    CHECK(g.abscissa(g.center()) == 0.0);
    CHECK(g.spacing() == 0.25);
    CHECK(g.nyquist() == 2.0);
}

TEST_CASE("band_limit_index matches nyquist headroom") {
    // widened band at j needs support 2^{j+2} <= nyquist, so j <= log2(nyq)-2;
    // the stored convention is log2(size/(2 period)) - 1.
    CHECK(make_grid(16, 16384).band_limit_index() == 8);
    CHECK(make_grid(16, 1 << 20).band_limit_index() == 14);
    CHECK(make_grid(2, 64).band_limit_index() == 3);
}

TEST_CASE("norms agree with closed forms") {
    TorusGrid g = make_grid(2, 4096);
    auto f = sample_real(g, [](double x) { return std::sin(std::numbers::pi * x); });
    // over one full period: L1 = 4/pi, L2^2 = 1, Linf = 1
    CHECK(norm(f, Norm::l1) == doctest::Approx(4.0 / std::numbers::pi).epsilon(1e-6));
    CHECK(norm(f, Norm::l2) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(norm(f, Norm::linf) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("circular_shift round trips and matches indexing") {
    TorusGrid g = make_grid(2, 32);
    GridFunction f = random_samples(g, 7);
    GridFunction s = circular_shift(f, 5);
    for (std::size_t i = 0; i < g.size; ++i)
        CHECK(s.samples[(i + 5) % g.size] == f.samples[i]);
    GridFunction back = circular_shift(s, -5);
    for (std::size_t i = 0; i < g.size; ++i) CHECK(back.samples[i] == f.samples[i]);
}

TEST_CASE("ball_average equals brute-force window mean for every k") {
    TorusGrid g = make_grid(2, 64);
    GridFunction f = random_samples(g, 11);
    for (std::size_t k = 1; k <= g.size / 2 - 1; ++k) {
        GridFunction a = ball_average(f, k);
        for (std::size_t i = 0; i < g.size; ++i) {
            long double acc = 0.0L;
            for (long long l = -(long long)k; l <= (long long)k; ++l) {
                auto idx = (std::size_t)(((long long)i + l + 2LL * (long long)g.size) %
                                         (long long)g.size);
                acc += f.samples[idx].real();
            }
            double want = (double)(acc / (2.0L * k + 1.0L));
            CHECK(a.samples[i].real() == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("ball_average of a constant is the constant") {
    TorusGrid g = make_grid(16, 256);
    auto f = sample_real(g, [](double) { return 3.5; });
    GridFunction a = ball_average(f, 17);
    for (auto& v : a.samples) CHECK(v.real() == doctest::Approx(3.5).epsilon(1e-14));
}

TEST_CASE("dilate_dyadic m>0 is exact strided sampling") {
    TorusGrid g = make_grid(16, 256);
    GridFunction f = random_samples(g, 3);
    GridFunction d = dilate_dyadic(f, 2);
    CHECK(d.grid.period == 4.0);
    CHECK(d.grid.size == 64);
    CHECK(d.grid.spacing() == g.spacing());
    for (std::size_t i = 0; i < d.grid.size; ++i)
        CHECK(d.samples[i] == f.samples[(4 * i) % g.size]);
}

TEST_CASE("dilate_dyadic m<0 matches the continuum dilation of a sine") {
    TorusGrid g = make_grid(4, 256);
    auto f = sample_real(g, [](double x) { return std::sin(2.0 * std::numbers::pi * 3.0 * x); });
    GridFunction d = dilate_dyadic(f, -2); // (Dil_{-2} f)(x) = f(x/4) on (16, 1024)
    CHECK(d.grid.period == 16.0);
    CHECK(d.grid.size == 1024);
    for (std::size_t i = 0; i < d.grid.size; i += 13) {
        double x = d.grid.abscissa(i);
        double want = std::sin(2.0 * std::numbers::pi * 3.0 * (x / 4.0));
        CHECK(d.samples[i].real() == doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("dilate_dyadic round trip on band-limited input") {
    TorusGrid g = make_grid(8, 512);
    auto f = sample_real(g, [](double x) {
        return std::cos(2.0 * std::numbers::pi * x) + 0.25 * std::sin(2.0 * std::numbers::pi * 5.0 * x);
    });
    GridFunction back = dilate_dyadic(dilate_dyadic(f, -2), 2);
    REQUIRE(back.grid == g);
    for (std::size_t i = 0; i < g.size; ++i)
        CHECK(back.samples[i].real() == doctest::Approx(f.samples[i].real()).epsilon(1e-10));
}

TEST_CASE("dilate_dyadic m<0 rejects content beyond the target band") {
    TorusGrid g = make_grid(2, 64); // nyquist 16
    auto f = sample_real(g, [](double x) { return std::sin(2.0 * std::numbers::pi * 10.0 * x); });
    // target band for m=-1 is |xi| < 8, and the input sits at 10
    CHECK_THROWS_AS(dilate_dyadic(f, -1), admissibility_error);
}

TEST_CASE("radii sets") {
    TorusGrid g = make_grid(16, 1024);
    RadiiSet d = dyadic_radii(g);
    CHECK(d.dyadic_closed);
    CHECK(d.indices.front() == 1);
    CHECK(d.indices.back() == 256); // M/4
    for (std::size_t i = 1; i < d.indices.size(); ++i)
        CHECK(d.indices[i] == 2 * d.indices[i - 1]);

    RadiiSet a = all_radii(make_grid(2, 64));
    CHECK(a.indices.size() == 16);
    CHECK_FALSE(a.dyadic_closed);
    CHECK_THROWS_AS(all_radii(make_grid(16, 16384)), admissibility_error); // oracle mode only

    CHECK_THROWS_AS(radii_from_list(g, {0}), admissibility_error);
    CHECK_THROWS_AS(radii_from_list(g, {512}), admissibility_error); // above M/2 - 1 cap

    RadiiSet halved = divide_radii(d, 1);
    CHECK(halved.dyadic_closed);
    CHECK(halved.indices.front() == 1);
    CHECK(halved.indices.back() == 128);
}

}
