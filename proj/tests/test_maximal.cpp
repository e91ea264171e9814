#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "maxlp/errors.hpp"
#include "maxlp/kernels.hpp"
#include "maxlp/maximal.hpp"

using namespace maxlp;

namespace {

GridFunction random_real(const TorusGrid& g, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    GridFunction f = zeros(g);
    for (auto& v : f.samples) v = u(rng);
    return f;
}

double sup_diff(const MaximalResult& a, const MaximalResult& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        m = std::max(m, std::abs(a.values.samples[i] - b.values.samples[i]));
    return m;
}

} // namespace

TEST_SUITE("maximal") {

TEST_CASE("fast paths agree with the direct loops") {
    TorusGrid g = make_grid(2, 64);
    RadiiSet radii = all_radii(g);
    for (unsigned seed : {1u, 2u, 3u}) {
        GridFunction f = random_real(g, seed);
        CHECK(sup_diff(hardy_littlewood(f, radii), hardy_littlewood_direct(f, radii)) <= 1e-12);
        CHECK(sup_diff(sharp_maximal(f, radii), sharp_maximal_direct(f, radii)) <= 1e-12);
        CHECK(sup_diff(diamond_maximal(f, radii), diamond_maximal_direct(f, radii)) <= 1e-12);
    }
}

TEST_CASE("complex input takes the fallback and matches the oracle") {
    TorusGrid g = make_grid(2, 32);
    GridFunction f = sample_complex(g, [](double x) {
        return cplx(std::cos(std::numbers::pi * x), std::sin(3.0 * x));
    });
    f.is_real = false;
    RadiiSet radii = all_radii(g);
    CHECK(sup_diff(sharp_maximal(f, radii), sharp_maximal_direct(f, radii)) <= 1e-12);
    CHECK(sup_diff(hardy_littlewood(f, radii), hardy_littlewood_direct(f, radii)) <= 1e-12);
}

TEST_CASE("domination chain holds pointwise") {
    TorusGrid g = make_grid(2, 64);
    RadiiSet radii = all_radii(g);
    GridFunction f = random_real(g, 9);
    auto hl = hardy_littlewood(f, radii);
    auto sh = sharp_maximal(f, radii);
    auto di = diamond_maximal(f, radii);
    for (std::size_t i = 0; i < g.size; ++i) {
        CHECK(di.values.samples[i].real() <= sh.values.samples[i].real() + 1e-12);
        CHECK(sh.values.samples[i].real() <= 2.0 * hl.values.samples[i].real() + 1e-12);
    }
}

TEST_CASE("the chain constants are tight, not slack") {
    // a lone spike makes the deviation operator approach twice the average,
    // and a step makes the odd-window imbalance approach the deviation.
    TorusGrid g = make_grid(2, 64);
    RadiiSet radii = all_radii(g);

    GridFunction spike = zeros(g);
    spike.samples[g.center()] = 1.0;
    auto hl = hardy_littlewood(spike, radii);
    auto sh = sharp_maximal(spike, radii);
    double best = 0.0;
    for (std::size_t i = 0; i < g.size; ++i)
        best = std::max(best, sh.values.samples[i].real() / (2.0 * hl.values.samples[i].real()));
    CHECK(best >= 0.9);

    auto step = sample_real(g, [](double x) { return x < 0.0 ? -1.0 : 1.0; });
    auto sh2 = sharp_maximal(step, radii);
    auto di2 = diamond_maximal(step, radii);
    double best2 = 0.0;
    for (std::size_t i = 0; i < g.size; ++i) {
        double s = sh2.values.samples[i].real();
        if (s > 1e-9) best2 = std::max(best2, di2.values.samples[i].real() / s);
    }
    CHECK(best2 >= 0.9);
}

TEST_CASE("shift equivariance") {
    TorusGrid g = make_grid(2, 64);
    RadiiSet radii = dyadic_radii(g);
    GridFunction f = random_real(g, 21);
    GridFunction fs = circular_shift(f, 11);
    for (auto op : {hardy_littlewood, sharp_maximal, diamond_maximal}) {
        auto a = circular_shift(op(f, radii).values, 11);
        auto b = op(fs, radii).values;
        double m = 0.0;
        for (std::size_t i = 0; i < g.size; ++i)
            m = std::max(m, std::abs(a.samples[i] - b.samples[i]));
        CHECK(m <= 1e-12);
    }
}

TEST_CASE("homogeneity and subadditivity of the window average") {
    TorusGrid g = make_grid(2, 64);
    RadiiSet radii = dyadic_radii(g);
    GridFunction f = random_real(g, 5);
    GridFunction h = random_real(g, 6);

    GridFunction cf = f;
    for (auto& v : cf.samples) v *= -2.5;
    auto scaled = hardy_littlewood(cf, radii);
    auto base = hardy_littlewood(f, radii);
    GridFunction fh = f;
    for (std::size_t i = 0; i < g.size; ++i) fh.samples[i] += h.samples[i];
    auto sum = hardy_littlewood(fh, radii);
    auto hb = hardy_littlewood(h, radii);
    for (std::size_t i = 0; i < g.size; ++i) {
        CHECK(scaled.values.samples[i].real() ==
              doctest::Approx(2.5 * base.values.samples[i].real()).epsilon(1e-12));
        CHECK(sum.values.samples[i].real() <=
              base.values.samples[i].real() + hb.values.samples[i].real() + 1e-12);
    }
}

TEST_CASE("deviation operator kills constants") {
    TorusGrid g = make_grid(2, 64);
    RadiiSet radii = dyadic_radii(g);
    GridFunction f = random_real(g, 8);
    GridFunction fc = f;
    for (auto& v : fc.samples) v += 17.0;
    auto a = sharp_maximal(f, radii);
    auto b = sharp_maximal(fc, radii);
    // adding a constant shifts every window mean by the same constant
    CHECK(sup_diff(a, b) <= 1e-10);
    auto c = sample_real(g, [](double) { return 4.0; });
    auto sc = sharp_maximal(c, radii);
    for (auto& v : sc.values.samples) CHECK(std::abs(v) <= 1e-12);
}

TEST_CASE("argmax radius is a member of the radius set") {
    TorusGrid g = make_grid(2, 64);
    RadiiSet radii = radii_from_list(g, {3, 7, 12});
    GridFunction f = random_real(g, 13);
    for (auto* r : {&hardy_littlewood, &sharp_maximal, &diamond_maximal}) {
        auto res = (*r)(f, radii);
        for (auto k : res.argmax_radius)
            CHECK(std::find(radii.indices.begin(), radii.indices.end(), k) !=
                  radii.indices.end());
    }
}

TEST_CASE("sharp_maximal_range agrees with the full evaluation on its window") {
    TorusGrid g = make_grid(2, 128);
    RadiiSet radii = dyadic_radii(g);
    GridFunction f = random_real(g, 30);
    auto full = sharp_maximal(f, radii);
    auto part = sharp_maximal_range(f, radii, 40, 80);
    for (std::size_t i = 40; i <= 80; ++i)
        CHECK(part.values.samples[i].real() ==
              doctest::Approx(full.values.samples[i].real()).epsilon(1e-13));
    for (std::size_t i = 0; i < 40; ++i) CHECK(part.values.samples[i] == cplx(0.0));
}

TEST_CASE("tk_star spectral path matches the direct loop") {
    TorusGrid g = make_grid(4, 128);
    RadiiSet radii = radii_from_list(g, {1, 2, 4, 8});
    GridFunction f = random_real(g, 17);
    for (auto k : {diamond_kernel(), box_kernel(), smooth_test_kernel()}) {
        auto a = tk_star(f, k, radii);
        auto b = tk_star_direct(f, k, radii);
        CHECK(sup_diff(a, b) <= 1e-10);
    }
}

TEST_CASE("tk_star with the odd step kernel is the diamond operator") {
    // (f * K_r)(x) with K = sign/2 on [-1,1] is exactly the half-window
    // imbalance up to the discrete window normalization; both maximize over
    // the same radii, so the two values sandwich each other within the
    // normalization gap (2k vs 2k+1) at each radius.
    TorusGrid g = make_grid(4, 256);
    RadiiSet radii = radii_from_list(g, {4, 8, 16});
    GridFunction f = random_real(g, 23);
    auto tk = tk_star(f, diamond_kernel(), radii);
    auto di = diamond_maximal(f, radii);
    for (std::size_t i = 0; i < g.size; ++i) {
        double a = tk.values.samples[i].real();
        double b = di.values.samples[i].real();
        // same object up to k/(2k+1)-type factors: never off by 2x at k >= 4
        CHECK(a <= 2.0 * b + 1e-9);
        CHECK(b <= 2.0 * a + 1e-9);
    }
}

TEST_CASE("radius admissibility is enforced") {
    TorusGrid g = make_grid(2, 64);
    GridFunction f = random_real(g, 2);
    CHECK_THROWS_AS(tk_star(f, diamond_kernel(), radii_from_list(g, {31})),
                    admissibility_error);
}

TEST_CASE("declared kernel facts match the numerical total variation") {
    CHECK(kernel_tv(diamond_kernel()) == doctest::Approx(2.0).epsilon(1e-5));
    CHECK(kernel_tv(box_kernel()) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(kernel_tv(smooth_test_kernel()) == doctest::Approx(2.0).epsilon(1e-4));
    for (auto k : {diamond_kernel(), box_kernel(), smooth_test_kernel()})
        CHECK(kernel_tv(k) == doctest::Approx(k.tv_norm).epsilon(1e-4));
}

}
