#include "maxlp/fft.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>

#include "maxlp/errors.hpp"

namespace maxlp {
namespace {

struct FftPlan {
    std::size_t n = 0;
    std::vector<std::size_t> bitrev;
    std::vector<cplx> roots; // roots[k] = exp(-2 pi i k / n), k < n/2
};

std::shared_ptr<const FftPlan> plan_for(std::size_t n) {
    static std::shared_mutex mtx;
    static std::map<std::size_t, std::shared_ptr<const FftPlan>> cache;
    {
        std::shared_lock lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    auto plan = std::make_shared<FftPlan>();
    plan->n = n;
    plan->bitrev.resize(n);
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        plan->bitrev[i] = j;
    }
    plan->roots.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        double ang = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        plan->roots[k] = cplx(std::cos(ang), std::sin(ang));
    }
    std::unique_lock lock(mtx);
    auto [it, inserted] = cache.emplace(n, plan);
    return it->second; // single winner on races
}

void transform(std::vector<cplx>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw config_error("fft size must be a power of two, got " + std::to_string(n));
    if (n == 1) return;
    auto plan = plan_for(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = plan->bitrev[i];
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx w = plan->roots[k * step];
                if (inverse) w = std::conj(w);
                cplx u = a[i + k];
                cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
    if (inverse) {
        const double scale = 1.0 / static_cast<double>(n);
        for (auto& z : a) z *= scale;
    }
}

} // namespace

void fft_forward(std::vector<cplx>& data) { transform(data, false); }
void fft_inverse(std::vector<cplx>& data) { transform(data, true); }

} // namespace maxlp
