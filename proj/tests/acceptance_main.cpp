// End-to-end quantitative acceptance run. Executes the full check suite on
// the chosen profile (default: reference) against the frozen calibration
// file and reduces the individual checks to the eleven acceptance criteria,
// one verdict line each. Exit 0 iff every criterion and every supporting
// invariant passes.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "maxlp/errors.hpp"
#include "maxlp/experiments.hpp"

using namespace maxlp;

namespace {

struct Criterion {
    int index;
    const char* label;
    std::vector<const CheckReport*> members;
    bool pass() const {
        for (auto* c : members)
            if (!c->pass) return false;
        return !members.empty();
    }
};

int criterion_of(const std::string& name) {
    static const std::vector<std::pair<const char*, int>> table = {
        {"domination-", 1},      {"projection-", 2},     {"telescope-", 2},
        {"multiplier-", 2},      {"kernel-decay-", 3},   {"band-kernel-", 4},
        {"wide-kernel-", 4},     {"glambda-", 5},        {"lacunary-l1-", 6},
        {"fn-envelope-", 7},     {"sharp-core-", 8},     {"sharp-besov-", 8},
        {"ratio-", 9},           {"fn-bnorm-", 9},       {"dilation-", 10},
        {"oracle-", 11},
    };
    for (const auto& [prefix, idx] : table)
        if (name.rfind(prefix, 0) == 0) return idx;
    return 0; // supporting invariant, outside the numbered list
}

} // namespace

int main(int argc, char** argv) {
    std::string profile_name = "reference";
    std::uint64_t seed = 42;
    int workers = 1;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--profile") && i + 1 < argc) profile_name = argv[++i];
        else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
        else if (!std::strcmp(argv[i], "--workers") && i + 1 < argc) workers = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: %s [--profile name] [--seed n] [--workers n]\n", argv[0]);
            return 2;
        }
    }

    Profile profile;
    Calibration cal;
    SuiteResult suite;
    try {
        profile = profile_by_name(profile_name);
        cal = load_calibration("");
        suite = run_suite(profile, cal, seed, workers);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance: setup failed: %s\n", e.what());
        return 2;
    }

    static const char* labels[12] = {
        "supporting invariants",
        "pointwise domination chain",
        "projection algebra identities",
        "kernel decay envelope",
        "band kernel uniformity",
        "modulated bump band decay",
        "lacunary L1 growth",
        "envelope family norm uniformity",
        "sharp maximal growth on the envelope family",
        "bounded vs diverging contrast on the dilated family",
        "dilation commutation and norm bounds",
        "brute-force oracle equivalence",
    };
    std::vector<Criterion> crit;
    for (int i = 0; i <= 11; ++i) crit.push_back({i, labels[i], {}});
    for (const auto& c : suite.checks) crit[criterion_of(c.name)].members.push_back(&c);

    int crit_failed = 0;
    for (int i = 1; i <= 11; ++i) {
        bool ok = crit[i].pass();
        crit_failed += ok ? 0 : 1;
        std::printf("criterion %2d [%s] %s\n", i, ok ? "PASS" : "FAIL", crit[i].label);
        if (!ok)
            for (auto* c : crit[i].members)
                if (!c->pass)
                    std::printf("    %-30s observed=%.6g bound=%.6g  %s\n", c->name.c_str(),
                                c->observed, c->bound, c->context.c_str());
    }
    bool support_ok = true;
    for (auto* c : crit[0].members) support_ok &= c->pass;
    std::printf("supporting   [%s] %zu invariants outside the numbered criteria\n",
                support_ok ? "PASS" : "FAIL", crit[0].members.size());
    if (!support_ok)
        for (auto* c : crit[0].members)
            if (!c->pass)
                std::printf("    %-30s observed=%.6g bound=%.6g  %s\n", c->name.c_str(),
                            c->observed, c->bound, c->context.c_str());

    std::printf("acceptance: %d/11 criteria pass (profile %s, seed %llu, calibration v%d)\n",
                11 - crit_failed, profile.name.c_str(), (unsigned long long)seed, cal.version);
    return (crit_failed == 0 && support_ok) ? 0 : 1;
}
