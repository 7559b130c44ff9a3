// Acceptance harness: runs every identity sweep at its full documented range
// and prints one pass/fail line per criterion. All checks are exact; there
// are no tolerances anywhere. Exit status is the number of failed criteria.

#include <cstdio>
#include <string>
#include <vector>

#include "charfact/verify.hpp"

using namespace charfact;

namespace {

int g_failures = 0;

void report(int number, const std::string& what, const VerifyReport& r)
{
    if (r.ok()) {
        std::printf("[PASS] criterion %2d: %s (%lld instances, %lld ms)\n", number,
                    what.c_str(), r.instances, r.millis);
    } else {
        ++g_failures;
        std::printf("[FAIL] criterion %2d: %s (%zu failures out of %lld instances)\n", number,
                    what.c_str(), r.failures.size(), r.instances);
        size_t shown = 0;
        for (const auto& f : r.failures) {
            if (++shown > 5) {
                std::printf("         ... and %zu more\n", r.failures.size() - 5);
                break;
            }
            std::printf("         %s: expected %s, got %s\n", f.instance.c_str(),
                        f.expected.c_str(), f.actual.c_str());
        }
    }
    std::fflush(stdout);
}

VerifyOptions opts(int max_size, std::vector<int> ts = {}, std::vector<int> zs = {})
{
    VerifyOptions o;
    o.max_size = max_size;
    o.ts = std::move(ts);
    o.zs = std::move(zs);
    return o;
}

}  // namespace

int main()
{
    report(1, "Littlewood round-trip and size identity, |lambda| <= 16, t in {2,3,4,5}",
           verify_littlewood_core(opts(16, {2, 3, 4, 5})));

    report(2, "sign coherence: peel = permutation product, |lambda| <= 12",
           verify_littlewood_signs(opts(12, {2, 3, 4})));

    report(3, "z-asymmetric witnesses, |lambda| <= 24, z in 0..5, t in 2..5; counts to q^30",
           verify_zasym(opts(24, {2, 3, 4, 5}, {0, 1, 2, 3, 4, 5})));

    report(4, "skew Verschiebung factorization, |lambda| <= 10, t in {2,3,4}",
           verify_schur_verschiebung(opts(10, {2, 3, 4})));

    report(5, "Hamel-King determinant = skew sum, |lambda| <= 9, z in -3..3; specializations",
           verify_hk_identity(opts(9, {}, {-3, -2, -1, 0, 1, 2, 3})));

    report(6, "modified determinant = expansion, |lambda|,|mu| <= 6, a,b in -2..2, c in 0..2",
           verify_rs2(opts(6)));

    report(7, "master factorization, |lambda| <= 9, t in {2,3,4}, z in -2..5, symbolic in q",
           verify_chiz_master(opts(9, {2, 3, 4}, {-2, -1, 0, 1, 2, 3, 4, 5})));

    report(8, "classical so/o/sp factorizations at (z,q) specializations, same range",
           verify_chiz_classical(opts(9, {2, 3, 4})));

    report(9, "character tables orthogonal to n = 10; multiplication rule; skew rule",
           verify_characters(opts(10, {2, 3})));

    report(10, "SXP rules, a- and b-coefficients, Levi weight construction",
           verify_sxp(opts(5, {2, 3})));

    if (g_failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", g_failures);
    return g_failures;
}
