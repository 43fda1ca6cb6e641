// Acceptance gate: twelve end-to-end properties, one line each.  Every
// criterion is the conjunction of named verification cases run at their
// pinned grids and tolerances.  Exit code 0 iff all pass.
//
// Usage: test_acceptance [n ...]   (run only criteria n, for profiling)
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "lfrac/verify.hpp"

using namespace lfrac;

namespace {

struct Criterion {
    int id;
    const char* label;
    std::vector<const char*> cases;
};

const std::vector<Criterion> kCriteria = {
    {1, "closed-form anchor", {"closed-form-anchor"}},
    {2, "cross-method agreement", {"cross-method-agreement"}},
    {3,
     "index symmetries",
     {"index-symmetry-reduction", "index-contraction", "complementary-sum"}},
    {4, "erfc anchor", {"erfc-anchor"}},
    {5,
     "subordinator density",
     {"levy-closed-form", "subordinator-normalization",
      "subordinator-laplace-symbol"}},
    {6,
     "cosine integral positivity",
     {"cosine-positivity", "cosine-closed-forms"}},
    {7,
     "fractional-calculus semigroup",
     {"fractional-semigroup", "laplace-symbol-of-integration"}},
    {8, "conjugation identity", {"conjugation-identity"}},
    {9,
     "group and semigroup algebra",
     {"group-random-laws", "semigroup-closure"}},
    {10,
     "substitution operator laws",
     {"zolotarev-semigroup", "zolotarev-commutation",
      "zolotarev-normalization"}},
    {11,
     "master transform oracle",
     {"transform-oracle-substitution", "transform-oracle-weight",
      "transform-oracle-phase", "transform-oracle-zolotarev",
      "transform-oracle-shift"}},
    {12, "boundary norm preservation", {"boundary-norm"}},
};

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& cr : kCriteria) {
        if (!only.empty() && !only.count(cr.id)) continue;
        auto t0 = std::chrono::steady_clock::now();
        bool pass = true;
        VerifyCase worst;
        double worst_ratio = -1.0;
        std::string detail;
        try {
            for (const char* name : cr.cases) {
                VerifyCase c = run_case(name, QuadSpec{});
                pass = pass && c.pass;
                double ratio = c.max_abs_err / c.tolerance;
                if (ratio > worst_ratio) {
                    worst_ratio = ratio;
                    worst = c;
                }
            }
        } catch (const std::exception& e) {
            pass = false;
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        if (!pass) ++failures;
        if (detail.empty())
            std::printf(
                "criterion %02d  %-32s %s  max_err=%.3g tol=%.1g (%s) "
                "[%.1fs]\n",
                cr.id, cr.label, pass ? "PASS" : "FAIL", worst.max_abs_err,
                worst.tolerance, worst.name.c_str(), secs);
        else
            std::printf("criterion %02d  %-32s FAIL  %s [%.1fs]\n", cr.id,
                        cr.label, detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
