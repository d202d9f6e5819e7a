#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "test_util.hpp"

using namespace divdiff;
using testutil::poly;

namespace {

int failures = 0;

void run(const char* name, double budget_seconds,
         const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && elapsed > budget_seconds) {
        ok = false;
        detail = "exceeded time budget of " + std::to_string(budget_seconds) + "s";
    }
    if (!ok) ++failures;
    std::printf("[%s] %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", name, elapsed,
                detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
}

bool reports_ok(const std::vector<CheckReport>& rs, std::string& detail) {
    for (const auto& r : rs)
        if (!r.pass) {
            detail = report_line(r);
            return false;
        }
    detail = std::to_string(rs.size()) + " checks";
    return true;
}

}  // namespace

int main() {
    run("deformed longest-word composite builds the multifundamental polynomial", 1.0,
        [](std::string& detail) {
            Polynomial lhs =
                apply_word(OperatorKind::KPi, {1, 2, 1}, Polynomial::from_exponents({2, 1, 0}));
            Polynomial expect = poly(3, {{1, 0, {2, 1, 0}},
                                         {1, 0, {2, 0, 1}},
                                         {1, 0, {1, 1, 1}},
                                         {1, 0, {0, 2, 1}},
                                         {2, 1, {2, 1, 1}},
                                         {1, 1, {1, 2, 1}}});
            if (lhs != expect) {
                detail = "composite differs from the recorded value";
                return false;
            }
            if (lhs != multifundamental(StrongComposition{{2, 1}}, 3)) {
                detail = "composite differs from the set-sequence enumerator";
                return false;
            }
            return true;
        });

    run("deformed sorting-word composite builds the glide polynomial", 1.0,
        [](std::string& detail) {
            Polynomial lhs =
                apply_word(OperatorKind::KPi, {1, 2}, Polynomial::from_exponents({1, 2, 0}));
            Polynomial expect = poly(3, {{1, 0, {1, 2, 0}},
                                         {1, 0, {1, 1, 1}},
                                         {1, 0, {1, 0, 2}},
                                         {1, 0, {0, 1, 2}},
                                         {1, 1, {1, 2, 1}},
                                         {2, 1, {1, 1, 2}}});
            if (lhs != expect) {
                detail = "composite differs from the recorded value";
                return false;
            }
            if (lhs != glide_poly(WeakComposition{{0, 1, 2}})) {
                detail = "composite differs from the glide enumerator";
                return false;
            }
            return true;
        });

    run("deformed theta composite builds the kaon polynomial", 1.0, [](std::string& detail) {
        Polynomial lhs =
            apply_word(OperatorKind::KTheta, {1, 2}, Polynomial::from_exponents({1, 2, 0}));
        Polynomial expect = poly(3, {{1, 0, {0, 1, 2}}, {1, 1, {1, 1, 2}}});
        if (lhs != expect) {
            detail = "composite differs from the recorded value";
            return false;
        }
        if (lhs != kaon_poly(WeakComposition{{0, 1, 2}})) {
            detail = "composite differs from the mesonic enumerator";
            return false;
        }
        return true;
    });

    run("family enumerators reproduce recorded polynomials", 10.0, [](std::string& detail) {
        struct Golden {
            const char* name;
            Polynomial got;
            Polynomial expect;
        };
        std::vector<Golden> gs;
        gs.push_back({"fundamental 121 in 4 vars",
                      fundamental(StrongComposition{{1, 2, 1}}, 4),
                      poly(4, {{1, 0, {1, 2, 1, 0}},
                               {1, 0, {1, 2, 0, 1}},
                               {1, 0, {1, 1, 1, 1}},
                               {1, 0, {1, 0, 2, 1}},
                               {1, 0, {0, 1, 2, 1}}})});
        gs.push_back({"multifundamental 121 in 4 vars",
                      multifundamental(StrongComposition{{1, 2, 1}}, 4),
                      poly(4, {{1, 0, {1, 2, 1, 0}},
                               {1, 0, {1, 2, 0, 1}},
                               {1, 0, {1, 1, 1, 1}},
                               {1, 0, {1, 0, 2, 1}},
                               {1, 0, {0, 1, 2, 1}},
                               {2, 1, {1, 2, 1, 1}},
                               {2, 1, {1, 1, 2, 1}}})});
        gs.push_back({"slide 021", slide_poly(WeakComposition{{0, 2, 1}}),
                      poly(3, {{1, 0, {2, 1, 0}},
                               {1, 0, {2, 0, 1}},
                               {1, 0, {1, 1, 1}},
                               {1, 0, {0, 2, 1}}})});
        gs.push_back({"glide 021", glide_poly(WeakComposition{{0, 2, 1}}),
                      poly(3, {{1, 0, {2, 1, 0}},
                               {1, 0, {2, 0, 1}},
                               {1, 0, {1, 1, 1}},
                               {1, 0, {0, 2, 1}},
                               {2, 1, {2, 1, 1}},
                               {1, 1, {1, 2, 1}}})});
        gs.push_back({"particle 021", particle_poly(WeakComposition{{0, 2, 1}}),
                      poly(3, {{1, 0, {1, 1, 1}}, {1, 0, {0, 2, 1}}})});
        gs.push_back({"kaon 021", kaon_poly(WeakComposition{{0, 2, 1}}),
                      poly(3, {{1, 0, {1, 1, 1}},
                               {1, 0, {0, 2, 1}},
                               {1, 1, {2, 1, 1}},
                               {1, 1, {1, 2, 1}}})});
        for (const Golden& g : gs)
            if (g.got != g.expect) {
                detail = g.name;
                return false;
            }
        detail = std::to_string(gs.size()) + " polynomials";
        return true;
    });

    run("glide and kaon polynomials arise from deformed composites at desk scale", 300.0,
        [](std::string& detail) {
            std::vector<CheckReport> rs;
            for (const WeakComposition& a : all_weak_compositions(5, 4)) {
                rs.push_back(check_main_glide(a));
                rs.push_back(check_main_kaon(a));
            }
            for (const StrongComposition& s : all_strong_compositions(5))
                for (int n = s.length(); n <= 5; ++n)
                    rs.push_back(check_main_multifundamental(WeakComposition{s.parts}, n));
            return reports_ok(rs, detail);
        });

    run("slide and particle polynomials arise from hivert composites at desk scale", 300.0,
        [](std::string& detail) {
            std::vector<CheckReport> rs;
            for (const WeakComposition& a : all_weak_compositions(5, 4)) {
                rs.push_back(check_hivert_slide(a));
                rs.push_back(check_hivert_particle(a));
            }
            for (const StrongComposition& s : all_strong_compositions(5))
                for (int n = s.length(); n <= 5; ++n)
                    rs.push_back(check_hivert_fundamental(WeakComposition{s.parts}, n));
            return reports_ok(rs, detail);
        });

    run("operator relations hold on all monomials of degree at most 4 in 4 variables", 120.0,
        [](std::string& detail) { return reports_ok(check_relations(4, 4), detail); });

    run("composites are independent of the reduced word", 60.0, [](std::string& detail) {
        CheckReport r = check_word_independence();
        if (!r.pass) {
            detail = report_line(r);
            return false;
        }
        return true;
    });

    run("partial longest-word composites match restricted enumerators", 120.0,
        [](std::string& detail) {
            std::vector<CheckReport> rs;
            for (const StrongComposition& s : all_strong_compositions(4))
                for (int n = s.length() + 1; n <= 5; ++n)
                    for (CheckReport& r : check_lemma_partial(s, n)) rs.push_back(std::move(r));
            return reports_ok(rs, detail);
        });

    run("pi composites along the longest word build schur polynomials", 120.0,
        [](std::string& detail) {
            std::vector<CheckReport> rs;
            for (const WeakComposition& lambda : all_partitions(5)) {
                if (lambda.length() > 4) continue;
                for (int n = lambda.length(); n <= 4; ++n) rs.push_back(check_schur(lambda, n));
            }
            return reports_ok(rs, detail);
        });

    run("slide polynomials match their dominance description", 120.0, [](std::string& detail) {
        std::vector<CheckReport> rs;
        for (const WeakComposition& a : all_weak_compositions(5, 4))
            rs.push_back(check_slide_dual(a));
        return reports_ok(rs, detail);
    });

    if (failures == 0)
        std::printf("all 11 acceptance checks passed\n");
    else
        std::printf("%d of 11 acceptance checks failed\n", failures);
    return failures == 0 ? 0 : 1;
}
