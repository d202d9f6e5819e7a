#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "test_util.hpp"

using namespace divdiff;
using testutil::poly;

namespace {

bool all_pass(const std::vector<CheckReport>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return !rs.empty();
}

}  // namespace

TEST_CASE("tableau enumerator") {
    REQUIRE(schur_oracle(WeakComposition{{2, 1}}, 3) == poly(3, {{1, 0, {2, 1, 0}},
                                                                 {1, 0, {2, 0, 1}},
                                                                 {1, 0, {1, 2, 0}},
                                                                 {1, 0, {1, 0, 2}},
                                                                 {1, 0, {0, 2, 1}},
                                                                 {1, 0, {0, 1, 2}},
                                                                 {2, 0, {1, 1, 1}}}));
    REQUIRE(schur_oracle(WeakComposition{{1}}, 2) == poly(2, {{1, 0, {1, 0}}, {1, 0, {0, 1}}}));
    REQUIRE(schur_oracle(WeakComposition{{0}}, 1) == Polynomial::one(1));
    REQUIRE(schur_oracle(WeakComposition{{1, 1}}, 1).is_zero());
    REQUIRE_THROWS_AS(schur_oracle(WeakComposition{{1, 2}}, 3), PreconditionUnmet);
}

TEST_CASE("deformed composite checks") {
    CheckReport r = check_main_multifundamental(WeakComposition{{2, 1, 0}}, 3);
    REQUIRE(r.pass);
    REQUIRE(r.check == "main-multifundamental");
    REQUIRE(r.instance == "a=210 n=3");
    REQUIRE(r.detail.empty());
    REQUIRE(check_main_multifundamental(WeakComposition{{1, 2, 1}}, 4).pass);
    REQUIRE(check_main_multifundamental(WeakComposition{{0, 1}}, 2).pass);
    REQUIRE_THROWS_AS(check_main_multifundamental(WeakComposition{{2, 1}}, 1), PreconditionUnmet);

    for (const char* s : {"021", "012", "0101"}) {
        WeakComposition a = parse_composition(s);
        REQUIRE(check_main_glide(a).pass);
        REQUIRE(check_main_kaon(a).pass);
    }
}

TEST_CASE("hivert checks") {
    REQUIRE(check_hivert_fundamental(WeakComposition{{2, 1, 0}}, 3).pass);
    REQUIRE(check_hivert_fundamental(WeakComposition{{1, 2, 1}}, 4).pass);
    for (const char* s : {"021", "012", "0101"}) {
        WeakComposition a = parse_composition(s);
        REQUIRE(check_hivert_slide(a).pass);
        REQUIRE(check_hivert_particle(a).pass);
    }
}

TEST_CASE("schur check") {
    REQUIRE(check_schur(WeakComposition{{2, 1}}, 3).pass);
    REQUIRE(check_schur(WeakComposition{{3, 1}}, 2).pass);
    REQUIRE(check_schur(WeakComposition{{0}}, 2).pass);
    REQUIRE_THROWS_AS(check_schur(WeakComposition{{1, 2}}, 3), PreconditionUnmet);
}

TEST_CASE("key and atom structure") {
    REQUIRE(check_key_structural(WeakComposition{{0, 2, 1}}).pass);
    REQUIRE(check_key_structural(WeakComposition{{2, 1, 0}}).pass);
    REQUIRE(check_key_structural(WeakComposition{{1, 0, 2}}).pass);
}

TEST_CASE("slide dual check") {
    REQUIRE(check_slide_dual(WeakComposition{{0, 2, 1}}).pass);
    REQUIRE(check_slide_dual(WeakComposition{{0, 1, 0, 1}}).pass);
    REQUIRE(check_slide_dual(WeakComposition{{1, 2, 0}}).pass);
}

TEST_CASE("local move checks") {
    REQUIRE(check_local_moves(WeakComposition{{0, 1, 2}}).pass);
    REQUIRE(check_local_moves(WeakComposition{{0, 1, 0, 1}}).pass);
    REQUIRE(check_local_moves(WeakComposition{{0, 2, 1}}).pass);
    REQUIRE_THROWS_AS(check_local_moves(WeakComposition{{1, 2, 0}}), PreconditionUnmet);
}

TEST_CASE("partial longest-word checks") {
    auto rs = check_lemma_partial(StrongComposition{{2, 1}}, 3);
    REQUIRE(rs.size() == 3);
    REQUIRE(all_pass(rs));
    REQUIRE(rs[0].instance == "a=21 n=3 k=0");
    REQUIRE(all_pass(check_lemma_partial(StrongComposition{{1}}, 2)));
    REQUIRE(all_pass(check_lemma_partial(StrongComposition{{1, 2, 1}}, 5)));
    REQUIRE_THROWS_AS(check_lemma_partial(StrongComposition{{2, 1}}, 2), PreconditionUnmet);
}

TEST_CASE("relation sweep") {
    auto rs = check_relations(3, 3);
    REQUIRE(rs.size() == 8);
    for (const auto& r : rs) {
        INFO(report_line(r));
        REQUIRE(r.pass);
        REQUIRE(r.instance == "n=3 deg<=3");
    }
    REQUIRE_THROWS_AS(check_relations(1, 2), PreconditionUnmet);
    REQUIRE_THROWS_AS(check_relations(9, 1), TooLarge);
}

TEST_CASE("word independence") {
    CheckReport r = check_word_independence();
    INFO(r.detail);
    REQUIRE(r.pass);
}

TEST_CASE("family evaluation entry point") {
    REQUIRE(compute_family(FamilyKind::Glide, WeakComposition{{0, 2, 1}}) ==
            glide_poly(WeakComposition{{0, 2, 1}}));
    REQUIRE(compute_family(FamilyKind::Fundamental, WeakComposition{{1, 2, 1}}, 4) ==
            fundamental(StrongComposition{{1, 2, 1}}, 4));
    REQUIRE(compute_family(FamilyKind::Fundamental, WeakComposition{{0, 0, 0}}, 3) ==
            Polynomial::one(3));
    REQUIRE(compute_family(FamilyKind::SchurViaPi, WeakComposition{{2, 1}}, 3) ==
            schur_oracle(WeakComposition{{2, 1}}, 3));
    REQUIRE_THROWS_AS(compute_family(FamilyKind::Glide, WeakComposition{{0, 2, 1}}, 3),
                      UnsupportedCombination);
    REQUIRE_THROWS_AS(compute_family(FamilyKind::Fundamental, WeakComposition{{1, 2, 1}}),
                      UnsupportedCombination);
    REQUIRE_THROWS_AS(compute_family(FamilyKind::SchurViaPi, WeakComposition{{1, 2}}, 3),
                      PreconditionUnmet);
}

TEST_CASE("demazure and atom composites") {
    Polynomial key = compute_family(FamilyKind::DemazureViaPi, WeakComposition{{0, 2, 1}});
    Polynomial atom = compute_family(FamilyKind::AtomViaTheta, WeakComposition{{0, 2, 1}});
    REQUIRE(key.coeff(Monomial{{0, 2, 1}, 0}) == 1);
    REQUIRE(atom.coeff(Monomial{{0, 2, 1}, 0}) == 1);
    Polynomial diff = key - atom;
    for (const auto& [m, c] : diff.terms()) REQUIRE(c > 0);
    REQUIRE(compute_family(FamilyKind::DemazureViaPi, WeakComposition{{2, 1, 0}}) ==
            poly(3, {{1, 0, {2, 1, 0}}}));
}

TEST_CASE("basis expansion") {
    Polynomial f = glide_poly(WeakComposition{{0, 2, 1}});
    std::vector<WeakComposition> support = {WeakComposition{{0, 2, 1}}, WeakComposition{{2, 0, 1}},
                                            WeakComposition{{2, 1, 0}}};
    auto coeffs = expand_in_basis(f, FamilyKind::Kaon, support);
    REQUIRE(coeffs == std::vector<Rational>{1, 1, 1});

    auto self = expand_in_basis(f, FamilyKind::Glide, {WeakComposition{{0, 2, 1}}});
    REQUIRE(self == std::vector<Rational>{1});

    Polynomial scaled = Int(3) * kaon_poly(WeakComposition{{1, 0}}) -
                        Int(2) * kaon_poly(WeakComposition{{0, 1}});
    auto mixed = expand_in_basis(scaled, FamilyKind::Kaon,
                                 {WeakComposition{{1, 0}}, WeakComposition{{0, 1}}});
    REQUIRE(mixed == std::vector<Rational>{3, -2});

    Polynomial x2 = Polynomial::variable(2, 2);
    REQUIRE_THROWS_AS(expand_in_basis(x2, FamilyKind::Kaon, {WeakComposition{{1, 0}}}), NotInSpan);
    REQUIRE_THROWS_AS(expand_in_basis(x2, FamilyKind::Kaon,
                                      {WeakComposition{{1, 0}}, WeakComposition{{1, 0}}}),
                      SingularSystem);
    REQUIRE_THROWS_AS(expand_in_basis(Polynomial::variable(3, 1), FamilyKind::Kaon,
                                      {WeakComposition{{1, 0}}}),
                      VarCountMismatch);
    REQUIRE_THROWS_AS(expand_in_basis(x2, FamilyKind::Kaon, {}), PreconditionUnmet);
}

TEST_CASE("composition generators") {
    REQUIRE(all_weak_compositions(5, 4).size() == 209);
    REQUIRE(all_strong_compositions(5).size() == 31);
    REQUIRE(all_partitions(5).size() == 18);
    for (const WeakComposition& lambda : all_partitions(5))
        for (int i = 1; i < lambda.length(); ++i)
            REQUIRE(lambda.parts[i - 1] >= lambda.parts[i]);
}

TEST_CASE("suites") {
    SweepOptions opt;
    opt.max_size = 3;
    opt.max_len = 2;
    opt.max_vars = 3;
    opt.max_deg = 2;

    auto main_reports = run_suite(Suite::Main, opt);
    REQUIRE(all_pass(main_reports));

    SweepOptions tiny;
    tiny.max_size = 2;
    tiny.max_len = 2;
    tiny.max_vars = 2;
    tiny.max_deg = 2;
    auto all_reports = run_suite(Suite::All, tiny);
    REQUIRE(all_pass(all_reports));

    opt.jobs = 2;
    auto threaded = run_suite(Suite::Main, opt);
    REQUIRE(threaded.size() == main_reports.size());
    for (std::size_t t = 0; t < threaded.size(); ++t)
        REQUIRE(report_line(threaded[t]) == report_line(main_reports[t]));
}

TEST_CASE("suite names") {
    REQUIRE(suite_from_name("main") == Suite::Main);
    REQUIRE(suite_from_name("hivert") == Suite::Hivert);
    REQUIRE(suite_from_name("classic") == Suite::Classic);
    REQUIRE(suite_from_name("relations") == Suite::Relations);
    REQUIRE(suite_from_name("lemma") == Suite::Lemma);
    REQUIRE(suite_from_name("local-moves") == Suite::LocalMoves);
    REQUIRE(suite_from_name("all") == Suite::All);
    REQUIRE_THROWS_AS(suite_from_name("everything"), ParseError);
}

TEST_CASE("report formatting") {
    CheckReport ok{"main-glide", "a=021", true, ""};
    REQUIRE(report_line(ok) == "[PASS] main-glide a=021");
    CheckReport bad{"main-glide", "a=021", false, "differing terms: [x1: 1 vs 0]"};
    REQUIRE(report_line(bad) == "[FAIL] main-glide a=021: differing terms: [x1: 1 vs 0]");

    auto parsed = nlohmann::json::parse(reports_to_json({ok, bad}));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 2);
    REQUIRE(parsed[0]["check"] == "main-glide");
    REQUIRE(parsed[0]["pass"] == true);
    REQUIRE(parsed[1]["pass"] == false);
    REQUIRE(parsed[1]["detail"] == "differing terms: [x1: 1 vs 0]");
}
