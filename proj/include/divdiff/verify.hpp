#pragma once

#include <atomic>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "families.hpp"
#include "operators.hpp"
#include "polynomial.hpp"
#include "words.hpp"

namespace divdiff {

struct CheckReport {
    std::string check;
    std::string instance;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline std::string monomial_text(const Monomial& m) {
    return Polynomial::from_exponents(m.exps, m.beta_deg, 1).to_text();
}

inline std::string poly_diff_detail(const Polynomial& lhs, const Polynomial& rhs) {
    std::string out = "differing terms:";
    int shown = 0;
    auto note = [&](const Monomial& m, const Int& a, const Int& b) {
        if (shown >= 12) return;
        out += " [" + monomial_text(m) + ": " + a.str() + " vs " + b.str() + "]";
        ++shown;
    };
    for (const auto& [m, c] : lhs.terms())
        if (rhs.coeff(m) != c) note(m, c, rhs.coeff(m));
    for (const auto& [m, c] : rhs.terms())
        if (lhs.coeff(m) == 0 && c != 0) note(m, 0, c);
    if (shown >= 12) out += " ...";
    return out;
}

inline CheckReport equality_report(std::string check, std::string instance,
                                   const Polynomial& lhs, const Polynomial& rhs) {
    CheckReport r{std::move(check), std::move(instance), lhs == rhs, ""};
    if (!r.pass) r.detail = poly_diff_detail(lhs, rhs);
    return r;
}

inline std::vector<int> padded_flat_exps(const WeakComposition& a, int n) {
    CompStats st = comp_stats(a);
    if (static_cast<int>(st.flat.parts.size()) > n)
        throw PreconditionUnmet("flattened composition longer than variable count");
    std::vector<int> exps = st.flat.parts;
    exps.resize(n, 0);
    return exps;
}

}  // namespace detail

// Semistandard tableau enumerator for the Schur polynomial: rows weakly
// increase, columns strictly increase, entries in 1..n, one monomial per
// tableau by content.
inline Polynomial schur_oracle(const WeakComposition& lambda, int n) {
    check_weak(lambda);
    if (n < 1) throw PreconditionUnmet("need at least one variable");
    for (int i = 1; i < lambda.length(); ++i)
        if (lambda.parts[i - 1] < lambda.parts[i])
            throw PreconditionUnmet("shape must be weakly decreasing");
    std::vector<int> shape;
    for (int p : lambda.parts)
        if (p > 0) shape.push_back(p);
    Polynomial out(n);
    std::vector<std::vector<int>> T(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r) T[r].assign(shape[r], 0);
    std::vector<int> content(n, 0);
    auto rec = [&](auto&& self, std::size_t r, int c) -> void {
        if (r == T.size()) {
            out.add_term(Monomial{content, 0}, 1);
            return;
        }
        std::size_t nr = r;
        int nc = c + 1;
        if (nc >= shape[r]) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, T[r][c - 1]);
        if (r > 0 && c < shape[r - 1]) lo = std::max(lo, T[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            T[r][c] = v;
            ++content[v - 1];
            self(self, nr, nc);
            --content[v - 1];
        }
    };
    if (shape.empty())
        out.add_term(Monomial{content, 0}, 1);
    else
        rec(rec, 0, 0);
    return out;
}

// --- Composite-vs-enumerator checks ----------------------------------------

// Longest-word kpi composite on x^flat(a) equals the multifundamental
// enumerator.
inline CheckReport check_main_multifundamental(const WeakComposition& a, int n) {
    CompStats st = comp_stats(a);
    Polynomial start = Polynomial::from_exponents(detail::padded_flat_exps(a, n));
    Polynomial lhs = apply_word(OperatorKind::KPi, longest_word(n), start);
    Polynomial rhs = multifundamental(st.flat, n);
    return detail::equality_report("main-multifundamental",
                                   "a=" + comp_to_string(a) + " n=" + std::to_string(n), lhs, rhs);
}

// Sorting-word kpi composite on x^flat_padded(a) equals the glide enumerator;
// the beta=0 layer equals the slide enumerator.
inline CheckReport check_main_glide(const WeakComposition& a) {
    Word w = inverse_word(sorting_word_weak(a));
    Polynomial start = Polynomial::from_exponents(flat_padded(a).parts);
    Polynomial lhs = apply_word(OperatorKind::KPi, w, start);
    CheckReport r = detail::equality_report("main-glide", "a=" + comp_to_string(a), lhs,
                                            glide_poly(a));
    if (r.pass) {
        CheckReport r0 = detail::equality_report("main-glide", r.instance,
                                                 lhs.specialize_beta_zero(), slide_poly(a));
        if (!r0.pass) {
            r.pass = false;
            r.detail = "beta=0 layer: " + r0.detail;
        }
    }
    return r;
}

// Sorting-word ktheta composite equals the kaon enumerator; beta=0 layer
// equals the particle enumerator.
inline CheckReport check_main_kaon(const WeakComposition& a) {
    Word w = inverse_word(sorting_word_weak(a));
    Polynomial start = Polynomial::from_exponents(flat_padded(a).parts);
    Polynomial lhs = apply_word(OperatorKind::KTheta, w, start);
    CheckReport r = detail::equality_report("main-kaon", "a=" + comp_to_string(a), lhs,
                                            kaon_poly(a));
    if (r.pass) {
        CheckReport r0 = detail::equality_report("main-kaon", r.instance,
                                                 lhs.specialize_beta_zero(), particle_poly(a));
        if (!r0.pass) {
            r.pass = false;
            r.detail = "beta=0 layer: " + r0.detail;
        }
    }
    return r;
}

inline CheckReport check_hivert_fundamental(const WeakComposition& a, int n) {
    CompStats st = comp_stats(a);
    Polynomial start = Polynomial::from_exponents(detail::padded_flat_exps(a, n));
    Polynomial lhs = apply_word(OperatorKind::HivertPi, longest_word(n), start);
    Polynomial rhs = fundamental(st.flat, n);
    return detail::equality_report("hivert-fundamental",
                                   "a=" + comp_to_string(a) + " n=" + std::to_string(n), lhs, rhs);
}

inline CheckReport check_hivert_slide(const WeakComposition& a) {
    Word w = inverse_word(sorting_word_weak(a));
    Polynomial start = Polynomial::from_exponents(flat_padded(a).parts);
    Polynomial lhs = apply_word(OperatorKind::HivertPi, w, start);
    return detail::equality_report("hivert-slide", "a=" + comp_to_string(a), lhs, slide_poly(a));
}

inline CheckReport check_hivert_particle(const WeakComposition& a) {
    Word w = inverse_word(sorting_word_weak(a));
    Polynomial start = Polynomial::from_exponents(flat_padded(a).parts);
    Polynomial lhs = apply_word(OperatorKind::HivertTheta, w, start);
    return detail::equality_report("hivert-particle", "a=" + comp_to_string(a), lhs,
                                   particle_poly(a));
}

// Longest-word pi composite on a partition monomial against the tableau
// enumerator.
inline CheckReport check_schur(const WeakComposition& lambda, int n) {
    for (int i = 1; i < lambda.length(); ++i)
        if (lambda.parts[i - 1] < lambda.parts[i])
            throw PreconditionUnmet("shape must be weakly decreasing");
    Polynomial start = Polynomial::from_exponents(detail::padded_flat_exps(lambda, n));
    Polynomial lhs = apply_word(OperatorKind::Pi, longest_word(n), start);
    Polynomial rhs = schur_oracle(lambda, n);
    return detail::equality_report("schur-via-pi",
                                   "lambda=" + comp_to_string(lambda) + " n=" + std::to_string(n),
                                   lhs, rhs);
}

// Structural facts about the pi/theta composites along the partition sorting
// word: both are beta-free with nonnegative coefficients, take coefficient 1
// on x^a, and their difference is nonnegative.
inline CheckReport check_key_structural(const WeakComposition& a) {
    check_weak(a);
    Word w = inverse_word(sorting_word_partition(a));
    Polynomial start = Polynomial::from_exponents(sort_decreasing(a).parts);
    Polynomial key = apply_word(OperatorKind::Pi, w, start);
    Polynomial atom = apply_word(OperatorKind::Theta, w, start);
    CheckReport r{"key-atom-structural", "a=" + comp_to_string(a), true, ""};
    auto fail = [&](const std::string& why) {
        r.pass = false;
        if (!r.detail.empty()) r.detail += "; ";
        r.detail += why;
    };
    for (const auto& [m, c] : key.terms()) {
        if (m.beta_deg != 0) fail("key has a beta term " + detail::monomial_text(m));
        if (c < 0) fail("key has negative coefficient on " + detail::monomial_text(m));
    }
    for (const auto& [m, c] : atom.terms()) {
        if (m.beta_deg != 0) fail("atom has a beta term " + detail::monomial_text(m));
        if (c < 0) fail("atom has negative coefficient on " + detail::monomial_text(m));
    }
    Monomial lead{a.parts, 0};
    if (key.coeff(lead) != 1) fail("key coefficient on x^a is " + key.coeff(lead).str());
    if (atom.coeff(lead) != 1) fail("atom coefficient on x^a is " + atom.coeff(lead).str());
    Polynomial diff = key - atom;
    for (const auto& [m, c] : diff.terms())
        if (c < 0) {
            fail("key minus atom negative on " + detail::monomial_text(m));
            break;
        }
    return r;
}

inline CheckReport check_slide_dual(const WeakComposition& a) {
    return detail::equality_report("slide-dual", "a=" + comp_to_string(a), slide_poly(a),
                                   slide_poly_dominance(a));
}

// One kpi/ktheta step across each zero-nonzero adjacency: for every i with
// a_i = 0 and a_{i+1} > 0 and a' the swap, the glide polynomial of a is kpi_i
// of the glide polynomial of a', and likewise ktheta for kaon.
inline CheckReport check_local_moves(const WeakComposition& a) {
    check_weak(a);
    if (a == flat_padded(a))
        throw PreconditionUnmet("composition is flat-padded; no local move applies");
    CheckReport r{"local-moves", "a=" + comp_to_string(a), true, ""};
    for (int i = 1; i < a.length(); ++i) {
        if (!(a.parts[i - 1] == 0 && a.parts[i] > 0)) continue;
        WeakComposition ap = a;
        std::swap(ap.parts[i - 1], ap.parts[i]);
        Polynomial glhs = glide_poly(a);
        Polynomial grhs = apply(OperatorKind::KPi, i, glide_poly(ap));
        if (glhs != grhs) {
            r.pass = false;
            r.detail = "glide move i=" + std::to_string(i) + ": " +
                       detail::poly_diff_detail(glhs, grhs);
            break;
        }
        Polynomial klhs = kaon_poly(a);
        Polynomial krhs = apply(OperatorKind::KTheta, i, kaon_poly(ap));
        if (klhs != krhs) {
            r.pass = false;
            r.detail = "kaon move i=" + std::to_string(i) + ": " +
                       detail::poly_diff_detail(klhs, krhs);
            break;
        }
    }
    return r;
}

// Partial longest-word composites against restricted enumerators: applying
// the k rightmost letters [n-k .. n-1] to the (n-1)-variable multifundamental
// (embedded in n variables) matches the set sequences over {1..n} whose set
// number a_1 + ... + a_(l-k) has maximum at most n-k-1; k = l lifts the
// restriction entirely.
inline std::vector<CheckReport> check_lemma_partial(const StrongComposition& a, int n) {
    check_strong(a);
    int l = a.length();
    if (n < l + 1) throw PreconditionUnmet("need n > length(a)");
    std::vector<CheckReport> out;
    Polynomial base = multifundamental(a, n - 1).embed(n);
    for (int k = 0; k <= l; ++k) {
        Word w;
        for (int j = n - k; j <= n - 1; ++j) w.push_back(j);
        Polynomial lhs = apply_word(OperatorKind::KPi, w, base);
        int set_index = 0;
        for (int j = 0; j < l - k; ++j) set_index += a.parts[j];
        Polynomial rhs = multifundamental_restricted(a, n, set_index, n - k - 1);
        out.push_back(detail::equality_report(
            "lemma-partial",
            "a=" + comp_to_string(a) + " n=" + std::to_string(n) + " k=" + std::to_string(k),
            lhs, rhs));
    }
    return out;
}

// --- Operator relation suite ----------------------------------------------

namespace detail {

inline std::vector<Polynomial> basis_monomials(int n, int max_deg) {
    std::vector<Polynomial> out;
    std::vector<int> exps(n, 0);
    auto rec = [&](auto&& self, int j, int left) -> void {
        if (j == n) {
            out.push_back(Polynomial::from_exponents(exps));
            return;
        }
        for (int e = 0; e <= left; ++e) {
            exps[j] = e;
            self(self, j + 1, left - e);
        }
        exps[j] = 0;
    };
    rec(rec, 0, max_deg);
    return out;
}

}  // namespace detail

// Exhaustive relation checks over all monomials of x-degree <= max_deg in n
// variables: squaring laws, braid relations for the kinds satisfying them,
// vanishing ktheta triple products, distant commutations, pointwise
// identities tying the kinds together, beta=0 specializations, antisymmetry
// on pure powers, and agreement of the closed forms with the exact-division
// route.
inline std::vector<CheckReport> check_relations(int n, int max_deg) {
    if (n < 2) throw PreconditionUnmet("relations need at least two variables");
    if (n > 8) throw TooLarge("relation sweep supports up to 8 variables");
    std::vector<Polynomial> basis = detail::basis_monomials(n, max_deg);
    std::string inst = "n=" + std::to_string(n) + " deg<=" + std::to_string(max_deg);
    std::vector<CheckReport> out;
    auto fail_text = [](OperatorKind k, int i, const Polynomial& m) {
        return std::string(kind_name(k)) + " i=" + std::to_string(i) + " on " + m.to_text();
    };

    {
        CheckReport r{"relations-squares", inst, true, ""};
        for (const Polynomial& m : basis) {
            for (int i = 1; i < n && r.pass; ++i) {
                for (OperatorKind k : all_operator_kinds) {
                    Polynomial once = apply(k, i, m);
                    Polynomial twice = apply(k, i, once);
                    Polynomial expect(n);
                    switch (k) {
                        case OperatorKind::Swap:
                        case OperatorKind::HivertSwap: expect = m; break;
                        case OperatorKind::Del:
                        case OperatorKind::HivertDel: break;  // zero
                        case OperatorKind::Pi:
                        case OperatorKind::HivertPi:
                        case OperatorKind::KPi: expect = once; break;
                        case OperatorKind::Theta:
                        case OperatorKind::HivertTheta:
                        case OperatorKind::KTheta: expect = -once; break;
                    }
                    if (twice != expect) {
                        r.pass = false;
                        r.detail = "square law: " + fail_text(k, i, m);
                        break;
                    }
                }
            }
            if (!r.pass) break;
        }
        out.push_back(std::move(r));
    }

    {
        const OperatorKind braid_kinds[] = {OperatorKind::Swap,       OperatorKind::HivertSwap,
                                            OperatorKind::Del,        OperatorKind::Pi,
                                            OperatorKind::Theta,      OperatorKind::HivertPi,
                                            OperatorKind::HivertTheta, OperatorKind::KPi};
        CheckReport r{"relations-braids", inst, true, ""};
        for (const Polynomial& m : basis) {
            for (int i = 1; i + 1 < n && r.pass; ++i) {
                for (OperatorKind k : braid_kinds) {
                    Polynomial aba = apply(k, i, apply(k, i + 1, apply(k, i, m)));
                    Polynomial bab = apply(k, i + 1, apply(k, i, apply(k, i + 1, m)));
                    if (aba != bab) {
                        r.pass = false;
                        r.detail = "braid: " + fail_text(k, i, m);
                        break;
                    }
                }
            }
            if (!r.pass) break;
        }
        out.push_back(std::move(r));
    }

    {
        CheckReport r{"relations-ktheta-triples", inst, true, ""};
        for (const Polynomial& m : basis) {
            for (int i = 1; i + 1 < n && r.pass; ++i) {
                OperatorKind k = OperatorKind::KTheta;
                Polynomial aba = apply(k, i, apply(k, i + 1, apply(k, i, m)));
                Polynomial bab = apply(k, i + 1, apply(k, i, apply(k, i + 1, m)));
                if (!aba.is_zero() || !bab.is_zero()) {
                    r.pass = false;
                    r.detail = "triple product nonzero: " + fail_text(k, i, m);
                }
            }
            if (!r.pass) break;
        }
        out.push_back(std::move(r));
    }

    {
        CheckReport r{"relations-commutation", inst, true, ""};
        for (const Polynomial& m : basis) {
            for (int i = 1; i < n && r.pass; ++i) {
                for (int j = i + 2; j < n && r.pass; ++j) {
                    for (OperatorKind k : all_operator_kinds) {
                        Polynomial ij = apply(k, i, apply(k, j, m));
                        Polynomial ji = apply(k, j, apply(k, i, m));
                        if (ij != ji) {
                            r.pass = false;
                            r.detail = "commutation j=" + std::to_string(j) + ": " +
                                       fail_text(k, i, m);
                            break;
                        }
                    }
                }
            }
            if (!r.pass) break;
        }
        out.push_back(std::move(r));
    }

    {
        CheckReport r{"relations-pointwise", inst, true, ""};
        for (const Polynomial& m : basis) {
            for (int i = 1; i < n && r.pass; ++i) {
                Polynomial del = apply(OperatorKind::Del, i, m);
                Polynomial hdel = apply(OperatorKind::HivertDel, i, m);
                Polynomial theta = apply(OperatorKind::Theta, i, m);
                Polynomial htheta = apply(OperatorKind::HivertTheta, i, m);
                Polynomial ktheta = apply(OperatorKind::KTheta, i, m);
                bool ok = apply(OperatorKind::Pi, i, m) == theta + m &&
                          apply(OperatorKind::HivertPi, i, m) == htheta + m &&
                          apply(OperatorKind::KPi, i, m) == ktheta + m &&
                          theta == del.times_var(i + 1) &&
                          htheta == hdel.times_var(i + 1) &&
                          ktheta == hdel.times_var(i + 1) +
                                        hdel.times_var(i + 1).times_var(i).times_beta();
                if (!ok) {
                    r.pass = false;
                    r.detail = "pointwise identity at i=" + std::to_string(i) + " on " +
                               m.to_text();
                }
            }
            if (!r.pass) break;
        }
        out.push_back(std::move(r));
    }

    {
        CheckReport r{"relations-beta-zero", inst, true, ""};
        for (const Polynomial& m : basis) {
            for (int i = 1; i < n && r.pass; ++i) {
                bool ok = apply(OperatorKind::KPi, i, m).specialize_beta_zero() ==
                              apply(OperatorKind::HivertPi, i, m) &&
                          apply(OperatorKind::KTheta, i, m).specialize_beta_zero() ==
                              apply(OperatorKind::HivertTheta, i, m);
                if (!ok) {
                    r.pass = false;
                    r.detail = "beta=0 specialization at i=" + std::to_string(i) + " on " +
                               m.to_text();
                }
            }
            if (!r.pass) break;
        }
        out.push_back(std::move(r));
    }

    {
        CheckReport r{"relations-antisymmetry", inst, true, ""};
        for (int i = 1; i < n && r.pass; ++i) {
            for (int a = 1; a <= max_deg && r.pass; ++a) {
                std::vector<int> ei(n, 0), ej(n, 0);
                ei[i - 1] = a;
                ej[i] = a;
                Polynomial xi = Polynomial::from_exponents(ei);
                Polynomial xj = Polynomial::from_exponents(ej);
                for (OperatorKind k :
                     {OperatorKind::Del, OperatorKind::HivertDel, OperatorKind::KTheta}) {
                    if (apply(k, i, xj) != -apply(k, i, xi)) {
                        r.pass = false;
                        r.detail = "antisymmetry: " + fail_text(k, i, xi);
                        break;
                    }
                }
            }
        }
        out.push_back(std::move(r));
    }

    {
        CheckReport r{"relations-division-route", inst, true, ""};
        for (const Polynomial& m : basis) {
            for (int i = 1; i < n && r.pass; ++i) {
                for (OperatorKind k : all_operator_kinds) {
                    if (apply(k, i, m) != apply_via_division(k, i, m)) {
                        r.pass = false;
                        r.detail = "division route: " + fail_text(k, i, m);
                        break;
                    }
                }
            }
            if (!r.pass) break;
        }
        out.push_back(std::move(r));
    }

    return out;
}

// Composites indexed by a permutation are word-independent: every reduced
// word of every permutation of S4 gives the same operator, checked on all
// monomials of degree <= 3.
inline CheckReport check_word_independence() {
    std::vector<Polynomial> basis = detail::basis_monomials(4, 3);
    CheckReport r{"word-independence", "S4 deg<=3", true, ""};
    for (const Permutation& p : all_permutations(4)) {
        std::vector<Word> words = all_reduced_words(p);
        if (words.size() < 2) continue;
        for (OperatorKind k : {OperatorKind::Pi, OperatorKind::Theta, OperatorKind::HivertPi,
                               OperatorKind::HivertTheta, OperatorKind::KPi,
                               OperatorKind::KTheta}) {
            for (const Polynomial& m : basis) {
                Polynomial ref = apply_word(k, words[0], m);
                for (std::size_t t = 1; t < words.size(); ++t) {
                    if (apply_word(k, words[t], m) != ref) {
                        r.pass = false;
                        r.detail = std::string(kind_name(k)) + " differs between words of [";
                        for (int v : p.one_line) r.detail += std::to_string(v);
                        r.detail += "] on " + m.to_text();
                        return r;
                    }
                }
            }
        }
    }
    return r;
}

// --- Family evaluation and basis expansion --------------------------------

// Evaluate one family member. nvars is required for F, Fbar, and
// schur-via-pi and must be 0 for the rest ("the composition length is the
// variable count").
inline Polynomial compute_family(FamilyKind kind, const WeakComposition& comp, int nvars = 0) {
    check_weak(comp);
    if (family_takes_nvars(kind)) {
        if (nvars < 1)
            throw UnsupportedCombination(std::string(family_name(kind)) +
                                         " requires a variable count");
    } else if (nvars != 0) {
        throw UnsupportedCombination(std::string(family_name(kind)) +
                                     " fixes the variable count to the composition length");
    }
    switch (kind) {
        case FamilyKind::Fundamental:
            return fundamental(comp_stats(comp).flat, nvars);
        case FamilyKind::Multifundamental:
            return multifundamental(comp_stats(comp).flat, nvars);
        case FamilyKind::Slide:
            return slide_poly(comp);
        case FamilyKind::Glide:
            return glide_poly(comp);
        case FamilyKind::Particle:
            return particle_poly(comp);
        case FamilyKind::Kaon:
            return kaon_poly(comp);
        case FamilyKind::SchurViaPi: {
            for (int i = 1; i < comp.length(); ++i)
                if (comp.parts[i - 1] < comp.parts[i])
                    throw PreconditionUnmet("schur-via-pi needs a weakly decreasing composition");
            Polynomial start = Polynomial::from_exponents(detail::padded_flat_exps(comp, nvars));
            return apply_word(OperatorKind::Pi, longest_word(nvars), start);
        }
        case FamilyKind::DemazureViaPi: {
            Word w = inverse_word(sorting_word_partition(comp));
            return apply_word(OperatorKind::Pi, w,
                              Polynomial::from_exponents(sort_decreasing(comp).parts));
        }
        case FamilyKind::AtomViaTheta: {
            Word w = inverse_word(sorting_word_partition(comp));
            return apply_word(OperatorKind::Theta, w,
                              Polynomial::from_exponents(sort_decreasing(comp).parts));
        }
    }
    throw PreconditionUnmet("unknown family kind");
}

// Exact coordinates of f in the span of the given family members. Raises
// SingularSystem if the members are linearly dependent (checked first),
// NotInSpan if f lies outside their span.
inline std::vector<Rational> expand_in_basis(const Polynomial& f, FamilyKind basis,
                                             const std::vector<WeakComposition>& support,
                                             int nvars = 0) {
    if (support.empty()) throw PreconditionUnmet("empty support");
    std::vector<Polynomial> gens;
    gens.reserve(support.size());
    for (const WeakComposition& a : support) {
        Polynomial g = compute_family(basis, a, nvars);
        if (g.n_vars() != f.n_vars())
            throw VarCountMismatch("basis member arity differs from the target");
        gens.push_back(std::move(g));
    }
    std::set<Monomial> rows_set;
    for (const auto& [m, c] : f.terms()) rows_set.insert(m);
    for (const Polynomial& g : gens)
        for (const auto& [m, c] : g.terms()) rows_set.insert(m);
    std::vector<Monomial> rows(rows_set.begin(), rows_set.end());
    std::size_t R = rows.size(), C = gens.size();
    std::vector<std::vector<Rational>> M(R, std::vector<Rational>(C + 1));
    for (std::size_t r = 0; r < R; ++r) {
        for (std::size_t c = 0; c < C; ++c) M[r][c] = Rational(gens[c].coeff(rows[r]));
        M[r][C] = Rational(f.coeff(rows[r]));
    }
    std::vector<std::size_t> pivot_row(C);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < C; ++c) {
        std::size_t sel = R;
        for (std::size_t r = rank; r < R; ++r)
            if (M[r][c] != 0) {
                sel = r;
                break;
            }
        if (sel == R) throw SingularSystem("basis members are linearly dependent");
        std::swap(M[rank], M[sel]);
        Rational inv = M[rank][c];
        for (std::size_t t = c; t <= C; ++t) M[rank][t] /= inv;
        for (std::size_t r = 0; r < R; ++r) {
            if (r == rank || M[r][c] == 0) continue;
            Rational factor = M[r][c];
            for (std::size_t t = c; t <= C; ++t) M[r][t] -= factor * M[rank][t];
        }
        pivot_row[c] = rank;
        ++rank;
    }
    for (std::size_t r = rank; r < R; ++r)
        if (M[r][C] != 0) throw NotInSpan("target is outside the span of the support");
    std::vector<Rational> coeffs(C);
    for (std::size_t c = 0; c < C; ++c) coeffs[c] = M[pivot_row[c]][C];
    return coeffs;
}

// --- Suites ----------------------------------------------------------------

enum class Suite { Main, Hivert, Classic, Relations, Lemma, LocalMoves, All };

inline Suite suite_from_name(const std::string& s) {
    if (s == "main") return Suite::Main;
    if (s == "hivert") return Suite::Hivert;
    if (s == "classic") return Suite::Classic;
    if (s == "relations") return Suite::Relations;
    if (s == "lemma") return Suite::Lemma;
    if (s == "local-moves") return Suite::LocalMoves;
    if (s == "all") return Suite::All;
    throw ParseError("unknown suite: '" + s + "'");
}

struct SweepOptions {
    int max_size = 5;
    int max_len = 4;
    int max_vars = 5;
    int max_deg = 4;
    int jobs = 1;
};

inline std::vector<WeakComposition> all_weak_compositions(int max_size, int max_len) {
    std::vector<WeakComposition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int len, int pos, int left) -> void {
        if (pos == len) {
            out.push_back(WeakComposition{parts});
            return;
        }
        for (int v = 0; v <= left; ++v) {
            parts[pos] = v;
            self(self, len, pos + 1, left - v);
        }
        parts[pos] = 0;
    };
    for (int len = 1; len <= max_len; ++len) {
        parts.assign(len, 0);
        rec(rec, len, 0, max_size);
    }
    return out;
}

inline std::vector<StrongComposition> all_strong_compositions(int max_size) {
    std::vector<StrongComposition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int left) -> void {
        if (!parts.empty()) out.push_back(StrongComposition{parts});
        for (int v = 1; v <= left; ++v) {
            parts.push_back(v);
            self(self, left - v);
            parts.pop_back();
        }
    };
    rec(rec, max_size);
    return out;
}

inline std::vector<WeakComposition> all_partitions(int max_size) {
    std::vector<WeakComposition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int left, int cap) -> void {
        if (!parts.empty()) out.push_back(WeakComposition{parts});
        for (int v = std::min(cap, left); v >= 1; --v) {
            parts.push_back(v);
            self(self, left - v, v);
            parts.pop_back();
        }
    };
    rec(rec, max_size, max_size);
    return out;
}

inline std::vector<CheckReport> run_suite(Suite suite, const SweepOptions& opt) {
    std::vector<std::function<std::vector<CheckReport>()>> tasks;
    auto one = [](CheckReport r) { return std::vector<CheckReport>{std::move(r)}; };

    auto add_main = [&] {
        for (const WeakComposition& a : all_weak_compositions(opt.max_size, opt.max_len)) {
            tasks.push_back([a, one] { return one(check_main_glide(a)); });
            tasks.push_back([a, one] { return one(check_main_kaon(a)); });
        }
        for (const StrongComposition& s : all_strong_compositions(opt.max_size)) {
            WeakComposition a{s.parts};
            for (int n = s.length(); n <= opt.max_vars; ++n)
                tasks.push_back([a, n, one] { return one(check_main_multifundamental(a, n)); });
        }
    };
    auto add_hivert = [&] {
        for (const WeakComposition& a : all_weak_compositions(opt.max_size, opt.max_len)) {
            tasks.push_back([a, one] { return one(check_hivert_slide(a)); });
            tasks.push_back([a, one] { return one(check_hivert_particle(a)); });
            tasks.push_back([a, one] { return one(check_slide_dual(a)); });
        }
        for (const StrongComposition& s : all_strong_compositions(opt.max_size)) {
            WeakComposition a{s.parts};
            for (int n = s.length(); n <= opt.max_vars; ++n)
                tasks.push_back([a, n, one] { return one(check_hivert_fundamental(a, n)); });
        }
    };
    auto add_classic = [&] {
        for (const WeakComposition& lambda : all_partitions(opt.max_size)) {
            for (int n = lambda.length(); n <= opt.max_vars; ++n)
                tasks.push_back([lambda, n, one] { return one(check_schur(lambda, n)); });
        }
        for (const WeakComposition& a : all_weak_compositions(opt.max_size, opt.max_len))
            tasks.push_back([a, one] { return one(check_key_structural(a)); });
    };
    auto add_relations = [&] {
        tasks.push_back([opt] { return check_relations(opt.max_vars, opt.max_deg); });
        tasks.push_back([one] { return one(check_word_independence()); });
    };
    auto add_lemma = [&] {
        for (const StrongComposition& s : all_strong_compositions(opt.max_size))
            for (int n = s.length() + 1; n <= opt.max_vars; ++n)
                tasks.push_back([s, n] { return check_lemma_partial(s, n); });
    };
    auto add_local_moves = [&] {
        for (const WeakComposition& a : all_weak_compositions(opt.max_size, opt.max_len)) {
            if (a == flat_padded(a)) continue;
            tasks.push_back([a, one] { return one(check_local_moves(a)); });
        }
    };

    switch (suite) {
        case Suite::Main: add_main(); break;
        case Suite::Hivert: add_hivert(); break;
        case Suite::Classic: add_classic(); break;
        case Suite::Relations: add_relations(); break;
        case Suite::Lemma: add_lemma(); break;
        case Suite::LocalMoves: add_local_moves(); break;
        case Suite::All:
            add_main();
            add_hivert();
            add_classic();
            add_relations();
            add_lemma();
            add_local_moves();
            break;
    }

    std::vector<std::vector<CheckReport>> results(tasks.size());
    auto run_task = [&](std::size_t t) {
        try {
            results[t] = tasks[t]();
        } catch (const std::exception& e) {
            results[t] = {CheckReport{"exception", "", false, e.what()}};
        }
    };
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || tasks.size() < 2) {
        for (std::size_t t = 0; t < tasks.size(); ++t) run_task(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t t = next.fetch_add(1);
                    if (t >= tasks.size()) return;
                    run_task(t);
                }
            });
        for (auto& th : pool) th.join();
    }
    std::vector<CheckReport> out;
    for (auto& rs : results)
        for (auto& r : rs) out.push_back(std::move(r));
    return out;
}

inline std::string report_line(const CheckReport& r) {
    std::string line = r.pass ? "[PASS] " : "[FAIL] ";
    line += r.check;
    if (!r.instance.empty()) line += " " + r.instance;
    if (!r.pass && !r.detail.empty()) line += ": " + r.detail;
    return line;
}

inline std::string reports_to_json(const std::vector<CheckReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckReport& r : reports) {
        nlohmann::ordered_json o;
        o["check"] = r.check;
        o["instance"] = r.instance;
        o["pass"] = r.pass;
        o["detail"] = r.detail;
        arr.push_back(std::move(o));
    }
    return arr.dump(2);
}

}  // namespace divdiff
