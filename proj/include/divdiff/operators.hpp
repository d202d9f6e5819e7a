#pragma once

#include <array>
#include <string>

#include "errors.hpp"
#include "polynomial.hpp"
#include "words.hpp"

namespace divdiff {

enum class OperatorKind {
    Swap,         // exchange x_i, x_{i+1}
    HivertSwap,   // exchange only on terms missing one of the two variables
    Del,          // (f - swap f) / (x_i - x_{i+1})
    Pi,           // del (x_i f)
    Theta,        // x_{i+1} del f
    HivertDel,    // (f - hswap f) / (x_i - x_{i+1})
    HivertPi,     // (x_i f - x_{i+1} hswap f) / (x_i - x_{i+1})
    HivertTheta,  // hpi f - f
    KPi,          // (x_i f - x_{i+1} hswap f + b x_i x_{i+1} (f - hswap f)) / (x_i - x_{i+1})
    KTheta,       // kpi f - f
};

inline constexpr std::array<OperatorKind, 10> all_operator_kinds = {
    OperatorKind::Swap,      OperatorKind::HivertSwap,  OperatorKind::Del,
    OperatorKind::Pi,        OperatorKind::Theta,       OperatorKind::HivertDel,
    OperatorKind::HivertPi,  OperatorKind::HivertTheta, OperatorKind::KPi,
    OperatorKind::KTheta,
};

inline const char* kind_name(OperatorKind k) {
    switch (k) {
        case OperatorKind::Swap: return "swap";
        case OperatorKind::HivertSwap: return "hswap";
        case OperatorKind::Del: return "del";
        case OperatorKind::Pi: return "pi";
        case OperatorKind::Theta: return "theta";
        case OperatorKind::HivertDel: return "hdel";
        case OperatorKind::HivertPi: return "hpi";
        case OperatorKind::HivertTheta: return "htheta";
        case OperatorKind::KPi: return "kpi";
        case OperatorKind::KTheta: return "ktheta";
    }
    return "?";
}

inline OperatorKind kind_from_name(const std::string& s) {
    for (OperatorKind k : all_operator_kinds)
        if (s == kind_name(k)) return k;
    throw ParseError("unknown operator: '" + s + "'");
}

namespace detail {

// Adds c * x_i^u * x_{i+1}^(total-u) * rest(m) * b^bump for u in [ulo, uhi].
inline void add_run(Polynomial& out, const Monomial& m, const Int& c, int i, int total,
                    int ulo, int uhi, int bump) {
    Monomial t = m;
    t.beta_deg += bump;
    for (int u = ulo; u <= uhi; ++u) {
        t.exps[i - 1] = u;
        t.exps[i] = total - u;
        out.add_term(t, c);
    }
}

}  // namespace detail

// Apply one operator at position i. Every kind acts term by term on the
// exponent pair (A, B) = (deg x_i, deg x_{i+1}) and is the exact quotient of
// its defining numerator by x_i - x_{i+1}; the closed forms below are what
// telescoping that quotient gives on a single term.
inline Polynomial apply(OperatorKind kind, int i, const Polynomial& f) {
    if (i < 1 || i >= f.n_vars()) throw IndexOutOfRange("operator index out of range");
    if (kind == OperatorKind::Swap) return f.swap_vars(i);
    if (kind == OperatorKind::HivertSwap) return f.hivert_swap(i);

    Polynomial out(f.n_vars());
    for (const auto& [m, c] : f.terms()) {
        int A = m.exps[i - 1];
        int B = m.exps[i];
        bool hfixed = (A > 0 && B > 0) || (A == 0 && B == 0);
        switch (kind) {
            case OperatorKind::Del:
                if (A > B)
                    detail::add_run(out, m, c, i, A + B - 1, B, A - 1, 0);
                else if (A < B)
                    detail::add_run(out, m, -c, i, A + B - 1, A, B - 1, 0);
                break;
            case OperatorKind::Pi:
                if (A >= B)
                    detail::add_run(out, m, c, i, A + B, B, A, 0);
                else if (B > A + 1)
                    detail::add_run(out, m, -c, i, A + B, A + 1, B - 1, 0);
                break;
            case OperatorKind::Theta:
                if (A > B)
                    detail::add_run(out, m, c, i, A + B, B, A - 1, 0);
                else if (A < B)
                    detail::add_run(out, m, -c, i, A + B, A, B - 1, 0);
                break;
            case OperatorKind::HivertDel:
                if (hfixed) break;
                if (A > 0)
                    detail::add_run(out, m, c, i, A - 1, 0, A - 1, 0);
                else
                    detail::add_run(out, m, -c, i, B - 1, 0, B - 1, 0);
                break;
            case OperatorKind::HivertPi:
                if (hfixed)
                    out.add_term(m, c);
                else if (A > 0)
                    detail::add_run(out, m, c, i, A, 0, A, 0);
                else
                    detail::add_run(out, m, -c, i, B, 1, B - 1, 0);
                break;
            case OperatorKind::HivertTheta:
                if (hfixed) break;
                if (A > 0)
                    detail::add_run(out, m, c, i, A, 0, A - 1, 0);
                else
                    detail::add_run(out, m, -c, i, B, 0, B - 1, 0);
                break;
            case OperatorKind::KPi:
                if (hfixed) {
                    out.add_term(m, c);
                } else if (A > 0) {
                    detail::add_run(out, m, c, i, A, 0, A, 0);
                    detail::add_run(out, m, c, i, A + 1, 1, A, 1);
                } else {
                    detail::add_run(out, m, -c, i, B, 1, B - 1, 0);
                    detail::add_run(out, m, -c, i, B + 1, 1, B, 1);
                }
                break;
            case OperatorKind::KTheta:
                if (hfixed) break;
                if (A > 0) {
                    detail::add_run(out, m, c, i, A, 0, A - 1, 0);
                    detail::add_run(out, m, c, i, A + 1, 1, A, 1);
                } else {
                    detail::add_run(out, m, -c, i, B, 0, B - 1, 0);
                    detail::add_run(out, m, -c, i, B + 1, 1, B, 1);
                }
                break;
            default:
                break;
        }
    }
    return out;
}

// Apply a composite indexed by a reduced word, rightmost letter first.
inline Polynomial apply_word(OperatorKind kind, const Word& w, const Polynomial& f) {
    for (int l : w)
        if (l < 1 || l >= f.n_vars()) throw IndexOutOfRange("word letter out of range");
    if (!is_reduced(w, f.n_vars())) throw NotReduced("apply_word requires a reduced word");
    Polynomial out = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = apply(kind, *it, out);
    return out;
}

// Same operators computed from their defining numerators via exact division.
// Slower; kept as an independent route for cross-checking the closed forms.
inline Polynomial apply_via_division(OperatorKind kind, int i, const Polynomial& f) {
    if (i < 1 || i >= f.n_vars()) throw IndexOutOfRange("operator index out of range");
    switch (kind) {
        case OperatorKind::Swap:
            return f.swap_vars(i);
        case OperatorKind::HivertSwap:
            return f.hivert_swap(i);
        case OperatorKind::Del:
            return exact_div_diff(f - f.swap_vars(i), i);
        case OperatorKind::Pi: {
            Polynomial g = f.times_var(i);
            return exact_div_diff(g - g.swap_vars(i), i);
        }
        case OperatorKind::Theta:
            return exact_div_diff(f - f.swap_vars(i), i).times_var(i + 1);
        case OperatorKind::HivertDel:
            return exact_div_diff(f - f.hivert_swap(i), i);
        case OperatorKind::HivertPi:
            return exact_div_diff(f.times_var(i) - f.hivert_swap(i).times_var(i + 1), i);
        case OperatorKind::HivertTheta:
            return apply_via_division(OperatorKind::HivertPi, i, f) - f;
        case OperatorKind::KPi: {
            Polynomial diff = f - f.hivert_swap(i);
            Polynomial num = f.times_var(i) - f.hivert_swap(i).times_var(i + 1) +
                             diff.times_var(i).times_var(i + 1).times_beta();
            return exact_div_diff(num, i);
        }
        case OperatorKind::KTheta:
            return apply_via_division(OperatorKind::KPi, i, f) - f;
    }
    throw PreconditionUnmet("unknown operator kind");
}

}  // namespace divdiff
