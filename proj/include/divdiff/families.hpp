#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "words.hpp"

namespace divdiff {

// Sequence of nonempty subsets S_1, ..., S_k of {1..n} with
// max(S_b) <= min(S_{b+1}), strict at prescribed positions b.
struct SetSequence {
    std::vector<std::vector<int>> sets;

    int excess() const {
        int e = 0;
        for (const auto& s : sets) e += static_cast<int>(s.size()) - 1;
        return e;
    }
    std::vector<int> content(int n) const {
        std::vector<int> exps(n, 0);
        for (const auto& s : sets)
            for (int j : s) ++exps[j - 1];
        return exps;
    }
    std::string to_string() const {
        int mx = 0;
        for (const auto& s : sets)
            for (int j : s) mx = std::max(mx, j);
        std::string out;
        for (std::size_t b = 0; b < sets.size(); ++b) {
            if (b) out += "|";
            for (std::size_t t = 0; t < sets[b].size(); ++t) {
                if (t && mx > 9) out += ",";
                out += std::to_string(sets[b][t]);
            }
        }
        return out;
    }
    friend bool operator<(const SetSequence& a, const SetSequence& b) {
        if (a.excess() != b.excess()) return a.excess() < b.excess();
        return a.sets < b.sets;
    }
};

namespace detail {

inline void set_sequences_rec(const std::vector<bool>& strict_after, int n, int b, int lo,
                              int restrict_index, int restrict_max,
                              std::vector<std::vector<int>>& acc,
                              std::vector<SetSequence>& out) {
    int k = static_cast<int>(strict_after.size());
    if (b > k) {
        out.push_back(SetSequence{acc});
        return;
    }
    if (lo > n) return;
    int width = n - lo + 1;
    for (unsigned mask = 1; mask < (1u << width); ++mask) {
        std::vector<int> s;
        for (int t = 0; t < width; ++t)
            if (mask & (1u << t)) s.push_back(lo + t);
        if (b == restrict_index && s.back() > restrict_max) continue;
        int next_lo = s.back() + (strict_after[b - 1] ? 1 : 0);
        acc.push_back(std::move(s));
        set_sequences_rec(strict_after, n, b + 1, next_lo, restrict_index, restrict_max, acc, out);
        acc.pop_back();
    }
}

inline std::vector<bool> strict_flags(const StrongComposition& a) {
    // strict_after[b-1] says the step from S_b to S_{b+1} must be strict,
    // which happens exactly at the proper partial sums of a.
    int k = a.size();
    std::vector<bool> flags(k, false);
    int run = 0;
    for (std::size_t j = 0; j + 1 < a.parts.size(); ++j) {
        run += a.parts[j];
        flags[run - 1] = true;
    }
    return flags;
}

}  // namespace detail

// All set sequences for a strong composition a over {1..n}; restrict_index
// > 0 further imposes max(S_restrict_index) <= restrict_max. Sorted by
// (excess, sets).
inline std::vector<SetSequence> enumerate_set_sequences(const StrongComposition& a, int n,
                                                        int restrict_index = 0,
                                                        int restrict_max = 0) {
    check_strong(a);
    if (n < 1) throw PreconditionUnmet("need at least one variable");
    if (n > 16) throw TooLarge("set-sequence enumeration supports up to 16 values");
    std::vector<SetSequence> out;
    std::vector<std::vector<int>> acc;
    detail::set_sequences_rec(detail::strict_flags(a), n, 1, 1, restrict_index, restrict_max,
                              acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

// Singleton set sequences only, i.e. weakly increasing index sequences with
// strict rises at the proper partial sums of a.
inline std::vector<SetSequence> enumerate_index_sequences(const StrongComposition& a, int n) {
    std::vector<SetSequence> all = enumerate_set_sequences(a, n);
    std::vector<SetSequence> out;
    for (auto& s : all)
        if (s.excess() == 0) out.push_back(std::move(s));
    return out;
}

inline Polynomial fundamental(const StrongComposition& a, int n) {
    Polynomial p(n);
    for (const SetSequence& s : enumerate_index_sequences(a, n))
        p.add_term(Monomial{s.content(n), 0}, 1);
    return p;
}

inline Polynomial multifundamental(const StrongComposition& a, int n) {
    Polynomial p(n);
    for (const SetSequence& s : enumerate_set_sequences(a, n))
        p.add_term(Monomial{s.content(n), s.excess()}, 1);
    return p;
}

// Multifundamental restricted to sequences with max(S_set_index) <= max_bound
// (set_index = 0 means no restriction).
inline Polynomial multifundamental_restricted(const StrongComposition& a, int n, int set_index,
                                              int max_bound) {
    Polynomial p(n);
    for (const SetSequence& s : enumerate_set_sequences(a, n, set_index, max_bound))
        p.add_term(Monomial{s.content(n), s.excess()}, 1);
    return p;
}

struct KompEntry {
    int value = 0;
    bool red = false;
    friend bool operator==(const KompEntry& a, const KompEntry& b) {
        return a.value == b.value && a.red == b.red;
    }
    friend bool operator<(const KompEntry& a, const KompEntry& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.red < b.red;
    }
};

// Weak composition with some entries marked; marked entries are the ones a
// glide move duplicated, and each contributes one power of b.
struct Komposition {
    std::vector<KompEntry> entries;

    int excess() const {
        int e = 0;
        for (const auto& x : entries) e += x.red ? 1 : 0;
        return e;
    }
    std::vector<int> values() const {
        std::vector<int> v;
        v.reserve(entries.size());
        for (const auto& x : entries) v.push_back(x.value);
        return v;
    }
    friend bool operator==(const Komposition& a, const Komposition& b) {
        return a.entries == b.entries;
    }
    friend bool operator<(const Komposition& a, const Komposition& b) {
        return a.entries < b.entries;
    }
};

struct GlideWitness {
    Komposition komp;
    std::vector<int> block_ends;  // 1-based, strictly increasing

    // "2|1r1": entries in position order, 'r' prefixes marked entries, '|'
    // after each block end that is not the final position. Entries are
    // comma-separated once any value needs more than one digit.
    std::string to_string() const {
        int mx = 0;
        for (const auto& x : komp.entries) mx = std::max(mx, x.value);
        std::string out;
        int L = static_cast<int>(komp.entries.size());
        for (int p = 1; p <= L; ++p) {
            if (p > 1 && mx > 9 && out.back() != '|') out += ",";
            const auto& x = komp.entries[p - 1];
            if (x.red) out += "r";
            out += std::to_string(x.value);
            if (p < L && std::find(block_ends.begin(), block_ends.end(), p) != block_ends.end())
                out += "|";
        }
        return out;
    }
};

namespace detail {

// Fillings of one block occupying positions s..e (1-based) of a length-L
// komposition: nonzero values only at positions <= nz_limit, the first
// nonzero entry never marked, zero entries never marked, marked count r
// solving (sum of values) - r = target, and at least one nonzero entry. When
// require_last_nonzero is set the entry at position e must be nonzero.
inline void block_fillings(int s, int e, int nz_limit, int target, bool require_last_nonzero,
                           std::vector<std::vector<KompEntry>>& out) {
    int hi = std::min(e, nz_limit);
    if (hi < s) return;
    int f = hi - s + 1;
    int tail_zeros = e - hi;
    int max_sum = target + f - 1;
    std::vector<int> vals(f, 0);
    auto emit = [&](int total) {
        int r = total - target;
        if (r < 0) return;
        std::vector<int> nz;
        for (int t = 0; t < f; ++t)
            if (vals[t] > 0) nz.push_back(t);
        if (nz.empty()) return;
        if (require_last_nonzero && vals[f - 1] == 0) return;
        int markable = static_cast<int>(nz.size()) - 1;
        if (r > markable) return;
        for (unsigned mask = 0; mask < (1u << markable); ++mask) {
            if (__builtin_popcount(mask) != r) continue;
            std::vector<KompEntry> block(e - s + 1);
            for (int t = 0; t < f; ++t) block[t].value = vals[t];
            for (int t = 0; t < markable; ++t)
                if (mask & (1u << t)) block[nz[t + 1]].red = true;
            for (int t = 0; t < tail_zeros; ++t) block[f + t] = KompEntry{0, false};
            out.push_back(std::move(block));
        }
    };
    // enumerate vals with sum <= max_sum
    std::vector<int> stack;
    auto rec = [&](auto&& self, int idx, int sum) -> void {
        if (idx == f) {
            emit(sum);
            return;
        }
        for (int v = 0; sum + v <= max_sum; ++v) {
            vals[idx] = v;
            self(self, idx + 1, sum + v);
        }
        vals[idx] = 0;
    };
    rec(rec, 0, 0);
}

}  // namespace detail

// Kompositions obtained from a by glide moves, each with its canonical
// witness: block ends e_1 < ... < e_l = len(a) covering all positions, block
// j holding the j-th nonzero part of a with its nonzero entries confined to
// positions <= i_j (the j-th nonzero position of a). Kompositions reachable
// through several block structures are listed once, keeping the
// lexicographically smallest block-end vector. Sorted by (excess, entries).
inline std::vector<GlideWitness> enumerate_glides(const WeakComposition& a) {
    CompStats st = comp_stats(a);
    int L = a.length();
    if (L < 1) throw PreconditionUnmet("composition must have at least one part");
    int l = static_cast<int>(st.nonzero_positions.size());
    std::map<Komposition, GlideWitness> seen;
    if (l == 0) {
        Komposition k;
        k.entries.assign(L, KompEntry{0, false});
        return {GlideWitness{k, {}}};
    }
    std::vector<KompEntry> entries;
    std::vector<int> ends;
    auto rec = [&](auto&& self, int j, int prev_end) -> void {
        if (j > l) {
            seen.emplace(Komposition{entries}, GlideWitness{Komposition{entries}, ends});
            return;
        }
        int s = prev_end + 1;
        if (s > st.nonzero_positions[j - 1]) return;
        int e_min = (j == l) ? L : s;
        int e_max = (j == l) ? L : std::min(L - (l - j), st.nonzero_positions[j] - 1);
        for (int e = e_min; e <= e_max; ++e) {
            std::vector<std::vector<KompEntry>> fills;
            detail::block_fillings(s, e, st.nonzero_positions[j - 1], st.flat.parts[j - 1],
                                   false, fills);
            for (auto& block : fills) {
                entries.insert(entries.end(), block.begin(), block.end());
                ends.push_back(e);
                self(self, j + 1, e);
                ends.pop_back();
                entries.resize(entries.size() - block.size());
            }
        }
    };
    rec(rec, 1, 0);
    std::vector<GlideWitness> out;
    out.reserve(seen.size());
    for (auto& [k, w] : seen) out.push_back(std::move(w));
    std::stable_sort(out.begin(), out.end(), [](const GlideWitness& x, const GlideWitness& y) {
        return x.komp.excess() < y.komp.excess();
    });
    return out;
}

// Mesonic kompositions: block ends forced at the nonzero positions of a, the
// j-th block's rightmost nonzero entry exactly at i_j, zeros beyond i_l.
inline std::vector<GlideWitness> enumerate_mesonic(const WeakComposition& a) {
    CompStats st = comp_stats(a);
    int L = a.length();
    if (L < 1) throw PreconditionUnmet("composition must have at least one part");
    int l = static_cast<int>(st.nonzero_positions.size());
    if (l == 0) {
        Komposition k;
        k.entries.assign(L, KompEntry{0, false});
        return {GlideWitness{k, {}}};
    }
    std::vector<GlideWitness> out;
    std::vector<KompEntry> entries;
    auto rec = [&](auto&& self, int j, int prev_end) -> void {
        if (j > l) {
            Komposition k{entries};
            k.entries.resize(L, KompEntry{0, false});
            out.push_back(GlideWitness{std::move(k), st.nonzero_positions});
            return;
        }
        int s = prev_end + 1;
        int e = st.nonzero_positions[j - 1];
        std::vector<std::vector<KompEntry>> fills;
        detail::block_fillings(s, e, e, st.flat.parts[j - 1], true, fills);
        for (auto& block : fills) {
            entries.insert(entries.end(), block.begin(), block.end());
            self(self, j + 1, e);
            entries.resize(entries.size() - block.size());
        }
    };
    rec(rec, 1, 0);
    std::sort(out.begin(), out.end(), [](const GlideWitness& x, const GlideWitness& y) {
        if (x.komp.excess() != y.komp.excess()) return x.komp.excess() < y.komp.excess();
        return x.komp < y.komp;
    });
    return out;
}

inline Polynomial glide_poly(const WeakComposition& a) {
    Polynomial p(a.length());
    for (const GlideWitness& w : enumerate_glides(a))
        p.add_term(Monomial{w.komp.values(), w.komp.excess()}, 1);
    return p;
}

inline Polynomial slide_poly(const WeakComposition& a) {
    return glide_poly(a).specialize_beta_zero();
}

inline Polynomial kaon_poly(const WeakComposition& a) {
    Polynomial p(a.length());
    for (const GlideWitness& w : enumerate_mesonic(a))
        p.add_term(Monomial{w.komp.values(), w.komp.excess()}, 1);
    return p;
}

inline Polynomial particle_poly(const WeakComposition& a) {
    return kaon_poly(a).specialize_beta_zero();
}

namespace detail {

inline bool refines(const std::vector<int>& fine, const std::vector<int>& coarse) {
    std::size_t idx = 0;
    int acc = 0;
    for (int v : fine) {
        if (idx >= coarse.size()) return false;
        acc += v;
        if (acc == coarse[idx]) {
            ++idx;
            acc = 0;
        } else if (acc > coarse[idx]) {
            return false;
        }
    }
    return idx == coarse.size() && acc == 0;
}

}  // namespace detail

// Independent description of the slide polynomial: sum of x^b over weak b of
// the same length whose prefix sums dominate those of a and whose flattening
// refines flat(a) by grouping consecutive parts.
inline Polynomial slide_poly_dominance(const WeakComposition& a) {
    CompStats st = comp_stats(a);
    int L = a.length();
    if (L < 1) throw PreconditionUnmet("composition must have at least one part");
    int S = st.size;
    Polynomial p(L);
    std::vector<int> prefix_a(L, 0);
    int run = 0;
    for (int t = 0; t < L; ++t) {
        run += a.parts[t];
        prefix_a[t] = run;
    }
    std::vector<int> b(L, 0);
    auto rec = [&](auto&& self, int t, int sum) -> void {
        if (t == L) {
            if (sum != S) return;
            WeakComposition wb{b};
            if (!detail::refines(comp_stats(wb).flat.parts, st.flat.parts)) return;
            p.add_term(Monomial{b, 0}, 1);
            return;
        }
        int need_prefix = prefix_a[t];
        for (int v = std::max(0, need_prefix - sum); sum + v <= S; ++v) {
            b[t] = v;
            self(self, t + 1, sum + v);
        }
        b[t] = 0;
    };
    rec(rec, 0, 0);
    return p;
}

enum class FamilyKind {
    Fundamental,
    Multifundamental,
    Slide,
    Glide,
    Particle,
    Kaon,
    SchurViaPi,
    DemazureViaPi,
    AtomViaTheta,
};

inline const char* family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::Fundamental: return "F";
        case FamilyKind::Multifundamental: return "Fbar";
        case FamilyKind::Slide: return "slide";
        case FamilyKind::Glide: return "glide";
        case FamilyKind::Particle: return "particle";
        case FamilyKind::Kaon: return "kaon";
        case FamilyKind::SchurViaPi: return "schur-via-pi";
        case FamilyKind::DemazureViaPi: return "demazure-via-pi";
        case FamilyKind::AtomViaTheta: return "atom-via-theta";
    }
    return "?";
}

inline FamilyKind family_from_name(const std::string& s) {
    for (FamilyKind k : {FamilyKind::Fundamental, FamilyKind::Multifundamental, FamilyKind::Slide,
                         FamilyKind::Glide, FamilyKind::Particle, FamilyKind::Kaon,
                         FamilyKind::SchurViaPi, FamilyKind::DemazureViaPi,
                         FamilyKind::AtomViaTheta})
        if (s == family_name(k)) return k;
    throw ParseError("unknown family: '" + s + "'");
}

// Families taking an ambient variable count; the rest fix n = len(comp).
inline bool family_takes_nvars(FamilyKind k) {
    return k == FamilyKind::Fundamental || k == FamilyKind::Multifundamental ||
           k == FamilyKind::SchurViaPi;
}

}  // namespace divdiff
