#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace divdiff {

// Word in the adjacent-transposition letters 1..n-1. Compositions of
// operators indexed by a word always apply the rightmost letter first.
using Word = std::vector<int>;

struct Permutation {
    std::vector<int> one_line;

    static Permutation identity(int n) {
        Permutation p;
        p.one_line.resize(n);
        std::iota(p.one_line.begin(), p.one_line.end(), 1);
        return p;
    }
    int n() const { return static_cast<int>(one_line.size()); }
    bool is_identity() const {
        for (int i = 0; i < n(); ++i)
            if (one_line[i] != i + 1) return false;
        return true;
    }
    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.one_line == b.one_line;
    }
};

struct WeakComposition {
    std::vector<int> parts;
    int length() const { return static_cast<int>(parts.size()); }
    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    friend bool operator==(const WeakComposition& a, const WeakComposition& b) {
        return a.parts == b.parts;
    }
    friend bool operator<(const WeakComposition& a, const WeakComposition& b) {
        return a.parts < b.parts;
    }
};

// Composition with all parts positive.
struct StrongComposition {
    std::vector<int> parts;
    int length() const { return static_cast<int>(parts.size()); }
    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    friend bool operator==(const StrongComposition& a, const StrongComposition& b) {
        return a.parts == b.parts;
    }
};

struct CompStats {
    StrongComposition flat;          // nonzero parts in order
    std::vector<int> nonzero_positions;  // 1-based positions of nonzero parts
    std::vector<int> descent_set;    // proper partial sums of flat
    int size = 0;
};

inline void check_weak(const WeakComposition& a) {
    for (int p : a.parts)
        if (p < 0) throw PreconditionUnmet("composition parts must be nonnegative");
}

inline void check_strong(const StrongComposition& a) {
    for (int p : a.parts)
        if (p < 1) throw PreconditionUnmet("strong composition parts must be positive");
}

inline CompStats comp_stats(const WeakComposition& a) {
    check_weak(a);
    CompStats s;
    int acc = 0;
    for (int i = 0; i < a.length(); ++i) {
        if (a.parts[i] > 0) {
            s.flat.parts.push_back(a.parts[i]);
            s.nonzero_positions.push_back(i + 1);
        }
        acc += a.parts[i];
    }
    s.size = acc;
    int run = 0;
    for (std::size_t k = 0; k + 1 < s.flat.parts.size(); ++k) {
        run += s.flat.parts[k];
        s.descent_set.push_back(run);
    }
    return s;
}

inline WeakComposition flat_padded(const WeakComposition& a) {
    CompStats s = comp_stats(a);
    WeakComposition r;
    r.parts = s.flat.parts;
    r.parts.resize(a.parts.size(), 0);
    return r;
}

inline WeakComposition sort_decreasing(const WeakComposition& a) {
    check_weak(a);
    WeakComposition r = a;
    std::sort(r.parts.begin(), r.parts.end(), std::greater<int>());
    return r;
}

// Apply a word to a sequence of values by position swaps, rightmost letter
// first: letter l exchanges positions l and l+1.
inline std::vector<int> apply_word_to_values(const Word& w, std::vector<int> values) {
    int n = static_cast<int>(values.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        int l = *it;
        if (l < 1 || l >= n) throw IndexOutOfRange("word letter out of range");
        std::swap(values[l - 1], values[l]);
    }
    return values;
}

inline WeakComposition word_action_on_composition(const Word& w, const WeakComposition& a) {
    check_weak(a);
    return WeakComposition{apply_word_to_values(w, a.parts)};
}

inline Permutation word_to_permutation(const Word& w, int n) {
    if (n < 1) throw PreconditionUnmet("need at least one position");
    Permutation p = Permutation::identity(n);
    p.one_line = apply_word_to_values(w, std::move(p.one_line));
    return p;
}

inline int inversions(const Permutation& p) {
    int inv = 0;
    for (int i = 0; i < p.n(); ++i)
        for (int j = i + 1; j < p.n(); ++j)
            if (p.one_line[i] > p.one_line[j]) ++inv;
    return inv;
}

inline bool is_reduced(const Word& w, int n) {
    return inversions(word_to_permutation(w, n)) == static_cast<int>(w.size());
}

inline bool is_reduced(const Word& w) {
    int n = 1;
    for (int l : w) n = std::max(n, l + 1);
    return is_reduced(w, n);
}

// Reversal; inverts the composite because each letter is an involution.
// Requires a reduced input so the result is again reduced.
inline Word inverse_word(const Word& w) {
    if (!is_reduced(w)) throw NotReduced("inverse_word requires a reduced word");
    return Word(w.rbegin(), w.rend());
}

// Reduced word for the order-reversing permutation:
// [1..n-1] followed by the longest word on the first n-1 positions.
inline Word longest_word(int n) {
    if (n < 1) throw PreconditionUnmet("need at least one position");
    Word w;
    for (int m = n; m >= 2; --m)
        for (int l = 1; l < m; ++l) w.push_back(l);
    return w;
}

inline std::vector<Permutation> all_permutations(int n) {
    if (n < 1) throw PreconditionUnmet("need at least one position");
    std::vector<Permutation> out;
    Permutation p = Permutation::identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.one_line.begin(), p.one_line.end()));
    return out;
}

// Every reduced word of p, by peeling descents: w is reduced for p iff
// w = [i] ++ w' with p having a descent at i and w' reduced for p with
// positions i, i+1 exchanged.
inline std::vector<Word> all_reduced_words(const Permutation& p) {
    if (p.n() > 6) throw TooLarge("reduced-word enumeration supports up to 6 positions");
    if (p.is_identity()) return {Word{}};
    std::vector<Word> out;
    for (int i = 1; i < p.n(); ++i) {
        if (p.one_line[i - 1] <= p.one_line[i]) continue;
        Permutation q = p;
        std::swap(q.one_line[i - 1], q.one_line[i]);
        for (Word w : all_reduced_words(q)) {
            Word full;
            full.reserve(w.size() + 1);
            full.push_back(i);
            full.insert(full.end(), w.begin(), w.end());
            out.push_back(std::move(full));
        }
    }
    return out;
}

// Canonical sorting word for a weak composition: applied rightmost-first to a
// it yields flat_padded(a). With nonzero positions i_1 < ... < i_l the word is
// the concatenation over k = l..1 of the blocks [k, k+1, ..., i_k - 1]; the
// rightmost block walks the leftmost nonzero part home first, the leftmost
// block walks the rightmost nonzero part home last. Its length is the number
// of pairs (zero left of a nonzero), so it is reduced.
inline Word sorting_word_weak(const WeakComposition& a) {
    CompStats s = comp_stats(a);
    Word w;
    int l = static_cast<int>(s.nonzero_positions.size());
    for (int k = l; k >= 1; --k)
        for (int j = k; j < s.nonzero_positions[k - 1]; ++j) w.push_back(j);
    return w;
}

// Canonical sorting word toward the weakly decreasing rearrangement: bubble
// the leftmost strict ascent repeatedly, never exchanging equal parts, and
// reverse the recorded swaps, so the returned word applied rightmost-first to
// a yields sort_decreasing(a). Its length is the number of pairs i < j with
// a_i < a_j, so it is reduced.
inline Word sorting_word_partition(const WeakComposition& a) {
    check_weak(a);
    std::vector<int> vals = a.parts;
    Word record;
    int n = static_cast<int>(vals.size());
    for (;;) {
        int pos = 0;
        for (int i = 1; i < n; ++i)
            if (vals[i - 1] < vals[i]) {
                pos = i;
                break;
            }
        if (pos == 0) break;
        std::swap(vals[pos - 1], vals[pos]);
        record.push_back(pos);
    }
    return Word(record.rbegin(), record.rend());
}

inline std::string comp_to_string(const std::vector<int>& parts) {
    bool small = std::all_of(parts.begin(), parts.end(), [](int p) { return p >= 0 && p <= 9; });
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!small && i) out += ",";
        out += std::to_string(parts[i]);
    }
    return out;
}

inline std::string comp_to_string(const WeakComposition& a) { return comp_to_string(a.parts); }
inline std::string comp_to_string(const StrongComposition& a) { return comp_to_string(a.parts); }

// "021" (one digit per part) or "0,2,1"; the comma form is required once any
// part exceeds 9.
inline WeakComposition parse_composition(const std::string& s) {
    if (s.empty()) throw ParseError("empty composition");
    WeakComposition a;
    if (s.find(',') == std::string::npos) {
        for (char c : s) {
            if (c < '0' || c > '9') throw ParseError("composition must be digits or comma-separated");
            a.parts.push_back(c - '0');
        }
        return a;
    }
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string piece = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                       : comma - start);
        if (piece.empty() || !std::all_of(piece.begin(), piece.end(),
                                          [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("bad composition part: '" + piece + "'");
        a.parts.push_back(std::stoi(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return a;
}

// Comma-separated letters; the empty string is the empty word.
inline Word parse_word(const std::string& s) {
    Word w;
    if (s.empty()) return w;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string piece = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                       : comma - start);
        if (piece.empty() || !std::all_of(piece.begin(), piece.end(),
                                          [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("bad word letter: '" + piece + "'");
        int l = std::stoi(piece);
        if (l < 1) throw ParseError("word letters must be positive");
        w.push_back(l);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return w;
}

}  // namespace divdiff
