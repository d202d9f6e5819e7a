#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "errors.hpp"

namespace divdiff {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exponent vector plus a power of the formal parameter b.
struct Monomial {
    std::vector<int> exps;
    int beta_deg = 0;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.beta_deg == b.beta_deg && a.exps == b.exps;
    }
    // Canonical term order: beta degree first, then lex on exponents.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.beta_deg != b.beta_deg) return a.beta_deg < b.beta_deg;
        return a.exps < b.exps;
    }
};

// Sparse polynomial in x_1..x_n with integer coefficients and a formal
// parameter b. Terms are kept in canonical order and never have zero
// coefficients, so equal polynomials have identical representations.
class Polynomial {
  public:
    explicit Polynomial(int n_vars) : n_vars_(n_vars) {
        if (n_vars < 1) throw PreconditionUnmet("polynomial needs at least one variable");
    }

    static Polynomial zero(int n_vars) { return Polynomial(n_vars); }

    static Polynomial constant(int n_vars, Int c) {
        Polynomial p(n_vars);
        p.add_term(Monomial{std::vector<int>(n_vars, 0), 0}, std::move(c));
        return p;
    }

    static Polynomial one(int n_vars) { return constant(n_vars, 1); }

    static Polynomial variable(int n_vars, int j) {
        Polynomial p(n_vars);
        if (j < 1 || j > n_vars) throw IndexOutOfRange("variable index out of range");
        Monomial m{std::vector<int>(n_vars, 0), 0};
        m.exps[j - 1] = 1;
        p.add_term(std::move(m), 1);
        return p;
    }

    static Polynomial from_exponents(const std::vector<int>& exps, int beta_deg = 0,
                                     Int coeff = 1) {
        Polynomial p(static_cast<int>(exps.size()));
        p.add_term(Monomial{exps, beta_deg}, std::move(coeff));
        return p;
    }

    int n_vars() const { return n_vars_; }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    Int coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(Monomial m, Int c) {
        if (c == 0) return;
        if (static_cast<int>(m.exps.size()) != n_vars_)
            throw VarCountMismatch("term arity does not match polynomial");
        if (m.beta_deg < 0) throw PreconditionUnmet("negative beta degree");
        for (int e : m.exps)
            if (e < 0) throw PreconditionUnmet("negative exponent");
        auto [it, inserted] = terms_.emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial& operator+=(const Polynomial& o) {
        check_same_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_same_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial r(n_vars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same_arity(b);
        Polynomial r(a.n_vars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m{ma.exps, ma.beta_deg + mb.beta_deg};
                for (int j = 0; j < a.n_vars_; ++j) m.exps[j] += mb.exps[j];
                r.add_term(std::move(m), ca * cb);
            }
        return r;
    }

    friend Polynomial operator*(const Int& c, const Polynomial& p) {
        Polynomial r(p.n_vars_);
        if (c == 0) return r;
        for (const auto& [m, k] : p.terms_) r.terms_.emplace(m, c * k);
        return r;
    }

    Polynomial times_var(int j) const {
        if (j < 1 || j > n_vars_) throw IndexOutOfRange("variable index out of range");
        Polynomial r(n_vars_);
        for (const auto& [m, c] : terms_) {
            Monomial t = m;
            ++t.exps[j - 1];
            r.terms_.emplace(std::move(t), c);
        }
        return r;
    }

    Polynomial times_beta(int k = 1) const {
        if (k < 0) throw PreconditionUnmet("negative beta power");
        Polynomial r(n_vars_);
        for (const auto& [m, c] : terms_) {
            Monomial t = m;
            t.beta_deg += k;
            r.terms_.emplace(std::move(t), c);
        }
        return r;
    }

    // Exchange x_i and x_{i+1} in every term.
    Polynomial swap_vars(int i) const {
        check_adjacent_index(i);
        Polynomial r(n_vars_);
        for (const auto& [m, c] : terms_) {
            Monomial t = m;
            std::swap(t.exps[i - 1], t.exps[i]);
            r.add_term(std::move(t), c);
        }
        return r;
    }

    // Exchange x_i and x_{i+1} only in terms where at least one of the two
    // exponents is zero; terms containing both variables are fixed.
    Polynomial hivert_swap(int i) const {
        check_adjacent_index(i);
        Polynomial r(n_vars_);
        for (const auto& [m, c] : terms_) {
            Monomial t = m;
            if (!(t.exps[i - 1] > 0 && t.exps[i] > 0))
                std::swap(t.exps[i - 1], t.exps[i]);
            r.add_term(std::move(t), c);
        }
        return r;
    }

    // Substitute x_i := x_{i+1}.
    Polynomial substitute_adjacent_equal(int i) const {
        check_adjacent_index(i);
        Polynomial r(n_vars_);
        for (const auto& [m, c] : terms_) {
            Monomial t = m;
            t.exps[i] += t.exps[i - 1];
            t.exps[i - 1] = 0;
            r.add_term(std::move(t), c);
        }
        return r;
    }

    Polynomial specialize_beta_zero() const {
        Polynomial r(n_vars_);
        for (const auto& [m, c] : terms_)
            if (m.beta_deg == 0) r.terms_.emplace(m, c);
        return r;
    }

    // Reinterpret in a larger variable set, padding exponents on the right.
    Polynomial embed(int new_n_vars) const {
        if (new_n_vars < n_vars_)
            throw PreconditionUnmet("embed target has fewer variables");
        Polynomial r(new_n_vars);
        for (const auto& [m, c] : terms_) {
            Monomial t{m.exps, m.beta_deg};
            t.exps.resize(new_n_vars, 0);
            r.terms_.emplace(std::move(t), c);
        }
        return r;
    }

    std::string to_text() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            bool neg = c < 0;
            Int a = neg ? Int(-c) : c;
            if (first)
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            first = false;
            std::vector<std::string> factors;
            bool has_sym = m.beta_deg > 0 ||
                           std::any_of(m.exps.begin(), m.exps.end(), [](int e) { return e > 0; });
            if (a != 1 || !has_sym) factors.push_back(a.str());
            if (m.beta_deg == 1)
                factors.push_back("b");
            else if (m.beta_deg > 1)
                factors.push_back("b^" + std::to_string(m.beta_deg));
            for (int j = 0; j < n_vars_; ++j) {
                if (m.exps[j] == 0) continue;
                std::string f = "x" + std::to_string(j + 1);
                if (m.exps[j] > 1) f += "^" + std::to_string(m.exps[j]);
                factors.push_back(std::move(f));
            }
            for (std::size_t k = 0; k < factors.size(); ++k) {
                if (k) out += "*";
                out += factors[k];
            }
        }
        return out;
    }

    std::string to_latex() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            bool neg = c < 0;
            Int a = neg ? Int(-c) : c;
            if (first)
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            first = false;
            std::vector<std::string> factors;
            bool has_sym = m.beta_deg > 0 ||
                           std::any_of(m.exps.begin(), m.exps.end(), [](int e) { return e > 0; });
            if (a != 1 || !has_sym) factors.push_back(a.str());
            if (m.beta_deg == 1)
                factors.push_back("\\beta");
            else if (m.beta_deg > 1)
                factors.push_back("\\beta^{" + std::to_string(m.beta_deg) + "}");
            for (int j = 0; j < n_vars_; ++j) {
                if (m.exps[j] == 0) continue;
                std::string f = "x_{" + std::to_string(j + 1) + "}";
                if (m.exps[j] > 1) f += "^{" + std::to_string(m.exps[j]) + "}";
                factors.push_back(std::move(f));
            }
            for (std::size_t k = 0; k < factors.size(); ++k) {
                if (k) out += " ";
                out += factors[k];
            }
        }
        return out;
    }

    // Fixed field order: n_vars, then terms with coeff (decimal string),
    // beta, exps. Term order is the canonical term order, so serialization
    // is byte-identical for equal polynomials.
    std::string to_json() const {
        std::string out = "{\"n_vars\":" + std::to_string(n_vars_) + ",\"terms\":[";
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) out += ",";
            first = false;
            out += "{\"coeff\":\"" + c.str() + "\",\"beta\":" + std::to_string(m.beta_deg) +
                   ",\"exps\":[";
            for (int j = 0; j < n_vars_; ++j) {
                if (j) out += ",";
                out += std::to_string(m.exps[j]);
            }
            out += "]}";
        }
        out += "]}";
        return out;
    }

    // Accepts any key order; coeff may be a decimal string or a JSON integer.
    static Polynomial from_json(const std::string& text) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        if (!j.is_object() || !j.contains("n_vars") || !j.contains("terms"))
            throw ParseError("polynomial JSON needs n_vars and terms");
        if (!j["n_vars"].is_number_integer() || j["n_vars"].get<long long>() < 1)
            throw ParseError("n_vars must be a positive integer");
        int n = j["n_vars"].get<int>();
        if (!j["terms"].is_array()) throw ParseError("terms must be an array");
        Polynomial p(n);
        for (const auto& t : j["terms"]) {
            if (!t.is_object() || !t.contains("coeff") || !t.contains("exps"))
                throw ParseError("term needs coeff and exps");
            Int c;
            if (t["coeff"].is_string()) {
                std::string s = t["coeff"].get<std::string>();
                try {
                    c = Int(s);
                } catch (const std::exception&) {
                    throw ParseError("bad coefficient string: " + s);
                }
            } else if (t["coeff"].is_number_integer()) {
                c = Int(t["coeff"].get<long long>());
            } else {
                throw ParseError("coeff must be a string or integer");
            }
            int beta = 0;
            if (t.contains("beta")) {
                if (!t["beta"].is_number_integer() || t["beta"].get<long long>() < 0)
                    throw ParseError("beta must be a nonnegative integer");
                beta = t["beta"].get<int>();
            }
            if (!t["exps"].is_array() || static_cast<int>(t["exps"].size()) != n)
                throw ParseError("exps must be an array of length n_vars");
            std::vector<int> exps;
            exps.reserve(n);
            for (const auto& e : t["exps"]) {
                if (!e.is_number_integer() || e.get<long long>() < 0)
                    throw ParseError("exponents must be nonnegative integers");
                exps.push_back(e.get<int>());
            }
            p.add_term(Monomial{std::move(exps), beta}, std::move(c));
        }
        return p;
    }

  private:
    void check_same_arity(const Polynomial& o) const {
        if (n_vars_ != o.n_vars_)
            throw VarCountMismatch("polynomials have different variable counts");
    }
    void check_adjacent_index(int i) const {
        if (i < 1 || i >= n_vars_)
            throw IndexOutOfRange("adjacent-pair index out of range");
    }

    int n_vars_;
    std::map<Monomial, Int> terms_;
};

// Exact division of f by x_i - x_{i+1}. f is divisible iff substituting
// x_i := x_{i+1} kills it; otherwise NonExactDivision is raised. The quotient
// comes from telescoping each term:
//   x^A y^B = y^(A+B) + (x - y) * sum_{u+v=A-1} x^u y^(B+v)
// summed over terms, the substitution images cancel exactly when f is
// divisible.
inline Polynomial exact_div_diff(const Polynomial& f, int i) {
    if (i < 1 || i >= f.n_vars())
        throw IndexOutOfRange("adjacent-pair index out of range");
    if (!f.substitute_adjacent_equal(i).is_zero())
        throw NonExactDivision("remainder nonzero dividing by adjacent difference");
    Polynomial q(f.n_vars());
    for (const auto& [m, c] : f.terms()) {
        int A = m.exps[i - 1];
        int B = m.exps[i];
        Monomial t = m;
        for (int u = 0; u < A; ++u) {
            t.exps[i - 1] = u;
            t.exps[i] = B + (A - 1 - u);
            q.add_term(t, c);
        }
    }
#ifndef NDEBUG
    Polynomial diff = Polynomial::variable(f.n_vars(), i) - Polynomial::variable(f.n_vars(), i + 1);
    assert(q * diff == f && "exact_div_diff back-multiplication failed");
#endif
    return q;
}

}  // namespace divdiff
