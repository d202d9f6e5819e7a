#pragma once

#include <stdexcept>
#include <string>

namespace divdiff {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Arity mismatch between polynomials, or between a polynomial and an exponent vector.
struct VarCountMismatch : Error {
    explicit VarCountMismatch(const std::string& msg) : Error(msg) {}
};

// Operator or variable index outside [1, n_vars-1] resp. [1, n_vars].
struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

// Division by x_i - x_{i+1} left a nonzero remainder.
struct NonExactDivision : Error {
    explicit NonExactDivision(const std::string& msg) : Error(msg) {}
};

// A word failed the reduced-word test where one was required.
struct NotReduced : Error {
    explicit NotReduced(const std::string& msg) : Error(msg) {}
};

// Enumeration guard tripped (input size beyond the supported range).
struct TooLarge : Error {
    explicit TooLarge(const std::string& msg) : Error(msg) {}
};

// Basis expansion: the target lies outside the span of the given support.
struct NotInSpan : Error {
    explicit NotInSpan(const std::string& msg) : Error(msg) {}
};

// Basis expansion: the support polynomials are linearly dependent.
struct SingularSystem : Error {
    explicit SingularSystem(const std::string& msg) : Error(msg) {}
};

// A check or constructor precondition failed.
struct PreconditionUnmet : Error {
    explicit PreconditionUnmet(const std::string& msg) : Error(msg) {}
};

// Malformed textual input (composition, monomial, word, or JSON polynomial).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// A valid flag used with a family or mode that does not accept it.
struct UnsupportedCombination : Error {
    explicit UnsupportedCombination(const std::string& msg) : Error(msg) {}
};

}  // namespace divdiff
