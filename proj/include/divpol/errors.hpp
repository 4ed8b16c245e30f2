#pragma once

#include <stdexcept>
#include <string>

namespace divpol {

struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Linear algebra over a local ring hit a pivot that is not a unit: the matrix
// does not have good reduction, caller may retry with fresh randomness.
struct BadReduction : MathError {
    explicit BadReduction(const std::string& w = "matrix does not have good reduction") : MathError(w) {}
};

// A Newton polygon segment has slope denominator divisible by the
// characteristic; Puiseux expansions are unavailable there.
struct WildRamification : MathError {
    explicit WildRamification(const std::string& w = "wild ramification") : MathError(w) {}
};

struct NotIrreducible : MathError {
    explicit NotIrreducible(const std::string& w = "curve polynomial is not irreducible") : MathError(w) {}
};

struct NotEnoughPoints : MathError {
    explicit NotEnoughPoints(const std::string& w = "not enough evaluation points over the base") : MathError(w) {}
};

struct AlphaDegenerate : MathError {
    explicit AlphaDegenerate(const std::string& w = "evaluation map degenerate on torsion") : MathError(w) {}
};

struct PrecisionExhausted : MathError {
    explicit PrecisionExhausted(const std::string& w = "precision exhausted during identification") : MathError(w) {}
};

struct WrongGenus : MathError {
    explicit WrongGenus(const std::string& w = "curve has the wrong genus") : MathError(w) {}
};

struct NoRationalPoint : MathError {
    explicit NoRationalPoint(const std::string& w = "no rational point available") : MathError(w) {}
};

struct NotInNeighbourhood : MathError {
    explicit NotInNeighbourhood(const std::string& w = "point does not reduce to the origin") : MathError(w) {}
};

struct SearchExhausted : MathError {
    explicit SearchExhausted(const std::string& w = "parameter search exhausted") : MathError(w) {}
};

struct SpanTimeout : MathError {
    explicit SpanTimeout(const std::string& w = "torsion spanning did not terminate") : MathError(w) {}
};

struct ParseError : MathError {
    explicit ParseError(const std::string& w) : MathError(w) {}
};

// Internal to dynamic evaluation: a tower modulus was discovered to be
// reducible while inverting. Drivers catch this, split the tower and restart.
struct SplitDetected : MathError {
    int level;
    explicit SplitDetected(int lvl) : MathError("zero divisor met in tower"), level(lvl) {}
};

} // namespace divpol
