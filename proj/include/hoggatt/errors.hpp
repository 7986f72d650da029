#pragma once

#include <stdexcept>
#include <string>

namespace hoggatt {

// Division that was expected to be exact left a remainder.  Every quotient
// this library takes is provably exact, so seeing this means a builder or
// arithmetic bug, never bad user input.
struct InexactDivision : std::runtime_error {
    explicit InexactDivision(const std::string& what) : std::runtime_error(what) {}
};

// Series reciprocal requested for a series whose constant term is not +-1.
struct NonUnitConstantTerm : std::runtime_error {
    explicit NonUnitConstantTerm(const std::string& what) : std::runtime_error(what) {}
};

// Cofactor-expansion determinant asked for a matrix above its size bound.
struct DimensionTooLarge : std::runtime_error {
    explicit DimensionTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// Dodgson condensation hit a vanishing interior minor; the caller should
// fall back to another determinant engine.
struct ZeroInteriorMinor : std::runtime_error {
    explicit ZeroInteriorMinor(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownIdentity : std::runtime_error {
    explicit UnknownIdentity(const std::string& what) : std::runtime_error(what) {}
};

// Numerator extraction needs enough series headroom to observe a zero tail.
struct OrderTooSmall : std::runtime_error {
    explicit OrderTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct EnumerationBudgetExceeded : std::runtime_error {
    explicit EnumerationBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hoggatt
