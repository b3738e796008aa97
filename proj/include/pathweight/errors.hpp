#pragma once

#include <stdexcept>
#include <string>

namespace pathweight {

// Series preconditions.
struct ZeroConstantTerm : std::domain_error {
    explicit ZeroConstantTerm(const std::string& what) : std::domain_error(what) {}
};
struct NonzeroInnerConstant : std::domain_error {
    explicit NonzeroInnerConstant(const std::string& what) : std::domain_error(what) {}
};
struct ConstantTermNotOne : std::domain_error {
    explicit ConstantTermNotOne(const std::string& what) : std::domain_error(what) {}
};
struct InsufficientOrder : std::domain_error {
    explicit InsufficientOrder(const std::string& what) : std::domain_error(what) {}
};

// Functional-equation solver.
struct NonContractive : std::runtime_error {
    explicit NonContractive(const std::string& what) : std::runtime_error(what) {}
};

// Parity-restricted Motzkin formulas.
struct EvenK : std::invalid_argument {
    explicit EvenK(const std::string& what) : std::invalid_argument(what) {}
};
struct OddK : std::invalid_argument {
    explicit OddK(const std::string& what) : std::invalid_argument(what) {}
};
struct UnsupportedCombination : std::invalid_argument {
    explicit UnsupportedCombination(const std::string& what) : std::invalid_argument(what) {}
};

// OEIS b-file handling.
struct BFileParseError : std::runtime_error {
    explicit BFileParseError(const std::string& what) : std::runtime_error(what) {}
};
struct OeisFetchError : std::runtime_error {
    explicit OeisFetchError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pathweight
