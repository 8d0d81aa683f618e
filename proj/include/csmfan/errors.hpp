#pragma once

#include <stdexcept>
#include <string>

#include "csmfan/subset.hpp"

namespace csmfan {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- matroid construction -------------------------------------------------

struct EmptyBases : Error {
    EmptyBases() : Error("basis family is empty") {}
};

struct UnequalCardinality : Error {
    UnequalCardinality() : Error("bases do not all have the same cardinality") {}
};

struct ZeroRank : Error {
    ZeroRank() : Error("matroid rank must be positive") {}
};

struct ExchangeAxiomViolation : Error {
    Subset basis_a, basis_b;
    int element;
    ExchangeAxiomViolation(Subset a, Subset b, int e)
        : Error("exchange axiom fails for " + a.to_string() + ", " + b.to_string() +
                " at element " + std::to_string(e)),
          basis_a(a),
          basis_b(b),
          element(e) {}
};

struct RankOutOfRange : Error {
    RankOutOfRange() : Error("rank out of range for requested ground set") {}
};

struct NonPrimeModulus : Error {
    NonPrimeModulus() : Error("field modulus is not prime") {}
};

struct ZeroMatrix : Error {
    ZeroMatrix() : Error("matrix has rank zero") {}
};

struct NotNested : Error {
    NotNested() : Error("minor interval bounds are not nested in the ground set") {}
};

// --- preconditions on operations ------------------------------------------

struct LoopPresent : Error {
    LoopPresent() : Error("operation requires a loopless matroid") {}
};

struct NotABasis : Error {
    NotABasis() : Error("subset is not a basis of the matroid") {}
};

struct ElementInBasis : Error {
    ElementInBasis() : Error("element lies in the basis") {}
};

struct ElementNotInBasis : Error {
    ElementNotInBasis() : Error("element does not lie in the basis") {}
};

struct KOutOfRange : Error {
    KOutOfRange() : Error("skeleton index k out of range") {}
};

struct InexactDivision : Error {
    InexactDivision() : Error("polynomial division left a nonzero remainder") {}
};

struct NotProperFlag : Error {
    NotProperFlag() : Error("chain is not a proper flag of flats") {}
};

// --- tropical geometry -----------------------------------------------------

struct ConeNotUnimodular : Error {
    ConeNotUnimodular()
        : Error("cone rays do not form a basis of a saturated sublattice") {}
};

struct DimensionMismatch : Error {
    DimensionMismatch() : Error("fan dimensions are not complementary") {}
};

struct RankDeficient : Error {
    RankDeficient() : Error("combined ray family is rank deficient") {}
};

struct VDegenerate : Error {
    VDegenerate() : Error("perturbation vector is degenerate for this fan pair") {}
};

struct DegenerateRetriesExhausted : Error {
    DegenerateRetriesExhausted()
        : Error("no generic perturbation found after bounded retries") {}
};

// --- input ------------------------------------------------------------------

struct ParseError : Error {
    using Error::Error;
};

}  // namespace csmfan
