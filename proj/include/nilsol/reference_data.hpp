#pragma once

#include <cstddef>

#include "matrix.hpp"

namespace nilsol::reference {

/// Gram matrix of the 8-dimensional built-in family. Independent of the
/// family parameter; triples ordered by (k, i, j).
inline RatMatrix u8() {
    return RatMatrix{
        {3, 1, 1, 1, 0, 0, 0, 1},
        {1, 3, 1, 0, 1, 1, 0, 0},
        {1, 1, 3, 0, 0, 0, 1, 0},
        {1, 0, 0, 3, 1, 1, 1, 0},
        {0, 1, 0, 1, 3, 0, 1, 1},
        {0, 1, 0, 1, 0, 3, 1, 1},
        {0, 0, 1, 1, 1, 1, 3, 1},
        {1, 0, 0, 0, 1, 1, 1, 3},
    };
}

/// Gram matrix of the 9-dimensional family, triples ordered by (k, i, j):
/// the two triples targeting the last basis vector appear as
/// (2,5,9) then (3,6,9).
inline RatMatrix u9() {
    return RatMatrix{
        {3, 1, 1, 1, 0, 0, 0, 1, 1, 1},
        {1, 3, 1, 0, 1, 1, 0, 0, -1, 1},
        {1, 1, 3, 0, 0, 0, 1, 0, 1, -1},
        {1, 0, 0, 3, 1, 1, 1, 0, 1, 1},
        {0, 1, 0, 1, 3, 0, 1, 1, 0, 1},
        {0, 1, 0, 1, 0, 3, 1, 1, 0, 1},
        {0, 0, 1, 1, 1, 1, 3, 1, 1, 0},
        {1, 0, 0, 0, 1, 1, 1, 3, 1, 1},
        {1, -1, 1, 1, 0, 0, 1, 1, 3, 1},
        {1, 1, -1, 1, 1, 1, 0, 1, 1, 3},
    };
}

/// The same Gram matrix with the two final triples listed the other way
/// around, (3,6,9) before (2,5,9); equals u9() conjugated by the transposition
/// of the last two indices.
inline RatMatrix u9_last_pair_swapped() {
    return RatMatrix{
        {3, 1, 1, 1, 0, 0, 0, 1, 1, 1},
        {1, 3, 1, 0, 1, 1, 0, 0, 1, -1},
        {1, 1, 3, 0, 0, 0, 1, 0, -1, 1},
        {1, 0, 0, 3, 1, 1, 1, 0, 1, 1},
        {0, 1, 0, 1, 3, 0, 1, 1, 1, 0},
        {0, 1, 0, 1, 0, 3, 1, 1, 1, 0},
        {0, 0, 1, 1, 1, 1, 3, 1, 0, 1},
        {1, 0, 0, 0, 1, 1, 1, 3, 1, 1},
        {1, 1, -1, 1, 1, 1, 0, 1, 3, 1},
        {1, -1, 1, 1, 0, 0, 1, 1, 1, 3},
    };
}

/// Solution set of u8() v = 1: particular point, one-dimensional kernel.
inline RatVec u8_particular() {
    RatVec v{1, 1, 3, 2, 2, 2, 0, 2};
    for (auto& x : v) x /= 11;
    return v;
}

inline RatVec u8_kernel() { return RatVec{-1, 1, 0, 1, -1, -1, 0, 1}; }

/// Solution set of u9() v = 1: particular point, two-dimensional kernel.
inline RatVec u9_particular() {
    RatVec v{5, 25, 39, 18, 28, 28, 0, 18, 30, 16};
    for (auto& x : v) x /= 161;
    return v;
}

inline RatVec u9_kernel1() { return RatVec{-1, 1, 0, 1, -1, -1, 0, 1, 0, 0}; }

inline RatVec u9_kernel2() { return RatVec{0, 1, -1, 0, 0, 0, 0, 0, 1, -1}; }

inline constexpr std::size_t dim8_derivation_dim = 16;
/// At q = 1 the structure constants coincide and the 8-dimensional family
/// picks up one extra derivation.
inline constexpr std::size_t dim8_derivation_dim_q1 = 17;
inline constexpr std::size_t dim9_derivation_dim = 19;

/// Diagonal of the canonical grading derivation for the 8-dimensional family.
inline RatVec dim8_grading_diag() { return RatVec{1, 1, 1, 2, 2, 2, 3, 3}; }

inline RatVec dim9_grading_diag() { return RatVec{1, 1, 1, 2, 2, 2, 3, 3, 3}; }

/// Trace-normalization scalar for the 8-dimensional family's grading
/// derivation: trace D / trace D^2.
inline Rational dim8_scalar() { return Rational(5, 11); }

/// Same scalar for the 9-dimensional family, as computed from the traces.
inline Rational dim9_scalar_computed() { return Rational(3, 7); }

/// Scalar found quoted elsewhere for the 9-dimensional family; fails the
/// trace-form test, kept for the arbitration check.
inline Rational dim9_scalar_quoted() { return Rational(9, 14); }

}  // namespace nilsol::reference
