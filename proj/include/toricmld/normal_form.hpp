#pragma once

// Hermite and Smith normal forms over arbitrary-precision integers.
//
// hermite_normal_form works row-style: the rows of the input generate a
// lattice, and the returned matrix is the unique canonical basis — row
// echelon, positive pivots, entries above each pivot reduced into [0, pivot).
// Zero rows are dropped, so the result has exactly rank(A) rows.
//
// smith_normal_form returns D = U * A * V with U, V unimodular and D diagonal
// with positive entries satisfying d1 | d2 | ... . U's inverse is tracked
// alongside because lattice saturation needs it.

#include "toricmld/types.hpp"

namespace toricmld {

IntegerMatrix hermite_normal_form(const IntegerMatrix& a);

struct SmithDecomposition {
  IntegerMatrix d;      // diagonal, invariant factors first
  IntegerMatrix u;      // row transform, unimodular
  IntegerMatrix u_inv;  // its inverse
  IntegerMatrix v;      // column transform, unimodular
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

}  // namespace toricmld
