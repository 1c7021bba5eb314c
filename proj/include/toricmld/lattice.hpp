#pragma once

// Superlattices of Z^d and their half-open box points.
//
// A SuperLattice is N = Z^d + Z g_1 + ... + Z g_k for rational generators g_j.
// On construction a canonical basis is computed by clearing denominators and
// running a Hermite reduction on the stacked generators, so membership tests,
// primitivity and the index [N : Z^d] are all exact and deterministic.

#include <optional>
#include <vector>

#include "toricmld/normal_form.hpp"

namespace toricmld {

// Smallest positive integer m with m*x integral (lcm of the denominators).
Integer index_of(const RationalVector& x);
inline Integer index_of(const Rational& x) { return x.den(); }

// Basis of a lattice: columns of `mat` divided by `denom`.
struct LatticeBasis {
  IntegerMatrix mat;
  Integer denom;
};

class SuperLattice {
 public:
  SuperLattice(int dim, std::vector<RationalVector> extra_generators = {});

  int dim() const { return dim_; }
  const std::vector<RationalVector>& extra_generators() const { return gens_; }
  const LatticeBasis& basis() const { return basis_; }
  const Integer& index_over_standard() const { return index_; }  // [N : Z^d]

  // Integer coordinates of v in the canonical basis; nullopt when v is not a
  // lattice member. Errors on dimension mismatch.
  std::optional<IntegerVector> coordinates(const RationalVector& v) const;

  // Ambient vector with the given basis coordinates.
  RationalVector from_coordinates(const IntegerVector& y) const;

 private:
  int dim_;
  std::vector<RationalVector> gens_;
  LatticeBasis basis_;  // mat is lower triangular with positive diagonal
  Integer index_;
};

inline LatticeBasis hermite_basis(const SuperLattice& lat) { return lat.basis(); }

bool is_member(const SuperLattice& lat, const RationalVector& v);

// True when v/k leaves the lattice for every integer k >= 2.
// Errors when v is not a member or v = 0.
bool is_primitive(const SuperLattice& lat, const RationalVector& v);

// Canonical basis (as columns, in lattice coordinates) of the saturation
// span_Q(cols of y) ∩ Z^d of a full-column-rank integer matrix.
IntegerMatrix saturation_basis(const IntegerMatrix& y);

struct BoxPoint {
  RationalVector point;   // = rays * coords
  RationalVector coords;  // every entry in (0, 1]
};

// All lattice members of the half-open parallelepiped spanned by the ray
// columns: { sum t_i ray_i : t_i in (0,1] } ∩ N. Rays must be independent
// members of N. Result is sorted by coords, lexicographically.
std::vector<BoxPoint> box_points_with_coords(const SuperLattice& lat, const RationalMatrix& rays);
std::vector<RationalVector> box_points(const SuperLattice& lat, const RationalMatrix& rays);

}  // namespace toricmld
