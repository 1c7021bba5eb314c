#pragma once

// Toric germs: a superlattice N, a full-dimensional strongly convex cone given
// by its primitive rays, and a boundary coefficient in [0,1] per ray.
//
// Validation happens at construction: rays must be distinct primitive lattice
// members spanning the ambient space, and the cone must be pointed (certified
// by the sum of the inward facet normals being strictly positive on every
// ray). The log-discrepancy covector psi is computed on demand because the
// per-ray conditions psi(ray_i) = 1 - b_i may be unsolvable; that case is a
// distinct, reportable failure rather than a construction error.

#include <vector>

#include "toricmld/lattice.hpp"

namespace toricmld {

struct LogDiscrepancyFunction {
  RationalVector covector;
  Rational operator()(const RationalVector& v) const { return covector.dot(v); }
};

class ToricGerm {
 public:
  // rays are the columns; coefficients[i] belongs to rays.col(i).
  ToricGerm(SuperLattice lattice, RationalMatrix rays, std::vector<Rational> coefficients);

  int dim() const { return lattice_.dim(); }
  int num_rays() const { return static_cast<int>(rays_.cols()); }
  const SuperLattice& lattice() const { return lattice_; }
  const RationalMatrix& rays() const { return rays_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  // Primitive inward facet normals, as columns, lexicographically sorted.
  const IntegerMatrix& facet_normals() const { return facets_; }

  bool in_cone(const RationalVector& v) const;
  bool in_relint(const RationalVector& v) const;

 private:
  SuperLattice lattice_;
  RationalMatrix rays_;
  std::vector<Rational> coeffs_;
  IntegerMatrix facets_;
};

// Solves psi(ray_i) = 1 - b_i for a single covector; NotRCartier when the
// rays overdetermine it inconsistently.
LogDiscrepancyFunction compute_psi(const ToricGerm& germ);

// psi evaluated at a primitive cone member e (the divisor over direction e).
Rational log_discrepancy_of_divisor(const ToricGerm& germ, const RationalVector& e);

struct Face {
  std::vector<int> ray_indices;  // sorted, unique, 0-based
};

struct MldWitness {
  Rational value;
  RationalVector point;
  std::vector<int> subset;  // ray indices spanning the witness box
  RationalVector coords;    // box coordinates of point, each in (0, 1]
};

// Minimum of psi over the lattice points interior to the cone, with an
// attaining point. The search runs over the half-open boxes of all
// independent ray subsets, which is exhaustive for the minimum.
MldWitness mld_at_origin(const ToricGerm& germ);

// The germ along the orbit of a face: lattice N ∩ span(face), rebased to full
// rank, with the face's rays and coefficients carried over. NotAFace when the
// selected rays are not exactly the rays of a face of the cone.
ToricGerm face_restriction(const ToricGerm& germ, const Face& face);

// Minimal log discrepancy at a point of codimension point_codim whose orbit
// closure corresponds to `face`: mld of the restriction plus the transverse
// smooth contribution (point_codim - dim face).
Rational mld_at_point(const ToricGerm& germ, const Face& face, int point_codim);

}  // namespace toricmld
