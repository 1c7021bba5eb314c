#pragma once

// Candidate pairs (x, a), the membership conditions carving out the two
// candidate sets, realization of members as toric germs, extraction of a
// member from a germ, the arity-lowering transfer, and exhaustive
// enumeration of attained values up to an index bound.

#include <optional>
#include <vector>

#include "toricmld/germ.hpp"

namespace toricmld {

class CoefficientSet {
 public:
  // Values are deduplicated and sorted; must contain 1 and live in [0,1].
  explicit CoefficientSet(std::vector<Rational> values);

  const std::vector<Rational>& values() const { return values_; }
  bool contains(const Rational& r) const;

 private:
  std::vector<Rational> values_;
};

// { a/n : a in base, 1 <= n <= n_max }, materialized on demand.
struct ScaledSet {
  CoefficientSet base;
  long n_max;
  CoefficientSet values() const;
};

struct CandidatePair {
  RationalVector x;  // entries in (0, 1]
  RationalVector a;  // entries in [0, 1]

  CandidatePair(RationalVector x_in, RationalVector a_in);
  int arity() const { return static_cast<int>(x.size()); }
};

inline Rational pairing(const CandidatePair& p) { return p.x.dot(p.a); }

// Componentwise 1 + m*x - ceil(m*x); a selfmap of (0,1]^s, periodic in m with
// period index_of(x).
RationalVector shift(const RationalVector& x, long m);

struct MembershipVerdict {
  bool ok = true;
  // When !ok, exactly one of these describes the first failure found:
  std::optional<long> failing_m;      // inequality failure at this shift
  std::optional<int> failing_index;   // divisibility failure at coordinate i (0-based)
  Rational deficit;                   // the negative pairing difference, when failing_m
};

MembershipVerdict check_tilde_V(const CandidatePair& p);
MembershipVerdict check_V(const CandidatePair& p);
inline bool in_tilde_V(const CandidatePair& p) { return check_tilde_V(p).ok; }
inline bool in_V(const CandidatePair& p) { return check_V(p).ok; }

// Arity-1 membership in closed form: a = 0 or numerator(x) = 1.
bool tilde_V1_classify(const Rational& x, const Rational& a);

// Build the germ attaining pairing(p) as its mld in dimension d (2 <= s <= d).
// When s = d: lattice Z^d + Z x on the standard cone. When s < d: the
// standard rays plus one extra ray, with coefficients padded accordingly.
// The construction is verified by recomputing the mld; a mismatch is a bug.
ToricGerm realize(const CandidatePair& p, int d);

// Witness pair of mld_at_origin: box coordinates paired with the per-ray
// discrepancies 1 - b_i of the witness subset. For d >= 2 the arity is always
// >= 2 and the result passes in_V; arity 1 only occurs for 1-dimensional
// germs (the caller can see it from the result).
CandidatePair extract_candidate(const ToricGerm& germ);

// Divide out the non-primitivity of each standard basis vector in Z^s + Z x:
// x_i -> n_i x_i, a_i -> a_i / n_i. Requires membership in the tilde set and
// strictly positive a; the image is verified to land in V.
CandidatePair transfer_tilde_to_V(const CandidatePair& p);

struct MldSetEntry {
  Rational value;
  CandidatePair witness;  // lexicographically least (arity, x, a) for value
  ToricGerm germ;         // realize(witness, d), verified
};

struct EnumeratedMldSet {
  int dimension;
  CoefficientSet coefficients;
  long max_index;
  std::vector<MldSetEntry> entries;  // sorted by value, one entry per value

  std::vector<Rational> values() const;
};

// All values attained by pairs of arity 2..d with coefficients drawn from A
// and index_of(x) <= q_max, each with its least witness and realization.
EnumeratedMldSet enumerate_mld_set(int d, const CoefficientSet& A, long q_max);

}  // namespace toricmld
