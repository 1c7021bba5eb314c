#pragma once

// Explicit converging families of candidate pairs and a finite-stage
// experiment harness: enumerate at increasing index bounds, measure how
// attained values approach a predicted limit set, and flag empirical
// clusters. Shrinking-gap detection at finite scale is evidence, not proof.

#include <optional>
#include <vector>

#include "toricmld/sets.hpp"

namespace toricmld {

// ((1/(kn+1), n/(kn+1)), (a,a)); value a(n+1)/(kn+1), decreasing to a/k.
CandidatePair surface_family_term(long k, long n, const Rational& a);

// ((1/k,...,1/k), (1,...,1)) in arity d; value d/k, heading to 0.
CandidatePair zero_family_term(int d, long k);

// ((1/k,1/k), (0,a)) attains the limit a/k exactly, but only when 0 is an
// allowed coefficient; absent otherwise.
std::optional<CandidatePair> closedness_witness(long k, const Rational& a,
                                                const CoefficientSet& A);

// Base pair padded to arity d by x-entries 1 with coefficients 1/n; value
// pairing(base) + (d - s)/n, heading to pairing(base).
CandidatePair padded_family_term(const CandidatePair& base, int d, long n);

struct SequenceFamily {
  enum class Kind { SurfaceK, Zero, Padded };
  Kind kind;
  long k = 1;                         // SurfaceK: limit scale a/k
  Rational a;                         // SurfaceK: coefficient
  int d = 2;                          // Zero / Padded: ambient arity
  std::optional<CandidatePair> base;  // Padded
  CandidatePair term(long n) const;
};

struct TargetRecord {
  Rational value;
  std::vector<bool> attained;                    // per stage
  std::vector<std::optional<Rational>> nearest;  // nearest distinct value
  std::vector<std::optional<Rational>> gap;      // distance to it
};

struct ClusterRecord {
  Rational center;
  std::vector<Rational> gaps;  // per-stage nearest-distinct gaps
  bool in_predicted = false;
};

struct AccumulationReport {
  int dimension;
  CoefficientSet coefficients;
  std::vector<long> stages;
  Rational cluster_radius;
  std::vector<std::vector<Rational>> stage_values;  // sorted, one list per stage
  std::vector<Rational> predicted;  // {0} plus lower-arity values over the
                                    // scaled coefficient set at the last stage
  std::vector<TargetRecord> targets;   // one per predicted value
  std::vector<ClusterRecord> clusters;  // flagged centers only
};

// Runs enumerate_mld_set at each stage. A center (final-stage value or
// predicted point) is flagged as a cluster when its nearest distinct value
// approaches one-sidedly with strictly decreasing gaps ending within
// cluster_radius. Flagged centers outside `predicted` indicate a violation
// of the predicted-limit-set inclusion and are surfaced for tests to reject.
AccumulationReport accumulation_report(int d, const CoefficientSet& A,
                                       const std::vector<long>& stages,
                                       const Rational& cluster_radius);

}  // namespace toricmld
