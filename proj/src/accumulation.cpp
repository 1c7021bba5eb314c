#include "toricmld/accumulation.hpp"

#include <algorithm>
#include <cstddef>

namespace toricmld {
namespace {

CandidatePair checked_member(RationalVector x, RationalVector a, const char* what) {
  CandidatePair p(std::move(x), std::move(a));
  if (!in_V(p)) fail(Errc::InternalError, std::string(what) + " term fails membership");
  return p;
}

// Nearest value distinct from c in a sorted list, split by side.
struct Neighborhood {
  std::optional<Rational> below_gap;
  std::optional<Rational> above_gap;
};

Neighborhood neighborhood(const std::vector<Rational>& sorted, const Rational& c) {
  Neighborhood nb;
  auto lo = std::lower_bound(sorted.begin(), sorted.end(), c);
  if (lo != sorted.begin()) nb.below_gap = c - *(lo - 1);
  auto hi = lo;
  while (hi != sorted.end() && *hi == c) ++hi;
  if (hi != sorted.end()) nb.above_gap = *hi - c;
  return nb;
}

}  // namespace

CandidatePair surface_family_term(long k, long n, const Rational& a) {
  if (k < 1 || n < 1) fail(Errc::InvalidInput, "family parameters must be positive");
  RationalVector x(2), co(2);
  x(0) = Rational(1, k * n + 1);
  x(1) = Rational(n, k * n + 1);
  co(0) = co(1) = a;
  return checked_member(std::move(x), std::move(co), "surface family");
}

CandidatePair zero_family_term(int d, long k) {
  if (d < 2 || k < 1) fail(Errc::InvalidInput, "family parameters must be positive");
  RationalVector x(d), co(d);
  for (int i = 0; i < d; ++i) {
    x(i) = Rational(1, k);
    co(i) = Rational(1);
  }
  return checked_member(std::move(x), std::move(co), "zero family");
}

std::optional<CandidatePair> closedness_witness(long k, const Rational& a,
                                                const CoefficientSet& A) {
  if (k < 1) fail(Errc::InvalidInput, "family parameters must be positive");
  if (!A.contains(a)) fail(Errc::InvalidInput, "coefficient not drawn from the set");
  if (!A.contains(Rational(0))) return std::nullopt;
  RationalVector x(2), co(2);
  x(0) = x(1) = Rational(1, k);
  co(0) = Rational(0);
  co(1) = a;
  return checked_member(std::move(x), std::move(co), "closedness witness");
}

CandidatePair padded_family_term(const CandidatePair& base, int d, long n) {
  const int s = base.arity();
  if (s < 2 || s > d || n < 1) fail(Errc::InvalidInput, "bad padding parameters");
  if (!in_V(base)) fail(Errc::InvalidInput, "base pair is not a member");
  if (s == d) return base;
  RationalVector x(d), co(d);
  for (int i = 0; i < s; ++i) {
    x(i) = base.x(i);
    co(i) = base.a(i);
  }
  for (int i = s; i < d; ++i) {
    x(i) = Rational(1);
    co(i) = Rational(1, n);
  }
  return checked_member(std::move(x), std::move(co), "padded family");
}

CandidatePair SequenceFamily::term(long n) const {
  switch (kind) {
    case Kind::SurfaceK:
      return surface_family_term(k, n, a);
    case Kind::Zero:
      return zero_family_term(d, n);
    case Kind::Padded:
      if (!base) fail(Errc::InvalidInput, "padded family needs a base pair");
      return padded_family_term(*base, d, n);
  }
  fail(Errc::InternalError, "unknown family kind");
}

AccumulationReport accumulation_report(int d, const CoefficientSet& A,
                                       const std::vector<long>& stages,
                                       const Rational& cluster_radius) {
  if (d < 2) fail(Errc::InvalidInput, "report requires dimension at least 2");
  if (stages.empty()) fail(Errc::InvalidInput, "at least one stage is required");
  for (size_t i = 0; i < stages.size(); ++i) {
    if (stages[i] < 1 || (i > 0 && stages[i] <= stages[i - 1]))
      fail(Errc::InvalidInput, "stages must be strictly increasing positive integers");
  }
  if (cluster_radius.sign() <= 0)
    fail(Errc::InvalidInput, "cluster radius must be positive");

  AccumulationReport rep{d, A, stages, cluster_radius, {}, {}, {}, {}};
  for (long q : stages)
    rep.stage_values.push_back(enumerate_mld_set(d, A, q).values());

  // Predicted limit set: 0 together with every value attainable in lower
  // arity over coefficients a/n, truncated at the last stage's bound.
  const long last = stages.back();
  CoefficientSet scaled = ScaledSet{A, last}.values();
  rep.predicted.push_back(Rational(0));
  for (const auto& v : scaled.values()) rep.predicted.push_back(v);  // arity 1
  for (int dp = 2; dp < d; ++dp)
    for (const auto& v : enumerate_mld_set(dp, scaled, last).values())
      rep.predicted.push_back(v);
  std::sort(rep.predicted.begin(), rep.predicted.end());
  rep.predicted.erase(std::unique(rep.predicted.begin(), rep.predicted.end()),
                      rep.predicted.end());

  for (const auto& v : rep.predicted) {
    TargetRecord t;
    t.value = v;
    for (const auto& vals : rep.stage_values) {
      t.attained.push_back(std::binary_search(vals.begin(), vals.end(), v));
      Neighborhood nb = neighborhood(vals, v);
      if (nb.below_gap && (!nb.above_gap || *nb.below_gap <= *nb.above_gap)) {
        t.nearest.push_back(v - *nb.below_gap);
        t.gap.push_back(*nb.below_gap);
      } else if (nb.above_gap) {
        t.nearest.push_back(v + *nb.above_gap);
        t.gap.push_back(*nb.above_gap);
      } else {
        t.nearest.push_back(std::nullopt);
        t.gap.push_back(std::nullopt);
      }
    }
    rep.targets.push_back(std::move(t));
  }

  std::vector<Rational> centers = rep.stage_values.back();
  centers.insert(centers.end(), rep.predicted.begin(), rep.predicted.end());
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());

  // A genuine limit a/k is approached by a family whose nearest term at
  // stage q sits at distance between about a/(2q) and d/q. Gate the gap
  // into that band at every stage, so transients of the growing finite set
  // (values sweeping past a bystander center) fall out: they enter too wide
  // early and land too close late.
  Rational a_min;
  for (const auto& a : A.values())
    if (a.sign() > 0) {
      a_min = a;
      break;
    }

  for (const auto& c : centers) {
    // One-sided approach: the nearest distinct value must sit on the same
    // side at every stage, with strictly shrinking gaps ending inside the
    // radius. Two-sided "sandwich" artifacts are thereby ignored.
    bool usable = stages.size() >= 2;
    int side = 0;  // -1 below, +1 above
    std::vector<Rational> gaps;
    for (size_t si = 0; si < rep.stage_values.size() && usable; ++si) {
      Neighborhood nb = neighborhood(rep.stage_values[si], c);
      int st_side;
      Rational g;
      if (nb.below_gap && (!nb.above_gap || *nb.below_gap < *nb.above_gap)) {
        st_side = -1;
        g = *nb.below_gap;
      } else if (nb.above_gap && (!nb.below_gap || *nb.above_gap < *nb.below_gap)) {
        st_side = 1;
        g = *nb.above_gap;
      } else {
        usable = false;  // no distinct neighbor, or an equidistant tie
        break;
      }
      const Rational q(stages[si]);
      if (g < a_min / (Rational(2) * q) || g > Rational(d) / q) {
        usable = false;
        break;
      }
      if (side == 0) side = st_side;
      if (st_side != side || (!gaps.empty() && !(g < gaps.back()))) {
        usable = false;
        break;
      }
      gaps.push_back(g);
    }
    if (!usable || gaps.size() != stages.size()) continue;
    if (!(gaps.back() <= cluster_radius)) continue;
    ClusterRecord cl;
    cl.center = c;
    cl.gaps = std::move(gaps);
    cl.in_predicted =
        std::binary_search(rep.predicted.begin(), rep.predicted.end(), c);
    rep.clusters.push_back(std::move(cl));
  }
  return rep;
}

}  // namespace toricmld
