#include "toricmld/sets.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

namespace toricmld {
namespace {

// Largest index we are willing to sweep in a membership check, and the
// largest raw candidate count one enumeration call may generate.
constexpr long kMembershipIndexLimit = 1000000;
constexpr double kEnumerationCandidateLimit = 5e6;

Rational one() { return Rational(1); }

}  // namespace

CoefficientSet::CoefficientSet(std::vector<Rational> values)
    : values_(std::move(values)) {
  if (values_.empty()) fail(Errc::InvalidInput, "coefficient set must not be empty");
  for (const auto& v : values_) {
    if (v.sign() < 0 || v > one())
      fail(Errc::InvalidInput, "coefficient set values must lie in [0,1]");
  }
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  if (!contains(one())) fail(Errc::InvalidInput, "coefficient set must contain 1");
}

bool CoefficientSet::contains(const Rational& r) const {
  return std::binary_search(values_.begin(), values_.end(), r);
}

CoefficientSet ScaledSet::values() const {
  if (n_max < 1) fail(Errc::InvalidInput, "scale bound must be positive");
  std::vector<Rational> out;
  out.reserve(base.values().size() * static_cast<size_t>(n_max));
  for (const auto& a : base.values())
    for (long n = 1; n <= n_max; ++n) out.push_back(a / Rational(n));
  return CoefficientSet(std::move(out));
}

CandidatePair::CandidatePair(RationalVector x_in, RationalVector a_in)
    : x(std::move(x_in)), a(std::move(a_in)) {
  if (x.size() == 0 || x.size() != a.size())
    fail(Errc::InvalidInput, "candidate pair needs matching nonempty x and a");
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i).sign() <= 0 || x(i) > one())
      fail(Errc::InvalidInput, "x entries must lie in (0,1]");
    if (a(i).sign() < 0 || a(i) > one())
      fail(Errc::InvalidInput, "a entries must lie in [0,1]");
  }
}

RationalVector shift(const RationalVector& x, long m) {
  RationalVector out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i).sign() <= 0 || x(i) > one())
      fail(Errc::InvalidInput, "shift requires entries in (0,1]");
    Rational mx = Rational(m) * x(i);
    out(i) = one() + mx - Rational(mx.ceil());
  }
  return out;
}

MembershipVerdict check_tilde_V(const CandidatePair& p) {
  Integer idx = index_of(p.x);
  if (idx > Integer(kMembershipIndexLimit))
    fail(Errc::ResourceLimit, "membership check index exceeds limit: " + idx.str());
  const long n = idx.to_long();
  // Shift is periodic in m with period n, and m = 0, 1 hold identically.
  for (long m = 1; m < n; ++m) {
    Rational diff = (shift(p.x, m) - p.x).dot(p.a);
    if (diff.sign() < 0) {
      MembershipVerdict v;
      v.ok = false;
      v.failing_m = m;
      v.deficit = diff;
      return v;
    }
  }
  return MembershipVerdict{};
}

MembershipVerdict check_V(const CandidatePair& p) {
  const int s = p.arity();
  if (s < 2) fail(Errc::InvalidInput, "membership requires arity at least 2");
  for (int i = 0; i < s; ++i) {
    Integer others(1);
    for (int j = 0; j < s; ++j)
      if (j != i) others = lcm(others, p.x(j).den());
    if (!(others % p.x(i).den()).is_zero()) {
      MembershipVerdict v;
      v.ok = false;
      v.failing_index = i;
      return v;
    }
  }
  return check_tilde_V(p);
}

bool tilde_V1_classify(const Rational& x, const Rational& a) {
  if (x.sign() <= 0 || x > one())
    fail(Errc::InvalidInput, "classification requires x in (0,1]");
  if (a.sign() < 0 || a > one())
    fail(Errc::InvalidInput, "classification requires a in [0,1]");
  return a.is_zero() || x.num() == Integer(1);
}

ToricGerm realize(const CandidatePair& p, int d) {
  const int s = p.arity();
  if (s < 2 || s > d)
    fail(Errc::InvalidInput, "realization requires 2 <= arity <= dimension");
  if (!in_V(p))
    fail(Errc::InvalidInput, "pair is not a member of the candidate set");

  RationalVector gen(d);
  for (int i = 0; i < d; ++i) gen(i) = i < s ? p.x(i) : Rational(0);
  SuperLattice lat(d, {gen});

  const int ncols = s == d ? d : d + 1;
  RationalMatrix rays(d, ncols);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < ncols; ++j) rays(i, j) = Rational(i == j ? 1 : 0);
  std::vector<Rational> b(static_cast<size_t>(ncols));
  for (int i = 0; i < s; ++i) b[static_cast<size_t>(i)] = one() - p.a(i);
  if (s < d) {
    // Extra ray (d-s)e_1 + e_2 - (e_{s+1} + ... + e_d) closing up the cone.
    rays(0, d) = Rational(d - s);
    rays(1, d) = rays(1, d) + one();
    for (int i = s; i < d; ++i) rays(i, d) = Rational(-1);
    for (int i = s; i < d; ++i) b[static_cast<size_t>(i)] = one() - p.a(0);
    b[static_cast<size_t>(d)] = one() - p.a(1);
  }

  ToricGerm germ(lat, rays, b);
  MldWitness w = mld_at_origin(germ);
  if (!(w.value == pairing(p)))
    fail(Errc::InternalError, "realized germ does not attain the expected value");
  return germ;
}

CandidatePair extract_candidate(const ToricGerm& germ) {
  MldWitness w = mld_at_origin(germ);
  const int s = static_cast<int>(w.subset.size());
  RationalVector a(s);
  for (int k = 0; k < s; ++k)
    a(k) = one() - germ.coefficients()[static_cast<size_t>(w.subset[static_cast<size_t>(k)])];
  CandidatePair p(w.coords, a);
  if (!(pairing(p) == w.value))
    fail(Errc::InternalError, "extracted pair does not reproduce the witness value");
  if (s >= 2 && !in_V(p))
    fail(Errc::InternalError, "extracted pair fails candidate-set membership");
  return p;
}

CandidatePair transfer_tilde_to_V(const CandidatePair& p) {
  const int s = p.arity();
  for (int i = 0; i < s; ++i)
    if (p.a(i).sign() <= 0)
      fail(Errc::InvalidInput, "transfer requires strictly positive coefficients");
  if (!in_tilde_V(p))
    fail(Errc::InvalidInput, "pair is not a member of the tilde set");

  SuperLattice lat(s, {p.x});
  RationalVector xp(s), ap(s);
  for (int i = 0; i < s; ++i) {
    RationalVector unit(s);
    for (int j = 0; j < s; ++j) unit(j) = Rational(i == j ? 1 : 0);
    auto coords = lat.coordinates(unit);
    if (!coords) fail(Errc::InternalError, "standard vector missing from its own lattice");
    // n_i = largest n with e_i/n still in the lattice: the content of coords.
    Integer n(0);
    for (Eigen::Index j = 0; j < coords->size(); ++j) n = gcd(n, (*coords)(j));
    xp(i) = p.x(i) * Rational(n);
    ap(i) = p.a(i) / Rational(n);
    if (xp(i) > one())
      fail(Errc::InternalError, "transfer pushed a coordinate past 1");
  }
  CandidatePair out(xp, ap);
  if (!(pairing(out) == pairing(p)))
    fail(Errc::InternalError, "transfer changed the pairing");
  if (!in_V(out))
    fail(Errc::InternalError, "transfer image fails candidate-set membership");
  return out;
}

std::vector<Rational> EnumeratedMldSet::values() const {
  std::vector<Rational> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.value);
  return out;
}

EnumeratedMldSet enumerate_mld_set(int d, const CoefficientSet& A, long q_max) {
  if (d < 2) fail(Errc::InvalidInput, "enumeration requires dimension at least 2");
  if (q_max < 1) fail(Errc::InvalidInput, "index bound must be positive");

  const double na = static_cast<double>(A.values().size());
  double total = 0;
  for (int s = 2; s <= d; ++s) {
    double pa = std::pow(na, s);
    for (long q = 1; q <= q_max; ++q) total += std::pow(static_cast<double>(q), s) * pa;
  }
  if (total > kEnumerationCandidateLimit)
    fail(Errc::ResourceLimit, "enumeration candidate count exceeds limit");

  struct Cand {
    Rational value;
    int s;
    RationalVector x;
    RationalVector a;
  };
  std::vector<Cand> cands;

  const auto& av = A.values();
  for (int s = 2; s <= d; ++s) {
    for (long q = 1; q <= q_max; ++q) {
      std::vector<long> num(static_cast<size_t>(s), 1);
      while (true) {
        RationalVector x(s);
        for (int i = 0; i < s; ++i) x(i) = Rational(num[static_cast<size_t>(i)], q);
        // Keep each x once: exactly at the q equal to its true index.
        if (index_of(x) == Integer(q)) {
          std::vector<size_t> ai(static_cast<size_t>(s), 0);
          while (true) {
            RationalVector a(s);
            for (int i = 0; i < s; ++i) a(i) = av[ai[static_cast<size_t>(i)]];
            CandidatePair p(x, a);
            if (in_V(p)) cands.push_back(Cand{pairing(p), s, x, a});
            int k = s - 1;
            while (k >= 0 && ai[static_cast<size_t>(k)] + 1 == av.size()) {
              ai[static_cast<size_t>(k)] = 0;
              --k;
            }
            if (k < 0) break;
            ++ai[static_cast<size_t>(k)];
          }
        }
        int k = s - 1;
        while (k >= 0 && num[static_cast<size_t>(k)] + 1 > q) {
          num[static_cast<size_t>(k)] = 1;
          --k;
        }
        if (k < 0) break;
        ++num[static_cast<size_t>(k)];
      }
    }
  }

  std::sort(cands.begin(), cands.end(), [](const Cand& l, const Cand& r) {
    if (l.value != r.value) return l.value < r.value;
    if (l.s != r.s) return l.s < r.s;
    if (lex_less(l.x, r.x)) return true;
    if (lex_less(r.x, l.x)) return false;
    return lex_less(l.a, r.a);
  });

  EnumeratedMldSet out{d, A, q_max, {}};
  for (size_t i = 0; i < cands.size(); ++i) {
    if (i > 0 && cands[i].value == cands[i - 1].value) continue;
    CandidatePair witness(cands[i].x, cands[i].a);
    ToricGerm germ = realize(witness, d);
    out.entries.push_back(MldSetEntry{cands[i].value, std::move(witness), std::move(germ)});
  }
  return out;
}

}  // namespace toricmld
