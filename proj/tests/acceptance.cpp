// Acceptance harness: runs ten end-to-end checks against the library, prints
// one pass/fail line per check with its wall time, and exits nonzero if any
// check fails or overruns its time budget.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "toricmld/accumulation.hpp"
#include "toricmld/io.hpp"

using namespace toricmld;

namespace {

int failures = 0;

Rational rat(const char* s) { return parse_rational(s); }

std::vector<Rational> rats(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* s : xs) out.push_back(rat(s));
  return out;
}

RationalVector rvec(std::initializer_list<Rational> xs) {
  RationalVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

ToricGerm orthant_germ(const SuperLattice& lat, int d) {
  RationalMatrix rays = RationalMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) rays(i, i) = Rational(1);
  return ToricGerm(lat, rays, std::vector<Rational>(static_cast<size_t>(d), Rational(0)));
}

// All x in (0,1]^2 whose coordinate denominators have lcm <= q_max.
std::vector<RationalVector> x_pairs_up_to_index(long q_max) {
  std::vector<RationalVector> out;
  for (long q1 = 1; q1 <= q_max; ++q1)
    for (long q2 = 1; q2 <= q_max; ++q2) {
      if (std::lcm(q1, q2) > q_max) continue;
      for (long p1 = 1; p1 <= q1; ++p1)
        for (long p2 = 1; p2 <= q2; ++p2) {
          if (std::gcd(p1, q1) != 1 || std::gcd(p2, q2) != 1) continue;
          out.push_back(rvec({Rational(p1, q1), Rational(p2, q2)}));
        }
    }
  return out;
}

// Definitional sweep: every integer translate must not lower the pairing.
bool sweep_member(const RationalVector& x, const RationalVector& a, long m_lo, long m_hi) {
  for (long m = m_lo; m <= m_hi; ++m) {
    Rational diff = (shift(x, m) - x).dot(a);
    if (diff.sign() < 0) return false;
  }
  return true;
}

template <typename Body>
void criterion(int number, const std::string& what, long budget_ms, Body&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = body();
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("; error: ") + e.what();
  }
  const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  if (ok && budget_ms > 0 && ms > budget_ms) {
    ok = false;
    detail += "; exceeded " + std::to_string(budget_ms) + " ms budget";
  }
  std::cout << "criterion " << number << ": " << (ok ? "pass" : "FAIL") << " - " << what
            << detail << " (" << ms << " ms)\n";
  if (!ok) ++failures;
}

}  // namespace

int main() {
  criterion(1, "smooth germs in dimensions 2..5 have mld equal to the dimension", 1000, [] {
    for (int d = 2; d <= 5; ++d) {
      MldWitness w = mld_at_origin(orthant_germ(SuperLattice(d), d));
      if (!(w.value == Rational(d))) return false;
      for (int i = 0; i < d; ++i)
        if (!(w.point(i) == Rational(1))) return false;
    }
    return true;
  });

  criterion(2, "cyclic quotients of type (1,..,1)/r have mld d/r with witness (1/r,..,1/r)",
            0, [] {
              for (int d = 2; d <= 3; ++d)
                for (long r = 2; r <= 6; ++r) {
                  RationalVector gen(d);
                  for (int i = 0; i < d; ++i) gen(i) = Rational(1, r);
                  MldWitness w = mld_at_origin(orthant_germ(SuperLattice(d, {gen}), d));
                  if (!(w.value == Rational(d, r))) return false;
                  for (int i = 0; i < d; ++i)
                    if (!(w.point(i) == Rational(1, r))) return false;
                }
              return true;
            });

  criterion(3,
            "enumerated value sets match frozen lists and witness extraction "
            "recovers each value",
            60000, [] {
              EnumeratedMldSet s2 = enumerate_mld_set(2, CoefficientSet({Rational(1)}), 6);
              if (s2.values() != rats({"1/3", "2/5", "1/2", "3/5", "2/3", "1", "2"}))
                return false;
              EnumeratedMldSet s3 =
                  enumerate_mld_set(3, CoefficientSet({Rational(1), Rational(1, 2)}), 4);
              if (s3.values() !=
                  rats({"1/4", "1/3", "3/8", "1/2", "5/8", "2/3", "3/4", "5/6",
                        "7/8", "1",   "9/8", "7/6", "5/4", "4/3", "11/8", "3/2",
                        "13/8", "5/3", "7/4", "2", "5/2", "3"}))
                return false;
              for (const auto* set : {&s2, &s3})
                for (const auto& e : set->entries)
                  if (!(pairing(extract_candidate(e.germ)) == e.value)) return false;
              return true;
            });

  criterion(4, "arity-1 closed form matches the definitional sweep for denominators up to 40",
            5000, [] {
              const std::vector<Rational> as = rats({"0", "1/3", "1/2", "1"});
              for (long q = 1; q <= 40; ++q)
                for (long p = 1; p <= q; ++p) {
                  if (std::gcd(p, q) != 1) continue;
                  const Rational x(p, q);
                  for (const auto& a : as) {
                    RationalVector xv = rvec({x}), av = rvec({a});
                    const bool swept = sweep_member(xv, av, 1, q - 1);
                    if (tilde_V1_classify(x, a) != swept) return false;
                  }
                }
              return true;
            });

  criterion(5, "every surface member with index at most 4 is realized in dimensions 3 and 4",
            0, [] {
              const std::vector<Rational> as = rats({"1", "1/2"});
              long members = 0;
              for (const auto& x : x_pairs_up_to_index(4))
                for (const auto& a1 : as)
                  for (const auto& a2 : as) {
                    CandidatePair p(x, rvec({a1, a2}));
                    if (!in_V(p)) continue;
                    ++members;
                    for (int d : {3, 4}) {
                      ToricGerm g = realize(p, d);
                      if (!(mld_at_origin(g).value == pairing(p))) return false;
                    }
                  }
              return members > 0;
            });

  criterion(6, "surface families stay members with the expected values and shrinking gaps",
            0, [] {
              for (long k = 1; k <= 3; ++k)
                for (const auto& a : rats({"1", "1/2"})) {
                  std::optional<Rational> prev_gap;
                  for (long n = 1; n <= 20; ++n) {
                    CandidatePair t = surface_family_term(k, n, a);
                    if (!in_V(t)) return false;
                    const Rational value = pairing(t);
                    if (!(value == a * Rational(n + 1, k * n + 1))) return false;
                    const Rational gap = value - a / Rational(k);
                    if (!(gap == a * Rational(k - 1) / (Rational(k) * Rational(k * n + 1))))
                      return false;
                    if (k == 1 && !gap.is_zero()) return false;
                    if (k >= 2) {
                      if (gap.sign() <= 0) return false;
                      if (prev_gap && !(gap < *prev_gap)) return false;
                      prev_gap = gap;
                    }
                  }
                }
              return true;
            });

  criterion(7,
            "relaxed members with index at most 6 transfer into the candidate set "
            "with the value preserved",
            0, [] {
              const std::vector<Rational> as = rats({"1", "1/2"});
              const CoefficientSet image_pool =
                  ScaledSet{CoefficientSet({Rational(1), Rational(1, 2)}), 6}.values();
              long members = 0;
              for (const auto& x : x_pairs_up_to_index(6))
                for (const auto& a1 : as)
                  for (const auto& a2 : as) {
                    CandidatePair p(x, rvec({a1, a2}));
                    if (!in_tilde_V(p)) continue;
                    ++members;
                    CandidatePair q = transfer_tilde_to_V(p);
                    if (!in_V(q)) return false;
                    if (!(pairing(q) == pairing(p))) return false;
                    for (int i = 0; i < q.arity(); ++i)
                      if (!image_pool.contains(q.a(i))) return false;
                  }
              return members > 0;
            });

  criterion(8, "randomized membership verdicts agree with a wide definitional sweep", 0, [] {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> den(1, 12);
    const std::vector<Rational> as = rats({"0", "1/4", "1/3", "1/2", "1"});
    std::uniform_int_distribution<size_t> apick(0, as.size() - 1);
    int done = 0;
    while (done < 200) {
      const long q1 = den(rng), q2 = den(rng);
      if (std::lcm(q1, q2) > 12) continue;
      std::uniform_int_distribution<long> n1(1, q1), n2(1, q2);
      CandidatePair p(rvec({Rational(n1(rng), q1), Rational(n2(rng), q2)}),
                      rvec({as[apick(rng)], as[apick(rng)]}));
      if (in_tilde_V(p) != sweep_member(p.x, p.a, -36, 36)) return false;
      ++done;
    }
    return true;
  });

  criterion(9,
            "limit structure near 1/2 and 1/k: the gap shrinks with the index bound, "
            "and 1/k is attained exactly when 0 is an allowed coefficient",
            0, [] {
              EnumeratedMldSet s = enumerate_mld_set(2, CoefficientSet({Rational(1)}), 11);
              std::optional<Rational> best;
              for (const auto& v : s.values()) {
                if (v.is_zero()) return false;
                if (v == Rational(1, 2)) continue;
                Rational gap = v - Rational(1, 2);
                if (gap.sign() < 0) gap = -gap;
                if (!best || gap < *best) best = gap;
              }
              if (!best || best->sign() <= 0 || *best > Rational(1, 11)) return false;

              const CoefficientSet ones({Rational(1)});
              for (long k = 2; k <= 6; ++k)
                if (closedness_witness(k, Rational(1), ones)) return false;

              const CoefficientSet zero_one({Rational(0), Rational(1)});
              for (long k = 2; k <= 6; ++k) {
                auto w = closedness_witness(k, Rational(1), zero_one);
                if (!w || !(pairing(*w) == Rational(1, k))) return false;
                auto vals = enumerate_mld_set(2, zero_one, k).values();
                if (!std::binary_search(vals.begin(), vals.end(), Rational(1, k)))
                  return false;
              }
              return true;
            });

  criterion(10,
            "every flagged accumulation center over stages 3,5,9,11 is a predicted "
            "limit of the form 0 or 1/n",
            60000, [] {
              AccumulationReport rep = accumulation_report(
                  2, CoefficientSet({Rational(1)}), {3, 5, 9, 11}, Rational(1, 8));
              if (rep.clusters.empty()) return false;
              std::vector<Rational> allowed = {Rational(0)};
              for (long n = 1; n <= 11; ++n) allowed.push_back(Rational(1, n));
              for (const auto& c : rep.clusters) {
                if (!c.in_predicted) return false;
                bool found = false;
                for (const auto& v : allowed)
                  if (v == c.center) found = true;
                if (!found) return false;
              }
              return true;
            });

  if (failures == 0) {
    std::cout << "acceptance: all 10 criteria passed\n";
    return EXIT_SUCCESS;
  }
  std::cout << "acceptance: " << failures << " criterion(s) failed\n";
  return EXIT_FAILURE;
}
