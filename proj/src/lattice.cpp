#include "toricmld/lattice.hpp"

#include <algorithm>

namespace toricmld {

namespace {
constexpr long kBoxPointLimit = 1000000;
}

Integer index_of(const RationalVector& x) { return common_denominator(x); }

SuperLattice::SuperLattice(int dim, std::vector<RationalVector> extra_generators)
    : dim_(dim), gens_(std::move(extra_generators)) {
  if (dim_ < 1) fail(Errc::InvalidInput, "lattice dimension must be positive");
  Integer d(1);
  for (const auto& g : gens_) {
    if (g.size() != dim_) fail(Errc::InvalidInput, "generator dimension mismatch");
    d = lcm(d, common_denominator(g));
  }

  // Rows of the stacked matrix generate d*N inside Z^dim.
  IntegerMatrix stacked(dim_ + static_cast<Eigen::Index>(gens_.size()), dim_);
  stacked.setZero();
  for (Eigen::Index i = 0; i < dim_; ++i) stacked(i, i) = d;
  for (size_t j = 0; j < gens_.size(); ++j)
    for (Eigen::Index i = 0; i < dim_; ++i)
      stacked(dim_ + static_cast<Eigen::Index>(j), i) =
          divexact(gens_[j](i).num() * d, gens_[j](i).den());

  IntegerMatrix h = hermite_normal_form(stacked);
  if (h.rows() != dim_) fail(Errc::InternalError, "superlattice basis is rank deficient");
  basis_.mat = h.transpose();  // columns are basis vectors, lower triangular
  basis_.denom = d;

  Integer det(1);
  for (Eigen::Index i = 0; i < dim_; ++i) det *= basis_.mat(i, i);
  Integer dpow(1);
  for (Eigen::Index i = 0; i < dim_; ++i) dpow *= d;
  index_ = divexact(dpow, det);  // [N : Z^d] = d^dim / det
}

std::optional<IntegerVector> SuperLattice::coordinates(const RationalVector& v) const {
  if (v.size() != dim_) fail(Errc::InvalidInput, "vector dimension mismatch");
  // Forward substitution against the lower-triangular basis numerator.
  RationalVector y(dim_);
  Rational denom(basis_.denom);
  for (Eigen::Index i = 0; i < dim_; ++i) {
    Rational rhs = v(i) * denom;
    for (Eigen::Index j = 0; j < i; ++j) rhs -= Rational(basis_.mat(i, j)) * y(j);
    y(i) = rhs / Rational(basis_.mat(i, i));
  }
  IntegerVector out(dim_);
  for (Eigen::Index i = 0; i < dim_; ++i) {
    if (!y(i).is_integer()) return std::nullopt;
    out(i) = y(i).num();
  }
  return out;
}

RationalVector SuperLattice::from_coordinates(const IntegerVector& y) const {
  if (y.size() != dim_) fail(Errc::InvalidInput, "coordinate dimension mismatch");
  RationalVector out = (basis_.mat * y).cast<Rational>();
  Rational denom(basis_.denom);
  for (Eigen::Index i = 0; i < dim_; ++i) out(i) /= denom;
  return out;
}

bool is_member(const SuperLattice& lat, const RationalVector& v) {
  return lat.coordinates(v).has_value();
}

bool is_primitive(const SuperLattice& lat, const RationalVector& v) {
  auto y = lat.coordinates(v);
  if (!y) fail(Errc::NotInLattice, "primitivity is only defined for lattice members");
  Integer g(0);
  for (Eigen::Index i = 0; i < y->size(); ++i) g = gcd(g, (*y)(i));
  if (g.is_zero()) fail(Errc::InvalidInput, "primitivity is undefined for the zero vector");
  return g.is_one();
}

IntegerMatrix saturation_basis(const IntegerMatrix& y) {
  const Eigen::Index s = y.cols();
  SmithDecomposition snf = smith_normal_form(y);
  for (Eigen::Index i = 0; i < s; ++i)
    if (snf.d(i, i).is_zero()) fail(Errc::InvalidInput, "saturation of a rank-deficient matrix");
  // First s columns of U^{-1} span span_Q(y) ∩ Z^d; canonicalize via Hermite.
  IntegerMatrix raw = snf.u_inv.leftCols(s);
  IntegerMatrix h = hermite_normal_form(IntegerMatrix(raw.transpose()));
  if (h.rows() != s) fail(Errc::InternalError, "saturation basis lost rank");
  return h.transpose();
}

std::vector<BoxPoint> box_points_with_coords(const SuperLattice& lat, const RationalMatrix& rays) {
  const Eigen::Index d = lat.dim(), s = rays.cols();
  if (rays.rows() != d) fail(Errc::InvalidInput, "ray dimension mismatch");
  if (s < 1) fail(Errc::InvalidInput, "box of zero rays");

  IntegerMatrix y(d, s);
  for (Eigen::Index j = 0; j < s; ++j) {
    auto c = lat.coordinates(rays.col(j));
    if (!c) fail(Errc::NotInLattice, "box ray is not a lattice member");
    y.col(j) = *c;
  }
  if (rank_exact(to_rational(y)) != s) fail(Errc::InvalidInput, "box rays are linearly dependent");

  SmithDecomposition snf = smith_normal_form(y);
  std::vector<long> diag(static_cast<size_t>(s));
  long count = 1;
  for (Eigen::Index i = 0; i < s; ++i) {
    diag[static_cast<size_t>(i)] = snf.d(i, i).to_long();
    if (count > kBoxPointLimit / diag[static_cast<size_t>(i)])
      fail(Errc::ResourceLimit, "box point count exceeds limit");
    count *= diag[static_cast<size_t>(i)];
  }

  std::vector<BoxPoint> out;
  out.reserve(static_cast<size_t>(count));
  std::vector<long> k(static_cast<size_t>(s), 0);
  for (long iter = 0; iter < count; ++iter) {
    // Coset representative in lattice coordinates: U^{-1} * (k, 0, ..., 0).
    IntegerVector z = IntegerVector::Zero(d);
    for (Eigen::Index i = 0; i < s; ++i) {
      if (k[static_cast<size_t>(i)] == 0) continue;
      z += Integer(k[static_cast<size_t>(i)]) * snf.u_inv.col(i);
    }
    RationalVector p = lat.from_coordinates(z);
    auto t = solve_exact(rays, p);
    if (!t) fail(Errc::InternalError, "coset representative left the ray span");
    // Translate by the ray lattice into the half-open box (0,1]^s.
    RationalVector tt = *t;
    for (Eigen::Index i = 0; i < s; ++i) tt(i) = tt(i) - Rational(tt(i).ceil()) + Rational(1);
    out.push_back(BoxPoint{rays * tt, tt});

    for (Eigen::Index i = s - 1; i >= 0; --i) {
      if (++k[static_cast<size_t>(i)] < diag[static_cast<size_t>(i)]) break;
      k[static_cast<size_t>(i)] = 0;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const BoxPoint& a, const BoxPoint& b) { return lex_less(a.coords, b.coords); });
  return out;
}

std::vector<RationalVector> box_points(const SuperLattice& lat, const RationalMatrix& rays) {
  std::vector<RationalVector> out;
  for (auto& bp : box_points_with_coords(lat, rays)) out.push_back(std::move(bp.point));
  return out;
}

}  // namespace toricmld
