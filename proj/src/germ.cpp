#include "toricmld/germ.hpp"

#include <algorithm>

namespace toricmld {

namespace {

constexpr int kMaxRays = 32;

// Visit all size-k index subsets of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(int n, int k, F&& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

RationalMatrix select_columns(const RationalMatrix& m, const std::vector<int>& idx) {
  RationalMatrix out(m.rows(), static_cast<Eigen::Index>(idx.size()));
  for (size_t j = 0; j < idx.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = m.col(idx[j]);
  return out;
}

bool integer_vector_eq(const IntegerVector& a, const IntegerVector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

// All supporting hyperplanes spanned by d-1 independent rays, oriented inward.
IntegerMatrix compute_facets(const RationalMatrix& rays) {
  const Eigen::Index d = rays.rows();
  const int n = static_cast<int>(rays.cols());
  std::vector<IntegerVector> normals;
  for_each_subset(n, static_cast<int>(d) - 1, [&](const std::vector<int>& idx) {
    RationalMatrix sub(static_cast<Eigen::Index>(idx.size()), d);
    for (size_t r = 0; r < idx.size(); ++r) sub.row(static_cast<Eigen::Index>(r)) = rays.col(idx[r]).transpose();
    auto u = hyperplane_normal(sub);
    if (!u) return;  // subset does not span a hyperplane
    RationalVector ur = to_rational(*u);
    bool nonneg = true, nonpos = true;
    for (int j = 0; j < n; ++j) {
      int s = ur.dot(rays.col(j)).sign();
      if (s < 0) nonneg = false;
      if (s > 0) nonpos = false;
    }
    if (nonneg == nonpos) return;  // either no side (impossible) or both: not supporting
    IntegerVector oriented = nonneg ? *u : IntegerVector(-*u);
    for (const auto& seen : normals)
      if (integer_vector_eq(seen, oriented)) return;
    normals.push_back(std::move(oriented));
  });
  std::sort(normals.begin(), normals.end(), [](const IntegerVector& a, const IntegerVector& b) {
    return lex_less(to_rational(a), to_rational(b));
  });
  IntegerMatrix out(d, static_cast<Eigen::Index>(normals.size()));
  for (size_t j = 0; j < normals.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = normals[j];
  return out;
}

}  // namespace

ToricGerm::ToricGerm(SuperLattice lattice, RationalMatrix rays, std::vector<Rational> coefficients)
    : lattice_(std::move(lattice)), rays_(std::move(rays)), coeffs_(std::move(coefficients)) {
  const Eigen::Index d = lattice_.dim();
  const int n = static_cast<int>(rays_.cols());
  if (rays_.rows() != d) fail(Errc::InvalidInput, "ray dimension mismatch");
  if (n < 1) fail(Errc::InvalidInput, "germ needs at least one ray");
  if (n > kMaxRays) fail(Errc::ResourceLimit, "too many rays");
  if (static_cast<int>(coeffs_.size()) != n)
    fail(Errc::InvalidInput, "coefficient count does not match ray count");
  for (const auto& b : coeffs_) {
    if (b.sign() < 0) fail(Errc::InvalidInput, "negative boundary coefficient " + b.str());
    if (b > Rational(1)) fail(Errc::NotLogCanonical, "boundary coefficient " + b.str() + " exceeds 1");
  }
  for (int i = 0; i < n; ++i) {
    RationalVector ray = rays_.col(i);
    bool zero = true;
    for (Eigen::Index r = 0; r < d; ++r)
      if (!ray(r).is_zero()) { zero = false; break; }
    if (zero) fail(Errc::InvalidInput, "zero ray");
    if (!is_member(lattice_, ray)) fail(Errc::NotInLattice, "ray is not a lattice member");
    if (!is_primitive(lattice_, ray)) fail(Errc::NotPrimitive, "ray is not primitive in the lattice");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool eq = true;
      for (Eigen::Index r = 0; r < d; ++r)
        if (rays_(r, i) != rays_(r, j)) { eq = false; break; }
      if (eq) fail(Errc::DuplicateRay, "repeated ray");
    }
  if (rank_exact(RationalMatrix(rays_.transpose())) != d)
    fail(Errc::NotFullDimensional, "rays do not span the ambient space");

  facets_ = compute_facets(rays_);

  // Pointedness certificate: the facet normals' sum must be strictly positive
  // on every ray; any lineality direction would force it to vanish somewhere.
  RationalVector cert = RationalVector::Zero(d);
  for (Eigen::Index j = 0; j < facets_.cols(); ++j) cert += to_rational(IntegerVector(facets_.col(j)));
  for (int i = 0; i < n; ++i)
    if (cert.dot(rays_.col(i)).sign() <= 0)
      fail(Errc::NonConvex, "cone is not strongly convex");
}

bool ToricGerm::in_cone(const RationalVector& v) const {
  if (v.size() != dim()) fail(Errc::InvalidInput, "vector dimension mismatch");
  for (Eigen::Index j = 0; j < facets_.cols(); ++j)
    if (to_rational(IntegerVector(facets_.col(j))).dot(v).sign() < 0) return false;
  return true;
}

bool ToricGerm::in_relint(const RationalVector& v) const {
  if (v.size() != dim()) fail(Errc::InvalidInput, "vector dimension mismatch");
  for (Eigen::Index j = 0; j < facets_.cols(); ++j)
    if (to_rational(IntegerVector(facets_.col(j))).dot(v).sign() <= 0) return false;
  return true;
}

LogDiscrepancyFunction compute_psi(const ToricGerm& germ) {
  const Eigen::Index d = germ.dim();
  const int n = germ.num_rays();
  // Greedy maximal independent subset, then solve the square system.
  std::vector<int> basis_idx;
  RationalMatrix acc(0, d);
  for (int i = 0; i < n && static_cast<Eigen::Index>(basis_idx.size()) < d; ++i) {
    RationalMatrix trial(acc.rows() + 1, d);
    trial.topRows(acc.rows()) = acc;
    trial.row(acc.rows()) = germ.rays().col(i).transpose();
    if (rank_exact(trial) == trial.rows()) {
      acc = trial;
      basis_idx.push_back(i);
    }
  }
  RationalVector rhs(d);
  for (Eigen::Index r = 0; r < d; ++r)
    rhs(r) = Rational(1) - germ.coefficients()[static_cast<size_t>(basis_idx[static_cast<size_t>(r)])];
  auto psi = solve_exact(acc, rhs);
  if (!psi) fail(Errc::InternalError, "log-discrepancy system is inconsistent");
  LogDiscrepancyFunction f{*psi};
  for (int i = 0; i < n; ++i) {
    if (f(germ.rays().col(i)) != Rational(1) - germ.coefficients()[static_cast<size_t>(i)])
      fail(Errc::NotRCartier, "no single covector matches all ray discrepancies");
  }
  return f;
}

Rational log_discrepancy_of_divisor(const ToricGerm& germ, const RationalVector& e) {
  if (!is_member(germ.lattice(), e)) fail(Errc::NotInLattice, "divisor direction is not a lattice member");
  if (!is_primitive(germ.lattice(), e)) fail(Errc::NotPrimitive, "divisor direction is not primitive");
  if (!germ.in_cone(e)) fail(Errc::InvalidInput, "divisor direction lies outside the cone");
  return compute_psi(germ)(e);
}

MldWitness mld_at_origin(const ToricGerm& germ) {
  LogDiscrepancyFunction psi = compute_psi(germ);
  const Eigen::Index d = germ.dim();
  const int n = germ.num_rays();
  bool have = false;
  MldWitness best;
  for (int s = 1; s <= static_cast<int>(d); ++s) {
    for_each_subset(n, s, [&](const std::vector<int>& idx) {
      RationalMatrix sub = select_columns(germ.rays(), idx);
      if (rank_exact(RationalMatrix(sub.transpose())) != sub.cols()) return;
      for (const auto& bp : box_points_with_coords(germ.lattice(), sub)) {
        if (!germ.in_relint(bp.point)) continue;
        Rational v = psi(bp.point);
        if (!have || v < best.value) {
          best = MldWitness{v, bp.point, idx, bp.coords};
          have = true;
        }
      }
    });
  }
  if (!have) fail(Errc::InternalError, "no interior lattice point found");
  return best;
}

ToricGerm face_restriction(const ToricGerm& germ, const Face& face) {
  const Eigen::Index d = germ.dim();
  const int n = germ.num_rays();
  const auto& sel = face.ray_indices;
  if (sel.empty()) fail(Errc::InvalidInput, "face needs at least one ray");
  for (size_t i = 0; i < sel.size(); ++i) {
    if (sel[i] < 0 || sel[i] >= n) fail(Errc::InvalidInput, "face ray index out of range");
    if (i > 0 && sel[i] <= sel[i - 1]) fail(Errc::InvalidInput, "face ray indices must be sorted and unique");
  }

  // The selected rays span a face exactly when every unselected ray is kept
  // strictly positive by the sum of the facets through all selected rays.
  std::vector<bool> selected(static_cast<size_t>(n), false);
  for (int i : sel) selected[static_cast<size_t>(i)] = true;
  RationalVector support = RationalVector::Zero(d);
  for (Eigen::Index j = 0; j < germ.facet_normals().cols(); ++j) {
    RationalVector u = to_rational(IntegerVector(germ.facet_normals().col(j)));
    bool through = true;
    for (int i : sel)
      if (!u.dot(germ.rays().col(i)).is_zero()) { through = false; break; }
    if (through) support += u;
  }
  for (int j = 0; j < n; ++j) {
    if (selected[static_cast<size_t>(j)]) continue;
    if (support.dot(germ.rays().col(j)).sign() <= 0)
      fail(Errc::NotAFace, "selected rays do not span a face");
  }

  // Saturated lattice N ∩ span(face), in coordinates of N's basis.
  IntegerMatrix y(d, static_cast<Eigen::Index>(sel.size()));
  for (size_t j = 0; j < sel.size(); ++j)
    y.col(static_cast<Eigen::Index>(j)) = *germ.lattice().coordinates(germ.rays().col(sel[j]));
  std::vector<int> indep;
  RationalMatrix acc(0, d);
  for (size_t j = 0; j < sel.size(); ++j) {
    RationalMatrix trial(acc.rows() + 1, d);
    trial.topRows(acc.rows()) = acc;
    trial.row(acc.rows()) = to_rational(IntegerVector(y.col(static_cast<Eigen::Index>(j)))).transpose();
    if (rank_exact(trial) == trial.rows()) {
      acc = trial;
      indep.push_back(static_cast<int>(j));
    }
  }
  const Eigen::Index c = static_cast<Eigen::Index>(indep.size());
  IntegerMatrix yind(d, c);
  for (Eigen::Index j = 0; j < c; ++j) yind.col(j) = y.col(indep[static_cast<size_t>(j)]);
  IntegerMatrix w = saturation_basis(yind);  // d x c, columns form the basis

  // Face rays in the new basis; coordinates are integral by saturation.
  RationalMatrix new_rays(c, static_cast<Eigen::Index>(sel.size()));
  for (size_t j = 0; j < sel.size(); ++j) {
    auto t = solve_exact(to_rational(w), to_rational(IntegerVector(y.col(static_cast<Eigen::Index>(j)))));
    if (!t) fail(Errc::InternalError, "face ray left its own span");
    for (Eigen::Index r = 0; r < c; ++r) {
      if (!(*t)(r).is_integer()) fail(Errc::InternalError, "face ray has non-integral coordinates");
      new_rays(r, static_cast<Eigen::Index>(j)) = (*t)(r);
    }
  }
  std::vector<Rational> new_coeffs;
  for (int i : sel) new_coeffs.push_back(germ.coefficients()[static_cast<size_t>(i)]);
  return ToricGerm(SuperLattice(static_cast<int>(c)), std::move(new_rays), std::move(new_coeffs));
}

Rational mld_at_point(const ToricGerm& germ, const Face& face, int point_codim) {
  if (face.ray_indices.empty()) {
    // The vertex face: the restriction is the zero-dimensional germ, mld 0.
    if (point_codim < 0 || point_codim > germ.dim())
      fail(Errc::InvalidInput, "point codimension out of range");
    return Rational(point_codim);
  }
  ToricGerm restricted = face_restriction(germ, face);
  int c = restricted.dim();
  if (point_codim < c || point_codim > germ.dim())
    fail(Errc::InvalidInput, "point codimension out of range");
  return mld_at_origin(restricted).value + Rational(point_codim - c);
}

}  // namespace toricmld
