#include "toricmld/normal_form.hpp"

namespace toricmld {

IntegerMatrix hermite_normal_form(const IntegerMatrix& a) {
  IntegerMatrix h = a;
  const Eigen::Index rows = h.rows(), cols = h.cols();
  Eigen::Index r = 0;  // next pivot row
  for (Eigen::Index col = 0; col < cols && r < rows; ++col) {
    // Gcd-reduce the column below r by repeated smallest-pivot elimination.
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index i = r; i < rows; ++i) {
        if (h(i, col).is_zero()) continue;
        if (best < 0 || abs(h(i, col)) < abs(h(best, col))) best = i;
      }
      if (best < 0) break;  // column is zero below r
      if (best != r) h.row(r).swap(h.row(best));
      bool cleared = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (h(i, col).is_zero()) continue;
        Integer q = fdiv(h(i, col), h(r, col));
        if (!q.is_zero()) h.row(i) -= q * h.row(r);
        if (!h(i, col).is_zero()) cleared = false;
      }
      if (cleared) break;
    }
    if (h(r, col).is_zero()) continue;  // no pivot in this column
    if (h(r, col).sign() < 0) h.row(r) = -h.row(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      Integer q = fdiv(h(i, col), h(r, col));
      if (!q.is_zero()) h.row(i) -= q * h.row(r);
    }
    ++r;
  }
  return h.topRows(r);
}

namespace {

// The elementary operations, applied to D and mirrored into the transforms.
struct SmithState {
  IntegerMatrix& d;
  IntegerMatrix& u;
  IntegerMatrix& u_inv;
  IntegerMatrix& v;

  void swap_rows(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    d.row(i).swap(d.row(j));
    u.row(i).swap(u.row(j));
    u_inv.col(i).swap(u_inv.col(j));
  }
  void swap_cols(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    d.col(i).swap(d.col(j));
    v.col(i).swap(v.col(j));
  }
  // row i -= q * row j;  the inverse transform adds q * col i to col j.
  void add_row(Eigen::Index i, Eigen::Index j, const Integer& q) {
    if (q.is_zero()) return;
    d.row(i) -= q * d.row(j);
    u.row(i) -= q * u.row(j);
    u_inv.col(j) += q * u_inv.col(i);
  }
  void add_col(Eigen::Index i, Eigen::Index j, const Integer& q) {
    if (q.is_zero()) return;
    d.col(i) -= q * d.col(j);
    v.col(i) -= q * v.col(j);
  }
  void negate_row(Eigen::Index i) {
    d.row(i) = -d.row(i);
    u.row(i) = -u.row(i);
    u_inv.col(i) = -u_inv.col(i);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  SmithDecomposition out;
  out.d = a;
  out.u = IntegerMatrix::Identity(rows, rows);
  out.u_inv = IntegerMatrix::Identity(rows, rows);
  out.v = IntegerMatrix::Identity(cols, cols);
  SmithState st{out.d, out.u, out.u_inv, out.v};
  IntegerMatrix& d = out.d;

  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j) {
          if (d(i, j).is_zero()) continue;
          if (pi < 0 || abs(d(i, j)) < abs(d(pi, pj))) { pi = i; pj = j; }
        }
      if (pi < 0) break;  // trailing block is zero; done
      st.swap_rows(t, pi);
      st.swap_cols(t, pj);

      bool dirty = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (d(i, t).is_zero()) continue;
        st.add_row(i, t, fdiv(d(i, t), d(t, t)));
        if (!d(i, t).is_zero()) dirty = true;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (d(t, j).is_zero()) continue;
        st.add_col(j, t, fdiv(d(t, j), d(t, t)));
        if (!d(t, j).is_zero()) dirty = true;
      }
      if (dirty) continue;

      // Row and column are clear; enforce divisibility of the trailing block.
      Eigen::Index bad_i = -1;
      for (Eigen::Index i = t + 1; i < rows && bad_i < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (!(d(i, j) % d(t, t)).is_zero()) { bad_i = i; break; }
      if (bad_i >= 0) {
        st.add_row(t, bad_i, Integer(-1));  // fold the offending row in and redo
        continue;
      }
      if (d(t, t).sign() < 0) st.negate_row(t);
      break;
    }
    if (d(t, t).is_zero()) break;
  }
  return out;
}

}  // namespace toricmld
