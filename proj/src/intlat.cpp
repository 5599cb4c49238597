#include "cohom1/intlat.hpp"

#include <optional>

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <cmath>
#include <numeric>

namespace cohom1::intlat {

Mat Mat::from_rows(const std::vector<std::vector<i64>>& rs) {
  if (rs.empty()) return Mat(0, 0);
  Mat m(static_cast<int>(rs.size()), static_cast<int>(rs[0].size()));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rs[r][c];
  return m;
}

std::vector<i64> Mat::row(int r) const {
  std::vector<i64> v(cols);
  for (int c = 0; c < cols; ++c) v[c] = at(r, c);
  return v;
}

i64 gcd(i64 a, i64 b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

namespace {

void swap_rows(Mat& m, int i, int j) {
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void add_row(Mat& m, int dst, int src, i64 k) {
  for (int c = 0; c < m.cols; ++c) m.at(dst, c) += k * m.at(src, c);
}

void negate_row(Mat& m, int i) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

// Row-reduce m to HNF; mirror every row operation on u when present.
Mat hnf_impl(Mat m, Mat* u) {
  if (u) {
    *u = Mat(m.rows, m.rows);
    for (int i = 0; i < m.rows; ++i) u->at(i, i) = 1;
  }
  int pivot_row = 0;
  for (int col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    // Euclidean elimination in this column below pivot_row.
    while (true) {
      int best = -1;
      for (int r = pivot_row; r < m.rows; ++r) {
        if (m.at(r, col) != 0 &&
            (best == -1 ||
             std::llabs(m.at(r, col)) < std::llabs(m.at(best, col))))
          best = r;
      }
      if (best == -1) break;
      if (best != pivot_row) {
        swap_rows(m, pivot_row, best);
        if (u) swap_rows(*u, pivot_row, best);
      }
      bool done = true;
      for (int r = pivot_row + 1; r < m.rows; ++r) {
        if (m.at(r, col) == 0) continue;
        i64 q = m.at(r, col) / m.at(pivot_row, col);
        add_row(m, r, pivot_row, -q);
        if (u) add_row(*u, r, pivot_row, -q);
        if (m.at(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (m.at(pivot_row, col) == 0) continue;
    if (m.at(pivot_row, col) < 0) {
      negate_row(m, pivot_row);
      if (u) negate_row(*u, pivot_row);
    }
    // Reduce entries above the pivot.
    for (int r = 0; r < pivot_row; ++r) {
      i64 q = m.at(r, col) / m.at(pivot_row, col);
      i64 rem = m.at(r, col) - q * m.at(pivot_row, col);
      if (rem < 0) q -= 1;
      if (q != 0) {
        add_row(m, r, pivot_row, -q);
        if (u) add_row(*u, r, pivot_row, -q);
      }
    }
    ++pivot_row;
  }
  m.rows = m.rows;  // zero rows, if any, sit at the bottom
  // Split off zero rows.
  Mat out(pivot_row, m.cols);
  for (int r = 0; r < pivot_row; ++r)
    for (int c = 0; c < m.cols; ++c) out.at(r, c) = m.at(r, c);
  return out;
}

}  // namespace

Mat hnf(Mat m) { return hnf_impl(std::move(m), nullptr); }

Mat hnf_with_transform(Mat m, Mat* u_out) {
  return hnf_impl(std::move(m), u_out);
}

int rank(const Mat& m) { return hnf(m).rows; }

std::vector<i64> snf_invariants(Mat m) {
  // Classic elimination to diagonal form, then fix divisibility.
  int n = std::min(m.rows, m.cols);
  std::vector<i64> diag;
  int top = 0, left = 0;
  while (top < m.rows && left < m.cols) {
    int pr = -1, pc = -1;
    for (int r = top; r < m.rows; ++r)
      for (int c = left; c < m.cols; ++c)
        if (m.at(r, c) != 0 &&
            (pr == -1 || std::llabs(m.at(r, c)) < std::llabs(m.at(pr, pc)))) {
          pr = r;
          pc = c;
        }
    if (pr == -1) break;
    swap_rows(m, top, pr);
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, left), m.at(r, pc));
    bool clean = true;
    for (int r = top + 1; r < m.rows; ++r)
      if (m.at(r, left) != 0) {
        i64 q = m.at(r, left) / m.at(top, left);
        add_row(m, r, top, -q);
        if (m.at(r, left) != 0) clean = false;
      }
    for (int c = left + 1; c < m.cols; ++c)
      if (m.at(top, c) != 0) {
        i64 q = m.at(top, c) / m.at(top, left);
        for (int r = 0; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, left);
        if (m.at(top, c) != 0) clean = false;
      }
    if (!clean) continue;
    diag.push_back(std::llabs(m.at(top, left)));
    ++top;
    ++left;
  }
  (void)n;
  // Enforce d1 | d2 | ... via gcd/lcm passes.
  for (size_t i = 0; i + 1 < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) {
      i64 g = gcd(diag[i], diag[j]);
      if (g == 0) continue;
      i64 l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  std::sort(diag.begin(), diag.end());
  return diag;
}

bool contains_vector(const Mat& hnf_basis, const std::vector<i64>& v) {
  std::vector<i64> w = v;
  int r = 0;
  for (int col = 0; col < hnf_basis.cols && r < hnf_basis.rows; ++col) {
    if (hnf_basis.at(r, col) == 0) continue;
    if (w[col] % hnf_basis.at(r, col) != 0) return false;
    i64 q = w[col] / hnf_basis.at(r, col);
    for (int c = col; c < hnf_basis.cols; ++c) w[c] -= q * hnf_basis.at(r, c);
    ++r;
  }
  return std::all_of(w.begin(), w.end(), [](i64 x) { return x == 0; });
}

bool lattice_subset(const Mat& sub, const Mat& sup) {
  Mat b = hnf(sup);
  for (int r = 0; r < sub.rows; ++r)
    if (!contains_vector(b, sub.row(r))) return false;
  return true;
}

Mat lattice_sum(const Mat& a, const Mat& b) {
  assert(a.cols == b.cols || a.rows == 0 || b.rows == 0);
  int cols = a.rows ? a.cols : b.cols;
  Mat m(a.rows + b.rows, cols);
  for (int r = 0; r < a.rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = a.at(r, c);
  for (int r = 0; r < b.rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(a.rows + r, c) = b.at(r, c);
  return hnf(m);
}

Mat lattice_intersect(const Mat& a, const Mat& b) {
  // Kernel of (x, y) -> x*A - y*B gives the coincidences x*A = y*B.
  if (a.rows == 0 || b.rows == 0) return Mat(0, a.cols ? a.cols : b.cols);
  Mat stacked(a.rows + b.rows, a.cols);
  for (int r = 0; r < a.rows; ++r)
    for (int c = 0; c < a.cols; ++c) stacked.at(r, c) = a.at(r, c);
  for (int r = 0; r < b.rows; ++r)
    for (int c = 0; c < a.cols; ++c) stacked.at(a.rows + r, c) = -b.at(r, c);
  Mat u;
  Mat h = hnf_with_transform(stacked, &u);
  Mat result(stacked.rows - h.rows, a.cols);
  int out = 0;
  for (int r = h.rows; r < stacked.rows; ++r, ++out)
    for (int c = 0; c < a.cols; ++c) {
      i64 acc = 0;
      for (int i = 0; i < a.rows; ++i) acc += u.at(r, i) * a.at(i, c);
      result.at(out, c) = acc;
    }
  return hnf(result);
}

Mat kernel(const Mat& m) {
  // Left kernel of transpose == right kernel of m.
  Mat t(m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
  Mat u;
  Mat h = hnf_with_transform(t, &u);
  Mat result(m.cols - h.rows, m.cols);
  for (int r = h.rows; r < m.cols; ++r)
    for (int c = 0; c < m.cols; ++c) result.at(r - h.rows, c) = u.at(r, c);
  return hnf(result);
}

std::optional<std::vector<i64>> coordinates_in(const Mat& basis,
                                               const std::vector<i64>& v) {
  // rational elimination on the transposed system, then integrality check
  int r = basis.rows, k = basis.cols;
  std::vector<std::vector<double>> m(k, std::vector<double>(r + 1, 0.0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < r; ++j) m[i][j] = static_cast<double>(basis.at(j, i));
    m[i][r] = static_cast<double>(v[i]);
  }
  int row = 0;
  std::vector<int> pivot_of(r, -1);
  for (int col = 0; col < r && row < k; ++col) {
    int p = -1;
    for (int i = row; i < k; ++i)
      if (std::abs(m[i][col]) > 1e-9) { p = i; break; }
    if (p == -1) continue;
    std::swap(m[p], m[row]);
    for (int i = 0; i < k; ++i) {
      if (i == row || std::abs(m[i][col]) < 1e-12) continue;
      double f = m[i][col] / m[row][col];
      for (int j = 0; j <= r; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_of[col] = row;
    ++row;
  }
  std::vector<i64> x(r, 0);
  for (int col = 0; col < r; ++col) {
    if (pivot_of[col] == -1) return std::nullopt;
    double val = m[pivot_of[col]][r] / m[pivot_of[col]][col];
    i64 rounded = std::llround(val);
    if (std::abs(val - rounded) > 1e-6) return std::nullopt;
    x[col] = rounded;
  }
  // verify
  for (int c = 0; c < k; ++c) {
    i64 acc = 0;
    for (int j = 0; j < r; ++j) acc += x[j] * basis.at(j, c);
    if (acc != v[c]) return std::nullopt;
  }
  return x;
}

i64 full_rank_index(const Mat& hnf_basis) {
  assert(hnf_basis.rows == hnf_basis.cols);
  i64 d = 1;
  for (int i = 0; i < hnf_basis.rows; ++i) d *= hnf_basis.at(i, i);
  return std::llabs(d);
}

}  // namespace cohom1::intlat
