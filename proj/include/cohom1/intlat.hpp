#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cohom1::intlat {

using i64 = std::int64_t;

// Dense row-major integer matrix; rows usually generate a lattice in Z^cols.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<i64> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  static Mat from_rows(const std::vector<std::vector<i64>>& rs);

  i64& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  i64 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  std::vector<i64> row(int r) const;

  friend bool operator==(const Mat&, const Mat&) = default;
};

i64 gcd(i64 a, i64 b);

// Row-style Hermite normal form of the lattice spanned by the rows.
// Zero rows are dropped; pivots positive, entries above pivots reduced.
Mat hnf(Mat m);

// As hnf(), but also returns a unimodular U with U * input = [hnf; 0].
// U rows beyond rank(input) form a basis of the left kernel.
Mat hnf_with_transform(Mat m, Mat* u_out);

int rank(const Mat& m);

// Invariant factors d1 | d2 | ... | dr of the Smith normal form.
std::vector<i64> snf_invariants(Mat m);

// Membership of v in the lattice spanned by the rows of basis (basis in HNF).
bool contains_vector(const Mat& hnf_basis, const std::vector<i64>& v);

// lattice(sub) subset of lattice(sup)?  Both arbitrary generator matrices.
bool lattice_subset(const Mat& sub, const Mat& sup);

// Lattice generated by all rows of a and b.
Mat lattice_sum(const Mat& a, const Mat& b);

// Intersection of the two row lattices.
Mat lattice_intersect(const Mat& a, const Mat& b);

// Basis of {x in Z^cols : <r, x> = 0 for every row r}.
Mat kernel(const Mat& m);

// Index [Z^k : L] for a full-rank lattice L in Z^k (absolute determinant).
i64 full_rank_index(const Mat& hnf_basis);

// Solve x * basis = v over the integers (basis rows independent).
std::optional<std::vector<i64>> coordinates_in(const Mat& basis,
                                               const std::vector<i64>& v);

}  // namespace cohom1::intlat
