#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "cohom1/intlat.hpp"
#include "cohom1/symint.hpp"
#include "doctest.h"

using namespace cohom1;
using namespace cohom1::intlat;

TEST_CASE("symint basics") {
  SymInt n = SymInt::param();
  SymInt two_n = SymInt::param(2);
  CHECK(n != two_n);
  CHECK(n.divides(two_n));
  CHECK(!two_n.divides(n));
  CHECK(n.instantiate(5) == 5);
  CHECK(two_n.instantiate(5) == 10);
  CHECK(SymInt::concrete(2).divides(two_n));
  CHECK(!SymInt::concrete(2).divides(n));
  CHECK(SymInt::concrete(3).divides(SymInt::concrete(12)));
  auto l = n.lcm(two_n);
  REQUIRE(l.has_value());
  CHECK(*l == two_n);
  CHECK(n.times(2) == two_n);
  CHECK(SymInt::concrete(4).str() == "4");
  CHECK(two_n.str() == "2n");
}

TEST_CASE("hnf and membership") {
  Mat m = Mat::from_rows({{2, 0}, {0, 3}, {2, 3}});
  Mat h = hnf(m);
  CHECK(h.rows == 2);
  CHECK(contains_vector(h, {2, 0}));
  CHECK(contains_vector(h, {4, 3}));
  CHECK(!contains_vector(h, {1, 0}));
  CHECK(lattice_subset(Mat::from_rows({{2, 3}}), m));
  CHECK(!lattice_subset(Mat::from_rows({{1, 1}}), m));
}

TEST_CASE("snf invariants") {
  CHECK(snf_invariants(Mat::from_rows({{2, 0}, {0, 3}})) ==
        std::vector<i64>{1, 6});
  CHECK(snf_invariants(Mat::from_rows({{1, 0}, {0, 1}})) ==
        std::vector<i64>{1, 1});
  CHECK(snf_invariants(Mat::from_rows({{2, 0}, {0, 2}})) ==
        std::vector<i64>{2, 2});
  CHECK(snf_invariants(Mat::from_rows({{1, 0}})) == std::vector<i64>{1});
}

TEST_CASE("kernel and intersection") {
  Mat k = kernel(Mat::from_rows({{1, 2, 3}}));
  CHECK(k.rows == 2);
  for (int r = 0; r < k.rows; ++r)
    CHECK(k.at(r, 0) * 1 + k.at(r, 1) * 2 + k.at(r, 2) * 3 == 0);
  Mat a = Mat::from_rows({{2, 0}});
  Mat b = Mat::from_rows({{3, 0}});
  Mat i = lattice_intersect(a, b);
  CHECK(i.rows == 1);
  CHECK(i.at(0, 0) == 6);
}

TEST_CASE("lattice algebra properties on random inputs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<i64> d(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    Mat a(2, 3), b(2, 3);
    for (auto* m : {&a, &b})
      for (auto& x : m->a) x = d(rng);
    Mat sum = lattice_sum(a, b);
    CHECK(lattice_subset(a, sum));
    CHECK(lattice_subset(b, sum));
    Mat inter = lattice_intersect(a, b);
    CHECK(lattice_subset(inter, a));
    CHECK(lattice_subset(inter, b));
    // saturation contains the lattice and is saturated
    Mat sat = kernel(kernel(a));
    CHECK(lattice_subset(a, sat));
    CHECK(kernel(kernel(sat)) == hnf(sat));
  }
}

TEST_CASE("coordinates in a basis") {
  Mat basis = Mat::from_rows({{1, 2, 0}, {0, 3, 1}});
  auto x = coordinates_in(basis, {2, 7, 1});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 1);
  CHECK(!coordinates_in(basis, {0, 0, 5}).has_value());
}
