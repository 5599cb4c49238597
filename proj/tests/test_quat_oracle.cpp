#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cohom1/quat_oracle.hpp"
#include "doctest.h"

using namespace cohom1;
using namespace cohom1::oracle;

TEST_CASE("materialized orders") {
  for (int n = 1; n <= 12; ++n) {
    CHECK(materialize_su2(GroupSpec::cyclic(n)).size() == size_t(n));
    CHECK(materialize_su2(GroupSpec::binary_dihedral(n)).size() == size_t(4 * n));
    CHECK(materialize_so3_lift(GroupSpec::cyclic(n)).size() == size_t(2 * n));
    CHECK(materialize_so3_lift(GroupSpec::dihedral(n)).size() == size_t(4 * n));
  }
  CHECK(materialize_su2(GroupSpec::quaternion8()).size() == 8);
  CHECK(materialize_su2(GroupSpec::binary_tetrahedral()).size() == 24);
  CHECK(materialize_su2(GroupSpec::binary_octahedral()).size() == 48);
  CHECK(materialize_su2(GroupSpec::binary_icosahedral()).size() == 120);
  CHECK(materialize_su2(GroupSpec::trivial()).size() == 1);
  CHECK_THROWS(materialize_su2(GroupSpec::cyclic(SymInt::param())));
}

TEST_CASE("explicit quaternion sets are closed groups") {
  for (auto g : {GroupSpec::binary_tetrahedral(), GroupSpec::binary_octahedral(),
                 GroupSpec::binary_icosahedral(), GroupSpec::quaternion8(),
                 GroupSpec::binary_dihedral(7)}) {
    auto s = materialize_su2(g);
    auto c = closure(s.elements());
    REQUIRE(c.has_value());
    CHECK(set_equal(*c, s));
  }
}

TEST_CASE("identification round trips") {
  for (int n = 2; n <= 12; ++n) {
    auto idc = identify_su2(materialize_su2(GroupSpec::cyclic(n)));
    CHECK(idc.group == GroupSpec::cyclic(n));
    auto idd = identify_su2(materialize_su2(GroupSpec::binary_dihedral(n)));
    CHECK(idd.group == GroupSpec::binary_dihedral(n));
    auto ids = identify_so3(materialize_so3_lift(GroupSpec::dihedral(n)));
    CHECK(ids.group == GroupSpec::dihedral(n));
  }
  CHECK(identify_su2(materialize_su2(GroupSpec::binary_icosahedral())).group ==
        GroupSpec::binary_icosahedral());
  // D_1 is the half-turn group about the secondary axis
  CHECK(identify_so3(materialize_so3_lift(GroupSpec::dihedral(1))).group ==
        GroupSpec::cyclic(2));
}

TEST_CASE("conjugation example: j i j^-1 = -i") {
  Quat j = Quat::j(), i = Quat::i();
  Quat c = j * i * j.conj();
  CHECK(quat_close(c, -i));
  auto zi = materialize_su2(GroupSpec::cyclic(4), Ax::X);
  auto conj = conjugate_set(zi, j);
  CHECK(set_equal(conj, zi));  // <i> and <-i> coincide as subgroups
}

TEST_CASE("normalizers of finite subgroups") {
  // single-line configurations have the full Pin2 of the axis
  auto nz = normalizer_su2(materialize_so3_lift(GroupSpec::cyclic(6)));
  CHECK(!nz.finite);
  CHECK(nz.cont == ContKind::Pin2Axis);

  auto check_finite = [](const GroupSpec& h, const GroupSpec& expected,
                         bool so3) {
    auto set = so3 ? materialize_so3_lift(h) : materialize_su2(h);
    auto n = normalizer_su2(set);
    REQUIRE(n.finite);
    auto id = so3 ? identify_so3(n.set) : identify_su2(n.set);
    CHECK(id.group == expected);
  };
  check_finite(GroupSpec::dihedral(3), GroupSpec::dihedral(6), true);
  check_finite(GroupSpec::dihedral(6), GroupSpec::dihedral(12), true);
  check_finite(GroupSpec::dihedral(2), GroupSpec::octahedral(), true);
  check_finite(GroupSpec::tetrahedral(), GroupSpec::octahedral(), true);
  check_finite(GroupSpec::octahedral(), GroupSpec::octahedral(), true);
  check_finite(GroupSpec::icosahedral(), GroupSpec::icosahedral(), true);
  check_finite(GroupSpec::quaternion8(), GroupSpec::binary_octahedral(), false);
  check_finite(GroupSpec::binary_tetrahedral(), GroupSpec::binary_octahedral(),
               false);
}

TEST_CASE("generated subgroups") {
  auto z5 = materialize_so3_lift(GroupSpec::cyclic(5));
  auto flip = materialize_so3_lift(GroupSpec::cyclic(2), Ax::X);
  auto g = generated(z5, flip);
  REQUIRE(g.finite);
  CHECK(identify_so3(g.set).group == GroupSpec::dihedral(5));

  auto t = materialize_so3_lift(GroupSpec::tetrahedral());
  auto z4 = materialize_so3_lift(GroupSpec::cyclic(4));
  auto g2 = generated(t, z4);
  REQUIRE(g2.finite);
  CHECK(identify_so3(g2.set).group == GroupSpec::octahedral());

  auto ico = materialize_so3_lift(GroupSpec::icosahedral());
  auto g3 = generated(ico, z4);
  CHECK(!g3.finite);
  CHECK(g3.cont == ContKind::FullGroup);
}

TEST_CASE("membership in continuous subgroups") {
  CHECK(in_circle(Quat::exp_axis({0, 0, 1}, 0.7), {0, 0, 1}));
  CHECK(!in_circle(Quat::i(), {0, 0, 1}));
  CHECK(in_pin2(Quat::i(), {0, 0, 1}));
  CHECK(in_pin2(-Quat::one(), {0, 0, 1}));
  CHECK(!in_pin2(Quat::exp_axis({1, 0, 0}, 0.3), {0, 0, 1}));
}

TEST_CASE("quotient types") {
  auto d5 = materialize_su2(GroupSpec::binary_dihedral(5));
  auto z10 = materialize_su2(GroupSpec::cyclic(10));
  CHECK(quotient_type(d5, z10) == GroupSpec::cyclic(2));
  auto o = materialize_so3_lift(GroupSpec::octahedral());
  auto d2 = materialize_so3_lift(GroupSpec::dihedral(2));
  CHECK(quotient_type(o, d2) == GroupSpec::dihedral(3));
  auto t = materialize_so3_lift(GroupSpec::tetrahedral());
  CHECK(quotient_type(o, t) == GroupSpec::cyclic(2));
  CHECK(coset_reps(o, t).size() == 2);
}

TEST_CASE("debug dump emits one element per line") {
  auto q8 = materialize_su2(GroupSpec::quaternion8());
  std::string d = dump(q8);
  CHECK(std::count(d.begin(), d.end(), '\n') == 8);
}
