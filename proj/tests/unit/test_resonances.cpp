#include <doctest.h>

#include "resatlas/resonances.hpp"

using namespace resatlas;

namespace {

KTypeParam trivial_tau(const GroupSpec& spec) {
  size_t len = 0;
  switch (spec.family) {
    case Family::SpinEven:
    case Family::SpinOdd: len = static_cast<size_t>(spec.n); break;
    case Family::SU:
    case Family::Sp: len = static_cast<size_t>(spec.n + 1); break;
    case Family::F4: len = 4; break;
  }
  return KTypeParam{spec, RatVec(len, Rat(0))};
}

}  // namespace

TEST_CASE("spin-odd atlas is empty") {
  for (long n = 2; n <= 4; ++n) {
    GroupSpec spec{Family::SpinOdd, n};
    ResonanceAtlas a = atlas(spec, trivial_tau(spec), 8);
    REQUIRE(a.families.size() == 1);
    CHECK(a.families[0].resonances.empty());
  }
}

TEST_CASE("spin-even trivial tau resonance positions") {
  GroupSpec spec{Family::SpinEven, 3};
  auto fam = atlas(spec, trivial_tau(spec), 4).families;
  REQUIRE(fam.size() == 1);
  REQUIRE(fam[0].resonances.size() == 5);
  for (long k = 0; k <= 4; ++k) CHECK(fam[0].resonances[static_cast<size_t>(k)].v == Rat(5, 2) + k);
}

TEST_CASE("first su(2,1) resonance has z_hc = 0") {
  GroupSpec spec{Family::SU, 2};
  auto rs = atlas(spec, trivial_tau(spec), 2).families[0].resonances;
  REQUIRE(!rs.empty());
  CHECK(rs[0].v == 1);
  CHECK(rs[0].z_hc == 0);     // v = rho_alpha = n/2 = 1
  CHECK(rs[0].z_paper == 0);  // rho_m = 0 for su(2,1)
}

TEST_CASE("bottom-of-spectrum consistency: z_hc(triv, v=rho) = 0 everywhere") {
  for (const GroupSpec spec : {GroupSpec{Family::SpinEven, 2}, GroupSpec{Family::SpinEven, 4},
                               GroupSpec{Family::SU, 3}, GroupSpec{Family::Sp, 2},
                               GroupSpec{Family::Sp, 4}, GroupSpec{Family::F4, 0}}) {
    GroupConstants gc = group_constants(spec);
    auto rs = atlas(spec, trivial_tau(spec), 3).families[0].resonances;
    REQUIRE(!rs.empty());
    CHECK(rs[0].v == gc.rho_alpha);
    CHECK(rs[0].z_hc == 0);
  }
}

TEST_CASE("z is strictly increasing and convex in v") {
  for (const GroupSpec spec : {GroupSpec{Family::SpinEven, 3}, GroupSpec{Family::Sp, 2},
                               GroupSpec{Family::F4, 0}}) {
    auto rs = atlas(spec, trivial_tau(spec), 8).families[0].resonances;
    for (size_t i = 0; i + 1 < rs.size(); ++i) {
      CHECK(rs[i].v < rs[i + 1].v);
      CHECK(rs[i].z_paper < rs[i + 1].z_paper);
    }
    for (size_t i = 0; i + 2 < rs.size(); ++i)
      CHECK(rs[i + 2].z_paper - rs[i + 1].z_paper > rs[i + 1].z_paper - rs[i].z_paper);
  }
}

TEST_CASE("atlas families follow mhat and prefix-extend in k_max") {
  GroupSpec spec{Family::SpinEven, 2};
  KTypeParam tau{spec, {Rat(1), Rat(0)}};
  ResonanceAtlas small = atlas(spec, tau, 3), big = atlas(spec, tau, 8);
  auto sigmas = mhat(spec, tau);
  REQUIRE(small.families.size() == sigmas.size());
  REQUIRE(small.families.size() == 2);  // sigma in {(0), (1)}
  for (size_t f = 0; f < small.families.size(); ++f) {
    CHECK(small.families[f].sigma.tuple == sigmas[f].tuple);
    REQUIRE(big.families[f].resonances.size() >= small.families[f].resonances.size());
    for (size_t i = 0; i < small.families[f].resonances.size(); ++i) {
      CHECK(small.families[f].resonances[i].v == big.families[f].resonances[i].v);
      CHECK(small.families[f].resonances[i].z_paper == big.families[f].resonances[i].z_paper);
      CHECK(small.families[f].resonances[i].residue_coeff ==
            big.families[f].resonances[i].residue_coeff);
    }
  }
  // distinct sigma keys
  for (size_t i = 0; i + 1 < small.families.size(); ++i)
    CHECK(small.families[i].sigma.tuple != small.families[i + 1].sigma.tuple);
}

TEST_CASE("resonance_family rejects sigma outside mhat") {
  GroupSpec spec{Family::SpinEven, 2};
  KTypeParam tau{spec, {Rat(1), Rat(0)}};
  MTypeParam bad{spec, {Rat(2)}, 1, 1, false};
  CHECK_THROWS_AS(resonance_family(spec, tau, bad, 4), std::domain_error);
}
