#include <doctest.h>

#include "resatlas/plancherel.hpp"

#include <cmath>
#include <random>

using namespace resatlas;

namespace {

MTypeParam sigma_of(const GroupSpec& spec, RatVec t) {
  return MTypeParam{spec, std::move(t), 1, 1, false};
}

MTypeParam triv_sigma(const GroupSpec& spec) {
  size_t len = 0;
  switch (spec.family) {
    case Family::SpinEven: len = static_cast<size_t>(spec.n - 1); break;
    case Family::SpinOdd: len = static_cast<size_t>(spec.n); break;
    case Family::SU: len = static_cast<size_t>(spec.n); break;
    case Family::Sp: len = static_cast<size_t>(spec.n + 1); break;
    case Family::F4: len = 3; break;
  }
  return sigma_of(spec, RatVec(len, Rat(0)));
}

RatVec first_pole_values(const PlancherelDensity& d, long count) {
  RatVec vs;
  for (const PoleRecord& rec : poles(d, 64)) {
    if (static_cast<long>(vs.size()) >= count) break;
    vs.push_back(rec.v);
  }
  return vs;
}

}  // namespace

TEST_CASE("trivial-sigma densities of the four families") {
  PlancherelDensity se = density({Family::SpinEven, 3}, triv_sigma({Family::SpinEven, 3}));
  CHECK(se.kind == HyperbolicKind::tanh);
  CHECK(se.s == 0);
  CHECK(se.exponents == RatVec{Rat(3, 2), Rat(1, 2)});
  CHECK(se.b_max == Rat(3, 2));

  PlancherelDensity su = density({Family::SU, 2}, triv_sigma({Family::SU, 2}));
  CHECK(su.kind == HyperbolicKind::coth);
  CHECK(su.s == 1);
  CHECK(su.exponents == RatVec{Rat(0)});
  CHECK(su.b_max == 0);

  PlancherelDensity f4 = density({Family::F4, 0}, triv_sigma({Family::F4, 0}));
  CHECK(f4.kind == HyperbolicKind::tanh);
  CHECK(f4.exponents == RatVec{Rat(9, 2), Rat(7, 2), Rat(5, 2), Rat(3, 2), Rat(1, 2),
                               Rat(-1, 2), Rat(-3, 2)});

  PlancherelDensity so = density({Family::SpinOdd, 3}, triv_sigma({Family::SpinOdd, 3}));
  CHECK(so.kind == HyperbolicKind::constant);
  CHECK(so.exponents.empty());
  CHECK(poles(so, 10).empty());
}

TEST_CASE("pole ladders for sigma = triv start at rho_alpha") {
  for (long n = 2; n <= 6; ++n) {
    GroupSpec se{Family::SpinEven, n};
    auto vs = first_pole_values(density(se, triv_sigma(se)), 5);
    for (long k = 0; k < 5; ++k)
      CHECK(vs[static_cast<size_t>(k)] == Rat(2 * n - 1, 2) + k);

    GroupSpec su{Family::SU, n};
    vs = first_pole_values(density(su, triv_sigma(su)), 5);
    for (long k = 0; k < 5; ++k) CHECK(vs[static_cast<size_t>(k)] == Rat(n, 2) + k);

    GroupSpec sp{Family::Sp, n};
    vs = first_pole_values(density(sp, triv_sigma(sp)), 5);
    for (long k = 0; k < 5; ++k)
      CHECK(vs[static_cast<size_t>(k)] == Rat(2 * n + 1, 2) + k);
  }
  GroupSpec f4{Family::F4, 0};
  auto vs = first_pole_values(density(f4, triv_sigma(f4)), 5);
  for (long k = 0; k < 5; ++k) CHECK(vs[static_cast<size_t>(k)] == Rat(11, 2) + k);
}

TEST_CASE("cancelled lattice points are not poles") {
  GroupSpec se3{Family::SpinEven, 3};
  PlancherelDensity d = density(se3, triv_sigma(se3));
  for (const PoleRecord& rec : poles(d, 16)) {
    CHECK(rec.v != Rat(1, 2));
    CHECK(rec.v != Rat(3, 2));
  }
  CHECK_THROWS_AS(residue_coeff_check(d, PoleRecord{Rat(3, 2), 0, 0, 1, Rat(0)}),
                  std::domain_error);
}

TEST_CASE("residue coefficients") {
  GroupSpec su2{Family::SU, 2};
  PlancherelDensity dsu = density(su2, triv_sigma(su2));
  auto ps = poles(dsu, 4);
  REQUIRE(!ps.empty());
  CHECK(ps[0].v == 1);
  CHECK(ps[0].residue_coeff == 1);  // (-1)^1 (0 - 1)
  CHECK(residue_coeff_check(dsu, ps[0]) == ps[0].residue_coeff);

  GroupSpec se3{Family::SpinEven, 3};
  PlancherelDensity dse = density(se3, triv_sigma(se3));
  auto pse = poles(dse, 4);
  CHECK(pse[0].v == Rat(5, 2));
  CHECK(pse[0].residue_coeff == 24);  // (9/4-25/4)(1/4-25/4)
}

TEST_CASE("evaluate: evenness, reality, explicit value, pole error") {
  GroupSpec se3{Family::SpinEven, 3};
  PlancherelDensity d = density(se3, triv_sigma(se3));

  std::complex<double> one(1.0, 0.0);
  double expect = std::tanh(M_PI) * 65.0 / 16.0;
  CHECK(std::abs(evaluate(d, one).real() - expect) < 1e-12);
  CHECK(std::abs(evaluate(d, {0.0, 0.0})) < 1e-300);

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 20; ++i) {
    std::complex<double> z(u(rng), u(rng));
    auto a = evaluate(d, z), b = evaluate(d, -z);
    CHECK(std::abs(a - b) <= 1e-10 * (1.0 + std::abs(a)));
  }
  for (int i = 0; i < 10; ++i) {
    double x = u(rng);
    CHECK(std::abs(evaluate(d, {x, 0.0}).imag()) < 1e-12);
    // purely imaginary lambda off poles gives real values
    auto v = evaluate(d, {0.0, 0.17 + 0.01 * i});
    CHECK(std::abs(v.imag()) < 1e-10 * (1.0 + std::abs(v)));
  }
  CHECK_THROWS_AS(evaluate(d, {0.0, -2.5}), PoleError);
  CHECK(evaluate(density({Family::SpinOdd, 2}, triv_sigma({Family::SpinOdd, 2})), one) == one);
}

TEST_CASE("coth densities are finite at the cancelled origin") {
  GroupSpec su2{Family::SU, 2};
  PlancherelDensity d = density(su2, triv_sigma(su2));  // E = {0}
  auto v0 = evaluate_over_lambda(d, {0.0, 0.0});
  CHECK(std::abs(v0) < 1e-14);  // coth pole knocked out by the double zero
  auto v1 = evaluate_over_lambda(d, {1e-8, 0.0});
  CHECK(std::abs(v1 - v0) < 1e-7);
}

TEST_CASE("unified formula reproduces the per-family closed forms (spot sweep)") {
  // full sweep runs in the acceptance suite; exercise one sigma per family
  struct Case {
    GroupSpec spec;
    RatVec tuple;
  };
  std::vector<Case> cases = {
      {{Family::SpinEven, 3}, {Rat(2), Rat(1)}},
      {{Family::SpinEven, 3}, {Rat(3, 2), Rat(1, 2)}},
      {{Family::SU, 3}, {Rat(1, 2), Rat(2), Rat(1)}},
      {{Family::Sp, 2}, {Rat(3, 2), Rat(1), Rat(2)}},
      {{Family::F4, 0}, {Rat(5, 2), Rat(3, 2), Rat(1, 2)}},
  };
  for (const Case& c : cases) {
    MTypeParam sigma = sigma_of(c.spec, c.tuple);
    PlancherelDensity d = density(c.spec, sigma);
    auto [kind, abs_exps] = closed_form_density(c.spec, sigma);
    CHECK(kind == d.kind);
    CHECK(abs_exps == abs_exponent_multiset(d));
  }
}

TEST_CASE("exponents sit on the lattice forced by the kind") {
  for (const auto& [family, n] : std::vector<std::pair<Family, long>>{
           {Family::SpinEven, 4}, {Family::SU, 3}, {Family::Sp, 3}, {Family::F4, 0}}) {
    GroupSpec spec{family, n};
    PlancherelDensity d = density(spec, triv_sigma(spec));
    for (const Rat& e : d.exponents)
      CHECK((d.kind == HyperbolicKind::tanh ? is_half_odd(e) : is_integer(e)));
    for (const PoleRecord& rec : poles(d, 8))
      CHECK((d.kind == HyperbolicKind::tanh ? is_half_odd(rec.v) : is_integer(rec.v)));
  }
}
