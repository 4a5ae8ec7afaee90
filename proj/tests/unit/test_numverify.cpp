#include <doctest.h>

#include "resatlas/numverify.hpp"

using namespace resatlas;

namespace {

MTypeParam triv_sigma(const GroupSpec& spec) {
  size_t len = 0;
  switch (spec.family) {
    case Family::SpinEven: len = static_cast<size_t>(spec.n - 1); break;
    case Family::SpinOdd: len = static_cast<size_t>(spec.n); break;
    case Family::SU: len = static_cast<size_t>(spec.n); break;
    case Family::Sp: len = static_cast<size_t>(spec.n + 1); break;
    case Family::F4: len = 3; break;
  }
  return MTypeParam{spec, RatVec(len, Rat(0)), 1, 1, false};
}

}  // namespace

TEST_CASE("residue quadrature against the exact coefficient") {
  GroupSpec su2{Family::SU, 2};
  PlancherelDensity d = density(su2, triv_sigma(su2));
  auto ps = poles(d, 2);
  REQUIRE(!ps.empty());
  QuadratureReport rep = residue_quadrature(d, ps[0], 0.25, 512);
  CHECK(rep.rel_err <= 1e-10);
  CHECK(rep.passed);

  // doubling the samples reduces the error or hits the floating-point floor
  QuadratureReport rep2 = residue_quadrature(d, ps[0], 0.25, 1024);
  CHECK((rep2.abs_err <= rep.abs_err || rep2.abs_err < 1e-13));
}

TEST_CASE("cancelled lattice point encloses no pole") {
  GroupSpec se3{Family::SpinEven, 3};
  PlancherelDensity d = density(se3, triv_sigma(se3));
  QuadratureReport rep = cancelled_point_quadrature(d, Rat(3, 2), 0.25, 512);
  CHECK(rep.rel_err <= 1e-10);
}

TEST_CASE("radius reaching a neighbouring singularity is rejected") {
  GroupSpec se3{Family::SpinEven, 3};
  PlancherelDensity d = density(se3, triv_sigma(se3));
  auto ps = poles(d, 4);
  CHECK_THROWS_AS(residue_quadrature(d, ps[1], 1.1, 512), std::domain_error);
  CHECK_THROWS_AS(residue_quadrature(d, ps[0], 0.25, 16), std::invalid_argument);
}

TEST_CASE("contour shift: no poles crossed means plain agreement") {
  GroupSpec se3{Family::SpinEven, 3};
  PlancherelDensity d = density(se3, triv_sigma(se3));
  // first pole at 5/2; shift 5/4 crosses nothing
  QuadratureReport rep = contour_shift_check(d, {0.0, 1.0}, Rat(5, 4), 0.0, 1e-8);
  CHECK(rep.rel_err <= 1e-8);
}

TEST_CASE("contour shift across the first poles certifies the residue data") {
  GroupSpec se3{Family::SpinEven, 3};
  PlancherelDensity d = density(se3, triv_sigma(se3));
  // shift rho_alpha + 5/4 = 15/4 crosses the poles at 5/2 and 7/2
  QuadratureReport rep = contour_shift_check(d, {0.0, 1.0}, Rat(15, 4), 0.0, 1e-6);
  CHECK(rep.rel_err <= 1e-6);
  CHECK(rep.detail.find("poles crossed: 2") != std::string::npos);

  QuadratureReport one = contour_shift_check(d, {0.0, 1.0}, Rat(11, 4), 0.0, 1e-6);
  CHECK(one.rel_err <= 1e-6);
  CHECK(one.detail.find("poles crossed: 1") != std::string::npos);
}

TEST_CASE("contour shift across two su(2,1) poles") {
  GroupSpec su2{Family::SU, 2};
  PlancherelDensity d = density(su2, triv_sigma(su2));
  QuadratureReport rep = contour_shift_check(d, {0.0, 2.0}, Rat(9, 4), 0.0, 1e-6);
  CHECK(rep.rel_err <= 1e-6);
  CHECK(rep.detail.find("poles crossed: 2") != std::string::npos);
}

TEST_CASE("contour shift rejects bad configurations") {
  GroupSpec se3{Family::SpinEven, 3};
  PlancherelDensity d = density(se3, triv_sigma(se3));
  CHECK_THROWS_AS(contour_shift_check(d, {0.0, -1.0}, Rat(5, 4), 0.0, 1e-6),
                  std::invalid_argument);
  CHECK_THROWS_AS(contour_shift_check(d, {0.0, 1.0}, Rat(2), 0.0, 1e-6), std::invalid_argument);

  // a coth density with an uncancelled pole at 0 has no real-line integral
  GroupSpec su2{Family::SU, 2};
  MTypeParam sigma{su2, {Rat(0), Rat(1)}, 1, 1, false};  // E = {1}, s odd
  PlancherelDensity bad = density(su2, sigma);
  CHECK_THROWS_AS(contour_shift_check(bad, {0.0, 1.0}, Rat(5, 4), 0.0, 1e-6), std::domain_error);
}

TEST_CASE("shifted-line integrand decays like the gaussian envelope") {
  GroupSpec se3{Family::SpinEven, 3};
  PlancherelDensity d = density(se3, triv_sigma(se3));
  const double s = 3.75;
  for (double x : {s + 1.0, s + 2.0, s + 4.0, s + 6.0}) {
    std::complex<double> val = evaluate_over_lambda(d, {x, -s}) * std::exp(-std::complex<double>(x, -s) * std::complex<double>(x, -s));
    double envelope = std::exp(-x * x / 2.0);
    CHECK(std::abs(val) <= 1e6 * envelope);  // C e^{-x^2/2} with generous C
  }
}
