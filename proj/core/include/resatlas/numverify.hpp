#ifndef RESATLAS_NUMVERIFY_HPP
#define RESATLAS_NUMVERIFY_HPP

#include "resatlas/plancherel.hpp"

#include <complex>
#include <string>

namespace resatlas {

struct QuadratureReport {
  std::string target;
  std::string exact_str;   // exact value as a rational, "" when the target is 0
  double exact_value = 0.0;
  double numeric_value = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;    // against exact when nonzero, else scaled absolute
  long samples = 0;
  double tol = 0.0;
  bool passed = false;
  // echoed inputs
  GroupSpec spec;
  RatVec sigma_tuple;
  std::string detail;
};

/// Trapezoidal contour integral (1/2 pi i) of p(lambda alpha)/lambda around
/// lambda = -iv, compared with residue_coeff/pi.  Spectrally accurate.
/// Throws std::domain_error when the radius reaches the nearest other
/// singularity of p/lambda.
QuadratureReport residue_quadrature(const PlancherelDensity& d, const PoleRecord& rec,
                                    double radius, long samples);

/// Same circle integral around an arbitrary lattice value; used to certify
/// that cancelled lattice points enclose no pole (expected value 0).
QuadratureReport cancelled_point_quadrature(const PlancherelDensity& d, const Rat& v,
                                            double radius, long samples);

/// Contour-shift identity with the even entire stand-in g(lambda) =
/// exp(-lambda^2) for the convolution factor:
///
///   int_R F = int_{R - i s} F - 2 pi i  sum_{0 < v < s}  Res_{-iv} F,
///   F(lambda) = g(lambda) (p(lambda alpha)/lambda) / (zeta - lambda |alpha|),
///   Res_{-iv} F = g(-iv) (c_v/pi) / (zeta + i v |alpha|).
///
/// The report's rel_err is the defect scaled by the largest of the three
/// pieces (both lines cancel exponentially large terms e^{s^2} against the
/// residue sum, so the defect is only meaningful at that scale).
/// truncation <= 0 picks T from the Gaussian tail bound
/// e^{s^2 - T^2} max|p/lambda| < tol/10.
///
/// Safe range: the shifted line carries oscillating mass of size e^{s^2}
/// that cancels down to the reported pieces, which costs e^{s^2} * 1e-16 in
/// absolute noise.  Keep the shift within ~1.5 of the largest crossed pole
/// (or below 3 when no pole is crossed) so this noise stays under tol times
/// the reporting scale.
QuadratureReport contour_shift_check(const PlancherelDensity& d, std::complex<double> zeta,
                                     const Rat& shift, double truncation, double tol);

}  // namespace resatlas

#endif
