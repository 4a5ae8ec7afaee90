#ifndef RESATLAS_PLANCHEREL_HPP
#define RESATLAS_PLANCHEREL_HPP

#include "resatlas/branching.hpp"
#include "resatlas/liealg.hpp"

#include <complex>
#include <vector>

namespace resatlas {

enum class HyperbolicKind { tanh, coth, constant };

std::string kind_name(HyperbolicKind k);

// Factored Plancherel density for (group, sigma):
//
//   p_sigma(lambda alpha) = (-1)^s lambda h(pi lambda) prod_j (lambda^2 + E_j^2)
//
// with h = tanh when s is even, coth when s is odd (the shift by 3 pi s i/2 is
// resolved symbolically), and E_j = B_j + rho_alpha - j for the family's B
// list.  SpinOdd has a constant hyperbolic factor and no poles.
//
// Poles of p(lambda alpha)/lambda sit at lambda = -iv on the lattice
// v = B_max + k (integers for coth, half-integers for tanh).  A lattice point
// is a genuine simple pole exactly when v does not occur in {|E_j|}; each
// occurrence is a simple zero of the polynomial part cancelling the simple
// hyperbolic pole.  At v = 0 (coth only) the factor lambda^2 + E_j^2 with
// E_j = 0 is a double zero, so the same no-occurrence rule applies.
struct PlancherelDensity {
  GroupSpec spec;
  MTypeParam sigma;
  long s = 0;
  HyperbolicKind kind = HyperbolicKind::tanh;
  RatVec exponents;  // E_j in the j-order of the B list
  Rat b_max;
};

PlancherelDensity density(const GroupSpec& spec, const MTypeParam& sigma);

struct PoleRecord {
  Rat v;                 // imaginary coordinate, pole at lambda = -iv
  long k_theorem = 0;    // v - B_max
  long k_section5 = 0;   // index from the first genuine pole
  int order = 1;
  Rat residue_coeff;     // c with Res p(lambda alpha)/lambda = c/pi
};

struct PoleError : std::domain_error {
  PoleRecord record;
  explicit PoleError(PoleRecord r)
      : std::domain_error("evaluation at a pole of the Plancherel density"),
        record(std::move(r)) {}
};

/// Genuine poles of p(lambda alpha)/lambda with v = B_max + k <= B_max + k_max.
/// Negative k_theorem entries (possible when B_max exceeds every |E_j| gap)
/// are listed like any other lattice pole.
std::vector<PoleRecord> poles(const PlancherelDensity& d, long k_max);

/// Independent recomputation of the residue coefficient from the exponents.
Rat residue_coeff_check(const PlancherelDensity& d, const PoleRecord& rec);

/// p_sigma(lambda alpha).  Throws PoleError at genuine poles.
std::complex<double> evaluate(const PlancherelDensity& d, std::complex<double> lambda);

/// p_sigma(lambda alpha)/lambda, the function actually integrated; stable
/// near lambda = 0 where cancelled coth poles leave a finite value.
std::complex<double> evaluate_over_lambda(const PlancherelDensity& d,
                                          std::complex<double> lambda);

/// Per-family factored closed form, built literally factor-by-factor as an
/// independent code path for cross-validating the unified formula: returns
/// (kind, |E_j| multiset).
std::pair<HyperbolicKind, RatVec> closed_form_density(const GroupSpec& spec,
                                                      const MTypeParam& sigma);

/// Multiset of |E_j| for comparisons.
RatVec abs_exponent_multiset(const PlancherelDensity& d);

}  // namespace resatlas

#endif
