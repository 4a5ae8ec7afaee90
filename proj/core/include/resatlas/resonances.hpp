#ifndef RESATLAS_RESONANCES_HPP
#define RESATLAS_RESONANCES_HPP

#include "resatlas/plancherel.hpp"

namespace resatlas {

// One resonance of the meromorphically continued resolvent: the pole at
// lambda_k = -iv contributes the resonance value
//   z_paper = v^2 |alpha|^2 - rho_alpha^2 |alpha|^2 + <mu_sigma + rho_m, mu_sigma + rho_m>;
// the Harish-Chandra-consistent z_hc subtracts <rho_m, rho_m>, putting the
// first trivial-type resonance at 0.  Both are always reported.
struct Resonance {
  long k_theorem = 0;
  long k_section5 = 0;
  Rat v;
  Rat z_paper;
  Rat z_hc;
  Rat residue_coeff;
  double zeta_im = 0.0;  // zeta_sigma = -i v |alpha| at the pole
};

struct ResonanceFamily {
  MTypeParam sigma;
  Int d_sigma;
  std::vector<Resonance> resonances;
};

struct ResonanceAtlas {
  GroupSpec spec;
  KTypeParam tau;
  std::vector<ResonanceFamily> families;
};

/// Resonances of the sigma-family, one per genuine pole with v <= B_max + k_max.
/// sigma must belong to mhat(spec, tau).
std::vector<Resonance> resonance_family(const GroupSpec& spec, const KTypeParam& tau,
                                        const MTypeParam& sigma, long k_max);

/// Full atlas over mhat(spec, tau).  Empty resonance lists for SpinOdd.
ResonanceAtlas atlas(const GroupSpec& spec, const KTypeParam& tau, long k_max = 32);

}  // namespace resatlas

#endif
