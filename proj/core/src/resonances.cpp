#include "resatlas/resonances.hpp"

#include <algorithm>
#include <cmath>

namespace resatlas {

namespace {

std::vector<Resonance> family_from_density(const PlancherelDensity& d, long k_max) {
  const GroupSpec& spec = d.spec;
  GroupConstants gc = group_constants(spec);
  // k_max counts genuine poles (section-5 indexing); widen the lattice window
  // past the largest cancellation before truncating.
  long window = k_max;
  for (const Rat& e : d.exponents) {
    Rat gap = rat_abs(e) - d.b_max;
    if (gap > 0) window = std::max(window, k_max + to_long(gap) + 1);
  }
  window += 1;
  Weight rho_m = rho_of(spec, Algebra::m);
  Weight mu = m_weight(d.sigma);
  RatVec shifted = mu.coords;
  for (size_t i = 0; i < shifted.size(); ++i) shifted[i] += rho_m.coords[i];
  const Rat mu_term = inner(spec, shifted, shifted);
  const Rat rho_m_sq = inner(spec, rho_m, rho_m);
  const double alpha_len = std::sqrt(to_double(gc.alpha_norm_sq));

  std::vector<Resonance> out;
  for (const PoleRecord& rec : poles(d, window)) {
    if (rec.k_section5 > k_max) break;
    Resonance r;
    r.k_theorem = rec.k_theorem;
    r.k_section5 = rec.k_section5;
    r.v = rec.v;
    r.residue_coeff = rec.residue_coeff;
    r.z_paper = (rec.v * rec.v - gc.rho_alpha * gc.rho_alpha) * gc.alpha_norm_sq + mu_term;
    r.z_hc = r.z_paper - rho_m_sq;
    r.zeta_im = -to_double(rec.v) * alpha_len;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<Resonance> resonance_family(const GroupSpec& spec, const KTypeParam& tau,
                                        const MTypeParam& sigma, long k_max) {
  auto sigmas = mhat(spec, tau);
  auto match = std::find_if(sigmas.begin(), sigmas.end(), [&](const MTypeParam& s) {
    return s.tuple == sigma.tuple;
  });
  if (match == sigmas.end())
    throw std::domain_error("sigma does not occur in the restriction of tau");
  return family_from_density(density(spec, sigma), k_max);
}

ResonanceAtlas atlas(const GroupSpec& spec, const KTypeParam& tau, long k_max) {
  ResonanceAtlas a;
  a.spec = spec;
  a.tau = tau;
  for (const MTypeParam& sigma : mhat(spec, tau)) {
    ResonanceFamily fam;
    fam.sigma = sigma;
    fam.d_sigma = m_dim(sigma);
    fam.resonances = family_from_density(density(spec, sigma), k_max);
    a.families.push_back(std::move(fam));
  }
  return a;
}

}  // namespace resatlas
