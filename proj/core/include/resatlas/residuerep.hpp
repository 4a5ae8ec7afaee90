#ifndef RESATLAS_RESIDUEREP_HPP
#define RESATLAS_RESIDUEREP_HPP

#include "resatlas/branching.hpp"

#include <optional>
#include <string>
#include <vector>

namespace resatlas {

// Classification of the residue representation E_k at the k-th genuine pole
// lambda_k = -i(rho_alpha + k) of the sigma = triv_M family, for K-types tau
// containing triv_M.  Case regions live on the K-type lattice of the
// spherical principal series:
//   SpinEven  m >= 0                  finite m <= k | infinite m >= k+1
//   SU        (m,l), m >= |l|, m+l even, cut by l = +-(m - (2k+2))
//   Sp        (m,l), m >= l >= 0, m+l even, cut by l = m-(2k+4), l = (2k+2)-m
//   F4        (p,q), p >= q >= 0, p+q even, cut by q = p-(2k+8), q = (2k+2)-p
// Boundary membership: east is closed, north is closed on its remaining
// boundary, west is the open remainder; the policy string is carried in the
// output for audit.

enum class CaseLabel { spin_infinite, spin_finite, east, north, south, west };

std::string case_name(CaseLabel c);

enum class OrbitLabel { zero, half_root, long_root, n1, n2 };

std::string orbit_name(OrbitLabel o);

struct OrbitInfo {
  OrbitLabel label = OrbitLabel::zero;
  long real_dim = 0;
  std::vector<long> complex_partition;  // Young diagram rows; empty for F4
  std::string description;
};

/// Lattice point: (m) for Spin, (m,l) for SU/Sp, (p,q) for F4.
struct LatticePoint {
  long x = 0;
  long y = 0;
};

struct ResidueRepInfo {
  GroupSpec spec;
  CaseLabel case_label = CaseLabel::west;
  long k = 0;
  Rat pole_v;  // lambda_k = -i pole_v, pole_v = rho_alpha + k

  Weight minimal_ktype;

  bool discrete_series = false;
  RatVec delta_tuple;  // (b_0; b_2..b_n) for SU/Sp, (b_1,b_2,b_3) for F4,
                       // (b_1..b_{n-1}) for SpinEven; empty for discrete series
  Weight delta_eps;
  RatVec delta_triality;  // F4 only: delta in the triality-conjugate 4-coordinate frame
  Weight blattner;       // discrete series only
  Weight hc_param;       // discrete series only

  bool nu_is_imaginary_marker = false;  // nu = i lambda_k (finite cases)
  Rat nu_alpha;                         // nu = nu_alpha * alpha otherwise
  bool nu_pm = false;

  bool unitary = false;
  bool finite_dim = false;
  long gk_dim = 0;
  OrbitInfo orbit;
  std::string boundary_policy;
};

/// Requires contains_trivial_m(tau) and k >= 0; throws NotApplicableError.
ResidueRepInfo classify(const GroupSpec& spec, const KTypeParam& tau, long k);

bool in_constituent(const GroupSpec& spec, CaseLabel c, long k, const LatticePoint& p);

/// All lattice points of the constituent with coordinates <= bound.
std::vector<LatticePoint> constituent_ktypes(const GroupSpec& spec, CaseLabel c, long k,
                                             long bound);

/// K-weight of a lattice point in full epsilon-coordinates.
Weight lattice_k_weight(const GroupSpec& spec, const LatticePoint& p);

/// Vogan-norm minimizer over the constituent; ties broken lexicographically
/// on the lattice tuple and reported through `ties` when provided.
Weight minimal_ktype_search(const GroupSpec& spec, CaseLabel c, long k, long bound,
                            std::vector<LatticePoint>* ties = nullptr);

/// Infinitesimal-character match of (triv, lambda_k alpha) against
/// (delta, nu) modulo the complex Weyl group.  Not defined for discrete
/// series entries.
bool verify_langlands(const GroupSpec& spec, const ResidueRepInfo& info, long k);

/// Casimir-of-K eigenvalue at a lattice point, normalized so that the
/// trivial K-type evaluates to 0.  The un-normalized value is also available.
Rat casimir_k_eigenvalue(const GroupSpec& spec, const LatticePoint& p);
Rat casimir_k_eigenvalue_raw(const GroupSpec& spec, const LatticePoint& p);

/// Closed-form dimension of the lattice point's K-type (for Sp this is the
/// full dimension including the (l+1)-dimensional Sp(1) factor).
Int ktype_dim(const GroupSpec& spec, const LatticePoint& p);

/// N_{E_k}(t): sum of ktype_dim over constituent points with normalized
/// Casimir eigenvalue <= t^2.  Exact.
Int gk_count(const GroupSpec& spec, CaseLabel c, long k, const Rat& t);

/// Least-squares slope of log N vs log t over the top half of a geometric
/// grid; estimates the Gelfand-Kirillov dimension.
double gk_exponent_estimate(const GroupSpec& spec, CaseLabel c, long k,
                            const std::vector<double>& t_grid);

/// Static nilpotent-orbit catalogue of the family.
std::vector<OrbitInfo> nilpotent_orbits(const GroupSpec& spec);

}  // namespace resatlas

#endif
