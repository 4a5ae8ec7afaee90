#ifndef RESATLAS_BRANCHING_HPP
#define RESATLAS_BRANCHING_HPP

#include "resatlas/liealg.hpp"

#include <vector>

namespace resatlas {

/// Highest-weight tuple of a K-type in the family coordinates:
///   SpinEven (a_1..a_n), SpinOdd (a_1..a_n), SU (a_1..a_{n+1}),
///   Sp (a_1..a_n; a_{n+1}), F4 (a_1..a_4).
struct KTypeParam {
  GroupSpec spec;
  RatVec a;
};

/// Throws std::domain_error when the tuple violates the family constraints.
void validate(const KTypeParam& tau);

/// K-weight in full epsilon-coordinates.
Weight k_weight(const KTypeParam& tau);

/// An M-type occurring in tau|_M.  Tuple layout per family:
///   SpinEven (b_1..b_{n-1}), SpinOdd (b_1..b_n), SU (b_0; b_2..b_n),
///   Sp (b_0; b_1; b_2..b_n), F4 (b_1,b_2,b_3).
/// For Sp the representation is determined by (b_0; b_2..b_n); b_1 is the
/// intermediate Sp(1) label of the Sp(n) restriction, kept as path data.
struct MTypeParam {
  GroupSpec spec;
  RatVec tuple;
  long multiplicity = 1;
  long path_count = 1;
  bool multiplicity_flagged = false;  // Sp only: path count exceeded 1

  bool is_trivial() const;
};

/// M-weight in full epsilon-coordinates.
Weight m_weight(const MTypeParam& sigma);

/// Dimension of sigma as an M-representation.
Int m_dim(const MTypeParam& sigma);

/// The set M^(tau): all M-types of the restriction, lexicographically ordered
/// by tuple, with multiplicities.  Classical interlacing rules for the Spin
/// and SU families; for Sp a two-step rule (Sp(n) down to Sp(n-1) x Sp(1) by
/// doubly interlaced patterns with sl(2)-reflected signs, then Clebsch-Gordan
/// against the Sp(1) factor of K); for F4 the composition
/// Spin(9) -> Spin(8) -> triality -> Spin(7).
std::vector<MTypeParam> mhat(const GroupSpec& spec, const KTypeParam& tau);

/// True iff the trivial M-type occurs in tau|_M.
bool contains_trivial_m(const GroupSpec& spec, const KTypeParam& tau);

struct NotApplicableError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Canonical parameters of the tau shapes that contain triv_M:
///   Spin (N,0,...,0); SU (M1,0,...,0,-M2,-L) up to gauge; Sp (t1,t2,0,..,0,
///   t_{n+1}); F4 (a/2,b/2,b/2,b/2).
struct TauParams {
  Family family = Family::SpinEven;
  long N = 0;             // Spin families
  long M1 = 0, M2 = 0, L = 0;  // SU
  long t1 = 0, t2 = 0, tn1 = 0;  // Sp
  long a = 0, b = 0;      // F4
};

/// Throws NotApplicableError when tau is not of a classifiable shape,
/// reporting the violated constraint.
TauParams tau_params(const GroupSpec& spec, const KTypeParam& tau);

}  // namespace resatlas

#endif
