#ifndef RESATLAS_LIEALG_HPP
#define RESATLAS_LIEALG_HPP

#include "resatlas/rational.hpp"

#include <string>
#include <vector>

namespace resatlas {

// Exact root-system and weight arithmetic for the four rank-one families
//
//   SpinEven  Spin(2n,1)   K = Spin(2n)          M = Spin(2n-1)
//   SpinOdd   Spin(2n+1,1) K = Spin(2n+1)        M = Spin(2n)
//   SU        SU(n,1)      K = S(U(n) x U(1))    M = U(n-1)
//   Sp        Sp(n,1)      K = Sp(n) x Sp(1)     M = Sp(n-1) x Sp(1)
//   F4        F4(-20)      K = Spin(9)           M = Spin(7)
//
// All weights are vectors of exact rationals in epsilon-coordinates of a
// Cartan subalgebra of g_C, of fixed length h_rank(spec):
//   SpinEven: n      coordinates,  restricted root alpha ~ eps_n
//   SpinOdd:  n+1,                 alpha ~ eps_{n+1}
//   SU:       n+1,                 alpha ~ eps_1 - eps_{n+1}
//   Sp:       n+1,                 alpha ~ eps_1 + eps_2  (Cayley basis)
//   F4:       4,                   alpha ~ eps_1
// M-weights occupy the coordinates orthogonal to alpha; K-weights use the
// compact Cartan with the same Gram matrix.
//
// The inner product on weights is dual to the Killing form restricted to the
// Cartan, B(H,H') = sum over roots of g_C of eps(H)eps(H'); one convention
// everywhere.  In particular |alpha|^2 = 1/(m_{alpha/2}/2 + 2 m_alpha).

enum class Family { SpinEven, SpinOdd, SU, Sp, F4 };

enum class Algebra { g, k, k1, m };

std::string family_name(Family f);
Family family_parse(const std::string& name);
std::string algebra_name(Algebra a);

struct GroupSpec {
  Family family = Family::SpinEven;
  long n = 2;  // rank parameter; ignored for F4

  bool operator==(const GroupSpec& o) const { return family == o.family && n == o.n; }
};

/// Throws std::invalid_argument when n is out of range for the family.
void validate(const GroupSpec& spec);

/// Number of epsilon-coordinates used for weights of this group.
long h_rank(const GroupSpec& spec);

struct GroupConstants {
  long m_half = 0;        // multiplicity of alpha/2
  long m_long = 0;        // multiplicity of alpha
  Rat rho_alpha;          // (m_long + m_half/2)/2
  Rat m_sup;              // (m_half + m_long - 1)/2; integral except SpinOdd
  Rat alpha_norm_sq;      // 1/(m_half/2 + 2 m_long)
  bool pole_free = false; // SpinOdd: constant hyperbolic factor, no resonances
};

GroupConstants group_constants(const GroupSpec& spec);

struct Weight {
  RatVec coords;
  Algebra algebra = Algebra::g;

  bool operator==(const Weight& o) const {
    return algebra == o.algebra && coords == o.coords;
  }
};

Weight zero_weight(const GroupSpec& spec, Algebra a);

struct RootDatum {
  Algebra algebra = Algebra::g;
  std::vector<Weight> roots;
  std::vector<Weight> positive_roots;
  std::vector<Weight> simple_roots;
};

/// Explicit root lists in the conventions above.  The m system is the set of
/// g-roots vanishing on the split direction (for Sp this includes the sp(1)
/// root e1-e2 next to sp(n-1); F4 gives the so(7) system on eps_2..eps_4).
/// Algebra::k1 is Spin(8) inside F4 only.
RootDatum root_datum(const GroupSpec& spec, Algebra algebra);

/// Gram matrix G with <eps_i, eps_j> = G_ij, dual to the Killing form built
/// from the g_C root list.  Type A yields the trace-zero pseudo-inverse.
std::vector<RatVec> killing_gram(const GroupSpec& spec);
std::vector<RatVec> killing_gram(const GroupSpec& spec, Algebra algebra);

Rat inner(const GroupSpec& spec, const Weight& w1, const Weight& w2);
Rat inner(const GroupSpec& spec, const RatVec& v1, const RatVec& v2);
RatC inner_c(const GroupSpec& spec, const RatCVec& v1, const RatCVec& v2);

/// Half sum of the positive roots of the requested algebra.
Weight rho_of(const GroupSpec& spec, Algebra algebra);

/// The restricted root alpha embedded in epsilon-coordinates.
Weight alpha_weight(const GroupSpec& spec);

bool is_dominant(const GroupSpec& spec, Algebra algebra, const Weight& mu);

/// Weyl dimension formula, exact.  mu must be dominant integral.
Int weyl_dim(const GroupSpec& spec, Algebra algebra, const Weight& mu);

/// <mu + 2 rho_K, mu + 2 rho_K> for a K-weight mu.
Rat vogan_norm(const GroupSpec& spec, const Weight& mu);

enum class CasimirConvention { paper, harish_chandra };

/// Scalar by which the Casimir acts on the principal series pi^sigma_lambda,
/// lambda = lambda_alpha * alpha.  CasimirConvention::paper returns
///   -<lambda,lambda> - <rho,rho> + <mu_sigma + rho_m, mu_sigma + rho_m>;
/// harish_chandra subtracts <rho_m, rho_m> so that the trivial representation
/// (sigma = triv, lambda = +-i rho) is annihilated.
RatC casimir_scalar(const GroupSpec& spec, const Weight& sigma_weight,
                    const RatC& lambda_alpha, CasimirConvention convention);

/// True iff some element of W(g_C, h_C) maps chi1 to chi2.  Signed
/// permutations for types B/C, permutations for type A (after trace-zero
/// canonicalization), full enumeration of the order-1152 group for F4.
bool weyl_orbit_equal(const GroupSpec& spec, const RatCVec& chi1, const RatCVec& chi2);
bool weyl_orbit_equal(const GroupSpec& spec, const Weight& chi1, const Weight& chi2);

/// The 1152 elements of W(F4) as matrices acting on coordinate columns.
/// Built once by breadth-first closure over the simple reflections.
const std::vector<std::vector<RatVec>>& f4_weyl_group();

}  // namespace resatlas

#endif
