#include "resatlas/plancherel.hpp"

#include <algorithm>
#include <cmath>

namespace resatlas {

std::string kind_name(HyperbolicKind k) {
  switch (k) {
    case HyperbolicKind::tanh: return "tanh";
    case HyperbolicKind::coth: return "coth";
    case HyperbolicKind::constant: return "constant";
  }
  return "?";
}

namespace {

long s_parameter(const GroupSpec& spec, const RatVec& t) {
  switch (spec.family) {
    case Family::SpinEven: return to_long(2 * t[0]);             // 2 b_1
    case Family::SU: return to_long(2 * t[0]) + spec.n - 1;      // 2 b_0 + n - 1
    case Family::Sp: return to_long(2 * t[0]);                   // 2 b_0
    case Family::F4: return to_long(2 * t[0]);                   // 2 b_1
    case Family::SpinOdd: return 0;
  }
  return 0;
}

// Exponent list E_j, j-ordered.  Each entry pairs a positive root beta with
// its alpha-mirror: the factor is <chi, beta><chi, mirror> = -(lambda^2+E^2)
// at the infinitesimal character chi = i lambda alpha + mu_sigma + rho_m.
// This normalization is pinned by the lattice constraint: every E_j lies in
// Z+1/2 when s is even and in Z when s is odd, for every M-type (note the
// +b_0 sign in the second Sp factor family and the unhalved middle F4
// entries).
RatVec exponent_list(const GroupSpec& spec, const RatVec& t) {
  const long n = spec.n;
  RatVec E;
  switch (spec.family) {
    case Family::SpinEven:  // E_j = b_j + rho_alpha - j
      for (long j = 1; j <= n - 1; ++j)
        E.push_back(t[static_cast<size_t>(j - 1)] + Rat(2 * n - 1, 2) - j);
      break;
    case Family::SU:  // E_j = b_{j+1} - b_0 + n/2 - j
      for (long j = 1; j <= n - 1; ++j)
        E.push_back(t[static_cast<size_t>(j)] - t[0] + Rat(n, 2) - j);
      break;
    case Family::Sp: {
      // tuple (b_0; b_1; b_2..b_n); b_1 does not enter the density.
      const Rat b0 = t[0];
      for (long i = 2; i <= n; ++i)
        E.push_back(t[static_cast<size_t>(i)] - b0 + n - i + Rat(1, 2));
      E.push_back(b0 + Rat(1, 2));
      for (long i = n; i >= 2; --i)
        E.push_back(-(t[static_cast<size_t>(i)] + b0 + n - i + Rat(3, 2)));
      break;
    }
    case Family::F4: {
      const Rat b1 = t[0], b2 = t[1], b3 = t[2];
      E = {b1 + b2 + b3 + Rat(9, 2), b1 + b2 - b3 + Rat(7, 2), b1 + Rat(5, 2),
           b2 + Rat(3, 2),           b3 + Rat(1, 2),           -b1 + b2 + b3 - Rat(1, 2),
           -b1 + b2 - b3 - Rat(3, 2)};
      break;
    }
    case Family::SpinOdd:
      break;
  }
  return E;
}

}  // namespace

PlancherelDensity density(const GroupSpec& spec, const MTypeParam& sigma) {
  validate(spec);
  PlancherelDensity d;
  d.spec = spec;
  d.sigma = sigma;
  if (spec.family == Family::SpinOdd) {
    d.kind = HyperbolicKind::constant;
    d.s = 0;
    d.b_max = 0;
    return d;
  }
  d.s = s_parameter(spec, sigma.tuple);
  d.kind = (d.s % 2 == 0) ? HyperbolicKind::tanh : HyperbolicKind::coth;
  d.exponents = exponent_list(spec, sigma.tuple);

  for (const Rat& e : d.exponents) {
    bool ok = (d.kind == HyperbolicKind::tanh) ? is_half_odd(e) : is_integer(e);
    if (!ok)
      throw std::domain_error("exponent " + rat_str(e) + " off the " + kind_name(d.kind) +
                              " lattice; sigma tuple is not a valid M-type");
  }
  d.b_max = std::max(rat_abs(d.exponents.front()), rat_abs(d.exponents.back()));
  return d;
}

RatVec abs_exponent_multiset(const PlancherelDensity& d) {
  RatVec v;
  for (const Rat& e : d.exponents) v.push_back(rat_abs(e));
  std::sort(v.begin(), v.end());
  return v;
}

namespace {

long count_abs(const RatVec& exponents, const Rat& v) {
  long c = 0;
  for (const Rat& e : exponents)
    if (rat_abs(e) == v) ++c;
  return c;
}

Rat residue_from_exponents(const RatVec& exponents, long s, const Rat& v) {
  Rat c = (s % 2 == 0) ? Rat(1) : Rat(-1);
  for (const Rat& e : exponents) c *= e * e - v * v;
  return c;
}

}  // namespace

std::vector<PoleRecord> poles(const PlancherelDensity& d, long k_max) {
  std::vector<PoleRecord> out;
  if (d.kind == HyperbolicKind::constant) return out;
  if (k_max < 0) throw std::invalid_argument("k_max must be nonnegative");

  // First lattice point >= 0 in the parity class of B_max.
  Rat v0 = d.b_max;
  while (v0 - 1 >= 0) v0 -= 1;
  long section5 = 0;
  for (Rat v = v0; v <= d.b_max + k_max; v += 1) {
    if (count_abs(d.exponents, v) > 0) continue;
    PoleRecord rec;
    rec.v = v;
    rec.k_theorem = to_long(v - d.b_max);
    rec.k_section5 = section5++;
    rec.order = 1;
    rec.residue_coeff = residue_from_exponents(d.exponents, d.s, v);
    out.push_back(std::move(rec));
  }
  return out;
}

Rat residue_coeff_check(const PlancherelDensity& d, const PoleRecord& rec) {
  if (count_abs(d.exponents, rec.v) > 0)
    throw std::domain_error("lattice value " + rat_str(rec.v) +
                            " is cancelled; no pole record exists there");
  return residue_from_exponents(d.exponents, d.s, rec.v);
}

namespace {

using cplx = std::complex<double>;

// lambda * coth(pi lambda), stable near 0.
cplx lambda_coth_pi(cplx z) {
  cplx w = M_PI * z;
  if (std::abs(w) < 1e-2) {
    cplx w2 = w * w;
    return (1.0 + w2 / 3.0 - w2 * w2 / 45.0 + 2.0 * w2 * w2 * w2 / 945.0) / M_PI;
  }
  return z * std::cosh(w) / std::sinh(w);
}

void check_not_pole(const PlancherelDensity& d, cplx lambda) {
  if (d.kind == HyperbolicKind::constant) return;
  if (std::abs(lambda.real()) > 1e-9) return;
  double t = std::abs(lambda.imag());
  long window = std::max(0L, static_cast<long>(std::ceil(t - to_double(d.b_max))) + 2);
  for (const PoleRecord& rec : poles(d, window)) {
    if (std::abs(t - to_double(rec.v)) < 1e-9) throw PoleError(rec);
  }
}

}  // namespace

std::complex<double> evaluate_over_lambda(const PlancherelDensity& d, cplx lambda) {
  check_not_pole(d, lambda);
  if (d.kind == HyperbolicKind::constant) return cplx(1.0, 0.0);

  long zeros_at_origin = 0;
  cplx poly(1.0, 0.0);
  for (const Rat& e : d.exponents) {
    if (e == 0) {
      ++zeros_at_origin;
      continue;
    }
    double ed = to_double(e);
    poly *= lambda * lambda + ed * ed;
  }
  cplx sign = (d.s % 2 == 0) ? cplx(1.0) : cplx(-1.0);
  if (d.kind == HyperbolicKind::tanh) return sign * std::tanh(M_PI * lambda) * poly;
  // coth: pair one lambda from each origin zero with the 1/sinh singularity.
  cplx h;
  if (zeros_at_origin > 0) {
    h = lambda_coth_pi(lambda);
    for (long i = 0; i < 2 * zeros_at_origin - 1; ++i) h *= lambda;
  } else {
    cplx w = M_PI * lambda;
    h = std::cosh(w) / std::sinh(w);
  }
  return sign * h * poly;
}

std::complex<double> evaluate(const PlancherelDensity& d, cplx lambda) {
  if (d.kind == HyperbolicKind::constant) return lambda;
  return lambda * evaluate_over_lambda(d, lambda);
}

std::pair<HyperbolicKind, RatVec> closed_form_density(const GroupSpec& spec,
                                                      const MTypeParam& sigma) {
  validate(spec);
  const long n = spec.n;
  const RatVec& t = sigma.tuple;
  HyperbolicKind kind = HyperbolicKind::tanh;
  RatVec ex;

  switch (spec.family) {
    case Family::SpinOdd:
      kind = HyperbolicKind::constant;
      break;
    case Family::SpinEven: {
      // tanh for integral b, coth for half-integral b.
      kind = (t.empty() || is_integer(t[0])) ? HyperbolicKind::tanh : HyperbolicKind::coth;
      Rat rho = group_constants(spec).rho_alpha;
      for (long j = 1; j <= n - 1; ++j) ex.push_back(rho + t[static_cast<size_t>(j - 1)] - j);
      break;
    }
    case Family::SU: {
      // tanh iff 2 b_0 + n odd.
      kind = ((to_long(2 * t[0]) + n) % 2 != 0) ? HyperbolicKind::tanh : HyperbolicKind::coth;
      for (long j = 1; j <= n - 1; ++j)
        ex.push_back(t[static_cast<size_t>(j)] - t[0] + Rat(n, 2) - j);
      break;
    }
    case Family::Sp: {
      // Factor pairs (b_{j-1} - b_0 + n - j + 3/2) and (b_{j-1} + b_0 + n - j
      // + 5/2); see the lattice note at exponent_list for the b_0 signs.
      kind = is_integer(t[0]) ? HyperbolicKind::tanh : HyperbolicKind::coth;
      ex.push_back(t[0] + Rat(1, 2));
      for (long j = 3; j <= n + 1; ++j) {
        Rat base = t[static_cast<size_t>(j - 1)] + n - j;
        ex.push_back(base - t[0] + Rat(3, 2));
        ex.push_back(base + t[0] + Rat(5, 2));
      }
      break;
    }
    case Family::F4: {
      // Seven factors; the middle three are b_i + c/2 (halving b_i instead
      // would leave the lattice off the trivial type).
      kind = is_integer(t[0]) ? HyperbolicKind::tanh : HyperbolicKind::coth;
      const Rat b1 = t[0], b2 = t[1], b3 = t[2];
      ex = {b3 + Rat(1, 2),          b2 + Rat(3, 2),          b1 + Rat(5, 2),
            b1 - b2 - b3 + Rat(1, 2), b1 - b2 + b3 + Rat(3, 2), b1 + b2 - b3 + Rat(7, 2),
            b1 + b2 + b3 + Rat(9, 2)};
      break;
    }
  }
  for (Rat& e : ex) e = rat_abs(e);
  std::sort(ex.begin(), ex.end());
  return {kind, std::move(ex)};
}

}  // namespace resatlas
