#include "resatlas/numverify.hpp"

#include <algorithm>
#include <cmath>

namespace resatlas {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

double nearest_singularity_distance(const PlancherelDensity& d, const Rat& v) {
  // Singularities of p(lambda alpha)/lambda are the genuine poles at +-iv';
  // the pole at v itself (and its mirror when v = 0) is excluded.
  long window = static_cast<long>(to_double(rat_abs(v)) - to_double(d.b_max)) + 4;
  window = std::max(window, 2L);
  double dist = 1e300;
  const double vd = to_double(v);
  for (const PoleRecord& rec : poles(d, window)) {
    double w = to_double(rec.v);
    if (std::abs(w - vd) > 1e-12) dist = std::min(dist, std::abs(w - vd));
    if (std::abs(w + vd) > 1e-12) dist = std::min(dist, std::abs(-w - vd));
  }
  return dist;
}

cplx circle_integral(const PlancherelDensity& d, const Rat& v, double radius, long samples) {
  if (samples < 64) throw std::invalid_argument("need at least 64 samples");
  if (radius <= 0.0) throw std::invalid_argument("radius must be positive");
  if (radius >= nearest_singularity_distance(d, v))
    throw std::domain_error("radius reaches another singularity of p/lambda");
  const cplx center(0.0, -to_double(v));
  cplx acc(0.0, 0.0);
  for (long j = 0; j < samples; ++j) {
    double theta = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(samples);
    cplx e(std::cos(theta), std::sin(theta));
    acc += e * evaluate_over_lambda(d, center + radius * e);
  }
  return acc * (radius / static_cast<double>(samples));
}

double max_abs_on_circle(const PlancherelDensity& d, const Rat& v, double radius) {
  double m = 0.0;
  const cplx center(0.0, -to_double(v));
  for (long j = 0; j < 64; ++j) {
    double theta = 2.0 * kPi * j / 64.0;
    cplx z = center + radius * cplx(std::cos(theta), std::sin(theta));
    m = std::max(m, std::abs(evaluate_over_lambda(d, z)));
  }
  return m;
}

QuadratureReport make_circle_report(const PlancherelDensity& d, const Rat& v, double radius,
                                    long samples, const Rat* coeff) {
  cplx val = circle_integral(d, v, radius, samples);
  QuadratureReport rep;
  rep.spec = d.spec;
  rep.sigma_tuple = d.sigma.tuple;
  rep.samples = samples;
  rep.numeric_value = val.real();
  if (coeff) {
    rep.target = "residue of p(lambda alpha)/lambda at lambda = -i(" + rat_str(v) + ")";
    rep.exact_str = rat_str(*coeff) + "/pi";
    rep.exact_value = to_double(*coeff) / kPi;
    rep.abs_err = std::abs(val - cplx(rep.exact_value, 0.0));
    rep.rel_err = (rep.exact_value != 0.0) ? rep.abs_err / std::abs(rep.exact_value)
                                           : rep.abs_err;
  } else {
    rep.target = "contour integral around cancelled lattice point " + rat_str(v);
    rep.exact_value = 0.0;
    rep.abs_err = std::abs(val);
    // scale by the integrand magnitude so huge polynomials do not mask zeros
    double scale = std::max(1.0, max_abs_on_circle(d, v, radius));
    rep.rel_err = rep.abs_err / scale;
  }
  return rep;
}

// Adaptive Gauss-Kronrod (7,15) on a complex-valued integrand.
struct GK15 {
  static constexpr double xk[15] = {
      -0.991455371120813, -0.949107912342759, -0.864864423359769, -0.741531185599394,
      -0.586087235467691, -0.405845151377397, -0.207784955007898, 0.0,
      0.207784955007898,  0.405845151377397,  0.586087235467691,  0.741531185599394,
      0.864864423359769,  0.949107912342759,  0.991455371120813};
  static constexpr double wk[15] = {
      0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
      0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
      0.204432940075298, 0.190350578064785, 0.169004726639267, 0.140653259715525,
      0.104790010322250, 0.063092092629979, 0.022935322010529};
  static constexpr double wg[7] = {
      0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
      0.381830050505119, 0.279705391489277, 0.129484966168870};
};

template <typename F>
cplx gk15_panel(const F& f, double a, double b, double& err, long& evals) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  cplx k(0.0), g(0.0);
  for (int i = 0; i < 15; ++i) {
    cplx fv = f(c + h * GK15::xk[i]);
    k += GK15::wk[i] * fv;
    if (i % 2 == 1) g += GK15::wg[i / 2] * fv;
  }
  evals += 15;
  err = std::abs(k - g) * h;
  return k * h;
}

template <typename F>
cplx adaptive_quad(const F& f, double a, double b, double abs_tol, long& evals, int depth = 0) {
  double err = 0.0;
  cplx val = gk15_panel(f, a, b, err, evals);
  if (err <= abs_tol || depth >= 16) return val;
  double mid = 0.5 * (a + b);
  return adaptive_quad(f, a, mid, abs_tol / 2, evals, depth + 1) +
         adaptive_quad(f, mid, b, abs_tol / 2, evals, depth + 1);
}

// Coarse uniform pass to learn the integral's magnitude, then adaptive
// refinement at a tolerance relative to that scale.
template <typename F>
cplx line_integral(const F& f, double a, double b, double rel_tol, long& evals) {
  const int coarse = 64;
  double scale = 0.0, err = 0.0;
  const double h = (b - a) / coarse;
  for (int i = 0; i < coarse; ++i)
    scale += std::abs(gk15_panel(f, a + i * h, a + (i + 1) * h, err, evals));
  double abs_tol = std::max(scale, 1e-300) * rel_tol;
  cplx total(0.0, 0.0);
  for (int i = 0; i < coarse; ++i)
    total += adaptive_quad(f, a + i * h, a + (i + 1) * h, abs_tol / coarse, evals);
  return total;
}

}  // namespace

QuadratureReport residue_quadrature(const PlancherelDensity& d, const PoleRecord& rec,
                                    double radius, long samples) {
  QuadratureReport rep = make_circle_report(d, rec.v, radius, samples, &rec.residue_coeff);
  rep.tol = 1e-8;
  rep.passed = rep.rel_err <= rep.tol;
  return rep;
}

QuadratureReport cancelled_point_quadrature(const PlancherelDensity& d, const Rat& v,
                                            double radius, long samples) {
  QuadratureReport rep = make_circle_report(d, v, radius, samples, nullptr);
  rep.tol = 1e-10;
  rep.passed = rep.rel_err <= rep.tol;
  return rep;
}

QuadratureReport contour_shift_check(const PlancherelDensity& d, std::complex<double> zeta,
                                     const Rat& shift, double truncation, double tol) {
  if (d.kind == HyperbolicKind::constant)
    throw std::domain_error("contour shift needs a density with a hyperbolic factor");
  if (zeta.imag() <= 0.0) throw std::invalid_argument("Im(zeta) must be positive");
  if (is_integer(shift) || is_half_odd(shift))
    throw std::invalid_argument("shift must avoid the pole lattice (use N + 1/4)");
  const double s = to_double(shift);
  if (s <= 0.0) throw std::invalid_argument("shift must be positive");
  if (d.kind == HyperbolicKind::coth) {
    bool zero_cancelled = false;
    for (const Rat& e : d.exponents)
      if (e == 0) zero_cancelled = true;
    if (!zero_cancelled)
      throw std::domain_error("p/lambda has a pole at 0; the real-line integral diverges");
  }

  const double alpha_len = std::sqrt(to_double(group_constants(d.spec).alpha_norm_sq));
  auto integrand = [&](cplx lam) {
    cplx g = std::exp(-lam * lam);
    return g * evaluate_over_lambda(d, lam) / (zeta - lam * alpha_len);
  };

  double T = truncation;
  if (T <= 0.0) {
    // e^{s^2 - T^2} (1+T)^{deg+2} < tol/10, iterated once from the Gaussian core
    double deg = 2.0 * static_cast<double>(d.exponents.size()) + 2.0;
    T = std::sqrt(s * s + std::log(10.0 / tol) + 10.0);
    T = std::sqrt(s * s + std::log(10.0 / tol) + deg * std::log1p(T) + 4.0);
  }
  if (T <= s + 1.0) T = s + 6.0;

  long evals = 0;
  const double quad_tol = tol * 1e-3;
  cplx top = line_integral([&](double x) { return integrand(cplx(x, 0.0)); }, -T, T,
                           quad_tol, evals);
  cplx bottom = line_integral([&](double x) { return integrand(cplx(x, -s)); }, -T, T,
                              quad_tol, evals);

  cplx residue_sum(0.0, 0.0);
  double max_term = 0.0;
  long crossed = 0;
  long window = static_cast<long>(std::ceil(s - to_double(d.b_max))) + 1;
  window = std::max(window, 0L);
  for (const PoleRecord& rec : poles(d, window)) {
    if (!(rec.v > 0 && rec.v < shift)) continue;
    double v = to_double(rec.v);
    cplx g = std::exp(cplx(v * v, 0.0));  // g(-iv) = e^{v^2}
    cplx term = g * (to_double(rec.residue_coeff) / kPi) /
                (zeta + cplx(0.0, 1.0) * v * alpha_len);
    if (std::abs(zeta + cplx(0.0, 1.0) * v * alpha_len) < tol)
      throw std::invalid_argument("zeta is too close to a residue-term pole");
    residue_sum += term;
    max_term = std::max(max_term, std::abs(term));
    ++crossed;
  }

  // int_R F = int_{R-is} F - 2 pi i sum Res.
  cplx rhs = bottom - cplx(0.0, 2.0 * kPi) * residue_sum;
  cplx defect = top - rhs;
  double scale = std::max({std::abs(top), std::abs(bottom), 2.0 * kPi * max_term, 1e-300});

  QuadratureReport rep;
  rep.spec = d.spec;
  rep.sigma_tuple = d.sigma.tuple;
  rep.target = "contour shift to R - i(" + rat_str(shift) + "), zeta = (" +
               std::to_string(zeta.real()) + "," + std::to_string(zeta.imag()) + ")";
  rep.detail = "poles crossed: " + std::to_string(crossed) + ", T = " + std::to_string(T);
  rep.exact_value = 0.0;
  rep.numeric_value = std::abs(defect);
  rep.abs_err = std::abs(defect);
  rep.rel_err = std::abs(defect) / scale;
  rep.samples = evals;
  rep.tol = tol;
  rep.passed = rep.rel_err <= tol;
  return rep;
}

}  // namespace resatlas
