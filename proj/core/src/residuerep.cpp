#include "resatlas/residuerep.hpp"

#include "resatlas/threading.hpp"

#include <algorithm>
#include <cmath>

namespace resatlas {

std::string case_name(CaseLabel c) {
  switch (c) {
    case CaseLabel::spin_infinite: return "infinite";
    case CaseLabel::spin_finite: return "finite";
    case CaseLabel::east: return "east";
    case CaseLabel::north: return "north";
    case CaseLabel::south: return "south";
    case CaseLabel::west: return "west";
  }
  return "?";
}

std::string orbit_name(OrbitLabel o) {
  switch (o) {
    case OrbitLabel::zero: return "zero";
    case OrbitLabel::half_root: return "half_root";
    case OrbitLabel::long_root: return "long_root";
    case OrbitLabel::n1: return "n1";
    case OrbitLabel::n2: return "n2";
  }
  return "?";
}

namespace {

std::vector<long> ones_partition(long total, long head) {
  std::vector<long> p;
  if (head > 0) p.push_back(head);
  for (long i = 0; i < total - head; ++i) p.push_back(1);
  return p;
}

OrbitInfo make_orbit(OrbitLabel label, long real_dim, std::vector<long> partition,
                     std::string desc) {
  OrbitInfo o;
  o.label = label;
  o.real_dim = real_dim;
  o.complex_partition = std::move(partition);
  o.description = std::move(desc);
  return o;
}

}  // namespace

std::vector<OrbitInfo> nilpotent_orbits(const GroupSpec& spec) {
  validate(spec);
  const long n = spec.n;
  std::vector<OrbitInfo> out;
  switch (spec.family) {
    case Family::SpinEven:
      out.push_back(make_orbit(OrbitLabel::zero, 0, ones_partition(2 * n + 1, 0), "trivial orbit"));
      out.push_back(make_orbit(OrbitLabel::long_root, 4 * n - 2,
                               ones_partition(2 * n + 1, 3), "generated by g_alpha"));
      break;
    case Family::SpinOdd:
      out.push_back(make_orbit(OrbitLabel::zero, 0, ones_partition(2 * n + 2, 0), "trivial orbit"));
      out.push_back(make_orbit(OrbitLabel::long_root, 4 * n,
                               ones_partition(2 * n + 2, 3), "generated by g_alpha"));
      break;
    case Family::SU:
      out.push_back(make_orbit(OrbitLabel::zero, 0, ones_partition(n + 1, 0), "trivial orbit"));
      out.push_back(make_orbit(OrbitLabel::half_root, 4 * n - 2, ones_partition(n + 1, 3),
                               "generated by g_{alpha/2}"));
      out.push_back(make_orbit(OrbitLabel::n1, 2 * n, ones_partition(n + 1, 2),
                               "generated by the degree-1 nilpotent n1 in g_alpha"));
      out.push_back(make_orbit(OrbitLabel::n2, 2 * n, ones_partition(n + 1, 2),
                               "generated by the degree-1 nilpotent n2 in g_alpha"));
      break;
    case Family::Sp:
      out.push_back(make_orbit(OrbitLabel::zero, 0, ones_partition(2 * n + 2, 0), "trivial orbit"));
      out.push_back(make_orbit(OrbitLabel::half_root, 8 * n - 2, ones_partition(2 * n + 2, 3),
                               "generated by g_{alpha/2}"));
      out.push_back(make_orbit(OrbitLabel::long_root, 4 * n + 2, ones_partition(2 * n + 2, 2),
                               "generated by g_alpha"));
      break;
    case Family::F4:
      out.push_back(make_orbit(OrbitLabel::zero, 0, {}, "trivial orbit"));
      out.push_back(make_orbit(OrbitLabel::half_root, 30, {}, "generated by g_{alpha/2}"));
      out.push_back(make_orbit(OrbitLabel::long_root, 22, {}, "generated by g_alpha"));
      break;
  }
  return out;
}

namespace {

OrbitInfo orbit_by_label(const GroupSpec& spec, OrbitLabel label) {
  for (const OrbitInfo& o : nilpotent_orbits(spec))
    if (o.label == label) return o;
  throw std::logic_error("orbit label not in catalogue");
}

std::string policy_string(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::SpinEven:
      return "finite: m<=k; infinite: m>=k+1";
    case Family::SU:
      return "east closed: m-|l|>=2k+2; north/south closed on l=+-(2k+2-m) off east "
             "(|l|>=|m-2k-1|+1); west: m+|l|<2k+2";
    case Family::Sp:
      return "east closed: l<=m-2k-4; north closed: l>=|m-2k-2|; west: remainder";
    case Family::F4:
      return "east closed: p-q>=2k+8; north closed: p+q>=2k+2 off east; west: p+q<2k+2";
    default:
      return "";
  }
}

bool on_lattice(const GroupSpec& spec, const LatticePoint& p) {
  switch (spec.family) {
    case Family::SpinEven: return p.x >= 0 && p.y == 0;
    case Family::SU: return p.x >= std::labs(p.y) && (p.x + p.y) % 2 == 0;
    case Family::Sp: return p.y >= 0 && p.x >= p.y && (p.x + p.y) % 2 == 0;
    case Family::F4: return p.y >= 0 && p.x >= p.y && (p.x + p.y) % 2 == 0;
    default: throw std::domain_error("no K-type lattice for this family");
  }
}

}  // namespace

bool in_constituent(const GroupSpec& spec, CaseLabel c, long k, const LatticePoint& p) {
  if (!on_lattice(spec, p)) return false;
  const long m = p.x, l = p.y;
  switch (spec.family) {
    case Family::SpinEven:
      if (c == CaseLabel::spin_finite) return m <= k;
      if (c == CaseLabel::spin_infinite) return m >= k + 1;
      break;
    case Family::SU: {
      bool east = m - std::labs(l) >= 2 * k + 2;
      bool north = l >= std::labs(m - (2 * k + 1)) + 1;
      bool south = -l >= std::labs(m - (2 * k + 1)) + 1;
      switch (c) {
        case CaseLabel::east: return east;
        case CaseLabel::north: return north;
        case CaseLabel::south: return south;
        case CaseLabel::west: return !east && !north && !south;
        default: break;
      }
      break;
    }
    case Family::Sp: {
      bool east = l <= m - (2 * k + 4);
      bool north = l >= std::labs(m - (2 * k + 2));
      switch (c) {
        case CaseLabel::east: return east;
        case CaseLabel::north: return north && !east;
        case CaseLabel::west: return !east && !north;
        default: break;
      }
      break;
    }
    case Family::F4: {
      bool east = m - l >= 2 * k + 8;
      bool north = !east && m + l >= 2 * k + 2;
      switch (c) {
        case CaseLabel::east: return east;
        case CaseLabel::north: return north;
        case CaseLabel::west: return !east && !north;
        default: break;
      }
      break;
    }
    default:
      throw std::domain_error("no case regions for this family");
  }
  throw std::invalid_argument("case label does not exist for this family");
}

std::vector<LatticePoint> constituent_ktypes(const GroupSpec& spec, CaseLabel c, long k,
                                             long bound) {
  validate(spec);
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  std::vector<LatticePoint> out;
  if (spec.family == Family::SpinEven) {
    for (long m = 0; m <= bound; ++m)
      if (in_constituent(spec, c, k, {m, 0})) out.push_back({m, 0});
    return out;
  }
  const long y_lo = (spec.family == Family::SU) ? -bound : 0;
  for (long x = 0; x <= bound; ++x)
    for (long y = y_lo; y <= bound; ++y)
      if (on_lattice(spec, {x, y}) && in_constituent(spec, c, k, {x, y}))
        out.push_back({x, y});
  return out;
}

Weight lattice_k_weight(const GroupSpec& spec, const LatticePoint& p) {
  if (!on_lattice(spec, p)) throw std::domain_error("point is not on the K-type lattice");
  Weight w = zero_weight(spec, Algebra::k);
  const long n = spec.n;
  switch (spec.family) {
    case Family::SpinEven:
      w.coords[0] = p.x;
      break;
    case Family::SU:
      // H^{m1,m2}(C^n) x H^l(C), m1 = (m-l)/2, m2 = (m+l)/2, trace-zero gauge.
      w.coords[0] = Rat(p.x - p.y, 2);
      w.coords[static_cast<size_t>(n - 1)] = -Rat(p.x + p.y, 2);
      w.coords[static_cast<size_t>(n)] = p.y;
      break;
    case Family::Sp:
      w.coords[0] = Rat(p.x + p.y, 2);
      w.coords[1] = Rat(p.x - p.y, 2);
      w.coords[static_cast<size_t>(n)] = p.y;
      break;
    case Family::F4:
      w.coords[0] = Rat(p.x, 2);
      w.coords[1] = w.coords[2] = w.coords[3] = Rat(p.y, 2);
      break;
    default:
      throw std::domain_error("no K-type lattice for this family");
  }
  return w;
}

Weight minimal_ktype_search(const GroupSpec& spec, CaseLabel c, long k, long bound,
                            std::vector<LatticePoint>* ties) {
  auto points = constituent_ktypes(spec, c, k, bound);
  if (points.empty()) throw std::domain_error("constituent region is empty within the bound");
  bool have = false;
  Rat best;
  LatticePoint best_p;
  std::vector<LatticePoint> best_ties;
  for (const LatticePoint& p : points) {
    Rat norm = vogan_norm(spec, lattice_k_weight(spec, p));
    if (!have || norm < best) {
      have = true;
      best = norm;
      best_p = p;
      best_ties = {p};
    } else if (norm == best) {
      best_ties.push_back(p);
      // lexicographic tie-break on the lattice tuple
      if (p.x < best_p.x || (p.x == best_p.x && p.y < best_p.y)) best_p = p;
    }
  }
  if (ties) *ties = best_ties;
  return lattice_k_weight(spec, best_p);
}

Rat casimir_k_eigenvalue_raw(const GroupSpec& spec, const LatticePoint& p) {
  const long n = spec.n, m = p.x, l = p.y;
  switch (spec.family) {
    case Family::SpinEven:
      return Rat((m + n - 1) * (m + n - 1) - (n - 1) * (n - 1));
    case Family::SU:
      return Rat((m + n - 1) * (m + n - 1) - (n - 1) * (n - 1) + 3 * l * l, 2);
    case Family::Sp:
      return Rat((m + 2 * n - 1) * (m + 2 * n - 1) - (2 * n - 1) * (2 * n - 1) +
                     3 * (l + 1) * (l + 1) - 1,
                 2);
    case Family::F4:
      return Rat((m + 7) * (m + 7), 4) + Rat(3 * (l + 3) * (l + 3), 4) - 19;
    default:
      throw std::domain_error("no Casimir-on-K formula for this family");
  }
}

Rat casimir_k_eigenvalue(const GroupSpec& spec, const LatticePoint& p) {
  return casimir_k_eigenvalue_raw(spec, p) - casimir_k_eigenvalue_raw(spec, {0, 0});
}

namespace {

Int binom(long a, long b) {
  if (b < 0 || a < b) return 0;
  Int r = 1;
  for (long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

Int exact_of(const Rat& r) {
  if (!is_integer(r)) throw std::runtime_error("dimension formula gave a non-integer");
  return rat_num(r);
}

}  // namespace

Int ktype_dim(const GroupSpec& spec, const LatticePoint& p) {
  if (!on_lattice(spec, p)) throw std::domain_error("point is not on the K-type lattice");
  const long n = spec.n, m = p.x, l = p.y;
  switch (spec.family) {
    case Family::SpinEven:
      return binom(m + 2 * n - 1, 2 * n - 1) - binom(m + 2 * n - 3, 2 * n - 1);
    case Family::SU: {
      auto delta = [&](long N) {
        return binom((m - l) / 2 + N - 1, n - 1) * binom((m + l) / 2 + N - 1, n - 1);
      };
      return delta(n) - delta(n - 1);
    }
    case Family::Sp: {
      Int core = binom((m - l) / 2 + 2 * n - 2, 2 * n - 2) * binom((m + l) / 2 + 2 * n - 1, 2 * n - 2) -
                 binom((m - l) / 2 + 2 * n - 3, 2 * n - 2) * binom((m + l) / 2 + 2 * n - 2, 2 * n - 2);
      return exact_of(Rat((l + 1) * (l + 1)) * Rat(core) / Rat(2 * n - 1));
    }
    case Family::F4: {
      auto delta = [&](long pp, long qq) {
        Int r = 1;
        for (long j = 3; j <= 6; ++j) r *= (pp + qq) / 2 + j;
        for (long j = 0; j <= 3; ++j) r *= (pp - qq) / 2 + j;
        return r;
      };
      Rat cq = Rat((l + 1) * (l + 3) * (l + 5)) * Rat((2 * l + 8) * (2 * l + 6) * (2 * l + 4)) /
               (Rat(4096) * Rat(81 * 25 * 7));
      return exact_of(cq * Rat(delta(m + 2, l) - delta(m, l)));
    }
    default:
      throw std::domain_error("no closed dimension formula for this family");
  }
}

namespace {

// Upper x-bound of the ellipse eig(x, y) <= t^2 at y = 0, with slack.
long x_bound_for(const GroupSpec& spec, double t) {
  switch (spec.family) {
    case Family::SpinEven: return static_cast<long>(t + spec.n + 2);
    case Family::SU: return static_cast<long>(std::sqrt(2.0) * t + spec.n + 2);
    case Family::Sp: return static_cast<long>(std::sqrt(2.0) * t + 2 * spec.n + 2);
    case Family::F4: return static_cast<long>(2.0 * t + 10);
    default: return 0;
  }
}

}  // namespace

Int gk_count(const GroupSpec& spec, CaseLabel c, long k, const Rat& t) {
  if (t <= 0) throw std::invalid_argument("gk_count requires t > 0");
  const Rat t2 = t * t;
  const long xb = x_bound_for(spec, to_double(t));
  Int total = 0;
  if (spec.family == Family::SpinEven) {
    for (long m = 0; m <= xb; ++m) {
      if (!in_constituent(spec, c, k, {m, 0})) continue;
      if (casimir_k_eigenvalue(spec, {m, 0}) > t2) break;
      total += ktype_dim(spec, {m, 0});
    }
    return total;
  }
  const long y_lo = (spec.family == Family::SU) ? -xb : 0;
  for (long y = y_lo; y <= xb; ++y)
    for (long x = std::labs(y); x <= xb; ++x) {
      LatticePoint p{x, y};
      if (!on_lattice(spec, p) || !in_constituent(spec, c, k, p)) continue;
      if (casimir_k_eigenvalue(spec, p) > t2) break;  // eig increases with x
      total += ktype_dim(spec, p);
    }
  return total;
}

namespace {

double ktype_dim_f(const GroupSpec& spec, long m, long l) {
  const long n = spec.n;
  auto binf = [](long a, long b) {
    if (b < 0 || a < b) return 0.0;
    double r = 1.0;
    for (long i = 1; i <= b; ++i) r = r * static_cast<double>(a - b + i) / static_cast<double>(i);
    return r;
  };
  switch (spec.family) {
    case Family::SpinEven:
      return binf(m + 2 * n - 1, 2 * n - 1) - binf(m + 2 * n - 3, 2 * n - 1);
    case Family::SU:
      return binf((m - l) / 2 + n - 1, n - 1) * binf((m + l) / 2 + n - 1, n - 1) -
             binf((m - l) / 2 + n - 2, n - 1) * binf((m + l) / 2 + n - 2, n - 1);
    case Family::Sp: {
      double core =
          binf((m - l) / 2 + 2 * n - 2, 2 * n - 2) * binf((m + l) / 2 + 2 * n - 1, 2 * n - 2) -
          binf((m - l) / 2 + 2 * n - 3, 2 * n - 2) * binf((m + l) / 2 + 2 * n - 2, 2 * n - 2);
      return core * static_cast<double>((l + 1) * (l + 1)) / static_cast<double>(2 * n - 1);
    }
    case Family::F4: {
      auto delta = [&](long pp, long qq) {
        double r = 1.0;
        for (long j = 3; j <= 6; ++j) r *= static_cast<double>((pp + qq) / 2 + j);
        for (long j = 0; j <= 3; ++j) r *= static_cast<double>((pp - qq) / 2 + j);
        return r;
      };
      double cq = static_cast<double>((l + 1)) * (l + 3) * (l + 5) * (2 * l + 8) * (2 * l + 6) *
                  (2 * l + 4) / (4096.0 * 81.0 * 25.0 * 7.0);
      return cq * (delta(m + 2, l) - delta(m, l));
    }
    default:
      return 0.0;
  }
}

double eig_f(const GroupSpec& spec, long m, long l) {
  const double n = static_cast<double>(spec.n);
  switch (spec.family) {
    case Family::SpinEven: return (m + n - 1) * (m + n - 1) - (n - 1) * (n - 1);
    case Family::SU: return ((m + n - 1) * (m + n - 1) - (n - 1) * (n - 1) + 3.0 * l * l) / 2;
    case Family::Sp: {
      double raw = ((m + 2 * n - 1) * (m + 2 * n - 1) - (2 * n - 1) * (2 * n - 1) +
                    3.0 * (l + 1) * (l + 1) - 1) / 2;
      return raw - 1.0;  // normalized
    }
    case Family::F4: {
      double raw = (m + 7.0) * (m + 7.0) / 4 + 3.0 * (l + 3.0) * (l + 3.0) / 4 - 19.0;
      return raw;
    }
    default:
      return 0.0;
  }
}

double gk_count_f(const GroupSpec& spec, CaseLabel c, long k, double t) {
  const double t2 = t * t;
  const long xb = x_bound_for(spec, t);
  if (spec.family == Family::SpinEven) {
    double total = 0.0;
    for (long m = 0; m <= xb; ++m) {
      if (!in_constituent(spec, c, k, {m, 0})) continue;
      if (eig_f(spec, m, 0) > t2) break;
      total += ktype_dim_f(spec, m, 0);
    }
    return total;
  }
  const long y_lo = (spec.family == Family::SU) ? -xb : 0;
  std::vector<long> rows;
  for (long y = y_lo; y <= xb; ++y) rows.push_back(y);
  std::vector<double> partial(rows.size(), 0.0);
  parallel_for(rows.size(), [&](size_t i) {
    const long y = rows[i];
    double acc = 0.0;
    for (long x = std::labs(y); x <= xb; ++x) {
      LatticePoint p{x, y};
      if (!on_lattice(spec, p) || !in_constituent(spec, c, k, p)) continue;
      if (eig_f(spec, x, y) > t2) break;
      acc += ktype_dim_f(spec, x, y);
    }
    partial[i] = acc;
  });
  double total = 0.0;
  for (double v : partial) total += v;  // fixed order, deterministic
  return total;
}

}  // namespace

double gk_exponent_estimate(const GroupSpec& spec, CaseLabel c, long k,
                            const std::vector<double>& t_grid) {
  if (t_grid.size() < 4) throw std::invalid_argument("t_grid needs at least 4 points");
  for (size_t i = 0; i + 1 < t_grid.size(); ++i)
    if (!(t_grid[i] > 0) || !(t_grid[i + 1] > t_grid[i]))
      throw std::invalid_argument("t_grid must be positive and increasing");

  std::vector<double> xs, ys;
  const size_t start = t_grid.size() / 2;
  for (size_t i = start; i < t_grid.size(); ++i) {
    double n_t = gk_count_f(spec, c, k, t_grid[i]);
    if (n_t <= 0.0) throw std::domain_error("empty count on the fitting grid");
    xs.push_back(std::log(t_grid[i]));
    ys.push_back(std::log(n_t));
  }
  const size_t n = xs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-12) throw std::domain_error("degenerate t_grid");
  return (n * sxy - sx * sy) / denom;
}

namespace {

Weight delta_eps_from_tuple(const GroupSpec& spec, const RatVec& tuple) {
  // tuple layouts here: (b_0; b_2..b_n) for SU and Sp, (b_1..b_{n-1}) for
  // SpinEven, (b_1,b_2,b_3) for F4.
  MTypeParam s;
  s.spec = spec;
  if (spec.family == Family::Sp) {
    RatVec with_b1;
    with_b1.push_back(tuple[0]);
    with_b1.push_back(Rat(0));
    for (size_t i = 1; i < tuple.size(); ++i) with_b1.push_back(tuple[i]);
    s.tuple = std::move(with_b1);
  } else {
    s.tuple = tuple;
  }
  return m_weight(s);
}

long floor_div(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace

ResidueRepInfo classify(const GroupSpec& spec, const KTypeParam& tau, long k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (spec.family == Family::SpinOdd)
    throw NotApplicableError("Spin(2n+1,1) has no resonances; nothing to classify");
  TauParams tp = tau_params(spec, tau);
  GroupConstants gc = group_constants(spec);
  const long n = spec.n;

  ResidueRepInfo info;
  info.spec = spec;
  info.k = k;
  info.pole_v = gc.rho_alpha + k;
  info.boundary_policy = policy_string(spec);

  auto finite_case = [&](CaseLabel label) {
    info.case_label = label;
    info.minimal_ktype = zero_weight(spec, Algebra::k);
    size_t dlen = 0;
    switch (spec.family) {
      case Family::SpinEven: dlen = static_cast<size_t>(n - 1); break;
      case Family::SU:
      case Family::Sp: dlen = static_cast<size_t>(n); break;
      case Family::F4: dlen = 3; break;
      default: break;
    }
    info.delta_tuple.assign(dlen, Rat(0));
    info.delta_eps = zero_weight(spec, Algebra::m);
    info.nu_is_imaginary_marker = true;
    info.nu_alpha = info.pole_v;
    info.unitary = (k == 0);
    info.finite_dim = true;
    info.gk_dim = 0;
    info.orbit = orbit_by_label(spec, OrbitLabel::zero);
  };

  switch (spec.family) {
    case Family::SpinEven: {
      if (tp.N >= k + 1) {
        info.case_label = CaseLabel::spin_infinite;
        info.minimal_ktype = lattice_k_weight(spec, {k + 1, 0});
        info.delta_tuple.assign(static_cast<size_t>(n - 1), Rat(0));
        info.delta_tuple[0] = k + 1;  // harmonics of degree k+1 on R^{2n-1}
        info.delta_eps = delta_eps_from_tuple(spec, info.delta_tuple);
        info.nu_alpha = Rat(2 * n - 3, 2);
        info.nu_pm = true;
        info.unitary = true;
        info.gk_dim = 2 * n - 1;
        info.orbit = orbit_by_label(spec, OrbitLabel::long_root);
      } else {
        finite_case(CaseLabel::spin_finite);
      }
      break;
    }
    case Family::SU: {
      const LatticePoint pt{tp.M1 + tp.M2, tp.M2 - tp.M1};
      if (in_constituent(spec, CaseLabel::east, k, pt)) {
        info.case_label = CaseLabel::east;
        info.minimal_ktype = lattice_k_weight(spec, {2 * k + 2, 0});
        info.unitary = true;
        info.gk_dim = 2 * n - 1;
        info.orbit = orbit_by_label(spec, OrbitLabel::half_root);
        if (n == 2) {
          info.discrete_series = true;
          info.blattner = info.minimal_ktype;
          info.hc_param = Weight{{Rat(k + 1), Rat(-k), Rat(-1)}, Algebra::g};
        } else {
          info.delta_tuple.assign(static_cast<size_t>(n), Rat(0));
          info.delta_tuple[1] = k + 1;           // b_2
          info.delta_tuple[n - 1] = -(k + 1);    // b_n
          info.delta_eps = delta_eps_from_tuple(spec, info.delta_tuple);
          info.nu_alpha = Rat(n - 2, 2);
          info.nu_pm = true;
        }
      } else if (in_constituent(spec, CaseLabel::north, k, pt) ||
                 in_constituent(spec, CaseLabel::south, k, pt)) {
        const bool north = in_constituent(spec, CaseLabel::north, k, pt);
        info.case_label = north ? CaseLabel::north : CaseLabel::south;
        long m1, m2;
        if (k + 1 <= n - 1) {
          m1 = 0;
          m2 = k + 1;
        } else {
          m1 = floor_div(k + 2 - n, 2);
          m2 = k + 1;
        }
        if (!north) std::swap(m1, m2);
        info.minimal_ktype = lattice_k_weight(spec, {m1 + m2, m2 - m1});
        info.delta_tuple.assign(static_cast<size_t>(n), Rat(0));
        if (north) {
          info.delta_tuple[0] = Rat(k + 1, 2);        // b_0
          info.delta_tuple[n - 1] = -(k + 1);         // b_n
        } else {
          info.delta_tuple[0] = Rat(-(k + 1), 2);
          info.delta_tuple[1] = k + 1;                // b_2
        }
        info.delta_eps = delta_eps_from_tuple(spec, info.delta_tuple);
        info.nu_alpha = Rat(k + n - 1, 2);
        info.nu_pm = true;
        info.unitary = false;
        info.gk_dim = n;
        info.orbit = orbit_by_label(spec, north ? OrbitLabel::n2 : OrbitLabel::n1);
      } else {
        finite_case(CaseLabel::west);
      }
      break;
    }
    case Family::Sp: {
      const LatticePoint pt{tp.t1 + tp.t2, tp.tn1};
      if (in_constituent(spec, CaseLabel::east, k, pt)) {
        info.case_label = CaseLabel::east;
        info.minimal_ktype = lattice_k_weight(spec, {2 * k + 4, 0});
        info.delta_tuple.assign(static_cast<size_t>(n), Rat(0));
        if (n >= 3) {
          info.delta_tuple[1] = k + 2;  // b_2
          info.delta_tuple[2] = k + 2;  // b_3
          info.nu_alpha = Rat(2 * n - 3, 2);
        } else {
          // sp(n-1) = sp(1) has a single slot, so the generic
          // (k+2,k+2,0,...) shape needs n >= 3.  The top M-type of the
          // minimal K-type is ((k+2)/2; k+2), and the infinitesimal-character
          // match then forces nu = +-(k+1)/2.
          info.delta_tuple[0] = Rat(k + 2, 2);  // b_0
          info.delta_tuple[1] = k + 2;          // b_2
          info.nu_alpha = Rat(k + 1, 2);
        }
        info.delta_eps = delta_eps_from_tuple(spec, info.delta_tuple);
        info.nu_pm = true;
        info.unitary = false;
        info.gk_dim = 4 * n - 1;
        info.orbit = orbit_by_label(spec, OrbitLabel::half_root);
      } else if (in_constituent(spec, CaseLabel::north, k, pt)) {
        info.case_label = CaseLabel::north;
        info.minimal_ktype = lattice_k_weight(spec, {k + 1, k + 1});
        info.unitary = true;
        info.gk_dim = 2 * n + 1;
        info.orbit = orbit_by_label(spec, OrbitLabel::long_root);
        if (k >= 2 * n - 3) {
          info.discrete_series = true;
          info.blattner = info.minimal_ktype;
          Weight hc = zero_weight(spec, Algebra::g);
          hc.coords[0] = k + n;
          for (long i = 2; i <= n; ++i) hc.coords[static_cast<size_t>(i - 1)] = 2 * (n - i + 1);
          hc.coords[static_cast<size_t>(n)] = k + 3 - n;
          info.hc_param = hc;
        } else {
          info.delta_tuple.assign(static_cast<size_t>(n), Rat(0));
          info.delta_tuple[0] = Rat(k + 1, 2);  // b_0
          info.delta_tuple[1] = k + 1;          // b_2
          info.delta_eps = delta_eps_from_tuple(spec, info.delta_tuple);
          // +-(k/2+n): the only choice passing the infinitesimal-character
          // match for every k (the k-independent alternative fails at k >= 1).
          info.nu_alpha = Rat(k + 2 * n, 2);
          info.nu_pm = true;
        }
      } else {
        finite_case(CaseLabel::west);
      }
      break;
    }
    case Family::F4: {
      const LatticePoint pt{tp.a, tp.b};
      if (in_constituent(spec, CaseLabel::east, k, pt)) {
        info.case_label = CaseLabel::east;
        info.minimal_ktype = lattice_k_weight(spec, {2 * k + 8, 0});
        info.delta_tuple.assign(3, Rat(k + 4, 2));
        info.delta_eps = delta_eps_from_tuple(spec, info.delta_tuple);
        info.delta_triality = {Rat(3 * (k + 4), 4), Rat(k + 4, 4), Rat(k + 4, 4), Rat(k + 4, 4)};
        info.nu_alpha = Rat(k + 1, 2);
        info.nu_pm = true;
        info.unitary = false;
        info.gk_dim = 15;
        info.orbit = orbit_by_label(spec, OrbitLabel::half_root);
      } else if (in_constituent(spec, CaseLabel::north, k, pt)) {
        info.case_label = CaseLabel::north;
        info.minimal_ktype =
            lattice_k_weight(spec, {floor_div(3 * k + 5, 2), k / 2});
        info.delta_tuple.assign(3, Rat(k + 1, 2));
        info.delta_eps = delta_eps_from_tuple(spec, info.delta_tuple);
        info.delta_triality = {Rat(3 * (k + 1), 4), Rat(k + 1, 4), Rat(k + 1, 4), Rat(k + 1, 4)};
        info.nu_alpha = Rat(k + 10, 2);
        info.nu_pm = false;
        info.unitary = true;
        info.gk_dim = 11;
        info.orbit = orbit_by_label(spec, OrbitLabel::long_root);
      } else {
        finite_case(CaseLabel::west);
      }
      break;
    }
    default:
      break;
  }
  return info;
}

bool verify_langlands(const GroupSpec& spec, const ResidueRepInfo& info, long k) {
  if (info.discrete_series)
    throw std::domain_error("verify_langlands is not defined for discrete series entries");
  GroupConstants gc = group_constants(spec);
  Weight rho_m = rho_of(spec, Algebra::m);
  Weight alpha = alpha_weight(spec);
  const Rat v = gc.rho_alpha + k;

  auto chi = [&](const RatVec& mu_eps, const Rat& nu_coeff) {
    RatVec out(mu_eps.size());
    for (size_t i = 0; i < out.size(); ++i)
      out[i] = nu_coeff * alpha.coords[i] + mu_eps[i] + rho_m.coords[i];
    return Weight{out, Algebra::g};
  };

  Weight chi_std = chi(zero_weight(spec, Algebra::m).coords, v);
  if (info.nu_is_imaginary_marker) {
    // delta = triv, nu = i lambda_k: identical parameters by construction.
    Weight chi_d = chi(info.delta_eps.coords, info.nu_alpha);
    return weyl_orbit_equal(spec, chi_std, chi_d);
  }
  Weight chi_plus = chi(info.delta_eps.coords, info.nu_alpha);
  if (weyl_orbit_equal(spec, chi_std, chi_plus)) return true;
  Weight chi_minus = chi(info.delta_eps.coords, -info.nu_alpha);
  return weyl_orbit_equal(spec, chi_std, chi_minus);
}

}  // namespace resatlas
