#include "resatlas/branching.hpp"

#include <algorithm>
#include <map>

namespace resatlas {

namespace {

bool integral_differences(const RatVec& v) {
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (!is_integer(v[i] - v[i + 1])) return false;
  return true;
}

bool all_integers(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return is_integer(x); });
}

bool half_integral(const RatVec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rat& x) { return is_integer(x) || is_half_odd(x); });
}

}  // namespace

void validate(const KTypeParam& tau) {
  validate(tau.spec);
  const long n = tau.spec.n;
  const RatVec& a = tau.a;
  auto fail = [&](const std::string& why) {
    throw std::domain_error("invalid K-type for " + family_name(tau.spec.family) + ": " + why);
  };

  switch (tau.spec.family) {
    case Family::SpinEven:
    case Family::SpinOdd:
      if (static_cast<long>(a.size()) != n) fail("expected " + std::to_string(n) + " coordinates");
      if (!half_integral(a) || !integral_differences(a)) fail("coordinates must be all integers or all half-integers");
      for (long i = 0; i + 2 < n; ++i)
        if (a[i] < a[i + 1]) fail("coordinates must be non-increasing");
      if (n >= 2 && a[n - 2] < rat_abs(a[n - 1])) fail("a_{n-1} >= |a_n| required");
      if (tau.spec.family == Family::SpinOdd && a[n - 1] < 0) fail("a_n >= 0 required");
      break;
    case Family::SU:
      if (static_cast<long>(a.size()) != n + 1) fail("expected " + std::to_string(n + 1) + " coordinates");
      if (!all_integers(a)) fail("coordinates must be integers");
      for (long i = 0; i + 1 < n; ++i)
        if (a[i] < a[i + 1]) fail("a_1 >= ... >= a_n required");
      break;
    case Family::Sp:
      if (static_cast<long>(a.size()) != n + 1) fail("expected " + std::to_string(n + 1) + " coordinates");
      if (!all_integers(a)) fail("coordinates must be integers");
      for (long i = 0; i + 1 < n; ++i)
        if (a[i] < a[i + 1]) fail("a_1 >= ... >= a_n required");
      if (a[n - 1] < 0) fail("a_n >= 0 required");
      if (a[n] < 0) fail("a_{n+1} >= 0 required");
      break;
    case Family::F4:
      if (a.size() != 4) fail("expected 4 coordinates");
      if (!half_integral(a) || !integral_differences(a)) fail("coordinates must be all integers or all half-integers");
      for (size_t i = 0; i + 1 < 4; ++i)
        if (a[i] < a[i + 1]) fail("coordinates must be non-increasing");
      if (a[3] < 0) fail("a_4 >= 0 required");
      break;
  }
}

Weight k_weight(const KTypeParam& tau) {
  validate(tau);
  Weight w = zero_weight(tau.spec, Algebra::k);
  for (size_t i = 0; i < tau.a.size(); ++i) w.coords[i] = tau.a[i];
  return w;
}

bool MTypeParam::is_trivial() const {
  switch (spec.family) {
    case Family::SU: {
      // Entries (b_0; b_2..b_n) all equal <=> weight proportional to the
      // trace, which the sl(n+1) gauge kills.
      for (size_t i = 1; i < tuple.size(); ++i)
        if (tuple[i] != tuple[0]) return false;
      return true;
    }
    case Family::Sp: {
      if (tuple[0] != 0) return false;  // b_0
      for (size_t i = 2; i < tuple.size(); ++i)
        if (tuple[i] != 0) return false;
      return true;  // b_1 is path data only
    }
    default:
      return std::all_of(tuple.begin(), tuple.end(), [](const Rat& x) { return x == 0; });
  }
}

Weight m_weight(const MTypeParam& sigma) {
  const GroupSpec& spec = sigma.spec;
  Weight w = zero_weight(spec, Algebra::m);
  const RatVec& t = sigma.tuple;
  switch (spec.family) {
    case Family::SpinEven:
    case Family::SpinOdd:
      for (size_t i = 0; i < t.size(); ++i) w.coords[i] = t[i];
      break;
    case Family::SU:
      w.coords.front() = t[0];
      w.coords.back() = t[0];
      for (size_t i = 1; i < t.size(); ++i) w.coords[i] = t[i];
      break;
    case Family::Sp:
      w.coords[0] = t[0];
      w.coords[1] = -t[0];
      for (size_t i = 2; i < t.size(); ++i) w.coords[i] = t[i];
      break;
    case Family::F4:
      for (size_t i = 0; i < 3; ++i) w.coords[i + 1] = t[i];
      break;
  }
  return w;
}

Int m_dim(const MTypeParam& sigma) {
  return weyl_dim(sigma.spec, Algebra::m, m_weight(sigma));
}

namespace {

// Enumerates v in [lo, hi] with unit steps; empty when lo > hi.
template <typename F>
void unit_range(const Rat& lo, const Rat& hi, F&& f) {
  for (Rat v = lo; v <= hi; v += 1) f(v);
}

std::vector<MTypeParam> mhat_interlace_spin(const GroupSpec& spec, const RatVec& a,
                                            bool last_signed) {
  // b_i in [a_{i+1}, a_i] except the last slot, which interlaces against
  // |a_last| (SpinEven) or runs over [-a_last, a_last] (SpinOdd).
  const size_t nb = a.size() - (last_signed ? 0 : 1);
  std::vector<MTypeParam> out;
  RatVec b(nb);
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == nb) {
      out.push_back(MTypeParam{spec, b, 1, 1, false});
      return;
    }
    Rat lo, hi;
    if (last_signed && i == nb - 1) {
      lo = -a[i];
      hi = a[i];
    } else if (!last_signed && i == nb - 1) {
      lo = rat_abs(a[i + 1]);
      hi = a[i];
    } else {
      lo = a[i + 1];
      hi = a[i];
    }
    unit_range(lo, hi, [&](const Rat& v) {
      b[i] = v;
      self(self, i + 1);
    });
  };
  rec(rec, 0);
  return out;
}

std::vector<MTypeParam> mhat_su(const GroupSpec& spec, const RatVec& a) {
  const long n = spec.n;
  Rat suma(0);
  for (const Rat& x : a) suma += x;
  std::vector<MTypeParam> out;
  RatVec b(static_cast<size_t>(n));  // (b_0; b_2..b_n)
  auto rec = [&](auto&& self, long j) -> void {
    if (j > n) {
      Rat sumb(0);
      for (size_t i = 1; i < b.size(); ++i) sumb += b[i];
      b[0] = (suma - sumb) / 2;
      out.push_back(MTypeParam{spec, b, 1, 1, false});
      return;
    }
    unit_range(a[static_cast<size_t>(j - 1)], a[static_cast<size_t>(j - 2)], [&](const Rat& v) {
      b[static_cast<size_t>(j - 1)] = v;
      self(self, j + 1);
    });
  };
  rec(rec, 2);
  return out;
}

std::vector<MTypeParam> mhat_sp(const GroupSpec& spec, const RatVec& a) {
  const long n = spec.n;
  const long an1 = to_long(a[static_cast<size_t>(n)]);

  // Step 1: Sp(n) -> Sp(n-1) x Sp(1).  Signed count over doubly interlaced
  // patterns (a/c, c/d); the Sp(1) label b_1 = sum(a) - 2 sum(c) + sum(d)
  // with sl(2) reflection t -> -(t+2) cancelling overshoots.
  std::map<std::pair<long, std::vector<long>>, long> net;
  std::vector<long> av(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) av[static_cast<size_t>(i)] = to_long(a[static_cast<size_t>(i)]);

  std::vector<long> c(static_cast<size_t>(n)), d(static_cast<size_t>(n - 1));
  long suma = 0;
  for (long x : av) suma += x;

  auto rec_d = [&](auto&& self, long i, long sumc, long sumd) -> void {
    if (i == n - 1) {
      long braw = suma - 2 * sumc + sumd;
      if (braw >= 0)
        net[{braw, d}] += 1;
      else if (braw <= -2)
        net[{-braw - 2, d}] -= 1;
      return;
    }
    for (long v = c[static_cast<size_t>(i + 1)]; v <= c[static_cast<size_t>(i)]; ++v) {
      d[static_cast<size_t>(i)] = v;
      self(self, i + 1, sumc, sumd + v);
    }
  };
  auto rec_c = [&](auto&& self, long i, long sumc) -> void {
    if (i == n) {
      rec_d(rec_d, 0, sumc, 0);
      return;
    }
    long lo = (i + 1 < n) ? av[static_cast<size_t>(i + 1)] : 0;
    for (long v = lo; v <= av[static_cast<size_t>(i)]; ++v) {
      c[static_cast<size_t>(i)] = v;
      self(self, i + 1, sumc + v);
    }
  };
  rec_c(rec_c, 0, 0);

  // Step 2: Clebsch-Gordan of the K-side Sp(1) label against b_1.
  std::vector<MTypeParam> out;
  for (const auto& [key, mult] : net) {
    if (mult == 0) continue;
    if (mult < 0)
      throw std::runtime_error("negative Sp branching multiplicity; interlacing rule violated");
    const auto& [b1, dv] = key;
    for (long j = 0; j <= std::min(an1, b1); ++j) {
      RatVec tuple;
      tuple.push_back(Rat(an1 + b1 - 2 * j, 2));  // b_0
      tuple.push_back(Rat(b1));
      for (long x : dv) tuple.push_back(Rat(x));
      out.push_back(MTypeParam{spec, std::move(tuple), mult, mult, mult > 1});
    }
  }
  return out;
}

std::vector<MTypeParam> mhat_f4(const GroupSpec& spec, const RatVec& a) {
  // Spin(9) -> Spin(8), then the triality automorphism phi, then
  // Spin(8) -> Spin(7).  Multiplicity = number of intermediate c patterns.
  std::map<RatVec, long> counts;
  RatVec c(4), b(3);
  auto rec_b = [&](auto&& self, const RatVec& dd, size_t i) -> void {
    if (i == 3) {
      counts[b] += 1;
      return;
    }
    Rat lo = (i == 2) ? rat_abs(dd[3]) : dd[i + 1];
    unit_range(lo, dd[i], [&](const Rat& v) {
      b[i] = v;
      self(self, dd, i + 1);
    });
  };
  auto process_c = [&]() {
    RatVec d{(c[0] + c[1] + c[2] - c[3]) / 2, (c[0] + c[1] - c[2] + c[3]) / 2,
             (c[0] - c[1] + c[2] + c[3]) / 2, (-c[0] + c[1] + c[2] + c[3]) / 2};
    rec_b(rec_b, d, 0);
  };
  auto rec_c = [&](auto&& self, size_t i) -> void {
    if (i == 4) {
      process_c();
      return;
    }
    Rat lo = (i == 3) ? Rat(-a[3]) : a[i + 1];
    unit_range(lo, a[i], [&](const Rat& v) {
      c[i] = v;
      self(self, i + 1);
    });
  };
  rec_c(rec_c, 0);

  std::vector<MTypeParam> out;
  for (const auto& [tuple, mult] : counts)
    out.push_back(MTypeParam{spec, tuple, mult, mult, false});
  return out;
}

}  // namespace

std::vector<MTypeParam> mhat(const GroupSpec& spec, const KTypeParam& tau) {
  validate(tau);
  std::vector<MTypeParam> out;
  switch (spec.family) {
    case Family::SpinEven: out = mhat_interlace_spin(spec, tau.a, false); break;
    case Family::SpinOdd: out = mhat_interlace_spin(spec, tau.a, true); break;
    case Family::SU: out = mhat_su(spec, tau.a); break;
    case Family::Sp: out = mhat_sp(spec, tau.a); break;
    case Family::F4: out = mhat_f4(spec, tau.a); break;
  }
  std::sort(out.begin(), out.end(),
            [](const MTypeParam& x, const MTypeParam& y) { return x.tuple < y.tuple; });
  return out;
}

bool contains_trivial_m(const GroupSpec& spec, const KTypeParam& tau) {
  auto sigmas = mhat(spec, tau);
  return std::any_of(sigmas.begin(), sigmas.end(),
                     [](const MTypeParam& s) { return s.is_trivial(); });
}

TauParams tau_params(const GroupSpec& spec, const KTypeParam& tau) {
  validate(tau);
  const long n = spec.n;
  const RatVec& a = tau.a;
  TauParams p;
  p.family = spec.family;
  auto reject = [&](const std::string& why) { throw NotApplicableError(why); };

  switch (spec.family) {
    case Family::SpinEven:
    case Family::SpinOdd: {
      for (size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0) reject("tau must have shape (N,0,...,0)");
      if (!is_integer(a[0]) || a[0] < 0) reject("N must be a nonnegative integer");
      p.N = to_long(a[0]);
      break;
    }
    case Family::SU: {
      // Gauge constant c making the middle coordinates vanish.
      Rat c;
      if (n >= 3) {
        c = a[1];
        for (long j = 1; j + 1 < n; ++j)
          if (a[static_cast<size_t>(j)] != c)
            reject("tau must have shape (M1,0,...,0,-M2,-L) up to gauge");
      } else {
        Rat suma(0);
        for (const Rat& x : a) suma += x;
        if (!is_integer(suma / 3)) reject("tau does not contain the trivial M-type");
        c = suma / 3;
        if (c > a[0] || c < a[1]) reject("tau does not contain the trivial M-type");
      }
      p.M1 = to_long(a[0] - c);
      p.M2 = to_long(c - a[static_cast<size_t>(n - 1)]);
      p.L = to_long(c - a[static_cast<size_t>(n)]);
      if ((p.M1 + p.M2 + p.L) % 2 != 0) reject("M1+M2+L must be even");
      if (p.L != p.M1 - p.M2) reject("tau does not contain the trivial M-type");
      break;
    }
    case Family::Sp: {
      for (long j = 2; j < n; ++j)
        if (a[static_cast<size_t>(j)] != 0) reject("tau must have shape (t1,t2,0,...,0,t_{n+1})");
      p.t1 = to_long(a[0]);
      p.t2 = to_long(a[1]);
      p.tn1 = to_long(a[static_cast<size_t>(n)]);
      if ((p.t1 + p.t2 + p.tn1) % 2 != 0) reject("t1+t2+t_{n+1} must be even");
      if (p.tn1 > p.t1 + p.t2) reject("t_{n+1} <= t1+t2 required");
      if (p.tn1 < p.t1 - p.t2) reject("tau does not contain the trivial M-type");
      break;
    }
    case Family::F4: {
      if (!(a[1] == a[2] && a[2] == a[3])) reject("tau must have shape (a/2,b/2,b/2,b/2)");
      p.a = to_long(2 * a[0]);
      p.b = to_long(2 * a[1]);
      if ((p.a - p.b) % 2 != 0) reject("a-b must be even");
      break;
    }
  }
  if (!contains_trivial_m(spec, tau)) reject("tau does not contain the trivial M-type");
  return p;
}

}  // namespace resatlas
