#include "resatlas/liealg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace resatlas {

std::string family_name(Family f) {
  switch (f) {
    case Family::SpinEven: return "spin-even";
    case Family::SpinOdd: return "spin-odd";
    case Family::SU: return "su";
    case Family::Sp: return "sp";
    case Family::F4: return "f4";
  }
  return "?";
}

Family family_parse(const std::string& name) {
  if (name == "spin-even") return Family::SpinEven;
  if (name == "spin-odd") return Family::SpinOdd;
  if (name == "su") return Family::SU;
  if (name == "sp") return Family::Sp;
  if (name == "f4") return Family::F4;
  throw std::invalid_argument("unknown group family: " + name);
}

std::string algebra_name(Algebra a) {
  switch (a) {
    case Algebra::g: return "g";
    case Algebra::k: return "k";
    case Algebra::k1: return "k1";
    case Algebra::m: return "m";
  }
  return "?";
}

void validate(const GroupSpec& spec) {
  if (spec.family == Family::F4) return;
  if (spec.n < 2)
    throw std::invalid_argument("rank parameter n must be >= 2 for " +
                                family_name(spec.family));
}

long h_rank(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::SpinEven: return spec.n;
    case Family::SpinOdd: return spec.n + 1;
    case Family::SU: return spec.n + 1;
    case Family::Sp: return spec.n + 1;
    case Family::F4: return 4;
  }
  return 0;
}

GroupConstants group_constants(const GroupSpec& spec) {
  validate(spec);
  GroupConstants c;
  switch (spec.family) {
    case Family::SpinEven:
      c.m_half = 0;
      c.m_long = 2 * spec.n - 1;
      break;
    case Family::SpinOdd:
      c.m_half = 0;
      c.m_long = 2 * spec.n;
      c.pole_free = true;
      break;
    case Family::SU:
      c.m_half = 2 * spec.n - 2;
      c.m_long = 1;
      break;
    case Family::Sp:
      c.m_half = 4 * spec.n - 4;
      c.m_long = 3;
      break;
    case Family::F4:
      c.m_half = 8;
      c.m_long = 7;
      break;
  }
  c.rho_alpha = Rat(2 * c.m_long + c.m_half, 4);
  c.m_sup = Rat(c.m_half + c.m_long - 1, 2);
  c.alpha_norm_sq = Rat(2, c.m_half + 4 * c.m_long);
  return c;
}

Weight zero_weight(const GroupSpec& spec, Algebra a) {
  return Weight{RatVec(static_cast<size_t>(h_rank(spec)), Rat(0)), a};
}

namespace {

RatVec unit(long dim, long i, Rat v = Rat(1)) {
  RatVec e(static_cast<size_t>(dim), Rat(0));
  e[static_cast<size_t>(i)] = std::move(v);
  return e;
}

void push_root(std::vector<Weight>& out, Algebra a, RatVec v) {
  out.push_back(Weight{std::move(v), a});
}

// D-type roots {+-e_i +- e_j} on coordinates [lo, hi) of a dim-long vector.
void d_positive(std::vector<Weight>& out, Algebra a, long dim, long lo, long hi) {
  for (long i = lo; i < hi; ++i)
    for (long j = i + 1; j < hi; ++j) {
      RatVec v = unit(dim, i);
      v[static_cast<size_t>(j)] = 1;
      push_root(out, a, v);
      v[static_cast<size_t>(j)] = -1;
      push_root(out, a, std::move(v));
    }
}

void b_short_positive(std::vector<Weight>& out, Algebra a, long dim, long lo, long hi) {
  for (long i = lo; i < hi; ++i) push_root(out, a, unit(dim, i));
}

void c_long_positive(std::vector<Weight>& out, Algebra a, long dim, long lo, long hi) {
  for (long i = lo; i < hi; ++i) push_root(out, a, unit(dim, i, Rat(2)));
}

void a_positive(std::vector<Weight>& out, Algebra a, long dim, long lo, long hi) {
  for (long i = lo; i < hi; ++i)
    for (long j = i + 1; j < hi; ++j) {
      RatVec v = unit(dim, i);
      v[static_cast<size_t>(j)] = -1;
      push_root(out, a, std::move(v));
    }
}

RatVec diff_root(long dim, long i, long j) {
  RatVec v = unit(dim, i);
  v[static_cast<size_t>(j)] = -1;
  return v;
}

RatVec sum_root(long dim, long i, long j) {
  RatVec v = unit(dim, i);
  v[static_cast<size_t>(j)] = 1;
  return v;
}

}  // namespace

RootDatum root_datum(const GroupSpec& spec, Algebra algebra) {
  validate(spec);
  if (algebra == Algebra::k1 && spec.family != Family::F4)
    throw std::invalid_argument("algebra k1 exists only for f4");

  const long dim = h_rank(spec);
  const long n = spec.n;
  RootDatum rd;
  rd.algebra = algebra;
  auto& pos = rd.positive_roots;
  auto& smp = rd.simple_roots;
  auto alg = algebra;

  switch (spec.family) {
    case Family::SpinEven:
      switch (algebra) {
        case Algebra::g:  // so(2n+1,C), type B_n
          d_positive(pos, alg, dim, 0, n);
          b_short_positive(pos, alg, dim, 0, n);
          for (long i = 0; i + 1 < n; ++i) push_root(smp, alg, diff_root(dim, i, i + 1));
          push_root(smp, alg, unit(dim, n - 1));
          break;
        case Algebra::k:  // so(2n,C), type D_n
          d_positive(pos, alg, dim, 0, n);
          for (long i = 0; i + 1 < n; ++i) push_root(smp, alg, diff_root(dim, i, i + 1));
          if (n >= 2) push_root(smp, alg, sum_root(dim, n - 2, n - 1));
          break;
        case Algebra::m:  // so(2n-1,C) on coords 1..n-1
          d_positive(pos, alg, dim, 0, n - 1);
          b_short_positive(pos, alg, dim, 0, n - 1);
          for (long i = 0; i + 2 < n; ++i) push_root(smp, alg, diff_root(dim, i, i + 1));
          if (n >= 2) push_root(smp, alg, unit(dim, n - 2));
          break;
        default: break;
      }
      break;

    case Family::SpinOdd:
      switch (algebra) {
        case Algebra::g:  // so(2n+2,C), type D_{n+1}
          d_positive(pos, alg, dim, 0, n + 1);
          for (long i = 0; i < n; ++i) push_root(smp, alg, diff_root(dim, i, i + 1));
          push_root(smp, alg, sum_root(dim, n - 1, n));
          break;
        case Algebra::k:  // so(2n+1,C) on coords 1..n
          d_positive(pos, alg, dim, 0, n);
          b_short_positive(pos, alg, dim, 0, n);
          for (long i = 0; i + 1 < n; ++i) push_root(smp, alg, diff_root(dim, i, i + 1));
          push_root(smp, alg, unit(dim, n - 1));
          break;
        case Algebra::m:  // so(2n,C) on coords 1..n
          d_positive(pos, alg, dim, 0, n);
          for (long i = 0; i + 1 < n; ++i) push_root(smp, alg, diff_root(dim, i, i + 1));
          if (n >= 2) push_root(smp, alg, sum_root(dim, n - 2, n - 1));
          break;
        default: break;
      }
      break;

    case Family::SU:
      switch (algebra) {
        case Algebra::g:  // sl(n+1,C), type A_n
          a_positive(pos, alg, dim, 0, n + 1);
          for (long i = 0; i < n; ++i) push_root(smp, alg, diff_root(dim, i, i + 1));
          break;
        case Algebra::k:  // sl(n,C) on coords 1..n
          a_positive(pos, alg, dim, 0, n);
          for (long i = 0; i + 1 < n; ++i) push_root(smp, alg, diff_root(dim, i, i + 1));
          break;
        case Algebra::m:  // sl(n-1,C) on coords 2..n
          a_positive(pos, alg, dim, 1, n);
          for (long i = 1; i + 1 < n; ++i) push_root(smp, alg, diff_root(dim, i, i + 1));
          break;
        default: break;
      }
      break;

    case Family::Sp:
      switch (algebra) {
        case Algebra::g:  // sp(n+1,C), type C_{n+1}
          d_positive(pos, alg, dim, 0, n + 1);
          c_long_positive(pos, alg, dim, 0, n + 1);
          for (long i = 0; i < n; ++i) push_root(smp, alg, diff_root(dim, i, i + 1));
          push_root(smp, alg, unit(dim, n, Rat(2)));
          break;
        case Algebra::k:  // sp(n,C) on 1..n plus sp(1) on coord n+1
          d_positive(pos, alg, dim, 0, n);
          c_long_positive(pos, alg, dim, 0, n);
          c_long_positive(pos, alg, dim, n, n + 1);
          for (long i = 0; i + 1 < n; ++i) push_root(smp, alg, diff_root(dim, i, i + 1));
          push_root(smp, alg, unit(dim, n - 1, Rat(2)));
          push_root(smp, alg, unit(dim, n, Rat(2)));
          break;
        case Algebra::m:  // sp(1) on e1-e2 plus sp(n-1,C) on coords 3..n+1
          push_root(pos, alg, diff_root(dim, 0, 1));
          d_positive(pos, alg, dim, 2, n + 1);
          c_long_positive(pos, alg, dim, 2, n + 1);
          push_root(smp, alg, diff_root(dim, 0, 1));
          for (long i = 2; i < n; ++i) push_root(smp, alg, diff_root(dim, i, i + 1));
          if (n >= 2) push_root(smp, alg, unit(dim, n, Rat(2)));
          break;
        default: break;
      }
      break;

    case Family::F4:
      switch (algebra) {
        case Algebra::g: {  // 48 roots
          d_positive(pos, alg, dim, 0, 4);
          b_short_positive(pos, alg, dim, 0, 4);
          for (int s2 = -1; s2 <= 1; s2 += 2)
            for (int s3 = -1; s3 <= 1; s3 += 2)
              for (int s4 = -1; s4 <= 1; s4 += 2) {
                RatVec v{Rat(1, 2), Rat(s2, 2), Rat(s3, 2), Rat(s4, 2)};
                push_root(pos, alg, std::move(v));
              }
          push_root(smp, alg, diff_root(dim, 1, 2));
          push_root(smp, alg, diff_root(dim, 2, 3));
          push_root(smp, alg, unit(dim, 3));
          push_root(smp, alg, RatVec{Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)});
          break;
        }
        case Algebra::k:  // so(9,C), type B_4
          d_positive(pos, alg, dim, 0, 4);
          b_short_positive(pos, alg, dim, 0, 4);
          for (long i = 0; i < 3; ++i) push_root(smp, alg, diff_root(dim, i, i + 1));
          push_root(smp, alg, unit(dim, 3));
          break;
        case Algebra::k1:  // so(8,C), type D_4
          d_positive(pos, alg, dim, 0, 4);
          for (long i = 0; i < 3; ++i) push_root(smp, alg, diff_root(dim, i, i + 1));
          push_root(smp, alg, sum_root(dim, 2, 3));
          break;
        case Algebra::m:  // so(7,C) on coords 2..4
          d_positive(pos, alg, dim, 1, 4);
          b_short_positive(pos, alg, dim, 1, 4);
          push_root(smp, alg, diff_root(dim, 1, 2));
          push_root(smp, alg, diff_root(dim, 2, 3));
          push_root(smp, alg, unit(dim, 3));
          break;
      }
      break;
  }

  rd.roots = rd.positive_roots;
  for (const Weight& w : rd.positive_roots) {
    RatVec neg(w.coords.size());
    for (size_t i = 0; i < w.coords.size(); ++i) neg[i] = -w.coords[i];
    rd.roots.push_back(Weight{std::move(neg), algebra});
  }
  return rd;
}

std::vector<RatVec> killing_gram(const GroupSpec& spec) {
  validate(spec);
  const long dim = h_rank(spec);
  const size_t d = static_cast<size_t>(dim);

  if (spec.family == Family::SU) {
    // Killing matrix 2(n+1)(I - J/(n+1)) is singular; the dual form on the
    // trace-zero subspace is the pseudo-inverse.
    std::vector<RatVec> g(d, RatVec(d));
    const Rat den(2 * (spec.n + 1));
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j)
        g[i][j] = ((i == j ? Rat(1) : Rat(0)) - Rat(1, spec.n + 1)) / den;
    return g;
  }

  std::vector<RatVec> killing(d, RatVec(d, Rat(0)));
  for (const Weight& r : root_datum(spec, Algebra::g).roots)
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) killing[i][j] += r.coords[i] * r.coords[j];

  // Gauss-Jordan inverse, exact.
  std::vector<RatVec> aug(d, RatVec(2 * d, Rat(0)));
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) aug[i][j] = killing[i][j];
    aug[i][d + i] = 1;
  }
  for (size_t col = 0; col < d; ++col) {
    size_t piv = col;
    while (piv < d && aug[piv][col] == 0) ++piv;
    if (piv == d) throw std::runtime_error("killing form is singular");
    std::swap(aug[piv], aug[col]);
    Rat inv = Rat(1) / aug[col][col];
    for (size_t j = 0; j < 2 * d; ++j) aug[col][j] *= inv;
    for (size_t i = 0; i < d; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      Rat f = aug[i][col];
      for (size_t j = 0; j < 2 * d; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  std::vector<RatVec> g(d, RatVec(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) g[i][j] = aug[i][d + j];
  return g;
}

std::vector<RatVec> killing_gram(const GroupSpec& spec, Algebra) {
  return killing_gram(spec);
}

Rat inner(const GroupSpec& spec, const RatVec& v1, const RatVec& v2) {
  const size_t d = static_cast<size_t>(h_rank(spec));
  if (v1.size() != d || v2.size() != d)
    throw std::invalid_argument("weight has wrong coordinate count for this group");
  static std::map<std::pair<int, long>, std::vector<RatVec>> cache;
  static std::mutex mtx;
  const std::pair<int, long> key{static_cast<int>(spec.family), spec.n};
  const std::vector<RatVec>* g = nullptr;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, killing_gram(spec)).first;
    g = &it->second;
  }
  Rat s(0);
  for (size_t i = 0; i < d; ++i) {
    if (v1[i] == 0) continue;
    Rat row(0);
    for (size_t j = 0; j < d; ++j) row += (*g)[i][j] * v2[j];
    s += v1[i] * row;
  }
  return s;
}

Rat inner(const GroupSpec& spec, const Weight& w1, const Weight& w2) {
  return inner(spec, w1.coords, w2.coords);
}

RatC inner_c(const GroupSpec& spec, const RatCVec& v1, const RatCVec& v2) {
  // Bilinear (not Hermitian) extension of the real form.
  RatVec re1, im1, re2, im2;
  for (const RatC& z : v1) { re1.push_back(z.re); im1.push_back(z.im); }
  for (const RatC& z : v2) { re2.push_back(z.re); im2.push_back(z.im); }
  Rat rr = inner(spec, re1, re2), ii = inner(spec, im1, im2);
  Rat ri = inner(spec, re1, im2), ir = inner(spec, im1, re2);
  return RatC{rr - ii, ri + ir};
}

Weight rho_of(const GroupSpec& spec, Algebra algebra) {
  RootDatum rd = root_datum(spec, algebra);
  Weight rho = zero_weight(spec, algebra);
  for (const Weight& w : rd.positive_roots)
    for (size_t i = 0; i < rho.coords.size(); ++i) rho.coords[i] += w.coords[i];
  for (Rat& c : rho.coords) c /= 2;
  return rho;
}

Weight alpha_weight(const GroupSpec& spec) {
  validate(spec);
  const long dim = h_rank(spec);
  Weight a = zero_weight(spec, Algebra::g);
  switch (spec.family) {
    case Family::SpinEven: a.coords[static_cast<size_t>(dim - 1)] = 1; break;
    case Family::SpinOdd: a.coords[static_cast<size_t>(dim - 1)] = 1; break;
    case Family::SU:
      a.coords[0] = 1;
      a.coords[static_cast<size_t>(dim - 1)] = -1;
      break;
    case Family::Sp:
      a.coords[0] = 1;
      a.coords[1] = 1;
      break;
    case Family::F4: a.coords[0] = 1; break;
  }
  return a;
}

namespace {

// Cached per (spec, algebra): positive roots paired with <rho, beta>, simple
// roots paired with 2/<beta,beta>.  weyl_dim and is_dominant are the hot
// paths of the branching dimension checks.
struct CachedSystem {
  RootDatum datum;
  Weight rho;
  std::vector<Rat> rho_pairings;
  std::vector<Rat> simple_scale;
};

const CachedSystem& cached_system(const GroupSpec& spec, Algebra algebra) {
  static std::map<std::tuple<int, long, int>, CachedSystem> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_tuple(static_cast<int>(spec.family), spec.n, static_cast<int>(algebra));
  auto it = cache.find(key);
  if (it == cache.end()) {
    CachedSystem cs;
    cs.datum = root_datum(spec, algebra);
    cs.rho = rho_of(spec, algebra);
    for (const Weight& b : cs.datum.positive_roots)
      cs.rho_pairings.push_back(inner(spec, cs.rho, b));
    for (const Weight& b : cs.datum.simple_roots)
      cs.simple_scale.push_back(2 / inner(spec, b, b));
    it = cache.emplace(key, std::move(cs)).first;
  }
  return it->second;
}

}  // namespace

bool is_dominant(const GroupSpec& spec, Algebra algebra, const Weight& mu) {
  const CachedSystem& cs = cached_system(spec, algebra);
  for (size_t i = 0; i < cs.datum.simple_roots.size(); ++i) {
    Rat num = inner(spec, mu, cs.datum.simple_roots[i]);
    if (num < 0) return false;
    if (!is_integer(num * cs.simple_scale[i])) return false;
  }
  return true;
}

Int weyl_dim(const GroupSpec& spec, Algebra algebra, const Weight& mu) {
  if (!is_dominant(spec, algebra, mu))
    throw std::domain_error("weyl_dim requires a dominant integral weight");
  const CachedSystem& cs = cached_system(spec, algebra);
  Rat prod(1);
  for (size_t i = 0; i < cs.datum.positive_roots.size(); ++i) {
    const Rat& denom = cs.rho_pairings[i];
    prod *= (denom + inner(spec, mu, cs.datum.positive_roots[i])) / denom;
  }
  if (!is_integer(prod)) throw std::runtime_error("weyl_dim evaluated to a non-integer");
  return rat_num(prod);
}

Rat vogan_norm(const GroupSpec& spec, const Weight& mu) {
  Weight rho_k = rho_of(spec, Algebra::k);
  RatVec v = mu.coords;
  if (v.size() != rho_k.coords.size())
    throw std::invalid_argument("vogan_norm expects a K-weight in full coordinates");
  for (size_t i = 0; i < v.size(); ++i) v[i] += 2 * rho_k.coords[i];
  return inner(spec, v, v);
}

RatC casimir_scalar(const GroupSpec& spec, const Weight& sigma_weight,
                    const RatC& lambda_alpha, CasimirConvention convention) {
  if (sigma_weight.algebra != Algebra::m)
    throw std::invalid_argument("casimir_scalar expects an M-weight");
  GroupConstants gc = group_constants(spec);
  Weight rho_m = rho_of(spec, Algebra::m);
  RatVec musig = sigma_weight.coords;
  for (size_t i = 0; i < musig.size(); ++i) musig[i] += rho_m.coords[i];
  Rat mu_term = inner(spec, musig, musig);
  RatC lam2 = lambda_alpha * lambda_alpha * gc.alpha_norm_sq;
  Rat rho2 = gc.rho_alpha * gc.rho_alpha * gc.alpha_norm_sq;
  RatC val = RatC{mu_term - rho2} - lam2;
  if (convention == CasimirConvention::harish_chandra)
    val.re -= inner(spec, rho_m, rho_m);
  return val;
}

namespace {

// Sign canonicalization for +-1 coordinate flips on complex entries.
bool needs_flip(const RatC& z) { return z.re < 0 || (z.re == 0 && z.im < 0); }

bool ratc_less(const RatC& a, const RatC& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

struct SignedCanonical {
  RatCVec sorted;
  long flips = 0;
  bool has_zero = false;
};

SignedCanonical signed_canonical(const RatCVec& v) {
  SignedCanonical c;
  for (const RatC& z : v) {
    if (z.re == 0 && z.im == 0) c.has_zero = true;
    if (needs_flip(z)) {
      c.sorted.push_back(-z);
      ++c.flips;
    } else {
      c.sorted.push_back(z);
    }
  }
  std::sort(c.sorted.begin(), c.sorted.end(), ratc_less);
  return c;
}

std::string matrix_key(const std::vector<RatVec>& m) {
  std::ostringstream os;
  for (const auto& row : m)
    for (const auto& x : row) os << rat_str(x) << ",";
  return os.str();
}

std::vector<RatVec> mat_mul(const std::vector<RatVec>& a, const std::vector<RatVec>& b) {
  const size_t d = a.size();
  std::vector<RatVec> c(d, RatVec(d, Rat(0)));
  for (size_t i = 0; i < d; ++i)
    for (size_t k = 0; k < d; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

}  // namespace

const std::vector<std::vector<RatVec>>& f4_weyl_group() {
  static std::vector<std::vector<RatVec>> group;
  static std::once_flag built;
  std::call_once(built, [] {
    const GroupSpec f4{Family::F4, 0};
    RootDatum rd = root_datum(f4, Algebra::g);
    std::vector<std::vector<RatVec>> gens;
    for (const Weight& b : rd.simple_roots) {
      // Reflection w.r.t. the standard dot product; the Gram matrix is a
      // multiple of the identity for F4, so this is the Weyl action.
      Rat bb(0);
      for (const Rat& x : b.coords) bb += x * x;
      std::vector<RatVec> s(4, RatVec(4, Rat(0)));
      for (size_t i = 0; i < 4; ++i) {
        s[i][i] = 1;
        for (size_t j = 0; j < 4; ++j) s[i][j] -= 2 * b.coords[i] * b.coords[j] / bb;
      }
      gens.push_back(std::move(s));
    }
    std::vector<RatVec> id(4, RatVec(4, Rat(0)));
    for (size_t i = 0; i < 4; ++i) id[i][i] = 1;

    std::map<std::string, size_t> seen;
    std::vector<std::vector<RatVec>> elems{id};
    seen[matrix_key(id)] = 0;
    for (size_t head = 0; head < elems.size(); ++head) {
      for (const auto& g : gens) {
        auto next = mat_mul(g, elems[head]);
        std::string key = matrix_key(next);
        if (!seen.count(key)) {
          seen[key] = elems.size();
          elems.push_back(std::move(next));
        }
      }
    }
    if (elems.size() != 1152)
      throw std::runtime_error("F4 Weyl closure produced " + std::to_string(elems.size()) +
                               " elements, expected 1152");
    group = std::move(elems);
  });
  return group;
}

bool weyl_orbit_equal(const GroupSpec& spec, const RatCVec& chi1, const RatCVec& chi2) {
  validate(spec);
  const size_t d = static_cast<size_t>(h_rank(spec));
  if (chi1.size() != d || chi2.size() != d)
    throw std::invalid_argument("weyl_orbit_equal expects full-rank coordinates");

  switch (spec.family) {
    case Family::SpinEven:
    case Family::Sp: {  // signed permutations
      SignedCanonical a = signed_canonical(chi1), b = signed_canonical(chi2);
      return a.sorted == b.sorted;
    }
    case Family::SpinOdd: {  // signed permutations, even number of flips
      SignedCanonical a = signed_canonical(chi1), b = signed_canonical(chi2);
      if (!(a.sorted == b.sorted)) return false;
      if (a.has_zero || b.has_zero) return true;
      return (a.flips + b.flips) % 2 == 0;
    }
    case Family::SU: {  // permutations on trace-zero representatives
      auto canon = [d](const RatCVec& v) {
        RatC mean;
        for (const RatC& z : v) mean = mean + z;
        Rat inv(1, static_cast<long>(d));
        mean = mean * inv;
        RatCVec out;
        for (const RatC& z : v) out.push_back(z - mean);
        std::sort(out.begin(), out.end(), ratc_less);
        return out;
      };
      return canon(chi1) == canon(chi2);
    }
    case Family::F4: {
      for (const auto& w : f4_weyl_group()) {
        bool match = true;
        for (size_t i = 0; i < 4 && match; ++i) {
          RatC acc;
          for (size_t j = 0; j < 4; ++j) acc = acc + RatC{w[i][j]} * chi1[j];
          if (acc != chi2[i]) match = false;
        }
        if (match) return true;
      }
      return false;
    }
  }
  return false;
}

bool weyl_orbit_equal(const GroupSpec& spec, const Weight& chi1, const Weight& chi2) {
  RatCVec a, b;
  for (const Rat& x : chi1.coords) a.emplace_back(x);
  for (const Rat& x : chi2.coords) b.emplace_back(x);
  return weyl_orbit_equal(spec, a, b);
}

Rat rat_parse(const std::string& s) {
  auto bad = [&] { return std::invalid_argument("cannot parse rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw bad();
    return Rat(num, den);
  } catch (const std::exception&) {
    throw bad();
  }
}

}  // namespace resatlas
