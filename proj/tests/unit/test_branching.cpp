#include <doctest.h>

#include "resatlas/branching.hpp"

using namespace resatlas;

namespace {

KTypeParam make_tau(const GroupSpec& spec, RatVec a) { return KTypeParam{spec, std::move(a)}; }

Int dim_sum(const GroupSpec& spec, const KTypeParam& tau) {
  Int total = 0;
  for (const MTypeParam& s : mhat(spec, tau)) total += Int(s.multiplicity) * m_dim(s);
  return total;
}

// Descending chains top >= v_2 >= ... with unit steps inside one integrality
// class; the last entry may dip to -prev (Spin even/odd last slot handling
// differs) or stay >= 0.
void descending_chains(RatVec& cur, size_t len, const Rat& prev, bool signed_last,
                       std::vector<RatVec>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  const bool last = cur.size() + 1 == len;
  Rat lo = (last && signed_last) ? -prev : Rat(0);
  for (Rat v = prev; v >= lo; v -= 1) {
    cur.push_back(v);
    descending_chains(cur, len, v, signed_last, out);
    cur.pop_back();
  }
}

// All dominant tuples for the family with entries bounded by `c_max`,
// integer class and (where allowed) half-integer class.
std::vector<RatVec> tau_tuples(const GroupSpec& spec, long c_max) {
  std::vector<RatVec> out;
  const long n = spec.n;
  auto run_class = [&](Rat start, size_t len, bool signed_last) {
    for (Rat top = start; top >= 0; top -= 1) {
      RatVec cur{top};
      descending_chains(cur, len, top, signed_last, out);
    }
  };
  switch (spec.family) {
    case Family::SpinEven:
      run_class(Rat(c_max), static_cast<size_t>(n), true);
      run_class(Rat(2 * c_max - 1, 2), static_cast<size_t>(n), true);
      break;
    case Family::SpinOdd:
      run_class(Rat(c_max), static_cast<size_t>(n), false);
      run_class(Rat(2 * c_max - 1, 2), static_cast<size_t>(n), false);
      break;
    case Family::F4:
      run_class(Rat(c_max), 4, false);
      run_class(Rat(2 * c_max - 1, 2), 4, false);
      break;
    case Family::SU: {
      std::vector<RatVec> heads;
      RatVec cur;
      auto rec2 = [&](auto&& self, long depth, long hi) -> void {
        if (depth == n) {
          heads.push_back(cur);
          return;
        }
        for (long v = hi; v >= -c_max; --v) {
          cur.push_back(Rat(v));
          self(self, depth + 1, v);
          cur.pop_back();
        }
      };
      rec2(rec2, 0, c_max);
      for (const RatVec& h : heads)
        for (long last = -c_max; last <= c_max; ++last) {
          RatVec full = h;
          full.push_back(Rat(last));
          out.push_back(std::move(full));
        }
      break;
    }
    case Family::Sp: {
      std::vector<RatVec> heads;
      RatVec cur;
      auto rec2 = [&](auto&& self, long depth, long hi) -> void {
        if (depth == n) {
          heads.push_back(cur);
          return;
        }
        for (long v = hi; v >= 0; --v) {
          cur.push_back(Rat(v));
          self(self, depth + 1, v);
          cur.pop_back();
        }
      };
      rec2(rec2, 0, c_max);
      for (const RatVec& h : heads)
        for (long last = 0; last <= c_max; ++last) {
          RatVec full = h;
          full.push_back(Rat(last));
          out.push_back(std::move(full));
        }
      break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("spin interlacing examples") {
  GroupSpec se2{Family::SpinEven, 2};
  auto ms = mhat(se2, make_tau(se2, {Rat(1), Rat(0)}));
  REQUIRE(ms.size() == 2);
  CHECK(ms[0].tuple == RatVec{Rat(0)});
  CHECK(ms[1].tuple == RatVec{Rat(1)});
  CHECK(ms[0].multiplicity == 1);
  CHECK(ms[1].multiplicity == 1);

  // trivial tau restricts to the trivial M-type alone
  for (Family f : {Family::SpinEven, Family::SpinOdd, Family::SU, Family::Sp, Family::F4}) {
    GroupSpec spec{f, 3};
    size_t len = f == Family::F4 ? 4 : (f == Family::SU || f == Family::Sp) ? 4 : 3;
    auto tv = mhat(spec, make_tau(spec, RatVec(len, Rat(0))));
    REQUIRE(tv.size() == 1);
    CHECK(tv[0].is_trivial());
    CHECK(tv[0].multiplicity == 1);
  }
}

TEST_CASE("su branching forces b0") {
  GroupSpec su2{Family::SU, 2};
  auto ms = mhat(su2, make_tau(su2, {Rat(1), Rat(0), Rat(-1)}));
  REQUIRE(ms.size() == 2);
  CHECK(ms[0].tuple == RatVec{Rat(-1, 2), Rat(1)});
  CHECK(ms[1].tuple == RatVec{Rat(0), Rat(0)});
  CHECK(ms[1].is_trivial());
}

TEST_CASE("f4 vector representation splits as 1 + 8 over Spin(7)") {
  GroupSpec f4{Family::F4, 0};
  auto ms = mhat(f4, make_tau(f4, {Rat(1), Rat(0), Rat(0), Rat(0)}));
  REQUIRE(ms.size() == 2);
  CHECK(ms[0].tuple == RatVec{Rat(0), Rat(0), Rat(0)});
  CHECK(ms[1].tuple == RatVec{Rat(1, 2), Rat(1, 2), Rat(1, 2)});
  CHECK(m_dim(ms[0]) == 1);
  CHECK(m_dim(ms[1]) == 8);
}

TEST_CASE("sp two-step rule on the defining representation") {
  GroupSpec sp2{Family::Sp, 2};
  auto ms = mhat(sp2, make_tau(sp2, {Rat(1), Rat(0), Rat(0)}));
  REQUIRE(ms.size() == 2);
  // (b_0; b_1; b_2) = (0; 0; 1) and (1/2; 1; 0)
  CHECK(ms[0].tuple == RatVec{Rat(0), Rat(0), Rat(1)});
  CHECK(ms[1].tuple == RatVec{Rat(1, 2), Rat(1), Rat(0)});
  CHECK(dim_sum(sp2, make_tau(sp2, {Rat(1), Rat(0), Rat(0)})) == 4);
}

TEST_CASE("restriction preserves dimension across the desk-scale sweep") {
  for (Family f : {Family::SpinEven, Family::SpinOdd, Family::SU, Family::Sp}) {
    for (long n = 2; n <= 3; ++n) {
      GroupSpec spec{f, n};
      for (const RatVec& a : tau_tuples(spec, 2)) {
        KTypeParam tau = make_tau(spec, a);
        CAPTURE(family_name(f));
        CAPTURE(n);
        CHECK(dim_sum(spec, tau) == weyl_dim(spec, Algebra::k, k_weight(tau)));
      }
    }
  }
  GroupSpec f4{Family::F4, 0};
  for (const RatVec& a : tau_tuples(f4, 2)) {
    KTypeParam tau = make_tau(f4, a);
    CHECK(dim_sum(f4, tau) == weyl_dim(f4, Algebra::k, k_weight(tau)));
  }
}

TEST_CASE("spin-even multiplicities are all one") {
  GroupSpec se3{Family::SpinEven, 3};
  for (const RatVec& a : tau_tuples(se3, 2))
    for (const MTypeParam& s : mhat(se3, make_tau(se3, a))) CHECK(s.multiplicity == 1);
}

TEST_CASE("contains_trivial_m") {
  GroupSpec se3{Family::SpinEven, 3};
  for (long N = 0; N <= 4; ++N)
    CHECK(contains_trivial_m(se3, make_tau(se3, {Rat(N), Rat(0), Rat(0)})));
  CHECK_FALSE(contains_trivial_m(se3, make_tau(se3, {Rat(1), Rat(1), Rat(0)})));
}

TEST_CASE("tau_params shapes and rejections") {
  GroupSpec se3{Family::SpinEven, 3};
  CHECK(tau_params(se3, make_tau(se3, {Rat(3), Rat(0), Rat(0)})).N == 3);
  CHECK_THROWS_AS(tau_params(se3, make_tau(se3, {Rat(1), Rat(1), Rat(0)})), NotApplicableError);

  GroupSpec sp3{Family::Sp, 3};
  TauParams sp = tau_params(sp3, make_tau(sp3, {Rat(2), Rat(1), Rat(0), Rat(1)}));
  CHECK(sp.t1 == 2);
  CHECK(sp.t2 == 1);
  CHECK(sp.tn1 == 1);
  // parity violation
  CHECK_THROWS_WITH_AS(
      (void)tau_params(sp3, make_tau(sp3, {Rat(2), Rat(1), Rat(0), Rat(0)})),
      "t1+t2+t_{n+1} must be even", NotApplicableError);

  GroupSpec su4{Family::SU, 4};
  CHECK_THROWS_WITH_AS(
      (void)tau_params(su4, make_tau(su4, {Rat(1), Rat(0), Rat(0), Rat(-1), Rat(-1)})),
      "M1+M2+L must be even", NotApplicableError);
  TauParams su = tau_params(su4, make_tau(su4, {Rat(2), Rat(0), Rat(0), Rat(-1), Rat(-1)}));
  CHECK(su.M1 == 2);
  CHECK(su.M2 == 1);
  CHECK(su.L == 1);

  GroupSpec f4{Family::F4, 0};
  TauParams fp = tau_params(f4, make_tau(f4, {Rat(3), Rat(1), Rat(1), Rat(1)}));
  CHECK(fp.a == 6);
  CHECK(fp.b == 2);
  CHECK_THROWS_AS((void)tau_params(f4, make_tau(f4, {Rat(2), Rat(1), Rat(1), Rat(0)})),
                  NotApplicableError);
}

TEST_CASE("gauge-shifted su tau gives the same parameters") {
  GroupSpec su3{Family::SU, 3};
  // (3,1,0,0) = (2,0,-1,-1) + (1,1,1,1): M1=2, M2=1, L=1
  TauParams p1 = tau_params(su3, make_tau(su3, {Rat(3), Rat(1), Rat(0), Rat(0)}));
  TauParams p2 = tau_params(su3, make_tau(su3, {Rat(2), Rat(0), Rat(-1), Rat(-1)}));
  CHECK(p1.M1 == 2);
  CHECK(p1.M1 == p2.M1);
  CHECK(p1.M2 == p2.M2);
  CHECK(p1.L == p2.L);
}
