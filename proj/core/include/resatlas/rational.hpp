#ifndef RESATLAS_RATIONAL_HPP
#define RESATLAS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace resatlas {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rat(num, den);
}

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

/// True when r lies in Z + 1/2.
inline bool is_half_odd(const Rat& r) { return rat_den(r) == 2; }

inline long to_long(const Rat& r) {
  if (!is_integer(r)) throw std::domain_error("rational is not an integer: " + r.str());
  return static_cast<long>(rat_num(r));
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// Canonical string form: "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rat& r) {
  if (is_integer(r)) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

Rat rat_parse(const std::string& s);

/// Complex number with exact rational real and imaginary parts.
struct RatC {
  Rat re;
  Rat im;

  RatC() = default;
  RatC(Rat r) : re(std::move(r)) {}
  RatC(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_real() const { return im == 0; }
  bool operator==(const RatC& o) const { return re == o.re && im == o.im; }
  bool operator!=(const RatC& o) const { return !(*this == o); }

  RatC operator+(const RatC& o) const { return {re + o.re, im + o.im}; }
  RatC operator-(const RatC& o) const { return {re - o.re, im - o.im}; }
  RatC operator-() const { return {-re, -im}; }
  RatC operator*(const RatC& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  RatC operator*(const Rat& s) const { return {re * s, im * s}; }

  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

inline std::string ratc_str(const RatC& z) {
  if (z.is_real()) return rat_str(z.re);
  return rat_str(z.re) + (z.im < 0 ? "-" : "+") + rat_str(rat_abs(z.im)) + "i";
}

using RatVec = std::vector<Rat>;
using RatCVec = std::vector<RatC>;

}  // namespace resatlas

#endif
