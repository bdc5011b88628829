#ifndef HOPFIND_INTERVALS_HPP
#define HOPFIND_INTERVALS_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include <mpfr.h>

#include "hopfind/cyclo.hpp"
#include "hopfind/errors.hpp"
#include "hopfind/numutil.hpp"

namespace hopfind {

inline constexpr long kPrecisionCap = 4096;
inline constexpr long kMinPrecision = 32;

/// RAII wrapper for a single mpfr value.
class Mpfr {
public:
  explicit Mpfr(long prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Mpfr(const Mpfr& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Mpfr(Mpfr&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Mpfr& operator=(Mpfr o) {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Mpfr() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
  mpfr_t v_;
};

/// Closed real interval [lo, hi] with outward rounding at fixed precision.
class RealInterval {
public:
  explicit RealInterval(long prec = 64) : prec_(prec), lo_(prec), hi_(prec) {}

  static RealInterval from_rat(const Rat& r, long prec) {
    RealInterval x(prec);
    mpfr_set_q(x.lo_.get(), r.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(x.hi_.get(), r.get_mpq_t(), MPFR_RNDU);
    return x;
  }
  static RealInterval from_long(long v, long prec) { return from_rat(Rat(v), prec); }

  long prec() const { return prec_; }
  mpfr_srcptr lo() const { return lo_.get(); }
  mpfr_srcptr hi() const { return hi_.get(); }
  double lo_d() const { return lo_.to_double(); }
  double hi_d() const { return hi_.to_double(); }

  bool valid() const { return mpfr_cmp(lo_.get(), hi_.get()) <= 0; }
  bool contains_zero() const {
    return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
  }
  bool strictly_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool strictly_negative() const { return mpfr_sgn(hi_.get()) < 0; }
  bool contains(const Rat& r) const {
    return mpfr_cmp_q(lo_.get(), r.get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_.get(), r.get_mpq_t()) >= 0;
  }
  bool contains(const RealInterval& o) const {
    return mpfr_cmp(lo_.get(), o.lo_.get()) <= 0 && mpfr_cmp(hi_.get(), o.hi_.get()) >= 0;
  }

  double width() const {
    Mpfr w(prec_);
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return w.to_double();
  }

  RealInterval operator+(const RealInterval& o) const {
    RealInterval r(prec_);
    mpfr_add(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    return r;
  }
  RealInterval operator-(const RealInterval& o) const {
    RealInterval r(prec_);
    mpfr_sub(r.lo_.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
    return r;
  }
  RealInterval operator-() const {
    RealInterval r(prec_);
    mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
    return r;
  }
  RealInterval operator*(const RealInterval& o) const {
    RealInterval r(prec_);
    Mpfr t(prec_), best_lo(prec_), best_hi(prec_);
    bool first = true;
    mpfr_srcptr a[2] = {lo_.get(), hi_.get()};
    mpfr_srcptr b[2] = {o.lo_.get(), o.hi_.get()};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        mpfr_mul(t.get(), a[i], b[j], MPFR_RNDD);
        if (first || mpfr_cmp(t.get(), best_lo.get()) < 0) mpfr_set(best_lo.get(), t.get(), MPFR_RNDD);
        mpfr_mul(t.get(), a[i], b[j], MPFR_RNDU);
        if (first || mpfr_cmp(t.get(), best_hi.get()) > 0) mpfr_set(best_hi.get(), t.get(), MPFR_RNDU);
        first = false;
      }
    mpfr_set(r.lo_.get(), best_lo.get(), MPFR_RNDD);
    mpfr_set(r.hi_.get(), best_hi.get(), MPFR_RNDU);
    return r;
  }

  RealInterval square() const {
    RealInterval r = (*this) * (*this);
    if (contains_zero() && mpfr_sgn(r.lo_.get()) < 0) mpfr_set_zero(r.lo_.get(), 1);
    return r;
  }

  RealInterval hull(const RealInterval& o) const {
    RealInterval r(prec_);
    mpfr_min(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_max(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    return r;
  }

  void set_bounds(mpfr_srcptr lo, mpfr_srcptr hi) {
    mpfr_set(lo_.get(), lo, MPFR_RNDD);
    mpfr_set(hi_.get(), hi, MPFR_RNDU);
  }

private:
  long prec_;
  Mpfr lo_, hi_;
};

namespace detail {

// enclosure of pi at the given precision
inline RealInterval pi_interval(long prec) {
  RealInterval r(prec);
  Mpfr lo(prec), hi(prec);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  r.set_bounds(lo.get(), hi.get());
  return r;
}

// Enclosure of cos (want_cos) or sin over the interval x.  Evaluates at the
// endpoints with directed rounding and widens to +-1 when a critical point
// may fall inside.
inline RealInterval trig_interval(const RealInterval& x, bool want_cos) {
  long prec = x.prec();
  Mpfr c1(prec), c2(prec), c3(prec), c4(prec);
  if (want_cos) {
    mpfr_cos(c1.get(), x.lo(), MPFR_RNDD);
    mpfr_cos(c2.get(), x.lo(), MPFR_RNDU);
    mpfr_cos(c3.get(), x.hi(), MPFR_RNDD);
    mpfr_cos(c4.get(), x.hi(), MPFR_RNDU);
  } else {
    mpfr_sin(c1.get(), x.lo(), MPFR_RNDD);
    mpfr_sin(c2.get(), x.lo(), MPFR_RNDU);
    mpfr_sin(c3.get(), x.hi(), MPFR_RNDD);
    mpfr_sin(c4.get(), x.hi(), MPFR_RNDU);
  }
  RealInterval r(prec);
  Mpfr lo(prec), hi(prec);
  mpfr_min(lo.get(), c1.get(), c3.get(), MPFR_RNDD);
  mpfr_max(hi.get(), c2.get(), c4.get(), MPFR_RNDU);

  // critical points: cos at k*pi, sin at pi/2 + k*pi
  RealInterval pi = pi_interval(prec);
  Mpfr t_lo(prec), t_hi(prec), half(prec);
  mpfr_set_d(half.get(), want_cos ? 0.0 : 0.5, MPFR_RNDN);
  // t = x/pi - shift, conservative outward bounds
  mpfr_div(t_lo.get(), x.lo(), pi.hi(), MPFR_RNDD);
  mpfr_sub(t_lo.get(), t_lo.get(), half.get(), MPFR_RNDD);
  mpfr_div(t_hi.get(), x.hi(), pi.lo(), MPFR_RNDU);
  mpfr_sub(t_hi.get(), t_hi.get(), half.get(), MPFR_RNDU);
  long k_lo = static_cast<long>(std::ceil(mpfr_get_d(t_lo.get(), MPFR_RNDD) - 1e-9));
  long k_hi = static_cast<long>(std::floor(mpfr_get_d(t_hi.get(), MPFR_RNDU) + 1e-9));
  for (long k = k_lo; k <= k_hi; ++k) {
    // extremum value is (-1)^k for cos at k*pi, (-1)^k for sin at pi/2+k*pi
    if (imod(k, 2) == 0) mpfr_set_si(hi.get(), 1, MPFR_RNDU);
    else mpfr_set_si(lo.get(), -1, MPFR_RNDD);
  }
  // clamp to [-1, 1]
  if (mpfr_cmp_si(lo.get(), -1) < 0) mpfr_set_si(lo.get(), -1, MPFR_RNDD);
  if (mpfr_cmp_si(hi.get(), 1) > 0) mpfr_set_si(hi.get(), 1, MPFR_RNDU);
  r.set_bounds(lo.get(), hi.get());
  return r;
}

} // namespace detail

struct ComplexInterval {
  RealInterval re, im;

  ComplexInterval(long prec = 64) : re(prec), im(prec) {}
  ComplexInterval(RealInterval r, RealInterval i) : re(std::move(r)), im(std::move(i)) {}

  ComplexInterval operator+(const ComplexInterval& o) const {
    return {re + o.re, im + o.im};
  }
  ComplexInterval operator*(const ComplexInterval& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  RealInterval abs_square() const { return re.square() + im.square(); }
  double width() const { return std::max(re.width(), im.width()); }
};

/// Enclosure of the angle 2*pi*num/den (den > 0).
inline RealInterval angle_interval(long num, long den, long prec) {
  RealInterval two_pi = detail::pi_interval(prec) + detail::pi_interval(prec);
  return two_pi * RealInterval::from_rat(Rat(num, den), prec);
}

/// Enclosure of exp(2*pi*i*num/den) on the unit circle.
inline ComplexInterval unit_circle_point(long num, long den, long prec) {
  RealInterval a = angle_interval(num, den, prec);
  return {detail::trig_interval(a, true), detail::trig_interval(a, false)};
}

/// Rigorous enclosure of the image of a under zeta_N -> exp(2*pi*i/N).
inline ComplexInterval complex_embed(const CycNum& a, long precision_bits) {
  if (precision_bits < kMinPrecision)
    throw domain_error("complex_embed: precision below minimum");
  long N = a.conductor();
  ComplexInterval acc(precision_bits);
  acc.re = RealInterval::from_rat(Rat(0), precision_bits);
  acc.im = RealInterval::from_rat(Rat(0), precision_bits);
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    const Rat& c = a.coeffs()[i];
    if (c == 0) continue;
    ComplexInterval term = (i == 0)
        ? ComplexInterval{RealInterval::from_rat(Rat(1), precision_bits),
                          RealInterval::from_rat(Rat(0), precision_bits)}
        : unit_circle_point(static_cast<long>(i), N, precision_bits);
    RealInterval cc = RealInterval::from_rat(c, precision_bits);
    acc.re = acc.re + term.re * cc;
    acc.im = acc.im + term.im * cc;
  }
  return acc;
}

/// Decides |a| < |b|, |a| > |b| (returns -1 / +1) by interval refinement.
/// Exact equality is detected algebraically via a*conj(a) == b*conj(b)
/// (returns 0); otherwise refinement continues up to the precision cap.
inline int compare_moduli(const CycNum& a, const CycNum& b) {
  CycNum na = a * conj(a), nb = b * conj(b);
  if (na == nb) return 0;
  CycNum diff = na - nb; // real cyclotomic number, nonzero
  for (long prec = 64; prec <= kPrecisionCap; prec *= 2) {
    RealInterval d = complex_embed(diff, prec).re;
    if (d.strictly_negative()) return -1;
    if (d.strictly_positive()) return 1;
  }
  throw resource_error("compare_moduli: undecidable at precision cap");
}

/// Interval evaluation of an integer polynomial (ascending coefficients) at
/// a complex box, by Horner's rule.
inline ComplexInterval eval_poly_box(const std::vector<Int>& coeffs, const ComplexInterval& z,
                                     long prec) {
  ComplexInterval acc(prec);
  acc.re = RealInterval::from_rat(Rat(0), prec);
  acc.im = RealInterval::from_rat(Rat(0), prec);
  for (long i = static_cast<long>(coeffs.size()) - 1; i >= 0; --i) {
    acc = acc * z;
    RealInterval c = RealInterval::from_rat(Rat(coeffs[i]), prec);
    acc.re = acc.re + c;
  }
  return acc;
}

/// Certifies that the integer polynomial p has no root on the circle
/// |x| = radius, by covering the circle with arc boxes and excluding zero
/// from every interval image.  Throws resource_error at the precision cap.
inline void certify_no_roots_on_circle(const std::vector<Int>& p, long radius) {
  struct Arc { long num, den; };
  for (long prec = 128; prec <= kPrecisionCap; prec *= 2) {
    std::vector<Arc> work;
    long initial = 64;
    for (long j = 0; j < initial; ++j) work.push_back({j, initial});
    bool failed = false;
    long budget = 100000;
    RealInterval rad = RealInterval::from_long(radius, prec);
    while (!work.empty() && budget-- > 0) {
      Arc arc = work.back();
      work.pop_back();
      RealInterval theta = angle_interval(arc.num, arc.den, prec)
          .hull(angle_interval(arc.num + 1, arc.den, prec));
      ComplexInterval z{detail::trig_interval(theta, true) * rad,
                        detail::trig_interval(theta, false) * rad};
      if (!eval_poly_box(p, z, prec).contains_zero()) continue;
      if (arc.den >= (1L << 24)) {
        failed = true;
        break;
      }
      work.push_back({2 * arc.num, 2 * arc.den});
      work.push_back({2 * arc.num + 1, 2 * arc.den});
    }
    if (!failed && work.empty()) return;
  }
  throw resource_error("certify_no_roots_on_circle: undecidable at precision cap");
}

} // namespace hopfind

#endif
