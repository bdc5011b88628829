#ifndef HOPFIND_CYCLO_HPP
#define HOPFIND_CYCLO_HPP

#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hopfind/errors.hpp"
#include "hopfind/numutil.hpp"

namespace hopfind {

inline constexpr long kConductorCap = 10000;

namespace detail {

// Coefficients of the N-th cyclotomic polynomial, ascending degree.
// Divide-out recursion over the divisors of N; cached per conductor.
// The cache tolerates concurrent readers and one-time concurrent fills.
inline const std::vector<Int>& cyclotomic_poly(long N) {
  static std::map<long, std::vector<Int>> cache;
  static std::mutex mtx;
  if (N < 1 || N > kConductorCap) throw domain_error("cyclotomic_poly: conductor out of range");
  std::lock_guard<std::mutex> lock(mtx);

  // divisors() ascends, so each n sees its proper divisors already cached
  for (long n : divisors(N)) {
    if (cache.count(n)) continue;
    // p = x^n - 1, divided by Phi_d for every proper divisor d
    std::vector<Int> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (long d : divisors(n)) {
      if (d == n) continue;
      const std::vector<Int>& q = cache.at(d); // monic
      std::vector<Int> r(p.size() - q.size() + 1, 0);
      for (long i = static_cast<long>(r.size()) - 1; i >= 0; --i) {
        Int c = p[i + q.size() - 1];
        r[i] = c;
        if (c != 0)
          for (size_t j = 0; j < q.size(); ++j) p[i + j] -= c * q[j];
      }
      for (const Int& c : p)
        if (c != 0) throw invariant_error("cyclotomic_poly: non-exact division");
      p = std::move(r);
    }
    cache.emplace(n, std::move(p));
  }
  return cache.at(N);
}

// remainder of a dense rational polynomial modulo the monic Phi_N
inline void reduce_mod_cyclotomic(std::vector<Rat>& poly, long N) {
  const std::vector<Int>& phi = cyclotomic_poly(N);
  long deg_phi = static_cast<long>(phi.size()) - 1;
  for (long i = static_cast<long>(poly.size()) - 1; i >= deg_phi; --i) {
    Rat c = poly[i];
    if (c == 0) continue;
    for (long j = 0; j <= deg_phi; ++j) poly[i - deg_phi + j] -= c * Rat(phi[j]);
  }
  poly.resize(deg_phi);
}

} // namespace detail

/// Exact element of the cyclotomic field Q(zeta_N), held in the power basis
/// {zeta^i : 0 <= i < phi(N)} of Q[x]/Phi_N(x).  The representation is kept
/// fully reduced, so equality is coefficient comparison after joining
/// conductors; conductor reduction is never performed implicitly.
class CycNum {
public:
  CycNum() : conductor_(1), coeffs_(1, Rat(0)) {}
  CycNum(long v) : conductor_(1), coeffs_(1, Rat(v)) {}
  CycNum(const Rat& v) : conductor_(1), coeffs_(1, v) {}

  // from a polynomial in zeta_N of arbitrary degree (reduced on entry)
  CycNum(long conductor, std::vector<Rat> poly) : conductor_(conductor) {
    if (conductor < 1 || conductor > kConductorCap)
      throw domain_error("CycNum: conductor out of range");
    long phi = euler_phi(conductor);
    poly.resize(std::max<size_t>(poly.size(), phi), Rat(0));
    detail::reduce_mod_cyclotomic(poly, conductor);
    for (auto& c : poly) c.canonicalize();
    coeffs_ = std::move(poly);
  }

  static CycNum root(long N, long i) {
    if (N < 1) throw domain_error("cyc_root: conductor must be positive");
    std::vector<Rat> poly(imod(i, N) + 1, Rat(0));
    poly[imod(i, N)] = 1;
    return CycNum(N, std::move(poly));
  }

  long conductor() const { return conductor_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  CycNum at_conductor(long M) const {
    if (M == conductor_) return *this;
    if (M % conductor_ != 0) throw domain_error("CycNum::at_conductor: not a multiple");
    long stride = M / conductor_;
    std::vector<Rat> poly(static_cast<size_t>((coeffs_.size() - 1) * stride + 1), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) poly[i * stride] = coeffs_[i];
    return CycNum(M, std::move(poly));
  }

private:
  long conductor_;
  std::vector<Rat> coeffs_; // length phi(conductor)
};

inline long joint_conductor(const CycNum& a, const CycNum& b) {
  return ilcm(a.conductor(), b.conductor());
}

inline CycNum operator+(const CycNum& a, const CycNum& b) {
  long N = joint_conductor(a, b);
  CycNum x = a.at_conductor(N), y = b.at_conductor(N);
  std::vector<Rat> c(x.coeffs());
  for (size_t i = 0; i < c.size(); ++i) c[i] += y.coeffs()[i];
  return CycNum(N, std::move(c));
}

inline CycNum operator-(const CycNum& a) {
  std::vector<Rat> c(a.coeffs());
  for (auto& v : c) v = -v;
  return CycNum(a.conductor(), std::move(c));
}

inline CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

inline CycNum operator*(const CycNum& a, const CycNum& b) {
  // scalar fast paths keep hot loops cheap
  if (a.conductor() == 1) {
    const Rat& s = a.coeffs()[0];
    if (s == 0) return CycNum();
    std::vector<Rat> c(b.coeffs());
    for (auto& v : c) v *= s;
    return CycNum(b.conductor(), std::move(c));
  }
  if (b.conductor() == 1) return b * a;
  long N = joint_conductor(a, b);
  CycNum x = a.at_conductor(N), y = b.at_conductor(N);
  std::vector<Rat> prod(2 * x.coeffs().size(), Rat(0));
  for (size_t i = 0; i < x.coeffs().size(); ++i) {
    if (x.coeffs()[i] == 0) continue;
    for (size_t j = 0; j < y.coeffs().size(); ++j) {
      if (y.coeffs()[j] == 0) continue;
      prod[i + j] += x.coeffs()[i] * y.coeffs()[j];
    }
  }
  return CycNum(N, std::move(prod));
}

inline CycNum& operator+=(CycNum& a, const CycNum& b) { return a = a + b; }
inline CycNum& operator-=(CycNum& a, const CycNum& b) { return a = a - b; }
inline CycNum& operator*=(CycNum& a, const CycNum& b) { return a = a * b; }

inline bool operator==(const CycNum& a, const CycNum& b) {
  long N = joint_conductor(a, b);
  return a.at_conductor(N).coeffs() == b.at_conductor(N).coeffs();
}
inline bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

// deterministic total order (conductor join, then coefficient lex)
inline int cyc_cmp(const CycNum& a, const CycNum& b) {
  long N = joint_conductor(a, b);
  const auto ca = a.at_conductor(N).coeffs();
  const auto cb = b.at_conductor(N).coeffs();
  for (size_t i = 0; i < ca.size(); ++i) {
    int c = cmp(ca[i], cb[i]);
    if (c != 0) return c;
  }
  return 0;
}
inline bool cyc_less(const CycNum& a, const CycNum& b) { return cyc_cmp(a, b) < 0; }

/// Multiplicative inverse via the extended Euclidean algorithm against the
/// cyclotomic polynomial.
inline CycNum inv(const CycNum& a) {
  if (a.is_zero()) throw domain_error("CycNum inv: division by zero");
  long N = a.conductor();
  if (N == 1) return CycNum(Rat(1) / a.coeffs()[0]);
  const std::vector<Int>& phi_int = detail::cyclotomic_poly(N);
  std::vector<Rat> r0(phi_int.begin(), phi_int.end());
  std::vector<Rat> r1(a.coeffs());
  auto deg = [](const std::vector<Rat>& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
      if (p[i] != 0) return i;
    return -1L;
  };
  std::vector<Rat> s0{Rat(0)}, s1{Rat(1)}; // coefficients of a in r_i
  while (deg(r1) > 0) {
    // divide r0 by r1
    std::vector<Rat> q(std::max<long>(deg(r0) - deg(r1) + 1, 1), Rat(0));
    std::vector<Rat> rem = r0;
    long d1 = deg(r1);
    Rat lead = r1[d1];
    for (long i = deg(rem); i >= d1; --i) {
      if (rem[i] == 0) continue;
      Rat c = rem[i] / lead;
      q[i - d1] = c;
      for (long j = 0; j <= d1; ++j) rem[i - d1 + j] -= c * r1[j];
    }
    // s_{k+1} = s_{k-1} - q s_k
    std::vector<Rat> s2(std::max(s0.size(), q.size() + s1.size()), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    r0 = std::move(r1);
    r1 = std::move(rem);
    r1.resize(std::max(deg(r1) + 1, 1L));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  long d = deg(r1);
  if (d < 0) throw invariant_error("CycNum inv: zero gcd with cyclotomic polynomial");
  Rat c = r1[0];
  std::vector<Rat> out(s1);
  for (auto& v : out) v /= c;
  return CycNum(N, std::move(out));
}

inline CycNum operator/(const CycNum& a, const CycNum& b) { return a * inv(b); }

/// Galois automorphism sigma_k of Q(zeta_N), determined by
/// sigma_k(zeta) = zeta^k; requires gcd(k, N) = 1.
struct GaloisElt {
  long conductor;
  long k;
  GaloisElt(long N, long kk) : conductor(N), k(imod(kk, N == 1 ? 1 : N)) {
    if (N < 1) throw domain_error("GaloisElt: bad conductor");
    if (N == 1) k = 0; // trivial group
    else if (igcd(k, N) != 1) throw domain_error("GaloisElt: k not a unit mod N");
  }
};

inline CycNum galois_apply(const GaloisElt& sigma, const CycNum& a) {
  long N = ilcm(sigma.conductor, a.conductor());
  if (N == 1) return a;
  long k = (sigma.conductor == 1) ? 1 : sigma.k;
  if (N != sigma.conductor) {
    // lift k along the join; it must stay a unit
    if (igcd(k, N) != 1) throw domain_error("galois_apply: k not a unit after conductor join");
  }
  CycNum x = a.at_conductor(N);
  std::vector<Rat> poly(static_cast<size_t>(N), Rat(0));
  for (size_t i = 0; i < x.coeffs().size(); ++i) {
    if (x.coeffs()[i] == 0) continue;
    poly[imod(static_cast<long>(i) * k, N)] += x.coeffs()[i];
  }
  return CycNum(N, std::move(poly));
}

/// complex conjugation = sigma_{-1}
inline CycNum conj(const CycNum& a) {
  if (a.conductor() <= 2) return a;
  return galois_apply(GaloisElt(a.conductor(), a.conductor() - 1), a);
}

inline std::optional<Rat> is_rational(const CycNum& a) {
  for (size_t i = 1; i < a.coeffs().size(); ++i)
    if (a.coeffs()[i] != 0) return std::nullopt;
  return a.coeffs()[0];
}

inline std::optional<Int> is_rational_integer(const CycNum& a) {
  auto r = is_rational(a);
  if (!r) return std::nullopt;
  if (r->get_den() != 1) return std::nullopt;
  return r->get_num();
}

/// Membership in the subfield Q_m: fixed by every sigma_k with k = 1 mod m.
inline bool lies_in_cyclotomic(const CycNum& a, long m) {
  long M = ilcm(a.conductor(), m);
  for (long k = 1; k < M; ++k) {
    if (igcd(k, M) != 1 || k % m != 1 % m) continue;
    if (galois_apply(GaloisElt(M, k), a) != a) return false;
  }
  return true;
}

/// Newton's recurrence: from power sums s_1..s_n to elementary symmetric
/// functions e_1..e_n via j e_j = sum_{i=1}^{j} (-1)^{i-1} e_{j-i} s_i.
inline std::vector<Rat> elementary_from_power_sums(const std::vector<Rat>& s) {
  long n = static_cast<long>(s.size());
  std::vector<Rat> e(n + 1, Rat(0));
  e[0] = 1;
  for (long j = 1; j <= n; ++j) {
    Rat acc(0);
    for (long i = 1; i <= j; ++i) {
      Rat t = e[j - i] * s[i - 1];
      if (i % 2 == 0) acc -= t;
      else acc += t;
    }
    e[j] = acc / j;
  }
  return std::vector<Rat>(e.begin() + 1, e.end());
}

// ---- textual rendering "a0 + a1*z + ..." with "@N" annotation ----

inline std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

inline std::string to_string(const CycNum& a) {
  long N = a.conductor();
  if (N == 1) return rat_to_string(a.coeffs()[0]);
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    const Rat& c = a.coeffs()[i];
    if (c == 0) continue;
    Rat abs_c = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    if (i == 0) {
      os << rat_to_string(abs_c);
    } else {
      if (abs_c != 1) os << rat_to_string(abs_c) << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  os << "@" << N;
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const CycNum& a) {
  return os << to_string(a);
}

/// Parses the rendering produced by to_string; "@N" is optional and
/// defaults to conductor 1.
inline CycNum cyc_parse(const std::string& text) {
  std::string body = text;
  long N = 1;
  if (auto at = text.find('@'); at != std::string::npos) {
    body = text.substr(0, at);
    try {
      N = std::stol(text.substr(at + 1));
    } catch (...) {
      throw parse_error("cyc_parse: bad conductor in '" + text + "'");
    }
    if (N < 1) throw parse_error("cyc_parse: bad conductor");
  }
  std::vector<Rat> poly(static_cast<size_t>(std::max(euler_phi(N), 1L)), Rat(0));
  size_t pos = 0;
  auto skip_ws = [&] { while (pos < body.size() && isspace(body[pos])) ++pos; };
  skip_ws();
  if (pos == body.size()) throw parse_error("cyc_parse: empty value");
  bool any = false;
  while (pos < body.size()) {
    skip_ws();
    long sign = 1;
    if (body[pos] == '+' || body[pos] == '-') {
      if (body[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    } else if (any) {
      throw parse_error("cyc_parse: expected '+' or '-' in '" + text + "'");
    }
    // coefficient
    Rat coeff(1);
    bool have_coeff = false;
    if (pos < body.size() && isdigit(body[pos])) {
      size_t start = pos;
      while (pos < body.size() && isdigit(body[pos])) ++pos;
      std::string num = body.substr(start, pos - start);
      std::string den = "1";
      if (pos < body.size() && body[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < body.size() && isdigit(body[pos])) ++pos;
        den = body.substr(dstart, pos - dstart);
        if (den.empty()) throw parse_error("cyc_parse: bad denominator");
      }
      coeff = Rat(Int(num), Int(den));
      coeff.canonicalize();
      have_coeff = true;
      skip_ws();
      if (pos < body.size() && body[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    long power = 0;
    if (pos < body.size() && body[pos] == 'z') {
      ++pos;
      power = 1;
      if (pos < body.size() && body[pos] == '^') {
        ++pos;
        size_t start = pos;
        while (pos < body.size() && isdigit(body[pos])) ++pos;
        if (start == pos) throw parse_error("cyc_parse: bad exponent");
        power = std::stol(body.substr(start, pos - start));
      }
    } else if (!have_coeff) {
      throw parse_error("cyc_parse: expected term in '" + text + "'");
    }
    if (power >= static_cast<long>(poly.size())) poly.resize(power + 1, Rat(0));
    poly[power] += sign * coeff;
    any = true;
    skip_ws();
  }
  return CycNum(N, std::move(poly));
}

} // namespace hopfind

#endif
