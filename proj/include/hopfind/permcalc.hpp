#ifndef HOPFIND_PERMCALC_HPP
#define HOPFIND_PERMCALC_HPP

#include <algorithm>
#include <ostream>
#include <vector>

#include "hopfind/errors.hpp"
#include "hopfind/numutil.hpp"

namespace hopfind {

/// Permutation of {1,...,n}, stored 1-indexed: images()[j-1] = sigma(j).
/// The degree-1 identity is the unit of the monoid of all permutation
/// groups under the interleaving product below.
class Perm {
public:
  explicit Perm(long degree = 1) : images_(degree) {
    if (degree < 1) throw domain_error("Perm: degree must be >= 1");
    for (long j = 0; j < degree; ++j) images_[j] = j + 1;
  }

  explicit Perm(std::vector<long> images) : images_(std::move(images)) {
    if (images_.empty()) throw domain_error("Perm: degree must be >= 1");
    std::vector<bool> seen(images_.size(), false);
    for (long v : images_) {
      if (v < 1 || v > static_cast<long>(images_.size()) || seen[v - 1])
        throw domain_error("Perm: images are not a bijection");
      seen[v - 1] = true;
    }
  }

  long degree() const { return static_cast<long>(images_.size()); }
  long operator()(long j) const { return images_[j - 1]; } // 1-based
  const std::vector<long>& images() const { return images_; }

  bool is_identity() const {
    for (long j = 1; j <= degree(); ++j)
      if ((*this)(j) != j) return false;
    return true;
  }

  Perm inverse() const {
    std::vector<long> inv(images_.size());
    for (long j = 1; j <= degree(); ++j) inv[(*this)(j) - 1] = j;
    return Perm(inv);
  }

  // composition as maps on {1..n}: (a o b)(j) = a(b(j)); both degrees equal
  Perm compose(const Perm& b) const {
    if (degree() != b.degree()) throw domain_error("Perm::compose: degree mismatch");
    std::vector<long> im(images_.size());
    for (long j = 1; j <= degree(); ++j) im[j - 1] = (*this)(b(j));
    return Perm(im);
  }

  bool operator==(const Perm& o) const { return images_ == o.images_; }
  bool operator!=(const Perm& o) const { return !(*this == o); }

private:
  std::vector<long> images_;
};

inline std::ostream& operator<<(std::ostream& os, const Perm& p) {
  os << "[";
  for (long j = 1; j <= p.degree(); ++j) os << (j > 1 ? "," : "") << p(j);
  return os << "]";
}

/// Finite sequence of positive integers [n1,...,nk]; the empty sequence is
/// the monoid unit (distinct from [1]: [1]*[3] = [3,3]).
class IndexSeq {
public:
  IndexSeq() = default;
  explicit IndexSeq(std::vector<long> entries) : entries_(std::move(entries)) {
    for (long e : entries_)
      if (e < 1) throw domain_error("IndexSeq: entries must be positive");
  }

  const std::vector<long>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  long size() const { return static_cast<long>(entries_.size()); }
  long operator[](long i) const { return entries_[i]; } // 0-based access

  bool operator==(const IndexSeq& o) const { return entries_ == o.entries_; }
  bool operator!=(const IndexSeq& o) const { return !(*this == o); }

private:
  std::vector<long> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const IndexSeq& s) {
  os << "[";
  for (long i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  return os << "]";
}

/// Rank of a multi-index in the lexicographic order on
/// I_{m1} x ... x I_{mk}, as a number in {1,...,prod m_j}:
/// (i1-1)n2 + (i2-1)n3 + ... + ik with n_j = m_j m_{j+1} ... m_k.
inline long lex_rank(const std::vector<long>& dims, const std::vector<long>& index) {
  if (dims.size() != index.size())
    throw domain_error("lex_rank: dims/index length mismatch");
  long rank = 1;
  long suffix = 1;
  for (long j = static_cast<long>(dims.size()) - 1; j >= 0; --j) {
    if (dims[j] < 1) throw domain_error("lex_rank: dims must be positive");
    if (index[j] < 1 || index[j] > dims[j])
      throw domain_error("lex_rank: index component out of range");
    rank += (index[j] - 1) * suffix;
    suffix *= dims[j];
  }
  return rank;
}

inline constexpr long kPermDegreeCap = 1000000;

/// Interleaving product on the union of all permutation groups:
/// for sigma in S_n and tau in S_m, the result lies in S_{mn} and satisfies
/// (sigma*tau)((i-1)n + j) = (sigma(j)-1)m + tau(i) for i <= m, j <= n.
inline Perm perm_product(const Perm& sigma, const Perm& tau) {
  long n = sigma.degree(), m = tau.degree();
  if (n > kPermDegreeCap / m)
    throw domain_error("perm_product: degree cap exceeded");
  std::vector<long> im(m * n);
  for (long i = 1; i <= m; ++i)
    for (long j = 1; j <= n; ++j)
      im[(i - 1) * n + j - 1] = (sigma(j) - 1) * m + tau(i);
  return Perm(im);
}

/// [n1,...,nk] * [m1,...,ml] = [m1 n1, ..., m1 nk, m1, ..., ml].
inline IndexSeq seq_product(const IndexSeq& a, const IndexSeq& b) {
  if (b.empty()) return a;
  std::vector<long> out;
  out.reserve(a.size() + b.size());
  for (long i = 0; i < a.size(); ++i) out.push_back(b[0] * a[i]);
  for (long i = 0; i < b.size(); ++i) out.push_back(b[i]);
  return IndexSeq(out);
}

/// n'_1 = n_1, n'_{i+1} = gcd(n_{i+1}, n'_i); each output entry divides its
/// predecessor.
inline IndexSeq normalize(const IndexSeq& a) {
  std::vector<long> out(a.entries());
  for (long i = 1; i < a.size(); ++i) out[i] = igcd(out[i], out[i - 1]);
  return IndexSeq(out);
}

/// The permutation P(n1,...,nk) in S_{n1} attached to a sequence.  With the
/// normalization n', set m_i = n'_i/n'_{i+1} (m_k = n'_k) and
/// l_i = n_{i+1}/n'_{i+1} (l_k = 1); twist the i-th coordinate by
/// rho_i(j) = l_i(j-1)+1 mod m_i and transport along the lexicographic index
/// maps with reversed factor order on the source side.  The empty sequence
/// maps to the degree-1 identity.
inline Perm sweedler_perm(const IndexSeq& a) {
  if (a.empty()) return Perm(1);
  long k = a.size();
  IndexSeq norm = normalize(a);
  std::vector<long> m(k), l(k);
  for (long i = 0; i + 1 < k; ++i) {
    m[i] = norm[i] / norm[i + 1];
    l[i] = a[i + 1] / norm[i + 1];
  }
  m[k - 1] = norm[k - 1];
  l[k - 1] = 1;

  long n1 = a[0];
  std::vector<long> rev_dims(k), fwd_dims(k);
  for (long i = 0; i < k; ++i) {
    rev_dims[i] = m[k - 1 - i]; // (m_k, ..., m_1)
    fwd_dims[i] = m[i];         // (m_1, ..., m_k)
  }

  std::vector<long> images(n1);
  std::vector<long> tuple(k, 1); // (i_1, ..., i_k), i_j in I_{m_j}
  for (;;) {
    std::vector<long> rev_tuple(k), twisted(k);
    for (long i = 0; i < k; ++i) rev_tuple[i] = tuple[k - 1 - i];
    for (long i = 0; i < k; ++i)
      twisted[i] = imod(l[i] * (tuple[i] - 1), m[i]) + 1;
    long src = lex_rank(rev_dims, rev_tuple);
    long dst = lex_rank(fwd_dims, twisted);
    images[src - 1] = dst;

    long pos = k - 1;
    while (pos >= 0 && tuple[pos] == m[pos]) tuple[pos--] = 1;
    if (pos < 0) break;
    ++tuple[pos];
  }
  return Perm(images);
}

inline Perm sweedler_perm_mk(long m, long k) {
  if (m < 1 || k < 1) throw domain_error("sweedler_perm_mk: need positive m, k");
  return sweedler_perm(IndexSeq({m, k}));
}

} // namespace hopfind

#endif
