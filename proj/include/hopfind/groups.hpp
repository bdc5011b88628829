#ifndef HOPFIND_GROUPS_HPP
#define HOPFIND_GROUPS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfind/errors.hpp"
#include "hopfind/numutil.hpp"

namespace hopfind {

inline constexpr long kGroupOrderCap = 100000;
inline constexpr long kDenseTableThreshold = 2500;
inline constexpr long kMaxPermDegree = 16;

namespace detail {

// permutations of degree <= 16 packed 4 bits per image, 0-based
using PackedPerm = std::uint64_t;

inline PackedPerm pack_perm(const std::vector<std::uint8_t>& im) {
  PackedPerm p = 0;
  for (size_t i = 0; i < im.size(); ++i) p |= static_cast<PackedPerm>(im[i]) << (4 * i);
  return p;
}

inline std::vector<std::uint8_t> unpack_perm(PackedPerm p, long degree) {
  std::vector<std::uint8_t> im(degree);
  for (long i = 0; i < degree; ++i) im[i] = static_cast<std::uint8_t>((p >> (4 * i)) & 0xF);
  return im;
}

inline PackedPerm identity_perm(long degree) {
  std::vector<std::uint8_t> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return pack_perm(im);
}

// (a o b)(i) = a(b(i))
inline PackedPerm compose_perm(PackedPerm a, PackedPerm b, long degree) {
  PackedPerm r = 0;
  for (long i = 0; i < degree; ++i) {
    std::uint64_t bi = (b >> (4 * i)) & 0xF;
    std::uint64_t abi = (a >> (4 * bi)) & 0xF;
    r |= abi << (4 * i);
  }
  return r;
}

inline PackedPerm invert_perm(PackedPerm a, long degree) {
  PackedPerm r = 0;
  for (long i = 0; i < degree; ++i) {
    std::uint64_t ai = (a >> (4 * i)) & 0xF;
    r |= static_cast<std::uint64_t>(i) << (4 * ai);
  }
  return r;
}

inline std::string cycle_label(PackedPerm p, long degree) {
  std::vector<std::uint8_t> im = unpack_perm(p, degree);
  std::vector<bool> used(degree, false);
  std::ostringstream os;
  bool any = false;
  for (long s = 0; s < degree; ++s) {
    if (used[s] || im[s] == s) continue;
    os << "(";
    long c = s;
    bool first = true;
    while (!used[c]) {
      used[c] = true;
      os << (first ? "" : ",") << (c + 1);
      first = false;
      c = im[c];
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "()";
}

inline bool perm_is_even(PackedPerm p, long degree) {
  std::vector<std::uint8_t> im = unpack_perm(p, degree);
  std::vector<bool> used(degree, false);
  long transpositions = 0;
  for (long s = 0; s < degree; ++s) {
    if (used[s]) continue;
    long len = 0, c = s;
    while (!used[c]) {
      used[c] = true;
      c = im[c];
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

} // namespace detail

/// Finite group.  Small groups hold a dense multiplication table; larger
/// permutation groups hold packed permutations and compose on demand.
/// Both storage modes satisfy the group axioms by construction checks.
class Group {
public:
  long order() const { return order_; }
  long id() const { return id_; }
  long inv(long a) const { return inv_[a]; }

  long mul(long a, long b) const {
    if (!table_.empty()) return table_[a * order_ + b];
    if (opposite_of_) return opposite_of_->mul(b, a);
    detail::PackedPerm p = detail::compose_perm(perms_[a], perms_[b], degree_);
    return index_of_packed(p);
  }

  const std::string& label(long a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_perm_backed() const { return !perms_.empty(); }
  long perm_degree() const { return degree_; }

  // index of a permutation given by 1-based images; perm-constructed groups only
  long index_of_images(const std::vector<long>& images_1based) const {
    if (perms_.empty()) throw unsupported_error("Group: not a permutation group");
    std::vector<std::uint8_t> im(images_1based.size());
    for (size_t i = 0; i < im.size(); ++i) {
      if (images_1based[i] < 1 || images_1based[i] > static_cast<long>(im.size()))
        throw domain_error("Group: bad permutation images");
      im[i] = static_cast<std::uint8_t>(images_1based[i] - 1);
    }
    if (static_cast<long>(im.size()) != degree_)
      throw domain_error("Group: degree mismatch");
    return index_of_packed(detail::pack_perm(im));
  }

  // index of the product of the given cycles (1-based points)
  long index_of_cycles(const std::vector<std::vector<long>>& cycles) const {
    if (perms_.empty()) throw unsupported_error("Group: not a permutation group");
    std::vector<long> im(degree_);
    std::iota(im.begin(), im.end(), 1);
    for (const auto& cyc : cycles)
      for (size_t i = 0; i < cyc.size(); ++i) {
        long from = cyc[i], to = cyc[(i + 1) % cyc.size()];
        if (from < 1 || from > degree_) throw domain_error("Group: bad cycle point");
        im[from - 1] = to;
      }
    return index_of_images(im);
  }

  long element_order(long a) const {
    long o = 1, x = a;
    while (x != id_) {
      x = mul(x, a);
      ++o;
    }
    return o;
  }

  long exponent() const {
    long e = 1;
    for (long g = 0; g < order_; ++g) e = ilcm(e, element_order(g));
    return e;
  }

  long power(long a, long e) const {
    long r = id_;
    long x = a;
    e = imod(e, element_order(a));
    while (e > 0) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }

  bool is_abelian() const {
    if (!gens_.empty()) {
      for (long a : gens_)
        for (long b : gens_)
          if (mul(a, b) != mul(b, a)) return false;
      return true;
    }
    for (long a = 0; a < order_; ++a)
      for (long b = a + 1; b < order_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  const std::vector<long>& generators() const { return gens_; }

  // ---- constructors ----

  /// Dense multiplication table; identity and inverses are discovered and
  /// the group axioms are checked (associativity exhaustively up to order
  /// 300, on seeded random triples beyond).
  static Group from_table(std::vector<std::int32_t> table,
                          std::vector<std::string> labels = {}) {
    Group g;
    long n = 0;
    while (static_cast<long>(table.size()) > n * n) ++n;
    if (static_cast<long>(table.size()) != n * n)
      throw domain_error("Group::from_table: table is not square");
    g.order_ = n;
    g.table_ = std::move(table);
    long id = -1;
    for (long e = 0; e < n && id < 0; ++e) {
      bool ok = true;
      for (long x = 0; x < n && ok; ++x)
        if (g.table_[e * n + x] != x || g.table_[x * n + e] != x) ok = false;
      if (ok) id = e;
    }
    if (id < 0) throw domain_error("Group::from_table: no identity element");
    g.id_ = id;
    g.finish_dense();
    if (n <= 300) {
      for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
          for (long c = 0; c < n; ++c)
            if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
              throw domain_error("Group::from_table: associativity fails");
    } else {
      std::uint64_t state = 0x9E3779B97F4A7C15ull;
      for (long trial = 0; trial < 20000; ++trial) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        long a = static_cast<long>((state >> 33) % n);
        long b = static_cast<long>((state >> 13) % n);
        long c = static_cast<long>(state % n);
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw domain_error("Group::from_table: associativity fails");
      }
    }
    if (labels.empty()) {
      g.labels_.resize(n);
      for (long i = 0; i < n; ++i) g.labels_[i] = "e" + std::to_string(i);
    } else {
      if (static_cast<long>(labels.size()) != n)
        throw domain_error("Group::from_table: label count mismatch");
      g.labels_ = std::move(labels);
    }
    return g;
  }

  static Group cyclic(long n) {
    if (n < 1 || n > kGroupOrderCap) throw resource_error("cyclic: order out of range");
    Group g;
    g.order_ = n;
    g.id_ = 0;
    g.table_.resize(n * n);
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b) g.table_[a * n + b] = static_cast<std::int32_t>((a + b) % n);
    g.finish_dense();
    g.labels_.resize(n);
    for (long a = 0; a < n; ++a)
      g.labels_[a] = a == 0 ? "1" : (a == 1 ? "c" : "c^" + std::to_string(a));
    if (n > 1) g.gens_ = {1};
    return g;
  }

  static Group from_packed_perms(std::vector<detail::PackedPerm> perms, long degree,
                                 std::vector<long> gens_packed_idx = {}) {
    Group g;
    std::sort(perms.begin(), perms.end());
    perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
    g.order_ = static_cast<long>(perms.size());
    g.degree_ = degree;
    g.perms_ = std::move(perms);
    g.index_.reserve(g.perms_.size() * 2);
    for (size_t i = 0; i < g.perms_.size(); ++i)
      g.index_.emplace(g.perms_[i], static_cast<long>(i));
    g.id_ = g.index_of_packed(detail::identity_perm(degree));
    g.inv_.resize(g.order_);
    for (long i = 0; i < g.order_; ++i)
      g.inv_[i] = g.index_of_packed(detail::invert_perm(g.perms_[i], degree));
    g.labels_.resize(g.order_);
    for (long i = 0; i < g.order_; ++i) g.labels_[i] = detail::cycle_label(g.perms_[i], degree);
    if (g.order_ <= kDenseTableThreshold) {
      g.table_.resize(g.order_ * g.order_);
      for (long a = 0; a < g.order_; ++a)
        for (long b = 0; b < g.order_; ++b)
          g.table_[a * g.order_ + b] = static_cast<std::int32_t>(
              g.index_of_packed(detail::compose_perm(g.perms_[a], g.perms_[b], degree)));
    }
    g.gens_ = std::move(gens_packed_idx);
    return g;
  }

  static Group symmetric(long n) {
    if (n < 1 || n > kMaxPermDegree) throw domain_error("symmetric: bad degree");
    std::vector<std::uint8_t> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::vector<detail::PackedPerm> all;
    long fact = 1;
    for (long i = 2; i <= n; ++i) fact *= i;
    if (fact > kGroupOrderCap) throw resource_error("symmetric: order cap exceeded");
    all.reserve(fact);
    do {
      all.push_back(detail::pack_perm(im));
    } while (std::next_permutation(im.begin(), im.end()));
    Group g = from_packed_perms(std::move(all), n);
    if (n >= 2) {
      std::vector<long> gens;
      std::vector<long> cyc(n);
      for (long i = 0; i < n; ++i) cyc[i] = (i + 1) % n + 1;
      gens.push_back(g.index_of_images(cyc));
      std::vector<long> tr(n);
      std::iota(tr.begin(), tr.end(), 1);
      std::swap(tr[0], tr[1]);
      gens.push_back(g.index_of_images(tr));
      g.gens_ = gens;
    }
    return g;
  }

  static Group alternating(long n) {
    if (n < 1 || n > kMaxPermDegree) throw domain_error("alternating: bad degree");
    std::vector<std::uint8_t> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::vector<detail::PackedPerm> all;
    do {
      detail::PackedPerm p = detail::pack_perm(im);
      if (detail::perm_is_even(p, n)) all.push_back(p);
    } while (std::next_permutation(im.begin(), im.end()));
    if (static_cast<long>(all.size()) > kGroupOrderCap)
      throw resource_error("alternating: order cap exceeded");
    Group g = from_packed_perms(std::move(all), n);
    if (n >= 3) {
      g.gens_ = {g.index_of_cycles({{1, 2, 3}})};
      if (n > 3) {
        std::vector<long> cyc(n);
        if (n % 2 == 1) { // n-cycle is even
          for (long i = 0; i < n; ++i) cyc[i] = (i + 1) % n + 1;
        } else { // (n-1)-cycle on points 2..n
          cyc[0] = 1;
          for (long i = 1; i < n; ++i) cyc[i] = (i % (n - 1)) + 2;
        }
        g.gens_.push_back(g.index_of_images(cyc));
      }
    }
    return g;
  }

  static Group from_perm_generators(const std::vector<std::vector<long>>& gens_1based,
                                    long degree) {
    if (degree < 1 || degree > kMaxPermDegree)
      throw domain_error("from_perm_generators: bad degree");
    std::vector<detail::PackedPerm> gens;
    for (const auto& gimg : gens_1based) {
      if (static_cast<long>(gimg.size()) != degree)
        throw domain_error("from_perm_generators: generator degree mismatch");
      std::vector<std::uint8_t> im(degree);
      std::vector<bool> seen(degree, false);
      for (long i = 0; i < degree; ++i) {
        long v = gimg[i];
        if (v < 1 || v > degree || seen[v - 1])
          throw domain_error("from_perm_generators: not a permutation");
        seen[v - 1] = true;
        im[i] = static_cast<std::uint8_t>(v - 1);
      }
      gens.push_back(detail::pack_perm(im));
    }
    // BFS closure
    std::unordered_map<detail::PackedPerm, bool> seen;
    std::vector<detail::PackedPerm> elems{detail::identity_perm(degree)};
    seen[elems[0]] = true;
    for (size_t head = 0; head < elems.size(); ++head) {
      for (detail::PackedPerm s : gens) {
        detail::PackedPerm w = detail::compose_perm(elems[head], s, degree);
        if (!seen[w]) {
          seen[w] = true;
          elems.push_back(w);
          if (static_cast<long>(elems.size()) > kGroupOrderCap)
            throw resource_error("from_perm_generators: closure exceeds order cap");
        }
      }
    }
    Group g = from_packed_perms(std::move(elems), degree);
    std::vector<long> gen_idx;
    for (detail::PackedPerm s : gens) gen_idx.push_back(g.index_of_packed(s));
    g.gens_ = gen_idx;
    return g;
  }

  /// Nonabelian group of order pq: Z_q x| Z_p with
  /// (m,n)(m',n') = (m + a^n m', n + n').  Element (m,n) has index m*p + n.
  static Group semidirect_zq_zp(long q, long p, long a) {
    if (!is_prime(p) || !is_prime(q)) throw domain_error("semidirect_zq_zp: p, q must be prime");
    if ((q - 1) % p != 0) throw domain_error("semidirect_zq_zp: p must divide q-1");
    a = imod(a, q);
    long x = a, ord = 1;
    while (x != 1) {
      x = static_cast<long>((__int128)x * a % q);
      if (++ord > p) break;
    }
    if (ord != p) throw domain_error("semidirect_zq_zp: a does not have order p mod q");
    long n = p * q;
    Group g;
    g.order_ = n;
    g.id_ = 0;
    g.table_.resize(n * n);
    std::vector<long> apow(p);
    apow[0] = 1;
    for (long i = 1; i < p; ++i) apow[i] = static_cast<long>((__int128)apow[i - 1] * a % q);
    for (long m1 = 0; m1 < q; ++m1)
      for (long n1 = 0; n1 < p; ++n1)
        for (long m2 = 0; m2 < q; ++m2)
          for (long n2 = 0; n2 < p; ++n2) {
            long m3 = imod(m1 + apow[n1] * m2, q);
            long n3 = imod(n1 + n2, p);
            g.table_[(m1 * p + n1) * n + (m2 * p + n2)] =
                static_cast<std::int32_t>(m3 * p + n3);
          }
    g.finish_dense();
    g.labels_.resize(n);
    for (long m = 0; m < q; ++m)
      for (long nn = 0; nn < p; ++nn)
        g.labels_[m * p + nn] = "(" + std::to_string(m) + "," + std::to_string(nn) + ")";
    g.gens_ = {1 * p + 0, 0 * p + 1}; // (1,0) and (0,1)
    return g;
  }

  /// Opposite group: mul'(a,b) = mul(b,a).
  static Group opposite(const Group& g) {
    Group o;
    o.order_ = g.order_;
    o.id_ = g.id_;
    o.inv_ = g.inv_;
    o.labels_ = g.labels_;
    o.gens_ = g.gens_;
    if (!g.table_.empty()) {
      o.table_.resize(g.order_ * g.order_);
      for (long a = 0; a < g.order_; ++a)
        for (long b = 0; b < g.order_; ++b) o.table_[a * g.order_ + b] = g.table_[b * g.order_ + a];
    } else {
      // perm-backed opposite: invert all perms (anti-isomorphism trick is not
      // label-preserving, so store a dense-on-demand fallback instead)
      o.opposite_of_ = std::make_shared<Group>(g);
    }
    return o;
  }

  /// Subgroup on the given element indices (must be closed); returns the
  /// subgroup with labels inherited and the embedding sub -> parent.
  static Group subgroup(const Group& g, std::vector<long> elements,
                        std::vector<long>* embedding_out) {
    std::sort(elements.begin(), elements.end());
    std::map<long, long> pos;
    for (size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<long>(i);
    long n = static_cast<long>(elements.size());
    Group s;
    s.order_ = n;
    s.table_.resize(n * n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        long prod = g.mul(elements[i], elements[j]);
        auto it = pos.find(prod);
        if (it == pos.end()) throw domain_error("subgroup: element set not closed");
        s.table_[i * n + j] = static_cast<std::int32_t>(it->second);
      }
    s.id_ = pos.at(g.id());
    s.finish_dense();
    s.labels_.resize(n);
    for (long i = 0; i < n; ++i) s.labels_[i] = g.label(elements[i]);
    if (embedding_out) *embedding_out = elements;
    return s;
  }

  long mul_via_opposite(long a, long b) const { return opposite_of_->mul(b, a); }

private:
  long index_of_packed(detail::PackedPerm p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw domain_error("Group: permutation not in group");
    return it->second;
  }

  void finish_dense() {
    // identity/inverse discovery + associativity spot guarantees come from
    // construction; inverse table built by scan
    inv_.assign(order_, -1);
    for (long a = 0; a < order_; ++a)
      for (long b = 0; b < order_; ++b)
        if (table_[a * order_ + b] == id_) {
          inv_[a] = b;
          break;
        }
    for (long a = 0; a < order_; ++a)
      if (inv_[a] < 0) throw invariant_error("Group: element without inverse");
  }

  long order_ = 0;
  long id_ = 0;
  long degree_ = 0;
  std::vector<std::int32_t> table_;
  std::vector<detail::PackedPerm> perms_;
  std::unordered_map<detail::PackedPerm, long> index_;
  std::vector<long> inv_;
  std::vector<std::string> labels_;
  std::vector<long> gens_;
  std::shared_ptr<Group> opposite_of_;
};

// ---- structural queries ----

inline std::vector<std::vector<long>> conjugacy_classes(const Group& g) {
  std::vector<std::vector<long>> classes;
  std::vector<bool> assigned(g.order(), false);
  for (long a = 0; a < g.order(); ++a) {
    if (assigned[a]) continue;
    std::vector<long> cls;
    std::vector<bool> in_cls(g.order(), false);
    for (long x = 0; x < g.order(); ++x) {
      long c = g.mul(g.mul(x, a), g.inv(x));
      if (!in_cls[c]) {
        in_cls[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    for (long c : cls) assigned[c] = true;
    classes.push_back(std::move(cls));
  }
  return classes;
}

inline std::vector<long> centralizer_elements(const Group& g, long a) {
  std::vector<long> out;
  for (long x = 0; x < g.order(); ++x)
    if (g.mul(x, a) == g.mul(a, x)) out.push_back(x);
  return out;
}

/// Closure of a set of elements under multiplication (subgroup generated).
inline std::vector<long> generated_subgroup(const Group& g, std::vector<long> seed) {
  std::vector<bool> in(g.order(), false);
  std::vector<long> elems{g.id()};
  in[g.id()] = true;
  for (long s : seed)
    if (!in[s]) {
      in[s] = true;
      elems.push_back(s);
    }
  for (size_t head = 0; head < elems.size(); ++head)
    for (long s : seed) {
      long w = g.mul(elems[head], s);
      if (!in[w]) {
        in[w] = true;
        elems.push_back(w);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

/// Commutator subgroup [G,G].  Uses generator commutators plus normal
/// closure when generators are known; otherwise all commutators.
inline std::vector<long> commutator_subgroup(const Group& g) {
  std::vector<long> seeds;
  std::vector<long> gens = g.generators();
  if (gens.empty()) {
    if (g.order() > kDenseTableThreshold)
      throw resource_error("commutator_subgroup: no generators for large group");
    for (long a = 0; a < g.order(); ++a)
      for (long b = 0; b < g.order(); ++b)
        seeds.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    return generated_subgroup(g, seeds);
  }
  for (long a : gens)
    for (long b : gens)
      seeds.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  // normal closure: conjugate the generated subgroup's generators by group
  // generators until stable
  std::vector<long> current = seeds;
  for (;;) {
    std::vector<long> sub = generated_subgroup(g, current);
    std::vector<bool> in(g.order(), false);
    for (long s : sub) in[s] = true;
    bool grew = false;
    std::vector<long> extra;
    for (long s : current)
      for (long x : gens) {
        long c = g.mul(g.mul(x, s), g.inv(x));
        if (!in[c]) {
          extra.push_back(c);
          in[c] = true;
          grew = true;
        }
      }
    if (!grew) return sub;
    for (long e : extra) current.push_back(e);
  }
}

struct QuotientGroup {
  Group group;
  std::vector<long> projection; // parent element -> quotient element index
};

/// Quotient by a normal subgroup given as a sorted element list.
inline QuotientGroup quotient_group(const Group& g, const std::vector<long>& normal) {
  // small generating set of the subgroup, so coset discovery stays cheap
  std::vector<long> gens;
  {
    std::vector<long> span{g.id()};
    for (long s : normal) {
      if (std::binary_search(span.begin(), span.end(), s)) continue;
      gens.push_back(s);
      span = generated_subgroup(g, gens);
      if (span.size() == normal.size()) break;
    }
  }
  // union-find over right multiplication by subgroup generators
  std::vector<long> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<long(long)> find = [&](long x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (long a = 0; a < g.order(); ++a)
    for (long s : gens) {
      long b = g.mul(a, s);
      long ra = find(a), rb = find(b);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  std::map<long, long> coset_id;
  std::vector<long> reps;
  std::vector<long> proj(g.order());
  for (long a = 0; a < g.order(); ++a) {
    long r = find(a);
    auto it = coset_id.find(r);
    if (it == coset_id.end()) {
      it = coset_id.emplace(r, static_cast<long>(reps.size())).first;
      reps.push_back(r);
    }
    proj[a] = it->second;
  }
  long n = static_cast<long>(reps.size());
  std::vector<std::int32_t> table(n * n);
  std::vector<std::string> labels(n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      table[i * n + j] = static_cast<std::int32_t>(proj[g.mul(reps[i], reps[j])]);
  for (long i = 0; i < n; ++i) labels[i] = "[" + g.label(reps[i]) + "]";
  // normality check: the subgroup must project onto the kernel coset
  long kernel_coset = proj[g.id()];
  for (long s : normal)
    if (proj[s] != kernel_coset) throw domain_error("quotient_group: subgroup not normal");
  QuotientGroup q;
  q.group = Group::from_table(std::move(table), std::move(labels));
  q.projection = std::move(proj);
  return q;
}

/// Automorphic action of a group F on a group G.
class GroupAction {
public:
  /// Table constructor; validates the automorphism and action axioms
  /// exhaustively, naming the failing pair.
  static GroupAction from_table(const Group& f, const Group& g,
                                std::vector<std::int32_t> table, bool validate = true) {
    GroupAction a;
    a.actor_ = f;
    a.target_ = g;
    a.table_ = std::move(table);
    if (static_cast<long>(a.table_.size()) != f.order() * g.order())
      throw domain_error("GroupAction: table size mismatch");
    if (validate) a.validate_exhaustive();
    return a;
  }

  /// F cyclic with distinguished generator c (element index 1 of cyclic(n)):
  /// c^i acts by conjugation with tau^i, tau an element of G.  Well-defined
  /// iff tau^|F| acts trivially.
  static GroupAction conjugation_by(const Group& f_cyclic, const Group& g, long tau) {
    long n = f_cyclic.order();
    GroupAction a;
    a.actor_ = f_cyclic;
    a.target_ = g;
    a.table_.resize(n * g.order());
    std::vector<long> tpow(n + 1);
    tpow[0] = g.id();
    for (long i = 1; i <= n; ++i) tpow[i] = g.mul(tpow[i - 1], tau);
    for (long h = 0; h < g.order(); ++h)
      if (g.mul(g.mul(tpow[n], h), g.inv(tpow[n])) != h)
        throw domain_error("conjugation_by: tau^|F| is not central, action ill-defined");
    for (long i = 0; i < n; ++i) {
      // cyclic(n) element i is c^i
      long t = tpow[i], tinv = g.inv(t);
      for (long h = 0; h < g.order(); ++h)
        a.table_[i * g.order() + h] = static_cast<std::int32_t>(g.mul(g.mul(t, h), tinv));
    }
    // conjugation is an automorphism structurally; validate only small cases
    if (g.order() <= kDenseTableThreshold) a.validate_exhaustive();
    return a;
  }

  /// Double case: F acts on G := F^op by x.g = x g x^{-1} (product in F).
  static GroupAction conjugation_self(const Group& f) {
    GroupAction a;
    a.actor_ = f;
    a.target_ = Group::opposite(f);
    a.table_.resize(f.order() * f.order());
    for (long x = 0; x < f.order(); ++x)
      for (long g = 0; g < f.order(); ++g)
        a.table_[x * f.order() + g] = static_cast<std::int32_t>(f.mul(f.mul(x, g), f.inv(x)));
    if (f.order() <= kDenseTableThreshold) a.validate_exhaustive();
    return a;
  }

  const Group& actor() const { return actor_; }
  const Group& target() const { return target_; }
  long act(long x, long g) const { return table_[x * target_.order() + g]; }

  void validate_exhaustive() const {
    const Group& f = actor_;
    const Group& g = target_;
    for (long h = 0; h < g.order(); ++h)
      if (act(f.id(), h) != h)
        throw domain_error("GroupAction: identity acts nontrivially at element " + g.label(h));
    for (long x = 0; x < f.order(); ++x)
      for (long y = 0; y < f.order(); ++y) {
        long xy = f.mul(x, y);
        for (long h = 0; h < g.order(); ++h)
          if (act(xy, h) != act(x, act(y, h)))
            throw domain_error("GroupAction: (xy).g != x.(y.g) at x=" + f.label(x) +
                               " y=" + f.label(y) + " g=" + g.label(h));
      }
    for (long x = 0; x < f.order(); ++x)
      for (long h1 = 0; h1 < g.order(); ++h1)
        for (long h2 = 0; h2 < g.order(); ++h2)
          if (act(x, g.mul(h1, h2)) != g.mul(act(x, h1), act(x, h2)))
            throw domain_error("GroupAction: automorphism axiom fails at x=" + f.label(x) +
                               " g=" + g.label(h1) + " h=" + g.label(h2));
  }

private:
  Group actor_, target_;
  std::vector<std::int32_t> table_;
};

struct Orbit {
  long representative;        // minimal element index
  std::vector<long> elements; // sorted
};

inline std::vector<Orbit> orbits(const GroupAction& a) {
  const Group& f = a.actor();
  const Group& g = a.target();
  std::vector<bool> seen(g.order(), false);
  std::vector<Orbit> out;
  for (long h = 0; h < g.order(); ++h) {
    if (seen[h]) continue;
    std::vector<long> orb;
    for (long x = 0; x < f.order(); ++x) {
      long y = a.act(x, h);
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back({orb.front(), std::move(orb)});
  }
  return out;
}

struct StabilizerData {
  Group subgroup;               // F_g as a stand-alone group
  std::vector<long> embedding;  // subgroup element -> index in F
  std::vector<long> coset_reps; // z_1 = identity first; z_i.g enumerates the orbit
};

inline StabilizerData stabilizer(const GroupAction& a, long g_elem) {
  const Group& f = a.actor();
  std::vector<long> stab;
  for (long x = 0; x < f.order(); ++x)
    if (a.act(x, g_elem) == g_elem) stab.push_back(x);
  StabilizerData out;
  out.subgroup = Group::subgroup(f, stab, &out.embedding);
  // coset representatives, identity first
  std::vector<bool> covered(f.order(), false);
  out.coset_reps.push_back(f.id());
  for (long s : stab) covered[f.mul(f.id(), s)] = true;
  for (long x = 0; x < f.order(); ++x) {
    if (covered[x]) continue;
    out.coset_reps.push_back(x);
    for (long s : stab) covered[f.mul(x, s)] = true;
  }
  long orbit_size = f.order() / static_cast<long>(stab.size());
  if (static_cast<long>(out.coset_reps.size()) != orbit_size)
    throw invariant_error("stabilizer: orbit-stabilizer count mismatch");
  return out;
}

} // namespace hopfind

#endif
