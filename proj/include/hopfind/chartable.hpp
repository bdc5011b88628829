#ifndef HOPFIND_CHARTABLE_HPP
#define HOPFIND_CHARTABLE_HPP

#include <random>

#include "hopfind/cyclo.hpp"
#include "hopfind/groups.hpp"
#include "hopfind/matrix.hpp"

namespace hopfind {

inline constexpr long kCharTableOrderCap = 2000;
inline constexpr unsigned long kDefaultSeed = 24601;

/// Exact character table: rows are irreducible characters with CycNum
/// entries in Q(zeta_e), e the group exponent; columns are conjugacy
/// classes (identity class first, then by minimal element).
struct CharTable {
  Group group;
  std::vector<std::vector<long>> classes;
  std::vector<long> class_of;  // element -> class index
  std::vector<long> reps;      // minimal element of each class
  std::vector<long> inv_class; // class index of the inverse class
  std::vector<std::vector<CycNum>> table;
  std::vector<long> degrees;
  long exponent = 1;
  unsigned long seed = kDefaultSeed;

  long num_classes() const { return static_cast<long>(classes.size()); }
  long num_chars() const { return static_cast<long>(table.size()); }
  const CycNum& value(long row, long element) const { return table[row][class_of[element]]; }
};

namespace detail {

struct ModMatrix {
  long n = 0, p = 1;
  std::vector<long> a;
  ModMatrix() = default;
  ModMatrix(long nn, long pp) : n(nn), p(pp), a(nn * nn, 0) {}
  long& at(long i, long j) { return a[i * n + j]; }
  long at(long i, long j) const { return a[i * n + j]; }
};

// charpoly of a small matrix mod p by Hessenberg reduction
inline std::vector<long> charpoly_mod(ModMatrix m) {
  long n = m.n, p = m.p;
  auto mulm = [&](long x, long y) { return static_cast<long>((__int128)x * y % p); };
  for (long j = 0; j + 2 < n; ++j) {
    long pivot = -1;
    for (long i = j + 1; i < n; ++i)
      if (m.at(i, j) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != j + 1) {
      for (long c = 0; c < n; ++c) std::swap(m.a[pivot * n + c], m.a[(j + 1) * n + c]);
      for (long r = 0; r < n; ++r) std::swap(m.a[r * n + pivot], m.a[r * n + j + 1]);
    }
    long inv_p = modinv(m.at(j + 1, j), p);
    for (long i = j + 2; i < n; ++i) {
      if (m.at(i, j) == 0) continue;
      long f = mulm(m.at(i, j), inv_p);
      for (long c = 0; c < n; ++c) m.at(i, c) = imod(m.at(i, c) - mulm(f, m.at(j + 1, c)), p);
      for (long r = 0; r < n; ++r) m.at(r, j + 1) = imod(m.at(r, j + 1) + mulm(f, m.at(r, i)), p);
    }
  }
  std::vector<std::vector<long>> poly(n + 1);
  poly[0] = {1};
  for (long k = 1; k <= n; ++k) {
    std::vector<long> cur(k + 1, 0);
    for (size_t i = 0; i < poly[k - 1].size(); ++i) {
      cur[i + 1] = imod(cur[i + 1] + poly[k - 1][i], p);
      cur[i] = imod(cur[i] - mulm(m.at(k - 1, k - 1), poly[k - 1][i]), p);
    }
    long subprod = 1;
    for (long i = 1; i < k; ++i) {
      subprod = mulm(subprod, m.at(k - i, k - i - 1));
      if (subprod == 0) break;
      long coeff = mulm(m.at(k - 1 - i, k - 1), subprod);
      if (coeff == 0) continue;
      for (size_t t = 0; t < poly[k - 1 - i].size(); ++t)
        cur[t] = imod(cur[t] - mulm(coeff, poly[k - 1 - i][t]), p);
    }
    poly[k] = std::move(cur);
  }
  return poly[n];
}

// kernel basis of (m - lambda I) mod p
inline std::vector<std::vector<long>> eigen_kernel_mod(ModMatrix m, long lambda) {
  long n = m.n, p = m.p;
  for (long i = 0; i < n; ++i) m.at(i, i) = imod(m.at(i, i) - lambda, p);
  auto mulm = [&](long x, long y) { return static_cast<long>((__int128)x * y % p); };
  std::vector<long> pivot_col;
  long rank = 0;
  for (long col = 0; col < n && rank < n; ++col) {
    long pr = -1;
    for (long i = rank; i < n; ++i)
      if (m.at(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    for (long c = 0; c < n; ++c) std::swap(m.a[pr * n + c], m.a[rank * n + c]);
    long ip = modinv(m.at(rank, col), p);
    for (long c = 0; c < n; ++c) m.at(rank, c) = mulm(m.at(rank, c), ip);
    for (long i = 0; i < n; ++i) {
      if (i == rank || m.at(i, col) == 0) continue;
      long f = m.at(i, col);
      for (long c = 0; c < n; ++c) m.at(i, c) = imod(m.at(i, c) - mulm(f, m.at(rank, c)), p);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(n, false);
  for (long c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<long>> basis;
  for (long fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<long> v(n, 0);
    v[fc] = 1;
    for (long r = 0; r < rank; ++r) v[pivot_col[r]] = imod(-m.at(r, fc), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace detail

/// Dixon's method: split the class algebra over F_p with p = 1 (mod exp G),
/// p > 2 sqrt(|G|), using seeded random combinations of class-sum matrices
/// (deterministic per-matrix refinement as fallback), lift eigenvalues to
/// Q(zeta_e) by discrete logarithm, and verify orthogonality exactly.
inline CharTable character_table(const Group& g, unsigned long seed = kDefaultSeed) {
  if (g.order() > kCharTableOrderCap)
    throw resource_error("character_table: group order above cap");

  CharTable ct;
  ct.group = g;
  ct.seed = seed;
  auto classes = conjugacy_classes(g);
  // identity class first, remainder ordered by minimal element
  std::stable_sort(classes.begin(), classes.end(), [&](const auto& a, const auto& b) {
    bool ia = a.size() == 1 && a[0] == g.id();
    bool ib = b.size() == 1 && b[0] == g.id();
    if (ia != ib) return ia;
    return a.front() < b.front();
  });
  ct.classes = classes;
  long k = static_cast<long>(classes.size());
  ct.class_of.assign(g.order(), -1);
  for (long i = 0; i < k; ++i)
    for (long e : classes[i]) ct.class_of[e] = i;
  ct.reps.resize(k);
  for (long i = 0; i < k; ++i) ct.reps[i] = classes[i].front();
  ct.inv_class.resize(k);
  for (long i = 0; i < k; ++i) ct.inv_class[i] = ct.class_of[g.inv(ct.reps[i])];

  long e = g.exponent();
  ct.exponent = e;

  // least prime p = 1 mod e with p > 2 sqrt(|G|)
  long p = e + 1;
  while (!(is_prime(p) && static_cast<double>(p) * p > 4.0 * g.order())) p += e;

  auto mulm = [&](long x, long y) { return static_cast<long>((__int128)x * y % p); };

  // class-sum matrices: (M_i)_{l,j} = #{(x,y) in C_i x C_j : xy = rep_l}
  std::vector<detail::ModMatrix> M(k, detail::ModMatrix(k, p));
  for (long i = 0; i < k; ++i)
    for (long x : classes[i])
      for (long l = 0; l < k; ++l) {
        long y = g.mul(g.inv(x), ct.reps[l]);
        M[i].at(l, ct.class_of[y]) = imod(M[i].at(l, ct.class_of[y]) + 1, p);
      }

  // split the common eigenspaces
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::vector<long>>> spaces; // list of bases (row vectors)
  {
    std::vector<std::vector<long>> full;
    for (long i = 0; i < k; ++i) {
      std::vector<long> ei(k, 0);
      ei[i] = 1;
      full.push_back(std::move(ei));
    }
    spaces.push_back(std::move(full));
  }

  auto split_by = [&](const detail::ModMatrix& mat) {
    std::vector<std::vector<std::vector<long>>> next;
    for (auto& basis : spaces) {
      long d = static_cast<long>(basis.size());
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      // restriction X with mat * b_j = sum_i X_{ij} b_i : solve via Gaussian
      // elimination on the basis matrix augmented with images
      long n = k;
      std::vector<std::vector<long>> aug(d, std::vector<long>(n + d, 0));
      for (long j = 0; j < d; ++j)
        for (long i = 0; i < n; ++i) aug[j][i] = basis[j][i];
      // images
      std::vector<std::vector<long>> img(d, std::vector<long>(n, 0));
      for (long j = 0; j < d; ++j)
        for (long r = 0; r < n; ++r) {
          long acc = 0;
          for (long c = 0; c < n; ++c)
            if (basis[j][c] != 0) acc = imod(acc + mulm(mat.at(r, c), basis[j][c]), p);
          img[j][r] = acc;
        }
      // solve basis^T * X = img^T  (column space coordinates)
      // build matrix with rows = basis vectors, then row-reduce tracking ops
      // on the images: coordinates of img vectors in terms of basis rows.
      std::vector<std::vector<long>> rows(d, std::vector<long>(n));
      for (long j = 0; j < d; ++j) rows[j] = basis[j];
      std::vector<std::vector<long>> coord(d, std::vector<long>(d, 0)); // X^T
      // reduce rows to echelon form, remembering pivot columns
      std::vector<long> piv_col(d, -1);
      std::vector<std::vector<long>> ops(d, std::vector<long>(d, 0)); // echelon = ops * basis
      for (long j = 0; j < d; ++j) ops[j][j] = 1;
      long r = 0;
      for (long col = 0; col < n && r < d; ++col) {
        long pr = -1;
        for (long i = r; i < d; ++i)
          if (rows[i][col] != 0) {
            pr = i;
            break;
          }
        if (pr < 0) continue;
        std::swap(rows[pr], rows[r]);
        std::swap(ops[pr], ops[r]);
        long ip = modinv(rows[r][col], p);
        for (long c = 0; c < n; ++c) rows[r][c] = mulm(rows[r][c], ip);
        for (long c = 0; c < d; ++c) ops[r][c] = mulm(ops[r][c], ip);
        for (long i = 0; i < d; ++i) {
          if (i == r || rows[i][col] == 0) continue;
          long f = rows[i][col];
          for (long c = 0; c < n; ++c) rows[i][c] = imod(rows[i][c] - mulm(f, rows[r][c]), p);
          for (long c = 0; c < d; ++c) ops[i][c] = imod(ops[i][c] - mulm(f, ops[r][c]), p);
        }
        piv_col[r] = col;
        ++r;
      }
      if (r != d) throw invariant_error("character_table: basis not independent");
      // coordinates of img[j] w.r.t. original basis: read off pivot entries of
      // the echelonized system: img[j] = sum_t alpha_t * echelon_t,
      // alpha_t = img[j][piv_col[t]] after eliminating... do it directly:
      for (long j = 0; j < d; ++j) {
        std::vector<long> v = img[j];
        std::vector<long> alpha(d, 0);
        for (long t = 0; t < d; ++t) {
          long c = piv_col[t];
          long f = v[c];
          alpha[t] = f;
          if (f != 0)
            for (long cc = 0; cc < n; ++cc) v[cc] = imod(v[cc] - mulm(f, rows[t][cc]), p);
        }
        for (long cc = 0; cc < n; ++cc)
          if (v[cc] != 0) throw invariant_error("character_table: subspace not invariant");
        // X coordinates in terms of original basis: alpha * ops
        for (long t = 0; t < d; ++t) {
          long acc = 0;
          for (long s = 0; s < d; ++s) acc = imod(acc + mulm(alpha[s], ops[s][t]), p);
          coord[j][t] = acc;
        }
      }
      // restriction matrix R with (R)_{i,j} = coord[j][i]
      detail::ModMatrix R(d, p);
      for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) R.at(i, j) = coord[j][i];
      // eigenvalues: roots of charpoly mod p
      std::vector<long> cp = detail::charpoly_mod(R);
      std::vector<long> roots;
      for (long lam = 0; lam < p; ++lam) {
        long acc = 0;
        for (long i = static_cast<long>(cp.size()) - 1; i >= 0; --i)
          acc = imod(mulm(acc, lam) + cp[i], p);
        if (acc == 0) roots.push_back(lam);
      }
      bool split_happened = false;
      for (long lam : roots) {
        auto ker = detail::eigen_kernel_mod(R, lam);
        if (ker.empty()) continue;
        if (static_cast<long>(ker.size()) == d) break; // scalar, no split
        split_happened = true;
        std::vector<std::vector<long>> sub;
        for (auto& kv : ker) {
          std::vector<long> vec(n, 0);
          for (long t = 0; t < d; ++t)
            if (kv[t] != 0)
              for (long c = 0; c < n; ++c) vec[c] = imod(vec[c] + mulm(kv[t], basis[t][c]), p);
          sub.push_back(std::move(vec));
        }
        next.push_back(std::move(sub));
      }
      if (!split_happened) next.push_back(std::move(basis));
    }
    spaces = std::move(next);
  };

  auto fully_split = [&] {
    for (const auto& s : spaces)
      if (s.size() > 1) return false;
    return true;
  };

  for (int round = 0; round < 4 && !fully_split(); ++round) {
    detail::ModMatrix mix(k, p);
    for (long i = 0; i < k; ++i) {
      long r = static_cast<long>(rng() % p);
      for (long x = 0; x < k; ++x)
        for (long y = 0; y < k; ++y) mix.at(x, y) = imod(mix.at(x, y) + mulm(r, M[i].at(x, y)), p);
    }
    split_by(mix);
  }
  for (long i = 1; i < k && !fully_split(); ++i) split_by(M[i]);
  if (!fully_split()) throw invariant_error("character_table: class algebra failed to split");

  // eigenvalues omega_i per character; degrees; values mod p
  long ginv = modinv(imod(g.order(), p), p);
  std::vector<std::vector<long>> omega(k, std::vector<long>(k));
  for (long c = 0; c < k; ++c) {
    const auto& v = spaces[c][0];
    long jnz = 0;
    while (v[jnz] == 0) ++jnz;
    long vinv = modinv(v[jnz], p);
    for (long i = 0; i < k; ++i) {
      long acc = 0;
      for (long t = 0; t < k; ++t)
        if (v[t] != 0) acc = imod(acc + mulm(M[i].at(jnz, t), v[t]), p);
      omega[c][i] = mulm(acc, vinv);
    }
  }
  std::vector<long> degree(k);
  for (long c = 0; c < k; ++c) {
    long s = 0;
    for (long i = 0; i < k; ++i) {
      long t = mulm(omega[c][i], omega[c][ct.inv_class[i]]);
      s = imod(s + mulm(t, modinv(imod(static_cast<long>(classes[i].size()), p), p)), p);
    }
    long d2 = mulm(imod(g.order(), p), modinv(s, p));
    long d = -1;
    for (long cand = 1; 2 * cand < p; ++cand)
      if (mulm(cand, cand) == d2) {
        d = cand;
        break;
      }
    if (d < 0) throw invariant_error("character_table: degree recovery failed");
    degree[c] = d;
  }
  {
    long sum = 0;
    for (long c = 0; c < k; ++c) sum += degree[c] * degree[c];
    if (sum != g.order()) throw invariant_error("character_table: sum of squared degrees mismatch");
  }

  // character values mod p, then lift through the discrete logarithm of a
  // fixed primitive e-th root z = g0^((p-1)/e)
  std::vector<std::vector<long>> chi_mod(k, std::vector<long>(k));
  for (long c = 0; c < k; ++c)
    for (long i = 0; i < k; ++i)
      chi_mod[c][i] =
          mulm(mulm(degree[c], omega[c][i]),
               modinv(imod(static_cast<long>(classes[i].size()), p), p));
  (void)ginv;

  long g0 = 2;
  for (;; ++g0) {
    bool ok = true;
    for (long q : prime_factors(p - 1))
      if (modpow(g0, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) break;
  }
  long z = modpow(g0, (p - 1) / e, p);
  long zinv = modinv(z, p);
  long einv = modinv(imod(e, p), p);

  // power-map classes
  std::vector<std::vector<long>> power_class(k, std::vector<long>(e));
  for (long i = 0; i < k; ++i)
    for (long t = 0; t < e; ++t) power_class[i][t] = ct.class_of[g.power(ct.reps[i], t)];

  ct.table.assign(k, std::vector<CycNum>(k));
  ct.degrees.assign(k, 0);
  for (long c = 0; c < k; ++c) {
    ct.degrees[c] = degree[c];
    for (long i = 0; i < k; ++i) {
      std::vector<Rat> poly(static_cast<size_t>(e), Rat(0));
      for (long j = 0; j < e; ++j) {
        long acc = 0;
        long zpow = 1; // z^{-j t}
        long zj = modpow(zinv, j, p);
        for (long t = 0; t < e; ++t) {
          acc = imod(acc + mulm(chi_mod[c][power_class[i][t]], zpow), p);
          zpow = mulm(zpow, zj);
        }
        long m = mulm(acc, einv);
        if (m > degree[c])
          throw invariant_error("character_table: eigenvalue multiplicity out of range");
        poly[j] = m;
      }
      ct.table[c][i] = CycNum(e, std::move(poly));
    }
  }

  // exact verification: row and column orthogonality
  for (long a = 0; a < k; ++a)
    for (long b = 0; b < k; ++b) {
      CycNum acc;
      for (long i = 0; i < k; ++i)
        acc += CycNum(Rat(static_cast<long>(classes[i].size()))) * ct.table[a][i] *
               ct.table[b][ct.inv_class[i]];
      CycNum expect = (a == b) ? CycNum(g.order()) : CycNum(0);
      if (acc != expect) throw invariant_error("character_table: row orthogonality failed");
    }
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j) {
      CycNum acc;
      for (long c = 0; c < k; ++c) acc += ct.table[c][i] * ct.table[c][ct.inv_class[j]];
      CycNum expect = (i == j) ? CycNum(Rat(g.order(), static_cast<long>(classes[i].size())))
                               : CycNum(0);
      if (acc != expect) throw invariant_error("character_table: column orthogonality failed");
    }

  // deterministic row order: degree, then lexicographic values
  std::vector<long> rows(k);
  std::iota(rows.begin(), rows.end(), 0);
  std::sort(rows.begin(), rows.end(), [&](long a, long b) {
    if (ct.degrees[a] != ct.degrees[b]) return ct.degrees[a] < ct.degrees[b];
    for (long i = 0; i < k; ++i) {
      int c = cyc_cmp(ct.table[a][i], ct.table[b][i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  std::vector<std::vector<CycNum>> new_table;
  std::vector<long> new_deg;
  for (long r : rows) {
    new_table.push_back(std::move(ct.table[r]));
    new_deg.push_back(ct.degrees[r]);
  }
  ct.table = std::move(new_table);
  ct.degrees = std::move(new_deg);
  return ct;
}

/// Linear characters of G: the characters of G/[G,G] pulled back.
/// Returned as dense value vectors over the elements of G.
inline std::vector<std::vector<CycNum>> abelianization_linear_characters(
    const Group& g, unsigned long seed = kDefaultSeed) {
  std::vector<long> comm = commutator_subgroup(g);
  QuotientGroup q = quotient_group(g, comm);
  CharTable qt = character_table(q.group, seed);
  std::vector<std::vector<CycNum>> out;
  for (long r = 0; r < qt.num_chars(); ++r) {
    std::vector<CycNum> vals(g.order());
    for (long a = 0; a < g.order(); ++a) vals[a] = qt.value(r, q.projection[a]);
    out.push_back(std::move(vals));
  }
  return out;
}

} // namespace hopfind

#endif
