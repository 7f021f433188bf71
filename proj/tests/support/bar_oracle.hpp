#pragma once

// Independent oracle for Hochschild cohomology dimensions of a finite
// dimensional algebra given by structure constants. Uses the classical
// strict bar-complex differential on Hom(A^{tensor k}, A), its own index
// flattening, boost::multiprecision arithmetic and a plain division-based
// Gaussian elimination; it shares no code with the hochcat headers.

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bar_oracle {

using BQ = boost::multiprecision::cpp_rational;

struct BFp {
  std::int64_t v = 0;
  std::int64_t p = 2;
  BFp() = default;
  BFp(std::int64_t n, std::int64_t mod) : p(mod) {
    v = n % p;
    if (v < 0) v += p;
  }
  friend BFp operator+(BFp a, BFp b) { return BFp(a.v + b.v, a.p); }
  friend BFp operator-(BFp a, BFp b) { return BFp(a.v - b.v, a.p); }
  friend BFp operator*(BFp a, BFp b) { return BFp(a.v * b.v, a.p); }
  friend BFp operator/(BFp a, BFp b) {
    // Fermat inverse, p prime
    std::int64_t r = 1, base = b.v % b.p, e = b.p - 2;
    while (e) {
      if (e & 1) r = r * base % b.p;
      base = base * base % b.p;
      e >>= 1;
    }
    return BFp(a.v * r, a.p);
  }
  bool operator==(const BFp& o) const { return v == o.v; }
  bool is_zero() const { return v == 0; }
};

inline bool oracle_is_zero(const BQ& x) { return x == 0; }
inline bool oracle_is_zero(const BFp& x) { return x.is_zero(); }
inline BQ oracle_neg(const BQ& x) { return -x; }
inline BFp oracle_neg(const BFp& x) { return BFp(-x.v, x.p); }

// Structure constants: mul[(i*d + j)*d + k] is the coefficient of b_k in
// b_i * b_j. Entries are small integers; the field is chosen by T.
struct Table {
  int d = 0;
  std::vector<long> mul;
  long at(int i, int j, int k) const { return mul[((std::size_t)i * d + j) * d + k]; }
};

template <class T>
T make_scalar(long n, std::int64_t p);
template <>
inline BQ make_scalar<BQ>(long n, std::int64_t) { return BQ(n); }
template <>
inline BFp make_scalar<BFp>(long n, std::int64_t p) { return BFp(n, p); }

// Sparse matrix as rows of (col -> value).
template <class T>
using SpMat = std::vector<std::map<long, T>>;

// Matrix of the bar differential d^k : Hom(A^{ot k}, A) -> Hom(A^{ot k+1}, A).
// A cochain f has coordinates F[r; j_1..j_k] with f(b_{j_1},..,b_{j_k}) =
// sum_r F[r; j] b_r; here the coordinate index is r * d^k + flat(j), with j_1
// most significant inside flat(j).
template <class T>
SpMat<T> bar_differential(const Table& A, int k, std::int64_t p) {
  const int d = A.d;
  auto powd = [&](int e) {
    long r = 1;
    while (e--) r *= d;
    return r;
  };
  const long cols = d * powd(k), rows = d * powd(k + 1);
  SpMat<T> m((std::size_t)rows);
  auto add = [&](long row, long col, long val) {
    if (val == 0) return;
    T t = make_scalar<T>(val, p);
    auto [it, fresh] = m[row].try_emplace(col, t);
    if (!fresh) {
      it->second = it->second + t;
      if (oracle_is_zero(it->second)) m[row].erase(it);
    }
  };

  std::vector<int> idx(k + 1, 0);  // (i_0 .. i_k) multi-index over rows
  const long nidx = powd(k + 1);
  for (long flat = 0; flat < nidx; ++flat) {
    long rest = flat;
    for (int t = k; t >= 0; --t) {
      idx[t] = (int)(rest % d);
      rest /= d;
    }
    auto flat_of = [&](const std::vector<int>& v) {
      long f = 0;
      for (int x : v) f = f * d + x;
      return f;
    };
    // term 0: b_{i_0} * f(b_{i_1}..b_{i_k})
    {
      std::vector<int> j(idx.begin() + 1, idx.end());
      long jf = flat_of(j);
      for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s) add(s * nidx + flat, r * powd(k) + jf, A.at(idx[0], r, s));
    }
    // middle terms: fold i_{m-1} i_m together
    for (int mterm = 1; mterm <= k; ++mterm) {
      long sign = (mterm % 2 == 0) ? 1 : -1;
      for (int t = 0; t < d; ++t) {
        long coef = A.at(idx[mterm - 1], idx[mterm], t);
        if (coef == 0) continue;
        std::vector<int> j;
        for (int q = 0; q <= k; ++q) {
          if (q == mterm - 1) j.push_back(t);
          else if (q == mterm) continue;
          else j.push_back(idx[q]);
        }
        long jf = flat_of(j);
        for (int r = 0; r < d; ++r) add(r * nidx + flat, r * powd(k) + jf, sign * coef);
      }
    }
    // last term: f(b_{i_0}..b_{i_{k-1}}) * b_{i_k}
    {
      long sign = ((k + 1) % 2 == 0) ? 1 : -1;
      std::vector<int> j(idx.begin(), idx.end() - 1);
      long jf = flat_of(j);
      for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s) add(s * nidx + flat, r * powd(k) + jf, sign * A.at(r, idx[k], s));
    }
  }
  return m;
}

// d^0 : A -> Hom(A, A), a |-> (x |-> x a - a x).
template <class T>
SpMat<T> bar_differential0(const Table& A, std::int64_t p) {
  const int d = A.d;
  SpMat<T> m((std::size_t)d * d);
  auto add = [&](long row, long col, long val) {
    if (val == 0) return;
    T t = make_scalar<T>(val, p);
    auto [it, fresh] = m[row].try_emplace(col, t);
    if (!fresh) {
      it->second = it->second + t;
      if (oracle_is_zero(it->second)) m[row].erase(it);
    }
  };
  for (int a = 0; a < d; ++a)     // column: basis element of A
    for (int x = 0; x < d; ++x)   // argument
      for (int s = 0; s < d; ++s) // output coordinate; row = s * d + x
        add((long)s * d + x, a, A.at(x, a, s) - A.at(a, x, s));
  return m;
}

template <class T>
long rank_of(SpMat<T> m) {
  long rank = 0;
  std::map<long, std::map<long, T>> pivots;  // leading col -> row
  for (auto& row : m) {
    std::map<long, T> r = std::move(row);
    while (!r.empty()) {
      long lead = r.begin()->first;
      auto piv = pivots.find(lead);
      if (piv == pivots.end()) break;
      T factor = r.begin()->second / piv->second.begin()->second;
      for (auto& [c, v] : piv->second) {
        T delta = factor * v;
        auto it = r.find(c);
        if (it == r.end()) {
          r[c] = oracle_neg(delta);
        } else {
          it->second = it->second - delta;
          if (oracle_is_zero(it->second)) r.erase(it);
        }
      }
    }
    if (!r.empty()) {
      pivots.emplace(r.begin()->first, std::move(r));
      ++rank;
    }
  }
  return rank;
}

// Hochschild cohomology dimensions HH^0 .. HH^kmax over Q (p = 0) or F_p.
template <class T>
std::vector<long> hh_dims(const Table& A, int kmax, std::int64_t p) {
  std::vector<long> ranks, dims;
  std::vector<long> colcount;
  auto powd = [&](int e) {
    long r = 1;
    while (e--) r *= A.d;
    return r;
  };
  for (int k = 0; k <= kmax; ++k) {
    SpMat<T> dk = k == 0 ? bar_differential0<T>(A, p) : bar_differential<T>(A, k, p);
    colcount.push_back(A.d * powd(k));
    ranks.push_back(rank_of(std::move(dk)));
  }
  for (int k = 0; k <= kmax; ++k) {
    long nullity = colcount[k] - ranks[k];
    long prev_rank = k == 0 ? 0 : ranks[k - 1];
    dims.push_back(nullity - prev_rank);
  }
  return dims;
}

}  // namespace bar_oracle
