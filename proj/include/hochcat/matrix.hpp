#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scalars.hpp"

namespace hochcat {

// Dense exact matrix over one field, row-major. The prototype scalar carries
// the field parameters so that empty matrices keep their field.
template <class S>
class Mat {
 public:
  Mat() : rows_(0), cols_(0), proto_() {}
  Mat(int rows, int cols, S proto)
      : rows_(rows), cols_(cols), proto_(zero_like(proto)), e_((std::size_t)rows * cols, zero_like(proto)) {}

  static Mat identity(int n, S proto) {
    Mat m(n, n, proto);
    for (int i = 0; i < n; ++i) m.at(i, i) = one_like(proto);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const S& proto() const { return proto_; }

  S& at(int r, int c) { return e_[(std::size_t)r * cols_ + c]; }
  const S& at(int r, int c) const { return e_[(std::size_t)r * cols_ + c]; }

  bool is_zero() const {
    for (const S& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator-() const {
    Mat m = *this;
    for (S& x : m.e_) x = -x;
    return m;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    a.require_same_shape(b, "add");
    Mat m = a;
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] += b.e_[i];
    return m;
  }

  friend Mat operator-(const Mat& a, const Mat& b) {
    a.require_same_shape(b, "sub");
    Mat m = a;
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] -= b.e_[i];
    return m;
  }

  friend Mat operator*(const S& c, const Mat& a) {
    Mat m = a;
    for (S& x : m.e_) x *= c;
    return m;
  }

  // Sparse-aware product: per-row nonzero lists on both sides, so cost is
  // one zero-scan of each operand plus the genuine fill.
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_)
      throw ShapeMismatch("mul: " + a.shape_str() + " by " + b.shape_str());
    a.require_same_field(b);
    Mat c(a.rows_, b.cols_, a.proto_);
    std::vector<std::vector<int>> bnz(b.rows_);
    for (int k = 0; k < b.rows_; ++k)
      for (int j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) bnz[k].push_back(j);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const S& av = a.at(i, k);
        if (av.is_zero()) continue;
        for (int j : bnz[k]) {
          S t = av;
          t *= b.at(k, j);
          c.at(i, j) += t;
        }
      }
    return c;
  }

  friend Mat hconcat(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_)
      throw ShapeMismatch("hconcat: " + a.shape_str() + " with " + b.shape_str());
    a.require_same_field(b);
    Mat m(a.rows_, a.cols_ + b.cols_, a.proto_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
      for (int j = 0; j < b.cols_; ++j) m.at(i, a.cols_ + j) = b.at(i, j);
    }
    return m;
  }

  friend Mat vconcat(const Mat& a, const Mat& b) {
    if (a.cols_ != b.cols_)
      throw ShapeMismatch("vconcat: " + a.shape_str() + " with " + b.shape_str());
    a.require_same_field(b);
    Mat m(a.rows_ + b.rows_, a.cols_, a.proto_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) m.at(a.rows_ + i, j) = b.at(i, j);
    return m;
  }

  // Kronecker product; the left factor indexes the most significant block.
  friend Mat kron(const Mat& a, const Mat& b) {
    a.require_same_field(b);
    Mat m(a.rows_ * b.rows_, a.cols_ * b.cols_, a.proto_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) {
        const S& av = a.at(i, j);
        if (av.is_zero()) continue;
        for (int k = 0; k < b.rows_; ++k)
          for (int l = 0; l < b.cols_; ++l) {
            if (b.at(k, l).is_zero()) continue;
            S t = av;
            t *= b.at(k, l);
            m.at(i * b.rows_ + k, j * b.cols_ + l) = std::move(t);
          }
      }
    return m;
  }

  std::vector<S> column(int j) const {
    std::vector<S> v;
    v.reserve(rows_);
    for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
  }

  // Column-major flattening; the coordinate convention for Hom spaces.
  std::vector<S> vec() const {
    std::vector<S> v;
    v.reserve(e_.size());
    for (int j = 0; j < cols_; ++j)
      for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
  }

  static Mat from_vec(int rows, int cols, const std::vector<S>& v, S proto) {
    Mat m(rows, cols, proto);
    for (int j = 0; j < cols; ++j)
      for (int i = 0; i < rows; ++i) m.at(i, j) = v[(std::size_t)j * rows + i];
    return m;
  }

  static Mat from_columns(int rows, const std::vector<std::vector<S>>& cols, S proto) {
    Mat m(rows, (int)cols.size(), proto);
    for (int j = 0; j < (int)cols.size(); ++j)
      for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    return m;
  }

  std::string shape_str() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
      if (i) s += "; ";
      for (int j = 0; j < cols_; ++j) {
        if (j) s += " ";
        s += at(i, j).to_string();
      }
    }
    return s + "]";
  }

  void require_same_field(const Mat& o) const {
    if (!proto_.same_field(o.proto_)) throw MixedFields();
  }

 private:
  void require_same_shape(const Mat& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ShapeMismatch(std::string(what) + ": " + shape_str() + " vs " + o.shape_str());
    require_same_field(o);
  }

  int rows_, cols_;
  S proto_;
  std::vector<S> e_;
};

template <class S>
struct ReducedForm {
  Mat<S> rref;
  int rank = 0;
  std::vector<int> pivot_cols;
  std::vector<std::vector<S>> kernel_basis;  // column vectors, echelon order
  std::vector<std::vector<S>> image_basis;   // the pivot columns of the input
};

namespace detail {

// Sparse row: (column, value) pairs sorted by column, values nonzero.
template <class V>
using SparseRow = std::vector<std::pair<int, V>>;

// r := a*r - b*p  (column-merged), dropping zeros.
template <class V>
SparseRow<V> row_combine(const SparseRow<V>& r, const V& a, const SparseRow<V>& p, const V& b) {
  SparseRow<V> out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j >= p.size() || (i < r.size() && r[i].first < p[j].first)) {
      V v = a * r[i].second;
      if (!(v == V(0))) out.emplace_back(r[i].first, std::move(v));
      ++i;
    } else if (i >= r.size() || p[j].first < r[i].first) {
      V v = b * p[j].second;
      if (!(v == V(0))) out.emplace_back(p[j].first, -std::move(v));
      ++j;
    } else {
      V v = a * r[i].second - b * p[j].second;
      if (!(v == V(0))) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Forward elimination over the rationals, kept fraction-free on integer rows
// with content removal after each combination. Returns monic RREF rows.
inline std::vector<SparseRow<Rat>> eliminate_rat(const Mat<Rat>& A, std::vector<int>& pivot_cols) {
  using ZRow = SparseRow<mpz_class>;
  std::vector<ZRow> pending;
  for (int i = 0; i < A.rows(); ++i) {
    mpz_class lcm = 1;
    for (int j = 0; j < A.cols(); ++j)
      if (!A.at(i, j).is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), A.at(i, j).den().get_mpz_t());
    ZRow row;
    for (int j = 0; j < A.cols(); ++j) {
      const Rat& x = A.at(i, j);
      if (x.is_zero()) continue;
      row.emplace_back(j, x.num() * (lcm / x.den()));
    }
    if (!row.empty()) pending.push_back(std::move(row));
  }

  auto strip_content = [](ZRow& r) {
    if (r.empty()) return;
    mpz_class g = 0;
    for (auto& [c, v] : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
      for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  };
  for (auto& r : pending) strip_content(r);

  // Bucket rows by leading column; eliminate column by column, preferring the
  // shortest candidate as pivot to limit fill.
  std::vector<std::vector<ZRow>> bucket(A.cols());
  for (auto& r : pending) bucket[r.front().first].push_back(std::move(r));
  std::vector<ZRow> pivots;
  pivot_cols.clear();
  for (int c = 0; c < A.cols(); ++c) {
    auto& cand = bucket[c];
    if (cand.empty()) continue;
    std::size_t best = 0;
    for (std::size_t i = 1; i < cand.size(); ++i)
      if (cand[i].size() < cand[best].size()) best = i;
    ZRow piv = std::move(cand[best]);
    cand.erase(cand.begin() + best);
    for (ZRow& r : cand) {
      ZRow next = row_combine(r, piv.front().second, piv, r.front().second);
      strip_content(next);
      if (!next.empty()) bucket[next.front().first].push_back(std::move(next));
    }
    cand.clear();
    pivot_cols.push_back(c);
    pivots.push_back(std::move(piv));
  }

  // Monic rational rows, then clear entries above pivots.
  std::vector<SparseRow<Rat>> rows;
  rows.reserve(pivots.size());
  for (auto& zr : pivots) {
    SparseRow<Rat> r;
    r.reserve(zr.size());
    mpq_class lead(zr.front().second);
    for (auto& [c, v] : zr) r.emplace_back(c, Rat(mpq_class(v) / lead));
    rows.push_back(std::move(r));
  }
  for (int i = (int)rows.size() - 1; i >= 0; --i) {
    for (int k = 0; k < i; ++k) {
      auto& up = rows[k];
      auto it = std::lower_bound(up.begin(), up.end(), pivot_cols[i],
                                 [](const auto& e, int c) { return e.first < c; });
      if (it == up.end() || it->first != pivot_cols[i]) continue;
      Rat factor = it->second;
      rows[k] = row_combine(up, Rat(1), rows[i], factor);
    }
  }
  return rows;
}

template <class S>
std::vector<SparseRow<S>> eliminate_field(const Mat<S>& A, std::vector<int>& pivot_cols) {
  std::vector<SparseRow<S>> pending;
  for (int i = 0; i < A.rows(); ++i) {
    SparseRow<S> row;
    for (int j = 0; j < A.cols(); ++j)
      if (!A.at(i, j).is_zero()) row.emplace_back(j, A.at(i, j));
    if (!row.empty()) pending.push_back(std::move(row));
  }
  std::vector<std::vector<SparseRow<S>>> bucket(A.cols());
  for (auto& r : pending) bucket[r.front().first].push_back(std::move(r));
  std::vector<SparseRow<S>> rows;
  pivot_cols.clear();
  auto combine = [](const SparseRow<S>& r, const SparseRow<S>& p, const S& factor) {
    // r - factor*p
    SparseRow<S> out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
      if (j >= p.size() || (i < r.size() && r[i].first < p[j].first)) {
        out.push_back(r[i++]);
      } else if (i >= r.size() || p[j].first < r[i].first) {
        S v = factor * p[j].second;
        if (!v.is_zero()) out.emplace_back(p[j].first, -v);
        ++j;
      } else {
        S v = r[i].second - factor * p[j].second;
        if (!v.is_zero()) out.emplace_back(r[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  };
  for (int c = 0; c < A.cols(); ++c) {
    auto& cand = bucket[c];
    if (cand.empty()) continue;
    std::size_t best = 0;
    for (std::size_t i = 1; i < cand.size(); ++i)
      if (cand[i].size() < cand[best].size()) best = i;
    SparseRow<S> piv = std::move(cand[best]);
    cand.erase(cand.begin() + best);
    S inv = piv.front().second.inverse();
    for (auto& [col, v] : piv) v *= inv;
    for (SparseRow<S>& r : cand) {
      SparseRow<S> next = combine(r, piv, r.front().second);
      if (!next.empty()) bucket[next.front().first].push_back(std::move(next));
    }
    cand.clear();
    pivot_cols.push_back(c);
    rows.push_back(std::move(piv));
  }
  for (int i = (int)rows.size() - 1; i >= 0; --i) {
    for (int k = 0; k < i; ++k) {
      auto& up = rows[k];
      auto it = std::lower_bound(up.begin(), up.end(), pivot_cols[i],
                                 [](const auto& e, int c) { return e.first < c; });
      if (it == up.end() || it->first != pivot_cols[i]) continue;
      S factor = it->second;
      rows[k] = combine(up, rows[i], factor);
    }
  }
  return rows;
}

}  // namespace detail

// Unique reduced row-echelon form with kernel and image bases; pivot columns
// are the lexicographically earliest independent columns, so all outputs are
// deterministic.
template <class S>
ReducedForm<S> row_reduce(const Mat<S>& A) {
  ReducedForm<S> out;
  std::vector<detail::SparseRow<S>> rows;
  if constexpr (std::is_same_v<S, Rat>) {
    rows = detail::eliminate_rat(A, out.pivot_cols);
  } else {
    rows = detail::eliminate_field(A, out.pivot_cols);
  }
  out.rank = (int)out.pivot_cols.size();
  out.rref = Mat<S>(A.rows(), A.cols(), A.proto());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto& [c, v] : rows[i]) out.rref.at((int)i, c) = v;

  std::vector<char> is_pivot(A.cols(), 0);
  for (int c : out.pivot_cols) is_pivot[c] = 1;
  for (int f = 0; f < A.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<S> v((std::size_t)A.cols(), zero_like(A.proto()));
    v[f] = one_like(A.proto());
    for (int r = 0; r < out.rank; ++r) v[out.pivot_cols[r]] = -out.rref.at(r, f);
    out.kernel_basis.push_back(std::move(v));
  }
  for (int c : out.pivot_cols) out.image_basis.push_back(A.column(c));
  return out;
}

// Growing row-echelon span with exact reduction; used to extend bases
// deterministically and to test subspace containment without re-reducing
// from scratch.
template <class S>
class IncrementalSpan {
 public:
  explicit IncrementalSpan(S proto) : proto_(zero_like(proto)) {}

  // True if v lay outside the span; the span absorbs v either way.
  bool absorb(const std::vector<S>& v) {
    detail::SparseRow<S> r;
    for (int i = 0; i < (int)v.size(); ++i)
      if (!v[i].is_zero()) r.emplace_back(i, v[i]);
    reduce(r);
    if (r.empty()) return false;
    S inv = r.front().second.inverse();
    for (auto& [c, x] : r) x *= inv;
    rows_.push_back(std::move(r));
    std::sort(rows_.begin(), rows_.end(),
              [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
    return true;
  }

  bool contains(const std::vector<S>& v) const {
    detail::SparseRow<S> r;
    for (int i = 0; i < (int)v.size(); ++i)
      if (!v[i].is_zero()) r.emplace_back(i, v[i]);
    reduce(r);
    return r.empty();
  }

  int dim() const { return (int)rows_.size(); }

 private:
  void reduce(detail::SparseRow<S>& r) const {
    while (!r.empty()) {
      int lead = r.front().first;
      const detail::SparseRow<S>* piv = nullptr;
      for (auto& row : rows_)
        if (row.front().first == lead) {
          piv = &row;
          break;
        }
      if (!piv) return;
      S factor = r.front().second;
      detail::SparseRow<S> out;
      std::size_t i = 0, j = 0;
      while (i < r.size() || j < piv->size()) {
        if (j >= piv->size() || (i < r.size() && r[i].first < (*piv)[j].first)) {
          out.push_back(r[i++]);
        } else if (i >= r.size() || (*piv)[j].first < r[i].first) {
          S x = factor * (*piv)[j].second;
          if (!x.is_zero()) out.emplace_back((*piv)[j].first, -x);
          ++j;
        } else {
          S x = r[i].second - factor * (*piv)[j].second;
          if (!x.is_zero()) out.emplace_back(r[i].first, std::move(x));
          ++i;
          ++j;
        }
      }
      r = std::move(out);
    }
  }

  S proto_;
  std::vector<detail::SparseRow<S>> rows_;
};

// Exact coordinates of v in the span of the given vectors, or nullopt.
template <class S>
std::optional<std::vector<S>> membership(const std::vector<S>& v, const std::vector<std::vector<S>>& basis,
                                         S proto) {
  int n = (int)v.size();
  for (const auto& b : basis)
    if ((int)b.size() != n) throw ShapeMismatch("membership: vector lengths differ");
  Mat<S> m(n, (int)basis.size() + 1, proto);
  for (int j = 0; j < (int)basis.size(); ++j)
    for (int i = 0; i < n; ++i) m.at(i, j) = basis[j][i];
  for (int i = 0; i < n; ++i) m.at(i, (int)basis.size()) = v[i];
  ReducedForm<S> rf = row_reduce(m);
  std::vector<S> coords((std::size_t)basis.size(), zero_like(proto));
  for (int r = 0; r < rf.rank; ++r) {
    if (rf.pivot_cols[r] == (int)basis.size()) return std::nullopt;
    coords[rf.pivot_cols[r]] = rf.rref.at(r, (int)basis.size());
  }
  return coords;
}

// Exact inverse of a square matrix (throws on singular input).
template <class S>
Mat<S> inverse(const Mat<S>& A) {
  if (A.rows() != A.cols()) throw ShapeMismatch("inverse: " + A.shape_str());
  Mat<S> aug = hconcat(A, Mat<S>::identity(A.rows(), A.proto()));
  ReducedForm<S> rf = row_reduce(aug);
  for (int r = 0; r < A.rows(); ++r)
    if (rf.rank <= r || rf.pivot_cols[r] != r) throw Error("inverse: singular matrix");
  Mat<S> inv(A.rows(), A.cols(), A.proto());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) inv.at(i, j) = rf.rref.at(i, A.cols() + j);
  return inv;
}

}  // namespace hochcat
