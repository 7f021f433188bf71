#pragma once

#include <string>
#include <vector>

#include "complex.hpp"

namespace hochcat {

// f with g inserted at slot i (1-based), degrees m, n >= 1:
// f a^{-(i-1,1)} [(1 x g) x 1] a^{(i-1,n)} of degree m+n-1.
template <class S>
Cochain<S> insert_at(const Cochain<S>& f, const Cochain<S>& g, int i) {
  const int m = f.degree, n = g.degree;
  if (m < 1 || n < 1)
    throw DegreeOutOfRange("insertion needs degrees >= 1, got " + std::to_string(m) + ", " + std::to_string(n));
  if (i < 1 || i > m) throw DegreeOutOfRange("insertion slot " + std::to_string(i) + " outside 1.." + std::to_string(m));
  const auto& inst = f.ring.inst;
  const TensorWord r = f.ring.atom;
  Morphism<S> before = regroup(inst, r, i - 1, n, m + n - 1);
  Morphism<S> mid = g.mor;
  if (i - 1 >= 1) mid = tensor_mor(identity_mor(inst, left_nested(r, i - 1)), mid);
  if (m - i >= 1) mid = tensor_mor(mid, identity_mor(inst, left_nested(r, m - i)));
  Morphism<S> after = regroup_inv(inst, r, i - 1, 1, m);
  return Cochain<S>{f.ring, m + n - 1, compose(f.mor, after, mid, before)};
}

// Composition product f . g = sum_i (-1)^{(i-1)(n-1)} fo_i g.
template <class S>
Cochain<S> compose_product(const Cochain<S>& f, const Cochain<S>& g) {
  const int m = f.degree, n = g.degree;
  if (m < 1 || n < 1) throw DegreeOutOfRange("composition product needs degrees >= 1");
  Cochain<S> acc = insert_at(f, g, 1);
  for (int i = 2; i <= m; ++i) {
    Cochain<S> term = insert_at(f, g, i);
    acc = ((i - 1) * (n - 1)) % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

// The multiplication as the canonical degree-2 cochain.
template <class S>
Cochain<S> mul_cochain(const RingObject<S>& r) {
  return Cochain<S>{r, 2, r.mul};
}

// Cup product, with the unitor cases at degree zero.
template <class S>
Cochain<S> cup(const Cochain<S>& f, const Cochain<S>& g) {
  const int m = f.degree, n = g.degree;
  const auto& inst = f.ring.inst;
  const TensorWord r = f.ring.atom;
  Morphism<S> pre;
  if (m >= 1 && n >= 1) pre = regroup(inst, r, m, n, m + n);
  else if (m >= 1 && n == 0) pre = right_unitor_inv(inst, left_nested(r, m));
  else if (m == 0 && n >= 1) pre = left_unitor_inv(inst, left_nested(r, n));
  else pre = left_unitor_inv(inst, TensorWord::unit());
  return Cochain<S>{f.ring, m + n, compose(f.ring.mul, tensor_mor(f.mor, g.mor), pre)};
}

enum class SignConvention { GerstenhaberStandard, PaperLiteral };

// [f, g] = f.g - (-1)^{(m-1)(n-1)} g.f (standard); the literal variant uses
// (-1)^{nm}, which at degree (1,1) gives the anticommutator instead of the
// commutator.
template <class S>
Cochain<S> gerstenhaber_bracket(const Cochain<S>& f, const Cochain<S>& g,
                                SignConvention conv = SignConvention::GerstenhaberStandard) {
  const int m = f.degree, n = g.degree;
  if (m < 1 || n < 1) throw DegreeOutOfRange("bracket needs degrees >= 1");
  Cochain<S> fg = compose_product(f, g);
  Cochain<S> gf = compose_product(g, f);
  int exponent = conv == SignConvention::GerstenhaberStandard ? (m - 1) * (n - 1) : n * m;
  return exponent % 2 == 0 ? fg - gf : fg + gf;
}

// --- executable identities -----------------------------------------------------

// (f o_i g) o_j h minus the rewriting the insertion rules dictate for (i, j);
// zero exactly when the rules hold.
template <class S>
Cochain<S> verify_prelie_axioms(const Cochain<S>& f, const Cochain<S>& g, const Cochain<S>& h, int i, int j) {
  const int m = f.degree, n = g.degree, p = h.degree;
  if (m < 1 || n < 1 || p < 1) throw DegreeOutOfRange("insertion rules need degrees >= 1");
  if (i < 1 || i > m || j < 1 || j > m + n - 1)
    throw IndexOutOfRange("slot pair (" + std::to_string(i) + ", " + std::to_string(j) + ") fits no rule");
  Cochain<S> lhs = insert_at(insert_at(f, g, i), h, j);
  Cochain<S> rhs = [&] {
    if (j <= i - 1) return insert_at(insert_at(f, h, j), g, i + p - 1);
    if (j <= i + n - 1) return insert_at(f, insert_at(g, h, j - i + 1), i);
    return insert_at(insert_at(f, h, j - n + 1), g, i);  // i + n <= j <= m + n - 1
  }();
  return lhs - rhs;
}

// Difference formula: (f.g).h - f.(g.h) minus the boundary-slot sum
// sum_{(1 <= j <= i-1) or (n+i <= j <= m+n-1)} (-1)^{(n-1)(i-1)+(p-1)(j-1)} (f o_i g) o_j h.
template <class S>
Cochain<S> prelie_difference_defect(const Cochain<S>& f, const Cochain<S>& g, const Cochain<S>& h) {
  const int m = f.degree, n = g.degree, p = h.degree;
  Cochain<S> lhs = compose_product(compose_product(f, g), h) - compose_product(f, compose_product(g, h));
  Cochain<S> acc = Cochain<S>{f.ring, m + n + p - 2,
                              zero_mor(f.ring.inst, cochain_domain(f.ring, m + n + p - 2), f.ring.atom)};
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m + n - 1; ++j) {
      if (!(j <= i - 1 || j >= n + i)) continue;
      Cochain<S> term = insert_at(insert_at(f, g, i), h, j);
      acc = ((n - 1) * (i - 1) + (p - 1) * (j - 1)) % 2 == 0 ? acc + term : acc - term;
    }
  return lhs - acc;
}

// Symmetry: (f.g).h - f.(g.h) = (-1)^{(n-1)(p-1)} ((f.h).g - f.(h.g)).
template <class S>
Cochain<S> prelie_symmetry_defect(const Cochain<S>& f, const Cochain<S>& g, const Cochain<S>& h) {
  const int n = g.degree, p = h.degree;
  Cochain<S> lhs = compose_product(compose_product(f, g), h) - compose_product(f, compose_product(g, h));
  Cochain<S> rhs = compose_product(compose_product(f, h), g) - compose_product(f, compose_product(h, g));
  return ((n - 1) * (p - 1)) % 2 == 0 ? lhs - rhs : lhs + rhs;
}

template <class S>
struct IdentityDefects {
  // all of these are exactly zero when the identities hold
  Cochain<S> cup_via_insertions;    // f cup g = (mu o_1 f) o_{m+1} g
  Cochain<S> differential_f;        // d f = -(f.mu - (-1)^{m-1} mu.f)
  Cochain<S> differential_g;        // same for g
  Cochain<S> homotopy;              // f.(dg) - d(f.g) + (-1)^{n-1}(df).g = (-1)^{n-1}(g cup f - (-1)^{mn} f cup g)
  Cochain<S> cocycle_commutator;    // cocycles: d(f.g) = (-1)^n (g cup f - (-1)^{mn} f cup g)
  Cochain<S> prelie_difference;     // with h = mu
  Cochain<S> prelie_symmetry;       // with h = mu

  bool all_zero() const {
    return cup_via_insertions.mor.is_zero() && differential_f.mor.is_zero() && differential_g.mor.is_zero() &&
           homotopy.mor.is_zero() && cocycle_commutator.mor.is_zero() && prelie_difference.mor.is_zero() &&
           prelie_symmetry.mor.is_zero();
  }
};

// d^m f computed through the composition product.
template <class S>
Cochain<S> differential_via_insertions(const Cochain<S>& f) {
  const int m = f.degree;
  Cochain<S> mu = mul_cochain(f.ring);
  Cochain<S> fm = compose_product(f, mu);
  Cochain<S> mf = compose_product(mu, f);
  Cochain<S> inner = (m - 1) % 2 == 0 ? fm - mf : fm + mf;
  return -inner;
}

template <class S>
IdentityDefects<S> verify_identities(const Cochain<S>& f, const Cochain<S>& g) {
  const int m = f.degree, n = g.degree;
  if (m < 1 || n < 1) throw DegreeOutOfRange("identity suite needs degrees >= 1");
  Cochain<S> mu = mul_cochain(f.ring);
  IdentityDefects<S> out{
      cup(f, g) - insert_at(insert_at(mu, f, 1), g, m + 1),
      differential(f) - differential_via_insertions(f),
      differential(g) - differential_via_insertions(g),
      // homotopy formula
      [&] {
        Cochain<S> lhs = compose_product(f, differential(g)) - differential(compose_product(f, g));
        Cochain<S> df_g = compose_product(differential(f), g);
        lhs = (n - 1) % 2 == 0 ? lhs + df_g : lhs - df_g;
        Cochain<S> comm = cup(g, f);
        Cochain<S> fg = cup(f, g);
        comm = (m * n) % 2 == 0 ? comm - fg : comm + fg;
        return (n - 1) % 2 == 0 ? lhs - comm : lhs + comm;
      }(),
      // cocycle case, evaluated only when f and g are cocycles
      [&]() -> Cochain<S> {
        Cochain<S> zero{f.ring, m + n,
                        zero_mor(f.ring.inst, cochain_domain(f.ring, m + n), f.ring.atom)};
        if (!differential(f).mor.is_zero() || !differential(g).mor.is_zero()) return zero;
        Cochain<S> lhs = differential(compose_product(f, g));
        Cochain<S> comm = cup(g, f);
        Cochain<S> fg = cup(f, g);
        comm = (m * n) % 2 == 0 ? comm - fg : comm + fg;
        return n % 2 == 0 ? lhs - comm : lhs + comm;
      }(),
      prelie_difference_defect(f, g, mu),
      prelie_symmetry_defect(f, g, mu)};
  return out;
}

// --- the induced product on cohomology -------------------------------------------

template <class S>
CohomologyClass<S> cup_on_cohomology(CochainComplex<S>& cx, const CohomologyClass<S>& a,
                                     const CohomologyClass<S>& b) {
  const int k = a.degree + b.degree;
  if (k > cx.max_degree())
    throw DegreeBudgetExceeded("cup lands in degree " + std::to_string(k) + " beyond the materialized complex");
  Cochain<S> product = cup(a.representative, b.representative);
  std::vector<S> coords = cx.class_coords(k, product.vec());
  const auto& reps = cx.hh_basis_vectors(k);
  std::vector<S> canon((std::size_t)cx.dim_c(k), zero_like(cx.proto()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t t = 0; t < canon.size(); ++t) {
      S add = coords[i];
      add *= reps[i][t];
      canon[t] += add;
    }
  return CohomologyClass<S>{k, cochain_from_vec(cx.ring(), k, canon), std::move(coords)};
}

}  // namespace hochcat
