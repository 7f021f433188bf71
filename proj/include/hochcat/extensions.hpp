#pragma once

#include <string>
#include <utility>

#include "cup.hpp"

namespace hochcat {

// Square-zero extension of R along a 2-cocycle f: the biproduct R + R with
// block multiplication (mu, 0, 0, 0 / f, mu, mu, 0) and unit
// (e ; -f (e x e) lambda_I^{-1}). The biproduct object is a fresh atom of
// dimension 2d; the distributivity isomorphism is never materialized, the
// multiplication is assembled column-block-wise through the injections.
template <class S>
struct Extension {
  RingObject<S> base;
  Cochain<S> cocycle;
  RingObject<S> total;
  Morphism<S> inject1, inject2;    // R -> R+R
  Morphism<S> project1, project2;  // R+R -> R
};

namespace detail {
template <class S>
Morphism<S> rewrap(const Morphism<S>& m, const InstancePtr<S>& inst) {
  return m.with_instance(inst);
}
}  // namespace detail

template <class S>
std::string extension_atom_id(const RingObject<S>& base) {
  return base.atom.atom_id() + "+" + base.atom.atom_id();
}

template <class S>
Extension<S> build_extension(const RingObject<S>& base, const Cochain<S>& f) {
  if (f.degree != 2 || f.mor.cod != base.atom)
    throw DegreeOutOfRange("extension cocycle must be a degree-2 cochain into the ring object");
  Cochain<S> df = differential(f);
  if (!df.mor.is_zero()) throw NotACocycle("d^2 of the chosen cochain is nonzero: " + df.mor.mat.to_string());

  const int d = base.dim();
  const S proto = base.inst->proto();
  auto inst = base.inst->with_atom(extension_atom_id(base), 2 * d);
  TensorWord t = TensorWord::atom(extension_atom_id(base));
  Morphism<S> mu = detail::rewrap(base.mul, inst);
  Morphism<S> e = detail::rewrap(base.unit, inst);
  Morphism<S> f2 = detail::rewrap(f.mor, inst);

  Mat<S> i1(2 * d, d, proto), i2(2 * d, d, proto), p1(d, 2 * d, proto), p2(d, 2 * d, proto);
  for (int i = 0; i < d; ++i) {
    i1.at(i, i) = one_like(proto);
    i2.at(d + i, i) = one_like(proto);
    p1.at(i, i) = one_like(proto);
    p2.at(i, d + i) = one_like(proto);
  }
  Morphism<S> inject1(inst, base.atom, t, i1), inject2(inst, base.atom, t, i2);
  Morphism<S> project1(inst, t, base.atom, p1), project2(inst, t, base.atom, p2);

  // column blocks of mu_total over the four injections: mu_total (i_a x i_b)
  Mat<S> zero_block(d, d * d, proto);
  Mat<S> blocks[2][2] = {{vconcat(mu.mat, f2.mat), vconcat(zero_block, mu.mat)},
                         {vconcat(zero_block, mu.mat), Mat<S>(2 * d, d * d, proto)}};
  Mat<S> mu_total(2 * d, 4 * d * d, proto);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          int col = (a * d + i) * 2 * d + (b * d + j);
          for (int r = 0; r < 2 * d; ++r) mu_total.at(r, col) = blocks[a][b].at(r, i * d + j);
        }

  Morphism<S> second = compose(f2, tensor_mor(e, e), left_unitor_inv(inst, TensorWord::unit()));
  Mat<S> e_total = vconcat(e.mat, (-second).mat);

  RingObject<S> total = RingObject<S>::unchecked(
      inst, t, Morphism<S>(inst, TensorWord::tensor(t, t), t, std::move(mu_total)),
      Morphism<S>(inst, TensorWord::unit(), t, std::move(e_total)), base.name + "+" + base.name);
  RingReport rep = check_ring_object(total);
  if (!rep.all_pass()) throw Error("square-zero extension failed the ring axioms");
  return Extension<S>{base, f, std::move(total), std::move(inject1), std::move(inject2),
                      std::move(project1), std::move(project2)};
}

// Ring axioms of the total object plus the top-component identity
// p1 mu_total (i1 x i1) = mu.
template <class S>
RingReport check_extension_ring(const Extension<S>& ext) {
  RingReport rep = check_ring_object(ext.total);
  Morphism<S> mu = detail::rewrap(ext.base.mul, ext.total.inst);
  Morphism<S> top = compose(ext.project1, ext.total.mul, tensor_mor(ext.inject1, ext.inject1));
  rep.checks.push_back({"top component is mu", top.mat == mu.mat, ""});
  {
    Mat<S> id_r = Mat<S>::identity(ext.base.dim(), ext.base.inst->proto());
    Mat<S> id_t = Mat<S>::identity(2 * ext.base.dim(), ext.base.inst->proto());
    bool biproduct = compose(ext.project1, ext.inject1).mat == id_r &&
                     compose(ext.project2, ext.inject2).mat == id_r &&
                     compose(ext.project1, ext.inject2).mat.is_zero() &&
                     compose(ext.project2, ext.inject1).mat.is_zero() &&
                     (compose(ext.inject1, ext.project1) + compose(ext.inject2, ext.project2)).mat == id_t;
    rep.checks.push_back({"biproduct identities", biproduct, ""});
  }
  return rep;
}

// Extensions along cohomologous cocycles are isomorphic as ring objects:
// for f = g + d^1 h the block maps phi = (1, 0 / h, 1), psi = (1, 0 / -h, 1)
// are mutually inverse ring morphisms R+_f R <-> R+_g R.
template <class S>
struct ExtensionIsomorphism {
  Extension<S> along_f;  // f = g + d^1(h)
  Extension<S> along_g;
  Morphism<S> phi;  // along_f.total -> along_g.total
  Morphism<S> psi;  // along_g.total -> along_f.total
};

template <class S>
ExtensionIsomorphism<S> extension_isomorphism(const RingObject<S>& base, const Cochain<S>& g,
                                              const Cochain<S>& h) {
  if (h.degree != 1) throw DegreeOutOfRange("isomorphism datum must have degree 1");
  Cochain<S> f = g + differential(h);
  Extension<S> ef = build_extension(base, f);
  Extension<S> eg = build_extension(base, g);
  const int d = base.dim();
  const S proto = base.inst->proto();
  auto inst = ef.total.inst;
  Mat<S> phi_mat = Mat<S>::identity(2 * d, proto), psi_mat = Mat<S>::identity(2 * d, proto);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      phi_mat.at(d + i, j) = h.mor.mat.at(i, j);
      psi_mat.at(d + i, j) = -h.mor.mat.at(i, j);
    }
  Morphism<S> phi(inst, ef.total.atom, eg.total.atom, std::move(phi_mat));
  Morphism<S> psi(inst, eg.total.atom, ef.total.atom, std::move(psi_mat));
  return ExtensionIsomorphism<S>{std::move(ef), std::move(eg), std::move(phi), std::move(psi)};
}

}  // namespace hochcat
