#pragma once

#include <string>
#include <vector>

#include "instance_checks.hpp"
#include "morphisms.hpp"

namespace hochcat {

// Multiplication table input: mul[i][j][k] is the coefficient of b_k in
// b_i * b_j, unit holds the coordinates of the unit element.
template <class S>
struct AlgebraSpec {
  std::string name;
  int dim = 0;
  std::vector<S> unit;
  std::vector<std::vector<std::vector<S>>> mul;

  static AlgebraSpec from_ints(std::string name, int d, const std::vector<long>& table,
                               const std::vector<long>& unit, S proto) {
    AlgebraSpec spec;
    spec.name = std::move(name);
    spec.dim = d;
    for (long u : unit) spec.unit.push_back(from_int(proto, u));
    spec.mul.assign(d, std::vector<std::vector<S>>(d, std::vector<S>(d, zero_like(proto))));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) spec.mul[i][j][k] = from_int(proto, table[((std::size_t)i * d + j) * d + k]);
    return spec;
  }
};

// An object R with multiplication R*R -> R and unit I -> R. Constructed
// through algebra_from_spec, which enforces the associative and unitary
// relations; unchecked() exists so the axiom checks can be pointed at
// arbitrary candidate data.
template <class S>
struct RingObject {
  InstancePtr<S> inst;
  TensorWord atom;
  Morphism<S> mul;   // R*R -> R
  Morphism<S> unit;  // I -> R
  std::string name;

  int dim() const { return inst->dim(atom); }

  static RingObject unchecked(InstancePtr<S> inst, TensorWord atom, Morphism<S> mul, Morphism<S> unit,
                              std::string name = "") {
    RingObject r;
    r.inst = std::move(inst);
    r.atom = std::move(atom);
    r.mul = std::move(mul);
    r.unit = std::move(unit);
    r.name = std::move(name);
    return r;
  }
};

struct RingReport {
  std::vector<Check> checks;
  bool all_pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Both defining diagrams, evaluated as exact matrix identities with the full
// coherence bookkeeping: mu(1 x mu)alpha = mu(mu x 1) and
// mu(e x 1)lambda^{-1} = 1 = mu(1 x e)rho^{-1}.
template <class S>
RingReport check_ring_object(const RingObject<S>& r) {
  RingReport rep;
  const auto& inst = r.inst;
  Morphism<S> idr = identity_mor(inst, r.atom);
  Morphism<S> lhs = compose(r.mul, tensor_mor(r.mul, idr));
  Morphism<S> rhs = compose(r.mul, compose(tensor_mor(idr, r.mul), assoc(inst, r.atom, r.atom, r.atom)));
  rep.checks.push_back({"associative relation", lhs.mat == rhs.mat, ""});
  Morphism<S> lu = compose(r.mul, compose(tensor_mor(r.unit, idr), left_unitor_inv(inst, r.atom)));
  Morphism<S> ru = compose(r.mul, compose(tensor_mor(idr, r.unit), right_unitor_inv(inst, r.atom)));
  Mat<S> id = Mat<S>::identity(r.dim(), inst->proto());
  rep.checks.push_back({"left unitary relation", lu.mat == id, ""});
  rep.checks.push_back({"right unitary relation", ru.mat == id, ""});
  return rep;
}

// Build a ring object on the named atom from a structure-constant table.
// The unit morphism is c * u (c the unitor scale): the unitary relation
// mu(e x 1)lambda^{-1} = 1 forces this scaling when lambda multiplies by c.
template <class S>
RingObject<S> algebra_from_spec(const AlgebraSpec<S>& spec, const InstancePtr<S>& inst,
                                const std::string& atom_id = "R") {
  if (!spec.unit.empty() && !spec.unit.front().same_field(inst->proto())) throw MixedFields();
  if (inst->atom_dim(atom_id) != spec.dim)
    throw DimMismatch("instance declares " + atom_id + " with dimension " +
                      std::to_string(inst->atom_dim(atom_id)) + ", table has " + std::to_string(spec.dim));
  const int d = spec.dim;
  if ((int)spec.unit.size() != d) throw DimMismatch("unit vector length");

  TensorWord r = TensorWord::atom(atom_id);
  Mat<S> mu(d, d * d, inst->proto());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if ((int)spec.mul[i][j].size() != d) throw DimMismatch("table entry length");
      for (int k = 0; k < d; ++k) mu.at(k, i * d + j) = spec.mul[i][j][k];
    }
  Mat<S> e(d, 1, inst->proto());
  for (int k = 0; k < d; ++k) {
    e.at(k, 0) = spec.unit[k];
    e.at(k, 0) *= inst->unitor_scale();
  }

  RingObject<S> ring = RingObject<S>::unchecked(inst, r, Morphism<S>(inst, TensorWord::tensor(r, r), r, mu),
                                                Morphism<S>(inst, TensorWord::unit(), r, e), spec.name);
  RingReport rep = check_ring_object(ring);
  if (!rep.checks[0].pass) {
    // locate a witness triple elementwise
    Morphism<S> idr = identity_mor(inst, r);
    Mat<S> lhs = compose(ring.mul, tensor_mor(ring.mul, idr)).mat;
    Mat<S> rhs = compose(ring.mul, compose(tensor_mor(idr, ring.mul), assoc(inst, r, r, r))).mat;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          int col = (i * d + j) * d + k;
          for (int row = 0; row < d; ++row)
            if (lhs.at(row, col) != rhs.at(row, col)) throw NotAssociative(i, j, k);
        }
    throw NotAssociative(-1, -1, -1);
  }
  if (!rep.checks[1].pass || !rep.checks[2].pass) {
    Morphism<S> idr = identity_mor(inst, r);
    Mat<S> lu = compose(ring.mul, compose(tensor_mor(ring.unit, idr), left_unitor_inv(inst, r))).mat;
    Mat<S> ru = compose(ring.mul, compose(tensor_mor(idr, ring.unit), right_unitor_inv(inst, r))).mat;
    Mat<S> id = Mat<S>::identity(d, inst->proto());
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i)
        if (lu.at(i, j) != id.at(i, j) || ru.at(i, j) != id.at(i, j)) throw UnitFails(j);
    throw UnitFails(-1);
  }
  return ring;
}

// f mu_R = mu_S (f x f) and f e_R = e_S, exactly.
template <class S>
RingReport check_ring_morphism(const Morphism<S>& h, const RingObject<S>& src, const RingObject<S>& dst) {
  if (h.dom != src.atom || h.cod != dst.atom)
    throw WordMismatch("ring morphism must map " + src.atom.to_string() + " to " + dst.atom.to_string());
  RingReport rep;
  Morphism<S> lhs = compose(h, src.mul);
  Morphism<S> rhs = compose(dst.mul, tensor_mor(h, h));
  rep.checks.push_back({"multiplication square", lhs.mat == rhs.mat, ""});
  rep.checks.push_back({"unit triangle", compose(h, src.unit).mat == dst.unit.mat, ""});
  return rep;
}

// mu gamma = mu in the symmetric instance.
template <class S>
bool check_commutative(const RingObject<S>& r) {
  if (!r.inst->symmetric()) throw NotSymmetricInstance();
  return compose(r.mul, braiding(r.inst, r.atom, r.atom)).mat == r.mul.mat;
}

// An object X with left action nu: R*X -> X and right action sigma: X*R -> X
// satisfying the two module pairs of diagrams and the compatibility square.
template <class S>
struct BimoduleObject {
  RingObject<S> ring;
  TensorWord atom;        // X
  Morphism<S> left_act;   // nu
  Morphism<S> right_act;  // sigma

  int dim() const { return ring.inst->dim(atom); }
};

template <class S>
RingReport check_bimodule(const RingObject<S>& r, const TensorWord& x, const Morphism<S>& nu,
                          const Morphism<S>& sigma) {
  const auto& inst = r.inst;
  Morphism<S> idr = identity_mor(inst, r.atom);
  Morphism<S> idx = identity_mor(inst, x);
  RingReport rep;
  {
    Morphism<S> lhs = compose(nu, tensor_mor(r.mul, idx));
    Morphism<S> rhs = compose(nu, compose(tensor_mor(idr, nu), assoc(inst, r.atom, r.atom, x)));
    rep.checks.push_back({"left associativity", lhs.mat == rhs.mat, ""});
  }
  {
    Morphism<S> lhs = compose(nu, tensor_mor(r.unit, idx));
    rep.checks.push_back({"left unit", lhs.mat == left_unitor(inst, x).mat, ""});
  }
  {
    Morphism<S> lhs = compose(sigma, tensor_mor(sigma, idr));
    Morphism<S> rhs = compose(sigma, compose(tensor_mor(idx, r.mul), assoc(inst, x, r.atom, r.atom)));
    rep.checks.push_back({"right associativity", lhs.mat == rhs.mat, ""});
  }
  {
    Morphism<S> lhs = compose(sigma, tensor_mor(idx, r.unit));
    rep.checks.push_back({"right unit", lhs.mat == right_unitor(inst, x).mat, ""});
  }
  {
    Morphism<S> lhs = compose(sigma, tensor_mor(nu, idr));
    Morphism<S> rhs = compose(nu, compose(tensor_mor(idr, sigma), assoc(inst, r.atom, x, r.atom)));
    rep.checks.push_back({"left-right compatibility", lhs.mat == rhs.mat, ""});
  }
  return rep;
}

template <class S>
BimoduleObject<S> bimodule_from_actions(const RingObject<S>& r, const TensorWord& x, const Morphism<S>& nu,
                                        const Morphism<S>& sigma) {
  RingReport rep = check_bimodule(r, x, nu, sigma);
  for (auto& c : rep.checks)
    if (!c.pass) throw ActionAxiomFails(c.name);
  return BimoduleObject<S>{r, x, nu, sigma};
}

// Every ring object is a bimodule over itself with both actions mu.
template <class S>
BimoduleObject<S> regular_bimodule(const RingObject<S>& r) {
  return BimoduleObject<S>{r, r.atom, r.mul, r.mul};
}

// --- built-in catalog --------------------------------------------------------
//
// Fixed test algebras: the base field k, k x k, k[x]/(x^2), k[x]/(x^3), the
// group algebra kC2, M_2(k) and the upper triangular T_2(k).
template <class S>
std::vector<AlgebraSpec<S>> catalog_specs(S proto) {
  std::vector<AlgebraSpec<S>> out;
  out.push_back(AlgebraSpec<S>::from_ints("k", 1, {1}, {1}, proto));
  out.push_back(AlgebraSpec<S>::from_ints("kxk", 2,
                                          {1, 0, 0, 0,
                                           0, 0, 0, 1},
                                          {1, 1}, proto));
  out.push_back(AlgebraSpec<S>::from_ints("dual", 2,
                                          {1, 0, 0, 1,
                                           0, 1, 0, 0},
                                          {1, 0}, proto));
  {
    std::vector<long> t(27, 0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i + j < 3) t[((std::size_t)i * 3 + j) * 3 + i + j] = 1;
    out.push_back(AlgebraSpec<S>::from_ints("trunc3", 3, t, {1, 0, 0}, proto));
  }
  out.push_back(AlgebraSpec<S>::from_ints("kc2", 2,
                                          {1, 0, 0, 1,
                                           0, 1, 1, 0},
                                          {1, 0}, proto));
  {
    std::vector<long> t(64, 0);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d)
            if (b == c) t[((std::size_t)(a * 2 + b) * 4 + (c * 2 + d)) * 4 + (a * 2 + d)] = 1;
    out.push_back(AlgebraSpec<S>::from_ints("m2", 4, t, {1, 0, 0, 1}, proto));
  }
  {
    // basis E11, E12, E22
    std::vector<long> t(27, 0);
    auto set = [&](int i, int j, int k) { t[((std::size_t)i * 3 + j) * 3 + k] = 1; };
    set(0, 0, 0);  // E11 E11 = E11
    set(0, 1, 1);  // E11 E12 = E12
    set(1, 2, 1);  // E12 E22 = E12
    set(2, 2, 2);  // E22 E22 = E22
    out.push_back(AlgebraSpec<S>::from_ints("t2", 3, t, {1, 0, 1}, proto));
  }
  return out;
}

// Instance with a single ring atom of the right dimension, plus the ring.
template <class S>
RingObject<S> make_ring(const AlgebraSpec<S>& spec, S proto, S unitor_scale, bool symmetric = true) {
  auto inst = Instance<S>::make(proto, {{"R", spec.dim}}, unitor_scale, symmetric);
  return algebra_from_spec(spec, inst);
}

}  // namespace hochcat
