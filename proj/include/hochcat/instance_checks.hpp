#pragma once

#include <string>
#include <vector>

#include "random.hpp"

namespace hochcat {

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

struct InstanceReport {
  std::vector<Check> checks;
  bool all_pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

// All words over {I} + declared atoms with at most max_leaves leaves.
template <class S>
std::vector<TensorWord> word_pool(const Instance<S>& inst, int max_leaves) {
  std::vector<TensorWord> atoms{TensorWord::unit()};
  for (auto& [id, d] : inst.atom_dims()) atoms.push_back(TensorWord::atom(id));
  std::vector<std::vector<TensorWord>> by_size(max_leaves + 1);
  by_size[1] = atoms;
  for (int n = 2; n <= max_leaves; ++n)
    for (int l = 1; l < n; ++l)
      for (auto& a : by_size[l])
        for (auto& b : by_size[n - l]) by_size[n].push_back(TensorWord::tensor(a, b));
  std::vector<TensorWord> all;
  for (int n = 1; n <= max_leaves; ++n)
    for (auto& w : by_size[n]) all.push_back(w);
  return all;
}

}  // namespace detail

// Checks the axioms the instance is supposed to satisfy: pentagon, triangle,
// lambda_I = rho_I, naturality of the structural transformations on random
// morphisms, exactness of stored inverses, and (when symmetric) the unit
// coherence, associativity coherence and inverse law of the symmetry.
template <class S>
InstanceReport verify_instance(const InstancePtr<S>& inst, std::uint64_t seed = 1) {
  InstanceReport rep;
  Rng rng(seed);
  auto record = [&](const std::string& name, bool ok, const std::string& detail = "") {
    rep.checks.push_back({name, ok, detail});
  };

  std::vector<TensorWord> pool = detail::word_pool(*inst, 2);
  std::vector<TensorWord> leaves = detail::word_pool(*inst, 1);

  auto pentagon_at = [&](const TensorWord& w, const TensorWord& x, const TensorWord& y, const TensorWord& z) {
    TensorWord xy = TensorWord::tensor(x, y), yz = TensorWord::tensor(y, z);
    Morphism<S> lhs = compose(assoc(inst, w, x, yz), assoc(inst, TensorWord::tensor(w, x), y, z));
    Morphism<S> rhs = compose(tensor_mor(identity_mor(inst, w), assoc(inst, x, y, z)),
                              compose(assoc(inst, w, xy, z),
                                      tensor_mor(assoc(inst, w, x, y), identity_mor(inst, z))));
    return lhs.mat == rhs.mat && lhs.parallel_to(rhs);
  };

  {
    bool ok = true;
    std::string where;
    for (auto& w : leaves)
      for (auto& x : leaves)
        for (auto& y : leaves)
          for (auto& z : leaves)
            if (!pentagon_at(w, x, y, z))
              ok = false, where = w.to_string() + "," + x.to_string() + "," + y.to_string() + "," + z.to_string();
    for (int t = 0; t < 12; ++t) {
      TensorWord w = pool[draw(rng, pool.size())], x = pool[draw(rng, pool.size())];
      TensorWord y = pool[draw(rng, pool.size())], z = pool[draw(rng, pool.size())];
      if (w.leaf_count() + x.leaf_count() + y.leaf_count() + z.leaf_count() > 6) continue;
      if (!pentagon_at(w, x, y, z))
        ok = false, where = w.to_string() + "," + x.to_string() + "," + y.to_string() + "," + z.to_string();
    }
    record("pentagon", ok, where);
  }

  {
    bool ok = true;
    std::string where;
    for (auto& x : pool)
      for (auto& y : pool) {
        Morphism<S> lhs = compose(tensor_mor(identity_mor(inst, x), left_unitor(inst, y)),
                                  assoc(inst, x, TensorWord::unit(), y));
        Morphism<S> rhs = tensor_mor(right_unitor(inst, x), identity_mor(inst, y));
        if (!(lhs.mat == rhs.mat && lhs.parallel_to(rhs))) {
          ok = false;
          where = x.to_string() + "," + y.to_string();
        }
      }
    record("triangle", ok, where);
  }

  {
    Morphism<S> l = left_unitor(inst, TensorWord::unit());
    Morphism<S> r = right_unitor(inst, TensorWord::unit());
    record("lambda_I = rho_I", l.mat == r.mat);
  }

  {
    bool ok = true;
    for (int t = 0; t < 8 && ok; ++t) {
      TensorWord x = pool[draw(rng, pool.size())], x2 = pool[draw(rng, pool.size())];
      TensorWord y = pool[draw(rng, pool.size())], y2 = pool[draw(rng, pool.size())];
      TensorWord z = pool[draw(rng, pool.size())], z2 = pool[draw(rng, pool.size())];
      Morphism<S> f = random_mor(rng, inst, x, x2);
      Morphism<S> g = random_mor(rng, inst, y, y2);
      Morphism<S> h = random_mor(rng, inst, z, z2);
      Morphism<S> lhs = compose(assoc(inst, x2, y2, z2), tensor_mor(tensor_mor(f, g), h));
      Morphism<S> rhs = compose(tensor_mor(f, tensor_mor(g, h)), assoc(inst, x, y, z));
      ok = lhs.mat == rhs.mat;
    }
    record("associator naturality", ok);
  }

  {
    bool ok = true;
    for (int t = 0; t < 8 && ok; ++t) {
      TensorWord x = pool[draw(rng, pool.size())], x2 = pool[draw(rng, pool.size())];
      Morphism<S> f = random_mor(rng, inst, x, x2);
      Morphism<S> ul = compose(left_unitor(inst, x2), tensor_mor(identity_mor(inst, TensorWord::unit()), f));
      Morphism<S> lr = compose(f, left_unitor(inst, x));
      Morphism<S> ur = compose(right_unitor(inst, x2), tensor_mor(f, identity_mor(inst, TensorWord::unit())));
      Morphism<S> rr = compose(f, right_unitor(inst, x));
      ok = ul.mat == lr.mat && ur.mat == rr.mat;
    }
    record("unitor naturality", ok);
  }

  {
    bool ok = true;
    for (auto& x : pool) {
      Morphism<S> a = left_unitor(inst, x), ai = left_unitor_inv(inst, x);
      Morphism<S> b = right_unitor(inst, x), bi = right_unitor_inv(inst, x);
      ok = ok && compose(a, ai).mat == Mat<S>::identity(inst->dim(x), inst->proto()) &&
           compose(bi, b).mat == Mat<S>::identity(inst->dim(TensorWord::tensor(x, TensorWord::unit())),
                                                  inst->proto());
    }
    record("unitor inverses exact", ok);
  }

  if (inst->symmetric()) {
    {
      bool ok = true;
      for (auto& x : pool) {
        Morphism<S> lhs = compose(left_unitor(inst, x), braiding(inst, x, TensorWord::unit()));
        Morphism<S> rhs = right_unitor(inst, x);
        ok = ok && lhs.mat == rhs.mat;
      }
      record("unit coherence", ok);
    }
    {
      bool ok = true;
      std::string where;
      auto hexagon_at = [&](const TensorWord& x, const TensorWord& y, const TensorWord& z) {
        Morphism<S> lhs = compose(assoc(inst, y, z, x),
                                  compose(braiding(inst, x, TensorWord::tensor(y, z)), assoc(inst, x, y, z)));
        Morphism<S> rhs = compose(tensor_mor(identity_mor(inst, y), braiding(inst, x, z)),
                                  compose(assoc(inst, y, x, z),
                                          tensor_mor(braiding(inst, x, y), identity_mor(inst, z))));
        return lhs.mat == rhs.mat;
      };
      for (auto& x : leaves)
        for (auto& y : leaves)
          for (auto& z : leaves)
            if (!hexagon_at(x, y, z)) ok = false, where = x.to_string() + "," + y.to_string() + "," + z.to_string();
      for (int t = 0; t < 12; ++t) {
        TensorWord x = pool[draw(rng, pool.size())], y = pool[draw(rng, pool.size())];
        TensorWord z = pool[draw(rng, pool.size())];
        if (x.leaf_count() + y.leaf_count() + z.leaf_count() > 5) continue;
        if (!hexagon_at(x, y, z)) ok = false, where = x.to_string() + "," + y.to_string() + "," + z.to_string();
      }
      record("associativity coherence", ok, where);
    }
    {
      bool ok = true;
      for (auto& x : pool)
        for (auto& y : pool) {
          if (x.leaf_count() + y.leaf_count() > 4) continue;
          Morphism<S> round = compose(braiding(inst, y, x), braiding(inst, x, y));
          ok = ok && round.mat == Mat<S>::identity(inst->dim(TensorWord::tensor(x, y)), inst->proto());
        }
      record("symmetry inverse law", ok);
    }
    {
      bool ok = true;
      for (int t = 0; t < 8 && ok; ++t) {
        TensorWord x = pool[draw(rng, pool.size())], x2 = pool[draw(rng, pool.size())];
        TensorWord y = pool[draw(rng, pool.size())], y2 = pool[draw(rng, pool.size())];
        Morphism<S> f = random_mor(rng, inst, x, x2);
        Morphism<S> g = random_mor(rng, inst, y, y2);
        Morphism<S> lhs = compose(braiding(inst, x2, y2), tensor_mor(f, g));
        Morphism<S> rhs = compose(tensor_mor(g, f), braiding(inst, x, y));
        ok = lhs.mat == rhs.mat;
      }
      record("symmetry naturality", ok);
    }
  }

  return rep;
}

}  // namespace hochcat
