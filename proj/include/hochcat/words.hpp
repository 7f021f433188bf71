#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "scalars.hpp"

namespace hochcat {

// A parenthesized tensor expression. Leaves are the tensor unit I or named
// atoms; parenthesization is part of the object's identity, so two words with
// the same flattening but different trees are different objects.
class TensorWord {
 public:
  static TensorWord unit() {
    TensorWord w;
    w.n_ = std::make_shared<const Node>();
    return w;
  }

  static TensorWord atom(std::string id) {
    auto node = std::make_shared<Node>();
    node->id = std::move(id);
    TensorWord w;
    w.n_ = std::move(node);
    return w;
  }

  static TensorWord tensor(const TensorWord& l, const TensorWord& r) {
    auto node = std::make_shared<Node>();
    node->left = l.n_;
    node->right = r.n_;
    TensorWord w;
    w.n_ = std::move(node);
    return w;
  }

  bool is_leaf() const { return n_->left == nullptr; }
  bool is_unit_leaf() const { return is_leaf() && n_->id.empty(); }
  const std::string& atom_id() const { return n_->id; }

  TensorWord left() const {
    TensorWord w;
    w.n_ = n_->left;
    return w;
  }
  TensorWord right() const {
    TensorWord w;
    w.n_ = n_->right;
    return w;
  }

  int leaf_count() const {
    if (is_leaf()) return 1;
    return left().leaf_count() + right().leaf_count();
  }

  // Leaf atom ids in order; the unit leaf appears as "".
  void leaves(std::vector<std::string>& out) const {
    if (is_leaf()) {
      out.push_back(n_->id);
      return;
    }
    left().leaves(out);
    right().leaves(out);
  }

  std::vector<std::string> non_unit_leaves() const {
    std::vector<std::string> all, out;
    leaves(all);
    for (auto& id : all)
      if (!id.empty()) out.push_back(id);
    return out;
  }

  bool operator==(const TensorWord& o) const {
    if (n_ == o.n_) return true;
    if (is_leaf() != o.is_leaf()) return false;
    if (is_leaf()) return n_->id == o.n_->id;
    return left() == o.left() && right() == o.right();
  }
  bool operator!=(const TensorWord& o) const { return !(*this == o); }

  std::string to_string() const {
    if (is_leaf()) return is_unit_leaf() ? "I" : n_->id;
    auto wrap = [](const TensorWord& w) {
      return w.is_leaf() ? w.to_string() : "(" + w.to_string() + ")";
    };
    return wrap(left()) + "*" + wrap(right());
  }

 private:
  struct Node {
    std::string id;  // leaf: atom id, empty for the unit
    std::shared_ptr<const Node> left, right;
  };
  std::shared_ptr<const Node> n_;
};

// Left-nested power ((...(a*a)*a...)*a) with k leaves. The empty power is a
// notational device only and never an object.
inline TensorWord left_nested(const TensorWord& atom, int k) {
  if (k < 1) throw EmptyWord();
  TensorWord w = atom;
  for (int i = 1; i < k; ++i) w = TensorWord::tensor(w, atom);
  return w;
}

// Normal form of a word: the left-nested word on its non-unit leaves, or I
// when there are none.
inline TensorWord normal_form_word(const TensorWord& w) {
  std::vector<std::string> ids = w.non_unit_leaves();
  if (ids.empty()) return TensorWord::unit();
  TensorWord out = TensorWord::atom(ids[0]);
  for (std::size_t i = 1; i < ids.size(); ++i) out = TensorWord::tensor(out, TensorWord::atom(ids[i]));
  return out;
}

// A concrete monoidal category of finite-dimensional spaces: atom dimensions,
// one unitor scale c (both unitors multiply by c; the associator stays a
// coordinate identity), and an optional symmetry.
template <class S>
class Instance {
 public:
  static std::shared_ptr<const Instance> make(S proto, std::map<std::string, int> atom_dims, S unitor_scale,
                                              bool symmetric) {
    return make_with_scales(std::move(proto), std::move(atom_dims), unitor_scale, unitor_scale, symmetric);
  }

  // Deliberately inconsistent unitors (left and right scaling differently)
  // give an instance that fails the triangle; used to exercise the failure
  // paths of the axiom checks.
  static std::shared_ptr<const Instance> make_with_scales(S proto, std::map<std::string, int> atom_dims,
                                                          S left_scale, S right_scale, bool symmetric) {
    if (left_scale.is_zero() || right_scale.is_zero()) throw Error("unitor scale must be invertible");
    for (auto& [id, d] : atom_dims)
      if (d < 1) throw Error("atom \"" + id + "\" must have dimension >= 1");
    auto inst = std::make_shared<Instance>();
    inst->proto_ = zero_like(proto);
    inst->atom_dims_ = std::move(atom_dims);
    inst->left_scale_ = std::move(left_scale);
    inst->right_scale_ = std::move(right_scale);
    inst->symmetric_ = symmetric;
    return inst;
  }

  // Same field, same scales, same symmetry, and agreeing atom declarations.
  static bool compatible(const Instance& a, const Instance& b) {
    if (!a.proto_.same_field(b.proto_) || a.left_scale_ != b.left_scale_ ||
        a.right_scale_ != b.right_scale_ || a.symmetric_ != b.symmetric_)
      return false;
    for (auto& [id, d] : a.atom_dims_) {
      auto it = b.atom_dims_.find(id);
      if (it != b.atom_dims_.end() && it->second != d) return false;
    }
    return true;
  }

  const S& proto() const { return proto_; }
  const S& unitor_scale() const { return left_scale_; }
  const S& left_scale() const { return left_scale_; }
  const S& right_scale() const { return right_scale_; }
  bool symmetric() const { return symmetric_; }
  const std::map<std::string, int>& atom_dims() const { return atom_dims_; }

  int atom_dim(const std::string& id) const {
    auto it = atom_dims_.find(id);
    if (it == atom_dims_.end()) throw UnknownAtom(id);
    return it->second;
  }

  int dim(const TensorWord& w) const {
    if (w.is_leaf()) return w.is_unit_leaf() ? 1 : atom_dim(w.atom_id());
    return dim(w.left()) * dim(w.right());
  }

  std::shared_ptr<const Instance> with_atom(const std::string& id, int d) const {
    auto dims = atom_dims_;
    dims[id] = d;
    return make_with_scales(proto_, std::move(dims), left_scale_, right_scale_, symmetric_);
  }

 private:
  S proto_;
  std::map<std::string, int> atom_dims_;
  S left_scale_;
  S right_scale_;
  bool symmetric_ = false;
};

template <class S>
using InstancePtr = std::shared_ptr<const Instance<S>>;

template <class S>
int word_dim(const TensorWord& w, const Instance<S>& inst) {
  return inst.dim(w);
}

}  // namespace hochcat
