#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "seamrep/diagram.hpp"
#include "seamrep/qscalar.hpp"

namespace seamrep {

// Finite linear combination of same-shape diagrams, zero terms pruned.
template <class S>
class Element {
 public:
  using Terms = std::map<Diagram, S>;

  Element() = default;
  Element(int left, int right) : left_(left), right_(right) {}
  explicit Element(const Diagram& d, S coef = S(1)) : left_(d.left()), right_(d.right()) { add(d, coef); }

  int left() const { return left_; }
  int right() const { return right_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  S coeff(const Diagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? S(0) : it->second;
  }

  void add(const Diagram& d, const S& c) {
    if (d.left() != left_ || d.right() != right_) throw ShapeMismatch("term shape differs from element shape");
    if (is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(d, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    check_shape(o);
    for (const auto& [d, c] : o.terms_) add(d, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    check_shape(o);
    for (const auto& [d, c] : o.terms_) add(d, -c);
    return *this;
  }
  Element& operator*=(const S& s) {
    if (is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [d, c] : terms_) c *= s;
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const S& s, Element a) { return a *= s; }
  friend Element operator*(Element a, const S& s) { return a *= s; }
  friend bool operator==(const Element& a, const Element& b) {
    return a.left_ == b.left_ && a.right_ == b.right_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  // Terms whose diagram satisfies pred.
  template <class Pred>
  Element filtered(Pred pred) const {
    Element r(left_, right_);
    for (const auto& [d, c] : terms_)
      if (pred(d)) r.terms_.emplace(d, c);
    return r;
  }

 private:
  static bool is_zero(const S& c) { return seamrep::is_zero(c); }
  void check_shape(const Element& o) const {
    if (o.left_ != left_ || o.right_ != right_) throw ShapeMismatch("element shapes differ");
  }
  int left_ = 0;
  int right_ = 0;
  Terms terms_;
};

// Product with beta per closed loop.
template <class F>
Element<typename F::Scalar> mul(const F& f, const Element<typename F::Scalar>& x,
                                const Element<typename F::Scalar>& y) {
  using S = typename F::Scalar;
  if (x.right() != y.left()) throw ShapeMismatch("mul: inner shapes differ");
  Element<S> r(x.left(), y.right());
  std::vector<S> bp = beta_powers(f, 1);
  for (const auto& [dx, cx] : x.terms()) {
    for (const auto& [dy, cy] : y.terms()) {
      auto [d, loops] = compose(dx, dy);
      while (static_cast<int>(bp.size()) <= loops) bp.push_back(bp.back() * bp[1]);
      r.add(d, cx * cy * bp[static_cast<size_t>(loops)]);
    }
  }
  return r;
}

template <class F>
Element<typename F::Scalar> mul(const F& f, const Element<typename F::Scalar>& x, const Diagram& y) {
  return mul(f, x, Element<typename F::Scalar>(y));
}

template <class F>
Element<typename F::Scalar> mul(const F& f, const Diagram& x, const Element<typename F::Scalar>& y) {
  return mul(f, Element<typename F::Scalar>(x), y);
}

template <class S>
Element<S> reflect(const Element<S>& x) {
  Element<S> r(x.right(), x.left());
  for (const auto& [d, c] : x.terms()) r.add(reflect(d), c);
  return r;
}

template <class S>
Element<S> tensor(const Diagram& a, const Element<S>& x) {
  Element<S> r(a.left() + x.left(), a.right() + x.right());
  for (const auto& [d, c] : x.terms()) r.add(tensor(a, d), c);
  return r;
}

template <class S>
Element<S> identity_element(int n) {
  return Element<S>(identity(n));
}

}  // namespace seamrep
