#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "errors.hpp"

namespace hochcat {

enum class FieldKind { Rationals, PrimeField };

// Runtime field descriptor. Scalar values are Rat or Fp below; this type is
// what CLI input dispatches on and what reports carry.
struct Field {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;  // modulus, PrimeField only

  static Field rationals() { return Field{FieldKind::Rationals, 0}; }

  static Field prime(std::uint64_t p) {
    if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) throw NotPrime(p);
    return Field{FieldKind::PrimeField, p};
  }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string to_string() const {
    return kind == FieldKind::Rationals ? "Q" : "F" + std::to_string(p);
  }
};

namespace detail {

// Accepts ASCII '-' and the unicode minus sign U+2212.
inline std::string normalize_minus(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    if (i + 2 < s.size() && (unsigned char)s[i] == 0xE2 && (unsigned char)s[i + 1] == 0x88 &&
        (unsigned char)s[i + 2] == 0x92) {
      out += '-';
      i += 3;
    } else {
      out += s[i++];
    }
  }
  return out;
}

inline bool split_fraction(const std::string& text, std::string& num, std::string& den) {
  std::string s = normalize_minus(text);
  std::size_t a = s.find_first_not_of(" \t");
  std::size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return false;
  s = s.substr(a, b - a + 1);
  std::size_t slash = s.find('/');
  num = slash == std::string::npos ? s : s.substr(0, slash);
  den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto digits_ok = [](const std::string& t, bool sign) {
    std::size_t i = 0;
    if (sign && i < t.size() && t[i] == '-') ++i;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  return digits_ok(num, true) && digits_ok(den, true);
}

}  // namespace detail

// Exact rational scalar. Always kept canonical: reduced, positive denominator
// (mpq_class arithmetic maintains this; constructors canonicalize).
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(long n, long d) {
    if (d == 0) throw DivisionByZero();
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Field field() { return Field::rationals(); }

  static Rat parse(const std::string& text) {
    std::string num, den;
    if (!detail::split_fraction(text, num, den)) throw BadScalar(text);
    mpz_class n(num), d(den);
    if (d == 0) throw BadScalar(text);
    Rat r;
    r.v_ = mpq_class(n, d);
    r.v_.canonicalize();
    return r;
  }

  bool is_zero() const { return v_ == 0; }
  bool same_field(const Rat&) const { return true; }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
  }
  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }

  Rat inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rat(mpq_class(1) / v_);
  }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& value() const { return v_; }

  std::string to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  mpq_class v_;
};

// Prime-field scalar: least non-negative residue mod p, p < 2^31 so that
// products stay inside 64 bits.
class Fp {
 public:
  Fp() : v_(0), p_(2) {}
  Fp(std::int64_t n, std::uint64_t p) : p_(p) {
    std::int64_t m = n % (std::int64_t)p;
    if (m < 0) m += (std::int64_t)p;
    v_ = (std::uint64_t)m;
  }

  static Fp from_field(const Field& f, std::int64_t n) { return Fp(n, f.p); }

  Field field() const { return Field{FieldKind::PrimeField, p_}; }

  static Fp parse_in(std::uint64_t p, const std::string& text) {
    std::string num, den;
    if (!detail::split_fraction(text, num, den)) throw BadScalar(text);
    mpz_class n(num), d(den);
    mpz_class np = n % (long)p, dp = d % (long)p;
    Fp a((np.get_si() + (long)p) % (long)p, p);
    Fp b((dp.get_si() + (long)p) % (long)p, p);
    if (b.is_zero()) throw BadScalar(text);
    return a / b;
  }

  bool is_zero() const { return v_ == 0; }
  bool same_field(const Fp& o) const { return p_ == o.p_; }

  std::uint64_t residue() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  Fp operator-() const { return Fp(v_ == 0 ? 0 : (std::int64_t)(p_ - v_), p_); }
  Fp& operator+=(const Fp& o) {
    check(o);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    check(o);
    v_ = (v_ * o.v_) % p_;
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  Fp inverse() const {
    if (v_ == 0) throw DivisionByZero();
    // extended Euclid
    std::int64_t a = (std::int64_t)v_, m = (std::int64_t)p_;
    std::int64_t x0 = 0, x1 = 1;
    while (a > 1) {
      std::int64_t q = a / m;
      std::int64_t t = m;
      m = a % m;
      a = t;
      t = x0;
      x0 = x1 - q * x0;
      x1 = t;
    }
    return Fp(x1, p_);
  }

  std::string to_string() const { return std::to_string(v_); }

 private:
  void check(const Fp& o) const {
    if (p_ != o.p_) throw MixedFields("residues modulo " + std::to_string(p_) + " and " + std::to_string(o.p_));
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

// Uniform construction helpers, keyed by a prototype scalar that carries the
// field parameters.
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Fp zero_like(const Fp& s) { return Fp(0, s.modulus()); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Fp one_like(const Fp& s) { return Fp(1, s.modulus()); }
inline Rat from_int(const Rat&, long n) { return Rat(n); }
inline Fp from_int(const Fp& s, long n) { return Fp(n, s.modulus()); }
inline Rat parse_like(const Rat&, const std::string& t) { return Rat::parse(t); }
inline Fp parse_like(const Fp& s, const std::string& t) { return Fp::parse_in(s.modulus(), t); }
inline Field field_of(const Rat&) { return Field::rationals(); }
inline Field field_of(const Fp& s) { return s.field(); }

}  // namespace hochcat
