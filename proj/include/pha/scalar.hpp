#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <string_view>

namespace pha {

// Q when characteristic() == 0, otherwise F_p.
class Field {
 public:
  constexpr Field() = default;
  static Field rational() { return Field(); }
  static Field prime(std::uint64_t p);
  // "rational", "Q", "fp:7"
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;
  bool operator==(const Field&) const = default;

 private:
  std::uint64_t p_ = 0;
};

// Exact field element. A scalar built from an integer or fraction literal is
// unbound: it lives in the prime subfield of every field and adopts the field
// of whatever it is combined with. Bound scalars of different fields refuse to
// mix.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  Scalar(mpq_class value, Field field);

  static Scalar zero(Field field) { return Scalar(mpq_class(0), field); }
  static Scalar one(Field field) { return Scalar(mpq_class(1), field); }
  // "p/q" or "n"; binds to `field`.
  static Scalar parse(std::string_view text, Field field);

  bool bound() const { return bound_; }
  Field field() const { return bound_ ? field_ : Field(); }
  Scalar in(Field field) const;

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  const mpq_class& value() const { return q_; }
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const;

  // this += a*b without temporaries where possible
  void add_product(const Scalar& a, const Scalar& b);

 private:
  void adopt(const Scalar& o);
  void reduce();

  mpq_class q_;
  Field field_;
  bool bound_ = false;
};

}  // namespace pha
