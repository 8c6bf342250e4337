#include "pha/scalar.hpp"

#include <charconv>

#include "pha/errors.hpp"

namespace pha {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

mpz_class modulus(Field f) { return mpz_class(std::to_string(f.characteristic())); }

// Maps a rational into [0, p).
mpq_class to_fp(const mpq_class& q, Field f) {
  mpz_class p = modulus(f);
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  if (q.get_den() == 1) return mpq_class(num);
  mpz_class den = q.get_den() % p;
  mpz_class inv;
  if (den == 0 || mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    fail(ErrorKind::DivisionByZero, "denominator vanishes in " + f.name());
  mpz_class r = (num * inv) % p;
  return mpq_class(r);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, "not a prime: " + std::to_string(p));
  Field f;
  f.p_ = p;
  return f;
}

Field Field::parse(std::string_view text) {
  if (text == "rational" || text == "Q" || text == "q") return rational();
  if (text.substr(0, 3) == "fp:") {
    std::uint64_t p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      fail(ErrorKind::ParseError, "bad field: " + std::string(text));
    return prime(p);
  }
  fail(ErrorKind::ParseError, "bad field: " + std::string(text));
}

std::string Field::name() const { return p_ == 0 ? "rational" : "fp:" + std::to_string(p_); }

Scalar::Scalar(long num, long den) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar::Scalar(mpq_class value, Field field) : q_(std::move(value)), field_(field), bound_(true) {
  q_.canonicalize();
  reduce();
}

Scalar Scalar::parse(std::string_view text, Field field) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) fail(ErrorKind::ParseError, "empty scalar");
  if (s.front() == '+') s.erase(s.begin());
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  mpq_class q;
  if (slash == std::string::npos) {
    if (!valid_int(s)) fail(ErrorKind::ParseError, "bad scalar: " + s);
    q = mpq_class(mpz_class(s));
  } else {
    std::string n = s.substr(0, slash), d = s.substr(slash + 1);
    if (!valid_int(n) || !valid_int(d)) fail(ErrorKind::ParseError, "bad scalar: " + s);
    mpz_class dz(d);
    if (dz == 0) fail(ErrorKind::DivisionByZero, "zero denominator: " + s);
    q = mpq_class(mpz_class(n), dz);
    q.canonicalize();
  }
  return Scalar(q, field);
}

Scalar Scalar::in(Field field) const {
  if (bound_) {
    if (field_ != field)
      fail(ErrorKind::FieldMismatch, field_.name() + " value used in " + field.name());
    return *this;
  }
  return Scalar(q_, field);
}

void Scalar::reduce() {
  if (bound_ && !field_.is_rational()) q_ = to_fp(q_, field_);
}

void Scalar::adopt(const Scalar& o) {
  if (!o.bound_) return;
  if (bound_) {
    if (field_ != o.field_)
      fail(ErrorKind::FieldMismatch, field_.name() + " vs " + o.field_.name());
    return;
  }
  field_ = o.field_;
  bound_ = true;
  reduce();
}

std::string Scalar::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.q_ = -r.q_;
  r.reduce();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.bound_ && !bound_) adopt(o);
  if (bound_ && o.bound_ && field_ != o.field_) adopt(o);
  if (bound_ && !o.bound_ && !field_.is_rational()) {
    q_ += to_fp(o.q_, field_);
  } else {
    q_ += o.q_;
  }
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.bound_ && !bound_) adopt(o);
  if (bound_ && o.bound_ && field_ != o.field_) adopt(o);
  if (bound_ && !o.bound_ && !field_.is_rational()) {
    q_ *= to_fp(o.q_, field_);
  } else {
    q_ *= o.q_;
  }
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  if (o.bound_ && !bound_) adopt(o);
  if (bound_ && o.bound_ && field_ != o.field_) adopt(o);
  if (bound_ && !field_.is_rational()) {
    mpq_class inv = to_fp(mpq_class(1) / (o.bound_ ? o.q_ : to_fp(o.q_, field_)), field_);
    q_ *= inv;
  } else {
    q_ /= o.q_;
  }
  reduce();
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) {
    adopt(a);
    adopt(b);
    return;
  }
  if (!bound_ && !a.bound_ && !b.bound_) {
    q_ += a.q_ * b.q_;
    return;
  }
  if (bound_ && field_.is_rational() && (!a.bound_ || a.field_ == field_) &&
      (!b.bound_ || b.field_ == field_)) {
    q_ += a.q_ * b.q_;
    return;
  }
  *this += a * b;
}

bool Scalar::operator==(const Scalar& o) const {
  if (bound_ == o.bound_) {
    if (bound_ && field_ != o.field_)
      fail(ErrorKind::FieldMismatch, field_.name() + " vs " + o.field_.name());
    return q_ == o.q_;
  }
  const Scalar& b = bound_ ? *this : o;
  const Scalar& u = bound_ ? o : *this;
  if (b.field_.is_rational()) return b.q_ == u.q_;
  return b.q_ == to_fp(u.q_, b.field_);
}

}  // namespace pha
