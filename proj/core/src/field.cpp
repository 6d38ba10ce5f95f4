#include "hopfalg/field.hpp"

#include <charconv>

#include "hopfalg/errors.hpp"

namespace hopfalg {

bool is_prime_number(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t mod_reduce(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod_reduce(a, p);
  if (new_r == 0) throw Singular("inverse of zero in GF(" + std::to_string(p) + ")");
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return mod_reduce(t, p);
}

Field Field::rationals() { return Field(FieldKind::rationals, 0); }

Field Field::prime(std::int64_t p) {
  if (!is_prime_number(p) || p >= (std::int64_t{1} << 31)) {
    throw Error("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  }
  return Field(FieldKind::prime_field, p);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.substr(0, 3) == "gf:") {
    std::int64_t p = 0;
    auto body = text.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc() || ptr != body.data() + body.size()) {
      throw ParseError("bad field name: " + std::string(text));
    }
    return prime(p);
  }
  throw ParseError("bad field name: " + std::string(text));
}

std::string Field::name() const {
  return is_prime() ? "gf:" + std::to_string(p_) : std::string("q");
}

Scalar::Scalar(const Field& field, std::int64_t value) : field_(field) {
  if (field.is_prime()) {
    residue_ = mod_reduce(value, field.characteristic());
  } else {
    q_ = static_cast<long>(value);
  }
}

Scalar::Scalar(const Field& field, const mpq_class& value) : field_(field) {
  if (field.is_prime()) {
    std::int64_t p = field.characteristic();
    mpz_class num = value.get_num() % p;
    mpz_class den = value.get_den() % p;
    std::int64_t n = mod_reduce(num.get_si(), p);
    std::int64_t d = mod_reduce(den.get_si(), p);
    residue_ = (n * mod_inverse(d, p)) % p;
  } else {
    q_ = value;
    q_.canonicalize();
  }
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
  mpq_class v;
  if (v.set_str(std::string(text), 10) != 0) {
    throw ParseError("bad scalar: " + std::string(text));
  }
  if (v.get_den() == 0) throw ParseError("zero denominator: " + std::string(text));
  v.canonicalize();
  return Scalar(field, v);
}

bool Scalar::is_zero() const { return field_.is_prime() ? residue_ == 0 : q_ == 0; }

std::string Scalar::to_string() const {
  return field_.is_prime() ? std::to_string(residue_) : q_.get_str();
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (field_.is_prime()) return Scalar(field_, residue_ + o.residue_);
  return Scalar(field_, mpq_class(q_ + o.q_));
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (field_.is_prime()) return Scalar(field_, residue_ - o.residue_);
  return Scalar(field_, mpq_class(q_ - o.q_));
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (field_.is_prime()) return Scalar(field_, (residue_ * o.residue_) % field_.characteristic());
  return Scalar(field_, mpq_class(q_ * o.q_));
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw Singular("division by zero");
  if (field_.is_prime()) {
    std::int64_t p = field_.characteristic();
    return Scalar(field_, (residue_ * mod_inverse(o.residue_, p)) % p);
  }
  return Scalar(field_, mpq_class(q_ / o.q_));
}

Scalar Scalar::operator-() const {
  if (field_.is_prime()) return Scalar(field_, -residue_);
  return Scalar(field_, mpq_class(-q_));
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_prime() ? residue_ == o.residue_ : q_ == o.q_;
}

}  // namespace hopfalg
