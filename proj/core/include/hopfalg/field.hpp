#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopfalg {

enum class FieldKind { rationals, prime_field };

class Field {
 public:
  Field() = default;

  static Field rationals();
  static Field prime(std::int64_t p);
  // "q", "gf:7"
  static Field parse(std::string_view text);

  FieldKind kind() const { return kind_; }
  bool is_prime() const { return kind_ == FieldKind::prime_field; }
  std::int64_t characteristic() const { return p_; }
  std::string name() const;

  bool operator==(const Field& other) const = default;

 private:
  Field(FieldKind kind, std::int64_t p) : kind_(kind), p_(p) {}
  FieldKind kind_ = FieldKind::rationals;
  std::int64_t p_ = 0;
};

// A single field element. Used at the edges (parsing, reports, tests);
// bulk arithmetic lives inside Mat.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Field& field, std::int64_t value);
  Scalar(const Field& field, const mpq_class& value);

  static Scalar parse(const Field& field, std::string_view text);

  const Field& field() const { return field_; }
  std::int64_t residue() const { return residue_; }
  const mpq_class& rational() const { return q_; }

  bool is_zero() const;
  std::string to_string() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  bool operator==(const Scalar& o) const;

 private:
  Field field_;
  std::int64_t residue_ = 0;
  mpq_class q_;
};

std::int64_t mod_inverse(std::int64_t a, std::int64_t p);
std::int64_t mod_reduce(std::int64_t a, std::int64_t p);
bool is_prime_number(std::int64_t n);

}  // namespace hopfalg
