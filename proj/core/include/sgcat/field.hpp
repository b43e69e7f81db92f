#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace sgcat {

// Exit-code contract shared by the CLI and the verifier.
enum class ErrorClass { Verify = 1, Input = 2, Internal = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), cls_(cls), code_(std::move(code)) {}
  ErrorClass error_class() const { return cls_; }
  const std::string& code() const { return code_; }

 private:
  ErrorClass cls_;
  std::string code_;
};

inline Error input_error(const std::string& code, const std::string& msg) {
  return Error(ErrorClass::Input, code, msg);
}
inline Error internal_error(const std::string& code, const std::string& msg) {
  return Error(ErrorClass::Internal, code, msg);
}

// One exact scalar: a residue mod p, or an arbitrary-precision rational.
// Which alternative is active is decided by the owning Field.
using Scalar = std::variant<std::int64_t, mpq_class>;

// An exact base field: F_p for a prime p, or Q.
// Fields are small value types; all scalar arithmetic goes through them.
class Field {
 public:
  enum class Kind { Prime, Rationals };

  static Field prime(std::int64_t p);
  static Field rationals() { return Field(Kind::Rationals, 0); }

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::Prime; }
  std::int64_t modulus() const { return p_; }
  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  // Accepts "3", "-4", "2/5".
  Scalar parse(const std::string& s) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool eq(const Scalar& a, const Scalar& b) const;

  std::string str(const Scalar& a) const;
  std::string describe() const;

 private:
  Field(Kind k, std::int64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::int64_t p_;
};

}  // namespace sgcat
