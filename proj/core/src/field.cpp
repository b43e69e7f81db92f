#include "sgcat/field.hpp"

namespace sgcat {

namespace {

bool is_prime_int(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

// Extended Euclid; p prime, 0 < a < p.
std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return mod_pos(t, p);
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (!is_prime_int(p)) throw input_error("BadField", "modulus " + std::to_string(p) + " is not prime");
  if (p > (std::int64_t(1) << 31)) throw input_error("BadField", "modulus too large");
  return Field(Kind::Prime, p);
}

Scalar Field::zero() const {
  if (kind_ == Kind::Prime) return std::int64_t(0);
  return mpq_class(0);
}

Scalar Field::one() const {
  if (kind_ == Kind::Prime) return std::int64_t(1);
  return mpq_class(1);
}

Scalar Field::from_int(std::int64_t n) const {
  if (kind_ == Kind::Prime) return mod_pos(n, p_);
  return mpq_class(static_cast<long>(n));
}

Scalar Field::parse(const std::string& s) const {
  auto slash = s.find('/');
  if (kind_ == Kind::Prime) {
    if (slash != std::string::npos) {
      Scalar n = parse(s.substr(0, slash));
      Scalar d = parse(s.substr(slash + 1));
      return div(n, d);
    }
    try {
      return from_int(std::stoll(s));
    } catch (const std::exception&) {
      throw input_error("BadScalar", "cannot parse '" + s + "' over " + describe());
    }
  }
  try {
    mpq_class q(s);
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    throw input_error("BadScalar", "cannot parse '" + s + "' as a rational");
  }
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Prime) return mod_pos(std::get<std::int64_t>(a) + std::get<std::int64_t>(b), p_);
  return mpq_class(std::get<mpq_class>(a) + std::get<mpq_class>(b));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Prime) return mod_pos(std::get<std::int64_t>(a) - std::get<std::int64_t>(b), p_);
  return mpq_class(std::get<mpq_class>(a) - std::get<mpq_class>(b));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Prime) {
    // p < 2^31, so the product fits in int64.
    return mod_pos(std::get<std::int64_t>(a) * std::get<std::int64_t>(b), p_);
  }
  return mpq_class(std::get<mpq_class>(a) * std::get<mpq_class>(b));
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == Kind::Prime) return mod_pos(-std::get<std::int64_t>(a), p_);
  return mpq_class(-std::get<mpq_class>(a));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw internal_error("DivisionByZero", "inverse of zero");
  if (kind_ == Kind::Prime) return mod_inv(std::get<std::int64_t>(a), p_);
  return mpq_class(1 / std::get<mpq_class>(a));
}

bool Field::is_zero(const Scalar& a) const {
  if (kind_ == Kind::Prime) return std::get<std::int64_t>(a) == 0;
  return std::get<mpq_class>(a) == 0;
}

bool Field::is_one(const Scalar& a) const {
  if (kind_ == Kind::Prime) return std::get<std::int64_t>(a) == 1;
  return std::get<mpq_class>(a) == 1;
}

bool Field::eq(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Prime) return std::get<std::int64_t>(a) == std::get<std::int64_t>(b);
  return std::get<mpq_class>(a) == std::get<mpq_class>(b);
}

std::string Field::str(const Scalar& a) const {
  if (kind_ == Kind::Prime) return std::to_string(std::get<std::int64_t>(a));
  return std::get<mpq_class>(a).get_str();
}

std::string Field::describe() const {
  if (kind_ == Kind::Prime) return "F_" + std::to_string(p_);
  return "Q";
}

}  // namespace sgcat
