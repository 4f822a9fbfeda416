#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace redlocal {

enum class FieldKind { Rationals, PrimeField };

class FieldElem;

// Exact coefficient field: Q with arbitrary-precision rationals, or F_p.
class FieldCtx {
public:
  FieldCtx() = default;

  static FieldCtx rationals() { return FieldCtx{}; }
  // Throws NonPrimeModulus when p is not prime.
  static FieldCtx prime(std::uint64_t p);
  static FieldCtx make(FieldKind kind, std::uint64_t p = 0);

  FieldKind kind() const {
    return modulus_ == 0 ? FieldKind::Rationals : FieldKind::PrimeField;
  }
  // 0 for Q.
  std::uint64_t characteristic() const { return modulus_; }
  // Number of elements, or nullopt when infinite.
  std::optional<std::uint64_t> size() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(std::int64_t v) const;
  FieldElem from_mpz(const mpz_class &v) const;
  FieldElem from_fraction(const mpz_class &num, const mpz_class &den) const;
  // Accepts "a", "-a", "a/b" with decimal integers.
  FieldElem parse(std::string_view text) const;
  // The i-th canonical element: i itself over Q, i mod p over F_p.
  FieldElem element(std::uint64_t index) const;

  // "Q" or "Fp:<p>", the same spelling the CLI accepts.
  std::string to_string() const;
  static FieldCtx from_string(std::string_view text);

  bool operator==(const FieldCtx &) const = default;

private:
  friend class FieldElem;
  explicit FieldCtx(std::uint64_t modulus) : modulus_(modulus) {}
  std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

// Element of a FieldCtx. Carries its context so mixed-context arithmetic
// is detected. Representation is canonical: reduced fraction with positive
// denominator, or residue in [0, p).
class FieldElem {
public:
  FieldElem() : value_(mpq_class(0)) {}

  FieldCtx field() const { return FieldCtx(modulus_); }
  std::uint64_t modulus() const { return modulus_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem &o) const;
  FieldElem operator-(const FieldElem &o) const;
  FieldElem operator*(const FieldElem &o) const;
  FieldElem operator/(const FieldElem &o) const;
  FieldElem operator-() const;
  FieldElem &operator+=(const FieldElem &o);
  FieldElem &operator-=(const FieldElem &o);
  FieldElem &operator*=(const FieldElem &o);
  // Throws DivisionByZero on zero.
  FieldElem inv() const;
  FieldElem pow(std::uint64_t e) const;

  // this -= a * b, without temporaries over F_p.
  void sub_mul(const FieldElem &a, const FieldElem &b);

  // Exact equality; elements of different fields are never equal.
  bool operator==(const FieldElem &o) const;

  // Re-applies canonicalization; identity on every constructed element.
  FieldElem normalized() const;

  const mpq_class &rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

  std::string to_string() const;
  std::size_t hash() const;

private:
  friend class FieldCtx;
  void check_same(const FieldElem &o) const;

  std::uint64_t modulus_ = 0;
  std::variant<std::uint64_t, mpq_class> value_;
};

enum class FieldOp { Add, Sub, Mul, Inv, Neg };

// Single entry point mirroring the operation table; b is ignored for
// unary operations.
FieldElem field_arith(FieldOp op, const FieldElem &a,
                      const std::optional<FieldElem> &b = std::nullopt);

} // namespace redlocal
