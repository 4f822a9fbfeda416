#include "redlocal/field.hpp"

#include "redlocal/errors.hpp"

#include <cctype>
#include <charconv>
#include <functional>

namespace redlocal {

namespace {

using u128 = unsigned __int128;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1)
      r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t mpz_mod_u(const mpz_class &v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty())
    throw ParseError("malformed number '" + std::string(whole) + "'");
  for (char c : s)
    if (c < '0' || c > '9')
      throw ParseError("malformed number '" + std::string(whole) + "'");
  mpz_class v(std::string(s), 10);
  return neg ? mpz_class(-v) : v;
}

} // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

FieldCtx FieldCtx::prime(std::uint64_t p) {
  if (!is_prime(p))
    throw NonPrimeModulus("modulus " + std::to_string(p) + " is not prime");
  // Products are formed in 128 bits, so any 64-bit prime works.
  return FieldCtx(p);
}

FieldCtx FieldCtx::make(FieldKind kind, std::uint64_t p) {
  if (kind == FieldKind::Rationals)
    return rationals();
  return prime(p);
}

std::optional<std::uint64_t> FieldCtx::size() const {
  if (modulus_ == 0)
    return std::nullopt;
  return modulus_;
}

FieldElem FieldCtx::zero() const { return from_int(0); }
FieldElem FieldCtx::one() const { return from_int(1); }

FieldElem FieldCtx::from_int(std::int64_t v) const {
  FieldElem e;
  e.modulus_ = modulus_;
  if (modulus_ == 0) {
    e.value_ = mpq_class(static_cast<long>(v));
  } else {
    std::int64_t r = v % static_cast<std::int64_t>(modulus_);
    if (r < 0)
      r += static_cast<std::int64_t>(modulus_);
    e.value_ = static_cast<std::uint64_t>(r);
  }
  return e;
}

FieldElem FieldCtx::from_mpz(const mpz_class &v) const {
  FieldElem e;
  e.modulus_ = modulus_;
  if (modulus_ == 0)
    e.value_ = mpq_class(v);
  else
    e.value_ = mpz_mod_u(v, modulus_);
  return e;
}

FieldElem FieldCtx::from_fraction(const mpz_class &num,
                                  const mpz_class &den) const {
  if (den == 0)
    throw DivisionByZero("zero denominator");
  if (modulus_ == 0) {
    FieldElem e;
    mpq_class q(num, den);
    q.canonicalize();
    e.value_ = std::move(q);
    return e;
  }
  return from_mpz(num) / from_mpz(den);
}

FieldElem FieldCtx::parse(std::string_view text) const {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return from_mpz(parse_integer(text, text));
  return from_fraction(parse_integer(text.substr(0, slash), text),
                       parse_integer(text.substr(slash + 1), text));
}

FieldElem FieldCtx::element(std::uint64_t index) const {
  FieldElem e;
  e.modulus_ = modulus_;
  if (modulus_ == 0)
    e.value_ = mpq_class(mpz_class(std::to_string(index)));
  else
    e.value_ = index % modulus_;
  return e;
}

std::string FieldCtx::to_string() const {
  if (modulus_ == 0)
    return "Q";
  return "Fp:" + std::to_string(modulus_);
}

FieldCtx FieldCtx::from_string(std::string_view text) {
  text = trim(text);
  if (text == "Q" || text == "QQ")
    return rationals();
  if (text.starts_with("Fp:") || text.starts_with("F_")) {
    auto digits = text.substr(3);
    if (text.starts_with("F_"))
      digits = text.substr(2);
    std::uint64_t p = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw ParseError("bad field descriptor '" + std::string(text) + "'");
    return prime(p);
  }
  throw ParseError("bad field descriptor '" + std::string(text) +
                   "' (expected Q or Fp:<p>)");
}

void FieldElem::check_same(const FieldElem &o) const {
  if (modulus_ != o.modulus_)
    throw ContextMismatch("field elements from different contexts: " +
                          field().to_string() + " vs " +
                          o.field().to_string());
}

bool FieldElem::is_zero() const {
  if (modulus_ == 0)
    return sgn(rational()) == 0;
  return residue() == 0;
}

bool FieldElem::is_one() const {
  if (modulus_ == 0)
    return rational() == 1;
  return residue() == 1;
}

FieldElem FieldElem::operator+(const FieldElem &o) const {
  FieldElem r = *this;
  r += o;
  return r;
}

FieldElem FieldElem::operator-(const FieldElem &o) const {
  FieldElem r = *this;
  r -= o;
  return r;
}

FieldElem FieldElem::operator*(const FieldElem &o) const {
  FieldElem r = *this;
  r *= o;
  return r;
}

FieldElem FieldElem::operator/(const FieldElem &o) const {
  return *this * o.inv();
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  if (modulus_ == 0) {
    auto &q = std::get<mpq_class>(r.value_);
    q = -q;
  } else {
    auto &v = std::get<std::uint64_t>(r.value_);
    v = v == 0 ? 0 : modulus_ - v;
  }
  return r;
}

FieldElem &FieldElem::operator+=(const FieldElem &o) {
  check_same(o);
  if (modulus_ == 0) {
    std::get<mpq_class>(value_) += o.rational();
  } else {
    auto &v = std::get<std::uint64_t>(value_);
    std::uint64_t s = v + o.residue();
    v = s >= modulus_ ? s - modulus_ : s;
  }
  return *this;
}

FieldElem &FieldElem::operator-=(const FieldElem &o) {
  check_same(o);
  if (modulus_ == 0) {
    std::get<mpq_class>(value_) -= o.rational();
  } else {
    auto &v = std::get<std::uint64_t>(value_);
    v = v >= o.residue() ? v - o.residue() : v + (modulus_ - o.residue());
  }
  return *this;
}

FieldElem &FieldElem::operator*=(const FieldElem &o) {
  check_same(o);
  if (modulus_ == 0) {
    std::get<mpq_class>(value_) *= o.rational();
  } else {
    auto &v = std::get<std::uint64_t>(value_);
    v = mod_mul(v, o.residue(), modulus_);
  }
  return *this;
}

void FieldElem::sub_mul(const FieldElem &a, const FieldElem &b) {
  check_same(a);
  check_same(b);
  if (modulus_ == 0) {
    mpq_class t = a.rational() * b.rational();
    std::get<mpq_class>(value_) -= t;
  } else {
    auto &v = std::get<std::uint64_t>(value_);
    std::uint64_t t = mod_mul(a.residue(), b.residue(), modulus_);
    v = v >= t ? v - t : v + (modulus_ - t);
  }
}

FieldElem FieldElem::inv() const {
  if (is_zero())
    throw DivisionByZero("inverse of zero");
  FieldElem r = *this;
  if (modulus_ == 0) {
    auto &q = std::get<mpq_class>(r.value_);
    mpq_inv(q.get_mpq_t(), q.get_mpq_t());
  } else {
    std::get<std::uint64_t>(r.value_) =
        mod_pow(residue(), modulus_ - 2, modulus_);
  }
  return r;
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  FieldElem r = field().one();
  FieldElem b = *this;
  while (e) {
    if (e & 1)
      r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool FieldElem::operator==(const FieldElem &o) const {
  if (modulus_ != o.modulus_)
    return false;
  if (modulus_ == 0)
    return rational() == o.rational();
  return residue() == o.residue();
}

FieldElem FieldElem::normalized() const {
  FieldElem r = *this;
  if (modulus_ == 0)
    std::get<mpq_class>(r.value_).canonicalize();
  else
    std::get<std::uint64_t>(r.value_) %= modulus_;
  return r;
}

std::string FieldElem::to_string() const {
  if (modulus_ == 0)
    return rational().get_str();
  return std::to_string(residue());
}

std::size_t FieldElem::hash() const {
  if (modulus_ != 0)
    return std::hash<std::uint64_t>{}(residue() * 0x9e3779b97f4a7c15ULL);
  const auto &q = rational();
  std::size_t h = mpz_get_ui(q.get_num_mpz_t()) * 0x9e3779b97f4a7c15ULL;
  h ^= mpz_get_ui(q.get_den_mpz_t()) + 0x7f4a7c15 + (h << 6) + (h >> 2);
  return h ^ static_cast<std::size_t>(sgn(q.get_num()) + 1);
}

FieldElem field_arith(FieldOp op, const FieldElem &a,
                      const std::optional<FieldElem> &b) {
  auto need_b = [&]() -> const FieldElem & {
    if (!b)
      throw LengthMismatch("binary field operation needs two operands");
    return *b;
  };
  switch (op) {
  case FieldOp::Add:
    return a + need_b();
  case FieldOp::Sub:
    return a - need_b();
  case FieldOp::Mul:
    return a * need_b();
  case FieldOp::Inv:
    return a.inv();
  case FieldOp::Neg:
    return -a;
  }
  return a;
}

} // namespace redlocal
