#pragma once

#include "redlocal/field.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace redlocal {

inline constexpr std::size_t kMaxVars = 8;

enum class VarRole { LocalVars, FiberVars };

// Ordered, named variables. Index i of a fiber variable matches index i of
// the ideal generator it stands for.
struct VarSet {
  std::vector<std::string> names;
  VarRole role = VarRole::LocalVars;

  std::size_t size() const { return names.size(); }
  // -1 when absent.
  int index_of(std::string_view name) const;
  bool operator==(const VarSet &) const = default;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

// Throws InvalidInput on duplicate/empty names or more than kMaxVars.
VarSetPtr make_varset(std::vector<std::string> names, VarRole role);
bool same_varset(const VarSetPtr &a, const VarSetPtr &b);

// Dense exponent vector, at most kMaxVars entries.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(std::span<const unsigned> exps);

  std::size_t size() const { return nvars_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const;

  bool divides(const Monomial &o) const;
  Monomial operator*(const Monomial &o) const;
  Monomial lcm(const Monomial &o) const;
  Monomial gcd(const Monomial &o) const;
  // o must divide *this.
  Monomial operator/(const Monomial &o) const;
  // Exponent-wise max(a - b, 0): generator of (this) : (o).
  Monomial colon(const Monomial &o) const;
  // Indices with positive exponent.
  std::vector<std::size_t> support() const;
  bool is_one() const { return degree() == 0; }

  bool operator==(const Monomial &o) const;
  std::size_t hash() const;

  std::string to_string(const VarSet &vars) const;

private:
  std::array<std::uint16_t, kMaxVars> exps_{};
  std::uint8_t nvars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial &m) const { return m.hash(); }
};

enum class MonomialOrder { GrevLex, GradedLex };

// Throws LengthMismatch for monomials over different variable counts.
std::strong_ordering monomial_cmp(MonomialOrder order, const Monomial &a,
                                  const Monomial &b);

struct Term {
  Monomial mono;
  FieldElem coeff;
};

// Sparse polynomial; terms are kept sorted by decreasing GrevLex with no
// zero coefficients and no repeated monomials.
class Poly {
public:
  Poly() = default;
  Poly(VarSetPtr vars, FieldCtx field) : vars_(std::move(vars)), field_(field) {}

  // Combines repeated monomials and drops zeros.
  static Poly from_terms(VarSetPtr vars, FieldCtx field,
                         std::vector<Term> terms);
  static Poly constant(VarSetPtr vars, const FieldElem &c);
  static Poly monomial(VarSetPtr vars, const Monomial &m, const FieldElem &c);
  static Poly variable(VarSetPtr vars, FieldCtx field, std::size_t index);

  const VarSetPtr &vars() const { return vars_; }
  const FieldCtx &field() const { return field_; }
  const std::vector<Term> &terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Leading term under the given order; poly must be nonzero.
  const Term &lead(MonomialOrder order = MonomialOrder::GrevLex) const;
  // Highest total degree; -1 for zero.
  int total_degree() const;
  // Lowest total degree (the order in the local ring); -1 for zero.
  int low_degree() const;
  bool is_homogeneous() const;
  bool is_homogeneous(unsigned d) const;
  bool is_monomial() const { return terms_.size() == 1; }

  Poly operator+(const Poly &o) const;
  Poly operator-(const Poly &o) const;
  Poly operator*(const Poly &o) const;
  Poly operator-() const;
  Poly scaled(const FieldElem &c) const;
  Poly mul_term(const Monomial &m, const FieldElem &c) const;
  // Drops all terms of total degree >= order.
  Poly truncated(unsigned order) const;
  // Product with terms of degree >= order discarded early.
  Poly mul_truncated(const Poly &o, unsigned order) const;
  // Scales so the GrevLex leading coefficient (or the given order's) is 1.
  Poly monic(MonomialOrder order = MonomialOrder::GrevLex) const;

  bool operator==(const Poly &o) const;

  std::string to_string() const;

private:
  void check_compatible(const Poly &o) const;
  void sort_and_combine();

  VarSetPtr vars_;
  FieldCtx field_;
  std::vector<Term> terms_;
};

// Parses `term (("+"|"-") term)*`; a term is '*'-separated factors, each a
// rational literal or var("^"exp). Variables must be declared in vars.
Poly parse_poly(std::string_view text, const VarSetPtr &vars, FieldCtx field);

enum class PolyOp { Add, Sub, Mul };
Poly poly_arith(PolyOp op, const Poly &f, const Poly &g);

// The form sum_i c_i X_i; at least one coefficient nonzero.
class LinearForm {
public:
  explicit LinearForm(std::vector<FieldElem> coeffs);

  std::size_t size() const { return coeffs_.size(); }
  const std::vector<FieldElem> &coeffs() const { return coeffs_; }
  const FieldElem &operator[](std::size_t i) const { return coeffs_[i]; }
  FieldCtx field() const { return coeffs_.front().field(); }

  Poly to_poly(const VarSetPtr &fiber_vars) const;
  std::string to_string(const VarSet &fiber_vars) const;
  bool operator==(const LinearForm &) const = default;

private:
  std::vector<FieldElem> coeffs_;
};

LinearForm operator+(const LinearForm &a, const LinearForm &b);

// sum_i c_i * gens[i]. Throws LengthMismatch when sizes differ.
Poly apply_form(const LinearForm &form, std::span<const Poly> gens);

} // namespace redlocal
