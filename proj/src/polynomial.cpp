#include "redlocal/polynomial.hpp"

#include "redlocal/errors.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace redlocal {

int VarSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name)
      return static_cast<int>(i);
  return -1;
}

VarSetPtr make_varset(std::vector<std::string> names, VarRole role) {
  if (names.size() > kMaxVars)
    throw InvalidInput("at most " + std::to_string(kMaxVars) +
                       " variables are supported");
  std::unordered_set<std::string> seen;
  for (const auto &n : names) {
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n.front())))
      throw InvalidInput("bad variable name '" + n + "'");
    for (char c : n)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw InvalidInput("bad variable name '" + n + "'");
    if (!seen.insert(n).second)
      throw InvalidInput("duplicate variable name '" + n + "'");
  }
  return std::make_shared<const VarSet>(VarSet{std::move(names), role});
}

bool same_varset(const VarSetPtr &a, const VarSetPtr &b) {
  if (a == b)
    return true;
  if (!a || !b)
    return false;
  return *a == *b;
}

// Monomial

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVars)
    throw InvalidInput("too many variables");
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exps)
    : Monomial(std::span<const unsigned>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const unsigned> exps) : Monomial(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i)
    set(i, exps[i]);
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > 0xffff)
    throw InvalidInput("exponent too large");
  exps_[i] = static_cast<std::uint16_t>(e);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (std::size_t i = 0; i < nvars_; ++i)
    d += exps_[i];
  return d;
}

bool Monomial::divides(const Monomial &o) const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] > o.exps_[i])
      return false;
  return true;
}

Monomial Monomial::operator*(const Monomial &o) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i)
    r.set(i, static_cast<unsigned>(exps_[i]) + o.exps_[i]);
  return r;
}

Monomial Monomial::lcm(const Monomial &o) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i)
    r.exps_[i] = std::max(exps_[i], o.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial &o) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i)
    r.exps_[i] = std::min(exps_[i], o.exps_[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial &o) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i)
    r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - o.exps_[i]);
  return r;
}

Monomial Monomial::colon(const Monomial &o) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i)
    r.exps_[i] = exps_[i] > o.exps_[i]
                     ? static_cast<std::uint16_t>(exps_[i] - o.exps_[i])
                     : 0;
  return r;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] > 0)
      s.push_back(i);
  return s;
}

bool Monomial::operator==(const Monomial &o) const {
  return nvars_ == o.nvars_ &&
         std::equal(exps_.begin(), exps_.begin() + nvars_, o.exps_.begin());
}

std::size_t Monomial::hash() const {
  std::size_t h = nvars_;
  for (std::size_t i = 0; i < nvars_; ++i)
    h = h * 1000003u ^ exps_[i];
  return h;
}

std::string Monomial::to_string(const VarSet &vars) const {
  std::string s;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] == 0)
      continue;
    if (!s.empty())
      s += '*';
    s += vars.names[i];
    if (exps_[i] > 1)
      s += '^' + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

std::strong_ordering monomial_cmp(MonomialOrder order, const Monomial &a,
                                  const Monomial &b) {
  if (a.size() != b.size())
    throw LengthMismatch("monomials over different variable counts");
  unsigned da = a.degree(), db = b.degree();
  if (da != db)
    return da <=> db;
  const std::size_t n = a.size();
  if (order == MonomialOrder::GradedLex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i])
        return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i])
      return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

// Poly

namespace {

bool grevlex_greater(const Monomial &a, const Monomial &b) {
  return monomial_cmp(MonomialOrder::GrevLex, a, b) > 0;
}

} // namespace

void Poly::sort_and_combine() {
  std::sort(terms_.begin(), terms_.end(), [](const Term &a, const Term &b) {
    return grevlex_greater(a.mono, b.mono);
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto &t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term &t) { return t.coeff.is_zero(); });
  terms_ = std::move(out);
}

Poly Poly::from_terms(VarSetPtr vars, FieldCtx field, std::vector<Term> terms) {
  Poly p(std::move(vars), field);
  for (const auto &t : terms) {
    if (t.mono.size() != p.vars_->size())
      throw LengthMismatch("term has wrong number of exponents");
    if (!(t.coeff.field() == field))
      throw ContextMismatch("term coefficient from a different field");
  }
  p.terms_ = std::move(terms);
  p.sort_and_combine();
  return p;
}

Poly Poly::constant(VarSetPtr vars, const FieldElem &c) {
  Monomial one(vars->size());
  return monomial(std::move(vars), one, c);
}

Poly Poly::monomial(VarSetPtr vars, const Monomial &m, const FieldElem &c) {
  Poly p(std::move(vars), c.field());
  if (!c.is_zero())
    p.terms_.push_back({m, c});
  return p;
}

Poly Poly::variable(VarSetPtr vars, FieldCtx field, std::size_t index) {
  Monomial m(vars->size());
  m.set(index, 1);
  return monomial(std::move(vars), m, field.one());
}

const Term &Poly::lead(MonomialOrder order) const {
  if (order == MonomialOrder::GrevLex)
    return terms_.front();
  const Term *best = &terms_.front();
  for (const auto &t : terms_)
    if (monomial_cmp(order, t.mono, best->mono) > 0)
      best = &t;
  return *best;
}

int Poly::total_degree() const {
  if (terms_.empty())
    return -1;
  return static_cast<int>(terms_.front().mono.degree());
}

int Poly::low_degree() const {
  if (terms_.empty())
    return -1;
  return static_cast<int>(terms_.back().mono.degree());
}

bool Poly::is_homogeneous() const {
  return terms_.empty() ||
         terms_.front().mono.degree() == terms_.back().mono.degree();
}

bool Poly::is_homogeneous(unsigned d) const {
  return terms_.empty() || (terms_.front().mono.degree() == d &&
                            terms_.back().mono.degree() == d);
}

void Poly::check_compatible(const Poly &o) const {
  if (!same_varset(vars_, o.vars_))
    throw VarSetMismatch("polynomials over different variable sets");
  if (!(field_ == o.field_))
    throw ContextMismatch("polynomials over different fields");
}

Poly Poly::operator+(const Poly &o) const {
  check_compatible(o);
  Poly r(vars_, field_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin(), j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() ||
        (i != terms_.end() && grevlex_greater(i->mono, j->mono))) {
      r.terms_.push_back(*i++);
    } else if (i == terms_.end() || grevlex_greater(j->mono, i->mono)) {
      r.terms_.push_back(*j++);
    } else {
      FieldElem c = i->coeff + j->coeff;
      if (!c.is_zero())
        r.terms_.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto &t : r.terms_)
    t.coeff = -t.coeff;
  return r;
}

Poly Poly::operator-(const Poly &o) const { return *this + (-o); }

Poly Poly::operator*(const Poly &o) const {
  return mul_truncated(o, ~0u);
}

Poly Poly::mul_truncated(const Poly &o, unsigned order) const {
  check_compatible(o);
  std::unordered_map<Monomial, FieldElem, MonomialHash> acc;
  for (const auto &a : terms_) {
    for (const auto &b : o.terms_) {
      Monomial m = a.mono * b.mono;
      if (m.degree() >= order)
        continue;
      auto [it, fresh] = acc.try_emplace(m, a.coeff * b.coeff);
      if (!fresh)
        it->second += a.coeff * b.coeff;
    }
  }
  Poly r(vars_, field_);
  r.terms_.reserve(acc.size());
  for (auto &[m, c] : acc)
    if (!c.is_zero())
      r.terms_.push_back({m, std::move(c)});
  std::sort(r.terms_.begin(), r.terms_.end(), [](const Term &a, const Term &b) {
    return grevlex_greater(a.mono, b.mono);
  });
  return r;
}

Poly Poly::scaled(const FieldElem &c) const {
  Poly r(vars_, field_);
  if (c.is_zero())
    return r;
  r.terms_ = terms_;
  for (auto &t : r.terms_)
    t.coeff *= c;
  return r;
}

Poly Poly::mul_term(const Monomial &m, const FieldElem &c) const {
  Poly r(vars_, field_);
  if (c.is_zero())
    return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves GrevLex order.
  for (const auto &t : terms_)
    r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Poly Poly::truncated(unsigned order) const {
  Poly r(vars_, field_);
  for (const auto &t : terms_)
    if (t.mono.degree() < order)
      r.terms_.push_back(t);
  return r;
}

Poly Poly::monic(MonomialOrder order) const {
  if (terms_.empty())
    return *this;
  return scaled(lead(order).coeff.inv());
}

bool Poly::operator==(const Poly &o) const {
  if (!same_varset(vars_, o.vars_) || !(field_ == o.field_))
    return false;
  if (terms_.size() != o.terms_.size())
    return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) ||
        !(terms_[i].coeff == o.terms_[i].coeff))
      return false;
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty())
    return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto &t = terms_[k];
    std::string c = t.coeff.to_string();
    bool neg = false;
    if (field_.kind() == FieldKind::Rationals && c.front() == '-') {
      neg = true;
      c.erase(0, 1);
    }
    if (k == 0)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (t.mono.is_one()) {
      s += c;
    } else {
      if (c != "1")
        s += c + "*";
      s += t.mono.to_string(*vars_);
    }
  }
  return s;
}

Poly poly_arith(PolyOp op, const Poly &f, const Poly &g) {
  switch (op) {
  case PolyOp::Add:
    return f + g;
  case PolyOp::Sub:
    return f - g;
  case PolyOp::Mul:
    return f * g;
  }
  return f;
}

// Parser

namespace {

class PolyParser {
public:
  PolyParser(std::string_view text, const VarSetPtr &vars, FieldCtx field)
      : vars_(vars), field_(field) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c)))
        src_ += c;
  }

  Poly parse() {
    if (src_.empty())
      fail("empty polynomial");
    std::vector<Term> terms;
    bool neg = false;
    if (peek() == '+' || peek() == '-')
      neg = src_[pos_++] == '-';
    terms.push_back(term(neg));
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c != '+' && c != '-')
        fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return Poly::from_terms(vars_, field_, std::move(terms));
  }

private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" +
                     src_ + "'");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected digits");
    return src_.substr(start, pos_ - start);
  }

  Term term(bool neg) {
    FieldElem coeff = field_.one();
    Monomial mono(vars_->size());
    bool first = true;
    while (true) {
      if (!first) {
        if (peek() != '*')
          break;
        ++pos_;
      }
      first = false;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = digits();
        std::string den = "1";
        if (peek() == '/') {
          ++pos_;
          den = digits();
        }
        coeff *= field_.from_fraction(mpz_class(num), mpz_class(den));
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_'))
          ++pos_;
        std::string name = src_.substr(start, pos_ - start);
        int idx = vars_->index_of(name);
        if (idx < 0) {
          pos_ = start;
          fail("undeclared variable '" + name + "'");
        }
        unsigned e = 1;
        if (peek() == '^') {
          ++pos_;
          std::string d = digits();
          if (d.size() > 5)
            fail("exponent too large");
          e = static_cast<unsigned>(std::stoul(d));
        }
        mono.set(static_cast<std::size_t>(idx), mono[static_cast<std::size_t>(idx)] + e);
      } else {
        fail("expected a number or variable");
      }
    }
    if (neg)
      coeff = -coeff;
    return {mono, coeff};
  }

  VarSetPtr vars_;
  FieldCtx field_;
  std::string src_;
  std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(std::string_view text, const VarSetPtr &vars, FieldCtx field) {
  return PolyParser(text, vars, field).parse();
}

// Linear forms

LinearForm::LinearForm(std::vector<FieldElem> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw InvalidInput("linear form with no coefficients");
  bool nonzero = false;
  for (const auto &c : coeffs_) {
    if (!(c.field() == coeffs_.front().field()))
      throw ContextMismatch("linear form mixes fields");
    nonzero = nonzero || !c.is_zero();
  }
  if (!nonzero)
    throw InvalidInput("zero linear form");
}

Poly LinearForm::to_poly(const VarSetPtr &fiber_vars) const {
  if (fiber_vars->size() != coeffs_.size())
    throw LengthMismatch("linear form length differs from variable count");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Monomial m(coeffs_.size());
    m.set(i, 1);
    terms.push_back({m, coeffs_[i]});
  }
  return Poly::from_terms(fiber_vars, field(), std::move(terms));
}

std::string LinearForm::to_string(const VarSet &fiber_vars) const {
  auto vars = std::make_shared<const VarSet>(fiber_vars);
  return to_poly(vars).to_string();
}

LinearForm operator+(const LinearForm &a, const LinearForm &b) {
  if (a.size() != b.size())
    throw LengthMismatch("linear forms of different lengths");
  std::vector<FieldElem> c;
  for (std::size_t i = 0; i < a.size(); ++i)
    c.push_back(a[i] + b[i]);
  return LinearForm(std::move(c));
}

Poly apply_form(const LinearForm &form, std::span<const Poly> gens) {
  if (form.size() != gens.size())
    throw LengthMismatch("form has " + std::to_string(form.size()) +
                         " coefficients but there are " +
                         std::to_string(gens.size()) + " generators");
  Poly acc(gens.front().vars(), gens.front().field());
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!form[i].is_zero())
      acc = acc + gens[i].scaled(form[i]);
  return acc;
}

} // namespace redlocal
