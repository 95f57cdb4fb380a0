#include "peaklab/cyclotomic.hpp"

#include <map>
#include <memory>
#include <stdexcept>

namespace peaklab {

namespace {

using Poly = std::vector<Rational>;  // coefficients low to high

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division; throws if the remainder is nonzero.
Poly poly_div_exact(Poly num, const Poly& den) {
  Poly quot(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0,
            Rational(0));
  while (num.size() >= den.size()) {
    Rational c = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i)
      num[shift + i] -= c * den[i];
    poly_trim(num);
    if (num.empty()) break;
  }
  if (!num.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
  return quot;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m) {
  poly_trim(a);
  while (a.size() >= m.size()) {
    Rational c = a.back();  // m is monic
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] -= c * m[i];
    poly_trim(a);
  }
  return a;
}

Poly cyclotomic_poly(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
  Poly num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = poly_div_exact(std::move(num), cyclotomic_poly(d));
  return num;
}

}  // namespace

CycloField::CycloField(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  phi_ = cyclotomic_poly(order);
}

const CycloField& CycloField::get(int order) {
  static std::map<int, std::unique_ptr<CycloField>> cache;
  auto it = cache.find(order);
  if (it == cache.end())
    it = cache.emplace(order, std::unique_ptr<CycloField>(new CycloField(order)))
             .first;
  return *it->second;
}

Cyclo Cyclo::root_of_unity(const CycloField& field, long long power) {
  long long n = field.order();
  long long k = ((power % n) + n) % n;
  Cyclo out;
  out.field_ = &field;
  out.coeffs_.assign(k + 1, Rational(0));
  out.coeffs_[k] = 1;
  out.reduce();
  return out;
}

bool Cyclo::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyclo::rational_value() const {
  if (!is_rational())
    throw std::invalid_argument("cyclotomic value is not rational");
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

void Cyclo::reduce() {
  if (field_ == nullptr) {
    coeffs_.resize(1, Rational(0));
    return;
  }
  Poly r = poly_mod(coeffs_, field_->modulus());
  r.resize(field_->degree(), Rational(0));
  coeffs_ = std::move(r);
}

void Cyclo::match(Cyclo& a, Cyclo& b) {
  if (a.field_ == b.field_) return;
  if (a.field_ != nullptr && b.field_ != nullptr) {
    if (a.field_->order() != b.field_->order())
      throw std::invalid_argument("mixing cyclotomic fields of different orders");
    return;  // same order, same cached field object; unreachable but safe
  }
  Cyclo& rat = (a.field_ == nullptr) ? a : b;
  const Cyclo& fld = (a.field_ == nullptr) ? b : a;
  rat.field_ = fld.field_;
  rat.coeffs_.resize(fld.field_->degree(), Rational(0));
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  Cyclo rhs = o;
  match(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  Cyclo rhs = o;
  match(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  Cyclo rhs = o;
  match(*this, rhs);
  coeffs_ = poly_mul(coeffs_, rhs.coeffs_);
  reduce();
  return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& o) { return *this *= o.inverse(); }

bool operator==(const Cyclo& a, const Cyclo& b) {
  Cyclo x = a, y = b;
  Cyclo::match(x, y);
  return x.coeffs_ == y.coeffs_;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::invalid_argument("division by zero");
  if (field_ == nullptr) {
    Cyclo out;
    out.coeffs_[0] = Rational(1) / coeffs_[0];
    return out;
  }
  // Extended Euclid in Q[x]: u * a + v * Phi = gcd = 1 (Phi is irreducible
  // and a is nonzero of smaller degree), so u = a^{-1} mod Phi.
  Poly r0 = field_->modulus(), r1 = coeffs_;
  poly_trim(r1);
  Poly u0 = {}, u1 = {Rational(1)};  // coefficients of `a` in r0, r1
  while (!r1.empty()) {
    // Divide r0 by r1: r0 = q r1 + r.
    Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
    Poly r = r0;
    while (r.size() >= r1.size() && !r.empty()) {
      Rational c = r.back() / r1.back();
      std::size_t shift = r.size() - r1.size();
      q[shift] += c;
      for (std::size_t i = 0; i < r1.size(); ++i) r[shift + i] -= c * r1[i];
      poly_trim(r);
    }
    Poly u = u0;
    Poly qu1 = poly_mul(q, u1);
    if (u.size() < qu1.size()) u.resize(qu1.size(), Rational(0));
    for (std::size_t i = 0; i < qu1.size(); ++i) u[i] -= qu1[i];
    poly_trim(u);
    r0 = std::move(r1);
    u0 = std::move(u1);
    r1 = std::move(r);
    u1 = std::move(u);
  }
  // r0 = gcd (a nonzero constant times 1), u0 * a = r0 mod Phi.
  if (r0.size() != 1)
    throw std::logic_error("cyclotomic inverse: gcd not constant");
  Cyclo out;
  out.field_ = field_;
  out.coeffs_ = std::move(u0);
  for (auto& c : out.coeffs_) c /= r0[0];
  out.reduce();
  return out;
}

std::string Cyclo::to_string() const {
  if (is_rational()) return rational_to_string(rational_value());
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + rational_to_string(coeffs_[i]) + ")";
    if (i == 1) out += " e";
    if (i > 1) out += " e^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace peaklab
