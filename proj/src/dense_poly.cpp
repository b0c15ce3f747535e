#include "lacunary/dense_poly.hpp"

#include <algorithm>
#include <sstream>

#include "lacunary/errors.hpp"

namespace lacunary {

namespace {
const Integer kZero = 0;
}  // namespace

DensePoly::DensePoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

DensePoly::DensePoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

DensePoly DensePoly::monomial(const Integer& c, std::size_t exponent) {
  if (c == 0) return {};
  std::vector<Integer> v(exponent + 1);
  v[exponent] = c;
  return DensePoly(std::move(v));
}

DensePoly DensePoly::x_pow_minus_one(std::size_t r) {
  std::vector<Integer> v(r + 1);
  v[0] = -1;
  v[r] += 1;
  return DensePoly(std::move(v));
}

const Integer& DensePoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

void DensePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DensePoly operator+(const DensePoly& a, const DensePoly& b) {
  std::vector<Integer> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
  return DensePoly(std::move(r));
}

DensePoly operator-(const DensePoly& a, const DensePoly& b) {
  std::vector<Integer> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
  return DensePoly(std::move(r));
}

DensePoly operator-(const DensePoly& a) {
  std::vector<Integer> r(a.coeffs());
  for (auto& c : r) c = -c;
  return DensePoly(std::move(r));
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return DensePoly(std::move(r));
}

DensePoly operator*(const Integer& c, const DensePoly& a) {
  if (c == 0) return {};
  std::vector<Integer> r(a.coeffs());
  for (auto& x : r) x *= c;
  return DensePoly(std::move(r));
}

DensePoly shift_up(const DensePoly& a, std::size_t k) {
  if (a.is_zero()) return {};
  std::vector<Integer> r(k);
  r.insert(r.end(), a.coeffs().begin(), a.coeffs().end());
  return DensePoly(std::move(r));
}

DensePoly derivative(const DensePoly& a) {
  if (a.size() <= 1) return {};
  std::vector<Integer> r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  return DensePoly(std::move(r));
}

DensePoly pow(const DensePoly& a, unsigned e) {
  DensePoly result{1};
  DensePoly base = a;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Integer content(const DensePoly& a) {
  Integer g = 0;
  for (const auto& c : a.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

DensePoly primitive_part(const DensePoly& a) {
  if (a.is_zero()) return {};
  Integer g = content(a);
  if (a.leading() < 0) g = -g;
  if (g == 1) return a;
  std::vector<Integer> r(a.coeffs());
  for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return DensePoly(std::move(r));
}

std::optional<DensePoly> exact_quotient(const DensePoly& a, const DensePoly& b) {
  if (b.is_zero()) throw InputError("exact_quotient: division by zero polynomial");
  if (a.is_zero()) return DensePoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const std::size_t dq = static_cast<std::size_t>(a.degree() - b.degree());
  std::vector<Integer> rem(a.coeffs());
  std::vector<Integer> q(dq + 1);
  const Integer& lb = b.leading();
  const bool unit_lead = (lb == 1);
  for (std::size_t k = dq + 1; k-- > 0;) {
    Integer& top = rem[k + db];
    if (top == 0) continue;
    if (unit_lead) {
      q[k] = top;
    } else {
      if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
      mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    }
    for (std::size_t j = 0; j <= db; ++j)
      mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), b[j].get_mpz_t());
  }
  for (std::size_t i = 0; i < db; ++i)
    if (rem[i] != 0) return std::nullopt;
  return DensePoly(std::move(q));
}

bool divides(const DensePoly& b, const DensePoly& a) {
  return exact_quotient(a, b).has_value();
}

std::pair<DensePoly, DensePoly> divrem_monic(const DensePoly& a, const DensePoly& b) {
  if (b.is_zero() || b.leading() != 1) throw InputError("divrem_monic: divisor must be monic");
  if (a.degree() < b.degree()) return {DensePoly{}, a};
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const std::size_t dq = static_cast<std::size_t>(a.degree() - b.degree());
  std::vector<Integer> rem(a.coeffs());
  std::vector<Integer> q(dq + 1);
  for (std::size_t k = dq + 1; k-- > 0;) {
    q[k] = rem[k + db];
    if (q[k] == 0) continue;
    for (std::size_t j = 0; j <= db; ++j)
      mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), b[j].get_mpz_t());
  }
  rem.resize(db);
  return {DensePoly(std::move(q)), DensePoly(std::move(rem))};
}

Integer norm_l1(const DensePoly& a) {
  Integer s = 0;
  for (const auto& c : a.coeffs()) s += abs(c);
  return s;
}

Integer norm_l2_squared(const DensePoly& a) {
  Integer s = 0;
  for (const auto& c : a.coeffs()) mpz_addmul(s.get_mpz_t(), c.get_mpz_t(), c.get_mpz_t());
  return s;
}

Integer evaluate(const DensePoly& a, const Integer& x) {
  Integer r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

bool canonical_less(const DensePoly& a, const DensePoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(),
                                      b.coeffs().begin(), b.coeffs().end());
}

std::string to_string(const DensePoly& a, char var) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.size(); i-- > 0;) {
    const Integer& c = a[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace lacunary
