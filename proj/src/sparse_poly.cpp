#include "lacunary/sparse_poly.hpp"

#include <algorithm>

#include "lacunary/errors.hpp"

namespace lacunary {

namespace {

std::size_t bitlen(const Integer& n) {
  return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

void require_integral(const SparsePoly& f, const char* where) {
  if (!f.is_integral()) throw InputError(std::string(where) + ": integer coefficients required");
}

// Arithmetic in Q[x]/(m) for a nonconstant m.
class RationalQuotientRing {
 public:
  explicit RationalQuotientRing(const DensePoly& m) {
    const Integer& lc = m.leading();
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
      // x^n = -(m_0 + ... + m_{n-1} x^{n-1}) / lc
      Rational c(m[i], lc);
      c.canonicalize();
      tail_.push_back(-c);
    }
  }

  std::size_t degree() const { return tail_.size(); }

  std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> prod(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
    }
    return reduce(std::move(prod));
  }

  std::vector<Rational> reduce(std::vector<Rational> a) const {
    const std::size_t n = degree();
    for (std::size_t k = a.size(); k-- > n;) {
      if (a[k] == 0) continue;
      Rational top = a[k];
      a[k] = 0;
      for (std::size_t j = 0; j < n; ++j) a[k - n + j] += top * tail_[j];
    }
    if (a.size() > n) a.resize(n);
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
  }

  std::vector<Rational> x_power(const Integer& e) const {
    const std::size_t n = degree();
    if (e < static_cast<unsigned long>(n)) {
      std::vector<Rational> r(e.get_ui() + 1);
      r.back() = 1;
      return r;
    }
    std::vector<Rational> result{Rational(1)};
    std::vector<Rational> x{Rational(0), Rational(1)};
    x = reduce(std::move(x));
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = mul(result, result);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, x);
    }
    return result;
  }

 private:
  std::vector<Rational> tail_;
};

}  // namespace

SparsePoly SparsePoly::normalize(std::vector<Term> raw) {
  for (const auto& t : raw)
    if (t.exponent < 0) throw InputError("negative exponent in polynomial term");
  std::sort(raw.begin(), raw.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  SparsePoly out;
  for (auto& t : raw) {
    if (!out.terms_.empty() && out.terms_.back().exponent == t.exponent) {
      out.terms_.back().coeff += t.coeff;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
  for (auto& t : out.terms_) t.coeff.canonicalize();
  return out;
}

SparsePoly SparsePoly::monomial(const Rational& c, const Integer& exponent) {
  return normalize({Term{exponent, c}});
}

SparsePoly SparsePoly::from_dense(const DensePoly& a, const Integer& shift) {
  SparsePoly out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    Integer e = shift + static_cast<unsigned long>(i);
    out.terms_.push_back(Term{std::move(e), Rational(a[i])});
  }
  return out;
}

bool SparsePoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coeff.get_den() == 1; });
}

const Integer& SparsePoly::degree() const {
  if (terms_.empty()) throw InputError("degree of the zero polynomial is undefined");
  return terms_.back().exponent;
}

const Integer& SparsePoly::valuation() const {
  if (terms_.empty()) throw InputError("valuation of the zero polynomial is undefined");
  return terms_.front().exponent;
}

Bounds bounds(const SparsePoly& f) { return {f.degree(), f.valuation()}; }

PrimitiveSplit content_primitive(const SparsePoly& f) {
  if (f.is_zero()) throw InputError("content_primitive: zero polynomial");
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& t : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  PrimitiveSplit out;
  out.content = Rational(num_gcd, den_lcm);
  out.content.canonicalize();
  out.sign = f.terms().back().coeff < 0 ? -1 : 1;
  out.shift = f.valuation();
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Rational c = t.coeff / out.content;
    if (out.sign < 0) c = -c;
    Integer e = t.exponent - out.shift;
    terms.push_back(Term{std::move(e), std::move(c)});
  }
  out.primitive = SparsePoly::normalize(std::move(terms));
  return out;
}

SparsePoly sparse_derivative(const SparsePoly& f) {
  if (f.is_zero()) return {};
  const Integer& v = f.valuation();
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Integer e = t.exponent - v;
    if (e == 0) continue;
    Rational c = t.coeff * Rational(e);
    e -= 1;
    terms.push_back(Term{std::move(e), std::move(c)});
  }
  return SparsePoly::normalize(std::move(terms));
}

DensePoly reduce_exponents_mod(const SparsePoly& f, std::uint64_t r) {
  if (r == 0) throw InputError("reduce_exponents_mod: r must be positive");
  require_integral(f, "reduce_exponents_mod");
  std::vector<Integer> c(r);
  for (const auto& t : f.terms()) {
    const std::uint64_t e = mpz_fdiv_ui(t.exponent.get_mpz_t(), r);
    c[e] += t.coeff.get_num();
  }
  return DensePoly(std::move(c));
}

DensePoly sparse_mod(const SparsePoly& f, const DensePoly& m) {
  if (m.degree() < 1) throw InputError("sparse_mod: modulus must have degree >= 1");
  if (f.is_zero()) return {};
  RationalQuotientRing ring(m);
  const auto& terms = f.terms();
  std::vector<Rational> acc{terms.back().coeff};
  for (std::size_t j = terms.size() - 1; j-- > 0;) {
    Integer gap = terms[j + 1].exponent - terms[j].exponent;
    acc = ring.mul(acc, ring.x_power(gap));
    if (acc.empty()) acc.resize(1);
    acc[0] += terms[j].coeff;
  }
  acc = ring.mul(acc, ring.x_power(terms.front().exponent));
  Integer den = 1;
  for (const auto& c : acc) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    Rational scaled = acc[i] * Rational(den);
    out[i] = scaled.get_num();
  }
  return DensePoly(std::move(out));
}

ZpPoly sparse_mod_p(const SparsePoly& f, const DensePoly& m, const PrimeField& field) {
  if (m.degree() < 1) throw InputError("sparse_mod_p: modulus must have degree >= 1");
  ZpPoly mp = zp::reduce(m, field);
  if (zp::degree(mp) != m.degree()) throw InputError("sparse_mod_p: p divides lc(m)");
  zp::Modulus mod(std::move(mp), field);
  ZpPoly acc;
  ZpPoly x{0, 1};
  auto coeff_mod = [&field](const Rational& c) {
    std::uint64_t den = field.reduce(c.get_den());
    return field.mul(field.reduce(c.get_num()), field.inv(den));
  };
  const auto& terms = f.terms();
  for (std::size_t j = terms.size(); j-- > 0;) {
    ZpPoly c{coeff_mod(terms[j].coeff)};
    zp::trim(c);
    acc = zp::add(acc, c, field);
    const Integer& lower = j == 0 ? Integer(0) : terms[j - 1].exponent;
    Integer gap = terms[j].exponent - lower;
    if (!acc.empty() && gap != 0) acc = mod.mulmod(acc, mod.powmod(x, gap));
  }
  return mod.reduce(acc);
}

std::uint64_t eval_mod(const SparsePoly& f, std::uint64_t a, const PrimeField& field) {
  std::uint64_t sum = 0;
  a %= field.modulus();
  for (const auto& t : f.terms()) {
    std::uint64_t c = field.reduce(t.coeff.get_num());
    if (t.coeff.get_den() != 1) c = field.mul(c, field.inv(field.reduce(t.coeff.get_den())));
    sum = field.add(sum, field.mul(c, field.pow(a, t.exponent)));
  }
  return sum;
}

std::size_t sparse_size(const SparsePoly& f) {
  std::size_t bits = 0;
  for (const auto& t : f.terms())
    bits += bitlen(t.coeff.get_num()) + bitlen(t.coeff.get_den()) + bitlen(t.exponent);
  return bits;
}

ShiftedCore to_dense_core(const SparsePoly& f, std::size_t max_span) {
  if (f.is_zero()) throw InputError("to_dense_core: zero polynomial");
  require_integral(f, "to_dense_core");
  Integer span = f.degree() - f.valuation();
  if (span > static_cast<unsigned long>(max_span))
    throw ResourceLimitError("dense span " + span.get_str() + " exceeds the limit of " +
                             std::to_string(max_span) + " coefficients");
  const std::size_t n = span.get_ui() + 1;
  std::vector<Integer> c(n);
  for (const auto& t : f.terms()) {
    Integer off = t.exponent - f.valuation();
    c[off.get_ui()] = t.coeff.get_num();
  }
  return {f.valuation(), DensePoly(std::move(c))};
}

Integer norm_l1(const SparsePoly& f) {
  require_integral(f, "norm_l1");
  Integer s = 0;
  for (const auto& t : f.terms()) s += abs(t.coeff.get_num());
  return s;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  std::vector<Term> terms;
  terms.reserve(a.size() + b.size());
  terms.insert(terms.end(), a.terms().begin(), a.terms().end());
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return SparsePoly::normalize(std::move(terms));
}

SparsePoly operator-(const SparsePoly& a) { return Rational(-1) * a; }

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  std::vector<Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) {
      Integer e = s.exponent + t.exponent;
      Rational c = s.coeff * t.coeff;
      terms.push_back(Term{std::move(e), std::move(c)});
    }
  return SparsePoly::normalize(std::move(terms));
}

SparsePoly operator*(const Rational& c, const SparsePoly& a) {
  if (c == 0) return {};
  std::vector<Term> terms(a.terms());
  for (auto& t : terms) t.coeff *= c;
  return SparsePoly::normalize(std::move(terms));
}

SparsePoly shift_up(const SparsePoly& a, const Integer& k) {
  std::vector<Term> terms(a.terms());
  for (auto& t : terms) t.exponent += k;
  return SparsePoly::normalize(std::move(terms));
}

std::string to_string(const SparsePoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    Rational c = it->coeff;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    const bool constant = it->exponent == 0;
    if (c != 1 || constant) out += c.get_str() + (constant ? "" : "*");
    if (!constant) out += it->exponent == 1 ? "x" : "x^" + it->exponent.get_str();
  }
  return out;
}

}  // namespace lacunary
