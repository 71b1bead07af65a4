#include "qdt/laurent_poly.hpp"

#include <algorithm>
#include <cctype>

#include "qdt/errors.hpp"

namespace qdt {

namespace {

using QVec = std::vector<mpq_class>;

// Dense rational coefficient vector of the polynomial part (monomial v^low
// stripped off).
QVec to_rational(const LaurentPoly& p) {
  QVec r;
  r.reserve(p.numerators().size());
  for (const auto& c : p.numerators()) {
    mpq_class x(c, p.denominator());
    x.canonicalize();
    r.push_back(std::move(x));
  }
  return r;
}

void trim(QVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b over Q, b nonzero with trimmed leading coefficient.
void reduce_mod(QVec& a, const QVec& b) {
  trim(a);
  const mpq_class& lead = b.back();
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class factor = a.back() / lead;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= factor * b[j];
    a.pop_back();
    trim(a);
  }
}

LaurentPoly from_rational(int low, const QVec& coeffs) {
  std::map<int, mpq_class> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) terms.emplace(low + static_cast<int>(i), coeffs[i]);
  }
  return LaurentPoly::from_terms(terms);
}

}  // namespace

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) num_.emplace_back(constant);
}

LaurentPoly::LaurentPoly(const mpq_class& constant) {
  if (constant != 0) {
    num_.push_back(constant.get_num());
    den_ = constant.get_den();
  }
}

LaurentPoly LaurentPoly::monomial(const mpq_class& coeff, int exponent) {
  LaurentPoly p(coeff);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, mpq_class>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

LaurentPoly LaurentPoly::from_integers(int low, std::vector<mpz_class> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.num_ = std::move(coeffs);
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::size_t first = 0;
  while (first < num_.size() && num_[first] == 0) ++first;
  if (first == num_.size()) {
    num_.clear();
    low_ = 0;
    den_ = 1;
    return;
  }
  while (num_.back() == 0) num_.pop_back();
  if (first > 0) {
    num_.erase(num_.begin(), num_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ != 1) {
    mpz_class g = den_;
    for (const auto& c : num_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    if (g != 1) {
      den_ /= g;
      for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
  }
}

mpq_class LaurentPoly::coefficient(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > degree()) return 0;
  mpq_class r(num_[static_cast<std::size_t>(exponent - low_)], den_);
  r.canonicalize();
  return r;
}

mpq_class LaurentPoly::leading_coefficient() const {
  if (is_zero()) return 0;
  mpq_class r(num_.back(), den_);
  r.canonicalize();
  return r;
}

std::vector<std::pair<int, mpq_class>> LaurentPoly::terms() const {
  std::vector<std::pair<int, mpq_class>> out;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    mpq_class c(num_[i], den_);
    c.canonicalize();
    out.emplace_back(low_ + static_cast<int>(i), std::move(c));
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& c : r.num_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  mpz_class scale_self = 1;
  mpz_class scale_other = 1;
  if (den_ != o.den_) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
    scale_self = l / den_;
    scale_other = l / o.den_;
    den_ = l;
  }
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(degree(), o.degree());
  std::vector<mpz_class> r(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < num_.size(); ++i) {
    auto& slot = r[static_cast<std::size_t>(low_ - lo) + i];
    if (scale_self == 1) {
      slot = std::move(num_[i]);
    } else {
      mpz_mul(slot.get_mpz_t(), num_[i].get_mpz_t(), scale_self.get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < o.num_.size(); ++i) {
    auto& slot = r[static_cast<std::size_t>(o.low_ - lo) + i];
    mpz_addmul(slot.get_mpz_t(), o.num_[i].get_mpz_t(), scale_other.get_mpz_t());
  }
  num_ = std::move(r);
  low_ = lo;
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly r;
  r.low_ = a.low_ + b.low_;
  r.num_.assign(a.num_.size() + b.num_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j) {
      mpz_addmul(r.num_[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::scaled(const mpq_class& c) const {
  if (c == 0 || is_zero()) return {};
  LaurentPoly r(*this);
  const mpz_class& cn = c.get_num();
  if (cn != 1) {
    for (auto& x : r.num_) x *= cn;
  }
  r.den_ *= c.get_den();
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r(*this);
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::substitute(int n, int sign) const {
  if (n < 1) throw InvalidInput("substitution exponent must be positive");
  if (is_zero()) return {};
  LaurentPoly r;
  r.low_ = low_ * n;
  r.den_ = den_;
  r.num_.assign((num_.size() - 1) * static_cast<std::size_t>(n) + 1, mpz_class(0));
  for (std::size_t i = 0; i < num_.size(); ++i) {
    const int e = low_ + static_cast<int>(i);
    const bool flip = sign < 0 && (e % 2 != 0);
    r.num_[i * static_cast<std::size_t>(n)] = flip ? mpz_class(-num_[i]) : num_[i];
  }
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return {};
  LaurentPoly r(*this);
  std::reverse(r.num_.begin(), r.num_.end());
  r.low_ = -degree();
  return r;
}

LaurentPoly LaurentPoly::adams(int n) const { return substitute(n, n % 2 == 0 ? -1 : 1); }

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw InvalidInput("division by the zero polynomial");
  if (is_zero()) return LaurentPoly{};
  const std::size_t la = num_.size();
  const std::size_t ld = divisor.num_.size();
  if (la < ld) return std::nullopt;
  const std::size_t lq = la - ld + 1;
  const int qlow = low_ - divisor.low_;

  const mpz_class& lead = divisor.num_.back();
  if (divisor.den_ == 1 && (lead == 1 || lead == -1)) {
    // Unit leading coefficient: exact integer long division.
    std::vector<mpz_class> r(num_);
    std::vector<mpz_class> q(lq);
    for (std::size_t i = lq; i-- > 0;) {
      mpz_class c = r[i + ld - 1];
      if (lead == -1) c = -c;
      if (c != 0) {
        for (std::size_t j = 0; j < ld; ++j) {
          mpz_submul(r[i + j].get_mpz_t(), c.get_mpz_t(), divisor.num_[j].get_mpz_t());
        }
      }
      q[i] = std::move(c);
    }
    for (std::size_t i = 0; i + 1 < ld; ++i) {
      if (r[i] != 0) return std::nullopt;
    }
    LaurentPoly out;
    out.low_ = qlow;
    out.num_ = std::move(q);
    out.den_ = den_;
    out.normalize();
    return out;
  }

  QVec a = to_rational(*this);
  const QVec d = to_rational(divisor);
  QVec q(lq);
  for (std::size_t i = lq; i-- > 0;) {
    q[i] = a[i + ld - 1] / d.back();
    if (q[i] != 0) {
      for (std::size_t j = 0; j < ld; ++j) a[i + j] -= q[i] * d[j];
    }
  }
  for (std::size_t i = 0; i + 1 < ld; ++i) {
    if (a[i] != 0) return std::nullopt;
  }
  return from_rational(qlow, q);
}

mpq_class LaurentPoly::evaluate(const mpq_class& v) const {
  if (is_zero()) return 0;
  if (v == 0) {
    if (low_ < 0) throw PoleError("Laurent polynomial with negative powers evaluated at v = 0");
    return low_ == 0 ? coefficient(0) : mpq_class(0);
  }
  mpq_class acc = 0;
  for (std::size_t i = num_.size(); i-- > 0;) acc = acc * v + mpq_class(num_[i]);
  mpq_class pw = 1;
  const mpq_class base = low_ >= 0 ? v : mpq_class(1 / v);
  for (int k = 0; k < std::abs(low_); ++k) pw *= base;
  mpq_class r = acc * pw / mpq_class(den_);
  r.canonicalize();
  return r;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    const bool negative = c < 0;
    const mpq_class a = abs(c);
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    const bool unit = a == 1;
    if (e == 0) {
      s += a.get_str();
      continue;
    }
    if (!unit) s += a.get_str() + "*";
    s += "v";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  }
  if (t.empty()) throw InvalidInput("empty polynomial text");
  auto fail = [&](const std::string& why) -> LaurentPoly {
    throw InvalidInput("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  LaurentPoly result;
  std::size_t pos = 0;
  bool any = false;
  while (pos < t.size()) {
    int sign = 1;
    if (t[pos] == '+' || t[pos] == '-') {
      if (t[pos] == '-') sign = -1;
      ++pos;
    } else if (any) {
      return fail("expected '+' or '-' at position " + std::to_string(pos));
    }
    mpq_class coeff = 1;
    const std::size_t start = pos;
    while (pos < t.size() && (std::isdigit(static_cast<unsigned char>(t[pos])) || t[pos] == '/')) ++pos;
    if (pos > start) {
      try {
        coeff = mpq_class(t.substr(start, pos - start));
      } catch (const std::invalid_argument&) {
        return fail("bad coefficient");
      }
      coeff.canonicalize();
      if (pos < t.size() && t[pos] == '*') ++pos;
    }
    int exponent = 0;
    if (pos < t.size() && t[pos] == 'v') {
      ++pos;
      exponent = 1;
      if (pos < t.size() && t[pos] == '^') {
        ++pos;
        const bool paren = pos < t.size() && t[pos] == '(';
        if (paren) ++pos;
        const std::size_t es = pos;
        if (pos < t.size() && (t[pos] == '-' || t[pos] == '+')) ++pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (pos == es) return fail("missing exponent");
        try {
          exponent = std::stoi(t.substr(es, pos - es));
        } catch (const std::exception&) {
          return fail("bad exponent");
        }
        if (paren) {
          if (pos >= t.size() || t[pos] != ')') return fail("unbalanced parenthesis");
          ++pos;
        }
      }
    } else if (pos == start) {
      return fail("expected a term at position " + std::to_string(pos));
    }
    result += monomial(sign * coeff, exponent);
    any = true;
  }
  return result;
}

LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  QVec x = to_rational(a);
  QVec y = to_rational(b);
  trim(x);
  trim(y);
  while (!y.empty()) {
    reduce_mod(x, y);
    std::swap(x, y);
  }
  if (x.empty()) return {};
  LaurentPoly g = from_rational(0, x);
  return g.scaled(1 / content(g));
}

mpq_class content(const LaurentPoly& p) {
  if (p.is_zero()) return 0;
  mpz_class g = 0;
  for (const auto& c : p.numerators()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  mpq_class r(g, p.denominator());
  r.canonicalize();
  if (p.numerators().back() < 0) r = -r;
  return r;
}

LaurentPoly qbinom(int N, int n) {
  if (n < 0 || N < 0 || n > N) {
    throw InvalidInput("q-binomial [" + std::to_string(N) + ", " + std::to_string(n) + "] requires 0 <= n <= N");
  }
  n = std::min(n, N - n);
  // prod_{k<j} (L^(N-k) - 1) / (L^(k+1) - 1) is [N, j] at every step.
  LaurentPoly acc = 1;
  for (int k = 0; k < n; ++k) {
    acc *= LaurentPoly::v(2 * (N - k)) - 1;
    auto q = acc.divide_exact(LaurentPoly::v(2 * (k + 1)) - 1);
    if (!q) throw Error("internal: q-binomial division is not exact");
    acc = std::move(*q);
  }
  return acc;
}

LaurentPoly proj_vir(int n) {
  if (n < 1) throw InvalidInput("virtual projective space class needs n >= 1");
  std::vector<mpz_class> c(static_cast<std::size_t>(2 * n - 1), mpz_class(0));
  for (std::size_t i = 0; i < c.size(); i += 2) c[i] = 1;
  return LaurentPoly::from_integers(1 - n, std::move(c));
}

LaurentPoly proj_space(int n) {
  if (n < 1) throw InvalidInput("projective space class needs n >= 1");
  return proj_vir(n).shifted(n - 1);
}

}  // namespace qdt
