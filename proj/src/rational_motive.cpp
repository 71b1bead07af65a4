#include "qdt/rational_motive.hpp"

#include <algorithm>

#include "qdt/errors.hpp"

namespace qdt {

namespace {

// prod Phi_k^(target_k - have_k); have must be pointwise <= target.
LaurentPoly missing_factors(const CycloExponents& target, const CycloExponents& have) {
  LaurentPoly r = 1;
  std::size_t j = 0;
  for (const auto& [k, m] : target) {
    int h = 0;
    while (j < have.size() && have[j].first < k) ++j;
    if (j < have.size() && have[j].first == k) h = have[j].second;
    for (int t = h; t < m; ++t) r *= cyclotomic(k);
  }
  return r;
}

bool all_exponents_even(const LaurentPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 != 0) return false;
  }
  return true;
}

mpq_class rational_power(const mpq_class& x, int k) {
  mpz_class n, d;
  const unsigned long a = static_cast<unsigned long>(std::abs(k));
  mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), a);
  mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), a);
  mpq_class r = k >= 0 ? mpq_class(n, d) : mpq_class(d, n);
  r.canonicalize();
  return r;
}

// p(v) with every exponent even, evaluated at v^2 = q.
mpq_class evaluate_in_L(const LaurentPoly& p, const mpq_class& q) {
  mpq_class acc = 0;
  for (const auto& [e, c] : p.terms()) acc += c * rational_power(q, e / 2);
  return acc;
}

}  // namespace

RationalMotive RationalMotive::fraction(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw InvalidInput("rational motive with zero denominator");
  RationalMotive r;
  if (num.is_zero()) return r;
  const int shift = den.valuation();
  LaurentPoly n = num.shifted(-shift);
  LaurentPoly d = den.shifted(-shift);
  const mpq_class c = content(d);
  n = n.scaled(1 / c);
  d = d.scaled(1 / c);
  auto [cyc, rest] = strip_cyclotomic_factors(std::move(d));
  r.num_ = std::move(n);
  r.cyclo_ = std::move(cyc);
  r.residual_ = std::move(rest);
  r.cancel_cyclotomic();
  r.reduce_residual();
  return r;
}

RationalMotive RationalMotive::over_cyclotomics(LaurentPoly num, CycloExponents den) {
  RationalMotive r;
  if (num.is_zero()) return r;
  std::sort(den.begin(), den.end());
  CycloExponents merged;
  for (const auto& [k, m] : den) {
    if (m < 0) throw InvalidInput("negative cyclotomic multiplicity");
    if (m == 0) continue;
    if (!merged.empty() && merged.back().first == k) {
      merged.back().second += m;
    } else {
      merged.emplace_back(k, m);
    }
  }
  r.num_ = std::move(num);
  r.cyclo_ = std::move(merged);
  r.cancel_cyclotomic();
  return r;
}

void RationalMotive::cancel_cyclotomic() {
  if (num_.is_zero()) {
    cyclo_.clear();
    residual_ = 1;
    return;
  }
  for (auto& [k, m] : cyclo_) {
    const LaurentPoly& c = cyclotomic(k);
    while (m > 0) {
      auto q = num_.divide_exact(c);
      if (!q) break;
      num_ = std::move(*q);
      --m;
    }
  }
  std::erase_if(cyclo_, [](const auto& f) { return f.second == 0; });
}

void RationalMotive::reduce_residual() {
  if (residual_ == LaurentPoly(1)) return;
  if (num_.is_zero()) {
    residual_ = 1;
    return;
  }
  const LaurentPoly g = polynomial_gcd(num_, residual_);
  if (g.degree() > 0) {
    num_ = *num_.divide_exact(g);
    residual_ = *residual_.divide_exact(g);
  }
  const mpq_class c = content(residual_);
  residual_ = residual_.scaled(1 / c);
  num_ = num_.scaled(1 / c);
}

std::optional<LaurentPoly> RationalMotive::as_laurent() const {
  if (!is_laurent()) return std::nullopt;
  return num_;
}

LaurentPoly RationalMotive::denominator() const { return cyclo_expand(cyclo_) * residual_; }

RationalMotive RationalMotive::operator-() const {
  RationalMotive r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalMotive& RationalMotive::operator+=(const RationalMotive& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (residual_ == LaurentPoly(1) && o.residual_ == LaurentPoly(1)) {
    if (cyclo_ == o.cyclo_) {
      num_ += o.num_;
    } else {
      CycloExponents m = cyclo_max(cyclo_, o.cyclo_);
      num_ = num_ * missing_factors(m, cyclo_) + o.num_ * missing_factors(m, o.cyclo_);
      cyclo_ = std::move(m);
    }
    cancel_cyclotomic();
    return *this;
  }
  const LaurentPoly d = denominator();
  const LaurentPoly od = o.denominator();
  return *this = fraction(num_ * od + o.num_ * d, d * od);
}

RationalMotive& RationalMotive::operator*=(const RationalMotive& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalMotive();
  num_ *= o.num_;
  if (!o.cyclo_.empty()) cyclo_ = cyclo_add(cyclo_, o.cyclo_);
  if (!(o.residual_ == LaurentPoly(1))) residual_ *= o.residual_;
  if (!o.cyclo_.empty() || !o.num_.is_monomial()) cancel_cyclotomic();
  reduce_residual();
  return *this;
}

RationalMotive RationalMotive::inverse() const {
  if (is_zero()) throw InvalidInput("inverse of the zero motive");
  if (num_.is_monomial()) {
    // Fast path: 1 / (c v^k) keeps the denominator cyclotomic.
    RationalMotive r;
    r.num_ = denominator().scaled(1 / num_.leading_coefficient()).shifted(-num_.valuation());
    return r;
  }
  return fraction(denominator(), num_);
}

RationalMotive RationalMotive::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  RationalMotive r(*this);
  r.num_ = r.num_.scaled(c);
  return r;
}

RationalMotive RationalMotive::shifted(int k) const {
  RationalMotive r(*this);
  r.num_ = r.num_.shifted(k);
  return r;
}

RationalMotive RationalMotive::adams(int n) const {
  if (n < 1) throw InvalidInput("Adams operations are indexed by n >= 1");
  if (n == 1 || is_zero()) return *this;
  RationalMotive r;
  r.num_ = num_.adams(n);
  for (const auto& [k, m] : cyclo_) {
    const CycloImage& img = adams_image(k, n);
    if (img.sign < 0 && m % 2 != 0) r.num_ = -r.num_;
    CycloExponents scaled = img.factors;
    for (auto& f : scaled) f.second *= m;
    r.cyclo_ = cyclo_add(r.cyclo_, scaled);
  }
  if (!(residual_ == LaurentPoly(1))) {
    return fraction(r.num_, cyclo_expand(r.cyclo_) * residual_.adams(n));
  }
  // psi_n is injective, so coprime numerator and denominator stay coprime.
  return r;
}

RationalMotive RationalMotive::bar() const {
  if (is_zero()) return *this;
  RationalMotive r;
  r.num_ = num_.bar();
  r.cyclo_ = cyclo_;
  int shift = 0;
  bool negate = false;
  for (const auto& [k, m] : cyclo_) {
    // Phi_k(1/v) = v^-phi(k) Phi_k(v) for k >= 2, and Phi_1(1/v) = -v^-1 Phi_1(v).
    shift += euler_phi(k) * m;
    if (k == 1 && m % 2 != 0) negate = !negate;
  }
  if (!(residual_ == LaurentPoly(1))) {
    const int deg = residual_.degree();
    LaurentPoly rev = residual_.bar().shifted(deg);
    if (rev.leading_coefficient() < 0) {
      rev = -rev;
      negate = !negate;
    }
    shift += deg;
    r.residual_ = std::move(rev);
  }
  r.num_ = r.num_.shifted(shift);
  if (negate) r.num_ = -r.num_;
  return r;
}

mpq_class RationalMotive::evaluate(const mpq_class& q) const {
  if (q == 0) throw InvalidInput("motives are evaluated at a nonzero value of L");
  if (is_zero()) return 0;
  const LaurentPoly den = denominator();
  mpq_class nv, dv;
  if (all_exponents_even(num_) && all_exponents_even(den)) {
    nv = evaluate_in_L(num_, q);
    dv = evaluate_in_L(den, q);
  } else {
    if (q < 0 || !mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
      throw OddParityEvaluation("motive " + to_string() + " involves odd powers of L^(1/2) and L = " +
                                q.get_str() + " is not a rational square");
    }
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), q.get_den_mpz_t());
    const mpq_class v(rn, rd);
    nv = num_.evaluate(v);
    dv = den.evaluate(v);
  }
  if (dv == 0) throw PoleError("motive " + to_string() + " has a pole at L = " + q.get_str());
  mpq_class r = nv / dv;
  r.canonicalize();
  return r;
}

std::string RationalMotive::to_string() const {
  if (is_laurent()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + denominator().to_string() + ")";
}

RationalMotive sum(std::span<const RationalMotive> terms) {
  CycloExponents common;
  std::size_t nonzero = 0;
  bool cyclotomic_only = true;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    ++nonzero;
    if (!(t.residual_denominator() == LaurentPoly(1))) cyclotomic_only = false;
    common = cyclo_max(common, t.cyclotomic_denominator());
  }
  if (nonzero == 0) return {};
  if (!cyclotomic_only || nonzero == 1) {
    RationalMotive acc;
    for (const auto& t : terms) acc += t;
    return acc;
  }
  LaurentPoly num;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    if (t.cyclotomic_denominator() == common) {
      num += t.numerator();
    } else {
      num += t.numerator() * missing_factors(common, t.cyclotomic_denominator());
    }
  }
  return RationalMotive::over_cyclotomics(std::move(num), std::move(common));
}

}  // namespace qdt
