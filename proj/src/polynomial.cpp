#include "gainnbc/polynomial.hpp"

#include <sstream>

#include "gainnbc/error.hpp"

namespace gainnbc {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  for (long long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::variable() { return IntPolynomial{0, 1}; }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[power];
}

BigInt IntPolynomial::evaluate(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result = constant(1), base = *this;
  for (; exponent != 0; exponent >>= 1) {
    if (exponent & 1u) result *= base;
    if (exponent > 1) base *= base;
  }
  return result;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    const BigInt& c = coeffs_[p];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || p == 0) os << mag;
    if (p >= 1) os << "q";
    if (p >= 2) os << "^" << p;
    first = false;
  }
  return os.str();
}

BigInt stirling1_unsigned(unsigned n, unsigned k) {
  require(k <= n, "stirling1_unsigned requires k <= n");
  // Row-by-row: |s(m,j)| = |s(m-1,j-1)| + (m-1)|s(m-1,j)|.
  std::vector<BigInt> row{1};
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<BigInt> next(m + 1, 0);
    for (unsigned j = 1; j <= m; ++j) {
      next[j] = row[j - 1];
      if (j < m) next[j] += BigInt(m - 1) * row[j];
    }
    row = std::move(next);
  }
  return row[k];
}

namespace {

void require_ab(long long alpha, long long beta) {
  require(alpha >= 0 && beta >= 0, "alpha and beta must be natural numbers");
}

BigInt power(BigInt base, unsigned e) {
  BigInt r = 1;
  for (; e != 0; e >>= 1) {
    if (e & 1u) r *= base;
    if (e > 1) base *= base;
  }
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_bijective(int n, Gain a, Gain b) {
  require(n >= 1, "n must be at least 1");
  require(a <= b, "gain bounds require a <= b");
  if (a + b != 0 && a + b != 1) fail(ErrorKind::kOutOfScope, "closed forms need a+b in {0,1}");
}

}  // namespace

BigInt ab_tree_count(int n, long long alpha, long long beta) {
  require(n >= 1, "n must be at least 1");
  require_ab(alpha, beta);
  BigInt r = 1;
  for (int i = 1; i <= n - 1; ++i) r *= BigInt(n) * beta + BigInt(alpha - beta) * i;
  return r;
}

IntPolynomial ab_forest_polynomial(int n, long long alpha, long long beta) {
  require(n >= 1, "n must be at least 1");
  require_ab(alpha, beta);
  IntPolynomial r = IntPolynomial::constant(n % 2 == 1 ? 1 : -1);
  for (int i = 1; i <= n - 1; ++i) {
    BigInt c = BigInt(n) * beta + BigInt(alpha - beta) * i;
    r *= IntPolynomial(std::vector<BigInt>{c, -1});
  }
  return r;
}

IntPolynomial forest_generating_polynomial(int n, const std::vector<BigInt>& trees_per_count) {
  std::vector<BigInt> c(n, 0);
  for (int j = 1; j <= n && j < static_cast<int>(trees_per_count.size()); ++j)
    c[j - 1] = (n - j) % 2 == 0 ? trees_per_count[j] : BigInt(-trees_per_count[j]);
  return IntPolynomial(std::move(c));
}

BigInt decreasing_forest_count(int n, int k, long long span) {
  require(n >= 1 && k >= 0 && k < n, "decreasing_forest_count requires 0 <= k < n");
  require(span >= 0, "span must be natural");
  return stirling1_unsigned(n, n - k) * power(BigInt(span), k);
}

BigInt two_group_tree_count(int n, long long alpha, long long beta) {
  require(n >= 1, "n must be at least 1");
  require_ab(alpha, beta);
  require(alpha >= beta, "the two-group split needs alpha >= beta");
  BigInt total = 0;
  for (int k = 0; k <= n - 1; ++k)
    total += decreasing_forest_count(n, k, alpha - beta) * power(BigInt(n) * beta, n - k - 1);
  return total;
}

IntPolynomial two_group_forest_polynomial(int n, long long alpha, long long beta) {
  require(n >= 1, "n must be at least 1");
  require_ab(alpha, beta);
  require(alpha >= beta, "the two-group split needs alpha >= beta");
  std::vector<BigInt> c(n, 0);
  for (int k = 0; k <= n - 1; ++k) {
    const BigInt first = decreasing_forest_count(n, k, alpha - beta);
    for (int j = 1; j <= n - k; ++j) {
      BigInt term = first * power(BigInt(n) * beta, n - k - j) * binomial(n - k - 1, j - 1);
      if ((n - j) % 2 != 0) term = -term;
      c[j - 1] += term;
    }
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial poincare(const EdgeCountProfile& profile) { return IntPolynomial(profile.counts); }

IntPolynomial charpoly_from_poincare(const IntPolynomial& poin, int n) {
  require(n >= 0, "n must be natural");
  require(poin.degree() <= n, "Poincare polynomial degree exceeds n");
  std::vector<BigInt> c(n + 1, 0);
  for (int j = 0; j <= poin.degree(); ++j)
    c[n - j] = j % 2 == 0 ? poin.coefficient(j) : BigInt(-poin.coefficient(j));
  return IntPolynomial(std::move(c));
}

IntPolynomial charpoly_closed_form(int n, Gain a, Gain b, CharpolyForm form) {
  require_bijective(n, a, b);
  IntPolynomial f = ab_forest_polynomial(n, 1 - a, b);
  if (form == CharpolyForm::kFull) f *= IntPolynomial::variable();
  return f;
}

BigInt region_count(int n, Gain a, Gain b) {
  require_bijective(n, a, b);
  const BigInt bn = BigInt(b) * n;
  if (a + b == 1) return power(bn + 1, n - 1);
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= bn + i;
  return r;
}

}  // namespace gainnbc
