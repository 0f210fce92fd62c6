#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "gainnbc/bigint.hpp"
#include "gainnbc/gain_graph.hpp"
#include "gainnbc/nbc.hpp"

namespace gainnbc {

/// Polynomial in q with exact integer coefficients, index = power of q.
/// Canonical form: no trailing zeros; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial constant(const BigInt& c);
  /// The monomial q.
  static IntPolynomial variable();

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coefficient(int power) const;

  BigInt evaluate(const BigInt& q) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& scalar);
  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
  friend IntPolynomial operator*(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs *= rhs; }
  friend IntPolynomial operator*(IntPolynomial lhs, const BigInt& s) { return lhs *= s; }
  IntPolynomial pow(unsigned exponent) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human-readable form, e.g. "q^2 - 2q".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// |s(n,k)|, unsigned Stirling numbers of the first kind.
BigInt stirling1_unsigned(unsigned n, unsigned k);

/// Number of (alpha,beta)-rooted labelled trees on [n]: prod_{i=1}^{n-1} (n*beta + (alpha-beta)*i).
BigInt ab_tree_count(int n, long long alpha, long long beta);

/// F_{n,alpha,beta}(q) = (-1)^{n-1} prod_{i=1}^{n-1} (n*beta - q + (alpha-beta)*i).
IntPolynomial ab_forest_polynomial(int n, long long alpha, long long beta);

/// Forest generating polynomial from raw counts: sum_j (-1)^{n-j} f[j] q^{j-1},
/// where f[j] is the number of forests with j trees (f[0] ignored).
IntPolynomial forest_generating_polynomial(int n, const std::vector<BigInt>& trees_per_count);

/// |s(n,n-k)| * span^k: decreasing forests on n vertices with k edges and span labels each.
BigInt decreasing_forest_count(int n, int k, long long span);

/// Tree count rebuilt from the two-group split of the edge labels:
/// sum_k decreasing_forest_count(n, k, alpha-beta) * (n*beta)^{n-k-1}. Needs alpha >= beta.
BigInt two_group_tree_count(int n, long long alpha, long long beta);
/// Forest polynomial rebuilt the same way, summing the per-k, per-j terms.
IntPolynomial two_group_forest_polynomial(int n, long long alpha, long long beta);

/// Poin(q) = sum_j P_{n,j} q^j, with P_{n,0} = 1 included.
IntPolynomial poincare(const EdgeCountProfile& profile);

/// chi(q) = q^n Poin(-1/q) = sum_j P_{n,j} (-1)^j q^{n-j}.
IntPolynomial charpoly_from_poincare(const IntPolynomial& poincare, int n);

enum class CharpolyForm {
  kFull,     // q * F_{n,1-a,b}(q); degree n
  kReduced,  // F_{n,1-a,b}(q) alone, without the factor q
};

/// Characteristic polynomial of the arrangement of K_n^{ab}, a+b in {0,1}.
IntPolynomial charpoly_closed_form(int n, Gain a, Gain b, CharpolyForm form = CharpolyForm::kFull);

/// (bn+2)(bn+3)...(bn+n) when a+b = 0, (bn+1)^{n-1} when a+b = 1.
BigInt region_count(int n, Gain a, Gain b);

}  // namespace gainnbc
