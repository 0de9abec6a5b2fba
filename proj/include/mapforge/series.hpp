#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mapforge {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Dense polynomial with integer coefficients, c[k] is the coefficient of x^k.
/// Always trimmed: the zero polynomial has no coefficients.
struct Poly {
  std::vector<BigInt> c;

  Poly() = default;
  explicit Poly(std::vector<BigInt> coeffs);
  static Poly constant(const BigInt& a);
  static Poly monomial(int k, const BigInt& a = 1);

  bool is_zero() const noexcept { return c.empty(); }
  int degree() const noexcept { return static_cast<int>(c.size()) - 1; }
  /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
  int valuation() const;
  const BigInt& lead() const { return c.back(); }
  BigInt coeff(int k) const { return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : BigInt(0); }
  BigInt content() const;
  Poly primitive() const;
  Poly reversed() const;  // x^deg p(1/x)
  Poly shifted_down(int k) const;  // divide by x^k (exact)
  std::string to_string(const std::string& var) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const BigInt& k, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
  void trim();
};

Poly pow(const Poly& p, int e);
/// Exact quotient of a by b over Z; throws BadInput if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
/// Primitive gcd with positive leading coefficient.
Poly gcd(Poly a, Poly b);

/// Rational function of D with a Laurent factor: D^low * num(D) / den(D).
/// Normal form: num and den coprime with nonzero constant terms, joint
/// content 1, positive leading coefficient of den. Zero is 0/1 with low 0.
class LaurentRational {
 public:
  LaurentRational() : den_(Poly::constant(1)) {}
  LaurentRational(int low, Poly num, Poly den);
  static LaurentRational constant(const BigInt& a);
  static LaurentRational monomial(int k);  // D^k
  /// Laurent polynomial sum_k coeffs[k] D^(low + k).
  static LaurentRational laurent(int low, Poly p);

  int low() const noexcept { return low_; }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  friend LaurentRational operator+(const LaurentRational& a, const LaurentRational& b);
  friend LaurentRational operator-(const LaurentRational& a, const LaurentRational& b);
  friend LaurentRational operator-(const LaurentRational& a);
  friend LaurentRational operator*(const LaurentRational& a, const LaurentRational& b);
  friend LaurentRational operator/(const LaurentRational& a, const LaurentRational& b);
  friend bool operator==(const LaurentRational& a, const LaurentRational& b) {
    return a.low_ == b.low_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void normalize();
  int low_ = 0;
  Poly num_, den_;
};

LaurentRational pow(const LaurentRational& f, int e);
/// f(D) -> f(1/D).
LaurentRational transpose(const LaurentRational& f);
bool is_symmetric(const LaurentRational& f);
bool is_antisymmetric(const LaurentRational& f);

/// z = 1 / (D^-1 + 4 + D) and B = (1 + 4D + D^2) / (1 - D^2) as functions of D.
LaurentRational z_in_D();
LaurentRational B_in_D();
/// Phi(c) = D^c / (1 - D^c).
LaurentRational phi(int c);

/// num(z) / den(z) with the same normal form as LaurentRational (low = 0).
struct RationalZ {
  Poly num, den;
  std::string to_string(const std::string& var = "z") const;
};

/// num/den brought to normal form.
RationalZ make_rational(Poly num, Poly den);

/// Rewrites a symmetric function of D as a rational function of z.
/// Throws NotSymmetric otherwise.
RationalZ rational_in_z(const LaurentRational& f);

/// Power series truncated after x^order, exact rational coefficients.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = 0);
  TruncatedSeries(int order, std::vector<BigRat> coeffs);
  static TruncatedSeries variable(int order);  // x

  int order() const noexcept { return order_; }
  const BigRat& operator[](int k) const { return c_[k]; }
  BigRat& operator[](int k) { return c_[k]; }
  const std::vector<BigRat>& coeffs() const noexcept { return c_; }
  bool is_integral() const;
  /// Integer coefficients; throws BadInput if some coefficient is not integral.
  std::vector<BigInt> integers() const;
  TruncatedSeries truncated(int order) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const BigRat& k, const TruncatedSeries& a);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

  TruncatedSeries inverse() const;      // needs a nonzero constant term
  TruncatedSeries derivative() const;   // order drops by one
  TruncatedSeries integral() const;     // order grows by one, constant 0
  /// this(g(x)), needs g(0) = 0.
  TruncatedSeries compose(const TruncatedSeries& g) const;
  /// Multiplies by x^k (k may be negative when the low coefficients vanish).
  TruncatedSeries shifted(int k) const;
  int valuation() const;  // order + 1 for the zero series

 private:
  int order_;
  std::vector<BigRat> c_;
};

TruncatedSeries pow(const TruncatedSeries& s, int e);
TruncatedSeries evaluate(const Poly& p, const TruncatedSeries& x);

/// T = z + 3T^2.
TruncatedSeries series_T(int order);
/// D = z (1 + 4D + D^2).
TruncatedSeries series_D(int order);
/// B = 1 + 4zB + 2zDB.
TruncatedSeries series_B(int order);
/// B from its closed form in D, composed with D(z).
TruncatedSeries series_B_closed(int order);

/// Expands f(D(z)) as a power series in z through z^order. Throws BadInput
/// if the expansion has negative powers of z.
TruncatedSeries expand_in_z(const LaurentRational& f, int order);
TruncatedSeries expand_in_z(const RationalZ& f, int order);
/// Expands f in D itself (f must have no pole at D = 0 after the D^low factor).
TruncatedSeries expand_in_D(const LaurentRational& f, int order);

/// Independent counts for the series above.
std::vector<BigInt> count_trees_by_leaves(int max_leaves);  // explicit tree generation
std::vector<BigInt> count_D_paths(int max_length);          // lattice-path DP
std::vector<BigInt> count_B_paths(int max_length);          // lattice-path DP

}  // namespace mapforge
