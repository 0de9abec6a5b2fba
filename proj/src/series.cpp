#include "mapforge/series.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "mapforge/error.hpp"

namespace mapforge {

namespace {

BigInt abs_big(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

BigInt gcd_big(BigInt a, BigInt b) {
  a = abs_big(a);
  b = abs_big(b);
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Pseudo-remainder of a by b.
Poly prem(Poly r, const Poly& b) {
  const int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    const int k = r.degree() - db;
    Poly lhs = b.lead() * r;
    Poly rhs = r.lead() * (Poly::monomial(k) * b);
    r = lhs - rhs;
  }
  return r;
}

// Joint normal form of a fraction num/den (no D-power handling).
void normalize_pair(Poly& num, Poly& den) {
  if (den.is_zero()) throw Error(ErrorCode::BadInput, "zero denominator");
  if (num.is_zero()) {
    den = Poly::constant(1);
    return;
  }
  Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  BigInt c = gcd_big(num.content(), den.content());
  if (c != 1) {
    for (auto& x : num.c) x /= c;
    for (auto& x : den.c) x /= c;
  }
  if (den.lead() < 0) {
    num = -num;
    den = -den;
  }
}

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Symmetric Laurent polynomial (coefficients at exponents -m..m) written as a
// polynomial in w = D + 1/D.
Poly symmetric_to_w(std::vector<BigInt> sym) {
  const int m = (static_cast<int>(sym.size()) - 1) / 2;
  std::vector<BigInt> a(m + 1);
  for (int top = m; top >= 0; --top) {
    const BigInt p = sym[m + top];
    if (p != sym[m - top]) throw Error(ErrorCode::NotSymmetric, "numerator or denominator is not palindromic");
    if (p == 0) continue;
    a[top] = p;
    for (int j = 0; j <= top; ++j) sym[m + top - 2 * j] -= p * binomial(top, j);
  }
  return Poly(std::move(a));
}

// p(w) with w = (1 - 4z)/z, times z^deg_total.
Poly w_to_z(const Poly& p, int total) {
  Poly out;
  const Poly one_minus_4z(std::vector<BigInt>{1, -4});
  for (int m = 0; m <= p.degree(); ++m) {
    if (p.c[m] == 0) continue;
    out = out + p.c[m] * (pow(one_minus_4z, m) * Poly::monomial(total - m));
  }
  return out;
}

// Symmetric coefficient vector of D^low * q, recentred by twice-centre c2.
std::vector<BigInt> centred(int low, const Poly& q, int c2) {
  // exponents low .. low+deg, centre c2/2 (c2 even here)
  const int c = c2 / 2;
  const int lo = low - c, hi = low + q.degree() - c;
  const int m = std::max(-lo, hi);
  std::vector<BigInt> sym(2 * m + 1);
  for (int k = 0; k <= q.degree(); ++k) sym[m + low + k - c] = q.c[k];
  return sym;
}

}  // namespace

// ---- Poly

Poly::Poly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }

Poly Poly::constant(const BigInt& a) { return Poly(std::vector<BigInt>{a}); }

Poly Poly::monomial(int k, const BigInt& a) {
  std::vector<BigInt> v(k + 1);
  v[k] = a;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

int Poly::valuation() const {
  for (int k = 0; k < static_cast<int>(c.size()); ++k)
    if (c[k] != 0) return k;
  return 0;
}

BigInt Poly::content() const {
  BigInt g = 0;
  for (const auto& x : c) g = gcd_big(g, x);
  return g;
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (lead() < 0) g = -g;
  Poly r = *this;
  for (auto& x : r.c) x /= g;
  return r;
}

Poly Poly::reversed() const {
  Poly r = *this;
  std::reverse(r.c.begin(), r.c.end());
  r.trim();
  return r;
}

Poly Poly::shifted_down(int k) const {
  if (k == 0 || is_zero()) return *this;
  return Poly(std::vector<BigInt>(c.begin() + k, c.end()));
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    if (c[k] == 0) continue;
    BigInt a = c[k];
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    a = abs_big(a);
    if (k == 0 || a != 1) os << a;
    if (k > 0) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<BigInt> r(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return Poly(std::move(r));
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<BigInt> r(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  }
  return Poly(std::move(r));
}

Poly operator*(const BigInt& k, const Poly& a) {
  Poly r = a;
  for (auto& x : r.c) x *= k;
  r.trim();
  return r;
}

Poly pow(const Poly& p, int e) {
  Poly r = Poly::constant(1), b = p;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::BadInput, "division by the zero polynomial");
  Poly r = a;
  std::vector<BigInt> q(std::max(0, a.degree() - b.degree() + 1));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int k = r.degree() - b.degree();
    if (r.lead() % b.lead() != 0) throw Error(ErrorCode::BadInput, "inexact polynomial division");
    BigInt t = r.lead() / b.lead();
    q[k] = t;
    r = r - t * (Poly::monomial(k) * b);
  }
  if (!r.is_zero()) throw Error(ErrorCode::BadInput, "inexact polynomial division");
  return Poly(std::move(q));
}

Poly gcd(Poly a, Poly b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  a = a.primitive();
  b = b.primitive();
  while (!b.is_zero()) {
    Poly r = prem(a, b);
    a = std::move(b);
    b = r.primitive();
  }
  return a.primitive();
}

// ---- LaurentRational

LaurentRational::LaurentRational(int low, Poly num, Poly den) : low_(low), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

LaurentRational LaurentRational::constant(const BigInt& a) { return LaurentRational(0, Poly::constant(a), Poly::constant(1)); }

LaurentRational LaurentRational::monomial(int k) { return LaurentRational(k, Poly::constant(1), Poly::constant(1)); }

LaurentRational LaurentRational::laurent(int low, Poly p) { return LaurentRational(low, std::move(p), Poly::constant(1)); }

void LaurentRational::normalize() {
  if (den_.is_zero()) throw Error(ErrorCode::BadInput, "zero denominator");
  if (num_.is_zero()) {
    low_ = 0;
    den_ = Poly::constant(1);
    return;
  }
  const int vn = num_.valuation(), vd = den_.valuation();
  num_ = num_.shifted_down(vn);
  den_ = den_.shifted_down(vd);
  low_ += vn - vd;
  normalize_pair(num_, den_);
}

LaurentRational operator+(const LaurentRational& a, const LaurentRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int m = std::min(a.low_, b.low_);
  const Poly sa = Poly::monomial(a.low_ - m), sb = Poly::monomial(b.low_ - m);
  if (a.den_ == b.den_) return LaurentRational(m, sa * a.num_ + sb * b.num_, a.den_);
  return LaurentRational(m, sa * a.num_ * b.den_ + sb * b.num_ * a.den_, a.den_ * b.den_);
}

LaurentRational operator-(const LaurentRational& a) {
  LaurentRational r = a;
  r.num_ = -r.num_;
  return r;
}

LaurentRational operator-(const LaurentRational& a, const LaurentRational& b) { return a + (-b); }

LaurentRational operator*(const LaurentRational& a, const LaurentRational& b) {
  return LaurentRational(a.low_ + b.low_, a.num_ * b.num_, a.den_ * b.den_);
}

LaurentRational operator/(const LaurentRational& a, const LaurentRational& b) {
  if (b.is_zero()) throw Error(ErrorCode::BadInput, "division by zero");
  return LaurentRational(a.low_ - b.low_, a.num_ * b.den_, a.den_ * b.num_);
}

std::string LaurentRational::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (low_ != 0) os << "D^" << low_ << " * ";
  os << "(" << num_.to_string("D") << ")";
  if (!(den_ == Poly::constant(1))) os << " / (" << den_.to_string("D") << ")";
  return os.str();
}

LaurentRational pow(const LaurentRational& f, int e) {
  if (e < 0) return pow(LaurentRational::constant(1) / f, -e);
  LaurentRational r = LaurentRational::constant(1), b = f;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

LaurentRational transpose(const LaurentRational& f) {
  if (f.is_zero()) return f;
  return LaurentRational(-f.low() - f.num().degree() + f.den().degree(), f.num().reversed(), f.den().reversed());
}

bool is_symmetric(const LaurentRational& f) { return transpose(f) == f; }

bool is_antisymmetric(const LaurentRational& f) { return transpose(f) == -f; }

LaurentRational z_in_D() { return LaurentRational(1, Poly::constant(1), Poly({1, 4, 1})); }

LaurentRational B_in_D() { return LaurentRational(0, Poly({1, 4, 1}), Poly({1, 0, -1})); }

LaurentRational phi(int c) {
  if (c <= 0) throw Error(ErrorCode::BadInput, "cut value must be positive");
  return LaurentRational(c, Poly::constant(1), Poly::constant(1) - Poly::monomial(c));
}

std::string RationalZ::to_string(const std::string& var) const {
  std::string n = num.to_string(var);
  if (den == Poly::constant(1)) return n;
  return "(" + n + ") / (" + den.to_string(var) + ")";
}

RationalZ make_rational(Poly num, Poly den) {
  normalize_pair(num, den);
  return RationalZ{std::move(num), std::move(den)};
}

RationalZ rational_in_z(const LaurentRational& f) {
  if (!is_symmetric(f)) throw Error(ErrorCode::NotSymmetric, f.to_string());
  if (f.is_zero()) return RationalZ{Poly(), Poly::constant(1)};
  Poly num = f.num(), den = f.den();
  int low = f.low();
  int cp2 = 2 * low + num.degree(), cq2 = den.degree();
  if (cp2 != cq2) throw Error(ErrorCode::NotSymmetric, "unbalanced degrees in " + f.to_string());
  if (cp2 % 2 != 0) {
    // half-integer average degree: multiply through by D^-1/2 + D^1/2
    num = num * Poly({1, 1});
    den = den * Poly({1, 1});
    ++cp2;
  }
  Poly pw = symmetric_to_w(centred(low, num, cp2));
  Poly qw = symmetric_to_w(centred(0, den, cp2));
  const int total = std::max(pw.degree(), qw.degree());
  RationalZ r{w_to_z(pw, total), w_to_z(qw, total)};
  normalize_pair(r.num, r.den);
  return r;
}

// ---- TruncatedSeries

TruncatedSeries::TruncatedSeries(int order) : order_(order), c_(std::max(order, -1) + 1) {}

TruncatedSeries::TruncatedSeries(int order, std::vector<BigRat> coeffs) : order_(order), c_(std::move(coeffs)) {
  c_.resize(std::max(order, -1) + 1);
}

TruncatedSeries TruncatedSeries::variable(int order) {
  TruncatedSeries s(order);
  if (order >= 1) s.c_[1] = 1;
  return s;
}

bool TruncatedSeries::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const BigRat& x) { return denominator(x) == 1; });
}

std::vector<BigInt> TruncatedSeries::integers() const {
  if (!is_integral()) throw Error(ErrorCode::BadInput, "series has non-integral coefficients");
  std::vector<BigInt> out;
  for (const auto& x : c_) out.push_back(numerator(x));
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  return TruncatedSeries(std::min(order, order_), std::vector<BigRat>(c_.begin(), c_.begin() + std::min(order, order_) + 1));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order_, b.order_));
  for (int k = 0; k <= r.order_; ++k) r.c_[k] = a.c_[k] + b.c_[k];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order_, b.order_));
  for (int k = 0; k <= r.order_; ++k) r.c_[k] = a.c_[k] - b.c_[k];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order_, b.order_));
  for (int i = 0; i <= r.order_; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j <= r.order_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

TruncatedSeries operator*(const BigRat& k, const TruncatedSeries& a) {
  TruncatedSeries r = a;
  for (auto& x : r.c_) x *= k;
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (c_.empty() || c_[0] == 0) throw Error(ErrorCode::BadInput, "series is not invertible");
  TruncatedSeries r(order_);
  const BigRat inv0 = 1 / c_[0];
  r.c_[0] = inv0;
  for (int n = 1; n <= order_; ++n) {
    BigRat s = 0;
    for (int k = 1; k <= n; ++k) s += c_[k] * r.c_[n - k];
    r.c_[n] = -s * inv0;
  }
  return r;
}

TruncatedSeries TruncatedSeries::derivative() const {
  TruncatedSeries r(order_ - 1);
  for (int k = 1; k <= order_; ++k) r.c_[k - 1] = c_[k] * k;
  return r;
}

TruncatedSeries TruncatedSeries::integral() const {
  TruncatedSeries r(order_ + 1);
  for (int k = 0; k <= order_; ++k) r.c_[k + 1] = c_[k] / BigRat(k + 1);
  return r;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& g) const {
  if (g.order_ >= 0 && g.c_[0] != 0) throw Error(ErrorCode::BadInput, "composition needs g(0) = 0");
  const int order = std::min(order_, g.order_);
  TruncatedSeries r(order);
  for (int k = order; k >= 0; --k) {
    r = r * g.truncated(order);
    r.c_[0] += c_[k];
  }
  return r;
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
  if (k >= 0) {
    TruncatedSeries r(order_ + k);
    for (int i = 0; i <= order_; ++i) r.c_[i + k] = c_[i];
    return r;
  }
  for (int i = 0; i < -k && i <= order_; ++i)
    if (c_[i] != 0) throw Error(ErrorCode::BadInput, "negative powers in a power series");
  TruncatedSeries r(order_ + k);
  for (int i = 0; i <= r.order_; ++i) r.c_[i] = c_[i - k];
  return r;
}

int TruncatedSeries::valuation() const {
  for (int k = 0; k <= order_; ++k)
    if (c_[k] != 0) return k;
  return order_ + 1;
}

TruncatedSeries pow(const TruncatedSeries& s, int e) {
  if (e < 0) return pow(s.inverse(), -e);
  TruncatedSeries r(s.order());
  r[0] = 1;
  for (int i = 0; i < e; ++i) r = r * s;
  return r;
}

TruncatedSeries evaluate(const Poly& p, const TruncatedSeries& x) {
  TruncatedSeries r(x.order());
  for (int k = p.degree(); k >= 0; --k) {
    r = r * x;
    r[0] += BigRat(p.c[k]);
  }
  return r;
}

TruncatedSeries series_T(int order) {
  const TruncatedSeries z = TruncatedSeries::variable(order);
  TruncatedSeries t(order);
  for (int i = 0; i <= order; ++i) t = z + BigRat(3) * (t * t);
  return t;
}

TruncatedSeries series_D(int order) {
  const TruncatedSeries z = TruncatedSeries::variable(order);
  TruncatedSeries one(order);
  one[0] = 1;
  TruncatedSeries d(order);
  for (int i = 0; i <= order; ++i) d = z * (one + BigRat(4) * d + d * d);
  return d;
}

TruncatedSeries series_B(int order) {
  const TruncatedSeries z = TruncatedSeries::variable(order);
  TruncatedSeries one(order);
  one[0] = 1;
  const TruncatedSeries d = series_D(order);
  return (one - BigRat(4) * z - BigRat(2) * (z * d)).inverse();
}

TruncatedSeries series_B_closed(int order) { return expand_in_z(B_in_D(), order); }

TruncatedSeries expand_in_z(const LaurentRational& f, int order) {
  if (f.is_zero()) return TruncatedSeries(order);
  const int low = f.low();
  const int work = order - low;
  if (work < 0) return TruncatedSeries(order);
  // D = z u with u(0) = 1
  const TruncatedSeries d = series_D(work + 1);
  const TruncatedSeries u = d.shifted(-1);
  const TruncatedSeries dw = d.truncated(work);
  TruncatedSeries s = pow(u, low) * evaluate(f.num(), dw) * evaluate(f.den(), dw).inverse();
  return s.shifted(low).truncated(order);
}

TruncatedSeries expand_in_z(const RationalZ& f, int order) {
  if (f.num.is_zero()) return TruncatedSeries(order);
  const int vn = f.num.valuation(), vd = f.den.valuation();
  const int low = vn - vd;
  const int work = order - low;
  if (work < 0) return TruncatedSeries(order);
  const TruncatedSeries z = TruncatedSeries::variable(work);
  TruncatedSeries s = evaluate(f.num.shifted_down(vn), z) * evaluate(f.den.shifted_down(vd), z).inverse();
  return s.shifted(low).truncated(order);
}

TruncatedSeries expand_in_D(const LaurentRational& f, int order) {
  if (f.is_zero()) return TruncatedSeries(order);
  const int low = f.low();
  const int work = order - low;
  if (work < 0) return TruncatedSeries(order);
  const TruncatedSeries x = TruncatedSeries::variable(work);
  TruncatedSeries s = evaluate(f.num(), x) * evaluate(f.den(), x).inverse();
  return s.shifted(low).truncated(order);
}

std::vector<BigInt> count_trees_by_leaves(int max_leaves) {
  // Each tree is written out explicitly: a leaf "L", or an inner vertex
  // "(left,right,k)" where k in {0,1,2} places its bud among the three gaps.
  std::vector<std::vector<std::string>> trees(max_leaves + 1);
  std::vector<BigInt> counts(max_leaves + 1);
  if (max_leaves >= 1) trees[1] = {"L"};
  for (int n = 2; n <= max_leaves; ++n) {
    std::set<std::string> seen;
    for (int a = 1; a < n; ++a)
      for (const auto& l : trees[a])
        for (const auto& r : trees[n - a])
          for (int k = 0; k < 3; ++k) seen.insert("(" + l + "," + r + "," + std::to_string(k) + ")");
    trees[n].assign(seen.begin(), seen.end());
  }
  for (int n = 1; n <= max_leaves; ++n) counts[n] = trees[n].size();
  return counts;
}

std::vector<BigInt> count_D_paths(int max_length) {
  // length n: n-1 steps from 0 back to 0 staying >= 0, then one down-step.
  std::vector<BigInt> out(max_length + 1);
  std::vector<BigInt> ways(max_length + 2);
  ways[0] = 1;
  for (int n = 1; n <= max_length; ++n) {
    out[n] = ways[0];
    std::vector<BigInt> next(max_length + 2);
    for (int h = 0; h <= max_length; ++h) {
      if (ways[h] == 0) continue;
      next[h] += 4 * ways[h];
      next[h + 1] += ways[h];
      if (h > 0) next[h - 1] += ways[h];
    }
    ways = std::move(next);
  }
  return out;
}

std::vector<BigInt> count_B_paths(int max_length) {
  const int off = max_length + 1;
  std::vector<BigInt> out(max_length + 1);
  std::vector<BigInt> ways(2 * off + 1);
  ways[off] = 1;
  for (int n = 0; n <= max_length; ++n) {
    out[n] = ways[off];
    std::vector<BigInt> next(2 * off + 1);
    for (int h = 1; h < 2 * off; ++h) {
      if (ways[h] == 0) continue;
      next[h] += 4 * ways[h];
      next[h + 1] += ways[h];
      next[h - 1] += ways[h];
    }
    ways = std::move(next);
  }
  return out;
}

}  // namespace mapforge
