#pragma once

// Exact arithmetic in a simple real algebraic extension K = Q(theta), where
// theta is a root of a monic integer polynomial. All scalars of an analysis
// session (edge parameters, Cartan entries, basis coefficients) live in one
// such field; plain rationals are the degree-1 case.
//
// FieldElement carries a pointer to its FieldContext. Elements built without
// a context are rational constants and combine freely with elements of any
// context. The context must outlive the elements that reference it.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxaff/rational.hpp"

namespace coxaff {

class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct MinimalPolynomial {
  std::vector<BigInt> coeffs;  // ascending degree, monic: coeffs.back() == 1

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  static MinimalPolynomial from_ints(std::vector<long long> c) {
    MinimalPolynomial mp;
    for (long long v : c) mp.coeffs.emplace_back(v);
    return mp;
  }

  friend bool operator==(const MinimalPolynomial& a, const MinimalPolynomial& b) {
    return a.coeffs == b.coeffs;
  }
};

namespace detail {

// floor(sqrt(n)) for n >= 0, by bisection on the bit length
inline BigInt isqrt(const BigInt& n) {
  if (n.is_zero()) return BigInt(0);
  BigInt lo(0), hi(1);
  while (hi * hi <= n) hi = hi * BigInt(2);
  while (lo + BigInt(1) < hi) {
    BigInt mid = (lo + hi) / BigInt(2);
    if (mid * mid <= n)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace detail

class FieldContext {
public:
  explicit FieldContext(MinimalPolynomial mp) : minpoly_(std::move(mp)) {
    const int d = minpoly_.degree();
    if (d < 1) throw error("minimal polynomial must have degree >= 1");
    if (!minpoly_.coeffs.back().is_one()) throw error("minimal polynomial must be monic");
    if (d == 2) {
      // X^2 + bX + c reducible over Q iff b^2 - 4c is a perfect square;
      // negative discriminant would give a non-real field.
      const BigInt &b = minpoly_.coeffs[1], &c = minpoly_.coeffs[0];
      BigInt disc = b * b - BigInt(4) * c;
      if (disc.is_negative()) throw error("quadratic minimal polynomial has no real root");
      BigInt s = detail::isqrt(disc);
      if (s * s == disc) throw error("quadratic minimal polynomial is reducible over Q");
    }
    // degree >= 3: irreducibility is asserted by the caller.
    // Precompute theta^d .. theta^{2d-2} reduced below degree d.
    if (d > 1) {
      std::vector<Rational> pow(d);  // theta^d = -(c_0 + c_1 theta + ...)
      for (int i = 0; i < d; ++i) pow[i] = Rational(-minpoly_.coeffs[i]);
      reduced_powers_.push_back(pow);
      for (int k = d + 1; k <= 2 * d - 2; ++k) {
        std::vector<Rational> next(d);
        const std::vector<Rational>& prev = reduced_powers_.back();
        // multiply by theta, fold the spill-over of theta^d
        Rational top = prev[d - 1];
        for (int i = d - 1; i > 0; --i) next[i] = prev[i - 1];
        next[0] = Rational(0);
        for (int i = 0; i < d; ++i) next[i] += top * reduced_powers_[0][i];
        reduced_powers_.push_back(std::move(next));
      }
    }
  }

  int degree() const { return minpoly_.degree(); }
  const MinimalPolynomial& minimal_polynomial() const { return minpoly_; }

  // coefficients of theta^(degree()+k) in the basis 1, theta, ..., theta^{d-1}
  const std::vector<Rational>& reduced_power(int k) const { return reduced_powers_[k]; }

  friend bool operator==(const FieldContext& a, const FieldContext& b) {
    return a.minpoly_ == b.minpoly_;
  }

private:
  MinimalPolynomial minpoly_;
  std::vector<std::vector<Rational>> reduced_powers_;
};

using FieldRef = std::shared_ptr<const FieldContext>;

inline FieldRef make_field(MinimalPolynomial mp) {
  return std::make_shared<const FieldContext>(std::move(mp));
}
inline FieldRef make_rational_field() {
  return make_field(MinimalPolynomial::from_ints({-1, 1}));  // X - 1, K = Q
}

class FieldElement {
public:
  FieldElement() : ctx_(nullptr), c_(1) {}
  FieldElement(long long v) : ctx_(nullptr), c_(1, Rational(v)) {}
  FieldElement(int v) : FieldElement(static_cast<long long>(v)) {}
  FieldElement(Rational q) : ctx_(nullptr), c_(1, std::move(q)) {}
  FieldElement(const FieldContext* ctx, std::vector<Rational> coeffs)
      : ctx_(ctx), c_(std::move(coeffs)) {
    if (ctx_ && static_cast<int>(c_.size()) != ctx_->degree())
      throw error("FieldElement: coefficient vector does not match field degree");
  }

  static FieldElement theta(const FieldContext& ctx) {
    std::vector<Rational> c(ctx.degree());
    if (ctx.degree() == 1)
      c[0] = Rational(ctx.minimal_polynomial().coeffs[0]) * Rational(-1);  // root of X - r
    else
      c[1] = Rational(1);
    return FieldElement(&ctx, std::move(c));
  }

  const FieldContext* context() const { return ctx_; }
  bool is_zero() const {
    for (const auto& q : c_)
      if (!q.is_zero()) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  // the d rational coordinates in the basis 1, theta, ..., theta^{d-1}
  const std::vector<Rational>& coordinates() const { return c_; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    auto [ctx, x, y] = align(a, b);
    std::vector<Rational> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return FieldElement(ctx, std::move(r));
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    auto [ctx, x, y] = align(a, b);
    std::vector<Rational> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return FieldElement(ctx, std::move(r));
  }
  FieldElement operator-() const {
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return FieldElement(ctx_, std::move(r));
  }

  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    auto [ctx, x, y] = align(a, b);
    const std::size_t d = x.size();
    if (d == 1) return FieldElement(ctx, {x[0] * y[0]});
    std::vector<Rational> full(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (y[j].is_zero()) continue;
        full[i + j] += x[i] * y[j];
      }
    }
    std::vector<Rational> r(full.begin(), full.begin() + d);
    for (std::size_t k = d; k < full.size(); ++k) {
      if (full[k].is_zero()) continue;
      const auto& pw = ctx->reduced_power(static_cast<int>(k - d));
      for (std::size_t i = 0; i < d; ++i) r[i] += full[k] * pw[i];
    }
    return FieldElement(ctx, std::move(r));
  }

  FieldElement inverse() const {
    if (is_zero()) throw error("FieldElement: inverse of zero");
    if (!ctx_ || is_rational()) {
      if (ctx_) return lifted(ctx_, {c_[0].inverse()});
      return FieldElement(c_[0].inverse());
    }
    // extended Euclid in Q[X]: u * this + v * minpoly = gcd
    std::vector<Rational> r0, r1 = c_;
    for (const BigInt& b : ctx_->minimal_polynomial().coeffs) r0.emplace_back(b);
    strip(r1);
    std::vector<Rational> u0{Rational(0)}, u1{Rational(1)};
    while (poly_degree(r1) > 0) {
      auto [q, rem] = poly_divmod(r0, r1);
      std::vector<Rational> u2 = poly_sub(u0, poly_mul(q, u1));
      r0 = std::move(r1);
      r1 = std::move(rem);
      u0 = std::move(u1);
      u1 = std::move(u2);
    }
    if (poly_degree(r1) < 0)
      throw error("FieldElement: not invertible (minimal polynomial is reducible)");
    Rational lead = r1[0].inverse();
    std::vector<Rational> inv(ctx_->degree());
    for (std::size_t i = 0; i < u1.size() && i < inv.size(); ++i) inv[i] = u1[i] * lead;
    return FieldElement(ctx_, std::move(inv));
  }

  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
  }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    auto [ctx, x, y] = align(a, b);
    (void)ctx;
    return x == y;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  std::string to_string() const {
    if (is_rational()) return c_[0].to_string();
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      std::string term;
      if (i == 0)
        term = c_[i].to_string();
      else {
        std::string mono = i == 1 ? "theta" : "theta^" + std::to_string(i);
        if (c_[i].is_one())
          term = mono;
        else if (c_[i] == Rational(-1))
          term = "-" + mono;
        else
          term = c_[i].to_string() + "*" + mono;
      }
      if (!s.empty() && term[0] != '-') s += "+";
      s += term;
    }
    return s.empty() ? "0" : s;
  }

  // hash is context-free so that a constant equals its lifted copy
  std::size_t hash() const {
    std::size_t h = 14695981039346656037ULL;
    std::size_t last = c_.size();
    while (last > 0 && c_[last - 1].is_zero()) --last;
    for (std::size_t i = 0; i < last; ++i) {
      h ^= c_[i].hash();
      h *= 1099511628211ULL;
    }
    return h;
  }

private:
  static FieldElement lifted(const FieldContext* ctx, std::vector<Rational> low) {
    std::vector<Rational> c(ctx->degree());
    for (std::size_t i = 0; i < low.size(); ++i) c[i] = std::move(low[i]);
    return FieldElement(ctx, std::move(c));
  }

  struct Aligned {
    const FieldContext* ctx;
    std::vector<Rational> x, y;
  };
  static Aligned align(const FieldElement& a, const FieldElement& b) {
    if (a.ctx_ == b.ctx_) return {a.ctx_, a.c_, b.c_};
    if (a.ctx_ && b.ctx_) {
      if (*a.ctx_ == *b.ctx_) return {a.ctx_, a.c_, b.c_};
      throw error("FieldElement: mixing elements of different fields");
    }
    const FieldContext* ctx = a.ctx_ ? a.ctx_ : b.ctx_;
    std::vector<Rational> x(ctx->degree()), y(ctx->degree());
    for (std::size_t i = 0; i < a.c_.size() && i < x.size(); ++i) x[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size() && i < y.size(); ++i) y[i] = b.c_[i];
    if (!a.ctx_ && !a.is_rational()) throw error("FieldElement: cannot lift");
    if (!b.ctx_ && !b.is_rational()) throw error("FieldElement: cannot lift");
    return {ctx, std::move(x), std::move(y)};
  }

  // dense polynomial helpers over Q (ascending coefficients)
  static void strip(std::vector<Rational>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  }
  static int poly_degree(const std::vector<Rational>& p) {
    return static_cast<int>(p.size()) - 1;
  }
  static std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                                        const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    strip(r);
    return r;
  }
  static std::vector<Rational> poly_sub(const std::vector<Rational>& a,
                                        const std::vector<Rational>& b) {
    std::vector<Rational> r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = (i < a.size() ? a[i] : Rational(0)) - (i < b.size() ? b[i] : Rational(0));
    strip(r);
    return r;
  }
  static std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(
      std::vector<Rational> a, const std::vector<Rational>& b) {
    if (a.size() < b.size()) return {{}, a};
    std::vector<Rational> q(a.size() - b.size() + 1);
    Rational lead = b.back().inverse();
    while (a.size() >= b.size() && !a.empty()) {
      Rational f = a.back() * lead;
      std::size_t off = a.size() - b.size();
      q[off] = f;
      for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
      strip(a);
    }
    strip(q);
    return {q, a};
  }

  const FieldContext* ctx_;
  std::vector<Rational> c_;
};

// ---- the edge-parameter table -------------------------------------------
//
// An edge labelled p admits the parameter values alpha = 4cos^2(k pi / p),
// the roots of the polynomial below. Built-in labels: 3, 4, 5, 6.

inline MinimalPolynomial edge_root_polynomial(int p) {
  switch (p) {
    case 3: return MinimalPolynomial::from_ints({-1, 1});      // X - 1
    case 4: return MinimalPolynomial::from_ints({-2, 1});      // X - 2
    case 5: return MinimalPolynomial::from_ints({1, -3, 1});   // X^2 - 3X + 1
    case 6: return MinimalPolynomial::from_ints({-3, 1});      // X - 3
    default:
      throw error("edge label p=" + std::to_string(p) +
                  " is not in the built-in table; extend the table by binding an explicit "
                  "alpha in the session field");
  }
}

// Roots of the label-p polynomial expressed in K; throws if K cannot host them.
inline std::vector<FieldElement> edge_root_values(int p, const FieldContext& K) {
  switch (p) {
    case 3: return {FieldElement(1)};
    case 4: return {FieldElement(2)};
    case 6: return {FieldElement(3)};
    case 5: {
      if (K.minimal_polynomial() == edge_root_polynomial(5)) {
        FieldElement tau = FieldElement::theta(K);
        return {tau, FieldElement(3) - tau};  // 4cos^2(pi/5), 4cos^2(2pi/5)
      }
      throw error("label p=5 needs the session field X^2-3X+1 (its roots tau, 3-tau)");
    }
    default:
      throw error("edge label p=" + std::to_string(p) +
                  " is not in the built-in table; extend the table by binding an explicit "
                  "alpha in the session field");
  }
}

// Does alpha satisfy the label-p polynomial? (checkable only for table labels)
inline bool is_edge_root(int p, const FieldElement& alpha) {
  MinimalPolynomial vp = edge_root_polynomial(p);
  FieldElement acc(0), pw(1);
  for (const BigInt& c : vp.coeffs) {
    acc += FieldElement(Rational(c)) * pw;
    pw *= alpha;
  }
  return acc.is_zero();
}

}  // namespace coxaff
