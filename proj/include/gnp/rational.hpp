#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

// Under C++20 rewritten comparisons, boost 1.74's mixed integer/rational
// operator== calls itself. Exact non-template overloads win resolution.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) { return a == rational<std::int64_t>(b); }
inline bool operator==(std::int64_t b, const rational<std::int64_t>& a) { return a == rational<std::int64_t>(b); }
}  // namespace boost

namespace gnp {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floor(const Rational& q) { return floor_div(q.numerator(), q.denominator()); }

inline Int mod_floor(Int a, Int m) { return a - m * floor_div(a, m); }

// "p" or "p/q"
inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

// Fixed-length coordinate vector; used for coweights in lattice coordinates
// and for coroot coefficients.
template <class Scalar>
class CoordVector {
 public:
  using value_type = Scalar;

  CoordVector() = default;
  explicit CoordVector(std::size_t n) : c_(n, Scalar(0)) {}
  CoordVector(std::initializer_list<Scalar> xs) : c_(xs) {}
  explicit CoordVector(std::vector<Scalar> xs) : c_(std::move(xs)) {}

  std::size_t size() const { return c_.size(); }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }
  auto begin() { return c_.begin(); }
  auto end() { return c_.end(); }
  const std::vector<Scalar>& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != Scalar(0)) return false;
    return true;
  }

  CoordVector& operator+=(const CoordVector& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  CoordVector& operator-=(const CoordVector& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  CoordVector& operator*=(const Scalar& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  CoordVector& operator/=(const Scalar& s) {
    for (auto& x : c_) x /= s;
    return *this;
  }
  friend CoordVector operator+(CoordVector a, const CoordVector& b) { return a += b; }
  friend CoordVector operator-(CoordVector a, const CoordVector& b) { return a -= b; }
  friend CoordVector operator*(const Scalar& s, CoordVector a) { return a *= s; }
  friend CoordVector operator-(CoordVector a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend bool operator==(const CoordVector&, const CoordVector&) = default;
  friend bool operator<(const CoordVector& a, const CoordVector& b) { return a.c_ < b.c_; }

 private:
  std::vector<Scalar> c_;
};

using Coweight = CoordVector<Int>;
using RatCoweight = CoordVector<Rational>;

inline RatCoweight to_rational(const Coweight& v) {
  RatCoweight r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

inline bool is_integral(const RatCoweight& v) {
  for (const auto& x : v)
    if (x.denominator() != 1) return false;
  return true;
}

inline Coweight to_integral(const RatCoweight& v) {
  Coweight r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].numerator();
  return r;
}

inline std::string to_string(const Coweight& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

inline std::string to_string(const RatCoweight& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Coweight& v) { return os << "(" << to_string(v) << ")"; }
inline std::ostream& operator<<(std::ostream& os, const RatCoweight& v) { return os << "(" << to_string(v) << ")"; }

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct CoweightHash {
  std::size_t operator()(const Coweight& v) const {
    std::size_t h = v.size();
    for (auto x : v) h = hash_combine(h, std::hash<Int>{}(x));
    return h;
  }
  std::size_t operator()(const RatCoweight& v) const {
    std::size_t h = v.size();
    for (const auto& x : v) {
      h = hash_combine(h, std::hash<Int>{}(x.numerator()));
      h = hash_combine(h, std::hash<Int>{}(x.denominator()));
    }
    return h;
  }
};

using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rational>>;

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

template <class S>
CoordVector<S> apply(const IntMatrix& m, const CoordVector<S>& v) {
  CoordVector<S> r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    S acc(0);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (m[i][j] != 0) acc += S(m[i][j]) * v[j];
    r[i] = acc;
  }
  return r;
}

// Inverse over Q; returns empty matrix if singular.
inline RatMatrix inverse(const RatMatrix& a) {
  std::size_t n = a.size();
  RatMatrix m = a, inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return {};
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

inline RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (auto x : a[i]) r[i].push_back(Rational(x));
  return r;
}

}  // namespace gnp

template <class S>
struct std::hash<gnp::CoordVector<S>> {
  std::size_t operator()(const gnp::CoordVector<S>& v) const { return gnp::CoweightHash{}(v); }
};
