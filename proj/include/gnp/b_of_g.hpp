#pragma once

#include "gnp/affine_weyl.hpp"

#include <map>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gnp {

// A sigma-conjugacy class, identified by (nu, kappa). kappa_lift is some
// coweight mapping to kappa.
struct SigmaClass {
  RatCoweight nu;
  Pi1Class kappa;
  Coweight kappa_lift;
  friend bool operator==(const SigmaClass& a, const SigmaClass& b) { return a.nu == b.nu && a.kappa == b.kappa; }
  friend bool operator<(const SigmaClass& a, const SigmaClass& b) {
    if (a.kappa == b.kappa) return a.nu < b.nu;
    return a.kappa < b.kappa;
  }
};

struct ClassInvariants {
  GammaClass lambda;
  Int defect = 0;
  SimpleRootSet j1, j2;
};

// (v, J) as in condition (iii) of the fundamental criterion
struct FundamentalWitness {
  WeylElement v;
  SimpleRootSet j;
};

// Dimension of the fixed space of an integer matrix acting on Q^n.
inline int fixed_dimension(const IntMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j] - (i == j ? 1 : 0));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      Rational f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(n - rank);
}

class BofG {
 public:
  explicit BofG(const RootDatum& d) : d_(&d), aw_(d) {}

  const RootDatum& datum() const { return *d_; }
  const AffineWeyl& affine() const { return aw_; }

  // nu: dominant representative of (1/N) sum_{k=1}^N (sigma o w)^k mu; kappa: image of mu
  SigmaClass class_of(const AffineElement& x) const {
    IntMatrix m = gnp::multiply(d_->sigma_matrix(), d_->weyl().matrix(x.w.index()));
    RatCoweight acc(d_->lattice_rank());
    RatCoweight cur = to_rational(x.mu);
    const RatCoweight start = cur;
    int n = 0;
    do {
      cur = gnp::apply(m, cur);
      acc += cur;
      ++n;
    } while (cur != start);
    // the orbit of mu may be shorter than the order of sigma o w; the average is the same
    acc /= Rational(n);
    return {d_->dominant_representative(acc).first, d_->pi1_class(x.mu), x.mu};
  }

  bool leq(const SigmaClass& a, const SigmaClass& b) const {
    return a.kappa == b.kappa && d_->leq_coroot_cone(a.nu, b.nu);
  }

  // Coroot coordinates of nu - avg_sigma(lift) are sigma-invariant; on each
  // sigma-orbit O the coefficient sum C_O of a candidate is bounded by
  // |O| * d_O, and the bound is attained.
  GammaClass lambda_invariant(const SigmaClass& b) const {
    auto d = d_->coroot_coordinates(b.nu - d_->avg_sigma(b.kappa_lift));
    if (!d) throw std::logic_error("lambda_invariant: nu and kappa are inconsistent");
    std::vector<Int> c(d_->rank(), 0);
    for (auto orbit : d_->sigma_orbits()) {
      auto mem = orbit.members();
      Rational lo = (*d)[mem[0]];
      for (int i : mem) lo = std::min(lo, (*d)[i]);
      c[mem[0]] = floor(lo * Rational(static_cast<Int>(mem.size())));
    }
    return d_->gamma_class(b.kappa_lift + d_->from_coroot_coords(c));
  }

  ClassInvariants invariants(const SigmaClass& b) const {
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(b);
      if (it != cache_.end()) return it->second;
    }
    ClassInvariants inv;
    inv.lambda = lambda_invariant(b);
    Rational dd = d_->pair_2rho(b.nu) - Rational(d_->pair_2rho(inv.lambda.representative));
    if (dd.denominator() != 1) throw std::logic_error("defect is not an integer");
    inv.defect = dd.numerator();
    auto c = d_->coroot_coordinates(b.nu - inv.lambda.average);
    for (int i = 0; i < d_->rank(); ++i) {
      if ((*c)[i] != 0) inv.j1.insert(i);
      if (d_->pair(b.nu, i) == 0) inv.j2.insert(i);
    }
    std::unique_lock lock(mutex_);
    return cache_.emplace(b, inv).first->second;
  }

  // (iii): <nu, 2rho> - <lambda, 2rho>
  Int defect(const SigmaClass& b) const { return invariants(b).defect; }
  Rational defect_pairing(const SigmaClass& b) const {
    return d_->pair_2rho(b.nu) - d_->pair_2rho(to_rational(lambda_invariant(b).representative));
  }
  // (iv): number of sigma-orbits in J1
  Int defect_orbits(const SigmaClass& b) const { return d_->count_sigma_orbits(invariants(b).j1); }

  // min over v in the given set of l(v^{-1} ^sigma(w v))
  Int min_twisted_length(WeylElement w, const std::vector<WeylElement>& vs) const {
    Int best = -1;
    for (const auto& v : vs) {
      Int l = (v.inverse() * d_->twist(w * v)).length();
      if (best < 0 || l < best) best = l;
    }
    return best;
  }
  // (v) for a fundamental representative
  Int defect_min_length(const AffineElement& x) const { return min_twisted_length(x.w, d_->weyl().elements()); }

  // Condition (iii) of the fundamental criterion; prefers the given J first.
  // With exact set, only the preferred J is tried.
  std::optional<FundamentalWitness> fundamental_witness(const AffineElement& x,
                                                        std::optional<SimpleRootSet> prefer = std::nullopt,
                                                        bool exact = false) const {
    const int r = d_->rank();
    std::vector<SimpleRootSet> js;
    if (prefer) js.push_back(*prefer);
    for (int size = 0; size <= r && !(prefer && exact); ++size)
      for (std::uint32_t bits = 0; bits < (1u << r); ++bits) {
        SimpleRootSet j(bits);
        if (j.size() == size && (!prefer || !(j == *prefer))) js.push_back(j);
      }
    auto lp = aw_.lp_set(x);
    for (auto j : js) {
      if (!d_->is_sigma_stable(j)) continue;
      for (const auto& v : lp) {
        if (!d_->weyl().in_parabolic(v.inverse() * d_->twist(x.w * v), j)) continue;
        bool ok = true;
        for (int b = 0; b < d_->roots().num_positive() && ok; ++b)
          if (d_->roots().in_subsystem(b, j) && aw_.length_functional(x, v.act(b)) != 0) ok = false;
        if (ok) return FundamentalWitness{v, j};
      }
    }
    return std::nullopt;
  }

  // (^{sigma^{-1}} v)^{-1} x v with v minimal in its W_J coset: length zero in the Levi of J
  AffineElement levi_representative(const AffineElement& x, const FundamentalWitness& fw) const {
    WeylElement vmin = fw.v;
    for (const auto& u : d_->weyl().parabolic(fw.j)) {
      auto c = fw.v * u;
      if (c.length() < vmin.length()) vmin = c;
    }
    AffineElement left{d_->untwist(vmin).inverse(), Coweight(d_->lattice_rank())};
    AffineElement right{vmin, Coweight(d_->lattice_rank())};
    return aw_.multiply(aw_.multiply(left, x), right);
  }

  // sum over Phi^+_J of |l(x, alpha)|
  Int levi_length(const AffineElement& x, SimpleRootSet j) const {
    Int s = 0;
    for (int b = 0; b < d_->roots().num_positive(); ++b)
      if (d_->roots().in_subsystem(b, j)) {
        Int v = aw_.length_functional(x, b);
        s += v < 0 ? -v : v;
      }
    return s;
  }

  // (vi) on a Levi-length-zero representative: min over W_{J1}
  Int defect_levi_min(const AffineElement& xlevi, SimpleRootSet j1) const {
    return min_twisted_length(xlevi.w, d_->weyl().parabolic(j1));
  }

  // (i) on a Levi-length-zero representative
  Int defect_fixed_dimension(const AffineElement& xlevi) const {
    return fixed_dimension(d_->sigma_matrix()) -
           fixed_dimension(gnp::multiply(d_->sigma_matrix(), d_->weyl().matrix(xlevi.w.index())));
  }

  // fundamental y <= x with class_of(y) = b
  std::optional<AffineElement> fundamental_representative(const SigmaClass& b, const AffineElement& x,
                                                          std::size_t max_interval = 1u << 20) const {
    if (aw_.is_fundamental(x) && class_of(x) == b) return x;
    for (const auto& y : aw_.lower_interval(x, max_interval))
      if (aw_.is_fundamental(y) && class_of(y) == b) return y;
    return std::nullopt;
  }

  // d_x(b) = (l(x) + l(eta_sigma(x)) - <nu(b), 2rho> - defect(b)) / 2
  Rational virtual_dimension(const AffineElement& x, const SigmaClass& b) const {
    Rational v = Rational(aw_.length(x) + aw_.eta_sigma(x).length()) - d_->pair_2rho(b.nu) - Rational(defect(b));
    return v / Rational(2);
  }

 private:
  const RootDatum* d_;
  AffineWeyl aw_;
  mutable std::shared_mutex mutex_;
  mutable std::map<SigmaClass, ClassInvariants> cache_;
};

}  // namespace gnp
