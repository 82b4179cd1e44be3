#pragma once

#include "gnp/rational.hpp"
#include "gnp/root_system.hpp"
#include "gnp/smith.hpp"
#include "gnp/weyl.hpp"

#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gnp {

struct DatumError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Omega part of a non-quasi-split Frobenius: gamma = eps^{mu_sigma} sigma_1.
struct OmegaTwist {
  std::vector<int> sigma1_word;  // 0-based simple indices
  Coweight mu_sigma;
};

struct DatumSpec {
  std::vector<CartanComponent> components;
  std::string lattice = "sc";  // sc | adjoint | gl | custom
  IntMatrix lattice_basis;     // custom: rows in fundamental-coweight coordinates
  std::vector<int> frobenius_perm;  // 0-based image of each simple root; empty = identity
  std::optional<OmegaTwist> twist;
  std::size_t max_weyl_order = 51840;
};

// Class in X / (Z Phi^vee + (1-sigma) X).
struct Pi1Class {
  std::vector<Int> canonical;
  friend bool operator==(const Pi1Class&, const Pi1Class&) = default;
  friend bool operator<(const Pi1Class& a, const Pi1Class& b) { return a.canonical < b.canonical; }
};

// Class in X / (1-sigma) X together with its sigma-average.
struct GammaClass {
  Coweight representative;
  std::vector<Int> canonical;
  RatCoweight average;
  friend bool operator==(const GammaClass& a, const GammaClass& b) { return a.canonical == b.canonical; }
};

class RootDatum {
 public:
  explicit RootDatum(DatumSpec spec) : spec_(std::move(spec)), rs_(spec_.components) {
    const int r = rs_.rank();
    build_lattice();
    root_fun_.assign(rs_.num_roots(), std::vector<Int>(n_, 0));
    coroot_x_.assign(rs_.num_roots(), Coweight(n_));
    for (int b = 0; b < rs_.num_roots(); ++b) {
      for (int j = 0; j < r; ++j) {
        Int bj = rs_.root(b)[j], cj = rs_.coroot(b)[j];
        for (std::size_t k = 0; k < n_; ++k) {
          root_fun_[b][k] += bj * simple_fun_[j][k];
          coroot_x_[b][k] += cj * simple_coroot_[j][k];
        }
      }
    }
    two_rho_.assign(n_, 0);
    for (int b = 0; b < rs_.num_positive(); ++b)
      for (std::size_t k = 0; k < n_; ++k) two_rho_[k] += root_fun_[b][k];
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (pair(coroot_x_[i], j) != rs_.cartan(i, j))
          throw std::logic_error("lattice presentation does not reproduce the Cartan matrix");
    RatMatrix at(r, std::vector<Rational>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) at[i][j] = rs_.cartan(j, i);
    cartan_t_inv_ = inverse(at);
    build_frobenius();
    IntMatrix coroot_rows;
    for (int i = 0; i < r; ++i) coroot_rows.push_back(simple_coroot_[i].coords());
    pi1_ = LatticeQuotient(n_, coroot_rows);
    IntMatrix one_minus_sigma;
    for (std::size_t k = 0; k < n_; ++k) {
      Coweight e(n_);
      e[k] = 1;
      one_minus_sigma.push_back((e - sigma(e)).coords());
    }
    gamma_ = LatticeQuotient(n_, one_minus_sigma);
    auto both = coroot_rows;
    both.insert(both.end(), one_minus_sigma.begin(), one_minus_sigma.end());
    pi1_gamma_ = LatticeQuotient(n_, both);
  }

  static std::shared_ptr<const RootDatum> create(DatumSpec spec) {
    auto d = std::make_shared<RootDatum>(std::move(spec));
    if (d->spec_.twist) d->validate_twist();
    return d;
  }

  RootDatum(const RootDatum&) = delete;
  RootDatum& operator=(const RootDatum&) = delete;

  const DatumSpec& spec() const { return spec_; }
  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank(); }
  std::size_t lattice_rank() const { return n_; }

  const WeylGroup& weyl() const {
    std::call_once(weyl_once_, [this] {
      std::vector<IntMatrix> mats;
      for (int i = 0; i < rank(); ++i) {
        IntMatrix m = identity_matrix(n_);
        for (std::size_t a = 0; a < n_; ++a)
          for (std::size_t b = 0; b < n_; ++b) m[a][b] -= simple_coroot_[i][a] * simple_fun_[i][b];
        mats.push_back(m);
      }
      weyl_ = std::make_unique<WeylGroup>(rs_, std::move(mats), spec_.max_weyl_order);
    });
    return *weyl_;
  }

  // Order of W from the degrees of each component, without materializing.
  static std::uint64_t weyl_order(const CartanComponent& c) {
    std::uint64_t n = c.rank, f = 1;
    switch (c.type) {
      case CartanType::A: for (std::uint64_t k = 2; k <= n + 1; ++k) f *= k; return f;
      case CartanType::B:
      case CartanType::C: for (std::uint64_t k = 2; k <= n; ++k) f *= k; return f << n;
      case CartanType::D: for (std::uint64_t k = 2; k <= n; ++k) f *= k; return f << (n - 1);
      case CartanType::E: return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
      case CartanType::F: return 1152;
      case CartanType::G: return 12;
    }
    return 0;
  }
  std::uint64_t weyl_order() const {
    std::uint64_t o = 1;
    for (const auto& c : rs_.components()) o *= weyl_order(c);
    return o;
  }

  // ---- pairings ----
  Int pair(const Coweight& mu, int root) const {
    Int s = 0;
    for (std::size_t k = 0; k < n_; ++k) s += mu[k] * root_fun_[root][k];
    return s;
  }
  Rational pair(const RatCoweight& mu, int root) const {
    Rational s = 0;
    for (std::size_t k = 0; k < n_; ++k)
      if (root_fun_[root][k] != 0) s += mu[k] * root_fun_[root][k];
    return s;
  }
  Int pair_2rho(const Coweight& mu) const {
    Int s = 0;
    for (std::size_t k = 0; k < n_; ++k) s += mu[k] * two_rho_[k];
    return s;
  }
  Rational pair_2rho(const RatCoweight& mu) const {
    Rational s = 0;
    for (std::size_t k = 0; k < n_; ++k) s += mu[k] * two_rho_[k];
    return s;
  }
  const std::vector<Int>& root_functional(int root) const { return root_fun_[root]; }
  const std::vector<Int>& two_rho() const { return two_rho_; }

  // alpha^vee in lattice coordinates
  const Coweight& coroot(int root) const { return coroot_x_[root]; }

  Coweight from_coroot_coords(const std::vector<Int>& c) const {
    Coweight x(n_);
    for (int i = 0; i < rank(); ++i)
      if (c[i] != 0) x += c[i] * simple_coroot_[i];
    return x;
  }
  RatCoweight from_coroot_coords(const std::vector<Rational>& c) const {
    RatCoweight x(n_);
    for (int i = 0; i < rank(); ++i)
      if (c[i] != 0) x += c[i] * to_rational(simple_coroot_[i]);
    return x;
  }

  // Coefficients c with mu = sum c_i alpha_i^vee, if mu lies in Q Phi^vee.
  std::optional<std::vector<Rational>> coroot_coordinates(const RatCoweight& mu) const {
    const int r = rank();
    std::vector<Rational> p(r), c(r, Rational(0));
    for (int j = 0; j < r; ++j) p[j] = pair(mu, j);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) c[i] += cartan_t_inv_[i][j] * p[j];
    if (from_coroot_coords(c) != mu) return std::nullopt;
    return c;
  }
  std::optional<std::vector<Rational>> coroot_coordinates(const Coweight& mu) const {
    return coroot_coordinates(to_rational(mu));
  }

  bool is_dominant(const RatCoweight& mu) const {
    for (int i = 0; i < rank(); ++i)
      if (pair(mu, i) < 0) return false;
    return true;
  }
  bool is_dominant(const Coweight& mu) const { return is_dominant(to_rational(mu)); }

  // mu <= mu2: mu2 - mu is a nonnegative rational combination of simple coroots
  bool leq_coroot_cone(const RatCoweight& mu, const RatCoweight& mu2) const {
    auto c = coroot_coordinates(mu2 - mu);
    if (!c) return false;
    for (const auto& x : *c)
      if (x < 0) return false;
    return true;
  }
  bool leq_coroot_cone(const Coweight& mu, const Coweight& mu2) const {
    return leq_coroot_cone(to_rational(mu), to_rational(mu2));
  }

  // (nu, v) with nu = v^{-1} mu dominant and v of minimal length.
  template <class V>
  std::pair<V, WeylElement> dominant_representative(const V& mu) const {
    const auto& w = weyl();
    V nu = mu;
    std::uint32_t v = 0;
    for (bool moved = true; moved;) {
      moved = false;
      for (int i = 0; i < rank(); ++i) {
        if (pair(nu, i) < 0) {
          nu = w.simple(i).act(nu);
          v = w.right_mul(v, i);
          moved = true;
          break;
        }
      }
    }
    return {nu, w.element(v)};
  }

  // ---- Frobenius ----
  int sigma_order() const { return sigma_order_; }
  const IntMatrix& sigma_matrix() const { return sigma_; }
  int sigma_simple(int i) const { return perm_[i]; }
  int sigma_root(int root) const { return sigma_root_[root]; }
  bool sigma_trivial() const { return sigma_order_ == 1; }
  template <class S>
  CoordVector<S> sigma(const CoordVector<S>& mu) const { return gnp::apply(sigma_, mu); }
  template <class S>
  CoordVector<S> sigma_inverse(const CoordVector<S>& mu) const { return gnp::apply(sigma_inv_, mu); }

  SimpleRootSet sigma(SimpleRootSet j) const {
    SimpleRootSet out;
    for (int i : j.members()) out.insert(perm_[i]);
    return out;
  }
  bool is_sigma_stable(SimpleRootSet j) const { return sigma(j) == j; }
  SimpleRootSet sigma_closure(SimpleRootSet j) const {
    SimpleRootSet out = j;
    for (int k = 0; k < sigma_order_; ++k) out = out | sigma(out);
    return out;
  }
  // sigma-orbits on the simple roots
  std::vector<SimpleRootSet> sigma_orbits() const {
    std::vector<SimpleRootSet> out;
    SimpleRootSet seen;
    for (int i = 0; i < rank(); ++i) {
      if (seen.contains(i)) continue;
      SimpleRootSet o;
      o.insert(i);
      o = sigma_closure(o);
      seen = seen | o;
      out.push_back(o);
    }
    return out;
  }
  int count_sigma_orbits(SimpleRootSet j) const {
    int n = 0;
    for (auto o : sigma_orbits())
      if (o.subset_of(j) && !o.empty()) ++n;
    return n;
  }

  // ^sigma w = sigma w sigma^{-1}
  WeylElement twist(WeylElement w) const {
    auto wd = w.word();
    for (auto& i : wd) i = perm_[i];
    return weyl().from_word(wd);
  }
  WeylElement untwist(WeylElement w) const {
    auto wd = w.word();
    for (auto& i : wd) i = perm_inv_[i];
    return weyl().from_word(wd);
  }
  SimpleRootSet supp_sigma(WeylElement w) const { return sigma_closure(weyl().support(w)); }

  // ---- averages ----
  RatCoweight avg_sigma(const RatCoweight& mu) const {
    RatCoweight acc(n_), cur = mu;
    for (int k = 0; k < sigma_order_; ++k) {
      acc += cur;
      cur = sigma(cur);
    }
    acc /= Rational(sigma_order_);
    return acc;
  }
  RatCoweight avg_sigma(const Coweight& mu) const { return avg_sigma(to_rational(mu)); }

  // Average over W_J: the unique W_J-fixed vector in mu + Q(J^vee).
  RatCoweight avg_J(const RatCoweight& mu, SimpleRootSet j) const {
    auto mem = j.members();
    const std::size_t m = mem.size();
    if (m == 0) return mu;
    RatMatrix a(m, std::vector<Rational>(m));
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) a[x][y] = rs_.cartan(mem[y], mem[x]);
    auto ainv = inverse(a);
    std::vector<Rational> p(m);
    for (std::size_t x = 0; x < m; ++x) p[x] = pair(mu, mem[x]);
    RatCoweight out = mu;
    for (std::size_t y = 0; y < m; ++y) {
      Rational c = 0;
      for (std::size_t x = 0; x < m; ++x) c += ainv[y][x] * p[x];
      if (c != 0) out -= c * to_rational(simple_coroot_[mem[y]]);
    }
    return out;
  }

  RatCoweight pi_J(const RatCoweight& mu, SimpleRootSet j) const {
    if (!is_sigma_stable(j)) throw std::invalid_argument("pi_J: J is not sigma-stable");
    return avg_J(avg_sigma(mu), j);
  }

  // Greedy maximally mu-improving set; the final set also contains every
  // simple root orthogonal to the result.
  SimpleRootSet mu_improving_max(const RatCoweight& mu, SimpleRootSet allowed) const {
    SimpleRootSet j;
    RatCoweight cur = mu;
    for (bool grew = true; grew;) {
      grew = false;
      for (int i = 0; i < rank(); ++i) {
        if (j.contains(i) || !allowed.contains(i)) continue;
        if (pair(cur, i) < 0) {
          j.insert(i);
          cur = avg_J(mu, j);
          grew = true;
          break;
        }
      }
    }
    for (int i = 0; i < rank(); ++i)
      if (allowed.contains(i) && !j.contains(i) && pair(cur, i) == 0) j.insert(i);
    return j;
  }
  SimpleRootSet mu_improving_max(const RatCoweight& mu) const {
    return mu_improving_max(mu, SimpleRootSet::all(rank()));
  }

  RatCoweight conv_prime(const RatCoweight& mu) const { return avg_J(mu, mu_improving_max(mu)); }
  RatCoweight conv(const RatCoweight& mu) const { return conv_prime(avg_sigma(mu)); }
  RatCoweight conv(const Coweight& mu) const { return conv(to_rational(mu)); }
  RatCoweight conv(const GammaClass& l) const { return conv_prime(l.average); }

  // ---- quotient classes ----
  const LatticeQuotient& pi1_quotient() const { return pi1_; }
  const LatticeQuotient& pi1_gamma_quotient() const { return pi1_gamma_; }
  const LatticeQuotient& gamma_quotient() const { return gamma_; }

  Pi1Class pi1_class(const Coweight& mu) const { return {pi1_gamma_.canonical(mu)}; }
  // untwisted: identifies the Omega-coset of an affine element
  std::vector<Int> omega_class(const Coweight& mu) const { return pi1_.canonical(mu); }
  GammaClass gamma_class(const Coweight& mu) const { return {mu, gamma_.canonical(mu), avg_sigma(mu)}; }
  Pi1Class pi1_class(const GammaClass& l) const { return pi1_class(l.representative); }

  bool leq_gamma(const GammaClass& a, const GammaClass& b) const { return leq_coroot_cone(a.average, b.average); }

  std::string pi1_to_string(const Pi1Class& k) const {
    std::string s;
    auto tors = pi1_gamma_.torsion();
    for (std::size_t i = 0; i < k.canonical.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(k.canonical[i]);
      if (i < tors.size()) s += " mod " + std::to_string(tors[i]);
    }
    return s.empty() ? "0" : s;
  }

  // ---- Omega twist ----
  bool is_quasi_split() const { return !spec_.twist.has_value(); }
  WeylElement sigma1() const {
    return spec_.twist ? weyl().from_word(spec_.twist->sigma1_word) : weyl().identity();
  }
  Coweight mu_sigma() const { return spec_.twist ? spec_.twist->mu_sigma : Coweight(n_); }
  std::shared_ptr<const RootDatum> quasi_split_twin() const {
    DatumSpec s = spec_;
    s.twist.reset();
    return create(std::move(s));
  }

  std::string name() const {
    std::string s = rs_.name() + " " + spec_.lattice;
    if (!sigma_trivial()) s += " sigma";
    if (spec_.twist) s += " twisted";
    return s;
  }

 private:
  void build_lattice() {
    const int r = rs_.rank();
    const std::string& lat = spec_.lattice;
    auto cartan_row = [&](int i) {
      Coweight c(r);
      for (int j = 0; j < r; ++j) c[j] = rs_.cartan(i, j);
      return c;
    };
    if (lat == "sc") {
      n_ = r;
      for (int j = 0; j < r; ++j) {
        Coweight f(r), c(r);
        for (int i = 0; i < r; ++i) f[i] = rs_.cartan(i, j);
        c[j] = 1;
        simple_fun_.push_back(f.coords());
        simple_coroot_.push_back(c);
      }
    } else if (lat == "adjoint") {
      n_ = r;
      for (int j = 0; j < r; ++j) {
        std::vector<Int> f(r, 0);
        f[j] = 1;
        simple_fun_.push_back(f);
        simple_coroot_.push_back(cartan_row(j));
      }
    } else if (lat == "gl") {
      if (rs_.components().size() != 1 || rs_.components()[0].type != CartanType::A)
        throw DatumError("lattice: 'gl' requires a single component of type A");
      n_ = r + 1;
      for (int j = 0; j < r; ++j) {
        Coweight c(n_);
        c[j] = 1;
        c[j + 1] = -1;
        simple_fun_.push_back(c.coords());
        simple_coroot_.push_back(c);
      }
    } else if (lat == "custom") {
      const auto& l = spec_.lattice_basis;
      if (static_cast<int>(l.size()) != r)
        throw DatumError("lattice_basis: expected " + std::to_string(r) + " rows");
      for (const auto& row : l)
        if (static_cast<int>(row.size()) != r)
          throw DatumError("lattice_basis: each row needs " + std::to_string(r) + " entries");
      auto linv = inverse(to_rational(l));
      if (linv.empty()) throw DatumError("lattice_basis: matrix is singular");
      n_ = r;
      // mu = c L in fundamental coweight coordinates; <mu, alpha_j> = (c L)_j
      for (int j = 0; j < r; ++j) {
        std::vector<Int> f(r);
        for (int k = 0; k < r; ++k) f[k] = l[k][j];
        simple_fun_.push_back(f);
      }
      for (int i = 0; i < r; ++i) {
        Coweight c(r);
        for (int k = 0; k < r; ++k) {
          Rational acc = 0;
          for (int m = 0; m < r; ++m) acc += Rational(rs_.cartan(i, m)) * linv[m][k];
          if (acc.denominator() != 1)
            throw DatumError("lattice_basis: lattice does not contain the coroot lattice");
          c[k] = acc.numerator();
        }
        simple_coroot_.push_back(c);
      }
      custom_linv_ = linv;
    } else {
      throw DatumError("lattice: unknown preset '" + lat + "' (expected sc, adjoint, gl or custom)");
    }
  }

  void build_frobenius() {
    const int r = rs_.rank();
    perm_ = spec_.frobenius_perm;
    if (perm_.empty()) {
      perm_.resize(r);
      std::iota(perm_.begin(), perm_.end(), 0);
    }
    if (static_cast<int>(perm_.size()) != r) throw DatumError("frobenius.perm: expected " + std::to_string(r) + " entries");
    std::vector<int> seen(r, 0);
    for (int p : perm_) {
      if (p < 0 || p >= r || seen[p]++) throw DatumError("frobenius.perm: not a permutation of the simple roots");
    }
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (rs_.cartan(perm_[i], perm_[j]) != rs_.cartan(i, j))
          throw DatumError("frobenius.perm: does not preserve the Cartan matrix");
    perm_inv_.assign(r, 0);
    for (int i = 0; i < r; ++i) perm_inv_[perm_[i]] = i;
    bool trivial = true;
    for (int i = 0; i < r; ++i) trivial = trivial && perm_[i] == i;

    sigma_ = IntMatrix(n_, std::vector<Int>(n_, 0));
    const std::string& lat = spec_.lattice;
    if (lat == "sc" || lat == "adjoint") {
      for (int i = 0; i < r; ++i) sigma_[perm_[i]][i] = 1;
    } else if (lat == "gl") {
      if (trivial) {
        sigma_ = identity_matrix(n_);
      } else {
        for (std::size_t i = 0; i < n_; ++i) sigma_[n_ - 1 - i][i] = -1;
      }
    } else {
      // permutation of fundamental coweights, conjugated into the custom basis
      const auto& l = spec_.lattice_basis;
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
          // sigma(e_b) = (e_b L) P L^{-1}, as column b
          Rational acc = 0;
          for (int k = 0; k < r; ++k) acc += Rational(l[b][k]) * custom_linv_[perm_[k]][a];
          if (acc.denominator() != 1) throw DatumError("frobenius.perm: lattice_basis is not sigma-stable");
          sigma_[a][b] = acc.numerator();
        }
    }
    for (int i = 0; i < r; ++i) {
      if (gnp::apply(sigma_, simple_coroot_[i]) != simple_coroot_[perm_[i]])
        throw DatumError("frobenius: lattice action does not permute the simple coroots");
      for (std::size_t k = 0; k < n_; ++k) {
        Coweight e(n_);
        e[k] = 1;
        if (pair(gnp::apply(sigma_, e), perm_[i]) != pair(e, i))
          throw DatumError("frobenius: lattice action does not preserve the pairing");
      }
    }
    IntMatrix p = sigma_;
    sigma_order_ = 1;
    while (p != identity_matrix(n_)) {
      p = multiply(p, sigma_);
      if (++sigma_order_ > 1000) throw DatumError("frobenius: infinite order on the lattice");
    }
    sigma_inv_ = identity_matrix(n_);
    for (int k = 1; k < sigma_order_; ++k) sigma_inv_ = multiply(sigma_inv_, sigma_);
    sigma_root_.assign(rs_.num_roots(), 0);
    for (int b = 0; b < rs_.num_roots(); ++b) {
      std::vector<int> img(r);
      for (int j = 0; j < r; ++j) img[perm_[j]] = rs_.root(b)[j];
      sigma_root_[b] = rs_.index_of(img);
    }
  }

  void validate_twist() const {
    const auto& t = *spec_.twist;
    if (t.mu_sigma.size() != n_)
      throw DatumError("frobenius.twist.mu_sigma: expected " + std::to_string(n_) + " entries");
    for (int i : t.sigma1_word)
      if (i < 0 || i >= rank()) throw DatumError("frobenius.twist.sigma1_word: index out of range");
    // gamma = eps^{mu_sigma} sigma_1 = sigma_1 eps^{sigma_1^{-1} mu_sigma}: length zero
    auto s1 = sigma1();
    auto mu = s1.inverse().act(t.mu_sigma);
    for (int b = 0; b < rs_.num_positive(); ++b) {
      Int v = pair(mu, b) + rs_.pos(b) - rs_.pos(s1.act(b));
      if (v != 0) throw DatumError("frobenius.twist: gamma does not have length zero");
    }
  }

  DatumSpec spec_;
  RootSystem rs_;
  std::size_t n_ = 0;
  std::vector<std::vector<Int>> simple_fun_;  // simple roots as functionals on X
  std::vector<Coweight> simple_coroot_;       // simple coroots in X
  std::vector<std::vector<Int>> root_fun_;
  std::vector<Coweight> coroot_x_;
  std::vector<Int> two_rho_;
  RatMatrix cartan_t_inv_;
  RatMatrix custom_linv_;
  std::vector<int> perm_, perm_inv_;
  IntMatrix sigma_, sigma_inv_;
  int sigma_order_ = 1;
  std::vector<int> sigma_root_;
  LatticeQuotient pi1_, gamma_, pi1_gamma_;
  mutable std::once_flag weyl_once_;
  mutable std::unique_ptr<WeylGroup> weyl_;
};

using DatumPtr = std::shared_ptr<const RootDatum>;

}  // namespace gnp
