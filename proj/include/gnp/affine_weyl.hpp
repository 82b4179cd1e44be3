#pragma once

#include "gnp/root_datum.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace gnp {

// (alpha, k) in Phi x Z
struct AffineRoot {
  int root;
  Int k;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

// x = w eps^mu
struct AffineElement {
  WeylElement w;
  Coweight mu;
  friend bool operator==(const AffineElement& a, const AffineElement& b) { return a.w == b.w && a.mu == b.mu; }
};

struct AffineElementHash {
  std::size_t operator()(const AffineElement& x) const {
    return hash_combine(std::hash<std::uint32_t>{}(x.w.index()), CoweightHash{}(x.mu));
  }
};

using AffineSet = std::unordered_set<AffineElement, AffineElementHash>;

// sign of l(x, alpha) for each positive root alpha
using SignType = std::vector<int>;

// Operations on the extended affine Weyl group of a root datum.
class AffineWeyl {
 public:
  explicit AffineWeyl(const RootDatum& d) : d_(&d), w_(&d.weyl()) {
    const auto& rs = d.roots();
    for (int i = 0; i < rs.rank(); ++i) simple_.push_back({i, 0});
    for (std::size_t c = 0; c < rs.components().size(); ++c)
      simple_.push_back({rs.negate(rs.highest_root(static_cast<int>(c))), 1});
    for (const auto& a : simple_) simple_refl_.push_back(reflection(a));
  }

  const RootDatum& datum() const { return *d_; }
  const WeylGroup& weyl() const { return *w_; }

  AffineElement identity() const { return {w_->identity(), Coweight(d_->lattice_rank())}; }
  AffineElement translation(const Coweight& mu) const { return {w_->identity(), mu}; }
  AffineElement make(WeylElement w, Coweight mu) const {
    if (mu.size() != d_->lattice_rank()) throw std::invalid_argument("coweight has wrong rank");
    return {w, std::move(mu)};
  }

  // (w eps^mu)(w' eps^mu') = w w' eps^{w'^{-1} mu + mu'}
  AffineElement multiply(const AffineElement& x, const AffineElement& y) const {
    return {x.w * y.w, y.w.inverse().act(x.mu) + y.mu};
  }
  AffineElement inverse(const AffineElement& x) const { return {x.w.inverse(), -x.w.act(x.mu)}; }
  // ^sigma x
  AffineElement twist(const AffineElement& x) const { return {d_->twist(x.w), d_->sigma(x.mu)}; }

  // ---- affine roots ----
  bool is_positive(const AffineRoot& a) const {
    return a.k >= (d_->roots().is_positive(a.root) ? 0 : 1);
  }
  AffineRoot act(const AffineElement& x, const AffineRoot& a) const {
    return {x.w.act(a.root), a.k - d_->pair(x.mu, a.root)};
  }
  // r_(alpha,k) = s_alpha eps^{k alpha^vee}
  AffineElement reflection(const AffineRoot& a) const {
    return {w_->reflection(a.root), a.k * d_->coroot(a.root)};
  }
  const std::vector<AffineRoot>& simple_affine_roots() const { return simple_; }
  int num_simple_affine() const { return static_cast<int>(simple_.size()); }
  const AffineElement& simple_reflection(int k) const { return simple_refl_.at(k); }
  std::string simple_name(int k) const {
    int r = d_->rank();
    if (k < r) return "s" + std::to_string(k + 1);
    if (simple_.size() == static_cast<std::size_t>(r) + 1) return "s0";
    return "s0_" + std::to_string(k - r + 1);
  }

  // ---- length ----
  // l(x, alpha) = <mu, alpha> + Phi^+(alpha) - Phi^+(w alpha)
  Int length_functional(const AffineElement& x, int root) const {
    const auto& rs = d_->roots();
    return d_->pair(x.mu, root) + rs.pos(root) - rs.pos(x.w.act(root));
  }
  std::vector<Int> length_functional_values(const AffineElement& x) const {
    std::vector<Int> out(d_->roots().num_roots());
    for (int b = 0; b < d_->roots().num_roots(); ++b) out[b] = length_functional(x, b);
    return out;
  }
  Int length(const AffineElement& x) const {
    Int s = 0;
    for (int b = 0; b < d_->roots().num_positive(); ++b) {
      Int v = length_functional(x, b);
      s += v < 0 ? -v : v;
    }
    return s;
  }

  bool is_length_positive(const AffineElement& x, WeylElement v) const {
    for (int b = 0; b < d_->roots().num_positive(); ++b)
      if (length_functional(x, v.act(b)) < 0) return false;
    return true;
  }

  WeylElement canonical_lp(const AffineElement& x) const { return d_->dominant_representative(x.mu).second; }

  // BFS from the canonical element along moves v -> v s_i with l(x, v alpha_i) = 0
  std::vector<WeylElement> lp_set(const AffineElement& x) const {
    std::vector<WeylElement> out{canonical_lp(x)};
    std::unordered_set<std::uint32_t> seen{out[0].index()};
    for (std::size_t q = 0; q < out.size(); ++q) {
      auto v = out[q];
      for (int i = 0; i < d_->rank(); ++i) {
        if (length_functional(x, v.act(i)) != 0) continue;
        auto n = w_->element(w_->right_mul(v.index(), i));
        if (seen.insert(n.index()).second) out.push_back(n);
      }
    }
    return out;
  }

  SignType sign_type(const AffineElement& x) const {
    SignType s(d_->roots().num_positive());
    for (int b = 0; b < d_->roots().num_positive(); ++b) {
      Int v = length_functional(x, b);
      s[b] = (v > 0) - (v < 0);
    }
    return s;
  }

  bool is_shrunken(const AffineElement& x) const {
    for (int b = 0; b < d_->roots().num_positive(); ++b)
      if (length_functional(x, b) == 0) return false;
    return true;
  }

  bool length_additive(const AffineElement& x, const AffineElement& y) const {
    return length(multiply(x, y)) == length(x) + length(y);
  }

  // ---- root functionals ----
  using RootFunctional = std::function<Int(int)>;

  // throws if phi violates the root-functional axioms
  void check_root_functional(const RootFunctional& phi) const {
    const auto& rs = d_->roots();
    for (int a = 0; a < rs.num_roots(); ++a) {
      Int s = phi(a) + phi(rs.negate(a));
      if (s < -1 || s > 1) throw std::invalid_argument("root functional axiom (1) violated");
      for (int b = 0; b < rs.num_roots(); ++b) {
        int c = rs.sum(a, b);
        if (c < 0) continue;
        Int t = phi(c) - phi(a) - phi(b);
        if (t < -1 || t > 1) throw std::invalid_argument("root functional axiom (2) violated");
      }
    }
  }

  std::vector<int> inversions(const RootFunctional& phi, WeylElement v) const {
    const auto& rs = d_->roots();
    std::vector<int> out;
    for (int a = 0; a < rs.num_roots(); ++a) {
      Int val = phi(v.act(a));
      if ((rs.is_positive(a) && val < 0) || (!rs.is_positive(a) && val > 0)) out.push_back(a);
    }
    return out;
  }

  // repeated adjustments v -> v s_alpha until v is positive for phi
  WeylElement adjustment_descent(const RootFunctional& phi, WeylElement v) const {
    check_root_functional(phi);
    auto inv = inversions(phi, v);
    while (!inv.empty()) {
      auto next = v * w_->reflection(inv.front());
      auto ninv = inversions(phi, next);
      if (ninv.size() >= inv.size()) throw std::logic_error("adjustment did not reduce the inversion count");
      v = next;
      inv = std::move(ninv);
    }
    return v;
  }

  // ---- Omega and reduced words ----
  bool is_right_descent(const AffineElement& x, int k) const { return !is_positive(act(x, simple_[k])); }

  // x = omega * r_{a_1} ... r_{a_m} with m = l(x)
  std::pair<AffineElement, std::vector<int>> reduced_decomposition(AffineElement x) const {
    std::vector<int> word;
    for (;;) {
      int k = 0;
      while (k < num_simple_affine() && !is_right_descent(x, k)) ++k;
      if (k == num_simple_affine()) break;
      x = multiply(x, simple_refl_[k]);
      word.push_back(k);
    }
    std::reverse(word.begin(), word.end());
    return {x, word};
  }

  std::vector<Int> omega_class(const AffineElement& x) const { return d_->omega_class(x.mu); }

  bool bruhat_leq(AffineElement y, AffineElement x) const {
    if (omega_class(y) != omega_class(x)) return false;
    for (;;) {
      Int lx = length(x), ly = length(y);
      if (ly > lx) return false;
      if (lx == 0) return y == x;
      int k = 0;
      while (!is_right_descent(x, k)) ++k;
      if (is_right_descent(y, k)) y = multiply(y, simple_refl_[k]);
      x = multiply(x, simple_refl_[k]);
    }
  }

  // every y <= x, each once
  std::vector<AffineElement> lower_interval(const AffineElement& x, std::size_t max_size = 1u << 20) const {
    auto [omega, word] = reduced_decomposition(x);
    std::vector<AffineElement> out{omega};
    AffineSet seen{omega};
    for (int k : word) {
      std::size_t n = out.size();
      for (std::size_t i = 0; i < n; ++i) {
        auto y = multiply(out[i], simple_refl_[k]);
        if (seen.insert(y).second) {
          out.push_back(std::move(y));
          if (out.size() > max_size)
            throw BudgetExceeded("lower interval exceeds max_interval_size=" + std::to_string(max_size));
        }
      }
    }
    return out;
  }

  // Omega elements, one per class of X / Z Phi^vee; free coordinates range over [0, free_range).
  std::vector<AffineElement> omega_elements(Int free_range) const {
    if (free_range < 1) throw std::invalid_argument("free_range must be positive");
    const auto& q = d_->pi1_quotient();
    auto tors = q.torsion();
    std::vector<Int> bound(tors.begin(), tors.end());
    for (std::size_t i = 0; i < q.free_rank(); ++i) bound.push_back(free_range);
    std::vector<AffineElement> out;
    std::vector<Int> c(bound.size(), 0);
    for (;;) {
      out.push_back(reduced_decomposition(translation(q.lift(c))).first);
      std::size_t i = 0;
      while (i < c.size() && ++c[i] == bound[i]) c[i++] = 0;
      if (i == c.size()) break;
    }
    return out;
  }

  // All omega * y with omega from omega_elements and y in W_af of length <= max_len.
  std::vector<AffineElement> enumerate(Int max_len, Int free_range) const {
    std::vector<AffineElement> waf{identity()};
    AffineSet seen{identity()};
    std::size_t level_start = 0;
    for (Int len = 0; len < max_len; ++len) {
      std::size_t level_end = waf.size();
      for (std::size_t i = level_start; i < level_end; ++i)
        for (int k = 0; k < num_simple_affine(); ++k) {
          if (is_right_descent(waf[i], k)) continue;
          auto y = multiply(waf[i], simple_refl_[k]);
          if (seen.insert(y).second) waf.push_back(std::move(y));
        }
      level_start = level_end;
    }
    std::vector<AffineElement> out;
    for (const auto& om : omega_elements(free_range))
      for (const auto& y : waf) out.push_back(multiply(om, y));
    return out;
  }

  // ---- fundamental elements, eta ----
  // orbits of sigma o w on Phi
  std::vector<std::vector<int>> sigma_w_orbits(const AffineElement& x) const {
    const int n = d_->roots().num_roots();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (int b = 0; b < n; ++b) {
      if (seen[b]) continue;
      std::vector<int> orbit;
      for (int c = b; !seen[c]; c = d_->sigma_root(x.w.act(c))) {
        seen[c] = 1;
        orbit.push_back(c);
      }
      out.push_back(std::move(orbit));
    }
    return out;
  }

  // every (sigma o w)-orbit has l(x, .) of constant sign (zero allowed)
  bool is_fundamental(const AffineElement& x) const {
    for (const auto& orbit : sigma_w_orbits(x)) {
      bool has_pos = false, has_neg = false;
      for (int b : orbit) {
        Int v = length_functional(x, b);
        has_pos = has_pos || v > 0;
        has_neg = has_neg || v < 0;
      }
      if (has_pos && has_neg) return false;
    }
    return true;
  }

  // order of sigma o w on the coweight lattice
  int sigma_w_order(const AffineElement& x) const {
    IntMatrix m = gnp::multiply(d_->sigma_matrix(), w_->matrix(x.w.index()));
    IntMatrix p = m;
    int n = 1;
    const auto id = identity_matrix(d_->lattice_rank());
    while (p != id) {
      p = gnp::multiply(p, m);
      ++n;
    }
    return n;
  }

  // eta_sigma(x) = (^{sigma^{-1}} v)^{-1} w v, v = canonical_lp(x)
  WeylElement eta_sigma(const AffineElement& x) const {
    auto v = canonical_lp(x);
    return d_->untwist(v).inverse() * x.w * v;
  }

  // ---- parsing / printing ----
  // "t[1,0,-1] s1 s2" denotes (s1 s2) eps^(1,0,-1)
  std::string to_string(const AffineElement& x) const {
    std::string s = "t[" + gnp::to_string(x.mu) + "]";
    if (!x.w.is_identity()) s += " " + x.w.to_string();
    return s;
  }

 private:
  const RootDatum* d_;
  const WeylGroup* w_;
  std::vector<AffineRoot> simple_;
  std::vector<AffineElement> simple_refl_;
};

}  // namespace gnp
