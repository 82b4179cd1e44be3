#pragma once

#include "gnp/rational.hpp"
#include "gnp/root_system.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gnp {

class WeylGroup;

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Handle to an element of a materialized Weyl group.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(const WeylGroup* g, std::uint32_t idx) : g_(g), idx_(idx) {}

  std::uint32_t index() const { return idx_; }
  const WeylGroup& group() const { return *g_; }
  bool valid() const { return g_ != nullptr; }

  inline int length() const;
  inline WeylElement inverse() const;
  inline bool is_identity() const { return idx_ == 0; }
  inline int act(int root) const;  // w(root) as root index
  inline Coweight act(const Coweight& mu) const;
  inline RatCoweight act(const RatCoweight& mu) const;
  inline std::vector<int> word() const;  // lexicographically least reduced word, 0-based letters
  inline std::string to_string() const;  // "s1 s2 s1" or "e"

  friend inline WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.g_ == b.g_ && a.idx_ == b.idx_; }
  friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.idx_ < b.idx_; }

 private:
  const WeylGroup* g_ = nullptr;
  std::uint32_t idx_ = 0;
};

// All elements, generated breadth-first from the identity; element 0 is e and
// element indices are sorted by length. Each element stores its permutation of
// the roots and its matrix on the coweight lattice.
class WeylGroup {
 public:
  WeylGroup(const RootSystem& rs, std::vector<IntMatrix> simple_matrices, std::size_t cap)
      : rs_(&rs), r_(rs.rank()), n_(simple_matrices.empty() ? 0 : simple_matrices[0].size()) {
    const int nroots = rs.num_roots();
    std::vector<std::uint16_t> id(nroots);
    for (int k = 0; k < nroots; ++k) id[k] = static_cast<std::uint16_t>(k);
    add(id, identity_matrix(n_), 0);
    for (std::size_t q = 0; q < perm_.size(); ++q) {
      for (int i = 0; i < r_; ++i) {
        // perm(w s_i)[b] = perm(w)[s_i b]
        std::vector<std::uint16_t> p(nroots);
        for (int b = 0; b < nroots; ++b) p[b] = perm_[q][rs.reflect_simple(i, b)];
        auto it = lookup_.find(key(p));
        if (it != lookup_.end()) continue;
        if (perm_.size() >= cap)
          throw BudgetExceeded("Weyl group exceeds the configured cap of " + std::to_string(cap) + " elements");
        add(p, gnp::multiply(matrix(q), simple_matrices[i]), len_[q] + 1);
      }
    }
    const std::size_t n = perm_.size();
    rmul_.assign(n * r_, 0);
    inv_.assign(n, 0);
    for (std::size_t w = 0; w < n; ++w) {
      for (int i = 0; i < r_; ++i) {
        std::vector<std::uint16_t> simple_images(r_);
        for (int j = 0; j < r_; ++j) simple_images[j] = perm_[w][rs.reflect_simple(i, j)];
        rmul_[w * r_ + i] = lookup_.at(key_of_images(simple_images));
      }
      std::vector<std::uint16_t> inv(nroots);
      for (int b = 0; b < nroots; ++b) inv[perm_[w][b]] = static_cast<std::uint16_t>(b);
      inv_[w] = lookup_.at(key(inv));
    }
    refl_.assign(rs.num_roots(), 0);
    for (int b = 0; b < rs.num_roots(); ++b) {
      // s_beta(alpha_j) = alpha_j - <beta^vee, alpha_j> beta
      std::vector<std::uint16_t> imgs(r_);
      for (int j = 0; j < r_; ++j) {
        auto v = rs.root(j);
        int c = rs.pairing(b, j);
        for (int k = 0; k < r_; ++k) v[k] -= c * rs.root(b)[k];
        imgs[j] = static_cast<std::uint16_t>(rs.index_of(v));
      }
      refl_[b] = lookup_.at(key_of_images(imgs));
    }
  }

  WeylGroup(const WeylGroup&) = delete;
  WeylGroup& operator=(const WeylGroup&) = delete;

  const RootSystem& roots() const { return *rs_; }
  std::size_t size() const { return perm_.size(); }
  int rank() const { return r_; }
  WeylElement identity() const { return {this, 0}; }
  WeylElement element(std::uint32_t i) const { return {this, i}; }
  WeylElement simple(int i) const { return element(rmul_[i]); }
  WeylElement reflection(int root) const { return element(refl_[root]); }
  WeylElement longest() const {
    std::uint32_t best = 0;
    for (std::uint32_t w = 0; w < size(); ++w)
      if (len_[w] > len_[best]) best = w;
    return element(best);
  }

  WeylElement from_word(const std::vector<int>& word) const {
    std::uint32_t w = 0;
    for (int i : word) {
      if (i < 0 || i >= r_) throw std::invalid_argument("simple reflection index out of range");
      w = rmul_[w * r_ + i];
    }
    return element(w);
  }

  std::vector<WeylElement> elements() const {
    std::vector<WeylElement> out;
    out.reserve(size());
    for (std::uint32_t w = 0; w < size(); ++w) out.push_back(element(w));
    return out;
  }

  // elements of W_J
  std::vector<WeylElement> parabolic(SimpleRootSet j) const {
    std::vector<std::uint32_t> found{0};
    std::vector<char> seen(size(), 0);
    seen[0] = 1;
    for (std::size_t q = 0; q < found.size(); ++q)
      for (int i : j.members()) {
        auto nxt = rmul_[found[q] * r_ + i];
        if (!seen[nxt]) {
          seen[nxt] = 1;
          found.push_back(nxt);
        }
      }
    std::vector<WeylElement> out;
    for (auto w : found) out.push_back(element(w));
    return out;
  }

  int length(std::uint32_t w) const { return len_[w]; }
  std::uint32_t right_mul(std::uint32_t w, int i) const { return rmul_[w * r_ + i]; }
  std::uint32_t left_mul(int i, std::uint32_t w) const { return inv_[rmul_[inv_[w] * r_ + i]]; }
  std::uint32_t inverse(std::uint32_t w) const { return inv_[w]; }
  int act(std::uint32_t w, int root) const { return perm_[w][root]; }
  const IntMatrix& matrix(std::uint32_t w) const { return mats_[w]; }

  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const {
    std::vector<std::uint16_t> imgs(r_);
    for (int j = 0; j < r_; ++j) imgs[j] = perm_[a][perm_[b][j]];
    return lookup_.at(key_of_images(imgs));
  }

  bool is_right_descent(std::uint32_t w, int i) const { return !rs_->is_positive(perm_[w][i]); }
  bool is_left_descent(std::uint32_t w, int i) const { return !rs_->is_positive(perm_[inv_[w]][i]); }

  std::vector<int> word(std::uint32_t w) const {
    std::vector<int> out;
    while (w != 0) {
      int i = 0;
      while (!is_left_descent(w, i)) ++i;
      out.push_back(i);
      w = left_mul(i, w);
    }
    return out;
  }

  std::string to_string(std::uint32_t w) const {
    auto wd = word(w);
    if (wd.empty()) return "e";
    std::string s;
    for (std::size_t k = 0; k < wd.size(); ++k) {
      if (k) s += " ";
      s += "s" + std::to_string(wd[k] + 1);
    }
    return s;
  }

  // u <= v in Bruhat order
  bool bruhat_leq(WeylElement u, WeylElement v) const {
    std::uint32_t a = u.index(), b = v.index();
    while (true) {
      if (len_[a] > len_[b]) return false;
      if (b == 0) return a == 0;
      int i = 0;
      while (!is_right_descent(b, i)) ++i;
      if (is_right_descent(a, i)) a = rmul_[a * r_ + i];
      b = rmul_[b * r_ + i];
    }
  }

  SimpleRootSet support(WeylElement w) const {
    SimpleRootSet s;
    for (int i : word(w.index())) s.insert(i);
    return s;
  }

  bool in_parabolic(WeylElement w, SimpleRootSet j) const { return support(w).subset_of(j); }

 private:
  // an element is determined by the images of the simple roots
  static std::u16string key_of_images(const std::vector<std::uint16_t>& imgs) {
    return std::u16string(imgs.begin(), imgs.end());
  }
  std::u16string key(const std::vector<std::uint16_t>& p) const {
    return std::u16string(p.begin(), p.begin() + r_);
  }

  void add(const std::vector<std::uint16_t>& p, IntMatrix m, int len) {
    lookup_[key(p)] = static_cast<std::uint32_t>(perm_.size());
    perm_.push_back(p);
    mats_.push_back(std::move(m));
    len_.push_back(len);
  }

  const RootSystem* rs_;
  int r_;
  std::size_t n_;
  std::vector<std::vector<std::uint16_t>> perm_;
  std::vector<IntMatrix> mats_;
  std::vector<int> len_;
  std::unordered_map<std::u16string, std::uint32_t> lookup_;
  std::vector<std::uint32_t> rmul_, inv_, refl_;
};

inline int WeylElement::length() const { return g_->length(idx_); }
inline WeylElement WeylElement::inverse() const { return {g_, g_->inverse(idx_)}; }
inline int WeylElement::act(int root) const { return g_->act(idx_, root); }
inline Coweight WeylElement::act(const Coweight& mu) const { return gnp::apply(g_->matrix(idx_), mu); }
inline RatCoweight WeylElement::act(const RatCoweight& mu) const { return gnp::apply(g_->matrix(idx_), mu); }
inline std::vector<int> WeylElement::word() const { return g_->word(idx_); }
inline std::string WeylElement::to_string() const { return g_->to_string(idx_); }

inline WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.g_ != b.g_) throw std::invalid_argument("multiplying Weyl elements of different groups");
  return {a.g_, a.g_->multiply(a.idx_, b.idx_)};
}

}  // namespace gnp

template <>
struct std::hash<gnp::WeylElement> {
  std::size_t operator()(const gnp::WeylElement& w) const { return std::hash<std::uint32_t>{}(w.index()); }
};
