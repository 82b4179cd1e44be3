#pragma once

#include "gnp/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gnp {

enum class CartanType { A, B, C, D, E, F, G };

inline CartanType parse_cartan_type(const std::string& s) {
  if (s.size() == 1) {
    switch (s[0]) {
      case 'A': return CartanType::A;
      case 'B': return CartanType::B;
      case 'C': return CartanType::C;
      case 'D': return CartanType::D;
      case 'E': return CartanType::E;
      case 'F': return CartanType::F;
      case 'G': return CartanType::G;
      default: break;
    }
  }
  throw std::invalid_argument("unknown Cartan type '" + s + "'");
}

inline char type_letter(CartanType t) { return "ABCDEFG"[static_cast<int>(t)]; }

struct CartanComponent {
  CartanType type;
  int rank;
  std::string name() const { return std::string(1, type_letter(type)) + std::to_string(rank); }
};

// A[i][j] = <alpha_i^vee, alpha_j>, Bourbaki numbering.
inline std::vector<std::vector<int>> cartan_matrix(const CartanComponent& c) {
  const int n = c.rank;
  auto bad = [&] { throw std::invalid_argument("invalid Cartan type " + c.name()); };
  switch (c.type) {
    case CartanType::A: if (n < 1) bad(); break;
    case CartanType::B:
    case CartanType::C: if (n < 2) bad(); break;
    case CartanType::D: if (n < 4) bad(); break;
    case CartanType::E: if (n < 6 || n > 8) bad(); break;
    case CartanType::F: if (n != 4) bad(); break;
    case CartanType::G: if (n != 2) bad(); break;
  }
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j, int aij = -1, int aji = -1) {
    a[i][j] = aij;
    a[j][i] = aji;
  };
  switch (c.type) {
    case CartanType::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case CartanType::B:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -1, -2);
      break;
    case CartanType::C:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -2, -1);
      break;
    case CartanType::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case CartanType::E:
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case CartanType::F:
      link(0, 1);
      link(1, 2, -1, -2);
      link(2, 3);
      break;
    case CartanType::G:
      link(0, 1, -3, -1);
      break;
  }
  return a;
}

// Subset of the simple roots, as a bitmask.
class SimpleRootSet {
 public:
  constexpr SimpleRootSet() = default;
  constexpr explicit SimpleRootSet(std::uint32_t bits) : bits_(bits) {}
  static SimpleRootSet all(int r) { return SimpleRootSet(r >= 32 ? ~0u : ((1u << r) - 1)); }

  bool contains(int i) const { return (bits_ >> i) & 1u; }
  void insert(int i) { bits_ |= (1u << i); }
  void erase(int i) { bits_ &= ~(1u << i); }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint32_t bits() const { return bits_; }
  bool subset_of(SimpleRootSet o) const { return (bits_ & ~o.bits_) == 0; }
  SimpleRootSet operator|(SimpleRootSet o) const { return SimpleRootSet(bits_ | o.bits_); }
  SimpleRootSet operator&(SimpleRootSet o) const { return SimpleRootSet(bits_ & o.bits_); }
  friend bool operator==(SimpleRootSet, SimpleRootSet) = default;

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  // 1-based, "{1,3}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : members()) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint32_t bits_ = 0;
};

// The abstract (possibly reducible) root system: roots in simple-root
// coordinates, coroots in simple-coroot coordinates. Positive roots come first,
// ordered by height; the negative of root i is root i + |Phi^+|.
class RootSystem {
 public:
  explicit RootSystem(std::vector<CartanComponent> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw std::invalid_argument("root system needs at least one component");
    for (std::size_t c = 0; c < comps_.size(); ++c) {
      auto a = cartan_matrix(comps_[c]);
      int off = rank_;
      rank_ += comps_[c].rank;
      cartan_.resize(rank_);
      for (auto& row : cartan_) row.resize(rank_, 0);
      for (int i = 0; i < comps_[c].rank; ++i) {
        component_of_.push_back(static_cast<int>(c));
        for (int j = 0; j < comps_[c].rank; ++j) cartan_[off + i][off + j] = a[i][j];
      }
      offsets_.push_back(off);
    }
    if (rank_ > 31) throw std::invalid_argument("semisimple rank too large");
    build_roots();
  }

  const std::vector<CartanComponent>& components() const { return comps_; }
  int rank() const { return rank_; }
  int cartan(int i, int j) const { return cartan_[i][j]; }
  int component_of(int simple) const { return component_of_[simple]; }
  int component_offset(int c) const { return offsets_[c]; }

  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_pos_; }
  bool is_positive(int r) const { return r < num_pos_; }
  int negate(int r) const { return r < num_pos_ ? r + num_pos_ : r - num_pos_; }
  // Phi^+(alpha) indicator
  int pos(int r) const { return is_positive(r) ? 1 : 0; }

  const std::vector<int>& root(int r) const { return roots_[r]; }
  const std::vector<int>& coroot(int r) const { return coroots_[r]; }

  int index_of(const std::vector<int>& coords) const {
    auto it = index_.find(coords);
    return it == index_.end() ? -1 : it->second;
  }

  int height(int r) const {
    int h = 0;
    for (int x : roots_[r]) h += x;
    return h;
  }

  // <beta^vee, gamma>
  int pairing(int coroot_idx, int root_idx) const {
    const auto& c = coroots_[coroot_idx];
    const auto& g = roots_[root_idx];
    int s = 0;
    for (int i = 0; i < rank_; ++i)
      if (c[i] != 0)
        for (int j = 0; j < rank_; ++j) s += c[i] * cartan_[i][j] * g[j];
    return s;
  }

  // s_i(root)
  int reflect_simple(int i, int r) const { return simple_reflect_[r][i]; }

  // index of alpha+beta or -1
  int sum(int a, int b) const { return sum_[a * num_roots() + b]; }

  SimpleRootSet support(int r) const {
    SimpleRootSet s;
    for (int i = 0; i < rank_; ++i)
      if (roots_[r][i] != 0) s.insert(i);
    return s;
  }

  // positive roots whose support lies in J
  bool in_subsystem(int r, SimpleRootSet j) const { return support(r).subset_of(j); }

  int highest_root(int comp) const {
    int best = -1, h = -1;
    for (int r = 0; r < num_pos_; ++r) {
      if (component_of_[support(r).members().front()] != comp) continue;
      if (height(r) > h) {
        h = height(r);
        best = r;
      }
    }
    return best;
  }

  bool simply_laced() const {
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        if (i != j && cartan_[i][j] < -1) return false;
    return true;
  }

  std::string name() const {
    std::string s;
    for (std::size_t c = 0; c < comps_.size(); ++c) {
      if (c) s += "x";
      s += comps_[c].name();
    }
    return s;
  }

 private:
  void build_roots() {
    std::map<std::vector<int>, std::vector<int>> found;  // root -> coroot
    std::vector<std::vector<int>> queue;
    for (int i = 0; i < rank_; ++i) {
      std::vector<int> e(rank_, 0);
      e[i] = 1;
      found[e] = e;
      queue.push_back(e);
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto beta = queue[q];
      auto betav = found[beta];
      for (int i = 0; i < rank_; ++i) {
        int c = 0;  // <alpha_i^vee, beta>
        for (int j = 0; j < rank_; ++j) c += cartan_[i][j] * beta[j];
        int d = 0;  // <beta^vee, alpha_i>
        for (int k = 0; k < rank_; ++k) d += betav[k] * cartan_[k][i];
        auto nb = beta;
        nb[i] -= c;
        auto nbv = betav;
        nbv[i] -= d;
        if (!found.count(nb)) {
          found[nb] = nbv;
          queue.push_back(nb);
        }
      }
    }
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pos;
    for (auto& [r, cv] : found) {
      bool positive = std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
      if (positive) pos.emplace_back(r, cv);
    }
    auto height_of = [](const std::vector<int>& v) {
      int h = 0;
      for (int x : v) h += x;
      return h;
    };
    std::stable_sort(pos.begin(), pos.end(), [&](const auto& a, const auto& b) {
      int ha = height_of(a.first), hb = height_of(b.first);
      if (ha != hb) return ha < hb;
      return a.first > b.first;  // simple roots in index order
    });
    num_pos_ = static_cast<int>(pos.size());
    for (auto& [r, cv] : pos) {
      roots_.push_back(r);
      coroots_.push_back(cv);
    }
    for (auto& [r, cv] : pos) {
      auto nr = r, ncv = cv;
      for (auto& x : nr) x = -x;
      for (auto& x : ncv) x = -x;
      roots_.push_back(nr);
      coroots_.push_back(ncv);
    }
    for (int k = 0; k < num_roots(); ++k) index_[roots_[k]] = k;
    simple_reflect_.assign(num_roots(), std::vector<int>(rank_));
    for (int k = 0; k < num_roots(); ++k)
      for (int i = 0; i < rank_; ++i) {
        int c = 0;
        for (int j = 0; j < rank_; ++j) c += cartan_[i][j] * roots_[k][j];
        auto nb = roots_[k];
        nb[i] -= c;
        simple_reflect_[k][i] = index_.at(nb);
      }
    sum_.assign(num_roots() * num_roots(), -1);
    for (int a = 0; a < num_roots(); ++a)
      for (int b = 0; b < num_roots(); ++b) {
        std::vector<int> s(rank_);
        for (int i = 0; i < rank_; ++i) s[i] = roots_[a][i] + roots_[b][i];
        sum_[a * num_roots() + b] = index_of(s);
      }
  }

  std::vector<CartanComponent> comps_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> component_of_;
  std::vector<int> offsets_;
  int num_pos_ = 0;
  std::vector<std::vector<int>> roots_, coroots_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<int>> simple_reflect_;
  std::vector<int> sum_;
};

}  // namespace gnp
