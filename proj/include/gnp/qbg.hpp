#pragma once

#include "gnp/root_datum.hpp"

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gnp {

struct QBGEdge {
  std::uint32_t target;
  int root;  // positive root alpha with target = source * s_alpha
  bool quantum;
};

// Quantum Bruhat graph with all-pairs distance and weight tables. Weights are
// kept in simple-coroot coordinates.
class QuantumBruhatGraph {
 public:
  explicit QuantumBruhatGraph(const RootDatum& d, std::size_t max_vertices = 5000) : d_(&d), w_(&d.weyl()) {
    const auto& rs = d.roots();
    n_ = w_->size();
    if (n_ > max_vertices)
      throw BudgetExceeded("quantum Bruhat graph on " + std::to_string(n_) + " vertices exceeds the cap of " +
                           std::to_string(max_vertices));
    r_ = rs.rank();
    refl_root_.assign(n_, -1);
    coroot_height2_.resize(rs.num_positive());
    for (int b = 0; b < rs.num_positive(); ++b) {
      refl_root_[w_->reflection(b).index()] = b;
      // <alpha^vee, 2rho>
      coroot_height2_[b] = d.pair_2rho(d.coroot(b));
    }
    adj_.resize(n_);
    for (std::uint32_t u = 0; u < n_; ++u) {
      int lu = w_->length(u);
      for (int b = 0; b < rs.num_positive(); ++b) {
        auto t = w_->multiply(u, w_->reflection(b).index());
        int lt = w_->length(t);
        if (lt == lu + 1)
          adj_[u].push_back({t, b, false});
        else if (lt == lu + 1 - coroot_height2_[b])
          adj_[u].push_back({t, b, true});
      }
    }
    dist_.assign(n_ * n_, -1);
    wt_.assign(n_ * n_ * r_, 0);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t s = 0; s < n_; ++s) {
      queue.clear();
      queue.push_back(s);
      dist_[idx(s, s)] = 0;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        auto p = queue[q];
        for (const auto& e : adj_[p]) {
          auto& dq = dist_[idx(s, e.target)];
          int* wp = &wt_[idx(s, p) * r_];
          int* wq = &wt_[idx(s, e.target) * r_];
          if (dq < 0) {
            dq = dist_[idx(s, p)] + 1;
            for (int i = 0; i < r_; ++i) wq[i] = wp[i] + (e.quantum ? rs.coroot(e.root)[i] : 0);
            queue.push_back(e.target);
          } else if (dq == dist_[idx(s, p)] + 1) {
            for (int i = 0; i < r_; ++i)
              if (wq[i] != wp[i] + (e.quantum ? rs.coroot(e.root)[i] : 0))
                throw std::logic_error("quantum Bruhat graph: shortest paths with different weights");
          }
        }
      }
      if (queue.size() != n_) throw std::logic_error("quantum Bruhat graph is not strongly connected");
    }
  }

  QuantumBruhatGraph(const QuantumBruhatGraph&) = delete;
  QuantumBruhatGraph& operator=(const QuantumBruhatGraph&) = delete;

  const RootDatum& datum() const { return *d_; }
  std::size_t num_vertices() const { return n_; }
  const std::vector<QBGEdge>& edges(WeylElement u) const { return adj_[u.index()]; }
  std::size_t num_edges() const {
    std::size_t m = 0;
    for (const auto& a : adj_) m += a.size();
    return m;
  }

  int d(WeylElement u, WeylElement v) const { return dist_[idx(u.index(), v.index())]; }

  // simple-coroot coordinates
  std::vector<Int> wt_coords(WeylElement u, WeylElement v) const {
    const int* p = &wt_[idx(u.index(), v.index()) * r_];
    return std::vector<Int>(p, p + r_);
  }
  // lattice coordinates
  Coweight wt(WeylElement u, WeylElement v) const { return d_->from_coroot_coords(wt_coords(u, v)); }

  // edge u -> v, if any
  std::optional<QBGEdge> edge(WeylElement u, WeylElement v) const {
    for (const auto& e : adj_[u.index()])
      if (e.target == v.index()) return e;
    return std::nullopt;
  }

  // weight of an explicit path (list of vertices), in simple-coroot coordinates
  std::vector<Int> path_weight(const std::vector<WeylElement>& path) const {
    std::vector<Int> w(r_, 0);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      auto e = edge(path[k], path[k + 1]);
      if (!e) throw std::invalid_argument("path uses a non-edge");
      if (e->quantum)
        for (int i = 0; i < r_; ++i) w[i] += d_->roots().coroot(e->root)[i];
    }
    return w;
  }

  // <wt(p), 2rho> = l(start) - l(end) + l(p)
  bool check_weight_2rho(const std::vector<WeylElement>& path) const {
    if (path.empty()) return true;
    auto w = path_weight(path);
    Int lhs = d_->pair_2rho(d_->from_coroot_coords(w));
    Int rhs = path.front().length() - path.back().length() + static_cast<Int>(path.size() - 1);
    return lhs == rhs;
  }

  // Test hook: overwrite one weight table entry.
  void override_weight(WeylElement u, WeylElement v, const std::vector<Int>& coords) {
    int* p = &wt_[idx(u.index(), v.index()) * r_];
    for (int i = 0; i < r_; ++i) p[i] = static_cast<int>(coords.at(i));
  }

  std::string to_dot() const {
    std::ostringstream os;
    os << "digraph QBG {\n";
    for (std::uint32_t u = 0; u < n_; ++u) os << "  v" << u << " [label=\"" << w_->to_string(u) << "\"];\n";
    for (std::uint32_t u = 0; u < n_; ++u)
      for (const auto& e : adj_[u]) {
        os << "  v" << u << " -> v" << e.target;
        if (e.quantum) {
          os << " [style=dashed, label=\"(";
          const auto& c = d_->roots().coroot(e.root);
          for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
          os << ")\"]";
        } else {
          os << " [style=solid]";
        }
        os << ";\n";
      }
    os << "}\n";
    return os.str();
  }

 private:
  std::size_t idx(std::uint32_t u, std::uint32_t v) const { return static_cast<std::size_t>(u) * n_ + v; }

  const RootDatum* d_;
  const WeylGroup* w_;
  std::size_t n_ = 0;
  int r_ = 0;
  std::vector<int> refl_root_;
  std::vector<Int> coroot_height2_;
  std::vector<std::vector<QBGEdge>> adj_;
  std::vector<int> dist_;
  std::vector<int> wt_;
};

}  // namespace gnp
