#pragma once

#include "gnp/rational.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace gnp {

// Quotient Z^n / S for a sublattice S given by generating rows.
// Uses Smith normal form: P*M*Q = D, so x lies in S iff (x*Q)_i = 0 mod d_i.
class LatticeQuotient {
 public:
  LatticeQuotient() = default;

  LatticeQuotient(std::size_t n, IntMatrix generators) : n_(n) {
    IntMatrix a;
    for (auto& row : generators) {
      if (row.size() != n) throw std::invalid_argument("LatticeQuotient: generator of wrong length");
      bool zero = true;
      for (auto x : row) zero = zero && x == 0;
      if (!zero) a.push_back(std::move(row));
    }
    q_ = identity_matrix(n);
    qinv_ = identity_matrix(n);
    smith(a);
    // sign-normalise free coordinates so that canonical forms do not depend on pivot order
    for (std::size_t j = rank_; j < n_; ++j) {
      for (std::size_t i = 0; i < n_; ++i) {
        if (q_[i][j] == 0) continue;
        if (q_[i][j] < 0) negate_column(j);
        break;
      }
    }
  }

  std::size_t ambient_rank() const { return n_; }

  // Invariant factors > 1, followed by the number of free Z summands.
  std::vector<Int> torsion() const {
    std::vector<Int> t;
    for (auto d : diag_)
      if (d > 1) t.push_back(d);
    return t;
  }
  std::size_t free_rank() const { return n_ - rank_; }
  bool is_trivial() const { return torsion().empty() && free_rank() == 0; }

  // Canonical coordinates: residues for torsion factors, then free coordinates.
  std::vector<Int> canonical(const Coweight& x) const {
    if (x.size() != n_) throw std::invalid_argument("LatticeQuotient: coweight of wrong length");
    std::vector<Int> out;
    for (std::size_t j = 0; j < n_; ++j) {
      Int y = 0;
      for (std::size_t i = 0; i < n_; ++i) y += x[i] * q_[i][j];
      if (j < rank_) {
        if (diag_[j] > 1) out.push_back(mod_floor(y, diag_[j]));
      } else {
        out.push_back(y);
      }
    }
    return out;
  }

  bool contains(const Coweight& x) const {
    for (auto c : canonical(x))
      if (c != 0) return false;
    return true;
  }

  // A lattice vector with the given canonical coordinates.
  Coweight lift(const std::vector<Int>& canon) const {
    std::vector<Int> y(n_, 0);
    std::size_t k = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (j < rank_) {
        if (diag_[j] > 1) y[j] = canon.at(k++);
      } else {
        y[j] = canon.at(k++);
      }
    }
    Coweight x(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) x[i] += y[j] * qinv_[j][i];
    return x;
  }

  std::string describe() const {
    std::string s;
    for (auto d : torsion()) {
      if (!s.empty()) s += " x ";
      s += "Z/" + std::to_string(d);
    }
    for (std::size_t i = 0; i < free_rank(); ++i) {
      if (!s.empty()) s += " x ";
      s += "Z";
    }
    return s.empty() ? "0" : s;
  }

 private:
  void negate_column(std::size_t j) {
    for (std::size_t i = 0; i < n_; ++i) {
      q_[i][j] = -q_[i][j];
      qinv_[j][i] = -qinv_[j][i];
    }
  }

  void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (auto& row : a) std::swap(row[c1], row[c2]);
    for (auto& row : q_) std::swap(row[c1], row[c2]);
    std::swap(qinv_[c1], qinv_[c2]);
  }

  // column c2 += f * column c1
  void add_col(IntMatrix& a, std::size_t c1, std::size_t c2, Int f) {
    if (f == 0) return;
    for (auto& row : a) row[c2] += f * row[c1];
    for (auto& row : q_) row[c2] += f * row[c1];
    // inverse: row c1 of qinv -= f * row c2
    for (std::size_t j = 0; j < n_; ++j) qinv_[c1][j] -= f * qinv_[c2][j];
  }

  void smith(IntMatrix& a) {
    std::size_t m = a.size();
    std::size_t t = 0;
    while (t < m && t < n_) {
      // pivot: smallest nonzero |entry| in the trailing block
      std::size_t pr = m, pc = n_;
      Int best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n_; ++j)
          if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
            best = std::llabs(a[i][j]);
            pr = i;
            pc = j;
          }
      if (best == 0) break;
      std::swap(a[t], a[pr]);
      swap_cols(a, t, pc);
      bool clean = false;
      while (!clean) {
        clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a[i][t] == 0) continue;
          Int f = floor_div(a[i][t], a[t][t]);
          for (std::size_t j = t; j < n_; ++j) a[i][j] -= f * a[t][j];
          if (a[i][t] != 0) {
            std::swap(a[t], a[i]);
            clean = false;
          }
        }
        for (std::size_t j = t + 1; j < n_; ++j) {
          if (a[t][j] == 0) continue;
          Int f = floor_div(a[t][j], a[t][t]);
          add_col(a, t, j, -f);
          if (a[t][j] != 0) {
            swap_cols(a, t, j);
            clean = false;
          }
        }
        if (clean) {
          // divisibility of the trailing block
          for (std::size_t i = t + 1; i < m && clean; ++i)
            for (std::size_t j = t + 1; j < n_; ++j)
              if (a[i][j] % a[t][t] != 0) {
                for (std::size_t k = t; k < n_; ++k) a[t][k] += a[i][k];
                clean = false;
                break;
              }
        }
      }
      if (a[t][t] < 0) {
        for (std::size_t j = t; j < n_; ++j) a[t][j] = -a[t][j];
      }
      diag_.push_back(a[t][t]);
      ++t;
    }
    rank_ = t;
  }

  std::size_t n_ = 0;
  std::size_t rank_ = 0;
  std::vector<Int> diag_;
  IntMatrix q_, qinv_;
};

}  // namespace gnp
