#pragma once

#include "gnp/b_of_g.hpp"
#include "gnp/qbg.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace gnp {

struct GenericResult {
  GammaClass lambda;
  RatCoweight nu;
  Pi1Class kappa;
  WeylElement witness_v;
  Int d_min = 0;
  std::optional<SimpleRootSet> used_J;
};

struct CordialReport {
  bool cordial = false;
  bool cond1 = false;  // d at v is minimal over LP(x)
  bool cond2 = false;  // d = l(v^{-1} ^sigma(w v))
  WeylElement v;
  Int d = 0;
  Int len = 0;
  Int d_min = 0;
  std::string failed() const {
    if (cond1 && cond2) return "";
    if (!cond1 && !cond2) return "(1),(2)";
    return cond1 ? "(2)" : "(1)";
  }
};

struct OracleResult {
  SigmaClass max;
  std::set<SigmaClass> classes;  // every [y] with y <= x
  std::size_t interval_size = 0;
};

// Generic classes for a quasi-split datum. A twisted datum routes through its
// quasi-split twin (see generic_newton_general).
class Generic {
 public:
  struct Options {
    std::size_t max_qbg_vertices = 5000;
    std::size_t max_interval = 1u << 20;
  };

  explicit Generic(DatumPtr d) : Generic(std::move(d), Options{}) {}
  Generic(DatumPtr d, Options opt) : d_(std::move(d)), opt_(opt), qbg_(*d_, opt.max_qbg_vertices), bg_(*d_) {
    if (!d_->is_quasi_split()) twin_ = std::make_unique<Generic>(d_->quasi_split_twin(), opt);
  }

  const RootDatum& datum() const { return *d_; }
  const QuantumBruhatGraph& qbg() const { return qbg_; }
  QuantumBruhatGraph& qbg_mutable() { return qbg_; }
  const BofG& bofg() const { return bg_; }
  const AffineWeyl& affine() const { return bg_.affine(); }
  const Options& options() const { return opt_; }
  const Generic* twin() const { return twin_.get(); }

  // d(v => ^sigma(w v))
  Int distance(const AffineElement& x, WeylElement v) const { return qbg_.d(v, d_->twist(x.w * v)); }

  // v^{-1} mu - wt(v => ^sigma(w v))
  Coweight candidate(const AffineElement& x, WeylElement v) const {
    return v.inverse().act(x.mu) - qbg_.wt(v, d_->twist(x.w * v));
  }

  GenericResult generic_lambda(const AffineElement& x, bool test_mode = false) const {
    require_quasi_split("generic_lambda");
    auto lp = affine().lp_set(x);
    WeylElement best = lp.front();
    Int dbest = distance(x, best);
    for (const auto& v : lp) {
      Int dv = distance(x, v);
      if (dv < dbest) {
        dbest = dv;
        best = v;
      }
    }
    GenericResult r;
    r.lambda = d_->gamma_class(candidate(x, best));
    r.nu = d_->conv(r.lambda);
    r.kappa = d_->pi1_class(x.mu);
    r.witness_v = best;
    r.d_min = dbest;
    if (test_mode) {
      for (const auto& v : lp)
        if (distance(x, v) == dbest && !(d_->gamma_class(candidate(x, v)) == r.lambda))
          throw std::logic_error("generic_lambda: minimizers over LP(x) disagree");
      for (const auto& v : d_->weyl().elements())
        if (!d_->leq_gamma(d_->gamma_class(candidate(x, v)), r.lambda))
          throw std::logic_error("generic_lambda: candidate at " + v.to_string() + " exceeds the LP value");
      auto nu_j = generic_newton_restricted(x, best, r.lambda, &r.used_J);
      if (nu_j != r.nu) throw std::logic_error("generic_newton: restricted and full convex hulls disagree");
    }
    return r;
  }

  RatCoweight generic_newton(const AffineElement& x) const { return generic_lambda(x).nu; }

  // conv restricted to subsets of the sigma-closure of the zero set of l(x, v .) on Phi^+
  RatCoweight generic_newton_restricted(const AffineElement& x, WeylElement v, const GammaClass& lambda,
                                        std::optional<SimpleRootSet>* used = nullptr) const {
    SimpleRootSet j;
    const auto& rs = d_->roots();
    for (int b = 0; b < rs.num_positive(); ++b)
      if (affine().length_functional(x, v.act(b)) == 0) j = j | rs.support(b);
    j = d_->sigma_closure(j);
    auto jp = d_->mu_improving_max(lambda.average, j);
    auto nu = d_->avg_J(lambda.average, jp);
    if (!d_->is_dominant(nu)) throw std::logic_error("generic_newton: restricted convex hull is not dominant");
    if (used) *used = j;
    return nu;
  }

  // b_leq-maximum of [y] over y <= x, computed over `jobs` partitions of the interval
  OracleResult oracle_generic_class(const AffineElement& x, unsigned jobs = 1) const {
    require_quasi_split("oracle_generic_class");
    auto interval = affine().lower_interval(x, opt_.max_interval);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(interval.size())));
    struct Part {
      std::set<SigmaClass> classes;
      std::optional<SigmaClass> max;
    };
    std::vector<Part> parts(jobs);
    auto work = [&](unsigned p) {
      auto& part = parts[p];
      for (std::size_t i = p; i < interval.size(); i += jobs) part.classes.insert(bg_.class_of(interval[i]));
      part.max = maximum(part.classes);
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned p = 0; p < jobs; ++p) threads.emplace_back(work, p);
      for (auto& t : threads) t.join();
    }
    while (parts.size() > 1) {
      std::vector<Part> merged;
      for (std::size_t i = 0; i + 1 < parts.size(); i += 2) merged.push_back(merge(parts[i], parts[i + 1]));
      if (parts.size() % 2) merged.push_back(std::move(parts.back()));
      parts = std::move(merged);
    }
    if (!parts[0].max) throw std::logic_error("oracle: the classes below x have no unique maximum");
    return {*parts[0].max, std::move(parts[0].classes), interval.size()};
  }

  // v = canonical_lp(x); (1) d_v minimal over LP(x), (2) d_v = l(v^{-1} ^sigma(w v))
  CordialReport is_cordial(const AffineElement& x) const {
    require_quasi_split("is_cordial");
    CordialReport r;
    r.v = affine().canonical_lp(x);
    r.d = distance(x, r.v);
    r.len = (r.v.inverse() * d_->twist(x.w * r.v)).length();
    r.d_min = r.d;
    for (const auto& v : affine().lp_set(x)) r.d_min = std::min(r.d_min, distance(x, v));
    r.cond1 = r.d <= r.d_min;
    r.cond2 = r.d == r.len;
    r.cordial = r.cond1 && r.cond2;
    return r;
  }

  // the defining equation: l(x) - l(v^{-1} ^sigma(w v)) = <nu_x, 2rho> - defect(b_x)
  bool is_cordial_by_definition(const AffineElement& x) const {
    auto g = generic_lambda(x);
    auto v = affine().canonical_lp(x);
    Int lhs = affine().length(x) - (v.inverse() * d_->twist(x.w * v)).length();
    SigmaClass b{g.nu, g.kappa, x.mu};
    Rational rhs = d_->pair_2rho(g.nu) - Rational(bg_.defect(b));
    return Rational(lhs) == rhs;
  }

  SigmaClass generic_class(const AffineElement& x) const {
    auto g = generic_lambda(x);
    return {g.nu, g.kappa, x.mu};
  }

  // ---- general groups ----
  // x gamma with gamma = eps^{mu_sigma} sigma_1 = sigma_1 eps^{sigma_1^{-1} mu_sigma}
  AffineElement times_gamma(const AffineElement& x) const {
    auto s1 = d_->sigma1();
    AffineElement gamma{s1, s1.inverse().act(d_->mu_sigma())};
    return affine().multiply(x, gamma);
  }
  // (1/#W) sum_u u mu_sigma
  RatCoweight avg_w_mu_sigma() const { return d_->avg_J(to_rational(d_->mu_sigma()), SimpleRootSet::all(d_->rank())); }

  // max over v in LP(x) of conv(v^{-1}mu - wt(sigma_1^{-1} v => ^{sigma_2}(w v)) + v^{-1}mu_sigma - avg_W(mu_sigma))
  RatCoweight generic_newton_general(const AffineElement& x, bool all_of_w = false) const {
    if (d_->is_quasi_split()) return generic_newton(x);
    auto s1 = d_->sigma1();
    const RatCoweight avg = avg_w_mu_sigma();
    auto value = [&](WeylElement v) {
      Coweight c = v.inverse().act(x.mu) - qbg_.wt(s1.inverse() * v, d_->twist(x.w * v)) + v.inverse().act(d_->mu_sigma());
      return d_->conv(to_rational(c) - avg);
    };
    std::vector<RatCoweight> cs;
    for (const auto& v : all_of_w ? d_->weyl().elements() : affine().lp_set(x)) cs.push_back(value(v));
    for (const auto& c : cs)
      if (std::all_of(cs.begin(), cs.end(), [&](const RatCoweight& o) { return d_->leq_coroot_cone(o, c); })) return c;
    throw std::logic_error("generic_newton_general: candidates have no maximum");
  }

  // nu^{G~}(b_{x gamma}) - avg_W(mu_sigma), computed in the quasi-split twin
  RatCoweight generic_newton_transported(const AffineElement& x) const {
    if (d_->is_quasi_split()) return generic_newton(x);
    auto xg = times_gamma(x);
    AffineElement y{twin_->datum().weyl().element(xg.w.index()), xg.mu};
    return twin_->generic_newton(y) - avg_w_mu_sigma();
  }

  // the transported element x gamma as an element of the twin
  AffineElement transport(const AffineElement& x) const {
    auto xg = times_gamma(x);
    const auto& tw = twin_ ? twin_->datum().weyl() : d_->weyl();
    return {tw.element(xg.w.index()), xg.mu};
  }

  struct GeneralCordialReport : CordialReport {
    bool v_in_lp = false;  // sigma_1^{-1} v in LP(x gamma)
  };

  GeneralCordialReport is_cordial_general(const AffineElement& x) const {
    if (d_->is_quasi_split()) {
      GeneralCordialReport g;
      static_cast<CordialReport&>(g) = is_cordial(x);
      g.v_in_lp = true;
      return g;
    }
    auto s1 = d_->sigma1();
    auto dist = [&](WeylElement v) { return Int(qbg_.d(s1.inverse() * v, d_->twist(x.w * v))); };
    GeneralCordialReport r;
    // sigma_1 times the canonical element of x gamma; among all v with v^{-1}(mu + mu_sigma)
    // dominant this minimizes l(sigma_1^{-1} v), which differs from minimizing l(v) when
    // mu + mu_sigma is singular
    auto xg = times_gamma(x);
    r.v = s1 * d_->dominant_representative(xg.mu).second;
    r.v_in_lp = affine().is_length_positive(xg, s1.inverse() * r.v);
    r.d = dist(r.v);
    r.len = (r.v.inverse() * s1 * d_->twist(x.w * r.v)).length();
    r.d_min = r.d;
    for (const auto& vp : affine().lp_set(xg)) r.d_min = std::min(r.d_min, dist(s1 * vp));
    r.cond1 = r.d <= r.d_min;
    r.cond2 = r.d == r.len;
    r.cordial = r.cond1 && r.cond2;
    return r;
  }

 private:
  void require_quasi_split(const char* what) const {
    if (!d_->is_quasi_split())
      throw std::invalid_argument(std::string(what) + ": datum carries an Omega twist; use the general-group routines");
  }

  std::optional<SigmaClass> maximum(const std::set<SigmaClass>& cs) const {
    for (const auto& c : cs) {
      bool top = true;
      for (const auto& o : cs)
        if (!bg_.leq(o, c)) {
          top = false;
          break;
        }
      if (top) return c;
    }
    return std::nullopt;
  }

  template <class Part>
  Part merge(Part& a, Part& b) const {
    Part out;
    out.classes = std::move(a.classes);
    out.classes.insert(b.classes.begin(), b.classes.end());
    if (a.max && b.max) {
      if (bg_.leq(*b.max, *a.max))
        out.max = a.max;
      else if (bg_.leq(*a.max, *b.max))
        out.max = b.max;
    }
    if (!out.max) out.max = maximum(out.classes);
    return out;
  }

  DatumPtr d_;
  Options opt_;
  QuantumBruhatGraph qbg_;
  BofG bg_;
  std::unique_ptr<Generic> twin_;
};

}  // namespace gnp
