#include "gnp/config.hpp"
#include "gnp/expr.hpp"
#include "gnp/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace gnp;
using Json = nlohmann::ordered_json;

namespace {

Json rat_array(const RatCoweight& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Json rat_array(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Json int_array(const std::vector<Int>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json set_array(SimpleRootSet j) {
  Json a = Json::array();
  for (int i : j.members()) a.push_back(i + 1);
  return a;
}

// lattice coordinates, plus simple-coroot coordinates when the coweight lies in Q Phi^v
void put_coweight(Json& o, const std::string& key, const RatCoweight& v, const RootDatum& d) {
  o[key] = rat_array(v);
  if (auto c = d.coroot_coordinates(v)) o[key + "_coroot"] = rat_array(*c);
}

struct Session {
  Config cfg;
  DatumPtr datum;
  std::unique_ptr<Generic> gen;

  explicit Session(const std::string& path) : cfg(load_config(path)), datum(make_datum(cfg)) {
    Generic::Options opt;
    opt.max_interval = cfg.max_interval_size;
    opt.max_qbg_vertices = cfg.max_qbg_vertices;
    gen = std::make_unique<Generic>(datum, opt);
  }
  Int cap(Int flag) const { return flag >= 0 ? flag : cfg.length_cap; }
};

void warn_char_proviso(const RootDatum& d) {
  if (!d.is_quasi_split())
    std::cerr << "warning: cordiality for a non-quasi-split group assumes char(F) does not divide #pi_1(G_ad)\n";
}

// ---- describe ----
Json describe(const RootDatum& d) {
  Json o;
  o["name"] = d.name();
  o["rank"] = d.rank();
  o["lattice_rank"] = d.lattice_rank();
  o["weyl_order"] = d.weyl_order();
  o["positive_roots"] = d.roots().num_positive();
  Json orbits = Json::array();
  for (auto j : d.sigma_orbits()) orbits.push_back(set_array(j));
  o["sigma_orbits"] = orbits;
  o["pi1"] = d.pi1_quotient().describe();
  o["pi1_invariant_factors"] = int_array(d.pi1_quotient().torsion());
  o["pi1_free_rank"] = d.pi1_quotient().free_rank();
  o["pi1_coinvariants"] = d.pi1_gamma_quotient().describe();
  o["quasi_split"] = d.is_quasi_split();
  if (!d.is_quasi_split()) {
    o["sigma1"] = d.sigma1().to_string();
    o["mu_sigma"] = int_array(d.mu_sigma().coords());
  }
  return o;
}

// ---- element verbs ----
Json verb_lp(const Generic& g, const AffineElement& x) {
  const auto& aw = g.affine();
  Json a = Json::array();
  for (const auto& v : aw.lp_set(x)) a.push_back(v.to_string());
  Json o;
  o["lp"] = a;
  o["canonical"] = aw.canonical_lp(x).to_string();
  o["shrunken"] = aw.is_shrunken(x);
  return o;
}

Json verb_signtype(const Generic& g, const AffineElement& x) {
  const auto& d = g.datum();
  Json o = Json::array();
  for (int b = 0; b < d.roots().num_positive(); ++b) {
    Json r;
    r["root"] = int_array(std::vector<Int>(d.roots().root(b).begin(), d.roots().root(b).end()));
    Int v = g.affine().length_functional(x, b);
    r["length_functional"] = v;
    r["sign"] = v > 0 ? "+" : (v < 0 ? "-" : "0");
    o.push_back(r);
  }
  return o;
}

Json verb_gnp(const Generic& g, const AffineElement& x, bool test_mode) {
  const auto& d = g.datum();
  Json o;
  if (!d.is_quasi_split()) {
    put_coweight(o, "nu", g.generic_newton_general(x, test_mode), d);
    put_coweight(o, "nu_transported", g.generic_newton_transported(x), d);
    o["x_gamma"] = g.twin()->affine().to_string(g.transport(x));
    return o;
  }
  auto r = g.generic_lambda(x, test_mode);
  put_coweight(o, "nu", r.nu, d);
  put_coweight(o, "lambda", to_rational(r.lambda.representative), d);
  o["kappa"] = d.pi1_to_string(r.kappa);
  o["witness"] = r.witness_v.to_string();
  o["d_min"] = r.d_min;
  if (r.used_J)
    o["used_J"] = set_array(*r.used_J);
  else
    o["used_J"] = set_array(g.bofg().invariants(g.generic_class(x)).j2);
  return o;
}

Json verb_lambda(const Generic& g, const AffineElement& x) {
  const auto& d = g.datum();
  auto b = g.generic_class(x);
  auto inv = g.bofg().invariants(b);
  Json o;
  put_coweight(o, "lambda", to_rational(inv.lambda.representative), d);
  put_coweight(o, "lambda_sigma_average", inv.lambda.average, d);
  o["J1"] = set_array(inv.j1);
  o["J2"] = set_array(inv.j2);
  return o;
}

Json verb_defect(const Generic& g, const AffineElement& x) {
  const auto& bg = g.bofg();
  auto b = g.generic_class(x);
  Json o;
  o["defect"] = bg.defect(b);
  o["orbits_in_J1"] = bg.defect_orbits(b);
  if (auto y = bg.fundamental_representative(b, x, g.options().max_interval)) {
    o["fundamental_representative"] = g.affine().to_string(*y);
    o["min_twisted_length"] = bg.defect_min_length(*y);
  }
  return o;
}

Json verb_cordial(const Generic& g, const AffineElement& x) {
  Json o;
  if (!g.datum().is_quasi_split()) {
    auto r = g.is_cordial_general(x);
    o["cordial"] = r.cordial;
    if (!r.cordial) o["failed"] = r.failed();
    o["d"] = r.d;
    o["len"] = r.len;
    o["d_min"] = r.d_min;
    o["v"] = r.v.to_string();
    return o;
  }
  auto r = g.is_cordial(x);
  o["cordial"] = r.cordial;
  if (!r.cordial) o["failed"] = r.failed();
  o["d"] = r.d;
  o["len"] = r.len;
  o["d_min"] = r.d_min;
  o["v"] = r.v.to_string();
  return o;
}

Json verb_vdim(const Generic& g, const AffineElement& x) {
  const auto& aw = g.affine();
  auto b = g.generic_class(x);
  Json o;
  o["length"] = aw.length(x);
  o["eta_sigma"] = aw.eta_sigma(x).to_string();
  o["eta_sigma_length"] = aw.eta_sigma(x).length();
  o["virtual_dimension"] = to_string(g.bofg().virtual_dimension(x, b));
  return o;
}

Json verb_fundamental(const Generic& g, const AffineElement& x) {
  const auto& aw = g.affine();
  const auto& d = g.datum();
  Json o;
  o["fundamental"] = aw.is_fundamental(x);
  o["length"] = aw.length(x);
  o["nu_2rho"] = to_string(d.pair_2rho(g.bofg().class_of(x).nu));
  o["sigma_w_order"] = aw.sigma_w_order(x);
  if (auto fw = g.bofg().fundamental_witness(x)) {
    o["witness_v"] = fw->v.to_string();
    o["witness_J"] = set_array(fw->j);
  }
  return o;
}

const std::vector<std::string> kQuasiSplitOnly = {"lambda", "defect", "vdim"};

Json run_element(const Generic& g, const AffineElement& x, const std::vector<std::string>& verbs, bool test_mode) {
  const auto& aw = g.affine();
  Json o;
  o["x"] = aw.to_string(x);
  o["length"] = aw.length(x);
  for (const auto& v : verbs) {
    if (!g.datum().is_quasi_split() && std::find(kQuasiSplitOnly.begin(), kQuasiSplitOnly.end(), v) != kQuasiSplitOnly.end()) {
      o[v] = {{"error", "requires a quasi-split datum"}};
      continue;
    }
    if (v == "lp") o[v] = verb_lp(g, x);
    else if (v == "signtype") o[v] = verb_signtype(g, x);
    else if (v == "gnp") o[v] = verb_gnp(g, x, test_mode);
    else if (v == "lambda") o[v] = verb_lambda(g, x);
    else if (v == "defect") o[v] = verb_defect(g, x);
    else if (v == "cordial") o[v] = verb_cordial(g, x);
    else if (v == "vdim") o[v] = verb_vdim(g, x);
    else if (v == "fundamental") o[v] = verb_fundamental(g, x);
  }
  return o;
}

// Replaces one stored QBG weight by a wrong value; used to exercise the failure path.
void corrupt_weight(Generic& g) {
  const auto& w = g.datum().weyl();
  auto u = w.identity(), v = w.longest();
  auto c = g.qbg().wt_coords(v, u);
  c[0] += 1;
  g.qbg_mutable().override_weight(v, u, c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic sigma-conjugacy classes, cordiality and Bruhat-interval oracles"};
  app.require_subcommand(1);

  std::string config_path, expr;
  std::string verbs_arg = "gnp";
  Int cap = -1;
  unsigned jobs = 1;
  bool json_out = false, csv_out = false, dot_out = false, test_mode = false, fault_wt = false;
  std::size_t random_paths = 1000, random_pairs = 1000;
  std::uint64_t seed = 1;

  auto add_config = [&](CLI::App* s) { s->add_option("--config", config_path, "datum config (JSON)")->required(); };

  auto* describe_cmd = app.add_subcommand("describe", "rank, Weyl group order, sigma-orbits, pi_1");
  add_config(describe_cmd);
  describe_cmd->add_flag("--json", json_out);

  auto* element_cmd = app.add_subcommand("element", "per-element computations");
  add_config(element_cmd);
  element_cmd->add_option("--expr", expr, "element, e.g. \"t[1] s\" or \"s0 s1\"")->required();
  element_cmd->add_option("--verbs", verbs_arg, "comma list of lp,signtype,gnp,lambda,defect,cordial,vdim,fundamental");
  element_cmd->add_flag("--json", json_out);
  element_cmd->add_flag("--test-mode", test_mode, "enable cross-check paths");

  auto* verify_cmd = app.add_subcommand("verify", "oracle comparison and property suites up to a length cap");
  add_config(verify_cmd);
  verify_cmd->add_option("--cap", cap, "length cap (default: scan.length_cap)");
  verify_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--paths", random_paths, "random QBG paths");
  verify_cmd->add_option("--pairs", random_pairs, "random pairs for length additivity");
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_flag("--json", json_out);
  verify_cmd->add_flag("--fault-wt", fault_wt)->group("");

  auto* scan_cmd = app.add_subcommand("scan-cordial", "cordiality table up to a length cap");
  add_config(scan_cmd);
  scan_cmd->add_option("--cap", cap, "length cap (default: scan.length_cap)");
  scan_cmd->add_flag("--csv", csv_out, "CSV output (default)");

  auto* dot_cmd = app.add_subcommand("qbg-dot", "quantum Bruhat graph in DOT format");
  add_config(dot_cmd);
  dot_cmd->add_flag("--dot", dot_out, "DOT output (default)");

  CLI11_PARSE(app, argc, argv);

  try {
    Session s(config_path);
    const auto& d = *s.datum;
    auto& g = *s.gen;

    if (*describe_cmd) {
      auto o = describe(d);
      if (json_out) {
        std::cout << o.dump(2) << "\n";
      } else {
        for (auto it = o.begin(); it != o.end(); ++it)
          std::cout << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
      }
      return 0;
    }

    if (*element_cmd) {
      std::vector<std::string> verbs;
      std::stringstream ss(verbs_arg);
      std::string v;
      const std::vector<std::string> known = {"lp", "signtype", "gnp", "lambda", "defect", "cordial", "vdim", "fundamental"};
      while (std::getline(ss, v, ',')) {
        if (std::find(known.begin(), known.end(), v) == known.end()) {
          std::cerr << "error: unknown verb '" << v << "'\n";
          return 2;
        }
        verbs.push_back(v);
      }
      if (std::find(verbs.begin(), verbs.end(), "cordial") != verbs.end()) warn_char_proviso(d);
      auto x = parse_element(g.affine(), expr);
      std::cout << run_element(g, x, verbs, test_mode).dump(json_out ? 2 : -1) << "\n";
      return 0;
    }

    if (*verify_cmd) {
      if (fault_wt) corrupt_weight(g);
      auto xs = g.affine().enumerate(s.cap(cap), s.cfg.free_pi1_range);
      Verifier ver(g);
      auto rep = ver.run(xs, jobs);
      ver.check_qbg(rep, random_paths, seed);
      ver.check_additivity(xs, random_pairs, seed + 1, rep);
      if (json_out) {
        Json o;
        o["datum"] = d.name();
        o["cap"] = s.cap(cap);
        o["elements"] = rep.elements();
        Json checks;
        for (const auto& [k, c] : rep.checks()) checks[k] = {{"pass", c.pass}, {"fail", c.fail}};
        o["checks"] = checks;
        o["failed"] = rep.failures();
        o["errors"] = rep.errors();
        if (!rep.first_failure().empty()) o["first_counterexample"] = rep.first_failure();
        if (!rep.first_error().empty()) o["first_error"] = rep.first_error();
        std::cout << o.dump(2) << "\n";
      } else {
        std::cout << d.name() << " cap=" << s.cap(cap) << "\n" << rep.summary();
      }
      return rep.failures() == 0 ? 0 : 1;
    }

    if (*scan_cmd) {
      warn_char_proviso(d);
      std::cout << "x,w,mu,cordial,failed,d_min,len,shrunken\n";
      for (const auto& x : g.affine().enumerate(s.cap(cap), s.cfg.free_pi1_range)) {
        CordialReport r = d.is_quasi_split() ? g.is_cordial(x) : static_cast<CordialReport>(g.is_cordial_general(x));
        std::cout << '"' << g.affine().to_string(x) << "\"," << x.w.to_string() << ",\"" << to_string(x.mu) << "\","
                  << (r.cordial ? 1 : 0) << "," << r.failed() << "," << r.d_min << "," << r.len << ","
                  << (g.affine().is_shrunken(x) ? 1 : 0) << "\n";
      }
      return 0;
    }

    if (*dot_cmd) {
      std::cout << g.qbg().to_dot();
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
