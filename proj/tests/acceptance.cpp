// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "gnp/config.hpp"
#include "gnp/expr.hpp"
#include "gnp/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace gnp;

namespace {

constexpr double kExampleSeconds = 1.0;
constexpr double kOracleSeconds = 600.0;
constexpr Int kOracleCap = 8;
constexpr Int kSignTypeCap = 8;
constexpr Int kGeneralCap = 6;
constexpr std::size_t kRandomPaths = 10000;
constexpr std::size_t kRandomPairs = 10000;
constexpr std::uint64_t kSeed = 20240601;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string path(const std::string& f) { return std::string(GNP_DATA) + "/" + f; }

struct Loaded {
  Config cfg;
  std::unique_ptr<Generic> g;
};

Loaded load(const std::string& f) {
  Loaded l;
  l.cfg = load_config(path(f));
  Generic::Options opt;
  opt.max_interval = l.cfg.max_interval_size;
  opt.max_qbg_vertices = l.cfg.max_qbg_vertices;
  l.g = std::make_unique<Generic>(make_datum(l.cfg), opt);
  return l;
}

int failed_criteria = 0;

void line(int n, bool ok, const std::string& what) {
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << what << std::endl;
  if (!ok) ++failed_criteria;
}

std::string counts(const CheckCounter& c) {
  return std::to_string(c.pass + c.fail) + " checks, " + std::to_string(c.fail) + " failures";
}

std::string first_of(const Report& r, const std::string& prefix) {
  for (const auto& [k, c] : r.checks())
    if (k.rfind(prefix, 0) == 0 && c.fail > 0) return "; first failing check " + k + ": " + r.first_failure();
  return "";
}

bool group_ok(const Report& r, const std::string& prefix, bool need_checks = true) {
  auto c = r.group(prefix);
  return c.fail == 0 && (!need_checks || c.pass > 0);
}

void criterion_1() {
  auto t0 = Clock::now();
  auto l = load("gl3.json");
  const auto& g = *l.g;
  const auto& aw = g.affine();
  bool ok = true;
  std::ostringstream bad;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      bad << " " << what;
    }
  };
  auto s0 = parse_element(aw, "s0"), s1 = parse_element(aw, "s1"), s2 = parse_element(aw, "s2");
  auto basic = g.bofg().class_of(aw.identity());
  for (const auto& [name, x] : {std::pair{"s0", s0}, {"s1", s1}, {"s2", s2}}) expect(aw.length(x) == 1, std::string("l(") + name + ")");
  expect(aw.eta_sigma(s1).length() == 1, "eta(s1)");
  expect(aw.eta_sigma(s2).length() == 1, "eta(s2)");
  expect(aw.eta_sigma(s0).length() == 3, "eta(s0)");
  expect(g.bofg().virtual_dimension(s1, basic) == Rational(1), "d_s1");
  expect(g.bofg().virtual_dimension(s2, basic) == Rational(1), "d_s2");
  expect(g.bofg().virtual_dimension(s0, basic) == Rational(2), "d_s0");
  expect(g.is_cordial(s1).cordial, "cordial(s1)");
  expect(g.is_cordial(s2).cordial, "cordial(s2)");
  expect(!g.is_cordial(s0).cordial, "cordial(s0)");
  double t = since(t0);
  expect(t < kExampleSeconds, "runtime");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f s", t);
  line(1, ok, "GL3 example, " + std::string(buf) + (ok ? "" : ", wrong:" + bad.str()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  unsigned jobs = 4;
  app.add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  try {
    criterion_1();

    const std::vector<std::string> oracle_data = {"a1_sc.json",   "a1_adjoint.json", "gl2.json",   "a2_adjoint.json",
                                                  "gl3.json",     "c2_sc.json",      "g2_sc.json", "a2_adjoint_flip.json"};
    Report all, qbg, additivity;
    std::size_t elements = 0;
    auto t0 = Clock::now();
    for (const auto& f : oracle_data) {
      auto l = load(f);
      auto xs = l.g->affine().enumerate(kOracleCap, l.cfg.free_pi1_range);
      elements += xs.size();
      Verifier ver(*l.g);
      all.merge(ver.run(xs, jobs));
      ver.check_qbg(qbg, kRandomPaths, kSeed);
      ver.check_additivity(xs, kRandomPairs, kSeed + 1, additivity);
    }
    double t = since(t0);
    {
      auto c = all.group("oracle.");
      bool ok = c.fail == 0 && c.pass > 0 && all.errors() == 0 && t <= kOracleSeconds;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.1f s", t);
      line(2, ok,
           "oracle vs formula on " + std::to_string(elements) + " elements up to length " + std::to_string(kOracleCap) +
               ", " + counts(c) + ", " + std::to_string(all.errors()) + " budget errors, " + buf + first_of(all, "oracle."));
    }
    line(3, group_ok(all, "defect."), "defect characterizations, " + counts(all.group("defect.")) + first_of(all, "defect."));
    line(4, group_ok(all, "fundamental."),
         "fundamental conditions, " + counts(all.group("fundamental.")) + first_of(all, "fundamental."));
    {
      auto c = all.group("shrunken");
      auto lp = all.group("lp.");
      line(5, group_ok(all, "shrunken") && group_ok(all, "lp."),
           "shrunken criterion, " + counts(c) + " (LP sets: " + counts(lp) + ")" + first_of(all, "shrunken"));
    }

    {
      bool ok = true;
      std::ostringstream msg;
      Report st;
      for (const char* f : {"a2_sc.json", "a2_adjoint.json", "a1xa1_sc.json", "a1xa1_adjoint.json"}) {
        auto l = load(f);
        const auto& aw = l.g->affine();
        auto xs = aw.enumerate(kSignTypeCap, l.cfg.free_pi1_range);
        auto ce = find_signtype_counterexample(aw, xs);
        if (ce) {
          ok = false;
          msg << " unexpected pair in " << f << ": " << aw.to_string(ce->first) << " | " << aw.to_string(ce->second) << ";";
        }
      }
      for (const char* f : {"b2_sc.json", "g2_sc.json"}) {
        auto l = load(f);
        const auto& aw = l.g->affine();
        auto ce = find_signtype_counterexample(aw, aw.enumerate(kSignTypeCap, l.cfg.free_pi1_range));
        if (!ce) {
          ok = false;
          msg << " no pair found in " << f << ";";
        } else {
          msg << " " << f << ": " << aw.to_string(ce->first) << " | " << aw.to_string(ce->second) << ";";
        }
      }
      ok = ok && group_ok(all, "signtype.");
      line(6, ok, "sign type from LP, " + counts(all.group("signtype.")) + ";" + msg.str());
    }

    line(7, group_ok(qbg, "qbg.") && group_ok(qbg, "qbg.weight2rho_path") && group_ok(qbg, "qbg.weight_estimate"),
         "QBG identities, " + counts(qbg.group("qbg.")) + first_of(qbg, "qbg."));
    line(8, group_ok(all, "cordial."), "cordial inequality, " + counts(all.group("cordial.")) + first_of(all, "cordial."));
    line(9, group_ok(additivity, "additivity.criterion") && group_ok(additivity, "additivity.lp"),
         "length additivity on random pairs, " + counts(additivity.group("additivity.")) + first_of(additivity, "additivity."));

    {
      Report gen;
      std::size_t n = 0;
      for (const char* f : {"a1_adjoint_twist.json", "a2_adjoint_twist.json"}) {
        auto l = load(f);
        auto xs = l.g->affine().enumerate(kGeneralCap, l.cfg.free_pi1_range);
        n += xs.size();
        gen.merge(Verifier(*l.g).run(xs, jobs));
      }
      line(10, group_ok(gen, "general.routeA=B") && group_ok(gen, "general.") && gen.errors() == 0,
           "general groups on " + std::to_string(n) + " elements, " + counts(gen.group("general.")) + first_of(gen, "general."));
    }
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << std::endl;
    return 2;
  }
  return failed_criteria == 0 ? 0 : 1;
}
