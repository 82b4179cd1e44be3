#include "common.hpp"

#include "gnp/qbg.hpp"

#include <deque>
#include <random>

using namespace gnp;
using namespace testing_util;

namespace {

// BFS over the brute-force edge set: distances and the weight of the first shortest path found
struct Tables {
  std::vector<std::vector<int>> dist;
  std::vector<std::vector<std::vector<Int>>> wt;
};

Tables bfs_tables(const RootDatum& d, const std::set<oracle::Edge>& edges) {
  const std::size_t n = d.weyl().size();
  const int r = d.rank();
  std::vector<std::vector<oracle::Edge>> adj(n);
  for (const auto& e : edges) adj[e.from].push_back(e);
  Tables t;
  t.dist.assign(n, std::vector<int>(n, -1));
  t.wt.assign(n, std::vector<std::vector<Int>>(n, std::vector<Int>(r, 0)));
  for (std::uint32_t s = 0; s < n; ++s) {
    std::deque<std::uint32_t> q{s};
    t.dist[s][s] = 0;
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (const auto& e : adj[u]) {
        if (t.dist[s][e.to] >= 0) continue;
        t.dist[s][e.to] = t.dist[s][u] + 1;
        t.wt[s][e.to] = t.wt[s][u];
        if (e.quantum)
          for (int i = 0; i < r; ++i) t.wt[s][e.to][i] += d.roots().coroot(e.root)[i];
        q.push_back(e.to);
      }
    }
  }
  return t;
}

}  // namespace

TEST(QBG, A1Edges) {
  auto d = oracle::datum(kA1);
  QuantumBruhatGraph q(*d);
  const auto& w = d->weyl();
  EXPECT_EQ(q.num_vertices(), 2u);
  EXPECT_EQ(q.num_edges(), 2u);
  auto up = q.edge(w.identity(), w.simple(0));
  ASSERT_TRUE(up);
  EXPECT_FALSE(up->quantum);
  auto down = q.edge(w.simple(0), w.identity());
  ASSERT_TRUE(down);
  EXPECT_TRUE(down->quantum);
  EXPECT_EQ(q.wt(w.simple(0), w.identity()), cw({1}));
}

TEST(QBG, A2Examples) {
  auto d = oracle::datum(kA2);
  QuantumBruhatGraph q(*d);
  const auto& w = d->weyl();
  auto e = w.identity(), w0 = w.longest();
  auto top = q.edge(w0, e);
  ASSERT_TRUE(top);
  EXPECT_TRUE(top->quantum);
  EXPECT_EQ(top->root, d->roots().highest_root(0));
  EXPECT_EQ(q.d(e, w0), 3);
  EXPECT_EQ(q.wt(e, w0), cw({0, 0}));
  EXPECT_EQ(q.d(w0, e), 1);
  EXPECT_EQ(q.wt(w0, e), cw({1, 1}));
  for (const auto& u : w.elements()) {
    EXPECT_EQ(q.d(u, u), 0);
    EXPECT_TRUE(q.wt(u, u).is_zero());
  }
  int bruhat = 0;
  for (const auto& u : w.elements())
    for (const auto& ed : q.edges(u)) bruhat += ed.quantum ? 0 : 1;
  EXPECT_EQ(bruhat, 8);
  EXPECT_EQ(q.num_edges(), 15u);
}

TEST(QBG, EdgesMatchPerPairCheck) {
  for (auto js : small_data()) {
    auto d = oracle::datum(js);
    QuantumBruhatGraph q(*d);
    std::set<oracle::Edge> mine;
    for (const auto& u : d->weyl().elements())
      for (const auto& e : q.edges(u)) mine.insert({u.index(), e.target, e.root, e.quantum});
    EXPECT_EQ(mine.size(), q.num_edges()) << js;
    EXPECT_TRUE(mine == oracle::qbg_edges(*d)) << js;
  }
}

TEST(QBG, TablesMatchIndependentBfs) {
  for (auto js : {kA2, kB2, kG2, kA3, kGL3}) {
    auto d = oracle::datum(js);
    QuantumBruhatGraph q(*d);
    auto t = bfs_tables(*d, oracle::qbg_edges(*d));
    for (const auto& u : d->weyl().elements())
      for (const auto& v : d->weyl().elements()) {
        EXPECT_EQ(q.d(u, v), t.dist[u.index()][v.index()]) << js;
        EXPECT_EQ(q.wt_coords(u, v), t.wt[u.index()][v.index()]) << js;
      }
  }
}

TEST(QBG, WeightOrientation) {
  auto d = oracle::datum(kA1);
  QuantumBruhatGraph q(*d);
  const auto& w = d->weyl();
  auto e = w.identity(), s = w.simple(0);
  EXPECT_TRUE(q.check_weight_2rho({}));
  EXPECT_TRUE(q.check_weight_2rho({e}));
  // e -> s -> e: <alpha^v, 2rho> = 2 = 0 - 0 + 2
  EXPECT_TRUE(q.check_weight_2rho({e, s, e}));
  EXPECT_EQ(q.path_weight({e, s, e}), (std::vector<Int>{1}));
  // e -> s: weight 0 = l(e) - l(s) + 1, while l(s) - l(e) + 1 = 2
  EXPECT_TRUE(q.check_weight_2rho({e, s}));
  EXPECT_EQ(d->pair_2rho(q.wt(e, s)), 0);
}

TEST(QBG, RandomPathsB2) {
  auto d = oracle::datum(kB2);
  QuantumBruhatGraph q(*d);
  std::mt19937_64 rng(2024);
  auto els = d->weyl().elements();
  for (int k = 0; k < 2000; ++k) {
    std::vector<WeylElement> path{els[rng() % els.size()]};
    int n = static_cast<int>(rng() % 10);
    for (int s = 0; s < n; ++s) {
      const auto& es = q.edges(path.back());
      path.push_back(d->weyl().element(es[rng() % es.size()].target));
    }
    ASSERT_TRUE(q.check_weight_2rho(path));
  }
}

TEST(QBG, Budget) {
  auto d = oracle::datum(kA3);
  EXPECT_THROW(QuantumBruhatGraph(*d, 10), BudgetExceeded);
}

TEST(QBG, Dot) {
  auto d = oracle::datum(kA1);
  QuantumBruhatGraph q(*d);
  auto s = q.to_dot();
  EXPECT_NE(s.find("digraph QBG"), std::string::npos);
  EXPECT_NE(s.find("v0 -> v1 [style=solid]"), std::string::npos);
  EXPECT_NE(s.find("v1 -> v0 [style=dashed, label=\"(1)\"]"), std::string::npos);
}
