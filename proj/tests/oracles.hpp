// Brute-force reference computations used to cross-check the library.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "spb/aut.hpp"
#include "spb/transport.hpp"

namespace oracle {

using namespace spb;

/// Every bijection of F commuting with the action, by trying all |F|! maps.
inline std::vector<std::vector<Point>> gset_automorphisms(const GSet &F)
{
  std::vector<Point> p(F.size());
  std::iota(p.begin(), p.end(), Point{0});
  std::vector<std::vector<Point>> out;
  do {
    bool ok = true;
    for (Elem g = 0; g < F.group().order() && ok; ++g)
      for (Point f = 0; f < F.size() && ok; ++f)
        ok = p[F.act(g, f)] == F.act(g, p[f]);
    if (ok)
      out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Every bijection of G preserving the product, by trying all |G|! maps.
inline std::size_t group_automorphism_count(const FiniteGroup &G)
{
  std::vector<Elem> p(G.order());
  std::iota(p.begin(), p.end(), Elem{0});
  std::size_t count = 0;
  do {
    bool ok = true;
    for (Elem a = 0; a < G.order() && ok; ++a)
      for (Elem b = 0; b < G.order() && ok; ++b)
        ok = p[G.mul(a, b)] == G.mul(p[a], p[b]);
    count += ok ? 1 : 0;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Generalized permutation matrix of (g̃, σ) acting on G×I_n by
/// (h, x) ↦ (g̃(σx)·h, σx): entry [σx][x] = g̃(σx), all other entries empty.
using Monomial = std::vector<std::vector<long>>;

inline Monomial monomial(const WreathElement &w)
{
  const std::size_t n = w.g.size();
  Monomial m(n, std::vector<long>(n, -1));
  for (std::uint32_t x = 0; x < n; ++x)
    m[w.sigma(x)][x] = w.g[w.sigma(x)];
  return m;
}

inline Monomial monomial_product(const FiniteGroup &G, const Monomial &a, const Monomial &b)
{
  const std::size_t n = a.size();
  Monomial c(n, std::vector<long>(n, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a[i][k] >= 0 && b[k][j] >= 0)
          c[i][j] = G.mul(static_cast<Elem>(a[i][k]), static_cast<Elem>(b[k][j]));
  return c;
}

/// Components of the mapping torus of the clutching maps: vertices (p, end)
/// for each fiber point and each end of every loop's interval, with the
/// interval edges and the gluing (p, 1) ~ (ψ(p), 0).
inline std::size_t mapping_torus_components(std::size_t fiber_size,
                                            const std::vector<std::vector<Point>> &clutching)
{
  const std::size_t m = clutching.size();
  // Vertex 0..fiber_size-1: the fiber over the wedge point. Each loop adds an
  // interior copy of the fiber joined to the wedge fiber at both ends.
  const std::size_t vertices = fiber_size * (1 + m);
  std::vector<std::vector<std::size_t>> adj(vertices);
  auto link = [&](std::size_t a, std::size_t b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (std::size_t i = 0; i < m; ++i)
    for (Point p = 0; p < fiber_size; ++p) {
      const std::size_t interior = fiber_size * (1 + i) + p;
      link(p, interior);
      link(interior, clutching[i][p]);
    }
  std::vector<bool> seen(vertices, false);
  std::size_t comps = 0;
  for (std::size_t s = 0; s < vertices; ++s) {
    if (seen[s])
      continue;
    ++comps;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto u : adj[v])
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
  }
  return comps;
}

inline std::vector<std::vector<Point>> tables(const std::vector<GSetAut> &maps)
{
  std::vector<std::vector<Point>> out;
  for (const auto &m : maps)
    out.push_back(m.table());
  return out;
}

/// All bases of F, by filtering every tuple in F^n through the direct
/// bijectivity test of (g, x) ↦ g·t(x).
inline std::vector<std::vector<Point>> bases(const GSet &F, std::size_t n)
{
  std::vector<std::vector<Point>> out;
  std::vector<Point> t(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t x) {
    if (x == n) {
      std::set<Point> image;
      for (Point f : t)
        for (Elem g = 0; g < F.group().order(); ++g)
          image.insert(F.act(g, f));
      if (image.size() == F.size() && n * F.group().order() == F.size())
        out.push_back(t);
      return;
    }
    for (Point p = 0; p < F.size(); ++p) {
      t[x] = p;
      rec(x + 1);
    }
  };
  rec(0);
  return out;
}

} // namespace oracle
