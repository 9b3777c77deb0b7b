#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "spb/bundles.hpp"
#include "spb/cli/verify.hpp"
#include "spb/error.hpp"

using namespace spb;

namespace {

FiniteGroup klein() { return make_direct_product(make_cyclic(2), make_cyclic(2)); }

std::size_t torus_components(const FlatBundle &b)
{
  return oracle::mapping_torus_components(b.fiber().size(), oracle::tables(b.clutching()));
}

FlatBundle covering(std::size_t n, const std::vector<Permutation> &clutching)
{
  GSet fiber = trivial_action(make_trivial(), n);
  std::vector<GSetAut> maps;
  for (const auto &c : clutching)
    maps.emplace_back(fiber, c.images());
  return FlatBundle(fiber, maps);
}

/// Orbits of f ↦ ψ∘f on all bases, computed on raw tuples.
std::size_t frame_orbits(const FlatBundle &b)
{
  const std::size_t n = b.fiber().orbits().orbit_count;
  auto all = oracle::bases(b.fiber(), n);
  std::set<std::vector<Point>> seen;
  std::size_t orbits = 0;
  for (const auto &start : all) {
    if (seen.count(start))
      continue;
    ++orbits;
    std::vector<std::vector<Point>> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      auto t = stack.back();
      stack.pop_back();
      for (const auto &psi : b.clutching())
        for (const auto &inv : {psi, psi.inverse()}) {
          auto u = t;
          for (auto &p : u)
            p = inv(p);
          if (seen.insert(u).second)
            stack.push_back(u);
        }
    }
  }
  return orbits;
}

} // namespace

TEST(GroupBundles, CyclicOfOrderThree)
{
  FiniteGroup Z3 = make_cyclic(3);
  FlatBundle trivial = group_bundle_over_circle(GroupHom::identity(Z3));
  FlatBundle twisted = group_bundle_over_circle(GroupHom(Z3, Z3, {0, 2, 1}));
  EXPECT_EQ(total_components(trivial), 3u);
  EXPECT_EQ(total_components(twisted), 2u);
  EXPECT_EQ(torus_components(twisted), 2u);
  EXPECT_TRUE(unit_component_is_circle(twisted));
  OrbitPartition p = component_partition(twisted);
  EXPECT_EQ(p.orbit_of, (std::vector<std::size_t>{0, 1, 1}));
  EXPECT_TRUE(is_trivializable(trivial));
  EXPECT_FALSE(is_trivializable(twisted));
  EXPECT_FALSE(bundle_isomorphic(trivial, twisted));
  EXPECT_TRUE(bundle_isomorphic(twisted, twisted));
}

TEST(GroupBundles, KleinClassesAndComponents)
{
  FiniteGroup V = klein();
  CircleClassification c = classify_circle(V);
  ASSERT_EQ(c.classes.size(), 3u);
  std::vector<std::size_t> counts;
  for (const auto &row : c.classes)
    counts.push_back(row.components);
  EXPECT_EQ(counts, (std::vector<std::size_t>{4, 3, 2}));

  // Bundles are isomorphic exactly when the automorphisms are conjugate in
  // Aut(V), and isomorphic bundles have equal component counts.
  auto classes = conjugacy_classes(c.aut.group);
  std::vector<std::size_t> class_of(c.aut.elements.size());
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (Elem e : classes[k])
      class_of[e] = k;
  for (std::size_t i = 0; i < c.aut.elements.size(); ++i)
    for (std::size_t j = 0; j < c.aut.elements.size(); ++j) {
      FlatBundle bi = group_bundle_over_circle(c.aut.elements[i]);
      FlatBundle bj = group_bundle_over_circle(c.aut.elements[j]);
      EXPECT_EQ(bundle_isomorphic(bi, bj), class_of[i] == class_of[j]);
      if (bundle_isomorphic(bi, bj))
        EXPECT_EQ(total_components(bi), total_components(bj));
      EXPECT_EQ(total_components(bi), torus_components(bi));
    }
  // Swapping a,b versus swapping b,c (c = a+b).
  FlatBundle ab = group_bundle_over_circle(GroupHom(V, V, {0, 2, 1, 3}));
  FlatBundle bc = group_bundle_over_circle(GroupHom(V, V, {0, 1, 3, 2}));
  EXPECT_TRUE(bundle_isomorphic(ab, bc));
  EXPECT_EQ(total_components(ab), 3u);
}

TEST(GroupBundles, RejectsNonAutomorphismsAndModeMismatch)
{
  FiniteGroup Z3 = make_cyclic(3);
  EXPECT_THROW(GroupHom(Z3, Z3, {1, 2, 0}), DomainError);
  FiniteGroup Z4 = make_cyclic(4);
  EXPECT_THROW(FlatBundle(Z4, {GroupHom(Z4, Z4, {0, 2, 0, 2})}), DomainError);
  FlatBundle g = group_bundle_over_circle(GroupHom::identity(Z3));
  FlatBundle s = covering(3, {Permutation::identity(3)});
  EXPECT_THROW(bundle_isomorphic(g, s), Mismatch);
  EXPECT_THROW(unit_component_is_circle(s), DomainError);
}

TEST(FlatBundle, ComponentsMatchMappingTorusOnRandomBundles)
{
  std::mt19937_64 rng(29);
  for (const auto &G : verify::fixture_groups(4))
    for (std::size_t n = 1; n <= 3; ++n) {
      GSet F = standard_semitorsor(G, n);
      auto auts = enumerate_automorphisms(F);
      std::uniform_int_distribution<std::size_t> pick(0, auts.size() - 1);
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<GSetAut> clutching;
        for (std::size_t m = 0; m < 1 + static_cast<std::size_t>(trial % 3); ++m)
          clutching.push_back(auts[pick(rng)]);
        FlatBundle b(F, clutching);
        ASSERT_EQ(total_components(b), torus_components(b));
        // Conjugating every clutching map by one automorphism gives an
        // isomorphic bundle with the same component count.
        const GSetAut &c = auts[pick(rng)];
        std::vector<GSetAut> conj;
        for (const auto &psi : clutching)
          conj.push_back(c.compose(psi).compose(c.inverse()));
        FlatBundle b2(F, conj);
        if (F.size() <= 8)
          EXPECT_TRUE(bundle_isomorphic(b, b2));
        EXPECT_EQ(total_components(b), total_components(b2));
      }
    }
}

TEST(FlatBundle, Trivializability)
{
  EXPECT_TRUE(is_trivializable(covering(3, {Permutation::identity(3), Permutation::identity(3)})));
  EXPECT_FALSE(is_trivializable(covering(2, {Permutation::identity(2), Permutation({1, 0})})));
  EXPECT_THROW(FlatBundle(trivial_action(make_trivial(), 2), {}), DomainError);
  EXPECT_THROW(FlatBundle(GSet(make_cyclic(2), 2, {0, 1, 0, 1}), {}), NotFree);
}

TEST(Decomposition, QuotientBundle)
{
  FiniteGroup Z3 = make_cyclic(3);
  FlatBundle principal(standard_semitorsor(Z3, 1),
                       {wreath_to_aut(WreathElement{{1}, Permutation::identity(1)}, 1, Z3)});
  FlatBundle q = quotient_bundle(principal);
  EXPECT_EQ(q.fiber().size(), 1u);
  EXPECT_EQ(total_components(q), 1u);

  FlatBundle w2 = finite_winding_bundle(make_cyclic(2), 2);
  EXPECT_EQ(total_components(quotient_bundle(w2)), 1u);
  EXPECT_EQ(quotient_bundle(w2).fiber().size(), 2u);

  FlatBundle flat(standard_semitorsor(Z3, 3), {GSetAut::identity(standard_semitorsor(Z3, 3))});
  EXPECT_EQ(total_components(quotient_bundle(flat)), 3u);

  FlatBundle w3 = finite_winding_bundle(klein(), 3);
  FlatBundle q3 = quotient_bundle(w3);
  EXPECT_EQ(total_components(q3), 1u);
  EXPECT_EQ(Permutation(q3.clutching()[0].table()).order(), 3u);
  for (std::size_t i = 0; i < w3.loops(); ++i)
    EXPECT_EQ(q3.clutching()[i].table(), cq(w3.clutching()[i]).images());
}

TEST(Winding, ComponentsAndTriviality)
{
  for (const auto &G : verify::fixture_groups(4)) {
    EXPECT_TRUE(is_trivializable(finite_winding_bundle(G, 1)));
    for (std::size_t k = 2; k <= 3; ++k) {
      FlatBundle b = finite_winding_bundle(G, k);
      EXPECT_FALSE(is_trivializable(b));
      // Every point returns to itself after k turns, so each component
      // covers the circle k times: |G|·k / k components.
      EXPECT_EQ(total_components(b), G.order());
      EXPECT_EQ(total_components(b), torus_components(b));
    }
  }
  EXPECT_EQ(total_components(finite_winding_bundle(make_cyclic(2), 2)), 2u);
  EXPECT_THROW(finite_winding_bundle(make_cyclic(2), 0), DomainError);
}

TEST(FrameBundle, WindingClutchingAndComponents)
{
  FlatBundle b = finite_winding_bundle(make_cyclic(2), 2);
  FrameBundle fb = frame_bundle(b);
  EXPECT_EQ(fb.frames.size(), 8u);
  EXPECT_EQ(fb.wreath.group().order(), 8u);
  EXPECT_EQ(total_components(fb.bundle), 4u);
  EXPECT_EQ(total_components(fb.bundle), frame_orbits(b));
  EXPECT_EQ(total_components(fb.bundle), torus_components(fb.bundle));
  auto w = clutching_wreath(b, canonical_frame(b.fiber()));
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0], (WreathElement{{0, 0}, Permutation({1, 0})}));

  for (const auto &G : verify::fixture_groups(3))
    for (std::size_t k = 1; k <= 3; ++k) {
      FlatBundle bk = finite_winding_bundle(G, k);
      auto wk = clutching_wreath(bk, canonical_frame(bk.fiber()));
      EXPECT_EQ(wk[0], (WreathElement{std::vector<Elem>(k, G.identity()), Permutation::cycle(k).inverse()}));
      EXPECT_EQ(total_components(frame_bundle(bk).bundle), frame_orbits(bk));
    }
}

TEST(FrameBundle, TrivialAndFunctorial)
{
  GSet F = standard_semitorsor(make_cyclic(3), 2);
  FlatBundle trivial(F, {GSetAut::identity(F), GSetAut::identity(F)});
  EXPECT_TRUE(is_trivializable(frame_bundle(trivial).bundle));

  auto auts = enumerate_automorphisms(F);
  FlatBundle b(F, {auts[7], auts[13]});
  FrameBundle fb = frame_bundle(b);
  for (std::size_t i = 0; i < b.loops(); ++i) {
    auto lifted = frame_functor_map(b.clutching()[i].map(), Verification::on);
    EXPECT_EQ(std::vector<std::size_t>(fb.bundle.clutching()[i].table().begin(),
                                       fb.bundle.clutching()[i].table().end()),
              lifted.image);
  }
}

TEST(FrameBundle, QuotientByBaseGroupIsFramesOfTheCovering)
{
  // q∘(ψ∘f) = C_q(ψ)∘(q∘f): the frame clutching descends to the clutching
  // of the frames of B/G.
  FlatBundle b = finite_winding_bundle(make_cyclic(3), 3);
  FrameBundle fb = frame_bundle(b);
  const auto &q = b.fiber().orbits().orbit_of;
  FlatBundle cover = quotient_bundle(b);
  for (std::size_t i = 0; i < fb.frames.size(); ++i) {
    const Frame &f = fb.frames[i];
    const Frame &g = fb.frames[fb.bundle.clutching()[0](static_cast<Point>(i))];
    for (std::size_t x = 0; x < f.size(); ++x)
      EXPECT_EQ(q[g[x]], cover.clutching()[0](static_cast<Point>(q[f[x]])));
  }
}

TEST(FrameBundle, ClutchingCovariesWithTheReferenceFrame)
{
  for (std::size_t k : {2u, 3u}) {
    FlatBundle b = finite_winding_bundle(make_cyclic(2), k);
    GSet F = b.fiber();
    FrameSpace fs = enumerate_frames(F);
    const FiniteGroup &G = F.group();
    Frame f0 = canonical_frame(F);
    auto w0 = clutching_wreath(b, f0);
    for (const auto &r : fs.frames()) {
      WreathElement c = frame_divide(fs, r, f0);
      auto wr = clutching_wreath(b, r);
      EXPECT_EQ(wr[0], wreath_mul(G, wreath_mul(G, c, w0[0]), wreath_inv(G, c)));
    }
  }
  FlatBundle b = finite_winding_bundle(make_cyclic(2), 2);
  EXPECT_THROW(clutching_wreath(b, Frame{{0, 1}}), DomainError);
}

TEST(Holonomy, WordsComposeInOrder)
{
  GSet F = standard_semitorsor(make_cyclic(3), 2);
  auto auts = enumerate_automorphisms(F);
  FlatBundle b(F, {auts[5], auts[11]});
  EXPECT_TRUE(holonomy(b, LoopWord{}).is_identity());
  EXPECT_TRUE(holonomy(b, LoopWord{{1, -1}}).is_identity());
  EXPECT_TRUE(holonomy(b, LoopWord{{-2, 2}}).is_identity());
  EXPECT_EQ(holonomy(b, LoopWord{{1, 2}}), auts[11].compose(auts[5]));
  auto words = verify::all_words(2, 3);
  for (const auto &w1 : words)
    for (const auto &w2 : words) {
      LoopWord cat = w1;
      cat.letters.insert(cat.letters.end(), w2.letters.begin(), w2.letters.end());
      ASSERT_EQ(holonomy(b, cat), holonomy(b, w2).compose(holonomy(b, w1)));
    }
  EXPECT_THROW(holonomy(b, LoopWord{{3}}), DomainError);
  EXPECT_THROW(holonomy(b, LoopWord{{0}}), DomainError);

  FlatBundle w3 = finite_winding_bundle(make_cyclic(2), 3);
  EXPECT_TRUE(holonomy(w3, LoopWord{{1, 1, 1}}).is_identity());
  EXPECT_FALSE(holonomy(w3, LoopWord{{1, 1}}).is_identity());
}

TEST(FiberCount, KernelSizedPreimages)
{
  FiniteGroup Z4 = make_cyclic(4), Z2 = make_cyclic(2);
  GSet F = standard_semitorsor(Z4, 2), F2 = standard_semitorsor(Z2, 2);
  EXPECT_EQ(map_fiber_count(EquivariantMap::identity(F)), 1u);
  std::vector<Point> value(F.size());
  for (Point p = 0; p < F.size(); ++p) {
    auto [h, x] = semitorsor_coords(Z4, p);
    value[p] = semitorsor_point(Z2, h % 2, x);
  }
  EXPECT_EQ(map_fiber_count(EquivariantMap(F, F2, GroupHom(Z4, Z2, {0, 1, 0, 1}), value)), 2u);
  EXPECT_EQ(map_fiber_count(quotient_map(F)), 4u);
  EXPECT_THROW(map_fiber_count(extend_from_representatives(F, F, {0, 1})), DomainError);
}

TEST(SnLabelling, RecoversTheConjugatingBijection)
{
  for (std::size_t n : {3u, 4u}) {
    FiniteGroup S = make_symmetric(n);
    for (const auto &tau : Permutation::all(n)) {
      std::vector<Point> act(S.order() * n);
      for (Elem s = 0; s < S.order(); ++s) {
        Permutation c = tau.compose(Permutation::unrank(n, s)).compose(tau.inverse());
        for (Point a = 0; a < n; ++a)
          act[s * n + a] = c(a);
      }
      GSet A(S, n, act);
      auto label = sn_labelling(n, A);
      // The label of τ(i) is i.
      for (std::uint32_t i = 0; i < n; ++i)
        EXPECT_EQ(label[tau(i)], i);
      for (Elem s = 0; s < S.order(); ++s)
        for (Point a = 0; a < n; ++a)
          ASSERT_EQ(label[A.act(s, a)], Permutation::unrank(n, s)(static_cast<std::uint32_t>(label[a])));
    }
  }
  FiniteGroup S2 = make_symmetric(2);
  EXPECT_THROW(sn_labelling(2, GSet(S2, 2, {0, 1, 1, 0})), TooSmall);
  EXPECT_THROW(sn_labelling(3, trivial_action(make_symmetric(3), 3)), NotFaithful);
}

TEST(SnAction, ExistsExactlyOnTrivialCoverings)
{
  SnActionResult ok = sn_action_on_bundle(covering(3, {Permutation::identity(3)}));
  EXPECT_TRUE(ok.ok);
  ASSERT_TRUE(ok.action);
  EXPECT_EQ(ok.action->group().order(), 6u);

  FlatBundle cover = quotient_bundle(finite_winding_bundle(make_cyclic(2), 3));
  SnActionResult bad = sn_action_on_bundle(cover);
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.obstruction_loop, 0u);
  EXPECT_EQ(Permutation(bad.obstruction->table()).order(), 3u);

  SnActionResult second =
      sn_action_on_bundle(covering(4, {Permutation::identity(4), Permutation({1, 0, 2, 3})}));
  EXPECT_FALSE(second.ok);
  EXPECT_EQ(second.obstruction_loop, 1u);

  EXPECT_THROW(sn_action_on_bundle(covering(2, {Permutation({1, 0})})), TooSmall);
  EXPECT_THROW(sn_action_on_bundle(finite_winding_bundle(make_cyclic(2), 3)), DomainError);
}

TEST(Classification, TrivialGroup)
{
  CircleClassification c = classify_circle(make_trivial());
  ASSERT_EQ(c.classes.size(), 1u);
  EXPECT_EQ(c.classes[0].components, 1u);
}
