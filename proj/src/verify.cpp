#include "spb/cli/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "spb/error.hpp"

namespace spb::verify {

void FixtureResult::expect(bool ok, const std::string &what)
{
  ++checks;
  if (!ok && failures++ == 0)
    detail = "failed: " + what;
}

std::size_t SuiteResult::checks() const
{
  std::size_t n = 0;
  for (const auto &f : fixtures)
    n += f.checks;
  return n;
}

std::size_t SuiteResult::failures() const
{
  std::size_t n = 0;
  for (const auto &f : fixtures)
    n += f.failures;
  return n;
}

std::vector<FiniteGroup> fixture_groups(std::size_t max_order)
{
  std::vector<FiniteGroup> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    out.push_back(make_cyclic(n));
    if (n == 4)
      out.push_back(make_direct_product(make_cyclic(2), make_cyclic(2)));
    if (n == 6)
      out.push_back(make_symmetric(3));
  }
  return out;
}

GSet relabel(const GSet &F, const std::vector<Point> &perm)
{
  const std::size_t n = F.size();
  std::vector<Point> act(F.group().order() * n);
  for (Elem g = 0; g < F.group().order(); ++g)
    for (Point p = 0; p < n; ++p)
      act[g * n + perm[p]] = perm[F.act(g, p)];
  return GSet(F.group(), n, std::move(act));
}

std::vector<GSet> free_fixtures(const FiniteGroup &G, std::size_t n, std::mt19937_64 &rng)
{
  GSet S = standard_semitorsor(G, n);
  std::vector<Point> perm(S.size());
  std::iota(perm.begin(), perm.end(), Point{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return {S, relabel(S, perm)};
}

Angle random_angle(std::mt19937_64 &rng, std::int64_t max_denominator)
{
  std::uniform_int_distribution<std::int64_t> den(1, max_denominator);
  std::int64_t q = den(rng);
  std::uniform_int_distribution<std::int64_t> num(0, q - 1);
  return Angle(num(rng), q);
}

U1Wreath random_u1wreath(std::size_t k, std::mt19937_64 &rng)
{
  U1Wreath w{{}, Permutation::identity(k)};
  for (std::size_t x = 0; x < k; ++x)
    w.angles.push_back(random_angle(rng));
  std::vector<std::uint32_t> images(k);
  std::iota(images.begin(), images.end(), 0u);
  std::shuffle(images.begin(), images.end(), rng);
  w.sigma = Permutation(std::move(images));
  return w;
}

std::vector<U1FlatBundle> u1_fixtures(std::size_t max_k, std::mt19937_64 &rng)
{
  std::vector<U1FlatBundle> out;
  for (std::size_t k = 1; k <= max_k; ++k) {
    out.push_back(u1_winding_bundle(k));
    for (std::size_t m = 1; m <= 2; ++m) {
      std::vector<U1Wreath> gens;
      for (std::size_t i = 0; i < m; ++i)
        gens.push_back(random_u1wreath(k, rng));
      out.emplace_back(k, std::move(gens));
    }
  }
  return out;
}

std::vector<LoopWord> all_words(std::size_t m, std::size_t max_length)
{
  std::vector<LoopWord> out{LoopWord{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (int l = 1; l <= static_cast<int>(m); ++l)
        for (int s : {l, -l}) {
          LoopWord w = out[i];
          w.letters.push_back(s);
          out.push_back(std::move(w));
        }
    begin = end;
  }
  return out;
}

namespace {

std::string fixture_name(const GSet &F, std::size_t index)
{
  return F.group().label() + " n=" + std::to_string(F.orbits().orbit_count) +
         (index == 0 ? " standard" : " relabelled");
}

struct Plan
{
  std::vector<FiniteGroup> groups;
  std::vector<std::size_t> orbit_counts;
};

Plan plan_of(const SuiteOptions &o)
{
  Plan p;
  if (o.group)
    p.groups = {*o.group};
  else
    p.groups = fixture_groups(o.max_group);
  if (o.orbits)
    p.orbit_counts = {*o.orbits};
  else
    for (std::size_t n = 1; n <= o.max_orbits; ++n)
      p.orbit_counts.push_back(n);
  return p;
}

template <typename Body>
void for_each_free_fixture(const SuiteOptions &o, SuiteResult &r, Body body)
{
  std::mt19937_64 rng(o.seed);
  Plan p = plan_of(o);
  for (const auto &G : p.groups)
    for (std::size_t n : p.orbit_counts) {
      auto fixtures = free_fixtures(G, n, rng);
      for (std::size_t i = 0; i < fixtures.size(); ++i) {
        FixtureResult fr{fixture_name(fixtures[i], i)};
        try {
          body(fixtures[i], fr, rng);
        } catch (const Error &e) {
          fr.expect(false, e.what());
        }
        r.fixtures.push_back(std::move(fr));
      }
    }
}

/// Whether (g, x) ↦ g·t(x) is a bijection G×I_n -> F, tested directly.
bool associated_map_bijective(const GSet &F, const std::vector<Point> &t)
{
  std::vector<bool> hit(F.size(), false);
  std::size_t count = 0;
  for (Point f : t)
    for (Elem g = 0; g < F.group().order(); ++g) {
      Point p = F.act(g, f);
      if (hit[p])
        return false;
      hit[p] = true;
      ++count;
    }
  return count == F.size();
}

void torsor_suite(const SuiteOptions &o, SuiteResult &r)
{
  for_each_free_fixture(o, r, [](const GSet &F, FixtureResult &fr, std::mt19937_64 &) {
    const FiniteGroup &G = F.group();
    const std::size_t n = F.orbits().orbit_count;
    FrameSpace fs = enumerate_frames(F);
    const std::size_t expected = saturating_pow(G.order(), n) * factorial(n);
    fr.expect(fs.size() == expected, "|Fr(F)| = |G|^n n!");

    std::size_t bases = 0;
    std::vector<Point> t(n, 0);
    const std::size_t total = saturating_pow(F.size(), n);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t x = n; x-- > 0;) {
        t[x] = static_cast<Point>(c % F.size());
        c /= F.size();
      }
      bool direct = associated_map_bijective(F, t);
      bases += direct ? 1 : 0;
      fr.expect(direct == is_basis(F, t), "basis criterion agrees with the associated map");
    }
    fr.expect(bases == fs.size(), "brute-force basis count");

    WreathGroup wg(G, n);
    GSet torsor = frame_torsor(fs, wg);
    fr.expect(torsor.is_free(), "wreath action on frames is free");
    fr.expect(is_transitive(torsor), "wreath action on frames is transitive");
    if (!fr.failures)
      fr.detail = std::to_string(fs.size()) + " frames";
  });
}

void functor_suite(const SuiteOptions &o, SuiteResult &r)
{
  for_each_free_fixture(o, r, [](const GSet &F, FixtureResult &fr, std::mt19937_64 &rng) {
    const std::size_t n = F.orbits().orbit_count;
    GSet F2 = free_fixtures(F.group(), n, rng)[1];
    FrameSpace fs = enumerate_frames(F);

    auto id = frame_functor_map(EquivariantMap::identity(F), Verification::on);
    bool identity_ok = true;
    for (std::size_t i = 0; i < fs.size(); ++i)
      identity_ok = identity_ok && id.image[i] == i;
    fr.expect(identity_ok, "id! = id");

    // A sample of equivariant maps F -> F2 and F2 -> F, each fixed by the
    // images of orbit representatives.
    auto sample = [&](const GSet &a, const GSet &b) {
      std::vector<EquivariantMap> maps;
      std::uniform_int_distribution<Point> pick(0, static_cast<Point>(b.size() - 1));
      for (int i = 0; i < 12; ++i) {
        std::vector<Point> images(n);
        for (auto &p : images)
          p = pick(rng);
        maps.push_back(extend_from_representatives(a, b, images));
      }
      return maps;
    };
    auto forward = sample(F, F2);
    auto backward = sample(F2, F);

    std::vector<std::optional<FrameMap>> lifted;
    for (const auto &a : forward) {
      fr.expect(check_equivariant(a), "sampled map is equivariant");
      if (is_orbit_bijection(a)) {
        lifted.push_back(frame_functor_map(a, Verification::on));
        fr.expect(check_frame_equivariance(a, *lifted.back()), "α! is ξ!-equivariant");
      } else {
        lifted.emplace_back();
        bool threw = false;
        try {
          frame_functor_map(a, Verification::off);
        } catch (const OrbitObstruction &) {
          threw = true;
        }
        fr.expect(threw, "non-bijective orbit map has no lift");
      }
    }
    for (std::size_t i = 0; i < forward.size(); ++i) {
      if (!lifted[i])
        continue;
      for (const auto &b : backward) {
        if (!is_orbit_bijection(b))
          continue;
        auto bl = frame_functor_map(b, Verification::off);
        auto composite = frame_functor_map(compose_equivariant(b, forward[i]), Verification::off);
        bool same = true;
        for (std::size_t k = 0; k < fs.size() && same; ++k)
          same = composite.image[k] == bl.image[lifted[i]->image[k]];
        fr.expect(same, "(β∘α)! = β!∘α!");
      }
    }
  });
}

void ses_suite(const SuiteOptions &o, SuiteResult &r)
{
  for_each_free_fixture(o, r, [](const GSet &F, FixtureResult &fr, std::mt19937_64 &) {
    SesReport s = ses_report(F);
    const std::size_t n = F.orbits().orbit_count;
    fr.expect(s.kernel_is_autq, "ker C_q = Aut(q)");
    fr.expect(s.cq_homomorphism, "C_q is a homomorphism");
    fr.expect(s.cq_surjective, "C_q is onto");
    fr.expect(s.section_splits, "the frame section splits C_q");
    fr.expect(s.matches_wreath_route, "brute-force Aut(F) equals the wreath route");
    fr.expect(s.autq_is_product, "|Aut(q)| = |G|^n");
    fr.expect(s.aut_order == saturating_pow(F.group().order(), n) * factorial(n),
              "|Aut(F)| = |G|^n n!");
    if (!fr.failures)
      fr.detail = "|Aut(F)| = " + std::to_string(s.aut_order);
  });
}

void wreath_iso_suite(const SuiteOptions &o, SuiteResult &r)
{
  Plan p = plan_of(o);
  for (const auto &G : p.groups)
    for (std::size_t n : p.orbit_counts) {
      FixtureResult fr{G.label() + " n=" + std::to_string(n)};
      try {
        WreathGroup wg(G, n);
        const auto &els = wg.elements();
        std::vector<GSetAut> images;
        for (const auto &w : els)
          images.push_back(wreath_to_aut(w, n, G));
        std::size_t pairs = 0;
        for (std::size_t i = 0; i < els.size(); ++i)
          for (std::size_t j = 0; j < els.size(); ++j) {
            ++pairs;
            fr.expect(wreath_to_aut(wreath_mul(G, els[i], els[j]), n, G) ==
                          images[i].compose(images[j]),
                      "I(w₁w₂) = I(w₁)∘I(w₂)");
          }
        std::set<std::vector<Point>> distinct;
        for (std::size_t i = 0; i < els.size(); ++i) {
          distinct.insert(images[i].table());
          fr.expect(aut_to_wreath(images[i]) == els[i], "aut_to_wreath∘I = id");
        }
        fr.expect(distinct.size() == els.size(), "I is injective");
        auto auts = enumerate_automorphisms(standard_semitorsor(G, n));
        fr.expect(auts.size() == els.size(), "I is onto");
        for (const auto &psi : auts)
          fr.expect(wreath_to_aut(aut_to_wreath(psi), n, G) == psi, "I∘aut_to_wreath = id");
        SesReport s = ses_report(standard_semitorsor(G, n));
        fr.expect(s.ok(), "exact sequence with right-splitting section");
        if (!fr.failures)
          fr.detail = std::to_string(pairs) + " homomorphism pairs";
      } catch (const Error &e) {
        fr.expect(false, e.what());
      }
      r.fixtures.push_back(std::move(fr));
    }
}

void division_suite(const SuiteOptions &o, SuiteResult &r)
{
  for_each_free_fixture(o, r, [](const GSet &F, FixtureResult &fr, std::mt19937_64 &) {
    const FiniteGroup &G = F.group();
    const auto &q = F.orbits().orbit_of;
    auto auts = enumerate_automorphisms(F);
    for (Point f1 = 0; f1 < F.size(); ++f1)
      for (Point f2 = 0; f2 < F.size(); ++f2) {
        if (q[f1] != q[f2])
          continue;
        const Elem d = divide(F, f2, f1);
        fr.expect(G.inv(d) == divide(F, f1, f2), "inverse rule");
        for (Point f = 0; f < F.size(); ++f)
          if (q[f] == q[f1])
            fr.expect(d == G.mul(divide(F, f2, f), divide(F, f, f1)), "cancellation rule");
        for (Elem g1 = 0; g1 < G.order(); ++g1)
          for (Elem g2 = 0; g2 < G.order(); ++g2)
            fr.expect(divide(F, F.act(g2, f2), F.act(g1, f1)) == G.mul(G.mul(g2, d), G.inv(g1)),
                      "scaling rule");
        for (const auto &psi : auts)
          fr.expect(divide(F, psi(f2), psi(f1)) == d, "invariance rule");
      }
    bool threw = false;
    if (F.orbits().orbit_count > 1) {
      try {
        divide(F, F.orbits().representatives[1], F.orbits().representatives[0]);
      } catch (const NoQuotient &) {
        threw = true;
      }
      fr.expect(threw, "no division across orbits");
    }
  });
}

void equivalence_suite(const SuiteOptions &o, SuiteResult &r)
{
  for_each_free_fixture(o, r, [](const GSet &F, FixtureResult &fr, std::mt19937_64 &) {
    const std::size_t n = F.orbits().orbit_count;
    const std::size_t expected = saturating_pow(F.group().order(), n) * factorial(n);
    GSet S = standard_semitorsor(F.group(), n);
    for (const GSet *target : std::array<const GSet *, 2>{&F, &S}) {
      EquivalenceReport e = check_equivalence(F, *target);
      fr.expect(e.semitorsor_homs == expected, "|Hom(F, F2)| = |G|^n n!");
      fr.expect(e.torsor_homs == expected, "|Hom(Fr F, Fr F2)| = |G|^n n!");
      fr.expect(e.bijective, "α ↦ α! is a bijection");
    }
    if (!fr.failures)
      fr.detail = std::to_string(expected) + " maps each side";
  });
}

GSet conjugated_natural_action(std::size_t n, const Permutation &tau)
{
  FiniteGroup S = make_symmetric(n);
  std::vector<Point> act(S.order() * n);
  const Permutation tau_inv = tau.inverse();
  for (Elem s = 0; s < S.order(); ++s) {
    Permutation c = tau.compose(Permutation::unrank(n, s)).compose(tau_inv);
    for (Point a = 0; a < n; ++a)
      act[s * n + a] = c(a);
  }
  return GSet(std::move(S), n, std::move(act));
}

FlatBundle covering(std::size_t n, const std::vector<Permutation> &clutching)
{
  GSet fiber = trivial_action(make_trivial(), n);
  std::vector<GSetAut> maps;
  for (const auto &c : clutching)
    maps.emplace_back(fiber, c.images());
  return FlatBundle(fiber, std::move(maps));
}

void sn_action_suite(const SuiteOptions &o, SuiteResult &r)
{
  std::mt19937_64 rng(o.seed);
  for (std::size_t n : {3u, 4u}) {
    FixtureResult fr{"S" + std::to_string(n) + " labelling"};
    try {
      for (const auto &tau : Permutation::all(n)) {
        GSet action = conjugated_natural_action(n, tau);
        auto label = sn_labelling(n, action);
        const Permutation tau_inv = tau.inverse();
        fr.expect(std::equal(label.begin(), label.end(), tau_inv.images().begin()),
                  "labelling is the conjugating bijection");
        for (Elem s = 0; s < action.group().order(); ++s) {
          Permutation sigma = Permutation::unrank(n, s);
          for (Point a = 0; a < n; ++a)
            fr.expect(label[action.act(s, a)] == sigma(static_cast<std::uint32_t>(label[a])),
                      "labelling is equivariant");
        }
      }
      bool threw = false;
      try {
        sn_labelling(n, trivial_action(make_symmetric(n), n));
      } catch (const NotFaithful &) {
        threw = true;
      }
      fr.expect(threw, "trivial action is rejected as non-faithful");
    } catch (const Error &e) {
      fr.expect(false, e.what());
    }
    r.fixtures.push_back(std::move(fr));

    FixtureResult fb{"S" + std::to_string(n) + " on coverings"};
    try {
      auto perms = Permutation::all(n);
      std::vector<std::vector<Permutation>> cases;
      for (const auto &c : perms)
        cases.push_back({c});
      std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
      for (int i = 0; i < 20; ++i)
        cases.push_back({perms[pick(rng) % 2 == 0 ? 0 : pick(rng)], perms[pick(rng)]});
      for (const auto &clutching : cases) {
        FlatBundle b = covering(n, clutching);
        SnActionResult s = sn_action_on_bundle(b);
        fb.expect(s.ok == is_trivializable(b), "action exists exactly on trivial coverings");
        if (!s.ok) {
          std::size_t first = 0;
          while (clutching[first].is_identity())
            ++first;
          fb.expect(s.obstruction_loop == first, "obstruction names the first non-trivial loop");
        }
        // Independent oracle: some conjugate of the natural action commutes
        // with every clutching map exactly when all of them are trivial.
        bool commuting_exists = false;
        for (const auto &tau : perms) {
          GSet action = conjugated_natural_action(n, tau);
          bool commutes = true;
          for (Elem s2 = 0; s2 < action.group().order() && commutes; ++s2)
            for (const auto &c : clutching)
              for (Point a = 0; a < n && commutes; ++a)
                commutes = c(action.act(s2, a)) == action.act(s2, c(a));
          commuting_exists = commuting_exists || commutes;
        }
        fb.expect(commuting_exists == s.ok, "brute-force commuting action agrees");
      }
    } catch (const Error &e) {
      fb.expect(false, e.what());
    }
    r.fixtures.push_back(std::move(fb));
  }
}

void transport_suite(const SuiteOptions &o, SuiteResult &r)
{
  std::mt19937_64 rng(o.seed);
  const std::size_t max_k = std::min<std::size_t>(o.max_orbits, 3);
  auto bundles = u1_fixtures(max_k, rng);
  for (std::size_t bi = 0; bi < bundles.size(); ++bi) {
    const U1FlatBundle &b = bundles[bi];
    FixtureResult fr{"U(1) k=" + std::to_string(b.k()) + " m=" + std::to_string(b.loops()) +
                     (bi % 3 == 0 ? " winding" : " random")};
    try {
      auto words = all_words(b.loops(), 6);
      for (std::int64_t q : {-1, 2, 3}) {
        U1FlatBundle pushed = pushforward(b, q);
        for (const auto &w : words)
          fr.expect(holonomy_u1(pushed, w) == push_wreath(holonomy_u1(b, w), q),
                    "hol(pushforward) = ξ!∘hol");
      }
      for (const auto &w : all_words(b.loops(), 3))
        for (int i = 0; i < 8; ++i) {
          U1Wreath m = random_u1wreath(b.k(), rng);
          U1Wreath v = random_u1wreath(b.k(), rng);
          U1Frame f = frame_of(m);
          U1Frame moved = transport_frame(b, w, f);
          fr.expect(moved == frame_of(u1wreath_mul(frame_holonomy(b, w), m)),
                    "frame holonomy equals entrywise holonomy");
          fr.expect(transport_frame(b, w, act_frame(v, f)) == act_frame(v, moved),
                    "frame transport commutes with the structure action");
        }
      for (int i = 0; i < 64; ++i) {
        U1Wreath w1 = random_u1wreath(b.k(), rng), w2 = random_u1wreath(b.k(), rng);
        AlgebraVector v;
        for (std::size_t x = 0; x < b.k(); ++x)
          v.entries.push_back(random_angle(rng).value() - Rational(1, 2));
        fr.expect(adjoint(u1wreath_mul(w1, w2), v) == adjoint(w1, adjoint(w2, v)),
                  "Ad is a homomorphism");
      }
      for (std::int64_t qd = 1; qd <= 12; ++qd)
        for (std::int64_t p = -qd; p <= qd; ++p) {
          const Rational rate(p, qd), step(1, 100);
          auto path = exponential_path(FiberPoint{random_angle(rng), b.k() - 1}, rate, step, 7);
          auto rep = division_form_check(path, step);
          fr.expect(rep.uniform_rate && *rep.uniform_rate == rate, "division form returns the rate");
        }
    } catch (const Error &e) {
      fr.expect(false, e.what());
    }
    r.fixtures.push_back(std::move(fr));
  }
  FixtureResult fw{"U(1) winding doubling"};
  for (std::size_t k = 1; k <= 3; ++k) {
    U1FlatBundle b = u1_winding_bundle(k);
    fw.expect(pushforward(b, 2).generators() == b.generators(), "ω₂ = ω₁ for q = 2");
  }
  r.fixtures.push_back(std::move(fw));
}

using SuiteFn = void (*)(const SuiteOptions &, SuiteResult &);

const std::vector<std::pair<std::string, SuiteFn>> &suites()
{
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"torsor", torsor_suite},
      {"functor-laws", functor_suite},
      {"ses", ses_suite},
      {"wreath-iso", wreath_iso_suite},
      {"division-rules", division_suite},
      {"equivalence", equivalence_suite},
      {"appendix-b", sn_action_suite},
      {"transport", transport_suite},
  };
  return table;
}

} // namespace

const std::vector<std::string> &suite_names()
{
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto &[name, fn] : suites())
      v.push_back(name);
    return v;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions &options)
{
  for (const auto &[n, fn] : suites())
    if (n == name) {
      SuiteResult r{n, {}};
      fn(options, r);
      return r;
    }
  throw SchemaError("unknown suite '" + std::string(name) + "'");
}

} // namespace spb::verify
