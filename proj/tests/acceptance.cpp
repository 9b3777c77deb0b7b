// One line per acceptance criterion; exit status is non-zero if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "spb/bundles.hpp"
#include "spb/cli/cli.hpp"
#include "spb/cli/verify.hpp"
#include "spb/transport.hpp"

using namespace spb;

namespace {

struct Outcome
{
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string &what)
  {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string &title, double limit_seconds,
               const std::function<void(Outcome &)> &body)
{
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception &e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds)
    o.require(false, "runtime over limit");
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s", secs);
  std::cout << (o.ok ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << timing;
  if (limit_seconds > 0)
    std::cout << ", limit " << limit_seconds << " s";
  std::cout << ")";
  if (!o.ok)
    std::cout << ": " << o.note;
  std::cout << "\n";
  if (!o.ok)
    ++failures;
}

std::string run_cli(const std::vector<std::string> &args, int &code)
{
  std::ostringstream out, err;
  std::istringstream in;
  code = io::run(args, out, err, in);
  return out.str();
}

std::multiset<std::size_t> component_counts(const CircleClassification &c)
{
  std::multiset<std::size_t> out;
  for (const auto &row : c.classes)
    out.insert(row.components);
  return out;
}

void suite_passes(Outcome &o, const std::string &name, const verify::SuiteOptions &opts)
{
  auto r = verify::run_suite(name, opts);
  o.require(r.checks() > 0, name + " ran no checks");
  for (const auto &f : r.fixtures)
    o.require(f.failures == 0, f.fixture + ": " + f.detail);
}

FlatBundle covering(std::size_t n, const std::vector<Permutation> &clutching)
{
  GSet fiber = trivial_action(make_trivial(), n);
  std::vector<GSetAut> maps;
  for (const auto &c : clutching)
    maps.emplace_back(fiber, c.images());
  return FlatBundle(fiber, maps);
}

} // namespace

int main()
{
  const FiniteGroup klein = make_direct_product(make_cyclic(2), make_cyclic(2));

  criterion(1, "Z3 over the circle: 2 automorphisms, 2 classes, components {3, 2}", 1.0, [&](Outcome &o) {
    int code = 0;
    std::string text = run_cli({"classify-circle", "z3"}, code);
    o.require(code == 0, "classify-circle exit status");
    o.require(text.find("automorphisms:     2 ") != std::string::npos, "automorphism count in report");
    o.require(text.find("conjugacy classes: 2") != std::string::npos, "class count in report");
    o.require(text.find("component counts:  {3, 2}") != std::string::npos, "component counts in report");
    CircleClassification c = classify_circle(make_cyclic(3));
    o.require(c.aut.elements.size() == 2, "|Aut(Z3)| = 2");
    o.require(c.classes.size() == 2, "2 isomorphism classes");
    o.require(component_counts(c) == std::multiset<std::size_t>{3, 2}, "components {3, 2}");
  });

  criterion(2, "Z2xZ2 over the circle: |Aut| = 6 = S3, 3 classes, components {4, 3, 2}", 1.0, [&](Outcome &o) {
    int code = 0;
    std::string text = run_cli({"classify-circle", "z2xz2"}, code);
    o.require(code == 0, "classify-circle exit status");
    o.require(text.find("6 (isomorphic to S3)") != std::string::npos, "Aut reported as S3");
    o.require(text.find("component counts:  {4, 3, 2}") != std::string::npos, "component counts in report");
    CircleClassification c = classify_circle(klein);
    o.require(c.aut.elements.size() == 6, "|Aut| = 6");
    o.require(find_isomorphism(c.aut.group, make_symmetric(3)).has_value(), "Aut ≅ S3");
    o.require(c.classes.size() == 3, "3 conjugacy classes");
    o.require(component_counts(c) == std::multiset<std::size_t>{4, 3, 2}, "components {4, 3, 2}");
  });

  criterion(3, "Fr(F) has |G|^n n! frames with a free transitive wreath action, |G| <= 4, n <= 3", 30.0,
            [&](Outcome &o) {
              auto groups = verify::fixture_groups(4);
              o.require(groups.size() == 5, "five groups of order <= 4");
              verify::SuiteOptions opts;
              opts.max_group = 4;
              opts.max_orbits = 3;
              suite_passes(o, "torsor", opts);
            });

  criterion(4, "I: G wr X -> Aut(G x X) is a bijective homomorphism with inverse; split exact sequence", 30.0,
            [&](Outcome &o) {
              verify::SuiteOptions opts;
              suite_passes(o, "wreath-iso", opts);
              suite_passes(o, "ses", opts);
            });

  criterion(5, "division rules (inverse, cancellation, scaling, invariance) on every free fixture", 10.0,
            [&](Outcome &o) { suite_passes(o, "division-rules", verify::SuiteOptions{}); });

  criterion(6, "alpha -> alpha! is a bijection of Hom-sets of size |G|^n n!, |G| <= 3, n <= 3", 30.0,
            [&](Outcome &o) {
              verify::SuiteOptions opts;
              opts.max_group = 3;
              opts.max_orbits = 3;
              suite_passes(o, "equivalence", opts);
            });

  criterion(7, "winding bundle (Z2, k=2): frame clutching (e, (1 2)) and 4 frame-bundle components", 0.0,
            [&](Outcome &o) {
              FlatBundle b = finite_winding_bundle(make_cyclic(2), 2);
              auto w = clutching_wreath(b, canonical_frame(b.fiber()));
              o.require(w.size() == 1 && w[0] == WreathElement{{0, 0}, Permutation({1, 0})},
                        "clutching relative to the canonical frame");
              FrameBundle fb = frame_bundle(b);
              o.require(fb.frames.size() == 8, "8 frames");
              // Orbits of f ↦ ψ∘f on the raw frame tuples.
              auto all = oracle::bases(b.fiber(), 2);
              std::set<std::vector<Point>> seen;
              std::size_t orbits = 0;
              for (const auto &f : all) {
                if (seen.count(f))
                  continue;
                ++orbits;
                auto t = f;
                do {
                  seen.insert(t);
                  for (auto &p : t)
                    p = b.clutching()[0](p);
                } while (!seen.count(t));
              }
              o.require(orbits == 4, "brute-force orbit count is 4");
              o.require(total_components(fb.bundle) == orbits, "frame-bundle components equal the oracle");
            });

  criterion(8, "quotient clutching = C_q(clutching) and fiber count of Q = |G| on every fixture", 0.0,
            [&](Outcome &o) {
              std::vector<FlatBundle> fixtures;
              std::mt19937_64 rng(verify::default_seed);
              for (const auto &G : verify::fixture_groups(4))
                for (std::size_t n = 1; n <= 3; ++n) {
                  fixtures.push_back(finite_winding_bundle(G, n));
                  for (const auto &F : verify::free_fixtures(G, n, rng)) {
                    auto auts = enumerate_automorphisms(F);
                    std::uniform_int_distribution<std::size_t> pick(0, auts.size() - 1);
                    fixtures.emplace_back(F, std::vector<GSetAut>{auts[pick(rng)], auts[pick(rng)]});
                  }
                }
              for (const auto &G : verify::fixture_groups(4))
                for (const auto &a : automorphisms(G))
                  fixtures.push_back(group_bundle_over_circle(a));
              for (const auto &b : fixtures) {
                FlatBundle q = quotient_bundle(b);
                for (std::size_t i = 0; i < b.loops(); ++i)
                  o.require(q.clutching()[i].table() == cq(b.clutching()[i]).images(),
                            "quotient clutching differs from C_q");
                o.require(map_fiber_count(quotient_map(b.fiber())) == b.fiber().group().order(),
                          "fiber count of Q differs from |G|");
              }
              o.require(fixtures.size() == 57, "expected 45 G-set bundles and 12 group bundles");
            });

  criterion(9, "S3/S4 labellings recover the conjugating bijection; S_n actions exist exactly on trivial covers",
            0.0, [&](Outcome &o) {
              suite_passes(o, "appendix-b", verify::SuiteOptions{});
              FlatBundle trivial = covering(3, {Permutation::identity(3)});
              o.require(sn_action_on_bundle(trivial).ok, "trivial 3-sheet cover");
              auto bad = sn_action_on_bundle(quotient_bundle(finite_winding_bundle(make_cyclic(2), 3)));
              o.require(!bad.ok && bad.obstruction_loop == 0, "connected 3-sheet cover is obstructed");
            });

  criterion(10, "U(1) transport: pushforward, frame holonomy, adjoint, division form, doubling", 30.0,
            [&](Outcome &o) {
              verify::SuiteOptions opts;
              opts.max_orbits = 3;
              suite_passes(o, "transport", opts);
              for (std::size_t k = 1; k <= 3; ++k) {
                U1FlatBundle b = u1_winding_bundle(k);
                o.require(pushforward(b, 2).generators() == b.generators(), "doubling fixes the winding model");
              }
            });

  std::cout << (failures ? "FAILED: " + std::to_string(failures) + " criteria\n" : "all criteria passed\n");
  return failures ? 1 : 0;
}
