#include "spb/cli/cli.hpp"

#include <algorithm>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "spb/cli/report.hpp"
#include "spb/cli/spec_io.hpp"
#include "spb/cli/verify.hpp"
#include "spb/error.hpp"

namespace spb::io {

namespace {

std::string show(const GSetAut &psi) { return bracket_numbers(psi.table()); }

std::string show(const WreathElement &w)
{
  return "(" + bracket_numbers(w.g) + ", " + w.sigma.to_cycle_string() + ")";
}

std::string show(const U1Wreath &w)
{
  std::vector<std::string> a;
  for (const auto &x : w.angles)
    a.push_back(x.to_string());
  return "(" + bracket(a) + ", " + w.sigma.to_cycle_string() + ")";
}

std::string show(const FiberPoint &p) { return p.angle.to_string() + ":" + std::to_string(p.slot); }

std::string show(const LoopWord &w)
{
  if (w.letters.empty())
    return "(empty)";
  std::vector<std::string> s;
  for (int l : w.letters)
    s.push_back(std::to_string(l));
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? " " : "") + s[i];
  return out;
}

std::string mode_name(BundleMode m) { return m == BundleMode::group ? "group" : "gspace"; }

std::string aut_structure(const AutGroup &aut)
{
  const FiniteGroup &A = aut.group;
  if (find_isomorphism(A, make_cyclic(A.order())))
    return "cyclic of order " + std::to_string(A.order());
  for (std::size_t k = 3; k <= 5; ++k)
    if (factorial(k) == A.order() && find_isomorphism(A, make_symmetric(k)))
      return "isomorphic to S" + std::to_string(k);
  return A.is_abelian() ? "abelian" : "non-abelian";
}

void describe_fiber(Report &r, const FlatBundle &b)
{
  r.add("mode", mode_name(b.mode()));
  if (b.model_group())
    r.add("fiber", b.model_group()->label() + " (as a set, " + std::to_string(b.fiber().size()) +
                       " points)");
  else
    r.add("fiber", std::to_string(b.fiber().size()) + " points over " + b.fiber().group().label() +
                       ", " + std::to_string(b.fiber().orbits().orbit_count) + " orbits");
  r.add("loops", std::to_string(b.loops()));
}

Report cmd_classify(const FiniteGroup &G)
{
  Report r;
  r.command = "classify-circle " + G.label();
  CircleClassification c = classify_circle(G);
  r.add("group", G.label() + " (order " + std::to_string(G.order()) + ")");
  r.add("automorphisms", std::to_string(c.aut.elements.size()) + " (" + aut_structure(c.aut) + ")");
  r.add("conjugacy classes", std::to_string(c.classes.size()));
  std::vector<std::string> counts;
  for (const auto &row : c.classes)
    counts.push_back(std::to_string(row.components));
  std::string joined;
  for (std::size_t i = 0; i < counts.size(); ++i)
    joined += (i ? ", " : "") + counts[i];
  r.add("component counts", "{" + joined + "}");
  Table t{"bundles over the circle, one per conjugacy class of Aut(G)",
          {"class", "size", "automorphism", "components", "unit circle"},
          {}};
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    const auto &row = c.classes[i];
    t.rows.push_back({std::to_string(i + 1), std::to_string(row.class_size),
                      bracket_numbers(row.representative.image()), std::to_string(row.components),
                      row.unit_component_is_circle ? "yes" : "no"});
  }
  r.tables.push_back(std::move(t));
  return r;
}

Report cmd_components(const FlatBundle &b)
{
  Report r;
  r.command = "components";
  describe_fiber(r, b);
  OrbitPartition p = component_partition(b);
  r.add("components", std::to_string(p.orbit_count));
  r.add("trivializable", is_trivializable(b) ? "yes" : "no");
  Table t{"components of the total space", {"component", "fiber points"}, {}};
  std::vector<std::vector<Point>> members(p.orbit_count);
  for (Point x = 0; x < b.fiber().size(); ++x)
    members[p.orbit_of[x]].push_back(x);
  for (std::size_t i = 0; i < p.orbit_count; ++i)
    t.rows.push_back({std::to_string(i + 1), bracket_numbers(members[i])});
  r.tables.push_back(std::move(t));
  return r;
}

Report cmd_frame_bundle(const FlatBundle &b)
{
  Report r;
  r.command = "frame-bundle";
  describe_fiber(r, b);
  FrameBundle fb = frame_bundle(b);
  r.add("frames", std::to_string(fb.frames.size()));
  r.add("structure group", fb.wreath.group().label() + " (order " +
                               std::to_string(fb.wreath.group().order()) + ")");
  r.add("components", std::to_string(total_components(fb.bundle)));
  r.add("trivializable", is_trivializable(fb.bundle) ? "yes" : "no");
  Frame reference = canonical_frame(b.fiber());
  r.add("reference frame", bracket_numbers(reference.entries));
  Table t{"clutching relative to the reference frame", {"loop", "wreath element (g, sigma)"}, {}};
  auto ws = clutching_wreath(b, reference);
  for (std::size_t i = 0; i < ws.size(); ++i)
    t.rows.push_back({std::to_string(i + 1), show(ws[i])});
  r.tables.push_back(std::move(t));
  return r;
}

Report cmd_holonomy(const FlatBundle &b, const LoopWord &w)
{
  Report r;
  r.command = "holonomy";
  describe_fiber(r, b);
  r.add("word", show(w));
  r.add("order", "first letter acts first");
  GSetAut h = holonomy(b, w);
  r.add("holonomy", show(h));
  r.add("identity", h.is_identity() ? "yes" : "no");
  r.add("orbit permutation", cq(h).to_cycle_string());
  const GSet &F = b.fiber();
  const std::size_t n = F.orbits().orbit_count;
  if (b.mode() == BundleMode::gspace && F == standard_semitorsor(F.group(), n))
    r.add("wreath element", show(aut_to_wreath(h)));
  return r;
}

Report cmd_sn_action(const FlatBundle &b)
{
  Report r;
  r.command = "sn-action";
  describe_fiber(r, b);
  SnActionResult s = sn_action_on_bundle(b);
  const std::size_t n = b.fiber().size();
  if (s.ok) {
    r.add("result", "faithful fiber-preserving S" + std::to_string(n) +
                        " action exists (natural action on every fiber)");
  } else {
    r.add("result", "no faithful fiber-preserving S" + std::to_string(n) + " action");
    r.add("obstruction loop", std::to_string(s.obstruction_loop + 1));
    r.add("obstruction clutching", Permutation(s.obstruction->table()).to_cycle_string());
    r.exit_code = 1;
  }
  return r;
}

Report cmd_decompose(const FlatBundle &b)
{
  Report r;
  r.command = "decompose";
  describe_fiber(r, b);
  FlatBundle cover = quotient_bundle(b);
  const GSet &F = b.fiber();
  r.add("covering sheets", std::to_string(cover.fiber().size()));
  r.add("covering components", std::to_string(total_components(cover)));
  r.add("principal structure group", F.group().label());
  r.add("fiber count of F -> F/G", std::to_string(map_fiber_count(quotient_map(F))));
  bool coherent = true;
  for (std::size_t i = 0; i < b.loops(); ++i)
    coherent = coherent && cq(b.clutching()[i]).images() == cover.clutching()[i].table();
  r.add("covering clutching = C_q(clutching)", coherent ? "yes" : "no");
  Table t{"covering clutching", {"loop", "sheet permutation"}, {}};
  for (std::size_t i = 0; i < cover.loops(); ++i)
    t.rows.push_back(
        {std::to_string(i + 1), Permutation(cover.clutching()[i].table()).to_cycle_string()});
  r.tables.push_back(std::move(t));
  if (!coherent)
    r.exit_code = 1;
  return r;
}

void describe_u1(Report &r, const U1FlatBundle &b)
{
  r.add("sheets", std::to_string(b.k()));
  r.add("loops", std::to_string(b.loops()));
}

Report cmd_u1_holonomy(const U1FlatBundle &b, const LoopWord &w)
{
  Report r;
  r.command = "u1-holonomy";
  describe_u1(r, b);
  r.add("word", show(w));
  r.add("order", "first letter acts first");
  U1Wreath h = holonomy_u1(b, w);
  r.add("holonomy", show(h));
  r.add("frame holonomy", show(frame_holonomy(b, w)));
  r.add("canonical frame after transport", [&] {
    std::vector<std::string> pts;
    for (const auto &p : transport_frame(b, w, frame_of(u1wreath_identity(b.k()))).points)
      pts.push_back(show(p));
    return bracket(pts);
  }());
  return r;
}

Report cmd_u1_transport(const U1FlatBundle &b, const LoopWord &w, const FiberPoint &start)
{
  Report r;
  r.command = "u1-transport";
  describe_u1(r, b);
  r.add("word", show(w));
  r.add("start", show(start));
  r.add("end", show(transport(b, w, start)));
  return r;
}

Report cmd_pushforward(const U1FlatBundle &b, long long q)
{
  Report r;
  r.command = "pushforward";
  describe_u1(r, b);
  r.add("power", std::to_string(q));
  U1FlatBundle p = pushforward(b, q);
  r.add("unchanged", p.generators() == b.generators() ? "yes" : "no");
  Table t{"generators", {"loop", "original", "pushed forward"}, {}};
  for (std::size_t i = 0; i < b.loops(); ++i)
    t.rows.push_back({std::to_string(i + 1), show(b.generators()[i]), show(p.generators()[i])});
  r.tables.push_back(std::move(t));
  return r;
}

Report cmd_division(const U1FlatBundle &b, const std::vector<FiberPoint> &path, const Rational &step)
{
  Report r;
  r.command = "division-check";
  describe_u1(r, b);
  for (const auto &p : path)
    if (p.slot >= b.k())
      throw DomainError("path sheet out of range");
  DivisionReport d = division_form_check(path, step);
  r.add("sheet", std::to_string(d.slot));
  r.add("step", to_string(step));
  r.add("uniform rate", d.uniform_rate ? to_string(*d.uniform_rate) : "none");
  Table t{"forward differences", {"interval", "rate"}, {}};
  for (std::size_t i = 0; i < d.rates.size(); ++i)
    t.rows.push_back({std::to_string(i), to_string(d.rates[i])});
  r.tables.push_back(std::move(t));
  return r;
}

Report cmd_verify(const std::string &suite, const verify::SuiteOptions &o)
{
  Report r;
  r.command = "verify " + suite;
  verify::SuiteResult s = verify::run_suite(suite, o);
  r.add("seed", std::to_string(o.seed));
  r.add("checks", std::to_string(s.checks()));
  r.add("failures", std::to_string(s.failures()));
  Table t{"fixtures", {"fixture", "checks", "status", "detail"}, {}};
  for (const auto &f : s.fixtures) {
    t.rows.push_back({f.fixture, std::to_string(f.checks), f.failures ? "FAIL" : "pass", f.detail});
    (f.failures ? r.failed : r.passed) += 1;
  }
  r.tables.push_back(std::move(t));
  r.exit_code = s.ok() ? 0 : 1;
  return r;
}

constexpr const char *kWordHelp =
    "Loop word: signed 1-based loop indices separated by commas or spaces, e.g. \"1,1,-2\"; "
    "the first letter is traversed first and acts first.";

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, std::istream &in)
{
  CLI::App app{"Flat semi-principal bundles, frames and wreath products over finite groups.",
               "spbundle"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string source;
  std::string word_text;
  std::string start_text;
  std::string path_text;
  std::string step_text = "1/100";
  long long power = 1;
  std::string suite;
  verify::SuiteOptions opts;
  std::string group_text;
  std::size_t orbits = 0;

  auto *classify = app.add_subcommand("classify-circle", "Bundles over the circle with a group fiber");
  classify->add_option("--group,group", source, "Group spec (name, JSON, file or -)")->required();

  const char *bundle_help = "Bundle spec (JSON, file or -)";
  auto *components = app.add_subcommand("components", "Connected components of a bundle");
  components->add_option("bundle", source, bundle_help)->required();
  auto *frames = app.add_subcommand("frame-bundle", "Frame bundle and its wreath clutching");
  frames->add_option("bundle", source, bundle_help)->required();
  auto *hol = app.add_subcommand("holonomy", std::string("Holonomy of a loop word. ") + kWordHelp);
  hol->add_option("bundle", source, bundle_help)->required();
  hol->add_option("--word", word_text, "Loop word");
  auto *sn = app.add_subcommand("sn-action", "Faithful fiber-preserving S_n action on a covering");
  sn->add_option("bundle", source, bundle_help)->required();
  auto *decompose = app.add_subcommand("decompose", "Covering plus principal part");
  decompose->add_option("bundle", source, bundle_help)->required();

  const char *u1_help = "U(1) bundle spec (JSON, file or -)";
  auto *u1hol = app.add_subcommand("u1-holonomy", std::string("U(1) holonomy. ") + kWordHelp);
  u1hol->add_option("bundle", source, u1_help)->required();
  u1hol->add_option("--word", word_text, "Loop word");
  auto *u1tr = app.add_subcommand("u1-transport", "Parallel transport of a fiber point");
  u1tr->add_option("bundle", source, u1_help)->required();
  u1tr->add_option("--word", word_text, "Loop word");
  u1tr->add_option("--start", start_text, "Start point angle:sheet, e.g. 1/4:0")->required();
  auto *push = app.add_subcommand("pushforward", "Pushforward along z -> z^q");
  push->add_option("bundle", source, u1_help)->required();
  push->add_option("--power", power, "Exponent q")->required();
  auto *division = app.add_subcommand("division-check", "Discrete division-form evaluation");
  division->add_option("bundle", source, u1_help)->required();
  division->add_option("--path", path_text, "Samples angle:sheet, comma separated")->required();
  division->add_option("--step", step_text, "Sampling step (rational)");

  auto *ver = app.add_subcommand("verify", "Run an exhaustive verification suite");
  ver->add_option("suite", suite, "Suite name")->required();
  ver->add_option("--max-group", opts.max_group, "Largest group order");
  ver->add_option("--max-orbits", opts.max_orbits, "Largest orbit count");
  ver->add_option("--group", group_text, "Restrict to one group spec");
  ver->add_option("--orbits", orbits, "Restrict to one orbit count");
  ver->add_option("--seed", opts.seed, "Seed for sampled fixtures");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "spbundle: " << e.what() << "\n";
    return 2;
  }

  try {
    Report r;
    auto bundle = [&] { return parse_bundle(load_document(source, in)); };
    auto u1 = [&] { return parse_u1_bundle(load_document(source, in)); };
    if (classify->parsed()) {
      r = cmd_classify(parse_group(load_document(source, in)));
    } else if (components->parsed()) {
      r = cmd_components(bundle());
    } else if (frames->parsed()) {
      r = cmd_frame_bundle(bundle());
    } else if (hol->parsed()) {
      r = cmd_holonomy(bundle(), parse_word(word_text));
    } else if (sn->parsed()) {
      r = cmd_sn_action(bundle());
    } else if (decompose->parsed()) {
      r = cmd_decompose(bundle());
    } else if (u1hol->parsed()) {
      r = cmd_u1_holonomy(u1(), parse_word(word_text));
    } else if (u1tr->parsed()) {
      r = cmd_u1_transport(u1(), parse_word(word_text), parse_fiber_point(start_text));
    } else if (push->parsed()) {
      r = cmd_pushforward(u1(), power);
    } else if (division->parsed()) {
      r = cmd_division(u1(), parse_path(path_text), parse_rational(step_text));
    } else if (ver->parsed()) {
      if (!group_text.empty())
        opts.group = parse_group(load_document(group_text, in));
      if (orbits)
        opts.orbits = orbits;
      const auto &names = verify::suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        err << "spbundle: unknown suite '" << suite << "'; known suites:";
        for (const auto &n : names)
          err << " " << n;
        err << "\n";
        return 2;
      }
      r = cmd_verify(suite, opts);
    }
    out << (format == "json" ? render_json(r) : render_text(r));
    return r.exit_code;
  } catch (const Error &e) {
    err << "spbundle: " << e.what() << "\n";
    return 2;
  }
}

} // namespace spb::io
