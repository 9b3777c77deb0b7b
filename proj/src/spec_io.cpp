#include "spb/cli/spec_io.hpp"

#include <charconv>
#include <fstream>
#include <initializer_list>
#include <istream>
#include <iterator>
#include <set>
#include <sstream>

#include "spb/error.hpp"

namespace spb::io {

namespace {

void require_object(const json &j, std::string_view what, std::initializer_list<std::string_view> allowed)
{
  if (!j.is_object())
    throw SchemaError(std::string(what) + " must be an object");
  for (const auto &item : j.items()) {
    bool known = false;
    for (auto a : allowed)
      known = known || item.key() == a;
    if (!known)
      throw SchemaError("unknown field '" + item.key() + "' in " + std::string(what));
  }
}

const json &field(const json &j, const char *name, std::string_view what)
{
  auto it = j.find(name);
  if (it == j.end())
    throw SchemaError(std::string(what) + " is missing field '" + name + "'");
  return *it;
}

std::size_t as_count(const json &j, std::string_view what)
{
  if (!j.is_number_unsigned())
    throw SchemaError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::uint32_t> as_indices(const json &j, std::string_view what)
{
  if (!j.is_array())
    throw SchemaError(std::string(what) + " must be an array of indices");
  std::vector<std::uint32_t> out;
  for (const auto &v : j)
    out.push_back(static_cast<std::uint32_t>(as_count(v, what)));
  return out;
}

std::string kind_of(const json &j, std::string_view what)
{
  const json &k = field(j, "kind", what);
  if (!k.is_string())
    throw SchemaError(std::string(what) + " kind must be a string");
  return k.get<std::string>();
}

FiniteGroup named_group(const std::string &name)
{
  auto number = [&](std::size_t from) -> std::size_t {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(name.data() + from, name.data() + name.size(), v);
    if (ec != std::errc() || ptr != name.data() + name.size() || from == name.size())
      throw SchemaError("unknown group name '" + name + "'");
    return v;
  };
  if (name == "trivial")
    return make_trivial();
  if (name == "z2xz2")
    return make_direct_product(make_cyclic(2), make_cyclic(2));
  if (name.size() > 1 && (name[0] == 'z' || name[0] == 'Z'))
    return make_cyclic(number(1));
  if (name.size() > 1 && (name[0] == 's' || name[0] == 'S'))
    return make_symmetric(number(1));
  throw SchemaError("unknown group name '" + name + "'");
}

std::vector<Elem> as_elems(const json &j, std::string_view what)
{
  auto v = as_indices(j, what);
  return std::vector<Elem>(v.begin(), v.end());
}

GSetAut parse_clutching(const json &j, const GSet &fiber)
{
  require_object(j, "clutching entry", {"perm", "wreath", "automorphism"});
  if (j.size() != 1)
    throw SchemaError("clutching entry needs exactly one of perm, wreath, automorphism");
  if (j.contains("perm"))
    return GSetAut(fiber, as_indices(j["perm"], "perm"));
  if (j.contains("automorphism"))
    return GSetAut(fiber, as_indices(j["automorphism"], "automorphism"));
  const json &w = j["wreath"];
  require_object(w, "wreath", {"g", "sigma"});
  const FiniteGroup &G = fiber.group();
  WreathElement we{as_elems(field(w, "g", "wreath"), "g"),
                   Permutation(as_indices(field(w, "sigma", "wreath"), "sigma"))};
  const std::size_t n = we.sigma.size();
  if (!(fiber == standard_semitorsor(G, n)))
    throw SchemaError("wreath clutching needs a standard semi-torsor fiber of matching degree");
  return wreath_to_aut(we, n, G);
}

} // namespace

json load_document(std::string_view source, std::istream &in)
{
  std::string text;
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else if (!source.empty() && (source.front() == '{' || source.front() == '"')) {
    text = source;
  } else if (!source.empty() && source.find_first_of("{}[]:/. ") == std::string_view::npos &&
             !std::ifstream(std::string(source)).good()) {
    // A bare group name such as z3.
    return json(std::string(source));
  } else {
    std::ifstream file{std::string(source)};
    if (!file)
      throw SchemaError("cannot read '" + std::string(source) + "'");
    std::ostringstream ss;
    ss << file.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

FiniteGroup parse_group(const json &j)
{
  if (j.is_string())
    return named_group(j.get<std::string>());
  const std::string kind = kind_of(j, "group");
  if (kind == "cyclic") {
    require_object(j, "group", {"kind", "n"});
    return make_cyclic(as_count(field(j, "n", "group"), "n"));
  }
  if (kind == "symmetric") {
    require_object(j, "group", {"kind", "n"});
    return make_symmetric(as_count(field(j, "n", "group"), "n"));
  }
  if (kind == "product") {
    require_object(j, "group", {"kind", "factors"});
    const json &f = field(j, "factors", "group");
    if (!f.is_array() || f.empty())
      throw SchemaError("product factors must be a non-empty array");
    FiniteGroup g = parse_group(f[0]);
    for (std::size_t i = 1; i < f.size(); ++i)
      g = make_direct_product(g, parse_group(f[i]));
    return g;
  }
  if (kind == "table") {
    require_object(j, "group", {"kind", "table", "label"});
    const json &t = field(j, "table", "group");
    if (!t.is_array())
      throw SchemaError("group table must be an array of rows");
    std::vector<std::vector<Elem>> rows;
    for (const auto &row : t)
      rows.push_back(as_elems(row, "table row"));
    std::string label = j.contains("label") ? j["label"].get<std::string>() : "G";
    return FiniteGroup::from_table(rows, label);
  }
  throw SchemaError("unknown group kind '" + kind + "'");
}

GSet parse_gset(const json &j)
{
  const std::string kind = kind_of(j, "gset");
  if (kind == "standard_semitorsor") {
    require_object(j, "gset", {"kind", "group", "n"});
    return standard_semitorsor(parse_group(field(j, "group", "gset")),
                               as_count(field(j, "n", "gset"), "n"));
  }
  if (kind == "trivial") {
    require_object(j, "gset", {"kind", "group", "size"});
    FiniteGroup g = j.contains("group") ? parse_group(j["group"]) : make_trivial();
    return trivial_action(g, as_count(field(j, "size", "gset"), "size"));
  }
  if (kind == "table") {
    require_object(j, "gset", {"kind", "group", "size", "act"});
    FiniteGroup g = parse_group(field(j, "group", "gset"));
    const std::size_t size = as_count(field(j, "size", "gset"), "size");
    const json &act = field(j, "act", "gset");
    if (!act.is_array() || act.size() != g.order())
      throw SchemaError("act needs one row per group element");
    std::vector<Point> flat;
    for (const auto &row : act) {
      auto r = as_indices(row, "act row");
      if (r.size() != size)
        throw SchemaError("act row length differs from size");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return GSet(std::move(g), size, std::move(flat));
  }
  throw SchemaError("unknown gset kind '" + kind + "'");
}

FlatBundle parse_bundle(const json &j)
{
  if (!j.is_object())
    throw SchemaError("bundle must be an object");
  if (j.contains("kind")) {
    require_object(j, "bundle", {"kind", "group", "k"});
    if (j["kind"] != "winding")
      throw SchemaError("unknown bundle kind");
    return finite_winding_bundle(parse_group(field(j, "group", "bundle")),
                                 as_count(field(j, "k", "bundle"), "k"));
  }
  require_object(j, "bundle", {"mode", "fiber", "loops", "clutching"});
  const json &mode = field(j, "mode", "bundle");
  const json &entries = field(j, "clutching", "bundle");
  if (!entries.is_array() || entries.empty())
    throw SchemaError("clutching must be a non-empty array");
  if (j.contains("loops") && as_count(j["loops"], "loops") != entries.size())
    throw SchemaError("loops differs from the number of clutching entries");

  if (mode == "group") {
    FiniteGroup g = parse_group(field(j, "fiber", "bundle"));
    std::vector<GroupHom> maps;
    for (const auto &e : entries) {
      require_object(e, "clutching entry", {"perm", "automorphism"});
      if (e.size() != 1)
        throw SchemaError("group-mode clutching needs exactly one of perm, automorphism");
      const json &table = e.contains("perm") ? e["perm"] : e["automorphism"];
      maps.emplace_back(g, g, as_elems(table, "automorphism"));
    }
    return FlatBundle(std::move(g), maps);
  }
  if (mode == "gspace") {
    GSet fiber = parse_gset(field(j, "fiber", "bundle"));
    std::vector<GSetAut> maps;
    for (const auto &e : entries)
      maps.push_back(parse_clutching(e, fiber));
    return FlatBundle(std::move(fiber), std::move(maps));
  }
  throw SchemaError("mode must be \"group\" or \"gspace\"");
}

U1FlatBundle parse_u1_bundle(const json &j)
{
  require_object(j, "U(1) bundle", {"k", "loops", "generators"});
  const std::size_t k = as_count(field(j, "k", "U(1) bundle"), "k");
  const json &gens = field(j, "generators", "U(1) bundle");
  if (!gens.is_array() || gens.empty())
    throw SchemaError("generators must be a non-empty array");
  if (j.contains("loops") && as_count(j["loops"], "loops") != gens.size())
    throw SchemaError("loops differs from the number of generators");
  std::vector<U1Wreath> out;
  for (const auto &g : gens) {
    require_object(g, "generator", {"angles", "perm"});
    const json &angles = field(g, "angles", "generator");
    if (!angles.is_array())
      throw SchemaError("angles must be an array of rational strings");
    U1Wreath w{{}, Permutation(as_indices(field(g, "perm", "generator"), "perm"))};
    for (const auto &a : angles) {
      if (!a.is_string())
        throw SchemaError("angles must be rational strings such as \"1/3\"");
      w.angles.push_back(Angle::parse(a.get<std::string>()));
    }
    out.push_back(std::move(w));
  }
  return U1FlatBundle(k, std::move(out));
}

namespace {

std::vector<std::string> split_items(std::string_view text)
{
  std::vector<std::string> items;
  std::string current;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!current.empty())
        items.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty())
    items.push_back(std::move(current));
  return items;
}

long long parse_signed(std::string_view s)
{
  long long v = 0;
  const char *first = s.data();
  if (!s.empty() && s.front() == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || first == s.data() + s.size())
    throw SchemaError("malformed integer '" + std::string(s) + "'");
  return v;
}

} // namespace

LoopWord parse_word(std::string_view text)
{
  LoopWord w;
  for (const auto &item : split_items(text)) {
    long long v = parse_signed(item);
    if (v == 0)
      throw SchemaError("loop letters are ±1, ±2, ...");
    w.letters.push_back(static_cast<int>(v));
  }
  return w;
}

Rational parse_rational(std::string_view text)
{
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_signed(text));
  long long q = parse_signed(text.substr(slash + 1));
  if (q <= 0)
    throw SchemaError("denominator must be positive in '" + std::string(text) + "'");
  return Rational(parse_signed(text.substr(0, slash)), q);
}

FiberPoint parse_fiber_point(std::string_view text)
{
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw SchemaError("fiber points are written angle:slot");
  long long slot = parse_signed(text.substr(colon + 1));
  if (slot < 0)
    throw SchemaError("slot must be non-negative");
  return FiberPoint{Angle(parse_rational(text.substr(0, colon))), static_cast<std::size_t>(slot)};
}

std::vector<FiberPoint> parse_path(std::string_view text)
{
  std::vector<FiberPoint> out;
  for (const auto &item : split_items(text))
    out.push_back(parse_fiber_point(item));
  return out;
}

} // namespace spb::io
