#include "spb/transport.hpp"

#include <charconv>

#include "spb/error.hpp"

namespace spb {

namespace {

Rational mod_one(const Rational &r)
{
  std::int64_t n = r.numerator() % r.denominator();
  if (n < 0)
    n += r.denominator();
  return Rational(n, r.denominator());
}

std::int64_t parse_integer(std::string_view text)
{
  std::int64_t v = 0;
  const char *first = text.data();
  const char *last = text.data() + text.size();
  if (!text.empty() && text.front() == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last)
    throw DomainError("malformed rational '" + std::string(text) + "'");
  return v;
}

void require_arity(const U1Wreath &a, const U1Wreath &b)
{
  if (a.size() != b.size())
    throw Mismatch("U(1) wreath elements have different sheet counts");
}

} // namespace

Angle::Angle(std::int64_t p, std::int64_t q)
{
  if (q == 0)
    throw DomainError("zero denominator");
  value_ = mod_one(Rational(p, q));
}

Angle::Angle(const Rational &r) : value_(mod_one(r)) {}

Angle Angle::parse(std::string_view text)
{
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Angle(parse_integer(text));
  std::int64_t q = parse_integer(text.substr(slash + 1));
  if (q <= 0)
    throw DomainError("denominator must be positive in '" + std::string(text) + "'");
  return Angle(parse_integer(text.substr(0, slash)), q);
}

std::string Angle::to_string() const { return spb::to_string(value_); }

std::string to_string(const Rational &r)
{
  if (r.denominator() == 1)
    return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

U1Wreath u1wreath_identity(std::size_t k)
{
  return U1Wreath{std::vector<Angle>(k), Permutation::identity(k)};
}

void validate(const U1Wreath &w)
{
  if (w.angles.size() != w.sigma.size())
    throw DomainError("angle tuple and permutation have different lengths");
}

U1Wreath u1wreath_mul(const U1Wreath &a, const U1Wreath &b)
{
  require_arity(a, b);
  const Permutation a_inv = a.sigma.inverse();
  U1Wreath r{std::vector<Angle>(a.size()), a.sigma.compose(b.sigma)};
  for (std::uint32_t x = 0; x < a.size(); ++x)
    r.angles[x] = a.angles[x] + b.angles[a_inv(x)];
  return r;
}

U1Wreath u1wreath_inv(const U1Wreath &a)
{
  U1Wreath r{std::vector<Angle>(a.size()), a.sigma.inverse()};
  for (std::uint32_t x = 0; x < a.size(); ++x)
    r.angles[x] = -a.angles[a.sigma(x)];
  return r;
}

FiberPoint act_point(const U1Wreath &w, const FiberPoint &p)
{
  if (p.slot >= w.size())
    throw Mismatch("fiber point sheet out of range");
  const std::size_t y = w.sigma(static_cast<std::uint32_t>(p.slot));
  return FiberPoint{p.angle + w.angles[y], y};
}

U1FlatBundle::U1FlatBundle(std::size_t k, std::vector<U1Wreath> generators)
    : k_(k), generators_(std::move(generators))
{
  if (k_ == 0)
    throw DomainError("a U(1) bundle needs at least one sheet");
  if (generators_.empty())
    throw DomainError("a bundle needs at least one loop");
  for (const auto &g : generators_) {
    validate(g);
    if (g.size() != k_)
      throw DomainError("generator arity differs from the sheet count");
  }
}

U1FlatBundle u1_winding_bundle(std::size_t k, std::vector<Angle> angles)
{
  if (angles.empty())
    angles.resize(k);
  return U1FlatBundle(k, {U1Wreath{std::move(angles), Permutation::cycle(k)}});
}

U1Wreath holonomy_u1(const U1FlatBundle &b, const LoopWord &w)
{
  U1Wreath r = u1wreath_identity(b.k());
  const auto m = static_cast<int>(b.loops());
  for (int letter : w.letters) {
    if (letter == 0 || letter > m || letter < -m)
      throw DomainError("loop letter " + std::to_string(letter) + " out of range");
    const U1Wreath &g = b.generators()[static_cast<std::size_t>(std::abs(letter) - 1)];
    r = u1wreath_mul(letter > 0 ? g : u1wreath_inv(g), r);
  }
  return r;
}

FiberPoint transport(const U1FlatBundle &b, const LoopWord &w, const FiberPoint &start)
{
  if (start.slot >= b.k())
    throw DomainError("start sheet out of range");
  return act_point(holonomy_u1(b, w), start);
}

void validate(const U1Frame &f, std::size_t k)
{
  if (f.points.size() != k)
    throw DomainError("frame length differs from the sheet count");
  std::vector<bool> hit(k, false);
  for (const auto &p : f.points) {
    if (p.slot >= k || hit[p.slot])
      throw DomainError("frame does not meet every sheet exactly once");
    hit[p.slot] = true;
  }
}

U1Frame frame_of(const U1Wreath &m)
{
  U1Frame f;
  for (std::size_t x = 0; x < m.size(); ++x)
    f.points.push_back(act_point(m, FiberPoint{Angle(), x}));
  return f;
}

U1Wreath wreath_of(const U1Frame &f)
{
  const std::size_t k = f.points.size();
  validate(f, k);
  std::vector<std::uint32_t> images(k);
  std::vector<Angle> angles(k);
  for (std::size_t x = 0; x < k; ++x) {
    images[x] = static_cast<std::uint32_t>(f.points[x].slot);
    angles[f.points[x].slot] = f.points[x].angle;
  }
  return U1Wreath{std::move(angles), Permutation(std::move(images))};
}

U1Frame act_frame(const U1Wreath &w, const U1Frame &f)
{
  if (f.points.size() != w.size())
    throw Mismatch("frame length differs from the wreath arity");
  const Permutation inv = w.sigma.inverse();
  U1Frame r;
  for (std::uint32_t x = 0; x < w.size(); ++x) {
    FiberPoint p = f.points[inv(x)];
    r.points.push_back(FiberPoint{w.angles[x] + p.angle, p.slot});
  }
  return r;
}

U1Wreath frame_holonomy(const U1FlatBundle &b, const LoopWord &w) { return holonomy_u1(b, w); }

U1Frame transport_frame(const U1FlatBundle &b, const LoopWord &w, const U1Frame &start)
{
  validate(start, b.k());
  U1Frame r;
  for (const auto &p : start.points)
    r.points.push_back(transport(b, w, p));
  return r;
}

AlgebraVector adjoint(const U1Wreath &w, const AlgebraVector &v)
{
  if (v.entries.size() != w.size())
    throw Mismatch("algebra vector length differs from the wreath arity");
  const Permutation inv = w.sigma.inverse();
  AlgebraVector r{std::vector<Rational>(v.entries.size())};
  for (std::uint32_t x = 0; x < w.size(); ++x)
    r.entries[x] = v.entries[inv(x)];
  return r;
}

U1Wreath push_wreath(const U1Wreath &w, std::int64_t q)
{
  U1Wreath r = w;
  for (auto &a : r.angles)
    a = a.power(q);
  return r;
}

U1FlatBundle pushforward(const U1FlatBundle &b, std::int64_t q)
{
  std::vector<U1Wreath> gens;
  for (const auto &g : b.generators())
    gens.push_back(push_wreath(g, q));
  return U1FlatBundle(b.k(), std::move(gens));
}

DivisionReport division_form_check(const std::vector<FiberPoint> &path, const Rational &step)
{
  if (path.size() < 2)
    throw DomainError("a path needs at least two samples");
  if (step.numerator() <= 0)
    throw DomainError("step must be positive");
  DivisionReport r;
  r.slot = path.front().slot;
  for (const auto &p : path)
    if (p.slot != r.slot)
      throw NoQuotient("path samples lie on different sheets");
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    Rational d = (path[i + 1].angle - path[i].angle).value();
    if (d > Rational(1, 2))
      d -= 1;
    r.rates.push_back(d / step);
  }
  bool uniform = true;
  for (const auto &rate : r.rates)
    uniform = uniform && rate == r.rates.front();
  if (uniform)
    r.uniform_rate = r.rates.front();
  return r;
}

std::vector<FiberPoint> exponential_path(const FiberPoint &start, const Rational &rate,
                                         const Rational &step, std::size_t count)
{
  std::vector<FiberPoint> path;
  for (std::size_t i = 0; i < count; ++i)
    path.push_back(
        FiberPoint{start.angle + Angle(rate * step * static_cast<std::int64_t>(i)), start.slot});
  return path;
}

} // namespace spb
