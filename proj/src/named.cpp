#include <cctype>
#include <numeric>
#include <regex>

#include "bisetkit/errors.hpp"
#include "bisetkit/group.hpp"

namespace bisetkit {

namespace {

Perm identity_perm(unsigned n)
{
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm cycle(unsigned n, std::vector<unsigned> const &pts)
{
  Perm p = identity_perm(n);
  for (std::size_t i = 0; i < pts.size(); ++i)
    p[pts[i]] = static_cast<std::uint16_t>(pts[(i + 1) % pts.size()]);
  return p;
}

struct Factor
{
  unsigned degree;
  std::vector<Perm> gens;
};

Factor cyclic(unsigned n)
{
  std::vector<unsigned> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  return {n, {cycle(n, pts)}};
}

Factor dihedral(unsigned order)
{
  if (order == 2)
    return cyclic(2);
  if (order == 4)
    return {4, {cycle(4, {0, 1}) , cycle(4, {2, 3})}};

  unsigned n = order / 2;
  std::vector<unsigned> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  Perm refl(n);
  for (unsigned i = 0; i < n; ++i)
    refl[i] = static_cast<std::uint16_t>((n - i) % n);
  return {n, {cycle(n, pts), refl}};
}

// regular representation of the dicyclic group of order 4n
Factor dicyclic(unsigned order)
{
  unsigned n = order / 4;
  unsigned m = 2 * n;
  auto id = [m](unsigned i, unsigned j) { return j * m + i; };

  Perm a(order), x(order);
  for (unsigned j = 0; j < 2; ++j)
    for (unsigned i = 0; i < m; ++i) {
      // left multiplication: a * (a^i x^j) = a^(i+1) x^j
      a[id(i, j)] = static_cast<std::uint16_t>(id((i + 1) % m, j));
      // x * a^i = a^-i x, x * a^i x = a^-i x^2 = a^(n-i)
      if (j == 0)
        x[id(i, j)] = static_cast<std::uint16_t>(id((m - i) % m, 1));
      else
        x[id(i, j)] = static_cast<std::uint16_t>(id((m + n - i) % m, 0));
    }
  return {order, {a, x}};
}

Factor symmetric(unsigned n)
{
  if (n <= 1)
    return {1, {}};
  std::vector<unsigned> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  return {n, {cycle(n, {0, 1}), cycle(n, pts)}};
}

Factor alternating(unsigned n)
{
  if (n <= 2)
    return {std::max(n, 1u), {}};
  Factor f{n, {}};
  for (unsigned k = 2; k < n; ++k)
    f.gens.push_back(cycle(n, {0, 1, k}));
  return f;
}

Factor explicit_gens(std::string const &s)
{
  std::string body = s;
  if (body.size() >= 2 && body.front() == '[' && body.back() == ']')
    body = body.substr(1, body.size() - 2);

  std::vector<std::vector<std::vector<unsigned>>> gens;
  std::vector<std::vector<unsigned>> cur;
  unsigned degree = 1;

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i])))
      ++i;
  };

  while (true) {
    skip_ws();
    if (i >= body.size())
      break;

    if (body[i] == '(') {
      ++i;
      std::vector<unsigned> c;
      while (true) {
        skip_ws();
        std::size_t start = i;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i])))
          ++i;
        if (start == i)
          throw ParseError("expected a point in cycle notation: " + s);
        unsigned pt = static_cast<unsigned>(std::stoul(body.substr(start, i - start)));
        if (pt == 0)
          throw ParseError("points are numbered from 1: " + s);
        c.push_back(pt - 1);
        degree = std::max(degree, pt);
        skip_ws();
        if (i < body.size() && body[i] == ',') {
          ++i;
          continue;
        }
        if (i < body.size() && body[i] == ')') {
          ++i;
          break;
        }
        throw ParseError("unterminated cycle: " + s);
      }
      cur.push_back(c);
    } else if (body[i] == ',' || body[i] == ';') {
      if (cur.empty())
        throw ParseError("empty generator: " + s);
      gens.push_back(cur);
      cur.clear();
      ++i;
    } else {
      throw ParseError("unexpected character in generator list: " + s);
    }
  }
  if (!cur.empty())
    gens.push_back(cur);

  Factor f{degree, {}};
  for (auto const &g : gens) {
    Perm p = identity_perm(degree);
    // cycles compose right to left
    for (auto it = g.rbegin(); it != g.rend(); ++it) {
      std::vector<bool> seen(degree, false);
      for (auto pt : *it) {
        if (seen[pt])
          throw ParseError("repeated point in cycle: " + s);
        seen[pt] = true;
      }
      Perm c = cycle(degree, *it);
      Perm r(degree);
      for (unsigned k = 0; k < degree; ++k)
        r[k] = c[p[k]];
      p = r;
    }
    f.gens.push_back(p);
  }
  return f;
}

Factor parse_factor(std::string const &s)
{
  static std::regex const re("(C|D|Dic|S|A)([0-9]+)");
  std::smatch m;

  if (s == "Q8")
    return dicyclic(8);
  if (!s.empty() && s.front() == '[')
    return explicit_gens(s);

  if (!std::regex_match(s, m, re))
    throw ParseError("unknown group spec: '" + s + "'");

  unsigned long n = std::stoul(m[2].str());
  std::string kind = m[1].str();

  if (kind == "C") {
    if (n < 1 || n > 60000)
      throw ParseError("bad cyclic order in '" + s + "'");
    return cyclic(static_cast<unsigned>(n));
  }
  if (kind == "D") {
    if (n < 2 || n % 2 != 0 || n > 60000)
      throw ParseError("dihedral order must be even: '" + s + "'");
    return dihedral(static_cast<unsigned>(n));
  }
  if (kind == "Dic") {
    if (n < 8 || n % 4 != 0 || n > 60000)
      throw ParseError("dicyclic order must be a multiple of 4, at least 8: '" + s + "'");
    return dicyclic(static_cast<unsigned>(n));
  }
  if (n < 1 || n > 6)
    throw ParseError("symmetric and alternating groups are limited to degree 6: '" + s + "'");
  return kind == "S" ? symmetric(static_cast<unsigned>(n)) : alternating(static_cast<unsigned>(n));
}

std::vector<std::string> split_product(std::string const &spec)
{
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : spec) {
    if (c == '[')
      ++depth;
    if (c == ']')
      --depth;
    if (c == 'x' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c)) || depth > 0) {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

} // anonymous namespace

GroupPtr make_named(std::string const &spec)
{
  auto parts = split_product(spec);

  unsigned degree = 0;
  std::vector<Factor> factors;
  for (auto const &p : parts) {
    if (p.empty())
      throw ParseError("empty factor in group spec: '" + spec + "'");
    factors.push_back(parse_factor(p));
    degree += factors.back().degree;
  }

  std::vector<Perm> gens;
  unsigned offset = 0;
  for (auto const &f : factors) {
    for (auto const &g : f.gens) {
      Perm p = identity_perm(degree);
      for (unsigned i = 0; i < f.degree; ++i)
        p[offset + i] = static_cast<std::uint16_t>(offset + g[i]);
      gens.push_back(p);
    }
    offset += f.degree;
  }

  std::string name;
  for (auto const &p : parts)
    name += (name.empty() ? "" : "x") + p;

  if (gens.empty())
    gens.push_back(identity_perm(degree));
  return Group::generate(gens, name);
}

std::vector<std::string> library_names()
{
  return {"S3",    "D8",    "Q8",    "D10",  "A4",    "D12",   "Dic12", "D14",
          "D16",   "Dic16", "C2xD8", "C2xQ8", "D18",  "C3xS3", "D20",   "Dic20",
          "D22",   "S4",    "C2xA4", "D24",  "Dic24", "C4xS3", "C2xD12", "C3xD8",
          "C3xQ8", "D26",   "D28",   "Dic28", "D30",  "C5xS3", "C3xD10", "S3xS3",
          "C3xA4", "C6xS3", "D36",   "C3xDic12", "A5", "S5"};
}

} // namespace bisetkit
