#include "bisetkit/biset.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "bisetkit/characters.hpp"
#include "bisetkit/config.hpp"
#include "bisetkit/errors.hpp"
#include "bisetkit/isomorphism.hpp"
#include "bisetkit/subgroups.hpp"

namespace bisetkit {

namespace {

std::string make_key(int s1, int s2, std::vector<int> const &iso)
{
  std::string k;
  k.reserve(8 + 2 * iso.size());
  auto put = [&](int v) {
    k.push_back(static_cast<char>(v & 0xff));
    k.push_back(static_cast<char>((v >> 8) & 0xff));
  };
  put(s1);
  put(s2);
  for (int v : iso)
    put(v);
  return k;
}

struct SectionIso
{
  std::vector<int> to_rep;     // quotient -> registry representative
  std::vector<int> from_rep;
};

SectionIso const &section_iso(GroupPtr const &g, int s)
{
  return g->memo<SectionIso>("section_iso:" + std::to_string(s), [&] {
    auto const &sec = g->sections()[s];
    auto rep = iso_type_rep(sec.quotient->iso_id());
    auto f = find_isomorphism(*sec.quotient, *rep);
    if (!f)
      throw ConsistencyError("section quotient not isomorphic to its registry representative");
    SectionIso r;
    r.to_rep = *f;
    r.from_rep.assign(f->size(), 0);
    for (std::size_t i = 0; i < f->size(); ++i)
      r.from_rep[(*f)[i]] = static_cast<int>(i);
    return r;
  });
}

// automorphisms of the section quotient induced by a generating set of its stabilizer
std::vector<std::vector<int>> const &section_actions(GroupPtr const &g, int s)
{
  return g->memo<std::vector<std::vector<int>>>("section_actions:" + std::to_string(s), [&] {
    auto const &sec = g->sections()[s];
    std::vector<int> gens;
    ElementSet span = g->trivial();
    for (int a : sec.stabilizer) {
      if (span.contains(a))
        continue;
      gens.push_back(a);
      span = g->closure(gens);
    }
    std::vector<std::vector<int>> out;
    for (int a : gens) {
      std::vector<int> m(sec.quotient_order());
      for (std::size_t q = 0; q < m.size(); ++q)
        m[q] = sec.projection[g->conj(a, sec.lifts[q])];
      out.push_back(std::move(m));
    }
    return out;
  });
}

std::vector<int> inverse_map(std::vector<int> const &m)
{
  std::vector<int> r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    r[m[i]] = static_cast<int>(i);
  return r;
}

int subgroup_order(GroupPtr const &g, int s)
{
  return g->subgroups()[s].order;
}

void check_product_bound(GroupPtr const &h, GroupPtr const &g)
{
  if (h->order() * g->order() > product_bound())
    throw ResourceError("|H x G| = " + std::to_string(h->order() * g->order()) +
                        " exceeds the product bound " + std::to_string(product_bound()));
}

GroupPtr trivial_group()
{
  return cyclic_group(1);
}

std::vector<int> inverse_embedding(Embedding const &e)
{
  std::vector<int> r(e.parent->order(), -1);
  for (std::size_t i = 0; i < e.to_parent.size(); ++i)
    r[e.to_parent[i]] = static_cast<int>(i);
  return r;
}

} // namespace

std::string Flavor::to_string() const
{
  return p == 0 ? "classical" : "bifree(" + std::to_string(p) + ")";
}

std::size_t GoursatClass::size() const
{
  return static_cast<std::size_t>(subgroup_order(left, p1())) * subgroup_order(right, k2());
}

PairSet GoursatClass::pairs() const
{
  auto const &s1 = sec1();
  auto const &s2 = sec2();
  std::vector<std::vector<int>> fiber(s1.quotient_order());
  for (std::size_t h = 0; h < left->order(); ++h)
    if (s1.projection[h] >= 0)
      fiber[s1.projection[h]].push_back(static_cast<int>(h));
  PairSet out;
  out.reserve(size());
  for (std::size_t g = 0; g < right->order(); ++g) {
    int z = s2.projection[g];
    if (z < 0)
      continue;
    for (int h : fiber[iso[z]])
      out.emplace_back(h, static_cast<int>(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string GoursatClass::key() const
{
  return make_key(left_section, right_section, iso);
}

bool GoursatClass::operator==(GoursatClass const &o) const
{
  return left == o.left && right == o.right && left_section == o.left_section &&
         right_section == o.right_section && iso == o.iso;
}

GoursatClass normalize(GroupPtr const &h, GroupPtr const &g, PairSet const &l)
{
  ElementSet p1 = h->empty_set(), k1 = h->empty_set(), p2 = g->empty_set(), k2 = g->empty_set();
  for (auto [a, b] : l) {
    p1.insert(a);
    p2.insert(b);
    if (b == 0)
      k1.insert(a);
    if (a == 0)
      k2.insert(b);
  }
  int ip1 = h->subgroups().find(p1), ik1 = h->subgroups().find(k1);
  int ip2 = g->subgroups().find(p2), ik2 = g->subgroups().find(k2);
  if (ip1 < 0 || ik1 < 0 || ip2 < 0 || ik2 < 0)
    throw ConsistencyError("pair set is not a subgroup of H x G");
  if (l.size() != static_cast<std::size_t>(p1.count()) * k2.count())
    throw ConsistencyError("pair set is not a subgroup of H x G");
  auto [s1, c1] = h->sections().locate(ip1, ik1);
  auto [s2, c2] = g->sections().locate(ip2, ik2);
  GoursatClass r;
  r.left = h;
  r.right = g;
  r.left_section = s1;
  r.right_section = s2;
  auto const &sec1 = h->sections()[s1];
  auto const &sec2 = g->sections()[s2];
  if (sec1.quotient_order() != sec2.quotient_order())
    throw ConsistencyError("pair set is not a subgroup of H x G");
  r.iso.assign(sec2.quotient_order(), -1);
  for (auto [a, b] : l) {
    int z = sec2.projection[g->conj(c2, b)];
    int q = sec1.projection[h->conj(c1, a)];
    if (r.iso[z] >= 0 && r.iso[z] != q)
      throw ConsistencyError("pair set is not a subgroup of H x G");
    r.iso[z] = q;
  }
  return r;
}

GoursatBasis::GoursatBasis(GroupPtr h, GroupPtr g, Flavor flavor, std::optional<std::size_t> quotient_order)
  : _left(std::move(h)), _right(std::move(g)), _flavor(flavor)
{
  check_product_bound(_left, _right);
  auto const &st1 = _left->sections();
  auto const &st2 = _right->sections();

  struct Found
  {
    GoursatClass cls;
    std::vector<std::string> keys;
  };
  std::vector<Found> found;

  for (std::size_t s1 = 0; s1 < st1.size(); ++s1) {
    auto const &a = st1[s1];
    if (quotient_order && a.quotient_order() != *quotient_order)
      continue;
    if (!_flavor.admits(subgroup_order(_left, a.bottom), 1))
      continue;
    for (std::size_t s2 = 0; s2 < st2.size(); ++s2) {
      auto const &b = st2[s2];
      if (b.quotient_order() != a.quotient_order())
        continue;
      if (!_flavor.admits(1, subgroup_order(_right, b.bottom)))
        continue;
      int type = a.quotient->iso_id();
      if (b.quotient->iso_id() != type)
        continue;
      auto const &si1 = section_iso(_left, static_cast<int>(s1));
      auto const &si2 = section_iso(_right, static_cast<int>(s2));
      auto const &auts = iso_type_rep(type)->automorphisms();
      auto const &act1 = section_actions(_left, static_cast<int>(s1));
      std::vector<std::vector<int>> act2;
      for (auto const &m : section_actions(_right, static_cast<int>(s2)))
        act2.push_back(inverse_map(m));

      std::unordered_map<std::string, int> seen;
      std::size_t n = b.quotient_order();
      for (std::size_t ai = 0; ai < auts.size(); ++ai) {
        auto const &alpha = auts[static_cast<int>(ai)];
        std::vector<int> theta(n);
        for (std::size_t z = 0; z < n; ++z)
          theta[z] = si1.from_rep[alpha[si2.to_rep[z]]];
        std::string k0 = make_key(static_cast<int>(s1), static_cast<int>(s2), theta);
        if (seen.count(k0))
          continue;
        Found f;
        f.cls.left = _left;
        f.cls.right = _right;
        f.cls.left_section = static_cast<int>(s1);
        f.cls.right_section = static_cast<int>(s2);
        f.cls.iso = theta;
        // orbit under N(section) x N(section)
        std::vector<std::vector<int>> queue{theta};
        seen.emplace(k0, 1);
        f.keys.push_back(k0);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
          auto cur = queue[qi];
          auto visit = [&](std::vector<int> next) {
            std::string k = make_key(static_cast<int>(s1), static_cast<int>(s2), next);
            if (seen.emplace(k, 1).second) {
              f.keys.push_back(k);
              queue.push_back(std::move(next));
            }
          };
          for (auto const &c : act1) {
            std::vector<int> next(n);
            for (std::size_t z = 0; z < n; ++z)
              next[z] = c[cur[z]];
            visit(std::move(next));
          }
          for (auto const &c : act2) {
            std::vector<int> next(n);
            for (std::size_t z = 0; z < n; ++z)
              next[z] = cur[c[z]];
            visit(std::move(next));
          }
        }
        found.push_back(std::move(f));
      }
    }
  }

  std::stable_sort(found.begin(), found.end(), [](Found const &x, Found const &y) {
    auto kx = std::make_tuple(x.cls.size(), x.cls.left_section, x.cls.right_section);
    auto ky = std::make_tuple(y.cls.size(), y.cls.left_section, y.cls.right_section);
    if (kx != ky)
      return kx < ky;
    return x.cls.iso < y.cls.iso;
  });
  for (auto &f : found) {
    int idx = static_cast<int>(_classes.size());
    for (auto &k : f.keys)
      _lookup.emplace(std::move(k), idx);
    _classes.push_back(std::move(f.cls));
  }
}

int GoursatBasis::index_of(GoursatClass const &nf) const
{
  auto it = _lookup.find(nf.key());
  return it == _lookup.end() ? -1 : it->second;
}

int GoursatBasis::identify(PairSet const &l) const
{
  auto nf = normalize(_left, _right, l);
  int i = index_of(nf);
  if (i < 0) {
    if (!_flavor.admits(subgroup_order(_left, nf.k1()), subgroup_order(_right, nf.k2())))
      throw DomainError("subgroup has a stabilizer of order divisible by " + std::to_string(_flavor.p) +
                        " in the bifree flavor");
    throw ConsistencyError("subgroup of H x G not found in the Goursat basis");
  }
  return i;
}

BasisPtr goursat_basis(GroupPtr const &h, GroupPtr const &g, Flavor flavor, std::optional<std::size_t> quotient_order)
{
  using Key = std::tuple<Group const *, Group const *, int, std::size_t>;
  static std::mutex mtx;
  static std::map<Key, BasisPtr> cache;
  Key key{h.get(), g.get(), flavor.p, quotient_order.value_or(0)};
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end())
      return it->second;
  }
  auto b = std::make_shared<GoursatBasis const>(h, g, flavor, quotient_order);
  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(key, b).first->second;
}

BisetElt BisetElt::zero(GroupPtr const &h, GroupPtr const &g, Flavor flavor)
{
  BisetElt x;
  x.basis = goursat_basis(h, g, flavor);
  x.coeffs.assign(x.basis->size(), Rational(0));
  return x;
}

BisetElt BisetElt::basis_element(BasisPtr const &b, int i)
{
  BisetElt x;
  x.basis = b;
  x.coeffs.assign(b->size(), Rational(0));
  x.coeffs.at(i) = 1;
  return x;
}

BisetElt BisetElt::from_pairs(GroupPtr const &h, GroupPtr const &g, Flavor flavor, PairSet const &l)
{
  auto b = goursat_basis(h, g, flavor);
  return basis_element(b, b->identify(l));
}

BisetElt BisetElt::identity(GroupPtr const &g, Flavor flavor)
{
  PairSet d;
  for (std::size_t x = 0; x < g->order(); ++x)
    d.emplace_back(static_cast<int>(x), static_cast<int>(x));
  return from_pairs(g, g, flavor, d);
}

BisetElt &BisetElt::operator+=(BisetElt const &o)
{
  if (basis != o.basis)
    throw DomainError("adding biset elements from different spaces");
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    coeffs[i] += o.coeffs[i];
  return *this;
}

BisetElt BisetElt::operator+(BisetElt const &o) const
{
  BisetElt r = *this;
  r += o;
  return r;
}

BisetElt BisetElt::operator-(BisetElt const &o) const
{
  return *this + o * Rational(-1);
}

BisetElt BisetElt::operator*(Rational const &q) const
{
  BisetElt r = *this;
  for (auto &c : r.coeffs)
    c *= q;
  return r;
}

bool BisetElt::operator==(BisetElt const &o) const
{
  return basis == o.basis && coeffs == o.coeffs;
}

bool BisetElt::is_zero() const
{
  return std::all_of(coeffs.begin(), coeffs.end(), [](Rational const &c) { return c == 0; });
}

std::vector<PairSet> mackey_product(GoursatClass const &l, GoursatClass const &m)
{
  if (l.right != m.left)
    throw DomainError("middle groups do not match");
  GroupPtr const &h = l.left;
  GroupPtr const &g = l.right;
  GroupPtr const &k = m.right;
  auto lp = l.pairs();
  auto mp = m.pairs();
  auto const &a = g->subgroups()[l.p2()].elements;
  auto const &b = g->subgroups()[m.p1()].elements;

  std::vector<PairSet> out;
  std::vector<char> covered(g->order(), 0);
  for (std::size_t x = 0; x < g->order(); ++x) {
    if (covered[x])
      continue;
    for (int u : a)
      for (int v : b)
        covered[g->mul(g->mul(u, static_cast<int>(x)), v)] = 1;
    std::vector<std::vector<int>> fiber(g->order());
    for (auto [u, w] : mp)
      fiber[g->conj(static_cast<int>(x), u)].push_back(w);
    ElementSet prod(h->order() * k->order());
    for (auto [u, w] : lp)
      for (int z : fiber[w])
        prod.insert(u * static_cast<int>(k->order()) + z);
    PairSet ps;
    for (int e : prod.elements())
      ps.emplace_back(e / static_cast<int>(k->order()), e % static_cast<int>(k->order()));
    out.push_back(std::move(ps));
  }
  return out;
}

BisetElt compose(BisetElt const &x, BisetElt const &y)
{
  if (x.source() != y.target())
    throw DomainError("composition with mismatched middle group");
  if (x.flavor() != y.flavor())
    throw DomainError("composition of biset elements of different flavors");
  BisetElt r = BisetElt::zero(x.target(), y.source(), x.flavor());
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i] == 0)
      continue;
    for (std::size_t j = 0; j < y.coeffs.size(); ++j) {
      if (y.coeffs[j] == 0)
        continue;
      Rational c = x.coeffs[i] * y.coeffs[j];
      for (auto const &ps : mackey_product((*x.basis)[i], (*y.basis)[j]))
        r.coeffs[r.basis->identify(ps)] += c;
    }
  }
  return r;
}

BisetElt compose_by_orbits(GoursatClass const &l, GoursatClass const &m, Flavor flavor)
{
  if (l.right != m.left)
    throw DomainError("middle groups do not match");
  GroupPtr const &h = l.left;
  GroupPtr const &g = l.right;
  GroupPtr const &k = m.right;
  int nh = static_cast<int>(h->order()), ng = static_cast<int>(g->order()), nk = static_cast<int>(k->order());

  // coset tables of (H x G)/L and (G x K)/M
  auto cosets = [](int n1, int n2, Group const &g1, Group const &g2, PairSet const &sub,
                   std::vector<int> &id, std::vector<std::pair<int, int>> &rep) {
    id.assign(static_cast<std::size_t>(n1) * n2, -1);
    for (int a = 0; a < n1; ++a)
      for (int b = 0; b < n2; ++b) {
        if (id[a * n2 + b] >= 0)
          continue;
        int c = static_cast<int>(rep.size());
        rep.emplace_back(a, b);
        for (auto [u, v] : sub)
          id[g1.mul(a, u) * n2 + g2.mul(b, v)] = c;
      }
  };
  std::vector<int> xid, yid;
  std::vector<std::pair<int, int>> xrep, yrep;
  cosets(nh, ng, *h, *g, l.pairs(), xid, xrep);
  cosets(ng, nk, *g, *k, m.pairs(), yid, yrep);
  int nx = static_cast<int>(xrep.size()), ny = static_cast<int>(yrep.size());

  std::vector<int> parent(static_cast<std::size_t>(nx) * ny);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  // (x.t, y) ~ (x, t.y)
  for (int xi = 0; xi < nx; ++xi)
    for (int yi = 0; yi < ny; ++yi)
      for (int t : g->generators()) {
        auto [xh, xg] = xrep[xi];
        auto [yg, yk] = yrep[yi];
        int x2 = xid[xh * ng + g->mul(g->inv(t), xg)];
        int y2 = yid[g->mul(t, yg) * nk + yk];
        int a = find(x2 * ny + yi), b = find(xi * ny + y2);
        if (a != b)
          parent[a] = b;
      }

  auto act = [&](int hh, int kk, int point) {
    int xi = point / ny, yi = point % ny;
    auto [xh, xg] = xrep[xi];
    auto [yg, yk] = yrep[yi];
    int x2 = xid[h->mul(hh, xh) * ng + xg];
    int y2 = yid[yg * nk + k->mul(kk, yk)];
    return find(x2 * ny + y2);
  };

  BisetElt r = BisetElt::zero(h, k, flavor);
  std::vector<char> done(parent.size(), 0);
  for (int pt = 0; pt < nx * ny; ++pt) {
    int root = find(pt);
    if (done[root])
      continue;
    // orbit under H x K
    std::vector<int> orbit{root};
    done[root] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (int a : h->generators()) {
        int q = act(a, 0, orbit[i]);
        if (!done[q]) {
          done[q] = 1;
          orbit.push_back(q);
        }
      }
      for (int b : k->generators()) {
        int q = act(0, b, orbit[i]);
        if (!done[q]) {
          done[q] = 1;
          orbit.push_back(q);
        }
      }
    }
    PairSet stab;
    for (int a = 0; a < nh; ++a)
      for (int b = 0; b < nk; ++b)
        if (act(a, b, root) == root)
          stab.emplace_back(a, b);
    r.coeffs[r.basis->identify(stab)] += 1;
  }
  return r;
}

BisetElt restriction_biset(Embedding const &e, Flavor flavor)
{
  PairSet ps;
  for (std::size_t x = 0; x < e.to_parent.size(); ++x)
    ps.emplace_back(static_cast<int>(x), e.to_parent[x]);
  return BisetElt::from_pairs(e.sub, e.parent, flavor, ps);
}

BisetElt induction_biset(Embedding const &e, Flavor flavor)
{
  PairSet ps;
  for (std::size_t x = 0; x < e.to_parent.size(); ++x)
    ps.emplace_back(e.to_parent[x], static_cast<int>(x));
  return BisetElt::from_pairs(e.parent, e.sub, flavor, ps);
}

namespace {
void check_kernel(Quotient const &q, Flavor flavor)
{
  int n = subgroup_order(q.parent, q.kernel);
  if (flavor.is_bifree() && n % flavor.p == 0)
    throw DomainError("kernel of order " + std::to_string(n) + " is not a " + std::to_string(flavor.p) +
                      "'-group");
}
} // namespace

BisetElt inflation_biset(Quotient const &q, Flavor flavor)
{
  check_kernel(q, flavor);
  PairSet ps;
  for (std::size_t x = 0; x < q.projection.size(); ++x)
    ps.emplace_back(static_cast<int>(x), q.projection[x]);
  return BisetElt::from_pairs(q.parent, q.group, flavor, ps);
}

BisetElt deflation_biset(Quotient const &q, Flavor flavor)
{
  check_kernel(q, flavor);
  PairSet ps;
  for (std::size_t x = 0; x < q.projection.size(); ++x)
    ps.emplace_back(q.projection[x], static_cast<int>(x));
  return BisetElt::from_pairs(q.group, q.parent, flavor, ps);
}

BisetElt isomorphism_biset(Isomorphism const &f, Flavor flavor)
{
  PairSet ps;
  for (std::size_t x = 0; x < f.map.size(); ++x)
    ps.emplace_back(f.map[x], static_cast<int>(x));
  return BisetElt::from_pairs(f.target, f.source, flavor, ps);
}

BisetElt elementary(OpKind kind, ElementaryData data, Flavor flavor)
{
  switch (kind) {
  case OpKind::res:
    return restriction_biset(*std::get<Embedding const *>(data), flavor);
  case OpKind::ind:
    return induction_biset(*std::get<Embedding const *>(data), flavor);
  case OpKind::inf:
    return inflation_biset(*std::get<Quotient const *>(data), flavor);
  case OpKind::def:
    return deflation_biset(*std::get<Quotient const *>(data), flavor);
  case OpKind::iso:
    return isomorphism_biset(*std::get<Isomorphism const *>(data), flavor);
  }
  throw DomainError("unknown elementary kind");
}

BisetElt ElementaryWord::product() const
{
  return compose(ind, compose(inf, compose(iso_biset, compose(def, res))));
}

ElementaryWord factorize(GoursatClass const &l, Flavor flavor)
{
  auto const &s1 = l.sec1();
  auto const &s2 = l.sec2();
  ElementaryWord w;
  w.left_embedding = &subgroup_of(l.left, s1.top);
  w.right_embedding = &subgroup_of(l.right, s2.top);
  auto inv1 = inverse_embedding(*w.left_embedding);
  auto inv2 = inverse_embedding(*w.right_embedding);

  auto kernel_in = [](Embedding const &e, std::vector<int> const &inv, int bottom) {
    ElementSet s = e.sub->empty_set();
    for (int x : e.parent->subgroups()[bottom].elements)
      s.insert(inv[x]);
    return e.sub->subgroups().find(s);
  };
  auto const &p1 = w.left_embedding->sub;
  auto const &p2 = w.right_embedding->sub;
  w.left_quotient = &quotient_of(p1, kernel_in(*w.left_embedding, inv1, s1.bottom));
  w.right_quotient = &quotient_of(p2, kernel_in(*w.right_embedding, inv2, s2.bottom));

  auto const &q1 = *w.left_quotient;
  auto const &q2 = *w.right_quotient;
  std::vector<int> lift2(q2.group->order(), -1);
  for (std::size_t t = 0; t < q2.projection.size(); ++t)
    if (lift2[q2.projection[t]] < 0)
      lift2[q2.projection[t]] = static_cast<int>(t);
  w.iso.source = q2.group;
  w.iso.target = q1.group;
  w.iso.map.resize(q2.group->order());
  for (std::size_t y = 0; y < lift2.size(); ++y) {
    int g = w.right_embedding->to_parent[lift2[y]];
    int hh = s1.lifts[l.iso[s2.projection[g]]];
    w.iso.map[y] = q1.projection[inv1[hh]];
  }

  w.ind = induction_biset(*w.left_embedding, flavor);
  w.inf = inflation_biset(q1, flavor);
  w.iso_biset = isomorphism_biset(w.iso, flavor);
  w.def = deflation_biset(q2, flavor);
  w.res = restriction_biset(*w.right_embedding, flavor);
  return w;
}

int essential_class(GoursatClass const &l)
{
  GroupPtr const &g = l.right;
  if (l.left != g || l.quotient_order() != g->order())
    return -1;
  auto const &s1 = l.sec1();
  auto const &s2 = l.sec2();
  std::vector<int> phi(g->order());
  for (std::size_t x = 0; x < g->order(); ++x)
    phi[x] = s1.lifts[l.iso[s2.projection[x]]];
  auto const &auts = g->automorphisms();
  int a = auts.find(phi);
  if (a < 0)
    throw ConsistencyError("graph class does not induce an automorphism");
  return auts.out_class(a);
}

std::vector<Rational> essential_projection(BisetElt const &x)
{
  if (x.source() != x.target())
    throw DomainError("essential projection needs an endomorphism element");
  std::vector<Rational> out(x.source()->automorphisms().out_size(), Rational(0));
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i] == 0)
      continue;
    int c = essential_class((*x.basis)[i]);
    if (c >= 0)
      out[c] += x.coeffs[i];
  }
  return out;
}

BisetElt opposite(BisetElt const &x)
{
  BisetElt r = BisetElt::zero(x.source(), x.target(), x.flavor());
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i] == 0)
      continue;
    PairSet ps;
    for (auto [a, b] : (*x.basis)[i].pairs())
      ps.emplace_back(b, a);
    r.coeffs[r.basis->identify(ps)] += x.coeffs[i];
  }
  return r;
}

BurnsideElt to_burnside(BisetElt const &x)
{
  if (x.source()->order() != 1)
    throw DomainError("expected a (G,1)-biset element");
  GroupPtr const &g = x.target();
  BurnsideElt u = BurnsideElt::zero(g);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i)
    if (x.coeffs[i] != 0)
      u.coeffs[g->subgroups().class_of((*x.basis)[i].p1())] += x.coeffs[i];
  return u;
}

BisetElt from_burnside(BurnsideElt const &u, Flavor flavor)
{
  GroupPtr const &g = u.group;
  BisetElt r = BisetElt::zero(g, trivial_group(), flavor);
  auto const &tab = g->subgroups();
  for (std::size_t c = 0; c < u.coeffs.size(); ++c) {
    if (u.coeffs[c] == 0)
      continue;
    PairSet ps;
    for (int x : tab[tab.class_rep(static_cast<int>(c))].elements)
      ps.emplace_back(x, 0);
    r.coeffs[r.basis->identify(ps)] += u.coeffs[c];
  }
  return r;
}

Rational biset_pairing(GroupPtr const &g, BisetElt const &x, BisetElt const &y)
{
  if (x.target() != g || y.target() != g)
    throw DomainError("pairing arguments are not (G,1)-elements");
  return orbit_pairing(to_burnside(x), to_burnside(y));
}

BurnsideElt act_on_burnside(GoursatClass const &l, BurnsideElt const &x, Flavor flavor)
{
  auto w = factorize(l, flavor);
  std::optional<int> bp;
  if (flavor.is_bifree())
    bp = flavor.p;
  auto u = elementary_op(OpKind::res, w.right_embedding, x, bp);
  u = elementary_op(OpKind::def, w.right_quotient, u, bp);
  u = elementary_op(OpKind::iso, &w.iso, u, bp);
  u = elementary_op(OpKind::inf, w.left_quotient, u, bp);
  return elementary_op(OpKind::ind, w.left_embedding, u, bp);
}

BurnsideElt act_on_burnside_direct(GoursatClass const &l, BurnsideElt const &x)
{
  BisetElt y = from_burnside(x, Flavor::classical());
  auto b = goursat_basis(l.left, l.right, Flavor::classical());
  int i = b->index_of(l);
  if (i < 0)
    throw ConsistencyError("class not in the classical basis");
  return to_burnside(compose(BisetElt::basis_element(b, i), y));
}

BurnsideElt act_on_burnside(BisetElt const &x, BurnsideElt const &u)
{
  BurnsideElt r = BurnsideElt::zero(x.target());
  for (std::size_t i = 0; i < x.coeffs.size(); ++i)
    if (x.coeffs[i] != 0)
      r += act_on_burnside((*x.basis)[i], u, x.flavor()) * x.coeffs[i];
  return r;
}

} // namespace bisetkit
