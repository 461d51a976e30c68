#include "bisetkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "bisetkit/bgroups.hpp"
#include "bisetkit/biset.hpp"
#include "bisetkit/burnside.hpp"
#include "bisetkit/cache.hpp"
#include "bisetkit/characters.hpp"
#include "bisetkit/errors.hpp"
#include "bisetkit/functors.hpp"
#include "bisetkit/isomorphism.hpp"
#include "bisetkit/linalg.hpp"
#include "bisetkit/sections.hpp"
#include "bisetkit/subgroups.hpp"

namespace bisetkit {

namespace {

struct Rows
{
  std::vector<CheckRow> &out;

  template<typename T>
  void add(std::string const &group, int p, std::string quantity, T const &expected, T const &computed)
  {
    CheckRow r;
    r.group = group;
    r.p = p;
    r.quantity = std::move(quantity);
    r.expected = str(expected);
    r.computed = str(computed);
    r.pass = expected == computed;
    out.push_back(std::move(r));
  }

  static std::string str(long v) { return std::to_string(v); }
  static std::string str(bool v) { return v ? "true" : "false"; }
  static std::string str(Rational const &v) { return to_string(v); }
  static std::string str(std::string const &v) { return v; }
};

std::string label(GroupPtr const &g)
{
  return g->name().empty() ? iso_label(*g) : g->name();
}

long subgroup_classes(GroupPtr const &g)
{
  return static_cast<long>(g->subgroups().class_count());
}

long pprime_classes(GroupPtr const &g, int p)
{
  return static_cast<long>(g->subgroups().p_prime_classes(p).size());
}

long primitive_count(long m)
{
  long n = 0;
  for (auto const &x : UnitCharacter::all(m))
    n += x.is_primitive();
  return n;
}

// iso types of all section quotients
std::vector<int> section_types(GroupPtr const &h)
{
  std::vector<int> out;
  for (auto const &s : h->sections().all()) {
    int t = s.quotient->iso_id();
    if (std::find(out.begin(), out.end(), t) == out.end())
      out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_p_power(long n, int p)
{
  while (n % p == 0)
    n /= p;
  return n == 1;
}

// Σ over (m <= |H|, filter(m), xi mod m with keep(xi)) of simple_dim((C_m, xi), H, p)
struct DirichletSum
{
  long total = 0;
  long stray = 0;   // nonzero terms with m not dividing exp(H)
};

DirichletSum dirichlet_sum(GroupPtr const &h, int p, std::function<bool(long)> const &use_m,
                           std::function<bool(UnitCharacter const &)> const &keep)
{
  DirichletSum s;
  for (long m = 1; m <= static_cast<long>(h->order()); ++m) {
    if (!use_m(m))
      continue;
    for (auto const &xi : UnitCharacter::all(m)) {
      if (!keep(xi))
        continue;
      long d = simple_dim(SimpleLabel::dirichlet(xi), h, Flavor::bifree(p));
      s.total += d;
      if (d != 0 && h->exponent() % m != 0)
        ++s.stray;
    }
  }
  return s;
}

void crit_pprime_cyclic(VerifyOptions const &o, std::vector<GroupPtr> const &corpus, Rows &rows)
{
  auto one = cyclic_group(1);
  for (int p : o.primes)
    for (auto const &g : corpus) {
      auto const &tab = g->subgroups();
      auto cls = tab.p_prime_classes(p);
      Matrix<Rational> gram(cls.size(), Vector<Rational>(cls.size()));
      for (std::size_t i = 0; i < cls.size(); ++i)
        for (std::size_t j = 0; j < cls.size(); ++j)
          gram[i][j] = orbit_pairing(BurnsideElt::transitive(g, cls[i]), BurnsideElt::transitive(g, cls[j]));
      long cyclic = 0;
      for (int c : cls)
        cyclic += tab[tab.class_rep(c)].cyclic;
      rows.add(label(g), p, "Gram rank on KB^Delta vs cyclic p'-classes", cyclic, static_cast<long>(rank(gram)));
      rows.add(label(g), p, "simple_dim((1,1), G) vs cyclic p'-classes", cyclic,
               simple_dim(SimpleLabel::trivial(one), g, Flavor::bifree(p)));
    }
  rows.add("S3", 2, "spot value", 2L, simple_dim(SimpleLabel::trivial(one), make_named("S3"), Flavor::bifree(2)));
  rows.add("D8", 2, "spot value", 1L, simple_dim(SimpleLabel::trivial(one), make_named("D8"), Flavor::bifree(2)));
}

void crit_gram_diagonal(VerifyOptions const &o, std::vector<GroupPtr> const &corpus, Rows &rows)
{
  for (int p : o.primes)
    for (auto const &g : corpus) {
      auto const &tab = g->subgroups();
      for (int c : tab.p_prime_classes(p)) {
        auto e = idempotent(g, c);
        Rational expected = frac(generator_count(g, c), tab.subgroup_class(c).normalizer_order);
        rows.add(label(g), p, "<e_H, e_H> for class " + std::to_string(c), expected, orbit_pairing(e, e));
      }
    }
}

void crit_trivial_sum(VerifyOptions const &o, std::vector<GroupPtr> const &corpus, Rows &rows, bool pprime_only)
{
  for (int p : o.primes)
    for (auto const &h : corpus) {
      long closed = 0, paired = 0;
      for (int t : section_types(h)) {
        auto gb = iso_type_rep(t);
        if (!is_bdelta_group(gb, p))
          continue;
        if (pprime_only && gb->order() % p == 0)
          continue;
        long a = dim_simple_trivial(gb, h, p);
        long b = simple_dim(SimpleLabel::trivial(gb), h, Flavor::bifree(p));
        if (!pprime_only)
          rows.add(label(h), p, "simple_dim vs closed formula at " + iso_label(*gb), a, b);
        closed += a;
        paired += b;
      }
      long expected = pprime_only ? pprime_classes(h, p) : subgroup_classes(h);
      std::string what = pprime_only ? "p'-subgroup classes" : "subgroup classes";
      rows.add(label(h), p, what + " vs sum of closed dimensions", expected, closed);
      rows.add(label(h), p, what + " vs sum of pairing ranks", expected, paired);
    }
}

void crit_brauer(VerifyOptions const &o, std::vector<GroupPtr> const &corpus, Rows &rows)
{
  for (int p : o.primes) {
    auto brauer = class_function_functor(p, Flavor::bifree(p));
    for (auto const &g : corpus) {
      bool cyc = g->is_cyclic() && g->order() % p != 0;
      long m = static_cast<long>(g->order());
      auto gg = cyc ? cyclic_group(static_cast<int>(m)) : g;
      auto k = restriction_kernel(*brauer, gg);
      rows.add(label(g), p, "dim of the Brauer restriction kernel", cyc ? primitive_count(m) : 0L,
               static_cast<long>(k.dim()));
      if (cyc)
        for (auto const &xi : UnitCharacter::all(m))
          rows.add(label(g), p, "Out multiplicity of xi = " + xi.to_string(), xi.is_primitive() ? 1L : 0L,
                   out_multiplicity(k, SimpleLabel::dirichlet(xi).xi));
      auto s = dirichlet_sum(
        g, p, [&](long mm) { return mm % p != 0; }, [](UnitCharacter const &xi) { return xi.is_primitive(); });
      rows.add(label(g), p, "p-regular classes vs sum over (C_m, xi primitive)",
               static_cast<long>(support_classes(*g, p).size()), s.total);
      rows.add(label(g), p, "nonzero terms with m not dividing the exponent", 0L, s.stray);
    }
  }
}

void crit_complex(VerifyOptions const &o, std::vector<GroupPtr> const &corpus, Rows &rows)
{
  for (int p : o.primes) {
    for (auto const &h : corpus) {
      auto s = dirichlet_sum(
        h, p, [](long) { return true; }, [p](UnitCharacter const &xi) { return pprime_part_primitive(xi, p); });
      rows.add(label(h), p, "conjugacy classes vs sum over (C_m, xi with primitive p'-part)",
               static_cast<long>(h->class_count()), s.total);
      rows.add(label(h), p, "nonzero terms with m not dividing the exponent", 0L, s.stray);
    }
    auto complex = class_function_functor(0, Flavor::bifree(p));
    for (auto const &g : cyclic_family(p)) {
      long n_order = static_cast<long>(g->order());
      long m = p_prime_part(static_cast<int>(n_order), p);
      int n = 0;
      for (long t = n_order / m; t > 1; t /= p)
        ++n;
      for (auto const &xi : UnitCharacter::all(m)) {
        if (!xi.is_primitive())
          continue;
        auto gen = xi_mnp(m, n, p, xi);
        auto span = subfunctor_span(gen, g, Flavor::bifree(p));
        std::string q = "xi = " + xi.to_string();
        rows.add(label(g), p, "dim of the bifree span of tilde xi_{m,n,p}, " + q, 1L, static_cast<long>(span.size()));
        rows.add(label(g), p, "tilde xi_{m,n,p} killed by proper sections, " + q, true,
                 annihilated_by_proper_sections(*complex, g, gen.values));
      }
    }
  }
}

void crit_decomposition_kernel(VerifyOptions const &o, std::vector<GroupPtr> const &corpus, Rows &rows)
{
  for (int p : o.primes)
    for (auto const &h : corpus) {
      auto s = dirichlet_sum(
        h, p, [p](long m) { return m % p == 0; }, [p](UnitCharacter const &xi) { return pprime_part_primitive(xi, p); });
      long kernel = static_cast<long>(h->class_count() - support_classes(*h, p).size());
      rows.add(label(h), p, "decomposition kernel vs sum over p | m", kernel, s.total);
    }
}

bool is_type(int t, std::string const &name)
{
  return t == make_named(name)->iso_id();
}

void crit_beta_counting(VerifyOptions const &o, std::vector<GroupPtr> const &corpus, Rows &rows)
{
  for (int p : o.primes) {
    std::string cpcp = "C" + std::to_string(p) + "xC" + std::to_string(p);
    for (auto const &h : corpus) {
      long lhs = 0, rhs = 0;
      for (int t : beta_types(h, 0))
        lhs += is_type(t, cpcp);
      for (int t : beta_types(h, p)) {
        auto gb = iso_type_rep(t);
        rhs += gb->order() > 1 && is_p_power(static_cast<long>(gb->order()), p) && !gb->is_cyclic();
      }
      rows.add(label(h), p, "beta = " + cpcp + " vs beta^Delta a non-cyclic p-group", lhs, rhs);
    }
  }
  for (auto [p, q] : {std::pair{2, 3}, {3, 2}}) {
    std::string cqcq = "C" + std::to_string(q) + "xC" + std::to_string(q);
    for (auto const &h : corpus) {
      long lhs = 0, rhs = 0;
      for (int t : beta_types(h, 0))
        lhs += is_type(t, cqcq);
      for (int t : beta_types(h, p)) {
        auto gb = iso_type_rep(t);
        long n = static_cast<long>(gb->order());
        if (n % (q * q) != 0 || !is_p_power(n / (q * q), p))
          continue;
        long pp = n / (q * q);
        rhs += is_type(t, pp == 1 ? cqcq : cqcq + "xC" + std::to_string(pp));
      }
      rows.add(label(h), p, "beta = " + cqcq + " vs beta^Delta = " + cqcq + " x cyclic p-group", lhs, rhs);
    }
  }
}

void crit_structural(VerifyOptions const &o, std::vector<GroupPtr> const &corpus, Rows &rows)
{
  std::mt19937_64 rng(o.seed);
  std::vector<GroupPtr> small;
  for (auto name : {"C1", "C2", "C3", "C4", "C2xC2", "S3", "C6", "D8", "Q8"})
    small.push_back(make_named(name));
  std::vector<Flavor> flavors{Flavor::classical()};
  for (int p : o.primes)
    flavors.push_back(Flavor::bifree(p));
  auto pick = [&](auto const &v) -> decltype(v[0]) { return v[rng() % v.size()]; };
  auto random_class = [&](BasisPtr const &b) { return static_cast<int>(rng() % b->size()); };

  long mackey = 0;
  for (int t = 0; t < o.random_pairs; ++t) {
    auto h = pick(small), g = pick(small), k = pick(small);
    auto fl = pick(flavors);
    auto b1 = goursat_basis(h, g, fl), b2 = goursat_basis(g, k, fl);
    int i = random_class(b1), j = random_class(b2);
    auto x = compose(BisetElt::basis_element(b1, i), BisetElt::basis_element(b2, j));
    mackey += x == compose_by_orbits((*b1)[i], (*b2)[j], fl);
  }
  rows.add("random", 0, "Mackey formula agrees with orbit enumeration", static_cast<long>(o.random_pairs), mackey);

  auto random_elt = [&](BasisPtr const &b) {
    auto x = BisetElt::zero(b->left(), b->right(), b->flavor());
    for (int s = 0; s < 3; ++s)
      x.coeffs[random_class(b)] += static_cast<long>(rng() % 5) - 2;
    return x;
  };
  long assoc = 0, opp = 0, trials = 60;
  for (int t = 0; t < trials; ++t) {
    auto a = pick(small), b = pick(small), c = pick(small), d = pick(small);
    auto fl = pick(flavors);
    auto x = random_elt(goursat_basis(a, b, fl));
    auto y = random_elt(goursat_basis(b, c, fl));
    auto z = random_elt(goursat_basis(c, d, fl));
    assoc += compose(compose(x, y), z) == compose(x, compose(y, z));
    opp += opposite(compose(x, y)) == compose(opposite(y), opposite(x));
  }
  rows.add("random", 0, "associativity", trials, assoc);
  rows.add("random", 0, "opposite reverses composition", trials, opp);

  long fact = 0, fact_total = 0;
  for (auto [a, b] : {std::pair{"S3", "S3"}, {"D8", "C4"}, {"A4", "C3"}, {"C2xC2", "D8"}, {"Q8", "C2xC2"}})
    for (auto const &fl : flavors) {
      auto bs = goursat_basis(make_named(a), make_named(b), fl);
      for (std::size_t i = 0; i < bs->size(); ++i) {
        ++fact_total;
        fact += factorize((*bs)[i], fl).product() == BisetElt::basis_element(bs, static_cast<int>(i));
      }
    }
  rows.add("pairs", 0, "factorization round trip", fact_total, fact);

  auto random_cf = [&](GroupPtr const &g, int p) {
    auto f = ClassFunction::zero(g, p);
    for (auto &v : f.values)
      v = Cyclotomic(static_cast<long>(rng() % 7) - 3) +
          Cyclotomic::root_of_unity(g->exponent(), static_cast<long>(rng() % 12)) *
            Cyclotomic(static_cast<long>(rng() % 5) - 2);
    return f;
  };
  long func = 0, indep = 0, nat = 0, nat_total = 0;
  for (int t = 0; t < trials; ++t) {
    auto a = pick(small), b = pick(small), c = pick(small);
    auto fl = pick(flavors);
    int p = fl.p;
    auto x = random_elt(goursat_basis(a, b, fl));
    auto y = random_elt(goursat_basis(b, c, fl));
    auto f = random_cf(c, p);
    func += act(compose(x, y), f) == act(x, act(y, f));
    auto by = goursat_basis(b, c, fl);
    auto const &l = (*by)[random_class(by)];
    indep += act(l, f, fl) == act_fixed_points(l, f);
    if (p) {
      ++nat_total;
      auto full = random_cf(c, 0);
      nat += decomposition_map(act(y, full), p) == act(y, decomposition_map(full, p));
    }
  }
  rows.add("random", 0, "class function action respects composition", trials, func);
  rows.add("random", 0, "factorized action equals the fixed-point formula", trials, indep);
  rows.add("random", 0, "decomposition map commutes with bifree action", nat_total, nat);

  for (int p : o.primes) {
    std::vector<FunctorPtr> fs{class_function_functor(0, Flavor::bifree(p)), class_function_functor(p, Flavor::bifree(p))};
    for (auto const &f : fs)
      for (auto const &g : corpus) {
        auto s = splitting(*f, g);
        rows.add(label(g), p, "kernel and image sum split " + f->name(), std::string("direct"),
                 std::string(s.direct_sum() ? "direct" : "not direct"));
      }
    auto brauer = class_function_functor(p, Flavor::bifree(p));
    for (auto const &g : corpus)
      rows.add(label(g), p, "F(G) = kernel + I_G F(G) for " + brauer->name(), true, verify_condition(*brauer, g));
  }
  auto complex = class_function_functor(0, Flavor::classical());
  for (auto const &g : corpus) {
    auto s = splitting(*complex, g);
    rows.add(label(g), 0, "kernel and image sum split " + complex->name(), std::string("direct"),
             std::string(s.direct_sum() ? "direct" : "not direct"));
  }
  for (long m : {3L, 4L, 5L}) {
    auto xi = UnitCharacter::from_exponents(m, std::vector<long>(UnitCharacter::trivial(m).generators().size(), 1));
    auto f = span_functor(dirichlet_tilde(m, xi), Flavor::classical());
    for (auto const &g : corpus)
      if (g->order() <= 24)
        rows.add(label(g), 0, "F(G) = kernel + I_G F(G) for " + f->name(), true, verify_condition(*f, g));
  }
  auto bad = corrupted_functor(class_function_functor(2, Flavor::bifree(2)));
  rows.add("S3", 2, "negative control: corrupted action fails the condition", false,
           verify_condition(*bad, make_named("S3")));
}

} // namespace

std::vector<GroupPtr> default_corpus()
{
  std::vector<std::string> names;
  for (int n = 1; n <= 12; ++n)
    names.push_back("C" + std::to_string(n));
  for (auto n : {"C2xC2", "C2xC4", "C2xC2xC2", "C3xC3", "C2xC6", "C4xC4", "C2xC8", "C3xC6", "C2xC10", "C6xC6"})
    names.push_back(n);
  for (auto const &n : library_names())
    names.push_back(n);
  std::vector<GroupPtr> out;
  for (auto const &n : names) {
    auto g = make_named(n);
    if (g->order() <= 36)
      out.push_back(g);
  }
  return out;
}

std::string describe_corpus(std::vector<GroupPtr> const &corpus)
{
  std::string s;
  for (auto const &g : corpus)
    s += (s.empty() ? "" : ",") + label(g);
  return s;
}

std::vector<GroupPtr> cyclic_family(int p, int max_m, int max_n)
{
  std::vector<GroupPtr> out;
  for (int m = 1; m <= max_m; ++m) {
    if (m % p == 0)
      continue;
    int order = m;
    for (int n = 0; n <= max_n; ++n, order *= p)
      out.push_back(cyclic_group(order));
  }
  return out;
}

std::vector<VerificationId> const &verification_ids()
{
  static std::vector<VerificationId> ids{
    {"pprime-cyclic-rank", "Gram rank on KB^Delta(G) equals the number of cyclic p'-subgroup classes"},
    {"gram-diagonal", "<e_H, e_H> = phi_1(H)/|N_G(H)| for p'-classes H"},
    {"trivial-simple-sum", "sum of dim S^Delta_{G_B,K}(H) over minimal groups equals the subgroup class count"},
    {"pprime-bgroup-sum", "the same sum over p'-order minimal groups equals the p'-subgroup class count"},
    {"brauer", "Brauer class functions: restriction kernels, Out multiplicities and decomposition"},
    {"complex", "complex class functions: decomposition and the lines spanned by tilde xi_{m,n,p}"},
    {"decomposition-kernel", "kernel of the decomposition map as a sum over m divisible by p"},
    {"beta-counting", "classical versus bifree minimal quotient counts"},
    {"structural", "Mackey, associativity, factorization, action, naturality and splitting suites"},
  };
  return ids;
}

std::string resolve_verification_id(std::string const &name)
{
  auto const &ids = verification_ids();
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (name == ids[i].id || name == std::to_string(i + 1))
      return ids[i].id;
  throw ParseError("unknown verification id '" + name + "'");
}

VerificationReport run_verification(std::string const &name, VerifyOptions const &opts)
{
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.id = resolve_verification_id(name);
  for (auto const &v : verification_ids())
    if (v.id == r.id)
      r.title = v.title;
  auto corpus = opts.corpus.empty() ? default_corpus() : opts.corpus;
  r.corpus = describe_corpus(corpus);
  Rows rows{r.rows};

  if (cache_dir()) {
    std::mt19937_64 rng(opts.seed);
    for (auto const &g : corpus)
      rows.add(label(g), 0, "cache spot check", true, spot_check_table(*g, rng));
  }

  if (r.id == "pprime-cyclic-rank")
    crit_pprime_cyclic(opts, corpus, rows);
  else if (r.id == "gram-diagonal")
    crit_gram_diagonal(opts, corpus, rows);
  else if (r.id == "trivial-simple-sum")
    crit_trivial_sum(opts, corpus, rows, false);
  else if (r.id == "pprime-bgroup-sum")
    crit_trivial_sum(opts, corpus, rows, true);
  else if (r.id == "brauer")
    crit_brauer(opts, corpus, rows);
  else if (r.id == "complex")
    crit_complex(opts, corpus, rows);
  else if (r.id == "decomposition-kernel")
    crit_decomposition_kernel(opts, corpus, rows);
  else if (r.id == "beta-counting")
    crit_beta_counting(opts, corpus, rows);
  else
    crit_structural(opts, corpus, rows);

  r.pass = !r.rows.empty() && std::all_of(r.rows.begin(), r.rows.end(), [](CheckRow const &c) { return c.pass; });
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string report_to_json(VerificationReport const &r, int indent)
{
  nlohmann::json j;
  j["id"] = r.id;
  j["title"] = r.title;
  j["corpus"] = r.corpus;
  j["pass"] = r.pass;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
  j["seconds"] = std::string(buf);
  j["results"] = nlohmann::json::array();
  for (auto const &c : r.rows)
    j["results"].push_back({{"group", c.group},
                            {"p", c.p},
                            {"quantity", c.quantity},
                            {"expected", c.expected},
                            {"computed", c.computed},
                            {"pass", c.pass}});
  return j.dump(indent);
}

VerificationReport report_from_json(std::string const &text)
{
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (nlohmann::json::exception const &e) {
    throw ParseError(std::string("bad report JSON: ") + e.what());
  }
  VerificationReport r;
  r.id = j.at("id").get<std::string>();
  r.title = j.at("title").get<std::string>();
  r.corpus = j.at("corpus").get<std::string>();
  r.pass = j.at("pass").get<bool>();
  r.seconds = std::stod(j.at("seconds").get<std::string>());
  for (auto const &c : j.at("results")) {
    CheckRow row;
    row.group = c.at("group").get<std::string>();
    row.p = c.at("p").get<int>();
    row.quantity = c.at("quantity").get<std::string>();
    row.expected = c.at("expected").get<std::string>();
    row.computed = c.at("computed").get<std::string>();
    row.pass = c.at("pass").get<bool>();
    r.rows.push_back(std::move(row));
  }
  return r;
}

} // namespace bisetkit
