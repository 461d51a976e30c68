#include <algorithm>
#include <iostream>
#include <map>
#include <memory>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bisetkit/bgroups.hpp"
#include "bisetkit/biset.hpp"
#include "bisetkit/burnside.hpp"
#include "bisetkit/cache.hpp"
#include "bisetkit/characters.hpp"
#include "bisetkit/config.hpp"
#include "bisetkit/errors.hpp"
#include "bisetkit/functors.hpp"
#include "bisetkit/isomorphism.hpp"
#include "bisetkit/subgroups.hpp"
#include "bisetkit/verify.hpp"

using namespace bisetkit;
using json = nlohmann::json;

namespace {

enum class Format { text, json, csv };

struct Globals
{
  int p = 2;
  std::size_t bound = 0;
  std::string format = "text";
  std::string cache_dir;

  Format fmt() const { return format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text; }
};

// one object per spec string, so that repeated names denote the same group
GroupPtr group(std::string const &spec)
{
  static std::map<std::string, GroupPtr> seen;
  auto &g = seen[spec];
  if (!g)
    g = make_named(spec);
  return g;
}

std::string class_label(GroupPtr const &g, int c)
{
  auto const &tab = g->subgroups();
  return std::to_string(c) + ":" + iso_label(*subgroup_of(g, tab.class_rep(c)).sub);
}

struct Table
{
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  json meta = json::object();

  void print(Format f, std::ostream &os) const
  {
    if (f == Format::json) {
      json j = meta;
      j["columns"] = columns;
      j["rows"] = rows;
      os << j.dump(2) << "\n";
      return;
    }
    if (f == Format::csv) {
      auto line = [&](std::vector<std::string> const &r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
          std::string v = r[i];
          if (v.find_first_of(",\"") != std::string::npos) {
            std::string q = "\"";
            for (char c : v)
              q += c == '"' ? std::string("\"\"") : std::string(1, c);
            v = q + "\"";
          }
          os << (i ? "," : "") << v;
        }
        os << "\n";
      };
      line(columns);
      for (auto const &r : rows)
        line(r);
      return;
    }
    std::vector<std::size_t> w(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i)
      w[i] = columns[i].size();
    for (auto const &r : rows)
      for (std::size_t i = 0; i < r.size(); ++i)
        w[i] = std::max(w[i], r[i].size());
    auto line = [&](std::vector<std::string> const &r) {
      for (std::size_t i = 0; i < r.size(); ++i)
        os << (i ? "  " : "") << std::string(w[i] - r[i].size(), ' ') << r[i];
      os << "\n";
    };
    line(columns);
    for (auto const &r : rows)
      line(r);
  }
};

int cmd_marks(Globals const &gl, std::string const &spec)
{
  auto g = group(spec);
  auto const &m = table_of_marks(g);
  Table t;
  t.meta["group"] = spec;
  t.columns.push_back("K\\H");
  for (std::size_t c = 0; c < m.size(); ++c)
    t.columns.push_back(class_label(g, static_cast<int>(c)));
  for (std::size_t k = 0; k < m.size(); ++k) {
    std::vector<std::string> r{class_label(g, static_cast<int>(k))};
    for (auto const &v : m[k])
      r.push_back(to_string(v));
    t.rows.push_back(r);
  }
  t.print(gl.fmt(), std::cout);
  return 0;
}

int cmd_idempotents(Globals const &gl, std::string const &spec)
{
  auto g = group(spec);
  std::size_t n = g->subgroups().class_count();
  Table t;
  t.meta["group"] = spec;
  t.columns.push_back("e_H");
  for (std::size_t c = 0; c < n; ++c)
    t.columns.push_back("[G/" + class_label(g, static_cast<int>(c)) + "]");
  for (std::size_t h = 0; h < n; ++h) {
    auto e = idempotent(g, static_cast<int>(h));
    std::vector<std::string> r{class_label(g, static_cast<int>(h))};
    for (auto const &v : e.coeffs)
      r.push_back(to_string(v));
    t.rows.push_back(r);
  }
  t.print(gl.fmt(), std::cout);
  return 0;
}

int cmd_deflation(Globals const &gl, std::string const &spec, std::string const &normal)
{
  auto g = group(spec);
  auto n = make_named(normal);
  auto const &tab = g->subgroups();
  for (int s : tab.normal_subgroups()) {
    if (!is_isomorphic(*subgroup_of(g, s).sub, *n))
      continue;
    auto m = deflation_number(g, s);
    if (gl.fmt() == Format::json)
      std::cout << json{{"group", spec}, {"normal", normal}, {"deflation_number", to_string(m)}}.dump(2) << "\n";
    else if (gl.fmt() == Format::csv)
      std::cout << "group,normal,deflation_number\n" << spec << "," << normal << "," << to_string(m) << "\n";
    else
      std::cout << to_string(m) << "\n";
    return 0;
  }
  throw DomainError(spec + " has no normal subgroup isomorphic to " + normal);
}

int cmd_classify(Globals const &gl, std::string const &spec)
{
  auto h = group(spec);
  auto const &tab = h->subgroups();
  auto const &bd = beta_types(h, gl.p);
  auto const &bc = beta_types(h, 0);
  Table t;
  t.meta["group"] = spec;
  t.meta["p"] = gl.p;
  t.columns = {"class", "order", "cyclic", "beta_delta", "beta"};
  for (std::size_t c = 0; c < tab.class_count(); ++c) {
    auto const &k = tab[tab.class_rep(static_cast<int>(c))];
    t.rows.push_back({class_label(h, static_cast<int>(c)), std::to_string(k.order), k.cyclic ? "yes" : "no",
                      iso_label(bd[c]), iso_label(bc[c])});
  }
  t.print(gl.fmt(), std::cout);
  return 0;
}

// ---- biset expressions

struct Term
{
  std::string kind;
  std::string big, small;
};

std::vector<Term> parse_word(std::string const &expr)
{
  std::vector<Term> out;
  std::regex term(R"(\s*(ind|res|inf|def|id)\s*\[\s*([^,\]\s]+)\s*(?:,\s*([^\]\s]+)\s*)?\]\s*)");
  std::stringstream ss(expr);
  std::string piece;
  while (std::getline(ss, piece, '.')) {
    std::smatch m;
    if (!std::regex_match(piece, m, term))
      throw ParseError("cannot parse biset term '" + piece + "'");
    Term t{m[1].str(), m[2].str(), m[3].str()};
    if ((t.kind == "id") != t.small.empty())
      throw ParseError("term '" + piece + "' has the wrong number of arguments");
    out.push_back(t);
  }
  if (out.empty())
    throw ParseError("empty biset expression");
  return out;
}

int find_subgroup_class(GroupPtr const &g, GroupPtr const &h)
{
  auto const &tab = g->subgroups();
  for (std::size_t c = 0; c < tab.class_count(); ++c) {
    int s = tab.class_rep(static_cast<int>(c));
    if (tab[s].order == static_cast<int>(h->order()) && is_isomorphic(*subgroup_of(g, s).sub, *h))
      return s;
  }
  throw DomainError(g->name() + " has no subgroup isomorphic to " + h->name());
}

int find_quotient(GroupPtr const &g, GroupPtr const &q)
{
  for (int s : g->subgroups().normal_subgroups())
    if (g->order() == q->order() * g->subgroups()[s].order && is_isomorphic(*quotient_of(g, s).group, *q))
      return s;
  throw DomainError(g->name() + " has no quotient isomorphic to " + q->name());
}

BisetElt eval_term(Term const &t, Flavor fl)
{
  auto g = group(t.big);
  if (t.kind == "id")
    return BisetElt::identity(g, fl);
  auto h = make_named(t.small);
  if (t.kind == "res" || t.kind == "ind") {
    auto const &e = subgroup_of(g, find_subgroup_class(g, h));
    return t.kind == "res" ? restriction_biset(e, fl) : induction_biset(e, fl);
  }
  auto const &q = quotient_of(g, find_quotient(g, h));
  return t.kind == "inf" ? inflation_biset(q, fl) : deflation_biset(q, fl);
}

BisetElt bridge(BisetElt const &x, BisetElt const &y)
{
  if (x.source() == y.target())
    return compose(x, y);
  auto f = find_isomorphism(*y.target(), *x.source());
  if (!f)
    throw DomainError("middle groups " + iso_label(*x.source()) + " and " + iso_label(*y.target()) +
                      " are not isomorphic");
  std::cerr << "note: identifying two copies of " << iso_label(*x.source()) << " by an arbitrary isomorphism\n";
  Isomorphism iso{y.target(), x.source(), *f};
  return compose(x, compose(isomorphism_biset(iso, x.flavor()), y));
}

std::string subgroup_label(GroupPtr const &g, int s)
{
  return iso_label(*subgroup_of(g, s).sub);
}

int cmd_biset(Globals const &gl, std::string const &expr, bool classical)
{
  Flavor fl = classical ? Flavor::classical() : Flavor::bifree(gl.p);
  auto terms = parse_word(expr);
  BisetElt x = eval_term(terms[0], fl);
  for (std::size_t i = 1; i < terms.size(); ++i)
    x = bridge(x, eval_term(terms[i], fl));

  Table t;
  t.meta["expression"] = expr;
  t.meta["flavor"] = fl.to_string();
  t.meta["target"] = iso_label(*x.target());
  t.meta["source"] = iso_label(*x.source());
  t.columns = {"coeff", "p1", "k1", "p2", "k2", "q", "|L|"};
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i] == 0)
      continue;
    auto const &c = (*x.basis)[i];
    t.rows.push_back({to_string(x.coeffs[i]), subgroup_label(c.left, c.p1()), subgroup_label(c.left, c.k1()),
                      subgroup_label(c.right, c.p2()), subgroup_label(c.right, c.k2()),
                      iso_label(*c.sec1().quotient), std::to_string(c.size())});
  }
  if (gl.fmt() == Format::text)
    std::cout << "B(" << iso_label(*x.target()) << ", " << iso_label(*x.source()) << "), " << fl.to_string() << "\n";
  t.print(gl.fmt(), std::cout);
  return 0;
}

// ---- class functions

std::vector<long> parse_longs(std::string const &s)
{
  std::vector<long> out;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, ','))
    if (!piece.empty()) {
      try {
        out.push_back(std::stol(piece));
      } catch (std::exception const &) {
        throw ParseError("expected an integer list, got '" + s + "'");
      }
    }
  return out;
}

UnitCharacter parse_unit_character(long m, std::string const &exps)
{
  if (exps.empty() || exps == "trivial")
    return UnitCharacter::trivial(m);
  return UnitCharacter::from_exponents(m, parse_longs(exps));
}

json cyclotomic_json(Cyclotomic const &c)
{
  auto r = c.reduced();
  return json{{"level", r.level()}, {"coefficients", to_strings(r.coefficients())}, {"value", r.to_string()}};
}

int cmd_charfun(Globals const &gl, std::string const &spec, long dirichlet, long xi_m, int xi_n,
                std::string const &exps, int perm_order, bool decompose)
{
  ClassFunction f;
  std::string what;
  if (dirichlet > 0) {
    f = dirichlet_tilde(dirichlet, parse_unit_character(dirichlet, exps));
    what = "dirichlet_tilde(" + std::to_string(dirichlet) + ")";
  } else if (xi_m > 0) {
    f = xi_mnp(xi_m, xi_n, gl.p, parse_unit_character(xi_m, exps));
    what = "xi_mnp(" + std::to_string(xi_m) + "," + std::to_string(xi_n) + "," + std::to_string(gl.p) + ")";
  } else {
    if (spec.empty())
      throw ParseError("charfun needs --group, --dirichlet or --xi");
    auto g = group(spec);
    int c = 0;
    if (perm_order > 0) {
      auto const &tab = g->subgroups();
      c = -1;
      for (std::size_t k = 0; k < tab.class_count(); ++k)
        if (tab[tab.class_rep(static_cast<int>(k))].order == perm_order) {
          c = static_cast<int>(k);
          break;
        }
      if (c < 0)
        throw DomainError(spec + " has no subgroup of order " + std::to_string(perm_order));
    }
    f = linearize(BurnsideElt::transitive(g, c));
    what = "permutation character of G/" + class_label(g, c);
  }
  if (decompose) {
    f = decomposition_map(f, gl.p);
    what = "decomposition map (p=" + std::to_string(gl.p) + ") of " + what;
  }
  auto const &g = *f.group;
  bool cyclic_residues = dirichlet > 0 || xi_m > 0;

  if (gl.fmt() == Format::json) {
    json j;
    j["function"] = what;
    j["group"] = iso_label(g);
    j["classes"] = json::array();
    auto sup = f.support();
    for (std::size_t i = 0; i < sup.size(); ++i) {
      int rep = g.class_reps()[sup[i]];
      json row{{"class", sup[i]}, {"order", g.element_order(rep)}, {"size", g.class_sizes()[sup[i]]},
               {"value", cyclotomic_json(f.values[i])}};
      if (cyclic_residues)
        row["residue"] = [&] {
          long m = static_cast<long>(g.order());
          for (long k = 0; k < m; ++k)
            if (cyclic_element(static_cast<int>(m), k) == rep)
              return k;
          return -1L;
        }();
      j["classes"].push_back(row);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  Table t;
  t.columns = {"class", "order", "size", "value"};
  if (cyclic_residues)
    t.columns.insert(t.columns.begin() + 1, "residue");
  auto sup = f.support();
  for (std::size_t i = 0; i < sup.size(); ++i) {
    int rep = g.class_reps()[sup[i]];
    std::vector<std::string> r{std::to_string(sup[i]), std::to_string(g.element_order(rep)),
                               std::to_string(g.class_sizes()[sup[i]]), f.values[i].reduced().to_string()};
    if (cyclic_residues) {
      long m = static_cast<long>(g.order());
      long res = 0;
      while (cyclic_element(static_cast<int>(m), res) != rep)
        ++res;
      r.insert(r.begin() + 1, std::to_string(res));
    }
    t.rows.push_back(r);
  }
  if (gl.fmt() == Format::text)
    std::cout << what << " on " << iso_label(g) << " (zK = exp(2 pi i/K))\n";
  t.print(gl.fmt(), std::cout);
  return 0;
}

int cmd_simple_dim(Globals const &gl, std::string const &g0spec, std::string const &chr, std::string const &at,
                   bool classical)
{
  Flavor fl = classical ? Flavor::classical() : Flavor::bifree(gl.p);
  std::unique_ptr<SimpleLabel> label;
  if (chr == "trivial" || chr.empty()) {
    label = std::make_unique<SimpleLabel>(SimpleLabel::trivial(group(g0spec)));
  } else if (chr.rfind("dirichlet:", 0) == 0) {
    auto g0 = make_named(g0spec);
    if (!g0->is_cyclic())
      throw DomainError("dirichlet characters need a cyclic group0");
    long m = static_cast<long>(g0->order());
    label = std::make_unique<SimpleLabel>(SimpleLabel::dirichlet(parse_unit_character(m, chr.substr(10))));
  } else {
    throw ParseError("--char must be 'trivial' or 'dirichlet:<exponents>'");
  }
  auto h = group(at);
  long d = simple_dim(*label, h, fl);
  if (gl.fmt() == Format::json)
    std::cout << json{{"label", label->to_string()}, {"at", at}, {"flavor", fl.to_string()}, {"dim", d}}.dump(2)
              << "\n";
  else if (gl.fmt() == Format::csv)
    std::cout << "group0,char,at,flavor,dim\n" << g0spec << "," << chr << "," << at << "," << fl.to_string() << "," << d << "\n";
  else
    std::cout << d << "\n";
  return 0;
}

int cmd_verify(Globals const &gl, std::vector<std::string> const &ids, std::string const &corpus, bool both_primes,
               unsigned long seed, int pairs)
{
  VerifyOptions o;
  o.primes = both_primes ? std::vector<int>{2, 3} : std::vector<int>{gl.p};
  o.seed = seed;
  o.random_pairs = pairs;
  if (!corpus.empty()) {
    std::stringstream ss(corpus);
    std::string n;
    while (std::getline(ss, n, ';'))
      if (!n.empty())
        o.corpus.push_back(make_named(n));
  }
  std::vector<std::string> run;
  for (auto const &id : ids) {
    if (id == "all")
      for (auto const &v : verification_ids())
        run.push_back(v.id);
    else
      run.push_back(resolve_verification_id(id));
  }
  bool ok = true;
  json all = json::array();
  for (auto const &id : run) {
    auto r = run_verification(id, o);
    ok = ok && r.pass;
    if (gl.fmt() == Format::json) {
      all.push_back(json::parse(report_to_json(r)));
    } else if (gl.fmt() == Format::csv) {
      std::cout << "id,group,p,quantity,expected,computed,pass\n";
      for (auto const &c : r.rows)
        std::cout << r.id << "," << c.group << "," << c.p << ",\"" << c.quantity << "\"," << c.expected << ","
                  << c.computed << "," << (c.pass ? "true" : "false") << "\n";
    } else {
      long failed = std::count_if(r.rows.begin(), r.rows.end(), [](CheckRow const &c) { return !c.pass; });
      std::cout << r.id << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.rows.size() << " checks, " << failed
                << " failed, " << r.seconds << " s)\n";
      for (auto const &c : r.rows)
        if (!c.pass)
          std::cout << "  " << c.group << " p=" << c.p << " " << c.quantity << ": expected " << c.expected
                    << ", computed " << c.computed << "\n";
    }
  }
  if (gl.fmt() == Format::json)
    std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_cache(Globals const &gl, std::string const &action)
{
  if (!cache_dir())
    throw DomainError("no cache directory: pass --cache-dir or set BISETKIT_CACHE_DIR");
  if (action == "clear") {
    auto n = cache_clear();
    if (gl.fmt() == Format::json)
      std::cout << json{{"removed", n}}.dump(2) << "\n";
    else
      std::cout << "removed " << n << " entries\n";
    return 0;
  }
  auto s = cache_stats();
  if (gl.fmt() == Format::json)
    std::cout << json{{"dir", s.dir}, {"entries", s.entries}, {"bytes", s.bytes}}.dump(2) << "\n";
  else
    std::cout << "dir " << s.dir << "\nentries " << s.entries << "\nbytes " << s.bytes << "\n";
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"bisetkit: Burnside rings, biset categories and biset functor dimensions"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals gl;
  auto *popt = app.add_option("--p", gl.p, "prime (verify runs p = 2 and p = 3 unless given)")->check(CLI::Range(2, 1000));
  app.add_option("--bound", gl.bound, "largest group order to materialize");
  app.add_option("--format", gl.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache-dir", gl.cache_dir, "directory for cached subgroup tables");

  std::string spec, normal, expr, g0, chr, at, action, corpus, exps;
  long dirichlet = 0, xi_m = 0;
  int xi_n = 0, perm = 0, pairs = 200;
  unsigned long seed = 20240501;
  bool classical = false, decompose = false;
  std::vector<std::string> ids;

  auto *marks = app.add_subcommand("marks", "table of marks");
  marks->add_option("--group", spec, "group")->required();
  auto *idem = app.add_subcommand("idempotents", "primitive idempotents in the transitive basis");
  idem->add_option("--group", spec, "group")->required();
  auto *defl = app.add_subcommand("deflation", "deflation number m_{G,N}");
  defl->add_option("--group", spec, "group")->required();
  defl->add_option("--normal", normal, "normal subgroup, by isomorphism type")->required();
  auto *cls = app.add_subcommand("classify", "minimal quotients of every subgroup class");
  cls->add_option("--group", spec, "group")->required();
  auto *bis = app.add_subcommand("biset", "expand an elementary word such as 'ind[S3,C3] . res[S3,C3]'");
  bis->add_option("expr", expr, "word")->required();
  bis->add_flag("--classical", classical, "classical bisets instead of p-bifree");
  auto *cf = app.add_subcommand("charfun", "class function tables");
  cf->add_option("--group", spec, "group (permutation character)");
  cf->add_option("--perm", perm, "order of the point stabilizer (default 1)");
  cf->add_option("--dirichlet", dirichlet, "tilde xi on C_m");
  cf->add_option("--xi", xi_m, "tilde xi_{m,n,p} on C_{m p^n}");
  cf->add_option("--n", xi_n, "exponent n for --xi");
  cf->add_option("--exps", exps, "character exponents on the unit group generators, comma separated");
  cf->add_flag("--decompose", decompose, "apply the decomposition map");
  auto *sd = app.add_subcommand("simple-dim", "dimension of a simple functor evaluation");
  sd->add_option("--group0", g0, "G0")->required();
  sd->add_option("--char", chr, "'trivial' or 'dirichlet:<exponents>'");
  sd->add_option("--at", at, "evaluation group")->required();
  sd->add_flag("--classical", classical, "classical biset functors");
  auto *ver = app.add_subcommand("verify", "run a verification over the corpus");
  ver->add_option("id", ids, "verification id, criterion number or 'all'")->required();
  ver->add_option("--corpus", corpus, "groups separated by ';'");
  ver->add_option("--seed", seed, "random seed");
  ver->add_option("--pairs", pairs, "random Mackey pairs");
  auto *cache = app.add_subcommand("cache", "cache maintenance");
  cache->add_option("action", action, "clear or stats")->required()->check(CLI::IsMember({"clear", "stats"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (gl.bound)
      set_order_bound(gl.bound);
    if (!gl.cache_dir.empty())
      set_cache_dir(gl.cache_dir);
    if (gl.p < 2 || !is_prime(gl.p))
      throw ParseError("--p must be a prime");

    if (*marks)
      return cmd_marks(gl, spec);
    if (*idem)
      return cmd_idempotents(gl, spec);
    if (*defl)
      return cmd_deflation(gl, spec, normal);
    if (*cls)
      return cmd_classify(gl, spec);
    if (*bis)
      return cmd_biset(gl, expr, classical);
    if (*cf)
      return cmd_charfun(gl, spec, dirichlet, xi_m, xi_n, exps, perm, decompose);
    if (*sd)
      return cmd_simple_dim(gl, g0, chr, at, classical);
    if (*ver)
      return cmd_verify(gl, ids, corpus, popt->count() == 0, seed, pairs);
    if (*cache)
      return cmd_cache(gl, action);
  } catch (ParseError const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
