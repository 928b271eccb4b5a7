#include "random_instances.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>

namespace testsupport {

using namespace morphequiv;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

namespace {

bool coin(Rng& rng, double p) { return uniform(rng, 0, 1) < p; }

const std::vector<std::string> object_names{"A", "B", "C"};

// A category together with a generating set of non-identity arrows.
struct Generated {
  CategoryTables tables;
  std::vector<std::string> generators;
};

struct Lookup {
  std::map<std::string, ArrowDecl> arrows;
  std::map<std::pair<std::string, std::string>, std::string> compose;

  explicit Lookup(const CategoryTables& t) {
    for (const ArrowDecl& a : t.morphisms) arrows[a.id] = a;
    for (const Triple& e : t.compose) compose[{e[0], e[1]}] = e[2];
  }
  bool parallel(const std::string& f, const std::string& g) const {
    return arrows.at(f).dom == arrows.at(g).dom && arrows.at(f).cod == arrows.at(g).cod;
  }
};

void fill_compose(CategoryTables& t, const std::function<std::string(const std::string&, const std::string&)>& comp) {
  for (const ArrowDecl& g : t.morphisms)
    for (const ArrowDecl& f : t.morphisms)
      if (f.cod == g.dom) t.compose.push_back({g.id, f.id, comp(g.id, f.id)});
}

// Free category on a random DAG; arrows are paths named "e2.e0" (e2 after e0).
std::optional<Generated> free_dag(Rng& rng) {
  const std::size_t n = 1 + pick(rng, 3);
  if (n == 1) return std::nullopt;
  struct Edge {
    std::size_t from, to;
  };
  std::vector<Edge> edges;
  const std::size_t edge_count = 1 + pick(rng, 4);
  for (std::size_t i = 0; i < edge_count; ++i) {
    const std::size_t a = pick(rng, n - 1);
    const std::size_t b = a + 1 + pick(rng, n - 1 - a);
    edges.push_back({a, b});
  }
  // Paths as edge sequences in traversal order.
  std::vector<std::vector<std::size_t>> paths;
  std::function<void(std::vector<std::size_t>&, std::size_t)> extend = [&](std::vector<std::size_t>& p,
                                                                          std::size_t at) {
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].from == at) {
        p.push_back(e);
        paths.push_back(p);
        extend(p, edges[e].to);
        p.pop_back();
      }
  };
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> p;
    extend(p, x);
  }
  if (paths.size() + n > 8) return std::nullopt;

  auto path_name = [](const std::vector<std::size_t>& p) {
    std::string s;
    for (std::size_t i = p.size(); i-- > 0;) s += (s.empty() ? "" : ".") + ("e" + std::to_string(p[i]));
    return s;
  };
  Generated out;
  std::map<std::string, std::vector<std::size_t>> by_name;
  std::map<std::string, std::string> ids;
  for (std::size_t x = 0; x < n; ++x) {
    out.tables.objects.push_back(object_names[x]);
    const std::string id = "1" + object_names[x];
    out.tables.morphisms.push_back({id, object_names[x], object_names[x]});
    out.tables.identity[object_names[x]] = id;
    ids[id] = object_names[x];
  }
  for (const auto& p : paths) {
    const std::string name = path_name(p);
    by_name[name] = p;
    out.tables.morphisms.push_back({name, object_names[edges[p.front()].from], object_names[edges[p.back()].to]});
    if (p.size() == 1) out.generators.push_back(name);
  }
  fill_compose(out.tables, [&](const std::string& g, const std::string& f) {
    if (ids.count(g)) return f;
    if (ids.count(f)) return g;
    std::vector<std::size_t> p = by_name.at(f);
    const auto& q = by_name.at(g);
    p.insert(p.end(), q.begin(), q.end());
    return path_name(p);
  });
  return out;
}

// Thin category of a random preorder on ≤3 objects; arrows "AB".
std::optional<Generated> thin(Rng& rng) {
  const std::size_t n = 1 + pick(rng, 3);
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) le[x][x] = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && coin(rng, 0.4)) le[x][y] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  Generated out;
  for (std::size_t x = 0; x < n; ++x) out.tables.objects.push_back(object_names[x]);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (le[x][y]) {
        const std::string id = object_names[x] + object_names[y];
        out.tables.morphisms.push_back({id, object_names[x], object_names[y]});
        if (x == y) out.tables.identity[object_names[x]] = id;
        else out.generators.push_back(id);
      }
  if (out.tables.morphisms.size() > 8) return std::nullopt;
  fill_compose(out.tables, [&](const std::string& g, const std::string& f) { return f.substr(0, 1) + g.substr(1, 1); });
  return out;
}

// One-object category of a transformation monoid on 2 or 3 points; arrows
// are named by their value tables, "t021".
std::optional<Generated> monoid(Rng& rng) {
  const std::size_t s = 2 + pick(rng, 2);
  using Fn = std::vector<std::size_t>;
  auto name = [](const Fn& f) {
    std::string out = "t";
    for (std::size_t v : f) out += char('0' + v);
    return out;
  };
  Fn id(s);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Fn> gens;
  const std::size_t gen_count = 1 + pick(rng, 2);
  for (std::size_t i = 0; i < gen_count; ++i) {
    Fn g(s);
    for (auto& v : g) v = pick(rng, s);
    gens.push_back(g);
  }
  std::set<Fn> elements{id};
  std::vector<Fn> frontier{id};
  while (!frontier.empty()) {
    std::vector<Fn> next;
    for (const Fn& f : frontier)
      for (const Fn& g : gens) {
        Fn h(s);
        for (std::size_t x = 0; x < s; ++x) h[x] = g[f[x]];
        if (elements.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
    if (elements.size() > 8) return std::nullopt;
  }
  Generated out;
  out.tables.objects = {"*"};
  std::map<std::string, Fn> by_name;
  for (const Fn& f : elements) {
    out.tables.morphisms.push_back({name(f), "*", "*"});
    by_name[name(f)] = f;
  }
  out.tables.identity["*"] = name(id);
  for (const Fn& g : gens)
    if (g != id && std::find(out.generators.begin(), out.generators.end(), name(g)) == out.generators.end())
      out.generators.push_back(name(g));
  fill_compose(out.tables, [&](const std::string& g, const std::string& f) {
    const Fn& a = by_name.at(f);
    const Fn& b = by_name.at(g);
    Fn h(s);
    for (std::size_t x = 0; x < s; ++x) h[x] = b[a[x]];
    return name(h);
  });
  return out;
}

// Every arrow as a word in the generators (traversal order).
std::map<std::string, std::vector<std::string>> words(const Generated& g) {
  const Lookup look(g.tables);
  std::map<std::string, std::vector<std::string>> out;
  std::vector<std::string> frontier;
  for (const auto& [obj, id] : g.tables.identity) {
    out[id] = {};
    frontier.push_back(id);
  }
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const std::string& a : frontier)
      for (const std::string& gen : g.generators) {
        if (look.arrows.at(gen).dom != look.arrows.at(a).cod) continue;
        const std::string c = look.compose.at({gen, a});
        if (out.count(c)) continue;
        out[c] = out[a];
        out[c].push_back(gen);
        next.push_back(c);
      }
    frontier = std::move(next);
  }
  return out;
}

// Identity-on-objects endofunctor: random parallel images of the
// generators, kept only if the extension is a functor.
std::map<std::string, std::string> random_endofunctor(const Generated& g, Rng& rng) {
  const Lookup look(g.tables);
  const auto w = words(g);
  std::map<std::string, std::string> identity_fn;
  for (const ArrowDecl& a : g.tables.morphisms) identity_fn[a.id] = a.id;
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::map<std::string, std::string> image;
    for (const std::string& gen : g.generators) {
      std::vector<std::string> options;
      for (const ArrowDecl& a : g.tables.morphisms)
        if (look.parallel(a.id, gen)) options.push_back(a.id);
      image[gen] = options[pick(rng, options.size())];
    }
    std::map<std::string, std::string> f;
    for (const auto& [arrow, word] : w) {
      std::string cur = g.tables.identity.at(look.arrows.at(arrow).dom);
      for (const std::string& gen : word) cur = look.compose.at({image.at(gen), cur});
      f[arrow] = cur;
    }
    bool ok = true;
    for (const Triple& e : g.tables.compose)
      if (f.at(e[2]) != look.compose.at({f.at(e[0]), f.at(e[1])})) ok = false;
    if (ok) return f;
  }
  return identity_fn;
}

NamedMap with_identity_objects(const CategoryTables& c, std::map<std::string, std::string> morphisms) {
  NamedMap m;
  for (const std::string& x : c.objects) m.objects[x] = x;
  m.morphisms = std::move(morphisms);
  return m;
}

std::vector<std::pair<std::string, std::string>> random_seeds(const CategoryTables& c, Rng& rng, double p) {
  const Lookup look(c);
  std::vector<std::pair<std::string, std::string>> out;
  for (const ArrowDecl& f : c.morphisms)
    for (const ArrowDecl& g : c.morphisms)
      if (f.id != g.id && look.parallel(f.id, g.id) && coin(rng, p)) out.emplace_back(f.id, g.id);
  return out;
}

std::size_t preorder_size(const CategoryTables& c, const std::vector<std::pair<std::string, std::string>>& seeds) {
  return locally_preordered(c, seeds, 1).two_cells.size();
}

}  // namespace

TwoCategoryTables locally_preordered(const CategoryTables& c,
                                     const std::vector<std::pair<std::string, std::string>>& seeds,
                                     std::size_t label_modulus) {
  const Lookup look(c);
  const std::size_t n = c.morphisms.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[c.morphisms[i].id] = i;
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [f, g] : seeds) le[index.at(f)][index.at(g)] = true;

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (le[i][k] && le[k][j] && !le[i][j]) le[i][j] = changed = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!le[i][j]) continue;
        const ArrowDecl& f = c.morphisms[i];
        const ArrowDecl& g = c.morphisms[j];
        for (const ArrowDecl& k : c.morphisms) {
          if (k.dom == f.cod) {
            const std::size_t a = index.at(look.compose.at({k.id, f.id})), b = index.at(look.compose.at({k.id, g.id}));
            if (!le[a][b]) le[a][b] = changed = true;
          }
          if (k.cod == f.dom) {
            const std::size_t a = index.at(look.compose.at({f.id, k.id})), b = index.at(look.compose.at({g.id, k.id}));
            if (!le[a][b]) le[a][b] = changed = true;
          }
        }
      }
  }

  TwoCategoryTables d;
  d.objects = c.objects;
  d.one_cells = c.morphisms;
  d.identity = c.identity;
  d.compose = c.compose;
  struct Cell {
    std::size_t src, tgt, label;
  };
  std::vector<Cell> cells;
  auto cell_name = [&](std::size_t s, std::size_t t, std::size_t m) {
    return c.morphisms[s].id + "=>" + c.morphisms[t].id + "/" + std::to_string(m);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (le[i][j])
        for (std::size_t m = 0; m < label_modulus; ++m) {
          cells.push_back({i, j, m});
          d.two_cells.push_back({cell_name(i, j, m), c.morphisms[i].id, c.morphisms[j].id});
        }
  for (std::size_t i = 0; i < n; ++i) d.identity2[c.morphisms[i].id] = cell_name(i, i, 0);
  for (const Cell& first : cells)
    for (const Cell& second : cells)
      if (first.tgt == second.src)
        d.vcomp.push_back({cell_name(second.src, second.tgt, second.label), cell_name(first.src, first.tgt, first.label),
                           cell_name(first.src, second.tgt, (first.label + second.label) % label_modulus)});
  for (const Cell& a : cells) {
    const ArrowDecl& f = c.morphisms[a.src];
    const ArrowDecl& g = c.morphisms[a.tgt];
    const std::string name = cell_name(a.src, a.tgt, a.label);
    for (const ArrowDecl& k : c.morphisms) {
      if (k.dom == f.cod)
        d.whisker_left.push_back({k.id, name,
                                  cell_name(index.at(look.compose.at({k.id, f.id})),
                                            index.at(look.compose.at({k.id, g.id})), a.label)});
      if (k.cod == f.dom)
        d.whisker_right.push_back({name, k.id,
                                   cell_name(index.at(look.compose.at({f.id, k.id})),
                                             index.at(look.compose.at({g.id, k.id})), a.label)});
    }
  }
  return d;
}

std::shared_ptr<const EquivData> RandomEquivInstance::build() const {
  auto cc = FiniteCategory::load(c);
  auto dd = Finite2Category::load(d);
  MorphismMap s = resolve_map(*cc, *dd, sigma.objects, sigma.morphisms);
  MorphismMap t1 = resolve_map(*cc, *dd, tau1.objects, tau1.morphisms);
  MorphismMap t2 = resolve_map(*cc, *dd, tau2.objects, tau2.morphisms);
  return std::make_shared<const EquivData>(cc, dd, std::move(s), std::move(t1), std::move(t2));
}

RandomEquivInstance random_equiv_instance(Rng& rng) {
  for (;;) {
    std::optional<Generated> g;
    switch (pick(rng, 3)) {
      case 0: g = free_dag(rng); break;
      case 1: g = thin(rng); break;
      default: g = monoid(rng); break;
    }
    if (!g) continue;
    RandomEquivInstance out;
    out.c = g->tables;
    const Lookup look(out.c);

    std::map<std::string, std::string> sigma;
    for (const ArrowDecl& a : out.c.morphisms) {
      std::vector<std::string> options;
      for (const ArrowDecl& b : out.c.morphisms)
        if (look.parallel(a.id, b.id)) options.push_back(b.id);
      sigma[a.id] = options[pick(rng, options.size())];
    }
    out.sigma = with_identity_objects(out.c, sigma);
    out.tau1 = with_identity_objects(out.c, random_endofunctor(*g, rng));
    out.tau2 = with_identity_objects(out.c, random_endofunctor(*g, rng));

    out.seeds = random_seeds(out.c, rng, uniform(rng, 0.0, 0.5));
    const std::size_t pairs = preorder_size(out.c, out.seeds);
    if (pairs > 24) continue;
    out.label_modulus = (2 * pairs <= 24 && coin(rng, 0.5)) ? 2 : 1;
    out.d = locally_preordered(out.c, out.seeds, out.label_modulus);
    return out;
  }
}

RandomEquivInstance with_more_cells(const RandomEquivInstance& base, Rng& rng) {
  RandomEquivInstance out = base;
  auto extra = random_seeds(out.c, rng, 0.3);
  if (extra.empty()) {
    // Still pick one pair when there is any parallel pair at all.
    extra = random_seeds(out.c, rng, 1.0);
    if (!extra.empty()) extra = {extra[pick(rng, extra.size())]};
  }
  out.seeds.insert(out.seeds.end(), extra.begin(), extra.end());
  out.d = locally_preordered(out.c, out.seeds, out.label_modulus);
  return out;
}

// ---------------------------------------------------------------------------

GroupTables permutation_group(const std::vector<std::vector<std::size_t>>& generators, Rng& rng) {
  using Perm = std::vector<std::size_t>;
  const std::size_t n = generators.front().size();
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  auto mul = [&](const Perm& g, const Perm& h) {
    Perm out(n);
    for (std::size_t x = 0; x < n; ++x) out[x] = g[h[x]];
    return out;
  };
  std::vector<Perm> elements{id};
  std::set<Perm> seen{id};
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const Perm& g : generators) {
      Perm p = mul(g, elements[i]);
      if (seen.insert(p).second) elements.push_back(p);
    }
  std::shuffle(elements.begin(), elements.end(), rng);
  std::map<Perm, std::string> name;
  GroupTables t;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    name[elements[i]] = "g" + std::to_string(i);
    t.elements.push_back(name[elements[i]]);
  }
  for (const Perm& g : elements)
    for (const Perm& h : elements) t.mul.push_back({name.at(g), name.at(h), name.at(mul(g, h))});
  t.unit = name.at(id);
  return t;
}

std::vector<GroupTables> small_groups(Rng& rng) {
  std::vector<GroupTables> out;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::size_t> cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    out.push_back(permutation_group({cycle}, rng));
  }
  out.push_back(permutation_group({{1, 0, 2, 3}, {0, 1, 3, 2}}, rng));
  out.push_back(permutation_group({{1, 0, 2}, {1, 2, 0}}, rng));
  return out;
}

ActionTables random_action(const GroupTables& g, std::size_t max_carrier, Rng& rng) {
  const std::size_t n = g.elements.size();
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[g.elements[i]] = i;
  std::vector<std::size_t> mul(n * n);
  for (const Triple& e : g.mul) mul[idx.at(e[0]) * n + idx.at(e[1])] = idx.at(e[2]);
  const std::size_t unit = idx.at(g.unit);

  std::vector<std::vector<std::size_t>> subgroups;
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    if (!(mask >> unit & 1)) continue;
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a)
      for (std::size_t b = 0; b < n && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !(mask >> mul[a * n + b] & 1)) closed = false;
    if (!closed) continue;
    std::vector<std::size_t> h;
    for (std::size_t a = 0; a < n; ++a)
      if (mask >> a & 1) h.push_back(a);
    subgroups.push_back(h);
  }

  // Orbits as coset spaces; a point is (orbit, canonical coset representative set).
  std::vector<std::vector<std::set<std::size_t>>> orbit_cosets;
  std::size_t total = 0;
  do {
    std::vector<std::size_t> fitting;
    for (std::size_t s = 0; s < subgroups.size(); ++s)
      if (n / subgroups[s].size() + total <= max_carrier) fitting.push_back(s);
    if (fitting.empty()) break;
    const auto& h = subgroups[fitting[pick(rng, fitting.size())]];
    std::vector<std::set<std::size_t>> cosets;
    for (std::size_t a = 0; a < n; ++a) {
      std::set<std::size_t> c;
      for (std::size_t x : h) c.insert(mul[a * n + x]);
      if (std::find(cosets.begin(), cosets.end(), c) == cosets.end()) cosets.push_back(c);
    }
    total += cosets.size();
    orbit_cosets.push_back(std::move(cosets));
  } while (total < max_carrier && coin(rng, 0.6));

  std::vector<std::string> names;
  for (std::size_t i = 0; i < total; ++i) names.push_back(std::string(1, char('a' + i)));
  std::shuffle(names.begin(), names.end(), rng);

  ActionTables t;
  t.group = g;
  std::vector<std::pair<std::size_t, std::size_t>> points;
  for (std::size_t o = 0; o < orbit_cosets.size(); ++o)
    for (std::size_t c = 0; c < orbit_cosets[o].size(); ++c) points.emplace_back(o, c);
  for (std::size_t p = 0; p < points.size(); ++p) t.carrier.push_back(names[p]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t p = 0; p < points.size(); ++p) {
      const auto& [o, c] = points[p];
      std::set<std::size_t> moved;
      for (std::size_t x : orbit_cosets[o][c]) moved.insert(mul[a * n + x]);
      const auto& cs = orbit_cosets[o];
      const std::size_t target = std::size_t(std::find(cs.begin(), cs.end(), moved) - cs.begin());
      std::size_t q = 0;
      while (points[q] != std::make_pair(o, target)) ++q;
      t.act.push_back({g.elements[a], names[p], names[q]});
    }
  return t;
}

// ---------------------------------------------------------------------------

CMatrix gaussian(Rng& rng, Eigen::Index rows, Eigen::Index cols, bool complex) {
  std::normal_distribution<double> nd(0.0, 1.0);
  CMatrix a(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double re = nd(rng);
      a(r, c) = complex ? Complex(re, nd(rng)) : Complex(re, 0.0);
    }
  return a;
}

CVector gaussian_vector(Rng& rng, Eigen::Index n, bool complex) { return gaussian(rng, n, 1, complex).col(0); }

CMatrix random_unitary(Rng& rng, Eigen::Index n, bool complex) {
  const CMatrix a = gaussian(rng, n, n, complex);
  Eigen::HouseholderQR<CMatrix> qr(a);
  return qr.householderQ() * CMatrix::Identity(n, n);
}

BesselFamily random_family(Rng& rng, Eigen::Index n, Eigen::Index count, bool complex, Eigen::Index rank) {
  const CMatrix basis = gaussian(rng, n, rank, complex);
  const CMatrix coeffs = gaussian(rng, rank, count, complex);
  Eigen::VectorXd w(count);
  for (Eigen::Index i = 0; i < count; ++i) w(i) = uniform(rng, 0.2, 3.0);
  return BesselFamily(complex ? Field::complex : Field::real, basis * coeffs, w);
}

BesselFamily random_family(Rng& rng, Eigen::Index n, Eigen::Index count, bool complex) {
  return random_family(rng, n, count, complex, n);
}

morphequiv::Rational random_rational(Rng& rng, int max) {
  std::uniform_int_distribution<int> d(1, max);
  const int p = d(rng);
  return morphequiv::Rational(p, d(rng));
}

NumericSquare random_numeric_square(Rng& rng) {
  using namespace morphequiv;
  auto object = [&] {
    std::vector<Rational> sample(1 + pick(rng, 5));
    for (Rational& q : sample) q = random_rational(rng);
    return PreordMSetObject::numeric(sample);
  };
  // Hom(·a, ·b) on ℚ⁺ is (0, a/b], so b = a/(c·slack) admits c.
  auto slack = [&] { return coin(rng, 0.5) ? Rational(1) : 1 + random_rational(rng); };
  auto chain = [&](const ObjectRef& x, const ObjectRef& y) {
    const Rational a = random_rational(rng), c = random_rational(rng, 4), c2 = random_rational(rng, 4);
    const Rational b = a / (c * slack());
    const Rational e = b / (c2 * slack());
    const auto f = EquivariantMonotoneMap::multiplier(x, y, a);
    const auto f1 = EquivariantMonotoneMap::multiplier(x, y, b);
    const auto f2 = EquivariantMonotoneMap::multiplier(x, y, e);
    return std::pair{CentralCell::make(c, f, f1), CentralCell::make(c2, f1, f2)};
  };
  const ObjectRef x1 = object(), x2 = object(), x3 = object();
  auto [c, c_prime] = chain(x1, x2);
  auto [d, d_prime] = chain(x2, x3);
  return NumericSquare{std::move(c), std::move(c_prime), std::move(d), std::move(d_prime)};
}

}  // namespace testsupport
