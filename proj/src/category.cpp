#include "morphequiv/category.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "morphequiv/errors.hpp"

namespace morphequiv {

namespace detail {

inline constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();

inline std::uint64_t pair_key(std::size_t a, std::size_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

struct ArrowTable {
  std::vector<std::string> object_names;
  std::unordered_map<std::string, ObjectIndex> object_index;
  std::vector<std::string> arrow_names;
  std::unordered_map<std::string, ArrowIndex> arrow_index;
  std::vector<ObjectIndex> doms;
  std::vector<ObjectIndex> cods;
  std::vector<ArrowIndex> identities;
  std::vector<std::uint32_t> composition;  // [second * n + first]
  std::vector<std::vector<ArrowIndex>> homs;  // [from * objects + to]
  ValidationReport structural;

  ArrowTable(const std::vector<std::string>& objects, const std::vector<ArrowDecl>& arrows,
             const std::map<std::string, std::string>& identity,
             const std::vector<Triple>& compose_entries);

  ObjectIndex object(const std::string& name) const {
    auto it = object_index.find(name);
    if (it == object_index.end()) throw UnknownId(name);
    return it->second;
  }
  ArrowIndex arrow(const std::string& name) const {
    auto it = arrow_index.find(name);
    if (it == arrow_index.end()) throw UnknownId(name);
    return it->second;
  }
  std::optional<ArrowIndex> compose(ArrowIndex second, ArrowIndex first) const {
    auto v = composition[raw(second) * arrow_names.size() + raw(first)];
    if (v == none) return std::nullopt;
    return ArrowIndex{v};
  }
  std::span<const ArrowIndex> hom(ObjectIndex from, ObjectIndex to) const {
    return homs[raw(from) * object_names.size() + raw(to)];
  }
};

ArrowTable::ArrowTable(const std::vector<std::string>& objects,
                       const std::vector<ArrowDecl>& arrows,
                       const std::map<std::string, std::string>& identity,
                       const std::vector<Triple>& compose_entries) {
  for (const auto& name : objects) {
    if (!object_index.emplace(name, ObjectIndex(object_names.size())).second)
      throw SchemaError("duplicate object id: " + name);
    object_names.push_back(name);
  }
  for (const auto& decl : arrows) {
    if (!arrow_index.emplace(decl.id, ArrowIndex(arrow_names.size())).second)
      throw SchemaError("duplicate 1-cell id: " + decl.id);
    arrow_names.push_back(decl.id);
    doms.push_back(object(decl.dom));
    cods.push_back(object(decl.cod));
  }

  identities.assign(object_names.size(), ArrowIndex{none});
  for (const auto& [obj, arr] : identity) identities[raw(object(obj))] = arrow(arr);
  for (std::size_t x = 0; x < identities.size(); ++x)
    if (raw(identities[x]) == none)
      throw SchemaError("no identity given for object " + object_names[x]);

  const std::size_t n = arrow_names.size();
  composition.assign(n * n, none);
  for (const auto& [g_name, f_name, h_name] : compose_entries) {
    const auto g = arrow(g_name);
    const auto f = arrow(f_name);
    const auto h = arrow(h_name);
    if (cods[raw(f)] != doms[raw(g)]) {
      structural.add("compose defined on non-composable pair", {g_name, f_name});
      continue;
    }
    auto& slot = composition[raw(g) * n + raw(f)];
    if (slot != none && slot != raw(h)) {
      structural.add("conflicting compose entries", {g_name, f_name});
      continue;
    }
    slot = static_cast<std::uint32_t>(raw(h));
  }

  const std::size_t m = object_names.size();
  homs.assign(m * m, {});
  for (std::size_t f = 0; f < n; ++f) homs[raw(doms[f]) * m + raw(cods[f])].push_back(ArrowIndex(f));
  for (auto& h : homs)
    std::sort(h.begin(), h.end(),
              [&](ArrowIndex a, ArrowIndex b) { return arrow_names[raw(a)] < arrow_names[raw(b)]; });
}

struct CellTable {
  std::vector<std::string> names;
  std::unordered_map<std::string, CellIndex> index;
  std::vector<ArrowIndex> srcs;
  std::vector<ArrowIndex> tgts;
  std::vector<CellIndex> identities;
  std::unordered_map<std::uint64_t, std::uint32_t> vcomp;
  std::unordered_map<std::uint64_t, std::uint32_t> left;
  std::unordered_map<std::uint64_t, std::uint32_t> right;
  std::unordered_map<std::uint64_t, std::vector<CellIndex>> between;
  ValidationReport structural;

  CellTable(const ArrowTable& arrows, const TwoCategoryTables& t);

  CellIndex cell(const std::string& name) const {
    auto it = index.find(name);
    if (it == index.end()) throw UnknownId(name);
    return it->second;
  }

  static std::optional<CellIndex> lookup(const std::unordered_map<std::uint64_t, std::uint32_t>& table,
                                         std::size_t a, std::size_t b) {
    auto it = table.find(pair_key(a, b));
    if (it == table.end()) return std::nullopt;
    return CellIndex{it->second};
  }
};

CellTable::CellTable(const ArrowTable& arrows, const TwoCategoryTables& t) {
  for (const auto& decl : t.two_cells) {
    if (!index.emplace(decl.id, CellIndex(names.size())).second)
      throw SchemaError("duplicate 2-cell id: " + decl.id);
    names.push_back(decl.id);
    srcs.push_back(arrows.arrow(decl.src));
    tgts.push_back(arrows.arrow(decl.tgt));
  }

  identities.assign(arrows.arrow_names.size(), CellIndex{none});
  for (const auto& [arr, c] : t.identity2) identities[raw(arrows.arrow(arr))] = cell(c);
  for (std::size_t f = 0; f < identities.size(); ++f)
    if (raw(identities[f]) == none)
      throw SchemaError("no identity 2-cell given for 1-cell " + arrows.arrow_names[f]);

  auto insert = [this](std::unordered_map<std::uint64_t, std::uint32_t>& table, std::size_t a,
                       std::size_t b, CellIndex result, const char* what, const Triple& entry) {
    auto [it, fresh] = table.emplace(pair_key(a, b), static_cast<std::uint32_t>(raw(result)));
    if (!fresh && it->second != raw(result))
      structural.add(std::string("conflicting ") + what + " entries", {entry[0], entry[1]});
  };

  for (const auto& e : t.vcomp) {
    const auto second = cell(e[0]);
    const auto first = cell(e[1]);
    const auto result = cell(e[2]);
    if (tgts[raw(first)] != srcs[raw(second)]) {
      structural.add("vcomp defined on non-composable pair", {e[0], e[1]});
      continue;
    }
    insert(vcomp, raw(second), raw(first), result, "vcomp", e);
  }
  for (const auto& e : t.whisker_left) {
    const auto k = arrows.arrow(e[0]);
    const auto alpha = cell(e[1]);
    const auto result = cell(e[2]);
    if (arrows.doms[raw(k)] != arrows.cods[raw(srcs[raw(alpha)])]) {
      structural.add("whisker_left defined on non-composable pair", {e[0], e[1]});
      continue;
    }
    insert(left, raw(k), raw(alpha), result, "whisker_left", e);
  }
  for (const auto& e : t.whisker_right) {
    const auto alpha = cell(e[0]);
    const auto k = arrows.arrow(e[1]);
    const auto result = cell(e[2]);
    if (arrows.cods[raw(k)] != arrows.doms[raw(srcs[raw(alpha)])]) {
      structural.add("whisker_right defined on non-composable pair", {e[0], e[1]});
      continue;
    }
    insert(right, raw(alpha), raw(k), result, "whisker_right", e);
  }

  for (std::size_t a = 0; a < names.size(); ++a)
    between[pair_key(raw(srcs[a]), raw(tgts[a]))].push_back(CellIndex(a));
  for (auto& [key, cells] : between)
    std::sort(cells.begin(), cells.end(),
              [&](CellIndex a, CellIndex b) { return names[raw(a)] < names[raw(b)]; });
}

}  // namespace detail

using detail::none;

// ---------------------------------------------------------------------------

void ValidationReport::add(std::string axiom, std::vector<std::string> witnesses) {
  if (violations.size() >= max_violations) {
    truncated = true;
    return;
  }
  violations.push_back({std::move(axiom), std::move(witnesses)});
}

void ValidationReport::merge(const ValidationReport& other) {
  for (const auto& v : other.violations) add(v.axiom, v.witnesses);
  truncated = truncated || other.truncated;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.axiom << ":";
    for (const auto& w : v.witnesses) os << ' ' << w;
    os << '\n';
  }
  if (truncated) os << "(report truncated)\n";
  return os.str();
}

std::optional<CellIndex> TwoCategoryView::first_cell_between(ArrowIndex from, ArrowIndex to) const {
  auto cells = cells_between(from, to);
  if (cells.empty()) return std::nullopt;
  return cells.front();
}

// ---------------------------------------------------------------------------
// FiniteCategory

FiniteCategory::FiniteCategory(CategoryTables tables)
    : tables_(std::move(tables)),
      arrows_(std::make_unique<detail::ArrowTable>(tables_.objects, tables_.morphisms,
                                                   tables_.identity, tables_.compose)) {}

FiniteCategory::~FiniteCategory() = default;

std::shared_ptr<const FiniteCategory> FiniteCategory::load(CategoryTables tables) {
  std::shared_ptr<const FiniteCategory> c(new FiniteCategory(std::move(tables)));
  ValidationReport report = c->arrows_->structural;
  report.merge(validate_category(static_cast<const CategoryView&>(*c)));
  if (!report.ok()) throw LawViolation("category axioms violated:\n" + report.summary());
  return c;
}

ValidationReport validate_category(const CategoryTables& tables) {
  FiniteCategory c(tables);
  ValidationReport report = c.arrows_->structural;
  report.merge(validate_category(static_cast<const CategoryView&>(c)));
  return report;
}

std::size_t FiniteCategory::object_count() const { return arrows_->object_names.size(); }
std::size_t FiniteCategory::arrow_count() const { return arrows_->arrow_names.size(); }
std::string FiniteCategory::object_name(ObjectIndex x) const { return arrows_->object_names[raw(x)]; }
std::string FiniteCategory::arrow_name(ArrowIndex f) const { return arrows_->arrow_names[raw(f)]; }
std::optional<ObjectIndex> FiniteCategory::find_object(std::string_view name) const {
  auto it = arrows_->object_index.find(std::string(name));
  if (it == arrows_->object_index.end()) return std::nullopt;
  return it->second;
}
std::optional<ArrowIndex> FiniteCategory::find_arrow(std::string_view name) const {
  auto it = arrows_->arrow_index.find(std::string(name));
  if (it == arrows_->arrow_index.end()) return std::nullopt;
  return it->second;
}
ObjectIndex FiniteCategory::dom(ArrowIndex f) const { return arrows_->doms[raw(f)]; }
ObjectIndex FiniteCategory::cod(ArrowIndex f) const { return arrows_->cods[raw(f)]; }
ArrowIndex FiniteCategory::identity(ObjectIndex x) const { return arrows_->identities[raw(x)]; }
std::optional<ArrowIndex> FiniteCategory::compose(ArrowIndex second, ArrowIndex first) const {
  return arrows_->compose(second, first);
}
std::span<const ArrowIndex> FiniteCategory::hom(ObjectIndex from, ObjectIndex to) const {
  return arrows_->hom(from, to);
}

// ---------------------------------------------------------------------------
// Finite2Category

Finite2Category::Finite2Category(TwoCategoryTables tables)
    : tables_(std::move(tables)),
      arrows_(std::make_unique<detail::ArrowTable>(tables_.objects, tables_.one_cells,
                                                   tables_.identity, tables_.compose)),
      cells_(std::make_unique<detail::CellTable>(*arrows_, tables_)) {}

Finite2Category::~Finite2Category() = default;

std::shared_ptr<const Finite2Category> Finite2Category::load(TwoCategoryTables tables) {
  std::shared_ptr<const Finite2Category> d(new Finite2Category(std::move(tables)));
  ValidationReport report = d->arrows_->structural;
  report.merge(d->cells_->structural);
  report.merge(validate_two_category(static_cast<const TwoCategoryView&>(*d)));
  if (!report.ok()) throw LawViolation("2-category axioms violated:\n" + report.summary());
  return d;
}

ValidationReport validate_two_category(const TwoCategoryTables& tables) {
  Finite2Category d(tables);
  ValidationReport report = d.arrows_->structural;
  report.merge(d.cells_->structural);
  report.merge(validate_two_category(static_cast<const TwoCategoryView&>(d)));
  return report;
}

std::size_t Finite2Category::object_count() const { return arrows_->object_names.size(); }
std::size_t Finite2Category::arrow_count() const { return arrows_->arrow_names.size(); }
std::string Finite2Category::object_name(ObjectIndex x) const { return arrows_->object_names[raw(x)]; }
std::string Finite2Category::arrow_name(ArrowIndex f) const { return arrows_->arrow_names[raw(f)]; }
std::optional<ObjectIndex> Finite2Category::find_object(std::string_view name) const {
  auto it = arrows_->object_index.find(std::string(name));
  if (it == arrows_->object_index.end()) return std::nullopt;
  return it->second;
}
std::optional<ArrowIndex> Finite2Category::find_arrow(std::string_view name) const {
  auto it = arrows_->arrow_index.find(std::string(name));
  if (it == arrows_->arrow_index.end()) return std::nullopt;
  return it->second;
}
ObjectIndex Finite2Category::dom(ArrowIndex f) const { return arrows_->doms[raw(f)]; }
ObjectIndex Finite2Category::cod(ArrowIndex f) const { return arrows_->cods[raw(f)]; }
ArrowIndex Finite2Category::identity(ObjectIndex x) const { return arrows_->identities[raw(x)]; }
std::optional<ArrowIndex> Finite2Category::compose(ArrowIndex second, ArrowIndex first) const {
  return arrows_->compose(second, first);
}
std::span<const ArrowIndex> Finite2Category::hom(ObjectIndex from, ObjectIndex to) const {
  return arrows_->hom(from, to);
}

std::size_t Finite2Category::cell_count() const { return cells_->names.size(); }
std::string Finite2Category::cell_name(CellIndex a) const { return cells_->names[raw(a)]; }
std::optional<CellIndex> Finite2Category::find_cell(std::string_view name) const {
  auto it = cells_->index.find(std::string(name));
  if (it == cells_->index.end()) return std::nullopt;
  return it->second;
}
ArrowIndex Finite2Category::src(CellIndex a) const { return cells_->srcs[raw(a)]; }
ArrowIndex Finite2Category::tgt(CellIndex a) const { return cells_->tgts[raw(a)]; }
CellIndex Finite2Category::identity_cell(ArrowIndex f) const { return cells_->identities[raw(f)]; }
std::optional<CellIndex> Finite2Category::vcomp(CellIndex second, CellIndex first) const {
  return detail::CellTable::lookup(cells_->vcomp, raw(second), raw(first));
}
std::optional<CellIndex> Finite2Category::whisker_left(ArrowIndex k, CellIndex alpha) const {
  return detail::CellTable::lookup(cells_->left, raw(k), raw(alpha));
}
std::optional<CellIndex> Finite2Category::whisker_right(CellIndex alpha, ArrowIndex k) const {
  return detail::CellTable::lookup(cells_->right, raw(alpha), raw(k));
}
std::vector<CellIndex> Finite2Category::cells_between(ArrowIndex from, ArrowIndex to) const {
  auto it = cells_->between.find(detail::pair_key(raw(from), raw(to)));
  if (it == cells_->between.end()) return {};
  return it->second;
}
std::optional<CellIndex> Finite2Category::first_cell_between(ArrowIndex from, ArrowIndex to) const {
  auto it = cells_->between.find(detail::pair_key(raw(from), raw(to)));
  if (it == cells_->between.end()) return std::nullopt;
  return it->second.front();
}

// ---------------------------------------------------------------------------
// Checked composition

ArrowIndex compose_checked(const CategoryView& c, ArrowIndex second, ArrowIndex first) {
  if (c.cod(first) != c.dom(second))
    throw NotComposable("cannot compose " + c.arrow_name(second) + " after " + c.arrow_name(first));
  auto h = c.compose(second, first);
  if (!h)
    throw NotComposable("no composite recorded for " + c.arrow_name(second) + " ∘ " +
                        c.arrow_name(first));
  return *h;
}

CellIndex vcomp_checked(const TwoCategoryView& d, CellIndex second, CellIndex first) {
  if (d.tgt(first) != d.src(second))
    throw NotComposable("cannot vertically compose " + d.cell_name(second) + " after " +
                        d.cell_name(first));
  auto v = d.vcomp(second, first);
  if (!v)
    throw NotComposable("no vertical composite recorded for " + d.cell_name(second) + " ∘v " +
                        d.cell_name(first));
  return *v;
}

CellIndex whisker_left_checked(const TwoCategoryView& d, ArrowIndex k, CellIndex alpha) {
  if (d.dom(k) != d.cod(d.src(alpha)))
    throw NotComposable("cannot whisker " + d.cell_name(alpha) + " on the left by " +
                        d.arrow_name(k));
  auto w = d.whisker_left(k, alpha);
  if (!w)
    throw NotComposable("no left whisker recorded for " + d.arrow_name(k) + " ∘ " +
                        d.cell_name(alpha));
  return *w;
}

CellIndex whisker_right_checked(const TwoCategoryView& d, CellIndex alpha, ArrowIndex k) {
  if (d.cod(k) != d.dom(d.src(alpha)))
    throw NotComposable("cannot whisker " + d.cell_name(alpha) + " on the right by " +
                        d.arrow_name(k));
  auto w = d.whisker_right(alpha, k);
  if (!w)
    throw NotComposable("no right whisker recorded for " + d.cell_name(alpha) + " ∘ " +
                        d.arrow_name(k));
  return *w;
}

CellIndex hcomp(const TwoCategoryView& d, CellIndex beta, CellIndex alpha) {
  if (d.cod(d.src(alpha)) != d.dom(d.src(beta)))
    throw NotComposable("cannot horizontally compose " + d.cell_name(beta) + " with " +
                        d.cell_name(alpha));
  const CellIndex one = vcomp_checked(d, whisker_left_checked(d, d.tgt(beta), alpha),
                                      whisker_right_checked(d, beta, d.src(alpha)));
  const CellIndex other = vcomp_checked(d, whisker_right_checked(d, beta, d.tgt(alpha)),
                                        whisker_left_checked(d, d.src(beta), alpha));
  if (one != other)
    throw LawViolation("interchange fails for " + d.cell_name(beta) + " * " + d.cell_name(alpha));
  return one;
}

ObjectIndex object_or_throw(const CategoryView& c, std::string_view name) {
  auto x = c.find_object(name);
  if (!x) throw UnknownId(std::string(name));
  return *x;
}

ArrowIndex arrow_or_throw(const CategoryView& c, std::string_view name) {
  auto f = c.find_arrow(name);
  if (!f) throw UnknownId(std::string(name));
  return *f;
}

CellIndex cell_or_throw(const TwoCategoryView& d, std::string_view name) {
  auto a = d.find_cell(name);
  if (!a) throw UnknownId(std::string(name));
  return *a;
}

std::string compose1(const CategoryView& c, std::string_view second, std::string_view first) {
  return c.arrow_name(compose_checked(c, arrow_or_throw(c, second), arrow_or_throw(c, first)));
}

std::string vcomp2(const TwoCategoryView& d, std::string_view second, std::string_view first) {
  return d.cell_name(vcomp_checked(d, cell_or_throw(d, second), cell_or_throw(d, first)));
}

std::string whisker(const TwoCategoryView& d, Side side, std::string_view k, std::string_view alpha) {
  const auto arrow = arrow_or_throw(d, k);
  const auto cell = cell_or_throw(d, alpha);
  return d.cell_name(side == Side::left ? whisker_left_checked(d, arrow, cell)
                                        : whisker_right_checked(d, cell, arrow));
}

std::string hcomp2(const TwoCategoryView& d, std::string_view beta, std::string_view alpha) {
  return d.cell_name(hcomp(d, cell_or_throw(d, beta), cell_or_throw(d, alpha)));
}

// ---------------------------------------------------------------------------
// Maps

MorphismMap resolve_map(const CategoryView& c, const CategoryView& d,
                        const std::map<std::string, std::string>& objects,
                        const std::map<std::string, std::string>& arrows) {
  MorphismMap map;
  map.on_objects.assign(c.object_count(), ObjectIndex{none});
  map.on_arrows.assign(c.arrow_count(), ArrowIndex{none});
  for (const auto& [from, to] : objects) map.on_objects[raw(object_or_throw(c, from))] = object_or_throw(d, to);
  for (const auto& [from, to] : arrows) map.on_arrows[raw(arrow_or_throw(c, from))] = arrow_or_throw(d, to);
  for (std::size_t x = 0; x < map.on_objects.size(); ++x)
    if (raw(map.on_objects[x]) == none)
      throw SchemaError("object " + c.object_name(ObjectIndex(x)) + " is not mapped");
  for (std::size_t f = 0; f < map.on_arrows.size(); ++f)
    if (raw(map.on_arrows[f]) == none)
      throw SchemaError("morphism " + c.arrow_name(ArrowIndex(f)) + " is not mapped");
  return map;
}

ValidationReport check_boundaries(const CategoryView& c, const CategoryView& d,
                                  const MorphismMap& map) {
  ValidationReport report;
  if (map.on_objects.size() != c.object_count() || map.on_arrows.size() != c.arrow_count()) {
    report.add("map size", {});
    return report;
  }
  for (std::size_t i = 0; i < c.arrow_count(); ++i) {
    const ArrowIndex f = ArrowIndex(i);
    const ArrowIndex image = map.on_arrows[i];
    if (d.dom(image) != map.on_objects[raw(c.dom(f))] || d.cod(image) != map.on_objects[raw(c.cod(f))])
      report.add("boundary", {c.arrow_name(f), d.arrow_name(image)});
  }
  return report;
}

ValidationReport check_functor(const CategoryView& c, const CategoryView& d, const MorphismMap& map) {
  ValidationReport report = check_boundaries(c, d, map);
  if (!report.ok()) return report;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    const ObjectIndex obj = ObjectIndex(x);
    if (map.on_arrows[raw(c.identity(obj))] != d.identity(map.on_objects[x]))
      report.add("identity preservation", {c.object_name(obj)});
  }
  for (std::size_t i = 0; i < c.arrow_count(); ++i) {
    for (std::size_t j = 0; j < c.arrow_count(); ++j) {
      const ArrowIndex g = ArrowIndex(i), f = ArrowIndex(j);
      if (c.cod(f) != c.dom(g)) continue;
      auto gf = c.compose(g, f);
      auto image = d.compose(map.on_arrows[i], map.on_arrows[j]);
      if (!gf || !image || map.on_arrows[raw(*gf)] != *image)
        report.add("composition preservation", {c.arrow_name(g), c.arrow_name(f)});
    }
  }
  return report;
}

MorphismFunction::MorphismFunction(const CategoryView& c, const CategoryView& d, MorphismMap map)
    : map_(std::move(map)) {
  auto report = check_boundaries(c, d, map_);
  if (!report.ok()) throw LawViolation("morphism function breaks boundaries:\n" + report.summary());
}

FunctorData::FunctorData(const CategoryView& c, const CategoryView& d, MorphismMap map)
    : map_(std::move(map)) {
  auto report = check_functor(c, d, map_);
  if (!report.ok()) throw LawViolation("not a functor:\n" + report.summary());
}

MorphismMap identity_map(const CategoryView& c) {
  MorphismMap map;
  for (std::size_t x = 0; x < c.object_count(); ++x) map.on_objects.push_back(ObjectIndex(x));
  for (std::size_t f = 0; f < c.arrow_count(); ++f) map.on_arrows.push_back(ArrowIndex(f));
  return map;
}

// ---------------------------------------------------------------------------
// Materialization

namespace {

template <typename Tables>
void fill_one_skeleton(const CategoryView& c, Tables& t, std::vector<ArrowDecl>& arrows) {
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    t.objects.push_back(c.object_name(ObjectIndex(x)));
    t.identity[t.objects.back()] = c.arrow_name(c.identity(ObjectIndex(x)));
  }
  for (std::size_t i = 0; i < c.arrow_count(); ++i) {
    const ArrowIndex f = ArrowIndex(i);
    arrows.push_back({c.arrow_name(f), c.object_name(c.dom(f)), c.object_name(c.cod(f))});
  }
  for (std::size_t i = 0; i < c.arrow_count(); ++i)
    for (std::size_t j = 0; j < c.arrow_count(); ++j) {
      const ArrowIndex g = ArrowIndex(i), f = ArrowIndex(j);
      if (c.cod(f) != c.dom(g)) continue;
      if (auto gf = c.compose(g, f)) t.compose.push_back({arrows[i].id, arrows[j].id, c.arrow_name(*gf)});
    }
}

}  // namespace

CategoryTables to_tables(const CategoryView& c) {
  CategoryTables t;
  fill_one_skeleton(c, t, t.morphisms);
  return t;
}

TwoCategoryTables to_tables(const TwoCategoryView& d) {
  TwoCategoryTables t;
  fill_one_skeleton(d, t, t.one_cells);
  const std::size_t n = d.cell_count();
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    const CellIndex a = CellIndex(i);
    names[i] = d.cell_name(a);
    t.two_cells.push_back({names[i], d.arrow_name(d.src(a)), d.arrow_name(d.tgt(a))});
  }
  for (std::size_t f = 0; f < d.arrow_count(); ++f)
    t.identity2[t.one_cells[f].id] = d.cell_name(d.identity_cell(ArrowIndex(f)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const CellIndex b = CellIndex(i), a = CellIndex(j);
      if (d.tgt(a) != d.src(b)) continue;
      if (auto ba = d.vcomp(b, a)) t.vcomp.push_back({names[i], names[j], names[raw(*ba)]});
    }
  for (std::size_t f = 0; f < d.arrow_count(); ++f)
    for (std::size_t i = 0; i < n; ++i) {
      const ArrowIndex k = ArrowIndex(f);
      const CellIndex a = CellIndex(i);
      if (d.dom(k) == d.cod(d.src(a)))
        if (auto ka = d.whisker_left(k, a)) t.whisker_left.push_back({t.one_cells[f].id, names[i], names[raw(*ka)]});
      if (d.cod(k) == d.dom(d.src(a)))
        if (auto ak = d.whisker_right(a, k)) t.whisker_right.push_back({names[i], t.one_cells[f].id, names[raw(*ak)]});
    }
  return t;
}

}  // namespace morphequiv
