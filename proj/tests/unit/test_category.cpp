#include <set>

#include "catch_amalgamated.hpp"
#include "morphequiv/category.hpp"
#include "morphequiv/errors.hpp"
#include "morphequiv/group_action.hpp"
#include "random_instances.hpp"

using namespace morphequiv;

namespace {

CategoryTables chain_abc() {
  CategoryTables t;
  t.objects = {"A", "B", "C"};
  t.morphisms = {{"1A", "A", "A"}, {"1B", "B", "B"}, {"1C", "C", "C"}, {"f", "A", "B"}, {"g", "B", "C"}, {"gf", "A", "C"}};
  t.identity = {{"A", "1A"}, {"B", "1B"}, {"C", "1C"}};
  t.compose = {{"1A", "1A", "1A"}, {"1B", "1B", "1B"}, {"1C", "1C", "1C"}, {"f", "1A", "f"}, {"1B", "f", "f"},
               {"g", "1B", "g"},   {"1C", "g", "g"},   {"gf", "1A", "gf"}, {"1C", "gf", "gf"}, {"g", "f", "gf"}};
  return t;
}

// A → C twice: h directly and g∘f through B.
CategoryTables triangle() {
  CategoryTables t;
  t.objects = {"A", "B", "C"};
  t.morphisms = {{"1A", "A", "A"}, {"1B", "B", "B"}, {"1C", "C", "C"}, {"f", "A", "B"},
                 {"g", "B", "C"},  {"h", "A", "C"},  {"gf", "A", "C"}};
  t.identity = {{"A", "1A"}, {"B", "1B"}, {"C", "1C"}};
  t.compose = {{"1A", "1A", "1A"}, {"1B", "1B", "1B"}, {"1C", "1C", "1C"}, {"f", "1A", "f"},  {"1B", "f", "f"},
               {"g", "1B", "g"},   {"1C", "g", "g"},   {"gf", "1A", "gf"}, {"1C", "gf", "gf"}, {"h", "1A", "h"},
               {"1C", "h", "h"},   {"g", "f", "gf"}};
  return t;
}

// X → Y with parallel e, f, g and the preorder e ≤ f ≤ g; 2-cells carry
// labels in Z/modulus.
CategoryTables three_parallel() {
  CategoryTables t;
  t.objects = {"X", "Y"};
  t.morphisms = {{"1X", "X", "X"}, {"1Y", "Y", "Y"}, {"e", "X", "Y"}, {"f", "X", "Y"}, {"g", "X", "Y"}};
  t.identity = {{"X", "1X"}, {"Y", "1Y"}};
  for (const char* k : {"e", "f", "g"}) {
    t.compose.push_back({k, "1X", k});
    t.compose.push_back({"1Y", k, k});
  }
  t.compose.push_back({"1X", "1X", "1X"});
  t.compose.push_back({"1Y", "1Y", "1Y"});
  return t;
}

TwoCategoryTables free_cell_chain(std::size_t modulus) {
  return testsupport::locally_preordered(three_parallel(), {{"e", "f"}, {"f", "g"}}, modulus);
}

TwoCategoryTables terminal() {
  TwoCategoryTables t;
  t.objects = {"*"};
  t.one_cells = {{"1", "*", "*"}};
  t.identity = {{"*", "1"}};
  t.compose = {{"1", "1", "1"}};
  t.two_cells = {{"i", "1", "1"}};
  t.identity2 = {{"1", "i"}};
  t.vcomp = {{"i", "i", "i"}};
  t.whisker_left = {{"1", "i", "i"}};
  t.whisker_right = {{"i", "1", "i"}};
  return t;
}

std::set<std::vector<std::string>> witnesses_of(const ValidationReport& r, const std::string& axiom) {
  std::set<std::vector<std::string>> out;
  for (const Violation& v : r.violations)
    if (v.axiom == axiom) out.insert(v.witnesses);
  return out;
}

}  // namespace

TEST_CASE("compose1 follows the table") {
  const auto c = FiniteCategory::load(chain_abc());
  CHECK(compose1(*c, "1B", "f") == "f");
  CHECK(compose1(*c, "f", "1A") == "f");
  CHECK(compose1(*c, "g", "f") == "gf");
  CHECK_THROWS_AS(compose1(*c, "f", "g"), NotComposable);
  CHECK_THROWS_AS(compose1(*c, "f", "nope"), UnknownId);
}

TEST_CASE("vcomp2 on a free chain of 2-cells") {
  const auto d = Finite2Category::load(free_cell_chain(1));
  const std::string alpha = "e=>f/0", beta = "f=>g/0";
  CHECK(vcomp2(*d, "f=>f/0", alpha) == alpha);
  CHECK(vcomp2(*d, alpha, "e=>e/0") == alpha);
  CHECK(vcomp2(*d, beta, alpha) == "e=>g/0");
  CHECK_THROWS_AS(vcomp2(*d, alpha, beta), NotComposable);
  CHECK_THROWS_AS(vcomp2(*d, "zz", beta), UnknownId);
}

TEST_CASE("whiskering by identities and of identities") {
  const auto d = Finite2Category::load(free_cell_chain(2));
  for (const CellDecl& a : d->tables().two_cells) {
    if (a.src.front() == '1') continue;
    CHECK(whisker(*d, Side::left, "1Y", a.id) == a.id);
    CHECK(whisker(*d, Side::right, "1X", a.id) == a.id);
  }
  CHECK(whisker(*d, Side::left, "1Y", "e=>e/0") == d->tables().identity2.at(compose1(*d, "1Y", "e")));
  CHECK_THROWS_AS(whisker(*d, Side::left, "e", "e=>f/0"), NotComposable);
  CHECK_THROWS_AS(whisker(*d, Side::right, "e", "e=>f/0"), NotComposable);

  // In a thin triangle with 2-cells h ⇒ gf, whiskering id2(f) by g is id2(g∘f).
  const auto tri = Finite2Category::load(testsupport::locally_preordered(triangle(), {{"h", "gf"}}, 1));
  CHECK(whisker(*tri, Side::left, "g", "f=>f/0") == tri->tables().identity2.at("gf"));
  CHECK(whisker(*tri, Side::right, "f", "g=>g/0") == tri->tables().identity2.at("gf"));
}

TEST_CASE("hcomp2 collapses on identities") {
  const auto tri = Finite2Category::load(testsupport::locally_preordered(triangle(), {{"h", "gf"}}, 1));
  CHECK(hcomp2(*tri, "g=>g/0", "f=>f/0") == tri->tables().identity2.at(compose1(*tri, "g", "f")));
  const auto d = Finite2Category::load(free_cell_chain(2));
  for (const CellDecl& a : d->tables().two_cells)
    if (a.src.front() != '1') CHECK(hcomp2(*d, "1Y=>1Y/0", a.id) == whisker(*d, Side::left, "1Y", a.id));
  CHECK_THROWS_AS(hcomp2(*d, "e=>f/0", "e=>f/0"), NotComposable);
}

TEST_CASE("both horizontal orders agree on random lawful instances") {
  testsupport::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = testsupport::random_equiv_instance(rng);
    const auto d = Finite2Category::load(inst.d);
    for (std::size_t i = 0; i < d->cell_count(); ++i)
      for (std::size_t j = 0; j < d->cell_count(); ++j) {
        const CellIndex alpha = CellIndex(i), beta = CellIndex(j);
        if (d->dom(d->src(beta)) != d->cod(d->src(alpha))) continue;
        // Independent of hcomp(): build both whiskering orders by hand.
        const CellIndex one = *d->vcomp(*d->whisker_left(d->tgt(beta), alpha), *d->whisker_right(beta, d->src(alpha)));
        const CellIndex other = *d->vcomp(*d->whisker_right(beta, d->tgt(alpha)), *d->whisker_left(d->src(beta), alpha));
        REQUIRE(one == other);
        CHECK(hcomp(*d, beta, alpha) == one);
      }
    // Whiskering by a composite 1-cell is iterated whiskering.
    for (std::size_t a = 0; a < d->cell_count(); ++a)
      for (std::size_t k = 0; k < d->arrow_count(); ++k)
        for (std::size_t kp = 0; kp < d->arrow_count(); ++kp) {
          const CellIndex alpha = CellIndex(a);
          const ArrowIndex k1 = ArrowIndex(k), k2 = ArrowIndex(kp);
          const auto kk = d->compose(k1, k2);
          if (!kk || d->dom(k2) != d->cod(d->src(alpha))) continue;
          CHECK(*d->whisker_left(*kk, alpha) == *d->whisker_left(k1, *d->whisker_left(k2, alpha)));
        }
  }
}

TEST_CASE("validation reports") {
  SECTION("terminal 2-category is lawful") {
    CHECK(validate_two_category(terminal()).ok());
    CHECK(validate_two_category(terminal()).violations.empty());
  }

  SECTION("a corrupted vcomp entry is reported with its triple") {
    TwoCategoryTables t = free_cell_chain(2);
    REQUIRE(validate_two_category(t).ok());
    for (Triple& e : t.vcomp)
      if (e[0] == "f=>g/0" && e[1] == "e=>f/0") e[2] = "e=>g/1";

    // Brute-force associativity over the corrupted table.
    std::map<std::pair<std::string, std::string>, std::string> table;
    for (const Triple& e : t.vcomp) table[{e[0], e[1]}] = e[2];
    std::set<std::vector<std::string>> expected;
    for (const auto& [ba_key, ba] : table)
      for (const auto& [cb_key, cb] : table) {
        const auto& [b, a] = ba_key;
        const auto& [c, b2] = cb_key;
        if (b2 != b) continue;
        if (table.at({c, ba}) != table.at({cb, a})) expected.insert({c, b, a});
      }
    REQUIRE_FALSE(expected.empty());
    CHECK(expected.count({"f=>g/0", "e=>f/0", "e=>e/1"}) == 1);

    const ValidationReport r = validate_two_category(t);
    CHECK_FALSE(r.ok());
    CHECK(witnesses_of(r, "vcomp associativity") == expected);
    CHECK_THROWS_AS(Finite2Category::load(t), LawViolation);
  }

  SECTION("a corrupted compose entry breaks associativity") {
    CategoryTables t = triangle();
    for (Triple& e : t.compose)
      if (e[0] == "1C" && e[1] == "gf") e[2] = "h";
    const ValidationReport r = validate_category(t);
    CHECK_FALSE(r.ok());
    CHECK(witnesses_of(r, "associativity").count({"1C", "g", "f"}) == 1);
    CHECK_FALSE(witnesses_of(r, "left unit").empty());
    CHECK_THROWS_AS(FiniteCategory::load(t), LawViolation);
  }

  SECTION("entries on non-composable pairs are rejected") {
    CategoryTables t = chain_abc();
    t.compose.push_back({"f", "g", "gf"});
    CHECK_FALSE(validate_category(t).ok());
  }

  SECTION("dangling identifiers") {
    CategoryTables t = chain_abc();
    t.compose.push_back({"g", "nope", "gf"});
    CHECK_THROWS_AS(validate_category(t), UnknownId);
  }

  SECTION("random lawful instances validate") {
    testsupport::Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      const auto inst = testsupport::random_equiv_instance(rng);
      CHECK(validate_category(inst.c).ok());
      CHECK(validate_two_category(inst.d).ok());
      CHECK(inst.c.morphisms.size() <= 8);
      CHECK(inst.d.two_cells.size() <= 24);
    }
  }
}

TEST_CASE("delooped slices are lawful 2-categories") {
  ActionTables t;
  t.group = {{"e", "s"}, {{"e", "e", "e"}, {"e", "s", "s"}, {"s", "e", "s"}, {"s", "s", "e"}}, "e"};
  t.carrier = {"a", "b", "c"};
  t.act = {{"e", "a", "a"}, {"e", "b", "b"}, {"e", "c", "c"}, {"s", "a", "b"}, {"s", "b", "a"}, {"s", "c", "c"}};
  const auto action = std::make_shared<const GroupActionInstance>(t);
  for (std::size_t len : {1, 2}) {
    const DeloopedSlice slice(action, len);
    CHECK(validate_two_category(slice).ok());
    // The materialized tables describe the same 2-category and validate too.
    const TwoCategoryTables tables = to_tables(slice);
    const auto materialized = Finite2Category::load(tables);
    REQUIRE(materialized->cell_count() == slice.cell_count());
    for (std::size_t i = 0; i < slice.cell_count(); ++i)
      for (std::size_t j = 0; j < slice.cell_count(); ++j) {
        const auto a = slice.vcomp(CellIndex(i), CellIndex(j));
        const auto b = materialized->vcomp(*materialized->find_cell(slice.cell_name(CellIndex(i))),
                                           *materialized->find_cell(slice.cell_name(CellIndex(j))));
        REQUIRE(a.has_value() == b.has_value());
        if (a) CHECK(slice.cell_name(*a) == materialized->cell_name(*b));
      }
  }
}

TEST_CASE("functor checks and the non-functorial sigma slot") {
  const auto c = FiniteCategory::load(triangle());
  const MorphismMap id = identity_map(*c);
  CHECK(check_functor(*c, *c, id).ok());
  CHECK_NOTHROW(FunctorData(*c, *c, id));

  // sigma(gf) = h keeps boundaries but not composition.
  const MorphismMap sigma = resolve_map(*c, *c, {{"A", "A"}, {"B", "B"}, {"C", "C"}},
                                        {{"1A", "1A"}, {"1B", "1B"}, {"1C", "1C"}, {"f", "f"}, {"g", "g"}, {"h", "h"}, {"gf", "h"}});
  CHECK(check_boundaries(*c, *c, sigma).ok());
  const ValidationReport r = check_functor(*c, *c, sigma);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(witnesses_of(r, "composition preservation").empty());
  CHECK_NOTHROW(MorphismFunction(*c, *c, sigma));
  CHECK_THROWS_AS(FunctorData(*c, *c, sigma), LawViolation);

  // Boundary-breaking maps are refused even in the sigma slot.
  const MorphismMap broken = resolve_map(*c, *c, {{"A", "A"}, {"B", "B"}, {"C", "C"}},
                                         {{"1A", "1A"}, {"1B", "1B"}, {"1C", "1C"}, {"f", "g"}, {"g", "g"}, {"h", "h"}, {"gf", "h"}});
  CHECK_FALSE(check_boundaries(*c, *c, broken).ok());
  CHECK_THROWS_AS(MorphismFunction(*c, *c, broken), LawViolation);
}
