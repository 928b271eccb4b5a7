#include <filesystem>
#include <map>
#include <set>

#include "catch_amalgamated.hpp"
#include "morphequiv/equivalence.hpp"
#include "morphequiv/errors.hpp"
#include "morphequiv/io.hpp"
#include "random_instances.hpp"

using namespace morphequiv;

namespace {

const std::filesystem::path data_dir = MORPHEQUIV_DATA_DIR;

io::EquivInstance parallel() { return io::load_equiv(data_dir / "parallel_equiv.json"); }

ArrowIndex arrow(const EquivData& e, std::string_view name) { return arrow_or_throw(e.c(), name); }

// 1_{tau1(x)} *h alpha *h 1_{tau2(y)} from raw whiskering.
CellIndex sandwich(const EquivData& e, ArrowIndex x, CellIndex alpha, ArrowIndex y) {
  const auto right = e.d().whisker_right(alpha, e.tau2()(y));
  REQUIRE(right);
  const auto both = e.d().whisker_left(e.tau1()(x), *right);
  REQUIRE(both);
  return *both;
}

CellIndex vc(const EquivData& e, CellIndex second, CellIndex first) {
  const auto r = e.d().vcomp(second, first);
  REQUIRE(r);
  return *r;
}

ArrowIndex cc(const CategoryView& c, ArrowIndex second, ArrowIndex first) {
  const auto r = c.compose(second, first);
  REQUIRE(r);
  return *r;
}

MorphismMap by_name(const CategoryView& c, const CategoryView& d) {
  std::map<std::string, std::string> objects, arrows;
  for (std::size_t i = 0; i < c.object_count(); ++i) objects[c.object_name(ObjectIndex(i))] = c.object_name(ObjectIndex(i));
  for (std::size_t i = 0; i < c.arrow_count(); ++i) arrows[c.arrow_name(ArrowIndex(i))] = c.arrow_name(ArrowIndex(i));
  return resolve_map(c, d, objects, arrows);
}

std::vector<ArrowIndex> all_arrows(const CategoryView& c) {
  std::vector<ArrowIndex> out;
  for (std::size_t i = 0; i < c.arrow_count(); ++i) out.push_back(ArrowIndex(i));
  return out;
}

}  // namespace

TEST_CASE("composite boundary") {
  const auto inst = parallel();
  const EquivData& e = *inst.data;
  CHECK(composite_boundary(e, "1B", "m", "1A") == "m");
  CHECK(composite_boundary(e, "1B", "n", "1A") == "n");
  CHECK_THROWS_AS(composite_boundary(e, "m", "m", "1A"), NotComposable);
  CHECK_THROWS_AS(composite_boundary(e, "1B", "zz", "1A"), UnknownId);

  testsupport::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto r = testsupport::random_equiv_instance(rng);
    const auto data = r.build();
    const CategoryView& c = data->c();
    for (std::size_t mi = 0; mi < c.arrow_count(); ++mi)
      for (std::size_t ui = 0; ui < c.arrow_count(); ++ui)
        for (std::size_t wi = 0; wi < c.arrow_count(); ++wi) {
          const auto m = ArrowIndex(mi), u1 = ArrowIndex(ui), u2 = ArrowIndex(wi);
          if (c.dom(u1) != c.cod(m) || c.cod(u2) != c.dom(m)) continue;
          const ArrowIndex k = composite_boundary(*data, u1, m, u2);
          CHECK(data->d().dom(k) == data->sigma()(c.dom(u2)));
          CHECK(data->d().cod(k) == data->sigma()(c.cod(u1)));
          // Identities in C collapse the composite to sigma(m).
          if (u1 == c.identity(c.cod(m)) && u2 == c.identity(c.dom(m))) CHECK(k == data->sigma()(m));
        }
  }
}

TEST_CASE("verification on the parallel-arrows instance") {
  const auto inst = parallel();
  const EquivData& e = *inst.data;
  const ArrowIndex m = arrow(e, "m"), n = arrow(e, "n");

  const Witness refl = derive_reflexivity(e, m);
  const WitnessNames rn = names_of(e, refl);
  CHECK(rn == WitnessNames{"1B", "1A", "1B", "1A", "im", "im", "im", "im"});
  CHECK(verify_witness(e, m, m, refl));

  WitnessNames bad = rn;
  bad.u1 = "m";
  const VerifyResult vr = verify_witness(e, m, m, witness_from_names(e, bad));
  CHECK_FALSE(vr.ok);
  CHECK(vr.diagnostic == "u1 boundary");

  bad = rn;
  bad.phi = "a";
  CHECK(verify_witness(e, m, m, witness_from_names(e, bad)).diagnostic == "phi boundary");

  const SearchResult mn = are_equivalent(e, m, n);
  REQUIRE(mn);
  CHECK(names_of(e, *mn.witness) == WitnessNames{"1B", "1A", "1B", "1A", "a", "b", "b", "a"});
  CHECK(verify_witness(e, m, n, *mn.witness));

  const Witness sym = derive_symmetry(e, m, n, *mn.witness);
  CHECK(names_of(e, sym) == WitnessNames{"1B", "1A", "1B", "1A", "b", "a", "a", "b"});
  CHECK(verify_witness(e, n, m, sym));

  // Hom(B, A) is empty, so m and 1A can never be compared.
  CHECK_FALSE(are_equivalent(e, "m", "1A"));
  CHECK_FALSE(are_equivalent(e, "1A", "m"));
  CHECK(are_equivalent(e, "m", "m").witness == refl);

  CHECK_THROWS_AS(derive_symmetry(e, m, n, refl), InvalidPremise);
  CHECK_THROWS_AS(derive_transitivity(e, m, n, m, refl, refl), InvalidPremise);
  CHECK_THROWS_AS(witness_from_names(e, WitnessNames{"zz", "1A", "1B", "1A", "a", "b", "b", "a"}), UnknownId);

  CHECK(equivalence_classes(e) == std::vector<std::vector<std::string>>{{"1A"}, {"1B"}, {"m", "n"}});
}

TEST_CASE("degenerate D with identity 2-cells only") {
  auto inst = parallel();
  TwoCategoryTables t = io::two_category_from_json(io::read_text(data_dir / "parallel_2category.json"));
  auto strip = [](std::vector<Triple>& v, const std::set<std::string>& cells) {
    std::erase_if(v, [&](const Triple& x) {
      return cells.count(x[0]) || cells.count(x[1]) || cells.count(x[2]);
    });
  };
  std::erase_if(t.two_cells, [](const CellDecl& c) { return c.id == "a" || c.id == "b"; });
  strip(t.vcomp, {"a", "b"});
  strip(t.whisker_left, {"a", "b"});
  strip(t.whisker_right, {"a", "b"});
  const auto d = Finite2Category::load(t);
  const auto id = by_name(inst.data->c(), *d);
  const EquivData e(inst.data->c_ptr(), d, id, id, id);
  CHECK(equivalence_classes(e) == std::vector<std::vector<std::string>>{{"1A"}, {"1B"}, {"m"}, {"n"}});
}

TEST_CASE("sigma need not be functorial") {
  CategoryTables t;
  t.objects = {"A", "B", "C"};
  t.morphisms = {{"1A", "A", "A"}, {"1B", "B", "B"}, {"1C", "C", "C"}, {"f", "A", "B"},
                 {"g", "B", "C"},  {"h", "A", "C"},  {"gf", "A", "C"}};
  t.identity = {{"A", "1A"}, {"B", "1B"}, {"C", "1C"}};
  t.compose = {{"1A", "1A", "1A"}, {"1B", "1B", "1B"}, {"1C", "1C", "1C"}, {"f", "1A", "f"},  {"1B", "f", "f"},
               {"g", "1B", "g"},   {"1C", "g", "g"},   {"gf", "1A", "gf"}, {"1C", "gf", "gf"}, {"h", "1A", "h"},
               {"1C", "h", "h"},   {"g", "f", "gf"}};
  const auto c = FiniteCategory::load(t);
  const auto d = Finite2Category::load(testsupport::locally_preordered(t, {}, 1));
  const auto id = by_name(*c, *d);
  const MorphismMap sigma = resolve_map(*c, *d, {{"A", "A"}, {"B", "B"}, {"C", "C"}},
                                        {{"1A", "1A"}, {"1B", "1B"}, {"1C", "1C"}, {"f", "f"}, {"g", "g"}, {"h", "h"}, {"gf", "h"}});
  REQUIRE_FALSE(check_functor(*c, *d, sigma).ok());
  const EquivData e(c, d, sigma, id, id);
  // gf and h now have the same sigma-image, so they are equivalent.
  CHECK(are_equivalent(e, "gf", "h"));

  const MorphismMap swapped = resolve_map(*c, *d, {{"A", "B"}, {"B", "A"}, {"C", "C"}},
                                          {{"1A", "1B"}, {"1B", "1A"}, {"1C", "1C"}, {"f", "f"}, {"g", "g"}, {"h", "h"}, {"gf", "gf"}});
  CHECK_THROWS_AS(EquivData(c, d, swapped, id, id), LawViolation);
  CHECK_THROWS_AS(EquivData(c, d, id, sigma, id), LawViolation);
}

TEST_CASE("constructors on random instances") {
  testsupport::Rng rng(17);
  std::size_t transitivity_checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto r = testsupport::random_equiv_instance(rng);
    const auto data = r.build();
    const EquivData& e = *data;
    const CategoryView& c = e.c();
    const std::size_t n = c.arrow_count();

    std::map<std::pair<std::size_t, std::size_t>, Witness> found;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const SearchResult s = are_equivalent(e, ArrowIndex(i), ArrowIndex(j));
        CHECK(s.equivalent == are_equivalent(e, ArrowIndex(j), ArrowIndex(i)).equivalent);
        if (!s) continue;
        REQUIRE(verify_witness(e, ArrowIndex(i), ArrowIndex(j), *s.witness));
        found.emplace(std::pair{i, j}, *s.witness);
      }

    for (std::size_t i = 0; i < n; ++i) {
      const auto m = ArrowIndex(i);
      const Witness w = derive_reflexivity(e, m);
      CHECK(verify_witness(e, m, m, w));
      if (e.tau1()(c.identity(c.cod(m))) == e.d().identity(e.d().cod(e.sigma()(m))))
        CHECK(found.count({i, i}) == 1);
    }

    for (const auto& [key, w] : found) {
      const auto m = ArrowIndex(key.first), mt = ArrowIndex(key.second);
      const Witness s = derive_symmetry(e, m, mt, w);
      CHECK(verify_witness(e, mt, m, s));
      CHECK(s == Witness{w.v1, w.v2, w.u1, w.u2, w.psi, w.psi_tilde, w.phi, w.phi_tilde});
    }

    for (const auto& [k1, w1] : found)
      for (const auto& [k2, w2] : found) {
        if (k1.second != k2.first) continue;
        const auto m = ArrowIndex(k1.first), mb = ArrowIndex(k1.second), mbb = ArrowIndex(k2.second);
        const Witness t = derive_transitivity(e, m, mb, mbb, w1, w2);
        REQUIRE(verify_witness(e, m, mbb, t));
        CHECK(t.u1 == cc(c, w2.u1, w1.u1));
        CHECK(t.u2 == cc(c, w1.u2, w2.u2));
        CHECK(t.v1 == cc(c, w1.v1, w2.v1));
        CHECK(t.v2 == cc(c, w2.v2, w1.v2));
        CHECK(e.tau1()(t.u1) == cc(e.d(), e.tau1()(w2.u1), e.tau1()(w1.u1)));
        CHECK(e.tau2()(t.u2) == cc(e.d(), e.tau2()(w1.u2), e.tau2()(w2.u2)));
        CHECK(t.phi == vc(e, w2.phi, sandwich(e, w2.u1, w1.phi, w2.u2)));
        CHECK(t.phi_tilde == vc(e, sandwich(e, w2.u1, w1.phi_tilde, w2.u2), w2.phi_tilde));
        CHECK(t.psi == vc(e, w1.psi, sandwich(e, w1.v1, w2.psi, w1.v2)));
        CHECK(t.psi_tilde == vc(e, sandwich(e, w1.v1, w2.psi_tilde, w1.v2), w1.psi_tilde));
        ++transitivity_checked;
      }

    // Upper triangle plus closure against the all-pairs partition.
    std::set<std::vector<std::string>> all_pairs;
    for (std::size_t i = 0; i < n; ++i) {
      std::set<std::string> block;
      for (std::size_t j = 0; j < n; ++j)
        if (found.count({i, j})) block.insert(c.arrow_name(ArrowIndex(j)));
      all_pairs.insert({block.begin(), block.end()});
    }
    const auto classes = equivalence_classes(e);
    CHECK(std::set<std::vector<std::string>>(classes.begin(), classes.end()) == all_pairs);
    CHECK(equivalence_classes(e, all_arrows(c)) == classes);

    // Adding 2-cells never destroys an equivalence.
    const auto more = testsupport::with_more_cells(r, rng);
    const auto bigger = more.build();
    for (const auto& [key, w] : found)
      CHECK(are_equivalent(*bigger, c.arrow_name(ArrowIndex(key.first)), c.arrow_name(ArrowIndex(key.second))));
  }
  CHECK(transitivity_checked > 100);
}
