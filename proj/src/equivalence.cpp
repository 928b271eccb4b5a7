#include "morphequiv/equivalence.hpp"

#include <algorithm>

#include "morphequiv/errors.hpp"
#include "morphequiv/union_find.hpp"

namespace morphequiv {

EquivData::EquivData(std::shared_ptr<const CategoryView> c, std::shared_ptr<const TwoCategoryView> d,
                     MorphismMap sigma, MorphismMap tau1, MorphismMap tau2)
    : c_(std::move(c)),
      d_(std::move(d)),
      sigma_(*c_, *d_, std::move(sigma)),
      tau1_(*c_, *d_, std::move(tau1)),
      tau2_(*c_, *d_, std::move(tau2)) {
  if (sigma_.map().on_objects != tau1_.map().on_objects ||
      sigma_.map().on_objects != tau2_.map().on_objects)
    throw LawViolation("sigma, tau1 and tau2 must coincide on objects");
}

WitnessNames names_of(const EquivData& e, const Witness& w) {
  const auto& c = e.c();
  const auto& d = e.d();
  return {c.arrow_name(w.u1), c.arrow_name(w.u2), c.arrow_name(w.v1), c.arrow_name(w.v2),
          d.cell_name(w.phi), d.cell_name(w.phi_tilde), d.cell_name(w.psi), d.cell_name(w.psi_tilde)};
}

Witness witness_from_names(const EquivData& e, const WitnessNames& n) {
  const auto& c = e.c();
  const auto& d = e.d();
  return {arrow_or_throw(c, n.u1), arrow_or_throw(c, n.u2), arrow_or_throw(c, n.v1),
          arrow_or_throw(c, n.v2), cell_or_throw(d, n.phi), cell_or_throw(d, n.phi_tilde),
          cell_or_throw(d, n.psi), cell_or_throw(d, n.psi_tilde)};
}

namespace {

void require_arrow(const CategoryView& c, ArrowIndex f) {
  if (raw(f) >= c.arrow_count()) throw UnknownId("#" + std::to_string(raw(f)));
}

void require_cell(const TwoCategoryView& d, CellIndex a) {
  if (raw(a) >= d.cell_count()) throw UnknownId("#" + std::to_string(raw(a)));
}

// tau1(u1) ∘ sigma(m) ∘ tau2(u2) without the C-side boundary check.
std::optional<ArrowIndex> composite_in_d(const EquivData& e, ArrowIndex u1, ArrowIndex m, ArrowIndex u2) {
  const auto& d = e.d();
  auto inner = d.compose(e.sigma()(m), e.tau2()(u2));
  if (!inner) return std::nullopt;
  return d.compose(e.tau1()(u1), *inner);
}

struct Half {
  ArrowIndex first;
  ArrowIndex second;
  CellIndex forward;
  CellIndex backward;
};

// First (u1, u2, phi, phiTilde) in name order with
// phi: tau1(u1) ∘ sigma(m) ∘ tau2(u2) ⇒ sigma(target) and phiTilde reversed.
std::optional<Half> search_half(const EquivData& e, ArrowIndex m, ArrowIndex target) {
  const auto& c = e.c();
  const auto& d = e.d();
  const ArrowIndex goal = e.sigma()(target);
  for (ArrowIndex u1 : c.hom(c.cod(m), c.cod(target))) {
    for (ArrowIndex u2 : c.hom(c.dom(target), c.dom(m))) {
      auto composite = composite_in_d(e, u1, m, u2);
      if (!composite) continue;
      auto forward = d.first_cell_between(*composite, goal);
      if (!forward) continue;
      auto backward = d.first_cell_between(goal, *composite);
      if (!backward) continue;
      return Half{u1, u2, *forward, *backward};
    }
  }
  return std::nullopt;
}

}  // namespace

ArrowIndex composite_boundary(const EquivData& e, ArrowIndex u1, ArrowIndex m, ArrowIndex u2) {
  const auto& c = e.c();
  require_arrow(c, u1);
  require_arrow(c, m);
  require_arrow(c, u2);
  if (c.dom(u1) != c.cod(m))
    throw NotComposable("u1 " + c.arrow_name(u1) + " does not start at the codomain of " + c.arrow_name(m));
  if (c.cod(u2) != c.dom(m))
    throw NotComposable("u2 " + c.arrow_name(u2) + " does not end at the domain of " + c.arrow_name(m));
  const auto& d = e.d();
  return compose_checked(d, e.tau1()(u1), compose_checked(d, e.sigma()(m), e.tau2()(u2)));
}

std::string composite_boundary(const EquivData& e, std::string_view u1, std::string_view m,
                               std::string_view u2) {
  const auto& c = e.c();
  return e.d().arrow_name(
      composite_boundary(e, arrow_or_throw(c, u1), arrow_or_throw(c, m), arrow_or_throw(c, u2)));
}

VerifyResult verify_witness(const EquivData& e, ArrowIndex m, ArrowIndex mt, const Witness& w) {
  const auto& c = e.c();
  const auto& d = e.d();
  for (ArrowIndex f : {m, mt, w.u1, w.u2, w.v1, w.v2}) require_arrow(c, f);
  for (CellIndex a : {w.phi, w.phi_tilde, w.psi, w.psi_tilde}) require_cell(d, a);

  auto fail = [](const char* what) { return VerifyResult{false, what}; };
  if (c.dom(w.u1) != c.cod(m) || c.cod(w.u1) != c.cod(mt)) return fail("u1 boundary");
  if (c.dom(w.u2) != c.dom(mt) || c.cod(w.u2) != c.dom(m)) return fail("u2 boundary");
  if (c.dom(w.v1) != c.cod(mt) || c.cod(w.v1) != c.cod(m)) return fail("v1 boundary");
  if (c.dom(w.v2) != c.dom(m) || c.cod(w.v2) != c.dom(mt)) return fail("v2 boundary");

  const auto forward = composite_in_d(e, w.u1, m, w.u2);
  const auto backward = composite_in_d(e, w.v1, mt, w.v2);
  const ArrowIndex sm = e.sigma()(m), smt = e.sigma()(mt);
  if (!forward || d.src(w.phi) != *forward || d.tgt(w.phi) != smt) return fail("phi boundary");
  if (d.src(w.phi_tilde) != smt || d.tgt(w.phi_tilde) != *forward) return fail("phiTilde boundary");
  if (!backward || d.src(w.psi) != *backward || d.tgt(w.psi) != sm) return fail("psi boundary");
  if (d.src(w.psi_tilde) != sm || d.tgt(w.psi_tilde) != *backward) return fail("psiTilde boundary");
  return {true, {}};
}

SearchResult are_equivalent(const EquivData& e, ArrowIndex m, ArrowIndex mt) {
  require_arrow(e.c(), m);
  require_arrow(e.c(), mt);
  auto u = search_half(e, m, mt);
  if (!u) return {};
  auto v = search_half(e, mt, m);
  if (!v) return {};
  return {true, Witness{u->first, u->second, v->first, v->second, u->forward, u->backward,
                        v->forward, v->backward}};
}

SearchResult are_equivalent(const EquivData& e, std::string_view m, std::string_view mt) {
  return are_equivalent(e, arrow_or_throw(e.c(), m), arrow_or_throw(e.c(), mt));
}

Witness derive_reflexivity(const EquivData& e, ArrowIndex m) {
  const auto& c = e.c();
  require_arrow(c, m);
  const ArrowIndex id_b = c.identity(c.cod(m));
  const ArrowIndex id_a = c.identity(c.dom(m));
  const CellIndex id2 = e.d().identity_cell(e.sigma()(m));
  return {id_b, id_a, id_b, id_a, id2, id2, id2, id2};
}

Witness derive_symmetry(const EquivData& e, ArrowIndex m, ArrowIndex mt, const Witness& w) {
  if (auto check = verify_witness(e, m, mt, w); !check)
    throw InvalidPremise("symmetry premise fails: " + check.diagnostic);
  return {w.v1, w.v2, w.u1, w.u2, w.psi, w.psi_tilde, w.phi, w.phi_tilde};
}

Witness derive_transitivity(const EquivData& e, ArrowIndex m, ArrowIndex mb, ArrowIndex mbb,
                            const Witness& first, const Witness& second) {
  if (auto check = verify_witness(e, m, mb, first); !check)
    throw InvalidPremise("first transitivity premise fails: " + check.diagnostic);
  if (auto check = verify_witness(e, mb, mbb, second); !check)
    throw InvalidPremise("second transitivity premise fails: " + check.diagnostic);

  const auto& c = e.c();
  const auto& d = e.d();
  const auto& t1 = e.tau1();
  const auto& t2 = e.tau2();

  // 1_{tau1(left)} ∘h cell ∘h 1_{tau2(right)}
  auto sandwich = [&](ArrowIndex left, CellIndex cell, ArrowIndex right) {
    return whisker_left_checked(d, t1(left), whisker_right_checked(d, cell, t2(right)));
  };

  Witness out{};
  out.u1 = compose_checked(c, second.u1, first.u1);
  out.u2 = compose_checked(c, first.u2, second.u2);
  out.v1 = compose_checked(c, first.v1, second.v1);
  out.v2 = compose_checked(c, second.v2, first.v2);
  out.phi = vcomp_checked(d, second.phi, sandwich(second.u1, first.phi, second.u2));
  out.phi_tilde = vcomp_checked(d, sandwich(second.u1, first.phi_tilde, second.u2), second.phi_tilde);
  out.psi = vcomp_checked(d, first.psi, sandwich(first.v1, second.psi, first.v2));
  out.psi_tilde = vcomp_checked(d, sandwich(first.v1, second.psi_tilde, first.v2), first.psi_tilde);

  if (auto check = verify_witness(e, m, mbb, out); !check)
    throw LawViolation("derived transitivity witness fails: " + check.diagnostic);
  return out;
}

std::vector<std::vector<std::string>> equivalence_classes(const EquivData& e,
                                                          const std::vector<ArrowIndex>& among) {
  const auto& c = e.c();
  const std::size_t n = among.size();
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    require_arrow(c, among[i]);
    names[i] = c.arrow_name(among[i]);
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });

  // Upper triangle only; symmetry and transitivity make the rest redundant.
  UnionFind blocks(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t a = order[i], b = order[j];
      if (blocks.same(a, b)) continue;
      if (are_equivalent(e, among[a], among[b])) blocks.unite(a, b);
    }

  std::vector<std::vector<std::string>> out;
  std::vector<std::ptrdiff_t> slot(n, -1);
  for (std::size_t i : order) {
    const std::size_t root = blocks.find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::ptrdiff_t>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[root])].push_back(names[i]);
  }
  return out;
}

std::vector<std::vector<std::string>> equivalence_classes(const EquivData& e) {
  std::vector<ArrowIndex> all(e.c().arrow_count());
  for (std::size_t f = 0; f < all.size(); ++f) all[f] = ArrowIndex(f);
  return equivalence_classes(e, all);
}

}  // namespace morphequiv
