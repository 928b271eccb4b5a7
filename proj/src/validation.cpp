// Exhaustive axiom checks over any CategoryView / TwoCategoryView.

#include <vector>

#include "morphequiv/category.hpp"

namespace morphequiv {

namespace {

std::vector<std::vector<ArrowIndex>> arrows_by_dom(const CategoryView& c) {
  std::vector<std::vector<ArrowIndex>> out(c.object_count());
  for (std::size_t f = 0; f < c.arrow_count(); ++f) out[raw(c.dom(ArrowIndex(f)))].push_back(ArrowIndex(f));
  return out;
}

std::vector<std::vector<ArrowIndex>> arrows_by_cod(const CategoryView& c) {
  std::vector<std::vector<ArrowIndex>> out(c.object_count());
  for (std::size_t f = 0; f < c.arrow_count(); ++f) out[raw(c.cod(ArrowIndex(f)))].push_back(ArrowIndex(f));
  return out;
}

}  // namespace

ValidationReport validate_category(const CategoryView& c) {
  ValidationReport r;
  const auto out = arrows_by_dom(c);

  for (std::size_t x = 0; x < c.object_count(); ++x) {
    const ObjectIndex obj = ObjectIndex(x);
    const ArrowIndex id = c.identity(obj);
    if (c.dom(id) != obj || c.cod(id) != obj) r.add("identity boundary", {c.object_name(obj), c.arrow_name(id)});
  }

  for (std::size_t i = 0; i < c.arrow_count(); ++i) {
    const ArrowIndex f = ArrowIndex(i);
    for (ArrowIndex g : out[raw(c.cod(f))]) {
      auto h = c.compose(g, f);
      if (!h) {
        r.add("compose totality", {c.arrow_name(g), c.arrow_name(f)});
      } else if (c.dom(*h) != c.dom(f) || c.cod(*h) != c.cod(g)) {
        r.add("compose boundary", {c.arrow_name(g), c.arrow_name(f)});
      }
    }
  }

  for (std::size_t i = 0; i < c.arrow_count(); ++i) {
    const ArrowIndex f = ArrowIndex(i);
    auto left = c.compose(c.identity(c.cod(f)), f);
    if (left && *left != f) r.add("left unit", {c.arrow_name(f)});
    auto right = c.compose(f, c.identity(c.dom(f)));
    if (right && *right != f) r.add("right unit", {c.arrow_name(f)});
  }

  for (std::size_t i = 0; i < c.arrow_count(); ++i) {
    const ArrowIndex f = ArrowIndex(i);
    for (ArrowIndex g : out[raw(c.cod(f))]) {
      auto gf = c.compose(g, f);
      for (ArrowIndex h : out[raw(c.cod(g))]) {
        auto hg = c.compose(h, g);
        if (!gf || !hg) continue;
        auto lhs = c.compose(h, *gf);
        auto rhs = c.compose(*hg, f);
        if (lhs && rhs && *lhs != *rhs)
          r.add("associativity", {c.arrow_name(h), c.arrow_name(g), c.arrow_name(f)});
      }
    }
  }
  return r;
}

ValidationReport validate_two_category(const TwoCategoryView& d) {
  ValidationReport r = validate_category(d);
  const std::size_t cells = d.cell_count();

  auto name = [&](CellIndex a) { return d.cell_name(a); };
  auto aname = [&](ArrowIndex f) { return d.arrow_name(f); };

  // 2-cell boundaries must be parallel; bucket cells for the enumerations below.
  std::vector<std::vector<CellIndex>> from_arrow(d.arrow_count());
  std::vector<std::vector<CellIndex>> by_dom(d.object_count());
  for (std::size_t i = 0; i < cells; ++i) {
    const CellIndex a = CellIndex(i);
    const ArrowIndex s = d.src(a), t = d.tgt(a);
    if (d.dom(s) != d.dom(t) || d.cod(s) != d.cod(t)) {
      r.add("2-cell not parallel", {name(a)});
      continue;
    }
    from_arrow[raw(s)].push_back(a);
    by_dom[raw(d.dom(s))].push_back(a);
  }
  const auto arrows_out = arrows_by_dom(d);
  const auto arrows_in = arrows_by_cod(d);

  for (std::size_t f = 0; f < d.arrow_count(); ++f) {
    const ArrowIndex arrow = ArrowIndex(f);
    const CellIndex id = d.identity_cell(arrow);
    if (d.src(id) != arrow || d.tgt(id) != arrow) r.add("identity 2-cell boundary", {aname(arrow), name(id)});
  }

  // Vertical structure.
  for (std::size_t i = 0; i < cells; ++i) {
    const CellIndex a = CellIndex(i);
    for (CellIndex b : from_arrow[raw(d.tgt(a))]) {
      auto ba = d.vcomp(b, a);
      if (!ba) {
        r.add("vcomp totality", {name(b), name(a)});
      } else if (d.src(*ba) != d.src(a) || d.tgt(*ba) != d.tgt(b)) {
        r.add("vcomp boundary", {name(b), name(a)});
      }
    }
    auto left = d.vcomp(d.identity_cell(d.tgt(a)), a);
    auto right = d.vcomp(a, d.identity_cell(d.src(a)));
    if ((left && *left != a) || (right && *right != a)) r.add("vcomp unit", {name(a)});
  }
  for (std::size_t i = 0; i < cells; ++i) {
    const CellIndex a = CellIndex(i);
    for (CellIndex b : from_arrow[raw(d.tgt(a))]) {
      auto ba = d.vcomp(b, a);
      if (!ba) continue;
      for (CellIndex c : from_arrow[raw(d.tgt(b))]) {
        auto cb = d.vcomp(c, b);
        if (!cb) continue;
        auto lhs = d.vcomp(c, *ba);
        auto rhs = d.vcomp(*cb, a);
        if (lhs && rhs && *lhs != *rhs) r.add("vcomp associativity", {name(c), name(b), name(a)});
      }
    }
  }

  // Whiskering: totality and boundaries.
  for (std::size_t i = 0; i < cells; ++i) {
    const CellIndex a = CellIndex(i);
    const ArrowIndex s = d.src(a), t = d.tgt(a);
    for (ArrowIndex k : arrows_out[raw(d.cod(s))]) {
      auto w = d.whisker_left(k, a);
      if (!w) {
        r.add("whisker_left totality", {aname(k), name(a)});
        continue;
      }
      auto ks = d.compose(k, s), kt = d.compose(k, t);
      if (!ks || !kt || d.src(*w) != *ks || d.tgt(*w) != *kt) r.add("whisker_left boundary", {aname(k), name(a)});
    }
    for (ArrowIndex k : arrows_in[raw(d.dom(s))]) {
      auto w = d.whisker_right(a, k);
      if (!w) {
        r.add("whisker_right totality", {name(a), aname(k)});
        continue;
      }
      auto sk = d.compose(s, k), tk = d.compose(t, k);
      if (!sk || !tk || d.src(*w) != *sk || d.tgt(*w) != *tk) r.add("whisker_right boundary", {name(a), aname(k)});
    }
  }

  // Whiskering is functorial in the 1-cell argument.
  for (std::size_t i = 0; i < cells; ++i) {
    const CellIndex a = CellIndex(i);
    const ArrowIndex s = d.src(a);
    auto wid = d.whisker_left(d.identity(d.cod(s)), a);
    if (wid && *wid != a) r.add("whisker_left identity 1-cell", {name(a)});
    wid = d.whisker_right(a, d.identity(d.dom(s)));
    if (wid && *wid != a) r.add("whisker_right identity 1-cell", {name(a)});

    for (ArrowIndex k : arrows_out[raw(d.cod(s))]) {
      auto ka = d.whisker_left(k, a);
      if (!ka) continue;
      for (ArrowIndex k2 : arrows_out[raw(d.cod(k))]) {
        auto k2k = d.compose(k2, k);
        if (!k2k) continue;
        auto lhs = d.whisker_left(*k2k, a);
        auto rhs = d.whisker_left(k2, *ka);
        if (lhs && rhs && *lhs != *rhs) r.add("whisker_left composite", {aname(k2), aname(k), name(a)});
      }
    }
    for (ArrowIndex k : arrows_in[raw(d.dom(s))]) {
      auto ak = d.whisker_right(a, k);
      if (!ak) continue;
      for (ArrowIndex k2 : arrows_in[raw(d.dom(k))]) {
        auto kk2 = d.compose(k, k2);
        if (!kk2) continue;
        auto lhs = d.whisker_right(a, *kk2);
        auto rhs = d.whisker_right(*ak, k2);
        if (lhs && rhs && *lhs != *rhs) r.add("whisker_right composite", {name(a), aname(k), aname(k2)});
      }
    }
  }

  // Whiskering is functorial in the 2-cell argument, and the two sides commute.
  for (std::size_t f = 0; f < d.arrow_count(); ++f) {
    const ArrowIndex arrow = ArrowIndex(f);
    const CellIndex id = d.identity_cell(arrow);
    for (ArrowIndex k : arrows_out[raw(d.cod(arrow))]) {
      auto w = d.whisker_left(k, id);
      auto kf = d.compose(k, arrow);
      if (w && kf && *w != d.identity_cell(*kf)) r.add("whisker_left identity 2-cell", {aname(k), aname(arrow)});
    }
    for (ArrowIndex k : arrows_in[raw(d.dom(arrow))]) {
      auto w = d.whisker_right(id, k);
      auto fk = d.compose(arrow, k);
      if (w && fk && *w != d.identity_cell(*fk)) r.add("whisker_right identity 2-cell", {aname(arrow), aname(k)});
    }
  }
  for (std::size_t i = 0; i < cells; ++i) {
    const CellIndex a = CellIndex(i);
    const ArrowIndex s = d.src(a);
    for (CellIndex b : from_arrow[raw(d.tgt(a))]) {
      auto ba = d.vcomp(b, a);
      if (!ba) continue;
      for (ArrowIndex k : arrows_out[raw(d.cod(s))]) {
        auto lhs = d.whisker_left(k, *ba);
        auto kb = d.whisker_left(k, b), ka = d.whisker_left(k, a);
        if (!lhs || !kb || !ka) continue;
        auto rhs = d.vcomp(*kb, *ka);
        if (rhs && *lhs != *rhs) r.add("whisker_left vcomp", {aname(k), name(b), name(a)});
      }
      for (ArrowIndex k : arrows_in[raw(d.dom(s))]) {
        auto lhs = d.whisker_right(*ba, k);
        auto bk = d.whisker_right(b, k), ak = d.whisker_right(a, k);
        if (!lhs || !bk || !ak) continue;
        auto rhs = d.vcomp(*bk, *ak);
        if (rhs && *lhs != *rhs) r.add("whisker_right vcomp", {name(b), name(a), aname(k)});
      }
    }
    for (ArrowIndex k : arrows_out[raw(d.cod(s))]) {
      for (ArrowIndex j : arrows_in[raw(d.dom(s))]) {
        auto aj = d.whisker_right(a, j);
        auto ka = d.whisker_left(k, a);
        if (!aj || !ka) continue;
        auto lhs = d.whisker_left(k, *aj);
        auto rhs = d.whisker_right(*ka, j);
        if (lhs && rhs && *lhs != *rhs) r.add("whisker associativity", {aname(k), name(a), aname(j)});
      }
    }
  }

  // Interchange: both whiskering orders of beta * alpha agree.
  auto hcomp_orders = [&](CellIndex beta, CellIndex alpha) -> std::pair<std::optional<CellIndex>, std::optional<CellIndex>> {
    auto a1 = d.whisker_right(beta, d.src(alpha));
    auto a2 = d.whisker_left(d.tgt(beta), alpha);
    auto b1 = d.whisker_left(d.src(beta), alpha);
    auto b2 = d.whisker_right(beta, d.tgt(alpha));
    std::optional<CellIndex> one, other;
    if (a1 && a2) one = d.vcomp(*a2, *a1);
    if (b1 && b2) other = d.vcomp(*b2, *b1);
    return {one, other};
  };
  for (std::size_t i = 0; i < cells; ++i) {
    const CellIndex alpha = CellIndex(i);
    for (CellIndex beta : by_dom[raw(d.cod(d.src(alpha)))]) {
      auto [one, other] = hcomp_orders(beta, alpha);
      if (one && other && *one != *other) r.add("interchange", {name(beta), name(alpha)});
    }
  }

  // Middle-four: (delta ∘v gamma) * (beta ∘v alpha) = (delta * beta) ∘v (gamma * alpha).
  for (std::size_t i = 0; i < cells; ++i) {
    const CellIndex alpha = CellIndex(i);
    for (CellIndex beta : from_arrow[raw(d.tgt(alpha))]) {
      auto ba = d.vcomp(beta, alpha);
      if (!ba) continue;
      for (CellIndex gamma : by_dom[raw(d.cod(d.src(alpha)))]) {
        for (CellIndex delta : from_arrow[raw(d.tgt(gamma))]) {
          auto dg = d.vcomp(delta, gamma);
          if (!dg) continue;
          auto lhs = hcomp_orders(*dg, *ba).first;
          auto db = hcomp_orders(delta, beta).first;
          auto ga = hcomp_orders(gamma, alpha).first;
          if (!lhs || !db || !ga) continue;
          auto rhs = d.vcomp(*db, *ga);
          if (rhs && *lhs != *rhs)
            r.add("middle-four interchange", {name(delta), name(gamma), name(beta), name(alpha)});
        }
      }
    }
  }
  return r;
}

}  // namespace morphequiv
