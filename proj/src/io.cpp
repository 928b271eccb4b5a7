#include "morphequiv/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "morphequiv/errors.hpp"

namespace morphequiv::io {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

// Runs a loader, turning nlohmann type errors into SchemaError.
template <typename F>
auto guarded(F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw SchemaError(e.what());
  }
}

void require_object(const json& j, const std::string& ctx) {
  if (!j.is_object()) throw SchemaError(ctx + ": expected an object");
}

const json& field(const json& j, const std::string& key, const std::string& ctx) {
  require_object(j, ctx);
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(ctx + ": missing key \"" + key + "\"");
  return *it;
}

const json* optional_field(const json& j, const std::string& key) {
  const auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::string as_string(const json& j, const std::string& ctx) {
  if (!j.is_string()) throw SchemaError(ctx + ": expected a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const std::string& ctx) {
  if (!j.is_array()) throw SchemaError(ctx + ": expected an array of strings");
  std::vector<std::string> out;
  for (const json& x : j) out.push_back(as_string(x, ctx));
  return out;
}

std::map<std::string, std::string> string_map(const json& j, const std::string& ctx) {
  require_object(j, ctx);
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) out.emplace(k, as_string(v, ctx + "." + k));
  return out;
}

std::vector<Triple> triples(const json& j, const std::string& ctx) {
  if (!j.is_array()) throw SchemaError(ctx + ": expected an array of triples");
  std::vector<Triple> out;
  for (const json& t : j) {
    if (!t.is_array() || t.size() != 3) throw SchemaError(ctx + ": entries must be [a, b, result]");
    out.push_back({as_string(t[0], ctx), as_string(t[1], ctx), as_string(t[2], ctx)});
  }
  return out;
}

std::vector<Triple> optional_triples(const json& j, const std::string& key, const std::string& ctx) {
  const json* t = optional_field(j, key);
  return t ? triples(*t, ctx + "." + key) : std::vector<Triple>{};
}

std::vector<ArrowDecl> arrow_decls(const json& j, const std::string& ctx) {
  if (!j.is_array()) throw SchemaError(ctx + ": expected an array");
  std::vector<ArrowDecl> out;
  for (const json& a : j)
    out.push_back({as_string(field(a, "id", ctx), ctx), as_string(field(a, "dom", ctx), ctx),
                   as_string(field(a, "cod", ctx), ctx)});
  return out;
}

std::vector<CellDecl> cell_decls(const json& j, const std::string& ctx) {
  if (!j.is_array()) throw SchemaError(ctx + ": expected an array");
  std::vector<CellDecl> out;
  for (const json& a : j)
    out.push_back({as_string(field(a, "id", ctx), ctx), as_string(field(a, "src", ctx), ctx),
                   as_string(field(a, "tgt", ctx), ctx)});
  return out;
}

CategoryTables category_tables(const json& j) {
  CategoryTables t;
  t.objects = string_list(field(j, "objects", "category"), "category.objects");
  t.morphisms = arrow_decls(field(j, "morphisms", "category"), "category.morphisms");
  t.identity = string_map(field(j, "identity", "category"), "category.identity");
  t.compose = optional_triples(j, "compose", "category");
  return t;
}

TwoCategoryTables two_category_tables(const json& j) {
  TwoCategoryTables t;
  t.objects = string_list(field(j, "objects", "two_category"), "two_category.objects");
  t.one_cells = arrow_decls(field(j, "one_cells", "two_category"), "two_category.one_cells");
  t.identity = string_map(field(j, "identity", "two_category"), "two_category.identity");
  t.compose = optional_triples(j, "compose", "two_category");
  t.two_cells = cell_decls(field(j, "two_cells", "two_category"), "two_category.two_cells");
  t.identity2 = string_map(field(j, "identity2", "two_category"), "two_category.identity2");
  t.vcomp = optional_triples(j, "vcomp", "two_category");
  t.whisker_left = optional_triples(j, "whisker_left", "two_category");
  t.whisker_right = optional_triples(j, "whisker_right", "two_category");
  return t;
}

// An inline object, or a path (relative to base_dir) to a file holding one.
json inline_or_file(const json& j, const std::filesystem::path& base_dir, const std::string& ctx) {
  if (j.is_object()) return j;
  if (j.is_string()) {
    std::filesystem::path p = j.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    return parse(read_text(p));
  }
  throw SchemaError(ctx + ": expected an object or a file path");
}

Complex scalar(const json& j, const std::string& ctx) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw SchemaError(ctx + ": expected a number or [re, im]");
}

// Rows of a matrix; every row must have the same length.
CMatrix matrix(const json& j, const std::string& ctx) {
  if (!j.is_array() || j.empty()) throw SchemaError(ctx + ": expected a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  CMatrix out(Eigen::Index(j.size()), Eigen::Index(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw SchemaError(ctx + ": ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) out(Eigen::Index(r), Eigen::Index(c)) = scalar(j[r][c], ctx);
  }
  return out;
}

BesselFamily family(const json& j, const std::string& ctx) {
  const Field fld = optional_field(j, "field") ? parse_field(as_string(j["field"], ctx + ".field")) : Field::real;
  const json& dim_j = field(j, "dim", ctx);
  if (!dim_j.is_number_integer() || dim_j.get<long long>() < 1) throw SchemaError(ctx + ".dim: expected a positive integer");
  const auto n = Eigen::Index(dim_j.get<long long>());
  const json& cols = field(j, "vectors", ctx);
  if (!cols.is_array()) throw SchemaError(ctx + ".vectors: expected an array of columns");
  const auto m = Eigen::Index(cols.size());
  CMatrix v(n, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const json& col = cols[std::size_t(i)];
    if (!col.is_array() || Eigen::Index(col.size()) != n)
      throw SchemaError(ctx + ".vectors: every column must have length dim");
    for (Eigen::Index r = 0; r < n; ++r) v(r, i) = scalar(col[std::size_t(r)], ctx + ".vectors");
  }
  Eigen::VectorXd w = Eigen::VectorXd::Ones(m);
  if (const json* wj = optional_field(j, "weights")) {
    if (!wj->is_array()) throw SchemaError(ctx + ".weights: expected an array");
    if (Eigen::Index(wj->size()) != m)
      throw SchemaError(ctx + ".weights: expected " + std::to_string(m) + " weights");
    for (Eigen::Index i = 0; i < m; ++i) {
      const json& x = (*wj)[std::size_t(i)];
      if (!x.is_number()) throw SchemaError(ctx + ".weights: expected numbers");
      w(i) = x.get<double>();
    }
  }
  return BesselFamily(fld, std::move(v), std::move(w));
}

OperatorMatrix operator_matrix(const json& j, const std::string& ctx) {
  if (j.is_array()) return OperatorMatrix(matrix(j, ctx));
  const OperatorClass cls =
      optional_field(j, "class") ? parse_operator_class(as_string(j["class"], ctx + ".class")) : OperatorClass::any;
  return OperatorMatrix(matrix(field(j, "matrix", ctx), ctx + ".matrix"), cls);
}

SeminormRep seminorm(const json& j, const std::string& ctx) {
  const json& s = field(j, "scale", ctx);
  if (!s.is_number()) throw SchemaError(ctx + ".scale: expected a number");
  return SeminormRep(s.get<double>(), matrix(field(j, "op", ctx), ctx + ".op"));
}

Rational rational(const json& j, const std::string& ctx) {
  if (j.is_string()) return PositiveRationals::parse(j.get<std::string>());
  if (j.is_number_integer()) {
    const Rational q(j.get<long long>());
    if (q <= 0) throw SchemaError(ctx + ": scalars must be positive");
    return q;
  }
  throw SchemaError(ctx + ": expected an integer or a string \"n/d\"");
}

MorphismMap map_of(const json& j, const CategoryView& c, const CategoryView& d, const std::string& ctx) {
  return resolve_map(c, d, string_map(field(j, "objects", ctx), ctx + ".objects"),
                     string_map(field(j, "morphisms", ctx), ctx + ".morphisms"));
}

ObjectRef preord_object(const json& j, const std::string& ctx) {
  const std::string kind = as_string(field(j, "kind", ctx), ctx + ".kind");
  if (kind == "numeric") {
    const json& s = field(j, "sample", ctx);
    if (!s.is_array()) throw SchemaError(ctx + ".sample: expected an array");
    std::vector<Rational> sample;
    for (const json& x : s) sample.push_back(rational(x, ctx + ".sample"));
    return PreordMSetObject::numeric(std::move(sample));
  }
  if (kind != "finite") throw SchemaError(ctx + ".kind: expected \"finite\" or \"numeric\"");
  FiniteObjectTables t;
  t.carrier = string_list(field(j, "carrier", ctx), ctx + ".carrier");
  if (const json* leq = optional_field(j, "leq")) {
    if (!leq->is_array()) throw SchemaError(ctx + ".leq: expected an array of pairs");
    for (const json& p : *leq) {
      if (!p.is_array() || p.size() != 2) throw SchemaError(ctx + ".leq: entries must be [x, y]");
      t.leq.emplace_back(as_string(p[0], ctx + ".leq"), as_string(p[1], ctx + ".leq"));
    }
  }
  if (const json* act = optional_field(j, "act")) {
    require_object(*act, ctx + ".act");
    for (const auto& [q, table] : act->items()) t.act.emplace(q, string_map(table, ctx + ".act." + q));
  }
  return PreordMSetObject::finite(std::move(t));
}

}  // namespace

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::category: return "category";
    case InstanceKind::two_category: return "two_category";
    case InstanceKind::equiv: return "equiv";
    case InstanceKind::action: return "action";
    case InstanceKind::family: return "family";
    case InstanceKind::frame: return "frame";
    case InstanceKind::bridge: return "bridge";
    case InstanceKind::preord: return "preord";
  }
  return "unknown";
}

InstanceKind detect_kind(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object()) throw SchemaError("instance file must hold a JSON object");
  if (j.contains("sigma")) return InstanceKind::equiv;
  if (j.contains("group")) return InstanceKind::action;
  if (j.contains("maps") || j.contains("cells")) return InstanceKind::preord;
  if (j.contains("two_cells")) return InstanceKind::two_category;
  if (j.contains("morphisms")) return InstanceKind::category;
  if (j.contains("u1")) return InstanceKind::bridge;
  if (j.contains("family")) return InstanceKind::frame;
  if (j.contains("vectors")) return InstanceKind::family;
  throw SchemaError("cannot tell what kind of instance this is");
}

CategoryTables category_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded([&] { return category_tables(j); });
}

TwoCategoryTables two_category_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded([&] { return two_category_tables(j); });
}

EquivInstance equiv_from_json(const std::string& text, const std::filesystem::path& base_dir) {
  const json j = parse(text);
  return guarded([&] {
    EquivInstance out;
    out.c = FiniteCategory::load(category_tables(inline_or_file(field(j, "category", "equiv"), base_dir, "category")));
    out.d = Finite2Category::load(
        two_category_tables(inline_or_file(field(j, "two_category", "equiv"), base_dir, "two_category")));
    MorphismMap sigma = map_of(field(j, "sigma", "equiv"), *out.c, *out.d, "sigma");
    MorphismMap tau1 = map_of(field(j, "tau1", "equiv"), *out.c, *out.d, "tau1");
    MorphismMap tau2 = map_of(field(j, "tau2", "equiv"), *out.c, *out.d, "tau2");
    out.data = std::make_shared<const EquivData>(out.c, out.d, std::move(sigma), std::move(tau1), std::move(tau2));
    if (const json* pairs = optional_field(j, "pairs")) {
      if (!pairs->is_array()) throw SchemaError("equiv.pairs: expected an array");
      for (const json& p : *pairs) {
        if (!p.is_array() || p.size() != 2) throw SchemaError("equiv.pairs: entries must be [m, mTilde]");
        out.pairs.emplace_back(as_string(p[0], "equiv.pairs"), as_string(p[1], "equiv.pairs"));
      }
    }
    return out;
  });
}

EquivInstance load_equiv(const std::filesystem::path& path) {
  return equiv_from_json(read_text(path), path.parent_path());
}

ActionInstance action_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded([&] {
    const json& g = field(j, "group", "action");
    ActionTables t;
    t.group.elements = string_list(field(g, "elements", "group"), "group.elements");
    t.group.mul = triples(field(g, "mul", "group"), "group.mul");
    t.group.unit = as_string(field(g, "unit", "group"), "group.unit");
    t.carrier = string_list(field(j, "carrier", "action"), "action.carrier");
    t.act = triples(field(j, "act", "action"), "action.act");
    ActionInstance out;
    out.action = std::make_shared<const GroupActionInstance>(std::move(t));
    out.chain_lengths = {0, 1, 2};
    if (const json* ls = optional_field(j, "chain_lengths")) {
      if (!ls->is_array() || ls->empty()) throw SchemaError("action.chain_lengths: expected a non-empty array");
      out.chain_lengths.clear();
      for (const json& l : *ls) {
        if (!l.is_number_unsigned()) throw SchemaError("action.chain_lengths: expected natural numbers");
        out.chain_lengths.push_back(l.get<std::size_t>());
      }
    }
    return out;
  });
}

BesselFamily family_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded([&] { return family(j, "family"); });
}

FrameInstance frame_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded([&] {
    if (!j.contains("family")) return FrameInstance{family(j, "family"), {}, {}, {}, {}};
    FrameInstance out{family(field(j, "family", "frame"), "family"), {}, {}, {}, {}};
    const json* ft = optional_field(j, "f_tilde");
    const json* u = optional_field(j, "u");
    const json* ut = optional_field(j, "u_tilde");
    if ((ft != nullptr) != (u != nullptr) || (u != nullptr) != (ut != nullptr))
      throw SchemaError("frame: \"f_tilde\", \"u\" and \"u_tilde\" must be given together");
    if (ft) {
      out.f_tilde = family(*ft, "f_tilde");
      out.u = operator_matrix(*u, "u");
      out.u_tilde = operator_matrix(*ut, "u_tilde");
    }
    if (const json* v = optional_field(j, "variant")) out.variant = parse_operator_class(as_string(*v, "variant"));
    return out;
  });
}

BridgeInstance bridge_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded([&] {
    BridgeInstance out{family(field(j, "f", "bridge"), "f"),
                       family(field(j, "f_tilde", "bridge"), "f_tilde"),
                       matrix(field(j, "u1", "bridge"), "u1"),
                       matrix(field(j, "u2", "bridge"), "u2"),
                       matrix(field(j, "v1", "bridge"), "v1"),
                       matrix(field(j, "v2", "bridge"), "v2"),
                       {}};
    if (const json* s = optional_field(j, "seminorms")) {
      if (!s->is_array()) throw SchemaError("bridge.seminorms: expected an array");
      for (const json& x : *s) out.seminorms.push_back(seminorm(x, "bridge.seminorms"));
    }
    return out;
  });
}

SeminormRep seminorm_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded([&] { return seminorm(j, "seminorm"); });
}

PreordInstance preord_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded([&] {
    PreordInstance out;
    const json& objects = field(j, "objects", "preord");
    require_object(objects, "preord.objects");
    for (const auto& [name, spec] : objects.items()) out.objects.emplace(name, preord_object(spec, "objects." + name));

    auto object = [&](const json& ref, const std::string& ctx) {
      const std::string name = as_string(ref, ctx);
      const auto it = out.objects.find(name);
      if (it == out.objects.end()) throw UnknownId(name);
      return it->second;
    };

    // Composite maps may refer to maps declared anywhere in the file.
    const json& maps = field(j, "maps", "preord");
    require_object(maps, "preord.maps");
    std::set<std::string> pending;
    for (const auto& [name, spec] : maps.items()) pending.insert(name);
    while (!pending.empty()) {
      bool progress = false;
      for (auto it = pending.begin(); it != pending.end();) {
        const std::string& name = *it;
        const json& spec = maps[name];
        const std::string ctx = "maps." + name;
        std::optional<EquivariantMonotoneMap> made;
        if (const json* parts = optional_field(spec, "compose")) {
          if (!parts->is_array() || parts->size() != 2) throw SchemaError(ctx + ".compose: expected [second, first]");
          const std::string second = as_string((*parts)[0], ctx), first = as_string((*parts)[1], ctx);
          for (const std::string& p : {second, first})
            if (!maps.contains(p)) throw UnknownId(p);
          if (out.maps.count(second) && out.maps.count(first)) made = compose(out.maps.at(second), out.maps.at(first));
        } else {
          const ObjectRef dom = object(field(spec, "dom", ctx), ctx + ".dom");
          const ObjectRef cod = object(field(spec, "cod", ctx), ctx + ".cod");
          if (const json* a = optional_field(spec, "multiplier"))
            made = EquivariantMonotoneMap::multiplier(dom, cod, rational(*a, ctx + ".multiplier"));
          else if (const json* t = optional_field(spec, "table"))
            made = EquivariantMonotoneMap::table(dom, cod, string_map(*t, ctx + ".table"));
          else if (dom == cod)
            made = EquivariantMonotoneMap::identity(dom);
          else
            throw SchemaError(ctx + ": expected \"multiplier\", \"table\" or \"compose\"");
        }
        if (made) {
          out.maps.emplace(name, std::move(*made));
          it = pending.erase(it);
          progress = true;
        } else {
          ++it;
        }
      }
      if (!progress) throw SchemaError("preord.maps: cyclic composite definitions");
    }

    if (const json* cells = optional_field(j, "cells")) {
      require_object(*cells, "preord.cells");
      for (const auto& [name, spec] : cells->items()) {
        const std::string ctx = "cells." + name;
        CellSpec c{rational(field(spec, "value", ctx), ctx + ".value"), as_string(field(spec, "src", ctx), ctx + ".src"),
                   as_string(field(spec, "tgt", ctx), ctx + ".tgt")};
        for (const std::string& m : {c.src, c.tgt})
          if (!out.maps.count(m)) throw UnknownId(m);
        out.cells.emplace(name, std::move(c));
      }
    }
    if (const json* squares = optional_field(j, "interchange")) {
      if (!squares->is_array()) throw SchemaError("preord.interchange: expected an array");
      for (const json& s : *squares) {
        if (!s.is_array() || s.size() != 4) throw SchemaError("preord.interchange: entries must be [c, c', d, d']");
        std::array<std::string, 4> names;
        for (std::size_t i = 0; i < 4; ++i) {
          names[i] = as_string(s[i], "preord.interchange");
          if (!out.cells.count(names[i])) throw UnknownId(names[i]);
        }
        out.interchange.push_back(names);
      }
    }
    return out;
  });
}

}  // namespace morphequiv::io
