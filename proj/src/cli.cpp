#include "morphequiv/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "morphequiv/errors.hpp"
#include "morphequiv/io.hpp"

namespace morphequiv::cli {

namespace {

using nlohmann::json;

constexpr int schema_version = 1;

struct Context {
  Tolerances tol;
  std::uint64_t seed = 0;
};

// Verdict of one input: the report body and whether every check passed.
struct Outcome {
  json body;
  bool ok = true;
};

json complex_json(Complex z, bool complex) {
  if (!complex) return z.real();
  return json::array({z.real(), z.imag()});
}

json matrix_json(const CMatrix& a, bool complex) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < a.cols(); ++c) row.push_back(complex_json(a(r, c), complex));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json asymp_json(const AsympVerdict& v) {
  json out{{"equivalent", v.equivalent}};
  if (v.equivalent) {
    out["k1"] = v.k1;
    out["k2"] = v.k2;
  } else {
    out["reason"] = v.reason;
  }
  return out;
}

json def_json(const DefVerdict& v) {
  return {{"equivalent", v.equivalent}, {"forward", asymp_json(v.forward)}, {"backward", asymp_json(v.backward)}};
}

CMatrix gaussian_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols, bool complex) {
  std::normal_distribution<double> n(0.0, 1.0);
  CMatrix a(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double re = n(rng);
      a(r, c) = complex ? Complex(re, n(rng)) : Complex(re, 0.0);
    }
  return a;
}

// ---------------------------------------------------------------------------

json report_json(const ValidationReport& r) {
  json violations = json::array();
  for (const Violation& v : r.violations) violations.push_back({{"axiom", v.axiom}, {"witnesses", v.witnesses}});
  return {{"valid", r.ok()}, {"violations", violations}, {"truncated", r.truncated}};
}

Outcome verb_validate(const std::string& text, const Context&) {
  const io::InstanceKind kind = io::detect_kind(text);
  Outcome out;
  ValidationReport report;
  if (kind == io::InstanceKind::category) {
    const CategoryTables t = io::category_from_json(text);
    report = validate_category(t);
    out.body = report_json(report);
    out.body["objects"] = t.objects.size();
    out.body["morphisms"] = t.morphisms.size();
  } else if (kind == io::InstanceKind::two_category) {
    const TwoCategoryTables t = io::two_category_from_json(text);
    report = validate_two_category(t);
    out.body = report_json(report);
    out.body["objects"] = t.objects.size();
    out.body["one_cells"] = t.one_cells.size();
    out.body["two_cells"] = t.two_cells.size();
  } else {
    throw SchemaError("validate expects a category or a 2-category, got " + io::to_string(kind));
  }
  out.body["kind"] = io::to_string(kind);
  out.ok = report.ok();
  return out;
}

Outcome verb_equiv(const std::string& text, const std::filesystem::path& base, const Context&) {
  const io::EquivInstance inst = io::equiv_from_json(text, base);
  if (inst.pairs.empty()) throw SchemaError("equiv: the instance lists no \"pairs\" to decide");
  Outcome out;
  json pairs = json::array();
  for (const auto& [m, mt] : inst.pairs) {
    const SearchResult r = are_equivalent(*inst.data, m, mt);
    json entry{{"m", m}, {"m_tilde", mt}, {"equivalent", r.equivalent}};
    if (r.witness) {
      const WitnessNames w = names_of(*inst.data, *r.witness);
      const VerifyResult v =
          verify_witness(*inst.data, arrow_or_throw(inst.data->c(), m), arrow_or_throw(inst.data->c(), mt), *r.witness);
      entry["witness"] = {{"u1", w.u1},   {"u2", w.u2},         {"v1", w.v1},   {"v2", w.v2},
                          {"phi", w.phi}, {"phiTilde", w.phi_tilde}, {"psi", w.psi}, {"psiTilde", w.psi_tilde}};
      entry["verified"] = v.ok;
    }
    out.ok = out.ok && r.equivalent;
    pairs.push_back(std::move(entry));
  }
  out.body = {{"pairs", pairs}};
  return out;
}

std::vector<ArrowIndex> letter_arrows(const EquivData& data, const GroupActionInstance& a) {
  const auto& slice = dynamic_cast<const DeloopedSlice&>(data.d());
  std::vector<ArrowIndex> out;
  for (std::size_t x = 0; x < a.carrier_size(); ++x) out.push_back(slice.word({a.carrier_name(x)}));
  return out;
}

std::vector<std::vector<std::string>> strip_brackets(std::vector<std::vector<std::string>> blocks) {
  for (auto& b : blocks)
    for (std::string& s : b)
      if (s.size() >= 2 && s.front() == '<' && s.back() == '>') s = s.substr(1, s.size() - 2);
  // "<a0>" sorts before "<a>", so restore the order of the bare names.
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

Outcome verb_classes(const std::string& text, const std::filesystem::path& base, const Context&) {
  const io::InstanceKind kind = io::detect_kind(text);
  Outcome out;
  if (kind == io::InstanceKind::equiv) {
    const io::EquivInstance inst = io::equiv_from_json(text, base);
    out.body = {{"kind", "equiv"}, {"classes", equivalence_classes(*inst.data)}};
    return out;
  }
  if (kind != io::InstanceKind::action)
    throw SchemaError("classes expects an equiv or action instance, got " + io::to_string(kind));
  const io::ActionInstance inst = io::action_from_json(text);
  const auto orbits = inst.action->orbits();
  json lengths = json::array();
  for (std::size_t L : inst.chain_lengths) {
    const EquivData data = delooped_data(inst.action, L);
    const auto classes = strip_brackets(equivalence_classes(data, letter_arrows(data, *inst.action)));
    const bool agree = classes == orbits;
    out.ok = out.ok && agree;
    lengths.push_back({{"max_chain_length", L}, {"classes", classes}, {"matches_orbits", agree}});
  }
  out.body = {{"kind", "action"}, {"orbits", orbits}, {"lengths", lengths}};
  return out;
}

Outcome verb_orbit_check(const std::string& text, const Context&) {
  const io::ActionInstance inst = io::action_from_json(text);
  const GroupActionInstance& a = *inst.action;
  const std::size_t n = a.carrier_size();
  Outcome out;
  std::vector<std::string> carrier;
  for (std::size_t x = 0; x < n; ++x) carrier.push_back(a.carrier_name(x));

  json orbit = json::array();
  std::vector<std::vector<bool>> orbit_eq(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < n; ++y) {
      const OrbitResult r = orbit_equivalent(a, carrier[x], carrier[y]);
      orbit_eq[x][y] = r.equivalent;
      row.push_back(r.element ? json(*r.element) : json(nullptr));
    }
    orbit.push_back(std::move(row));
  }

  json lengths = json::array();
  for (std::size_t L : inst.chain_lengths) {
    const EquivData data = delooped_data(inst.action, L);
    json matrix = json::array();
    bool all = true;
    for (std::size_t x = 0; x < n; ++x) {
      json row = json::array();
      for (std::size_t y = 0; y < n; ++y) {
        const bool agree = delooped_equivalent(data, carrier[x], carrier[y]) == orbit_eq[x][y];
        all = all && agree;
        row.push_back(agree);
      }
      matrix.push_back(std::move(row));
    }
    out.ok = out.ok && all;
    lengths.push_back({{"max_chain_length", L}, {"agreement", matrix}, {"all_agree", all}});
  }
  out.body = {{"carrier", carrier}, {"orbit_element", orbit}, {"orbits", a.orbits()}, {"lengths", lengths}};
  return out;
}

Outcome verb_preord_check(const std::string& text, const Context&) {
  const io::PreordInstance inst = io::preord_from_json(text);
  Outcome out;
  json objects = json::object();
  for (const auto& [name, obj] : inst.objects)
    objects[name] = {{"kind", obj->kind() == PreordMSetObject::Kind::finite ? "finite" : "numeric"},
                     {"size", obj->size()}};
  json maps = json::object();
  for (const auto& [name, f] : inst.maps) {
    const bool identity_cell = is_two_cell(Rational(1), f, f);
    out.ok = out.ok && identity_cell;
    maps[name] = {{"map", f.describe()}, {"identity_cell_valid", identity_cell}};
  }
  json cells = json::object();
  std::map<std::string, std::optional<CentralCell>> built;
  for (const auto& [name, spec] : inst.cells) {
    json entry{{"value", PositiveRationals::format(spec.value)}, {"src", spec.src}, {"tgt", spec.tgt}};
    try {
      built.emplace(name, CentralCell::make(spec.value, inst.maps.at(spec.src), inst.maps.at(spec.tgt)));
      entry["valid"] = true;
    } catch (const InvalidCell&) {
      built.emplace(name, std::nullopt);
      entry["valid"] = false;
      out.ok = false;
    }
    cells[name] = std::move(entry);
  }
  json squares = json::array();
  for (const auto& names : inst.interchange) {
    json entry{{"cells", names}};
    const auto& c = built.at(names[0]);
    const auto& cp = built.at(names[1]);
    const auto& d = built.at(names[2]);
    const auto& dp = built.at(names[3]);
    if (!c || !cp || !d || !dp) {
      entry["holds"] = false;
      entry["error"] = "invalid input cell";
      out.ok = false;
    } else {
      try {
        const InterchangeResult r = check_interchange(*c, *cp, *d, *dp);
        entry["holds"] = r.holds;
        entry["vertical_first"] = PositiveRationals::format(r.vertical_first);
        entry["horizontal_first"] = PositiveRationals::format(r.horizontal_first);
        out.ok = out.ok && r.holds;
      } catch (const NotComposable& e) {
        entry["holds"] = false;
        entry["error"] = e.what();
        out.ok = false;
      }
    }
    squares.push_back(std::move(entry));
  }
  out.body = {{"objects", objects}, {"maps", maps}, {"cells", cells}, {"interchange", squares}};
  return out;
}

Outcome verb_frame(const std::string& text, const Context& ctx) {
  const io::FrameInstance inst = io::frame_from_json(text);
  const BesselFamily& f = inst.f;
  const bool complex = f.field() == Field::complex;
  Outcome out;
  const RhoForm p = frame_operator(f, ctx.tol);
  const FrameBounds bounds = is_frame(f, ctx.tol);
  out.body = {{"field", to_string(f.field())},
              {"dim", f.dim()},
              {"count", f.count()},
              {"frame_operator", matrix_json(p.matrix(), complex)},
              {"eigenvalues", vector_json(p.eigenvalues())},
              {"is_frame", bounds.is_frame}};
  out.ok = bounds.is_frame;
  if (bounds.is_frame) {
    out.body["bounds"] = {bounds.lower, bounds.upper};
    out.body["tight"] = bounds.tight();
    const OnbWitness w = onb_witness(f, ctx.tol);
    const DefVerdict v =
        def_equivalent_with_witness(f, standard_basis(f.dim(), f.field()), w.u, w.u_tilde, std::nullopt, ctx.tol);
    json onb = def_json(v);
    onb["u"] = matrix_json(w.u.matrix(), complex);
    onb["u_tilde"] = matrix_json(w.u_tilde.matrix(), complex);
    out.body["onb_witness"] = std::move(onb);
    out.ok = out.ok && v.equivalent;
  }
  std::mt19937_64 rng(ctx.seed);
  const OperatorMatrix alpha(gaussian_matrix(rng, f.dim(), f.dim(), complex));
  const AdjointCheck adj = adjoint_identity_check(f, alpha, ctx.seed);
  out.body["adjoint_check"] = {{"max_deviation", adj.max_deviation}, {"relative", adj.relative()}, {"probes", adj.probes}};
  if (inst.f_tilde) {
    const DefVerdict v = def_equivalent_with_witness(f, *inst.f_tilde, *inst.u, *inst.u_tilde, inst.variant, ctx.tol);
    out.body["query"] = def_json(v);
    if (inst.variant) out.body["query"]["variant"] = to_string(*inst.variant);
    out.ok = out.ok && v.equivalent;
  }
  return out;
}

Outcome verb_bridge(const std::string& text, const Context& ctx) {
  const io::BridgeInstance inst = io::bridge_from_json(text);
  Outcome out;
  const BridgeVerdict v = bridge_equivalent(inst.f, inst.f_tilde, inst.u1, inst.u2, inst.v1, inst.v2, ctx.tol);
  const DefVerdict d = def_equivalent_with_witness(inst.f, inst.f_tilde, OperatorMatrix(inst.u1.adjoint()),
                                                   OperatorMatrix(inst.v1.adjoint()), std::nullopt, ctx.tol);
  out.body = {{"equivalent", v.equivalent},
              {"u_side", asymp_json(v.u_side)},
              {"v_side", asymp_json(v.v_side)},
              {"witness_check", {{"equivalent", d.equivalent}, {"agrees", d.equivalent == v.equivalent}}}};
  if (v.equivalent) out.body["cells"] = {{"c", v.c}, {"c_tilde", v.c_tilde}, {"d", v.d}, {"d_tilde", v.d_tilde}};

  std::vector<SeminormRep> seminorms = inst.seminorms;
  if (seminorms.empty()) seminorms.push_back(SeminormRep::norm(inst.f_tilde.count()));
  const bool complex = inst.f.field() == Field::complex || inst.f_tilde.field() == Field::complex;
  std::mt19937_64 rng(ctx.seed);
  json composites = json::array();
  for (const SeminormRep& s : seminorms) {
    const SeminormRep closed = bridge_composite(inst.f, inst.u1, inst.u2, s);
    const SeminormRep staged = bridge_composite_staged(inst.f, inst.u1, inst.u2, s);
    const CMatrix probes = gaussian_matrix(rng, inst.f_tilde.dim(), 32, complex);
    double dev = 0;
    for (Eigen::Index i = 0; i < probes.cols(); ++i) {
      const double a = eval_seminorm(closed, probes.col(i));
      const double b = eval_seminorm(staged, probes.col(i));
      dev = std::max(dev, std::abs(a - b) / std::max(1.0, std::abs(a)));
    }
    composites.push_back({{"input_dominated", s.dominated()},
                          {"scale", closed.scale},
                          {"dominated", closed.dominated()},
                          {"staged_relative_deviation", dev}});
  }
  out.body["composites"] = std::move(composites);
  out.ok = v.equivalent;
  return out;
}

// ---------------------------------------------------------------------------

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const SchemaError*>(&e)) return "SchemaError";
  if (dynamic_cast<const UnknownId*>(&e)) return "UnknownId";
  if (dynamic_cast<const UnknownElement*>(&e)) return "UnknownElement";
  if (dynamic_cast<const LawViolation*>(&e)) return "LawViolation";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
  if (dynamic_cast<const ClassViolation*>(&e)) return "ClassViolation";
  if (dynamic_cast<const NotComposable*>(&e)) return "NotComposable";
  if (dynamic_cast<const NotParallel*>(&e)) return "NotParallel";
  if (dynamic_cast<const InvalidCell*>(&e)) return "InvalidCell";
  if (dynamic_cast<const Error*>(&e)) return "Error";
  return "InternalError";
}

void render_text(const json& j, int indent, std::ostream& os);

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool flat(const json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const json& x : j)
    if (x.is_object() || (x.is_array() && !flat(x))) return false;
  return true;
}

std::string flat_text(const json& j) {
  if (!j.is_array()) return scalar_text(j);
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + flat_text(j[i]);
  return s + "]";
}

void render_text(const json& j, int indent, std::ostream& os) {
  const std::string pad(std::size_t(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (flat(v)) {
        os << pad << k << ": " << flat_text(v) << '\n';
      } else {
        os << pad << k << ":\n";
        render_text(v, indent + 2, os);
      }
    }
  } else if (j.is_array()) {
    for (const json& x : j) {
      if (flat(x)) {
        os << pad << "- " << flat_text(x) << '\n';
      } else {
        os << pad << "-\n";
        render_text(x, indent + 2, os);
      }
    }
  } else {
    os << pad << scalar_text(j) << '\n';
  }
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v{"validate", "equiv",  "classes", "orbit-check",
                                          "preord-check", "frame", "bridge"};
  return v;
}

RunResult run(const std::string& verb, const RunConfig& cfg) {
  RunResult result;
  json report{{"schema_version", schema_version}, {"verb", verb}};
  json results = json::array();
  bool all_ok = true;
  try {
    if (std::find(verbs().begin(), verbs().end(), verb) == verbs().end())
      throw SchemaError("unknown verb \"" + verb + "\"");
    if (cfg.inputs.empty()) throw SchemaError("no input files");
    Context ctx;
    ctx.seed = cfg.seed;
    if (cfg.tol_rank) {
      if (!(*cfg.tol_rank > 0)) throw SchemaError("--tol-rank must be positive");
      ctx.tol.rank = *cfg.tol_rank;
    }
    if (cfg.tol_psd) {
      if (!(*cfg.tol_psd > 0)) throw SchemaError("--tol-psd must be positive");
      ctx.tol.psd = *cfg.tol_psd;
    }
    report["config"] = {{"seed", cfg.seed}, {"tol_rank", ctx.tol.rank}, {"tol_psd", ctx.tol.psd}};
    for (const std::string& input : cfg.inputs) {
      const std::filesystem::path path(input);
      const std::string text = io::read_text(path);
      const std::filesystem::path base = path.parent_path();
      Outcome o;
      if (verb == "validate") o = verb_validate(text, ctx);
      else if (verb == "equiv") o = verb_equiv(text, base, ctx);
      else if (verb == "classes") o = verb_classes(text, base, ctx);
      else if (verb == "orbit-check") o = verb_orbit_check(text, ctx);
      else if (verb == "preord-check") o = verb_preord_check(text, ctx);
      else if (verb == "frame") o = verb_frame(text, ctx);
      else o = verb_bridge(text, ctx);
      o.body["input"] = path.filename().string();
      o.body["ok"] = o.ok;
      all_ok = all_ok && o.ok;
      results.push_back(std::move(o.body));
    }
    report["results"] = std::move(results);
    report["ok"] = all_ok;
    result.exit_code = all_ok ? exit_true : exit_false;
  } catch (const std::exception& e) {
    report.erase("results");
    report["error"] = {{"kind", error_kind(e)}, {"message", e.what()}};
    report["ok"] = false;
    result.exit_code = exit_input_error;
    result.error = error_kind(e) + ": " + e.what();
  }

  if (cfg.format == Format::json) {
    result.report = report.dump(2) + "\n";
  } else {
    std::ostringstream os;
    render_text(report, 0, os);
    result.report = os.str();
  }
  if (cfg.out) {
    std::ofstream f(*cfg.out, std::ios::binary);
    if (!f) {
      result.error = "cannot write " + *cfg.out;
      result.exit_code = exit_input_error;
    } else {
      f << result.report;
    }
  }
  return result;
}

}  // namespace morphequiv::cli
