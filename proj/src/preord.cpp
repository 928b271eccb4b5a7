#include "morphequiv/preord.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

#include "morphequiv/errors.hpp"

namespace morphequiv {

using boost::multiprecision::cpp_int;

namespace {

bool is_prime(const cpp_int& n) {
  if (n < 2) return false;
  for (cpp_int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// p-adic valuation of a nonzero rational.
long valuation(const Rational& q, const cpp_int& p) {
  long v = 0;
  cpp_int num = abs(boost::multiprecision::numerator(q));
  cpp_int den = boost::multiprecision::denominator(q);
  while (num != 0 && num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  return v;
}

const std::size_t& as_index(const Element& x) {
  if (const auto* i = std::get_if<std::size_t>(&x)) return *i;
  throw std::invalid_argument("numeric element passed to a finite object");
}

const Rational& as_point(const Element& x) {
  if (const auto* q = std::get_if<Rational>(&x)) return *q;
  throw std::invalid_argument("finite element passed to a numeric object");
}

}  // namespace

Rational PositiveRationals::parse(const std::string& text) {
  static const std::regex pattern(R"(\s*(\d+)\s*(?:/\s*(\d+)\s*)?)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) throw SchemaError("not a positive rational: '" + text + "'");
  const cpp_int num(match[1].str());
  const cpp_int den(match[2].matched ? match[2].str() : std::string("1"));
  if (num == 0 || den == 0) throw SchemaError("not a positive rational: '" + text + "'");
  return Rational(num, den);
}

std::string PositiveRationals::format(const Rational& q) {
  const cpp_int den = boost::multiprecision::denominator(q);
  const std::string num = boost::multiprecision::numerator(q).str();
  if (den == 1) return num;
  return num + "/" + den.str();
}

// ---------------------------------------------------------------------------
// Objects

std::shared_ptr<const PreordMSetObject> PreordMSetObject::finite(FiniteObjectTables tables) {
  std::shared_ptr<PreordMSetObject> out(new PreordMSetObject());
  out->kind_ = Kind::finite;
  out->names_ = tables.carrier;
  const std::size_t n = out->names_.size();
  {
    auto sorted = out->names_;
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
      throw SchemaError("duplicate carrier element: " + *it);
  }

  out->leq_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) out->leq_[x * n + x] = 1;
  for (const auto& [x, y] : tables.leq) out->leq_[out->index_or_throw(x) * n + out->index_or_throw(y)] = 1;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (out->leq_[x * n + y] && out->leq_[y * n + z] && !out->leq_[x * n + z])
          throw LawViolation("order not transitive at (" + out->names_[x] + ", " + out->names_[y] + ", " +
                             out->names_[z] + ")");

  std::vector<std::pair<Rational, std::vector<std::size_t>>> gens;
  for (const auto& [scalar_text, values] : tables.act) {
    const Rational scalar = PositiveRationals::parse(scalar_text);
    if (boost::multiprecision::denominator(scalar) != 1 || !is_prime(boost::multiprecision::numerator(scalar)))
      throw SchemaError("generator scalars must be primes, got " + scalar_text);
    for (const auto& g : gens)
      if (g.first == scalar) throw SchemaError("generator listed twice: " + scalar_text);
    std::vector<std::size_t> perm(n, n);
    for (const auto& [x, image] : values) perm[out->index_or_throw(x)] = out->index_or_throw(image);
    for (std::size_t x = 0; x < n; ++x)
      if (perm[x] == n) throw SchemaError("action of " + scalar_text + " undefined on " + out->names_[x]);
    auto sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw LawViolation("action of " + scalar_text + " is not a bijection");
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (out->leq_[x * n + y] && !out->leq_[perm[x] * n + perm[y]])
          throw LawViolation("action of " + scalar_text + " is not monotone at (" + out->names_[x] + ", " +
                             out->names_[y] + ")");
    gens.emplace_back(scalar, std::move(perm));
  }
  std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      for (std::size_t x = 0; x < n; ++x)
        if (gens[i].second[gens[j].second[x]] != gens[j].second[gens[i].second[x]])
          throw LawViolation("actions of " + PositiveRationals::format(gens[i].first) + " and " +
                             PositiveRationals::format(gens[j].first) + " do not commute");
  for (auto& [scalar, perm] : gens) {
    std::vector<std::size_t> inverse(n);
    for (std::size_t x = 0; x < n; ++x) inverse[perm[x]] = x;
    out->generators_.push_back(scalar);
    out->perms_.push_back(std::move(perm));
    out->inverse_perms_.push_back(std::move(inverse));
  }
  return out;
}

std::shared_ptr<const PreordMSetObject> PreordMSetObject::numeric(std::vector<Rational> sample) {
  for (const auto& q : sample)
    if (!PositiveRationals::contains(q)) throw SchemaError("numeric sample points must be positive");
  std::sort(sample.begin(), sample.end());
  sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
  std::shared_ptr<PreordMSetObject> out(new PreordMSetObject());
  out->kind_ = Kind::numeric;
  out->sample_ = std::move(sample);
  return out;
}

Element PreordMSetObject::element(std::size_t i) const {
  if (kind_ == Kind::finite) return i;
  return sample_.at(i);
}

std::string PreordMSetObject::name(const Element& x) const {
  if (kind_ == Kind::finite) return names_.at(as_index(x));
  return PositiveRationals::format(as_point(x));
}

std::size_t PreordMSetObject::index_or_throw(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw UnknownId(name);
  return static_cast<std::size_t>(it - names_.begin());
}

bool PreordMSetObject::leq(const Element& x, const Element& y) const {
  if (kind_ == Kind::numeric) return as_point(x) <= as_point(y);
  return leq_[as_index(x) * names_.size() + as_index(y)] != 0;
}

Element PreordMSetObject::act(const Rational& scalar, const Element& x) const {
  if (!PositiveRationals::contains(scalar)) throw InvalidCell("scalar outside M+");
  if (kind_ == Kind::numeric) return scalar * as_point(x);
  std::size_t y = as_index(x);
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    long v = valuation(scalar, boost::multiprecision::numerator(generators_[i]));
    const auto& step = v >= 0 ? perms_[i] : inverse_perms_[i];
    // Orbits are at most |X| long, so the power can be reduced along the cycle.
    std::size_t cycle = 1;
    for (std::size_t z = step[y]; z != y; z = step[z]) ++cycle;
    for (std::size_t k = static_cast<std::size_t>(v >= 0 ? v : -v) % cycle; k > 0; --k) y = step[y];
  }
  return y;
}

// ---------------------------------------------------------------------------
// Maps

EquivariantMonotoneMap EquivariantMonotoneMap::table(ObjectRef dom, ObjectRef cod,
                                                     const std::map<std::string, std::string>& values) {
  if (dom->kind() != PreordMSetObject::Kind::finite || cod->kind() != PreordMSetObject::Kind::finite)
    throw SchemaError("table maps need finite objects on both sides");
  EquivariantMonotoneMap f;
  const std::size_t n = dom->size();
  f.table_.assign(n, cod->size());
  for (const auto& [x, image] : values) f.table_[dom->index_or_throw(x)] = cod->index_or_throw(image);
  for (std::size_t x = 0; x < n; ++x)
    if (f.table_[x] == cod->size()) throw SchemaError("map undefined on " + dom->name(x));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (dom->leq(x, y) && !cod->leq(f.table_[x], f.table_[y]))
        throw LawViolation("map not monotone at (" + dom->name(x) + ", " + dom->name(y) + ")");
  std::vector<Rational> scalars = dom->generators();
  scalars.insert(scalars.end(), cod->generators().begin(), cod->generators().end());
  for (const auto& p : scalars)
    for (std::size_t x = 0; x < n; ++x)
      if (f.table_[as_index(dom->act(p, x))] != as_index(cod->act(p, f.table_[x])))
        throw LawViolation("map not equivariant for " + PositiveRationals::format(p) + " at " + dom->name(x));
  f.dom_ = std::move(dom);
  f.cod_ = std::move(cod);
  return f;
}

EquivariantMonotoneMap EquivariantMonotoneMap::multiplier(ObjectRef dom, ObjectRef cod, const Rational& a) {
  if (dom->kind() != PreordMSetObject::Kind::numeric || cod->kind() != PreordMSetObject::Kind::numeric)
    throw SchemaError("multiplier maps need numeric objects on both sides");
  if (!PositiveRationals::contains(a)) throw SchemaError("multiplier must be positive");
  EquivariantMonotoneMap f;
  f.dom_ = std::move(dom);
  f.cod_ = std::move(cod);
  f.factor_ = a;
  return f;
}

EquivariantMonotoneMap EquivariantMonotoneMap::identity(ObjectRef x) {
  if (x->kind() == PreordMSetObject::Kind::numeric) return multiplier(x, x, 1);
  EquivariantMonotoneMap f;
  f.table_.resize(x->size());
  for (std::size_t i = 0; i < f.table_.size(); ++i) f.table_[i] = i;
  f.dom_ = x;
  f.cod_ = std::move(x);
  return f;
}

Element EquivariantMonotoneMap::operator()(const Element& x) const {
  if (dom_->kind() == PreordMSetObject::Kind::numeric) return factor_ * as_point(x);
  return table_.at(as_index(x));
}

std::string EquivariantMonotoneMap::describe() const {
  if (dom_->kind() == PreordMSetObject::Kind::numeric) return "x -> " + PositiveRationals::format(factor_) + "*x";
  std::string out = "{";
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if (x) out += ", ";
    out += dom_->name(x) + "->" + cod_->name(table_[x]);
  }
  return out + "}";
}

bool EquivariantMonotoneMap::operator==(const EquivariantMonotoneMap& other) const {
  return dom_ == other.dom_ && cod_ == other.cod_ && table_ == other.table_ && factor_ == other.factor_;
}

EquivariantMonotoneMap compose(const EquivariantMonotoneMap& second, const EquivariantMonotoneMap& first) {
  if (first.cod() != second.dom()) throw NotComposable("maps do not compose: codomain differs from domain");
  if (first.dom()->kind() == PreordMSetObject::Kind::numeric)
    return EquivariantMonotoneMap::multiplier(first.dom(), second.cod(), second.factor() * first.factor());
  std::map<std::string, std::string> values;
  for (std::size_t x = 0; x < first.dom()->size(); ++x)
    values[first.dom()->name(x)] = second.cod()->name(second(first(x)));
  return EquivariantMonotoneMap::table(first.dom(), second.cod(), values);
}

// ---------------------------------------------------------------------------
// Cells

bool is_two_cell(const Rational& c, const EquivariantMonotoneMap& f, const EquivariantMonotoneMap& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) throw NotParallel("2-cell boundaries are not parallel");
  if (!PositiveRationals::contains(c)) return false;
  const auto& dom = *f.dom();
  const auto& cod = *f.cod();
  for (std::size_t i = 0; i < dom.size(); ++i) {
    const Element x = dom.element(i);
    const Element fx = f(x);
    for (std::size_t j = 0; j < dom.size(); ++j) {
      const Element y = dom.element(j);
      if (dom.leq(y, x) && !cod.leq(cod.act(c, g(y)), fx)) return false;
    }
  }
  return true;
}

CentralCell CentralCell::make(const Rational& value, EquivariantMonotoneMap src, EquivariantMonotoneMap tgt) {
  if (!is_two_cell(value, src, tgt))
    throw InvalidCell(PositiveRationals::format(value) + " is not a 2-cell " + src.describe() + " => " + tgt.describe());
  return CentralCell{value, std::move(src), std::move(tgt)};
}

CentralCell CentralCell::identity(const EquivariantMonotoneMap& f) { return CentralCell{Rational(1), f, f}; }

CentralCell compose_cells(CellMode mode, const CentralCell& d, const CentralCell& c) {
  if (mode == CellMode::vertical) {
    if (!(c.tgt == d.src)) throw NotComposable("vertical composite needs tgt(c) = src(d)");
    return CentralCell{c.value * d.value, c.src, d.tgt};
  }
  if (c.src.cod() != d.src.dom()) throw NotComposable("horizontal composite needs cod(c) = dom(d)");
  return CentralCell{c.value * d.value, compose(d.src, c.src), compose(d.tgt, c.tgt)};
}

InterchangeResult check_interchange(const CentralCell& c, const CentralCell& c_prime, const CentralCell& d,
                                    const CentralCell& d_prime) {
  for (const CentralCell* cell : {&c, &c_prime, &d, &d_prime})
    if (!cell->valid()) throw InvalidCell(PositiveRationals::format(cell->value) + " is not a valid 2-cell");
  const CentralCell lhs = compose_cells(CellMode::horizontal, compose_cells(CellMode::vertical, d_prime, d),
                                        compose_cells(CellMode::vertical, c_prime, c));
  const CentralCell rhs = compose_cells(CellMode::vertical, compose_cells(CellMode::horizontal, d_prime, c_prime),
                                        compose_cells(CellMode::horizontal, d, c));
  InterchangeResult out;
  out.vertical_first = lhs.value;
  out.horizontal_first = rhs.value;
  out.vertical_first_valid = lhs.valid();
  out.horizontal_first_valid = rhs.valid();
  out.holds = lhs.value == rhs.value && lhs.src == rhs.src && lhs.tgt == rhs.tgt && out.vertical_first_valid &&
              out.horizontal_first_valid;
  return out;
}

}  // namespace morphequiv
