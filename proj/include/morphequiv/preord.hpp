#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace morphequiv {

using Rational = boost::multiprecision::cpp_rational;

/// M⁺ = Z(M⁺) = strictly positive rationals under multiplication.
struct PositiveRationals {
  static bool contains(const Rational& q) { return q > 0; }
  static Rational unit() { return Rational(1); }
  static Rational mul(const Rational& a, const Rational& b) { return a * b; }
  /// "3", "3/4"; throws SchemaError for malformed or non-positive input.
  static Rational parse(const std::string& text);
  static std::string format(const Rational& q);
};

/// Carrier index (finite objects) or a point of the ambient ℚ⁺ (numeric objects).
using Element = std::variant<std::size_t, Rational>;

struct FiniteObjectTables {
  std::vector<std::string> carrier;
  /// (x, y) meaning x ≤ y. Reflexive pairs are implied.
  std::vector<std::pair<std::string, std::string>> leq;
  /// scalar -> (x -> scalar.x). Scalars must be distinct primes; any other
  /// positive rational acts through its prime factorization and primes not
  /// listed act trivially.
  std::map<std::string, std::map<std::string, std::string>> act;
};

/// An object of PreOrd-M⁺Set.
///
/// Finite objects carry an explicit preorder and an action by commuting
/// order-automorphisms on generator primes. Numeric objects are ℚ⁺ itself
/// (usual order, action by multiplication) observed on a finite sample of
/// points; universally quantified conditions are checked on the sample.
class PreordMSetObject {
public:
  enum class Kind { finite, numeric };

  /// Throws SchemaError/UnknownId for malformed tables, LawViolation when
  /// the relation is not transitive or a generator is not a monotone
  /// bijection, or two generators do not commute.
  static std::shared_ptr<const PreordMSetObject> finite(FiniteObjectTables tables);
  /// Sample points must be positive (SchemaError otherwise).
  static std::shared_ptr<const PreordMSetObject> numeric(std::vector<Rational> sample);

  Kind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return kind_ == Kind::finite ? names_.size() : sample_.size(); }
  Element element(std::size_t i) const;
  std::string name(const Element& x) const;
  /// Finite objects only.
  std::size_t index_or_throw(const std::string& name) const;

  bool leq(const Element& x, const Element& y) const;
  Element act(const Rational& scalar, const Element& x) const;
  const std::vector<Rational>& generators() const noexcept { return generators_; }

private:
  PreordMSetObject() = default;

  Kind kind_ = Kind::finite;
  std::vector<std::string> names_;
  std::vector<char> leq_;  // [x * n + y]: x ≤ y
  std::vector<Rational> generators_;
  std::vector<std::vector<std::size_t>> perms_;
  std::vector<std::vector<std::size_t>> inverse_perms_;
  std::vector<Rational> sample_;
};

using ObjectRef = std::shared_ptr<const PreordMSetObject>;

/// A monotone M⁺-equivariant map. Finite to finite maps are tables; numeric
/// to numeric maps are exactly x ↦ a·x and are stored as the multiplier a.
class EquivariantMonotoneMap {
public:
  /// Throws UnknownId/SchemaError for malformed tables and LawViolation if
  /// the table is not monotone or not equivariant.
  static EquivariantMonotoneMap table(ObjectRef dom, ObjectRef cod,
                                      const std::map<std::string, std::string>& values);
  /// Both objects numeric; a > 0.
  static EquivariantMonotoneMap multiplier(ObjectRef dom, ObjectRef cod, const Rational& a);
  static EquivariantMonotoneMap identity(ObjectRef x);

  const ObjectRef& dom() const noexcept { return dom_; }
  const ObjectRef& cod() const noexcept { return cod_; }
  Element operator()(const Element& x) const;
  /// Multiplier of a numeric map.
  const Rational& factor() const noexcept { return factor_; }
  std::string describe() const;

  bool operator==(const EquivariantMonotoneMap& other) const;

private:
  EquivariantMonotoneMap() = default;

  ObjectRef dom_;
  ObjectRef cod_;
  std::vector<std::size_t> table_;
  Rational factor_{1};
};

/// second ∘ first; throws NotComposable.
EquivariantMonotoneMap compose(const EquivariantMonotoneMap& second, const EquivariantMonotoneMap& first);

/// c ∈ Hom(f, g): f(x) ≥ c.g(y) for all x ≥ y. Throws NotParallel.
bool is_two_cell(const Rational& c, const EquivariantMonotoneMap& f, const EquivariantMonotoneMap& g);

struct CentralCell {
  Rational value;
  EquivariantMonotoneMap src;
  EquivariantMonotoneMap tgt;

  /// Throws NotParallel, or InvalidCell if value ∉ Hom(src, tgt).
  static CentralCell make(const Rational& value, EquivariantMonotoneMap src, EquivariantMonotoneMap tgt);
  static CentralCell identity(const EquivariantMonotoneMap& f);
  bool valid() const { return is_two_cell(value, src, tgt); }
};

enum class CellMode { vertical, horizontal };

/// vertical: c: f ⇒ g, d: g ⇒ h gives cd: f ⇒ h.
/// horizontal: c: f ⇒ g (X₁ → X₂), d: h ⇒ i (X₂ → X₃) gives cd: h∘f ⇒ i∘g.
/// Throws NotComposable.
CentralCell compose_cells(CellMode mode, const CentralCell& d, const CentralCell& c);

struct InterchangeResult {
  bool holds = false;
  /// (d′ ∘ d) * (c′ ∘ c)
  Rational vertical_first;
  /// (d′ * c′) ∘ (d * c)
  Rational horizontal_first;
  bool vertical_first_valid = false;
  bool horizontal_first_valid = false;

  explicit operator bool() const noexcept { return holds; }
};

/// c: f ⇒ f′, c′: f′ ⇒ f″ on X₁ → X₂ and d: g ⇒ g′, d′: g′ ⇒ g″ on X₂ → X₃.
/// Throws InvalidCell if an input is not a valid cell, NotComposable if the
/// squares do not fit together.
InterchangeResult check_interchange(const CentralCell& c, const CentralCell& c_prime, const CentralCell& d,
                                    const CentralCell& d_prime);

}  // namespace morphequiv
