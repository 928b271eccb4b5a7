#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace morphequiv {

enum class ObjectIndex : std::uint32_t {};
enum class ArrowIndex : std::uint32_t {};
enum class CellIndex : std::uint32_t {};

template <typename E>
constexpr std::size_t raw(E e) noexcept {
  return static_cast<std::size_t>(e);
}

/// Read-only view of a small strict category. Morphisms (1-cells) are called
/// arrows; every arrow and object also has an opaque string name, and all
/// enumeration orders exposed here are by name.
class CategoryView {
public:
  virtual ~CategoryView() = default;

  virtual std::size_t object_count() const = 0;
  virtual std::size_t arrow_count() const = 0;
  virtual std::string object_name(ObjectIndex x) const = 0;
  virtual std::string arrow_name(ArrowIndex f) const = 0;
  virtual std::optional<ObjectIndex> find_object(std::string_view name) const = 0;
  virtual std::optional<ArrowIndex> find_arrow(std::string_view name) const = 0;

  virtual ObjectIndex dom(ArrowIndex f) const = 0;
  virtual ObjectIndex cod(ArrowIndex f) const = 0;
  virtual ArrowIndex identity(ObjectIndex x) const = 0;
  /// second ∘ first, or nullopt where the composition table has no entry.
  virtual std::optional<ArrowIndex> compose(ArrowIndex second, ArrowIndex first) const = 0;
  /// All arrows from -> to, sorted by name.
  virtual std::span<const ArrowIndex> hom(ObjectIndex from, ObjectIndex to) const = 0;
};

/// A strict 2-category: a category (the 1-skeleton) plus 2-cells between
/// parallel arrows, vertical composition and whiskering on both sides.
class TwoCategoryView : public CategoryView {
public:
  virtual std::size_t cell_count() const = 0;
  virtual std::string cell_name(CellIndex a) const = 0;
  virtual std::optional<CellIndex> find_cell(std::string_view name) const = 0;

  virtual ArrowIndex src(CellIndex a) const = 0;
  virtual ArrowIndex tgt(CellIndex a) const = 0;
  virtual CellIndex identity_cell(ArrowIndex f) const = 0;
  virtual std::optional<CellIndex> vcomp(CellIndex second, CellIndex first) const = 0;
  /// k ∘ alpha, defined when dom(k) = cod(src(alpha)).
  virtual std::optional<CellIndex> whisker_left(ArrowIndex k, CellIndex alpha) const = 0;
  /// alpha ∘ k, defined when cod(k) = dom(src(alpha)).
  virtual std::optional<CellIndex> whisker_right(CellIndex alpha, ArrowIndex k) const = 0;

  /// All 2-cells from => to, sorted by name.
  virtual std::vector<CellIndex> cells_between(ArrowIndex from, ArrowIndex to) const = 0;
  virtual std::optional<CellIndex> first_cell_between(ArrowIndex from, ArrowIndex to) const;
};

// ---------------------------------------------------------------------------
// Raw tables, as read from instance files.

struct ArrowDecl {
  std::string id;
  std::string dom;
  std::string cod;
};

struct CellDecl {
  std::string id;
  std::string src;
  std::string tgt;
};

using Triple = std::array<std::string, 3>;

struct CategoryTables {
  std::vector<std::string> objects;
  std::vector<ArrowDecl> morphisms;
  std::map<std::string, std::string> identity;
  /// (second, first, second∘first)
  std::vector<Triple> compose;
};

struct TwoCategoryTables {
  std::vector<std::string> objects;
  std::vector<ArrowDecl> one_cells;
  std::map<std::string, std::string> identity;
  std::vector<Triple> compose;
  std::vector<CellDecl> two_cells;
  std::map<std::string, std::string> identity2;
  /// (second, first, second ∘v first)
  std::vector<Triple> vcomp;
  /// (k, alpha, k ∘ alpha)
  std::vector<Triple> whisker_left;
  /// (alpha, k, alpha ∘ k)
  std::vector<Triple> whisker_right;
};

struct Violation {
  std::string axiom;
  std::vector<std::string> witnesses;
};

struct ValidationReport {
  static constexpr std::size_t max_violations = 10000;

  std::vector<Violation> violations;
  bool truncated = false;

  bool ok() const noexcept { return violations.empty() && !truncated; }
  void add(std::string axiom, std::vector<std::string> witnesses);
  void merge(const ValidationReport& other);
  std::string summary() const;
};

// ---------------------------------------------------------------------------
// Table-backed instances. Both are validated eagerly: an object of either
// type always satisfies every axiom.

namespace detail {
struct ArrowTable;
struct CellTable;
}  // namespace detail

class FiniteCategory final : public CategoryView {
public:
  /// Throws UnknownId/SchemaError for malformed tables and LawViolation
  /// (with the full report in what()) for unlawful ones.
  static std::shared_ptr<const FiniteCategory> load(CategoryTables tables);

  ~FiniteCategory() override;

  const CategoryTables& tables() const noexcept { return tables_; }

  std::size_t object_count() const override;
  std::size_t arrow_count() const override;
  std::string object_name(ObjectIndex x) const override;
  std::string arrow_name(ArrowIndex f) const override;
  std::optional<ObjectIndex> find_object(std::string_view name) const override;
  std::optional<ArrowIndex> find_arrow(std::string_view name) const override;
  ObjectIndex dom(ArrowIndex f) const override;
  ObjectIndex cod(ArrowIndex f) const override;
  ArrowIndex identity(ObjectIndex x) const override;
  std::optional<ArrowIndex> compose(ArrowIndex second, ArrowIndex first) const override;
  std::span<const ArrowIndex> hom(ObjectIndex from, ObjectIndex to) const override;

private:
  friend ValidationReport validate_category(const CategoryTables& tables);
  explicit FiniteCategory(CategoryTables tables);

  CategoryTables tables_;
  std::unique_ptr<detail::ArrowTable> arrows_;
};

class Finite2Category final : public TwoCategoryView {
public:
  static std::shared_ptr<const Finite2Category> load(TwoCategoryTables tables);

  ~Finite2Category() override;

  const TwoCategoryTables& tables() const noexcept { return tables_; }

  std::size_t object_count() const override;
  std::size_t arrow_count() const override;
  std::string object_name(ObjectIndex x) const override;
  std::string arrow_name(ArrowIndex f) const override;
  std::optional<ObjectIndex> find_object(std::string_view name) const override;
  std::optional<ArrowIndex> find_arrow(std::string_view name) const override;
  ObjectIndex dom(ArrowIndex f) const override;
  ObjectIndex cod(ArrowIndex f) const override;
  ArrowIndex identity(ObjectIndex x) const override;
  std::optional<ArrowIndex> compose(ArrowIndex second, ArrowIndex first) const override;
  std::span<const ArrowIndex> hom(ObjectIndex from, ObjectIndex to) const override;

  std::size_t cell_count() const override;
  std::string cell_name(CellIndex a) const override;
  std::optional<CellIndex> find_cell(std::string_view name) const override;
  ArrowIndex src(CellIndex a) const override;
  ArrowIndex tgt(CellIndex a) const override;
  CellIndex identity_cell(ArrowIndex f) const override;
  std::optional<CellIndex> vcomp(CellIndex second, CellIndex first) const override;
  std::optional<CellIndex> whisker_left(ArrowIndex k, CellIndex alpha) const override;
  std::optional<CellIndex> whisker_right(CellIndex alpha, ArrowIndex k) const override;
  std::vector<CellIndex> cells_between(ArrowIndex from, ArrowIndex to) const override;
  std::optional<CellIndex> first_cell_between(ArrowIndex from, ArrowIndex to) const override;

private:
  friend ValidationReport validate_two_category(const TwoCategoryTables& tables);
  explicit Finite2Category(TwoCategoryTables tables);

  TwoCategoryTables tables_;
  std::unique_ptr<detail::ArrowTable> arrows_;
  std::unique_ptr<detail::CellTable> cells_;
};

/// Axiom reports. The table overloads also report entries defined on
/// non-composable pairs and conflicting duplicate entries; they throw only
/// for dangling identifiers (UnknownId) or missing identities (SchemaError).
ValidationReport validate_category(const CategoryView& c);
ValidationReport validate_category(const CategoryTables& tables);
ValidationReport validate_two_category(const TwoCategoryView& d);
ValidationReport validate_two_category(const TwoCategoryTables& tables);

// ---------------------------------------------------------------------------
// Composition by index, throwing NotComposable where undefined.

ArrowIndex compose_checked(const CategoryView& c, ArrowIndex second, ArrowIndex first);
CellIndex vcomp_checked(const TwoCategoryView& d, CellIndex second, CellIndex first);
CellIndex whisker_left_checked(const TwoCategoryView& d, ArrowIndex k, CellIndex alpha);
CellIndex whisker_right_checked(const TwoCategoryView& d, CellIndex alpha, ArrowIndex k);
/// Horizontal composite beta * alpha = (tgt(beta) ∘ alpha) ∘v (beta ∘ src(alpha)).
/// Throws LawViolation if the opposite whiskering order disagrees.
CellIndex hcomp(const TwoCategoryView& d, CellIndex beta, CellIndex alpha);

// Composition by name (UnknownId for names not in the instance).

enum class Side { left, right };

std::string compose1(const CategoryView& c, std::string_view second, std::string_view first);
std::string vcomp2(const TwoCategoryView& d, std::string_view second, std::string_view first);
std::string whisker(const TwoCategoryView& d, Side side, std::string_view k, std::string_view alpha);
std::string hcomp2(const TwoCategoryView& d, std::string_view beta, std::string_view alpha);

ObjectIndex object_or_throw(const CategoryView& c, std::string_view name);
ArrowIndex arrow_or_throw(const CategoryView& c, std::string_view name);
CellIndex cell_or_throw(const TwoCategoryView& d, std::string_view name);

// ---------------------------------------------------------------------------
// Maps from a category C into (the 1-skeleton of) a 2-category D.

struct MorphismMap {
  std::vector<ObjectIndex> on_objects;
  std::vector<ArrowIndex> on_arrows;
};

/// Resolves a name-keyed description; every object and arrow of c must be
/// mapped (SchemaError otherwise).
MorphismMap resolve_map(const CategoryView& c, const CategoryView& d,
                        const std::map<std::string, std::string>& objects,
                        const std::map<std::string, std::string>& arrows);

ValidationReport check_boundaries(const CategoryView& c, const CategoryView& d,
                                  const MorphismMap& map);
ValidationReport check_functor(const CategoryView& c, const CategoryView& d,
                               const MorphismMap& map);

/// A dom/cod-compatible assignment with no composition law (the sigma slot).
class MorphismFunction {
public:
  MorphismFunction(const CategoryView& c, const CategoryView& d, MorphismMap map);

  ObjectIndex operator()(ObjectIndex x) const { return map_.on_objects[raw(x)]; }
  ArrowIndex operator()(ArrowIndex f) const { return map_.on_arrows[raw(f)]; }
  const MorphismMap& map() const noexcept { return map_; }

private:
  MorphismMap map_;
};

/// A validated functor: identities and composites are preserved.
class FunctorData {
public:
  FunctorData(const CategoryView& c, const CategoryView& d, MorphismMap map);

  ObjectIndex operator()(ObjectIndex x) const { return map_.on_objects[raw(x)]; }
  ArrowIndex operator()(ArrowIndex f) const { return map_.on_arrows[raw(f)]; }
  const MorphismMap& map() const noexcept { return map_; }

private:
  MorphismMap map_;
};

/// Identity map of a view onto itself.
MorphismMap identity_map(const CategoryView& c);

/// Explicit tables for every composite of a view (used to materialize
/// procedurally defined instances).
CategoryTables to_tables(const CategoryView& c);
TwoCategoryTables to_tables(const TwoCategoryView& d);

}  // namespace morphequiv
