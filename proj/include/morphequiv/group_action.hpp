#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "morphequiv/category.hpp"
#include "morphequiv/equivalence.hpp"

namespace morphequiv {

struct GroupTables {
  std::vector<std::string> elements;
  /// (g, h, gh)
  std::vector<Triple> mul;
  std::string unit;
};

/// A finite group given by its Cayley table. Element order is the order of
/// `elements` as supplied.
class FiniteGroup {
public:
  /// Throws SchemaError for incomplete or conflicting tables, UnknownElement
  /// for dangling names, LawViolation if the group axioms fail.
  explicit FiniteGroup(GroupTables tables);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t g) const { return names_[g]; }
  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t index_or_throw(const std::string& name) const;
  std::size_t mul(std::size_t g, std::size_t h) const { return mul_[g * size() + h]; }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  std::size_t unit() const noexcept { return unit_; }
  const GroupTables& tables() const noexcept { return tables_; }

private:
  GroupTables tables_;
  std::vector<std::string> names_;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> inverse_;
  std::size_t unit_ = 0;
};

struct ActionTables {
  GroupTables group;
  std::vector<std::string> carrier;
  /// (g, x, g.x)
  std::vector<Triple> act;
};

/// A left action of a finite group on a finite set E.
class GroupActionInstance {
public:
  /// Throws as FiniteGroup, plus LawViolation if the unit does not act
  /// trivially or g.(h.x) != (gh).x somewhere.
  explicit GroupActionInstance(ActionTables tables);

  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t carrier_size() const noexcept { return carrier_.size(); }
  const std::string& carrier_name(std::size_t x) const { return carrier_[x]; }
  std::size_t carrier_index(const std::string& name) const;
  std::size_t act(std::size_t g, std::size_t x) const { return act_[g * carrier_size() + x]; }
  /// Group elements g with g.x = y, in element order.
  const std::vector<std::size_t>& transporters(std::size_t x, std::size_t y) const {
    return transporters_[x * carrier_size() + y];
  }
  /// Orbit partition; members and blocks sorted by name.
  std::vector<std::vector<std::string>> orbits() const;
  const ActionTables& tables() const noexcept { return tables_; }

private:
  ActionTables tables_;
  FiniteGroup group_;
  std::vector<std::string> carrier_;
  std::vector<std::size_t> act_;
  std::vector<std::vector<std::size_t>> transporters_;
};

struct OrbitResult {
  bool equivalent = false;
  /// The first g in element order with g.f = fTilde.
  std::optional<std::string> element;

  explicit operator bool() const noexcept { return equivalent; }
};

/// Throws UnknownElement.
OrbitResult orbit_equivalent(const GroupActionInstance& a, const std::string& f,
                             const std::string& f_tilde);

using Word = std::vector<std::string>;

struct WordTwoCell {
  Word src;
  Word tgt;
  std::vector<std::string> labels;

  bool operator==(const WordTwoCell&) const = default;
};

/// All wordwise groupoid morphisms src => tgt: label tuples with
/// tgt[i] = labels[i].src[i], in lexicographic element order. Empty when
/// the lengths differ.
std::vector<WordTwoCell> chain_two_cells(const GroupActionInstance& a, const Word& src,
                                         const Word& tgt);

/// Finite slice of the delooping of the free strict monoidal category on the
/// action groupoid: one object "*", 1-cells the words of length at most
/// `max_word_length` plus an absorbing 1-cell "#overflow" standing for every
/// longer word, composition g∘f = concatenation (g then f), 2-cells wordwise
/// groupoid morphisms, vertical composition by label products and whiskering
/// by padding with unit labels.
///
/// Names: 1-cells "<>", "<a>", "<a|b>", ..., "#overflow"; 2-cells
/// "<a|b>@(g|h)" (source word and labels), "#overflow@()".
class DeloopedSlice final : public TwoCategoryView {
public:
  static constexpr const char* overflow_name = "#overflow";

  /// Throws SchemaError if a carrier or element name contains one of the
  /// reserved characters "<>|@()#" or the slice would exceed 10^6 1-cells.
  DeloopedSlice(std::shared_ptr<const GroupActionInstance> action, std::size_t max_word_length);

  const GroupActionInstance& action() const noexcept { return *action_; }
  std::size_t max_word_length() const noexcept { return max_len_; }

  static std::string word_name(const Word& w);
  /// 1-cell for a word of carrier names (the overflow cell if it is too long).
  ArrowIndex word(const Word& w) const;
  ArrowIndex overflow() const noexcept { return ArrowIndex(word_count_); }
  /// Letters of a 1-cell; nullopt for the overflow cell.
  std::optional<Word> letters(ArrowIndex f) const;

  std::size_t object_count() const override { return 1; }
  std::size_t arrow_count() const override { return word_count_ + 1; }
  std::string object_name(ObjectIndex) const override { return "*"; }
  std::string arrow_name(ArrowIndex f) const override;
  std::optional<ObjectIndex> find_object(std::string_view name) const override;
  std::optional<ArrowIndex> find_arrow(std::string_view name) const override;
  ObjectIndex dom(ArrowIndex) const override { return ObjectIndex(0); }
  ObjectIndex cod(ArrowIndex) const override { return ObjectIndex(0); }
  ArrowIndex identity(ObjectIndex) const override { return ArrowIndex(0); }
  std::optional<ArrowIndex> compose(ArrowIndex second, ArrowIndex first) const override;
  std::span<const ArrowIndex> hom(ObjectIndex from, ObjectIndex to) const override;

  std::size_t cell_count() const override { return cell_total_ + 1; }
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
  struct ArrowCode {
    std::size_t length;
    std::size_t rank;
  };
  struct CellCode {
    std::size_t length;
    std::size_t word_rank;
    std::size_t label_rank;
  };

  bool is_overflow(ArrowIndex f) const noexcept { return raw(f) == word_count_; }
  bool is_overflow(CellIndex a) const noexcept { return raw(a) == cell_total_; }
  ArrowCode decode(ArrowIndex f) const;
  CellCode decode(CellIndex a) const;
  ArrowIndex encode(std::size_t length, std::size_t rank) const;
  CellIndex encode(std::size_t length, std::size_t word_rank, std::size_t label_rank) const;
  std::vector<std::size_t> digits(std::size_t rank, std::size_t base, std::size_t length) const;
  std::size_t undigits(const std::vector<std::size_t>& d, std::size_t base) const;
  std::optional<CellIndex> pad(CellIndex alpha, ArrowIndex k, bool on_left) const;

  std::shared_ptr<const GroupActionInstance> action_;
  std::size_t max_len_;
  std::size_t e_;
  std::size_t g_;
  std::vector<std::size_t> e_pow_;
  std::vector<std::size_t> g_pow_;
  std::vector<std::size_t> arrow_offset_;
  std::vector<std::size_t> cell_offset_;
  std::size_t word_count_ = 0;
  std::size_t cell_total_ = 0;
  std::vector<ArrowIndex> sorted_arrows_;
  std::unordered_map<std::string, ArrowIndex> arrow_lookup_;
};

/// (slice, slice, Id, Id, Id) for words of length at most max_chain_length + 1.
EquivData delooped_data(std::shared_ptr<const GroupActionInstance> action,
                        std::size_t max_chain_length);

/// Def.-2.1 search for the one-letter words <f> and <fTilde> in the slice.
bool delooped_equivalent(const EquivData& slice_data, const std::string& f, const std::string& f_tilde);
bool delooped_equivalent(std::shared_ptr<const GroupActionInstance> action, const std::string& f,
                         const std::string& f_tilde, std::size_t max_chain_length);

}  // namespace morphequiv
