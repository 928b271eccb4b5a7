#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morphequiv/category.hpp"
#include "morphequiv/equivalence.hpp"
#include "morphequiv/frame.hpp"
#include "morphequiv/group_action.hpp"
#include "morphequiv/preord.hpp"
#include "morphequiv/seminorm.hpp"

// Instance-file loaders. Malformed JSON raises ParseError; JSON of the wrong
// shape raises SchemaError. Structural failures detected by the constructors
// (UnknownId, LawViolation, ...) propagate unchanged.
namespace morphequiv::io {

/// Throws ParseError if the file cannot be read.
std::string read_text(const std::filesystem::path& path);

enum class InstanceKind { category, two_category, equiv, action, family, frame, bridge, preord };

std::string to_string(InstanceKind k);
/// Guesses the kind from the top-level keys; throws SchemaError.
InstanceKind detect_kind(const std::string& text);

CategoryTables category_from_json(const std::string& text);
TwoCategoryTables two_category_from_json(const std::string& text);

struct EquivInstance {
  std::shared_ptr<const FiniteCategory> c;
  std::shared_ptr<const Finite2Category> d;
  std::shared_ptr<const EquivData> data;
  /// Pairs (m, m̃) to decide; may be empty.
  std::vector<std::pair<std::string, std::string>> pairs;
};

/// "category"/"two_category" are inline objects or paths relative to
/// base_dir; "sigma", "tau1", "tau2" are {"objects": {...}, "morphisms": {...}}.
EquivInstance equiv_from_json(const std::string& text, const std::filesystem::path& base_dir = {});
EquivInstance load_equiv(const std::filesystem::path& path);

struct ActionInstance {
  std::shared_ptr<const GroupActionInstance> action;
  /// Chain-length bounds to cross-check; defaults to {0, 1, 2}.
  std::vector<std::size_t> chain_lengths;
};

ActionInstance action_from_json(const std::string& text);

BesselFamily family_from_json(const std::string& text);

struct FrameInstance {
  BesselFamily f;
  /// Optional Def.-3.4 query against f_tilde with the supplied witness.
  std::optional<BesselFamily> f_tilde;
  std::optional<OperatorMatrix> u;
  std::optional<OperatorMatrix> u_tilde;
  std::optional<OperatorClass> variant;
};

/// Either a bare family file or {"family": ..., "f_tilde": ..., "u": ..., "u_tilde": ..., "variant": ...}.
FrameInstance frame_from_json(const std::string& text);

struct BridgeInstance {
  BesselFamily f;
  BesselFamily f_tilde;
  CMatrix u1, u2, v1, v2;
  /// Seminorms on L²(Ω̃) whose composites are reported; may be empty.
  std::vector<SeminormRep> seminorms;
};

BridgeInstance bridge_from_json(const std::string& text);

SeminormRep seminorm_from_json(const std::string& text);

struct CellSpec {
  Rational value;
  std::string src;
  std::string tgt;
};

struct PreordInstance {
  std::map<std::string, ObjectRef> objects;
  std::map<std::string, EquivariantMonotoneMap> maps;
  std::map<std::string, CellSpec> cells;
  /// Names (c, c′, d, d′) of interchange squares.
  std::vector<std::array<std::string, 4>> interchange;
};

PreordInstance preord_from_json(const std::string& text);

}  // namespace morphequiv::io
