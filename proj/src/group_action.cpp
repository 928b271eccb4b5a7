#include "morphequiv/group_action.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "morphequiv/errors.hpp"

namespace morphequiv {

namespace {

constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
constexpr std::size_t max_slice_arrows = 1'000'000;

std::vector<std::string> unique_names(const std::vector<std::string>& names, const char* what) {
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
    throw SchemaError(std::string("duplicate ") + what + ": " + *it);
  return names;
}

std::size_t lookup(const std::map<std::string, std::size_t>& index, const std::string& name) {
  auto it = index.find(name);
  if (it == index.end()) throw UnknownElement(name);
  return it->second;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(GroupTables tables) : tables_(std::move(tables)) {
  names_ = unique_names(tables_.elements, "group element");
  const std::size_t n = names_.size();
  if (n == 0) throw SchemaError("a group needs at least one element");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[names_[i]] = i;
  unit_ = lookup(index, tables_.unit);

  mul_.assign(n * n, unset);
  for (const auto& [g, h, gh] : tables_.mul) {
    std::size_t& slot = mul_[lookup(index, g) * n + lookup(index, h)];
    const std::size_t value = lookup(index, gh);
    if (slot != unset && slot != value) throw SchemaError("conflicting products for " + g + "*" + h);
    slot = value;
  }
  for (std::size_t i = 0; i < n * n; ++i)
    if (mul_[i] == unset)
      throw SchemaError("missing product " + names_[i / n] + "*" + names_[i % n]);

  for (std::size_t g = 0; g < n; ++g)
    if (mul(unit_, g) != g || mul(g, unit_) != g)
      throw LawViolation("unit law fails at " + names_[g]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw LawViolation("associativity fails at (" + names_[a] + ", " + names_[b] + ", " + names_[c] + ")");
  inverse_.assign(n, unset);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h)
      if (mul(g, h) == unit_ && mul(h, g) == unit_) {
        inverse_[g] = h;
        break;
      }
    if (inverse_[g] == unset) throw LawViolation("no inverse for " + names_[g]);
  }
}

std::optional<std::size_t> FiniteGroup::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t FiniteGroup::index_or_throw(const std::string& name) const {
  if (auto g = find(name)) return *g;
  throw UnknownElement(name);
}

// ---------------------------------------------------------------------------
// GroupActionInstance

GroupActionInstance::GroupActionInstance(ActionTables tables)
    : tables_(std::move(tables)), group_(tables_.group) {
  carrier_ = unique_names(tables_.carrier, "carrier element");
  const std::size_t n = carrier_.size();
  const std::size_t order = group_.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t x = 0; x < n; ++x) index[carrier_[x]] = x;

  act_.assign(order * n, unset);
  for (const auto& [g, x, gx] : tables_.act) {
    std::size_t& slot = act_[group_.index_or_throw(g) * n + lookup(index, x)];
    const std::size_t value = lookup(index, gx);
    if (slot != unset && slot != value) throw SchemaError("conflicting action entries for " + g + "." + x);
    slot = value;
  }
  for (std::size_t i = 0; i < act_.size(); ++i)
    if (act_[i] == unset)
      throw SchemaError("missing action entry " + group_.name(i / n) + "." + carrier_[i % n]);

  for (std::size_t x = 0; x < n; ++x)
    if (act(group_.unit(), x) != x) throw LawViolation("unit does not fix " + carrier_[x]);
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t h = 0; h < order; ++h)
      for (std::size_t x = 0; x < n; ++x)
        if (act(g, act(h, x)) != act(group_.mul(g, h), x))
          throw LawViolation("compatibility fails at (" + group_.name(g) + ", " + group_.name(h) + ", " +
                             carrier_[x] + ")");

  transporters_.assign(n * n, {});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t g = 0; g < order; ++g) transporters_[x * n + act(g, x)].push_back(g);
}

std::size_t GroupActionInstance::carrier_index(const std::string& name) const {
  auto it = std::find(carrier_.begin(), carrier_.end(), name);
  if (it == carrier_.end()) throw UnknownElement(name);
  return static_cast<std::size_t>(it - carrier_.begin());
}

std::vector<std::vector<std::string>> GroupActionInstance::orbits() const {
  const std::size_t n = carrier_size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::string>> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<std::string> block;
    for (std::size_t y = 0; y < n; ++y)
      if (!transporters(x, y).empty()) {
        seen[y] = true;
        block.push_back(carrier_[y]);
      }
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  std::sort(out.begin(), out.end());
  return out;
}

OrbitResult orbit_equivalent(const GroupActionInstance& a, const std::string& f, const std::string& f_tilde) {
  const auto& ts = a.transporters(a.carrier_index(f), a.carrier_index(f_tilde));
  if (ts.empty()) return {};
  return {true, a.group().name(ts.front())};
}

std::vector<WordTwoCell> chain_two_cells(const GroupActionInstance& a, const Word& src, const Word& tgt) {
  if (src.size() != tgt.size()) return {};
  std::vector<const std::vector<std::size_t>*> options;
  for (std::size_t i = 0; i < src.size(); ++i) {
    options.push_back(&a.transporters(a.carrier_index(src[i]), a.carrier_index(tgt[i])));
    if (options.back()->empty()) return {};
  }
  std::vector<WordTwoCell> out;
  std::vector<std::size_t> pick(src.size(), 0);
  while (true) {
    WordTwoCell cell{src, tgt, {}};
    for (std::size_t i = 0; i < src.size(); ++i) cell.labels.push_back(a.group().name((*options[i])[pick[i]]));
    out.push_back(std::move(cell));
    std::size_t i = src.size();
    while (i > 0 && ++pick[i - 1] == options[i - 1]->size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// DeloopedSlice

DeloopedSlice::DeloopedSlice(std::shared_ptr<const GroupActionInstance> action, std::size_t max_word_length)
    : action_(std::move(action)),
      max_len_(max_word_length),
      e_(action_->carrier_size()),
      g_(action_->group().size()) {
  auto check_name = [](const std::string& name) {
    if (name.empty() || name.find_first_of("<>|@()#") != std::string::npos)
      throw SchemaError("name not usable in a delooped slice: '" + name + "'");
  };
  for (std::size_t x = 0; x < e_; ++x) check_name(action_->carrier_name(x));
  for (std::size_t g = 0; g < g_; ++g) check_name(action_->group().name(g));

  e_pow_.assign(max_len_ + 1, 1);
  g_pow_.assign(max_len_ + 1, 1);
  for (std::size_t k = 1; k <= max_len_; ++k) {
    if (e_pow_[k - 1] > max_slice_arrows / std::max<std::size_t>(e_, 1))
      throw SchemaError("delooped slice too large");
    e_pow_[k] = e_pow_[k - 1] * e_;
    g_pow_[k] = g_pow_[k - 1] * g_;
  }
  for (std::size_t k = 0; k <= max_len_; ++k) {
    arrow_offset_.push_back(word_count_);
    cell_offset_.push_back(cell_total_);
    word_count_ += e_pow_[k];
    cell_total_ += e_pow_[k] * g_pow_[k];
  }
  if (word_count_ > max_slice_arrows) throw SchemaError("delooped slice too large");

  std::vector<std::string> names(word_count_ + 1);
  for (std::size_t f = 0; f <= word_count_; ++f) {
    names[f] = arrow_name(ArrowIndex(f));
    arrow_lookup_.emplace(names[f], ArrowIndex(f));
    sorted_arrows_.push_back(ArrowIndex(f));
  }
  std::sort(sorted_arrows_.begin(), sorted_arrows_.end(),
            [&](ArrowIndex a, ArrowIndex b) { return names[raw(a)] < names[raw(b)]; });
}

std::string DeloopedSlice::word_name(const Word& w) {
  std::string out = "<";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '|';
    out += w[i];
  }
  return out + ">";
}

std::vector<std::size_t> DeloopedSlice::digits(std::size_t rank, std::size_t base, std::size_t length) const {
  std::vector<std::size_t> d(length);
  for (std::size_t i = length; i > 0; --i) {
    d[i - 1] = rank % base;
    rank /= base;
  }
  return d;
}

std::size_t DeloopedSlice::undigits(const std::vector<std::size_t>& d, std::size_t base) const {
  std::size_t rank = 0;
  for (std::size_t x : d) rank = rank * base + x;
  return rank;
}

DeloopedSlice::ArrowCode DeloopedSlice::decode(ArrowIndex f) const {
  const std::size_t i = raw(f);
  std::size_t k = max_len_;
  while (arrow_offset_[k] > i) --k;
  return {k, i - arrow_offset_[k]};
}

DeloopedSlice::CellCode DeloopedSlice::decode(CellIndex a) const {
  const std::size_t i = raw(a);
  std::size_t k = max_len_;
  while (cell_offset_[k] > i) --k;
  const std::size_t local = i - cell_offset_[k];
  return {k, local / g_pow_[k], local % g_pow_[k]};
}

ArrowIndex DeloopedSlice::encode(std::size_t length, std::size_t rank) const {
  if (length > max_len_) return overflow();
  return ArrowIndex(arrow_offset_[length] + rank);
}

CellIndex DeloopedSlice::encode(std::size_t length, std::size_t word_rank, std::size_t label_rank) const {
  if (length > max_len_) return CellIndex(cell_total_);
  return CellIndex(cell_offset_[length] + word_rank * g_pow_[length] + label_rank);
}

ArrowIndex DeloopedSlice::word(const Word& w) const {
  if (w.size() > max_len_) {
    for (const auto& x : w) action_->carrier_index(x);
    return overflow();
  }
  std::vector<std::size_t> d;
  for (const auto& x : w) d.push_back(action_->carrier_index(x));
  return encode(w.size(), undigits(d, e_));
}

std::optional<Word> DeloopedSlice::letters(ArrowIndex f) const {
  if (is_overflow(f)) return std::nullopt;
  const auto code = decode(f);
  Word w;
  for (std::size_t x : digits(code.rank, e_, code.length)) w.push_back(action_->carrier_name(x));
  return w;
}

std::string DeloopedSlice::arrow_name(ArrowIndex f) const {
  if (is_overflow(f)) return overflow_name;
  return word_name(*letters(f));
}

std::optional<ObjectIndex> DeloopedSlice::find_object(std::string_view name) const {
  if (name == "*") return ObjectIndex(0);
  return std::nullopt;
}

std::optional<ArrowIndex> DeloopedSlice::find_arrow(std::string_view name) const {
  auto it = arrow_lookup_.find(std::string(name));
  if (it == arrow_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowIndex> DeloopedSlice::compose(ArrowIndex second, ArrowIndex first) const {
  if (is_overflow(second) || is_overflow(first)) return overflow();
  const auto g = decode(second);
  const auto f = decode(first);
  const std::size_t length = g.length + f.length;
  if (length > max_len_) return overflow();
  return encode(length, g.rank * e_pow_[f.length] + f.rank);
}

std::span<const ArrowIndex> DeloopedSlice::hom(ObjectIndex, ObjectIndex) const { return sorted_arrows_; }

std::string DeloopedSlice::cell_name(CellIndex a) const {
  if (is_overflow(a)) return std::string(overflow_name) + "@()";
  const auto code = decode(a);
  std::string out = arrow_name(encode(code.length, code.word_rank)) + "@(";
  const auto labels = digits(code.label_rank, g_, code.length);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += '|';
    out += action_->group().name(labels[i]);
  }
  return out + ")";
}

std::optional<CellIndex> DeloopedSlice::find_cell(std::string_view name) const {
  const auto at = name.rfind("@(");
  if (at == std::string_view::npos || name.back() != ')') return std::nullopt;
  auto source = find_arrow(name.substr(0, at));
  if (!source) return std::nullopt;
  if (is_overflow(*source)) {
    if (name.substr(at) == "@()") return CellIndex(cell_total_);
    return std::nullopt;
  }
  const auto code = decode(*source);
  std::string_view body = name.substr(at + 2, name.size() - at - 3);
  std::vector<std::size_t> labels;
  while (!body.empty()) {
    const auto bar = body.find('|');
    auto g = action_->group().find(std::string(body.substr(0, bar)));
    if (!g) return std::nullopt;
    labels.push_back(*g);
    if (bar == std::string_view::npos) break;
    body.remove_prefix(bar + 1);
    if (body.empty()) return std::nullopt;
  }
  if (labels.size() != code.length) return std::nullopt;
  return encode(code.length, code.rank, undigits(labels, g_));
}

ArrowIndex DeloopedSlice::src(CellIndex a) const {
  if (is_overflow(a)) return overflow();
  const auto code = decode(a);
  return encode(code.length, code.word_rank);
}

ArrowIndex DeloopedSlice::tgt(CellIndex a) const {
  if (is_overflow(a)) return overflow();
  const auto code = decode(a);
  auto word = digits(code.word_rank, e_, code.length);
  const auto labels = digits(code.label_rank, g_, code.length);
  for (std::size_t i = 0; i < word.size(); ++i) word[i] = action_->act(labels[i], word[i]);
  return encode(code.length, undigits(word, e_));
}

CellIndex DeloopedSlice::identity_cell(ArrowIndex f) const {
  if (is_overflow(f)) return CellIndex(cell_total_);
  const auto code = decode(f);
  const std::vector<std::size_t> units(code.length, action_->group().unit());
  return encode(code.length, code.rank, undigits(units, g_));
}

std::optional<CellIndex> DeloopedSlice::vcomp(CellIndex second, CellIndex first) const {
  if (tgt(first) != src(second)) return std::nullopt;
  if (is_overflow(first)) return first;
  const auto b = decode(second);
  const auto a = decode(first);
  const auto lb = digits(b.label_rank, g_, b.length);
  auto la = digits(a.label_rank, g_, a.length);
  for (std::size_t i = 0; i < la.size(); ++i) la[i] = action_->group().mul(lb[i], la[i]);
  return encode(a.length, a.word_rank, undigits(la, g_));
}

std::optional<CellIndex> DeloopedSlice::pad(CellIndex alpha, ArrowIndex k, bool on_left) const {
  if (is_overflow(alpha) || is_overflow(k)) return CellIndex(cell_total_);
  const auto a = decode(alpha);
  const auto w = decode(k);
  const std::size_t length = a.length + w.length;
  if (length > max_len_) return CellIndex(cell_total_);
  const std::size_t unit_rank = undigits(std::vector<std::size_t>(w.length, action_->group().unit()), g_);
  if (on_left)
    return encode(length, w.rank * e_pow_[a.length] + a.word_rank, unit_rank * g_pow_[a.length] + a.label_rank);
  return encode(length, a.word_rank * e_pow_[w.length] + w.rank, a.label_rank * g_pow_[w.length] + unit_rank);
}

std::optional<CellIndex> DeloopedSlice::whisker_left(ArrowIndex k, CellIndex alpha) const {
  return pad(alpha, k, true);
}

std::optional<CellIndex> DeloopedSlice::whisker_right(CellIndex alpha, ArrowIndex k) const {
  return pad(alpha, k, false);
}

std::vector<CellIndex> DeloopedSlice::cells_between(ArrowIndex from, ArrowIndex to) const {
  if (is_overflow(from) || is_overflow(to)) {
    if (from == to) return {CellIndex(cell_total_)};
    return {};
  }
  const auto f = decode(from);
  const auto t = decode(to);
  if (f.length != t.length) return {};
  const auto src_word = digits(f.rank, e_, f.length);
  const auto tgt_word = digits(t.rank, e_, t.length);
  std::vector<const std::vector<std::size_t>*> options;
  for (std::size_t i = 0; i < f.length; ++i) {
    options.push_back(&action_->transporters(src_word[i], tgt_word[i]));
    if (options.back()->empty()) return {};
  }
  std::vector<CellIndex> out;
  std::vector<std::size_t> pick(f.length, 0), labels(f.length);
  while (true) {
    for (std::size_t i = 0; i < f.length; ++i) labels[i] = (*options[i])[pick[i]];
    out.push_back(encode(f.length, f.rank, undigits(labels, g_)));
    std::size_t i = f.length;
    while (i > 0 && ++pick[i - 1] == options[i - 1]->size()) pick[--i] = 0;
    if (i == 0) break;
  }
  std::vector<std::pair<std::string, CellIndex>> named;
  for (CellIndex a : out) named.emplace_back(cell_name(a), a);
  std::sort(named.begin(), named.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = named[i].second;
  return out;
}

std::optional<CellIndex> DeloopedSlice::first_cell_between(ArrowIndex from, ArrowIndex to) const {
  if (!is_overflow(from) && !is_overflow(to) && decode(from).length != decode(to).length) return std::nullopt;
  auto cells = cells_between(from, to);
  if (cells.empty()) return std::nullopt;
  return cells.front();
}

// ---------------------------------------------------------------------------

EquivData delooped_data(std::shared_ptr<const GroupActionInstance> action, std::size_t max_chain_length) {
  auto slice = std::make_shared<const DeloopedSlice>(std::move(action), max_chain_length + 1);
  auto id = identity_map(*slice);
  return EquivData(slice, slice, id, id, id);
}

bool delooped_equivalent(const EquivData& slice_data, const std::string& f, const std::string& f_tilde) {
  const auto* slice = dynamic_cast<const DeloopedSlice*>(&slice_data.d());
  if (slice == nullptr) throw SchemaError("equivalence data is not a delooped slice");
  const ArrowIndex m = slice->word({f});
  const ArrowIndex mt = slice->word({f_tilde});
  return are_equivalent(slice_data, m, mt).equivalent;
}

bool delooped_equivalent(std::shared_ptr<const GroupActionInstance> action, const std::string& f,
                         const std::string& f_tilde, std::size_t max_chain_length) {
  return delooped_equivalent(delooped_data(std::move(action), max_chain_length), f, f_tilde);
}

}  // namespace morphequiv
