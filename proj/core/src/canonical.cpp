#include "monophilic/canonical.hpp"

#include <array>
#include <map>

#include "monophilic/errors.hpp"
#include "prefix_walker.hpp"

namespace monophilic {

namespace detail {

namespace {
constexpr int kMaxDepth = 64;
constexpr int kMaxListSize = 64;
}  // namespace

PrefixWalker::PrefixWalker(std::vector<int> sizes, std::vector<std::vector<int>> nest_with)
    : sizes_(std::move(sizes)), nest_with_(std::move(nest_with)) {
  if (static_cast<int>(sizes_.size()) > kMaxDepth) throw InputError("enumeration supports at most 64 vertices");
  nest_with_.resize(sizes_.size());
  offsets_.resize(sizes_.size() + 1, 0);
  for (std::size_t d = 0; d < sizes_.size(); ++d) {
    if (sizes_[d] < 0 || sizes_[d] > kMaxListSize) throw InputError("list sizes must lie in 0..64");
    offsets_[d + 1] = offsets_[d] + sizes_[d];
  }
  cells_.assign(static_cast<std::size_t>(offsets_.back()), 0);
  max_after_.assign(sizes_.size(), 0);
  masks_.assign(sizes_.size(), 0);
  label_.assign(static_cast<std::size_t>(offsets_.back()) + 2, 0);
  occurrence_.assign(static_cast<std::size_t>(offsets_.back()) + 2, 0);
}

bool PrefixWalker::first_combination(int d) {
  Color* c = cells_.data() + offsets_[d];
  for (int i = 0; i < sizes_[d]; ++i) c[i] = i + 1;
  return true;
}

bool PrefixWalker::next_combination(int d) {
  const int s = sizes_[d];
  const int universe = (d == 0 ? 0 : max_after_[d - 1]) + s;
  Color* c = cells_.data() + offsets_[d];
  int i = s - 1;
  while (i >= 0 && c[i] == universe - (s - 1 - i)) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
  return true;
}

bool PrefixWalker::restricted_growth(int d) const {
  const int before = d == 0 ? 0 : max_after_[d - 1];
  auto list = this->list(d);
  Color expect = before + 1;
  for (Color c : list) {
    if (c <= before) continue;
    if (c != expect) return false;
    ++expect;
  }
  return true;
}

bool PrefixWalker::nested_ok(int d) const {
  auto mine = list(d);
  for (int e : nest_with_[d]) {
    auto other = list(e);
    if (!std::includes(mine.begin(), mine.end(), other.begin(), other.end()) &&
        !std::includes(other.begin(), other.end(), mine.begin(), mine.end()))
      return false;
  }
  return true;
}

bool PrefixWalker::admissible(int d) { return restricted_growth(d) && nested_ok(d) && canonical(d); }

bool PrefixWalker::canonical(int d) {
  int top_colour = d == 0 ? 0 : max_after_[d - 1];
  if (sizes_[d] > 0) top_colour = std::max(top_colour, list(d).back());
  std::fill(label_.begin(), label_.begin() + top_colour + 1, 0);
  std::fill(occurrence_.begin(), occurrence_.begin() + top_colour + 1, 0);
  for (int t = 0; t <= d; ++t)
    for (Color c : list(t)) occurrence_[c] |= std::uint64_t{1} << t;
  return !smaller_relabelling(0, d, 1);
}

// Is there a relabelling, agreeing with the labels fixed so far, whose
// serialization of positions t..top is smaller than the walker's own?
bool PrefixWalker::smaller_relabelling(int t, int top, int next_label) {
  auto target = list(t);
  const int s = static_cast<int>(target.size());
  std::array<int, kMaxListSize> mapped;
  std::array<Color, kMaxListSize> fresh;
  int n_mapped = 0, n_fresh = 0;
  for (Color c : target) {
    if (label_[c]) mapped[n_mapped++] = label_[c];
    else fresh[n_fresh++] = c;
  }
  std::sort(mapped.begin(), mapped.begin() + n_mapped);
  for (int i = 0; i < s; ++i) {
    const int image = i < n_mapped ? mapped[i] : next_label + (i - n_mapped);
    if (image < target[i]) return true;
    if (image > target[i]) return false;
  }
  if (t == top) return false;
  if (n_fresh == 0) return smaller_relabelling(t + 1, top, next_label);

  // Fresh colours with the same later occurrences are interchangeable.
  const int shift = t + 1;
  auto signature = [&](Color c) { return occurrence_[c] >> shift; };
  std::sort(fresh.begin(), fresh.begin() + n_fresh,
            [&](Color a, Color b) { return signature(a) < signature(b); });
  std::array<std::uint64_t, kMaxListSize> arrangement;
  for (int i = 0; i < n_fresh; ++i) arrangement[i] = signature(fresh[i]);
  do {
    std::uint64_t taken = 0;
    for (int i = 0; i < n_fresh; ++i) {
      for (int j = 0; j < n_fresh; ++j) {
        if (!(taken >> j & 1u) && signature(fresh[j]) == arrangement[i]) {
          taken |= std::uint64_t{1} << j;
          label_[fresh[j]] = next_label + i;
          break;
        }
      }
    }
    const bool found = smaller_relabelling(t + 1, top, next_label + n_fresh);
    for (int j = 0; j < n_fresh; ++j) label_[fresh[j]] = 0;
    if (found) return true;
  } while (std::next_permutation(arrangement.begin(), arrangement.begin() + n_fresh));
  return false;
}

void PrefixWalker::commit(int d) {
  const int before = d == 0 ? 0 : max_after_[d - 1];
  auto list = this->list(d);
  max_after_[d] = list.empty() ? before : std::max(before, list.back());
  std::uint64_t mask = 0;
  for (Color c : list)
    if (c <= 64) mask |= std::uint64_t{1} << (c - 1);
  masks_[d] = mask;
}

bool PrefixWalker::push() {
  if (depth_ >= length()) return false;
  const int d = depth_;
  first_combination(d);
  // max_after_ of depth d-1 is valid; admissible() reads only that.
  while (!admissible(d)) {
    if (!next_combination(d)) return false;
  }
  commit(d);
  ++depth_;
  return true;
}

bool PrefixWalker::advance() {
  const int d = depth_ - 1;
  while (next_combination(d)) {
    if (admissible(d)) {
      commit(d);
      return true;
    }
  }
  --depth_;
  return false;
}

void PrefixWalker::pop() { --depth_; }

void PrefixWalker::assign(const std::vector<std::vector<Color>>& prefix) {
  depth_ = 0;
  for (const auto& list : prefix) {
    std::copy(list.begin(), list.end(), cells_.begin() + offsets_[depth_]);
    commit(depth_);
    ++depth_;
  }
}

std::vector<std::vector<Color>> PrefixWalker::snapshot() const {
  std::vector<std::vector<Color>> out;
  for (int d = 0; d < depth_; ++d) {
    auto l = list(d);
    out.emplace_back(l.begin(), l.end());
  }
  return out;
}

}  // namespace detail

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(std::vector<ColorList> lists) : lists_(std::move(lists)) {
    for (std::size_t v = 0; v < lists_.size(); ++v)
      for (Color c : lists_[v]) positions_[c].push_back(static_cast<int>(v));
    for (auto& [c, pos] : positions_) pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    current_.resize(lists_.size());
    best_ = lists_;
  }

  std::vector<ColorList> run() {
    search(0, 1);
    return best_;
  }

 private:
  // Lexicographic comparison of current_ and best_ over positions 0..t.
  int compare_prefix(std::size_t t) const {
    for (std::size_t i = 0; i <= t; ++i) {
      if (current_[i] < best_[i]) return -1;
      if (best_[i] < current_[i]) return 1;
    }
    return 0;
  }

  std::vector<int> later_positions(Color c, int t) const {
    const auto& pos = positions_.at(c);
    return {std::upper_bound(pos.begin(), pos.end(), t), pos.end()};
  }

  void search(std::size_t t, int next_label) {
    if (t == lists_.size()) {
      if (current_ < best_) best_ = current_;
      return;
    }
    ColorList image;
    std::vector<Color> fresh;
    for (Color c : lists_[t]) {
      auto it = label_.find(c);
      if (it != label_.end()) image.push_back(it->second);
      else fresh.push_back(c);
    }
    std::sort(image.begin(), image.end());
    for (std::size_t i = 0; i < fresh.size(); ++i) image.push_back(next_label + static_cast<int>(i));
    current_[t] = image;
    if (compare_prefix(t) > 0) return;
    if (fresh.empty()) {
      search(t + 1, next_label);
      return;
    }
    const int ti = static_cast<int>(t);
    std::sort(fresh.begin(), fresh.end(),
              [&](Color a, Color b) { return later_positions(a, ti) < later_positions(b, ti); });
    std::vector<std::vector<int>> arrangement;
    for (Color c : fresh) arrangement.push_back(later_positions(c, ti));
    do {
      std::vector<char> taken(fresh.size(), 0);
      for (std::size_t i = 0; i < fresh.size(); ++i) {
        for (std::size_t j = 0; j < fresh.size(); ++j) {
          if (!taken[j] && later_positions(fresh[j], ti) == arrangement[i]) {
            taken[j] = 1;
            label_[fresh[j]] = next_label + static_cast<int>(i);
            break;
          }
        }
      }
      search(t + 1, next_label + static_cast<int>(fresh.size()));
      for (Color c : fresh) label_.erase(c);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  }

  std::vector<ColorList> lists_;
  std::map<Color, std::vector<int>> positions_;
  std::map<Color, int> label_;
  std::vector<ColorList> current_;
  std::vector<ColorList> best_;
};

}  // namespace

ListAssignment canonical_form(const ListAssignment& lists) {
  // Start from the first-appearance renaming so best_ is a valid candidate.
  std::map<Color, Color> rename;
  std::vector<ColorList> normalized;
  for (const auto& list : lists.lists()) {
    ColorList out;
    for (Color c : list) {
      auto [it, inserted] = rename.emplace(c, static_cast<Color>(rename.size() + 1));
      out.push_back(it->second);
    }
    std::sort(out.begin(), out.end());
    normalized.push_back(std::move(out));
  }
  return ListAssignment(CanonicalSearch(std::move(normalized)).run());
}

}  // namespace monophilic
