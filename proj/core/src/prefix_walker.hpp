#pragma once

// Depth-first walker over list assignments up to colour relabelling.
//
// Depth d holds the list of the d-th vertex of a fixed order. Lists are
// emitted in restricted-growth form (a list may only introduce the colours
// max+1, max+2, ... in that order) and a prefix is kept only when its
// serialization (concatenated sorted lists) is lexicographically minimal
// over every relabelling of its colours. A non-minimal prefix has no minimal
// extension, so every class is reached exactly once.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "monophilic/count.hpp"

namespace monophilic::detail {

class PrefixWalker {
 public:
  // sizes[d]: list size at depth d. nest_with[d]: earlier depths whose list
  // must be nested (one contains the other) with the list at depth d.
  explicit PrefixWalker(std::vector<int> sizes, std::vector<std::vector<int>> nest_with = {});

  int depth() const noexcept { return depth_; }
  int length() const noexcept { return static_cast<int>(sizes_.size()); }
  std::span<const Color> list(int d) const {
    return {cells_.data() + offsets_[d], static_cast<std::size_t>(sizes_[d])};
  }
  // Bit c-1 set for colour c; meaningful while every colour is <= 64.
  std::span<const std::uint64_t> masks() const noexcept { return masks_; }
  int max_colour() const noexcept { return depth_ == 0 ? 0 : max_after_[depth_ - 1]; }

  // Places the first admissible list at depth(). False (and no change) if
  // the walker is full or no admissible list exists.
  bool push();
  // Replaces the deepest list by its next admissible sibling. When there is
  // none the deepest list is removed and false is returned.
  bool advance();
  void pop();

  // Sets the lists of depths 0..prefix.size()-1 verbatim (used to resume a
  // subtree handed over by another walker; the prefix must be admissible).
  void assign(const std::vector<std::vector<Color>>& prefix);

  std::vector<std::vector<Color>> snapshot() const;

 private:
  bool first_combination(int d);
  bool next_combination(int d);
  bool admissible(int d);
  bool restricted_growth(int d) const;
  bool nested_ok(int d) const;
  bool canonical(int d);
  bool smaller_relabelling(int t, int top, int next_label);
  void commit(int d);

  std::vector<int> sizes_;
  std::vector<std::vector<int>> nest_with_;
  std::vector<int> offsets_;
  std::vector<Color> cells_;
  std::vector<int> max_after_;
  std::vector<std::uint64_t> masks_;
  int depth_ = 0;

  // Scratch for the canonicity test.
  std::vector<int> label_;
  std::vector<std::uint64_t> occurrence_;
};

// Step returned by a visitor for the node currently at the walker's top.
enum class Step { Descend, Skip, Stop };

// Depth-first traversal of the subtree below the walker's current prefix,
// never going deeper than max_depth. visit is called once per node.
// Returns false if the visitor stopped the walk (the walker is restored to
// its starting depth either way).
template <class Visit>
bool walk(PrefixWalker& walker, int max_depth, Visit&& visit) {
  const int base = walker.depth();
  if (base >= max_depth || !walker.push()) return true;
  while (true) {
    const Step step = visit(walker);
    if (step == Step::Stop) {
      while (walker.depth() > base) walker.pop();
      return false;
    }
    if (step == Step::Descend && walker.depth() < max_depth && walker.push()) continue;
    while (!walker.advance()) {
      if (walker.depth() == base) return true;
    }
  }
}

}  // namespace monophilic::detail
