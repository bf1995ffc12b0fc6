#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cosetgeom/presentation.hpp"
#include "cosetgeom/word.hpp"

namespace cosetgeom {

/// Complete action of the generators on the right cosets of a subgroup H.
/// Cosets are 0-based internally; coset 0 is H itself. Serialized forms are
/// 1-based.
class CosetTable {
 public:
  CosetTable() = default;

  /// `action[g][c]` is the coset reached from c by generator g (0-based).
  /// Throws std::invalid_argument unless every column is a permutation.
  CosetTable(std::vector<std::vector<int>> action,
             std::vector<Word> subgroup_generators = {});

  int index() const noexcept {
    return action_.empty() ? 1 : static_cast<int>(action_.front().size());
  }
  int generator_count() const noexcept { return static_cast<int>(action_.size()); }

  /// Image of `coset` under a signed letter.
  int act(int coset, int letter) const {
    return letter > 0 ? action_[static_cast<std::size_t>(letter - 1)][static_cast<std::size_t>(coset)]
                      : inverse_[static_cast<std::size_t>(-letter - 1)][static_cast<std::size_t>(coset)];
  }
  int trace(int coset, const Word& w) const;

  const std::vector<std::vector<int>>& action() const noexcept { return action_; }
  const std::vector<Word>& subgroup_generators() const noexcept {
    return subgroup_generators_;
  }
  void set_subgroup_generators(std::vector<Word> gens) {
    subgroup_generators_ = std::move(gens);
  }

  /// Every relator closes at every coset and every subgroup generator
  /// closes at coset 0.
  bool is_valid_for(const Presentation& p) const;

  friend bool operator==(const CosetTable& a, const CosetTable& b) {
    return a.action_ == b.action_;
  }

 private:
  std::vector<std::vector<int>> action_;
  std::vector<std::vector<int>> inverse_;
  std::vector<Word> subgroup_generators_;
};

/// Default live-coset ceiling for enumerate_cosets.
inline constexpr std::size_t kDefaultMaxCosets = 2'000'000;

/// HLT coset enumeration with coincidence processing. The result is
/// renumbered into breadth-first order (see standardize). Throws
/// BudgetExhausted when more than `max_cosets` cosets would be live.
CosetTable enumerate_cosets(const Presentation& p,
                            const std::vector<Word>& subgroup_generators,
                            std::size_t max_cosets = kDefaultMaxCosets);

/// Renumbers cosets in breadth-first discovery order from coset 0, scanning
/// letters as a, a^-1, b, b^-1, ...
CosetTable standardize(const CosetTable& t);

/// One shortest word per coset from the breadth-first Schreier tree;
/// the representative of coset 0 is the empty word.
std::vector<Word> coset_representatives(const CosetTable& t);

/// Schreier generators of the subgroup read off the table: one word
/// rep(c) x rep(c.x)^-1 per non-tree edge, freely reduced, identities dropped.
std::vector<Word> schreier_generators(const CosetTable& t);

}  // namespace cosetgeom
