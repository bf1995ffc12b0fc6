#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cosetgeom/coset_table.hpp"
#include "cosetgeom/permutation.hpp"

namespace cosetgeom {

using GroupOrder = boost::multiprecision::cpp_int;

/// Base and strong generating set built by deterministic Schreier-Sims.
/// Each level stores its basic orbit with explicit transversal elements:
/// transversal(l, b) maps base(l) to b.
class StabChain {
 public:
  struct Level {
    std::uint32_t base = 0;
    std::vector<Permutation> generators;  // strong generators fixing earlier base points
    std::vector<std::uint32_t> orbit;
    std::vector<Permutation> transversal;  // indexed by point; valid where in_orbit
    std::vector<char> in_orbit;
  };

  StabChain() = default;
  /// `base_prefix` fixes the first base points; further points are chosen as
  /// the smallest point moved by a new strong generator. When
  /// `known_order` is given the algorithm stops once the basic orbit lengths
  /// multiply to it.
  StabChain(std::size_t degree, const std::vector<Permutation>& generators,
            const std::vector<std::uint32_t>& base_prefix = {},
            const std::optional<GroupOrder>& known_order = std::nullopt);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t length() const noexcept { return levels_.size(); }
  const Level& level(std::size_t i) const { return levels_[i]; }
  std::vector<std::uint32_t> base() const;

  GroupOrder order() const;
  bool contains(const Permutation& g) const;
  /// Sifts g from level `from`; returns the residue and the level where
  /// sifting stopped (length() if it passed every level).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from = 0) const;

  /// Adds a generator; returns false if it was already a member.
  bool add_generator(const Permutation& g);

  /// Chain for g^-1 G g, with base points mapped by g.
  StabChain conjugated(const Permutation& g) const;
  /// Chain of the stabilizer of the first `k` base points.
  StabChain suffix(std::size_t k) const;

  /// Generators of the stabilizer of the first `k` base points.
  std::vector<Permutation> stabilizer_generators(std::size_t k) const;

 private:
  void compute_orbit(std::size_t i);
  std::size_t new_level(const Permutation& h);
  void complete(std::size_t start, const std::optional<GroupOrder>& known_order);

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
};

/// A permutation group on {0..degree-1}, immutable once built.
class PermutationGroup {
 public:
  PermutationGroup() : PermutationGroup(1, {}) {}
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators);
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators, StabChain chain);

  /// One generator per presentation generator: the columns of the table.
  static PermutationGroup from_coset_table(const CosetTable& t);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const StabChain& chain() const noexcept { return *chain_; }

  GroupOrder order() const { return chain_->order(); }
  bool contains(const Permutation& g) const { return chain_->contains(g); }
  bool is_trivial() const { return order() == 1; }
  bool is_subgroup_of(const PermutationGroup& other) const;
  /// Equal orders and mutual membership of generators.
  bool same_group(const PermutationGroup& other) const;

  std::vector<std::vector<std::uint32_t>> orbits() const;
  std::vector<std::uint32_t> orbit(std::uint32_t point) const;
  bool is_transitive() const;
  bool is_primitive() const;

  PermutationGroup point_stabilizer(std::uint32_t alpha) const;
  /// Pointwise stabilizer of alpha and beta.
  PermutationGroup pair_stabilizer(std::uint32_t alpha, std::uint32_t beta) const;

  /// Number of orbits on ordered pairs; requires a transitive group.
  std::size_t rank() const;

  /// Smallest normal subgroup containing `gens`.
  PermutationGroup normal_closure(const std::vector<Permutation>& gens) const;
  PermutationGroup derived_subgroup() const;
  bool is_perfect() const;

  /// All elements in chain order; throws BudgetExhausted above `cap`.
  std::vector<Permutation> elements(std::size_t cap = 200000) const;

  /// Points fixed by every generator.
  std::vector<bool> fixed_points() const;

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabChain> chain_;
};

/// Closed-vocabulary naming: "A_n", "S_n", "PSL(2,7)", "SL(2,7)",
/// "PSL(2,13)", "trivial", otherwise "order=<n>" with structural flags.
std::string name_group(const PermutationGroup& g);

/// Axiom (i): the normal closure of `subgroup_image` in P is all of P.
bool normal_closure_is_full(const PermutationGroup& p,
                            const std::vector<Permutation>& subgroup_image);

/// Images in P of words over the presentation generators.
Permutation word_image(const PermutationGroup& p, const Word& w);

/// Reads generators in cycle notation, one per line. Blank lines and '#'
/// comments are skipped, an optional "name =" prefix is ignored, and a line
/// "degree N" fixes the degree.
PermutationGroup parse_generators(std::string_view text);

std::string order_string(const GroupOrder& n);

}  // namespace cosetgeom
