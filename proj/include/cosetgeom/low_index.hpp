#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "cosetgeom/coset_table.hpp"
#include "cosetgeom/presentation.hpp"

namespace cosetgeom {

/// One conjugacy class of finite-index subgroups, represented by the member
/// whose standardized coset table is lexicographically least.
struct SubgroupRecord {
  int index = 0;
  CosetTable table;
  std::vector<Word> generators;  // Schreier generators of H
  int class_id = 0;              // ordinal in (index, table) order
};

struct LowIndexOptions {
  int max_index = 1;
  std::uint64_t max_nodes = 0;             // 0 = unlimited
  std::chrono::milliseconds time_budget{0};  // 0 = unlimited
};

struct LowIndexResult {
  std::vector<SubgroupRecord> records;
  bool complete = true;  // false when a budget stopped the search
  std::uint64_t nodes = 0;
};

/// Backtracking search over standardized partial coset tables with relator
/// deduction and first-in-class pruning. Never throws on budget exhaustion;
/// `complete` reports it and `records` holds what was found.
LowIndexResult search_low_index(const Presentation& p, const LowIndexOptions& options);

/// Conjugacy-class representatives of subgroups of index <= max_index.
/// Throws BudgetExhausted if a budget in `options` runs out.
std::vector<SubgroupRecord> low_index_subgroups(const Presentation& p,
                                                const LowIndexOptions& options);
std::vector<SubgroupRecord> low_index_subgroups(const Presentation& p, int max_index);

/// counts[d-1] = number of classes of index d, for d = 1..max_index.
/// counts[0] is 1 (the whole group).
std::vector<std::uint64_t> eta_sequence(const std::vector<SubgroupRecord>& records,
                                        int max_index);
/// Same histogram restricted to proper subgroups, so counts[0] is 0.
std::vector<std::uint64_t> proper_eta_sequence(const std::vector<SubgroupRecord>& records,
                                               int max_index);

}  // namespace cosetgeom
