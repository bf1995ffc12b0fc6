#include "cosetgeom/low_index.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cosetgeom/errors.hpp"

namespace cosetgeom {
namespace {

using Clock = std::chrono::steady_clock;

class Search {
 public:
  Search(const Presentation& p, const LowIndexOptions& opt)
      : gens_(p.generator_count()),
        cols_(2 * gens_),
        max_index_(opt.max_index),
        opt_(opt),
        table_(static_cast<std::size_t>(max_index_ * cols_), -1),
        conjugates_(static_cast<std::size_t>(cols_)),
        label_(static_cast<std::size_t>(max_index_)),
        orig_(static_cast<std::size_t>(max_index_)) {
    std::set<std::vector<int>> seen;
    for (const Word& r : p.relators) {
      Word red = cyclic_reduce(r);
      for (const Word& w : {red, word_inverse(red)}) {
        std::vector<int> cols;
        for (int x : w.letters) {
          cols.push_back(x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1);
        }
        for (std::size_t k = 0; k < cols.size(); ++k) {
          std::vector<int> rot(cols.begin() + static_cast<std::ptrdiff_t>(k), cols.end());
          rot.insert(rot.end(), cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(k));
          if (seen.insert(rot).second) {
            conjugates_[static_cast<std::size_t>(rot.front())].push_back(rot);
          }
        }
      }
    }
    deadline_ = opt.time_budget.count() > 0 ? Clock::now() + opt.time_budget
                                            : Clock::time_point::max();
  }

  LowIndexResult run() {
    LowIndexResult result;
    dfs(0);
    result.complete = !exhausted_;
    result.nodes = nodes_;
    result.records = std::move(found_);
    return result;
  }

 private:
  int& at(int c, int col) { return table_[static_cast<std::size_t>(c * cols_ + col)]; }

  void set(int c, int col, int d) {
    at(c, col) = d;
    at(d, col ^ 1) = c;
    log_.push_back(c * cols_ + col);
    log_.push_back(d * cols_ + (col ^ 1));
    pending_.push_back({c, col});
  }

  void undo(std::size_t mark) {
    while (log_.size() > mark) {
      table_[static_cast<std::size_t>(log_.back())] = -1;
      log_.pop_back();
    }
  }

  // Scans one relator conjugate from coset c. Returns false on conflict.
  bool scan(int c, const std::vector<int>& w) {
    const int len = static_cast<int>(w.size());
    int f = c;
    int i = 0;
    while (i < len) {
      int next = at(f, w[static_cast<std::size_t>(i)]);
      if (next < 0) break;
      f = next;
      ++i;
    }
    if (i == len) return f == c;
    int b = c;
    int j = len - 1;
    while (j >= i) {
      int prev = at(b, w[static_cast<std::size_t>(j)] ^ 1);
      if (prev < 0) break;
      b = prev;
      --j;
    }
    if (j < i) return f == b;
    if (j == i) set(f, w[static_cast<std::size_t>(i)], b);
    return true;
  }

  bool propagate() {
    while (!pending_.empty()) {
      auto [c, col] = pending_.back();
      pending_.pop_back();
      for (const auto& w : conjugates_[static_cast<std::size_t>(col)]) {
        if (!scan(c, w)) {
          pending_.clear();
          return false;
        }
      }
    }
    return true;
  }

  // False if re-rooting the (partial) table at some other coset yields a
  // standardized table that is lexicographically smaller in every
  // completion.
  bool first_in_class() {
    for (int root = 1; root < count_; ++root) {
      std::fill(label_.begin(), label_.begin() + count_, -1);
      label_[static_cast<std::size_t>(root)] = 0;
      orig_[0] = root;
      int next = 1;
      bool decided = false;
      for (int row = 0; row < next && !decided; ++row) {
        int src = orig_[static_cast<std::size_t>(row)];
        for (int col = 0; col < cols_; ++col) {
          int t = at(row, col);
          int s = at(src, col);
          if (t < 0 || s < 0) {
            decided = true;
            break;
          }
          int ls = label_[static_cast<std::size_t>(s)];
          if (ls < 0) {
            ls = next++;
            label_[static_cast<std::size_t>(s)] = ls;
            orig_[static_cast<std::size_t>(ls)] = s;
          }
          if (ls < t) return false;
          if (ls > t) {
            decided = true;
            break;
          }
        }
      }
    }
    return true;
  }

  bool over_budget() {
    if (opt_.max_nodes && nodes_ > opt_.max_nodes) return true;
    if ((nodes_ & 0xFFF) == 0 && Clock::now() > deadline_) return true;
    return false;
  }

  void emit() {
    std::vector<std::vector<int>> action(static_cast<std::size_t>(gens_),
                                         std::vector<int>(static_cast<std::size_t>(count_)));
    for (int g = 0; g < gens_; ++g) {
      for (int c = 0; c < count_; ++c) {
        action[static_cast<std::size_t>(g)][static_cast<std::size_t>(c)] = at(c, 2 * g);
      }
    }
    SubgroupRecord rec;
    rec.index = count_;
    rec.table = CosetTable(std::move(action));
    rec.generators = schreier_generators(rec.table);
    rec.table.set_subgroup_generators(rec.generators);
    found_.push_back(std::move(rec));
  }

  void dfs(int pos) {
    if (exhausted_) return;
    ++nodes_;
    if (over_budget()) {
      exhausted_ = true;
      return;
    }
    const int limit = count_ * cols_;
    while (pos < limit && table_[static_cast<std::size_t>(pos)] >= 0) ++pos;
    if (pos == limit) {
      emit();
      return;
    }
    const int c = pos / cols_;
    const int col = pos % cols_;
    const int top = count_ < max_index_ ? count_ : count_ - 1;
    for (int d = 0; d <= top && !exhausted_; ++d) {
      const bool fresh = d == count_;
      if (!fresh && at(d, col ^ 1) >= 0) continue;
      std::size_t mark = log_.size();
      if (fresh) ++count_;
      set(c, col, d);
      if (propagate() && first_in_class()) dfs(pos + 1);
      undo(mark);
      if (fresh) --count_;
    }
  }

  int gens_;
  int cols_;
  int max_index_;
  LowIndexOptions opt_;
  std::vector<int> table_;
  std::vector<std::vector<std::vector<int>>> conjugates_;
  std::vector<int> label_;
  std::vector<int> orig_;
  std::vector<int> log_;
  std::vector<std::pair<int, int>> pending_;
  std::vector<SubgroupRecord> found_;
  int count_ = 1;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  Clock::time_point deadline_;
};

}  // namespace

LowIndexResult search_low_index(const Presentation& p, const LowIndexOptions& options) {
  if (options.max_index < 1) throw std::invalid_argument("max_index must be >= 1");
  LowIndexResult result = Search(p, options).run();
  std::sort(result.records.begin(), result.records.end(),
            [](const SubgroupRecord& a, const SubgroupRecord& b) {
              if (a.index != b.index) return a.index < b.index;
              return a.table.action() < b.table.action();
            });
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    result.records[i].class_id = static_cast<int>(i);
  }
  return result;
}

std::vector<SubgroupRecord> low_index_subgroups(const Presentation& p,
                                                const LowIndexOptions& options) {
  LowIndexResult r = search_low_index(p, options);
  if (!r.complete) {
    throw BudgetExhausted("low-index search stopped after " + std::to_string(r.nodes) +
                          " nodes with " + std::to_string(r.records.size()) +
                          " classes found");
  }
  return std::move(r.records);
}

std::vector<SubgroupRecord> low_index_subgroups(const Presentation& p, int max_index) {
  LowIndexOptions opt;
  opt.max_index = max_index;
  return low_index_subgroups(p, opt);
}

std::vector<std::uint64_t> eta_sequence(const std::vector<SubgroupRecord>& records,
                                        int max_index) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(std::max(max_index, 0)), 0);
  for (const auto& r : records) {
    if (r.index >= 1 && r.index <= max_index) ++counts[static_cast<std::size_t>(r.index - 1)];
  }
  return counts;
}

std::vector<std::uint64_t> proper_eta_sequence(const std::vector<SubgroupRecord>& records,
                                               int max_index) {
  auto counts = eta_sequence(records, max_index);
  if (!counts.empty()) counts[0] = 0;
  return counts;
}

}  // namespace cosetgeom
