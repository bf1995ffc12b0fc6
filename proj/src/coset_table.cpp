#include "cosetgeom/coset_table.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "cosetgeom/errors.hpp"

namespace cosetgeom {

CosetTable::CosetTable(std::vector<std::vector<int>> action,
                       std::vector<Word> subgroup_generators)
    : action_(std::move(action)),
      subgroup_generators_(std::move(subgroup_generators)) {
  std::size_t n = action_.empty() ? 1 : action_.front().size();
  inverse_.assign(action_.size(), std::vector<int>(n, -1));
  for (std::size_t g = 0; g < action_.size(); ++g) {
    if (action_[g].size() != n) {
      throw std::invalid_argument("coset table columns differ in length");
    }
    for (std::size_t c = 0; c < n; ++c) {
      int d = action_[g][c];
      if (d < 0 || static_cast<std::size_t>(d) >= n ||
          inverse_[g][static_cast<std::size_t>(d)] != -1) {
        throw std::invalid_argument("coset table column is not a permutation");
      }
      inverse_[g][static_cast<std::size_t>(d)] = static_cast<int>(c);
    }
  }
}

int CosetTable::trace(int coset, const Word& w) const {
  for (int x : w.letters) coset = act(coset, x);
  return coset;
}

bool CosetTable::is_valid_for(const Presentation& p) const {
  if (p.generator_count() != generator_count()) return false;
  for (const Word& r : p.relators) {
    for (int c = 0; c < index(); ++c) {
      if (trace(c, r) != c) return false;
    }
  }
  return std::all_of(subgroup_generators_.begin(), subgroup_generators_.end(),
                     [this](const Word& w) { return trace(0, w) == 0; });
}

namespace {

// Flat table with 2g columns; column 2k is generator k+1, 2k+1 its inverse.
class Enumerator {
 public:
  Enumerator(int gens, std::size_t max_cosets)
      : cols_(static_cast<std::size_t>(2 * gens)), max_cosets_(max_cosets) {
    new_coset();
  }

  static std::size_t col_of(int letter) {
    return letter > 0 ? static_cast<std::size_t>(2 * (letter - 1))
                      : static_cast<std::size_t>(2 * (-letter - 1) + 1);
  }

  int& entry(int c, std::size_t col) {
    return table_[static_cast<std::size_t>(c) * cols_ + col];
  }

  bool live(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  int allocated() const { return static_cast<int>(parent_.size()); }

  int new_coset() {
    if (live_count_ + 1 > max_cosets_) {
      throw BudgetExhausted("coset enumeration exceeded " +
                            std::to_string(max_cosets_) + " live cosets");
    }
    int c = allocated();
    parent_.push_back(c);
    table_.insert(table_.end(), cols_, -1);
    ++live_count_;
    return c;
  }

  void define(int c, std::size_t col) {
    int d = new_coset();
    entry(c, col) = d;
    entry(d, col ^ 1U) = c;
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    --live_count_;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int e = queue[i];
      for (std::size_t x = 0; x < cols_; ++x) {
        int f = entry(e, x);
        if (f < 0) continue;
        entry(f, x ^ 1U) = -1;
        int e1 = rep(e);
        int f1 = rep(f);
        if (entry(e1, x) >= 0) {
          merge(f1, entry(e1, x), queue);
        } else if (entry(f1, x ^ 1U) >= 0) {
          merge(e1, entry(f1, x ^ 1U), queue);
        } else {
          entry(e1, x) = f1;
          entry(f1, x ^ 1U) = e1;
        }
      }
    }
  }

  void scan_and_fill(int c, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    int f = c;
    int b = c;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (true) {
      while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) >= 0) {
        f = entry(f, w[static_cast<std::size_t>(i)]);
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, w[static_cast<std::size_t>(j)] ^ 1U) >= 0) {
        b = entry(b, w[static_cast<std::size_t>(j)] ^ 1U);
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        entry(f, w[static_cast<std::size_t>(i)]) = b;
        entry(b, w[static_cast<std::size_t>(i)] ^ 1U) = f;
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  std::size_t cols_;
  std::size_t max_cosets_;
  std::size_t live_count_ = 0;
  std::vector<int> table_;
  std::vector<int> parent_;
};

std::vector<std::size_t> to_columns(const Word& w) {
  std::vector<std::size_t> out;
  out.reserve(w.size());
  for (int x : w.letters) out.push_back(Enumerator::col_of(x));
  return out;
}

}  // namespace

CosetTable enumerate_cosets(const Presentation& p,
                            const std::vector<Word>& subgroup_generators,
                            std::size_t max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("max_cosets must be >= 1");
  const int gens = p.generator_count();
  Enumerator e(gens, max_cosets);

  std::vector<std::vector<std::size_t>> relators;
  for (const Word& r : p.relators) relators.push_back(to_columns(cyclic_reduce(r)));

  for (const Word& h : subgroup_generators) e.scan_and_fill(0, to_columns(free_reduce(h)));

  for (int c = 0; c < e.allocated(); ++c) {
    for (const auto& r : relators) {
      if (!e.live(c)) break;
      e.scan_and_fill(c, r);
    }
    if (!e.live(c)) continue;
    for (std::size_t x = 0; x < e.cols_; ++x) {
      if (e.entry(c, x) < 0) e.define(c, x);
    }
  }

  // Compact live cosets; standardize() fixes the final order.
  std::vector<int> id(static_cast<std::size_t>(e.allocated()), -1);
  int n = 0;
  for (int c = 0; c < e.allocated(); ++c) {
    if (e.live(c)) id[static_cast<std::size_t>(c)] = n++;
  }
  std::vector<std::vector<int>> action(static_cast<std::size_t>(gens),
                                       std::vector<int>(static_cast<std::size_t>(n)));
  for (int c = 0; c < e.allocated(); ++c) {
    if (!e.live(c)) continue;
    for (int g = 0; g < gens; ++g) {
      int d = e.rep(e.entry(c, static_cast<std::size_t>(2 * g)));
      action[static_cast<std::size_t>(g)][static_cast<std::size_t>(id[static_cast<std::size_t>(c)])] =
          id[static_cast<std::size_t>(d)];
    }
  }
  std::vector<Word> hgens;
  for (const Word& h : subgroup_generators) hgens.push_back(free_reduce(h));
  return standardize(CosetTable(std::move(action), std::move(hgens)));
}

CosetTable standardize(const CosetTable& t) {
  const int n = t.index();
  const int gens = t.generator_count();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  label[0] = 0;
  order.push_back(0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    int c = order[k];
    for (int g = 1; g <= gens; ++g) {
      for (int x : {g, -g}) {
        int d = t.act(c, x);
        if (label[static_cast<std::size_t>(d)] < 0) {
          label[static_cast<std::size_t>(d)] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("coset table is not connected");
  }
  std::vector<std::vector<int>> action(static_cast<std::size_t>(gens),
                                       std::vector<int>(static_cast<std::size_t>(n)));
  for (int g = 0; g < gens; ++g) {
    for (int c = 0; c < n; ++c) {
      action[static_cast<std::size_t>(g)][static_cast<std::size_t>(label[static_cast<std::size_t>(c)])] =
          label[static_cast<std::size_t>(t.action()[static_cast<std::size_t>(g)][static_cast<std::size_t>(c)])];
    }
  }
  return CosetTable(std::move(action), t.subgroup_generators());
}

std::vector<Word> coset_representatives(const CosetTable& t) {
  const int n = t.index();
  std::vector<Word> reps(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int g = 1; g <= t.generator_count(); ++g) {
      for (int x : {g, -g}) {
        int d = t.act(c, x);
        if (seen[static_cast<std::size_t>(d)]) continue;
        seen[static_cast<std::size_t>(d)] = true;
        reps[static_cast<std::size_t>(d)] = reps[static_cast<std::size_t>(c)];
        reps[static_cast<std::size_t>(d)].letters.push_back(x);
        queue.push_back(d);
      }
    }
  }
  return reps;
}

std::vector<Word> schreier_generators(const CosetTable& t) {
  auto reps = coset_representatives(t);
  std::vector<Word> out;
  for (int c = 0; c < t.index(); ++c) {
    for (int g = 1; g <= t.generator_count(); ++g) {
      int d = t.act(c, g);
      Word w = reps[static_cast<std::size_t>(c)];
      w.letters.push_back(g);
      w = word_concat(w, word_inverse(reps[static_cast<std::size_t>(d)]));
      if (!w.empty() && std::find(out.begin(), out.end(), w) == out.end()) {
        out.push_back(std::move(w));
      }
    }
  }
  return out;
}

}  // namespace cosetgeom
