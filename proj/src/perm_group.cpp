#include "cosetgeom/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cosetgeom/errors.hpp"

namespace cosetgeom {

// ---------------------------------------------------------------- StabChain

StabChain::StabChain(std::size_t degree, const std::vector<Permutation>& generators,
                     const std::vector<std::uint32_t>& base_prefix,
                     const std::optional<GroupOrder>& known_order)
    : degree_(degree) {
  std::vector<Permutation> strong;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) strong.push_back(g);
  }
  for (auto b : base_prefix) {
    if (b >= degree) throw std::out_of_range("base point out of range");
    Level l;
    l.base = b;
    levels_.push_back(std::move(l));
  }
  for (const auto& s : strong) {
    bool fixes_base = std::all_of(levels_.begin(), levels_.end(),
                                  [&](const Level& l) { return s(l.base) == l.base; });
    if (fixes_base) {
      Level l;
      l.base = s.first_moved();
      levels_.push_back(std::move(l));
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& s : strong) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j) fixes = s(levels_[j].base) == levels_[j].base;
      if (fixes) levels_[i].generators.push_back(s);
    }
    compute_orbit(i);
  }
  if (!levels_.empty()) complete(levels_.size() - 1, known_order);
}

std::vector<std::uint32_t> StabChain::base() const {
  std::vector<std::uint32_t> b;
  for (const auto& l : levels_) b.push_back(l.base);
  return b;
}

void StabChain::compute_orbit(std::size_t i) {
  Level& l = levels_[i];
  l.orbit.assign(1, l.base);
  l.in_orbit.assign(degree_, 0);
  l.transversal.assign(degree_, Permutation());
  l.in_orbit[l.base] = 1;
  l.transversal[l.base] = Permutation(degree_);
  for (std::size_t k = 0; k < l.orbit.size(); ++k) {
    std::uint32_t beta = l.orbit[k];
    for (const auto& s : l.generators) {
      std::uint32_t gamma = s(beta);
      if (l.in_orbit[gamma]) continue;
      l.in_orbit[gamma] = 1;
      l.transversal[gamma] = l.transversal[beta] * s;
      l.orbit.push_back(gamma);
    }
  }
}

std::size_t StabChain::new_level(const Permutation& h) {
  Level l;
  l.base = h.first_moved();
  levels_.push_back(std::move(l));
  compute_orbit(levels_.size() - 1);
  return levels_.size() - 1;
}

std::pair<Permutation, std::size_t> StabChain::strip(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    std::uint32_t beta = g(l.base);
    if (!l.in_orbit[beta]) return {std::move(g), i};
    if (beta != l.base) g = g * l.transversal[beta].inverse();
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [h, level] = strip(g);
  return level == levels_.size() && h.is_identity();
}

GroupOrder StabChain::order() const {
  GroupOrder n = 1;
  for (const auto& l : levels_) n *= l.orbit.size();
  return n;
}

void StabChain::complete(std::size_t start, const std::optional<GroupOrder>& known_order) {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start);
  while (i >= 0) {
    if (known_order && order() == *known_order) return;
    const std::size_t lv = static_cast<std::size_t>(i);
    bool restarted = false;
    for (std::size_t oi = 0; oi < levels_[lv].orbit.size() && !restarted; ++oi) {
      for (std::size_t si = 0; si < levels_[lv].generators.size(); ++si) {
        const Level& l = levels_[lv];
        std::uint32_t beta = l.orbit[oi];
        const Permutation& s = l.generators[si];
        std::uint32_t gamma = s(beta);
        Permutation sg = l.transversal[beta] * s * l.transversal[gamma].inverse();
        if (sg.is_identity()) continue;
        auto [h, j] = strip(std::move(sg), lv + 1);
        if (j == levels_.size() && h.is_identity()) continue;
        if (j == levels_.size()) new_level(h);
        for (std::size_t m = lv + 1; m <= j; ++m) {
          levels_[m].generators.push_back(h);
          compute_orbit(m);
        }
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

bool StabChain::add_generator(const Permutation& g) {
  if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  if (contains(g)) return false;
  std::size_t m = 0;
  while (m < levels_.size() && g(levels_[m].base) == levels_[m].base) ++m;
  if (m == levels_.size()) {
    Level l;
    l.base = g.first_moved();
    levels_.push_back(std::move(l));
  }
  for (std::size_t i = 0; i <= m; ++i) {
    levels_[i].generators.push_back(g);
    compute_orbit(i);
  }
  complete(m, std::nullopt);
  return true;
}

StabChain StabChain::conjugated(const Permutation& g) const {
  StabChain out;
  out.degree_ = degree_;
  Permutation gi = g.inverse();
  for (const auto& l : levels_) {
    Level c;
    c.base = g(l.base);
    for (const auto& s : l.generators) c.generators.push_back(gi * s * g);
    c.in_orbit.assign(degree_, 0);
    c.transversal.assign(degree_, Permutation());
    for (auto beta : l.orbit) {
      std::uint32_t gb = g(beta);
      c.orbit.push_back(gb);
      c.in_orbit[gb] = 1;
      c.transversal[gb] = gi * l.transversal[beta] * g;
    }
    out.levels_.push_back(std::move(c));
  }
  return out;
}

StabChain StabChain::suffix(std::size_t k) const {
  StabChain out;
  out.degree_ = degree_;
  for (std::size_t i = k; i < levels_.size(); ++i) out.levels_.push_back(levels_[i]);
  return out;
}

std::vector<Permutation> StabChain::stabilizer_generators(std::size_t k) const {
  return k < levels_.size() ? levels_[k].generators : std::vector<Permutation>{};
}

// --------------------------------------------------------- PermutationGroup

namespace {

std::vector<Permutation> normalize(std::size_t degree, std::vector<Permutation> gens) {
  for (auto& g : gens) {
    if (g.degree() < degree) g = g.extended(degree);
    if (g.degree() > degree) throw std::invalid_argument("generator exceeds group degree");
  }
  return gens;
}

}  // namespace

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(normalize(degree, std::move(generators))) {
  if (degree == 0) throw std::invalid_argument("degree must be positive");
  chain_ = std::make_shared<const StabChain>(degree_, generators_);
}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                                   StabChain chain)
    : degree_(degree),
      generators_(normalize(degree, std::move(generators))),
      chain_(std::make_shared<const StabChain>(std::move(chain))) {}

PermutationGroup PermutationGroup::from_coset_table(const CosetTable& t) {
  std::vector<Permutation> gens;
  for (const auto& col : t.action()) {
    gens.emplace_back(std::vector<std::uint32_t>(col.begin(), col.end()));
  }
  return PermutationGroup(static_cast<std::size_t>(t.index()), std::move(gens));
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& other) const {
  return degree_ == other.degree_ &&
         std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

bool PermutationGroup::same_group(const PermutationGroup& other) const {
  return degree_ == other.degree_ && order() == other.order() && is_subgroup_of(other);
}

std::vector<std::vector<std::uint32_t>> PermutationGroup::orbits() const {
  std::vector<std::uint32_t> parent(degree_);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : generators_) {
    for (std::uint32_t x = 0; x < degree_; ++x) {
      auto a = find(x);
      auto b = find(g(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<int> slot(degree_, -1);
  for (std::uint32_t x = 0; x < degree_; ++x) {
    auto r = find(x);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(x);
  }
  return out;
}

std::vector<std::uint32_t> PermutationGroup::orbit(std::uint32_t point) const {
  if (point >= degree_) throw std::out_of_range("point out of range");
  for (auto& o : orbits()) {
    if (std::find(o.begin(), o.end(), point) != o.end()) return o;
  }
  return {point};
}

bool PermutationGroup::is_transitive() const { return orbits().size() == 1; }

bool PermutationGroup::is_primitive() const {
  if (!is_transitive()) return false;
  if (degree_ <= 2) return true;
  for (std::uint32_t beta = 1; beta < degree_; ++beta) {
    std::vector<std::uint32_t> parent(degree_);
    std::iota(parent.begin(), parent.end(), 0U);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::pair<std::uint32_t, std::uint32_t>> queue{{0, beta}};
    parent[beta] = 0;
    std::size_t classes = degree_ - 1;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      auto [x, y] = queue[k];
      for (const auto& g : generators_) {
        auto a = find(g(x));
        auto b = find(g(y));
        if (a == b) continue;
        parent[std::max(a, b)] = std::min(a, b);
        --classes;
        queue.emplace_back(g(x), g(y));
      }
    }
    if (classes != 1) return false;
  }
  return true;
}

PermutationGroup PermutationGroup::point_stabilizer(std::uint32_t alpha) const {
  if (alpha >= degree_) throw std::out_of_range("point out of range");
  StabChain c(degree_, generators_, {alpha}, order());
  return PermutationGroup(degree_, c.stabilizer_generators(1), c.suffix(1));
}

PermutationGroup PermutationGroup::pair_stabilizer(std::uint32_t alpha, std::uint32_t beta) const {
  if (alpha >= degree_ || beta >= degree_) throw std::out_of_range("point out of range");
  if (alpha == beta) throw std::invalid_argument("pair stabilizer needs distinct points");
  StabChain c(degree_, generators_, {alpha, beta}, order());
  return PermutationGroup(degree_, c.stabilizer_generators(2), c.suffix(2));
}

std::size_t PermutationGroup::rank() const {
  if (!is_transitive()) throw std::invalid_argument("rank needs a transitive group");
  return point_stabilizer(0).orbits().size();
}

PermutationGroup PermutationGroup::normal_closure(const std::vector<Permutation>& gens) const {
  std::vector<Permutation> list = normalize(degree_, gens);
  StabChain chain(degree_, list);
  for (std::size_t k = 0; k < list.size(); ++k) {
    for (const auto& g : generators_) {
      Permutation c = conjugate(list[k], g);
      if (chain.add_generator(c)) list.push_back(std::move(c));
    }
  }
  return PermutationGroup(degree_, std::move(list), std::move(chain));
}

PermutationGroup PermutationGroup::derived_subgroup() const {
  std::vector<Permutation> commutators;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      const auto& a = generators_[i];
      const auto& b = generators_[j];
      commutators.push_back(a.inverse() * b.inverse() * a * b);
    }
  }
  return normal_closure(commutators);
}

bool PermutationGroup::is_perfect() const { return derived_subgroup().order() == order(); }

std::vector<Permutation> PermutationGroup::elements(std::size_t cap) const {
  if (order() > cap) {
    throw BudgetExhausted("group of order " + order_string(order()) +
                          " exceeds element cap " + std::to_string(cap));
  }
  std::vector<Permutation> current{Permutation(degree_)};
  const StabChain& c = *chain_;
  for (std::size_t l = c.length(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(current.size() * c.level(l).orbit.size());
    for (const auto& x : current) {
      for (auto beta : c.level(l).orbit) next.push_back(x * c.level(l).transversal[beta]);
    }
    current = std::move(next);
  }
  return current;
}

std::vector<bool> PermutationGroup::fixed_points() const {
  std::vector<bool> fixed(degree_, true);
  for (const auto& g : generators_) {
    for (std::uint32_t x = 0; x < degree_; ++x) {
      if (g(x) != x) fixed[x] = false;
    }
  }
  return fixed;
}

// ------------------------------------------------------------------ helpers

std::string order_string(const GroupOrder& n) { return n.str(); }

namespace {

// n with n!/2 == order (n >= 3), or 0.
unsigned alternating_degree(const GroupOrder& order) {
  GroupOrder f = 1;
  for (unsigned n = 2; n < 200; ++n) {
    f *= n;
    if (n >= 3 && f / 2 == order) return n;
    if (f / 2 > order) break;
  }
  return 0;
}

unsigned symmetric_degree(const GroupOrder& order) {
  GroupOrder f = 1;
  for (unsigned n = 2; n < 200; ++n) {
    f *= n;
    if (f == order) return n;
    if (f > order) break;
  }
  return 0;
}

}  // namespace

std::string name_group(const PermutationGroup& g) {
  const GroupOrder order = g.order();
  if (order == 1) return "trivial";
  std::optional<bool> perfect;
  auto is_perfect = [&] {
    if (!perfect) perfect = g.is_perfect();
    return *perfect;
  };

  if (unsigned n = alternating_degree(order); n >= 5 && is_perfect()) {
    // A_8 and PSL(3,4) share order 20160; only A_8 has elements of order 15.
    bool ok = true;
    if (n == 8) {
      auto els = g.elements();
      ok = std::any_of(els.begin(), els.end(),
                       [](const Permutation& p) { return p.order() == 15; });
    }
    if (ok) return "A_" + std::to_string(n);
  } else if (n == 3 || n == 4) {
    const auto& gens = g.generators();
    if (g.degree() == n &&
        std::all_of(gens.begin(), gens.end(), [](const Permutation& p) { return p.is_even(); })) {
      return "A_" + std::to_string(n);
    }
  }
  if (unsigned m = symmetric_degree(order); m >= 2) {
    bool ok = m < 5 ? g.degree() == m : [&] {
      auto d = g.derived_subgroup();
      return d.order() * 2 == order && d.is_perfect();
    }();
    if (ok) return "S_" + std::to_string(m);
  }
  if (is_perfect()) {
    if (order == 168) return "PSL(2,7)";
    if (order == 336) return "SL(2,7)";
    if (order == 1092) return "PSL(2,13)";
  }
  std::string label = "order=" + order_string(order);
  label += g.is_transitive() ? ", transitive" : ", intransitive";
  label += g.is_primitive() ? ", primitive" : ", imprimitive";
  return label;
}

bool normal_closure_is_full(const PermutationGroup& p,
                            const std::vector<Permutation>& subgroup_image) {
  return p.normal_closure(subgroup_image).order() == p.order();
}

Permutation word_image(const PermutationGroup& p, const Word& w) {
  Permutation result(p.degree());
  for (int x : w.letters) {
    std::size_t g = static_cast<std::size_t>(x > 0 ? x : -x) - 1;
    if (g >= p.generators().size()) throw std::out_of_range("letter outside generators");
    result = result * (x > 0 ? p.generators()[g] : p.generators()[g].inverse());
  }
  return result;
}

PermutationGroup parse_generators(std::string_view text) {
  std::vector<Permutation> gens;
  std::size_t degree = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line.erase(0, first);
    if (line.rfind("degree", 0) == 0) {
      degree = std::max<std::size_t>(degree, std::stoul(line.substr(6)));
      continue;
    }
    if (auto eq = line.find('='); eq != std::string::npos) line.erase(0, eq + 1);
    gens.push_back(Permutation::from_cycles(line));
  }
  if (gens.empty() && degree == 0) throw ParseError("no generators found", 0);
  for (const auto& g : gens) degree = std::max(degree, g.degree());
  return PermutationGroup(degree, std::move(gens));
}

}  // namespace cosetgeom
