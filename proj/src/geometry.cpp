#include "cosetgeom/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace cosetgeom {

// --------------------------------------------------------- IncidenceGeometry

std::vector<std::size_t> IncidenceGeometry::point_degrees() const {
  std::vector<std::size_t> deg(point_count, 0);
  for (const auto& l : lines) {
    for (auto p : l) ++deg[p];
  }
  return deg;
}

IncidenceGeometry IncidenceGeometry::principal() const {
  bool has_big = std::any_of(lines.begin(), lines.end(),
                             [](const auto& l) { return l.size() >= 3; });
  if (!has_big) return *this;
  return filter_lines([&](std::size_t i) { return lines[i].size() >= 3; });
}

bool IncidenceGeometry::is_contextual() const {
  return std::find(contextual.begin(), contextual.end(), true) != contextual.end();
}

std::string IncidenceGeometry::configuration_symbol() const {
  if (lines.empty()) return "";
  auto deg = point_degrees();
  std::size_t k = lines.front().size();
  for (const auto& l : lines) {
    if (l.size() != k) return "";
  }
  if (std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) != deg.end()) return "";
  return "[" + std::to_string(point_count) + "_" + std::to_string(deg.front()) + "," +
         std::to_string(lines.size()) + "_" + std::to_string(k) + "]";
}

namespace {

void sort_lines(IncidenceGeometry& g) {
  for (auto& l : g.lines) std::sort(l.begin(), l.end());
  std::vector<std::size_t> idx(g.lines.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return g.lines[a] < g.lines[b]; });
  auto permute = [&](auto& v) {
    if (v.empty()) return;
    auto copy = v;
    for (std::size_t i = 0; i < idx.size(); ++i) v[i] = copy[idx[i]];
  };
  permute(g.lines);
  permute(g.line_stabilizer_order);
  permute(g.line_orbit);
  std::vector<bool>& c = g.contextual;
  if (!c.empty()) {
    auto copy = c;
    for (std::size_t i = 0; i < idx.size(); ++i) c[i] = copy[idx[i]];
  }
}

// All maximal cliques of the graph given by an adjacency matrix restricted to
// `active` vertices (Bron-Kerbosch with pivoting).
void bron_kerbosch(const std::vector<std::vector<char>>& adj, std::vector<std::uint32_t>& r,
                   std::vector<std::uint32_t> p, std::vector<std::uint32_t> x,
                   std::vector<std::vector<std::uint32_t>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  std::uint32_t pivot = !p.empty() ? p.front() : x.front();
  std::size_t best = 0;
  for (auto u : p) {
    std::size_t cnt = 0;
    for (auto v : p) cnt += adj[u][v] ? 1 : 0;
    if (cnt > best) {
      best = cnt;
      pivot = u;
    }
  }
  std::vector<std::uint32_t> candidates;
  for (auto v : p) {
    if (!adj[pivot][v]) candidates.push_back(v);
  }
  for (auto v : candidates) {
    std::vector<std::uint32_t> np, nx;
    for (auto w : p) {
      if (adj[v][w]) np.push_back(w);
    }
    for (auto w : x) {
      if (adj[v][w]) nx.push_back(w);
    }
    r.push_back(v);
    bron_kerbosch(adj, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

// Splits the edge set into cliques, taking a largest clique first (ties to the
// lexicographically smallest) until no edge remains.
std::vector<std::vector<std::uint32_t>> clique_partition(
    std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::size_t remaining = 0;
  for (auto [a, b] : edges) {
    if (!adj[a][b]) ++remaining;
    adj[a][b] = adj[b][a] = 1;
  }
  std::vector<std::vector<std::uint32_t>> out;
  while (remaining > 0) {
    std::vector<std::uint32_t> active;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (std::find(adj[v].begin(), adj[v].end(), 1) != adj[v].end()) active.push_back(v);
    }
    std::vector<std::vector<std::uint32_t>> cliques;
    std::vector<std::uint32_t> r;
    bron_kerbosch(adj, r, active, {}, cliques);
    for (auto& c : cliques) std::sort(c.begin(), c.end());
    auto best = std::min_element(cliques.begin(), cliques.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a < b;
    });
    for (std::size_t i = 0; i < best->size(); ++i) {
      for (std::size_t j = i + 1; j < best->size(); ++j) {
        adj[(*best)[i]][(*best)[j]] = adj[(*best)[j]][(*best)[i]] = 0;
        --remaining;
      }
    }
    out.push_back(*best);
  }
  return out;
}

struct StabilizerClass {
  GroupOrder order;
  StabChain chain;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
};

}  // namespace

IncidenceGeometry build_geometry(const PermutationGroup& p) {
  if (!p.is_transitive()) throw std::invalid_argument("geometry needs a transitive group");
  const std::size_t n = p.degree();
  IncidenceGeometry g;
  g.point_count = n;
  if (n < 2) return g;

  const GroupOrder order = p.order();
  StabChain top(n, p.generators(), {0}, order);
  const GroupOrder stab0_order = order / n;
  PermutationGroup stab0(n, top.stabilizer_generators(1), top.suffix(1));

  // Pair stabilizers P_(0,beta) for one beta per orbit of P_0.
  std::vector<int> orbit_of(n, -1);
  std::vector<StabChain> rooted;  // chain of P_0 with base beta first
  std::vector<StabChain> pair_chain;
  for (const auto& orb : stab0.orbits()) {
    if (orb.front() == 0) continue;
    for (auto x : orb) orbit_of[x] = static_cast<int>(rooted.size());
    StabChain c(n, stab0.generators(), {orb.front()}, stab0_order);
    pair_chain.push_back(c.suffix(1));
    rooted.push_back(std::move(c));
  }

  std::map<std::pair<std::string, std::vector<bool>>, std::vector<std::size_t>> buckets;
  std::vector<StabilizerClass> classes;
  for (std::uint32_t x = 0; x < n; ++x) {
    const Permutation& g1 = top.level(0).transversal[x];
    const Permutation g1_inv = g1.inverse();
    for (std::uint32_t y = x + 1; y < n; ++y) {
      std::uint32_t y0 = g1_inv(y);
      auto k = static_cast<std::size_t>(orbit_of[y0]);
      const Permutation& g2 = rooted[k].level(0).transversal[y0];
      StabChain chain = pair_chain[k].conjugated(g2 * g1);
      std::vector<Permutation> gens = chain.length() ? chain.level(0).generators
                                                     : std::vector<Permutation>{};
      std::vector<bool> fixed(n, true);
      for (const auto& s : gens) {
        for (std::uint32_t z = 0; z < n; ++z) {
          if (s(z) != z) fixed[z] = false;
        }
      }
      GroupOrder so = chain.order();
      auto& bucket = buckets[{order_string(so), fixed}];
      bool placed = false;
      for (auto ci : bucket) {
        if (std::all_of(gens.begin(), gens.end(),
                        [&](const Permutation& s) { return classes[ci].chain.contains(s); })) {
          classes[ci].pairs.emplace_back(x, y);
          placed = true;
          break;
        }
      }
      if (!placed) {
        bucket.push_back(classes.size());
        classes.push_back({so, std::move(chain), {{x, y}}});
      }
    }
  }

  for (const auto& c : classes) {
    for (auto& line : clique_partition(n, c.pairs)) {
      g.lines.push_back(std::move(line));
      g.line_stabilizer_order.push_back(c.order);
    }
  }
  sort_lines(g);

  // Orbits of P on the line set.
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < g.lines.size(); ++i) index[g.lines[i]] = i;
  std::vector<std::size_t> parent(g.lines.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& s : p.generators()) {
    for (std::size_t i = 0; i < g.lines.size(); ++i) {
      std::vector<std::uint32_t> img;
      for (auto q : g.lines[i]) img.push_back(s(q));
      std::sort(img.begin(), img.end());
      auto it = index.find(img);
      if (it == index.end()) continue;
      auto a = find(i);
      auto b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, int> orbit_id;
  for (std::size_t i = 0; i < g.lines.size(); ++i) {
    auto r = find(i);
    auto it = orbit_id.find(r);
    if (it == orbit_id.end()) it = orbit_id.emplace(r, static_cast<int>(orbit_id.size())).first;
    g.line_orbit.push_back(it->second);
  }
  return g;
}

bool axiom_ii_holds(const IncidenceGeometry& g) {
  return std::all_of(g.lines.begin(), g.lines.end(), [](const auto& l) { return l.size() == 2; });
}

std::vector<bool> contextuality(const IncidenceGeometry& g, const std::vector<Word>& reps,
                                const PermutationGroup& p) {
  if (reps.size() != g.point_count) throw std::invalid_argument("one representative per point");
  std::vector<Permutation> images;
  images.reserve(reps.size());
  for (const auto& w : reps) images.push_back(word_image(p, w));
  std::vector<bool> out;
  out.reserve(g.lines.size());
  for (const auto& line : g.lines) {
    bool ctx = false;
    for (std::size_t i = 0; i < line.size() && !ctx; ++i) {
      for (std::size_t j = i + 1; j < line.size() && !ctx; ++j) {
        const auto& a = images[line[i]];
        const auto& b = images[line[j]];
        ctx = a * b != b * a;
      }
    }
    out.push_back(ctx);
  }
  return out;
}

}  // namespace cosetgeom

namespace cosetgeom {

// ------------------------------------------------------------------- names

std::string GeometryName::to_string() const {
  switch (tag) {
    case Tag::CompleteGraph:
      return "K_" + std::to_string(n);
    case Tag::Multipartite: {
      std::string s = "K(";
      for (int i = 0; i < k; ++i) s += (i ? "," : "") + std::to_string(m);
      return s + ")";
    }
    case Tag::FanoPlane:
      return "Fano plane";
    case Tag::PG32:
      return "PG(3,2)";
    case Tag::GQ22:
      return "GQ(2,2)";
    case Tag::MerminPentagram:
      return "Mermin pentagram";
    case Tag::Grassmannian:
      return "Gr(2," + std::to_string(n) + ")";
    case Tag::Unknown:
      break;
  }
  return "unknown";
}

// -------------------------------------------------------- reference models

IncidenceGeometry projective_space(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("projective_space: bad dimension");
  IncidenceGeometry g;
  const std::uint32_t top = (1u << (n + 1)) - 1;
  g.point_count = top;
  for (std::uint32_t u = 1; u <= top; ++u) {
    for (std::uint32_t v = u + 1; v <= top; ++v) {
      std::uint32_t w = u ^ v;
      if (w > v) g.lines.push_back({u - 1, v - 1, w - 1});
    }
  }
  sort_lines(g);
  return g;
}

namespace {

std::uint32_t duad(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return b * (b - 1) / 2 + a;
}

IncidenceGeometry complete_model(int d) {
  IncidenceGeometry g;
  g.point_count = static_cast<std::size_t>(d);
  for (std::uint32_t a = 0; a < g.point_count; ++a) {
    for (std::uint32_t b = a + 1; b < g.point_count; ++b) g.lines.push_back({a, b});
  }
  return g;
}

IncidenceGeometry multipartite_model(int m, int k) {
  IncidenceGeometry g;
  g.point_count = static_cast<std::size_t>(m) * static_cast<std::size_t>(k);
  for (std::uint32_t a = 0; a < g.point_count; ++a) {
    for (std::uint32_t b = a + 1; b < g.point_count; ++b) {
      if (a / static_cast<std::uint32_t>(m) != b / static_cast<std::uint32_t>(m)) {
        g.lines.push_back({a, b});
      }
    }
  }
  return g;
}

IncidenceGeometry gq22_model() {
  auto form = [](std::uint32_t u, std::uint32_t v) {
    auto bit = [](std::uint32_t x, int i) { return (x >> i) & 1u; };
    return (bit(u, 0) * bit(v, 1) + bit(u, 1) * bit(v, 0) + bit(u, 2) * bit(v, 3) +
            bit(u, 3) * bit(v, 2)) & 1u;
  };
  IncidenceGeometry g;
  g.point_count = 15;
  for (std::uint32_t u = 1; u < 16; ++u) {
    for (std::uint32_t v = u + 1; v < 16; ++v) {
      std::uint32_t w = u ^ v;
      if (w > v && form(u, v) == 0) g.lines.push_back({u - 1, v - 1, w - 1});
    }
  }
  sort_lines(g);
  return g;
}

IncidenceGeometry pentagram_model() {
  IncidenceGeometry g;
  g.point_count = 10;
  for (std::uint32_t i = 0; i < 5; ++i) {
    std::vector<std::uint32_t> line;
    for (std::uint32_t j = 0; j < 5; ++j) {
      if (j != i) line.push_back(duad(i, j));
    }
    g.lines.push_back(line);
  }
  sort_lines(g);
  return g;
}

IncidenceGeometry grassmannian_model(int n) {
  if (n < 2) throw std::invalid_argument("Gr(2,n) needs n >= 2");
  IncidenceGeometry g;
  g.point_count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  auto un = static_cast<std::uint32_t>(n);
  for (std::uint32_t a = 0; a < un; ++a) {
    for (std::uint32_t b = a + 1; b < un; ++b) {
      for (std::uint32_t c = b + 1; c < un; ++c) {
        g.lines.push_back({duad(a, b), duad(a, c), duad(b, c)});
      }
    }
  }
  sort_lines(g);
  return g;
}

}  // namespace

IncidenceGeometry reference_model(const GeometryName& name) {
  switch (name.tag) {
    case GeometryName::Tag::CompleteGraph:
      return complete_model(name.n);
    case GeometryName::Tag::Multipartite:
      return multipartite_model(name.m, name.k);
    case GeometryName::Tag::FanoPlane:
      return projective_space(2);
    case GeometryName::Tag::PG32:
      return projective_space(3);
    case GeometryName::Tag::GQ22:
      return gq22_model();
    case GeometryName::Tag::MerminPentagram:
      return pentagram_model();
    case GeometryName::Tag::Grassmannian:
      return grassmannian_model(name.n);
    case GeometryName::Tag::Unknown:
      break;
  }
  throw std::invalid_argument("no reference model for an unknown geometry");
}

// ------------------------------------------------------------- isomorphism

namespace {

struct Indexed {
  const IncidenceGeometry* g;
  std::vector<std::vector<std::size_t>> lines_through;
  std::vector<std::vector<int>> line_of;  // line index of a pair, -1 if not collinear
  std::vector<std::vector<std::size_t>> invariant;

  explicit Indexed(const IncidenceGeometry& geo) : g(&geo) {
    const std::size_t n = geo.point_count;
    lines_through.resize(n);
    line_of.assign(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < geo.lines.size(); ++i) {
      const auto& l = geo.lines[i];
      for (auto p : l) lines_through[p].push_back(i);
      for (auto a : l) {
        for (auto b : l) {
          if (a != b) line_of[a][b] = static_cast<int>(i);
        }
      }
    }
    invariant.resize(n);
    for (std::size_t p = 0; p < n; ++p) {
      auto& inv = invariant[p];
      for (auto li : lines_through[p]) inv.push_back(geo.lines[li].size());
      std::sort(inv.begin(), inv.end());
      std::size_t collinear = 0;
      for (std::size_t q = 0; q < n; ++q) collinear += line_of[p][q] >= 0 ? 1 : 0;
      inv.insert(inv.begin(), collinear);
    }
  }
};

class IsoSearch {
 public:
  IsoSearch(const Indexed& a, const Indexed& b) : a_(a), b_(b) {}

  std::optional<std::vector<std::uint32_t>> run() {
    const std::size_t n = a_.g->point_count;
    fwd_.assign(n, kNone);
    bwd_.assign(n, kNone);
    line_map_.assign(a_.g->lines.size(), -1);
    if (!dfs(0)) return std::nullopt;
    return fwd_;
  }

 private:
  static constexpr std::uint32_t kNone = ~0u;

  std::size_t next_point() const {
    const std::size_t n = a_.g->point_count;
    std::size_t best = n;
    std::size_t best_score = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if (fwd_[p] != kNone) continue;
      std::size_t score = 1;
      for (std::size_t q = 0; q < n; ++q) {
        if (fwd_[q] != kNone && a_.line_of[p][q] >= 0) ++score;
      }
      if (best == n || score > best_score) {
        best = p;
        best_score = score;
      }
    }
    return best;
  }

  bool consistent(std::size_t p, std::uint32_t img, std::vector<std::pair<std::size_t, int>>& log) {
    const std::size_t n = a_.g->point_count;
    for (std::size_t q = 0; q < n; ++q) {
      if (fwd_[q] == kNone) continue;
      int la = a_.line_of[p][q];
      int lb = b_.line_of[img][fwd_[q]];
      if ((la < 0) != (lb < 0)) return false;
      if (la < 0) continue;
      auto ula = static_cast<std::size_t>(la);
      if (a_.g->lines[ula].size() != b_.g->lines[static_cast<std::size_t>(lb)].size()) return false;
      if (line_map_[ula] < 0) {
        line_map_[ula] = lb;
        log.emplace_back(ula, -1);
      } else if (line_map_[ula] != lb) {
        return false;
      }
    }
    return true;
  }

  bool dfs(std::size_t depth) {
    const std::size_t n = a_.g->point_count;
    if (depth == n) return verify();
    std::size_t p = next_point();
    for (std::uint32_t img = 0; img < n; ++img) {
      if (bwd_[img] != kNone || a_.invariant[p] != b_.invariant[img]) continue;
      std::vector<std::pair<std::size_t, int>> log;
      bool ok = consistent(p, img, log);
      if (ok) {
        fwd_[p] = img;
        bwd_[img] = static_cast<std::uint32_t>(p);
        if (dfs(depth + 1)) return true;
        fwd_[p] = kNone;
        bwd_[img] = kNone;
      }
      for (auto& [li, old] : log) line_map_[li] = old;
    }
    return false;
  }

  bool verify() const {
    std::vector<std::vector<std::uint32_t>> mapped;
    for (const auto& l : a_.g->lines) {
      std::vector<std::uint32_t> m;
      for (auto p : l) m.push_back(fwd_[p]);
      std::sort(m.begin(), m.end());
      mapped.push_back(std::move(m));
    }
    std::sort(mapped.begin(), mapped.end());
    auto target = b_.g->lines;
    for (auto& l : target) std::sort(l.begin(), l.end());
    std::sort(target.begin(), target.end());
    return mapped == target;
  }

  const Indexed& a_;
  const Indexed& b_;
  std::vector<std::uint32_t> fwd_, bwd_;
  std::vector<int> line_map_;
};

std::vector<std::size_t> sorted_sizes(const IncidenceGeometry& g) {
  std::vector<std::size_t> s;
  for (const auto& l : g.lines) s.push_back(l.size());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

std::optional<std::vector<std::uint32_t>> isomorphic(const IncidenceGeometry& g1,
                                                     const IncidenceGeometry& g2) {
  if (g1.point_count != g2.point_count || g1.lines.size() != g2.lines.size()) return std::nullopt;
  if (sorted_sizes(g1) != sorted_sizes(g2)) return std::nullopt;
  Indexed a(g1), b(g2);
  auto ia = a.invariant, ib = b.invariant;
  std::sort(ia.begin(), ia.end());
  std::sort(ib.begin(), ib.end());
  if (ia != ib) return std::nullopt;
  return IsoSearch(a, b).run();
}

// ------------------------------------------------------------- recognition

namespace {

std::optional<GeometryName> multipartite_shape(const IncidenceGeometry& g) {
  const std::size_t n = g.point_count;
  std::vector<std::vector<char>> col(n, std::vector<char>(n, 0));
  for (const auto& l : g.lines) {
    for (auto a : l) {
      for (auto b : l) col[a][b] = a != b;
    }
  }
  std::vector<int> part(n, -1);
  std::vector<std::size_t> sizes;
  for (std::size_t p = 0; p < n; ++p) {
    if (part[p] >= 0) continue;
    auto id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    for (std::size_t q = p; q < n; ++q) {
      if (q == p || !col[p][q]) {
        if (part[q] >= 0) return std::nullopt;
        part[q] = id;
        ++sizes.back();
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if ((part[p] == part[q]) == static_cast<bool>(col[p][q])) return std::nullopt;
    }
  }
  if (sizes.size() < 2 || sizes.front() < 2) return std::nullopt;
  if (std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) != sizes.end()) {
    return std::nullopt;
  }
  return GeometryName::multipartite(static_cast<int>(sizes.front()),
                                    static_cast<int>(sizes.size()));
}

}  // namespace

Recognition recognize_with_map(const IncidenceGeometry& g) {
  using Tag = GeometryName::Tag;
  const std::size_t n = g.point_count;
  std::vector<GeometryName> candidates;
  if (axiom_ii_holds(g)) {
    if (g.lines.size() == n * (n - (n > 0 ? 1 : 0)) / 2) {
      candidates.push_back(GeometryName::complete_graph(static_cast<int>(n)));
    } else if (auto mp = multipartite_shape(g)) {
      candidates.push_back(*mp);
    }
  } else {
    for (auto t : {Tag::FanoPlane, Tag::PG32, Tag::GQ22, Tag::MerminPentagram}) {
      candidates.push_back(GeometryName::of(t));
    }
    for (int m = 3; static_cast<std::size_t>(m * (m - 1) / 2) <= n; ++m) {
      if (static_cast<std::size_t>(m * (m - 1) / 2) == n) {
        candidates.push_back(GeometryName::grassmannian(m));
      }
    }
  }
  for (const auto& name : candidates) {
    IncidenceGeometry ref = reference_model(name);
    if (ref.point_count != n || ref.lines.size() != g.lines.size()) continue;
    if (auto f = isomorphic(g, ref)) return {name, std::move(*f)};
  }
  return {};
}

GeometryName recognize(const IncidenceGeometry& g) { return recognize_with_map(g).name; }

std::vector<GeometryName> recognize_all(const IncidenceGeometry& full) {
  IncidenceGeometry principal = full.principal();
  std::vector<IncidenceGeometry> pieces{principal};
  std::vector<int> orbits = principal.line_orbit;
  std::sort(orbits.begin(), orbits.end());
  orbits.erase(std::unique(orbits.begin(), orbits.end()), orbits.end());
  if (orbits.size() > 1) {
    for (int o : orbits) {
      pieces.push_back(principal.filter_lines([&](std::size_t i) { return principal.line_orbit[i] == o; }));
      pieces.push_back(principal.filter_lines([&](std::size_t i) { return principal.line_orbit[i] != o; }));
    }
  }
  std::vector<GeometryName> out;
  for (const auto& piece : pieces) {
    GeometryName name = recognize(piece);
    if (name.tag == GeometryName::Tag::Unknown) continue;
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  if (out.size() > 2) {
    std::sort(out.begin() + 1, out.end(), [](const GeometryName& a, const GeometryName& b) {
      return std::tie(a.tag, a.n, a.m, a.k) < std::tie(b.tag, b.n, b.m, b.k);
    });
  }
  bool has_multipartite = std::any_of(out.begin(), out.end(), [](const GeometryName& x) {
    return x.tag == GeometryName::Tag::Multipartite;
  });
  if (has_multipartite) {
    std::erase_if(out, [](const GeometryName& x) { return x.tag == GeometryName::Tag::CompleteGraph; });
  }
  return out;
}

// -------------------------------------------------------------- filtration

IncidenceGeometry filtration_level(const IncidenceGeometry& g, const Recognition& r, int i) {
  if (r.name.tag != GeometryName::Tag::Grassmannian) {
    throw std::invalid_argument("filtration needs a Gr(2,n) certificate");
  }
  if (i < 2 || i > r.name.n) throw std::out_of_range("filtration level out of range");
  if (r.bijection.size() != g.point_count) throw std::invalid_argument("bijection size mismatch");
  const auto limit = static_cast<std::uint32_t>(i * (i - 1) / 2);
  IncidenceGeometry out;
  out.point_count = limit;
  for (const auto& l : g.lines) {
    std::vector<std::uint32_t> m;
    for (auto p : l) m.push_back(r.bijection[p]);
    if (std::all_of(m.begin(), m.end(), [&](auto q) { return q < limit; })) {
      std::sort(m.begin(), m.end());
      out.lines.push_back(std::move(m));
    }
  }
  sort_lines(out);
  return out;
}

std::vector<std::size_t> binomial_filtration(const IncidenceGeometry& g, const Recognition& r) {
  std::vector<std::size_t> out;
  for (int i = 3; i <= r.name.n; ++i) out.push_back(filtration_level(g, r, i).lines.size());
  return out;
}

}  // namespace cosetgeom
