#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cosetgeom/perm_group.hpp"
#include "cosetgeom/word.hpp"

namespace cosetgeom {

/// Points 0..point_count-1 and lines as sorted point lists. The optional
/// annotations are either empty or parallel to `lines`.
struct IncidenceGeometry {
  std::size_t point_count = 0;
  std::vector<std::vector<std::uint32_t>> lines;
  std::vector<GroupOrder> line_stabilizer_order;
  std::vector<int> line_orbit;        // orbit of the line under P
  std::vector<bool> contextual;

  std::vector<std::size_t> point_degrees() const;
  /// Lines of size >= 3 if any, otherwise every line.
  IncidenceGeometry principal() const;
  /// Keeps the lines whose index satisfies `keep`.
  template <typename Pred>
  IncidenceGeometry filter_lines(Pred keep) const {
    IncidenceGeometry out;
    out.point_count = point_count;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (!keep(i)) continue;
      out.lines.push_back(lines[i]);
      if (!line_stabilizer_order.empty()) out.line_stabilizer_order.push_back(line_stabilizer_order[i]);
      if (!line_orbit.empty()) out.line_orbit.push_back(line_orbit[i]);
      if (!contextual.empty()) out.contextual.push_back(contextual[i]);
    }
    return out;
  }
  bool is_contextual() const;
  /// Configuration symbol "[p_r, l_k]" when point degrees and line sizes are
  /// constant, otherwise an empty string.
  std::string configuration_symbol() const;
};

/// Lines are maximal point sets whose pairs all share one (equal, not
/// conjugate) two-point stabilizer. Every pair lies on exactly one line;
/// size-2 lines are kept. Requires a transitive group.
IncidenceGeometry build_geometry(const PermutationGroup& p);

/// Axiom (ii) ("no geometry"): every line has exactly two points.
bool axiom_ii_holds(const IncidenceGeometry& g);

/// Per-line flags: a line is contextual when two of its points carry coset
/// representatives whose images in P do not commute.
std::vector<bool> contextuality(const IncidenceGeometry& g, const std::vector<Word>& reps,
                                const PermutationGroup& p);

struct GeometryName {
  enum class Tag {
    Unknown,
    CompleteGraph,
    Multipartite,
    FanoPlane,
    PG32,
    GQ22,
    MerminPentagram,
    Grassmannian,
  };
  Tag tag = Tag::Unknown;
  int n = 0;  // K_n, Gr(2,n)
  int m = 0;  // Multipartite: part size
  int k = 0;  // Multipartite: number of parts

  static GeometryName complete_graph(int d) { return {Tag::CompleteGraph, d, 0, 0}; }
  static GeometryName multipartite(int m, int k) { return {Tag::Multipartite, 0, m, k}; }
  static GeometryName grassmannian(int n) { return {Tag::Grassmannian, n, 0, 0}; }
  static GeometryName of(Tag t) { return {t, 0, 0, 0}; }

  std::string to_string() const;
  friend bool operator==(const GeometryName&, const GeometryName&) = default;
};

/// PG(n,2): nonzero vectors of F_2^(n+1) (point v-1 for integer v),
/// lines {u, v, u+v}.
IncidenceGeometry projective_space(int n);
/// Throws std::invalid_argument for Unknown.
IncidenceGeometry reference_model(const GeometryName& name);

/// Point bijection f (g1 point -> g2 point) carrying lines onto lines, if
/// one exists. The search is exhaustive.
std::optional<std::vector<std::uint32_t>> isomorphic(const IncidenceGeometry& g1,
                                                     const IncidenceGeometry& g2);

struct Recognition {
  GeometryName name;
  std::vector<std::uint32_t> bijection;  // to reference_model(name) points
};

/// Parameter match followed by an isomorphism certificate.
Recognition recognize_with_map(const IncidenceGeometry& g);
GeometryName recognize(const IncidenceGeometry& g);

/// Names certified for the principal geometry, each single line orbit and
/// the principal geometry minus each orbit. A multipartite hit suppresses
/// the complete-graph name it refines.
std::vector<GeometryName> recognize_all(const IncidenceGeometry& full);

/// For a Gr(2,n) certificate: entry i-3 counts lines inside the 2-subsets of
/// the first i symbols, for i = 3..n.
std::vector<std::size_t> binomial_filtration(const IncidenceGeometry& g, const Recognition& r);

/// Sub-geometry induced on the points of the first i symbols.
IncidenceGeometry filtration_level(const IncidenceGeometry& g, const Recognition& r, int i);

}  // namespace cosetgeom
