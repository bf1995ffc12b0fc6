#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cosetgeom/geometry.hpp"
#include "cosetgeom/low_index.hpp"
#include "cosetgeom/mic.hpp"
#include "cosetgeom/serialize.hpp"

namespace cosetgeom {

struct PipelineOptions {
  int max_index = 1;
  bool mic = false;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::uint64_t node_budget = 0;
  std::chrono::milliseconds time_budget{0};
  FiducialSearchOptions fiducials;
};

struct MicSummary {
  std::size_t candidates = 0;
  bool found = false;  // some candidate passes the MIC test
  FiducialReport best;  // first candidate when any
  bool complete = true;
};

struct ReportRow {
  int index = 0;
  int class_id = 0;
  std::string group;
  GroupOrder order;
  bool axiom_i = false;
  bool axiom_ii = false;
  bool index_verified = false;  // coset enumeration of H reproduces the index
  std::vector<GeometryName> geometries;
  std::string configuration;  // symbol of the principal geometry
  bool contextual = false;
  IncidenceGeometry geometry;  // full geometry with contextuality flags
  std::optional<MicSummary> mic;
  SubgroupRecord record;
};

struct PipelineReport {
  Presentation presentation;
  int max_index = 0;
  std::vector<std::uint64_t> eta;
  bool complete = true;
  std::vector<ReportRow> rows;
};

/// Analysis of one subgroup; uses nothing beyond the record and presentation.
ReportRow analyze_record(const Presentation& p, const SubgroupRecord& r,
                         const PipelineOptions& opt);

/// Low-index search followed by per-record analysis. A budget stop yields a
/// partial report with complete = false.
PipelineReport run_pipeline(const Presentation& p, const PipelineOptions& opt);

struct PermGroupReport {
  std::size_t degree = 0;
  GroupOrder order;
  std::string group;
  bool transitive = false;
  bool primitive = false;
  std::size_t rank = 0;
  IncidenceGeometry geometry;  // empty unless transitive
  std::vector<GeometryName> geometries;
  std::string configuration;
  std::optional<Recognition> grassmannian;
  std::vector<std::size_t> filtration;
  std::optional<MicSummary> mic;
};

PermGroupReport analyze_permgroup(const PermutationGroup& g, const PipelineOptions& opt);

/// Tensor Paulis fall back to Weyl-Heisenberg when the degree is not a
/// power of two.
MicSummary summarize_fiducials(const PermutationGroup& g, const FiducialSearchOptions& opt);

Json report_to_json(const PipelineReport& r);
Json permgroup_report_to_json(const PermGroupReport& r);
/// Fixed-width human table.
std::string report_to_text(const PipelineReport& r);
/// Tab-separated rows: index, class, group, order, axioms, geometry,
/// contextual, MIC; preceded by an eta line.
std::string report_to_tsv(const PipelineReport& r);
std::string names_to_string(const std::vector<GeometryName>& names);

}  // namespace cosetgeom
