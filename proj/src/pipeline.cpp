#include "cosetgeom/pipeline.hpp"

#include <iomanip>
#include <sstream>

#include "cosetgeom/errors.hpp"

namespace cosetgeom {

std::string names_to_string(const std::vector<GeometryName>& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : ", ") + n.to_string();
  return s.empty() ? "-" : s;
}

MicSummary summarize_fiducials(const PermutationGroup& g, const FiducialSearchOptions& opt) {
  FiducialSearchOptions local = opt;
  const auto d = g.degree();
  if (local.mic.pauli == PauliKind::Tensor && (d < 2 || (d & (d - 1)) != 0)) {
    local.mic.pauli = PauliKind::WeylHeisenberg;
  }
  auto search = find_fiducials(g, local);
  MicSummary s;
  s.candidates = search.candidates.size();
  s.complete = search.complete;
  if (!search.candidates.empty()) {
    s.best = search.candidates.front();
    s.found = s.best.is_mic;
  }
  return s;
}

ReportRow analyze_record(const Presentation& p, const SubgroupRecord& r,
                         const PipelineOptions& opt) {
  ReportRow row;
  row.index = r.index;
  row.class_id = r.class_id;
  row.record = r;
  auto P = PermutationGroup::from_coset_table(r.table);
  row.group = name_group(P);
  row.order = P.order();

  std::vector<Permutation> images;
  for (const auto& w : r.generators) images.push_back(word_image(P, w));
  row.axiom_i = normal_closure_is_full(P, images);

  try {
    row.index_verified = enumerate_cosets(p, r.generators, opt.max_cosets).index() == r.index;
  } catch (const BudgetExhausted&) {
    row.index_verified = false;
  }

  row.geometry = build_geometry(P);
  row.geometry.contextual = contextuality(row.geometry, coset_representatives(r.table), P);
  row.axiom_ii = axiom_ii_holds(row.geometry);
  auto principal = row.geometry.principal();
  row.configuration = principal.configuration_symbol();
  row.contextual = principal.is_contextual();
  row.geometries = recognize_all(row.geometry);
  if (opt.mic) row.mic = summarize_fiducials(P, opt.fiducials);
  return row;
}

PipelineReport run_pipeline(const Presentation& p, const PipelineOptions& opt) {
  LowIndexOptions lo;
  lo.max_index = opt.max_index;
  lo.max_nodes = opt.node_budget;
  lo.time_budget = opt.time_budget;
  auto result = search_low_index(p, lo);
  PipelineReport report;
  report.presentation = p;
  report.max_index = opt.max_index;
  report.complete = result.complete;
  report.eta = eta_sequence(result.records, opt.max_index);
  for (const auto& r : result.records) report.rows.push_back(analyze_record(p, r, opt));
  return report;
}

PermGroupReport analyze_permgroup(const PermutationGroup& g, const PipelineOptions& opt) {
  PermGroupReport r;
  r.degree = g.degree();
  r.order = g.order();
  r.group = name_group(g);
  r.transitive = g.is_transitive();
  if (r.transitive) {
    r.primitive = g.is_primitive();
    r.rank = g.rank();
    r.geometry = build_geometry(g);
    r.configuration = r.geometry.principal().configuration_symbol();
    r.geometries = recognize_all(r.geometry);
    auto rec = recognize_with_map(r.geometry.principal());
    if (rec.name.tag == GeometryName::Tag::Grassmannian) {
      r.filtration = binomial_filtration(r.geometry.principal(), rec);
      r.grassmannian = std::move(rec);
    }
    if (opt.mic) r.mic = summarize_fiducials(g, opt.fiducials);
  }
  return r;
}

namespace {

Json mic_to_json(const MicSummary& m) {
  Json j;
  j["candidates"] = m.candidates;
  j["found"] = m.found;
  j["complete"] = m.complete;
  if (m.candidates > 0) {
    j["best"] = fiducial_report_to_json(m.best);
    j["best"]["fiducial"] = fiducial_to_json(m.best.fiducial);
  }
  return j;
}

Json names_json(const std::vector<GeometryName>& names) {
  Json j = Json::array();
  for (const auto& n : names) j.push_back(n.to_string());
  return j;
}

std::string mic_cell(const std::optional<MicSummary>& m) {
  if (!m) return "-";
  if (!m->found) return m->complete ? "no" : "none in budget";
  return "yes pp=" + std::to_string(m->best.pp);
}

}  // namespace

Json report_to_json(const PipelineReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j;
    j["index"] = row.index;
    j["class_id"] = row.class_id;
    j["group"] = row.group;
    j["order"] = order_string(row.order);
    j["axiom_i"] = row.axiom_i;
    j["axiom_ii"] = row.axiom_ii;
    j["index_verified"] = row.index_verified;
    j["geometry"] = names_json(row.geometries);
    j["configuration"] = row.configuration;
    j["contextual"] = row.contextual;
    if (row.mic) j["mic"] = mic_to_json(*row.mic);
    j["record"] = record_to_json(row.record, r.presentation);
    rows.push_back(std::move(j));
  }
  Json j;
  j["presentation"] = r.presentation.render();
  j["max_index"] = r.max_index;
  j["eta"] = r.eta;
  j["complete"] = r.complete;
  j["rows"] = std::move(rows);
  return j;
}

Json permgroup_report_to_json(const PermGroupReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["order"] = order_string(r.order);
  j["group"] = r.group;
  j["transitive"] = r.transitive;
  j["primitive"] = r.primitive;
  j["rank"] = r.rank;
  j["geometry"] = names_json(r.geometries);
  j["configuration"] = r.configuration;
  j["lines"] = geometry_to_json(r.geometry.principal())["lines"];
  if (!r.filtration.empty()) j["filtration"] = r.filtration;
  if (r.mic) j["mic"] = mic_to_json(*r.mic);
  return j;
}

std::string report_to_text(const PipelineReport& r) {
  std::ostringstream os;
  os << "presentation: " << r.presentation.render() << "\n";
  os << "eta:";
  for (auto c : r.eta) os << " " << c;
  os << (r.complete ? "" : "  (incomplete: budget exhausted)") << "\n\n";
  os << std::left << std::setw(6) << "d" << std::setw(6) << "class" << std::setw(36) << "group"
     << std::setw(7) << "ax(i)" << std::setw(7) << "ax(ii)" << std::setw(28) << "geometry"
     << std::setw(6) << "ctx" << "MIC\n";
  for (const auto& row : r.rows) {
    os << std::setw(6) << row.index << std::setw(6) << row.class_id << std::setw(36) << row.group
       << std::setw(7) << (row.axiom_i ? "yes" : "no") << std::setw(7) << (row.axiom_ii ? "yes" : "no")
       << std::setw(28) << names_to_string(row.geometries) << std::setw(6)
       << (row.contextual ? "yes" : "no") << mic_cell(row.mic) << "\n";
  }
  return os.str();
}

std::string report_to_tsv(const PipelineReport& r) {
  std::ostringstream os;
  os << "eta";
  for (auto c : r.eta) os << "\t" << c;
  os << "\n";
  os << "d\tclass\tgroup\torder\taxiom_i\taxiom_ii\tgeometry\tcontextual\tmic\n";
  for (const auto& row : r.rows) {
    os << row.index << "\t" << row.class_id << "\t" << row.group << "\t" << order_string(row.order)
       << "\t" << (row.axiom_i ? "yes" : "no") << "\t" << (row.axiom_ii ? "yes" : "no") << "\t"
       << names_to_string(row.geometries) << "\t" << (row.contextual ? "yes" : "no") << "\t"
       << mic_cell(row.mic) << "\n";
  }
  return os.str();
}

}  // namespace cosetgeom
