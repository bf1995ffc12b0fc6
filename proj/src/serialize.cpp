#include "cosetgeom/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace cosetgeom {

Json coset_table_to_json(const CosetTable& t, const Presentation& p) {
  Json action = Json::array();
  for (const auto& col : t.action()) {
    Json c = Json::array();
    for (int x : col) c.push_back(x + 1);
    action.push_back(std::move(c));
  }
  Json reps = Json::array();
  for (const auto& w : coset_representatives(t)) reps.push_back(render_word(w, p.generator_names));
  Json j;
  j["index"] = t.index();
  j["action"] = std::move(action);
  j["reps"] = std::move(reps);
  return j;
}

CosetTable coset_table_from_json(const Json& j) {
  std::vector<std::vector<int>> action;
  for (const auto& col : j.at("action")) {
    std::vector<int> c;
    for (const auto& x : col) c.push_back(x.get<int>() - 1);
    action.push_back(std::move(c));
  }
  CosetTable t(std::move(action));
  if (j.contains("index") && j.at("index").get<int>() != t.index()) {
    throw std::invalid_argument("coset table index does not match its action");
  }
  return t;
}

Json record_to_json(const SubgroupRecord& r, const Presentation& p) {
  Json gens = Json::array();
  for (const auto& w : r.generators) gens.push_back(render_word(w, p.generator_names));
  Json j;
  j["index"] = r.index;
  j["class_id"] = r.class_id;
  j["generators"] = std::move(gens);
  j["table"] = coset_table_to_json(r.table, p);
  return j;
}

SubgroupRecord record_from_json(const Json& j, const Presentation& p) {
  SubgroupRecord r;
  r.table = coset_table_from_json(j.at("table"));
  r.index = r.table.index();
  r.class_id = j.at("class_id").get<int>();
  for (const auto& w : j.at("generators")) r.generators.push_back(p.parse_word(w.get<std::string>()));
  r.table.set_subgroup_generators(r.generators);
  if (!r.table.is_valid_for(p)) throw std::invalid_argument("coset table does not fit the presentation");
  return r;
}

Json low_index_to_json(const Presentation& p, int max_index,
                       const std::vector<SubgroupRecord>& records) {
  Json subs = Json::array();
  for (const auto& r : records) subs.push_back(record_to_json(r, p));
  Json j;
  j["presentation"] = p.render();
  j["max_index"] = max_index;
  j["eta"] = eta_sequence(records, max_index);
  j["subgroups"] = std::move(subs);
  return j;
}

Json geometry_to_json(const IncidenceGeometry& g) {
  Json lines = Json::array();
  for (const auto& l : g.lines) {
    Json line = Json::array();
    for (auto x : l) line.push_back(x + 1);
    lines.push_back(std::move(line));
  }
  Json j;
  j["points"] = g.point_count;
  j["lines"] = std::move(lines);
  Json ctx = Json::array();
  for (bool b : g.contextual) ctx.push_back(b);
  j["contextual"] = std::move(ctx);
  return j;
}

IncidenceGeometry geometry_from_json(const Json& j) {
  IncidenceGeometry g;
  g.point_count = j.at("points").get<std::size_t>();
  for (const auto& line : j.at("lines")) {
    std::vector<std::uint32_t> l;
    for (const auto& x : line) {
      auto v = x.get<std::uint32_t>();
      if (v < 1 || v > g.point_count) throw std::invalid_argument("line point out of range");
      l.push_back(v - 1);
    }
    std::sort(l.begin(), l.end());
    g.lines.push_back(std::move(l));
  }
  if (j.contains("contextual")) {
    for (const auto& b : j.at("contextual")) g.contextual.push_back(b.get<bool>());
    if (!g.contextual.empty() && g.contextual.size() != g.lines.size()) {
      throw std::invalid_argument("contextual flags must match the lines");
    }
  }
  return g;
}

Json fiducial_to_json(const CVector& v) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back({v(i).real(), v(i).imag()});
  return j;
}

CVector fiducial_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("fiducial must be a non-empty array");
  CVector v(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const auto& z : j) {
    if (z.is_number()) {
      v(i++) = Complex(z.get<double>(), 0.0);
    } else if (z.is_array() && z.size() == 2) {
      v(i++) = Complex(z[0].get<double>(), z[1].get<double>());
    } else {
      throw std::invalid_argument("fiducial entries must be [re, im] pairs");
    }
  }
  return v;
}

Json fiducial_report_to_json(const FiducialReport& r) {
  Json j;
  j["dim"] = r.dim;
  j["gram_rank"] = r.gram_rank;
  j["pp"] = r.pp;
  j["is_mic"] = r.is_mic;
  j["is_sic"] = r.is_sic;
  return j;
}

std::string geometry_to_dot(const IncidenceGeometry& g, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (std::size_t p = 0; p < g.point_count; ++p) os << "  p" << p + 1 << " [label=\"" << p + 1 << "\"];\n";
  for (std::size_t i = 0; i < g.lines.size(); ++i) {
    const auto& l = g.lines[i];
    bool ctx = i < g.contextual.size() && g.contextual[i];
    std::string style = ctx ? " [color=red]" : "";
    if (l.size() == 2) {
      os << "  p" << l[0] + 1 << " -- p" << l[1] + 1 << style << ";\n";
      continue;
    }
    os << "  l" << i + 1 << " [shape=point];\n";
    for (auto x : l) os << "  l" << i + 1 << " -- p" << x + 1 << style << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace cosetgeom
