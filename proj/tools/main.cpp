#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cosetgeom/errors.hpp"
#include "cosetgeom/pipeline.hpp"

namespace fs = std::filesystem;
using namespace cosetgeom;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

struct Settings {
  int max_index = 10;
  bool mic = false;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::uint64_t node_budget = 0;
  double time_budget = 0;  // seconds
  double tolerance = 1e-8;
  std::string pauli = "wh";
  std::string format = "text";
  std::string out_dir = ".";

  PipelineOptions options() const {
    PipelineOptions o;
    o.max_index = max_index;
    o.mic = mic;
    o.max_cosets = max_cosets;
    o.node_budget = node_budget;
    o.time_budget = std::chrono::milliseconds(static_cast<long long>(time_budget * 1000.0));
    o.fiducials.mic.tolerance = tolerance;
    o.fiducials.mic.pauli = pauli == "tensor" ? PauliKind::Tensor : PauliKind::WeylHeisenberg;
    return o;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string file_slug(std::string s) {
  for (auto& c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  }
  return s;
}

void add_budget_flags(CLI::App* cmd, Settings& s) {
  cmd->add_option("--max-index", s.max_index, "Largest subgroup index")
      ->envname("COSETGEOM_MAX_INDEX")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--node-budget", s.node_budget, "Search-node budget (0 = none)")
      ->envname("COSETGEOM_NODE_BUDGET");
  cmd->add_option("--time-budget", s.time_budget, "Wall-clock budget in seconds (0 = none)")
      ->envname("COSETGEOM_TIME_BUDGET");
}

void add_mic_flags(CLI::App* cmd, Settings& s) {
  cmd->add_option("--tolerance", s.tolerance, "Numerical tolerance for rank and pp")
      ->envname("COSETGEOM_TOLERANCE");
  cmd->add_option("--pauli", s.pauli, "Pauli realization")
      ->envname("COSETGEOM_PAULI")
      ->check(CLI::IsMember({"wh", "tensor"}));
}

void print_permgroup_text(const PermGroupReport& r) {
  std::cout << "degree: " << r.degree << "\norder: " << order_string(r.order)
            << "\ngroup: " << r.group << "\n";
  if (!r.transitive) {
    std::cout << "not transitive: no geometry\n";
    return;
  }
  std::cout << "primitive: " << (r.primitive ? "yes" : "no") << "\nrank: " << r.rank << "\n";
  auto principal = r.geometry.principal();
  std::cout << "lines: " << principal.lines.size();
  if (!r.configuration.empty()) std::cout << " " << r.configuration;
  std::cout << "\ngeometry: " << names_to_string(r.geometries) << "\n";
  if (!r.filtration.empty()) {
    std::cout << "filtration:";
    for (auto c : r.filtration) std::cout << " " << c;
    std::cout << "\n";
  }
  if (r.mic) {
    std::cout << "MIC: " << (r.mic->found ? "yes pp=" + std::to_string(r.mic->best.pp) : "none found")
              << (r.mic->complete ? "" : " (search incomplete)") << "\n";
  }
}

int run_subgroups(const std::string& file, const Settings& s) {
  auto p = load_presentation(file);
  LowIndexOptions lo;
  lo.max_index = s.max_index;
  lo.max_nodes = s.node_budget;
  lo.time_budget = s.options().time_budget;
  auto result = search_low_index(p, lo);
  if (s.format == "json") {
    auto j = low_index_to_json(p, s.max_index, result.records);
    j["complete"] = result.complete;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (s.format == "tsv" ? "eta" : "eta:");
    for (auto c : eta_sequence(result.records, s.max_index)) {
      std::cout << (s.format == "tsv" ? "\t" : " ") << c;
    }
    std::cout << "\n";
    if (s.format == "text") {
      for (const auto& r : result.records) {
        std::cout << "index " << r.index << " class " << r.class_id << ": <";
        for (std::size_t i = 0; i < r.generators.size(); ++i) {
          std::cout << (i ? ", " : "") << render_word(r.generators[i], p.generator_names);
        }
        std::cout << ">\n";
      }
    }
  }
  if (!result.complete) {
    std::cerr << "budget exhausted: partial result\n";
    return kExitBudget;
  }
  return 0;
}

int run_analyze(const std::string& file, const Settings& s) {
  auto report = run_pipeline(load_presentation(file), s.options());
  if (s.format == "json") {
    std::cout << report_to_json(report).dump(2) << "\n";
  } else if (s.format == "tsv") {
    std::cout << report_to_tsv(report);
  } else {
    std::cout << report_to_text(report);
  }
  if (!report.complete) {
    std::cerr << "budget exhausted: partial report\n";
    return kExitBudget;
  }
  return 0;
}

int run_permgroup(const std::string& file, const Settings& s) {
  auto g = parse_generators(read_file(file));
  auto r = analyze_permgroup(g, s.options());
  if (s.format == "json") {
    std::cout << permgroup_report_to_json(r).dump(2) << "\n";
  } else {
    print_permgroup_text(r);
  }
  return 0;
}

int run_mic(const std::string& fiducial_file, const std::string& group_file, const Settings& s) {
  auto opt = s.options().fiducials;
  if (!fiducial_file.empty()) {
    CVector v = normalized(fiducial_from_json(Json::parse(read_file(fiducial_file))));
    auto r = analyze_fiducial(v, opt.mic);
    if (s.format == "json") {
      std::cout << fiducial_report_to_json(r).dump(2) << "\n";
    } else {
      std::cout << "dim " << r.dim << "  gram_rank " << r.gram_rank << "  pp " << r.pp
                << "  MIC " << (r.is_mic ? "yes" : "no") << "  SIC " << (r.is_sic ? "yes" : "no") << "\n";
    }
    return 0;
  }
  auto g = parse_generators(read_file(group_file));
  auto search = find_fiducials(g, opt);
  if (s.format == "json") {
    Json cands = Json::array();
    for (const auto& c : search.candidates) {
      auto j = fiducial_report_to_json(c);
      j["fiducial"] = fiducial_to_json(c.fiducial);
      cands.push_back(std::move(j));
    }
    Json j;
    j["complete"] = search.complete;
    j["subgroups_examined"] = search.subgroups_examined;
    j["candidates"] = std::move(cands);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << search.candidates.size() << " candidates from " << search.subgroups_examined
              << " abelian subgroups" << (search.complete ? "" : " (incomplete)") << "\n";
    for (const auto& c : search.candidates) {
      std::cout << "  gram_rank " << c.gram_rank << "  pp " << c.pp << "  MIC "
                << (c.is_mic ? "yes" : "no") << "  SIC " << (c.is_sic ? "yes" : "no") << "\n";
    }
  }
  return 0;
}

int run_export(const std::string& file, const Settings& s) {
  auto report = run_pipeline(load_presentation(file), s.options());
  fs::path dir(s.out_dir);
  fs::create_directories(dir);
  bool all = s.format == "all";
  if (all || s.format == "json") write_file(dir / "report.json", report_to_json(report).dump(2) + "\n");
  if (all || s.format == "tsv") write_file(dir / "table.tsv", report_to_tsv(report));
  if (all || s.format == "dot") {
    for (const auto& row : report.rows) {
      if (row.geometries.empty()) continue;
      std::string name = "d" + std::to_string(row.index) + "_c" + std::to_string(row.class_id) + "_" +
                         file_slug(row.geometries.front().to_string());
      write_file(dir / (name + ".dot"), geometry_to_dot(row.geometry.principal(), name));
    }
  }
  if (!report.complete) {
    std::cerr << "budget exhausted: partial report\n";
    return kExitBudget;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-index subgroups, coset geometries and MIC states of finitely presented groups"};
  app.require_subcommand(1);
  Settings s;
  std::string file, fiducial_file, group_file;

  auto* sub = app.add_subcommand("subgroups", "Enumerate conjugacy classes of low-index subgroups");
  sub->add_option("presentation", file, "Presentation file")->required()->check(CLI::ExistingFile);
  add_budget_flags(sub, s);
  sub->add_option("--format", s.format, "Output format")
      ->envname("COSETGEOM_FORMAT")
      ->check(CLI::IsMember({"text", "json", "tsv"}));

  auto* analyze = app.add_subcommand("analyze", "Full per-subgroup analysis");
  analyze->add_option("presentation", file, "Presentation file")->required()->check(CLI::ExistingFile);
  add_budget_flags(analyze, s);
  add_mic_flags(analyze, s);
  analyze->add_flag("--mic", s.mic, "Search for MIC fiducials")->envname("COSETGEOM_MIC");
  analyze->add_option("--max-cosets", s.max_cosets, "Coset enumeration ceiling")
      ->envname("COSETGEOM_MAX_COSETS");
  analyze->add_option("--format", s.format, "Output format")
      ->envname("COSETGEOM_FORMAT")
      ->check(CLI::IsMember({"text", "json", "tsv"}));

  auto* perm = app.add_subcommand("permgroup", "Analyze a permutation group given by generators");
  perm->add_option("generators", file, "Generator file in cycle notation")
      ->required()
      ->check(CLI::ExistingFile);
  add_mic_flags(perm, s);
  perm->add_flag("--mic", s.mic, "Search for MIC fiducials")->envname("COSETGEOM_MIC");
  perm->add_option("--format", s.format, "Output format")
      ->envname("COSETGEOM_FORMAT")
      ->check(CLI::IsMember({"text", "json"}));

  auto* mic = app.add_subcommand("mic", "Test a fiducial or search a group for fiducials");
  auto* fid_opt = mic->add_option("--fiducial", fiducial_file, "JSON array of [re, im] pairs")
                      ->check(CLI::ExistingFile);
  auto* grp_opt = mic->add_option("--group", group_file, "Generator file in cycle notation")
                      ->check(CLI::ExistingFile);
  fid_opt->excludes(grp_opt);
  add_mic_flags(mic, s);
  mic->add_option("--format", s.format, "Output format")
      ->envname("COSETGEOM_FORMAT")
      ->check(CLI::IsMember({"text", "json"}));

  auto* exp = app.add_subcommand("export", "Write report.json, table.tsv and DOT files");
  exp->add_option("presentation", file, "Presentation file")->required()->check(CLI::ExistingFile);
  add_budget_flags(exp, s);
  add_mic_flags(exp, s);
  exp->add_flag("--mic", s.mic, "Search for MIC fiducials")->envname("COSETGEOM_MIC");
  exp->add_option("--max-cosets", s.max_cosets, "Coset enumeration ceiling")
      ->envname("COSETGEOM_MAX_COSETS");
  exp->add_option("--out", s.out_dir, "Output directory");
  std::string export_format = "all";
  exp->add_option("--format", export_format, "Artifacts to write")
      ->envname("COSETGEOM_FORMAT")
      ->check(CLI::IsMember({"all", "json", "dot", "tsv"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (sub->parsed()) return run_subgroups(file, s);
    if (analyze->parsed()) return run_analyze(file, s);
    if (perm->parsed()) return run_permgroup(file, s);
    if (mic->parsed()) {
      if (fiducial_file.empty() && group_file.empty()) {
        std::cerr << "mic: give --fiducial or --group\n";
        return kExitParse;
      }
      return run_mic(fiducial_file, group_file, s);
    }
    if (exp->parsed()) {
      s.format = export_format;
      return run_export(file, s);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
