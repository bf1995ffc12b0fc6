// Acceptance run: one PASS/FAIL line per criterion item.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "cosetgeom/pipeline.hpp"
#include "oracle.hpp"

using namespace cosetgeom;
using Clock = std::chrono::steady_clock;
using Tag = GeometryName::Tag;

namespace {

int passed = 0;
int failed = 0;

void report(const std::string& id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("[%s] %-4s %s -- %s\n", ok ? "PASS" : "FAIL", id.c_str(), what.c_str(), detail.c_str());
  std::fflush(stdout);
  (ok ? passed : failed)++;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

Presentation data(const std::string& name) { return load_presentation(std::string(COSETGEOM_DATA_DIR) + "/" + name); }

struct Run {
  Presentation p;
  std::vector<SubgroupRecord> records;
  double seconds = 0;
};

Run enumerate(const std::string& file, int max_index) {
  Run r{data(file), {}, 0};
  auto t0 = Clock::now();
  r.records = low_index_subgroups(r.p, max_index);
  r.seconds = seconds_since(t0);
  return r;
}

bool contains(const std::vector<GeometryName>& v, const GeometryName& n) {
  return std::find(v.begin(), v.end(), n) != v.end();
}

bool lines_off_identity_contextual(const IncidenceGeometry& g) {
  for (std::size_t i = 0; i < g.lines.size(); ++i) {
    if (g.lines[i].front() != 0 && !g.contextual[i]) return false;
  }
  return true;
}

IncidenceGeometry printed_gr28() {
  std::ifstream in(COSETGEOM_DATA_DIR "/gr28_lines.txt");
  IncidenceGeometry g;
  g.point_count = 28;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::vector<std::uint32_t> l;
    std::uint32_t x;
    while (ss >> x) l.push_back(x - 1);
    std::sort(l.begin(), l.end());
    g.lines.push_back(l);
  }
  return g;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool intersections_ok(const IncidenceGeometry& g) {
  for (std::size_t i = 0; i < g.lines.size(); ++i) {
    for (std::size_t j = i + 1; j < g.lines.size(); ++j) {
      std::vector<std::uint32_t> c;
      std::set_intersection(g.lines[i].begin(), g.lines[i].end(), g.lines[j].begin(), g.lines[j].end(),
                            std::back_inserter(c));
      if (c.size() > 1) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::printf("tolerances: Gram rank, pp and SIC 1e-8 (relative), reconstruction 1e-8, trace orthogonality 1e-10\n");
  std::printf("time limits: eta runs 1800 s / 7200 s / 7200 s, Gr(2,8) 300 s\n\n");
  const std::vector<std::uint64_t> eta_sigma{0, 0, 0, 0, 0, 0, 2, 1, 0, 3, 0, 0, 0};
  const std::vector<std::uint64_t> eta_wbar{0, 0, 0, 0, 1, 1, 2, 0, 0, 1, 0, 5, 4, 9, 7, 1};
  const std::vector<std::uint64_t> eta_q{0, 0, 0, 0, 0, 2, 2, 1, 0, 1, 0, 0, 0, 2, 2, 3};

  // ---------------------------------------------------------------- 1
  auto sigma = enumerate("sigma257.fp", 13);
  auto sig_eta = proper_eta_sequence(sigma.records, 13);
  report("1a", sig_eta == eta_sigma && sigma.seconds <= 1800, "eta of Sigma(2,5,7) to index 13",
         join(sig_eta) + " in " + fmt_seconds(sigma.seconds));
  auto sigma14 = enumerate("sigma257.fp", 14);
  auto s14 = proper_eta_sequence(sigma14.records, 14);
  report("1a+", s14.back() == 12, "eta of Sigma(2,5,7) at index 14 (stretch)",
         std::to_string(s14.back()) + " in " + fmt_seconds(sigma14.seconds));

  auto wbar = enumerate("wbar.fp", 16);
  auto w_eta = proper_eta_sequence(wbar.records, 16);
  report("1b", w_eta == eta_wbar && wbar.seconds <= 7200, "eta of W-bar to index 16",
         join(w_eta) + " in " + fmt_seconds(wbar.seconds));

  auto q = enumerate("q.fp", 16);
  auto q_eta = proper_eta_sequence(q.records, 16);
  report("1c", q_eta == eta_q && q.seconds <= 7200, "eta of Q to index 16",
         join(q_eta) + " in " + fmt_seconds(q.seconds));

  bool whole = eta_sequence(sigma.records, 13)[0] == 1 && eta_sequence(wbar.records, 16)[0] == 1 &&
               eta_sequence(q.records, 16)[0] == 1;
  report("1d", whole, "index-1 count is the whole group in every run", whole ? "1, 1, 1" : "mismatch");

  // ---------------------------------------------------------------- 2
  {
    std::size_t total = 0, full = 0;
    for (const Run* run : {&sigma, &wbar, &q}) {
      for (const auto& r : run->records) {
        auto P = PermutationGroup::from_coset_table(r.table);
        std::vector<Permutation> h;
        for (const auto& w : r.generators) h.push_back(word_image(P, w));
        ++total;
        full += normal_closure_is_full(P, h) ? 1 : 0;
      }
    }
    report("2", full == total, "normal closure of every subgroup is the whole group",
           std::to_string(full) + "/" + std::to_string(total) + " records");
  }

  // ---------------------------------------------------------------- 3
  PipelineOptions opt;
  opt.max_index = 16;
  std::map<int, std::vector<ReportRow>> q_rows;
  for (const auto& r : q.records) {
    if (r.index == 6 || r.index == 7 || r.index == 8 || r.index == 10 || r.index == 15) {
      q_rows[r.index].push_back(analyze_record(q.p, r, opt));
    }
  }
  struct Expect {
    int d;
    const char* label;
    int order;
    GeometryName geometry;
  };
  for (const auto& e : {Expect{6, "A_6", 360, GeometryName::complete_graph(6)},
                        Expect{7, "PSL(2,7)", 168, GeometryName::of(Tag::FanoPlane)},
                        Expect{8, "PSL(2,7)", 168, GeometryName::complete_graph(8)},
                        Expect{10, "A_6", 360, GeometryName::complete_graph(10)}}) {
    const auto& rows = q_rows[e.d];
    bool ok = !rows.empty();
    std::string seen;
    for (const auto& row : rows) {
      ok = ok && row.group == e.label && row.order == e.order && row.geometries == std::vector<GeometryName>{e.geometry};
      seen += (seen.empty() ? "" : "; ") + row.group + " order " + order_string(row.order) + " " +
              names_to_string(row.geometries);
    }
    if (e.d == 7) {
      for (const auto& row : rows) {
        auto f = isomorphic(row.geometry.principal(), projective_space(2));
        ok = ok && f.has_value() && row.contextual;
      }
      seen += ", certified against PG(2,2), contextual";
    }
    report("3." + std::to_string(e.d), ok, "Q index " + std::to_string(e.d) + " row", seen);
  }

  // ---------------------------------------------------------------- 4
  {
    bool ok = false;
    std::string detail = "no index-10 record";
    for (const auto& r : wbar.records) {
      if (r.index != 10) continue;
      auto row = analyze_record(wbar.p, r, opt);
      auto principal = row.geometry.principal();
      bool sizes = principal.point_count == 10 && principal.lines.size() == 5 &&
                   std::all_of(principal.lines.begin(), principal.lines.end(), [](const auto& l) { return l.size() == 4; });
      bool iso = isomorphic(principal, reference_model(GeometryName::of(Tag::MerminPentagram))).has_value();
      ok = sizes && iso && row.contextual;
      detail = std::to_string(principal.point_count) + " points, " + std::to_string(principal.lines.size()) +
               " lines of 4, pentagram " + (iso ? "certified" : "not certified") + ", " +
               (row.contextual ? "contextual" : "not contextual");
    }
    report("4", ok, "W-bar index 10 is the Mermin pentagram", detail);
  }

  // ---------------------------------------------------------------- 5
  {
    int pg_sigma = 0;
    bool sigma_ok = true;
    auto sigma15 = enumerate("sigma257.fp", 15);
    for (const auto& r : sigma15.records) {
      if (r.index != 15) continue;
      auto row = analyze_record(sigma15.p, r, opt);
      if (!contains(row.geometries, GeometryName::of(Tag::PG32))) continue;
      ++pg_sigma;
      auto principal = row.geometry.principal();
      sigma_ok = sigma_ok && principal.lines.size() == 35 && row.contextual &&
                 lines_off_identity_contextual(row.geometry);
    }
    report("5a", pg_sigma > 0 && sigma_ok, "Sigma(2,5,7) index 15: PG(3,2), lines off the identity contextual",
           std::to_string(pg_sigma) + " PG(3,2) records, 35 lines each");

    int both = 0;
    bool q_ok = true;
    for (const auto& row : q_rows[15]) {
      auto principal = row.geometry.principal();
      bool pg = contains(row.geometries, GeometryName::of(Tag::PG32));
      bool gq_ctx = false, gq = false;
      std::set<int> orbits(principal.line_orbit.begin(), principal.line_orbit.end());
      for (int o : orbits) {
        auto sub = principal.filter_lines([&](std::size_t i) { return principal.line_orbit[i] == o; });
        if (recognize(sub) == GeometryName::of(Tag::GQ22)) {
          gq = true;
          gq_ctx = sub.is_contextual();
        }
      }
      if (pg && gq) ++both;
      q_ok = q_ok && pg && gq && gq_ctx && row.contextual && principal.lines.size() == 35 &&
             lines_off_identity_contextual(row.geometry);
    }
    report("5b", both > 0 && q_ok, "Q index 15: PG(3,2) and GQ(2,2), both contextual",
           std::to_string(both) + "/" + std::to_string(q_rows[15].size()) + " records carry both");
  }

  // ---------------------------------------------------------------- 6
  {
    auto t0 = Clock::now();
    auto g = parse_generators(read_file(COSETGEOM_DATA_DIR "/gr28_generators.txt"));
    auto r = analyze_permgroup(g, opt);
    auto principal = r.geometry.principal();
    bool sizes = r.order == 20160 && principal.point_count == 28 && principal.lines.size() == 56 &&
                 std::all_of(principal.lines.begin(), principal.lines.end(), [](const auto& l) { return l.size() == 3; });
    bool ref = isomorphic(principal, reference_model(GeometryName::grassmannian(8))).has_value();
    bool printed = isomorphic(principal, printed_gr28()).has_value();
    bool filt = r.filtration == std::vector<std::size_t>{1, 4, 10, 20, 35, 56};
    double s = seconds_since(t0);
    std::ostringstream d;
    d << "order " << order_string(r.order) << ", " << principal.lines.size() << " lines, Gr(2,8) "
      << (ref ? "yes" : "no") << ", printed list " << (printed ? "yes" : "no") << ", filtration "
      << join(std::vector<std::uint64_t>(r.filtration.begin(), r.filtration.end())) << " in " << fmt_seconds(s);
    report("6", sizes && ref && printed && filt && s <= 300, "Gr(2,8) from explicit generators", d.str());
  }

  // ---------------------------------------------------------------- 7
  {
    CVector v5(5);
    v5 << 0, 1, -1, -1, 1;
    Complex w6 = std::polar(1.0, std::numbers::pi / 3);
    CVector v6(6);
    v6 << 1, w6 - 1.0, 0, 0, -w6, 0;
    CVector v7(7);
    v7 << 1, 1, 0, -1, 0, -1, 0;
    auto r5 = analyze_fiducial(normalized(v5));
    auto r6 = analyze_fiducial(normalized(v6));
    auto r7 = analyze_fiducial(normalized(v7));
    report("7a", r5.gram_rank == 25, "d=5 fiducial Gram rank", "rank " + std::to_string(r5.gram_rank));
    report("7b", r5.pp == 1, "d=5 fiducial pp", "pp " + std::to_string(r5.pp));
    report("7c", r5.is_sic, "d=5 fiducial is a SIC", r5.is_sic ? "true" : "false");
    report("7d", r6.gram_rank == 36, "d=6 fiducial Gram rank", "rank " + std::to_string(r6.gram_rank));
    report("7e", r6.pp == 2, "d=6 fiducial pp", "pp " + std::to_string(r6.pp));
    report("7f", r7.gram_rank == 49, "d=7 fiducial Gram rank", "rank " + std::to_string(r7.gram_rank));
    report("7g", r7.pp == 2, "d=7 fiducial pp", "pp " + std::to_string(r7.pp));
  }

  // ---------------------------------------------------------------- 8
  {
    CVector v5(5);
    v5 << 0, 1, -1, -1, 1;
    v5 = normalized(v5);
    auto a5 = parse_generators("(1,2,3,4,5)\n(3,4,5)\n");
    auto s = find_fiducials(a5);
    bool hit = false;
    for (const auto& c : s.candidates) hit = hit || (c.is_mic && displacement_equivalent(c.fiducial, v5));
    report("8a", hit, "A_5 search rediscovers the d=5 fiducial",
           std::to_string(s.candidates.size()) + " candidates, equivalent MIC " + (hit ? "found" : "missing"));

    bool none = false;
    std::string detail = "no index-10 record";
    for (const auto& r : wbar.records) {
      if (r.index != 10) continue;
      auto sp = find_fiducials(PermutationGroup::from_coset_table(r.table));
      none = std::none_of(sp.candidates.begin(), sp.candidates.end(), [](const auto& c) { return c.is_mic; });
      detail = std::to_string(sp.candidates.size()) + " candidates from " + std::to_string(sp.subgroups_examined) +
               " abelian subgroups, none MIC";
    }
    report("8b", none, "pentagram group yields no MIC", detail);
  }

  // ---------------------------------------------------------------- 9
  {
    std::size_t tables = 0;
    bool valid = true;
    for (const Run* run : {&sigma, &wbar, &q}) {
      for (const auto& r : run->records) {
        ++tables;
        valid = valid && r.table.is_valid_for(run->p);
      }
    }
    report("9a", valid, "coset-table validity on every enumeration", std::to_string(tables) + " tables");

    struct Small {
      const char* text;
      std::size_t degree;
      std::vector<const char*> images;
    };
    bool oracle_ok = true;
    for (const auto& sg : {Small{"a,b | a^2, b^2, (ab)^3", 3, {"(1,2)", "(2,3)"}},
                           Small{"a,b | a^2, b^3, (ab)^3", 4, {"(1,2)(3,4)", "(2,3,4)"}},
                           Small{"a,b | a^2, b^4, (ab)^2", 4, {"(1,3)", "(1,2,3,4)"}}}) {
      auto p = parse_presentation(sg.text);
      std::vector<Permutation> imgs;
      for (auto c : sg.images) imgs.push_back(Permutation::from_cycles(c, sg.degree));
      auto group = oracle::closure(imgs, sg.degree);
      auto expected = oracle::class_counts(group);
      const int n = static_cast<int>(group.size());
      auto eta = eta_sequence(low_index_subgroups(p, n), n);
      for (int d = 1; d <= n; ++d) {
        auto it = expected.find(static_cast<std::size_t>(d));
        oracle_ok = oracle_ok && eta[static_cast<std::size_t>(d - 1)] == (it == expected.end() ? 0u : it->second);
      }
    }
    report("9b", oracle_ok, "low-index counts match brute force on S3, A4, D4", oracle_ok ? "equal" : "differ");

    bool orbit_stab = true;
    std::size_t groups = 0;
    for (const Run* run : {&sigma, &wbar, &q}) {
      for (const auto& r : run->records) {
        auto P = PermutationGroup::from_coset_table(r.table);
        if (P.order() > 10'000'000) continue;
        ++groups;
        for (std::uint32_t a = 0; a < P.degree(); ++a) {
          orbit_stab = orbit_stab && P.order() == P.orbit(a).size() * P.point_stabilizer(a).order();
        }
      }
    }
    report("9c", orbit_stab, "orbit-stabilizer identity", std::to_string(groups) + " groups of order <= 10^7");

    bool inter = true;
    std::size_t geos = 0;
    for (const Run* run : {&sigma, &wbar, &q}) {
      for (const auto& r : run->records) {
        if (r.index > 13) continue;
        ++geos;
        inter = inter && intersections_ok(build_geometry(PermutationGroup::from_coset_table(r.table)));
      }
    }
    report("9d", inter, "two lines meet in at most one point", std::to_string(geos) + " geometries");

    std::vector<GeometryName> names{GeometryName::complete_graph(6), GeometryName::multipartite(2, 4),
                                    GeometryName::of(Tag::FanoPlane), GeometryName::of(Tag::PG32),
                                    GeometryName::of(Tag::GQ22), GeometryName::of(Tag::MerminPentagram)};
    for (int n = 3; n <= 8; ++n) names.push_back(GeometryName::grassmannian(n));
    bool round = std::all_of(names.begin(), names.end(), [](const GeometryName& n) { return recognize(reference_model(n)) == n; });
    report("9e", round, "recognize(reference_model(t)) == t", std::to_string(names.size()) + " models");

    double worst = 0;
    for (int d = 2; d <= 7; ++d) {
      auto ds = displacement_operators(d);
      for (std::size_t a = 0; a < ds.size(); ++a) {
        for (std::size_t b = 0; b < ds.size(); ++b) {
          worst = std::max(worst, std::abs((ds[a].adjoint() * ds[b]).trace() - Complex(a == b ? d : 0, 0)));
        }
      }
    }
    report("9f", worst < 1e-10, "Pauli trace orthogonality, d = 2..7", "max deviation " + std::to_string(worst));

    double c = std::sqrt((1.0 + 1.0 / std::sqrt(3.0)) / 2.0);
    CVector q2(2);
    q2 << c, std::sqrt(1 - c * c) * std::polar(1.0, std::numbers::pi / 4);
    CVector f5(5);
    f5 << Complex(0.39104489402214759, 0.0), Complex(-0.042439199999883319, 0.16605477181904993),
        Complex(-0.28486558319586686, -0.64712933282796226), Complex(0.32098525032485292, -0.34885155217623642),
        Complex(-0.26015916739393657, 0.15928626827768752);
    f5 = normalized(f5);
    double err = 0;
    std::mt19937 rng(2024);
    std::normal_distribution<double> nd;
    for (const auto& v : {q2, f5}) {
      const auto d = v.size();
      for (int trial = 0; trial < 10; ++trial) {
        CMatrix a(d, d);
        for (Eigen::Index i = 0; i < d; ++i) {
          for (Eigen::Index j = 0; j < d; ++j) a(i, j) = Complex(nd(rng), nd(rng));
        }
        CMatrix rho = a * a.adjoint();
        rho /= rho.trace().real();
        err = std::max(err, (reconstruct_state(born_probabilities(rho, v), v) - rho).cwiseAbs().maxCoeff());
      }
    }
    report("9g", err <= 1e-8, "SIC reconstruction round trip, d = 2 and 5", "max error " + std::to_string(err));
  }

  std::printf("\n%d passed, %d failed\n", passed, failed);
  return failed == 0 ? 0 : 1;
}
