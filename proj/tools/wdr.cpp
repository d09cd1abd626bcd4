// wdr: command-line front end for the weakly distance-regular digraph toolkit.
//
//   wdr analyze <file> [--format text|kv]
//   wdr generate --family <i..vi> --param <int> [-o FILE]
//   wdr verify-theorem <file> [--emit DIR]
//   wdr census --max-order N --max-valency S [--groups cyclic|z2|all] [--jobs J] [--out DIR]
//   wdr isomorphic <file1> <file2> [-v]

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "wdr/wdr.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kInputError = 3;

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw wdr::error("cannot write " + path.string());
  out << content;
}

int run_analyze(const std::string& file, const std::string& format) {
  const auto g = wdr::read_digraph_file(file);
  const auto report = wdr::analyze(g);
  if (format == "kv")
    wdr::write_report_kv(std::cout, report);
  else
    wdr::write_report_text(std::cout, report);
  return report.strongly_connected ? 0 : 1;
}

int run_generate(const std::string& family, int param, const std::string& out) {
  auto f = wdr::parse_family(family);
  if (!f) throw wdr::error("unknown family '" + family + "' (expected i, ii, iii, iv, v or vi)");
  const auto g = wdr::build_family({*f, param});
  const std::string text = wdr::to_text(g, {"family " + wdr::to_string(*f) + " param " + std::to_string(param)});
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  return 0;
}

void emit_attempt(const fs::path& dir, std::size_t k, const wdr::Digraph& g, const wdr::SchemeTensor& t,
                  const wdr::TheoremAttempt& a) {
  const std::string tag = std::to_string(k);
  const std::string kept = "kept {" + wdr::detail::join_ints(a.kept, ",") + "}";

  auto delta = wdr::delta_subdigraph(g, t, a.kept, 0);
  std::vector<std::vector<wdr::Vertex>> singles;
  for (auto v : delta.vertices) singles.push_back({v});
  std::ostringstream map;
  wdr::write_block_map(map, singles);
  write_file(dir / ("delta_" + tag + ".txt"), wdr::to_text(delta.digraph, {"delta at vertex 0, " + kept}));
  write_file(dir / ("delta_" + tag + ".map"), map.str());

  auto quo = wdr::quotient(g, wdr::arc_closure(t, a.kept));
  std::ostringstream qmap;
  wdr::write_block_map(qmap, quo.classes.blocks);
  write_file(dir / ("quotient_" + tag + ".txt"), wdr::to_text(quo.digraph, {"quotient, " + kept}));
  write_file(dir / ("quotient_" + tag + ".map"), qmap.str());
}

int run_verify(const std::string& file, const std::string& emit) {
  const auto g = wdr::read_digraph_file(file);
  const auto report = wdr::analyze(g);
  const auto verdict = wdr::verify_theorem(g, report);
  wdr::write_verdict(std::cout, verdict);
  if (!emit.empty() && report.tensor()) {
    fs::create_directories(emit);
    for (std::size_t k = 0; k < verdict.attempts.size(); ++k)
      emit_attempt(emit, k, g, *report.tensor(), verdict.attempts[k]);
  }
  switch (verdict.status) {
    case wdr::TheoremStatus::pass: return 0;
    case wdr::TheoremStatus::theorem_failure: return 1;
    case wdr::TheoremStatus::precondition_failure: return 2;
  }
  return 1;
}

std::string census_line(std::size_t idx, const wdr::CensusEntry& e) {
  using wdr::detail::yes_no;
  std::ostringstream os;
  os << std::setw(4) << idx << "  " << e.spec.to_string() << "  n=" << e.report.order << " arcs=" << e.report.arcs
     << " wdr=" << yes_no(e.report.is_wdr());
  if (e.report.is_wdr())
    os << " commutative=" << yes_no(e.report.commutative) << " thick=" << yes_no(e.report.thick);
  os << " T={" << wdr::detail::join_ints(e.report.t_set, ",") << "}";
  if (e.verdict) os << " theorem=" << (e.verdict->passed() ? "pass" : "FAIL");
  for (const auto& f : e.findings) os << " VIOLATION[" << f.property << ": " << f.detail << "]";
  return os.str();
}

int run_census(const wdr::CensusOptions& opt, const std::string& out) {
  const auto result = wdr::census(opt);
  if (!out.empty()) fs::create_directories(out);

  std::ostringstream summary;
  std::size_t ctwdr = 0;
  for (std::size_t i = 0; i < result.entries.size(); ++i) {
    const auto& e = result.entries[i];
    const std::string line = census_line(i, e);
    std::cout << line << '\n';
    summary << line << '\n';
    if (e.verdict) ++ctwdr;
    if (!out.empty()) {
      std::ostringstream name;
      name << std::setw(4) << std::setfill('0') << i << ".txt";
      write_file(fs::path(out) / name.str(), wdr::to_text(e.digraph, {e.spec.to_string()}));
    }
  }
  std::ostringstream totals;
  totals << "candidates = " << result.candidates << '\n'
         << "strongly_connected = " << result.strongly_connected << '\n'
         << "isomorphism_classes = " << result.entries.size() << '\n'
         << "wdr = " << result.count_if_report(&wdr::AnalysisReport::is_wdr) << '\n'
         << "commutative_thick_wdr = " << ctwdr << '\n'
         << "violations = " << result.finding_count() << '\n';
  std::cout << totals.str();
  if (!out.empty()) write_file(fs::path(out) / "summary.txt", summary.str() + totals.str());
  return result.finding_count() == 0 ? 0 : 1;
}

int run_isomorphic(const std::string& a, const std::string& b, bool verbose) {
  const auto g1 = wdr::read_digraph_file(a);
  const auto g2 = wdr::read_digraph_file(b);
  auto map = wdr::find_isomorphism(g1, g2);
  std::cout << (map ? "isomorphic" : "not isomorphic") << '\n';
  if (map && verbose)
    for (std::size_t v = 0; v < map->size(); ++v) std::cout << v << " -> " << (*map)[v] << '\n';
  return map ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weakly distance-regular digraph analysis"};
  app.require_subcommand(1);

  std::string file, format = "text";
  auto* analyze = app.add_subcommand("analyze", "Report scheme, arc-type and configuration data for a digraph");
  analyze->add_option("file", file, "Digraph file")->required();
  analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "kv"}));

  std::string family, out;
  int param = 0;
  auto* generate = app.add_subcommand("generate", "Write a member of one of the six families");
  generate->add_option("--family", family, "i, ii, iii, iv, v or vi")->required();
  generate->add_option("--param", param, "p for i/ii, q for iii-vi")->required();
  generate->add_option("-o,--output", out, "Output file (default stdout)");

  std::string emit;
  auto* verify = app.add_subcommand("verify-theorem", "Check the subdigraph/quotient classification on a digraph");
  verify->add_option("file", file, "Digraph file")->required();
  verify->add_option("--emit", emit, "Directory for Delta and quotient digraphs with block maps");

  wdr::CensusOptions copt;
  copt.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string groups = "all", census_out;
  auto* census = app.add_subcommand("census", "Exhaustive Cayley digraph census with property checks");
  census->add_option("--max-order", copt.max_order, "Largest group order")->required()->check(CLI::Range(2, 64));
  census->add_option("--max-valency", copt.max_valency, "Largest connection set")->required()->check(CLI::Range(1, 8));
  census->add_option("--groups", groups, "cyclic, z2 (Z_n x Z_2) or all")
      ->check(CLI::IsMember({"cyclic", "z2", "cyclic_x_Z2", "all"}));
  census->add_option("--jobs", copt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  census->add_option("--out", census_out, "Directory for digraph files and summary");

  std::string file2;
  bool verbose = false;
  auto* iso = app.add_subcommand("isomorphic", "Decide isomorphism of two digraphs");
  iso->add_option("file1", file, "First digraph")->required();
  iso->add_option("file2", file2, "Second digraph")->required();
  iso->add_flag("-v,--verbose", verbose, "Print the vertex mapping");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(file, format);
    if (*generate) return run_generate(family, param, out);
    if (*verify) return run_verify(file, emit);
    if (*census) {
      copt.groups = *wdr::parse_group_family(groups);
      return run_census(copt, census_out);
    }
    if (*iso) return run_isomorphic(file, file2, verbose);
  } catch (const std::exception& e) {
    std::cerr << "wdr: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
