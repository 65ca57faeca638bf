// Command-line front end: analyze a graph file, run the fixture catalog, or
// sweep the five-vertex path for degenerate parameter choices.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "coxaff/coxaff.hpp"

namespace {

int cmd_analyze(const std::string& path, bool as_json, int max_word_len, unsigned seed,
                const std::vector<int>& s0) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    coxaff::AnalysisOptions opts;
    opts.max_word_len = max_word_len;
    opts.seed = seed;
    if (!s0.empty()) {
      std::vector<std::size_t> idx;
      for (int i : s0) idx.push_back(static_cast<std::size_t>(i - 1));
      opts.s0_override = idx;
    }
    coxaff::AnalysisReport rep = coxaff::analyze_file_text(buf.str(), opts);
    if (as_json)
      std::cout << coxaff::to_json(rep).dump(2) << "\n";
    else
      std::cout << coxaff::to_text(rep);
    return 0;
  } catch (const coxaff::parse_error& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return 2;
  } catch (const coxaff::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_catalog(const std::string& dir) {
  auto rows = coxaff::run_catalog(dir);
  std::size_t failed = 0;
  for (const auto& r : rows) {
    if (!r.pass) ++failed;
    std::string line = (r.pass ? "PASS  " : "FAIL  ") + r.fixture + ": " + r.check;
    if (!r.pass && !r.detail.empty()) line += "  [" + r.detail + "]";
    line += "   -- " + r.provenance;
    std::cout << line << "\n";
  }
  std::cout << rows.size() - failed << "/" << rows.size() << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

int cmd_sweep() {
  coxaff::FieldRef K = coxaff::make_field(coxaff::edge_root_polynomial(5));
  auto rows = coxaff::sweep_path5(*K);
  std::cout << "degenerate five-vertex paths with labels in {3,4,5,6}:\n";
  for (const auto& r : rows) {
    std::cout << "  labels (" << r.labels[0] << "," << r.labels[1] << "," << r.labels[2] << ","
              << r.labels[3] << ")  alpha = (";
    for (std::size_t i = 0; i < r.alphas.size(); ++i)
      std::cout << (i ? ", " : "") << r.alphas[i].to_string();
    std::cout << ")\n";
  }
  std::cout << rows.size() << " solutions\n";
  return rows.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact reducible reflection representations of decorated Coxeter graphs"};
  app.require_subcommand(1);

  std::string path;
  bool as_json = false;
  int max_word_len = -1;
  unsigned seed = 0;
  std::vector<int> s0;
  CLI::App* analyze = app.add_subcommand("analyze", "analyze a graph file");
  analyze->add_option("file", path, "graph description file")->required();
  analyze->add_flag("--json", as_json, "emit the JSON report");
  analyze->add_option("--max-word-len", max_word_len,
                      "translation search depth (0 disables; default 12, or 10 for n > 4)");
  analyze->add_option("--seed", seed, "seed for the sampled self-checks");
  analyze->add_option("--s0", s0, "pin the S0 vertex set (1-based indices)")->delimiter(',');

  std::string fixtures_dir = "fixtures";
  CLI::App* catalog = app.add_subcommand("catalog", "run the fixture catalog");
  CLI::App* catalog_run = catalog->add_subcommand("run", "check all fixtures");
  catalog_run->add_option("--fixtures", fixtures_dir, "fixture directory");

  std::string family = "path5";
  CLI::App* sweep = app.add_subcommand("sweep", "search a family for degenerate parameters");
  sweep->add_option("--family", family, "family to sweep (path5)");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) return cmd_analyze(path, as_json, max_word_len, seed, s0);
  if (catalog->parsed()) {
    if (!catalog_run->parsed()) {
      std::cerr << "error: expected 'catalog run'\n";
      return 2;
    }
    return cmd_catalog(fixtures_dir);
  }
  if (sweep->parsed()) {
    if (family != "path5") {
      std::cerr << "error: unsupported family '" << family << "' (only path5)\n";
      return 2;
    }
    return cmd_sweep();
  }
  return 2;
}
