#include "statechrome/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

using namespace statechrome;

namespace {

struct Input {
  std::string pd;
  std::string corpus;
  std::string name = "input";
};

std::vector<CorpusEntry> load(const Input& in) {
  if (!in.pd.empty() && !in.corpus.empty()) throw std::invalid_argument("give either --pd or a corpus file, not both");
  if (!in.pd.empty()) return {CorpusEntry{in.name, in.pd, std::nullopt, false}};
  if (in.corpus.empty()) throw std::invalid_argument("no input: give --pd or a corpus file");
  if (in.corpus == "-") return read_corpus(std::cin);
  return read_corpus_file(in.corpus);
}

void emit(const cli::Report& r, const std::string& format) {
  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& rec : r.records) out.push_back(rec);
    std::cout << out.dump(2) << "\n";
    return;
  }
  for (const auto& rec : r.records) {
    std::cout << "== " << rec.value("name", std::string("?")) << "\n";
    if (rec.contains("error")) {
      std::cout << "error: " << rec["error"].get<std::string>() << "\n";
      continue;
    }
    if (rec.contains("text") && rec["text"].is_string()) {
      std::cout << rec["text"].get<std::string>();
      continue;
    }
    for (const auto& [k, v] : rec.items())
      if (k != "name") std::cout << k << ": " << v.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"statechrome: state graphs, chromatic homology and extremal Khovanov groups of link diagrams"};
  app.require_subcommand(1);

  cli::Settings settings;
  std::string format = "json";
  std::string cache_dir;
  app.add_flag("--mirror", settings.mirror, "mirror every diagram");
  app.add_option("--max-crossings", settings.max_crossings, "crossing budget for the Khovanov oracle")->capture_default_str();
  app.add_option("--cache-dir", cache_dir, "chromatic polynomial cache directory (default $STATECHROME_CACHE)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_option("--workers", settings.workers, "worker threads")->capture_default_str();

  Input in;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--pd", in.pd, "single diagram: PD code, pretzel(a,b,..) or braid(i,j,..)");
    sub->add_option("--name", in.name, "name for --pd input");
    sub->add_option("corpus", in.corpus, "corpus TSV (name, pd, signature, mirror); '-' reads stdin");
  };
  auto* invariants = app.add_subcommand("invariants", "crossing data, state graph census, chromatic polynomial");
  auto* predict = app.add_subcommand("predict", "extremal Khovanov groups and Jones coefficients from G+ and G-");
  auto* verify = app.add_subcommand("verify", "compare predictions and the chromatic correspondence with the oracle");
  auto* girth_cmd = app.add_subcommand("girth", "girth bounds per name group");
  auto* kh = app.add_subcommand("kh", "Khovanov homology by the cube of resolutions");
  auto* jones = app.add_subcommand("jones", "state-sum Jones polynomial");
  for (auto* s : {invariants, predict, verify, girth_cmd, kh, jones}) add_input(s);

  std::string graph_file;
  auto* graph = app.add_subcommand("graph", "graph census, chromatic polynomial and chromatic homology");
  graph->add_option("file", graph_file, "edge list: 'v m' then m vertex pairs; '-' reads stdin")->required();

  CLI11_PARSE(app, argc, argv);

  if (cache_dir.empty())
    if (const char* env = std::getenv("STATECHROME_CACHE")) cache_dir = env;
  std::unique_ptr<ChromaticCache> cache;
  if (!cache_dir.empty()) {
    cache = std::make_unique<ChromaticCache>(cache_dir);
    settings.cache = cache.get();
  }

  try {
    if (graph->parsed()) {
      std::stringstream text;
      if (graph_file == "-") {
        text << std::cin.rdbuf();
      } else {
        std::ifstream f(graph_file);
        if (!f) throw std::runtime_error("cannot open " + graph_file);
        text << f.rdbuf();
      }
      cli::Report r;
      r.records.push_back(cli::graph_report(Multigraph::from_edge_list(text.str()), settings));
      r.records.back()["name"] = graph_file;
      emit(r, format);
      return 0;
    }
    const auto entries = load(in);
    cli::Report r;
    if (invariants->parsed()) r = cli::cmd_invariants(entries, settings);
    if (predict->parsed()) r = cli::cmd_predict(entries, settings);
    if (verify->parsed()) r = cli::cmd_verify(entries, settings);
    if (girth_cmd->parsed()) r = cli::cmd_girth(entries, settings);
    if (kh->parsed()) r = cli::cmd_kh(entries, settings);
    if (jones->parsed()) r = cli::cmd_jones(entries, settings);
    emit(r, format);
    return r.failed ? 1 : 0;
  } catch (const std::exception& ex) {
    std::cerr << "statechrome: " << ex.what() << "\n";
    return 1;
  }
}
