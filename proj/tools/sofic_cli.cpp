// Command-line front end: analyze, compare, transform and corpus over
// `.shift` (edge list) and `.sgp` (semigroup table) files, with
// deterministic JSON/DOT outputs.
//
// Exit codes: 0 ok / karoubi-equivalent, 1 distinguished, 2 parse or
// validation error, 3 search budget exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "sofic/config.hpp"
#include "sofic/corpus.hpp"
#include "sofic/dot.hpp"
#include "sofic/errors.hpp"
#include "sofic/invariants.hpp"

namespace fs = std::filesystem;
using namespace sofic;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDistinguished = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << content;
}

bool is_semigroup_input(const std::string& path, const Config& cfg) {
  return cfg.raw_semigroup || fs::path(path).extension() == ".sgp";
}

std::string stem_of(const std::string& path) {
  return fs::path(path).stem().string();
}

void write_dots(const Analysis& a, const Config& cfg) {
  if (cfg.dot_dir.empty()) return;
  fs::create_directories(cfg.dot_dir);
  auto put = [&](const std::string& suffix, const std::string& content) {
    spit((fs::path(cfg.dot_dir) / (a.shift.name + "_" + suffix + ".dot"))
             .string(),
         content);
  };
  put("presentation", dot_presentation(a.shift.presentation, a.shift.name));
  put("krieger", dot_presentation(a.krieger.graph, a.shift.name + " krieger"));
  if (a.fischer) {
    put("fischer",
        dot_presentation(a.fischer->graph, a.shift.name + " fischer"));
  }
  put("karoubi", dot_category(a.karoubi, a.shift.name + " karoubi"));
  put("p_poset", dot_poset(a.p_poset, a.shift.name + " P"));
  put("kd", dot_labeled_preorder(a.kd, a.shift.name + " KD"));
  if (a.fd) put("fd", dot_labeled_preorder(*a.fd, a.shift.name + " FD"));
  put("subs", dot_poset(a.subs, a.shift.name + " Subs"));
}

int cmd_analyze(const std::string& path, const Config& cfg) {
  if (is_semigroup_input(path, cfg)) {
    SemigroupAnalysis a = analyze_semigroup(load_semigroup(slurp(path)));
    std::cout << (cfg.format == "text"
                      ? report_text(a, stem_of(path))
                      : report_json(a, stem_of(path)) + "\n");
    if (!cfg.dot_dir.empty()) {
      fs::create_directories(cfg.dot_dir);
      spit((fs::path(cfg.dot_dir) / (stem_of(path) + "_karoubi.dot")).string(),
           dot_category(a.karoubi, stem_of(path)));
    }
    return kExitOk;
  }
  Analysis a =
      analyze_shift(make_shift(stem_of(path), load_presentation(slurp(path))));
  std::cout << (cfg.format == "text" ? report_text(a)
                                     : report_json(a) + "\n");
  write_dots(a, cfg);
  if (cfg.oracle_bound > 0) {
    // Cross-check the semigroup against the brute-force context oracle on
    // all letter pairs, at the requested bound.
    const Presentation& p = a.shift.presentation;
    int checked = 0;
    for (int x = 0; x < p.num_letters(); ++x) {
      for (int y = x + 1; y < p.num_letters(); ++y) {
        ContextVerdict v = context_oracle(p, {x}, {y}, cfg.oracle_bound);
        bool same =
            a.sgp->letter_elem[x] == a.sgp->letter_elem[y];
        if (v.equal != same) {
          std::cerr << "context oracle disagrees on letters "
                    << p.alphabet[x] << ", " << p.alphabet[y] << "\n";
          return kExitUsage;
        }
        ++checked;
      }
    }
    std::cerr << "context oracle: " << checked << " letter pairs verified\n";
  }
  return kExitOk;
}

int run_compare(const Analysis& a, const Analysis& b, const Config& cfg,
                std::string* out) {
  SearchBudget budget{cfg.budget, 0};
  ComparisonVerdict v = compare_shifts(a, b, budget, cfg.exhaustive);
  *out = cfg.format == "text"
             ? verdict_text(v, a.shift.name, b.shift.name)
             : verdict_json(v, a.shift.name, b.shift.name) + "\n";
  if (v.budget_exceeded) return kExitBudget;
  return v.distinguished ? kExitDistinguished : kExitOk;
}

int cmd_compare(const std::string& pa, const std::string& pb,
                const Config& cfg) {
  Analysis a =
      analyze_shift(make_shift(stem_of(pa), load_presentation(slurp(pa))));
  Analysis b =
      analyze_shift(make_shift(stem_of(pb), load_presentation(slurp(pb))));
  std::string out;
  int rc = run_compare(a, b, cfg, &out);
  std::cout << out;
  return rc;
}

int cmd_compare_batch(const std::string& manifest, const Config& cfg) {
  std::istringstream in(slurp(manifest));
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string la, lb;
  while (in >> la >> lb) pairs.emplace_back(la, lb);

  std::vector<std::string> outputs(pairs.size());
  std::vector<int> codes(pairs.size(), kExitOk);
  std::mutex next_mutex;
  std::size_t next = 0;
  // Workers share only immutable inputs; each pair is analyzed on its
  // worker.
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(next_mutex);
        if (next >= pairs.size()) return;
        i = next++;
      }
      try {
        Analysis a = analyze_shift(make_shift(
            stem_of(pairs[i].first), load_presentation(slurp(pairs[i].first))));
        Analysis b = analyze_shift(make_shift(
            stem_of(pairs[i].second),
            load_presentation(slurp(pairs[i].second))));
        codes[i] = run_compare(a, b, cfg, &outputs[i]);
      } catch (const Error& e) {
        codes[i] =
            e.kind() == ErrorKind::BudgetExceeded ? kExitBudget : kExitUsage;
        outputs[i] = std::string("error: ") + e.what() + "\n";
      }
    }
  };
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < std::min<std::size_t>(n, pairs.size()); ++t) {
    threads.emplace_back(worker);
  }
  for (auto& t : threads) t.join();

  int rc = kExitOk;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::cout << outputs[i];
    if (codes[i] == kExitBudget) rc = kExitBudget;
    if (rc != kExitBudget && codes[i] != kExitOk) {
      rc = std::max(rc, codes[i]);
    }
  }
  return rc;
}

int cmd_transform(const std::string& path, const std::vector<std::string>& op,
                  const std::string& out_path, const Config& cfg) {
  (void)cfg;
  Presentation p = load_presentation(slurp(path));
  Presentation result;
  if (op.empty()) throw Error(ErrorKind::ParseError, "missing operation");
  const std::string& kind = op[0];
  if (kind == "expand") {
    if (op.size() < 2 || op.size() > 3) {
      throw Error(ErrorKind::ParseError, "usage: expand <letter> [fresh]");
    }
    std::string fresh =
        op.size() == 3 ? op[2] : CorpusGenerator::fresh_letter(p);
    result = symbol_expansion(p, op[1], fresh);
  } else if (kind == "block" || kind == "power") {
    if (op.size() != 2) {
      throw Error(ErrorKind::ParseError, "usage: " + kind + " <n>");
    }
    int n = std::stoi(op[1]);
    if (n < 1) throw Error(ErrorKind::ParseError, "n must be >= 1");
    result = kind == "block" ? higher_block(p, n) : higher_power(p, n);
  } else if (kind == "induce") {
    TransitionSemigroup ts = transition_semigroup(minimal_automaton(p));
    result = induced_shift(ts.sgp);
  } else {
    throw Error(ErrorKind::ParseError, "unknown operation " + kind);
  }
  std::string text = serialize_presentation(result);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    spit(out_path, text);
  }
  return kExitOk;
}

int cmd_corpus(const std::string& dir, int count, const Config& cfg) {
  CorpusGenerator gen(cfg.seed);
  fs::create_directories(dir);
  for (int i = 0; i < count; ++i) {
    Presentation p = gen.next();
    spit((fs::path(dir) / ("corpus" + std::to_string(i) + ".shift")).string(),
         serialize_presentation(p));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flow-equivalence invariants of sofic shifts"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--budget", cfg.budget, "search node budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--dot", cfg.dot_dir, "directory for DOT exports");
  app.add_flag("--raw-semigroup", cfg.raw_semigroup,
               "treat the input as a semigroup table");
  app.add_flag("--exhaustive", cfg.exhaustive,
               "complete the full comparison table, no short-circuit");
  app.add_option("--seed", cfg.seed, "corpus generation seed");
  app.add_option("--oracle-bound", cfg.oracle_bound,
                 "context oracle length bound override");

  std::string path_a, path_b, out_path, batch_manifest, corpus_dir;
  std::vector<std::string> transform_op;
  int corpus_count = 10;

  auto* analyze = app.add_subcommand("analyze", "full invariant report");
  analyze->fallthrough();
  analyze->add_option("input", path_a, "input file")->required();

  auto* compare =
      app.add_subcommand("compare", "invariant comparison of two shifts");
  compare->fallthrough();
  compare->add_option("left", path_a, "left input");
  compare->add_option("right", path_b, "right input");
  compare->add_option("--batch", batch_manifest,
                      "manifest file with one `left right` pair per line");

  auto* transform = app.add_subcommand(
      "transform", "expand <letter> [fresh] | block <n> | power <n> | induce");
  transform->fallthrough();
  transform->add_option("input", path_a, "input file")->required();
  transform->add_option("op", transform_op, "operation and arguments")
      ->required()
      ->expected(-1);
  transform->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* corpus = app.add_subcommand(
      "corpus", "write pseudo-random presentations for a fixed seed");
  corpus->fallthrough();
  corpus->add_option("dir", corpus_dir, "output directory")->required();
  corpus->add_option("--count", corpus_count, "number of instances");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(path_a, cfg);
    if (compare->parsed()) {
      if (!batch_manifest.empty()) return cmd_compare_batch(batch_manifest, cfg);
      if (path_a.empty() || path_b.empty()) {
        std::cerr << "compare needs two inputs or --batch\n";
        return kExitUsage;
      }
      return cmd_compare(path_a, path_b, cfg);
    }
    if (transform->parsed()) {
      return cmd_transform(path_a, transform_op, out_path, cfg);
    }
    if (corpus->parsed()) return cmd_corpus(corpus_dir, corpus_count, cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::BudgetExceeded ? kExitBudget : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
