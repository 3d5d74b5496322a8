#include "steinermat/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "steinermat/dk.hpp"
#include "steinermat/error.hpp"
#include "steinermat/survey.hpp"
#include "steinermat/tree.hpp"
#include "steinermat/verify.hpp"

namespace steinermat::cli {

namespace {

/// Input-side failure: reported on stderr with exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::string gen_kind;
  int n = 0;
  std::string leaves;
  int k = 2;
  std::string tree_path;
  std::string output_path;
  std::string format = "csv";
  std::string order = "lex";
  std::string check;
  bool no_timing = false;
  int max_vertices = 0;
  int jobs = 1;
};

std::vector<int> parse_leaves(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed leaf list '" + text + "'");
    }
    if (used != item.size()) throw UsageError("malformed leaf list '" + text + "'");
    out.push_back(value);
  }
  if (!text.empty() && text.back() == ',') throw UsageError("malformed leaf list '" + text + "'");
  return out;
}

CaterpillarSpec spec_from(const CliConfig& cfg) {
  std::vector<int> leaves = cfg.leaves.empty() ? std::vector<int>(std::max(cfg.n - 1, 0), 0)
                                               : parse_leaves(cfg.leaves);
  return CaterpillarSpec(cfg.n, std::move(leaves));
}

Tree read_tree(const CliConfig& cfg, std::istream& in) {
  std::string text;
  if (cfg.tree_path.empty() || cfg.tree_path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(cfg.tree_path);
    if (!file) throw UsageError("cannot read tree file '" + cfg.tree_path + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  return parse_edge_list(text);
}

int cmd_gen(const CliConfig& cfg, std::ostream& out) {
  if (cfg.gen_kind == "path") {
    out << serialize_edge_list(make_path(cfg.n));
  } else {
    out << serialize_edge_list(make_caterpillar(CaterpillarSpec(cfg.n, parse_leaves(cfg.leaves))));
  }
  return kExitOk;
}

int cmd_dk(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  Tree t = read_tree(cfg, in);
  if (cfg.k < 1 || cfg.k > t.num_vertices()) {
    throw UsageError("--k " + std::to_string(cfg.k) + " outside 1.." + std::to_string(t.num_vertices()));
  }
  const ExportFormat format = cfg.format == "json" ? ExportFormat::kJson : ExportFormat::kCsv;
  if (cfg.order == "canonical") {
    if (cfg.k != 2) throw UsageError("--order canonical needs --k 2");
    if (auto spec = as_labeled_caterpillar(t)) {
      out << export_labeled(build_dk(t, 2, canonical_first_order(*spec)), format);
    } else {
      auto rec = caterpillar_spec_of(t);
      if (!rec) throw UsageError("--order canonical needs a caterpillar with spine length >= 2");
      // Labels refer to the canonical relabeling.
      Tree canon = relabel(t, rec->to_canonical);
      out << export_labeled(build_dk(canon, 2, canonical_first_order(rec->spec)), format);
    }
  } else {
    out << export_labeled(build_dk(t, cfg.k), format);
  }
  return kExitOk;
}

int cmd_rank(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  Tree t = read_tree(cfg, in);
  if (t.num_vertices() < 2) throw UsageError("rank needs at least two vertices");
  nlohmann::ordered_json j;
  j["N"] = t.num_vertices();
  j["p"] = pendant_count(t);
  j["rank"] = rank(build_dk(t, 2).matrix());
  j["is_caterpillar"] = is_caterpillar(t);
  j["formula_value"] = 2 * t.num_vertices() - pendant_count(t) - 1;
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_verify(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  // Source: --n/--leaves spec, otherwise a tree from --tree or stdin.
  std::optional<CaterpillarSpec> spec;
  std::optional<Tree> tree;
  int spine = cfg.n;
  if (!cfg.tree_path.empty() || cfg.n == 0) {
    tree = read_tree(cfg, in);
    if (auto labeled = as_labeled_caterpillar(*tree)) {
      spec = labeled;
      spine = labeled->n();
    } else if (auto rec = caterpillar_spec_of(*tree)) {
      spec = rec->spec;
      spine = rec->spec.n();
    }
  } else if (cfg.n >= 2 || !cfg.leaves.empty()) {
    spec = spec_from(cfg);
    tree = make_caterpillar(*spec);
  }

  auto need_spine = [&] {
    if (spine < 1) throw UsageError("check '" + cfg.check + "' needs --n N (N >= 1) or a caterpillar tree");
    return spine;
  };
  auto need_spec = [&]() -> const CaterpillarSpec& {
    if (!spec) throw UsageError("check '" + cfg.check + "' needs a caterpillar (--n N >= 2 [--leaves ...] or --tree)");
    return *spec;
  };
  auto need_tree = [&]() -> const Tree& {
    if (!tree) {
      if (cfg.n >= 1) tree = make_path(cfg.n);
      else throw UsageError("check '" + cfg.check + "' needs a tree");
    }
    return *tree;
  };

  std::vector<VerificationReport> reports;
  const std::string& c = cfg.check;
  if (c == "all") {
    reports = verify_all(need_spec());
    if (!cfg.tree_path.empty()) {
      // The tree-level checks run on the tree as given.
      reports[9] = verify_rank_formula(*tree);
      reports[10] = verify_graham_lovasz(*tree);
    }
  } else if (c == "path-rows") {
    reports.push_back(verify_path_rows(need_spine()));
  } else if (c == "ld") {
    reports.push_back(verify_ld_identity(need_spine()));
  } else if (c == "path-inverse") {
    reports.push_back(verify_path_inverse(need_spine()));
  } else if (c == "block") {
    reports.push_back(verify_block_form(need_spec()));
  } else if (c == "lm") {
    reports.push_back(verify_lm_rows(need_spec()));
  } else if (c == "mlm") {
    reports.push_back(verify_mlm_columns(need_spec()));
  } else if (c == "nmlm") {
    reports.push_back(verify_n_plus_mlm(need_spec()));
  } else if (c == "schur") {
    reports.push_back(verify_schur(need_spec()));
  } else if (c == "columns") {
    reports.push_back(verify_column_combos(need_spec()));
  } else if (c == "rank") {
    const Tree& t = need_tree();
    if (!is_caterpillar(t)) throw UsageError("check 'rank' needs a caterpillar");
    reports.push_back(verify_rank_formula(t));
  } else if (c == "graham-lovasz") {
    reports.push_back(verify_graham_lovasz(need_tree()));
  }

  bool all_pass = true;
  for (const auto& r : reports) {
    out << to_json(r, !cfg.no_timing).dump() << '\n';
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_survey(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  SurveyOptions options;
  options.max_vertices = cfg.max_vertices;
  options.jobs = cfg.jobs;
  options.cap = survey_cap_from_env();
  if (options.max_vertices < 2 || options.max_vertices > options.cap) {
    throw UsageError("--max must lie in 2.." + std::to_string(options.cap) +
                     " (set STEINERMAT_MAX_N to raise the cap; large values are slow)");
  }
  auto rows = survey_tree_ranks(options);
  out << survey_csv(rows);
  std::size_t bad = caterpillar_mismatches(rows);
  if (bad > 0) {
    err << bad << " caterpillar rows violate rank = 2N-p-1\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Exact k-Steiner distance matrices of trees", "steinermat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--output", cfg.output_path, "Write results to FILE instead of stdout");

  auto* gen = app.add_subcommand("gen", "Print a generated tree as an edge list");
  gen->require_subcommand(1);
  gen->fallthrough();
  auto* gen_path = gen->add_subcommand("path", "Path on vertices 0..n");
  gen_path->add_option("--n", cfg.n, "Spine length")->required();
  auto* gen_cat = gen->add_subcommand("caterpillar", "Caterpillar in canonical labeling");
  gen_cat->add_option("--n", cfg.n, "Spine length")->required();
  gen_cat->add_option("--leaves", cfg.leaves, "Leaf counts i_1,...,i_{n-1}")->required();

  auto* dk = app.add_subcommand("dk", "Print D_k of a tree as labeled CSV or JSON");
  dk->add_option("--k", cfg.k, "Subset size")->required();
  dk->add_option("--tree", cfg.tree_path, "Edge-list file (default: stdin)");
  dk->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
  dk->add_option("--order", cfg.order, "lex, or canonical X first (caterpillars, k=2)")
      ->check(CLI::IsMember({"lex", "canonical"}));

  auto* rank_cmd = app.add_subcommand("rank", "Exact rank of D_2 of a tree");
  rank_cmd->add_option("--tree", cfg.tree_path, "Edge-list file (default: stdin)");

  auto* verify = app.add_subcommand("verify", "Run identity checks, one JSON report per line");
  verify->add_option("--check", cfg.check)
      ->required()
      ->check(CLI::IsMember({"path-rows", "ld", "path-inverse", "block", "lm", "mlm", "nmlm", "schur",
                             "columns", "rank", "graham-lovasz", "all"}));
  verify->add_option("--n", cfg.n, "Spine length");
  verify->add_option("--leaves", cfg.leaves, "Leaf counts i_1,...,i_{n-1}");
  verify->add_option("--tree", cfg.tree_path, "Edge-list file instead of --n/--leaves");
  verify->add_flag("--no-timing", cfg.no_timing, "Omit elapsed_ms for byte-stable output");

  auto* survey = app.add_subcommand("survey", "Rank of D_2 for every labeled tree up to --max vertices");
  survey->add_option("--max", cfg.max_vertices, "Largest vertex count")->required();
  survey->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  int status = kExitOk;
  try {
    if (gen->parsed()) {
      cfg.gen_kind = gen_path->parsed() ? "path" : "caterpillar";
      status = cmd_gen(cfg, buffer);
    } else if (dk->parsed()) {
      status = cmd_dk(cfg, in, buffer);
    } else if (rank_cmd->parsed()) {
      status = cmd_rank(cfg, in, buffer);
    } else if (verify->parsed()) {
      status = cmd_verify(cfg, in, buffer);
    } else if (survey->parsed()) {
      status = cmd_survey(cfg, buffer, err);
    }
  } catch (const std::exception& e) {
    err << "steinermat: " << e.what() << '\n';
    return kExitUsage;
  }

  if (cfg.output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.output_path);
    if (!file) {
      err << "steinermat: cannot write '" << cfg.output_path << "'\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace steinermat::cli
