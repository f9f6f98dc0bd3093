#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "wmetric/cauchy.hpp"
#include "wmetric/completion.hpp"
#include "wmetric/dynsys.hpp"
#include "wmetric/error.hpp"
#include "wmetric/io.hpp"
#include "wmetric/treespace.hpp"

namespace wmetric::cli {

namespace {

namespace fs = std::filesystem;

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string data = buf.str();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return hex.str();
}

struct Options {
  std::string monoid_file;
  std::string space_file;
  std::string map_file;
  std::string dense;
  std::string kind = "binary";
  std::string height;
  std::uint64_t alpha_factor = 4;
  std::uint64_t depth = 8;
  std::uint64_t width = 64;
  std::uint64_t sample = 100;
  std::uint64_t seed = 1;
  bool timing = false;
};

class Report {
 public:
  explicit Report(const std::vector<std::string>& args) {
    out_ << "command: wmetric";
    for (const auto& a : args) out_ << ' ' << a;
    out_ << "\n";
  }
  void input(const fs::path& p) { inputs_.push_back(p); }
  void line(const std::string& key, const std::string& value) { body_ << key << ": " << value << "\n"; }
  void item(const std::string& text) { body_ << "  " << text << "\n"; }
  std::string finish(std::optional<std::chrono::milliseconds> elapsed) {
    if (!inputs_.empty()) {
      out_ << "inputs:\n";
      for (const auto& p : inputs_) out_ << "  " << p.string() << " sha256:" << sha256_file(p) << "\n";
    }
    out_ << body_.str();
    out_ << "timing: " << (elapsed ? std::to_string(elapsed->count()) + " ms" : std::string("omitted")) << "\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
  std::ostringstream body_;
  std::vector<fs::path> inputs_;
};

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

std::string budgets(const Options& o) {
  return "alpha-factor " + std::to_string(o.alpha_factor) + ", depth " + std::to_string(o.depth) + ", width " +
         std::to_string(o.width);
}

void add_space_inputs(Report& r, const fs::path& space_file, const SpaceFile& s) {
  r.input(space_file);
  r.input((space_file.parent_path() / s.monoid_ref).lexically_normal());
}

InitialSequence any_sequence(const MonoidPtr& m) {
  if (m->continuous_at_zero() && !m->is_zero(m->top())) return nice_initial_sequence(m, 4, Ordinal::omega());
  // Exact density on finite spaces never reads the sequence.
  return InitialSequence(m, Ordinal::omega(), 4, [m](const Ordinal&) { return m->top(); });
}

int check_monoid(const Options& o, Report& r) {
  const MonoidPtr m = load_monoid(o.monoid_file);
  r.input(o.monoid_file);
  r.line("monoid", m->describe());
  LawReport laws;
  if (m->kind() == MonoidKind::FiniteTable) {
    r.line("check", "exhaustive");
    laws = check_monoid_axioms(*m);
  } else {
    r.line("check", "sampled, " + std::to_string(o.sample) + " triples, seed " + std::to_string(o.seed));
    laws = check_monoid_axioms_sampled(*m, o.sample, o.seed);
  }
  r.line("continuous at 0", m->continuous_at_zero() ? "yes" : "no");
  if (laws) r.line("coinitiality", coinitiality(*m).to_string());
  if (laws && m->continuous_at_zero() && m->coinit().kind != CoinitDescriptor::Kind::Finite) {
    const auto alpha = nice_initial_sequence(m, o.alpha_factor, Ordinal::omega());
    std::vector<std::string> xs;
    for (std::uint64_t k = 0; k < 5; ++k) xs.push_back(m->format(alpha(k)));
    r.line("nice sequence (factor " + std::to_string(o.alpha_factor) + ")", join(xs) + ", ...");
  }
  if (laws) {
    r.line("outcome", "all laws pass");
    return Success;
  }
  r.line("outcome", "law violated: " + laws.law);
  r.line("witness", "(" + join(laws.witness) + ")");
  r.line("detail", laws.detail);
  return Negative;
}

int check_space(const Options& o, Report& r) {
  const SpaceFile s = load_space(o.space_file);
  add_space_inputs(r, o.space_file, s);
  r.line("space", s.space->describe());
  const LawReport laws = check_space_axioms(*s.space);
  int code = Success;
  if (laws) {
    r.line("outcome", "space axioms pass");
  } else {
    r.line("outcome", "law violated: " + laws.law);
    r.line("witness", "(" + join(laws.witness) + ")");
    r.line("detail", laws.detail);
    code = Negative;
  }
  if (!o.dense.empty()) {
    std::vector<std::string> names;
    std::stringstream ss(o.dense);
    for (std::string item; std::getline(ss, item, ',');) {
      if (!s.space->contains(Point{item})) throw Error(ErrorCode::InvalidArgument, "'" + item + "' is not a point of the space");
      names.push_back(item);
    }
    const auto in_d = [names](const Point& p) { return std::find(names.begin(), names.end(), p.id) != names.end(); };
    const DenseResult d = check_dense(in_d, s.space, any_sequence(s.monoid), o.depth);
    if (d.verdict == Verdict::Yes) {
      r.line("dense", "yes");
    } else {
      r.line("dense", "no, " + d.witness->id + " is not approximated");
      code = Negative;
    }
  }
  return code;
}

int check_map(const Options& o, Report& r) {
  const SpaceFile s = load_space(o.space_file);
  const MapFile mf = load_map(o.map_file);
  const auto f = resolve_map(mf, *s.space);
  add_space_inputs(r, o.space_file, s);
  r.input(o.map_file);
  const Monoid& m = *s.monoid;
  const auto& d = s.space->matrix();
  const auto& names = s.space->names();
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (std::size_t y = 0; y < f.size(); ++y) {
      if (!m.leq(d[f[x]][f[y]], d[x][y])) {
        r.line("outcome", "map is not non-expanding");
        r.line("witness", "(" + names[x] + ", " + names[y] + ")");
        r.line("detail", "d(f(" + names[x] + "), f(" + names[y] + ")) = " + m.format(d[f[x]][f[y]]) + " > d(" +
                             names[x] + ", " + names[y] + ") = " + m.format(d[x][y]));
        return Negative;
      }
    }
  }
  std::vector<std::string> fixed;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] == x) fixed.push_back(names[x]);
  }
  r.line("outcome", "map is non-expanding");
  r.line("fixed points", fixed.empty() ? "none" : join(fixed));
  return Success;
}

int complete(const Options& o, Report& r) {
  const SpaceFile s = load_space(o.space_file);
  add_space_inputs(r, o.space_file, s);
  const SpacePtr c = cauchy_completion(s.space);
  r.line("space", s.space->describe());
  if (!s.monoid->continuous_at_zero()) {
    r.line("outcome", "complete: the monoid is not continuous at 0, so every Cauchy sequence is eventually constant");
  } else {
    r.line("outcome", "complete: realized distances form a finite set, so every Cauchy sequence is eventually constant");
  }
  r.line("completion", c == SpacePtr(s.space) ? "the space itself" : c->describe());
  r.line("points", join(s.space->names()));
  return Success;
}

int outcome_code(SearchOutcome::Kind k) {
  switch (k) {
    case SearchOutcome::Kind::FixedPointFound: return Success;
    case SearchOutcome::Kind::CertifiedNoFixedPoint: return Negative;
    case SearchOutcome::Kind::BudgetExhausted: return Inconclusive;
  }
  return Inconclusive;
}

void report_search(Report& r, const SearchOutcome& out, const Monoid& m) {
  std::string line = to_string(out.kind) + " at depth " + std::to_string(out.depth);
  r.line("outcome", line);
  if (out.witness) {
    r.line("witness", out.witness->id + " (residual " + m.format(*out.residual) + ")");
  } else if (out.kind == SearchOutcome::Kind::CertifiedNoFixedPoint) {
    r.line("certificate", out.reason);
  } else {
    r.line("reason", out.reason);
  }
  std::vector<std::string> ids;
  for (const auto& p : out.best_node) ids.push_back(p.id);
  r.line("deepest node", ids.empty() ? "none" : "<" + join(ids) + ">");
}

int fixpoint(const Options& o, Report& r) {
  const SpaceFile s = load_space(o.space_file);
  const MapFile mf = load_map(o.map_file);
  const auto f = resolve_map(mf, *s.space);
  add_space_inputs(r, o.space_file, s);
  r.input(o.map_file);
  r.line("budgets", budgets(o));
  const auto alpha = nice_initial_sequence(s.monoid, o.alpha_factor, Ordinal::omega());
  auto sys = DynSystem::finite(s.space, f, alpha);
  if (const LawReport ne = check_nonexpanding(sys, dense_pairs(sys, s.space->size())); !ne) {
    throw Error(ErrorCode::NotNonExpanding, "map is not non-expanding at (" + join(ne.witness) + ")", ne.witness);
  }
  std::vector<std::string> xs;
  for (std::uint64_t k = 0; k <= std::min<std::uint64_t>(o.depth, 4); ++k) xs.push_back(s.monoid->format(alpha(k)));
  r.line("alpha", join(xs) + ", ...");
  const SearchOutcome out = decide_fixed_point(sys, o.depth, o.width);
  report_search(r, out, *s.monoid);
  return outcome_code(out.kind);
}

int tree_binary(const Options& o, Report& r) {
  const Ordinal height = o.height.empty() ? Ordinal::omega() : Ordinal::parse(o.height);
  if (height != Ordinal::omega()) throw Error(ErrorCode::HeightMismatch, "binary trees have height w");
  auto tree = std::make_shared<BinaryTree>();
  const auto m = Monoid::extended_rational();
  const auto alpha = InitialSequence::geometric(m, o.alpha_factor);
  r.line("tree", "binary, height w");
  r.line("alpha", "alpha(n) = " + std::to_string(o.alpha_factor) + "^-n");
  r.line("budgets", budgets(o));

  std::mt19937_64 rng(o.seed);
  std::vector<std::pair<TreeNode, Ordinal>> samples;
  for (std::uint64_t i = 0; i < o.sample; ++i) {
    const TreeNode n = *tree->enumerate(rng() % 1024);
    samples.emplace_back(n, tree->level(n) + Ordinal::finite(1 + rng() % 8));
  }
  const PrunedResult pr = pruned_check(*tree, samples);
  r.line("pruning", pr.passed ? "pass on " + std::to_string(samples.size()) + " sampled (node, level) pairs"
                              : "fail at " + tree->format(*pr.node) + " to level " + pr.level.to_string());

  auto path = find_path_cf_omega(tree, [](std::uint64_t n) { return Ordinal::finite(n); });
  r.line("path prefix", tree->format(path->at(Ordinal::finite(o.depth))) + " (cofinal levels 0, 1, 2, ...)");

  auto sys = tree_system(tree, alpha, alpha);
  const SearchOutcome out = decide_fixed_point(sys, o.depth, o.width);
  report_search(r, out, *m);
  return outcome_code(out.kind);
}

int tree_s_kappa(const Options& o, Report& r) {
  const Ordinal height = o.height.empty() ? Ordinal::omega_1() : Ordinal::parse(o.height);
  const bool uncountable = height.is_symbolic();
  if (!uncountable && !height.is_limit()) throw Error(ErrorCode::InvalidArgument, "S_kappa needs a limit height");
  auto tree = build_s_kappa(height);
  const auto m = Monoid::reversed_ordinal(height);
  const auto tree_alpha = uncountable ? nice_initial_sequence(m, o.alpha_factor, height) : InitialSequence::ordinal_levels(m);
  r.line("tree", "s-kappa, height " + height.to_string());
  r.line("alpha", "alpha(b) = d(b+1) in " + m->describe());
  r.line("budgets", budgets(o));

  std::mt19937_64 rng(o.seed);
  std::vector<std::pair<TreeNode, Ordinal>> samples;
  while (samples.size() < o.sample) {
    const TreeNode n = *tree->enumerate(rng() % 300);
    const auto& step = ordinals_of_weight(1 + rng() % 6);
    const Ordinal target = tree->level(n) + step[rng() % step.size()];
    if (target < height) samples.emplace_back(n, target);
  }
  for (auto style : {ExtensionStyle::Tight, ExtensionStyle::Slack}) {
    const PrunedResult pr = pruned_check(*tree, samples, style);
    const std::string name = style == ExtensionStyle::Tight ? "pruning (tight)" : "pruning (slack)";
    r.line(name, pr.passed ? "pass on " + std::to_string(samples.size()) + " sampled (node, level) pairs"
                           : "fail at " + tree->format(*pr.node) + " to level " + pr.level.to_string());
  }

  auto gamma = [height](std::uint64_t n) {
    return height.is_symbolic() ? Ordinal::omega_power(static_cast<std::uint32_t>(n + 1)) : height.cofinal_entry(n);
  };
  try {
    auto path = find_path_cf_omega(tree, gamma);
    r.line("path prefix", tree->format(path->at(gamma(o.depth))) + " (cofinal levels " + gamma(0).to_string() + ", " +
                              gamma(1).to_string() + ", ...)");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotCofinal) throw;
    r.line("path", std::string("refused, ") + e.what());
  }

  if (uncountable) {
    std::vector<TreeNode> prefix{tree->root()};
    for (std::uint64_t k = 0; k < o.depth; ++k) prefix.push_back(*tree->extend_to(prefix.back(), gamma(k)));
    std::vector<std::string> q;
    for (const auto& x : extract_cofinal(*tree, prefix)) q.push_back(x.to_string());
    r.line("ledger", join(q) + " (along " + tree->format(prefix.back()) + ")");
    r.line("obstruction",
           "every node carries a finite ledger; a path through all levels would union them into a countable "
           "sequence cofinal in omega-1, which has uncountable cofinality");
  }

  const auto system_alpha = nice_initial_sequence(m, 4, Ordinal::omega());
  auto sys = tree_system(tree, tree_alpha, system_alpha);
  const SearchOutcome out = uncountable ? explore_fixed_point(sys, o.depth, o.width) : decide_fixed_point(sys, o.depth, o.width);
  report_search(r, out, *m);
  return outcome_code(out.kind);
}

void print_error(std::ostream& err, const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) {
    err << "error: " << e.what() << "\n";
    return;
  }
  err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
  if (!e.witness().empty()) err << "  witness: (" << join(e.witness()) << ")\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Generalized metric spaces over distance monoids", "wmetric"};
  app.require_subcommand(1);
  auto budget_flags = [&o](CLI::App* c) {
    c->add_option("--alpha-factor", o.alpha_factor, "niceness factor of the initial sequence")->capture_default_str();
    c->add_option("--depth", o.depth, "depth budget")->capture_default_str();
    c->add_option("--width", o.width, "width budget (dense points considered)")->capture_default_str();
  };
  auto common_flags = [&o](CLI::App* c) {
    c->add_option("--sample", o.sample, "sampled-check size")->capture_default_str();
    c->add_option("--seed", o.seed, "sampling seed")->capture_default_str();
    c->add_flag("--timing", o.timing, "print wall-clock time instead of 'omitted'");
  };

  auto* cm = app.add_subcommand("check-monoid", "check the distance-monoid laws of a monoid file");
  cm->add_option("file", o.monoid_file)->required();
  cm->add_option("--alpha-factor", o.alpha_factor)->capture_default_str();
  common_flags(cm);
  o.sample = 100;

  auto* cs = app.add_subcommand("check-space", "check the W-metric axioms of a space file");
  cs->add_option("file", o.space_file)->required();
  cs->add_option("--dense", o.dense, "comma-separated subset to test for density");
  cs->add_option("--depth", o.depth)->capture_default_str();
  common_flags(cs);

  auto* cmap = app.add_subcommand("check-map", "check that a map is non-expanding");
  cmap->add_option("--space", o.space_file)->required();
  cmap->add_option("--map", o.map_file)->required();
  common_flags(cmap);

  auto* cc = app.add_subcommand("complete", "Cauchy completion of a space file");
  cc->add_option("--space", o.space_file)->required();
  common_flags(cc);

  auto* fp = app.add_subcommand("fixpoint", "decide whether a non-expanding map has a fixed point");
  fp->add_option("--space", o.space_file)->required();
  fp->add_option("--map", o.map_file)->required();
  budget_flags(fp);
  common_flags(fp);

  auto* tree = app.add_subcommand("tree", "kappa-tree constructions");
  tree->require_subcommand(1);
  auto* demo = tree->add_subcommand("demo", "pruning, paths and fixed points on a kappa-tree space");
  demo->add_option("--kind", o.kind)->check(CLI::IsMember({"binary", "s-kappa"}))->capture_default_str();
  demo->add_option("--height", o.height, "CNF notation or omega-1");
  budget_flags(demo);
  common_flags(demo);

  std::vector<std::string> storage{"wmetric"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Success : InputError;
  }

  Report report(args);
  const auto start = std::chrono::steady_clock::now();
  int code = InputError;
  try {
    if (*cm) code = check_monoid(o, report);
    else if (*cs) code = check_space(o, report);
    else if (*cmap) code = check_map(o, report);
    else if (*cc) code = complete(o, report);
    else if (*fp) code = fixpoint(o, report);
    else if (o.kind == "binary") code = tree_binary(o, report);
    else code = tree_s_kappa(o, report);
  } catch (const Error& e) {
    print_error(err, e);
    return InputError;
  }
  std::optional<std::chrono::milliseconds> elapsed;
  if (o.timing) {
    elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  }
  out << report.finish(elapsed);
  return code;
}

}  // namespace wmetric::cli
