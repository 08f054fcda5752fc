#include "CLI11.hpp"
#include "symideal/harness.hpp"
#include "symideal/ideal.hpp"
#include "symideal/rsk.hpp"
#include "symideal/young_module.hpp"

#include <fstream>
#include <iostream>

using namespace symideal;

namespace {

struct Output {
  bool json = false;
  bool timing = true;

  void emit(const Json& j, const std::string& text) const {
    if (json)
      std::cout << j.dump(2) << '\n';
    else
      std::cout << text;
  }
};

std::string tableau_text(const Tableau& t) {
  std::string out;
  for (const auto& row : t) {
    out += "  ";
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? " " : "") + std::to_string(row[i]);
    out += '\n';
  }
  return out;
}

Json tableau_json(const Tableau& t) {
  Json j = Json::array();
  for (const auto& row : t) j.push_back(row);
  return j;
}

std::string set_or_empty(const PartitionSet& s) { return s.empty() ? "{}" : s.pretty(); }

int cmd_shape(const Output& out, const std::string& text) {
  const Word w = Word::parse(text);
  const Partition sh = shape(w);
  out.emit({{"word", w.to_string()}, {"shape", sh.to_string()}}, sh.pretty() + "\n");
  return 0;
}

int cmd_greene(const Output& out, const std::string& text) {
  const Word w = Word::parse(text);
  const PartitionSet a = ascent_set(w);
  const Partition l = lub(a);
  const Partition sh = shape(w);
  const bool agree = l == sh;
  Json j{{"word", w.to_string()},
         {"ascent_set", a.to_string()},
         {"lub", l.to_string()},
         {"rsk_shape", sh.to_string()},
         {"shape_in_ascent_set", a.contains(sh)},
         {"agreement", agree}};
  std::string t = "word        " + w.to_string() + "\n" +
                  "A(s)        " + set_or_empty(a) + "\n" +
                  "lub A(s)    " + l.pretty() + "\n" +
                  "RSK shape   " + sh.pretty() + (a.contains(sh) ? "" : "  (not in A(s))") + "\n" +
                  "agreement   " + (agree ? "true" : "false") + "\n";
  out.emit(j, t);
  return agree ? 0 : 1;
}

int cmd_rsk(const Output& out, const std::string& text) {
  const Word w = Word::parse(text);
  const StandardTableauPair pq = rsk(w);
  Json j{{"word", w.to_string()},
         {"P", tableau_json(pq.insertion)},
         {"Q", tableau_json(pq.recording)},
         {"shape", pq.shape.to_string()}};
  out.emit(j, "P\n" + tableau_text(pq.insertion) + "Q\n" + tableau_text(pq.recording) +
                  "shape " + pq.shape.pretty() + "\n");
  return 0;
}

void write_basis(const std::string& path, const IntegerLattice& l) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  write_matrix(f, l.basis());
}

int cmd_ideal_rank(const Output& out, const std::string& delta_text, std::optional<int> n,
                   bool signed_gens, const std::string& basis_out) {
  const PartitionSet delta = PartitionSet::parse(delta_text, n);
  const IntegerLattice l = ideal_lattice(delta, signed_gens);
  write_basis(basis_out, l);
  const bool cosat = is_cosaturated(delta);
  const BigInt predicted = tableaux_square_sum(delta);
  const bool pure = is_pure(l);
  const bool ok = !cosat || (BigInt(l.rank()) == predicted && pure);
  Json j{{"n", delta.n()},
         {"delta", delta.to_string()},
         {"signed", signed_gens},
         {"cosaturated", cosat},
         {"rank", l.rank()},
         {"predicted_rank", predicted.str()},
         {"pure", pure}};
  std::string t = "delta      " + delta.pretty() + (cosat ? "" : "  (not co-saturated)") + "\n" +
                  "rank       " + std::to_string(l.rank()) + "\n" +
                  "sum f^2    " + predicted.str() + "\n" +
                  "pure       " + (pure ? "yes" : "no") + "\n";
  out.emit(j, t);
  return ok ? 0 : 1;
}

int cmd_annihilator(const Output& out, const std::string& gamma_text, std::optional<int> n,
                    std::optional<std::uint64_t> p, const std::string& basis_out) {
  const PartitionSet gamma = PartitionSet::parse(gamma_text, n);
  if (gamma.empty()) throw std::invalid_argument("gamma must be nonempty");
  if (p && !is_prime(*p)) throw std::invalid_argument("--mod needs a prime");
  const YoungFamily fam(gamma);
  const PartitionSet closure = coarsening_closure(gamma);
  const bool eligible = is_cosaturated(closure);
  const PartitionSet delta = annihilator_delta(gamma);
  const BigInt predicted = tableaux_square_sum(delta);
  Json j{{"n", gamma.n()},
         {"gamma", gamma.to_string()},
         {"closure", closure.to_string()},
         {"closure_cosaturated", eligible},
         {"delta", delta.empty() ? "" : delta.to_string()},
         {"module_dimension", fam.dimension()},
         {"predicted_rank", predicted.str()}};
  std::string t = "gamma       " + gamma.pretty() + "\n" +
                  "closure     " + closure.pretty() +
                  (eligible ? "" : "  (not co-saturated; no prediction applies)") + "\n" +
                  "delta       " + set_or_empty(delta) + "\n" +
                  "dim M       " + std::to_string(fam.dimension()) + "\n";
  bool ok = true;
  if (p) {
    const Index d = annihilator_rank_mod_p(fam, *p);
    j["p"] = *p;
    j["dimension_mod_p"] = d;
    t += "dim Ann mod " + std::to_string(*p) + " " + std::to_string(d) + "\n";
    if (eligible) ok = BigInt(d) == predicted;
  } else {
    const IntegerLattice ann = annihilator_lattice(fam);
    write_basis(basis_out, ann);
    const bool equal = ann == ideal_lattice(delta, true);
    j["rank"] = ann.rank();
    j["equals_signed_ideal"] = equal;
    t += "rank Ann    " + std::to_string(ann.rank()) + "\n" +
         "= I(delta)+ " + (equal ? "yes" : "no") + "\n";
    if (eligible) ok = equal && BigInt(ann.rank()) == predicted;
  }
  t += "predicted   " + predicted.str() + "\n";
  out.emit(j, t);
  return ok ? 0 : 1;
}

int cmd_basis(const Output& out, const std::string& gamma_text, std::optional<int> n) {
  const PartitionSet gamma = PartitionSet::parse(gamma_text, n);
  const PartitionSet closure = coarsening_closure(gamma);
  const auto elems = g_gamma(closure);
  Json words = Json::array();
  std::string t;
  for (const auto& s : elems) {
    words.push_back(word_of(s).to_string());
    t += word_of(s).to_string() + "\n";
  }
  Json j{{"gamma", gamma.to_string()},
         {"closure", closure.to_string()},
         {"size", elems.size()},
         {"predicted_size", tableaux_square_sum(closure).str()},
         {"words", words}};
  out.emit(j, t);
  return 0;
}

std::string report_text(const VerificationReport& r, bool timing) {
  std::string t = r.job.theorem_id + " n=" + std::to_string(r.job.n) + ": " +
                  std::string(to_string(r.status)) + " - " + r.summary;
  if (timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.2fs)", r.elapsed_seconds);
    t += buf;
  }
  t += '\n';
  if (!r.witness.is_null()) t += "  witness: " + r.witness.dump() + "\n";
  return t;
}

int exit_for(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (r.status != Status::Pass) return 1;
  return 0;
}

int cmd_verify(const Output& out, const VerificationJob& job, const std::string& report_path) {
  validate_job(job);
  const VerificationReport r = run_job(job);
  const Json j = r.to_json(out.timing);
  if (!report_path.empty()) std::ofstream(report_path) << j.dump(2) << '\n';
  out.emit(j, report_text(r, out.timing));
  return exit_for({r});
}

int cmd_sweep(const Output& out, int n, bool long_run, const std::string& checkpoint_dir) {
  if (n < 1 || n > 7) throw JobError("sweep: n must be in [1, 7]");
  auto jobs = sweep_jobs(n, long_run);
  for (auto& j : jobs) j.checkpoint_dir = checkpoint_dir;
  const auto reports = run_jobs(jobs);
  Json j;
  j["schema"] = 1;
  j["n"] = n;
  j["reports"] = Json::array();
  std::string t;
  for (const auto& r : reports) {
    j["reports"].push_back(r.to_json(out.timing));
    t += report_text(r, out.timing);
  }
  out.emit(j, t);
  return exit_for(reports);
}

int cmd_list(const Output& out) {
  Json j = Json::array();
  std::string t;
  for (const auto& e : theorem_registry()) {
    std::string params;
    for (const auto& p : e.params) params += (params.empty() ? "" : ",") + p;
    std::string aliases;
    for (const auto& a : e.aliases) aliases += (aliases.empty() ? "" : ",") + a;
    j.push_back({{"id", e.id}, {"aliases", e.aliases}, {"params", e.params},
                 {"description", e.description}});
    t += e.id + " [" + aliases + "] (" + params + ")\n  " + e.description + "\n";
  }
  out.emit(j, t);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for ideals of Z Sym(n), Young modules and RSK"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  bool no_timing = false;
  app.add_flag("--json", out.json, "JSON output");
  app.add_flag("--no-timing", no_timing, "Omit elapsed times");

  std::string word;
  auto* shape_cmd = app.add_subcommand("shape", "RSK shape of a word");
  shape_cmd->add_option("word", word)->required();
  auto* greene_cmd = app.add_subcommand("greene", "A(s), its lub and the RSK shape");
  greene_cmd->add_option("word", word)->required();
  auto* rsk_cmd = app.add_subcommand("rsk", "Insertion and recording tableaux");
  rsk_cmd->add_option("word", word)->required();

  std::string delta, gamma, basis_out;
  std::optional<int> n;
  bool signed_gens = false;
  auto* ideal_cmd = app.add_subcommand("ideal-rank", "Rank and purity of I(delta)");
  ideal_cmd->add_option("--delta", delta, "e.g. 6;5,1;4,2")->required();
  ideal_cmd->add_option("--n", n);
  ideal_cmd->add_flag("--signed", signed_gens, "Use signed symmetrizers");
  ideal_cmd->add_option("--basis-out", basis_out, "Write the HNF basis here");

  std::optional<std::uint64_t> mod;
  auto* ann_cmd = app.add_subcommand("annihilator", "Annihilator of the Young modules of gamma");
  ann_cmd->add_option("--gamma", gamma)->required();
  ann_cmd->add_option("--n", n);
  ann_cmd->add_option("--mod", mod, "Work over F_p");
  ann_cmd->add_option("--basis-out", basis_out, "Write the HNF basis here");

  auto* basis_cmd = app.add_subcommand("basis", "List G of the coarsening closure of gamma");
  basis_cmd->add_option("--gamma", gamma)->required();
  basis_cmd->add_option("--n", n);

  VerificationJob job;
  std::string theorem, report_path;
  bool sampled = false;
  std::optional<std::string> opt_gamma, opt_delta;
  auto* verify_cmd = app.add_subcommand("verify", "Run one registered check");
  verify_cmd->add_option("--theorem", theorem, "Id or alias; see `list`")->required();
  verify_cmd->add_option("--n", job.n)->required();
  verify_cmd->add_option("--gamma", opt_gamma);
  verify_cmd->add_option("--delta", opt_delta);
  verify_cmd->add_option("--r", job.r);
  verify_cmd->add_option("--p", job.p);
  verify_cmd->add_flag("--sampled", sampled, "Random sample instead of exhaustive");
  verify_cmd->add_option("--seed", job.seed);
  verify_cmd->add_option("--samples", job.samples);
  verify_cmd->add_flag("--long", job.long_run, "Allow long parameter ranges");
  verify_cmd->add_option("--checkpoint-dir", job.checkpoint_dir);
  verify_cmd->add_option("--report", report_path, "Also write the JSON report here");

  int sweep_n = 0;
  bool sweep_long = false;
  std::string sweep_ckpt;
  auto* sweep_cmd = app.add_subcommand("sweep", "Every check that applies at n");
  sweep_cmd->add_option("--n", sweep_n)->required();
  sweep_cmd->add_flag("--long", sweep_long);
  sweep_cmd->add_option("--checkpoint-dir", sweep_ckpt);

  auto* list_cmd = app.add_subcommand("list", "Registered checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  out.timing = !no_timing;

  try {
    if (*shape_cmd) return cmd_shape(out, word);
    if (*greene_cmd) return cmd_greene(out, word);
    if (*rsk_cmd) return cmd_rsk(out, word);
    if (*ideal_cmd) return cmd_ideal_rank(out, delta, n, signed_gens, basis_out);
    if (*ann_cmd) return cmd_annihilator(out, gamma, n, mod, basis_out);
    if (*basis_cmd) return cmd_basis(out, gamma, n);
    if (*verify_cmd) {
      job.theorem_id = theorem;
      job.gamma = opt_gamma;
      job.delta = opt_delta;
      job.mode = sampled ? RunMode::Sampled : RunMode::Exhaustive;
      return cmd_verify(out, job, report_path);
    }
    if (*sweep_cmd) return cmd_sweep(out, sweep_n, sweep_long, sweep_ckpt);
    if (*list_cmd) return cmd_list(out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
