#include "symideal/harness.hpp"

#include "symideal/ideal.hpp"
#include "symideal/partition.hpp"
#include "symideal/permutation.hpp"
#include "symideal/rsk.hpp"
#include "symideal/young_module.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

namespace symideal {

namespace {

thread_local bool inside_pool = false;

std::string big_str(const BigInt& b) { return b.str(); }

std::string set_str(const PartitionSet& s) { return s.empty() ? "" : s.to_string(); }

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Counterexample: return "counterexample";
    case Status::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Json VerificationJob::to_json() const {
  Json j;
  j["theorem_id"] = theorem_id;
  j["n"] = n;
  if (gamma) j["gamma"] = *gamma;
  if (delta) j["delta"] = *delta;
  if (r) j["r"] = *r;
  if (p) j["p"] = *p;
  j["mode"] = mode == RunMode::Exhaustive ? "exhaustive" : "sampled";
  if (mode == RunMode::Sampled) {
    j["seed"] = seed;
    j["samples"] = samples;
  }
  if (long_run) j["long"] = true;
  return j;
}

Json VerificationReport::to_json(bool include_timing) const {
  Json j;
  j["schema"] = 1;
  j["job"] = job.to_json();
  j["status"] = std::string(to_string(status));
  j["summary"] = summary;
  j["evidence"] = evidence;
  if (!witness.is_null()) j["witness"] = witness;
  if (include_timing) j["elapsed_seconds"] = elapsed_seconds;
  return j;
}

// ---- scheduling ----

unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SYMIDEAL_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return hw;
}

void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& f) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1 || inside_pool) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      inside_pool = true;
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<VerificationReport> run_jobs(const std::vector<VerificationJob>& jobs,
                                         unsigned workers) {
  std::vector<VerificationReport> out(jobs.size());
  parallel_for(jobs.size(), workers, [&](std::size_t i) { out[i] = run_job(jobs[i]); });
  return out;
}

// ---- per-item loops with optional resume ----

namespace {

// Completed items of one job, one JSON object per line.
class ItemCheckpoint {
 public:
  ItemCheckpoint(const std::string& dir, const VerificationJob& job) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    std::string name = job.theorem_id + "-n" + std::to_string(job.n);
    if (job.long_run) name += "-long";
    path_ = (std::filesystem::path(dir) / (name + ".jsonl")).string();
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      try {
        Json j = Json::parse(line);
        done_[j.at("key").get<std::string>()] = j.at("result");
      } catch (const std::exception&) {
        // torn last line after an interruption
      }
    }
  }

  std::optional<Json> find(const std::string& key) {
    std::lock_guard lock(mu_);
    auto it = done_.find(key);
    if (it == done_.end()) return std::nullopt;
    return it->second;
  }

  void record(const std::string& key, const Json& result) {
    if (path_.empty()) return;
    std::lock_guard lock(mu_);
    std::ofstream out(path_, std::ios::app);
    Json line;
    line["key"] = key;
    line["result"] = result;
    out << line.dump() << '\n';
  }

  void finish() {
    if (!path_.empty()) std::filesystem::remove(path_);
  }

  std::size_t resumed() const { return done_.size(); }

 private:
  std::string path_;
  std::map<std::string, Json> done_;
  std::mutex mu_;
};

template <typename T>
std::vector<T> pick_samples(std::vector<T> items, const VerificationJob& job) {
  if (job.mode != RunMode::Sampled || items.size() <= job.samples) return items;
  std::vector<std::size_t> idx(items.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::mt19937_64 rng(job.seed);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(job.samples);
  std::sort(idx.begin(), idx.end());
  std::vector<T> out;
  for (std::size_t i : idx) out.push_back(items[i]);
  return out;
}

// Runs `check` on every item (in parallel), each returning an object with a
// boolean "ok". The report passes iff all items are ok; the first failing
// item becomes the witness.
VerificationReport run_items(const VerificationJob& job, const std::vector<PartitionSet>& items,
                             const std::function<Json(const PartitionSet&)>& check,
                             const std::string& what) {
  VerificationReport rep;
  rep.job = job;
  ItemCheckpoint cp(job.checkpoint_dir, job);
  std::vector<Json> results(items.size());
  parallel_for(items.size(), worker_count(), [&](std::size_t i) {
    const std::string key = set_str(items[i]);
    if (auto done = cp.find(key)) {
      results[i] = *done;
      return;
    }
    results[i] = check(items[i]);
    cp.record(key, results[i]);
  });
  std::size_t ok = 0;
  for (const auto& r : results) {
    if (r.at("ok").get<bool>())
      ++ok;
    else if (rep.witness.is_null())
      rep.witness = r;
  }
  rep.evidence["items"] = results;
  rep.evidence["checked"] = items.size();
  rep.evidence["passed"] = ok;
  rep.status = ok == items.size() ? Status::Pass : Status::Fail;
  rep.summary = std::to_string(ok) + "/" + std::to_string(items.size()) + " " + what;
  cp.finish();
  return rep;
}

// ---- parameter helpers ----

void require_n(const VerificationJob& job, int lo, int hi) {
  if (job.n < lo || job.n > hi)
    throw JobError(job.theorem_id + ": n must be in [" + std::to_string(lo) + ", " +
                   std::to_string(hi) + "], got " + std::to_string(job.n));
}

PartitionSet parse_set(const std::string& text, int n, const char* what) {
  PartitionSet s = [&] {
    try {
      return PartitionSet::parse(text, n);
    } catch (const std::exception& e) {
      throw JobError(std::string(what) + ": " + e.what());
    }
  }();
  if (s.n() != n) throw JobError(std::string(what) + " is not a set of partitions of n");
  return s;
}

// Every gamma with a co-saturated coarsening closure. For n = 6 without the
// long flag only co-saturated gamma themselves (each is its own closure).
std::vector<PartitionSet> family_gammas(const VerificationJob& job) {
  if (job.gamma) return {parse_set(*job.gamma, job.n, "gamma")};
  std::vector<PartitionSet> out;
  if (job.n >= 6 && !job.long_run) {
    for (auto& g : all_cosaturated_subsets(job.n))
      if (!g.empty()) out.push_back(g);
    return pick_samples(out, job);
  }
  const std::size_t count = partitions_of(job.n).size();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << count); ++m) {
    PartitionSet g = PartitionSet::from_mask(job.n, m);
    if (is_cosaturated(coarsening_closure(g))) out.push_back(std::move(g));
  }
  return pick_samples(out, job);
}

void validate_family_job(const VerificationJob& job) {
  require_n(job, 1, 6);
  if (job.gamma) {
    const auto g = parse_set(*job.gamma, job.n, "gamma");
    if (g.empty()) throw JobError("gamma must be nonempty");
    if (!is_cosaturated(coarsening_closure(g)))
      throw JobError("coarsening closure of gamma is not co-saturated");
  }
}

// ---- checkers ----

VerificationReport check_greene(const VerificationJob& job) {
  VerificationReport rep;
  rep.job = job;
  std::vector<Word> words;
  if (job.mode == RunMode::Exhaustive) {
    words = all_words(job.n);
  } else {
    std::mt19937_64 rng(job.seed);
    std::vector<int> e(static_cast<std::size_t>(job.n));
    for (std::size_t k = 0; k < job.samples; ++k) {
      std::iota(e.begin(), e.end(), 1);
      std::shuffle(e.begin(), e.end(), rng);
      words.emplace_back(e);
    }
  }
  std::vector<char> agree(words.size());
  parallel_for(words.size(), worker_count(), [&](std::size_t i) {
    agree[i] = greene_shape_oracle(words[i]) == shape(words[i]);
  });
  const auto ok = static_cast<std::size_t>(std::count(agree.begin(), agree.end(), 1));
  for (std::size_t i = 0; i < words.size(); ++i)
    if (!agree[i]) {
      rep.witness = {{"word", words[i].to_string()},
                     {"rsk_shape", shape(words[i]).to_string()},
                     {"lub", greene_shape_oracle(words[i]).to_string()}};
      break;
    }
  rep.evidence["words"] = words.size();
  rep.evidence["agree"] = ok;
  rep.status = ok == words.size() ? Status::Pass : Status::Fail;
  rep.summary = std::to_string(ok) + "/" + std::to_string(words.size()) + " words agree";
  return rep;
}

VerificationReport check_golden_word(const VerificationJob& job) {
  VerificationReport rep;
  rep.job = job;
  const Word s = Word::parse("412563");
  const bool a411 = upward_compatible(s, Partition{4, 1, 1});
  const bool a33 = upward_compatible(s, Partition{3, 3});
  const bool a42 = upward_compatible(s, Partition{4, 2});
  const Partition sh = shape(s);
  rep.evidence = {{"word", s.to_string()},
                  {"shape", sh.to_string()},
                  {"ascent_set", set_str(ascent_set(s))},
                  {"contains_4_1_1", a411},
                  {"contains_3_3", a33},
                  {"contains_4_2", a42},
                  {"lub", greene_shape_oracle(s).to_string()}};
  const bool ok = a411 && a33 && !a42 && sh == Partition{4, 2} &&
                  greene_shape_oracle(s) == sh;
  rep.status = ok ? Status::Pass : Status::Fail;
  if (!ok) rep.witness = rep.evidence;
  rep.summary = "412563 has shape " + sh.pretty();
  return rep;
}

VerificationReport check_ideal_rank(const VerificationJob& job) {
  std::vector<PartitionSet> items;
  if (job.delta)
    items.push_back(parse_set(*job.delta, job.n, "delta"));
  else
    items = pick_samples(all_cosaturated_subsets(job.n), job);
  return run_items(job, items, [](const PartitionSet& d) {
    const IntegerLattice l = ideal_lattice(d);
    const BigInt predicted = tableaux_square_sum(d);
    return Json{{"delta", set_str(d)},
                {"rank", l.rank()},
                {"predicted", big_str(predicted)},
                {"pure", is_pure(l)},
                {"ok", BigInt(l.rank()) == predicted}};
  }, "ideal ranks match");
}

VerificationReport check_direct_sum_job(const VerificationJob& job) {
  std::vector<PartitionSet> items;
  if (job.gamma) {
    items.push_back(parse_set(*job.gamma, job.n, "gamma"));
  } else {
    for (auto& g : all_cosaturated_subsets(job.n))
      if (unique_minimal(g)) items.push_back(g);
    items = pick_samples(items, job);
  }
  return run_items(job, items, [](const PartitionSet& g) {
    const DirectSumReport r = check_direct_sum(g);
    return Json{{"gamma", set_str(g)},
                {"delta", set_str(r.delta)},
                {"g_size", r.g_size},
                {"ideal_rank", r.ideal_rank},
                {"predicted_ideal_rank", big_str(r.predicted_ideal_rank)},
                {"sum_full", r.sum_full},
                {"intersection_zero", r.intersection_zero},
                {"signed_sum_full", r.signed_sum_full},
                {"signed_intersection_zero", r.signed_intersection_zero},
                {"ideal_pure", r.ideal_pure},
                {"signed_ideal_pure", r.signed_ideal_pure},
                {"ok", r.passed()}};
  }, "direct sums verified");
}

VerificationReport check_annihilator_job(const VerificationJob& job) {
  std::vector<std::uint64_t> primes = {2, 3, 5, 7};
  if (job.p) primes = {*job.p};
  return run_items(job, family_gammas(job), [primes](const PartitionSet& g) {
    const YoungFamily fam(g);
    const PartitionSet delta = annihilator_delta(g);
    const BigInt predicted = tableaux_square_sum(delta);
    const IntegerLattice ann = annihilator_lattice(fam);
    const bool equal = ann == ideal_lattice(delta, true);
    Json mod = Json::object();
    bool mod_ok = true;
    for (auto p : primes) {
      const Index d = annihilator_rank_mod_p(fam, p);
      mod[std::to_string(p)] = d;
      mod_ok = mod_ok && BigInt(d) == predicted;
    }
    return Json{{"gamma", set_str(g)},
                {"delta", set_str(delta)},
                {"predicted_rank", big_str(predicted)},
                {"computed_rank", ann.rank()},
                {"lattice_equal", equal},
                {"mod_p_dimensions", mod},
                {"ok", equal && BigInt(ann.rank()) == predicted && mod_ok}};
  }, "annihilators match the signed ideal");
}

VerificationReport check_image_basis_job(const VerificationJob& job) {
  return run_items(job, family_gammas(job), [](const PartitionSet& g) {
    const ImageBasisReport r = image_basis_check(g);
    return Json{{"gamma", set_str(g)},
                {"closure", set_str(r.closure)},
                {"method", r.method},
                {"g_size", r.g_size},
                {"predicted_rank", big_str(r.predicted_rank)},
                {"image_rank", r.image_rank},
                {"g_image_rank", r.g_image_rank},
                {"g_spans_image", r.g_spans_image},
                {"ok", r.passed()}};
  }, "image bases verified");
}

VerificationReport check_presentation_job(const VerificationJob& job) {
  return run_items(job, family_gammas(job), [](const PartitionSet& g) {
    const PresentationReport r = presentation_check(g);
    return Json{{"gamma", set_str(g)},
                {"delta", set_str(r.delta)},
                {"group_relations", r.group_relations},
                {"symmetrizer_relations", r.symmetrizer_relations},
                {"kernel_equals_ideal", r.kernel_equals_ideal},
                {"kernel_rank", r.kernel_rank},
                {"image_rank", r.image_rank},
                {"predicted_image_rank", big_str(r.predicted_image_rank)},
                {"ok", r.passed()}};
  }, "presentations verified");
}

VerificationReport check_tensor_place(const VerificationJob& job) {
  VerificationReport rep;
  rep.job = job;
  const int r = job.r.value_or(4);
  const TensorPlaceReport t = tensor_place_check(job.n, r);
  std::vector<std::string> words;
  for (const auto& w : t.basis_words) words.push_back(w.to_string());
  rep.evidence = {{"letters", job.n},
                  {"r", r},
                  {"kernel_rank", t.kernel_rank},
                  {"quotient_rank", t.quotient_rank},
                  {"basis_words", words},
                  {"basis_spans", t.basis_spans},
                  {"basis_independent", t.basis_independent},
                  {"delta", set_str(t.delta)},
                  {"kernel_equals_ideal", t.kernel_equals_ideal}};
  rep.status = t.passed() ? Status::Pass : Status::Fail;
  if (!t.passed()) rep.witness = rep.evidence;
  rep.summary = "quotient rank " + std::to_string(t.quotient_rank) + ", " +
                std::to_string(words.size()) + " basis words";
  return rep;
}

VerificationReport check_doty(const VerificationJob& job) {
  std::vector<int> rs;
  if (job.r)
    rs.push_back(*job.r);
  else
    for (int r = 1; r <= job.n; ++r) rs.push_back(r);
  VerificationReport rep;
  rep.job = job;
  Json items = Json::array();
  std::size_t ok = 0;
  for (int r : rs) {
    const DotyReport d = doty_kernel_check(job.n, r);
    Json j{{"n", job.n},
           {"r", r},
           {"stabilizer_types", set_str(d.stabilizer_types)},
           {"closure", set_str(d.closure)},
           {"closure_matches", d.closure_matches},
           {"delta", set_str(d.delta)},
           {"kernel_rank", d.kernel_rank},
           {"kernel_equals_ideal", d.kernel_equals_ideal},
           {"increasing_words", d.increasing_words},
           {"basis_words_match", d.basis_words_match},
           {"basis_spans", d.basis_spans},
           {"basis_independent", d.basis_independent},
           {"ok", d.passed()}};
    if (d.passed())
      ++ok;
    else if (rep.witness.is_null())
      rep.witness = j;
    items.push_back(std::move(j));
  }
  rep.evidence["items"] = items;
  rep.status = ok == rs.size() ? Status::Pass : Status::Fail;
  rep.summary = std::to_string(ok) + "/" + std::to_string(rs.size()) + " tensor degrees verified";
  return rep;
}

Json certificate_json(const SpanCertificate& c) {
  Json j;
  j["complete"] = c.complete;
  j["outside_delta"] = c.outside_delta;
  j["eliminations"] = c.log.size();
  Json survivors = Json::array();
  for (const auto& w : c.first_pass_survivors) {
    Json s{{"word", w.to_string()}};
    if (const auto* step = c.step_for(w)) {
      s["blocks"] = step->blocks.to_string();
      if (step->chain) {
        s["partner"] = step->chain->partner.to_string();
        s["partner_blocks"] = step->chain->partner_blocks.to_string();
      }
    }
    survivors.push_back(std::move(s));
  }
  j["first_pass_survivors"] = survivors;
  Json stuck = Json::array();
  for (const auto& w : c.stuck) stuck.push_back(w.to_string());
  j["stuck"] = stuck;
  return j;
}

bool same_blocks(const BlockFamily& b, std::vector<std::vector<int>> expected) {
  auto got = b.blocks();
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  return got == expected;
}

VerificationReport check_exceptional_span(const VerificationJob& job) {
  VerificationReport rep;
  rep.job = job;
  const std::vector<std::string> deltas = {"6;5,1;4,2", "6;5,1;4,2;4,1,1;3,3;3,2,1"};
  Json items = Json::array();
  bool ok = true;
  for (const auto& text : deltas) {
    const PartitionSet d = PartitionSet::parse(text, 6);
    const SpanCheckResult span = span_plus_ideal_check(d);
    const SpanCertificate cert = greedy_span_certificate(d);
    Json j{{"delta", text},
           {"span_full", span.full},
           {"generators_used", span.generators_used},
           {"certificate", certificate_json(cert)}};
    ok = ok && span.full && cert.complete;
    items.push_back(std::move(j));
  }
  // The first set needs the two-step chain for exactly 412563 and 236145.
  const SpanCertificate c = greedy_span_certificate(PartitionSet::parse(deltas[0], 6));
  std::vector<std::string> survivors;
  for (const auto& w : c.first_pass_survivors) survivors.push_back(w.to_string());
  bool chain_ok = survivors == std::vector<std::string>{"412563", "236145"};
  const auto* step = c.step_for(Word::parse("412563"));
  chain_ok = chain_ok && step && step->chain && step->chain->partner == Word::parse("412365") &&
             same_blocks(step->chain->blocks, {{1, 5}, {2, 3, 4, 6}}) &&
             same_blocks(step->chain->partner_blocks, {{1, 6}, {2, 3, 4, 5}});
  const auto* other = c.step_for(Word::parse("236145"));
  chain_ok = chain_ok && other && other->kind == EliminationStep::Kind::Chain;
  const bool inverse_pair = pi(Word::parse("412563")).inverse() == pi(Word::parse("236145"));
  rep.evidence["inverse_pair"] = inverse_pair;
  chain_ok = chain_ok && inverse_pair;
  rep.evidence["items"] = items;
  rep.evidence["chain_412563"] = chain_ok;
  ok = ok && chain_ok;
  rep.status = ok ? Status::Pass : Status::Fail;
  if (!ok) rep.witness = rep.evidence;
  rep.summary = ok ? "both sets span; 412563 and 236145 removed by two-step chains"
                   : "exceptional span check failed";
  return rep;
}

}  // namespace

VerificationReport search_remark_2_14(int n, bool long_run, const std::string& checkpoint_dir) {
  VerificationJob job;
  job.theorem_id = "remark-2.14-search";
  job.n = n;
  job.long_run = long_run;
  job.checkpoint_dir = checkpoint_dir;
  return run_job(job);
}

namespace {

VerificationReport check_span_search(const VerificationJob& job) {
  std::vector<PartitionSet> items;
  for (auto& d : all_cosaturated_subsets(job.n))
    if (!complement(d).empty() && !unique_maximal(complement(d))) items.push_back(d);
  const std::string dir = job.checkpoint_dir;
  VerificationReport rep = run_items(job, items, [&](const PartitionSet& d) {
    SpanCheckOptions opt;
    if (!dir.empty())
      opt.checkpoint_path =
          (std::filesystem::path(dir) / ("span-n" + std::to_string(d.n()) + "-" +
                                         std::to_string(d.mask()) + ".ckpt"))
              .string();
    const SpanCertificate cert = greedy_span_certificate(d);
    const SpanCheckResult span = span_plus_ideal_check(d, opt);
    return Json{{"delta", set_str(d)},
                {"span_full", span.full},
                {"projected_rank", span.projected_rank},
                {"target_rank", span.target_rank},
                {"generators_used", span.generators_used},
                {"certificate_complete", cert.complete},
                {"first_pass_survivors", cert.first_pass_survivors.size()},
                {"ok", span.full}};
  }, "co-saturated sets span");
  if (rep.status == Status::Fail) {
    rep.status = Status::Counterexample;
    rep.summary = "counterexample: Z G + I(delta) is not everything for delta = " +
                  rep.witness.at("delta").get<std::string>();
  } else if (items.empty()) {
    rep.summary = "vacuous: every co-saturated complement has a unique maximal element";
  } else {
    rep.summary = "no counterexample at n = " + std::to_string(job.n) + " (" +
                  std::to_string(items.size()) + " sets)";
  }
  return rep;
}

std::vector<TheoremEntry> make_registry() {
  std::vector<TheoremEntry> r;
  r.push_back({"thm-2.2", {"greene"}, "RSK shape equals lub of the ascent set, every word",
               {"n", "mode", "seed", "samples"},
               [](const VerificationJob& j) {
                 if (j.mode == RunMode::Exhaustive) require_n(j, 1, 8);
                 else require_n(j, 1, 16);  // the oracle backtracks; ~0.2s per word at 16
               },
               check_greene});
  r.push_back({"ex-2.3", {"greene-example"}, "ascent set and shape of 412563", {},
               [](const VerificationJob&) {}, check_golden_word});
  r.push_back({"lemma-2.7", {"ideal-rank"}, "rank of I(delta) is the sum of f_lambda^2",
               {"n", "delta"},
               [](const VerificationJob& j) {
                 require_n(j, 1, j.long_run ? 7 : 6);
                 if (j.delta && !is_cosaturated(parse_set(*j.delta, j.n, "delta")))
                   throw JobError("delta must be co-saturated");
               },
               check_ideal_rank});
  r.push_back({"prop-2.8", {"direct-sum"}, "Z G(gamma) (+) I(delta) = Z Sym(n), purity",
               {"n", "gamma"},
               [](const VerificationJob& j) {
                 require_n(j, 1, 6);
                 if (j.gamma) {
                   const auto g = parse_set(*j.gamma, j.n, "gamma");
                   if (!is_cosaturated(g) || !unique_minimal(g))
                     throw JobError("gamma must be co-saturated with a unique minimal element");
                 }
               },
               check_direct_sum_job});
  r.push_back({"thm-3.5", {"annihilator", "cor-2.10"},
               "annihilator of a Young family is the signed ideal, over Z and F_p",
               {"n", "gamma", "p"},
               [](const VerificationJob& j) {
                 validate_family_job(j);
                 if (j.p && !is_prime(*j.p)) throw JobError("p must be prime");
               },
               check_annihilator_job});
  r.push_back({"cor-2.12", {"image-basis"}, "rho(G(closure)) is a basis of the image",
               {"n", "gamma"}, validate_family_job, check_image_basis_job});
  r.push_back({"prop-3.10", {"presentation"}, "relations hold and the kernel is the signed ideal",
               {"n", "gamma"}, validate_family_job, check_presentation_job});
  r.push_back({"ex-2.11", {"tensor-place"},
               "place permutations on [n]^r: quotient rank and basis", {"n", "r"},
               [](const VerificationJob& j) {
                 require_n(j, 1, 8);
                 const int r = j.r.value_or(4);
                 if (r < 1 || r > 6) throw JobError("r must be in [1, 6]");
                 std::size_t points = 1;
                 for (int k = 0; k < r; ++k) points *= static_cast<std::size_t>(j.n);
                 if (points > 50000) throw JobError("n^r too large");
               },
               check_tensor_place});
  r.push_back({"ex-2.13", {"doty"}, "Sym(n) on [n]^r: kernel and basis", {"n", "r"},
               [](const VerificationJob& j) {
                 require_n(j, 1, 5);
                 if (j.r && (*j.r < 1 || *j.r > 5)) throw JobError("r must be in [1, 5]");
               },
               check_doty});
  r.push_back({"ex-2.15", {"exceptional-span"},
               "the two exceptional delta in Par(6): span and elimination chains", {},
               [](const VerificationJob& j) {
                 if (j.n != 0 && j.n != 6) throw JobError("ex-2.15 is about n = 6");
               },
               check_exceptional_span});
  r.push_back({"remark-2.14-search", {"span-search"},
               "search for co-saturated delta with Z G + I(delta) != Z Sym(n)", {"n"},
               [](const VerificationJob& j) {
                 require_n(j, 1, 7);
                 if (j.n == 7 && !j.long_run) throw JobError("n = 7 needs --long");
               },
               check_span_search});
  return r;
}

}  // namespace

const std::vector<TheoremEntry>& theorem_registry() {
  static const std::vector<TheoremEntry> registry = make_registry();
  return registry;
}

const TheoremEntry* find_theorem(std::string_view id) {
  for (const auto& e : theorem_registry()) {
    if (e.id == id) return &e;
    for (const auto& a : e.aliases)
      if (a == id) return &e;
  }
  return nullptr;
}

void validate_job(const VerificationJob& job) {
  const TheoremEntry* e = find_theorem(job.theorem_id);
  if (!e) throw JobError("unknown theorem id '" + job.theorem_id + "'");
  if (job.mode == RunMode::Sampled && job.samples == 0)
    throw JobError("sampled mode needs at least one sample");
  e->validate(job);
}

VerificationReport run_job(const VerificationJob& job) {
  validate_job(job);
  const TheoremEntry* e = find_theorem(job.theorem_id);
  VerificationJob canonical = job;
  canonical.theorem_id = e->id;
  if (e->id == "ex-2.15") canonical.n = 6;
  if (e->id == "ex-2.3") canonical.n = 6;
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep = e->run(canonical);
  rep.job = canonical;
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<VerificationJob> sweep_jobs(int n, bool long_run) {
  std::vector<VerificationJob> jobs;
  auto add = [&](const std::string& id, int nn, std::optional<int> r = {}) {
    VerificationJob j;
    j.theorem_id = id;
    j.n = nn;
    j.r = r;
    j.long_run = long_run;
    jobs.push_back(std::move(j));
  };
  add("thm-2.2", n);
  add("lemma-2.7", n);
  if (n <= 6) {
    add("prop-2.8", n);
    add("thm-3.5", n);
    add("cor-2.12", n);
    add("prop-3.10", n);
  }
  if (n <= 5) add("ex-2.13", n);
  if (n <= 6 || long_run) add("remark-2.14-search", n);
  if (n == 4) add("ex-2.11", 2, 4);
  if (n == 6) {
    add("ex-2.3", 6);
    add("ex-2.15", 6);
  }
  return jobs;
}

}  // namespace symideal
