#include "doctest.h"

#include "symideal/harness.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace symideal;

namespace {

VerificationJob job(const std::string& id, int n) {
  VerificationJob j;
  j.theorem_id = id;
  j.n = n;
  return j;
}

}  // namespace

TEST_CASE("registry lookup by id and alias") {
  for (const char* id : {"thm-2.2", "ex-2.3", "lemma-2.7", "prop-2.8", "thm-3.5", "cor-2.12",
                         "prop-3.10", "ex-2.11", "ex-2.13", "ex-2.15", "remark-2.14-search"})
    CHECK(find_theorem(id) != nullptr);
  CHECK(find_theorem("greene") == find_theorem("thm-2.2"));
  CHECK(find_theorem("direct-sum") == find_theorem("prop-2.8"));
  CHECK(find_theorem("annihilator") == find_theorem("thm-3.5"));
  CHECK(find_theorem("nope") == nullptr);
}

TEST_CASE("invalid jobs are rejected with a message") {
  CHECK_THROWS_AS(validate_job(job("nope", 3)), JobError);
  CHECK_THROWS_AS(validate_job(job("thm-2.2", 9)), JobError);
  auto big = job("thm-2.2", 17);
  big.mode = RunMode::Sampled;
  CHECK_THROWS_AS(validate_job(big), JobError);
  CHECK_THROWS_AS(validate_job(job("ex-2.15", 5)), JobError);
  CHECK_THROWS_AS(validate_job(job("remark-2.14-search", 7)), JobError);
  CHECK_THROWS_AS(validate_job(job("remark-2.14-search", 8)), JobError);
  auto j = job("thm-3.5", 4);
  j.p = 4;
  CHECK_THROWS_AS(validate_job(j), JobError);
  j = job("lemma-2.7", 6);
  j.delta = "6;4,2";
  CHECK_THROWS_AS(validate_job(j), JobError);
  j = job("prop-2.8", 6);
  j.gamma = "6;5,1;4,2;4,1,1;3,3";  // two minimal elements
  CHECK_THROWS_AS(validate_job(j), JobError);
  j = job("thm-3.5", 5);
  j.gamma = "2,2,1";
  CHECK_THROWS_AS(validate_job(j), JobError);
  j = job("thm-3.5", 4);
  j.gamma = "3,2";
  CHECK_THROWS_AS(validate_job(j), JobError);
  try {
    validate_job(job("ex-2.15", 5));
  } catch (const JobError& e) {
    CHECK(std::string(e.what()).find("n = 6") != std::string::npos);
  }
  auto ok = job("remark-2.14-search", 7);
  ok.long_run = true;
  CHECK_NOTHROW(validate_job(ok));
}

TEST_CASE("golden jobs") {
  const auto g = run_job(job("thm-2.2", 6));
  CHECK(g.passed());
  CHECK(g.summary == "720/720 words agree");

  auto ds = job("prop-2.8", 3);
  ds.gamma = "3";
  const auto r = run_job(ds);
  CHECK(r.passed());
  const auto& item = r.evidence["items"][0];
  CHECK(item["g_size"] == 1);
  CHECK(item["ideal_rank"] == 5);

  const auto ex = run_job(job("ex-2.15", 6));
  CHECK(ex.passed());
  CHECK(ex.evidence["chain_412563"] == true);
  CHECK(ex.evidence["items"].size() == 2);

  const auto five = run_job(job("remark-2.14-search", 5));
  CHECK(five.passed());
  CHECK(five.summary.find("vacuous") != std::string::npos);
  const auto six = run_job(job("remark-2.14-search", 6));
  CHECK(six.passed());
  CHECK(six.evidence["checked"] == 2);

  CHECK(run_job(job("ex-2.3", 6)).passed());
  CHECK(run_job(job("greene-example", 0)).passed());
  CHECK(run_job(job("prop-2.8", 5)).passed());
}

TEST_CASE("reports are deterministic without timing") {
  auto j = job("thm-3.5", 4);
  const std::string a = run_job(j).to_json(false).dump();
  const std::string b = run_job(j).to_json(false).dump();
  CHECK(a == b);
  CHECK(a.find("elapsed") == std::string::npos);
  CHECK(run_job(j).to_json(true).contains("elapsed_seconds"));
  CHECK(run_job(j).to_json(false)["schema"] == 1);
}

TEST_CASE("sampled mode records its seed and is reproducible") {
  auto j = job("thm-2.2", 14);
  j.mode = RunMode::Sampled;
  j.seed = 99;
  j.samples = 40;
  const auto r1 = run_job(j), r2 = run_job(j);
  CHECK(r1.passed());
  CHECK(r1.to_json(false)["job"]["seed"] == 99);
  CHECK(r1.to_json(false).dump() == r2.to_json(false).dump());
  CHECK(r1.evidence["words"] == 40);

  auto f = job("thm-3.5", 5);
  f.mode = RunMode::Sampled;
  f.samples = 6;
  const auto s = run_job(f);
  CHECK(s.passed());
  CHECK(s.evidence["checked"] == 6);
}

TEST_CASE("item checkpoints are resumed and failures carry a witness") {
  const auto dir = std::filesystem::temp_directory_path() / "symideal-harness-test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  // A stored result is trusted on resume; a stored failure must surface as
  // a failing report with that item as the witness.
  {
    std::ofstream out(dir / "prop-2.8-n3.jsonl");
    out << R"({"key":"3;2,1","result":{"gamma":"3;2,1","ok":false,"note":"stored"}})" << '\n';
    out << "{\"key\":\"torn";
  }
  auto j = job("prop-2.8", 3);
  j.checkpoint_dir = dir.string();
  const auto r = run_job(j);
  CHECK(r.status == Status::Fail);
  REQUIRE_FALSE(r.witness.is_null());
  CHECK(r.witness["gamma"] == "3;2,1");
  CHECK(r.witness["note"] == "stored");
  CHECK(r.summary == "2/3 direct sums verified");
  CHECK_FALSE(std::filesystem::exists(dir / "prop-2.8-n3.jsonl"));

  // Replaying the witness recomputes it from scratch.
  auto replay = job("prop-2.8", 3);
  replay.gamma = r.witness["gamma"].get<std::string>();
  CHECK(run_job(replay).passed());
  std::filesystem::remove_all(dir);
}

TEST_CASE("worker pool") {
  std::atomic<int> sum{0};
  parallel_for(1000, 4, [&](std::size_t i) { sum += static_cast<int>(i); });
  CHECK(sum == 999 * 1000 / 2);
  CHECK_THROWS(parallel_for(10, 3, [](std::size_t i) {
    if (i == 7) throw std::runtime_error("boom");
  }));

  setenv("SYMIDEAL_WORKERS", "3", 1);
  CHECK(worker_count() == 3);
  setenv("SYMIDEAL_WORKERS", "zero", 1);
  CHECK(worker_count() >= 1);
  unsetenv("SYMIDEAL_WORKERS");

  const std::vector<VerificationJob> jobs = {job("thm-2.2", 4), job("ex-2.3", 6), job("prop-2.8", 4)};
  const auto reports = run_jobs(jobs, 3);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].job.theorem_id == "thm-2.2");
  CHECK(reports[1].job.theorem_id == "ex-2.3");
  CHECK(reports[2].job.theorem_id == "prop-2.8");
  for (const auto& r : reports) CHECK(r.passed());
}

TEST_CASE("sweeps") {
  const auto four = sweep_jobs(4, false);
  CHECK(std::any_of(four.begin(), four.end(), [](const auto& j) { return j.theorem_id == "ex-2.11"; }));
  const auto six = sweep_jobs(6, false);
  CHECK(std::any_of(six.begin(), six.end(), [](const auto& j) { return j.theorem_id == "ex-2.15"; }));
  const auto seven = sweep_jobs(7, false);
  CHECK(std::none_of(seven.begin(), seven.end(),
                     [](const auto& j) { return j.theorem_id == "remark-2.14-search"; }));
  for (int n = 1; n <= 4; ++n)
    for (const auto& r : run_jobs(sweep_jobs(n, false))) CHECK_MESSAGE(r.passed(), r.summary);
}
