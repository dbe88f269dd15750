#include <doctest.h>

#include "fdb/verify.hpp"

using namespace fdb;

namespace {

VerifyOptions small(std::uint64_t seed) {
  VerifyOptions options;
  options.max_n = 3;
  options.max_s = 2;
  options.seed = seed;
  options.random_triples = 10;
  return options;
}

}  // namespace

TEST_CASE("small verification run passes") {
  const auto report = run_verification(small(1));
  CHECK(report.passed());
  int informational = 0;
  for (const auto& r : report.results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.ok());
    if (r.status == IdentityStatus::Informational) {
      ++informational;
      CHECK_FALSE(r.detail.empty());
    } else {
      CHECK(r.instances > 0);
    }
  }
  CHECK(informational == 2);
}

TEST_CASE("report json") {
  const auto j = verify_report_to_json(run_verification(small(9)));
  CHECK(j["ok"] == true);
  CHECK(j["seed"] == 9);
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["summary"]["informational"] == 2);
  CHECK(j["identities"].size() == j["summary"]["passed"].get<int>() + 2);
  bool found = false;
  for (const auto& entry : j["identities"]) {
    if (entry["name"] == "convolution_without_binomial") {
      found = true;
      CHECK(entry["status"] == "informational");
      CHECK(entry["detail"].get<std::string>().find("(2,2,1): form gives 1, definition gives 2") != std::string::npos);
    }
  }
  CHECK(found);
}

TEST_CASE("reports are reproducible and independent of threading") {
  auto options = small(4);
  const auto a = verify_report_to_json(run_verification(options)).dump();
  const auto b = verify_report_to_json(run_verification(options)).dump();
  options.parallel = false;
  const auto c = verify_report_to_json(run_verification(options)).dump();
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("zero bounds are a trivial pass") {
  VerifyOptions options;
  options.max_n = 0;
  options.max_s = 0;
  options.random_triples = 2;
  CHECK(run_verification(options).passed());
}

TEST_CASE("status names") {
  CHECK(std::string(to_string(IdentityStatus::Pass)) == "pass");
  CHECK(std::string(to_string(IdentityStatus::Fail)) == "fail");
  CHECK(std::string(to_string(IdentityStatus::Informational)) == "informational");
}
