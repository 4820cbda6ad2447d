#include <doctest.h>

#include "mincw/report.hpp"

using namespace mincw;

TEST_CASE("code analysis") {
  auto a = analyze_code(BinaryCode({BitVec::parse("101"), BitVec::parse("011")}));
  CHECK(a.minimal.count() == 3);
  CHECK(a.formula == 3);
  CHECK(a.bruteforce == 3);
  CHECK(a.reduction_total == 3);
  CHECK(a.disagreements.empty());

  auto j = to_json(a);
  CHECK(j["n"] == 3);
  CHECK(j["k"] == 2);
  CHECK(j["t"] == 1);
  CHECK(j["count"] == 3);
  CHECK(j["words"].size() == 3);
  CHECK(j.contains("a_vector"));
  CHECK(to_text(a).find("count = 3") != std::string::npos);
}

TEST_CASE("count report") {
  auto j = count_report_json(AVector::from_dense(2, {0, 3, 3, 3}));
  CHECK(j["M"] == 63);
  CHECK(j["breakdown"]["singletons"] == 9);
  CHECK(j["breakdown"]["pair_term"] == 9);
}

TEST_CASE("renderings are deterministic") {
  auto r = maxmin(11, 9);
  CHECK(to_json(r).dump() == to_json(maxmin(11, 9)).dump());
  CHECK(to_json(r)["method"] == "formula-max");
  CHECK(to_json(build_catalog(2))["size_counts"].size() == 2);
  CHECK(to_text(bounds_report(6, 3)).find("matroid") != std::string::npos);
}
