#pragma once

// JSON and plain-text renderings shared by the command-line tool and the
// Python module.

#include <json.hpp>
#include <string>

#include "mincw/avector.hpp"
#include "mincw/bounds.hpp"
#include "mincw/census.hpp"
#include "mincw/codewords.hpp"
#include "mincw/conjecture.hpp"
#include "mincw/mgsets.hpp"
#include "mincw/optimize.hpp"

namespace mincw {

using Json = nlohmann::ordered_json;

// Everything `analyze` computes for one code.
struct CodeAnalysis {
  int n = 0;
  int k = 0;
  int t = 0;
  SystematicCode systematic;
  AVector a;
  MinimalSet minimal;                      // systematic enumerator
  std::optional<Count> formula;            // counting formula, t <= 5
  std::optional<Count> bruteforce;         // k <= 20
  Reduction reduction;
  Count reduction_total = 0;               // sum of component counts + delta
  std::vector<std::string> disagreements;  // empty when every method agrees
};

CodeAnalysis analyze_code(const BinaryCode& code, std::uint64_t budget = kDefaultSubsetBudget);

Json avector_json(const AVector& a);
Json count_report_json(const AVector& a);
Json to_json(const CodeAnalysis& analysis);
Json to_json(const MGCatalog& catalog);
Json to_json(const MaxMinResult& result);
Json to_json(const TableResult& table);
Json to_json(const BoundsReport& report);
Json to_json(const CensusResult& result);
Json to_json(const ConjectureT3Report& report);
Json to_json(const LeadingReport& report);

std::string to_text(const CodeAnalysis& analysis);
std::string to_text(const MGCatalog& catalog);
std::string to_text(const MaxMinResult& result);
std::string to_text(const BoundsReport& report);
std::string bounds_grid_text(const std::vector<BoundsReport>& reports);
std::string bounds_grid_csv(const std::vector<BoundsReport>& reports);
std::string to_text(const CensusResult& result);
std::string to_text(const ConjectureT3Report& report);
std::string to_text(const LeadingReport& report);

}  // namespace mincw
