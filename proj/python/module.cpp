#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "mincw/bounds.hpp"
#include "mincw/census.hpp"
#include "mincw/codewords.hpp"
#include "mincw/conjecture.hpp"
#include "mincw/counting.hpp"
#include "mincw/report.hpp"

namespace py = pybind11;
using namespace mincw;

namespace {

py::object to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(to_py(v));
      return out;
    }
    default: {
      py::dict out;
      for (const auto& [key, v] : j.items()) out[py::str(key)] = to_py(v);
      return out;
    }
  }
}

BinaryCode code_from_rows(const std::vector<std::string>& rows) {
  std::vector<BitVec> v;
  for (const auto& r : rows) v.push_back(BitVec::parse(r));
  return BinaryCode(v);
}

SearchOptions options(std::uint64_t budget, unsigned threads) {
  SearchOptions o;
  o.budget = budget;
  o.threads = threads;
  return o;
}

ConjectureMode parse_mode(const std::string& mode) {
  if (mode == "exhaustive") return ConjectureMode::Exhaustive;
  if (mode == "local-search") return ConjectureMode::LocalSearch;
  if (mode == "auto") return ConjectureMode::Auto;
  throw std::invalid_argument("mode must be exhaustive, local-search or auto");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minimal codewords of binary linear codes: enumeration, counting formula, M_2(n, k) search and bounds.";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<InvalidCodeError>(m, "InvalidCodeError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def(
      "minimal_codewords",
      [](const std::vector<std::string>& rows) {
        std::vector<std::string> out;
        for (const auto& w : minimal_codewords_systematic(code_from_rows(rows)).words) out.push_back(w.to_string());
        return out;
      },
      py::arg("rows"), "Minimal codewords of the code generated by the given '0'/'1' rows, sorted.");

  m.def(
      "analyze", [](const std::vector<std::string>& rows) { return to_py(to_json(analyze_code(code_from_rows(rows)))); },
      py::arg("rows"));

  m.def(
      "count",
      [](int t, const std::vector<Count>& counts) { return count_general(AVector::from_dense(t, counts)); },
      py::arg("t"), py::arg("counts"), "M from a dense a-vector of length 2^t.");

  m.def(
      "count_report",
      [](int t, const std::vector<Count>& counts) { return to_py(count_report_json(AVector::from_dense(t, counts))); },
      py::arg("t"), py::arg("counts"));

  m.def(
      "catalog", [](int t) { return to_py(to_json(build_catalog(t))); }, py::arg("t"));

  m.def(
      "maxmin",
      [](int n, int k, std::uint64_t budget, unsigned threads) {
        MaxMinResult r;
        {
          py::gil_scoped_release release;
          r = maxmin(n, k, options(budget, threads));
        }
        return to_py(to_json(r));
      },
      py::arg("n"), py::arg("k"), py::arg("budget") = kDefaultNodeBudget, py::arg("threads") = 0);

  m.def(
      "table",
      [](int n_max, int t_cap, std::uint64_t budget, unsigned threads) {
        TableResult r;
        {
          py::gil_scoped_release release;
          r = table(n_max, t_cap, options(budget, threads));
        }
        return to_py(to_json(r));
      },
      py::arg("n_max"), py::arg("t_cap") = 4, py::arg("budget") = kDefaultNodeBudget, py::arg("threads") = 0);

  m.def(
      "table_csv",
      [](int n_max, int t_cap) {
        py::gil_scoped_release release;
        return table_csv(table(n_max, t_cap));
      },
      py::arg("n_max"), py::arg("t_cap") = 4);

  m.def(
      "bounds", [](int n, int k) { return to_py(to_json(bounds_report(n, k))); }, py::arg("n"), py::arg("k"));

  m.def(
      "census",
      [](int n, int k, bool exact_length, unsigned threads) {
        CensusResult r;
        {
          py::gil_scoped_release release;
          r = exact_length ? census_max(n, k, options(kDefaultNodeBudget, threads))
                           : census_max_folded(n, k, options(kDefaultNodeBudget, threads));
        }
        return to_py(to_json(r));
      },
      py::arg("n"), py::arg("k"), py::arg("exact_length") = false, py::arg("threads") = 0);

  m.def(
      "conjecture_t3",
      [](int k_min, int k_max, const std::string& mode, std::uint64_t seed) {
        ConjectureT3Report r;
        const auto md = parse_mode(mode);
        {
          py::gil_scoped_release release;
          r = check_conjecture_t3(k_min, k_max, md, seed);
        }
        return to_py(to_json(r));
      },
      py::arg("k_min"), py::arg("k_max"), py::arg("mode") = "auto", py::arg("seed") = 0);

  m.def(
      "conjecture_leading",
      [](int t, int k_min, int k_max) {
        LeadingReport r;
        {
          py::gil_scoped_release release;
          r = check_conjecture_leading(t, k_min, k_max);
        }
        return to_py(to_json(r));
      },
      py::arg("t"), py::arg("k_min"), py::arg("k_max"));
}
