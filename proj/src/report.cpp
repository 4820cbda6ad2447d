#include "mincw/report.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

#include "mincw/counting.hpp"
#include "mincw/rational.hpp"

namespace mincw {

namespace {

Json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Json rational_json(const Rational& r) {
  Json j;
  j["exact"] = to_string(r);
  j["floor"] = big_json(floor_of(r));
  j["approx"] = to_decimal(r, 4);
  return j;
}

Json bits_json(const std::vector<BitVec>& words) {
  Json out = Json::array();
  for (const auto& w : words) out.push_back(w.to_string());
  return out;
}

std::string tauset_string(int t, TauSet s) {
  std::string out = "{";
  bool first = true;
  for (const auto& m : MGCatalog::members(t, s)) {
    if (!first) out += ", ";
    out += m.to_string();
    first = false;
  }
  return out + "}";
}

std::string optional_rational_text(const std::optional<Rational>& r) {
  if (!r) return "absent";
  return to_string(*r) + " (~" + to_decimal(*r, 4) + ")";
}

}  // namespace

CodeAnalysis analyze_code(const BinaryCode& code, std::uint64_t budget) {
  CodeAnalysis a;
  a.n = code.n();
  a.k = code.k();
  a.t = code.n() - code.k();
  a.systematic = to_systematic(code);
  a.a = a_vector(a.systematic);
  a.minimal = minimal_codewords_systematic(code, budget);
  if (a.t <= kMaxCatalogT) a.formula = count_general(a.a);
  if (a.k <= kBruteForceMaxK) a.bruteforce = minimal_codewords_bruteforce(code).count();

  a.reduction = reduce(code);
  a.reduction_total = a.reduction.trace.delta;
  for (const auto& c : a.reduction.components) a.reduction_total += minimal_codewords_systematic(c, budget).count();

  const Count m = a.minimal.count();
  if (a.formula && *a.formula != m) {
    a.disagreements.push_back("counting formula gives " + std::to_string(*a.formula) + ", enumerator " + std::to_string(m));
  }
  if (a.bruteforce && *a.bruteforce != m) {
    a.disagreements.push_back("brute force gives " + std::to_string(*a.bruteforce) + ", enumerator " + std::to_string(m));
  }
  if (a.reduction_total != m) {
    a.disagreements.push_back("reduction gives " + std::to_string(a.reduction_total) + ", enumerator " + std::to_string(m));
  }
  return a;
}

Json avector_json(const AVector& a) {
  Json j = Json::object();
  if (a.t() <= kMaxCatalogT) {
    const auto d = a.dense();
    for (std::size_t tau = 0; tau < d.size(); ++tau) j[tau_string(a.t(), tau)] = d[tau];
  } else {
    for (const auto& [tau, c] : a.nonzero()) j[tau_string(a.t(), tau)] = c;
  }
  return j;
}

Json count_report_json(const AVector& a) {
  Json j;
  j["t"] = a.t();
  j["k"] = a.k();
  j["a_vector"] = avector_json(a);
  if (a.t() == 0) {
    j["M"] = a.k();
    j["breakdown"] = {{"singletons", a.k()}, {"pair_term", 0}, {"mg_terms_by_size", Json::object()}};
    return j;
  }
  const auto b = count_breakdown(a, cached_catalog(a.t()));
  j["M"] = b.total;
  Json sizes = Json::object();
  for (const auto& [s, v] : b.mg_terms_by_size) sizes[std::to_string(s)] = v;
  j["breakdown"] = {{"singletons", b.singletons}, {"pair_term", b.pair_term}, {"mg_terms_by_size", sizes}};
  return j;
}

Json to_json(const CodeAnalysis& a) {
  Json j;
  j["n"] = a.n;
  j["k"] = a.k;
  j["t"] = a.t;
  j["column_permutation"] = a.systematic.col_perm;
  j["a_vector"] = avector_json(a.a);
  j["count"] = a.minimal.count();
  j["M_formula"] = a.formula ? Json(*a.formula) : Json(nullptr);
  j["M_bruteforce"] = a.bruteforce ? Json(*a.bruteforce) : Json(nullptr);
  j["words"] = bits_json(a.minimal.words);
  Json steps = Json::array();
  for (const auto& s : a.reduction.trace.steps) steps.push_back({{"kind", to_string(s.kind)}, {"detail", s.detail}});
  Json comps = Json::array();
  for (const auto& c : a.reduction.components) comps.push_back({{"n", c.n()}, {"k", c.k()}});
  j["reduction"] = {{"steps", steps}, {"components", comps}, {"delta", a.reduction.trace.delta}, {"M", a.reduction_total}};
  j["consistent"] = a.disagreements.empty();
  j["disagreements"] = a.disagreements;
  return j;
}

Json to_json(const MGCatalog& c) {
  Json j;
  j["t"] = c.t();
  Json counts = Json::object();
  for (const auto& [s, n] : c.size_counts()) counts[std::to_string(s)] = n;
  j["size_counts"] = counts;
  Json sets = Json::array();
  for (TauSet s : c.sets()) sets.push_back(bits_json(MGCatalog::members(c.t(), s)));
  j["sets"] = sets;
  return j;
}

Json to_json(const MaxMinResult& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["t"] = r.t;
  j["value"] = r.value;
  j["method"] = to_string(r.method);
  j["exact"] = r.exact;
  j["witness"] = r.witness ? avector_json(*r.witness) : Json(nullptr);
  j["nodes"] = r.nodes;
  return j;
}

Json to_json(const TableResult& t) {
  Json j;
  j["n_max"] = t.n_max;
  j["t_cap"] = t.t_cap;
  Json cells = Json::array();
  for (const auto& c : t.cells) {
    Json cell;
    cell["n"] = c.n;
    cell["k"] = c.k;
    if (c.result) {
      cell["value"] = c.result->value;
      cell["method"] = to_string(c.result->method);
      cell["exact"] = c.result->exact;
      cell["witness"] = c.result->witness ? avector_json(*c.result->witness) : Json(nullptr);
    } else {
      cell["value"] = nullptr;
      cell["method"] = "unavailable";
    }
    cell["reference"] = c.reference ? Json(*c.reference) : Json(nullptr);
    cell["inconsistent_reference"] = c.inconsistent_reference;
    if (!c.note.empty()) cell["note"] = c.note;
    cells.push_back(cell);
  }
  j["cells"] = cells;
  return j;
}

Json to_json(const BoundsReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["t"] = r.t;
  j["q"] = r.q;
  j["trivial_ub"] = r.trivial_ub ? big_json(*r.trivial_ub) : Json(nullptr);
  j["matroid_ub"] = big_json(r.matroid_ub);
  j["binomial_sum_ub"] = big_json(r.binomial_sum_ub);
  j["improved_ub"] = r.improved_ub ? rational_json(r.improved_ub->value) : Json(nullptr);
  j["agrell_ub"] = r.agrell_ub ? rational_json(*r.agrell_ub) : Json(nullptr);
  j["agrell_note"] = "formula as printed; not guaranteed to bound M";
  j["random_coding_lb"] = r.random_coding_lb ? rational_json(*r.random_coding_lb) : Json(nullptr);
  j["random_coding_note"] = "reference estimate";
  j["projective_base_lb"] = big_json(r.projective_base_lb);
  j["kashyap_lb"] = r.kashyap_lb;
  j["kashyap_note"] = "projective codes only";
  j["exact"] = r.exact ? to_json(*r.exact) : Json(nullptr);
  if (!r.exact_note.empty()) j["exact_note"] = r.exact_note;
  return j;
}

Json to_json(const CensusResult& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["max_m"] = r.max_m;
  j["witness_columns"] = bits_json(r.witness_columns);
  j["codes_scanned"] = r.codes_scanned;
  return j;
}

Json to_json(const ConjectureT3Report& r) {
  Json j;
  j["conjecture"] = "t3";
  j["k_min"] = r.k_min;
  j["k_max"] = r.k_max;
  j["seed"] = r.seed;
  j["supported"] = r.supported();
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json x;
    x["k"] = row.k;
    x["mode"] = to_string(row.mode);
    x["verdict"] = to_string(row.verdict);
    x["conjectured_value"] = row.conjectured_value;
    x["found_value"] = row.found_value;
    x["conjectured"] = avector_json(row.conjectured);
    x["found"] = avector_json(row.found);
    if (row.mode == ConjectureMode::LocalSearch) x["conjectured_is_local_max"] = row.conjectured_is_local_max;
    rows.push_back(x);
  }
  j["rows"] = rows;
  return j;
}

Json to_json(const LeadingReport& r) {
  Json j;
  j["conjecture"] = "leading";
  j["t"] = r.t;
  j["k_min"] = r.k_min;
  j["k_max"] = r.k_max;
  j["exact"] = r.exact;
  j["supported"] = r.supported();
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json x;
    x["k"] = row.k;
    x["max_value"] = row.max_value;
    x["projective_point_value"] = row.projective_point_value;
    x["all_on_projective_basis"] = row.all_on_projective_basis;
    x["holds"] = row.holds;
    Json ms = Json::array();
    for (const auto& m : row.maximizers) ms.push_back(avector_json(m));
    x["maximizers"] = ms;
    x["maximizers_truncated"] = row.maximizers_truncated;
    rows.push_back(x);
  }
  j["rows"] = rows;
  return j;
}

std::string to_text(const CodeAnalysis& a) {
  std::ostringstream os;
  os << "n = " << a.n << ", k = " << a.k << ", t = " << a.t << '\n';
  os << "column permutation:";
  for (int c : a.systematic.col_perm) os << ' ' << c;
  os << '\n';
  os << "a-vector: " << a.a.to_string() << '\n';
  os << "M (systematic enumerator) = " << a.minimal.count() << '\n';
  if (a.formula) {
    os << "M (counting formula) = " << *a.formula << '\n';
  } else {
    os << "M (counting formula) = n/a (t > 5)\n";
  }
  if (a.bruteforce) os << "M (brute force) = " << *a.bruteforce << '\n';
  os << "reduction:";
  if (a.reduction.trace.steps.empty()) os << " none";
  os << '\n';
  for (const auto& s : a.reduction.trace.steps) os << "  " << to_string(s.kind) << ": " << s.detail << '\n';
  os << "  components:";
  for (const auto& c : a.reduction.components) os << " [" << c.n() << "," << c.k() << "]";
  os << ", delta = " << a.reduction.trace.delta << ", M = " << a.reduction_total << '\n';
  os << "minimal codewords:\n";
  for (const auto& w : a.minimal.words) os << "  " << w << '\n';
  os << "count = " << a.minimal.count() << '\n';
  for (const auto& d : a.disagreements) os << "MISMATCH: " << d << '\n';
  return os.str();
}

std::string to_text(const MGCatalog& c) {
  std::ostringstream os;
  os << "t = " << c.t() << ": " << c.size() << " minimal generating sets\n";
  for (const auto& [s, n] : c.size_counts()) {
    os << "size " << s << ": " << n << '\n';
    for (TauSet set : c.sets_of_size(s)) os << "  " << tauset_string(c.t(), set) << '\n';
  }
  return os.str();
}

std::string to_text(const MaxMinResult& r) {
  std::ostringstream os;
  os << "M_2(" << r.n << "," << r.k << ") = " << r.value;
  if (!r.exact) os << " (lower bound: budget exceeded)";
  os << '\n';
  os << "method: " << to_string(r.method) << '\n';
  if (r.witness) os << "witness: " << r.witness->to_string() << '\n';
  return os.str();
}

std::string to_text(const BoundsReport& r) {
  std::ostringstream os;
  os << "bounds for n = " << r.n << ", k = " << r.k << " (t = " << r.t << ")\n";
  os << "  trivial upper bound:       " << (r.trivial_ub ? to_string(*r.trivial_ub) : std::string("too large")) << '\n';
  os << "  matroid upper bound:       " << to_string(r.matroid_ub) << '\n';
  os << "  binomial-sum upper bound:  " << to_string(r.binomial_sum_ub) << '\n';
  if (r.improved_ub) {
    os << "  improved upper bound:      " << to_string(r.improved_ub->floor) << " (" << to_string(r.improved_ub->value)
       << ")\n";
  }
  os << "  Agrell value (unverified): " << optional_rational_text(r.agrell_ub) << '\n';
  os << "  random-coding estimate:    " << optional_rational_text(r.random_coding_lb) << '\n';
  os << "  projective-base lower bound: " << to_string(r.projective_base_lb) << '\n';
  os << "  projective-code lower bound: " << r.kashyap_lb << " (projective codes only)\n";
  if (r.exact) {
    os << "  exact: " << r.exact->value << " [" << to_string(r.exact->method) << "]";
    if (!r.exact->exact) os << " (lower bound: budget exceeded)";
    os << '\n';
  } else {
    os << "  exact: " << r.exact_note << '\n';
  }
  return os.str();
}

std::string bounds_grid_csv(const std::vector<BoundsReport>& reports) {
  std::ostringstream os;
  os << "n,k,t,exact,matroid_ub,binomial_sum_ub,improved_ub,trivial_ub,agrell,random_coding,projective_base_lb,"
        "kashyap_lb\n";
  for (const auto& r : reports) {
    os << r.n << ',' << r.k << ',' << r.t << ',';
    if (r.exact) os << r.exact->value;
    os << ',' << to_string(r.matroid_ub) << ',' << to_string(r.binomial_sum_ub) << ',';
    if (r.improved_ub) os << to_string(r.improved_ub->floor);
    os << ',';
    if (r.trivial_ub) os << to_string(*r.trivial_ub);
    os << ',';
    if (r.agrell_ub) os << to_string(*r.agrell_ub);
    os << ',';
    if (r.random_coding_lb) os << to_string(*r.random_coding_lb);
    os << ',' << to_string(r.projective_base_lb) << ',' << r.kashyap_lb << '\n';
  }
  return os.str();
}

std::string bounds_grid_text(const std::vector<BoundsReport>& reports) {
  std::ostringstream os;
  os << std::setw(3) << "n" << std::setw(4) << "k" << std::setw(8) << "exact" << std::setw(10) << "matroid"
     << std::setw(10) << "binsum" << std::setw(10) << "improved" << std::setw(10) << "pbase" << '\n';
  for (const auto& r : reports) {
    os << std::setw(3) << r.n << std::setw(4) << r.k << std::setw(8)
       << (r.exact ? std::to_string(r.exact->value) : std::string("-")) << std::setw(10) << to_string(r.matroid_ub)
       << std::setw(10) << to_string(r.binomial_sum_ub) << std::setw(10)
       << (r.improved_ub ? to_string(r.improved_ub->floor) : std::string("-")) << std::setw(10)
       << to_string(r.projective_base_lb) << '\n';
  }
  return os.str();
}

std::string to_text(const CensusResult& r) {
  std::ostringstream os;
  os << "census n = " << r.n << ", k = " << r.k << ": max M = " << r.max_m << " over " << r.codes_scanned
     << " full-rank column sets\n";
  os << "witness columns:";
  for (const auto& c : r.witness_columns) os << ' ' << c;
  os << '\n';
  return os.str();
}

std::string to_text(const ConjectureT3Report& r) {
  std::ostringstream os;
  os << "t = 3 conjecture, k = " << r.k_min << ".." << r.k_max << ", seed " << r.seed << '\n';
  os << std::setw(4) << "k" << std::setw(14) << "mode" << std::setw(10) << "found" << std::setw(12) << "conjectured"
     << "  verdict\n";
  for (const auto& row : r.rows) {
    os << std::setw(4) << row.k << std::setw(14) << to_string(row.mode) << std::setw(10) << row.found_value
       << std::setw(12) << row.conjectured_value << "  " << to_string(row.verdict) << '\n';
  }
  for (const auto& row : r.rows) {
    if (row.verdict == Verdict::Unequal || row.verdict == Verdict::Counterexample) {
      os << "k = " << row.k << ": found " << row.found.to_string() << " beats " << row.conjectured.to_string() << '\n';
    }
  }
  os << (r.supported() ? "supported on every k\n" : "not supported\n");
  return os.str();
}

std::string to_text(const LeadingReport& r) {
  std::ostringstream os;
  os << "leading-term conjecture, t = " << r.t << ", k = " << r.k_min << ".." << r.k_max << '\n';
  os << std::setw(4) << "k" << std::setw(12) << "max" << std::setw(12) << "basis pt" << std::setw(6) << "#max"
     << "  holds\n";
  for (const auto& row : r.rows) {
    os << std::setw(4) << row.k << std::setw(12) << row.max_value << std::setw(12) << row.projective_point_value
       << std::setw(6) << row.maximizers.size() << "  " << (row.holds ? "yes" : "no") << '\n';
  }
  if (!r.exact) os << "search stopped at the budget; results are partial\n";
  os << (r.supported() ? "supported on every k\n" : "not supported\n");
  return os.str();
}

}  // namespace mincw
