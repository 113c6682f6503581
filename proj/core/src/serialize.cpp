#include "coset/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace coset {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

// Integral values become JSON integers, everything else a "p/q" string.
ordered_json value_json(const Rational& x) {
  if (x.get_den() == 1) return integer_json(x.get_num());
  return to_string(x);
}

ordered_json label_json(int r, int s) { return ordered_json::array({r, s}); }

template <class Sum>
ordered_json sum_json(const Sum& sum) {
  ordered_json out = ordered_json::array();
  for (const auto& [label, mult] : sum) {
    out.push_back({{"r", label.r()}, {"s", label.s()}, {"mult", mult}});
  }
  return out;
}

ordered_json module_sum(const ModuleSum& sum) {
  ordered_json out = ordered_json::array();
  for (const auto& [label, mult] : sum) {
    out.push_back({{"r", label.r}, {"s", label.s}, {"mult", mult}});
  }
  return out;
}

ordered_json report(const VerificationReport& r) {
  ordered_json rows = ordered_json::array();
  for (const ReportRow& row : r.rows) {
    ordered_json coeffs = ordered_json::array();
    for (const Rational& c : row.coeffs) coeffs.push_back(value_json(c));
    rows.push_back({{"label", row.label}, {"coeffs", coeffs}});
  }
  ordered_json j;
  j["check"] = r.check;
  j["order"] = r.order;
  j["rows"] = rows;
  j["pass"] = r.pass;
  j["comparisons"] = r.comparisons.size();
  std::size_t failed = 0;
  for (const auto& c : r.comparisons) failed += c.match ? 0 : 1;
  j["mismatches"] = failed;
  if (const CoefficientCheck* bad = r.first_mismatch()) {
    j["first_mismatch"] = {{"what", bad->what},
                           {"exponent", to_string(bad->exponent)},
                           {"lhs", to_string(bad->lhs)},
                           {"rhs", to_string(bad->rhs)}};
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string series_to_json(const FracSeries& s) {
  ordered_json coeffs = ordered_json::array();
  for (const Rational& c : s.coeffs()) coeffs.push_back(to_string(c));
  ordered_json j;
  j["denominator"] = s.denominator();
  j["lowest"] = s.lowest();
  j["coeffs"] = coeffs;
  j["order"] = s.order() ? ordered_json(*s.order()) : ordered_json(nullptr);
  return dump(j);
}

FracSeries series_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    std::optional<std::int64_t> order;
    if (!j.at("order").is_null()) order = j.at("order").get<std::int64_t>();
    return FracSeries(j.at("denominator").get<std::int64_t>(), j.at("lowest").get<std::int64_t>(),
                      std::move(coeffs), order);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed series JSON: ") + e.what());
  }
}

std::string series_to_csv(const FracSeries& s) {
  std::ostringstream out;
  out << "exponent,coefficient\n";
  for (std::size_t k = 0; k < s.coeffs().size(); ++k) {
    if (s.coeffs()[k] == 0) continue;
    const Rational e = frac(s.lowest() + static_cast<long>(k), s.denominator());
    out << to_string(e) << ',' << to_string(s.coeffs()[k]) << '\n';
  }
  return out.str();
}

std::string kac_table_json(const MinimalModel& m) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : kac_table(m)) {
    ordered_json r = ordered_json::array();
    for (const Rational& h : row) r.push_back(to_string(h));
    rows.push_back(r);
  }
  ordered_json j;
  j["p"] = m.p();
  j["q"] = m.q();
  j["central_charge"] = to_string(central_charge(m));
  j["rows"] = rows;
  return dump(j);
}

std::string kac_table_csv(const MinimalModel& m) {
  std::ostringstream out;
  out << "r\\s";
  for (int s = 1; s < m.p(); ++s) out << ',' << s;
  out << '\n';
  int r = 1;
  for (const auto& row : kac_table(m)) {
    out << r++;
    for (const Rational& h : row) out << ',' << to_string(h);
    out << '\n';
  }
  return out.str();
}

std::string module_sum_json(const ModuleSum& sum) { return dump(module_sum(sum)); }

std::string module_sum_json(const ExtModuleSum& sum) { return dump(sum_json(sum)); }

std::string branch_terms_json(int level, int r, const std::vector<BranchTerm>& terms) {
  const MinimalModel vir = branching_model(level);
  ordered_json arr = ordered_json::array();
  for (const BranchTerm& t : terms) {
    arr.push_back({{"sl2", {{"level", t.sl2.level}, {"i", t.sl2.i}}},
                   {"vir", label_json(t.vir.r, t.vir.s)},
                   {"parity", t.parity == Parity::even ? "even" : "odd"},
                   {"weight", to_string(t.weight)}});
  }
  const LowestSpace low = lowest_space(level, r);
  ordered_json j;
  j["level"] = level;
  j["r"] = r;
  j["model"] = {vir.p(), vir.q()};
  j["terms"] = arr;
  j["lowest_space"] = {{"weight", to_string(low.weight)}, {"dimension", low.dimension}};
  return dump(j);
}

std::string lowest_spaces_json(int level) {
  ordered_json arr = ordered_json::array();
  for (const OspLabel m : osp_modules(level)) {
    const LowestSpace low = lowest_space(level, m.r);
    arr.push_back({{"r", m.r}, {"weight", to_string(low.weight)}, {"dimension", low.dimension}});
  }
  ordered_json j;
  j["level"] = level;
  j["central_charge"] = to_string(osp_central_charge(level));
  j["modules"] = arr;
  return dump(j);
}

std::string report_json(const VerificationReport& r) { return dump(report(r)); }

std::string reports_json(const std::vector<VerificationReport>& reports) {
  ordered_json arr = ordered_json::array();
  bool pass = true;
  for (const auto& r : reports) {
    arr.push_back(report(r));
    pass = pass && r.pass;
  }
  ordered_json j;
  j["checks"] = arr;
  j["pass"] = pass;
  return dump(j);
}

std::string table2_json(const Table2& t) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    ordered_json coeffs = ordered_json::array();
    for (const Integer& c : t.rows[i]) coeffs.push_back(integer_json(c));
    rows.push_back({{"label", t.labels[i]}, {"coeffs", coeffs}});
  }
  bool pass = t.rows[Table2::target_row] == t.rows[Table2::sum_row];
  ordered_json j;
  j["check"] = "table2";
  j["order"] = t.order;
  j["lead"] = to_string(decomposition_lead());
  j["rows"] = rows;
  j["pass"] = pass;
  return dump(j);
}

std::string table2_csv(const Table2& t) {
  std::ostringstream out;
  out << "row";
  for (int k = 0; k <= t.order; ++k) out << ",q^" << k;
  out << '\n';
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    out << csv_field(t.labels[i]);
    for (const Integer& c : t.rows[i]) out << ',' << c.get_str();
    out << '\n';
  }
  return out.str();
}

std::string ladder_json(const std::vector<LadderEntry>& ladder) {
  ordered_json arr = ordered_json::array();
  for (const LadderEntry& e : ladder) {
    ordered_json j;
    j["name"] = e.name;
    j["label"] = label_json(e.label.r, e.label.s);
    j["partner"] = {{"level", e.partner.level}, {"r", e.partner.r}};
    j["candidates"] = {to_string(e.candidates.first), to_string(e.candidates.second)};
    j["level"] = to_string(e.level);
    j["column"] = e.column;
    j["in_range"] = e.in_range;
    if (e.in_range) {
      j["row_coeff"] = integer_json(e.row_coeff);
      j["target_coeff"] = integer_json(e.target_coeff);
      j["column_sum"] = integer_json(e.column_sum);
      j["extra_if_reducible"] = e.extra_if_reducible;
      j["consistent"] = e.consistent;
    }
    arr.push_back(j);
  }
  return dump(arr);
}

std::string census_json(const ExtCensus& census, const std::vector<ExtIrreducible>& listed) {
  ordered_json orbits = ordered_json::array();
  for (std::size_t i = 0; i < census.orbits.size(); ++i) {
    const auto& [a, b] = census.orbit_pairs[i];
    orbits.push_back({{"label", label_json(census.orbits[i].r(), census.orbits[i].s())},
                      {"constituents", {label_json(a.r, a.s), label_json(b.r, b.s)}}});
  }
  ordered_json fixed = ordered_json::array();
  for (KacLabel l : census.fixed) fixed.push_back(label_json(l.r, l.s));
  ordered_json irr = ordered_json::array();
  for (const ExtIrreducible& e : listed) {
    irr.push_back({{"listed", label_json(e.r, e.s)},
                   {"canonical", label_json(e.label.r(), e.label.s())},
                   {"fixed_point", e.fixed_point},
                   {"coincides", e.coincides}});
  }
  ordered_json j;
  j["orbits"] = orbits;
  j["fixed"] = fixed;
  j["orbit_count"] = census.orbits.size();
  j["fixed_count"] = census.fixed.size();
  j["label_count"] = 2 * census.orbits.size() + census.fixed.size();
  j["irreducibles"] = irr;
  return dump(j);
}

std::string ext_fusion_table_json() {
  const auto listed = ext_irreducibles();
  ordered_json arr = ordered_json::array();
  for (const ExtIrreducible& a : listed) {
    for (const ExtIrreducible& b : listed) {
      ordered_json entry;
      entry["a"] = label_json(a.r, a.s);
      entry["b"] = label_json(b.r, b.s);
      entry["result"] = sum_json(ext_fuse(a.label, b.label));
      if (a.fixed_point || b.fixed_point) entry["fixed_point"] = true;
      arr.push_back(entry);
    }
  }
  return dump(arr);
}

std::string vir_fusion_table_json(const MinimalModel& m) {
  ordered_json arr = ordered_json::array();
  for (KacLabel a : m.labels()) {
    for (KacLabel b : m.labels()) {
      arr.push_back({{"a", label_json(a.r, a.s)},
                     {"b", label_json(b.r, b.s)},
                     {"result", module_sum(fuse(m, a, b))}});
    }
  }
  return dump(arr);
}

}  // namespace coset
