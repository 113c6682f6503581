#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "coset/affine_chars.hpp"
#include "coset/coset_verify.hpp"
#include "coset/ext_fusion.hpp"
#include "coset/minimal_model.hpp"
#include "coset/serialize.hpp"

namespace coset::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int order = 20;
  int max_order = 200;
  std::string format = "json";
  std::string output;
};

struct Result {
  std::string text;
  int code = exit_ok;
};

std::pair<int, int> parse_pair(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError(std::string(what) + " must look like r,s");
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const int a = std::stoi(text.substr(0, comma), &used_a);
    const int b = std::stoi(text.substr(comma + 1), &used_b);
    if (used_a != comma || used_b != text.size() - comma - 1) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError(std::string(what) + " must look like r,s, got '" + text + "'");
  }
}

KacLabel parse_kac(const std::string& text, const char* what) {
  const auto [r, s] = parse_pair(text, what);
  return {r, s};
}

Parity parse_parity(const std::string& text) {
  if (text == "even") return Parity::even;
  if (text == "odd") return Parity::odd;
  if (text == "both") return Parity::both;
  throw UsageError("parity must be even, odd or both");
}

std::string series_text(const FracSeries& s) {
  std::ostringstream out;
  if (const auto b = s.bound()) out << "# exact below q^(" << to_string(*b) << ")\n";
  for (std::size_t k = 0; k < s.coeffs().size(); ++k) {
    const Rational& c = s.coeffs()[k];
    if (c == 0) continue;
    out << to_string(c) << " q^(" << to_string(frac(s.lowest() + static_cast<long>(k), s.denominator()))
        << ")\n";
  }
  return out.str();
}

std::string rows_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  for (const ReportRow& row : rows) {
    std::string label = row.label;
    std::replace(label.begin(), label.end(), ',', ';');
    out << label;
    for (const Rational& c : row.coeffs) out << ',' << to_string(c);
    out << '\n';
  }
  return out.str();
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& c : r.comparisons) failed += c.match ? 0 : 1;
  out << r.check << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.comparisons.size()
      << " comparisons, " << failed << " mismatches, order " << r.order << ")\n";
  if (const CoefficientCheck* bad = r.first_mismatch()) {
    out << "  first mismatch: " << bad->what << " at q^(" << to_string(bad->exponent)
        << "): " << to_string(bad->lhs) << " vs " << to_string(bad->rhs) << '\n';
  }
  for (const auto& note : r.notes) out << "  " << note << '\n';
  return out.str();
}

std::string table2_text(const Table2& t) {
  std::ostringstream out;
  std::size_t width = 0;
  for (const auto& l : t.labels) width = std::max(width, l.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    out << std::left << std::setw(static_cast<int>(width)) << t.labels[i];
    for (const Integer& c : t.rows[i]) out << ' ' << c.get_str();
    out << '\n';
  }
  return out.str();
}

template <class Sum>
std::string sum_csv(const Sum& sum) {
  std::ostringstream out;
  out << "r,s,mult\n";
  for (const auto& [label, mult] : sum) {
    if constexpr (std::is_same_v<Sum, ModuleSum>) {
      out << label.r << ',' << label.s << ',' << mult << '\n';
    } else {
      out << label.r() << ',' << label.s() << ',' << mult << '\n';
    }
  }
  return out.str();
}

template <class Sum>
std::string sum_text(const Sum& sum) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [label, mult] : sum) {
    out << (first ? "" : " + ");
    first = false;
    if (mult != 1) out << mult << ' ';
    if constexpr (std::is_same_v<Sum, ModuleSum>) {
      out << "(" << label.r << "," << label.s << ")";
    } else {
      out << label.to_string();
    }
  }
  out << (first ? "0\n" : "\n");
  return out.str();
}

class Runner {
 public:
  explicit Runner(const Options& opts) : opts_(opts) {}

  const Options& opts() const { return opts_; }

  void check_order() const {
    if (opts_.max_order < 0) throw UsageError("--max-order must be >= 0");
    if (opts_.order < 0 || opts_.order > opts_.max_order) {
      throw UsageError("--order must lie in [0, " + std::to_string(opts_.max_order) + "]");
    }
  }

  // Picks the rendering for the requested format; empty renderers are
  // formats the command does not support.
  Result render(const std::function<std::string()>& json, const std::function<std::string()>& csv,
                const std::function<std::string()>& text, int code = exit_ok) const {
    const std::function<std::string()>* chosen = nullptr;
    if (opts_.format == "json") chosen = &json;
    if (opts_.format == "csv") chosen = &csv;
    if (opts_.format == "text") chosen = &text;
    if (chosen == nullptr || !*chosen) throw UsageError("format '" + opts_.format + "' not supported here");
    return {(*chosen)(), code};
  }

 private:
  const Options& opts_;
};

Result verify(const Runner& run, const std::string& check, const std::string& perturb) {
  const int order = run.opts().order;
  std::optional<Perturbation> p;
  if (!perturb.empty()) {
    Perturbation q;
    char c1 = 0;
    char c2 = 0;
    std::istringstream in(perturb);
    if (!(in >> q.summand >> c1 >> q.column >> c2 >> q.delta) || c1 != ':' || c2 != ':' || !in.eof()) {
      throw UsageError("--perturb must look like SUMMAND:COLUMN:DELTA");
    }
    if (q.summand >= decomposition_summands().size() || q.column < 0 || q.column > order) {
      throw UsageError("--perturb summand must be < 6 and column within --order");
    }
    p = q;
  }
  if (p && check != "decomposition") throw UsageError("--perturb only applies to verify decomposition");

  if (check == "table2") {
    const Table2 t = table2_report(order);
    const int code = t.rows[Table2::target_row] == t.rows[Table2::sum_row] ? exit_ok : exit_failed;
    return run.render([&] { return table2_json(t); }, [&] { return table2_csv(t); },
                      [&] { return table2_text(t); }, code);
  }

  std::vector<VerificationReport> reports;
  const int even_order = std::min(order, 10);
  if (check == "central-charge" || check == "all") reports.push_back(verify_central_charge());
  if (check == "decomposition" || check == "all") reports.push_back(verify_decomposition(order, p));
  if (check == "even-refinement" || check == "all") reports.push_back(verify_even_refinement(even_order));
  if (check == "singular-ladder" || check == "all") reports.push_back(singular_ladder_report(order));
  if (reports.empty()) throw UsageError("unknown check '" + check + "'");

  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass;
  const int code = pass ? exit_ok : exit_failed;
  return run.render(
      [&] { return reports.size() == 1 ? report_json(reports[0]) : reports_json(reports); },
      [&] {
        std::string out;
        for (const auto& r : reports) out += rows_csv(r.rows);
        return out;
      },
      [&] {
        std::string out;
        for (const auto& r : reports) out += report_text(r);
        return out;
      },
      code);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series checks for the osp(1|2) coset at c = 8/35"};
  app.name("coset");
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--order", opts.order, "Number of integer-spaced columns past the leading term")
      ->capture_default_str();
  app.add_option("--max-order", opts.max_order, "Upper limit accepted for --order")->capture_default_str();
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--output", opts.output, "Write to this file instead of stdout");

  Runner runner(opts);
  std::function<Result()> action;

  // kac-table
  int kac_p = 0;
  int kac_q = 0;
  auto* kac = app.add_subcommand("kac-table", "Conformal weights h^{r,s} of the (p,q) minimal model");
  kac->add_option("p", kac_p)->required();
  kac->add_option("q", kac_q)->required();
  kac->callback([&] {
    action = [&] {
      const MinimalModel m(kac_p, kac_q);
      return runner.render([&] { return kac_table_json(m); }, [&] { return kac_table_csv(m); },
                           [&] { return kac_table_csv(m); });
    };
  });

  // char
  auto* chr = app.add_subcommand("char", "q-character of a module");
  chr->require_subcommand(1);
  int vir_p = 0;
  int vir_q = 0;
  std::string vir_label = "1,1";
  auto* chr_vir = chr->add_subcommand("vir", "Virasoro minimal-model module");
  chr_vir->add_option("p", vir_p)->required();
  chr_vir->add_option("q", vir_q)->required();
  chr_vir->add_option("--label", vir_label, "Kac label r,s")->capture_default_str();
  int level = 1;
  int osp_r = 1;
  auto* chr_osp = chr->add_subcommand("osp", "osp(1|2) module M_r at level l");
  chr_osp->add_option("--level", level)->capture_default_str();
  chr_osp->add_option("--r", osp_r)->capture_default_str();
  int sl2_i = 0;
  auto* chr_sl2 = chr->add_subcommand("sl2", "affine sl2 module L(l,i)");
  chr_sl2->add_option("--level", level)->capture_default_str();
  chr_sl2->add_option("--i", sl2_i)->capture_default_str();
  std::string parity = "both";
  auto* chr_branch = chr->add_subcommand("branch", "Parity part of M_r through its branching");
  chr_branch->add_option("--level", level)->capture_default_str();
  chr_branch->add_option("--r", osp_r)->capture_default_str();
  chr_branch->add_option("--parity", parity)->capture_default_str();

  auto series_action = [&](std::function<FracSeries()> make) {
    action = [&, make] {
      runner.check_order();
      const FracSeries s = make();
      return runner.render([&] { return series_to_json(s); }, [&] { return series_to_csv(s); },
                           [&] { return series_text(s); });
    };
  };
  chr_vir->callback([&] {
    series_action([&] {
      return vir_character(MinimalModel(vir_p, vir_q), parse_kac(vir_label, "--label"), opts.order);
    });
  });
  chr_osp->callback([&] { series_action([&] { return osp_character({level, osp_r}, opts.order); }); });
  chr_sl2->callback([&] { series_action([&] { return sl2_character({level, sl2_i}, opts.order); }); });
  chr_branch->callback([&] {
    series_action([&] { return branch_character(level, osp_r, parse_parity(parity), opts.order); });
  });

  // verify
  std::string check;
  std::string perturb;
  auto* ver = app.add_subcommand("verify", "Run a verification and report pass/fail");
  ver->add_option("check", check,
                  "central-charge, decomposition, table2, even-refinement, singular-ladder or all")
      ->required();
  ver->add_option("--perturb", perturb, "Add DELTA to summand SUMMAND at COLUMN (SUMMAND:COLUMN:DELTA)");
  ver->callback([&] {
    action = [&] {
      runner.check_order();
      return verify(runner, check, perturb);
    };
  });

  // fusion
  auto* fus = app.add_subcommand("fusion", "Fusion products");
  fus->require_subcommand(1);
  int fus_p = 0;
  int fus_q = 0;
  std::string fa;
  std::string fb;
  bool table = false;
  auto* fus_vir = fus->add_subcommand("vir", "Minimal-model fusion");
  fus_vir->add_option("p", fus_p)->required();
  fus_vir->add_option("q", fus_q)->required();
  fus_vir->add_option("--a", fa, "Kac label r,s");
  fus_vir->add_option("--b", fb, "Kac label r,s");
  fus_vir->add_flag("--table", table, "All products of canonical labels");
  auto* fus_ext = fus->add_subcommand("ext", "Fusion of the simple-current extension of (10,7)");
  fus_ext->add_option("--a", fa, "Extended label r,s");
  fus_ext->add_option("--b", fb, "Extended label r,s");
  fus_ext->add_flag("--table", table, "All products of the listed labels");
  fus_vir->callback([&] {
    action = [&] {
      const MinimalModel m(fus_p, fus_q);
      if (table) {
        return runner.render([&] { return vir_fusion_table_json(m); }, {}, {});
      }
      if (fa.empty() || fb.empty()) throw UsageError("fusion vir needs --a and --b, or --table");
      const ModuleSum sum = fuse(m, parse_kac(fa, "--a"), parse_kac(fb, "--b"));
      return runner.render([&] { return module_sum_json(sum); }, [&] { return sum_csv(sum); },
                           [&] { return sum_text(sum); });
    };
  });
  fus_ext->callback([&] {
    action = [&] {
      if (table) return runner.render([] { return ext_fusion_table_json(); }, {}, {});
      if (fa.empty() || fb.empty()) throw UsageError("fusion ext needs --a and --b, or --table");
      const auto [ar, as] = parse_pair(fa, "--a");
      const auto [br, bs] = parse_pair(fb, "--b");
      const ExtModuleSum sum = ext_fuse(ExtLabel::from(ar, as), ExtLabel::from(br, bs));
      return runner.render([&] { return module_sum_json(sum); }, [&] { return sum_csv(sum); },
                           [&] { return sum_text(sum); });
    };
  });

  // classify
  auto* cls = app.add_subcommand("classify", "Orbits and fixed points of the simple current on (10,7)");
  cls->callback([&] {
    action = [&] {
      const ExtCensus census = classify_ext_modules();
      const auto listed = ext_irreducibles();
      return runner.render(
          [&] { return census_json(census, listed); },
          [&] {
            std::ostringstream o;
            o << "kind,r,s,constituents\n";
            for (std::size_t i = 0; i < census.orbits.size(); ++i) {
              const auto& [a, b] = census.orbit_pairs[i];
              o << "orbit," << census.orbits[i].r() << ',' << census.orbits[i].s() << ",(" << a.r << ' '
                << a.s << ")(" << b.r << ' ' << b.s << ")\n";
            }
            for (KacLabel l : census.fixed) o << "fixed," << l.r << ',' << l.s << ",(" << l.r << ' ' << l.s << ")\n";
            return o.str();
          },
          [&] {
            std::ostringstream o;
            o << census.orbits.size() << " free orbits, " << census.fixed.size() << " fixed points, "
              << 2 * census.orbits.size() + census.fixed.size() << " labels\n";
            for (KacLabel l : census.fixed) o << "fixed (" << l.r << "," << l.s << ")\n";
            return o.str();
          });
    };
  });

  // weights
  int w_level = 2;
  int w_r = 0;
  std::string w_parity = "both";
  auto* wts = app.add_subcommand("weights", "Lowest weights of osp(1|2) modules and their branching terms");
  wts->add_option("--level", w_level)->capture_default_str();
  wts->add_option("--r", w_r, "Module M_r; omit to list all modules");
  wts->add_option("--parity", w_parity)->capture_default_str();
  wts->callback([&] {
    action = [&] {
      if (w_r == 0) {
        return runner.render([&] { return lowest_spaces_json(w_level); }, {}, [&] {
          std::ostringstream o;
          for (const OspLabel m : osp_modules(w_level)) {
            const LowestSpace low = lowest_space(w_level, m.r);
            o << "M_" << m.r << ": weight " << to_string(low.weight) << ", dimension " << low.dimension << '\n';
          }
          return o.str();
        });
      }
      const auto terms = branch_terms(w_level, w_r, parse_parity(w_parity));
      return runner.render([&] { return branch_terms_json(w_level, w_r, terms); },
                           [&] {
                             std::ostringstream o;
                             o << "i,r,s,parity,weight\n";
                             for (const auto& t : terms) {
                               o << t.sl2.i << ',' << t.vir.r << ',' << t.vir.s << ','
                                 << (t.parity == Parity::even ? "even" : "odd") << ',' << to_string(t.weight)
                                 << '\n';
                             }
                             return o.str();
                           },
                           {});
    };
  });

  // singular
  int alpha = 0;
  int beta = 0;
  std::string t_text;
  std::vector<int> model;
  std::string s_label;
  auto* sing = app.add_subcommand("singular", "h_{alpha,beta}(t), singular weights, or the ladder report");
  sing->add_option("--alpha", alpha);
  sing->add_option("--beta", beta);
  sing->add_option("--t", t_text, "Rational t, e.g. 10/7");
  sing->add_option("--model", model, "p q")->expected(2);
  sing->add_option("--label", s_label, "Kac label r,s for --model");
  sing->callback([&] {
    action = [&] {
      if (!t_text.empty()) {
        Rational t;
        try {
          t = parse_rational(t_text);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        const std::string h = to_string(h_alpha_beta(alpha, beta, t));
        return runner.render([&] { return "\"" + h + "\"\n"; }, [&] { return h + "\n"; },
                             [&] { return h + "\n"; });
      }
      if (!model.empty()) {
        if (s_label.empty()) throw UsageError("--model needs --label");
        const MinimalModel m(model[0], model[1]);
        const auto w = singular_weights(m, parse_kac(s_label, "--label"));
        const std::string a = to_string(w.first);
        const std::string b = to_string(w.second);
        return runner.render([&] { return "[\"" + a + "\", \"" + b + "\"]\n"; },
                             [&] { return a + "," + b + "\n"; }, [&] { return a + " " + b + "\n"; });
      }
      runner.check_order();
      const auto ladder = singular_ladder(opts.order);
      const VerificationReport rep = singular_ladder_report(opts.order);
      return runner.render([&] { return ladder_json(ladder); }, {}, [&] { return report_text(rep); },
                           rep.pass ? exit_ok : exit_failed);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  Result result;
  try {
    result = action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  if (opts.output.empty()) {
    out << result.text;
  } else {
    std::ofstream file(opts.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << opts.output << '\n';
      return exit_usage;
    }
    file << result.text;
  }
  return result.code;
}

}  // namespace coset::cli
