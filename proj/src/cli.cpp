#include "closure_lab/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "closure_lab/error.hpp"
#include "closure_lab/expression.hpp"
#include "closure_lab/integrality.hpp"
#include "closure_lab/io.hpp"
#include "closure_lab/lab.hpp"
#include "closure_lab/newton_polyhedron.hpp"

namespace closure_lab {

namespace {

struct Flags {
  std::optional<std::uint64_t> k_max, n_max, seed;
  std::optional<std::size_t> generator_cap, box_point_cap, spair_cap;
  std::optional<std::string> order, output, config;
  bool json = false;
};

Config resolve_config(const Flags& f) {
  Config c;
  if (f.config) {
    c = load_config_file(c, *f.config);
  } else if (const char* env = std::getenv("CLOSURE_LAB_CONFIG");
             env != nullptr && *env != '\0') {
    c = load_config_file(c, env);
  }
  nlohmann::json overrides = nlohmann::json::object();
  if (f.k_max) overrides["k_max"] = *f.k_max;
  if (f.n_max) overrides["n_max"] = *f.n_max;
  if (f.seed) overrides["seed"] = *f.seed;
  if (f.generator_cap) overrides["generator_cap"] = *f.generator_cap;
  if (f.box_point_cap) overrides["box_point_cap"] = *f.box_point_cap;
  if (f.spair_cap) overrides["spair_cap"] = *f.spair_cap;
  if (f.order) overrides["order"] = *f.order;
  if (f.output) overrides["output"] = *f.output;
  if (f.json) overrides["output"] = "json";
  return apply_config_json(c, overrides);
}

void require_same_vars(const IdealFile& a, const IdealFile& b) {
  if (a.vars != b.vars)
    throw PreconditionError("ideal files declare different variables");
}

MonomialIdeal require_monomial(const IdealFile& f, const char* command) {
  if (!f.is_monomial())
    throw PreconditionError(std::string(command) +
                            " requires a monomial ideal");
  return f.monomial();
}

std::string stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

void no_csv(const Config& c, const char* command) {
  if (c.output == OutputFormat::Csv)
    throw PreconditionError(std::string("csv output is not available for ") +
                            command);
}

Json tristate_json(TriState t) {
  Json j;
  j["result"] = std::string(to_string(t));
  j["cap"] = t.is_unknown() ? Json(t.cap()) : Json(nullptr);
  return j;
}

class Commands {
 public:
  Commands(const Config& config, std::ostream& out)
      : c_(config), out_(out) {}

  int closure_cmd(const std::string& path) {
    no_csv(c_, "closure");
    const IdealFile f = load_ideal(path);
    const MonomialIdeal cl = closure(require_monomial(f, "closure"), c_.limits);
    if (json()) emit_json(out_, ideal_to_json(cl, f.vars));
    else out_ << format_ideal(cl, f.vars) << "\n";
    return kExitOk;
  }

  int member(const std::string& path, const std::string& expr) {
    no_csv(c_, "member");
    const IdealFile f = load_ideal(path);
    const Polynomial p = parse_polynomial(expr, f.vars);
    const MembershipResult r =
        poly_ideal_member(p, f.poly(), c_.order, c_.limits);
    if (json()) {
      Json j;
      j["member"] = r.member;
      if (r.member) {
        Json q = Json::array();
        for (const auto& g : r.generator_quotients)
          q.push_back(format_polynomial(g, f.vars, c_.order));
        j["quotients"] = std::move(q);
      } else {
        j["quotients"] = nullptr;
      }
      emit_json(out_, j);
    } else {
      out_ << (r.member ? "yes" : "no") << "\n";
    }
    return r.member ? kExitOk : kExitVerdictFailed;
  }

  int closure_member_cmd(const std::string& path, const std::string& expr) {
    no_csv(c_, "closure-member");
    const IdealFile f = load_ideal(path);
    const MonomialIdeal j = require_monomial(f, "closure-member");
    const Polynomial p = parse_polynomial(expr, f.vars);
    if (!p.is_term() || p.terms().begin()->second != 1)
      throw PreconditionError("closure-member expects a monomial");
    if (j.is_zero()) throw PreconditionError("closure-member needs a nonzero ideal");
    const NpMembership r =
        np_member(NewtonPolyhedron(j), p.terms().begin()->first);
    if (json()) {
      Json out;
      out["member"] = r.member;
      if (r.certificate) {
        Json l = Json::array();
        for (const auto& q : r.certificate->lambdas) l.push_back(q.get_str());
        out["lambdas"] = std::move(l);
      } else {
        out["lambdas"] = nullptr;
      }
      emit_json(out_, out);
    } else {
      out_ << (r.member ? "yes" : "no") << "\n";
    }
    return r.member ? kExitOk : kExitVerdictFailed;
  }

  int is_integral(const std::string& j_path, const std::string& i_path,
                  const std::string& element, bool certify) {
    no_csv(c_, "is-integral");
    if (i_path.empty() == element.empty())
      throw PreconditionError("is-integral needs exactly one of <I> or --element");
    const IdealFile jf = load_ideal(j_path);
    TriState verdict = TriState::unknown(c_.k_max);
    Json certs = Json::array();

    if (!element.empty()) {
      const Polynomial f = parse_polynomial(element, jf.vars);
      if (jf.is_monomial()) {
        verdict = is_integral_element(f, jf.monomial(), c_.k_max, c_.order, c_.limits);
      } else {
        verdict = is_integral_element(f, jf.poly(), c_.k_max, c_.order, c_.limits);
      }
      if (certify && verdict.is_yes()) certs.push_back(certify_element(f, jf));
    } else {
      const IdealFile inf = load_ideal(i_path);
      require_same_vars(jf, inf);
      if (jf.is_monomial() && inf.is_monomial()) {
        verdict = is_integral_ideal(jf.monomial(), inf.monomial(), c_.limits);
      } else {
        verdict = is_integral_ideal(jf.poly(), inf.poly(), c_.k_max, c_.order,
                                    c_.limits);
      }
      if (certify && verdict.is_yes())
        for (const auto& g : inf.generators) certs.push_back(certify_element(g, jf));
    }

    if (json()) {
      Json out = tristate_json(verdict);
      if (certify) out["certificates"] = std::move(certs);
      emit_json(out_, out);
    } else {
      out_ << to_string(verdict);
      if (verdict.is_unknown()) out_ << " (k_max " << verdict.cap() << " exhausted)";
      out_ << "\n";
      for (const auto& cert : certs) out_ << cert.dump(2) << "\n";
    }
    return verdict.is_yes() ? kExitOk : kExitVerdictFailed;
  }

  int reduction(const std::string& j_path, const std::string& i_path) {
    no_csv(c_, "reduction-number");
    const IdealFile jf = load_ideal(j_path);
    const IdealFile inf = load_ideal(i_path);
    require_same_vars(jf, inf);
    const ReductionOutcome r =
        jf.is_monomial() && inf.is_monomial()
            ? reduction_number(jf.monomial(), inf.monomial(), c_.k_max, c_.limits)
            : reduction_number(jf.poly(), inf.poly(), c_.k_max, c_.order, c_.limits);
    const auto* w = std::get_if<ReductionWitness>(&r);
    if (json()) {
      Json out;
      if (w) out["k"] = w->k;
      else out["not_up_to"] = std::get<NotUpTo>(r).k_max;
      emit_json(out_, out);
    } else if (w) {
      out_ << "k = " << w->k << "\n";
    } else {
      out_ << "NotUpTo(" << std::get<NotUpTo>(r).k_max << ")\n";
    }
    return w ? kExitOk : kExitVerdictFailed;
  }

  int exponents(const std::string& path) {
    const IdealFile f = load_ideal(path);
    const UniformExponentReport rep =
        uniform_exponents(require_monomial(f, "exponents"), c_.n_max, c_.limits);
    if (c_.output == OutputFormat::Json) {
      emit_json(out_, report_to_json(rep, f.vars));
    } else if (c_.output == OutputFormat::Csv) {
      out_ << report_csv_header() << report_to_csv_rows(rep, stem(path));
    } else {
      out_ << "J = " << format_ideal(rep.ideal, f.vars) << "\n";
      out_ << "  n  s_bar  s_closure\n";
      for (const auto& r : rep.rows) {
        char line[64];
        std::snprintf(line, sizeof line, "%3llu  %5llu  %9llu\n",
                      static_cast<unsigned long long>(r.n),
                      static_cast<unsigned long long>(r.s_bar),
                      static_cast<unsigned long long>(r.s_closure));
        out_ << line;
      }
      out_ << "k_bar = " << rep.k_bar << "\nk_cl = " << rep.k_cl << "\n";
    }
    return kExitOk;
  }

  int bs_check(const std::string& path) {
    no_csv(c_, "bs-check");
    const IdealFile f = load_ideal(path);
    const LipmanSathayeReport rep = lipman_sathaye_check(
        require_monomial(f, "bs-check"), c_.n_max, c_.limits);
    const std::size_t shift = f.vars.size() - 1;
    if (json()) {
      Json out;
      out["holds"] = rep.holds();
      Json rows = Json::array();
      for (const auto& r : rep.rows) {
        Json row;
        row["n"] = r.n;
        row["power"] = r.n - shift;
        row["holds"] = r.holds;
        rows.push_back(std::move(row));
      }
      out["rows"] = std::move(rows);
      emit_json(out_, out);
    } else {
      for (const auto& r : rep.rows)
        out_ << "n = " << r.n << ": closure(J^" << r.n << ") in J^"
             << (r.n - shift) << " " << (r.holds ? "holds" : "FAILS") << "\n";
      out_ << (rep.holds() ? "pass" : "fail") << "\n";
    }
    return rep.holds() ? kExitOk : kExitVerdictFailed;
  }

  int chain(const std::string& path) {
    no_csv(c_, "chain-check");
    const IdealFile f = load_ideal(path);
    const ChainReport rep =
        chain_check(require_monomial(f, "chain-check"), c_.n_max, c_.limits);
    if (json()) {
      Json out;
      out["holds"] = rep.holds();
      Json rows = Json::array();
      for (const auto& r : rep.rows) {
        Json row;
        row["n"] = r.n;
        row["power_in_closure_power"] = r.power_in_closure_power;
        row["closure_power_in_closure_of_power"] =
            r.closure_power_in_closure_of_power;
        rows.push_back(std::move(row));
      }
      out["rows"] = std::move(rows);
      emit_json(out_, out);
    } else {
      for (const auto& r : rep.rows)
        out_ << "n = " << r.n << ": J^n in closure(J)^n "
             << (r.power_in_closure_power ? "holds" : "FAILS")
             << ", closure(J)^n in closure(J^n) "
             << (r.closure_power_in_closure_of_power ? "holds" : "FAILS") << "\n";
      out_ << (rep.holds() ? "pass" : "fail") << "\n";
    }
    return rep.holds() ? kExitOk : kExitVerdictFailed;
  }

  int witness(std::size_t d, bool verify) {
    no_csv(c_, "witness");
    const WitnessPair w = witness_pair(d);
    const auto vars = default_variable_names(d);
    if (!verify) {
      if (json()) {
        Json out;
        out["d"] = d;
        out["J"] = ideal_to_json(w.j, vars);
        out["I"] = ideal_to_json(w.i, vars);
        emit_json(out_, out);
      } else {
        out_ << "J = " << format_ideal(w.j, vars) << "\n";
        out_ << "I = " << format_ideal(w.i, vars) << "\n";
      }
      return kExitOk;
    }
    const WitnessVerdict v = verify_witness(d, c_.limits);
    if (json()) {
      Json out;
      out["d"] = d;
      out["integral"] = v.integral;
      out["product_is_diagonal"] = v.product_is_diagonal;
      out["product_outside_j"] = v.product_outside_j;
      out["power_not_in_j"] = v.power_not_in_j;
      out["pairwise_reduction_numbers"] = v.pairwise_reduction_numbers;
      out["pass"] = v.pass();
      emit_json(out_, out);
    } else {
      auto row = [&](std::string_view label, bool b) {
        out_ << "  " << std::left << std::setw(40) << label
             << (b ? "yes" : "NO") << "\n";
      };
      out_ << "d = " << d << "\n";
      row("I integral over J", v.integral);
      row("prod x_i^(d-1)*x_d = (x1..xd)^(d-1)", v.product_is_diagonal);
      row("(x1..xd)^(d-1) not in J", v.product_outside_j);
      row("I^(d-1) not contained in J", v.power_not_in_j);
      out_ << std::right;
      out_
           << (v.pass() ? "pass" : "fail") << "\n";
    }
    return v.pass() ? kExitOk : kExitVerdictFailed;
  }

  int lift_bound(const std::string& k, const std::string& list) {
    no_csv(c_, "lift-bound");
    auto parse_int = [](const std::string& s) {
      mpz_class v;
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos ||
          v.set_str(s, 10) != 0)
        throw PreconditionError("expected a nonnegative integer, got `" + s + "`");
      return v;
    };
    std::vector<mpz_class> constants;
    if (!list.empty()) {
      std::stringstream ss(list);
      std::string item;
      while (std::getline(ss, item, ',')) constants.push_back(parse_int(item));
    }
    const mpz_class bound = nilpotent_lift_bound(parse_int(k), constants);
    if (json()) {
      out_ << "{\"bound\":" << bound.get_str() << "}\n";
    } else {
      out_ << bound.get_str() << "\n";
    }
    return kExitOk;
  }

  int sample_suite(std::size_t trials) {
    const SuiteResult suite =
        run_sample_suite(trials, c_.seed, c_.n_max, c_.k_max, c_.limits);
    if (c_.output == OutputFormat::Json) {
      emit_json(out_, suite_to_json(suite));
    } else if (c_.output == OutputFormat::Csv) {
      out_ << report_csv_header();
      for (const auto& t : suite.trials)
        out_ << report_to_csv_rows(t.exponents, std::to_string(t.index));
    } else {
      std::size_t chain = 0, ls = 0, bounds = 0, agree = 0;
      std::uint64_t max_k_bar = 0, max_k_cl = 0;
      for (const auto& t : suite.trials) {
        chain += t.chain;
        ls += t.lipman_sathaye;
        bounds += t.exponent_bounds;
        agree += t.equivalence_agrees;
        max_k_bar = std::max(max_k_bar, t.exponents.k_bar);
        max_k_cl = std::max(max_k_cl, t.exponents.k_cl);
      }
      const std::size_t n = suite.trials.size();
      out_ << "seed " << suite.seed << ", " << n << " trials, n_max "
           << suite.n_max << ", k_max " << suite.k_max << "\n"
           << "  chain containments        " << chain << "/" << n << "\n"
           << "  closure(J^n) in J^(n-d+1) " << ls << "/" << n << "\n"
           << "  k_bar <= k_cl <= d-1      " << bounds << "/" << n << "\n"
           << "  integral <=> reduction    " << agree << "/" << n << "\n"
           << "  max k_bar " << max_k_bar << ", max k_cl " << max_k_cl << "\n"
           << "failures " << suite.failures() << "\n";
    }
    return suite.failures() == 0 ? kExitOk : kExitVerdictFailed;
  }

 private:
  bool json() const { return c_.output == OutputFormat::Json; }

  Json certify_element(const Polynomial& f, const IdealFile& jf) {
    if (jf.is_monomial() && f.is_term()) {
      const MonomialIdeal j = jf.monomial();
      const auto& [e, coeff] = *f.terms().begin();
      IntegralityCertificate cert = monomial_certificate(e, j);
      // Scale to the requested element: (c m)^n + c^n a_n = 0.
      if (coeff != 1) {
        mpq_class scale = 1;
        for (std::uint64_t k = 0; k < cert.degree; ++k) scale *= coeff;
        cert.element = coeff * cert.element;
        cert.coefficients.back() = scale * cert.coefficients.back();
        for (auto& t : cert.memberships.back().terms) t.quotient = scale * t.quotient;
      }
      return certificate_to_json(cert, to_poly_ideal(j).generators(), jf.vars);
    }
    const PolyIdeal j = jf.poly();
    const PolyIdeal i = poly_ideal_sum(j, PolyIdeal(f.dim(), {f}), c_.limits);
    const ReductionOutcome r = reduction_number(j, i, c_.k_max, c_.order, c_.limits);
    const auto* w = std::get_if<ReductionWitness>(&r);
    if (!w) throw InternalInconsistency("integral element without a reduction");
    const IntegralityCertificate cert =
        cramer_certificate(f, j, i, w->k, c_.order, c_.limits);
    return certificate_to_json(cert, j.generators(), jf.vars);
  }

  const Config& c_;
  std::ostream& out_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Integral closures, reductions and uniform exponents of ideals",
               "closure-lab"};
  app.fallthrough();
  app.require_subcommand(1);

  Flags flags;
  app.add_option("--k-max", flags.k_max, "reduction search bound (default 20)");
  app.add_option("--n-max", flags.n_max, "largest power examined (default 5)");
  app.add_option("--generator-cap", flags.generator_cap, "max generators of any ideal (default 20000)");
  app.add_option("--box-point-cap", flags.box_point_cap, "max lattice points per closure (default 1000000)");
  app.add_option("--spair-cap", flags.spair_cap, "max S-pairs per Groebner basis (default 50000)");
  app.add_option("--order", flags.order, "grevlex or lex");
  app.add_option("--seed", flags.seed, "sampler seed (default 0)");
  app.add_option("--output", flags.output, "text, json or csv");
  app.add_flag("--json", flags.json, "shorthand for --output json");
  app.add_option("--config", flags.config, "config JSON (overrides CLOSURE_LAB_CONFIG)");

  std::string a, b, element;
  bool certify = false, verify = false;
  std::size_t d = 0, trials = 100;
  std::string k_text, list_text;

  auto* c_closure = app.add_subcommand("closure", "generators of the integral closure");
  c_closure->add_option("ideal", a, "ideal JSON file")->required();
  auto* c_member = app.add_subcommand("member", "ideal membership");
  c_member->add_option("ideal", a, "ideal JSON file")->required();
  c_member->add_option("element", b, "polynomial expression")->required();
  auto* c_cmember = app.add_subcommand("closure-member", "membership in the integral closure");
  c_cmember->add_option("ideal", a, "monomial ideal JSON file")->required();
  c_cmember->add_option("monomial", b, "monomial expression")->required();
  auto* c_integral = app.add_subcommand("is-integral", "integral dependence of an ideal or element");
  c_integral->add_option("J", a, "ideal JSON file")->required();
  c_integral->add_option("I", b, "ideal JSON file tested over J");
  c_integral->add_option("--element", element, "polynomial tested over J");
  c_integral->add_flag("--certify", certify, "emit equations of integral dependence");
  auto* c_red = app.add_subcommand("reduction-number", "least k with I^{k+1} = J I^k");
  c_red->add_option("J", a, "candidate reduction (JSON file)")->required();
  c_red->add_option("I", b, "ideal containing J (JSON file)")->required();
  auto* c_exp = app.add_subcommand("exponents", "uniform exponent report");
  c_exp->add_option("J", a, "monomial ideal JSON file")->required();
  auto* c_bs = app.add_subcommand("bs-check", "closure(J^n) in J^{n-d+1}");
  c_bs->add_option("J", a, "monomial ideal JSON file")->required();
  auto* c_chain = app.add_subcommand("chain-check", "J^n in closure(J)^n in closure(J^n)");
  c_chain->add_option("J", a, "monomial ideal JSON file")->required();
  auto* c_witness = app.add_subcommand("witness", "lower-bound witness ideals");
  c_witness->add_option("d", d, "number of variables")->required()->check(CLI::Range(2, 64));
  c_witness->add_flag("--verify", verify, "check the three properties of the pair");
  auto* c_lift = app.add_subcommand("lift-bound", "uniform exponent for a nilpotent extension");
  c_lift->add_option("k", k_text, "uniform exponent of the reduced ring")->required();
  c_lift->add_option("constants", list_text, "comma-separated k_1,...,k_n0");
  auto* c_suite = app.add_subcommand("sample-suite", "randomized property run");
  c_suite->add_option("--trials", trials, "number of sampled ideals (default 100)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Config config = resolve_config(flags);
    Commands cmd(config, out);
    if (*c_closure) return cmd.closure_cmd(a);
    if (*c_member) return cmd.member(a, b);
    if (*c_cmember) return cmd.closure_member_cmd(a, b);
    if (*c_integral) return cmd.is_integral(a, b, element, certify);
    if (*c_red) return cmd.reduction(a, b);
    if (*c_exp) return cmd.exponents(a);
    if (*c_bs) return cmd.bs_check(a);
    if (*c_chain) return cmd.chain(a);
    if (*c_witness) return cmd.witness(d, verify);
    if (*c_lift) return cmd.lift_bound(k_text, list_text);
    if (*c_suite) return cmd.sample_suite(trials);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace closure_lab
