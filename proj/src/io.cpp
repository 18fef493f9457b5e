#include "closure_lab/io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "closure_lab/error.hpp"
#include "closure_lab/expression.hpp"

namespace closure_lab {

namespace {

void line_column(std::string_view text, std::size_t offset, std::size_t& line,
                 std::size_t& col) {
  line = 1;
  col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
}

std::vector<ExponentVector> sorted_for_display(const MonomialIdeal& ideal) {
  std::vector<ExponentVector> gens = ideal.generators();
  std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) {
    return compare(TermOrder::Grevlex, a, b) > 0;
  });
  return gens;
}

}  // namespace

bool valid_variable_name(std::string_view name) {
  static const std::regex pattern("[A-Za-z][A-Za-z0-9_]*");
  return std::regex_match(name.begin(), name.end(), pattern);
}

bool IdealFile::is_monomial() const {
  return std::all_of(generators.begin(), generators.end(),
                     [](const Polynomial& p) {
                       return p.is_term() && p.terms().begin()->second == 1;
                     });
}

MonomialIdeal IdealFile::monomial() const {
  if (!is_monomial()) throw PreconditionError("ideal is not monomial");
  std::vector<ExponentVector> gens;
  for (const auto& p : generators) gens.push_back(p.terms().begin()->first);
  return MonomialIdeal(vars.size(), gens);
}

PolyIdeal IdealFile::poly() const { return PolyIdeal(vars.size(), generators); }

IdealFile parse_ideal(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text.begin(), json_text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line, col;
    line_column(json_text, e.byte == 0 ? 0 : e.byte - 1, line, col);
    throw ParseError("malformed ideal JSON", line, col);
  }
  if (!doc.is_object() || !doc.contains("vars") || !doc.contains("generators"))
    throw ParseError("ideal JSON needs \"vars\" and \"generators\"");
  const auto& vars = doc["vars"];
  const auto& gens = doc["generators"];
  if (!vars.is_array() || vars.empty())
    throw ParseError("\"vars\" must be a nonempty array");
  if (!gens.is_array() || gens.empty())
    throw ParseError("empty generator list");

  IdealFile file;
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!v.is_string()) throw ParseError("variable names must be strings");
    const std::string name = v.get<std::string>();
    if (!valid_variable_name(name))
      throw ParseError("invalid variable name `" + name + "`");
    if (!seen.insert(name).second)
      throw ParseError("duplicate variable `" + name + "`");
    file.vars.push_back(name);
  }
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (!gens[k].is_string())
      throw ParseError("generator " + std::to_string(k + 1) +
                           " must be a string");
    Polynomial p(file.vars.size());
    try {
      p = parse_polynomial(gens[k].get<std::string>(), file.vars);
    } catch (const ParseError& e) {
      // position is inside the expression string, not the file
      throw ParseError("generator " + std::to_string(k + 1) + ", column " +
                           std::to_string(e.column()) + ": " + e.message());
    }
    if (p.is_zero())
      throw ParseError("generator " + std::to_string(k + 1) + " is zero");
    file.generators.push_back(std::move(p));
  }
  return file;
}

IdealFile load_ideal(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open `" + path.string() + "`");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_ideal(buf.str());
}

Json ideal_to_json(const MonomialIdeal& ideal,
                   const std::vector<std::string>& vars) {
  Json out;
  out["vars"] = vars;
  Json gens = Json::array();
  for (const auto& g : sorted_for_display(ideal))
    gens.push_back(format_monomial(g, vars));
  out["generators"] = std::move(gens);
  return out;
}

Json ideal_to_json(const std::vector<Polynomial>& generators,
                   const std::vector<std::string>& vars, TermOrder order) {
  Json out;
  out["vars"] = vars;
  Json gens = Json::array();
  for (const auto& g : generators) gens.push_back(format_polynomial(g, vars, order));
  out["generators"] = std::move(gens);
  return out;
}

std::string format_ideal(const MonomialIdeal& ideal,
                         const std::vector<std::string>& vars) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  bool first = true;
  for (const auto& g : sorted_for_display(ideal)) {
    if (!first) out += ", ";
    out += format_monomial(g, vars);
    first = false;
  }
  return out + ")";
}

Json certificate_to_json(const IntegralityCertificate& cert,
                         const std::vector<Polynomial>& ideal_generators,
                         const std::vector<std::string>& vars) {
  Json out;
  out["vars"] = vars;
  Json ideal = Json::array();
  for (const auto& g : ideal_generators) ideal.push_back(format_polynomial(g, vars));
  out["ideal"] = std::move(ideal);
  out["element"] = format_polynomial(cert.element, vars);
  out["n"] = cert.degree;
  Json coeffs = Json::array();
  for (const auto& c : cert.coefficients) coeffs.push_back(format_polynomial(c, vars));
  out["coefficients"] = std::move(coeffs);
  Json memberships = Json::array();
  for (const auto& m : cert.memberships) {
    Json entry;
    entry["power"] = m.power;
    Json terms = Json::array();
    for (const auto& t : m.terms) {
      Json term;
      term["multiplicity"] = t.multiplicity;
      term["quotient"] = format_polynomial(t.quotient, vars);
      terms.push_back(std::move(term));
    }
    entry["terms"] = std::move(terms);
    memberships.push_back(std::move(entry));
  }
  out["memberships"] = std::move(memberships);
  return out;
}

ParsedCertificate certificate_from_json(const Json& json) {
  try {
    const auto vars = json.at("vars").get<std::vector<std::string>>();
    auto parse = [&](const Json& v) {
      return parse_polynomial(v.get<std::string>(), vars);
    };
    std::vector<Polynomial> ideal;
    for (const auto& g : json.at("ideal")) ideal.push_back(parse(g));
    IntegralityCertificate cert{parse(json.at("element")),
                                json.at("n").get<std::uint64_t>(), {}, {}};
    for (const auto& c : json.at("coefficients"))
      cert.coefficients.push_back(parse(c));
    for (const auto& m : json.at("memberships")) {
      MembershipProof proof{m.at("power").get<std::uint64_t>(), {}};
      for (const auto& t : m.at("terms"))
        proof.terms.push_back(PowerProductTerm{
            t.at("multiplicity").get<std::vector<std::uint64_t>>(),
            parse(t.at("quotient"))});
      cert.memberships.push_back(std::move(proof));
    }
    return ParsedCertificate{vars, std::move(ideal), std::move(cert)};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

Json report_to_json(const UniformExponentReport& report,
                    const std::vector<std::string>& vars) {
  Json out;
  out["ideal"] = ideal_to_json(report.ideal, vars);
  out["n_max"] = report.n_max;
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row;
    row["n"] = r.n;
    row["s_bar"] = r.s_bar;
    row["s_closure"] = r.s_closure;
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  out["k_bar"] = report.k_bar;
  out["k_cl"] = report.k_cl;
  return out;
}

std::string report_csv_header() {
  return "ideal_id,n,s_bar,s_closure,k_bar,k_cl\n";
}

std::string report_to_csv_rows(const UniformExponentReport& report,
                               std::string_view ideal_id) {
  std::string out;
  for (const auto& r : report.rows) {
    out += std::string(ideal_id) + "," + std::to_string(r.n) + "," +
           std::to_string(r.s_bar) + "," + std::to_string(r.s_closure) + "," +
           std::to_string(report.k_bar) + "," + std::to_string(report.k_cl) +
           "\n";
  }
  return out;
}

Json suite_to_json(const SuiteResult& suite) {
  Json out;
  out["seed"] = suite.seed;
  out["trials"] = suite.trials.size();
  out["n_max"] = suite.n_max;
  out["k_max"] = suite.k_max;
  out["failures"] = suite.failures();
  Json results = Json::array();
  for (const auto& t : suite.trials) {
    const auto vars = default_variable_names(t.ideal.dim());
    Json r;
    r["trial"] = t.index;
    r["ideal"] = ideal_to_json(t.ideal, vars)["generators"];
    r["vars"] = vars;
    r["k_bar"] = t.exponents.k_bar;
    r["k_cl"] = t.exponents.k_cl;
    Json rows = Json::array();
    for (const auto& row : t.exponents.rows)
      rows.push_back(Json::array({row.n, row.s_bar, row.s_closure}));
    r["rows"] = std::move(rows);
    r["chain"] = t.chain;
    r["lipman_sathaye"] = t.lipman_sathaye;
    r["exponent_bounds"] = t.exponent_bounds;
    r["overideal"] = ideal_to_json(t.overideal, vars)["generators"];
    r["integral"] = t.integral;
    r["reduction_number"] =
        t.reduction_k ? Json(*t.reduction_k) : Json(nullptr);
    r["equivalence_agrees"] = t.equivalence_agrees;
    r["passed"] = t.passed();
    results.push_back(std::move(r));
  }
  out["results"] = std::move(results);
  return out;
}

namespace {

std::uint64_t positive(const nlohmann::json& v, const char* key) {
  if (!v.is_number_integer() || v.get<std::int64_t>() <= 0)
    throw PreconditionError(std::string("config key `") + key +
                            "` must be a positive integer");
  return v.get<std::uint64_t>();
}

}  // namespace

Config apply_config_json(Config base, const nlohmann::json& json) {
  if (!json.is_object()) throw PreconditionError("config must be a JSON object");
  for (const auto& [key, v] : json.items()) {
    if (key == "k_max") base.k_max = positive(v, "k_max");
    else if (key == "n_max") base.n_max = positive(v, "n_max");
    else if (key == "generator_cap") base.limits.generator_cap = positive(v, "generator_cap");
    else if (key == "box_point_cap") base.limits.box_point_cap = positive(v, "box_point_cap");
    else if (key == "spair_cap") base.limits.spair_cap = positive(v, "spair_cap");
    else if (key == "order") base.order = term_order_from_string(v.get<std::string>());
    else if (key == "seed") base.seed = v.get<std::uint64_t>();
    else if (key == "output") {
      const auto s = v.get<std::string>();
      if (s == "text") base.output = OutputFormat::Text;
      else if (s == "json") base.output = OutputFormat::Json;
      else if (s == "csv") base.output = OutputFormat::Csv;
      else throw PreconditionError("unknown output format `" + s + "`");
    } else {
      throw PreconditionError("unknown config key `" + key + "`");
    }
  }
  return base;
}

Config load_config_file(Config base, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open config `" + path.string() + "`");
  try {
    return apply_config_json(std::move(base), nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError("malformed config `" + path.string() + "`: " + e.what());
  }
}

}  // namespace closure_lab
