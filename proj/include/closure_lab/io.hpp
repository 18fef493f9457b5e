#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "closure_lab/groebner.hpp"
#include "closure_lab/integrality.hpp"
#include "closure_lab/lab.hpp"
#include "closure_lab/limits.hpp"
#include "closure_lab/monomial_ideal.hpp"

namespace closure_lab {

using Json = nlohmann::ordered_json;

// {"vars": [...], "generators": [...]} with generators in the polynomial
// expression grammar.
struct IdealFile {
  std::vector<std::string> vars;
  std::vector<Polynomial> generators;

  // Every generator is a single term with coefficient 1.
  bool is_monomial() const;
  // Requires is_monomial().
  MonomialIdeal monomial() const;
  PolyIdeal poly() const;
};

IdealFile parse_ideal(std::string_view json_text);
IdealFile load_ideal(const std::filesystem::path& path);

bool valid_variable_name(std::string_view name);

// Canonical form: generators in descending grevlex order.
Json ideal_to_json(const MonomialIdeal& ideal,
                   const std::vector<std::string>& vars);
Json ideal_to_json(const std::vector<Polynomial>& generators,
                   const std::vector<std::string>& vars,
                   TermOrder order = TermOrder::Grevlex);
std::string format_ideal(const MonomialIdeal& ideal,
                         const std::vector<std::string>& vars);

// {"vars", "ideal", "element", "n", "coefficients", "memberships"}; the
// memberships are expressed over the listed ideal generators.
Json certificate_to_json(const IntegralityCertificate& cert,
                         const std::vector<Polynomial>& ideal_generators,
                         const std::vector<std::string>& vars);
struct ParsedCertificate {
  std::vector<std::string> vars;
  std::vector<Polynomial> ideal_generators;
  IntegralityCertificate certificate;
};
ParsedCertificate certificate_from_json(const Json& json);

Json report_to_json(const UniformExponentReport& report,
                    const std::vector<std::string>& vars);
// Header "ideal_id,n,s_bar,s_closure,k_bar,k_cl".
std::string report_csv_header();
std::string report_to_csv_rows(const UniformExponentReport& report,
                               std::string_view ideal_id);

Json suite_to_json(const SuiteResult& suite);

enum class OutputFormat { Text, Json, Csv };

struct Config {
  std::uint64_t k_max = kDefaultKMax;
  std::uint64_t n_max = 5;
  Limits limits;
  TermOrder order = TermOrder::Grevlex;
  std::uint64_t seed = 0;
  OutputFormat output = OutputFormat::Text;
};

// Overlays the keys present in `json` onto `base`. Unknown keys and
// non-positive caps raise PreconditionError.
Config apply_config_json(Config base, const nlohmann::json& json);
Config load_config_file(Config base, const std::filesystem::path& path);

}  // namespace closure_lab
