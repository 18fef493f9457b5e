#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "closure_lab/groebner.hpp"
#include "closure_lab/limits.hpp"
#include "closure_lab/monomial_ideal.hpp"
#include "closure_lab/polynomial.hpp"

namespace closure_lab {

inline constexpr std::uint64_t kDefaultKMax = 20;

// I^{k+1} = J I^k, checked exactly; k is the least such exponent for the
// given generators.
struct ReductionWitness {
  std::uint64_t k = 0;
  bool verified = false;
};

struct NotUpTo {
  std::uint64_t k_max = 0;
};

using ReductionOutcome = std::variant<ReductionWitness, NotUpTo>;

// Both require J subset of I (PreconditionError otherwise).
ReductionOutcome reduction_number(const MonomialIdeal& j, const MonomialIdeal& i,
                                  std::uint64_t k_max,
                                  const Limits& limits = {});
ReductionOutcome reduction_number(const PolyIdeal& j, const PolyIdeal& i,
                                  std::uint64_t k_max,
                                  TermOrder order = TermOrder::Grevlex,
                                  const Limits& limits = {});

class TriState {
 public:
  enum class Value { Yes, No, Unknown };

  static TriState yes() { return TriState(Value::Yes, 0); }
  static TriState no() { return TriState(Value::No, 0); }
  // `cap` is the exhausted k_max.
  static TriState unknown(std::uint64_t cap) {
    return TriState(Value::Unknown, cap);
  }

  Value value() const noexcept { return value_; }
  std::uint64_t cap() const noexcept { return cap_; }
  bool is_yes() const noexcept { return value_ == Value::Yes; }
  bool is_no() const noexcept { return value_ == Value::No; }
  bool is_unknown() const noexcept { return value_ == Value::Unknown; }

  friend bool operator==(const TriState&, const TriState&) = default;

 private:
  TriState(Value v, std::uint64_t cap) : value_(v), cap_(cap) {}
  Value value_;
  std::uint64_t cap_;
};

std::string_view to_string(TriState t);

// Monomial inputs are decided exactly via the Newton polyhedron.
TriState is_integral_ideal(const MonomialIdeal& j, const MonomialIdeal& i,
                           const Limits& limits = {});
// General inputs are semi-decided: Yes when J is found to be a reduction of
// J + I within k_max, Unknown otherwise. Never No.
TriState is_integral_ideal(const PolyIdeal& j, const PolyIdeal& i,
                           std::uint64_t k_max,
                           TermOrder order = TermOrder::Grevlex,
                           const Limits& limits = {});

// f is any nonzero ring element (not necessarily in J). A single term over
// a monomial J is decided exactly; anything else goes through
// reduction_number(J, J + (f)).
TriState is_integral_element(const Polynomial& f, const MonomialIdeal& j,
                             std::uint64_t k_max,
                             TermOrder order = TermOrder::Grevlex,
                             const Limits& limits = {});
TriState is_integral_element(const Polynomial& f, const PolyIdeal& j,
                             std::uint64_t k_max,
                             TermOrder order = TermOrder::Grevlex,
                             const Limits& limits = {});

// One summand quotient * prod_k gens[k]^multiplicity[k] of a J^i membership.
struct PowerProductTerm {
  std::vector<std::uint64_t> multiplicity;
  Polynomial quotient;
};

struct MembershipProof {
  std::uint64_t power = 0;
  std::vector<PowerProductTerm> terms;
};

// element^n + a_1 element^{n-1} + ... + a_n = 0 with a_i in J^i; the
// memberships are expressed over the generators of J the certificate was
// built from.
struct IntegralityCertificate {
  Polynomial element;
  std::uint64_t degree = 0;
  std::vector<Polynomial> coefficients;
  std::vector<MembershipProof> memberships;
};

// Exact re-check of the equation and every membership proof.
bool verify_certificate(const IntegralityCertificate& cert,
                        std::span<const Polynomial> ideal_generators);

// Requires closure_member(J, m). Produces t^n - m^n with n the lcm of the
// convex weights' denominators.
IntegralityCertificate monomial_certificate(const ExponentVector& m,
                                            const MonomialIdeal& j);

// Determinant trick: requires f in I and I^{k+1} = J I^k.
IntegralityCertificate cramer_certificate(const Polynomial& f,
                                          const PolyIdeal& j,
                                          const PolyIdeal& i, std::uint64_t k,
                                          TermOrder order = TermOrder::Grevlex,
                                          const Limits& limits = {},
                                          std::size_t determinant_cap = 64);

}  // namespace closure_lab
