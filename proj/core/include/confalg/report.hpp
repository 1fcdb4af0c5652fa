#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "confalg/superspace.hpp"
#include "confalg/vpoly.hpp"

namespace confalg {

struct CheckOptions {
  /// Stop at the first failing instance instead of collecting all of them.
  bool fail_fast = false;
};

/// One failed instance of an identity: which identity, on which basis
/// elements, and the nonzero residual LHS - RHS.
struct Failure {
  std::string identity;
  std::vector<std::size_t> indices;
  VPoly residual;
  /// Free-form context (e.g. mode indices for coefficient algebras).
  std::string note;
  /// Rendered residual for identities whose values are not VPolys.
  std::string residual_text;
};

class AxiomReport {
 public:
  AxiomReport() = default;
  explicit AxiomReport(SuperSpace space) : space_(std::move(space)) {}

  bool passed() const { return failures_.empty(); }
  const std::vector<Failure>& failures() const { return failures_; }
  const SuperSpace& space() const { return space_; }
  /// Names of identities evaluated, in order, whether or not they failed.
  const std::vector<std::string>& checked() const { return checked_; }

  void add_failure(Failure f) { failures_.push_back(std::move(f)); }
  void mark_checked(const std::string& identity);
  /// Appends another report's failures and checked identities.
  void merge(const AxiomReport& other);
  bool failed(const std::string& identity) const;

  /// One line per failure: `identity (x, y, z): residual`.
  std::string to_string() const;

 private:
  SuperSpace space_;
  std::vector<Failure> failures_;
  std::vector<std::string> checked_;
};

}  // namespace confalg
