// Named verification suites.  Each suite replays a family of exact
// identities of the calculus — normal forms, displayed formulas, spectral
// data, duality constants, deformation axioms — and reports one line per
// identity: exact-zero when the residual vanishes identically, residual with
// a rendering of the first nonzero value otherwise, or error when evaluation
// threw.  Reports are deterministic for a fixed seed and bound; only the
// wall-clock field varies between runs.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "defcal/scalar.hpp"

namespace defcal {

struct SuiteOptions {
  long seed = 0;
  // Size cap for enumerated exponent boxes, or the sample count for the
  // sampled axiom suites.  Zero selects the suite's default.
  int bound = 0;
  // Optional spot check: after each residual is computed symbolically, the
  // deformation parameter q is specialized to this value before the zero
  // test.  Only meaningful for the quantum-sphere suites; ignored elsewhere.
  std::optional<Scalar> q_value;
};

struct SuiteItem {
  std::string id;         // short stable identifier within the suite
  std::string statement;  // what identity the item checks
  std::string status;     // "exact-zero", "residual", or "error"
  std::string residual;   // first nonzero residual, or the error text
  long checks = 0;        // number of elementary identities evaluated
};

struct SuiteReport {
  std::string suite;
  long seed = 0;
  int bound = 0;
  std::vector<SuiteItem> items;
  long long wall_ms = 0;

  bool pass() const;
};

// The list of suite names, in canonical order.
const std::vector<std::string>& suite_names();

// Runs one suite.  Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

// Plain-text rendering: a header line, one line per item, and a footer with
// the verdict and timing.
std::string to_text(const SuiteReport& rep);

// JSON rendering with stable key order.
std::string to_json(const SuiteReport& rep);

}  // namespace defcal
