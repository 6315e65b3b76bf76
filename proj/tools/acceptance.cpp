// Acceptance gate: ten criteria, each a PASS/FAIL line with its wall time
// against a fixed budget.  Criteria 1-9 run the verification suites
// in-process at their contract bounds; criterion 10 exercises the grammar
// round-trip and the exit codes of the installed CLI binaries, including the
// twin build with the deliberately shifted contraction constant (it must
// fail every suite that depends on the codifferential and still pass the
// purely algebraic ones).
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "defcal/element_text.hpp"
#include "defcal/suites.hpp"

using namespace defcal;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const bool in_time = secs < limit_seconds;
  const bool pass = out.ok && in_time;
  if (!pass) ++failures;
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << number << ". " << title
            << "  (" << secs << "s, limit " << limit_seconds << "s)\n";
  if (!out.ok && !out.detail.empty())
    std::cout << "        " << out.detail << "\n";
  if (out.ok && !in_time) std::cout << "        over time budget\n";
  std::cout.flush();
}

Outcome suites_pass(const std::vector<std::string>& names) {
  for (const std::string& name : names) {
    const SuiteReport rep = run_suite(name, SuiteOptions{});
    if (!rep.pass()) {
      for (const SuiteItem& it : rep.items)
        if (it.status != "exact-zero")
          return {false, name + " / " + it.id + ": " + it.residual};
      return {false, name + " failed"};
    }
  }
  return {};
}

int run_cli(const std::string& binary, const std::string& args) {
  const std::string cmd = binary + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

}  // namespace

int main() {
  criterion(1, "algebra relations and the star structure", 5, [] {
    return suites_pass({"qsl2-relations"});
  });
  criterion(2, "differential displays and d^2 = 0", 30, [] {
    return suites_pass({"d-prop"});
  });
  criterion(3, "codifferential displays at symbolic weights", 60, [] {
    return suites_pass({"delta-props"});
  });
  criterion(4, "Laplacian displays in all three degrees", 120, [] {
    return suites_pass({"laplace-props"});
  });
  criterion(5, "eigenform ladders in all three degrees", 120, [] {
    return suites_pass({"eigen-0", "eigen-1", "eigen-2"});
  });
  criterion(6, "harmonic kernels at bounds 2-4", 60, [] {
    return suites_pass({"harmonic"});
  });
  criterion(7, "duality, pairing, codifferential, integrals", 120, [] {
    return suites_pass({"hodge-double", "hodge-codiff", "hodge-hermitian"});
  });
  criterion(8, "deformation axioms on both backends, 100 samples", 120, [] {
    return suites_pass({"dga-axioms-sphere", "dga-axioms-classical"});
  });
  criterion(9, "coordinate calculus: divergence form, displays, reversal, "
               "derivative", 120, [] {
    return suites_pass({"ito", "girsanov", "nabla-alpha"});
  });

  criterion(10, "grammar round-trip and fault-build exit codes", 60, [] {
    // 500 seeded elements per backend, parse after render is the identity.
    {
      SplitMix64 rng(2024);
      for (int i = 0; i < 500; ++i) {
        const SphereForm x = sample_sphere_form(rng, 3);
        if (!(parse_sphere_form(to_string(x)) == x))
          return Outcome{false, "sphere round-trip failed on " + to_string(x)};
      }
      SplitMix64 rng2(2025);
      for (int i = 0; i < 500; ++i) {
        const CForm x = sample_cform(rng2, 3);
        if (!(parse_cform(to_string(x), 3) == x))
          return Outcome{false,
                         "coordinate round-trip failed on " + to_string(x)};
      }
    }

    const std::string cli = DEFCAL_CLI_PATH;
    const std::string fault = DEFCAL_FAULT_CLI_PATH;

    if (run_cli(cli, "suite qsl2-relations --bound 2") != 0)
      return Outcome{false, "healthy build failed qsl2-relations"};
    if (run_cli(cli, "suite no-such-suite") == 0)
      return Outcome{false, "unknown suite name did not error"};

    // The shifted constant sits in the codifferential: every suite built on
    // it must fail, the purely algebraic ones must still pass.
    const char* must_fail[] = {"delta-props", "laplace-props", "eigen-0",
                               "eigen-1",     "eigen-2",       "harmonic",
                               "hodge-codiff"};
    for (const char* name : must_fail)
      if (run_cli(fault, std::string("suite ") + name + " --bound 2") == 0)
        return Outcome{false,
                       std::string("fault build unexpectedly passed ") + name};
    const char* must_pass[] = {"qsl2-relations", "d-prop"};
    for (const char* name : must_pass)
      if (run_cli(fault, std::string("suite ") + name + " --bound 2") != 0)
        return Outcome{false,
                       std::string("fault build unexpectedly failed ") + name};
    return Outcome{};
  });

  std::cout << (failures == 0 ? "acceptance: all criteria green\n"
                              : "acceptance: " +
                                    std::to_string(failures) +
                                    " criteria failed\n");
  return failures == 0 ? 0 : 1;
}
