// defcal — command line front end for the exact deformation calculus.
//
// Groups:
//   suite/suites     named verification suites with text or JSON reports
//   parse/roundtrip  grammar entry points for both element families
//   sphere ...       normal forms, star, d, delta, Laplacian, eigen tables,
//                    harmonic kernels, duality, pairing, integral, probe
//   deform ...       the time-extension layer on either backend
//   classical ...    coordinate-space operators from a metric/drift config
//
// Exit codes: 0 success (and suite/verify pass), 1 a verification failed,
// 2 usage, parse, or configuration errors.
#include <bit>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "defcal/classical_backend.hpp"
#include "defcal/element_text.hpp"
#include "defcal/qint.hpp"
#include "defcal/rng.hpp"
#include "defcal/sphere_backend.hpp"
#include "defcal/sphere_hodge.hpp"
#include "defcal/sphere_laplace.hpp"
#include "defcal/suites.hpp"

using namespace defcal;
using nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// Parsing helpers.

// Numeric flag values: constants only, no symbols.
Scalar parse_rational(const std::string& text, const char* what) {
  Scalar v;
  try {
    v = parse_scalar(text, Domain{});
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
  if (!(v.conj() == v))
    throw std::invalid_argument(std::string(what) + ": must be real");
  return v;
}

Scalar parse_sphere_scalar(const std::string& text) {
  return parse_scalar(text, sphere_domain());
}
Scalar parse_coord_scalar(const std::string& text) {
  return parse_scalar(text, coordinate_domain());
}

// ---------------------------------------------------------------------------
// JSON renderings of elements: degree plus scalar-keyed term lists.

ordered_json alg_terms_json(const AlgElem& x) {
  ordered_json terms = ordered_json::array();
  for (const auto& [key, coeff] : x.terms()) {
    ordered_json t;
    t["word"] = key.word().empty() ? "1" : key.word();
    t["coeff"] = render(coeff, sphere_domain());
    terms.push_back(std::move(t));
  }
  return terms;
}

ordered_json sphere_form_json(const SphereForm& x) {
  ordered_json j;
  int degree = -1;
  bool mixed = false;
  auto mark = [&](int d, const AlgElem& part) {
    if (part.is_zero()) return;
    if (degree == -1)
      degree = d;
    else if (degree != d)
      mixed = true;
  };
  mark(0, x.c0);
  mark(1, x.fp);
  mark(1, x.fm);
  mark(2, x.c2);
  if (mixed)
    j["degree"] = "mixed";
  else
    j["degree"] = degree < 0 ? 0 : degree;
  ordered_json comp;
  comp["1"] = alg_terms_json(x.c0);
  comp["e+"] = alg_terms_json(x.fp);
  comp["e-"] = alg_terms_json(x.fm);
  comp["e+^e-"] = alg_terms_json(x.c2);
  j["components"] = std::move(comp);
  j["text"] = to_string(x);
  return j;
}

std::string cform_basis_label(unsigned mask) {
  if (mask == 0) return "1";
  std::string out;
  for (int i = 0; i < 3; ++i)
    if (mask & (1u << i)) {
      if (!out.empty()) out += "^";
      out += "dx" + std::to_string(i + 1);
    }
  return out;
}

ordered_json cform_json(const CForm& x) {
  ordered_json j;
  int degree = -1;
  bool mixed = false;
  ordered_json comp;
  for (unsigned mask = 0; mask < 8u; ++mask) {
    const Scalar c = x.coefficient(mask);
    if (c.is_zero()) continue;
    const int d = std::popcount(mask);
    if (degree == -1)
      degree = d;
    else if (degree != d)
      mixed = true;
    comp[cform_basis_label(mask)] = render(c, coordinate_domain());
  }
  if (mixed)
    j["degree"] = "mixed";
  else
    j["degree"] = degree < 0 ? 0 : degree;
  j["components"] = std::move(comp);
  j["text"] = to_string(x);
  return j;
}

template <class B>
std::string timed_text(const Timed<B>& x) {
  return "[" + to_string(x.omega) + "] + [" + to_string(x.rho) + "] dt";
}

void emit(const std::string& format, const ordered_json& j,
          const std::string& text) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// ---------------------------------------------------------------------------
// Classical metric/drift configuration.

struct ClassicalConfig {
  Metric metric;
  VectorField drift;
};

ClassicalConfig default_classical_config() {
  const Scalar x1 = Scalar::variable(cv::x1);
  const Scalar x2 = Scalar::variable(cv::x2);
  const Scalar z(0), o(1);
  Metric m(2, {{o, z}, {z, x1 * x1}}, {{o, z}, {z, o / (x1 * x1)}});
  VectorField v;
  v.dim = 2;
  v.comp[0] = x2;
  v.comp[1] = x1;
  return ClassicalConfig{m, v};
}

ClassicalConfig load_classical_config(const std::string& path) {
  if (path.empty()) return default_classical_config();
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open config file '" + path + "'");
  const ordered_json j = ordered_json::parse(in);
  if (!j.contains("g") || !j.contains("g_inv"))
    throw std::invalid_argument("config must supply 'g' and 'g_inv' matrices");
  const auto& jg = j["g"];
  const int dim = int(jg.size());
  if (dim < 1 || dim > 3)
    throw std::invalid_argument("config dimension must be 1, 2, or 3");
  auto matrix = [&](const ordered_json& rows) {
    std::vector<std::vector<Scalar>> out;
    for (const auto& row : rows) {
      std::vector<Scalar> r;
      for (const auto& entry : row)
        r.push_back(parse_coord_scalar(entry.get<std::string>()));
      out.push_back(std::move(r));
    }
    return out;
  };
  Metric m(dim, matrix(jg), matrix(j["g_inv"]));
  VectorField v = zero_field(dim);
  if (j.contains("v")) {
    const auto& jv = j["v"];
    if (int(jv.size()) != dim)
      throw std::invalid_argument("drift 'v' must have one entry per coordinate");
    for (int i = 0; i < dim; ++i)
      v.comp[i] = parse_coord_scalar(jv[i].get<std::string>());
  }
  return ClassicalConfig{m, v};
}

// ---------------------------------------------------------------------------
// Samplers for the deform axiom runs (grade-respecting, time-decorated).

AlgElem cli_sphere_mono(SplitMix64& rng) {
  static const Scalar coeffs[] = {Scalar(1), Scalar(-1), Scalar(2),
                                  qpow(1),   qpow(-1),   Scalar::imag_unit()};
  Scalar c = coeffs[rng.below(6)];
  if (unsigned td = rng.below(3)) c = c * Scalar::variable(sv::t, int(td));
  int n = int(rng.below(4)), m = int(rng.below(4)), p = int(rng.below(4));
  QMono key;
  key.dfam = n > 0 && rng.below(2) == 1;
  key.n = std::uint16_t(n);
  key.m = std::uint16_t(m);
  key.p = std::uint16_t(p);
  return AlgElem::monomial(key, c);
}

AlgElem cli_sphere_graded(SplitMix64& rng, int grade) {
  for (;;) {
    AlgElem x = cli_sphere_mono(rng);
    if (x.is_zero() || x.has_grade(grade)) return x;
  }
}

Timed<SphereBackend> cli_timed_sphere(SplitMix64& rng, int degree) {
  auto form = [&](int deg) -> SphereForm {
    switch (deg) {
      case 0: return SphereForm::fn(cli_sphere_graded(rng, 0));
      case 1:
        return SphereForm::one_form(cli_sphere_graded(rng, -2),
                                    cli_sphere_graded(rng, 2));
      default: return SphereForm::two_form(cli_sphere_graded(rng, 0));
    }
  };
  Timed<SphereBackend> x;
  x.omega = form(degree);
  if (degree > 0) x.rho = form(degree - 1);
  return x;
}

Scalar cli_poly(SplitMix64& rng, int nvars, int deg) {
  Scalar out(0);
  for (int k = 0; k < 3; ++k) {
    long c = rng.range(-2, 2);
    if (c == 0) continue;
    Scalar term = Scalar::rational(c, 1);
    int budget = deg;
    for (int v = 0; v < nvars; ++v) {
      int e = int(rng.below(std::uint64_t(budget + 1)));
      budget -= e;
      if (e > 0) term = term * Scalar::variable(cv::x1 + v, e);
    }
    if (int e = int(rng.below(3)); e > 0)
      term = term * Scalar::variable(cv::t, e);
    out = out + term;
  }
  return out;
}

Timed<ClassicalBackend> cli_timed_classical(SplitMix64& rng, int dim,
                                            int degree) {
  auto form = [&](int deg) {
    CForm out;
    for (unsigned mask = 0; mask < 8u; ++mask) {
      if (std::popcount(mask) != deg) continue;
      if (mask >= (1u << dim)) continue;
      out.add_term(mask, cli_poly(rng, dim, 2));
    }
    return out;
  };
  Timed<ClassicalBackend> x;
  x.omega = form(degree);
  if (degree > 0) x.rho = form(degree - 1);
  return x;
}

// Sign classification of a constant scalar rendering.
std::string sign_of(const Scalar& v) {
  if (v.is_zero()) return "zero";
  if (!(v.conj() == v)) return "non-real";
  const std::string text = render(v, Domain{});
  return text.rfind("-", 0) == 0 ? "negative" : "positive";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact deformation calculus on the quantum sphere and on "
               "coordinate space"};
  app.require_subcommand(0, 1);

  // Shared flags.
  std::string q_text, format = "text", suite_flag;
  long seed = 0;
  int bound = 0;
  app.add_option("--q", q_text,
                 "rational spot-check value substituted into sphere-suite "
                 "residuals (must be nonzero)");
  app.add_option("--bound", bound,
                 "exponent/enumeration bound (0 = per-suite default)");
  app.add_option("--seed", seed, "seed for sampled identities")
      ->default_val(0);
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
  app.add_option("--suite", suite_flag,
                 "suite to run when no subcommand is given");

  std::function<int()> run;

  auto suite_options = [&]() {
    SuiteOptions opt;
    opt.seed = seed;
    opt.bound = bound;
    if (!q_text.empty()) opt.q_value = parse_rational(q_text, "--q");
    return opt;
  };

  auto run_one_suite = [&](const std::string& name) {
    const SuiteReport rep = run_suite(name, suite_options());
    std::cout << (format == "json" ? to_json(rep) : to_text(rep));
    return rep.pass() ? 0 : 1;
  };

  // ---- suite / suites / list ----------------------------------------------

  auto* suite_cmd =
      app.add_subcommand("suite", "run one named verification suite");
  suite_cmd->fallthrough();
  std::string suite_name;
  suite_cmd->add_option("name", suite_name, "suite name (see 'defcal list')");
  suite_cmd->callback([&] {
    run = [&]() -> int {
      const std::string name = !suite_name.empty() ? suite_name : suite_flag;
      if (name.empty())
        throw std::invalid_argument("no suite name given (positional or --suite)");
      return run_one_suite(name);
    };
  });

  auto* suites_cmd =
      app.add_subcommand("suites", "run every suite; exit 0 iff all pass");
  suites_cmd->fallthrough();
  suites_cmd->callback([&] {
    run = [&]() -> int {
      bool all = true;
      ordered_json arr = ordered_json::array();
      for (const std::string& name : suite_names()) {
        const SuiteReport rep = run_suite(name, suite_options());
        all = all && rep.pass();
        if (format == "json")
          arr.push_back(ordered_json::parse(to_json(rep)));
        else
          std::cout << to_text(rep) << "\n";
      }
      if (format == "json") std::cout << arr.dump(2) << "\n";
      return all ? 0 : 1;
    };
  });

  auto* list_cmd = app.add_subcommand("list", "list the suite names");
  list_cmd->callback([&] {
    run = [&]() -> int {
      for (const std::string& name : suite_names()) std::cout << name << "\n";
      return 0;
    };
  });

  // ---- parse / roundtrip ---------------------------------------------------

  auto* parse_cmd = app.add_subcommand(
      "parse", "parse an expression and print its normal form");
  parse_cmd->fallthrough();
  std::string parse_backend = "sphere", parse_text;
  int parse_dim = 3;
  parse_cmd->add_option("--backend", parse_backend, "element family")
      ->check(CLI::IsMember({"alg", "sphere", "classical", "scalar"}))
      ->default_val("sphere");
  parse_cmd->add_option("--dim", parse_dim, "coordinate dimension")
      ->default_val(3);
  parse_cmd->add_option("text", parse_text, "expression")->required();
  parse_cmd->callback([&] {
    run = [&]() -> int {
      ordered_json j;
      j["input"] = parse_text;
      std::string text;
      if (parse_backend == "alg") {
        const AlgElem x = parse_alg(parse_text);
        j["element"] = alg_terms_json(x);
        text = to_string(x) + "\n";
        j["text"] = to_string(x);
      } else if (parse_backend == "sphere") {
        const SphereForm x = parse_sphere_form(parse_text);
        j["element"] = sphere_form_json(x);
        text = to_string(x) + "\n";
      } else if (parse_backend == "classical") {
        const CForm x = parse_cform(parse_text, parse_dim);
        j["element"] = cform_json(x);
        text = to_string(x) + "\n";
      } else {
        const Scalar x = parse_scalar(parse_text, sphere_domain());
        j["text"] = render(x, sphere_domain());
        text = render(x, sphere_domain()) + "\n";
      }
      emit(format, j, text);
      return 0;
    };
  });

  auto* rt_cmd = app.add_subcommand(
      "roundtrip", "verify parse(render(x)) == x on seeded random elements");
  rt_cmd->fallthrough();
  std::string rt_backend = "both";
  int rt_count = 500;
  rt_cmd->add_option("--backend", rt_backend, "element family")
      ->check(CLI::IsMember({"sphere", "classical", "both"}))
      ->default_val("both");
  rt_cmd->add_option("--count", rt_count, "samples per family")
      ->default_val(500);
  rt_cmd->callback([&] {
    run = [&]() -> int {
      const int bnd = bound > 0 ? bound : 3;
      long failures = 0;
      ordered_json j;
      if (rt_backend != "classical") {
        SplitMix64 rng(std::uint64_t(seed) * 2 + 1);
        long bad = 0;
        for (int i = 0; i < rt_count; ++i) {
          const SphereForm x = sample_sphere_form(rng, bnd);
          if (!(parse_sphere_form(to_string(x)) == x)) ++bad;
          const AlgElem f = sample_alg(rng, bnd);
          if (!(parse_alg(to_string(f)) == f)) ++bad;
        }
        j["sphere"] = {{"samples", rt_count}, {"failures", bad}};
        failures += bad;
      }
      if (rt_backend != "sphere") {
        SplitMix64 rng(std::uint64_t(seed) * 2 + 2);
        long bad = 0;
        for (int i = 0; i < rt_count; ++i) {
          const CForm x = sample_cform(rng, 3);
          if (!(parse_cform(to_string(x), 3) == x)) ++bad;
        }
        j["classical"] = {{"samples", rt_count}, {"failures", bad}};
        failures += bad;
      }
      j["pass"] = failures == 0;
      std::ostringstream os;
      os << "roundtrip: " << (failures == 0 ? "pass" : "FAIL") << " ("
         << failures << " failures)\n";
      emit(format, j, os.str());
      return failures == 0 ? 0 : 1;
    };
  });

  // ---- sphere ---------------------------------------------------------------

  auto* sphere_cmd =
      app.add_subcommand("sphere", "quantum-sphere operators");
  sphere_cmd->require_subcommand(1);
  sphere_cmd->fallthrough();

  std::string sp_text, sp_right, sp_K = "i", sp_L = "i*q";
  bool sp_simplified = false, sp_general = false, sp_inverse = false;
  std::string sp_family = "fn-x";
  int sp_n = 0, sp_p = -1, sp_degree = 0;

  auto add_expr_sub = [&](const char* name, const char* help, auto&& body) {
    auto* sub = sphere_cmd->add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("text", sp_text, "expression")->required();
    sub->callback([&, body] { run = [&, body]() -> int { return body(); }; });
    return sub;
  };

  add_expr_sub("normalize", "normal form of an algebra expression", [&] {
    const AlgElem x = parse_alg(sp_text);
    ordered_json j;
    j["element"] = alg_terms_json(x);
    j["text"] = to_string(x);
    emit(format, j, to_string(x) + "\n");
    return 0;
  });
  add_expr_sub("star", "star of an algebra expression", [&] {
    const AlgElem x = parse_alg(sp_text).star();
    ordered_json j;
    j["element"] = alg_terms_json(x);
    j["text"] = to_string(x);
    emit(format, j, to_string(x) + "\n");
    return 0;
  });
  add_expr_sub("d", "differential of a frame form", [&] {
    const SphereForm x = d(parse_sphere_form(sp_text));
    emit(format, sphere_form_json(x), to_string(x) + "\n");
    return 0;
  });

  auto params_of = [&]() {
    return sp_general ? MetricParams::symbolic() : MetricParams::simplified();
  };
  auto* delta_sub = add_expr_sub(
      "delta", "codifferential of a frame form at the contraction weights",
      [&] {
        const SphereForm x = delta(parse_sphere_form(sp_text), params_of());
        emit(format, sphere_form_json(x), to_string(x) + "\n");
        return 0;
      });
  auto* lap_sub = add_expr_sub("laplacian", "Laplacian of a frame form", [&] {
    const SphereForm x = laplacian(parse_sphere_form(sp_text), params_of());
    emit(format, sphere_form_json(x), to_string(x) + "\n");
    return 0;
  });
  for (auto* sub : {delta_sub, lap_sub}) {
    sub->add_flag("--general", sp_general,
                  "keep gamma and eps symbolic instead of the pinned values");
    sub->add_flag("--simplified", sp_simplified,
                  "use gamma = q^2, eps = q^-4 (the default)");
  }

  auto* eigen_sub = sphere_cmd->add_subcommand(
      "eigen", "eigenform table: forms, eigenvalues, heat decay rates");
  eigen_sub->fallthrough();
  eigen_sub->add_option("--family", sp_family, "eigenform family")
      ->required();
  eigen_sub->add_option("--n", sp_n, "family index")->default_val(0);
  eigen_sub->add_option("--p", sp_p, "ladder index (default: table 0..bound)");
  eigen_sub->callback([&] {
    run = [&]() -> int {
      const MetricParams par = MetricParams::symbolic();
      const int lo = sp_p >= 0 ? sp_p : 0;
      const int hi = sp_p >= 0 ? sp_p : (bound > 0 ? bound : 3);
      ordered_json arr = ordered_json::array();
      std::ostringstream os;
      for (int k = lo; k <= hi; ++k) {
        const EigenForm ef = eigenform(sp_family, sp_n, k, par);
        const Scalar decay = Scalar(-1) * par.alpha * ef.eigenvalue;
        ordered_json row;
        row["family"] = sp_family;
        row["n"] = sp_n;
        row["p"] = k;
        row["form"] = to_string(ef.form);
        row["eigenvalue"] = render(ef.eigenvalue, sphere_domain());
        row["decay-rate"] = render(decay, sphere_domain());
        row["verified"] = verify_eigen(ef, par);
        arr.push_back(std::move(row));
        os << sp_family << " n=" << sp_n << " p=" << k << "\n"
           << "  form:       " << to_string(ef.form) << "\n"
           << "  eigenvalue: " << render(ef.eigenvalue, sphere_domain()) << "\n"
           << "  decay rate: " << render(decay, sphere_domain()) << "\n";
      }
      emit(format, arr, os.str());
      return 0;
    };
  });

  auto* harm_sub = sphere_cmd->add_subcommand(
      "harmonic", "kernel of the Laplacian in one degree");
  harm_sub->fallthrough();
  harm_sub->add_option("--degree", sp_degree, "form degree 0..2")->required();
  harm_sub->add_flag("--general", sp_general,
                     "keep gamma and eps symbolic instead of the pinned values");
  harm_sub->callback([&] {
    run = [&]() -> int {
      const int bnd = bound > 0 ? bound : 4;
      const auto kernel = harmonic_kernel(sp_degree, bnd, params_of());
      ordered_json j;
      j["degree"] = sp_degree;
      j["bound"] = bnd;
      j["dimension"] = kernel.size();
      ordered_json arr = ordered_json::array();
      std::ostringstream os;
      os << "harmonic kernel, degree " << sp_degree << ", bound " << bnd
         << ": dimension " << kernel.size() << "\n";
      for (const SphereForm& x : kernel) {
        arr.push_back(to_string(x));
        os << "  " << to_string(x) << "\n";
      }
      j["kernel"] = std::move(arr);
      emit(format, j, os.str());
      return 0;
    };
  });

  auto constants_of = [&]() {
    return solve_constants(parse_sphere_scalar(sp_K), parse_sphere_scalar(sp_L));
  };

  auto* hodge_sub = add_expr_sub("hodge", "duality map of a frame form", [&] {
    const HodgeConstants c = constants_of();
    const SphereForm in = parse_sphere_form(sp_text);
    const SphereForm x = sp_inverse ? hodge_inv(in, c) : hodge(in, c);
    emit(format, sphere_form_json(x), to_string(x) + "\n");
    return 0;
  });
  hodge_sub->add_flag("--inverse", sp_inverse, "apply the inverse map");

  add_expr_sub("integrate", "integral of a 2-form", [&] {
    const Scalar v = integrate(parse_sphere_form(sp_text));
    ordered_json j;
    j["value"] = render(v, sphere_domain());
    emit(format, j, render(v, sphere_domain()) + "\n");
    return 0;
  });

  auto* inner_sub = sphere_cmd->add_subcommand(
      "inner", "sesquilinear pairing of two frame forms");
  inner_sub->fallthrough();
  inner_sub->add_option("--left", sp_text, "left form")->required();
  inner_sub->add_option("--right", sp_right, "right form")->required();
  inner_sub->callback([&] {
    run = [&]() -> int {
      const Scalar v = inner(parse_sphere_form(sp_text),
                             parse_sphere_form(sp_right), constants_of());
      ordered_json j;
      j["value"] = render(v, sphere_domain());
      emit(format, j, render(v, sphere_domain()) + "\n");
      return 0;
    };
  });

  auto* solve_sub = sphere_cmd->add_subcommand(
      "hodge-solve", "solve the duality constants from K and L");
  solve_sub->fallthrough();
  solve_sub->callback([&] {
    run = [&]() -> int {
      const HodgeConstants c = constants_of();
      ordered_json j;
      j["K"] = render(c.K, sphere_domain());
      j["L"] = render(c.L, sphere_domain());
      j["M"] = render(c.M, sphere_domain());
      j["N"] = render(c.N, sphere_domain());
      j["alpha"] = render(c.params.alpha, sphere_domain());
      j["beta"] = render(c.params.beta, sphere_domain());
      j["gamma"] = render(c.params.gamma, sphere_domain());
      j["eps"] = render(c.params.eps, sphere_domain());
      std::ostringstream os;
      for (const auto& [key, val] : j.items())
        os << key << " = " << val.get<std::string>() << "\n";
      emit(format, j, os.str());
      return 0;
    };
  });

  auto* verify_sub = sphere_cmd->add_subcommand(
      "hodge-verify",
      "check double duality and the codifferential identification");
  verify_sub->fallthrough();
  verify_sub->callback([&] {
    run = [&]() -> int {
      const HodgeConstants c = constants_of();
      const int bnd = bound > 0 ? bound : 3;
      const bool dbl = check_double_hodge(c, bnd);
      const bool codiff = check_codifferential(c, c.params, bnd);
      ordered_json j;
      j["bound"] = bnd;
      j["double-hodge"] = dbl;
      j["codifferential"] = codiff;
      j["pass"] = dbl && codiff;
      std::ostringstream os;
      os << "double-hodge: " << (dbl ? "pass" : "FAIL") << "\n"
         << "codifferential: " << (codiff ? "pass" : "FAIL") << "\n";
      emit(format, j, os.str());
      return dbl && codiff ? 0 : 1;
    };
  });

  auto* probe_sub = sphere_cmd->add_subcommand(
      "probe",
      "numeric sign probe of <x,x> at a sample q in (0,1); reports, asserts "
      "nothing");
  probe_sub->fallthrough();
  probe_sub->callback([&] {
    run = [&]() -> int {
      if (q_text.empty())
        throw std::invalid_argument("probe requires --q <rational>");
      const Scalar qv = parse_rational(q_text, "--q");
      if (qv.is_zero())
        throw std::invalid_argument("--q: must be nonzero");
      const HodgeConstants c = constants_of();
      const int bnd = bound > 0 ? bound : 2;
      ordered_json arr = ordered_json::array();
      std::ostringstream os;
      for (int degree = 0; degree <= 2; ++degree)
        for (const SphereForm& x : graded_monomial_basis(degree, bnd)) {
          ordered_json row;
          row["degree"] = degree;
          row["form"] = to_string(x);
          try {
            const Scalar v = inner(x, x, c).substitute(sv::q, qv);
            row["value"] = render(v, Domain{});
            row["sign"] = sign_of(v);
          } catch (const std::domain_error&) {
            row["value"] = nullptr;
            row["sign"] = "pole";
          }
          os << "<x,x> degree " << degree << "  " << to_string(x) << "  ->  "
             << (row["value"].is_null() ? std::string("pole")
                                        : row["value"].get<std::string>())
             << "  (" << row["sign"].get<std::string>() << ")\n";
          arr.push_back(std::move(row));
        }
      emit(format, arr, os.str());
      return 0;
    };
  });

  for (auto* sub : {hodge_sub, inner_sub, solve_sub, verify_sub, probe_sub}) {
    sub->add_option("--K", sp_K, "duality constant K (imaginary)")
        ->default_val("i");
    sub->add_option("--L", sp_L, "duality constant L (imaginary)")
        ->default_val("i*q");
  }

  // ---- deform ---------------------------------------------------------------

  auto* deform_cmd = app.add_subcommand(
      "deform", "time-extension layer: deformed d, product, twist, axioms");
  deform_cmd->require_subcommand(1);
  deform_cmd->fallthrough();

  std::string df_backend = "sphere", df_alpha, df_beta, df_config;
  std::string df_omega = "0", df_rho = "0", df_romega = "0", df_rrho = "0";
  std::string df_witness;
  int df_rounds = 100;
  bool df_inverse = false;
  deform_cmd->add_option("--backend", df_backend, "backend")
      ->check(CLI::IsMember({"sphere", "classical"}))
      ->default_val("sphere");
  deform_cmd->add_option("--alpha", df_alpha,
                         "deformation weight (default: the symbolic weight)");
  deform_cmd->add_option("--beta", df_beta,
                         "classical drift weight (default: symbolic beta)");
  deform_cmd->add_option("--config", df_config,
                         "classical metric/drift JSON config");

  struct DeformOps {
    std::function<Timed<SphereBackend>(const std::string&, const std::string&)>
        s_parse;
    SphereBackend s_b;
    std::optional<ClassicalBackend> c_b;
    int c_dim = 2;
  };

  auto deform_env = [&]() {
    DeformOps ops;
    ops.s_parse = [](const std::string& om, const std::string& rh) {
      return Timed<SphereBackend>{parse_sphere_form(om), parse_sphere_form(rh)};
    };
    if (df_backend == "classical") {
      const ClassicalConfig cfg = load_classical_config(df_config);
      const Scalar wdrift =
          df_beta.empty() ? Scalar::variable(cv::beta) : parse_coord_scalar(df_beta);
      ops.c_b.emplace(cfg.metric, cfg.drift, Scalar(1), wdrift);
      ops.c_dim = cfg.metric.dim;
    }
    return ops;
  };
  auto deform_alpha = [&]() {
    if (df_backend == "classical")
      return df_alpha.empty() ? Scalar::variable(cv::alpha)
                              : parse_coord_scalar(df_alpha);
    return df_alpha.empty() ? Scalar::variable(sv::s)
                            : parse_sphere_scalar(df_alpha);
  };

  auto* dfd = deform_cmd->add_subcommand("d", "deformed differential");
  auto* dfw = deform_cmd->add_subcommand("wedge", "deformed product");
  auto* dfi = deform_cmd->add_subcommand("iso", "twist from the alpha=0 structure");
  auto* dfa = deform_cmd->add_subcommand("axioms", "sampled DGA axiom report");
  auto* dfc = deform_cmd->add_subcommand(
      "closed", "closedness residuals of omega + rho dt under the deformed d");
  for (auto* sub : {dfd, dfw, dfi, dfa, dfc}) sub->fallthrough();
  for (auto* sub : {dfd, dfw, dfi, dfc}) {
    sub->add_option("--omega", df_omega, "space part");
    sub->add_option("--rho", df_rho, "dt part");
  }
  dfw->add_option("--right-omega", df_romega, "right factor space part");
  dfw->add_option("--right-rho", df_rrho, "right factor dt part");
  dfi->add_flag("--inverse", df_inverse, "apply the inverse twist");
  dfa->add_option("--rounds", df_rounds, "sample count")->default_val(100);
  dfc->add_option("--witness", df_witness,
                  "potential whose differential should reproduce omega");

  auto timed_out = [&](const auto& backend, const auto& x) {
    (void)backend;
    ordered_json j;
    j["text"] = timed_text(x);
    emit(format, j, timed_text(x) + "\n");
    return 0;
  };

  dfd->callback([&] {
    run = [&]() -> int {
      const DeformOps ops = deform_env();
      if (ops.c_b) {
        const auto x = Timed<ClassicalBackend>{
            parse_cform(df_omega, ops.c_dim), parse_cform(df_rho, ops.c_dim)};
        return timed_out(*ops.c_b, d_alpha(*ops.c_b, x, deform_alpha()));
      }
      return timed_out(ops.s_b,
                       d_alpha(ops.s_b, ops.s_parse(df_omega, df_rho),
                               deform_alpha()));
    };
  });
  dfw->callback([&] {
    run = [&]() -> int {
      const DeformOps ops = deform_env();
      if (ops.c_b) {
        const auto x = Timed<ClassicalBackend>{
            parse_cform(df_omega, ops.c_dim), parse_cform(df_rho, ops.c_dim)};
        const auto y = Timed<ClassicalBackend>{
            parse_cform(df_romega, ops.c_dim), parse_cform(df_rrho, ops.c_dim)};
        return timed_out(*ops.c_b, wedge_alpha(*ops.c_b, x, y, deform_alpha()));
      }
      return timed_out(ops.s_b,
                       wedge_alpha(ops.s_b, ops.s_parse(df_omega, df_rho),
                                   ops.s_parse(df_romega, df_rrho),
                                   deform_alpha()));
    };
  });
  dfi->callback([&] {
    run = [&]() -> int {
      const DeformOps ops = deform_env();
      if (ops.c_b) {
        const auto x = Timed<ClassicalBackend>{
            parse_cform(df_omega, ops.c_dim), parse_cform(df_rho, ops.c_dim)};
        return timed_out(*ops.c_b,
                         df_inverse ? iso_inv(*ops.c_b, x, deform_alpha())
                                    : iso(*ops.c_b, x, deform_alpha()));
      }
      const auto x = ops.s_parse(df_omega, df_rho);
      return timed_out(ops.s_b, df_inverse
                                    ? iso_inv(ops.s_b, x, deform_alpha())
                                    : iso(ops.s_b, x, deform_alpha()));
    };
  });
  dfa->callback([&] {
    run = [&]() -> int {
      const DeformOps ops = deform_env();
      SplitMix64 rng(std::uint64_t(seed) + 5);
      AxiomReport rep;
      bool commutative = false;
      if (ops.c_b) {
        commutative = true;
        rep = axiom_suite(
            *ops.c_b, deform_alpha(),
            [&](int degree) { return cli_timed_classical(rng, ops.c_dim, degree); },
            df_rounds, true);
      } else {
        rep = axiom_suite(
            ops.s_b, deform_alpha(),
            [&](int degree) { return cli_timed_sphere(rng, degree); },
            df_rounds, false);
      }
      ordered_json j;
      j["rounds"] = df_rounds;
      auto put = [&](const char* key, int checks, int failures) {
        j[key] = {{"checks", checks}, {"failures", failures}};
      };
      put("differential", rep.differential_checks, rep.differential_failures);
      put("leibniz", rep.leibniz_checks, rep.leibniz_failures);
      put("associativity", rep.associativity_checks, rep.associativity_failures);
      put("twist", rep.iso_checks, rep.iso_failures);
      if (commutative)
        put("commutativity", rep.commutativity_checks,
            rep.commutativity_failures);
      j["pass"] = rep.pass();
      std::ostringstream os;
      os << "axioms: " << (rep.pass() ? "pass" : "FAIL") << " ("
         << rep.failures() << " failures in " << df_rounds << " rounds)\n";
      emit(format, j, os.str());
      return rep.pass() ? 0 : 1;
    };
  });
  dfc->callback([&] {
    run = [&]() -> int {
      const DeformOps ops = deform_env();
      ordered_json j;
      std::ostringstream os;
      bool closed = false;
      if (ops.c_b) {
        const CForm xi = parse_cform(df_omega, ops.c_dim);
        const CForm a = parse_cform(df_rho, ops.c_dim);
        std::optional<CForm> wit;
        if (!df_witness.empty()) wit = parse_cform(df_witness, ops.c_dim);
        const auto rep =
            closedness_analysis(*ops.c_b, xi, a, deform_alpha(), wit);
        closed = rep.closed;
        j["curl-residual"] = to_string(rep.curl_residual);
        j["evolution-residual"] = to_string(rep.evolution_residual);
        if (rep.witness_residual)
          j["witness-residual"] = to_string(*rep.witness_residual);
        os << "curl residual:      " << to_string(rep.curl_residual) << "\n"
           << "evolution residual: " << to_string(rep.evolution_residual)
           << "\n";
        if (rep.witness_residual)
          os << "witness residual:   " << to_string(*rep.witness_residual)
             << "\n";
      } else {
        const SphereForm xi = parse_sphere_form(df_omega);
        const SphereForm a = parse_sphere_form(df_rho);
        std::optional<SphereForm> wit;
        if (!df_witness.empty()) wit = parse_sphere_form(df_witness);
        const auto rep =
            closedness_analysis(ops.s_b, xi, a, deform_alpha(), wit);
        closed = rep.closed;
        j["curl-residual"] = to_string(rep.curl_residual);
        j["evolution-residual"] = to_string(rep.evolution_residual);
        if (rep.witness_residual)
          j["witness-residual"] = to_string(*rep.witness_residual);
        os << "curl residual:      " << to_string(rep.curl_residual) << "\n"
           << "evolution residual: " << to_string(rep.evolution_residual)
           << "\n";
        if (rep.witness_residual)
          os << "witness residual:   " << to_string(*rep.witness_residual)
             << "\n";
      }
      j["closed"] = closed;
      os << "closed: " << (closed ? "yes" : "no") << "\n";
      emit(format, j, os.str());
      return 0;
    };
  });

  // ---- classical -------------------------------------------------------------

  auto* classical_cmd = app.add_subcommand(
      "classical", "coordinate-space operators from a metric/drift config");
  classical_cmd->require_subcommand(1);
  classical_cmd->fallthrough();
  std::string cl_config, cl_function = "x1^2", cl_alpha, cl_omega = "dx1",
              cl_rho = "0";
  classical_cmd->add_option("--config", cl_config,
                            "metric/drift JSON config (default: the "
                            "radial/angular model)");

  auto* lc_sub = classical_cmd->add_subcommand(
      "laplace-check",
      "residual between the contracted operator and its divergence form");
  lc_sub->fallthrough();
  lc_sub->add_option("--function", cl_function, "scalar expression")
      ->default_val("x1^2");
  lc_sub->callback([&] {
    run = [&]() -> int {
      const ClassicalConfig cfg = load_classical_config(cl_config);
      const Scalar f = parse_coord_scalar(cl_function);
      const Scalar res = laplace_beltrami_residual(cfg.metric, f);
      ordered_json j;
      j["function"] = cl_function;
      j["residual"] = render(res, coordinate_domain());
      j["pass"] = res.is_zero();
      std::ostringstream os;
      os << "residual: " << render(res, coordinate_domain()) << "\n";
      emit(format, j, os.str());
      return res.is_zero() ? 0 : 1;
    };
  });

  auto* ito_sub = classical_cmd->add_subcommand(
      "ito", "stochastic-differential displays at weights (1/2, 1)");
  ito_sub->fallthrough();
  ito_sub->add_option("--function", cl_function, "scalar expression")
      ->default_val("x1^2");
  ito_sub->callback([&] {
    run = [&]() -> int {
      const ClassicalConfig cfg = load_classical_config(cl_config);
      const ClassicalBackend b = ClassicalBackend::ito(cfg.metric, cfg.drift);
      ordered_json j;
      std::ostringstream os;
      ordered_json coords = ordered_json::array();
      for (int l = 1; l <= cfg.metric.dim; ++l) {
        const auto dxl = ito_dx(l, b);
        coords.push_back(timed_text(dxl));
        os << "d x^" << l << " = " << timed_text(dxl) << "\n";
      }
      j["coordinates"] = std::move(coords);
      const Scalar f = parse_coord_scalar(cl_function);
      const auto df = ito_d(f, b);
      j["function"] = cl_function;
      j["d"] = timed_text(df);
      os << "d(" << cl_function << ") = " << timed_text(df) << "\n";
      emit(format, j, os.str());
      return 0;
    };
  });

  auto* gir_sub = classical_cmd->add_subcommand(
      "girsanov", "drift-reversal closedness residuals");
  gir_sub->fallthrough();
  gir_sub->callback([&] {
    run = [&]() -> int {
      const ClassicalConfig cfg = load_classical_config(cl_config);
      const GirsanovReport rep = girsanov_residuals(cfg.metric, cfg.drift);
      ordered_json j;
      j["curl"] = to_string(rep.r2);
      j["space-time"] = to_string(rep.r1);
      j["connection-remainder"] = to_string(rep.kappa);
      j["closed"] = rep.r1.is_zero() && rep.r2.is_zero();
      std::ostringstream os;
      os << "curl residual:        " << to_string(rep.r2) << "\n"
         << "space-time residual:  " << to_string(rep.r1) << "\n"
         << "connection remainder: " << to_string(rep.kappa) << "\n"
         << "closed: " << (j["closed"].get<bool>() ? "yes" : "no") << "\n";
      emit(format, j, os.str());
      return 0;
    };
  });

  auto* nab_sub = classical_cmd->add_subcommand(
      "nabla", "deformed covariant derivative of a timed 1-form");
  nab_sub->fallthrough();
  nab_sub->add_option("--alpha", cl_alpha, "deformation weight")
      ->default_val("alpha");
  nab_sub->add_option("--omega", cl_omega, "space part (1-form)")
      ->default_val("dx1");
  nab_sub->add_option("--rho", cl_rho, "dt part (function)")->default_val("0");
  nab_sub->callback([&] {
    run = [&]() -> int {
      const ClassicalConfig cfg = load_classical_config(cl_config);
      const ClassicalBackend b =
          ClassicalBackend(cfg.metric, cfg.drift, Scalar(1), Scalar(1));
      const Scalar al = cl_alpha.empty() ? Scalar::variable(cv::alpha)
                                         : parse_coord_scalar(cl_alpha);
      const Timed<ClassicalBackend> x{parse_cform(cl_omega, cfg.metric.dim),
                                      parse_cform(cl_rho, cfg.metric.dim)};
      const TensorPair t = nabla_alpha(b, x, al);
      ordered_json j;
      j["alpha"] = render(al, coordinate_domain());
      j["tensor"] = to_string(t);
      emit(format, j, to_string(t) + "\n");
      return 0;
    };
  });

  CLI11_PARSE(app, argc, argv);

  if (!run && !suite_flag.empty())
    run = [&]() -> int { return run_one_suite(suite_flag); };
  if (!run) {
    std::cerr << app.help();
    return 2;
  }
  try {
    return run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
