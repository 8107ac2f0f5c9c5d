// oinst: command-line front end for the orthogonal-instanton toolkit.
//
// Exit codes: 0 = pass, 1 = usage or schema error, 2 = a mathematical
// condition failed.

#include <oinst/oinst.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace oinst;

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMath = 2;

struct Options {
  std::string file;
  std::optional<std::size_t> r;
  std::string P, Q;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  long box = 10;
  long long kmin = -4, kmax = 0;
  std::size_t budget = 1000;
  std::size_t trials = 25;
  std::size_t c = 0, n = 0;
  std::string mode = "pure";
  std::size_t terms = 3;
  std::string out;
  bool json = false;
};

/// Output envelope; byte-identical across runs except "timing_ms".
struct Report {
  json command = json::array();
  std::string input_hash;
  json results = json::object();
  std::vector<std::string> warnings;
};

Point parse_point(const std::string& text, const char* flag) {
  Point p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      p.emplace_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::UsageError, std::string(flag) + " expects comma-separated integers, got '" + text + "'");
    }
  }
  return p;
}

struct Loaded {
  SpecFile spec;
  FlatForm form;
  std::size_t r;
};

Loaded load(const Options& o, Report& rep) {
  const std::string text = read_file(o.file);
  rep.input_hash = fnv1a_hex(text);
  SpecFile spec = parse_spec(text);
  const std::size_t r = o.r.value_or(spec.r);
  return {spec, flatten(spec.tensor()), r};
}

std::string point_str(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].str();
  return s + ")";
}

int cmd_verify(const Options& o, Report& rep, std::ostream& out) {
  auto [spec, form, r] = load(o, rep);
  const auto cr = check_conditions(form, r, {o.budget, o.seed, 10});
  rep.results = to_json(cr);
  rep.warnings = cr.warnings;
  if (!o.json) {
    out << "spec " << spec.name.value_or(o.file) << ": c=" << form.c << " n=" << form.n << " r=" << r << '\n'
        << "  rank A = " << cr.rank_A << " (2c+r = " << cr.a1_expected << ")  A1 " << (cr.a1_ok ? "ok" : "FAIL") << '\n'
        << "  A2 " << to_string(cr.a2_status) << '\n'
        << "  A3 " << (cr.a3_ok ? "ok" : "FAIL") << " (|S| = " << cr.q_subset.size() << ")\n"
        << "  precheck " << to_string(cr.precheck) << '\n';
    for (const auto& w : cr.warnings) out << "  warning: " << w << '\n';
    out << (cr.all_ok() ? "PASS" : "FAIL") << '\n';
  }
  return cr.all_ok() ? kExitPass : kExitMath;
}

int cmd_monad(const Options& o, Report& rep, std::ostream& out) {
  auto [spec, form, r] = load(o, rep);
  const Monad m = build_monad(form, r);
  const bool identity = verify_monad_identity(m.alpha, m.beta);
  rep.results = {{"dim_W", m.subset.size()}, {"subset", m.subset}, {"alpha", to_json(m.alpha)},
                 {"beta_t", to_json(m.beta.transpose())}, {"beta_alpha_zero", identity}};
  if (!o.json) {
    out << "O(-1)^" << form.c << " --alpha--> O^" << m.subset.size() << " --beta--> O(1)^" << form.c << "\n\nalpha =\n"
        << m.alpha << "\nbeta^t =\n"
        << m.beta.transpose() << "\nbeta . alpha = 0: " << (identity ? "yes" : "NO") << '\n';
  }
  return identity ? kExitPass : kExitMath;
}

int cmd_splitting(const Options& o, Report& rep, std::ostream& out) {
  auto [spec, form, r] = load(o, rep);
  const Point p = parse_point(o.P, "--P"), q = parse_point(o.Q, "--Q");
  const auto v = splitting_type(form, p, q);
  rep.results = to_json(v);
  rep.results["P"] = to_json(std::span<const Rat>(p));
  rep.results["Q"] = to_json(std::span<const Rat>(q));
  if (!o.json) {
    out << "line through P=" << point_str(p) << " Q=" << point_str(q) << "\n\nbeta(Q) alpha(P) =\n"
        << v.gamma << "\ndet = " << v.determinant;
    if (v.pfaffian) out << ", Pf = " << *v.pfaffian;
    out << "\nsplitting: " << to_string(v.verdict) << '\n';
  }
  return kExitPass;
}

int cmd_scan(const Options& o, Report& rep, std::ostream& out) {
  auto [spec, form, r] = load(o, rep);
  if (o.samples == 0) throw Error(ErrorKind::UsageError, "--samples must be at least 1");
  ScanOptions so{o.samples, o.seed, o.box, {}};
  if (!o.P.empty() || !o.Q.empty()) so.forced.emplace_back(parse_point(o.P, "--P"), parse_point(o.Q, "--Q"));
  const auto s = scan_lines(form, so);
  rep.results = to_json(s);
  if (!o.json) {
    out << "samples " << s.samples << "  trivial " << s.trivial << "  jumping " << s.jumping << "  degenerate draws "
        << s.degenerate << '\n';
    if (!s.witnesses.empty()) {
      out << "P,Q,det\n";
      for (const auto& w : s.witnesses) out << '"' << point_str(w.P) << "\",\"" << point_str(w.Q) << "\"," << w.det << '\n';
    }
  }
  return kExitPass;
}

int cmd_kronecker(const Options& o, Report& rep, std::ostream& out) {
  auto [spec, form, r] = load(o, rep);
  const auto k = kronecker_conditions(form, r, o.budget, o.seed);
  rep.results = to_json(k);
  if (!k.k3_printed_ok())
    rep.warnings.push_back("rank of gamma-hat is " + std::to_string(k.rank_gamma) + ", not the literal 2n+r = " +
                           std::to_string(k.printed_2n_plus_r) + "; 2c+r is the operative condition");
  if (!o.json) {
    out << "K1 " << to_string(k.k1) << "\nK2 " << to_string(k.k2) << " (transpose dual of K1)\n"
        << "K3 rank gamma-hat = " << k.rank_gamma << "  vs 2c+r = " << k.expected_2c_plus_r << (k.k3_ok() ? " ok" : " FAIL")
        << "  vs 2n+r = " << k.printed_2n_plus_r << (k.k3_printed_ok() ? " ok" : " mismatch") << '\n';
  }
  return k.k1_ok() && k.k3_ok() ? kExitPass : kExitMath;
}

int cmd_cohomology(const Options& o, Report& rep, std::ostream& out) {
  auto [spec, form, r] = load(o, rep);
  const auto inst = verify_instanton(form, r);
  const auto t = h_table(form, r, o.kmin, o.kmax);
  rep.results = {{"table", to_json(t)}, {"instanton", to_json(inst)}, {"discrepancies", t.discrepancies}};
  rep.warnings = t.discrepancies;
  if (!o.json) {
    out << "h^i(E(k)), c=" << form.c << " n=" << form.n << " r=" << r << "  (D direct, 0 forced, S Serre dual)\n     ";
    for (long long k = o.kmin; k <= o.kmax; ++k) out << std::string(k < 0 ? 5 : 6, ' ') << k;
    out << '\n';
    for (std::size_t i = form.n + 1; i-- > 0;) {
      out << "  i=" << i << ' ';
      for (long long k = o.kmin; k <= o.kmax; ++k) {
        const auto& e = t.entries.at({i, k});
        const std::string cell = std::to_string(e.dim) + (e.cert == Cert::Direct ? "D" : e.cert == Cert::SerreDual ? "S" : "0");
        out << std::string(7 - std::min<std::size_t>(cell.size(), 6), ' ') << cell;
      }
      out << '\n';
    }
    for (const auto& c : inst.checks) out << "  " << (c.ok ? "ok   " : "FAIL ") << c.name << '\n';
    out << "  charge recomputed = " << inst.charge << '\n';
  }
  return inst.ok() && t.discrepancies.empty() ? kExitPass : kExitMath;
}

int cmd_moduli(const Options& o, Report& rep, std::ostream& out) {
  const auto m = moduli_dim(o.c, o.n);
  rep.results = to_json(m);
  if (m.possibly_empty()) rep.warnings.push_back("negative expected dimension");
  if (!o.json)
    out << "dim = C(" << o.c << ",2) C(" << o.n + 1 << ",2) - " << o.c << "^2 = " << m.ambient_dim << " - " << m.group_dim
        << " = " << m.dim << '\n';
  return kExitPass;
}

int cmd_generate(const Options& o, Report& rep, std::ostream& out) {
  GenMode mode;
  if (o.mode == "pure")
    mode = GenMode::Pure;
  else if (o.mode == "sum")
    mode = GenMode::Sum;
  else
    throw Error(ErrorKind::UsageError, "--mode must be pure or sum");
  const auto g = generate(o.c, o.n, mode, o.seed, o.terms);
  rep.results = {{"spec", to_json(g.spec)}, {"attempts", g.attempts}};
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw Error(ErrorKind::UsageError, "cannot write " + o.out);
    f << to_json(g.spec).dump(2) << '\n';
  }
  if (!o.json) out << to_json(g.spec).dump(2) << "\n(attempts: " << g.attempts << ")\n";
  return kExitPass;
}

int cmd_orbit(const Options& o, Report& rep, std::ostream& out) {
  auto [spec, form, r] = load(o, rep);
  const auto p = orbit_probe(form, o.trials, o.seed);
  rep.results = to_json(p);
  if (!o.json) {
    out << p.trials << " random group elements, " << p.panel_lines << " panel lines: "
        << (p.ok() ? "all invariants hold" : std::to_string(p.violations.size()) + " violations") << '\n';
    for (const auto& v : p.violations) out << "  " << v << '\n';
  }
  return p.ok() ? kExitPass : kExitMath;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::RankMismatch:
    case ErrorKind::GenerationExhausted:
    case ErrorKind::Singular:
      return kExitMath;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal instanton bundles from skew-tensor symmetric forms"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* sub) { sub->add_option("spec", o.file, "spec JSON file")->required(); };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "machine-readable output"); };
  auto add_r = [&](CLI::App* sub) { sub->add_option("--r", o.r, "bundle rank (defaults to the spec's r)"); };
  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "RNG seed"); };

  auto* verify = app.add_subcommand("verify", "check (A1)-(A3) and the charge/rank prechecks");
  add_file(verify), add_r(verify), add_seed(verify), add_json(verify);
  verify->add_option("--budget", o.budget, "witness-search samples when A is not full rank");

  auto* monad = app.add_subcommand("monad", "build alpha and beta and check beta.alpha = 0");
  add_file(monad), add_r(monad), add_json(monad);

  auto* split = app.add_subcommand("splitting", "splitting type on the line through P and Q");
  add_file(split), add_json(split);
  split->add_option("--P", o.P, "first point, comma-separated integers")->required();
  split->add_option("--Q", o.Q, "second point, comma-separated integers")->required();

  auto* scan = app.add_subcommand("scan-lines", "splitting verdicts on seeded random lines");
  add_file(scan), add_seed(scan), add_json(scan);
  scan->add_option("--samples", o.samples, "number of lines");
  scan->add_option("--box", o.box, "coordinates drawn from [-box, box]");
  scan->add_option("--P", o.P, "optional forced first line: point P");
  scan->add_option("--Q", o.Q, "optional forced first line: point Q");

  auto* kron = app.add_subcommand("kronecker", "Kronecker module conditions (K1)-(K3)");
  add_file(kron), add_r(kron), add_seed(kron), add_json(kron);
  kron->add_option("--budget", o.budget, "sampled directions when A is not full rank");

  auto* coh = app.add_subcommand("cohomology", "cohomology table h^i(E(k))");
  add_file(coh), add_r(coh), add_json(coh);
  coh->add_option("--kmin", o.kmin, "smallest twist");
  coh->add_option("--kmax", o.kmax, "largest twist");

  auto* mod = app.add_subcommand("moduli-dim", "moduli space dimension");
  mod->add_option("--c", o.c, "charge")->required();
  mod->add_option("--n", o.n, "projective dimension")->required();
  add_json(mod);

  auto* gen = app.add_subcommand("generate", "random verified spec with r = (n-1)c");
  gen->add_option("--c", o.c, "charge")->required();
  gen->add_option("--n", o.n, "projective dimension")->required();
  gen->add_option("--mode", o.mode, "pure or sum");
  gen->add_option("--terms", o.terms, "number of terms in sum mode");
  gen->add_option("--out", o.out, "write the spec to this file");
  add_seed(gen), add_json(gen);

  auto* orbit = app.add_subcommand("orbit-probe", "invariants along random GL(H_c) orbits");
  add_file(orbit), add_seed(orbit), add_json(orbit);
  orbit->add_option("--trials", o.trials, "random group elements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  Report rep;
  for (int i = 1; i < argc; ++i) rep.command.push_back(argv[i]);
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream human;
  int code = kExitPass;
  try {
    if (*verify) code = cmd_verify(o, rep, human);
    else if (*monad) code = cmd_monad(o, rep, human);
    else if (*split) code = cmd_splitting(o, rep, human);
    else if (*scan) code = cmd_scan(o, rep, human);
    else if (*kron) code = cmd_kronecker(o, rep, human);
    else if (*coh) code = cmd_cohomology(o, rep, human);
    else if (*mod) code = cmd_moduli(o, rep, human);
    else if (*gen) code = cmd_generate(o, rep, human);
    else if (*orbit) code = cmd_orbit(o, rep, human);
  } catch (const SpecError& e) {
    std::cerr << "error: invalid spec\n";
    for (const auto& v : e.violations()) std::cerr << "  " << to_string(v.kind) << " at " << v.pointer << ": " << v.message << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (o.json) {
    json j{{"command", rep.command}, {"input_hash", rep.input_hash}, {"results", rep.results}, {"warnings", rep.warnings},
           {"timing_ms", elapsed}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << human.str();
  }
  return code;
}
