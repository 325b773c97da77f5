#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>

#include "fjump/digits.hpp"
#include "fjump/error.hpp"
#include "fjump/frobenius.hpp"
#include "fjump/psi_chain.hpp"
#include "fjump/test_ideal.hpp"
#include "fjump/verify.hpp"

namespace fjump::cli {
namespace {

using json = nlohmann::json;

struct Settings {
  std::uint32_t p = 0;
  std::string var_list;
  std::uint32_t e = 1;
  std::string c;
  std::string bound = "1";
  std::uint32_t depth = 6;
  std::string a;
  std::uint32_t beta = 1;
  std::uint32_t s_max = 64;
  std::string m = "1";
  bool json = false;
  bool left = false;
  std::string corpus;
  std::vector<std::string> positional;
};

std::vector<std::string> split_vars(const std::string& list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= list.size() && !list.empty()) {
    std::size_t comma = std::min(list.find(',', start), list.size());
    out.push_back(list.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

RingPtr ring_for(const Settings& s, const std::vector<std::string>& texts) {
  std::vector<std::string> vars = split_vars(s.var_list);
  if (vars.empty()) {
    for (const auto& t : texts)
      for (auto& v : infer_variables(t))
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  }
  if (vars.empty()) vars = {"x"};
  return RingContext::make(s.p, std::move(vars));
}

Polynomial single_poly(const Settings& s) {
  if (s.positional.size() != 1) throw DomainError("expected exactly one polynomial");
  return parse_poly(s.positional[0], ring_for(s, s.positional));
}

json ideal_json(const Ideal& I) { return ideal_strings(I); }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_froot(const Settings& s, std::ostream& out) {
  if (s.positional.empty()) throw DomainError("expected at least one polynomial");
  RingPtr ctx = ring_for(s, s.positional);
  std::vector<Polynomial> gens;
  for (const auto& t : s.positional) gens.push_back(parse_poly(t, ctx));
  Ideal root = frobenius_root_ideal(Ideal(ctx, gens), s.e);
  if (s.json) emit(out, {{"e", s.e}, {"ideal", ideal_json(root)}});
  else out << format_ideal(root) << '\n';
  return kOk;
}

int cmd_tau(const Settings& s, std::ostream& out) {
  if (s.c.empty()) throw DomainError("tau needs -c <rational>");
  Polynomial f = single_poly(s);
  Rational c = Rational::parse(s.c);
  TauOptions opts{s.s_max};
  Ideal I = s.left ? tau_left_limit(f, c, opts) : tau(f, c, opts);
  if (s.json) emit(out, {{"c", c.str()}, {s.left ? "tau_left" : "tau", ideal_json(I)}});
  else out << format_ideal(I) << '\n';
  return kOk;
}

JumpReport jumps_for(const Settings& s, const Polynomial& f, const Rational& bound) {
  EnumerateOptions opts;
  opts.depth = s.depth;
  opts.tau.s_max = s.s_max;
  return enumerate_jumps(f, bound, opts);
}

int cmd_jumps(const Settings& s, std::ostream& out) {
  Polynomial f = single_poly(s);
  JumpReport rep = jumps_for(s, f, Rational::parse(s.bound));
  if (s.json) {
    json jumps = json::array();
    for (const auto& j : rep.jumps)
      jumps.push_back({{"c", j.c.str()}, {"tau_left", ideal_json(j.tau_left)}, {"tau_at", ideal_json(j.tau_at)}});
    json unresolved = json::array();
    for (const auto& iv : rep.unresolved) unresolved.push_back({{"lo", iv.lo.str()}, {"hi", iv.hi.str()}});
    emit(out, {{"jumps", jumps}, {"unresolved", unresolved}});
  } else {
    for (const auto& j : rep.jumps)
      out << j.c << ": (" << format_ideal(j.tau_left) << ") -> (" << format_ideal(j.tau_at) << ")\n";
    for (const auto& iv : rep.unresolved) out << "unresolved: (" << iv.lo << ", " << iv.hi << "]\n";
  }
  return kOk;
}

int cmd_fpt(const Settings& s, std::ostream& out) {
  Polynomial f = single_poly(s);
  if (f.is_constant()) throw DomainError("a unit has no F-pure threshold");
  JumpReport rep = jumps_for(s, f, Rational(1));
  // fpt <= 1 always; it is certain once no unresolved interval lies below the first jump.
  if (rep.jumps.empty() || (!rep.unresolved.empty() && rep.unresolved.front().lo < rep.jumps.front().c))
    throw BudgetExceeded("the F-pure threshold was not isolated within depth " + std::to_string(s.depth));
  const Rational& c = rep.jumps.front().c;
  if (s.json) emit(out, {{"fpt", c.str()}});
  else out << c << '\n';
  return kOk;
}

int cmd_chain(const Settings& s, std::ostream& out) {
  if (s.a.empty()) throw DomainError("chain needs -a <int>");
  Polynomial f = single_poly(s);
  ChainTrace t = chain(f, BigInt(s.a), s.beta, ChainOptions{s.s_max, 3});
  if (s.json) {
    json terms = json::array();
    for (const auto& I : t.terms) terms.push_back(ideal_json(I));
    emit(out, {{"a", t.a.str()}, {"beta", t.beta}, {"terms", terms}, {"stab_index", t.stab_index}});
  } else {
    for (std::size_t i = 0; i < t.terms.size(); ++i) out << "C_" << i + 1 << ": " << format_ideal(t.terms[i]) << '\n';
    out << "stab_index: " << t.stab_index << '\n';
  }
  return kOk;
}

std::pair<BigInt, std::uint32_t> parse_pair(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw DomainError("expected a class as \"a,beta\", got '" + text + "'");
  std::string a = text.substr(0, comma);
  std::string b = text.substr(comma + 1);
  auto digits = [](const std::string& t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  if (!digits(a) || !digits(b) || b.size() > 4) throw DomainError("expected a class as \"a,beta\", got '" + text + "'");
  return {BigInt(a), static_cast<std::uint32_t>(std::stoul(b))};
}

int cmd_nilcmp(const Settings& s, std::ostream& out) {
  if (s.positional.size() < 3) throw DomainError("nilcmp expects a polynomial and at least two classes \"a,beta\"");
  Settings one = s;
  one.positional = {s.positional[0]};
  Polynomial f = single_poly(one);
  std::vector<NilClass> classes;
  for (std::size_t i = 1; i < s.positional.size(); ++i) {
    auto [a, beta] = parse_pair(s.positional[i]);
    classes.push_back(nil_class(f, a, beta, ChainOptions{s.s_max, 3}));
  }
  json list = json::array();
  bool total = true;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      NilOrder o = nil_compare(classes[i], classes[j]);
      total = total && o.comparable();
      auto label = [](const NilClass& n) { return "(" + n.a.str() + "," + std::to_string(n.beta) + ")"; };
      if (s.json) {
        list.push_back({{"first", label(classes[i])},
                        {"second", label(classes[j])},
                        {"gamma", {classes[i].gamma.str(), classes[j].gamma.str()}},
                        {"representatives", {ideal_json(classes[i].representative), ideal_json(classes[j].representative)}},
                        {"ideals", to_string(o.ideals)},
                        {"comparable", o.comparable()},
                        {"summary", o.describe()}});
      } else {
        out << label(classes[i]) << " vs " << label(classes[j]) << ": gamma " << classes[i].gamma << " vs "
            << classes[j].gamma << "; reps (" << format_ideal(classes[i].representative) << ") vs ("
            << format_ideal(classes[j].representative) << "); " << o.describe() << '\n';
      }
    }
  if (s.json) emit(out, {{"comparisons", list}, {"totally_ordered", total}});
  return total ? kOk : kVerificationFailed;
}

int cmd_orbit(const Settings& s, std::ostream& out) {
  if (s.positional.size() != 1) throw DomainError("orbit expects one rational");
  if (s.p < 2 || !is_prime(s.p)) throw DomainError("p must be prime");
  Rational value = Rational::parse(s.positional[0]);
  Rational m = Rational::parse(s.m);
  if (!m.is_integer() || m.sign() <= 0) throw DomainError("-m must be a positive integer");
  OrbitReport r = orbit(value, s.p, m.num());
  if (s.json) {
    json vals = json::array();
    for (const auto& v : r.orbit) vals.push_back(v.str());
    emit(out, {{"s", r.s.str()}, {"m", r.m.str()}, {"orbit", vals}, {"entry_index", r.entry_index},
               {"cycle_length", r.cycle_length}});
  } else {
    out << "orbit:";
    for (std::size_t i = 0; i < r.orbit.size(); ++i) out << (i ? ", " : " ") << r.orbit[i];
    out << "\nentry_index: " << r.entry_index << "\ncycle_length: " << r.cycle_length << '\n';
  }
  return kOk;
}

int cmd_verify(const Settings& s, std::ostream& out) {
  Corpus corpus = s.corpus.empty() ? default_corpus() : load_corpus(s.corpus);
  SuiteConfig cfg;
  cfg.depth = s.depth;
  cfg.s_max = s.s_max;
  VerificationReport rep = run_suite(corpus, cfg);
  if (s.json) {
    out << rep.to_json() << '\n';
  } else {
    for (const auto& e : rep.entries) {
      out << (e.passed() ? "PASS" : "FAIL") << "  p=" << e.entry.p << "  " << e.entry.f << "  B=" << e.entry.bound
          << "  jumps {";
      for (std::size_t i = 0; i < e.jumps.size(); ++i) out << (i ? ", " : "") << e.jumps[i];
      out << "}\n";
      if (e.error) out << "      error: " << *e.error << '\n';
      for (const auto& c : e.checks)
        if (!c.passed) out << "      " << c.name << ": " << c.detail << '\n';
    }
    std::size_t ok = std::count_if(rep.entries.begin(), rep.entries.end(), [](const EntryReport& e) { return e.passed(); });
    out << ok << "/" << rep.entries.size() << " entries passed, digest " << rep.digest() << '\n';
  }
  return rep.passed() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius roots, test ideals and F-jumping coefficients over F_p", "fjump"};
  app.require_subcommand(1);
  Settings s;

  auto ring_flags = [&](CLI::App* sub, bool need_p = true) {
    auto* opt = sub->add_option("-p", s.p, "characteristic (prime below 65536)");
    if (need_p) opt->required();
    sub->add_option("--vars", s.var_list, "variable names, comma separated");
    sub->add_flag("--json", s.json, "JSON output");
  };
  auto budget_flags = [&](CLI::App* sub) {
    sub->add_option("--smax", s.s_max, "longest chain walked before giving up")->check(CLI::PositiveNumber);
  };

  auto* froot = app.add_subcommand("froot", "Frobenius root I_e of the ideal generated by the polynomials");
  ring_flags(froot);
  froot->add_option("-e", s.e, "root exponent")->check(CLI::Range(1u, 24u));
  froot->add_option("polys", s.positional, "generators")->required();

  auto* tau_cmd = app.add_subcommand("tau", "test ideal tau(f^c)");
  ring_flags(tau_cmd);
  budget_flags(tau_cmd);
  tau_cmd->add_option("-c", s.c, "exponent, a or a/b")->required();
  tau_cmd->add_flag("--left", s.left, "left limit tau(f^{c-eps}) instead");
  tau_cmd->add_option("poly", s.positional, "polynomial")->required();

  auto* jumps = app.add_subcommand("jumps", "F-jumping coefficients in (0, B]");
  ring_flags(jumps);
  budget_flags(jumps);
  jumps->add_option("-B", s.bound, "upper bound, a or a/b");
  jumps->add_option("--depth", s.depth, "refinement depth")->check(CLI::Range(1u, 16u));
  jumps->add_option("poly", s.positional, "polynomial")->required();

  auto* fpt = app.add_subcommand("fpt", "F-pure threshold (first jumping coefficient)");
  ring_flags(fpt);
  budget_flags(fpt);
  fpt->add_option("--depth", s.depth, "refinement depth")->check(CLI::Range(1u, 16u));
  fpt->add_option("poly", s.positional, "polynomial")->required();

  auto* chain_cmd = app.add_subcommand("chain", "descending chain I_{s beta}(g^{a psi_s(p^beta)})");
  ring_flags(chain_cmd);
  budget_flags(chain_cmd);
  chain_cmd->add_option("-a", s.a, "a >= 0")->required();
  chain_cmd->add_option("-b", s.beta, "beta >= 1")->check(CLI::Range(1u, 24u));
  chain_cmd->add_option("poly", s.positional, "polynomial")->required();

  auto* nilcmp = app.add_subcommand("nilcmp", "order of Nil classes given as a,beta pairs");
  ring_flags(nilcmp);
  budget_flags(nilcmp);
  nilcmp->add_option("args", s.positional, "polynomial followed by classes a,beta")->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "orbit of s under t -> {p t} modulo m");
  ring_flags(orbit_cmd);
  orbit_cmd->add_option("-m", s.m, "modulus (positive integer)");
  orbit_cmd->add_option("s", s.positional, "rational in [0, m)")->required();

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--corpus", s.corpus, "JSON-lines corpus file");
  verify->add_flag("--json", s.json, "JSON report");
  verify->add_option("--depth", s.depth, "refinement depth")->check(CLI::Range(1u, 16u));
  budget_flags(verify);

  std::vector<const char*> argv{"fjump"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "fjump: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*froot) return cmd_froot(s, out);
    if (*tau_cmd) return cmd_tau(s, out);
    if (*jumps) return cmd_jumps(s, out);
    if (*fpt) return cmd_fpt(s, out);
    if (*chain_cmd) return cmd_chain(s, out);
    if (*nilcmp) return cmd_nilcmp(s, out);
    if (*orbit_cmd) return cmd_orbit(s, out);
    if (*verify) return cmd_verify(s, out);
  } catch (const ParseError& e) {
    err << "fjump: parse error: " << e.what() << '\n';
    return kParse;
  } catch (const BudgetExceeded& e) {
    err << "fjump: budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const ExponentOverflow& e) {
    err << "fjump: budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    err << "fjump: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace fjump::cli
