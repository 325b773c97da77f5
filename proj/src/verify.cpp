#include "fjump/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "fjump/canonical.hpp"
#include "fjump/error.hpp"
#include "fjump/ideal.hpp"
#include "fjump/polynomial.hpp"
#include "fjump/psi_chain.hpp"
#include "fjump/test_ideal.hpp"

namespace fjump {
namespace {

using json = nlohmann::json;

const char* const kShippedCorpus = R"({"p": 7, "f": "x^2+y^3", "B": "1", "expect_jumps": ["5/6", "1"]}
{"p": 5, "f": "x^2+y^3", "B": "1", "expect_jumps": ["4/5", "1"]}
{"p": 2, "f": "x", "B": "3", "expect_jumps": ["1", "2", "3"]}
{"p": 3, "f": "x^2", "B": "2", "expect_jumps": ["1/2", "1", "3/2", "2"]}
{"p": 5, "f": "x*y", "B": "2", "expect_jumps": ["1", "2"]}
{"p": 3, "f": "x^2*y^3", "B": "1", "expect_jumps": ["1/3", "1/2", "2/3", "1"]}
{"p": 5, "f": "x^2+y^2", "B": "1", "expect_jumps": ["1"]}
{"p": 3, "f": "y^2+2*x^3+2*x", "B": "2", "expect_jumps": ["1", "2"]}
{"p": 2, "f": "x^2+y^3", "B": "1"}
{"p": 3, "f": "x^2+y^3", "B": "1"}
{"p": 7, "f": "x^3+y^3", "B": "1"}
{"p": 2, "f": "x^2*y+x*y^2", "B": "1"}
{"p": 5, "f": "x^3+y^4", "B": "1"}
{"p": 2, "f": "x^3+y^2+x*y", "B": "1"}
)";

[[noreturn]] void schema_error(std::size_t index, const std::string& what) {
  throw DomainError("corpus entry " + std::to_string(index) + ": " + what);
}

CorpusEntry parse_entry(const std::string& line, std::size_t index) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    schema_error(index, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) schema_error(index, "expected a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "p" && key != "f" && key != "B" && key != "expect_jumps" && key != "vars")
      schema_error(index, "unknown field \"" + key + "\"");
  CorpusEntry e;
  if (!j.contains("p") || !j["p"].is_number_unsigned()) schema_error(index, "\"p\" must be a positive integer");
  auto p = j["p"].get<std::uint64_t>();
  if (p >= (1u << 16) || !is_prime(p)) schema_error(index, "\"p\" must be a prime below 65536");
  e.p = static_cast<std::uint32_t>(p);
  if (!j.contains("f") || !j["f"].is_string()) schema_error(index, "\"f\" must be a string");
  e.f = j["f"].get<std::string>();
  auto rational_field = [&](const json& v, const char* what) {
    try {
      if (v.is_string()) return Rational::parse(v.get<std::string>());
      if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    } catch (const Error& err) {
      schema_error(index, std::string(what) + ": " + err.what());
    }
    schema_error(index, std::string(what) + " must be a rational string like \"5/6\"");
  };
  if (!j.contains("B")) schema_error(index, "missing \"B\"");
  e.bound = rational_field(j["B"], "\"B\"");
  if (e.bound.sign() <= 0) schema_error(index, "\"B\" must be positive");
  if (j.contains("vars")) {
    if (!j["vars"].is_array()) schema_error(index, "\"vars\" must be an array of names");
    for (const auto& v : j["vars"]) {
      if (!v.is_string()) schema_error(index, "\"vars\" must be an array of names");
      e.vars.push_back(v.get<std::string>());
    }
  }
  if (j.contains("expect_jumps")) {
    if (!j["expect_jumps"].is_array()) schema_error(index, "\"expect_jumps\" must be an array");
    std::vector<Rational> jumps;
    for (const auto& v : j["expect_jumps"]) jumps.push_back(rational_field(v, "\"expect_jumps\""));
    e.expect_jumps = std::move(jumps);
  }
  try {
    auto vars = e.vars.empty() ? infer_variables(e.f) : e.vars;
    if (vars.empty()) vars = {"x"};
    Polynomial f = parse_poly(e.f, RingContext::make(e.p, vars));
    if (f.is_zero() || f.is_constant()) schema_error(index, "\"f\" must be a non-constant polynomial");
  } catch (const DomainError&) {
    throw;
  } catch (const Error& err) {
    schema_error(index, std::string("\"f\": ") + err.what());
  }
  return e;
}

std::string join(const std::vector<Rational>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + "}";
}

/// Uniform-ish rational strictly inside (lo, hi).
Rational sample_between(const Rational& lo, const Rational& hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> den_dist(2, 64);
  for (int attempt = 0;; ++attempt) {
    BigInt den = den_dist(rng) + attempt;
    BigInt first = (lo * Rational(den)).floor() + 1;
    BigInt last = (hi * Rational(den)).ceil() - 1;
    if (first > last) continue;
    BigInt span = last - first;
    auto offset = std::uniform_int_distribution<std::uint64_t>(0, to_u64(span, "sample span"))(rng);
    return Rational(first + offset, den);
  }
}

class EntryVerifier {
 public:
  EntryVerifier(const CorpusEntry& entry, const SuiteConfig& cfg, std::uint64_t seed)
      : entry_(entry),
        cfg_(cfg),
        rng_(seed),
        f_(make_poly(entry)),
        ev_(f_, TauOptions{cfg.s_max}),
        chain_opts_{cfg.s_max, 3} {}

  void run(EntryReport& out) {
    EnumerateOptions eo;
    eo.depth = cfg_.depth;
    eo.tau.s_max = cfg_.s_max;
    report_.emplace(enumerate_jumps(f_, entry_.bound, eo));
    for (const auto& j : report_->jumps) out.jumps.push_back(j.c);
    out.checks.push_back(guard("localization", [&] { return localization(); }));
    out.checks.push_back(guard("right_constancy", [&] { return right_constancy(); }));
    out.checks.push_back(guard("closed_chain", [&] { return closed_chain(); }));
    out.checks.push_back(guard("alpha_minus_one", [&] { return alpha_minus_one(); }));
    out.checks.push_back(guard("pc_law", [&] { return pc_law(); }));
    out.checks.push_back(guard("chain_stabilization", [&] { return chain_stabilization(); }));
    out.checks.push_back(guard("nil_order", [&] { return nil_order(); }));
    out.checks.push_back(guard("bijection", [&] { return bijection(); }));
    out.checks.push_back(guard("expected_jumps", [&] { return expected_jumps(); }));
  }

 private:
  static Polynomial make_poly(const CorpusEntry& e) {
    auto vars = e.vars.empty() ? infer_variables(e.f) : e.vars;
    if (vars.empty()) vars = {"x"};
    return parse_poly(e.f, RingContext::make(e.p, vars));
  }

  template <class Fn>
  static CheckResult guard(const char* name, Fn fn) {
    try {
      auto [ok, detail] = fn();
      return CheckResult{name, ok, std::move(detail)};
    } catch (const std::exception& e) {
      return CheckResult{name, false, std::string("error: ") + e.what()};
    }
  }

  using Outcome = std::pair<bool, std::string>;

  const std::vector<Jump>& jumps() const { return report_->jumps; }

  // Upper end of the constancy interval that starts at jump k (k = -1 for 0).
  Rational next_after(std::ptrdiff_t k) const {
    auto next = static_cast<std::size_t>(k + 1);
    return next < jumps().size() ? jumps()[next].c : entry_.bound;
  }

  // tau(f^c) = I_e(f^r) for c < r/p^e below the next jump; every flagged interval resolved.
  Outcome localization() {
    if (!report_->complete())
      return {false, std::to_string(report_->unresolved.size()) + " unresolved interval(s), first (" +
                         report_->unresolved.front().lo.str() + ", " + report_->unresolved.front().hi.str() + "]"};
    std::size_t checked = 0;
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(jumps().size()); ++k) {
      const Rational& c = jumps()[k].c;
      const Rational upper = next_after(k);
      for (std::uint32_t e = 1; e <= cfg_.depth + 2; ++e) {
        BigInt r = (c * Rational(ipow(BigInt(entry_.p), e))).floor() + 1;
        Rational point(r, ipow(BigInt(entry_.p), e));
        if (point >= upper) continue;
        ++checked;
        if (!ideal_equal(tau_dyadic(f_, r, e), jumps()[k].tau_at))
          return {false, "tau(" + c.str() + ") != I_" + std::to_string(e) + "(f^" + r.str() + ")"};
      }
    }
    return {true, std::to_string(checked) + " dyadic points agree"};
  }

  Outcome right_constancy() {
    std::size_t checked = 0;
    for (std::ptrdiff_t k = -1; k < static_cast<std::ptrdiff_t>(jumps().size()); ++k) {
      Rational lo = k < 0 ? Rational(0) : jumps()[k].c;
      Rational hi = next_after(k);
      bool closed_top = k + 1 == static_cast<std::ptrdiff_t>(jumps().size());
      if (hi <= lo) continue;
      Ideal base = ev_.tau(lo);
      for (std::uint32_t i = 0; i < cfg_.constancy_samples; ++i) {
        Rational s = sample_between(lo, hi, rng_);
        ++checked;
        if (!ideal_equal(ev_.tau(s), base))
          return {false, "tau(" + s.str() + ") != tau(" + lo.str() + ")"};
      }
      if (closed_top) {
        ++checked;
        if (!ideal_equal(ev_.tau(hi), base)) return {false, "tau(" + hi.str() + ") != tau(" + lo.str() + ")"};
      }
    }
    return {true, std::to_string(checked) + " samples constant"};
  }

  Outcome closed_chain() {
    Ideal prev = Ideal::unit(f_.context());
    for (std::size_t k = 0; k < jumps().size(); ++k) {
      const Jump& j = jumps()[k];
      if (k > 0 && !(jumps()[k - 1].c < j.c)) return {false, "jumps not strictly increasing at " + j.c.str()};
      if (!ideal_equal(j.tau_left, prev)) return {false, "tau_left(" + j.c.str() + ") != previous tau"};
      if (!ideal_contains(j.tau_left, j.tau_at) || ideal_equal(j.tau_left, j.tau_at))
        return {false, "containment at " + j.c.str() + " is not strict"};
      prev = j.tau_at;
    }
    return {true, std::to_string(jumps().size()) + " strict steps"};
  }

  Outcome alpha_minus_one() {
    std::size_t checked = 0;
    for (const auto& j : jumps()) {
      if (!(j.c > Rational(1))) continue;
      ++checked;
      Rational down = j.c - Rational(1);
      if (!ev_.is_jumping(down).jumping) return {false, down.str() + " is not jumping though " + j.c.str() + " is"};
    }
    return {true, std::to_string(checked) + " jumps above 1"};
  }

  Outcome pc_law() {
    std::size_t checked = 0;
    const Rational p(static_cast<std::int64_t>(entry_.p));
    for (const auto& j : jumps()) {
      Rational pc = p * j.c;
      if (pc > entry_.bound) continue;
      ++checked;
      if (!ev_.is_jumping(pc).jumping) return {false, pc.str() + " is not jumping though " + j.c.str() + " is"};
    }
    return {true, std::to_string(checked) + " multiples within the bound"};
  }

  std::vector<std::pair<BigInt, std::uint32_t>> chain_pairs() const {
    std::vector<std::pair<BigInt, std::uint32_t>> out;
    for (std::uint32_t beta = 1; beta <= 2; ++beta) {
      BigInt m = ipow(BigInt(entry_.p), beta) - 1;
      if (beta > 1 && m > 26) break;
      for (const BigInt& a : std::vector<BigInt>{1, BigInt((m + 1) / 2), m, BigInt(m + 1)}) {
        if (Rational(a, m) > entry_.bound) continue;
        if (std::find(out.begin(), out.end(), std::make_pair(a, beta)) == out.end()) out.emplace_back(a, beta);
      }
    }
    return out;
  }

  Outcome chain_stabilization() {
    for (const auto& [a, beta] : chain_pairs()) {
      ChainTrace t = chain(f_, a, beta, chain_opts_);
      for (std::size_t s = 0; s + 1 < t.terms.size(); ++s)
        if (!ideal_contains(t.terms[s], t.terms[s + 1]))
          return {false, "chain (a=" + a.str() + ", beta=" + std::to_string(beta) + ") ascends at s=" +
                             std::to_string(s + 1)};
      Rational gamma(a, ipow(BigInt(entry_.p), beta) - 1);
      if (!ideal_equal(t.representative(), ev_.tau_left(gamma)))
        return {false, "stable value for gamma=" + gamma.str() + " differs from the left limit"};
      classes_.push_back(NilClass{a, beta, gamma, t.representative()});
    }
    return {true, std::to_string(classes_.size()) + " chains stabilized"};
  }

  Outcome nil_order() {
    if (classes_.empty()) chain_stabilization();
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < classes_.size(); ++i)
      for (std::size_t j = i + 1; j < classes_.size(); ++j) {
        NilOrder o = nil_compare(classes_[i], classes_[j]);
        ++pairs;
        if (!o.comparable() || !o.monotone())
          return {false, "classes gamma=" + classes_[i].gamma.str() + " and " + classes_[j].gamma.str() + ": " +
                             o.describe()};
      }
    return {true, std::to_string(pairs) + " pairs totally ordered, larger gamma gives larger Nil"};
  }

  Outcome bijection() {
    std::size_t checked = 0;
    for (std::ptrdiff_t k = -1; k < static_cast<std::ptrdiff_t>(jumps().size()); ++k) {
      Rational c = k < 0 ? Rational(0) : jumps()[k].c;
      Rational upper = next_after(k);
      if (upper <= c) continue;
      BijectionResult r = bijection_check(f_, c, upper, 12, chain_opts_);
      ++checked;
      if (!r.ok) return {false, "c=" + c.str() + ": " + r.detail};
    }
    return {true, std::to_string(checked) + " test ideals matched"};
  }

  Outcome expected_jumps() {
    if (!entry_.expect_jumps) return {true, "no expectation given"};
    std::vector<Rational> got;
    for (const auto& j : jumps()) got.push_back(j.c);
    if (got != *entry_.expect_jumps) return {false, "found " + join(got) + ", expected " + join(*entry_.expect_jumps)};
    return {true, join(got)};
  }

  const CorpusEntry& entry_;
  SuiteConfig cfg_;
  std::mt19937_64 rng_;
  Polynomial f_;
  TauEvaluator ev_;
  ChainOptions chain_opts_;
  std::optional<JumpReport> report_;
  std::vector<NilClass> classes_;
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

Corpus parse_corpus(std::string_view jsonl) {
  Corpus corpus;
  std::istringstream in{std::string(jsonl)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    corpus.entries.push_back(parse_entry(line, corpus.entries.size()));
  }
  if (corpus.entries.empty()) throw DomainError("corpus has no entries");
  return corpus;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open corpus file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

Corpus default_corpus() { return parse_corpus(kShippedCorpus); }

const std::vector<std::string>& suite_checks() {
  static const std::vector<std::string> names = {"localization", "right_constancy",     "closed_chain",
                                                 "alpha_minus_one", "pc_law",            "chain_stabilization",
                                                 "nil_order",       "bijection",         "expected_jumps"};
  return names;
}

bool EntryReport::passed() const {
  return !error && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool VerificationReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const EntryReport& e) { return e.passed(); });
}

std::string VerificationReport::to_json(bool with_timings, int indent) const {
  json doc;
  doc["seed"] = seed;
  doc["passed"] = passed();
  json list = json::array();
  for (const auto& e : entries) {
    json item;
    item["index"] = e.index;
    item["p"] = e.entry.p;
    item["f"] = e.entry.f;
    item["B"] = e.entry.bound.str();
    json jumps = json::array();
    for (const auto& c : e.jumps) jumps.push_back(c.str());
    item["jumps"] = jumps;
    json checks = json::object();
    for (const auto& c : e.checks) checks[c.name] = {{"passed", c.passed}, {"detail", c.detail}};
    item["checks"] = checks;
    if (e.error) item["error"] = *e.error;
    item["passed"] = e.passed();
    if (with_timings) item["seconds"] = e.seconds;
    list.push_back(item);
  }
  doc["entries"] = list;
  if (with_timings) doc["seconds"] = seconds;
  else doc["digest"] = digest();
  return doc.dump(indent);
}

std::string VerificationReport::digest() const {
  json doc;
  doc["seed"] = seed;
  json list = json::array();
  for (const auto& e : entries) {
    json item = {{"index", e.index}, {"p", e.entry.p}, {"f", e.entry.f}, {"B", e.entry.bound.str()}};
    for (const auto& c : e.jumps) item["jumps"].push_back(c.str());
    for (const auto& c : e.checks) item["checks"][c.name] = {c.passed, c.detail};
    if (e.error) item["error"] = *e.error;
    list.push_back(item);
  }
  doc["entries"] = list;
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << fnv1a(doc.dump());
  return out.str();
}

VerificationReport run_suite(const Corpus& corpus, const SuiteConfig& config) {
  if (corpus.entries.empty()) throw DomainError("corpus has no entries");
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  VerificationReport report;
  report.seed = config.seed;
  report.entries.resize(corpus.entries.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < corpus.entries.size();) {
      EntryReport& out = report.entries[i];
      out.index = i;
      out.entry = corpus.entries[i];
      const auto t0 = clock::now();
      try {
        EntryVerifier(corpus.entries[i], config, config.seed ^ (0x9e3779b97f4a7c15ULL * (i + 1))).run(out);
      } catch (const std::exception& e) {
        out.error = e.what();
      }
      out.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    }
  };
  unsigned n = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(corpus.entries.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  report.seconds = std::chrono::duration<double>(clock::now() - start).count();
  return report;
}

}  // namespace fjump
