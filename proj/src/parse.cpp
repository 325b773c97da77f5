#include <cctype>
#include <sstream>

#include "fjump/error.hpp"
#include "fjump/polynomial.hpp"

namespace fjump {
namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

// expr := term (('+'|'-') term)* ; term := coeff? atom* ; atom := var ('^' uint)?
class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ctx) : text_(text), ctx_(ctx) {}

  Polynomial run() {
    std::vector<Monomial> mons;
    std::vector<std::uint32_t> coeffs;
    bool negate = false;
    for (;;) {
      auto [m, c] = term();
      mons.push_back(m);
      coeffs.push_back(negate ? ctx_->neg(c) : c);
      skip_ws();
      if (at_end()) break;
      char ch = text_[pos_];
      if (ch != '+' && ch != '-') fail("expected '+', '-' or end of input");
      negate = ch == '-';
      ++pos_;
    }
    return Polynomial::from_terms(ctx_, std::move(mons), std::move(coeffs));
  }

 private:
  std::pair<Monomial, std::uint32_t> term() {
    skip_ws();
    std::uint32_t coeff = 1;
    bool have_coeff = false;
    if (!at_end() && digit(text_[pos_])) {
      std::uint64_t c = 0;
      while (!at_end() && digit(text_[pos_])) c = (c * 10 + (text_[pos_++] - '0')) % ctx_->p();
      coeff = static_cast<std::uint32_t>(c);
      have_coeff = true;
    }
    Monomial m;
    std::size_t atoms = 0;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      bool star = text_[pos_] == '*';
      if (star) {
        if (!have_coeff && atoms == 0) fail("'*' without a left operand");
        ++pos_;
        skip_ws();
        if (at_end() || !ident_start(text_[pos_])) fail("expected a variable after '*'");
      }
      if (!ident_start(text_[pos_])) break;
      atom(m);
      ++atoms;
    }
    if (!have_coeff && atoms == 0) fail("expected a term");
    return {m, coeff};
  }

  void atom(Monomial& m) {
    std::size_t start = pos_;
    std::size_t best = 0;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < ctx_->nvars(); ++i) {
      const std::string& v = ctx_->vars()[i];
      if (v.size() > best_len && text_.substr(pos_, v.size()) == v) {
        best = i;
        best_len = v.size();
      }
    }
    if (best_len == 0) {
      std::size_t end = pos_;
      while (end < text_.size() && ident_char(text_[end])) ++end;
      fail("unknown variable '" + std::string(text_.substr(pos_, end - pos_)) + "'", start);
    }
    pos_ += best_len;
    std::uint64_t exp = 1;
    skip_ws();
    if (!at_end() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      std::size_t exp_pos = pos_;
      if (at_end() || !digit(text_[pos_])) fail("expected an exponent after '^'");
      exp = 0;
      while (!at_end() && digit(text_[pos_])) {
        exp = exp * 10 + (text_[pos_++] - '0');
        if (exp > kMaxExponent) fail("exponent overflow", exp_pos);
      }
    }
    std::uint64_t total = m.e[best] + exp;
    if (total > kMaxExponent) fail("exponent overflow", start);
    m.e[best] = static_cast<std::uint32_t>(total);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  std::string_view text_;
  const RingPtr& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ctx) { return Parser(text, ctx).run(); }

std::string format_monomial(const Monomial& m, const RingContext& ctx) {
  std::string out;
  for (std::size_t i = 0; i < ctx.nvars(); ++i) {
    if (!m.e[i]) continue;
    if (!out.empty()) out += '*';
    out += ctx.vars()[i];
    if (m.e[i] > 1) out += '^' + std::to_string(m.e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_poly(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  auto mons = f.monomials();
  auto coeffs = f.coefficients();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += " + ";
    if (mons[i].is_one()) {
      out += std::to_string(coeffs[i]);
    } else {
      if (coeffs[i] != 1) out += std::to_string(coeffs[i]) + '*';
      out += format_monomial(mons[i], f.ring());
    }
  }
  return out;
}

std::vector<std::string> infer_variables(std::string_view text) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < text.size();) {
    if (std::isalpha(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i + 1;
      while (j < text.size() && (digit(text[j]) || text[j] == '_')) ++j;
      std::string name(text.substr(i, j - i));
      bool known = false;
      for (const auto& v : vars) known = known || v == name;
      if (!known) vars.push_back(std::move(name));
      i = j;
    } else {
      ++i;
    }
  }
  return vars;
}

}  // namespace fjump
