#include "hamvf/term_parser.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <vector>

#include "hamvf/error.hpp"

namespace hamvf::text {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == sep && depth == 0) {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(text.substr(start));
  return out;
}

// One product term, factors separated per variable.
struct ParsedTerm {
  Rational coeff{1};
  TermKey t;
  TermKey s;
  bool uses_t = false;
  bool uses_s = false;
};

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgument(why + " in '" + std::string(text_) + "' at column " + std::to_string(pos_ + 1));
  }

  long integer() {
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    long value = 0;
    const auto* first = text_.data() + start + (text_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_ || first == ptr) fail("expected an integer");
    return value;
  }

  Rational number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' || peek() == '/') ++pos_;
    if (start == pos_) fail("expected a number");
    return Rational::parse(text_.substr(start, pos_ - start));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_var(char c) { return c == 't' || c == 's'; }

// Exponent body inside exp(...) or e^(...): [sign][int[*]] var
std::pair<long, char> exponent_body(Cursor& cur) {
  long sign = 1;
  if (cur.accept('-')) {
    sign = -1;
  } else {
    cur.accept('+');
  }
  long rate = 1;
  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    rate = cur.integer();
    cur.accept('*');
  }
  const char var = cur.peek();
  if (!is_var(var)) cur.fail("expected variable in exponent");
  cur.accept(var);
  return {sign * rate, var};
}

void add_factor(ParsedTerm& term, char var, unsigned power, long rate) {
  TermKey& key = var == 't' ? term.t : term.s;
  (var == 't' ? term.uses_t : term.uses_s) = true;
  key.power += power;
  key.rate += rate;
}

ParsedTerm parse_term(std::string_view text) {
  Cursor cur(text);
  ParsedTerm term;
  if (cur.accept('-')) {
    term.coeff = Rational(-1);
  } else {
    cur.accept('+');
  }
  if (cur.done()) cur.fail("empty term");
  do {
    if (cur.accept("exp(")) {
      auto [rate, var] = exponent_body(cur);
      if (!cur.accept(')')) cur.fail("expected ')'");
      add_factor(term, var, 0, rate);
    } else if (cur.accept("e^(")) {
      auto [rate, var] = exponent_body(cur);
      if (!cur.accept(')')) cur.fail("expected ')'");
      add_factor(term, var, 0, rate);
    } else if (cur.accept("e^")) {
      const char var = cur.peek();
      if (!is_var(var)) cur.fail("expected variable after e^");
      cur.accept(var);
      add_factor(term, var, 0, 1);
    } else if (is_var(cur.peek())) {
      const char var = cur.peek();
      cur.accept(var);
      long power = 1;
      if (cur.accept('^')) power = cur.integer();
      if (power < 0) cur.fail("negative power");
      add_factor(term, var, static_cast<unsigned>(power), 0);
    } else if (cur.accept('(')) {
      // parenthesised coefficient such as (1/36)
      const Rational value = cur.number();
      if (!cur.accept(')')) cur.fail("expected ')'");
      term.coeff *= value;
    } else {
      term.coeff *= cur.number();
    }
  } while (cur.accept('*'));
  if (!cur.done()) cur.fail("unexpected character");
  return term;
}

}  // namespace

ExpPoly parse_term_list(std::string_view raw) {
  const std::string text = strip_spaces(raw);
  if (text.empty()) throw InvalidArgument("empty term list");
  ExpPoly out;
  for (auto piece : split(text, ',')) {
    const ParsedTerm term = parse_term(piece);
    if (term.uses_t && term.uses_s) {
      throw InvalidArgument("term '" + std::string(piece) + "' mixes t and s");
    }
    out.accumulate(term.uses_s ? term.s : term.t, term.coeff);
  }
  return out;
}

SeparableKernel parse_kernel(std::string_view raw) {
  const std::string text = strip_spaces(raw);
  SeparableKernel kernel;
  if (text.empty() || text == "0") return kernel;
  for (auto part : split(text, ';')) {
    if (auto bar = part.find('|'); bar != std::string_view::npos) {
      kernel.parts.push_back({parse_term_list(part.substr(0, bar)), parse_term_list(part.substr(bar + 1))});
      continue;
    }
    if (split(part, ',').size() != 1) {
      throw InvalidArgument("kernel part '" + std::string(part) + "' must be 'g|h' or a single product term");
    }
    const ParsedTerm term = parse_term(part);
    kernel.parts.push_back({ExpPoly::term(term.coeff, term.t.power, term.t.rate),
                            ExpPoly::term(1, term.s.power, term.s.rate)});
  }
  return kernel;
}

PowerNonlinearity parse_nonlinearity(std::string_view raw) {
  const std::string text = strip_spaces(raw);
  if (text.empty() || text == "0") return {};
  std::map<unsigned, Rational> by_degree;
  for (auto piece : split(text, ',')) {
    Cursor cur(piece);
    Rational coeff(1);
    unsigned degree = 0;
    if (cur.accept('-')) {
      coeff = Rational(-1);
    } else {
      cur.accept('+');
    }
    do {
      if (cur.accept('u')) {
        long d = 1;
        if (cur.accept('^')) d = cur.integer();
        if (d < 0) cur.fail("negative degree");
        degree += static_cast<unsigned>(d);
      } else if (cur.accept('(')) {
        coeff *= cur.number();
        if (!cur.accept(')')) cur.fail("expected ')'");
      } else {
        coeff *= cur.number();
      }
    } while (cur.accept('*'));
    if (!cur.done()) cur.fail("unexpected character");
    by_degree[degree] += coeff;
  }
  std::vector<PowerTerm> monomials;
  for (const auto& [degree, coeff] : by_degree) {
    if (!coeff.is_zero()) monomials.push_back({coeff, degree});
  }
  return PowerNonlinearity(std::move(monomials));
}

std::string render_term_list(const ExpPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : p.terms()) {
    if (!out.empty()) out += ", ";
    out += c.to_string();
    if (key.power > 0) out += "*t^" + std::to_string(key.power);
    if (key.rate != 0) out += "*exp(" + std::to_string(key.rate) + "*t)";
  }
  return out;
}

std::string render_kernel(const SeparableKernel& kernel) {
  if (kernel.is_zero()) return "0";
  std::string out;
  for (const auto& part : kernel.parts) {
    if (!out.empty()) out += "; ";
    out += render_term_list(part.g) + " | " + render_term_list(part.h);
  }
  return out;
}

std::string render_nonlinearity(const PowerNonlinearity& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& mono : f.monomials()) {
    if (!out.empty()) out += ", ";
    out += mono.coeff.to_string() + "*u^" + std::to_string(mono.degree);
  }
  return out;
}

}  // namespace hamvf::text
