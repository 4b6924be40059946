#include "magnus/notation.hpp"

#include <cctype>

#include "magnus/lie.hpp"

namespace magnus {

NotationError::NotationError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  Parser(const AlgebraContext& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  Tensor parse() {
    Tensor t = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw NotationError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Tensor expr() {
    Tensor sum(ctx_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
    sum = negate ? -term() : term();
    while (peek() == '+' || peek() == '-') {
      negate = text_[pos_++] == '-';
      const Tensor t = term();
      sum = negate ? sum - t : sum + t;
    }
    return sum;
  }

  static bool starts_factor(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == 'A' || c == 'B' || c == '[' || c == '('; }

  Tensor term() {
    if (!starts_factor(peek())) fail("expected a term");
    Tensor prod = factor();
    while (true) {
      if (peek() == '*') {
        ++pos_;
        if (!starts_factor(peek())) fail("expected a factor after '*'");
      } else if (!starts_factor(peek())) {
        break;
      }
      prod = prod * factor();
    }
    return prod;
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Tensor factor() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (digits().empty()) fail("expected denominator");
      }
      try {
        return Tensor::scalar(ctx_, parse_rational(text_.substr(start, pos_ - start)));
      } catch (const std::invalid_argument& e) {
        throw NotationError(e.what(), start);
      }
    }
    if (c == 'A' || c == 'B') {
      const std::size_t start = pos_++;
      int handle = 1;
      if (const auto d = digits(); !d.empty()) handle = std::stoi(std::string(d));
      if (handle < 1 || handle > ctx_.genus()) {
        throw NotationError("handle " + std::to_string(handle) + " out of range for genus " + std::to_string(ctx_.genus()),
                            start);
      }
      return Tensor::basis(ctx_, 2 * handle - 2 + (c == 'B'));
    }
    if (c == '[') {
      ++pos_;
      const Tensor x = expr();
      expect(',');
      const Tensor y = expr();
      expect(']');
      return bracket(x, y);
    }
    if (c == '(') {
      ++pos_;
      const Tensor x = expr();
      expect(')');
      return x;
    }
    fail("expected a factor");
  }

  AlgebraContext ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string monomial_text(Monomial m) {
  std::string out;
  for (int x : m.letters()) {
    if (!out.empty()) out += ' ';
    out += basis_name(x);
  }
  return out;
}

// Appends "c body" with sign handling; body empty means a scalar.
void append_term(std::string& out, const Rational& c, const std::string& body) {
  const bool negative = sgn(c) < 0;
  const Rational mag = abs(c);
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (body.empty()) {
    out += rational_to_string(mag);
  } else {
    if (mag != 1) out += rational_to_string(mag) + " ";
    out += body;
  }
}

}  // namespace

Tensor parse_tensor(const AlgebraContext& ctx, std::string_view text) { return Parser(ctx, text).parse(); }

std::string format_tensor(const Tensor& t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (int d = 0; d <= t.truncation(); ++d) {
    for (const auto& term : t.terms()) {
      if (term.mono.degree() == d) append_term(out, term.coeff, monomial_text(term.mono));
    }
  }
  return out;
}

bool is_lyndon(Monomial word) {
  const int n = word.degree();
  if (n == 0) return false;
  Monomial rotated = word;
  for (int r = 1; r < n; ++r) {
    rotated = rotated.rotate();
    if (!(word < rotated)) return false;
  }
  return true;
}

namespace {

// Longest proper Lyndon suffix gives the standard factorization.
int standard_split(Monomial word) {
  const int n = word.degree();
  for (int start = 1; start < n; ++start) {
    if (is_lyndon(word.slice(start, n - start))) return start;
  }
  throw std::invalid_argument("word has no standard factorization");
}

}  // namespace

Tensor lyndon_bracket(const AlgebraContext& ctx, Monomial word) {
  if (!is_lyndon(word)) throw std::invalid_argument("not a Lyndon word");
  const int n = word.degree();
  if (n == 1) return Tensor::monomial(ctx, word);
  const int s = standard_split(word);
  return bracket(lyndon_bracket(ctx, word.slice(0, s)), lyndon_bracket(ctx, word.slice(s, n - s)));
}

std::string lyndon_bracket_text(Monomial word) {
  if (!is_lyndon(word)) throw std::invalid_argument("not a Lyndon word");
  const int n = word.degree();
  if (n == 1) return basis_name(word.first());
  const int s = standard_split(word);
  return "[" + lyndon_bracket_text(word.slice(0, s)) + "," + lyndon_bracket_text(word.slice(s, n - s)) + "]";
}

std::string format_lie(const Tensor& t) {
  if (!is_lie(t)) return format_tensor(t);
  if (t.is_zero()) return "0";
  std::string out;
  for (int d = 1; d <= t.truncation(); ++d) {
    // The least word in a nonzero Lie polynomial is Lyndon and its standard
    // bracketing has that word as least term, so peeling terminates.
    Tensor rest = graded_part(t, d);
    while (!rest.is_zero()) {
      const Term lead = rest.terms().front();
      if (!is_lyndon(lead.mono)) return format_tensor(t);
      append_term(out, lead.coeff, lyndon_bracket_text(lead.mono));
      rest -= lead.coeff * lyndon_bracket(t.context(), lead.mono);
    }
  }
  return out;
}

}  // namespace magnus
