#include "magnus/free_group.hpp"

#include <cctype>
#include <charconv>

namespace magnus {

namespace {

void check_genus(int genus) {
  if (genus < 1 || genus > kMaxGenus) throw std::invalid_argument("genus out of range: " + std::to_string(genus));
}

void require_same_genus(int a, int b, const char* op) {
  if (a != b) throw ContextMismatch(std::string(op) + ": genus mismatch");
}

void push_reduced(std::vector<Letter>& out, Letter x) {
  if (!out.empty() && out.back() == x.inverted()) {
    out.pop_back();
  } else {
    out.push_back(x);
  }
}

std::string letter_token(Letter x) {
  const bool is_alpha = x.generator % 2 == 0;
  char c = is_alpha ? 'a' : 'b';
  if (x.inverse) c = char(std::toupper(c));
  return c + std::to_string(x.generator / 2 + 1);
}

}  // namespace

std::string generator_name(int index) { return letter_token(Letter{index, false}); }

int parse_generator_name(std::string_view name, int genus) {
  const GroupWord w = GroupWord::parse(genus, name);
  if (w.length() != 1 || w.letters()[0].inverse) throw std::invalid_argument("bad generator name '" + std::string(name) + "'");
  return w.letters()[0].generator;
}

WordParseError::WordParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}

GroupWord::GroupWord(int genus) : genus_(genus) { check_genus(genus); }

GroupWord::GroupWord(int genus, std::vector<Letter> letters) : genus_(genus) {
  check_genus(genus);
  letters_.reserve(letters.size());
  for (Letter x : letters) {
    if (x.generator < 0 || x.generator >= 2 * genus) throw std::invalid_argument("generator out of range");
    push_reduced(letters_, x);
  }
}

GroupWord GroupWord::generator(int genus, int index, bool inverse) {
  return GroupWord(genus, {Letter{index, inverse}});
}

GroupWord GroupWord::parse(int genus, std::string_view text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos < text.size() && text[pos] == '1') {
    const std::size_t start = pos++;
    skip_space();
    if (pos != text.size()) throw WordParseError("identity word '1' must stand alone", start);
    return GroupWord(genus);
  }
  while (pos < text.size()) {
    const std::size_t start = pos;
    const char c = text[pos];
    const char lower = char(std::tolower(static_cast<unsigned char>(c)));
    if (lower != 'a' && lower != 'b') throw WordParseError(std::string("unexpected character '") + c + "'", pos);
    ++pos;
    int handle = 0;
    const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), handle);
    if (ec != std::errc() || end == text.data() + pos) throw WordParseError("expected handle number", pos);
    pos = std::size_t(end - text.data());
    if (handle < 1 || handle > genus) {
      throw WordParseError("handle " + std::to_string(handle) + " out of range for genus " + std::to_string(genus),
                           start);
    }
    letters.push_back(Letter{2 * handle - 2 + (lower == 'b'), c != lower});
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      throw WordParseError("expected whitespace between letters", pos);
    }
    skip_space();
  }
  return GroupWord(genus, std::move(letters));
}

std::string GroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (Letter x : letters_) {
    if (!out.empty()) out += ' ';
    out += letter_token(x);
  }
  return out;
}

GroupWord operator*(const GroupWord& x, const GroupWord& y) {
  require_same_genus(x.genus(), y.genus(), "concat");
  std::vector<Letter> letters = x.letters();
  for (Letter l : y.letters()) push_reduced(letters, l);
  return GroupWord(x.genus(), std::move(letters));
}

GroupWord inverse(const GroupWord& w) {
  std::vector<Letter> letters;
  letters.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) letters.push_back(it->inverted());
  return GroupWord(w.genus(), std::move(letters));
}

GroupWord power(const GroupWord& w, int n) {
  const GroupWord base = n < 0 ? inverse(w) : w;
  GroupWord out(w.genus());
  for (int k = 0; k < std::abs(n); ++k) out = out * base;
  return out;
}

GroupWord conjugate(const GroupWord& x, const GroupWord& y) { return y * x * inverse(y); }

GroupWord commutator(const GroupWord& x, const GroupWord& y) { return x * y * inverse(x) * inverse(y); }

GroupWord separating_word(int genus, int h) {
  if (h < 0 || h > genus) throw std::invalid_argument("handle count out of range");
  GroupWord out(genus);
  for (int i = 1; i <= h; ++i) out = out * commutator(GroupWord::alpha(genus, i), GroupWord::beta(genus, i));
  return out;
}

GroupWord boundary_word(int genus) { return separating_word(genus, genus); }

TwistAtom TwistAtom::parse(std::string_view text) {
  TwistAtom atom{Kind::alpha, 0, 1};
  std::string_view rest;
  if (text.starts_with("alpha")) {
    atom.kind = Kind::alpha;
    rest = text.substr(5);
  } else if (text.starts_with("beta")) {
    atom.kind = Kind::beta;
    rest = text.substr(4);
  } else if (text.starts_with("sep")) {
    atom.kind = Kind::sep;
    rest = text.substr(3);
  } else {
    throw std::invalid_argument("unknown twist '" + std::string(text) + "'");
  }
  const char* end = rest.data() + rest.size();
  auto [p, ec] = std::from_chars(rest.data(), end, atom.index);
  if (ec != std::errc() || atom.index < 1) throw std::invalid_argument("bad twist index in '" + std::string(text) + "'");
  if (p != end) {
    if (*p != '^') throw std::invalid_argument("bad twist descriptor '" + std::string(text) + "'");
    auto [q, ec2] = std::from_chars(p + 1, end, atom.power);
    if (ec2 != std::errc() || q != end || atom.power == 0) {
      throw std::invalid_argument("bad twist power in '" + std::string(text) + "'");
    }
  }
  return atom;
}

std::string TwistAtom::to_string() const {
  std::string out = kind == Kind::alpha ? "alpha" : kind == Kind::beta ? "beta" : "sep";
  out += std::to_string(index);
  if (power != 1) out += "^" + std::to_string(power);
  return out;
}

GroupWord twist_curve_word(int genus, const TwistAtom& atom) {
  if (atom.index < 1 || atom.index > genus) throw std::invalid_argument("twist index out of range");
  switch (atom.kind) {
    case TwistAtom::Kind::alpha:
      return GroupWord::alpha(genus, atom.index);
    case TwistAtom::Kind::beta:
      return GroupWord::beta(genus, atom.index);
    case TwistAtom::Kind::sep:
      return separating_word(genus, atom.index);
  }
  throw std::logic_error("unreachable");
}

FreeAutomorphism::FreeAutomorphism(int genus, std::vector<GroupWord> images,
                                   std::optional<std::vector<TwistAtom>> factorization)
    : genus_(genus), images_(std::move(images)), factorization_(std::move(factorization)) {
  check_genus(genus);
  if (images_.size() != std::size_t(2 * genus)) throw std::invalid_argument("automorphism needs 2g images");
  for (const auto& w : images_) require_same_genus(genus, w.genus(), "automorphism");
  try {
    (void)homology_action(*this).inverse();
  } catch (const std::domain_error&) {
    throw std::invalid_argument("induced map on homology is not invertible");
  }
  const GroupWord zeta = boundary_word(genus);
  preserves_boundary_ = apply(zeta) == zeta;
}

FreeAutomorphism FreeAutomorphism::identity(int genus) {
  std::vector<GroupWord> images;
  for (int x = 0; x < 2 * genus; ++x) images.push_back(GroupWord::generator(genus, x));
  return FreeAutomorphism(genus, std::move(images), std::vector<TwistAtom>{});
}

FreeAutomorphism FreeAutomorphism::from_factorization(int genus, const std::vector<TwistAtom>& atoms) {
  FreeAutomorphism out = identity(genus);
  for (const auto& atom : atoms) out = compose(out, twist(genus, atom));
  return out;
}

GroupWord FreeAutomorphism::apply(const GroupWord& w) const {
  require_same_genus(genus_, w.genus(), "apply_automorphism");
  GroupWord out(genus_);
  for (Letter x : w.letters()) {
    const GroupWord& img = images_[x.generator];
    out = out * (x.inverse ? inverse(img) : img);
  }
  return out;
}

FreeAutomorphism twist(int genus, const TwistAtom& atom) {
  if (atom.index < 1 || atom.index > genus) {
    throw std::invalid_argument("twist " + atom.to_string() + " out of range for genus " + std::to_string(genus));
  }
  if (atom.power == 0) return FreeAutomorphism::identity(genus);
  const int sign = atom.power > 0 ? 1 : -1;
  const int i = atom.index;
  std::vector<GroupWord> images;
  for (int x = 0; x < 2 * genus; ++x) images.push_back(GroupWord::generator(genus, x));
  switch (atom.kind) {
    case TwistAtom::Kind::alpha:
      images[2 * i - 1] = GroupWord::beta(genus, i) * power(GroupWord::alpha(genus, i), sign);
      break;
    case TwistAtom::Kind::beta:
      images[2 * i - 2] = GroupWord::alpha(genus, i) * power(GroupWord::beta(genus, i), -sign);
      break;
    case TwistAtom::Kind::sep: {
      const GroupWord gamma = separating_word(genus, i);
      const GroupWord by = sign > 0 ? inverse(gamma) : gamma;
      for (int x = 0; x < 2 * i; ++x) images[x] = conjugate(images[x], by);
      break;
    }
  }
  FreeAutomorphism single(genus, std::move(images), std::vector<TwistAtom>{TwistAtom{atom.kind, i, sign}});
  FreeAutomorphism out = single;
  for (int k = 1; k < std::abs(atom.power); ++k) out = compose(out, single);
  return FreeAutomorphism(genus, out.images(), std::vector<TwistAtom>{atom});
}

FreeAutomorphism twist_nonseparating(int genus) { return twist(genus, TwistAtom{TwistAtom::Kind::alpha, 1, 1}); }

FreeAutomorphism twist_separating(int genus, int h) {
  if (h < 1 || h > genus) throw std::invalid_argument("separating twist needs 1 <= h <= g");
  return twist(genus, TwistAtom{TwistAtom::Kind::sep, h, 1});
}

FreeAutomorphism compose(const FreeAutomorphism& phi1, const FreeAutomorphism& phi2) {
  require_same_genus(phi1.genus(), phi2.genus(), "compose");
  std::vector<GroupWord> images;
  for (const auto& w : phi2.images()) images.push_back(phi1.apply(w));
  std::optional<std::vector<TwistAtom>> factorization;
  if (phi1.factorization() && phi2.factorization()) {
    factorization = *phi1.factorization();
    factorization->insert(factorization->end(), phi2.factorization()->begin(), phi2.factorization()->end());
  }
  return FreeAutomorphism(phi1.genus(), std::move(images), std::move(factorization));
}

FreeAutomorphism invert(const FreeAutomorphism& phi) {
  if (!phi.factorization()) throw std::invalid_argument("inverse needs a twist factorization");
  std::vector<TwistAtom> atoms(phi.factorization()->rbegin(), phi.factorization()->rend());
  for (auto& atom : atoms) atom.power = -atom.power;
  return FreeAutomorphism::from_factorization(phi.genus(), atoms);
}

RationalMatrix homology_action(const FreeAutomorphism& phi) {
  const int n = 2 * phi.genus();
  RationalMatrix m(n, n);
  for (int x = 0; x < n; ++x) {
    for (Letter l : phi.image(x).letters()) m(l.generator, x) += l.inverse ? -1 : 1;
  }
  return m;
}

}  // namespace magnus
