#include "chaincov/term.hpp"

#include <cctype>
#include <limits>

namespace chaincov {

PosetTerm PosetTerm::grid(Cardinal size) { return PosetTerm(Grid{std::move(size)}); }

PosetTerm PosetTerm::dual(PosetTerm inner) {
  return PosetTerm(Dual{std::make_shared<const PosetTerm>(std::move(inner))});
}

PosetTerm PosetTerm::lexsum(std::vector<PosetTerm> parts) { return PosetTerm(LexSum{std::move(parts)}); }

PosetTerm PosetTerm::lexsum_family(Direction direction, std::optional<std::uint64_t> count, Ordinal limit) {
  return PosetTerm(LexSumFamily{direction, count, std::move(limit)});
}

PosetTerm PosetTerm::chain(Cardinal size) { return PosetTerm(Chain{std::move(size)}); }

PosetTerm PosetTerm::antichain(std::uint64_t size) { return PosetTerm(Antichain{size}); }

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string PosetTerm::to_string() const {
  return std::visit(
      overloaded{
          [](const Grid& g) { return "grid(" + g.size.to_string() + ")"; },
          [](const Dual& d) { return "dual(" + d.inner->to_string() + ")"; },
          [](const LexSum& s) {
            std::string out = "lexsum([";
            for (std::size_t i = 0; i < s.parts.size(); ++i) {
              if (i) out += ',';
              out += s.parts[i].to_string();
            }
            return out + "])";
          },
          [](const LexSumFamily& f) {
            std::string out = "lexsumfam(";
            out += f.direction == Direction::increasing ? "inc," : "dec,";
            out += f.count ? std::to_string(*f.count) : "w";
            out += f.limit == Ordinal::omega() ? ",aleph(succ_n))" : ",aleph(succ(" + f.limit.to_string() + "[n])))";
            return out;
          },
          [](const Chain& c) { return "chain(" + c.size.to_string() + ")"; },
          [](const Antichain& a) { return "antichain(" + std::to_string(a.size) + ")"; },
      },
      node_);
}

ParseError::ParseError(std::size_t position, const std::string& what)
    : Error("parse error at position " + std::to_string(position) + ": " + what), position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PosetTerm term() {
    skip_space();
    const auto start = pos_;
    const auto word = identifier();
    if (word == "grid") {
      expect("(");
      const auto at = pos_;
      auto size = cardinal();
      if (size.is_finite() && size.finite_value() < 2) throw ParseError(at, "finite grid size must be at least 2");
      expect(")");
      return PosetTerm::grid(std::move(size));
    }
    if (word == "dual") {
      expect("(");
      auto inner = term();
      expect(")");
      return PosetTerm::dual(std::move(inner));
    }
    if (word == "lexsum") {
      expect("(");
      expect("[");
      std::vector<PosetTerm> parts{term()};
      while (accept(",")) parts.push_back(term());
      expect("]");
      expect(")");
      return PosetTerm::lexsum(std::move(parts));
    }
    if (word == "lexsumfam") {
      expect("(");
      skip_space();
      const auto at = pos_;
      const auto dir = identifier();
      if (dir != "inc" && dir != "dec") throw ParseError(at, "expected 'inc' or 'dec'");
      expect(",");
      std::optional<std::uint64_t> count;
      skip_space();
      if (!accept("w")) {
        const auto count_at = pos_;
        count = natural();
        if (*count == 0) throw ParseError(count_at, "family count must be positive");
      }
      expect(",");
      expect("aleph");
      expect("(");
      Ordinal limit = Ordinal::omega();
      if (!accept("succ_n")) {
        expect("succ");
        expect("(");
        const auto ord_at = pos_;
        limit = ordinal();
        if (!limit.is_limit()) throw ParseError(ord_at, "family index must be a limit ordinal");
        expect("[");
        expect("n");
        expect("]");
        expect(")");
      }
      expect(")");
      expect(")");
      return PosetTerm::lexsum_family(dir == "inc" ? Direction::increasing : Direction::decreasing, count,
                                      std::move(limit));
    }
    if (word == "chain") {
      expect("(");
      auto size = cardinal();
      expect(")");
      return PosetTerm::chain(std::move(size));
    }
    if (word == "antichain") {
      expect("(");
      auto k = natural();
      expect(")");
      return PosetTerm::antichain(k);
    }
    throw ParseError(start, word.empty() ? "expected a term" : "unknown constructor '" + std::string(word) + "'");
  }

  Cardinal cardinal() {
    skip_space();
    if (accept("aleph")) {
      expect("(");
      auto index = ordinal();
      expect(")");
      return Cardinal::aleph(std::move(index));
    }
    return Cardinal::finite(natural());
  }

  Ordinal ordinal() {
    Ordinal sum = cnf_term();
    while (accept("+")) sum = sum + cnf_term();
    return sum;
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
  }

 private:
  Ordinal cnf_term() {
    skip_space();
    if (accept("w")) {
      Ordinal exponent = Ordinal::finite(1);
      if (accept("^")) exponent = power_exponent();
      std::uint64_t coefficient = 1;
      if (accept("*")) {
        const auto at = pos_;
        coefficient = natural();
        if (coefficient == 0) throw ParseError(at, "coefficient must be positive");
      }
      return Ordinal::omega_power(exponent, coefficient);
    }
    return Ordinal::finite(natural());
  }

  Ordinal power_exponent() {
    skip_space();
    if (accept("(")) {
      auto e = ordinal();
      expect(")");
      return e;
    }
    if (accept("w")) {
      if (accept("^")) return Ordinal::omega_power(power_exponent());
      return Ordinal::omega();
    }
    return Ordinal::finite(natural());
  }

  std::uint64_t natural() {
    skip_space();
    const auto start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) throw ParseError(start, "number too large");
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) throw ParseError(start, "expected a number");
    return value;
  }

  std::string_view identifier() {
    const auto start = pos_;
    while (pos_ < text_.size() && (std::islower(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) throw ParseError(pos_, "expected '" + std::string(token) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PosetTerm parse_term(std::string_view text) {
  Parser p(text);
  auto t = p.term();
  p.finish();
  return t;
}

Cardinal parse_cardinal(std::string_view text) {
  Parser p(text);
  auto c = p.cardinal();
  p.finish();
  return c;
}

Ordinal parse_ordinal(std::string_view text) {
  Parser p(text);
  auto o = p.ordinal();
  p.finish();
  return o;
}

}  // namespace chaincov
