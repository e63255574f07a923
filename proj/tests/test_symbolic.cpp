#include <doctest.h>

#include <functional>

#include "chaincov/cover.hpp"
#include "chaincov/generators.hpp"
#include "chaincov/random.hpp"
#include "chaincov/symbolic.hpp"
#include "chaincov/term.hpp"

using namespace chaincov;

namespace {

Ordinal ord(std::string_view s) { return parse_ordinal(s); }
Cardinal card(std::string_view s) { return parse_cardinal(s); }
std::string sym(std::string_view term) { return cov_symbolic(parse_term(term)).to_string(); }

std::vector<std::string> strings(const std::vector<PosetTerm>& terms) {
  std::vector<std::string> out;
  for (const auto& t : terms) out.push_back(t.to_string());
  return out;
}

}  // namespace

TEST_CASE("ordinal arithmetic") {
  CHECK(ord("w+1") > ord("w"));
  CHECK(ord("w^2") > ord("w*100+7"));
  CHECK(ord("w^w") > ord("w^100"));
  CHECK((Ordinal::finite(1) + Ordinal::omega()) == Ordinal::omega());
  CHECK((Ordinal::omega() + Ordinal::finite(1)).to_string() == "w+1");
  CHECK((ord("w^2+w") + ord("w^2")).to_string() == "w^2*2");
  CHECK(ord("w^(w+1)*2+w^3+5").to_string() == "w^(w+1)*2+w^3+5");
  CHECK(ord("w^w^2").to_string() == "w^w^2");
  CHECK(Ordinal().to_string() == "0");
  CHECK(ord("0").is_zero());
  CHECK(ord("w+3").is_successor());
  CHECK(ord("w+3").predecessor() == ord("w+2"));
  CHECK(ord("w^2").is_limit());
  CHECK(ord("17").finite_value() == 17);
  CHECK_THROWS_AS((void)ord("w").finite_value(), std::domain_error);
  CHECK_THROWS_AS((void)ord("w").predecessor(), std::domain_error);
}

TEST_CASE("fundamental sequences") {
  CHECK(ord("w").fundamental(5) == Ordinal::finite(5));
  CHECK(ord("w^2").fundamental(3) == ord("w*3"));
  CHECK(ord("w^w").fundamental(4) == ord("w^4"));
  CHECK(ord("w^2+w").fundamental(2) == ord("w^2+2"));
  for (const auto* s : {"w", "w^2", "w^w", "w^(w+1)", "w*3", "w^w^w"}) {
    const auto l = ord(s);
    for (std::uint64_t n = 0; n < 6; ++n) {
      CHECK(l.fundamental(n) < l.fundamental(n + 1));
      CHECK(l.fundamental(n) < l);
    }
  }
  CHECK_THROWS_AS((void)ord("w+1").fundamental(0), std::domain_error);
  CHECK(ord("w^2").cofinality() == Ordinal::omega());
  CHECK(ord("w+1").cofinality() == Ordinal::finite(1));
  CHECK(ord("0").cofinality() == Ordinal());
}

TEST_CASE("cardinals") {
  CHECK(card("6") < card("aleph(0)"));
  CHECK(card("aleph(1)") < card("aleph(w)"));
  CHECK(card("aleph(w)").is_limit_aleph());
  CHECK(card("aleph(w+1)").is_successor_aleph());
  CHECK_FALSE(card("aleph(0)").is_limit_aleph());
  CHECK(card("aleph(w)").successor().to_string() == "aleph(w+1)");
  CHECK(card("6").successor().to_string() == "7");
  CHECK(join(card("aleph(2)"), card("aleph(1)")).to_string() == "aleph(2)");
  const std::vector<Cardinal> cs{card("3"), card("aleph(0)"), card("aleph(w^2)"), card("aleph(5)")};
  for (const auto& a : cs)
    for (const auto& b : cs) {
      CHECK(join(a, b) == join(b, a));
      CHECK(join(a, a) == a);
      for (const auto& c : cs) CHECK(join(join(a, b), c) == join(a, join(b, c)));
    }
}

TEST_CASE("parse_term") {
  CHECK(parse_term("grid(aleph(1))").to_string() == "grid(aleph(1))");
  const auto two = parse_term("lexsum([grid(aleph(1)),dual(grid(aleph(2)))])");
  REQUIRE(std::holds_alternative<PosetTerm::LexSum>(two.node()));
  CHECK(std::get<PosetTerm::LexSum>(two.node()).parts.size() == 2);
  const auto big = parse_term("grid(aleph(w^2+3))");
  CHECK(std::get<PosetTerm::Grid>(big.node()).size == Cardinal::aleph(ord("w^2+3")));
  CHECK(parse_term(" lexsum( [ chain(3) , antichain(2) ] ) ").to_string() == "lexsum([chain(3),antichain(2)])");
  CHECK(parse_term("lexsumfam(inc,w,aleph(succ(w[n])))") == parse_term("lexsumfam(inc,w,aleph(succ_n))"));
  CHECK(parse_term("lexsumfam(dec,5,aleph(succ(w^2[n])))").to_string() == "lexsumfam(dec,5,aleph(succ(w^2[n])))");

  for (const auto* bad : {"grid(1)", "grid(", "lexsum([])", "dual(grid(4)", "foo(3)", "grid(4)x",
                          "antichain(aleph(1))", "lexsumfam(inc,w,aleph(succ(w+1[n])))", "aleph(w*0)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_term(bad), ParseError);
  }
  try {
    parse_term("grid(4)x");
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
  }
}

TEST_CASE("cov_symbolic") {
  CHECK(sym("grid(aleph(1))") == "aleph(1)");
  CHECK(sym("dual(grid(aleph(3)))") == "aleph(3)");
  CHECK(sym("grid(6)") == "3");
  CHECK(sym("lexsumfam(inc,w,aleph(succ_n))") == "aleph(w)");
  CHECK(sym("lexsumfam(dec,w,aleph(succ(w^2[n])))") == "aleph(w^2)");
  CHECK(sym("lexsumfam(inc,3,aleph(succ_n))") == "aleph(3)");
  CHECK(sym("lexsum([grid(aleph(1)),antichain(7),grid(aleph(0))])") == "aleph(1)");
  CHECK(sym("chain(aleph(4))") == "1");
  CHECK(sym("chain(0)") == "0");
  CHECK(sym("antichain(5)") == "5");
}

TEST_CASE("cofinality") {
  CHECK(cofinality(card("aleph(1)")).to_string() == "aleph(1)");
  CHECK(cofinality(card("aleph(0)")).to_string() == "aleph(0)");
  CHECK(cofinality(card("aleph(w)")).to_string() == "aleph(0)");
  CHECK(cofinality(card("aleph(w^w+w)")).to_string() == "aleph(0)");
  CHECK_THROWS_AS(cofinality(card("4")), FiniteCardinalError);
}

TEST_CASE("obstruction_list") {
  CHECK(strings(obstruction_list(card("aleph(1)"))) ==
        std::vector<std::string>{"grid(aleph(1))", "dual(grid(aleph(1)))"});
  CHECK(strings(obstruction_list(card("aleph(w+1)"))) ==
        std::vector<std::string>{"grid(aleph(w+1))", "dual(grid(aleph(w+1)))"});

  const auto four = obstruction_list(card("aleph(w)"), AlephFamily{Ordinal::omega(), std::nullopt});
  CHECK(strings(four) == std::vector<std::string>{"lexsumfam(inc,w,aleph(succ_n))", "lexsumfam(dec,w,aleph(succ_n))",
                                                  "dual(lexsumfam(inc,w,aleph(succ_n)))",
                                                  "dual(lexsumfam(dec,w,aleph(succ_n)))"});
  CHECK(strings(obstruction_list(card("aleph(w)"))) == strings(four));
  CHECK(obstruction_list(card("aleph(w^2)")).size() == 4);

  for (const auto* v : {"aleph(1)", "aleph(7)", "aleph(w)", "aleph(w^w+w)"})
    for (const auto& t : obstruction_list(card(v))) CHECK(cov_symbolic(t) == card(v));

  CHECK_THROWS_AS(obstruction_list(card("aleph(0)")), DomainError);
  CHECK_THROWS_AS(obstruction_list(card("5")), DomainError);
  CHECK_THROWS_AS(obstruction_list(card("aleph(w)"), AlephFamily{ord("w^2"), std::nullopt}), BadFamily);
  CHECK_THROWS_AS(obstruction_list(card("aleph(w)"), AlephFamily{Ordinal::omega(), 3}), BadFamily);
}

TEST_CASE("realize") {
  RealizeCaps caps;
  caps.caps[card("aleph(1)")] = 6;
  const auto g = realize(parse_term("grid(aleph(1))"), caps);
  CHECK(g == grid_upper(6).poset);
  CHECK(cov(g) == 3);

  const auto t = parse_term("lexsum([grid(5),antichain(2)])");
  CHECK(realize(PosetTerm::dual(t)) == dual(realize(t)));
  CHECK_THROWS_AS(realize(parse_term("grid(aleph(2))"), caps), CapMissing);

  const auto first = obstruction_list(card("aleph(1)"))[0];
  std::size_t last = 0;
  for (std::size_t k = 1; k <= 10; ++k) {
    RealizeCaps c;
    c.caps[card("aleph(1)")] = 2 * k;
    const auto w = cov(realize(first, c));
    CHECK(w == k);
    CHECK(w >= last);
    last = w;
  }

  RealizeCaps fam;
  fam.fallback = 6;
  fam.family_width = 3;
  const auto p = realize(parse_term("lexsumfam(inc,w,aleph(succ_n))"), fam);
  CHECK(p.size() == 3 * 15);
  CHECK(cov(p) == 3);
}

TEST_CASE("finite consistency on random terms") {
  Xorshift64Star rng(5);
  std::function<std::string(int)> gen = [&](int depth) -> std::string {
    const auto pick = depth <= 0 ? rng.below(3) : rng.below(5);
    switch (pick) {
      case 0: return "grid(" + std::to_string(2 + rng.below(9)) + ")";
      case 1: return "chain(" + std::to_string(rng.below(6)) + ")";
      case 2: return "antichain(" + std::to_string(1 + rng.below(5)) + ")";
      case 3: return "dual(" + gen(depth - 1) + ")";
      default: {
        std::string s = "lexsum([" + gen(depth - 1);
        for (auto k = rng.below(3); k > 0; --k) s += "," + gen(depth - 1);
        return s + "])";
      }
    }
  };
  for (int i = 0; i < 100; ++i) {
    const auto text = gen(3);
    CAPTURE(text);
    const auto t = parse_term(text);
    CHECK(parse_term(t.to_string()) == t);
    CHECK(cov_symbolic(t) == Cardinal::finite(cov(realize(t))));
    CHECK(cov_symbolic(PosetTerm::dual(t)) == cov_symbolic(t));
  }
}
