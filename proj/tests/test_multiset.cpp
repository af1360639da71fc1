#include <doctest.h>

#include "c1p/count.hpp"
#include "c1p/errors.hpp"
#include "c1p/fmo_io.hpp"
#include "c1p/multiset.hpp"
#include "support/oracles.hpp"

using namespace c1p;
using namespace c1p::testing;

namespace {

FmoInstance abbcd() { return {ms("abbcd"), {ms("bc"), ms("bd")}}; }

// Fixed by the brute-force window oracle over all 60 arrangements of abbcd.
const std::vector<std::string_view> kAbbcdSolutions = {
    "abcbd", "abcdb", "abdbc", "abdcb", "acbbd", "acbdb", "adbbc", "adbcb", "bacbd", "badbc",
    "bcabd", "bcadb", "bcbda", "bcdba", "bdabc", "bdacb", "bdbca", "bdcba", "cbabd", "cbadb",
    "cbbda", "cbdab", "cbdba", "dbabc", "dbacb", "dbbca", "dbcab", "dbcba"};

}  // namespace

TEST_CASE("symbol tokens") {
  CHECK(Symbol("d_1_2").token() == "d_1_2");
  CHECK(Symbol("a") == Symbol("a"));
  CHECK(Symbol("a") < Symbol("b"));
  for (auto bad : {"", "a b", "a\tb", "(", "a)", "\x01"}) {
    CAPTURE(bad);
    CHECK_FALSE(is_valid_token(bad));
    CHECK_THROWS_AS(Symbol{std::string(bad)}, ParseError);
  }
  CHECK(reserved::dollar().token() == "$");
  CHECK(reserved::hash().token() == "#");
  CHECK(reserved::vertex(12).token() == "12");
  CHECK(reserved::c(3).token() == "c_3");
  CHECK(reserved::c_prime(3).token() == "cp_3");
  CHECK(reserved::d(10, 2).token() == "d_10_2");
  for (auto t : {"$", "#", "c_1", "cp_22", "d_1_2"}) CHECK(is_reserved_token(t));
  for (auto t : {"a", "7", "c_", "d_1", "cp_x", "d_1_2_3", "c_01x"}) CHECK_FALSE(is_reserved_token(t));
  CHECK(join(toks("cp_1  c_1\td_1_2")) == "cp_1 c_1 d_1_2");
  CHECK(reversed(chars("abc")) == chars("cba"));
}

TEST_CASE("multiset algebra") {
  SymbolMultiset a = ms("aab");
  CHECK(a.size() == 3);
  CHECK(a.count(Symbol("a")) == 2);
  CHECK(a.count(Symbol("z")) == 0);
  CHECK(ms("ab").is_subset_of(a));
  CHECK_FALSE(ms("abb").is_subset_of(a));
  CHECK(a + ms("bc") == ms("aabbc"));
  CHECK(a.minus(ms("abc")) == ms("a"));
  CHECK(a.elements() == chars("aab"));
  CHECK(to_string(a) == "{a,a,b}");
  CHECK(SymbolMultiset{}.empty());
  CHECK(SymbolMultiset::of_tokens({"x", "y", "x"}) == SymbolMultiset::of(chars("xxy")));
}

TEST_CASE("counts") {
  CHECK(to_decimal(factorial(20)) == "2432902008176640000");
  CHECK(to_decimal(factorial(0)) == "1");
  CHECK(pow2(70) == parse_count("1180591620717411303424"));
  CHECK(exact_sqrt(Count(16)) == Count(4));
  CHECK(exact_sqrt(Count(0)) == Count(0));
  CHECK_FALSE(exact_sqrt(Count(92)));
  CHECK(exact_div(Count(96), Count(2)) == Count(48));
  CHECK_FALSE(exact_div(Count(16), Count(6)));
  for (auto bad : {"", "-1", "1.5", "12a", " 3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_count(bad), ParseError);
  }
}

TEST_CASE("occurrences") {
  CHECK(occurrences(ms("aca"), chars("aacb")) == std::vector<std::size_t>{1});
  CHECK(occurrences(ms("aca"), chars("abc")).empty());
  CHECK(occurrences(ms("x"), chars("xx")) == std::vector<std::size_t>{1, 2});
  CHECK(occurrences(ms("ab"), chars("abab")) == std::vector<std::size_t>{1, 2, 3});
  CHECK(occurrences(ms("abcd"), chars("abc")).empty());
  CHECK(occurrences(ms("aab"), toks("a b a a b")) == std::vector<std::size_t>{1, 2, 3});
  CHECK_THROWS_AS(occurrences(SymbolMultiset{}, chars("ab")), EmptyPattern);
}

TEST_CASE("contains") {
  CHECK(contains(ms("bd"), chars("abcdb")));
  CHECK(contains(ms("bc"), chars("abcdb")));
  CHECK_FALSE(contains(ms("bd"), chars("abcde")));
  CHECK_FALSE(contains(ms("aca"), chars("abc")));
  CHECK_THROWS_AS(contains(SymbolMultiset{}, chars("abc")), EmptyPattern);
}

TEST_CASE("Sperner predicates") {
  std::vector<SymbolMultiset> incomparable = {ms("bc"), ms("bd")};
  std::vector<SymbolMultiset> nested = {ms("b"), ms("bd")};
  CHECK(is_sperner(incomparable));
  CHECK_FALSE(is_sperner(nested));
  // {b,c} sits inside {a,b} + {c,d} although neither contains it.
  std::vector<SymbolMultiset> covered = {ms("ab"), ms("cd"), ms("bc")};
  CHECK(is_sperner(covered));
  CHECK_FALSE(is_strict_sperner(covered));
  std::vector<SymbolMultiset> strict = {ms("aab"), ms("cc"), ms("bdd")};
  CHECK(is_strict_sperner(strict));
  std::vector<SymbolMultiset> twice = {ms("ab"), ms("ab")};
  CHECK_FALSE(is_sperner(twice));
}

TEST_CASE("instance validation") {
  CHECK_NOTHROW(abbcd().validate());
  CHECK_THROWS_AS((FmoInstance{ms("ab"), {ms("abb")}}).validate(), InvalidInstance);
  CHECK_THROWS_AS((FmoInstance{ms("ab"), {SymbolMultiset{}}}).validate(), InvalidInstance);
  CHECK_THROWS_AS(count_fmo(FmoInstance{ms("ab"), {ms("c")}}, FmoEngine::Pruned), InvalidInstance);
}

TEST_CASE("solve_fmo golden sets, both engines") {
  for (FmoEngine engine : {FmoEngine::Naive, FmoEngine::Pruned}) {
    CAPTURE(to_string(engine));
    {  // abbcd with {b,c} and {b,d}
      SolutionSet sol = solve_fmo(abbcd(), engine);
      CHECK(sol.complete);
      std::vector<SymbolString> expected;
      for (auto s : kAbbcdSolutions) expected.push_back(chars(s));
      CHECK(sol.strings == expected);
      CHECK(std::binary_search(sol.strings.begin(), sol.strings.end(), chars("abcdb")));
      CHECK(std::binary_search(sol.strings.begin(), sol.strings.end(), chars("abcbd")));
      CHECK(count_fmo(abbcd(), engine) == 28);
    }
    {  // whole-string pattern
      FmoInstance inst{ms("ab"), {ms("ab")}};
      CHECK(solve_fmo(inst, engine).strings == chars_list({"ab", "ba"}));
      CHECK(count_fmo(inst, engine) == 2);
    }
    {  // triangle of pairs has no solution
      FmoInstance inst{ms("abc"), {ms("ab"), ms("bc"), ms("ac")}};
      SolutionSet sol = solve_fmo(inst, engine);
      CHECK(sol.complete);
      CHECK(sol.strings.empty());
    }
    {  // empty family admits every arrangement
      FmoInstance inst{ms("aabc"), {}};
      CHECK(count_fmo(inst, engine) == 12);
    }
    {  // repeated members change nothing
      FmoInstance inst = abbcd();
      inst.family.push_back(ms("bc"));
      CHECK(count_fmo(inst, engine) == 28);
    }
    {  // single-edge reduction instance
      FmoInstance inst{SymbolMultiset::of(toks("d_1_2 d_2_1 1 2 c_1 c_2 cp_1 cp_2")),
                       {SymbolMultiset::of(toks("d_1_2 2 1 c_1")), SymbolMultiset::of(toks("d_2_1 1 2 c_2")),
                        SymbolMultiset::of(toks("c_1 cp_1")), SymbolMultiset::of(toks("c_2 cp_2")),
                        SymbolMultiset::of(toks("d_1_2 2")), SymbolMultiset::of(toks("d_2_1 1"))}};
      SymbolString x = toks("cp_1 c_1 d_1_2 2 1 d_2_1 c_2 cp_2");
      std::vector<SymbolString> expected = {x, reversed(x)};
      std::sort(expected.begin(), expected.end());
      CHECK(solve_fmo(inst, engine).strings == expected);
    }
  }
}

TEST_CASE("solution limit") {
  SolutionSet sol = solve_fmo(abbcd(), FmoEngine::Pruned, 5);
  CHECK_FALSE(sol.complete);
  CHECK(sol.strings.size() == 5);
  CHECK_THROWS_AS(count_fmo(abbcd(), FmoEngine::Pruned, 27), EnumerationBudgetExceeded);
  CHECK_THROWS_AS(count_fmo(abbcd(), FmoEngine::Naive, 27), EnumerationBudgetExceeded);
  CHECK(count_fmo(abbcd(), FmoEngine::Pruned, 28) == 28);
}

TEST_CASE("engine names") {
  CHECK(parse_engine("naive") == FmoEngine::Naive);
  CHECK(parse_engine("pruned") == FmoEngine::Pruned);
  CHECK(to_string(FmoEngine::Pruned) == "pruned");
  CHECK_THROWS_AS(parse_engine("fast"), ParseError);
}

TEST_CASE("instance JSON") {
  FmoInstance inst = parse_fmo_instance(R"({"R": {"a":1,"b":2,"c":1,"d":1}, "F": [{"b":1,"c":1}, {"b":1,"d":1}]})");
  CHECK(inst == abbcd());
  CHECK(parse_fmo_instance(to_json(inst)) == inst);
  CHECK(to_json(FmoInstance{ms("ab"), {ms("ab")}}) ==
        "{\n  \"R\": {\n    \"a\": 1,\n    \"b\": 1\n  },\n  \"F\": [\n    {\n      \"a\": 1,\n"
        "      \"b\": 1\n    }\n  ]\n}\n");
  for (auto bad : {"", "{", "[]", R"({"R":{"a":0},"F":[]})", R"({"R":{"a":-1},"F":[]})",
                   R"({"R":{"a":1.5},"F":[]})", R"({"R":{"a":1}})", R"({"F":[]})",
                   R"({"R":{"a b":1},"F":[]})", R"({"R":{"a":1},"F":[{"a":"1"}]})"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_fmo_instance(bad), ParseError);
  }
  CHECK_THROWS_AS(parse_fmo_instance(R"({"R":{"a":1},"F":[{"b":1}]})"), InvalidInstance);
  CHECK_THROWS_AS(parse_fmo_instance(R"({"R":{"a":1},"F":[{}]})"), InvalidInstance);
}

TEST_CASE("string list format") {
  CHECK(format_string_list({toks("d_1_2 2"), toks("2 d_1_2")}) == "d_1_2 2\n2 d_1_2\n# count=2\n");
  CHECK(format_string_list({}) == "# count=0\n");
}
