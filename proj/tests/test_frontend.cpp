#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "dpllkit/bench.hpp"
#include "dpllkit/dimacs.hpp"
#include "dpllkit/php.hpp"
#include "dpllkit/proof_io.hpp"
#include "dpllkit/resolution.hpp"
#include "dpllkit/solver.hpp"
#include "support.hpp"

using namespace dpllkit;
using D = DpllDerivation;
using R = ResDerivation;
using dpllkit::testing::Rng;

namespace {

Literal L(std::int64_t v) { return Literal::from_dimacs(v); }

std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DimacsErrorKind error_kind(std::string_view text, bool strict = true) {
  try {
    parse_dimacs(text, DimacsOptions{strict});
  } catch (const DimacsError &e) {
    return e.kind();
  }
  FAIL("no error for: " << text);
  return DimacsErrorKind::kToken;
}

}  // namespace

// --- DIMACS -----------------------------------------------------------------

TEST_CASE("parse_dimacs examples") {
  CHECK(parse_dimacs("p cnf 2 3\n1 0\n2 0\n-1 -2 0\n").formula ==
        Formula::from_dimacs({{1}, {2}, {-1, -2}}));
  CHECK(parse_dimacs("c x\np cnf 1 1\n1 -1 0\n").formula ==
        Formula::from_dimacs({{1, -1}}));
  CHECK(error_kind("p cnf 1 1\n2 0\n") == DimacsErrorKind::kBounds);
}

TEST_CASE("parse_dimacs layout") {
  auto r = parse_dimacs("c hi\n\np  cnf 3 2\n1 -3\n 2 0 -1\r\n0\n");
  CHECK(r.formula == Formula::from_dimacs({{1, -3, 2}, {-1}}));
  CHECK(r.declared_variables == 3);
  CHECK(r.declared_clauses == 2);
  CHECK(parse_dimacs("p cnf 0 1\n0\n").formula == Formula::from_dimacs({{}}));
  // Duplicate clauses count towards the header but collapse in the formula.
  CHECK(parse_dimacs("p cnf 2 2\n1 2 0\n2 1 0\n").formula.size() == 1);
}

TEST_CASE("parse_dimacs errors") {
  CHECK(error_kind("1 0\n") == DimacsErrorKind::kMalformedHeader);
  CHECK(error_kind("") == DimacsErrorKind::kMalformedHeader);
  CHECK(error_kind("p cnf 1\n") == DimacsErrorKind::kMalformedHeader);
  CHECK(error_kind("p dnf 1 1\n1 0\n") == DimacsErrorKind::kMalformedHeader);
  CHECK(error_kind("p cnf x 1\n1 0\n") == DimacsErrorKind::kMalformedHeader);
  CHECK(error_kind("p cnf 1 1\np cnf 1 1\n1 0\n") == DimacsErrorKind::kMalformedHeader);
  CHECK(error_kind("p cnf 1 1\n1 a 0\n") == DimacsErrorKind::kToken);
  CHECK(error_kind("p cnf 1 2\n1 0\n") == DimacsErrorKind::kCount);
  CHECK(error_kind("p cnf 1 1\n1\n") == DimacsErrorKind::kToken);
  CHECK(error_kind("p cnf 1 1\n1 a 0\n", false) == DimacsErrorKind::kToken);
}

TEST_CASE("parse_dimacs reports positions") {
  try {
    parse_dimacs("p cnf 2 1\n1 -7 0\n");
    FAIL("expected an error");
  } catch (const DimacsError &e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
    CHECK(std::string(e.what()).find("bounds") != std::string::npos);
  }
}

TEST_CASE("lenient mode downgrades bounds and count problems") {
  auto r = parse_dimacs("p cnf 1 3\n2 0\n1 -1\n%\n0\n", DimacsOptions{false});
  CHECK(r.formula == Formula::from_dimacs({{2}, {1, -1}}));
  CHECK(r.warnings.size() == 3);
}

TEST_CASE("emit_dimacs") {
  CHECK(emit_dimacs(Formula::from_dimacs({{1}, {-1}})) == "p cnf 1 2\n1 0\n-1 0\n");
  CHECK(emit_dimacs(Formula{}) == "p cnf 0 0\n");
  CHECK(emit_dimacs(Formula::from_dimacs({{}})) == "p cnf 0 1\n0\n");
}

TEST_CASE("property: DIMACS round trip") {
  Rng rng(51);
  for (int i = 0; i < 500; ++i) {
    Formula f = dpllkit::testing::random_cnf(rng);
    std::string text = emit_dimacs(f);
    Formula back = parse_dimacs(text).formula;
    CHECK(back == f);
    CHECK(emit_dimacs(back) == text);
  }
}

// --- proof formats ------------------------------------------------------------

TEST_CASE("serialize_dpll examples") {
  CHECK(serialize_dpll(D::conflict()) == "conflict");
  Verdict v = solve_witness(gen_php(PhpSpec{2, 1}));
  CHECK(serialize_dpll(v.proof()) ==
        "(unit 1 (unit 2 (red [ -1 -2 ] 1 (red [ -2 ] 2 conflict))))");
  CHECK(serialize_dpll(D::elim(Clause{}, L(3), D::conflict())) ==
        "(elim [ ] 3 conflict)");
  CHECK(serialize_dpll(D::split(L(-4), D::conflict(), D::conflict())) ==
        "(split -4 conflict conflict)");
}

TEST_CASE("golden PHP(2,1) files") {
  std::string dir = DPLLKIT_GOLDEN_DIR;
  Formula f = parse_dimacs(slurp(dir + "/php_2_1.cnf")).formula;
  CHECK(f == gen_php(PhpSpec{2, 1}));
  Verdict v = solve_witness(f);
  CHECK(serialize_dpll(v.proof()) + "\n" == slurp(dir + "/php_2_1.dpll"));
  CHECK(serialize_res(dpll_to_res(Valuation{}, f, v.proof())) ==
        slurp(dir + "/php_2_1.res"));
}

TEST_CASE("parse_dpll") {
  D p = parse_dpll(" ( unit 1\n(unit 2 (red [-1 -2] 1 (red [ -2 ]  2 conflict)))) \n");
  CHECK(dpll_size(p) == 4);
  CHECK(p == solve_witness(gen_php(PhpSpec{2, 1})).proof());
  CHECK(parse_dpll("conflict") == D::conflict());
  CHECK(parse_dpll("(split 1 conflict (elim [ 2 1 ] 1 conflict))") ==
        D::split(L(1), D::conflict(), D::elim(Clause::from_dimacs({1, 2}), L(1), D::conflict())));
}

TEST_CASE("parse_dpll errors carry positions") {
  for (const char *bad : {"", "(unit 1 conflict", "(unit 0 conflict)", "(unit x conflict)",
                          "(frob 1 conflict)", "conflict conflict", "(red [ 1 2 1 conflict)",
                          "(split 1 conflict)", "[ 1 ]", "(unit 1 conflict))"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_dpll(bad), ProofParseError);
  }
  try {
    parse_dpll("(unit 1\n  (oops))");
  } catch (const ProofParseError &e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 4);
  }
}

TEST_CASE("serialize_res examples") {
  CHECK(serialize_res(R::sub(3, Clause::from_dimacs({1, -2}))) == "1 S 3 1 -2 0\n");
  R r = R::resolve(L(1), R::sub(2, Clause::from_dimacs({-1})), R::sub(1, Clause::from_dimacs({1})));
  CHECK(serialize_res(r) == "1 S 2 -1 0\n2 S 1 1 0\n3 R 1 1 2 0\n");
}

TEST_CASE("parse_res") {
  R r = parse_res("c comment\n1 S 3 -1 -2 0\n2 S 2 2 0\n3 R 2 1 2 -1 0\n\n4 S 1 1 0\n5 R 1 3 4 0\n");
  CHECK(res_size(r) == 2);
  CHECK(check_res(gen_php(PhpSpec{2, 1}), r).valid());
  for (const char *bad : {"", "1 S 3 -1\n", "2 S 1 0\n", "1 R 1 1 1 0\n", "1 X 1 0\n",
                          "1 S 1 0\n2 R 1 1 3 0\n", "1 S -1 0\n", "1 S 1 q 0\n"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_res(bad), ProofParseError);
  }
}

TEST_CASE("property: proof formats round trip") {
  Rng rng(52);
  for (int i = 0; i < 300; ++i) {
    Formula f = dpllkit::testing::random_unsat_cnf(rng);
    D p = solve_witness(f).proof();
    std::string s = serialize_dpll(p);
    D back = parse_dpll(s);
    CHECK(back == p);
    CHECK(serialize_dpll(back) == s);
    R r = dpll_to_res(Valuation{}, f, p);
    std::string t = serialize_res(r);
    R rback = parse_res(t);
    CHECK(rback == r);
    CHECK(serialize_res(rback) == t);
  }
}

TEST_CASE("property: serialized resolution ids are post-order") {
  Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    Formula f = dpllkit::testing::random_unsat_cnf(rng);
    std::istringstream in(serialize_res(refute(f).proof()));
    std::string line;
    std::size_t expect = 1;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::size_t id;
      char kind;
      ls >> id >> kind;
      CHECK(id == expect++);
      if (kind == 'R') {
        long long pivot;
        std::size_t a, b;
        ls >> pivot >> a >> b;
        CHECK(a < id);
        CHECK(b < id);
      }
    }
  }
}

// --- PHP --------------------------------------------------------------------

TEST_CASE("gen_php") {
  CHECK(gen_php(PhpSpec{2, 1}) == Formula::from_dimacs({{1}, {2}, {-1, -2}}));
  CHECK(gen_php(PhpSpec{1, 1}) == Formula::from_dimacs({{1}}));
  Formula p22 = gen_php(PhpSpec{2, 2});
  CHECK(p22 == Formula::from_dimacs({{1, 2}, {3, 4}, {-1, -3}, {-2, -4}}));
  CHECK(vars_of(p22).size() == 4);
  CHECK(php_variable(PhpSpec{3, 4}, 2, 3).id == 7);
  CHECK(gen_php(PhpSpec{3, 2}) ==
        Formula::from_dimacs({{1, 2}, {3, 4}, {5, 6}, {-1, -3}, {-2, -4},
                              {-1, -5}, {-2, -6}, {-3, -5}, {-4, -6}}));
  CHECK_THROWS_AS(gen_php(PhpSpec{0, 1}), std::invalid_argument);
  CHECK(php_name(PhpSpec{6, 5}) == "PHP(6,5)");
}

TEST_CASE("PHP DIMACS carries the variable map") {
  std::string text = emit_php_dimacs(PhpSpec{2, 2});
  CHECK(text.find("c 3 = (2,1)") != std::string::npos);
  CHECK(parse_dimacs(text).formula == gen_php(PhpSpec{2, 2}));
}

TEST_CASE("property: PHP clause count and width") {
  for (std::uint32_t n = 1; n <= 5; ++n)
    for (std::uint32_t m = 1; m <= 5; ++m) {
      Formula f = gen_php(PhpSpec{n, m});
      CHECK(f.size() == n + m * n * (n - 1) / 2);
      CHECK(max_variable(f) == n * m);
      CHECK(weight(f) == n * m + m * n * (n - 1));
    }
}

// --- bench ------------------------------------------------------------------

TEST_CASE("bench rows") {
  BenchOptions opts;
  opts.php_max = 3;
  opts.oracle_cap = 24;
  std::vector<std::string> seen;
  auto rows = run_bench(opts, [&](const BenchRecord &r) {
    seen.push_back(r.instance + (r.mode == SolverMode::kWitness ? "/w" : "/d"));
  });
  REQUIRE(rows.size() == 12);
  CHECK(seen.front() == "PHP(1,1)/w");
  CHECK(seen[1] == "PHP(1,1)/d");
  CHECK(seen[2] == "PHP(2,1)/w");
  CHECK(seen.back() == "PHP(4,3)/d");
  for (const auto &r : rows) {
    CAPTURE(r.instance);
    CHECK(r.verified);
    CHECK(r.oracle_agrees == std::optional<bool>(true));
    if (r.dpll_size && r.res_size) CHECK(*r.res_size <= *r.dpll_size);
    bool fits = r.instance == "PHP(1,1)" || r.instance == "PHP(2,2)" ||
                r.instance == "PHP(3,3)";
    CHECK(r.satisfiable == fits);
  }
  CHECK(*rows[2].dpll_size == 4);
  CHECK(*rows[2].res_size == 2);
  CHECK_FALSE(rows[3].dpll_size.has_value());

  std::string row = format_bench_row(rows[3]);
  CHECK(row.rfind("PHP(2,1)\tdecide\tUNSAT\t-\t-\t", 0) == 0);
  CHECK(bench_header().rfind("instance\tmode\tverdict", 0) == 0);
}
