#include <doctest.h>

#include <cmath>

#include "entbin/errors.hpp"
#include "entbin/special_functions.hpp"
#include "oracles.hpp"

namespace sf = entbin::special;

namespace {

struct ErfRow {
  double x, erf, erfc;
};

// mpmath, 40 digits
constexpr ErfRow kErfTable[] = {
    {-6, -0.99999999999999997848, 1.9999999999999999785},
    {-4.5, -0.99999999980338395585, 1.9999999998033839558},
    {-3, -0.99997790950300141456, 1.9999779095030014146},
    {-2.5, -0.99959304798255504106, 1.9995930479825550411},
    {-2, -0.99532226501895273416, 1.9953222650189527342},
    {-1.999, -0.99530155665137051232, 1.9953015566513705123},
    {-1.5, -0.96610514647531072707, 1.9661051464753107271},
    {-1, -0.84270079294971486934, 1.8427007929497148693},
    {-0.5, -0.52049987781304653768, 1.5204998778130465377},
    {-0.1, -0.1124629160182848984, 1.1124629160182848984},
    {-1e-05, -0.000011283791670579000273, 1.000011283791670579},
    {1e-08, 1.1283791670955125599e-8, 0.99999998871620832904},
    {0.001, 0.0011283787909692364034, 0.9988716212090307636},
    {0.3, 0.32862675945912741619, 0.67137324054087258381},
    {0.75, 0.7111556336535151316, 0.2888443663464848684},
    {1, 0.84270079294971486934, 0.15729920705028513066},
    {1.25, 0.92290012825645823014, 0.077099871743541769863},
    {1.9999, 0.99532019790702939169, 0.0046798020929706083079},
    {2, 0.99532226501895273416, 0.0046777349810472658379},
    {2.0001, 0.99532433130419666017, 0.0046756686958033398333},
    {2.7, 0.99986566726005947581, 0.00013433273994052419237},
    {3.5, 0.99999925690162765859, 7.4309837234141274552e-7},
    {4.2, 0.99999999714450582041, 2.8554941795921842402e-9},
    {5, 0.99999999999846254021, 1.5374597944280348502e-12},
    {5.9, 0.9999999999999999281, 7.1904097835504777249e-17},
    {6, 0.99999999999999997848, 2.1519736712498913117e-17},
};

struct LogErfcRow {
  double x, value;
};

constexpr LogErfcRow kLogErfcTable[] = {
    {-3, 0.69313613525044681032},  {-1, 0.61123231767807049464},  {0.5, -0.73501112983708440303},
    {1.9, -4.9323458627802689327}, {2.5, -7.8068152727272643589}, {3.06, -11.102036466127775925},
    {4, -17.987778312103006503},   {5.99, -38.25603659420231784}, {6, -38.377561173223388366},
    {6.01, -38.499283182457470816}, {8, -66.65947197080516149},   {12, -147.06071417798700949},
    {20, -403.56934333410423496},  {26, -679.83119976319423026},  {30, -903.97411711064387808},
};

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("erf matches the extended-precision table to 1e-13 relative") {
  for (const auto& row : kErfTable) {
    CAPTURE(row.x);
    CHECK(rel(sf::erf(row.x), row.erf) <= 1e-13);
  }
}

TEST_CASE("erfc matches the table in the tail") {
  for (const auto& row : kErfTable) {
    CAPTURE(row.x);
    CHECK(rel(sf::erfc(row.x), row.erfc) <= 1e-13);
  }
}

TEST_CASE("erf examples") {
  CHECK(sf::erf(0.0) == 0.0);
  CHECK(sf::erf(1.0) == doctest::Approx(0.8427007929).epsilon(1e-10));
  for (double x : {0.1, 0.7, 1.9, 2.0, 3.3, 5.5}) CHECK(sf::erf(-x) == -sf::erf(x));
}

TEST_CASE("erf agrees with an independent long-double Maclaurin series") {
  for (double x = -3.0; x <= 3.0; x += 0.0625) {
    CAPTURE(x);
    const double want = static_cast<double>(oracle::erf_maclaurin(x));
    if (want == 0.0) {
      CHECK(sf::erf(x) == 0.0);
    } else {
      CHECK(rel(sf::erf(x), want) <= 1e-13);
    }
  }
}

TEST_CASE("erf + erfc = 1") {
  for (double x = -6.0; x <= 6.0; x += 0.01) {
    CAPTURE(x);
    CHECK(std::abs(sf::erf(x) + sf::erfc(x) - 1.0) <= 1e-13);
  }
}

TEST_CASE("log_erfc matches the table to 1e-10 relative") {
  CHECK(sf::log_erfc(0.0) == 0.0);
  for (const auto& row : kLogErfcTable) {
    CAPTURE(row.x);
    CHECK(rel(sf::log_erfc(row.x), row.value) <= 1e-10);
  }
  CHECK(std::exp(sf::log_erfc(3.06)) == doctest::Approx(1.508157939989e-5).epsilon(1e-10));
}

TEST_CASE("log_erfc branches agree at the switchover") {
  const double direct = std::log(sf::erfc(6.0));
  CHECK(std::abs(sf::detail::log_erfc_asymptotic(6.0) - direct) <= 1e-9);
  CHECK(std::abs(sf::detail::log_erfc_continued_fraction(6.0) - direct) <= 1e-9);
  CHECK(std::abs(sf::log_erfc(6.0 - 1e-12) - sf::log_erfc(6.0)) <= 1e-9);
  CHECK(std::abs(std::log(sf::erfc(2.0 - 1e-12)) - sf::log_erfc(2.0)) <= 1e-9);
}

TEST_CASE("log_erfc stays finite where erfc underflows") {
  CHECK(sf::erfc(30.0) == 0.0);
  CHECK(std::isfinite(sf::log_erfc(30.0)));
  // x = 20: -400 - log(20 sqrt(pi)) + small correction
  const double leading = -400.0 - std::log(20.0 * std::sqrt(3.14159265358979323846));
  CHECK(std::abs(sf::log_erfc(20.0) - leading) < 2e-3);
}

TEST_CASE("laguerre agrees with the explicit sum and with tabulated values") {
  for (int n : {0, 1, 2, 5, 12, 20}) {
    for (int a : {0, 1, 4}) {
      for (double x : {0.0, 0.3, 1.0, 4.5, 8.0}) {
        CAPTURE(n);
        CAPTURE(a);
        CAPTURE(x);
        const double want = static_cast<double>(oracle::laguerre_sum(n, a, x));
        CHECK(sf::laguerre(n, a, x) == doctest::Approx(want).epsilon(1e-9).scale(1.0));
      }
    }
  }
  struct Row {
    int n, a;
    double x, value;
  };
  // mpmath
  const Row rows[] = {{50, 0, 8, 0.86894192137521699474},   {100, 0, 8, 3.9874060173794653743},
                      {120, 0, 2.5, -0.37288847818181702456}, {60, 30, 8, -1474798569718725.5654},
                      {80, 5, 0.5, 50371.650389458464574},   {10, 3, 20, -451.74250440917107584}};
  for (const auto& r : rows) {
    CAPTURE(r.n);
    CHECK(rel(sf::laguerre(r.n, r.a, r.x), r.value) <= 1e-10);
  }
  CHECK_THROWS_AS(sf::laguerre(-1, 0, 1.0), entbin::DomainError);
}

TEST_CASE("golden_section_max") {
  const sf::ScalarTolerance tol{1e-9, 1e-12, 200};
  SUBCASE("quadratic") {
    const auto r = sf::golden_section_max([](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0, 1.0, tol);
    CHECK(std::abs(r.x - 0.3) <= 1e-8);
  }
  SUBCASE("constant") {
    const auto r = sf::golden_section_max([](double) { return 4.25; }, -1.0, 2.0, tol);
    CHECK(r.x >= -1.0);
    CHECK(r.x <= 2.0);
    CHECK(r.value == 4.25);
  }
  SUBCASE("maximum on the boundary") {
    const auto r = sf::golden_section_max([](double x) { return -x; }, 0.0, 1.0, tol);
    CHECK(r.x == 0.0);
  }
  SUBCASE("receiver Erf argument peaks at N/(2(1+N)) for N = 1") {
    const double n = 1.0;
    const auto f = [n](double b) {
      const double t = b * n;
      return std::sqrt((1.0 - b) * (t + 1.0 + std::sqrt(t * t + 2.0 * t)));
    };
    CHECK(std::abs(sf::golden_section_max(f, 0.0, 1.0, tol).x - 0.25) <= 1e-5);
  }
  SUBCASE("iteration limit") {
    CHECK_THROWS_AS(sf::golden_section_max([](double x) { return -x * x; }, -1.0, 1.0, {1e-12, 1e-12, 5}),
                    entbin::IterationLimit);
  }
  SUBCASE("deterministic") {
    const auto f = [](double x) { return std::sin(3.0 * x); };
    const auto a = sf::golden_section_max(f, 0.0, 1.0, tol);
    const auto b = sf::golden_section_max(f, 0.0, 1.0, tol);
    CHECK(a.x == b.x);
    CHECK(a.value == b.value);
  }
}

TEST_CASE("bisect_root") {
  const sf::ScalarTolerance tol{1e-14, 1e-15, 200};
  CHECK(sf::bisect_root([](double x) { return x - 2.0; }, 0.0, 5.0, tol) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK_THROWS_AS(sf::bisect_root([](double x) { return x * x + 1.0; }, -1.0, 2.0, tol), entbin::NoSignChange);
  CHECK_THROWS_AS(sf::bisect_root([](double x) { return x - 0.123456789; }, 0.0, 1.0, {1e-300, 1e-300, 3}),
                  entbin::IterationLimit);
  const auto f = [](double x) { return std::cos(x) - x; };
  CHECK(sf::bisect_root(f, 0.0, 1.0, tol) == sf::bisect_root(f, 0.0, 1.0, tol));
  CHECK_THROWS_AS(sf::bisect_root(f, 0.0, 1.0, {0.0, 1.0, 10}), entbin::DomainError);
}
