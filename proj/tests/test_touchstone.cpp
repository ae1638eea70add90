#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "herd/constants.hpp"
#include "herd/errors.hpp"
#include "herd/touchstone.hpp"
#include "oracle.hpp"

using namespace herd;

namespace {

SParamTable random_table(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 40);
  std::uniform_real_distribution<double> start(1e3, 1e11), step(1.0, 1e9);
  const int n = count(rng);
  std::vector<double> f;
  double x = start(rng);
  std::vector<TwoPort> e;
  for (int i = 0; i < n; ++i) {
    f.push_back(x);
    x += step(rng);
    TwoPort p;
    p.s11 = oracle::random_complex(rng, 1e-6, 1.0);
    p.s21 = oracle::random_complex(rng, 1e-6, 1.0);
    p.s12 = oracle::random_complex(rng, 1e-6, 1.0);
    p.s22 = oracle::random_complex(rng, 1e-6, 1.0);
    e.push_back(p);
  }
  return SParamTable(FrequencyGrid(f), e, Provenance::model, "random");
}

bool close(Complex a, Complex b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }

bool tables_close(const SParamTable& a, const SParamTable& b, double rel) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (oracle::rel_err(a.grid[i], b.grid[i]) > rel) return false;
    const auto& p = a.entries[i];
    const auto& q = b.entries[i];
    if (!close(p.s11, q.s11, rel) || !close(p.s21, q.s21, rel) || !close(p.s12, q.s12, rel) ||
        !close(p.s22, q.s22, rel))
      return false;
  }
  return true;
}

std::size_t error_line(const std::string& text) {
  try {
    parse_touchstone(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("DB row") {
  const auto t = parse_touchstone("# GHZ S DB R 50\n10 -0.05 -10 -60.2 120 -60.2 120 -0.05 -10\n");
  REQUIRE(t.size() == 1);
  CHECK(t.grid[0] == 1e10);
  CHECK(t.provenance == Provenance::measured);
  CHECK(std::abs(t.entries[0].s21) == doctest::Approx(std::pow(10.0, -60.2 / 20)).epsilon(1e-14));
  CHECK(std::arg(t.entries[0].s21) * 180 / constants::pi == doctest::Approx(120.0).epsilon(1e-13));
  CHECK(std::abs(t.entries[0].s11) == doctest::Approx(std::pow(10.0, -0.05 / 20)).epsilon(1e-14));
  CHECK(t.entries[0].z_ref == 50.0);
  CHECK_FALSE(t.magnitude_only);
}

TEST_CASE("RI row and column order") {
  const auto t = parse_touchstone("# HZ S RI R 50\n1e9 0.1 0 0.99 0 0.98 0 0.2 0\n");
  CHECK(t.grid[0] == 1e9);
  CHECK(t.entries[0].s11 == Complex(0.1, 0));
  CHECK(t.entries[0].s21 == Complex(0.99, 0));
  CHECK(t.entries[0].s12 == Complex(0.98, 0));
  CHECK(t.entries[0].s22 == Complex(0.2, 0));
}

TEST_CASE("option line") {
  // defaults: GHZ, MA, 50 ohm
  const auto t = parse_touchstone("#\n2 0.5 90 1 0 1 0 0.5 -90\n");
  CHECK(t.grid[0] == 2e9);
  CHECK(t.entries[0].s11.imag() == doctest::Approx(0.5).epsilon(1e-15));
  // any order, any case, other reference impedance
  const auto u = parse_touchstone("# r 75 ri mhz s\n3 1 0 1 0 1 0 1 0\n");
  CHECK(u.grid[0] == 3e6);
  CHECK(u.entries[0].z_ref == 75.0);

  CHECK(error_line("! c\n# GHZ S FOO R 50\n1 0 0 1 0 1 0 0 0\n") == 2);
  CHECK(error_line("# GHZ Z RI\n1 0 0 1 0 1 0 0 0\n") == 1);
  CHECK(error_line("# GHZ S RI R\n1 0 0 1 0 1 0 0 0\n") == 1);
  CHECK(error_line("# GHZ S RI R -5\n1 0 0 1 0 1 0 0 0\n") == 1);
  CHECK(error_line("# GHZ\n# GHZ\n1 0 0 1 0 1 0 0 0\n") == 2);
}

TEST_CASE("parse errors carry the line number") {
  CHECK(error_line("! x\n# GHZ S RI R 50\n1 0 0 1 0 1 0 0\n") == 3);
  CHECK(error_line("# GHZ S RI R 50\n1 0 0 1 0 1 0 0 0\n1 0 0 1 0 1 0 0 0\n") == 3);
  CHECK(error_line("# GHZ S RI R 50\n2 0 0 1 0 1 0 0 0\n\n1 0 0 1 0 1 0 0 0\n") == 4);
  CHECK(error_line("# GHZ S RI R 50\n1 0 0 1 0 1 0 x 0\n") == 2);
  CHECK(error_line("# GHZ S RI R 50\n-1 0 0 1 0 1 0 0 0\n") == 2);
  CHECK(error_line("1 0 0 1 0 1 0 0 0\n") == 1);
  CHECK(error_line("[Version] 2.0\n# GHZ S RI R 50\n") == 1);
  CHECK_THROWS_WITH_AS(parse_touchstone("[Version] 2.0\n"), doctest::Contains("v2"), ParseError);
  CHECK_THROWS_AS(parse_touchstone("! only comments\n"), ParseError);
  CHECK_THROWS_AS(parse_touchstone("# GHZ S RI R 50\n"), ParseError);
}

TEST_CASE("comments and magnitude-only data") {
  const std::string text =
      "! herd bench run 7\n!MAGONLY\n# GHZ S MA R 50\n1 0.1 33 0.9 -45 0.9 -45 0.1 12 ! trailing\n";
  const auto t = parse_touchstone(text);
  CHECK(t.label == "bench run 7");
  CHECK(t.magnitude_only);
  CHECK(t.entries[0].s21 == Complex(0.9, 0.0));
  CHECK(t.entries[0].s11 == Complex(0.1, 0.0));
  const auto again = parse_touchstone(write_touchstone(t));
  CHECK(again.magnitude_only);
  CHECK(again.label == "bench run 7");
}

TEST_CASE("writer") {
  const SParamTable id(FrequencyGrid({10e9}), {TwoPort::identity()}, Provenance::model, "through");
  const std::string db = write_touchstone(id, TouchstoneFormat::db, FrequencyUnit::ghz);
  CHECK(db == "! herd through\n# GHZ S DB R 50\n10 -400 0 0 0 0 0 -400 0\n");
  const std::string hz = write_touchstone(id, TouchstoneFormat::ri, FrequencyUnit::hz);
  CHECK(hz.find("\n10000000000 0 0 1 0 1 0 0 0\n") != std::string::npos);

  const SParamTable odd(FrequencyGrid({12345678901.0}), {TwoPort::identity()}, Provenance::model, "x");
  const auto back = parse_touchstone(write_touchstone(odd, TouchstoneFormat::ri, FrequencyUnit::ghz));
  CHECK(back.grid[0] == 12345678901.0);

  SParamTable empty = id;
  empty.entries.clear();
  CHECK_THROWS_AS(write_touchstone(empty), DomainError);
}

TEST_CASE("round trip across formats and units") {
  std::mt19937_64 rng(4242);
  const TouchstoneFormat formats[] = {TouchstoneFormat::ri, TouchstoneFormat::ma, TouchstoneFormat::db};
  const FrequencyUnit units[] = {FrequencyUnit::hz, FrequencyUnit::khz, FrequencyUnit::mhz, FrequencyUnit::ghz};
  for (int i = 0; i < 1200; ++i) {
    const auto fmt = formats[i % 3];
    const auto unit = units[(i / 3) % 4];
    const SParamTable t0 = random_table(rng);
    const SParamTable t1 = parse_touchstone(write_touchstone(t0, fmt, unit));
    const SParamTable t2 = parse_touchstone(write_touchstone(t1, fmt, unit));
    CHECK(tables_close(t1, t0, 1e-9));
    CHECK(tables_close(t2, t1, 1e-9));
    CHECK(t1.grid == t2.grid);
  }
}

TEST_CASE("file reader") {
  CHECK_THROWS_AS(read_touchstone_file("/nonexistent/file.s2p"), ParseError);
}
