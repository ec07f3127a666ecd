#include "doctest.h"

#include <cmath>
#include <limits>
#include <sstream>

#include "rabiqpt/csv.hpp"
#include "rabiqpt/phases.hpp"

using namespace rabiqpt;

TEST_SUITE("csv") {
  TEST_CASE("number formatting") {
    CHECK(csv::format_number(0.0) == "0");
    CHECK(csv::format_number(-0.0) == "0");
    CHECK(csv::format_number(1.0) == "1");
    CHECK(csv::format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(csv::format_number(-2.5e-20) == "-2.5e-20");
    CHECK(csv::format_number(123456789012345.0) == "1.23456789012e+14");
  }

  TEST_CASE("writer and reader round trip") {
    std::stringstream s;
    csv::Writer w(s);
    w.meta("tool", "x").meta("v", 0.33);
    w.header({"a", "b"});
    w.row({1.0, 2.5});
    w.row_text({"g0", "3"});
    CHECK(s.str() == "# tool: x\n# v: 0.33\na,b\n1,2.5\ng0,3\n");
    const auto t = csv::read(s);
    CHECK(t.meta_value("v") == "0.33");
    CHECK(t.header == std::vector<std::string>{"a", "b"});
    CHECK(t.rows.size() == 2);
    CHECK(t.number(0, "b") == 2.5);
    CHECK(t.rows[1][0] == "g0");
    CHECK_THROWS_AS(t.column("c"), std::out_of_range);
    CHECK_THROWS_AS(t.meta_value("nope"), std::out_of_range);
  }

  TEST_CASE("malformed input") {
    std::istringstream ragged("a,b\n1,2\n3\n");
    CHECK_THROWS_AS(csv::read(ragged), std::runtime_error);
    std::istringstream empty("# only: meta\n");
    CHECK_THROWS_AS(csv::read(empty), std::runtime_error);
  }

  TEST_CASE("phase artifacts carry the documented columns") {
    const auto base = ModelParams::resonant(0.0, 0.49);
    const auto deltas = linspace(-0.01, 0.01, 3);
    const auto xis = linspace(0.0, 3.0, 31);
    const auto d = diagram(base, deltas, xis);

    std::stringstream cells;
    csv::Writer wc(cells);
    write_cells(wc, d);
    const auto tc = csv::read(cells);
    CHECK(tc.header == std::vector<std::string>{"delta", "xi", "phase_label", "n_excitation", "n_bar"});
    CHECK(tc.rows.size() == d.cells.size());
    CHECK(tc.rows[0][2] == "2-");
    CHECK(tc.number(0, "n_excitation") == 2);

    std::stringstream bounds;
    csv::Writer wb(bounds);
    write_boundaries(wb, d);
    const auto tb = csv::read(bounds);
    CHECK(tb.header == std::vector<std::string>{"curve_id", "delta", "xi", "left_label", "right_label"});
    CHECK(tb.rows.size() == 6);

    std::stringstream lad;
    csv::Writer wl(lad);
    write_ladder(wl, photon_ladder(base, xis));
    const auto tl = csv::read(lad);
    CHECK(tl.header == std::vector<std::string>{"xi", "n_bar"});
    CHECK(tl.number(0, "n_bar") == 1.5);
  }
}
