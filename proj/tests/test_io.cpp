#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "staircase/io.hpp"
#include "staircase/render.hpp"
#include "staircase/rng.hpp"
#include "staircase/selftest.hpp"

using namespace staircase;
using staircase::testing::pts;

TEST_CASE("parse_generators reads term lists") {
  const ParsedGenerators squares = parse_generators("x^2, y^2");
  CHECK(squares.points == pts({{2, 0}, {0, 2}}));
  CHECK_FALSE(squares.has_negative_exponent);

  CHECK(parse_generators("1").points == pts({{0, 0}}));

  const ParsedGenerators module_text = parse_generators("x*y^-1, 1");
  CHECK(module_text.points == pts({{1, -1}, {0, 0}}));
  CHECK(module_text.has_negative_exponent);

  CHECK(parse_generators(" x * y ,  x^2 ").points == pts({{1, 1}, {2, 0}}));
  CHECK(parse_generators("x*x*y^3").points == pts({{2, 3}}));
}

TEST_CASE("parse_generators reports the error position") {
  CHECK_THROWS_AS(parse_generators("x^"), ParseError);
  CHECK_THROWS_AS(parse_generators("x,,y"), ParseError);
  CHECK_THROWS_AS(parse_generators("z"), ParseError);
  CHECK_THROWS_AS(parse_generators("x y"), ParseError);
  try {
    parse_generators("x^2, w");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("ideals print highest x-power first, modules corner first") {
  CHECK(print_ideal(MonomialIdeal::minimize({{0, 2}, {1, 1}, {2, 0}})) == "x^2, x*y, y^2");
  CHECK(print_ideal(MonomialIdeal::minimize({{0, 1}, {1, 0}})) == "x, y");
  CHECK(print_ideal(MonomialIdeal::minimize({{0, 0}})) == "1");
  CHECK(print_module(MonomialModule::minimize({{0, 0}, {1, -1}})) == "1, x*y^-1");
}

TEST_CASE("monomial printing uses the shorthand forms") {
  CHECK(print_monomial({0, 0}) == "1");
  CHECK(print_monomial({1, 0}) == "x");
  CHECK(print_monomial({0, 3}) == "y^3");
  CHECK(print_monomial({2, -1}) == "x^2*y^-1");
}

TEST_CASE("parse and print are inverse on random values") {
  Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    const MonomialIdeal ideal = random_ideal(rng, 5, 9);
    CHECK(parse_generators(print_ideal(ideal)).to_ideal() == ideal);

    const MonomialModule m =
        MonomialModule::minimize(staircase::testing::random_points(rng, rng.range(1, 5), -9, 9));
    CHECK(parse_generators(print_module(m)).to_module() == m);
  }
}

TEST_CASE("factorization text round trips") {
  const Factorization two = parse_factorization("E[4/3]*E[5/2]");
  CHECK(two.anchor == LatticePoint{0, 0});
  CHECK(two.factors == std::map<Slope, std::int64_t>{{{4, 3}, 1}, {{5, 2}, 1}});
  CHECK(print_factorization(two) == "E[4/3]*E[5/2]");

  CHECK(parse_factorization("E[1/1]^2").factors ==
        std::map<Slope, std::int64_t>{{{1, 1}, 2}});
  CHECK(parse_factorization("E[1/1]*E[1/1]").factors ==
        std::map<Slope, std::int64_t>{{{1, 1}, 2}});

  const Factorization shifted = parse_factorization("E[2/1]^3*x^2*y");
  CHECK(shifted.anchor == LatticePoint{2, 1});
  CHECK(print_factorization(shifted) == "E[2/1]^3*x^2*y");

  CHECK(print_factorization(Factorization{}) == "1");
  CHECK(parse_factorization("x*y").factors.empty());
}

TEST_CASE("factorization text rejects malformed input") {
  CHECK_THROWS_AS(parse_factorization("E[2/4]"), ParseError);
  CHECK_THROWS_AS(parse_factorization("E[1/1]^0"), ParseError);
  CHECK_THROWS_AS(parse_factorization("E[1]"), ParseError);
  CHECK_THROWS_AS(parse_factorization("E[1/1] E[2/1]"), ParseError);
  CHECK_THROWS_AS(parse_factorization(""), ParseError);
}

TEST_CASE("JSON output matches the documented shapes") {
  Factorization f;
  f.factors[Slope{4, 3}] = 1;
  f.factors[Slope{5, 2}] = 1;
  CHECK(to_json(f) == R"({"anchor":[0,0],"factors":[[4,3,1],[5,2,1]]})");
  CHECK(to_json(Factorization{}) == R"({"anchor":[0,0],"factors":[]})");
  CHECK(to_json(LatticePoint{3, -4}) == "[3,-4]");
  CHECK(to_json(MonomialIdeal::minimize({{0, 2}, {2, 0}})) ==
        R"({"generators":[[0,2],[2,0]]})");
}

TEST_CASE("JSON round trips") {
  Rng rng(52);
  for (int i = 0; i < 100; ++i) {
    const MonomialIdeal ideal = random_ideal(rng, 4, 9);
    CHECK(ideal_from_json(to_json(ideal)) == ideal);

    Factorization f = random_factorization(rng, 9, 4, 4);
    f.anchor = LatticePoint{rng.range(0, 9), rng.range(0, 9)};
    CHECK(factorization_from_json(to_json(f)) == f);
  }
}

TEST_CASE("stream specs round trip byte for byte") {
  const FactorStream triangular = FactorStream::make({0, 0}, FactorSide::triangular());
  const std::string doc = to_json(triangular);
  CHECK(doc == R"({"anchor":[0,0],"right":{"family":"triangular"},"left":{"list":[]}})");
  CHECK(to_json(stream_from_json(doc)) == doc);

  const FactorStream cut = FactorStream::make({1, -2}, FactorSide::triangular(5),
                                              FactorSide::powers({1, 2}, 3));
  CHECK(to_json(stream_from_json(to_json(cut))) == to_json(cut));
  CHECK(stream_from_json(to_json(cut)) == cut);
}

TEST_CASE("schema errors carry a JSON pointer") {
  CHECK_THROWS_AS(ideal_from_json("nonsense"), SchemaError);
  CHECK_THROWS_AS(ideal_from_json(R"({"generators":[[1]]})"), SchemaError);
  CHECK_THROWS_AS(factorization_from_json(R"({"anchor":[0,0],"factors":[[4,3]]})"), SchemaError);
  CHECK_THROWS_AS(factorization_from_json(R"({"anchor":[0,0],"factors":[[4,3,1.5]]})"),
                  SchemaError);
  try {
    factorization_from_json(R"({"anchor":[0,0],"factors":[[4,6,1]]})");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.pointer() == "/factors/0");
  }
}

TEST_CASE("ascii rendering of the closed (x^2, y^2) staircase") {
  const MonomialIdeal closed = integral_closure(MonomialIdeal::minimize({{2, 0}, {0, 2}}));
  const BoundaryPath hull = lower_left_hull(closed.generators());
  RenderOptions options;
  options.viewport = Rect{0, 3, 0, 3};
  const std::string expected =
      "####\n"
      "*###\n"
      ".*##\n"
      "..*#\n";
  CHECK(render_ascii(hull, closed.generators(), options) == expected);
}

TEST_CASE("ascii rendering honors the color switch") {
  const BoundaryPath hull = lower_left_hull(pts({{0, 0}}));
  RenderOptions options;
  options.viewport = Rect{0, 1, 0, 1};
  options.color = true;
  CHECK(render_ascii(hull, pts({{0, 0}}), options) == "##\n\x1b[31m*\x1b[0m#\n");
}

TEST_CASE("render rejects oversized viewports") {
  const BoundaryPath hull = lower_left_hull(pts({{0, 0}}));
  RenderOptions options;
  options.viewport = Rect{0, 100, 0, 100};
  options.max_cells = 100;
  CHECK_THROWS_AS(render_ascii(hull, {}, options), ViewportTooLarge);
  CHECK_THROWS_AS(render_svg(hull, {}, options), ViewportTooLarge);
}

TEST_CASE("svg rendering is deterministic and structured") {
  const MonomialModule approx = MonomialModule::minimize(
      pts({{0, 0}, {1, -1}, {3, -2}, {6, -3}, {10, -4}}));
  const BoundaryPath hull = lower_left_hull(approx.generators());
  RenderOptions options;
  options.viewport = default_viewport(hull, approx.generators());

  const std::string svg = render_svg(hull, approx.generators(), options);
  CHECK(svg == render_svg(hull, approx.generators(), options));
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") == 0);
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  // One dot per generator.
  std::size_t circles = 0;
  for (std::size_t at = svg.find("<circle"); at != std::string::npos;
       at = svg.find("<circle", at + 1)) {
    ++circles;
  }
  CHECK(circles == approx.generators().size());
  // The five vertices appear on the polyline in order.
  const std::size_t polyline = svg.find("<polyline points=\"");
  REQUIRE(polyline != std::string::npos);
  std::size_t previous = polyline;
  for (const LatticePoint& v : hull.vertices()) {
    const std::int64_t px = (v.x - options.viewport.x0 + 1) * options.cell_px;
    const std::int64_t py = (options.viewport.y1 - v.y + 1) * options.cell_px;
    const std::string pair = std::to_string(px) + "," + std::to_string(py);
    const std::size_t at = svg.find(pair, previous);
    REQUIRE(at != std::string::npos);
    previous = at;
  }
}

TEST_CASE("a path with no edges renders as the quadrant corner") {
  const BoundaryPath hull = lower_left_hull(pts({{0, 0}}));
  RenderOptions options;
  options.viewport = Rect{-1, 2, -1, 2};
  const std::string svg = render_svg(hull, pts({{0, 0}}), options);
  // Polyline: viewport top, the corner vertex, viewport right edge.
  const std::size_t begin = svg.find("<polyline points=\"");
  REQUIRE(begin != std::string::npos);
  const std::size_t end = svg.find('"', begin + 18);
  const std::string points = svg.substr(begin + 18, end - begin - 18);
  CHECK(std::count(points.begin(), points.end(), ',') == 3);
  CHECK(points == "48,24 48,72 96,72");
}
