#ifndef STAIRCASE_IO_HPP
#define STAIRCASE_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "staircase/factorization.hpp"
#include "staircase/lattice.hpp"
#include "staircase/monomial_ideal.hpp"
#include "staircase/monomial_module.hpp"

namespace staircase {

// Text grammar: a comma-separated list of monomial terms. A term is a
// '*'-separated product of "1", "x", "y", "x^a", "y^b"; exponents may be
// negative in module context. Examples: "x^2, y^2", "1, x*y^-1".

struct ParsedGenerators {
  std::vector<LatticePoint> points;
  bool has_negative_exponent = false;

  MonomialIdeal to_ideal() const { return MonomialIdeal::minimize(points); }
  MonomialModule to_module() const { return MonomialModule::minimize(points); }
};

ParsedGenerators parse_generators(std::string_view text);

std::string print_monomial(LatticePoint p);

/// Highest x-power first, the usual ring convention: "x^2, x*y, y^2".
std::string print_ideal(const MonomialIdeal& ideal);

/// Corner first (x ascending): "1, x*y^-1, x^3*y^-2".
std::string print_module(const MonomialModule& m);

// Factorization text: "E[4/3]^2*E[5/2]*x^3*y" — simple factors in increasing
// slope order, an omitted exponent means 1, and a trailing monomial carries
// the translation part when the anchor is not the origin. The empty product
// at the origin prints as "1".

Factorization parse_factorization(std::string_view text);
std::string print_factorization(const Factorization& f);

// JSON codecs. Structures use stable field order; from_json(to_json(v)) == v.
// Malformed documents raise SchemaError with a JSON pointer.

std::string to_json(const LatticePoint& p);
std::string to_json(const MonomialIdeal& ideal);
std::string to_json(const MonomialModule& m);
std::string to_json(const Factorization& f);
std::string to_json(const FactorStream& s);
std::string to_json(const Window& w);
std::string to_json(const StabilizationReport& report);

LatticePoint lattice_point_from_json(std::string_view text);
MonomialIdeal ideal_from_json(std::string_view text);
MonomialModule module_from_json(std::string_view text);
Factorization factorization_from_json(std::string_view text);
FactorStream stream_from_json(std::string_view text);

}  // namespace staircase

#endif  // STAIRCASE_IO_HPP
