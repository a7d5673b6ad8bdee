#ifndef STAIRCASE_MONOMIAL_MODULE_HPP
#define STAIRCASE_MONOMIAL_MODULE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "staircase/factorization.hpp"
#include "staircase/lattice.hpp"
#include "staircase/monomial_ideal.hpp"

namespace staircase {

/// Finitely generated monomial module in two variables: a sorted antichain of
/// generator exponents in Z^2 (negative exponents allowed). Co-artinian by
/// construction since the antichain is finite.
class MonomialModule {
 public:
  static MonomialModule minimize(std::span<const LatticePoint> points);
  static MonomialModule minimize(std::initializer_list<LatticePoint> points) {
    return minimize(std::span<const LatticePoint>(points.begin(), points.end()));
  }

  const std::vector<LatticePoint>& generators() const { return gens_; }

  bool contains(LatticePoint p) const;

  friend bool operator==(const MonomialModule&, const MonomialModule&) = default;

 private:
  explicit MonomialModule(std::vector<LatticePoint> antichain) : gens_(std::move(antichain)) {}

  std::vector<LatticePoint> gens_;

  friend MonomialModule module_closure(const MonomialModule&);
  friend MonomialModule partial_sum(const class FactorStream&, std::int64_t, std::int64_t);
};

/// Integral closure of a finite module: shift into N^2, close there, shift
/// back. Contains the input and is idempotent.
MonomialModule module_closure(const MonomialModule& m);

/// Canonical representative modulo monomial translation: the leftmost hull
/// vertex moves to the origin. Returns the representative and the shift that
/// was removed, so `m == representative translated by shift`.
std::pair<MonomialModule, LatticePoint> normalize(const MonomialModule& m);

/// The ideal x^a y^a M cap C[x,y]: generators of the shifted module clamped
/// to the positive quadrant, including the axis points where the shifted
/// staircase crosses out of N^2. Throws EmptyTruncation when the shift is too
/// small for any generator to land in N^2.
MonomialIdeal quadrant_truncation(const MonomialModule& m, std::int64_t a);

struct StreamFactor {
  Slope slope;
  std::int64_t multiplicity = 1;

  friend bool operator==(const StreamFactor&, const StreamFactor&) = default;
};

/// One side of a factor stream: a finite or countable slope-ordered sequence
/// of simple factors. Enumeration order equals slope order, so the order type
/// is at most omega.
class FactorSide {
 public:
  enum class Kind { list, triangular, powers };

  static FactorSide empty() { return from_list({}); }
  static FactorSide from_list(std::vector<StreamFactor> factors);
  /// Factors E_{1/1}, E_{2/1}, E_{3/1}, ... each with multiplicity one;
  /// `count` cuts the family off after that many factors, nullopt keeps it
  /// infinite.
  static FactorSide triangular(std::optional<std::int64_t> count = std::nullopt);
  /// A single factor with the given multiplicity.
  static FactorSide powers(Slope slope, std::int64_t exponent);

  Kind kind() const { return kind_; }
  const std::vector<StreamFactor>& list_items() const { return items_; }
  std::optional<std::int64_t> triangular_count() const { return count_; }

  /// k-th factor from the anchor outward; nullopt past the end of a finite
  /// side.
  std::optional<StreamFactor> at(std::int64_t k) const;

  bool finite() const;
  /// Number of factors when finite.
  std::optional<std::int64_t> size() const;

  friend bool operator==(const FactorSide&, const FactorSide&) = default;

 private:
  FactorSide(Kind kind, std::vector<StreamFactor> items, std::optional<std::int64_t> count)
      : kind_(kind), items_(std::move(items)), count_(count) {}

  Kind kind_;
  std::vector<StreamFactor> items_;       // kind == list
  std::optional<std::int64_t> count_;     // kind == triangular
};

/// Anchored two-sided sequence of simple factors representing a convergent
/// infinite product. Right factors extend right-down from the anchor with
/// strictly increasing slopes; left factors extend left-up with strictly
/// decreasing slopes; every left slope is smaller than every right slope.
class FactorStream {
 public:
  /// Validates the slope ordering invariants.
  static FactorStream make(LatticePoint anchor, FactorSide right, FactorSide left = FactorSide::empty());

  const LatticePoint& anchor() const { return anchor_; }
  const FactorSide& right() const { return right_; }
  const FactorSide& left() const { return left_; }

  friend bool operator==(const FactorStream&, const FactorStream&) = default;

 private:
  FactorStream(LatticePoint anchor, FactorSide right, FactorSide left)
      : anchor_(anchor), right_(std::move(right)), left_(std::move(left)) {}

  LatticePoint anchor_;
  FactorSide right_;
  FactorSide left_;
};

/// The finite Minkowski-sum approximant built from the first n_left factors
/// left of the anchor and the first n_right factors right of it. Finite sides
/// saturate. On the quadrant spanned by its endpoint vertices the result
/// agrees with the limit module.
MonomialModule partial_sum(const FactorStream& s, std::int64_t n_left, std::int64_t n_right);

/// The factors of a finite module, read off its hull: anchor = leftmost hull
/// vertex, right factors = hull edges as (slope, lattice length), empty left
/// side. partial_sum over everything rebuilds module_closure of the input.
FactorStream factor_stream_of_module(const MonomialModule& m);

struct Rect {
  std::int64_t x0 = 0;
  std::int64_t x1 = 0;
  std::int64_t y0 = 0;
  std::int64_t y1 = 0;  // inclusive on all sides

  friend bool operator==(const Rect&, const Rect&) = default;
};

/// Lattice membership of a module sampled over a rectangle. Monotone: any
/// point dominating a member inside the rectangle is a member.
class Window {
 public:
  Window(const MonomialModule& m, Rect rect);

  const Rect& rect() const { return rect_; }
  bool at(std::int64_t x, std::int64_t y) const;

  friend bool operator==(const Window&, const Window&) = default;

 private:
  Rect rect_;
  std::vector<std::uint8_t> bits_;  // row-major, top row (y1) first
};

struct StabilizationReport {
  std::int64_t n_start = 0;
  std::int64_t n_end = 0;
  /// Least n from which every sampled window is bit-identical, when that is
  /// witnessed by at least one later window in the range.
  std::optional<std::int64_t> stable_from;
  /// Window of the last partial sum in the range (the stable window when
  /// stable_from is set).
  Window window;
};

/// Sample Window(partial_sum(s, n, n), rect) for n in [n_start, n_end] with
/// the anchor held fixed, and report where the window sequence stabilizes.
/// Absence of stabilization is an outcome, not an error.
StabilizationReport check_convergence(const FactorStream& s, Rect rect, std::int64_t n_start,
                                      std::int64_t n_end);

/// Projection onto the submonoid generated by the first n slopes of the
/// Calkin-Wilf enumeration: factors at other slopes are dropped.
Factorization truncate_factorization(const Factorization& f, std::int64_t n);

/// Stream version of the truncation map; the result is an ideal class, so
/// its anchor is reset to the origin.
Factorization truncate_factorization(const FactorStream& s, std::int64_t n);

/// Input to admit_module: an explicit finite generator list, a named family
/// (optionally cut to a finite prefix), or an explicit factor stream.
struct ModuleDescription {
  struct Family {
    std::string name;                          // "triangular" | "antidiagonal" | "powers"
    std::optional<std::int64_t> prefix;        // finite cut for generator families
    std::optional<Slope> slope;                // powers: base slope
    std::optional<std::int64_t> exponent;      // powers: multiplicity
  };

  std::variant<std::vector<LatticePoint>, Family, FactorStream> value;
};

/// Admission check: finite antichains and well-formed factor streams pass
/// through; descriptions whose limit boundary would contain an unbounded face
/// not parallel to an axis are rejected with NonAdmissibleModule.
std::variant<MonomialModule, FactorStream> admit_module(const ModuleDescription& description);

/// The running example: minimal generators 1 and x^(1+2+...+r) y^-r for
/// r = 1..prefix.
MonomialModule triangular_prefix_module(std::int64_t prefix);

/// Generators x^i y^-i for |i| <= prefix.
MonomialModule antidiagonal_prefix_module(std::int64_t prefix);

}  // namespace staircase

#endif  // STAIRCASE_MONOMIAL_MODULE_HPP
