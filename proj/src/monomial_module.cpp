#include "staircase/monomial_module.hpp"

#include <algorithm>
#include <set>

#include "staircase/calkin_wilf.hpp"

namespace staircase {

MonomialModule MonomialModule::minimize(std::span<const LatticePoint> points) {
  if (points.empty()) throw EmptyGeneratorSet("a monomial module needs at least one generator");
  return MonomialModule(minimal_points(points));
}

bool MonomialModule::contains(LatticePoint p) const {
  auto it = std::upper_bound(gens_.begin(), gens_.end(), p.x,
                             [](std::int64_t x, const LatticePoint& g) { return x < g.x; });
  if (it == gens_.begin()) return false;
  return std::prev(it)->y <= p.y;
}

MonomialModule module_closure(const MonomialModule& m) {
  std::int64_t min_x = m.gens_.front().x;
  std::int64_t min_y = m.gens_.front().y;
  for (const LatticePoint& g : m.gens_) {
    min_x = std::min(min_x, g.x);
    min_y = std::min(min_y, g.y);
  }
  const LatticePoint shift{min_x, min_y};
  std::vector<LatticePoint> shifted;
  shifted.reserve(m.gens_.size());
  for (const LatticePoint& g : m.gens_) shifted.push_back(g - shift);
  const MonomialIdeal closed = integral_closure(MonomialIdeal::minimize(shifted));
  std::vector<LatticePoint> back;
  back.reserve(closed.generators().size());
  for (const LatticePoint& g : closed.generators()) back.push_back(g + shift);
  return MonomialModule(std::move(back));
}

std::pair<MonomialModule, LatticePoint> normalize(const MonomialModule& m) {
  // The antichain's first generator is the leftmost hull vertex.
  const LatticePoint shift = m.generators().front();
  std::vector<LatticePoint> moved;
  moved.reserve(m.generators().size());
  for (const LatticePoint& g : m.generators()) moved.push_back(g - shift);
  return {MonomialModule::minimize(moved), shift};
}

MonomialIdeal quadrant_truncation(const MonomialModule& m, std::int64_t a) {
  if (a < 0) throw Error("truncation shift must be nonnegative");
  const LatticePoint shift{a, a};
  bool any_inside = false;
  std::vector<LatticePoint> clamped;
  clamped.reserve(m.generators().size());
  for (const LatticePoint& g : m.generators()) {
    const LatticePoint moved = g + shift;
    if (moved.x >= 0 && moved.y >= 0) any_inside = true;
    clamped.push_back(LatticePoint{std::max<std::int64_t>(moved.x, 0),
                                   std::max<std::int64_t>(moved.y, 0)});
  }
  if (!any_inside) {
    throw EmptyTruncation("no generator of x^" + std::to_string(a) + "y^" + std::to_string(a) +
                          "M lies in the positive quadrant");
  }
  return MonomialIdeal::minimize(clamped);
}

FactorSide FactorSide::from_list(std::vector<StreamFactor> factors) {
  for (const StreamFactor& f : factors) {
    if (f.multiplicity < 1) throw DegenerateEdge("stream factor multiplicity must be positive");
    if (Slope::reduced(f.slope.num, f.slope.den) != f.slope) {
      throw DegenerateEdge("stream factor slope " + f.slope.str() + " is not reduced");
    }
  }
  return FactorSide(Kind::list, std::move(factors), std::nullopt);
}

FactorSide FactorSide::triangular(std::optional<std::int64_t> count) {
  if (count && *count < 0) throw DegenerateEdge("triangular family count must be nonnegative");
  return FactorSide(Kind::triangular, {}, count);
}

FactorSide FactorSide::powers(Slope slope, std::int64_t exponent) {
  if (exponent < 1) throw DegenerateEdge("stream factor multiplicity must be positive");
  return FactorSide(Kind::powers, {StreamFactor{Slope::reduced(slope.num, slope.den), exponent}},
                    std::nullopt);
}

std::optional<StreamFactor> FactorSide::at(std::int64_t k) const {
  if (k < 0) return std::nullopt;
  if (kind_ == Kind::triangular) {
    if (count_ && k >= *count_) return std::nullopt;
    return StreamFactor{Slope{checked_add(k, 1), 1}, 1};
  }
  if (k >= static_cast<std::int64_t>(items_.size())) return std::nullopt;
  return items_[static_cast<std::size_t>(k)];
}

bool FactorSide::finite() const { return kind_ != Kind::triangular || count_.has_value(); }

std::optional<std::int64_t> FactorSide::size() const {
  if (kind_ == Kind::triangular) return count_;
  return static_cast<std::int64_t>(items_.size());
}

namespace {

void validate_side(const FactorSide& side, bool increasing, const char* name) {
  if (side.kind() == FactorSide::Kind::triangular) {
    const auto n = side.triangular_count();
    if (!increasing && (!n || *n > 1)) {
      throw NonAdmissibleModule(std::string("the triangular family ascends in slope and cannot "
                                            "form the ") +
                                name + " side of a stream");
    }
    return;
  }
  const auto& items = side.list_items();
  for (std::size_t i = 1; i < items.size(); ++i) {
    const bool ordered = increasing ? items[i - 1].slope < items[i].slope
                                    : items[i].slope < items[i - 1].slope;
    if (!ordered) {
      throw NonAdmissibleModule(std::string(name) + " stream factors must have strictly " +
                                (increasing ? "increasing" : "decreasing") + " slopes");
    }
  }
}

}  // namespace

FactorStream FactorStream::make(LatticePoint anchor, FactorSide right, FactorSide left) {
  validate_side(right, /*increasing=*/true, "right");
  validate_side(left, /*increasing=*/false, "left");
  const auto first_right = right.at(0);
  const auto first_left = left.at(0);
  if (first_right && first_left && !(first_left->slope < first_right->slope)) {
    throw NonAdmissibleModule("every left slope must be smaller than every right slope");
  }
  return FactorStream(anchor, std::move(right), std::move(left));
}

MonomialModule partial_sum(const FactorStream& s, std::int64_t n_left, std::int64_t n_right) {
  if (n_left < 0 || n_right < 0) throw Error("partial sum depths must be nonnegative");

  std::vector<StreamFactor> left_selected;
  for (std::int64_t k = 0; k < n_left; ++k) {
    const auto f = s.left().at(k);
    if (!f) break;  // finite side saturates
    left_selected.push_back(*f);
  }
  std::vector<StreamFactor> right_selected;
  for (std::int64_t k = 0; k < n_right; ++k) {
    const auto f = s.right().at(k);
    if (!f) break;
    right_selected.push_back(*f);
  }

  // Walk the selected left factors back from the anchor to find the start
  // vertex, then lay all edges out left to right.
  LatticePoint start = s.anchor();
  for (const StreamFactor& f : left_selected) {
    start.x = checked_sub(start.x, checked_mul(f.multiplicity, f.slope.num));
    start.y = checked_add(start.y, checked_mul(f.multiplicity, f.slope.den));
  }
  std::vector<PathEdge> edges;
  edges.reserve(left_selected.size() + right_selected.size());
  for (auto it = left_selected.rbegin(); it != left_selected.rend(); ++it) {
    edges.push_back(PathEdge{PrimitiveStep{it->slope.num, it->slope.den}, it->multiplicity});
  }
  for (const StreamFactor& f : right_selected) {
    edges.push_back(PathEdge{PrimitiveStep{f.slope.num, f.slope.den}, f.multiplicity});
  }
  const BoundaryPath path(start, std::move(edges));
  return MonomialModule(staircase_generators(path));
}

FactorStream factor_stream_of_module(const MonomialModule& m) {
  const BoundaryPath hull = lower_left_hull(m.generators());
  std::vector<StreamFactor> right;
  right.reserve(hull.edges().size());
  for (const PathEdge& e : hull.edges()) {
    right.push_back(StreamFactor{slope_of(e.step), e.count});
  }
  return FactorStream::make(hull.start(), FactorSide::from_list(std::move(right)));
}

Window::Window(const MonomialModule& m, Rect rect) : rect_(rect) {
  if (rect.x0 > rect.x1 || rect.y0 > rect.y1) throw Error("window rectangle is empty");
  const std::int64_t width = checked_add(checked_sub(rect.x1, rect.x0), 1);
  const std::int64_t height = checked_add(checked_sub(rect.y1, rect.y0), 1);
  bits_.reserve(static_cast<std::size_t>(checked_mul(width, height)));
  for (std::int64_t y = rect.y1; y >= rect.y0; --y) {
    for (std::int64_t x = rect.x0; x <= rect.x1; ++x) {
      bits_.push_back(m.contains(LatticePoint{x, y}) ? 1 : 0);
    }
  }
}

bool Window::at(std::int64_t x, std::int64_t y) const {
  if (x < rect_.x0 || x > rect_.x1 || y < rect_.y0 || y > rect_.y1) return false;
  const std::int64_t width = rect_.x1 - rect_.x0 + 1;
  const std::int64_t row = rect_.y1 - y;
  const std::int64_t col = x - rect_.x0;
  return bits_[static_cast<std::size_t>(row * width + col)] != 0;
}

StabilizationReport check_convergence(const FactorStream& s, Rect rect, std::int64_t n_start,
                                      std::int64_t n_end) {
  if (n_start < 1) throw Error("convergence scan must start at n >= 1");
  if (n_start > n_end) throw Error("convergence scan range is empty");

  std::vector<Window> windows;
  windows.reserve(static_cast<std::size_t>(n_end - n_start + 1));
  for (std::int64_t n = n_start; n <= n_end; ++n) {
    windows.emplace_back(partial_sum(s, n, n), rect);
  }
  // Least n whose window equals everything after it.
  std::int64_t stable = n_end;
  for (std::int64_t n = n_end; n-- > n_start;) {
    if (windows[static_cast<std::size_t>(n - n_start)] ==
        windows[static_cast<std::size_t>(stable - n_start)]) {
      stable = n;
    } else {
      break;
    }
  }
  StabilizationReport report{n_start, n_end, std::nullopt, windows.back()};
  if (stable < n_end) report.stable_from = stable;
  return report;
}

namespace {

Factorization truncate_map(LatticePoint anchor, const std::map<Slope, std::int64_t>& factors,
                           std::int64_t n) {
  const std::vector<Slope> prefix = calkin_wilf_prefix(n);
  const std::set<Slope> kept(prefix.begin(), prefix.end());
  Factorization out;
  out.anchor = anchor;
  for (const auto& [slope, count] : factors) {
    if (kept.contains(slope)) out.factors.emplace(slope, count);
  }
  return out;
}

}  // namespace

Factorization truncate_factorization(const Factorization& f, std::int64_t n) {
  if (n < 0) throw Error("truncation index must be nonnegative");
  return truncate_map(f.anchor, f.factors, n);
}

Factorization truncate_factorization(const FactorStream& s, std::int64_t n) {
  if (n < 0) throw Error("truncation index must be nonnegative");
  const std::vector<Slope> prefix = calkin_wilf_prefix(n);
  std::map<Slope, std::int64_t> collected;
  if (!prefix.empty()) {
    const Slope max_slope = *std::max_element(prefix.begin(), prefix.end());
    const Slope min_slope = *std::min_element(prefix.begin(), prefix.end());
    // Right slopes increase, left slopes decrease: each scan may stop at the
    // first slope outside the enumerated prefix range.
    for (std::int64_t k = 0;; ++k) {
      const auto f = s.right().at(k);
      if (!f || max_slope < f->slope) break;
      collected.emplace(f->slope, f->multiplicity);
    }
    for (std::int64_t k = 0;; ++k) {
      const auto f = s.left().at(k);
      if (!f || f->slope < min_slope) break;
      collected.emplace(f->slope, f->multiplicity);
    }
  }
  // The truncation lands in a monoid of ideal classes; anchor the class
  // representative at the origin.
  return truncate_map(LatticePoint{0, 0}, collected, n);
}

MonomialModule triangular_prefix_module(std::int64_t prefix) {
  if (prefix < 0) throw Error("family prefix must be nonnegative");
  std::vector<LatticePoint> gens{LatticePoint{0, 0}};
  std::int64_t run_sum = 0;
  for (std::int64_t r = 1; r <= prefix; ++r) {
    run_sum = checked_add(run_sum, r);
    gens.push_back(LatticePoint{run_sum, checked_neg(r)});
  }
  return MonomialModule::minimize(gens);
}

MonomialModule antidiagonal_prefix_module(std::int64_t prefix) {
  if (prefix < 0) throw Error("family prefix must be nonnegative");
  std::vector<LatticePoint> gens;
  gens.reserve(static_cast<std::size_t>(2 * prefix + 1));
  for (std::int64_t i = -prefix; i <= prefix; ++i) {
    gens.push_back(LatticePoint{i, checked_neg(i)});
  }
  return MonomialModule::minimize(gens);
}

std::variant<MonomialModule, FactorStream> admit_module(const ModuleDescription& description) {
  if (const auto* points = std::get_if<std::vector<LatticePoint>>(&description.value)) {
    return MonomialModule::minimize(*points);
  }
  if (const auto* stream = std::get_if<FactorStream>(&description.value)) {
    // Re-validate so hand-built streams go through the same checks.
    return FactorStream::make(stream->anchor(), stream->right(), stream->left());
  }
  const auto& family = std::get<ModuleDescription::Family>(description.value);
  if (family.name == "triangular") {
    if (family.prefix) return triangular_prefix_module(*family.prefix);
    return FactorStream::make(LatticePoint{0, 0}, FactorSide::triangular());
  }
  if (family.name == "antidiagonal") {
    if (family.prefix) return antidiagonal_prefix_module(*family.prefix);
    throw NonAdmissibleModule(
        "the antidiagonal family x^i y^-i (all i) has an unbounded boundary face of direction "
        "(1,-1), which is not parallel to an axis");
  }
  if (family.name == "powers") {
    if (!family.slope || !family.exponent) {
      throw NonAdmissibleModule("the powers family needs a slope and an exponent");
    }
    return FactorStream::make(LatticePoint{0, 0},
                              FactorSide::powers(*family.slope, *family.exponent));
  }
  throw NonAdmissibleModule("unknown module family '" + family.name + "'");
}

}  // namespace staircase
