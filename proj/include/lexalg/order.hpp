#pragma once

// Countable linear order types built from finite sums of the primitives
// {k, ω, ω*, ζ, η}, together with per-point multiplicities.

#include "lexalg/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace lexalg {

class DigraphAlgebra;

enum class SegmentKind { Finite, OmegaPlus, OmegaMinus, Zeta, Eta };

struct Segment {
	SegmentKind kind = SegmentKind::Finite;
	std::int64_t size = 0; // only meaningful for Finite

	bool operator==(const Segment &) const = default;

	bool well_ordered() const
	{
		return kind == SegmentKind::Finite || kind == SegmentKind::OmegaPlus;
	}
	bool has_first() const { return well_ordered(); }
	bool has_last() const
	{
		return kind == SegmentKind::Finite || kind == SegmentKind::OmegaMinus;
	}
};

/// An order expression in flattened form: a nonempty sequence of primitive
/// segments read left to right. A single segment is a primitive; two or more
/// form an order sum.
class OrderExpr {
  public:
	static OrderExpr finite(std::int64_t k);
	static OrderExpr omega_plus();
	static OrderExpr omega_minus();
	static OrderExpr zeta();
	static OrderExpr eta();
	static OrderExpr sum(const std::vector<OrderExpr> &terms);
	static OrderExpr from_segments(std::vector<Segment> segments);

	const std::vector<Segment> &segments() const { return segments_; }
	std::size_t size() const { return segments_.size(); }
	bool is_sum() const { return segments_.size() > 1; }

	bool operator==(const OrderExpr &) const = default;

  private:
	explicit OrderExpr(std::vector<Segment> s) : segments_(std::move(s)) {}
	std::vector<Segment> segments_;
};

struct ExplicitWeights {
	std::vector<int> values;
	bool operator==(const ExplicitWeights &) const = default;
};
struct ConstantWeight {
	int value = 2;
	bool operator==(const ConstantWeight &) const = default;
};
struct PeriodicWeights {
	std::vector<int> pattern;
	bool operator==(const PeriodicWeights &) const = default;
};

using Multiplicity = std::variant<ExplicitWeights, ConstantWeight, PeriodicWeights>;

/// A point of the order: segment index plus a coordinate in that segment's
/// domain (Finite 1..k, ω 0,1,..., ω* ...,-2,-1, ζ all integers, η rationals
/// in (0,1)).
struct Position {
	std::size_t segment = 0;
	Rational coord;

	bool operator==(const Position &o) const
	{
		return segment == o.segment && cmp(coord, o.coord) == 0;
	}
	std::strong_ordering operator<=>(const Position &o) const
	{
		if (segment != o.segment)
			return segment <=> o.segment;
		int c = cmp(coord, o.coord);
		return c < 0 ? std::strong_ordering::less
		       : c > 0 ? std::strong_ordering::greater
		               : std::strong_ordering::equal;
	}
};

std::string to_string(const Position &p);

/// The pair (Ω, ν). Optionally a triangular digraph algebra may be attached to
/// a segment, replacing the default T_n factor at every position of it.
class WeightedOrder {
  public:
	WeightedOrder(OrderExpr expr, std::vector<Multiplicity> weights);

	const OrderExpr &expr() const { return expr_; }
	const std::vector<Multiplicity> &weights() const { return weights_; }
	const Segment &segment(std::size_t i) const { return expr_.segments().at(i); }
	std::size_t segment_count() const { return expr_.size(); }

	/// Multiplicity n_w at a position.
	int weight_at(const Position &p) const;
	bool contains(const Position &p) const;

	const std::shared_ptr<const DigraphAlgebra> &factor(std::size_t seg) const
	{
		return factors_.at(seg);
	}
	bool has_custom_factors() const;

	/// Attaches a triangular factor algebra to every position of a segment.
	/// The segment must carry a Constant weight equal to the factor's size.
	WeightedOrder with_factor(std::size_t seg,
	                          std::shared_ptr<const DigraphAlgebra> algebra) const;

	/// The sub-order made of segments [begin, end).
	WeightedOrder slice(std::size_t begin, std::size_t end) const;

	bool operator==(const WeightedOrder &o) const
	{
		return expr_ == o.expr_ && weights_ == o.weights_ && factors_ == o.factors_;
	}

  private:
	OrderExpr expr_;
	std::vector<Multiplicity> weights_;
	std::vector<std::shared_ptr<const DigraphAlgebra>> factors_;
};

// ---------------------------------------------------------------------------
// Text form

WeightedOrder parse_order(std::string_view text);
std::string format_order(const WeightedOrder &w);
std::string format_expr(const OrderExpr &e);

// ---------------------------------------------------------------------------
// Order-type questions

OrderExpr normalize(const OrderExpr &expr);
bool has_first(const OrderExpr &expr);

/// Number of leading segments forming the maximal well-ordered initial
/// segment. Every primitive is either entirely well-ordered or has no least
/// element, so the split always falls on a segment boundary.
std::size_t wois_boundary(const OrderExpr &expr);

std::pair<std::optional<OrderExpr>, std::optional<OrderExpr>>
wois_split(const OrderExpr &expr);

/// Splits the weights along with the expression.
std::pair<std::optional<WeightedOrder>, std::optional<WeightedOrder>>
wois_split(const WeightedOrder &w);

bool is_well_ordered(const OrderExpr &expr);

// ---------------------------------------------------------------------------
// Maximal intervals

enum class IntervalTag { Finite, ZPlus, ZMinus, Z, DenseSingletonField };

const char *to_string(IntervalTag tag);

/// Multiplicity data of one maximal interval as a function on a contiguous
/// range of integers: `left` repeats below `body`, `right` repeats above it.
/// Finite intervals use only `body`; ZPlus has no `left`; ZMinus has no
/// `right`; a DenseSingletonField stores its constant as the single body
/// entry.
struct IntervalData {
	IntervalTag tag = IntervalTag::Finite;
	std::vector<int> left;
	std::vector<int> body;
	std::vector<int> right;

	/// Value at integer offset z, where body occupies [0, body.size()).
	int at(std::int64_t z) const;

	bool operator==(const IntervalData &) const = default;
};

/// Reduces periods to primitive length and absorbs body entries that agree
/// with the adjoining periodic tails. Does not change the function up to the
/// shifts allowed for the interval's tag.
IntervalData canonical(IntervalData d);

std::vector<IntervalData> interval_decomposition(const WeightedOrder &w);

/// Equivalence of interval data up to the order automorphisms of the interval
/// (shifts on Z, identity on everything else).
bool equivalent_intervals(const IntervalData &a, const IntervalData &b);

/// Throws Errc::unsupported_class when either order lies outside the
/// decidable class.
bool classify_iso(const WeightedOrder &a, const WeightedOrder &b);

// ---------------------------------------------------------------------------
// Canonical finite subsets

using PositionSet = std::vector<Position>; // sorted, duplicate free
using PositionChain = std::vector<PositionSet>;

/// η coordinates present at a 1-based stage, sorted: stage 1 is {1/2}; every
/// later stage adds a new minimum min/2 and then the next dyadic of (0,1) in
/// level order (1/2, 1/4, 3/4, 1/8, ...) not yet present.
std::vector<Rational> eta_points(std::size_t stage);

PositionChain canonical_chain(const WeightedOrder &w, std::size_t depth);

/// True when some point of Ω below p is missing from f.
bool has_predecessor_outside(const OrderExpr &expr, const PositionSet &f,
                             const Position &p);

/// Every p in chain[k] with predecessors outside chain[k] gains one in
/// chain[k+1].
bool predecessor_fair(const OrderExpr &expr, const PositionChain &chain);

} // namespace lexalg
