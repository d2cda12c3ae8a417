#pragma once

// Stage algebras T_{n_F} over finite position sets, the connecting
// embeddings between them, and canonical stage chains.

#include "lexalg/digraph.hpp"
#include "lexalg/order.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace lexalg {

inline constexpr std::uint64_t default_budget = 4096;

/// Budget from LEXALG_BUDGET when set and valid, else `fallback`.
std::uint64_t budget_from_env(std::uint64_t fallback = default_budget);

/// Dictionary comparison of two multi-indices of equal length.
std::strong_ordering lex_compare(const MultiIndex &i, const MultiIndex &j);

/// The finite stage for a position set F: vertices are multi-indices over F
/// (entries 1-based), flattened row-major with the least position most
/// significant.
class Stage {
  public:
	const WeightedOrder &order() const { return order_; }
	const PositionSet &positions() const { return positions_; }
	const std::vector<int> &mults() const { return mults_; }
	const AlgebraPtr &algebra() const { return algebra_; }
	const AlgebraPtr &factor(std::size_t slot) const { return factors_.at(slot); }

	/// n_F.
	std::size_t size() const { return algebra_->size(); }

	/// Index of p in positions(), or positions().size() when absent.
	std::size_t slot_of(const Position &p) const;
	std::size_t stride(std::size_t slot) const { return strides_[slot]; }

	MultiIndex multi_index(std::size_t vertex) const;
	std::size_t vertex(const MultiIndex &idx) const;
	/// 0-based entry of `vertex` at a slot.
	int digit(std::size_t vertex, std::size_t slot) const
	{
		return static_cast<int>((vertex / strides_[slot]) %
		                        static_cast<std::size_t>(mults_[slot]));
	}

	friend Stage stage_algebra(const WeightedOrder &w, PositionSet f,
	                           std::uint64_t budget);

  private:
	Stage(WeightedOrder w) : order_(std::move(w)) {}

	WeightedOrder order_;
	PositionSet positions_;
	std::vector<int> mults_;
	std::vector<std::size_t> strides_;
	std::vector<AlgebraPtr> factors_;
	AlgebraPtr algebra_;
};

/// n_F for a position set; throws BudgetError when above `budget`.
std::uint64_t stage_size(const WeightedOrder &w, const PositionSet &f,
                         std::uint64_t budget = default_budget);

Stage stage_algebra(const WeightedOrder &w, PositionSet f,
                    std::uint64_t budget = default_budget);

/// φ_{F,G}: each e_{I,J} goes to the sum over assignments S of the new
/// positions of e_{I∪S, J∪S}.
Element embed(const Stage &from, const Stage &to, const Element &x);
Element embed(const Stage &from, const Stage &to, MatrixUnit e);

/// Vertices of `to` restricting to `vertex` on the positions of `from`,
/// ascending.
std::vector<std::size_t> lifts(const Stage &from, const Stage &to, std::size_t vertex);

struct StageChain {
	std::vector<Stage> stages;

	std::size_t size() const { return stages.size(); }
	const Stage &operator[](std::size_t k) const { return stages.at(k); }
};

StageChain build_chain(const WeightedOrder &w, std::size_t depth,
                       std::uint64_t budget = default_budget);

} // namespace lexalg
