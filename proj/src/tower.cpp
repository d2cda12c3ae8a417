#include "lexalg/tower.hpp"

#include "lexalg/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace lexalg {

std::uint64_t budget_from_env(std::uint64_t fallback)
{
	const char *env = std::getenv("LEXALG_BUDGET");
	if (!env || !*env)
		return fallback;
	char *end = nullptr;
	const unsigned long long v = std::strtoull(env, &end, 10);
	if (*end != '\0' || v == 0)
		throw Error(Errc::precondition,
		            std::string("LEXALG_BUDGET must be a positive integer, got '") +
		                env + "'");
	return v;
}

std::strong_ordering lex_compare(const MultiIndex &i, const MultiIndex &j)
{
	if (i.size() != j.size())
		throw Error(Errc::precondition, "multi-indices of different lengths");
	for (std::size_t p = 0; p < i.size(); ++p)
		if (i[p] != j[p])
			return i[p] <=> j[p];
	return std::strong_ordering::equal;
}

std::size_t Stage::slot_of(const Position &p) const
{
	auto it = std::lower_bound(positions_.begin(), positions_.end(), p);
	if (it == positions_.end() || !(*it == p))
		return positions_.size();
	return static_cast<std::size_t>(it - positions_.begin());
}

MultiIndex Stage::multi_index(std::size_t vertex) const
{
	if (vertex >= size())
		throw Error(Errc::precondition, "vertex outside the stage");
	MultiIndex out(mults_.size());
	for (std::size_t s = 0; s < mults_.size(); ++s)
		out[s] = digit(vertex, s) + 1;
	return out;
}

std::size_t Stage::vertex(const MultiIndex &idx) const
{
	if (idx.size() != mults_.size())
		throw Error(Errc::precondition, "multi-index length differs from stage");
	std::size_t v = 0;
	for (std::size_t s = 0; s < idx.size(); ++s) {
		if (idx[s] < 1 || idx[s] > mults_[s])
			throw Error(Errc::precondition, "multi-index entry out of range");
		v += static_cast<std::size_t>(idx[s] - 1) * strides_[s];
	}
	return v;
}

std::uint64_t stage_size(const WeightedOrder &w, const PositionSet &f,
                         std::uint64_t budget)
{
	std::uint64_t n = 1;
	bool overflow = false;
	for (const auto &p : f) {
		const auto m = static_cast<std::uint64_t>(w.weight_at(p));
		if (n > std::numeric_limits<std::uint64_t>::max() / m)
			overflow = true, n = std::numeric_limits<std::uint64_t>::max();
		else
			n *= m;
	}
	if (overflow || n > budget)
		throw BudgetError(n, budget);
	return n;
}

Stage stage_algebra(const WeightedOrder &w, PositionSet f, std::uint64_t budget)
{
	if (f.empty())
		throw Error(Errc::precondition, "stage needs at least one position");
	std::sort(f.begin(), f.end());
	f.erase(std::unique(f.begin(), f.end()), f.end());
	for (const auto &p : f)
		if (!w.contains(p))
			throw Error(Errc::invalid_position,
			            "position " + to_string(p) + " is not a point of the order");
	const auto n = static_cast<std::size_t>(stage_size(w, f, budget));

	Stage st(w);
	st.positions_ = std::move(f);
	const std::size_t k = st.positions_.size();
	st.mults_.resize(k);
	st.strides_.resize(k);
	st.factors_.resize(k);
	std::vector<AlgebraPtr> t_cache;
	for (std::size_t s = 0; s < k; ++s) {
		const Position &p = st.positions_[s];
		st.mults_[s] = w.weight_at(p);
		if (auto fac = w.factor(p.segment)) {
			st.factors_[s] = fac;
		} else {
			const auto m = static_cast<std::size_t>(st.mults_[s]);
			if (t_cache.size() <= m)
				t_cache.resize(m + 1);
			if (!t_cache[m])
				t_cache[m] = std::make_shared<const DigraphAlgebra>(triangular_algebra(m));
			st.factors_[s] = t_cache[m];
		}
	}
	std::size_t stride = 1;
	for (std::size_t s = k; s-- > 0;) {
		st.strides_[s] = stride;
		stride *= static_cast<std::size_t>(st.mults_[s]);
	}

	// Row u relates to every v that agrees with u before some slot s and takes
	// a strict successor of u's entry at s (anything afterwards): a contiguous
	// block of vertices per (s, successor).
	const std::size_t words = (n + 63) / 64;
	std::vector<std::uint64_t> rows(n * words, 0);
	auto set_range = [&](std::size_t u, std::size_t lo, std::size_t hi) {
		for (std::size_t v = lo; v < hi; ++v)
			rows[u * words + v / 64] |= std::uint64_t{1} << (v % 64);
	};
	for (std::size_t u = 0; u < n; ++u) {
		set_range(u, u, u + 1);
		for (std::size_t s = 0; s < k; ++s) {
			const std::size_t width = st.strides_[s];
			const std::size_t block = width * static_cast<std::size_t>(st.mults_[s]);
			const std::size_t base = (u / block) * block;
			const auto d = static_cast<std::size_t>(st.digit(u, s));
			const auto &fac = *st.factors_[s];
			for (std::size_t e = 0; e < fac.size(); ++e)
				if (e != d && fac.contains(d, e))
					set_range(u, base + e * width, base + (e + 1) * width);
		}
	}
	std::vector<MultiIndex> labels(n);
	for (std::size_t v = 0; v < n; ++v) {
		labels[v].resize(k);
		for (std::size_t s = 0; s < k; ++s)
			labels[v][s] = st.digit(v, s) + 1;
	}
	st.algebra_ = std::make_shared<const DigraphAlgebra>(
	    DigraphAlgebra::from_rows(n, std::move(rows), std::move(labels)));
	return st;
}

namespace {

struct EmbedPlan {
	std::vector<std::size_t> slot_map; // from-slot -> to-slot
	std::vector<std::size_t> offsets;  // contributions of the new positions
};

EmbedPlan plan_embedding(const Stage &from, const Stage &to)
{
	if (!(from.order() == to.order()))
		throw Error(Errc::precondition, "stages belong to different orders");
	EmbedPlan plan;
	std::vector<bool> old_slot(to.positions().size(), false);
	for (const auto &p : from.positions()) {
		const std::size_t s = to.slot_of(p);
		if (s == to.positions().size())
			throw Error(Errc::precondition,
			            "source positions are not a subset of the target's");
		plan.slot_map.push_back(s);
		old_slot[s] = true;
	}
	plan.offsets = {0};
	for (std::size_t s = 0; s < old_slot.size(); ++s) {
		if (old_slot[s])
			continue;
		std::vector<std::size_t> next;
		next.reserve(plan.offsets.size() * static_cast<std::size_t>(to.mults()[s]));
		for (auto off : plan.offsets)
			for (int d = 0; d < to.mults()[s]; ++d)
				next.push_back(off + static_cast<std::size_t>(d) * to.stride(s));
		plan.offsets = std::move(next);
	}
	return plan;
}

std::size_t lift_base(const Stage &from, const Stage &to, const EmbedPlan &plan,
                      std::size_t v)
{
	std::size_t out = 0;
	for (std::size_t s = 0; s < plan.slot_map.size(); ++s)
		out += static_cast<std::size_t>(from.digit(v, s)) * to.stride(plan.slot_map[s]);
	return out;
}

void embed_into(const Stage &from, const Stage &to, const EmbedPlan &plan,
                MatrixUnit e, const Rational &c, Element &out)
{
	const std::size_t r = lift_base(from, to, plan, e.row);
	const std::size_t k = lift_base(from, to, plan, e.col);
	for (auto off : plan.offsets)
		out.add({r + off, k + off}, c);
}

} // namespace

Element embed(const Stage &from, const Stage &to, const Element &x)
{
	if (x.home() != from.algebra() && !(*x.home() == *from.algebra()))
		throw Error(Errc::home_mismatch, "element is not in the source stage algebra");
	const auto plan = plan_embedding(from, to);
	Element out(to.algebra());
	for (const auto &[e, c] : x.terms())
		embed_into(from, to, plan, e, c, out);
	return out;
}

Element embed(const Stage &from, const Stage &to, MatrixUnit e)
{
	return embed(from, to, Element::unit(from.algebra(), e));
}

std::vector<std::size_t> lifts(const Stage &from, const Stage &to, std::size_t vertex)
{
	if (vertex >= from.size())
		throw Error(Errc::precondition, "vertex outside the source stage");
	const auto plan = plan_embedding(from, to);
	const std::size_t base = lift_base(from, to, plan, vertex);
	std::vector<std::size_t> out;
	out.reserve(plan.offsets.size());
	for (auto off : plan.offsets)
		out.push_back(base + off);
	std::sort(out.begin(), out.end());
	return out;
}

StageChain build_chain(const WeightedOrder &w, std::size_t depth, std::uint64_t budget)
{
	const auto sets = canonical_chain(w, depth);
	// Check every stage's size before materializing any of them.
	for (const auto &f : sets)
		stage_size(w, f, budget);
	StageChain chain;
	for (const auto &f : sets)
		chain.stages.push_back(stage_algebra(w, f, budget));
	return chain;
}

} // namespace lexalg
