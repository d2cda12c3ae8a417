#include "lexalg/limit.hpp"

#include "lexalg/error.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace lexalg {

namespace {

void require_unit(const Stage &f, MatrixUnit e)
{
	if (e.row >= f.size() || e.col >= f.size() || !f.algebra()->contains(e))
		throw Error(Errc::precondition, "matrix unit is not in the stage algebra");
}

std::size_t first_difference_slot(const Stage &f, MatrixUnit e)
{
	for (std::size_t s = 0; s < f.positions().size(); ++s)
		if (f.digit(e.row, s) != f.digit(e.col, s))
			return s;
	return f.positions().size();
}

} // namespace

std::size_t head_slots(const Stage &f)
{
	const std::size_t boundary = wois_boundary(f.order().expr());
	return static_cast<std::size_t>(
	    std::count_if(f.positions().begin(), f.positions().end(),
	                  [&](const Position &p) { return p.segment < boundary; }));
}

std::pair<std::size_t, std::size_t> stage_split(const Stage &f)
{
	const std::size_t h = head_slots(f);
	std::size_t n1 = 1, n2 = 1;
	for (std::size_t s = 0; s < f.mults().size(); ++s)
		(s < h ? n1 : n2) *= static_cast<std::size_t>(f.mults()[s]);
	return {n1, n2};
}

RadicalVerdict limit_radical_member(const Stage &f, MatrixUnit e)
{
	require_unit(f, e);
	const std::size_t h = head_slots(f);
	const std::size_t s = first_difference_slot(f, e);
	RadicalVerdict v;
	if (s < f.positions().size())
		v.first_difference = f.positions()[s];
	v.member = s < h;
	if (!v.member) {
		const auto row = f.multi_index(e.row);
		const auto col = f.multi_index(e.col);
		v.head.assign(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(h));
		v.row_tail.assign(row.begin() + static_cast<std::ptrdiff_t>(h), row.end());
		v.col_tail.assign(col.begin() + static_cast<std::ptrdiff_t>(h), col.end());
	}
	return v;
}

bool in_limit_radical(const Stage &f, const Element &x)
{
	if (x.home() != f.algebra() && !(*x.home() == *f.algebra()))
		throw Error(Errc::home_mismatch, "element is not in the stage algebra");
	return std::all_of(x.terms().begin(), x.terms().end(), [&](const auto &t) {
		return limit_radical_member(f, t.first).member;
	});
}

std::size_t limit_radical_dimension(const Stage &f)
{
	// With Ω₁ slots most significant, vertex = head * n2 + tail; members are
	// exactly the edges whose heads differ.
	const auto n2 = stage_split(f).second;
	const auto &a = *f.algebra();
	std::size_t count = 0;
	for (std::size_t u = 0; u < a.size(); ++u) {
		const auto *row = a.row_bits(u);
		for (std::size_t w = 0; w < a.words_per_row(); ++w)
			count += static_cast<std::size_t>(std::popcount(row[w]));
		const std::size_t lo = (u / n2) * n2;
		for (std::size_t v = lo; v < lo + n2; ++v)
			count -= a.contains(u, v) ? 1 : 0;
	}
	return count;
}

bool is_semisimple(const WeightedOrder &w) { return !has_first(w.expr()); }

bool has_elementary_radical_decomposition(const WeightedOrder &w)
{
	return is_well_ordered(w.expr());
}

// ---------------------------------------------------------------------------
// Links

bool is_link(const Stage &from, const Stage &to, MatrixUnit e, MatrixUnit f)
{
	require_unit(from, e);
	if (f.row >= to.size() || f.col >= to.size() || !to.algebra()->contains(f))
		return false;
	for (std::size_t s = 0; s < from.positions().size(); ++s) {
		const std::size_t t = to.slot_of(from.positions()[s]);
		if (t == to.positions().size())
			throw Error(Errc::precondition, "stages are not nested");
		if (to.digit(f.row, t) != from.digit(e.col, s) ||
		    to.digit(f.col, t) != from.digit(e.row, s))
			return false;
	}
	return true;
}

namespace {

// One new position w below the first difference: K takes the source of the
// first strict edge of w's factor, L its target, every other new position
// takes entry 1 on both sides.
std::optional<MatrixUnit> canonical_link(const Stage &from, const Stage &to,
                                         MatrixUnit e)
{
	const std::size_t d = first_difference_slot(from, e);
	const Position &diff = from.positions()[d];
	std::size_t w = to.positions().size();
	for (std::size_t t = 0; t < to.positions().size(); ++t) {
		const Position &p = to.positions()[t];
		if (!(p < diff))
			break;
		if (from.slot_of(p) == from.positions().size()) {
			w = t;
			break;
		}
	}
	if (w == to.positions().size())
		return std::nullopt;
	const auto &fac = *to.factor(w);
	std::optional<MatrixUnit> edge;
	for (std::size_t a = 0; a < fac.size() && !edge; ++a)
		for (std::size_t b = 0; b < fac.size(); ++b)
			if (a != b && fac.contains(a, b)) {
				edge = MatrixUnit{a, b};
				break;
			}
	if (!edge)
		return std::nullopt;
	const auto k_lifts = lifts(from, to, e.col);
	const auto l_lifts = lifts(from, to, e.row);
	// The smallest lift has entry 1 at every new position.
	const std::size_t k = k_lifts.front() + edge->row * to.stride(w);
	const std::size_t l = l_lifts.front() + edge->col * to.stride(w);
	return MatrixUnit{k, l};
}

} // namespace

std::optional<LinkRecord> find_link(const StageChain &chain, std::size_t start,
                                    MatrixUnit e, std::size_t horizon, LinkSearch mode)
{
	if (start >= chain.size() || horizon >= chain.size() - start)
		throw Error(Errc::precondition, "link search runs past the end of the chain");
	const Stage &from = chain[start];
	require_unit(from, e);
	if (e.is_diagonal())
		return LinkRecord{start, e, from.multi_index(e.col), from.multi_index(e.row), true};

	for (std::size_t g = start; g <= start + horizon; ++g) {
		const Stage &to = chain[g];
		const auto canon = canonical_link(from, to, e);
		auto record = [&](MatrixUnit f) {
			return LinkRecord{g, f, to.multi_index(f.row), to.multi_index(f.col),
			                  canon && *canon == f};
		};
		if (mode == LinkSearch::canonical_first && canon) {
			if (!is_link(from, to, e, *canon))
				throw Error(Errc::invariant, "canonical link construction failed");
			return record(*canon);
		}
		const auto k_lifts = lifts(from, to, e.col);
		const auto l_lifts = lifts(from, to, e.row);
		for (auto k : k_lifts)
			for (auto l : l_lifts)
				if (to.algebra()->contains(k, l))
					return record({k, l});
	}
	return std::nullopt;
}

// ---------------------------------------------------------------------------
// Nilpotency

Element first_factor_image(const Stage &f, const std::map<MatrixUnit, Rational> &terms)
{
	const auto &fac = *f.factor(0);
	const std::size_t stride = f.stride(0);
	Element out(f.algebra());
	for (const auto &[e, c] : terms) {
		if (e.is_diagonal() || e.row >= fac.size() || e.col >= fac.size() ||
		    !fac.contains(e))
			throw Error(Errc::precondition,
			            "term is not a strict unit of the first factor");
		for (std::size_t r = 0; r < stride; ++r)
			out.add({e.row * stride + r, e.col * stride + r}, c);
	}
	return out;
}

std::optional<std::map<MatrixUnit, Rational>> first_factor_preimage(const Stage &f,
                                                                    const Element &a)
{
	if (a.home() != f.algebra() && !(*a.home() == *f.algebra()))
		return std::nullopt;
	if (a.is_zero())
		return std::nullopt;
	const std::size_t stride = f.stride(0);
	std::map<MatrixUnit, Rational> terms;
	for (const auto &[e, c] : a.terms()) {
		const MatrixUnit u{e.row / stride, e.col / stride};
		if (e.row % stride != e.col % stride || u.is_diagonal())
			return std::nullopt;
		terms.emplace(u, c);
	}
	try {
		if (first_factor_image(f, terms) == a)
			return terms;
	} catch (const Error &) {
	}
	return std::nullopt;
}

Element random_element(const Stage &f, std::uint64_t seed)
{
	std::mt19937_64 rng(seed);
	std::uniform_int_distribution<int> coeff(-2, 2);
	Element b(f.algebra());
	for (auto e : f.algebra()->edges())
		b.add(e, coeff(rng));
	return b;
}

bool nilpotency_check(const Stage &f, const Element &a, std::size_t trials,
                      std::uint64_t seed)
{
	if (!first_factor_preimage(f, a))
		throw Error(Errc::precondition,
		            "element must be a nonzero strict element of the first factor");
	const auto p = static_cast<unsigned>(f.mults()[0]);
	for (std::size_t t = 0; t < trials; ++t) {
		const Element b = random_element(f, seed + t);
		if (!power(a * b, p).is_zero())
			return false;
	}
	return true;
}

std::optional<Element> nilpotency_witness(const Stage &f, const Element &a,
                                          unsigned exponent, std::size_t trials,
                                          std::uint64_t seed)
{
	if (!first_factor_preimage(f, a))
		throw Error(Errc::precondition,
		            "element must be a nonzero strict element of the first factor");
	for (std::size_t t = 0; t < trials; ++t) {
		Element b = random_element(f, seed + t);
		if (!power(a * b, exponent).is_zero())
			return b;
	}
	return std::nullopt;
}

// ---------------------------------------------------------------------------
// Quotient

QuotientReport quotient_structure(const Stage &f)
{
	QuotientReport r;
	std::tie(r.n1, r.n2) = stage_split(f);
	r.stage_dim = f.algebra()->dimension();
	r.radical_dim = limit_radical_dimension(f);
	const auto &a = *f.algebra();
	for (std::size_t u = 0; u < a.size(); ++u) {
		const std::size_t lo = (u / r.n2) * r.n2;
		for (std::size_t v = lo; v < lo + r.n2; ++v)
			r.quotient_dim += a.contains(u, v) ? 1 : 0;
	}
	if (r.radical_dim + r.quotient_dim != r.stage_dim)
		throw Error(Errc::invariant, "radical and quotient parts do not add up");
	r.stage_radical_dim = radical_dimension(a);
	r.stage_radical_strictly_larger = r.stage_radical_dim > r.radical_dim;
	return r;
}

std::vector<MatrixUnit> limit_radical_units(const Stage &f)
{
	const auto n2 = stage_split(f).second;
	std::vector<MatrixUnit> out;
	for (auto e : f.algebra()->edges())
		if (e.row / n2 != e.col / n2)
			out.push_back(e);
	return out;
}

std::vector<MatrixUnit> quotient_units(const Stage &f)
{
	const auto n2 = stage_split(f).second;
	std::vector<MatrixUnit> out;
	for (auto e : f.algebra()->edges())
		if (e.row / n2 == e.col / n2)
			out.push_back(e);
	return out;
}

} // namespace lexalg
