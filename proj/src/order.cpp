#include "lexalg/order.hpp"

#include "lexalg/digraph.hpp"
#include "lexalg/error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace lexalg {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m)
{
	std::int64_t r = a % m;
	return r < 0 ? r + m : r;
}

std::int64_t to_int64(const Rational &q)
{
	if (!is_integer(q) || !q.get_num().fits_slong_p())
		throw Error(Errc::invalid_position, "coordinate " + q.get_str() +
		                                        " is not a machine integer");
	return q.get_num().get_si();
}

std::vector<int> pattern_of(const Multiplicity &m)
{
	if (const auto *c = std::get_if<ConstantWeight>(&m))
		return {c->value};
	if (const auto *p = std::get_if<PeriodicWeights>(&m))
		return p->pattern;
	throw Error(Errc::unsupported_class,
	            "explicit weights on an infinite segment");
}

const char *segment_token(SegmentKind k)
{
	switch (k) {
	case SegmentKind::OmegaPlus: return "w";
	case SegmentKind::OmegaMinus: return "w*";
	case SegmentKind::Zeta: return "z";
	case SegmentKind::Eta: return "q";
	case SegmentKind::Finite: break;
	}
	return "";
}

std::string segment_text(const Segment &s)
{
	if (s.kind == SegmentKind::Finite)
		return std::to_string(s.size);
	return segment_token(s.kind);
}

} // namespace

// ---------------------------------------------------------------------------
// OrderExpr

OrderExpr OrderExpr::finite(std::int64_t k)
{
	if (k < 1)
		throw Error(Errc::invalid_order, "finite segment needs k >= 1");
	return OrderExpr({Segment{SegmentKind::Finite, k}});
}
OrderExpr OrderExpr::omega_plus() { return OrderExpr({Segment{SegmentKind::OmegaPlus, 0}}); }
OrderExpr OrderExpr::omega_minus() { return OrderExpr({Segment{SegmentKind::OmegaMinus, 0}}); }
OrderExpr OrderExpr::zeta() { return OrderExpr({Segment{SegmentKind::Zeta, 0}}); }
OrderExpr OrderExpr::eta() { return OrderExpr({Segment{SegmentKind::Eta, 0}}); }

OrderExpr OrderExpr::sum(const std::vector<OrderExpr> &terms)
{
	std::vector<Segment> flat;
	for (const auto &t : terms)
		flat.insert(flat.end(), t.segments_.begin(), t.segments_.end());
	return from_segments(std::move(flat));
}

OrderExpr OrderExpr::from_segments(std::vector<Segment> segments)
{
	if (segments.empty())
		throw Error(Errc::invalid_order, "empty order expression");
	for (auto &s : segments) {
		if (s.kind == SegmentKind::Finite && s.size < 1)
			throw Error(Errc::invalid_order, "finite segment needs k >= 1");
		if (s.kind != SegmentKind::Finite)
			s.size = 0;
	}
	return OrderExpr(std::move(segments));
}

std::string to_string(const Position &p)
{
	return std::to_string(p.segment) + ":" + p.coord.get_str();
}

// ---------------------------------------------------------------------------
// WeightedOrder

WeightedOrder::WeightedOrder(OrderExpr expr, std::vector<Multiplicity> weights)
    : expr_(std::move(expr)), weights_(std::move(weights))
{
	if (weights_.size() != expr_.size())
		throw Error(Errc::invalid_multiplicity,
		            "expected " + std::to_string(expr_.size()) +
		                " weights, got " + std::to_string(weights_.size()));
	for (std::size_t i = 0; i < weights_.size(); ++i) {
		const Segment &seg = expr_.segments()[i];
		auto &m = weights_[i];
		auto check = [&](const std::vector<int> &vals) {
			if (vals.empty())
				throw Error(Errc::invalid_multiplicity, "empty weight list");
			for (int v : vals)
				if (v < 2)
					throw Error(Errc::invalid_multiplicity,
					            "multiplicity " + std::to_string(v) + " below 2");
		};
		if (auto *c = std::get_if<ConstantWeight>(&m)) {
			check({c->value});
		} else if (auto *e = std::get_if<ExplicitWeights>(&m)) {
			check(e->values);
			if (seg.kind != SegmentKind::Finite)
				throw Error(Errc::invalid_multiplicity,
				            "explicit weights on an infinite segment");
			if (static_cast<std::int64_t>(e->values.size()) != seg.size)
				throw Error(Errc::invalid_multiplicity,
				            "explicit weight count differs from segment size");
			if (e->values.size() == 1)
				m = ConstantWeight{e->values[0]};
		} else if (auto *p = std::get_if<PeriodicWeights>(&m)) {
			check(p->pattern);
			if (seg.kind == SegmentKind::Eta)
				throw Error(Errc::invalid_multiplicity,
				            "periodic weight on an eta segment");
			if (seg.kind == SegmentKind::Finite)
				throw Error(Errc::invalid_multiplicity,
				            "periodic weight on a finite segment");
			if (p->pattern.size() == 1)
				m = ConstantWeight{p->pattern[0]};
		}
	}
	factors_.resize(weights_.size());
}

int WeightedOrder::weight_at(const Position &p) const
{
	if (!contains(p))
		throw Error(Errc::invalid_position, "position " + to_string(p) +
		                                        " is not a point of the order");
	const auto &m = weights_[p.segment];
	if (const auto *c = std::get_if<ConstantWeight>(&m))
		return c->value;
	std::int64_t z = to_int64(p.coord);
	if (const auto *e = std::get_if<ExplicitWeights>(&m))
		return e->values.at(static_cast<std::size_t>(z - 1));
	const auto &pat = std::get<PeriodicWeights>(m).pattern;
	return pat[static_cast<std::size_t>(
	    floor_mod(z, static_cast<std::int64_t>(pat.size())))];
}

bool WeightedOrder::contains(const Position &p) const
{
	if (p.segment >= expr_.size())
		return false;
	const Segment &s = expr_.segments()[p.segment];
	if (s.kind == SegmentKind::Eta)
		return sgn(p.coord) > 0 && cmp(p.coord, 1) < 0;
	if (!is_integer(p.coord) || !p.coord.get_num().fits_slong_p())
		return false;
	std::int64_t z = p.coord.get_num().get_si();
	switch (s.kind) {
	case SegmentKind::Finite: return z >= 1 && z <= s.size;
	case SegmentKind::OmegaPlus: return z >= 0;
	case SegmentKind::OmegaMinus: return z <= -1;
	default: return true;
	}
}

bool WeightedOrder::has_custom_factors() const
{
	return std::any_of(factors_.begin(), factors_.end(),
	                   [](const auto &f) { return f != nullptr; });
}

WeightedOrder
WeightedOrder::with_factor(std::size_t seg,
                           std::shared_ptr<const DigraphAlgebra> algebra) const
{
	if (seg >= expr_.size())
		throw Error(Errc::invalid_order, "no segment " + std::to_string(seg));
	if (!algebra)
		throw Error(Errc::precondition, "null factor algebra");
	if (!algebra->is_triangular())
		throw Error(Errc::not_triangular, "factor algebra must be triangular");
	const auto *c = std::get_if<ConstantWeight>(&weights_[seg]);
	if (!c || static_cast<std::size_t>(c->value) != algebra->size())
		throw Error(Errc::invalid_multiplicity,
		            "factor size must equal the segment's constant weight");
	WeightedOrder out = *this;
	out.factors_[seg] = std::move(algebra);
	return out;
}

WeightedOrder WeightedOrder::slice(std::size_t begin, std::size_t end) const
{
	if (begin >= end || end > expr_.size())
		throw Error(Errc::precondition, "empty or out-of-range slice");
	std::vector<Segment> segs(expr_.segments().begin() + begin,
	                          expr_.segments().begin() + end);
	std::vector<Multiplicity> ws(weights_.begin() + begin, weights_.begin() + end);
	WeightedOrder out(OrderExpr::from_segments(std::move(segs)), std::move(ws));
	std::copy(factors_.begin() + begin, factors_.begin() + end,
	          out.factors_.begin());
	return out;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class Parser {
  public:
	explicit Parser(std::string_view text) : text_(text) {}

	WeightedOrder parse()
	{
		std::vector<Segment> segs;
		std::vector<Multiplicity> weights;
		do {
			primitive(segs, weights);
			skip_ws();
		} while (accept('+'));
		if (pos_ != text_.size())
			throw ParseError(pos_, "unexpected character '" +
			                           std::string(1, text_[pos_]) + "'");
		return WeightedOrder(OrderExpr::from_segments(std::move(segs)),
		                     std::move(weights));
	}

  private:
	void skip_ws()
	{
		while (pos_ < text_.size() &&
		       std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	bool accept(char c)
	{
		skip_ws();
		if (pos_ < text_.size() && text_[pos_] == c) {
			++pos_;
			return true;
		}
		return false;
	}

	void expect(char c)
	{
		if (!accept(c)) {
			if (pos_ >= text_.size())
				throw ParseError(pos_, std::string("expected '") + c +
				                           "' but input ended");
			throw ParseError(pos_, std::string("expected '") + c + "'");
		}
	}

	std::int64_t integer()
	{
		skip_ws();
		std::size_t start = pos_;
		std::int64_t v = 0;
		while (pos_ < text_.size() &&
		       std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
			v = v * 10 + (text_[pos_] - '0');
			if (v > 1'000'000'000)
				throw ParseError(start, "integer too large");
			++pos_;
		}
		if (pos_ == start)
			throw ParseError(pos_, "expected integer");
		return v;
	}

	void primitive(std::vector<Segment> &segs, std::vector<Multiplicity> &weights)
	{
		skip_ws();
		if (pos_ >= text_.size())
			throw ParseError(pos_, "expected order primitive but input ended");
		std::size_t start = pos_;
		Segment seg;
		char c = text_[pos_];
		if (std::isdigit(static_cast<unsigned char>(c))) {
			std::int64_t k = integer();
			if (k < 1)
				throw ParseError(Errc::invalid_order, start,
				                 "finite segment size must be at least 1");
			seg = {SegmentKind::Finite, k};
		} else if (c == 'w') {
			++pos_;
			seg.kind = accept('*') ? SegmentKind::OmegaMinus : SegmentKind::OmegaPlus;
		} else if (c == 'z') {
			++pos_;
			seg.kind = SegmentKind::Zeta;
		} else if (c == 'q') {
			++pos_;
			seg.kind = SegmentKind::Eta;
		} else {
			throw ParseError(pos_, "expected order primitive");
		}

		expect('[');
		std::vector<int> values;
		do {
			skip_ws();
			std::size_t vpos = pos_;
			std::int64_t v = integer();
			if (v < 2)
				throw ParseError(Errc::invalid_multiplicity, vpos,
				                 "multiplicity " + std::to_string(v) + " below 2");
			values.push_back(static_cast<int>(v));
		} while (accept(','));
		expect(']');

		Multiplicity m;
		if (values.size() == 1)
			m = ConstantWeight{values[0]};
		else if (seg.kind == SegmentKind::Finite) {
			if (static_cast<std::int64_t>(values.size()) != seg.size)
				throw ParseError(Errc::invalid_multiplicity, start,
				                 "finite segment of size " + std::to_string(seg.size) +
				                     " has " + std::to_string(values.size()) +
				                     " weights");
			m = ExplicitWeights{std::move(values)};
		} else if (seg.kind == SegmentKind::Eta) {
			throw ParseError(Errc::invalid_multiplicity, start,
			                 "periodic weight on an eta segment");
		} else {
			m = PeriodicWeights{std::move(values)};
		}
		segs.push_back(seg);
		weights.push_back(std::move(m));
	}

	std::string_view text_;
	std::size_t pos_ = 0;
};

std::string weight_text(const Multiplicity &m)
{
	auto join = [](const std::vector<int> &v) {
		std::string s = "[";
		for (std::size_t i = 0; i < v.size(); ++i)
			s += (i ? "," : "") + std::to_string(v[i]);
		return s + "]";
	};
	if (const auto *c = std::get_if<ConstantWeight>(&m))
		return join({c->value});
	if (const auto *e = std::get_if<ExplicitWeights>(&m))
		return join(e->values);
	return join(std::get<PeriodicWeights>(m).pattern);
}

} // namespace

WeightedOrder parse_order(std::string_view text) { return Parser(text).parse(); }

std::string format_order(const WeightedOrder &w)
{
	std::string out;
	for (std::size_t i = 0; i < w.segment_count(); ++i) {
		if (i)
			out += " + ";
		out += segment_text(w.segment(i)) + weight_text(w.weights()[i]);
	}
	return out;
}

std::string format_expr(const OrderExpr &e)
{
	std::string out;
	for (std::size_t i = 0; i < e.size(); ++i) {
		if (i)
			out += " + ";
		out += segment_text(e.segments()[i]);
	}
	return out;
}

// ---------------------------------------------------------------------------
// Order-type questions

OrderExpr normalize(const OrderExpr &expr)
{
	using K = SegmentKind;
	std::vector<Segment> s = expr.segments();
	bool changed = true;
	while (changed) {
		changed = false;
		for (std::size_t i = 0; i + 1 < s.size() && !changed; ++i) {
			Segment &a = s[i];
			const Segment &b = s[i + 1];
			if (a.kind == K::Finite && b.kind == K::Finite) {
				a.size += b.size;
			} else if (a.kind == K::Finite && b.kind == K::OmegaPlus) {
				a = b;
			} else if (a.kind == K::OmegaMinus && b.kind == K::Finite) {
				// absorbed
			} else if (a.kind == K::OmegaMinus && b.kind == K::OmegaPlus) {
				a = Segment{K::Zeta, 0};
			} else if (a.kind == K::Eta && b.kind == K::Eta) {
				// absorbed
			} else if (a.kind == K::Eta && b.kind == K::Finite && b.size == 1 &&
			           i + 2 < s.size() && s[i + 2].kind == K::Eta) {
				s.erase(s.begin() + static_cast<std::ptrdiff_t>(i) + 2);
			} else {
				continue;
			}
			s.erase(s.begin() + static_cast<std::ptrdiff_t>(i) + 1);
			changed = true;
		}
	}
	return OrderExpr::from_segments(std::move(s));
}

bool has_first(const OrderExpr &expr) { return expr.segments().front().has_first(); }

std::size_t wois_boundary(const OrderExpr &expr)
{
	const auto &s = expr.segments();
	return static_cast<std::size_t>(
	    std::find_if(s.begin(), s.end(), [](const Segment &x) { return !x.well_ordered(); }) -
	    s.begin());
}

std::pair<std::optional<OrderExpr>, std::optional<OrderExpr>>
wois_split(const OrderExpr &expr)
{
	const auto &s = expr.segments();
	std::size_t b = wois_boundary(expr);
	std::optional<OrderExpr> head, tail;
	if (b > 0)
		head = OrderExpr::from_segments({s.begin(), s.begin() + static_cast<std::ptrdiff_t>(b)});
	if (b < s.size())
		tail = OrderExpr::from_segments({s.begin() + static_cast<std::ptrdiff_t>(b), s.end()});
	return {std::move(head), std::move(tail)};
}

std::pair<std::optional<WeightedOrder>, std::optional<WeightedOrder>>
wois_split(const WeightedOrder &w)
{
	std::size_t b = wois_boundary(w.expr());
	std::optional<WeightedOrder> head, tail;
	if (b > 0)
		head = w.slice(0, b);
	if (b < w.segment_count())
		tail = w.slice(b, w.segment_count());
	return {std::move(head), std::move(tail)};
}

bool is_well_ordered(const OrderExpr &expr)
{
	const auto n = normalize(expr);
	return std::all_of(n.segments().begin(), n.segments().end(),
	                   [](const Segment &s) { return s.well_ordered(); });
}

// ---------------------------------------------------------------------------
// Maximal intervals

const char *to_string(IntervalTag tag)
{
	switch (tag) {
	case IntervalTag::Finite: return "FiniteInterval";
	case IntervalTag::ZPlus: return "ZPlusInterval";
	case IntervalTag::ZMinus: return "ZMinusInterval";
	case IntervalTag::Z: return "ZInterval";
	case IntervalTag::DenseSingletonField: return "DenseSingletonField";
	}
	return "?";
}

int IntervalData::at(std::int64_t z) const
{
	const auto len = static_cast<std::int64_t>(body.size());
	if (z < 0) {
		if (left.empty())
			throw Error(Errc::invariant, "interval has no points below its body");
		return left[static_cast<std::size_t>(
		    floor_mod(z, static_cast<std::int64_t>(left.size())))];
	}
	if (z < len)
		return body[static_cast<std::size_t>(z)];
	if (right.empty())
		throw Error(Errc::invariant, "interval has no points above its body");
	return right[static_cast<std::size_t>(
	    floor_mod(z - len, static_cast<std::int64_t>(right.size())))];
}

namespace {

std::vector<int> primitive_period(const std::vector<int> &p)
{
	const std::size_t n = p.size();
	for (std::size_t d = 1; d < n; ++d) {
		if (n % d)
			continue;
		bool ok = true;
		for (std::size_t i = 0; i < n && ok; ++i)
			ok = p[i] == p[(i + d) % n];
		if (ok)
			return {p.begin(), p.begin() + static_cast<std::ptrdiff_t>(d)};
	}
	return p;
}

std::vector<int> min_rotation(const std::vector<int> &p)
{
	std::vector<int> best = p;
	std::vector<int> r = p;
	for (std::size_t i = 1; i < p.size(); ++i) {
		std::rotate(r.begin(), r.begin() + 1, r.end());
		best = std::min(best, r);
	}
	return best;
}

std::int64_t lcm_of(std::initializer_list<std::size_t> sizes)
{
	std::int64_t l = 1;
	for (auto s : sizes)
		if (s)
			l = std::lcm(l, static_cast<std::int64_t>(s));
	return l;
}

// Smallest h with f(z + P) == f(z) for all z >= h; nullopt when f is
// P-periodic everywhere.
std::optional<std::int64_t> right_onset(const IntervalData &f, std::int64_t period)
{
	const auto len = static_cast<std::int64_t>(f.body.size());
	for (std::int64_t z = len - 1; z >= -period; --z)
		if (f.at(z + period) != f.at(z))
			return z + 1;
	return std::nullopt;
}

} // namespace

IntervalData canonical(IntervalData d)
{
	if (d.tag == IntervalTag::Finite || d.tag == IntervalTag::DenseSingletonField)
		return d;
	if (!d.left.empty())
		d.left = primitive_period(d.left);
	if (!d.right.empty())
		d.right = primitive_period(d.right);
	while (!d.right.empty() && !d.body.empty() && d.body.back() == d.right.back()) {
		d.body.pop_back();
		std::rotate(d.right.rbegin(), d.right.rbegin() + 1, d.right.rend());
	}
	while (!d.left.empty() && !d.body.empty() && d.body.front() == d.left.front()) {
		d.body.erase(d.body.begin());
		std::rotate(d.left.begin(), d.left.begin() + 1, d.left.end());
	}
	if (d.tag == IntervalTag::Z) {
		const std::int64_t period = lcm_of({d.left.size(), d.right.size()});
		if (!right_onset(d, period)) {
			std::vector<int> one;
			for (std::int64_t z = 0; z < period; ++z)
				one.push_back(d.at(z));
			d.left = d.right = min_rotation(primitive_period(one));
			d.body.clear();
		}
	}
	return d;
}

std::vector<IntervalData> interval_decomposition(const WeightedOrder &w)
{
	using K = SegmentKind;
	const auto &segs = w.expr().segments();
	std::vector<IntervalData> out;
	for (std::size_t i = 0; i < segs.size();) {
		const Segment &s = segs[i];
		if (s.kind == K::Zeta) {
			auto p = pattern_of(w.weights()[i]);
			out.push_back({IntervalTag::Z, p, {}, p});
			++i;
			continue;
		}
		if (s.kind == K::Eta) {
			const auto *c = std::get_if<ConstantWeight>(&w.weights()[i]);
			if (!c)
				throw Error(Errc::unsupported_class,
				            "eta segment without a constant weight");
			out.push_back({IntervalTag::DenseSingletonField, {}, {c->value}, {}});
			++i;
			continue;
		}
		// A run of finitely-connected segments: [ω*] Finite* [ω].
		std::size_t j = i;
		while (j + 1 < segs.size() && segs[j].has_last() && segs[j + 1].has_first())
			++j;
		IntervalData d;
		for (std::size_t t = i; t <= j; ++t) {
			const auto &m = w.weights()[t];
			switch (segs[t].kind) {
			case K::OmegaMinus: d.left = pattern_of(m); break;
			case K::OmegaPlus: d.right = pattern_of(m); break;
			case K::Finite:
				if (const auto *e = std::get_if<ExplicitWeights>(&m))
					d.body.insert(d.body.end(), e->values.begin(), e->values.end());
				else
					d.body.insert(d.body.end(), static_cast<std::size_t>(segs[t].size),
					              std::get<ConstantWeight>(m).value);
				break;
			default: throw Error(Errc::invariant, "unexpected segment in run");
			}
		}
		d.tag = !d.left.empty() && !d.right.empty() ? IntervalTag::Z
		        : !d.left.empty()                    ? IntervalTag::ZMinus
		        : !d.right.empty()                   ? IntervalTag::ZPlus
		                                             : IntervalTag::Finite;
		out.push_back(std::move(d));
		i = j + 1;
	}

	// η[c] + η[c] = η[c] and η[c] + 1[c] + η[c] = η[c].
	auto dense = [](const IntervalData &d, int c) {
		return d.tag == IntervalTag::DenseSingletonField && d.body[0] == c;
	};
	bool changed = true;
	while (changed) {
		changed = false;
		for (std::size_t i = 0; i + 1 < out.size() && !changed; ++i) {
			if (out[i].tag != IntervalTag::DenseSingletonField)
				continue;
			int c = out[i].body[0];
			auto at = [&](std::size_t k) { return out.begin() + static_cast<std::ptrdiff_t>(k); };
			if (dense(out[i + 1], c)) {
				out.erase(at(i + 1));
				changed = true;
			} else if (i + 2 < out.size() && out[i + 1].tag == IntervalTag::Finite &&
			           out[i + 1].body == std::vector<int>{c} && dense(out[i + 2], c)) {
				out.erase(at(i + 1), at(i + 3));
				changed = true;
			}
		}
	}
	for (auto &d : out)
		d = canonical(std::move(d));
	return out;
}

namespace {

bool equal_shifted(const IntervalData &f, const IntervalData &g, std::int64_t d,
                   std::int64_t period)
{
	const auto lf = static_cast<std::int64_t>(f.body.size());
	const auto lg = static_cast<std::int64_t>(g.body.size());
	const std::int64_t lo = std::min<std::int64_t>(0, -d) - period;
	const std::int64_t hi = std::max(lg, lf - d) + period;
	for (std::int64_t z = lo; z < hi; ++z)
		if (g.at(z) != f.at(z + d))
			return false;
	return true;
}

} // namespace

bool equivalent_intervals(const IntervalData &a, const IntervalData &b)
{
	if (a.tag != b.tag)
		return false;
	switch (a.tag) {
	case IntervalTag::Finite:
	case IntervalTag::DenseSingletonField: return a.body == b.body;
	case IntervalTag::ZPlus: {
		const std::int64_t n = static_cast<std::int64_t>(std::max(a.body.size(), b.body.size())) +
		                       lcm_of({a.right.size(), b.right.size()});
		for (std::int64_t z = 0; z < n; ++z)
			if (a.at(z) != b.at(z))
				return false;
		return true;
	}
	case IntervalTag::ZMinus: {
		const auto la = static_cast<std::int64_t>(a.body.size());
		const auto lb = static_cast<std::int64_t>(b.body.size());
		const std::int64_t n = std::max(la, lb) + lcm_of({a.left.size(), b.left.size()});
		for (std::int64_t t = 0; t < n; ++t)
			if (a.at(la - 1 - t) != b.at(lb - 1 - t))
				return false;
		return true;
	}
	case IntervalTag::Z: {
		const std::int64_t period =
		    lcm_of({a.left.size(), a.right.size(), b.left.size(), b.right.size()});
		auto oa = right_onset(a, period);
		auto ob = right_onset(b, period);
		if (oa.has_value() != ob.has_value())
			return false;
		if (oa)
			return equal_shifted(a, b, *oa - *ob, period);
		for (std::int64_t d = 0; d < period; ++d)
			if (equal_shifted(a, b, d, period))
				return true;
		return false;
	}
	}
	return false;
}

bool classify_iso(const WeightedOrder &a, const WeightedOrder &b)
{
	for (const WeightedOrder *w : {&a, &b}) {
		if (w->has_custom_factors())
			throw Error(Errc::unsupported_class,
			            "classification of orders with attached factor algebras");
		for (std::size_t i = 0; i < w->segment_count(); ++i) {
			const auto kind = w->segment(i).kind;
			const auto &m = w->weights()[i];
			if (kind == SegmentKind::Eta && !std::holds_alternative<ConstantWeight>(m))
				throw Error(Errc::unsupported_class, "eta segment needs a constant weight");
			if (kind != SegmentKind::Finite && kind != SegmentKind::Eta &&
			    std::holds_alternative<ExplicitWeights>(m))
				throw Error(Errc::unsupported_class,
				            "infinite segment needs a constant or periodic weight");
		}
	}
	const auto da = interval_decomposition(a);
	const auto db = interval_decomposition(b);
	if (da.size() != db.size())
		return false;
	for (std::size_t i = 0; i < da.size(); ++i)
		if (!equivalent_intervals(da[i], db[i]))
			return false;
	return true;
}

// ---------------------------------------------------------------------------
// Canonical finite subsets

std::vector<Rational> eta_points(std::size_t stage)
{
	std::set<Rational> pts;
	if (stage == 0)
		return {};
	pts.insert(Rational(1, 2));
	std::int64_t level = 1, num = 1; // fill cursor: num / 2^level
	auto next_fill = [&]() {
		for (;;) {
			Rational q(num, 1);
			q /= Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(level));
			num += 2;
			if (num >= (std::int64_t{1} << level)) {
				++level;
				num = 1;
			}
			if (!pts.count(q))
				return q;
		}
	};
	for (std::size_t k = 2; k <= stage; ++k) {
		pts.insert(Rational(*pts.begin() / 2));
		pts.insert(next_fill());
	}
	return {pts.begin(), pts.end()};
}

PositionChain canonical_chain(const WeightedOrder &w, std::size_t depth)
{
	if (depth < 1)
		throw Error(Errc::precondition, "chain depth must be at least 1");
	PositionChain chain;
	for (std::size_t k = 1; k <= depth; ++k) {
		const auto kk = static_cast<long>(k);
		PositionSet f;
		for (std::size_t s = 0; s < w.segment_count(); ++s) {
			const Segment &seg = w.segment(s);
			auto add_range = [&](long lo, long hi) {
				for (long z = lo; z <= hi; ++z)
					f.push_back({s, Rational(z)});
			};
			switch (seg.kind) {
			case SegmentKind::Finite: add_range(1, static_cast<long>(seg.size)); break;
			case SegmentKind::OmegaPlus: add_range(0, kk - 1); break;
			case SegmentKind::OmegaMinus: add_range(-kk, -1); break;
			case SegmentKind::Zeta: add_range(-kk, kk - 1); break;
			case SegmentKind::Eta:
				for (auto &q : eta_points(k))
					f.push_back({s, q});
				break;
			}
		}
		chain.push_back(std::move(f));
	}
	return chain;
}

bool has_predecessor_outside(const OrderExpr &expr, const PositionSet &f,
                             const Position &p)
{
	const auto &segs = expr.segments();
	for (std::size_t s = 0; s < p.segment; ++s)
		if (segs[s].kind != SegmentKind::Finite)
			return true;
	const Segment &own = segs.at(p.segment);
	long first = 0;
	if (own.kind == SegmentKind::Finite)
		first = 1;
	else if (own.kind != SegmentKind::OmegaPlus)
		return true;
	auto present = [&](const Position &q) { return std::binary_search(f.begin(), f.end(), q); };
	for (std::size_t s = 0; s < p.segment; ++s)
		for (long z = 1; z <= segs[s].size; ++z)
			if (!present({s, Rational(z)}))
				return true;
	const long top = p.coord.get_num().get_si();
	for (long z = first; z < top; ++z)
		if (!present({p.segment, Rational(z)}))
			return true;
	return false;
}

bool predecessor_fair(const OrderExpr &expr, const PositionChain &chain)
{
	for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
		const auto &cur = chain[k];
		const auto &next = chain[k + 1];
		for (const auto &p : cur) {
			if (!has_predecessor_outside(expr, cur, p))
				continue;
			bool gained = std::any_of(next.begin(), next.end(), [&](const Position &q) {
				return q < p && !std::binary_search(cur.begin(), cur.end(), q);
			});
			if (!gained)
				return false;
		}
	}
	return true;
}

} // namespace lexalg
