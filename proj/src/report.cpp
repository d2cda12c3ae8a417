#include "lexalg/report.hpp"

#include "lexalg/error.hpp"

#include <algorithm>
#include <map>

namespace lexalg {

namespace {

Json mpz_json(const mpz_class &z)
{
	if (z.fits_slong_p())
		return z.get_si();
	return z.get_str();
}

Json report(const char *command, Json input, Json result)
{
	Json r;
	r["command"] = command;
	r["input"] = std::move(input);
	r["result"] = std::move(result);
	r["toolVersion"] = tool_version;
	return r;
}

Json optional_order(const std::optional<WeightedOrder> &w)
{
	return w ? Json(format_order(*w)) : Json(nullptr);
}

std::size_t to_index(const Json &j, std::size_t n, const char *what)
{
	if (!j.is_number_integer())
		throw Error(Errc::syntax, std::string(what) + " must be an integer");
	const auto v = j.get<std::int64_t>();
	if (v < 1 || static_cast<std::uint64_t>(v) > n)
		throw Error(Errc::precondition, std::string(what) + " " + std::to_string(v) +
		                                    " outside 1.." + std::to_string(n));
	return static_cast<std::size_t>(v - 1);
}

} // namespace

Json rational_json(const Rational &q)
{
	if (is_integer(q))
		return mpz_json(q.get_num());
	return q.get_str();
}

Json position_json(const Position &p)
{
	Json j;
	j["segment"] = p.segment;
	j["coord"] = rational_json(p.coord);
	return j;
}

Json interval_json(const IntervalData &d)
{
	Json j;
	j["tag"] = to_string(d.tag);
	switch (d.tag) {
	case IntervalTag::Finite:
		j["length"] = d.body.size();
		j["weights"] = d.body;
		break;
	case IntervalTag::DenseSingletonField: j["weight"] = d.body.at(0); break;
	case IntervalTag::ZPlus:
		j["prefix"] = d.body;
		j["period"] = d.right;
		break;
	case IntervalTag::ZMinus:
		j["period"] = d.left;
		j["suffix"] = d.body;
		break;
	case IntervalTag::Z:
		if (d.body.empty() && d.left == d.right) {
			j["period"] = d.left;
		} else {
			j["left_period"] = d.left;
			j["body"] = d.body;
			j["right_period"] = d.right;
		}
		break;
	}
	return j;
}

Json relation_json(const DigraphAlgebra &a)
{
	Json j;
	j["n"] = a.size();
	Json edges = Json::array();
	for (auto e : a.edges())
		edges.push_back({e.row + 1, e.col + 1});
	j["edges"] = std::move(edges);
	if (!a.labels().empty())
		j["labels"] = a.labels();
	return j;
}

DigraphAlgebra relation_from_json(const Json &j)
{
	if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
		throw Error(Errc::syntax, "relation JSON needs \"n\" and \"edges\"");
	if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 1)
		throw Error(Errc::precondition, "\"n\" must be a positive integer");
	const auto n = j["n"].get<std::size_t>();
	std::vector<MatrixUnit> pairs;
	for (const auto &e : j["edges"]) {
		if (!e.is_array() || e.size() != 2)
			throw Error(Errc::syntax, "each edge must be a pair [i, j]");
		pairs.push_back({to_index(e[0], n, "vertex"), to_index(e[1], n, "vertex")});
	}
	auto a = DigraphAlgebra::from_relation(n, pairs);
	if (j.contains("labels"))
		a = a.with_labels(j["labels"].get<std::vector<MultiIndex>>());
	return a;
}

Json element_json(const Element &x, const Stage *stage)
{
	Json terms = Json::array();
	for (const auto &[e, c] : x.terms()) {
		Json t;
		t["row"] = e.row + 1;
		t["col"] = e.col + 1;
		t["num"] = mpz_json(c.get_num());
		t["den"] = mpz_json(c.get_den());
		if (stage) {
			t["row_label"] = stage->multi_index(e.row);
			t["col_label"] = stage->multi_index(e.col);
		}
		terms.push_back(std::move(t));
	}
	Json j;
	j["terms"] = std::move(terms);
	return j;
}

Element element_from_json(const Json &j, AlgebraPtr home)
{
	if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
		throw Error(Errc::syntax, "element JSON needs a \"terms\" array");
	Element x(home);
	for (const auto &t : j["terms"]) {
		const std::size_t r = to_index(t.at("row"), home->size(), "row");
		const std::size_t c = to_index(t.at("col"), home->size(), "col");
		auto as_mpz = [](const Json &v) {
			return v.is_string() ? mpz_class(v.get<std::string>())
			                     : mpz_class(v.get<long>());
		};
		const mpz_class den = t.contains("den") ? as_mpz(t["den"]) : mpz_class(1);
		if (den == 0)
			throw Error(Errc::precondition, "zero denominator");
		Rational q(as_mpz(t.at("num")), den);
		q.canonicalize();
		x.add({r, c}, q);
	}
	return x;
}

Json stage_json(const Stage &f)
{
	Json j;
	Json pos = Json::array();
	for (const auto &p : f.positions())
		pos.push_back(position_json(p));
	j["positions"] = std::move(pos);
	j["mults"] = f.mults();
	j["n_F"] = f.size();
	return j;
}

Json verdict_json(const RadicalVerdict &v)
{
	Json j;
	j["member"] = v.member;
	j["first_difference"] =
	    v.first_difference ? position_json(*v.first_difference) : Json(nullptr);
	if (!v.member) {
		j["head"] = v.head;
		j["row_tail"] = v.row_tail;
		j["col_tail"] = v.col_tail;
	}
	return j;
}

Json link_json(const LinkRecord &r, const StageChain &chain)
{
	Json j;
	j["stage"] = r.stage_index + 1;
	j["n_F"] = chain[r.stage_index].size();
	j["row"] = r.link.row + 1;
	j["col"] = r.link.col + 1;
	j["range_witness"] = r.range_witness;
	j["domain_witness"] = r.domain_witness;
	j["canonical"] = r.canonical;
	return j;
}

// ---------------------------------------------------------------------------
// Commands

Json cmd_stage(const std::string &order, std::size_t depth, const CommandOptions &opt)
{
	const auto w = parse_order(order);
	const auto chain = build_chain(w, depth, opt.budget);
	Json sizes = Json::array(), edges = Json::array(), stages = Json::array();
	for (std::size_t k = 0; k < chain.size(); ++k) {
		const Stage &f = chain[k];
		sizes.push_back(f.size());
		edges.push_back(f.algebra()->dimension());
		Json s = stage_json(f);
		s["edges"] = f.algebra()->dimension();
		stages.push_back(std::move(s));
	}
	Json result;
	result["sizes"] = std::move(sizes);
	result["edge_counts"] = std::move(edges);
	result["stages"] = std::move(stages);
	return report("stage", {{"order", format_order(w)}, {"depth", depth}, {"budget", opt.budget}},
	              std::move(result));
}

Json cmd_radical(const std::string &order, std::size_t depth, const CommandOptions &opt)
{
	const auto w = parse_order(order);
	const auto chain = build_chain(w, depth, opt.budget);
	Json dims = Json::array(), stages = Json::array();
	for (std::size_t k = 0; k < chain.size(); ++k) {
		const Stage &f = chain[k];
		const auto q = quotient_structure(f);
		dims.push_back(q.radical_dim);
		Json s;
		s["index"] = k + 1;
		s["n_F"] = f.size();
		s["n1"] = q.n1;
		s["n2"] = q.n2;
		s["limit_radical_dim"] = q.radical_dim;
		s["quotient_dim"] = q.quotient_dim;
		s["stage_radical_dim"] = q.stage_radical_dim;
		s["stage_radical_strictly_larger"] = q.stage_radical_strictly_larger;

		std::map<std::size_t, std::size_t> blocks;
		for (auto b : semisimple_quotient(*f.algebra()))
			++blocks[b];
		Json bj = Json::array();
		for (auto [size, count] : blocks)
			bj.push_back({{"size", size}, {"count", count}});
		s["quotient_blocks"] = std::move(bj);

		if (head_slots(f) > 0) {
			const int p = f.mults()[0];
			const auto a = first_factor_image(
			    f, {{MatrixUnit{0, static_cast<std::size_t>(p - 1)}, Rational(1)}});
			Json nil;
			nil["unit"] = {1, p};
			nil["exponent"] = p;
			nil["trials"] = opt.trials;
			nil["seed"] = opt.seed;
			nil["passed"] = nilpotency_check(f, a, opt.trials, opt.seed);
			s["nilpotency"] = std::move(nil);
		}
		stages.push_back(std::move(s));
	}
	Json result;
	result["limit_radical_dims"] = std::move(dims);
	result["stages"] = std::move(stages);
	return report("radical",
	              {{"order", format_order(w)},
	               {"depth", depth},
	               {"budget", opt.budget},
	               {"seed", opt.seed},
	               {"trials", opt.trials}},
	              std::move(result));
}

Json cmd_semisimple(const std::string &order)
{
	const auto w = parse_order(order);
	const auto [head, tail] = wois_split(w);
	Json result;
	result["semisimple"] = is_semisimple(w);
	result["elementary_decomposition"] = has_elementary_radical_decomposition(w);
	result["has_first"] = has_first(w.expr());
	result["normalized"] = format_expr(normalize(w.expr()));
	result["wois"] = {{"head", optional_order(head)}, {"tail", optional_order(tail)}};
	return report("semisimple", {{"order", format_order(w)}}, std::move(result));
}

Json cmd_classify(const std::string &order_a, const std::string &order_b)
{
	const auto a = parse_order(order_a);
	const auto b = parse_order(order_b);
	const bool iso = classify_iso(a, b);
	Json da = Json::array(), db = Json::array();
	for (const auto &d : interval_decomposition(a))
		da.push_back(interval_json(d));
	for (const auto &d : interval_decomposition(b))
		db.push_back(interval_json(d));
	Json result;
	result["isomorphic"] = iso;
	result["decompositionA"] = std::move(da);
	result["decompositionB"] = std::move(db);
	return report("classify", {{"orderA", format_order(a)}, {"orderB", format_order(b)}},
	              std::move(result));
}

Json cmd_links(const std::string &order, std::size_t depth, std::size_t horizon,
               const CommandOptions &opt)
{
	const auto w = parse_order(order);
	if (horizon + 1 > depth)
		throw Error(Errc::precondition, "horizon " + std::to_string(horizon) +
		                                    " needs a chain of depth at least " +
		                                    std::to_string(horizon + 1));
	const auto chain = build_chain(w, depth, opt.budget);
	const Stage &first = chain[0];
	Json units = Json::array();
	std::size_t strict = 0, linked = 0, radical = 0;
	for (auto e : first.algebra()->edges()) {
		if (e.is_diagonal())
			continue;
		++strict;
		const auto verdict = limit_radical_member(first, e);
		const auto link = find_link(chain, 0, e, horizon);
		radical += verdict.member ? 1 : 0;
		linked += link ? 1 : 0;
		Json u;
		u["row"] = first.multi_index(e.row);
		u["col"] = first.multi_index(e.col);
		u["radical"] = verdict.member;
		u["first_difference"] = position_json(*verdict.first_difference);
		u["link"] = link ? link_json(*link, chain) : Json("none within horizon");
		units.push_back(std::move(u));
	}
	Json result;
	result["stage"] = stage_json(first);
	result["strict_units"] = strict;
	result["linked"] = linked;
	result["radical"] = radical;
	result["units"] = std::move(units);
	return report("links",
	              {{"order", format_order(w)},
	               {"depth", depth},
	               {"horizon", horizon},
	               {"budget", opt.budget}},
	              std::move(result));
}

Json cmd_decompose(const std::string &order)
{
	const auto w = parse_order(order);
	Json intervals = Json::array();
	for (const auto &d : interval_decomposition(w))
		intervals.push_back(interval_json(d));
	Json result;
	result["normalized"] = format_expr(normalize(w.expr()));
	result["intervals"] = std::move(intervals);
	return report("decompose", {{"order", format_order(w)}}, std::move(result));
}

Json cmd_oracle(const Json &relation, std::size_t cap)
{
	auto a = std::make_shared<const DigraphAlgebra>(relation_from_json(relation));
	const auto basis = radical_trace_oracle(a, cap);
	const auto comb = radical_combinatorial(a);
	std::vector<Element> comb_elems;
	for (auto e : comb.edges)
		comb_elems.push_back(Element::unit(a, e));
	Json b = Json::array();
	for (const auto &x : basis)
		b.push_back(element_json(x));
	Json result;
	result["n"] = a->size();
	result["dimension"] = a->dimension();
	result["triangular"] = a->is_triangular();
	result["radical_dimension"] = basis.size();
	result["combinatorial_radical_dimension"] = comb.dimension();
	result["agrees"] = same_span(*a, basis, comb_elems);
	result["radical_basis"] = std::move(b);
	return report("oracle", {{"relation", relation_json(*a)}, {"cap", cap}},
	              std::move(result));
}

Json error_json(const std::exception &e)
{
	Json err;
	if (const auto *le = dynamic_cast<const Error *>(&e)) {
		err["kind"] = errc_name(le->code());
		err["message"] = le->what();
		if (const auto *pe = dynamic_cast<const ParseError *>(&e))
			err["position"] = pe->position();
		if (const auto *be = dynamic_cast<const BudgetError *>(&e)) {
			err["n_F"] = be->n_f();
			err["budget"] = be->budget();
		}
	} else {
		err["kind"] = "internal";
		err["message"] = e.what();
	}
	Json j;
	j["error"] = std::move(err);
	j["toolVersion"] = tool_version;
	return j;
}

} // namespace lexalg
