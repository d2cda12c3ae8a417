#include <doctest.h>

#include "lexalg/tower.hpp"

#include <cstdlib>

using namespace lexalg;

namespace {

Position pos(std::size_t seg, long coord) { return {seg, Rational(coord)}; }

} // namespace

TEST_CASE("lex_compare")
{
	CHECK(lex_compare({1, 2}, {1, 2}) == std::strong_ordering::equal);
	CHECK(lex_compare({1, 2}, {2, 1}) == std::strong_ordering::less);
	CHECK(lex_compare({2, 1}, {1, 2}) == std::strong_ordering::greater);
	CHECK_THROWS_AS(lex_compare({1}, {1, 2}), Error);
}

TEST_CASE("stage algebras")
{
	auto w = parse_order("w[2]");
	auto s = stage_algebra(w, {pos(0, 1), pos(0, 0), pos(0, 1)});
	CHECK(s.size() == 4);
	CHECK(s.algebra()->dimension() == 10);
	CHECK(*s.algebra() == triangular_algebra(4));
	CHECK(s.positions() == PositionSet{pos(0, 0), pos(0, 1)});

	auto z = stage_algebra(parse_order("z[2,3]"), {pos(0, -1), pos(0, 0)});
	CHECK(z.size() == 6);
	CHECK(z.mults() == std::vector<int>{3, 2});
	CHECK(z.multi_index(3) == MultiIndex{2, 2});
	CHECK(z.vertex({3, 1}) == 4);

	auto q = stage_algebra(parse_order("q[2]"), {{0, Rational(1, 2)}});
	CHECK(*q.algebra() == triangular_algebra(2));

	CHECK_THROWS_AS(stage_algebra(w, {pos(0, -1)}), Error);
	CHECK_THROWS_AS(stage_algebra(w, {}), Error);
}

TEST_CASE("stage relation equals iterated lexicographic products")
{
	auto w = parse_order("2[3,2] + w*[2,3] + q[2]");
	PositionSet f{pos(0, 1), pos(0, 2), pos(1, -2), pos(1, -1), {2, Rational(1, 2)}};
	auto s = stage_algebra(w, f);
	DigraphAlgebra acc = triangular_algebra(static_cast<std::size_t>(s.mults().back()));
	for (std::size_t k = s.mults().size() - 1; k-- > 0;)
		acc = lex_product(triangular_algebra(static_cast<std::size_t>(s.mults()[k])), acc);
	CHECK(*s.algebra() == acc);
	CHECK(s.size() == 3 * 2 * 2 * 3 * 2);
}

TEST_CASE("custom triangular factors")
{
	auto v = std::make_shared<const DigraphAlgebra>(
	    DigraphAlgebra::from_relation(3, {{0, 0}, {1, 1}, {2, 2}, {0, 2}, {1, 2}}));
	auto w = parse_order("w[3]").with_factor(0, v);
	auto s = stage_algebra(w, {pos(0, 0), pos(0, 1)});
	CHECK(*s.algebra() == lex_product(*v, *v));
	CHECK_THROWS_AS(parse_order("w[2]").with_factor(0, v), Error);
	CHECK_THROWS_AS(parse_order("w[2]").with_factor(
	                    0, std::make_shared<const DigraphAlgebra>(full_algebra(2))),
	                Error);
}

TEST_CASE("embedding examples")
{
	auto w = parse_order("w[2]");
	auto f0 = stage_algebra(w, {pos(0, 0)});
	auto f1 = stage_algebra(w, {pos(0, 1)});
	auto g = stage_algebra(w, {pos(0, 0), pos(0, 1)});
	auto e12 = Element::unit(f0.algebra(), {0, 1});
	auto img = embed(f0, g, e12);
	CHECK(img == Element::unit(g.algebra(), {0, 2}) + Element::unit(g.algebra(), {1, 3}));
	auto img1 = embed(f1, g, MatrixUnit{0, 1});
	CHECK(img1 == Element::unit(g.algebra(), {0, 1}) + Element::unit(g.algebra(), {2, 3}));
	CHECK(embed(f0, g, Element::identity(f0.algebra())) == Element::identity(g.algebra()));
	CHECK(lifts(f0, g, 1) == std::vector<std::size_t>{2, 3});
	CHECK_THROWS_AS(embed(g, f0, MatrixUnit{0, 0}), Error);
	CHECK_THROWS_AS(embed(f0, g, Element::unit(g.algebra(), {0, 0})), Error);
}

TEST_CASE("embeddings are coherent, multiplicative and star-compatible")
{
	for (auto text : {"w[2]", "z[2]", "q[2]", "w[2] + z[2]", "w*[2,3]"}) {
		auto chain = build_chain(parse_order(text), 3, 4096);
		const auto &f = chain[0], &g = chain[1], &h = chain[2];
		auto units = f.algebra()->edges();
		for (auto e : units) {
			auto direct = embed(f, h, e);
			CHECK(direct == embed(g, h, embed(f, g, e)));
			// Star: the image of e_ji is the transpose of the image of e_ij.
			if (f.algebra()->contains(e.col, e.row)) {
				auto back = embed(f, g, MatrixUnit{e.col, e.row});
				const auto fwd = embed(f, g, e);
				for (const auto &[u, c] : fwd.terms())
					CHECK(back.coefficient({u.col, u.row}) == c);
			}
			for (auto e2 : units) {
				auto prod = Element::unit(f.algebra(), e) * Element::unit(f.algebra(), e2);
				CHECK(embed(f, g, prod) == embed(f, g, e) * embed(f, g, e2));
			}
		}
	}
}

TEST_CASE("chains and budgets")
{
	auto w = build_chain(parse_order("w[2]"), 3);
	CHECK(w[0].size() == 2);
	CHECK(w[1].size() == 4);
	CHECK(w[2].size() == 8);
	auto z = build_chain(parse_order("z[2]"), 2);
	CHECK(z[0].size() == 4);
	CHECK(z[1].size() == 16);
	try {
		build_chain(parse_order("w[7]"), 5);
		FAIL("expected budget error");
	} catch (const BudgetError &e) {
		CHECK(e.n_f() == 16807);
		CHECK(e.code() == Errc::budget);
	}
	CHECK(build_chain(parse_order("w[3]"), 5, 243)[4].size() == 243);
	CHECK_THROWS_AS(build_chain(parse_order("w[3]"), 5, 242), BudgetError);
	CHECK_THROWS_AS(stage_size(parse_order("w[1000]"), canonical_chain(parse_order("w[1000]"), 8)[7],
	                           ~std::uint64_t{0} - 1),
	                BudgetError);
}

TEST_CASE("budget from the environment")
{
	setenv("LEXALG_BUDGET", "123", 1);
	CHECK(budget_from_env() == 123);
	setenv("LEXALG_BUDGET", "12x", 1);
	CHECK_THROWS_AS(budget_from_env(), Error);
	unsetenv("LEXALG_BUDGET");
	CHECK(budget_from_env() == default_budget);
}
