#include <doctest.h>

#include "lexalg/digraph.hpp"
#include "lexalg/linalg.hpp"

#include <random>

using namespace lexalg;

namespace {

AlgebraPtr ptr(DigraphAlgebra a) { return std::make_shared<const DigraphAlgebra>(std::move(a)); }

std::vector<MatrixUnit> reflexive(std::size_t n, std::vector<MatrixUnit> extra)
{
	for (std::size_t i = 0; i < n; ++i)
		extra.push_back({i, i});
	return extra;
}

// Every preorder on n vertices: transitive closures of all relations, deduped.
std::vector<DigraphAlgebra> all_preorders(std::size_t n)
{
	std::vector<MatrixUnit> off;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			if (i != j)
				off.push_back({i, j});
	std::vector<DigraphAlgebra> out;
	for (std::uint32_t mask = 0; mask < (1u << off.size()); ++mask) {
		std::vector<MatrixUnit> pairs;
		for (std::size_t b = 0; b < off.size(); ++b)
			if (mask >> b & 1)
				pairs.push_back(off[b]);
		auto c = transitive_closure(n, pairs);
		if (c.dimension() == n + pairs.size())
			out.push_back(std::move(c));
	}
	return out;
}

} // namespace

TEST_CASE("triangular algebra")
{
	CHECK(triangular_algebra(1).dimension() == 1);
	CHECK(triangular_algebra(3).dimension() == 6);
	CHECK(triangular_algebra(3).is_triangular());
	CHECK_THROWS_AS(triangular_algebra(0), Error);
	CHECK(triangular_algebra(70).dimension() == 70 * 71 / 2);
}

TEST_CASE("from_relation validation")
{
	auto d2 = DigraphAlgebra::from_relation(2, {{0, 0}, {1, 1}});
	CHECK(d2 == diagonal_algebra(2));
	auto m2 = DigraphAlgebra::from_relation(2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}});
	CHECK(m2 == full_algebra(2));
	CHECK_FALSE(m2.is_triangular());
	try {
		DigraphAlgebra::from_relation(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}});
		FAIL("expected not-transitive");
	} catch (const NotTransitiveError &e) {
		CHECK(e.code() == Errc::not_transitive);
		CHECK(e.first() == MatrixUnit{0, 1});
		CHECK(e.second() == MatrixUnit{1, 2});
	}
	try {
		DigraphAlgebra::from_relation(2, {{0, 0}, {0, 1}});
		FAIL("expected not-reflexive");
	} catch (const Error &e) {
		CHECK(e.code() == Errc::not_reflexive);
	}
	CHECK_THROWS_AS(DigraphAlgebra::from_relation(2, {{0, 0}, {1, 1}, {0, 2}}), Error);
}

TEST_CASE("strict ideal")
{
	auto t3 = strict_ideal(ptr(triangular_algebra(3)));
	CHECK(t3.edges == std::vector<MatrixUnit>{{0, 1}, {0, 2}, {1, 2}});
	CHECK(strict_ideal(ptr(diagonal_algebra(2))).edges.empty());
	try {
		strict_ideal(ptr(full_algebra(2)));
		FAIL("expected not-triangular");
	} catch (const Error &e) {
		CHECK(e.code() == Errc::not_triangular);
	}
	CHECK(ideal_power(triangular_algebra(4), t3.edges, 1).size() == 3);
	auto t4 = ptr(triangular_algebra(4));
	auto s4 = strict_ideal(t4).edges;
	CHECK(ideal_power(*t4, s4, 3) == std::vector<MatrixUnit>{{0, 3}});
	CHECK(ideal_power(*t4, s4, 4).empty());
	CHECK(is_ideal(*t4, s4));
	CHECK_FALSE(is_ideal(*t4, {{1, 2}}));
}

TEST_CASE("lexicographic product")
{
	CHECK(lex_product(triangular_algebra(2), triangular_algebra(2)) == triangular_algebra(4));
	auto b = DigraphAlgebra::from_relation(3, reflexive(3, {{0, 1}, {1, 0}, {2, 0}, {2, 1}}));
	CHECK(lex_product(triangular_algebra(1), b) == b);
	auto td = lex_product(triangular_algebra(2), diagonal_algebra(2));
	CHECK(td.dimension() == 8);
	CHECK(lex_product(triangular_algebra(2), full_algebra(2)).dimension() == 12);
	CHECK_FALSE(lex_product(triangular_algebra(2), full_algebra(2)).is_triangular());
	CHECK_THROWS_AS(lex_product(full_algebra(2), triangular_algebra(2)), Error);
	// D₂ ⋆ T₂ by the membership rule: only i₁ = j₁ blocks survive.
	std::size_t dt = 0;
	auto d2 = diagonal_algebra(2), t2 = triangular_algebra(2);
	for (std::size_t i = 0; i < 4; ++i)
		for (std::size_t j = 0; j < 4; ++j)
			dt += (i / 2 == j / 2) ? t2.contains(i % 2, j % 2)
			                       : d2.contains(i / 2, j / 2);
	CHECK(dt == 6);
	CHECK(td.dimension() != dt);
	auto lab = lex_product(triangular_algebra(2).with_labels({{1}, {2}}),
	                       triangular_algebra(3).with_labels({{1}, {2}, {3}}));
	CHECK(lab.labels()[4] == MultiIndex{2, 2});
}

TEST_CASE("element arithmetic")
{
	auto t3 = ptr(triangular_algebra(3));
	auto e = [&](std::size_t i, std::size_t j) { return Element::unit(t3, {i - 1, j - 1}); };
	CHECK(e(1, 2) * e(2, 3) == e(1, 3));
	auto t2 = ptr(triangular_algebra(2));
	CHECK((Element::unit(t2, {0, 1}) * Element::unit(t2, {0, 1})).is_zero());
	CHECK((e(1, 1) + e(1, 2)) * (e(2, 2) + e(2, 3)) == e(1, 2) + e(1, 3));
	CHECK(Element::identity(t3) * e(1, 3) == e(1, 3));
	CHECK(power(e(1, 2) + e(2, 3), 2) == e(1, 3));
	CHECK(power(e(1, 2) + e(2, 3), 3).is_zero());
	CHECK(power(e(1, 2), 0) == Element::identity(t3));
	CHECK_THROWS_AS(e(2, 1), Error);
	Element x = e(1, 2);
	x -= e(1, 2);
	CHECK(x.is_zero());
	CHECK((Rational(1, 2) * e(1, 2)).coefficient({0, 1}) == Rational(1, 2));
	CHECK_THROWS_AS(e(1, 2) * Element::unit(t2, {0, 1}), Error);
}

TEST_CASE("combinatorial radical and semisimple quotient")
{
	for (std::size_t n = 1; n <= 6; ++n)
		CHECK(radical_dimension(triangular_algebra(n)) == n * (n - 1) / 2);
	CHECK(radical_combinatorial(ptr(full_algebra(3))).edges.empty());
	CHECK(semisimple_quotient(triangular_algebra(3)) == std::vector<std::size_t>{1, 1, 1});
	CHECK(semisimple_quotient(full_algebra(3)) == std::vector<std::size_t>{3});
	CHECK(semisimple_quotient(lex_product(triangular_algebra(2), full_algebra(2))) ==
	      std::vector<std::size_t>{2, 2});
}

TEST_CASE("stage radical formula")
{
	auto t2 = triangular_algebra(2);
	auto tt = stage_radical_formula(t2, t2);
	CHECK(tt.dimension() == 6);
	CHECK(tt.edges == radical_combinatorial(ptr(triangular_algebra(4))).edges);
	auto tm = stage_radical_formula(t2, full_algebra(2));
	CHECK(tm.dimension() == 4);
	CHECK(tm.edges ==
	      radical_combinatorial(ptr(lex_product(t2, full_algebra(2)))).edges);
	auto b = DigraphAlgebra::from_relation(3, reflexive(3, {{0, 1}, {1, 0}, {0, 2}, {1, 2}}));
	CHECK(stage_radical_formula(triangular_algebra(1), b).edges ==
	      radical_combinatorial(ptr(b)).edges);
}

TEST_CASE("trace oracle on small cases")
{
	CHECK(radical_trace_oracle(ptr(triangular_algebra(2))).size() == 1);
	CHECK(radical_trace_oracle(ptr(diagonal_algebra(3))).empty());
	CHECK(radical_trace_oracle(ptr(full_algebra(2))).empty());
	CHECK_THROWS_AS(radical_trace_oracle(ptr(triangular_algebra(7))), Error);
	CHECK(radical_trace_oracle(ptr(triangular_algebra(7)), 7).size() == 21);
}

TEST_CASE("trace oracle matches the combinatorial radical on all preorders up to 4")
{
	std::size_t counts[5] = {};
	for (std::size_t n = 1; n <= 4; ++n) {
		for (auto &a : all_preorders(n)) {
			++counts[n];
			auto p = ptr(a);
			std::vector<Element> comb;
			for (auto e : radical_combinatorial(p).edges)
				comb.push_back(Element::unit(p, e));
			CHECK(same_span(*p, radical_trace_oracle(p), comb));
		}
	}
	// Labelled preorder counts (OEIS A000798).
	CHECK(counts[1] == 1);
	CHECK(counts[2] == 4);
	CHECK(counts[3] == 29);
	CHECK(counts[4] == 355);
}

TEST_CASE("product identity and associativity")
{
	for (std::size_t n = 1; n <= 5; ++n)
		for (std::size_t m = 1; m <= 5; ++m)
			CHECK(lex_product(triangular_algebra(n), triangular_algebra(m)) ==
			      triangular_algebra(n * m));
	std::mt19937 rng(3);
	auto random_triangular = [&](std::size_t n) {
		std::vector<MatrixUnit> pairs;
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = i + 1; j < n; ++j)
				if (rng() % 2)
					pairs.push_back({i, j});
		return transitive_closure(n, pairs);
	};
	for (int t = 0; t < 30; ++t) {
		auto a = random_triangular(1 + rng() % 3), b = random_triangular(1 + rng() % 3);
		auto c = random_triangular(1 + rng() % 3);
		auto ab = lex_product(a, b);
		CHECK(lex_product(ab, c) == lex_product(a, lex_product(b, c)));
		ab.validate();
		CHECK(ab.is_triangular());
	}
}

TEST_CASE("linear algebra")
{
	RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
	CHECK(rank(m) == 2);
	auto ns = nullspace(m, 3);
	REQUIRE(ns.size() == 1);
	for (const auto &row : m) {
		Rational dot = 0;
		for (std::size_t j = 0; j < 3; ++j)
			dot += row[j] * ns[0][j];
		CHECK(dot == 0);
	}
	CHECK(nullspace({}, 2).size() == 2);
	CHECK(parse_rational("-6/4") == Rational(-3, 2));
	CHECK(to_string(parse_rational("4/2")) == "2");
}
