#pragma once

// Finite digraph algebras: the span of the matrix units e_ij over a reflexive
// transitive relation on {0, ..., n-1}. Vertices are 0-based in code and
// 1-based in every serialized form.

#include "lexalg/error.hpp"
#include "lexalg/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace lexalg {

using MultiIndex = std::vector<int>;

struct MatrixUnit {
	std::size_t row = 0;
	std::size_t col = 0;

	auto operator<=>(const MatrixUnit &) const = default;
	bool is_diagonal() const { return row == col; }
};

/// Raised by from_relation with the first composable pair whose composite is
/// missing.
class NotTransitiveError : public Error {
  public:
	NotTransitiveError(MatrixUnit first, MatrixUnit second);

	MatrixUnit first() const { return first_; }
	MatrixUnit second() const { return second_; }

  private:
	MatrixUnit first_, second_;
};

class DigraphAlgebra {
  public:
	/// Validates reflexivity and transitivity; rejects rather than closes.
	static DigraphAlgebra from_relation(std::size_t n,
	                                    const std::vector<MatrixUnit> &pairs);

	/// Unchecked construction from a row bitmap; callers guarantee the
	/// preorder axioms.
	static DigraphAlgebra from_rows(std::size_t n, std::vector<std::uint64_t> rows,
	                                std::vector<MultiIndex> labels = {});

	std::size_t size() const { return n_; }
	bool contains(std::size_t i, std::size_t j) const
	{
		return (rows_[i * words_ + j / 64] >> (j % 64)) & 1u;
	}
	bool contains(MatrixUnit e) const { return contains(e.row, e.col); }
	bool is_triangular() const { return triangular_; }

	/// dim of the algebra, i.e. the number of edges.
	std::size_t dimension() const { return edge_count_; }
	std::vector<MatrixUnit> edges() const;

	const std::vector<MultiIndex> &labels() const { return labels_; }
	DigraphAlgebra with_labels(std::vector<MultiIndex> labels) const;

	/// Full axiom check, for algebras built through from_rows.
	void validate() const;

	/// Same n and relation; labels are ignored.
	bool operator==(const DigraphAlgebra &o) const
	{
		return n_ == o.n_ && rows_ == o.rows_;
	}

	const std::uint64_t *row_bits(std::size_t i) const { return rows_.data() + i * words_; }
	std::size_t words_per_row() const { return words_; }

  private:
	DigraphAlgebra() = default;
	void finish();

	std::size_t n_ = 0;
	std::size_t words_ = 0;
	std::vector<std::uint64_t> rows_;
	std::vector<MultiIndex> labels_;
	bool triangular_ = false;
	std::size_t edge_count_ = 0;
};

using AlgebraPtr = std::shared_ptr<const DigraphAlgebra>;

DigraphAlgebra triangular_algebra(std::size_t n);
DigraphAlgebra diagonal_algebra(std::size_t n);
DigraphAlgebra full_algebra(std::size_t n);

/// Reflexive transitive closure of an arbitrary relation.
DigraphAlgebra transitive_closure(std::size_t n, const std::vector<MatrixUnit> &pairs);

/// A ⋆ B on vertices (i, j) -> i * B.n + j. A must be triangular.
DigraphAlgebra lex_product(const DigraphAlgebra &a, const DigraphAlgebra &b);

// ---------------------------------------------------------------------------
// Elements

/// Exact linear combination of matrix units of one algebra. Zero coefficients
/// are never stored.
class Element {
  public:
	explicit Element(AlgebraPtr home) : home_(std::move(home)) {}

	static Element unit(AlgebraPtr home, MatrixUnit e, const Rational &c = 1);
	static Element identity(AlgebraPtr home);

	const AlgebraPtr &home() const { return home_; }
	const std::map<MatrixUnit, Rational> &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	void add(MatrixUnit e, const Rational &c);
	Rational coefficient(MatrixUnit e) const;

	Element &operator+=(const Element &o);
	Element &operator-=(const Element &o);
	Element &operator*=(const Rational &c);

	bool operator==(const Element &o) const;

  private:
	void check_home(const Element &o) const;

	AlgebraPtr home_;
	std::map<MatrixUnit, Rational> terms_;
};

Element operator+(Element a, const Element &b);
Element operator-(Element a, const Element &b);
Element operator*(const Rational &c, Element a);
Element multiply(const Element &x, const Element &y);
inline Element operator*(const Element &x, const Element &y) { return multiply(x, y); }
Element power(const Element &x, unsigned p);

// ---------------------------------------------------------------------------
// Ideals and the radical

struct Ideal {
	AlgebraPtr home;
	std::vector<MatrixUnit> edges; // sorted

	std::size_t dimension() const { return edges.size(); }
	bool contains(MatrixUnit e) const;
};

/// Closed under composition with relation edges on either side.
bool is_ideal(const DigraphAlgebra &home, const std::vector<MatrixUnit> &edges);

/// Products of k ideal edges; empty once k exceeds the nilpotency index.
std::vector<MatrixUnit> ideal_power(const DigraphAlgebra &home,
                                    const std::vector<MatrixUnit> &edges, unsigned k);

/// The maximal ideal disjoint from the diagonal: all i != j edges.
Ideal strict_ideal(AlgebraPtr a);

/// Edges with no reverse edge.
Ideal radical_combinatorial(AlgebraPtr a);
std::size_t radical_dimension(const DigraphAlgebra &a);

/// Sizes of the equivalence classes of the symmetric part, ascending.
std::vector<std::size_t> semisimple_quotient(const DigraphAlgebra &a);

/// Δ(a)⊗rad(b) ∪ a⁰⊗(all pairs of b) inside lex_product(a, b).
Ideal stage_radical_formula(const DigraphAlgebra &a, const DigraphAlgebra &b);

inline constexpr std::size_t default_oracle_cap = 6;

/// Basis of {x : tr(L_x L_y) = 0 for all y}, the radical in characteristic
/// zero, computed from the multiplication table alone.
std::vector<Element> radical_trace_oracle(AlgebraPtr a,
                                          std::size_t cap = default_oracle_cap);

/// Same span as vectors over the edge basis of `home`.
bool same_span(const DigraphAlgebra &home, const std::vector<Element> &a,
               const std::vector<Element> &b);

} // namespace lexalg
