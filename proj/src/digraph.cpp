#include "lexalg/digraph.hpp"

#include "lexalg/linalg.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace lexalg {

namespace {

std::string pair_text(MatrixUnit e)
{
	return "(" + std::to_string(e.row + 1) + "," + std::to_string(e.col + 1) + ")";
}

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void set_bit(std::vector<std::uint64_t> &rows, std::size_t words, std::size_t i,
             std::size_t j)
{
	rows[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
}

} // namespace

NotTransitiveError::NotTransitiveError(MatrixUnit first, MatrixUnit second)
    : Error(Errc::not_transitive, "relation is not transitive: " + pair_text(first) +
                                      " and " + pair_text(second) + " present but (" +
                                      std::to_string(first.row + 1) + "," +
                                      std::to_string(second.col + 1) + ") missing"),
      first_(first), second_(second)
{}

// ---------------------------------------------------------------------------
// DigraphAlgebra

DigraphAlgebra DigraphAlgebra::from_relation(std::size_t n,
                                             const std::vector<MatrixUnit> &pairs)
{
	if (n == 0)
		throw Error(Errc::precondition, "digraph algebra needs at least one vertex");
	DigraphAlgebra a;
	a.n_ = n;
	a.words_ = words_for(n);
	a.rows_.assign(n * a.words_, 0);
	for (auto e : pairs) {
		if (e.row >= n || e.col >= n)
			throw Error(Errc::precondition, "pair " + pair_text(e) + " outside [" +
			                                    std::to_string(n) + "]^2");
		set_bit(a.rows_, a.words_, e.row, e.col);
	}
	for (std::size_t i = 0; i < n; ++i)
		if (!a.contains(i, i))
			throw Error(Errc::not_reflexive,
			            "relation is not reflexive: " + pair_text({i, i}) + " missing");
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			if (i == j || !a.contains(i, j))
				continue;
			for (std::size_t k = 0; k < n; ++k)
				if (k != j && a.contains(j, k) && !a.contains(i, k))
					throw NotTransitiveError({i, j}, {j, k});
		}
	a.finish();
	return a;
}

DigraphAlgebra DigraphAlgebra::from_rows(std::size_t n, std::vector<std::uint64_t> rows,
                                         std::vector<MultiIndex> labels)
{
	DigraphAlgebra a;
	a.n_ = n;
	a.words_ = words_for(n);
	if (rows.size() != n * a.words_)
		throw Error(Errc::invariant, "row bitmap has the wrong size");
	a.rows_ = std::move(rows);
	a.finish();
	if (!labels.empty())
		a = a.with_labels(std::move(labels));
	return a;
}

void DigraphAlgebra::finish()
{
	edge_count_ = 0;
	for (auto w : rows_)
		edge_count_ += static_cast<std::size_t>(std::popcount(w));
	triangular_ = true;
	for (std::size_t i = 0; i < n_ && triangular_; ++i)
		for (std::size_t j = i + 1; j < n_; ++j)
			if (contains(i, j) && contains(j, i)) {
				triangular_ = false;
				break;
			}
}

DigraphAlgebra DigraphAlgebra::with_labels(std::vector<MultiIndex> labels) const
{
	if (labels.size() != n_)
		throw Error(Errc::precondition, "label count differs from vertex count");
	DigraphAlgebra out = *this;
	out.labels_ = std::move(labels);
	return out;
}

std::vector<MatrixUnit> DigraphAlgebra::edges() const
{
	std::vector<MatrixUnit> out;
	out.reserve(edge_count_);
	for (std::size_t i = 0; i < n_; ++i)
		for (std::size_t j = 0; j < n_; ++j)
			if (contains(i, j))
				out.push_back({i, j});
	return out;
}

void DigraphAlgebra::validate() const
{
	for (std::size_t i = 0; i < n_; ++i)
		if (!contains(i, i))
			throw Error(Errc::not_reflexive,
			            "relation is not reflexive: " + pair_text({i, i}) + " missing");
	for (std::size_t i = 0; i < n_; ++i) {
		const auto *ri = row_bits(i);
		for (std::size_t j = 0; j < n_; ++j) {
			if (!contains(i, j))
				continue;
			const auto *rj = row_bits(j);
			for (std::size_t w = 0; w < words_; ++w)
				if (rj[w] & ~ri[w]) {
					const std::size_t k =
					    w * 64 + static_cast<std::size_t>(std::countr_zero(rj[w] & ~ri[w]));
					throw NotTransitiveError({i, j}, {j, k});
				}
		}
	}
}

DigraphAlgebra triangular_algebra(std::size_t n)
{
	if (n == 0)
		throw Error(Errc::precondition, "T_n needs n >= 1");
	const std::size_t w = words_for(n);
	std::vector<std::uint64_t> rows(n * w, 0);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i; j < n; ++j)
			set_bit(rows, w, i, j);
	return DigraphAlgebra::from_rows(n, std::move(rows));
}

DigraphAlgebra diagonal_algebra(std::size_t n)
{
	if (n == 0)
		throw Error(Errc::precondition, "D_n needs n >= 1");
	const std::size_t w = words_for(n);
	std::vector<std::uint64_t> rows(n * w, 0);
	for (std::size_t i = 0; i < n; ++i)
		set_bit(rows, w, i, i);
	return DigraphAlgebra::from_rows(n, std::move(rows));
}

DigraphAlgebra full_algebra(std::size_t n)
{
	if (n == 0)
		throw Error(Errc::precondition, "M_n needs n >= 1");
	const std::size_t w = words_for(n);
	std::vector<std::uint64_t> rows(n * w, 0);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			set_bit(rows, w, i, j);
	return DigraphAlgebra::from_rows(n, std::move(rows));
}

DigraphAlgebra transitive_closure(std::size_t n, const std::vector<MatrixUnit> &pairs)
{
	if (n == 0)
		throw Error(Errc::precondition, "relation needs at least one vertex");
	const std::size_t w = words_for(n);
	std::vector<std::uint64_t> rows(n * w, 0);
	for (std::size_t i = 0; i < n; ++i)
		set_bit(rows, w, i, i);
	for (auto e : pairs) {
		if (e.row >= n || e.col >= n)
			throw Error(Errc::precondition, "pair " + pair_text(e) + " out of range");
		set_bit(rows, w, e.row, e.col);
	}
	// Warshall over row bitsets.
	for (std::size_t k = 0; k < n; ++k)
		for (std::size_t i = 0; i < n; ++i)
			if ((rows[i * w + k / 64] >> (k % 64)) & 1u)
				for (std::size_t x = 0; x < w; ++x)
					rows[i * w + x] |= rows[k * w + x];
	return DigraphAlgebra::from_rows(n, std::move(rows));
}

DigraphAlgebra lex_product(const DigraphAlgebra &a, const DigraphAlgebra &b)
{
	if (!a.is_triangular())
		throw Error(Errc::not_triangular, "first factor of a lexicographic product "
		                                  "must be triangular");
	const std::size_t bn = b.size();
	const std::size_t n = a.size() * bn;
	const std::size_t w = words_for(n);
	std::vector<std::uint64_t> rows(n * w, 0);
	for (std::size_t i1 = 0; i1 < a.size(); ++i1)
		for (std::size_t i2 = 0; i2 < bn; ++i2) {
			const std::size_t r = i1 * bn + i2;
			for (std::size_t j1 = 0; j1 < a.size(); ++j1) {
				if (i1 == j1) {
					for (std::size_t j2 = 0; j2 < bn; ++j2)
						if (b.contains(i2, j2))
							set_bit(rows, w, r, j1 * bn + j2);
				} else if (a.contains(i1, j1)) {
					for (std::size_t j2 = 0; j2 < bn; ++j2)
						set_bit(rows, w, r, j1 * bn + j2);
				}
			}
		}
	std::vector<MultiIndex> labels;
	if (!a.labels().empty() && !b.labels().empty()) {
		for (std::size_t i1 = 0; i1 < a.size(); ++i1)
			for (std::size_t i2 = 0; i2 < bn; ++i2) {
				MultiIndex l = a.labels()[i1];
				l.insert(l.end(), b.labels()[i2].begin(), b.labels()[i2].end());
				labels.push_back(std::move(l));
			}
	}
	return DigraphAlgebra::from_rows(n, std::move(rows), std::move(labels));
}

// ---------------------------------------------------------------------------
// Element

Element Element::unit(AlgebraPtr home, MatrixUnit e, const Rational &c)
{
	Element x(std::move(home));
	x.add(e, c);
	return x;
}

Element Element::identity(AlgebraPtr home)
{
	Element x(home);
	for (std::size_t i = 0; i < home->size(); ++i)
		x.terms_.emplace(MatrixUnit{i, i}, Rational(1));
	return x;
}

void Element::add(MatrixUnit e, const Rational &c)
{
	if (e.row >= home_->size() || e.col >= home_->size() || !home_->contains(e))
		throw Error(Errc::precondition,
		            "matrix unit " + pair_text(e) + " is not in the algebra");
	if (sgn(c) == 0)
		return;
	auto [it, inserted] = terms_.emplace(e, c);
	if (!inserted) {
		it->second += c;
		if (sgn(it->second) == 0)
			terms_.erase(it);
	}
}

Rational Element::coefficient(MatrixUnit e) const
{
	auto it = terms_.find(e);
	return it == terms_.end() ? Rational(0) : it->second;
}

void Element::check_home(const Element &o) const
{
	if (home_ != o.home_ && !(*home_ == *o.home_))
		throw Error(Errc::home_mismatch, "elements live in different algebras");
}

Element &Element::operator+=(const Element &o)
{
	check_home(o);
	for (const auto &[e, c] : o.terms_)
		add(e, c);
	return *this;
}

Element &Element::operator-=(const Element &o)
{
	check_home(o);
	for (const auto &[e, c] : o.terms_)
		add(e, -c);
	return *this;
}

Element &Element::operator*=(const Rational &c)
{
	if (sgn(c) == 0) {
		terms_.clear();
		return *this;
	}
	for (auto &[e, v] : terms_)
		v *= c;
	return *this;
}

bool Element::operator==(const Element &o) const
{
	return (home_ == o.home_ || *home_ == *o.home_) && terms_ == o.terms_;
}

Element operator+(Element a, const Element &b) { return a += b; }
Element operator-(Element a, const Element &b) { return a -= b; }
Element operator*(const Rational &c, Element a) { return a *= c; }

Element multiply(const Element &x, const Element &y)
{
	if (x.home() != y.home() && !(*x.home() == *y.home()))
		throw Error(Errc::home_mismatch, "elements live in different algebras");
	std::map<std::size_t, std::vector<std::pair<std::size_t, const Rational *>>> by_row;
	for (const auto &[e, c] : y.terms())
		by_row[e.row].emplace_back(e.col, &c);
	Element out(x.home());
	for (const auto &[e, c] : x.terms()) {
		auto it = by_row.find(e.col);
		if (it == by_row.end())
			continue;
		for (const auto &[col, cy] : it->second)
			out.add({e.row, col}, c * *cy);
	}
	return out;
}

Element power(const Element &x, unsigned p)
{
	if (p == 0)
		return Element::identity(x.home());
	Element out = x;
	for (unsigned i = 1; i < p; ++i)
		out = multiply(out, x);
	return out;
}

// ---------------------------------------------------------------------------
// Ideals and the radical

bool Ideal::contains(MatrixUnit e) const
{
	return std::binary_search(edges.begin(), edges.end(), e);
}

namespace {

std::vector<std::uint64_t> edge_bits(const DigraphAlgebra &home,
                                     const std::vector<MatrixUnit> &edges)
{
	const std::size_t w = home.words_per_row();
	std::vector<std::uint64_t> bits(home.size() * w, 0);
	for (auto e : edges)
		set_bit(bits, w, e.row, e.col);
	return bits;
}

bool bit(const std::vector<std::uint64_t> &bits, std::size_t w, std::size_t i, std::size_t j)
{
	return (bits[i * w + j / 64] >> (j % 64)) & 1u;
}

} // namespace

bool is_ideal(const DigraphAlgebra &home, const std::vector<MatrixUnit> &edges)
{
	const std::size_t n = home.size();
	const std::size_t w = home.words_per_row();
	const auto bits = edge_bits(home, edges);
	for (auto e : edges) {
		if (!home.contains(e))
			return false;
		for (std::size_t k = 0; k < n; ++k) {
			if (home.contains(e.col, k) && !bit(bits, w, e.row, k))
				return false;
			if (home.contains(k, e.row) && !bit(bits, w, k, e.col))
				return false;
		}
	}
	return true;
}

std::vector<MatrixUnit> ideal_power(const DigraphAlgebra &home,
                                    const std::vector<MatrixUnit> &edges, unsigned k)
{
	if (k == 0)
		throw Error(Errc::precondition, "ideal power needs k >= 1");
	const std::size_t n = home.size();
	const std::size_t w = home.words_per_row();
	const auto base = edge_bits(home, edges);
	auto cur = base;
	for (unsigned step = 1; step < k; ++step) {
		std::vector<std::uint64_t> next(n * w, 0);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				if (bit(cur, w, i, j))
					for (std::size_t x = 0; x < w; ++x)
						next[i * w + x] |= base[j * w + x];
		cur = std::move(next);
	}
	std::vector<MatrixUnit> out;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			if (bit(cur, w, i, j))
				out.push_back({i, j});
	return out;
}

Ideal strict_ideal(AlgebraPtr a)
{
	if (!a->is_triangular())
		throw Error(Errc::not_triangular,
		            "the off-diagonal part of a non-triangular algebra is not an ideal");
	Ideal out{a, {}};
	for (auto e : a->edges())
		if (!e.is_diagonal())
			out.edges.push_back(e);
	return out;
}

Ideal radical_combinatorial(AlgebraPtr a)
{
	Ideal out{a, {}};
	for (auto e : a->edges())
		if (!a->contains(e.col, e.row))
			out.edges.push_back(e);
	return out;
}

std::size_t radical_dimension(const DigraphAlgebra &a)
{
	std::size_t count = 0;
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; j < a.size(); ++j)
			if (a.contains(i, j) && !a.contains(j, i))
				++count;
	return count;
}

std::vector<std::size_t> semisimple_quotient(const DigraphAlgebra &a)
{
	const std::size_t n = a.size();
	std::vector<bool> seen(n, false);
	std::vector<std::size_t> sizes;
	for (std::size_t i = 0; i < n; ++i) {
		if (seen[i])
			continue;
		std::size_t size = 0;
		for (std::size_t j = i; j < n; ++j)
			if (a.contains(i, j) && a.contains(j, i)) {
				seen[j] = true;
				++size;
			}
		sizes.push_back(size);
	}
	std::sort(sizes.begin(), sizes.end());
	return sizes;
}

Ideal stage_radical_formula(const DigraphAlgebra &a, const DigraphAlgebra &b)
{
	auto home = std::make_shared<const DigraphAlgebra>(lex_product(a, b));
	const std::size_t bn = b.size();
	Ideal out{home, {}};
	for (std::size_t i1 = 0; i1 < a.size(); ++i1)
		for (std::size_t i2 = 0; i2 < bn; ++i2)
			for (std::size_t j1 = 0; j1 < a.size(); ++j1)
				for (std::size_t j2 = 0; j2 < bn; ++j2) {
					const bool diag_rad =
					    i1 == j1 && b.contains(i2, j2) && !b.contains(j2, i2);
					const bool strict = i1 != j1 && a.contains(i1, j1);
					if (diag_rad || strict)
						out.edges.push_back({i1 * bn + i2, j1 * bn + j2});
				}
	std::sort(out.edges.begin(), out.edges.end());
	return out;
}

std::vector<Element> radical_trace_oracle(AlgebraPtr a, std::size_t cap)
{
	if (a->size() > cap)
		throw Error(Errc::size_cap, "trace oracle limited to " + std::to_string(cap) +
		                                " vertices, got " + std::to_string(a->size()));
	const auto basis = a->edges();
	const std::size_t m = basis.size();
	std::map<MatrixUnit, std::size_t> index;
	for (std::size_t i = 0; i < m; ++i)
		index[basis[i]] = i;

	// left[x] is the matrix of y -> e_x y in the edge basis.
	std::vector<RationalMatrix> left(m, RationalMatrix(m, std::vector<Rational>(m, 0)));
	for (std::size_t x = 0; x < m; ++x)
		for (std::size_t y = 0; y < m; ++y) {
			const Element prod = Element::unit(a, basis[x]) * Element::unit(a, basis[y]);
			for (const auto &[e, c] : prod.terms())
				left[x][index.at(e)][y] += c;
		}

	RationalMatrix gram(m, std::vector<Rational>(m, 0));
	for (std::size_t x = 0; x < m; ++x)
		for (std::size_t y = x; y < m; ++y) {
			Rational tr = 0;
			for (std::size_t r = 0; r < m; ++r)
				for (std::size_t s = 0; s < m; ++s)
					if (sgn(left[x][r][s]) && sgn(left[y][s][r]))
						tr += left[x][r][s] * left[y][s][r];
			gram[x][y] = gram[y][x] = tr;
		}

	std::vector<Element> out;
	for (const auto &v : nullspace(gram, m)) {
		Element x(a);
		for (std::size_t i = 0; i < m; ++i)
			x.add(basis[i], v[i]);
		out.push_back(std::move(x));
	}
	return out;
}

bool same_span(const DigraphAlgebra &home, const std::vector<Element> &a,
               const std::vector<Element> &b)
{
	const auto basis = home.edges();
	std::map<MatrixUnit, std::size_t> index;
	for (std::size_t i = 0; i < basis.size(); ++i)
		index[basis[i]] = i;
	auto rows = [&](const std::vector<Element> &xs) {
		RationalMatrix m;
		for (const auto &x : xs) {
			std::vector<Rational> v(basis.size(), Rational(0));
			for (const auto &[e, c] : x.terms())
				v[index.at(e)] = c;
			m.push_back(std::move(v));
		}
		return m;
	};
	auto ma = rows(a);
	auto mb = rows(b);
	const std::size_t ra = rank(ma);
	const std::size_t rb = rank(mb);
	auto both = ma;
	both.insert(both.end(), mb.begin(), mb.end());
	return ra == rb && rank(both) == ra;
}

} // namespace lexalg
