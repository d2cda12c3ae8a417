#include "lexalg/linalg.hpp"

#include <utility>

namespace lexalg {

std::vector<std::size_t> row_reduce(RationalMatrix &m)
{
	std::vector<std::size_t> pivots;
	if (m.empty())
		return pivots;
	const std::size_t rows = m.size();
	const std::size_t cols = m[0].size();
	std::size_t r = 0;
	for (std::size_t c = 0; c < cols && r < rows; ++c) {
		std::size_t p = r;
		while (p < rows && sgn(m[p][c]) == 0)
			++p;
		if (p == rows)
			continue;
		std::swap(m[p], m[r]);
		const Rational inv = 1 / m[r][c];
		for (auto &x : m[r])
			x *= inv;
		for (std::size_t i = 0; i < rows; ++i) {
			if (i == r || sgn(m[i][c]) == 0)
				continue;
			const Rational f = m[i][c];
			for (std::size_t j = c; j < cols; ++j)
				m[i][j] -= f * m[r][j];
		}
		pivots.push_back(c);
		++r;
	}
	return pivots;
}

std::size_t rank(RationalMatrix m) { return row_reduce(m).size(); }

RationalMatrix nullspace(RationalMatrix m, std::size_t cols)
{
	const auto pivots = row_reduce(m);
	std::vector<bool> is_pivot(cols, false);
	for (auto c : pivots)
		is_pivot[c] = true;
	RationalMatrix basis;
	for (std::size_t free = 0; free < cols; ++free) {
		if (is_pivot[free])
			continue;
		std::vector<Rational> v(cols, Rational(0));
		v[free] = 1;
		for (std::size_t r = 0; r < pivots.size(); ++r)
			v[pivots[r]] = -m[r][free];
		basis.push_back(std::move(v));
	}
	return basis;
}

} // namespace lexalg
