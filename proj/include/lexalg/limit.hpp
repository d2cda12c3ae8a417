#pragma once

// Limit-level questions about A(Ω, ν) answered from the order data: radical
// membership, semisimplicity, elementary radical decomposition, plus link
// search and nilpotency checks at finite stages.

#include "lexalg/tower.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lexalg {

/// Number of leading stage slots whose positions lie in the maximal
/// well-ordered initial segment Ω₁.
std::size_t head_slots(const Stage &f);

/// n₁ = n_{F∩Ω₁} and n₂ = n_{F∩Ω₂}.
std::pair<std::size_t, std::size_t> stage_split(const Stage &f);

struct RadicalVerdict {
	bool member = false;
	/// First position where row and column differ; empty for diagonal units.
	std::optional<Position> first_difference;
	/// Non-members: the C₁ diagonal entries over F∩Ω₁ and the A₂ unit over
	/// F∩Ω₂ (both 1-based multi-indices).
	MultiIndex head;
	MultiIndex row_tail;
	MultiIndex col_tail;
};

RadicalVerdict limit_radical_member(const Stage &f, MatrixUnit e);
bool in_limit_radical(const Stage &f, const Element &x);

std::size_t limit_radical_dimension(const Stage &f);

bool is_semisimple(const WeightedOrder &w);
bool has_elementary_radical_decomposition(const WeightedOrder &w);

struct LinkRecord {
	std::size_t stage_index = 0;
	MatrixUnit link;             // f = e_{K,L} at the stage
	MultiIndex range_witness;    // K: lift of the column, ff* = e_KK ≤ e*e
	MultiIndex domain_witness;   // L: lift of the row, f*f = e_LL ≤ ee*
	bool canonical = false;      // built by the one-new-position construction
};

/// Whether `f` (a unit of `to`) is a link for `e` (a unit of `from`).
bool is_link(const Stage &from, const Stage &to, MatrixUnit e, MatrixUnit f);

enum class LinkSearch { canonical_first, exhaustive };

std::optional<LinkRecord> find_link(const StageChain &chain, std::size_t start,
                                    MatrixUnit e, std::size_t horizon,
                                    LinkSearch mode = LinkSearch::canonical_first);

/// Image in the stage of an element of the strict part of the first slot's
/// factor: Σ c_ij e_ij ⊗ 1.
Element first_factor_image(const Stage &f, const std::map<MatrixUnit, Rational> &terms);

/// Inverse of first_factor_image; nullopt when `a` is not of that form or is
/// zero.
std::optional<std::map<MatrixUnit, Rational>> first_factor_preimage(const Stage &f,
                                                                    const Element &a);

/// Seeded element with coefficients in {-2, ..., 2} on every stage unit.
Element random_element(const Stage &f, std::uint64_t seed);

/// Checks (ab)^p == 0 for `trials` seeded random b, p = first slot's size.
/// Throws Errc::precondition when a is not a nonzero strict element of the
/// first slot's factor.
bool nilpotency_check(const Stage &f, const Element &a, std::size_t trials,
                      std::uint64_t seed);

/// First seeded random b with (ab)^exponent != 0 among `trials` tries.
std::optional<Element> nilpotency_witness(const Stage &f, const Element &a,
                                          unsigned exponent, std::size_t trials,
                                          std::uint64_t seed);

struct QuotientReport {
	std::size_t n1 = 0, n2 = 0;
	std::size_t stage_dim = 0;
	std::size_t radical_dim = 0;       // stage ∩ limit radical
	std::size_t quotient_dim = 0;      // stage ∩ (C₁ ⊗ A₂)
	std::size_t stage_radical_dim = 0; // radical of the stage algebra itself
	bool stage_radical_strictly_larger = false;
};

QuotientReport quotient_structure(const Stage &f);

/// Basis labelling of the two complementary pieces.
std::vector<MatrixUnit> limit_radical_units(const Stage &f);
std::vector<MatrixUnit> quotient_units(const Stage &f);

} // namespace lexalg
