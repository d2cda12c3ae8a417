#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lexalg {

enum class Errc {
	syntax,
	invalid_multiplicity,
	invalid_order,
	invalid_position,
	not_reflexive,
	not_transitive,
	not_triangular,
	home_mismatch,
	size_cap,
	budget,
	unsupported_class,
	precondition,
	invariant,
};

const char *errc_name(Errc code);

// User-facing errors carry an Errc; Errc::invariant marks an internal bug.
class Error : public std::runtime_error {
  public:
	Error(Errc code, const std::string &msg)
	    : std::runtime_error(msg), code_(code)
	{}

	Errc code() const noexcept { return code_; }

  private:
	Errc code_;
};

class ParseError : public Error {
  public:
	ParseError(std::size_t pos, const std::string &msg)
	    : Error(Errc::syntax, msg + " at offset " + std::to_string(pos)),
	      pos_(pos)
	{}
	ParseError(Errc code, std::size_t pos, const std::string &msg)
	    : Error(code, msg + " at offset " + std::to_string(pos)), pos_(pos)
	{}

	std::size_t position() const noexcept { return pos_; }

  private:
	std::size_t pos_;
};

class BudgetError : public Error {
  public:
	BudgetError(std::uint64_t n_f, std::uint64_t budget)
	    : Error(Errc::budget, "stage size n_F = " + std::to_string(n_f) +
	                              " exceeds budget " + std::to_string(budget)),
	      n_f_(n_f), budget_(budget)
	{}

	std::uint64_t n_f() const noexcept { return n_f_; }
	std::uint64_t budget() const noexcept { return budget_; }

  private:
	std::uint64_t n_f_;
	std::uint64_t budget_;
};

} // namespace lexalg
