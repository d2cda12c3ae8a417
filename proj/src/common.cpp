#include "lexalg/error.hpp"
#include "lexalg/rational.hpp"

namespace lexalg {

const char *errc_name(Errc code)
{
	switch (code) {
	case Errc::syntax: return "syntax";
	case Errc::invalid_multiplicity: return "invalid_multiplicity";
	case Errc::invalid_order: return "invalid_order";
	case Errc::invalid_position: return "invalid_position";
	case Errc::not_reflexive: return "not_reflexive";
	case Errc::not_transitive: return "not_transitive";
	case Errc::not_triangular: return "not_triangular";
	case Errc::home_mismatch: return "home_mismatch";
	case Errc::size_cap: return "size_cap";
	case Errc::budget: return "budget";
	case Errc::unsupported_class: return "unsupported_class";
	case Errc::precondition: return "precondition";
	case Errc::invariant: return "invariant";
	}
	return "unknown";
}

Rational parse_rational(const std::string &text)
{
	Rational q;
	if (q.set_str(text, 10) != 0 || q.get_den() == 0)
		throw Error(Errc::syntax, "malformed rational '" + text + "'");
	q.canonicalize();
	return q;
}

} // namespace lexalg
