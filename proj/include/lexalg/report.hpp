#pragma once

// JSON forms of every value the CLI reads or writes, and the command
// reports themselves. Key order is insertion order so output is stable.

#include "lexalg/limit.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace lexalg {

using Json = nlohmann::ordered_json;

inline constexpr const char *tool_version = "0.1.0";

Json position_json(const Position &p);
Json rational_json(const Rational &q);
Json interval_json(const IntervalData &d);

/// {"n": int, "edges": [[i, j], ...], "labels": [...]} with 1-based vertices.
Json relation_json(const DigraphAlgebra &a);
DigraphAlgebra relation_from_json(const Json &j);

/// {"terms": [{"row", "col", "num", "den"}]}; with a stage, each term also
/// carries its row and column multi-indices.
Json element_json(const Element &x, const Stage *stage = nullptr);
Element element_from_json(const Json &j, AlgebraPtr home);

/// {"positions": [...], "mults": [...], "n_F": int}
Json stage_json(const Stage &f);

Json verdict_json(const RadicalVerdict &v);
Json link_json(const LinkRecord &r, const StageChain &chain);

struct CommandOptions {
	std::uint64_t budget = default_budget;
	std::uint64_t seed = 1;
	std::size_t trials = 20;
};

Json cmd_stage(const std::string &order, std::size_t depth, const CommandOptions &opt);
Json cmd_radical(const std::string &order, std::size_t depth, const CommandOptions &opt);
Json cmd_semisimple(const std::string &order);
Json cmd_classify(const std::string &order_a, const std::string &order_b);
Json cmd_links(const std::string &order, std::size_t depth, std::size_t horizon,
               const CommandOptions &opt);
Json cmd_decompose(const std::string &order);
Json cmd_oracle(const Json &relation, std::size_t cap = default_oracle_cap);

/// {"error": {"kind", "message", ...}} for a caught exception.
Json error_json(const std::exception &e);

} // namespace lexalg
