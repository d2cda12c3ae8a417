// lexalg: command-line front end. Every command prints one JSON document.
// Exit codes: 0 success, 1 internal invariant violation, 2 user-input error.

#include "lexalg/error.hpp"
#include "lexalg/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>

namespace {

int emit(const lexalg::Json &j, bool pretty, int code)
{
	std::cout << (pretty ? j.dump(2) : j.dump()) << '\n';
	return code;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Lexicographic products of triangular algebras"};
	app.require_subcommand(1);

	bool pretty = false;
	std::string order;
	std::vector<std::string> orders;
	std::size_t depth = 2, horizon = 1, trials = 20, cap = lexalg::default_oracle_cap;
	std::uint64_t seed = 1, budget = 0;
	std::string relation_path = "-";

	app.add_flag("--pretty", pretty, "Indent JSON output");

	auto add_budget = [&](CLI::App *cmd) {
		cmd->add_option("--budget", budget,
		                "Largest allowed stage size n_F (default: $LEXALG_BUDGET or 4096)");
	};

	auto *stage = app.add_subcommand("stage", "Stage sizes and edge counts along the canonical chain");
	stage->add_option("--order", order, "Order expression, e.g. \"w*[2] + w[2]\"")->required();
	stage->add_option("--depth", depth, "Number of chain stages")->check(CLI::PositiveNumber);
	add_budget(stage);

	auto *radical = app.add_subcommand("radical", "Limit-radical and stage-radical dimensions per stage");
	radical->add_option("--order", order)->required();
	radical->add_option("--depth", depth)->check(CLI::PositiveNumber);
	radical->add_option("--seed", seed, "Seed for the nilpotency check (default 1)");
	radical->add_option("--trials", trials, "Random elements per nilpotency check (default 20)");
	add_budget(radical);

	auto *semisimple = app.add_subcommand("semisimple", "Semisimplicity and radical decomposition verdicts");
	semisimple->add_option("--order", order)->required();

	auto *classify = app.add_subcommand("classify", "Compare two orders' classification invariants");
	classify->add_option("--order", orders, "Give exactly two orders")->required();

	auto *links = app.add_subcommand("links", "Search links for the strict units of the first stage");
	links->add_option("--order", order)->required();
	links->add_option("--depth", depth)->check(CLI::PositiveNumber);
	links->add_option("--horizon", horizon, "Chain extensions to search (default 1)");
	add_budget(links);

	auto *decompose = app.add_subcommand("decompose", "Maximal interval decomposition");
	decompose->add_option("--order", order)->required();

	auto *oracle = app.add_subcommand("oracle", "Trace-form radical of a relation given as JSON");
	oracle->add_option("--relation", relation_path, "Relation JSON file, '-' for stdin");
	oracle->add_option("--cap", cap, "Vertex cap for the dense computation (default 6)");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		lexalg::Json err;
		err["error"] = {{"kind", "usage"}, {"message", e.what()}};
		err["toolVersion"] = lexalg::tool_version;
		return emit(err, pretty, 2);
	}

	try {
		lexalg::CommandOptions opt;
		opt.budget = budget ? budget : lexalg::budget_from_env();
		opt.seed = seed;
		opt.trials = trials;

		lexalg::Json out;
		if (*stage)
			out = lexalg::cmd_stage(order, depth, opt);
		else if (*radical)
			out = lexalg::cmd_radical(order, depth, opt);
		else if (*semisimple)
			out = lexalg::cmd_semisimple(order);
		else if (*classify) {
			if (orders.size() != 2)
				throw lexalg::Error(lexalg::Errc::precondition,
				                    "classify needs exactly two --order values");
			out = lexalg::cmd_classify(orders[0], orders[1]);
		} else if (*links)
			out = lexalg::cmd_links(order, depth, horizon, opt);
		else if (*decompose)
			out = lexalg::cmd_decompose(order);
		else if (*oracle) {
			std::string text;
			if (relation_path == "-") {
				text.assign(std::istreambuf_iterator<char>(std::cin), {});
			} else {
				std::ifstream in(relation_path);
				if (!in)
					throw lexalg::Error(lexalg::Errc::precondition,
					                    "cannot open " + relation_path);
				text.assign(std::istreambuf_iterator<char>(in), {});
			}
			out = lexalg::cmd_oracle(lexalg::Json::parse(text), cap);
		}
		return emit(out, pretty, 0);
	} catch (const lexalg::Error &e) {
		return emit(lexalg::error_json(e), pretty,
		            e.code() == lexalg::Errc::invariant ? 1 : 2);
	} catch (const nlohmann::json::exception &e) {
		return emit(lexalg::error_json(lexalg::Error(lexalg::Errc::syntax, e.what())),
		            pretty, 2);
	} catch (const std::exception &e) {
		return emit(lexalg::error_json(e), pretty, 1);
	}
}
