#include <doctest.h>

#include "lexalg/report.hpp"

#include <array>
#include <cstdio>
#include <sys/wait.h>

using namespace lexalg;

namespace {

struct Run {
	int code = -1;
	std::string out;
};

Run run_shell(const std::string &cmd)
{
	Run r;
	FILE *p = popen(cmd.c_str(), "r");
	REQUIRE(p);
	std::array<char, 4096> buf;
	std::size_t n;
	while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
		r.out.append(buf.data(), n);
	const int status = pclose(p);
	r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	return r;
}

Run run_cli(const std::string &args)
{
	return run_shell(std::string(LEXALG_CLI_PATH) + " " + args + " 2>/dev/null");
}

Run run_stdin(const std::string &input, const std::string &args)
{
	return run_shell("printf '%s' '" + input + "' | " + LEXALG_CLI_PATH + " " + args +
	                 " 2>/dev/null");
}

} // namespace

TEST_CASE("report envelope")
{
	auto j = cmd_stage("w[2]", 3, {});
	CHECK(j["command"] == "stage");
	CHECK(j["toolVersion"] == tool_version);
	CHECK(j["result"]["sizes"] == Json::array({2, 4, 8}));
	CHECK(j["result"]["edge_counts"] == Json::array({3, 10, 36}));
	std::vector<std::string> keys;
	for (auto it = j.begin(); it != j.end(); ++it)
		keys.push_back(it.key());
	CHECK(keys == std::vector<std::string>{"command", "input", "result", "toolVersion"});
}

TEST_CASE("command results")
{
	CHECK(cmd_stage("z[2]", 2, {})["result"]["sizes"] == Json::array({4, 16}));
	CHECK(cmd_radical("w[2]", 2, {})["result"]["limit_radical_dims"] == Json::array({1, 6}));
	CHECK(cmd_radical("z[2]", 2, {})["result"]["limit_radical_dims"] == Json::array({0, 0}));
	auto mixed = cmd_radical("w[2] + z[2]", 1, {});
	CHECK(mixed["result"]["limit_radical_dims"] == Json::array({16}));
	CHECK(mixed["result"]["stages"][0]["quotient_dim"] == 20);

	auto q = cmd_semisimple("q[2]")["result"];
	CHECK(q["semisimple"] == true);
	CHECK(q["elementary_decomposition"] == false);
	auto w = cmd_semisimple("w[2]")["result"];
	CHECK(w["semisimple"] == false);
	CHECK(w["elementary_decomposition"] == true);
	auto p = cmd_semisimple("1[2] + q[2]")["result"];
	CHECK(p["semisimple"] == false);
	CHECK(p["elementary_decomposition"] == false);
	CHECK(p["wois"]["head"] == "1[2]");

	CHECK(cmd_classify("w*[2] + w[2]", "z[2]")["result"]["isomorphic"] == true);
	CHECK(cmd_classify("q[2]", "q[3]")["result"]["isomorphic"] == false);
	CHECK(cmd_decompose("q[2]")["result"]["intervals"][0]["tag"] == "DenseSingletonField");
}

TEST_CASE("links report")
{
	auto z = cmd_links("z[2]", 3, 2, {})["result"];
	CHECK(z["strict_units"] == 6);
	CHECK(z["linked"] == 6);
	CHECK(z["radical"] == 0);
	auto w = cmd_links("w[2]", 4, 3, {})["result"];
	CHECK(w["linked"] == 0);
	CHECK(w["radical"] == w["strict_units"]);
	CHECK(w["units"][0]["link"] == "none within horizon");
	auto m = cmd_links("w[2] + z[2]", 2, 1, {})["result"];
	for (const auto &u : m["units"])
		CHECK(u["radical"] == u["link"].is_string());
	CHECK_THROWS_AS(cmd_links("w[2]", 2, 2, {}), Error);
}

TEST_CASE("relation and element round trips")
{
	auto a = DigraphAlgebra::from_relation(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}});
	CHECK(relation_from_json(relation_json(a)) == a);
	auto p = std::make_shared<const DigraphAlgebra>(a);
	auto x = Element::unit(p, {0, 1}, Rational(-3, 4)) + Element::unit(p, {2, 2});
	CHECK(element_from_json(element_json(x), p) == x);
	CHECK_THROWS_AS(relation_from_json(Json::parse(R"({"n":2,"edges":[[1,3]]})")), Error);
	CHECK_THROWS_AS(relation_from_json(Json::parse(R"({"edges":[]})")), Error);
	auto o = cmd_oracle(Json::parse(R"({"n":2,"edges":[[1,1],[2,2],[1,2]]})"))["result"];
	CHECK(o["radical_dimension"] == 1);
	CHECK(o["agrees"] == true);
	CHECK(rational_json(Rational(1, 3)) == "1/3");
	CHECK(rational_json(Rational(-2)) == -2);
}

TEST_CASE("error objects")
{
	try {
		parse_order("w[2] +");
	} catch (const std::exception &e) {
		auto j = error_json(e);
		CHECK(j["error"]["kind"] == "syntax");
		CHECK(j["error"]["position"] == 6);
	}
	auto b = error_json(BudgetError(16807, 4096));
	CHECK(b["error"]["n_F"] == 16807);
	CHECK(error_json(std::runtime_error("x"))["error"]["kind"] == "internal");
}

TEST_CASE("command line")
{
	auto ok = run_cli("stage --order 'w[2]' --depth 3");
	CHECK(ok.code == 0);
	CHECK(Json::parse(ok.out) == cmd_stage("w[2]", 3, {}));
	CHECK(run_cli("stage --order 'w[2]' --depth 3").out == ok.out);
	auto pretty = run_cli("--pretty stage --order 'w[2]' --depth 3");
	CHECK(Json::parse(pretty.out) == Json::parse(ok.out));
	CHECK(pretty.out != ok.out);

	auto budget = run_cli("stage --order 'w[7]' --depth 5");
	CHECK(budget.code == 2);
	CHECK(Json::parse(budget.out)["error"]["kind"] == "budget");
	CHECK(run_cli("stage --order 'w[7]' --depth 5 --budget 16807").code == 0);

	CHECK(run_cli("stage --order 'w['").code == 2);
	CHECK(run_cli("stage").code == 2);
	CHECK(run_cli("classify --order 'q[2]'").code == 2);
	CHECK(run_cli("classify --order 'q[2]' --order 'q[2]'").code == 0);
	CHECK(run_cli("links --order 'z[2]' --depth 3 --horizon 2").code == 0);
	CHECK(run_cli("semisimple --order 'w[2] + w*[2]'").code == 0);
	CHECK(run_cli("decompose --order 'w*[2] + w[2]'").code == 0);
	CHECK(run_cli("radical --order 'w[2]' --depth 2 --seed 5").code == 0);
	CHECK(run_cli("oracle --relation /nonexistent").code == 2);
	CHECK(run_stdin(R"({"n":2,"edges":[[1,1],[2,2],[2,1]]})", "oracle").code == 0);
	CHECK(run_stdin("not json", "oracle").code == 2);
	CHECK(run_stdin(R"({"n":2,"edges":[[1,2]]})", "oracle").code == 2);
}

TEST_CASE("budget from the environment reaches the command line")
{
	const std::string cli = LEXALG_CLI_PATH;
	CHECK(run_shell("LEXALG_BUDGET=3 " + cli + " stage --order 'w[2]' --depth 2").code == 2);
	CHECK(run_shell("LEXALG_BUDGET=3 " + cli + " stage --order 'w[2]' --depth 2 --budget 4")
	          .code == 0);
}
