#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "crossratio/cli.hpp"

using namespace crossratio;

namespace {

struct Run {
	int code;
	std::string out, err;
};

Run cli(std::vector<std::string> args) {
	std::ostringstream out, err;
	const int code = run_cli(args, out, err);
	return {code, out.str(), err.str()};
}

std::string last_line(const std::string& text) {
	std::string s = text;
	while (!s.empty() && s.back() == '\n')
		s.pop_back();
	return s.substr(s.rfind('\n') == std::string::npos ? 0 : s.rfind('\n') + 1);
}

std::string slurp(const std::filesystem::path& p) {
	std::ifstream in(p);
	return {std::istreambuf_iterator<char>(in), {}};
}

std::size_t count(const std::string& haystack, const std::string& needle) {
	std::size_t n = 0;
	for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1))
		++n;
	return n;
}

std::filesystem::path temp_path(const char* name) { return std::filesystem::temp_directory_path() / name; }

} // namespace

TEST_CASE("eval") {
	CHECK(cli({"eval", "--field", "rational", "2", "3", "1", "0"}).out == "3/4\n");
	CHECK(cli({"eval", "--field", "quaternion", "i", "j", "k", "0"}).out == "1/2+1/2i-1/2j-1/2k\n");
	CHECK(cli({"eval", "--field", "rational", "2", "2", "1", "0"}).out == "1\n");
	CHECK(cli({"--field", "rational", "eval", "inf", "3", "1", "0"}).out == "3/2\n");
	CHECK(cli({"eval", "--field", "rational", "2", "3", "1", "2"}).out == "inf\n");
	CHECK(cli({"eval", "--field", "gf:7", "2", "3", "1", "0"}).out == "6\n"); // 3/4 = 3·2 mod 7
	CHECK(cli({"eval", "--field", "quaternion", "-k", "j", "i", "0"}).code == 0);

	const Run bad_literal = cli({"eval", "--field", "rational", "2", "x", "1", "0"});
	CHECK(bad_literal.code == kExitParse);
	CHECK(bad_literal.err.find("parse error") != std::string::npos);
	CHECK(cli({"eval", "--field", "rational", "2", "3", "1"}).code == kExitParse);
	CHECK(cli({"eval", "--field", "gf:9", "2", "3", "1", "0"}).code == kExitParse);

	const Run three_equal = cli({"eval", "--field", "rational", "2", "2", "2", "0"});
	CHECK(three_equal.code == kExitPrecondition);
	CHECK(three_equal.err.find("no three of the points may be equal") != std::string::npos);
	CHECK(cli({"eval", "--field", "rational", "inf", "inf", "1", "0"}).code == kExitPrecondition);
}

TEST_CASE("solve") {
	CHECK(cli({"solve", "--field", "rational", "3/4", "2", "3", "1"}).out == "0\n");
	CHECK(cli({"solve", "--field", "rational", "1", "2", "3", "1"}).code == kExitPrecondition);
	CHECK(cli({"solve", "--field", "rational", "0", "2", "3", "1"}).code == kExitPrecondition);
	const Run at_infinity = cli({"solve", "--field", "rational", "1/2", "2", "3", "1"});
	CHECK(at_infinity.code == kExitInfiniteSolution);
	CHECK(at_infinity.out == "inf\n");

	// solve then eval reproduces R
	const Run d = cli({"solve", "--field", "quaternion", "1+i", "j", "k", "1/2-i"});
	REQUIRE(d.code == 0);
	std::string lit = d.out.substr(0, d.out.size() - 1);
	CHECK(cli({"eval", "--field", "quaternion", "j", "k", "1/2-i", lit}).out == "1+i\n");
}

TEST_CASE("construct") {
	const std::vector<std::string> base{"--field", "rational", "--O", "0,0", "--I", "1,0",
	                                    "--A", "2,0", "--B", "3,0", "--aux", "0,1"};
	auto with = [&](std::vector<std::string> head, std::vector<std::string> tail = {}) {
		head.insert(head.end(), base.begin(), base.end());
		head.insert(head.end(), tail.begin(), tail.end());
		return head;
	};
	const Run add = cli(with({"construct", "add"}));
	CHECK(add.code == 0);
	CHECK(last_line(add.out) == "5,0");
	CHECK(add.out.find("P1 = 2,1") != std::string::npos);
	CHECK(last_line(cli(with({"construct", "mul"})).out) == "6,0");

	const auto svg_path = temp_path("crossratio_test_construct.svg");
	std::filesystem::remove(svg_path);
	REQUIRE(cli(with({"construct", "mul"}, {"--svg", svg_path.string()})).code == 0);
	const std::string svg = slurp(svg_path);
	CHECK(svg.starts_with("<?xml"));
	CHECK(svg.find("<svg") != std::string::npos);
	CHECK(svg.find("viewBox=") != std::string::npos);
	CHECK(count(svg, "<title>parallel") == 2);
	CHECK(count(svg, "class=\"construction-line\"") >= 3);
	for (const char* label : {">O<", ">I<", ">A<", ">B<", ">B1<", ">P1<", ">C<"})
		CHECK(svg.find(label) != std::string::npos);
	CHECK(count(svg, "<circle") == 7);

	CHECK(cli({"construct", "add", "--field", "rational", "--O", "0,0", "--I", "1,0", "--A", "2,0", "--B", "3,0",
	           "--aux", "4,0"})
	          .code == kExitPrecondition);
	CHECK(cli({"construct", "add", "--field", "quaternion", "--O", "0,0", "--I", "1,0", "--A", "i,0", "--B", "j,0",
	           "--aux", "0,1", "--svg", temp_path("never.svg").string()})
	          .code == kExitPrecondition);
	CHECK(last_line(cli({"construct", "mul", "--field", "quaternion", "--O", "0,0", "--I", "1,0", "--A", "i,0", "--B",
	                     "j,0", "--aux", "0,1"})
	                    .out) == "k,0");
}

TEST_CASE("verify") {
	CHECK(cli({"verify", "--field", "gf:4"}).code == kExitParse);
	CHECK(cli({"verify", "--field", "rational", "--samples", "0"}).code == kExitParse);
	CHECK(cli({"verify", "--field", "gf:5", "--samples", "10", "--out", "/nonexistent/dir/report.json"}).code ==
	      kExitIo);

	const std::vector<std::string> args{"verify", "--field", "gf:7", "--seed", "3", "--samples", "40", "--format", "json"};
	const Run first = cli(args), second = cli(args);
	// The identities checked exactly as first formulated are false, so the run reports a failure.
	CHECK(first.code == kExitCheckFailed);
	nlohmann::json a = nlohmann::json::parse(first.out), b = nlohmann::json::parse(second.out);
	a.erase("timestamp");
	b.erase("timestamp");
	CHECK(a == b);
	CHECK(a.at("field") == "gf:7");
	CHECK(a.at("checks").size() > 30);

	const auto path = temp_path("crossratio_test_report.txt");
	REQUIRE(cli({"verify", "--field", "gf:5", "--samples", "10", "--out", path.string()}).code == kExitCheckFailed);
	const std::string text = slurp(path);
	CHECK(text.find("PASS  p1_inverse_law") != std::string::npos);
	CHECK(text.find("FAIL  p2_negation_law") != std::string::npos);
}

TEST_CASE("desargues") {
	const Run q = cli({"desargues", "--field", "quaternion", "--count", "200"});
	CHECK(q.code == 0);
	CHECK(q.out.starts_with("200/200 pass\n"));

	const Run r1 = cli({"desargues", "--field", "rational", "--count", "1", "--seed", "7"});
	const Run r2 = cli({"desargues", "--field", "rational", "--count", "1", "--seed", "7"});
	const Run r3 = cli({"desargues", "--field", "rational", "--count", "1", "--seed", "8"});
	CHECK(last_line(r1.out).starts_with("config hash: "));
	CHECK(last_line(r1.out) == last_line(r2.out));
	CHECK(last_line(r1.out) != last_line(r3.out));

	const Run concurrent = cli({"desargues", "--field", "gf:101", "--mode", "concurrent", "--count", "50"});
	CHECK(concurrent.out.starts_with("50/50 pass\n"));

	const Run tampered = cli({"desargues", "--field", "rational", "--count", "5", "--flip-C'"});
	CHECK(tampered.code == kExitCheckFailed);
	CHECK(tampered.out.starts_with("0/5 pass\n"));
	CHECK(tampered.err.find("hypothesis violated") != std::string::npos);
}
