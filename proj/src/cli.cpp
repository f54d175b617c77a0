#include "crossratio/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "crossratio/literal.hpp"
#include "crossratio/plane.hpp"
#include "crossratio/random.hpp"
#include "crossratio/ratio.hpp"
#include "crossratio/svg.hpp"
#include "crossratio/verify.hpp"

namespace crossratio {

namespace {

struct CliConfig {
	std::string field = "rational";
	std::uint64_t seed = 42;
	std::uint64_t samples = 1000;
	std::string format = "text";
	std::string out_path;
};

struct EvalArgs {
	std::vector<std::string> literals;
};

struct ConstructArgs {
	std::string op;
	std::string o = "0,0", i = "1,0", a, b, aux;
	std::string svg_path;
};

struct DesarguesArgs {
	std::uint64_t count = 200;
	std::string mode = "parallel";
	bool flip_c = false;
};

// Writes `text` to --out when given, else to `out`.
int emit(const CliConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
	if (cfg.out_path.empty()) {
		out << text;
		return kExitOk;
	}
	std::ofstream file(cfg.out_path);
	if (!(file << text)) {
		err << "error: cannot write " << cfg.out_path << "\n";
		return kExitIo;
	}
	return kExitOk;
}

int cmd_eval(const CliConfig& cfg, const EvalArgs& args, std::ostream& out, std::ostream& err) {
	const Field field = Field::parse(cfg.field);
	std::vector<ExtendedPoint> pts;
	for (const auto& lit : args.literals)
		pts.push_back(parse_extended(field, lit));
	return emit(cfg, format(cross_ratio(pts[0], pts[1], pts[2], pts[3])) + "\n", out, err);
}

int cmd_solve(const CliConfig& cfg, const EvalArgs& args, std::ostream& out, std::ostream& err) {
	const Field field = Field::parse(cfg.field);
	std::vector<FieldElement> xs;
	for (const auto& lit : args.literals)
		xs.push_back(parse_element(field, lit));
	return emit(cfg, format(solve_fourth_point(xs[0], xs[1], xs[2], xs[3])) + "\n", out, err);
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
	const Field field = Field::parse(cfg.field);
	const VerificationReport report = run_suite(field, cfg.seed, cfg.samples);
	const std::string text = cfg.format == "json" ? to_json(report).dump(2) + "\n" : to_text(report);
	if (int rc = emit(cfg, text, out, err); rc != kExitOk)
		return rc;
	return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int cmd_construct(const CliConfig& cfg, const ConstructArgs& args, std::ostream& out, std::ostream& err) {
	const Field field = Field::parse(cfg.field);
	const PlanePoint o = parse_point(field, args.o), i = parse_point(field, args.i);
	const PlanePoint a = parse_point(field, args.a), b = parse_point(field, args.b);
	const PlanePoint aux = parse_point(field, args.aux);
	if (!args.svg_path.empty() && field.kind() != FieldKind::rational) {
		err << "error: --svg is only available for the rational field\n";
		return kExitPrecondition;
	}

	ConstructionTrace trace =
		args.op == "add" ? trace_geometric_add(o, i, a, b, aux) : trace_geometric_mul(o, i, a, b, aux);

	std::ostringstream text;
	for (std::size_t n = 0; n < trace.steps.size(); ++n)
		text << "step " << n + 1 << ": " << trace.steps[n].description << ": " << format(trace.steps[n].line) << "\n";
	text << "P1 = " << format(trace.p1) << "\n";
	text << "C = " << (args.op == "add" ? "A+B" : "A*B") << " (coordinate " << format(coordinatize(o, i, trace.result))
	     << ")\n";
	text << format(trace.result) << "\n";

	if (!args.svg_path.empty()) {
		std::ofstream file(args.svg_path);
		if (!(file << render_construction_svg({o, i, a, b, aux, trace}))) {
			err << "error: cannot write " << args.svg_path << "\n";
			return kExitIo;
		}
	}
	return emit(cfg, text.str(), out, err);
}

int cmd_desargues(const CliConfig& cfg, const DesarguesArgs& args, std::ostream& out, std::ostream& err) {
	const Field field = Field::parse(cfg.field);
	const PerspectiveMode mode =
		args.mode == "concurrent" ? PerspectiveMode::center_point : PerspectiveMode::parallel_axis;
	std::uint64_t passed = 0, generation_failures = 0, violations = 0;
	std::uint64_t digest = hash_name(field.name());
	for (std::uint64_t n = 0; n < args.count; ++n) {
		std::optional<DesarguesConfig> generated;
		try {
			generated = generate_desargues_config(field, derive_seed({cfg.seed, n}), mode);
		} catch (const GenerationFailure&) {
			++generation_failures;
			continue;
		}
		DesarguesConfig& config = *generated;
		if (args.flip_c) // reflect C' through B': stays on B'C', leaves the perspective lines
			config.c2 = PlanePoint(config.b2.x + config.b2.x - config.c2.x, config.b2.y + config.b2.y - config.c2.y);
		for (const auto* p : {&config.a, &config.b, &config.c, &config.a2, &config.b2, &config.c2})
			digest = derive_seed({digest, hash_name(format(*p))});
		try {
			if (check_desargues(config))
				++passed;
		} catch (const HypothesisViolation& v) {
			++violations;
			if (violations == 1)
				err << "config " << n << ": " << v.what() << "\n";
		}
	}
	std::ostringstream text;
	text << passed << "/" << args.count << " pass\n";
	if (violations)
		text << violations << " hypothesis violations\n";
	if (generation_failures)
		text << generation_failures << " generation failures\n";
	text << "config hash: " << std::hex << std::setw(16) << std::setfill('0') << digest << "\n";
	if (int rc = emit(cfg, text.str(), out, err); rc != kExitOk)
		return rc;
	return passed == args.count ? kExitOk : kExitCheckFailed;
}

} // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
	CLI::App app{"Exact cross-ratios on a line over a skew field, and the Desargues plane behind them", "crossratio"};
	app.require_subcommand(1);

	CliConfig cfg;
	app.add_option("--field", cfg.field, "rational | gf:P | quaternion");
	app.add_option("--seed", cfg.seed, "random seed");
	app.add_option("--samples", cfg.samples, "samples per check")->check(CLI::PositiveNumber);
	app.add_option("--format", cfg.format, "text | json")->check(CLI::IsMember({"text", "json"}));
	app.add_option("--out", cfg.out_path, "write output to PATH");

	EvalArgs eval_args, solve_args;
	auto* eval = app.add_subcommand("eval", "cross-ratio c_r(A,B;C,D); one argument may be 'inf'");
	eval->add_option("points", eval_args.literals, "A B C D")->expected(4)->required();

	auto* solve = app.add_subcommand("solve", "the point D with c_r(A,B;C,D) = R");
	solve->add_option("values", solve_args.literals, "R A B C")->expected(4)->required();

	auto* verify = app.add_subcommand("verify", "run every identity check over a field");

	ConstructArgs construct_args;
	auto* construct = app.add_subcommand("construct", "trace the ruler construction of A+B or A*B on line OI");
	construct->add_option("op", construct_args.op, "add | mul")->required()->check(CLI::IsMember({"add", "mul"}));
	construct->add_option("--O", construct_args.o, "point O as x,y");
	construct->add_option("--I", construct_args.i, "point I as x,y");
	construct->add_option("--A", construct_args.a, "point A as x,y")->required();
	construct->add_option("--B", construct_args.b, "point B as x,y")->required();
	construct->add_option("--aux", construct_args.aux, "auxiliary point B1 as x,y")->required();
	construct->add_option("--svg", construct_args.svg_path, "also draw the construction to PATH");

	DesarguesArgs desargues_args;
	auto* desargues = app.add_subcommand("desargues", "generate and check Desargues configurations");
	desargues->add_option("--count", desargues_args.count, "number of configurations")->check(CLI::PositiveNumber);
	desargues->add_option("--mode", desargues_args.mode, "parallel | concurrent")
		->check(CLI::IsMember({"parallel", "concurrent"}));
	desargues->add_flag("--flip-c-prime", desargues_args.flip_c, "tamper with C' (negative control)");

	for (auto* sub : {eval, solve, verify, construct, desargues})
		sub->fallthrough();

	// Literals such as "-k" or "-1/2" are values, not flags; "--flip-C'" is an alias.
	std::vector<std::string> args;
	for (const auto& a : raw_args) {
		if (a == "--flip-C'")
			args.emplace_back("--flip-c-prime");
		else if (a.size() > 1 && a[0] == '-' && a[1] != '-')
			args.push_back(" " + a);
		else
			args.push_back(a);
	}
	std::reverse(args.begin(), args.end());

	try {
		app.parse(args);
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return kExitOk;
	} catch (const CLI::ParseError& e) {
		err << "error: " << e.what() << "\n";
		return kExitParse;
	}

	try {
		if (*eval)
			return cmd_eval(cfg, eval_args, out, err);
		if (*solve)
			return cmd_solve(cfg, solve_args, out, err);
		if (*verify)
			return cmd_verify(cfg, out, err);
		if (*construct)
			return cmd_construct(cfg, construct_args, out, err);
		return cmd_desargues(cfg, desargues_args, out, err);
	} catch (const ParseError& e) {
		err << "parse error: " << e.what() << "\n";
		return kExitParse;
	} catch (const InvalidModulus& e) {
		err << "config error: " << e.what() << "\n";
		return kExitParse;
	} catch (const InfiniteSolution& e) {
		out << "inf\n";
		err << "infinite solution: " << e.what() << "\n";
		return kExitInfiniteSolution;
	} catch (const Error& e) {
		err << "precondition violated: " << e.what() << "\n";
		return kExitPrecondition;
	}
}

} // namespace crossratio
