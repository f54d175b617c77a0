#include "crossratio/literal.hpp"

#include <cctype>

namespace crossratio {

namespace {

std::string strip_whitespace(std::string_view text) {
	std::string out;
	for (char ch : text)
		if (!std::isspace(static_cast<unsigned char>(ch)))
			out.push_back(ch);
	return out;
}

class Cursor {
public:
	explicit Cursor(std::string text) : text_(std::move(text)) {}

	bool done() const { return pos_ == text_.size(); }
	char peek() const { return done() ? '\0' : text_[pos_]; }
	bool accept(char ch) {
		if (peek() != ch)
			return false;
		++pos_;
		return true;
	}
	std::string digits() {
		std::size_t start = pos_;
		while (std::isdigit(static_cast<unsigned char>(peek())))
			++pos_;
		return text_.substr(start, pos_ - start);
	}
	[[noreturn]] void fail(const std::string& what) const {
		throw ParseError(what + " in literal '" + text_ + "' at offset " + std::to_string(pos_));
	}

private:
	std::string text_;
	std::size_t pos_ = 0;
};

// digits ('/' digits)?. The caller handles the sign. Empty optional when no digits.
std::optional<Rational> unsigned_rational(Cursor& cur) {
	std::string num = cur.digits();
	if (num.empty())
		return std::nullopt;
	Rational q;
	q.get_num() = mpz_class(num);
	if (cur.accept('/')) {
		std::string den = cur.digits();
		if (den.empty())
			cur.fail("missing denominator");
		q.get_den() = mpz_class(den);
		if (q.get_den() == 0)
			cur.fail("zero denominator");
	}
	q.canonicalize();
	return q;
}

Rational parse_rational(std::string_view text) {
	Cursor cur(strip_whitespace(text));
	bool negative = cur.accept('-');
	auto q = unsigned_rational(cur);
	if (!q)
		cur.fail("expected a rational");
	if (!cur.done())
		cur.fail("trailing characters");
	return negative ? Rational(-*q) : *q;
}

Quaternion parse_quaternion(std::string_view text) {
	Cursor cur(strip_whitespace(text));
	if (cur.done())
		cur.fail("empty quaternion");
	Quaternion q{0, 0, 0, 0};
	bool first = true;
	while (!cur.done()) {
		bool negative = false;
		if (cur.accept('-'))
			negative = true;
		else if (!first && !cur.accept('+'))
			cur.fail("expected '+' or '-'");
		first = false;

		auto coeff = unsigned_rational(cur);
		Rational value = coeff ? *coeff : Rational(1);
		if (negative)
			value = -value;
		switch (cur.peek()) {
		case 'i':
			cur.accept('i');
			q.b += value;
			break;
		case 'j':
			cur.accept('j');
			q.c += value;
			break;
		case 'k':
			cur.accept('k');
			q.d += value;
			break;
		default:
			if (!coeff)
				cur.fail("expected a coefficient or unit");
			q.a += value;
		}
	}
	return q;
}

std::uint32_t parse_residue(std::string_view text, std::uint32_t p) {
	Cursor cur(strip_whitespace(text));
	bool negative = cur.accept('-');
	std::string num = cur.digits();
	if (num.empty())
		cur.fail("expected digits");
	if (!cur.done())
		cur.fail("trailing characters");
	mpz_class r = mpz_class(num) % p;
	if (negative)
		r = (p - r) % p;
	return static_cast<std::uint32_t>(r.get_ui());
}

} // namespace

std::string format(const Rational& q) { return q.get_str(); }

std::string format(const FieldElement& x) {
	switch (x.field().kind()) {
	case FieldKind::rational:
		return format(x.as_rational());
	case FieldKind::galois:
		return std::to_string(x.as_residue().value);
	case FieldKind::quaternion:
		break;
	}
	const Quaternion& q = x.as_quaternion();
	std::string out;
	auto term = [&out](const Rational& coeff, const char* unit) {
		int s = sgn(coeff);
		if (s == 0)
			return;
		Rational mag = abs(coeff);
		if (s < 0)
			out += '-';
		else if (!out.empty())
			out += '+';
		if (*unit == '\0' || mag != 1)
			out += format(mag);
		out += unit;
	};
	term(q.a, "");
	term(q.b, "i");
	term(q.c, "j");
	term(q.d, "k");
	return out.empty() ? "0" : out;
}

std::string format(const ExtendedPoint& x) { return x.is_infinite() ? "inf" : format(x.value()); }

std::string format(const PlanePoint& p) { return format(p.x) + "," + format(p.y); }

std::string format(const PlaneLine& l) {
	if (const auto* v = std::get_if<VerticalLine>(&l.form()))
		return "x = " + format(v->c);
	const auto& s = std::get<SlopedLine>(l.form());
	return "y = x*(" + format(s.m) + ") + (" + format(s.b) + ")";
}

FieldElement parse_element(const Field& field, std::string_view text) {
	switch (field.kind()) {
	case FieldKind::rational:
		return FieldElement(field, parse_rational(text));
	case FieldKind::galois:
		return FieldElement(field, GaloisResidue{parse_residue(text, field.modulus())});
	case FieldKind::quaternion:
		return FieldElement(field, parse_quaternion(text));
	}
	throw Error("unreachable field kind");
}

ExtendedPoint parse_extended(const Field& field, std::string_view text) {
	if (strip_whitespace(text) == "inf")
		return ExtendedPoint::infinity(field);
	return parse_element(field, text);
}

PlanePoint parse_point(const Field& field, std::string_view text) {
	auto comma = text.find(',');
	if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos)
		throw ParseError("point literal must look like 'x,y', got '" + std::string(text) + "'");
	return {parse_element(field, text.substr(0, comma)), parse_element(field, text.substr(comma + 1))};
}

} // namespace crossratio
