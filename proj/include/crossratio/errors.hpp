#pragma once

#include <stdexcept>
#include <string>

namespace crossratio {

/// Base of every error raised by the library. Callers that only care about
/// "something went wrong" catch this; the CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
public:
	using Error::Error;
};

class DivisionByZero : public Error {
public:
	using Error::Error;
};

class InvalidModulus : public Error {
public:
	using Error::Error;
};

class ParseError : public Error {
public:
	using Error::Error;
};

/// Cross-ratio argument violation: two infinities, three equal points, ...
class InvalidArguments : public Error {
public:
	using Error::Error;
};

/// solve_fourth_point called with R in {O, I}.
class InvalidRatio : public Error {
public:
	using Error::Error;
};

/// solve_fourth_point whose only solution is the point at infinity.
class InfiniteSolution : public Error {
public:
	using Error::Error;
};

class IdenticalPoints : public Error {
public:
	using Error::Error;
};

class IdenticalLines : public Error {
public:
	using Error::Error;
};

class NotOnLine : public Error {
public:
	using Error::Error;
};

class AuxOnLine : public Error {
public:
	using Error::Error;
};

class DegenerateConfiguration : public Error {
public:
	using Error::Error;
};

/// A Desargues configuration whose hypotheses do not hold. `clause()` names
/// the first failing hypothesis.
class HypothesisViolation : public Error {
public:
	explicit HypothesisViolation(std::string clause)
		: Error("Desargues hypothesis violated: " + clause), clause_(std::move(clause)) {}
	const std::string& clause() const noexcept { return clause_; }

private:
	std::string clause_;
};

class GenerationFailure : public Error {
public:
	using Error::Error;
};

class UnknownCheck : public Error {
public:
	using Error::Error;
};

} // namespace crossratio
