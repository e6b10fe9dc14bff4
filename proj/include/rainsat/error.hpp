#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rainsat {

enum class Errc {
	DuplicateEdge,
	BadColor,
	BadVertex,
	MissingEdge,
	NotANonEdge,
	EmptyPattern,
	PaletteTooSmall,
	NotRainbowFree,
	TooLarge,
	Disconnected,
	TooSmall,
	NoSuchSystem,
	OddOrder,
	NoQualifyingEdge,
	BadParameters,
	BadOrder,
	NotAStarForest,
	BadInput,
	RetriesExhausted,
	ParseError,
};

constexpr std::string_view to_string(Errc code)
{
	switch (code) {
		case Errc::DuplicateEdge: return "DuplicateEdge";
		case Errc::BadColor: return "BadColor";
		case Errc::BadVertex: return "BadVertex";
		case Errc::MissingEdge: return "MissingEdge";
		case Errc::NotANonEdge: return "NotANonEdge";
		case Errc::EmptyPattern: return "EmptyPattern";
		case Errc::PaletteTooSmall: return "PaletteTooSmall";
		case Errc::NotRainbowFree: return "NotRainbowFree";
		case Errc::TooLarge: return "TooLarge";
		case Errc::Disconnected: return "Disconnected";
		case Errc::TooSmall: return "TooSmall";
		case Errc::NoSuchSystem: return "NoSuchSystem";
		case Errc::OddOrder: return "OddOrder";
		case Errc::NoQualifyingEdge: return "NoQualifyingEdge";
		case Errc::BadParameters: return "BadParameters";
		case Errc::BadOrder: return "BadOrder";
		case Errc::NotAStarForest: return "NotAStarForest";
		case Errc::BadInput: return "BadInput";
		case Errc::RetriesExhausted: return "RetriesExhausted";
		case Errc::ParseError: return "ParseError";
	}
	return "Unknown";
}

// All library failures are reported through this one exception type; the
// code identifies the violated precondition.
class Error : public std::runtime_error {
public:
	Error(Errc code, std::string const &what)
		: std::runtime_error(std::string(to_string(code)) + ": " + what), m_code(code)
	{
	}

	Errc code() const noexcept { return m_code; }

private:
	Errc m_code;
};

[[noreturn]] inline void fail(Errc code, std::string const &what) { throw Error(code, what); }

} // namespace rainsat
