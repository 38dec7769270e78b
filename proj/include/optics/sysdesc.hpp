#pragma once

// Plain-text optical-system and resonator descriptions.
//
//   # comment to end of line
//   [system]
//   freespace n=1.0 d=0.1
//   interface spherical R=0.05 kind=transmitted
//   freespace n=1.5 d=0.02
//
// Grammar (line oriented, case-sensitive, key=value fields in any order):
//   header         := "[system]" | "[resonator]"
//   system body    := (freespace interface)* freespace
//   resonator body := interface (freespace interface)+
//   freespace      := "freespace" "n=" real "d=" real
//   interface      := "interface" ("plane" | "spherical" "R=" real)
//                     ["kind=" ("transmitted" | "reflected")]
//
// In a resonator the first and last interfaces are the mirrors (always
// reflected); interior interfaces default to transmitted. Reals use a dot
// decimal separator with an optional exponent; inf and nan are rejected.
// Duplicate, missing and unknown keys are errors, as are trailing tokens.

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "optics/errors.hpp"
#include "optics/ray_optics.hpp"
#include "optics/resonator.hpp"

namespace optics::sysdesc {

enum class DocumentKind { system, resonator };

struct SourcePosition {
    std::size_t line = 0;    // 1-based
    std::size_t column = 0;  // 1-based
};

struct InterfaceLine {
    OpticalInterface iface;
    InterfaceKind kind = InterfaceKind::transmitted;

    friend constexpr bool operator==(const InterfaceLine&, const InterfaceLine&) = default;
};

/// One parsed line. Equality compares content only, not position.
struct Directive {
    std::variant<FreeSpace, InterfaceLine> value;
    SourcePosition pos;

    friend bool operator==(const Directive& a, const Directive& b) { return a.value == b.value; }
};

struct Document {
    DocumentKind kind = DocumentKind::system;
    std::vector<Directive> items;

    friend bool operator==(const Document&, const Document&) = default;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, std::string message, std::string expected);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
    std::string expected_;
};

/// Throws ParseError at the first violation.
Document parse(std::string_view source);

/// Canonical text: no comments, one space between tokens, keys in the order
/// n, d and R, kind, reals in shortest round-trip form.
std::string serialize(const Document& doc);

// Shortest decimal text that reads back as the same double.
std::string format_real(double v);

/// Throws DomainError when the document kind does not match.
OpticalSystem to_system(const Document& doc);
Resonator to_resonator(const Document& doc);

Document to_document(const OpticalSystem& sys);
Document to_document(const Resonator& res);

}  // namespace optics::sysdesc
