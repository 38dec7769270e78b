#include "optics/sysdesc.hpp"

#include <charconv>
#include <cmath>
#include <optional>

namespace optics::sysdesc {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

struct Line {
    std::size_t number;
    std::size_t length;  // bytes, after stripping the comment and a trailing CR
    std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string_view src) {
    std::vector<Line> lines;
    std::size_t start = 0;
    std::size_t number = 1;
    while (true) {
        const std::size_t nl = src.find('\n', start);
        std::string_view raw = src.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

        Line line{number, raw.size(), {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
            if (i >= raw.size()) break;
            const std::size_t begin = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
            line.tokens.push_back({raw.substr(begin, i - begin), begin + 1});
        }
        lines.push_back(std::move(line));
        if (nl == std::string_view::npos) break;
        start = nl + 1;
        ++number;
    }
    return lines;
}

[[noreturn]] void fail(std::size_t line, std::size_t column, std::string message, std::string expected) {
    throw ParseError(line, column, std::move(message), std::move(expected));
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// [+-]? (digits [. digits*] | . digits) ([eE] [+-]? digits)?
bool looks_like_real(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t mantissa_digits = 0;
    while (i < s.size() && is_digit(s[i])) ++i, ++mantissa_digits;
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && is_digit(s[i])) ++i, ++mantissa_digits;
    }
    if (mantissa_digits == 0) return false;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        std::size_t exp_digits = 0;
        while (i < s.size() && is_digit(s[i])) ++i, ++exp_digits;
        if (exp_digits == 0) return false;
    }
    return i == s.size();
}

double parse_real(std::string_view text, std::size_t line, std::size_t column) {
    if (!looks_like_real(text)) {
        fail(line, column, "invalid real '" + std::string(text) + "'", "decimal or exponent notation");
    }
    std::string_view digits = text;
    if (digits.front() == '+') digits.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || !std::isfinite(value)) {
        fail(line, column, "real out of range '" + std::string(text) + "'", "finite real");
    }
    return value;
}

struct Field {
    std::string_view value;
    std::size_t column;  // of the key
    std::size_t value_column;
};

// Parses the key=value tokens of one directive. `allowed` lists keys in
// canonical order.
std::vector<std::optional<Field>> parse_fields(const Line& line, std::size_t first,
                                               std::initializer_list<std::string_view> allowed) {
    std::vector<std::optional<Field>> fields(allowed.size());
    std::string expected;
    for (auto key : allowed) {
        if (!expected.empty()) expected += " or ";
        expected += std::string(key) + "=";
    }
    for (std::size_t t = first; t < line.tokens.size(); ++t) {
        const Token& tok = line.tokens[t];
        const auto eq = tok.text.find('=');
        if (eq == std::string_view::npos) {
            fail(line.number, tok.column, "unexpected token '" + std::string(tok.text) + "'", expected);
        }
        const std::string_view key = tok.text.substr(0, eq);
        std::size_t slot = 0;
        for (auto k : allowed) {
            if (k == key) break;
            ++slot;
        }
        if (slot == allowed.size()) {
            fail(line.number, tok.column, "unknown key '" + std::string(key) + "'", expected);
        }
        if (fields[slot]) fail(line.number, tok.column, "duplicate key '" + std::string(key) + "'", expected);
        fields[slot] = Field{tok.text.substr(eq + 1), tok.column, tok.column + eq + 1};
    }
    return fields;
}

FreeSpace parse_freespace(const Line& line) {
    const auto fields = parse_fields(line, 1, {"n", "d"});
    const std::size_t eol = line.length + 1;
    if (!fields[0]) fail(line.number, eol, "expected n=", "n=");
    if (!fields[1]) fail(line.number, eol, "expected d=", "d=");
    return {parse_real(fields[0]->value, line.number, fields[0]->value_column),
            parse_real(fields[1]->value, line.number, fields[1]->value_column)};
}

struct ParsedInterface {
    InterfaceLine value;
    std::optional<std::size_t> explicit_kind_column;
};

ParsedInterface parse_interface(const Line& line) {
    if (line.tokens.size() < 2) fail(line.number, line.length + 1, "expected interface shape", "plane or spherical");
    const Token& shape = line.tokens[1];
    const bool spherical = shape.text == "spherical";
    if (!spherical && shape.text != "plane") {
        fail(line.number, shape.column, "unknown interface shape '" + std::string(shape.text) + "'",
             "plane or spherical");
    }

    const auto fields = parse_fields(line, 2, {"R", "kind"});
    ParsedInterface out;
    if (spherical) {
        if (!fields[0]) fail(line.number, line.length + 1, "expected R=", "R=");
        out.value.iface = OpticalInterface::spherical(
            parse_real(fields[0]->value, line.number, fields[0]->value_column));
    } else {
        if (fields[0]) fail(line.number, fields[0]->column, "plane interface takes no R=", "kind= or end of line");
        out.value.iface = OpticalInterface::plane();
    }
    if (fields[1]) {
        const auto& kind = fields[1]->value;
        if (kind == "transmitted") {
            out.value.kind = InterfaceKind::transmitted;
        } else if (kind == "reflected") {
            out.value.kind = InterfaceKind::reflected;
        } else {
            fail(line.number, fields[1]->value_column, "unknown kind '" + std::string(kind) + "'",
                 "transmitted or reflected");
        }
        out.explicit_kind_column = fields[1]->column;
    }
    return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string message, std::string expected)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

Document parse(std::string_view source) {
    const std::vector<Line> lines = split_lines(source);
    std::optional<DocumentKind> kind;
    Document doc;
    bool expect_freespace = false;
    std::size_t freespace_count = 0;
    // Explicit kind=transmitted on the latest resonator interface.
    std::optional<SourcePosition> last_transmitted_kind;

    for (const Line& line : lines) {
        if (line.tokens.empty()) continue;
        const Token& head = line.tokens.front();

        if (!kind) {
            if (head.text == "[system]") {
                kind = DocumentKind::system;
                expect_freespace = true;
            } else if (head.text == "[resonator]") {
                kind = DocumentKind::resonator;
                expect_freespace = false;
            } else {
                fail(line.number, head.column, "expected header", "[system] or [resonator]");
            }
            if (line.tokens.size() > 1) {
                fail(line.number, line.tokens[1].column, "trailing token after header", "end of line");
            }
            doc.kind = *kind;
            continue;
        }

        if (head.text == "[system]" || head.text == "[resonator]") {
            fail(line.number, head.column, "duplicate header", expect_freespace ? "freespace" : "interface");
        }
        const SourcePosition pos{line.number, head.column};
        if (head.text == "freespace") {
            if (!expect_freespace) fail(line.number, head.column, "expected interface", "interface");
            doc.items.push_back({parse_freespace(line), pos});
            ++freespace_count;
            expect_freespace = false;
        } else if (head.text == "interface") {
            if (expect_freespace) fail(line.number, head.column, "expected freespace", "freespace");
            ParsedInterface parsed = parse_interface(line);
            if (*kind == DocumentKind::resonator) {
                std::optional<SourcePosition> transmitted_at;
                if (parsed.explicit_kind_column && parsed.value.kind == InterfaceKind::transmitted) {
                    transmitted_at = SourcePosition{line.number, *parsed.explicit_kind_column};
                }
                if (doc.items.empty()) {
                    if (transmitted_at) {
                        fail(transmitted_at->line, transmitted_at->column, "mirror interface must be reflected",
                             "kind=reflected");
                    }
                    parsed.value.kind = InterfaceKind::reflected;
                }
                last_transmitted_kind = transmitted_at;
            }
            doc.items.push_back({parsed.value, pos});
            expect_freespace = true;
        } else {
            fail(line.number, head.column, "unknown directive '" + std::string(head.text) + "'",
                 expect_freespace ? "freespace" : "interface");
        }
    }

    const Line& last = lines.back();
    const std::size_t eof_line = last.number;
    const std::size_t eof_col = last.length + 1;
    if (!kind) fail(eof_line, eof_col, "expected header", "[system] or [resonator]");

    if (*kind == DocumentKind::system) {
        if (expect_freespace) fail(eof_line, eof_col, "expected freespace", "freespace");
    } else {
        if (!expect_freespace) fail(eof_line, eof_col, "expected interface", "interface");
        if (freespace_count == 0) fail(eof_line, eof_col, "expected freespace", "freespace");
        if (last_transmitted_kind) {
            fail(last_transmitted_kind->line, last_transmitted_kind->column, "mirror interface must be reflected",
                 "kind=reflected");
        }
        std::get<InterfaceLine>(doc.items.back().value).kind = InterfaceKind::reflected;
    }
    return doc;
}

std::string format_real(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string serialize(const Document& doc) {
    std::string out = doc.kind == DocumentKind::system ? "[system]\n" : "[resonator]\n";
    for (const Directive& item : doc.items) {
        if (const auto* fs = std::get_if<FreeSpace>(&item.value)) {
            out += "freespace n=" + format_real(fs->n) + " d=" + format_real(fs->d) + "\n";
        } else {
            const auto& il = std::get<InterfaceLine>(item.value);
            out += "interface ";
            out += il.iface.is_spherical() ? "spherical R=" + format_real(il.iface.radius) : "plane";
            out += il.kind == InterfaceKind::reflected ? " kind=reflected\n" : " kind=transmitted\n";
        }
    }
    return out;
}

OpticalSystem to_system(const Document& doc) {
    if (doc.kind != DocumentKind::system) throw DomainError("document is not a [system]");
    OpticalSystem sys;
    const auto& items = doc.items;
    for (std::size_t i = 0; i + 1 < items.size(); i += 2) {
        const auto& il = std::get<InterfaceLine>(items[i + 1].value);
        sys.components.push_back({std::get<FreeSpace>(items[i].value), il.iface, il.kind});
    }
    sys.terminal = std::get<FreeSpace>(items.back().value);
    return sys;
}

Resonator to_resonator(const Document& doc) {
    if (doc.kind != DocumentKind::resonator) throw DomainError("document is not a [resonator]");
    const auto& items = doc.items;
    Resonator res;
    res.left = std::get<InterfaceLine>(items.front().value).iface;
    // items: I0 F1 I1 ... Fm Im; the pair (Fm, Im) is (space, right).
    for (std::size_t i = 1; i + 3 < items.size(); i += 2) {
        const auto& il = std::get<InterfaceLine>(items[i + 1].value);
        res.inner.push_back({std::get<FreeSpace>(items[i].value), il.iface, il.kind});
    }
    res.space = std::get<FreeSpace>(items[items.size() - 2].value);
    res.right = std::get<InterfaceLine>(items.back().value).iface;
    return res;
}

Document to_document(const OpticalSystem& sys) {
    Document doc{DocumentKind::system, {}};
    for (const auto& c : sys.components) {
        doc.items.push_back({c.space, {}});
        doc.items.push_back({InterfaceLine{c.iface, c.kind}, {}});
    }
    doc.items.push_back({sys.terminal, {}});
    return doc;
}

Document to_document(const Resonator& res) {
    Document doc{DocumentKind::resonator, {}};
    doc.items.push_back({InterfaceLine{res.left, InterfaceKind::reflected}, {}});
    for (const auto& c : res.inner) {
        doc.items.push_back({c.space, {}});
        doc.items.push_back({InterfaceLine{c.iface, c.kind}, {}});
    }
    doc.items.push_back({res.space, {}});
    doc.items.push_back({InterfaceLine{res.right, InterfaceKind::reflected}, {}});
    return doc;
}

}  // namespace optics::sysdesc
