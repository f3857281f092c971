#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "cabinet/io.hpp"
#include "number_format.hpp"

namespace cabinet {

namespace {

constexpr std::string_view kHeader = "#,ID,Width,Height,Depth,ConnectsTo,IsHot";

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<std::string_view> split_lines(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) {
        text.remove_prefix(3);
    }
    auto lines = split(text, '\n');
    for (auto& line : lines) {
        if (line.ends_with('\r')) {
            line.remove_suffix(1);
        }
    }
    return lines;
}

bool blank(std::string_view s) { return s.find_first_not_of(" \t") == std::string_view::npos; }

double parse_real(std::string_view field, std::size_t line, std::size_t column,
                  const char* what) {
    double v = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || res.ec != std::errc{} || res.ptr != field.data() + field.size() ||
        !std::isfinite(v)) {
        throw ParseError(line, column, {},
                         std::string(what) + ": expected a number, got '" + std::string(field) + "'");
    }
    return v;
}

ComponentIndex parse_index(std::string_view field, std::size_t line, std::size_t column,
                           const char* what) {
    ComponentIndex v = 0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
        throw ParseError(line, column, {},
                         std::string(what) + ": expected a component index, got '" +
                             std::string(field) + "'");
    }
    return v;
}

void apply_directive(std::string_view line_text, std::size_t line, CabinetSpec& cabinet) {
    const auto eq = line_text.find('=');
    if (eq == std::string_view::npos) {
        throw ParseError(line, 1, {}, "directive without '='");
    }
    const auto key = line_text.substr(1, eq - 1);
    const auto value = line_text.substr(eq + 1);
    if (key == "width") {
        cabinet.usable_width_mm = parse_real(value, line, eq + 2, "width");
        if (cabinet.usable_width_mm <= 0.0) {
            throw ParseError(line, eq + 2, {}, "width must be positive");
        }
    } else if (key == "rowgap") {
        cabinet.row_gap_mm = parse_real(value, line, eq + 2, "rowgap");
        if (cabinet.row_gap_mm < 0.0) {
            throw ParseError(line, eq + 2, {}, "rowgap must be non-negative");
        }
    } else if (key == "name") {
        cabinet.name = std::string(value);
    } else {
        throw ParseError(line, 2, {}, "unknown directive '" + std::string(key) + "'");
    }
}

}  // namespace

CabinetDocument parse_components_csv(std::string_view text) {
    CabinetDocument doc;
    const auto lines = split_lines(text);

    std::size_t i = 0;
    for (; i < lines.size(); ++i) {
        if (blank(lines[i])) {
            continue;
        }
        if (!lines[i].starts_with('!')) {
            break;
        }
        apply_directive(lines[i], i + 1, doc.cabinet);
    }
    if (i == lines.size()) {
        throw ParseError(0, 0, {}, "missing header row");
    }
    if (lines[i] != kHeader) {
        throw ParseError(i + 1, 1, {}, "header must be exactly '" + std::string(kHeader) + "'");
    }

    std::map<ComponentIndex, std::size_t> line_of;
    for (++i; i < lines.size(); ++i) {
        const std::size_t line = i + 1;
        if (blank(lines[i])) {
            continue;
        }
        const auto fields = split(lines[i], ',');
        if (fields.size() != 7) {
            throw ParseError(line, std::min<std::size_t>(fields.size(), 8), {},
                             "expected 7 fields, found " + std::to_string(fields.size()));
        }
        Component c;
        c.index = parse_index(fields[0], line, 1, "#");
        c.id = std::string(fields[1]);
        c.width_mm = parse_real(fields[2], line, 3, "Width");
        c.height_mm = parse_real(fields[3], line, 4, "Height");
        c.depth_mm = parse_real(fields[4], line, 5, "Depth");
        if (!fields[5].empty()) {
            for (auto target : split(fields[5], ';')) {
                c.connects_to.push_back(parse_index(target, line, 6, "ConnectsTo"));
            }
        }
        if (fields[6] == "0" || fields[6] == "1") {
            c.is_hot = fields[6] == "1";
        } else {
            throw ParseError(line, 7, {},
                             "IsHot: expected 0 or 1, got '" + std::string(fields[6]) + "'");
        }
        line_of[c.index] = line;
        doc.components.push_back(std::move(c));
    }

    try {
        doc.components = validate_components(std::move(doc.components));
    } catch (const ValidationError& e) {
        const auto it = line_of.find(e.component());
        throw ParseError(it == line_of.end() ? 0 : it->second, 0, {}, e.what(), e.kind());
    }
    return doc;
}

std::string write_components_csv(const CabinetDocument& doc) {
    using detail::format_number;
    std::ostringstream out;
    out << "!width=" << format_number(doc.cabinet.usable_width_mm) << '\n';
    out << "!rowgap=" << format_number(doc.cabinet.row_gap_mm) << '\n';
    if (!doc.cabinet.name.empty()) {
        out << "!name=" << doc.cabinet.name << '\n';
    }
    out << kHeader << '\n';
    for (const auto& c : doc.components) {
        out << c.index << ',' << c.id << ',' << format_number(c.width_mm) << ','
            << format_number(c.height_mm) << ',' << format_number(c.depth_mm) << ',';
        for (std::size_t k = 0; k < c.connects_to.size(); ++k) {
            out << (k ? ";" : "") << c.connects_to[k];
        }
        out << ',' << (c.is_hot ? 1 : 0) << '\n';
    }
    return out.str();
}

}  // namespace cabinet
