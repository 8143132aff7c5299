#include "barrett/report.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include <json.hpp>

namespace barrett {

std::optional<OutputFormat> parse_format(std::string_view name)
{
    if (name == "human") return OutputFormat::Human;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "tsv") return OutputFormat::Tsv;
    if (name == "jsonl" || name == "json-lines") return OutputFormat::JsonLines;
    return std::nullopt;
}

namespace {

template <class... Args>
std::string to_text(double v, Args... args)
{
    // Print -0.0 as 0.
    if (v == 0.0) {
        v = 0.0;
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, args...);
    return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string tsv_escape(std::string s)
{
    std::replace(s.begin(), s.end(), '\t', ' ');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

void render_delimited(const Table& t, char sep, std::ostream& out)
{
    auto escape = [sep](const std::string& s) { return sep == ',' ? csv_escape(s) : tsv_escape(s); };
    auto line = [&](auto&& texts) {
        for (std::size_t i = 0; i < texts.size(); ++i) {
            if (i) out << sep;
            out << escape(texts[i]);
        }
        out << '\n';
    };
    line(t.columns);
    for (const auto& row : t.rows) {
        std::vector<std::string> texts;
        texts.reserve(row.size());
        for (const Cell& c : row) texts.push_back(c.text);
        line(texts);
    }
}

void render_jsonl(const Table& t, std::ostream& out)
{
    for (const auto& row : t.rows) {
        out << '{';
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << nlohmann::json(t.columns[i]).dump() << ':';
            switch (row[i].kind) {
            case Cell::Kind::Number: out << row[i].text; break;
            case Cell::Kind::Null: out << "null"; break;
            case Cell::Kind::Text: out << nlohmann::json(row[i].text).dump(); break;
            }
        }
        out << "}\n";
    }
}

void render_human(const Table& t, std::ostream& out)
{
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        width[i] = t.columns[i].size();
    }
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            width[i] = std::max(width[i], row[i].text.size());
        }
    }
    // Numbers right-aligned, text left-aligned; no trailing blanks.
    auto line = [&](auto cell_at, auto right_at) {
        std::string s;
        for (std::size_t i = 0; i < width.size(); ++i) {
            const std::string& c = cell_at(i);
            const std::string pad(width[i] - c.size(), ' ');
            if (i) s += "  ";
            s += right_at(i) ? pad + c : c + pad;
        }
        s.erase(s.find_last_not_of(' ') + 1);
        out << s << '\n';
    };
    auto numeric_column = [&](std::size_t i) {
        return !t.rows.empty() && t.rows.front()[i].kind == Cell::Kind::Number;
    };
    line([&](std::size_t i) -> const std::string& { return t.columns[i]; }, numeric_column);
    for (const auto& row : t.rows) {
        line([&](std::size_t i) -> const std::string& { return row[i].text; },
             [&](std::size_t i) { return row[i].kind == Cell::Kind::Number; });
    }
}

} // namespace

Cell Cell::integer(std::uint64_t v) { return {std::to_string(v), Kind::Number}; }

Cell Cell::fixed6(double v) { return {to_text(v, std::chars_format::fixed, 6), Kind::Number}; }

Cell Cell::real(double v) { return {to_text(v), Kind::Number}; }

Cell Cell::string(std::string v) { return {std::move(v), Kind::Text}; }

Cell Cell::null(std::string shown) { return {std::move(shown), Kind::Null}; }

void render(const Table& table, OutputFormat format, std::ostream& out)
{
    switch (format) {
    case OutputFormat::Human: render_human(table, out); break;
    case OutputFormat::Csv: render_delimited(table, ',', out); break;
    case OutputFormat::Tsv: render_delimited(table, '\t', out); break;
    case OutputFormat::JsonLines: render_jsonl(table, out); break;
    }
}

} // namespace barrett
