// report.hpp
// Tabular output shared by every CLI command. Cells are formatted once,
// locale-independently, and the same text is emitted in every format, so
// csv, tsv, jsonl and human output carry identical numbers.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace barrett {

enum class OutputFormat { Human, Csv, Tsv, JsonLines };

std::optional<OutputFormat> parse_format(std::string_view name);

struct Cell {
    enum class Kind { Number, Text, Null };

    std::string text;
    Kind kind = Kind::Text;

    static Cell integer(std::uint64_t v);
    // Fixed notation with 6 decimals.
    static Cell fixed6(double v);
    // Shortest round-trip representation.
    static Cell real(double v);
    static Cell string(std::string v);
    // Rendered as `shown` in text formats and null in jsonl.
    static Cell null(std::string shown = "undefined");
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

void render(const Table& table, OutputFormat format, std::ostream& out);

} // namespace barrett
