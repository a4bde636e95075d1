#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cointkit::tables {

enum class Format { Markdown, Csv, Json };

/// Error(Configuration) for anything other than markdown, csv or json.
[[nodiscard]] Format parse_format(std::string_view name);

struct Cell {
    std::optional<double> value;
    std::string stars;
    std::optional<std::size_t> nobs;
    int digits = 2;      // decimals in text renderings
    std::string suffix;  // appended in text renderings, e.g. "%"
};

struct Row {
    std::string group;  // specification label, e.g. "Engle-Granger"
    std::string label;  // e.g. "Test statistic"
    std::vector<Cell> cells;
    bool parenthesized = false;  // render values as "(0.84)"
    bool count_row = false;      // render nobs as an integer instead of value
};

struct Meta {
    std::optional<std::uint64_t> seed;
    std::string dataset_hash;
};

struct Table {
    std::string table_id;
    std::string title;
    std::vector<std::string> columns;
    std::vector<Row> rows;
    std::vector<std::string> notes;
    Meta meta;
};

/// Text of one cell in markdown/csv renderings.
[[nodiscard]] std::string cell_text(const Row& row, const Cell& cell);

/// JSON row label: "group | label", or just label when group is empty.
[[nodiscard]] std::string json_label(const Row& row);

/// Deterministic, locale-independent rendering. A table without rows renders
/// as its header only.
[[nodiscard]] std::string render(const Table& table, Format format);
[[nodiscard]] std::string render(std::span<const Table> tables, Format format);

/// Inverse of the JSON rendering (table_id, rows[label, cells], meta).
/// Group/label are not separated again; the JSON label lands in Row::label.
[[nodiscard]] Table from_json(std::string_view text);

}  // namespace cointkit::tables
