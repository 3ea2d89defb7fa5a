#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace trackbench::cli {

// Fixed-point rendering, e.g. format_fixed(8.437, 2) == "8.44".
[[nodiscard]] std::string format_fixed(double value, int decimals);

// Quotes the field when it holds a comma, quote, or newline.
[[nodiscard]] std::string csv_escape(const std::string& field);

// One header line plus one line per row, LF endings, comma separated.
void write_csv(const std::filesystem::path& file, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

// Writes the text verbatim (binary mode, so line endings survive as given).
void write_text(const std::filesystem::path& file, const std::string& text);

// Space-padded text table: first column left-aligned, the rest right-aligned.
[[nodiscard]] std::string render_table(const std::vector<std::string>& header,
                                       const std::vector<std::vector<std::string>>& rows);

}  // namespace trackbench::cli
