#include "trackbench/cli/tables.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "trackbench/error.hpp"

namespace trackbench::cli {

std::string format_fixed(double value, int decimals) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
    return buffer;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void write_text(const std::filesystem::path& file, const std::string& text) {
    std::ofstream out(file, std::ios::binary);
    if (!out) {
        throw Error("cannot open '" + file.string() + "' for writing");
    }
    out << text;
    if (!out) {
        throw Error("failed to write '" + file.string() + "'");
    }
}

void write_csv(const std::filesystem::path& file, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        out << (i == 0 ? "" : ",") << csv_escape(header[i]);
    }
    out << '\n';
    for (const auto& row : rows) {
        if (row.size() != header.size()) {
            throw Error("csv row has " + std::to_string(row.size()) + " fields, header has " +
                        std::to_string(header.size()));
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i == 0 ? "" : ",") << csv_escape(row[i]);
        }
        out << '\n';
    }
    write_text(file, out.str());
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
        widths[i] = header[i].size();
    }
    for (const auto& row : rows) {
        if (row.size() != header.size()) {
            throw Error("table row has " + std::to_string(row.size()) + " fields, header has " +
                        std::to_string(header.size()));
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }

    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) {
                out << " | ";
            }
            const std::size_t pad = widths[i] - cells[i].size();
            if (i == 0) {
                out << cells[i] << std::string(pad, ' ');
            } else {
                out << std::string(pad, ' ') << cells[i];
            }
        }
        out << '\n';
    };
    emit(header);
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i > 0) {
            out << "-+-";
        }
        out << std::string(widths[i], '-');
    }
    out << '\n';
    for (const auto& row : rows) {
        emit(row);
    }
    return out.str();
}

}  // namespace trackbench::cli
