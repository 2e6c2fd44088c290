#pragma once

#include <string>
#include <vector>

namespace ionwire::cli {

/// Fixed scientific formatting, 9 significant digits, locale-independent.
/// Every float the tool emits goes through this so identical runs produce
/// byte-identical output.
std::string format_sci(double v);

/// One CSV field, quoted per RFC 4180 when it contains separators.
std::string csv_field(const std::string& raw);

/// Joins fields into a CSV line (no trailing newline).
std::string csv_line(const std::vector<std::string>& fields);

/// Writes `content` to `path` atomically (temp file + rename) so failed
/// runs never leave partial output behind. Path "-" or "" writes to stdout.
void write_output(const std::string& path, const std::string& content);

/// A rectangular result table with one emitter per output format.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_csv() const;
    std::string to_json() const;  // array of one object per row
    std::string to_text() const;  // aligned columns
};

}  // namespace ionwire::cli
