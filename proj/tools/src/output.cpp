#include "output.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include "ionwire/errors.hpp"

namespace ionwire::cli {

std::string format_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    return buf;
}

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n\r") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (char c : raw) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += csv_field(fields[i]);
    }
    return line;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    // An unwritable destination is a problem with the user's --output
    // argument, so it surfaces as an input error, not a numerical failure.
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DomainError("cannot open output file '" + tmp + "'");
        out << content;
        if (!out) throw DomainError("failed writing output file '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw DomainError("cannot move output into place at '" + path + "'");
    }
}

std::string Table::to_csv() const {
    std::string out = csv_line(header);
    out += '\n';
    for (const auto& row : rows) {
        out += csv_line(row);
        out += '\n';
    }
    return out;
}

std::string Table::to_json() const {
    nlohmann::json array = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < header.size() && i < row.size(); ++i)
            obj[header[i]] = row[i];
        array.push_back(std::move(obj));
    }
    return array.dump(2) + "\n";
}

std::string Table::to_text() const {
    std::vector<std::size_t> widths(header.size(), 0);
    for (std::size_t i = 0; i < header.size(); ++i) widths[i] = header[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());

    auto emit = [&widths](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) line += "  ";
            line += cells[i];
            if (i + 1 < cells.size()) line.append(widths[i] - cells[i].size(), ' ');
        }
        return line;
    };

    std::string out = emit(header);
    out += '\n';
    for (const auto& row : rows) {
        out += emit(row);
        out += '\n';
    }
    return out;
}

}  // namespace ionwire::cli
