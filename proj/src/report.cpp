#include "geoberg/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "geoberg/errors.hpp"

namespace geoberg {

namespace {

// RFC-4180 quoting, applied only when the cell needs it so plain numeric
// tables stay byte-identical to their unquoted form.
std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    q += '"';
    return q;
}

} // namespace

Table& RunReport::table(const std::string& name, std::vector<std::string> header) {
    for (Table& t : tables)
        if (t.name == name) return t;
    tables.push_back(Table{name, std::move(header), {}});
    return tables.back();
}

void RunReport::note(const std::string& key, const std::string& value) {
    provenance.emplace_back(key, value);
}

void RunReport::write(const std::string& dir) const {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory '" + dir + "': " + ec.message());

    for (const Table& t : tables) {
        std::ofstream out(dir + "/" + t.name + ".csv");
        if (!out) throw ConfigError("cannot write table '" + t.name + "' in '" + dir + "'");
        for (std::size_t i = 0; i < t.header.size(); ++i)
            out << (i ? "," : "") << csv_cell(t.header[i]);
        out << "\n";
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << csv_cell(row[i]);
            out << "\n";
        }
    }

    std::ofstream sum(dir + "/summary.txt");
    if (!sum) throw ConfigError("cannot write summary in '" + dir + "'");
    for (const auto& [key, value] : provenance)
        sum << key << " = " << value << "\n";
    sum << "all_pass = " << (all_pass ? "true" : "false") << "\n";
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt(bool v) { return v ? "true" : "false"; }

std::string fmt(long long v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", v);
    return buf;
}

} // namespace geoberg
