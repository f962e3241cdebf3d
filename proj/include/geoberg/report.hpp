#pragma once

#include <string>
#include <utility>
#include <vector>

namespace geoberg {

/** One delimited output table; written as <name>.csv. Cells are plain
    strings already formatted for output; fmt() below is the one double
    formatter so reruns stay byte-identical. */
struct Table {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/** Everything a subcommand produces: tables, ordered provenance notes,
    and the aggregate pass flag. Timestamps belong in the provenance block
    only; tables must be reproducible byte for byte across reruns. */
struct RunReport {
    std::vector<Table> tables;
    std::vector<std::pair<std::string, std::string>> provenance;
    bool all_pass = true;

    Table& table(const std::string& name, std::vector<std::string> header);
    void note(const std::string& key, const std::string& value);

    /** Write <table>.csv per table plus summary.txt into dir (created if
        missing). */
    void write(const std::string& dir) const;
};

std::string fmt(double v);
std::string fmt(bool v);
std::string fmt(long long v);
inline std::string fmt(int v) { return fmt(static_cast<long long>(v)); }
inline std::string fmt(std::size_t v) { return fmt(static_cast<long long>(v)); }

} // namespace geoberg
