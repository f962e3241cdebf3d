#include "geoberg/config.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "geoberg/errors.hpp"
#include "geoberg/util.hpp"

namespace geoberg {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_double(const std::string& field, const std::string& v) {
    errno = 0;
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(x))
        throw ConfigError(field + ": not a finite number: '" + v + "'");
    return x;
}

std::uint64_t parse_u64(const std::string& field, const std::string& v) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long x = std::strtoull(v.c_str(), &end, 0);
    if (end == v.c_str() || *end != '\0' || errno == ERANGE || v.find('-') != std::string::npos)
        throw ConfigError(field + ": not a nonnegative integer: '" + v + "'");
    return static_cast<std::uint64_t>(x);
}

std::size_t parse_size(const std::string& field, const std::string& v) {
    return static_cast<std::size_t>(parse_u64(field, v));
}

std::vector<double> parse_double_list(const std::string& field, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_double(field, item));
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& field, const std::string& v) {
    std::vector<int> out;
    for (double d : parse_double_list(field, v)) {
        if (d != std::floor(d))
            throw ConfigError(field + ": expected integers");
        out.push_back(static_cast<int>(d));
    }
    return out;
}

void set_field(ExperimentConfig& cfg, const std::string& field, const std::string& value) {
    if (field == "pair.phi0_family") cfg.phi0.family = value;
    else if (field == "pair.phi0_params") cfg.phi0.params = parse_double_list(field, value);
    else if (field == "pair.phi1_family") cfg.phi1.family = value;
    else if (field == "pair.phi1_params") cfg.phi1.params = parse_double_list(field, value);
    else if (field == "levels.k_list") cfg.k_list = parse_int_list(field, value);
    else if (field == "grid.t_nodes") cfg.t_nodes = parse_size(field, value);
    else if (field == "grid.x_nodes") cfg.x_nodes = parse_size(field, value);
    else if (field == "grid.x_max") cfg.x_max = parse_double(field, value);
    else if (field == "grid.quad_extra") cfg.quad_extra = parse_size(field, value);
    else if (field == "tolerances.tol_scale") cfg.tol_scale = parse_double(field, value);
    else if (field == "run.seed") cfg.seed = parse_u64(field, value);
    else if (field == "run.out") cfg.out_dir = value;
    else if (field == "run.harnack_samples") cfg.harnack_samples = parse_size(field, value);
    else if (field == "run.dp_window") cfg.dp_window = parse_size(field, value);
    else throw ConfigError("unknown key '" + field + "'");
}

void check_spec(const char* field, const PotentialSpec& spec) {
    const std::string name(field);
    if (spec.family == "fs") {
        if (!spec.params.empty())
            throw ConfigError(name + "_params: fs takes no parameters");
    } else if (spec.family == "dilation") {
        if (spec.params.size() != 1)
            throw ConfigError(name + "_params: dilation takes exactly one parameter");
    } else if (spec.family == "bump") {
        if (spec.params.size() != 2 && spec.params.size() != 3)
            throw ConfigError(name + "_params: bump takes {amplitude, width[, center]}");
        if (!(spec.params[1] > 0.0))
            throw ConfigError(name + "_params: bump width must be positive");
    } else {
        throw ConfigError(name + "_family: unknown family '" + spec.family + "'");
    }
}

} // namespace

void ExperimentConfig::validate() const {
    check_spec("pair.phi0", phi0);
    check_spec("pair.phi1", phi1);
    if (k_list.empty()) throw ConfigError("levels.k_list: must not be empty");
    for (std::size_t i = 0; i < k_list.size(); ++i) {
        if (k_list[i] < 1 || k_list[i] > 512)
            throw ConfigError("levels.k_list: levels must lie in [1, 512]");
        if (i > 0 && k_list[i] <= k_list[i - 1])
            throw ConfigError("levels.k_list: must be strictly increasing");
    }
    if (t_nodes < 9 || t_nodes > 4097)
        throw ConfigError("grid.t_nodes: must lie in [9, 4097]");
    if (x_nodes < 33 || x_nodes > 16001)
        throw ConfigError("grid.x_nodes: must lie in [33, 16001]");
    if (!(x_max >= 10.0 && x_max <= 200.0))
        throw ConfigError("grid.x_max: must lie in [10, 200]");
    if (quad_extra < 1 || quad_extra > 4096)
        throw ConfigError("grid.quad_extra: must lie in [1, 4096]");
    if (!(tol_scale > 0.0) || !std::isfinite(tol_scale))
        throw ConfigError("tolerances.tol_scale: must be positive and finite");
    if (harnack_samples > 100000)
        throw ConfigError("run.harnack_samples: must be at most 100000");
    if (dp_window < 1 || dp_window > 256)
        throw ConfigError("run.dp_window: must lie in [1, 256]");
    if (out_dir.empty())
        throw ConfigError("run.out: must not be empty");
}

std::uint64_t ExperimentConfig::hash() const {
    // out_dir is plumbing, not semantics; everything else participates.
    char buf[64];
    std::string s;
    auto num = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g,", v);
        s += buf;
    };
    auto spec = [&](const PotentialSpec& p) {
        s += p.family + ":";
        for (double v : p.params) num(v);
        s += "|";
    };
    spec(phi0);
    spec(phi1);
    s += "k:";
    for (int k : k_list) num(k);
    s += "|grid:";
    num(static_cast<double>(t_nodes));
    num(static_cast<double>(x_nodes));
    num(x_max);
    num(static_cast<double>(quad_extra));
    s += "|tol:";
    num(tol_scale);
    s += "|run:";
    std::snprintf(buf, sizeof buf, "%llu,", static_cast<unsigned long long>(seed));
    s += buf;
    num(static_cast<double>(harnack_samples));
    num(static_cast<double>(dp_window));
    return fnv1a(s);
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    ExperimentConfig cfg;
    std::string line, section;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t cut = line.find_first_of("#;");
        if (cut != std::string::npos) line.erase(cut);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(path + ":" + std::to_string(lineno) + ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "pair" && section != "levels" && section != "grid" &&
                section != "tolerances" && section != "run")
                throw ConfigError("unknown section '[" + section + "]'");
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        if (section.empty())
            throw ConfigError(path + ":" + std::to_string(lineno) + ": key before any section");
        set_field(cfg, section + "." + trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

void apply_override(ExperimentConfig& cfg, const std::string& assignment) {
    const std::size_t eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ConfigError("override must have the form section.key=value: '" + assignment + "'");
    set_field(cfg, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

RadialPotential make_potential(const PotentialSpec& spec) {
    if (spec.family == "fs") return make_fubini_study();
    if (spec.family == "dilation") {
        if (spec.params.size() != 1)
            throw ConfigError("dilation takes exactly one parameter");
        return make_dilation_potential(spec.params[0]);
    }
    if (spec.family == "bump") return make_test_potential("bump", spec.params);
    throw ConfigError("unknown family '" + spec.family + "'");
}

} // namespace geoberg
