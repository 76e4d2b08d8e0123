#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spingeom/empirical.hpp"

namespace spingeom::cli {

struct SystemSpec {
    double P = 1.0;
    QNum q;
    E3Placement placement;
};

struct SweepSpec {
    std::vector<HalfInt> j_values;
    double p_scale = 1.0;
    std::vector<Line3> lines;
};

struct OutputSpec {
    std::string format = "csv";
    std::string path;  // empty: stdout
};

struct RunConfig {
    std::vector<SystemSpec> systems;
    double hbar = 1.0;
    std::optional<SweepSpec> sweep;
    OutputSpec output;
};

// Message reads "<source>:<line>: <what>".
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& source, int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

RunConfig parse_config(const std::string& text, const std::string& source = "<config>");
RunConfig load_config(const std::string& path);

// 1-based line of the value addressed by a JSON pointer such as "/systems/1/j"; 0 if absent.
int locate_pointer(const std::string& text, const std::string& pointer);

}  // namespace spingeom::cli
