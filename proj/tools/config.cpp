#include "config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace spingeom::cli {

using nlohmann::json;

namespace {

std::string escape_token(const std::string& k) {
    std::string out;
    for (char c : k) {
        if (c == '~') out += "~0";
        else if (c == '/') out += "~1";
        else out += c;
    }
    return out;
}

// Walks already-valid JSON text and records the line where each value starts.
class Locator {
public:
    explicit Locator(const std::string& text) : t_(text) {
        value("");
    }
    const std::map<std::string, int>& lines() const { return lines_; }

private:
    void ws() {
        while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) {
            if (t_[i_] == '\n') ++line_;
            ++i_;
        }
    }

    std::string str() {
        std::string out;
        ++i_;
        while (i_ < t_.size() && t_[i_] != '"') {
            if (t_[i_] == '\\' && i_ + 1 < t_.size()) {
                out += t_[i_ + 1];
                i_ += 2;
                continue;
            }
            out += t_[i_++];
        }
        ++i_;
        return out;
    }

    void value(const std::string& ptr) {
        ws();
        if (i_ >= t_.size()) return;
        lines_[ptr] = line_;
        const char c = t_[i_];
        if (c == '{') {
            ++i_;
            ws();
            if (i_ < t_.size() && t_[i_] == '}') { ++i_; return; }
            while (i_ < t_.size()) {
                ws();
                const std::string key = str();
                ws();
                ++i_;  // ':'
                value(ptr + "/" + escape_token(key));
                ws();
                if (i_ < t_.size() && t_[i_] == ',') { ++i_; continue; }
                ++i_;
                return;
            }
        } else if (c == '[') {
            ++i_;
            ws();
            if (i_ < t_.size() && t_[i_] == ']') { ++i_; return; }
            for (int k = 0; i_ < t_.size(); ++k) {
                value(ptr + "/" + std::to_string(k));
                ws();
                if (i_ < t_.size() && t_[i_] == ',') { ++i_; continue; }
                ++i_;
                return;
            }
        } else if (c == '"') {
            str();
        } else {
            while (i_ < t_.size() && t_[i_] != ',' && t_[i_] != ']' && t_[i_] != '}' &&
                   !std::isspace(static_cast<unsigned char>(t_[i_])))
                ++i_;
        }
    }

    const std::string& t_;
    size_t i_ = 0;
    int line_ = 1;
    std::map<std::string, int> lines_;
};

class Reader {
public:
    Reader(const std::string& text, std::string source) : text_(text), source_(std::move(source)) {}

    [[noreturn]] void fail(const std::string& ptr, const std::string& what) const {
        // Missing keys anchor at their nearest existing parent.
        std::string p = ptr;
        int line = locate_pointer(text_, p);
        while (line == 0 && !p.empty()) {
            p = p.substr(0, p.rfind('/'));
            line = locate_pointer(text_, p);
        }
        throw ConfigError(source_, line, (ptr.empty() ? std::string("/") : ptr) + ": " + what);
    }

    void only_keys(const json& obj, const std::string& ptr, std::initializer_list<const char*> keys) const {
        if (!obj.is_object()) fail(ptr, "expected an object");
        std::set<std::string> allowed(keys.begin(), keys.end());
        for (const auto& [k, v] : obj.items())
            if (!allowed.count(k)) fail(ptr + "/" + escape_token(k), "unknown key '" + k + "'");
    }

    double number(const json& obj, const std::string& ptr, const char* key) const {
        const std::string p = ptr + "/" + key;
        if (!obj.contains(key)) fail(p, "missing required number");
        const json& v = obj.at(key);
        if (!v.is_number()) fail(p, "expected a number");
        const double x = v.get<double>();
        if (!std::isfinite(x)) fail(p, "expected a finite number");
        return x;
    }

    HalfInt half_int(const json& v, const std::string& ptr) const {
        try {
            if (v.is_number()) return HalfInt::from_double(v.get<double>());
            if (v.is_string()) {
                const std::string s = v.get<std::string>();
                const auto slash = s.find('/');
                size_t used = 0;
                if (slash == std::string::npos) {
                    const int n = std::stoi(s, &used);
                    if (used == s.size()) return HalfInt(n);
                } else if (s.substr(slash + 1) == "2") {
                    const std::string head = s.substr(0, slash);
                    const int n = std::stoi(head, &used);
                    if (used == head.size()) return HalfInt::from_doubled(n);
                }
            }
        } catch (const std::exception&) {
        }
        fail(ptr, "expected a half-integer (number or \"n/2\")");
    }

    Vec3 vec3(const json& obj, const std::string& ptr, const char* key, const Vec3& fallback, bool required) const {
        const std::string p = ptr + "/" + key;
        if (!obj.contains(key)) {
            if (required) fail(p, "missing required 3-vector");
            return fallback;
        }
        const json& v = obj.at(key);
        if (!v.is_array() || v.size() != 3) fail(p, "expected an array of three numbers");
        Vec3 out;
        for (int k = 0; k < 3; ++k) {
            if (!v[k].is_number() || !std::isfinite(v[k].get<double>()))
                fail(p + "/" + std::to_string(k), "expected a finite number");
            out[k] = v[k].get<double>();
        }
        return out;
    }

private:
    const std::string& text_;
    std::string source_;
};

}  // namespace

ConfigError::ConfigError(const std::string& source, int line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

int locate_pointer(const std::string& text, const std::string& pointer) {
    const Locator loc(text);
    auto it = loc.lines().find(pointer);
    return it == loc.lines().end() ? 0 : it->second;
}

RunConfig parse_config(const std::string& text, const std::string& source) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // e.byte is 1-based and may point one past the end
        const size_t end = std::min(e.byte > 0 ? e.byte - 1 : 0, text.size());
        int line = 1;
        for (size_t k = 0; k < end; ++k)
            if (text[k] == '\n') ++line;
        throw ConfigError(source, line, "malformed JSON: " + std::string(e.what()));
    }

    const Reader rd(text, source);
    rd.only_keys(doc, "", {"systems", "hbar", "sweep", "output"});
    RunConfig cfg;

    if (doc.contains("hbar")) {
        cfg.hbar = rd.number(doc, "", "hbar");
        if (!(cfg.hbar > 0.0)) rd.fail("/hbar", "hbar must be positive");
    }

    if (doc.contains("systems")) {
        const json& arr = doc["systems"];
        if (!arr.is_array()) rd.fail("/systems", "expected an array");
        for (size_t k = 0; k < arr.size(); ++k) {
            const std::string p = "/systems/" + std::to_string(k);
            const json& o = arr[k];
            rd.only_keys(o, p, {"P", "s", "j", "m", "euler", "xi"});
            SystemSpec sys;
            sys.P = rd.number(o, p, "P");
            for (const char* key : {"s", "j", "m"})
                if (!o.contains(key)) rd.fail(p + "/" + key, "missing required half-integer");
            sys.q = {rd.half_int(o["s"], p + "/s"), rd.half_int(o["j"], p + "/j"), rd.half_int(o["m"], p + "/m")};
            if (!sys.q.valid()) rd.fail(p, "invalid quantum numbers " + sys.q.str());
            sys.placement.euler = rd.vec3(o, p, "euler", Vec3::Zero(), false);
            sys.placement.xi = rd.vec3(o, p, "xi", Vec3::Zero(), false);
            cfg.systems.push_back(sys);
        }
    }

    if (doc.contains("sweep")) {
        const json& sw = doc["sweep"];
        rd.only_keys(sw, "/sweep", {"j_values", "p_scale", "lines"});
        SweepSpec spec;
        if (!sw.contains("j_values") || !sw["j_values"].is_array() || sw["j_values"].empty())
            rd.fail("/sweep/j_values", "expected a non-empty array");
        for (size_t k = 0; k < sw["j_values"].size(); ++k) {
            const std::string p = "/sweep/j_values/" + std::to_string(k);
            const HalfInt j = rd.half_int(sw["j_values"][k], p);
            if (j.doubled() <= 0) rd.fail(p, "j must be positive");
            spec.j_values.push_back(j);
        }
        if (sw.contains("p_scale")) {
            spec.p_scale = rd.number(sw, "/sweep", "p_scale");
            if (!(spec.p_scale > 0.0)) rd.fail("/sweep/p_scale", "p_scale must be positive");
        }
        if (!sw.contains("lines") || !sw["lines"].is_array() || sw["lines"].size() < 2)
            rd.fail("/sweep/lines", "expected an array of at least two lines");
        for (size_t k = 0; k < sw["lines"].size(); ++k) {
            const std::string p = "/sweep/lines/" + std::to_string(k);
            const json& o = sw["lines"][k];
            rd.only_keys(o, p, {"point", "dir"});
            const Vec3 point = rd.vec3(o, p, "point", Vec3::Zero(), true);
            const Vec3 dir = rd.vec3(o, p, "dir", Vec3::Zero(), true);
            if (!(dir.norm() > 0.0)) rd.fail(p + "/dir", "direction must be nonzero");
            const Line3 line = Line3::through(point, dir);
            for (size_t q = 0; q < spec.lines.size(); ++q)
                if (spec.lines[q].dir.cross(line.dir).norm() < 1e-9)
                    rd.fail(p + "/dir", "line is parallel to line " + std::to_string(q));
            spec.lines.push_back(line);
        }
        cfg.sweep = spec;
    }

    if (doc.contains("output")) {
        const json& out = doc["output"];
        rd.only_keys(out, "/output", {"format", "path"});
        if (out.contains("format")) {
            if (!out["format"].is_string()) rd.fail("/output/format", "expected a string");
            cfg.output.format = out["format"].get<std::string>();
            if (cfg.output.format != "csv" && cfg.output.format != "json")
                rd.fail("/output/format", "format must be \"csv\" or \"json\"");
        }
        if (out.contains("path")) {
            if (!out["path"].is_string()) rd.fail("/output/path", "expected a string");
            cfg.output.path = out["path"].get<std::string>();
        }
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path, 0, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

}  // namespace spingeom::cli
