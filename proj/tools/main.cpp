#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "config.hpp"
#include "spingeom/oracle.hpp"

using namespace spingeom;
using namespace spingeom::cli;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

using Cell = std::variant<std::string, double>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string fmt(double x) {
    if (std::isnan(x)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void write_table(const Table& t, const std::string& format, std::ostream& os) {
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) {
            nlohmann::ordered_json o;
            for (size_t k = 0; k < t.columns.size(); ++k) {
                if (const auto* s = std::get_if<std::string>(&row[k])) o[t.columns[k]] = *s;
                else {
                    const double x = std::get<double>(row[k]);
                    if (std::isfinite(x)) o[t.columns[k]] = std::stod(fmt(x));
                    else o[t.columns[k]] = nullptr;
                }
            }
            arr.push_back(o);
        }
        os << arr.dump(2) << "\n";
        return;
    }
    for (size_t k = 0; k < t.columns.size(); ++k) os << (k ? "," : "") << t.columns[k];
    os << "\n";
    for (const auto& row : t.rows) {
        for (size_t k = 0; k < row.size(); ++k) {
            os << (k ? "," : "");
            if (const auto* s = std::get_if<std::string>(&row[k])) os << csv_field(*s);
            else os << fmt(std::get<double>(row[k]));
        }
        os << "\n";
    }
}

void emit(const Table& t, const OutputSpec& out, const std::string& override_path = "") {
    const std::string path = override_path.empty() ? out.path : override_path;
    if (path.empty()) {
        write_table(t, out.format, std::cout);
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    write_table(t, out.format, f);
}

double deg(double rad) {
    return rad * 180.0 / kPi;
}

std::string label(std::initializer_list<size_t> idx) {
    std::string s;
    for (size_t i : idx) s += (s.empty() ? "" : "-") + std::to_string(i + 1);
    return s;
}

PlacedState placed(const SystemSpec& sys, double hbar) {
    if (!(sys.P > 0.0)) throw DegenerateSystem("P must be positive");
    return {sys.q, ElementaryParams{sys.P, sys.q.s, hbar}, sys.placement};
}

std::vector<Cell> error_row(size_t n_numeric, const std::string& id, const std::string& what) {
    std::vector<Cell> row{id};
    for (size_t k = 0; k < n_numeric; ++k) row.emplace_back(std::nan(""));
    row.emplace_back("error: " + what);
    return row;
}

Table cmd_distance(const RunConfig& cfg) {
    Table t{{"pair", "d12", "d_abs", "numerator", "Dsq", "beta12", "beta12_deg", "classical_part", "quantum_part",
             "uncertainty", "classical_ref", "status"}, {}};
    for (size_t a = 0; a < cfg.systems.size(); ++a)
        for (size_t b = a + 1; b < cfg.systems.size(); ++b) {
            const std::string id = label({a, b});
            try {
                const PairGeometry g = empirical_distance(placed(cfg.systems[a], cfg.hbar), placed(cfg.systems[b], cfg.hbar));
                t.rows.push_back({id, g.d12, std::abs(g.d12), g.numerator, g.Dsq, g.beta12, deg(g.beta12),
                                  g.classical_part, g.quantum_part, g.uncertainty, g.classical_ref, std::string("ok")});
            } catch (const std::exception& e) {
                t.rows.push_back(error_row(10, id, e.what()));
            }
        }
    return t;
}

Table cmd_angle(const RunConfig& cfg) {
    Table t{{"pair", "omega12", "omega12_deg", "beta12", "beta12_deg", "status"}, {}};
    for (size_t a = 0; a < cfg.systems.size(); ++a)
        for (size_t b = a + 1; b < cfg.systems.size(); ++b) {
            const std::string id = label({a, b});
            try {
                const PlacedState s1 = placed(cfg.systems[a], cfg.hbar), s2 = placed(cfg.systems[b], cfg.hbar);
                const double w = empirical_angle(s1, s2);
                const double beta = safe_acos(cos_beta12(s1.placement, s2.placement));
                t.rows.push_back({id, w, deg(w), beta, deg(beta), std::string("ok")});
            } catch (const std::exception& e) {
                t.rows.push_back(error_row(4, id, e.what()));
            }
        }
    return t;
}

Table cmd_volume(const RunConfig& cfg) {
    Table t{{"triple", "volume", "euclidean_volume", "status"}, {}};
    const size_t n = cfg.systems.size();
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            for (size_t c = b + 1; c < n; ++c) {
                const std::string id = label({a, b, c});
                try {
                    const PlacedState s1 = placed(cfg.systems[a], cfg.hbar), s2 = placed(cfg.systems[b], cfg.hbar),
                                      s3 = placed(cfg.systems[c], cfg.hbar);
                    Mat3 dirs;
                    dirs.col(0) = euler_to_rotation(s1.placement.euler).col(2);
                    dirs.col(1) = euler_to_rotation(s2.placement.euler).col(2);
                    dirs.col(2) = euler_to_rotation(s3.placement.euler).col(2);
                    t.rows.push_back({id, empirical_volume(s1, s2, s3), dirs.determinant() / 6.0, std::string("ok")});
                } catch (const std::exception& e) {
                    t.rows.push_back(error_row(2, id, e.what()));
                }
            }
    return t;
}

Table cmd_spectra(const RunConfig& cfg) {
    Table t{{"system", "P", "s", "j", "m", "C2", "J2", "laplacian", "W", "status"}, {}};
    for (size_t k = 0; k < cfg.systems.size(); ++k) {
        const SystemSpec& sys = cfg.systems[k];
        const std::string id = std::to_string(k + 1);
        try {
            const PlacedState st = placed(sys, cfg.hbar);
            const Spectra sp = spectra(st.params, sys.q.j);
            t.rows.push_back({id, sys.P, sys.q.s.str(), sys.q.j.str(), sys.q.m.str(), sp.c2, sp.j2, sp.l2,
                              cfg.hbar * sys.P * sys.q.s.value(), std::string("ok")});
        } catch (const std::exception& e) {
            t.rows.push_back({id, sys.P, sys.q.s.str(), sys.q.j.str(), sys.q.m.str(), std::nan(""), std::nan(""),
                              std::nan(""), std::nan(""), "error: " + std::string(e.what())});
        }
    }
    return t;
}

unsigned thread_count() {
    if (const char* env = std::getenv("SPINGEOM_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n >= 1) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

Table cmd_sweep(const RunConfig& cfg) {
    const SweepSpec& sw = *cfg.sweep;
    struct Task {
        size_t a, b;
        HalfInt j;
    };
    std::vector<Task> tasks;
    for (size_t a = 0; a < sw.lines.size(); ++a)
        for (size_t b = a + 1; b < sw.lines.size(); ++b)
            for (HalfInt j : sw.j_values) tasks.push_back({a, b, j});

    std::vector<std::vector<Cell>> rows(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t k = next++; k < tasks.size(); k = next++) {
            const Task& tk = tasks[k];
            const double P = sw.p_scale * tk.j.value();
            const std::string id = label({tk.a, tk.b});
            try {
                const PairGeometry g = classical_limit_distance(sw.lines[tk.a], sw.lines[tk.b], tk.j, sw.p_scale, cfg.hbar);
                const double d = std::abs(g.d12);
                const double rel = g.classical_ref > 0.0 ? std::abs(d - g.classical_ref) / g.classical_ref : std::nan("");
                rows[k] = {tk.j.str(), P, id, d, g.classical_ref, rel, g.uncertainty, g.beta12};
            } catch (const std::exception&) {
                rows[k] = {tk.j.str(), P, id, std::string("error"), std::string("error"), std::string("error"),
                           std::string("error"), std::string("error")};
            }
        }
    };
    const unsigned n = std::min<size_t>(thread_count(), std::max<size_t>(tasks.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    return {{"j", "P", "pair", "d_abs", "classical_ref", "rel_err", "uncertainty", "beta12"}, std::move(rows)};
}

HalfInt parse_limit(const std::string& s) {
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return HalfInt::from_double(std::stod(s));
        if (s.substr(slash + 1) == "2") return HalfInt::from_doubled(std::stoi(s.substr(0, slash)));
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("limit", "expected a non-negative half-integer: " + s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Empirical geometry of E(3) elementary systems"};
    app.require_subcommand(1);

    std::string smax = "2", jmax = "6";
    double tol = 1e-9;
    auto* verify = app.add_subcommand("verify", "Run the closed-form vs brute-force verification suite");
    verify->add_option("--smax", smax, "Largest |s|");
    verify->add_option("--jmax", jmax, "Largest j");
    verify->add_option("--tol", tol, "Absolute tolerance")->check(CLI::PositiveNumber);

    std::string config_path, out_path;
    std::map<std::string, CLI::App*> table_cmds;
    for (const char* name : {"distance", "angle", "volume", "spectra", "sweep"}) {
        auto* sub = app.add_subcommand(name, std::string("Compute the ") + name + " table");
        sub->add_option("config,--config", config_path, "JSON run configuration")->required();
        table_cmds[name] = sub;
    }
    table_cmds["sweep"]->add_option("--out", out_path, "Output file (overrides output.path)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        if (verify->parsed()) {
            SuiteLimits lim{parse_limit(smax), parse_limit(jmax)};
            if (lim.s_max.doubled() < 0 || lim.j_max.doubled() < 0) {
                std::cerr << "error: limits must be non-negative\n";
                return kExitConfig;
            }
            const VerificationReport rep = run_suite(lim, tol);
            std::cout << rep.to_json() << "\n";
            return rep.all_pass() ? 0 : kExitFail;
        }
        const RunConfig cfg = load_config(config_path);
        if (table_cmds["distance"]->parsed()) emit(cmd_distance(cfg), cfg.output);
        else if (table_cmds["angle"]->parsed()) emit(cmd_angle(cfg), cfg.output);
        else if (table_cmds["volume"]->parsed()) emit(cmd_volume(cfg), cfg.output);
        else if (table_cmds["spectra"]->parsed()) emit(cmd_spectra(cfg), cfg.output);
        else if (table_cmds["sweep"]->parsed()) {
            if (!cfg.sweep) throw ConfigError(config_path, 1, "/sweep: missing sweep section");
            emit(cmd_sweep(cfg), cfg.output, out_path);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return 0;
}
