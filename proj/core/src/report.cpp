#include "ancss/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ancss/channel.hpp"
#include "ancss/version.hpp"

namespace ancss {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& text, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid number for " + what + ": '" + text + "'");
    }
}

long long parse_ll(const std::string& text, const std::string& what) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(text, &pos);
        if (pos != text.size()) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid integer for " + what + ": '" + text + "'");
    }
}

bool parse_bool(const std::string& text, const std::string& what) {
    if (text == "true" || text == "1" || text == "yes" || text == "on") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no" || text == "off") {
        return false;
    }
    throw ConfigError("invalid boolean for " + what + ": '" + text + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        parts.push_back(trim(item));
    }
    return parts;
}

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

RunMode parse_mode(const std::string& name) {
    if (name == "analytic") return RunMode::Analytic;
    if (name == "simulate") return RunMode::Simulate;
    if (name == "both") return RunMode::Both;
    if (name == "verify") return RunMode::Verify;
    throw ConfigError("unknown mode '" + name +
                      "' (expected analytic, simulate, both or verify)");
}

std::vector<double> parse_ebn0_grid(const std::string& text) {
    if (trim(text).empty()) {
        throw ConfigError("empty Eb/N0 grid");
    }
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) {
            throw ConfigError("Eb/N0 range must be start:step:stop, got '" +
                              text + "'");
        }
        const double start = parse_double(parts[0], "ebn0 start");
        const double step = parse_double(parts[1], "ebn0 step");
        const double stop = parse_double(parts[2], "ebn0 stop");
        if (!(step > 0.0)) {
            throw ConfigError("Eb/N0 step must be positive");
        }
        if (stop < start) {
            throw ConfigError("Eb/N0 stop must be >= start");
        }
        const long long count =
            static_cast<long long>(std::floor((stop - start) / step + 1e-9)) + 1;
        for (long long i = 0; i < count; ++i) {
            grid.push_back(start + step * static_cast<double>(i));
        }
    } else {
        for (const auto& part : split(text, ',')) {
            grid.push_back(parse_double(part, "ebn0 value"));
        }
    }
    if (grid.empty()) {
        throw ConfigError("empty Eb/N0 grid");
    }
    return grid;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    for (const auto& part : split(text, ',')) {
        values.push_back(static_cast<int>(parse_ll(part, "list entry")));
    }
    if (values.empty()) {
        throw ConfigError("empty list");
    }
    return values;
}

std::map<std::string, std::string> load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::map<std::string, std::string> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config file '" + path + "' line " +
                              std::to_string(lineno) + ": expected key = value");
        }
        entries[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return entries;
}

void apply_config_entries(const std::map<std::string, std::string>& entries,
                          RunConfig& config) {
    for (const auto& [key, value] : entries) {
        if (key == "L") {
            config.sweep.user_counts = parse_int_list(value);
        } else if (key == "beta") {
            config.sweep.betas = parse_int_list(value);
        } else if (key == "ebn0") {
            config.sweep.ebn0_grid_db = parse_ebn0_grid(value);
        } else if (key == "seed") {
            config.sweep.seed =
                static_cast<std::uint64_t>(parse_ll(value, "seed"));
        } else if (key == "min_errors") {
            config.sweep.stop.min_errors = parse_ll(value, "min_errors");
        } else if (key == "max_trials") {
            config.sweep.stop.max_trials = parse_ll(value, "max_trials");
        } else if (key == "mode") {
            config.mode = parse_mode(value);
        } else if (key == "out") {
            config.out_path = value;
        } else if (key == "per_bit_energy") {
            config.sweep.round.per_bit_energy = parse_bool(value, key);
        } else if (key == "exact_ser") {
            config.exact_ser = parse_bool(value, key);
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
}

std::string render_csv(const std::vector<AnalyticPoint>& analytic,
                       const std::vector<BerPoint>& simulated,
                       const std::vector<BpskPoint>& bpsk) {
    struct Row {
        int kind;  // 0 analytic, 1 bpsk, 2 simulated: alphabetical order
        int num_users;
        int beta;
        double ebn0_db;
        std::string text;
    };
    std::vector<Row> rows;
    rows.reserve(analytic.size() + simulated.size() + bpsk.size());

    for (const auto& p : analytic) {
        rows.push_back({0, p.num_users, p.beta, p.ebn0_db,
                        "analytic," + fmt_g(p.ebn0_db) + "," +
                            std::to_string(p.num_users) + "," +
                            std::to_string(p.beta) + "," + fmt_g(p.ber) +
                            ",,,"});
    }
    for (const auto& p : bpsk) {
        rows.push_back({1, 1, 0, p.ebn0_db,
                        "bpsk," + fmt_g(p.ebn0_db) + ",1,," + fmt_g(p.ber) +
                            ",,,"});
    }
    for (const auto& p : simulated) {
        rows.push_back({2, p.num_users, p.beta, p.ebn0_db,
                        "simulated," + fmt_g(p.ebn0_db) + "," +
                            std::to_string(p.num_users) + "," +
                            std::to_string(p.beta) + "," + fmt_g(p.ber_hat) +
                            "," + fmt_g(p.ci95_halfwidth) + "," +
                            std::to_string(p.trials) + "," +
                            std::to_string(p.errors)});
    }

    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.num_users != b.num_users) return a.num_users < b.num_users;
        if (a.beta != b.beta) return a.beta < b.beta;
        return a.ebn0_db < b.ebn0_db;
    });

    std::string out = "kind,ebn0_db,L,beta,ber,ci95,trials,errors\n";
    for (const auto& row : rows) {
        out += row.text;
        out += '\n';
    }
    return out;
}

std::string render_manifest(const RunConfig& config,
                            const std::string& timestamp_utc) {
    const auto mode_name = [](RunMode m) {
        switch (m) {
            case RunMode::Analytic: return "analytic";
            case RunMode::Simulate: return "simulate";
            case RunMode::Both: return "both";
            case RunMode::Verify: return "verify";
        }
        return "both";
    };
    std::string s = "{\n";
    s += "  \"tool\": \"ancss\",\n";
    s += "  \"version\": \"" + std::string(kVersion) + "\",\n";
    s += "  \"timestamp_utc\": \"" + timestamp_utc + "\",\n";
    s += "  \"mode\": \"" + std::string(mode_name(config.mode)) + "\",\n";
    s += "  \"seed\": " + std::to_string(config.sweep.seed) + ",\n";
    s += "  \"L\": [";
    for (std::size_t i = 0; i < config.sweep.user_counts.size(); ++i) {
        s += (i ? "," : "") + std::to_string(config.sweep.user_counts[i]);
    }
    s += "],\n  \"beta\": [";
    for (std::size_t i = 0; i < config.sweep.betas.size(); ++i) {
        s += (i ? "," : "") + std::to_string(config.sweep.betas[i]);
    }
    s += "],\n  \"ebn0_db\": [";
    for (std::size_t i = 0; i < config.sweep.ebn0_grid_db.size(); ++i) {
        s += (i ? "," : "") + fmt_g(config.sweep.ebn0_grid_db[i]);
    }
    s += "],\n";
    s += "  \"min_errors\": " + std::to_string(config.sweep.stop.min_errors) +
         ",\n";
    s += "  \"max_trials\": " + std::to_string(config.sweep.stop.max_trials) +
         ",\n";
    s += "  \"per_bit_energy\": " +
         std::string(config.sweep.round.per_bit_energy ? "true" : "false") +
         ",\n";
    s += "  \"exact_ser\": " + std::string(config.exact_ser ? "true" : "false") +
         ",\n";
    s += "  \"out\": \"" + config.out_path + "\",\n";
    s += "  \"provenance\": {\"analytic\": \"closed form\", \"simulated\": "
         "\"monte carlo\", \"bpsk\": \"closed form\"}\n";
    s += "}\n";
    return s;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw std::runtime_error("write failed for '" + path + "'");
    }
}

VerifyOutcome verify_points(const std::vector<BerPoint>& points,
                            const StopRule& stop, double variance_scale) {
    VerifyOutcome outcome;
    outcome.rows.reserve(points.size());
    for (const auto& point : points) {
        VerifyRow row;
        row.point = point;
        const double eb = static_cast<double>(point.beta);
        const double n0 = ebn0_to_n0(point.ebn0_db, point.beta);
        const double sigma2 =
            variance_scale * decision_variance(eb, n0, point.num_users);
        row.analytic_ber = ber_closed_form(eb, sigma2);
        row.qualifying = point.errors >= stop.min_errors;
        if (row.qualifying) {
            row.standard_error =
                std::sqrt(row.analytic_ber * (1.0 - row.analytic_ber) /
                          static_cast<double>(point.trials));
            row.deviation_sigmas =
                std::fabs(point.ber_hat - row.analytic_ber) / row.standard_error;
            row.pass = row.deviation_sigmas <= 4.0;
        }
        outcome.all_pass = outcome.all_pass && row.pass;
        outcome.rows.push_back(row);
    }
    return outcome;
}

VerifyOutcome verify_sweep(const SweepConfig& config, double variance_scale) {
    return verify_points(run_sweep(config), config.stop, variance_scale);
}

void print_verify_table(const VerifyOutcome& outcome, std::ostream& os) {
    char buf[160];
    for (const auto& row : outcome.rows) {
        const auto& p = row.point;
        if (!row.qualifying) {
            std::snprintf(buf, sizeof(buf),
                          "SKIP  L=%d beta=%-4d ebn0=%-4g ber_hat=%.4e "
                          "analytic=%.4e errors=%lld (below min_errors)",
                          p.num_users, p.beta, p.ebn0_db, p.ber_hat,
                          row.analytic_ber, p.errors);
        } else {
            std::snprintf(buf, sizeof(buf),
                          "%s  L=%d beta=%-4d ebn0=%-4g ber_hat=%.4e "
                          "analytic=%.4e dev=%.2f sigma (trials=%lld errors=%lld)",
                          row.pass ? "PASS" : "FAIL", p.num_users, p.beta,
                          p.ebn0_db, p.ber_hat, row.analytic_ber,
                          row.deviation_sigmas, p.trials, p.errors);
        }
        os << buf << '\n';
    }
    os << (outcome.all_pass ? "verify: all qualifying points PASS"
                            : "verify: FAIL")
       << '\n';
}

}  // namespace ancss
