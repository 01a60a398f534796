#include "qdecoh/config.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace qdecoh {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& s, int line) {
    const std::string t = trim(s);
    if (t.empty()) throw config_error(line, "empty numeric value");
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size())
        throw config_error(line, "malformed number '" + t + "'");
    return v;
}

long long parse_int(const std::string& s, int line) {
    const double v = parse_double(s, line);
    if (v != std::floor(v) || std::abs(v) > 9e18)
        throw config_error(line, "expected an integer, got '" + trim(s) + "'");
    return static_cast<long long>(v);
}

std::vector<double> parse_list(const std::string& s, int line) {
    std::vector<double> out;
    std::string t = trim(s);
    if (t.empty()) return out;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_double(item, line));
    return out;
}

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

cplx parse_complex(const std::string& text) {
    std::string t = trim(text);
    if (t.empty()) throw std::invalid_argument("empty complex literal");
    if (t.back() != 'i' && t.back() != 'I') {
        char* end = nullptr;
        const double re = std::strtod(t.c_str(), &end);
        if (end != t.c_str() + t.size())
            throw std::invalid_argument("malformed complex literal '" + t + "'");
        return cplx(re, 0.0);
    }
    t.pop_back(); // drop the 'i'
    // Split at the last top-level +/- (not a leading sign, not an exponent sign).
    size_t split = std::string::npos;
    for (size_t i = t.size(); i-- > 1;) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto unit_or_value = [](const std::string& s) {
        const std::string u = trim(s);
        if (u.empty() || u == "+") return 1.0;
        if (u == "-") return -1.0;
        char* end = nullptr;
        const double v = std::strtod(u.c_str(), &end);
        if (end != u.c_str() + u.size())
            throw std::invalid_argument("malformed complex literal");
        return v;
    };
    if (split == std::string::npos) return cplx(0.0, unit_or_value(t));
    const std::string re_part = trim(t.substr(0, split));
    const std::string im_part = t.substr(split); // keeps the sign
    char* end = nullptr;
    const double re = std::strtod(re_part.c_str(), &end);
    if (end != re_part.c_str() + re_part.size())
        throw std::invalid_argument("malformed complex literal '" + text + "'");
    return cplx(re, unit_or_value(im_part));
}

std::string format_complex(cplx z) {
    if (z.imag() == 0) return num(z.real());
    if (z.real() == 0) return num(z.imag()) + "i";
    return num(z.real()) + (z.imag() >= 0 ? "+" : "") + num(z.imag()) + "i";
}

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream is(text);
    std::string raw;
    int line = 0;
    int q_min_line = 0, q_max_line = 0, t_list_line = 0;
    while (std::getline(is, raw)) {
        ++line;
        std::string s = raw;
        const auto hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw config_error(line, "expected 'key = value'");
        const std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));

        if (key == "m") {
            cfg.m = parse_double(val, line);
            if (!(cfg.m > 0)) throw config_error(line, "m must be positive");
        } else if (key == "kappa") {
            cfg.kappa = parse_double(val, line);
        } else if (key == "a_harm") {
            cfg.a_harm = parse_double(val, line);
            if (cfg.a_harm < 0) throw config_error(line, "a_harm must be >= 0");
        } else if (key == "l") {
            cfg.l = parse_double(val, line);
        } else if (key == "hbar") {
            cfg.hbar = parse_double(val, line);
            if (!(cfg.hbar > 0)) throw config_error(line, "hbar must be positive");
        } else if (key == "n_points") {
            const long long n = parse_int(val, line);
            if (n < 2 || (n & (n - 1)) != 0)
                throw config_error(line, "n_points must be a power of two >= 2");
            cfg.n_points = static_cast<int>(n);
        } else if (key == "q_min") {
            cfg.q_min = parse_double(val, line);
            q_min_line = line;
        } else if (key == "q_max") {
            cfg.q_max = parse_double(val, line);
            q_max_line = line;
        } else if (key == "dt") {
            cfg.dt = parse_double(val, line);
            if (!(cfg.dt > 0)) throw config_error(line, "dt must be positive");
        } else if (key == "T_list") {
            cfg.T_list = parse_list(val, line);
            t_list_line = line;
        } else if (key == "checkpoint_T") {
            cfg.checkpoint_T = parse_list(val, line);
        } else if (key == "ratio") {
            cfg.ratio = parse_double(val, line);
        } else if (key == "n_samples") {
            cfg.n_samples = static_cast<int>(parse_int(val, line));
            if (cfg.n_samples < 1) throw config_error(line, "n_samples must be >= 1");
        } else if (key == "dp_max") {
            cfg.dp_max = parse_double(val, line);
            if (cfg.dp_max < 0) throw config_error(line, "dp_max must be >= 0");
        } else if (key == "target") {
            cfg.target = parse_double(val, line);
            if (!(cfg.target > 0) || !(cfg.target < 1))
                throw config_error(line, "target must lie in (0, 1)");
        } else if (key == "f") {
            cfg.f = static_cast<int>(parse_int(val, line));
            if (cfg.f < 1) throw config_error(line, "f must be >= 1");
        } else if (key == "M") {
            cfg.M = parse_double(val, line);
            if (!(cfg.M > 0)) throw config_error(line, "M must be positive");
        } else if (key == "omega") {
            cfg.omega = parse_double(val, line);
            if (!(cfg.omega > 0)) throw config_error(line, "omega must be positive");
        } else if (key == "alpha") {
            try {
                cfg.alpha = parse_complex(val);
            } catch (const std::invalid_argument& e) {
                throw config_error(line, e.what());
            }
        } else if (key == "n_max") {
            cfg.n_max = static_cast<int>(parse_int(val, line));
            if (cfg.n_max < 0) throw config_error(line, "n_max must be >= 0");
        } else if (key == "out_dir") {
            cfg.out_dir = val;
        } else if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(parse_int(val, line));
        } else {
            throw config_error(line, "unknown key '" + key + "'");
        }
    }
    if (!(cfg.q_max > cfg.q_min))
        throw config_error(std::max(q_min_line, q_max_line),
                           "q_max must exceed q_min");
    if (cfg.T_list.empty())
        throw config_error(t_list_line, "T_list must not be empty");
    for (size_t i = 0; i + 1 < cfg.T_list.size(); ++i)
        if (cfg.T_list[i] >= cfg.T_list[i + 1])
            throw config_error(t_list_line, "T_list must be strictly ascending");
    if (cfg.T_list.front() < 0)
        throw config_error(t_list_line, "T_list entries must be >= 0");
    return cfg;
}

ExperimentConfig parse_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw config_error(0, "cannot open config file " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_config_text(ss.str());
}

void write_config(std::ostream& os, const ExperimentConfig& cfg) {
    auto list = [](const std::vector<double>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i)
            s += (i ? ", " : "") + num(v[i]);
        return s;
    };
    os << "# resolved qdecoh configuration\n";
    os << "m = " << num(cfg.m) << "\n";
    os << "kappa = " << num(cfg.kappa) << "\n";
    os << "a_harm = " << num(cfg.a_harm) << "\n";
    os << "l = " << num(cfg.l) << "\n";
    os << "hbar = " << num(cfg.hbar) << "\n";
    os << "n_points = " << cfg.n_points << "\n";
    os << "q_min = " << num(cfg.q_min) << "\n";
    os << "q_max = " << num(cfg.q_max) << "\n";
    os << "dt = " << num(cfg.dt) << "\n";
    os << "T_list = " << list(cfg.T_list) << "\n";
    os << "checkpoint_T = " << list(cfg.checkpoint_T) << "\n";
    os << "ratio = " << num(cfg.ratio) << "\n";
    os << "n_samples = " << cfg.n_samples << "\n";
    os << "dp_max = " << num(cfg.dp_max) << "\n";
    os << "target = " << num(cfg.target) << "\n";
    os << "f = " << cfg.f << "\n";
    os << "M = " << num(cfg.M) << "\n";
    os << "omega = " << num(cfg.omega) << "\n";
    os << "alpha = " << format_complex(cfg.alpha) << "\n";
    os << "n_max = " << cfg.n_max << "\n";
    os << "out_dir = " << cfg.out_dir << "\n";
    os << "seed = " << cfg.seed << "\n";
}

} // namespace qdecoh
