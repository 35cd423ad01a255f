#include "spinchain/io.hpp"

#include <cctype>
#include <cstdio>

#include "json.hpp"
#include "spinchain/errors.hpp"

namespace spinchain::io {

namespace {
constexpr double kPi = 3.14159265358979323846;

bool parse_number(const std::string& s, double& out) {
    if (s.empty()) return false;
    try {
        std::size_t used = 0;
        out = std::stod(s, &used);
        return used == s.size();
    } catch (...) {
        return false;
    }
}

nlohmann::ordered_json metadata_json(const Metadata& meta) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [key, value] : meta) j[key] = value;
    return j;
}
}  // namespace

double parse_angle(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ConfigError("empty angle value");

    const std::size_t pos = s.find("pi");
    if (pos == std::string::npos) {
        double v = 0.0;
        if (!parse_number(s, v)) throw ConfigError("cannot parse angle '" + text + "'");
        return v;
    }

    const std::string head = s.substr(0, pos);
    const std::string tail = s.substr(pos + 2);

    double coeff = 1.0;
    if (head == "-") {
        coeff = -1.0;
    } else if (head == "+" || head.empty()) {
        coeff = 1.0;
    } else if (!parse_number(head, coeff)) {
        throw ConfigError("cannot parse angle '" + text + "'");
    }

    double divisor = 1.0;
    if (!tail.empty()) {
        if (tail[0] != '/' || !parse_number(tail.substr(1), divisor) || divisor == 0.0)
            throw ConfigError("cannot parse angle '" + text + "'");
    }
    return coeff * kPi / divisor;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_metadata_csv(std::ostream& os, const Metadata& meta) {
    for (const auto& [key, value] : meta) os << "# " << key << "=" << value << "\n";
}

void write_trace_csv(std::ostream& os, const FidelityTrace& trace, const Metadata& meta) {
    write_metadata_csv(os, meta);
    os << "t,F\n";
    for (std::size_t i = 0; i < trace.times.size(); ++i)
        os << format_double(trace.times[i]) << "," << format_double(trace.values[i]) << "\n";
}

void write_sweep_csv(std::ostream& os, const SweepResult& sweep, const Metadata& meta) {
    write_metadata_csv(os, meta);
    os << "t,mean_F,min_F,max_F\n";
    for (std::size_t i = 0; i < sweep.times.size(); ++i)
        os << format_double(sweep.times[i]) << "," << format_double(sweep.mean_f[i]) << ","
           << format_double(sweep.min_f[i]) << "," << format_double(sweep.max_f[i]) << "\n";
}

void write_disorder_csv(std::ostream& os, const std::vector<DisorderSweepResult>& runs,
                        const Metadata& meta) {
    write_metadata_csv(os, meta);
    os << "scenario,delta,triple_index,varphi,omega,phi,F\n";
    for (const auto& run : runs)
        for (std::size_t d = 0; d < run.deltas.size(); ++d)
            for (std::size_t i = 0; i < run.triples.size(); ++i) {
                const GateAngles& a = run.triples[i];
                os << disorder_mode_name(run.mode) << "," << format_double(run.deltas[d]) << ","
                   << i << "," << format_double(a.varphi) << "," << format_double(a.omega) << ","
                   << format_double(a.phi) << "," << format_double(run.per_point[d][i]) << "\n";
            }
}

void write_disorder_mean_csv(std::ostream& os, const std::vector<DisorderSweepResult>& runs,
                             const Metadata& meta) {
    write_metadata_csv(os, meta);
    os << "scenario,delta,mean_F\n";
    for (const auto& run : runs)
        for (std::size_t d = 0; d < run.deltas.size(); ++d)
            os << disorder_mode_name(run.mode) << "," << format_double(run.deltas[d]) << ","
               << format_double(run.mean_f[d]) << "\n";
}

void write_trace_json(std::ostream& os, const FidelityTrace& trace, const Metadata& meta) {
    nlohmann::ordered_json doc;
    doc["metadata"] = metadata_json(meta);
    auto& records = doc["records"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < trace.times.size(); ++i)
        records.push_back({{"t", trace.times[i]}, {"F", trace.values[i]}});
    os << doc.dump(2) << "\n";
}

void write_sweep_json(std::ostream& os, const SweepResult& sweep, const Metadata& meta) {
    nlohmann::ordered_json doc;
    doc["metadata"] = metadata_json(meta);
    auto& records = doc["records"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < sweep.times.size(); ++i)
        records.push_back({{"t", sweep.times[i]},
                           {"mean_F", sweep.mean_f[i]},
                           {"min_F", sweep.min_f[i]},
                           {"max_F", sweep.max_f[i]}});
    os << doc.dump(2) << "\n";
}

void write_disorder_json(std::ostream& os, const std::vector<DisorderSweepResult>& runs,
                         const Metadata& meta) {
    nlohmann::ordered_json doc;
    doc["metadata"] = metadata_json(meta);
    auto& records = doc["records"] = nlohmann::ordered_json::array();
    auto& averages = doc["averages"] = nlohmann::ordered_json::array();
    for (const auto& run : runs) {
        for (std::size_t d = 0; d < run.deltas.size(); ++d) {
            for (std::size_t i = 0; i < run.triples.size(); ++i) {
                const GateAngles& a = run.triples[i];
                records.push_back({{"scenario", disorder_mode_name(run.mode)},
                                   {"delta", run.deltas[d]},
                                   {"triple_index", i},
                                   {"varphi", a.varphi},
                                   {"omega", a.omega},
                                   {"phi", a.phi},
                                   {"F", run.per_point[d][i]}});
            }
            averages.push_back({{"scenario", disorder_mode_name(run.mode)},
                                {"delta", run.deltas[d]},
                                {"mean_F", run.mean_f[d]}});
        }
    }
    os << doc.dump(2) << "\n";
}

void write_disorder_mean_json(std::ostream& os, const std::vector<DisorderSweepResult>& runs,
                              const Metadata& meta) {
    nlohmann::ordered_json doc;
    doc["metadata"] = metadata_json(meta);
    auto& records = doc["records"] = nlohmann::ordered_json::array();
    for (const auto& run : runs)
        for (std::size_t d = 0; d < run.deltas.size(); ++d)
            records.push_back({{"scenario", disorder_mode_name(run.mode)},
                               {"delta", run.deltas[d]},
                               {"mean_F", run.mean_f[d]}});
    os << doc.dump(2) << "\n";
}

std::string companion_mean_path(const std::string& path) {
    const std::size_t slash = path.find_last_of('/');
    const std::size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + "_mean";
    return path.substr(0, dot) + "_mean" + path.substr(dot);
}

}  // namespace spinchain::io
