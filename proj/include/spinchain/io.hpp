#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "spinchain/experiments.hpp"
#include "spinchain/fidelity.hpp"

namespace spinchain::io {

// Angle grammar: plain radians ("1.57"), or multiples of pi written with the
// literal token: "pi", "-pi", "2pi", "0.3pi", "pi/2", "2pi/5". Avoids decimal
// rounding of pi in configs. Throws ConfigError on anything else.
double parse_angle(const std::string& text);

// Full-precision decimal formatting (17 significant digits, '.' separator).
std::string format_double(double v);

// Ordered key=value pairs echoed into every output file as '# key=value'
// comment lines, so a file records the exact run that produced it.
using Metadata = std::vector<std::pair<std::string, std::string>>;

void write_metadata_csv(std::ostream& os, const Metadata& meta);

// t,F
void write_trace_csv(std::ostream& os, const FidelityTrace& trace, const Metadata& meta);
// t,mean_F,min_F,max_F
void write_sweep_csv(std::ostream& os, const SweepResult& sweep, const Metadata& meta);
// scenario,delta,triple_index,varphi,omega,phi,F
void write_disorder_csv(std::ostream& os, const std::vector<DisorderSweepResult>& runs,
                        const Metadata& meta);
// scenario,delta,mean_F
void write_disorder_mean_csv(std::ostream& os, const std::vector<DisorderSweepResult>& runs,
                             const Metadata& meta);

// JSON documents carrying {"metadata": {...}, "records": [...]}; the
// disorder document also carries an "averages" array.
void write_trace_json(std::ostream& os, const FidelityTrace& trace, const Metadata& meta);
void write_sweep_json(std::ostream& os, const SweepResult& sweep, const Metadata& meta);
void write_disorder_json(std::ostream& os, const std::vector<DisorderSweepResult>& runs,
                         const Metadata& meta);
void write_disorder_mean_json(std::ostream& os, const std::vector<DisorderSweepResult>& runs,
                              const Metadata& meta);

// "out.csv" -> "out_mean.csv" (companion per-delta averages file).
std::string companion_mean_path(const std::string& path);

}  // namespace spinchain::io
