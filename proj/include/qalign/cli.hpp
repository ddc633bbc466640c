#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qalign/channels.hpp"
#include "qalign/metrics.hpp"

namespace qalign {

// Parsed form of a channel spec string:
//   dep:p=.. | bf:p=.. | pf:p=.. | pauli:lx=..,ly=..,lz=.. | ad:g=..
//   | not:p=..,da=.. | affine:m=<9 reals>,c=<3 reals>
struct ChannelSpec {
    std::string family;
    std::map<std::string, double> params;   // for the named families
    lin::Mat3 m;                            // for affine
    lin::Vec3 c;
};

ChannelSpec parse_channel_spec(const std::string& text);

// One line per valid form; used in error messages.
std::string channel_spec_grammar();

AffineChannel build_channel(const ChannelSpec& spec);

// Replace one named parameter (the sweep axis) before building.
ChannelSpec with_parameter(ChannelSpec spec, const std::string& name, double value);

// Input-state family member: Bloch angles (radians) plus radius.
struct StateSpec {
    double phi = 0.0;    // [0, 2 pi)
    double theta = 0.0;  // [0, pi]
    double radius = 0.0; // [0, 1]
};

// "phi=..,theta=..,r=.."; plain radians only, unit suffixes are rejected.
StateSpec parse_state_spec(const std::string& text);

BlochVector bloch_from_state_spec(const StateSpec& s);

enum class ReferenceTransform { none, ideal_not };

struct SweepSpec {
    std::string channel;                       // channel spec string
    std::string param_name;
    double start = 0.0;
    double stop = 1.0;
    int count = 2;                             // >= 2
    std::vector<StateSpec> states;             // non-empty
    ReferenceTransform reference = ReferenceTransform::none;
};

struct SweepRow {
    double param = 0.0;
    lin::Vec3 r;       // first member of the compared pair
    lin::Vec3 rp;      // second member (the channel output)
    double g_star = 1.0;
    double fidelity = 1.0;
    double d_n = 0.0;
    double theta = 0.0;
    lin::Vec3 axis;
    bool degenerate = false;
};

// Family member outer, parameter value inner; deterministic row order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

extern const char* const kSweepCsvHeader;
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os);

// Full pair report: metric block, S* entries, axis, theta and U* entries.
std::string format_pair_kv(const BlochVector& r, const BlochVector& s);
std::string format_pair_json(const BlochVector& r, const BlochVector& s);

// M, c, unitality, fixed points on the z axis, ball-preservation check.
std::string format_channel_info(const AffineChannel& ch);

// 17 significant digits, the precision used in all machine-readable output.
std::string format_real(double x);

}  // namespace qalign
