#include "qalign/cli.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qalign/errors.hpp"

namespace qalign {

using lin::Mat3;
using lin::Vec3;

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

double parse_strict_double(const std::string& text, const std::string& what) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw invalid_parameter_error(what + ": cannot parse number from '" + text + "'");
    }
    if (pos != text.size())
        throw invalid_parameter_error(what + ": trailing characters in '" + text +
                                      "' (values are plain reals; angles are radians, unit suffixes are rejected)");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

std::pair<std::string, std::string> split_key_value(const std::string& item, const std::string& what) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos)
        throw invalid_parameter_error(what + ": expected key=value, got '" + item + "'");
    return {item.substr(0, eq), item.substr(eq + 1)};
}

}  // namespace

std::string channel_spec_grammar() {
    return "valid channel specs:\n"
           "  dep:p=<v>\n"
           "  bf:p=<v>\n"
           "  pf:p=<v>\n"
           "  pauli:lx=<v>,ly=<v>,lz=<v>\n"
           "  ad:g=<v>\n"
           "  not:p=<v>,da=<v>\n"
           "  affine:m=<9 comma-separated reals>,c=<3 reals>\n";
}

ChannelSpec parse_channel_spec(const std::string& text) {
    ChannelSpec spec;
    const std::size_t colon = text.find(':');
    spec.family = text.substr(0, colon == std::string::npos ? text.size() : colon);
    const std::string rest = colon == std::string::npos ? std::string() : text.substr(colon + 1);

    if (spec.family == "affine") {
        const std::size_t mpos = rest.find("m=");
        const std::size_t cpos = rest.find(",c=");
        if (mpos != 0 || cpos == std::string::npos)
            throw invalid_parameter_error("malformed affine spec '" + text + "'\n" + channel_spec_grammar());
        const std::vector<std::string> mvals = split(rest.substr(2, cpos - 2), ',');
        const std::vector<std::string> cvals = split(rest.substr(cpos + 3), ',');
        if (mvals.size() != 9 || cvals.size() != 3)
            throw invalid_parameter_error("affine spec needs 9 matrix entries and 3 translation entries\n" +
                                          channel_spec_grammar());
        for (int k = 0; k < 9; ++k)
            spec.m.a[static_cast<std::size_t>(k)] =
                parse_strict_double(mvals[static_cast<std::size_t>(k)], "affine m");
        spec.c.x = parse_strict_double(cvals[0], "affine c");
        spec.c.y = parse_strict_double(cvals[1], "affine c");
        spec.c.z = parse_strict_double(cvals[2], "affine c");
        return spec;
    }

    if (!rest.empty()) {
        for (const std::string& item : split(rest, ',')) {
            const auto [key, value] = split_key_value(item, "channel spec");
            if (spec.params.count(key))
                throw invalid_parameter_error("duplicate channel parameter '" + key + "'");
            spec.params[key] = parse_strict_double(value, "channel parameter " + key);
        }
    }
    return spec;
}

namespace {

void expect_keys(const ChannelSpec& spec, std::initializer_list<const char*> keys) {
    for (const char* k : keys)
        if (!spec.params.count(k))
            throw invalid_parameter_error("channel '" + spec.family + "' is missing parameter '" + k + "'\n" +
                                          channel_spec_grammar());
    for (const auto& [k, v] : spec.params) {
        bool known = false;
        for (const char* want : keys) known = known || (k == want);
        if (!known)
            throw invalid_parameter_error("channel '" + spec.family + "' has no parameter '" + k + "'\n" +
                                          channel_spec_grammar());
    }
}

}  // namespace

AffineChannel build_channel(const ChannelSpec& spec) {
    if (spec.family == "dep") {
        expect_keys(spec, {"p"});
        return depolarizing(spec.params.at("p"));
    }
    if (spec.family == "bf") {
        expect_keys(spec, {"p"});
        return bit_flip(spec.params.at("p"));
    }
    if (spec.family == "pf") {
        expect_keys(spec, {"p"});
        return phase_flip(spec.params.at("p"));
    }
    if (spec.family == "pauli") {
        expect_keys(spec, {"lx", "ly", "lz"});
        return diagonal_pauli(spec.params.at("lx"), spec.params.at("ly"), spec.params.at("lz"));
    }
    if (spec.family == "ad") {
        expect_keys(spec, {"g"});
        return amplitude_damping(spec.params.at("g"));
    }
    if (spec.family == "not") {
        expect_keys(spec, {"p", "da"});
        return imperfect_not(spec.params.at("p"), spec.params.at("da"));
    }
    if (spec.family == "affine") {
        return affine_channel(spec.m, spec.c);
    }
    throw invalid_parameter_error("unknown channel family '" + spec.family + "'\n" + channel_spec_grammar());
}

ChannelSpec with_parameter(ChannelSpec spec, const std::string& name, double value) {
    if (spec.family == "affine")
        throw invalid_parameter_error("affine channels have no named parameter to sweep");
    spec.params[name] = value;  // unknown names are rejected when the channel is built
    return spec;
}

StateSpec parse_state_spec(const std::string& text) {
    StateSpec s;
    bool got_phi = false, got_theta = false, got_r = false;
    for (const std::string& item : split(text, ',')) {
        const auto [key, value] = split_key_value(item, "state spec");
        if (key == "phi") {
            s.phi = parse_strict_double(value, "state phi");
            got_phi = true;
        } else if (key == "theta") {
            s.theta = parse_strict_double(value, "state theta");
            got_theta = true;
        } else if (key == "r") {
            s.radius = parse_strict_double(value, "state r");
            got_r = true;
        } else {
            throw invalid_parameter_error("state spec: unknown key '" + key + "' (want phi, theta, r)");
        }
    }
    if (!got_phi || !got_theta || !got_r)
        throw invalid_parameter_error("state spec needs phi=..,theta=..,r=.. (radians)");
    constexpr double kTwoPi = 6.28318530717958647692;
    constexpr double kPi = 3.14159265358979323846;
    if (s.radius < 0.0 || s.radius > 1.0 + 1e-12)
        throw invalid_state_error("state radius must lie in [0, 1]");
    if (s.theta < 0.0 || s.theta > kPi + 1e-12)
        throw invalid_state_error("state theta must lie in [0, pi] radians");
    if (s.phi < 0.0 || s.phi >= kTwoPi)
        throw invalid_state_error("state phi must lie in [0, 2 pi) radians");
    return s;
}

BlochVector bloch_from_state_spec(const StateSpec& s) {
    return bloch(s.radius * std::sin(s.theta) * std::cos(s.phi),
                 s.radius * std::sin(s.theta) * std::sin(s.phi),
                 s.radius * std::cos(s.theta));
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    if (spec.count < 2) throw invalid_parameter_error("sweep count must be at least 2");
    if (spec.states.empty()) throw invalid_parameter_error("sweep needs at least one --state");
    const ChannelSpec base = parse_channel_spec(spec.channel);

    std::vector<SweepRow> rows;
    rows.reserve(spec.states.size() * static_cast<std::size_t>(spec.count));
    for (const StateSpec& st : spec.states) {
        const BlochVector input = bloch_from_state_spec(st);
        for (int i = 0; i < spec.count; ++i) {
            const double value = spec.start + (spec.stop - spec.start) *
                                                  static_cast<double>(i) / static_cast<double>(spec.count - 1);
            const AffineChannel ch = build_channel(with_parameter(base, spec.param_name, value));
            const BlochVector output = apply(ch, input);
            BlochVector first = input;
            if (spec.reference == ReferenceTransform::ideal_not)
                first = bloch(input.v.x, -input.v.y, -input.v.z);

            const ProcrustesResult pr = optimal_overlap(first, output);
            SweepRow row;
            row.param = value;
            row.r = first.v;
            row.rp = output.v;
            row.g_star = pr.g_star;
            row.fidelity = pr.g_star * pr.g_star;
            row.d_n = dn_from_overlap(pr.g_star);
            row.theta = pr.theta;
            row.axis = pr.axis;
            row.degenerate = pr.degenerate;
            rows.push_back(row);
        }
    }
    return rows;
}

const char* const kSweepCsvHeader =
    "param,r_x,r_y,r_z,rp_x,rp_y,rp_z,g_star,fidelity,d_n,theta,axis_x,axis_y,axis_z,degenerate";

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
    os << kSweepCsvHeader << '\n';
    for (const SweepRow& row : rows) {
        os << format_real(row.param) << ',' << format_real(row.r.x) << ',' << format_real(row.r.y) << ','
           << format_real(row.r.z) << ',' << format_real(row.rp.x) << ',' << format_real(row.rp.y) << ','
           << format_real(row.rp.z) << ',' << format_real(row.g_star) << ',' << format_real(row.fidelity)
           << ',' << format_real(row.d_n) << ',' << format_real(row.theta) << ',' << format_real(row.axis.x)
           << ',' << format_real(row.axis.y) << ',' << format_real(row.axis.z) << ','
           << (row.degenerate ? 1 : 0) << '\n';
    }
}

std::string format_pair_kv(const BlochVector& r, const BlochVector& s) {
    const MetricReport rep = metric_report(r, s);
    const ProcrustesResult pr = optimal_overlap(r, s);

    std::ostringstream os;
    os << "g_star " << format_real(rep.g_star) << '\n'
       << "fidelity " << format_real(rep.fidelity) << '\n'
       << "d_n " << format_real(rep.d_n) << '\n'
       << "bures " << format_real(rep.bures) << '\n'
       << "bures_angle " << format_real(rep.bures_angle) << '\n'
       << "root_infidelity " << format_real(rep.root_infidelity) << '\n'
       << "theta " << format_real(rep.theta) << '\n'
       << "degenerate " << (rep.degenerate ? 1 : 0) << '\n'
       << "axis_x " << format_real(pr.axis.x) << '\n'
       << "axis_y " << format_real(pr.axis.y) << '\n'
       << "axis_z " << format_real(pr.axis.z) << '\n'
       << "max_trace " << format_real(pr.max_trace) << '\n';
    for (int k = 0; k < 3; ++k)
        os << "sigma_" << k << ' ' << format_real(pr.singular_values[static_cast<std::size_t>(k)]) << '\n';
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            os << "s_star_" << i << j << ' ' << format_real(pr.s_star.m(i, j)) << '\n';
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            os << "u_star_" << i << j << "_re " << format_real(pr.u_star(i, j).real()) << '\n';
            os << "u_star_" << i << j << "_im " << format_real(pr.u_star(i, j).imag()) << '\n';
        }
    return os.str();
}

std::string format_pair_json(const BlochVector& r, const BlochVector& s) {
    const MetricReport rep = metric_report(r, s);
    const ProcrustesResult pr = optimal_overlap(r, s);

    nlohmann::json j;
    j["g_star"] = rep.g_star;
    j["fidelity"] = rep.fidelity;
    j["d_n"] = rep.d_n;
    j["bures"] = rep.bures;
    j["bures_angle"] = rep.bures_angle;
    j["root_infidelity"] = rep.root_infidelity;
    j["theta"] = rep.theta;
    j["degenerate"] = rep.degenerate;
    j["axis"] = {pr.axis.x, pr.axis.y, pr.axis.z};
    j["max_trace"] = pr.max_trace;
    j["singular_values"] = pr.singular_values;
    nlohmann::json srows = nlohmann::json::array();
    for (int i = 0; i < 3; ++i)
        srows.push_back({pr.s_star.m(i, 0), pr.s_star.m(i, 1), pr.s_star.m(i, 2)});
    j["s_star"] = srows;
    nlohmann::json urows = nlohmann::json::array();
    for (int i = 0; i < 2; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < 2; ++k)
            row.push_back({{"re", pr.u_star(i, k).real()}, {"im", pr.u_star(i, k).imag()}});
        urows.push_back(row);
    }
    j["u_star"] = urows;
    return j.dump(2) + "\n";
}

std::string format_channel_info(const AffineChannel& ch) {
    std::ostringstream os;
    os << "label " << ch.label << '\n';
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) os << "m_" << i << j << ' ' << format_real(ch.m(i, j)) << '\n';
    os << "c_x " << format_real(ch.c.x) << '\n'
       << "c_y " << format_real(ch.c.y) << '\n'
       << "c_z " << format_real(ch.c.z) << '\n';
    const bool unital = lin::norm(ch.c) < 1e-12;
    os << "unital " << (unital ? 1 : 0) << '\n';

    // Fixed points of m r + c restricted to the z axis: t m(:,2) + c = t z.
    constexpr double tol = 1e-12;
    const double a = ch.m(0, 2), b = ch.m(1, 2), d = ch.m(2, 2);
    if (std::abs(1.0 - d) > tol) {
        const double t = ch.c.z / (1.0 - d);
        const bool ok = std::abs(a * t + ch.c.x) <= tol && std::abs(b * t + ch.c.y) <= tol &&
                        std::abs(t) <= 1.0 + 1e-9;
        if (ok)
            os << "fixed_point_z " << format_real(t) << '\n';
        else
            os << "fixed_point_z none\n";
    } else if (std::abs(ch.c.z) <= tol && std::abs(a) <= tol && std::abs(b) <= tol &&
               std::abs(ch.c.x) <= tol && std::abs(ch.c.y) <= tol) {
        os << "fixed_point_z all\n";
    } else {
        os << "fixed_point_z none\n";
    }

    const double worst = ball_preservation_max_norm(ch);
    os << "ball_check_max_norm " << format_real(worst) << '\n'
       << "ball_check_pass " << (worst <= 1.0 + 1e-9 ? 1 : 0) << '\n';
    return os.str();
}

}  // namespace qalign
