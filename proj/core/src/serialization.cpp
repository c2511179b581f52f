#include "qcorr/serialization.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "qcorr/errors.hpp"

namespace qcorr {

using nlohmann::json;

namespace {

json setting_to_json_obj(const MeasurementSetting& s) {
    return json{{"theta", s.theta}, {"phi", s.phi}};
}

json report_to_json_obj(const CorrelationReport& r) {
    return json{{"negativity", r.negativity},
                {"mutualInformation", r.mutual_information},
                {"classical", r.classical},
                {"discord", r.discord},
                {"optimalSetting", setting_to_json_obj(r.optimal_setting)},
                {"optimizerEvals", r.optimizer_evaluations}};
}

json summary_to_json_obj(const PhenomenonSummary& s) {
    json j;
    j["suddenDeathTime"] = s.sudden_death_time ? json(*s.sudden_death_time) : json(nullptr);
    j["discordClass"] = to_string(s.discord_class);
    j["frozenUntil"] = s.frozen_until ? json(*s.frozen_until) : json(nullptr);
    j["asymptoticDiscord"] = s.asymptotic_discord;
    return j;
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string density_matrix_to_json(const DensityMatrix& rho) {
    const ComplexMatrix& m = rho.matrix();
    json re = json::array();
    json im = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json re_row = json::array();
        json im_row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            re_row.push_back(m(r, c).real());
            im_row.push_back(m(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    json j{{"dimA", rho.index().dim_a}, {"dimB", rho.index().dim_b},
           {"re", std::move(re)}, {"im", std::move(im)}};
    return j.dump();
}

DensityMatrix density_matrix_from_json(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error("state JSON: parse failure");
    try {
        const BipartiteIndex idx{j.at("dimA").get<std::size_t>(), j.at("dimB").get<std::size_t>()};
        const auto& re = j.at("re");
        const auto& im = j.at("im");
        const std::size_t d = idx.dim();
        if (re.size() != d || im.size() != d) {
            throw DimensionMismatch("state JSON: matrix does not match dimA*dimB");
        }
        ComplexMatrix m(d, d);
        for (std::size_t r = 0; r < d; ++r) {
            if (re[r].size() != d || im[r].size() != d) {
                throw DimensionMismatch("state JSON: ragged matrix rows");
            }
            for (std::size_t c = 0; c < d; ++c) {
                m(r, c) = Complex{re[r][c].get<double>(), im[r][c].get<double>()};
            }
        }
        return validate(std::move(m), idx);
    } catch (const json::exception& e) {
        throw Error(std::string("state JSON: ") + e.what());
    }
}

std::string report_to_json(const CorrelationReport& report) {
    return report_to_json_obj(report).dump();
}

std::string trajectory_to_json(const Trajectory& tr) {
    json points = json::array();
    for (const TrajectoryPoint& pt : tr.points) {
        points.push_back(json{{"gammaT", pt.gamma_t}, {"report", report_to_json_obj(pt.report)}});
    }
    json j{{"config",
            json{{"p", tr.config.p.value()},
                 {"gammaT", tr.config.gamma_t},
                 {"optimizer",
                  json{{"coarseGridTheta", tr.config.optimizer.coarse_grid_theta},
                       {"coarseGridPhi", tr.config.optimizer.coarse_grid_phi},
                       {"refineIterations", tr.config.optimizer.refine_iterations},
                       {"refineTolerance", tr.config.optimizer.refine_tolerance}}}}},
           {"points", std::move(points)}};
    return j.dump();
}

std::string summary_to_json(const PhenomenonSummary& summary) {
    return summary_to_json_obj(summary).dump();
}

std::string sweep_to_json(const std::vector<std::pair<double, PhenomenonSummary>>& rows) {
    json j = json::array();
    for (const auto& [p, summary] : rows) {
        j.push_back(json{{"p", p}, {"summary", summary_to_json_obj(summary)}});
    }
    return j.dump();
}

std::string trajectory_to_csv(const Trajectory& tr) {
    std::string out = "gamma_t,negativity,mutual_info,classical,discord,theta_opt,phi_opt\n";
    for (const TrajectoryPoint& pt : tr.points) {
        const CorrelationReport& r = pt.report;
        out += format_double(pt.gamma_t);
        out += ',';
        out += format_double(r.negativity);
        out += ',';
        out += format_double(r.mutual_information);
        out += ',';
        out += format_double(r.classical);
        out += ',';
        out += format_double(r.discord);
        out += ',';
        out += format_double(r.optimal_setting.theta);
        out += ',';
        out += format_double(r.optimal_setting.phi);
        out += '\n';
    }
    return out;
}

std::string sweep_to_csv(const std::vector<std::pair<double, PhenomenonSummary>>& rows) {
    std::string out = "p,sudden_death_time,discord_class,asymptotic_discord\n";
    for (const auto& [p, summary] : rows) {
        out += format_double(p);
        out += ',';
        if (summary.sudden_death_time) out += format_double(*summary.sudden_death_time);
        out += ',';
        out += to_string(summary.discord_class);
        out += ',';
        out += format_double(summary.asymptotic_discord);
        out += '\n';
    }
    return out;
}

std::vector<TrajectoryCsvRow> parse_trajectory_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) ||
        line != "gamma_t,negativity,mutual_info,classical,discord,theta_opt,phi_opt") {
        throw Error("trajectory CSV: missing or unexpected header");
    }
    std::vector<TrajectoryCsvRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        TrajectoryCsvRow row{};
        double* fields[7] = {&row.gamma_t, &row.negativity, &row.mutual_info, &row.classical,
                             &row.discord, &row.theta_opt, &row.phi_opt};
        std::istringstream ls(line);
        std::string cell;
        for (int f = 0; f < 7; ++f) {
            if (!std::getline(ls, cell, ',')) {
                throw Error("trajectory CSV: short row");
            }
            try {
                *fields[f] = std::stod(cell);
            } catch (const std::exception&) {
                throw Error("trajectory CSV: non-numeric cell");
            }
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace qcorr
