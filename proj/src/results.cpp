#include "edgemarket/results.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "edgemarket/errors.hpp"

namespace edgemarket {

using nlohmann::json;

std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

namespace {

json outcome_to_json(const SetOutcome& outcome) {
    json j;
    j["server_id"] = outcome.server_id;
    j["status"] = to_string(outcome.status);
    j["set_size"] = outcome.set_size;
    j["bids"] = outcome.bids;
    if (outcome.winner_id) {
        j["winner_id"] = *outcome.winner_id;
    }
    j["revenue"] = outcome.revenue;
    return j;
}

SetOutcome outcome_from_json(const json& j) {
    SetOutcome outcome;
    outcome.server_id = j.at("server_id").get<std::uint32_t>();
    outcome.status = set_status_from_string(j.at("status").get<std::string>());
    outcome.set_size = j.at("set_size").get<std::size_t>();
    outcome.bids = j.at("bids").get<std::vector<double>>();
    if (j.contains("winner_id")) {
        outcome.winner_id = j.at("winner_id").get<std::uint32_t>();
    }
    outcome.revenue = j.at("revenue").get<double>();
    return outcome;
}

json point_to_json(const SweepPoint& point) {
    return json{
        {"servers", point.servers},
        {"mean_revenue", point.mean_revenue},
        {"stddev_revenue", point.stddev_revenue},
        {"trials", point.trials},
    };
}

SweepPoint point_from_json(const json& j) {
    SweepPoint point;
    point.servers = j.at("servers").get<int>();
    point.mean_revenue = j.at("mean_revenue").get<double>();
    point.stddev_revenue = j.at("stddev_revenue").get<double>();
    point.trials = j.at("trials").get<int>();
    return point;
}

}  // namespace

json to_json(const SimulateResult& result) {
    json j;
    j["kind"] = "simulate";
    j["config"] = result.config.to_json();
    j["master_seed"] = result.config.master_seed;
    j["n_users"] = result.config.population.n_users;
    j["servers"] = result.config.servers;
    j["total_revenue"] = result.total_revenue;
    auto& outcomes = j["outcomes"] = json::array();
    for (const auto& outcome : result.outcomes) {
        outcomes.push_back(outcome_to_json(outcome));
    }
    return j;
}

json to_json(const SweepRunResult& result) {
    json j;
    j["kind"] = "sweep";
    j["config"] = result.config.to_json();
    j["master_seed"] = result.config.master_seed;
    j["n_users"] = result.config.population.n_users;
    auto& points = j["points"] = json::array();
    for (const auto& point : result.points) {
        points.push_back(point_to_json(point));
    }
    j["fit"] = {
        {"degree", result.fit.degree()},
        {"coefficients", result.fit.coefficients},
        {"center", result.fit.center},
        {"scale", result.fit.scale},
        {"residual_norm", result.fit.residual_norm},
    };
    j["optimum"] = {
        {"servers", result.optimum.servers},
        {"ratio", result.optimum.ratio},
        {"fitted_revenue", result.optimum.fitted_revenue},
        {"endpoint", result.optimum.endpoint},
    };
    return j;
}

SimulateResult simulate_result_from_json(const json& j) {
    if (j.value("kind", "") != "simulate") {
        throw ConfigError("result: expected kind 'simulate'");
    }
    SimulateResult result;
    result.config = SimConfig::from_json(j.at("config"));
    result.total_revenue = j.at("total_revenue").get<double>();
    for (const auto& item : j.at("outcomes")) {
        result.outcomes.push_back(outcome_from_json(item));
    }
    return result;
}

SweepRunResult sweep_result_from_json(const json& j) {
    if (j.value("kind", "") != "sweep") {
        throw ConfigError("result: expected kind 'sweep'");
    }
    SweepRunResult result;
    result.config = SimConfig::from_json(j.at("config"));
    for (const auto& item : j.at("points")) {
        result.points.push_back(point_from_json(item));
    }
    const auto& fit = j.at("fit");
    result.fit.coefficients = fit.at("coefficients").get<std::vector<double>>();
    result.fit.center = fit.at("center").get<double>();
    result.fit.scale = fit.at("scale").get<double>();
    result.fit.residual_norm = fit.at("residual_norm").get<double>();
    const auto& optimum = j.at("optimum");
    result.optimum.servers = optimum.at("servers").get<int>();
    result.optimum.ratio = optimum.at("ratio").get<double>();
    result.optimum.fitted_revenue = optimum.at("fitted_revenue").get<double>();
    result.optimum.endpoint = optimum.at("endpoint").get<bool>();
    return result;
}

namespace {

std::string config_comment(const SimConfig& config) {
    return "# config: " + config.to_json().dump() + "\n";
}

}  // namespace

std::string to_csv(const SimulateResult& result) {
    std::string out = config_comment(result.config);
    out += "server_id,status,set_size,winner_id,revenue\n";
    for (const auto& o : result.outcomes) {
        out += std::to_string(o.server_id);
        out += ',';
        out += to_string(o.status);
        out += ',';
        out += std::to_string(o.set_size);
        out += ',';
        if (o.winner_id) out += std::to_string(*o.winner_id);
        out += ',';
        out += format_double(o.revenue);
        out += '\n';
    }
    return out;
}

std::string to_csv(const SweepRunResult& result) {
    std::string out = config_comment(result.config);
    out += "servers,mean_revenue,stddev_revenue,trials\n";
    for (const auto& p : result.points) {
        out += std::to_string(p.servers);
        out += ',';
        out += format_double(p.mean_revenue);
        out += ',';
        out += format_double(p.stddev_revenue);
        out += ',';
        out += std::to_string(p.trials);
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open output file for writing: " + path);
    }
    out << content;
    out.flush();
    if (!out) {
        throw IoError("failed writing output file: " + path);
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open file: " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

SweepRunResult load_sweep_result(const std::string& path) {
    const std::string text = read_text_file(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw IoError("corrupt result file " + path + ": " + e.what());
    }
    try {
        return sweep_result_from_json(j);
    } catch (const json::exception& e) {
        throw IoError("corrupt result file " + path + ": " + e.what());
    }
}

}  // namespace edgemarket
