#include "kcenter/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace kcenter {

using nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string instance_to_json(const Instance& inst) {
    json customers = json::array();
    for (const Point& p : inst.customers) customers.push_back({p.x, p.y});
    json doc;
    doc["k"] = inst.k;
    doc["customers"] = std::move(customers);
    return doc.dump();
}

Instance instance_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("instance document must be an object");
    if (!doc.contains("k")) throw ParseError("missing field \"k\"");
    if (!doc["k"].is_number_integer()) throw ParseError("field \"k\" must be an integer");
    if (!doc.contains("customers")) throw ParseError("missing field \"customers\"");
    if (!doc["customers"].is_array() || doc["customers"].empty())
        throw ParseError("field \"customers\" must be a non-empty array");

    std::vector<Point> customers;
    customers.reserve(doc["customers"].size());
    for (const auto& entry : doc["customers"]) {
        if (!entry.is_array() || entry.size() != 2 ||
            !entry[0].is_number() || !entry[1].is_number())
            throw ParseError("field \"customers\" entries must be [x, y] number pairs");
        customers.push_back(Point{entry[0].get<double>(), entry[1].get<double>()});
    }
    const int k = doc["k"].get<int>();
    if (k < 1 || k > static_cast<int>(customers.size()))
        throw ParseError("field \"k\" must satisfy 1 <= k <= number of customers");
    try {
        return Instance(std::move(customers), k);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Instance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return instance_from_json(ss.str());
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
    write_file(path, instance_to_json(inst) + "\n");
}

std::string solution_to_json(const Instance& inst, const Solution& sol,
                             const SolveTrace& trace) {
    json doc;
    doc["centers"] = sol.centers;
    json coords = json::array();
    for (int c : sol.centers) {
        const Point& p = inst.customers.at(static_cast<size_t>(c));
        coords.push_back({p.x, p.y});
    }
    doc["center_coordinates"] = std::move(coords);
    doc["objective"] = sol.objective;
    json stages = json::array();
    for (const auto& [label, d] : trace.stage_objectives)
        stages.push_back({{"stage", label}, {"objective", d}});
    doc["trace"] = {{"stages", std::move(stages)}, {"iterations", trace.iterations}};
    return doc.dump(2);
}

Solution solution_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("centers") || !doc["centers"].is_array())
        throw ParseError("missing field \"centers\"");
    if (!doc.contains("objective") || !doc["objective"].is_number())
        throw ParseError("missing field \"objective\"");
    Solution sol;
    for (const auto& c : doc["centers"]) {
        if (!c.is_number_integer()) throw ParseError("field \"centers\" must hold integers");
        sol.centers.push_back(c.get<int>());
    }
    sol.objective = doc["objective"].get<double>();
    return sol;
}

Solution load_solution(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open solution file: " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return solution_from_json(ss.str());
}

std::string records_csv(const std::vector<ComparisonRecord>& records,
                        const std::string& setup_label) {
    std::string out = "instance_id,setup_label,challenger,challenged,"
                      "d_challenger,d_challenged,delta_d\n";
    for (const ComparisonRecord& r : records) {
        out += r.instance_id;
        out += ',';
        out += setup_label;
        out += ',';
        out += solver_name(r.challenger);
        out += ',';
        out += solver_name(r.challenged);
        out += ',';
        out += format_double(r.d_challenger);
        out += ',';
        out += format_double(r.d_challenged);
        out += ',';
        out += format_double(r.delta_d);
        out += '\n';
    }
    return out;
}

std::string summary_csv(const CampaignSummary& summary) {
    std::string out = "setup,challenger,mean_delta_d,min_delta_d,max_delta_d,instances\n";
    for (const ChallengerSummary& c : summary.per_challenger) {
        out += summary.setup.label;
        out += ',';
        out += solver_name(c.challenger);
        out += ',';
        out += format_double(c.mean_delta);
        out += ',';
        out += format_double(c.min_delta);
        out += ',';
        out += format_double(c.max_delta);
        out += ',';
        out += std::to_string(c.count);
        out += '\n';
    }
    return out;
}

std::string geometry_csv(const Instance& inst, const Solution& sol) {
    for (int c : sol.centers) {
        if (c < 0 || c >= inst.size())
            throw ParseError("solution center index out of range for instance");
    }
    const Assignment a = assign(inst, sol.centers);
    std::string out = "kind,index,x,y,owner,owner_x,owner_y,dist\n";
    for (int c : sol.centers) {
        const Point& p = inst.customers[static_cast<size_t>(c)];
        out += "center," + std::to_string(c) + ',' + format_double(p.x) + ',' +
               format_double(p.y) + ",,,,\n";
    }
    for (int v = 0; v < inst.size(); ++v) {
        const Point& p = inst.customers[static_cast<size_t>(v)];
        const int owner = a.owner[static_cast<size_t>(v)];
        const Point& op = inst.customers[static_cast<size_t>(owner)];
        out += "customer," + std::to_string(v) + ',' + format_double(p.x) + ',' +
               format_double(p.y) + ',' + std::to_string(owner) + ',' +
               format_double(op.x) + ',' + format_double(op.y) + ',' +
               format_double(a.dist[static_cast<size_t>(v)]) + '\n';
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << content;
}

} // namespace kcenter
