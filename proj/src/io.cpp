#include "rsic/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace rsic {

Instance readInstance(std::istream& in) {
    std::vector<Job> jobs;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string a;
        std::string b;
        std::string c;
        std::string extra;
        if (!(fields >> a >> b >> c)) throw ParseError(lineNo, "expected three fields 'size start finish'");
        if (fields >> extra) throw ParseError(lineNo, "unexpected trailing field '" + extra + "'");
        try {
            jobs.push_back({Rational::parse(a), Rational::parse(b), Rational::parse(c)});
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineNo, e.what());
        }
    }
    return Instance(std::move(jobs));
}

Instance readInstanceFile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file " + path.string());
    return readInstance(in);
}

void writeInstance(std::ostream& out, const Instance& instance, const std::string& header) {
    if (!header.empty()) {
        std::istringstream lines(header);
        std::string line;
        while (std::getline(lines, line)) out << "# " << line << '\n';
    }
    for (const auto& job : instance.jobs()) out << job.size << ' ' << job.start << ' ' << job.finish << '\n';
}

void writeInstanceFile(const std::filesystem::path& path, const Instance& instance, const std::string& header) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write instance file " + path.string());
    writeInstance(out, instance, header);
}

nlohmann::ordered_json scheduleToJson(const Schedule& schedule) {
    nlohmann::ordered_json servers = nlohmann::ordered_json::array();
    for (const auto& server : schedule.servers()) {
        servers.push_back({{"id", server.id},
                           {"jobs", server.jobIndices},
                           {"open", server.openTime.str()},
                           {"close", server.closeTime.str()}});
    }
    return {{"servers", std::move(servers)}, {"cost", cost(schedule).str()}};
}

Schedule scheduleFromJson(const nlohmann::json& doc, std::shared_ptr<const Instance> instance) {
    if (!doc.contains("servers") || !doc["servers"].is_array()) {
        throw std::invalid_argument("schedule document has no 'servers' array");
    }
    std::vector<std::vector<std::size_t>> groups;
    for (const auto& server : doc["servers"]) {
        groups.push_back(server.at("jobs").get<std::vector<std::size_t>>());
    }
    return Schedule(std::move(instance), groups);
}

}  // namespace rsic
