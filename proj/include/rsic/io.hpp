#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rsic/model.hpp"

namespace rsic {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Instance text format: one job per line, "size start finish", each field an
// integer or p/q. Blank lines and lines starting with '#' are skipped.
[[nodiscard]] Instance readInstance(std::istream& in);
[[nodiscard]] Instance readInstanceFile(const std::filesystem::path& path);
void writeInstance(std::ostream& out, const Instance& instance, const std::string& header = {});
void writeInstanceFile(const std::filesystem::path& path, const Instance& instance, const std::string& header = {});

[[nodiscard]] nlohmann::ordered_json scheduleToJson(const Schedule& schedule);
/// Inverse of scheduleToJson; open/close fields are recomputed from the instance.
[[nodiscard]] Schedule scheduleFromJson(const nlohmann::json& doc, std::shared_ptr<const Instance> instance);

}  // namespace rsic
