#pragma once

#include "liecomp/io.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace liecomp::cli {

enum class OutputFormat { text, json };

// Ordered report: text lines for humans and the same facts as fields of
// one JSON document.
class Report {
public:
    void field(const std::string& key, Json value) { doc_[key] = std::move(value); }
    void line(std::string text) { lines_.push_back(std::move(text)); }
    void fail() { ok_ = false; }
    bool ok() const { return ok_; }
    bool empty() const { return lines_.empty() && doc_.empty(); }
    const Json& document() const { return doc_; }
    const std::vector<std::string>& lines() const { return lines_; }

private:
    Json doc_ = Json::object();
    std::vector<std::string> lines_;
    bool ok_ = true;
};

std::string emit_report(const Report& report, OutputFormat format);

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace liecomp::cli
