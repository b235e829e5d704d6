#ifndef VERBPROBE_ERRORS_HPP
#define VERBPROBE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace verbprobe {

// Failure while reading an input resource (missing file, bad directory).
class LoadError : public std::runtime_error {
public:
    explicit LoadError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed content in an otherwise readable input.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Contract violation in library usage (bad argument, degenerate input).
class InvalidArgument : public std::invalid_argument {
public:
    explicit InvalidArgument(const std::string& msg) : std::invalid_argument(msg) {}
};

// Non-fatal findings collected during loading or processing.
// Callers decide whether to print them, persist them, or ignore them.
class WarningLog {
public:
    void add(std::string msg) { messages_.push_back(std::move(msg)); }
    const std::vector<std::string>& messages() const { return messages_; }
    bool empty() const { return messages_.empty(); }
    std::size_t size() const { return messages_.size(); }

private:
    std::vector<std::string> messages_;
};

} // namespace verbprobe

#endif
