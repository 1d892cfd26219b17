#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fsk {

// Base for domain failures that callers are expected to report, as opposed
// to programming errors (std::invalid_argument / std::out_of_range).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class InfeasibleLayout : public Error {
public:
    InfeasibleLayout(const std::string& inequality, const std::string& detail)
        : Error("infeasible layout: " + inequality + " violated (" + detail + ")"), inequality_(inequality) {}
    const std::string& inequality() const { return inequality_; }

private:
    std::string inequality_;
};

}  // namespace fsk
