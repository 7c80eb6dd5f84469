#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xde {

// All engine failures derive from Error; kind() is a stable machine-readable
// tag used by the CLI's structured error output.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& msg)
        : Error("SyntaxError", msg), offset_(offset), expected_(std::move(expected)) {}
    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

class UnsupportedConstruct : public Error {
public:
    explicit UnsupportedConstruct(const std::string& msg) : Error("UnsupportedConstruct", msg) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error("DomainError", msg) {}
};

class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& msg) : Error("OverflowError", msg) {}
};

class UnsupportedIntegral : public Error {
public:
    explicit UnsupportedIntegral(const std::string& msg) : Error("UnsupportedIntegral", msg) {}
};

class NotExact : public Error {
public:
    explicit NotExact(const std::string& msg) : Error("NotExact", msg) {}
};

class NotHarmonicAdmissible : public Error {
public:
    explicit NotHarmonicAdmissible(const std::string& msg)
        : Error("NotHarmonicAdmissible", msg) {}
};

class IntegrandDependsOnY : public Error {
public:
    explicit IntegrandDependsOnY(const std::string& msg) : Error("IntegrandDependsOnY", msg) {}
};

class DegeneratePoint : public Error {
public:
    explicit DegeneratePoint(const std::string& msg) : Error("DegeneratePoint", msg) {}
};

class DegenerateSeed : public Error {
public:
    explicit DegenerateSeed(const std::string& msg) : Error("DegenerateSeed", msg) {}
};

} // namespace xde
