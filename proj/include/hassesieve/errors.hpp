#pragma once

#include <stdexcept>
#include <string>

namespace hassesieve {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A search ran out of its configured budget. Carries how far we got.
struct budget_error : error {
    explicit budget_error(const std::string& what) : error(what) {}
};

/// A question the engine refuses to answer rather than guess
/// (fundamental-unit chain too long, principality walk truncated, ...).
struct undecided_error : error {
    explicit undecided_error(const std::string& what) : error(what) {}
};

/// A named hypothesis of one of the construction theorems failed.
struct hypothesis_error : error {
    explicit hypothesis_error(const std::string& what) : error(what) {}
};

/// Malformed certificate document or CLI input file.
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

/// Arguments outside an operation's stated domain.
struct domain_error : error {
    explicit domain_error(const std::string& what) : error(what) {}
};

} // namespace hassesieve
