#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vlclink {

/// Base class of everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scenario-file problems: malformed text, unknown/duplicate keys,
/// out-of-range parameter values, unreadable files. The CLI maps these
/// to exit code 2.
struct ScenarioError : Error {
    using Error::Error;
};

struct ParseError : ScenarioError {
    ParseError(int line_no, const std::string& reason)
        : ScenarioError("line " + std::to_string(line_no) + ": " + reason), line(line_no) {}
    int line;
};

struct UnknownKey : ScenarioError {
    UnknownKey(int line_no, const std::string& key)
        : ScenarioError("line " + std::to_string(line_no) + ": unknown key '" + key + "'"),
          line(line_no) {}
    int line;
};

struct DuplicateKey : ScenarioError {
    DuplicateKey(int line_no, const std::string& key)
        : ScenarioError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'"),
          line(line_no) {}
    int line;
};

struct DomainError : ScenarioError {
    using ScenarioError::ScenarioError;
};

struct IoError : ScenarioError {
    using ScenarioError::ScenarioError;
};

// Domain/numeric problems raised while computing. CLI exit code 3.

struct DegenerateLink : Error {
    using Error::Error;
};

struct InvalidCount : Error {
    using Error::Error;
};

struct InvalidResolution : Error {
    using Error::Error;
};

struct InvalidAngle : Error {
    using Error::Error;
};

struct InfiniteLoss : Error {
    using Error::Error;
};

struct ZeroSignal : Error {
    using Error::Error;
};

struct ZeroNoise : Error {
    using Error::Error;
};

struct InvalidSweepValue : Error {
    using Error::Error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

struct PositionOutOfRoom : Error {
    PositionOutOfRoom(std::size_t position_index)
        : Error("position " + std::to_string(position_index) + " is outside the room footprint"),
          index(position_index) {}
    std::size_t index;
};

}  // namespace vlclink
